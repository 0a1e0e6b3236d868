//! PGammaL(2,q) as semilinear fractional maps and its subgroups
//! PSL(2,q) <= PGL(2,q), M(q) <= PGammaL(2,q).
//!
//! A [`Moebius`] is a pair `(A, j)` acting as `λ -> (a λ^(p^j) + b) / (c λ^(p^j) + d)`.
//! Composition is `(A, j)(B, k) = (A B^(p^j), j + k)` with `B^(p^j)` taken
//! entrywise. The matrix is kept scaled so its first nonzero entry is 1, so
//! equal maps have equal representations.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::geometry::{Pair, ProjLine, ProjPoint1, ProjPoint2};

/// The four groups between PSL(2,q) and PGammaL(2,q).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupId {
    Pgl,
    Psl,
    /// The twisted sharply 3-transitive group; needs `q = p^(2f)`.
    M,
    PGammaL,
}

impl GroupId {
    pub const ALL: [GroupId; 4] = [GroupId::Pgl, GroupId::Psl, GroupId::M, GroupId::PGammaL];

    pub fn name(self) -> &'static str {
        match self {
            GroupId::Pgl => "PGL(2,q)",
            GroupId::Psl => "PSL(2,q)",
            GroupId::M => "M(q)",
            GroupId::PGammaL => "PGammaL(2,q)",
        }
    }

    /// Short lowercase token used on the command line and in exports.
    pub fn token(self) -> &'static str {
        match self {
            GroupId::Pgl => "pgl",
            GroupId::Psl => "psl",
            GroupId::M => "m",
            GroupId::PGammaL => "pgammal",
        }
    }

    pub fn from_token(s: &str) -> Option<Self> {
        GroupId::ALL.into_iter().find(|g| g.token() == s)
    }

    pub fn is_defined_for(self, f: &Field) -> bool {
        self != GroupId::M || f.m().is_multiple_of(2)
    }

    fn check(self, f: &Field) -> Result<()> {
        if self.is_defined_for(f) {
            Ok(())
        } else {
            Err(Error::InvalidGroup(self))
        }
    }

    /// Group order as a function of `q = p^m`.
    pub fn order(self, q: u64, m: u32) -> u64 {
        let pgl = q * q * q - q;
        match self {
            GroupId::Pgl | GroupId::M => pgl,
            GroupId::Psl => pgl / 2,
            GroupId::PGammaL => pgl * m as u64,
        }
    }

    /// Frobenius exponents occurring in the group.
    fn layers(self, f: &Field) -> Vec<u32> {
        match self {
            GroupId::Pgl | GroupId::Psl => vec![0],
            GroupId::M => vec![0, f.m() / 2],
            GroupId::PGammaL => (0..f.m()).collect(),
        }
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An element of PGammaL(2,q).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Moebius {
    frob: u32,
    mat: [Fe; 4],
}

fn det2(f: &Field, m: [Fe; 4]) -> Fe {
    f.sub(f.mul(m[0], m[3]), f.mul(m[1], m[2]))
}

fn normalize4(f: &Field, m: [Fe; 4]) -> [Fe; 4] {
    let lead = m.iter().copied().find(|x| !x.is_zero()).expect("nonsingular");
    if lead == Fe::ONE {
        return m;
    }
    let s = f.inv_nz(lead);
    m.map(|x| f.mul(x, s))
}

impl Moebius {
    /// `λ -> (a λ^(p^j) + b) / (c λ^(p^j) + d)`; `j` is read modulo `m`.
    pub fn new(f: &Field, mat: [Fe; 4], j: u32) -> Result<Self> {
        if det2(f, mat).is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(Moebius { frob: j % f.m(), mat: normalize4(f, mat) })
    }

    pub fn identity() -> Self {
        Moebius { frob: 0, mat: [Fe::ONE, Fe::ZERO, Fe::ZERO, Fe::ONE] }
    }

    /// `λ -> e λ^(p^j)`
    pub fn scaling(f: &Field, e: Fe, j: u32) -> Result<Self> {
        Self::new(f, [e, Fe::ZERO, Fe::ZERO, Fe::ONE], j)
    }

    /// `λ -> e / λ^(p^j)`
    pub fn inversion(f: &Field, e: Fe, j: u32) -> Result<Self> {
        Self::new(f, [Fe::ZERO, e, Fe::ONE, Fe::ZERO], j)
    }

    /// `λ -> λ + t`
    pub fn translation(f: &Field, t: Fe) -> Self {
        Self::new(f, [Fe::ONE, t, Fe::ZERO, Fe::ONE], 0).expect("unimodular")
    }

    pub fn matrix(&self) -> [Fe; 4] {
        self.mat
    }

    pub fn frobenius_exponent(&self) -> u32 {
        self.frob
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// Determinant of the normalized matrix; only its square class is intrinsic.
    pub fn det(&self, f: &Field) -> Fe {
        det2(f, self.mat)
    }

    pub fn det_is_square(&self, f: &Field) -> bool {
        f.quadratic_character(self.det(f)) == 1
    }

    #[inline]
    pub fn apply(&self, f: &Field, x: ProjPoint1) -> ProjPoint1 {
        let [a, b, c, d] = self.mat;
        match x {
            ProjPoint1::Infinity => {
                if c.is_zero() {
                    ProjPoint1::Infinity
                } else {
                    ProjPoint1::Finite(f.mul(a, f.inv_nz(c)))
                }
            }
            ProjPoint1::Finite(lambda) => {
                let mu = f.frobenius(lambda, self.frob);
                let den = f.add(f.mul(c, mu), d);
                if den.is_zero() {
                    ProjPoint1::Infinity
                } else {
                    let num = f.add(f.mul(a, mu), b);
                    ProjPoint1::Finite(f.mul(num, f.inv_nz(den)))
                }
            }
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, f: &Field, other: &Moebius) -> Moebius {
        let [a, b, c, d] = self.mat;
        let [e, g, h, k] = other.mat.map(|x| f.frobenius(x, self.frob));
        let mat = [
            f.add(f.mul(a, e), f.mul(b, h)),
            f.add(f.mul(a, g), f.mul(b, k)),
            f.add(f.mul(c, e), f.mul(d, h)),
            f.add(f.mul(c, g), f.mul(d, k)),
        ];
        Moebius { frob: (self.frob + other.frob) % f.m(), mat: normalize4(f, mat) }
    }

    pub fn inverse(&self, f: &Field) -> Moebius {
        let k = (f.m() - self.frob) % f.m();
        let [a, b, c, d] = self.mat.map(|x| f.frobenius(x, k));
        // adjugate of the twisted matrix
        let mat = [d, f.neg(b), f.neg(c), a];
        Moebius { frob: k, mat: normalize4(f, mat) }
    }

    /// Membership in `group`; asking about M(q) for odd `m` is an error.
    pub fn is_member(&self, f: &Field, group: GroupId) -> Result<bool> {
        group.check(f)?;
        let square = self.det_is_square(f);
        Ok(match group {
            GroupId::Pgl => self.frob == 0,
            GroupId::Psl => self.frob == 0 && square,
            GroupId::M => (self.frob == 0 && square) || (self.frob == f.m() / 2 && !square),
            GroupId::PGammaL => true,
        })
    }

    /// Image of every point of PG(1,q), indexed as in [`ProjPoint1::index`].
    pub fn line_permutation(&self, f: &Field) -> Vec<u32> {
        let q = f.q();
        (0..=q as usize).map(|i| self.apply(f, ProjPoint1::from_index(i, q)).index(q) as u32).collect()
    }
}

/// A generating set for `group`.
pub fn generators(f: &Field, group: GroupId) -> Result<Vec<Moebius>> {
    group.check(f)?;
    let g = f.primitive_element();
    let one = Moebius::translation(f, Fe::ONE);
    let mut gens = match group {
        GroupId::Pgl | GroupId::PGammaL => vec![one, Moebius::scaling(f, g, 0)?, Moebius::inversion(f, Fe::ONE, 0)?],
        GroupId::Psl | GroupId::M => {
            vec![one, Moebius::scaling(f, f.mul(g, g), 0)?, Moebius::inversion(f, f.neg(Fe::ONE), 0)?]
        }
    };
    match group {
        GroupId::M => gens.push(Moebius::scaling(f, g, f.involution_exponent()?)?),
        GroupId::PGammaL if f.m() > 1 => gens.push(Moebius::scaling(f, Fe::ONE, 1)?),
        _ => {}
    }
    Ok(gens)
}

/// Every element of `group`, by brute force over normalized matrices.
pub fn elements(f: &Field, group: GroupId) -> Result<Vec<Moebius>> {
    group.check(f)?;
    let mut out = Vec::new();
    for j in group.layers(f) {
        for a in [Fe::ZERO, Fe::ONE] {
            let bs: Vec<Fe> = if a.is_zero() { vec![Fe::ONE] } else { f.elements().collect() };
            for &b in &bs {
                for c in f.elements() {
                    for d in f.elements() {
                        if let Ok(g) = Moebius::new(f, [a, b, c, d], j) {
                            if g.is_member(f, group)? {
                                out.push(g);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The setwise stabilizer of `{0, ∞}` in `group`.
///
/// Listed in a fixed order: by Frobenius exponent, then the maps
/// `λ -> e λ^(p^j)` before `λ -> e / λ^(p^j)`, then by `e`. The identity
/// comes first.
pub fn base_pair_stabilizer(f: &Field, group: GroupId) -> Result<Vec<Moebius>> {
    group.check(f)?;
    let mut out = Vec::new();
    for j in group.layers(f) {
        for e in f.nonzero() {
            let g = Moebius::scaling(f, e, j)?;
            if g.is_member(f, group)? {
                out.push(g);
            }
        }
        for e in f.nonzero() {
            let g = Moebius::inversion(f, e, j)?;
            if g.is_member(f, group)? {
                out.push(g);
            }
        }
    }
    Ok(out)
}

/// Precomputed transporters: for each pair, an element of the group
/// mapping it onto `{0, ∞}`.
#[derive(Debug, Clone)]
pub struct Transporter {
    group: GroupId,
    corrections: Vec<Moebius>,
}

impl Transporter {
    pub fn new(f: &Field, group: GroupId) -> Result<Self> {
        group.check(f)?;
        Ok(Transporter { group, corrections: base_pair_stabilizer(f, GroupId::PGammaL)? })
    }

    /// `λ -> (λ - α)/(λ - β)` (or `λ - α` when `β = ∞`), followed by the first
    /// stabilizer element of PGammaL that lands the product in the group.
    pub fn to_base(&self, f: &Field, pair: Pair) -> Moebius {
        let alpha = pair.lo().finite().expect("lo is finite");
        let h = match pair.hi() {
            ProjPoint1::Infinity => Moebius::translation(f, f.neg(alpha)),
            ProjPoint1::Finite(beta) => {
                Moebius::new(f, [Fe::ONE, f.neg(alpha), Fe::ONE, f.neg(beta)], 0).expect("alpha != beta")
            }
        };
        self.corrections
            .iter()
            .map(|c| c.compose(f, &h))
            .find(|g| g.is_member(f, self.group).expect("group checked"))
            .expect("every group here is transitive on pairs")
    }
}

/// An element of the group mapping `pair` onto `{0, ∞}`.
pub fn transporter_to_base(f: &Field, pair: Pair, group: GroupId) -> Result<Moebius> {
    Ok(Transporter::new(f, group)?.to_base(f, pair))
}

/// A semilinear map of PG(2,q): `x -> M x^(p^j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Semilinear3 {
    mat: [[Fe; 3]; 3],
    frob: u32,
    /// Cofactor matrix: lines transform by it.
    cof: [[Fe; 3]; 3],
}

fn cofactors(f: &Field, m: &[[Fe; 3]; 3]) -> [[Fe; 3]; 3] {
    let mut c = [[Fe::ZERO; 3]; 3];
    for (i, row) in c.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            let (r0, r1) = ((i + 1) % 3, (i + 2) % 3);
            let (c0, c1) = ((j + 1) % 3, (j + 2) % 3);
            *entry = f.sub(f.mul(m[r0][c0], m[r1][c1]), f.mul(m[r0][c1], m[r1][c0]));
        }
    }
    c
}

impl Semilinear3 {
    pub fn new(f: &Field, mat: [[Fe; 3]; 3], j: u32) -> Result<Self> {
        let s = Semilinear3 { mat, frob: j % f.m(), cof: cofactors(f, &mat) };
        if s.det(f).is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(s)
    }

    pub fn matrix(&self) -> [[Fe; 3]; 3] {
        self.mat
    }

    pub fn frobenius_exponent(&self) -> u32 {
        self.frob
    }

    pub fn det(&self, f: &Field) -> Fe {
        (0..3).fold(Fe::ZERO, |acc, j| f.add(acc, f.mul(self.mat[0][j], self.cof[0][j])))
    }

    /// `M v^(p^j)` on a raw vector.
    pub fn apply_vector(&self, f: &Field, v: [Fe; 3]) -> [Fe; 3] {
        let v = v.map(|x| f.frobenius(x, self.frob));
        self.mat.map(|row| f.add(f.add(f.mul(row[0], v[0]), f.mul(row[1], v[1])), f.mul(row[2], v[2])))
    }

    pub fn apply_point(&self, f: &Field, p: ProjPoint2) -> ProjPoint2 {
        ProjPoint2::new(f, self.apply_vector(f, p.coords())).expect("invertible")
    }

    /// Image of a line: dual coordinates move by the cofactor matrix.
    pub fn apply_line(&self, f: &Field, l: ProjLine) -> ProjLine {
        let a = l.coords().map(|x| f.frobenius(x, self.frob));
        let image = self.cof.map(|row| f.add(f.add(f.mul(row[0], a[0]), f.mul(row[1], a[1])), f.mul(row[2], a[2])));
        ProjLine::new(f, image).expect("invertible")
    }

    /// `self ∘ other`
    pub fn compose(&self, f: &Field, other: &Semilinear3) -> Semilinear3 {
        let b = other.mat.map(|row| row.map(|x| f.frobenius(x, self.frob)));
        let mut mat = [[Fe::ZERO; 3]; 3];
        for (i, row) in mat.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = (0..3).fold(Fe::ZERO, |acc, k| f.add(acc, f.mul(self.mat[i][k], b[k][j])));
            }
        }
        Semilinear3::new(f, mat, self.frob + other.frob).expect("product of invertibles")
    }

    /// Equality as projective semilinear maps (matrices up to a scalar).
    pub fn projectively_equal(&self, f: &Field, other: &Semilinear3) -> bool {
        if self.frob != other.frob {
            return false;
        }
        let flat = |m: &[[Fe; 3]; 3]| -> [Fe; 9] {
            let mut out = [Fe::ZERO; 9];
            for i in 0..9 {
                out[i] = m[i / 3][i % 3];
            }
            out
        };
        let (a, b) = (flat(&self.mat), flat(&other.mat));
        let k = a.iter().position(|x| !x.is_zero()).expect("invertible");
        if b[k].is_zero() {
            return false;
        }
        let s = f.mul(b[k], f.inv_nz(a[k]));
        a.iter().zip(b.iter()).all(|(&x, &y)| f.mul(x, s) == y)
    }
}

/// `ρ(A) = [[a², 2ab, b²], [ac, ad+bc, bd], [c², 2cd, d²]]` with the same
/// Frobenius exponent.
pub fn embed_rho(f: &Field, g: &Moebius) -> Semilinear3 {
    let [a, b, c, d] = g.mat;
    let two = f.two();
    let mat = [
        [f.mul(a, a), f.mul(two, f.mul(a, b)), f.mul(b, b)],
        [f.mul(a, c), f.add(f.mul(a, d), f.mul(b, c)), f.mul(b, d)],
        [f.mul(c, c), f.mul(two, f.mul(c, d)), f.mul(d, d)],
    ];
    Semilinear3::new(f, mat, g.frob).expect("det ρ(A) = det(A)^3 != 0")
}
