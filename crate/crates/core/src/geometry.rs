//! PG(1,q) and PG(2,q) with the conic `Q(x) = x1^2 - x0 x2`.
//!
//! Homogeneous triples are normalized so the first nonzero coordinate is 1.
//! Points and lines of PG(2,q) share one indexing: `(0:0:1)` is 0, `(0:1:b)`
//! is `1 + b`, `(1:a:b)` is `1 + q + a q + b`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{Fe, Field};

/// A point of PG(1,q) = GF(q) ∪ {∞}. `Finite` sorts before `Infinity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ProjPoint1 {
    Finite(Fe),
    Infinity,
}

impl ProjPoint1 {
    /// `0..q` for finite points, `q` for ∞.
    #[inline]
    pub fn index(self, q: u32) -> usize {
        match self {
            ProjPoint1::Finite(x) => x.index(),
            ProjPoint1::Infinity => q as usize,
        }
    }

    pub fn from_index(i: usize, q: u32) -> Self {
        if i == q as usize {
            ProjPoint1::Infinity
        } else {
            ProjPoint1::Finite(Fe::from_index(i))
        }
    }

    pub fn finite(self) -> Option<Fe> {
        match self {
            ProjPoint1::Finite(x) => Some(x),
            ProjPoint1::Infinity => None,
        }
    }

    /// Homogeneous coordinates `(x : 1)` or `(1 : 0)`.
    pub fn homogeneous(self) -> [Fe; 2] {
        match self {
            ProjPoint1::Finite(x) => [x, Fe::ONE],
            ProjPoint1::Infinity => [Fe::ONE, Fe::ZERO],
        }
    }

    pub fn from_homogeneous(f: &Field, v: [Fe; 2]) -> Result<Self> {
        match (v[0].is_zero(), v[1].is_zero()) {
            (true, true) => Err(Error::ZeroVector),
            (_, true) => Ok(ProjPoint1::Infinity),
            _ => Ok(ProjPoint1::Finite(f.mul(v[0], f.inv_nz(v[1])))),
        }
    }
}

/// All points of PG(1,q) in canonical order.
pub fn line_points(f: &Field) -> impl Iterator<Item = ProjPoint1> + '_ {
    f.elements().map(ProjPoint1::Finite).chain(core::iter::once(ProjPoint1::Infinity))
}

/// An unordered pair of distinct points of PG(1,q), stored with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pair {
    lo: ProjPoint1,
    hi: ProjPoint1,
}

impl Pair {
    pub fn new(a: ProjPoint1, b: ProjPoint1) -> Result<Self> {
        match a.cmp(&b) {
            core::cmp::Ordering::Less => Ok(Pair { lo: a, hi: b }),
            core::cmp::Ordering::Greater => Ok(Pair { lo: b, hi: a }),
            core::cmp::Ordering::Equal => Err(Error::DegeneratePair),
        }
    }

    /// The base pair `{0, ∞}`.
    pub fn base() -> Self {
        Pair { lo: ProjPoint1::Finite(Fe::ZERO), hi: ProjPoint1::Infinity }
    }

    pub fn lo(self) -> ProjPoint1 {
        self.lo
    }

    pub fn hi(self) -> ProjPoint1 {
        self.hi
    }

    pub fn contains(self, x: ProjPoint1) -> bool {
        self.lo == x || self.hi == x
    }

    /// Position in lexicographic order of `(lo, hi)`.
    #[inline]
    pub fn index(self, q: u32) -> usize {
        pair_index(self.lo.index(q), self.hi.index(q), q)
    }

    pub fn from_index(i: usize, q: u32) -> Self {
        let n = q as usize + 1;
        let mut a = 0;
        let mut start = 0;
        while start + (n - a - 1) <= i {
            start += n - a - 1;
            a += 1;
        }
        let b = a + 1 + (i - start);
        Pair { lo: ProjPoint1::from_index(a, q), hi: ProjPoint1::from_index(b, q) }
    }
}

/// Index of the pair of PG(1,q)-indices `{a, b}`, `a != b`.
#[inline]
pub fn pair_index(a: usize, b: usize, q: u32) -> usize {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    let n = q as usize + 1;
    a * n - a * (a + 1) / 2 + (b - a - 1)
}

/// `|Ω| = q(q+1)/2`.
pub fn pair_count(q: u32) -> usize {
    let q = q as usize;
    q * (q + 1) / 2
}

/// All 2-subsets of PG(1,q) in index order.
pub fn pairs(q: u32) -> impl Iterator<Item = Pair> {
    (0..pair_count(q)).map(move |i| Pair::from_index(i, q))
}

fn normalize(f: &Field, v: [Fe; 3]) -> Result<[Fe; 3]> {
    let lead = v.iter().copied().find(|x| !x.is_zero()).ok_or(Error::ZeroVector)?;
    if lead == Fe::ONE {
        return Ok(v);
    }
    let s = f.inv_nz(lead);
    Ok([f.mul(v[0], s), f.mul(v[1], s), f.mul(v[2], s)])
}

fn triple_index(v: [Fe; 3], q: u32) -> usize {
    let q = q as usize;
    if !v[0].is_zero() {
        1 + q + v[1].index() * q + v[2].index()
    } else if !v[1].is_zero() {
        1 + v[2].index()
    } else {
        0
    }
}

fn triple_from_index(i: usize, q: u32) -> [Fe; 3] {
    let qq = q as usize;
    if i == 0 {
        [Fe::ZERO, Fe::ZERO, Fe::ONE]
    } else if i <= qq {
        [Fe::ZERO, Fe::ONE, Fe::from_index(i - 1)]
    } else {
        let r = i - 1 - qq;
        [Fe::ONE, Fe::from_index(r / qq), Fe::from_index(r % qq)]
    }
}

/// `q^2 + q + 1`, the number of points (and of lines) of PG(2,q).
pub fn plane_size(q: u32) -> usize {
    let q = q as usize;
    q * q + q + 1
}

/// A point `(x0 : x1 : x2)` of PG(2,q).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjPoint2([Fe; 3]);

/// A line `a0 x0 + a1 x1 + a2 x2 = 0`, stored by its dual coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjLine([Fe; 3]);

macro_rules! homogeneous_triple {
    ($ty:ident) => {
        impl $ty {
            pub fn new(f: &Field, v: [Fe; 3]) -> Result<Self> {
                normalize(f, v).map($ty)
            }

            pub fn coords(self) -> [Fe; 3] {
                self.0
            }

            #[inline]
            pub fn index(self, q: u32) -> usize {
                triple_index(self.0, q)
            }

            pub fn from_index(i: usize, q: u32) -> Self {
                $ty(triple_from_index(i, q))
            }

            /// Everything of this kind in PG(2,q), in index order.
            pub fn all(q: u32) -> impl Iterator<Item = Self> {
                (0..plane_size(q)).map(move |i| Self::from_index(i, q))
            }
        }
    };
}

homogeneous_triple!(ProjPoint2);
homogeneous_triple!(ProjLine);

/// Position of a line with respect to the conic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LineClass {
    /// Secant: two conic points.
    Hyperbolic,
    Tangent,
    /// Exterior: no conic point.
    Elliptic,
}

pub fn quadratic_form(f: &Field, v: [Fe; 3]) -> Fe {
    f.sub(f.mul(v[1], v[1]), f.mul(v[0], v[2]))
}

/// `B(x, y) = 2 x1 y1 - x0 y2 - x2 y0`, so `B(x, x) = 2 Q(x)`.
pub fn bilinear_form(f: &Field, x: [Fe; 3], y: [Fe; 3]) -> Fe {
    let t = f.mul(f.two(), f.mul(x[1], y[1]));
    f.sub(f.sub(t, f.mul(x[0], y[2])), f.mul(x[2], y[0]))
}

/// The parametrization `ξ -> (ξ^2 : ξ : 1)`, `∞ -> (1 : 0 : 0)`.
pub fn conic_param(f: &Field, x: ProjPoint1) -> ProjPoint2 {
    match x {
        ProjPoint1::Finite(xi) => ProjPoint2::new(f, [f.mul(xi, xi), xi, Fe::ONE]).expect("nonzero"),
        ProjPoint1::Infinity => ProjPoint2([Fe::ONE, Fe::ZERO, Fe::ZERO]),
    }
}

/// Inverse of [`conic_param`] on the conic.
pub fn conic_preimage(f: &Field, p: ProjPoint2) -> Option<ProjPoint1> {
    if !quadratic_form(f, p.0).is_zero() {
        return None;
    }
    let [x0, x1, x2] = p.0;
    if x2.is_zero() {
        // (1:0:0) is the only conic point with x2 = 0
        debug_assert!(x1.is_zero() && x0 == Fe::ONE);
        Some(ProjPoint1::Infinity)
    } else {
        Some(ProjPoint1::Finite(f.mul(x1, f.inv_nz(x2))))
    }
}

/// Conic points: `P_ξ` in field order, then `P_∞`.
pub fn conic_points(f: &Field) -> Vec<ProjPoint2> {
    line_points(f).map(|x| conic_param(f, x)).collect()
}

pub fn incident(f: &Field, p: ProjPoint2, l: ProjLine) -> bool {
    let (x, a) = (p.0, l.0);
    f.add(f.add(f.mul(x[0], a[0]), f.mul(x[1], a[1])), f.mul(x[2], a[2])).is_zero()
}

fn cross(f: &Field, u: [Fe; 3], v: [Fe; 3]) -> [Fe; 3] {
    [
        f.sub(f.mul(u[1], v[2]), f.mul(u[2], v[1])),
        f.sub(f.mul(u[2], v[0]), f.mul(u[0], v[2])),
        f.sub(f.mul(u[0], v[1]), f.mul(u[1], v[0])),
    ]
}

/// The line through two distinct points.
pub fn line_through(f: &Field, p: ProjPoint2, r: ProjPoint2) -> Result<ProjLine> {
    ProjLine::new(f, cross(f, p.0, r.0)).map_err(|_| Error::DegeneratePair)
}

/// The common point of two distinct lines.
pub fn meet(f: &Field, l: ProjLine, m: ProjLine) -> Result<ProjPoint2> {
    ProjPoint2::new(f, cross(f, l.0, m.0)).map_err(|_| Error::DegeneratePair)
}

/// `P -> P^⊥ = {R : B(P, R) = 0}`, dual coordinates `(-x2 : 2 x1 : -x0)`.
pub fn polar_line(f: &Field, p: ProjPoint2) -> ProjLine {
    let [x0, x1, x2] = p.0;
    ProjLine::new(f, [f.neg(x2), f.mul(f.two(), x1), f.neg(x0)]).expect("nonzero")
}

/// `ℓ -> ℓ^⊥`, inverse of [`polar_line`].
pub fn pole(f: &Field, l: ProjLine) -> ProjPoint2 {
    let [a0, a1, a2] = l.0;
    ProjPoint2::new(f, [f.neg(a2), f.mul(a1, f.half()), f.neg(a0)]).expect("nonzero")
}

/// `L_{ξ,γ}`, the secant through `P_ξ` and `P_γ`.
pub fn hyperbolic_line(f: &Field, xi: ProjPoint1, gamma: ProjPoint1) -> Result<ProjLine> {
    if xi == gamma {
        return Err(Error::DegeneratePair);
    }
    line_through(f, conic_param(f, xi), conic_param(f, gamma))
}

/// Pole of `L_{ξ,γ}` from the closed form: `(γξ : (ξ+γ)/2 : 1)` or `(2ξ : 1 : 0)`.
pub fn secant_pole(f: &Field, pair: Pair) -> ProjPoint2 {
    match (pair.lo(), pair.hi()) {
        (ProjPoint1::Finite(xi), ProjPoint1::Finite(gamma)) => {
            ProjPoint2::new(f, [f.mul(gamma, xi), f.mul(f.add(xi, gamma), f.half()), Fe::ONE]).expect("nonzero")
        }
        (ProjPoint1::Finite(xi), ProjPoint1::Infinity) => {
            ProjPoint2::new(f, [f.mul(f.two(), xi), Fe::ONE, Fe::ZERO]).expect("nonzero")
        }
        _ => unreachable!("pairs are ordered with ∞ last"),
    }
}

/// Conic points on `l`, as parameters in PG(1,q) order.
pub fn conic_intersection(f: &Field, l: ProjLine) -> Vec<ProjPoint1> {
    line_points(f).filter(|&x| incident(f, conic_param(f, x), l)).collect()
}

pub fn classify_line(f: &Field, l: ProjLine) -> LineClass {
    match conic_intersection(f, l).len() {
        2 => LineClass::Hyperbolic,
        1 => LineClass::Tangent,
        0 => LineClass::Elliptic,
        n => unreachable!("a line meets a conic in at most 2 points, got {n}"),
    }
}

/// Square type of a point: hyperbolic iff `Q(P)` is a nonzero square.
pub fn classify_point(f: &Field, p: ProjPoint2) -> LineClass {
    match f.quadratic_character(quadratic_form(f, p.0)) {
        1 => LineClass::Hyperbolic,
        0 => LineClass::Tangent,
        _ => LineClass::Elliptic,
    }
}

/// The secant `l` as a 2-subset of PG(1,q); `None` unless `l` is hyperbolic.
pub fn secant_pair(f: &Field, l: ProjLine) -> Option<Pair> {
    match conic_intersection(f, l).as_slice() {
        [a, b] => Pair::new(*a, *b).ok(),
        _ => None,
    }
}

fn det2(f: &Field, u: [Fe; 2], v: [Fe; 2]) -> Fe {
    f.sub(f.mul(u[0], v[1]), f.mul(u[1], v[0]))
}

/// `cr(x,y;z,w) = (x-z)(y-w) / ((x-w)(y-z))`, evaluated on homogeneous
/// coordinates so the limit rules at ∞ come for free.
pub fn cross_ratio(f: &Field, x: ProjPoint1, y: ProjPoint1, z: ProjPoint1, w: ProjPoint1) -> Result<ProjPoint1> {
    let (x, y, z, w) = (x.homogeneous(), y.homogeneous(), z.homogeneous(), w.homogeneous());
    let num = f.mul(det2(f, x, z), det2(f, y, w));
    let den = f.mul(det2(f, x, w), det2(f, y, z));
    ProjPoint1::from_homogeneous(f, [num, den]).map_err(|_| Error::IndeterminateCrossRatio)
}

#[cfg(test)]
mod tests;
