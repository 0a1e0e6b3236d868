//! Finite sets the groups act on: 2-subsets of PG(1,q) and the line and
//! point classes of PG(2,q) relative to the conic.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Result;
use crate::field::Field;
use crate::geometry::{
    classify_line, classify_point, pair_count, plane_size, polar_line, secant_pair, LineClass, Pair, ProjLine,
    ProjPoint2,
};
use crate::group::{embed_rho, Moebius};
use crate::scheme::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DomainKind {
    /// Ω, the 2-subsets of PG(1,q).
    Pairs,
    /// L₊, lines meeting the conic twice.
    HyperbolicLines,
    /// L₊^⊥, the poles of hyperbolic lines.
    HyperbolicPoints,
    TangentLines,
    EllipticLines,
}

impl DomainKind {
    pub const ALL: [DomainKind; 5] = [
        DomainKind::Pairs,
        DomainKind::HyperbolicLines,
        DomainKind::HyperbolicPoints,
        DomainKind::TangentLines,
        DomainKind::EllipticLines,
    ];

    pub fn token(self) -> &'static str {
        match self {
            DomainKind::Pairs => "pairs",
            DomainKind::HyperbolicLines => "hyp-lines",
            DomainKind::HyperbolicPoints => "hyp-points",
            DomainKind::TangentLines => "tangent-lines",
            DomainKind::EllipticLines => "elliptic-lines",
        }
    }

    pub fn from_token(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.token() == s)
    }

    /// Whether the domain is in bijection with Ω, so the stabilizer of
    /// `{0, ∞}` and transporters apply.
    pub fn is_secant(self) -> bool {
        matches!(self, DomainKind::Pairs | DomainKind::HyperbolicLines | DomainKind::HyperbolicPoints)
    }

    fn line_class(self) -> Option<LineClass> {
        match self {
            DomainKind::HyperbolicLines => Some(LineClass::Hyperbolic),
            DomainKind::TangentLines => Some(LineClass::Tangent),
            DomainKind::EllipticLines => Some(LineClass::Elliptic),
            _ => None,
        }
    }
}

impl fmt::Display for DomainKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainElement {
    Pair(Pair),
    Line(ProjLine),
    Point(ProjPoint2),
}

/// A domain with elements indexed `0..n` in canonical order: pair index
/// for Ω, PG(2,q) index for lines and points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Domain {
    kind: DomainKind,
    q: u32,
    /// Pair index or plane index of each element.
    members: Vec<u32>,
    /// Inverse of `members`, `u32::MAX` off the domain.
    lookup: Vec<u32>,
}

impl Domain {
    pub fn new(f: &Field, kind: DomainKind) -> Self {
        let q = f.q();
        let (members, universe): (Vec<u32>, usize) = match kind {
            DomainKind::Pairs => ((0..pair_count(q) as u32).collect(), pair_count(q)),
            DomainKind::HyperbolicPoints => (
                ProjPoint2::all(q)
                    .filter(|&p| classify_point(f, p) == LineClass::Hyperbolic)
                    .map(|p| p.index(q) as u32)
                    .collect(),
                plane_size(q),
            ),
            _ => {
                let class = kind.line_class().expect("line domain");
                (
                    ProjLine::all(q).filter(|&l| classify_line(f, l) == class).map(|l| l.index(q) as u32).collect(),
                    plane_size(q),
                )
            }
        };
        let mut lookup = vec![u32::MAX; universe];
        for (i, &m) in members.iter().enumerate() {
            lookup[m as usize] = i as u32;
        }
        Domain { kind, q, members, lookup }
    }

    pub fn kind(&self) -> DomainKind {
        self.kind
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn element(&self, i: usize) -> DomainElement {
        let m = self.members[i] as usize;
        match self.kind {
            DomainKind::Pairs => DomainElement::Pair(Pair::from_index(m, self.q)),
            DomainKind::HyperbolicPoints => DomainElement::Point(ProjPoint2::from_index(m, self.q)),
            _ => DomainElement::Line(ProjLine::from_index(m, self.q)),
        }
    }

    pub fn index_of(&self, e: DomainElement) -> Option<usize> {
        let m = match (self.kind, e) {
            (DomainKind::Pairs, DomainElement::Pair(p)) => p.index(self.q),
            (DomainKind::HyperbolicPoints, DomainElement::Point(p)) => p.index(self.q),
            (k, DomainElement::Line(l)) if k.line_class().is_some() => l.index(self.q),
            _ => return None,
        };
        match self.lookup[m] {
            u32::MAX => None,
            i => Some(i as usize),
        }
    }

    /// The pair of conic parameters attached to element `i`: the pair
    /// itself, the secant points of a line, or those of a point's polar.
    pub fn pair_of(&self, f: &Field, i: usize) -> Option<Pair> {
        match self.element(i) {
            DomainElement::Pair(p) => Some(p),
            DomainElement::Line(l) => secant_pair(f, l),
            DomainElement::Point(p) => secant_pair(f, polar_line(f, p)),
        }
    }

    /// Index of the element whose attached pair is `pair`.
    pub fn index_of_pair(&self, f: &Field, pair: Pair) -> Option<usize> {
        let e = match self.kind {
            DomainKind::Pairs => DomainElement::Pair(pair),
            DomainKind::HyperbolicLines => {
                DomainElement::Line(crate::geometry::hyperbolic_line(f, pair.lo(), pair.hi()).ok()?)
            }
            DomainKind::HyperbolicPoints => DomainElement::Point(crate::geometry::secant_pole(f, pair)),
            _ => return None,
        };
        self.index_of(e)
    }

    /// The permutation of the domain induced by `g`, through ρ for lines and points.
    pub fn permutation(&self, f: &Field, g: &Moebius) -> Result<Permutation> {
        let q = self.q;
        let images: Vec<u32> = match self.kind {
            DomainKind::Pairs => {
                let lp = g.line_permutation(f);
                self.members
                    .iter()
                    .map(|&m| {
                        let p = Pair::from_index(m as usize, q);
                        let (a, b) = (lp[p.lo().index(q)] as usize, lp[p.hi().index(q)] as usize);
                        let (a, b) = if a < b { (a, b) } else { (b, a) };
                        crate::geometry::pair_index(a, b, q) as u32
                    })
                    .collect()
            }
            DomainKind::HyperbolicPoints => {
                let r = embed_rho(f, g);
                self.members
                    .iter()
                    .map(|&m| self.lookup[r.apply_point(f, ProjPoint2::from_index(m as usize, q)).index(q)])
                    .collect()
            }
            _ => {
                let r = embed_rho(f, g);
                self.members
                    .iter()
                    .map(|&m| self.lookup[r.apply_line(f, ProjLine::from_index(m as usize, q)).index(q)])
                    .collect()
            }
        };
        Permutation::new(images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::group::{generators, GroupId};

    #[test]
    fn sizes_and_index_round_trips() {
        for q in [5u64, 7, 9, 11, 13] {
            let f = Field::of_order(q).unwrap();
            let q = q as usize;
            let sizes = [q * (q + 1) / 2, q * (q + 1) / 2, q * (q + 1) / 2, q + 1, q * (q - 1) / 2];
            for (kind, size) in DomainKind::ALL.into_iter().zip(sizes) {
                let d = Domain::new(&f, kind);
                assert_eq!(d.len(), size, "{kind}");
                for i in 0..d.len() {
                    assert_eq!(d.index_of(d.element(i)), Some(i));
                    if kind.is_secant() {
                        let pair = d.pair_of(&f, i).unwrap();
                        assert_eq!(d.index_of_pair(&f, pair), Some(i));
                    }
                }
            }
        }
    }

    #[test]
    fn generators_permute_every_domain() {
        let f = Field::of_order(9).unwrap();
        for kind in DomainKind::ALL {
            let d = Domain::new(&f, kind);
            for group in GroupId::ALL {
                for g in generators(&f, group).unwrap() {
                    let p = d.permutation(&f, &g).unwrap();
                    if kind.is_secant() {
                        // the pair attached to an image is the image pair
                        for i in 0..d.len() {
                            let pair = d.pair_of(&f, i).unwrap();
                            let moved = Pair::new(g.apply(&f, pair.lo()), g.apply(&f, pair.hi())).unwrap();
                            assert_eq!(d.pair_of(&f, p.apply(i)), Some(moved));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn tokens_round_trip() {
        for kind in DomainKind::ALL {
            assert_eq!(DomainKind::from_token(kind.token()), Some(kind));
        }
        assert_eq!(DomainKind::from_token("lines"), None);
    }
}
