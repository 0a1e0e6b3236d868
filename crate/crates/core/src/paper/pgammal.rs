//! X(PΓL(2,q), Ω): classes indexed by orbits of Frobenius and inversion on
//! cross-ratio values.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::domain::{Domain, DomainKind};
use crate::error::Result;
use crate::field::{Fe, Field};
use crate::geometry::Pair;
use crate::group::GroupId;
use crate::orbitals;
use crate::scheme::{RelationLabel, Scheme, Verification};

use super::ft::ft_label;
use super::{attach_labels, TheoremReport};

/// `{r^τ, r^{-τ}}` over all automorphisms τ, sorted.
pub fn frobenius_inversion_orbit(f: &Field, r: Fe) -> Vec<Fe> {
    let mut out = BTreeSet::new();
    for j in 0..f.m() {
        let x = f.frobenius(r, j);
        out.insert(x);
        out.insert(f.inv(x).expect("nonzero"));
    }
    out.into_iter().collect()
}

/// Λ-label of the orbit of `pair` under the stabilizer of `{0, ∞}`.
pub fn pgammal_orbit_label(f: &Field, pair: Pair) -> RelationLabel {
    match ft_label(f, Pair::base(), pair) {
        RelationLabel::CrossRatio(r) => RelationLabel::FrobeniusOrbit(frobenius_inversion_orbit(f, r)),
        other => other,
    }
}

/// Two plus the number of orbits of `⟨x -> x^p, x -> 1/x⟩` on `F_q^* \ {±1}`.
pub fn count_pgammal_classes(f: &Field) -> usize {
    let minus_one = f.neg(Fe::ONE);
    let mut seen = BTreeSet::new();
    let mut orbits = 0;
    for r in f.nonzero() {
        if r == Fe::ONE || r == minus_one || seen.contains(&r) {
            continue;
        }
        orbits += 1;
        seen.extend(frobenius_inversion_orbit(f, r));
    }
    2 + orbits
}

/// X(PΓL(2,q), Ω) with Λ-labels attached.
pub fn build_pgammal_scheme(f: &Field) -> Result<Scheme> {
    let domain = Domain::new(f, DomainKind::Pairs);
    let mut s = orbitals::via_stabilizer(f, GroupId::PGammaL, &domain)?;
    attach_labels(f, &mut s, &domain, |p| Ok(pgammal_orbit_label(f, p)))?;
    Ok(s)
}

/// Class count, symmetry, R₁ from T(q+1), and the P-polynomial property.
pub fn report(f: &Field) -> TheoremReport {
    let q = f.q();
    let title = "PGammaL(2,q) classes";
    let mut r = TheoremReport::new(title, q);
    let s = match build_pgammal_scheme(f) {
        Ok(s) => s,
        Err(e) => return TheoremReport::error(title, q, e),
    };
    r.check("closed-form Λ-labels match the stabilizer orbits", true, true);
    r.check("d = count of Frobenius-inversion orbits + 2", count_pgammal_classes(f), s.d());
    match q {
        9 => r.check("d", 4usize, s.d()),
        25 => r.check("d", 9usize, s.d()),
        49 => r.check("d", 16usize, s.d()),
        _ => {}
    }
    if f.m() == 1 {
        r.check("d = (q+1)/2 for prime q", (q as usize + 1) / 2, s.d());
    }
    r.check("symmetric", true, s.is_symmetric());
    // R₁ is "the two pairs meet", a relation of T(q+1)
    let r1 = s.class_of_label(&RelationLabel::R1).expect("R1 present");
    let n = s.n();
    let q32 = f.q();
    let meets = (0..n).all(|x| {
        let px = Pair::from_index(x, q32);
        (0..n).all(|y| {
            let py = Pair::from_index(y, q32);
            let meet = x != y && (px.contains(py.lo()) || px.contains(py.hi()));
            (s.class(x, y) == r1) == meet
        })
    });
    r.check("R_1 is the meeting relation of T(q+1)", true, meets);
    if matches!(q, 9 | 25 | 49) {
        let orderings = s.p_polynomial_orderings();
        if q == 9 {
            let rm1 = s.class_of_label(&RelationLabel::Rminus1).expect("R-1 present");
            r.check("P-polynomial via R_-1", true, orderings.iter().any(|o| o[1] == rm1));
        } else {
            r.check("P-polynomial", false, !orderings.is_empty());
        }
    }
    if q <= 13 {
        let ok = s.intersection_numbers(Verification::Exhaustive).and_then(|p| s.check_identities(&p)).is_ok();
        r.check("scheme axioms, exhaustive", true, ok);
    }
    r
}
