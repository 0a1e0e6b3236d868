//! X(M(q), Ω) for `q = p^(2f)`: the Δ-orbits.
//!
//! The stabilizer of `{0, ∞}` in M(q) is that of PSL(2,q) together with
//! the maps `λ -> zλ^σ` and their products, so each Δ-orbit is a union of
//! Γ-orbits. Writing `x̃ = x^σ`: Δ₁ and Δ₋₁ merge their halves; for a
//! square `s` with `s̃ ∈ {s, 1/s}` Δ_s merges Γ_s^±; otherwise
//! `Δ_s^± = Γ_s^± ∪ Γ_s̃^∓`; for a non-square `t`, `Δ_t = Γ_t ∪ Γ_t̃`.

use alloc::format;
use alloc::vec::Vec;

use crate::domain::{Domain, DomainKind};
use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::geometry::Pair;
use crate::group::GroupId;
use crate::orbitals;
use crate::scheme::{RelationLabel, Scheme, Verification};

use super::psl::psl_orbit_label;
use super::{attach_labels, canonical_ratio, TheoremReport};

/// The Δ-label containing a Γ-label.
pub fn delta_of(f: &Field, gamma: &RelationLabel) -> Result<RelationLabel> {
    let sigma = |x: Fe| -> Result<Fe> { Ok(canonical_ratio(f, f.sigma(x)?)) };
    Ok(match (gamma.unsigned(), gamma.sign()) {
        (RelationLabel::Diagonal, _) => RelationLabel::Diagonal,
        (RelationLabel::R1, _) => RelationLabel::R1,
        (RelationLabel::Rminus1, _) => RelationLabel::Rminus1,
        (RelationLabel::CrossRatio(s), Some(plus)) => {
            let t = sigma(*s)?;
            if t == *s {
                RelationLabel::CrossRatio(*s)
            } else {
                // name the class by its half with the smaller ratio
                let (lo, lo_plus) = if *s < t { (*s, plus) } else { (t, !plus) };
                let hi = if *s < t { t } else { *s };
                RelationLabel::Fused(alloc::vec![
                    RelationLabel::signed(RelationLabel::CrossRatio(lo), lo_plus),
                    RelationLabel::signed(RelationLabel::CrossRatio(hi), !lo_plus),
                ])
            }
        }
        (RelationLabel::CrossRatio(t), None) => {
            let u = sigma(*t)?;
            if u == *t {
                RelationLabel::CrossRatio(*t)
            } else {
                RelationLabel::Fused(alloc::vec![
                    RelationLabel::CrossRatio((*t).min(u)),
                    RelationLabel::CrossRatio((*t).max(u)),
                ])
            }
        }
        _ => return Err(Error::NotAScheme(format!("no Δ-class for {}", gamma.render(f)))),
    })
}

/// Δ-label of the orbit of `pair` under the stabilizer of `{0, ∞}` in M(q).
pub fn m_orbit_label(f: &Field, pair: Pair) -> Result<RelationLabel> {
    delta_of(f, &psl_orbit_label(f, pair)?)
}

/// `(3q+5)/8`.
pub fn predicted_class_count(q: u32) -> usize {
    (3 * q as usize + 5) / 8
}

fn integer_sqrt(q: u32) -> usize {
    let mut r = 0usize;
    while (r + 1) * (r + 1) <= q as usize {
        r += 1;
    }
    r
}

/// X(M(q), Ω) with Δ-labels attached.
pub fn build_m_scheme(f: &Field) -> Result<Scheme> {
    let domain = Domain::new(f, DomainKind::Pairs);
    let mut s = orbitals::via_stabilizer(f, GroupId::M, &domain)?;
    attach_labels(f, &mut s, &domain, |p| m_orbit_label(f, p))?;
    Ok(s)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DeltaCounts {
    /// Δ_s classes with `s̃ ∈ {s, 1/s}`.
    pub merged_s: usize,
    /// Δ_s^± classes (each half counted).
    pub twisted_s: usize,
    pub t: usize,
}

pub fn delta_counts(s: &Scheme) -> DeltaCounts {
    let mut c = DeltaCounts::default();
    for label in s.labels().iter().flatten() {
        match label {
            RelationLabel::CrossRatio(_) => c.merged_s += 1,
            RelationLabel::Fused(parts) if parts[0].sign().is_some() => c.twisted_s += 1,
            RelationLabel::Fused(_) => c.t += 1,
            _ => {}
        }
    }
    c
}

/// Class count, Δ-labels, orbit bookkeeping and the transpose pairing.
pub fn report(f: &Field) -> TheoremReport {
    let q = f.q();
    let title = "M(q) classes and Δ-orbits";
    let mut r = TheoremReport::new(title, q);
    let s = match build_m_scheme(f) {
        Ok(s) => s,
        Err(e) => return TheoremReport::error(title, q, e),
    };
    r.check("closed-form Δ-labels match the stabilizer orbits", true, true);
    let qq = q as usize;
    let root = integer_sqrt(q);
    if q > 9 {
        r.check("d = (3q+5)/8", predicted_class_count(q), s.d());
        r.check("symmetric", false, s.is_symmetric());
    } else {
        r.check("d", 4usize, s.d());
        r.check("symmetric", true, s.is_symmetric());
    }
    let counts = delta_counts(&s);
    r.check("Δ_s classes with s~ in {s, 1/s}", root - 2, counts.merged_s);
    r.check("Δ_s^± classes of length q-1", (root - 3) * (root - 1) / 4, counts.twisted_s);
    r.check("Δ_t classes of length 2(q-1)", (qq - 1) / 8, counts.t);
    let lengths: Vec<usize> = s
        .labels()
        .iter()
        .map(|l| match l.as_ref().expect("labeled") {
            RelationLabel::Diagonal => 1,
            RelationLabel::R1 => 2 * (qq - 1),
            RelationLabel::Rminus1 => (qq - 1) / 2,
            RelationLabel::CrossRatio(_) => qq - 1,
            RelationLabel::Fused(parts) if parts[0].sign().is_some() => qq - 1,
            _ => 2 * (qq - 1),
        })
        .collect();
    r.check("orbit lengths", lengths, s.valencies().to_vec());
    // Non-symmetry comes only from the Δ_s^± halves: ᵗΔ_s^+ is Δ_s^- or
    // Δ_s^+ itself, inherited from PSL, where Γ_s^± swap iff 1-s is a
    // non-square (and 1-s̃ = (1-s)^σ has the same class).
    let mut only_halves = true;
    let mut swaps = Vec::new();
    let mut predicted_swaps = Vec::new();
    for k in 1..s.rank() {
        let t = s.transpose(k);
        let label = s.label(k).expect("labeled");
        match label {
            RelationLabel::Fused(parts) if parts[0].sign().is_some() => {
                let flipped = RelationLabel::Fused(
                    parts
                        .iter()
                        .map(|p| RelationLabel::signed(p.unsigned().clone(), !p.sign().expect("signed")))
                        .collect(),
                );
                let partner = s.class_of_label(&flipped).expect("both halves occur");
                only_halves &= t == k || t == partner;
                let RelationLabel::CrossRatio(x) = parts[0].unsigned() else { unreachable!() };
                swaps.push(t == partner);
                predicted_swaps.push(!f.is_square(f.sub(Fe::ONE, *x)).unwrap_or(true));
            }
            _ => only_halves &= t == k,
        }
    }
    r.check("only Δ_s^± halves are non-symmetric, paired with each other", true, only_halves);
    let swaps: Vec<i64> = swaps.into_iter().map(i64::from).collect();
    let predicted_swaps: Vec<i64> = predicted_swaps.into_iter().map(i64::from).collect();
    r.check("tΔ_s^+ = Δ_s^- exactly when 1-s is a non-square", predicted_swaps, swaps);
    r
}

/// Symmetry and commutativity for `q ∈ {9, 25, 49, 81}`.
pub fn m_commutativity_survey(f: &Field) -> TheoremReport {
    let q = f.q();
    let title = "M(q) commutativity";
    let mut r = TheoremReport::new(title, q);
    let s = match orbitals::via_stabilizer(f, GroupId::M, &Domain::new(f, DomainKind::Pairs)) {
        Ok(s) => s,
        Err(e) => return TheoremReport::error(title, q, e),
    };
    let p = match s.intersection_numbers(Verification::Sampled) {
        Ok(p) => p,
        Err(e) => return TheoremReport::error(title, q, e),
    };
    let commutative = s.is_commutative(&p);
    match q {
        9 => r.check("symmetric", true, s.is_symmetric()),
        25 => {
            r.check("symmetric", false, s.is_symmetric());
            r.check("commutative", true, commutative);
        }
        _ => r.check("commutative", false, commutative),
    }
    r
}

/// X(M(9)) on 45 points: symmetric, P-polynomial, array {4,2,2,2; 1,1,1,2}.
pub fn m9_structure() -> TheoremReport {
    let mut r = TheoremReport::new("M(9) is P-polynomial", 9);
    let run = || -> Result<(Scheme, crate::scheme::IntersectionNumbers)> {
        let f = Field::of_order(9)?;
        let s = orbitals::via_stabilizer(&f, GroupId::M, &Domain::new(&f, DomainKind::HyperbolicLines))?;
        let p = s.intersection_numbers(Verification::Exhaustive)?;
        Ok((s, p))
    };
    let (s, p) = match run() {
        Ok(v) => v,
        Err(e) => return TheoremReport::error("M(9) is P-polynomial", 9, e),
    };
    r.check("n", 45usize, s.n());
    r.check("symmetric", true, s.is_symmetric());
    let orderings = s.p_polynomial_orderings();
    r.check("P-polynomial", true, !orderings.is_empty());
    let arrays: Vec<Vec<u32>> = orderings
        .iter()
        .map(|o| {
            let (mut b, c) = s.intersection_array(&p, o);
            b.extend(c);
            b
        })
        .collect();
    let octagon = alloc::vec![4u32, 2, 2, 2, 1, 1, 1, 2];
    r.check("intersection array {4,2,2,2; 1,1,1,2}", true, arrays.contains(&octagon));
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q9_and_q25() {
        for q in [9u64, 25] {
            let f = Field::of_order(q).unwrap();
            let rep = report(&f);
            assert!(rep.pass(), "{rep}");
            let rep = m_commutativity_survey(&f);
            assert!(rep.pass(), "{rep}");
        }
        assert_eq!(build_m_scheme(&Field::of_order(25).unwrap()).unwrap().d(), 10);
        let rep = m9_structure();
        assert!(rep.pass(), "{rep}");
    }

    #[test]
    fn odd_extension_is_rejected() {
        let f = Field::of_order(27).unwrap();
        assert_eq!(build_m_scheme(&f), Err(Error::InvalidGroup(GroupId::M)));
    }
}
