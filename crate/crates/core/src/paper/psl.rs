//! X(PSL(2,q), Ω): the Γ-orbits of the stabilizer of `{0, ∞}`.
//!
//! With `r` the least of `{r, 1/r}` and `{ξ, rξ}` written so that the
//! second point is `r` times the first:
//!
//! - `{0, ξ}`, `{∞, ξ}` lie in Γ₁^±. For `q ≡ 1 (mod 4)` the sign is the
//!   square class of ξ; for `q ≡ 3` the `∞`-pairs use the opposite class.
//! - `{ξ, -ξ}` lies in Γ₋₁, split by the square class of ξ when `q ≡ 1`.
//! - `{ξ, rξ}` lies in Γ_r, split by the square class of ξ when `-1/r` is
//!   a square.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::domain::{Domain, DomainKind};
use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::geometry::{Pair, ProjPoint1};
use crate::group::GroupId;
use crate::orbitals;
use crate::scheme::{RelationLabel, Scheme};

use super::{attach_labels, canonical_ratio, TheoremReport};

fn q_is_1_mod_4(f: &Field) -> bool {
    f.q() % 4 == 1
}

fn square(f: &Field, x: Fe) -> bool {
    f.is_square(x).expect("nonzero")
}

/// The Γ-label of the orbit of `pair` under the stabilizer of `{0, ∞}`.
/// The base pair itself gets [`RelationLabel::Diagonal`] (Γ₀).
pub fn psl_orbit_label(f: &Field, pair: Pair) -> Result<RelationLabel> {
    use ProjPoint1::{Finite, Infinity};
    if pair == Pair::base() {
        return Ok(RelationLabel::Diagonal);
    }
    let zero = Fe::ZERO;
    let label = match (pair.lo(), pair.hi()) {
        (Finite(a), Infinity) if a == zero => return Err(Error::DegeneratePair),
        (Finite(a), Finite(xi)) if a == zero => RelationLabel::signed(RelationLabel::R1, square(f, xi)),
        (Finite(xi), Infinity) => {
            let plus = square(f, xi) == q_is_1_mod_4(f);
            RelationLabel::signed(RelationLabel::R1, plus)
        }
        (Finite(xi), Finite(gamma)) => {
            let r = f.div(gamma, xi)?;
            let rc = canonical_ratio(f, r);
            let base = if rc == r { xi } else { gamma };
            if rc == f.neg(Fe::ONE) {
                if q_is_1_mod_4(f) {
                    RelationLabel::signed(RelationLabel::Rminus1, square(f, xi))
                } else {
                    RelationLabel::Rminus1
                }
            } else {
                let class = RelationLabel::CrossRatio(rc);
                let minus_inv = f.neg(f.inv(rc)?);
                if square(f, minus_inv) {
                    RelationLabel::signed(class, square(f, base))
                } else {
                    class
                }
            }
        }
        (Infinity, _) => unreachable!("pairs list the finite point first"),
    };
    Ok(label)
}

/// Orbit length the closed form predicts for a Γ-label.
pub fn predicted_length(f: &Field, label: &RelationLabel) -> usize {
    let q = f.q() as usize;
    match (label.unsigned(), label.sign().is_some()) {
        (RelationLabel::Diagonal, _) => 1,
        (RelationLabel::R1, _) => q - 1,
        (RelationLabel::Rminus1, false) => (q - 1) / 2,
        (RelationLabel::Rminus1, true) => (q - 1) / 4,
        (_, false) => q - 1,
        (_, true) => (q - 1) / 2,
    }
}

/// `(3q+5)/4` or `(3q+3)/4`.
pub fn predicted_class_count(q: u32) -> usize {
    let q = q as usize;
    if q % 4 == 1 {
        (3 * q + 5) / 4
    } else {
        (3 * q + 3) / 4
    }
}

/// X(PSL(2,q), Ω) with Γ-labels attached; fails if the closed-form labels
/// do not reproduce the computed orbits.
pub fn build_psl_scheme(f: &Field) -> Result<Scheme> {
    let domain = Domain::new(f, DomainKind::Pairs);
    let mut s = orbitals::via_stabilizer(f, GroupId::Psl, &domain)?;
    attach_labels(f, &mut s, &domain, |p| psl_orbit_label(f, p))?;
    Ok(s)
}

/// The computed class count, checked against the formula and non-symmetry.
pub fn psl_class_count(f: &Field) -> Result<(usize, TheoremReport)> {
    let domain = Domain::new(f, DomainKind::Pairs);
    let s = orbitals::via_stabilizer(f, GroupId::Psl, &domain)?;
    let mut r = TheoremReport::new("PSL(2,q) class count", f.q());
    r.check("d", predicted_class_count(f.q()), s.d());
    r.check("symmetric", false, s.is_symmetric());
    Ok((s.d(), r))
}

/// Closed-form labels against the computed orbits, with the length bookkeeping.
pub fn labels_report(f: &Field) -> TheoremReport {
    let q = f.q();
    let title = "PSL(2,q) orbit labels";
    let mut r = TheoremReport::new(title, q);
    let s = match build_psl_scheme(f) {
        Ok(s) => s,
        Err(e) => {
            r.check("closed-form labels match the stabilizer orbits", true, false);
            r.note(format!("{e}"));
            return r;
        }
    };
    r.check("closed-form labels match the stabilizer orbits", true, true);
    let predicted: Vec<usize> = s.labels().iter().map(|l| predicted_length(f, l.as_ref().expect("labeled"))).collect();
    r.check("orbit lengths", predicted.clone(), s.valencies().to_vec());
    let qq = q as usize;
    r.check("lengths sum to q(q+1)/2", qq * (qq + 1) / 2, predicted.iter().sum::<usize>());
    // split halves have equal valency and are swapped or fixed by transpose
    let mut halves_ok = true;
    for k in 1..s.rank() {
        let label = s.label(k).expect("labeled");
        if let Some(plus) = label.sign() {
            let partner = RelationLabel::signed(label.unsigned().clone(), !plus);
            let Some(j) = s.class_of_label(&partner) else {
                halves_ok = false;
                continue;
            };
            let t = s.transpose(k);
            halves_ok &= s.valencies()[j] == s.valencies()[k] && (t == k || t == j);
        }
    }
    r.check("split halves pair up under transpose", true, halves_ok);
    r
}

/// Which transpose partner each split class has, against the criteria:
/// `q ≡ 1`: R₁^± self-paired, R₋₁^± swapped iff 2 is a non-square,
/// R_s^± swapped iff `1-s` is a non-square; `q ≡ 3`: R₁^± swapped,
/// R_t^± swapped iff `1-t` is a square.
pub fn psl_transpose_rules(f: &Field) -> TheoremReport {
    let q = f.q();
    let mut r = TheoremReport::new("PSL(2,q) transpose rules", q);
    let s = match build_psl_scheme(f) {
        Ok(s) => s,
        Err(e) => return TheoremReport::error("PSL(2,q) transpose rules", q, e),
    };
    let one_mod_4 = q_is_1_mod_4(f);
    let two = f.two();
    let two_square = square(f, two);
    // Legendre: (2/q) = ((-1)^((p^2-1)/8))^m
    let p = f.p() as u64;
    let legendre = if ((p * p - 1) / 8).is_multiple_of(2) || f.m().is_multiple_of(2) { 1i64 } else { -1 };
    r.check("is_square(2) agrees with the Legendre symbol", legendre == 1, two_square);
    let mut minus_reading = true;
    let mut inverse_reading = true;
    let mut any_swap_predicted = false;
    for k in 1..s.rank() {
        let label = s.label(k).expect("labeled").clone();
        if label.sign() != Some(true) {
            continue;
        }
        let class = label.unsigned().clone();
        let minus = s.class_of_label(&RelationLabel::signed(class.clone(), false)).expect("halves");
        let swapped = s.transpose(k) == minus;
        let predicted_swap = match &class {
            RelationLabel::R1 => !one_mod_4,
            RelationLabel::Rminus1 => !two_square,
            RelationLabel::CrossRatio(x) => {
                let one_minus = f.sub(Fe::ONE, *x);
                if one_mod_4 {
                    !square(f, one_minus)
                } else {
                    square(f, one_minus)
                }
            }
            _ => unreachable!("only these split"),
        };
        any_swap_predicted |= predicted_swap;
        let name = format!("{} swapped with its minus half", class.render(f));
        r.check(name, predicted_swap, swapped);
        minus_reading &= predicted_swap == swapped;
        // the inverse reading: tR^+ = R_{1/x}^+, which for q ≡ 1 is R^+ itself
        if let RelationLabel::CrossRatio(x) = class {
            let inv_plus = inverse_reading_class(f, &s, x);
            if predicted_swap {
                inverse_reading &= s.transpose(k) == inv_plus;
            }
        }
    }
    r.note(reading_note(minus_reading, inverse_reading, any_swap_predicted, one_mod_4));
    r
}

/// Class of `R_{1/x}^+` with the plus half taken literally for `1/x`:
/// `{ξ, ξ/x : ξ square} = {η, xη : η = ξ/x}`, and η has the square class of `x`.
fn inverse_reading_class(f: &Field, s: &Scheme, x: Fe) -> usize {
    let label = RelationLabel::signed(RelationLabel::CrossRatio(x), square(f, x));
    s.class_of_label(&label).expect("halves")
}

fn reading_note(minus: bool, inverse: bool, any_swap: bool, one_mod_4: bool) -> String {
    let verdict = match (minus, inverse) {
        (true, false) => "the computation supports reading tR_s^+ = R_s^{-1} as the minus half R_s^-",
        (true, true) if !any_swap => {
            "no swapped cross-ratio class occurs; both readings of tR_s^+ = R_s^{-1} hold vacuously"
        }
        (true, true) => "both readings of tR_s^+ = R_s^{-1} agree here",
        (false, true) => "the computation supports reading tR_s^+ = R_s^{-1} as R_{1/s}^+",
        (false, false) => "neither reading of tR_s^+ = R_s^{-1} matches the computation",
    };
    if one_mod_4 {
        String::from(verdict)
    } else {
        format!("{verdict} (for q = 3 mod 4, R_{{1/t}}^+ is R_t^-, so the readings coincide)")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        for (q, d) in [(5u64, 5usize), (7, 6), (9, 8), (11, 9), (13, 11)] {
            let f = Field::of_order(q).unwrap();
            let (computed, report) = psl_class_count(&f).unwrap();
            assert_eq!(computed, d);
            assert!(report.pass(), "{report}");
        }
    }

    #[test]
    fn labels_reproduce_orbits() {
        for q in [5u64, 7, 9, 11, 13, 25, 27] {
            let f = Field::of_order(q).unwrap();
            let report = labels_report(&f);
            assert!(report.pass(), "{report}");
        }
    }

    #[test]
    fn transpose_rules() {
        for q in [5u64, 7, 9, 11, 13, 25] {
            let f = Field::of_order(q).unwrap();
            let report = psl_transpose_rules(&f);
            assert!(report.pass(), "{report}");
        }
    }

    #[test]
    fn q13_minus_one_halves_are_swapped() {
        let f = Field::of_order(13).unwrap();
        let s = build_psl_scheme(&f).unwrap();
        let plus = s.class_of_label(&RelationLabel::signed(RelationLabel::Rminus1, true)).unwrap();
        let minus = s.class_of_label(&RelationLabel::signed(RelationLabel::Rminus1, false)).unwrap();
        assert_eq!(s.transpose(plus), minus);
        let f = Field::of_order(9).unwrap();
        let s = build_psl_scheme(&f).unwrap();
        let plus = s.class_of_label(&RelationLabel::signed(RelationLabel::Rminus1, true)).unwrap();
        assert_eq!(s.transpose(plus), plus);
    }
}
