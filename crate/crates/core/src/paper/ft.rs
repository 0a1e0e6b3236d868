//! FT(q+1): the PGL(2,q) fission of T(q+1), built straight from cross-ratios.
//!
//! Pairs sharing a point are in R₁; disjoint pairs `{ξ,γ}, {α,β}` are in
//! `R_r` when `cr(ξ,γ;α,β) ∈ {r, 1/r}`, with `R₋₁` the class of `-1`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::domain::{Domain, DomainKind};
use crate::error::Result;
use crate::field::{Fe, Field};
use crate::geometry::{cross_ratio, pairs, Pair};
use crate::group::GroupId;
use crate::orbitals;
use crate::scheme::{RelationLabel, Scheme, Verification};

use super::{canonical_ratio, TheoremReport};

/// Label of the ordered pair `(x, y)` of 2-subsets.
pub fn ft_label(f: &Field, x: Pair, y: Pair) -> RelationLabel {
    if x == y {
        return RelationLabel::Diagonal;
    }
    if x.contains(y.lo()) || x.contains(y.hi()) {
        return RelationLabel::R1;
    }
    let r = cross_ratio(f, x.lo(), x.hi(), y.lo(), y.hi())
        .expect("disjoint pairs")
        .finite()
        .expect("finite for disjoint pairs");
    ratio_label(f, r)
}

pub(crate) fn ratio_label(f: &Field, r: Fe) -> RelationLabel {
    let r = canonical_ratio(f, r);
    if r == f.neg(Fe::ONE) {
        RelationLabel::Rminus1
    } else {
        RelationLabel::CrossRatio(r)
    }
}

/// FT(q+1) on Ω with labels attached.
pub fn build_ft(f: &Field) -> Result<Scheme> {
    let all: Vec<Pair> = pairs(f.q()).collect();
    let n = all.len();
    let mut ids: BTreeMap<RelationLabel, u32> = BTreeMap::new();
    let mut raw = Vec::with_capacity(n * n);
    for &x in &all {
        for &y in &all {
            let label = ft_label(f, x, y);
            let next = ids.len() as u32;
            raw.push(*ids.entry(label).or_insert(next));
        }
    }
    let mut scheme = Scheme::from_relation(n, &raw)?;
    for k in 0..scheme.rank() {
        let (x, y) = scheme.representative(k);
        scheme.set_label(k, ft_label(f, all[x], all[y]));
    }
    Ok(scheme)
}

/// The unique class bijection from FT(q+1) onto the PGL(2,q) orbital
/// scheme on Ω, if the two have the same relations.
pub fn ft_equals_orbital(f: &Field) -> Result<Option<Vec<usize>>> {
    let ft = build_ft(f)?;
    let orbital = orbitals::generic(f, GroupId::Pgl, &Domain::new(f, DomainKind::Pairs))?;
    Ok(ft.equal_up_to_relabel(&orbital))
}

/// Class count, valencies, and (for `q <= 13`) agreement with the orbitals.
pub fn report(f: &Field) -> TheoremReport {
    let q = f.q();
    let mut r = TheoremReport::new("FT(q+1) from cross-ratios", q);
    let ft = match build_ft(f) {
        Ok(s) => s,
        Err(e) => return TheoremReport::error("FT(q+1) from cross-ratios", q, e),
    };
    let qq = q as usize;
    r.check("d = (q+1)/2", (qq + 1) / 2, ft.d());
    r.check("symmetric", true, ft.is_symmetric());
    let mut predicted = Vec::new();
    let mut computed = Vec::new();
    for k in 1..ft.rank() {
        let label = ft.label(k).expect("labeled");
        predicted.push(match label {
            RelationLabel::R1 => 2 * (qq - 1),
            RelationLabel::Rminus1 => (qq - 1) / 2,
            _ => qq - 1,
        });
        computed.push(ft.valencies()[k]);
    }
    r.check("valencies 2(q-1), (q-1)/2, q-1 by class type", predicted, computed);
    match ft.intersection_numbers(if q <= 13 { Verification::Exhaustive } else { Verification::Sampled }) {
        Ok(p) => r.check("scheme axioms", true, ft.check_identities(&p).is_ok()),
        Err(_) => r.check("scheme axioms", true, false),
    }
    if q <= 13 {
        let identical = match ft_equals_orbital(f) {
            Ok(Some(map)) => map.iter().enumerate().all(|(i, &j)| i == j),
            _ => false,
        };
        r.check("equals PGL orbitals on pairs", true, identical);
    }
    r
}
