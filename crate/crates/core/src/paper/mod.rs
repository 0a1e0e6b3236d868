//! The named schemes and their closed-form class descriptions.
//!
//! Every scheme here is computed by the orbital engine; the closed forms
//! (cross-ratio classes, Γ, Δ and Λ labels, class-count formulas,
//! transpose criteria) are predictions checked against it. Each check is
//! recorded in a [`TheoremReport`].

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::geometry::Pair;
use crate::group::GroupId;
use crate::scheme::{RelationLabel, Scheme};

pub mod ft;
pub mod isomorphism;
pub mod m;
pub mod pgammal;
pub mod psl;
mod report;
pub mod suite;

pub use report::{Check, TheoremReport, Value};

/// The least of `{r, 1/r}` in field order.
pub fn canonical_ratio(f: &Field, r: Fe) -> Fe {
    let inv = f.inv(r).expect("nonzero ratio");
    r.min(inv)
}

/// Label every class of `scheme` from the labels of the pairs in the row
/// of the base element `{0, ∞}`. Succeeds only if the labels induce the
/// same partition of that row as the scheme, which is the check that the
/// closed form describes the computed orbits.
pub fn attach_labels(
    f: &Field,
    scheme: &mut Scheme,
    domain: &Domain,
    label_of: impl Fn(Pair) -> Result<RelationLabel>,
) -> Result<()> {
    let base = domain.index_of_pair(f, Pair::base()).ok_or(Error::UnsupportedDomain("no base element"))?;
    let mut by_class: Vec<Option<RelationLabel>> = alloc::vec![None; scheme.rank()];
    let mut by_label: BTreeMap<RelationLabel, usize> = BTreeMap::new();
    for y in 0..domain.len() {
        let pair = domain.pair_of(f, y).ok_or(Error::UnsupportedDomain("no secant pair"))?;
        let label = if y == base { RelationLabel::Diagonal } else { label_of(pair)? };
        let k = scheme.class(base, y);
        match &by_class[k] {
            None => by_class[k] = Some(label.clone()),
            Some(l) if *l == label => {}
            Some(l) => {
                return Err(Error::NotAScheme(format!(
                    "class {k} carries both {} and {}",
                    l.render(f),
                    label.render(f)
                )))
            }
        }
        if *by_label.entry(label.clone()).or_insert(k) != k {
            return Err(Error::NotAScheme(format!("label {} spans two classes", label.render(f))));
        }
    }
    for (k, label) in by_class.into_iter().enumerate() {
        scheme.set_label(k, label.expect("every class meets the base row"));
    }
    Ok(())
}

/// Class sizes in the base row, i.e. the stabilizer orbit lengths.
pub fn orbit_lengths(scheme: &Scheme) -> Vec<usize> {
    scheme.valencies().to_vec()
}

/// The closed-form label of the class of `({0, ∞}, pair)` in X(G, Ω):
/// cross-ratio classes for PGL, Γ for PSL, Δ for M, Λ for PΓL.
pub fn orbit_label(f: &Field, group: GroupId, pair: Pair) -> Result<RelationLabel> {
    match group {
        GroupId::Pgl => Ok(ft::ft_label(f, Pair::base(), pair)),
        GroupId::Psl => psl::psl_orbit_label(f, pair),
        GroupId::M => m::m_orbit_label(f, pair),
        GroupId::PGammaL => Ok(pgammal::pgammal_orbit_label(f, pair)),
    }
}

/// Attach [`orbit_label`]s to a scheme on Ω, L₊ or L₊^⊥.
pub fn label_classes(f: &Field, group: GroupId, scheme: &mut Scheme, domain: &Domain) -> Result<()> {
    attach_labels(f, scheme, domain, |p| orbit_label(f, group, p))
}
