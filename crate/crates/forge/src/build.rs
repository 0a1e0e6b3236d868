//! Scheme construction for the command line: route selection, labels and
//! the axiom check that every build passes before it is exported.

use scheme_forge_core::domain::{Domain, DomainKind};
use scheme_forge_core::orbitals;
use scheme_forge_core::paper;
use scheme_forge_core::scheme::{IntersectionNumbers, Verification};
use scheme_forge_core::{Field, GroupId, Scheme};

use crate::cache::Cache;
use crate::config::RunConfig;
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// Base-pair stabilizer orbits plus transporters.
    Stabilizer,
    /// Orbitals of the full permutation group on the domain.
    Generic,
}

#[derive(Debug)]
pub struct Built {
    pub field: Field,
    pub group: GroupId,
    pub domain: Domain,
    pub scheme: Scheme,
    pub p: IntersectionNumbers,
    pub mode: Verification,
    pub route: Route,
    pub warnings: Vec<String>,
}

impl Built {
    pub fn commutative(&self) -> bool {
        self.scheme.is_commutative(&self.p)
    }
}

pub fn build_scheme(cfg: &RunConfig, cache: &Cache) -> Result<Built> {
    let field = cfg.field()?;
    let domain = Domain::new(&field, cfg.domain);
    let mut warnings = Vec::new();
    let (mut scheme, route) = if cfg.domain.is_secant() {
        let table = cache.transporters(&field, cfg.group)?;
        (orbitals::via_stabilizer_with(&field, cfg.group, &domain, &table)?, Route::Stabilizer)
    } else {
        warnings.push(format!(
            "{} has no closed-form class description; building it generically from the group action",
            cfg.domain
        ));
        (orbitals::generic(&field, cfg.group, &domain)?, Route::Generic)
    };
    if route == Route::Stabilizer {
        paper::label_classes(&field, cfg.group, &mut scheme, &domain)?;
    }
    let mode = if cfg.exhaustive { Verification::Exhaustive } else { Verification::Sampled };
    let p = scheme.intersection_numbers(mode)?;
    scheme.check_identities(&p)?;
    Ok(Built { field, group: cfg.group, domain, scheme, p, mode, route, warnings })
}

/// X(G, Ω) with closed-form labels, without the configuration plumbing.
pub fn labeled_pairs_scheme(f: &Field, group: GroupId, cache: &Cache) -> Result<(Domain, Scheme)> {
    let domain = Domain::new(f, DomainKind::Pairs);
    let table = cache.transporters(f, group)?;
    let mut s = orbitals::via_stabilizer_with(f, group, &domain, &table)?;
    paper::label_classes(f, group, &mut s, &domain)?;
    Ok((domain, s))
}
