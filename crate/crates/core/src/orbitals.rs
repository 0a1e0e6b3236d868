//! Orbital schemes `X(G, D)` for the four groups, by two routes.
//!
//! The generic route runs a BFS over ordered pairs under the generators.
//! The fast route, available on Ω, L₊ and L₊^⊥, takes the orbits of the
//! stabilizer of the base element `{0, ∞}` and reads the class of `(x, y)`
//! as the orbit of `h_x(y)`, where the transporter `h_x` sends `x` to the
//! base element.

use alloc::vec;
use alloc::vec::Vec;

use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::geometry::{pairs, Pair};
use crate::group::{base_pair_stabilizer, generators, GroupId, Moebius, Transporter};
use crate::scheme::{orbital_scheme, Permutation, Scheme};

/// Orbitals from a BFS over ordered pairs.
pub fn generic(f: &Field, group: GroupId, domain: &Domain) -> Result<Scheme> {
    let perms = generators(f, group)?.iter().map(|g| domain.permutation(f, g)).collect::<Result<Vec<Permutation>>>()?;
    orbital_scheme(&perms, domain.len())
}

/// Orbits of the stabilizer of `{0, ∞}` on the domain, each listed in
/// increasing order, orbits ordered by least element.
pub fn stabilizer_orbits(f: &Field, group: GroupId, domain: &Domain) -> Result<Vec<Vec<usize>>> {
    let orbit = stabilizer_orbit_ids(f, group, domain)?;
    let count = orbit.iter().max().map_or(0, |&m| m as usize + 1);
    let mut out = vec![Vec::new(); count];
    for (y, &o) in orbit.iter().enumerate() {
        out[o as usize].push(y);
    }
    Ok(out)
}

fn stabilizer_orbit_ids(f: &Field, group: GroupId, domain: &Domain) -> Result<Vec<u32>> {
    if !domain.kind().is_secant() {
        return Err(Error::UnsupportedDomain(domain.kind().token()));
    }
    let stab = base_pair_stabilizer(f, group)?.iter().map(|g| domain.permutation(f, g)).collect::<Result<Vec<_>>>()?;
    let mut orbit = vec![u32::MAX; domain.len()];
    let mut next = 0;
    for y in 0..domain.len() {
        if orbit[y] != u32::MAX {
            continue;
        }
        // the stabilizer list is the whole group, so one sweep is the orbit
        for g in &stab {
            orbit[g.apply(y)] = next;
        }
        next += 1;
    }
    Ok(orbit)
}

/// One transporter per pair of Ω, indexed by pair index.
pub fn transporters(f: &Field, group: GroupId) -> Result<Vec<Moebius>> {
    let t = Transporter::new(f, group)?;
    Ok(pairs(f.q()).map(|p| t.to_base(f, p)).collect())
}

/// The fast route, computing transporters on the fly.
pub fn via_stabilizer(f: &Field, group: GroupId, domain: &Domain) -> Result<Scheme> {
    let table = transporters(f, group)?;
    via_stabilizer_with(f, group, domain, &table)
}

/// The fast route with a precomputed transporter table, as returned by
/// [`transporters`].
pub fn via_stabilizer_with(f: &Field, group: GroupId, domain: &Domain, table: &[Moebius]) -> Result<Scheme> {
    let orbit = stabilizer_orbit_ids(f, group, domain)?;
    let n = domain.len();
    let q = f.q();
    if table.len() != n {
        return Err(Error::UnsupportedDomain("transporter table of the wrong size"));
    }
    let base = domain.index_of_pair(f, Pair::base()).ok_or(Error::UnsupportedDomain("base element missing"))?;
    let mut raw = vec![0u32; n * n];
    for x in 0..n {
        let pair = domain.pair_of(f, x).ok_or(Error::UnsupportedDomain("element without secant pair"))?;
        let h = &table[pair.index(q)];
        if !h.is_member(f, group)? {
            return Err(Error::InvalidGroup(group));
        }
        let perm = domain.permutation(f, h)?;
        if perm.apply(x) != base {
            return Err(Error::NotAScheme(alloc::format!("transporter for {x} misses the base")));
        }
        for (slot, y) in raw[x * n..(x + 1) * n].iter_mut().zip(0..n) {
            *slot = orbit[perm.apply(y)];
        }
    }
    Scheme::from_relation(n, &raw)
}

/// The fast route where it applies, the generic one elsewhere.
pub fn build(f: &Field, group: GroupId, domain: &Domain) -> Result<Scheme> {
    if domain.kind().is_secant() {
        via_stabilizer(f, group, domain)
    } else {
        generic(f, group, domain)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::DomainKind;

    #[test]
    fn both_routes_agree() {
        for q in [5u64, 7, 9, 11, 13] {
            let f = Field::of_order(q).unwrap();
            for kind in [DomainKind::Pairs, DomainKind::HyperbolicLines, DomainKind::HyperbolicPoints] {
                let d = Domain::new(&f, kind);
                for group in GroupId::ALL {
                    if !group.is_defined_for(&f) {
                        continue;
                    }
                    let a = generic(&f, group, &d).unwrap();
                    let b = via_stabilizer(&f, group, &d).unwrap();
                    assert_eq!(a, b, "q={q} {group} {kind}");
                }
            }
        }
    }

    #[test]
    fn pgl9_on_pairs_has_five_classes() {
        let f = Field::of_order(9).unwrap();
        let s = generic(&f, GroupId::Pgl, &Domain::new(&f, DomainKind::Pairs)).unwrap();
        assert_eq!(s.d(), 5);
    }

    #[test]
    fn stabilizer_orbits_start_with_the_base() {
        for q in [5u64, 9, 13] {
            let f = Field::of_order(q).unwrap();
            for kind in [DomainKind::Pairs, DomainKind::HyperbolicLines] {
                let d = Domain::new(&f, kind);
                let orbits = stabilizer_orbits(&f, GroupId::Psl, &d).unwrap();
                let base = d.index_of_pair(&f, Pair::base()).unwrap();
                assert!(orbits.contains(&vec![base]));
                // the singleton plus (3q+5)/4 nontrivial orbits
                assert_eq!(orbits.len() as u64, (3 * q + 5) / 4 + 1);
            }
        }
    }

    #[test]
    fn unsupported_domains() {
        let f = Field::of_order(9).unwrap();
        let d = Domain::new(&f, DomainKind::TangentLines);
        assert_eq!(via_stabilizer(&f, GroupId::Pgl, &d), Err(Error::UnsupportedDomain("tangent-lines")));
        // tangent lines correspond to conic points, so PGL is 2-transitive there
        assert_eq!(build(&f, GroupId::Pgl, &d).unwrap().d(), 1);
    }
}
