//! The same scheme on Ω, L₊ and L₊^⊥, and the fusion lattice
//! T(q+1) ⊇ FT(q+1) ⊇ X(PSL), with X(PΓL) a fusion of FT(q+1) and X(M).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::domain::{Domain, DomainElement, DomainKind};
use crate::error::Result;
use crate::field::Field;
use crate::geometry::{hyperbolic_line, pole, Pair};
use crate::group::GroupId;
use crate::orbitals;
use crate::scheme::{is_fusion, triangular, RelationLabel, Scheme};

use super::ft::{build_ft, ratio_label};
use super::{m, pgammal, psl, TheoremReport};

/// Ω -> L₊ by `{ξ, γ} -> L_{ξ,γ}`, and L₊ -> L₊^⊥ by the polarity.
fn bijections(f: &Field, pairs: &Domain, lines: &Domain, points: &Domain) -> (Vec<u32>, Vec<u32>) {
    let to_line: Vec<u32> = (0..pairs.len())
        .map(|i| {
            let p = Pair::from_index(i, f.q());
            let l = hyperbolic_line(f, p.lo(), p.hi()).expect("distinct points");
            lines.index_of(DomainElement::Line(l)).expect("hyperbolic") as u32
        })
        .collect();
    let to_point: Vec<u32> = (0..lines.len())
        .map(|i| match lines.element(i) {
            DomainElement::Line(l) => points.index_of(DomainElement::Point(pole(f, l))).expect("hyperbolic") as u32,
            _ => unreachable!("line domain"),
        })
        .collect();
    (to_line, to_point)
}

/// Each scheme built independently by the generic orbital route on its
/// own domain, then compared through the explicit bijections.
pub fn three_domain_isomorphism(f: &Field, group: GroupId) -> TheoremReport {
    let q = f.q();
    let title = format!("{} on pairs, hyperbolic lines, hyperbolic points", group.name());
    let run = || -> Result<(bool, bool, bool)> {
        let pairs = Domain::new(f, DomainKind::Pairs);
        let lines = Domain::new(f, DomainKind::HyperbolicLines);
        let points = Domain::new(f, DomainKind::HyperbolicPoints);
        let s_pairs = orbitals::generic(f, group, &pairs)?;
        let s_lines = orbitals::generic(f, group, &lines)?;
        let s_points = orbitals::generic(f, group, &points)?;
        let (to_line, to_point) = bijections(f, &pairs, &lines, &points);
        let composite: Vec<u32> = to_line.iter().map(|&l| to_point[l as usize]).collect();
        Ok((
            s_pairs.matches_under(&s_lines, &to_line).is_some(),
            s_lines.matches_under(&s_points, &to_point).is_some(),
            s_pairs.matches_under(&s_points, &composite).is_some(),
        ))
    };
    let mut r = TheoremReport::new(title.clone(), q);
    match run() {
        Ok((a, b, c)) => {
            r.check("pairs -> hyperbolic lines", true, a);
            r.check("hyperbolic lines -> poles", true, b);
            r.check("pairs -> poles", true, c);
        }
        Err(e) => return TheoremReport::error(title, q, e),
    }
    r
}

fn fusion_edge(r: &mut TheoremReport, name: &str, coarse: &Scheme, fine: &Scheme) {
    let ok = fine.refinement_map(coarse).is_some_and(|map| is_fusion(coarse, fine, &map));
    r.check(String::from(name), true, ok);
}

/// Every edge of the lattice that exists at this `q`.
pub fn fusion_chain(f: &Field) -> TheoremReport {
    let q = f.q();
    let title = "fusion lattice";
    let run = || -> Result<TheoremReport> {
        let mut r = TheoremReport::new(title, q);
        let t = triangular(q as usize + 1)?;
        let ft = build_ft(f)?;
        let psl = psl::build_psl_scheme(f)?;
        let pgl = pgammal::build_pgammal_scheme(f)?;
        fusion_edge(&mut r, "T(q+1) is a fusion of FT(q+1)", &t, &ft);
        fusion_edge(&mut r, "FT(q+1) is a fusion of X(PSL)", &ft, &psl);
        fusion_edge(&mut r, "X(PGammaL) is a fusion of FT(q+1)", &pgl, &ft);
        if GroupId::M.is_defined_for(f) {
            let m = m::build_m_scheme(f)?;
            fusion_edge(&mut r, "X(M) is a fusion of X(PSL)", &m, &psl);
            fusion_edge(&mut r, "X(PGammaL) is a fusion of X(M)", &pgl, &m);
        }
        Ok(r)
    };
    run().unwrap_or_else(|e| TheoremReport::error(title, q, e))
}

/// The three-row diagram for q = 9.
pub fn q9_fusion_diagram() -> TheoremReport {
    let title = "fission schemes of T(10) for q = 9";
    let run = || -> Result<TheoremReport> {
        let f = Field::of_order(9)?;
        let mut r = TheoremReport::new(title, 9);
        let g = f.primitive_element();
        let g_pow = |k: i64| f.pow(g, k).expect("nonzero");
        let [r_g2, r_g, r_g3] = [2, 1, 3].map(|k| ratio_label(&f, g_pow(k)));
        let ft = build_ft(&f)?;
        let mut top: Vec<RelationLabel> = ft.labels()[1..].iter().flatten().cloned().collect();
        top.sort();
        let mut expected =
            alloc::vec![RelationLabel::R1, RelationLabel::Rminus1, r_g2.clone(), r_g.clone(), r_g3.clone()];
        expected.sort();
        r.check("FT(10) classes R_1, R_-1, R_g^2, R_g, R_g^3", true, top == expected);

        let psl = psl::build_psl_scheme(&f)?;
        r.check("X(PSL(2,9)) classes", 8usize, psl.d());
        let to_ft = psl.refinement_map(&ft);
        let split: Vec<bool> = match &to_ft {
            Some(map) => (1..ft.rank()).map(|k| map.iter().filter(|&&c| c == k).count() == 2).collect(),
            None => Vec::new(),
        };
        let predicted_split: Vec<bool> = (1..ft.rank())
            .map(|k| {
                let l = ft.label(k).expect("labeled");
                *l == RelationLabel::R1 || *l == RelationLabel::Rminus1 || *l == r_g2
            })
            .collect();
        r.check("PSL splits exactly R_1, R_-1, R_g^2", true, to_ft.is_some() && split == predicted_split);

        let m = m::build_m_scheme(&f)?;
        r.check("X(M(9)) classes", 4usize, m.d());
        let ft_to_m = ft.refinement_map(&m);
        let merged = ft_to_m.as_ref().is_some_and(|map| {
            let (cg, cg3) = (ft.class_of_label(&r_g), ft.class_of_label(&r_g3));
            let others = (1..ft.rank()).filter(|&k| Some(k) != cg && Some(k) != cg3);
            cg.zip(cg3).is_some_and(|(a, b)| map[a] == map[b])
                && others.map(|k| map[k]).collect::<alloc::collections::BTreeSet<_>>().len() == 3
        });
        r.check("M(9) rows: R_1, R_-1, R_g^2, R_g u R_g^3", true, merged);

        let pgl = pgammal::build_pgammal_scheme(&f)?;
        r.check("X(PGammaL(2,9)) = X(M(9))", true, pgl.equal_up_to_relabel(&m).is_some());

        fusion_edge(&mut r, "FT(10) fuses X(PSL(2,9))", &ft, &psl);
        fusion_edge(&mut r, "X(M(9)) fuses X(PSL(2,9))", &m, &psl);
        fusion_edge(&mut r, "X(M(9)) fuses FT(10)", &m, &ft);
        let t = triangular(10)?;
        fusion_edge(&mut r, "T(10) fuses FT(10)", &t, &ft);
        Ok(r)
    };
    run().unwrap_or_else(|e| TheoremReport::error(title, 9, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_domains_small() {
        for (q, group) in [(5u64, GroupId::Pgl), (9, GroupId::Psl), (9, GroupId::M), (7, GroupId::PGammaL)] {
            let f = Field::of_order(q).unwrap();
            let rep = three_domain_isomorphism(&f, group);
            assert!(rep.pass(), "{rep}");
        }
    }

    #[test]
    fn q9_diagram_and_chains() {
        let rep = q9_fusion_diagram();
        assert!(rep.pass(), "{rep}");
        for q in [5u64, 7, 9, 25] {
            let rep = fusion_chain(&Field::of_order(q).unwrap());
            assert!(rep.pass(), "{rep}");
        }
    }
}
