//! The full set of reports for one `q`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::domain::{Domain, DomainKind};
use crate::error::Result;
use crate::field::{Fe, Field};
use crate::geometry::{
    classify_line, conic_points, hyperbolic_line, incident, line_through, pairs, pole, quadratic_form, secant_pole,
    LineClass, ProjLine, ProjPoint1,
};
use crate::group::{embed_rho, generators, GroupId};
use crate::orbitals;
use crate::scheme::Verification;

use super::{ft, isomorphism, m, pgammal, psl, TheoremReport};

/// Orders verified by default.
pub const DEFAULT_ORDERS: [u32; 7] = [5, 7, 9, 11, 13, 25, 49];
/// Added by the deep run.
pub const DEEP_ORDERS: [u32; 1] = [81];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Job {
    Geometry,
    Embedding,
    Ft,
    PslCount,
    PslLabels,
    PslTranspose,
    MClasses,
    MCommutativity,
    M9Structure,
    PGammaL,
    Axioms(GroupId),
    ThreeDomain(GroupId),
    FusionChain,
    Q9Diagram,
}

impl fmt::Display for Job {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Job::Geometry => f.write_str("geometry"),
            Job::Embedding => f.write_str("embedding"),
            Job::Ft => f.write_str("ft"),
            Job::PslCount => f.write_str("psl-count"),
            Job::PslLabels => f.write_str("psl-labels"),
            Job::PslTranspose => f.write_str("psl-transpose"),
            Job::MClasses => f.write_str("m-classes"),
            Job::MCommutativity => f.write_str("m-commutativity"),
            Job::M9Structure => f.write_str("m9-structure"),
            Job::PGammaL => f.write_str("pgammal"),
            Job::Axioms(g) => write!(f, "axioms-{}", g.token()),
            Job::ThreeDomain(g) => write!(f, "three-domain-{}", g.token()),
            Job::FusionChain => f.write_str("fusion-chain"),
            Job::Q9Diagram => f.write_str("q9-diagram"),
        }
    }
}

/// The reports that apply at `q`, in a fixed order.
pub fn jobs(f: &Field) -> Vec<Job> {
    let q = f.q();
    let mut out = alloc::vec![Job::Geometry, Job::Embedding, Job::Ft, Job::PslCount, Job::PslLabels, Job::PslTranspose];
    let has_m = GroupId::M.is_defined_for(f);
    if has_m {
        out.push(Job::MClasses);
    }
    if has_m && matches!(q, 9 | 25 | 49 | 81) {
        out.push(Job::MCommutativity);
    }
    if q == 9 {
        out.push(Job::M9Structure);
    }
    out.push(Job::PGammaL);
    for g in GroupId::ALL {
        if g.is_defined_for(f) {
            out.push(Job::Axioms(g));
        }
    }
    if q <= 13 {
        for g in GroupId::ALL {
            if g.is_defined_for(f) {
                out.push(Job::ThreeDomain(g));
            }
        }
    }
    out.push(Job::FusionChain);
    if q == 9 {
        out.push(Job::Q9Diagram);
    }
    out
}

pub fn run(f: &Field, job: Job) -> TheoremReport {
    match job {
        Job::Geometry => geometry_report(f),
        Job::Embedding => embedding_report(f),
        Job::Ft => ft::report(f),
        Job::PslCount => match psl::psl_class_count(f) {
            Ok((_, r)) => r,
            Err(e) => TheoremReport::error("PSL(2,q) class count", f.q(), e),
        },
        Job::PslLabels => psl::labels_report(f),
        Job::PslTranspose => psl::psl_transpose_rules(f),
        Job::MClasses => m::report(f),
        Job::MCommutativity => m::m_commutativity_survey(f),
        Job::M9Structure => m::m9_structure(),
        Job::PGammaL => pgammal::report(f),
        Job::Axioms(g) => axioms_report(f, g),
        Job::ThreeDomain(g) => isomorphism::three_domain_isomorphism(f, g),
        Job::FusionChain => isomorphism::fusion_chain(f),
        Job::Q9Diagram => isomorphism::q9_fusion_diagram(),
    }
}

/// All applicable reports for `q`, sequentially.
pub fn verify(q: u64) -> Result<Vec<TheoremReport>> {
    let f = Field::of_order(q)?;
    Ok(jobs(&f).into_iter().map(|j| run(&f, j)).collect())
}

/// Axioms (i)-(iii) and the counting identities of X(G, Ω); exhaustive for `q <= 13`.
pub fn axioms_report(f: &Field, group: GroupId) -> TheoremReport {
    let q = f.q();
    let title = format!("{} scheme axioms", group.name());
    let mode = if q <= 13 { Verification::Exhaustive } else { Verification::Sampled };
    let run = || -> Result<()> {
        let s = orbitals::via_stabilizer(f, group, &Domain::new(f, DomainKind::Pairs))?;
        let p = s.intersection_numbers(mode)?;
        s.check_identities(&p)
    };
    let mut r = TheoremReport::new(title, q);
    let outcome = run();
    r.check(
        if mode == Verification::Exhaustive { "axioms, every pair" } else { "axioms, sampled pairs" },
        "ok",
        match outcome {
            Ok(()) => alloc::string::String::from("ok"),
            Err(e) => format!("{e}"),
        },
    );
    r
}

/// Conic, line classes and the closed forms of the poles of secants.
pub fn geometry_report(f: &Field) -> TheoremReport {
    let q = f.q();
    let qq = q as usize;
    let mut r = TheoremReport::new("conic and line classes", q);
    let conic = conic_points(f);
    r.check("|O| = q+1", qq + 1, conic.len());
    let mut collinear = false;
    for a in 0..conic.len() {
        for b in a + 1..conic.len() {
            let l = line_through(f, conic[a], conic[b]).expect("distinct");
            let on = conic.iter().filter(|&&p| incident(f, p, l)).count();
            collinear |= on != 2;
        }
    }
    r.check("no three conic points collinear", false, collinear);
    let mut counts = [0usize; 3];
    for l in ProjLine::all(q) {
        counts[classify_line(f, l) as usize] += 1;
    }
    r.check("|L+|, |L0|, |L-|", alloc::vec![qq * (qq + 1) / 2, qq + 1, qq * (qq - 1) / 2], counts.to_vec());
    let mut closed_forms = true;
    for pair in pairs(q) {
        let l = hyperbolic_line(f, pair.lo(), pair.hi()).expect("distinct");
        closed_forms &= classify_line(f, l) == LineClass::Hyperbolic;
        closed_forms &= pole(f, l) == secant_pole(f, pair);
        let xi = pair.lo().finite().expect("finite");
        let (v, expected) = match pair.hi() {
            ProjPoint1::Finite(gamma) => {
                let h = f.mul(f.sub(gamma, xi), f.half());
                ([f.mul(gamma, xi), f.mul(f.add(xi, gamma), f.half()), Fe::ONE], f.mul(h, h))
            }
            ProjPoint1::Infinity => ([f.mul(f.two(), xi), Fe::ONE, Fe::ZERO], Fe::ONE),
        };
        closed_forms &= quadratic_form(f, v) == expected;
    }
    r.check("Q of secant poles: ((γ-ξ)/2)^2 and 1", true, closed_forms);
    r
}

/// ρ on generators: determinant, equivariance, and the conic fixed.
pub fn embedding_report(f: &Field) -> TheoremReport {
    let q = f.q();
    let mut r = TheoremReport::new("embedding into PGammaL(3,q)", q);
    let gens = match generators(f, GroupId::PGammaL) {
        Ok(g) => g,
        Err(e) => return TheoremReport::error("embedding into PGammaL(3,q)", q, e),
    };
    let mut conic = conic_points(f);
    conic.sort();
    let mut det_ok = true;
    let mut equivariant = true;
    let mut fixes_conic = true;
    for g in &gens {
        let rho = embed_rho(f, g);
        let d = g.det(f);
        det_ok &= rho.det(f) == f.mul(d, f.mul(d, d));
        for x in crate::geometry::line_points(f) {
            let lhs = crate::geometry::conic_param(f, g.apply(f, x));
            equivariant &= lhs == rho.apply_point(f, crate::geometry::conic_param(f, x));
        }
        let mut image: Vec<_> = conic.iter().map(|&p| rho.apply_point(f, p)).collect();
        image.sort();
        fixes_conic &= image == conic;
    }
    r.check("det rho(A) = det(A)^3", true, det_ok);
    r.check("f(A(x)) = rho(A) f(x)", true, equivariant);
    r.check("rho fixes the conic", true, fixes_conic);
    r
}
