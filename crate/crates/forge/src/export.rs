//! Serialized forms. Every document carries `schema: 1`; field elements are
//! coefficient vectors, constant term first.

use std::io::Write;

use serde::Serialize;

use scheme_forge_core::domain::DomainElement;
use scheme_forge_core::paper::{TheoremReport, Value};
use scheme_forge_core::scheme::Verification;
use scheme_forge_core::{Fe, Field, GroupId, Moebius, Pair, ProjPoint1, Scheme};

use crate::build::{Built, Route};
use crate::error::Result;

pub const SCHEMA: u32 = 1;

pub fn element(f: &Field, x: Fe) -> Vec<u32> {
    f.coeffs(x)
}

pub fn point1(f: &Field, x: ProjPoint1) -> String {
    match x {
        ProjPoint1::Finite(v) => f.display(v),
        ProjPoint1::Infinity => "inf".to_string(),
    }
}

pub fn pair(f: &Field, p: Pair) -> String {
    format!("{{{},{}}}", point1(f, p.lo()), point1(f, p.hi()))
}

pub fn triple(f: &Field, v: [Fe; 3]) -> String {
    format!("({} : {} : {})", f.display(v[0]), f.display(v[1]), f.display(v[2]))
}

/// Dual coordinates of a line.
pub fn line(f: &Field, v: [Fe; 3]) -> String {
    format!("[{}, {}, {}]", f.display(v[0]), f.display(v[1]), f.display(v[2]))
}

fn label_strings(f: &Field, s: &Scheme) -> Vec<Option<String>> {
    s.labels().iter().map(|l| l.as_ref().map(|l| l.render(f))).collect()
}

#[derive(Serialize)]
pub struct SchemeDoc {
    pub schema: u32,
    pub q: u32,
    pub modulus: Vec<u32>,
    pub group: &'static str,
    pub domain: &'static str,
    pub n: usize,
    pub d: usize,
    pub valencies: Vec<usize>,
    pub transpose_map: Vec<u16>,
    pub symmetric: bool,
    pub commutative: bool,
    pub labels: Vec<Option<String>>,
    /// Least `(x, y)` in row-major order for each class.
    pub representatives: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_tensor: Option<Vec<Vec<Vec<u32>>>>,
}

impl SchemeDoc {
    pub fn new(b: &Built, with_tensor: bool) -> Self {
        let s = &b.scheme;
        let rank = s.rank();
        SchemeDoc {
            schema: SCHEMA,
            q: b.field.q(),
            modulus: b.field.spec().modulus().to_vec(),
            group: b.group.token(),
            domain: b.domain.kind().token(),
            n: s.n(),
            d: s.d(),
            valencies: s.valencies().to_vec(),
            transpose_map: s.transpose_map().to_vec(),
            symmetric: s.is_symmetric(),
            commutative: b.commutative(),
            labels: label_strings(&b.field, s),
            representatives: (0..rank).map(|k| s.representative(k).into()).collect(),
            // p_tensor[k][i][j] = p^k_{ij}
            p_tensor: with_tensor.then(|| {
                (0..rank).map(|k| (0..rank).map(|i| (0..rank).map(|j| b.p.get(k, i, j)).collect()).collect()).collect()
            }),
        }
    }
}

/// Rows `i,k,j0..jd` holding `B_i = (p^k_{ij})_{k,j}`.
pub fn write_csv_matrices(b: &Built, w: impl Write) -> Result<()> {
    let rank = b.scheme.rank();
    let mut out = csv::Writer::from_writer(w);
    let mut header = vec!["i".to_string(), "k".to_string()];
    header.extend((0..rank).map(|j| format!("j{j}")));
    out.write_record(&header)?;
    for i in 0..rank {
        for (k, row) in b.p.matrix(i).into_iter().enumerate() {
            let mut rec = vec![i.to_string(), k.to_string()];
            rec.extend(row.iter().map(u32::to_string));
            out.write_record(&rec)?;
        }
    }
    out.flush()?;
    Ok(())
}

/// `M(9)`, `PSL(2,7)` and so on.
pub fn group_name(g: GroupId, q: u32) -> String {
    g.name().replace('q', &q.to_string())
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn describe_element(b: &Built, i: usize) -> String {
    let f = &b.field;
    match b.domain.element(i) {
        DomainElement::Pair(p) => pair(f, p),
        DomainElement::Line(l) => line(f, l.coords()),
        DomainElement::Point(p) => triple(f, p.coords()),
    }
}

pub fn write_summary(b: &Built, mut w: impl Write) -> Result<()> {
    let s = &b.scheme;
    writeln!(w, "X({}) on {}", group_name(b.group, b.field.q()), b.domain.kind())?;
    writeln!(w, "n = {}, d = {}", s.n(), s.d())?;
    let v: Vec<String> = s.valencies().iter().map(usize::to_string).collect();
    writeln!(w, "valencies: {}", v.join(" "))?;
    writeln!(w, "symmetric: {}", yes(s.is_symmetric()))?;
    writeln!(w, "commutative: {}", yes(b.commutative()))?;
    let route = match b.route {
        Route::Stabilizer => "stabilizer orbits",
        Route::Generic => "generic orbitals",
    };
    let mode = match b.mode {
        Verification::Sampled => "on sampled pairs",
        Verification::Exhaustive => "on every pair",
    };
    writeln!(w, "route: {route}, axioms checked {mode}")?;
    // examples from the row of {0,∞} when the domain has one
    let base = b.domain.index_of_pair(&b.field, Pair::base());
    writeln!(w, "classes:")?;
    for k in 0..s.rank() {
        let label = s.label(k).map(|l| l.render(&b.field)).unwrap_or_else(|| format!("class {k}"));
        let (x, y) = match base {
            Some(x) => (x, (0..s.n()).find(|&y| s.class(x, y) == k).expect("every class meets every row")),
            None => s.representative(k),
        };
        writeln!(
            w,
            "  {k:>3}  {label:<28} valency {:<5} transpose {:<3} e.g. {} ~ {}",
            s.valencies()[k],
            s.transpose(k),
            describe_element(b, x),
            describe_element(b, y)
        )?;
    }
    Ok(())
}

#[derive(Serialize)]
pub struct MoebiusDoc {
    pub matrix: [Vec<u32>; 4],
    pub frob: u32,
}

impl MoebiusDoc {
    pub fn new(f: &Field, g: &Moebius) -> Self {
        MoebiusDoc { matrix: g.matrix().map(|x| element(f, x)), frob: g.frobenius_exponent() }
    }
}

fn value_json(v: &Value) -> serde_json::Value {
    match v {
        Value::Int(x) => (*x).into(),
        Value::Bool(x) => (*x).into(),
        Value::Ints(x) => x.clone().into(),
        Value::Text(x) => x.clone().into(),
    }
}

#[derive(Serialize)]
pub struct CheckDoc {
    pub name: String,
    pub predicted: serde_json::Value,
    pub computed: serde_json::Value,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct ReportDoc {
    pub q: u32,
    pub job: String,
    pub theorem: String,
    pub pass: bool,
    pub checks: Vec<CheckDoc>,
    pub notes: Vec<String>,
}

impl ReportDoc {
    pub fn new(job: String, r: &TheoremReport) -> Self {
        ReportDoc {
            q: r.q,
            job,
            theorem: r.theorem.clone(),
            pass: r.pass(),
            checks: r
                .checks
                .iter()
                .map(|c| CheckDoc {
                    name: c.name.clone(),
                    predicted: value_json(&c.predicted),
                    computed: value_json(&c.computed),
                    pass: c.pass(),
                })
                .collect(),
            notes: r.notes.clone(),
        }
    }
}

#[derive(Serialize, Debug, PartialEq, Eq)]
pub struct FailureDoc {
    pub q: u32,
    pub job: String,
    pub check: String,
}

#[derive(Serialize)]
pub struct TimingDoc {
    pub q: u32,
    pub job: String,
    pub elapsed_ms: u128,
}

#[derive(Serialize)]
pub struct VerifyDoc {
    pub schema: u32,
    pub orders: Vec<u32>,
    pub pass: bool,
    pub reports: Vec<ReportDoc>,
    pub failures: Vec<FailureDoc>,
    /// Wall-clock data, present only on request so that the rest stays
    /// byte-identical between runs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Vec<TimingDoc>>,
}
