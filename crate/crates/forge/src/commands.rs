//! One function per subcommand. Each writes its data to `out` (or the
//! `--out` file) and returns whether everything it checked passed.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use scheme_forge_core::geometry::{
    classify_line, classify_point, conic_points, conic_preimage, polar_line, secant_pair,
};
use scheme_forge_core::group::{base_pair_stabilizer, generators};
use scheme_forge_core::paper::suite::{self, Job, DEEP_ORDERS, DEFAULT_ORDERS};
use scheme_forge_core::paper::{ft, TheoremReport};
use scheme_forge_core::scheme::{is_fusion, triangular};
use scheme_forge_core::{Field, GroupId, LineClass, ProjLine, ProjPoint2, Scheme};

use crate::build::{build_scheme, labeled_pairs_scheme};
use crate::cache::Cache;
use crate::config::{field_for, Format, RunConfig};
use crate::error::{ForgeError, Result};
use crate::export::{self, FailureDoc, MoebiusDoc, ReportDoc, SchemeDoc, TimingDoc, VerifyDoc, SCHEMA};

/// Where a command's data goes.
#[derive(Debug, Clone, Default)]
pub struct Output<'a> {
    pub format: Format,
    pub path: Option<&'a Path>,
}

impl Output<'_> {
    fn emit(&self, stdout: &mut dyn Write, render: impl FnOnce(&mut dyn Write) -> Result<()>) -> Result<()> {
        match self.path {
            Some(path) => {
                let mut w = BufWriter::new(File::create(path)?);
                render(&mut w)?;
                w.flush()?;
                Ok(())
            }
            None => render(stdout),
        }
    }

    fn json(&self, stdout: &mut dyn Write, doc: &impl Serialize) -> Result<()> {
        self.emit(stdout, |w| {
            serde_json::to_writer_pretty(&mut *w, doc)?;
            writeln!(w)?;
            Ok(())
        })
    }
}

fn csv_rows(w: &mut dyn Write, header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(header)?;
    for row in rows {
        out.write_record(&row)?;
    }
    out.flush()?;
    Ok(())
}

pub fn cmd_build(cfg: &RunConfig, cache: &Cache, stdout: &mut dyn Write) -> Result<bool> {
    let b = build_scheme(cfg, cache)?;
    for w in &b.warnings {
        eprintln!("warning: {w}");
    }
    let output = Output { format: cfg.format, path: cfg.out.as_deref() };
    if output.path.is_some() {
        export::write_summary(&b, &mut *stdout)?;
    }
    match cfg.format {
        Format::Text => output.emit(stdout, |w| export::write_summary(&b, w)),
        Format::Json => output.json(stdout, &SchemeDoc::new(&b, cfg.p_tensor)),
        Format::Csv => output.emit(stdout, |w| export::write_csv_matrices(&b, w)),
    }?;
    Ok(true)
}

#[derive(Serialize)]
struct ClassDoc {
    class: usize,
    label: String,
    valency: usize,
    transpose: usize,
    transpose_label: String,
    /// The pairs `y` with `({0,∞}, y)` in the class.
    pairs: Vec<String>,
}

#[derive(Serialize)]
struct LabelsDoc {
    schema: u32,
    q: u32,
    group: &'static str,
    d: usize,
    classes: Vec<ClassDoc>,
}

pub fn cmd_labels(f: &Field, group: GroupId, cache: &Cache, output: &Output, stdout: &mut dyn Write) -> Result<bool> {
    if !group.is_defined_for(f) {
        return Err(ForgeError::Usage(format!("{group} is not defined for q = {}", f.q())));
    }
    let (domain, s) = labeled_pairs_scheme(f, group, cache)?;
    let base = domain.index_of_pair(f, scheme_forge_core::Pair::base()).expect("base pair");
    let render = |k: usize| s.label(k).map(|l| l.render(f)).unwrap_or_default();
    let classes: Vec<ClassDoc> = (0..s.rank())
        .map(|k| ClassDoc {
            class: k,
            label: render(k),
            valency: s.valencies()[k],
            transpose: s.transpose(k),
            transpose_label: render(s.transpose(k)),
            pairs: (0..domain.len())
                .filter(|&y| s.class(base, y) == k)
                .map(|y| export::pair(f, domain.pair_of(f, y).expect("pair")))
                .collect(),
        })
        .collect();
    match output.format {
        Format::Json => {
            output.json(stdout, &LabelsDoc { schema: SCHEMA, q: f.q(), group: group.token(), d: s.d(), classes })
        }
        Format::Csv => output.emit(stdout, |w| {
            csv_rows(
                w,
                &["class", "label", "valency", "transpose", "representative"],
                classes.iter().map(|c| {
                    vec![
                        c.class.to_string(),
                        c.label.clone(),
                        c.valency.to_string(),
                        c.transpose_label.clone(),
                        c.pairs[0].clone(),
                    ]
                }),
            )
        }),
        Format::Text => output.emit(stdout, |w| {
            writeln!(w, "X({}) on pairs, d = {}", export::group_name(group, f.q()), s.d())?;
            for c in &classes {
                let more = c.pairs.len() - 1;
                let tail = if more > 0 { format!(" (+{more} more)") } else { String::new() };
                writeln!(
                    w,
                    "  {:<28} k = {:<5} transpose {:<28} e.g. {{0,inf}} ~ {}{tail}",
                    c.label, c.valency, c.transpose_label, c.pairs[0]
                )?;
            }
            Ok(())
        }),
    }?;
    Ok(true)
}

/// Which orders `verify paper` runs.
#[derive(Debug, Clone, Default)]
pub struct VerifyPlan {
    pub orders: Vec<u64>,
    pub all_q: bool,
    pub deep: bool,
    pub modulus: Option<Vec<u32>>,
    pub allow_large: bool,
    pub timings: bool,
}

impl VerifyPlan {
    pub fn fields(&self) -> Result<Vec<Field>> {
        let mut orders: Vec<u64> = self.orders.clone();
        if self.all_q {
            orders.extend(DEFAULT_ORDERS.iter().map(|&q| q as u64));
        }
        if self.deep {
            orders.extend(DEEP_ORDERS.iter().map(|&q| q as u64));
        }
        orders.sort_unstable();
        orders.dedup();
        if orders.is_empty() {
            return Err(ForgeError::Usage("nothing to verify: pass --q, --all-q or --deep".into()));
        }
        if self.modulus.is_some() && orders.len() != 1 {
            return Err(ForgeError::Usage("--modulus applies to a single --q".into()));
        }
        orders.into_iter().map(|q| field_for(q, self.modulus.as_deref(), self.allow_large)).collect()
    }
}

/// Every applicable report for every field, run in parallel and returned in
/// (q, job) order together with their wall-clock times.
pub fn run_reports(fields: &[Field]) -> Vec<(Job, TheoremReport)> {
    let work: Vec<(&Field, Job)> =
        fields.iter().flat_map(|f| suite::jobs(f).into_iter().map(move |j| (f, j))).collect();
    work.into_par_iter()
        .map(|(f, job)| {
            let start = Instant::now();
            let mut r = suite::run(f, job);
            r.elapsed = Some(start.elapsed());
            (job, r)
        })
        .collect()
}

pub fn cmd_verify(plan: &VerifyPlan, output: &Output, stdout: &mut dyn Write) -> Result<bool> {
    let fields = plan.fields()?;
    let reports = run_reports(&fields);
    let failures: Vec<FailureDoc> = reports
        .iter()
        .flat_map(|(job, r)| {
            r.failures().map(move |c| FailureDoc {
                q: r.q,
                job: job.to_string(),
                check: format!("{}: predicted {}, computed {}", c.name, c.predicted, c.computed),
            })
        })
        .collect();
    let pass = failures.is_empty();
    for fail in &failures {
        eprintln!("FAIL q={} {}: {}", fail.q, fail.job, fail.check);
    }
    if plan.timings && output.format != Format::Json {
        for (job, r) in &reports {
            eprintln!("time q={} {job}: {:.3}s", r.q, r.elapsed.unwrap_or_default().as_secs_f64());
        }
    }
    match output.format {
        Format::Json => {
            let doc = VerifyDoc {
                schema: SCHEMA,
                orders: fields.iter().map(Field::q).collect(),
                pass,
                reports: reports.iter().map(|(job, r)| ReportDoc::new(job.to_string(), r)).collect(),
                failures,
                timings: plan.timings.then(|| {
                    reports
                        .iter()
                        .map(|(job, r)| TimingDoc {
                            q: r.q,
                            job: job.to_string(),
                            elapsed_ms: r.elapsed.unwrap_or_default().as_millis(),
                        })
                        .collect()
                }),
            };
            output.json(stdout, &doc)
        }
        Format::Csv => output.emit(stdout, |w| {
            csv_rows(
                w,
                &["q", "job", "theorem", "check", "predicted", "computed", "pass"],
                reports.iter().flat_map(|(job, r)| {
                    r.checks.iter().map(move |c| {
                        vec![
                            r.q.to_string(),
                            job.to_string(),
                            r.theorem.clone(),
                            c.name.clone(),
                            c.predicted.to_string(),
                            c.computed.to_string(),
                            c.pass().to_string(),
                        ]
                    })
                }),
            )
        }),
        Format::Text => output.emit(stdout, |w| {
            for (_, r) in &reports {
                write!(w, "{r}")?;
            }
            let failed = reports.iter().filter(|(_, r)| !r.pass()).count();
            writeln!(w, "{} reports, {} failed", reports.len(), failed)?;
            Ok(())
        }),
    }?;
    Ok(pass)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum GeometryPart {
    Conic,
    Lines,
    Points,
}

fn class_name(c: LineClass) -> &'static str {
    match c {
        LineClass::Hyperbolic => "hyperbolic",
        LineClass::Tangent => "tangent",
        LineClass::Elliptic => "elliptic",
    }
}

#[derive(Serialize)]
struct GeometryItem {
    index: usize,
    coords: [Vec<u32>; 3],
    class: &'static str,
    /// Conic parameter, secant pair or polar line, depending on the dump.
    #[serde(skip_serializing_if = "Option::is_none")]
    related: Option<String>,
}

#[derive(Serialize)]
struct GeometryDoc {
    schema: u32,
    q: u32,
    what: &'static str,
    items: Vec<GeometryItem>,
}

pub fn cmd_geometry(f: &Field, what: GeometryPart, output: &Output, stdout: &mut dyn Write) -> Result<bool> {
    let q = f.q();
    let coords = |v: [scheme_forge_core::Fe; 3]| v.map(|x| export::element(f, x));
    let (name, items, shown): (&str, Vec<GeometryItem>, Vec<String>) = match what {
        GeometryPart::Conic => {
            let pts = conic_points(f);
            let shown = pts.iter().map(|p| export::triple(f, p.coords())).collect();
            let items = pts
                .iter()
                .map(|&p| GeometryItem {
                    index: p.index(q),
                    coords: coords(p.coords()),
                    class: "conic",
                    related: conic_preimage(f, p).map(|x| export::point1(f, x)),
                })
                .collect();
            ("conic", items, shown)
        }
        GeometryPart::Lines => {
            let lines: Vec<ProjLine> = ProjLine::all(q).collect();
            let shown = lines.iter().map(|l| export::line(f, l.coords())).collect();
            let items = lines
                .iter()
                .map(|&l| GeometryItem {
                    index: l.index(q),
                    coords: coords(l.coords()),
                    class: class_name(classify_line(f, l)),
                    related: secant_pair(f, l).map(|p| export::pair(f, p)),
                })
                .collect();
            ("lines", items, shown)
        }
        GeometryPart::Points => {
            let pts: Vec<ProjPoint2> = ProjPoint2::all(q).collect();
            let shown = pts.iter().map(|p| export::triple(f, p.coords())).collect();
            let items = pts
                .iter()
                .map(|&p| GeometryItem {
                    index: p.index(q),
                    coords: coords(p.coords()),
                    class: class_name(classify_point(f, p)),
                    related: Some(export::line(f, polar_line(f, p).coords())),
                })
                .collect();
            ("points", items, shown)
        }
    };
    let related_name = match what {
        GeometryPart::Conic => "parameter",
        GeometryPart::Lines => "secant pair",
        GeometryPart::Points => "polar",
    };
    match output.format {
        Format::Json => output.json(stdout, &GeometryDoc { schema: SCHEMA, q, what: name, items }),
        Format::Csv => output.emit(stdout, |w| {
            csv_rows(
                w,
                &["index", "coords", "class", related_name],
                items.iter().zip(&shown).map(|(it, s)| {
                    vec![it.index.to_string(), s.clone(), it.class.to_string(), it.related.clone().unwrap_or_default()]
                }),
            )
        }),
        Format::Text => output.emit(stdout, |w| {
            writeln!(w, "{name} of PG(2,{q}): {} entries", items.len())?;
            for (it, s) in items.iter().zip(&shown) {
                let rel = it.related.as_ref().map(|r| format!("  {related_name} {r}")).unwrap_or_default();
                writeln!(w, "  {:>5}  {s:<24} {}{rel}", it.index, it.class)?;
            }
            Ok(())
        }),
    }?;
    Ok(true)
}

#[derive(Serialize)]
struct GroupDoc {
    schema: u32,
    q: u32,
    group: &'static str,
    name: &'static str,
    order: u64,
    base_pair_stabilizer: usize,
    generators: Vec<MoebiusDoc>,
}

pub fn cmd_group(f: &Field, group: GroupId, output: &Output, stdout: &mut dyn Write) -> Result<bool> {
    let gens = generators(f, group)?;
    let stab = base_pair_stabilizer(f, group)?.len();
    let order = group.order(f.q() as u64, f.m());
    let show = |g: &scheme_forge_core::Moebius| {
        let [a, b, c, d] = g.matrix().map(|x| f.display(x));
        (a, b, c, d, g.frobenius_exponent())
    };
    match output.format {
        Format::Json => output.json(
            stdout,
            &GroupDoc {
                schema: SCHEMA,
                q: f.q(),
                group: group.token(),
                name: group.name(),
                order,
                base_pair_stabilizer: stab,
                generators: gens.iter().map(|g| MoebiusDoc::new(f, g)).collect(),
            },
        ),
        Format::Csv => output.emit(stdout, |w| {
            csv_rows(
                w,
                &["a", "b", "c", "d", "frob"],
                gens.iter().map(|g| {
                    let (a, b, c, d, j) = show(g);
                    vec![a, b, c, d, j.to_string()]
                }),
            )
        }),
        Format::Text => output.emit(stdout, |w| {
            writeln!(w, "{}", export::group_name(group, f.q()))?;
            writeln!(w, "order: {order}")?;
            writeln!(w, "stabilizer of {{0,inf}}: {stab}")?;
            writeln!(w, "generators, x -> (a x^(p^j) + b)/(c x^(p^j) + d):")?;
            for g in &gens {
                let (a, b, c, d, j) = show(g);
                writeln!(w, "  [{a} {b}; {c} {d}] j = {j}")?;
            }
            Ok(())
        }),
    }?;
    Ok(true)
}

/// A scheme on Ω that `fusion check` can compare.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SchemeName {
    /// The triangular scheme T(q+1).
    T,
    /// FT(q+1) from cross-ratio classes.
    Ft,
    Pgl,
    Psl,
    M,
    Pgammal,
}

impl SchemeName {
    fn build(self, f: &Field, cache: &Cache) -> Result<Scheme> {
        let group = match self {
            SchemeName::T => return Ok(triangular(f.q() as usize + 1)?),
            SchemeName::Ft => return Ok(ft::build_ft(f)?),
            SchemeName::Pgl => GroupId::Pgl,
            SchemeName::Psl => GroupId::Psl,
            SchemeName::M => GroupId::M,
            SchemeName::Pgammal => GroupId::PGammaL,
        };
        if !group.is_defined_for(f) {
            return Err(ForgeError::Usage(format!("{group} is not defined for q = {}", f.q())));
        }
        Ok(labeled_pairs_scheme(f, group, cache)?.1)
    }

    fn token(self) -> &'static str {
        match self {
            SchemeName::T => "t",
            SchemeName::Ft => "ft",
            SchemeName::Pgl => "pgl",
            SchemeName::Psl => "psl",
            SchemeName::M => "m",
            SchemeName::Pgammal => "pgammal",
        }
    }
}

#[derive(Serialize)]
struct FusionDoc {
    schema: u32,
    q: u32,
    coarse: &'static str,
    fine: &'static str,
    is_fusion: bool,
    /// Coarse class of each fine class.
    #[serde(skip_serializing_if = "Option::is_none")]
    partition: Option<Vec<usize>>,
}

pub fn cmd_fusion(
    f: &Field,
    coarse: SchemeName,
    fine: SchemeName,
    cache: &Cache,
    output: &Output,
    stdout: &mut dyn Write,
) -> Result<bool> {
    let c = coarse.build(f, cache)?;
    let s = fine.build(f, cache)?;
    let map = s.refinement_map(&c);
    let ok = map.as_ref().is_some_and(|m| is_fusion(&c, &s, m));
    match output.format {
        Format::Json => output.json(
            stdout,
            &FusionDoc {
                schema: SCHEMA,
                q: f.q(),
                coarse: coarse.token(),
                fine: fine.token(),
                is_fusion: ok,
                partition: map,
            },
        ),
        Format::Csv => output.emit(stdout, |w| {
            csv_rows(
                w,
                &["fine_class", "coarse_class"],
                map.iter().flatten().enumerate().map(|(i, k)| vec![i.to_string(), k.to_string()]),
            )
        }),
        Format::Text => output.emit(stdout, |w| {
            writeln!(
                w,
                "{} (d = {}) is {}a fusion of {} (d = {}) at q = {}",
                coarse.token(),
                c.d(),
                if ok { "" } else { "not " },
                fine.token(),
                s.d(),
                f.q()
            )?;
            if let (true, Some(m)) = (ok, &map) {
                for k in 0..c.rank() {
                    let parts: Vec<String> = (0..s.rank())
                        .filter(|&i| m[i] == k)
                        .map(|i| s.label(i).map(|l| l.render(f)).unwrap_or_else(|| i.to_string()))
                        .collect();
                    let name = c.label(k).map(|l| l.render(f)).unwrap_or_else(|| format!("class {k}"));
                    writeln!(w, "  {name} = {}", parts.join(" u "))?;
                }
            }
            Ok(())
        }),
    }?;
    Ok(ok)
}
