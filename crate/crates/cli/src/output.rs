//! Rendering of listings and reports in the three output formats.

use std::io::{self, Write};

use parideal::irreducible::Classification;
use parideal::poset::{NodeSet, RootSet};
use parideal::report::{SuiteReport, SCHEMA};
use parideal::rootsys::format_epsilon;
use parideal::RootSystem;
use serde::Serialize;
use serde_json::json;

use crate::Format;

fn write_json(out: &mut dyn Write, value: &impl Serialize) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

fn write_csv<T: Serialize>(out: &mut dyn Write, rows: &[T]) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r).map_err(io::Error::other)?;
    }
    w.flush()
}

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn roots_text(rs: &RootSystem, s: &RootSet) -> String {
    s.iter()
        .map(|a| rs.root(a).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Serialize)]
struct RootRow {
    coeffs: String,
    height: i32,
    epsilon: Option<String>,
    highest: bool,
}

pub fn roots(
    out: &mut dyn Write,
    format: Format,
    rs: &RootSystem,
    epsilon: bool,
) -> io::Result<()> {
    let eps = |a: usize| -> Option<String> {
        (epsilon && rs.family().is_classical())
            .then(|| rs.to_epsilon(rs.root(a)).ok().map(|v| format_epsilon(&v)))
            .flatten()
    };
    let spec = rs.spec();
    match format {
        Format::Json => {
            let roots: Vec<_> = rs
                .positive_ids()
                .map(|a| {
                    json!({
                        "coeffs": rs.coeffs(a),
                        "height": rs.height(a),
                        "epsilon": eps(a),
                        "highest": a == rs.theta(),
                    })
                })
                .collect();
            write_json(
                out,
                &json!({
                    "schema": SCHEMA,
                    "type": spec.family.letter().to_string(),
                    "rank": spec.rank,
                    "count": rs.num_positive(),
                    "theta": rs.theta_root().coeffs(),
                    "roots": roots,
                }),
            )
        }
        Format::Csv => {
            let rows: Vec<RootRow> = rs
                .positive_ids()
                .map(|a| RootRow {
                    coeffs: rs.root(a).to_string(),
                    height: rs.height(a),
                    epsilon: eps(a),
                    highest: a == rs.theta(),
                })
                .collect();
            write_csv(out, &rows)
        }
        Format::Pretty => {
            writeln!(out, "{spec}: {} positive roots", rs.num_positive())?;
            for a in rs.positive_ids() {
                let mut line = format!("{:<20} ht {:>2}", rs.root(a).to_string(), rs.height(a));
                if let Some(e) = eps(a) {
                    line.push_str(&format!("  {e}"));
                }
                if a == rs.theta() {
                    line.push_str("  θ");
                }
                writeln!(out, "{}", line.trim_end())?;
            }
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct AntichainRow {
    index: usize,
    size: usize,
    roots: String,
}

pub fn antichains(
    out: &mut dyn Write,
    format: Format,
    rs: &RootSystem,
    j: &NodeSet,
    abelian: bool,
    size: Option<usize>,
    list: &[RootSet],
) -> io::Result<()> {
    let spec = rs.spec();
    match format {
        Format::Json => write_json(
            out,
            &json!({
                "schema": SCHEMA,
                "type": spec.family.letter().to_string(),
                "rank": spec.rank,
                "J": j,
                "abelian": abelian,
                "size": size,
                "count": list.len(),
                "antichains": list.iter().map(|a| a.to_json(rs)).collect::<Vec<_>>(),
            }),
        ),
        Format::Csv => {
            let rows: Vec<AntichainRow> = list
                .iter()
                .enumerate()
                .map(|(index, a)| AntichainRow {
                    index,
                    size: a.len(),
                    roots: roots_text(rs, a),
                })
                .collect();
            write_csv(out, &rows)
        }
        Format::Pretty => {
            for a in list {
                if a.is_empty() {
                    writeln!(out, "∅")?;
                } else {
                    writeln!(out, "{}", a.display(rs))?;
                }
            }
            writeln!(out, "count: {}", list.len())
        }
    }
}

#[derive(Serialize)]
struct ClaimRow<'a> {
    claim: &'a str,
    instances_checked: u64,
    failure_count: u64,
    passed: bool,
}

pub fn report(out: &mut dyn Write, format: Format, report: &SuiteReport) -> io::Result<()> {
    match format {
        Format::Json => write_json(out, report),
        Format::Csv => {
            let rows: Vec<ClaimRow> = report
                .claims
                .iter()
                .map(|c| ClaimRow {
                    claim: &c.claim,
                    instances_checked: c.instances_checked,
                    failure_count: c.failure_count,
                    passed: c.passed(),
                })
                .collect();
            write_csv(out, &rows)
        }
        Format::Pretty => {
            let verdict = if report.passed { "PASS" } else { "FAIL" };
            writeln!(
                out,
                "suite {} on {}: {verdict}",
                report.suite, report.system
            )?;
            for c in &report.claims {
                let v = if c.passed() { "PASS" } else { "FAIL" };
                writeln!(
                    out,
                    "  {v} {} ({} checked, {} failed)",
                    c.claim, c.instances_checked, c.failure_count
                )?;
                for f in &c.failures {
                    writeln!(out, "       counterexample: {f}")?;
                }
            }
            for n in &report.notes {
                writeln!(out, "  note: {n}")?;
            }
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct ClassRow {
    family: String,
    #[serde(rename = "I")]
    i_set: String,
    #[serde(rename = "J")]
    j_set: String,
    size: usize,
    two_rho: String,
    two_rho_epsilon: Option<String>,
    all_conditions: bool,
    roots: String,
}

pub fn classification(
    out: &mut dyn Write,
    format: Format,
    rs: &RootSystem,
    c: &Classification,
) -> io::Result<()> {
    let spec = rs.spec();
    match format {
        Format::Json => write_json(
            out,
            &json!({
                "schema": SCHEMA,
                "type": spec.family.letter().to_string(),
                "rank": spec.rank,
                "count": c.sets.len(),
                "passed": c.claims.iter().all(|r| r.passed()),
                "claims": c.claims,
                "notes": c.notes,
                "sets": c.sets.iter().map(|x| x.to_json(rs)).collect::<Vec<_>>(),
            }),
        ),
        Format::Csv => {
            let rows: Vec<ClassRow> = c
                .sets
                .iter()
                .map(|x| ClassRow {
                    family: x.family.clone(),
                    i_set: join(&x.i_set),
                    j_set: join(&x.j_set),
                    size: x.roots.len(),
                    two_rho: x.two_rho.to_string(),
                    two_rho_epsilon: x.two_rho_epsilon.as_ref().map(|v| format_epsilon(v)),
                    all_conditions: x.all_conditions,
                    roots: roots_text(rs, &x.roots),
                })
                .collect();
            write_csv(out, &rows)
        }
        Format::Pretty => {
            for x in &c.sets {
                let mut line = format!(
                    "{:<7} |S| = {:<3} 2ρ_S = {}",
                    x.family,
                    x.roots.len(),
                    x.two_rho
                );
                if let Some(e) = &x.two_rho_epsilon {
                    line.push_str(&format!(" = {}", format_epsilon(e)));
                }
                if !x.i_set.is_empty() || !x.j_set.is_empty() {
                    line.push_str(&format!(
                        "  I = {{{}}} J = {{{}}}",
                        join(&x.i_set),
                        join(&x.j_set)
                    ));
                }
                writeln!(out, "{line}")?;
                writeln!(out, "        {}", x.roots.display(rs))?;
            }
            writeln!(out, "count: {}", c.sets.len())?;
            for r in c.claims.iter().filter(|r| !r.passed()) {
                writeln!(out, "FAIL {} ({} failures)", r.claim, r.failure_count)?;
            }
            Ok(())
        }
    }
}
