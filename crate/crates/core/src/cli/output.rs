//! Rendering of command results as plain text, JSON lines or CSV.

use std::io::Write;

use serde_json::json;

use super::{CliError, Format};
use crate::field::RootOfUnityField;
use crate::groups::{GroupId, GroupTable};
use crate::invariants::{Census, Char2Dims};
use crate::irreps::{IrrepTable, TableData};
use crate::repspace::RepSpec;
use crate::verify::{FormRecord, VerifyReport};

const GENERATOR_NAMES: [&str; 3] = ["a", "b", "c"];

fn join(v: &[usize]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn pad_table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut s = String::new();
    for r in rows {
        let line: Vec<String> = r.iter().zip(&widths).map(|(cell, w)| format!("{cell:<w$}")).collect();
        s.push_str(line.join("  ").trim_end());
        s.push('\n');
    }
    s
}

pub(super) fn tables<F: RootOfUnityField>(
    field: F,
    groups: &[GroupId],
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    for &id in groups {
        let group = GroupTable::build(id);
        let data = TableData::printed(id);
        let table = IrrepTable::new(id, field.clone());
        let chars = table.character_table(&group);
        let names: Vec<String> = (0..group.order()).map(|g| group.element_name(g)).collect();
        match format {
            Format::Plain => {
                writeln!(out, "{id} over {}", field.name())?;
                let mut rows = vec![std::iter::once(String::new())
                    .chain((1..=data.irreps.len()).map(|i| format!("ρ{i}")))
                    .collect()];
                for g in 0..id.generator_count() {
                    let mut row = vec![GENERATOR_NAMES[g].to_string()];
                    for (irrep, inst) in data.irreps.iter().zip(&table.irreps) {
                        let printed: Vec<String> = irrep.images[g].iter().map(ToString::to_string).collect();
                        let cell = if irrep.degree == 1 {
                            printed[0].clone()
                        } else {
                            format!(
                                "[{}; {}] = {}",
                                printed[..2].join(" "),
                                printed[2..].join(" "),
                                inst.generator_images[g]
                            )
                        };
                        row.push(cell);
                    }
                    rows.push(row);
                }
                out.write_all(pad_table(&rows).as_bytes())?;
                writeln!(out, "characters")?;
                let mut rows = vec![std::iter::once(String::new()).chain(names.iter().cloned()).collect::<Vec<_>>()];
                for (i, row) in chars.iter().enumerate() {
                    rows.push(
                        std::iter::once(format!("χ{}", i + 1)).chain(row.iter().map(ToString::to_string)).collect(),
                    );
                }
                out.write_all(pad_table(&rows).as_bytes())?;
                writeln!(out)?;
            }
            Format::Json => {
                let irreps: Vec<_> = data
                    .irreps
                    .iter()
                    .zip(&table.irreps)
                    .map(|(d, inst)| {
                        let images: serde_json::Map<String, serde_json::Value> = (0..id.generator_count())
                            .map(|g| {
                                let printed: Vec<String> = d.images[g].iter().map(ToString::to_string).collect();
                                let value: Vec<Vec<String>> = inst.generator_images[g]
                                    .to_rows()
                                    .iter()
                                    .map(|r| r.iter().map(ToString::to_string).collect())
                                    .collect();
                                (GENERATOR_NAMES[g].to_string(), json!({ "printed": printed, "value": value }))
                            })
                            .collect();
                        json!({ "index": inst.index, "degree": inst.degree, "images": images })
                    })
                    .collect();
                let characters: Vec<Vec<String>> =
                    chars.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
                let v = json!({
                    "group": id.to_string(),
                    "field": field.name(),
                    "elements": names,
                    "irreps": irreps,
                    "characters": characters,
                });
                writeln!(out, "{v}")?;
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(&mut *out);
                w.write_record(["group", "irrep", "element", "character"])?;
                for (i, row) in chars.iter().enumerate() {
                    for (g, c) in row.iter().enumerate() {
                        w.write_record([id.to_string(), (i + 1).to_string(), names[g].clone(), c.to_string()])?;
                    }
                }
                w.flush()?;
            }
        }
    }
    Ok(())
}

pub(super) fn specs(specs: &[RepSpec], format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    match format {
        Format::Json => {
            for s in specs {
                writeln!(out, "{}", json!({ "group": s.group.to_string(), "mults": s.mults, "degree": s.degree() }))?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["group", "mults", "degree"])?;
            for s in specs {
                w.write_record([s.group.to_string(), join(&s.mults), s.degree().to_string()])?;
            }
            w.flush()?;
        }
        Format::Plain => {
            for s in specs {
                writeln!(out, "{}", join(&s.mults))?;
            }
        }
    }
    Ok(())
}

pub(super) fn form_records(
    records: &[FormRecord],
    closed: Option<&[bool]>,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    match format {
        Format::Json => {
            for (i, r) in records.iter().enumerate() {
                let mut v = serde_json::to_value(r)?;
                if let Some(c) = closed {
                    v["closed_form"] = json!(c[i]);
                }
                writeln!(out, "{v}")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["group", "mults", "degree", "dim", "sym", "skew", "nondeg"])?;
            for r in records {
                w.write_record([
                    r.group.clone(),
                    join(&r.mults),
                    r.degree.to_string(),
                    r.dim.to_string(),
                    r.sym.to_string(),
                    r.skew.to_string(),
                    r.nondegenerate.to_string(),
                ])?;
            }
            w.flush()?;
        }
        Format::Plain => {
            let mut header: Vec<String> = ["group", "mults", "degree", "dim", "sym", "skew", "nondegenerate", "method"]
                .map(String::from)
                .to_vec();
            if closed.is_some() {
                header.push("closed_form".into());
            }
            let mut rows = vec![header];
            for (i, r) in records.iter().enumerate() {
                let mut row = vec![
                    r.group.clone(),
                    join(&r.mults),
                    r.degree.to_string(),
                    r.dim.to_string(),
                    r.sym.to_string(),
                    r.skew.to_string(),
                    r.nondegenerate.to_string(),
                    r.method.clone(),
                ];
                if let Some(c) = closed {
                    row.push(c[i].to_string());
                }
                rows.push(row);
            }
            out.write_all(pad_table(&rows).as_bytes())?;
        }
    }
    Ok(())
}

pub(super) fn census(
    rows: &[(GroupId, Census)],
    degree: usize,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    match format {
        Format::Json => {
            for (g, c) in rows {
                let mut v = serde_json::to_value(c)?;
                v["group"] = json!(g.to_string());
                v["degree"] = json!(degree);
                writeln!(out, "{v}")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["group", "degree", "total", "nondegenerate", "degenerate"])?;
            for (g, c) in rows {
                w.write_record([
                    g.to_string(),
                    degree.to_string(),
                    c.total.to_string(),
                    c.nondegenerate.to_string(),
                    c.degenerate.to_string(),
                ])?;
            }
            w.flush()?;
        }
        Format::Plain => {
            for (g, c) in rows {
                writeln!(
                    out,
                    "{g} degree {degree}: total {}, nondegenerate {}, degenerate {}",
                    c.total, c.nondegenerate, c.degenerate
                )?;
            }
        }
    }
    Ok(())
}

pub(super) fn char2(
    n: usize,
    closed: &Char2Dims,
    brute: Option<&Char2Dims>,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    match format {
        Format::Json => {
            let mut v = serde_json::to_value(closed)?;
            v["degree"] = json!(n);
            v["bruteforce"] = serde_json::to_value(brute)?;
            writeln!(out, "{v}")?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["degree", "source", "total", "symmetric", "diagonal", "alternating"])?;
            for (src, d) in std::iter::once(("closed_form", closed)).chain(brute.map(|b| ("bruteforce", b))) {
                w.write_record([
                    n.to_string(),
                    src.to_string(),
                    d.total.to_string(),
                    d.symmetric.to_string(),
                    d.diagonal.to_string(),
                    d.alternating.to_string(),
                ])?;
            }
            w.flush()?;
        }
        Format::Plain => {
            writeln!(
                out,
                "degree {n}: total {}, symmetric {}, diagonal {}, alternating {}",
                closed.total, closed.symmetric, closed.diagonal, closed.alternating
            )?;
            match brute {
                Some(b) if b == closed => writeln!(out, "GF(2) solve agrees")?,
                Some(b) => writeln!(out, "GF(2) solve disagrees: {b:?}")?,
                None => {}
            }
        }
    }
    Ok(())
}

pub(super) fn verify(report: &VerifyReport, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    match format {
        Format::Json => {
            let mut v = serde_json::to_value(report)?;
            v["passed"] = json!(report.passed());
            writeln!(out, "{v}")?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["group", "field", "specs", "sampled", "exhaustive", "mismatches"])?;
            for g in &report.groups {
                w.write_record([
                    g.group.to_string(),
                    report.field.clone(),
                    g.specs.to_string(),
                    g.sampled.to_string(),
                    g.exhaustive.to_string(),
                    g.mismatches.len().to_string(),
                ])?;
            }
            w.flush()?;
        }
        Format::Plain => {
            for g in &report.groups {
                let status = if g.mismatches.is_empty() {
                    "ok".to_string()
                } else {
                    format!("FAILED ({} mismatches)", g.mismatches.len())
                };
                writeln!(
                    out,
                    "{:<9} {} degree<={}: {} specs ({} sampled, {} exhaustive) {status}",
                    g.group.to_string(),
                    report.field,
                    report.max_degree,
                    g.specs,
                    g.sampled,
                    g.exhaustive
                )?;
            }
        }
    }
    if let Some(m) = report.first_counterexample() {
        if format == Format::Plain {
            writeln!(out, "counterexample: {m}")?;
        }
    }
    Ok(())
}
