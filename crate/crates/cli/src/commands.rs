use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use hurwitz_core::branch::StableMapGraph;
use hurwitz_core::hurwitz::CharacterEngine;
use hurwitz_core::intersection::elsv_genus0;
use hurwitz_core::oracle::{oracle_connected, within_bound};
use hurwitz_core::recursion::{h0_closed, RecursionValues};
use hurwitz_core::{branch_point_count, build_table, compute as compute_value, Error, ExactRational, Method};
use serde::Serialize;
use serde_json::json;

use crate::output::{CommandResult, Status};
use crate::Format;

fn value_string(v: &ExactRational) -> String {
    v.to_string()
}

#[derive(Serialize)]
struct ComputePayload {
    g: u32,
    d: u32,
    r: u32,
    method: &'static str,
    value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'static str>,
}

pub fn compute(g: u32, d: u32, method: Method) -> CommandResult {
    match compute_value(g, d, method) {
        Ok(value) => CommandResult::ok(ComputePayload {
            g,
            d,
            r: branch_point_count(g, d),
            method: method.name(),
            value: value_string(&value),
            note: (method == Method::ElsvG0 && d <= 2)
                .then_some("degenerate case; stored value, outside the Hodge-integral formula"),
        }),
        Err(e) => CommandResult::invalid(e.to_string()),
    }
}

#[derive(Serialize)]
struct Row {
    g: u32,
    d: u32,
    r: u32,
    value: String,
}

pub fn table(g_max: u32, d_max: u32, method: Method, format: Format) -> CommandResult {
    let table = match build_table(g_max, d_max, method) {
        Ok(t) => t,
        Err(e) => return CommandResult::invalid(e.to_string()),
    };
    let rows: Vec<Row> = table
        .iter()
        .map(|(g, d, _, v)| Row {
            g,
            d,
            r: branch_point_count(g, d),
            value: value_string(v),
        })
        .collect();
    match format {
        Format::Json => CommandResult::ok(json!({ "method": method.name(), "rows": rows })),
        Format::Csv => {
            let mut out = String::from("g,d,r,method,value\n");
            for row in &rows {
                writeln!(out, "{},{},{},{},{}", row.g, row.d, row.r, method, row.value).unwrap();
            }
            CommandResult::text(out)
        }
        Format::AlignedText => CommandResult::text(aligned(&rows, method)),
    }
}

fn aligned(rows: &[Row], method: Method) -> String {
    let header = ["g", "d", "r", "method", "value"];
    let cells: Vec<[String; 5]> = rows
        .iter()
        .map(|r| {
            [
                r.g.to_string(),
                r.d.to_string(),
                r.r.to_string(),
                method.to_string(),
                r.value.clone(),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &cells {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let mut out = String::new();
    let mut line = |fields: [&str; 5]| {
        let mut s = String::new();
        for (i, (f, w)) in fields.iter().zip(widths).enumerate() {
            if i == 4 {
                s.push_str(f);
            } else if i < 3 {
                write!(s, "{f:>w$}  ").unwrap();
            } else {
                write!(s, "{f:<w$}  ").unwrap();
            }
        }
        out.push_str(s.trim_end());
        out.push('\n');
    };
    line(header);
    for row in &cells {
        line([&row[0], &row[1], &row[2], &row[3], &row[4]]);
    }
    out
}

#[derive(Serialize)]
struct Cell {
    g: u32,
    d: u32,
    r: u32,
    values: BTreeMap<&'static str, String>,
    agree: bool,
}

#[derive(Serialize)]
struct CrosscheckPayload {
    g_max: u32,
    d_max: u32,
    cell_count: usize,
    mismatches: Vec<[u32; 2]>,
    cells: Vec<Cell>,
}

fn crosscheck_cell(
    g: u32,
    d: u32,
    engine: &CharacterEngine,
    recursion: &RecursionValues,
) -> Result<Vec<(Method, ExactRational)>, Error> {
    let mut values = vec![(Method::Character, engine.connected_hurwitz(g, d)?)];
    if let Some(v) = recursion.get(g, d) {
        values.push((Method::Recursion, v.clone()));
    }
    if g == 0 {
        values.push((Method::ClosedForm, h0_closed(d)?));
        // d = 1, 2 would only echo the stored degenerate values.
        if d >= 3 {
            values.push((Method::ElsvG0, elsv_genus0(d)?));
        }
    }
    if within_bound(d, branch_point_count(g, d)) {
        values.push((Method::Oracle, oracle_connected(g, d)?));
    }
    Ok(values)
}

pub fn crosscheck(g_max: u32, d_max: u32) -> CommandResult {
    if d_max == 0 {
        return CommandResult::invalid(Error::ZeroDegree.to_string());
    }
    let engine = CharacterEngine::new();
    let recursion = RecursionValues::compute(d_max);
    let mut cells = Vec::new();
    let mut mismatches = Vec::new();
    for g in 0..=g_max {
        for d in 1..=d_max {
            let values = match crosscheck_cell(g, d, &engine, &recursion) {
                Ok(v) => v,
                Err(e) => return CommandResult::invalid(e.to_string()),
            };
            let agree = values.windows(2).all(|w| w[0].1 == w[1].1);
            if !agree {
                mismatches.push([g, d]);
            }
            cells.push(Cell {
                g,
                d,
                r: branch_point_count(g, d),
                values: values
                    .iter()
                    .map(|(m, v)| (m.name(), value_string(v)))
                    .collect(),
                agree,
            });
        }
    }
    let status = if mismatches.is_empty() {
        Status::Ok
    } else {
        Status::Mismatch
    };
    let mut result = CommandResult::with_status(
        status,
        CrosscheckPayload {
            g_max,
            d_max,
            cell_count: cells.len(),
            mismatches,
            cells,
        },
    );
    if status == Status::Mismatch {
        result.diagnostic = Some("methods disagree; see `mismatches`".into());
    }
    result
}

pub fn branch_divisor(input: &Path) -> CommandResult {
    let text = match std::fs::read_to_string(input) {
        Ok(t) => t,
        Err(e) => return CommandResult::invalid(format!("cannot read {}: {e}", input.display())),
    };
    let graph = match StableMapGraph::from_json(&text) {
        Ok(g) => g,
        Err(e) => return CommandResult::invalid(e.to_string()),
    };
    let violations = graph.validate();
    if !violations.is_empty() {
        let listed: Vec<_> = violations
            .iter()
            .map(|v| json!({ "code": v.code(), "message": v.to_string() }))
            .collect();
        return CommandResult::invalid_with(
            format!("stable map has {} violation(s)", violations.len()),
            json!({ "violations": listed }),
        );
    }
    match graph.evaluate() {
        Ok(report) => CommandResult::ok(json!({
            "divisor": report.divisor,
            "divisor_degree": report.divisor.degree(),
            "arithmetic_genus": report.arithmetic_genus,
            "d": report.map_degree,
            "r": report.expected_degree,
            "degree_check": report.degree_check,
            "effective": report.effective,
        })),
        Err(e) => CommandResult::invalid(e.to_string()),
    }
}
