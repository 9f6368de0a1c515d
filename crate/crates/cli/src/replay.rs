//! Replays of the bundled worked examples.

use std::fmt::Write as _;

use schreyer_core::groebner::is_groebner_poly;
use schreyer_core::hilbert::{degree_genus, numerator_from_resolution};
use schreyer_core::polyring::parse_polynomial_file;
use schreyer_core::resolution::resolve_ideal;
use schreyer_core::{Field, MonomialOrder, Rationals};
use serde_json::{json, Value};

use crate::commands::{join, yes_no, Output};
use crate::CliError;

pub struct Example {
    pub id: &'static str,
    pub input: &'static str,
    pub order: MonomialOrder,
    pub expected: &'static str,
}

pub const EXAMPLES: &[Example] = &[
    Example {
        id: "5gon",
        input: include_str!("../data/5gon.txt"),
        order: MonomialOrder::DegRevLex,
        expected: include_str!("../data/5gon.expected"),
    },
    Example {
        id: "minors35",
        input: include_str!("../data/minors35.txt"),
        order: MonomialOrder::Lex,
        expected: include_str!("../data/minors35.expected"),
    },
];

/// Text report of one example: the criterion on the generators as given,
/// the raw Schreyer resolution and its minimalization.
pub fn replay(ex: &Example) -> Result<String, CliError> {
    let file = parse_polynomial_file(Rationals, ex.order, ex.input).map_err(|e| CliError::Usage(e.to_string()))?;
    let ring = &file.ring;
    let gens = &file.polynomials;
    let err = |e: &dyn std::fmt::Display| CliError::Verification(e.to_string());
    let mut out = String::new();
    let _ = writeln!(out, "example: {}", ex.id);
    let _ = writeln!(out, "ring: {} [{}] {}", ring.field().descriptor(), ring.vars().join(" "), ring.order());
    let report = is_groebner_poly(ring, gens).map_err(|e| err(&e))?;
    let _ = writeln!(out, "groebner: {}", yes_no(report.is_groebner));
    let leads: Vec<String> = gens
        .iter()
        .filter_map(|g| g.leading_monomial())
        .map(|m| m.format(ring.vars()))
        .collect();
    let _ = writeln!(out, "leading terms: {}", leads.join(" "));
    for (i, c) in report.colon_table.iter().enumerate() {
        let ms: Vec<String> = c.iter().map(|m| m.format(ring.vars())).collect();
        let body = if ms.is_empty() { "0".to_string() } else { format!("<{}>", ms.join(", ")) };
        let _ = writeln!(out, "M_{} = {body}", i + 1);
    }
    let _ = writeln!(out, "tests: {}", report.tests);
    let raw = resolve_ideal(ring, gens, false).map_err(|e| err(&e))?;
    let _ = writeln!(out, "raw ranks: {}", join(&raw.ranks()));
    let _ = writeln!(out, "raw minimal: {}", yes_no(raw.is_minimal()));
    let min = raw.minimalize();
    let _ = writeln!(out, "minimal ranks: {}", join(&min.ranks()));
    let betti = min.betti_table();
    let _ = write!(out, "betti table:\n{betti}");
    let num = numerator_from_resolution(&betti);
    let _ = writeln!(out, "numerator: {num}");
    match degree_genus(&num, ring.nvars()) {
        Ok((d, g)) => {
            let _ = writeln!(out, "curve: degree {d}, genus {g}");
        }
        Err(e) => {
            let _ = writeln!(out, "curve: {e}");
        }
    }
    Ok(out)
}

pub fn examples(id: &str) -> Result<Output, CliError> {
    let chosen: Vec<&Example> = if id == "all" {
        EXAMPLES.iter().collect()
    } else {
        let ex = EXAMPLES.iter().find(|e| e.id == id).ok_or_else(|| {
            let ids: Vec<_> = EXAMPLES.iter().map(|e| e.id).collect();
            CliError::Usage(format!("unknown example {id:?}, expected one of {} or all", ids.join(", ")))
        })?;
        vec![ex]
    };
    let mut text = String::new();
    let mut results: Vec<Value> = Vec::new();
    let mut mismatched = Vec::new();
    for ex in chosen {
        let got = replay(ex)?;
        text.push_str(&got);
        let diff = line_diff(ex.expected, &got);
        if diff.is_empty() {
            let _ = writeln!(text, "matches expected output\n");
        } else {
            mismatched.push(ex.id);
            let _ = writeln!(text, "MISMATCH against expected output:");
            for line in &diff {
                let _ = writeln!(text, "  {line}");
            }
            text.push('\n');
        }
        results.push(json!({"id": ex.id, "matches": diff.is_empty(), "output": got, "diff": diff}));
    }
    let failure = (!mismatched.is_empty())
        .then(|| CliError::Verification(format!("examples differ from expected output: {}", mismatched.join(", "))));
    Ok(Output {
        text,
        json: json!({"examples": results}),
        failure,
    })
}

/// Lines that differ, as `-expected` / `+got` pairs.
fn line_diff(expected: &str, got: &str) -> Vec<String> {
    let e: Vec<&str> = expected.lines().collect();
    let g: Vec<&str> = got.lines().collect();
    let mut out = Vec::new();
    for k in 0..e.len().max(g.len()) {
        let (a, b) = (e.get(k).copied(), g.get(k).copied());
        if a != b {
            if let Some(a) = a {
                out.push(format!("-{a}"));
            }
            if let Some(b) = b {
                out.push(format!("+{b}"));
            }
        }
    }
    out
}
