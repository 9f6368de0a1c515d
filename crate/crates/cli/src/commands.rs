use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::path::Path;

use schreyer_core::division::divide;
use schreyer_core::groebner::{groebner_basis, is_groebner_poly, CriterionReport};
use schreyer_core::hilbert::{hilbert_series_gb, HilbertPolynomialData};
use schreyer_core::polyring::{parse_polynomial_file, PolynomialFile};
use schreyer_core::resolution::{free_resolution, FreeResolution, GradedMatrix};
use schreyer_core::{Field, MonomialOrder, Polynomial, PrimeField, Rationals, Ring};
use schreyer_curves::curve::HilbertRow;
use schreyer_curves::pipeline::AttemptLog;
use schreyer_curves::{gorenstein_experiment, run_pipeline, ConstructionRecipe};
use serde_json::{json, Value};

use crate::args::{FieldChoice, RingArgs};
use crate::CliError;

/// Text for humans and JSON for machines.
pub struct Output {
    pub text: String,
    pub json: Value,
    /// Set when the command ran but a check it performs failed.
    pub failure: Option<CliError>,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Self {
            text,
            json,
            failure: None,
        }
    }
}

/// Runs `body` over the field chosen on the command line.
macro_rules! with_field {
    ($choice:expr, |$f:ident| $body:expr) => {
        match $choice {
            FieldChoice::Rationals => {
                let $f = Rationals;
                $body
            }
            FieldChoice::Prime(p) => {
                let $f = PrimeField::new(p as u64).map_err(|e| CliError::Usage(e.to_string()))?;
                $body
            }
        }
    };
}

fn read_file<F: Field>(field: F, order: MonomialOrder, path: &Path) -> Result<PolynomialFile<F>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    parse_polynomial_file(field, order, &text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn header<F: Field>(ring: &Ring<F>) -> Value {
    json!({
        "field": ring.field().descriptor(),
        "order": ring.order().to_string(),
        "vars": ring.vars(),
    })
}

fn format_all<F: Field>(ring: &Ring<F>, polys: &[Polynomial<F>]) -> Vec<String> {
    polys.iter().map(|p| ring.format(p)).collect()
}

fn leading_terms<F: Field>(ring: &Ring<F>, polys: &[Polynomial<F>]) -> Vec<String> {
    polys
        .iter()
        .filter_map(|p| p.leading_monomial())
        .map(|m| m.format(ring.vars()))
        .collect()
}

fn colon_strings<F: Field>(ring: &Ring<F>, report: &CriterionReport<F>) -> Vec<Vec<String>> {
    report
        .colon_table
        .iter()
        .map(|c| c.iter().map(|m| m.format(ring.vars())).collect())
        .collect()
}

fn write_colon_table(out: &mut String, table: &[Vec<String>]) {
    for (i, c) in table.iter().enumerate() {
        let body = if c.is_empty() { "0".to_string() } else { format!("<{}>", c.join(", ")) };
        let _ = writeln!(out, "M_{} = {body}", i + 1);
    }
}

pub fn gb(path: &Path, ring_args: &RingArgs, check_only: bool) -> Result<Output, CliError> {
    with_field!(ring_args.field, |f| gb_in(read_file(f, ring_args.order, path)?, check_only))
}

fn gb_in<F: Field>(file: PolynomialFile<F>, check_only: bool) -> Result<Output, CliError> {
    let ring = &file.ring;
    let polys = if check_only {
        file.polynomials.clone()
    } else {
        groebner_basis(ring, &file.polynomials).polynomials(ring)
    };
    let report = is_groebner_poly(ring, &polys).map_err(|e| CliError::Usage(e.to_string()))?;
    let colon = colon_strings(ring, &report);
    let mut text = String::new();
    if check_only {
        let _ = writeln!(text, "groebner: {}", if report.is_groebner { "yes" } else { "no" });
    }
    let _ = writeln!(text, "basis:");
    for p in format_all(ring, &polys) {
        let _ = writeln!(text, "  {p}");
    }
    let _ = writeln!(text, "leading terms: {}", leading_terms(ring, &polys).join(" "));
    write_colon_table(&mut text, &colon);
    let _ = writeln!(text, "tests: {}", report.tests);
    let nonzero: Vec<Value> = report
        .nonzero
        .iter()
        .map(|(i, a, h)| json!({"i": i + 1, "multiplier": a.format(ring.vars()), "remainder": h.format(ring)}))
        .collect();
    let json = json!({
        "ring": header(ring),
        "is_groebner": report.is_groebner,
        "basis": format_all(ring, &polys),
        "leading_terms": leading_terms(ring, &polys),
        "colon_table": colon,
        "tests": report.tests,
        "nonzero_remainders": nonzero,
    });
    let mut out = Output::ok(text, json);
    if !report.is_groebner {
        out.failure = Some(CliError::Verification("the generators are not a Groebner basis".into()));
    }
    Ok(out)
}

pub fn divide_cmd(path: &Path, by: &Path, ring_args: &RingArgs) -> Result<Output, CliError> {
    with_field!(ring_args.field, |f| {
        let dividends = read_file(f, ring_args.order, path)?;
        let divisors = read_file(f, ring_args.order, by)?;
        divide_in(dividends, divisors)
    })
}

fn divide_in<F: Field>(dividends: PolynomialFile<F>, divisors: PolynomialFile<F>) -> Result<Output, CliError> {
    let ring = &dividends.ring;
    if divisors.ring.vars() != ring.vars() {
        return Err(CliError::Usage("dividend and divisor files declare different variables".into()));
    }
    let mut text = String::new();
    let mut results = Vec::new();
    for g in &dividends.polynomials {
        let res = divide(ring, g, &divisors.polynomials).map_err(|e| CliError::Usage(e.to_string()))?;
        let _ = writeln!(text, "dividend: {}", ring.format(g));
        for (k, q) in res.quotients.iter().enumerate() {
            let _ = writeln!(text, "quotient {}: {}", k + 1, ring.format(q));
        }
        let _ = writeln!(text, "remainder: {}", ring.format(&res.remainder));
        results.push(json!({
            "dividend": ring.format(g),
            "quotients": format_all(ring, &res.quotients),
            "remainder": ring.format(&res.remainder),
        }));
    }
    Ok(Output::ok(text, json!({"ring": header(ring), "divisions": results})))
}

pub fn resolve(
    path: &Path,
    ring_args: &RingArgs,
    minimal: bool,
    betti: bool,
    max_length: Option<usize>,
) -> Result<Output, CliError> {
    with_field!(ring_args.field, |f| {
        let file = read_file(f, ring_args.order, path)?;
        let m = GradedMatrix::from_ideal(&file.polynomials).map_err(|e| CliError::Usage(e.to_string()))?;
        let res = free_resolution(&file.ring, &m, minimal, max_length).map_err(|e| CliError::Verification(e.to_string()))?;
        Ok(resolution_output(&res, betti))
    })
}

pub fn resolution_output<F: Field>(res: &FreeResolution<F>, betti: bool) -> Output {
    let table = res.betti_table();
    let ranks = res.ranks();
    let mut text = String::new();
    let _ = writeln!(text, "ranks: {}", join(&ranks));
    let _ = writeln!(text, "minimal: {}", yes_no(res.is_minimal()));
    let _ = writeln!(text, "complex: {}", yes_no(res.is_complex()));
    if betti {
        let _ = write!(text, "{table}");
    }
    let twists: Vec<Vec<i32>> = (0..=res.length()).map(|k| res.module(k).twists().to_vec()).collect();
    let json = json!({
        "ring": header(res.ring()),
        "ranks": ranks,
        "twists": twists,
        "minimal": res.is_minimal(),
        "complex": res.is_complex(),
        "betti": table,
    });
    let mut out = Output::ok(text, json);
    if !res.is_complex() {
        out.failure = Some(CliError::Verification("maps do not compose to zero".into()));
    }
    out
}

pub fn hilbert(
    path: &Path,
    ring_args: &RingArgs,
    function: Option<RangeInclusive<i32>>,
    polynomial: bool,
) -> Result<Output, CliError> {
    with_field!(ring_args.field, |f| hilbert_in(read_file(f, ring_args.order, path)?, function, polynomial))
}

fn hilbert_in<F: Field>(
    file: PolynomialFile<F>,
    function: Option<RangeInclusive<i32>>,
    polynomial: bool,
) -> Result<Output, CliError> {
    let ring = &file.ring;
    let n = ring.nvars();
    let gb = groebner_basis(ring, &file.polynomials);
    let num = hilbert_series_gb(&gb, n, &[0]);
    let hp = HilbertPolynomialData::from_numerator(&num, n);
    let mut text = format!("numerator: {num}\ndenominator: (1 - t)^{n}\ndimension: {}\n", hp.dimension);
    let mut json = json!({
        "ring": header(ring),
        "numerator": {
            "low": num.low(),
            "coefficients": num.terms().iter().map(|&(k, c)| json!([k, c])).collect::<Vec<_>>(),
        },
        "dimension": hp.dimension,
        "degree": hp.degree,
    });
    if let Some(range) = function {
        let values: Vec<Value> = range
            .map(|d| {
                let v = num.series_coefficient(n, d);
                let _ = writeln!(text, "HF({d}) = {v}");
                json!([d, v])
            })
            .collect();
        json["function"] = Value::from(values);
    }
    if polynomial {
        let _ = writeln!(text, "polynomial: {hp}");
        let _ = writeln!(text, "agrees from: {}", hp.agrees_from);
        json["polynomial"] = Value::from(hp.coefficients.iter().map(|c| c.to_string()).collect::<Vec<_>>());
        json["agrees_from"] = Value::from(hp.agrees_from);
        if let Ok((d, g)) = hp.degree_genus() {
            let _ = writeln!(text, "curve degree: {d}\ncurve genus: {g}");
            json["curve"] = json!({"degree": d, "genus": g});
        }
    }
    Ok(Output::ok(text, json))
}

pub fn curve(d: i64, g: i64, p: u32, seed: u64, attempts: usize) -> Result<Output, CliError> {
    if attempts == 0 {
        return Err(CliError::Usage("--attempts must be positive".into()));
    }
    schreyer_core::coefficients::PrimeField::new(p as u64).map_err(|e| CliError::Usage(e.to_string()))?;
    let recipe = ConstructionRecipe::builtin(d, g, p, seed)
        .ok_or_else(|| CliError::Usage(format!("no built-in recipe for (d, g) = ({d}, {g}); try (11, 10) or (13, 12)")))?;
    let outcome = run_pipeline(&recipe, attempts);
    let mut text = format!("recipe: (d, g) = ({d}, {g}) over F_{p}, seed {seed}\n");
    write_attempts(&mut text, &outcome.attempts);
    let summary = outcome.report.as_ref().map(|r| r.summary());
    if let Some(s) = &summary {
        let _ = writeln!(text, "accepted seed: {}", s.seed);
        let _ = writeln!(text, "degree: {}\ngenus: {}", s.degree, s.genus);
        let _ = writeln!(text, "module series: {}", s.module_series);
        let _ = write!(text, "module betti table:\n{}", s.module_betti);
        let _ = write!(text, "curve betti table:\n{}", s.curve_betti);
        let _ = writeln!(text, "ideal generators:");
        for gen in &s.generators {
            let _ = writeln!(text, "  {gen}");
        }
        write_hilbert_table(&mut text, &s.hilbert_table);
        let _ = writeln!(text, "smoothness: {:?}", s.smoothness);
        let _ = writeln!(text, "maximal rank: {}", yes_no(s.maximal_rank.holds));
    }
    let json = json!({
        "recipe": recipe,
        "attempts": outcome.attempts,
        "report": summary,
    });
    let mut out = Output::ok(text, json);
    if summary.is_none() {
        out.failure = Some(CliError::Exhausted(attempts));
    }
    Ok(out)
}

fn write_attempts(out: &mut String, logs: &[AttemptLog]) {
    for log in logs {
        let gates: Vec<String> = log
            .gates
            .iter()
            .map(|g| match &g.detail {
                None => format!("{} ok", g.gate),
                Some(d) => format!("{} FAILED ({d})", g.gate),
            })
            .collect();
        let _ = writeln!(out, "attempt {} seed {}: {}", log.attempt, log.seed, gates.join(", "));
    }
}

/// The cohomology table with one row per twist.
pub fn write_hilbert_table(out: &mut String, rows: &[HilbertRow]) {
    let _ = writeln!(out, "{:>3} {:>11} {:>11} {:>9} {:>11}", "n", "h1(I_C(n))", "h0(O_C(n))", "h0(O(n))", "h0(I_C(n))");
    for r in rows {
        let _ = writeln!(
            out,
            "{:>3} {:>11} {:>11} {:>9} {:>11}",
            r.n, r.h1_ideal, r.h0_curve, r.h0_space, r.h0_ideal
        );
    }
}

pub fn gorenstein(g: usize, p: u32, trials: usize, seed: u64) -> Result<Output, CliError> {
    if g < 5 {
        return Err(CliError::Usage("--g must be at least 5".into()));
    }
    let rep = gorenstein_experiment(g, p, trials, seed).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut text = format!(
        "genus {g}: {trials} trials over F_{p}, {} with Hilbert function 1 {m} {m} 1\n",
        rep.accepted(),
        m = g - 2
    );
    for (count, n) in &rep.histogram {
        let _ = writeln!(text, "{count} cubic generators: {n}");
    }
    let violations = rep.violations();
    let _ = writeln!(text, "allowed counts: {}", join(&schreyer_curves::GorensteinReport::allowed_counts(g)));
    let _ = writeln!(text, "violations: {}", violations.len());
    for t in &violations {
        let _ = writeln!(text, "  seed {}: {:?}", t.seed, t.cubic_generators);
    }
    let not_dual = rep.trials.iter().filter(|t| t.self_dual == Some(false)).count();
    let failure = if !violations.is_empty() || not_dual > 0 {
        Some(CliError::Verification(format!("{} disallowed counts, {not_dual} asymmetric tables", violations.len())))
    } else {
        None
    };
    Ok(Output {
        text,
        json: serde_json::to_value(&rep).expect("serializable report"),
        failure,
    })
}

pub fn join<T: std::fmt::Display>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

