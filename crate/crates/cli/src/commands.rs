use std::collections::BTreeSet;
use std::fs;

use ncx_core::coeff::{q_binomial_triangle, validate_assumption_a, AssumptionReport};
use ncx_core::homalg::{connecting, internal_hexagon_with, snake_hexagon, validate_ses, HexagonReport, ShortExactSequence};
use ncx_core::io::{self, Document};
use ncx_core::ncomplex::{cohomology_table, validate_ncomplex, AmplitudeCohomology, GradedMap, NComplex};
use ncx_core::qdga::{check_qdga, AlgebraFailure, GradedAlgebra, Qdga};
use ncx_core::{Error, Field, Matrix, Scalar};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::report::Report;

/// Anything that prevents a command from producing a report (exit code 2).
#[derive(Debug)]
pub struct CliError(pub String);

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError(e.to_string())
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub fn read_input(path: &str) -> CliResult<(String, String)> {
    let bytes = fs::read(path).map_err(|e| CliError(format!("cannot read {path}: {e}")))?;
    let digest = hex::encode(Sha256::digest(&bytes));
    let text = String::from_utf8(bytes).map_err(|_| CliError(format!("{path} is not UTF-8")))?;
    Ok((text, digest))
}

fn load(report: &mut Report, path: &str) -> CliResult<Document> {
    let (text, digest) = read_input(path)?;
    report.inputs.push((path.to_string(), digest));
    Ok(io::parse_document(&text)?)
}

fn load_complex(report: &mut Report, path: &str) -> CliResult<NComplex> {
    match load(report, path)? {
        Document::Complex(c) => Ok(c),
        other => Err(CliError(format!("{path}: expected a complex, found kind \"{}\"", other.kind()))),
    }
}

pub fn write_output(path: &str, text: &str) -> CliResult<String> {
    fs::write(path, text).map_err(|e| CliError(format!("cannot write {path}: {e}")))?;
    Ok(hex::encode(Sha256::digest(text.as_bytes())))
}

/// `cyclotomic`, `cyclotomic:J`, `fp:P` (smallest root of order N) or `fp:P:Q`.
pub fn parse_field(spec: &str, big_n: usize) -> CliResult<Field> {
    let parts: Vec<&str> = spec.split(':').collect();
    let num = |s: &str| s.parse::<u64>().map_err(|_| CliError(format!("bad number \"{s}\" in field spec \"{spec}\"")));
    let field = match parts.as_slice() {
        ["cyclotomic"] => Field::cyclotomic(big_n)?,
        ["cyclotomic", j] => Field::cyclotomic_with_power(big_n, num(j)? as usize)?,
        ["fp", p] => Field::prime_with_root(num(p)?, big_n)?,
        ["fp", p, q] => Field::prime(num(p)?, big_n, num(q)?)?,
        _ => return Err(CliError(format!("unknown field spec \"{spec}\" (use cyclotomic[:J] or fp:P[:Q])"))),
    };
    Ok(field)
}

fn fmt_vector(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|s| s.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

/// `v` as a combination of the basis labels of degree `n`.
fn fmt_combination(a: &GradedAlgebra, n: usize, v: &[Scalar]) -> String {
    let f = a.field();
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !f.is_zero(c))
        .map(|(i, c)| {
            let label = a.label((n, i));
            if f.is_one(c) {
                label.to_string()
            } else if f.is_one(&f.neg(c)) {
                format!("-{label}")
            } else {
                format!("{c}·{label}")
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

fn fmt_matrix(m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.rows()).map(|i| fmt_vector(m.row(i))).collect();
    format!("[{}]", rows.join(", "))
}

fn fmt_dims<'a>(dims: impl IntoIterator<Item = (&'a i64, &'a usize)>) -> String {
    let parts: Vec<String> = dims.into_iter().map(|(n, d)| format!("{n}:{d}")).collect();
    format!("{{{}}}", parts.join(", "))
}

fn assumption_check(report: &mut Report, a: &AssumptionReport) {
    report.check("assumption (A)", a.passed, a.failures());
}

fn complex_check(report: &mut Report, name: &str, c: &NComplex) -> bool {
    let r = validate_ncomplex(c);
    let details = r
        .failing_degrees
        .iter()
        .map(|n| format!("d^{} != 0 starting at degree {n}", c.order()))
        .collect();
    report.check(format!("{name}: d^N = 0"), r.passed(), details);
    r.passed()
}

// ---------------------------------------------------------------- validate

pub fn validate(report: &mut Report, path: &str) -> CliResult<()> {
    let doc = load(report, path)?;
    report.line(format!("kind: {}", doc.kind()));
    report.line(format!("field: {}", doc.field().describe()));
    report.data("kind", json!(doc.kind()));
    match &doc {
        Document::Complex(c) => {
            report.line(format!("dims: {}", fmt_dims(c.dims())));
            assumption_check(report, &validate_assumption_a(c.field()));
            complex_check(report, "complex", c);
        }
        Document::Ses(s) => {
            assumption_check(report, &validate_assumption_a(s.field()));
            for (name, c) in [("C1", &s.c1), ("C2", &s.c2), ("C3", &s.c3)] {
                report.line(format!("{name} dims: {}", fmt_dims(c.dims())));
                complex_check(report, name, c);
            }
            let r = validate_ses(s);
            report.check("short exact sequence", r.passed(), r.failures);
        }
        Document::Algebra(q) => qdga_checks(report, q),
    }
    Ok(())
}

// ---------------------------------------------------------------- cohomology

pub fn cohomology(report: &mut Report, path: &str, k: &str, representatives: bool) -> CliResult<()> {
    let c = load_complex(report, path)?;
    let big_n = c.order();
    let ks: Vec<usize> = if k == "all" {
        (1..big_n).collect()
    } else {
        let k: usize = k.parse().map_err(|_| CliError(format!("--k must be \"all\" or an integer, got \"{k}\"")))?;
        if k == 0 || k >= big_n {
            return Err(CliError(format!("--k must lie in 1..={}", big_n - 1)));
        }
        vec![k]
    };
    report.line(format!("field: {}", c.field().describe()));
    if !complex_check(report, "complex", &c) {
        return Ok(());
    }
    let table = cohomology_table(&c)?;
    let degrees: Vec<i64> = match c.support() {
        Some((lo, hi)) => (lo..=hi).collect(),
        None => Vec::new(),
    };
    let width = degrees.iter().map(|n| n.to_string().len()).max().unwrap_or(1).max(3);
    let mut header = format!("{:<8}", "degree");
    for n in &degrees {
        header += &format!(" {n:>width$}");
    }
    report.line(header);
    let mut dims_json = Map::new();
    let mut reps_json = Map::new();
    for &k in &ks {
        let h: &AmplitudeCohomology = &table[k - 1];
        let mut row = format!("{:<8}", format!("H_({k})"));
        for n in &degrees {
            row += &format!(" {:>width$}", h.dim(*n));
        }
        report.line(row);
        dims_json.insert(k.to_string(), Value::Object(h.dims().iter().map(|(n, d)| (n.to_string(), json!(d))).collect()));
        if representatives {
            let mut per = Map::new();
            for n in &degrees {
                let reps = h.representatives(*n);
                if !reps.is_empty() {
                    per.insert(n.to_string(), Value::Array(reps.iter().map(|r| io::vector_to_json(r)).collect()));
                }
            }
            reps_json.insert(k.to_string(), Value::Object(per));
        }
    }
    if representatives {
        for &k in &ks {
            let h = &table[k - 1];
            for n in &degrees {
                for r in h.representatives(*n) {
                    report.line(format!("H_({k})^{n} representative {}", fmt_vector(r)));
                }
            }
        }
        report.data("representatives", Value::Object(reps_json));
    }
    report.data("cohomology", Value::Object(dims_json));
    Ok(())
}

// ---------------------------------------------------------------- tensor

/// `None` when a factor fails validation; the report then carries the failure.
pub fn tensor(report: &mut Report, a: &str, b: &str) -> CliResult<Option<NComplex>> {
    let c0 = load_complex(report, a)?;
    let c1 = load_complex(report, b)?;
    if c0.field() != c1.field() {
        return Err(CliError("the two complexes have different fields or N".into()));
    }
    let valid_left = complex_check(report, "left factor", &c0);
    let valid_right = complex_check(report, "right factor", &c1);
    let assumption = c0.field().validate_assumption_a();
    assumption_check(report, &assumption);
    if !(valid_left && valid_right && assumption.passed) {
        return Ok(None);
    }
    let t = ncx_core::tensor::tensor(&c0, &c1)?;
    report.line(format!("dims: {}", fmt_dims(t.dims())));
    report.data("dims", Value::Object(t.dims().iter().map(|(n, d)| (n.to_string(), json!(d))).collect()));
    complex_check(report, "tensor product", &t);
    Ok(Some(t))
}

// ---------------------------------------------------------------- hexagons

fn hexagon_lines(report: &mut Report, title: &str, h: &HexagonReport) -> Value {
    report.line(title.to_string());
    let mut nodes = Vec::new();
    for (node, (name, _)) in h.nodes.iter().zip(&h.maps) {
        report.line(format!("  {} {} -> {name}", node.label, fmt_dims(&node.dims)));
        nodes.push(json!({
            "label": node.label,
            "dims": Value::Object(node.dims.iter().map(|(n, d)| (n.to_string(), json!(d))).collect()),
            "outgoing": name,
            "failing_degrees": node.failing_degrees(),
        }));
    }
    Value::Array(nodes)
}

fn hexagon_details(h: &HexagonReport) -> Vec<String> {
    h.nodes
        .iter()
        .filter(|n| !n.exact())
        .map(|n| format!("not exact at {} in degrees {:?}", n.label, n.failing_degrees()))
        .collect()
}

pub fn hexagon(report: &mut Report, path: &str, l: Option<usize>, m: Option<usize>) -> CliResult<()> {
    let c = load_complex(report, path)?;
    let big_n = c.order();
    if big_n < 3 {
        return Err(CliError("internal hexagons need N >= 3".into()));
    }
    for (name, v) in [("--l", l), ("--m", m)] {
        if let Some(v) = v {
            if v == 0 || v >= big_n - 1 {
                return Err(CliError(format!("{name} must lie in 1..={}", big_n - 2)));
            }
        }
    }
    if let (Some(l), Some(m)) = (l, m) {
        if l + m >= big_n {
            return Err(CliError(format!("l + m must be at most {}", big_n - 1)));
        }
    }
    if !complex_check(report, "complex", &c) {
        return Ok(());
    }
    let table = cohomology_table(&c)?;
    let mut all = Map::new();
    for li in 1..big_n - 1 {
        for mi in 1..big_n - li {
            if l.is_some_and(|x| x != li) || m.is_some_and(|x| x != mi) {
                continue;
            }
            let h = internal_hexagon_with(&c, &table, li, mi)?;
            let nodes = hexagon_lines(report, &format!("hexagon (l={li}, m={mi}):"), &h);
            all.insert(format!("{li},{mi}"), nodes);
            report.check(format!("hexagon (l={li}, m={mi}) exact"), h.exact(), hexagon_details(&h));
        }
    }
    report.data("hexagons", Value::Object(all));
    Ok(())
}

fn map_lines(report: &mut Report, name: &str, f: &GradedMap) -> Value {
    let mut comps = Map::new();
    let mut any = false;
    for &n in f.source_dims().keys() {
        if f.target_dims().contains_key(&(n + f.shift())) {
            let m = f.mat(n);
            report.line(format!("  {name} at degree {n}: {}", fmt_matrix(&m)));
            comps.insert(n.to_string(), io::matrix_to_json(&m));
            any = true;
        }
    }
    if !any {
        report.line(format!("  {name}: zero (no degree with nonzero source and target)"));
    }
    Value::Object(comps)
}

pub fn ses(report: &mut Report, path: &str, n: Option<usize>) -> CliResult<()> {
    let s: ShortExactSequence = match load(report, path)? {
        Document::Ses(s) => s,
        other => return Err(CliError(format!("{path}: expected a ses, found kind \"{}\"", other.kind()))),
    };
    let big_n = s.order();
    if let Some(n) = n {
        if n == 0 || n >= big_n {
            return Err(CliError(format!("--n must lie in 1..={}", big_n - 1)));
        }
    }
    let mut ok = true;
    for (name, c) in [("C1", &s.c1), ("C2", &s.c2), ("C3", &s.c3)] {
        ok &= complex_check(report, name, c);
    }
    let r = validate_ses(&s);
    report.check("short exact sequence", r.passed(), r.failures.clone());
    if !ok || !r.passed() {
        return Ok(());
    }
    let ns: Vec<usize> = match n {
        Some(n) => vec![n],
        None => (1..big_n).collect(),
    };
    let mut hexagons = Map::new();
    for &k in &ns {
        let h = snake_hexagon(&s, k)?;
        let nodes = hexagon_lines(report, &format!("snake hexagon (n={k}):"), &h);
        hexagons.insert(k.to_string(), nodes);
        report.check(format!("snake hexagon (n={k}) exact"), h.exact(), hexagon_details(&h));
    }
    let ks: BTreeSet<usize> = ns.iter().flat_map(|&k| [k, big_n - k]).collect();
    let mut dels = Map::new();
    report.line("connecting maps (in cohomology bases):");
    for k in ks {
        let del = connecting(&s, k)?;
        dels.insert(k.to_string(), map_lines(report, &format!("del_{k}"), &del));
    }
    report.data("snake_hexagons", Value::Object(hexagons));
    report.data("connecting", Value::Object(dels));
    Ok(())
}

// ---------------------------------------------------------------- qbinom

pub fn qbinom(report: &mut Report, big_n: usize, field: &str) -> CliResult<()> {
    let f = parse_field(field, big_n)?;
    report.line(format!("field: {}", f.describe()));
    let triangle = q_binomial_triangle(&f, big_n);
    let mut rows = Vec::new();
    for (n, row) in triangle.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|s| s.to_string()).collect();
        report.line(format!("row {n}: {}", cells.join(",")));
        rows.push(io::vector_to_json(row));
    }
    report.data("triangle", Value::Array(rows));
    assumption_check(report, &validate_assumption_a(&f));
    let last = &triangle[big_n];
    let bad: Vec<String> = (1..big_n)
        .filter(|&p| !f.is_zero(&last[p]))
        .map(|p| format!("[{big_n} choose {p}]_q = {}", last[p]))
        .collect();
    report.check(format!("[{big_n} choose p]_q = 0 for 0 < p < {big_n}"), bad.is_empty(), bad);
    Ok(())
}

// ---------------------------------------------------------------- qdga

fn qdga_checks(report: &mut Report, q: &Qdga) {
    let a = q.algebra();
    let dims: Vec<String> = a.dims().iter().map(|d| d.to_string()).collect();
    report.line(format!("window: {}, dims: ({})", a.window(), dims.join(", ")));
    if let Some(w) = a.weights() {
        report.line(format!("weight window: {}", w.window));
    }
    let v = check_qdga(q);
    assumption_check(report, &v.assumption);
    let label = |x: (usize, usize)| a.label(x).to_string();
    let details = match &v.algebra.first_failure {
        None => Vec::new(),
        Some(AlgebraFailure::LeftUnit(x)) => vec![format!("left unit law fails on {}", label(*x))],
        Some(AlgebraFailure::RightUnit(x)) => vec![format!("right unit law fails on {}", label(*x))],
        Some(AlgebraFailure::Associativity(x, y, z)) => {
            vec![format!("associativity fails on ({}, {}, {})", label(*x), label(*y), label(*z))]
        }
    };
    report.check("graded algebra (unit, associativity)", v.algebra.passed(), details);
    let details = v
        .nilpotency_failures
        .iter()
        .map(|n| format!("d^{} != 0 on degree {n}", q.order()))
        .collect();
    report.check("d^N = 0 on window", v.nilpotency_failures.is_empty(), details);
    let mut details = vec![];
    if !v.leibniz.passed() {
        details.push(format!(
            "{} of {} pairs violate d(xy) = d(x)y + q^deg(x) x d(y)",
            v.leibniz.violations.len(),
            v.leibniz.pairs_checked
        ));
    }
    for w in v.leibniz.violations.iter().take(5) {
        details.push(format!(
            "x = {}, y = {}: d(xy) = {}, d(x)y + q^n x d(y) = {}",
            label(w.x),
            label(w.y),
            fmt_combination(a, w.x.0 + w.y.0 + 1, &w.lhs),
            fmt_combination(a, w.x.0 + w.y.0 + 1, &w.rhs)
        ));
    }
    report.check("twisted Leibniz rule", v.leibniz.passed(), details);
    let witnesses: Vec<Value> = v
        .leibniz
        .violations
        .iter()
        .map(|w| json!({"x": label(w.x), "y": label(w.y), "lhs": io::vector_to_json(&w.lhs), "rhs": io::vector_to_json(&w.rhs)}))
        .collect();
    report.data("leibniz_violations", Value::Array(witnesses));
    report.data("leibniz_pairs_checked", json!(v.leibniz.pairs_checked));
    report.data("associativity_triples_checked", json!(v.algebra.triples_checked));
}

pub fn qdga_check(report: &mut Report, path: &str) -> CliResult<()> {
    match load(report, path)? {
        Document::Algebra(q) => {
            report.line(format!("field: {}", q.field().describe()));
            qdga_checks(report, &q);
            Ok(())
        }
        other => Err(CliError(format!("{path}: expected an algebra, found kind \"{}\"", other.kind()))),
    }
}
