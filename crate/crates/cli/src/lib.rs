//! Command implementations behind the `gkm` binary. Every command returns a
//! [`Report`], rendered either as a table or as JSON.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use gkm_core::coeffs::{format_rational, BigRational, RatFunc, Scalar};
use gkm_core::free_algebra::{AlgebraError, MAX_TOTAL_DEGREE};
use gkm_core::gkm::SerrePresentation;
use gkm_core::ncsf::{
    coassociativity_check, comult_s_check, lambda_sigma_inverse_check, quasidet_expand, s_from_psi_explicit,
    s_from_psi_recursive, NcsfBasis, NcsfExpr,
};
use gkm_core::quiver::{DimVector, GeneratorIndex, Quiver, QuiverError, QuiverSpec, TwistForm};
use gkm_core::seminil::{component_count_one_vertex, kostant_count};
use gkm_core::twist::{
    coassociativity_check as coproduct_coassociativity, coproduct_descends_check, minus_q_correspondence_check,
    minus_q_dimension_clause, psi_identity_check, tilde_coproduct_check, twisted_bialgebra_check, TensorTwist,
};

/// Errors that abort a command before any check runs (exit code 2).
#[derive(Debug)]
pub enum CliError {
    Io { path: String, message: String },
    Json { path: String, message: String },
    Quiver { path: String, line: Option<usize>, source: QuiverError },
    Usage(String),
    Algebra(AlgebraError),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io { path, message } => write!(f, "{path}: {message}"),
            CliError::Json { path, message } => write!(f, "{path}: malformed JSON: {message}"),
            CliError::Quiver { path, line: Some(l), source } => write!(f, "{path}:{l}: {source}"),
            CliError::Quiver { path, line: None, source } => write!(f, "{path}: {source}"),
            CliError::Usage(m) => f.write_str(m),
            CliError::Algebra(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        CliError::Algebra(e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Fail,
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Ok => "ok",
            Status::Fail => "FAIL",
            Status::Info => "info",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: String,
    pub status: Status,
    pub message: String,
    pub payload: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub input: BTreeMap<String, Value>,
    pub results: Vec<CheckResult>,
    pub exit_status: i32,
}

impl Report {
    fn new(command: &str) -> Self {
        Report { command: command.to_string(), input: BTreeMap::new(), results: Vec::new(), exit_status: 0 }
    }

    fn input(mut self, key: &str, v: impl Serialize) -> Self {
        self.input.insert(key.to_string(), serde_json::to_value(v).expect("serializable"));
        self
    }

    fn push(&mut self, check: impl Into<String>, status: Status, message: impl Into<String>, payload: Value) {
        self.results.push(CheckResult { check: check.into(), status, message: message.into(), payload });
    }

    fn ok_or_fail(&mut self, check: impl Into<String>, ok: bool, message: impl Into<String>, payload: Value) {
        self.push(check, if ok { Status::Ok } else { Status::Fail }, message, payload);
    }

    fn finish(mut self) -> Self {
        self.exit_status = i32::from(self.results.iter().any(|r| r.status == Status::Fail));
        self
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("{}\n", self.command);
        for r in &self.results {
            out.push_str(&format!("[{}] {}: {}\n", r.status, r.check, r.message));
        }
        let fails = self.results.iter().filter(|r| r.status == Status::Fail).count();
        out.push_str(&format!("{} checks, {} failed\n", self.results.len(), fails));
        out
    }
}

/// Reads a quiver file `{"vertices": [...], "arrows": [[src, dst], ...]}`.
pub fn parse_quiver_file(path: &Path) -> Result<Quiver, CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io { path: shown.clone(), message: e.to_string() })?;
    parse_quiver_str(&text, &shown)
}

pub fn parse_quiver_str(text: &str, path: &str) -> Result<Quiver, CliError> {
    let spec: QuiverSpec =
        serde_json::from_str(text).map_err(|e| CliError::Json { path: path.to_string(), message: e.to_string() })?;
    Quiver::from_spec(&spec).map_err(|source| {
        let needle = match &source {
            QuiverError::UnknownVertex { vertex, .. } | QuiverError::DuplicateVertex(vertex) => {
                Some(format!("\"{vertex}\""))
            }
            _ => None,
        };
        let line = needle.and_then(|n| {
            let lines: Vec<&str> = text.lines().collect();
            let from = match source {
                QuiverError::UnknownVertex { .. } => lines.iter().position(|l| l.contains("\"arrows\"")).unwrap_or(0),
                _ => 0,
            };
            let hits: Vec<usize> = (from..lines.len()).filter(|&i| lines[i].contains(&n)).collect();
            let pick = match source {
                QuiverError::DuplicateVertex(_) => hits.get(1).or(hits.first()),
                _ => hits.first(),
            };
            pick.map(|i| i + 1)
        });
        CliError::Quiver { path: path.to_string(), line, source }
    })
}

/// Reads `{"psi": [[...], ...]}` for a quiver with `n` vertices.
pub fn parse_twist_file(path: &Path, n: usize) -> Result<TwistForm, CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io { path: shown.clone(), message: e.to_string() })?;
    let t: TwistForm =
        serde_json::from_str(&text).map_err(|e| CliError::Json { path: shown.clone(), message: e.to_string() })?;
    TwistForm::new(t.psi, n).map_err(|source| CliError::Quiver { path: shown, line: None, source })
}

fn check_bound(bound: u32) -> Result<(), CliError> {
    if bound > MAX_TOTAL_DEGREE {
        return Err(CliError::Usage(format!("degree bound {bound} exceeds the limit {MAX_TOTAL_DEGREE}")));
    }
    Ok(())
}

fn degree_label(d: &[u32]) -> String {
    DimVector(d.to_vec()).to_string()
}

pub fn info(q: &Quiver) -> Report {
    let mut r = Report::new("info").input("quiver", q.to_spec());
    for (name, kind) in q.classify_vertices() {
        let v = q.vertex_index(&name).expect("listed vertex");
        r.push(
            format!("vertex {name}"),
            Status::Info,
            format!("{kind}, {} loops", q.loops_at(v)),
            json!({"vertex": name, "kind": kind.to_string(), "loops": q.loops_at(v)}),
        );
    }
    r.push("euler form", Status::Info, format!("{:?}", q.euler_matrix().0), json!(q.euler_matrix().0));
    r.push(
        "symmetrised form",
        Status::Info,
        format!("{:?}", q.symmetrized_matrix().0),
        json!(q.symmetrized_matrix().0),
    );
    let valid = q.validate_twist(&q.default_twist());
    r.ok_or_fail(
        "default twist",
        valid.is_ok(),
        match &valid {
            Ok(()) => "parity condition holds".to_string(),
            Err(e) => e.to_string(),
        },
        json!(q.default_twist().psi.0),
    );
    r.finish()
}

fn dims_generic<S: Scalar>(p: &SerrePresentation<S>, max: u32, r: &mut Report) -> Result<(), CliError> {
    for row in p.dimension_table(max)? {
        r.push(
            format!("degree {}", degree_label(&row.degree)),
            Status::Info,
            format!("free {}, ideal {}, dim {}", row.free, row.ideal, row.dim),
            serde_json::to_value(&row).expect("serializable"),
        );
    }
    Ok(())
}

pub fn dims(q: &Quiver, max: u32, quantum: bool) -> Result<Report, CliError> {
    check_bound(max)?;
    let mut r = Report::new("dims").input("quiver", q.to_spec()).input("max_degree", max).input("quantum", quantum);
    if quantum {
        dims_generic(&SerrePresentation::quantum(q, max), max, &mut r)?;
    } else {
        dims_generic(&SerrePresentation::classical(q, max), max, &mut r)?;
    }
    Ok(r.finish())
}

fn relation_checks<S: Scalar>(p: &SerrePresentation<S>, r: &mut Report) -> Result<(), CliError> {
    let q = p.quiver();
    for (k, rel) in p.relations().iter().enumerate() {
        let nf = p.normal_form(rel)?;
        r.ok_or_fail(
            format!("relation {k}"),
            nf.is_zero(),
            format!("{} reduces to {}", rel.render(q), nf.render(q)),
            json!({"relation": rel.render(q), "normal_form": nf.render(q)}),
        );
    }
    for i in q.real_vertices() {
        for j in 0..q.vertex_count() {
            if j == i {
                continue;
            }
            for n in 0..=p.bound() {
                match p.divided_serre_check(i, j, n) {
                    Ok(c) => r.ok_or_fail(
                        format!("divided-power sum {} {} n={n}", q.vertex_name(i), q.vertex_name(j)),
                        c.in_ideal,
                        format!("exponent {}, degree {}", c.exponent, degree_label(&c.degree)),
                        serde_json::to_value(&c).expect("serializable"),
                    ),
                    Err(AlgebraError::BoundExceeded { .. } | AlgebraError::LevelUnavailable { .. }) => break,
                    Err(e) => return Err(e.into()),
                }
            }
        }
    }
    Ok(())
}

pub fn serre_check(q: &Quiver, bound: u32, quantum: bool) -> Result<Report, CliError> {
    check_bound(bound)?;
    let mut r =
        Report::new("serre-check").input("quiver", q.to_spec()).input("bound", bound).input("quantum", quantum);
    if quantum {
        relation_checks(&SerrePresentation::quantum(q, bound), &mut r)?;
    } else {
        let p = SerrePresentation::classical(q, bound);
        relation_checks(&p, &mut r)?;
        for j in q.real_vertices() {
            for v in (0..q.vertex_count()).filter(|&v| q.kind(v).is_imaginary()) {
                for n in 1..=bound {
                    let (full, lower) = match (p.tilde_serre_check(j, v, n, 0), p.tilde_serre_check(j, v, n, 1)) {
                        (Ok(a), Ok(b)) => (a, b),
                        _ => break,
                    };
                    let label = format!("tilde relation {} {} n={n}", q.vertex_name(j), q.vertex_name(v));
                    r.ok_or_fail(
                        label,
                        full.in_ideal && !lower.in_ideal,
                        format!(
                            "exponent {} in ideal: {}; exponent {} in ideal: {}",
                            full.exponent, full.in_ideal, lower.exponent, lower.in_ideal
                        ),
                        json!({"relation": full, "control": lower}),
                    );
                }
            }
        }
    }
    Ok(r.finish())
}

pub fn ncsf_expand(basis: NcsfBasis, n: u32, target: NcsfBasis) -> Report {
    let x = NcsfExpr::generator(basis, n).to_basis(target);
    let mut r = Report::new("ncsf expand").input("basis", basis).input("n", n).input("target", target);
    let terms: Vec<Value> = x
        .terms()
        .map(|(parts, c)| json!({"parts": parts, "coeff": format_rational(c)}))
        .collect();
    r.push(format!("{basis}{n}"), Status::Info, x.to_string(), json!(terms));
    if n > 0 {
        let scaled = x.scale(&BigRational::from_integer(n.into()));
        r.push(format!("{n} {basis}{n}"), Status::Info, scaled.to_string(), Value::Null);
    }
    r.finish()
}

pub fn ncsf_check(max: u32) -> Report {
    let mut r = Report::new("ncsf check").input("max", max);
    for n in 1..=max {
        let rec = s_from_psi_recursive(n);
        let ok = rec == s_from_psi_explicit(n) && rec == quasidet_expand(n);
        r.ok_or_fail(format!("S{n} three routes"), ok, "recursion, closed sum, quasi-determinant", Value::Null);
    }
    for n in 0..=max {
        r.ok_or_fail(format!("coproduct S{n}"), comult_s_check(n), "sum of S_p (x) S_q", Value::Null);
    }
    let ls = lambda_sigma_inverse_check(max);
    r.ok_or_fail(
        "lambda sigma inverse",
        ls.ok(),
        format!("Lambda_k in the S basis for k <= {max}"),
        serde_json::to_value(&ls).expect("serializable"),
    );
    let coassoc_max = max.min(6);
    let co = coassociativity_check(coassoc_max);
    r.ok_or_fail(
        "coassociativity",
        co.is_ok(),
        format!("Psi monomials of weight <= {coassoc_max}"),
        json!(co.err()),
    );
    r.finish()
}

pub fn twist_check(q: &Quiver, bound: u32, t: &TwistForm, label: &str) -> Result<Report, CliError> {
    check_bound(bound)?;
    let n = q.vertex_count();
    let mut r = Report::new("twist-check")
        .input("quiver", q.to_spec())
        .input("bound", bound)
        .input("twist", label)
        .input("psi", &t.psi.0);
    let valid = q.validate_twist(t);
    r.ok_or_fail(
        "parity condition",
        valid.is_ok(),
        match &valid {
            Ok(()) => "psi(d,e) + psi(e,d) = (d,e) mod 2".to_string(),
            Err(e) => e.to_string(),
        },
        Value::Null,
    );
    let degrees = DimVector::all_up_to(n, bound);
    let identity = degrees
        .iter()
        .flat_map(|u| degrees.iter().map(move |v| (u, v)))
        .filter(|(u, v)| u.total() + v.total() <= bound)
        .all(|(u, v)| psi_identity_check(t, u, v));
    r.ok_or_fail("sign identity", identity, "all splittings of degree pairs within the bound", Value::Null);
    let gens = q.generators_up_to(bound);
    for j in q.real_vertices().into_iter().map(|v| GeneratorIndex::new(v, 1)) {
        for &i in gens.iter().filter(|&&i| i != j) {
            let report = minus_q_correspondence_check(q, t, j, i).map_err(|e| CliError::Usage(e.to_string()))?;
            if report.degree.iter().sum::<u32>() > bound {
                continue;
            }
            r.ok_or_fail(
                format!("q -> -q ({},1) ({},{})", q.vertex_name(j.vertex), q.vertex_name(i.vertex), i.level),
                report.holds(),
                match report.overall_sign {
                    Some(s) => format!("exponent {}, overall sign {s:+}", report.exponent),
                    None => format!("exponent {}, no constant sign", report.exponent),
                },
                serde_json::to_value(&report).expect("serializable"),
            );
        }
    }
    let dims = minus_q_dimension_clause(q, bound).map_err(|e| CliError::Usage(e.to_string()))?;
    let equal = dims.iter().all(|d| d.dim_q == d.dim_minus_q);
    r.ok_or_fail(
        "dimension clause",
        equal,
        format!("dim U_q[d] = dim U_-q[d] for total <= {bound}"),
        serde_json::to_value(&dims).expect("serializable"),
    );
    let axiom_bound = bound.min(4);
    let bad = twisted_bialgebra_check::<RatFunc>(q, t, &TensorTwist::quantum(q), axiom_bound)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    r.ok_or_fail(
        "twisted bialgebra axiom",
        bad.is_none(),
        format!("word pairs of total degree <= {axiom_bound}"),
        json!(bad.map(|(x, y)| [x.render(q), y.render(q)])),
    );
    Ok(r.finish())
}

fn descends_generic<S: Scalar>(p: &SerrePresentation<S>, xi: &TensorTwist, r: &mut Report) -> Result<(), CliError> {
    let q = p.quiver();
    for row in coproduct_descends_check(p, xi).map_err(|e| CliError::Usage(e.to_string()))? {
        r.ok_or_fail(
            format!("coproduct of relation {}", row.relation),
            row.failing_bidegree.is_none(),
            match &row.failing_bidegree {
                None => format!("degree {}: every bidegree reduces to 0", degree_label(&row.degree)),
                Some((u, v)) => format!("survives in bidegree {} (x) {}", degree_label(u), degree_label(v)),
            },
            serde_json::to_value(&row).expect("serializable"),
        );
    }
    let bound = p.bound().min(5);
    let co = coproduct_coassociativity::<S>(q, xi, bound).map_err(|e| CliError::Usage(e.to_string()))?;
    r.ok_or_fail(
        "coassociativity",
        co.is_none(),
        format!("words of total degree <= {bound}"),
        json!(co.map(|w| w.render(q))),
    );
    Ok(())
}

pub fn coproduct_check(q: &Quiver, bound: u32, quantum: bool) -> Result<Report, CliError> {
    check_bound(bound)?;
    let mut r =
        Report::new("coproduct-check").input("quiver", q.to_spec()).input("bound", bound).input("quantum", quantum);
    if quantum {
        descends_generic(&SerrePresentation::quantum(q, bound), &TensorTwist::quantum(q), &mut r)?;
    } else {
        let p = SerrePresentation::classical(q, bound);
        descends_generic(&p, &TensorTwist::trivial(q.vertex_count()), &mut r)?;
        for v in (0..q.vertex_count()).filter(|&v| q.kind(v).is_imaginary()) {
            for n in 1..=bound {
                let ok = tilde_coproduct_check(&p, v, n).map_err(|e| CliError::Usage(e.to_string()))?;
                r.ok_or_fail(
                    format!("coproduct of e~ {} n={n}", q.vertex_name(v)),
                    ok,
                    "sum of e~_p (x) e~_q",
                    Value::Null,
                );
            }
        }
    }
    Ok(r.finish())
}

fn loop_free_type(q: &Quiver) -> Option<&'static str> {
    let n = q.vertex_count();
    if q.arrows().iter().any(|&(a, b)| a == b) {
        return None;
    }
    let degrees: Vec<usize> = (0..n).map(|v| (0..n).map(|w| q.arrows_between(v, w)).sum()).collect();
    let edges: usize = (0..n).flat_map(|v| (v + 1..n).map(move |w| (v, w))).map(|(v, w)| q.arrows_between(v, w)).sum();
    let path = edges + 1 == n && degrees.iter().all(|&d| d <= 2) && (0..n).all(|v| (0..n).all(|w| q.arrows_between(v, w) <= 1));
    match (n, path) {
        (2, true) => Some("A2"),
        (3, true) => Some("A3"),
        _ => None,
    }
}

pub fn components(q: &Quiver, max_d: u32) -> Result<Report, CliError> {
    check_bound(max_d)?;
    let mut r = Report::new("components").input("quiver", q.to_spec()).input("max_d", max_d);
    let p = SerrePresentation::classical(q, max_d);
    if q.vertex_count() == 1 {
        let g = q.loops_at(0);
        for d in 0..=max_d {
            let dim = p.graded_dimension(&DimVector(vec![d]))? as u64;
            let count = component_count_one_vertex(g, d);
            r.ok_or_fail(
                format!("d={d}"),
                dim == count,
                format!("components {count}, graded rank {dim}"),
                json!({"d": d, "components": count, "graded_rank": dim}),
            );
        }
        return Ok(r.finish());
    }
    let oracle = loop_free_type(q);
    r.push(
        "oracle",
        Status::Info,
        match oracle {
            Some(t) => format!("loop-free type {t}: graded rank compared with the Kostant count"),
            None => "expected count = graded rank; no independent oracle".to_string(),
        },
        Value::Null,
    );
    for d in DimVector::all_up_to(q.vertex_count(), max_d) {
        let dim = p.graded_dimension(&d)? as u64;
        match oracle {
            Some(t) => {
                let k = kostant_count(t, &d.0).expect("known type");
                r.ok_or_fail(
                    format!("d={d}"),
                    k == dim,
                    format!("Kostant {k}, graded rank {dim}"),
                    json!({"degree": d.0, "kostant": k, "graded_rank": dim}),
                );
            }
            None => r.push(format!("d={d}"), Status::Info, format!("graded rank {dim}"), json!({"degree": d.0, "graded_rank": dim})),
        }
    }
    Ok(r.finish())
}
