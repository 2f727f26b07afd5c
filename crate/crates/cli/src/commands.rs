use std::fmt::Write as _;
use std::io::Read;

use gammalc_core::arith::format_rational;
use gammalc_core::coefficients::{coeff_table, diagonal, quadratic_ab, quadratic_ab_odd, r_sum, Parity};
use gammalc_core::concavity::{
    check_main_theorem, check_ulc_transfer, has_internal_zeros, is_log_concave, is_ultra_log_concave, is_unimodal,
    pairwise_lc, SequenceReport, TransferRecord,
};
use gammalc_core::paths::{
    certificate, lhs_by_formula, render_grid, rhs_by_formula, segment_intersections, LatticePath, SegmentConfig,
    DEFAULT_CAP,
};
use gammalc_core::sweep::{diagonal_sweep, oracle_sweep, path_sweep, r_sum_sweep, transfer_exhaustive, SweepSummary};
use gammalc_core::{gamma_to_h, h_to_gamma, parse_rational, parse_rational_list, BigRat, Error, GammaVector, SymmetricPolynomial};
use serde_json::{json, Value};

use crate::args::{Command, Input, Suite};

pub const CAP_ENV: &str = "GAMMALC_ENUM_CAP";

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(Error::ClaimViolation(_) | Error::DecompositionMismatch { .. } | Error::Internal(_)) => 3,
            CliError::Core(_) => 2,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self.exit_code() {
            3 => "assertion",
            _ => "usage",
        }
    }

    pub fn message(&self) -> String {
        match self {
            CliError::Usage(m) => m.clone(),
            CliError::Core(e @ Error::CapExceeded { .. }) => {
                format!("{e}; raise --cap or {CAP_ENV}, or use --formula-only")
            }
            CliError::Core(e) => e.to_string(),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Rendered result of one command.
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub code: u8,
}

fn outcome(text: String, json: Value, code: u8) -> Outcome {
    Outcome { text, json, code }
}

pub fn run(command: &Command) -> CliResult<Outcome> {
    match command {
        Command::Gamma { to_h, input, .. } => cmd_gamma(*to_h, input),
        Command::Check {
            lc,
            ulc,
            unimodal,
            no_internal_zeros,
            pairwise,
            main_theorem,
            ulc_theorem,
            input,
        } => cmd_check(
            &Checks {
                lc: *lc,
                ulc: *ulc,
                unimodal: *unimodal,
                no_internal_zeros: *no_internal_zeros,
                pairwise: *pairwise,
                main_theorem: *main_theorem,
                ulc_theorem: *ulc_theorem,
            },
            input,
        ),
        Command::Coeffs { n, i, regroup, zeros } => cmd_coeffs(*n, *i, *regroup, *zeros),
        Command::Diagonal { n, i, l, even, .. } => {
            cmd_diagonal(*n, *i, *l, if *even { Parity::Even } else { Parity::Odd })
        }
        Command::Certify {
            n,
            i,
            r,
            ascii,
            formula_only,
            cap,
        } => cmd_certify(*n, *i, *r, *ascii, *formula_only, *cap),
        Command::Render { n, i, r, path } => cmd_render(*n, *i, *r, path),
        Command::Sweep { suite, max_n, cap } => cmd_sweep(*suite, *max_n, *cap),
    }
}

fn resolve_cap(flag: Option<u64>) -> CliResult<u64> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var(CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{CAP_ENV} must be a nonnegative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

/// Coefficients plus the degree carried by a JSON input, if any.
fn read_input(input: &Input) -> CliResult<(Option<usize>, Vec<BigRat>)> {
    let text = match (&input.values, &input.input) {
        (Some(v), _) if v != "-" => v.clone(),
        (_, Some(path)) if path.as_os_str() != "-" => std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?,
        (None, None) => return Err(CliError::Usage("no coefficients given (inline list, --input FILE or -)".into())),
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Usage(format!("cannot read standard input: {e}")))?;
            buf
        }
    };
    let (json_n, coeffs) = if text.trim_start().starts_with('{') {
        let raw: gammalc_core::poly::CoeffsJson = serde_json::from_str(&text).map_err(|e| {
            CliError::Core(Error::Parse {
                column: e.column(),
                message: format!("line {}: {e}", e.line()),
            })
        })?;
        let coeffs = raw.coeffs.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>()?;
        (Some(raw.n), coeffs)
    } else {
        (None, parse_rational_list(&text)?)
    };
    match (json_n, input.n) {
        (Some(a), Some(b)) if a != b => Err(CliError::Usage(format!("--n {b} contradicts n = {a} in the input"))),
        (a, b) => Ok((a.or(b), coeffs)),
    }
}

fn list(v: &[BigRat]) -> String {
    v.iter().map(format_rational).collect::<Vec<_>>().join(",")
}

fn cmd_gamma(to_h: bool, input: &Input) -> CliResult<Outcome> {
    let (n, coeffs) = read_input(input)?;
    if to_h {
        let n = n.ok_or_else(|| CliError::Usage("--to-h needs --n (or n in the JSON input)".into()))?;
        let g = GammaVector::new(n, coeffs)?;
        let h = gamma_to_h(&g);
        let text = format!("h = {}\n", list(h.coeffs()));
        let json = json!({"command": "gamma", "direction": "to-h", "input": g, "output": h});
        Ok(outcome(text, json, 0))
    } else {
        let n = n.unwrap_or(coeffs.len().saturating_sub(1));
        let h = SymmetricPolynomial::new(n, coeffs)?;
        let g = h_to_gamma(&h);
        let text = format!("gamma = {}\n", list(g.coeffs()));
        let json = json!({"command": "gamma", "direction": "to-gamma", "input": h, "output": g});
        Ok(outcome(text, json, 0))
    }
}

struct Checks {
    lc: bool,
    ulc: Option<i64>,
    unimodal: bool,
    no_internal_zeros: bool,
    pairwise: bool,
    main_theorem: bool,
    ulc_theorem: bool,
}

fn report_line(out: &mut String, label: &str, r: &SequenceReport, verdict: bool) {
    let _ = write!(out, "{label}: {verdict}");
    if let Some(w) = &r.witness {
        let _ = write!(out, " (witness {})", w.iter().map(ToString::to_string).collect::<Vec<_>>().join(","));
    }
    out.push('\n');
}

fn transfer_line(out: &mut String, label: &str, t: &TransferRecord) {
    let mark = |b: bool| if b { "yes" } else { "no" };
    let _ = writeln!(
        out,
        "{label}: hypothesis {}, conclusion {}{}",
        mark(t.hypothesis),
        mark(t.conclusion),
        if t.violation { ", VIOLATED" } else { "" }
    );
}

fn cmd_check(c: &Checks, input: &Input) -> CliResult<Outcome> {
    if !(c.lc || c.ulc.is_some() || c.unimodal || c.no_internal_zeros || c.pairwise || c.main_theorem || c.ulc_theorem)
    {
        return Err(CliError::Usage("choose at least one predicate flag".into()));
    }
    let (n, a) = read_input(input)?;
    let mut text = String::new();
    let mut results = Vec::new();
    let mut all = true;
    let mut violated = false;
    let mut seq = |label: &str, key: &str, r: SequenceReport, verdict: bool, text: &mut String| {
        report_line(text, label, &r, verdict);
        all &= verdict;
        results.push(json!({"predicate": key, "verdict": verdict, "report": r}));
    };
    if c.lc {
        let r = is_log_concave(&a)?;
        let v = r.verdict;
        seq("log-concave", "log-concave", r, v, &mut text);
    }
    if let Some(m) = c.ulc {
        let r = is_ultra_log_concave(&a, m)?;
        let v = r.verdict;
        seq(&format!("ultra log-concave of order {m}"), "ultra-log-concave", r, v, &mut text);
    }
    if c.unimodal {
        let r = is_unimodal(&a);
        let v = r.verdict;
        seq("unimodal", "unimodal", r, v, &mut text);
    }
    if c.no_internal_zeros {
        let r = has_internal_zeros(&a);
        let v = !r.verdict;
        seq("no internal zeros", "no-internal-zeros", r, v, &mut text);
    }
    if c.pairwise {
        let r = pairwise_lc(&a)?;
        let v = r.verdict;
        seq("pairwise log-concave", "pairwise-log-concave", r, v, &mut text);
    }
    let mut transfers = Vec::new();
    if c.main_theorem || c.ulc_theorem {
        let n = n.ok_or_else(|| CliError::Usage("theorem checks need --n (or n in the JSON input)".into()))?;
        let g = GammaVector::new(n, a.clone())?;
        if c.main_theorem {
            let t = check_main_theorem(&g)?;
            transfer_line(&mut text, "main theorem", &t);
            violated |= t.violation;
            transfers.push(json!({"theorem": "log-concave", "record": t}));
        }
        if c.ulc_theorem {
            let t = check_ulc_transfer(&g)?;
            transfer_line(&mut text, "ultra log-concave transfer", &t);
            violated |= t.violation;
            transfers.push(json!({"theorem": "ultra-log-concave", "record": t}));
        }
    }
    let code = if violated {
        3
    } else if all {
        0
    } else {
        1
    };
    let json = json!({
        "command": "check",
        "input": a.iter().map(format_rational).collect::<Vec<_>>(),
        "predicates": results,
        "transfers": transfers,
        "all_hold": all && !violated,
    });
    Ok(outcome(text, json, code))
}

fn cmd_coeffs(n: i64, i: i64, regroup: bool, zeros: bool) -> CliResult<Outcome> {
    let t = coeff_table(n, i)?;
    let rendered = if regroup { t.render_regrouped() } else { t.render(zeros) };
    let text = format!("h_{i}^2 - h_{}h_{} = {rendered}\n", i - 1, i + 1);
    let json = json!({"command": "coeffs", "table": t.to_json(), "rendered": rendered});
    Ok(outcome(text, json, 0))
}

fn cmd_diagonal(n: i64, i: i64, ell: i64, parity: Parity) -> CliResult<Outcome> {
    let d = diagonal(n, i, ell, parity)?;
    let quad = match parity {
        Parity::Even => quadratic_ab(n, i, ell)?,
        Parity::Odd => quadratic_ab_odd(n, i, ell)?,
    };
    let ok = d.tail_sign_ok();
    let values = d.values.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    let variable = match parity {
        Parity::Even => "j^2",
        Parity::Odd => "(2j+1)^2",
    };
    let text = format!(
        "{values} | tail-sign: {}\nA = {}, B = {} (sign of A {variable} + B)\n",
        if ok { "OK" } else { "VIOLATED" },
        quad.a,
        quad.b
    );
    let json = json!({"command": "diagonal", "diagonal": d, "tail_sign_ok": ok, "quadratic": quad});
    Ok(outcome(text, json, if ok { 0 } else { 3 }))
}

fn config_header(cfg: &SegmentConfig) -> String {
    format!(
        "n={} i={} r={}  O={} D={}  PQ: {}-{}  P'Q': {}-{}\n",
        cfg.n,
        cfg.i,
        cfg.r,
        cfg.o(),
        cfg.d(),
        cfg.p(),
        cfg.q(),
        cfg.p_prime(),
        cfg.q_prime()
    )
}

fn cmd_certify(n: i64, i: i64, r: i64, ascii: bool, formula_only: bool, cap: Option<u64>) -> CliResult<Outcome> {
    let cfg = SegmentConfig::new(n, i, r)?;
    let mut text = config_header(&cfg);
    let grid = ascii.then(|| render_grid(&cfg, None));
    let (lhs, rhs) = (lhs_by_formula(&cfg), rhs_by_formula(&cfg));
    let coefficient_sum = if i >= 1 { Some(r_sum(n, i, r)?) } else { None };
    let _ = writeln!(text, "LHS = {lhs}\nRHS = {rhs}\nLHS - RHS = {}", &lhs - &rhs);
    if let Some(s) = &coefficient_sum {
        let _ = writeln!(text, "coefficient sum r_sum = {s}");
    }
    let mut json = json!({
        "command": "certify",
        "config": cfg,
        "lhs": lhs.to_string(),
        "rhs": rhs.to_string(),
        "r_sum": coefficient_sum.map(|s| s.to_string()),
    });
    if !formula_only {
        let c = certificate(&cfg, resolve_cap(cap)?).map_err(|e| match e {
            Error::DecompositionMismatch { .. } if r < i => CliError::Core(Error::Internal(format!(
                "{e}; for r < i the path sums also count PQ points with k < 0, see the README"
            ))),
            e => CliError::Core(e),
        })?;
        let _ = writeln!(text, "avoiding P'Q': {} over {} paths", c.avoiding_term, c.avoiding_paths);
        for t in &c.boundary_terms {
            let _ = writeln!(text, "boundary R={} R'={}: {} over {} paths", t.r, t.r_prime, t.count, t.paths);
        }
        let mut parts = vec![c.avoiding_term.to_string()];
        parts.extend(c.boundary_terms.iter().map(|t| t.count.to_string()));
        let _ = writeln!(
            text,
            "total {} = {}, {} contributing paths (of {})",
            c.total,
            parts.join(" + "),
            c.contributing_paths,
            c.total_paths
        );
        json["certificate"] = serde_json::to_value(&c).expect("certificate serializes");
    }
    if let Some(g) = grid {
        text.push('\n');
        text.push_str(&g);
        json["ascii"] = Value::String(g);
    }
    Ok(outcome(text, json, 0))
}

fn cmd_render(n: i64, i: i64, r: i64, steps: &str) -> CliResult<Outcome> {
    let cfg = SegmentConfig::new(n, i, r)?;
    let path = LatticePath::parse(cfg.o(), steps)?;
    if path.end() != cfg.d() {
        return Err(CliError::Core(Error::EndpointMismatch {
            expected_start: cfg.o().to_string(),
            expected_end: cfg.d().to_string(),
        }));
    }
    let grid = render_grid(&cfg, Some(&path));
    let on_pq = segment_intersections(&path, &cfg.pq());
    let on_ppqq = segment_intersections(&path, &cfg.ppqq());
    let fmt = |v: &[gammalc_core::paths::LatticePoint]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    let text = format!(
        "{}{grid}PQ hits ({}): {}\nP'Q' hits ({}): {}\n",
        config_header(&cfg),
        on_pq.len(),
        fmt(&on_pq),
        on_ppqq.len(),
        fmt(&on_ppqq)
    );
    let json = json!({
        "command": "render",
        "config": cfg,
        "path": path.to_string(),
        "ascii": grid,
        "pq_hits": on_pq,
        "ppqq_hits": on_ppqq,
    });
    Ok(outcome(text, json, 0))
}

fn cmd_sweep(suite: Suite, max_n: Option<i64>, cap: Option<u64>) -> CliResult<Outcome> {
    let want = |s: Suite| suite == Suite::All || suite == s;
    let limit = |default: i64| max_n.unwrap_or(default);
    let mut rows: Vec<(String, SweepSummary)> = Vec::new();
    if want(Suite::Oracle) {
        let n = limit(20);
        rows.push((format!("oracle n<={n}"), oracle_sweep(n)?));
    }
    if want(Suite::Diagonal) {
        let n = limit(30);
        let d = diagonal_sweep(n)?;
        rows.push((format!("tail-sign n<={n}"), d.tail_sign));
        rows.push((format!("A<0,B>0 n<={n}"), d.quadratic_signs));
        rows.push((format!("identity n<={n}"), d.identity));
        rows.push((format!("degenerate n<={n}"), d.degenerate));
    }
    if want(Suite::Rsum) {
        let n = limit(30);
        let s = r_sum_sweep(n)?;
        rows.push((format!("r_sum>=0 n<={n}"), s.nonnegative));
        rows.push((format!("r_sum=0,r>i n<={n}"), s.vanishing));
        rows.push((format!("r_sum=0,r>i,2i<n-1 n<={n}"), s.vanishing_interior));
    }
    if want(Suite::Paths) {
        let n = limit(10);
        let cases = path_sweep(n, resolve_cap(cap)?)?;
        for (label, upper) in [("paths r>=i", true), ("paths r<i", false)] {
            let subset: Vec<_> = cases.iter().filter(|c| (c.r >= c.i) == upper).collect();
            let failures = subset
                .iter()
                .filter(|c| !c.passed())
                .map(|c| format!("n={} i={} r={}: {}", c.n, c.i, c.r, c.detail.clone().unwrap_or_default()))
                .collect();
            rows.push((format!("{label} n<={n}"), SweepSummary { cases: subset.len() as u64, failures }));
        }
    }
    if want(Suite::Transfer) {
        let n = limit(12).max(0) as usize;
        let t = transfer_exhaustive(n, 3)?;
        rows.push((
            format!("LC transfer n<={n}"),
            SweepSummary { cases: t.vectors, failures: t.lc_violations },
        ));
        rows.push((
            format!("ULC transfer n<={n}"),
            SweepSummary { cases: t.vectors, failures: t.ulc_violations },
        ));
    }
    let width = rows.iter().map(|(l, _)| l.len()).max().unwrap_or(5).max(5);
    let mut text = format!("{:<width$}  {:>8}  {:>8}  status\n", "suite", "cases", "failures");
    for (label, s) in &rows {
        let _ = writeln!(
            text,
            "{label:<width$}  {:>8}  {:>8}  {}",
            s.cases,
            s.failures.len(),
            if s.passed() { "PASS" } else { "FAIL" }
        );
    }
    let all = rows.iter().all(|(_, s)| s.passed());
    let json = json!({
        "command": "sweep",
        "rows": rows.iter().map(|(l, s)| json!({"suite": l, "summary": s, "passed": s.passed()})).collect::<Vec<_>>(),
        "all_pass": all,
    });
    Ok(outcome(text, json, if all { 0 } else { 1 }))
}
