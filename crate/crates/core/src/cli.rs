//! The `monocurve` command line.
//!
//! Exit status: 0 when every selected check passes, 1 on any failure, 2 on a
//! usage error, 3 when a computation ran out of budget.

use std::collections::HashMap;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::curve::{
    predict, predicted_rho, render_ratio, witness_label, Curve, CurveParams, InvariantPrediction,
};
use crate::groebner::{buchberger_truncated, saturate, Budget, GroebnerError, PolyIdeal, TermOrder};
use crate::mono::build_In;
use crate::poly::{parse_with, Field, PolyError, Polynomial, PrimeField, Rationals};
use crate::verify::{CheckKind, Selection, Status, Summary, Verifier};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "monocurve", version, about = "Symbolic powers of the monomial curves C(q, m)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// `rational` or `prime:P` (P prime, P != 3, P < 2^31).
    #[arg(long, global = true, default_value = "rational", value_parser = parse_field)]
    pub field: FieldChoice,
    /// Resource caps, e.g. `pairs=100000,steps=1000000` (overrides MONOCURVE_BUDGET).
    #[arg(long, global = true)]
    pub budget: Option<String>,
    /// Fill in the `millis` column.
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldChoice {
    Rational,
    Prime(u64),
}

fn parse_field(s: &str) -> Result<FieldChoice, String> {
    if s == "rational" {
        return Ok(FieldChoice::Rational);
    }
    let p = s
        .strip_prefix("prime:")
        .ok_or_else(|| format!("expected `rational` or `prime:P`, got `{s}`"))?;
    let p: u64 = p.parse().map_err(|_| format!("`{p}` is not a natural number"))?;
    PrimeField::new(p).map_err(|e| e.to_string())?;
    Ok(FieldChoice::Prime(p))
}

#[derive(Debug, Args, Clone, Copy)]
pub struct CurveArgs {
    #[arg(long)]
    pub q: u32,
    #[arg(long)]
    pub m: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run verification checks for one curve.
    Verify {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long, default_value_t = 4)]
        n_max: u32,
        #[arg(long, default_value_t = 2)]
        k_max: u32,
        /// Comma-separated check groups (kernel, lengths, symbolic, containment, invariants, rees).
        #[arg(long, value_delimiter = ',')]
        checks: Vec<CheckKind>,
        /// Also compute ker tau by elimination and the fiber cone relations.
        #[arg(long)]
        deep: bool,
    },
    /// Computed and closed-form invariants of p^(n).
    Invariants {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long)]
        n: u32,
    },
    /// Decide p^(sym) ⊆ p^(ord) and print a witness when it fails.
    Containment {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long)]
        sym: u32,
        #[arg(long)]
        ord: u32,
    },
    /// Decide membership of a polynomial in an ideal.
    Membership {
        #[command(flatten)]
        curve: CurveArgs,
        /// Polynomial in x1..x4; g1, g2, g3 and f may be used by name.
        #[arg(long)]
        element: String,
        /// `p^R`, `p(N)` (symbolic), `m^A*p^B`, or `[expr, expr, ...]`.
        #[arg(long)]
        ideal: String,
    },
    /// Saturate an ideal by a polynomial and print the reduced basis.
    Saturate {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value = "x1")]
        by: String,
    },
    /// Invariants over a grid of curves.
    Table {
        /// e.g. `q=1..2,m=1..3`.
        #[arg(long)]
        grid: String,
        #[arg(long, default_value_t = 4)]
        n_max: u32,
    },
}

/// Parses `argv` (including the program name), runs, and writes the
/// document to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let outcome = match cli.field {
        FieldChoice::Rational => execute(&cli, Rationals),
        FieldChoice::Prime(p) => execute(&cli, PrimeField::new(p).expect("validated")),
    };
    match outcome {
        Ok((doc, code)) => {
            let _ = out.write_all(doc.as_bytes());
            code
        }
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Inconclusive(msg)) => {
            let _ = writeln!(err, "inconclusive: {msg}");
            EXIT_INCONCLUSIVE
        }
    }
}

enum CliError {
    Usage(String),
    Inconclusive(String),
}

impl From<GroebnerError> for CliError {
    fn from(e: GroebnerError) -> Self {
        if e.is_inconclusive() {
            CliError::Inconclusive(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn budget(cli: &Cli) -> Result<Budget, CliError> {
    match &cli.budget {
        Some(s) => Budget::parse(s),
        None => Budget::from_env(),
    }
    .map_err(CliError::Usage)
}

fn params(c: CurveArgs) -> Result<CurveParams, CliError> {
    CurveParams::new(c.q, c.m).map_err(|e| CliError::Usage(e.to_string()))
}

fn execute<F: Field>(cli: &Cli, field: F) -> Result<(String, i32), CliError> {
    let budget = budget(cli)?;
    match &cli.command {
        Command::Verify {
            curve,
            n_max,
            k_max,
            checks,
            deep,
        } => {
            let p = params(*curve)?;
            let mut v = Verifier::new(field, p, budget)
                .map_err(|e| CliError::Usage(e.to_string()))?
                .with_timings(cli.timings);
            let sel = Selection {
                checks: if checks.is_empty() {
                    CheckKind::ALL.to_vec()
                } else {
                    checks.clone()
                },
                n_max: *n_max,
                k_max: *k_max,
                deep: *deep,
            };
            let report = v.run(&sel);
            let doc = match cli.format {
                Format::Json => report.to_json() + "\n",
                Format::Csv => report.to_csv(),
                Format::Text => report.to_text(),
            };
            Ok((doc, report.summary.exit_code()))
        }
        Command::Invariants { curve, n } => {
            let p = params(*curve)?;
            let mut v = Verifier::new(field, p, budget).map_err(|e| CliError::Usage(e.to_string()))?;
            let row = invariant_row(&mut v, *n)?;
            let code = if row.status == Status::Pass { EXIT_OK } else { EXIT_FAIL };
            Ok((render_rows(&[row], cli.format, "rows"), code))
        }
        Command::Table { grid, n_max } => {
            let cells = parse_grid(grid).map_err(CliError::Usage)?;
            let mut rows = Vec::new();
            for (q, m) in cells {
                match CurveParams::new(q, m) {
                    Err(_) => rows.push(InvariantRow::skipped(q, m)),
                    Ok(p) => {
                        let mut v = Verifier::new(field.clone(), p, budget.clone())
                            .map_err(|e| CliError::Usage(e.to_string()))?;
                        for n in 1..=*n_max {
                            rows.push(invariant_row(&mut v, n)?);
                        }
                    }
                }
            }
            let summary = Summary::tally_statuses(rows.iter().map(|r| r.status));
            Ok((render_rows(&rows, cli.format, "rows"), summary.exit_code()))
        }
        Command::Containment { curve, sym, ord } => {
            let p = params(*curve)?;
            let c = Curve::new(field, p).map_err(|e| CliError::Usage(e.to_string()))?;
            let res = containment(&c, *sym, *ord, &budget)?;
            Ok((render_single(&res, cli.format), EXIT_OK))
        }
        Command::Membership {
            curve,
            element,
            ideal,
        } => {
            let p = params(*curve)?;
            let c = Curve::new(field, p).map_err(|e| CliError::Usage(e.to_string()))?;
            let elem = parse_expr(&c, element)?;
            let i = parse_ideal_spec(&c, ideal)?;
            let res = membership(&elem, element, &i, ideal, &budget)?;
            Ok((render_single(&res, cli.format), EXIT_OK))
        }
        Command::Saturate { curve, ideal, by } => {
            let p = params(*curve)?;
            let c = Curve::new(field, p).map_err(|e| CliError::Usage(e.to_string()))?;
            let i = parse_ideal_spec(&c, ideal)?;
            let v = parse_expr(&c, by)?;
            let sat = saturate(&i, &v, &budget)?;
            let res = SaturationResult {
                ideal: ideal.clone(),
                by: v.to_string(),
                basis: sat.gens().iter().map(|g| g.to_string()).collect(),
            };
            Ok((render_single(&res, cli.format), EXIT_OK))
        }
    }
}

impl Summary {
    fn tally_statuses<I: IntoIterator<Item = Status>>(it: I) -> Summary {
        let mut s = Summary::default();
        for st in it {
            match st {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Inconclusive => s.inconclusive += 1,
                Status::Skipped => s.skipped += 1,
            }
        }
        s
    }
}

/// One `(q, m, n)` row: computed values next to the closed forms.
#[derive(Debug, Clone, Serialize)]
pub struct InvariantRow {
    pub q: u32,
    pub m: u32,
    pub n: Option<u32>,
    pub status: Status,
    pub alpha: Option<u32>,
    pub length: Option<u64>,
    pub reg: Option<String>,
    pub theta: Option<String>,
    pub rho: Option<u32>,
    pub rho_closed_form: Option<u32>,
    pub resurgence: Option<String>,
    pub waldschmidt: Option<String>,
}

impl InvariantRow {
    fn skipped(q: u32, m: u32) -> Self {
        InvariantRow {
            q,
            m,
            n: None,
            status: Status::Skipped,
            alpha: None,
            length: None,
            reg: None,
            theta: None,
            rho: None,
            rho_closed_form: None,
            resurgence: None,
            waldschmidt: None,
        }
    }

    const HEADER: [&'static str; 12] = [
        "q",
        "m",
        "n",
        "status",
        "alpha",
        "length",
        "reg",
        "theta",
        "rho",
        "rho_closed_form",
        "resurgence",
        "waldschmidt",
    ];

    fn fields(&self) -> [String; 12] {
        fn o<T: ToString>(v: &Option<T>) -> String {
            v.as_ref().map(|x| x.to_string()).unwrap_or_default()
        }
        [
            self.q.to_string(),
            self.m.to_string(),
            o(&self.n),
            self.status.to_string(),
            o(&self.alpha),
            o(&self.length),
            o(&self.reg),
            o(&self.theta),
            o(&self.rho),
            o(&self.rho_closed_form),
            o(&self.resurgence),
            o(&self.waldschmidt),
        ]
    }
}

fn invariant_row<F: Field>(v: &mut Verifier<F>, n: u32) -> Result<InvariantRow, CliError> {
    let p = v.params();
    let pred: InvariantPrediction = predict(p, n);
    let staircase = build_In(p, n);
    let alpha = v.symbolic_ideal(n).min_generator_degree().unwrap_or(0);
    let length = staircase.colength().map_err(|e| CliError::Usage(e.to_string()))?;
    let reg = if n == 0 {
        None
    } else {
        Some(staircase.regularity2().map_err(|e| CliError::Usage(e.to_string()))?)
    };
    let (rho, rho_closed) = if n >= 1 {
        (Some(v.rho(n)?), Some(predicted_rho(p, n)))
    } else {
        (None, None)
    };
    let ok = alpha == pred.alpha
        && length == pred.length
        && reg.map_or(true, |r| r == pred.reg)
        && rho == rho_closed;
    Ok(InvariantRow {
        q: p.q(),
        m: p.m(),
        n: Some(n),
        status: if ok { Status::Pass } else { Status::Fail },
        alpha: Some(alpha),
        length: Some(length),
        reg: reg.map(|r| render_ratio(&r)),
        theta: Some(render_ratio(&pred.theta)),
        rho,
        rho_closed_form: rho_closed,
        resurgence: Some(render_ratio(&pred.resurgence)),
        waldschmidt: Some(render_ratio(&pred.waldschmidt)),
    })
}

fn render_rows(rows: &[InvariantRow], format: Format, key: &str) -> String {
    match format {
        Format::Json => {
            let summary = Summary::tally_statuses(rows.iter().map(|r| r.status));
            let doc = serde_json::json!({ key: rows, "summary": summary });
            serde_json::to_string_pretty(&doc).expect("serializes") + "\n"
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(InvariantRow::HEADER).expect("in-memory");
            for r in rows {
                w.write_record(r.fields()).expect("in-memory");
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
        }
        Format::Text => {
            let mut s = String::new();
            for r in rows {
                let f = r.fields();
                let parts: Vec<String> = InvariantRow::HEADER
                    .iter()
                    .zip(f.iter())
                    .filter(|(_, v)| !v.is_empty())
                    .map(|(h, v)| format!("{h}={v}"))
                    .collect();
                s.push_str(&parts.join(" "));
                s.push('\n');
            }
            s
        }
    }
}

trait SingleDoc: Serialize {
    fn text(&self) -> String;
    fn csv(&self) -> (Vec<&'static str>, Vec<String>);
}

fn render_single<T: SingleDoc>(v: &T, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(v).expect("serializes") + "\n",
        Format::Text => v.text(),
        Format::Csv => {
            let (h, r) = v.csv();
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(h).expect("in-memory");
            w.write_record(r).expect("in-memory");
            String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ContainmentResult {
    pub sym: u32,
    pub ord: u32,
    pub contained: bool,
    pub witness: Option<String>,
}

impl SingleDoc for ContainmentResult {
    fn text(&self) -> String {
        let mut s = format!(
            "p^({}) in p^{}: {}\n",
            self.sym,
            self.ord,
            if self.contained { "contained" } else { "NOT contained" }
        );
        if let Some(w) = &self.witness {
            s.push_str(&format!("witness: {w}\n"));
        }
        s
    }

    fn csv(&self) -> (Vec<&'static str>, Vec<String>) {
        (
            vec!["sym", "ord", "contained", "witness"],
            vec![
                self.sym.to_string(),
                self.ord.to_string(),
                self.contained.to_string(),
                self.witness.clone().unwrap_or_default(),
            ],
        )
    }
}

/// `p^(sym) ⊆ p^ord`, with a witness outside `p^ord` when it fails: the
/// closed-form witness `f^a g2^b` when it applies, otherwise the first
/// generator `f^a g1^b g2^c g3^d` of `I_sym` that is not a member.
pub fn containment<F: Field>(
    c: &Curve<F>,
    sym: u32,
    ord: u32,
    budget: &Budget,
) -> Result<ContainmentResult, GroebnerError> {
    let terms = c.symbolic_terms(sym);
    let deg = terms.iter().filter_map(|(_, g)| g.degree()).max().unwrap_or(0);
    let period = c.params().period();
    let (k, j) = (sym / period, sym % period);
    let closed = witness_label(c.params(), k, j)
        .ok()
        .and_then(|l| c.witness(k, j).ok().map(|w| (l, w)));
    if ord == 0 {
        return Ok(ContainmentResult {
            sym,
            ord,
            contained: true,
            witness: None,
        });
    }
    let gb = buchberger_truncated(&c.ordinary_power(ord), TermOrder::Grevlex, budget, deg)?;
    let mut witness = None;
    if let Some((label, w)) = closed {
        if !gb.contains_poly(&w)? {
            witness = Some(label);
        }
    }
    if witness.is_none() {
        for (label, g) in &terms {
            if !gb.contains_poly(g)? {
                witness = Some(label.clone());
                break;
            }
        }
    }
    Ok(ContainmentResult {
        sym,
        ord,
        contained: witness.is_none(),
        witness,
    })
}

#[derive(Debug, Serialize)]
pub struct MembershipResult {
    pub element: String,
    pub ideal: String,
    pub member: bool,
    pub normal_form: String,
}

impl SingleDoc for MembershipResult {
    fn text(&self) -> String {
        format!(
            "{} in {}: {}\nnormal form: {}\n",
            self.element,
            self.ideal,
            if self.member { "member" } else { "NOT a member" },
            self.normal_form
        )
    }

    fn csv(&self) -> (Vec<&'static str>, Vec<String>) {
        (
            vec!["element", "ideal", "member", "normal_form"],
            vec![
                self.element.clone(),
                self.ideal.clone(),
                self.member.to_string(),
                self.normal_form.clone(),
            ],
        )
    }
}

fn membership<F: Field>(
    elem: &Polynomial<F>,
    text: &str,
    ideal: &PolyIdeal<F>,
    spec: &str,
    budget: &Budget,
) -> Result<MembershipResult, GroebnerError> {
    let gb = if elem.is_homogeneous() {
        buchberger_truncated(ideal, TermOrder::Grevlex, budget, elem.degree().unwrap_or(0))?
    } else {
        crate::groebner::buchberger(ideal, TermOrder::Grevlex, budget)?
    };
    let nf = gb.normal_form(elem)?;
    Ok(MembershipResult {
        element: text.to_string(),
        ideal: spec.to_string(),
        member: nf.is_zero(),
        normal_form: nf.to_string(),
    })
}

#[derive(Debug, Serialize)]
pub struct SaturationResult {
    pub ideal: String,
    pub by: String,
    pub basis: Vec<String>,
}

impl SingleDoc for SaturationResult {
    fn text(&self) -> String {
        let mut s = format!("({} : ({})^inf) has reduced basis:\n", self.ideal, self.by);
        for b in &self.basis {
            s.push_str(&format!("  {b}\n"));
        }
        s
    }

    fn csv(&self) -> (Vec<&'static str>, Vec<String>) {
        (
            vec!["ideal", "by", "basis"],
            vec![self.ideal.clone(), self.by.clone(), self.basis.join("; ")],
        )
    }
}

fn bindings<F: Field>(c: &Curve<F>) -> HashMap<String, Polynomial<F>> {
    let [g1, g2, g3] = c.generators().clone();
    HashMap::from([
        ("g1".to_string(), g1),
        ("g2".to_string(), g2),
        ("g3".to_string(), g3),
        ("f".to_string(), c.f().clone()),
    ])
}

fn parse_expr<F: Field>(c: &Curve<F>, text: &str) -> Result<Polynomial<F>, CliError> {
    parse_with(text, c.ring(), &bindings(c)).map_err(|e| CliError::Usage(format!("in `{text}`: {e}")))
}

/// `p`, `p^R`, `p(N)`, `m^A`, `m^A*p^B`, or `[expr, expr, ...]`.
fn parse_ideal_spec<F: Field>(c: &Curve<F>, spec: &str) -> Result<PolyIdeal<F>, CliError> {
    let s: String = spec.chars().filter(|ch| !ch.is_whitespace()).collect();
    let bad = || CliError::Usage(format!("cannot read ideal `{spec}`"));
    let num = |t: &str| t.parse::<u32>().map_err(|_| bad());
    let trimmed = spec.trim();
    if let Some(inner) = trimmed.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
        let gens = inner
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| parse_expr(c, t))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(PolyIdeal::new(c.ring(), gens)?);
    }
    if s == "p" {
        return Ok(c.prime());
    }
    if let Some(inner) = s.strip_prefix("p(").and_then(|t| t.strip_suffix(')')) {
        return Ok(c.symbolic_gens(num(inner)?));
    }
    if let Some(r) = s.strip_prefix("p^") {
        return Ok(c.ordinary_power(num(r)?));
    }
    if let Some(rest) = s.strip_prefix("m^") {
        let (a, b) = match rest.split_once("*p") {
            Some((a, "")) => (num(a)?, 1),
            Some((a, b)) => (num(a)?, num(b.strip_prefix('^').ok_or_else(bad)?)?),
            None => (num(rest)?, 0),
        };
        return Ok(c.maximal_times_prime_power(a, b));
    }
    Err(bad())
}

/// `q=1..2,m=1..3` (single values allowed) into cells sorted by `(q, m)`.
pub fn parse_grid(spec: &str) -> Result<Vec<(u32, u32)>, String> {
    let mut q = None;
    let mut m = None;
    for part in spec.split(',').map(str::trim) {
        let (key, range) = part
            .split_once('=')
            .ok_or_else(|| format!("grid entry `{part}` is not key=range"))?;
        let (lo, hi) = match range.split_once("..") {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (range.trim(), range.trim()),
        };
        let lo: u32 = lo.parse().map_err(|_| format!("bad bound `{lo}`"))?;
        let hi: u32 = hi.parse().map_err(|_| format!("bad bound `{hi}`"))?;
        if lo == 0 || lo > hi {
            return Err(format!("empty or non-positive range `{range}`"));
        }
        match key.trim() {
            "q" => q = Some((lo, hi)),
            "m" => m = Some((lo, hi)),
            other => return Err(format!("unknown grid key `{other}`")),
        }
    }
    let (q, m) = (q.ok_or("grid needs q")?, m.ok_or("grid needs m")?);
    Ok((q.0..=q.1)
        .flat_map(|a| (m.0..=m.1).map(move |b| (a, b)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("monocurve").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn grid_parsing() {
        assert_eq!(parse_grid("q=1..2,m=1..2").unwrap(), vec![(1, 1), (1, 2), (2, 1), (2, 2)]);
        assert_eq!(parse_grid("q=2, m=3").unwrap(), vec![(2, 3)]);
        assert!(parse_grid("q=1..2").is_err());
        assert!(parse_grid("q=0..2,m=1").is_err());
    }

    #[test]
    fn invariants_row() {
        let (code, out, _) = call(&["invariants", "--q", "1", "--m", "1", "--n", "2"]);
        assert_eq!(code, 0);
        assert!(out.contains("alpha=4 length=15 reg=5"), "{out}");
        assert!(out.contains("resurgence=4/3 waldschmidt=2"), "{out}");
    }

    #[test]
    fn containment_prints_witness() {
        let (code, out, _) = call(&["containment", "--q", "1", "--m", "1", "--sym", "4", "--ord", "4"]);
        assert_eq!(code, 0);
        assert_eq!(out, "p^(4) in p^4: NOT contained\nwitness: f^2\n");
        let (_, out, _) = call(&["containment", "--q", "1", "--m", "1", "--sym", "4", "--ord", "3"]);
        assert_eq!(out, "p^(4) in p^3: contained\n");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["verify", "--q", "1", "--m", "3"]).0, EXIT_USAGE);
        assert_eq!(call(&["verify", "--q", "1"]).0, EXIT_USAGE);
        let (code, _, err) = call(&["--field", "prime:3", "invariants", "--q", "1", "--m", "1", "--n", "1"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains('3'));
        assert_eq!(
            call(&["membership", "--q", "1", "--m", "1", "--element", "x5", "--ideal", "p"]).0,
            EXIT_USAGE
        );
    }

    #[test]
    fn membership_with_bindings() {
        let (code, out, _) = call(&[
            "membership", "--q", "1", "--m", "1", "--element", "x1*f", "--ideal", "p^2",
        ]);
        assert_eq!(code, 0);
        assert!(out.contains(": member"), "{out}");
        let (_, out, _) = call(&["membership", "--q", "1", "--m", "1", "--element", "f", "--ideal", "p^2"]);
        assert!(out.contains("NOT a member"), "{out}");
        let (_, out, _) = call(&[
            "membership", "--q", "1", "--m", "1", "--element", "x2^2", "--ideal", "[x1*x3 - x2^2, x1]",
        ]);
        assert!(out.contains(": member"), "{out}");
    }

    #[test]
    fn saturate_command() {
        let (code, out, _) = call(&["saturate", "--q", "1", "--m", "1", "--ideal", "[x2^2*x3]", "--by", "x3"]);
        assert_eq!(code, 0);
        assert!(out.contains("  x2^2\n"), "{out}");
    }

    #[test]
    fn verify_json_is_stable() {
        let args = ["verify", "--q", "1", "--m", "1", "--checks", "lengths,kernel", "--format", "json"];
        let (code, a, _) = call(&args);
        let (_, b, _) = call(&args);
        assert_eq!(code, 0);
        assert_eq!(a, b);
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["summary"]["fail"], 0);
    }

    #[test]
    fn table_marks_invalid_cells_skipped() {
        let (code, out, _) = call(&["table", "--grid", "q=1,m=1..3", "--n-max", "2", "--format", "csv"]);
        assert_eq!(code, 0);
        let lines: Vec<_> = out.lines().collect();
        assert_eq!(lines[0], "q,m,n,status,alpha,length,reg,theta,rho,rho_closed_form,resurgence,waldschmidt");
        assert!(lines.iter().any(|l| l.starts_with("1,3,,skipped")), "{out}");
        assert_eq!(lines.len(), 1 + 2 + 2 + 1);
    }
}
