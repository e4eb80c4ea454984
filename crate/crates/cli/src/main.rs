//! `lagrange-kit`: series coefficients, reversion, identity checks and
//! combinatorial oracle tables from the command line.

use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use lagrange_kit::combinat::{
    cycle_lemma_table, degree_trees_table, labeled_forest_table, ordered_forest_table,
    prufer_table, OracleError, OracleRow, ORACLE_KINDS,
};
use lagrange_kit::identities::{run_identity, IdentityError, IdentityParams, IDENTITY_NAMES};
use lagrange_kit::lagrange::solve_xr;
use lagrange_kit::series::special::{exp_x, geometric};
use lagrange_kit::{LaurentSeries, PowerSeries, Rational};

const SCHEMA: u32 = 1;
const DEFAULT_MAX_ORDER: usize = 200;
const PRESETS: [&str; 3] = ["exp", "geom", "one-plus-t-squared"];

#[derive(Parser)]
#[command(name = "lagrange-kit", version, about = "Exact Lagrange inversion toolkit")]
struct Cli {
    /// Truncation order N: coefficients of x^0 .. x^(N-1) are exact.
    #[arg(long, global = true, default_value_t = 30)]
    order: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Coefficients of f^k where f = x R(f).
    Coeffs {
        /// Comma-separated coefficients r_0,r_1,... or a preset (exp, geom,
        /// one-plus-t-squared).
        #[arg(long = "R", allow_hyphen_values = true)]
        r: String,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        k: i64,
    },
    /// Compositional inverse of f, or of t / R(t) when --R is given.
    Invert {
        #[arg(long, allow_hyphen_values = true, conflicts_with = "r", required_unless_present = "r")]
        f: Option<String>,
        #[arg(long = "R", allow_hyphen_values = true)]
        r: Option<String>,
    },
    /// Run a named identity check.
    Identity {
        name: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Compare an exhaustive enumeration with its counting formula.
    Oracle {
        kind: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Comma-separated entries for cycle-lemma sequences.
        #[arg(long, allow_hyphen_values = true, default_value = "-1,0,1,2")]
        alphabet: String,
        #[arg(long, default_value_t = 6)]
        len: usize,
    },
    /// List identity names, oracle kinds and series presets.
    List,
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long, allow_negative_numbers = true)]
    k: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    p: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    i: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    j: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    r: Option<i64>,
    #[arg(long = "n-max", allow_negative_numbers = true)]
    n_max: Option<i64>,
    #[arg(long)]
    seed: Option<u64>,
}

/// Result of a command: the exit status plus what to print.
enum Failure {
    /// Bad input; exit 2.
    Usage(String),
}

struct Output {
    pass: bool,
    json: Value,
    csv: Vec<Vec<String>>,
    pretty: Vec<String>,
}

#[derive(Debug, PartialEq, Eq)]
struct ParseError {
    position: usize,
    message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "parse error at position {}: {}", self.position, self.message)
    }
}

/// A comma-separated list of rationals; positions are byte offsets into
/// `text`.
fn parse_list(text: &str) -> Result<Vec<Rational>, ParseError> {
    if text.trim().is_empty() {
        return Err(ParseError {
            position: 0,
            message: "empty series literal".into(),
        });
    }
    let mut out = Vec::new();
    let mut start = 0;
    for part in text.split(',') {
        let value = part.parse::<Rational>().map_err(|e| ParseError {
            position: start + e.position,
            message: format!("'{}' is not a rational", part.trim()),
        })?;
        out.push(value);
        start += part.len() + 1;
    }
    Ok(out)
}

fn parse_series(text: &str, order: usize) -> Result<PowerSeries<Rational>, ParseError> {
    Ok(match text.trim() {
        "exp" => exp_x(order),
        "geom" => geometric(order),
        "one-plus-t-squared" => {
            PowerSeries::new(vec![1.into(), 2.into(), 1.into()], order)
        }
        _ => PowerSeries::new(parse_list(text)?, order),
    })
}

fn max_order() -> Result<usize, Failure> {
    match std::env::var("LAGRANGE_KIT_MAX_ORDER") {
        Err(_) => Ok(DEFAULT_MAX_ORDER),
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("LAGRANGE_KIT_MAX_ORDER='{v}' is not a number"))),
    }
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn coeff_rows(series: &LaurentSeries<Rational>, from: i64, order: usize) -> Vec<(i64, Rational)> {
    (from..series.order().min(order as i64))
        .map(|n| (n, series.coeff(n).expect("within precision")))
        .collect()
}

fn table_output(
    command: &str,
    header: Map<String, Value>,
    title: String,
    rows: &[(i64, Rational)],
) -> Output {
    let mut json = header;
    json.insert("schema".into(), json!(SCHEMA));
    json.insert("command".into(), json!(command));
    json.insert(
        "coefficients".into(),
        Value::Array(
            rows.iter()
                .map(|(n, c)| json!({"n": n, "value": c.to_string()}))
                .collect(),
        ),
    );
    let mut csv = vec![vec!["n".to_string(), "coefficient".to_string()]];
    csv.extend(rows.iter().map(|(n, c)| vec![n.to_string(), c.to_string()]));
    let width = rows.iter().map(|(n, _)| n.to_string().len()).max().unwrap_or(1).max(1);
    let mut pretty = vec![title];
    pretty.extend(rows.iter().map(|(n, c)| format!("{n:>width$}  {c}")));
    Output {
        pass: true,
        json: Value::Object(json),
        csv,
        pretty,
    }
}

fn cmd_coeffs(r_text: &str, k: i64, order: usize) -> Result<Output, Failure> {
    let r = parse_series(r_text, order).map_err(usage)?;
    let f = solve_xr(&r, order);
    let fk = LaurentSeries::from_power_series(&f).powi(k).map_err(usage)?;
    let rows = coeff_rows(&fk, k.min(0), order);
    let mut header = Map::new();
    header.insert("R".into(), json!(r_text));
    header.insert("k".into(), json!(k));
    header.insert("order".into(), json!(order));
    let title = format!("[x^n] f^{k} for f = x R(f), R = {r_text}");
    Ok(table_output("coeffs", header, title, &rows))
}

fn cmd_invert(f_text: Option<&str>, r_text: Option<&str>, order: usize) -> Result<Output, Failure> {
    let (f, label) = match (f_text, r_text) {
        (Some(text), _) => (parse_series(text, order).map_err(usage)?, format!("f = {text}")),
        (None, Some(text)) => {
            let r = parse_series(text, order).map_err(usage)?;
            let g = r.inverse().map_err(usage)?.shift(1);
            (g, format!("t / R(t), R = {text}"))
        }
        (None, None) => return Err(Failure::Usage("--f or --R is required".into())),
    };
    let g = f.reversion().map_err(usage)?;
    let rows = coeff_rows(&LaurentSeries::from_power_series(&g), 0, order);
    let mut header = Map::new();
    if let Some(text) = f_text {
        header.insert("f".into(), json!(text));
    }
    if let Some(text) = r_text {
        header.insert("R".into(), json!(text));
    }
    header.insert("order".into(), json!(order));
    let title = format!("compositional inverse of {label}");
    Ok(table_output("invert", header, title, &rows))
}

fn cmd_identity(name: &str, p: &ParamArgs, order: usize) -> Result<Output, Failure> {
    if !IDENTITY_NAMES.contains(&name) {
        return Err(usage(IdentityError::UnknownIdentity(name.to_string())));
    }
    let params = IdentityParams {
        k: p.k,
        p: p.p,
        i: p.i,
        j: p.j,
        r: p.r,
        n_max: p.n_max,
        seed: p.seed,
    };
    let report = run_identity(name, &params, order).map_err(usage)?;
    let mut json = serde_json::to_value(&report).expect("report serializes");
    json.as_object_mut()
        .expect("report is an object")
        .insert("schema".into(), json!(SCHEMA));
    let failure = report.first_failure.as_ref();
    let csv = vec![
        ["identity", "status", "order", "checks", "failed_check", "expected", "actual"]
            .map(String::from)
            .to_vec(),
        vec![
            report.identity.clone(),
            report.status.to_string(),
            report.order.to_string(),
            report.checks.to_string(),
            failure.map(|f| f.check.clone()).unwrap_or_default(),
            failure.map(|f| f.expected.clone()).unwrap_or_default(),
            failure.map(|f| f.actual.clone()).unwrap_or_default(),
        ],
    ];
    let mut pretty = vec![format!(
        "{}: {} ({} checks, order {})",
        report.identity, report.status, report.checks, report.order
    )];
    if !report.params.is_empty() {
        pretty.push(format!("params: {}", Value::from(report.params.clone().into_iter().collect::<Map<_, _>>())));
    }
    for (key, value) in &report.details {
        let shown = value.as_str().map(String::from).unwrap_or_else(|| value.to_string());
        pretty.push(format!("{key}: {shown}"));
    }
    if let Some(f) = failure {
        pretty.push(format!("first failure: {}", f.check));
        pretty.push(format!("  at {}", Value::from(f.location.clone().into_iter().collect::<Map<_, _>>())));
        pretty.push(format!("  expected {}", f.expected));
        pretty.push(format!("  actual   {}", f.actual));
    }
    Ok(Output {
        pass: report.passed(),
        json,
        csv,
        pretty,
    })
}

fn need(name: &str, v: Option<usize>) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("--{name} is required for this oracle")))
}

fn oracle_error(e: OracleError) -> Failure {
    Failure::Usage(e.to_string())
}

fn cmd_oracle(
    kind: &str,
    n: Option<usize>,
    k: Option<usize>,
    m: Option<usize>,
    alphabet: &str,
    len: usize,
) -> Result<Output, Failure> {
    let mut params = Map::new();
    let rows: Vec<OracleRow> = match kind {
        "ordered-forest" | "labeled-forest" => {
            let n = need("n", n)?;
            let k = k.unwrap_or(1);
            params.insert("n".into(), json!(n));
            params.insert("k".into(), json!(k));
            if kind == "ordered-forest" {
                ordered_forest_table(n, k)
            } else {
                labeled_forest_table(n, k)
            }
            .map_err(oracle_error)?
        }
        "prufer" | "degree-trees" => {
            let m = need("m", m)?;
            params.insert("m".into(), json!(m));
            if kind == "prufer" {
                prufer_table(m)
            } else {
                degree_trees_table(m)
            }
            .map_err(oracle_error)?
        }
        "cycle-lemma" => {
            let entries: Vec<i64> = parse_list(alphabet)
                .map_err(usage)?
                .iter()
                .map(|r| r.to_i64().ok_or_else(|| Failure::Usage(format!("alphabet entry {r} is not an integer"))))
                .collect::<Result<_, _>>()?;
            params.insert("alphabet".into(), json!(entries));
            params.insert("len".into(), json!(len));
            cycle_lemma_table(&entries, len).map_err(oracle_error)?
        }
        other => {
            return Err(Failure::Usage(format!(
                "unknown oracle '{other}', expected one of {}",
                ORACLE_KINDS.join(", ")
            )))
        }
    };
    let pass = rows.iter().all(|r| r.matches);
    let json = json!({
        "schema": SCHEMA,
        "command": "oracle",
        "kind": kind,
        "params": params,
        "status": if pass { "pass" } else { "fail" },
        "rows": rows,
    });
    let mut csv = vec![["label", "oracle", "formula", "match"].map(String::from).to_vec()];
    csv.extend(rows.iter().map(|r| {
        vec![r.label.clone(), r.oracle.clone(), r.formula.clone(), r.matches.to_string()]
    }));
    let w = rows.iter().map(|r| r.label.len()).max().unwrap_or(0);
    let mut pretty = vec![format!("oracle {kind}: {}", if pass { "pass" } else { "fail" })];
    pretty.extend(rows.iter().map(|r| {
        let mark = if r.matches { "match" } else { "MISMATCH" };
        format!("{:<w$}  {} = {}  {mark}", r.label, r.oracle, r.formula)
    }));
    Ok(Output {
        pass,
        json,
        csv,
        pretty,
    })
}

fn cmd_list() -> Output {
    let json = json!({
        "schema": SCHEMA,
        "command": "list",
        "identities": IDENTITY_NAMES,
        "oracles": ORACLE_KINDS,
        "presets": PRESETS,
    });
    let mut csv = vec![vec!["kind".to_string(), "name".to_string()]];
    let mut pretty = Vec::new();
    for (kind, names) in [
        ("identity", &IDENTITY_NAMES[..]),
        ("oracle", &ORACLE_KINDS[..]),
        ("preset", &PRESETS[..]),
    ] {
        pretty.push(format!("{kind}: {}", names.join(" ")));
        csv.extend(names.iter().map(|n| vec![kind.to_string(), n.to_string()]));
    }
    Output {
        pass: true,
        json,
        csv,
        pretty,
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    if cli.order == 0 {
        return Err(Failure::Usage("--order must be at least 1".into()));
    }
    let cap = max_order()?;
    if cli.order > cap {
        return Err(Failure::Usage(format!(
            "--order {} exceeds LAGRANGE_KIT_MAX_ORDER = {cap}",
            cli.order
        )));
    }
    match &cli.command {
        Command::Coeffs { r, k } => cmd_coeffs(r, *k, cli.order),
        Command::Invert { f, r } => cmd_invert(f.as_deref(), r.as_deref(), cli.order),
        Command::Identity { name, params } => cmd_identity(name, params, cli.order),
        Command::Oracle {
            kind,
            n,
            k,
            m,
            alphabet,
            len,
        } => cmd_oracle(kind, *n, *k, *m, alphabet, *len),
        Command::List => Ok(cmd_list()),
    }
}

fn emit(out: &Output, format: Format, elapsed: std::time::Duration) -> io::Result<()> {
    let stdout = io::stdout();
    let mut w = stdout.lock();
    match format {
        Format::Json => writeln!(w, "{}", serde_json::to_string_pretty(&out.json)?)?,
        Format::Csv => {
            let mut csv = csv::Writer::from_writer(&mut w);
            for row in &out.csv {
                csv.write_record(row)?;
            }
            csv.flush()?;
        }
        Format::Pretty => {
            for line in &out.pretty {
                writeln!(w, "{line}")?;
            }
            writeln!(w, "elapsed {:.3} s", elapsed.as_secs_f64())?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let start = Instant::now();
    match run(&cli) {
        Ok(out) => {
            if let Err(e) = emit(&out, cli.format, start.elapsed()) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_positions() {
        assert_eq!(parse_list("1, 2/3,-1").unwrap().len(), 3);
        let e = parse_list("1,2,x").unwrap_err();
        assert_eq!(e.position, 4);
        let e = parse_list("1,2/0").unwrap_err();
        assert!(e.position >= 2);
        assert_eq!(parse_list("").unwrap_err().position, 0);
    }

    #[test]
    fn presets() {
        let g = parse_series("geom", 4).unwrap();
        assert_eq!(g.coeffs(), &[1.into(), 1.into(), 1.into(), 1.into()]);
        let s = parse_series("one-plus-t-squared", 4).unwrap();
        assert_eq!(s, parse_series("1,2,1", 4).unwrap());
    }
}
