//! Command-line front end for `chromatic-reciprocity`.
//!
//! [`run`] parses arguments, dispatches one command and writes its output;
//! the binary is a thin wrapper around it.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use chromatic_reciprocity::chromatic::{
    bivariate_polynomial, chi_hat_d, chromatic_polynomial_with,
};
use chromatic_reciprocity::heaps::{
    heap_series, pyramid_series, trivial_series, verify_heap_identities,
};
use chromatic_reciprocity::orientations::{enumerate_acyclic, source_components};
use chromatic_reciprocity::reciprocity::{check_by_name, CheckParams};
use chromatic_reciprocity::report::VerificationReport;
use chromatic_reciprocity::symfunc::{
    csf_powersum, expand_finite, omega, specialize_p_to_q, verify_combined, verify_multicolor,
    verify_prop51, verify_prop52, verify_superfication, verify_thm53,
};
use chromatic_reciprocity::{Budget, Error, ExponentVector, Graph, IntPolynomial};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

mod selfcheck;

/// Exit code for a successful run.
pub const EXIT_OK: i32 = 0;
/// Exit code when an identity check reports a mismatch.
pub const EXIT_MISMATCH: i32 = 1;
/// Exit code for usage, input and resource errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Json,
    Table,
}

#[derive(Debug, Parser)]
#[command(
    name = "chromrec",
    version,
    about = "Exact chromatic polynomials and reciprocity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Graph file: vertex count on the first line, then one `u v` edge per line.
    #[arg(long, global = true)]
    graph: Option<PathBuf>,
    /// Identity to check.
    #[arg(long, global = true)]
    check: Option<String>,
    #[arg(short = 'i', global = true)]
    i: Option<usize>,
    #[arg(short = 'j', global = true)]
    j: Option<usize>,
    #[arg(short = 'd', global = true)]
    d: Option<usize>,
    /// Number of free blocks (bivariate reciprocity).
    #[arg(short = 'k', global = true)]
    k: Option<usize>,
    /// Truncation degree of heap series.
    #[arg(short = 'D', global = true)]
    degree: Option<usize>,
    /// Number of variables of a finite alphabet.
    #[arg(short = 'N', global = true)]
    variables: Option<usize>,
    /// Evaluation point; may be repeated.
    #[arg(short = 'q', global = true, allow_hyphen_values = true)]
    q: Vec<i64>,
    /// Second evaluation point for the bivariate polynomial.
    #[arg(short = 'r', global = true, allow_hyphen_values = true)]
    r: Option<i64>,
    /// First pole (bipolar orientations).
    #[arg(short = 'u', global = true)]
    u: Option<usize>,
    /// Second pole (bipolar orientations).
    #[arg(short = 'v', global = true)]
    v: Option<usize>,
    /// Size of the y alphabet.
    #[arg(long, global = true)]
    ny: Option<usize>,
    /// Size of the z alphabet.
    #[arg(long, global = true)]
    nz: Option<usize>,
    /// Size of the second z alphabet.
    #[arg(long, global = true)]
    nz2: Option<usize>,
    /// Multiplicities, comma separated.
    #[arg(short = 'm', global = true, value_delimiter = ',')]
    m: Vec<u32>,
    #[arg(long, global = true, value_enum, default_value_t = Mode::Json)]
    mode: Mode,
    /// Worker threads for parallel enumeration.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Resource limit override, `KEY=VAL`; may be repeated.
    #[arg(long, global = true)]
    budget: Vec<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Chromatic polynomial, its derivatives and values.
    Chromatic,
    /// Chromatic polynomial divided by q(q-1)...(q-d+1).
    Chihat,
    /// Bivariate chromatic polynomial.
    Bivariate,
    /// Acyclic orientations tallied by source-components.
    Orientations {
        /// Also list every orientation.
        #[arg(long)]
        list: bool,
    },
    /// Trivial-heap, heap and pyramid series.
    Heaps {
        /// Verify the heap identities instead of printing the series.
        #[arg(long)]
        verify: bool,
    },
    /// One reciprocity identity, by name.
    Reciprocity,
    /// Chromatic symmetric function, or one of its identities via --check.
    Symfunc,
    /// Replays the worked examples.
    Selfcheck,
}

/// What a command produced: a JSON document, its table rendering, and
/// whether every identity it checked held.
struct Output {
    json: Value,
    table: String,
    passed: bool,
}

impl Output {
    fn new(json: Value, table: String) -> Self {
        Output {
            json,
            table,
            passed: true,
        }
    }
}

enum Failure {
    Usage(String),
    Library(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

type CmdResult = std::result::Result<Output, Failure>;

/// Runs one command line (`argv[0]` is the program name) and returns the
/// exit code.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let result = match cli.threads {
        Some(0) => Err(Failure::Usage("--threads must be positive".into())),
        Some(k) => match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
            Ok(pool) => pool.install(|| dispatch(&cli)),
            Err(e) => Err(Failure::Usage(format!("cannot start thread pool: {e}"))),
        },
        None => dispatch(&cli),
    };
    match result {
        Ok(output) => emit(output, cli.mode, out, err),
        Err(Failure::Usage(message)) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_USAGE
        }
        Err(Failure::Library(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn emit(output: Output, mode: Mode, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let text = match mode {
        Mode::Json => {
            let mut s = serde_json::to_string_pretty(&output.json).expect("JSON values serialize");
            s.push('\n');
            s
        }
        Mode::Table => output.table,
    };
    if out.write_all(text.as_bytes()).is_err() {
        return EXIT_USAGE;
    }
    if output.passed {
        EXIT_OK
    } else {
        let _ = writeln!(err, "identity mismatch");
        EXIT_MISMATCH
    }
}

fn dispatch(cli: &Cli) -> CmdResult {
    let mut budget = Budget::default();
    for assignment in &cli.budget {
        budget.apply(assignment)?;
    }
    match &cli.command {
        Command::Selfcheck => Ok(selfcheck::run()),
        Command::Chromatic => chromatic(cli, &load_graph(cli)?, &budget),
        Command::Chihat => chihat(cli, &load_graph(cli)?),
        Command::Bivariate => bivariate(cli, &load_graph(cli)?),
        Command::Orientations { list } => orientations(&load_graph(cli)?, *list),
        Command::Heaps { verify } => heaps(cli, &load_graph(cli)?, *verify),
        Command::Reciprocity => reciprocity(cli, &load_graph(cli)?),
        Command::Symfunc => symfunc(cli, &load_graph(cli)?),
    }
}

fn load_graph(cli: &Cli) -> std::result::Result<Graph, Failure> {
    let path = cli
        .graph
        .as_ref()
        .ok_or_else(|| Failure::Usage("--graph is required".into()))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(Graph::parse(&text)?)
}

fn require(value: Option<usize>, flag: &str) -> std::result::Result<usize, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("{flag} is required")))
}

fn graph_json(g: &Graph) -> Value {
    json!({ "n": g.vertex_count(), "edges": g.edges() })
}

/// The polynomial (or its `i`-th derivative) and its values at every `-q`.
fn polynomial_output(cli: &Cli, label: &str, g: &Graph, p: &IntPolynomial, extra: Value) -> Output {
    let order = cli.i.unwrap_or(0);
    let p = p.derivative(order);
    let values: Vec<(i64, BigInt)> = cli
        .q
        .iter()
        .map(|&q| (q, p.evaluate(&BigInt::from(q))))
        .collect();
    let mut json = json!({
        "graph": graph_json(g),
        "derivative": order,
        "polynomial": p,
        "values": values
            .iter()
            .map(|(q, v)| json!({ "q": q.to_string(), "value": v.to_string() }))
            .collect::<Vec<_>>(),
    });
    if let (Value::Object(map), Value::Object(more)) = (&mut json, extra) {
        map.extend(more);
    }
    let prime = "'".repeat(order);
    let mut table = format!("{label}{prime}(q) = {p}\n");
    for (q, v) in &values {
        let _ = writeln!(table, "{label}{prime}({q}) = {v}");
    }
    Output::new(json, table)
}

fn chromatic(cli: &Cli, g: &Graph, budget: &Budget) -> CmdResult {
    let chi = chromatic_polynomial_with(g, budget)?;
    Ok(polynomial_output(cli, "chi", g, &chi, json!({})))
}

fn chihat(cli: &Cli, g: &Graph) -> CmdResult {
    let d = require(cli.d, "-d")?;
    let hat = chi_hat_d(g, d)?;
    Ok(polynomial_output(
        cli,
        &format!("chi_hat_{d}"),
        g,
        &hat,
        json!({ "d": d }),
    ))
}

fn bivariate(cli: &Cli, g: &Graph) -> CmdResult {
    let b = bivariate_polynomial(g)?;
    let mut table = String::from("   i    j  coefficient of q^i r^j\n");
    for ((i, j), c) in b.terms() {
        let _ = writeln!(table, "{i:>4} {j:>4}  {c}");
    }
    let mut values = Vec::new();
    if let Some(r) = cli.r {
        for &q in &cli.q {
            let value = b.evaluate(&BigInt::from(q), &BigInt::from(r));
            let _ = writeln!(table, "chi({q}, {r}) = {value}");
            values.push(
                json!({ "q": q.to_string(), "r": r.to_string(), "value": value.to_string() }),
            );
        }
    } else if !cli.q.is_empty() {
        return Err(Failure::Usage("evaluation needs both -q and -r".into()));
    }
    Ok(Output::new(
        json!({ "graph": graph_json(g), "polynomial": b, "values": values }),
        table,
    ))
}

fn orientations(g: &Graph, list: bool) -> CmdResult {
    let mut total = 0u64;
    let mut by_count = vec![0u64; g.vertex_count() + 1];
    let mut by_lambda = std::collections::BTreeMap::new();
    let mut listed = Vec::new();
    for o in enumerate_acyclic(g)? {
        let dec = source_components(g, o)?;
        total += 1;
        by_count[dec.len()] += 1;
        *by_lambda.entry(dec.lambda()).or_insert(0u64) += 1;
        if list {
            let parts: Vec<Vec<usize>> = dec.parts().iter().map(|s| s.iter().collect()).collect();
            listed.push((o.arcs(g), parts));
        }
    }
    let mut table = format!("acyclic orientations: {total}\n  components  count\n");
    for (k, c) in by_count.iter().enumerate().filter(|(_, &c)| c > 0) {
        let _ = writeln!(table, "  {k:>10}  {c}");
    }
    let _ = writeln!(table, "  lambda      count");
    for (lambda, c) in &by_lambda {
        let _ = writeln!(table, "  {:<10}  {c}", lambda.to_string());
    }
    for (arcs, parts) in &listed {
        let arcs: Vec<String> = arcs.iter().map(|(u, v)| format!("{u}->{v}")).collect();
        let _ = writeln!(table, "  {}  components {parts:?}", arcs.join(" "));
    }
    let mut json = json!({
        "graph": graph_json(g),
        "count": total.to_string(),
        "by_source_components": by_count
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(k, c)| (k.to_string(), Value::String(c.to_string())))
            .collect::<serde_json::Map<_, _>>(),
        "by_lambda": by_lambda
            .iter()
            .map(|(l, c)| json!({ "partition": l, "count": c.to_string() }))
            .collect::<Vec<_>>(),
    });
    if list {
        json["orientations"] = listed
            .iter()
            .map(|(arcs, parts)| json!({ "arcs": arcs, "source_components": parts }))
            .collect();
    }
    Ok(Output::new(json, table))
}

fn verification(report: VerificationReport) -> Output {
    let passed = report.passed();
    let table = report.to_string();
    let json = serde_json::to_value(&report).expect("reports serialize");
    Output {
        json,
        table,
        passed,
    }
}

fn heaps(cli: &Cli, g: &Graph, verify: bool) -> CmdResult {
    let degree = cli.degree.unwrap_or(g.vertex_count() + 2);
    if degree > 12 {
        return Err(Error::ResourceBudgetExceeded {
            what: "series truncation degree",
            limit: 12,
        }
        .into());
    }
    if verify {
        return Ok(verification(verify_heap_identities(g, degree)?));
    }
    let t = trivial_series(g, degree);
    let h = heap_series(g, degree);
    let p = pyramid_series(g, degree);
    let table = format!(
        "T(x) = {t}\nH(x) = {h} + O(deg {next})\nP(x) = {p} + O(deg {next})\n",
        next = degree + 1
    );
    Ok(Output::new(
        json!({ "graph": graph_json(g), "D": degree, "T": t, "H": h, "P": p }),
        table,
    ))
}

fn reciprocity(cli: &Cli, g: &Graph) -> CmdResult {
    let name = cli
        .check
        .as_deref()
        .ok_or_else(|| Failure::Usage("--check is required".into()))?;
    let params = CheckParams {
        i: cli.i.unwrap_or(0),
        j: cli.j.unwrap_or(0),
        d: cli.d.unwrap_or(0),
        k: cli.k.unwrap_or(0),
        u: cli.u.unwrap_or(0),
        v: cli.v.unwrap_or(0),
    };
    let report = check_by_name(g, name, params)?;
    let passed = report.passed();
    let table = report.to_string();
    let json = serde_json::to_value(&report).expect("reports serialize");
    Ok(Output {
        json,
        table,
        passed,
    })
}

fn symfunc(cli: &Cli, g: &Graph) -> CmdResult {
    let n = g.vertex_count();
    let ny = cli.ny.unwrap_or(1);
    let nz = cli.nz.unwrap_or(1);
    let report = match cli.check.as_deref() {
        None => {
            let x = csf_powersum(g)?;
            let dual = omega(&x);
            let chi = specialize_p_to_q(&x)?;
            let mut table = format!("X = {x}\nomega(X) = {dual}\nchi(q) = {chi}\n");
            let mut json = json!({ "graph": graph_json(g), "X": x, "omega": dual, "chromatic": chi });
            if let Some(variables) = cli.variables {
                let expanded = expand_finite(&x, variables)?;
                let _ = writeln!(table, "X({variables} variables) = {expanded}");
                json["expanded"] = serde_json::to_value(&expanded).expect("polynomials serialize");
            }
            return Ok(Output::new(json, table));
        }
        Some("prop51") => verify_prop51(g, cli.variables.unwrap_or(n))?,
        Some("prop52") => verify_prop52(g)?,
        Some("thm53") => verify_thm53(g, ny, nz)?,
        Some("superfication") => verify_superfication(g, ny, nz)?,
        Some("combined") => verify_combined(g, ny, nz, cli.nz2.unwrap_or(1))?,
        Some("multicolor") => {
            if cli.m.is_empty() {
                return Err(Failure::Usage("-m is required".into()));
            }
            verify_multicolor(g, &ExponentVector::new(cli.m.clone()), cli.variables.unwrap_or(2))?
        }
        Some(other) => {
            return Err(Failure::Usage(format!(
                "unknown symfunc check {other:?}; expected prop51, prop52, thm53, superfication, combined or multicolor"
            )))
        }
    };
    Ok(verification(report))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mismatch_prints_the_report_and_exits_with_one() {
        let output = Output {
            json: json!({ "count": "3", "poly_side": "4", "equal": false }),
            table: "count 3\npolynomial side 4\n".into(),
            passed: false,
        };
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(emit(output, Mode::Table, &mut out, &mut err), EXIT_MISMATCH);
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "count 3\npolynomial side 4\n"
        );
        assert_eq!(String::from_utf8(err).unwrap(), "identity mismatch\n");
    }
}
