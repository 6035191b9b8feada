// SPDX-License-Identifier: Apache-2.0

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use hilb2::asymptotics::{constant_c, convergence_report, le_count, le_count_anticanonical};
use hilb2::hilb::{canonicalize, enumerate_points, QuadraticForm};
use hilb2::query::{parse_rational, CountQuery};
use hilb2::report::{self, CountReport, LeReport};
use hilb2::verify::{run_suite, Suite};

#[derive(Parser, Debug)]
#[command(name = "hilb2", version, about = "Count and inspect integral points on Hilb^2(P^2)")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,

    /// Worker threads; output does not depend on this
    #[arg(long, global = true, env = "HILB2_THREADS")]
    threads: Option<usize>,

    /// Write the report here instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Seed for randomised suites
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// N_{s,t}(B) against c B^{3/t}
    Count(CountArgs),
    /// Certified bracket for the leading constant
    Constant(ConstantArgs),
    /// Heights, class and discriminant of one point
    Inspect(InspectArgs),
    /// Run an invariant verification suite
    Verify(VerifyArgs),
    /// Count points by the Le Rudulier height
    LeCount(LeArgs),
}

#[derive(Args, Debug)]
struct CountArgs {
    #[arg(long)]
    s: String,
    #[arg(long)]
    t: String,
    /// Height bound; a comma-separated list gives a convergence table
    #[arg(long = "B")]
    b: String,
    /// Truncation of the constant's series
    #[arg(long = "M-max", default_value_t = 100)]
    m_max: u64,
    /// Emit every counted point as CSV instead of the summary
    #[arg(long)]
    emit_points: bool,
}

#[derive(Args, Debug)]
struct ConstantArgs {
    /// s / t
    #[arg(long)]
    ratio: String,
    #[arg(long = "M-max", default_value_t = 100)]
    m_max: u64,
}

#[derive(Args, Debug)]
struct InspectArgs {
    /// Linear form a,b,c
    #[arg(long, allow_hyphen_values = true)]
    ell: String,
    /// Quadratic form coefficients of X0^2, X0X1, X0X2, X1^2, X1X2, X2^2
    #[arg(long, allow_hyphen_values = true)]
    q: String,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Suite name, or `all`
    #[arg(long, default_value = "all")]
    suite: String,
}

#[derive(Args, Debug)]
struct LeArgs {
    #[arg(long = "B")]
    b: String,
    /// Bound H_Le^3 instead of H_Le
    #[arg(long)]
    anticanonical: bool,
}

enum Failure {
    Usage(String),
    Check { report: String, message: String },
}

impl From<hilb2::Error> for Failure {
    fn from(e: hilb2::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn parse_ints<const N: usize>(text: &str, what: &str) -> Result<[i128; N], Failure> {
    let v: Vec<i128> = text
        .split(',')
        .map(|x| x.trim().parse::<i128>())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::Usage(format!("{what}: expected {N} comma-separated integers")))?;
    v.try_into().map_err(|_| Failure::Usage(format!("{what}: expected {N} comma-separated integers")))
}

/// Render a flat JSON object (or a list of them) as `field,value` rows.
fn json_to_csv(value: &Value) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["field", "value"]).expect("in-memory write");
    let mut emit = |prefix: &str, v: &Value| {
        let text = match v {
            Value::String(s) => s.clone(),
            Value::Array(items) => items
                .iter()
                .map(|x| x.as_str().map(str::to_string).unwrap_or_else(|| x.to_string()))
                .collect::<Vec<_>>()
                .join(";"),
            other => other.to_string(),
        };
        w.write_record([prefix, text.as_str()]).expect("in-memory write");
    };
    let objects: Vec<&Value> = match value {
        Value::Array(items) => items.iter().collect(),
        other => vec![other],
    };
    for obj in objects {
        if let Value::Object(map) = obj {
            for (k, v) in map {
                if let Value::Object(inner) = v {
                    for (k2, v2) in inner {
                        emit(&format!("{k}.{k2}"), v2);
                    }
                } else {
                    emit(k, v);
                }
            }
        }
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

fn render<S: serde::Serialize>(value: &S, format: Format) -> String {
    match format {
        Format::Json => report::to_json(value),
        Format::Csv => json_to_csv(&serde_json::to_value(value).expect("report serialises")),
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Count(a) => {
            let queries: Vec<CountQuery> = a
                .b
                .split(',')
                .map(|b| CountQuery::parse(&a.s, &a.t, b.trim()))
                .collect::<Result<_, _>>()?;
            if a.emit_points {
                if queries.len() != 1 {
                    return Err(Failure::Usage("--emit-points takes a single B".into()));
                }
                let pts = enumerate_points::<i128>(&queries[0]);
                let mut buf = Vec::new();
                report::write_points_csv(&mut buf, &queries[0], &pts)?;
                return Ok(String::from_utf8(buf).expect("utf-8"));
            }
            if let [q] = queries.as_slice() {
                let r = report::count_report(q, a.m_max)?;
                return Ok(match cli.format {
                    Format::Json => report::to_json(&r),
                    Format::Csv => {
                        let mut w = csv::Writer::from_writer(Vec::new());
                        w.write_record(CountReport::CSV_HEADER).expect("in-memory write");
                        w.write_record(r.csv_row()).expect("in-memory write");
                        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
                    }
                });
            }
            let r = convergence_report(&queries, a.m_max)?;
            Ok(match cli.format {
                Format::Json => report::to_json(&serde_json::json!({
                    "schema_version": report::SCHEMA_VERSION,
                    "report": r,
                })),
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    w.write_record(["B", "N", "c_low", "c_high", "prediction", "rel_dev", "envelope"])
                        .expect("in-memory write");
                    for row in &r.rows {
                        w.write_record([
                            row.b.clone(),
                            row.n.to_string(),
                            report::format_float(row.c_low),
                            report::format_float(row.c_high),
                            report::format_float(row.prediction),
                            report::format_float(row.rel_dev),
                            report::format_float(row.envelope),
                        ])
                        .expect("in-memory write");
                    }
                    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
                }
            })
        }
        Command::Constant(a) => {
            let ratio = parse_rational(&a.ratio)?;
            let ratio = num_traits::ToPrimitive::to_f64(&ratio).unwrap_or(f64::NAN);
            let c = constant_c(ratio, a.m_max)?;
            Ok(render(&report::ConstantReport::from(c), cli.format))
        }
        Command::Inspect(a) => {
            let ell = parse_ints::<3>(&a.ell, "--ell")?;
            let q = parse_ints::<6>(&a.q, "--q")?;
            let z = canonicalize(ell, &QuadraticForm::new(q)?)?;
            Ok(render(&report::inspect(&z), cli.format))
        }
        Command::Verify(a) => {
            let suites: Vec<Suite> = if a.suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![a.suite.parse()?]
            };
            let reports: Vec<_> = suites.into_iter().map(|s| run_suite(s, cli.seed)).collect();
            let failed: Vec<String> = reports.iter().filter(|r| !r.passed()).map(|r| r.suite.clone()).collect();
            let text = if reports.len() == 1 { render(&reports[0], cli.format) } else { render(&reports, cli.format) };
            if failed.is_empty() {
                Ok(text)
            } else {
                Err(Failure::Check { report: text, message: format!("suites failed: {}", failed.join(", ")) })
            }
        }
        Command::LeCount(a) => {
            let b = parse_rational(&a.b)?;
            if b < num_rational::BigRational::from_integer(1.into()) {
                return Err(Failure::Usage("B must be at least 1".into()));
            }
            let c = if a.anticanonical { le_count_anticanonical(&b) } else { le_count(&b) };
            Ok(render(&LeReport::new(c, a.anticanonical), cli.format))
        }
    }
}

fn write_output(out: &Option<PathBuf>, text: &str) -> io::Result<()> {
    match out {
        Some(path) => File::create(path)?.write_all(text.as_bytes()),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let default_hook = std::panic::take_hook();
    std::panic::set_hook(Box::new(move |info| {
        default_hook(info);
        std::process::exit(2);
    }));

    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        if n == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(1);
        }
        builder = builder.num_threads(n);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    match pool.install(|| run(&cli)) {
        Ok(text) => match write_output(&cli.out, &text) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
        },
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Check { report, message }) => {
            let _ = write_output(&cli.out, &report);
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
