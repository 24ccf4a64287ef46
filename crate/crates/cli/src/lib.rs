//! Command-line front end. [`run`] parses arguments, dispatches to the
//! library and writes to the given streams; it returns the process exit
//! status (0 success, 1 domain error, 2 usage error).

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gauss_spectra::diagram::{double_cover, ChordDiagram, Flavor, PartialState};
use gauss_spectra::graph::interlacement_graph;
use gauss_spectra::poly::{char_poly, IntPolynomial};
use gauss_spectra::pretzel::{census_row, sweep, CensusMode, PretzelParams};
use gauss_spectra::smoothing::{boundary_count_oracle, loop_count_rlcp, loop_count_zlcp};
use gauss_spectra::verify::verify_all;
use gauss_spectra::Error;

#[derive(Debug, Parser)]
#[command(
    name = "gauss-spectra",
    version,
    about = "Loop counting for smoothings of chord diagrams"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for `pretzel` and `verify` (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Rlcp,
    Zlcp,
    Oracle,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FlavorArg {
    First,
    Second,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the canonical form of a Gauss code.
    Parse { code: String },
    /// Print the interlacement graph: vertex count, then one edge per line.
    Graph { code: String },
    /// Print the coefficients of det(xI - A), constant term first.
    Charpoly { code: String },
    /// Count the curves of a smoothing given as a string over {o, u, x}.
    Count {
        code: String,
        state: String,
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
    },
    /// Print the double-cover Gauss code for an unoriented chord.
    Cover {
        code: String,
        state: String,
        #[arg(long)]
        chord: usize,
        #[arg(long, value_enum, default_value_t = FlavorArg::First)]
        flavor: FlavorArg,
    },
    /// Compare the closed forms with a brute-force census for L(p, q, r).
    #[command(allow_negative_numbers = true)]
    Pretzel {
        p: i64,
        q: i64,
        r: i64,
        /// Number of smoothed crossings.
        #[arg(long, required_unless_present = "sweep")]
        m: Option<u64>,
        /// Number of unoriented smoothings among them.
        #[arg(long, default_value_t = 0)]
        j: u64,
        #[arg(long, conflicts_with = "census_only")]
        closed_only: bool,
        #[arg(long)]
        census_only: bool,
        /// Emit every m from 1 to the crossing count, for j = 0 and j = 1.
        #[arg(long, conflicts_with_all = ["m"])]
        sweep: bool,
    },
    /// Run the exhaustive property checks on small diagrams.
    Verify {
        #[arg(long, default_value_t = 5)]
        max_chords: usize,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    2
                }
            };
        }
    };
    let pool = match cli.threads {
        Some(0) => {
            let _ = writeln!(err, "error: --threads must be at least 1");
            return 2;
        }
        Some(n) => rayon::ThreadPoolBuilder::new().num_threads(n).build(),
        None => rayon::ThreadPoolBuilder::new().build(),
    };
    let pool = match pool {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker threads: {e}");
            return 1;
        }
    };
    let result = pool.install(|| execute(&cli));
    match result {
        Ok(Outcome { body, success }) => {
            let _ = writeln!(out, "{body}");
            if success {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "{}: {e}", e.name());
            1
        }
    }
}

struct Outcome {
    body: String,
    success: bool,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome {
            body,
            success: true,
        }
    }
}

fn render(format: Format, text: String, value: Value) -> Outcome {
    Outcome::ok(match format {
        Format::Text => text,
        Format::Json => value.to_string(),
    })
}

fn diagram(code: &str) -> Result<ChordDiagram, Error> {
    ChordDiagram::parse(code)
}

fn state_for(d: &ChordDiagram, text: &str) -> Result<PartialState, Error> {
    let s = PartialState::parse(text)?;
    s.check_against(d)?;
    Ok(s)
}

fn poly_json(p: &IntPolynomial) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| match i64::try_from(c) {
                Ok(v) => json!(v),
                Err(_) => json!(c.to_string()),
            })
            .collect(),
    )
}

fn execute(cli: &Cli) -> Result<Outcome, Error> {
    let format = cli.format;
    match &cli.command {
        Command::Parse { code } => {
            let d = diagram(code)?;
            Ok(render(
                format,
                d.to_string(),
                json!({"code": d.to_string(), "chords": d.len()}),
            ))
        }
        Command::Graph { code } => {
            let g = interlacement_graph(&diagram(code)?);
            Ok(render(
                format,
                g.to_string(),
                json!({"n": g.n(), "edges": g.edges()}),
            ))
        }
        Command::Charpoly { code } => {
            let p = char_poly(
                interlacement_graph(&diagram(code)?)
                    .skew_adjacency()
                    .matrix(),
            );
            Ok(render(
                format,
                p.to_string(),
                json!({"coefficients": poly_json(&p)}),
            ))
        }
        Command::Count {
            code,
            state,
            method,
        } => {
            let d = diagram(code)?;
            let s = state_for(&d, state)?;
            let mut counts: Vec<(&str, usize)> = Vec::new();
            if matches!(method, Method::Rlcp | Method::All) {
                counts.push(("rlcp", loop_count_rlcp(&d, &s)?));
            }
            if *method == Method::Zlcp || (*method == Method::All && !s.has_erased()) {
                counts.push(("zlcp", loop_count_zlcp(&d, &s)?));
            }
            if matches!(method, Method::Oracle | Method::All) {
                counts.push(("oracle", boundary_count_oracle(&d, &s)?.component_count()));
            }
            let count = counts[0].1;
            if counts.iter().any(|&(_, c)| c != count) {
                let listing: Vec<String> = counts.iter().map(|(m, c)| format!("{m}={c}")).collect();
                return Err(Error::MethodDisagreement(listing.join(", ")));
            }
            let methods: serde_json::Map<String, Value> = counts
                .iter()
                .map(|&(m, c)| (m.to_string(), json!(c)))
                .collect();
            Ok(render(
                format,
                count.to_string(),
                json!({"count": count, "methods": methods}),
            ))
        }
        Command::Cover {
            code,
            state,
            chord,
            flavor,
        } => {
            let d = diagram(code)?;
            let s = state_for(&d, state)?;
            let flavor = match flavor {
                FlavorArg::First => Flavor::First,
                FlavorArg::Second => Flavor::Second,
            };
            let cover = double_cover(&d, &s, *chord, flavor)?;
            let origins: Vec<Value> = cover
                .origins
                .iter()
                .map(|o| {
                    json!({
                        "original": o.original,
                        "first_reflected": o.first_reflected,
                        "second_reflected": o.second_reflected,
                    })
                })
                .collect();
            Ok(render(
                format,
                cover.diagram.to_string(),
                json!({
                    "code": cover.diagram.to_string(),
                    "state": cover.state.to_string(),
                    "origins": origins,
                }),
            ))
        }
        Command::Pretzel {
            p,
            q,
            r,
            m,
            j,
            closed_only,
            census_only,
            sweep: all_m,
        } => {
            let params = PretzelParams::new(*p, *q, *r)?;
            let mode = if *closed_only {
                CensusMode::ClosedOnly
            } else if *census_only {
                CensusMode::CensusOnly
            } else {
                CensusMode::Both
            };
            let body = if *all_m {
                serde_json::to_string(&sweep(&params, mode)?)
            } else {
                let m = m.expect("required unless sweeping");
                serde_json::to_string(&census_row(&params, m, *j, mode)?)
            }
            .expect("census rows serialize");
            Ok(Outcome::ok(body))
        }
        Command::Verify { max_chords } => {
            let reports = verify_all(*max_chords);
            let success = reports.iter().all(|r| r.passed());
            let body = match format {
                Format::Text => reports
                    .iter()
                    .map(|r| {
                        let status = if r.passed() { "PASS" } else { "FAIL" };
                        let mut line = format!("{status} {} ({} checked", r.name, r.checked);
                        if !r.passed() {
                            line += &format!(
                                ", {} failed, first: {}",
                                r.failures,
                                r.first_failure.as_deref().unwrap_or("?")
                            );
                        }
                        line + ")"
                    })
                    .collect::<Vec<_>>()
                    .join("\n"),
                Format::Json => serde_json::to_string(&reports).expect("reports serialize"),
            };
            Ok(Outcome { body, success })
        }
    }
}
