//! `staircase` — a command-line calculator for monomial ideals with
//! rational (mode `Q`) or integer (mode `Z`) exponents.
//!
//! Ideals are written in a small expression language (see [`dsl`]), passed
//! inline or as `@file` / inline JSON. Exit codes: 0 success, 1 domain
//! error (zero ideal, open thresholds, wrong shape, ...), 2 parse or usage
//! error.

mod dsl;
mod render;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use staircase_core::covers::{graph_from_ideal, minimal_interval_covers};
use staircase_core::decompose::{decompose, is_m_irreducible, is_m_prime};
use staircase_core::dimension::{max_chain, mdim, semicontinuity_radius, MDim};
use staircase_core::json::{decomposition_to_json, ideal_from_json_str, ideal_to_json_string};
use staircase_core::metric::distance;
use staircase_core::{Config, Ideal, Mode, Rational};

use dsl::{eval_text, ideal_to_text, parse_monomial, pure_powers_to_text};
use render::{render_svg, RenderSpec};

#[derive(Debug)]
pub enum CliError {
    /// Malformed input: exit code 2.
    Parse(String),
    /// A well-formed request the mathematics rejects: exit code 1.
    Domain(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(msg) => write!(f, "parse error: {msg}"),
            CliError::Domain(msg) => write!(f, "error: {msg}"),
        }
    }
}

impl From<staircase_core::Error> for CliError {
    fn from(e: staircase_core::Error) -> CliError {
        CliError::Domain(e.to_string())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum ModeArg {
    #[value(name = "Q", alias = "q")]
    Q,
    #[value(name = "Z", alias = "z")]
    Z,
}

impl ModeArg {
    fn mode(self) -> Mode {
        match self {
            ModeArg::Q => Mode::Dense,
            ModeArg::Z => Mode::Integer,
        }
    }
}

#[derive(Args, Debug, Clone)]
struct Ambient {
    /// Number of variables (required for expression input; inferred from
    /// JSON input).
    #[arg(long)]
    dim: Option<usize>,
    /// Exponent mode: Q = nonnegative rationals, Z = nonnegative integers.
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
}

#[derive(Parser, Debug)]
#[command(name = "staircase", version, about = "Exact monomial-ideal calculator on staircase regions")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Evaluate an expression and print the canonical form.
    Normalize {
        #[command(flatten)]
        ambient: Ambient,
        /// Print JSON instead of expression text.
        #[arg(long)]
        json: bool,
        expr: String,
    },
    /// Compare two ideals for equality.
    Eq {
        #[command(flatten)]
        ambient: Ambient,
        a: String,
        b: String,
    },
    /// Test whether a monomial lies in an ideal.
    Member {
        #[command(flatten)]
        ambient: Ambient,
        monomial: String,
        expr: String,
    },
    /// Sum of two ideals.
    Sum {
        #[command(flatten)]
        ambient: Ambient,
        #[arg(long)]
        json: bool,
        a: String,
        b: String,
    },
    /// Intersection of two ideals.
    Intersect {
        #[command(flatten)]
        ambient: Ambient,
        #[arg(long)]
        json: bool,
        a: String,
        b: String,
    },
    /// The irredundant monomial generators of a fully closed ideal.
    Generators {
        #[command(flatten)]
        ambient: Ambient,
        #[arg(long)]
        json: bool,
        expr: String,
    },
    /// The unique irredundant decomposition into pure-power ideals.
    Decompose {
        #[command(flatten)]
        ambient: Ambient,
        #[arg(long)]
        json: bool,
        expr: String,
    },
    /// Whether the ideal is m-irreducible (generated by pure powers).
    Irreducible {
        #[command(flatten)]
        ambient: Ambient,
        expr: String,
    },
    /// Whether the ideal is an m-prime, and on which variables.
    Prime {
        #[command(flatten)]
        ambient: Ambient,
        #[arg(long)]
        json: bool,
        expr: String,
    },
    /// Monomial Krull dimension.
    Mdim {
        #[command(flatten)]
        ambient: Ambient,
        /// Also print a maximal chain of prime supports.
        #[arg(long)]
        chain: bool,
        #[arg(long)]
        json: bool,
        expr: String,
    },
    /// A maximal chain of m-prime supports above the ideal.
    Chain {
        #[command(flatten)]
        ambient: Ambient,
        #[arg(long)]
        json: bool,
        expr: String,
    },
    /// The semicontinuity radius of a finitely generated ideal.
    Radius {
        #[command(flatten)]
        ambient: Ambient,
        #[arg(long)]
        json: bool,
        expr: String,
    },
    /// Certified distance between two finitely generated ideals.
    Dist {
        #[command(flatten)]
        ambient: Ambient,
        /// Enclosure width: a rational (1/1000000), decimal (0.000001) or
        /// scientific (1e-6) value.
        #[arg(long, default_value = "1/1000000")]
        tol: String,
        #[arg(long)]
        json: bool,
        a: String,
        b: String,
    },
    /// Minimal interval vertex covers of a diagonal quadratic ideal.
    Covers {
        #[command(flatten)]
        ambient: Ambient,
        /// Emit the labeled graph in DOT format instead.
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        json: bool,
        expr: String,
    },
    /// Render the staircase region of a two-variable ideal as SVG.
    Plot {
        #[command(flatten)]
        ambient: Ambient,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Plot area side length in pixels.
        #[arg(long, default_value_t = 480)]
        size: u32,
        /// Axis range as a rational; defaults to 1 + the largest exponent.
        #[arg(long)]
        range: Option<String>,
        expr: String,
    },
}

/// Loads one ideal argument: inline JSON, `@file` (JSON or expression), or
/// an expression in the ambient configuration.
fn load_ideal(arg: &str, ambient: &Ambient) -> Result<Ideal, CliError> {
    let content;
    let text = if let Some(path) = arg.strip_prefix('@') {
        content = std::fs::read_to_string(path)
            .map_err(|e| CliError::Parse(format!("cannot read `{path}`: {e}")))?;
        content.trim()
    } else {
        arg.trim()
    };

    if text.starts_with('{') {
        let ideal = ideal_from_json_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        if let Some(d) = ambient.dim {
            if d != ideal.cfg().dim {
                return Err(CliError::Parse(format!(
                    "--dim {d} conflicts with JSON dimension {}",
                    ideal.cfg().dim
                )));
            }
        }
        if let Some(mode) = ambient.mode {
            if mode.mode() != ideal.cfg().mode {
                return Err(CliError::Parse("--mode conflicts with JSON mode".into()));
            }
        }
        return Ok(ideal);
    }

    let cfg = ambient_config(ambient)?;
    eval_text(text, cfg)
}

fn ambient_config(ambient: &Ambient) -> Result<Config, CliError> {
    let dim = ambient
        .dim
        .ok_or_else(|| CliError::Parse("--dim is required for expression input".into()))?;
    if dim == 0 {
        return Err(CliError::Parse("--dim must be at least 1".into()));
    }
    let mode = ambient.mode.unwrap_or(ModeArg::Q).mode();
    Ok(Config { dim, mode })
}

fn load_pair(a: &str, b: &str, ambient: &Ambient) -> Result<(Ideal, Ideal), CliError> {
    let a = load_ideal(a, ambient)?;
    let b = load_ideal(b, ambient)?;
    if a.cfg() != b.cfg() {
        return Err(CliError::Parse("the two ideals have different configurations".into()));
    }
    Ok((a, b))
}

fn print_ideal(ideal: &Ideal, json: bool) {
    if json {
        println!("{}", ideal_to_json_string(ideal));
    } else {
        println!("{}", ideal_to_text(ideal));
    }
}

/// Tolerances accept rational (`1/1000000`), decimal (`0.000001`) and
/// scientific (`1e-6`) forms.
fn parse_tolerance(text: &str) -> Result<Rational, CliError> {
    let text = text.trim();
    if let Ok(r) = Rational::parse(text) {
        return Ok(r);
    }
    let bad = || CliError::Parse(format!("invalid tolerance `{text}`"));
    let (mantissa, exponent) = match text.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().map_err(|_| bad())?),
        None => (text, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().all(|c| c.is_ascii_digit())
        || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let numer = Rational::parse(if digits.is_empty() { "0" } else { &digits })
        .map_err(|_| bad())?;
    let shift = exponent - frac_part.len() as i32;
    let ten = Rational::from_int(10);
    let mut value = numer;
    for _ in 0..shift.abs() {
        value = if shift >= 0 { &value * &ten } else { &value / &ten };
    }
    Ok(value)
}

/// Decimal places that make a step of `tol` visible.
fn digits_for(tol: &Rational) -> u32 {
    let mut digits = 1;
    let mut step = Rational::new(1, 10);
    while &step > tol && digits < 30 {
        step = &step / &Rational::from_int(10);
        digits += 1;
    }
    digits + 1
}

fn supports_as_json(chain: &[staircase_core::decompose::PrimeSupport]) -> serde_json::Value {
    let list: Vec<Vec<usize>> = chain
        .iter()
        .map(|s| s.indices().iter().map(|i| i + 1).collect())
        .collect();
    json!(list)
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Cmd::Normalize { ambient, json, expr } => {
            let ideal = load_ideal(&expr, &ambient)?;
            print_ideal(&ideal, json);
        }
        Cmd::Eq { ambient, a, b } => {
            let (a, b) = load_pair(&a, &b, &ambient)?;
            println!("{}", a == b);
        }
        Cmd::Member { ambient, monomial, expr } => {
            let ideal = load_ideal(&expr, &ambient)?;
            let m = parse_monomial(&monomial, *ideal.cfg())?;
            println!("{}", ideal.contains_monomial(&m)?);
        }
        Cmd::Sum { ambient, json, a, b } => {
            let (a, b) = load_pair(&a, &b, &ambient)?;
            print_ideal(&a.sum(&b)?, json);
        }
        Cmd::Intersect { ambient, json, a, b } => {
            let (a, b) = load_pair(&a, &b, &ambient)?;
            print_ideal(&a.intersect(&b)?, json);
        }
        Cmd::Generators { ambient, json, expr } => {
            let ideal = load_ideal(&expr, &ambient)?;
            let generators = ideal.generators()?;
            let list: Vec<String> = generators.iter().map(|m| m.to_string()).collect();
            if json {
                println!("{}", json!({ "generators": list }));
            } else {
                println!("({})", list.join(", "));
            }
        }
        Cmd::Decompose { ambient, json, expr } => {
            let ideal = load_ideal(&expr, &ambient)?;
            let dec = decompose(&ideal)?;
            if json {
                println!("{}", decomposition_to_json(&dec));
            } else {
                for component in dec.components() {
                    println!("{}", pure_powers_to_text(component));
                }
            }
        }
        Cmd::Irreducible { ambient, expr } => {
            let ideal = load_ideal(&expr, &ambient)?;
            println!("{}", is_m_irreducible(&ideal)?);
        }
        Cmd::Prime { ambient, json, expr } => {
            let ideal = load_ideal(&expr, &ambient)?;
            match is_m_prime(&ideal) {
                Some(support) => {
                    if json {
                        let vars: Vec<usize> = support.indices().iter().map(|i| i + 1).collect();
                        println!("{}", json!({ "prime": vars }));
                    } else {
                        println!("T = {support}");
                    }
                }
                None => {
                    if json {
                        println!("{}", json!({ "prime": serde_json::Value::Null }));
                    } else {
                        println!("not m-prime");
                    }
                }
            }
        }
        Cmd::Mdim { ambient, chain, json, expr } => {
            let ideal = load_ideal(&expr, &ambient)?;
            let dim = mdim(&ideal);
            let chain_supports = if chain { Some(max_chain(&ideal)?) } else { None };
            if json {
                let dim_value = match dim {
                    MDim::NegInfinity => json!("-inf"),
                    MDim::Finite(n) => json!(n),
                };
                let mut obj = serde_json::Map::new();
                obj.insert("mdim".into(), dim_value);
                if let Some(chain) = &chain_supports {
                    obj.insert("chain".into(), supports_as_json(chain));
                }
                println!("{}", serde_json::Value::Object(obj));
            } else {
                println!("mdim = {dim}");
                if let Some(chain) = chain_supports {
                    for support in chain {
                        println!("{support}");
                    }
                }
            }
        }
        Cmd::Chain { ambient, json, expr } => {
            let ideal = load_ideal(&expr, &ambient)?;
            let chain = max_chain(&ideal)?;
            if json {
                println!("{}", json!({ "chain": supports_as_json(&chain) }));
            } else {
                for support in chain {
                    println!("{support}");
                }
            }
        }
        Cmd::Radius { ambient, json, expr } => {
            let ideal = load_ideal(&expr, &ambient)?;
            let radius = semicontinuity_radius(&ideal)?;
            if json {
                println!("{}", json!({ "radius": radius.to_string() }));
            } else {
                println!("{radius}");
            }
        }
        Cmd::Dist { ambient, tol, json, a, b } => {
            let (a, b) = load_pair(&a, &b, &ambient)?;
            let tol = parse_tolerance(&tol)?;
            let enclosure = distance(&a, &b, &tol)?;
            if json {
                println!(
                    "{}",
                    json!({ "lo": enclosure.lo.to_string(), "hi": enclosure.hi.to_string() })
                );
            } else {
                let digits = digits_for(&tol);
                let lo = enclosure.lo.to_decimal(digits, false);
                let hi = enclosure.hi.to_decimal(digits, true);
                println!("dist in [{lo}, {hi}]");
            }
        }
        Cmd::Covers { ambient, dot, json, expr } => {
            let ideal = load_ideal(&expr, &ambient)?;
            let graph = graph_from_ideal(&ideal)?;
            if dot {
                println!("graph staircase {{");
                for (&(i, j), weight) in graph.edges() {
                    println!("  {} -- {} [label=\"{}\"];", i + 1, j + 1, weight);
                }
                println!("}}");
            } else {
                let covers = minimal_interval_covers(&graph);
                if json {
                    let list: Vec<serde_json::Value> = covers
                        .iter()
                        .map(|c| {
                            let mut map = serde_json::Map::new();
                            for (v, w) in c.weights() {
                                map.insert(
                                    format!("{}", v + 1),
                                    json!({
                                        "min": w.threshold().to_string(),
                                        "open": w.is_open(),
                                    }),
                                );
                            }
                            serde_json::Value::Object(map)
                        })
                        .collect();
                    println!("{}", json!({ "covers": list }));
                } else {
                    for cover in covers {
                        println!("{cover}");
                    }
                }
            }
        }
        Cmd::Plot { ambient, out, size, range, expr } => {
            let ideal = load_ideal(&expr, &ambient)?;
            let range = range
                .map(|r| Rational::parse(&r).map_err(|e| CliError::Parse(e.to_string())))
                .transpose()?;
            let svg = render_svg(&ideal, &RenderSpec { size, range })?;
            match out {
                Some(path) => std::fs::write(&path, svg).map_err(|e| {
                    CliError::Domain(format!("cannot write `{}`: {e}", path.display()))
                })?,
                None => print!("{svg}"),
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e @ CliError::Domain(_)) => {
            eprintln!("{e}");
            ExitCode::from(1)
        }
        Err(e @ CliError::Parse(_)) => {
            eprintln!("{e}");
            ExitCode::from(2)
        }
    }
}
