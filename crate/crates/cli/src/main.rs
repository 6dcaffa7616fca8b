//! `homalg`: build, twist and check Hom-algebras from the command line.
//!
//! Exit status: 0 when every reported check passes, 1 when any check fails
//! or is inapplicable, 2 on usage, parse or construction errors.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use homalg::calculus::PowerCache;
use homalg::constructions::{
    derived_hom_algebra, extend_entrywise, hermitian_jordan, lambda_algebra, listed_sedenion_map, load_octonions,
    octonion_automorphism, sedenions, tower, twisted_jordan, twisted_octonions, yau_twist, DoublingConvention,
};
use homalg::identities::{
    check_nth_hpa_random, class_predicate, decide_hpa, is_fourth_hpa, is_third_hpa, is_up_to_fourth, verify_a3_theorem,
    verify_chain_lemmas, verify_commute_identity, AlgebraClass, CheckConfig, CheckReport, Method, ThirdMethod, Verdict,
};
use homalg::io::{algebra_to_string, load_algebra};
use homalg::random::random_element;
use homalg::repro::{repro_paper, substitute_sedenion_automorphism, ReproConfig, ReproVerdict};
use homalg::{scalar, Element, Error, HomAlgebra, LinearMap};

#[derive(Parser)]
#[command(name = "homalg", version, about = "Exact Hom-algebra constructions and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct RunOpts {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 50)]
    trials: usize,
    #[arg(long = "max-n", default_value_t = 8)]
    max_n: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Build one of the standard algebras.
    Build {
        #[arg(value_enum)]
        which: BuildTarget,
        /// Number of doublings for cayley-dickson.
        #[arg(long, default_value_t = 4)]
        levels: usize,
        /// Doubling parameter for cayley-dickson.
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        gamma: String,
        /// Doubling convention (default: the calibrated one).
        #[arg(long)]
        convention: Option<String>,
        /// Apply the standard automorphism twist (octonions, jordan27).
        #[arg(long)]
        twisted: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Yau twist `(A, βμ, βα)` by a morphism `β`.
    Twist {
        algebra: String,
        /// Matrix file (row-major "p/q" strings) or one of
        /// @octonion, @sedenion-listed, @sedenion-substitute, @jordan-entrywise.
        #[arg(long)]
        beta: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// `A(λ) = (A, λμ + (1-λ)μ^op, α)`.
    Lambda {
        algebra: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The `n`th derived Hom-algebra `(A, α^{2^n-1}μ, α^{2^n})`.
    Derive {
        algebra: String,
        #[arg(long)]
        order: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a property and print one JSON report per line.
    Check {
        property: String,
        algebra: String,
        /// Method for third-hpa; all four when omitted.
        #[arg(long)]
        method: Option<String>,
        #[command(flatten)]
        opts: RunOpts,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the Hom-powers x¹..x^max-n of an element.
    Powers {
        algebra: String,
        /// Comma-separated coordinates; a seeded random element when omitted.
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        #[command(flatten)]
        opts: RunOpts,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the reproduction scenarios.
    Repro {
        /// Only scenarios whose id contains this string.
        #[arg(long)]
        filter: Option<String>,
        #[command(flatten)]
        opts: RunOpts,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BuildTarget {
    CayleyDickson,
    Octonions,
    Jordan27,
}

/// Error carrying the exit status.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(2, format!("error[{}]: {e}", e.code()))
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure(2, format!("error[usage]: {}", msg.into()))
}

/// A file path, or one of the built-in names prefixed with `@`.
fn resolve_algebra(spec: &str) -> Result<HomAlgebra, Failure> {
    match spec {
        "@octonions" => Ok(load_octonions()),
        "@twisted-octonions" => Ok(twisted_octonions()),
        "@sedenions" => Ok(sedenions()),
        "@jordan27" => Ok(hermitian_jordan()),
        "@twisted-jordan27" => Ok(twisted_jordan()),
        s if s.starts_with('@') => Err(usage(format!("unknown built-in algebra {s}"))),
        path => Ok(load_algebra(path)?),
    }
}

fn resolve_map(spec: &str) -> Result<LinearMap, Failure> {
    match spec {
        "@octonion" => Ok(octonion_automorphism()?),
        "@sedenion-listed" => Ok(listed_sedenion_map()),
        "@sedenion-substitute" => Ok(substitute_sedenion_automorphism()?),
        "@jordan-entrywise" => Ok(extend_entrywise(&octonion_automorphism()?)?),
        s if s.starts_with('@') => Err(usage(format!("unknown built-in map {s}"))),
        path => {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::from(Error::Io(format!("{path}: {e}"))))?;
            let rows: Vec<Vec<String>> = serde_json::from_str(&text).map_err(|e| {
                Failure::from(Error::Parse {
                    location: format!("{path}: line {} column {}", e.line(), e.column()),
                    message: e.to_string(),
                })
            })?;
            let parsed = rows
                .iter()
                .map(|r| r.iter().map(|t| scalar::parse(t)).collect::<homalg::Result<Vec<_>>>())
                .collect::<homalg::Result<Vec<_>>>()?;
            Ok(LinearMap::from_rows(&parsed)?)
        }
    }
}

fn parse_element(text: &str, dim: usize) -> Result<Element, Failure> {
    let coords = text.split(',').map(scalar::parse).collect::<homalg::Result<Vec<_>>>()?;
    if coords.len() != dim {
        return Err(Error::Dimension { expected: dim, found: coords.len() }.into());
    }
    Ok(Element::from_coords(coords))
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Failure::from(Error::Io(format!("{}: {e}", path.display()))))
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|e| Failure::from(Error::Io(e.to_string())))
        }
    }
}

fn check_config(opts: &RunOpts) -> CheckConfig {
    CheckConfig { seed: opts.seed, trials: opts.trials, ..CheckConfig::default() }
}

fn run_check(
    property: &str,
    h: &HomAlgebra,
    method: Option<&str>,
    opts: &RunOpts,
) -> Result<Vec<CheckReport>, Failure> {
    let cfg = check_config(opts);
    let x = || random_element(h, cfg.bound, opts.seed);
    let reports = match property {
        "multiplicative" | "commutative" => {
            let ok = if property == "multiplicative" { h.is_multiplicative() } else { h.is_commutative() };
            vec![CheckReport {
                property: property.into(),
                verdict: if ok { Verdict::Pass } else { Verdict::Fail },
                method: Method::DeterministicBasis,
                witness: None,
                notes: vec![],
            }]
        }
        "third-hpa" => match method {
            Some(m) => {
                let m = ThirdMethod::parse(m).ok_or_else(|| usage(format!("unknown method {m}")))?;
                vec![is_third_hpa(h, m, &cfg)]
            }
            None => ThirdMethod::ALL.iter().map(|&m| is_third_hpa(h, m, &cfg)).collect(),
        },
        "fourth-hpa" => vec![is_fourth_hpa(h, &cfg)],
        "up-to-fourth" => vec![is_up_to_fourth(h, &cfg)],
        "hpa" => vec![decide_hpa(h, &cfg)],
        "nth-hpa" => (2..=opts.max_n)
            .map(|n| check_nth_hpa_random(h, n, opts.trials, opts.seed.wrapping_add(n as u64)))
            .collect(),
        "commute-identity" => {
            (4..=opts.max_n).map(|n| verify_commute_identity(h, n, &x(), &cfg)).collect::<homalg::Result<_>>()?
        }
        "chain-lemmas" => {
            (5..=opts.max_n).map(|n| verify_chain_lemmas(h, n, &x(), &cfg)).collect::<homalg::Result<_>>()?
        }
        "a3-theorem" => vec![verify_a3_theorem(h, &cfg)],
        other => {
            let class = AlgebraClass::parse(other).ok_or_else(|| usage(format!("unknown property {other}")))?;
            vec![class_predicate(h, class, &cfg)]
        }
    };
    Ok(reports)
}

fn exit_for(all_pass: bool) -> u8 {
    if all_pass {
        0
    } else {
        1
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Build { which, levels, gamma, convention, twisted, out } => {
            let h = match which {
                BuildTarget::CayleyDickson => {
                    let gamma = scalar::parse(&gamma)?;
                    let conv = match convention {
                        None => homalg::constructions::calibrate_sedenions().selected,
                        Some(c) => DoublingConvention::ALL
                            .into_iter()
                            .find(|d| d.id() == c)
                            .ok_or_else(|| usage(format!("unknown convention {c}")))?,
                    };
                    tower(levels, &gamma, conv)?.with_metadata("cayley_dickson.levels", levels.to_string())
                }
                BuildTarget::Octonions if twisted => twisted_octonions(),
                BuildTarget::Octonions => load_octonions(),
                BuildTarget::Jordan27 if twisted => twisted_jordan(),
                BuildTarget::Jordan27 => hermitian_jordan(),
            };
            emit(&out, &algebra_to_string(&h))?;
            Ok(0)
        }
        Command::Twist { algebra, beta, out } => {
            let h = resolve_algebra(&algebra)?;
            let b = resolve_map(&beta)?;
            emit(&out, &algebra_to_string(&yau_twist(&h, &b)?))?;
            Ok(0)
        }
        Command::Lambda { algebra, lambda, out } => {
            let h = resolve_algebra(&algebra)?;
            let l = scalar::parse(&lambda)?;
            emit(&out, &algebra_to_string(&lambda_algebra(&h, &l)))?;
            Ok(0)
        }
        Command::Derive { algebra, order, out } => {
            let h = resolve_algebra(&algebra)?;
            emit(&out, &algebra_to_string(&derived_hom_algebra(&h, order)?))?;
            Ok(0)
        }
        Command::Check { property, algebra, method, opts, out } => {
            let h = resolve_algebra(&algebra)?;
            let reports = run_check(&property, &h, method.as_deref(), &opts)?;
            let text: String = reports.iter().map(|r| serde_json::to_string(r).expect("plain data") + "\n").collect();
            emit(&out, &text)?;
            Ok(exit_for(reports.iter().all(|r| r.verdict == Verdict::Pass)))
        }
        Command::Powers { algebra, x, opts, out } => {
            let h = resolve_algebra(&algebra)?;
            let x = match x {
                Some(t) => parse_element(&t, h.dim())?,
                None => random_element(&h, CheckConfig::default().bound, opts.seed),
            };
            let mut cache = PowerCache::new(&h, &x)?;
            let mut text = String::new();
            for n in 1..=opts.max_n {
                let p = cache.power(n)?;
                text += &serde_json::json!({ "n": n, "power": p, "display": p.to_string() }).to_string();
                text.push('\n');
            }
            emit(&out, &text)?;
            Ok(0)
        }
        Command::Repro { filter, opts, out } => {
            let cfg = ReproConfig { seed: opts.seed, trials: opts.trials, max_n: opts.max_n };
            let report = repro_paper(filter.as_deref(), &cfg);
            emit(&out, &report.to_jsonl())?;
            Ok(exit_for(report.entries.iter().all(|e| e.verdict != ReproVerdict::Fail)))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            if !msg.is_empty() {
                eprintln!("{msg}");
            }
            ExitCode::from(code)
        }
    }
}
