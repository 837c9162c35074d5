use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use monodelta::decompose::{self, Decomposition};
use monodelta::duality::{self, DualityContext};
use monodelta::oracle::{self, OracleCaps, VerifyConfig};
use monodelta::text::{parse_ideal_file, parse_monomial, render_monomial};
use monodelta::{
    CharVector, ClosureCheck, ClosureKind, ClosureProperty, ClosureSearchCaps, Error, ExpVector,
    IdealPresentation,
};

const SCHEMA: u64 = 1;

#[derive(Parser)]
#[command(name = "monodelta", version, about = "Monomial difference ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test monomials for membership; together they are the support of a
    /// polynomial, which is a member iff all of them are.
    Member {
        ideal: PathBuf,
        #[arg(required = true)]
        monomials: Vec<String>,
    },
    /// Δ-ideal generators of the closure, when they can be named.
    Closure { ideal: PathBuf },
    /// Minimal presentation of the ideal.
    Reduce { ideal: PathBuf },
    /// Prime decomposition (radical well-mixed or perfect ideals).
    Decompose { ideal: PathBuf },
    /// Alexander dual of a radical well-mixed ideal.
    Dual {
        ideal: PathBuf,
        /// Duality point, comma separated (-1 allowed); defaults to the
        /// entrywise maximum of the character vectors.
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
    },
    /// Test a Δ-ideal for primality or closure under an operation.
    Check {
        ideal: PathBuf,
        /// One of radical, reflexive, perfect, rwm, prime.
        #[arg(long)]
        property: String,
        #[arg(long)]
        degree_cap: Option<usize>,
        #[arg(long, default_value_t = 1_000_000)]
        max_candidates: usize,
    },
    /// Compare fast membership with the brute-force oracles on a grid.
    Verify {
        /// Arities to test, comma separated.
        #[arg(long, default_value = "1,2,3")]
        arities: String,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        #[arg(long, default_value_t = 3)]
        max_coeff_sum: u64,
        /// Random generator sets per arity.
        #[arg(long, default_value_t = 50)]
        sets: usize,
        #[arg(long, default_value_t = 3)]
        max_gens: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

/// Failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::InvalidCharEntry(_) => 1,
            Error::CapExceeded(_) => 2,
            _ => 3,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok((out, code)) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&out).expect("json values serialize")
            );
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("monodelta: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn load(path: &PathBuf) -> Result<IdealPresentation, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    parse_ideal_file(&text).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })
}

fn envelope(verb: &str, body: Value) -> Value {
    let mut out = json!({ "schema": SCHEMA, "verb": verb });
    if let (Some(out), Value::Object(body)) = (out.as_object_mut(), body) {
        out.extend(body);
    }
    out
}

fn monomials(gens: &[ExpVector]) -> Value {
    gens.iter().map(render_monomial).collect()
}

fn presentation(ideal: &IdealPresentation) -> Value {
    json!({
        "kind": ideal.kind().name(),
        "arity": ideal.arity(),
        "unit": ideal.is_unit(),
        "generators": monomials(ideal.generators()),
    })
}

fn decomposition(d: &Decomposition) -> Value {
    serde_json::to_value(d).expect("decomposition serializes")
}

fn parse_point(text: &str, arity: usize) -> Result<CharVector, Failure> {
    let entries = text
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| usage(format!("invalid point entry '{}'", s.trim())))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if entries.len() != arity {
        return Err(usage(format!(
            "point has {} entries, the ideal has arity {arity}",
            entries.len()
        )));
    }
    Ok(CharVector::new(entries)?)
}

fn run(command: Command) -> Result<(Value, u8), Failure> {
    let out = match command {
        Command::Member { ideal, monomials } => {
            let ideal = load(&ideal)?;
            let mut results = Vec::new();
            let mut all = true;
            for text in &monomials {
                let v = parse_monomial(text, ideal.arity())
                    .map_err(|e| usage(format!("monomial '{text}': {e}")))?;
                let member = ideal.member(&v)?;
                all &= member;
                results.push(json!({ "monomial": render_monomial(&v), "member": member }));
            }
            envelope(
                "member",
                json!({ "kind": ideal.kind().name(), "results": results, "all": all }),
            )
        }
        Command::Closure { ideal } => {
            let ideal = load(&ideal)?;
            let body = match ideal.closure_delta_generators() {
                Some(gens) => json!({
                    "kind": ideal.kind().name(),
                    "finitely_generated": true,
                    "unit": gens.is_unit(),
                    "generators": monomials(gens.generators()),
                }),
                None => json!({
                    "kind": ideal.kind().name(),
                    "finitely_generated": false,
                    "unit": false,
                    "generators": Value::Null,
                }),
            };
            envelope("closure", body)
        }
        Command::Reduce { ideal } => envelope("reduce", presentation(&load(&ideal)?.reduce())),
        Command::Decompose { ideal } => {
            let ideal = load(&ideal)?;
            envelope("decompose", decomposition(&decompose::decompose(&ideal)?))
        }
        Command::Dual { ideal, point } => {
            let ideal = load(&ideal)?;
            let ctx = match point {
                Some(p) => DualityContext::new(&ideal, parse_point(&p, ideal.arity())?)?,
                None => DualityContext::with_default_point(&ideal)?,
            };
            let components = duality::dual_components(&ctx)?;
            let dual = duality::alexander_dual(&ctx)?;
            let mut body = decomposition(&components);
            if let Value::Object(map) = &mut body {
                map.insert("point".into(), json!(ctx.point()));
                map.insert("unit".into(), json!(dual.is_unit()));
                map.insert("generators".into(), monomials(dual.generators()));
            }
            envelope("dual", body)
        }
        Command::Check {
            ideal,
            property,
            degree_cap,
            max_candidates,
        } => {
            let ideal = load(&ideal)?;
            if ideal.kind() != ClosureKind::Delta {
                return Err(Error::KindMismatch {
                    expected: ClosureKind::Delta.to_string(),
                    found: ideal.kind().to_string(),
                }
                .into());
            }
            if property.trim() == "prime" {
                let b = ideal.is_prime()?;
                envelope(
                    "check",
                    json!({ "property": "prime", "prime": b.is_some(), "component": b }),
                )
            } else {
                let prop: ClosureProperty = property
                    .parse()
                    .map_err(|_| usage(format!("unknown property '{property}'")))?;
                let caps = ClosureSearchCaps {
                    degree_cap,
                    max_candidates,
                };
                let (result, witness) = match ideal.is_closed_under(prop, &caps)? {
                    ClosureCheck::Yes => ("yes", Value::Null),
                    ClosureCheck::No(w) => ("no", json!(render_monomial(&w))),
                    ClosureCheck::Inconclusive => ("inconclusive", Value::Null),
                };
                envelope(
                    "check",
                    json!({ "property": prop.kind().name(), "result": result, "witness": witness }),
                )
            }
        }
        Command::Verify {
            arities,
            max_degree,
            max_coeff_sum,
            sets,
            max_gens,
            seed,
            jobs,
        } => {
            let arities = arities
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse::<usize>()
                        .ok()
                        .filter(|&n| n >= 1)
                        .ok_or_else(|| usage(format!("invalid arity '{}'", s.trim())))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let config = VerifyConfig {
                arities,
                max_degree,
                max_coeff_sum,
                sets_per_arity: sets,
                max_gens,
                seed,
                caps: OracleCaps {
                    max_degree: 2 * max_degree.max(1),
                    max_coeff_sum: 2 * max_coeff_sum.max(1),
                    ..OracleCaps::default()
                },
            };
            let report = oracle::run_verification(&config, jobs)?;
            let code = if report.disagreements.is_empty() {
                0
            } else {
                4
            };
            let mut body = serde_json::to_value(&report).expect("report serializes");
            if let Value::Object(map) = &mut body {
                map.insert("config".into(), json!(config));
            }
            return Ok((envelope("verify", body), code));
        }
    };
    Ok((out, 0))
}
