//! Command-line interface to the Stallings-graph subgroup calculus.
//!
//! Exit codes: 0 on success (including a passing verification), 1 when a
//! checked property fails to hold, 2 on usage, file, or parse errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use stallings::io::{export_dot, read_subgroup, write_subgroup};
use stallings::{
    double_cosets, im_inequality, intersect, problem_search, verify_example, verify_theorem,
    Alphabet, Error, Subgroup, Word,
};

#[derive(Parser)]
#[command(
    name = "stallings",
    version,
    about = "Stallings-graph calculus for finitely generated subgroups of free groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rank and reduced rank of a subgroup
    Rank {
        /// Subgroup file (alphabet plus generator words, or a graph file)
        #[arg(long = "subgroup", value_name = "FILE", required = true)]
        subgroups: Vec<PathBuf>,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Intersection of two subgroups, written as a subgroup file
    Intersect {
        /// The two subgroup files (give the flag twice)
        #[arg(long = "subgroup", value_name = "FILE", required = true)]
        subgroups: Vec<PathBuf>,
        /// Emit JSON instead of the subgroup file format
        #[arg(long)]
        json: bool,
        /// Write to a file instead of standard output
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Subgroup generated by two subgroups together, as a subgroup file
    Join {
        /// The two subgroup files (give the flag twice)
        #[arg(long = "subgroup", value_name = "FILE", required = true)]
        subgroups: Vec<PathBuf>,
        /// Emit JSON instead of the subgroup file format
        #[arg(long)]
        json: bool,
        /// Write to a file instead of standard output
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Index in the whole free group, or of the first subgroup in the second
    Index {
        /// One subgroup file, or two to ask for the index of the first
        /// inside the second
        #[arg(long = "subgroup", value_name = "FILE", required = true)]
        subgroups: Vec<PathBuf>,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Double cosets with nontrivial intersection, and their rank total
    Cosets {
        /// The two subgroup files (give the flag twice)
        #[arg(long = "subgroup", value_name = "FILE", required = true)]
        subgroups: Vec<PathBuf>,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Check the meet/join product inequality for a pair of subgroups
    ImCheck {
        /// The two subgroup files (give the flag twice)
        #[arg(long = "subgroup", value_name = "FILE", required = true)]
        subgroups: Vec<PathBuf>,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Rebuild the counterexample pair and verify every certified claim
    VerifyTheorem {
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Build the coprime-kernel family at a given k and verify its invariants
    VerifyExample {
        /// Number of free factors in the conjugate join (alphabet grows to
        /// k + 1 letters)
        #[arg(long)]
        k: u64,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Seeded random search for pairs whose meet rank attains the product
    SearchProblem {
        /// Seed for the deterministic trial stream
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Number of random pairs to probe
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        /// Write the findings log to a file instead of standard output
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Export a subgroup graph in DOT format
    ExportDot {
        /// Subgroup file to draw
        #[arg(long = "subgroup", value_name = "FILE", required = true)]
        subgroups: Vec<PathBuf>,
        /// Write to a file instead of standard output
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

/// A diagnostic plus the exit code it should produce.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::DuplicateLetter(_)
            | Error::EmptyLetter
            | Error::AlphabetMismatch(..)
            | Error::UnknownLetter { .. }
            | Error::MissingBasepoint
            | Error::InvalidParams(_)
            | Error::NotCoprime(..)
            | Error::ZeroModulus
            | Error::NoTrials
            | Error::Parse { .. }
            | Error::Serialize(_) => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn load(path: &Path) -> Result<Subgroup, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    })?;
    read_subgroup(&text).map_err(|e| Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    })
}

fn one(files: &[PathBuf]) -> Result<&PathBuf, Failure> {
    match files {
        [f] => Ok(f),
        _ => Err(Failure {
            code: 2,
            message: format!("expected exactly one --subgroup file, got {}", files.len()),
        }),
    }
}

fn two(files: &[PathBuf]) -> Result<(&PathBuf, &PathBuf), Failure> {
    match files {
        [f, g] => Ok((f, g)),
        _ => Err(Failure {
            code: 2,
            message: format!("expected exactly two --subgroup files, got {}", files.len()),
        }),
    }
}

fn emit(out: Option<&PathBuf>, content: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, content).map_err(|e| Failure {
            code: 2,
            message: format!("{}: {e}", path.display()),
        }),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

/// Renders a double-coset representative; the identity is written `1`.
fn render_rep(w: &Word, alphabet: &Alphabet) -> Result<String, Failure> {
    if w.is_empty() {
        Ok("1".to_string())
    } else {
        Ok(w.render(alphabet)?)
    }
}

fn verdict_line(lhs: u64, rhs: u64, what: &str) -> String {
    if lhs <= rhs {
        format!("{lhs} <= {rhs}: {what} holds")
    } else {
        format!("{lhs} > {rhs}: {what} fails")
    }
}

fn subgroup_report(h: &Subgroup, json: bool, out: Option<&PathBuf>) -> Result<(), Failure> {
    let content = if json {
        let gens = h
            .basis()
            .iter()
            .map(|w| w.render(h.alphabet()))
            .collect::<stallings::Result<Vec<String>>>()?;
        format!(
            "{}\n",
            json!({
                "rank": h.rank(),
                "reduced_rank": h.reduced_rank(),
                "generators": gens,
            })
        )
    } else {
        write_subgroup(h)?
    };
    emit(out, &content)
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Rank { subgroups, json } => {
            let h = load(one(&subgroups)?)?;
            if json {
                println!(
                    "{}",
                    json!({ "rank": h.rank(), "reduced_rank": h.reduced_rank() })
                );
            } else {
                println!("rank: {}", h.rank());
                println!("reduced rank: {}", h.reduced_rank());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Intersect {
            subgroups,
            json,
            out,
        } => {
            let (p1, p2) = two(&subgroups)?;
            let meet = intersect(&load(p1)?, &load(p2)?)?;
            subgroup_report(&meet, json, out.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Join {
            subgroups,
            json,
            out,
        } => {
            let (p1, p2) = two(&subgroups)?;
            let join = load(p1)?.join(&load(p2)?)?;
            subgroup_report(&join, json, out.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Index { subgroups, json } => {
            let index = match subgroups.as_slice() {
                [f] => load(f)?.finite_index(),
                [f, g] => load(f)?.index_in(&load(g)?)?,
                _ => {
                    return Err(Failure {
                        code: 2,
                        message: format!(
                            "expected one or two --subgroup files, got {}",
                            subgroups.len()
                        ),
                    })
                }
            };
            if json {
                println!("{}", json!({ "index": index }));
            } else {
                match index {
                    Some(n) => println!("index: {n}"),
                    None => println!("index: infinite"),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Cosets { subgroups, json } => {
            let (p1, p2) = two(&subgroups)?;
            let h1 = load(p1)?;
            let h2 = load(p2)?;
            let report = double_cosets(&h1, &h2)?;
            let alphabet = h1.alphabet();
            if json {
                let components = report
                    .components
                    .iter()
                    .map(|c| {
                        Ok(json!({
                            "representative": render_rep(&c.representative, alphabet)?,
                            "reduced_rank": c.reduced_rank,
                        }))
                    })
                    .collect::<Result<Vec<_>, Failure>>()?;
                println!(
                    "{}",
                    json!({ "components": components, "total": report.total })
                );
            } else {
                println!(
                    "double cosets with nontrivial intersection: {}",
                    report.components.len()
                );
                for c in &report.components {
                    println!(
                        "rep {}: reduced rank {}",
                        render_rep(&c.representative, alphabet)?,
                        c.reduced_rank
                    );
                }
                println!("total: {}", report.total);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::ImCheck { subgroups, json } => {
            let (p1, p2) = two(&subgroups)?;
            let report = im_inequality(&load(p1)?, &load(p2)?)?;
            if json {
                println!(
                    "{}",
                    json!({
                        "r1": report.r1,
                        "r2": report.r2,
                        "r_meet": report.r_meet,
                        "r_join": report.r_join,
                        "lhs": report.lhs,
                        "rhs": report.rhs,
                        "holds": report.holds,
                        "certificates": serde_json::Value::Null,
                    })
                );
            } else {
                println!("r1: {}", report.r1);
                println!("r2: {}", report.r2);
                println!("r_meet: {}", report.r_meet);
                println!("r_join: {}", report.r_join);
                println!("{}", verdict_line(report.lhs, report.rhs, "inequality"));
            }
            if report.holds {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::VerifyTheorem { json } => {
            let report = verify_theorem()?;
            if json {
                println!(
                    "{}",
                    json!({
                        "r1": report.r1,
                        "r2": report.r2,
                        "r_meet": report.r_meet,
                        "r_join": report.r_join,
                        "lhs": report.lhs,
                        "rhs": report.rhs,
                        "holds": report.lhs <= report.rhs,
                        "certificates": {
                            "c1": {
                                "holds": report.c1.holds,
                                "witnesses": report.c1.witnesses.len(),
                            },
                            "c2": {
                                "m1": report.c2.m1,
                                "m2": report.c2.m2,
                                "potentials1": report.c2.potentials1,
                                "potentials2": report.c2.potentials2,
                                "join_identified": report.c2.join_identified,
                                "certified": report.c2.certified(),
                            },
                        },
                    })
                );
            } else {
                println!("r1: {}", report.r1);
                println!("r2: {}", report.r2);
                println!("r_meet: {}", report.r_meet);
                println!("r_join: {}", report.r_join);
                println!("{}", verdict_line(report.lhs, report.rhs, "inequality"));
                println!("meet: {}", report.meet_params);
                println!("double cosets: {}", report.coset_count);
                println!(
                    "degree-transfer certificate: holds ({} witnesses)",
                    report.c1.witnesses.len()
                );
                println!(
                    "congruence certificate: holds (moduli {} and {})",
                    report.c2.m1, report.c2.m2
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyExample { k, json } => {
            let report = verify_example(k)?;
            if json {
                println!(
                    "{}",
                    json!({
                        "r1": report.r1,
                        "r2": report.r2,
                        "r_meet": report.total,
                        "r_join": report.join_reduced_rank,
                        "lhs": report.lhs,
                        "rhs": report.rhs,
                        "holds": report.generalized_holds,
                        "certificates": serde_json::Value::Null,
                    })
                );
            } else {
                println!("k: {}", report.k);
                println!("r1: {}", report.r1);
                println!("r2: {}", report.r2);
                println!("double-coset rank total: {}", report.total);
                println!("product r1 * r2: {}", report.rhs);
                println!("tight: {}", report.tight);
                println!("extended-join reduced rank: {}", report.join_reduced_rank);
                println!(
                    "{}",
                    verdict_line(report.lhs, report.rhs, "generalized inequality")
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::SearchProblem { seed, trials, out } => {
            let alphabet = Alphabet::from_chars("ab").expect("two-letter alphabet");
            let outcome = problem_search(&alphabet, seed, trials)?;
            let log = outcome.render_log()?;
            emit(out.as_ref(), &log)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::ExportDot { subgroups, out } => {
            let h = load(one(&subgroups)?)?;
            let dot = export_dot(h.graph())?;
            emit(out.as_ref(), &dot)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
