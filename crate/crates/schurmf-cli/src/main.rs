use std::process::ExitCode;

use clap::{Parser, Subcommand};
use schurmf::charoracle::{check_involution_bounds, order_bound, plethysm_capped, OracleError};
use schurmf::groups::{
    classify_subgroups, induced_symfunc_with, is_induced_mf_with, plethysm_dispatch, Caps,
    GroupDescriptor, GroupError, IrredCharDescriptor, DEFAULT_COMBINATORIAL_CAP,
};
use schurmf::lr::{
    enumerate_ab_birectangular, enumerate_set_birectangular, lr_coefficient, lr_product,
};
use schurmf::mflib::{
    bbp_mf, conjugate_birectangular, conjugate_set_birectangular, stembridge_mf, MfError,
};
use schurmf::verify::{find_criterion, run_all, run_criterion, VerifyOptions, CRITERIA};
use schurmf::{Partition, SchurExpansion};
use serde::Serialize;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "schurmf",
    version,
    about = "Schur function kernels for multiplicity-free induced characters"
)]
struct Cli {
    /// Largest degree handed to the LR and domino routines.
    #[arg(long, global = true, default_value_t = DEFAULT_COMBINATORIAL_CAP)]
    combinatorial_cap: usize,
    /// Largest degree handed to the character-table oracle.
    #[arg(long, global = true, default_value_t = schurmf::charoracle::DEFAULT_DEGREE_CAP)]
    oracle_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Littlewood-Richardson coefficient c(μ,ν;λ).
    Lr {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
        #[arg(long)]
        lambda: Partition,
    },
    /// Product of two Schur expansions such as "s[2,1] + 2*s[3]".
    Product {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        json: bool,
    },
    /// The plethysm s_outer∘s_inner.
    Plethysm {
        #[arg(long)]
        inner: Partition,
        #[arg(long)]
        outer: Partition,
        /// Use the character-table oracle instead of the combinatorial rules.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// Whether s_μ·s_ν is multiplicity-free, with a brute-force check.
    MfProduct {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
        #[arg(long)]
        json: bool,
    },
    /// Whether s_ν∘s_μ is multiplicity-free, with a brute-force check.
    MfPlethysm {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
        #[arg(long)]
        json: bool,
    },
    /// Birectangular partitions for the pair (a,b).
    Birect {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        /// Use {a,b}-birectangular partitions instead of (a,b)-birectangular ones.
        #[arg(long)]
        set: bool,
        /// Print the common member with the conjugate family instead of listing.
        #[arg(long)]
        conjugate: bool,
        #[arg(long)]
        json: bool,
    },
    /// Schur expansion of an induced character; group and character are JSON.
    Induce {
        #[arg(long)]
        group: String,
        #[arg(long = "char")]
        character: String,
        #[arg(long)]
        json: bool,
    },
    /// Whether an induced character is multiplicity-free.
    Mf {
        #[arg(long)]
        group: String,
        #[arg(long = "char")]
        character: String,
        #[arg(long)]
        json: bool,
    },
    /// The multiplicity-free subgroups of S_n, n ≥ 66.
    Classify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run the acceptance suite and print a pass/fail table.
    Verify {
        /// Criterion number or name; all criteria when omitted.
        #[arg(long)]
        suite: Option<String>,
        /// Skip sweep instances above this degree.
        #[arg(long)]
        max_degree: Option<usize>,
        /// Check the bundled family fixture without recomputing it.
        #[arg(long)]
        fixture_only: bool,
        #[arg(long)]
        json: bool,
    },
    /// Involution count a_n and the bounds built on it.
    Involutions {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Check(String),
    Usage(String),
    Cap(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Cap(_) => 3,
        }
    }
}

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::DegreeCapExceeded { .. } => Failure::Cap(e.to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::DegreeCapExceeded { .. } => Failure::Cap(e.to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

impl From<MfError> for Failure {
    fn from(e: MfError) -> Self {
        match e {
            MfError::Oracle(o) => o.into(),
            e => Failure::Usage(e.to_string()),
        }
    }
}

fn cap(degree: usize, cap: usize) -> Result<(), Failure> {
    if degree > cap {
        return Err(Failure::Cap(format!(
            "degree {degree} exceeds the cap {cap}"
        )));
    }
    Ok(())
}

fn parse_expr(text: &str) -> Result<SchurExpansion, Failure> {
    SchurExpansion::parse(text).map_err(|e| Failure::Usage(format!("{text:?}: {e}")))
}

fn parse_json<T: serde::de::DeserializeOwned>(what: &str, text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Usage(format!("bad {what} JSON: {e}")))
}

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(value).expect("serializable output")
        );
    } else {
        println!("{}", text());
    }
}

#[derive(Serialize)]
struct CrossCheck {
    predicate: bool,
    brute_force: Option<bool>,
}

impl CrossCheck {
    fn finish(self, json: bool, name: &str) -> Result<(), Failure> {
        emit(json, &self, || match self.brute_force {
            Some(b) => format!("{name}: {}\nbrute force: {b}", self.predicate),
            None => format!(
                "{name}: {}\nbrute force: skipped (above cap)",
                self.predicate
            ),
        });
        match self.brute_force {
            Some(b) if b != self.predicate => Err(Failure::Check(
                "predicate disagrees with brute force".into(),
            )),
            _ => Ok(()),
        }
    }
}

fn brute_mf(x: Result<SchurExpansion, Failure>) -> Result<Option<bool>, Failure> {
    match x {
        Ok(x) => Ok(Some(x.is_multiplicity_free().unwrap_or(false))),
        Err(Failure::Cap(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let caps = Caps {
        combinatorial: cli.combinatorial_cap,
        oracle: cli.oracle_cap,
    };
    match cli.command {
        Command::Lr { mu, nu, lambda } => {
            cap(lambda.size(), caps.combinatorial)?;
            println!("{}", lr_coefficient(&mu, &nu, &lambda));
        }
        Command::Product { x, y, json } => {
            let (x, y) = (parse_expr(&x)?, parse_expr(&y)?);
            let top = |e: &SchurExpansion| e.degrees().into_iter().max().unwrap_or(0);
            cap(top(&x) + top(&y), caps.combinatorial)?;
            let z = x.multiply(&y);
            emit(json, &z, || z.render());
        }
        Command::Plethysm {
            inner,
            outer,
            oracle,
            json,
        } => {
            let x = if oracle {
                plethysm_capped(&inner, &outer, caps.oracle)?
            } else {
                plethysm_dispatch(&inner, &outer, &caps)?
            };
            emit(json, &x, || x.render());
        }
        Command::MfProduct { mu, nu, json } => {
            let brute = if mu.size() + nu.size() <= caps.combinatorial {
                Some(lr_product(&mu, &nu))
            } else {
                None
            };
            let check = CrossCheck {
                predicate: stembridge_mf(&mu, &nu),
                brute_force: brute.map(|x| x.is_multiplicity_free().unwrap_or(false)),
            };
            check.finish(json, "multiplicity-free")?;
        }
        Command::MfPlethysm { mu, nu, json } => {
            if mu.is_empty() {
                return Err(Failure::Usage("empty inner partition".into()));
            }
            let brute = brute_mf(plethysm_dispatch(&mu, &nu, &caps).map_err(Failure::from))?;
            CrossCheck {
                predicate: bbp_mf(&mu, &nu),
                brute_force: brute,
            }
            .finish(json, "multiplicity-free")?;
        }
        Command::Birect {
            a,
            b,
            set,
            conjugate,
            json,
        } => {
            if a == 0 || b == 0 {
                return Err(Failure::Usage("a and b must be positive".into()));
            }
            cap(2 * a * b, caps.combinatorial)?;
            if conjugate {
                let common = if set {
                    conjugate_set_birectangular(a, b)
                } else {
                    conjugate_birectangular(a, b)?
                };
                emit(json, &common, || {
                    common.as_ref().map_or("none".into(), |p| p.to_string())
                });
            } else {
                let all = if set {
                    enumerate_set_birectangular(a, b)
                } else {
                    enumerate_ab_birectangular(a, b)
                };
                emit(json, &all, || {
                    all.iter()
                        .map(Partition::to_string)
                        .collect::<Vec<_>>()
                        .join("\n")
                });
            }
        }
        Command::Induce {
            group,
            character,
            json,
        } => {
            let g: GroupDescriptor = parse_json("group", &group)?;
            let rho: IrredCharDescriptor = parse_json("character", &character)?;
            let x = induced_symfunc_with(&g, &rho, &caps)?;
            emit(json, &x, || x.render());
        }
        Command::Mf {
            group,
            character,
            json,
        } => {
            let g: GroupDescriptor = parse_json("group", &group)?;
            let rho: IrredCharDescriptor = parse_json("character", &character)?;
            let v = is_induced_mf_with(&g, &rho, &caps)?;
            emit(json, &v, || match &v.witness {
                Some(w) if !v.verdict => format!("false (s{w} appears at least twice)"),
                _ => v.verdict.to_string(),
            });
        }
        Command::Classify { n, json } => {
            let groups = classify_subgroups(n)?;
            emit(json, &groups, || {
                groups
                    .iter()
                    .map(|c| format!("{:<40} {}", c.group.to_string(), c.condition))
                    .collect::<Vec<_>>()
                    .join("\n")
            });
        }
        Command::Verify {
            suite,
            max_degree,
            fixture_only,
            json,
        } => {
            let opts = VerifyOptions {
                max_degree: max_degree.unwrap_or(usize::MAX),
                recompute_family: !fixture_only,
            };
            let results = match suite {
                Some(key) => {
                    let id = find_criterion(&key).ok_or_else(|| {
                        let names: Vec<&str> = CRITERIA.iter().map(|(_, n)| *n).collect();
                        Failure::Usage(format!(
                            "unknown suite {key:?}; expected one of {}",
                            names.join(", ")
                        ))
                    })?;
                    vec![run_criterion(id, &opts)]
                }
                None => run_all(&opts),
            };
            emit(json, &results, || {
                results
                    .iter()
                    .map(|r| r.to_string())
                    .collect::<Vec<_>>()
                    .join("\n")
            });
            let failed = results.iter().filter(|r| !r.passed).count();
            if failed > 0 {
                return Err(Failure::Check(format!(
                    "{failed} of {} criteria failed",
                    results.len()
                )));
            }
        }
        Command::Involutions { n, json } => {
            let report = check_involution_bounds(n);
            let ratio = order_bound(n);
            let value = json!({ "report": &report, "factorial_over_a_n": ratio.to_string() });
            let show = |b: Option<bool>| b.map_or("n/a".to_string(), |b| b.to_string());
            emit(json, &value, || {
                format!(
                    "a_{n} = {}\nn!/a_n = {ratio}\na_n ≤ n·a_(n−1): {}\na_n < n!/(2⌊n/2⌋!): {}\na_n < n!/2^(n−1): {}",
                    report.a_n,
                    show(report.odd_step),
                    show(report.half_factorial),
                    show(report.power_of_two)
                )
            });
            if [report.odd_step, report.half_factorial, report.power_of_two].contains(&Some(false))
            {
                return Err(Failure::Check("an involution bound fails".into()));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (Failure::Check(msg) | Failure::Usage(msg) | Failure::Cap(msg)) = &f;
            eprintln!("error: {msg}");
            ExitCode::from(f.code())
        }
    }
}
