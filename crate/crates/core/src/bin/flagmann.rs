use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use flagmann::campaign::{check_odd, verify_bundle, JobSpec, RepClass};
use flagmann::linalg::PrimeField;
use flagmann::oracle::{count_flags_with, OracleConfig};
use flagmann::parse::parse_flag_type;
use flagmann::rep::build_rep;
use flagmann::{positive_roots, Error, FlagEngine, Quiver, Result, RootMultiset};

#[derive(Parser)]
#[command(name = "flagmann", version, about = "Poincaré polynomials of flag varieties of quiver representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Indecomposable,
    Decomposable,
}

#[derive(Subcommand)]
enum Command {
    /// List the positive roots of a Dynkin quiver.
    Roots {
        #[arg(long)]
        quiver: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Poincaré polynomial of the flags of type FLAG in REP.
    Poincare {
        #[arg(long)]
        quiver: PathBuf,
        /// Representation file, or inline summands such as `1,1x2+0,1`.
        #[arg(long)]
        rep: String,
        /// Flag type such as `0,1;1,2`.
        #[arg(long)]
        flag: String,
        /// Recount points over F_2 and F_3.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check every polynomial up to a size bound against point counts.
    CheckOdd {
        #[arg(long)]
        quiver: PathBuf,
        #[arg(long, value_enum, default_value = "indecomposable")]
        rep_class: ClassArg,
        #[arg(long, default_value_t = 6)]
        max_dim: u32,
        #[arg(long, default_value_t = 2)]
        d_max: usize,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check the bundle description of one stratum of V ⊕ W.
    VerifyBundle {
        #[arg(long)]
        quiver: PathBuf,
        #[arg(long)]
        v_rep: String,
        #[arg(long)]
        w_rep: String,
        #[arg(long)]
        v_flag: String,
        #[arg(long)]
        w_flag: String,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Field for the sampled fibers.
        #[arg(long, default_value_t = 3)]
        prime: u32,
    },
}

fn load_rep(quiver: &Quiver, spec: &str) -> Result<RootMultiset> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        RootMultiset::parse(quiver, &text)
    } else {
        RootMultiset::parse_inline(quiver, spec)
    }
}

fn run(cli: Cli) -> Result<i32> {
    let config = OracleConfig::from_env()?;
    match cli.command {
        Command::Roots { quiver, json } => {
            let q = Quiver::from_file(&quiver)?;
            let roots = positive_roots(&q)?;
            if json {
                let list: Vec<_> = roots.iter().map(|r| r.entries().to_vec()).collect();
                println!("{}", json!({ "quiver": quiver.display().to_string(), "roots": list }));
            } else {
                for r in &roots {
                    println!("{r}");
                }
                println!("{} positive roots", roots.len());
            }
            Ok(0)
        }
        Command::Poincare { quiver, rep, flag, verify, json } => {
            let q = Quiver::from_file(&quiver)?;
            let roots = load_rep(&q, &rep)?;
            let u = parse_flag_type(&flag)?;
            let poly = FlagEngine::with_config(&q, config)?.poincare(&roots, &u)?;
            let mut verified = Vec::new();
            let mut failed = None;
            if verify {
                for p in [2u32, 3] {
                    let count = count_flags_with(&build_rep(&q, &roots, &PrimeField::new(p)?)?, &u, &config)?;
                    if count as i128 == poly.eval(p as u64) {
                        verified.push(p);
                    } else {
                        failed = Some((p, count));
                        break;
                    }
                }
            }
            if json {
                let status = if failed.is_some() { "mismatch" } else { "ok" };
                println!(
                    "{}",
                    json!({
                        "quiver": quiver.display().to_string(),
                        "roots": roots.to_string(),
                        "flag_type": u.to_string(),
                        "coefficients": poly.coeffs(),
                        "verified_primes": verified,
                        "status": status,
                    })
                );
            } else {
                println!("{}", poly.coefficient_string());
                if let Some(f) = poly.factored() {
                    println!("= {f}");
                }
                for p in &verified {
                    println!("verified: {} points over F_{p}", poly.eval(*p as u64));
                }
            }
            if let Some((p, count)) = failed {
                eprintln!("verification failed: {count} points over F_{p}, polynomial gives {}", poly.eval(p as u64));
                return Ok(3);
            }
            Ok(0)
        }
        Command::CheckOdd { quiver, rep_class, max_dim, d_max, jobs, json } => {
            let q = Quiver::from_file(&quiver)?;
            let rep_class = match rep_class {
                ClassArg::Indecomposable => RepClass::Indecomposable,
                ClassArg::Decomposable => RepClass::Decomposable,
            };
            let spec = JobSpec { rep_class, max_dim, d_max, jobs, config, ..JobSpec::default() };
            let report = check_odd(&q, &quiver.display().to_string(), &spec)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                print!("{}", report.table());
            }
            Ok(report.exit_code())
        }
        Command::VerifyBundle { quiver, v_rep, w_rep, v_flag, w_flag, samples, seed, prime } => {
            let q = Quiver::from_file(&quiver)?;
            let (v_roots, w_roots) = (load_rep(&q, &v_rep)?, load_rep(&q, &w_rep)?);
            let (v, w) = (parse_flag_type(&v_flag)?, parse_flag_type(&w_flag)?);
            let check = verify_bundle(&q, &v_roots, &w_roots, &v, &w, samples, seed, prime, &config)?;
            println!("rank {}", check.rank);
            println!("flags: {} of type v in V, {} of type w in W (over F_{prime})", check.fibers.flags_v, check.fibers.flags_w);
            let dims: Vec<String> = check.fibers.fiber_dims.iter().map(|d| d.to_string()).collect();
            println!("fiber dims: [{}]", dims.join(", "));
            for s in &check.strata {
                println!(
                    "q={}: stratum {} = q^rank * {} * {} ({})",
                    s.prime,
                    s.stratum,
                    s.flags_v,
                    s.flags_w,
                    if s.ok() { "ok" } else { "MISMATCH" }
                );
            }
            if check.ok() {
                println!("OK");
                Ok(0)
            } else {
                println!("FAILED");
                Ok(3)
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
