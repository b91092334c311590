use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hallbase::group::DEFAULT_ENUMERATION_CAP;
use hallbase::base::DEFAULT_WORK_BUDGET;
use hallbase::properties::{run_properties, PropertyConfig};
use hallbase::report::{base_report, fpr_report, prob_report};
use hallbase::symbolic::{verify_families, Family};
use hallbase::{load_corpus, load_pair, Error, PrimeSet, WorkBudget};

#[derive(Parser)]
#[command(name = "hallbase", version, about = "Base sizes and fixed-point-ratio bounds for Hall subgroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(clap::Args)]
struct Limits {
    /// Maximum number of group elements to enumerate.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    cap: usize,
    /// Maximum number of stabilizer-intersection steps per search.
    #[arg(long, default_value_t = DEFAULT_WORK_BUDGET)]
    budget: u64,
}

#[derive(clap::Args)]
struct Pair {
    /// Group file.
    group: PathBuf,
    /// Subgroup file (same degree).
    subgroup: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Certify the majorant inequalities for the exceptional families.
    VerifyExceptional {
        /// Family to check (E8, E7, E6+, E6-, E6, F4, G2, 3D4); repeatable, default all.
        #[arg(long)]
        family: Vec<String>,
        /// Replace each family's threshold on q.
        #[arg(long)]
        qmin: Option<i64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Exact base size, regular orbit count and non-regularity probabilities.
    Basesize {
        #[command(flatten)]
        pair: Pair,
        /// Check that the subgroup is a solvable pi-Hall subgroup, e.g. --pi 2,3.
        #[arg(long)]
        pi: Option<PrimeSet>,
        /// Largest tuple length for Q(G,c).
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
        c: u32,
        /// Tuple length for the regular orbit count.
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        #[command(flatten)]
        limits: Limits,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Fixed-point ratio of every conjugacy class, computed two ways.
    Fpr {
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        limits: Limits,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Prime-order class profile, the majorant and its two-parameter bound.
    Qhat {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
        c: u32,
        #[command(flatten)]
        limits: Limits,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the property suite over a corpus directory.
    Props {
        #[arg(long, default_value = "corpus")]
        corpus: PathBuf,
        #[command(flatten)]
        limits: Limits,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Base and majorant reports for every corpus case.
    Report {
        #[arg(long, default_value = "corpus")]
        corpus: PathBuf,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
        c: u32,
        #[command(flatten)]
        limits: Limits,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

enum Failure {
    Check,
    Error(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize")
}

fn emit(format: Format, text: impl FnOnce() -> String, value: impl FnOnce() -> String) {
    match format {
        Format::Text => print!("{}", text()),
        Format::Json => println!("{}", value()),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::VerifyExceptional { family, qmin, format } => {
            let mut families = Vec::new();
            for f in &family {
                for fam in Family::parse_selection(f)? {
                    if !families.contains(&fam) {
                        families.push(fam);
                    }
                }
            }
            if families.is_empty() {
                families = Family::ALL.to_vec();
            }
            let summary = verify_families(&families, qmin)?;
            emit(
                format,
                || {
                    let mut out: String = summary.reports.iter().map(|r| r.transcript()).collect();
                    out += &format!(
                        "{} of {} families verified\n",
                        summary.reports.iter().filter(|r| r.verdict).count(),
                        summary.reports.len()
                    );
                    out
                },
                || json(&summary),
            );
            if summary.verdict {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
        Command::Basesize { pair, pi, c, m, limits, format } => {
            let case = load_pair(&pair.group, &pair.subgroup, pi, limits.cap)?;
            let mut budget = WorkBudget::new(limits.budget);
            let (mut report, _) = base_report(&case, c, &mut budget)?;
            if m != 5 {
                let space = hallbase::CosetSpace::new(&case.group, &case.subgroup)?;
                report.reg_5 = hallbase::regular_orbit_count(&space, m, &mut budget)?.to_string();
            }
            emit(
                format,
                || {
                    let t = report.to_text();
                    if m != 5 {
                        t.replace("Reg(5)", &format!("Reg({m})"))
                    } else {
                        t
                    }
                },
                || {
                    let mut v = serde_json::to_value(&report).expect("reports serialize");
                    if m != 5 {
                        let obj = v.as_object_mut().expect("object");
                        let r = obj.remove("reg_5").expect("field");
                        obj.insert(format!("reg_{m}"), r);
                    }
                    serde_json::to_string_pretty(&v).expect("reports serialize")
                },
            );
            match &report.hall {
                Some(h) if !(h.is_hall && h.solvable) => Err(Failure::Check),
                _ => Ok(()),
            }
        }
        Command::Fpr { pair, limits, format } => {
            let case = load_pair(&pair.group, &pair.subgroup, None, limits.cap)?;
            let report = fpr_report(&case)?;
            emit(format, || report.to_text(), || json(&report));
            if report.all_agree {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
        Command::Qhat { pair, c, limits, format } => {
            let case = load_pair(&pair.group, &pair.subgroup, None, limits.cap)?;
            let report = prob_report(&case, c)?;
            emit(format, || report.to_text(), || json(&report));
            Ok(())
        }
        Command::Props { corpus, limits, format } => {
            let cases = load_corpus(&corpus, limits.cap)?;
            if cases.is_empty() {
                eprintln!("warning: corpus {} lists no cases", corpus.display());
            }
            let cfg = PropertyConfig {
                budget: limits.budget,
                ..PropertyConfig::default()
            };
            let report = run_properties(&cases, &cfg)?;
            emit(format, || report.to_text(), || json(&report));
            if report.passed {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
        Command::Report { corpus, c, limits, format } => {
            let cases = load_corpus(&corpus, limits.cap)?;
            let mut entries = Vec::new();
            for case in &cases {
                let mut budget = WorkBudget::new(limits.budget);
                let (base, _) = base_report(case, c, &mut budget)?;
                let prob = prob_report(case, c)?;
                entries.push((case.name.clone(), base, prob));
            }
            emit(
                format,
                || {
                    entries
                        .iter()
                        .map(|(name, b, p)| format!("== {name}\n{}{}", b.to_text(), p.to_text()))
                        .collect()
                },
                || {
                    let v: Vec<_> = entries
                        .iter()
                        .map(|(name, b, p)| serde_json::json!({ "case": name, "base": b, "majorant": p }))
                        .collect();
                    json(&v)
                },
            );
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::CapExceeded { .. } | Error::WorkBudgetExceeded { .. } => 3,
                Error::NotEventuallyPositive(_) | Error::DenominatorNotPositive(_) | Error::NotHall(_) => 1,
                _ => 2,
            })
        }
    }
}
