//! Command-line interface: group admissibility verdicts, witness
//! certificate construction and re-verification, symbol-algebra
//! diagnostics, and metacyclic descriptor groups.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use admissible::error::Error;
use admissible::group::{
    admissibility_verdict, metacyclic_descriptor_group, parse_group_input, MetacyclicDescriptor,
    PermGroup, VerdictMode, VerdictReport,
};
use admissible::ramify::tame_symbol;
use admissible::symbol::{division_value_criterion, SymbolAlgebraSpec};
use admissible::text::parse_ratfun;
use admissible::valuation::PrimeSpec;
use admissible::witness::{build_witness, verify_certificate, WitnessCertificate};

/// Enumeration bound override, in number of elements.
const MAX_ORDER_ENV: &str = "ADMISSIBLE_MAX_GROUP_ORDER";

#[derive(Parser)]
#[command(
    name = "admissible",
    version,
    about = "Decide the rank-two Sylow criterion for finite groups and build \
             machine-verifiable division-algebra witnesses over Q(zeta)(f, t)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Rank2,
    Metacyclic,
}

impl From<ModeArg> for VerdictMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Rank2 => VerdictMode::Rank2,
            ModeArg::Metacyclic => VerdictMode::Metacyclic,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the per-prime Sylow condition for a group.
    CheckGroup {
        /// Group file (JSON or text form).
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "rank2")]
        mode: ModeArg,
        /// Skip this prime (a forbidden residue characteristic).
        #[arg(long)]
        exclude_prime: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Build a witness certificate for an admissible group.
    /// Exits 2 when the verdict is false.
    Witness {
        #[arg(long)]
        input: PathBuf,
        /// Output path for the certificate JSON.
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Re-verify a certificate against a group input.
    /// Exits 0 on pass, 3 on failure.
    Verify {
        #[arg(long)]
        cert: PathBuf,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Division criterion, valuations and tame symbols of (a, b)_{zeta, n}.
    Symbol {
        #[arg(long)]
        n: u64,
        /// Expression for a, e.g. "f/(f - t)".
        #[arg(long)]
        a: String,
        /// Expression for b, e.g. "(f - t^2)/(f - t - t^2)".
        #[arg(long)]
        b: String,
        /// Prime(s) to ramify at ("t", "f", or a monic-in-f polynomial);
        /// defaults to the five built-in primes. Repeatable.
        #[arg(long = "prime")]
        primes: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Realize the group C_e x| C_m with action exponent i and report
    /// whether it is abelian.
    Descriptor {
        #[arg(long)]
        e: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        i: u64,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::CheckGroup {
            input,
            mode,
            exclude_prime,
            json,
        } => {
            let group = load_group(&input)?;
            let report = admissibility_verdict(&group, mode.into(), exclude_prime)?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&verdict_json(&report)).unwrap()
                );
            } else {
                print_verdict(&group, &report);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Witness { input, out, json } => {
            let group = load_group(&input)?;
            match build_witness(&group) {
                Ok(cert) => {
                    std::fs::write(&out, cert.to_json())
                        .map_err(|e| Error::Parse(format!("writing {}: {e}", out.display())))?;
                    if json {
                        println!(
                            "{}",
                            serde_json::to_string_pretty(&json!({
                                "verdict": true,
                                "group_order": cert.group_order,
                                "primes": cert.primes.iter().map(|r| r.p).collect::<Vec<_>>(),
                                "out": out.display().to_string(),
                            }))
                            .unwrap()
                        );
                    } else {
                        println!(
                            "group of order {}: admissible; certificate with {} per-prime record(s) written to {}",
                            cert.group_order,
                            cert.primes.len(),
                            out.display()
                        );
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Err(Error::NotAdmissible(msg)) => {
                    if json {
                        println!(
                            "{}",
                            serde_json::to_string_pretty(&json!({
                                "verdict": false,
                                "reason": msg,
                            }))
                            .unwrap()
                        );
                    } else {
                        println!("verdict: false ({msg}); no certificate written");
                    }
                    Ok(ExitCode::from(2))
                }
                Err(e) => Err(e),
            }
        }
        Command::Verify { cert, input, json } => {
            let group = load_group(&input)?;
            let text = std::fs::read_to_string(&cert)
                .map_err(|e| Error::Parse(format!("reading {}: {e}", cert.display())))?;
            let cert = WitnessCertificate::from_json(&text)?;
            let report = verify_certificate(&cert, &group)?;
            if json {
                let lines: Vec<_> = report
                    .lines
                    .iter()
                    .map(|l| json!({"check": l.name, "pass": l.pass}))
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "pass": report.pass,
                        "checks": lines,
                    }))
                    .unwrap()
                );
            } else {
                for line in &report.lines {
                    println!("{} {}", if line.pass { "ok  " } else { "FAIL" }, line.name);
                }
                println!("overall: {}", if report.pass { "pass" } else { "fail" });
            }
            Ok(if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            })
        }
        Command::Symbol {
            n,
            a,
            b,
            primes,
            json,
        } => {
            let a = parse_ratfun(&a, n)?;
            let b = parse_ratfun(&b, n)?;
            let spec = SymbolAlgebraSpec::with_canonical_root(n, a, b)?;
            let criterion = division_value_criterion(&spec)?;
            let prime_list: Vec<PrimeSpec> = if primes.is_empty() {
                PrimeSpec::builtin_list()
            } else {
                primes
                    .iter()
                    .map(|s| PrimeSpec::parse(s, n))
                    .collect::<Result<_, _>>()?
            };
            let mut symbols = Vec::new();
            for p in &prime_list {
                symbols.push((p.clone(), tame_symbol(&spec, p)?));
            }
            if json {
                let ram: Vec<_> = symbols
                    .iter()
                    .map(|(p, d)| {
                        json!({
                            "prime": p.to_string(),
                            "residue": d.residue.to_string(),
                            "order": d.order,
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "n": n,
                        "a": spec.a().to_string(),
                        "b": spec.b().to_string(),
                        "value_a": [criterion.value_a.0, criterion.value_a.1],
                        "value_b": [criterion.value_b.0, criterion.value_b.1],
                        "det": criterion.det,
                        "subgroup_order": criterion.subgroup_order,
                        "division": criterion.is_division,
                        "ramification": ram,
                    }))
                    .unwrap()
                );
            } else {
                println!("symbol algebra of degree n = {n}");
                println!("  a = {}   v(a) = {}", spec.a(), criterion.value_a);
                println!("  b = {}   v(b) = {}", spec.b(), criterion.value_b);
                println!(
                    "  value matrix det = {}; subgroup of (Z/{n})^2 has order {} of {}",
                    criterion.det,
                    criterion.subgroup_order,
                    n * n
                );
                println!(
                    "  division algebra (value-group criterion): {}",
                    criterion.is_division
                );
                println!("tame symbols:");
                for (p, d) in &symbols {
                    println!("  at {p}: residue = {}, order {}", d.residue, d.order);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Descriptor { e, m, i, json } => {
            let descriptor = MetacyclicDescriptor { e, m, i };
            let (group, abelian) = metacyclic_descriptor_group(&descriptor)?;
            let order = group.order()?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "e": e,
                        "m": m,
                        "i": i,
                        "order": order,
                        "degree": group.degree(),
                        "abelian": abelian,
                        "generators": group
                            .generators()
                            .iter()
                            .map(|g| g.to_string())
                            .collect::<Vec<_>>(),
                    }))
                    .unwrap()
                );
            } else {
                println!(
                    "descriptor (e = {e}, m = {m}, i = {i}): group of order {order} on {} points",
                    group.degree()
                );
                println!("  abelian: {abelian}");
                for (name, g) in ["sigma", "tau"].iter().zip(group.generators()) {
                    println!("  {name} = {g}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn load_group(path: &PathBuf) -> Result<PermGroup, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("reading {}: {e}", path.display())))?;
    let group = parse_group_input(&text)?;
    match std::env::var(MAX_ORDER_ENV) {
        Ok(v) => {
            let bound: usize = v
                .parse()
                .map_err(|_| Error::Parse(format!("{MAX_ORDER_ENV} must be an integer")))?;
            Ok(group.with_max_order(bound))
        }
        Err(_) => Ok(group),
    }
}

fn factorization_string(factorization: &[(u64, u32)]) -> String {
    if factorization.is_empty() {
        return "1".into();
    }
    factorization
        .iter()
        .map(|&(p, k)| {
            if k == 1 {
                format!("{p}")
            } else {
                format!("{p}^{k}")
            }
        })
        .collect::<Vec<_>>()
        .join(" * ")
}

fn print_verdict(group: &PermGroup, report: &VerdictReport) {
    println!(
        "group: degree {}, order {} = {}",
        group.degree(),
        report.order,
        factorization_string(&report.factorization)
    );
    println!("mode: {}", report.mode);
    if let Some(p) = report.excluded_prime {
        println!("excluded prime: {p}");
    }
    for pv in &report.primes {
        let desc = if pv.sylow.is_abelian {
            let rank = pv.sylow.rank.unwrap_or(0);
            match pv.sylow.invariant_pair {
                Some((q, qp)) => format!("abelian, rank {rank}, (q, q') = ({q}, {qp})"),
                None => format!("abelian, rank {rank}"),
            }
        } else {
            "nonabelian".to_string()
        };
        let extra = match &pv.metacyclic_witness {
            Some(w) => format!(
                " [metacyclic: N = <{}> of order {}]",
                w.normal_generator,
                w.normal_generator.order()
            ),
            None => String::new(),
        };
        println!(
            "  p = {}: sylow order {}, {desc} -> {}{extra}",
            pv.prime,
            pv.sylow.order,
            if pv.satisfied { "ok" } else { "FAIL" }
        );
    }
    println!("verdict: {}", report.verdict);
}

fn verdict_json(report: &VerdictReport) -> serde_json::Value {
    json!({
        "order": report.order,
        "factorization": report.factorization,
        "mode": report.mode.to_string(),
        "excluded_prime": report.excluded_prime,
        "verdict": report.verdict,
        "primes": report.primes.iter().map(|pv| {
            json!({
                "p": pv.prime,
                "sylow_order": pv.sylow.order,
                "abelian": pv.sylow.is_abelian,
                "rank": pv.sylow.rank,
                "q": pv.sylow.invariant_pair.map(|x| x.0),
                "q_prime": pv.sylow.invariant_pair.map(|x| x.1),
                "satisfied": pv.satisfied,
                "metacyclic_normal_generator": pv
                    .metacyclic_witness
                    .as_ref()
                    .map(|w| w.normal_generator.to_string()),
            })
        }).collect::<Vec<_>>(),
    })
}
