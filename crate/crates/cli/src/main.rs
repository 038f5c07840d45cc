//! `weylcert`: good W-types, minimal solvable orbits, `h∨` vectors,
//! certificates and spectral-gap regions from the command line.
//!
//! Exit codes: 0 on success, 2 when a request falls outside the hypotheses
//! of the underlying results, 1 on malformed input.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use weylcert_core::dirac::{certify, gap_bounds, spectral_gap, ModuleProfile};
use weylcert_core::orbits::{h_half, h_vector, o_min, special_orbit};
use weylcert_core::springer::good_set;
use weylcert_core::{rational, DualType, Error, Exceptional, Orbit, Partition, Which};

mod fixtures;

#[derive(Parser)]
#[command(name = "weylcert", version, about = "Dirac-inequality certificates for unramified principal series")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct TypeArgs {
    /// A, B, C, D, or G2/F4/E6/E7/E8
    #[arg(long)]
    family: String,
    /// Lie rank; optional for exceptional families
    #[arg(long)]
    rank: Option<usize>,
}

impl TypeArgs {
    fn dual_type(&self) -> Result<DualType, Error> {
        let rank = match self.rank {
            Some(r) => r,
            None => self
                .family
                .parse::<Exceptional>()
                .map(Exceptional::rank)
                .map_err(|_| Error::Malformed(format!("--rank is required for family {}", self.family)))?,
        };
        DualType::from_family(&self.family, rank)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the good W-types of the regular, subregular or sub-subregular orbit
    Good {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, default_value = "regular")]
        orbit: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the minimal orbit with solvable centralizer
    Omin {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        json: bool,
    },
    /// Print h∨/2 and |h∨/2|² for an orbit given by its Jordan partition
    Hvec {
        #[command(flatten)]
        ty: TypeArgs,
        /// Comma-separated parts, e.g. 4,2
        #[arg(long)]
        partition: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the certificate engine on a profile file
    Certify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Classify a squared parameter norm against the spectral gaps
    Gaps {
        #[command(flatten)]
        ty: TypeArgs,
        /// Exact rational, e.g. 12 or 35/2
        #[arg(long)]
        norm_sq: String,
        #[arg(long)]
        json: bool,
    },
    /// Regenerate the fixture JSON files
    Tables {
        #[arg(long, default_value = "fixtures")]
        out: PathBuf,
    },
}

enum Failure {
    Hypothesis(String),
    Malformed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_hypothesis() || matches!(e, Error::UseStaticTable(_)) {
            Failure::Hypothesis(e.to_string())
        } else {
            Failure::Malformed(e.to_string())
        }
    }
}

fn malformed(e: impl std::fmt::Display) -> Failure {
    Failure::Malformed(e.to_string())
}

fn print_json(v: &impl serde::Serialize) -> Result<(), Failure> {
    println!("{}", serde_json::to_string_pretty(v).map_err(malformed)?);
    Ok(())
}

fn parse_partition(s: &str) -> Result<Partition, Failure> {
    let parts = s
        .split(',')
        .map(|x| x.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| malformed(format!("bad partition {s:?}: {e}")))?;
    Ok(Partition::new(parts)?)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Good { ty, orbit, json } => {
            let t = ty.dual_type()?;
            let which: Which = orbit.parse()?;
            let g = good_set(t, which)?;
            if json {
                print_json(&json!({ "dual_type": t, "orbit": which, "good": &*g }))?;
            } else {
                println!("Good({which}) for {t}: {} types", g.len());
                for l in g.labels() {
                    println!("  {l}");
                }
            }
        }
        Command::Omin { ty, json } => {
            let o = o_min(ty.dual_type()?)?;
            if json {
                print_json(&o)?;
            } else {
                println!("{}", orbit_name(&o));
            }
        }
        Command::Hvec { ty, partition, json } => {
            let t = ty.dual_type()?;
            let o = Orbit::classical(t, parse_partition(&partition)?)?;
            let half = h_half(&o)?;
            let norm = half.norm_sq();
            if json {
                print_json(&json!({
                    "orbit": o,
                    "h": h_vector(&o)?,
                    "h_half": half,
                    "h_half_norm_sq": rational::to_string(&norm),
                }))?;
            } else {
                println!("{half}, norm²={}", rational::to_string(&norm));
            }
        }
        Command::Certify { input, json } => {
            let text = fs::read_to_string(&input).map_err(|e| malformed(format!("{}: {e}", input.display())))?;
            let profile: ModuleProfile = serde_json::from_str(&text).map_err(malformed)?;
            let r = certify(&profile)?;
            if json {
                print_json(&r)?;
            } else {
                println!("verdict: {}", r.verdict);
                for w in &r.witnesses {
                    let s = w.wtype.as_ref().map(|s| serde_json::to_string(s).unwrap_or_default());
                    println!(
                        "  witness: {:?} at {}, |nu|²={} vs |h/2|²={}{}",
                        w.rule,
                        orbit_name(&w.orbit),
                        rational::to_string(&w.nu_norm_sq),
                        rational::to_string(&w.h_half_norm_sq),
                        s.map(|s| format!(", type {s}")).unwrap_or_default()
                    );
                }
                if let Some(c) = &r.constraint {
                    let rel = if c.nu_in_w_orbit { "in" } else { "not in" };
                    println!("  constraint: nu {rel} W.{} ({})", c.h_half, orbit_name(&c.orbit));
                }
                println!("region: {}", r.region);
                for l in &r.log {
                    println!("  note: {l}");
                }
            }
        }
        Command::Gaps { ty, norm_sq, json } => {
            let t = ty.dual_type()?;
            let x = rational::parse(&norm_sq)?;
            let r = spectral_gap(t, &x)?;
            if json {
                print_json(&r)?;
            } else {
                println!("{}", r.description);
                let b = &r.bounds;
                print!("|h_r/2|²={}, |h_sr/2|²={}", rational::to_string(&b.regular), rational::to_string(&b.subregular));
                match &b.subsubregular {
                    Some(s) => println!(", |h_ssr/2|²={}", rational::to_string(s)),
                    None => println!(),
                }
            }
        }
        Command::Tables { out } => write_tables(&out)?,
    }
    Ok(())
}

fn orbit_name(o: &Orbit) -> String {
    match o.partition() {
        Some(p) => p.to_string(),
        None => o.to_string(),
    }
}

fn classical_types() -> Vec<DualType> {
    let mut v = Vec::new();
    for r in 1..=7 {
        v.push(DualType::from_family("A", r).unwrap());
        v.push(DualType::from_family("B", r).unwrap());
        v.push(DualType::from_family("C", r).unwrap());
        if r >= 2 {
            v.push(DualType::from_family("D", r).unwrap());
        }
    }
    v
}

fn or_error<T: serde::Serialize>(r: Result<T, Error>) -> Value {
    match r {
        Ok(v) => serde_json::to_value(v).unwrap_or(Value::Null),
        Err(e) => json!({ "error": e.to_string() }),
    }
}

fn write_tables(out: &Path) -> Result<(), Failure> {
    fs::create_dir_all(out).map_err(malformed)?;
    let all: Vec<DualType> = classical_types()
        .into_iter()
        .chain(Exceptional::ALL.iter().map(|&e| DualType::Exceptional(e)))
        .collect();

    let mut good = Vec::new();
    for &t in &all {
        for which in [Which::Regular, Which::Subregular, Which::Subsubregular] {
            let g = good_set(t, which).map(|g| (*g).clone());
            good.push(json!({ "dual_type": t, "orbit": which, "good": or_error(g) }));
        }
    }
    let omin: Vec<Value> = all.iter().map(|&t| json!({ "dual_type": t, "o_min": or_error(o_min(t)) })).collect();
    let mut hvecs = Vec::new();
    for &t in all.iter().filter(|t| t.is_classical()) {
        for which in [Which::Regular, Which::Subregular, Which::Subsubregular] {
            let entry = special_orbit(t, which).and_then(|o| {
                let half = h_half(&o)?;
                Ok(json!({ "orbit": o, "h_half": half, "h_half_norm_sq": rational::to_string(&half.norm_sq()) }))
            });
            hvecs.push(json!({ "dual_type": t, "which": which, "value": or_error(entry) }));
        }
    }
    let gaps: Vec<Value> = all
        .iter()
        .filter(|t| t.is_classical())
        .map(|&t| json!({ "dual_type": t, "bounds": or_error(gap_bounds(t)) }))
        .collect();
    let mut certs = Vec::new();
    for (label, profile) in fixtures::reference_profiles() {
        certs.push(json!({ "label": label, "profile": profile, "report": or_error(certify(&profile)) }));
    }

    let files = [
        ("good_sets.json", Value::Array(good)),
        ("o_min.json", Value::Array(omin)),
        ("h_vectors.json", Value::Array(hvecs)),
        ("gaps.json", Value::Array(gaps)),
        ("certificates.json", Value::Array(certs)),
    ];
    for (name, v) in files {
        let path = out.join(name);
        let text = serde_json::to_string_pretty(&v).map_err(malformed)?;
        fs::write(&path, text + "\n").map_err(|e| malformed(format!("{}: {e}", path.display())))?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn main() -> ExitCode {
    // Exit quietly when the reader closes the pipe (`weylcert ... | head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Hypothesis(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Malformed(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
