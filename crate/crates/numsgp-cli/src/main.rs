//! `numsgp`: exact computations with numerical semigroups.
//!
//! Exit codes: 0 on success, 1 on a domain error (with a one-line
//! diagnostic on stderr naming the violated precondition), 2 on a usage
//! error.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use numsgp::{
    arithmetic_extensions, enumerate_oversemigroups, has_only_arithmetic_extensions,
    is_arithmetic_extension, pm_frobenius, pm_genus, pm_quotient, pm_semigroup, t_semigroup,
    AperySet, Error, KunzVec, NumSgp, PMIneq, TSpec,
};

#[derive(Parser)]
#[command(
    name = "numsgp",
    version,
    about = "Exact arithmetic with numerical semigroups",
    long_about = "Exact arithmetic with numerical semigroups: invariants, Apéry sets, \
quotients, Kunz coordinates, arithmetic extensions, and proportionally modular semigroups. \
All computations are exact; results are plain text or a single JSON document."
)]
struct Cli {
    /// Emit a single JSON document instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

/// One semigroup, given either by generators or by its gap set.
#[derive(Args)]
#[group(id = "sgp", required = true, multiple = false)]
struct SgpArgs {
    /// Comma-separated generators, e.g. 4,5,7
    #[arg(long, value_delimiter = ',', value_name = "N1,N2,...")]
    gens: Option<Vec<u64>>,
    /// Comma-separated gaps, e.g. 1,2,3,6
    #[arg(long, value_delimiter = ',', value_name = "N1,N2,...")]
    gaps: Option<Vec<u64>>,
}

/// Second semigroup operand for binary subcommands.
#[derive(Args)]
#[group(id = "other", required = true, multiple = false)]
struct OtherArgs {
    /// Comma-separated generators of the second semigroup
    #[arg(long, value_delimiter = ',', value_name = "N1,N2,...")]
    other_gens: Option<Vec<u64>>,
    /// Comma-separated gaps of the second semigroup
    #[arg(long, value_delimiter = ',', value_name = "N1,N2,...")]
    other_gaps: Option<Vec<u64>>,
}

impl SgpArgs {
    fn build(&self) -> Result<NumSgp, Error> {
        match (&self.gens, &self.gaps) {
            (Some(g), None) => NumSgp::from_generators(g),
            (None, Some(g)) => NumSgp::from_gaps(g),
            _ => unreachable!("clap enforces exactly one specifier"),
        }
    }
}

impl OtherArgs {
    fn build(&self) -> Result<NumSgp, Error> {
        match (&self.other_gens, &self.other_gaps) {
            (Some(g), None) => NumSgp::from_generators(g),
            (None, Some(g)) => NumSgp::from_gaps(g),
            _ => unreachable!("clap enforces exactly one specifier"),
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Multiplicity, Frobenius number, genus, gaps, fundamental gaps and
    /// minimal generators of a semigroup
    Info {
        #[command(flatten)]
        sgp: SgpArgs,
    },
    /// Apéry set with respect to a nonzero member n
    Apery {
        #[command(flatten)]
        sgp: SgpArgs,
        /// The modulus; must be a nonzero member
        #[arg(long)]
        n: u64,
    },
    /// The quotient S/d = {x : d·x ∈ S}
    Quotient {
        #[command(flatten)]
        sgp: SgpArgs,
        /// The positive divisor
        #[arg(long)]
        d: u64,
    },
    /// Kunz-coordinates vector with respect to a nonzero member n
    Kunz {
        #[command(flatten)]
        sgp: SgpArgs,
        /// The modulus; must be a nonzero member
        #[arg(long)]
        n: u64,
    },
    /// Intersection of two semigroups
    Intersect {
        #[command(flatten)]
        sgp: SgpArgs,
        #[command(flatten)]
        other: OtherArgs,
    },
    /// The complete set of arithmetic extensions
    Extensions {
        #[command(flatten)]
        sgp: SgpArgs,
        /// Refuse semigroups with more gaps than this
        #[arg(long, default_value_t = 20)]
        max_genus: u64,
    },
    /// Every semigroup containing the given one
    Oversemigroups {
        #[command(flatten)]
        sgp: SgpArgs,
        /// Refuse semigroups with more gaps than this
        #[arg(long, default_value_t = 20)]
        max_genus: u64,
    },
    /// Decide whether the second semigroup is an arithmetic extension of
    /// the first
    IsArithmetic {
        #[command(flatten)]
        sgp: SgpArgs,
        #[command(flatten)]
        other: OtherArgs,
    },
    /// Decide whether every extension of the semigroup is arithmetic
    #[command(name = "classify-thm9")]
    ClassifyThm9 {
        #[command(flatten)]
        sgp: SgpArgs,
    },
    /// The quotient <a,a+1>/b with its closed-form Frobenius number and genus
    Pm {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
    },
    /// Solution set of the proportionally modular inequality a·x mod b ≤ c·x
    PmIneq {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        c: u64,
    },
    /// Intersection of the quotients <a,a+1>/d over a divisor list
    TSemigroup {
        #[arg(long)]
        a: u64,
        /// Comma-separated positive divisors
        #[arg(long, required = true, value_delimiter = ',', value_name = "D1,D2,...")]
        divisors: Vec<u64>,
    },
}

#[derive(Serialize)]
struct SgpJson {
    gens: Vec<u64>,
    gaps: Vec<u64>,
    frobenius: i64,
    genus: u64,
    multiplicity: u64,
}

impl From<&NumSgp> for SgpJson {
    fn from(s: &NumSgp) -> Self {
        SgpJson {
            gens: s.min_generators().to_vec(),
            gaps: s.gaps(),
            frobenius: s.frobenius(),
            genus: s.genus(),
            multiplicity: s.multiplicity(),
        }
    }
}

#[derive(Serialize)]
struct InfoJson {
    #[serde(flatten)]
    sgp: SgpJson,
    fundamental_gaps: Vec<u64>,
}

#[derive(Serialize)]
struct AperyJson {
    n: u64,
    omegas: Vec<u64>,
}

#[derive(Serialize)]
struct KunzJson {
    n: u64,
    kappas: Vec<u64>,
}

#[derive(Serialize)]
struct PmJson {
    a: u64,
    b: u64,
    frobenius: i64,
    genus: u64,
    semigroup: SgpJson,
}

#[derive(Serialize)]
struct PmIneqJson {
    a: u64,
    b: u64,
    c: u64,
    semigroup: SgpJson,
}

#[derive(Serialize)]
struct TJson {
    a: u64,
    divisors: Vec<u64>,
    frobenius: i64,
    genus: u64,
    semigroup: SgpJson,
}

fn list(values: &[u64]) -> String {
    let inner: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("[{}]", inner.join(", "))
}

fn print_sgp_text(s: &NumSgp) {
    println!("msg  = {s}");
    println!("m    = {}", s.multiplicity());
    println!("F    = {}", s.frobenius());
    println!("g    = {}", s.genus());
    println!("gaps = {}", list(&s.gaps()));
}

fn print_family_text(members: &[NumSgp]) {
    println!("members = {}", members.len());
    for m in members {
        println!("  {m}  (F = {}, g = {})", m.frobenius(), m.genus());
    }
}

fn emit_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable output")
    );
}

fn family_json(members: &[NumSgp]) -> Vec<SgpJson> {
    members.iter().map(SgpJson::from).collect()
}

fn print_apery(ap: &AperySet, json: bool) {
    if json {
        emit_json(&AperyJson {
            n: ap.n(),
            omegas: ap.omegas().to_vec(),
        });
    } else {
        println!("n      = {}", ap.n());
        println!("omegas = {}", list(ap.omegas()));
    }
}

fn print_kunz(v: &KunzVec, json: bool) {
    if json {
        emit_json(&KunzJson {
            n: v.n(),
            kappas: v.kappas().to_vec(),
        });
    } else {
        println!("n      = {}", v.n());
        println!("kappas = {}", list(v.kappas()));
    }
}

fn run(cli: &Cli) -> Result<(), Error> {
    let json = cli.json;
    match &cli.cmd {
        Cmd::Info { sgp } => {
            let s = sgp.build()?;
            if json {
                emit_json(&InfoJson {
                    sgp: SgpJson::from(&s),
                    fundamental_gaps: s.fundamental_gaps(),
                });
            } else {
                print_sgp_text(&s);
                println!("fg   = {}", list(&s.fundamental_gaps()));
            }
        }
        Cmd::Apery { sgp, n } => {
            let s = sgp.build()?;
            print_apery(&s.apery(*n)?, json);
        }
        Cmd::Quotient { sgp, d } => {
            let s = sgp.build()?.quotient(*d)?;
            if json {
                emit_json(&SgpJson::from(&s));
            } else {
                print_sgp_text(&s);
            }
        }
        Cmd::Kunz { sgp, n } => {
            let s = sgp.build()?;
            print_kunz(&s.kunz(*n)?, json);
        }
        Cmd::Intersect { sgp, other } => {
            let s = sgp.build()?.intersect(&other.build()?);
            if json {
                emit_json(&SgpJson::from(&s));
            } else {
                print_sgp_text(&s);
            }
        }
        Cmd::Extensions { sgp, max_genus } => {
            let fam = arithmetic_extensions(&sgp.build()?, *max_genus)?;
            if json {
                emit_json(&family_json(fam.members()));
            } else {
                print_family_text(fam.members());
            }
        }
        Cmd::Oversemigroups { sgp, max_genus } => {
            let fam = enumerate_oversemigroups(&sgp.build()?, *max_genus)?;
            if json {
                emit_json(&family_json(fam.members()));
            } else {
                print_family_text(fam.members());
            }
        }
        Cmd::IsArithmetic { sgp, other } => {
            let answer = is_arithmetic_extension(&sgp.build()?, &other.build()?)?;
            if json {
                emit_json(&serde_json::json!({ "is_arithmetic": answer }));
            } else {
                println!("{answer}");
            }
        }
        Cmd::ClassifyThm9 { sgp } => {
            let answer = has_only_arithmetic_extensions(&sgp.build()?);
            if json {
                emit_json(&serde_json::json!({ "all_extensions_arithmetic": answer }));
            } else {
                println!("{answer}");
            }
        }
        Cmd::Pm { a, b } => {
            let s = pm_quotient(*a, *b)?;
            let frobenius = pm_frobenius(*a, *b)?;
            let genus = pm_genus(*a, *b)?;
            if json {
                emit_json(&PmJson {
                    a: *a,
                    b: *b,
                    frobenius,
                    genus,
                    semigroup: SgpJson::from(&s),
                });
            } else {
                print_sgp_text(&s);
            }
        }
        Cmd::PmIneq { a, b, c } => {
            let ineq = PMIneq::new(*a, *b, *c)?;
            let s = pm_semigroup(&ineq)?;
            if json {
                emit_json(&PmIneqJson {
                    a: *a,
                    b: *b,
                    c: *c,
                    semigroup: SgpJson::from(&s),
                });
            } else {
                print_sgp_text(&s);
            }
        }
        Cmd::TSemigroup { a, divisors } => {
            let spec = TSpec::new(*a, divisors.clone())?;
            let t = t_semigroup(&spec)?;
            if json {
                emit_json(&TJson {
                    a: *a,
                    divisors: divisors.clone(),
                    frobenius: t.frobenius,
                    genus: t.genus,
                    semigroup: SgpJson::from(&t.semigroup),
                });
            } else {
                print_sgp_text(&t.semigroup);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    // die quietly when the reader of a pipe goes away, like other unix
    // filters do
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
