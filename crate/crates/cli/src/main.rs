//! Command-line front end: polynomial printing, verification and
//! certification, conic-driven sweeps, family generation, limit reports,
//! and root-accumulation experiments.
//!
//! Exit codes: 0 success/verified, 1 checked-false, 2 usage error,
//! 3 internal invariant violation.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use nonfree::conic::{
    classify_alpha, limit_a1, limit_a1_a2, limit_a1_a2_a3, septic_largest_root, Branch,
};
use nonfree::families::{geom_alternating, geom_block, half_pell_tuple, pell_tuple};
use nonfree::halfrel::{
    certify_half_relation, half_relation_poly, is_half_relation, one_step_certificate,
    one_step_search, Tuple,
};
use nonfree::rat::{Int, Rat};
use nonfree::{Error, Result};

use nonfree_cli::records::{render, OutputFormat, Target};
use nonfree_cli::sweep::{hunt, hunt_report, solve_slot, HuntJob, SlotRange};

#[derive(Parser)]
#[command(
    name = "nonfree",
    about = "Search for and certify non-free rational parameters of two-parabolic matrix groups",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args)]
struct TupleArgs {
    /// Tuple entries a1 a2 ... (all nonzero)
    #[arg(required = true, allow_negative_numbers = true)]
    tuple: Vec<String>,
}

impl TupleArgs {
    fn parse(&self) -> Result<Tuple> {
        let entries = self
            .tuple
            .iter()
            .map(|s| Int::from_str(s).map_err(|_| Error::ParseRat(s.clone())))
            .collect::<Result<Vec<_>>>()?;
        Tuple::new(entries)
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the half-relation polynomial of a tuple
    Phr(TupleArgs),
    /// Decide whether a tuple is a half-relation for q
    Check {
        #[command(flatten)]
        tuple: TupleArgs,
        /// Rational parameter, e.g. 26/27
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// Emit a verified identity-word certificate for a half-relation
    Certify {
        #[command(flatten)]
        tuple: TupleArgs,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// One-step relation numbers: certificate from r s t, or search by q
    Onestep {
        /// r s t (omit when searching with --q)
        #[arg(allow_negative_numbers = true, num_args = 0..=3)]
        rst: Vec<i64>,
        /// Search for the smallest (r,s,t) with (r+t)/(rst) = q
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
        /// Search bound for |r|, |s|, |t|
        #[arg(long, default_value_t = 20)]
        bound: i64,
    },
    /// Sweep one tuple slot along the discriminant conic and emit every
    /// verified record
    Solve5 {
        /// The four fixed entries, in tuple order with the slot skipped
        #[arg(required = true, allow_negative_numbers = true, num_args = 4)]
        fixed: Vec<i64>,
        /// Which tuple slot varies (1..=5)
        #[arg(long, default_value_t = 1)]
        slot: usize,
        /// Exhaustive scan bound on |x|
        #[arg(long, default_value_t = 100)]
        xbound: u64,
        /// Automorphism steps beyond the scan
        #[arg(long, default_value_t = 0)]
        orbit: u32,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// jsonl or csv
        #[arg(long, default_value = "jsonl")]
        format: String,
        /// Rank distances against this target (rational or LO,HI bracket)
        #[arg(long, allow_hyphen_values = true)]
        target: Option<String>,
        /// Write records to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate certified families
    Families {
        #[command(subcommand)]
        family: FamilyCmd,
    },
    /// Iterated-limit values for fixed (a3, a4, a5)
    Limits {
        #[arg(allow_negative_numbers = true)]
        a3: i64,
        #[arg(allow_negative_numbers = true)]
        a4: i64,
        #[arg(allow_negative_numbers = true)]
        a5: i64,
        /// Also bracket the single limit at this a2
        #[arg(long, allow_hyphen_values = true)]
        a2: Option<i64>,
    },
    /// Isolate the largest real root of the degree-7 family member
    Septic {
        #[arg(long = "N")]
        n: u64,
        /// Interval width, e.g. 1/1000000
        #[arg(long, default_value = "1/1000000")]
        precision: String,
    },
    /// Sweep fixed-slot ranges and rank verified records by distance to
    /// a target
    Hunt {
        /// Rational target or LO,HI bracket
        #[arg(long, allow_hyphen_values = true)]
        target: String,
        /// Four LO..HI ranges for the fixed slots, in tuple order
        #[arg(long, required = true, num_args = 1, allow_hyphen_values = true, action = clap::ArgAction::Append)]
        range: Vec<String>,
        #[arg(long, default_value_t = 1)]
        slot: usize,
        #[arg(long, default_value_t = 50)]
        xbound: u64,
        #[arg(long, default_value_t = 0)]
        orbit: u32,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// report (nearest table), jsonl, or csv
        #[arg(long, default_value = "report")]
        format: String,
        /// Rows in the report
        #[arg(long, default_value_t = 10)]
        top: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum FamilyCmd {
    /// Block geometric family (1, k^(t-s)(k^s+k), k^(s-1))
    GeomBlock {
        #[arg(long)]
        k: i64,
        #[arg(long)]
        s: i64,
        #[arg(long)]
        t: i64,
    },
    /// Alternating geometric family (k^(s-2), (k^(s-2)+k+1)k^(2t+2), k+1)
    GeomAlt {
        #[arg(long)]
        k: i64,
        #[arg(long)]
        s: i64,
        #[arg(long)]
        t: i64,
    },
    /// Pell-ratio rows q_n = P_{n+1}/P_n
    Pell {
        /// Index range, e.g. 2..5
        #[arg(long)]
        n: String,
    },
    /// Half-companion rows a_n = H_{n+1}/H_n
    Hpell {
        #[arg(long)]
        n: String,
    },
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::NotAHalfRelation => 1,
        Error::Divisibility | Error::CertificateFailure(_) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn parse_index_range(s: &str) -> Result<(u32, u32)> {
    let bad = || Error::BadParams(format!("expected LO..HI, got \"{s}\""));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let lo: u32 = lo.parse().map_err(|_| bad())?;
    let hi: u32 = hi.parse().map_err(|_| bad())?;
    if hi < lo {
        return Err(bad());
    }
    Ok((lo, hi))
}

/// Rational from the command line: `num/den`, an integer, a base-10
/// decimal, or a fractional base-k expansion written `0.d1d2...@k`.
fn parse_q(s: &str) -> Result<Rat> {
    if let Some((digits, base)) = s.split_once('@') {
        let base: u32 = base
            .parse()
            .map_err(|_| Error::BadParams(format!("bad base in \"{s}\"")))?;
        return nonfree::families::base_k_parse(digits, base);
    }
    s.parse()
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::BadParams(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            std::io::stdout().flush().ok();
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Cmd::Phr(args) => {
            let tuple = args.parse()?;
            let p = half_relation_poly(&tuple)?;
            println!("{p}");
            let coeffs: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
            println!("coeffs (ascending): [{}]", coeffs.join(", "));
            Ok(0)
        }
        Cmd::Check { tuple, q } => {
            let tuple = tuple.parse()?;
            let q = parse_q(&q)?;
            if is_half_relation(&tuple, &q)? {
                println!("true");
                Ok(0)
            } else {
                println!("false");
                Ok(1)
            }
        }
        Cmd::Certify { tuple, q } => {
            let tuple = tuple.parse()?;
            let q = parse_q(&q)?;
            let cert = certify_half_relation(&tuple, &q)?;
            println!("{}", cert.to_json());
            Ok(0)
        }
        Cmd::Onestep { rst, q, bound } => match (rst.as_slice(), q) {
            (&[r, s, t], None) => {
                let cert = one_step_certificate(r, s, t)?;
                println!("{}", cert.to_json());
                Ok(0)
            }
            (&[], Some(q)) => {
                let q = parse_q(&q)?;
                if q.is_zero() {
                    return Err(Error::ZeroQ);
                }
                if bound < 1 {
                    return Err(Error::BadParams("bound must be at least 1".to_string()));
                }
                match one_step_search(&q, bound) {
                    Some((r, s, t)) => {
                        println!("(r,s,t) = ({r},{s},{t})");
                        let cert = one_step_certificate(r, s, t)?;
                        println!("{}", cert.to_json());
                        Ok(0)
                    }
                    None => {
                        println!("none within bound {bound}");
                        Ok(1)
                    }
                }
            }
            _ => Err(Error::BadParams(
                "give either three integers r s t, or --q".to_string(),
            )),
        },
        Cmd::Solve5 {
            fixed,
            slot,
            xbound,
            orbit,
            threads,
            format,
            target,
            out,
        } => {
            let format = OutputFormat::parse(&format)?;
            let target = target.as_deref().map(Target::parse).transpose()?;
            let fixed: [Int; 4] = [
                Int::from(fixed[0]),
                Int::from(fixed[1]),
                Int::from(fixed[2]),
                Int::from(fixed[3]),
            ];
            let (conic, records) =
                solve_slot(fixed, slot, xbound, orbit, threads, target.as_ref())?;
            eprintln!(
                "conic: alpha = {}, beta = {}, gamma = {} ({}); {} record(s)",
                conic.alpha,
                conic.beta,
                conic.gamma,
                classify_alpha(&conic).as_str(),
                records.len()
            );
            emit(&render(&records, format), out.as_ref())?;
            Ok(0)
        }
        Cmd::Families { family } => {
            run_family(family)?;
            Ok(0)
        }
        Cmd::Limits { a3, a4, a5, a2 } => {
            let (i3, i4, i5) = (Int::from(a3), Int::from(a4), Int::from(a5));
            let minus = limit_a1_a2(&i3, &i4, &i5, Branch::Minus)?;
            let plus = limit_a1_a2(&i3, &i4, &i5, Branch::Plus)?;
            let triple = limit_a1_a2_a3(&i4, &i5)?;
            println!("-(a3+a5)/(a3 a4 a5) = {minus}");
            println!("+ branch = {plus}");
            println!("-1/(a4 a5) = {triple}");
            if let Some(a2) = a2 {
                if a2 == 0 {
                    return Err(Error::ZeroDenominator);
                }
                let i2 = Int::from(a2);
                for (branch, name) in [(Branch::Minus, "-"), (Branch::Plus, "+")] {
                    match limit_a1(&i2, &i3, &i4, &i5, branch) {
                        Ok((lo, hi)) => println!(
                            "a1 limit at a2 = {a2} ({name} branch) in [{lo}, {hi}] ~ {}",
                            (&(&lo + &hi) / &Rat::from(2)).to_decimal_string(12)
                        ),
                        Err(Error::NegativeAlpha) => {
                            println!("a1 limit at a2 = {a2} ({name} branch): not real")
                        }
                        Err(e) => return Err(e),
                    }
                }
            }
            Ok(0)
        }
        Cmd::Septic { n, precision } => {
            let precision: Rat = precision.parse()?;
            if precision.signum() <= 0 {
                return Err(Error::BadParams("precision must be positive".to_string()));
            }
            if n == 0 {
                return Err(Error::BadParams("N must be at least 1".to_string()));
            }
            let (lo, hi) = septic_largest_root(n, &precision)?;
            let mid = &(&lo + &hi) / &Rat::from(2);
            println!("largest real root in [{lo}, {hi}]");
            println!("~ {}", mid.to_decimal_string(12));
            Ok(0)
        }
        Cmd::Hunt {
            target,
            range,
            slot,
            xbound,
            orbit,
            threads,
            format,
            top,
            out,
        } => {
            if range.len() != 4 {
                return Err(Error::BadParams(format!(
                    "hunt needs exactly 4 --range options, got {}",
                    range.len()
                )));
            }
            let ranges: Vec<SlotRange> = range
                .iter()
                .map(|s| SlotRange::parse(s))
                .collect::<Result<_>>()?;
            let job = HuntJob {
                ranges: ranges.try_into().expect("length checked"),
                slot,
                x_abs_bound: xbound,
                orbit_steps: orbit,
                threads,
                target: Target::parse(&target)?,
            };
            let records = hunt(&job)?;
            let text = match format.as_str() {
                "report" => hunt_report(&job, &records, top),
                other => render(&records, OutputFormat::parse(other)?),
            };
            emit(&text, out.as_ref())?;
            Ok(0)
        }
    }
}

fn print_family_row(label: &str, q: &Rat, tuple: &Tuple) -> Result<()> {
    let verified = certify_half_relation(tuple, q)?.is_fully_verified();
    println!("{label}\tq = {q}\ttuple = {tuple}\tverified = {verified}");
    Ok(())
}

fn run_family(cmd: FamilyCmd) -> Result<()> {
    match cmd {
        FamilyCmd::GeomBlock { k, s, t } => {
            let (q, tuple) = geom_block(k, s, t)?;
            print_family_row(&format!("block(k={k},s={s},t={t})"), &q, &tuple)
        }
        FamilyCmd::GeomAlt { k, s, t } => {
            let (q, tuple) = geom_alternating(k, s, t)?;
            print_family_row(&format!("alt(k={k},s={s},t={t})"), &q, &tuple)
        }
        FamilyCmd::Pell { n } => {
            let (lo, hi) = parse_index_range(&n)?;
            println!("n\tq_n\tx_n\tverified");
            for n in lo..=hi {
                let (q, tuple) = pell_tuple(n)?;
                let verified = certify_half_relation(&tuple, &q)?.is_fully_verified();
                println!("{n}\t{q}\t{}\t{verified}", tuple.entries()[1]);
            }
            Ok(())
        }
        FamilyCmd::Hpell { n } => {
            let (lo, hi) = parse_index_range(&n)?;
            println!("n\ta_n\ty_n\tverified");
            for n in lo..=hi {
                let (q, tuple) = half_pell_tuple(n)?;
                let verified = certify_half_relation(&tuple, &q)?.is_fully_verified();
                println!("{n}\t{q}\t{}\t{verified}", tuple.entries()[1]);
            }
            Ok(())
        }
    }
}
