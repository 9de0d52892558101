//! Output records and their deterministic JSONL/CSV encodings.
//!
//! Emission is byte-deterministic: keys in fixed order, exact integers
//! and fractions written as digits, distances as 12-place decimal
//! strings. Content never needs JSON escaping.

use nonfree::halfrel::Certificate;
use nonfree::rat::{Int, Rat};
use nonfree::{Error, Result};

/// Search target: an exact rational point or a narrow rational bracket
/// standing in for an irrational value.
#[derive(Clone, Debug)]
pub enum Target {
    Point(Rat),
    Bracket(Rat, Rat),
}

impl Target {
    /// `R` for an exact target, `LO,HI` for a bracket.
    pub fn parse(s: &str) -> Result<Target> {
        if let Some((lo, hi)) = s.split_once(',') {
            let lo: Rat = lo.parse()?;
            let hi: Rat = hi.parse()?;
            if hi < lo {
                return Err(Error::BadParams(format!("bracket out of order: {s}")));
            }
            Ok(Target::Bracket(lo, hi))
        } else {
            Ok(Target::Point(s.parse()?))
        }
    }

    /// Distance from q to the target (zero inside a bracket).
    pub fn distance(&self, q: &Rat) -> Rat {
        match self {
            Target::Point(p) => (q - p).abs(),
            Target::Bracket(lo, hi) => {
                if q < lo {
                    lo - q
                } else if q > hi {
                    q - hi
                } else {
                    Rat::zero()
                }
            }
        }
    }
}

impl std::fmt::Display for Target {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Target::Point(p) => write!(f, "{p}"),
            Target::Bracket(lo, hi) => write!(f, "[{lo}, {hi}]"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OutputFormat {
    Jsonl,
    Csv,
}

impl OutputFormat {
    pub fn parse(s: &str) -> Result<OutputFormat> {
        match s {
            "jsonl" => Ok(OutputFormat::Jsonl),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(Error::BadParams(format!("unknown format \"{other}\""))),
        }
    }
}

/// One verified find: emitted only when the certificate fully verified.
#[derive(Clone, Debug)]
pub struct FoundRecord {
    pub cert: Certificate,
    pub delta: Int,
    pub distance: Option<Rat>,
}

impl FoundRecord {
    pub fn new(cert: Certificate, delta: Int, target: Option<&Target>) -> FoundRecord {
        let distance = target.map(|t| t.distance(&cert.q));
        FoundRecord {
            cert,
            delta,
            distance,
        }
    }

    fn tuple_digits(&self, sep: &str) -> String {
        self.cert
            .tuple
            .entries()
            .iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Schema v1, keys in fixed order:
    /// v, tuple, q, delta, identity_verified, nontrivial_verified, distance.
    pub fn to_jsonl(&self) -> String {
        let mut line = format!(
            "{{\"v\":1,\"tuple\":[{}],\"q\":\"{}\",\"delta\":{},\"identity_verified\":{},\"nontrivial_verified\":{}",
            self.tuple_digits(","),
            self.cert.q,
            self.delta,
            self.cert.identity_verified,
            self.cert.nontrivial_verified,
        );
        if let Some(d) = &self.distance {
            line.push_str(&format!(",\"distance\":\"{}\"", d.to_decimal_string(12)));
        }
        line.push('}');
        line
    }

    pub const CSV_HEADER: &'static str =
        "v,tuple,q,delta,identity_verified,nontrivial_verified,distance";

    /// Lossy convenience view; the tuple is space-joined in one quoted field.
    pub fn to_csv(&self) -> String {
        format!(
            "1,\"{}\",{},{},{},{},{}",
            self.tuple_digits(" "),
            self.cert.q,
            self.delta,
            self.cert.identity_verified,
            self.cert.nontrivial_verified,
            self.distance
                .as_ref()
                .map(|d| d.to_decimal_string(12))
                .unwrap_or_default(),
        )
    }
}

/// Render a batch of records in the requested format.
pub fn render(records: &[FoundRecord], format: OutputFormat) -> String {
    let mut out = String::new();
    if format == OutputFormat::Csv {
        out.push_str(FoundRecord::CSV_HEADER);
        out.push('\n');
    }
    for r in records {
        out.push_str(&match format {
            OutputFormat::Jsonl => r.to_jsonl(),
            OutputFormat::Csv => r.to_csv(),
        });
        out.push('\n');
    }
    out
}
