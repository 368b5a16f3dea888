//! The plain-text spectral-data file format.
//!
//! ```text
//! # comment
//! point 1 2          # eigenvalue 1 with multiplicity 2
//! point 3/2 inf      # eigenvalue of infinite multiplicity
//! interval 0 0.5     # essential interval
//! epoint -1          # isolated essential point
//! ```
//!
//! Values are decimals or `p/q` fractions and are read exactly.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Result, SpectrumError};
use crate::scalar::Scalar;
use crate::set::Interval;
use crate::spectrum::{Multiplicity, PointSpectrum, SpectralData};

pub fn parse_spectral_data(text: &str) -> Result<SpectralData> {
    let mut points = Vec::new();
    let mut intervals = Vec::new();
    let mut essential_points = Vec::new();
    let mut seen = BTreeMap::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |message: String| SpectrumError::Parse {
            line: line_no,
            message,
        };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let scalar = |t: &str| t.parse::<Scalar>().map_err(|e| err(e.to_string()));
        match tokens.as_slice() {
            ["point", value, mult] => {
                let mult = match *mult {
                    "inf" | "Infinite" | "infinite" => Multiplicity::Infinite,
                    m => {
                        let m: u64 = m
                            .parse()
                            .map_err(|_| err(format!("invalid multiplicity `{m}`")))?;
                        Multiplicity::finite(m).map_err(|e| err(e.to_string()))?
                    }
                };
                let value = scalar(value)?;
                if let Some(first) = seen.insert(value.clone(), line_no) {
                    return Err(err(format!("eigenvalue {value} already given on line {first}")));
                }
                points.push((value, mult));
            }
            ["interval", lo, hi] => {
                let iv = Interval::new(scalar(lo)?, scalar(hi)?).map_err(|e| err(e.to_string()))?;
                intervals.push(iv);
            }
            ["epoint", value] => essential_points.push(scalar(value)?),
            _ => return Err(err(format!("unrecognized directive `{line}`"))),
        }
    }

    let points = PointSpectrum::new(points).expect("duplicates rejected per line");
    Ok(SpectralData::new(points, intervals, essential_points))
}

impl FromStr for SpectralData {
    type Err = SpectrumError;

    fn from_str(s: &str) -> Result<Self> {
        parse_spectral_data(s)
    }
}

/// Writes the file format back out; essential components appear in their
/// canonical (merged) form.
impl fmt::Display for SpectralData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, m) in self.points().entries() {
            writeln!(f, "point {v} {m}")?;
        }
        for iv in self.essential().intervals() {
            writeln!(f, "interval {} {}", iv.lo(), iv.hi())?;
        }
        for p in self.essential().points() {
            writeln!(f, "epoint {p}")?;
        }
        Ok(())
    }
}
