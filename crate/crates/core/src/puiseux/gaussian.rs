use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::ParseError;

/// An exact complex number `re + im·i` with rational parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGaussian", into = "RawGaussian")]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

#[derive(Serialize, Deserialize)]
struct RawGaussian {
    re: String,
    #[serde(default = "zero_string")]
    im: String,
}

fn zero_string() -> String {
    "0".into()
}

impl TryFrom<RawGaussian> for GaussianRational {
    type Error = ParseError;
    fn try_from(raw: RawGaussian) -> Result<Self, ParseError> {
        Ok(GaussianRational { re: parse_rational(&raw.re)?, im: parse_rational(&raw.im)? })
    }
}

impl From<GaussianRational> for RawGaussian {
    fn from(g: GaussianRational) -> Self {
        RawGaussian { re: g.re.to_string(), im: g.im.to_string() }
    }
}

/// Parses `"3"`, `"-3/2"`, `"+1/4"`.
pub fn parse_rational(s: &str) -> Result<BigRational, ParseError> {
    let t = s.trim();
    let t = t.strip_prefix('+').unwrap_or(t);
    let bad = || ParseError::new(format!("bad rational {s:?}"));
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(x: i64) -> Self {
        GaussianRational { re: BigRational::from_integer(x.into()), im: BigRational::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    /// Nearest `f64` parts, for numerical consumers.
    pub fn to_f64_parts(&self) -> (f64, f64) {
        (self.re.to_f64().unwrap_or(f64::NAN), self.im.to_f64().unwrap_or(f64::NAN))
    }
}

impl FromStr for GaussianRational {
    type Err = ParseError;

    /// Accepts sums of rational and imaginary terms: `3/2 + 1/2 i`, `-i`,
    /// `2i`, `5`.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
        if compact.is_empty() {
            return Err(ParseError::new("empty complex number"));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, c) in compact.char_indices() {
            let after_slash = compact[..i].ends_with('/');
            if i > start && (c == '+' || c == '-') && !after_slash {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        let mut out = GaussianRational::zero();
        for term in terms {
            if let Some(coef) = term.strip_suffix('i') {
                let value = match coef {
                    "" | "+" => BigRational::one(),
                    "-" => -BigRational::one(),
                    c => parse_rational(c)?,
                };
                out.im += value;
            } else {
                out.re += parse_rational(term)?;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{} i", self.im),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "{} {} {} i", self.re, sign, self.im.abs())
            }
        }
    }
}
