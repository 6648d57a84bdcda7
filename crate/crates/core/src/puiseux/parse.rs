//! `m=4; w = t^6 + t^7 + (3/2 + 1/2 i) t^9`

use std::fmt;
use std::str::FromStr;

use super::{BranchError, BranchParam, GaussianRational};
use crate::error::ParseError;

/// Splits at `+`/`-` outside parentheses, keeping the sign with its term.
fn split_terms(expr: &str) -> Vec<String> {
    let mut terms = Vec::new();
    let mut current = String::new();
    let mut depth = 0i32;
    for c in expr.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 && !current.trim().is_empty() => {
                terms.push(std::mem::take(&mut current));
            }
            _ => {}
        }
        current.push(c);
    }
    if !current.trim().is_empty() {
        terms.push(current);
    }
    terms
}

/// One term `±[coefficient][*]t[^k]`.
fn parse_term(term: &str) -> Result<(u32, GaussianRational), ParseError> {
    let compact: String = term.chars().filter(|c| !c.is_whitespace()).collect();
    let (negative, body) = match compact.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, compact.strip_prefix('+').unwrap_or(&compact)),
    };
    let t_at = body
        .rfind('t')
        .ok_or_else(|| ParseError::new(format!("term {term:?} has no power of t")))?;
    let (coef, power) = body.split_at(t_at);
    let exponent = match power[1..].strip_prefix('^') {
        Some(k) => k.parse::<u32>().map_err(|_| ParseError::new(format!("bad exponent in {term:?}")))?,
        None if power.len() == 1 => 1,
        None => return Err(ParseError::new(format!("unexpected text after t in {term:?}"))),
    };
    let coef = coef.strip_suffix('*').unwrap_or(coef);
    let mut value = if coef.is_empty() {
        GaussianRational::one()
    } else {
        let inner = coef.strip_prefix('(').and_then(|c| c.strip_suffix(')')).unwrap_or(coef);
        inner.parse::<GaussianRational>()?
    };
    if negative {
        value.re = -value.re;
        value.im = -value.im;
    }
    Ok((exponent, value))
}

impl FromStr for BranchParam {
    type Err = BranchError;

    fn from_str(s: &str) -> Result<Self, BranchError> {
        let mut m = None;
        let mut w = None;
        for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| ParseError::new(format!("expected 'key = value' in {part:?}")))?;
            match key.trim() {
                "m" => {
                    let v = value.trim().parse::<u32>().map_err(|_| ParseError::new(format!("bad m {value:?}")))?;
                    m = Some(v);
                }
                "w" => w = Some(value.to_string()),
                "z" => {
                    let z = value.trim().replace(' ', "");
                    let v = z
                        .strip_prefix("t^")
                        .and_then(|k| k.parse::<u32>().ok())
                        .ok_or_else(|| ParseError::new(format!("z must be t^m, got {value:?}")))?;
                    m = Some(v);
                }
                other => return Err(ParseError::new(format!("unknown key {other:?}")).into()),
            }
        }
        let m = m.ok_or_else(|| ParseError::new("missing m"))?;
        let w = w.ok_or_else(|| ParseError::new("missing w"))?;
        let mut terms = split_terms(&w).iter().map(|t| parse_term(t)).collect::<Result<Vec<_>, _>>()?;
        terms.sort_by_key(|&(e, _)| e);
        let ((n, lead), rest) = terms.split_first().ok_or_else(|| ParseError::new("w has no terms"))?;
        if !lead.is_one() {
            return Err(ParseError::new(format!("leading coefficient of t^{n} must be 1")).into());
        }
        if rest.first().is_some_and(|&(e, _)| e == *n) {
            return Err(ParseError::new(format!("repeated leading exponent {n}")).into());
        }
        BranchParam::new(m, *n, rest.iter().cloned())
    }
}

impl fmt::Display for BranchParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={}; w = t^{}", self.m, self.n)?;
        for (e, c) in &self.coeffs {
            if c.is_one() {
                write!(f, " + t^{e}")?;
            } else {
                write!(f, " + ({c}) t^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_branch_text() {
        let b: BranchParam = "m=4; w = t^6 + t^7 + (3/2 + 1/2 i) t^9".parse().unwrap();
        assert_eq!((b.m(), b.n()), (4, 6));
        assert_eq!(b.coeffs().len(), 2);
        assert_eq!(b.coeffs()[&9], "3/2 + 1/2 i".parse().unwrap());
        assert_eq!(b.to_string().parse::<BranchParam>().unwrap(), b);
    }

    #[test]
    fn accepts_variants() {
        let b: BranchParam = "z = t^2; w = t^3 - 2*t^5".parse().unwrap();
        assert_eq!(b.coeffs()[&5], GaussianRational::from_integer(-2));
        let c: BranchParam = "m=2;w=t^3+(-i)t^4".parse().unwrap();
        assert_eq!(c.coeffs()[&4].to_string(), "-1 i");
    }

    #[test]
    fn rejects_bad_input() {
        assert!("m=4".parse::<BranchParam>().is_err());
        assert!("m=2; w = 2 t^3".parse::<BranchParam>().is_err());
        assert!("m=2; w = t^3 + 5".parse::<BranchParam>().is_err());
        assert!("m=2; w = t^4".parse::<BranchParam>().is_err());
        assert!("m=2; q = 3".parse::<BranchParam>().is_err());
    }
}
