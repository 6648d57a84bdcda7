//! Text formats.
//!
//! * braid words: `B4: 1 2 -1 3`
//! * free words: `F3: 1 -2 3`
//! * bands: `(c1 c2 … : k)`, `(k)`, `(k^3)`, or `(c1 … : k)^3`, with a
//!   signed core `k`
//! * band representations: `B4: (3^3) (3 -2 : 1) (1^3)`

use std::str::FromStr;

use crate::artin::FreeWord;
use crate::braid::{Band, BandRepresentation, BraidWord};
use crate::error::ParseError;

/// Splits `"<prefix><n>: rest"` into `(n, rest)`.
fn split_header(s: &str, prefix: char) -> Result<(usize, &str), ParseError> {
    let s = s.trim();
    let (head, rest) = s
        .split_once(':')
        .ok_or_else(|| ParseError::new(format!("expected a '{prefix}<n>:' header in {s:?}")))?;
    let digits = head
        .trim()
        .strip_prefix(prefix)
        .ok_or_else(|| ParseError::new(format!("header {head:?} should start with '{prefix}'")))?;
    let n = digits
        .trim()
        .parse::<usize>()
        .map_err(|_| ParseError::new(format!("bad size in header {head:?}")))?;
    Ok((n, rest))
}

fn parse_letters(s: &str) -> Result<Vec<i32>, ParseError> {
    s.split_whitespace()
        .map(|tok| tok.parse::<i32>().map_err(|_| ParseError::new(format!("bad letter {tok:?}"))))
        .collect()
}

impl FromStr for BraidWord {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let (n, rest) = split_header(s, 'B')?;
        Ok(BraidWord::new(n, parse_letters(rest)?)?)
    }
}

impl FromStr for FreeWord {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let (n, rest) = split_header(s, 'F')?;
        Ok(FreeWord::new(n, parse_letters(rest)?)?)
    }
}

fn parse_power(s: &str) -> Result<i32, ParseError> {
    match s.trim().parse::<i32>() {
        Ok(p) if p > 0 => Ok(p),
        _ => Err(ParseError::new(format!("bad exponent {s:?}"))),
    }
}

/// Parses the inside of `( … )`, returning conjugator letters, core and
/// signed power.
fn parse_band_body(body: &str) -> Result<(Vec<i32>, u32, i32), ParseError> {
    let (conj, core) = match body.split_once(':') {
        Some((c, k)) => (parse_letters(c)?, k),
        None => (Vec::new(), body),
    };
    let (core, power) = match core.split_once('^') {
        Some((k, p)) => (k, parse_power(p)?),
        None => (core, 1),
    };
    let core: i32 = core
        .trim()
        .parse()
        .map_err(|_| ParseError::new(format!("bad band core {:?}", core.trim())))?;
    if core == 0 {
        return Err(ParseError::new("band core 0"));
    }
    Ok((conj, core.unsigned_abs(), power * core.signum()))
}

impl Band {
    /// Parses one band in `B_strands`.
    pub fn parse(strands: usize, s: &str) -> Result<Band, ParseError> {
        let rep = parse_bands(strands, s)?;
        match rep.as_slice() {
            [b] => Ok(b.clone()),
            _ => Err(ParseError::new(format!("expected exactly one band in {s:?}"))),
        }
    }
}

fn parse_bands(strands: usize, s: &str) -> Result<Vec<Band>, ParseError> {
    let mut bands = Vec::new();
    let mut rest = s.trim_start();
    while !rest.is_empty() {
        let inner = rest
            .strip_prefix('(')
            .ok_or_else(|| ParseError::new(format!("expected '(' at {rest:?}")))?;
        let close = inner.find(')').ok_or_else(|| ParseError::new("unclosed band"))?;
        let (conj, core, mut power) = parse_band_body(&inner[..close])?;
        rest = inner[close + 1..].trim_start();
        if let Some(after) = rest.strip_prefix('^') {
            let end = after
                .find(|c: char| !c.is_ascii_digit() && !c.is_whitespace())
                .unwrap_or(after.len());
            power *= parse_power(&after[..end])?;
            rest = after[end..].trim_start();
        }
        bands.push(Band::new(BraidWord::new(strands, conj)?, core, power)?);
    }
    Ok(bands)
}

impl FromStr for BandRepresentation {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let (n, rest) = split_header(s, 'B')?;
        Ok(BandRepresentation::new(n, parse_bands(n, rest)?)?)
    }
}
