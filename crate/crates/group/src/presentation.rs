use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use braidcurve_core::{FreeWord, ParseError};
use serde::{Deserialize, Serialize};

/// Generators `x_1, …, x_g` and relators, each stored freely and
/// cyclically reduced. Trivial relators are dropped.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPresentation", into = "RawPresentation")]
pub struct GroupPresentation {
    generators: usize,
    relators: Vec<FreeWord>,
}

#[derive(Serialize, Deserialize)]
struct RawPresentation {
    generators: usize,
    relators: Vec<Vec<i32>>,
}

impl TryFrom<RawPresentation> for GroupPresentation {
    type Error = ParseError;
    fn try_from(raw: RawPresentation) -> Result<Self, ParseError> {
        let relators = raw
            .relators
            .into_iter()
            .map(|r| FreeWord::new(raw.generators, r).map_err(ParseError::from))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GroupPresentation::new(raw.generators, relators))
    }
}

impl From<GroupPresentation> for RawPresentation {
    fn from(p: GroupPresentation) -> Self {
        RawPresentation {
            generators: p.generators,
            relators: p.relators.iter().map(|r| r.letters().to_vec()).collect(),
        }
    }
}

/// Representative of a relator up to cyclic rotation and inversion: the
/// lexicographically least rotation of `r` or `r⁻¹`.
pub fn canonical_relator(r: &FreeWord) -> Vec<i32> {
    let r = r.cyclically_reduced();
    let forward = r.letters().to_vec();
    let backward = r.inverse().letters().to_vec();
    let mut best = forward.clone();
    for word in [forward, backward] {
        for k in 0..word.len() {
            let mut rotated = word[k..].to_vec();
            rotated.extend_from_slice(&word[..k]);
            if rotated < best {
                best = rotated;
            }
        }
    }
    best
}

impl GroupPresentation {
    /// Relators of a different rank are a caller bug.
    pub fn new(generators: usize, relators: impl IntoIterator<Item = FreeWord>) -> Self {
        let relators = relators
            .into_iter()
            .map(|r| {
                assert_eq!(r.rank(), generators, "relator rank must match the generator count");
                r.cyclically_reduced()
            })
            .filter(|r| !r.is_empty())
            .collect();
        GroupPresentation { generators, relators }
    }

    /// The free group of the given rank.
    pub fn free(generators: usize) -> Self {
        GroupPresentation { generators, relators: Vec::new() }
    }

    /// Builds from signed letter lists.
    pub fn from_letters(generators: usize, relators: &[&[i32]]) -> Result<Self, ParseError> {
        let words = relators
            .iter()
            .map(|r| FreeWord::new(generators, r.iter().copied()).map_err(ParseError::from))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(generators, words))
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }

    /// Sum of relator lengths.
    pub fn total_length(&self) -> usize {
        self.relators.iter().map(FreeWord::len).sum()
    }

    pub fn with_relators(&self, extra: impl IntoIterator<Item = FreeWord>) -> Self {
        Self::new(self.generators, self.relators.iter().cloned().chain(extra))
    }

    /// Drops relators that repeat another up to rotation and inversion.
    pub fn deduplicated(&self) -> Self {
        let mut seen = BTreeSet::new();
        let relators = self.relators.iter().filter(|r| seen.insert(canonical_relator(r))).cloned().collect();
        GroupPresentation { generators: self.generators, relators }
    }

    /// Relators as a set of canonical forms.
    pub fn canonical_relators(&self) -> BTreeSet<Vec<i32>> {
        self.relators.iter().map(canonical_relator).collect()
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gens: {}", self.generators)?;
        for r in &self.relators {
            write!(f, "; rel:")?;
            for &l in r.letters() {
                if l < 0 {
                    write!(f, " -x{}", -l)?;
                } else {
                    write!(f, " x{l}")?;
                }
            }
        }
        Ok(())
    }
}

/// One token of a relator: `x3`, `-x3`, `x3^-1`, `x3^4` or a bare signed
/// index, expanded into letters.
fn parse_token(tok: &str) -> Result<Vec<i32>, ParseError> {
    let bad = || ParseError(format!("bad generator {tok:?}"));
    let (sign, body) = match tok.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, tok.strip_prefix('+').unwrap_or(tok)),
    };
    let body = body.strip_prefix('x').unwrap_or(body);
    let (digits, power) = match body.split_once('^') {
        Some((d, p)) => (d, p.parse::<i32>().map_err(|_| bad())?),
        None => (body, 1),
    };
    let index: i32 = digits.parse().map_err(|_| bad())?;
    if index <= 0 {
        return Err(bad());
    }
    let letter = sign * power.signum() * index;
    Ok(vec![letter; power.unsigned_abs() as usize])
}

impl FromStr for GroupPresentation {
    type Err = ParseError;

    /// `gens: 4; rel: x1 x2 -x1; rel: …`. Letters may be `x3`, `-x3`,
    /// `x3^-1`, powers such as `x3^4`, or bare signed indices.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut generators = None;
        let mut raw: Vec<Vec<i32>> = Vec::new();
        for part in s.split([';', '\n']).map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) =
                part.split_once(':').ok_or_else(|| ParseError(format!("expected 'key: value' in {part:?}")))?;
            match key.trim() {
                "gens" => {
                    let g = value.trim().parse().map_err(|_| ParseError(format!("bad generator count {value:?}")))?;
                    generators = Some(g);
                }
                "rel" => {
                    let tokens = value.split_whitespace().map(parse_token).collect::<Result<Vec<_>, _>>()?;
                    raw.push(tokens.concat());
                }
                other => return Err(ParseError(format!("unknown key {other:?}"))),
            }
        }
        let generators = generators.ok_or_else(|| ParseError("missing 'gens:'".into()))?;
        let relators = raw
            .into_iter()
            .map(|r| FreeWord::new(generators, r).map_err(ParseError::from))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GroupPresentation::new(generators, relators))
    }
}
