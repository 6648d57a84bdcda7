use std::fmt;

use serde::{Deserialize, Serialize};

use super::BraidWord;
use crate::error::BraidError;

/// `conjugator · σ_core^power · conjugator⁻¹`.
///
/// `power = ±1` is a positive/negative band. Larger powers stand for the
/// local braids of singular points: squares for nodes, cubes for cusps.
/// A power is kept as one factor because the relations it contributes to a
/// knot group differ from those of its separate bands.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Band {
    conjugator: BraidWord,
    core: u32,
    power: i32,
}

impl Band {
    pub fn new(conjugator: BraidWord, core: u32, power: i32) -> Result<Self, BraidError> {
        let n = conjugator.strands();
        if core == 0 || core as usize >= n {
            return Err(BraidError::IndexOutOfRange { index: i64::from(core), strands: n });
        }
        if power == 0 {
            return Err(BraidError::ZeroPower);
        }
        Ok(Band { conjugator, core, power })
    }

    /// σ_core^sign with trivial conjugator.
    pub fn standard(strands: usize, core: u32, power: i32) -> Result<Self, BraidError> {
        Self::new(BraidWord::new(strands.max(1), [])?, core, power)
    }

    pub fn strands(&self) -> usize {
        self.conjugator.strands()
    }

    pub fn conjugator(&self) -> &BraidWord {
        &self.conjugator
    }

    pub fn core(&self) -> u32 {
        self.core
    }

    pub fn power(&self) -> i32 {
        self.power
    }

    pub fn sign(&self) -> i32 {
        self.power.signum()
    }

    pub fn is_positive(&self) -> bool {
        self.power > 0
    }

    /// Same conjugator and core, opposite power.
    pub fn flipped(&self) -> Band {
        Band { conjugator: self.conjugator.clone(), core: self.core, power: -self.power }
    }

    /// The same band raised to `k` (powers multiply).
    pub fn powered(&self, k: i32) -> Result<Band, BraidError> {
        Band::new(self.conjugator.clone(), self.core, self.power * k)
    }

    pub fn to_word(&self) -> BraidWord {
        let n = self.strands();
        let core = BraidWord::generator(n, self.core as i32).expect("core validated").pow(self.power);
        core.conjugated_by(&self.conjugator).expect("same strand count")
    }
}

impl fmt::Display for Band {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        if !self.conjugator.is_empty() {
            let conj: Vec<String> = self.conjugator.letters().iter().map(i32::to_string).collect();
            write!(f, "{} : ", conj.join(" "))?;
        }
        let signed_core = self.core as i64 * i64::from(self.power.signum());
        write!(f, "{signed_core}")?;
        if self.power.abs() != 1 {
            write!(f, "^{}", self.power.abs())?;
        }
        write!(f, ")")
    }
}

/// An ordered factorization `β = b(1) ⋯ b(k)` into bands.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawBandRep", into = "RawBandRep")]
pub struct BandRepresentation {
    strands: usize,
    bands: Vec<Band>,
}

#[derive(Serialize, Deserialize)]
struct RawBand {
    #[serde(default)]
    conjugator: Vec<i32>,
    core: u32,
    #[serde(default = "one")]
    power: i32,
}

fn one() -> i32 {
    1
}

#[derive(Serialize, Deserialize)]
struct RawBandRep {
    strands: usize,
    bands: Vec<RawBand>,
}

impl TryFrom<RawBandRep> for BandRepresentation {
    type Error = BraidError;
    fn try_from(raw: RawBandRep) -> Result<Self, BraidError> {
        let bands = raw
            .bands
            .into_iter()
            .map(|b| Band::new(BraidWord::new(raw.strands, b.conjugator)?, b.core, b.power))
            .collect::<Result<Vec<_>, _>>()?;
        BandRepresentation::new(raw.strands, bands)
    }
}

impl From<BandRepresentation> for RawBandRep {
    fn from(rep: BandRepresentation) -> Self {
        RawBandRep {
            strands: rep.strands,
            bands: rep
                .bands
                .into_iter()
                .map(|b| RawBand { conjugator: b.conjugator.letters().to_vec(), core: b.core, power: b.power })
                .collect(),
        }
    }
}

impl BandRepresentation {
    pub fn new(strands: usize, bands: Vec<Band>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        if let Some(b) = bands.iter().find(|b| b.strands() != strands) {
            return Err(BraidError::StrandMismatch { left: strands, right: b.strands() });
        }
        Ok(BandRepresentation { strands, bands })
    }

    /// Every letter of a braid word as its own band.
    pub fn from_word(word: &BraidWord) -> Self {
        let n = word.strands();
        let bands = word
            .letters()
            .iter()
            .map(|&l| Band::standard(n, l.unsigned_abs(), l.signum()).expect("letter in range"))
            .collect();
        BandRepresentation { strands: n, bands }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn bands(&self) -> &[Band] {
        &self.bands
    }

    /// Number of bands counted with multiplicity (`|power|` each).
    pub fn len(&self) -> usize {
        self.bands.iter().map(|b| b.power.unsigned_abs() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bands.is_empty()
    }

    pub fn is_quasipositive(&self) -> bool {
        self.bands.iter().all(Band::is_positive)
    }

    /// Positive bands minus negative bands, with multiplicity.
    pub fn exponent_sum(&self) -> i64 {
        self.bands.iter().map(|b| i64::from(b.power)).sum()
    }

    /// The braid `β(brep)`.
    pub fn product(&self) -> BraidWord {
        self.bands
            .iter()
            .fold(BraidWord::identity(self.strands), |acc, b| acc.compose(&b.to_word()).expect("same strands"))
    }

    /// The representation repeated `k` times.
    pub fn repeated(&self, k: usize) -> BandRepresentation {
        let mut bands = Vec::with_capacity(self.bands.len() * k);
        for _ in 0..k {
            bands.extend(self.bands.iter().cloned());
        }
        BandRepresentation { strands: self.strands, bands }
    }

    pub fn with_flipped_signs(&self) -> BandRepresentation {
        BandRepresentation { strands: self.strands, bands: self.bands.iter().map(Band::flipped).collect() }
    }
}

impl fmt::Display for BandRepresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands)?;
        for b in &self.bands {
            write!(f, " {b}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.iter().copied()).unwrap()
    }

    #[test]
    fn band_words() {
        let b = Band::new(w(4, &[2]), 3, 1).unwrap();
        assert_eq!(b.to_word().letters(), &[2, 3, -2]);
        assert_eq!(Band::standard(2, 1, 1).unwrap().to_word().letters(), &[1]);
        let b = Band::new(w(4, &[3, -2]), 1, 1).unwrap();
        assert_eq!(b.to_word().letters(), &[3, -2, 1, 2, -3]);
    }

    #[test]
    fn invalid_cores_rejected() {
        assert!(Band::new(w(4, &[2, -3]), 4, 1).is_err());
        assert!(Band::new(w(4, &[]), 0, 1).is_err());
        assert_eq!(Band::new(w(4, &[]), 1, 0), Err(BraidError::ZeroPower));
    }

    #[test]
    fn cube_band_and_display() {
        let b = Band::new(w(4, &[3, 2]), 1, 3).unwrap();
        assert_eq!(b.to_word().letters(), &[3, 2, 1, 1, 1, -2, -3]);
        assert_eq!(b.to_string(), "(3 2 : 1^3)");
        assert_eq!(Band::standard(3, 2, -1).unwrap().to_string(), "(-2)");
    }

    #[test]
    fn representation_product_and_counts() {
        let rep = BandRepresentation::new(
            3,
            vec![Band::standard(3, 1, 3).unwrap(), Band::new(w(3, &[1]), 2, -1).unwrap()],
        )
        .unwrap();
        assert_eq!(rep.len(), 4);
        assert_eq!(rep.exponent_sum(), 2);
        assert!(!rep.is_quasipositive());
        assert_eq!(rep.product().letters(), &[1, 1, 1, 1, -2, -1]);
        assert_eq!(rep.product().exponent_sum(), rep.exponent_sum());
    }

    #[test]
    fn mixed_strands_rejected() {
        let err = BandRepresentation::new(3, vec![Band::standard(4, 1, 1).unwrap()]).unwrap_err();
        assert_eq!(err, BraidError::StrandMismatch { left: 3, right: 4 });
    }
}
