//! Braid words in `B_n` and everything computed from them without
//! applying braid relations.
//!
//! A letter is a nonzero `i32`: `i` stands for σ_i and `-i` for σ_i⁻¹.
//! Words are freely reduced when built; deciding equality in `B_n` is the
//! job of [`crate::artin::braids_equal`].

mod band;
mod closure;
mod construct;
mod omega;
mod perm;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::BraidError;

pub use band::{Band, BandRepresentation};
pub use closure::{fiber_euler_characteristic, fiber_genus, ClosedBraidInvariants, InvariantBattery};
pub use construct::{cable_braid, cable_twist, delta_squared, half_twist, pure_generator, torus_braid, DeltaForm};
pub use omega::{LinkingMatrix, OmegaImage};
pub use perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawBraid", into = "RawBraid")]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

#[derive(Serialize, Deserialize)]
struct RawBraid {
    strands: usize,
    letters: Vec<i32>,
}

impl TryFrom<RawBraid> for BraidWord {
    type Error = BraidError;
    fn try_from(raw: RawBraid) -> Result<Self, BraidError> {
        BraidWord::new(raw.strands, raw.letters)
    }
}

impl From<BraidWord> for RawBraid {
    fn from(b: BraidWord) -> Self {
        RawBraid { strands: b.strands, letters: b.letters }
    }
}

/// Appends `letter` to a freely reduced word, cancelling against the last
/// letter when they are mutually inverse.
pub(crate) fn push_reduced(word: &mut Vec<i32>, letter: i32) {
    if word.last() == Some(&-letter) {
        word.pop();
    } else {
        word.push(letter);
    }
}

pub(crate) fn inverse_letters(letters: &[i32]) -> Vec<i32> {
    letters.iter().rev().map(|&l| -l).collect()
}

impl BraidWord {
    /// Validates the letters and freely reduces them.
    pub fn new(strands: usize, letters: impl IntoIterator<Item = i32>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        let mut out = Vec::new();
        for l in letters {
            check_letter(l, strands)?;
            push_reduced(&mut out, l);
        }
        Ok(BraidWord { strands, letters: out })
    }

    /// # Panics
    /// If `strands` is zero.
    pub fn identity(strands: usize) -> Self {
        assert!(strands >= 1, "a braid needs at least one strand");
        BraidWord { strands, letters: Vec::new() }
    }

    /// σ_i (or σ_{|i|}⁻¹ for negative `i`).
    pub fn generator(strands: usize, letter: i32) -> Result<Self, BraidError> {
        Self::new(strands, [letter])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// True for the empty word. Note this is syntactic.
    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation followed by free reduction.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch { left: self.strands, right: other.strands });
        }
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn invert(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: inverse_letters(&self.letters) }
    }

    pub fn pow(&self, k: i32) -> BraidWord {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut out = BraidWord::identity(self.strands);
        for _ in 0..k.unsigned_abs() {
            for &l in &base.letters {
                push_reduced(&mut out.letters, l);
            }
        }
        out
    }

    /// `g · self · g⁻¹`.
    pub fn conjugated_by(&self, g: &BraidWord) -> Result<BraidWord, BraidError> {
        g.compose(self)?.compose(&g.invert())
    }

    /// Reinterprets the word in `B_strands`, shifting every generator index
    /// up by `offset`.
    pub fn embed(&self, strands: usize, offset: usize) -> Result<BraidWord, BraidError> {
        let shift = offset as i32;
        BraidWord::new(strands, self.letters.iter().map(|&l| l.signum() * (l.abs() + shift)))
    }

    /// The image under the abelianization `B_n → ℤ`.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| i64::from(l.signum())).sum()
    }

    /// Where each strand ends up; see [`Permutation`] for the convention.
    pub fn permutation(&self) -> Permutation {
        let mut at = (0..self.strands).collect::<Vec<_>>(); // at[pos] = strand
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        let mut images = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            images[strand] = pos;
        }
        Permutation::from_images_unchecked(images)
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&l| l > 0)
    }

    /// Positive, and every σ_1..σ_{n−1} occurs.
    pub fn is_strictly_positive(&self) -> bool {
        if !self.is_positive() {
            return false;
        }
        let mut seen = vec![false; self.strands.saturating_sub(1)];
        for &l in &self.letters {
            seen[l as usize - 1] = true;
        }
        seen.into_iter().all(|s| s)
    }

    /// Matrix of doubled linking numbers of a pure braid's closure.
    pub fn linking_matrix(&self) -> Result<LinkingMatrix, BraidError> {
        let omega = self.omega();
        if !omega.perm.is_identity() {
            return Err(BraidError::NotPure);
        }
        Ok(omega.matrix)
    }

    pub fn omega(&self) -> OmegaImage {
        OmegaImage::from_word(self)
    }

    pub fn self_windings(&self) -> Result<Vec<i64>, BraidError> {
        self.omega().self_windings()
    }

    pub fn closure_invariants(&self) -> ClosedBraidInvariants {
        ClosedBraidInvariants::of(self)
    }
}

fn check_letter(l: i32, strands: usize) -> Result<(), BraidError> {
    if l == 0 {
        return Err(BraidError::ZeroLetter);
    }
    let i = l.unsigned_abs() as usize;
    if i >= strands {
        return Err(BraidError::IndexOutOfRange { index: i64::from(l), strands });
    }
    Ok(())
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}
