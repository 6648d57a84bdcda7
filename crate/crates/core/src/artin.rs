//! Free groups and the Artin action of `B_n` on `F_n`.
//!
//! The action is on the right, `x · β`, with
//!
//! ```text
//! x_i σ_i = x_i x_{i+1} x_i⁻¹,   x_{i+1} σ_i = x_i,   x_j σ_i = x_j (j ≠ i, i+1)
//! ```
//!
//! so `act(w, a·b) = act(act(w, a), b)`. The action is faithful, which
//! makes [`braids_equal`] an exact solution of the word problem.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::{inverse_letters, push_reduced, BraidWord};
use crate::error::BraidError;

/// A freely reduced word in `x_1, …, x_rank`; letter `i` is `x_i`, `-i` is
/// `x_i⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawFreeWord", into = "RawFreeWord")]
pub struct FreeWord {
    rank: usize,
    letters: Vec<i32>,
}

#[derive(Serialize, Deserialize)]
struct RawFreeWord {
    rank: usize,
    letters: Vec<i32>,
}

impl TryFrom<RawFreeWord> for FreeWord {
    type Error = BraidError;
    fn try_from(raw: RawFreeWord) -> Result<Self, BraidError> {
        FreeWord::new(raw.rank, raw.letters)
    }
}

impl From<FreeWord> for RawFreeWord {
    fn from(w: FreeWord) -> Self {
        RawFreeWord { rank: w.rank, letters: w.letters }
    }
}

impl FreeWord {
    pub fn new(rank: usize, letters: impl IntoIterator<Item = i32>) -> Result<Self, BraidError> {
        let mut out = Vec::new();
        for l in letters {
            if l == 0 {
                return Err(BraidError::ZeroLetter);
            }
            if l.unsigned_abs() as usize > rank {
                return Err(BraidError::IndexOutOfRange { index: i64::from(l), strands: rank });
            }
            push_reduced(&mut out, l);
        }
        Ok(FreeWord { rank, letters: out })
    }

    pub fn identity(rank: usize) -> Self {
        FreeWord { rank, letters: Vec::new() }
    }

    /// `x_i`, or `x_{|i|}⁻¹` for negative `i`.
    pub fn generator(rank: usize, letter: i32) -> Result<Self, BraidError> {
        Self::new(rank, [letter])
    }

    /// `x_1 x_2 ⋯ x_rank`.
    pub fn total_product(rank: usize) -> Self {
        FreeWord { rank, letters: (1..=rank as i32).collect() }
    }

    pub fn rank(&self) -> usize {
        self.rank
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

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn multiply(&self, other: &FreeWord) -> Result<FreeWord, BraidError> {
        if self.rank != other.rank {
            return Err(BraidError::StrandMismatch { left: self.rank, right: other.rank });
        }
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        Ok(FreeWord { rank: self.rank, letters })
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord { rank: self.rank, letters: inverse_letters(&self.letters) }
    }

    /// Same word viewed in a free group of larger rank.
    pub fn with_rank(&self, rank: usize) -> Result<FreeWord, BraidError> {
        FreeWord::new(rank, self.letters.iter().copied())
    }

    /// Strips inverse pairs from the two ends.
    pub fn cyclically_reduced(&self) -> FreeWord {
        let l = &self.letters;
        let (mut lo, mut hi) = (0, l.len());
        while hi - lo >= 2 && l[lo] == -l[hi - 1] {
            lo += 1;
            hi -= 1;
        }
        FreeWord { rank: self.rank, letters: l[lo..hi].to_vec() }
    }

    /// Exponent sum of each generator (the image in `ℤ^rank`).
    pub fn abelianized(&self) -> Vec<i64> {
        let mut v = vec![0; self.rank];
        for &l in &self.letters {
            v[l.unsigned_abs() as usize - 1] += i64::from(l.signum());
        }
        v
    }

    /// If the word is `w x_j^{±1} w⁻¹` (freely reduced), returns `(w, ±j)`.
    pub fn as_conjugate_of_generator(&self) -> Option<(FreeWord, i32)> {
        let n = self.letters.len();
        if n.is_multiple_of(2) {
            return None;
        }
        let mid = n / 2;
        let (head, rest) = self.letters.split_at(mid);
        if rest[1..] != inverse_letters(head)[..] {
            return None;
        }
        Some((FreeWord { rank: self.rank, letters: head.to_vec() }, rest[0]))
    }

    /// `self · b` under the Artin action.
    pub fn act(&self, b: &BraidWord) -> Result<FreeWord, BraidError> {
        if self.rank != b.strands() {
            return Err(BraidError::StrandMismatch { left: self.rank, right: b.strands() });
        }
        let mut word = self.letters.clone();
        for &l in b.letters() {
            word = substitute_letter(&word, l);
        }
        Ok(FreeWord { rank: self.rank, letters: word })
    }

    /// Images `x_1·b, …, x_n·b` of all generators.
    pub fn generator_images(b: &BraidWord) -> Vec<FreeWord> {
        let n = b.strands();
        (1..=n as i32)
            .map(|i| FreeWord { rank: n, letters: vec![i] }.act(b).expect("ranks agree"))
            .collect()
    }
}

/// Applies the automorphism of a single braid letter to a reduced word.
fn substitute_letter(word: &[i32], letter: i32) -> Vec<i32> {
    let i = letter.abs();
    let mut out = Vec::with_capacity(word.len() + 4);
    for &x in word {
        let g = x.abs();
        let image: &[i32] = if letter > 0 {
            if g == i {
                &[i, i + 1, -i]
            } else if g == i + 1 {
                &[i]
            } else {
                push_reduced(&mut out, x);
                continue;
            }
        } else if g == i {
            &[i + 1]
        } else if g == i + 1 {
            &[-(i + 1), i, i + 1]
        } else {
            push_reduced(&mut out, x);
            continue;
        };
        if x > 0 {
            for &y in image {
                push_reduced(&mut out, y);
            }
        } else {
            for &y in image.iter().rev() {
                push_reduced(&mut out, -y);
            }
        }
    }
    out
}

/// Decides `a = b` in `B_n` by comparing the induced automorphisms of
/// `F_n` on every generator.
pub fn braids_equal(a: &BraidWord, b: &BraidWord) -> Result<bool, BraidError> {
    if a.strands() != b.strands() {
        return Err(BraidError::StrandMismatch { left: a.strands(), right: b.strands() });
    }
    Ok(FreeWord::generator_images(a) == FreeWord::generator_images(b))
}

/// Whether `x_1 ⋯ x_n` is fixed by `a`. True for every braid.
pub fn product_preserves_total(a: &BraidWord) -> bool {
    let total = FreeWord::total_product(a.strands());
    total.act(a).map(|img| img == total).unwrap_or(false)
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}:", self.rank)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{delta_squared, DeltaForm};

    fn fw(rank: usize, letters: &[i32]) -> FreeWord {
        FreeWord::new(rank, letters.iter().copied()).unwrap()
    }

    fn bw(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.iter().copied()).unwrap()
    }

    #[test]
    fn free_multiplication() {
        assert!(fw(3, &[1]).multiply(&fw(3, &[-1])).unwrap().is_identity());
        assert_eq!(fw(3, &[1, 2]).multiply(&fw(3, &[-2, 3])).unwrap(), fw(3, &[1, 3]));
        let v = fw(3, &[2, -3]);
        assert_eq!(FreeWord::identity(3).multiply(&v).unwrap(), v);
        assert!(fw(3, &[1]).multiply(&fw(2, &[1])).is_err());
    }

    #[test]
    fn generator_action() {
        let s1 = bw(2, &[1]);
        assert_eq!(fw(2, &[1]).act(&s1).unwrap(), fw(2, &[1, 2, -1]));
        assert_eq!(fw(2, &[2]).act(&s1).unwrap(), fw(2, &[1]));
    }

    #[test]
    fn square_of_generator_action() {
        let s = bw(2, &[1, 1]);
        assert_eq!(fw(2, &[1]).act(&s).unwrap(), fw(2, &[1, 2, 1, -2, -1]));
        assert_eq!(fw(2, &[2]).act(&s).unwrap(), fw(2, &[1, 2, -1]));
        assert_eq!(fw(3, &[3]).act(&bw(3, &[1, 1])).unwrap(), fw(3, &[3]));
    }

    #[test]
    fn inverse_letter_undoes_generator() {
        for i in 1..4 {
            for g in 1..=4 {
                let b = bw(4, &[i, -i]);
                assert!(b.is_empty());
                let x = fw(4, &[g]);
                let there = x.act(&bw(4, &[i])).unwrap();
                assert_eq!(there.act(&bw(4, &[-i])).unwrap(), x);
            }
        }
    }

    #[test]
    fn word_problem_examples() {
        assert!(braids_equal(&bw(3, &[1, 2, 1]), &bw(3, &[2, 1, 2])).unwrap());
        assert!(!braids_equal(&bw(3, &[1]), &bw(3, &[2])).unwrap());
        assert!(braids_equal(&bw(4, &[1, 3]), &bw(4, &[3, 1])).unwrap());
        assert!(braids_equal(&bw(4, &[1, 2]), &bw(3, &[1, 2])).is_err());
    }

    #[test]
    fn delta_squared_forms_agree() {
        for n in 2..=6 {
            let a = delta_squared(n, DeltaForm::Power).unwrap();
            let b = delta_squared(n, DeltaForm::PureProduct).unwrap();
            assert!(braids_equal(&a, &b).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn total_product_is_fixed() {
        assert!(product_preserves_total(&bw(2, &[1])));
        assert!(product_preserves_total(&delta_squared(4, DeltaForm::Power).unwrap()));
        assert!(product_preserves_total(&bw(5, &[1, -2, 3, 4, -1, -3, 2])));
    }

    #[test]
    fn conjugate_decomposition() {
        let (w, j) = fw(3, &[1, 2, 3, -2, -1]).as_conjugate_of_generator().unwrap();
        assert_eq!((w, j), (fw(3, &[1, 2]), 3));
        assert!(fw(3, &[1, 2]).as_conjugate_of_generator().is_none());
        assert!(fw(3, &[1, 2, 1]).as_conjugate_of_generator().is_none());
    }

    #[test]
    fn cyclic_reduction() {
        assert_eq!(fw(3, &[1, 2, 3, -1]).cyclically_reduced(), fw(3, &[2, 3]));
        assert_eq!(fw(3, &[1, 2, -1]).cyclically_reduced(), fw(3, &[2]));
        assert_eq!(fw(3, &[1, 2]).abelianized(), vec![1, 1, 0]);
    }
}
