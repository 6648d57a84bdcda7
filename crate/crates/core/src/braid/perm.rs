use std::fmt;

use serde::{Deserialize, Serialize};

/// A permutation of `{1, …, n}`.
///
/// For a braid, `image(p)` is the position at which the strand that starts
/// at position `p` ends. Products read left to right: `a.then(&b)` first
/// applies `a`, then `b`, matching concatenation of braid words.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// Builds from 1-based images; `None` if not a bijection of `1..=n`.
    pub fn from_images(images: &[usize]) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &i in images {
            if i == 0 || i > n || seen[i - 1] {
                return None;
            }
            seen[i - 1] = true;
            zero_based.push(i - 1);
        }
        Some(Permutation { images: zero_based })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        Permutation { images }
    }

    /// The transposition `(i i+1)` for σ_i, 1-based.
    pub fn adjacent_transposition(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        p
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// 1-based image of the 1-based point `p`.
    pub fn image(&self, p: usize) -> usize {
        self.images[p - 1] + 1
    }

    pub(crate) fn at(&self, p: usize) -> usize {
        self.images[p]
    }

    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "permutation sizes differ");
        Permutation { images: self.images.iter().map(|&i| other.images[i]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Cycles as lists of 0-based points, each starting at its least
    /// element, ordered by that element.
    pub(crate) fn cycles_zero_based(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut cycles = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Cycles with 1-based points, fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.cycles_zero_based()
            .into_iter()
            .map(|c| c.into_iter().map(|p| p + 1).collect())
            .collect()
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles_zero_based().len()
    }

    /// Cycle lengths in non-increasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles_zero_based().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    /// A single cycle through all points (the closure is a knot).
    pub fn is_full_cycle(&self) -> bool {
        self.cycle_count() == 1
    }

    pub fn is_transposition(&self) -> bool {
        self.cycle_type().first() == Some(&2) && self.cycle_type().iter().skip(1).all(|&l| l == 1)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}
