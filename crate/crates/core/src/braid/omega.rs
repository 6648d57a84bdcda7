use std::fmt;

use serde::{Deserialize, Serialize};

use super::{BraidWord, Permutation};
use crate::error::BraidError;

/// Symmetric integer matrix with zero diagonal, indexed by strands.
///
/// Entry `(p, q)` counts signed crossings between the strands that start
/// at positions `p` and `q`. For a pure braid that is twice the linking
/// number of the corresponding closure components.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinkingMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl LinkingMatrix {
    pub fn zero(n: usize) -> Self {
        LinkingMatrix { n, entries: vec![0; n * n] }
    }

    /// Builds from full rows; `None` unless square, symmetric, zero diagonal.
    pub fn from_rows(rows: &[Vec<i64>]) -> Option<Self> {
        let n = rows.len();
        let mut m = Self::zero(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return None;
            }
            for (j, &v) in row.iter().enumerate() {
                m.entries[i * n + j] = v;
            }
        }
        let valid = (0..n).all(|i| m.get(i, i) == 0 && (0..n).all(|j| m.get(i, j) == m.get(j, i)));
        valid.then_some(m)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// 1-based entry.
    pub fn entry(&self, p: usize, q: usize) -> i64 {
        self.get(p - 1, q - 1)
    }

    pub(crate) fn get(&self, p: usize, q: usize) -> i64 {
        self.entries[p * self.n + q]
    }

    fn add_symmetric(&mut self, p: usize, q: usize, v: i64) {
        self.entries[p * self.n + q] += v;
        self.entries[q * self.n + p] += v;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.n.max(1)).take(self.n).map(<[i64]>::to_vec).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&v| v == 0)
    }

    /// `M^x` with `(M^x)_{pq} = M_{x(p), x(q)}`: the conjugation by
    /// permutation matrices used in the semidirect product.
    pub fn permuted(&self, x: &Permutation) -> LinkingMatrix {
        let n = self.n;
        let mut out = Self::zero(n);
        for p in 0..n {
            for q in 0..n {
                out.entries[p * n + q] = self.get(x.at(p), x.at(q));
            }
        }
        out
    }

    pub fn add(&self, other: &LinkingMatrix) -> LinkingMatrix {
        assert_eq!(self.n, other.n, "matrix sizes differ");
        LinkingMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn negated(&self) -> LinkingMatrix {
        LinkingMatrix { n: self.n, entries: self.entries.iter().map(|v| -v).collect() }
    }
}

impl fmt::Display for LinkingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| format!("[{}]", r.iter().map(i64::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// Image of a braid in `S_n ⋊ 𝔖_n`.
///
/// Multiplication: `(A, x)·(B, y) = (A + B^x, x then y)` where
/// `(B^x)_{pq} = B_{x(p), x(q)}`. With this law σ_j maps to the matrix with
/// ones at `(j, j+1)`, `(j+1, j)` paired with the transposition `(j j+1)`,
/// and the matrix part of a pure braid is its [`LinkingMatrix`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OmegaImage {
    pub matrix: LinkingMatrix,
    pub perm: Permutation,
}

impl OmegaImage {
    pub fn identity(n: usize) -> Self {
        OmegaImage { matrix: LinkingMatrix::zero(n), perm: Permutation::identity(n) }
    }

    /// ω(σ_j^sign) for a single letter.
    pub fn of_letter(n: usize, letter: i32) -> Self {
        let j = letter.unsigned_abs() as usize;
        let mut matrix = LinkingMatrix::zero(n);
        matrix.add_symmetric(j - 1, j, i64::from(letter.signum()));
        OmegaImage { matrix, perm: Permutation::adjacent_transposition(n, j) }
    }

    pub fn mul(&self, other: &OmegaImage) -> OmegaImage {
        OmegaImage {
            matrix: self.matrix.add(&other.matrix.permuted(&self.perm)),
            perm: self.perm.then(&other.perm),
        }
    }

    pub fn inverse(&self) -> OmegaImage {
        let inv = self.perm.inverse();
        OmegaImage { matrix: self.matrix.permuted(&inv).negated(), perm: inv }
    }

    /// Direct evaluation by following strands through the word; agrees with
    /// the product of [`OmegaImage::of_letter`] images.
    pub fn from_word(word: &BraidWord) -> Self {
        let n = word.strands();
        let mut matrix = LinkingMatrix::zero(n);
        let mut at: Vec<usize> = (0..n).collect(); // at[pos] = starting label
        for &l in word.letters() {
            let i = l.unsigned_abs() as usize - 1;
            matrix.add_symmetric(at[i], at[i + 1], i64::from(l.signum()));
            at.swap(i, i + 1);
        }
        let mut images = vec![0; n];
        for (pos, &s) in at.iter().enumerate() {
            images[s] = pos;
        }
        OmegaImage { matrix, perm: Permutation::from_images_unchecked(images) }
    }

    /// Doubled self-windings: for each residue `d` mod n, the sum of
    /// `a_pq` over the pairs `(c_k, c_{k+d})`, where `c_0, c_1, …` lists
    /// the strands in the order the knot visits them. Only defined when
    /// the permutation is an n-cycle.
    pub fn doubled_self_windings(&self) -> Result<Vec<i64>, BraidError> {
        if !self.perm.is_full_cycle() {
            return Err(BraidError::NotKnot);
        }
        let n = self.perm.len();
        let mut order = Vec::with_capacity(n);
        let mut p = 0;
        for _ in 0..n {
            order.push(p);
            p = self.perm.at(p);
        }
        Ok((0..n)
            .map(|d| (0..n).map(|k| self.matrix.get(order[k], order[(k + d) % n])).sum())
            .collect())
    }

    /// Self-windings `sw_0, …, sw_{n−1}`, indexed by the residue `d`.
    /// `sw_0` is always zero, `sw_d = sw_{n−d}`, and the sum is the
    /// exponent sum.
    pub fn self_windings(&self) -> Result<Vec<i64>, BraidError> {
        let doubled = self.doubled_self_windings()?;
        debug_assert!(doubled.iter().all(|s| s % 2 == 0), "odd orbit sum {doubled:?}");
        Ok(doubled.into_iter().map(|s| s / 2).collect())
    }
}
