use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::presentation::GroupPresentation;

/// `ℤ^free_rank ⊕ ℤ/d₁ ⊕ … ⊕ ℤ/d_k` with `1 < d₁ | d₂ | … | d_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawInvariants", into = "RawInvariants")]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

#[derive(Serialize, Deserialize)]
struct RawInvariants {
    free_rank: usize,
    torsion: Vec<String>,
}

impl TryFrom<RawInvariants> for AbelianInvariants {
    type Error = String;
    fn try_from(raw: RawInvariants) -> Result<Self, String> {
        let torsion = raw
            .torsion
            .iter()
            .map(|t| t.parse::<BigInt>().map_err(|e| format!("bad torsion coefficient {t:?}: {e}")))
            .collect::<Result<_, _>>()?;
        Ok(AbelianInvariants { free_rank: raw.free_rank, torsion })
    }
}

impl From<AbelianInvariants> for RawInvariants {
    fn from(a: AbelianInvariants) -> Self {
        RawInvariants { free_rank: a.free_rank, torsion: a.torsion.iter().map(BigInt::to_string).collect() }
    }
}

impl AbelianInvariants {
    /// Convenience constructor for small torsion coefficients.
    pub fn new(free_rank: usize, torsion: &[i64]) -> Self {
        AbelianInvariants { free_rank, torsion: torsion.iter().map(|&d| BigInt::from(d)).collect() }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// The group order when finite.
    pub fn order(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z/{d}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Diagonal of the Smith normal form of an integer matrix, nonzero entries
/// only, each positive and dividing the next.
pub fn smith_diagonal(rows: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let mut a = rows;
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < m.min(n) {
        // Pivot: smallest nonzero entry in the remaining block.
        let pivot = (t..m)
            .flat_map(|i| (t..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()));
        let Some((pi, pj)) = pivot else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                let pivot_row = a[t][t..].to_vec();
                for (x, p) in a[i][t..].iter_mut().zip(&pivot_row) {
                    *x -= &q * p;
                }
                if !a[i][t].is_zero() {
                    clean = false;
                    if a[i][t].abs() < a[t][t].abs() {
                        a.swap(t, i);
                    }
                }
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let d = &q * &row[t];
                    row[j] -= d;
                }
                if !a[t][j].is_zero() {
                    clean = false;
                    if a[t][j].abs() < a[t][t].abs() {
                        for row in a.iter_mut() {
                            row.swap(t, j);
                        }
                    }
                }
            }
            if clean {
                // The pivot must divide the rest of the block.
                let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
                match bad {
                    Some(i) => {
                        let bad_row = a[i][t..].to_vec();
                        for (x, v) in a[t][t..].iter_mut().zip(bad_row) {
                            *x += v;
                        }
                    }
                    None => break,
                }
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

/// Abelianization of the presented group from the Smith form of its
/// exponent-sum matrix.
pub fn abelianization(p: &GroupPresentation) -> AbelianInvariants {
    let rows: Vec<Vec<BigInt>> =
        p.relators().iter().map(|r| r.abelianized().into_iter().map(BigInt::from).collect()).collect();
    let diag = smith_diagonal(rows);
    let free_rank = p.generators() - diag.len();
    let torsion = diag.into_iter().filter(|d| !d.is_one()).collect();
    AbelianInvariants { free_rank, torsion }
}
