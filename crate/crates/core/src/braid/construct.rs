use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::BraidWord;
use crate::error::BraidError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DeltaForm {
    /// `(σ₁σ₂⋯σ_{n−1})^n`.
    Power,
    /// `A_{1,n−1} A_{1,n−2} ⋯ A_{1,1} A_{2,n−1} ⋯ A_{2,2} ⋯ A_{n−1,n−1}`.
    PureProduct,
}

fn ascending(from: usize, to: usize) -> impl Iterator<Item = i32> {
    (from..=to).map(|i| i as i32)
}

/// `A_{i,j} = (σ_i⋯σ_{j−1}) σ_j² (σ_i⋯σ_{j−1})⁻¹` for `1 ≤ i ≤ j ≤ n−1`.
pub fn pure_generator(n: usize, i: usize, j: usize) -> Result<BraidWord, BraidError> {
    if n < 2 {
        return Err(BraidError::TooFewStrands { min: 2, strands: n });
    }
    if i < 1 || i > j || j > n - 1 {
        let bad = if i < 1 || i > j { i } else { j };
        return Err(BraidError::IndexOutOfRange { index: bad as i64, strands: n });
    }
    let conj = BraidWord::new(n, ascending(i, j - 1))?;
    BraidWord::new(n, [j as i32, j as i32])?.conjugated_by(&conj)
}

/// The full twist Δ² in `B_n`, written in the requested form.
pub fn delta_squared(n: usize, form: DeltaForm) -> Result<BraidWord, BraidError> {
    if n < 2 {
        return Err(BraidError::TooFewStrands { min: 2, strands: n });
    }
    match form {
        DeltaForm::Power => Ok(BraidWord::new(n, ascending(1, n - 1))?.pow(n as i32)),
        DeltaForm::PureProduct => {
            let mut out = BraidWord::identity(n);
            for i in 1..n {
                for j in (i..n).rev() {
                    out = out.compose(&pure_generator(n, i, j)?)?;
                }
            }
            Ok(out)
        }
    }
}

/// The half twist `Δ = (σ₁⋯σ_{n−1})(σ₁⋯σ_{n−2})⋯(σ₁)`.
pub fn half_twist(n: usize) -> Result<BraidWord, BraidError> {
    if n < 1 {
        return Err(BraidError::NoStrands);
    }
    BraidWord::new(n, (1..n).rev().flat_map(|top| ascending(1, top)))
}

/// `(σ₁⋯σ_{p−1})^q` on `p` strands; its closure is the torus knot
/// `O{p, q}`.
pub fn torus_braid(p: i64, q: i64) -> Result<BraidWord, BraidError> {
    if p < 1 || q < 1 || p.gcd(&q) != 1 {
        return Err(BraidError::NotCoprime { p, q });
    }
    let p = p as usize;
    Ok(BraidWord::new(p, ascending(1, p - 1))?.pow(q as i32))
}

/// Number of `(σ₁⋯σ_{p−1})` factors appended after the p-parallel so that
/// the result is the `(p, q)` cable relative to the Seifert framing.
///
/// The parallel follows the blackboard framing of the closed braid
/// diagram, which exceeds the Seifert framing by the writhe `e(base)`, so
/// each of the `p` parallel strands already links the core `e(base)` times.
/// `t` twist factors add `t` more, hence `t = q − p·e(base)`. For a
/// one-strand base this gives `t = q` and the cable is `torus_braid(p, q)`.
pub fn cable_twist(p: i64, base_exponent_sum: i64, q: i64) -> i64 {
    q - p * base_exponent_sum
}

/// Positive block replacing a crossing σ_i in the p-parallel: every strand
/// of group `i` crosses over every strand of group `i+1` once.
fn parallel_block(p: usize, i: usize) -> Vec<i32> {
    let a = (i - 1) * p;
    let mut letters = Vec::with_capacity(p * p);
    for r in 0..p {
        letters.extend(ascending(a + p - r, a + 2 * p - 1 - r));
    }
    letters
}

/// The `(p, q)` cable about the knot closing `base`, as a braid on
/// `p · base.strands()` strands: the p-parallel of `base` followed by
/// [`cable_twist`] factors of `σ₁⋯σ_{p−1}` on the first group.
pub fn cable_braid(base: &BraidWord, p: i64, q: i64) -> Result<BraidWord, BraidError> {
    if !base.permutation().is_full_cycle() {
        return Err(BraidError::NotKnot);
    }
    if p < 1 || p.gcd(&q) != 1 {
        return Err(BraidError::NotCoprime { p, q });
    }
    let pu = p as usize;
    let total = base.strands() * pu;
    let mut letters = Vec::new();
    for &l in base.letters() {
        let block = parallel_block(pu, l.unsigned_abs() as usize);
        if l > 0 {
            letters.extend(block);
        } else {
            letters.extend(block.iter().rev().map(|&x| -x));
        }
    }
    let parallel = BraidWord::new(total, letters)?;
    let t = cable_twist(p, base.exponent_sum(), q);
    let twist = BraidWord::new(total, ascending(1, pu - 1))?.pow(t as i32);
    let cable = parallel.compose(&twist)?;
    if !cable.permutation().is_full_cycle() {
        return Err(BraidError::NotCoprime { p, q });
    }
    Ok(cable)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.iter().copied()).unwrap()
    }

    #[test]
    fn pure_generators() {
        assert_eq!(pure_generator(4, 1, 1).unwrap().letters(), &[1, 1]);
        assert_eq!(pure_generator(3, 1, 2).unwrap().letters(), &[1, 2, 2, -1]);
        for n in 2..6 {
            for i in 1..n {
                for j in i..n {
                    assert!(pure_generator(n, i, j).unwrap().is_pure());
                }
            }
        }
        assert!(pure_generator(4, 2, 1).is_err());
        assert!(pure_generator(4, 1, 4).is_err());
        assert!(pure_generator(4, 0, 1).is_err());
    }

    #[test]
    fn pure_generator_links_one_pair_twice() {
        // Counted by hand from the strand diagram of the defining word:
        // A_{i,j} links the strands starting at i and j+1.
        for (n, i, j) in [(3, 1, 2), (4, 1, 3), (4, 2, 3), (5, 2, 4), (5, 1, 1)] {
            let m = pure_generator(n, i, j).unwrap().linking_matrix().unwrap();
            for p in 1..=n {
                for q in 1..=n {
                    let linked = (p, q) == (i, j + 1) || (q, p) == (i, j + 1);
                    assert_eq!(m.entry(p, q), if linked { 2 } else { 0 }, "A_{{{i},{j}}} in B_{n}");
                }
            }
        }
    }

    #[test]
    fn delta_squared_words() {
        assert_eq!(delta_squared(2, DeltaForm::Power).unwrap().letters(), &[1, 1]);
        let d3 = delta_squared(3, DeltaForm::Power).unwrap();
        assert_eq!(d3.letters(), &[1, 2, 1, 2, 1, 2]);
        assert_eq!(d3.exponent_sum(), 6);
        for n in 2..7 {
            let e = (n * (n - 1)) as i64;
            assert_eq!(delta_squared(n, DeltaForm::Power).unwrap().exponent_sum(), e);
            assert_eq!(delta_squared(n, DeltaForm::PureProduct).unwrap().exponent_sum(), e);
            assert!(delta_squared(n, DeltaForm::Power).unwrap().is_pure());
            assert!(delta_squared(n, DeltaForm::Power).unwrap().is_strictly_positive());
        }
        assert!(delta_squared(1, DeltaForm::Power).is_err());
    }

    #[test]
    fn half_twist_word() {
        assert_eq!(half_twist(6).unwrap().letters(), w(6, &[1, 2, 3, 4, 5, 1, 2, 3, 4, 1, 2, 3, 1, 2, 1]).letters());
        assert_eq!(half_twist(4).unwrap().pow(2).exponent_sum(), 12);
    }

    #[test]
    fn torus_braids() {
        assert_eq!(torus_braid(2, 3).unwrap().letters(), &[1, 1, 1]);
        let unknot = torus_braid(1, 5).unwrap();
        assert_eq!(unknot.strands(), 1);
        assert!(unknot.is_identity());
        assert_eq!(torus_braid(3, 2).unwrap().letters(), &[1, 2, 1, 2]);
        assert_eq!(torus_braid(3, 5).unwrap().exponent_sum(), 10);
        assert!(torus_braid(2, 4).is_err());
        assert!(torus_braid(0, 1).is_err());
    }

    #[test]
    fn torus_3_2_and_2_3_share_invariants() {
        let a = torus_braid(2, 3).unwrap().closure_invariants();
        let b = torus_braid(3, 2).unwrap().closure_invariants();
        assert_eq!(a.components, 1);
        assert_eq!(b.components, 1);
        assert_eq!(a.fiber_genus(), b.fiber_genus());
    }

    #[test]
    fn parallel_block_shape() {
        assert_eq!(parallel_block(1, 3), vec![3]);
        assert_eq!(parallel_block(2, 1), vec![2, 3, 1, 2]);
    }

    #[test]
    fn cable_calibration_against_torus_braids() {
        for (p, q) in [(2, 3), (2, 5), (3, 4), (3, 5), (5, 2)] {
            let cable = cable_braid(&BraidWord::identity(1), p, q).unwrap();
            assert_eq!(cable, torus_braid(p, q).unwrap());
        }
    }

    #[test]
    fn cable_with_one_strand_group_is_the_base() {
        let base = w(2, &[1, 1, 1]);
        assert_eq!(cable_braid(&base, 1, 7).unwrap(), base);
    }

    #[test]
    fn cable_of_trefoil() {
        let cable = cable_braid(&w(2, &[1, 1, 1]), 2, 13).unwrap();
        assert_eq!(cable.strands(), 4);
        assert!(cable.is_strictly_positive());
        // 3 blocks of 4 crossings plus 13 − 2·3 twist letters.
        assert_eq!(cable.exponent_sum(), 19);
        assert!(cable.permutation().is_full_cycle());
    }

    #[test]
    fn cable_errors() {
        assert_eq!(cable_braid(&w(2, &[1, 1]), 2, 3), Err(BraidError::NotKnot));
        assert_eq!(cable_braid(&w(2, &[1]), 2, 4), Err(BraidError::NotCoprime { p: 2, q: 4 }));
        assert!(cable_braid(&w(2, &[1]), 0, 1).is_err());
    }
}
