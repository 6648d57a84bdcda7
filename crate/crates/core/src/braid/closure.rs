use serde::{Deserialize, Serialize};

use super::BraidWord;
use crate::error::BraidError;

/// Invariants of the closed braid `β̂`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedBraidInvariants {
    pub strands: usize,
    pub exponent_sum: i64,
    pub components: usize,
    /// Cycle lengths of `π(β)`, non-increasing.
    pub cycle_type: Vec<usize>,
    /// Linking numbers between components. Components are ordered by their
    /// least starting strand; the diagonal is zero.
    pub component_linking: Vec<Vec<i64>>,
    /// Present when the closure is a knot.
    pub self_windings: Option<Vec<i64>>,
}

/// The part of [`ClosedBraidInvariants`] that does not depend on how the
/// components happen to be numbered; equal for conjugate braids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantBattery {
    pub strands: usize,
    pub exponent_sum: i64,
    pub components: usize,
    pub cycle_type: Vec<usize>,
    /// Pairwise linking numbers as a sorted list.
    pub linking_numbers: Vec<i64>,
    pub self_windings: Option<Vec<i64>>,
}

impl ClosedBraidInvariants {
    pub fn of(word: &BraidWord) -> Self {
        let omega = word.omega();
        let cycles = omega.perm.cycles_zero_based();
        let c = cycles.len();
        let mut component_of = vec![0; word.strands()];
        for (k, cycle) in cycles.iter().enumerate() {
            for &p in cycle {
                component_of[p] = k;
            }
        }
        let mut crossings = vec![vec![0i64; c]; c];
        let n = word.strands();
        for p in 0..n {
            for q in 0..n {
                let (a, b) = (component_of[p], component_of[q]);
                if a != b {
                    crossings[a][b] += omega.matrix.get(p, q);
                }
            }
        }
        // Crossings between two closed components always come in pairs.
        let component_linking = crossings
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|x| {
                        debug_assert_eq!(x % 2, 0);
                        x / 2
                    })
                    .collect()
            })
            .collect();
        ClosedBraidInvariants {
            strands: n,
            exponent_sum: word.exponent_sum(),
            components: c,
            cycle_type: omega.perm.cycle_type(),
            component_linking,
            self_windings: omega.self_windings().ok(),
        }
    }

    pub fn battery(&self) -> InvariantBattery {
        let mut linking_numbers = Vec::new();
        for (a, row) in self.component_linking.iter().enumerate() {
            linking_numbers.extend(row.iter().skip(a + 1).copied());
        }
        linking_numbers.sort_unstable();
        InvariantBattery {
            strands: self.strands,
            exponent_sum: self.exponent_sum,
            components: self.components,
            cycle_type: self.cycle_type.clone(),
            linking_numbers,
            self_windings: self.self_windings.clone(),
        }
    }

    /// `1 − (n − e + c)/2`, when the fibre formula applies.
    pub fn fiber_genus(&self) -> Result<i64, BraidError> {
        fiber_genus(self.strands as i64, self.exponent_sum, self.components as i64)
    }
}

/// Euler characteristic `n − e` of the fibre surface of a strictly positive
/// closed braid: `n` disks joined by `e` bands.
pub fn fiber_euler_characteristic(n: i64, e: i64) -> i64 {
    n - e
}

/// Genus of a connected surface with Euler characteristic `n − e` and `c`
/// boundary circles.
pub fn fiber_genus(n: i64, e: i64, c: i64) -> Result<i64, BraidError> {
    if n < 1 {
        return Err(BraidError::TooFewStrands { min: 1, strands: n.max(0) as usize });
    }
    let twice = 2 - (n - e + c);
    if twice % 2 != 0 {
        return Err(BraidError::NonIntegralGenus { n, e, c });
    }
    let genus = twice / 2;
    if genus < 0 {
        return Err(BraidError::DisconnectedFiber { n, e, c, genus });
    }
    Ok(genus)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.iter().copied()).unwrap()
    }

    #[test]
    fn trefoil_closure() {
        let inv = w(2, &[1, 1, 1]).closure_invariants();
        assert_eq!(inv.exponent_sum, 3);
        assert_eq!(inv.components, 1);
        assert_eq!(inv.fiber_genus(), Ok(1));
        assert_eq!(inv.self_windings, Some(vec![0, 3]));
    }

    #[test]
    fn hopf_closure() {
        let inv = w(2, &[1, 1]).closure_invariants();
        assert_eq!(inv.exponent_sum, 2);
        assert_eq!(inv.components, 2);
        assert_eq!(inv.component_linking, vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(inv.self_windings, None);
    }

    #[test]
    fn split_unknots() {
        let inv = BraidWord::identity(3).closure_invariants();
        assert_eq!(inv.exponent_sum, 0);
        assert_eq!(inv.components, 3);
        assert!(inv.component_linking.iter().flatten().all(|&x| x == 0));
        assert_eq!(inv.cycle_type, vec![1, 1, 1]);
    }

    #[test]
    fn fibre_genus_formula() {
        assert_eq!(fiber_genus(2, 3, 1), Ok(1));
        assert_eq!(fiber_genus(2, 2, 2), Ok(0));
        assert_eq!(fiber_euler_characteristic(2, 2), 0);
        assert_eq!(fiber_genus(1, 0, 1), Ok(0));
        assert!(matches!(fiber_genus(3, 0, 3), Err(BraidError::DisconnectedFiber { genus: -2, .. })));
        assert_eq!(fiber_euler_characteristic(3, 0), 3);
        assert!(matches!(fiber_genus(2, 2, 1), Err(BraidError::NonIntegralGenus { .. })));
    }

    #[test]
    fn battery_ignores_component_numbering() {
        // Same link, components listed in different order.
        let a = w(3, &[1, 1]).closure_invariants().battery();
        let b = w(3, &[2, 2]).closure_invariants().battery();
        assert_eq!(a, b);
    }
}
