use crate::error::GroupError;
use crate::presentation::GroupPresentation;

/// Default node budget for [`count_homs_to_symmetric`].
pub const DEFAULT_HOM_CAP: u64 = 50_000_000;

/// All permutations of `0..k` in lexicographic order.
fn permutations(k: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut current: Vec<u8> = (0..k as u8).collect();
    loop {
        out.push(current.clone());
        let Some(i) = (1..k).rev().find(|&i| current[i - 1] < current[i]) else { break };
        let j = (i..k).rev().find(|&j| current[j] > current[i - 1]).expect("a larger element exists");
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    out
}

/// Number of homomorphisms from the presented group to the symmetric group
/// `S_k`, `1 ≤ k ≤ 5`, by backtracking over generator images. Each relator
/// is checked as soon as all its generators have images. Stops with an
/// error after visiting `cap` search nodes.
pub fn count_homs_to_symmetric(p: &GroupPresentation, k: usize, cap: u64) -> Result<u64, GroupError> {
    if !(1..=5).contains(&k) {
        return Err(GroupError::DegreeOutOfRange { k });
    }
    let perms = permutations(k);
    let index = |q: &[u8]| perms.binary_search_by(|x| x.as_slice().cmp(q)).expect("permutation listed");
    let size = perms.len();
    let mut product = vec![0usize; size * size];
    for (a, pa) in perms.iter().enumerate() {
        for (b, pb) in perms.iter().enumerate() {
            let q: Vec<u8> = (0..k).map(|i| pb[pa[i] as usize]).collect();
            product[a * size + b] = index(&q);
        }
    }
    let inverse: Vec<usize> = perms
        .iter()
        .map(|pa| {
            let mut q = vec![0u8; k];
            for (i, &v) in pa.iter().enumerate() {
                q[v as usize] = i as u8;
            }
            index(&q)
        })
        .collect();
    let identity = 0;

    let g = p.generators();
    let mut due: Vec<Vec<&[i32]>> = vec![Vec::new(); g + 1];
    for r in p.relators() {
        let top = r.letters().iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0);
        due[top].push(r.letters());
    }
    struct Search<'a> {
        product: &'a [usize],
        inverse: &'a [usize],
        size: usize,
        due: &'a [Vec<&'a [i32]>],
        images: Vec<usize>,
        nodes: u64,
        cap: u64,
    }
    impl Search<'_> {
        fn holds(&self, r: &[i32]) -> bool {
            let mut acc = 0;
            for &l in r {
                let img = self.images[l.unsigned_abs() as usize - 1];
                let img = if l > 0 { img } else { self.inverse[img] };
                acc = self.product[acc * self.size + img];
            }
            acc == 0
        }

        fn count(&mut self, level: usize) -> Result<u64, GroupError> {
            if level == self.images.len() {
                return Ok(1);
            }
            let mut total = 0;
            for img in 0..self.size {
                self.nodes += 1;
                if self.nodes > self.cap {
                    return Err(GroupError::HomCapExceeded { cap: self.cap });
                }
                self.images[level] = img;
                if self.due[level + 1].iter().all(|r| self.holds(r)) {
                    total += self.count(level + 1)?;
                }
            }
            Ok(total)
        }
    }
    debug_assert_eq!(perms[identity], (0..k as u8).collect::<Vec<_>>());
    let mut search =
        Search { product: &product, inverse: &inverse, size, due: &due, images: vec![0; g], nodes: 0, cap };
    search.count(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_counts() {
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(1).len(), 1);
    }

    #[test]
    fn free_and_cyclic_groups() {
        let free = GroupPresentation::free(2);
        assert_eq!(count_homs_to_symmetric(&free, 3, DEFAULT_HOM_CAP).unwrap(), 36);
        let z2 = GroupPresentation::from_letters(1, &[&[1, 1]]).unwrap();
        // Involutions of S_3 plus the identity.
        assert_eq!(count_homs_to_symmetric(&z2, 3, DEFAULT_HOM_CAP).unwrap(), 4);
        let trefoil = GroupPresentation::from_letters(2, &[&[1, 2, 1, -2, -1, -2]]).unwrap();
        // Trivial (1), abelian onto each cyclic subgroup... 3 + 6 + 2 + 1 from S_3 onto subgroups.
        assert_eq!(count_homs_to_symmetric(&trefoil, 3, DEFAULT_HOM_CAP).unwrap(), 12);
    }

    #[test]
    fn limits() {
        let p = GroupPresentation::free(3);
        assert!(count_homs_to_symmetric(&p, 6, DEFAULT_HOM_CAP).is_err());
        assert_eq!(count_homs_to_symmetric(&p, 5, 100), Err(GroupError::HomCapExceeded { cap: 100 }));
    }
}
