use std::collections::BTreeSet;

use braidcurve_core::FreeWord;
use serde::{Deserialize, Serialize};

use crate::presentation::{canonical_relator, GroupPresentation};

/// Result of [`tietze_simplify`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TietzeOutcome {
    pub presentation: GroupPresentation,
    /// Generators removed.
    pub eliminated: usize,
    /// Set when an elimination was skipped because it would push the total
    /// relator length past the budget; the presentation is the best found.
    pub budget_exceeded: bool,
}

fn push_reduced(out: &mut Vec<i32>, l: i32) {
    if out.last() == Some(&-l) {
        out.pop();
    } else {
        out.push(l);
    }
}

fn cyclic_reduce(mut w: Vec<i32>) -> Vec<i32> {
    let (mut lo, mut hi) = (0, w.len());
    while hi - lo >= 2 && w[lo] == -w[hi - 1] {
        lo += 1;
        hi -= 1;
    }
    w.truncate(hi);
    w.drain(..lo);
    w
}

fn inverse(w: &[i32]) -> Vec<i32> {
    w.iter().rev().map(|&l| -l).collect()
}

/// An elimination of generator `gen` through relator `rel`, in which it
/// occurs exactly once.
struct Candidate {
    growth: i64,
    rel: usize,
    gen: i32,
}

fn best_candidate(relators: &[Vec<i32>], total: usize, budget: usize, over_budget: &mut bool) -> Option<Candidate> {
    let gens: BTreeSet<i32> = relators.iter().flatten().map(|l| l.abs()).collect();
    let mut occurrences = std::collections::BTreeMap::new();
    for &g in &gens {
        let count = relators.iter().flatten().filter(|l| l.abs() == g).count();
        occurrences.insert(g, count);
    }
    let mut best: Option<Candidate> = None;
    for (ri, r) in relators.iter().enumerate() {
        for &g in &gens {
            if r.iter().filter(|l| l.abs() == g).count() != 1 {
                continue;
            }
            let elsewhere = (occurrences[&g] - 1) as i64;
            let len = r.len() as i64;
            let growth = elsewhere * (len - 2) - len;
            if total as i64 + growth > budget as i64 {
                *over_budget = true;
                continue;
            }
            let better = match &best {
                None => true,
                Some(b) => (growth, len, g) < (b.growth, relators[b.rel].len() as i64, b.gen),
            };
            if better {
                best = Some(Candidate { growth, rel: ri, gen: g });
            }
        }
    }
    best
}

fn tidy(relators: Vec<Vec<i32>>) -> Vec<Vec<i32>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for r in relators {
        let r = cyclic_reduce(r);
        if r.is_empty() {
            continue;
        }
        let word = FreeWord::new(r.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0), r.iter().copied())
            .expect("letters are nonzero and in range");
        if seen.insert(canonical_relator(&word)) {
            out.push(r);
        }
    }
    out
}

/// Greedy Tietze simplification: repeatedly removes a generator that occurs
/// exactly once in some relator, choosing the elimination that grows the
/// total relator length least, and drops trivial and repeated relators.
/// `budget` caps the total relator length.
pub fn tietze_simplify(p: &GroupPresentation, budget: usize) -> TietzeOutcome {
    let mut generators = p.generators();
    let mut relators: Vec<Vec<i32>> = tidy(p.relators().iter().map(|r| r.letters().to_vec()).collect());
    let mut eliminated = 0;
    let budget_exceeded = loop {
        let total = relators.iter().map(Vec::len).sum();
        let mut over = false;
        let Some(c) = best_candidate(&relators, total, budget, &mut over) else {
            break over;
        };
        let r = relators.swap_remove(c.rel);
        let at = r.iter().position(|l| l.abs() == c.gen).expect("candidate occurs in its relator");
        // Rotate to x^ε · u, so x^ε = u⁻¹.
        let mut rotated = r[at..].to_vec();
        rotated.extend_from_slice(&r[..at]);
        let sign = rotated[0].signum();
        let u = &rotated[1..];
        let image = if sign > 0 { inverse(u) } else { u.to_vec() };
        let image_inv = inverse(&image);
        let renumber = |l: i32| if l.abs() > c.gen { l - l.signum() } else { l };
        relators = relators
            .into_iter()
            .map(|w| {
                let mut out = Vec::with_capacity(w.len());
                for l in w {
                    if l == c.gen {
                        image.iter().for_each(|&k| push_reduced(&mut out, renumber(k)));
                    } else if l == -c.gen {
                        image_inv.iter().for_each(|&k| push_reduced(&mut out, renumber(k)));
                    } else {
                        push_reduced(&mut out, renumber(l));
                    }
                }
                out
            })
            .collect();
        relators = tidy(relators);
        generators -= 1;
        eliminated += 1;
    };
    let words = relators.into_iter().map(|r| FreeWord::new(generators, r).expect("renumbered letters stay in range"));
    TietzeOutcome { presentation: GroupPresentation::new(generators, words), eliminated, budget_exceeded }
}

/// Default budget: generous relative to the input size.
pub fn default_budget(p: &GroupPresentation) -> usize {
    (8 * p.total_length()).max(10_000)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn collapses_equalities() {
        // x1 = x2 = x3 and x1 x2 x1 = x2 x1 x2.
        let p = GroupPresentation::from_letters(3, &[&[1, -2], &[2, -3], &[1, 2, 1, -2, -1, -2]]).unwrap();
        let out = tietze_simplify(&p, 1000);
        assert_eq!(out.presentation.generators(), 1);
        assert_eq!(out.eliminated, 2);
        assert!(out.presentation.relators().is_empty());
    }

    #[test]
    fn keeps_trefoil_relation() {
        let p = GroupPresentation::from_letters(2, &[&[1, 2, 1, -2, -1, -2]]).unwrap();
        let out = tietze_simplify(&p, 1000);
        assert_eq!(out.presentation.generators(), 2);
        assert_eq!(out.presentation.relators().len(), 1);
    }

    #[test]
    fn budget_blocks_growth() {
        // Eliminating x1 substitutes a length-3 word into many relators.
        let p = GroupPresentation::from_letters(
            4,
            &[&[1, 2, 3, 4], &[1, 1, 2, 2, 2], &[1, 1, 3, 3, 3], &[1, 1, 4, 4, 4], &[2, 3, 2, 3, 4, 4]],
        )
        .unwrap();
        let out = tietze_simplify(&p, p.total_length());
        assert!(out.budget_exceeded);
        assert_eq!(out.presentation, p);
    }

    #[test]
    fn generator_relator_kills_generator() {
        let p = GroupPresentation::from_letters(2, &[&[2], &[1, 2, 1, 1]]).unwrap();
        let out = tietze_simplify(&p, 100);
        assert_eq!(out.presentation.generators(), 1);
        assert_eq!(out.presentation.relators()[0].letters(), &[1, 1, 1]);
    }
}
