use serde::{Deserialize, Serialize};

use crate::presentation::GroupPresentation;

/// Outcome of [`coset_enumerate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum CosetOutcome {
    /// The table closed; the group has this order.
    Finite { order: u64 },
    /// More than `cap` cosets were defined. Says nothing about finiteness.
    Exceeded { cap: usize },
}

impl CosetOutcome {
    pub fn order(&self) -> Option<u64> {
        match self {
            CosetOutcome::Finite { order } => Some(*order),
            CosetOutcome::Exceeded { .. } => None,
        }
    }
}

const NONE: usize = usize::MAX;

/// Coset table over the trivial subgroup. Column `2(g−1)` is `x_g`, column
/// `2(g−1)+1` is `x_g⁻¹`.
struct Table {
    rows: Vec<Vec<usize>>,
    parent: Vec<usize>,
    columns: usize,
    cap: usize,
    queue: Vec<usize>,
}

fn column(letter: i32) -> usize {
    let g = letter.unsigned_abs() as usize - 1;
    2 * g + usize::from(letter < 0)
}

impl Table {
    fn new(columns: usize, cap: usize) -> Self {
        Table { rows: vec![vec![NONE; columns]], parent: vec![0], columns, cap, queue: Vec::new() }
    }

    fn live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut root = c;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut k = c;
        while self.parent[k] != root {
            let next = self.parent[k];
            self.parent[k] = root;
            k = next;
        }
        root
    }

    fn define(&mut self, c: usize, x: usize) -> Option<usize> {
        if self.rows.len() >= self.cap {
            return None;
        }
        let d = self.rows.len();
        self.rows.push(vec![NONE; self.columns]);
        self.parent.push(d);
        self.rows[c][x] = d;
        self.rows[d][x ^ 1] = c;
        Some(d)
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (keep, drop) = (a.min(b), a.max(b));
        self.parent[drop] = keep;
        self.queue.push(drop);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let e = self.queue[i];
            i += 1;
            for x in 0..self.columns {
                let f = self.rows[e][x];
                if f == NONE {
                    continue;
                }
                if self.rows[f][x ^ 1] == e {
                    self.rows[f][x ^ 1] = NONE;
                }
                let (e1, f1) = (self.rep(e), self.rep(f));
                if self.rows[e1][x] != NONE {
                    let t = self.rows[e1][x];
                    self.merge(f1, t);
                } else if self.rows[f1][x ^ 1] != NONE {
                    let t = self.rows[f1][x ^ 1];
                    self.merge(e1, t);
                } else {
                    self.rows[e1][x] = f1;
                    self.rows[f1][x ^ 1] = e1;
                }
            }
        }
    }

    /// Scans `word` at coset `c`, defining cosets to complete it. Returns
    /// false when the cap is hit.
    fn scan_and_fill(&mut self, c: usize, word: &[usize]) -> bool {
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, word.len());
        loop {
            while i < j && self.rows[f][word[i]] != NONE {
                f = self.rows[f][word[i]];
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return true;
            }
            while j > i && self.rows[b][word[j - 1] ^ 1] != NONE {
                b = self.rows[b][word[j - 1] ^ 1];
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return true;
            }
            if j == i + 1 {
                self.rows[f][word[i]] = b;
                self.rows[b][word[i] ^ 1] = f;
                return true;
            }
            if self.define(f, word[i]).is_none() {
                return false;
            }
        }
    }
}

/// Order of the presented group by Todd–Coxeter enumeration over the
/// trivial subgroup (HLT strategy), defining at most `cap` cosets.
pub fn coset_enumerate(p: &GroupPresentation, cap: usize) -> CosetOutcome {
    let columns = 2 * p.generators();
    if columns == 0 {
        return CosetOutcome::Finite { order: 1 };
    }
    let relators: Vec<Vec<usize>> =
        p.relators().iter().map(|r| r.letters().iter().map(|&l| column(l)).collect()).collect();
    let mut table = Table::new(columns, cap.max(1));
    let mut c = 0;
    while c < table.rows.len() {
        for r in &relators {
            if !table.live(c) {
                break;
            }
            if !table.scan_and_fill(c, r) {
                return CosetOutcome::Exceeded { cap };
            }
        }
        for x in 0..columns {
            if table.live(c) && table.rows[c][x] == NONE && table.define(c, x).is_none() {
                return CosetOutcome::Exceeded { cap };
            }
        }
        c += 1;
    }
    let order = (0..table.rows.len()).filter(|&k| table.live(k)).count() as u64;
    CosetOutcome::Finite { order }
}
