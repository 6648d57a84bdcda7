use std::f64::consts::TAU;

use braidcurve_core::{BraidWord, BranchParam};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::MonodromyError;
use crate::poly::PolyCurve;

/// Tunables for a tracking run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrackConfig {
    /// Number of equal steps the loop starts with; steps never grow beyond
    /// this size.
    pub initial_samples: usize,
    /// Hard cap on accepted plus refining samples.
    pub max_samples: usize,
    /// Collision threshold for the separation of fibre points, relative to
    /// the largest point modulus.
    pub collision_tol: f64,
    /// Projection direction; scanned over [`candidate_angles`] when absent.
    pub theta: Option<f64>,
    /// How often a branch run may halve its radius after a collision.
    pub radius_retries: usize,
}

impl Default for TrackConfig {
    fn default() -> Self {
        TrackConfig { initial_samples: 256, max_samples: 1 << 20, collision_tol: 1e-9, theta: None, radius_retries: 4 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FibreKind {
    Branch,
    Polynomial,
}

/// The closed braid traced by the fibre, with run diagnostics.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrackedBraid {
    pub word: BraidWord,
    pub kind: FibreKind,
    /// Accepted samples on the loop, refinements excluded.
    pub samples: usize,
    /// Smallest distance between two fibre points seen on the loop.
    pub min_separation: f64,
    pub radius: f64,
    pub theta: f64,
    /// Smallest `|Δ Re| / |Δ d|` over all crossings, where `d` is the
    /// projected difference of the crossing pair; 1 means head-on.
    pub transversality: f64,
    /// Final position of the strand starting at each position, read off
    /// the roots rather than the word.
    pub root_permutation: Vec<usize>,
    pub warnings: Vec<String>,
}

/// The sixteen default projection angles `(k + 1/3)·π/16`.
pub fn candidate_angles() -> Vec<f64> {
    (0..16).map(|k| (k as f64 + 1.0 / 3.0) * std::f64::consts::PI / 16.0).collect()
}

enum Source<'a> {
    /// Terms `(exponent, coefficient)` of `w(t)`, over `t = r·e^{i(φ+2πk)/m}`.
    Branch { m: usize, terms: Vec<(u32, Complex64)>, t_radius: f64 },
    Poly { curve: &'a PolyCurve, radius: f64 },
}

enum StepIssue {
    Ambiguous,
    Failed(MonodromyError),
}

fn min_separation(roots: &[Complex64]) -> f64 {
    let mut best = f64::INFINITY;
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            best = best.min((roots[i] - roots[j]).norm());
        }
    }
    best
}

fn scale(roots: &[Complex64]) -> f64 {
    roots.iter().map(|w| w.norm()).fold(f64::MIN_POSITIVE, f64::max)
}

impl Source<'_> {
    fn degree(&self) -> usize {
        match self {
            Source::Branch { m, .. } => *m,
            Source::Poly { curve, .. } => curve.degree(),
        }
    }

    /// Fibre at `arg z = phi`, labelled consistently with `prev`.
    fn sample(&self, phi: f64, prev: Option<&[Complex64]>) -> Result<Vec<Complex64>, StepIssue> {
        match self {
            Source::Branch { m, terms, t_radius } => Ok((0..*m)
                .map(|k| {
                    let angle = (phi + TAU * k as f64) / *m as f64;
                    terms
                        .iter()
                        .map(|&(e, c)| c * Complex64::from_polar(t_radius.powi(e as i32), angle * e as f64))
                        .sum()
                })
                .collect()),
            Source::Poly { curve, radius } => {
                let roots = curve.roots_at(Complex64::from_polar(*radius, phi)).map_err(StepIssue::Failed)?;
                match prev {
                    None => Ok(roots),
                    Some(prev) => match_roots(prev, &roots).ok_or(StepIssue::Ambiguous),
                }
            }
        }
    }
}

/// Nearest-neighbour matching of `next` onto `prev`. Fails when some
/// previous root has two candidates within half the previous separation,
/// or when two previous roots claim the same candidate.
fn match_roots(prev: &[Complex64], next: &[Complex64]) -> Option<Vec<Complex64>> {
    let threshold = 0.5 * min_separation(prev);
    let mut taken = vec![false; next.len()];
    let mut out = Vec::with_capacity(prev.len());
    for &p in prev {
        let mut dists: Vec<(f64, usize)> = next.iter().enumerate().map(|(j, &q)| ((p - q).norm(), j)).collect();
        dists.sort_by(|a, b| a.0.total_cmp(&b.0));
        let (d0, j) = dists[0];
        if dists.len() > 1 && dists[1].0 <= threshold.max(d0) {
            return None;
        }
        if taken[j] {
            return None;
        }
        taken[j] = true;
        out.push(next[j]);
    }
    Some(out)
}

struct Path {
    points: Vec<(f64, Vec<Complex64>)>,
    min_separation: f64,
}

/// Adaptive loop over `φ ∈ [0, 2π]`: a step is accepted when no point moves
/// more than a quarter of the current separation, otherwise halved.
fn trace(source: &Source<'_>, cfg: &TrackConfig) -> Result<Path, MonodromyError> {
    let n = source.degree();
    let base = TAU / cfg.initial_samples.max(1) as f64;
    let min_step = TAU / cfg.max_samples.max(1) as f64;
    let start = match source.sample(0.0, None) {
        Ok(r) => r,
        Err(StepIssue::Failed(e)) => return Err(e),
        Err(StepIssue::Ambiguous) => return Err(MonodromyError::Ambiguous { phi: 0.0 }),
    };
    let sep0 = min_separation(&start);
    if n > 1 && sep0 <= cfg.collision_tol * scale(&start) {
        let distinct = count_distinct(&start, cfg.collision_tol * scale(&start));
        return Err(MonodromyError::Degenerate { found: distinct, expected: n });
    }
    let mut points = vec![(0.0, start)];
    let mut overall = sep0;
    let mut phi = 0.0;
    let mut h = base;
    while phi < TAU {
        if points.len() > cfg.max_samples {
            return Err(MonodromyError::SampleCap { cap: cfg.max_samples });
        }
        let current = &points.last().expect("path is never empty").1;
        let sep = min_separation(current);
        let next_phi = (phi + h).min(TAU);
        let ambiguous = match source.sample(next_phi, Some(current)) {
            Ok(next) => {
                let moved = current.iter().zip(&next).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
                if n < 2 || moved <= 0.25 * sep {
                    let new_sep = min_separation(&next);
                    if n > 1 && new_sep <= cfg.collision_tol * scale(&next) {
                        return Err(MonodromyError::Collision { phi: next_phi, separation: new_sep });
                    }
                    overall = overall.min(new_sep);
                    points.push((next_phi, next));
                    phi = next_phi;
                    h = (2.0 * h).min(base);
                    continue;
                }
                false
            }
            Err(StepIssue::Ambiguous) => true,
            Err(StepIssue::Failed(e)) => return Err(e),
        };
        h *= 0.5;
        if h < min_step {
            return Err(if ambiguous {
                MonodromyError::Ambiguous { phi }
            } else {
                MonodromyError::Collision { phi, separation: sep }
            });
        }
    }
    Ok(Path { points, min_separation: overall })
}

fn count_distinct(roots: &[Complex64], tol: f64) -> usize {
    let mut reps: Vec<Complex64> = Vec::new();
    for &r in roots {
        if reps.iter().all(|&q| (q - r).norm() > tol) {
            reps.push(r);
        }
    }
    reps.len()
}

/// Labels sorted left to right by their projection.
fn projection_order(roots: &[Complex64], rot: Complex64) -> Vec<usize> {
    let mut order: Vec<usize> = (0..roots.len()).collect();
    order.sort_by(|&a, &b| (roots[a] * rot).re.total_cmp(&(roots[b] * rot).re).then(a.cmp(&b)));
    order
}

struct Crossings {
    letters: Vec<i32>,
    transversality: f64,
    refinements: usize,
    warnings: Vec<String>,
}

const MAX_BISECTIONS: usize = 40;

impl Crossings {
    /// Reads the letters of one interval, bisecting until the change of
    /// projection order is a set of disjoint adjacent swaps.
    fn interval(
        &mut self,
        source: &Source<'_>,
        rot: Complex64,
        (phi0, r0): (f64, &[Complex64]),
        (phi1, r1): (f64, &[Complex64]),
        depth: usize,
        cap: usize,
    ) -> Result<(), MonodromyError> {
        let order0 = projection_order(r0, rot);
        let order1 = projection_order(r1, rot);
        if order0 == order1 {
            return Ok(());
        }
        let mut pos1 = vec![0; r0.len()];
        for (p, &l) in order1.iter().enumerate() {
            pos1[l] = p;
        }
        let moves: Vec<usize> = order0.iter().map(|&l| pos1[l]).collect();
        let simple = (0..moves.len()).all(|i| match moves[i] {
            t if t == i => true,
            t if t == i + 1 => moves[i + 1] == i,
            t if i > 0 && t == i - 1 => moves[i - 1] == i,
            _ => false,
        });
        if simple {
            for i in 0..moves.len() {
                if moves[i] == i + 1 {
                    let (a, b) = (order0[i], order0[i + 1]);
                    let d0 = (r0[b] - r0[a]) * rot;
                    let d1 = (r1[b] - r1[a]) * rot;
                    let s = d0.re / (d0.re - d1.re);
                    let at_crossing = d0 + (d1 - d0) * s;
                    let sign = if at_crossing.im > 0.0 { 1 } else { -1 };
                    self.transversality = self.transversality.min((d1.re - d0.re).abs() / (d1 - d0).norm());
                    if at_crossing.im.abs() < 1e-3 * d0.norm().max(d1.norm()) {
                        self.warnings.push(format!("near-degenerate crossing at arg z ≈ {:.6}", phi0));
                    }
                    self.letters.push(sign * (i as i32 + 1));
                }
            }
            return Ok(());
        }
        if depth >= MAX_BISECTIONS {
            return Err(MonodromyError::Ambiguous { phi: phi0 });
        }
        self.refinements += 1;
        if self.refinements > cap {
            return Err(MonodromyError::SampleCap { cap });
        }
        let mid = 0.5 * (phi0 + phi1);
        let rm = match source.sample(mid, Some(r0)) {
            Ok(r) => r,
            Err(StepIssue::Failed(e)) => return Err(e),
            Err(StepIssue::Ambiguous) => return Err(MonodromyError::Ambiguous { phi: mid }),
        };
        self.interval(source, rot, (phi0, r0), (mid, &rm), depth + 1, cap)?;
        self.interval(source, rot, (mid, &rm), (phi1, r1), depth + 1, cap)
    }
}

fn read_braid(
    source: &Source<'_>,
    path: &Path,
    theta: f64,
    cfg: &TrackConfig,
) -> Result<(BraidWord, Crossings, Vec<usize>), MonodromyError> {
    let rot = Complex64::from_polar(1.0, -theta);
    let mut cr = Crossings { letters: Vec::new(), transversality: 1.0, refinements: 0, warnings: Vec::new() };
    let cap = cfg.max_samples.saturating_sub(path.points.len());
    for pair in path.points.windows(2) {
        let (phi0, r0) = &pair[0];
        let (phi1, r1) = &pair[1];
        cr.interval(source, rot, (*phi0, r0), (*phi1, r1), 0, cap)?;
    }
    let n = source.degree();
    let word = BraidWord::new(n.max(1), cr.letters.iter().copied())?;

    let start = &path.points[0].1;
    let end = &path.points.last().expect("nonempty").1;
    let order0 = projection_order(start, rot);
    let mut pos0 = vec![0; n];
    for (p, &l) in order0.iter().enumerate() {
        pos0[l] = p;
    }
    let back = match_roots(start, end).ok_or(MonodromyError::Ambiguous { phi: TAU })?;
    // back[l] is the end point nearest start point l; invert it to follow
    // each strand from its start label to the start label it ends on.
    let mut lands_on = vec![0; n];
    for (l, &w) in back.iter().enumerate() {
        let target = (0..n).find(|&k| end[k] == w).expect("matched point comes from end");
        lands_on[target] = l;
    }
    let root_permutation: Vec<usize> = order0.iter().map(|&l| pos0[lands_on[l]] + 1).collect();
    let from_word: Vec<usize> = (1..=n).map(|p| word.permutation().image(p)).collect();
    if n > 0 && root_permutation != from_word {
        return Err(MonodromyError::PermutationMismatch);
    }
    Ok((word, cr, root_permutation))
}

fn run(source: &Source<'_>, radius: f64, kind: FibreKind, cfg: &TrackConfig) -> Result<TrackedBraid, MonodromyError> {
    let path = trace(source, cfg)?;
    let thetas = match cfg.theta {
        Some(t) => vec![t],
        None => candidate_angles(),
    };
    let mut best: Option<(f64, BraidWord, Crossings, Vec<usize>)> = None;
    let mut first_err = None;
    for theta in thetas {
        match read_braid(source, &path, theta, cfg) {
            Ok((word, cr, perm)) => {
                if best.as_ref().is_none_or(|b| cr.transversality > b.2.transversality) {
                    best = Some((theta, word, cr, perm));
                }
            }
            Err(e) => {
                first_err.get_or_insert(e);
            }
        }
    }
    let (theta, word, cr, root_permutation) = match best {
        Some(b) => b,
        None => return Err(first_err.expect("at least one angle was tried")),
    };
    Ok(TrackedBraid {
        word,
        kind,
        samples: path.points.len(),
        min_separation: path.min_separation,
        radius,
        theta,
        transversality: cr.transversality,
        root_permutation,
        warnings: cr.warnings,
    })
}

fn check_radius(eps: f64) -> Result<(), MonodromyError> {
    if eps.is_finite() && eps > 0.0 {
        Ok(())
    } else {
        Err(MonodromyError::BadRadius(eps))
    }
}

/// Braid traced by `w(t)` over `t^m = ε·e^{iφ}`, `φ ∈ [0, 2π]`. On a
/// collision the radius is halved, up to `cfg.radius_retries` times.
pub fn track_parametric(branch: &BranchParam, eps: f64, cfg: &TrackConfig) -> Result<TrackedBraid, MonodromyError> {
    check_radius(eps)?;
    let mut terms = vec![(branch.n(), Complex64::new(1.0, 0.0))];
    for (&e, c) in branch.coeffs() {
        let (re, im) = c.to_f64_parts();
        terms.push((e, Complex64::new(re, im)));
    }
    let m = branch.m() as usize;
    let mut radius = eps;
    let mut warnings = Vec::new();
    for attempt in 0..=cfg.radius_retries {
        let source = Source::Branch { m, terms: terms.clone(), t_radius: radius.powf(1.0 / m as f64) };
        match run(&source, radius, FibreKind::Branch, cfg) {
            Ok(mut t) => {
                warnings.append(&mut t.warnings);
                t.warnings = warnings;
                return Ok(t);
            }
            Err(e @ (MonodromyError::Collision { .. } | MonodromyError::Degenerate { .. }))
                if attempt < cfg.radius_retries =>
            {
                warnings.push(format!("{e}; retrying at radius {}", radius / 2.0));
                radius /= 2.0;
            }
            Err(e) => return Err(e),
        }
    }
    unreachable!("the last attempt always returns")
}

/// Braid traced by the roots of `f(ε·e^{iφ}, w)`, `φ ∈ [0, 2π]`.
pub fn track_polynomial(curve: &PolyCurve, eps: f64, cfg: &TrackConfig) -> Result<TrackedBraid, MonodromyError> {
    check_radius(eps)?;
    curve.check_no_pole(eps)?;
    run(&Source::Poly { curve, radius: eps }, eps, FibreKind::Polynomial, cfg)
}

/// Outcome of [`positivity_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositivityReport {
    pub positive_crossings: usize,
    pub negative_crossings: usize,
    /// Present for branch runs, whose braids must use every generator.
    pub strictly_positive: Option<bool>,
}

impl PositivityReport {
    pub fn all_positive(&self) -> bool {
        self.negative_crossings == 0
    }

    pub fn passed(&self) -> bool {
        self.all_positive() && self.strictly_positive != Some(false)
    }
}

/// Counts crossing signs. For a run centred on a singularity every
/// crossing must be positive; a negative one is returned as an error.
pub fn positivity_check(t: &TrackedBraid, from_singularity: bool) -> Result<PositivityReport, MonodromyError> {
    let letters = t.word.letters();
    let report = PositivityReport {
        positive_crossings: letters.iter().filter(|&&l| l > 0).count(),
        negative_crossings: letters.iter().filter(|&&l| l < 0).count(),
        strictly_positive: (t.kind == FibreKind::Branch).then(|| t.word.is_strictly_positive()),
    };
    if from_singularity && !report.all_positive() {
        return Err(MonodromyError::NegativeCrossing { count: report.negative_crossings });
    }
    Ok(report)
}
