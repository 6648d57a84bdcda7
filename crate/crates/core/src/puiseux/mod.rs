//! Parametrized branches `z = t^m, w = t^n + c_{n+1} t^{n+1} + … + c_N t^N`
//! and their links.
//!
//! The link of a branch is an iterated torus knot `O{p₁,q₁; …; p_r,q_r}`.
//! The `p`s are read off the drops of the covering degrees `g(k)` of the
//! truncations; the `q`s follow from [`next_cabling_coefficient`]. Only the
//! support of the coefficients matters here, the exact values are kept for
//! numerical tracking.

mod gaussian;
mod parse;

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use gaussian::{parse_rational, GaussianRational};

use crate::braid::{cable_braid, fiber_genus, torus_braid, BraidWord, InvariantBattery};
use crate::error::{BraidError, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BranchError {
    #[error("need n > m ≥ 1, got m = {m}, n = {n}")]
    BadExponents { m: u32, n: u32 },
    #[error("coefficient exponent {exponent} must exceed the leading exponent {n}")]
    CoefficientBelowLeading { exponent: u32, n: u32 },
    #[error("branch is not reduced: gcd of m and the support is {gcd}")]
    NotReduced { gcd: u32 },
    #[error("approximation index {k} outside 1..={max}")]
    ApproximationOutOfRange { k: usize, max: usize },
    #[error("cable cascade is empty")]
    EmptyCascade,
    #[error("cascade braid is not strictly positive")]
    NotPositive,
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("oracle failed: {0}")]
    Oracle(String),
    #[error("cascade disagrees with oracle: cascade {cascade:?}, oracle {oracle:?}")]
    OracleMismatch { cascade: Box<InvariantBattery>, oracle: Box<InvariantBattery> },
}

/// `z = t^m, w = t^n + Σ c_k t^k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawBranch", into = "RawBranch")]
pub struct BranchParam {
    m: u32,
    n: u32,
    coeffs: BTreeMap<u32, GaussianRational>,
}

#[derive(Serialize, Deserialize)]
struct RawTerm {
    exp: u32,
    #[serde(flatten)]
    coeff: GaussianRational,
}

#[derive(Serialize, Deserialize)]
struct RawBranch {
    m: u32,
    n: u32,
    #[serde(default)]
    coeffs: Vec<RawTerm>,
}

impl TryFrom<RawBranch> for BranchParam {
    type Error = BranchError;
    fn try_from(raw: RawBranch) -> Result<Self, BranchError> {
        BranchParam::new(raw.m, raw.n, raw.coeffs.into_iter().map(|t| (t.exp, t.coeff)))
    }
}

impl From<BranchParam> for RawBranch {
    fn from(b: BranchParam) -> Self {
        RawBranch {
            m: b.m,
            n: b.n,
            coeffs: b.coeffs.into_iter().map(|(exp, coeff)| RawTerm { exp, coeff }).collect(),
        }
    }
}

impl BranchParam {
    /// Zero coefficients are dropped; repeated exponents add up.
    pub fn new(
        m: u32,
        n: u32,
        coeffs: impl IntoIterator<Item = (u32, GaussianRational)>,
    ) -> Result<Self, BranchError> {
        if m < 1 || n <= m {
            return Err(BranchError::BadExponents { m, n });
        }
        let mut map: BTreeMap<u32, GaussianRational> = BTreeMap::new();
        for (k, c) in coeffs {
            if k <= n {
                return Err(BranchError::CoefficientBelowLeading { exponent: k, n });
            }
            let entry = map.entry(k).or_insert_with(GaussianRational::zero);
            entry.re += c.re;
            entry.im += c.im;
        }
        map.retain(|_, c| !c.is_zero());
        let branch = BranchParam { m, n, coeffs: map };
        let g = branch.support().fold(m, |g, e| g.gcd(&e));
        if g != 1 {
            return Err(BranchError::NotReduced { gcd: g });
        }
        Ok(branch)
    }

    /// A branch whose coefficients are all 1 on the given exponents.
    pub fn monomials(m: u32, n: u32, higher: &[u32]) -> Result<Self, BranchError> {
        Self::new(m, n, higher.iter().map(|&k| (k, GaussianRational::one())))
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &BTreeMap<u32, GaussianRational> {
        &self.coeffs
    }

    /// Exponents with nonzero coefficient in `w`, including `n`.
    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        std::iter::once(self.n).chain(self.coeffs.keys().copied())
    }

    /// The largest exponent `N`.
    pub fn top_exponent(&self) -> u32 {
        self.coeffs.keys().next_back().copied().unwrap_or(self.n)
    }

    /// Number of approximations, `N − n + 1`.
    pub fn approximation_count(&self) -> usize {
        (self.top_exponent() - self.n + 1) as usize
    }

    /// `g(1), …, g(N − n + 1)`: `g(k)` is the gcd of `m` and the support up
    /// to `t^{n+k−1}`.
    pub fn g_sequence(&self) -> Vec<u32> {
        let mut g = self.m.gcd(&self.n);
        let mut out = Vec::with_capacity(self.approximation_count());
        out.push(g);
        for e in self.n + 1..=self.top_exponent() {
            if self.coeffs.contains_key(&e) {
                g = g.gcd(&e);
            }
            out.push(g);
        }
        out
    }

    /// The branch covered by the `k`-th approximation: terms up to
    /// `t^{n+k−1}`, with every exponent divided by `g(k)`.
    pub fn approximation(&self, k: usize) -> Result<BranchParam, BranchError> {
        let max = self.approximation_count();
        if k < 1 || k > max {
            return Err(BranchError::ApproximationOutOfRange { k, max });
        }
        let g = self.g_sequence()[k - 1];
        let last = self.n + k as u32 - 1;
        let coeffs = self.coeffs.range(..=last).map(|(&e, c)| (e / g, c.clone()));
        BranchParam::new(self.m / g, self.n / g, coeffs)
    }

    /// Exponents `β_i` where the running gcd with `m` drops, paired with the
    /// gcd after the drop.
    pub fn characteristic_exponents(&self) -> Vec<(u32, u32)> {
        let mut g = self.m;
        let mut out = Vec::new();
        for e in self.support() {
            let next = g.gcd(&e);
            if next < g {
                out.push((e, next));
                g = next;
            }
        }
        out
    }

    pub fn cable_cascade(&self) -> CableCascade {
        let mut pairs = Vec::new();
        let mut prev: Option<(u64, u64, u64)> = None;
        let mut g_prev = u64::from(self.m);
        for (beta, g) in self.characteristic_exponents() {
            let (beta, g) = (u64::from(beta), u64::from(g));
            let p = g_prev / g;
            let numerator = beta / g;
            let q = match prev {
                None => numerator,
                Some((p_prev, n_prev, q_prev)) => next_cabling_coefficient(p_prev, n_prev, q_prev, p, numerator),
            };
            pairs.push((p, q));
            prev = Some((p, numerator, q));
            g_prev = g;
        }
        CableCascade { pairs }
    }

    /// The strictly positive braid of the link, on `m` strands.
    pub fn cascade_braid(&self) -> Result<BraidWord, BranchError> {
        self.cable_cascade().braid()
    }

    /// `μ = e − m + 1`, the first Betti number of the fibre of the closed
    /// cascade braid.
    pub fn milnor_number(&self) -> Result<i64, BranchError> {
        let braid = self.cascade_braid()?;
        Ok(braid.exponent_sum() - i64::from(self.m) + 1)
    }

    /// Genus of the fibre surface, `μ/2`.
    pub fn fiber_genus(&self) -> Result<i64, BranchError> {
        let braid = self.cascade_braid()?;
        Ok(fiber_genus(i64::from(self.m), braid.exponent_sum(), 1)?)
    }

    /// The cascade, after checking its braid against `oracle` on the full
    /// invariant battery.
    pub fn validated_cascade<O: BraidOracle>(&self, oracle: &O) -> Result<CableCascade, BranchError> {
        let cascade = self.cable_cascade();
        let ours = cascade.braid()?.closure_invariants().battery();
        let theirs = oracle.closure_battery(self).map_err(|e| BranchError::Oracle(e.to_string()))?;
        if ours != theirs {
            return Err(BranchError::OracleMismatch { cascade: Box::new(ours), oracle: Box::new(theirs) });
        }
        Ok(cascade)
    }
}

/// The next cabling coefficient of the cascade.
///
/// With `g_i` the gcd after the `i`-th characteristic exponent `β_i`,
/// `p_i = g_{i−1}/g_i` and `n_i = β_i/g_i`, the knot is the
/// `(p_{i+1}, q_{i+1})` cable (Seifert framing) of the previous one, where
///
/// ```text
/// q_1 = n_1,   q_{i+1} = n_{i+1} − n_i·p_{i+1} + p_i·p_{i+1}·q_i.
/// ```
///
/// The first two terms are the Newton pair of the new level; the last
/// is the linking it inherits by running `p_{i+1}` times around the
/// previous companion, which is itself a `p_i`-fold cover of its core.
pub fn next_cabling_coefficient(p_prev: u64, n_prev: u64, q_prev: u64, p: u64, numerator: u64) -> u64 {
    numerator - n_prev * p + p_prev * p * q_prev
}

/// `O{p₁,q₁; …; p_r,q_r}`: a torus knot followed by successive cables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CableCascade {
    pairs: Vec<(u64, u64)>,
}

impl CableCascade {
    /// Pairs with `p = 1` are dropped since they do not change the knot.
    pub fn new(pairs: impl IntoIterator<Item = (u64, u64)>) -> Result<Self, BranchError> {
        let mut kept = Vec::new();
        for (p, q) in pairs {
            if p < 1 || q < 1 || p.gcd(&q) != 1 {
                return Err(BraidError::NotCoprime { p: p as i64, q: q as i64 }.into());
            }
            if p > 1 {
                kept.push((p, q));
            }
        }
        Ok(CableCascade { pairs: kept })
    }

    pub fn pairs(&self) -> &[(u64, u64)] {
        &self.pairs
    }

    pub fn strands(&self) -> u64 {
        self.pairs.iter().map(|&(p, _)| p).product()
    }

    /// Torus braid of the first pair, cabled by the rest.
    pub fn braid(&self) -> Result<BraidWord, BranchError> {
        let (&(p, q), rest) = self.pairs.split_first().ok_or(BranchError::EmptyCascade)?;
        let mut braid = torus_braid(p as i64, q as i64)?;
        for &(p, q) in rest {
            braid = cable_braid(&braid, p as i64, q as i64)?;
        }
        if !braid.is_strictly_positive() {
            return Err(BranchError::NotPositive);
        }
        Ok(braid)
    }
}

impl std::fmt::Display for CableCascade {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|(p, q)| format!("{p},{q}")).collect();
        write!(f, "O{{{}}}", parts.join("; "))
    }
}

/// An independent source of the closed braid of a branch, such as
/// numerical tracking of its fibre.
pub trait BraidOracle {
    type Error: std::fmt::Display;
    fn closure_battery(&self, branch: &BranchParam) -> Result<InvariantBattery, Self::Error>;
}
