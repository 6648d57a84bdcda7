use std::collections::BTreeMap;

use braidcurve_core::{GaussianRational, ParseError};
use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::MonodromyError;

/// `c · z^zi · w^wj`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Monomial {
    pub zi: u32,
    pub wj: u32,
    #[serde(flatten)]
    pub coeff: GaussianRational,
}

/// `f(z, w) = f₀(z) wⁿ + f₁(z) wⁿ⁻¹ + … + fₙ(z)` with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawPoly", into = "RawPoly")]
pub struct PolyCurve {
    /// `coeffs[j]` is the polynomial in `z` multiplying `w^j`, as a map
    /// from `z`-exponent to coefficient.
    coeffs: Vec<BTreeMap<u32, GaussianRational>>,
}

#[derive(Serialize, Deserialize)]
struct RawPoly {
    monomials: Vec<Monomial>,
}

impl TryFrom<RawPoly> for PolyCurve {
    type Error = MonodromyError;
    fn try_from(raw: RawPoly) -> Result<Self, MonodromyError> {
        PolyCurve::new(raw.monomials)
    }
}

impl From<PolyCurve> for RawPoly {
    fn from(p: PolyCurve) -> Self {
        RawPoly { monomials: p.monomials() }
    }
}

impl PolyCurve {
    pub fn new(monomials: impl IntoIterator<Item = Monomial>) -> Result<Self, MonodromyError> {
        let mut coeffs: Vec<BTreeMap<u32, GaussianRational>> = Vec::new();
        for m in monomials {
            let j = m.wj as usize;
            if coeffs.len() <= j {
                coeffs.resize(j + 1, BTreeMap::new());
            }
            let entry = coeffs[j].entry(m.zi).or_insert_with(GaussianRational::zero);
            entry.re += m.coeff.re;
            entry.im += m.coeff.im;
        }
        for c in &mut coeffs {
            c.retain(|_, v| !v.is_zero());
        }
        while coeffs.last().is_some_and(BTreeMap::is_empty) {
            coeffs.pop();
        }
        if coeffs.len() < 2 {
            return Err(MonodromyError::ConstantInW);
        }
        Ok(PolyCurve { coeffs })
    }

    /// Builds from `(zi, wj, coefficient)` triples with integer coefficients.
    pub fn from_integer_terms(terms: &[(u32, u32, i64)]) -> Result<Self, MonodromyError> {
        Self::new(terms.iter().map(|&(zi, wj, c)| Monomial { zi, wj, coeff: GaussianRational::from_integer(c) }))
    }

    pub fn from_json(text: &str) -> Result<Self, MonodromyError> {
        serde_json::from_str(text).map_err(|e| ParseError(format!("polynomial JSON: {e}")).into())
    }

    pub fn monomials(&self) -> Vec<Monomial> {
        let mut out = Vec::new();
        for (j, poly) in self.coeffs.iter().enumerate() {
            for (&zi, c) in poly {
                out.push(Monomial { zi, wj: j as u32, coeff: c.clone() });
            }
        }
        out
    }

    /// Degree `n` in `w`.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `f₀(z)` as `(exponent, coefficient)` pairs.
    pub fn leading(&self) -> &BTreeMap<u32, GaussianRational> {
        &self.coeffs[self.degree()]
    }

    /// Coefficients of `f(z, ·)`, constant term first.
    pub fn coefficients_at(&self, z: Complex64) -> Vec<Complex64> {
        self.coeffs.iter().map(|poly| eval_z(poly, z)).collect()
    }

    /// Errors if `f₀` vanishes in the closed disk `|z| ≤ radius·(1 + 10⁻⁶)`.
    pub fn check_no_pole(&self, radius: f64) -> Result<(), MonodromyError> {
        let lead = self.leading();
        let top = lead.keys().next_back().copied().unwrap_or(0) as usize;
        if top == 0 {
            return Ok(());
        }
        let mut dense = vec![Complex64::new(0.0, 0.0); top + 1];
        for (&e, c) in lead {
            let (re, im) = c.to_f64_parts();
            dense[e as usize] = Complex64::new(re, im);
        }
        for z in polynomial_roots(&dense)? {
            if z.norm() <= radius * (1.0 + 1e-6) {
                return Err(MonodromyError::Pole { re: z.re, im: z.im });
            }
        }
        Ok(())
    }

    /// Roots of `f(z, ·)`.
    pub fn roots_at(&self, z: Complex64) -> Result<Vec<Complex64>, MonodromyError> {
        polynomial_roots(&self.coefficients_at(z))
    }
}

fn eval_z(poly: &BTreeMap<u32, GaussianRational>, z: Complex64) -> Complex64 {
    poly.iter()
        .map(|(&e, c)| {
            let (re, im) = c.to_f64_parts();
            Complex64::new(re, im) * z.powu(e)
        })
        .sum()
}

/// All roots of `Σ c_k x^k` (constant term first; top coefficient nonzero)
/// from the companion matrix, each polished by a few Newton steps.
pub fn polynomial_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>, MonodromyError> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    if lead.norm() == 0.0 {
        return Err(MonodromyError::RootSolver);
    }
    if n == 1 {
        return Ok(vec![-coeffs[0] / lead]);
    }
    let mut companion = DMatrix::<Complex64>::zeros(n, n);
    for i in 1..n {
        companion[(i, i - 1)] = Complex64::new(1.0, 0.0);
    }
    for i in 0..n {
        companion[(i, n - 1)] = -coeffs[i] / lead;
    }
    let eig = companion.eigenvalues().ok_or(MonodromyError::RootSolver)?;
    Ok(eig.iter().map(|&z| newton_polish(coeffs, z)).collect())
}

fn newton_polish(coeffs: &[Complex64], mut x: Complex64) -> Complex64 {
    for _ in 0..3 {
        let (mut p, mut dp) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
        for &c in coeffs.iter().rev() {
            dp = dp * x + p;
            p = p * x + c;
        }
        if dp.norm() == 0.0 {
            break;
        }
        let step = p / dp;
        if !step.is_finite() {
            break;
        }
        x -= step;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted(mut v: Vec<Complex64>) -> Vec<Complex64> {
        v.sort_by(|a, b| (a.re, a.im).partial_cmp(&(b.re, b.im)).unwrap());
        v
    }

    #[test]
    fn roots_of_cubic() {
        // (x − 1)(x − 2)(x + i)
        let i = Complex64::new(0.0, 1.0);
        let one = Complex64::new(1.0, 0.0);
        let c = [2.0 * i, 2.0 * one - 3.0 * i, -3.0 * one + i, one];
        let r = sorted(polynomial_roots(&c).unwrap());
        let expected = sorted(vec![one, 2.0 * one, -i]);
        for (a, b) in r.iter().zip(&expected) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn degree_and_json() {
        let json = r#"{"monomials": [{"zi": 0, "wj": 2, "re": "1", "im": "0"}, {"zi": 3, "wj": 0, "re": "-1"}]}"#;
        let f = PolyCurve::from_json(json).unwrap();
        assert_eq!(f.degree(), 2);
        let again = PolyCurve::from_json(&serde_json::to_string(&f).unwrap()).unwrap();
        assert_eq!(again, f);
        assert!(PolyCurve::from_integer_terms(&[(3, 0, 1)]).is_err());
    }

    #[test]
    fn pole_detection() {
        // (z − 1/2) w² − 1
        let f = PolyCurve::new([
            Monomial { zi: 1, wj: 2, coeff: GaussianRational::one() },
            Monomial { zi: 0, wj: 2, coeff: "-1/2".parse().unwrap() },
            Monomial { zi: 0, wj: 0, coeff: GaussianRational::from_integer(-1) },
        ])
        .unwrap();
        assert!(f.check_no_pole(0.25).is_ok());
        assert!(matches!(f.check_no_pole(0.75), Err(MonodromyError::Pole { .. })));
    }
}
