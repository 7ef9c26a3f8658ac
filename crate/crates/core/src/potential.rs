//! Square-root anharmonic oscillator in the rescaled momentum coordinate,
//!
//! ```text
//! V(q) = (sqrt(1 + α² q²) − 1) / α²
//! ```
//!
//! with the harmonic oscillator `q²/2` recovered at `α = 0`.

use crate::error::{Error, Result};
use crate::Real;

/// Default derivative depth. The Riccati recursion at energy order `n`
/// needs derivatives through `2n + 4`.
pub const DEFAULT_MAX_ORDER: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialModel {
    alpha: Real,
    max_order: usize,
}

impl PotentialModel {
    pub fn new(alpha: Real) -> Result<Self> {
        Self::with_max_order(alpha, DEFAULT_MAX_ORDER)
    }

    pub fn with_max_order(alpha: Real, max_order: usize) -> Result<Self> {
        if !alpha.is_finite() || alpha < 0.0 {
            return Err(Error::Domain(format!("anharmonicity must be finite and >= 0, got {alpha}")));
        }
        if max_order < 12 {
            return Err(Error::Capability(format!("max_order must be at least 12, got {max_order}")));
        }
        Ok(Self { alpha, max_order })
    }

    pub fn alpha(&self) -> Real {
        self.alpha
    }

    pub fn max_order(&self) -> usize {
        self.max_order
    }

    pub fn is_harmonic(&self) -> bool {
        self.alpha == 0.0
    }

    /// V(q). Uses the rationalised form `q² / (sqrt(1 + α²q²) + 1)`, which is
    /// algebraically identical and free of cancellation for small `αq`.
    pub fn eval(&self, q: Real) -> Result<Real> {
        if q.is_nan() || q < 0.0 {
            return Err(Error::Domain(format!("potential evaluated at q = {q}")));
        }
        Ok(self.eval_unchecked(q))
    }

    pub(crate) fn eval_unchecked(&self, q: Real) -> Real {
        if self.is_harmonic() {
            return 0.5 * q * q;
        }
        let a2 = self.alpha * self.alpha;
        q * q / ((1.0 + a2 * q * q).sqrt() + 1.0)
    }

    /// Taylor jet of V about `q0` through derivative order `order`.
    ///
    /// With `s = 1 + α²q0²` and `τ(δ) = (2 q0 δ + δ²)/s`, the identity
    /// `sqrt(1 + α²τ) − 1 = α² g(δ)` gives the recurrence
    /// `g_n = (τ_n − α² Σ_{k=1}^{n-1} g_k g_{n-k}) / 2`, and
    /// `V(q0 + δ) = V(q0) + sqrt(s)·g(δ)`. No division by α occurs, so the
    /// same path is exact at α = 0.
    pub fn taylor_jet(&self, q0: Real, order: usize) -> Result<TaylorJet> {
        if !(q0.is_finite() && q0 > 0.0) {
            return Err(Error::Domain(format!("jet center must be positive, got {q0}")));
        }
        if order > self.max_order {
            return Err(Error::Capability(format!(
                "derivative order {order} exceeds supported maximum {}",
                self.max_order
            )));
        }
        let a2 = self.alpha * self.alpha;
        let s = 1.0 + a2 * q0 * q0;
        let root = s.sqrt();
        let tau1 = 2.0 * q0 / s;
        let tau2 = 1.0 / s;

        let mut g = vec![0.0; order + 1];
        for n in 1..=order {
            let tau_n = match n {
                1 => tau1,
                2 => tau2,
                _ => 0.0,
            };
            let conv: Real = (1..n).map(|k| g[k] * g[n - k]).sum();
            g[n] = 0.5 * (tau_n - a2 * conv);
        }

        let mut coeffs = Vec::with_capacity(order + 1);
        coeffs.push(self.eval_unchecked(q0));
        coeffs.extend(g.iter().skip(1).map(|gn| root * gn));
        Ok(TaylorJet { center: q0, coeffs })
    }
}

/// Taylor coefficients `V⁽ⁿ⁾(q0)/n!` about `center`.
#[derive(Debug, Clone, PartialEq)]
pub struct TaylorJet {
    center: Real,
    coeffs: Vec<Real>,
}

impl TaylorJet {
    pub fn center(&self) -> Real {
        self.center
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `V⁽ⁿ⁾(q0)/n!`. Panics if `n` exceeds the jet order.
    pub fn taylor_coeff(&self, n: usize) -> Real {
        self.coeffs[n]
    }

    pub fn taylor_coeffs(&self) -> &[Real] {
        &self.coeffs
    }

    /// `dⁿV/dqⁿ` at the center.
    pub fn derivative(&self, n: usize) -> Real {
        let fact: Real = (1..=n).map(|k| k as Real).product();
        self.coeffs[n] * fact
    }

    /// Evaluates the Taylor polynomial truncated at `degree` at `q`.
    pub fn eval_polynomial(&self, q: Real, degree: usize) -> Real {
        let d = q - self.center;
        self.coeffs[..=degree.min(self.order())]
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * d + c)
    }
}
