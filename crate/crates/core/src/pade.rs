//! `[N, M]` Padé approximants and their use on the shifted-l energy series.
//!
//! The energy series is resummed in `u = 1/l̄` after removing the leading
//! `l̄²ε⁽⁻²⁾` term:
//!
//! ```text
//! ε[N, M] = l̄² ε⁽⁻²⁾ + l̄ · P_N^M(u),   P ≈ ε⁽⁻¹⁾ + ε⁽⁰⁾u + ε⁽¹⁾u² + …
//! ```
//!
//! so the `[4, 5]` approximant consumes exactly `ε⁽⁻¹⁾ … ε⁽⁸⁾`.

use crate::error::{Error, Result};
use crate::pslet::{EnergySeries, PsletContext};
use crate::Real;

const CONDITION_LIMIT: Real = 1e14;
const POLE_GRID: usize = 64;
const DOUBLET_TOL: Real = 1e-10;

/// Below this anharmonicity the series is polynomial to rounding and the
/// Padé system is singular; the truncated sum is returned instead.
pub const HARMONIC_FALLBACK_ALPHA: Real = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct PadeApproximant {
    /// Numerator coefficients, ascending powers, length `N + 1`.
    pub num: Vec<Real>,
    /// Denominator coefficients, ascending powers, `den[0] = 1`, length `M + 1`.
    pub den: Vec<Real>,
    /// 1-norm condition number of the denominator system (1 when `M = 0`).
    pub condition: Real,
}

impl PadeApproximant {
    pub fn numerator_degree(&self) -> usize {
        self.num.len() - 1
    }

    pub fn denominator_degree(&self) -> usize {
        self.den.len() - 1
    }

    pub fn eval(&self, u: Real) -> Real {
        horner(&self.num, u) / horner(&self.den, u)
    }

    /// Maclaurin coefficients of `num/den` through `order`.
    pub fn expand(&self, order: usize) -> Vec<Real> {
        let mut out = vec![0.0; order + 1];
        for i in 0..=order {
            let mut c = self.num.get(i).copied().unwrap_or(0.0);
            for j in 1..self.den.len().min(i + 1) {
                c -= self.den[j] * out[i - j];
            }
            out[i] = c;
        }
        out
    }

    /// Screens `(0, u_max]` for sign changes of the denominator and polishes
    /// each root found. A root whose residue term `r/(u_max − u*)` is below
    /// `DOUBLET_TOL` of the approximant's magnitude at `u_max` is a cancelled
    /// pole-zero pair and is tolerated; any other root is an error.
    pub fn check_poles(&self, u_max: Real) -> Result<()> {
        let den = |u: Real| horner(&self.den, u);
        let slope: Vec<Real> = self.den.iter().enumerate().skip(1).map(|(j, c)| j as Real * c).collect();
        let magnitude = horner(&self.num.iter().map(|c| c.abs()).collect::<Vec<_>>(), u_max)
            .max(self.eval(u_max).abs());
        let mut prev_u = 0.0;
        let mut prev = den(0.0);
        for i in 1..=POLE_GRID {
            let u = u_max * i as Real / POLE_GRID as Real;
            let cur = den(u);
            if cur == 0.0 {
                return Err(Error::Pole(u));
            }
            if cur.signum() != prev.signum() {
                let root = crate::roots::brent(den, prev_u, u, 1e-15, 200)?.x;
                let residue = horner(&self.num, root) / horner(&slope, root);
                let contribution = (residue / (u_max - root)).abs();
                let tolerated = contribution.partial_cmp(&(DOUBLET_TOL * magnitude));
                if !matches!(tolerated, Some(std::cmp::Ordering::Less | std::cmp::Ordering::Equal)) {
                    return Err(Error::Pole(root));
                }
            }
            prev_u = u;
            prev = cur;
        }
        Ok(())
    }
}

fn horner(coeffs: &[Real], x: Real) -> Real {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

/// Builds the `[n, m]` approximant of the series `coeffs[0] + coeffs[1] u + …`.
pub fn build_pade(coeffs: &[Real], n: usize, m: usize) -> Result<PadeApproximant> {
    if coeffs.len() < n + m + 1 {
        return Err(Error::Capability(format!(
            "[{n}, {m}] approximant needs {} coefficients, got {}",
            n + m + 1,
            coeffs.len()
        )));
    }
    let c = |k: isize| if k < 0 { 0.0 } else { coeffs[k as usize] };

    let mut den = vec![1.0];
    let mut condition = 1.0;
    if m > 0 {
        // Σ_{j=1}^{m} b_j c_{n+i−j} = −c_{n+i},  i = 1..m
        let mut a = vec![vec![0.0; m]; m];
        let mut rhs = vec![0.0; m];
        for i in 1..=m {
            for j in 1..=m {
                a[i - 1][j - 1] = c(n as isize + i as isize - j as isize);
            }
            rhs[i - 1] = -c((n + i) as isize);
        }
        let (solution, cond) = solve_dense(a, rhs)?;
        den.extend(solution);
        condition = cond;
    }
    let num = (0..=n)
        .map(|i| (0..=i.min(m)).map(|j| den[j] * coeffs[i - j]).sum())
        .collect();
    Ok(PadeApproximant { num, den, condition })
}

/// Gauss-Jordan elimination with partial pivoting. Returns the solution and
/// the 1-norm condition number; rejects systems above `CONDITION_LIMIT`.
fn solve_dense(a: Vec<Vec<Real>>, rhs: Vec<Real>) -> Result<(Vec<Real>, Real)> {
    let n = rhs.len();
    let norm_a = one_norm(&a);
    // Factor [A | I | rhs] so the inverse comes out for the condition estimate.
    let mut aug: Vec<Vec<Real>> = a
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            row.extend((0..n).map(|j| if i == j { 1.0 } else { 0.0 }));
            row.push(rhs[i]);
            row
        })
        .collect();
    let width = 2 * n + 1;

    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&x, &y| aug[x][col].abs().total_cmp(&aug[y][col].abs()))
            .expect("non-empty");
        if aug[pivot][col] == 0.0 || !aug[pivot][col].is_finite() {
            return Err(Error::Degenerate(format!("zero pivot in column {col}")));
        }
        aug.swap(col, pivot);
        let p = aug[col][col];
        for x in &mut aug[col][col..width] {
            *x /= p;
        }
        let pivot_row = aug[col].clone();
        for (i, row) in aug.iter_mut().enumerate() {
            let f = row[col];
            if i == col || f == 0.0 {
                continue;
            }
            for (x, &pk) in row[col..width].iter_mut().zip(&pivot_row[col..width]) {
                *x -= f * pk;
            }
        }
    }

    let inv: Vec<Vec<Real>> = aug.iter().map(|r| r[n..2 * n].to_vec()).collect();
    let cond = norm_a * one_norm(&inv);
    if !cond.is_finite() || cond > CONDITION_LIMIT {
        return Err(Error::Degenerate(format!("condition number {cond:e}")));
    }
    Ok((aug.iter().map(|r| r[2 * n]).collect(), cond))
}

fn one_norm(a: &[Vec<Real>]) -> Real {
    let n = a.len();
    (0..n)
        .map(|j| a.iter().map(|row| row[j].abs()).sum::<Real>())
        .fold(0.0, Real::max)
}

/// Coefficients `ε⁽⁻¹⁾, ε⁽⁰⁾, …` resummed by [`pade_energy`]. The first one
/// vanishes by the choice of β and enters as an exact zero.
pub fn resummed_coefficients(series: &EnergySeries) -> Vec<Real> {
    std::iter::once(0.0).chain(series.eps.iter().copied()).collect()
}

/// `normalization · (l̄²ε⁽⁻²⁾ + l̄·P_N^M(1/l̄))`.
pub fn pade_energy(ctx: &PsletContext, series: &EnergySeries, n: usize, m: usize) -> Result<Real> {
    let coeffs = resummed_coefficients(series);
    if coeffs.len() < n + m + 1 {
        return Err(Error::Capability(format!(
            "[{n}, {m}] approximant needs energy order {}, series has {}",
            n + m - 1,
            series.eps.len().saturating_sub(1)
        )));
    }
    let lbar = series.lbar;
    let leading = lbar * lbar * series.eps_m2;
    if ctx.alpha < HARMONIC_FALLBACK_ALPHA {
        let tail: Real = coeffs[..=n + m]
            .iter()
            .enumerate()
            .map(|(k, c)| c * lbar.powi(1 - k as i32))
            .sum();
        return Ok(series.normalization_factor * (leading + tail));
    }
    let approx = build_pade(&coeffs, n, m)?;
    let u = lbar.recip();
    approx.check_poles(u)?;
    Ok(series.normalization_factor * (leading + lbar * approx.eval(u)))
}
