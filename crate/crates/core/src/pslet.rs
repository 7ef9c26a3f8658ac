//! Shifted-l expansion of the nodeless radial states.
//!
//! The radial equation is rewritten with `l̄ = l − β` and expanded about the
//! point `q0` that minimises the leading energy coefficient. The logarithmic
//! derivative of the wavefunction, `U'(x) = Σ_k w_k(x) l̄^(−k/2)`, then obeys
//! a Riccati equation that is solved order by order. At order `k`
//!
//! ```text
//! Ω x w_k − ½ w_k' = E_k − v_k + ½ Σ_{i=1}^{k−1} w_i w_{k−i}
//! ```
//!
//! which is triangular in descending powers of `x`; the `x⁰` row fixes the
//! energy constant `E_k`. Odd `k` carry no energy and even `k = 2j + 2`
//! produce `λ⁽ʲ⁾` (with `β(β+1)/2` folded into `E_2`).

use crate::error::{Error, Result};
use crate::potential::{PotentialModel, TaylorJet};
use crate::roots;
use crate::Real;

/// Energy order carried by default: `ε⁽⁰⁾ … ε⁽⁸⁾`, i.e. ten partial sums.
pub const DEFAULT_ENERGY_ORDER: usize = 8;

/// Largest supported energy order.
pub const MAX_ENERGY_ORDER: usize = 20;

/// Multiplier between the eigenvalue of the `½`-normalised radial equation
/// and the reported `ε = 2E/(ħω)`.
pub const NORMALIZATION_FACTOR: Real = 2.0;

const Q0_RESIDUAL_TOL: Real = 1e-12;

/// Solved expansion point and shift for one `(α, l)` pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsletContext {
    pub alpha: Real,
    pub l: u32,
    pub n_r: u32,
    pub q0: Real,
    pub omega: Real,
    pub beta: Real,
    pub lbar: Real,
    /// Scaling constant `Q`, equal to `l̄²`.
    pub q_scale: Real,
}

/// Ω(q0) for the square-root potential.
fn omega_at(alpha: Real, q0: Real) -> Real {
    let u = alpha * alpha * q0 * q0;
    ((4.0 + 3.0 * u) / (1.0 + u)).sqrt()
}

/// `q0² (1 + α²q0²)^(−1/4) − l − (1 + Ω)/2`; strictly increasing in `q0`.
fn q0_equation(alpha: Real, l: Real, q0: Real) -> Real {
    let u = alpha * alpha * q0 * q0;
    q0 * q0 * (1.0 + u).powf(-0.25) - l - 0.5 * (1.0 + omega_at(alpha, q0))
}

/// Solves for the expansion point of the nodeless state with angular
/// momentum `l`.
pub fn solve_q0(alpha: Real, l: u32) -> Result<PsletContext> {
    PsletContext::solve_state(alpha, l, 0)
}

impl PsletContext {
    pub fn solve(alpha: Real, l: u32) -> Result<Self> {
        Self::solve_state(alpha, l, 0)
    }

    /// Only `n_r = 0` is supported; the Riccati ansatz is nodeless.
    pub fn solve_state(alpha: Real, l: u32, n_r: u32) -> Result<Self> {
        if n_r != 0 {
            return Err(Error::Capability(format!(
                "only nodeless states (n_r = 0) are supported, got n_r = {n_r}"
            )));
        }
        if !alpha.is_finite() || alpha < 0.0 {
            return Err(Error::Domain(format!("anharmonicity must be finite and >= 0, got {alpha}")));
        }
        let lf = l as Real;

        let q0 = if alpha == 0.0 {
            (lf + 1.5).sqrt()
        } else {
            let f = |q: Real| q0_equation(alpha, lf, q);
            let (lo, hi) = roots::expand_upward(f, 1e-6, 1.0, 2.0, 1e8)?;
            let root = roots::brent(f, lo, hi, 1e-15 * hi.max(1.0), 200)?;
            root.x
        };

        let omega = omega_at(alpha, q0);
        let beta = -0.5 * (1.0 + omega);
        let lbar = lf - beta;
        let ctx = Self {
            alpha,
            l,
            n_r,
            q0,
            omega,
            beta,
            lbar,
            q_scale: lbar * lbar,
        };

        let residual = ctx.q0_residual();
        if residual.abs() >= Q0_RESIDUAL_TOL {
            return Err(Error::Invariant(format!(
                "expansion-point residual {residual:e} exceeds {Q0_RESIDUAL_TOL:e}"
            )));
        }
        if ctx.leading_curvature() <= 0.0 {
            return Err(Error::Invariant("leading energy coefficient is not at a minimum".into()));
        }
        Ok(ctx)
    }

    pub fn potential(&self) -> PotentialModel {
        PotentialModel::new(self.alpha).expect("alpha validated at construction")
    }

    pub fn q0_residual(&self) -> Real {
        q0_equation(self.alpha, self.l as Real, self.q0)
    }

    /// `ε⁽⁻²⁾(q) = 1/(2q²) + V(q)/Q` with `Q` held fixed.
    pub fn leading_coefficient_at(&self, q: Real) -> Real {
        0.5 / (q * q) + self.potential().eval_unchecked(q) / self.q_scale
    }

    /// Second derivative of `ε⁽⁻²⁾` at `q0`: `3/q0⁴ + V''(q0)/Q`.
    pub fn leading_curvature(&self) -> Real {
        let u = self.alpha * self.alpha * self.q0 * self.q0;
        let v2 = (1.0 + u).powf(-1.5);
        3.0 / self.q0.powi(4) + v2 / self.q_scale
    }

    /// Coefficient of `l̄` in the energy; vanishes by the choice of β.
    pub fn eps_minus_one(&self) -> Real {
        ((2.0 * self.beta + 1.0) / 2.0 + (self.n_r as Real + 0.5) * self.omega) / (self.q0 * self.q0)
    }

    /// `Λ₀ = l̄[½ + q0²V(q0)/Q] + (2β+1)/2 + β(β+1)/(2l̄)`.
    pub fn lambda_zero(&self) -> Real {
        let v = self.potential().eval_unchecked(self.q0);
        self.lbar * (0.5 + self.q0 * self.q0 * v / self.q_scale)
            + (2.0 * self.beta + 1.0) / 2.0
            + self.beta * (self.beta + 1.0) / (2.0 * self.lbar)
    }

    /// Maps `q` to the scaled coordinate `x = l̄^(1/2) (q − q0)/q0`.
    pub fn to_x(&self, q: Real) -> Real {
        self.lbar.sqrt() * (q - self.q0) / self.q0
    }
}

/// Dense polynomial, `coeffs[j]` multiplies `x^j`.
fn poly_mul_add(acc: &mut [Real], a: &[Real], b: &[Real], scale: Real) {
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0.0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            acc[i + j] += scale * ai * bj;
        }
    }
}

fn poly_eval(coeffs: &[Real], x: Real) -> Real {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

/// Order-by-order solution of the Riccati equation.
#[derive(Debug, Clone, PartialEq)]
pub struct RiccatiTables {
    omega: Real,
    beta: Real,
    /// `w[k]`: polynomial multiplying `l̄^(−k/2)` in `U'`.
    w: Vec<Vec<Real>>,
    /// Energy constant of each order (`E_0 = 0`).
    order_energy: Vec<Real>,
    /// `x^(n+2)` coefficient of `v⁽ⁿ⁾`; `b[1] = B₁`, `b[2] = B₂`.
    b: Vec<Real>,
    lambda: Vec<Real>,
}

impl RiccatiTables {
    /// Highest Riccati order `k` solved.
    pub fn max_k(&self) -> usize {
        self.w.len() - 1
    }

    pub fn energy_order(&self) -> usize {
        self.lambda.len() - 1
    }

    pub fn w(&self, k: usize) -> &[Real] {
        &self.w[k]
    }

    pub fn order_energy(&self, k: usize) -> Real {
        self.order_energy[k]
    }

    pub fn b(&self, n: usize) -> Real {
        self.b[n]
    }

    /// `λ₀⁽⁰⁾ … λ₀⁽ᴺ⁾`.
    pub fn lambda(&self) -> &[Real] {
        &self.lambda
    }

    /// Odd-power part of `w_n`, i.e. `U⁽ⁿ⁾`.
    pub fn u_poly(&self, n: usize) -> Vec<Real> {
        self.w[n]
            .iter()
            .enumerate()
            .map(|(j, &c)| if j % 2 == 1 { c } else { 0.0 })
            .collect()
    }

    /// Even-power part of `w_{n+1}`, i.e. `G⁽ⁿ⁾`.
    pub fn g_poly(&self, n: usize) -> Vec<Real> {
        self.w[n + 1]
            .iter()
            .enumerate()
            .map(|(j, &c)| if j % 2 == 0 { c } else { 0.0 })
            .collect()
    }

    /// `D_{m,n}`, coefficient of `x^(2m−1)` in `U⁽ⁿ⁾`. `D_{0,n}` is zero.
    pub fn d(&self, m: usize, n: usize) -> Real {
        if m == 0 {
            return 0.0;
        }
        self.w.get(n).and_then(|p| p.get(2 * m - 1)).copied().unwrap_or(0.0)
    }

    /// `C_{m,n}`, coefficient of `x^(2m)` in `G⁽ⁿ⁾`.
    pub fn c(&self, m: usize, n: usize) -> Real {
        self.w.get(n + 1).and_then(|p| p.get(2 * m)).copied().unwrap_or(0.0)
    }

    pub fn omega(&self) -> Real {
        self.omega
    }

    pub fn beta(&self) -> Real {
        self.beta
    }
}

/// Runs the recursion through energy order `energy_order` (λ⁽⁰⁾ … λ⁽ᴺ⁾),
/// i.e. Riccati orders `k ≤ 2N + 2`.
pub fn riccati_recursion(ctx: &PsletContext, jet: &TaylorJet, energy_order: usize) -> Result<RiccatiTables> {
    if energy_order > MAX_ENERGY_ORDER {
        return Err(Error::Capability(format!(
            "energy order {energy_order} exceeds supported maximum {MAX_ENERGY_ORDER}"
        )));
    }
    let k_max = 2 * energy_order + 2;
    if jet.order() < k_max + 2 {
        return Err(Error::Capability(format!(
            "energy order {energy_order} needs potential derivatives through {}, jet has {}",
            k_max + 2,
            jet.order()
        )));
    }
    if (jet.center() - ctx.q0).abs() > 1e-12 * ctx.q0 {
        return Err(Error::Domain("jet is not centered at the expansion point".into()));
    }

    let (omega, beta, q0, qs) = (ctx.omega, ctx.beta, ctx.q0, ctx.q_scale);
    let two_beta_one = 2.0 * beta + 1.0;
    let beta_beta = beta * (beta + 1.0);

    let b: Vec<Real> = (0..=k_max)
        .map(|n| {
            let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
            sign * (n as Real + 3.0) / 2.0 + q0.powi(n as i32 + 4) * jet.taylor_coeff(n + 2) / qs
        })
        .collect();

    let perturbation = |n: usize| -> Vec<Real> {
        let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
        let mut v = vec![0.0; n + 3];
        v[n] += sign * two_beta_one * (n as Real + 1.0) / 2.0;
        if n >= 2 {
            v[n - 2] += sign * beta_beta / 2.0 * (n as Real - 1.0);
        }
        v[n + 2] += b[n];
        v
    };

    let mut w: Vec<Vec<Real>> = Vec::with_capacity(k_max + 1);
    w.push(vec![0.0, -omega]);
    let mut order_energy = vec![0.0];

    for k in 1..=k_max {
        // r = −v_k + ½ Σ w_i w_{k−i}; degree k + 2
        let mut r: Vec<Real> = perturbation(k).into_iter().map(|c| -c).collect();
        for i in 1..k {
            poly_mul_add(&mut r, &w[i], &w[k - i], 0.5);
        }
        // Ω a_{p−1} − ½(p+1) a_{p+1} = r_p for p = k+2 … 1
        let mut a = vec![0.0; k + 4];
        for p in (1..=k + 2).rev() {
            a[p - 1] = (r[p] + 0.5 * (p as Real + 1.0) * a[p + 1]) / omega;
        }
        order_energy.push(-0.5 * a[1] - r[0]);
        a.truncate(k + 2);
        w.push(a);
    }

    let lambda = (0..=energy_order)
        .map(|j| {
            let e = order_energy[2 * j + 2];
            if j == 0 {
                e - beta_beta / 2.0
            } else {
                e
            }
        })
        .collect();

    Ok(RiccatiTables { omega, beta, w, order_energy, b, lambda })
}

/// Truncated energy series in powers of `1/l̄`.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergySeries {
    pub lbar: Real,
    pub eps_m2: Real,
    /// Computed coefficient of `l̄`; zero up to rounding.
    pub eps_m1: Real,
    /// `ε⁽⁰⁾ … ε⁽ᴺ⁾`.
    pub eps: Vec<Real>,
    pub normalization_factor: Real,
}

impl EnergySeries {
    /// Number of available partial sums (`K = 1 …`).
    pub fn max_terms(&self) -> usize {
        self.eps.len() + 1
    }

    /// Sum of the first `terms` terms, `l̄²ε⁽⁻²⁾ + ε⁽⁰⁾ + … + ε⁽ᴷ⁻²⁾/l̄^(K−2)`,
    /// in the reported normalisation.
    pub fn partial_sum(&self, terms: usize) -> Result<Real> {
        if terms == 0 || terms > self.max_terms() {
            return Err(Error::Capability(format!(
                "partial sum of {terms} terms requested, 1..={} available",
                self.max_terms()
            )));
        }
        let mut sum = self.lbar * self.lbar * self.eps_m2;
        let mut scale = 1.0;
        for e in &self.eps[..terms - 1] {
            sum += e * scale;
            scale /= self.lbar;
        }
        Ok(self.normalization_factor * sum)
    }

    pub fn partial_sums(&self) -> Vec<Real> {
        (1..=self.max_terms())
            .map(|k| self.partial_sum(k).expect("in range"))
            .collect()
    }

    /// Individual contributions `ε⁽ⁿ⁾/l̄ⁿ` in the reported normalisation.
    pub fn terms(&self) -> Vec<Real> {
        let mut out = vec![self.normalization_factor * self.lbar * self.lbar * self.eps_m2];
        let mut scale = 1.0;
        for e in &self.eps {
            out.push(self.normalization_factor * e * scale);
            scale /= self.lbar;
        }
        out
    }
}

pub fn energy_series(ctx: &PsletContext, tables: &RiccatiTables) -> Result<EnergySeries> {
    let q2 = ctx.q0 * ctx.q0;
    let eps_m2 = ctx.leading_coefficient_at(ctx.q0);
    let eps_m1 = ctx.eps_minus_one();
    if eps_m1.abs() > 1e-13 {
        return Err(Error::Invariant(format!("ε⁽⁻¹⁾ = {eps_m1:e} does not vanish")));
    }
    let beta_beta = ctx.beta * (ctx.beta + 1.0);
    let eps = tables
        .lambda()
        .iter()
        .enumerate()
        .map(|(n, &lam)| if n == 0 { (beta_beta / 2.0 + lam) / q2 } else { lam / q2 })
        .collect();
    Ok(EnergySeries {
        lbar: ctx.lbar,
        eps_m2,
        eps_m1,
        eps,
        normalization_factor: NORMALIZATION_FACTOR,
    })
}

/// Unnormalised nodeless wavefunction `exp(∫₀ˣ U')` with `U'` truncated
/// after Riccati order `order`.
pub fn wavefunction_eval(ctx: &PsletContext, tables: &RiccatiTables, x: Real, order: usize) -> Result<Real> {
    if order > tables.max_k() {
        return Err(Error::Capability(format!(
            "wavefunction order {order} exceeds table depth {}",
            tables.max_k()
        )));
    }
    let mut exponent = 0.0;
    let mut scale = 1.0;
    let step = ctx.lbar.sqrt().recip();
    for k in 0..=order {
        let integral: Vec<Real> = std::iter::once(0.0)
            .chain(tables.w(k).iter().enumerate().map(|(j, c)| c / (j as Real + 1.0)))
            .collect();
        exponent += scale * poly_eval(&integral, x);
        scale *= step;
    }
    Ok(exponent.exp())
}

/// Context, coefficient tables and energy series for one `(α, l)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PsletSolution {
    pub context: PsletContext,
    pub tables: RiccatiTables,
    pub series: EnergySeries,
}

impl PsletSolution {
    pub fn compute(alpha: Real, l: u32) -> Result<Self> {
        Self::with_order(alpha, l, DEFAULT_ENERGY_ORDER)
    }

    pub fn with_order(alpha: Real, l: u32, energy_order: usize) -> Result<Self> {
        let context = PsletContext::solve(alpha, l)?;
        let jet = context.potential().taylor_jet(context.q0, 2 * energy_order + 4)?;
        let tables = riccati_recursion(&context, &jet, energy_order)?;
        let series = energy_series(&context, &tables)?;
        Ok(Self { context, tables, series })
    }

    pub fn partial_sum(&self, terms: usize) -> Result<Real> {
        self.series.partial_sum(terms)
    }
}
