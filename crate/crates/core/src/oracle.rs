//! Direct numerical integration of the radial equation,
//!
//! ```text
//! −ψ'' + [l(l+1)/q² + 2V(q)] ψ = ε ψ,
//! ```
//!
//! by two-sided Numerov shooting. This is the equation solved by the
//! expansion engine scaled to the reported normalisation, but it shares no
//! code path with it beyond evaluating `V`.

use crate::error::{Error, Result};
use crate::potential::PotentialModel;
use crate::roots;
use crate::Real;

/// Required `∫ κ dq` between the classical turning point and the outer
/// cutoff; `exp(−45)` is far below double precision.
const DECAY_EXPONENT: Real = 45.0;
const RESCALE: Real = 1e150;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    pub alpha: Real,
    pub l: u32,
    /// Outer cutoff; chosen from the decay requirement when `None`.
    pub q_max: Option<Real>,
    pub mesh_n: usize,
    /// Eigenvalue tolerance.
    pub tol: Real,
}

impl OracleConfig {
    pub fn new(alpha: Real, l: u32) -> Self {
        Self {
            alpha,
            l,
            q_max: None,
            mesh_n: 20_000,
            tol: 1e-12,
        }
    }

    pub fn with_mesh(mut self, mesh_n: usize) -> Self {
        self.mesh_n = mesh_n;
        self
    }

    pub fn with_q_max(mut self, q_max: Real) -> Self {
        self.q_max = Some(q_max);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleResult {
    /// Eigenvalue in the reported normalisation.
    pub energy: Real,
    pub nodes: usize,
    pub iterations: usize,
    /// Width of the final eigenvalue bracket.
    pub residual: Real,
    pub q_max: Real,
    pub matching_point: Real,
}

/// Ground state (no interior nodes) for the configured `α` and `l`.
pub fn dni_eigenvalue(cfg: &OracleConfig) -> Result<OracleResult> {
    if !cfg.alpha.is_finite() || cfg.alpha < 0.0 {
        return Err(Error::Domain(format!("anharmonicity must be finite and >= 0, got {}", cfg.alpha)));
    }
    let harmonic = (2 * cfg.l + 3) as Real;
    if cfg.alpha == 0.0 {
        return Ok(OracleResult {
            energy: harmonic,
            nodes: 0,
            iterations: 0,
            residual: 0.0,
            q_max: cfg.q_max.unwrap_or(0.0),
            matching_point: 0.0,
        });
    }
    if cfg.mesh_n < 100 {
        return Err(Error::Domain(format!("mesh of {} points is too coarse", cfg.mesh_n)));
    }
    let model = PotentialModel::new(cfg.alpha)?;
    let q_max = match cfg.q_max {
        Some(q) if q.is_finite() && q > 0.0 => q,
        Some(q) => return Err(Error::Domain(format!("invalid outer cutoff {q}"))),
        None => default_cutoff(&model, cfg.l, harmonic),
    };
    let shooter = Shooter::new(&model, cfg.l, q_max, cfg.mesh_n);

    // Node-count bisection isolates the ground state: no nodes below it, at
    // least one above. The potential is bounded by the harmonic one, so the
    // ground state lies below 2l + 3.
    let (mut lo, mut hi) = (0.0, harmonic);
    if shooter.count_nodes(hi) == 0 {
        return Err(Error::Bracket { lo, hi });
    }
    let mut iterations = 0;
    let coarse = 1e-4 * harmonic;
    while hi - lo > coarse {
        let mid = 0.5 * (lo + hi);
        if shooter.count_nodes(mid) == 0 {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }

    let m = shooter.matching_index(0.5 * (lo + hi));
    let defect = |e: Real| shooter.matching_defect(e, m).0;
    let root = roots::brent(defect, lo, hi, 1e-2 * cfg.tol, 200)?;
    iterations += root.iterations;

    let (_, nodes) = shooter.matching_defect(root.x, m);
    if nodes != 0 {
        return Err(Error::WrongState(nodes));
    }
    if root.width >= cfg.tol {
        return Err(Error::NoConvergence { iterations });
    }
    Ok(OracleResult {
        energy: root.x,
        nodes,
        iterations,
        residual: root.width,
        q_max,
        matching_point: m as Real * shooter.h,
    })
}

/// Smallest cutoff with `∫ κ dq ≥ DECAY_EXPONENT` beyond the point where
/// `2V = energy`, which lies at or past the outer turning point.
fn default_cutoff(model: &PotentialModel, l: u32, energy: Real) -> Real {
    let a2 = model.alpha() * model.alpha();
    let start = (energy + a2 * energy * energy / 4.0).sqrt();
    let centrifugal = (l * (l + 1)) as Real;
    let kappa = |q: Real| {
        let g = centrifugal / (q * q) + 2.0 * model.eval_unchecked(q) - energy;
        g.max(0.0).sqrt()
    };
    let step = 1e-2 * start.max(1.0);
    let mut q = start;
    let mut integral = 0.0;
    while integral < DECAY_EXPONENT {
        integral += step * kappa(q + 0.5 * step);
        q += step;
    }
    q.max(start + 1.0)
}

struct Shooter {
    h: Real,
    n: usize,
    l: u32,
    /// `l(l+1)/q² + 2V(q)` on the grid; index 0 unused.
    base: Vec<Real>,
    /// First index of the outward integration.
    start: usize,
}

impl Shooter {
    fn new(model: &PotentialModel, l: u32, q_max: Real, n: usize) -> Self {
        let h = q_max / n as Real;
        let centrifugal = (l * (l + 1)) as Real;
        let base = (0..=n)
            .map(|i| {
                if i == 0 {
                    return 0.0;
                }
                let q = i as Real * h;
                centrifugal / (q * q) + 2.0 * model.eval_unchecked(q)
            })
            .collect();
        // keep h²·l(l+1)/(12 q²) small at the first Numerov step
        let start = ((centrifugal / 1.2).sqrt().ceil() as usize).max(1);
        Self { h, n, l, base, start }
    }

    fn numerov_factor(&self, i: usize, energy: Real) -> Real {
        1.0 - self.h * self.h * (self.base[i] - energy) / 12.0
    }

    /// Regular solution `q^(l+1)(1 + c₁q² + c₂q⁴)` near the origin.
    fn origin_series(&self, q: Real, energy: Real) -> Real {
        let l = self.l as Real;
        let c1 = -energy / (4.0 * l + 6.0);
        let c2 = (1.0 - energy * c1) / (8.0 * l + 20.0);
        let q2 = q * q;
        q.powi(self.l as i32 + 1) * (1.0 + q2 * (c1 + q2 * c2))
    }

    /// Numerov in summed form on `φ = fψ`: the second difference
    /// `h²(V_eff − ε)ψ` is accumulated into the first difference rather than
    /// into `φ` itself, which keeps rounding error independent of `h`.
    ///
    /// Walks `path` (consecutive indices, either direction) starting from the
    /// values at its first two entries and returns `(φ_last, φ_last − φ_prev,
    /// nodes)`.
    fn march(
        &self,
        energy: Real,
        path: impl Iterator<Item = usize>,
        psi0: Real,
        psi1: Real,
    ) -> (Real, Real, usize) {
        let h2 = self.h * self.h;
        let mut path = path;
        let i0 = path.next().expect("path has two points");
        let i1 = path.next().expect("path has two points");
        let phi0 = self.numerov_factor(i0, energy) * psi0;
        let mut phi = self.numerov_factor(i1, energy) * psi1;
        let mut delta = phi - phi0;
        let mut psi = psi1;
        let mut cur = i1;
        let mut nodes = 0;
        for next in path {
            delta += h2 * (self.base[cur] - energy) * psi;
            phi += delta;
            let new_psi = phi / self.numerov_factor(next, energy);
            if new_psi.signum() != psi.signum() && new_psi != 0.0 {
                nodes += 1;
            }
            psi = new_psi;
            cur = next;
            if phi.abs() > RESCALE {
                phi /= RESCALE;
                delta /= RESCALE;
                psi /= RESCALE;
            }
        }
        (phi, delta, nodes)
    }

    /// Outward from the origin to `stop`: `(φ_stop, φ_stop − φ_{stop−1}, nodes)`.
    fn outward(&self, energy: Real, stop: usize) -> (Real, Real, usize) {
        let i0 = self.start;
        let psi0 = self.origin_series(i0 as Real * self.h, energy);
        let psi1 = self.origin_series((i0 + 1) as Real * self.h, energy);
        self.march(energy, i0..=stop, psi0, psi1)
    }

    /// Inward from the decaying tail to `stop`: `(φ_stop, φ_stop − φ_{stop+1}, nodes)`.
    fn inward(&self, energy: Real, stop: usize) -> (Real, Real, usize) {
        let n = self.n;
        let kappa = |i: usize| (self.base[i] - energy).max(0.0).sqrt();
        // WKB ratio ψ_{n−1}/ψ_n = sqrt(κ_n/κ_{n−1}) · exp(h κ_mid)
        let k_mid = 0.5 * (kappa(n) + kappa(n - 1));
        let psi1 = (kappa(n) / kappa(n - 1)).sqrt() * (self.h * k_mid).exp();
        self.march(energy, (stop..=n).rev(), 1.0, psi1)
    }

    fn count_nodes(&self, energy: Real) -> usize {
        self.outward(energy, self.n).2
    }

    /// Outermost grid index inside the classically allowed region.
    fn matching_index(&self, energy: Real) -> usize {
        let lo = self.start + 2;
        let hi = self.n - 3;
        (lo..=hi)
            .rev()
            .find(|&i| self.base[i] <= energy)
            .unwrap_or(self.n / 2)
            .clamp(lo, hi)
    }

    /// Mismatch of `(φ_{m+1} − φ_m)/(h φ_m)` between the two solutions (the
    /// factors `f` are common to both), and the node count of the joined
    /// function.
    fn matching_defect(&self, energy: Real, m: usize) -> (Real, usize) {
        let (out_next, out_delta, out_nodes) = self.outward(energy, m + 1);
        let (in_m, in_delta, in_nodes) = self.inward(energy, m);
        let defect = (out_delta / (out_next - out_delta) + in_delta / in_m) / self.h;
        (defect, out_nodes + in_nodes)
    }
}
