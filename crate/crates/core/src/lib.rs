//! Bound states of the quasi-relativistic harmonic oscillator.
//!
//! In the rescaled momentum representation the radial problem carries the
//! square-root anharmonic potential `V(q) = (sqrt(1 + α²q²) − 1)/α²`. This
//! crate computes its nodeless eigenvalues three ways:
//!
//! - [`pslet`]: a perturbation series in `1/l̄`, with `l̄ = l − β` a shifted
//!   angular momentum, whose coefficients come from an order-by-order
//!   solution of the Riccati equation for the logarithmic derivative;
//! - [`pade`]: `[N, N]` and `[N, N+1]` Padé resummation of that series;
//! - [`oracle`]: direct Numerov integration of the radial equation.
//!
//! Energies are reported as `ε = 2E/(ħω)`, so the harmonic limit is `2l + 3`.

pub mod error;
pub mod oracle;
pub mod pade;
pub mod potential;
pub mod pslet;
pub mod roots;
pub mod tables;

/// Working floating-point type.
pub type Real = f64;

pub use error::{Error, Result};
pub use oracle::{dni_eigenvalue, OracleConfig, OracleResult};
pub use pade::{build_pade, pade_energy, PadeApproximant};
pub use potential::{PotentialModel, TaylorJet};
pub use pslet::{
    energy_series, riccati_recursion, solve_q0, wavefunction_eval, EnergySeries, PsletContext,
    PsletSolution, RiccatiTables,
};
