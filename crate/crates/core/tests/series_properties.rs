use pslet_core::tables::PADE_ORDERS;
use pslet_core::pslet::DEFAULT_ENERGY_ORDER;
use pslet_core::{pade_energy, solve_q0, wavefunction_eval, Error, PsletContext, PsletSolution};

const ALPHAS: [f64; 8] = [0.01, 0.05, 0.1, 0.2, 0.25, 1.0 / 3.0, 0.5, 2.0];

fn potential(alpha: f64, q: f64) -> f64 {
    if alpha == 0.0 {
        0.5 * q * q
    } else {
        ((1.0 + alpha * alpha * q * q).sqrt() - 1.0) / (alpha * alpha)
    }
}

#[test]
fn expansion_point_solves_its_equation() {
    for alpha in [0.0, 0.01, 0.5, 2.0, 10.0] {
        for l in [0, 1, 7, 50] {
            let ctx = solve_q0(alpha, l).unwrap();
            let u = alpha * alpha * ctx.q0 * ctx.q0;
            let omega = ((4.0 + 3.0 * u) / (1.0 + u)).sqrt();
            let lhs = l as f64 + 0.5 * (1.0 + omega);
            let rhs = ctx.q0 * ctx.q0 * (1.0 + u).powf(-0.25);
            assert!((lhs - rhs).abs() < 1e-12, "alpha={alpha} l={l}");
            assert!((ctx.omega - omega).abs() < 1e-15);
            assert!(ctx.omega > 3f64.sqrt() && ctx.omega <= 2.0);
            assert!(ctx.lbar.recip() < 1.0);
        }
    }
}

#[test]
fn expansion_point_minimises_leading_term() {
    for alpha in [0.05, 0.5, 2.0] {
        for l in [0, 3] {
            let ctx = solve_q0(alpha, l).unwrap();
            let lead = |q: f64| 0.5 / (q * q) + potential(alpha, q) / ctx.q_scale;
            let at = lead(ctx.q0);
            assert!(lead(ctx.q0 + 1e-3) > at);
            assert!(lead(ctx.q0 - 1e-3) > at);
            assert!((ctx.eps_minus_one()).abs() < 1e-13);
        }
    }
}

#[test]
fn ground_state_leading_order() {
    // K = 1 equals 2 l̄² ε⁽⁻²⁾ evaluated from the defining formula
    for alpha in ALPHAS {
        let sol = PsletSolution::compute(alpha, 0).unwrap();
        let ctx = sol.context;
        let direct = 2.0 * (0.5 * ctx.q_scale / (ctx.q0 * ctx.q0) + potential(alpha, ctx.q0));
        assert!((sol.partial_sum(1).unwrap() - direct).abs() < 1e-12 * direct);
    }
}

#[test]
fn partial_sums_step_by_single_terms() {
    let sol = PsletSolution::compute(0.25, 2).unwrap();
    let s = &sol.series;
    let sums = s.partial_sums();
    assert_eq!(sums.len(), 10);
    assert_eq!(sums[0], 2.0 * s.lbar * s.lbar * s.eps_m2);
    for k in 2..=10 {
        let step = 2.0 * s.eps[k - 2] / s.lbar.powi(k as i32 - 2);
        assert!((sums[k - 1] - sums[k - 2] - step).abs() < 1e-14 * sums[k - 1]);
    }
    for (n, e) in s.eps.iter().enumerate().skip(1) {
        let lambda = sol.tables.lambda()[n];
        assert!((e - lambda / (sol.context.q0 * sol.context.q0)).abs() <= 1e-15 * e.abs().max(1e-300));
    }
}

#[test]
fn harmonic_limit_is_exact() {
    for l in 0..=20 {
        let sol = PsletSolution::compute(0.0, l).unwrap();
        let exact = (2 * l + 3) as f64;
        for e in &sol.series.eps {
            assert!(e.abs() < 1e-13, "l={l}: {:?}", sol.series.eps);
        }
        for k in 1..=10 {
            assert!((sol.partial_sum(k).unwrap() - exact).abs() < 1e-12);
        }
        for (n, m) in PADE_ORDERS {
            let p = pade_energy(&sol.context, &sol.series, n, m).unwrap();
            assert!((p - exact).abs() < 1e-12);
        }
    }
}

#[test]
fn energy_decreases_with_anharmonicity() {
    for l in [0, 1, 5] {
        let e: Vec<f64> = ALPHAS
            .iter()
            .map(|&a| PsletSolution::compute(a, l).unwrap().partial_sum(10).unwrap())
            .collect();
        for w in e.windows(2) {
            assert!(w[1] < w[0], "l={l}: {e:?}");
        }
    }
}

#[test]
fn weak_anharmonicity_series_is_stable() {
    for alpha in [0.01, 0.05, 0.1, 0.2] {
        let sums = PsletSolution::compute(alpha, 0).unwrap().series.partial_sums();
        for k in 4..10 {
            assert!((sums[k] - sums[k - 1]).abs() < 1e-6, "alpha={alpha} K={}", k + 1);
        }
    }
}

#[test]
fn pade_close_to_longest_partial_sum() {
    for alpha in ALPHAS {
        let sol = PsletSolution::compute(alpha, 0).unwrap();
        let pade = pade_energy(&sol.context, &sol.series, 4, 5).unwrap();
        let k10 = sol.partial_sum(10).unwrap();
        assert!((pade - k10).abs() < 2e-3, "alpha={alpha}: {pade} vs {k10}");
    }
}

#[test]
fn pade_orders_agree_at_weak_anharmonicity() {
    let sol = PsletSolution::compute(0.01, 0).unwrap();
    let values: Vec<f64> = PADE_ORDERS
        .iter()
        .map(|&(n, m)| pade_energy(&sol.context, &sol.series, n, m).unwrap())
        .collect();
    for v in &values {
        assert!((v - 2.999_906_259_959_1).abs() < 1e-12, "{values:?}");
    }
}

#[test]
fn deeper_series_extends_shallower() {
    let short = PsletSolution::with_order(0.5, 1, 4).unwrap();
    let long = PsletSolution::with_order(0.5, 1, 12).unwrap();
    assert_eq!(long.series.eps.len(), 13);
    for (a, b) in short.series.eps.iter().zip(&long.series.eps) {
        assert!((a - b).abs() <= 1e-14 * b.abs().max(1e-300));
    }
    assert_eq!(DEFAULT_ENERGY_ORDER, 8);
}

#[test]
fn wavefunction_is_nodeless() {
    let sol = PsletSolution::compute(0.05, 0).unwrap();
    for i in -50..=50 {
        let x = 0.01 * i as f64;
        let psi = wavefunction_eval(&sol.context, &sol.tables, x, 4).unwrap();
        assert!(psi > 0.0 && psi.is_finite());
    }
    assert_eq!(wavefunction_eval(&sol.context, &sol.tables, 0.0, 4).unwrap(), 1.0);
    let gauss = wavefunction_eval(&sol.context, &sol.tables, 1.0, 0).unwrap();
    assert!((gauss - (-0.5 * sol.context.omega).exp()).abs() < 1e-15);
}

#[test]
fn excited_radial_states_are_rejected() {
    assert!(matches!(PsletContext::solve_state(0.5, 0, 1), Err(Error::Capability(_))));
}

#[test]
fn invalid_requests() {
    let sol = PsletSolution::compute(0.5, 0).unwrap();
    assert!(matches!(sol.partial_sum(0), Err(Error::Capability(_))));
    assert!(matches!(sol.partial_sum(11), Err(Error::Capability(_))));
    assert!(solve_q0(-1.0, 0).is_err());
    assert!(solve_q0(f64::NAN, 0).is_err());
}
