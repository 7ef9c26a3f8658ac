use proptest::prelude::*;
use pslet_core::{build_pade, Error};

/// Maclaurin coefficients of `num/den` by long division.
fn rational_series(num: &[f64], den: &[f64], len: usize) -> Vec<f64> {
    let mut out: Vec<f64> = Vec::with_capacity(len);
    for i in 0..len {
        let mut c = num.get(i).copied().unwrap_or(0.0);
        for j in 1..den.len().min(i + 1) {
            c -= den[j] * out[i - j];
        }
        out.push(c / den[0]);
    }
    out
}

fn orders() -> impl Strategy<Value = (usize, usize)> {
    (0usize..=4).prop_flat_map(|n| (Just(n), prop_oneof![Just(n), Just(n + 1)]))
}

proptest! {
    #[test]
    fn reexpansion_matches_input((n, m) in orders(), coeffs in prop::collection::vec(-2.0f64..2.0, 10)) {
        match build_pade(&coeffs, n, m) {
            Ok(p) => {
                prop_assert_eq!(p.numerator_degree(), n);
                prop_assert_eq!(p.denominator_degree(), m);
                prop_assert_eq!(p.den[0], 1.0);
                // den · series − num must vanish through order n + m
                for i in 0..=n + m {
                    let terms: Vec<f64> = (0..=i.min(m)).map(|j| p.den[j] * coeffs[i - j]).collect();
                    let lhs: f64 = terms.iter().sum();
                    let rhs = p.num.get(i).copied().unwrap_or(0.0);
                    let scale = terms.iter().map(|t| t.abs()).sum::<f64>().max(rhs.abs());
                    prop_assert!((lhs - rhs).abs() <= 1e-10 * scale.max(1e-300), "order {}: {} vs {}", i, lhs, rhs);
                }
                if p.condition < 10.0 {
                    let back = p.expand(n + m);
                    for (a, b) in back.iter().zip(&coeffs) {
                        prop_assert!((a - b).abs() <= 1e-10 * b.abs().max(1.0));
                    }
                }
            }
            Err(Error::Degenerate(_)) => {}
            Err(e) => return Err(TestCaseError::fail(format!("{e}"))),
        }
    }

    #[test]
    fn rational_inputs_are_reproduced(
        (n, m) in (1usize..=3).prop_flat_map(|n| (Just(n), prop_oneof![Just(n), Just(n + 1)])),
        num in prop::collection::vec(0.2f64..1.0, 5),
        den in prop::collection::vec(-0.4f64..0.4, 5),
    ) {
        let num = &num[..=n];
        let mut den = den[..=m].to_vec();
        den[0] = 1.0;
        // keep the leading denominator coefficient away from zero so the
        // rational function is of exact type (n, m)
        let last = den[m];
        den[m] = last.signum() * last.abs().max(0.1);
        let series = rational_series(num, &den, n + m + 1);
        match build_pade(&series, n, m) {
            Ok(p) => {
                for u in [0.0, 0.1, 0.3] {
                    let exact = num.iter().rev().fold(0.0, |a, c| a * u + c)
                        / den.iter().rev().fold(0.0, |a, c| a * u + c);
                    prop_assert!((p.eval(u) - exact).abs() < 1e-12 * exact.abs().max(1.0), "u={}", u);
                }
            }
            Err(Error::Degenerate(_)) => {}
            Err(e) => return Err(TestCaseError::fail(format!("{e}"))),
        }
    }
}

#[test]
fn known_rational_function() {
    // (1 + u) / (1 − u/2 + u²/4)
    let num = [1.0, 1.0];
    let den = [1.0, -0.5, 0.25];
    let series = rational_series(&num, &den, 4);
    let p = build_pade(&series, 1, 2).unwrap();
    for (a, b) in p.num.iter().zip(num) {
        assert!((a - b).abs() < 1e-14);
    }
    for (a, b) in p.den.iter().zip(den) {
        assert!((a - b).abs() < 1e-14);
    }
}
