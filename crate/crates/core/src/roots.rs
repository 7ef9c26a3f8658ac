//! Bracketing root finder shared by the expansion-point solve and the
//! shooting oracle.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub x: f64,
    pub fx: f64,
    pub iterations: usize,
    /// Width of the final bracket.
    pub width: f64,
}

/// Brent's method (inverse quadratic interpolation, secant and bisection)
/// on a bracket `[lo, hi]` whose end values differ in sign.
pub fn brent<F>(mut f: F, lo: f64, hi: f64, xtol: f64, max_iter: usize) -> Result<Root>
where
    F: FnMut(f64) -> f64,
{
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (f(a), f(b));
    if fa == 0.0 {
        return Ok(Root { x: a, fx: fa, iterations: 0, width: 0.0 });
    }
    if fb == 0.0 {
        return Ok(Root { x: b, fx: fb, iterations: 0, width: 0.0 });
    }
    if !(fa.is_finite() && fb.is_finite()) || fa.signum() == fb.signum() {
        return Err(Error::Bracket { lo, hi });
    }

    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;
    for iter in 1..=max_iter {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol = 2.0 * f64::EPSILON * b.abs() + 0.5 * xtol;
        let m = 0.5 * (c - b);
        if m.abs() <= tol || fb == 0.0 {
            return Ok(Root { x: b, fx: fb, iterations: iter, width: (c - b).abs() });
        }
        if e.abs() >= tol && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            } else {
                p = -p;
            }
            if 2.0 * p < (3.0 * m * q - (tol * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol { d } else { tol.copysign(m) };
        fb = f(b);
        if !fb.is_finite() {
            return Err(Error::Bracket { lo, hi });
        }
    }
    Err(Error::NoConvergence { iterations: max_iter })
}

/// Grows `hi` geometrically from `start` until `f` changes sign relative to
/// `f(lo)`. Returns the bracket.
pub fn expand_upward<F>(mut f: F, lo: f64, start: f64, factor: f64, limit: f64) -> Result<(f64, f64)>
where
    F: FnMut(f64) -> f64,
{
    let flo = f(lo);
    let mut prev = lo;
    let mut hi = start.max(lo);
    while hi <= limit {
        let fhi = f(hi);
        if fhi.signum() != flo.signum() {
            return Ok((prev, hi));
        }
        prev = hi;
        hi *= factor;
    }
    Err(Error::Bracket { lo, hi: limit })
}
