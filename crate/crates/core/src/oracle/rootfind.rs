//! Bracketing scalar root finder: bisection safeguarded with inverse
//! quadratic interpolation and secant steps (Brent's method). Guaranteed
//! bracket maintenance, superlinear local convergence, deterministic.

use crate::error::{Error, Result};
use crate::real::Real;

/// Bracket plus stopping criteria for a root search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootFindSpec<T> {
    pub bracket_lo: T,
    pub bracket_hi: T,
    pub rel_tol: T,
    pub max_iter: usize,
}

impl<T: Real> RootFindSpec<T> {
    pub fn new(bracket_lo: T, bracket_hi: T) -> Result<Self> {
        if !(bracket_lo < bracket_hi) {
            return Err(Error::domain(
                "bracket_lo < bracket_hi",
                bracket_lo,
            ));
        }
        Ok(RootFindSpec {
            bracket_lo,
            bracket_hi,
            rel_tol: T::of(1e-12),
            max_iter: 200,
        })
    }

    /// Bracket [guess/2, 2·guess] around a positive initial guess.
    pub fn around(guess: T) -> Result<Self> {
        if !(guess > T::zero()) {
            return Err(Error::domain("guess > 0", guess));
        }
        Self::new(guess * T::of(0.5), guess * T::of(2.0))
    }
}

impl<T: Real> Default for RootFindSpec<T> {
    fn default() -> Self {
        RootFindSpec {
            bracket_lo: T::of(1e-8),
            bracket_hi: T::one(),
            rel_tol: T::of(1e-12),
            max_iter: 200,
        }
    }
}

/// Grow a bracket geometrically (factor 2 per side and round) until the
/// function changes sign across it. Lower edge is kept positive when the
/// seed bracket is positive, which is what the κ > 0 searches need.
pub fn expand_bracket<T: Real, F: Fn(T) -> T>(
    f: &F,
    mut lo: T,
    mut hi: T,
    max_rounds: usize,
) -> Result<(T, T)> {
    let mut flo = f(lo);
    let mut fhi = f(hi);
    if flo == T::zero() {
        return Ok((lo, lo));
    }
    if fhi == T::zero() {
        return Ok((hi, hi));
    }
    let keep_positive = lo > T::zero();
    for _ in 0..max_rounds {
        if flo * fhi < T::zero() {
            return Ok((lo, hi));
        }
        hi = hi * T::of(2.0);
        fhi = f(hi);
        if flo * fhi < T::zero() {
            return Ok((lo, hi));
        }
        lo = if keep_positive {
            lo * T::of(0.5)
        } else {
            lo - (hi - lo)
        };
        flo = f(lo);
    }
    Err(Error::Bracket {
        lo: lo.to_f64().unwrap_or(f64::NAN),
        hi: hi.to_f64().unwrap_or(f64::NAN),
    })
}

/// Brent's method on a sign-changing bracket.
pub fn brent<T: Real, F: Fn(T) -> T>(f: F, spec: &RootFindSpec<T>) -> Result<T> {
    let two = T::of(2.0);
    let half = T::of(0.5);
    let mut a = spec.bracket_lo;
    let mut b = spec.bracket_hi;
    let mut fa = f(a);
    let mut fb = f(b);
    if fa == T::zero() {
        return Ok(a);
    }
    if fb == T::zero() {
        return Ok(b);
    }
    if fa * fb > T::zero() {
        return Err(Error::Bracket {
            lo: a.to_f64().unwrap_or(f64::NAN),
            hi: b.to_f64().unwrap_or(f64::NAN),
        });
    }
    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = d;
    for _ in 0..spec.max_iter {
        if fb.abs() > fc.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = two * T::eps() * b.abs() + half * spec.rel_tol * b.abs().max(T::one());
        let xm = half * (c - b);
        if xm.abs() <= tol1 || fb == T::zero() {
            return Ok(b);
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            // attempt interpolation
            let s = fb / fa;
            let (mut p, mut q) = if a == c {
                // secant
                (two * xm * s, T::one() - s)
            } else {
                // inverse quadratic
                let q0 = fa / fc;
                let r = fb / fc;
                (
                    s * (two * xm * q0 * (q0 - r) - (b - a) * (r - T::one())),
                    (q0 - T::one()) * (r - T::one()) * (s - T::one()),
                )
            };
            if p > T::zero() {
                q = -q;
            }
            p = p.abs();
            let min1 = T::of(3.0) * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if two * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b = b + if d.abs() > tol1 {
            d
        } else if xm > T::zero() {
            tol1
        } else {
            -tol1
        };
        fb = f(b);
        if (fb > T::zero()) == (fc > T::zero()) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }
    Err(Error::NonConvergence {
        what: "brent root finder",
        iterations: spec.max_iter,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn finds_simple_roots() {
        let spec = RootFindSpec::new(0.0f64, 2.0).unwrap();
        let r = brent(|x| x * x - 2.0, &spec).unwrap();
        assert_relative_eq!(r, std::f64::consts::SQRT_2, max_relative = 1e-12);

        let spec = RootFindSpec::new(0.1f64, 10.0).unwrap();
        let r = brent(|x: f64| x.ln(), &spec).unwrap();
        assert_relative_eq!(r, 1.0, max_relative = 1e-12);
    }

    #[test]
    fn rejects_bad_bracket() {
        let spec = RootFindSpec::new(1.0f64, 2.0).unwrap();
        assert!(matches!(
            brent(|x| x * x + 1.0, &spec),
            Err(Error::Bracket { .. })
        ));
        assert!(RootFindSpec::new(2.0f64, 1.0).is_err());
    }

    #[test]
    fn expansion_reaches_sign_change() {
        let f = |x: f64| x - 100.0;
        let (lo, hi) = expand_bracket(&f, 0.5, 1.0, 60).unwrap();
        assert!(f(lo) * f(hi) < 0.0);
        let r = brent(f, &RootFindSpec::new(lo, hi).unwrap()).unwrap();
        assert_relative_eq!(r, 100.0, max_relative = 1e-12);
    }

    #[test]
    fn deterministic() {
        let spec = RootFindSpec::new(0.0f64, 2.0).unwrap();
        let f = |x: f64| x.cos() - x;
        let r1 = brent(f, &spec).unwrap();
        let r2 = brent(f, &spec).unwrap();
        assert_eq!(r1.to_bits(), r2.to_bits());
    }
}
