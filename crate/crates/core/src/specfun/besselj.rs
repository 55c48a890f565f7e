//! Bessel function of the first kind for real fractional order.
//!
//! Three evaluation routes:
//!  - ascending power series (small argument, any order > -1),
//!  - Hankel asymptotic expansion (large argument, |order| < 2),
//!  - three-term recurrence seeded by the asymptotic branch (large argument,
//!    order >= 2, as needed by partial-wave tails).
//!
//! The series and asymptotic branches are public so the overlap-window
//! consistency check can compare them directly.

use super::policy::EvalPolicy;
use crate::error::{Error, Result};
use crate::real::Real;
use crate::specfun::gamma::{gamma, ln_gamma};

/// Leading series coefficient (x/2)^nu / Γ(nu+1), switching to a log-space
/// evaluation when either factor would leave the scalar range.
fn series_t0<T: Real>(nu: T, x: T) -> Result<T> {
    let half_x = x * T::of(0.5);
    if x == T::zero() {
        // limit of (x/2)^nu / Γ(nu+1)
        return Ok(if nu == T::zero() {
            T::one()
        } else if nu > T::zero() {
            T::zero()
        } else {
            T::infinity()
        });
    }
    let log_pow = nu * half_x.ln();
    let cap = T::max_value().ln() * T::of(0.45);
    if nu.abs() <= T::of(30.0) && log_pow.abs() <= cap {
        Ok(half_x.powf(nu) / gamma(nu + T::one())?)
    } else {
        Ok((log_pow - ln_gamma(nu + T::one())?).exp())
    }
}

/// Ascending series for J_nu(x). Accurate for x up to ~14 in `f64`; the
/// alternating terms grow like I_nu(x) before decaying, so cancellation
/// caps the usable argument range.
pub fn bessel_j_series<T: Real>(nu: T, x: T, max_terms: usize, abs_tol: T) -> Result<T> {
    let q = x * x * T::of(0.25);
    let mut term = series_t0(nu, x)?;
    if term == T::zero() || term.is_infinite() {
        return Ok(term);
    }
    let mut sum = term;
    for k in 1..=max_terms {
        let kt = T::from_usize(k).expect("term index");
        let ratio = q / (kt * (nu + kt));
        term = -term * ratio;
        sum = sum + term;
        if ratio < T::one() && term.abs() <= T::eps() * sum.abs() + abs_tol {
            return Ok(sum);
        }
    }
    Err(Error::NonConvergence {
        what: "bessel_j series",
        iterations: max_terms,
    })
}

/// Hankel large-argument expansion of J_nu(x). Intended for |nu| < 2; the
/// expansion is truncated at its smallest term.
pub fn bessel_j_asymptotic<T: Real>(nu: T, x: T) -> Result<T> {
    if !(x > T::zero()) {
        return Err(Error::domain("asymptotic branch requires x > 0", x));
    }
    let (p, q) = hankel_pq(nu, x);
    let omega = x - (nu * T::of(0.5) + T::of(0.25)) * T::PI();
    let amp = (T::of(2.0) / (T::PI() * x)).sqrt();
    Ok(amp * (p * omega.cos() - q * omega.sin()))
}

/// P and Q sums of the Hankel expansion, truncated at the smallest term.
fn hankel_pq<T: Real>(nu: T, x: T) -> (T, T) {
    let mu4 = T::of(4.0) * nu * nu;
    let mut p = T::one();
    let mut q = T::zero();
    let mut u = T::one();
    let mut prev = T::infinity();
    for k in 1..=40usize {
        let kt = T::from_usize(k).expect("term index");
        let odd = T::of(2.0) * kt - T::one();
        u = u * (mu4 - odd * odd) / (T::of(8.0) * kt * x);
        if u.abs() >= prev {
            break; // divergence onset: stop at the smallest term
        }
        prev = u.abs();
        match k % 4 {
            1 => q = q + u,
            2 => p = p - u,
            3 => q = q - u,
            _ => p = p + u,
        }
        if u.abs() < T::eps() {
            break;
        }
    }
    (p, q)
}

/// J for order >= 2 and arguments past the series range, built by
/// recurrence from the fractional base order in [0, 1).
fn bessel_j_recurrence<T: Real>(nu: T, x: T) -> Result<T> {
    let n = nu.floor();
    let nu0 = nu - n;
    let steps = n.to_usize().ok_or(Error::domain("order out of range", nu.to_f64().unwrap_or(f64::NAN)))?;

    if nu <= T::of(0.75) * x {
        // oscillatory regime: upward recurrence is stable
        let mut jm1 = bessel_j_asymptotic(nu0, x)?;
        let mut j = bessel_j_asymptotic(nu0 + T::one(), x)?;
        for k in 1..steps {
            let order = nu0 + T::from_usize(k).expect("order");
            let next = T::of(2.0) * order / x * j - jm1;
            jm1 = j;
            j = next;
        }
        Ok(if steps == 0 { jm1 } else { j })
    } else {
        // order above the turning point: downward (Miller) recurrence,
        // normalized at the asymptotic value of the base order
        let m_start = {
            let top = if nu > x { nu } else { x };
            top.ceil().to_usize().unwrap_or(0) + 50
        };
        let rescale_cap = T::max_value().sqrt();
        let mut fkp1 = T::zero();
        let mut fk = T::of(1e-30);
        let mut target = T::zero();
        let mut captured = false;
        for k in (1..=m_start).rev() {
            let order = nu0 + T::from_usize(k).expect("order");
            let fkm1 = T::of(2.0) * order / x * fk - fkp1;
            fkp1 = fk;
            fk = fkm1;
            if k - 1 == steps {
                target = fk;
                captured = true;
            }
            if fk.abs() > rescale_cap {
                let s = T::one() / rescale_cap;
                fk = fk * s;
                fkp1 = fkp1 * s;
                if captured {
                    target = target * s;
                }
            }
        }
        let anchor = bessel_j_asymptotic(nu0, x)?;
        Ok(target / fk * anchor)
    }
}

/// J_nu(x) under a caller-supplied evaluation policy.
pub fn bessel_j_with<T: Real>(policy: &EvalPolicy<T>, nu: T, x: T) -> Result<T> {
    if !(nu > -T::one()) {
        return Err(Error::domain("bessel_j requires nu > -1", nu));
    }
    if !(x >= T::zero()) {
        return Err(Error::domain("bessel_j requires x >= 0", x));
    }
    policy.validate()?;
    if x <= policy.series_cutoff {
        bessel_j_series(nu, x, policy.max_terms, policy.abs_tol)
    } else if nu >= T::of(2.0) {
        bessel_j_recurrence(nu, x)
    } else if x >= policy.asymptotic_cutoff {
        bessel_j_asymptotic(nu, x)
    } else if x < T::of(14.0) {
        // between the cutoffs either branch is admissible; below ~14 the
        // series still has the smaller cancellation error in f64
        bessel_j_series(nu, x, policy.max_terms, policy.abs_tol)
    } else {
        bessel_j_asymptotic(nu, x)
    }
}

/// J_nu(x) under the default evaluation policy.
pub fn bessel_j<T: Real>(nu: T, x: T) -> Result<T> {
    bessel_j_with(&EvalPolicy::default(), nu, x)
}
