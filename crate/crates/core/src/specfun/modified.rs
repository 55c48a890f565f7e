//! Modified Bessel functions I and K for real order in (0, 1).
//!
//! K is additionally available for complex arguments on the rays
//! arg z = ±π/4, which is where the deficiency-subspace integrands live.
//!
//! Evaluation routes for K:
//!  - small |z|: the series difference (π/2)·(I_{-ν} - I_ν)/sin(πν),
//!  - intermediate |z|: trapezoidal evaluation of
//!        K_ν(z) = ∫₀^∞ exp(-z cosh t) cosh(νt) dt,
//!    which converges geometrically in the step size because the integrand
//!    is even with doubly-exponential decay,
//!  - large |z|: the exponential asymptotic expansion.
//!
//! The series route is capped at |z| = 2: past that the I_{-ν} - I_ν
//! cancellation eats into the accuracy budget. The asymptotic route takes
//! over at |z| = 25 where its truncation error is below machine precision.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::real::Real;
use crate::specfun::gamma::gamma;

const SERIES_MAX_ABS: f64 = 2.0;
const ASYMPTOTIC_MIN_ABS: f64 = 25.0;

/// I_nu(x) for nu > -1, x >= 0. Series below the large-argument regime,
/// asymptotic expansion above it (both routes are sign-definite for I).
pub(crate) fn modified_i_any<T: Real>(nu: T, x: T) -> Result<T> {
    if !(nu > -T::one()) {
        return Err(Error::domain("modified I requires nu > -1", nu));
    }
    if !(x >= T::zero()) {
        return Err(Error::domain("modified I requires x >= 0", x));
    }
    if x >= T::of(ASYMPTOTIC_MIN_ABS) {
        return modified_i_asymptotic(nu, x);
    }
    let half_x = x * T::of(0.5);
    if x == T::zero() {
        return Ok(if nu == T::zero() {
            T::one()
        } else if nu > T::zero() {
            T::zero()
        } else {
            T::infinity()
        });
    }
    let mut term = half_x.powf(nu) / gamma(nu + T::one())?;
    let q = half_x * half_x;
    let mut sum = term;
    for k in 1..=400usize {
        let kt = T::from_usize(k).expect("term index");
        term = term * q / (kt * (nu + kt));
        sum = sum + term;
        if term <= T::eps() * sum {
            return Ok(sum);
        }
    }
    Err(Error::NonConvergence {
        what: "modified I series",
        iterations: 400,
    })
}

fn modified_i_asymptotic<T: Real>(nu: T, x: T) -> Result<T> {
    let mu4 = T::of(4.0) * nu * nu;
    let mut s = T::one();
    let mut u = T::one();
    let mut prev = T::infinity();
    let mut sign = -T::one();
    for k in 1..=40usize {
        let kt = T::from_usize(k).expect("term index");
        let odd = T::of(2.0) * kt - T::one();
        u = u * (mu4 - odd * odd) / (T::of(8.0) * kt * x);
        if u.abs() >= prev {
            break;
        }
        prev = u.abs();
        s = s + sign * u;
        sign = -sign;
        if u.abs() < T::eps() {
            break;
        }
    }
    Ok(x.exp() / (T::of(2.0) * T::PI() * x).sqrt() * s)
}

/// I_nu(x) for order in (0, 1), x > 0.
pub fn bessel_i<T: Real>(nu: T, x: T) -> Result<T> {
    check_order(nu)?;
    if !(x > T::zero()) {
        return Err(Error::domain("bessel_i requires x > 0", x));
    }
    modified_i_any(nu, x)
}

/// d/dx I_nu(x) via the recurrence I' = I_{nu-1} - (nu/x) I_nu.
pub fn bessel_i_prime<T: Real>(nu: T, x: T) -> Result<T> {
    check_order(nu)?;
    if !(x > T::zero()) {
        return Err(Error::domain("bessel_i_prime requires x > 0", x));
    }
    Ok(modified_i_any(nu - T::one(), x)? - nu / x * modified_i_any(nu, x)?)
}

fn check_order<T: Real>(nu: T) -> Result<()> {
    if !(nu > T::zero() && nu < T::one()) {
        return Err(Error::domain("order must lie in (0, 1)", nu));
    }
    Ok(())
}

/// Series route for K at complex argument (|z| small).
fn bessel_k_series<T: Real>(nu: T, z: Complex<T>) -> Result<Complex<T>> {
    let half_z = z * T::of(0.5);
    let q = half_z * half_z;
    let mut diff = Complex::new(T::zero(), T::zero());
    // I_{-nu}(z) - I_{nu}(z), summed term by term
    let mut tm = half_z.powf(-nu) / gamma(T::one() - nu)?;
    let mut tp = half_z.powf(nu) / gamma(T::one() + nu)?;
    diff = diff + tm - tp;
    for k in 1..=200usize {
        let kt = T::from_usize(k).expect("term index");
        tm = tm * q / (kt * (kt - nu));
        tp = tp * q / (kt * (kt + nu));
        diff = diff + tm - tp;
        if tm.norm() + tp.norm() <= T::eps() * diff.norm() {
            break;
        }
    }
    let pref = T::PI() / (T::of(2.0) * (T::PI() * nu).sin());
    Ok(diff * pref)
}

/// Trapezoidal evaluation of the cosh integral representation. Valid for
/// Re z > 0 and any order >= 0; the step is refined until two successive
/// levels agree to machine precision.
pub(crate) fn bessel_k_integral<T: Real>(nu: T, z: Complex<T>) -> Result<Complex<T>> {
    if !(z.re > T::zero()) {
        return Err(Error::domain("integral route requires Re z > 0", z.re));
    }
    let cap = T::max_value().ln() - T::of(12.0);
    let sum_with = |h: T| -> Complex<T> {
        let mut s = (-z).exp() * T::of(0.5); // f(0)/2
        let mut k = 1usize;
        loop {
            let t = h * T::from_usize(k).expect("node index");
            let ch = t.cosh();
            // |integrand| ~ exp(nu t - Re z cosh t): stop once it underflows
            if z.re * ch - nu * t > cap {
                break;
            }
            let f = (-(z * ch)).exp() * (nu * t).cosh();
            s = s + f;
            k += 1;
            if k > 100_000 {
                break;
            }
        }
        s * h
    };
    let mut h = if z.im == T::zero() {
        T::of(0.5)
    } else {
        T::of(0.25) // oscillatory ray: narrower analyticity strip
    };
    let mut prev = sum_with(h);
    for _ in 0..6 {
        h = h * T::of(0.5);
        let cur = sum_with(h);
        let delta = (cur - prev).norm();
        prev = cur;
        if delta <= T::of(8.0) * T::eps() * cur.norm() {
            break;
        }
    }
    Ok(prev)
}

/// Exponential asymptotic expansion of K (complex argument, Re z > 0).
fn bessel_k_asymptotic<T: Real>(nu: T, z: Complex<T>) -> Result<Complex<T>> {
    let mu4 = T::of(4.0) * nu * nu;
    let one = Complex::new(T::one(), T::zero());
    let mut s = one;
    let mut u = one;
    let mut prev = T::infinity();
    let eight_z = z * T::of(8.0);
    for k in 1..=40usize {
        let kt = T::from_usize(k).expect("term index");
        let odd = T::of(2.0) * kt - T::one();
        u = u * Complex::new(mu4 - odd * odd, T::zero()) / (eight_z * kt);
        if u.norm() >= prev {
            break;
        }
        prev = u.norm();
        s = s + u;
        if u.norm() < T::eps() {
            break;
        }
    }
    let pref = (Complex::new(T::PI() * T::of(0.5), T::zero()) / z).sqrt();
    Ok(pref * (-z).exp() * s)
}

/// K_nu at complex argument restricted to arg z ∈ {0, ±π/4}, order in (0, 1).
pub fn bessel_k_complex<T: Real>(nu: T, z: Complex<T>) -> Result<Complex<T>> {
    check_order(nu)?;
    let r = z.norm();
    if !(r > T::zero()) {
        return Err(Error::domain("bessel_k requires |z| > 0", r));
    }
    let arg = z.im.atan2(z.re);
    let quarter = T::FRAC_PI_4();
    let tol = T::of(1e-9);
    if !(arg.abs() <= tol || (arg.abs() - quarter).abs() <= tol) {
        return Err(Error::domain(
            "bessel_k supports arg z in {0, +pi/4, -pi/4} only",
            arg,
        ));
    }
    if r <= T::of(SERIES_MAX_ABS) {
        bessel_k_series(nu, z)
    } else if r < T::of(ASYMPTOTIC_MIN_ABS) {
        bessel_k_integral(nu, z)
    } else {
        bessel_k_asymptotic(nu, z)
    }
}

/// K_nu(x) for real x > 0, order in (0, 1).
pub fn bessel_k<T: Real>(nu: T, x: T) -> Result<T> {
    check_order(nu)?;
    if !(x > T::zero()) {
        return Err(Error::domain("bessel_k requires x > 0", x));
    }
    Ok(bessel_k_complex(nu, Complex::new(x, T::zero()))?.re)
}

/// d/dx K_nu(x) via K' = -K_{nu-1} - (nu/x) K_nu with K_{nu-1} = K_{1-nu}.
pub fn bessel_k_prime<T: Real>(nu: T, x: T) -> Result<T> {
    check_order(nu)?;
    if !(x > T::zero()) {
        return Err(Error::domain("bessel_k_prime requires x > 0", x));
    }
    Ok(-bessel_k(T::one() - nu, x)? - nu / x * bessel_k(nu, x)?)
}

/// Stable I_nu(z)·K_nu(z) for real z: exponentials cancel analytically in
/// the large-argument regime, so the product stays finite for any z.
pub(crate) fn ik_product<T: Real>(nu: T, z: T) -> Result<T> {
    check_order(nu)?;
    if !(z > T::zero()) {
        return Err(Error::domain("ik_product requires z > 0", z));
    }
    if z < T::of(ASYMPTOTIC_MIN_ABS) {
        Ok(modified_i_any(nu, z)? * bessel_k(nu, z)?)
    } else {
        // e^z · e^{-z} dropped from both factors
        let mu4 = T::of(4.0) * nu * nu;
        let mut si = T::one();
        let mut sk = T::one();
        let mut u = T::one();
        let mut sign = -T::one();
        let mut prev = T::infinity();
        for k in 1..=40usize {
            let kt = T::from_usize(k).expect("term index");
            let odd = T::of(2.0) * kt - T::one();
            u = u * (mu4 - odd * odd) / (T::of(8.0) * kt * z);
            if u.abs() >= prev {
                break;
            }
            prev = u.abs();
            si = si + sign * u;
            sk = sk + u;
            sign = -sign;
            if u.abs() < T::eps() {
                break;
            }
        }
        Ok(si * sk / (T::of(2.0) * z))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn i_half_integer() {
        // I_{1/2}(1) = sqrt(2/π) sinh 1
        assert_relative_eq!(
            bessel_i(0.5f64, 1.0).unwrap(),
            0.937_674_888_245_487_646_72,
            max_relative = 1e-12
        );
    }

    #[test]
    fn i_reference_values() {
        assert_relative_eq!(
            bessel_i(0.3f64, 0.1).unwrap(),
            0.454_470_352_291_974_152_17,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            bessel_i(0.9f64, 8.0).unwrap(),
            404.984_685_530_479_102_25,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            bessel_i(0.25f64, 45.0).unwrap(),
            2.081_951_300_262_827_099_3e18,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            modified_i_any(-0.7f64, 2.0).unwrap(),
            1.944_110_612_002_001_452_2,
            max_relative = 1e-12
        );
    }

    #[test]
    fn k_half_integer() {
        // K_{1/2}(1) = sqrt(π/2) e^{-1}
        assert_relative_eq!(
            bessel_k(0.5f64, 1.0).unwrap(),
            0.461_068_504_447_894_558_44,
            max_relative = 1e-12
        );
    }

    #[test]
    fn k_reference_values() {
        let cases: [(f64, f64, f64); 6] = [
            (0.3, 0.5, 0.976_474_124_381_787_921_02),
            (0.3, 1e-3, 14.406_547_529_041_027_961),
            (0.7, 10.0, 1.820_069_864_507_522_546_1e-5),
            (0.25, 4.0, 0.011_238_375_536_958_103_839),
            (0.9, 18.0, 4.567_724_008_626_320_630_3e-9),
            (0.45, 40.0, 8.413_872_940_294_264_056_4e-19),
        ];
        for (nu, x, want) in cases {
            assert_relative_eq!(bessel_k(nu, x).unwrap(), want, max_relative = 1e-11);
        }
    }

    #[test]
    fn k_complex_reference_values() {
        // arg z = +π/4
        let z = Complex::from_polar(3.0f64, std::f64::consts::FRAC_PI_4);
        let got = bessel_k_complex(0.3, z).unwrap();
        assert_relative_eq!(got.re, -0.068_165_549_750_586_185_078, max_relative = 1e-10);
        assert_relative_eq!(got.im, -0.051_062_112_310_978_506_411, max_relative = 1e-10);

        let z = Complex::from_polar(9.0f64, std::f64::consts::FRAC_PI_4);
        let got = bessel_k_complex(0.15, z).unwrap();
        assert_relative_eq!(got.re, 6.374_624_632_453_528_223_6e-4, max_relative = 1e-10);
        assert_relative_eq!(got.im, -3.199_565_843_039_672_949_4e-4, max_relative = 1e-10);

        let z = Complex::from_polar(30.0f64, std::f64::consts::FRAC_PI_4);
        let got = bessel_k_complex(0.8, z).unwrap();
        assert_relative_eq!(got.re, -1.307_509_651_744_562_781_2e-10, max_relative = 1e-9);
        assert_relative_eq!(got.im, -5.233_822_250_146_239_629_8e-11, max_relative = 1e-9);
    }

    #[test]
    fn k_complex_half_integer_modulus() {
        // |K_{1/2}(z)| = |sqrt(π/(2z)) e^{-z}| on the arg = -π/4 ray
        let z = Complex::from_polar(2.0f64, -std::f64::consts::FRAC_PI_4);
        let got = bessel_k_complex(0.5, z).unwrap();
        assert_relative_eq!(got.re, -0.050_401_432_900_561_842_954, max_relative = 1e-10);
        assert_relative_eq!(got.im, 0.209_478_496_169_811_272_82, max_relative = 1e-10);
        assert_relative_eq!(
            got.norm(),
            0.215_456_596_083_748_324_6,
            max_relative = 1e-10
        );
    }

    #[test]
    fn k_rejects_unsupported_ray() {
        let z = Complex::from_polar(3.0f64, 1.0);
        assert!(bessel_k_complex(0.5, z).is_err());
        assert!(bessel_k(1.5f64, 1.0).is_err());
        assert!(bessel_k(0.5f64, 0.0).is_err());
    }

    #[test]
    fn wronskian_via_recurrence_derivatives() {
        // z (I K' - I' K) = -1
        for nu in [0.1f64, 0.3, 0.5, 0.7, 0.9] {
            for z in [0.1f64, 0.7, 1.9, 5.0, 10.0] {
                let w = z * (bessel_i(nu, z).unwrap() * bessel_k_prime(nu, z).unwrap()
                    - bessel_i_prime(nu, z).unwrap() * bessel_k(nu, z).unwrap());
                assert_relative_eq!(w, -1.0, epsilon = 1e-11);
            }
        }
    }

    #[test]
    fn ik_product_matches_direct_and_survives_large_z() {
        for nu in [0.2f64, 0.5, 0.8] {
            for z in [0.5f64, 3.0, 20.0] {
                let direct = bessel_i(nu, z).unwrap() * bessel_k(nu, z).unwrap();
                assert_relative_eq!(ik_product(nu, z).unwrap(), direct, max_relative = 1e-10);
            }
        }
        // far past the overflow point of I alone
        let p = ik_product(0.5f64, 2000.0).unwrap();
        assert_relative_eq!(p, 1.0 / 4000.0, max_relative = 1e-6);
    }
}
