//! Independent numerical verification layer.
//!
//! Nothing here quotes the closed-form results it is meant to check: the
//! pole search continues the scattering denominator numerically, the shell
//! bound state solves the exact matching condition, and square
//! integrability of the deficiency functions is decided by quadrature. The
//! closed forms are only allowed to seed brackets, whose validity is then
//! established by sign change.

mod quadrature;
mod rootfind;

pub use quadrature::{integrate, integrate_power_endpoint, QuadratureReport};
pub use rootfind::{brent, expand_bracket, RootFindSpec};

use num_complex::Complex;

use crate::bg::{BoundState, Method};
use crate::error::{Error, Result};
use crate::ks::ShellConfig;
use crate::real::Real;
use crate::specfun::{bessel_k_complex, bessel_k_integral, gamma, ik_product};

/// Locate the bound-state decay constant as the zero of the analytically
/// continued scattering denominator 1 - iμ_ν at k = iκ. The continuation
/// (iκ)^{2|j|} is taken on the principal branch; the combination is real
/// up to roundoff and its zero is found by bracketed root search.
pub fn find_smatrix_pole<T: Real>(j: T, nu: T, spec: &RootFindSpec<T>) -> Result<T> {
    let aj = j.abs();
    if !(aj > T::zero() && aj < T::one()) {
        return Err(Error::domain("0 < |j| < 1", aj));
    }
    if !(nu < T::zero()) {
        return Err(Error::domain("nu < 0", nu));
    }
    let theta = aj * T::PI();
    let g_plus = gamma(T::one() + aj)?;
    let g_minus = gamma(T::one() - aj)?;
    let lead = T::of(4.0).powf(aj) * g_plus * nu;
    let denominator = move |kappa: T| -> T {
        // k^{2|j|} continued to k = iκ
        let zpow = Complex::new(T::zero(), kappa).powf(T::of(2.0) * aj);
        let den = zpow * (g_minus * theta.cos()) + Complex::new(lead, T::zero());
        let num = zpow * (g_minus * theta.sin());
        // 1 - iμ has the same zeros as den - i·num
        let d = den - Complex::new(T::zero(), T::one()) * num;
        d.re
    };
    let (lo, hi) = if denominator(spec.bracket_lo) * denominator(spec.bracket_hi) < T::zero() {
        (spec.bracket_lo, spec.bracket_hi)
    } else {
        expand_bracket(&denominator, spec.bracket_lo, spec.bracket_hi, 80)?
    };
    let refined = RootFindSpec {
        bracket_lo: lo,
        bracket_hi: hi,
        rel_tol: spec.rel_tol,
        max_iter: spec.max_iter,
    };
    brent(denominator, &refined)
}

/// Exact bound state of the shell problem: interior I_{|j|}(κr), exterior
/// K_{|j|}(κr), continuity at r₀ and derivative jump λψ(r₀)/r₀. With the
/// Wronskian z(IK' - I'K) = -1 the matching collapses to
///
///   I_{|j|}(z) K_{|j|}(z) = -1/λ,   z = κ r₀,
///
/// solved numerically. The product I·K decreases from 1/(2|j|) at z = 0
/// toward 0, so a root requires λ < -2|j|.
pub fn delta_shell_bound_state<T: Real>(
    shell: ShellConfig<T>,
    j: T,
    mass: T,
    spec: &RootFindSpec<T>,
) -> Result<BoundState<T>> {
    let aj = j.abs();
    if !(aj > T::zero() && aj < T::one()) {
        return Err(Error::domain("0 < |j| < 1", aj));
    }
    if !(shell.lambda < T::zero()) {
        return Err(Error::NoBoundState {
            condition: "lambda < 0 (attractive shell)",
            value: shell.lambda.to_f64().unwrap_or(f64::NAN),
        });
    }
    if !(mass > T::zero()) {
        return Err(Error::domain("mass > 0", mass));
    }
    let target = -T::one() / shell.lambda;
    let g = move |z: T| ik_product(aj, z).map(|p| p - target).unwrap_or(T::nan());
    let bracket = if g(spec.bracket_lo) * g(spec.bracket_hi) < T::zero() {
        Ok((spec.bracket_lo, spec.bracket_hi))
    } else {
        expand_bracket(&g, spec.bracket_lo, spec.bracket_hi, 80)
    };
    let (lo, hi) = bracket.map_err(|e| {
        if shell.lambda >= -T::of(2.0) * aj {
            // small-z bound I·K < 1/(2|j|) forbids a root here
            Error::NoBoundState {
                condition: "lambda < -2|j| (shell binding threshold)",
                value: shell.lambda.to_f64().unwrap_or(f64::NAN),
            }
        } else {
            e
        }
    })?;
    let refined = RootFindSpec {
        bracket_lo: lo,
        bracket_hi: hi,
        rel_tol: spec.rel_tol,
        max_iter: spec.max_iter,
    };
    let z = brent(g, &refined)?;
    let kappa_b = z / shell.r0;
    let energy = -kappa_b * kappa_b / (T::of(2.0) * mass);
    Ok(BoundState {
        kappa_b,
        energy,
        method: Method::Shell,
    })
}

/// Which deficiency eigenvalue (+i k₀² or -i k₀²) to probe.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeficiencySign {
    Plus,
    Minus,
}

impl DeficiencySign {
    /// Phase of the K argument: the decaying branch of √(∓i) has
    /// argument ∓π/4.
    fn arg<T: Real>(self) -> T {
        match self {
            DeficiencySign::Plus => -T::FRAC_PI_4(),
            DeficiencySign::Minus => T::FRAC_PI_4(),
        }
    }
}

/// K_{|j|} on the deficiency ray for any order |j| in (0, 2) except 1;
/// orders above 1 come from the recurrence K_{1+μ} = K_{1-μ} + (2μ/z) K_μ.
fn deficiency_k<T: Real>(aj: T, z: Complex<T>) -> Result<Complex<T>> {
    if aj < T::one() {
        bessel_k_complex(aj, z)
    } else {
        let mu = aj - T::one();
        if mu < T::of(1e-9) {
            return Err(Error::domain("order 1 not supported", aj));
        }
        let km = bessel_k_integral(mu, z)?;
        let k1m = bessel_k_integral(T::one() - mu, z)?;
        Ok(k1m + km * (T::of(2.0) * mu) / z)
    }
}

/// Square-integrability probe of the deficiency function: adaptive
/// quadrature of ∫₀^R |K_{|j|}(√(∓i) k₀ r)|² r dr with R taken from the
/// exponential decay envelope. Divergence at the origin is reported in the
/// `converged` flag, never thrown.
pub fn deficiency_norm<T: Real>(
    j: T,
    k0: T,
    sign: DeficiencySign,
    tol: T,
) -> Result<QuadratureReport<T>> {
    let aj = j.abs();
    if !(k0 > T::zero()) {
        return Err(Error::domain("k0 > 0", k0));
    }
    if !(aj > T::zero() && aj < T::of(2.0)) {
        return Err(Error::domain("0 < |j| < 2", aj));
    }
    if !(tol > T::zero()) {
        return Err(Error::domain("tol > 0", tol));
    }
    let phase = sign.arg::<T>();
    // outer cutoff from |K| ~ sqrt(π/(2k₀r)) exp(-k₀ r/√2) < 1e-16
    let mut r_outer = T::of(10.0) / k0;
    for _ in 0..60 {
        let x = k0 * r_outer;
        let envelope = (T::PI() / (T::of(2.0) * x)).sqrt() * (-x / T::SQRT_2()).exp();
        if envelope < T::of(1e-16) {
            break;
        }
        r_outer = r_outer * T::of(1.5);
    }
    let integrand = move |r: T| -> T {
        let z = Complex::from_polar(k0 * r, phase);
        match deficiency_k(aj, z) {
            Ok(k) => k.norm_sqr() * r,
            Err(_) => T::nan(),
        }
    };
    Ok(integrate_power_endpoint(&integrand, r_outer, tol, 60))
}

/// Deficiency indices by quadrature: (1, 1) when both sign variants are
/// square integrable, (0, 0) otherwise.
pub fn deficiency_indices<T: Real>(j: T, k0: T) -> Result<(u32, u32)> {
    let tol = T::of(1e-6);
    let plus = deficiency_norm(j, k0, DeficiencySign::Plus, tol)?;
    let minus = deficiency_norm(j, k0, DeficiencySign::Minus, tol)?;
    Ok(if plus.converged && minus.converged {
        (1, 1)
    } else {
        (0, 0)
    })
}

/// Boundary values extracted from sampled wave-function data near the
/// origin by Richardson extrapolation:
///
///   ψ₀ = lim r^{|j|} ψ(r),   ψ₁ = lim r^{-|j|} (ψ(r) - ψ₀ r^{-|j|}).
///
/// Samples must lie on a geometric radius sequence spanning at least two
/// decades with k·r_max well below 1. The known correction exponents
/// (2|j| and 2 for ψ₀, 2-2|j| and 2 for ψ₁) set the elimination orders.
pub fn boundary_values_extract<T: Real>(
    samples: &[(T, Complex<T>)],
    j: T,
) -> Result<(Complex<T>, Complex<T>)> {
    let aj = j.abs();
    if !(aj > T::zero() && aj < T::one()) {
        return Err(Error::domain("0 < |j| < 1", aj));
    }
    if samples.len() < 6 {
        return Err(Error::domain(
            "need at least 6 samples",
            samples.len() as f64,
        ));
    }
    let mut pts: Vec<(T, Complex<T>)> = samples.to_vec();
    pts.sort_by(|a, b| b.0.partial_cmp(&a.0).expect("finite radii"));
    let ratio = pts[1].0 / pts[0].0;
    if !(ratio > T::zero() && ratio < T::one()) {
        return Err(Error::domain("radii must be strictly decreasing", 0.0));
    }
    for w in pts.windows(2) {
        let r = w[1].0 / w[0].0;
        if ((r - ratio) / ratio).abs() > T::of(1e-9) {
            return Err(Error::domain(
                "samples must form a geometric radius sequence",
                r.to_f64().unwrap_or(f64::NAN),
            ));
        }
    }
    let span = pts[0].0 / pts[pts.len() - 1].0;
    if span < T::of(100.0) {
        return Err(Error::domain(
            "samples must span at least two decades",
            span.to_f64().unwrap_or(f64::NAN),
        ));
    }

    // single Richardson elimination of a known exponent on a geometric grid
    let eliminate = |seq: &[Complex<T>], p: T| -> Vec<Complex<T>> {
        let w = ratio.powf(p);
        seq.windows(2)
            .map(|s| (s[1] - s[0] * w) / (T::one() - w))
            .collect()
    };

    let f0: Vec<Complex<T>> = pts.iter().map(|&(r, psi)| psi * r.powf(aj)).collect();
    let f0a = eliminate(&f0, T::of(2.0) * aj);
    let f0b = eliminate(&f0a, T::of(2.0));
    let psi0 = *f0b.last().expect("nonempty after elimination");

    let g: Vec<Complex<T>> = pts
        .iter()
        .map(|&(r, psi)| (psi - psi0 * r.powf(-aj)) * r.powf(-aj))
        .collect();
    if aj > T::of(0.95) {
        // the subleading term converges as r^{2-2|j|}; near |j| = 1 it is
        // pinned to the noise floor of the ψ₀ subtraction
        let deltas: Vec<T> = g.windows(2).map(|s| (s[1] - s[0]).norm()).collect();
        let improving = deltas.windows(2).all(|d| d[1] <= d[0] * T::of(1.5));
        if !improving {
            return Err(Error::IllConditioned {
                what: "psi1 extraction with |j| > 0.95: subdominant term below noise",
            });
        }
    }
    let ga = eliminate(&g, T::of(2.0) - T::of(2.0) * aj);
    let gb = eliminate(&ga, T::of(2.0));
    let psi1 = *gb.last().expect("nonempty after elimination");
    Ok((psi0, psi1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bg;
    use crate::specfun::bessel_j;
    use approx::assert_relative_eq;

    #[test]
    fn pole_matches_closed_form_half_integer() {
        // |j| = 1/2, ν = -1: κ = 1
        let spec = RootFindSpec::new(0.2f64, 3.0).unwrap();
        let kappa = find_smatrix_pole(0.5, -1.0, &spec).unwrap();
        assert_relative_eq!(kappa, 1.0, max_relative = 1e-10);
    }

    #[test]
    fn pole_matches_closed_form_grid() {
        for &aj in &[0.1f64, 0.3, 0.5, 0.7, 0.9] {
            for &nu in &[-10.0f64, -1.0, -0.1] {
                let expect = bg::bound_state_bg(nu, aj, 1.0).unwrap().kappa_b;
                let spec = RootFindSpec::around(expect * 1.7).unwrap();
                let kappa = find_smatrix_pole(aj, nu, &spec).unwrap();
                assert_relative_eq!(kappa, expect, max_relative = 1e-8);
            }
        }
    }

    #[test]
    fn pole_small_nu_limit() {
        let spec = RootFindSpec::new(1e-8f64, 1.0).unwrap();
        let kappa = find_smatrix_pole(0.5, -1e-6, &spec).unwrap();
        assert!(kappa < 1e-5);
    }

    #[test]
    fn shell_scalar_equation_case() {
        // |j| = 1/2, λ = -1.5, r₀ = 0.01: z* solves (1-e^{-2z})/(2z) = 2/3
        let shell = ShellConfig::new(0.01f64, -1.5).unwrap();
        let spec = RootFindSpec::new(0.05f64, 2.0).unwrap();
        let b = delta_shell_bound_state(shell, 0.5, 1.0, &spec).unwrap();
        let z = b.kappa_b * 0.01;
        assert!(z > 0.4 && z < 0.5, "z = {z}");
        assert_relative_eq!(z, 0.437_108_732_899_358_539_53, max_relative = 1e-10);
        assert_eq!(b.method, Method::Shell);
        // residual of the defining equation at the root
        let res = crate::specfun::bessel_i(0.5, z).unwrap()
            * crate::specfun::bessel_k(0.5, z).unwrap()
            - 1.0 / 1.5;
        assert!(res.abs() <= 1e-12);
    }

    #[test]
    fn shell_no_root_above_threshold() {
        // λ ≥ -2|j|: I·K < 1/(2|j|) bound forbids a root
        let shell = ShellConfig::new(0.1f64, -0.9).unwrap();
        match delta_shell_bound_state(shell, 0.5, 1.0, &RootFindSpec::default()) {
            Err(Error::NoBoundState { condition, .. }) => {
                assert!(condition.contains("threshold"))
            }
            other => panic!("expected threshold error, got {other:?}"),
        }
    }

    #[test]
    fn deficiency_norm_closed_form_half_integer() {
        // |K_{1/2}(e^{∓iπ/4} k₀ r)|² r integrates to (π/(2√2 k₀²)) in closed
        // form (R → ∞)
        for sign in [DeficiencySign::Plus, DeficiencySign::Minus] {
            let rep = deficiency_norm(0.5f64, 1.0, sign, 1e-9).unwrap();
            assert!(rep.converged);
            assert_relative_eq!(
                rep.value,
                1.110_720_734_539_591_561_8,
                max_relative = 1e-8
            );
        }
    }

    #[test]
    fn deficiency_norm_integrability_boundary() {
        let rep = deficiency_norm(0.9f64, 1.0, DeficiencySign::Plus, 1e-8).unwrap();
        assert!(rep.converged);
        assert!(rep.value.is_finite());
        let rep = deficiency_norm(1.1f64, 1.0, DeficiencySign::Plus, 1e-8).unwrap();
        assert!(!rep.converged);
        let rep = deficiency_norm(0.999f64, 1.0, DeficiencySign::Minus, 1e-6).unwrap();
        assert!(rep.converged);
    }

    #[test]
    fn deficiency_indices_grid() {
        assert_eq!(deficiency_indices(0.5f64, 1.0).unwrap(), (1, 1));
        assert_eq!(deficiency_indices(1.5f64, 1.0).unwrap(), (0, 0));
        assert_eq!(deficiency_indices(0.999f64, 1.0).unwrap(), (1, 1));
    }

    #[test]
    fn boundary_values_roundtrip() {
        // ψ = a J_{|j|}(kr) + b J_{-|j|}(kr) with known coefficients
        let (a, b) = (1.0f64, 2.0f64);
        let (aj, k) = (0.5f64, 1.0f64);
        let mut samples = Vec::new();
        let mut r = 1e-2;
        for _ in 0..16 {
            let psi = a * bessel_j(aj, k * r).unwrap() + b * bessel_j(-aj, k * r).unwrap();
            samples.push((r, Complex::new(psi, 0.0)));
            r *= 0.5;
        }
        let (psi0, psi1) = boundary_values_extract(&samples, aj).unwrap();
        // ψ₀ = b (k/2)^{-|j|}/Γ(1-|j|) = 2√2/√π, ψ₁ = a (k/2)^{|j|}/Γ(1+|j|)
        assert_relative_eq!(psi0.re, 1.595_769_121_605_730_711_8, max_relative = 1e-8);
        assert_relative_eq!(psi1.re, 0.797_884_560_802_865_355_88, max_relative = 1e-6);
        assert!(psi0.im.abs() < 1e-12 && psi1.im.abs() < 1e-12);
    }

    #[test]
    fn boundary_values_regular_solution() {
        // b = 0: ψ₀ vanishes
        let (aj, k) = (0.3f64, 0.5f64);
        let mut samples = Vec::new();
        let mut r = 1e-2;
        for _ in 0..14 {
            let psi = bessel_j(aj, k * r).unwrap();
            samples.push((r, Complex::new(psi, 0.0)));
            r *= 0.5;
        }
        let (psi0, psi1) = boundary_values_extract(&samples, aj).unwrap();
        assert!(psi0.norm() < 1e-10);
        let expect = (k / 2.0f64).powf(aj) / gamma(1.0 + aj).unwrap();
        assert_relative_eq!(psi1.re, expect, max_relative = 1e-6);
    }

    #[test]
    fn boundary_values_ratio_recovery() {
        let (a, b) = (0.7f64, -1.3f64);
        let (aj, k) = (0.4f64, 2.0f64);
        let mut samples = Vec::new();
        let mut r = 5e-3;
        for _ in 0..16 {
            let psi = a * bessel_j(aj, k * r).unwrap() + b * bessel_j(-aj, k * r).unwrap();
            samples.push((r, Complex::new(psi, 0.0)));
            r *= 0.5;
        }
        let (psi0, psi1) = boundary_values_extract(&samples, aj).unwrap();
        let got = (psi1 / psi0).re;
        let expect = (a / b) * (k / 2.0f64).powf(2.0 * aj) * gamma(1.0 - aj).unwrap()
            / gamma(1.0 + aj).unwrap();
        assert_relative_eq!(got, expect, max_relative = 1e-6);
    }

    #[test]
    fn boundary_values_input_validation() {
        let samples: Vec<(f64, Complex<f64>)> =
            vec![(1e-2, Complex::new(1.0, 0.0)); 8];
        assert!(boundary_values_extract(&samples, 0.5).is_err());
        let mut irregular = Vec::new();
        let mut r = 1e-2;
        for i in 0..8 {
            irregular.push((r, Complex::new(1.0f64, 0.0)));
            r *= if i % 2 == 0 { 0.5 } else { 0.3 };
        }
        assert!(boundary_values_extract(&irregular, 0.5).is_err());
    }

    #[test]
    fn rootfind_bitwise_deterministic() {
        let spec = RootFindSpec::around(1.3f64).unwrap();
        let a = find_smatrix_pole(0.37, -0.8, &spec).unwrap();
        let b = find_smatrix_pole(0.37, -0.8, &spec).unwrap();
        assert_eq!(a.to_bits(), b.to_bits());
    }
}
