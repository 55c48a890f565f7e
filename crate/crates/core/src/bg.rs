//! Boundary-condition route: one-parameter family of point interactions at
//! the origin, parametrized by ν ∈ (-∞, ∞]. Finite ν admits an r^{-|j|}
//! singular component in the wave function; ν = ∞ (the Friedrichs
//! extension) keeps only the regular solution.
//!
//! Everything is per channel: the extension acts on channels with |j| < 1
//! and leaves the rest untouched.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::model::PhysicalConfig;
use crate::real::Real;
use crate::specfun::{bessel_j, gamma};

/// Channels with |j| below this are treated as degenerate: the finite-ν
/// formulas carry powers 1/|j| and ratios Γ(1±|j|) that blow up there.
pub const DEGENERATE_J_FLOOR: f64 = 1e-12;

/// Self-adjoint-extension parameter: a finite real ν (units of
/// length^(-2|j|)) or the Friedrichs extension ν = ∞.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtensionParam<T> {
    Finite(T),
    Friedrichs,
}

/// Per-channel scattering output.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringEntry<T> {
    pub m: i64,
    pub j: T,
    /// Phase shift of the regular (Friedrichs) problem, radians.
    pub delta_reg: T,
    /// Extension-dependent phase shift, radians.
    pub delta_nu: T,
    /// Unit-modulus S-matrix element exp(2i δ_ν).
    pub s_element: Complex<T>,
}

/// Provenance tag for a bound state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Bg,
    Ks,
    Shell,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Bg => "bg",
            Method::Ks => "ks",
            Method::Shell => "shell",
        }
    }
}

/// Bound state: decay constant κ_b and energy E_b = -κ_b²/(2M).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundState<T> {
    pub kappa_b: T,
    pub energy: T,
    pub method: Method,
}

fn check_critical_j<T: Real>(j: T) -> Result<T> {
    let aj = j.abs();
    if aj < T::of(DEGENERATE_J_FLOOR) {
        return Err(Error::DegenerateChannel {
            j_abs: aj.to_f64().unwrap_or(f64::NAN),
        });
    }
    if !(aj < T::one()) {
        return Err(Error::domain("finite extension requires 0 < |j| < 1", aj));
    }
    Ok(aj)
}

/// Admixture coefficient μ_ν of the irregular solution:
///
///   μ_ν = k^{2|j|} Γ(1-|j|) sin(|j|π)
///         / (4^{|j|} Γ(1+|j|) ν + k^{2|j|} Γ(1-|j|) cos(|j|π)).
///
/// ν = ∞ gives μ = 0 for any channel. A vanishing denominator (a specific
/// ν < 0 at the given k) is reported as a pole, not returned as infinity.
pub fn mu_nu<T: Real>(ext: ExtensionParam<T>, j: T, k: T) -> Result<T> {
    if let ExtensionParam::Friedrichs = ext {
        return Ok(T::zero());
    }
    let aj = check_critical_j(j)?;
    if !(k > T::zero()) {
        return Err(Error::domain("mu_nu requires k > 0", k));
    }
    let nu = match ext {
        ExtensionParam::Finite(v) => v,
        ExtensionParam::Friedrichs => unreachable!(),
    };
    let theta = aj * T::PI();
    let k2j = k.powf(T::of(2.0) * aj);
    let g_minus = gamma(T::one() - aj)?;
    let g_plus = gamma(T::one() + aj)?;
    let lead = T::of(4.0).powf(aj) * g_plus * nu;
    let trail = k2j * g_minus * theta.cos();
    let den = lead + trail;
    let scale = lead.abs() + trail.abs();
    if den.abs() <= scale * T::of(1e-14) {
        return Err(Error::MuPole {
            nu: nu.to_f64().unwrap_or(f64::NAN),
            k: k.to_f64().unwrap_or(f64::NAN),
            j_abs: aj.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(k2j * g_minus * theta.sin() / den)
}

/// Phase shift of the regular problem: δ_m = (π/2)(|m| - |j|).
pub fn phase_shift_regular<T: Real>(m: i64, j: T) -> T {
    let am = T::from_i64(m.abs()).expect("angular momentum index");
    T::PI() * T::of(0.5) * (am - j.abs())
}

/// Extension-dependent phase shift δ_m^ν = δ_m + arctan(μ_ν); principal
/// arctan branch, so the value is defined modulo π across a μ pole.
pub fn phase_shift_extended<T: Real>(
    m: i64,
    j: T,
    ext: ExtensionParam<T>,
    k: T,
) -> Result<T> {
    let delta = phase_shift_regular(m, j);
    match ext {
        ExtensionParam::Friedrichs => Ok(delta),
        ExtensionParam::Finite(_) => Ok(delta + mu_nu(ext, j, k)?.atan()),
    }
}

/// Unit-modulus S-matrix element S = e^{2iδ_m} (1 + iμ)/(1 - iμ).
pub fn s_matrix<T: Real>(m: i64, j: T, ext: ExtensionParam<T>, k: T) -> Result<Complex<T>> {
    let two_delta = T::of(2.0) * phase_shift_regular(m, j);
    let phase = Complex::from_polar(T::one(), two_delta);
    match ext {
        ExtensionParam::Friedrichs => Ok(phase),
        ExtensionParam::Finite(_) => {
            let mu = mu_nu(ext, j, k)?;
            let one = T::one();
            Ok(phase * Complex::new(one, mu) / Complex::new(one, -mu))
        }
    }
}

/// S-matrix element written through the bound-state decay constant. The
/// pole ratio is the analytic continuation (iκ_b/k)^{2|j|}, i.e.
/// e^{iπ|j|}(κ_b/k)^{2|j|}; with that reading the element is unimodular
/// for real k and coincides with [`s_matrix`] when κ_b comes from
/// [`bound_state_bg`] at the same ν.
pub fn s_matrix_from_bound<T: Real>(m: i64, j: T, kappa_b: T, k: T) -> Result<Complex<T>> {
    let aj = check_critical_j(j)?;
    if !(kappa_b > T::zero()) {
        return Err(Error::domain("kappa_b > 0", kappa_b));
    }
    if !(k > T::zero()) {
        return Err(Error::domain("k > 0", k));
    }
    let theta = T::PI() * aj;
    let t = (kappa_b / k).powf(T::of(2.0) * aj);
    let pole_ratio = Complex::from_polar(t, theta);
    let den = Complex::new(T::one(), T::zero()) - pole_ratio;
    if den.norm() <= T::of(1e-14) * (T::one() + pole_ratio.norm()) {
        return Err(Error::MuPole {
            nu: f64::NEG_INFINITY,
            k: k.to_f64().unwrap_or(f64::NAN),
            j_abs: aj.to_f64().unwrap_or(f64::NAN),
        });
    }
    let num = Complex::from_polar(T::one(), T::of(2.0) * theta) - pole_ratio;
    let two_delta = T::of(2.0) * phase_shift_regular(m, j);
    Ok(Complex::from_polar(T::one(), two_delta) * num / den)
}

/// Bound state of the extended Hamiltonian, which exists for ν < 0:
///
///   E_b = -(2/M) [-ν Γ(1+|j|)/Γ(1-|j|)]^{1/|j|}.
pub fn bound_state_bg<T: Real>(nu: T, j: T, mass: T) -> Result<BoundState<T>> {
    let aj = check_critical_j(j)?;
    if !(nu < T::zero()) {
        return Err(Error::NoBoundState {
            condition: "nu < 0",
            value: nu.to_f64().unwrap_or(f64::NAN),
        });
    }
    if !(mass > T::zero()) {
        return Err(Error::domain("mass > 0", mass));
    }
    let bracket = -nu * gamma(T::one() + aj)? / gamma(T::one() - aj)?;
    let energy = -(T::of(2.0) / mass) * bracket.powf(T::one() / aj);
    let kappa_b = (-T::of(2.0) * mass * energy).sqrt();
    Ok(BoundState {
        kappa_b,
        energy,
        method: Method::Bg,
    })
}

/// Radial wave function of one critical channel at wave number k:
///
///   ψ_m(r) = a_m [J_{|j|}(kr) - μ_ν J_{-|j|}(kr)],   a_m = e^{-i|j|π/2}.
///
/// The Friedrichs extension drops the irregular term (μ = 0).
pub fn radial_wavefunction<T: Real>(
    m: i64,
    j: T,
    ext: ExtensionParam<T>,
    k: T,
    r: T,
) -> Result<Complex<T>> {
    let _ = m; // the radial profile depends on m only through j
    if !(r > T::zero()) {
        return Err(Error::domain("r > 0", r));
    }
    if !(k > T::zero()) {
        return Err(Error::domain("k > 0", k));
    }
    let aj = j.abs();
    let a_m = Complex::from_polar(T::one(), -aj * T::PI() * T::of(0.5));
    let regular = bessel_j(aj, k * r)?;
    match ext {
        ExtensionParam::Friedrichs => Ok(a_m * regular),
        ExtensionParam::Finite(_) => {
            let mu = mu_nu(ext, j, k)?;
            let irregular = bessel_j(-aj, k * r)?;
            Ok(a_m * (regular - mu * irregular))
        }
    }
}

/// Truncated partial-wave sum with the extension substituted on critical
/// channels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveSample<T> {
    pub value: Complex<T>,
    /// Magnitude of the m = ±m_max term pair; the caller's truncation
    /// error gauge.
    pub tail_estimate: T,
}

/// ψ(r, φ) = Σ_{m=-m_max}^{m_max} ψ_m(r) e^{imφ}; channels outside the
/// critical subspace use the regular a_m J_{|j|} radial part.
pub fn partial_wave_sum<T: Real>(
    cfg: &PhysicalConfig<T>,
    ext: ExtensionParam<T>,
    k: T,
    r: T,
    varphi: T,
    m_max: u32,
) -> Result<WaveSample<T>> {
    if m_max < 1 {
        return Err(Error::domain("m_max >= 1", m_max as f64));
    }
    if !(r > T::zero()) {
        return Err(Error::domain("r > 0", r));
    }
    let mut sum = Complex::new(T::zero(), T::zero());
    let mut tail = T::zero();
    for m in -(m_max as i64)..=(m_max as i64) {
        let ch = cfg.channel(m);
        let radial = if ch.in_critical_subspace {
            radial_wavefunction(m, ch.j, ext, k, r)?
        } else {
            let aj = ch.j.abs();
            Complex::from_polar(T::one(), -aj * T::PI() * T::of(0.5)) * bessel_j(aj, k * r)?
        };
        let term = radial * Complex::from_polar(T::one(), T::from_i64(m).expect("m") * varphi);
        sum = sum + term;
        if m.unsigned_abs() == m_max as u64 {
            tail = tail + term.norm();
        }
    }
    Ok(WaveSample {
        value: sum,
        tail_estimate: tail,
    })
}

/// Full per-channel scattering entry; finite extensions apply only inside
/// the critical subspace, non-critical channels scatter with the regular
/// phase alone.
pub fn scattering_entry<T: Real>(
    m: i64,
    j: T,
    ext: ExtensionParam<T>,
    k: T,
) -> Result<ScatteringEntry<T>> {
    let critical = j.abs() < T::one();
    let effective_ext = if critical { ext } else { ExtensionParam::Friedrichs };
    let delta_reg = phase_shift_regular(m, j);
    let delta_nu = phase_shift_extended(m, j, effective_ext, k)?;
    let s_element = s_matrix(m, j, effective_ext, k)?;
    Ok(ScatteringEntry {
        m,
        j,
        delta_reg,
        delta_nu,
        s_element,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Spin;
    use approx::assert_relative_eq;

    #[test]
    fn mu_friedrichs_is_zero() {
        for j in [0.1f64, -0.5, 0.99, 3.7] {
            assert_eq!(mu_nu(ExtensionParam::Friedrichs, j, 1.0).unwrap(), 0.0);
        }
    }

    #[test]
    fn mu_half_integer_closed_form() {
        // |j| = 1/2: μ = k/ν
        for (nu, k) in [(2.0f64, 1.0f64), (-0.5, 3.0), (10.0, 0.25)] {
            let mu = mu_nu(ExtensionParam::Finite(nu), 0.5, k).unwrap();
            assert_relative_eq!(mu, k / nu, max_relative = 1e-13);
        }
        let mu = mu_nu(ExtensionParam::Finite(2.0), 0.5f64, 1.0).unwrap();
        assert_relative_eq!(mu, 0.5, max_relative = 1e-13);
    }

    #[test]
    fn mu_pole_reported() {
        // |j| = 1/3: denominator zero at nu = -k^{2/3} Γ(2/3) cos(π/3) / (4^{1/3} Γ(4/3))
        let aj = 1.0f64 / 3.0;
        let k = 1.3f64;
        let nu_pole = -k.powf(2.0 * aj) * crate::specfun::gamma(1.0 - aj).unwrap()
            * (aj * std::f64::consts::PI).cos()
            / (4.0f64.powf(aj) * crate::specfun::gamma(1.0 + aj).unwrap());
        match mu_nu(ExtensionParam::Finite(nu_pole), aj, k) {
            Err(Error::MuPole { .. }) => {}
            other => panic!("expected pole, got {other:?}"),
        }
    }

    #[test]
    fn degenerate_channel_rejected() {
        assert!(matches!(
            mu_nu(ExtensionParam::Finite(1.0), 1e-13f64, 1.0),
            Err(Error::DegenerateChannel { .. })
        ));
        // Friedrichs path stays available
        assert_eq!(mu_nu(ExtensionParam::Friedrichs, 1e-13f64, 1.0).unwrap(), 0.0);
    }

    #[test]
    fn phase_shift_examples() {
        // m = 0, j = -0.5 → -π/4
        assert_relative_eq!(
            phase_shift_regular(0, -0.5f64),
            -std::f64::consts::FRAC_PI_4
        );
        // free particle: zero for all m
        for m in -5..=5 {
            assert_eq!(phase_shift_regular(m, m as f64), 0.0);
        }
        // Friedrichs: extended equals regular exactly
        let d = phase_shift_extended(2, 0.7f64, ExtensionParam::Friedrichs, 1.0).unwrap();
        assert_eq!(d, phase_shift_regular(2, 0.7f64));
        // |j| = 1/2, ν = 1, k = 1: δ + arctan(1)
        let d = phase_shift_extended(0, 0.5f64, ExtensionParam::Finite(1.0), 1.0).unwrap();
        assert_relative_eq!(
            d,
            phase_shift_regular(0, 0.5) + std::f64::consts::FRAC_PI_4,
            max_relative = 1e-13
        );
    }

    #[test]
    fn s_matrix_friedrichs_and_mu_one() {
        let s = s_matrix(1, 0.3f64, ExtensionParam::Friedrichs, 2.0).unwrap();
        let d = phase_shift_regular(1, 0.3f64);
        assert_relative_eq!(s.re, (2.0 * d).cos(), max_relative = 1e-14);
        assert_relative_eq!(s.im, (2.0 * d).sin(), max_relative = 1e-14);
        // μ = 1 rotates by i
        let s = s_matrix(0, 0.5f64, ExtensionParam::Finite(1.0), 1.0).unwrap();
        let expect = Complex::from_polar(1.0, 2.0 * phase_shift_regular(0, 0.5f64))
            * Complex::new(0.0, 1.0);
        assert_relative_eq!(s.re, expect.re, epsilon = 1e-13);
        assert_relative_eq!(s.im, expect.im, epsilon = 1e-13);
    }

    #[test]
    fn s_matrix_unitary_on_samples() {
        let js = [0.1f64, 0.35, 0.5, 0.77, 0.93];
        let nus = [-800.0f64, -2.0, -1e-3, 1e-3, 5.0, 900.0];
        let ks = [1e-3f64, 0.7, 12.0, 95.0];
        for &j in &js {
            for &nu in &nus {
                for &k in &ks {
                    let s = s_matrix(1, j, ExtensionParam::Finite(nu), k).unwrap();
                    assert!((s.norm() - 1.0).abs() <= 1e-12);
                }
            }
        }
    }

    #[test]
    fn bound_state_closed_forms() {
        // |j| = 1/2, ν = -1, M = 1: E = -1/2, κ = 1
        let b = bound_state_bg(-1.0f64, 0.5, 1.0).unwrap();
        assert_relative_eq!(b.energy, -0.5, max_relative = 1e-13);
        assert_relative_eq!(b.kappa_b, 1.0, max_relative = 1e-13);
        assert_eq!(b.method, Method::Bg);
        // energy = -κ²/(2M)
        let b = bound_state_bg(-2.7f64, 0.31, 1.7).unwrap();
        assert_relative_eq!(b.energy, -b.kappa_b * b.kappa_b / (2.0 * 1.7), max_relative = 1e-13);
        // scale law E(cν) = c^{1/|j|} E(ν)
        let c = 3.0f64;
        let e1 = bound_state_bg(-1.2f64, 0.4, 1.0).unwrap().energy;
        let e2 = bound_state_bg(-1.2f64 * c, 0.4, 1.0).unwrap().energy;
        assert_relative_eq!(e2, c.powf(1.0 / 0.4) * e1, max_relative = 1e-12);
        // ν → 0⁻ limit
        let e = bound_state_bg(-1e-12f64, 0.6, 1.0).unwrap().energy;
        assert!(e < 0.0 && e > -1e-15);
    }

    #[test]
    fn bound_state_requires_negative_nu() {
        assert!(matches!(
            bound_state_bg(0.5f64, 0.5, 1.0),
            Err(Error::NoBoundState { .. })
        ));
        assert!(bound_state_bg(-1.0f64, 1.5, 1.0).is_err());
    }

    #[test]
    fn s_matrix_from_bound_matches_direct() {
        for &aj in &[0.3f64, 0.5, 0.7] {
            for &nu in &[-0.4f64, -1.0, -6.0] {
                let kappa = bound_state_bg(nu, aj, 1.0).unwrap().kappa_b;
                for &k in &[0.3f64, 1.0, 4.7, kappa * 0.999] {
                    let direct = s_matrix(1, aj, ExtensionParam::Finite(nu), k).unwrap();
                    let via_bound = s_matrix_from_bound(1, aj, kappa, k).unwrap();
                    assert!(
                        (direct - via_bound).norm() <= 1e-10,
                        "mismatch at j={aj} nu={nu} k={k}"
                    );
                    assert!((via_bound.norm() - 1.0).abs() <= 1e-12);
                }
            }
        }
    }

    #[test]
    fn s_matrix_from_bound_deep_limit() {
        // κ_b/k → 0: S → e^{2iδ} e^{2iπ|j|}
        let aj = 0.4f64;
        let s = s_matrix_from_bound(0, aj, 1e-9, 1.0).unwrap();
        let expect = Complex::from_polar(
            1.0,
            2.0 * phase_shift_regular(0, aj) + 2.0 * std::f64::consts::PI * aj,
        );
        assert!((s - expect).norm() < 1e-6);
    }

    #[test]
    fn wavefunction_behavior() {
        // Friedrichs: regular at the origin
        let psi = radial_wavefunction(0, 0.5f64, ExtensionParam::Friedrichs, 1.0, 1e-8).unwrap();
        assert!(psi.norm() < 1e-3);
        // finite ν: r^{-|j|} growth dominates near the origin
        let ext = ExtensionParam::Finite(-1.0f64);
        let p1 = radial_wavefunction(0, 0.5, ext, 1.0, 1e-4).unwrap().norm();
        let p2 = radial_wavefunction(0, 0.5, ext, 1.0, 1e-6).unwrap().norm();
        let growth = p2 / p1;
        // |ψ| ~ r^{-1/2}: two decades in r give one decade in |ψ|
        assert!((growth / 10.0 - 1.0).abs() < 0.05, "growth {growth}");
    }

    #[test]
    fn partial_wave_plane_wave_recovery() {
        // flat, fluxless, Friedrichs: |ψ| = 1 (plane wave) away from origin
        let cfg = PhysicalConfig::new(1.0f64, 0.0, Spin::Up, 1.0, 2.0).unwrap();
        for varphi in [0.0f64, 1.1] {
            let w =
                partial_wave_sum(&cfg, ExtensionParam::Friedrichs, 1.0, 5.0, varphi, 60).unwrap();
            assert!((w.value.norm() - 1.0).abs() < 1e-3, "|ψ| = {}", w.value.norm());
            assert!(w.tail_estimate < 1e-12);
        }
    }

    #[test]
    fn partial_wave_tail_shrinks() {
        let cfg = PhysicalConfig::new(0.7f64, 0.4, Spin::Down, 1.0, 2.0).unwrap();
        let ext = ExtensionParam::Finite(-1.0f64);
        let w1 = partial_wave_sum(&cfg, ext, 2.0, 3.0, 0.6, 20).unwrap();
        let w2 = partial_wave_sum(&cfg, ext, 2.0, 3.0, 0.6, 40).unwrap();
        assert!(w2.tail_estimate < w1.tail_estimate);
        assert!((w1.value - w2.value).norm() <= w1.tail_estimate * 2.0 + 1e-12);
    }
}
