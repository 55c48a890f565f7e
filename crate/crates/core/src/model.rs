//! Kinematics of a spin-1/2 charge with anomalous magnetic moment coupled
//! to a flux tube on a cone: physical configuration, effective angular
//! momentum per partial wave, flux decomposition, the planes bounding the
//! region where the radial operator loses self-adjointness, and the
//! enumeration of the affected channels.

use crate::error::{Error, Result};
use crate::real::Real;

/// Electron anomalous magnetic moment a_e = (g_e - 2)/2.
pub const ELECTRON_ANOMALY: f64 = 0.001_159_652_180_91;

/// Spin projection s = ±1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spin {
    Up,
    Down,
}

impl Spin {
    pub fn sign<T: Real>(self) -> T {
        match self {
            Spin::Up => T::one(),
            Spin::Down => -T::one(),
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Spin::Up => 1,
            Spin::Down => -1,
        }
    }

    pub fn from_i32(s: i32) -> Result<Self> {
        match s {
            1 => Ok(Spin::Up),
            -1 => Ok(Spin::Down),
            other => Err(Error::domain("spin must be +1 or -1", other as f64)),
        }
    }
}

/// The experiment's knobs: cone parameter, flux, spin, mass and g-factor.
/// Natural units throughout (hbar = c = 1); mass in reciprocal length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConfig<T> {
    pub alpha: T,
    pub phi: T,
    pub spin: Spin,
    pub mass: T,
    pub g_factor: T,
}

impl<T: Real> PhysicalConfig<T> {
    /// Validated constructor. The cone parameter is restricted to (0, 1];
    /// an excess angle (alpha > 1) is outside the model.
    pub fn new(alpha: T, phi: T, spin: Spin, mass: T, g_factor: T) -> Result<Self> {
        if !(alpha > T::zero() && alpha <= T::one()) {
            return Err(Error::domain("0 < alpha <= 1", alpha));
        }
        if !(mass > T::zero()) {
            return Err(Error::domain("mass > 0", mass));
        }
        if !(g_factor > T::zero()) {
            return Err(Error::domain("g_factor > 0", g_factor));
        }
        if !phi.is_finite() {
            return Err(Error::domain("phi must be finite", phi));
        }
        Ok(PhysicalConfig {
            alpha,
            phi,
            spin,
            mass,
            g_factor,
        })
    }

    /// Constructor with the electron g-factor g = 2(1 + a_e).
    pub fn with_default_g(alpha: T, phi: T, spin: Spin, mass: T) -> Result<Self> {
        let g = T::of(2.0) * (T::one() + T::of(ELECTRON_ANOMALY));
        Self::new(alpha, phi, spin, mass, g)
    }

    /// Effective angular momentum j = (m + φ)/α - (1-α)s/(2α).
    pub fn effective_j(&self, m: i64) -> T {
        let mt = T::from_i64(m).expect("angular momentum index");
        (mt + self.phi) / self.alpha
            - (T::one() - self.alpha) * self.spin.sign::<T>() / (T::of(2.0) * self.alpha)
    }

    /// Contact coupling λ = g φ s / (2α).
    pub fn coupling_lambda(&self) -> T {
        self.g_factor * self.phi * self.spin.sign::<T>() / (T::of(2.0) * self.alpha)
    }

    /// One partial wave.
    pub fn channel(&self, m: i64) -> Channel<T> {
        let j = self.effective_j(m);
        Channel {
            m,
            j,
            lambda: self.coupling_lambda(),
            in_critical_subspace: j.abs() < T::one(),
        }
    }

    /// All channels with |j| < 1 (strict), ordered by m. The interval that
    /// bounds them has width 2α <= 2, so the list holds 0, 1 or 2
    /// consecutive integers.
    pub fn critical_channels(&self) -> Vec<Channel<T>> {
        let parts = flux_decompose(self.phi);
        let (lo, hi) = planes_ab(
            self.alpha,
            parts.beta,
            self.spin,
            parts.n_integer,
        )
        .expect("validated config");
        let m_lo = lo.floor().to_i64().unwrap_or(i64::MIN / 2);
        let m_hi = hi.ceil().to_i64().unwrap_or(i64::MAX / 2);
        (m_lo..=m_hi)
            .map(|m| self.channel(m))
            .filter(|c| c.in_critical_subspace)
            .collect()
    }

    /// Channels sitting numerically on the |j| = 1 boundary, which the
    /// strict inequality excludes from the critical list.
    pub fn boundary_channels(&self) -> Vec<Channel<T>> {
        let parts = flux_decompose(self.phi);
        let (lo, hi) = planes_ab(self.alpha, parts.beta, self.spin, parts.n_integer)
            .expect("validated config");
        let m_lo = lo.floor().to_i64().unwrap_or(i64::MIN / 2) - 1;
        let m_hi = hi.ceil().to_i64().unwrap_or(i64::MAX / 2) + 1;
        (m_lo..=m_hi)
            .map(|m| self.channel(m))
            .filter(|c| (c.j.abs() - T::one()).abs() <= T::of(1e-12))
            .collect()
    }
}

/// Flux split φ = N + β with N = floor(φ) and β ∈ [0, 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FluxParts<T> {
    pub n_integer: i64,
    pub beta: T,
}

/// Decompose the flux; floor semantics keep β ∈ [0, 1) for negative flux.
pub fn flux_decompose<T: Real>(phi: T) -> FluxParts<T> {
    let n = phi.floor();
    FluxParts {
        n_integer: n.to_i64().expect("flux integer part in range"),
        beta: phi - n,
    }
}

/// One partial wave: angular momentum quantum number together with its
/// derived effective index and contact coupling.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Channel<T> {
    pub m: i64,
    pub j: T,
    pub lambda: T,
    pub in_critical_subspace: bool,
}

fn check_plane_args<T: Real>(alpha: T, beta: T) -> Result<()> {
    if !(alpha > T::zero() && alpha <= T::one()) {
        return Err(Error::domain("0 < alpha <= 1", alpha));
    }
    if !(beta >= T::zero() && beta < T::one()) {
        return Err(Error::domain("0 <= beta < 1", beta));
    }
    Ok(())
}

/// Planes π±(α, β) = ±α - (N + β) + (1-α)s/2 bounding the angular momenta
/// for which the radial operator is not self-adjoint (flux-tube case).
/// Returns (π₋, π₊) with π₋ < π₊.
pub fn planes_ab<T: Real>(alpha: T, beta: T, spin: Spin, n_integer: i64) -> Result<(T, T)> {
    check_plane_args(alpha, beta)?;
    let flux = T::from_i64(n_integer).expect("integer flux") + beta;
    let spin_term = (T::one() - alpha) * spin.sign::<T>() * T::of(0.5);
    Ok((-alpha - flux + spin_term, alpha - flux + spin_term))
}

/// Companion planes for the charge-in-line-field configuration:
/// π± = ±α - s(N + β) + (1-α)s/2. Coincides with [`planes_ab`] at s = +1.
pub fn planes_ac<T: Real>(alpha: T, beta: T, spin: Spin, n_integer: i64) -> Result<(T, T)> {
    check_plane_args(alpha, beta)?;
    let s = spin.sign::<T>();
    let flux = T::from_i64(n_integer).expect("integer flux") + beta;
    let spin_term = (T::one() - alpha) * s * T::of(0.5);
    Ok((-alpha - s * flux + spin_term, alpha - s * flux + spin_term))
}

/// Result of the minimum-α search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaMinReport<T> {
    /// Infimum of α such that each of m = -N and m = -N-1 is critical for
    /// some β ∈ [0, 1). At the infimum itself the marginal channel sits
    /// exactly on a plane (|j| = 1), so strict two-channel behavior needs
    /// α strictly above this value.
    pub alpha_min: T,
    /// Offset (0 or -1 relative to -N) of the channel that touches the
    /// plane at the infimum.
    pub marginal_m_offset: i64,
    /// Whether, at `alpha_min` and the β supplied by the caller, both
    /// channels satisfy |j| < 1 strictly.
    pub two_channel_at_beta: bool,
}

/// j for channel m = offset - N at flux N + β; N cancels exactly, so the
/// computation uses the offset and β alone.
fn offset_j<T: Real>(alpha: T, spin: Spin, offset: i64, beta: T) -> T {
    let off = T::from_i64(offset).expect("offset");
    (off + beta) / alpha - (T::one() - alpha) * spin.sign::<T>() / (T::of(2.0) * alpha)
}

/// Is channel m = offset - N critical for some β ∈ [0, 1)?
/// j is linear and increasing in β, so the reachable j values form the
/// half-open interval [j(0), j(1)); it meets (-1, 1) iff j(0) < 1 and
/// j(1) > -1.
fn channel_reachable<T: Real>(alpha: T, spin: Spin, offset: i64) -> bool {
    let j0 = offset_j(alpha, spin, offset, T::zero());
    let j1 = offset_j(alpha, spin, offset, T::one());
    j0 < T::one() && j1 > -T::one()
}

/// Smallest cone parameter for which both m = -N and m = -N-1 become
/// critical channels (each within the β range), located by bisection on
/// the plane-boundary conditions. Independent of N by construction.
pub fn alpha_min_for_two_channels<T: Real>(spin: Spin, beta: T) -> Result<AlphaMinReport<T>> {
    if !(beta >= T::zero() && beta < T::one()) {
        return Err(Error::domain("0 <= beta < 1", beta));
    }
    let both = |alpha: T| channel_reachable(alpha, spin, 0) && channel_reachable(alpha, spin, -1);
    let mut lo = T::of(1e-4);
    let mut hi = T::one();
    if both(lo) {
        // degenerate: already two-channel at the bottom of the range
        return Ok(AlphaMinReport {
            alpha_min: lo,
            marginal_m_offset: 0,
            two_channel_at_beta: true,
        });
    }
    if !both(hi) {
        return Err(Error::Bracket {
            lo: 1e-4,
            hi: 1.0,
        });
    }
    for _ in 0..200 {
        let mid = (lo + hi) * T::of(0.5);
        if both(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
        if hi - lo <= T::eps() * T::of(4.0) * hi {
            break;
        }
    }
    let alpha_min = hi;
    let probe = lo;
    let marginal_m_offset = if channel_reachable(probe, spin, 0) {
        -1
    } else {
        0
    };
    let j_at = |off: i64| offset_j(alpha_min, spin, off, beta).abs() < T::one();
    Ok(AlphaMinReport {
        alpha_min,
        marginal_m_offset,
        two_channel_at_beta: j_at(0) && j_at(-1),
    })
}
