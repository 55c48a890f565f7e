//! Regularized-shell route: the contact term is spread onto a shell of
//! small radius r₀, the zero-energy logarithmic derivatives are matched at
//! the shell, and the r₀ → 0 matching fixes the extension parameter in
//! terms of (λ, r₀).

use crate::bg::{self, BoundState, ExtensionParam, Method};
use crate::error::{Error, Result};
use crate::real::Real;
use crate::specfun::gamma;

/// Shell regularization: core radius and contact coupling.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShellConfig<T> {
    pub r0: T,
    pub lambda: T,
}

impl<T: Real> ShellConfig<T> {
    pub fn new(r0: T, lambda: T) -> Result<Self> {
        if !(r0 > T::zero()) {
            return Err(Error::domain("r0 > 0", r0));
        }
        if !lambda.is_finite() {
            return Err(Error::domain("lambda must be finite", lambda));
        }
        Ok(ShellConfig { r0, lambda })
    }
}

fn check_j<T: Real>(j: T) -> Result<T> {
    let aj = j.abs();
    if !(aj > T::zero() && aj < T::one()) {
        return Err(Error::domain("0 < |j| < 1", aj));
    }
    Ok(aj)
}

/// Exterior logarithmic derivative at the shell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExteriorLogDerivative<T> {
    /// r₀ ψ'/ψ at r₀ from the two-term small-argument form of the decaying
    /// exterior solution: -|j| (1 + X)/(1 - X).
    pub value: T,
    /// False when κ r₀ >= 0.5, where the two-term expansion is stretched.
    pub expansion_valid: bool,
}

/// X = [Γ(1-|j|)/Γ(1+|j|)] (κ r₀ / 2)^{2|j|}; the dimensionless knob the
/// whole matching runs on.
fn shell_x<T: Real>(aj: T, kappa: T, r0: T) -> Result<T> {
    Ok(gamma(T::one() - aj)? / gamma(T::one() + aj)?
        * (kappa * r0 * T::of(0.5)).powf(T::of(2.0) * aj))
}

/// r₀ ψ'/ψ|_{r₀} = -|j|(1+X)/(1-X) for the decaying exterior solution at
/// decay constant κ. Inverting value = λ for κ reproduces
/// [`bound_state_ks`] exactly.
pub fn exterior_log_derivative<T: Real>(j: T, kappa: T, r0: T) -> Result<ExteriorLogDerivative<T>> {
    let aj = check_j(j)?;
    if !(kappa > T::zero()) {
        return Err(Error::domain("kappa > 0", kappa));
    }
    if !(r0 > T::zero()) {
        return Err(Error::domain("r0 > 0", r0));
    }
    let x = shell_x(aj, kappa, r0)?;
    let one = T::one();
    if (one - x).abs() <= T::of(1e-14) * (one + x.abs()) {
        return Err(Error::domain(
            "exterior log-derivative pole at X = 1",
            x,
        ));
    }
    Ok(ExteriorLogDerivative {
        value: -aj * (one + x) / (one - x),
        expansion_valid: kappa * r0 < T::of(0.5),
    })
}

/// Bound state of the matched problem:
///
///   E_b = -(2/(M r₀²)) [ ((λ+|j|)/(λ-|j|)) Γ(1+|j|)/Γ(1-|j|) ]^{1/|j|},
///
/// which exists iff (λ+|j|)/(λ-|j|) > 0.
pub fn bound_state_ks<T: Real>(shell: ShellConfig<T>, j: T, mass: T) -> Result<BoundState<T>> {
    let aj = check_j(j)?;
    let ratio = matching_ratio(shell.lambda, aj)?;
    bound_state_from_ratio(shell, aj, mass, ratio, Method::Ks)
}

/// Same bound state but with the interior log-derivative of the regular
/// zero-energy solution r^{|j|} retained in the matching, which shifts the
/// matching value from λ to λ + |j| and the ratio to (λ+2|j|)/λ. This is
/// the small-κr₀ limit of the exact shell problem; the plain
/// [`bound_state_ks`] keeps the published matching.
pub fn bound_state_ks_corrected<T: Real>(
    shell: ShellConfig<T>,
    j: T,
    mass: T,
) -> Result<BoundState<T>> {
    let aj = check_j(j)?;
    if shell.lambda == T::zero() {
        return Err(Error::NoBoundState {
            condition: "lambda != 0",
            value: 0.0,
        });
    }
    let ratio = (shell.lambda + T::of(2.0) * aj) / shell.lambda;
    if !(ratio > T::zero()) {
        return Err(Error::NoBoundState {
            condition: "(lambda+2|j|)/lambda > 0",
            value: ratio.to_f64().unwrap_or(f64::NAN),
        });
    }
    bound_state_from_ratio(shell, aj, mass, ratio, Method::Ks)
}

fn matching_ratio<T: Real>(lambda: T, aj: T) -> Result<T> {
    if (lambda - aj).abs() <= T::eps() * aj {
        return Err(Error::domain("lambda != |j|", lambda));
    }
    let ratio = (lambda + aj) / (lambda - aj);
    if !(ratio > T::zero()) {
        return Err(Error::NoBoundState {
            condition: "(lambda+|j|)/(lambda-|j|) > 0",
            value: ratio.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(ratio)
}

fn bound_state_from_ratio<T: Real>(
    shell: ShellConfig<T>,
    aj: T,
    mass: T,
    ratio: T,
    method: Method,
) -> Result<BoundState<T>> {
    if !(mass > T::zero()) {
        return Err(Error::domain("mass > 0", mass));
    }
    let bracket = ratio * gamma(T::one() + aj)? / gamma(T::one() - aj)?;
    let energy = -(T::of(2.0) / (mass * shell.r0 * shell.r0)) * bracket.powf(T::one() / aj);
    let kappa_b = (-T::of(2.0) * mass * energy).sqrt();
    Ok(BoundState {
        kappa_b,
        energy,
        method,
    })
}

/// Extension parameter implied by the shell:
///
///   ν = -(1/r₀^{2|j|}) (λ+|j|)/(λ-|j|),   units length^{-2|j|}.
pub fn nu_from_physical<T: Real>(shell: ShellConfig<T>, j: T) -> Result<ExtensionParam<T>> {
    let aj = check_j(j)?;
    if (shell.lambda - aj).abs() <= T::eps() * aj {
        return Err(Error::domain("lambda != |j|", shell.lambda));
    }
    let ratio = (shell.lambda + aj) / (shell.lambda - aj);
    Ok(ExtensionParam::Finite(
        -shell.r0.powf(-T::of(2.0) * aj) * ratio,
    ))
}

/// Interior matching value from integrating the zero-energy shell equation
/// across the shell, as published: the shell jump alone, i.e. λ.
pub fn interior_log_derivative<T: Real>(shell: ShellConfig<T>, _j: T) -> T {
    shell.lambda
}

/// Interior matching value with the log-derivative |j| of the regular
/// interior solution r^{|j|} included: λ + |j|.
pub fn interior_log_derivative_corrected<T: Real>(shell: ShellConfig<T>, j: T) -> T {
    shell.lambda + j.abs()
}

/// Convenience: BG bound state at the extension parameter implied by the
/// shell. Algebraically identical to [`bound_state_ks`].
pub fn bound_state_bg_via_shell<T: Real>(
    shell: ShellConfig<T>,
    j: T,
    mass: T,
) -> Result<BoundState<T>> {
    match nu_from_physical(shell, j)? {
        ExtensionParam::Finite(nu) => bg::bound_state_bg(nu, j, mass),
        ExtensionParam::Friedrichs => unreachable!("nu_from_physical is always finite"),
    }
}
