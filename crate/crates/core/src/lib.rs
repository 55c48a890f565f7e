//! Scattering and bound states of a spin-1/2 charge with anomalous
//! magnetic moment coupled to a flux tube on a cone, where the contact
//! term forces a one-parameter family of boundary conditions at the
//! origin.
//!
//! Module map:
//! - [`specfun`]: gamma and fractional-order Bessel kernel (J, I, K; K also
//!   on the complex rays arg z = ±π/4).
//! - [`model`]: configuration, effective angular momentum j per partial
//!   wave, flux decomposition, critical-channel enumeration and the planes
//!   bounding the non-self-adjoint region.
//! - [`bg`]: boundary-condition route; admixture coefficient μ_ν, phase
//!   shifts, unitary S-matrix and the ν < 0 bound state.
//! - [`ks`]: shell-regularization route; log-derivative matching, bound
//!   state, and the bridge ν(λ, r₀) between the two routes.
//! - [`oracle`]: independent numerical checks (pole search, exact shell
//!   bound state, deficiency-norm quadrature, boundary-value extraction).
//! - [`verify`]: the deterministic invariant suite behind `abcone verify`.
//!
//! The numerics are generic over the scalar type through [`real::Real`]
//! (`f32` or `f64`); the `*64` aliases at the crate root fix `f64`, which
//! is what every stated tolerance assumes.

pub mod bg;
pub mod error;
pub mod ks;
pub mod model;
pub mod oracle;
pub mod real;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
pub use real::Real;

pub type PhysicalConfig64 = model::PhysicalConfig<f64>;
pub type Channel64 = model::Channel<f64>;
pub type FluxParts64 = model::FluxParts<f64>;
pub type AlphaMinReport64 = model::AlphaMinReport<f64>;
pub type ExtensionParam64 = bg::ExtensionParam<f64>;
pub type ScatteringEntry64 = bg::ScatteringEntry<f64>;
pub type BoundState64 = bg::BoundState<f64>;
pub type WaveSample64 = bg::WaveSample<f64>;
pub type ShellConfig64 = ks::ShellConfig<f64>;
pub type EvalPolicy64 = specfun::EvalPolicy<f64>;
pub type RootFindSpec64 = oracle::RootFindSpec<f64>;
pub type QuadratureReport64 = oracle::QuadratureReport<f64>;
