//! Special-function kernel: gamma for positive arguments, Bessel J of real
//! fractional order, and modified Bessel I, K of order in (0, 1), with K
//! extended to complex arguments on the rays arg z = ±π/4.
//!
//! Everything here is a pure function of its value arguments and safe for
//! unrestricted concurrent use.

mod besselj;
mod gamma;
mod modified;
mod policy;

pub use besselj::{bessel_j, bessel_j_asymptotic, bessel_j_series, bessel_j_with};
pub use gamma::{gamma, ln_gamma};
pub use modified::{
    bessel_i, bessel_i_prime, bessel_k, bessel_k_complex, bessel_k_prime,
};
pub(crate) use modified::{bessel_k_integral, ik_product, modified_i_any};
pub use policy::EvalPolicy;
