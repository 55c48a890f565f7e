//! Error type shared by all modules.
//!
//! Diagnostics are carried as `f64` regardless of the scalar type in use so
//! the error enum stays non-generic. Every variant names the violated
//! condition together with the offending value.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A precondition on an input value failed.
    #[error("domain error: {constraint} violated, got {value}")]
    Domain {
        constraint: &'static str,
        value: f64,
    },

    /// The denominator of the irregular-solution admixture vanished: the
    /// requested (nu, k) pair sits on a pole.
    #[error("admixture pole: denominator vanishes at nu = {nu}, k = {k}, |j| = {j_abs}")]
    MuPole { nu: f64, k: f64, j_abs: f64 },

    /// |j| is numerically zero; the finite-extension formulas are singular
    /// there and only the regular (Friedrichs) solution is offered.
    #[error("degenerate channel: |j| = {j_abs} is below 1e-12; only the Friedrichs extension applies")]
    DegenerateChannel { j_abs: f64 },

    /// A bound-state existence condition failed.
    #[error("no bound state: {condition} violated, got {value}")]
    NoBoundState {
        condition: &'static str,
        value: f64,
    },

    /// A root-finder bracket does not enclose a sign change.
    #[error("bracket error: no sign change on [{lo}, {hi}]")]
    Bracket { lo: f64, hi: f64 },

    /// An iteration failed to converge.
    #[error("{what} did not converge after {iterations} iterations")]
    NonConvergence {
        what: &'static str,
        iterations: usize,
    },

    /// An extraction is too ill-conditioned to trust.
    #[error("ill-conditioned: {what}")]
    IllConditioned { what: &'static str },
}

impl Error {
    pub(crate) fn domain<T: num_traits::ToPrimitive>(constraint: &'static str, value: T) -> Self {
        Error::Domain {
            constraint,
            value: value.to_f64().unwrap_or(f64::NAN),
        }
    }
}
