//! Branch-selection policy for the Bessel J evaluator.

use crate::error::{Error, Result};
use crate::real::Real;

/// Controls where the series and asymptotic representations take over.
///
/// The window between the two cutoffs is an overlap region where both
/// representations are valid; the consistency of the two branches there is
/// part of the verification suite. K uses fixed internal thresholds tied to
/// its cancellation budget rather than this policy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalPolicy<T> {
    /// Arguments at or below this use the power series.
    pub series_cutoff: T,
    /// Arguments at or above this use large-argument asymptotics.
    pub asymptotic_cutoff: T,
    /// Series term budget before giving up.
    pub max_terms: usize,
    /// Absolute floor for series termination.
    pub abs_tol: T,
}

impl<T: Real> Default for EvalPolicy<T> {
    fn default() -> Self {
        EvalPolicy {
            series_cutoff: T::of(12.0),
            // 18 rather than a wider window: past ~19 the series loses too
            // much to cancellation in f64 for the two branches to agree at
            // the 1e-8 level demanded in the overlap check.
            asymptotic_cutoff: T::of(18.0),
            max_terms: 400,
            abs_tol: T::min_positive_value() * T::of(1e8),
        }
    }
}

impl<T: Real> EvalPolicy<T> {
    pub fn validate(&self) -> Result<()> {
        if !(self.series_cutoff > T::zero()) {
            return Err(Error::domain(
                "series_cutoff must be positive",
                self.series_cutoff,
            ));
        }
        if !(self.asymptotic_cutoff >= self.series_cutoff) {
            return Err(Error::domain(
                "series_cutoff <= asymptotic_cutoff required",
                self.asymptotic_cutoff,
            ));
        }
        if self.max_terms == 0 {
            return Err(Error::domain("max_terms must be positive", 0.0));
        }
        if !(self.abs_tol > T::zero()) {
            return Err(Error::domain("abs_tol must be positive", self.abs_tol));
        }
        Ok(())
    }
}
