use num_rational::Rational64;
use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// Estimate of the homogenized signature `lim σ(βⁿ)/n` with a rigorous
/// enclosing interval.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AsymptoticEstimate {
    pub word: BraidWord,
    pub n_used: usize,
    pub estimate: Rational64,
    pub lower: Rational64,
    pub upper: Rational64,
}

impl AsymptoticEstimate {
    pub fn contains(&self, value: Rational64) -> bool {
        self.lower <= value && value <= self.upper
    }

    pub fn width(&self) -> Rational64 {
        self.upper - self.lower
    }
}

/// `σ(β^n)/n` for `n = n_max`. Since `|σ(γ) - σ̃(γ)| <= b - 1` and
/// `σ̃(βⁿ) = n σ̃(β)`, the limit lies within `(b-1)/n` of the estimate.
pub fn asymptotic_sigma(word: &BraidWord, n_max: usize) -> Result<AsymptoticEstimate> {
    if n_max == 0 {
        return Err(Error::InvalidArgument("n_max must be at least 1".into()));
    }
    word.ensure_positive()?;
    let n = n_max as i64;
    let s = super::sigma(&word.power(n_max))?;
    let estimate = Rational64::new(s, n);
    let radius = Rational64::new(word.strands() as i64 - 1, n);
    Ok(AsymptoticEstimate {
        word: word.clone(),
        n_used: n_max,
        estimate,
        lower: estimate - radius,
        upper: estimate + radius,
    })
}
