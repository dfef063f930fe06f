//! Constructive procedures behind the linear signature bounds for positive
//! braids, plus exhaustive checks of those bounds on small braids.

mod asymptotic;
mod block;
mod certificate;
mod reduction;
mod verify;

pub use asymptotic::{asymptotic_sigma, AsymptoticEstimate};
pub use block::{complete_block, is_exceptional_block, BlockCompletion, Insertion, Target};
pub use certificate::{main_prop_certificate, Certificate};
pub use reduction::{reduction_decompose, Reduction};
pub use verify::{census, verify_bound, BoundReport, Census, ClassRecord, Counterexample};

use crate::braid::{BraidWord, LinkInvariants};
use crate::error::Result;
use crate::seifert;

/// `(b1, c, σ, nullity)` of the closure of a positive word.
pub fn invariants(word: &BraidWord) -> Result<LinkInvariants> {
    let (b1, c) = word.betti_and_c()?;
    let inertia = seifert::seifert_matrix(word)?.inertia();
    Ok(LinkInvariants { b1, c, sigma: inertia.signature(), nullity: inertia.nullity() })
}

/// Signature of the closure of a positive word.
pub fn sigma(word: &BraidWord) -> Result<i64> {
    Ok(seifert::seifert_matrix(word)?.signature())
}

/// Quasimorphism defect `|σ(uv) - σ(u) - σ(v)|`.
pub fn defect(u: &BraidWord, v: &BraidWord) -> Result<u64> {
    let uv = u.concat(v)?;
    Ok((sigma(&uv)? - sigma(u)? - sigma(v)?).unsigned_abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::torus::torus_word;

    fn w(b: usize, idx: &[usize]) -> BraidWord {
        BraidWord::positive(b, idx).unwrap()
    }

    #[test]
    fn invariants_examples() {
        let inv = invariants(&w(2, &[1, 1, 1])).unwrap();
        assert_eq!((inv.b1, inv.c, inv.sigma, inv.nullity), (2, 1, -2, 0));
        let inv = invariants(&w(2, &[])).unwrap();
        assert_eq!((inv.b1, inv.sigma), (0, 0));
        let inv = invariants(&torus_word(4, 4).unwrap()).unwrap();
        assert_eq!((inv.b1, inv.sigma), (9, -7));
    }

    #[test]
    fn hopf_link_is_not_degenerate() {
        let inv = invariants(&w(2, &[1, 1])).unwrap();
        assert_eq!((inv.b1, inv.sigma, inv.nullity), (1, -1, 0));
    }

    #[test]
    fn defect_examples() {
        // σ(a1^5) = -4 against σ(a1^2) + σ(a1^3) = -3.
        assert_eq!(defect(&w(2, &[1, 1]), &w(2, &[1, 1, 1])).unwrap(), 1);
        assert_eq!(defect(&w(4, &[]), &w(4, &[1, 2, 3, 2])).unwrap(), 0);
        assert!(defect(&w(3, &[1]), &w(4, &[1])).is_err());
        assert!(defect(&BraidWord::parse("A1", 2).unwrap(), &w(2, &[1])).is_err());
    }
}
