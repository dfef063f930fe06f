//! Signatures of torus links `T(p, q)` by the Gordon–Litherland–Murasugi
//! recursion, restricted to braid index `p <= 4`.
//!
//! The recursion reduces the larger parameter modulo twice the smaller one
//! and is used only as a cross-check of the Seifert pipeline.

use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// Largest supported braid index.
pub const MAX_P: i64 = 4;

/// Signature of `T(p, q)`, the closure of `(a1 ⋯ a_{p-1})^q`.
pub fn sigma_torus(p: i64, q: i64) -> Result<i64> {
    if !(2..=MAX_P).contains(&p) || q < 1 {
        return Err(Error::UnsupportedTorus { p, q });
    }
    Ok(recurse(p, q))
}

fn recurse(p: i64, q: i64) -> i64 {
    let (big, small) = if p >= q { (p, q) } else { (q, p) };
    if small == 1 {
        return 0;
    }
    let odd = small % 2 == 1;
    let sq = small * small;
    if big == small {
        // T(q, q): the reflection case below with 2q - p = q solved for σ.
        return if odd { -(sq - 1) / 2 } else { -(sq - 2) / 2 };
    }
    if big == 2 * small {
        return -(sq - 1);
    }
    if big > 2 * small {
        let shift = if odd { sq - 1 } else { sq };
        return recurse(big - 2 * small, small) - shift;
    }
    // small < big < 2 small
    let shift = if odd { sq - 1 } else { sq - 2 };
    -recurse(2 * small - big, small) - shift
}

/// The braid word `(a1 ⋯ a_{p-1})^q` whose closure is `T(p, q)`.
pub fn torus_word(p: usize, q: usize) -> Result<BraidWord> {
    if p < 2 {
        return Err(Error::TooFewStrands { strands: p, min: 2 });
    }
    let base: Vec<usize> = (1..p).collect();
    Ok(BraidWord::positive(p, &base)?.power(q))
}
