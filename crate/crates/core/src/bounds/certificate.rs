//! Certificate for the `5/12` bound on positive 4-braids: split `βⁿ` into
//! length-4 blocks, complete every non-exceptional block to `Δ`, `L` or `R`,
//! and measure the signature of `β̃ⁿ · rot(β̃ⁿ)` against the bound
//! `2k + 8(m - k) - 1`, where `m = nl/4` blocks of which `k` are exceptional.

use num_rational::Rational64;
use serde::Serialize;

use super::block::{complete_block, is_exceptional_block};
use crate::braid::BraidWord;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub word: BraidWord,
    pub n: usize,
    /// Number of length-4 blocks, `nl/4`.
    pub blocks: usize,
    /// Exceptional blocks (`a2 a1 a1 a2`, `a2 a3 a3 a2`) in the chosen shift.
    pub k: usize,
    /// Cyclic shift of `βⁿ` used: 0, 1 or 2 letters.
    pub shift_used: usize,
    pub tilde_word: BraidWord,
    /// `-σ(β̃ⁿ · rot(β̃ⁿ))`.
    pub measured: i64,
    /// `2k + 8(nl/4 - k) - 1`.
    pub bound: Rational64,
    pub holds: bool,
    /// `-σ(βⁿ)`.
    pub power_measured: i64,
    /// `5nl/12 - 2`.
    pub power_bound: Rational64,
    pub power_holds: bool,
}

fn count_exceptional(word: &BraidWord) -> Result<usize> {
    let mut k = 0;
    for chunk in word.letters().chunks(4) {
        if is_exceptional_block(&BraidWord::new(word.strands(), chunk.to_vec())?) {
            k += 1;
        }
    }
    Ok(k)
}

pub fn main_prop_certificate(word: &BraidWord, n: usize) -> Result<Certificate> {
    word.ensure_positive()?;
    if word.strands() != 4 {
        return Err(Error::InvalidArgument(format!("certificate needs a 4-braid, got {} strands", word.strands())));
    }
    let total = n * word.len();
    if n == 0 || !n.is_multiple_of(4) || !total.is_multiple_of(4) {
        return Err(Error::Divisibility { n, total });
    }
    let blocks = total / 4;
    let power = word.power(n);

    // The exceptional counts of the three shifts sum to at most nl/4, so
    // one of them has k <= nl/12.
    let mut chosen = None;
    for shift in 0..3 {
        let shifted = power.cyclic_shift(shift.min(total))?;
        let k = count_exceptional(&shifted)?;
        if 12 * k <= total {
            chosen = Some((shift, shifted, k));
            break;
        }
    }
    let Some((shift_used, shifted, k)) = chosen else {
        return Err(Error::InvalidArgument("no cyclic shift with k <= nl/12".into()));
    };

    let mut tilde = Vec::with_capacity(total + 2 * blocks);
    for chunk in shifted.letters().chunks(4) {
        let block = BraidWord::new(4, chunk.to_vec())?;
        let completion = complete_block(&block)?;
        match completion.target {
            Some(target) => tilde.extend_from_slice(target.word().letters()),
            None => tilde.extend_from_slice(chunk),
        }
    }
    let tilde_word = BraidWord::new(4, tilde)?;
    let doubled = tilde_word.concat(&tilde_word.rotate180())?;
    let measured = -super::sigma(&doubled)?;
    let k_i = k as i64;
    let m_i = blocks as i64;
    let bound = Rational64::from_integer(2 * k_i + 8 * (m_i - k_i) - 1);

    let power_measured = -super::sigma(&power)?;
    let power_bound = Rational64::new(5 * total as i64, 12) - 2;

    Ok(Certificate {
        word: word.clone(),
        n,
        blocks,
        k,
        shift_used,
        tilde_word,
        measured,
        holds: Rational64::from_integer(measured) >= bound,
        bound,
        power_measured,
        power_holds: Rational64::from_integer(power_measured) >= power_bound,
        power_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(idx: &[usize]) -> BraidWord {
        BraidWord::positive(4, idx).unwrap()
    }

    #[test]
    fn delta_fourth_power() {
        let c = main_prop_certificate(&w(&[1, 3, 2, 1, 3, 2]), 4).unwrap();
        assert_eq!(c.blocks, 6);
        assert_eq!(c.power_measured, 15);
        assert_eq!(c.power_bound, Rational64::from_integer(8));
        assert!(c.power_holds);
        assert!(c.holds);
    }

    #[test]
    fn exceptional_heavy_word() {
        // β = a2 a1 a1 a2: every unshifted block is exceptional, so a shift
        // is needed.
        let c = main_prop_certificate(&w(&[2, 1, 1, 2]), 4).unwrap();
        assert_ne!(c.shift_used, 0);
        assert!(12 * c.k <= 16);
        assert!(c.holds);
        assert!(c.power_holds);
    }

    #[test]
    fn contract() {
        assert!(matches!(main_prop_certificate(&w(&[1, 2, 3, 1]), 3), Err(Error::Divisibility { .. })));
        assert!(matches!(main_prop_certificate(&w(&[1, 2, 3, 1]), 0), Err(Error::Divisibility { .. })));
        let b3 = BraidWord::positive(3, &[1, 2]).unwrap();
        assert!(main_prop_certificate(&b3, 4).is_err());
    }
}
