//! Reduction of a positive braid on many strands to a connected sum of
//! braids on at most `b` strands by deleting letters.

use serde::Serialize;

use crate::braid::{BraidWord, Letter};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Reduction {
    /// Offset `i` in `1..=b_target` of the thinned generator family.
    pub offset: usize,
    /// The word with all but the leftmost `a_k` deleted for each
    /// `k ≡ offset (mod b_target)`.
    pub reduced: BraidWord,
    /// Connected-sum factors of the reduced closure, each on at most
    /// `b_target` strands. Single-strand pieces are omitted.
    pub components: Vec<BraidWord>,
    pub b1_original: usize,
    pub b1_reduced: usize,
}

impl Reduction {
    /// Checks `b1(reduced) >= (b-1)/b · b1(original)` exactly.
    pub fn satisfies_betti_bound(&self, b_target: usize) -> bool {
        self.b1_reduced * b_target >= (b_target - 1) * self.b1_original
    }
}

/// Columns hit by the thinning for offset `i`.
fn thinned_columns(strands: usize, b_target: usize, offset: usize) -> impl Iterator<Item = usize> {
    (offset..strands).step_by(b_target)
}

fn thin(word: &BraidWord, b_target: usize, offset: usize) -> BraidWord {
    let mut hit = vec![false; word.strands()];
    for k in thinned_columns(word.strands(), b_target, offset) {
        hit[k] = true;
    }
    let mut seen = vec![false; word.strands()];
    let letters = word
        .letters()
        .iter()
        .copied()
        .filter(|l| {
            if !hit[l.index] {
                return true;
            }
            let first = !seen[l.index];
            seen[l.index] = true;
            first
        })
        .collect();
    BraidWord::new(word.strands(), letters).expect("same strands")
}

/// Splits a word at the single-occurrence columns `cuts` into words on the
/// strand blocks between consecutive cuts.
fn split_at_columns(word: &BraidWord, cuts: &[usize]) -> Vec<BraidWord> {
    let mut bounds = Vec::with_capacity(cuts.len() + 2);
    bounds.push(0);
    bounds.extend_from_slice(cuts);
    bounds.push(word.strands());
    let mut pieces = Vec::new();
    for pair in bounds.windows(2) {
        // Strands pair[0]+1 ..= pair[1], columns pair[0]+1 .. pair[1].
        let (lo, hi) = (pair[0], pair[1]);
        let strands = hi - lo;
        if strands < 2 {
            continue;
        }
        let letters = word
            .letters()
            .iter()
            .filter(|l| l.index > lo && l.index < hi)
            .map(|l| Letter { index: l.index - lo, sign: l.sign })
            .collect();
        pieces.push(BraidWord::new(strands, letters).expect("reindexed into range"));
    }
    pieces
}

/// Picks the offset `i` in `1..=b_target` maximizing `b1(β(i))` (smallest
/// `i` on ties) and decomposes `β(i)` into its connected-sum factors.
pub fn reduction_decompose(word: &BraidWord, b_target: usize) -> Result<Reduction> {
    word.ensure_positive()?;
    let strands = word.strands();
    if b_target < 2 || b_target >= strands {
        return Err(Error::InvalidTarget { target: b_target, strands });
    }
    let (b1_original, c) = word.betti_and_c()?;
    if c != 1 {
        return Err(Error::SplitClosure { components: c });
    }

    let mut best: Option<(usize, BraidWord, usize)> = None;
    for offset in 1..=b_target {
        let reduced = thin(word, b_target, offset);
        let (b1, _) = reduced.betti_and_c()?;
        if best.as_ref().is_none_or(|(_, _, b)| b1 > *b) {
            best = Some((offset, reduced, b1));
        }
    }
    let (offset, reduced, b1_reduced) = best.expect("b_target >= 2");
    let cuts: Vec<usize> = thinned_columns(strands, b_target, offset).collect();
    let components = split_at_columns(&reduced, &cuts);
    Ok(Reduction { offset, reduced, components, b1_original, b1_reduced })
}
