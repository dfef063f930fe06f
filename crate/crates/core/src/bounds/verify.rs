//! Exhaustive verification of linear signature bounds on positive braids.
//!
//! Words of length `<= l_max` that use every generator (non-split closure)
//! are enumerated in parallel by leading digits. Words that are cyclic
//! rotations of one another are handled once, and classes are keyed by the
//! minimum over cyclic shifts of the Garside normal-form string. Signatures
//! are computed once per class.

use std::collections::BTreeMap;

use log::info;
use num_rational::Rational64;
use rayon::prelude::*;
use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::garside::normal_form;
use crate::seifert;

/// One deduplicated closure class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassRecord {
    pub key: String,
    /// Shortest, then lexicographically smallest, word seen for the class.
    pub word: BraidWord,
    pub b1: usize,
    pub sigma: i64,
}

/// All non-split positive words of bounded length on `b` strands, grouped
/// into classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Census {
    pub b: usize,
    pub l_max: usize,
    pub words: u64,
    pub classes: Vec<ClassRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub word: BraidWord,
    pub b1: usize,
    pub sigma: i64,
}

/// Result of checking `-σ > bound·b1 + offset` (or `>=` when not strict) on
/// every non-trivial class of a census.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub b: usize,
    pub l_max: usize,
    pub bound: Rational64,
    pub offset: Rational64,
    pub strict: bool,
    pub words_checked: u64,
    pub classes_checked: usize,
    pub counterexamples: Vec<Counterexample>,
    /// Non-trivial class with the smallest ratio `-σ / b1`.
    pub tightest: Option<Counterexample>,
}

impl BoundReport {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// Rows `(word, l, b1, sigma, ratio)` for the counterexamples; the ratio
    /// is `-σ/b1` printed as `p/q`.
    pub fn csv_rows(&self) -> Vec<(String, usize, usize, i64, String)> {
        self.counterexamples
            .iter()
            .map(|c| (c.word.to_string(), c.word.len(), c.b1, c.sigma, ratio(c.sigma, c.b1).to_string()))
            .collect()
    }
}

fn ratio(sigma: i64, b1: usize) -> Rational64 {
    Rational64::new(-sigma, b1 as i64)
}

fn decode(mut code: u64, len: usize, alphabet: u64) -> Vec<usize> {
    let mut idx = vec![0; len];
    for slot in idx.iter_mut().rev() {
        *slot = (code % alphabet) as usize + 1;
        code /= alphabet;
    }
    idx
}

/// Word count and `(class key, indices)` pairs found in one chunk.
type ChunkResult = (u64, Vec<(String, Vec<usize>)>);

/// Is `idx` the lexicographically least of its rotations?
fn is_least_rotation(idx: &[usize]) -> bool {
    let n = idx.len();
    (1..n).all(|s| {
        for i in 0..n {
            let (a, b) = (idx[i], idx[(i + s) % n]);
            if a != b {
                return a < b;
            }
        }
        true
    })
}

fn distinct_rotations(idx: &[usize]) -> u64 {
    let n = idx.len();
    (1..=n).find(|&p| n.is_multiple_of(p) && (0..n).all(|i| idx[i] == idx[(i + p) % n])).unwrap_or(n) as u64
}

fn class_key(idx: &[usize], b: usize) -> String {
    let mut rotated = idx.to_vec();
    let mut best: Option<String> = None;
    for _ in 0..idx.len().max(1) {
        let key = normal_form(&BraidWord::positive(b, &rotated).expect("valid")).canonical_string();
        if best.as_ref().is_none_or(|k| key < *k) {
            best = Some(key);
        }
        rotated.rotate_left(1);
    }
    best.expect("at least one rotation")
}

/// Enumerates and classifies all non-split positive words with
/// `1 <= length <= l_max` on `b` strands. Runs on the current rayon pool.
pub fn census(b: usize, l_max: usize) -> Result<Census> {
    if b < 2 {
        return Err(Error::TooFewStrands { strands: b, min: 2 });
    }
    if l_max == 0 {
        return Err(Error::InvalidArgument("l_max must be at least 1".into()));
    }
    let alphabet = (b - 1) as u64;
    let mut words = 0u64;
    let mut by_key: BTreeMap<String, Vec<usize>> = BTreeMap::new();

    for len in (b - 1).max(1)..=l_max {
        let total = alphabet
            .checked_pow(len as u32)
            .ok_or_else(|| Error::InvalidArgument(format!("word space too large at length {len}")))?;
        // Partition by leading digits: one task per prefix chunk.
        let chunk = (total / 4096).max(1);
        let found: Vec<ChunkResult> = (0..total.div_ceil(chunk))
            .into_par_iter()
            .map(|c| {
                let mut count = 0u64;
                let mut local = Vec::new();
                for code in c * chunk..((c + 1) * chunk).min(total) {
                    let idx = decode(code, len, alphabet);
                    if !is_least_rotation(&idx) {
                        continue;
                    }
                    let mut used = vec![false; b - 1];
                    idx.iter().for_each(|&i| used[i - 1] = true);
                    if !used.iter().all(|&u| u) {
                        continue;
                    }
                    count += distinct_rotations(&idx);
                    local.push((class_key(&idx, b), idx));
                }
                (count, local)
            })
            .collect();
        for (count, local) in found {
            words += count;
            for (key, idx) in local {
                by_key
                    .entry(key)
                    .and_modify(|best| {
                        if (idx.len(), &idx) < (best.len(), &*best) {
                            *best = idx.clone();
                        }
                    })
                    .or_insert(idx);
            }
        }
        info!("b={b} length {len}/{l_max}: {words} words, {} classes so far", by_key.len());
    }

    let classes: Vec<ClassRecord> = by_key
        .into_par_iter()
        .map(|(key, idx)| {
            let word = BraidWord::positive(b, &idx).expect("valid");
            let b1 = word.len() + 1 - b;
            let sigma = seifert::seifert_matrix(&word).expect("positive").signature();
            ClassRecord { key, word, b1, sigma }
        })
        .collect();
    info!("b={b} l<={l_max}: signatures computed for {} classes", classes.len());
    Ok(Census { b, l_max, words, classes })
}

impl Census {
    /// Checks `-σ > slope·b1 + offset` (`>=` if not strict) on non-trivial
    /// classes.
    pub fn check(&self, slope: Rational64, offset: Rational64, strict: bool) -> BoundReport {
        let mut counterexamples = Vec::new();
        let mut tightest: Option<&ClassRecord> = None;
        for rec in self.classes.iter().filter(|r| r.b1 > 0) {
            let lhs = Rational64::from_integer(-rec.sigma);
            let rhs = slope * Rational64::from_integer(rec.b1 as i64) + offset;
            let ok = if strict { lhs > rhs } else { lhs >= rhs };
            if !ok {
                counterexamples.push(Counterexample { word: rec.word.clone(), b1: rec.b1, sigma: rec.sigma });
            }
            if tightest.is_none_or(|t| ratio(rec.sigma, rec.b1) < ratio(t.sigma, t.b1)) {
                tightest = Some(rec);
            }
        }
        BoundReport {
            b: self.b,
            l_max: self.l_max,
            bound: slope,
            offset,
            strict,
            words_checked: self.words,
            classes_checked: self.classes.len(),
            counterexamples,
            tightest: tightest.map(|t| Counterexample { word: t.word.clone(), b1: t.b1, sigma: t.sigma }),
        }
    }
}

/// Checks `-σ(β) > bound·b1(β)` (or `>=`) on every non-trivial non-split
/// positive `b`-braid of length at most `l_max`.
pub fn verify_bound(b: usize, l_max: usize, bound: Rational64, strict: bool) -> Result<BoundReport> {
    Ok(census(b, l_max)?.check(bound, Rational64::from_integer(0), strict))
}
