//! Word problem in the braid group via the Garside left normal form.
//!
//! A braid is written as `Δ^inf · P_1 ⋯ P_r` where each `P_j` is a
//! permutation braid different from the identity and from `Δ`, and every
//! consecutive pair is left-weighted. Permutation braids are stored as
//! permutations; all lattice operations are carried out on those.

use std::fmt;

use serde::Serialize;

use crate::braid::{BraidWord, Letter, Sign};
use crate::error::{Error, Result};

/// A positive braid in which every pair of strands crosses at most once,
/// stored as the permutation `top position -> bottom position` (0-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PermutationBraid {
    perm: Vec<u8>,
}

impl PermutationBraid {
    pub fn identity(strands: usize) -> Self {
        PermutationBraid { perm: (0..strands as u8).collect() }
    }

    pub fn delta(strands: usize) -> Self {
        PermutationBraid { perm: (0..strands as u8).rev().collect() }
    }

    /// The generator `a_index` (1-based).
    pub fn generator(strands: usize, index: usize) -> Self {
        let mut p = Self::identity(strands);
        p.perm.swap(index - 1, index);
        p
    }

    pub fn from_perm(perm: Vec<u8>) -> Self {
        PermutationBraid { perm }
    }

    pub fn perm(&self) -> &[u8] {
        &self.perm
    }

    pub fn strands(&self) -> usize {
        self.perm.len()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| p as usize == i)
    }

    pub fn is_delta(&self) -> bool {
        let n = self.perm.len();
        self.perm.iter().enumerate().all(|(i, &p)| p as usize == n - 1 - i)
    }

    /// Crossing count.
    pub fn length(&self) -> usize {
        let n = self.perm.len();
        let mut inv = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.perm[i] > self.perm[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// Does some positive word for this braid start with `a_{i+1}`?
    /// (`i` is 0-based.)
    fn starts_with(&self, i: usize) -> bool {
        self.perm[i] > self.perm[i + 1]
    }

    /// Does some positive word for this braid end with `a_{i+1}`?
    fn ends_with(&self, i: usize) -> bool {
        let (mut at_i, mut at_next) = (0, 0);
        for (top, &bottom) in self.perm.iter().enumerate() {
            if bottom as usize == i {
                at_i = top;
            } else if bottom as usize == i + 1 {
                at_next = top;
            }
        }
        at_i > at_next
    }

    /// Starting set: 1-based generators that can begin a word for this braid.
    pub fn starting_set(&self) -> Vec<usize> {
        (0..self.strands().saturating_sub(1)).filter(|&i| self.starts_with(i)).map(|i| i + 1).collect()
    }

    /// Finishing set: 1-based generators that can end a word for this braid.
    pub fn finishing_set(&self) -> Vec<usize> {
        (0..self.strands().saturating_sub(1)).filter(|&i| self.ends_with(i)).map(|i| i + 1).collect()
    }

    /// Right-multiply by `a_{i+1}`; caller ensures the result stays simple.
    fn push_right(&mut self, i: usize) {
        for p in self.perm.iter_mut() {
            if *p as usize == i {
                *p = (i + 1) as u8;
            } else if *p as usize == i + 1 {
                *p = i as u8;
            }
        }
    }

    /// Left-divide by `a_{i+1}`; caller ensures the braid starts with it.
    fn pop_left(&mut self, i: usize) {
        self.perm.swap(i, i + 1);
    }

    /// Conjugation by the half twist, `a_i -> a_{b-i}`.
    pub fn flip(&self) -> Self {
        let n = self.perm.len() as u8;
        let perm = (0..self.perm.len()).rev().map(|i| n - 1 - self.perm[i]).collect();
        PermutationBraid { perm }
    }

    /// `Δ · a_{index}^{-1}`, the left complement of a generator.
    fn delta_over_generator(strands: usize, index: usize) -> Self {
        let mut d = Self::delta(strands);
        // Δ = X·a_i, so X is Δ with bottom positions i-1, i swapped back.
        d.push_right(index - 1);
        d
    }

    /// A positive word for this permutation braid.
    pub fn to_word(&self) -> BraidWord {
        let mut rest = self.clone();
        let mut letters = Vec::with_capacity(self.length());
        while let Some(i) = (0..rest.strands().saturating_sub(1)).find(|&i| rest.starts_with(i)) {
            letters.push(Letter::pos(i + 1));
            rest.pop_left(i);
        }
        BraidWord::new(self.strands().max(1), letters).expect("indices in range")
    }
}

impl fmt::Display for PermutationBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.perm.len() > 9;
        for (i, &p) in self.perm.iter().enumerate() {
            if wide && i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", p + 1)?;
        }
        Ok(())
    }
}

/// Makes the pair `(left, right)` left-weighted by moving generators from
/// the front of `right` onto the end of `left`. Returns whether anything
/// moved.
fn left_weight(left: &mut PermutationBraid, right: &mut PermutationBraid) -> bool {
    let gens = left.strands().saturating_sub(1);
    let mut moved = false;
    loop {
        let Some(i) = (0..gens).find(|&i| right.starts_with(i) && !left.ends_with(i)) else {
            return moved;
        };
        left.push_right(i);
        right.pop_left(i);
        moved = true;
    }
}

/// Garside left normal form `Δ^inf · factors`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct NormalForm {
    pub strands: usize,
    pub inf: i64,
    pub factors: Vec<PermutationBraid>,
}

impl NormalForm {
    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    /// Canonical key `Δ^k | p1 | p2 | …` with one-line permutations.
    pub fn canonical_string(&self) -> String {
        self.to_string()
    }

    /// A word for the braid: `Δ^inf` (using inverse letters when `inf < 0`)
    /// followed by positive words for the factors.
    pub fn to_word(&self) -> BraidWord {
        let half = half_twist_letters(self.strands);
        let mut letters = Vec::new();
        if self.inf >= 0 {
            for _ in 0..self.inf {
                letters.extend(half.iter().copied());
            }
        } else {
            for _ in 0..-self.inf {
                letters.extend(half.iter().rev().map(|l| l.inverse()));
            }
        }
        for p in &self.factors {
            letters.extend_from_slice(p.to_word().letters());
        }
        BraidWord::new(self.strands, letters).expect("indices in range")
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ^{}", self.inf)?;
        for p in &self.factors {
            write!(f, " | {p}")?;
        }
        Ok(())
    }
}

fn half_twist_letters(strands: usize) -> Vec<Letter> {
    let mut letters = Vec::with_capacity(strands * strands.saturating_sub(1) / 2);
    for top in (1..strands).rev() {
        letters.extend((1..=top).map(Letter::pos));
    }
    letters
}

/// Positive word for the half twist `Δ_b`, of length `b(b-1)/2`.
pub fn half_twist(strands: usize) -> Result<BraidWord> {
    if strands < 2 {
        return Err(Error::TooFewStrands { strands, min: 2 });
    }
    BraidWord::new(strands, half_twist_letters(strands))
}

pub fn normal_form(word: &BraidWord) -> NormalForm {
    let n = word.strands();
    // a_i^{-1} = Δ^{-1} · (Δ a_i^{-1}); pushing every Δ^{-1} to the front
    // conjugates the factors it passes by the flip.
    let negatives = word.letters().iter().filter(|l| l.sign == Sign::Neg).count();
    let mut passed = 0usize;
    let mut simples: Vec<PermutationBraid> = Vec::with_capacity(word.len());
    for l in word.letters() {
        let p = match l.sign {
            Sign::Pos => PermutationBraid::generator(n, l.index),
            Sign::Neg => {
                passed += 1;
                PermutationBraid::delta_over_generator(n, l.index)
            }
        };
        // Number of Δ^{-1} to the right of this factor.
        let right = negatives - passed;
        simples.push(if right % 2 == 1 { p.flip() } else { p });
    }

    let mut factors: Vec<PermutationBraid> = Vec::with_capacity(simples.len());
    for s in simples {
        factors.push(s);
        loop {
            let mut changed = false;
            for j in (1..factors.len()).rev() {
                let (head, tail) = factors.split_at_mut(j);
                if left_weight(&mut head[j - 1], &mut tail[0]) {
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        while factors.last().is_some_and(|p| p.is_identity()) {
            factors.pop();
        }
    }

    let mut inf = -(negatives as i64);
    let leading = factors.iter().take_while(|p| p.is_delta()).count();
    inf += leading as i64;
    factors.drain(..leading);
    NormalForm { strands: n, inf, factors }
}

pub fn braid_equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    if u.strands() != v.strands() {
        return Err(Error::StrandMismatch { left: u.strands(), right: v.strands() });
    }
    Ok(normal_form(u) == normal_form(v))
}

/// Does `Δ²` commute with `word`? Always true; exposed as a checkable
/// certificate for callers that want the normal-form evidence.
pub fn commutes_with_full_twist(word: &BraidWord) -> Result<bool> {
    let full = half_twist(word.strands())?.power(2);
    braid_equal(&word.concat(&full)?, &full.concat(word)?)
}
