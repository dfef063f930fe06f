//! Braid words, their text and JSON formats, structural operations, and
//! fence diagrams.

use std::fmt;

use petgraph::graph::UnGraph;
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Neg,
    Pos,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// One generator `a_index` or its inverse. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub index: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn pos(index: usize) -> Self {
        Letter { index, sign: Sign::Pos }
    }

    pub fn neg(index: usize) -> Self {
        Letter { index, sign: Sign::Neg }
    }

    pub fn is_positive(self) -> bool {
        self.sign == Sign::Pos
    }

    pub fn inverse(self) -> Self {
        Letter { index: self.index, sign: self.sign.flip() }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Pos => write!(f, "a{}", self.index),
            Sign::Neg => write!(f, "A{}", self.index),
        }
    }
}

/// A word in the Artin generators of the braid group on `strands` strands.
///
/// Every letter index lies in `1..strands`. The empty word is allowed on any
/// strand count and closes up to the unlink.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::TooFewStrands { strands, min: 1 });
        }
        for l in &letters {
            if l.index == 0 || l.index >= strands {
                return Err(Error::IndexOutOfRange { index: l.index as i64, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Positive word from 1-based generator indices.
    pub fn positive(strands: usize, indices: &[usize]) -> Result<Self> {
        Self::new(strands, indices.iter().map(|&i| Letter::pos(i)).collect())
    }

    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    /// Parses whitespace-separated tokens `a<k>`, `A<k>` (inverse) or signed
    /// integers (`3`, `-3`, `+3`).
    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        if strands == 0 {
            return Err(Error::TooFewStrands { strands, min: 1 });
        }
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let malformed = || Error::MalformedToken { token: token.to_string() };
            let (value, sign): (i64, Sign) = if let Some(rest) = token.strip_prefix('a') {
                (parse_digits(rest).ok_or_else(malformed)?, Sign::Pos)
            } else if let Some(rest) = token.strip_prefix('A') {
                (parse_digits(rest).ok_or_else(malformed)?, Sign::Neg)
            } else {
                let (neg, digits) = match token.as_bytes()[0] {
                    b'-' => (true, &token[1..]),
                    b'+' => (false, &token[1..]),
                    _ => (false, token),
                };
                let v = parse_digits(digits).ok_or_else(malformed)?;
                if v == 0 {
                    return Err(Error::IndexOutOfRange { index: 0, strands });
                }
                (v, if neg { Sign::Neg } else { Sign::Pos })
            };
            if value < 1 || value >= strands as i64 {
                let index = if sign == Sign::Neg && !token.starts_with('A') { -value } else { value };
                return Err(Error::IndexOutOfRange { index, strands });
            }
            letters.push(Letter { index: value as usize, sign });
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.is_positive())
    }

    pub fn ensure_positive(&self) -> Result<()> {
        match self.letters.iter().position(|l| !l.is_positive()) {
            Some(position) => Err(Error::NotPositive { position }),
            None => Ok(()),
        }
    }

    /// Generator indices in order, ignoring signs.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.letters.iter().map(|l| l.index)
    }

    fn check_same_strands(&self, other: &BraidWord) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: other.strands });
        }
        Ok(())
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check_same_strands(other)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn power(&self, n: usize) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.repeat(n) }
    }

    /// Rotates the letter sequence left by `k`; the closure is unchanged.
    pub fn cyclic_shift(&self, k: usize) -> Result<BraidWord> {
        if k > self.len() {
            return Err(Error::ShiftOutOfRange { shift: k, len: self.len() });
        }
        let mut letters = self.letters.clone();
        letters.rotate_left(k);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// Planar rotation by 180 degrees: reverse the word and send `a_i` to
    /// `a_{b-i}`, keeping signs.
    pub fn rotate180(&self) -> BraidWord {
        let b = self.strands;
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|l| Letter { index: b - l.index, sign: l.sign })
            .collect();
        BraidWord { strands: b, letters }
    }

    /// Group inverse: reversed letters with flipped signs.
    pub fn inverse(&self) -> BraidWord {
        let letters = self.letters.iter().rev().map(|l| l.inverse()).collect();
        BraidWord { strands: self.strands, letters }
    }

    pub fn without_letter(&self, position: usize) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.remove(position);
        BraidWord { strands: self.strands, letters }
    }

    pub fn with_letter(&self, position: usize, letter: Letter) -> Result<BraidWord> {
        if letter.index == 0 || letter.index >= self.strands {
            return Err(Error::IndexOutOfRange { index: letter.index as i64, strands: self.strands });
        }
        if position > self.len() {
            return Err(Error::ShiftOutOfRange { shift: position, len: self.len() });
        }
        let mut letters = self.letters.clone();
        letters.insert(position, letter);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// Number of occurrences of each generator, indexed `0..strands-1` for
    /// `a_1 .. a_{b-1}`.
    pub fn generator_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.strands.saturating_sub(1)];
        for l in &self.letters {
            counts[l.index - 1] += 1;
        }
        counts
    }

    /// `c`: one plus the number of generators absent from the word.
    pub fn split_components(&self) -> usize {
        1 + self.generator_counts().iter().filter(|&&n| n == 0).count()
    }

    /// `(b1, c)` from the Bennequin count `b1 = l - b + c`.
    pub fn betti_and_c(&self) -> Result<(usize, usize)> {
        self.ensure_positive()?;
        let c = self.split_components();
        Ok((self.len() + c - self.strands, c))
    }

    pub fn fence_diagram(&self) -> Result<FenceDiagram> {
        self.ensure_positive()?;
        let bars = self
            .letters
            .iter()
            .enumerate()
            .map(|(time, l)| Bar { column: l.index, time })
            .collect();
        Ok(FenceDiagram { strands: self.strands, bars })
    }
}

fn parse_digits(s: &str) -> Option<i64> {
    if s.is_empty() || !s.bytes().all(|c| c.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct BraidWordRepr {
    strands: usize,
    letters: Vec<(i64, i64)>,
}

impl Serialize for BraidWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        BraidWordRepr {
            strands: self.strands,
            letters: self.letters.iter().map(|l| (l.index as i64, l.sign.as_i8() as i64)).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BraidWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = BraidWordRepr::deserialize(deserializer)?;
        let mut letters = Vec::with_capacity(repr.letters.len());
        for (index, sign) in repr.letters {
            let sign = match sign {
                1 => Sign::Pos,
                -1 => Sign::Neg,
                s => return Err(de::Error::custom(format!("letter sign must be 1 or -1, got {s}"))),
            };
            if index < 1 {
                return Err(de::Error::custom(format!("letter index must be positive, got {index}")));
            }
            letters.push(Letter { index: index as usize, sign });
        }
        BraidWord::new(repr.strands, letters).map_err(de::Error::custom)
    }
}

/// A horizontal bar of a fence diagram, one per crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bar {
    pub column: usize,
    pub time: usize,
}

/// Vertical strand lines joined by one horizontal bar per letter of a
/// positive word. The graph is a deformation retract of the fiber surface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FenceDiagram {
    strands: usize,
    bars: Vec<Bar>,
}

impl FenceDiagram {
    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Bars in increasing time order.
    pub fn bars(&self) -> &[Bar] {
        &self.bars
    }

    /// Bar times in column `column`, increasing.
    pub fn occurrences(&self, column: usize) -> Vec<usize> {
        self.bars.iter().filter(|b| b.column == column).map(|b| b.time).collect()
    }

    /// The fence as an undirected graph: a node per bar endpoint (or one
    /// node for a strand without bars), an edge per bar, and an edge per
    /// strand segment between consecutive endpoints.
    pub fn graph(&self) -> UnGraph<(), ()> {
        let mut g = UnGraph::new_undirected();
        let mut on_strand: Vec<Vec<_>> = vec![Vec::new(); self.strands];
        for bar in &self.bars {
            let left = g.add_node(());
            let right = g.add_node(());
            g.add_edge(left, right, ());
            on_strand[bar.column - 1].push(left);
            on_strand[bar.column].push(right);
        }
        for nodes in &mut on_strand {
            if nodes.is_empty() {
                nodes.push(g.add_node(()));
            }
            for w in nodes.windows(2) {
                g.add_edge(w[0], w[1], ());
            }
        }
        g
    }

    pub fn graph_components(&self) -> usize {
        petgraph::algo::connected_components(&self.graph())
    }

    /// Cycle rank `E - V + components` of the fence graph.
    pub fn graph_betti(&self) -> usize {
        let g = self.graph();
        let comps = petgraph::algo::connected_components(&g);
        g.edge_count() + comps - g.node_count()
    }
}

/// `(b1, c, sigma, nullity)` of a braid closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinkInvariants {
    pub b1: usize,
    pub c: usize,
    pub sigma: i64,
    pub nullity: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(b: usize, idx: &[usize]) -> BraidWord {
        BraidWord::positive(b, idx).unwrap()
    }

    #[test]
    fn parses_figure_one_word() {
        let word = BraidWord::parse("a1 a2 a1 a3 a2 a2 a1 a3", 4).unwrap();
        assert_eq!(word.indices().collect::<Vec<_>>(), vec![1, 2, 1, 3, 2, 2, 1, 3]);
        assert!(word.is_positive());
    }

    #[test]
    fn parses_empty_and_inverse() {
        assert!(BraidWord::parse("", 3).unwrap().is_empty());
        let word = BraidWord::parse("a1 A1", 2).unwrap();
        assert_eq!(word.letters(), &[Letter::pos(1), Letter::neg(1)]);
    }

    #[test]
    fn parses_signed_integers() {
        let word = BraidWord::parse("1 -2 +3", 4).unwrap();
        assert_eq!(word.letters(), &[Letter::pos(1), Letter::neg(2), Letter::pos(3)]);
        assert_eq!(word.to_string(), "a1 A2 a3");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(BraidWord::parse("b1", 3), Err(Error::MalformedToken { .. })));
        assert!(matches!(BraidWord::parse("a", 3), Err(Error::MalformedToken { .. })));
        assert!(matches!(BraidWord::parse("a1x", 3), Err(Error::MalformedToken { .. })));
        assert!(matches!(BraidWord::parse("a3", 3), Err(Error::IndexOutOfRange { index: 3, .. })));
        assert!(matches!(BraidWord::parse("0", 3), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(BraidWord::parse("-5", 3), Err(Error::IndexOutOfRange { index: -5, .. })));
        assert!(BraidWord::parse("a1", 0).is_err());
    }

    #[test]
    fn json_shape() {
        let word = BraidWord::parse("a1 A2", 3).unwrap();
        let json = serde_json::to_string(&word).unwrap();
        assert_eq!(json, r#"{"strands":3,"letters":[[1,1],[2,-1]]}"#);
        let back: BraidWord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, word);
        assert!(serde_json::from_str::<BraidWord>(r#"{"strands":3,"letters":[[3,1]]}"#).is_err());
        assert!(serde_json::from_str::<BraidWord>(r#"{"strands":3,"letters":[[1,2]]}"#).is_err());
    }

    #[test]
    fn fence_of_figure_one() {
        let fd = w(4, &[1, 2, 1, 3, 2, 2, 1, 3]).fence_diagram().unwrap();
        assert_eq!(fd.bars().len(), 8);
        assert_eq!(fd.graph_components(), 1);
        assert_eq!(fd.graph_betti(), 5);
    }

    #[test]
    fn fence_of_unlink_and_trefoil() {
        let fd = w(3, &[]).fence_diagram().unwrap();
        assert_eq!(fd.bars().len(), 0);
        assert_eq!(fd.graph_components(), 3);
        // Three rungs between two rails: two independent cycles.
        let fd = w(2, &[1, 1, 1]).fence_diagram().unwrap();
        assert_eq!(fd.occurrences(1), vec![0, 1, 2]);
        assert_eq!(fd.graph_betti(), 2);
    }

    #[test]
    fn fence_rejects_negative() {
        let word = BraidWord::parse("a1 A1", 2).unwrap();
        assert_eq!(word.fence_diagram().unwrap_err(), Error::NotPositive { position: 1 });
    }

    #[test]
    fn betti_counts() {
        assert_eq!(w(4, &[1, 2, 1, 3, 2, 2, 1, 3]).betti_and_c().unwrap(), (5, 1));
        assert_eq!(w(4, &[]).betti_and_c().unwrap(), (0, 4));
        assert_eq!(w(2, &[1, 1, 1]).betti_and_c().unwrap(), (2, 1));
    }

    #[test]
    fn concat_and_power() {
        assert_eq!(w(3, &[1]).concat(&w(3, &[2])).unwrap(), w(3, &[1, 2]));
        assert!(matches!(w(3, &[1]).concat(&w(4, &[2])), Err(Error::StrandMismatch { .. })));
        assert_eq!(w(4, &[1, 2, 3]).power(4).len(), 12);
        assert!(w(4, &[1, 2, 3]).power(0).is_empty());
    }

    #[test]
    fn shifts() {
        let word = w(4, &[2, 1, 1, 3, 2]);
        assert_eq!(word.cyclic_shift(1).unwrap(), w(4, &[1, 1, 3, 2, 2]));
        assert_eq!(word.cyclic_shift(0).unwrap(), word);
        assert_eq!(word.cyclic_shift(5).unwrap(), word);
        assert!(word.cyclic_shift(6).is_err());
    }

    #[test]
    fn rotation() {
        assert_eq!(w(4, &[1]).rotate180(), w(4, &[3]));
        let l = w(4, &[1, 2, 3, 1, 2, 3]);
        assert_eq!(l.rotate180(), l);
        let delta = w(4, &[1, 3, 2, 1, 3, 2]);
        assert_eq!(delta.rotate180(), w(4, &[2, 1, 3, 2, 1, 3]));
        let mixed = BraidWord::parse("a1 A2", 4).unwrap();
        assert_eq!(mixed.rotate180().to_string(), "A2 a3");
    }
}
