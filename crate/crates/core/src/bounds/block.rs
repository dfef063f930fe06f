//! Completing a length-4 positive 4-braid to `Δ`, `L` or `R` by adding two
//! generators.
//!
//! Adding a generator means choosing some positive word for the braid and
//! inserting a letter into it. The search first inserts both letters into
//! the given word. Blocks such as `a1 a1 a1 a1` only complete after
//! rewriting the intermediate five-letter braid, so a second pass tries
//! every positive word for it before the second insertion.

use std::sync::LazyLock;

use serde::Serialize;

use crate::braid::{BraidWord, Letter};
use crate::error::{Error, Result};
use crate::garside::{normal_form, NormalForm};

const STRANDS: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Target {
    Delta,
    L,
    R,
}

impl Target {
    pub const ALL: [Target; 3] = [Target::Delta, Target::L, Target::R];

    pub fn indices(self) -> [usize; 6] {
        match self {
            Target::Delta => [1, 3, 2, 1, 3, 2],
            Target::L => [1, 2, 3, 1, 2, 3],
            Target::R => [3, 2, 1, 3, 2, 1],
        }
    }

    pub fn word(self) -> BraidWord {
        BraidWord::positive(STRANDS, &self.indices()).expect("valid 4-braid")
    }

    fn normal_form(self) -> &'static NormalForm {
        static FORMS: LazyLock<[NormalForm; 3]> = LazyLock::new(|| Target::ALL.map(|t| normal_form(&t.word())));
        &FORMS[self as usize]
    }

    pub fn name(self) -> &'static str {
        match self {
            Target::Delta => "Delta",
            Target::L => "L",
            Target::R => "R",
        }
    }
}

const EXCEPTIONAL: [[usize; 4]; 2] = [[2, 1, 1, 2], [2, 3, 3, 2]];

static EXCEPTIONAL_FORMS: LazyLock<Vec<NormalForm>> = LazyLock::new(|| {
    EXCEPTIONAL
        .iter()
        .map(|idx| normal_form(&BraidWord::positive(STRANDS, idx).expect("valid 4-braid")))
        .collect()
});

/// Is the braid equal to `a2 a1 a1 a2` or `a2 a3 a3 a2`?
pub fn is_exceptional_block(block: &BraidWord) -> bool {
    block.strands() == STRANDS && EXCEPTIONAL_FORMS.contains(&normal_form(block))
}

/// Insert `a_generator` before position `position` (0-based, so
/// `position == len` appends).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Insertion {
    pub position: usize,
    pub generator: usize,
}

impl Insertion {
    fn apply(self, word: &BraidWord) -> BraidWord {
        word.with_letter(self.position, Letter::pos(self.generator)).expect("position and generator in range")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockCompletion {
    pub block: BraidWord,
    /// First insertion goes into `block`, the second into `rewritten` when
    /// present and otherwise into the result of the first.
    pub insertions: Option<[Insertion; 2]>,
    /// Alternative positive word for the five-letter intermediate braid.
    pub rewritten: Option<BraidWord>,
    pub target: Option<Target>,
}

impl BlockCompletion {
    pub fn is_complete(&self) -> bool {
        self.insertions.is_some() && self.target.is_some()
    }

    /// The six-letter word produced by the insertions.
    pub fn completed_word(&self) -> Option<BraidWord> {
        let [first, second] = self.insertions?;
        let intermediate = first.apply(&self.block);
        Some(second.apply(self.rewritten.as_ref().unwrap_or(&intermediate)))
    }
}

fn matching_target(word: &BraidWord) -> Option<Target> {
    let nf = normal_form(word);
    Target::ALL.into_iter().find(|t| *t.normal_form() == nf)
}

fn insertions(len: usize) -> impl Iterator<Item = Insertion> {
    (0..=len).flat_map(|position| (1..STRANDS).map(move |generator| Insertion { position, generator }))
}

/// All positive words of length `len` on four strands.
fn positive_words(len: usize) -> impl Iterator<Item = BraidWord> {
    let total = (STRANDS - 1).pow(len as u32);
    (0..total).map(move |mut code| {
        let mut idx = vec![0; len];
        for slot in idx.iter_mut().rev() {
            *slot = code % (STRANDS - 1) + 1;
            code /= STRANDS - 1;
        }
        BraidWord::positive(STRANDS, &idx).expect("valid indices")
    })
}

pub fn complete_block(block: &BraidWord) -> Result<BlockCompletion> {
    if block.len() != 4 || block.strands() != STRANDS {
        return Err(Error::InvalidBlock { len: block.len(), strands: block.strands() });
    }
    block.ensure_positive()?;
    let none = BlockCompletion { block: block.clone(), insertions: None, rewritten: None, target: None };
    if is_exceptional_block(block) {
        return Ok(none);
    }

    for first in insertions(4) {
        let once = first.apply(block);
        for second in insertions(5) {
            if let Some(target) = matching_target(&second.apply(&once)) {
                return Ok(BlockCompletion {
                    block: block.clone(),
                    insertions: Some([first, second]),
                    rewritten: None,
                    target: Some(target),
                });
            }
        }
    }

    let five_letter: Vec<(BraidWord, NormalForm)> = positive_words(5)
        .map(|w| {
            let nf = normal_form(&w);
            (w, nf)
        })
        .collect();
    for first in insertions(4) {
        let once = normal_form(&first.apply(block));
        for (alternative, _) in five_letter.iter().filter(|(_, nf)| *nf == once) {
            for second in insertions(5) {
                if let Some(target) = matching_target(&second.apply(alternative)) {
                    return Ok(BlockCompletion {
                        block: block.clone(),
                        insertions: Some([first, second]),
                        rewritten: Some(alternative.clone()),
                        target: Some(target),
                    });
                }
            }
        }
    }
    Ok(none)
}
