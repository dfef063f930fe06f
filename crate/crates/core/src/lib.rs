//! Exact invariants of positive braid closures.
//!
//! The pipeline runs braid word → fence diagram → brick basis → Seifert
//! matrix → exact inertia of the symmetrized form. Around it sit a Garside
//! normal form solver for the word problem, a torus-link signature
//! recursion used as an independent check, and the constructive procedures
//! from the linear signature bounds for positive braids (`bounds`).
//!
//! Signatures follow the convention in which positive braids have negative
//! signature, so the closure of `a1^n` has signature `-(n-1)`.

pub mod bounds;
pub mod braid;
pub mod error;
pub mod garside;
pub mod inertia;
pub mod seifert;
pub mod torus;

pub use braid::{BraidWord, FenceDiagram, Letter, LinkInvariants, Sign};
pub use error::{Error, Result};
pub use garside::{NormalForm, PermutationBraid};
pub use inertia::{Inertia, SymmetricIntMatrix};
pub use seifert::{Brick, SeifertMatrix};
