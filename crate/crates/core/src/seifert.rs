//! Seifert matrices of positive braid closures from the brick basis of the
//! fence diagram.
//!
//! Each brick is the cycle bounded by two consecutive bars of one column.
//! With `V[x][y] = lk(γ_x, γ_y⁺)` the entries are:
//!
//! * `V[x][x] = -1`;
//! * bricks `x` below `y` in the same column sharing a bar: `V[x][y] = 1`,
//!   `V[y][x] = 0`;
//! * bricks in adjacent columns whose intervals interleave as
//!   `s_x < s_y < t_x < t_y`: `V[x][y] = +1` when `y` sits one column to the
//!   right of `x`, `-1` when one column to the left, and `V[y][x] = 0`;
//! * every other pair (nested, disjoint, far apart): 0.
//!
//! This makes positive braids have negative signature and gives
//! `|det V| = 1` on non-split closures.

use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, FenceDiagram};
use crate::error::Result;
use crate::inertia::{self, Inertia, SymmetricIntMatrix};

/// The cycle between two consecutive bars of one column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Brick {
    pub column: usize,
    /// 1-based position of the brick within its column.
    pub rank: usize,
    pub lower_time: usize,
    pub upper_time: usize,
}

impl Brick {
    /// Label `(column, k)` used in matrix exports.
    pub fn label(&self) -> String {
        format!("({}, {})", self.column, self.rank)
    }
}

/// Bricks ordered by column, then bottom to top.
pub fn brick_basis(fd: &FenceDiagram) -> Vec<Brick> {
    let mut bricks = Vec::new();
    for column in 1..fd.strands() {
        let times = fd.occurrences(column);
        for (k, pair) in times.windows(2).enumerate() {
            bricks.push(Brick { column, rank: k + 1, lower_time: pair[0], upper_time: pair[1] });
        }
    }
    bricks
}

fn linking(x: &Brick, y: &Brick) -> i64 {
    if x == y {
        return -1;
    }
    if x.column == y.column {
        return if x.upper_time == y.lower_time { 1 } else { 0 };
    }
    let interleaved = x.lower_time < y.lower_time && y.lower_time < x.upper_time && x.upper_time < y.upper_time;
    if !interleaved {
        return 0;
    }
    if y.column == x.column + 1 {
        1
    } else if x.column == y.column + 1 {
        -1
    } else {
        0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeifertMatrix {
    basis: Vec<Brick>,
    entries: Vec<Vec<i64>>,
}

impl SeifertMatrix {
    pub fn from_fence(fd: &FenceDiagram) -> Self {
        let basis = brick_basis(fd);
        let entries = basis.iter().map(|x| basis.iter().map(|y| linking(x, y)).collect()).collect();
        SeifertMatrix { basis, entries }
    }

    pub fn basis(&self) -> &[Brick] {
        &self.basis
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `V + Vᵀ`.
    pub fn symmetrized(&self) -> SymmetricIntMatrix {
        inertia::symmetrize(&self.entries).expect("Seifert matrix is square")
    }

    pub fn inertia(&self) -> Inertia {
        inertia::inertia(&self.symmetrized())
    }

    pub fn signature(&self) -> i64 {
        self.inertia().signature()
    }

    /// `{"basis": ["(column, k)", …], "matrix": [[…], …]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "basis": self.basis.iter().map(Brick::label).collect::<Vec<_>>(),
            "matrix": self.entries,
        })
    }
}

/// Seifert matrix of the closure of a positive word.
pub fn seifert_matrix(word: &BraidWord) -> Result<SeifertMatrix> {
    Ok(SeifertMatrix::from_fence(&word.fence_diagram()?))
}
