//! Exact inertia of symmetric integer matrices by congruence
//! diagonalization (Sylvester's law of inertia).
//!
//! Each step pivots on a nonzero diagonal entry `d` and replaces the
//! remaining block by `|d|·S - sgn(d)·v·vᵀ`, a positive multiple of the Schur
//! complement, so all arithmetic stays in the integers. Rows are divided by
//! their common content after each step. A fixed-width pass runs first and
//! falls back to big integers on overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Square integer matrix with `M = Mᵀ`, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymmetricIntMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl SymmetricIntMatrix {
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = check_square(rows)?;
        for i in 0..n {
            for j in i + 1..n {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(SymmetricIntMatrix { n, entries: rows.iter().flatten().copied().collect() })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.n.max(1)).take(self.n).map(|r| r.to_vec()).collect()
    }
}

fn check_square(rows: &[Vec<i64>]) -> Result<usize> {
    let n = rows.len();
    for (row, r) in rows.iter().enumerate() {
        if r.len() != n {
            return Err(Error::NotSquare { rows: n, row, cols: r.len() });
        }
    }
    Ok(n)
}

/// `V + Vᵀ`.
pub fn symmetrize(v: &[Vec<i64>]) -> Result<SymmetricIntMatrix> {
    let n = check_square(v)?;
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            entries.push(v[i][j] + v[j][i]);
        }
    }
    Ok(SymmetricIntMatrix { n, entries })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }

    pub fn nullity(&self) -> usize {
        self.zero
    }

    pub fn dim(&self) -> usize {
        self.positive + self.negative + self.zero
    }
}

pub fn inertia(m: &SymmetricIntMatrix) -> Inertia {
    let narrow: Vec<Vec<i128>> = m.rows().into_iter().map(|r| r.into_iter().map(i128::from).collect()).collect();
    if let Some(result) = diagonalize(narrow) {
        return result;
    }
    let wide: Vec<Vec<BigInt>> = m.rows().into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
    diagonalize(wide).expect("big integer arithmetic cannot overflow")
}

/// Congruence diagonalization; `None` on arithmetic overflow.
fn diagonalize<T>(mut a: Vec<Vec<T>>) -> Option<Inertia>
where
    T: Clone + Integer + Signed + CheckedAdd + CheckedSub + CheckedMul,
{
    let mut result = Inertia::default();
    while !a.is_empty() {
        let m = a.len();
        let pivot = match smallest_nonzero_diagonal(&a) {
            Some(p) => p,
            None => {
                let Some((i, j)) = nonzero_off_diagonal(&a) else {
                    result.zero += m;
                    break;
                };
                // Add row/column j to row/column i: the new diagonal entry
                // is a_ii + 2 a_ij + a_jj = 2 a_ij.
                for k in 0..m {
                    let v = a[i][k].checked_add(&a[j][k])?;
                    a[i][k] = v;
                }
                for k in 0..m {
                    let v = a[k][i].checked_add(&a[k][j])?;
                    a[k][i] = v;
                }
                i
            }
        };

        let d = a[pivot][pivot].clone();
        if d.is_positive() {
            result.positive += 1;
        } else {
            result.negative += 1;
        }
        let scale = d.abs();
        let negative_pivot = d.is_negative();
        let keep: Vec<usize> = (0..m).filter(|&k| k != pivot).collect();
        let mut next: Vec<Vec<T>> = Vec::with_capacity(m - 1);
        let mut content = T::zero();
        for &r in &keep {
            let mut row = Vec::with_capacity(m - 1);
            for &c in &keep {
                let lhs = scale.checked_mul(&a[r][c])?;
                let rhs = a[r][pivot].checked_mul(&a[pivot][c])?;
                let v = if negative_pivot { lhs.checked_add(&rhs)? } else { lhs.checked_sub(&rhs)? };
                content = content.gcd(&v);
                row.push(v);
            }
            next.push(row);
        }
        if !content.is_zero() && !content.is_one() {
            for row in next.iter_mut() {
                for v in row.iter_mut() {
                    *v = v.div_floor(&content);
                }
            }
        }
        a = next;
    }
    Some(result)
}

fn smallest_nonzero_diagonal<T: Clone + Signed + PartialOrd>(a: &[Vec<T>]) -> Option<usize> {
    let mut best: Option<(usize, T)> = None;
    for (i, row) in a.iter().enumerate() {
        let v = row[i].abs();
        if v.is_zero() {
            continue;
        }
        if best.as_ref().is_none_or(|(_, b)| v < *b) {
            best = Some((i, v));
        }
    }
    best.map(|(i, _)| i)
}

fn nonzero_off_diagonal<T: Zero>(a: &[Vec<T>]) -> Option<(usize, usize)> {
    for (i, row) in a.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if i != j && !v.is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}
