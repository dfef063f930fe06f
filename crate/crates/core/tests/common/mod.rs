//! Test-only oracles, independent of the production code paths they check.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use braidsig::BraidWord;

/// Characteristic polynomial `det(xI - M)` (coefficients low to high) by
/// fraction-free elimination over `Z[x]`. Leading principal minors of
/// `xI - M` are monic, so every pivot is nonzero and each division is an
/// exact division by a monic polynomial.
pub fn char_poly(m: &[Vec<i64>]) -> Vec<i128> {
    let n = m.len();
    if n == 0 {
        return vec![1];
    }
    let mut a: Vec<Vec<Vec<i128>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { vec![-(m[i][j] as i128), 1] } else { vec![-(m[i][j] as i128)] })
                .collect()
        })
        .collect();
    let mut prev: Vec<i128> = vec![1];
    for k in 0..n - 1 {
        for i in k + 1..n {
            for j in k + 1..n {
                let num = poly_sub(&poly_mul(&a[k][k], &a[i][j]), &poly_mul(&a[i][k], &a[k][j]));
                a[i][j] = poly_div_monic(&num, &prev);
            }
        }
        prev = a[k][k].clone();
    }
    trim(a[n - 1][n - 1].clone())
}

fn trim(mut p: Vec<i128>) -> Vec<i128> {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    p
}

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = out[i + j].checked_add(x.checked_mul(y).expect("overflow")).expect("overflow");
        }
    }
    trim(out)
}

fn poly_sub(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; a.len().max(b.len())];
    for (i, &x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, &y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn poly_div_monic(num: &[i128], den: &[i128]) -> Vec<i128> {
    let den = trim(den.to_vec());
    assert_eq!(*den.last().unwrap(), 1, "divisor must be monic");
    let dd = den.len() - 1;
    let mut rem = trim(num.to_vec());
    if rem.len() - 1 < dd {
        assert!(rem.iter().all(|&c| c == 0), "inexact division");
        return vec![0];
    }
    let mut q = vec![0i128; rem.len() - dd];
    for k in (0..q.len()).rev() {
        let c = rem[k + dd];
        q[k] = c;
        for (i, &d) in den.iter().enumerate() {
            rem[k + i] -= c * d;
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "inexact division");
    trim(q)
}

fn sign_changes(coeffs: impl Iterator<Item = i128>) -> usize {
    let mut last = 0i128;
    let mut changes = 0;
    for c in coeffs.filter(|&c| c != 0) {
        if last != 0 && (c > 0) != (last > 0) {
            changes += 1;
        }
        last = c;
    }
    changes
}

/// `(positive, negative, zero)` eigenvalue counts of a symmetric matrix from
/// Descartes' rule on its (real-rooted) characteristic polynomial.
pub fn descartes_inertia(m: &[Vec<i64>]) -> (usize, usize, usize) {
    let p = char_poly(m);
    let zero = p.iter().take_while(|&&c| c == 0).count();
    let q = &p[zero..];
    let pos = sign_changes(q.iter().copied());
    let neg = sign_changes(q.iter().enumerate().map(|(i, &c)| if i % 2 == 1 { -c } else { c }));
    (pos, neg, zero)
}

/// Exact determinant by Bareiss elimination with row pivoting.
pub fn determinant(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// All positive words on `b` strands of exactly length `len`.
pub fn positive_words(b: usize, len: usize) -> Vec<BraidWord> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w: Vec<usize>| {
                (1..b).map(move |g| {
                    let mut w = w.clone();
                    w.push(g);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(|idx| BraidWord::positive(b, &idx).unwrap()).collect()
}

/// All positive words on `b` strands of length `0..=max_len`.
pub fn positive_words_up_to(b: usize, max_len: usize) -> Vec<BraidWord> {
    (0..=max_len).flat_map(|l| positive_words(b, l)).collect()
}

fn relation_neighbours(w: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for i in 0..w.len().saturating_sub(1) {
        if w[i].abs_diff(w[i + 1]) > 1 {
            let mut v = w.to_vec();
            v.swap(i, i + 1);
            out.push(v);
        }
    }
    for i in 0..w.len().saturating_sub(2) {
        if w[i] == w[i + 2] && w[i].abs_diff(w[i + 1]) == 1 {
            let mut v = w.to_vec();
            v[i] = w[i + 1];
            v[i + 1] = w[i];
            v[i + 2] = w[i + 1];
            out.push(v);
        }
    }
    out
}

/// Orbit of a positive word under the positive braid relations.
pub fn rewriting_orbit(w: &[usize]) -> HashSet<Vec<usize>> {
    let mut seen = HashSet::from([w.to_vec()]);
    let mut queue = VecDeque::from([w.to_vec()]);
    while let Some(x) = queue.pop_front() {
        for y in relation_neighbours(&x) {
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Class label for each word under the rewriting orbits of a word list.
pub fn orbit_labels(words: &[Vec<usize>]) -> HashMap<Vec<usize>, usize> {
    let mut label = HashMap::new();
    let mut next = 0;
    for w in words {
        if label.contains_key(w) {
            continue;
        }
        for x in rewriting_orbit(w) {
            label.insert(x, next);
        }
        next += 1;
    }
    label
}
