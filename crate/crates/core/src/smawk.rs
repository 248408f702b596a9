//! Row maxima of totally monotone matrices.
//!
//! Total monotonicity for maxima: for `i < i'` and `j < j'`,
//! `A[i][j] < A[i][j']` implies `A[i'][j] < A[i'][j']`, and
//! `A[i][j] <= A[i][j']` implies `A[i'][j] <= A[i'][j']`. Under it the
//! leftmost row maxima move right (weakly) from row to row. Minima follow
//! by negating the entries.

use std::cell::Cell;

/// A matrix given by an entry function.
pub struct ImplicitMatrix<F> {
    pub rows: usize,
    pub cols: usize,
    pub eval: F,
}

impl<F: Fn(usize, usize) -> f64> ImplicitMatrix<F> {
    pub fn new(rows: usize, cols: usize, eval: F) -> Self {
        ImplicitMatrix { rows, cols, eval }
    }
}

/// Leftmost maximum of every row, as `(column, value)`, plus the number of
/// entries evaluated.
pub fn row_maxima_counted<F: Fn(usize, usize) -> f64>(a: &ImplicitMatrix<F>) -> (Vec<(usize, f64)>, usize) {
    if a.rows == 0 {
        return (Vec::new(), 0);
    }
    assert!(a.cols > 0, "a matrix with rows needs at least one column");
    let count = Cell::new(0usize);
    let at = |i: usize, j: usize| {
        count.set(count.get() + 1);
        (a.eval)(i, j)
    };
    let rows: Vec<usize> = (0..a.rows).collect();
    let cols: Vec<usize> = (0..a.cols).collect();
    let mut out = vec![(0, 0.0); a.rows];
    solve(&rows, &cols, &at, &mut out);
    (out, count.get())
}

pub fn row_maxima<F: Fn(usize, usize) -> f64>(a: &ImplicitMatrix<F>) -> Vec<(usize, f64)> {
    row_maxima_counted(a).0
}

fn solve(rows: &[usize], cols: &[usize], at: &impl Fn(usize, usize) -> f64, out: &mut [(usize, f64)]) {
    if rows.is_empty() {
        return;
    }
    let cols = reduce(rows, cols, at);
    let odd: Vec<usize> = rows.iter().copied().skip(1).step_by(2).collect();
    solve(&odd, &cols, at, out);

    // even rows: scan between the maxima of the neighbouring odd rows
    let mut start = 0;
    for (r, &i) in rows.iter().enumerate().step_by(2) {
        let stop = if r + 1 < rows.len() {
            let j = out[rows[r + 1]].0;
            start + cols[start..].iter().position(|&c| c == j).unwrap()
        } else {
            cols.len() - 1
        };
        let mut best = (cols[start], at(i, cols[start]));
        for &c in &cols[start + 1..=stop] {
            let v = at(i, c);
            if v > best.1 {
                best = (c, v);
            }
        }
        out[i] = best;
        start = stop;
    }
}

/// Drops columns that hold no leftmost row maximum, leaving at most
/// `rows.len()` of them.
fn reduce(rows: &[usize], cols: &[usize], at: &impl Fn(usize, usize) -> f64) -> Vec<usize> {
    let mut stack: Vec<usize> = Vec::with_capacity(rows.len());
    for &c in cols {
        while let Some(&top) = stack.last() {
            let r = rows[stack.len() - 1];
            if at(r, top) < at(r, c) {
                stack.pop();
            } else {
                break;
            }
        }
        if stack.len() < rows.len() {
            stack.push(c);
        }
    }
    stack
}

/// Per-row scan; the reference for tests.
pub fn naive_row_maxima<F: Fn(usize, usize) -> f64>(a: &ImplicitMatrix<F>) -> Vec<(usize, f64)> {
    (0..a.rows)
        .map(|i| {
            let mut best = (0, (a.eval)(i, 0));
            for j in 1..a.cols {
                let v = (a.eval)(i, j);
                if v > best.1 {
                    best = (j, v);
                }
            }
            best
        })
        .collect()
}
