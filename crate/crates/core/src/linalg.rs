//! Exact Gaussian elimination over the coefficient field.

use crate::numberfield::{FieldContext, FieldElem};
use std::sync::Arc;

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(rows: &mut [Vec<FieldElem>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inverse().expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            for j in 0..rows[i].len() {
                let t = &rows[r][j] * &f;
                rows[i][j] = &rows[i][j] - &t;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of a list of vectors of equal length.
pub fn rank(vectors: &[Vec<FieldElem>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let ncols = vectors[0].len();
    let mut rows = vectors.to_vec();
    rref(&mut rows, ncols).len()
}

/// Coefficients `c` with `target = sum c_i basis_i`, provided the basis vectors
/// are linearly independent and the target lies in their span.
pub fn solve_combination(
    ctx: &Arc<FieldContext>,
    basis: &[&[FieldElem]],
    target: &[FieldElem],
) -> Option<Vec<FieldElem>> {
    let k = basis.len();
    let n = target.len();
    // rows are coordinates, columns are basis vectors plus the target
    let mut rows: Vec<Vec<FieldElem>> = (0..n)
        .map(|i| {
            let mut row: Vec<FieldElem> = basis.iter().map(|b| b[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let pivots = rref(&mut rows, k + 1);
    if pivots.len() != k || pivots.iter().any(|&p| p >= k) {
        return None;
    }
    let mut out = vec![ctx.zero(); k];
    for (r, &p) in pivots.iter().enumerate() {
        out[p] = rows[r][k].clone();
    }
    Some(out)
}
