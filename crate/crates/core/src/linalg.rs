//! Dense exact linear algebra over a generic field: reduced row echelon form,
//! pivot columns, and nullspace bases. Small matrices only — everything in
//! this crate that needs linear algebra is a handful of rows.

use crate::ring::Field;

/// Reduces `m` in place to reduced row echelon form and returns the pivot
/// column indices in order. Rows are `Vec<F>` of equal length.
pub fn rref<F: Field>(m: &mut [Vec<F>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][c].inv().expect("pivot entry is a unit");
        for x in m[r].iter_mut() {
            *x = x.mul(&inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in 0..cols {
                    let t = m[r][j].mul(&factor);
                    m[i][j] = m[i][j].sub(&t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of the right nullspace of the square matrix `m` (`m · v = 0`),
/// one vector per free column.
pub fn nullspace<F: Field>(ctx: &F::Ctx, m: &[Vec<F>]) -> Vec<Vec<F>> {
    if m.is_empty() {
        return vec![];
    }
    let cols = m[0].len();
    let mut work: Vec<Vec<F>> = m.to_vec();
    let pivots = rref(&mut work);
    let pivot_of_col: Vec<Option<usize>> = {
        let mut v = vec![None; cols];
        for (row, &c) in pivots.iter().enumerate() {
            v[c] = Some(row);
        }
        v
    };
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![F::zero(ctx); cols];
        v[free] = F::one(ctx);
        for c in 0..cols {
            if let Some(row) = pivot_of_col[c] {
                v[c] = work[row][free].neg();
            }
        }
        basis.push(v);
    }
    basis
}

/// Determinant of a square matrix by Gaussian elimination.
pub fn determinant<F: Field>(ctx: &F::Ctx, m: &[Vec<F>]) -> F {
    let n = m.len();
    let mut a: Vec<Vec<F>> = m.to_vec();
    let mut det = F::one(ctx);
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return F::zero(ctx);
        };
        if pr != c {
            a.swap(c, pr);
            det = det.neg();
        }
        det = det.mul(&a[c][c]);
        let inv = a[c][c].inv().expect("pivot is a unit");
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let factor = a[i][c].mul(&inv);
            for j in c..n {
                let t = a[c][j].mul(&factor);
                a[i][j] = a[i][j].sub(&t);
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FieldElement, FieldSpec};
    use std::sync::Arc;

    fn mat(f: &Arc<FieldSpec>, rows: &[&[u64]]) -> Vec<Vec<FieldElement>> {
        rows.iter()
            .map(|r| r.iter().map(|&c| f.from_prime(c)).collect())
            .collect()
    }

    #[test]
    fn rref_pivots_and_nullspace() {
        let f = FieldSpec::new(3, 1, None).unwrap();
        // Rank-2 matrix with a dependent third column (col2 = col0 + col1).
        let m = mat(&f, &[&[1, 0, 1], &[0, 1, 1], &[1, 1, 2]]);
        let mut w = m.clone();
        let p = rref(&mut w);
        assert_eq!(p, vec![0, 1]);
        let ns = nullspace::<FieldElement>(&f, &m);
        assert_eq!(ns.len(), 1);
        // Check m · v = 0.
        for row in &m {
            let mut acc = f.zero();
            for (a, b) in row.iter().zip(&ns[0]) {
                acc = acc.add(&a.mul(b));
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let f = FieldSpec::new(5, 1, None).unwrap();
        let m = mat(&f, &[&[1, 2, 3], &[0, 4, 1], &[2, 0, 1]]);
        // By hand: 1·(4·1−1·0) − 2·(0·1−1·2) + 3·(0·0−4·2) = 4 + 4 − 24 = −16 ≡ 4 mod 5.
        assert_eq!(determinant::<FieldElement>(&f, &m), f.from_prime(4));
        let singular = mat(&f, &[&[1, 2], &[2, 4]]);
        assert!(determinant::<FieldElement>(&f, &singular).is_zero());
    }
}
