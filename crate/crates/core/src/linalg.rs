//! Gaussian elimination over a [`Scalar`] field.
//!
//! Pivots are chosen by least [`Scalar::pivot_weight`], which for local
//! fields means least valuation and keeps precision loss small.

use crate::scalar::Scalar;

/// Reduced row echelon form; returns the pivot columns.
pub fn rref<S: Scalar>(rows: &mut Vec<Vec<S>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let best = (r..rows.len())
            .filter_map(|i| rows[i][col].pivot_weight().map(|w| (w, i)))
            .min();
        let Some((_, i)) = best else { continue };
        rows.swap(r, i);
        let inv = rows[r][col].inv().expect("pivot is nonzero");
        for c in rows[r].iter_mut() {
            *c = c.mul(&inv);
        }
        let pivot_row = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (c, p) in row.iter_mut().zip(&pivot_row) {
                *c = c.sub(&f.mul(p));
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

pub fn rank<S: Scalar>(rows: &[Vec<S>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// Basis of `{x : rows * x = 0}`.
pub fn nullspace<S: Scalar>(rows: &[Vec<S>], ncols: usize, zero: &S) -> Vec<Vec<S>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let one = zero.one_like();
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![zero.clone(); ncols];
            v[free] = one.clone();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = m[r][free].neg();
            }
            v
        })
        .collect()
}

/// Solve `a * x = b` for square or overdetermined consistent systems.
pub fn solve<S: Scalar>(a: &[Vec<S>], b: &[S]) -> Option<Vec<S>> {
    let ncols = a.first()?.len();
    let mut aug: Vec<Vec<S>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, ncols + 1);
    if pivots.contains(&ncols) {
        return None;
    }
    let mut x = vec![b[0].zero_like(); ncols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[r][ncols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::FqSpec;

    #[test]
    fn nullspace_over_f5() {
        let f = FqSpec::prime(5).unwrap();
        let e = |c| f.from_u64(c);
        let rows = vec![vec![e(1), e(2), e(3)], vec![e(2), e(4), e(2)]];
        let ns = nullspace(&rows, 3, &f.zero());
        assert_eq!(ns.len(), 1);
        for row in &rows {
            let dot = row.iter().zip(&ns[0]).fold(f.zero(), |acc, (a, b)| acc.add(&a.mul(b)));
            assert!(dot.is_zero());
        }
        assert_eq!(rank(&rows, 3), 2);
    }

    #[test]
    fn solve_square() {
        let f = FqSpec::prime(7).unwrap();
        let e = |c| f.from_u64(c);
        let a = vec![vec![e(1), e(1)], vec![e(1), e(6)]];
        let x = solve(&a, &[e(3), e(1)]).unwrap();
        assert_eq!(x, vec![e(2), e(1)]);
    }
}
