//! Dense Gaussian elimination over exact rationals.

use num_traits::{One, Zero};

use crate::Rational;

/// Reduced row echelon form in place; returns the pivot columns.
pub(crate) fn rref(m: &mut [Vec<Rational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in &mut m[row] {
            *x *= &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let (src, dst) = if r < row {
                    let (a, b) = m.split_at_mut(row);
                    (&b[0], &mut a[r])
                } else {
                    let (a, b) = m.split_at_mut(r);
                    (&a[row], &mut b[0])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    *d -= &f * s;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Solves `m x = rhs` for square nonsingular `m`.
pub(crate) fn solve_square(m: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let n = m.len();
    let mut aug: Vec<Vec<Rational>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, n);
    if pivots.len() < n {
        return None;
    }
    Some(
        aug.into_iter()
            .map(|mut r| r.pop().expect("augmented"))
            .collect(),
    )
}

/// Indices of a maximal linearly independent subset of rows, chosen greedily
/// in order.
pub(crate) fn independent_rows(m: &[Vec<Rational>], ncols: usize) -> Vec<usize> {
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    let mut chosen = Vec::new();
    for (i, row) in m.iter().enumerate() {
        let mut trial = basis.clone();
        trial.push(row.clone());
        if rref(&mut trial, ncols).len() > basis.len() {
            basis.push(row.clone());
            chosen.push(i);
        }
    }
    chosen
}

/// Inverse of a square nonsingular matrix.
pub(crate) fn inverse(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            r
        })
        .collect();
    if rref(&mut aug, n).len() < n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{frac, rvec};

    #[test]
    fn solves_small_system() {
        let m = vec![rvec(&[2, 1]), rvec(&[1, 3])];
        let x = solve_square(&m, &rvec(&[3, 5])).unwrap();
        assert_eq!(x, vec![frac(4, 5), frac(7, 5)]);
        assert!(solve_square(&[rvec(&[1, 2]), rvec(&[2, 4])], &rvec(&[1, 2])).is_none());
    }

    #[test]
    fn independent_rows_skips_dependent() {
        let m = vec![rvec(&[1, 1, 0]), rvec(&[2, 2, 0]), rvec(&[0, 1, 1])];
        assert_eq!(independent_rows(&m, 3), vec![0, 2]);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = vec![rvec(&[1, 2]), rvec(&[3, 4])];
        let inv = inverse(&m).unwrap();
        assert_eq!(
            inv,
            vec![vec![frac(-2, 1), frac(1, 1)], vec![frac(3, 2), frac(-1, 2)]]
        );
    }
}
