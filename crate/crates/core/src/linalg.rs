//! Dense exact linear algebra on small rational matrices.

use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::geometry::Rational;

pub(crate) fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Determinant by Gaussian elimination; rows are consumed in the given order.
pub(crate) fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &p;
            for c in col..n {
                let delta = &f * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    det
}

/// Reduced row echelon form in place; returns the pivot columns.
pub(crate) fn rref(m: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for k in 0..cols {
                let delta = &f * &m[r][k];
                m[i][k] -= delta;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub(crate) fn rank(vectors: &[Vec<Rational>], dim: usize) -> usize {
    let mut m: Vec<Vec<Rational>> = vectors.to_vec();
    rref(&mut m, dim).len()
}

/// Basis of the null space of `m` (rows of length `cols`).
pub(crate) fn null_space(m: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a, cols);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = alloc::vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -a[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Indices of a maximal linearly independent subfamily, chosen greedily in order.
pub(crate) fn independent_subset(vectors: &[Vec<Rational>], dim: usize) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        rows.push(v.clone());
        if rank(&rows, dim) == rows.len() {
            chosen.push(i);
        } else {
            rows.pop();
        }
        if chosen.len() == dim {
            break;
        }
    }
    chosen
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn determinant_of_small_matrices() {
        assert_eq!(determinant(vec![vec![q(1), q(2)], vec![q(3), q(4)]]), q(-2));
        assert_eq!(
            determinant(vec![
                vec![q(0), q(1), q(0)],
                vec![q(1), q(0), q(0)],
                vec![q(0), q(0), q(5)]
            ]),
            q(-5)
        );
        assert_eq!(determinant(vec![vec![q(1), q(2)], vec![q(2), q(4)]]), q(0));
        assert_eq!(determinant(Vec::new()), q(1));
    }

    #[test]
    fn null_space_is_orthogonal_to_rows() {
        let m = vec![vec![q(1), q(1), q(1)], vec![q(1), q(2), q(3)]];
        let ns = null_space(&m, 3);
        assert_eq!(ns.len(), 1);
        for row in &m {
            assert!(dot(row, &ns[0]).is_zero());
        }
        assert_eq!(null_space(&[], 2).len(), 2);
    }

    #[test]
    fn independent_subset_skips_dependent_vectors() {
        let v = vec![vec![q(1), q(0)], vec![q(2), q(0)], vec![q(0), q(3)]];
        assert_eq!(independent_subset(&v, 2), vec![0, 2]);
        assert_eq!(rank(&v, 2), 2);
    }
}
