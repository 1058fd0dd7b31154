//! Dense matrices over the rationals with exact row reduction.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: Vec<Vec<BigRational>>,
    ncols: usize,
}

impl RationalMatrix {
    pub fn new(rows: Vec<Vec<BigRational>>, ncols: usize) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == ncols));
        RationalMatrix { rows, ncols }
    }

    pub fn from_integers<R: AsRef<[i64]>>(rows: &[R], ncols: usize) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect())
            .collect();
        Self::new(rows, ncols)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.rows[i]
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.ncols {
            let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = BigRational::one() / &m[r][c];
            for v in m[r].iter_mut() {
                *v *= &inv;
            }
            for i in 0..m.len() {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for k in 0..self.ncols {
                        let sub = &f * &m[r][k];
                        m[i][k] -= sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.len() {
                break;
            }
        }
        (RationalMatrix::new(m, self.ncols), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }
}

/// Affine dimension of a set of 0/1 points, `-1` when empty.
pub fn affine_dimension(points: &[Vec<u8>]) -> isize {
    let Some(first) = points.first() else {
        return -1;
    };
    let n = first.len();
    let rows: Vec<Vec<i64>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(first).map(|(&a, &b)| a as i64 - b as i64).collect())
        .collect();
    RationalMatrix::from_integers(&rows, n).rank() as isize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks() {
        let m = RationalMatrix::from_integers(&[[1, 2, 3], [2, 4, 6], [0, 1, 1]], 3);
        assert_eq!(m.rank(), 2);
        let (r, piv) = m.rref();
        assert_eq!(piv, vec![0, 1]);
        assert!(r.row(2).iter().all(Zero::is_zero));
        assert_eq!(affine_dimension(&[]), -1);
        assert_eq!(affine_dimension(&[vec![1, 0], vec![0, 1]]), 1);
    }
}
