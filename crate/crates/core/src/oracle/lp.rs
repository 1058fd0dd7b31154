//! Exact feasibility of `{x >= 0 : A x = b}` by phase-one simplex with
//! Bland's rule over the rationals.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn feasible(a: &[Vec<BigRational>], b: &[BigRational]) -> bool {
    let m = a.len();
    if m == 0 {
        return true;
    }
    let n = a[0].len();
    // Tableau columns: n structural, m artificial, then the right-hand side.
    let width = n + m + 1;
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m + 1);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row = vec![BigRational::zero(); width];
        for j in 0..n {
            row[j] = if flip { -a[i][j].clone() } else { a[i][j].clone() };
        }
        row[n + i] = BigRational::one();
        row[width - 1] = if flip { -b[i].clone() } else { b[i].clone() };
        t.push(row);
    }
    // Objective: minimise the sum of artificials, written as reduced costs.
    let mut obj = vec![BigRational::zero(); width];
    for row in &t {
        for j in 0..n {
            obj[j] -= &row[j];
        }
        obj[width - 1] -= &row[width - 1];
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    while let Some(enter) = (0..n + m).find(|&j| obj[j].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((pr, _)) = leave else {
            // Unbounded below is impossible for a sum of nonnegative artificials.
            unreachable!("phase-one objective is bounded");
        };
        let piv = t[pr][enter].clone();
        for v in t[pr].iter_mut() {
            *v /= &piv;
        }
        let pivot_row = t[pr].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != pr && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v -= &f * p;
                }
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for (v, p) in obj.iter_mut().zip(&pivot_row) {
                *v -= &f * p;
            }
        }
        basis[pr] = enter;
    }
    obj[width - 1].is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    #[test]
    fn small_systems() {
        // x + y = 1, x - y = 0
        assert!(feasible(&[vec![q(1), q(1)], vec![q(1), q(-1)]], &[q(1), q(0)]));
        // x + y = -1 has no nonnegative solution
        assert!(!feasible(&[vec![q(1), q(1)]], &[q(-1)]));
        // x - y = 2, x + y = 1 forces y < 0
        assert!(!feasible(&[vec![q(1), q(-1)], vec![q(1), q(1)]], &[q(2), q(1)]));
    }
}
