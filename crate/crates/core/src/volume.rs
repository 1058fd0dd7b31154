//! Normalized volumes through descent classes of permutations, Eulerian
//! numbers, and the Catalan area sequences.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::decompose::{self, BorderStrip};
use crate::lattice_path::Region;
use crate::{LpmError, Result};

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `((n, k)) = binom(n + k - 1, k)`, the number of size-`k` multisets from `n` kinds.
pub fn multichoose(n: i64, k: usize) -> BigInt {
    if k == 0 {
        return BigInt::one();
    }
    if n <= 0 {
        return BigInt::zero();
    }
    binomial(n as usize + k - 1, k)
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn catalan_number(n: usize) -> BigInt {
    binomial(2 * n, n) / (n + 1)
}

/// Number of permutations of `[n]` whose descent set is exactly `d`.
///
/// Inclusion-exclusion over `S ⊆ d`: the permutations with descent set
/// contained in `S` number `n! / (s_1! (s_2 - s_1)! ... (n - s_k)!)`.
pub fn exact_descent_count(n: usize, d: &BTreeSet<usize>) -> Result<BigInt> {
    if let Some(&bad) = d.iter().find(|&&i| i == 0 || i >= n) {
        return Err(LpmError::InvalidArgument(format!(
            "descent position {bad} outside 1..{n}"
        )));
    }
    let positions: Vec<usize> = d.iter().copied().collect();
    let total = factorial(n);
    let mut sum = BigInt::zero();
    for mask in 0u64..1 << positions.len() {
        let mut denom = BigInt::one();
        let mut prev = 0;
        for (i, &p) in positions.iter().enumerate() {
            if mask >> i & 1 == 1 {
                denom *= factorial(p - prev);
                prev = p;
            }
        }
        denom *= factorial(n - prev);
        let term = &total / denom;
        if (positions.len() - mask.count_ones() as usize).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(sum)
}

/// Normalized volume of a strip polytope, the descent-class size of the strip.
pub fn strip_volume(strip: &BorderStrip) -> BigInt {
    exact_descent_count(strip.len(), &strip.descents()).expect("strip descents lie in 1..len")
}

/// Normalized volume of a connected region: the sum of its strip volumes.
/// A one-element region is a single point, of volume 1.
pub fn volume(region: &Region) -> Result<BigInt> {
    if region.len() == 1 {
        return Ok(BigInt::one());
    }
    Ok(decompose::border_strips(region)?.iter().map(strip_volume).sum())
}

/// `A_{k,n}`: permutations of `[n]` with exactly `k - 1` descents.
pub fn eulerian(k: usize, n: usize) -> BigInt {
    // A(m, j) = j A(m-1, j) + (m - j + 1) A(m-1, j-1), seeded with A(0, 0) = 1.
    let mut row = vec![BigInt::zero(); n + 2];
    row[0] = BigInt::one();
    for m in 1..=n {
        for j in (1..=m).rev() {
            row[j] = &row[j] * j + &row[j - 1] * (m - j + 1);
        }
        row[0] = BigInt::zero();
    }
    row.get(k).cloned().unwrap_or_default()
}

/// `A_n = 4^n / 2 - binom(2n + 2, n + 1) / 4`.
pub fn catalan_area_closed_form(n: usize) -> BigRational {
    let four = BigRational::new(BigInt::from(4u8).pow(n as u32), BigInt::from(2));
    four - BigRational::new(binomial(2 * n + 2, n + 1), BigInt::from(4))
}

/// `A_0..=A_{n_max}` from
/// `A_{n+1} = 2 sum A_k C_{n-k} + (1/2) sum C_k C_{n-k} + sum k C_k C_{n-k}`.
pub fn catalan_area_recurrence(n_max: usize) -> Vec<BigRational> {
    area_recurrence(n_max, |n, a, c| {
        let two = BigInt::from(2);
        let mut acc = BigRational::zero();
        for k in 0..=n {
            let cc = BigRational::from_integer(&c[k] * &c[n - k]);
            acc += &a[k] * BigRational::from_integer(&two * &c[n - k]);
            acc += &cc / BigRational::from_integer(two.clone());
            acc += cc * BigRational::from_integer(BigInt::from(k));
        }
        acc
    })
}

/// The recurrence in the form
/// `A_{n+1} = 2 sum (k + 1/2) C_k C_{n-k} + sum A_k C_{n-k} + sum A_{n-k} C_k`,
/// which is not consistent with the closed form (it gives `A_1 = 1`).
pub fn catalan_area_recurrence_printed(n_max: usize) -> Vec<BigRational> {
    area_recurrence(n_max, |n, a, c| {
        let mut acc = BigRational::zero();
        for k in 0..=n {
            let cc = BigRational::from_integer(&c[k] * &c[n - k]);
            acc += cc * BigRational::new(BigInt::from(2 * k + 1), BigInt::one());
            acc += &a[k] * BigRational::from_integer(c[n - k].clone());
            acc += &a[n - k] * BigRational::from_integer(c[k].clone());
        }
        acc
    })
}

fn area_recurrence(
    n_max: usize,
    step: impl Fn(usize, &[BigRational], &[BigInt]) -> BigRational,
) -> Vec<BigRational> {
    let c: Vec<BigInt> = (0..=n_max).map(catalan_number).collect();
    let mut a = vec![BigRational::zero()];
    for n in 0..n_max {
        let next = step(n, &a, &c);
        a.push(next);
    }
    a
}

/// Total area `A_n` between the Dyck paths of size `n` and the diagonal.
pub fn catalan_area(n: usize) -> BigRational {
    catalan_area_closed_form(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn descent_counts() {
        assert_eq!(exact_descent_count(3, &set(&[])).unwrap(), 1.into());
        assert_eq!(exact_descent_count(3, &set(&[1])).unwrap(), 2.into());
        assert_eq!(exact_descent_count(3, &set(&[1, 2])).unwrap(), 1.into());
        assert_eq!(exact_descent_count(1, &set(&[])).unwrap(), 1.into());
        assert!(exact_descent_count(3, &set(&[3])).is_err());
    }

    #[test]
    fn eulerian_values() {
        assert_eq!(eulerian(1, 3), 1.into());
        assert_eq!(eulerian(2, 3), 4.into());
        assert_eq!(eulerian(3, 3), 1.into());
        assert_eq!(eulerian(2, 4), 11.into());
        assert_eq!(eulerian(1, 1), 1.into());
        assert_eq!(eulerian(0, 3), 0.into());
        assert_eq!(eulerian(4, 3), 0.into());
        for n in 1..=8 {
            let total: BigInt = (1..=n).map(|k| eulerian(k, n)).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn volumes() {
        let r = |p: &str, q: &str| Region::parse(p, q).unwrap();
        assert_eq!(volume(&r("EENN", "NENE")).unwrap(), 2.into());
        assert_eq!(volume(&r("EENN", "NNEE")).unwrap(), 4.into());
        assert_eq!(volume(&r("EN", "NE")).unwrap(), 1.into());
        assert!(volume(&r("EN", "EN")).is_err());
    }

    #[test]
    fn strip_volumes() {
        assert_eq!(strip_volume(&BorderStrip::from_moves("").unwrap()), 1.into());
        assert_eq!(strip_volume(&BorderStrip::from_moves("RU").unwrap()), 2.into());
        assert_eq!(strip_volume(&BorderStrip::from_moves("RR").unwrap()), 1.into());
    }

    #[test]
    fn catalan_areas() {
        assert_eq!(catalan_area(1), q(1, 2));
        assert_eq!(catalan_area(2), q(3, 1));
        assert_eq!(catalan_area(3), q(29, 2));
        let rec = catalan_area_recurrence(12);
        for (n, a) in rec.iter().enumerate() {
            assert_eq!(*a, catalan_area_closed_form(n), "n = {n}");
        }
        assert_eq!(catalan_area_recurrence_printed(1)[1], q(1, 1));
    }

    #[test]
    fn small_numbers() {
        assert_eq!(binomial(6, 3), 20.into());
        assert_eq!(binomial(3, 4), 0.into());
        assert_eq!(multichoose(3, 2), 6.into());
        assert_eq!(multichoose(0, 0), 1.into());
        assert_eq!(multichoose(0, 2), 0.into());
        assert_eq!(catalan_number(4), 14.into());
    }
}
