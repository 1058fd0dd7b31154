//! Lattice points in dilations, the Ehrhart polynomial, and the composition
//! sum over `Γ(P, Q) × S_r(t)` reconciled against exact counts.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::lattice_path::Region;
use crate::matroid::{self, BasisVector};
use crate::polytope;
use crate::volume::{binomial, factorial, multichoose};
use crate::{LpmError, Result};

/// `|tP ∩ Z^{m+r}|`.
///
/// Counts prefix-sum sequences `0 = c_0, ..., c_{m+r} = t r` with steps in
/// `0..=t` and `t p_i <= c_i <= t q_i`.
pub fn count_lattice_points(region: &Region, t: usize) -> BigInt {
    let (p, q) = (region.lower_profile(), region.upper_profile());
    let top = t * region.r();
    let mut dp = vec![BigInt::zero(); top + 1];
    dp[0] = BigInt::one();
    for i in 1..=region.len() {
        // window sums of width t + 1 via running prefix sums
        let mut prefix = Vec::with_capacity(top + 2);
        prefix.push(BigInt::zero());
        for v in &dp {
            let next = prefix.last().expect("seeded") + v;
            prefix.push(next);
        }
        let (lo, hi) = (t * p[i], t * q[i]);
        dp = (0..=top)
            .map(|c| {
                if c < lo || c > hi {
                    BigInt::zero()
                } else {
                    &prefix[c + 1] - &prefix[c.saturating_sub(t)]
                }
            })
            .collect();
    }
    dp[top].clone()
}

/// `E(t) = c_0 + c_1 t + ... + c_d t^d` with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EhrhartPolynomial {
    pub coeffs: Vec<BigRational>,
}

impl EhrhartPolynomial {
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn evaluate(&self, t: usize) -> BigRational {
        let t = BigRational::from_integer(BigInt::from(t));
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &t + c)
    }

    /// `d! c_d`.
    pub fn normalized_volume(&self) -> BigInt {
        let lead = self.coeffs.last().cloned().unwrap_or_else(BigRational::one);
        (lead * BigRational::from_integer(factorial(self.degree()))).to_integer()
    }
}

/// Interpolates the lattice point counts at `t = 0..=d`, `d` the dimension,
/// then checks the result at `t = d + 1, d + 2`, `E(0) = 1` and `E(1) = #bases`.
pub fn ehrhart_polynomial(region: &Region) -> Result<EhrhartPolynomial> {
    let d = polytope::dimension(region);
    let values: Vec<BigRational> = (0..=d)
        .map(|t| BigRational::from_integer(count_lattice_points(region, t)))
        .collect();
    let poly = EhrhartPolynomial {
        coeffs: interpolate(&values),
    };
    for t in [d + 1, d + 2] {
        if poly.evaluate(t) != BigRational::from_integer(count_lattice_points(region, t)) {
            return Err(LpmError::InterpolationMismatch { t });
        }
    }
    if !poly.coeffs[0].is_one() {
        return Err(LpmError::InterpolationMismatch { t: 0 });
    }
    let bases = BigInt::from(matroid::bases(region).len());
    if poly.evaluate(1) != BigRational::from_integer(bases) {
        return Err(LpmError::InterpolationMismatch { t: 1 });
    }
    Ok(poly)
}

/// Monomial coefficients of the polynomial of degree `< values.len()` taking
/// `values[t]` at `t = 0, 1, ...`, through the Newton forward-difference form.
fn interpolate(values: &[BigRational]) -> Vec<BigRational> {
    let n = values.len();
    let mut diffs = values.to_vec();
    let mut newton = Vec::with_capacity(n);
    for k in 0..n {
        newton.push(diffs[0].clone());
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
        debug_assert_eq!(diffs.len(), n - k - 1);
    }
    // binom(t, k) = t (t - 1) ... (t - k + 1) / k!
    let mut coeffs = vec![BigRational::zero(); n];
    let mut falling = vec![BigRational::one()];
    for (k, delta) in newton.iter().enumerate() {
        let scale = delta / BigRational::from_integer(factorial(k));
        for (i, c) in falling.iter().enumerate() {
            coeffs[i] += c * &scale;
        }
        // multiply the falling factorial by (t - k)
        let mut next = vec![BigRational::zero(); falling.len() + 1];
        let k_rat = BigRational::from_integer(BigInt::from(k));
        for (i, c) in falling.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * &k_rat;
        }
        falling = next;
    }
    while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    coeffs
}

/// `a_k + 1` is the position of the `(k+1)`-th north step of the lower path,
/// `b_k + 1` that of the upper path, for `k = 1..r-1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaBounds {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

pub fn gamma_bounds(region: &Region) -> GammaBounds {
    let lower = region.lower().north_positions();
    let upper = region.upper().north_positions();
    let r = region.r();
    GammaBounds {
        a: (1..r).map(|k| lower[k] - 1).collect(),
        b: (1..r).map(|k| upper[k] - 1).collect(),
    }
}

/// Compositions of `m + r` into `r` positive parts whose partial sums obey
/// `b_i <= α_1 + ... + α_i <= a_i` for `i < r`.
pub fn gamma_set(region: &Region) -> Vec<Vec<usize>> {
    let g = gamma_bounds(region);
    compositions_within(region.len(), region.r(), &g.b, &g.a)
}

/// The same set with the bounds the other way round, `a_i <= Σ <= b_i`.
pub fn gamma_set_reversed(region: &Region) -> Vec<Vec<usize>> {
    let g = gamma_bounds(region);
    compositions_within(region.len(), region.r(), &g.a, &g.b)
}

fn compositions_within(n: usize, parts: usize, lo: &[usize], hi: &[usize]) -> Vec<Vec<usize>> {
    fn go(
        n: usize,
        parts: usize,
        lo: &[usize],
        hi: &[usize],
        cur: &mut Vec<usize>,
        sum: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        let i = cur.len();
        if i + 1 == parts {
            if n > sum {
                cur.push(n - sum);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        let remaining = parts - i - 1;
        for part in 1..=n.saturating_sub(sum + remaining) {
            let s = sum + part;
            if s < lo[i] || s > hi[i] {
                continue;
            }
            cur.push(part);
            go(n, parts, lo, hi, cur, s, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        return out;
    }
    go(n, parts, lo, hi, &mut Vec::new(), 0, &mut out);
    out
}

/// `α_1 = #{j : c_j <= 1}` and `α_i = #{j : c_j = i}` for `i >= 2`, where
/// `c_j` are the prefix sums of the basis vector.
pub fn block_vector(basis: &BasisVector, r: usize) -> Vec<usize> {
    let mut alpha = vec![0; r];
    let mut c = 0;
    for &x in basis.coords() {
        c += x as usize;
        alpha[c.max(1) - 1] += 1;
    }
    alpha
}

/// Nonnegative arrays `(s_1, ..., s_{2r-2})` with `s_1 <= t`, `s_{2r-2} <= t`
/// and `s_i + s_{i+1} <= t`.
pub fn s_set(r: usize, t: usize) -> Vec<Vec<usize>> {
    fn go(len: usize, t: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let cap = t - cur.last().copied().unwrap_or(0);
        for s in 0..=cap {
            cur.push(s);
            go(len, t, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(2 * r.saturating_sub(1), t, &mut Vec::new(), &mut out);
    out
}

/// `Σ_{α ∈ Γ} Σ_{s ∈ S_r(t)} ((t+1-s_1, α_1)) ((t-s_2-s_3, α_2)) ... ((t-s_{2r-2}, α_r))`,
/// reading `((n, k))` as a multiset coefficient. For `r = 1` the single factor
/// is `((t+1, α_1))`.
pub fn formula_value(region: &Region, t: usize) -> BigInt {
    let r = region.r();
    let gamma = gamma_set(region);
    if r == 0 {
        return BigInt::from(gamma.len());
    }
    let t_i = t as i64;
    if r == 1 {
        return gamma.iter().map(|a| multichoose(t_i + 1, a[0])).sum();
    }
    let svals = s_set(r, t);
    let mut total = BigInt::zero();
    for alpha in &gamma {
        for s in &svals {
            let s = |i: usize| s[i - 1] as i64;
            let mut term = multichoose(t_i + 1 - s(1), alpha[0]);
            for i in 2..r {
                term *= multichoose(t_i - s(2 * i - 2) - s(2 * i - 1), alpha[i - 1]);
            }
            term *= multichoose(t_i - s(2 * r - 2), alpha[r - 1]);
            total += term;
        }
    }
    total
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconcileRow {
    pub t: usize,
    pub formula_value: BigInt,
    pub true_value: BigInt,
    pub matches: bool,
}

/// Formula value against the exact count for `t = 0..=t_max`.
pub fn reconcile_ehrhart_formula(region: &Region, t_max: usize) -> Vec<ReconcileRow> {
    (0..=t_max)
        .map(|t| {
            let formula_value = formula_value(region, t);
            let true_value = count_lattice_points(region, t);
            ReconcileRow {
                t,
                matches: formula_value == true_value,
                formula_value,
                true_value,
            }
        })
        .collect()
}

/// Whether the number of lattice points of `P` equals `|Γ(P, Q)|`.
pub fn gamma_count_matches(region: &Region) -> bool {
    BigInt::from(gamma_set(region).len()) == count_lattice_points(region, 1)
}

/// `binom(t + d, d)`, the Ehrhart polynomial of a unimodular `d`-simplex.
pub fn unimodular_simplex_count(d: usize, t: usize) -> BigInt {
    binomial(t + d, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn region(p: &str, q: &str) -> Region {
        Region::parse(p, q).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn lattice_point_counts() {
        let seg = region("EN", "NE");
        assert_eq!(count_lattice_points(&seg, 0), 1.into());
        assert_eq!(count_lattice_points(&seg, 3), 4.into());
        assert_eq!(count_lattice_points(&region("EENN", "NNEE"), 1), 6.into());
        assert_eq!(count_lattice_points(&region("EENN", "NENE"), 1), 5.into());
        assert_eq!(count_lattice_points(&region("EN", "EN"), 5), 1.into());
    }

    #[test]
    fn polynomials() {
        let seg = ehrhart_polynomial(&region("EN", "NE")).unwrap();
        assert_eq!(seg.coeffs, vec![q(1, 1), q(1, 1)]);
        let oct = ehrhart_polynomial(&region("EENN", "NNEE")).unwrap();
        assert_eq!(oct.degree(), 3);
        assert_eq!(oct.normalized_volume(), 4.into());
        assert_eq!(oct.evaluate(1), q(6, 1));
        let l = ehrhart_polynomial(&region("EENN", "NENE")).unwrap();
        assert_eq!(l.normalized_volume(), 2.into());
        assert_eq!(l.evaluate(1), q(5, 1));
        let point = ehrhart_polynomial(&region("EN", "EN")).unwrap();
        assert_eq!(point.coeffs, vec![q(1, 1)]);
    }

    #[test]
    fn triangle_polynomial() {
        // Δ_{1,3} is a unimodular triangle.
        let tri = ehrhart_polynomial(&region("EEN", "NEE")).unwrap();
        for t in 0..6 {
            assert_eq!(tri.evaluate(t), BigRational::from_integer(unimodular_simplex_count(2, t)));
        }
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma_set(&region("EN", "NE")), vec![vec![2]]);
        let sq = region("EENN", "NNEE");
        assert_eq!(gamma_bounds(&sq), GammaBounds { a: vec![3], b: vec![1] });
        assert_eq!(gamma_set(&sq), vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
        assert!(gamma_set_reversed(&sq).is_empty());
        let l = region("EENN", "NENE");
        let gamma = gamma_set(&l);
        for b in matroid::bases(&l) {
            assert!(gamma.contains(&block_vector(&b, 2)), "{b}");
        }
        assert!(!gamma_count_matches(&region("EN", "NE")));
    }

    #[test]
    fn s_arrays() {
        assert_eq!(s_set(1, 4), vec![Vec::<usize>::new()]);
        assert_eq!(s_set(2, 1), vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
        assert_eq!(s_set(2, 2).len(), 6);
    }

    #[test]
    fn reconcile_rows() {
        let rows = reconcile_ehrhart_formula(&region("EENN", "NNEE"), 3);
        assert_eq!(rows.len(), 4);
        assert_eq!(rows[0].true_value, 1.into());
        assert_eq!(rows[1].true_value, 6.into());
    }
}
