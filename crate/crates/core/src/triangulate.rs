//! The piecewise-linear map `ψ` sending a point of the cube to the fractional
//! parts of its prefix sums, and the unimodular triangulations of
//! hypersimplices and strip polytopes pulled back from the order simplices.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::decompose::BorderStrip;
use crate::{LpmError, Result};

pub type PlPoint = Vec<BigRational>;

/// `y_i = (x_1 + ... + x_i) - floor(x_1 + ... + x_i)`.
pub fn psi(x: &[BigRational]) -> PlPoint {
    let mut acc = BigRational::zero();
    x.iter()
        .map(|xi| {
            acc += xi;
            acc.fract()
        })
        .collect()
}

/// Inverse of a permutation in one-line notation on `1..=n`.
pub fn inverse(w: &[usize]) -> Result<Vec<usize>> {
    let n = w.len();
    let mut inv = vec![0; n];
    for (i, &v) in w.iter().enumerate() {
        if v == 0 || v > n || inv[v - 1] != 0 {
            return Err(LpmError::NotAPermutation(n));
        }
        inv[v - 1] = i + 1;
    }
    Ok(inv)
}

/// Positions `i` with `w(i) > w(i + 1)`.
pub fn descent_set(w: &[usize]) -> BTreeSet<usize> {
    w.windows(2)
        .enumerate()
        .filter(|(_, p)| p[0] > p[1])
        .map(|(i, _)| i + 1)
        .collect()
}

/// Whether `y_{w(1)} <= y_{w(2)} <= ... <= y_{w(n)}`.
pub fn in_chamber(w: &[usize], y: &[BigRational]) -> bool {
    w.windows(2).all(|p| y[p[0] - 1] <= y[p[1] - 1])
}

/// The permutation sorting `y` increasingly, or `None` if two coordinates tie.
pub fn chamber_of(y: &[BigRational]) -> Option<Vec<usize>> {
    let w: Vec<usize> = (1..=y.len()).sorted_by(|&a, &b| y[a - 1].cmp(&y[b - 1])).collect();
    w.windows(2)
        .all(|p| y[p[0] - 1] != y[p[1] - 1])
        .then_some(w)
}

/// `ψ` restricted to the closed chamber of `w`, inverted:
/// `x_1 = y_1`, `x_{i+1} = y_{i+1} - y_i + [w^{-1}(i+1) < w^{-1}(i)]`.
pub fn psi_inverse_on(w: &[usize], y: &[BigRational]) -> Result<PlPoint> {
    if w.len() != y.len() {
        return Err(LpmError::NotAPermutation(y.len()));
    }
    let inv = inverse(w)?;
    if !in_chamber(w, y) {
        return Err(LpmError::WrongChamber);
    }
    Ok(psi_inverse_unchecked(&inv, y))
}

fn psi_inverse_unchecked(inv: &[usize], y: &[BigRational]) -> PlPoint {
    (0..y.len())
        .map(|i| {
            if i == 0 {
                y[0].clone()
            } else {
                let wrap = if inv[i] < inv[i - 1] { BigRational::one() } else { BigRational::zero() };
                &y[i] - &y[i - 1] + wrap
            }
        })
        .collect()
}

/// A simplex of the triangulation, labelled by the permutation whose order
/// simplex it is the image of.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplexCell {
    pub label: Vec<usize>,
    /// `label.len() + 1` vertices in `R^{label.len()}`.
    pub vertices: Vec<PlPoint>,
}

impl SimplexCell {
    /// The cell of `w`: images of the closure vertices
    /// `v_j = e_{w(n-j+1)} + ... + e_{w(n)}` of its order simplex.
    pub fn of_permutation(w: &[usize]) -> Result<Self> {
        let n = w.len();
        let inv = inverse(w)?;
        let vertices = (0..=n)
            .map(|j| {
                let mut y = vec![BigRational::zero(); n];
                for &coord in &w[n - j..] {
                    y[coord - 1] = BigRational::one();
                }
                psi_inverse_unchecked(&inv, &y)
            })
            .collect();
        Ok(SimplexCell {
            label: w.to_vec(),
            vertices,
        })
    }

    /// Vertices with one more coordinate making every coordinate sum `total`.
    pub fn lifted(&self, total: usize) -> Vec<PlPoint> {
        let total = BigRational::from_integer(BigInt::from(total));
        self.vertices
            .iter()
            .map(|v| {
                let sum: BigRational = v.iter().sum();
                let mut out = v.clone();
                out.push(&total - sum);
                out
            })
            .collect()
    }

    /// Determinant of the edge vectors `v_i - v_0`.
    pub fn det(&self) -> BigRational {
        let base = &self.vertices[0];
        let rows: Vec<Vec<BigRational>> = self.vertices[1..]
            .iter()
            .map(|v| v.iter().zip(base).map(|(a, b)| a - b).collect())
            .collect();
        determinant(rows)
    }

    /// Whether `x` lies in the closed cell.
    pub fn contains(&self, x: &[BigRational]) -> bool {
        let n = self.label.len();
        if x.len() != n {
            return false;
        }
        let inv = inverse(&self.label).expect("label is a permutation");
        // Prefix sums minus the wrap count must form a point of the closed
        // order simplex, with the cell's wrap pattern.
        let mut wraps = 0i64;
        let mut acc = BigRational::zero();
        let mut y = Vec::with_capacity(n);
        for i in 0..n {
            if i > 0 && inv[i] < inv[i - 1] {
                wraps += 1;
            }
            acc += &x[i];
            y.push(&acc - BigRational::from_integer(BigInt::from(wraps)));
        }
        let zero = BigRational::zero();
        let one = BigRational::one();
        in_chamber(&self.label, &y) && y.iter().all(|v| *v >= zero && *v <= one)
    }
}

fn determinant(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            let f = &m[r][col] / &pivot;
            if f.is_zero() {
                continue;
            }
            for c in col..n {
                let sub = &f * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    det
}

fn permutations(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (1..=n).permutations(n)
}

/// One cell per `w ∈ S_{n-1}` with `des(w^{-1}) = k - 1`, in the coordinates
/// `x_1..x_{n-1}` of the projected hypersimplex.
pub fn hypersimplex_triangulation(k: usize, n: usize) -> Result<Vec<SimplexCell>> {
    if k < 1 || k + 1 > n {
        return Err(LpmError::BadK { k, n });
    }
    permutations(n - 1)
        .filter(|w| descent_set(&inverse(w).expect("permutation")).len() == k - 1)
        .map(|w| SimplexCell::of_permutation(&w))
        .collect()
}

/// One cell per `w ∈ S_ℓ` whose inverse has descent set equal to the
/// strip's, in the coordinates `x_1..x_ℓ`; the last coordinate of the strip
/// polytope is `r - (x_1 + ... + x_ℓ)`.
pub fn strip_triangulation(strip: &BorderStrip) -> Vec<SimplexCell> {
    let target = strip.descents();
    permutations(strip.len())
        .filter(|w| descent_set(&inverse(w).expect("permutation")) == target)
        .map(|w| SimplexCell::of_permutation(&w).expect("permutation"))
        .collect()
}

/// Checks every cell is unimodular and returns the number of cells.
pub fn triangulation_volume_check(cells: &[SimplexCell]) -> Result<usize> {
    for cell in cells {
        let det = cell.det();
        if !det.abs().is_one() {
            let det = det.to_integer().to_i128().unwrap_or(i128::MAX);
            return Err(LpmError::NonUnimodularCell {
                label: cell.label.clone(),
                det,
            });
        }
    }
    Ok(cells.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&[q(1, 2), q(1, 4)]), vec![q(1, 2), q(3, 4)]);
        assert_eq!(psi(&[q(3, 4), q(1, 2)]), vec![q(3, 4), q(1, 4)]);
        assert_eq!(psi(&[q(0, 1), q(0, 1), q(0, 1)]), vec![q(0, 1); 3]);
    }

    #[test]
    fn psi_inverse_examples() {
        assert_eq!(psi_inverse_on(&[1, 2], &[q(1, 4), q(1, 2)]).unwrap(), vec![q(1, 4), q(1, 4)]);
        let x = psi_inverse_on(&[2, 1], &[q(3, 4), q(1, 4)]).unwrap();
        assert_eq!(x, vec![q(3, 4), q(1, 2)]);
        assert_eq!(psi(&x), vec![q(3, 4), q(1, 4)]);
        let zero = vec![q(0, 1); 3];
        assert_eq!(psi_inverse_on(&[1, 2, 3], &zero).unwrap(), zero);
        // The origin lies on every chamber's boundary; off the identity chamber
        // its preimage is the wrapped vertex, which still maps back to 0.
        let wrapped = psi_inverse_on(&[2, 1, 3], &zero).unwrap();
        assert_eq!(wrapped, vec![q(0, 1), q(1, 1), q(0, 1)]);
        assert_eq!(psi(&wrapped), zero);
        assert_eq!(psi_inverse_on(&[1, 2], &[q(3, 4), q(1, 4)]), Err(LpmError::WrongChamber));
        assert_eq!(psi_inverse_on(&[1, 1], &[q(0, 1), q(0, 1)]), Err(LpmError::NotAPermutation(2)));
    }

    #[test]
    fn hypersimplex_cells() {
        assert_eq!(hypersimplex_triangulation(1, 3).unwrap().len(), 1);
        let oct = hypersimplex_triangulation(2, 4).unwrap();
        assert_eq!(oct.len(), 4);
        assert_eq!(triangulation_volume_check(&oct).unwrap(), 4);
        assert_eq!(hypersimplex_triangulation(2, 5).unwrap().len(), 11);
        assert_eq!(hypersimplex_triangulation(0, 3), Err(LpmError::BadK { k: 0, n: 3 }));
        assert_eq!(hypersimplex_triangulation(3, 3), Err(LpmError::BadK { k: 3, n: 3 }));
        for cell in &oct {
            for v in cell.lifted(2) {
                assert!(v.iter().all(|c| c.is_zero() || c.is_one()));
                assert_eq!(v.iter().sum::<BigRational>(), q(2, 1));
            }
        }
    }

    #[test]
    fn strip_cells() {
        let single = BorderStrip::from_moves("").unwrap();
        assert_eq!(strip_triangulation(&single).len(), 1);
        let l = BorderStrip::from_moves("RU").unwrap();
        let cells = strip_triangulation(&l);
        assert_eq!(triangulation_volume_check(&cells).unwrap(), 2);
        let straight = BorderStrip::from_moves("RR").unwrap();
        assert_eq!(strip_triangulation(&straight).len(), 1);
        assert_eq!(triangulation_volume_check(&[]).unwrap(), 0);
    }

    #[test]
    fn chamber_lookup() {
        assert_eq!(chamber_of(&[q(3, 4), q(1, 4)]), Some(vec![2, 1]));
        assert_eq!(chamber_of(&[q(1, 4), q(1, 4)]), None);
        let cell = SimplexCell::of_permutation(&[2, 1]).unwrap();
        assert!(cell.contains(&[q(3, 4), q(1, 2)]));
        assert!(!cell.contains(&[q(1, 4), q(1, 4)]));
    }
}
