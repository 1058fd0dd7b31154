//! Brute-force ground truth.
//!
//! Everything here works from the raw path profiles and exhaustive
//! enumeration; nothing calls into the structural algorithms of the other
//! modules.

mod lp;
mod rational;

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::decompose::BorderStrip;
use crate::lattice_path::{all_paths, Region};
use crate::{LpmError, Result};

pub use lp::feasible;
pub use rational::{affine_dimension, RationalMatrix};

fn cap(size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(LpmError::TooLarge { size, cap })
    } else {
        Ok(())
    }
}

/// Every region `(P, Q)` with `P <= Q` and `m + r = n`, for all `r`.
pub fn regions_of_size(n: usize) -> Vec<Region> {
    let mut out = Vec::new();
    for r in 0..=n {
        let paths = all_paths(n - r, r);
        for lower in &paths {
            for upper in &paths {
                if let Ok(reg) = Region::new(lower.clone(), upper.clone()) {
                    out.push(reg);
                }
            }
        }
    }
    out
}

/// Every region with `1 <= m + r <= max_n`.
pub fn sweep(max_n: usize) -> Vec<Region> {
    (1..=max_n).flat_map(regions_of_size).collect()
}

/// 0/1 vectors of the `r`-subsets whose lattice path stays in the region,
/// sorted lexicographically.
pub fn brute_bases(region: &Region) -> Result<Vec<Vec<u8>>> {
    let n = region.len();
    cap(n, 12)?;
    let (p, q) = (region.lower_profile(), region.upper_profile());
    let mut out: Vec<Vec<u8>> = (1..=n)
        .combinations(region.r())
        .filter_map(|subset| {
            let mut v = vec![0u8; n];
            for e in subset {
                v[e - 1] = 1;
            }
            let mut h = 0;
            for i in 1..=n {
                h += v[i - 1] as usize;
                if h < p[i] || h > q[i] {
                    return None;
                }
            }
            Some(v)
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Affine dimension of the basis polytope from its vertex set.
pub fn brute_dimension(region: &Region) -> Result<isize> {
    Ok(affine_dimension(&brute_bases(region)?))
}

/// Whether `vertices[i]` and `vertices[j]` span an edge of their convex hull.
///
/// They do unless the midpoint `c` has a convex representation giving
/// positive weight to some other vertex, i.e. unless
/// `μ >= 0, Σ μ_w (w - c) = 0, Σ_{w ≠ u, v} μ_w = 1` is feasible.
pub fn brute_adjacent(vertices: &[Vec<u8>], i: usize, j: usize) -> Result<bool> {
    cap(vertices.len(), 40)?;
    if i == j || i >= vertices.len() || j >= vertices.len() {
        return Ok(false);
    }
    let dim = vertices[0].len();
    let two = BigRational::from_integer(BigInt::from(2));
    let mid: Vec<BigRational> = (0..dim)
        .map(|k| BigRational::from_integer(BigInt::from(vertices[i][k] + vertices[j][k])) / &two)
        .collect();
    let mut a: Vec<Vec<BigRational>> = (0..dim)
        .map(|k| {
            vertices
                .iter()
                .map(|w| BigRational::from_integer(BigInt::from(w[k])) - &mid[k])
                .collect()
        })
        .collect();
    a.push(
        (0..vertices.len())
            .map(|w| if w == i || w == j { BigRational::zero() } else { BigRational::one() })
            .collect(),
    );
    let mut b = vec![BigRational::zero(); dim];
    b.push(BigRational::one());
    Ok(!feasible(&a, &b))
}

/// All adjacent pairs `(i, j)`, `i < j`, of [`brute_bases`].
pub fn brute_edges(region: &Region) -> Result<Vec<(usize, usize)>> {
    let verts = brute_bases(region)?;
    let mut out = Vec::new();
    for i in 0..verts.len() {
        for j in i + 1..verts.len() {
            if brute_adjacent(&verts, i, j)? {
                out.push((i, j));
            }
        }
    }
    Ok(out)
}

/// A facet found by rank tests: `coeffs . x <= rhs`, tight on the listed
/// indices of [`brute_bases`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteFacet {
    pub coeffs: Vec<i64>,
    pub rhs: i64,
    pub tight: Vec<usize>,
}

/// The inequalities `-x_e <= 0`, `x_e <= 1`, `±(x_1 + ... + x_i) <= ...` from
/// the profiles whose tight vertex sets have affine dimension `dim - 1`, one
/// per tight set.
pub fn brute_facets(region: &Region) -> Result<Vec<BruteFacet>> {
    brute_facets_up_to(region, 9)
}

/// [`brute_facets`] with a caller-chosen size cap.
pub fn brute_facets_up_to(region: &Region, max_size: usize) -> Result<Vec<BruteFacet>> {
    let n = region.len();
    cap(n, max_size)?;
    let verts = brute_bases(region)?;
    let dim = affine_dimension(&verts);
    let (p, q) = (region.lower_profile(), region.upper_profile());
    let mut rows: Vec<(Vec<i64>, i64)> = Vec::new();
    for e in 0..n {
        let mut c = vec![0; n];
        c[e] = -1;
        rows.push((c, 0));
        let mut c = vec![0; n];
        c[e] = 1;
        rows.push((c, 1));
    }
    for i in 1..n {
        let ones: Vec<i64> = (0..n).map(|k| i64::from(k < i)).collect();
        rows.push((ones.iter().map(|c| -c).collect(), -(p[i] as i64)));
        rows.push((ones, q[i] as i64));
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (coeffs, rhs) in rows {
        let tight: Vec<usize> = (0..verts.len())
            .filter(|&k| coeffs.iter().zip(&verts[k]).map(|(&c, &x)| c * x as i64).sum::<i64>() == rhs)
            .collect();
        if tight.is_empty() || seen.contains(&tight) {
            continue;
        }
        let pts: Vec<Vec<u8>> = tight.iter().map(|&k| verts[k].clone()).collect();
        if affine_dimension(&pts) == dim - 1 {
            seen.insert(tight.clone());
            out.push(BruteFacet { coeffs, rhs, tight });
        }
    }
    Ok(out)
}

/// Classes of the relation "lie on a common circuit", circuits being the
/// minimal subsets contained in no basis.
pub fn brute_components(region: &Region) -> Result<Vec<Vec<usize>>> {
    let n = region.len();
    cap(n, 8)?;
    let bases: Vec<u32> = brute_bases(region)?
        .iter()
        .map(|v| v.iter().enumerate().map(|(k, &x)| (x as u32) << k).sum())
        .collect();
    let independent = |s: u32| bases.iter().any(|&b| s & b == s);
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for s in 1u32..1 << n {
        if independent(s) {
            continue;
        }
        let minimal = (0..n).filter(|k| s >> k & 1 == 1).all(|k| independent(s & !(1 << k)));
        if !minimal {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|k| s >> k & 1 == 1).collect();
        for w in members.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            parent[a] = b;
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let roots: Vec<usize> = (0..n).map(|k| find(&mut parent, k)).collect();
    for root in roots.iter().copied().unique() {
        classes.push((0..n).filter(|&k| roots[k] == root).map(|k| k + 1).collect());
    }
    classes.sort();
    Ok(classes)
}

/// Bijective fillings of the strip's boxes by `1..=ℓ` increasing left to
/// right along rows and decreasing upward along columns.
pub fn brute_syt(strip: &BorderStrip) -> Result<u64> {
    let boxes = strip.boxes();
    let l = boxes.len();
    cap(l, 9)?;
    let mut row_pairs = Vec::new();
    let mut col_pairs = Vec::new();
    for a in 0..l {
        for b in 0..l {
            if boxes[a].row == boxes[b].row && boxes[a].col < boxes[b].col {
                row_pairs.push((a, b));
            }
            if boxes[a].col == boxes[b].col && boxes[a].row < boxes[b].row {
                col_pairs.push((a, b));
            }
        }
    }
    let count = (1..=l)
        .permutations(l)
        .filter(|f| row_pairs.iter().all(|&(a, b)| f[a] < f[b]) && col_pairs.iter().all(|&(a, b)| f[a] > f[b]))
        .count();
    Ok(count as u64)
}

/// Permutations of `[n]` with descent set exactly `d`, by enumeration.
pub fn brute_descent_count(n: usize, d: &BTreeSet<usize>) -> Result<u64> {
    cap(n, 9)?;
    let count = (1..=n)
        .permutations(n)
        .filter(|w| {
            let des: BTreeSet<usize> = (1..n).filter(|&i| w[i - 1] > w[i]).collect();
            des == *d
        })
        .count();
    Ok(count as u64)
}

/// Lattice points of `t` times the polytope, by enumerating all vectors in
/// `{0..t}^{m+r}`.
pub fn brute_lattice_points(region: &Region, t: usize) -> Result<u64> {
    let n = region.len();
    cap(n * t, 16)?;
    let (p, q) = (region.lower_profile(), region.upper_profile());
    let count = (0..n)
        .map(|_| 0..=t)
        .multi_cartesian_product()
        .filter(|x| {
            let mut c = 0;
            for i in 1..=n {
                c += x[i - 1];
                if c < t * p[i] || c > t * q[i] {
                    return false;
                }
            }
            c == t * region.r()
        })
        .count();
    Ok(count as u64 + u64::from(n == 0))
}

/// Power series coefficients `[t^0..t^order]` of
/// `(1 - 2t - sqrt(1 - 4t)) / (4t (1 - 4t))`.
pub fn catalan_area_series(order: usize) -> Vec<BigRational> {
    let len = order + 2;
    let f: Vec<BigRational> = (0..len)
        .map(|k| match k {
            0 => BigRational::one(),
            1 => BigRational::from_integer(BigInt::from(-4)),
            _ => BigRational::zero(),
        })
        .collect();
    // sqrt by s_0 = 1, s_k = (f_k - Σ_{0<i<k} s_i s_{k-i}) / 2
    let mut s = vec![BigRational::one()];
    let two = BigRational::from_integer(BigInt::from(2));
    for k in 1..len {
        let mut acc = f[k].clone();
        for i in 1..k {
            acc -= &s[i] * &s[k - i];
        }
        s.push(acc / &two);
    }
    // numerator 1 - 2t - sqrt(1 - 4t), which has no constant or linear term
    let num: Vec<BigRational> = (0..len)
        .map(|k| {
            let base = match k {
                0 => BigRational::one(),
                1 => BigRational::from_integer(BigInt::from(-2)),
                _ => BigRational::zero(),
            };
            base - &s[k]
        })
        .collect();
    debug_assert!(num[0].is_zero() && num[1].is_zero());
    let four = BigRational::from_integer(BigInt::from(4));
    let shifted: Vec<BigRational> = (0..=order).map(|k| &num[k + 1] / &four).collect();
    // multiply by 1 / (1 - 4t)
    let mut out = Vec::with_capacity(order + 1);
    let mut acc = BigRational::zero();
    for c in shifted {
        acc = acc * &four + c;
        out.push(acc.clone());
    }
    out
}

/// Total area between the diagonal and the paths of `(E^n N^n, (EN)^n)`,
/// from enumeration.
pub fn brute_catalan_area(n: usize) -> Result<BigRational> {
    cap(2 * n, 24)?;
    let mut total = BigRational::zero();
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    for path in all_paths(n, n) {
        let mut h = 0i64;
        let mut area = BigRational::zero();
        let mut ok = true;
        let mut x = 0i64;
        for s in path.steps() {
            match s.as_char() {
                'E' => {
                    // column strip between height h and the diagonal y = x .. x+1
                    area += BigRational::from_integer(BigInt::from(x - h)) + &half;
                    x += 1;
                }
                _ => {
                    h += 1;
                    if h > x {
                        ok = false;
                    }
                }
            }
        }
        if ok {
            total += area;
        }
    }
    Ok(total)
}
