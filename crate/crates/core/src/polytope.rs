//! The polytope `conv{e_B : B basis of M[P, Q]}`: vertices, dimension,
//! edges, the prefix-sum inequality description, facets, and the regions
//! carrying each facet.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::lattice_path::{PathWord, Region, Step};
use crate::matroid::{self, BasisVector};
use crate::volume;
use crate::{LpmError, Result};

/// Vertices of the polytope: the basis incidence vectors in lexicographic order.
pub fn vertices(region: &Region) -> Vec<BasisVector> {
    matroid::bases(region)
}

/// Dimension of the affine hull of a point set, `-1` for the empty set.
///
/// Fraction-free (Bareiss) elimination on the differences `v_k - v_0`.
pub fn affine_rank<P: AsRef<[u8]>>(points: &[P]) -> isize {
    let Some(first) = points.first() else {
        return -1;
    };
    let base = first.as_ref();
    let mut rows: Vec<Vec<i128>> = points[1..]
        .iter()
        .map(|p| {
            p.as_ref()
                .iter()
                .zip(base)
                .map(|(&a, &b)| a as i128 - b as i128)
                .collect()
        })
        .collect();
    integer_rank(&mut rows) as isize
}

fn integer_rank(rows: &mut [Vec<i128>]) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut prev_pivot: i128 = 1;
    for col in 0..ncols {
        let Some(pivot_row) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let pivot = rows[rank][col];
        for i in rank + 1..rows.len() {
            let factor = rows[i][col];
            for j in 0..ncols {
                rows[i][j] = (pivot * rows[i][j] - factor * rows[rank][j]) / prev_pivot;
            }
        }
        prev_pivot = pivot;
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// `(m + r) - c(M)`.
pub fn dimension(region: &Region) -> usize {
    region.len() - matroid::components(region).count()
}

/// Pairs `(i, j)`, `i < j`, of vertex indices whose incidence vectors differ
/// by `e_a - e_b`.
pub fn edges(region: &Region) -> Vec<(usize, usize)> {
    let verts = vertices(region);
    let mut out = Vec::new();
    for i in 0..verts.len() {
        for j in i + 1..verts.len() {
            let diff = verts[i]
                .coords()
                .iter()
                .zip(verts[j].coords())
                .filter(|(a, b)| a != b)
                .count();
            if diff == 2 {
                out.push((i, j));
            }
        }
    }
    out
}

/// Sum of `area_below` over the paths of a region whose lower path is `E^m N^r`.
pub fn edge_count_by_area(region: &Region) -> Result<u64> {
    if *region.lower() != PathWord::lowest(region.m(), region.r()) {
        return Err(LpmError::NotGeneralizedCatalan);
    }
    Ok(region.enumerate_paths().iter().map(PathWord::area_below).sum())
}

/// `(E^n N^n, (EN)^n)`: paths to `(n, n)` staying weakly below `y = x`.
pub fn dyck_region(n: usize) -> Region {
    let upper: Vec<Step> = (0..n).flat_map(|_| [Step::E, Step::N]).collect();
    Region::new(PathWord::lowest(n, n), PathWord::from_steps(upper))
        .expect("Dyck region is valid")
}

/// `(E^n N^n, (NE)^n)`, the connected core of the Catalan matroid `M_{n+1}`.
pub fn catalan_core_region(n: usize) -> Region {
    let upper: Vec<Step> = (0..n).flat_map(|_| [Step::N, Step::E]).collect();
    Region::new(PathWord::lowest(n, n), PathWord::from_steps(upper))
        .expect("Catalan core region is valid")
}

/// `(E^{r(n-1)} N^{n-1}, (N E^r)^{n-1})`.
pub fn kcatalan_region(r: usize, n: usize) -> Region {
    let k = n.saturating_sub(1);
    let mut upper = Vec::with_capacity(k * (r + 1));
    for _ in 0..k {
        upper.push(Step::N);
        upper.extend(std::iter::repeat_n(Step::E, r));
    }
    Region::new(PathWord::lowest(r * k, k), PathWord::from_steps(upper))
        .expect("k-Catalan region is valid")
}

/// Total area `a(n)` under the Dyck paths of size `n`, as
/// `(n^2 / 2) C_n - A_n` with `A_n` the total area between the paths and the
/// diagonal.
pub fn catalan_edge_formula(n: usize) -> BigInt {
    let half_square = BigRational::new(BigInt::from(n * n), BigInt::from(2));
    let value = half_square * BigRational::from_integer(volume::catalan_number(n))
        - volume::catalan_area_closed_form(n);
    debug_assert!(value.is_integer());
    value.to_integer()
}

/// The same quantity with the `A_n` term written as `- 4^n/2 - binom(2n+2, n+1)/4`,
/// i.e. with the sign of the binomial term flipped.
pub fn catalan_edge_formula_printed(n: usize) -> BigRational {
    let half_square = BigRational::new(BigInt::from(n * n), BigInt::from(2));
    let four_pow = BigRational::new(BigInt::from(4u8).pow(n as u32), BigInt::from(2));
    let binom = BigRational::new(volume::binomial(2 * n + 2, n + 1), BigInt::from(4));
    half_square * BigRational::from_integer(volume::catalan_number(n)) - four_pow - binom
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "=")]
    Eq,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "=",
        })
    }
}

/// What a row of the inequality description constrains. Element indices are
/// 1-based and absolute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ConstraintKind {
    /// `x_e >= 0`
    LowerBound { element: usize },
    /// `x_e <= 1`
    UpperBound { element: usize },
    /// `x_from + ... + x_to <= rhs`
    SumUpper { from: usize, to: usize },
    /// `x_from + ... + x_to >= rhs`
    SumLower { from: usize, to: usize },
    /// `x_1 + ... + x_n = r`
    Total,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Inequality {
    pub coeffs: Vec<i64>,
    pub rel: Relation,
    pub rhs: i64,
    pub kind: ConstraintKind,
}

impl Inequality {
    fn range_sum(n: usize, from: usize, to: usize, rel: Relation, rhs: i64, kind: ConstraintKind) -> Self {
        let coeffs = (1..=n).map(|e| i64::from(from <= e && e <= to)).collect();
        Inequality {
            coeffs,
            rel,
            rhs,
            kind,
        }
    }

    pub fn lower_bound(n: usize, element: usize) -> Self {
        Self::range_sum(n, element, element, Relation::Ge, 0, ConstraintKind::LowerBound { element })
    }

    pub fn upper_bound(n: usize, element: usize) -> Self {
        Self::range_sum(n, element, element, Relation::Le, 1, ConstraintKind::UpperBound { element })
    }

    pub fn sum_upper(n: usize, from: usize, to: usize, rhs: usize) -> Self {
        Self::range_sum(n, from, to, Relation::Le, rhs as i64, ConstraintKind::SumUpper { from, to })
    }

    pub fn sum_lower(n: usize, from: usize, to: usize, rhs: usize) -> Self {
        Self::range_sum(n, from, to, Relation::Ge, rhs as i64, ConstraintKind::SumLower { from, to })
    }

    pub fn total(n: usize, r: usize) -> Self {
        Self::range_sum(n, 1, n, Relation::Eq, r as i64, ConstraintKind::Total)
    }

    pub fn lhs(&self, point: &[u8]) -> i64 {
        self.coeffs.iter().zip(point).map(|(&c, &x)| c * x as i64).sum()
    }

    pub fn is_satisfied(&self, point: &[u8]) -> bool {
        let v = self.lhs(point);
        match self.rel {
            Relation::Le => v <= self.rhs,
            Relation::Ge => v >= self.rhs,
            Relation::Eq => v == self.rhs,
        }
    }

    pub fn is_tight(&self, point: &[u8]) -> bool {
        self.lhs(point) == self.rhs
    }

    /// The same constraint rewritten with `<=` (or `=`).
    pub fn to_le_form(&self) -> (Vec<i64>, Relation, i64) {
        match self.rel {
            Relation::Ge => (self.coeffs.iter().map(|c| -c).collect(), Relation::Le, -self.rhs),
            rel => (self.coeffs.clone(), rel, self.rhs),
        }
    }

    /// Whether the constraint follows from `0 <= x <= 1` and `sum x = r` alone.
    pub fn is_vacuous(&self, n: usize, r: usize) -> bool {
        match self.kind {
            ConstraintKind::SumUpper { from: 1, to } => self.rhs >= to.min(r) as i64,
            ConstraintKind::SumLower { from: 1, to } => self.rhs <= to.saturating_sub(n - r) as i64,
            _ => false,
        }
    }

    pub fn with_offset(&self, offset: usize, n: usize) -> Inequality {
        let mut coeffs = vec![0; n];
        coeffs[offset..offset + self.coeffs.len()].copy_from_slice(&self.coeffs);
        let kind = match self.kind {
            ConstraintKind::LowerBound { element } => ConstraintKind::LowerBound {
                element: element + offset,
            },
            ConstraintKind::UpperBound { element } => ConstraintKind::UpperBound {
                element: element + offset,
            },
            ConstraintKind::SumUpper { from, to } => ConstraintKind::SumUpper {
                from: from + offset,
                to: to + offset,
            },
            ConstraintKind::SumLower { from, to } => ConstraintKind::SumLower {
                from: from + offset,
                to: to + offset,
            },
            ConstraintKind::Total => ConstraintKind::SumUpper {
                from: offset + 1,
                to: offset + self.coeffs.len(),
            },
        };
        Inequality {
            coeffs,
            rel: self.rel,
            rhs: self.rhs,
            kind,
        }
    }
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match c {
                1 => format!("x{}", i + 1),
                -1 => format!("-x{}", i + 1),
                c => format!("{c}*x{}", i + 1),
            })
            .collect();
        let lhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
        write!(f, "{lhs} {} {}", self.rel, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HRepresentation {
    pub equalities: Vec<Inequality>,
    pub inequalities: Vec<Inequality>,
}

impl HRepresentation {
    pub fn contains(&self, point: &[u8]) -> bool {
        self.equalities
            .iter()
            .chain(&self.inequalities)
            .all(|c| c.is_satisfied(point))
    }
}

/// `p_i <= x_1 + ... + x_i <= q_i` for `1 <= i < m + r`, the box bounds, and
/// `x_1 + ... + x_{m+r} = r`. Rows are ordered: lower bounds, upper bounds,
/// then the prefix pairs by length.
pub fn h_representation(region: &Region) -> HRepresentation {
    let n = region.len();
    let (p, q) = (region.lower_profile(), region.upper_profile());
    let mut inequalities = Vec::with_capacity(4 * n);
    inequalities.extend((1..=n).map(|e| Inequality::lower_bound(n, e)));
    inequalities.extend((1..=n).map(|e| Inequality::upper_bound(n, e)));
    for i in 1..n {
        inequalities.push(Inequality::sum_lower(n, 1, i, p[i]));
        inequalities.push(Inequality::sum_upper(n, 1, i, q[i]));
    }
    HRepresentation {
        equalities: vec![Inequality::total(n, region.r())],
        inequalities,
    }
}

/// Maximal runs of a path word, e.g. `EENNNE` is `E^2 N^3 E^1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RunLengthForm {
    pub first: char,
    pub runs: Vec<usize>,
}

impl RunLengthForm {
    pub fn of(path: &PathWord) -> Self {
        let mut runs: Vec<usize> = Vec::new();
        let mut last = None;
        for &s in path.steps() {
            if Some(s) == last {
                *runs.last_mut().expect("run started") += 1;
            } else {
                runs.push(1);
                last = Some(s);
            }
        }
        RunLengthForm {
            first: path.steps().first().map_or('E', |s| s.as_char()),
            runs,
        }
    }

    /// Partial sums `run_1 + ... + run_k` for `k = 1..=len`.
    pub fn boundaries(&self) -> Vec<usize> {
        self.runs
            .iter()
            .scan(0, |acc, &x| {
                *acc += x;
                Some(*acc)
            })
            .collect()
    }
}

/// Where a facet candidate came from in the corner case analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FacetOrigin {
    /// A box bound `x_e >= 0` or `x_e <= 1` that survived the exclusions.
    BoxBound,
    /// `x_1 + ... + x_{b_1+...+b_{2k}} <= b_1 + b_3 + ... + b_{2k-1}` at the
    /// `k`-th east-to-north corner of the upper path `N^{b_1} E^{b_2} ...`.
    UpperCorner { k: usize },
    /// `x_1 + ... + x_{a_1+...+a_{2k}} >= a_2 + a_4 + ... + a_{2k}` at the
    /// `k`-th north-to-east corner of the lower path `E^{a_1} N^{a_2} ...`.
    LowerCorner { k: usize },
    /// A facet of one connected block of a disconnected region.
    Block { start: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    pub inequality: Inequality,
    pub origin: FacetOrigin,
    /// Indices into [`vertices`] of the vertices on the facet.
    pub tight_vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetList {
    pub dimension: usize,
    pub facets: Vec<Facet>,
}

impl FacetList {
    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// The facets as sets of tight vertex indices, sorted.
    pub fn tight_sets(&self) -> BTreeSet<Vec<usize>> {
        self.facets.iter().map(|f| f.tight_vertices.clone()).collect()
    }
}

/// Candidate facet inequalities of a connected region from its corner
/// structure: upper-path corners, lower-path corners, and the box bounds not
/// forced by a neighbouring pair of corner constraints.
pub fn facet_candidates(region: &Region) -> Result<Vec<(Inequality, FacetOrigin)>> {
    let comps = matroid::components(region);
    if !comps.is_connected() {
        return Err(LpmError::DisconnectedRegion {
            components: comps.count(),
        });
    }
    let n = region.len();
    if n < 2 {
        return Ok(Vec::new());
    }
    // Connected with at least two elements: P = E^{a_1} N^{a_2} ... N^{a_{2l}},
    // Q = N^{b_1} E^{b_2} ... E^{b_{2s}}.
    let alpha = RunLengthForm::of(region.lower());
    let beta = RunLengthForm::of(region.upper());
    debug_assert!(alpha.first == 'E' && beta.first == 'N');
    let a_bounds = alpha.boundaries();
    let b_bounds = beta.boundaries();
    let l = alpha.runs.len() / 2;
    let s = beta.runs.len() / 2;

    // (length, rhs, k)
    let upper: Vec<(usize, usize, usize)> = (1..s)
        .map(|k| {
            let len = b_bounds[2 * k - 1];
            let rhs = (0..k).map(|t| beta.runs[2 * t]).sum();
            (len, rhs, k)
        })
        .collect();
    let lower: Vec<(usize, usize, usize)> = (1..l)
        .map(|k| {
            let len = a_bounds[2 * k - 1];
            let rhs = (0..k).map(|t| alpha.runs[2 * t + 1]).sum();
            (len, rhs, k)
        })
        .collect();
    let upper_at = |len: usize| upper.iter().find(|u| u.0 == len).map(|u| u.1);
    let lower_at = |len: usize| lower.iter().find(|u| u.0 == len).map(|u| u.1);

    let mut out = Vec::new();
    for i in 1..=n {
        // x_1+..+x_i >= j together with x_1+..+x_{i-1} <= j forces x_i >= 0.
        let forced = matches!((lower_at(i), i.checked_sub(1).and_then(upper_at)), (Some(j), Some(k)) if j == k);
        if !forced {
            out.push((Inequality::lower_bound(n, i), FacetOrigin::BoxBound));
        }
    }
    let last_lower_corner = if l >= 2 { a_bounds[2 * l - 3] } else { 0 };
    for i in 1..=n {
        // x_1+..+x_{i-1} >= j together with x_1+..+x_i <= j+1 forces x_i <= 1.
        let forced_pair = matches!(
            (i.checked_sub(1).and_then(lower_at), upper_at(i)),
            (Some(j), Some(k)) if k == j + 1
        );
        let forced_start = beta.runs[0] == 1 && i <= 1 + beta.runs[1];
        let forced_end = alpha.runs[2 * l - 1] == 1 && i > last_lower_corner;
        if !(forced_pair || forced_start || forced_end) {
            out.push((Inequality::upper_bound(n, i), FacetOrigin::BoxBound));
        }
    }
    for &(len, rhs, k) in &upper {
        out.push((Inequality::sum_upper(n, 1, len, rhs), FacetOrigin::UpperCorner { k }));
    }
    for &(len, rhs, k) in &lower {
        out.push((Inequality::sum_lower(n, 1, len, rhs), FacetOrigin::LowerCorner { k }));
    }
    Ok(out)
}

/// Facets of a connected region.
///
/// Candidates come from [`facet_candidates`]; a candidate is kept when its
/// tight vertices span an affine space of dimension `dim - 1`, and only the
/// first candidate for each tight vertex set survives.
pub fn facets(region: &Region) -> Result<FacetList> {
    let candidates = facet_candidates(region)?;
    let dim = dimension(region);
    let verts = vertices(region);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    if dim == 0 {
        return Ok(FacetList {
            dimension: 0,
            facets: out,
        });
    }
    for (ineq, origin) in candidates {
        let tight: Vec<usize> = (0..verts.len())
            .filter(|&k| ineq.is_tight(verts[k].coords()))
            .collect();
        if tight.is_empty() || !seen.insert(tight.clone()) {
            continue;
        }
        let pts: Vec<&[u8]> = tight.iter().map(|&k| verts[k].coords()).collect();
        if affine_rank(&pts) == dim as isize - 1 {
            out.push(Facet {
                inequality: ineq,
                origin,
                tight_vertices: tight,
            });
        } else {
            seen.remove(&tight);
        }
    }
    Ok(FacetList {
        dimension: dim,
        facets: out,
    })
}

/// Facets of any region: the polytope is the product of its block polytopes,
/// so the facets of each block of positive dimension are embedded.
pub fn facets_by_blocks(region: &Region) -> FacetList {
    let n = region.len();
    let verts = vertices(region);
    let mut out = Vec::new();
    for block in matroid::components(region).blocks {
        let sub = matroid::block_region(region, &block);
        let list = facets(&sub).expect("blocks are connected");
        for f in list.facets {
            let inequality = f.inequality.with_offset(block.start - 1, n);
            let tight_vertices = (0..verts.len())
                .filter(|&k| inequality.is_tight(verts[k].coords()))
                .collect();
            let origin = if block.start == 1 && block.end == n {
                f.origin
            } else {
                FacetOrigin::Block { start: block.start }
            };
            out.push(Facet {
                inequality,
                origin,
                tight_vertices,
            });
        }
    }
    FacetList {
        dimension: dimension(region),
        facets: out,
    }
}

/// Claimed number of facets of `P(M_{n+1})`, i.e. of [`catalan_core_region`]`(n)`.
pub fn catalan_facet_count(n: usize) -> usize {
    5 * n - 5
}

/// Claimed number of facets of [`kcatalan_region`]`(r, n)`.
pub fn kcatalan_facet_count(r: usize, n: usize) -> usize {
    (r + 1) * (2 * n - 3) + n - 2
}

/// The face of a facet, realised as lattice path matroid regions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Face {
    /// `x_element = value`; `region` lives on the remaining `m + r - 1` elements.
    Deletion {
        element: usize,
        value: u8,
        region: Region,
    },
    /// `x_1 + ... + x_len = height`: the direct sum of the region on elements
    /// `1..=len` and the region on `len+1..=m+r`.
    DirectSum {
        len: usize,
        height: usize,
        left: Region,
        right: Region,
    },
}

impl Face {
    /// The face's vertices in the ambient coordinates, sorted.
    pub fn vertex_images(&self) -> Vec<Vec<u8>> {
        let mut out: Vec<Vec<u8>> = match self {
            Face::Deletion {
                element,
                value,
                region,
            } => matroid::bases(region)
                .into_iter()
                .map(|b| {
                    let mut v = b.coords().to_vec();
                    v.insert(element - 1, *value);
                    v
                })
                .collect(),
            Face::DirectSum { left, right, .. } => {
                let rb = matroid::bases(right);
                matroid::bases(left)
                    .iter()
                    .flat_map(|l| {
                        rb.iter().map(move |r| {
                            let mut v = l.coords().to_vec();
                            v.extend_from_slice(r.coords());
                            v
                        })
                    })
                    .collect()
            }
        };
        out.sort();
        out
    }
}

/// Pinches the region through `(len - height, height)` and returns the two halves.
fn pinch(region: &Region, len: usize, height: usize) -> Option<(Region, Region)> {
    let (p, q) = (region.lower_profile(), region.upper_profile());
    let n = region.len();
    let mut lo: Vec<usize> = p[..=len].to_vec();
    let mut hi: Vec<usize> = q[..=len].to_vec();
    lo[len] = height;
    hi[len] = height;
    let left = Region::from_bounds(&lo, &hi, height)?;
    let lo: Vec<usize> = p[len..].iter().map(|&h| h.saturating_sub(height)).collect();
    let hi: Vec<usize> = q[len..].iter().map(|&h| h.checked_sub(height)).collect::<Option<_>>()?;
    let right = Region::from_bounds(&lo, &hi, region.r().checked_sub(height)?)?;
    debug_assert_eq!(left.len() + right.len(), n);
    Some((left, right))
}

/// The lattice path matroid region(s) whose bases are the vertices of `facet`.
pub fn face_region(region: &Region, facet: &Facet) -> Result<Face> {
    let list = facets(region)?;
    if !list.facets.iter().any(|f| f.inequality == facet.inequality) {
        return Err(LpmError::NotAFacet);
    }
    let ineq = &facet.inequality;
    match ineq.kind {
        ConstraintKind::LowerBound { element } => Ok(Face::Deletion {
            element,
            value: 0,
            region: matroid::delete(region, element, 0)?,
        }),
        ConstraintKind::UpperBound { element } => Ok(Face::Deletion {
            element,
            value: 1,
            region: matroid::delete(region, element, 1)?,
        }),
        ConstraintKind::SumUpper { from: 1, to } | ConstraintKind::SumLower { from: 1, to } => {
            let height = usize::try_from(ineq.rhs).map_err(|_| LpmError::NotAFacet)?;
            let (left, right) = pinch(region, to, height).ok_or(LpmError::NotAFacet)?;
            Ok(Face::DirectSum {
                len: to,
                height,
                left,
                right,
            })
        }
        _ => Err(LpmError::NotAFacet),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn region(p: &str, q: &str) -> Region {
        Region::parse(p, q).unwrap()
    }

    fn labels(list: &FacetList) -> Vec<String> {
        list.facets.iter().map(|f| f.inequality.to_string()).collect()
    }

    #[test]
    fn vertices_and_dimension() {
        assert_eq!(vertices(&region("EENN", "NENE")).len(), 5);
        assert_eq!(vertices(&region("EENN", "NNEE")).len(), 6);
        assert_eq!(vertices(&region("EN", "EN")).len(), 1);
        assert_eq!(dimension(&region("EENN", "NENE")), 3);
        assert_eq!(dimension(&region("EENN", "NNEE")), 3);
        assert_eq!(dimension(&region("EN", "EN")), 0);
    }

    #[test]
    fn affine_rank_basics() {
        let empty: [&[u8]; 0] = [];
        assert_eq!(affine_rank(&empty), -1);
        assert_eq!(affine_rank(&[[1u8, 0]]), 0);
        assert_eq!(affine_rank(&[[1u8, 0, 0], [0, 1, 0], [0, 0, 1]]), 2);
        assert_eq!(affine_rank(&[[1u8, 0], [0, 1], [1, 0]]), 1);
    }

    #[test]
    fn edge_examples() {
        assert_eq!(edges(&region("EENN", "NENE")).len(), 8);
        assert_eq!(edges(&region("EN", "NE")).len(), 1);
        assert_eq!(edges(&region("EENN", "NNEE")).len(), 12);
    }

    #[test]
    fn edge_count_by_area_examples() {
        assert_eq!(edge_count_by_area(&region("EENN", "NENE")).unwrap(), 8);
        assert_eq!(edge_count_by_area(&region("EN", "NE")).unwrap(), 1);
        assert_eq!(edge_count_by_area(&dyck_region(3)).unwrap(), 8);
        assert_eq!(
            edge_count_by_area(&region("ENEN", "NENE")),
            Err(LpmError::NotGeneralizedCatalan)
        );
    }

    #[test]
    fn catalan_edge_formula_small_values() {
        assert_eq!(catalan_edge_formula(1), BigInt::from(0));
        assert_eq!(catalan_edge_formula(2), BigInt::from(1));
        assert_eq!(catalan_edge_formula(3), BigInt::from(8));
        // The printed form is -3 at n = 1.
        assert_eq!(catalan_edge_formula_printed(1), BigRational::from_integer(BigInt::from(-3)));
    }

    #[test]
    fn h_representation_examples() {
        let h = h_representation(&region("EENN", "NENE"));
        let rows: Vec<String> = h.inequalities.iter().map(|i| i.to_string()).collect();
        assert!(rows.contains(&"x1 + x2 <= 1".to_string()));
        assert!(rows.contains(&"x1 + x2 + x3 >= 1".to_string()));
        assert_eq!(h.equalities[0].to_string(), "x1 + x2 + x3 + x4 = 2");

        let seg = h_representation(&region("EN", "NE"));
        assert!(seg.inequalities.iter().all(|i| i.is_vacuous(2, 1)
            || matches!(i.kind, ConstraintKind::LowerBound { .. } | ConstraintKind::UpperBound { .. })));

        let rect = h_representation(&region("EENN", "NNEE"));
        assert!(rect
            .inequalities
            .iter()
            .filter(|i| matches!(i.kind, ConstraintKind::SumUpper { .. } | ConstraintKind::SumLower { .. }))
            .all(|i| i.is_vacuous(4, 2)));
    }

    #[test]
    fn facet_examples() {
        let l = facets(&region("EENN", "NENE")).unwrap();
        assert_eq!(labels(&l), ["x1 >= 0", "x2 >= 0", "x3 <= 1", "x4 <= 1", "x1 + x2 <= 1"]);
        let seg = facets(&region("EN", "NE")).unwrap();
        assert_eq!(labels(&seg), ["x1 >= 0", "x2 >= 0"]);
        assert_eq!(facets(&region("EENN", "NNEE")).unwrap().len(), 8);
        assert!(matches!(
            facets(&region("EN", "EN")),
            Err(LpmError::DisconnectedRegion { components: 2 })
        ));
    }

    #[test]
    fn claimed_counts() {
        assert_eq!(catalan_facet_count(2), 5);
        assert_eq!(catalan_facet_count(4), 15);
        assert_eq!(kcatalan_facet_count(1, 3), 7);
        assert_eq!(kcatalan_facet_count(2, 2), 3);
        assert_eq!(kcatalan_facet_count(1, 2), 2);
    }

    #[test]
    fn face_region_examples() {
        let reg = region("EENN", "NENE");
        let list = facets(&reg).unwrap();
        let prefix = list.facets.iter().find(|f| f.inequality.to_string() == "x1 + x2 <= 1").unwrap();
        let face = face_region(&reg, prefix).unwrap();
        match &face {
            Face::DirectSum { left, right, .. } => {
                assert_eq!(left.to_string(), "(EN, NE)");
                assert_eq!(right.to_string(), "(EN, NE)");
            }
            other => panic!("unexpected face {other:?}"),
        }
        assert_eq!(face.vertex_images().len(), 4);

        let x4 = list.facets.iter().find(|f| f.inequality.to_string() == "x4 <= 1").unwrap();
        let face = face_region(&reg, x4).unwrap();
        let images: Vec<String> = face
            .vertex_images()
            .iter()
            .map(|v| v.iter().map(|c| c.to_string()).collect())
            .collect();
        assert_eq!(images, ["0011", "0101", "1001"]);

        let seg = region("EN", "NE");
        let x1 = facets(&seg).unwrap().facets[0].clone();
        assert_eq!(face_region(&seg, &x1).unwrap().vertex_images(), vec![vec![0, 1]]);

        let bogus = Facet {
            inequality: Inequality::upper_bound(4, 1),
            origin: FacetOrigin::BoxBound,
            tight_vertices: vec![],
        };
        assert_eq!(face_region(&reg, &bogus), Err(LpmError::NotAFacet));
    }

    #[test]
    fn run_length_form() {
        let rl = RunLengthForm::of(&"EENNNE".parse().unwrap());
        assert_eq!(rl.first, 'E');
        assert_eq!(rl.runs, vec![2, 3, 1]);
        assert_eq!(rl.boundaries(), vec![2, 5, 6]);
    }
}
