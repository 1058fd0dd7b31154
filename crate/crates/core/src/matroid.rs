//! The transversal matroid `M[P, Q]` of a region.
//!
//! Its presentation is the interval system `N_i = [l_i, u_i]`, where `l_i` is
//! the position of the `i`-th north step of the upper path and `u_i` that of
//! the lower path. Bases are exactly the north-step sets of the paths in the
//! region.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::lattice_path::{PathWord, Region};
use crate::{LpmError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Interval {
    pub lo: usize,
    pub hi: usize,
}

impl Interval {
    pub fn contains(&self, e: usize) -> bool {
        self.lo <= e && e <= self.hi
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalPresentation {
    ground: usize,
    intervals: Vec<Interval>,
}

pub fn presentation(region: &Region) -> IntervalPresentation {
    let intervals = region
        .upper()
        .north_positions()
        .into_iter()
        .zip(region.lower().north_positions())
        .map(|(lo, hi)| Interval { lo, hi })
        .collect();
    IntervalPresentation {
        ground: region.len(),
        intervals,
    }
}

impl IntervalPresentation {
    pub fn new(ground: usize, intervals: Vec<Interval>) -> Self {
        IntervalPresentation { ground, intervals }
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    /// Size of a largest partial transversal inside `subset`.
    ///
    /// Elements are taken in increasing order and each is matched to the free
    /// interval with the smallest upper endpoint that contains it; for interval
    /// systems this greedy matching is maximum.
    pub fn rank(&self, subset: &[usize]) -> usize {
        let mut elems = subset.to_vec();
        elems.sort_unstable();
        elems.dedup();
        let mut used = vec![false; self.intervals.len()];
        let mut matched = 0;
        for e in elems {
            let pick = self
                .intervals
                .iter()
                .enumerate()
                .filter(|(k, iv)| !used[*k] && iv.contains(e))
                .min_by_key(|(_, iv)| iv.hi)
                .map(|(k, _)| k);
            if let Some(k) = pick {
                used[k] = true;
                matched += 1;
            }
        }
        matched
    }

    /// True iff `subset` is a partial transversal of the intervals.
    pub fn is_independent(&self, subset: &[usize]) -> bool {
        let mut elems = subset.to_vec();
        elems.sort_unstable();
        elems.dedup();
        elems.len() == subset.len() && self.rank(&elems) == elems.len()
    }
}

/// Incidence vector `e_B` of a basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisVector {
    coords: Vec<u8>,
}

impl BasisVector {
    pub fn from_support(n: usize, support: &[usize]) -> Self {
        let mut coords = vec![0u8; n];
        for &e in support {
            coords[e - 1] = 1;
        }
        BasisVector { coords }
    }

    pub fn from_path(path: &PathWord) -> Self {
        BasisVector::from_support(path.len(), &path.north_positions())
    }

    pub fn coords(&self) -> &[u8] {
        &self.coords
    }

    /// 1-based elements of the basis.
    pub fn support(&self) -> Vec<usize> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == 1)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn to_path(&self) -> PathWord {
        PathWord::from_north_positions(self.coords.len(), &self.support())
    }
}

impl fmt::Display for BasisVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.coords {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Whether the `r`-subset `subset` (1-based) is a basis of `M[P, Q]`.
pub fn is_basis(region: &Region, subset: &[usize]) -> Result<bool> {
    let mut s = subset.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.len() != region.r() || subset.len() != region.r() {
        return Err(LpmError::WrongCardinality {
            expected: region.r(),
            found: s.len(),
        });
    }
    if let Some(&e) = s.iter().find(|&&e| e == 0 || e > region.len()) {
        return Err(LpmError::ElementOutOfRange {
            element: e,
            size: region.len(),
        });
    }
    Ok(region.contains_path(&PathWord::from_north_positions(region.len(), &s)))
}

/// All bases, ordered lexicographically on their 0/1 coordinates.
pub fn bases(region: &Region) -> Vec<BasisVector> {
    region
        .enumerate_paths()
        .iter()
        .map(BasisVector::from_path)
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BlockKind {
    Loop,
    Coloop,
    ConnectedBlock,
}

/// A run `start..=end` (1-based) of the ground set between consecutive
/// touch points of the two paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Block {
    pub start: usize,
    pub end: usize,
    pub kind: BlockKind,
}

impl Block {
    pub fn len(&self) -> usize {
        self.end + 1 - self.start
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> std::ops::RangeInclusive<usize> {
        self.start..=self.end
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentPartition {
    pub blocks: Vec<Block>,
}

impl ComponentPartition {
    /// `c(M)`.
    pub fn count(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_connected(&self) -> bool {
        self.blocks.len() == 1
    }

    /// The blocks as sorted element classes.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(|b| b.elements().collect()).collect()
    }
}

/// Splits the ground set at every interior touch point of the paths.
pub fn components(region: &Region) -> ComponentPartition {
    let touches = region.touch_indices();
    let blocks = touches
        .windows(2)
        .map(|w| {
            let (start, end) = (w[0] + 1, w[1]);
            let kind = if end > start {
                BlockKind::ConnectedBlock
            } else if region.lower_profile()[end] > region.lower_profile()[start - 1] {
                BlockKind::Coloop
            } else {
                BlockKind::Loop
            };
            Block { start, end, kind }
        })
        .collect();
    ComponentPartition { blocks }
}

/// The region carried by one block: both paths restricted to its steps.
pub fn block_region(region: &Region, block: &Block) -> Region {
    let slice = |p: &PathWord| PathWord::from_steps(p.steps()[block.start - 1..block.end].to_vec());
    Region::new(slice(region.lower()), slice(region.upper()))
        .expect("restriction between touch points is a valid region")
}

/// `c(M) = 1`.
pub fn is_connected(region: &Region) -> bool {
    components(region).is_connected()
}

/// The region of the face `x_i = value`: paths of `region` whose `i`-th step
/// is `N` (value 1) or `E` (value 0), with that step removed.
pub fn delete(region: &Region, element: usize, value: u8) -> Result<Region> {
    let n = region.len();
    if element == 0 || element > n {
        return Err(LpmError::ElementOutOfRange { element, size: n });
    }
    if value > 1 {
        return Err(LpmError::InvalidArgument(format!("coordinate value {value} is not 0 or 1")));
    }
    let empty = LpmError::EmptyFace { element, value };
    let v = value as i64;
    let (p, q) = (region.lower_profile(), region.upper_profile());
    let bound = |h: &[usize], j: usize| h[j] as i64;
    // New profile: h'_j = h_j for j < i, h'_j = h_{j+1} - v for j >= i, and
    // h_{i-1} = h_i - v must respect the bounds at i.
    let mut lo = Vec::with_capacity(n);
    let mut hi = Vec::with_capacity(n);
    for j in 0..n {
        let (l, h) = if j + 1 < element {
            (bound(p, j), bound(q, j))
        } else if j + 1 == element {
            (
                bound(p, j).max(bound(p, j + 1) - v),
                bound(q, j).min(bound(q, j + 1) - v),
            )
        } else {
            (bound(p, j + 1) - v, bound(q, j + 1) - v)
        };
        if h < 0 || l > h {
            return Err(empty);
        }
        lo.push(l.max(0) as usize);
        hi.push(h as usize);
    }
    let r = region.r().checked_sub(value as usize).ok_or(empty.clone())?;
    Region::from_bounds(&lo, &hi, r).ok_or(empty)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn region(p: &str, q: &str) -> Region {
        Region::parse(p, q).unwrap()
    }

    fn iv(lo: usize, hi: usize) -> Interval {
        Interval { lo, hi }
    }

    #[test]
    fn presentation_reads_north_positions() {
        assert_eq!(presentation(&region("EENN", "NNEE")).intervals(), [iv(1, 3), iv(2, 4)]);
        assert_eq!(presentation(&region("EENN", "NENE")).intervals(), [iv(1, 3), iv(3, 4)]);
        assert_eq!(presentation(&region("EN", "EN")).intervals(), [iv(2, 2)]);
    }

    #[test]
    fn is_basis_examples() {
        assert!(is_basis(&region("EENN", "NNEE"), &[1, 3]).unwrap());
        assert!(!is_basis(&region("EENN", "NENE"), &[1, 2]).unwrap());
        assert!(is_basis(&region("EN", "EN"), &[2]).unwrap());
        assert_eq!(
            is_basis(&region("EN", "EN"), &[1, 2]),
            Err(LpmError::WrongCardinality {
                expected: 1,
                found: 2
            })
        );
    }

    #[test]
    fn independence_examples() {
        let a = IntervalPresentation::new(4, vec![iv(1, 3), iv(2, 4)]);
        assert!(a.is_independent(&[2, 3]));
        let b = IntervalPresentation::new(2, vec![iv(2, 2)]);
        assert!(!b.is_independent(&[1]));
        let c = IntervalPresentation::new(4, vec![iv(1, 3), iv(3, 4)]);
        assert!(c.is_independent(&[3]));
        assert!(!c.is_independent(&[3, 3]));
        assert!(c.is_independent(&[]));
    }

    #[test]
    fn greedy_prefers_tight_intervals() {
        // 2 fits only N_1 = [1,2] once 3 has taken N_2; matching 2 first to the
        // long interval would strand 3.
        let p = IntervalPresentation::new(4, vec![iv(1, 4), iv(2, 2)]);
        assert!(p.is_independent(&[1, 2]));
        assert_eq!(p.rank(&[2, 3]), 2);
    }

    #[test]
    fn bases_as_strings() {
        let b: Vec<String> = bases(&region("EENN", "NENE")).iter().map(|b| b.to_string()).collect();
        assert_eq!(b, ["0011", "0101", "0110", "1001", "1010"]);
        assert_eq!(bases(&region("EENN", "NNEE")).len(), 6);
        let single: Vec<String> = bases(&region("EN", "EN")).iter().map(|b| b.to_string()).collect();
        assert_eq!(single, ["01"]);
    }

    #[test]
    fn components_examples() {
        let c = components(&region("EENN", "NNEE"));
        assert_eq!(c.count(), 1);
        let cat = components(&region("EEENNN", "ENENEN"));
        assert_eq!(cat.classes(), vec![vec![1], vec![2, 3, 4, 5], vec![6]]);
        assert_eq!(cat.blocks[0].kind, BlockKind::Loop);
        assert_eq!(cat.blocks[2].kind, BlockKind::Coloop);
        let pinched = components(&region("EENNEENN", "NNEENNEE"));
        assert_eq!(pinched.classes(), vec![vec![1, 2, 3, 4], vec![5, 6, 7, 8]]);
    }

    #[test]
    fn delete_examples() {
        let child = delete(&region("EENN", "NENE"), 4, 1).unwrap();
        assert_eq!(child.to_string(), "(EEN, NEE)");
        let child = delete(&region("EENN", "NNEE"), 1, 0).unwrap();
        assert_eq!(child.to_string(), "(ENN, NNE)");
        assert_eq!(bases(&child).len(), 3);
        let child = delete(&region("EN", "EN"), 2, 1).unwrap();
        assert_eq!(child.to_string(), "(E, E)");
        assert_eq!(
            delete(&region("EN", "EN"), 1, 1),
            Err(LpmError::EmptyFace {
                element: 1,
                value: 1
            })
        );
    }
}
