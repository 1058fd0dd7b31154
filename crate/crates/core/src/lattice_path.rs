//! Path words over `{E, N}`, bounded regions, and the boxes between two paths.
//!
//! Heights are counted in `N` steps: the profile of a word `w` of length `n`
//! is `h_0, ..., h_n` with `h_i` the number of `N` among the first `i` steps.
//! A region `(P, Q)` requires `p_i <= q_i` for every `i`, so `P` is the lower
//! path and `Q` the upper one.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{LpmError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    E,
    N,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::E => 'E',
            Step::N => 'N',
        }
    }
}

/// A monotone lattice path written as a word in `E = (1,0)` and `N = (0,1)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathWord {
    steps: Vec<Step>,
    m: usize,
    r: usize,
}

/// Parses a nonempty, case-sensitive word over `{E, N}`.
pub fn parse_path(word: &str) -> Result<PathWord> {
    if word.is_empty() {
        return Err(LpmError::EmptyWord);
    }
    let steps = word
        .chars()
        .enumerate()
        .map(|(i, c)| match c {
            'E' => Ok(Step::E),
            'N' => Ok(Step::N),
            found => Err(LpmError::InvalidCharacter {
                position: i + 1,
                found,
            }),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PathWord::from_steps(steps))
}

impl PathWord {
    pub fn from_steps(steps: Vec<Step>) -> Self {
        let r = steps.iter().filter(|&&s| s == Step::N).count();
        let m = steps.len() - r;
        PathWord { steps, m, r }
    }

    /// `E^m N^r`, the lowest path to `(m, r)`.
    pub fn lowest(m: usize, r: usize) -> Self {
        let mut steps = vec![Step::E; m];
        steps.extend(std::iter::repeat_n(Step::N, r));
        PathWord::from_steps(steps)
    }

    /// `N^r E^m`, the highest path to `(m, r)`.
    pub fn highest(m: usize, r: usize) -> Self {
        let mut steps = vec![Step::N; r];
        steps.extend(std::iter::repeat_n(Step::E, m));
        PathWord::from_steps(steps)
    }

    /// Rebuilds a path from a profile `h_0 = 0, ..., h_n` with unit increments.
    pub fn from_profile(profile: &[usize]) -> Self {
        debug_assert_eq!(profile.first(), Some(&0));
        let steps = profile
            .windows(2)
            .map(|w| {
                debug_assert!(w[1] == w[0] || w[1] == w[0] + 1);
                if w[1] > w[0] {
                    Step::N
                } else {
                    Step::E
                }
            })
            .collect();
        PathWord::from_steps(steps)
    }

    /// The path on `n` steps whose `N` steps sit at the given 1-based positions.
    pub fn from_north_positions(n: usize, positions: &[usize]) -> Self {
        let mut steps = vec![Step::E; n];
        for &p in positions {
            steps[p - 1] = Step::N;
        }
        PathWord::from_steps(steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of `E` steps.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of `N` steps.
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn profile(&self) -> Vec<usize> {
        let mut h = Vec::with_capacity(self.steps.len() + 1);
        h.push(0);
        let mut cur = 0;
        for &s in &self.steps {
            if s == Step::N {
                cur += 1;
            }
            h.push(cur);
        }
        h
    }

    /// 1-based positions of the `N` steps, increasing.
    pub fn north_positions(&self) -> Vec<usize> {
        self.steps
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == Step::N)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Full unit squares between this path and `E^m N^r`: the sum of the
    /// heights at which the `E` steps are taken.
    pub fn area_below(&self) -> u64 {
        let mut height = 0u64;
        let mut area = 0u64;
        for &s in &self.steps {
            match s {
                Step::N => height += 1,
                Step::E => area += height,
            }
        }
        area
    }

    /// Height (number of preceding `N` steps) of each `E` step, in order.
    fn east_heights(&self) -> Vec<usize> {
        let mut height = 0;
        let mut out = Vec::with_capacity(self.m);
        for &s in &self.steps {
            match s {
                Step::N => height += 1,
                Step::E => out.push(height),
            }
        }
        out
    }
}

impl fmt::Display for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for PathWord {
    type Err = LpmError;

    fn from_str(s: &str) -> Result<Self> {
        parse_path(s)
    }
}

/// A unit box of the grid, `col` in `1..=m`, `row` in `1..=r`, with corners
/// `(col-1, row-1)` and `(col, row)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GridBox {
    pub col: usize,
    pub row: usize,
}

/// The part of the `m x r` grid weakly between a lower path and an upper path.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Region {
    lower: PathWord,
    upper: PathWord,
    lower_profile: Vec<usize>,
    upper_profile: Vec<usize>,
}

/// Serialized form of a region: `{"lower": "<word>", "upper": "<word>"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionSpec {
    pub lower: String,
    pub upper: String,
}

/// Checks endpoints and pointwise dominance `p_i <= q_i`.
pub fn make_region(lower: PathWord, upper: PathWord) -> Result<Region> {
    if lower.m != upper.m || lower.r != upper.r {
        return Err(LpmError::EndpointMismatch {
            lower_m: lower.m,
            lower_r: lower.r,
            upper_m: upper.m,
            upper_r: upper.r,
        });
    }
    let lower_profile = lower.profile();
    let upper_profile = upper.profile();
    if let Some(i) = (1..lower_profile.len()).find(|&i| lower_profile[i] > upper_profile[i]) {
        return Err(LpmError::DominanceViolation { index: i });
    }
    Ok(Region {
        lower,
        upper,
        lower_profile,
        upper_profile,
    })
}

impl Region {
    pub fn new(lower: PathWord, upper: PathWord) -> Result<Self> {
        make_region(lower, upper)
    }

    pub fn parse(lower: &str, upper: &str) -> Result<Self> {
        make_region(parse_path(lower)?, parse_path(upper)?)
    }

    pub fn from_spec(spec: &RegionSpec) -> Result<Self> {
        Region::parse(&spec.lower, &spec.upper)
    }

    pub fn to_spec(&self) -> RegionSpec {
        RegionSpec {
            lower: self.lower.to_string(),
            upper: self.upper.to_string(),
        }
    }

    /// The full `m x r` rectangle `(E^m N^r, N^r E^m)`, whose matroid is
    /// uniform and whose polytope is the hypersimplex.
    pub fn rectangle(m: usize, r: usize) -> Self {
        make_region(PathWord::lowest(m, r), PathWord::highest(m, r))
            .expect("rectangle is always a valid region")
    }

    /// Smallest region containing every path `h` with `lo_i <= h_i <= hi_i`.
    ///
    /// Both bound vectors have length `n + 1`. Returns `None` when no path of
    /// `n` steps with `r` north steps fits between them.
    pub fn from_bounds(lo: &[usize], hi: &[usize], r: usize) -> Option<Region> {
        let n = lo.len().checked_sub(1)?;
        debug_assert_eq!(hi.len(), n + 1);
        let mut low = lo.to_vec();
        let mut high = hi.to_vec();
        high[0] = 0;
        low[n] = low[n].max(r);
        high[n] = high[n].min(r);
        for i in 1..=n {
            low[i] = low[i].max(low[i - 1]);
            high[i] = high[i].min(high[i - 1] + 1);
        }
        for i in (0..n).rev() {
            low[i] = low[i].max(low[i + 1].saturating_sub(1));
            high[i] = high[i].min(high[i + 1]);
        }
        if (0..=n).any(|i| low[i] > high[i]) || low[0] != 0 || high[n] != r {
            return None;
        }
        make_region(PathWord::from_profile(&low), PathWord::from_profile(&high)).ok()
    }

    pub fn lower(&self) -> &PathWord {
        &self.lower
    }

    pub fn upper(&self) -> &PathWord {
        &self.upper
    }

    /// `p_0, ..., p_{m+r}`.
    pub fn lower_profile(&self) -> &[usize] {
        &self.lower_profile
    }

    /// `q_0, ..., q_{m+r}`.
    pub fn upper_profile(&self) -> &[usize] {
        &self.upper_profile
    }

    pub fn m(&self) -> usize {
        self.lower.m
    }

    pub fn r(&self) -> usize {
        self.lower.r
    }

    /// Size of the ground set, `m + r`.
    pub fn len(&self) -> usize {
        self.lower.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lower.is_empty()
    }

    pub fn contains_profile(&self, profile: &[usize]) -> bool {
        profile.len() == self.lower_profile.len()
            && profile
                .iter()
                .zip(self.lower_profile.iter().zip(&self.upper_profile))
                .all(|(h, (p, q))| p <= h && h <= q)
    }

    pub fn contains_path(&self, path: &PathWord) -> bool {
        path.m == self.m() && path.r == self.r() && self.contains_profile(&path.profile())
    }

    /// True for every path weakly between the bounds of `self` that `other`
    /// also contains.
    pub fn is_subregion_of(&self, other: &Region) -> bool {
        self.len() == other.len()
            && self.r() == other.r()
            && (0..=self.len()).all(|i| {
                other.lower_profile[i] <= self.lower_profile[i]
                    && self.upper_profile[i] <= other.upper_profile[i]
            })
    }

    /// All paths in the region in lexicographic order (`E < N`).
    pub fn enumerate_paths(&self) -> Vec<PathWord> {
        let mut out = Vec::new();
        let mut steps = Vec::with_capacity(self.len());
        self.extend_paths(0, &mut steps, &mut out);
        out
    }

    fn extend_paths(&self, height: usize, steps: &mut Vec<Step>, out: &mut Vec<PathWord>) {
        let i = steps.len();
        if i == self.len() {
            out.push(PathWord::from_steps(steps.clone()));
            return;
        }
        for (step, next) in [(Step::E, height), (Step::N, height + 1)] {
            if self.lower_profile[i + 1] <= next && next <= self.upper_profile[i + 1] {
                steps.push(step);
                self.extend_paths(next, steps, out);
                steps.pop();
            }
        }
    }

    /// Number of paths in the region, by dynamic programming over heights.
    pub fn count_paths(&self) -> u128 {
        let mut ways = vec![0u128; self.r() + 1];
        ways[0] = 1;
        for i in 1..=self.len() {
            let mut next = vec![0u128; self.r() + 1];
            for h in self.lower_profile[i]..=self.upper_profile[i] {
                next[h] = ways[h] + if h > 0 { ways[h - 1] } else { 0 };
            }
            ways = next;
        }
        ways[self.r()]
    }

    /// Indices `i` in `0..=m+r` where the two paths share the vertex
    /// `(i - p_i, p_i)`.
    pub fn touch_indices(&self) -> Vec<usize> {
        (0..=self.len())
            .filter(|&i| self.lower_profile[i] == self.upper_profile[i])
            .collect()
    }

    /// Common lattice points of the two paths, including both endpoints.
    pub fn intersection_vertices(&self) -> Vec<(usize, usize)> {
        self.touch_indices()
            .into_iter()
            .map(|i| (i - self.lower_profile[i], self.lower_profile[i]))
            .collect()
    }

    pub fn contains_box(&self, b: GridBox) -> bool {
        if b.col == 0 || b.row == 0 || b.col > self.m() || b.row > self.r() {
            return false;
        }
        let lower_height = self.lower.east_heights()[b.col - 1];
        let upper_height = self.upper.east_heights()[b.col - 1];
        lower_height < b.row && b.row <= upper_height
    }

    /// All boxes weakly between the paths, ordered by `(col, row)`.
    pub fn region_boxes(&self) -> BTreeSet<GridBox> {
        let lower = self.lower.east_heights();
        let upper = self.upper.east_heights();
        let mut out = BTreeSet::new();
        for col in 1..=self.m() {
            for row in (lower[col - 1] + 1)..=upper[col - 1] {
                out.insert(GridBox { col, row });
            }
        }
        out
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lower, self.upper)
    }
}

/// Every path with `m` east and `r` north steps, lexicographically.
pub fn all_paths(m: usize, r: usize) -> Vec<PathWord> {
    Region::rectangle(m, r).enumerate_paths()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn region(p: &str, q: &str) -> Region {
        Region::parse(p, q).unwrap()
    }

    fn words(paths: &[PathWord]) -> Vec<String> {
        paths.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn parse_reads_counts_and_profile() {
        let p = parse_path("EENN").unwrap();
        assert_eq!((p.m(), p.r()), (2, 2));
        assert_eq!(p.profile(), vec![0, 0, 0, 1, 2]);
        let n = parse_path("N").unwrap();
        assert_eq!((n.m(), n.r()), (0, 1));
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert_eq!(
            parse_path("EXN"),
            Err(LpmError::InvalidCharacter {
                position: 2,
                found: 'X'
            })
        );
        assert_eq!(parse_path(""), Err(LpmError::EmptyWord));
        assert!(matches!(parse_path("en"), Err(LpmError::InvalidCharacter { position: 1, .. })));
    }

    #[test]
    fn make_region_checks_dominance_and_endpoints() {
        assert!(Region::parse("EENN", "NNEE").is_ok());
        assert!(Region::parse("EENN", "NENE").is_ok());
        assert_eq!(
            Region::parse("NENE", "EENN"),
            Err(LpmError::DominanceViolation { index: 1 })
        );
        assert!(matches!(
            Region::parse("EN", "NNE"),
            Err(LpmError::EndpointMismatch { .. })
        ));
    }

    #[test]
    fn enumerate_paths_in_lexicographic_order() {
        assert_eq!(region("EENN", "NNEE").enumerate_paths().len(), 6);
        assert_eq!(
            words(&region("EENN", "NENE").enumerate_paths()),
            ["EENN", "ENEN", "ENNE", "NEEN", "NENE"]
        );
        assert_eq!(words(&region("EN", "EN").enumerate_paths()), ["EN"]);
    }

    #[test]
    fn count_paths_matches_enumeration() {
        for (p, q) in [("EENN", "NNEE"), ("EENN", "NENE"), ("EEENNN", "NENENE"), ("EN", "EN")] {
            let reg = region(p, q);
            assert_eq!(reg.count_paths() as usize, reg.enumerate_paths().len());
        }
    }

    #[test]
    fn intersection_vertices_include_endpoints() {
        assert_eq!(region("EENN", "NNEE").intersection_vertices(), vec![(0, 0), (2, 2)]);
        assert_eq!(region("EENN", "NENE").intersection_vertices(), vec![(0, 0), (2, 2)]);
        assert_eq!(region("ENEN", "ENEN").intersection_vertices().len(), 5);
    }

    #[test]
    fn area_below_counts_unit_squares() {
        assert_eq!(parse_path("EENN").unwrap().area_below(), 0);
        assert_eq!(parse_path("ENEN").unwrap().area_below(), 1);
        // Column 1 holds one square under the path, column 2 holds two.
        assert_eq!(parse_path("NENE").unwrap().area_below(), 3);
    }

    #[test]
    fn region_boxes_examples() {
        assert_eq!(region("EENN", "NNEE").region_boxes().len(), 4);
        let l: Vec<_> = region("EENN", "NENE").region_boxes().into_iter().collect();
        assert_eq!(
            l,
            vec![
                GridBox { col: 1, row: 1 },
                GridBox { col: 2, row: 1 },
                GridBox { col: 2, row: 2 }
            ]
        );
        assert!(region("EN", "EN").region_boxes().is_empty());
    }

    #[test]
    fn from_bounds_tightens_to_paths() {
        // Force the path through height 1 after two steps inside the 2x2 square.
        let reg = region("EENN", "NNEE");
        let mut lo = reg.lower_profile().to_vec();
        let mut hi = reg.upper_profile().to_vec();
        lo[2] = 1;
        hi[2] = 1;
        let pinched = Region::from_bounds(&lo, &hi, 2).unwrap();
        assert_eq!(pinched.lower().to_string(), "ENEN");
        assert_eq!(pinched.upper().to_string(), "NENE");
        lo[2] = 2;
        hi[2] = 0;
        assert!(Region::from_bounds(&lo, &hi, 2).is_none());
    }
}
