//! Hyperplane splits and the recursive decomposition of a connected region
//! into border strips.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::lattice_path::{GridBox, PathWord, Region, Step};
use crate::matroid::{self, BasisVector};
use crate::{LpmError, Result};

/// A bipartition `E1 | E2` of the ground set with thresholds `a1, a2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodPartition {
    pub e1: Vec<usize>,
    pub e2: Vec<usize>,
    pub r1: usize,
    pub r2: usize,
    pub a1: usize,
    pub a2: usize,
}

/// The two pieces of a hyperplane split at `x_1 + ... + x_x = j`.
///
/// `left` holds the bases with at most `j` elements in `1..=x`, `right` those
/// with at least `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitResult {
    pub x: usize,
    pub j: usize,
    pub left: Region,
    pub right: Region,
}

impl SplitResult {
    /// The good partition `{1..x} | {x+1..m+r}` inducing this split.
    pub fn good_partition(&self, parent: &Region) -> GoodPartition {
        let (p, q) = (parent.lower_profile(), parent.upper_profile());
        let n = parent.len();
        GoodPartition {
            e1: (1..=self.x).collect(),
            e2: (self.x + 1..=n).collect(),
            r1: q[self.x],
            r2: parent.r() - p[self.x],
            a1: q[self.x] - self.j,
            a2: self.j - p[self.x],
        }
    }
}

/// The smallest `(j, x)` with `s_j < x < t_j` and `s_{j+1} < x + 1 < t_{j+1}`,
/// where `[s_j, t_j]` are the presentation intervals. Returned as `(x, j)`.
pub fn find_split(region: &Region) -> Option<(usize, usize)> {
    let pres = matroid::presentation(region);
    let iv = pres.intervals();
    (1..iv.len()).find_map(|j| {
        let (a, b) = (iv[j - 1], iv[j]);
        (a.lo + 1..a.hi)
            .find(|&x| b.lo < x + 1 && x + 1 < b.hi)
            .map(|x| (x, j))
    })
}

fn split_is_valid(region: &Region, x: usize, j: usize) -> bool {
    let pres = matroid::presentation(region);
    let iv = pres.intervals();
    j >= 1
        && j < iv.len()
        && iv[j - 1].lo < x
        && x < iv[j - 1].hi
        && iv[j].lo < x + 1
        && x + 1 < iv[j].hi
}

/// The smallest region containing every path of `bases`, if `bases` is nonempty.
fn envelope(n: usize, bases: &[BasisVector]) -> Option<Region> {
    let profiles: Vec<Vec<usize>> = bases.iter().map(|b| b.to_path().profile()).collect();
    let first = profiles.first()?;
    let lo: Vec<usize> = (0..=n).map(|i| profiles.iter().map(|p| p[i]).min().unwrap_or(first[i])).collect();
    let hi: Vec<usize> = (0..=n).map(|i| profiles.iter().map(|p| p[i]).max().unwrap_or(first[i])).collect();
    Region::new(PathWord::from_profile(&lo), PathWord::from_profile(&hi)).ok()
}

/// Splits along `x_1 + ... + x_x = j`.
///
/// The children are obtained by filtering the parent's bases on the
/// threshold and then recognised as regions; the two constructions must
/// agree exactly.
pub fn hyperplane_split(region: &Region, x: usize, j: usize) -> Result<SplitResult> {
    let invalid = LpmError::InvalidSplit { x, j };
    if !split_is_valid(region, x, j) {
        return Err(invalid);
    }
    let n = region.len();
    let all = matroid::bases(region);
    let prefix = |b: &BasisVector| b.coords()[..x].iter().filter(|&&c| c == 1).count();
    let low: Vec<BasisVector> = all.iter().filter(|b| prefix(b) <= j).cloned().collect();
    let high: Vec<BasisVector> = all.iter().filter(|b| prefix(b) >= j).cloned().collect();
    let recognise = |set: &[BasisVector]| -> Option<Region> {
        let reg = envelope(n, set)?;
        (matroid::bases(&reg) == set).then_some(reg)
    };
    let left = recognise(&low).ok_or_else(|| invalid.clone())?;
    let right = recognise(&high).ok_or(invalid)?;
    Ok(SplitResult { x, j, left, right })
}

/// Outcome of each condition on a good partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GoodPartitionCheck {
    /// `E1` and `E2` partition the ground set.
    pub complementary: bool,
    /// `r_i` is the rank of `E_i`.
    pub ranks: bool,
    /// (P1) `r1 + r2 = r + a1 + a2`.
    pub p1: bool,
    /// `0 < a_i < r_i`.
    pub bounds: bool,
    /// (P2): independent `X ⊆ E1`, `|X| <= r1 - a1` and independent
    /// `Y ⊆ E2`, `|Y| <= r2 - a2` always give an independent `X ∪ Y`.
    pub p2: bool,
}

impl GoodPartitionCheck {
    pub fn all(&self) -> bool {
        self.complementary && self.ranks && self.p1 && self.bounds && self.p2
    }
}

/// Evaluates every condition of a good partition, (P2) exhaustively.
pub fn check_good_partition(region: &Region, gp: &GoodPartition) -> Result<GoodPartitionCheck> {
    const CAP: usize = 12;
    let n = region.len();
    if n > CAP {
        return Err(LpmError::TooLarge { size: n, cap: CAP });
    }
    let mut all: Vec<usize> = gp.e1.iter().chain(&gp.e2).copied().collect();
    all.sort_unstable();
    let complementary = all == (1..=n).collect::<Vec<_>>();
    let p1 = gp.r1 + gp.r2 == region.r() + gp.a1 + gp.a2;
    let bounds = 0 < gp.a1 && gp.a1 < gp.r1 && 0 < gp.a2 && gp.a2 < gp.r2;
    let pres = matroid::presentation(region);
    let ranks = pres.rank(&gp.e1) == gp.r1 && pres.rank(&gp.e2) == gp.r2;
    let small_independent = |part: &[usize], cap: usize| -> Vec<Vec<usize>> {
        (0u32..1 << part.len())
            .filter(|mask| mask.count_ones() as usize <= cap)
            .map(|mask| {
                part.iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect::<Vec<_>>()
            })
            .filter(|s| pres.is_independent(s))
            .collect()
    };
    let p2 = complementary && {
        let xs = small_independent(&gp.e1, gp.r1.saturating_sub(gp.a1));
        let ys = small_independent(&gp.e2, gp.r2.saturating_sub(gp.a2));
        xs.iter().all(|x| {
            ys.iter().all(|y| {
                let union: Vec<usize> = x.iter().chain(y).copied().collect();
                pres.is_independent(&union)
            })
        })
    };
    Ok(GoodPartitionCheck {
        complementary,
        ranks,
        p1,
        bounds,
        p2,
    })
}

/// True iff every condition of [`check_good_partition`] holds.
pub fn verify_good_partition(region: &Region, gp: &GoodPartition) -> Result<bool> {
    Ok(check_good_partition(region, gp)?.all())
}

/// True iff no four boxes of the region form a 2x2 square.
pub fn is_border_strip(region: &Region) -> bool {
    let boxes = region.region_boxes();
    !boxes.iter().any(|b| {
        [(1, 0), (0, 1), (1, 1)].iter().all(|&(dc, dr)| {
            boxes.contains(&GridBox {
                col: b.col + dc,
                row: b.row + dr,
            })
        })
    })
}

/// A monotone chain of boxes, each one step east (`R`) or north (`U`) of the
/// previous. Position `i` is a descent when box `i + 1` lies north of box `i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BorderStrip {
    boxes: Vec<GridBox>,
}

impl BorderStrip {
    /// The strip starting at box `(1,1)` following a word over `{R, U}`.
    pub fn from_moves(moves: &str) -> Result<Self> {
        let mut cur = GridBox { col: 1, row: 1 };
        let mut boxes = vec![cur];
        for (i, c) in moves.chars().enumerate() {
            match c {
                'R' => cur.col += 1,
                'U' => cur.row += 1,
                other => {
                    return Err(LpmError::InvalidCharacter {
                        position: i + 1,
                        found: other,
                    })
                }
            }
            boxes.push(cur);
        }
        Ok(BorderStrip { boxes })
    }

    /// The strip filling a region that contains no 2x2 square.
    pub fn from_region(region: &Region) -> Result<Self> {
        if !matroid::is_connected(region) || !is_border_strip(region) {
            return Err(LpmError::NotABorderStrip);
        }
        let mut strips = border_strips(region)?;
        match strips.len() {
            1 => strips.pop().ok_or(LpmError::NotABorderStrip),
            _ => Err(LpmError::NotABorderStrip),
        }
    }

    pub fn boxes(&self) -> &[GridBox] {
        &self.boxes
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    /// Direction word of length `len - 1` over `{R, U}`.
    pub fn moves(&self) -> String {
        self.boxes
            .windows(2)
            .map(|w| if w[1].row > w[0].row { 'U' } else { 'R' })
            .collect()
    }

    /// Positions `i` in `1..len` where box `i + 1` is north of box `i`.
    pub fn descents(&self) -> BTreeSet<usize> {
        self.boxes
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[1].row > w[0].row)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// The region `(E w N, N w E)` whose boxes are exactly this strip, where
    /// `w` is the direction word with `R -> E`, `U -> N`.
    pub fn region(&self) -> Region {
        let inner: Vec<Step> = self
            .moves()
            .chars()
            .map(|c| if c == 'R' { Step::E } else { Step::N })
            .collect();
        let mut lower = vec![Step::E];
        lower.extend(&inner);
        lower.push(Step::N);
        let mut upper = vec![Step::N];
        upper.extend(&inner);
        upper.push(Step::E);
        Region::new(PathWord::from_steps(lower), PathWord::from_steps(upper))
            .expect("strip paths are dominance ordered")
    }
}

impl fmt::Display for BorderStrip {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "strip[{}]", self.moves())
    }
}

/// All monotone box paths from box `(1,1)` to box `(m,r)` inside the region,
/// in lexicographic order of their direction words (`R < U`). A one-element
/// region has no boxes and no strips.
pub fn border_strips(region: &Region) -> Result<Vec<BorderStrip>> {
    let comps = matroid::components(region);
    if !comps.is_connected() {
        return Err(LpmError::DisconnectedRegion {
            components: comps.count(),
        });
    }
    let boxes = region.region_boxes();
    let target = GridBox {
        col: region.m(),
        row: region.r(),
    };
    let start = GridBox { col: 1, row: 1 };
    let mut out = Vec::new();
    if !boxes.contains(&start) {
        return Ok(out);
    }
    let mut stack = vec![start];
    walk(&boxes, target, &mut stack, &mut out);
    Ok(out)
}

fn walk(boxes: &BTreeSet<GridBox>, target: GridBox, path: &mut Vec<GridBox>, out: &mut Vec<BorderStrip>) {
    let cur = *path.last().expect("path is nonempty");
    if cur == target {
        out.push(BorderStrip { boxes: path.clone() });
        return;
    }
    for next in [
        GridBox {
            col: cur.col + 1,
            row: cur.row,
        },
        GridBox {
            col: cur.col,
            row: cur.row + 1,
        },
    ] {
        if boxes.contains(&next) {
            path.push(next);
            walk(boxes, target, path, out);
            path.pop();
        }
    }
}

/// Result of splitting recursively until every piece is a border strip.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecompositionTree {
    Leaf(BorderStrip),
    Split {
        x: usize,
        j: usize,
        left: Box<DecompositionTree>,
        right: Box<DecompositionTree>,
    },
}

impl DecompositionTree {
    /// Leaves from left to right.
    pub fn leaves(&self) -> Vec<&BorderStrip> {
        match self {
            DecompositionTree::Leaf(s) => vec![s],
            DecompositionTree::Split { left, right, .. } => {
                let mut v = left.leaves();
                v.extend(right.leaves());
                v
            }
        }
    }
}

/// Splits at [`find_split`] until no split remains.
pub fn decompose(region: &Region) -> Result<DecompositionTree> {
    match find_split(region) {
        None => BorderStrip::from_region(region).map(DecompositionTree::Leaf),
        Some((x, j)) => {
            let split = hyperplane_split(region, x, j)?;
            Ok(DecompositionTree::Split {
                x,
                j,
                left: Box::new(decompose(&split.left)?),
                right: Box::new(decompose(&split.right)?),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn region(p: &str, q: &str) -> Region {
        Region::parse(p, q).unwrap()
    }

    #[test]
    fn find_split_examples() {
        assert_eq!(find_split(&region("EENN", "NNEE")), Some((2, 1)));
        assert_eq!(find_split(&region("EENN", "NENE")), None);
        assert_eq!(find_split(&region("EN", "NE")), None);
    }

    #[test]
    fn square_split() {
        let sq = region("EENN", "NNEE");
        let s = hyperplane_split(&sq, 2, 1).unwrap();
        assert_eq!(matroid::bases(&s.left).len(), 5);
        assert_eq!(matroid::bases(&s.right).len(), 5);
        assert_eq!(s.left.to_string(), "(EENN, NENE)");
        assert_eq!(s.right.to_string(), "(ENEN, NNEE)");
        let gp = s.good_partition(&sq);
        assert_eq!((gp.r1, gp.r2, gp.a1, gp.a2), (2, 2, 1, 1));
        assert!(verify_good_partition(&sq, &gp).unwrap());
        assert_eq!(hyperplane_split(&sq, 1, 1), Err(LpmError::InvalidSplit { x: 1, j: 1 }));
    }

    #[test]
    fn bad_partitions() {
        let sq = region("EENN", "NNEE");
        let bad = GoodPartition {
            e1: vec![1],
            e2: vec![2, 3, 4],
            r1: 1,
            r2: 2,
            a1: 1,
            a2: 0,
        };
        assert!(!verify_good_partition(&sq, &bad).unwrap());
        let unbalanced = GoodPartition {
            e1: vec![1, 2],
            e2: vec![3, 4],
            r1: 2,
            r2: 2,
            a1: 1,
            a2: 2,
        };
        assert!(!verify_good_partition(&sq, &unbalanced).unwrap());
    }

    #[test]
    fn split_without_p2() {
        // X = {1}, Y = {3, 4} are independent but {1, 3, 4} is not.
        let reg = region("EENENN", "NNEENE");
        assert_eq!(find_split(&reg), Some((2, 1)));
        let s = hyperplane_split(&reg, 2, 1).unwrap();
        let check = check_good_partition(&reg, &s.good_partition(&reg)).unwrap();
        assert!(check.complementary && check.ranks && check.p1 && check.bounds);
        assert!(!check.p2);
        assert!(!matroid::presentation(&reg).is_independent(&[1, 3, 4]));
    }

    #[test]
    fn border_strip_examples() {
        assert!(is_border_strip(&region("EENN", "NENE")));
        assert!(!is_border_strip(&region("EENN", "NNEE")));
        assert!(is_border_strip(&region("EN", "NE")));

        let strips = border_strips(&region("EENN", "NNEE")).unwrap();
        let words: Vec<String> = strips.iter().map(BorderStrip::moves).collect();
        assert_eq!(words, ["RU", "UR"]);
        assert_eq!(strips[0].descents(), BTreeSet::from([2]));
        assert_eq!(strips[1].descents(), BTreeSet::from([1]));

        let l = border_strips(&region("EENN", "NENE")).unwrap();
        assert_eq!(l.len(), 1);
        assert_eq!(l[0].descents(), BTreeSet::from([2]));
        assert_eq!(border_strips(&Region::rectangle(3, 2)).unwrap().len(), 3);
    }

    #[test]
    fn strip_region_round_trip() {
        let s = BorderStrip::from_moves("RUR").unwrap();
        let reg = s.region();
        assert_eq!(reg.to_string(), "(EENEN, NENEE)");
        assert_eq!(BorderStrip::from_region(&reg).unwrap(), s);
    }

    #[test]
    fn square_tree() {
        let tree = decompose(&region("EENN", "NNEE")).unwrap();
        let leaves: Vec<String> = tree.leaves().iter().map(|s| s.moves()).collect();
        assert_eq!(leaves, ["RU", "UR"]);
    }
}
