//! Exhaustive agreement checks between the structural algorithms and the
//! brute-force oracles. Each check covers every region of a sweep and keeps
//! the first counterexample.

use std::collections::BTreeSet;

use itertools::Itertools;
use lpm_core::decompose::{self, BorderStrip, DecompositionTree};
use lpm_core::{ehrhart, matroid, oracle, polytope, triangulate, volume};
use lpm_core::{PathWord, Region};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub passed: bool,
    pub cases: usize,
    pub detail: String,
}

impl Check {
    fn run<T>(id: &str, items: impl IntoIterator<Item = T>, mut f: impl FnMut(&T) -> Result<(), String>) -> Check {
        let mut cases = 0;
        let mut failure = None;
        for item in items {
            cases += 1;
            if let Err(e) = f(&item) {
                failure.get_or_insert(e);
            }
        }
        Check {
            id: id.to_string(),
            passed: failure.is_none(),
            cases,
            detail: failure.unwrap_or_else(|| "ok".to_string()),
        }
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

pub fn connected(max_n: usize) -> Vec<Region> {
    oracle::sweep(max_n).into_iter().filter(matroid::is_connected).collect()
}

fn coords(region: &Region) -> Vec<Vec<u8>> {
    matroid::bases(region).iter().map(|b| b.coords().to_vec()).collect()
}

/// Border strips with `1..=max_len` boxes, by move word.
pub fn all_strips(max_len: usize) -> Vec<BorderStrip> {
    let mut out = Vec::new();
    for len in 1..=max_len {
        for mask in 0u32..1 << (len - 1) {
            let moves: String = (0..len - 1).map(|i| if mask >> i & 1 == 1 { 'U' } else { 'R' }).collect();
            out.push(BorderStrip::from_moves(&moves).expect("valid move word"));
        }
    }
    out
}

pub fn bases(max_n: usize) -> Check {
    Check::run("bases", oracle::sweep(max_n), |reg| {
        let main = coords(reg);
        let brute = oracle::brute_bases(reg).map_err(err)?;
        ensure(main == brute, || format!("{reg}: bases differ from subset filter"))?;
        ensure(reg.count_paths() as usize == main.len(), || format!("{reg}: path count"))
    })
}

pub fn rectangle_bases(max_n: usize) -> Check {
    let cells = (1..=max_n).flat_map(|n| (0..=n).map(move |r| (n - r, r)));
    Check::run("rectangle-bases", cells, |&(m, r)| {
        let count = matroid::bases(&Region::rectangle(m, r)).len();
        ensure(BigInt::from(count) == volume::binomial(m + r, r), || format!("rectangle ({m},{r}): {count}"))
    })
}

pub fn dimension(max_n: usize) -> Check {
    Check::run("dimension", oracle::sweep(max_n), |reg| {
        let d = polytope::dimension(reg) as isize;
        let brute = oracle::brute_dimension(reg).map_err(err)?;
        ensure(d == brute, || format!("{reg}: dimension {d}, affine rank {brute}"))
    })
}

/// The Catalan matroid `M_n` has dimension `2n - 3` for `n = 2..=n_max`.
pub fn catalan_dimension(n_max: usize) -> Check {
    Check::run("catalan-dimension", 2..=n_max, |&n| {
        let d = polytope::dimension(&polytope::catalan_core_region(n - 1));
        ensure(d == 2 * n - 3, || format!("n = {n}: dimension {d}"))
    })
}

pub fn components(max_n: usize) -> Check {
    Check::run("components", oracle::sweep(max_n.min(8)), |reg| {
        let main = matroid::components(reg).classes();
        let brute = oracle::brute_components(reg).map_err(err)?;
        ensure(main == brute, || format!("{reg}: components {main:?} vs circuits {brute:?}"))
    })
}

pub fn edges(max_n: usize) -> Check {
    Check::run("edges", connected(max_n.min(6)), |reg| {
        let brute = oracle::brute_edges(reg).map_err(err)?;
        ensure(polytope::edges(reg) == brute, || format!("{reg}: edge sets differ"))
    })
}

/// Regions `(E^m N^r, Q)` with `m + r <= max_n`.
pub fn generalized_catalan(max_n: usize) -> Vec<Region> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for r in 0..=n {
            let lower = PathWord::lowest(n - r, r);
            for upper in lpm_core::lattice_path::all_paths(n - r, r) {
                out.push(Region::new(lower.clone(), upper).expect("lowest path is below every path"));
            }
        }
    }
    out
}

pub fn catalan_edges(max_n: usize) -> Check {
    Check::run("catalan-edges-by-area", generalized_catalan(max_n), |reg| {
        let by_area = polytope::edge_count_by_area(reg).map_err(err)?;
        let count = polytope::edges(reg).len() as u64;
        ensure(count == by_area, || format!("{reg}: {count} edges, area sum {by_area}"))
    })
}

pub fn catalan_edge_formula(n_max: usize) -> Check {
    let mut check = Check::run("catalan-edge-formula", 1..=n_max, |&n| {
        let count = BigInt::from(polytope::edges(&polytope::dyck_region(n)).len());
        let formula = polytope::catalan_edge_formula(n);
        ensure(count == formula, || format!("n = {n}: {count} edges, formula {formula}"))
    });
    let spot: Vec<BigInt> = (1..=3).map(polytope::catalan_edge_formula).collect();
    if spot != [0, 1, 8].map(BigInt::from) {
        check.passed = false;
        check.detail = format!("a(1..=3) = {spot:?}");
    }
    check
}

pub fn facets(max_n: usize) -> Check {
    Check::run("facets", oracle::sweep(max_n), |reg| {
        let brute: BTreeSet<Vec<usize>> = oracle::brute_facets_up_to(reg, max_n)
            .map_err(err)?
            .into_iter()
            .map(|f| f.tight)
            .collect();
        ensure(polytope::facets_by_blocks(reg).tight_sets() == brute, || format!("{reg}: block facets differ"))?;
        if matroid::is_connected(reg) {
            let list = polytope::facets(reg).map_err(err)?;
            ensure(list.tight_sets() == brute && list.len() == brute.len(), || format!("{reg}: facets differ"))?;
        }
        Ok(())
    })
}

/// `P(M_{n+1})` has `5n - 5` facets, by the facet algorithm and by the oracle.
pub fn catalan_facets(ns: impl IntoIterator<Item = usize>) -> Check {
    Check::run("catalan-facets", ns, |&n| {
        let reg = polytope::catalan_core_region(n);
        let main = polytope::facets(&reg).map_err(err)?.len();
        let brute = oracle::brute_facets_up_to(&reg, reg.len()).map_err(err)?.len();
        let claim = polytope::catalan_facet_count(n);
        ensure(main == claim && brute == claim, || format!("n = {n}: {main} facets, oracle {brute}, claim {claim}"))
    })
}

pub fn faces(max_n: usize) -> Check {
    Check::run("faces", connected(max_n), |reg| {
        let verts = coords(reg);
        for facet in polytope::facets(reg).map_err(err)?.facets {
            let face = polytope::face_region(reg, &facet).map_err(err)?;
            let expected: Vec<Vec<u8>> = facet.tight_vertices.iter().map(|&k| verts[k].clone()).collect();
            ensure(face.vertex_images() == expected, || format!("{reg}: face of {}", facet.inequality))?;
        }
        Ok(())
    })
}

fn check_splits(region: &Region, tree: &DecompositionTree, p2_failures: &mut Vec<String>) -> Result<(), String> {
    let DecompositionTree::Split { x, j, left, right } = tree else {
        return Ok(());
    };
    let split = decompose::hyperplane_split(region, *x, *j).map_err(err)?;
    let check = decompose::check_good_partition(region, &split.good_partition(region)).map_err(err)?;
    ensure(check.complementary && check.ranks && check.p1 && check.bounds, || {
        format!("{region}: split ({x}, {j}) is not a good partition: {check:?}")
    })?;
    if !check.p2 {
        p2_failures.push(format!("{region} at (x, j) = ({x}, {j})"));
    }
    let parent: BTreeSet<_> = matroid::bases(region).into_iter().collect();
    let l: BTreeSet<_> = matroid::bases(&split.left).into_iter().collect();
    let r: BTreeSet<_> = matroid::bases(&split.right).into_iter().collect();
    ensure(&l | &r == parent, || format!("{region}: split ({x}, {j}) loses bases"))?;
    let d = polytope::dimension(region);
    ensure(
        polytope::dimension(&split.left) == d && polytope::dimension(&split.right) == d,
        || format!("{region}: split ({x}, {j}) drops dimension"),
    )?;
    check_splits(&split.left, left, p2_failures)?;
    check_splits(&split.right, right, p2_failures)
}

/// Outcome of decomposing every connected region with at least one box.
pub struct DecompositionSweep {
    pub check: Check,
    /// Splits counted, and those where the second good-partition property fails.
    pub splits: usize,
    pub p2_failures: Vec<String>,
}

fn count_splits(tree: &DecompositionTree) -> usize {
    match tree {
        DecompositionTree::Leaf(_) => 0,
        DecompositionTree::Split { left, right, .. } => 1 + count_splits(left) + count_splits(right),
    }
}

pub fn decomposition(max_n: usize) -> DecompositionSweep {
    let mut p2_failures = Vec::new();
    let mut splits = 0;
    let regions = connected(max_n).into_iter().filter(|r| r.len() > 1);
    let check = Check::run("decomposition", regions, |reg| {
        let tree = decompose::decompose(reg).map_err(err)?;
        splits += count_splits(&tree);
        check_splits(reg, &tree, &mut p2_failures)?;
        let mut leaves: Vec<BorderStrip> = tree.leaves().into_iter().cloned().collect();
        leaves.sort();
        let mut strips = decompose::border_strips(reg).map_err(err)?;
        strips.sort();
        ensure(leaves == strips, || format!("{reg}: leaves differ from border strips"))?;
        let total: BigInt = leaves.iter().map(volume::strip_volume).sum();
        ensure(total == volume::volume(reg).map_err(err)?, || format!("{reg}: leaf volumes"))
    });
    DecompositionSweep {
        check,
        splits,
        p2_failures,
    }
}

pub fn volume_is_leading_coefficient(max_n: usize) -> Check {
    Check::run("volume-leading-coefficient", connected(max_n), |reg| {
        let poly = ehrhart::ehrhart_polynomial(reg).map_err(err)?;
        let vol = volume::volume(reg).map_err(err)?;
        ensure(poly.normalized_volume() == vol, || format!("{reg}: volume {vol}, d! lead {}", poly.normalized_volume()))
    })
}

pub fn rectangle_eulerian(n_max: usize) -> Check {
    let cells = (2..=n_max).flat_map(|n| (1..n).map(move |k| (k, n)));
    Check::run("rectangle-eulerian", cells, |&(k, n)| {
        let vol = volume::volume(&Region::rectangle(n - k, k)).map_err(err)?;
        ensure(vol == volume::eulerian(k, n - 1), || format!("({k},{n}): volume {vol}"))
    })
}

pub fn strip_fillings(max_len: usize) -> Check {
    Check::run("strip-fillings", all_strips(max_len), |strip| {
        let syt = BigInt::from(oracle::brute_syt(strip).map_err(err)?);
        ensure(volume::strip_volume(strip) == syt, || format!("{strip}: {} vs {syt}", volume::strip_volume(strip)))?;
        ensure(volume::volume(&strip.region()).map_err(err)? == syt, || format!("{strip}: region volume"))
    })
}

pub fn volume_spots() -> Check {
    let spots = [("EENN", "NNEE", 4), ("EENN", "NENE", 2)];
    Check::run("volume-spots", spots, |&(p, q, want)| {
        let vol = volume::volume(&Region::parse(p, q).map_err(err)?).map_err(err)?;
        ensure(vol == BigInt::from(want), || format!("({p}, {q}): {vol}"))
    })
}

pub fn hypersimplex(n_max: usize) -> Check {
    Check::run("hypersimplex-cells", 2..=n_max, |&n| {
        let mut total = BigInt::from(0);
        for k in 1..n {
            let cells = triangulate::hypersimplex_triangulation(k, n).map_err(err)?;
            let count = triangulate::triangulation_volume_check(&cells).map_err(err)?;
            ensure(BigInt::from(count) == volume::eulerian(k, n - 1), || format!("({k},{n}): {count} cells"))?;
            total += count;
        }
        ensure(total == volume::factorial(n - 1), || format!("n = {n}: {total} cells in all"))
    })
}

/// `x -> ψ(x) -> ψ^{-1}` on the chamber of `ψ(x)` returns `x`, for every
/// point of `[0,1)^n` with coordinates in `(1/den) Z`, `n <= n_max`.
pub fn psi_round_trip(n_max: usize, den: i64) -> Check {
    let points = (1..=n_max).flat_map(|n| (0..n).map(|_| 0..den).multi_cartesian_product());
    Check::run("psi-round-trip", points, |num| {
        let x: Vec<BigRational> = num.iter().map(|&a| BigRational::new(a.into(), den.into())).collect();
        let y = triangulate::psi(&x);
        // ties sit on several chambers; every one of them must invert
        let chambers: Vec<Vec<usize>> = match triangulate::chamber_of(&y) {
            Some(w) => vec![w],
            None => (1..=y.len()).permutations(y.len()).filter(|w| triangulate::in_chamber(w, &y)).collect(),
        };
        let hits = chambers
            .iter()
            .filter(|w| triangulate::psi_inverse_on(w, &y).ok().as_ref() == Some(&x))
            .count();
        ensure(hits >= 1, || format!("x = {num:?}/{den}: no chamber inverts"))
    })
}

pub fn strip_cells(max_len: usize) -> Check {
    Check::run("strip-cells", all_strips(max_len), |strip| {
        let cells = triangulate::strip_triangulation(strip);
        let count = triangulate::triangulation_volume_check(&cells).map_err(err)?;
        ensure(BigInt::from(count) == volume::strip_volume(strip), || format!("{strip}: {count} cells"))
    })
}

pub fn ehrhart_interpolation(max_n: usize) -> Check {
    Check::run("ehrhart-interpolation", oracle::sweep(max_n), |reg| {
        let poly = ehrhart::ehrhart_polynomial(reg).map_err(|e| format!("{reg}: {e}"))?;
        ensure(poly.degree() == polytope::dimension(reg), || format!("{reg}: degree {}", poly.degree()))?;
        let e0 = ehrhart::count_lattice_points(reg, 0);
        let e1 = ehrhart::count_lattice_points(reg, 1);
        ensure(e0 == BigInt::from(1), || format!("{reg}: E(0) = {e0}"))?;
        ensure(e1 == BigInt::from(matroid::bases(reg).len()), || format!("{reg}: E(1) = {e1}"))?;
        ensure(poly.evaluate(1) == BigRational::from_integer(e1), || format!("{reg}: polynomial at 1"))
    })
}

pub fn lattice_points(max_n: usize) -> Check {
    let cases = oracle::sweep(max_n)
        .into_iter()
        .flat_map(|reg| (0..=3).map(move |t| (reg.clone(), t)))
        .filter(|(reg, t)| reg.len() * t <= 16);
    Check::run("lattice-points", cases, |(reg, t)| {
        let brute = BigInt::from(oracle::brute_lattice_points(reg, *t).map_err(err)?);
        ensure(ehrhart::count_lattice_points(reg, *t) == brute, || format!("{reg} t = {t}"))
    })
}

pub fn gamma_membership(max_n: usize) -> Check {
    let regions = oracle::sweep(max_n).into_iter().filter(|r| r.r() > 0);
    Check::run("gamma-membership", regions, |reg| {
        let gamma: BTreeSet<Vec<usize>> = ehrhart::gamma_set(reg).into_iter().collect();
        for b in matroid::bases(reg) {
            let alpha = ehrhart::block_vector(&b, reg.r());
            ensure(gamma.contains(&alpha), || format!("{reg}: {b} has block vector {alpha:?}"))?;
        }
        Ok(())
    })
}

pub fn catalan_area(n_max: usize) -> Check {
    let series = oracle::catalan_area_series(n_max);
    let rec = volume::catalan_area_recurrence(n_max);
    Check::run("catalan-area", 0..=n_max, |&n| {
        let closed = volume::catalan_area_closed_form(n);
        ensure(rec[n] == closed && series[n] == closed, || format!("n = {n}"))?;
        if (1..=8).contains(&n) {
            ensure(oracle::brute_catalan_area(n).map_err(err)? == closed, || format!("n = {n}: enumeration"))?;
        }
        Ok(())
    })
}
