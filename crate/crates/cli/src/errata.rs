//! Reconciliation of stated closed forms against computed ground truth.
//!
//! Every entry records the stated value or form, what the exhaustive
//! computation gives, and a verdict. Entries never fail a verification run.

use std::collections::{BTreeMap, BTreeSet};

use lpm_core::{ehrhart, matroid, oracle, polytope, volume, Region};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::verify;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerdictKind {
    Confirmed,
    Erratum,
    BoundaryCase,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub id: String,
    pub claim: String,
    pub stated: String,
    pub computed: String,
    pub verdict: VerdictKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub corrected: Option<String>,
}

/// Claims every report must carry a verdict for.
pub const TRACKED: [&str; 6] = [
    "catalan-edge-count",
    "dimension-offset",
    "catalan-facets-n2",
    "gamma-orientation",
    "gamma-lattice-count",
    "ehrhart-double-sum",
];

fn verdict(ok: bool) -> VerdictKind {
    if ok {
        VerdictKind::Confirmed
    } else {
        VerdictKind::Erratum
    }
}

fn list<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(", ")
}

pub fn catalan_edge_count() -> Verdict {
    let ns = 1..=7;
    let stated: Vec<BigRational> = ns.clone().map(polytope::catalan_edge_formula_printed).collect();
    let enumerated: Vec<BigInt> = ns.clone().map(|n| BigInt::from(polytope::edges(&polytope::dyck_region(n)).len())).collect();
    let corrected: Vec<BigInt> = ns.map(polytope::catalan_edge_formula).collect();
    let ok = stated.iter().zip(&enumerated).all(|(s, e)| *s == BigRational::from_integer(e.clone()));
    Verdict {
        id: "catalan-edge-count".into(),
        claim: "edges of the Dyck path polytope: a(n) = n^2 C_n / 2 - 4^n / 2 - binom(2n+2, n+1) / 4".into(),
        stated: format!("n = 1..7: {}", list(&stated)),
        computed: format!("n = 1..7: {}", list(&enumerated)),
        verdict: verdict(ok),
        corrected: (corrected == enumerated && !ok).then(|| {
            format!("a(n) = n^2 C_n / 2 - 4^n / 2 + binom(2n+2, n+1) / 4, giving {}", list(&corrected))
        }),
    }
}

/// `dim = m + r - c + 2` against the affine rank, and `dim = m + r - c`.
pub fn dimension_claims(max_n: usize) -> Vec<Verdict> {
    let regions = oracle::sweep(max_n);
    let mut plus_two = 0;
    let mut exact = 0;
    for reg in &regions {
        let c = matroid::components(reg).count() as isize;
        let rank = oracle::brute_dimension(reg).expect("sweep sizes are within the oracle cap");
        let n = reg.len() as isize;
        plus_two += usize::from(n - c + 2 == rank);
        exact += usize::from(n - c == rank);
    }
    let total = regions.len();
    vec![
        Verdict {
            id: "dimension-offset".into(),
            claim: "dim P(M) = m + r - c(M) + 2".into(),
            stated: "m + r - c(M) + 2".into(),
            computed: format!("holds for {plus_two} of {total} regions with m + r <= {max_n}"),
            verdict: verdict(plus_two == total),
            corrected: (plus_two != total && exact == total).then(|| "dim P(M) = m + r - c(M)".into()),
        },
        Verdict {
            id: "dimension-components".into(),
            claim: "dim P(M) = m + r - c(M)".into(),
            stated: "m + r - c(M)".into(),
            computed: format!("holds for {exact} of {total} regions with m + r <= {max_n}"),
            verdict: verdict(exact == total),
            corrected: None,
        },
    ]
}

pub fn catalan_dimension() -> Verdict {
    let dims: Vec<usize> = (2..=6).map(|n| polytope::dimension(&polytope::catalan_core_region(n - 1))).collect();
    let stated: Vec<usize> = (2..=6).map(|n| 2 * n - 3).collect();
    Verdict {
        id: "catalan-dimension".into(),
        claim: "the Catalan matroid polytope P(M_n) has dimension 2n - 3".into(),
        stated: format!("n = 2..6: {}", list(&stated)),
        computed: format!("n = 2..6: {}", list(&dims)),
        verdict: verdict(dims == stated),
        corrected: None,
    }
}

/// Indices of the vertices attaining `coeffs . x = rhs`.
fn tight_set(verts: &[Vec<u8>], coeffs: &[i64], rhs: i64) -> Vec<usize> {
    (0..verts.len())
        .filter(|&k| coeffs.iter().zip(&verts[k]).map(|(&c, &x)| c * x as i64).sum::<i64>() == rhs)
        .collect()
}

/// The listed hyperplanes as `(label, coeffs, rhs)` in `<=` form.
type Listed = Vec<(String, Vec<i64>, i64)>;

fn catalan_listing(n: usize) -> Listed {
    let len = 2 * n;
    let unit = |e: usize, s: i64| -> Vec<i64> { (1..=len).map(|i| if i == e { s } else { 0 }).collect() };
    let mut out: Listed = (3..=len).map(|e| (format!("x{e} <= 1"), unit(e, 1), 1)).collect();
    out.extend((1..=len).map(|e| (format!("x{e} >= 0"), unit(e, -1), 0)));
    for k in 2..=n {
        let coeffs = (1..=len).map(|i| i64::from(i <= 2 * k - 2)).collect();
        out.push((format!("x1 + ... + x{} <= {}", 2 * k - 2, k - 1), coeffs, k as i64 - 1));
    }
    out
}

fn kcatalan_listing(r: usize, n: usize) -> Listed {
    let len = (r + 1) * (n - 1);
    let unit = |e: usize, s: i64| -> Vec<i64> { (1..=len).map(|i| if i == e { s } else { 0 }).collect() };
    let mut out: Listed = (r + 2..=len).map(|e| (format!("x{e} <= 1"), unit(e, 1), 1)).collect();
    out.extend((1..=len).map(|e| (format!("x{e} >= 0"), unit(e, -1), 0)));
    for k in 1..=n.saturating_sub(2) {
        let coeffs = (1..=len).map(|i| i64::from(i <= k * (r + 1))).collect();
        out.push((format!("x1 + ... + x{} <= {k}", k * (r + 1)), coeffs, k as i64));
    }
    out
}

/// Compares a listing with the certified facets of `region`.
fn listing_verdict(id: String, claim: String, region: &Region, claimed: usize, listed: &Listed) -> Verdict {
    let facets = polytope::facets(region).expect("Catalan regions are connected");
    let facet_sets = facets.tight_sets();
    let verts: Vec<Vec<u8>> = matroid::bases(region).iter().map(|b| b.coords().to_vec()).collect();
    let mut non_facets = Vec::new();
    let mut covered = BTreeSet::new();
    for (label, coeffs, rhs) in listed {
        let tight = tight_set(&verts, coeffs, *rhs);
        if facet_sets.contains(&tight) {
            covered.insert(tight);
        } else {
            non_facets.push(label.clone());
        }
    }
    // every facet lying in a listed hyperplane is what is claimed; extra
    // listed hyperplanes that cut out lower-dimensional faces are tolerated
    // as a boundary case
    let verdict = if facets.len() != claimed || covered.len() != facet_sets.len() {
        VerdictKind::Erratum
    } else if non_facets.is_empty() {
        VerdictKind::Confirmed
    } else {
        VerdictKind::BoundaryCase
    };
    let mut computed = format!(
        "{} facets; {} listed hyperplanes, {} of them facets",
        facets.len(),
        listed.len(),
        listed.len() - non_facets.len()
    );
    if !non_facets.is_empty() {
        computed += &format!("; not facets: {}", non_facets.join(", "));
    }
    if covered.len() != facet_sets.len() {
        computed += &format!("; {} facets missing from the listing", facet_sets.len() - covered.len());
    }
    Verdict {
        id,
        claim,
        stated: format!("{claimed} facets"),
        computed,
        verdict,
        corrected: None,
    }
}

pub fn catalan_facets(ns: impl IntoIterator<Item = usize>) -> Vec<Verdict> {
    ns.into_iter()
        .map(|n| {
            listing_verdict(
                format!("catalan-facets-n{n}"),
                format!("P(M_{}) has 5n - 5 facets in the listed hyperplanes (n = {n})", n + 1),
                &polytope::catalan_core_region(n),
                polytope::catalan_facet_count(n),
                &catalan_listing(n),
            )
        })
        .collect()
}

pub fn kcatalan_facets(rs: impl IntoIterator<Item = usize> + Clone, ns: impl IntoIterator<Item = usize> + Clone) -> Vec<Verdict> {
    let mut out = Vec::new();
    for r in rs {
        for n in ns.clone() {
            out.push(listing_verdict(
                format!("kcatalan-facets-r{r}-n{n}"),
                format!("P(M^r_n) has (r+1)(2n-3) + n - 2 facets in the listed hyperplanes (r = {r}, n = {n})"),
                &polytope::kcatalan_region(r, n),
                polytope::kcatalan_facet_count(r, n),
                &kcatalan_listing(r, n),
            ));
        }
    }
    out
}

/// `a_i <= α_1 + ... + α_i <= b_i` against the block vectors of the bases.
pub fn gamma_orientation(max_n: usize) -> Verdict {
    let regions: Vec<Region> = oracle::sweep(max_n).into_iter().filter(|r| r.r() > 0).collect();
    let covers = |set: Vec<Vec<usize>>, reg: &Region| {
        let set: BTreeSet<Vec<usize>> = set.into_iter().collect();
        matroid::bases(reg).iter().all(|b| set.contains(&ehrhart::block_vector(b, reg.r())))
    };
    let stated_ok = regions.iter().filter(|r| covers(ehrhart::gamma_set_reversed(r), r)).count();
    let corrected_ok = regions.iter().filter(|r| covers(ehrhart::gamma_set(r), r)).count();
    let total = regions.len();
    let spot = Region::parse("EENN", "NNEE").expect("valid region");
    let g = ehrhart::gamma_bounds(&spot);
    Verdict {
        id: "gamma-orientation".into(),
        claim: "Γ(P,Q) is cut out by a_i <= α_1 + ... + α_i <= b_i".into(),
        stated: "a_i <= partial sum <= b_i".into(),
        computed: format!(
            "stated bounds hold every basis block vector in {stated_ok} of {total} regions (m + r <= {max_n}), \
             reversed bounds in {corrected_ok}; on (EENN, NNEE) a = {:?}, b = {:?}",
            g.a, g.b
        ),
        verdict: verdict(stated_ok == total),
        corrected: (stated_ok != total && corrected_ok == total).then(|| "b_i <= α_1 + ... + α_i <= a_i".into()),
    }
}

/// `|Γ(P,Q)|` against the number of lattice points of the polytope.
pub fn gamma_lattice_count(max_n: usize) -> Verdict {
    let regions: Vec<Region> = oracle::sweep(max_n).into_iter().filter(|r| r.r() > 0).collect();
    let matches = regions.iter().filter(|r| ehrhart::gamma_count_matches(r)).count();
    let segment = Region::parse("EN", "NE").expect("valid region");
    Verdict {
        id: "gamma-lattice-count".into(),
        claim: "the polytope has |Γ(P,Q)| lattice points".into(),
        stated: "|Γ(P,Q)|".into(),
        computed: format!(
            "equal in {matches} of {} regions (m + r <= {max_n}); unit segment (EN, NE): |Γ| = {}, lattice points {}",
            regions.len(),
            ehrhart::gamma_set(&segment).len(),
            ehrhart::count_lattice_points(&segment, 1)
        ),
        verdict: verdict(matches == regions.len()),
        corrected: Some("lattice points are counted exactly by the path-profile recursion".into()),
    }
}

/// One row of the double-sum reconciliation table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReconcileRecord {
    pub region: String,
    pub t: usize,
    pub formula_value: String,
    pub true_value: String,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// The double sum against the exact count for every region with
/// `1 <= r` and `m + r <= max_n`, `t = 0..=t_max`.
pub fn reconcile_table(max_n: usize, t_max: usize) -> Vec<ReconcileRecord> {
    let mut out = Vec::new();
    for reg in oracle::sweep(max_n).into_iter().filter(|r| r.r() > 0) {
        for row in ehrhart::reconcile_ehrhart_formula(&reg, t_max) {
            out.push(ReconcileRecord {
                region: format!("{} {}", reg.lower(), reg.upper()),
                t: row.t,
                formula_value: row.formula_value.to_string(),
                true_value: row.true_value.to_string(),
                matches: row.matches,
            });
        }
    }
    out
}

pub fn ehrhart_double_sum(table: &[ReconcileRecord]) -> Verdict {
    let mut per_t: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for row in table {
        let e = per_t.entry(row.t).or_default();
        e.0 += usize::from(row.matches);
        e.1 += 1;
    }
    let summary: Vec<String> = per_t.iter().map(|(t, (m, n))| format!("t = {t}: {m}/{n}")).collect();
    let first = table.iter().find(|r| !r.matches);
    let mut computed = format!("matching (region, t) pairs per t: {}", summary.join(", "));
    if let Some(r) = first {
        computed += &format!("; e.g. ({}) at t = {}: formula {}, count {}", r.region, r.t, r.formula_value, r.true_value);
    }
    Verdict {
        id: "ehrhart-double-sum".into(),
        claim: "E(t) = Σ_{α ∈ Γ} Σ_{s ∈ S_r(t)} of products of multiset coefficients".into(),
        stated: "double sum over Γ(P,Q) × S_r(t)".into(),
        computed,
        verdict: verdict(first.is_none()),
        corrected: None,
    }
}

pub fn catalan_area_recurrence() -> Verdict {
    let printed = volume::catalan_area_recurrence_printed(6);
    let closed: Vec<BigRational> = (0..=6).map(volume::catalan_area_closed_form).collect();
    let rec = volume::catalan_area_recurrence(6);
    Verdict {
        id: "catalan-area-recurrence".into(),
        claim: "A_{n+1} = 2 Σ (k + 1/2) C_k C_{n-k} + Σ A_k C_{n-k} + Σ A_{n-k} C_k".into(),
        stated: format!("n = 0..6: {}", list(&printed)),
        computed: format!("n = 0..6: {}", list(&closed)),
        verdict: verdict(printed == closed),
        corrected: (printed != closed && rec == closed)
            .then(|| "A_{n+1} = 2 Σ A_k C_{n-k} + (1/2) Σ C_k C_{n-k} + Σ k C_k C_{n-k}".into()),
    }
}

pub fn good_partition_p2(sweep: &verify::DecompositionSweep, max_n: usize) -> Verdict {
    let failures = sweep.p2_failures.len();
    let mut computed = format!(
        "(P2) fails for {failures} of {} splits over connected regions with m + r <= {max_n}",
        sweep.splits
    );
    if let Some(first) = sweep.p2_failures.first() {
        computed += &format!("; e.g. {first}");
    }
    Verdict {
        id: "good-partition-p2".into(),
        claim: "each hyperplane split comes from a good partition satisfying (P1) and (P2)".into(),
        stated: "(P1) and (P2) for E1 = {1..x}".into(),
        computed,
        verdict: verdict(failures == 0),
        corrected: (failures > 0).then(|| {
            "(P1) and the split itself hold (children are lattice path regions whose bases cover the parent's); \
             (P2) does not"
                .into()
        }),
    }
}
