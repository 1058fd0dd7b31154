//! Serialized forms of every verb's result. Big integers and rationals are
//! decimal strings; rationals always carry a denominator (`"p/q"`).

use std::collections::BTreeMap;

use lpm_core::decompose::{BorderStrip, DecompositionTree};
use lpm_core::ehrhart::EhrhartPolynomial;
use lpm_core::lattice_path::RegionSpec;
use lpm_core::polytope::{Inequality, Relation};
use lpm_core::triangulate::SimplexCell;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

pub fn rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasesOutput {
    pub region: RegionSpec,
    pub rank: usize,
    pub count: usize,
    /// 0/1 incidence vectors in lexicographic order.
    pub bases: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimOutput {
    pub region: RegionSpec,
    pub dimension: usize,
    pub components: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgesOutput {
    pub region: RegionSpec,
    pub vertices: Vec<String>,
    /// Index pairs into `vertices`.
    pub edges: Vec<[usize; 2]>,
}

/// `coeffs . x <rel> rhs` and the indices of the vertices attaining equality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetRecord {
    pub coeffs: Vec<i64>,
    pub rel: Relation,
    pub rhs: i64,
    pub tight_vertices: Vec<usize>,
}

impl FacetRecord {
    pub fn new(ineq: &Inequality, vertices: &[Vec<u8>]) -> Self {
        let (coeffs, rel, rhs) = ineq.to_le_form();
        let tight_vertices = (0..vertices.len()).filter(|&k| ineq.is_tight(&vertices[k])).collect();
        FacetRecord {
            coeffs,
            rel,
            rhs,
            tight_vertices,
        }
    }

    pub fn display(&self) -> String {
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
        format!("{lhs} {} {}", self.rel, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HrepOutput {
    pub equalities: Vec<FacetRecord>,
    pub inequalities: Vec<FacetRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitLabel {
    pub x: usize,
    pub j: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TreeOutput {
    Split { split: SplitLabel, children: Vec<TreeOutput> },
    Leaf { strip: String, descents: Vec<usize> },
}

impl TreeOutput {
    pub fn leaf(strip: &BorderStrip) -> Self {
        TreeOutput::Leaf {
            strip: strip.moves(),
            descents: strip.descents().into_iter().collect(),
        }
    }

    pub fn of(tree: &DecompositionTree) -> Self {
        match tree {
            DecompositionTree::Leaf(s) => TreeOutput::leaf(s),
            DecompositionTree::Split { x, j, left, right } => TreeOutput::Split {
                split: SplitLabel { x: *x, j: *j },
                children: vec![TreeOutput::of(left), TreeOutput::of(right)],
            },
        }
    }

    /// Leaves from left to right.
    pub fn leaves(&self) -> Vec<(&str, &[usize])> {
        match self {
            TreeOutput::Leaf { strip, descents } => vec![(strip, descents)],
            TreeOutput::Split { children, .. } => children.iter().flat_map(TreeOutput::leaves).collect(),
        }
    }

    pub fn render(&self, depth: usize, out: &mut String) {
        let pad = "  ".repeat(depth);
        match self {
            TreeOutput::Leaf { strip, descents } => {
                out.push_str(&format!("{pad}strip[{strip}] descents {descents:?}\n"));
            }
            TreeOutput::Split { split, children } => {
                out.push_str(&format!("{pad}split x = {}, j = {}\n", split.x, split.j));
                for c in children {
                    c.render(depth + 1, out);
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VolumeOutput {
    pub volume_normalized: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EhrhartOutput {
    /// Coefficients of `1, t, t^2, ...`.
    pub coeffs: Vec<String>,
    pub volume_normalized: String,
    pub values: BTreeMap<usize, String>,
}

impl EhrhartOutput {
    pub fn new(poly: &EhrhartPolynomial, values: BTreeMap<usize, String>) -> Self {
        EhrhartOutput {
            coeffs: poly.coeffs.iter().map(rational).collect(),
            volume_normalized: poly.normalized_volume().to_string(),
            values,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellOutput {
    pub perm: Vec<usize>,
    pub vertices: Vec<Vec<String>>,
    pub det: i64,
}

impl CellOutput {
    /// The cell with its vertices lifted to coordinate sum `total`.
    pub fn new(cell: &SimplexCell, total: usize) -> Self {
        CellOutput {
            perm: cell.label.clone(),
            vertices: cell.lifted(total).iter().map(|v| v.iter().map(rational).collect()).collect(),
            det: cell.det().to_integer().to_i64().expect("unimodular cells have determinant +-1"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetClaim {
    pub claimed: usize,
    pub computed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalanOutput {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub catalan_number: Option<String>,
    /// Total area between the Dyck paths of size `n` and the diagonal.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub area_total: Option<String>,
    /// Edge count of the Dyck path polytope by closed form.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_count: Option<String>,
    pub dimension: usize,
    pub facets: FacetClaim,
}
