//! The `lpm` command line: region verbs, the Catalan family, triangulations
//! and the verification sweeps with their reconciliation report.

pub mod errata;
pub mod output;
pub mod verify;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lpm_core::decompose::{self, BorderStrip};
use lpm_core::lattice_path::RegionSpec;
use lpm_core::{ehrhart, matroid, polytope, triangulate, volume, LpmError, Region};
use serde::{Deserialize, Serialize};

use errata::{ReconcileRecord, Verdict, VerdictKind};
use output::*;
use verify::Check;

pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_REGION: i32 = 3;
pub const EXIT_SIZE: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "lpm", version, about = "Lattice path matroid polytopes in exact arithmetic")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// A region given inline or as a JSON file `{"lower": "...", "upper": "..."}`.
#[derive(Debug, Clone, Default, Args)]
pub struct RegionArgs {
    /// Lower bounding path, a word in E and N.
    #[arg(long)]
    pub lower: Option<String>,
    /// Upper bounding path, a word in E and N.
    #[arg(long)]
    pub upper: Option<String>,
    #[arg(long, conflicts_with_all = ["lower", "upper"])]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Largest m + r accepted.
    #[arg(long, default_value_t = 10)]
    pub max_size: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyTarget {
    All,
    Facets,
    Volume,
    EhrhartFormula,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bases as 0/1 vectors, in lexicographic order.
    Bases {
        #[command(flatten)]
        region: RegionArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Dimension and connected components.
    Dim {
        #[command(flatten)]
        region: RegionArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Vertices and edges of the polytope.
    Edges {
        #[command(flatten)]
        region: RegionArgs,
        #[command(flatten)]
        common: Common,
    },
    /// The defining equality and inequalities from the path profiles.
    Hrep {
        #[command(flatten)]
        region: RegionArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Facets, block by block for disconnected regions.
    Facets {
        #[command(flatten)]
        region: RegionArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Recursive hyperplane splits down to border strips.
    Decompose {
        #[command(flatten)]
        region: RegionArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Normalized volume of a connected region.
    Volume {
        #[command(flatten)]
        region: RegionArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Ehrhart polynomial and lattice point counts of dilations.
    Ehrhart {
        #[command(flatten)]
        region: RegionArgs,
        #[command(flatten)]
        common: Common,
        /// Largest dilation listed; defaults to the dimension plus two.
        #[arg(long)]
        t_max: Option<usize>,
    },
    /// Unimodular cells of the hypersimplex (--k, --n) or of a border strip region.
    Triangulate {
        #[command(flatten)]
        region: RegionArgs,
        #[command(flatten)]
        common: Common,
        #[arg(long, requires = "n", conflicts_with_all = ["lower", "upper", "file"])]
        k: Option<usize>,
        #[arg(long, requires = "k", conflicts_with_all = ["lower", "upper", "file"])]
        n: Option<usize>,
    },
    /// Catalan matroid numbers, or generalized Catalan facet counts with --r.
    Catalan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Exhaustive oracle sweeps and the reconciliation report.
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        #[arg(long, default_value_t = 7)]
        max_size: usize,
        #[arg(long, default_value_t = 3)]
        t_max: usize,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

/// An error with the exit code it maps to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<LpmError> for Failure {
    fn from(e: LpmError) -> Self {
        let code = match e {
            LpmError::InvalidCharacter { .. }
            | LpmError::EmptyWord
            | LpmError::EndpointMismatch { .. }
            | LpmError::DominanceViolation { .. }
            | LpmError::DisconnectedRegion { .. }
            | LpmError::NotABorderStrip
            | LpmError::NotGeneralizedCatalan => EXIT_REGION,
            LpmError::TooLarge { .. } => EXIT_SIZE,
            LpmError::NonUnimodularCell { .. } | LpmError::InterpolationMismatch { .. } => EXIT_VERIFY,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: format!("{e:?}: {e}"),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, Failure>;

impl RegionArgs {
    pub fn resolve(&self) -> CliResult<Region> {
        let spec = match (&self.lower, &self.upper, &self.file) {
            (Some(lower), Some(upper), None) => RegionSpec {
                lower: lower.clone(),
                upper: upper.clone(),
            },
            (None, None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
                serde_json::from_str(&text)
                    .map_err(|e| Failure::usage(format!("{}: expected {{\"lower\", \"upper\"}}: {e}", path.display())))?
            }
            (None, None, None) => return Err(Failure::usage("a region is required: --lower and --upper, or --file")),
            _ => return Err(Failure::usage("give both --lower and --upper, or --file alone")),
        };
        Ok(Region::from_spec(&spec)?)
    }
}

fn capped(region: &Region, max_size: usize) -> CliResult<()> {
    if region.len() > max_size {
        return Err(LpmError::TooLarge {
            size: region.len(),
            cap: max_size,
        }
        .into());
    }
    Ok(())
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("output types serialize") + "\n"
}

fn vector(v: &[u8]) -> String {
    v.iter().map(|x| char::from(b'0' + x)).collect()
}

fn ints<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn facet_csv(records: &[FacetRecord], prefix: impl Fn(usize) -> String, header: &str) -> String {
    let mut s = format!("{header}coeffs,rel,rhs,tight_vertices\n");
    for (i, f) in records.iter().enumerate() {
        let _ = writeln!(
            s,
            "{}{},{},{},{}",
            prefix(i),
            ints(&f.coeffs, " "),
            f.rel,
            f.rhs,
            ints(&f.tight_vertices, " ")
        );
    }
    s
}

/// Outcome of a verification run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub checks: Vec<Check>,
    pub errata: Vec<Verdict>,
}

impl VerifyReport {
    fn new(checks: Vec<Check>, errata: Vec<Verdict>) -> Self {
        VerifyReport {
            passed: checks.iter().all(|c| c.passed),
            checks,
            errata,
        }
    }

    pub fn verdict(&self, id: &str) -> Option<&Verdict> {
        self.errata.iter().find(|v| v.id == id)
    }

    pub fn text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(s, "{status} {} ({} cases): {}", c.id, c.cases, c.detail);
        }
        for v in &self.errata {
            let _ = writeln!(s, "{} {}", verdict_label(v.verdict), v.id);
            let _ = writeln!(s, "  claim:    {}", v.claim);
            let _ = writeln!(s, "  stated:   {}", v.stated);
            let _ = writeln!(s, "  computed: {}", v.computed);
            if let Some(c) = &v.corrected {
                let _ = writeln!(s, "  corrected: {c}");
            }
        }
        let _ = writeln!(s, "{}", if self.passed { "all checks passed" } else { "verification failed" });
        s
    }

    pub fn csv(&self) -> String {
        let mut s = String::from("kind,id,status,cases,detail\n");
        for c in &self.checks {
            let status = if c.passed { "pass" } else { "fail" };
            let _ = writeln!(s, "check,{},{status},{},{}", c.id, c.cases, csv_field(&c.detail));
        }
        for v in &self.errata {
            let _ = writeln!(s, "claim,{},{},,{}", v.id, verdict_label(v.verdict).to_lowercase(), csv_field(&v.computed));
        }
        s
    }
}

fn verdict_label(v: VerdictKind) -> &'static str {
    match v {
        VerdictKind::Confirmed => "CONFIRMED",
        VerdictKind::Erratum => "ERRATUM",
        VerdictKind::BoundaryCase => "BOUNDARY-CASE",
    }
}

/// Every oracle sweep at sizes up to `max_size`, with the full report.
pub fn verify_all(max_size: usize, t_max: usize) -> VerifyReport {
    let decomposition = verify::decomposition(max_size);
    let checks = vec![
        verify::bases(max_size),
        verify::rectangle_bases(max_size),
        verify::dimension(max_size),
        verify::catalan_dimension(6),
        verify::components(max_size),
        verify::edges(max_size),
        verify::catalan_edges(max_size),
        verify::catalan_edge_formula(7),
        verify::facets(max_size.min(8)),
        verify::catalan_facets(3..=6),
        verify::faces(max_size.min(6)),
        decomposition.check.clone(),
        verify::volume_is_leading_coefficient(max_size),
        verify::rectangle_eulerian(max_size),
        verify::strip_fillings(max_size),
        verify::volume_spots(),
        verify::hypersimplex(max_size),
        verify::psi_round_trip(3, 5),
        verify::strip_cells(max_size),
        verify::ehrhart_interpolation(max_size.min(6)),
        verify::lattice_points(max_size.min(5)),
        verify::gamma_membership(max_size),
        verify::catalan_area(10),
    ];
    VerifyReport::new(checks, errata_report(max_size, t_max, &decomposition))
}

/// The reconciliation entries for every tracked and secondary claim.
pub fn errata_report(max_size: usize, t_max: usize, decomposition: &verify::DecompositionSweep) -> Vec<Verdict> {
    let mut out = vec![errata::catalan_edge_count(), errata::catalan_area_recurrence()];
    out.extend(errata::dimension_claims(max_size));
    out.push(errata::catalan_dimension());
    out.extend(errata::catalan_facets(2..=6));
    out.extend(errata::kcatalan_facets(1..=3, 2..=4));
    out.push(errata::gamma_orientation(max_size));
    out.push(errata::gamma_lattice_count(max_size));
    out.push(errata::ehrhart_double_sum(&errata::reconcile_table(max_size.min(6), t_max)));
    out.push(errata::good_partition_p2(decomposition, max_size));
    out
}

pub fn verify_facets(max_size: usize) -> VerifyReport {
    let checks = vec![
        verify::facets(max_size.min(8)),
        verify::catalan_facets(3..=6),
        verify::faces(max_size.min(6)),
    ];
    let mut errata = errata::catalan_facets(2..=6);
    errata.extend(errata::kcatalan_facets(1..=3, 2..=4));
    VerifyReport::new(checks, errata)
}

pub fn verify_volume(max_size: usize) -> VerifyReport {
    let decomposition = verify::decomposition(max_size);
    let checks = vec![
        decomposition.check.clone(),
        verify::volume_is_leading_coefficient(max_size),
        verify::rectangle_eulerian(max_size),
        verify::strip_fillings(max_size),
        verify::volume_spots(),
        verify::hypersimplex(max_size),
        verify::strip_cells(max_size),
    ];
    let errata = vec![
        errata::good_partition_p2(&decomposition, max_size),
        errata::catalan_area_recurrence(),
    ];
    VerifyReport::new(checks, errata)
}

fn reconcile_csv(rows: &[ReconcileRecord]) -> String {
    let mut s = String::from("region,t,formula_value,true_value,match\n");
    for r in rows {
        let _ = writeln!(s, "{},{},{},{},{}", r.region, r.t, r.formula_value, r.true_value, r.matches);
    }
    s
}

fn bases_cmd(region: &Region, format: Format) -> String {
    let verts: Vec<Vec<u8>> = matroid::bases(region).iter().map(|b| b.coords().to_vec()).collect();
    match format {
        Format::Json => json(&BasesOutput {
            region: region.to_spec(),
            rank: region.r(),
            count: verts.len(),
            bases: verts.iter().map(|v| vector(v)).collect(),
        }),
        Format::Csv => {
            let mut s = String::from("index,vector,support\n");
            for (i, v) in verts.iter().enumerate() {
                let support: Vec<usize> = (1..=v.len()).filter(|&e| v[e - 1] == 1).collect();
                let _ = writeln!(s, "{i},{},{}", vector(v), ints(&support, " "));
            }
            s
        }
        Format::Text => verts.iter().map(|v| vector(v) + "\n").collect(),
    }
}

fn dim_cmd(region: &Region, format: Format) -> String {
    let out = DimOutput {
        region: region.to_spec(),
        dimension: polytope::dimension(region),
        components: matroid::components(region).classes(),
    };
    match format {
        Format::Json => json(&out),
        Format::Csv => {
            let mut s = String::from("component,elements\n");
            for (i, c) in out.components.iter().enumerate() {
                let _ = writeln!(s, "{i},{}", ints(c, " "));
            }
            s
        }
        Format::Text => {
            let classes: Vec<String> = out.components.iter().map(|c| format!("{{{}}}", ints(c, ", "))).collect();
            format!("dimension {}\ncomponents {}\n", out.dimension, classes.join(" "))
        }
    }
}

fn edges_cmd(region: &Region, format: Format) -> String {
    let verts: Vec<String> = matroid::bases(region).iter().map(|b| vector(b.coords())).collect();
    let edges: Vec<[usize; 2]> = polytope::edges(region).into_iter().map(|(a, b)| [a, b]).collect();
    match format {
        Format::Json => json(&EdgesOutput {
            region: region.to_spec(),
            vertices: verts,
            edges,
        }),
        Format::Csv => {
            let mut s = String::from("i,j,u,v\n");
            for [a, b] in &edges {
                let _ = writeln!(s, "{a},{b},{},{}", verts[*a], verts[*b]);
            }
            s
        }
        Format::Text => edges.iter().map(|[a, b]| format!("{} -- {}\n", verts[*a], verts[*b])).collect(),
    }
}

fn hrep_cmd(region: &Region, format: Format) -> String {
    let verts: Vec<Vec<u8>> = matroid::bases(region).iter().map(|b| b.coords().to_vec()).collect();
    let h = polytope::h_representation(region);
    let out = HrepOutput {
        equalities: h.equalities.iter().map(|e| FacetRecord::new(e, &verts)).collect(),
        inequalities: h.inequalities.iter().map(|e| FacetRecord::new(e, &verts)).collect(),
    };
    match format {
        Format::Json => json(&out),
        Format::Csv => {
            let all: Vec<FacetRecord> = out.equalities.iter().chain(&out.inequalities).cloned().collect();
            let eqs = out.equalities.len();
            facet_csv(&all, |i| if i < eqs { "equality,".into() } else { "inequality,".into() }, "kind,")
        }
        Format::Text => out
            .equalities
            .iter()
            .chain(&out.inequalities)
            .map(|f| f.display() + "\n")
            .collect(),
    }
}

fn facets_cmd(region: &Region, format: Format) -> CliResult<String> {
    let verts: Vec<Vec<u8>> = matroid::bases(region).iter().map(|b| b.coords().to_vec()).collect();
    let list = if matroid::is_connected(region) {
        polytope::facets(region)?
    } else {
        polytope::facets_by_blocks(region)
    };
    let records: Vec<FacetRecord> = list.facets.iter().map(|f| FacetRecord::new(&f.inequality, &verts)).collect();
    Ok(match format {
        Format::Json => json(&records),
        Format::Csv => facet_csv(&records, |_| String::new(), ""),
        Format::Text => records
            .iter()
            .map(|f| format!("{}  tight on {}\n", f.display(), ints(&f.tight_vertices, " ")))
            .collect(),
    })
}

fn decompose_cmd(region: &Region, format: Format) -> CliResult<String> {
    let tree = TreeOutput::of(&decompose::decompose(region)?);
    Ok(match format {
        Format::Json => json(&tree),
        Format::Csv => {
            let mut s = String::from("strip,descents\n");
            for (strip, d) in tree.leaves() {
                let _ = writeln!(s, "{strip},{}", ints(d, " "));
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            tree.render(0, &mut s);
            s
        }
    })
}

fn volume_cmd(region: &Region, format: Format) -> CliResult<String> {
    if !matroid::is_connected(region) {
        return Err(LpmError::DisconnectedRegion {
            components: matroid::components(region).count(),
        }
        .into());
    }
    let vol = volume::volume(region)?.to_string();
    Ok(match format {
        Format::Json => json(&VolumeOutput { volume_normalized: vol }),
        Format::Csv => format!("volume_normalized\n{vol}\n"),
        Format::Text => vol + "\n",
    })
}

fn ehrhart_cmd(region: &Region, t_max: Option<usize>, format: Format) -> CliResult<String> {
    let poly = ehrhart::ehrhart_polynomial(region)?;
    let t_max = t_max.unwrap_or(poly.degree() + 2);
    let values: BTreeMap<usize, String> =
        (0..=t_max).map(|t| (t, ehrhart::count_lattice_points(region, t).to_string())).collect();
    let out = EhrhartOutput::new(&poly, values);
    Ok(match format {
        Format::Json => json(&out),
        Format::Csv => {
            let mut s = String::from("t,count\n");
            for (t, v) in &out.values {
                let _ = writeln!(s, "{t},{v}");
            }
            s
        }
        Format::Text => {
            let terms: Vec<String> = out
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| match i {
                    0 => c.clone(),
                    1 => format!("({c}) t"),
                    _ => format!("({c}) t^{i}"),
                })
                .collect();
            let mut s = format!("E(t) = {}\nvolume {}\n", terms.join(" + "), out.volume_normalized);
            for (t, v) in &out.values {
                let _ = writeln!(s, "E({t}) = {v}");
            }
            s
        }
    })
}

fn triangulate_cmd(cells: &[CellOutput], format: Format) -> String {
    match format {
        Format::Json => json(&cells),
        Format::Csv => {
            let mut s = String::from("perm,det,vertices\n");
            for c in cells {
                let verts: Vec<String> = c.vertices.iter().map(|v| v.join(" ")).collect();
                let _ = writeln!(s, "{},{},{}", ints(&c.perm, " "), c.det, verts.join(";"));
            }
            s
        }
        Format::Text => cells
            .iter()
            .map(|c| {
                let verts: Vec<String> = c.vertices.iter().map(|v| format!("({})", v.join(", "))).collect();
                format!("[{}] det {}: {}\n", ints(&c.perm, " "), c.det, verts.join(" "))
            })
            .collect(),
    }
}

fn catalan_cmd(n: usize, r: Option<usize>, format: Format) -> CliResult<String> {
    let out = match r {
        None => {
            if !(2..=8).contains(&n) {
                return Err(Failure::usage("catalan needs 2 <= n <= 8"));
            }
            let core = polytope::catalan_core_region(n);
            CatalanOutput {
                n,
                r: None,
                catalan_number: Some(volume::catalan_number(n).to_string()),
                area_total: Some(rational(&volume::catalan_area(n))),
                edge_count: Some(polytope::catalan_edge_formula(n).to_string()),
                dimension: polytope::dimension(&core),
                facets: FacetClaim {
                    claimed: polytope::catalan_facet_count(n),
                    computed: polytope::facets(&core)?.len(),
                },
            }
        }
        Some(r) => {
            if r == 0 || !(2..=8).contains(&n) || (r + 1) * (n - 1) > 16 {
                return Err(Failure::usage("catalan --r needs r >= 1, 2 <= n <= 8 and (r + 1)(n - 1) <= 16"));
            }
            let reg = polytope::kcatalan_region(r, n);
            CatalanOutput {
                n,
                r: Some(r),
                catalan_number: None,
                area_total: None,
                edge_count: None,
                dimension: polytope::dimension(&reg),
                facets: FacetClaim {
                    claimed: polytope::kcatalan_facet_count(r, n),
                    computed: polytope::facets(&reg)?.len(),
                },
            }
        }
    };
    Ok(match format {
        Format::Json => json(&out),
        Format::Csv => format!(
            "n,r,catalan_number,area_total,edge_count,dimension,facets_claimed,facets_computed\n{},{},{},{},{},{},{},{}\n",
            out.n,
            out.r.map(|r| r.to_string()).unwrap_or_default(),
            out.catalan_number.clone().unwrap_or_default(),
            out.area_total.clone().unwrap_or_default(),
            out.edge_count.clone().unwrap_or_default(),
            out.dimension,
            out.facets.claimed,
            out.facets.computed
        ),
        Format::Text => {
            let mut s = String::new();
            if let (Some(c), Some(a), Some(e)) = (&out.catalan_number, &out.area_total, &out.edge_count) {
                let _ = writeln!(s, "C_{n} = {c}\nA_{n} = {a}\na({n}) = {e}");
            }
            let _ = writeln!(
                s,
                "dimension {}\nfacets {} (claimed {})",
                out.dimension, out.facets.computed, out.facets.claimed
            );
            s
        }
    })
}

/// Runs one command, writing its output to `out`; returns the exit code.
pub fn run(cli: Cli, out: &mut dyn Write) -> CliResult<i32> {
    let mut code = 0;
    let text = match cli.command {
        Command::Bases { region, common } => {
            let reg = region.resolve()?;
            capped(&reg, common.max_size)?;
            bases_cmd(&reg, common.format.unwrap_or(Format::Json))
        }
        Command::Dim { region, common } => {
            let reg = region.resolve()?;
            capped(&reg, common.max_size)?;
            dim_cmd(&reg, common.format.unwrap_or(Format::Json))
        }
        Command::Edges { region, common } => {
            let reg = region.resolve()?;
            capped(&reg, common.max_size)?;
            edges_cmd(&reg, common.format.unwrap_or(Format::Json))
        }
        Command::Hrep { region, common } => {
            let reg = region.resolve()?;
            capped(&reg, common.max_size)?;
            hrep_cmd(&reg, common.format.unwrap_or(Format::Json))
        }
        Command::Facets { region, common } => {
            let reg = region.resolve()?;
            capped(&reg, common.max_size)?;
            facets_cmd(&reg, common.format.unwrap_or(Format::Json))?
        }
        Command::Decompose { region, common } => {
            let reg = region.resolve()?;
            capped(&reg, common.max_size)?;
            decompose_cmd(&reg, common.format.unwrap_or(Format::Json))?
        }
        Command::Volume { region, common } => {
            let reg = region.resolve()?;
            capped(&reg, common.max_size)?;
            volume_cmd(&reg, common.format.unwrap_or(Format::Json))?
        }
        Command::Ehrhart { region, common, t_max } => {
            let reg = region.resolve()?;
            capped(&reg, common.max_size)?;
            ehrhart_cmd(&reg, t_max, common.format.unwrap_or(Format::Json))?
        }
        Command::Triangulate { region, common, k, n } => {
            let cells: Vec<CellOutput> = match (k, n) {
                (Some(k), Some(n)) => {
                    if n > common.max_size {
                        return Err(LpmError::TooLarge {
                            size: n,
                            cap: common.max_size,
                        }
                        .into());
                    }
                    let cells = triangulate::hypersimplex_triangulation(k, n)?;
                    triangulate::triangulation_volume_check(&cells)?;
                    cells.iter().map(|c| CellOutput::new(c, k)).collect()
                }
                _ => {
                    let reg = region.resolve()?;
                    capped(&reg, common.max_size)?;
                    let strip = BorderStrip::from_region(&reg)?;
                    let cells = triangulate::strip_triangulation(&strip);
                    triangulate::triangulation_volume_check(&cells)?;
                    cells.iter().map(|c| CellOutput::new(c, reg.r())).collect()
                }
            };
            triangulate_cmd(&cells, common.format.unwrap_or(Format::Json))
        }
        Command::Catalan { n, r, format } => catalan_cmd(n, r, format.unwrap_or(Format::Json))?,
        Command::Verify {
            target,
            max_size,
            t_max,
            format,
        } => {
            if target == VerifyTarget::EhrhartFormula {
                let rows = errata::reconcile_table(max_size, t_max);
                match format.unwrap_or(Format::Csv) {
                    Format::Json => json(&rows),
                    _ => reconcile_csv(&rows),
                }
            } else {
                let report = match target {
                    VerifyTarget::All => verify_all(max_size, t_max),
                    VerifyTarget::Facets => verify_facets(max_size),
                    _ => verify_volume(max_size),
                };
                if !report.passed {
                    code = EXIT_VERIFY;
                }
                match format.unwrap_or(Format::Text) {
                    Format::Json => json(&report),
                    Format::Csv => report.csv(),
                    Format::Text => report.text(),
                }
            }
        }
    };
    out.write_all(text.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|e| Failure {
            code: EXIT_USAGE,
            message: format!("cannot write output: {e}"),
        })?;
    Ok(code)
}
