//! The full pipeline for one space and its serializable report.

use serde::{Deserialize, Serialize};

use crate::catalog::Expected;
use crate::cones::Cone;
use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, MLattice};
use crate::linalg::{Matrix, Vector};
use crate::rational::{primitive_integer, to_i64_vec, to_qstr, QStr};
use crate::schema::{LieAlgebraFile, Space, SCHEMA_VERSION};
use crate::spherical::{
    find_admissible, is_admissible, AdmissibilityReport, AdmissibleMethod, AdmissibleSearch, SphericalAnalysis, SupportItem,
    WordEntry,
};
use crate::weyl::{
    check_tiling, little_weyl_group, spherical_roots, weyl_from_limits, LimitCosets, LittleWeylGroup, SphericalRootData,
    TilingReport, Witness, DEFAULT_MAX_ORDER,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub seed: u64,
    pub max_iters: usize,
    pub lattice: MLattice,
    /// Grid radius for the tiling check.
    pub tiling_radius: i64,
}

impl Default for Options {
    fn default() -> Self {
        Options { seed: 0, max_iters: 10, lattice: MLattice::Coroot, tiling_radius: 4 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceMeta {
    pub name: String,
    pub lie_algebra: LieAlgebraFile,
    pub dim: usize,
    pub subalgebra_dim: usize,
    pub base_point_word: Vec<WordEntry>,
    pub h_z: Vec<Vec<QStr>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QBlock {
    pub sigma_q: Vec<Vec<i64>>,
    pub sigma_0: Vec<Vec<i64>>,
    pub l_q_dim: usize,
    pub l_q_nc_dim: usize,
    pub n_q_dim: usize,
    /// Element of `a ∩ h_z^⊥` positive on `Σ(Q)`.
    pub witness: Vec<QStr>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TEntry {
    /// `α`; the entry describes `T_z(X_{−α})`.
    pub root: Vec<i64>,
    pub image: Vec<QStr>,
    pub support: Vec<SupportItem>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TBlock {
    pub t: Vec<TEntry>,
    /// `(X, T_z^⊥(X))` on the basis of `a°`.
    pub t_perp: Vec<(Vec<QStr>, Vec<QStr>)>,
    pub s_z: Vec<Vec<i64>>,
    pub indecomposables: Vec<Vec<i64>>,
    pub a_h: Vec<Vec<QStr>>,
    pub a_circ: Vec<Vec<QStr>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallInfo {
    pub rays: Vec<Vec<QStr>>,
    pub lineality: Vec<Vec<QStr>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeBlock {
    pub description: String,
    /// `C̄ = {γ ≤ 0}`, functionals in `a`-coordinates.
    pub inequalities: Vec<Vec<QStr>>,
    /// Facet functionals, primitive in simple-root coordinates.
    pub facets: Vec<Vec<i64>>,
    pub rays: Vec<Vec<QStr>>,
    /// Basis of the edge `a_E`.
    pub edge: Vec<Vec<QStr>>,
    pub walls: Vec<WallInfo>,
    pub face_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibilityBlock {
    pub base_point: AdmissibilityReport,
    pub method: AdmissibleMethod,
    pub attempts: usize,
    pub point_word: Vec<WordEntry>,
    pub point: AdmissibilityReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorInfo {
    pub functional: Vec<i64>,
    pub witness: Witness,
    pub label: String,
    /// Action on `a/a_h` in the basis `a_circ`.
    pub matrix: Vec<Vec<QStr>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimitMatch {
    pub signs: Vec<i8>,
    pub representative: Vec<QStr>,
    pub label: String,
    pub character: Vec<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylBlock {
    pub order: usize,
    pub coxeter_type: String,
    pub coxeter_orders: Vec<Vec<u32>>,
    pub generators: Vec<GeneratorInfo>,
    pub labels: Vec<String>,
    pub limit_matches: Vec<LimitMatch>,
    pub limit_labels: Vec<String>,
    /// Wall-generated cosets and matrices equal those realized by limits.
    pub agreement: bool,
    pub tiling: TilingReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub suite: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub space: SpaceMeta,
    pub adapted: bool,
    pub q: QBlock,
    pub t: TBlock,
    pub cone: ConeBlock,
    pub admissibility: AdmissibilityBlock,
    pub weyl: WeylBlock,
    pub spherical_roots: SphericalRootData,
    #[serde(default)]
    pub verification: Vec<CheckResult>,
}

/// Intermediate objects kept alive for verification suites.
pub struct Pipeline {
    pub space: Space,
    pub analysis: SphericalAnalysis,
    pub cone: Cone,
    pub search: AdmissibleSearch,
    pub admissible_analysis: SphericalAnalysis,
    pub weyl: LittleWeylGroup,
    pub limits: LimitCosets,
    pub roots: SphericalRootData,
}

fn rows_q(v: &[Vector]) -> Vec<Vec<QStr>> {
    v.iter().map(|r| to_qstr(r)).collect()
}

fn matrix_q(m: &Matrix) -> Vec<Vec<QStr>> {
    rows_q(&m.rows())
}

/// Writes a functional on `a` in simple-root coordinates, if it vanishes on the center.
pub fn functional_to_roots(g: &LieAlgebra, f: &[crate::Q]) -> Option<Vector> {
    let r = g.rank();
    let cols: Vec<Vector> = (0..r).map(|i| g.root_functional(g.simple_root(i))).collect();
    Matrix::from_cols(&cols, g.a_dim()).solve(f)
}

pub fn primitive_root_coords(g: &LieAlgebra, f: &[crate::Q]) -> Result<Vec<i64>> {
    let c = functional_to_roots(g, f).ok_or_else(|| Error::Contract("facet functional is not in the root span".into()))?;
    Ok(to_i64_vec(&primitive_integer(&c)))
}

pub fn describe_cone(cone: &Cone) -> String {
    let n = cone.ambient_dim();
    let facets = cone.facets().len();
    if facets == 0 {
        "all of a".into()
    } else if facets == 1 && cone.lineality().dim() + 1 == n {
        "closed half-space".into()
    } else {
        format!("polyhedral cone with {facets} facets, edge of dimension {}", cone.lineality().dim())
    }
}

pub fn run_pipeline(space: &Space, opts: &Options) -> Result<Pipeline> {
    let g = &space.g;
    let analysis = SphericalAnalysis::new(g, &space.point.h_z)?;
    let cone = analysis.compression_cone(g);
    let search = find_admissible(g, &space.point, opts.seed, opts.max_iters)?;
    let admissible_analysis = SphericalAnalysis::new(g, &search.point.h_z)?;
    let weyl = little_weyl_group(g, &analysis, DEFAULT_MAX_ORDER)?;
    let limits = weyl_from_limits(g, &admissible_analysis, opts.lattice)?;
    let roots = spherical_roots(g, &analysis, &weyl)?;
    Ok(Pipeline { space: space.clone(), analysis, cone, search, admissible_analysis, weyl, limits, roots })
}

impl Pipeline {
    pub fn report(&self, opts: &Options) -> Result<Report> {
        let g = &self.space.g;
        let an = &self.analysis;
        let levi = &an.levi;
        let coords = |ids: &[crate::lie::RootId]| ids.iter().map(|&r| g.root(r)).collect::<Vec<_>>();
        let q = QBlock {
            sigma_q: coords(&levi.sigma_q),
            sigma_0: coords(&levi.sigma_0),
            l_q_dim: levi.l_q.dim(),
            l_q_nc_dim: levi.l_q_nc.dim(),
            n_q_dim: levi.n_q.dim(),
            witness: to_qstr(&levi.witness),
        };
        let t = TBlock {
            t: an
                .t_map
                .iter()
                .map(|(&alpha, v)| TEntry { root: g.root(alpha), image: to_qstr(v), support: an.supports[&alpha].clone() })
                .collect(),
            t_perp: an.tperp.iter().map(|(x, y)| (to_qstr(x), to_qstr(y))).collect(),
            s_z: an.s_z.clone(),
            indecomposables: an.indecomposables.clone(),
            a_h: rows_q(&an.a_h.basis()),
            a_circ: rows_q(&an.a_circ.basis()),
        };
        let mut facets = self
            .cone
            .facets()
            .iter()
            .map(|f| primitive_root_coords(g, f))
            .collect::<Result<Vec<_>>>()?;
        facets.sort();
        let walls = self.cone.walls();
        let cone = ConeBlock {
            description: describe_cone(&self.cone),
            inequalities: rows_q(self.cone.inequalities()),
            facets,
            rays: rows_q(self.cone.rays()),
            edge: rows_q(&self.cone.edge().basis()),
            walls: walls
                .iter()
                .map(|w| WallInfo { rays: rows_q(w.rays()), lineality: rows_q(&w.lineality().basis()) })
                .collect(),
            face_count: self.cone.faces().len(),
        };
        let admissibility = AdmissibilityBlock {
            base_point: is_admissible(g, an)?,
            method: self.search.method.clone(),
            attempts: self.search.attempts,
            point_word: self.search.point.word.clone(),
            point: self.search.report.clone(),
        };
        let w = &self.weyl;
        let labels: Vec<String> = w.labels().into_iter().collect();
        let limit_labels: Vec<String> = self.limits.labels().into_iter().collect();
        let wall_matrices: std::collections::BTreeSet<Vec<Vector>> = w.elements.iter().map(|e| e.matrix.rows()).collect();
        let agreement = labels == limit_labels && wall_matrices == self.limits.matrices();
        let weyl = WeylBlock {
            order: w.order(),
            coxeter_type: w.coxeter_type.clone(),
            coxeter_orders: w.coxeter_orders.clone(),
            generators: w
                .generators
                .iter()
                .map(|gen| GeneratorInfo {
                    functional: gen.functional.clone(),
                    witness: gen.witness.clone(),
                    label: w.elements[w.index_of(&gen.matrix).expect("generator in group")].label.clone(),
                    matrix: matrix_q(&gen.matrix),
                })
                .collect(),
            labels,
            limit_matches: self
                .limits
                .chambers
                .iter()
                .map(|c| LimitMatch {
                    signs: c.signs.clone(),
                    representative: to_qstr(&c.representative),
                    label: c.label.clone(),
                    character: c.character.clone(),
                })
                .collect(),
            limit_labels,
            agreement,
            tiling: check_tiling(w, opts.tiling_radius),
        };
        let space = SpaceMeta {
            name: self.space.name.clone(),
            lie_algebra: self.space.algebra.clone(),
            dim: g.dim(),
            subalgebra_dim: self.space.point.h.dim(),
            base_point_word: self.space.point.word.clone(),
            h_z: rows_q(&self.space.point.h_z.basis()),
        };
        Ok(Report {
            schema_version: SCHEMA_VERSION,
            space,
            adapted: true,
            q,
            t,
            cone,
            admissibility,
            weyl,
            spherical_roots: self.roots.clone(),
            verification: vec![],
        })
    }
}

pub fn analyze(space: &Space, opts: &Options) -> Result<Report> {
    run_pipeline(space, opts)?.report(opts)
}

impl Report {
    /// The fields comparable with a catalog record.
    pub fn summary(&self) -> Expected {
        Expected {
            adapted: self.adapted,
            s_z: self.t.s_z.clone(),
            cone_facets: self.cone.facets.clone(),
            a_h_dim: self.t.a_h.len(),
            a_e_dim: self.cone.edge.len(),
            w_order: self.weyl.order,
            coxeter_type: self.weyl.coxeter_type.clone(),
            sigma_z: self.spherical_roots.roots.clone(),
            admissible: self.admissibility.base_point.admissible,
        }
    }
}

/// Field-by-field differences between claimed and computed records.
pub fn diff_expected(claimed: &Expected, computed: &Expected) -> Vec<String> {
    let a = serde_json::to_value(claimed).expect("serializable");
    let b = serde_json::to_value(computed).expect("serializable");
    let (a, b) = (a.as_object().expect("object"), b.as_object().expect("object"));
    a.iter()
        .filter(|(k, v)| b.get(*k) != Some(*v))
        .map(|(k, v)| format!("{k}: claimed {v}, computed {}", b.get(k).map(|x| x.to_string()).unwrap_or_default()))
        .collect()
}
