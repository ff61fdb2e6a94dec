//! Little Weyl group from wall reflections, its realization by limits, and the spherical roots.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::cones::{enumerate_chambers, Cone};
use crate::error::{Error, Result};
use crate::lie::{weyl_lift, word_label, LieAlgebra, MLattice, RootId, SignCharacterGroup, WeylGroup};
use crate::limits::{limit_along, order_regular_hyperplanes};
use crate::linalg::{dot, Matrix, Vector};
use crate::rational::{primitive_integer, q, to_i64_vec, QStr, Q};
use crate::spherical::{is_admissible, SphericalAnalysis};
use crate::subspace::Subspace;

/// Default bound on the closure of the wall reflections.
pub const DEFAULT_MAX_ORDER: usize = 2000;

/// Why a wall carries a reflection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// The wall functional is `multiple · root` with `root ∈ Σ`.
    Root { root: Vec<i64>, multiple: i64 },
    /// The wall functional is `β + γ` with `β` simple, `β ⊥ γ` and `v ∈ span(β^∨, γ^∨) ∩ a_h`.
    OrthogonalPair { beta: Vec<i64>, gamma: Vec<i64>, a_h_vector: Vec<QStr> },
}

#[derive(Clone, Debug)]
pub struct WallGenerator {
    /// The wall, in `a`-coordinates.
    pub wall: Cone,
    /// The element of `cS_z` cutting out the wall, in simple-root coordinates.
    pub functional: Vec<i64>,
    pub witness: Witness,
    /// Index of the lift in `W(Σ)`.
    pub lift: usize,
    /// Action on `a/a_h`, in coordinates of the echelon basis of `a°`.
    pub matrix: Matrix,
}

#[derive(Clone, Debug)]
pub struct LittleWeylElement {
    pub matrix: Matrix,
    pub lift: usize,
    /// Shortlex-minimal representative of `w · W(Σ_{l_Q})`.
    pub label: String,
}

#[derive(Clone, Debug)]
pub struct LittleWeylGroup {
    /// Basis of `a°`, the model of `a/a_h`, in `a`-coordinates.
    pub a_circ_basis: Vec<Vector>,
    /// `a_E ∩ a°` in `a°`-coordinates.
    pub edge: Subspace,
    /// `p_h(C̄)` in `a°`-coordinates.
    pub chamber: Cone,
    pub generators: Vec<WallGenerator>,
    /// Closure of the generators, the identity first.
    pub elements: Vec<LittleWeylElement>,
    /// `m_ij`, the order of `g_i g_j`.
    pub coxeter_orders: Vec<Vec<u32>>,
    pub coxeter_type: String,
}

impl LittleWeylGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn labels(&self) -> BTreeSet<String> {
        self.elements.iter().map(|e| e.label.clone()).collect()
    }

    pub fn index_of(&self, m: &Matrix) -> Option<usize> {
        self.elements.iter().position(|e| &e.matrix == m)
    }

    /// `Gram` matrix of `B` on the basis of `a°`.
    pub fn gram(&self, g: &LieAlgebra) -> Matrix {
        gram_on(g, &self.a_circ_basis)
    }
}

fn gram_on(g: &LieAlgebra, basis: &[Vector]) -> Matrix {
    let fa = g.form_on_a();
    let rows: Vec<Vector> = basis.iter().map(|x| basis.iter().map(|y| dot(x, &fa.apply(y))).collect()).collect();
    Matrix::from_rows(&rows, basis.len())
}

/// Reflection `X ↦ X − β(X) β^∨` on `a`-coordinates.
pub fn root_reflection(g: &LieAlgebra, beta: RootId) -> Matrix {
    let n = g.a_dim();
    let f = g.root_functional(beta);
    let c = g.coroot(beta);
    let mut m = Matrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            let v = m.get(i, j) - &c[i] * &f[j];
            m.set(i, j, v);
        }
    }
    m
}

/// Restriction of a map on `a` preserving `a°` to the echelon basis of `a°`.
pub fn restrict(a_circ: &Subspace, m: &Matrix) -> Result<Matrix> {
    let basis = a_circ.basis();
    let cols = basis
        .iter()
        .map(|b| {
            a_circ
                .coordinates(&m.apply(b))
                .ok_or_else(|| Error::Contract("Weyl element does not preserve a°".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_cols(&cols, basis.len()))
}

/// Subgroup `W(Σ_{l_Q})` of `W(Σ)` as a set of indices.
pub fn levi_subgroup(g: &LieAlgebra, wg: &WeylGroup, sigma_0: &[RootId]) -> BTreeSet<usize> {
    let gens: Vec<usize> = sigma_0
        .iter()
        .filter(|&&r| g.is_positive(r))
        .map(|&r| wg.index_of_matrix(&root_reflection(g, r)).expect("root reflection lies in W(Σ)"))
        .collect();
    let mut set = BTreeSet::from([0usize]);
    let mut frontier = vec![0usize];
    while let Some(x) = frontier.pop() {
        for &s in &gens {
            let y = wg.compose(x, s);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    set
}

/// Shortlex-minimal word in `w · W_L`.
pub fn coset_label(wg: &WeylGroup, levi: &BTreeSet<usize>, w: usize) -> String {
    let best = levi
        .iter()
        .map(|&u| wg.compose(w, u))
        .min_by(|&a, &b| {
            let (wa, wb) = (&wg.elements[a].word, &wg.elements[b].word);
            wa.len().cmp(&wb.len()).then_with(|| wa.cmp(wb))
        })
        .expect("nonempty subgroup");
    word_label(&wg.elements[best].word)
}

/// The reflection attached to one wall of the compression cone.
pub fn wall_reflection(g: &LieAlgebra, an: &SphericalAnalysis, wg: &WeylGroup, wall: &Cone) -> Result<WallGenerator> {
    let span = wall.span().basis();
    let candidates: Vec<&Vec<i64>> = an
        .indecomposables
        .iter()
        .filter(|s| {
            let f = g.functional(s);
            span.iter().all(|x| dot(&f, x).is_zero())
        })
        .collect();
    if candidates.is_empty() {
        return Err(Error::Contract("no element of cS_z vanishes on the wall".into()));
    }
    let a_h_g = an.a_h.clone();
    for s in &candidates {
        // α ∈ Σ ∪ 2Σ
        for (mult, root) in [(1, s.to_vec()), (2, s.iter().map(|x| x / 2).collect())] {
            if mult == 2 && s.iter().any(|x| x % 2 != 0) {
                continue;
            }
            if let Some(r) = g.root_id(&root) {
                let lift = wg.index_of_matrix(&root_reflection(g, r)).expect("reflection in W(Σ)");
                let witness = Witness::Root { root, multiple: mult };
                return finish(an, wg, wall, s, witness, lift);
            }
        }
    }
    for s in &candidates {
        for i in 0..g.rank() {
            let beta = g.simple_root(i);
            let gamma_c: Vec<i64> = s.iter().zip(g.root(beta)).map(|(a, b)| a - b).collect();
            let Some(gamma) = g.root_id(&gamma_c) else { continue };
            // β ⊥ γ iff ⟨γ, β^∨⟩ = 0.
            if !an.sigma_q().contains(&gamma) || !dot(&g.root_functional(gamma), &g.coroot(beta)).is_zero() {
                continue;
            }
            let pair = Subspace::span(g.a_dim(), &[g.coroot(beta), g.coroot(gamma)]);
            let meet = pair.intersect(&a_h_g);
            let Some(v) = meet.basis().into_iter().next() else { continue };
            let lift = wg.compose(
                wg.index_of_matrix(&root_reflection(g, beta)).expect("in W(Σ)"),
                wg.index_of_matrix(&root_reflection(g, gamma)).expect("in W(Σ)"),
            );
            let witness = Witness::OrthogonalPair {
                beta: g.root(beta),
                gamma: gamma_c,
                a_h_vector: v.iter().map(QStr::from).collect(),
            };
            return finish(an, wg, wall, s, witness, lift);
        }
    }
    Err(Error::Contract(format!("wall cut out by {candidates:?} has neither a root nor an orthogonal-pair witness")))
}

fn finish(
    an: &SphericalAnalysis,
    wg: &WeylGroup,
    wall: &Cone,
    functional: &[i64],
    witness: Witness,
    lift: usize,
) -> Result<WallGenerator> {
    let matrix = restrict(&an.a_circ, &wg.elements[lift].matrix)?;
    let n = matrix.nrows();
    if !matrix.mul(&matrix).is_identity() || matrix.sub(&Matrix::identity(n)).rank() != 1 {
        return Err(Error::Contract("wall generator is not a reflection on a/a_h".into()));
    }
    // Fixes a_F/a_h pointwise.
    for x in wall.span().intersect(&an.a_circ).basis() {
        let c = an.a_circ.coordinates(&x).expect("in a°");
        if matrix.apply(&c) != c {
            return Err(Error::Contract("wall generator moves the wall".into()));
        }
    }
    Ok(WallGenerator { wall: wall.clone(), functional: functional.to_vec(), witness, lift, matrix })
}

/// `p_h(C̄)` in `a°`-coordinates.
pub fn projected_cone(g: &LieAlgebra, an: &SphericalAnalysis) -> Cone {
    let basis = an.a_circ.basis();
    let ineqs: Vec<Vector> = an
        .s_z_functionals(g)
        .iter()
        .map(|f| basis.iter().map(|b| dot(f, b)).collect())
        .collect();
    Cone::from_inequalities(basis.len(), &ineqs)
}

pub fn little_weyl_group(g: &LieAlgebra, an: &SphericalAnalysis, max_order: usize) -> Result<LittleWeylGroup> {
    let wg = WeylGroup::new(g);
    let levi = levi_subgroup(g, &wg, &an.levi.sigma_0);
    let cone = an.compression_cone(g);
    let generators = cone
        .walls()
        .iter()
        .map(|w| wall_reflection(g, an, &wg, w))
        .collect::<Result<Vec<_>>>()?;
    let k = an.a_circ.dim();
    let mut elements =
        vec![LittleWeylElement { matrix: Matrix::identity(k), lift: 0, label: coset_label(&wg, &levi, 0) }];
    let mut seen: HashMap<Matrix, usize> = HashMap::from([(Matrix::identity(k), 0)]);
    let mut head = 0;
    while head < elements.len() {
        let (m, lift) = (elements[head].matrix.clone(), elements[head].lift);
        head += 1;
        for gen in &generators {
            let prod = m.mul(&gen.matrix);
            if seen.contains_key(&prod) {
                continue;
            }
            if elements.len() >= max_order {
                return Err(Error::Exhausted(format!("closure of the wall reflections exceeds {max_order} elements")));
            }
            let l = wg.compose(lift, gen.lift);
            seen.insert(prod.clone(), elements.len());
            elements.push(LittleWeylElement { matrix: prod, lift: l, label: coset_label(&wg, &levi, l) });
        }
    }
    let coxeter_orders: Vec<Vec<u32>> = generators
        .iter()
        .map(|a| generators.iter().map(|b| element_order(&a.matrix.mul(&b.matrix))).collect())
        .collect();
    let coxeter_type = classify_coxeter(&coxeter_orders);
    let a_circ_basis = an.a_circ.basis();
    let edge_vecs: Vec<Vector> = cone
        .lineality()
        .intersect(&an.a_circ)
        .basis()
        .iter()
        .map(|x| an.a_circ.coordinates(x).expect("in a°"))
        .collect();
    let edge = Subspace::span(k, &edge_vecs);
    let w = LittleWeylGroup { a_circ_basis, edge, chamber: projected_cone(g, an), generators, elements, coxeter_orders, coxeter_type };
    check_group(g, &w)?;
    Ok(w)
}

fn element_order(m: &Matrix) -> u32 {
    let mut p = m.clone();
    for k in 1..=24 {
        if p.is_identity() {
            return k;
        }
        p = p.mul(m);
    }
    0
}

/// Structural checks: reflections, closure, inverses, orthogonality, trivial action on the edge.
fn check_group(g: &LieAlgebra, w: &LittleWeylGroup) -> Result<()> {
    let index: HashMap<&Matrix, usize> = w.elements.iter().enumerate().map(|(i, e)| (&e.matrix, i)).collect();
    let gram = w.gram(g);
    for e in &w.elements {
        if e.matrix.transpose().mul(&gram).mul(&e.matrix) != gram {
            return Err(Error::Contract("little Weyl group element is not B-orthogonal".into()));
        }
        let inv = e.matrix.inverse().ok_or_else(|| Error::Contract("singular element".into()))?;
        if !index.contains_key(&inv) {
            return Err(Error::Contract("element set is not closed under inverses".into()));
        }
        for f in &w.elements {
            if !index.contains_key(&e.matrix.mul(&f.matrix)) {
                return Err(Error::Contract("element set is not closed under products".into()));
            }
        }
        for x in w.edge.basis() {
            if e.matrix.apply(&x) != x {
                return Err(Error::Contract("element acts non-trivially on a_E/a_h".into()));
            }
        }
    }
    Ok(())
}

/// Tiling of `a/a_h` by the translates of `p_h(C̄)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TilingReport {
    pub samples: usize,
    pub uncovered: Vec<Vec<QStr>>,
    /// Pairs `(i, j)` whose open translates meet.
    pub overlapping: Vec<(usize, usize)>,
}

impl TilingReport {
    pub fn passes(&self) -> bool {
        self.uncovered.is_empty() && self.overlapping.is_empty()
    }
}

/// Tests coverage on integer grid points of radius `radius` and disjointness by strict infeasibility.
pub fn check_tiling(w: &LittleWeylGroup, radius: i64) -> TilingReport {
    let k = w.chamber.ambient_dim();
    let translates: Vec<Cone> = w.elements.iter().map(|e| w.chamber.transform(&e.matrix)).collect();
    let mut uncovered = Vec::new();
    let side = (2 * radius + 1) as usize;
    let total = side.pow(k as u32);
    for idx in 0..total {
        let mut rest = idx;
        let x: Vector = (0..k)
            .map(|_| {
                let c = (rest % side) as i64 - radius;
                rest /= side;
                q(c)
            })
            .collect();
        if !translates.iter().any(|c| c.contains(&x)) {
            uncovered.push(x.iter().map(QStr::from).collect());
        }
    }
    let mut overlapping = Vec::new();
    for i in 0..translates.len() {
        for j in i + 1..translates.len() {
            let mut ineqs = translates[i].inequalities().to_vec();
            ineqs.extend(translates[j].inequalities().iter().cloned());
            if Cone::from_inequalities(k, &ineqs).is_strictly_feasible() {
                overlapping.push((i, j));
            }
        }
    }
    TilingReport { samples: total, uncovered, overlapping }
}

/// Component-wise Coxeter type from the matrix of orders, e.g. `"A1xA1"`.
pub fn classify_coxeter(m: &[Vec<u32>]) -> String {
    let n = m.len();
    if n == 0 {
        return "trivial".into();
    }
    let mut comp = vec![usize::MAX; n];
    let mut labels = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut nodes = vec![start];
        comp[start] = start;
        let mut i = 0;
        while i < nodes.len() {
            let a = nodes[i];
            i += 1;
            for b in 0..n {
                if comp[b] == usize::MAX && m[a][b] > 2 {
                    comp[b] = start;
                    nodes.push(b);
                }
            }
        }
        labels.push(classify_component(m, &nodes));
    }
    labels.sort();
    labels.join("x")
}

fn classify_component(m: &[Vec<u32>], nodes: &[usize]) -> String {
    let r = nodes.len();
    if r == 1 {
        return "A1".into();
    }
    let edges: Vec<(usize, usize, u32)> = nodes
        .iter()
        .flat_map(|&a| nodes.iter().filter(move |&&b| b > a).map(move |&b| (a, b, m[a][b])))
        .filter(|e| e.2 > 2)
        .collect();
    if r == 2 {
        return match edges[0].2 {
            3 => "A2".into(),
            4 => "B2".into(),
            6 => "G2".into(),
            k => format!("I2({k})"),
        };
    }
    let degree = |v: usize| edges.iter().filter(|e| e.0 == v || e.1 == v).count();
    let max_deg = nodes.iter().map(|&v| degree(v)).max().unwrap_or(0);
    let is_tree = edges.len() + 1 == r;
    let heavy: Vec<&(usize, usize, u32)> = edges.iter().filter(|e| e.2 > 3).collect();
    if !is_tree {
        return format!("affine-or-infinite({r})");
    }
    if max_deg <= 2 {
        match heavy.as_slice() {
            [] => return format!("A{r}"),
            [e] if e.2 == 4 => {
                let end = degree(e.0) == 1 || degree(e.1) == 1;
                if end {
                    return format!("B{r}");
                }
                if r == 4 {
                    return "F4".into();
                }
            }
            _ => {}
        }
    } else if max_deg == 3 && heavy.is_empty() {
        let center = *nodes.iter().find(|&&v| degree(v) == 3).expect("branch node");
        let mut arms: Vec<usize> = Vec::new();
        for e in edges.iter().filter(|e| e.0 == center || e.1 == center) {
            let mut prev = center;
            let mut cur = if e.0 == center { e.1 } else { e.0 };
            let mut len = 1;
            loop {
                let next = edges.iter().find_map(|f| {
                    if f.0 == cur && f.1 != prev {
                        Some(f.1)
                    } else if f.1 == cur && f.0 != prev {
                        Some(f.0)
                    } else {
                        None
                    }
                });
                match next {
                    Some(nx) => {
                        prev = cur;
                        cur = nx;
                        len += 1;
                    }
                    None => break,
                }
            }
            arms.push(len);
        }
        arms.sort();
        return match arms.as_slice() {
            [1, 1, _] => format!("D{r}"),
            [1, 2, 2] => "E6".into(),
            [1, 2, 3] => "E7".into(),
            [1, 2, 4] => "E8".into(),
            _ => format!("unknown({r})"),
        };
    }
    format!("unknown({r})")
}

/// Matched coset for one order-regular chamber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChamberMatch {
    pub signs: Vec<i8>,
    pub representative: Vector,
    pub label: String,
    /// Action of the matched `w` on `a/a_h`.
    pub matrix: Matrix,
    /// The sign character realizing `h_{z,X} = χ · Ad(n_w) h_∅`.
    pub character: Vec<bool>,
}

#[derive(Clone, Debug)]
pub struct LimitCosets {
    pub chambers: Vec<ChamberMatch>,
    pub candidates: usize,
}

impl LimitCosets {
    pub fn labels(&self) -> BTreeSet<String> {
        self.chambers.iter().map(|c| c.label.clone()).collect()
    }

    pub fn matrices(&self) -> BTreeSet<Vec<Vector>> {
        self.chambers.iter().map(|c| c.matrix.rows()).collect()
    }
}

/// Dimension of `L ∩ g_λ` for each root (in root order), then of `L ∩ a`.
fn weight_profile(g: &LieAlgebra, l: &Subspace) -> Vec<usize> {
    let mut p: Vec<usize> = g.all_roots().map(|r| l.intersect(&g.root_space(r)).dim()).collect();
    p.push(l.intersect(&g.a()).dim());
    p
}

/// Finds `w ∈ W(Σ)` and `χ` with `L = χ · Ad(n_w) h_∅` for limits `L` of one adapted point.
pub struct LimitMatcher<'a> {
    g: &'a LieAlgebra,
    an: &'a SphericalAnalysis,
    wg: WeylGroup,
    levi: BTreeSet<usize>,
    /// `w` with `w(a_h) = a_h` permuting `Σ_0`.
    candidates: Vec<usize>,
    base_profile: Vec<usize>,
    chars: SignCharacterGroup,
    lifts: BTreeMap<usize, Subspace>,
}

/// A coset realized by one limit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetMatch {
    pub label: String,
    pub lift: usize,
    pub character: Vec<bool>,
}

impl<'a> LimitMatcher<'a> {
    pub fn new(g: &'a LieAlgebra, an: &'a SphericalAnalysis, lattice: MLattice) -> Self {
        let wg = WeylGroup::new(g);
        let levi = levi_subgroup(g, &wg, &an.levi.sigma_0);
        let sigma_0: BTreeSet<RootId> = an.levi.sigma_0.iter().copied().collect();
        let a_h_g = Subspace::span(g.a_dim(), &an.a_h.basis());
        let candidates: Vec<usize> = (0..wg.order())
            .filter(|&i| {
                let e = &wg.elements[i];
                a_h_g.map(&e.matrix) == a_h_g && sigma_0.iter().all(|r| sigma_0.contains(&e.perm[*r]))
            })
            .collect();
        let base_profile = weight_profile(g, &an.h_empty);
        let chars = SignCharacterGroup::new(g, lattice);
        LimitMatcher { g, an, wg, levi, candidates, base_profile, chars, lifts: BTreeMap::new() }
    }

    pub fn candidate_count(&self) -> usize {
        self.candidates.len()
    }

    /// Every matching coset; more than one signals an inadequate model of `M`.
    pub fn matches(&mut self, lim: &Subspace) -> Vec<CosetMatch> {
        let g = self.g;
        let n_roots = g.num_roots();
        let profile = weight_profile(g, lim);
        let mut found: Vec<CosetMatch> = Vec::new();
        for &w in &self.candidates {
            let perm = &self.wg.elements[w].perm;
            // Ad(n_w) carries g_β to g_{wβ}.
            let mut moved = vec![0; n_roots + 1];
            for r in 0..n_roots {
                moved[perm[r]] = self.base_profile[r];
            }
            moved[n_roots] = self.base_profile[n_roots];
            if moved != profile {
                continue;
            }
            let (wg, an) = (&self.wg, self.an);
            let image = self
                .lifts
                .entry(w)
                .or_insert_with(|| an.h_empty.map(&weyl_lift(g, &wg.elements[w].word).adjoint_lift))
                .clone();
            if let Some(chi) = self.chars.elements.iter().find(|chi| image.map(&SignCharacterGroup::matrix(g, chi)) == *lim) {
                let label = coset_label(&self.wg, &self.levi, w);
                if !found.iter().any(|m| m.label == label) {
                    found.push(CosetMatch { label, lift: w, character: chi.clone() });
                }
            }
        }
        found
    }

    /// Action of a matched lift on `a/a_h`.
    pub fn matrix(&self, m: &CosetMatch) -> Result<Matrix> {
        restrict(&self.an.a_circ, &self.wg.elements[m.lift].matrix)
    }
}

/// `{w N_∅ : h_{z,X} = Ad(w) h_∅ for some order-regular X}`, one match per chamber.
pub fn weyl_from_limits(g: &LieAlgebra, an: &SphericalAnalysis, lattice: MLattice) -> Result<LimitCosets> {
    if !is_admissible(g, an)?.admissible {
        return Err(Error::Invalid("weyl_from_limits needs an admissible point".into()));
    }
    let mut matcher = LimitMatcher::new(g, an, lattice);
    let set = enumerate_chambers(g.a_dim(), &order_regular_hyperplanes(g))?;
    let mut chambers = Vec::new();
    for ch in &set.chambers {
        let lim = limit_along(g, &an.h_z, &ch.representative);
        let found = matcher.matches(&lim);
        let m = match found.as_slice() {
            [] => return Err(Error::Contract(format!("chamber {:?}: limit is not conjugate to h_∅", ch.signs))),
            [m] => m.clone(),
            _ => {
                let labels: Vec<&str> = found.iter().map(|m| m.label.as_str()).collect();
                return Err(Error::Contract(format!("chamber {:?}: several cosets {labels:?} match", ch.signs)));
            }
        };
        chambers.push(ChamberMatch {
            signs: ch.signs.clone(),
            representative: ch.representative.clone(),
            matrix: matcher.matrix(&m)?,
            label: m.label,
            character: m.character,
        });
    }
    Ok(LimitCosets { chambers, candidates: matcher.candidate_count() })
}

/// `Σ_Z` with its lattice and Coxeter data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphericalRootData {
    /// Basis of `Λ = (a/a_E)* ∩ ZΣ` in simple-root coordinates.
    pub lattice_basis: Vec<Vec<i64>>,
    /// `Σ_Z` in simple-root coordinates, sorted.
    pub roots: Vec<Vec<i64>>,
    pub coxeter_orders: Vec<Vec<u32>>,
    /// Action of each element of `W` on `Λ` in the lattice basis; integral by construction.
    pub lattice_action: Vec<Vec<Vec<i64>>>,
}

/// Integer kernel basis of an integer matrix, by unimodular column operations.
pub fn integer_kernel(rows: &[Vec<i64>], ncols: usize) -> Vec<Vec<i64>> {
    let mut a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut u: Vec<Vec<i128>> = (0..ncols).map(|i| (0..ncols).map(|j| i128::from(i == j)).collect()).collect();
    // Columns are stored as the second index of `a` and the rows of `u`.
    let mut pivot = 0;
    for row in 0..a.len() {
        if pivot >= ncols {
            break;
        }
        loop {
            let nz: Vec<usize> = (pivot..ncols).filter(|&c| a[row][c] != 0).collect();
            if nz.is_empty() {
                break;
            }
            let c_min = *nz.iter().min_by_key(|&&c| a[row][c].abs()).expect("nonempty");
            swap_cols(&mut a, &mut u, pivot, c_min);
            if nz.len() == 1 {
                pivot += 1;
                break;
            }
            for c in pivot + 1..ncols {
                let f = a[row][c] / a[row][pivot];
                if f != 0 {
                    for r in a.iter_mut() {
                        r[c] -= f * r[pivot];
                    }
                    let (head, tail) = u.split_at_mut(c);
                    for (x, y) in tail[0].iter_mut().zip(&head[pivot]) {
                        *x -= f * y;
                    }
                }
            }
        }
    }
    u[pivot..].iter().map(|v| v.iter().map(|&x| x as i64).collect()).collect()
}

fn swap_cols(a: &mut [Vec<i128>], u: &mut [Vec<i128>], i: usize, j: usize) {
    if i == j {
        return;
    }
    for r in a.iter_mut() {
        r.swap(i, j);
    }
    u.swap(i, j);
}

/// Spherical roots from the reflections of `W` acting on `a/a_E`.
pub fn spherical_roots(g: &LieAlgebra, an: &SphericalAnalysis, w: &LittleWeylGroup) -> Result<SphericalRootData> {
    let r = g.rank();
    let edge_a = an.compression_cone(g).lineality().clone();
    let edge_basis = edge_a.basis();
    // Λ: integer root combinations vanishing on a_E.
    let simple: Vec<Vector> = (0..r).map(|i| g.root_functional(g.simple_root(i))).collect();
    let int_rows: Vec<Vec<i64>> = edge_basis
        .iter()
        .map(|x| {
            let row: Vector = simple.iter().map(|s| dot(s, x)).collect();
            to_i64_vec(&primitive_integer(&row))
        })
        .collect();
    let lattice_basis = integer_kernel(&int_rows, r);
    // a'' = a_E^⊥ inside a, a model of a/a_E.
    let quot = edge_a.orthogonal(&g.form_on_a());
    let qb = quot.basis();
    let k = qb.len();
    if lattice_basis.len() != k {
        return Err(Error::Contract("rank of Λ differs from dim a/a_E".into()));
    }
    let lam_fun = |n: &[i64]| -> Vector {
        let mut f = vec![Q::zero(); g.a_dim()];
        for (c, s) in n.iter().zip(&simple) {
            crate::linalg::axpy(&mut f, &q(*c), s);
        }
        qb.iter().map(|b| dot(&f, b)).collect()
    };
    // Rows: lattice basis vectors as functionals on a''.
    let p = Matrix::from_rows(&lattice_basis.iter().map(|n| lam_fun(n)).collect::<Vec<_>>(), k);
    let p_inv = p.inverse().ok_or_else(|| Error::Contract("Λ does not span (a/a_E)*".into()))?;
    // Each element of W on a''.
    let to_quot = |m: &Matrix| -> Result<Matrix> {
        let cols = qb
            .iter()
            .map(|b| {
                let c = an.a_circ.coordinates(b).ok_or_else(|| Error::Contract("a/a_E model is not inside a°".into()))?;
                let img = m.apply(&c);
                let mut v = vec![Q::zero(); g.a_dim()];
                for (ci, bb) in img.iter().zip(&w.a_circ_basis) {
                    crate::linalg::axpy(&mut v, ci, bb);
                }
                quot.coordinates(&v).ok_or_else(|| Error::Contract("W does not preserve a_E^⊥".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_cols(&cols, k))
    };
    let on_quot: Vec<Matrix> = w.elements.iter().map(|e| to_quot(&e.matrix)).collect::<Result<_>>()?;
    let mut lattice_action = Vec::new();
    for m in &on_quot {
        // (w·λ)(b) = λ(w⁻¹ b); in lattice coordinates c ↦ c · P · (M⁻¹)ᵀ... written out as rows.
        let minv = m.inverse().expect("invertible");
        let act = p.mul(&minv).mul(&p_inv);
        let mut int_rows = Vec::new();
        for i in 0..k {
            let row: Option<Vec<i64>> = act.row(i).iter().map(|x| x.is_integer().then(|| x.to_integer().try_into().ok()).flatten()).collect();
            int_rows.push(row.ok_or_else(|| Error::Contract("W does not preserve Λ".into()))?);
        }
        lattice_action.push(int_rows);
    }
    let mut roots: BTreeSet<Vec<i64>> = BTreeSet::new();
    let lattice_m = Matrix::from_rows(
        &lattice_basis.iter().map(|n| n.iter().map(|&x| q(x)).collect()).collect::<Vec<_>>(),
        r,
    );
    for m in &on_quot {
        if m.sub(&Matrix::identity(k)).rank() != 1 {
            continue;
        }
        // −1 eigenspace of λ ↦ λ ∘ M⁻¹ on rows.
        let minv = m.inverse().expect("invertible");
        let op = minv.add(&Matrix::identity(k)).transpose();
        let ker = op.kernel();
        if ker.len() != 1 {
            return Err(Error::Contract("reflection with a non-line −1 eigenspace".into()));
        }
        let coeffs = p_inv.transpose().apply(&ker[0]);
        let root_coords = lattice_m.transpose().apply(&coeffs);
        let prim = to_i64_vec(&primitive_integer(&root_coords));
        roots.insert(prim.iter().map(|x| -x).collect());
        roots.insert(prim);
    }
    let roots: Vec<Vec<i64>> = roots.into_iter().collect();
    check_root_system(g, &qb, &on_quot, &roots, &lam_fun)?;
    Ok(SphericalRootData { lattice_basis, roots, coxeter_orders: w.coxeter_orders.clone(), lattice_action })
}

/// `Σ_Z` is `W`-stable and its reflections generate `W` on `a/a_E`.
fn check_root_system(
    g: &LieAlgebra,
    qb: &[Vector],
    on_quot: &[Matrix],
    roots: &[Vec<i64>],
    lam_fun: &dyn Fn(&[i64]) -> Vector,
) -> Result<()> {
    let k = qb.len();
    let gram = gram_on(g, qb);
    let gram_inv = if k == 0 { Matrix::identity(0) } else { gram.inverse().ok_or_else(|| Error::Contract("B degenerate on a/a_E".into()))? };
    let funs: Vec<Vector> = roots.iter().map(|r| lam_fun(r)).collect();
    let fun_set: BTreeSet<Vector> = funs.iter().cloned().collect();
    for m in on_quot {
        let minv = m.inverse().expect("invertible");
        for f in &funs {
            if !fun_set.contains(&minv.transpose().apply(f)) {
                return Err(Error::Contract("Σ_Z is not W-stable".into()));
            }
        }
    }
    let refl: Vec<Matrix> = funs
        .iter()
        .map(|f| {
            let sharp = gram_inv.apply(f);
            let norm = dot(f, &sharp);
            let mut m = Matrix::identity(k);
            for i in 0..k {
                for j in 0..k {
                    let v = m.get(i, j) - q(2) * &sharp[i] * &f[j] / &norm;
                    m.set(i, j, v);
                }
            }
            m
        })
        .collect();
    let mut group: BTreeSet<Vec<Vector>> = BTreeSet::from([Matrix::identity(k).rows()]);
    let mut frontier = vec![Matrix::identity(k)];
    while let Some(x) = frontier.pop() {
        for s in &refl {
            let y = x.mul(s);
            if group.insert(y.rows()) {
                frontier.push(y);
            }
        }
    }
    let target: BTreeSet<Vec<Vector>> = on_quot.iter().map(|m| m.rows()).collect();
    if target.len() != on_quot.len() {
        return Err(Error::Contract("W does not act faithfully on a/a_E".into()));
    }
    if group != target {
        return Err(Error::Contract("W(Σ_Z) differs from W".into()));
    }
    Ok(())
}

/// The degeneration at a wall: its little Weyl group and whether it is `{1, s_F}`.
#[derive(Clone, Debug)]
pub struct WallDegenerationCheck {
    pub functional: Vec<i64>,
    pub order: usize,
    pub matches_generator: bool,
}

pub fn wall_degeneration_checks(g: &LieAlgebra, an: &SphericalAnalysis, w: &LittleWeylGroup) -> Result<Vec<WallDegenerationCheck>> {
    w.generators
        .iter()
        .map(|gen| {
            let deg = crate::spherical::boundary_degeneration(g, an, &gen.wall)?;
            let an_f = SphericalAnalysis::new(g, &deg.h_zf)?;
            let wf = little_weyl_group(g, &an_f, DEFAULT_MAX_ORDER)?;
            let matches_generator = an_f.a_circ == an.a_circ
                && wf.order() == 2
                && wf.elements[1].matrix == gen.matrix;
            Ok(WallDegenerationCheck { functional: gen.functional.clone(), order: wf.order(), matches_generator })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_kernel_basics() {
        assert_eq!(integer_kernel(&[vec![1, 1]], 2).len(), 1);
        let k = integer_kernel(&[vec![2, 4, 6]], 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!(2 * v[0] + 4 * v[1] + 6 * v[2], 0);
        }
        assert_eq!(integer_kernel(&[], 2).len(), 2);
    }

    #[test]
    fn coxeter_labels() {
        assert_eq!(classify_coxeter(&[]), "trivial");
        assert_eq!(classify_coxeter(&[vec![1]]), "A1");
        assert_eq!(classify_coxeter(&[vec![1, 3], vec![3, 1]]), "A2");
        assert_eq!(classify_coxeter(&[vec![1, 2], vec![2, 1]]), "A1xA1");
        assert_eq!(classify_coxeter(&[vec![1, 6], vec![6, 1]]), "G2");
        let b3 = vec![vec![1, 3, 2], vec![3, 1, 4], vec![2, 4, 1]];
        assert_eq!(classify_coxeter(&b3), "B3");
        let d4 = vec![vec![1, 3, 3, 3], vec![3, 1, 2, 2], vec![3, 2, 1, 2], vec![3, 2, 2, 1]];
        assert_eq!(classify_coxeter(&d4), "D4");
    }
}
