use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{weyl_lift, LieAlgebra, SignCharacterGroup};
use crate::linalg::{zero_vec, Matrix, Vector};
use crate::rational::{QStr, Q};
use crate::subspace::Subspace;

/// `c · X_β` for a root vector of the Chevalley basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootTerm {
    /// Root in simple-root coordinates.
    pub root: Vec<i64>,
    pub coeff: QStr,
}

/// One factor of a group element acting on the reference subalgebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WordEntry {
    /// `a ∈ A` given by its positive character values `a^{α_i}` on the simple roots.
    Torus(Vec<QStr>),
    /// `exp(Y)` with `Y` a combination of root vectors; `ad(Y)` must be nilpotent.
    Nilpotent(Vec<RootTerm>),
    /// Canonical lift `n_w` of a word in the simple reflections (0-based).
    Weyl(Vec<usize>),
    /// Sign character, `true` meaning −1 on that simple root.
    Sign(Vec<bool>),
}

impl WordEntry {
    /// Builds `exp(Y)` from an ambient vector supported on root spaces.
    pub fn nilpotent_from_vector(g: &LieAlgebra, y: &[Q]) -> WordEntry {
        let terms = g
            .all_roots()
            .filter_map(|r| {
                let c = &y[g.root_vector(r)];
                (!c.is_zero()).then(|| RootTerm { root: g.root(r), coeff: QStr(c.clone()) })
            })
            .collect();
        WordEntry::Nilpotent(terms)
    }

    /// The adjoint action of this factor on `g`.
    pub fn adjoint(&self, g: &LieAlgebra) -> Result<Matrix> {
        let r = g.rank();
        match self {
            WordEntry::Torus(vals) => {
                check_len(r, vals.len())?;
                if vals.iter().any(|v| !v.0.is_positive()) {
                    return Err(Error::Invalid("torus character values must be positive".into()));
                }
                let mut m = Matrix::identity(g.dim());
                for root in g.all_roots() {
                    let mut c = Q::one();
                    for (v, &e) in vals.iter().zip(&g.root(root)) {
                        let f = if e >= 0 { v.0.clone() } else { v.0.recip() };
                        for _ in 0..e.unsigned_abs() {
                            c *= &f;
                        }
                    }
                    let k = g.root_vector(root);
                    m.set(k, k, c);
                }
                Ok(m)
            }
            WordEntry::Nilpotent(terms) => {
                let mut y = zero_vec(g.dim());
                for t in terms {
                    let root = g
                        .root_id(&t.root)
                        .ok_or_else(|| Error::Invalid(format!("{:?} is not a root", t.root)))?;
                    y[g.root_vector(root)] += &t.coeff.0;
                }
                g.ad(&y)
                    .exp_nilpotent()
                    .ok_or_else(|| Error::Invalid("exponent requested for a non-nilpotent element".into()))
            }
            WordEntry::Weyl(word) => {
                if let Some(&i) = word.iter().find(|&&i| i >= r) {
                    return Err(Error::Invalid(format!("simple reflection index {i} out of range")));
                }
                Ok(weyl_lift(g, word).adjoint_lift)
            }
            WordEntry::Sign(signs) => {
                check_len(r, signs.len())?;
                Ok(SignCharacterGroup::matrix(g, signs))
            }
        }
    }
}

fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::Dimension { expected, got })
    }
}

/// A point `z = g_1 ⋯ g_k · z_0` with stabilizer `h_z = Ad(g_1 ⋯ g_k) h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasePoint {
    pub word: Vec<WordEntry>,
    pub h: Subspace,
    pub h_z: Subspace,
}

impl BasePoint {
    /// Left-multiplies the point by one more factor.
    pub fn act(&self, g: &LieAlgebra, entry: WordEntry) -> Result<BasePoint> {
        let h_z = self.h_z.map(&entry.adjoint(g)?);
        let mut word = vec![entry];
        word.extend(self.word.iter().cloned());
        Ok(BasePoint { word, h: self.h.clone(), h_z })
    }
}

pub fn is_subalgebra(g: &LieAlgebra, s: &Subspace) -> bool {
    let b = s.basis();
    (0..b.len()).all(|i| (i + 1..b.len()).all(|j| s.contains_vector(&g.bracket(&b[i], &b[j]))))
}

pub fn translate(g: &LieAlgebra, h: &Subspace, word: &[WordEntry]) -> Result<BasePoint> {
    if h.ambient_dim() != g.dim() {
        return Err(Error::Dimension { expected: g.dim(), got: h.ambient_dim() });
    }
    if !is_subalgebra(g, h) {
        return Err(Error::Invalid("reference subspace is not a subalgebra".into()));
    }
    let mut m = Matrix::identity(g.dim());
    for entry in word {
        m = m.mul(&entry.adjoint(g)?);
    }
    Ok(BasePoint { word: word.to_vec(), h: h.clone(), h_z: h.map(&m) })
}

/// Ambient vectors from rows of rationals, checking their length.
pub fn rows_to_subspace(g: &LieAlgebra, rows: &[Vector]) -> Result<Subspace> {
    for r in rows {
        check_len(g.dim(), r.len())?;
    }
    Ok(Subspace::span(g.dim(), rows))
}
