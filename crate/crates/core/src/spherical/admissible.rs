use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::adapted::a_part;
use super::analysis::{SphericalAnalysis, SupportItem};
use super::word::{BasePoint, RootTerm, WordEntry};
use crate::cones::enumerate_chambers;
use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, RootId};
use crate::limits::{limit_along, order_regular_hyperplanes};
use crate::linalg::{axpy, dot, zero_vec, Vector};
use crate::rational::{primitive_line, q, QStr, Q};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChamberReport {
    pub signs: Vec<i8>,
    pub representative: Vec<QStr>,
    /// `dim(h_{z,X} ∩ a)`.
    pub limit_a_dim: usize,
    pub passes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibilityReport {
    pub admissible: bool,
    pub a_h_dim: usize,
    pub chambers: Vec<ChamberReport>,
}

/// Tests `dim(h_{z,X} ∩ a) = dim a_h` at one representative of every order-regular chamber.
pub fn is_admissible(g: &LieAlgebra, an: &SphericalAnalysis) -> Result<AdmissibilityReport> {
    let set = enumerate_chambers(g.a_dim(), &order_regular_hyperplanes(g))?;
    let a_h_dim = an.a_h.dim();
    let chambers: Vec<ChamberReport> = set
        .chambers
        .iter()
        .map(|ch| {
            let lim = limit_along(g, &an.h_z, &ch.representative);
            let limit_a_dim = a_part(g, &lim).dim();
            ChamberReport {
                signs: ch.signs.clone(),
                representative: ch.representative.iter().map(QStr::from).collect(),
                limit_a_dim,
                passes: limit_a_dim == a_h_dim,
            }
        })
        .collect();
    Ok(AdmissibilityReport { admissible: chambers.iter().all(|c| c.passes), a_h_dim, chambers })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AdmissibleMethod {
    Input,
    Sampled { y: Vec<QStr> },
    Fallback { t: i64 },
}

#[derive(Clone, Debug)]
pub struct AdmissibleSearch {
    pub point: BasePoint,
    pub method: AdmissibleMethod,
    /// Candidate points tested, the input included.
    pub attempts: usize,
    pub report: AdmissibilityReport,
}

/// The one-parameter family `n_t = exp(C_α + t U_α)` for a half-space compression cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NtFamily {
    pub alpha: RootId,
    /// `X ∈ ker α ∩ a°` with `p_α T^⊥(X) ≠ 0`, in `a`-coordinates.
    pub x: Vector,
    /// `U_α = p_α T^⊥(X) / 2` as a coefficient on `X_α`.
    pub u: Q,
    /// `C_α = p_α T^⊥(α^∨) / 2`.
    pub c: Q,
}

impl NtFamily {
    pub fn new(g: &LieAlgebra, an: &SphericalAnalysis) -> Result<NtFamily> {
        let lines: Vec<_> = an.s_z.iter().map(|s| primitive_line(&g.functional(s))).collect();
        let Some(first) = lines.first() else {
            return Err(Error::Invalid("compression cone is all of a; every adapted point is admissible".into()));
        };
        if lines.iter().any(|l| l != first) {
            return Err(Error::Invalid("compression cone is not a half-space".into()));
        }
        let alpha = an
            .sigma_q()
            .iter()
            .copied()
            .find(|r| an.supports[r].contains(&SupportItem::A))
            .ok_or_else(|| Error::Invalid("no root with a in its support; the input is already admissible".into()))?;
        let f = g.root_functional(alpha);
        let k = g.root_vector(alpha);
        let kernel = an.a_circ.intersect(&crate::subspace::Subspace::solutions(g.a_dim(), &[f]));
        let mut found = None;
        for x in kernel.basis() {
            let t = an.tperp_of(g, &x)?;
            if !t[k].is_zero() {
                found = Some((x, t[k].clone() / q(2)));
                break;
            }
        }
        let (x, u) = found.ok_or_else(|| Error::Contract("p_α ∘ T^⊥ vanishes on ker α ∩ a°".into()))?;
        let c = an.tperp_of(g, &g.coroot(alpha))?[k].clone() / q(2);
        Ok(NtFamily { alpha, x, u, c })
    }

    pub fn entry(&self, g: &LieAlgebra, t: i64) -> WordEntry {
        WordEntry::Nilpotent(vec![RootTerm { root: g.root(self.alpha), coeff: QStr(&self.c + &self.u * q(t)) }])
    }
}

fn check_point(g: &LieAlgebra, point: &BasePoint) -> Result<Option<AdmissibilityReport>> {
    match SphericalAnalysis::new(g, &point.h_z) {
        Ok(an) => Ok(Some(is_admissible(g, &an)?)),
        Err(Error::NotAdapted(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Runs the `n_t` family for `t = 1..=max_t` and returns the first admissible translate.
pub fn nt_fallback(g: &LieAlgebra, base: &BasePoint, max_t: i64) -> Result<(i64, BasePoint, AdmissibilityReport)> {
    let an = SphericalAnalysis::new(g, &base.h_z)?;
    let fam = NtFamily::new(g, &an)?;
    for t in 1..=max_t {
        let point = base.act(g, fam.entry(g, t))?;
        if let Some(rep) = check_point(g, &point)? {
            if rep.admissible {
                return Ok((t, point, rep));
            }
        }
    }
    Err(Error::Exhausted(format!("n_t family found no admissible point for t ≤ {max_t}")))
}

/// Random element of `a°_reg` with small integer coordinates in the echelon basis of `a°`.
pub fn sample_regular(g: &LieAlgebra, an: &SphericalAnalysis, rng: &mut ChaCha8Rng) -> Vector {
    let basis = an.a_circ.basis();
    loop {
        let mut y = zero_vec(g.a_dim());
        for b in &basis {
            axpy(&mut y, &q(rng.random_range(-6..=6)), b);
        }
        if an.is_regular(g, &y) {
            return y;
        }
    }
}

/// Searches `MA exp(Φ_z(Y)) · z` for an admissible point: the input, then `max_iters`
/// seeded samples, then the `n_t` family when the cone is a half-space.
pub fn find_admissible(g: &LieAlgebra, base: &BasePoint, seed: u64, max_iters: usize) -> Result<AdmissibleSearch> {
    let an = SphericalAnalysis::new(g, &base.h_z)?;
    let report = is_admissible(g, &an)?;
    if report.admissible {
        return Ok(AdmissibleSearch { point: base.clone(), method: AdmissibleMethod::Input, attempts: 1, report });
    }
    let mut attempts = 1;
    let mut last = report;
    if !an.a_circ.is_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..max_iters {
            let y = sample_regular(g, &an, &mut rng);
            let phi = an.phi(g, &y)?;
            let point = base.act(g, WordEntry::nilpotent_from_vector(g, &phi))?;
            attempts += 1;
            if let Some(rep) = check_point(g, &point)? {
                if rep.admissible {
                    let method = AdmissibleMethod::Sampled { y: y.iter().map(QStr::from).collect() };
                    return Ok(AdmissibleSearch { point, method, attempts, report: rep });
                }
                last = rep;
            }
        }
    }
    if NtFamily::new(g, &an).is_ok() {
        if let Ok((t, point, rep)) = nt_fallback(g, base, max_iters.max(8) as i64) {
            attempts += t as usize;
            return Ok(AdmissibleSearch { point, method: AdmissibleMethod::Fallback { t }, attempts, report: rep });
        }
    }
    let failing: Vec<String> = last
        .chambers
        .iter()
        .filter(|c| !c.passes)
        .map(|c| format!("{:?} (dim h_z,X ∩ a = {})", c.signs, c.limit_a_dim))
        .collect();
    Err(Error::Exhausted(format!(
        "no admissible point after {attempts} attempts; failing chambers at the last sample: {}",
        failing.join(", ")
    )))
}

/// Whether `X` lies in no hyperplane of the order-regular arrangement.
pub fn is_order_regular_point(g: &LieAlgebra, x: &[Q]) -> bool {
    order_regular_hyperplanes(g).iter().all(|h| !dot(h, x).is_zero())
}
