//! Limits `lim_{t→∞} Ad(exp tX)E` in the Grassmannian for `X ∈ a`.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{dot, Matrix, Vector};
use crate::rational::{to_f64, Q};
use crate::subspace::Subspace;

/// The eigenspace decomposition of `ad(X)`; in the Chevalley basis it is diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDirection {
    /// `X` in `a`-coordinates.
    pub x: Vector,
    /// Distinct eigenvalues, ascending.
    pub eigenvalues: Vec<Q>,
    /// Basis indices spanning each eigenspace `V_i`.
    pub blocks: Vec<Vec<usize>>,
    dim: usize,
}

impl GradedDirection {
    pub fn new(g: &LieAlgebra, x: &[Q]) -> Self {
        let vals = basis_eigenvalues(g, x);
        let mut eigenvalues: Vec<Q> = vals.clone();
        eigenvalues.sort();
        eigenvalues.dedup();
        let blocks = eigenvalues
            .iter()
            .map(|lam| (0..g.dim()).filter(|&k| &vals[k] == lam).collect())
            .collect();
        GradedDirection { x: x.to_vec(), eigenvalues, blocks, dim: g.dim() }
    }

    /// Projection `p_i` onto `V_i` along the other eigenspaces.
    pub fn projection(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for &k in &self.blocks[i] {
            m.set(k, k, Q::from_integer(1.into()));
        }
        m
    }

    fn project(&self, i: usize, v: &[Q]) -> Vector {
        let mut out = crate::linalg::zero_vec(self.dim);
        for &k in &self.blocks[i] {
            out[k] = v[k].clone();
        }
        out
    }

    /// `⊕_{j ≤ i} V_j`
    fn filtration(&self, i: usize) -> Subspace {
        let axes: Vec<usize> = self.blocks[..=i].iter().flatten().copied().collect();
        Subspace::coordinate(self.dim, &axes)
    }
}

/// Eigenvalue of `ad(X)` on each basis vector.
pub fn basis_eigenvalues(g: &LieAlgebra, x: &[Q]) -> Vec<Q> {
    (0..g.dim())
        .map(|k| match g.root_of_basis(k) {
            Some(r) => dot(&g.root_functional(r), x),
            None => Q::zero(),
        })
        .collect()
}

/// `E_X = ⊕_i p_i(E ∩ ⊕_{j≤i} V_j)`.
pub fn limit_subspace(e: &Subspace, dir: &GradedDirection) -> Subspace {
    let mut parts: Vec<Vector> = Vec::new();
    for i in 0..dir.eigenvalues.len() {
        let w = e.intersect(&dir.filtration(i));
        parts.extend(w.basis().iter().map(|v| dir.project(i, v)));
    }
    let lim = Subspace::span(e.ambient_dim(), &parts);
    debug_assert_eq!(lim.dim(), e.dim());
    lim
}

/// Convenience wrapper taking `X` in `a`-coordinates.
pub fn limit_along(g: &LieAlgebra, e: &Subspace, x: &[Q]) -> Subspace {
    limit_subspace(e, &GradedDirection::new(g, x))
}

/// `α(X) ≠ β(X)` for all distinct roots.
pub fn is_order_regular(g: &LieAlgebra, x: &[Q]) -> bool {
    let mut vals: Vec<Q> = g.all_roots().map(|r| dot(&g.root_functional(r), x)).collect();
    let n = vals.len();
    vals.sort();
    vals.dedup();
    vals.len() == n
}

/// Functionals `α − β` (up to scaling) whose kernels bound the order-regular chambers.
pub fn order_regular_hyperplanes(g: &LieAlgebra) -> Vec<Vector> {
    let mut out: Vec<Vec<num_bigint::BigInt>> = Vec::new();
    let roots: Vec<Vector> = g.all_roots().map(|r| g.root_functional(r)).collect();
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            let d = crate::linalg::sub_vec(&roots[i], &roots[j]);
            if crate::linalg::is_zero_vec(&d) {
                continue;
            }
            let p = crate::rational::primitive_line(&d);
            if !out.contains(&p) {
                out.push(p);
            }
        }
    }
    out.sort();
    out.into_iter().map(|p| p.into_iter().map(Q::from_integer).collect()).collect()
}

/// Result of the floating-point flow.
#[derive(Clone, Debug)]
pub struct FlowReport {
    /// Sine of the largest principal angle between the flowed frame and the exact limit.
    pub distance: f64,
    /// Orthonormal frame after the flow, one basis vector per row.
    pub frame: Vec<Vec<f64>>,
    pub steps: usize,
    /// Working precision of the frame, in bits.
    pub precision: u64,
}

/// Flows an orthonormal frame of `E` under `Ad(exp tX)` up to `t_max` with periodic
/// re-orthonormalization and compares it with the exact limit.
///
/// The flow amplifies rounding in the frame by up to `exp(spread · t)`, where `spread` is the
/// eigenvalue range, so the frame is carried in binary fixed point with that many extra bits.
/// The step factors `exp(λ dt)` are rounded to `f64`; a diagonal relative error commutes with
/// the flow and only moves the result by the same relative amount.
pub fn float_flow_oracle(g: &LieAlgebra, e: &Subspace, x: &[Q], t_max: f64, tol: f64) -> Result<FlowReport> {
    let lam: Vec<f64> = basis_eigenvalues(g, x).iter().map(to_f64).collect();
    let exact = limit_along(g, e, x);
    let n = g.dim();
    let k = e.dim();
    let mut distinct: Vec<f64> = lam.clone();
    distinct.sort_by(f64::total_cmp);
    distinct.dedup();
    let gap = distinct.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
    if gap.is_finite() && (-gap * t_max).exp() > tol {
        return Err(Error::Invalid(format!("flow does not converge: eigenvalue gap {gap} too small for t = {t_max}")));
    }
    let spread = distinct.last().zip(distinct.first()).map_or(0.0, |(hi, lo)| hi - lo);
    let precision = (spread * t_max / std::f64::consts::LN_2).ceil() as u64 + 64;
    if k == 0 {
        return Ok(FlowReport { distance: 0.0, frame: vec![], steps: 0, precision });
    }
    let top = distinct.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    // Keep every step factor well inside the f64 range.
    let steps = ((top * t_max) / 200.0).ceil().max(1.0) as usize;
    let dt = t_max / steps as f64;
    let fx = FixedPoint { bits: precision };
    let mut frame: Vec<Vec<BigInt>> = e.basis().iter().map(|v| v.iter().map(|c| fx.encode(c)).collect()).collect();
    fx.orthogonalize(&mut frame);
    let factors: Vec<(BigInt, i32)> = lam.iter().map(|l| dyadic((l * dt).exp())).collect();
    for _ in 0..steps {
        for v in frame.iter_mut() {
            for (c, (m, ex)) in v.iter_mut().zip(&factors) {
                *c = shift(&(&*c * m), *ex as i64);
            }
        }
        fx.orthogonalize(&mut frame);
    }
    let rows: Vec<Vec<f64>> = frame.iter().map(|v| fx.to_unit_f64(v)).collect();
    let flowed = orthonormal(nalgebra::DMatrix::from_fn(n, k, |r, c| rows[c][r]));
    let target = orthonormal(exact.basis_matrix().to_f64().transpose());
    let residual = &flowed - &target * (target.transpose() * &flowed);
    let distance = residual.svd(false, false).singular_values.max();
    let frame_rows = (0..k).map(|c| (0..n).map(|r| flowed[(r, c)]).collect()).collect();
    Ok(FlowReport { distance, frame: frame_rows, steps, precision })
}

fn orthonormal(m: nalgebra::DMatrix<f64>) -> nalgebra::DMatrix<f64> {
    m.qr().q()
}

/// `v · 2^s`, rounding toward negative infinity when `s < 0`.
fn shift(v: &BigInt, s: i64) -> BigInt {
    if s >= 0 {
        v << s as usize
    } else {
        v >> (-s) as usize
    }
}

/// Exact dyadic value `m · 2^e` of a finite positive `f64`.
fn dyadic(f: f64) -> (BigInt, i32) {
    let (mantissa, exponent, _) = num_traits::Float::integer_decode(f);
    (BigInt::from(mantissa), exponent as i32)
}

/// Binary fixed point: an integer `m` stands for `m / 2^bits`.
struct FixedPoint {
    bits: u64,
}

impl FixedPoint {
    fn encode(&self, c: &Q) -> BigInt {
        (c.numer() << self.bits as usize) / c.denom()
    }

    fn dot(&self, a: &[BigInt], b: &[BigInt]) -> BigInt {
        let s: BigInt = a.iter().zip(b).map(|(x, y)| x * y).sum();
        s >> self.bits as usize
    }

    /// Gram–Schmidt, then rescale each vector by a power of two so its largest entry is about one.
    fn orthogonalize(&self, frame: &mut [Vec<BigInt>]) {
        for j in 0..frame.len() {
            for i in 0..j {
                let qq = self.dot(&frame[i], &frame[i]);
                if qq.is_zero() {
                    continue;
                }
                let c = (self.dot(&frame[i], &frame[j]) << self.bits as usize) / qq;
                let update: Vec<BigInt> = frame[i].iter().map(|q| (q * &c) >> self.bits as usize).collect();
                for (v, u) in frame[j].iter_mut().zip(update) {
                    *v -= u;
                }
            }
            let top = frame[j].iter().map(|v| v.bits()).max().unwrap_or(0) as i64;
            let s = self.bits as i64 + 1 - top;
            for v in frame[j].iter_mut() {
                *v = shift(v, s);
            }
        }
    }

    /// Unit vector in `f64` along `v`.
    fn to_unit_f64(&self, v: &[BigInt]) -> Vec<f64> {
        let top = v.iter().map(|c| c.bits()).max().unwrap_or(0) as i64;
        let s = 60 - top;
        let w: Vec<f64> = v.iter().map(|c| shift(c, s).to_f64().unwrap_or(0.0)).collect();
        let norm = w.iter().map(|c| c * c).sum::<f64>().sqrt();
        w.iter().map(|c| c / norm).collect()
    }
}
