//! Subspaces of `Q^n` in canonical reduced row-echelon form.

use std::fmt;

use num_traits::Zero;

use crate::linalg::{Matrix, Vector};
use crate::rational::Q;

/// A linear subspace stored by its unique RREF basis, so `==` is set equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}) ", self.dim(), self.ambient_dim)?;
        let rows: Vec<String> = self
            .basis
            .rows()
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "{{{}}}", rows.join(", "))
    }
}

impl Subspace {
    pub fn span(ambient_dim: usize, vectors: &[Vector]) -> Self {
        let m = Matrix::from_rows(vectors, ambient_dim);
        let (r, pivots) = m.rref();
        let rows: Vec<Vector> = (0..pivots.len()).map(|i| r.row_vec(i)).collect();
        Subspace { ambient_dim, basis: Matrix::from_rows(&rows, ambient_dim) }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self::span(ambient_dim, &[])
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Matrix::identity(ambient_dim) }
    }

    /// Span of the given coordinate axes.
    pub fn coordinate(ambient_dim: usize, axes: &[usize]) -> Self {
        let vs: Vec<Vector> = axes.iter().map(|&i| crate::linalg::unit_vec(ambient_dim, i)).collect();
        Self::span(ambient_dim, &vs)
    }

    /// `{x : c·x = 0 for every row c}`.
    pub fn solutions(ambient_dim: usize, constraints: &[Vector]) -> Self {
        if constraints.is_empty() {
            return Self::full(ambient_dim);
        }
        Self::span(ambient_dim, &Matrix::from_rows(constraints, ambient_dim).kernel())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> Vec<Vector> {
        self.basis.rows()
    }

    pub fn basis_matrix(&self) -> &Matrix {
        &self.basis
    }

    /// Linear equations cutting out the subspace.
    pub fn annihilator(&self) -> Vec<Vector> {
        if self.dim() == 0 {
            return (0..self.ambient_dim).map(|i| crate::linalg::unit_vec(self.ambient_dim, i)).collect();
        }
        self.basis.kernel()
    }

    pub fn contains_vector(&self, v: &[Q]) -> bool {
        self.annihilator().iter().all(|c| crate::linalg::dot(c, v).is_zero())
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        let ann = self.annihilator();
        other.basis.rows().iter().all(|v| ann.iter().all(|c| crate::linalg::dot(c, v).is_zero()))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vs = self.basis();
        vs.extend(other.basis());
        Self::span(self.ambient_dim, &vs)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        let mut cs = self.annihilator();
        cs.extend(other.annihilator());
        Self::solutions(self.ambient_dim, &cs)
    }

    /// Image under the linear map `v ↦ M v`.
    pub fn map(&self, m: &Matrix) -> Subspace {
        let vs: Vec<Vector> = self.basis.rows().iter().map(|v| m.apply(v)).collect();
        Self::span(m.nrows(), &vs)
    }

    /// Coordinates of `v` in the RREF basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Q]) -> Option<Vector> {
        self.basis.transpose().solve(v)
    }

    /// Complement with respect to a bilinear form given by its Gram matrix.
    pub fn orthogonal(&self, gram: &Matrix) -> Subspace {
        let cs: Vec<Vector> = self.basis.rows().iter().map(|v| gram.transpose().apply(v)).collect();
        Self::solutions(self.ambient_dim, &cs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn canonical_equality() {
        let a = Subspace::span(3, &[v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let b = Subspace::span(3, &[v(&[1, 2, 1]), v(&[1, 0, -1]), v(&[2, 2, 0])]);
        assert_eq!(a, b);
    }

    #[test]
    fn sum_and_intersection() {
        let a = Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::span(3, &[v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(a.intersect(&b), Subspace::span(3, &[v(&[0, 1, 0])]));
        assert_eq!(a.sum(&b), Subspace::full(3));
        assert!(a.contains(&a.intersect(&b)));
        assert!(!a.contains(&b));
        assert_eq!(a.intersect(&Subspace::zero(3)).dim(), 0);
    }

    #[test]
    fn coordinates_round_trip() {
        let a = Subspace::span(3, &[v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let x = v(&[2, 5, 3]);
        let c = a.coordinates(&x).unwrap();
        let back = Matrix::from_rows(&a.basis(), 3).transpose().apply(&c);
        assert_eq!(back, x);
        assert!(a.coordinates(&v(&[1, 0, 0])).is_none());
    }
}
