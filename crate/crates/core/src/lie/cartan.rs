//! Cartan matrices of finite type and their positive roots.

use std::collections::HashMap;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::{q, Q};

/// A Cartan matrix with `a[i][j] = ⟨α_i^∨, α_j⟩ = α_j(h_i)`, validated to be of finite type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
    /// `d_i = (α_i, α_i) / 2`, so `d_i a_ij` is symmetric.
    symmetrizer: Vec<Q>,
}

impl CartanMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        if entries.iter().any(|r| r.len() != n) {
            return Err(Error::Cartan("matrix is not square".into()));
        }
        for i in 0..n {
            if entries[i][i] != 2 {
                return Err(Error::Cartan(format!("diagonal entry ({i},{i}) is not 2")));
            }
            for j in 0..n {
                if i != j {
                    if entries[i][j] > 0 {
                        return Err(Error::Cartan(format!("positive off-diagonal entry at ({i},{j})")));
                    }
                    if (entries[i][j] == 0) != (entries[j][i] == 0) {
                        return Err(Error::Cartan(format!("zero pattern not symmetric at ({i},{j})")));
                    }
                }
            }
        }
        let symmetrizer = symmetrize(&entries)?;
        let sym = Matrix::from_rows(
            &(0..n).map(|i| (0..n).map(|j| &symmetrizer[i] * q(entries[i][j])).collect()).collect::<Vec<_>>(),
            n,
        );
        for k in 1..=n {
            let idx: Vec<usize> = (0..k).collect();
            if !sym.submatrix(&idx, &idx).determinant().is_positive() {
                return Err(Error::Cartan("not of finite type (symmetrized form is not positive definite)".into()));
            }
        }
        Ok(CartanMatrix { entries, symmetrizer })
    }

    /// Parses names like `A2`, `B3`, `G2`, `A1xA1`; the empty string or `T` gives rank 0.
    pub fn from_type(name: &str) -> Result<Self> {
        let mut blocks = Vec::new();
        for part in name.split(['x', 'X', '×', '+']).map(str::trim).filter(|p| !p.is_empty()) {
            blocks.push(block_for(part)?);
        }
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut m = vec![vec![0; n]; n];
        let mut off = 0;
        for b in blocks {
            for (i, row) in b.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    m[off + i][off + j] = x;
                }
            }
            off += b.len();
        }
        Self::new(m)
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn symmetrizer(&self) -> &[Q] {
        &self.symmetrizer
    }

    /// `(λ, μ)` for lattice vectors in simple-root coordinates.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> Q {
        let mut s = Q::zero();
        for i in 0..self.rank() {
            if a[i] == 0 {
                continue;
            }
            for j in 0..self.rank() {
                if b[j] != 0 && self.entries[i][j] != 0 {
                    s += &self.symmetrizer[i] * q(a[i] * b[j] * self.entries[i][j]);
                }
            }
        }
        s
    }

    /// `⟨λ, α_i^∨⟩`
    pub fn pairing(&self, lambda: &[i64], i: usize) -> i64 {
        (0..self.rank()).map(|j| lambda[j] * self.entries[i][j]).sum()
    }

    /// Positive roots in simple-root coordinates, ordered by height then reverse-lexicographically.
    pub fn positive_roots(&self) -> Vec<Vec<i64>> {
        let r = self.rank();
        let mut all: Vec<Vec<i64>> = (0..r)
            .map(|i| {
                let mut v = vec![0; r];
                v[i] = 1;
                v
            })
            .collect();
        let mut index: HashMap<Vec<i64>, usize> = all.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        let mut layer = all.clone();
        while !layer.is_empty() {
            let mut next: Vec<Vec<i64>> = Vec::new();
            for beta in &layer {
                for i in 0..r {
                    if beta.iter().enumerate().all(|(j, &c)| c == i64::from(j == i)) {
                        continue;
                    }
                    let mut p = 0;
                    let mut down = beta.clone();
                    loop {
                        down[i] -= 1;
                        if index.contains_key(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let qq = p - self.pairing(beta, i);
                    if qq > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if !index.contains_key(&up) && !next.contains(&up) {
                            next.push(up);
                        }
                    }
                }
            }
            for v in &next {
                index.insert(v.clone(), all.len());
                all.push(v.clone());
            }
            layer = next;
        }
        all.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        all
    }
}

fn symmetrize(a: &[Vec<i64>]) -> Result<Vec<Q>> {
    let n = a.len();
    let mut d: Vec<Option<Q>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(q(1));
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let di = d[i].clone().expect("visited");
            for j in 0..n {
                if i == j || a[i][j] == 0 {
                    continue;
                }
                // d_i a_ij = d_j a_ji
                let dj = &di * q(a[i][j]) / q(a[j][i]);
                match &d[j] {
                    None => {
                        d[j] = Some(dj);
                        stack.push(j);
                    }
                    Some(old) if *old != dj => {
                        return Err(Error::Cartan("matrix is not symmetrizable".into()));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let d: Vec<Q> = d.into_iter().map(|x| x.expect("all visited")).collect();
    if d.iter().any(|x| !x.is_positive()) {
        return Err(Error::Cartan("symmetrizer is not positive".into()));
    }
    Ok(d)
}

fn block_for(name: &str) -> Result<Vec<Vec<i64>>> {
    let bad = || Error::Parse(format!("unknown Cartan type {name:?}"));
    let mut chars = name.chars();
    let letter = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
    let n: usize = chars.as_str().parse().map_err(|_| bad())?;
    let chain = |n: usize| {
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            m[i][i] = 2;
            if i + 1 < n {
                m[i][i + 1] = -1;
                m[i + 1][i] = -1;
            }
        }
        m
    };
    let m = match (letter, n) {
        ('A', n) if n >= 1 => chain(n),
        ('B', n) if n >= 2 => {
            let mut m = chain(n);
            m[n - 1][n - 2] = -2;
            m
        }
        ('C', n) if n >= 2 => {
            let mut m = chain(n);
            m[n - 2][n - 1] = -2;
            m
        }
        ('D', n) if n >= 4 => {
            let mut m = chain(n);
            m[n - 1][n - 2] = 0;
            m[n - 2][n - 1] = 0;
            m[n - 1][n - 3] = -1;
            m[n - 3][n - 1] = -1;
            m
        }
        ('E', n) if (6..=8).contains(&n) => {
            // Bourbaki: 1-3-4-5-6-..., node 2 attached to node 4.
            let mut m = vec![vec![0i64; n]; n];
            for i in 0..n {
                m[i][i] = 2;
            }
            let mut link = |i: usize, j: usize| {
                m[i][j] = -1;
                m[j][i] = -1;
            };
            link(0, 2);
            link(1, 3);
            link(2, 3);
            for i in 3..n - 1 {
                link(i, i + 1);
            }
            m
        }
        ('F', 4) => {
            let mut m = chain(4);
            m[2][1] = -2;
            m
        }
        ('G', 2) => vec![vec![2, -3], vec![-1, 2]],
        _ => return Err(bad()),
    };
    Ok(m)
}
