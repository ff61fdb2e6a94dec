//! Finite model of `Ad(M)`: sign characters on the root lattice.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::algebra::{LieAlgebra, RootId};
use crate::linalg::Matrix;
use crate::rational::q;

/// Lattice whose elements `t` give `χ_t(g_β) = (−1)^{⟨β,t⟩}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MLattice {
    #[default]
    Coroot,
    Coweight,
}

impl std::str::FromStr for MLattice {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "coroot" => Ok(MLattice::Coroot),
            "coweight" => Ok(MLattice::Coweight),
            _ => Err(crate::error::Error::Parse(format!("unknown M-lattice {s:?} (expected coroot or coweight)"))),
        }
    }
}

/// A character is stored by its signs on the simple roots (`true` = −1).
pub type SignCharacter = Vec<bool>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignCharacterGroup {
    /// Lattice vectors mod 2 whose characters generate the group.
    pub generators: Vec<Vec<u8>>,
    /// Distinct characters, the trivial one first.
    pub elements: Vec<SignCharacter>,
}

impl SignCharacterGroup {
    pub fn new(g: &LieAlgebra, lattice: MLattice) -> Self {
        let r = g.rank();
        let mut set = BTreeSet::new();
        let mut generators = Vec::new();
        for mask in 0u32..(1u32 << r) {
            let t: Vec<u8> = (0..r).map(|i| ((mask >> i) & 1) as u8).collect();
            // χ_t(α_j) = (−1)^{⟨α_j, t⟩}
            let chi: SignCharacter = (0..r)
                .map(|j| {
                    let pairing: i64 = match lattice {
                        MLattice::Coroot => (0..r).map(|i| i64::from(t[i]) * g.cartan().entry(i, j)).sum(),
                        MLattice::Coweight => i64::from(t[j]),
                    };
                    pairing.rem_euclid(2) == 1
                })
                .collect();
            if t.iter().filter(|&&x| x == 1).count() == 1 {
                generators.push(t);
            }
            set.insert(chi);
        }
        let mut elements: Vec<SignCharacter> = set.into_iter().collect();
        elements.sort_by_key(|c| (c.iter().filter(|&&b| b).count(), c.clone()));
        SignCharacterGroup { generators, elements }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn value(chi: &SignCharacter, root: &[i64]) -> i64 {
        let odd = chi.iter().zip(root).filter(|(s, c)| **s && c.rem_euclid(2) == 1).count();
        if odd % 2 == 0 { 1 } else { -1 }
    }

    /// Diagonal action on `g`.
    pub fn matrix(g: &LieAlgebra, chi: &SignCharacter) -> Matrix {
        let mut m = Matrix::identity(g.dim());
        for r in g.all_roots() {
            let k = g.root_vector(r);
            m.set(k, k, q(Self::value(chi, &g.root(r))));
        }
        m
    }

    pub fn sign_on_root(g: &LieAlgebra, chi: &SignCharacter, r: RootId) -> i64 {
        Self::value(chi, &g.root(r))
    }
}
