//! Split real reductive Lie algebras: Chevalley bases, invariant form, Cartan involution,
//! Weyl group lifts and the sign-character model of `Ad(M)`.

mod algebra;
mod cartan;
mod signs;
mod weyl_group;

pub use algebra::{BasisElement, LieAlgebra, RootId};
pub use cartan::CartanMatrix;
pub use signs::{MLattice, SignCharacter, SignCharacterGroup};
pub use weyl_group::{act_on_functional, simple_lift, simple_reflection, weyl_lift, word_label, WeylElement, WeylGroup, WeylGroupElement};
