//! Finite universal algebra at desk scale: algebras given by operation
//! tables, backtracking homomorphism search, congruence lattices, finite
//! posets and their covering forests, and the synthesis of quasi-primal
//! algebras whose homomorphism lattice realizes a prescribed finite
//! distributive lattice.
//!
//! The crate is organized around five subsystems:
//!
//! * [`algebra`] — algebras, subuniverses, congruences, products, quotients;
//! * [`hom`] — homomorphism / isomorphism search and cores;
//! * [`order`] — posets, lattices, down-set lattices, covering forests;
//! * [`synth`] — constructions that manufacture algebras from combinatorial
//!   data (quasi-primal synthesis, Birkhoff–Frink, graph expansion, G-sets);
//! * [`homlat`] — homomorphism-lattice pipelines built from the above.
//!
//! All values are immutable after construction and every operation is a pure
//! function of its inputs, so values can be shared freely across threads.

pub mod algebra;
pub mod bitset;
pub mod budget;
pub mod hom;
pub mod homlat;
pub mod order;
pub mod synth;

pub use algebra::{FiniteAlgebra, Partition, Signature};
pub use bitset::BitSet;
pub use budget::Budget;
pub use hom::HomWitness;
pub use homlat::{HomLatticeReport, SubHomPoset};
pub use order::{CoveringForest, Lattice, Poset, Word};
pub use synth::{Digraph, QpBundle};

#[cfg(test)]
mod shareability {
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn values_can_cross_threads() {
        assert_send_sync::<super::FiniteAlgebra>();
        assert_send_sync::<super::Partition>();
        assert_send_sync::<super::Poset>();
        assert_send_sync::<super::Lattice>();
        assert_send_sync::<super::CoveringForest>();
        assert_send_sync::<super::QpBundle>();
        assert_send_sync::<super::SubHomPoset>();
    }
}
