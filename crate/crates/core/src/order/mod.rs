//! Finite posets and lattices: down-set and up-set lattices, Birkhoff
//! duality, divisor lattices, covering forests with their covering and
//! quotient maps, order isomorphism search, and a census of small posets.

mod census;
mod forest;
mod iso;
mod lattice;
mod poset;

pub use census::poset_census;
pub use forest::{
    add_top, chain_lifts, covering_forest, is_covering_map, is_quotient_map, sharp,
    CoveringForest, Word,
};
pub use iso::{condense, lattice_iso, poset_iso};
pub use lattice::{
    divisor_lattice, downset_lattice, downsets, nonempty_upsets, upsets, Lattice,
};
pub use poset::Poset;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderError {
    #[error("cover index {0} is out of range")]
    IndexOutOfRange(usize),
    #[error("cover relation is reflexive at element {0}")]
    SelfCover(usize),
    #[error("cover relation contains a cycle: {}", render_cycle(.0))]
    CoverCycle(Vec<usize>),
    #[error("({lower}, {upper}) is not a cover: {lower} < {via} < {upper}")]
    NotACover {
        lower: usize,
        via: usize,
        upper: usize,
    },
    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(&'static str),
    #[error("not a quasi-order: {0}")]
    NotQuasiOrder(&'static str),
    #[error("elements {a} and {b} have no {kind}")]
    NotALattice {
        a: usize,
        b: usize,
        kind: &'static str,
    },
    #[error("poset is empty")]
    EmptyPoset,
    #[error("poset has no top element")]
    NoTop,
    #[error("map is not order-preserving")]
    NotOrderPreserving,
    #[error("budget exceeded: more than {cap} {what}")]
    BudgetExceeded { what: &'static str, cap: usize },
}

fn render_cycle(cycle: &[usize]) -> String {
    let mut parts: Vec<String> = cycle.iter().map(|e| e.to_string()).collect();
    if let Some(first) = cycle.first() {
        parts.push(first.to_string());
    }
    parts.join(" -> ")
}
