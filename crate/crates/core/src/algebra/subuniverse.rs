//! Subuniverse closure and enumeration.

use super::{for_each_tuple, AlgebraError, FiniteAlgebra};
use crate::bitset::BitSet;
use crate::budget::Budget;
use std::collections::BTreeSet;

/// The least subuniverse containing `seed` and the values of all nullary
/// operations. Empty only if `seed` is empty and there are no nullaries.
pub fn subuniverse_closure(a: &FiniteAlgebra, seed: &[usize]) -> Vec<usize> {
    closure_set(a, &BitSet::from_elems(a.size(), seed.iter().copied())).elems()
}

fn closure_set(a: &FiniteAlgebra, seed: &BitSet) -> BitSet {
    let mut set = seed.clone();
    for (_, value) in a.nullary_values() {
        set.insert(value);
    }
    // fixpoint iteration; universes are small enough that re-sweeping all
    // tuples from the current set is cheaper than tracking frontiers
    loop {
        let mut grew = false;
        let elems = set.elems();
        for op in 0..a.signature().len() {
            let arity = a.signature().arity(op);
            if arity == 0 {
                continue;
            }
            let mut lifted = vec![0usize; arity];
            for_each_tuple(elems.len(), arity, |args| {
                for (slot, &i) in lifted.iter_mut().zip(args) {
                    *slot = elems[i];
                }
                let value = a.eval(op, &lifted);
                if !set.contains(value) {
                    set.insert(value);
                    grew = true;
                }
            });
        }
        if !grew {
            return set;
        }
    }
}

/// All non-empty subuniverses, each as a sorted element list, in canonical
/// order (size, then lexicographic).
///
/// Enumeration closes single generators first and then unions: starting
/// from the closures of singletons (and of the empty set, when nullaries
/// force one), it repeatedly extends a known subuniverse by one generator
/// and closes. Every subuniverse is the closure of its own element set, so
/// this reaches all of them without scanning `2^n` subsets.
pub fn all_subuniverses(
    a: &FiniteAlgebra,
    budget: &Budget,
) -> Result<Vec<Vec<usize>>, AlgebraError> {
    let n = a.size();
    let over_budget = || AlgebraError::BudgetExceeded {
        what: "subuniverses",
        cap: budget.subuniverses,
    };
    let mut found: BTreeSet<BitSet> = BTreeSet::new();
    let mut work: Vec<BitSet> = Vec::new();

    let zero = closure_set(a, &BitSet::empty(n));
    if !zero.is_empty() {
        found.insert(zero.clone());
        work.push(zero);
    }
    for e in 0..n {
        let c = closure_set(a, &BitSet::singleton(n, e));
        if found.insert(c.clone()) {
            if found.len() > budget.subuniverses {
                return Err(over_budget());
            }
            work.push(c);
        }
    }
    while let Some(base) = work.pop() {
        for e in 0..n {
            if base.contains(e) {
                continue;
            }
            let mut seed = base.clone();
            seed.insert(e);
            let c = closure_set(a, &seed);
            if found.insert(c.clone()) {
                if found.len() > budget.subuniverses {
                    return Err(over_budget());
                }
                work.push(c);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = found.into_iter().map(|s| s.elems()).collect();
    out.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    Ok(out)
}

/// Reference enumeration by scanning all `2^n` subsets, for cross-checking
/// the closure-based path on small algebras.
pub fn all_subuniverses_exhaustive(a: &FiniteAlgebra) -> Vec<Vec<usize>> {
    let n = a.size();
    assert!(n <= 20, "exhaustive subset scan is for small universes");
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let elems: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if is_subuniverse(a, &elems) {
            out.push(elems);
        }
    }
    out.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    out
}

fn is_subuniverse(a: &FiniteAlgebra, elems: &[usize]) -> bool {
    let set = BitSet::from_elems(a.size(), elems.iter().copied());
    for op in 0..a.signature().len() {
        let arity = a.signature().arity(op);
        let mut lifted = vec![0usize; arity];
        let mut ok = true;
        for_each_tuple(elems.len(), arity, |args| {
            for (slot, &i) in lifted.iter_mut().zip(args) {
                *slot = elems[i];
            }
            if !set.contains(a.eval(op, &lifted)) {
                ok = false;
            }
        });
        if arity == 0 && !set.contains(a.eval(op, &[])) {
            ok = false;
        }
        if !ok {
            return false;
        }
    }
    true
}
