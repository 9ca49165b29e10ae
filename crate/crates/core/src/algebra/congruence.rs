//! Congruence generation and the congruence lattice.

use super::partition::UnionFind;
use super::{for_each_tuple, AlgebraError, FiniteAlgebra, Partition};
use crate::budget::Budget;
use crate::order::{Lattice, Poset};
use std::collections::BTreeSet;

/// Returns an operation index that `theta` fails to be compatible with, or
/// `None` when `theta` is a congruence.
pub(crate) fn incompatible_op(a: &FiniteAlgebra, theta: &Partition) -> Option<usize> {
    let n = a.size();
    // single-coordinate substitutions suffice: multi-coordinate changes
    // decompose into a chain of them
    for op in 0..a.signature().len() {
        let arity = a.signature().arity(op);
        if arity == 0 {
            continue;
        }
        let mut bad = false;
        let mut args = vec![0usize; arity];
        for pos in 0..arity {
            for_each_tuple(n, arity - 1, |rest| {
                if bad {
                    return;
                }
                for x in 0..n {
                    for y in x + 1..n {
                        if !theta.same_block(x, y) {
                            continue;
                        }
                        let mut r = rest.iter();
                        for (i, slot) in args.iter_mut().enumerate() {
                            *slot = if i == pos { x } else { *r.next().unwrap() };
                        }
                        let u = a.eval(op, &args);
                        args[pos] = y;
                        let v = a.eval(op, &args);
                        if !theta.same_block(u, v) {
                            bad = true;
                            return;
                        }
                    }
                }
            });
            if bad {
                return Some(op);
            }
        }
    }
    None
}

/// Whether `theta` is a congruence of `a`.
pub fn is_congruence(a: &FiniteAlgebra, theta: &Partition) -> bool {
    theta.universe_size() == a.size() && incompatible_op(a, theta).is_none()
}

/// The least congruence identifying `a` and `b`, by pair propagation: merge
/// the pair, then repeatedly merge `f(..x..)` with `f(..y..)` for every
/// merged pair `(x, y)`, every operation, every coordinate, and every choice
/// of the remaining arguments, to fixpoint.
pub fn principal_congruence(alg: &FiniteAlgebra, a: usize, b: usize) -> Partition {
    let n = alg.size();
    let mut uf = UnionFind::new(n);
    let mut queue: Vec<(usize, usize)> = Vec::new();
    if uf.union(a, b) {
        queue.push((a, b));
    }
    let mut args = Vec::new();
    while let Some((x, y)) = queue.pop() {
        for op in 0..alg.signature().len() {
            let arity = alg.signature().arity(op);
            if arity == 0 {
                continue;
            }
            args.resize(arity, 0);
            for pos in 0..arity {
                for_each_tuple(n, arity - 1, |rest| {
                    let mut r = rest.iter();
                    for (i, slot) in args.iter_mut().enumerate() {
                        *slot = if i == pos { x } else { *r.next().unwrap() };
                    }
                    let u = alg.eval(op, &args);
                    args[pos] = y;
                    let v = alg.eval(op, &args);
                    if uf.union(u, v) {
                        queue.push((u, v));
                    }
                });
            }
        }
    }
    uf.into_partition()
}

/// All congruences of `a` in canonical order (block count, then
/// lexicographic block ids), together with their lattice under refinement.
///
/// The set is the closure of the principal congruences under join, plus the
/// identity; joins of congruences are again congruences, so no further
/// compatibility checks are needed.
pub fn congruence_lattice(
    a: &FiniteAlgebra,
    budget: &Budget,
) -> Result<(Vec<Partition>, Lattice), AlgebraError> {
    let n = a.size();
    let over_budget = || AlgebraError::BudgetExceeded {
        what: "congruences",
        cap: budget.congruences,
    };
    let mut set: BTreeSet<Partition> = BTreeSet::new();
    set.insert(Partition::identity(n));
    for x in 0..n {
        for y in x + 1..n {
            set.insert(principal_congruence(a, x, y));
            if set.len() > budget.congruences {
                return Err(over_budget());
            }
        }
    }
    let mut list: Vec<Partition> = set.iter().cloned().collect();
    let mut i = 0;
    while i < list.len() {
        for j in 0..i {
            let joined = list[i].join(&list[j]);
            if set.insert(joined.clone()) {
                if set.len() > budget.congruences {
                    return Err(over_budget());
                }
                list.push(joined);
            }
        }
        i += 1;
    }

    let mut congruences: Vec<Partition> = set.into_iter().collect();
    congruences.sort_by(|p, q| {
        p.num_blocks()
            .cmp(&q.num_blocks())
            .then_with(|| p.block_id().cmp(q.block_id()))
    });

    let names: Vec<String> = congruences.iter().map(|p| p.render()).collect();
    let k = congruences.len();
    let le = |i: usize, j: usize| congruences[i].refines(&congruences[j]);
    let poset = Poset::from_le(names, k, le).expect("refinement is a partial order");
    let lattice = Lattice::from_poset(poset).expect("congruence order is a lattice");
    Ok((congruences, lattice))
}

/// `Some(monolith)` when `Con(a) \ {identity}` has a least element.
pub fn is_subdirectly_irreducible(
    a: &FiniteAlgebra,
    budget: &Budget,
) -> Result<Option<Partition>, AlgebraError> {
    let (congruences, _) = congruence_lattice(a, budget)?;
    let identity = Partition::identity(a.size());
    let mut monolith: Option<Partition> = None;
    for theta in congruences.iter().filter(|t| **t != identity) {
        monolith = Some(match monolith {
            None => theta.clone(),
            Some(m) => m.meet(theta),
        });
    }
    Ok(monolith.filter(|m| *m != identity))
}
