//! Backtracking search for homomorphisms, isomorphisms, and cores.
//!
//! The search assigns target values to source elements one at a time,
//! most-constrained variable first. Candidate sets are seeded by nullary
//! values, unary operations are propagated as functional arc-consistency
//! before and during branching, and operations of arity at least two are
//! checked on fully assigned tuples plus a closure check per assignment
//! (a tuple of assigned elements whose value is still unassigned pins that
//! value's candidate set).

use crate::algebra::{
    induced_subalgebra, subuniverse_closure, AlgebraError, FiniteAlgebra,
};
use crate::bitset::BitSet;

/// A homomorphism witness; `map[x]` is the image of source element `x`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomWitness {
    pub source_size: usize,
    pub target_size: usize,
    pub map: Vec<usize>,
}

impl HomWitness {
    /// Directly checks `h(f(xs)) = f(h(xs))` for every operation and every
    /// argument tuple.
    pub fn preserves_all(&self, a: &FiniteAlgebra, b: &FiniteAlgebra) -> bool {
        is_homomorphism(a, b, &self.map)
    }
}

/// Whether `map` is a homomorphism from `a` to `b` (signatures assumed
/// compatible), by checking every operation on every argument tuple,
/// stopping at the first violation.
pub fn is_homomorphism(a: &FiniteAlgebra, b: &FiniteAlgebra, map: &[usize]) -> bool {
    if map.len() != a.size() || map.iter().any(|&v| v >= b.size()) {
        return false;
    }
    let n = a.size();
    for op in 0..a.signature().len() {
        let arity = a.signature().arity(op);
        let mut args = vec![0usize; arity];
        let mut image = vec![0usize; arity];
        'tuples: loop {
            for (slot, &x) in image.iter_mut().zip(args.iter()) {
                *slot = map[x];
            }
            if map[a.eval(op, &args)] != b.eval(op, &image) {
                return false;
            }
            let mut pos = arity;
            loop {
                if pos == 0 {
                    break 'tuples;
                }
                pos -= 1;
                args[pos] += 1;
                if args[pos] < n {
                    continue 'tuples;
                }
                args[pos] = 0;
            }
        }
    }
    true
}

/// The ternary discriminator table on `0..n`: `t(x,y,z) = x` if `x != y`,
/// else `z`.
pub fn discriminator_table(n: usize) -> Vec<usize> {
    let mut table = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                table.push(if x != y { x } else { z });
            }
        }
    }
    table
}

struct Search<'a> {
    a: &'a FiniteAlgebra,
    b: &'a FiniteAlgebra,
    injective: bool,
    /// pairs of source elements forced to share an image
    merge: &'a [(usize, usize)],
    unary_ops: Vec<usize>,
    wide_ops: Vec<usize>,
}

struct State {
    domains: Vec<BitSet>,
    assignment: Vec<usize>, // usize::MAX = unassigned
    assigned: Vec<usize>,   // assignment order
}

impl<'a> Search<'a> {
    fn new(
        a: &'a FiniteAlgebra,
        b: &'a FiniteAlgebra,
        injective: bool,
        merge: &'a [(usize, usize)],
    ) -> Self {
        let unary_ops = (0..a.signature().len())
            .filter(|&op| a.signature().arity(op) == 1)
            .collect();
        let wide_ops = (0..a.signature().len())
            .filter(|&op| a.signature().arity(op) >= 2)
            .collect();
        Search {
            a,
            b,
            injective,
            merge,
            unary_ops,
            wide_ops,
        }
    }

    fn initial_state(&self, seed_domains: Option<Vec<BitSet>>) -> Option<State> {
        let n = self.a.size();
        let m = self.b.size();
        let mut domains = seed_domains.unwrap_or_else(|| vec![BitSet::full(m); n]);
        for op in 0..self.a.signature().len() {
            if self.a.signature().arity(op) == 0 {
                let target = BitSet::singleton(m, self.b.eval(op, &[]));
                domains[self.a.eval(op, &[])].intersect_with(&target);
            }
        }
        for &(x, y) in self.merge {
            let dx = domains[x].clone();
            domains[y].intersect_with(&dx);
            let dy = domains[y].clone();
            domains[x].intersect_with(&dy);
        }
        let mut state = State {
            domains,
            assignment: vec![usize::MAX; n],
            assigned: Vec::with_capacity(n),
        };
        if !self.unary_arc_consistency(&mut state) {
            return None;
        }
        Some(state)
    }

    /// Functional arc-consistency over the unary operations, to fixpoint.
    fn unary_arc_consistency(&self, state: &mut State) -> bool {
        let m = self.b.size();
        loop {
            let mut changed = false;
            for &op in &self.unary_ops {
                for x in 0..self.a.size() {
                    let y = self.a.eval(op, &[x]);
                    if y == x {
                        // h(x) must be a fixpoint of the target operation
                        let before = state.domains[x].count();
                        let keep: Vec<usize> = state.domains[x]
                            .iter()
                            .filter(|&s| self.b.eval(op, &[s]) == s)
                            .collect();
                        if keep.len() != before {
                            state.domains[x] = BitSet::from_elems(m, keep);
                            changed = true;
                        }
                    } else {
                        let keep: Vec<usize> = state.domains[x]
                            .iter()
                            .filter(|&s| state.domains[y].contains(self.b.eval(op, &[s])))
                            .collect();
                        if keep.len() != state.domains[x].count() {
                            state.domains[x] = BitSet::from_elems(m, keep);
                            changed = true;
                        }
                        let image =
                            BitSet::from_elems(m, state.domains[x].iter().map(|s| self.b.eval(op, &[s])));
                        let before = state.domains[y].count();
                        state.domains[y].intersect_with(&image);
                        if state.domains[y].count() != before {
                            changed = true;
                        }
                    }
                    if state.domains[x].is_empty() || state.domains[y].is_empty() {
                        return false;
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    /// Checks and propagates the arity >= 2 operations over tuples of
    /// assigned elements that involve `x`.
    fn propagate_assignment(&self, state: &mut State, x: usize) -> bool {
        let m = self.b.size();
        let k = state.assigned.len(); // x itself is already on the list
        for &op in &self.wide_ops {
            let arity = self.a.signature().arity(op);
            let mut args = vec![0usize; arity];
            let mut image = vec![0usize; arity];
            for pos in 0..arity {
                // odometer over assigned^(arity-1) for the other coordinates
                let mut idx = vec![0usize; arity - 1];
                'tuples: loop {
                    let mut slot = 0;
                    for (i, arg) in args.iter_mut().enumerate() {
                        *arg = if i == pos {
                            x
                        } else {
                            let v = state.assigned[idx[slot]];
                            slot += 1;
                            v
                        };
                    }
                    for (im, &arg) in image.iter_mut().zip(args.iter()) {
                        *im = state.assignment[arg];
                    }
                    let z = self.a.eval(op, &args);
                    let w = self.b.eval(op, &image);
                    if state.assignment[z] != usize::MAX {
                        if state.assignment[z] != w {
                            return false;
                        }
                    } else {
                        let target = BitSet::singleton(m, w);
                        state.domains[z].intersect_with(&target);
                        if state.domains[z].is_empty() {
                            return false;
                        }
                    }
                    let mut p = arity - 1;
                    loop {
                        if p == 0 {
                            break 'tuples;
                        }
                        p -= 1;
                        idx[p] += 1;
                        if idx[p] < k {
                            continue 'tuples;
                        }
                        idx[p] = 0;
                    }
                }
            }
        }
        true
    }

    fn assign(&self, state: &mut State, x: usize, t: usize) -> bool {
        state.domains[x] = BitSet::singleton(self.b.size(), t);
        state.assignment[x] = t;
        state.assigned.push(x);
        if self.injective {
            for v in 0..self.a.size() {
                if state.assignment[v] == usize::MAX && v != x {
                    state.domains[v].remove(t);
                    if state.domains[v].is_empty() {
                        return false;
                    }
                }
            }
        }
        for &(p, q) in self.merge {
            let other = if p == x {
                q
            } else if q == x {
                p
            } else {
                continue;
            };
            if state.assignment[other] == usize::MAX {
                let target = BitSet::singleton(self.b.size(), t);
                state.domains[other].intersect_with(&target);
                if state.domains[other].is_empty() {
                    return false;
                }
            } else if state.assignment[other] != t {
                return false;
            }
        }
        self.propagate_assignment(state, x) && self.unary_arc_consistency(state)
    }

    /// Most-constrained unassigned variable, ties broken by smallest index.
    fn pick_variable(&self, state: &State) -> Option<usize> {
        (0..self.a.size())
            .filter(|&v| state.assignment[v] == usize::MAX)
            .min_by_key(|&v| (state.domains[v].count(), v))
    }

    /// Exhaustive backtracking; `visit` returns true to stop the search.
    fn run(&self, state: &State, visit: &mut impl FnMut(&[usize]) -> bool) -> bool {
        match self.pick_variable(state) {
            None => {
                debug_assert!(is_homomorphism(self.a, self.b, &state.assignment));
                visit(&state.assignment)
            }
            Some(x) => {
                for t in state.domains[x].elems() {
                    let mut next = State {
                        domains: state.domains.clone(),
                        assignment: state.assignment.clone(),
                        assigned: state.assigned.clone(),
                    };
                    if self.assign(&mut next, x, t) && self.run(&next, visit) {
                        return true;
                    }
                }
                false
            }
        }
    }
}

fn check_signatures(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Result<(), AlgebraError> {
    if a.signature() != b.signature() {
        return Err(AlgebraError::SignatureMismatch);
    }
    Ok(())
}

/// A homomorphism `a -> b`, if one exists.
pub fn find_hom(
    a: &FiniteAlgebra,
    b: &FiniteAlgebra,
) -> Result<Option<HomWitness>, AlgebraError> {
    check_signatures(a, b)?;
    Ok(search_one(a, b, false, &[], None))
}

fn search_one(
    a: &FiniteAlgebra,
    b: &FiniteAlgebra,
    injective: bool,
    merge: &[(usize, usize)],
    seed_domains: Option<Vec<BitSet>>,
) -> Option<HomWitness> {
    let search = Search::new(a, b, injective, merge);
    let state = search.initial_state(seed_domains)?;
    let mut found: Option<Vec<usize>> = None;
    search.run(&state, &mut |map| {
        found = Some(map.to_vec());
        true
    });
    found.map(|map| HomWitness {
        source_size: a.size(),
        target_size: b.size(),
        map,
    })
}

/// The exact number of homomorphisms `a -> b`, by exhaustive backtracking
/// with no early exit.
pub fn count_homs(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Result<u64, AlgebraError> {
    check_signatures(a, b)?;
    let search = Search::new(a, b, false, &[]);
    let Some(state) = search.initial_state(None) else {
        return Ok(0);
    };
    let mut count = 0u64;
    search.run(&state, &mut |_| {
        count += 1;
        false
    });
    Ok(count)
}

/// Whether homomorphisms exist in both directions.
pub fn hom_equivalent(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Result<bool, AlgebraError> {
    Ok(find_hom(a, b)?.is_some() && find_hom(b, a)?.is_some())
}

fn element_invariant(a: &FiniteAlgebra, x: usize) -> (usize, Vec<bool>) {
    let generated = subuniverse_closure(a, &[x]).len();
    let fixed: Vec<bool> = (0..a.signature().len())
        .filter(|&op| a.signature().arity(op) == 1)
        .map(|op| a.eval(op, &[x]) == x)
        .collect();
    (generated, fixed)
}

/// An isomorphism `a -> b`, if one exists: a bijective homomorphism, whose
/// inverse is then automatically a homomorphism. Pruned by size, by the
/// counts of one-generated subuniverses, and by unary fixpoint profiles.
pub fn find_isomorphism(
    a: &FiniteAlgebra,
    b: &FiniteAlgebra,
) -> Result<Option<HomWitness>, AlgebraError> {
    check_signatures(a, b)?;
    if a.size() != b.size() {
        return Ok(None);
    }
    let inv_a: Vec<_> = (0..a.size()).map(|x| element_invariant(a, x)).collect();
    let inv_b: Vec<_> = (0..b.size()).map(|x| element_invariant(b, x)).collect();
    let mut sorted_a = inv_a.clone();
    let mut sorted_b = inv_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return Ok(None);
    }
    let domains: Vec<BitSet> = inv_a
        .iter()
        .map(|ia| {
            BitSet::from_elems(
                b.size(),
                (0..b.size()).filter(|&y| inv_b[y] == *ia),
            )
        })
        .collect();
    let witness = search_one(a, b, true, &[], Some(domains));
    if let Some(w) = &witness {
        debug_assert!({
            let mut inverse = vec![0usize; a.size()];
            for (x, &y) in w.map.iter().enumerate() {
                inverse[y] = x;
            }
            is_homomorphism(b, a, &inverse)
        });
    }
    Ok(witness)
}

/// A minimal retract of `a`: repeatedly finds a non-injective endomorphism
/// (searching for one that merges some pair, pairs in index order) and
/// restricts to its image, until every endomorphism is bijective. The
/// result is unique up to isomorphism.
pub fn core_of(a: &FiniteAlgebra) -> FiniteAlgebra {
    let mut current = a.clone();
    'shrink: loop {
        let n = current.size();
        for x in 0..n {
            for y in x + 1..n {
                let merge = [(x, y)];
                if let Some(w) = search_one(&current, &current, false, &merge, None) {
                    let mut image: Vec<usize> = w.map.clone();
                    image.sort_unstable();
                    image.dedup();
                    debug_assert!(image.len() < n);
                    current = induced_subalgebra(&current, &image)
                        .expect("endomorphism image is a subuniverse");
                    continue 'shrink;
                }
            }
        }
        return current;
    }
}
