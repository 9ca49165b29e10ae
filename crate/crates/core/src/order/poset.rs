//! Finite partially ordered sets given by their cover pairs.

use super::OrderError;
use crate::bitset::BitSet;

/// A finite poset over elements `0..size`, stored as the (validated) cover
/// relation plus precomputed reachability sets in both directions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poset {
    names: Vec<String>,
    covers: Vec<(usize, usize)>,
    below: Vec<BitSet>,
    above: Vec<BitSet>,
}

impl Poset {
    /// Builds a poset from genuine cover pairs `(lower, upper)`.
    ///
    /// Rejects out-of-range indices, reflexive pairs, cycles (reporting one
    /// witness cycle), and redundant pairs that are not covers (reporting an
    /// intermediate element). Redundant input being an error is deliberate;
    /// see [`Poset::from_order_pairs`] for the reducing constructor.
    pub fn new(
        names: Vec<String>,
        covers: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Poset, OrderError> {
        let n = names.len();
        let mut cover_set: Vec<(usize, usize)> = Vec::new();
        for (a, b) in covers {
            if a >= n {
                return Err(OrderError::IndexOutOfRange(a));
            }
            if b >= n {
                return Err(OrderError::IndexOutOfRange(b));
            }
            if a == b {
                return Err(OrderError::SelfCover(a));
            }
            if !cover_set.contains(&(a, b)) {
                cover_set.push((a, b));
            }
        }
        cover_set.sort_unstable();

        let below = transitive_closure(n, &cover_set)?;
        let mut above = vec![BitSet::empty(n); n];
        for (j, lower) in below.iter().enumerate() {
            for i in lower.iter() {
                above[i].insert(j);
            }
        }
        let poset = Poset {
            names,
            covers: cover_set,
            below,
            above,
        };
        for &(a, b) in &poset.covers {
            if let Some(via) = poset.between(a, b) {
                return Err(OrderError::NotACover {
                    lower: a,
                    via,
                    upper: b,
                });
            }
        }
        Ok(poset)
    }

    /// Builds a poset from arbitrary strict order pairs, transitively
    /// reducing them to covers first. Cycles are still an error.
    pub fn from_order_pairs(
        names: Vec<String>,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Poset, OrderError> {
        let n = names.len();
        let mut strict: Vec<(usize, usize)> = Vec::new();
        for (a, b) in pairs {
            if a >= n {
                return Err(OrderError::IndexOutOfRange(a));
            }
            if b >= n {
                return Err(OrderError::IndexOutOfRange(b));
            }
            if a == b {
                return Err(OrderError::SelfCover(a));
            }
            strict.push((a, b));
        }
        let below = transitive_closure(n, &strict)?;
        let lt = |a: usize, b: usize| a != b && below[b].contains(a);
        let covers: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b)))
            .collect();
        Poset::new(names, covers)
    }

    /// Builds a poset from a reflexive, antisymmetric, transitive relation
    /// given as a predicate.
    pub fn from_le(
        names: Vec<String>,
        n: usize,
        le: impl Fn(usize, usize) -> bool,
    ) -> Result<Poset, OrderError> {
        assert_eq!(names.len(), n);
        for i in 0..n {
            if !le(i, i) {
                return Err(OrderError::NotAPartialOrder("relation is not reflexive"));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && le(i, j) && le(j, i) {
                    return Err(OrderError::NotAPartialOrder("relation is not antisymmetric"));
                }
                for k in 0..n {
                    if le(i, j) && le(j, k) && !le(i, k) {
                        return Err(OrderError::NotAPartialOrder("relation is not transitive"));
                    }
                }
            }
        }
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| a != b && le(a, b))
            .collect();
        Poset::from_order_pairs(names, pairs)
    }

    /// A poset with elements named by their indices.
    pub fn unnamed(
        n: usize,
        covers: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Poset, OrderError> {
        Poset::new((0..n).map(|i| i.to_string()).collect(), covers)
    }

    /// An n-element chain `0 < 1 < .. < n-1`.
    pub fn chain(n: usize) -> Poset {
        Poset::unnamed(n, (1..n).map(|i| (i - 1, i))).expect("chain covers are valid")
    }

    /// An n-element antichain.
    pub fn antichain(n: usize) -> Poset {
        Poset::unnamed(n, Vec::new()).expect("antichain is valid")
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.below[b].contains(a)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.le(a, b)
    }

    /// `{ j : j <= i }`, including `i` itself.
    pub fn down_set_of(&self, i: usize) -> &BitSet {
        &self.below[i]
    }

    /// `{ j : i <= j }`, including `i` itself.
    pub fn up_set_of(&self, i: usize) -> &BitSet {
        &self.above[i]
    }

    pub fn maximals(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&i| self.above[i].count() == 1)
            .collect()
    }

    pub fn minimals(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&i| self.below[i].count() == 1)
            .collect()
    }

    /// The top element, when there is exactly one maximal element.
    pub fn top(&self) -> Option<usize> {
        match self.maximals()[..] {
            [t] if self.below[t].count() == self.size() => Some(t),
            _ => None,
        }
    }

    pub fn bottom(&self) -> Option<usize> {
        match self.minimals()[..] {
            [b] if self.above[b].count() == self.size() => Some(b),
            _ => None,
        }
    }

    /// The lower neighbourhood `{ c : c covered by i }`.
    pub fn lower_covers(&self, i: usize) -> Vec<usize> {
        self.covers
            .iter()
            .filter(|&&(_, b)| b == i)
            .map(|&(a, _)| a)
            .collect()
    }

    pub fn upper_covers(&self, i: usize) -> Vec<usize> {
        self.covers
            .iter()
            .filter(|&&(a, _)| a == i)
            .map(|&(_, b)| b)
            .collect()
    }

    /// Length (in covers) of the longest chain ending at each element.
    pub fn heights(&self) -> Vec<usize> {
        let order = self.linear_extension();
        let mut h = vec![0usize; self.size()];
        for &e in &order {
            for c in self.lower_covers(e) {
                h[e] = h[e].max(h[c] + 1);
            }
        }
        h
    }

    /// A topological order of the elements (lowest first, index tie-break).
    pub fn linear_extension(&self) -> Vec<usize> {
        let n = self.size();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (self.below[i].count(), i));
        // sorting by down-set size puts every element after all elements
        // strictly below it
        order
    }

    pub fn is_down_set(&self, set: &BitSet) -> bool {
        set.iter().all(|i| self.below[i].is_subset(set))
    }

    pub fn is_up_set(&self, set: &BitSet) -> bool {
        set.iter().all(|i| self.above[i].is_subset(set))
    }

    /// The subposet induced on `elements` (strictly increasing), with
    /// elements renamed to `0..k-1` in the same order.
    pub fn induced(&self, elements: &[usize]) -> Poset {
        let mut new_index = vec![usize::MAX; self.size()];
        for (i, &e) in elements.iter().enumerate() {
            new_index[e] = i;
        }
        let names = elements.iter().map(|&e| self.names[e].clone()).collect();
        let pairs: Vec<(usize, usize)> = elements
            .iter()
            .flat_map(|&a| elements.iter().map(move |&b| (a, b)))
            .filter(|&(a, b)| self.lt(a, b))
            .map(|(a, b)| (new_index[a], new_index[b]))
            .collect();
        Poset::from_order_pairs(names, pairs).expect("induced order is a partial order")
    }

    /// The poset with one element removed.
    pub fn without(&self, elem: usize) -> Poset {
        let rest: Vec<usize> = (0..self.size()).filter(|&i| i != elem).collect();
        self.induced(&rest)
    }

    /// Replaces the element names.
    pub fn with_names(mut self, names: Vec<String>) -> Poset {
        assert_eq!(names.len(), self.size());
        self.names = names;
        self
    }
}

/// `below[i] = { j : j <= i }` from a strict edge list; errors with a
/// witness cycle when the edges are not acyclic.
fn transitive_closure(n: usize, edges: &[(usize, usize)]) -> Result<Vec<BitSet>, OrderError> {
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut indegree = vec![0usize; n];
    for &(a, b) in edges {
        succ[a].push(b);
        indegree[b] += 1;
    }
    // Kahn's algorithm; anything left over lies on a cycle
    let mut queue: Vec<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
    let mut topo = Vec::with_capacity(n);
    let mut remaining = indegree.clone();
    while let Some(e) = queue.pop() {
        topo.push(e);
        for &s in &succ[e] {
            remaining[s] -= 1;
            if remaining[s] == 0 {
                queue.push(s);
            }
        }
    }
    if topo.len() != n {
        let on_cycle: Vec<usize> = (0..n).filter(|&i| remaining[i] > 0).collect();
        return Err(OrderError::CoverCycle(find_cycle(&succ, &on_cycle)));
    }
    let mut below: Vec<BitSet> = (0..n).map(|i| BitSet::singleton(n, i)).collect();
    for &e in &topo {
        for &s in &succ[e] {
            let lower = below[e].clone();
            below[s].union_with(&lower);
        }
    }
    Ok(below)
}

fn find_cycle(succ: &[Vec<usize>], candidates: &[usize]) -> Vec<usize> {
    // walk forward within the cyclic part until a vertex repeats
    let start = candidates[0];
    let mut path = vec![start];
    let mut seen = vec![false; succ.len()];
    seen[start] = true;
    let mut current = start;
    loop {
        let next = *succ[current]
            .iter()
            .find(|&&s| candidates.contains(&s))
            .expect("cyclic vertex has a cyclic successor");
        if seen[next] {
            let pos = path.iter().position(|&e| e == next).unwrap();
            return path[pos..].to_vec();
        }
        seen[next] = true;
        path.push(next);
        current = next;
    }
}

/// Checks whether `i` has an element strictly between `a` and `b`.
impl Poset {
    fn between(&self, a: usize, b: usize) -> Option<usize> {
        (0..self.size()).find(|&c| self.lt(a, c) && self.lt(c, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_and_antichain_basics() {
        let c = Poset::chain(3);
        assert!(c.le(0, 2) && !c.le(2, 0));
        assert_eq!(c.top(), Some(2));
        assert_eq!(c.bottom(), Some(0));
        assert_eq!(c.heights(), vec![0, 1, 2]);
        let a = Poset::antichain(2);
        assert_eq!(a.maximals(), vec![0, 1]);
        assert_eq!(a.top(), None);
    }

    #[test]
    fn cycle_is_reported_with_a_witness() {
        let err = Poset::unnamed(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap_err();
        match err {
            OrderError::CoverCycle(cycle) => assert_eq!(cycle.len(), 3),
            other => panic!("expected cycle, got {other:?}"),
        }
    }

    #[test]
    fn redundant_pair_is_rejected_but_reduced_constructor_accepts() {
        let err = Poset::unnamed(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap_err();
        assert_eq!(
            err,
            OrderError::NotACover {
                lower: 0,
                via: 1,
                upper: 2
            }
        );
        let p = Poset::from_order_pairs(
            (0..3).map(|i| i.to_string()).collect(),
            vec![(0, 1), (1, 2), (0, 2)],
        )
        .unwrap();
        assert_eq!(p.covers(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn induced_subposet_keeps_order() {
        let p = Poset::unnamed(4, vec![(0, 1), (1, 3), (2, 3)]).unwrap();
        let q = p.induced(&[0, 1, 3]);
        assert_eq!(q.size(), 3);
        assert!(q.le(0, 2));
        assert_eq!(q.covers(), &[(0, 1), (1, 2)]);
    }
}
