//! Lattices, down-set and up-set lattices, divisor lattices.

use super::{OrderError, Poset};
use crate::bitset::BitSet;
use crate::budget::Budget;
use std::collections::BTreeMap;

/// A finite lattice: a poset in which every pair has a unique least upper
/// and greatest lower bound, with the two tables stored explicitly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Lattice {
    poset: Poset,
    meet: Vec<usize>,
    join: Vec<usize>,
}

impl Lattice {
    /// Derives the meet and join tables from the order, failing if some
    /// pair has no greatest lower or least upper bound.
    pub fn from_poset(poset: Poset) -> Result<Lattice, OrderError> {
        let n = poset.size();
        if n == 0 {
            return Err(OrderError::EmptyPoset);
        }
        let mut meet = vec![0usize; n * n];
        let mut join = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                meet[a * n + b] = bound(&poset, a, b, true)
                    .ok_or(OrderError::NotALattice { a, b, kind: "meet" })?;
                join[a * n + b] = bound(&poset, a, b, false)
                    .ok_or(OrderError::NotALattice { a, b, kind: "join" })?;
            }
        }
        Ok(Lattice { poset, meet, join })
    }

    /// Assembles a lattice whose tables were computed by the caller; used by
    /// the set-lattice builders where meet and join are intersection and
    /// union by construction.
    pub(crate) fn from_tables(poset: Poset, meet: Vec<usize>, join: Vec<usize>) -> Lattice {
        Lattice { poset, meet, join }
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn size(&self) -> usize {
        self.poset.size()
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size() + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size() + b]
    }

    pub fn top(&self) -> usize {
        self.poset.top().expect("a lattice has a top")
    }

    pub fn bottom(&self) -> usize {
        self.poset.bottom().expect("a lattice has a bottom")
    }

    /// Checks `x /\ (y \/ z) = (x /\ y) \/ (x /\ z)` over all triples.
    pub fn is_distributive(&self) -> bool {
        let n = self.size();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = self.meet(x, self.join(y, z));
                    let rhs = self.join(self.meet(x, y), self.meet(x, z));
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The subposet of join-irreducible elements (exactly one lower cover).
    /// For a distributive lattice, `downset_lattice` of this poset recovers
    /// the lattice.
    pub fn join_irreducibles(&self) -> Poset {
        let elems: Vec<usize> = (0..self.size())
            .filter(|&i| self.poset.lower_covers(i).len() == 1)
            .collect();
        self.poset.induced(&elems)
    }
}

fn bound(poset: &Poset, a: usize, b: usize, lower: bool) -> Option<usize> {
    let mut common = if lower {
        poset.down_set_of(a).clone()
    } else {
        poset.up_set_of(a).clone()
    };
    common.intersect_with(if lower {
        poset.down_set_of(b)
    } else {
        poset.up_set_of(b)
    });
    let mut best: Option<usize> = None;
    for c in common.iter() {
        if lower {
            if common.is_subset(poset.down_set_of(c)) {
                best = Some(c);
            }
        } else if common.is_subset(poset.up_set_of(c)) {
            best = Some(c);
        }
        if best.is_some() {
            break;
        }
    }
    best
}

/// All down-sets of `p`, canonically ordered by size then lexicographically.
/// Enumeration recurses over a fixed linear extension, so each down-set is
/// produced exactly once.
pub fn downsets(p: &Poset, budget: &Budget) -> Result<Vec<BitSet>, OrderError> {
    let order = p.linear_extension();
    let mut out: Vec<BitSet> = Vec::new();
    let mut current = BitSet::empty(p.size());
    extend_downsets(p, &order, 0, &mut current, &mut out, budget.downsets)?;
    out.sort_by(|x, y| x.count().cmp(&y.count()).then_with(|| x.cmp(y)));
    Ok(out)
}

fn extend_downsets(
    p: &Poset,
    order: &[usize],
    i: usize,
    current: &mut BitSet,
    out: &mut Vec<BitSet>,
    cap: usize,
) -> Result<(), OrderError> {
    if i == order.len() {
        if out.len() >= cap {
            return Err(OrderError::BudgetExceeded {
                what: "down-sets",
                cap,
            });
        }
        out.push(current.clone());
        return Ok(());
    }
    let e = order[i];
    extend_downsets(p, order, i + 1, current, out, cap)?;
    let mut strictly_below = p.down_set_of(e).clone();
    strictly_below.remove(e);
    if strictly_below.is_subset(current) {
        current.insert(e);
        extend_downsets(p, order, i + 1, current, out, cap)?;
        current.remove(e);
    }
    Ok(())
}

/// All up-sets of `p` (complements of down-sets), canonically ordered.
pub fn upsets(p: &Poset, budget: &Budget) -> Result<Vec<BitSet>, OrderError> {
    let mut out: Vec<BitSet> = downsets(p, budget)?
        .into_iter()
        .map(|d| d.complement())
        .collect();
    out.sort_by(|x, y| x.count().cmp(&y.count()).then_with(|| x.cmp(y)));
    Ok(out)
}

fn subset_names(p: &Poset, sets: &[BitSet]) -> Vec<String> {
    sets.iter()
        .map(|s| {
            let inner: Vec<&str> = s.iter().map(|e| p.name(e)).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect()
}

/// Builds the lattice of a family of sets ordered by inclusion, with meet
/// and join given by intersection and union. The family must be closed
/// under both (up to the `meet_total` caveat for up-set families).
fn set_family_lattice(
    p: &Poset,
    sets: Vec<BitSet>,
    kind: &'static str,
) -> Result<Lattice, OrderError> {
    let index: BTreeMap<BitSet, usize> = sets
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), i))
        .collect();
    let m = sets.len();
    // in a family closed under one-element steps, covers are exactly the
    // inclusions that grow the set by a single element
    let covers: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (0..m).map(move |j| (i, j)))
        .filter(|&(i, j)| sets[j].count() == sets[i].count() + 1 && sets[i].is_subset(&sets[j]))
        .collect();
    let poset = Poset::new(subset_names(p, &sets), covers)?;
    let mut meet = vec![0usize; m * m];
    let mut join = vec![0usize; m * m];
    for i in 0..m {
        for j in 0..m {
            let mut inter = sets[i].clone();
            inter.intersect_with(&sets[j]);
            let mut uni = sets[i].clone();
            uni.union_with(&sets[j]);
            meet[i * m + j] = *index.get(&inter).ok_or(OrderError::NotALattice {
                a: i,
                b: j,
                kind,
            })?;
            join[i * m + j] = *index.get(&uni).ok_or(OrderError::NotALattice {
                a: i,
                b: j,
                kind,
            })?;
        }
    }
    Ok(Lattice::from_tables(poset, meet, join))
}

/// The lattice of all down-sets of `p` under inclusion; the empty poset
/// yields the one-element lattice.
pub fn downset_lattice(p: &Poset, budget: &Budget) -> Result<Lattice, OrderError> {
    set_family_lattice(p, downsets(p, budget)?, "meet")
}

/// The lattice of all non-empty up-sets of `p` under inclusion.
///
/// This is a lattice exactly when any two non-empty up-sets intersect
/// (always the case when `p` has a top); otherwise `NotALattice` is
/// returned naming an offending pair.
pub fn nonempty_upsets(p: &Poset, budget: &Budget) -> Result<Lattice, OrderError> {
    if p.is_empty() {
        return Err(OrderError::EmptyPoset);
    }
    let sets: Vec<BitSet> = upsets(p, budget)?
        .into_iter()
        .filter(|s| !s.is_empty())
        .collect();
    set_family_lattice(p, sets, "meet")
}

/// The divisors of `n` ordered by divisibility; meet is gcd, join is lcm.
pub fn divisor_lattice(n: u64) -> Lattice {
    assert!(n >= 1);
    let divisors: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    let names = divisors.iter().map(|d| d.to_string()).collect();
    let k = divisors.len();
    let le = |i: usize, j: usize| divisors[j].is_multiple_of(divisors[i]);
    let poset = Poset::from_le(names, k, le).expect("divisibility is a partial order");
    Lattice::from_poset(poset).expect("divisor order is a lattice")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    #[test]
    fn downsets_of_small_posets() {
        let b = Budget::default();
        assert_eq!(downsets(&Poset::antichain(2), &b).unwrap().len(), 4);
        assert_eq!(downsets(&Poset::chain(2), &b).unwrap().len(), 3);
        let empty = Poset::antichain(0);
        assert_eq!(downset_lattice(&empty, &b).unwrap().size(), 1);
    }

    #[test]
    fn downset_lattice_tables_match_order_derived_tables() {
        let b = Budget::default();
        for p in [
            Poset::antichain(2),
            Poset::chain(3),
            Poset::unnamed(4, vec![(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap(),
        ] {
            let fast = downset_lattice(&p, &b).unwrap();
            let slow = Lattice::from_poset(fast.poset().clone()).unwrap();
            assert_eq!(fast, slow);
        }
    }

    #[test]
    fn upset_count_of_divisor_lattices() {
        let b = Budget::default();
        let d6 = divisor_lattice(6);
        let ups = nonempty_upsets(d6.poset(), &b).unwrap();
        assert_eq!(ups.size(), 5);
        // 2x2 with a new top: the top has a single lower cover
        assert_eq!(ups.poset().lower_covers(ups.top()).len(), 1);
        let single = nonempty_upsets(&Poset::chain(1), &b).unwrap();
        assert_eq!(single.size(), 1);
    }

    #[test]
    fn two_antichain_upsets_do_not_form_a_lattice() {
        let b = Budget::default();
        let sets = upsets(&Poset::antichain(2), &b).unwrap();
        assert_eq!(sets.iter().filter(|s| !s.is_empty()).count(), 3);
        let err = nonempty_upsets(&Poset::antichain(2), &b).unwrap_err();
        assert!(matches!(err, OrderError::NotALattice { .. }));
    }

    #[test]
    fn divisor_lattice_meets_are_gcds() {
        for n in [1u64, 6, 12, 30] {
            let l = divisor_lattice(n);
            let divisors: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
            for i in 0..divisors.len() {
                for j in 0..divisors.len() {
                    let g = gcd(divisors[i], divisors[j]);
                    assert_eq!(divisors[l.meet(i, j)], g);
                    assert_eq!(divisors[l.join(i, j)], divisors[i] / g * divisors[j]);
                }
            }
        }
        assert_eq!(divisor_lattice(6).size(), 4);
        assert_eq!(divisor_lattice(12).size(), 6);
    }

    #[test]
    fn chains_are_distributive_m3_and_n5_are_not() {
        assert!(Lattice::from_poset(Poset::chain(4)).unwrap().is_distributive());
        let m3 = Poset::unnamed(5, vec![(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap();
        assert!(!Lattice::from_poset(m3).unwrap().is_distributive());
        let n5 = Poset::unnamed(5, vec![(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap();
        assert!(!Lattice::from_poset(n5).unwrap().is_distributive());
    }

    #[test]
    fn join_irreducibles_of_boolean_square_and_chain() {
        let b = Budget::default();
        let square = downset_lattice(&Poset::antichain(2), &b).unwrap();
        let ji = square.join_irreducibles();
        assert_eq!(ji.size(), 2);
        assert!(ji.covers().is_empty());
        let chain = Lattice::from_poset(Poset::chain(4)).unwrap();
        let ji = chain.join_irreducibles();
        assert_eq!(ji.size(), 3);
        assert_eq!(ji.covers().len(), 2);
    }
}
