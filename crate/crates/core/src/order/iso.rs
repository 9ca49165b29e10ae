//! Order-isomorphism search and quasi-order condensation.

use super::{Lattice, OrderError, Poset};

fn invariant(p: &Poset, heights: &[usize], i: usize) -> (usize, usize, usize, usize, usize) {
    (
        p.down_set_of(i).count(),
        p.up_set_of(i).count(),
        p.lower_covers(i).len(),
        p.upper_covers(i).len(),
        heights[i],
    )
}

/// An order isomorphism `p -> q` as an index map, or `None`. Backtracking
/// over elements with degree and height invariants as a prefilter.
pub fn poset_iso(p: &Poset, q: &Poset) -> Option<Vec<usize>> {
    let n = p.size();
    if n != q.size() {
        return None;
    }
    let (hp, hq) = (p.heights(), q.heights());
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            let inv = invariant(p, &hp, i);
            (0..n).filter(|&j| invariant(q, &hq, j) == inv).collect()
        })
        .collect();
    if candidates.iter().any(|c| c.is_empty()) {
        return None;
    }
    // most constrained variable first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (candidates[i].len(), i));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if assign(p, q, &candidates, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn assign(
    p: &Poset,
    q: &Poset,
    candidates: &[Vec<usize>],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let x = order[depth];
    for &y in &candidates[x] {
        if used[y] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&z| {
            p.le(x, z) == q.le(y, map[z]) && p.le(z, x) == q.le(map[z], y)
        });
        if !consistent {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if assign(p, q, candidates, order, depth + 1, map, used) {
            return true;
        }
        map[x] = usize::MAX;
        used[y] = false;
    }
    false
}

/// A lattice isomorphism as an index map, or `None`. An order isomorphism
/// between lattices automatically preserves meet and join.
pub fn lattice_iso(l1: &Lattice, l2: &Lattice) -> Option<Vec<usize>> {
    poset_iso(l1.poset(), l2.poset())
}

/// Collapses a reflexive transitive relation on `0..k` to a poset on its
/// strongly connected classes. Returns the class poset (classes numbered by
/// least member, named by their member lists) and the item-to-class map.
pub fn condense(
    k: usize,
    le: impl Fn(usize, usize) -> bool,
) -> Result<(Poset, Vec<usize>), OrderError> {
    for i in 0..k {
        if !le(i, i) {
            return Err(OrderError::NotQuasiOrder("relation is not reflexive"));
        }
    }
    for i in 0..k {
        for j in 0..k {
            for l in 0..k {
                if le(i, j) && le(j, l) && !le(i, l) {
                    return Err(OrderError::NotQuasiOrder("relation is not transitive"));
                }
            }
        }
    }
    let mut class_of = vec![usize::MAX; k];
    let mut reps: Vec<usize> = Vec::new();
    for i in 0..k {
        if class_of[i] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(i);
        for (j, slot) in class_of.iter_mut().enumerate().skip(i) {
            if le(i, j) && le(j, i) {
                *slot = c;
            }
        }
    }
    let names: Vec<String> = reps
        .iter()
        .enumerate()
        .map(|(c, _)| {
            let members: Vec<String> = (0..k)
                .filter(|&i| class_of[i] == c)
                .map(|i| i.to_string())
                .collect();
            format!("{{{}}}", members.join(","))
        })
        .collect();
    let class_le = |a: usize, b: usize| le(reps[a], reps[b]);
    let poset = Poset::from_le(names, reps.len(), class_le)?;
    Ok((poset, class_of))
}
