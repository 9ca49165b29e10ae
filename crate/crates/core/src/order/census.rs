//! Exhaustive census of small posets up to isomorphism.

use super::{downsets, Poset};
use crate::budget::Budget;

/// All non-empty posets with at most `max_size` elements, one per
/// isomorphism class, in a deterministic order (by size, then by canonical
/// form). The counts per size are 1, 2, 5, 16, 63, 318 for sizes 1..=6.
///
/// Every poset arises from a one-element-smaller poset by adding a new
/// maximal element whose strict down-set is a down-set of the rest, so the
/// census extends size by size, deduplicating with a canonical form (the
/// minimum strict-order bit matrix over all permutations).
pub fn poset_census(max_size: usize) -> Vec<Poset> {
    assert!((1..=7).contains(&max_size), "census is for small sizes");
    let budget = Budget::default();
    let mut out: Vec<Poset> = Vec::new();
    let mut layer: Vec<u64> = vec![0]; // the one-element poset
    out.push(matrix_to_poset(1, 0));
    for size in 2..=max_size {
        let mut canon_forms: Vec<u64> = Vec::new();
        for &parent in &layer {
            let p = matrix_to_poset(size - 1, parent);
            for d in downsets(&p, &budget).expect("small poset") {
                let mut matrix = extend_matrix(size - 1, parent, |i| d.contains(i));
                matrix = canonical_form(size, matrix);
                if !canon_forms.contains(&matrix) {
                    canon_forms.push(matrix);
                }
            }
        }
        canon_forms.sort_unstable();
        out.extend(canon_forms.iter().map(|&m| matrix_to_poset(size, m)));
        layer = canon_forms;
    }
    out
}

fn bit(matrix: u64, n: usize, i: usize, j: usize) -> bool {
    matrix >> (i * n + j) & 1 == 1
}

/// Adds element `n` above exactly the old elements selected by `below`.
fn extend_matrix(n: usize, matrix: u64, below: impl Fn(usize) -> bool) -> u64 {
    let m = n + 1;
    let mut out = 0u64;
    for i in 0..n {
        for j in 0..n {
            if bit(matrix, n, i, j) {
                out |= 1 << (i * m + j);
            }
        }
        if below(i) {
            out |= 1 << (i * m + n);
        }
    }
    out
}

fn canonical_form(n: usize, matrix: u64) -> u64 {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    permute(&mut perm, 0, &mut |perm| {
        let mut relabeled = 0u64;
        for i in 0..n {
            for j in 0..n {
                if bit(matrix, n, perm[i], perm[j]) {
                    relabeled |= 1 << (i * n + j);
                }
            }
        }
        best = best.min(relabeled);
    });
    best
}

fn permute(items: &mut [usize], k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

fn matrix_to_poset(n: usize, matrix: u64) -> Poset {
    let names = (0..n).map(|i| i.to_string()).collect();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| bit(matrix, n, i, j))
        .collect();
    Poset::from_order_pairs(names, pairs).expect("census matrices are strict orders")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_the_known_census() {
        let census = poset_census(5);
        let count = |n: usize| census.iter().filter(|p| p.size() == n).count();
        assert_eq!(count(1), 1);
        assert_eq!(count(2), 2);
        assert_eq!(count(3), 5);
        assert_eq!(count(4), 16);
        assert_eq!(count(5), 63);
    }

    #[test]
    fn census_is_irredundant() {
        use crate::order::poset_iso;
        let census = poset_census(4);
        for i in 0..census.len() {
            for j in i + 1..census.len() {
                assert!(poset_iso(&census[i], &census[j]).is_none());
            }
        }
    }
}
