//! Shared fixtures and independent oracles for the integration suites.
//!
//! The oracles here deliberately avoid the library's search and enumeration
//! paths: homomorphisms are counted by scanning all maps, congruences by
//! scanning all partitions, down-sets by scanning all subsets.

#![allow(dead_code)]

use homlat_core::algebra::{is_congruence, name_all_elements, FiniteAlgebra, Partition};
use homlat_core::hom::is_homomorphism;
use homlat_core::order::{Lattice, Poset};
use homlat_core::Signature;
use rand::Rng;

/// The six-element poset from the worked figure: elements 1..6 (indices
/// 0..5) with covers 5<3, 6<3, 6<4, 3<1, 3<2, 4<2.
pub fn fig_poset() -> Poset {
    let names = (1..=6).map(|i| i.to_string()).collect();
    Poset::new(names, vec![(4, 2), (5, 2), (5, 3), (2, 0), (2, 1), (3, 1)]).unwrap()
}

/// The five-element unary algebra on {0,1,2,u,v} (u,v encoded 3,4).
pub fn five_element_unary() -> FiniteAlgebra {
    let sig = Signature::new(vec![("f0", 1), ("f1", 1)]).unwrap();
    FiniteAlgebra::new(5, sig, vec![vec![3, 3, 0, 4, 4], vec![4, 4, 1, 3, 3]]).unwrap()
}

pub fn klein_four() -> FiniteAlgebra {
    let mut mul = Vec::new();
    for x in 0..4usize {
        for y in 0..4usize {
            mul.push(x ^ y);
        }
    }
    let sig = Signature::new(vec![("mul", 2), ("e", 0), ("inv", 1)]).unwrap();
    FiniteAlgebra::new(4, sig, vec![mul, vec![0], vec![0, 1, 2, 3]]).unwrap()
}

/// The three-element set with empty signature and every element named.
pub fn named_three_set() -> FiniteAlgebra {
    let bare = FiniteAlgebra::new(3, Signature::new(Vec::<(&str, usize)>::new()).unwrap(), vec![])
        .unwrap();
    name_all_elements(&bare).unwrap()
}

/// The symmetric group on three letters as a multiplication table.
/// Elements: id, (01), (02), (12), (012), (021) in that listing.
pub fn s3_table() -> (usize, Vec<usize>) {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [1, 0, 2],
        [2, 1, 0],
        [0, 2, 1],
        [1, 2, 0],
        [2, 0, 1],
    ];
    let compose = |p: [usize; 3], q: [usize; 3]| [p[q[0]], p[q[1]], p[q[2]]];
    let mut mul = Vec::with_capacity(36);
    for a in 0..6 {
        for b in 0..6 {
            let c = compose(perms[a], perms[b]);
            mul.push(perms.iter().position(|&p| p == c).unwrap());
        }
    }
    (6, mul)
}

pub fn m3_lattice() -> Lattice {
    let p = Poset::unnamed(5, vec![(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap();
    Lattice::from_poset(p).unwrap()
}

pub fn n5_lattice() -> Lattice {
    let p = Poset::unnamed(5, vec![(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap();
    Lattice::from_poset(p).unwrap()
}

pub fn chain_lattice(n: usize) -> Lattice {
    Lattice::from_poset(Poset::chain(n)).unwrap()
}

/// Counts homomorphisms by scanning all `|B|^|A|` maps.
pub fn exhaustive_hom_count(a: &FiniteAlgebra, b: &FiniteAlgebra) -> u64 {
    assert_eq!(a.signature(), b.signature());
    let (n, m) = (a.size(), b.size());
    let mut map = vec![0usize; n];
    let mut count = 0u64;
    loop {
        if is_homomorphism(a, b, &map) {
            count += 1;
        }
        let mut pos = n;
        loop {
            if pos == 0 {
                return count;
            }
            pos -= 1;
            map[pos] += 1;
            if map[pos] < m {
                break;
            }
            map[pos] = 0;
        }
    }
}

/// All self-maps of `a` that are homomorphisms, by exhaustive scan.
pub fn exhaustive_endomorphisms(a: &FiniteAlgebra) -> Vec<Vec<usize>> {
    let n = a.size();
    let mut map = vec![0usize; n];
    let mut out = Vec::new();
    loop {
        if is_homomorphism(a, a, &map) {
            out.push(map.clone());
        }
        let mut pos = n;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            map[pos] += 1;
            if map[pos] < n {
                break;
            }
            map[pos] = 0;
        }
    }
}

/// All partitions of an n-element set, as restricted growth strings.
pub fn all_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = vec![0usize; n];
    fn extend(n: usize, i: usize, max_used: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == n {
            out.push(Partition::from_block_id(current.clone()));
            return;
        }
        for b in 0..=max_used + 1 {
            current[i] = b;
            extend(n, i + 1, max_used.max(b), current, out);
        }
    }
    if n == 0 {
        return vec![];
    }
    extend(n, 1, 0, &mut current, &mut out);
    out
}

/// All congruences of `a` by scanning every partition of its universe, in
/// the same canonical order the library uses.
pub fn brute_force_congruences(a: &FiniteAlgebra) -> Vec<Partition> {
    let mut out: Vec<Partition> = all_partitions(a.size())
        .into_iter()
        .filter(|p| is_congruence(a, p))
        .collect();
    out.sort_by(|p, q| {
        p.num_blocks()
            .cmp(&q.num_blocks())
            .then_with(|| p.block_id().cmp(q.block_id()))
    });
    out
}

/// Counts the down-sets of a poset by scanning all subsets.
pub fn brute_force_downset_count(p: &Poset) -> usize {
    let n = p.size();
    assert!(n <= 20);
    (0u32..1 << n)
        .filter(|mask| {
            (0..n).all(|i| {
                mask >> i & 1 == 0
                    || p.down_set_of(i).iter().all(|j| mask >> j & 1 == 1)
            })
        })
        .count()
}

/// A random algebra with one unary and one binary operation.
pub fn random_algebra(rng: &mut impl Rng, max_size: usize) -> FiniteAlgebra {
    let size = rng.gen_range(1..=max_size);
    let sig = Signature::new(vec![("f", 1), ("g", 2)]).unwrap();
    let unary: Vec<usize> = (0..size).map(|_| rng.gen_range(0..size)).collect();
    let binary: Vec<usize> = (0..size * size).map(|_| rng.gen_range(0..size)).collect();
    FiniteAlgebra::new(size, sig, vec![unary, binary]).unwrap()
}
