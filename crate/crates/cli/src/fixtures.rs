//! Fixtures embedded in the binary, addressable as `builtin:NAME`.

use crate::files::{render_json, AlgebraFile, PosetFile};
use homlat_core::synth::{graph_star, gset_coset_algebra, pentagon_algebra, Digraph};
use homlat_core::{FiniteAlgebra, Signature};

pub const NAMES: [&str; 6] = [
    "fig2-poset",
    "fig4-U",
    "fig4-G",
    "fig6-pentagon",
    "s3-gset",
    "klein4",
];

pub enum Fixture {
    Algebra(AlgebraFile),
    Poset(PosetFile),
}

fn five_element_unary() -> FiniteAlgebra {
    let sig = Signature::new(vec![("f0", 1), ("f1", 1)]).unwrap();
    FiniteAlgebra::new(5, sig, vec![vec![3, 3, 0, 4, 4], vec![4, 4, 1, 3, 3]]).unwrap()
}

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

fn klein_four() -> FiniteAlgebra {
    let mut mul = Vec::new();
    for x in 0..4usize {
        for y in 0..4usize {
            mul.push(x ^ y);
        }
    }
    let sig = Signature::new(vec![("mul", 2), ("e", 0), ("inv", 1)]).unwrap();
    FiniteAlgebra::new(4, sig, vec![mul, vec![0], vec![0, 1, 2, 3]]).unwrap()
}

pub fn get(name: &str) -> Option<Fixture> {
    match name {
        "fig2-poset" => Some(Fixture::Poset(PosetFile {
            elements: (1..=6).map(|i| i.to_string()).collect(),
            covers: vec![(2, 0), (2, 1), (3, 1), (4, 2), (5, 2), (5, 3)],
        })),
        "fig4-U" => Some(Fixture::Algebra(AlgebraFile::from_algebra(
            &five_element_unary(),
            Some("five-element unary algebra".to_owned()),
            false,
        ))),
        "fig4-G" => {
            // loop at a, edge a -> b, edges b <-> c, as an arrow algebra
            let g = Digraph::new(3, vec![(0, 0), (0, 1), (1, 2), (2, 1)]);
            Some(Fixture::Algebra(AlgebraFile::from_algebra(
                &graph_star(&g),
                Some("arrow algebra of the three-vertex digraph".to_owned()),
                false,
            )))
        }
        "fig6-pentagon" => Some(Fixture::Algebra(AlgebraFile::from_algebra(
            &pentagon_algebra(),
            Some("named distributive bisemilattice with Con = N5".to_owned()),
            false,
        ))),
        "s3-gset" => {
            let (n, mul) = s3_table();
            let a = gset_coset_algebra(n, &mul, &[0, 1]).unwrap();
            Some(Fixture::Algebra(AlgebraFile::from_algebra(
                &a,
                Some("cosets of a transposition in S3, plus a fixed point".to_owned()),
                false,
            )))
        }
        "klein4" => Some(Fixture::Algebra(AlgebraFile::from_algebra(
            &klein_four(),
            Some("Klein four-group".to_owned()),
            false,
        ))),
        _ => None,
    }
}

pub fn render(name: &str) -> Option<String> {
    Some(match get(name)? {
        Fixture::Algebra(file) => render_json(&file),
        Fixture::Poset(file) => render_json(&file),
    })
}
