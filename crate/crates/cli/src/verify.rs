//! The `verify` pipelines: the poset round trip, the figure goldens, and
//! the worked examples. Each check prints one line; the first mismatch
//! aborts with exit code 1 and names the counterexample.

use crate::error::CliError;
use homlat_core::algebra::{congruence_lattice, quotient_algebra, FiniteAlgebra, Partition};
use homlat_core::hom::{count_homs, find_hom, find_isomorphism};
use homlat_core::homlat::{lemma13_check, verify_roundtrip};
use homlat_core::order::{
    add_top, covering_forest, divisor_lattice, lattice_iso, nonempty_upsets, poset_census, sharp,
    Lattice, Poset,
};
use homlat_core::synth::{
    cycle_algebra, graph_star, gset_coset_algebra, monounary_hom_lattice, pentagon_algebra,
    Digraph,
};
use homlat_core::{Budget, Signature};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::fmt::Write as _;

fn fig_poset() -> Poset {
    let names = (1..=6).map(|i| i.to_string()).collect();
    Poset::new(names, vec![(4, 2), (5, 2), (5, 3), (2, 0), (2, 1), (3, 1)]).unwrap()
}

fn mismatch(check: &str, detail: impl std::fmt::Display) -> CliError {
    CliError::Mismatch(format!("check `{check}` failed: {detail}"))
}

pub fn run_roundtrip(budget: &Budget) -> Result<String, CliError> {
    let mut out = String::new();
    let mut posets = poset_census(4);
    posets.push(fig_poset());
    for (i, p) in posets.iter().enumerate() {
        let report = verify_roundtrip(p, budget)?;
        if !report.passed() {
            return Err(mismatch(
                &format!("roundtrip {}", i + 1),
                format!(
                    "no isomorphism between the computed {}-element and expected {}-element lattices for covers {:?}",
                    report.computed.size(),
                    report.expected.size(),
                    p.covers()
                ),
            ));
        }
        writeln!(
            out,
            "roundtrip {:2}/{}: poset size {} -> |Q| = {:2}, lattice size {:2}: ok",
            i + 1,
            posets.len(),
            p.size(),
            report.q.size(),
            report.computed.size()
        )
        .unwrap();
    }
    writeln!(out, "roundtrip: {} posets verified", posets.len()).unwrap();
    Ok(out)
}

fn n5_lattice() -> Lattice {
    let p = Poset::unnamed(5, vec![(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap();
    Lattice::from_poset(p).unwrap()
}

fn m3_lattice() -> Lattice {
    let p = Poset::unnamed(5, vec![(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap();
    Lattice::from_poset(p).unwrap()
}

fn pentagon_quotient_fixtures() -> [FiniteAlgebra; 3] {
    let sig = pentagon_algebra().signature().clone();
    [
        FiniteAlgebra::new(
            2,
            sig.clone(),
            vec![
                vec![0, 0, 0, 1],
                vec![0, 0, 0, 1],
                vec![0],
                vec![1],
                vec![0],
                vec![1],
            ],
        )
        .unwrap(),
        FiniteAlgebra::new(
            2,
            sig.clone(),
            vec![
                vec![0, 0, 0, 1],
                vec![0, 1, 1, 1],
                vec![0],
                vec![0],
                vec![1],
                vec![1],
            ],
        )
        .unwrap(),
        FiniteAlgebra::new(
            3,
            sig,
            vec![
                vec![0, 0, 0, 0, 1, 1, 0, 1, 2],
                vec![0, 0, 0, 0, 1, 2, 0, 2, 2],
                vec![0],
                vec![1],
                vec![0],
                vec![2],
            ],
        )
        .unwrap(),
    ]
}

pub fn run_figures(budget: &Budget) -> Result<String, CliError> {
    let mut out = String::new();
    let p = fig_poset();

    let forest = covering_forest(&p, budget)?;
    let words: BTreeSet<String> = forest.words().iter().map(|w| w.render(&p)).collect();
    let expected: BTreeSet<String> = [
        "1", "2", "3.1", "3.2", "4.2", "5.3.1", "5.3.2", "6.3.1", "6.3.2", "6.4.2",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    if words != expected {
        return Err(mismatch("figure forest words", format!("{words:?}")));
    }
    writeln!(out, "figure check: covering forest words (10): ok").unwrap();

    let psharp = sharp(&add_top(&p))?;
    let tree = covering_forest(&psharp, budget)?;
    let tree_words: BTreeSet<String> = tree.words().iter().map(|w| w.render(&psharp)).collect();
    let expected_tree: BTreeSet<String> = [
        "⊤", "1.⊤", "2.⊤", "3.1.⊤", "3.2.⊤", "4.2.⊤", "5.3.1.⊤", "5.3.2.⊤", "6.3.1.⊤",
        "6.3.2.⊤", "6.4.2.⊤", "5'.5.3.1.⊤", "5'.5.3.2.⊤", "6'.6.3.1.⊤", "6'.6.3.2.⊤",
        "6'.6.4.2.⊤",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    if tree_words != expected_tree {
        return Err(mismatch("figure sharp tree", format!("{tree_words:?}")));
    }
    writeln!(out, "figure check: sharpened covering tree (16 words): ok").unwrap();

    let pentagon = pentagon_algebra();
    let (congruences, con_lattice) = congruence_lattice(&pentagon, budget)?;
    let expected = vec![
        Partition::total(4),
        Partition::from_block_id(vec![0, 0, 1, 1]),
        Partition::from_block_id(vec![0, 1, 0, 1]),
        Partition::from_block_id(vec![0, 1, 0, 2]),
        Partition::identity(4),
    ];
    if congruences != expected {
        return Err(mismatch(
            "figure congruences",
            congruences
                .iter()
                .map(|c| c.render())
                .collect::<Vec<_>>()
                .join(" ; "),
        ));
    }
    if lattice_iso(&con_lattice, &n5_lattice()).is_none() {
        return Err(mismatch("figure Con shape", "not the pentagon lattice"));
    }
    writeln!(out, "figure check: pentagon congruence lattice is N5: ok").unwrap();

    let fixtures = pentagon_quotient_fixtures();
    for (theta, fixture) in [
        Partition::from_block_id(vec![0, 1, 0, 1]),
        Partition::from_block_id(vec![0, 0, 1, 1]),
        Partition::from_block_id(vec![0, 1, 0, 2]),
    ]
    .iter()
    .zip(&fixtures)
    {
        let quotient = quotient_algebra(&pentagon, theta)?;
        if find_isomorphism(&quotient, fixture)?.is_none() {
            return Err(mismatch(
                "figure quotients",
                format!("quotient by {} differs", theta.render()),
            ));
        }
    }
    writeln!(out, "figure check: the three quotients (sizes 2, 2, 3): ok").unwrap();
    Ok(out)
}

fn all_digraphs_up_to_two_vertices() -> Vec<Digraph> {
    let mut out = Vec::new();
    for mask in 0..2u32 {
        let edges = (mask & 1 == 1).then_some((0, 0));
        out.push(Digraph::new(1, edges));
    }
    let pairs = [(0, 0), (0, 1), (1, 0), (1, 1)];
    for mask in 0..16u32 {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        out.push(Digraph::new(2, edges));
    }
    out
}

pub fn run_examples(budget: &Budget) -> Result<String, CliError> {
    let mut out = String::new();

    // arrow-algebra hom counts on all digraphs with at most two vertices
    let digraphs = all_digraphs_up_to_two_vertices();
    for g in &digraphs {
        for h in &digraphs {
            if count_homs(&graph_star(g), &graph_star(h))? != g.hom_count(h) {
                return Err(mismatch(
                    "example hom counts",
                    format!("{g:?} -> {h:?}"),
                ));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..10 {
        let (g, h) = (random_digraph(&mut rng), random_digraph(&mut rng));
        if count_homs(&graph_star(&g), &graph_star(&h))? != g.hom_count(&h) {
            return Err(mismatch("example hom counts (random)", format!("{g:?} -> {h:?}")));
        }
    }
    writeln!(out, "example check: arrow-algebra hom counts (334 pairs): ok").unwrap();

    // monounary formula instances
    for (lengths, n) in [
        (&[1][..], 1u64),
        (&[2], 2),
        (&[4], 4),
        (&[2, 3], 6),
        (&[3, 4], 12),
    ] {
        let lattice = monounary_hom_lattice(&cycle_algebra(lengths))?;
        let expected = nonempty_upsets(divisor_lattice(n).poset(), budget)?;
        if lattice_iso(&lattice, &expected).is_none() {
            return Err(mismatch("example monounary", format!("cycles {lengths:?}")));
        }
    }
    writeln!(out, "example check: monounary hom lattices (5 instances): ok").unwrap();

    // equivalence-relation and subspace lattices
    let bare =
        FiniteAlgebra::new(3, Signature::new(Vec::<(&str, usize)>::new()).unwrap(), vec![])
            .unwrap();
    let named = homlat_core::algebra::name_all_elements(&bare).unwrap();
    let (congruences, lattice) = congruence_lattice(&named, budget)?;
    if congruences.len() != 5 || lattice_iso(&lattice, &m3_lattice()).is_none() {
        return Err(mismatch("example Equiv(3)", "congruence lattice is not M3"));
    }
    let mut mul = Vec::new();
    for x in 0..4usize {
        for y in 0..4usize {
            mul.push(x ^ y);
        }
    }
    let klein = FiniteAlgebra::new(
        4,
        Signature::new(vec![("mul", 2), ("e", 0), ("inv", 1)]).unwrap(),
        vec![mul, vec![0], vec![0, 1, 2, 3]],
    )
    .unwrap();
    let (_, klein_lattice) = congruence_lattice(&klein, budget)?;
    if lattice_iso(&klein_lattice, &m3_lattice()).is_none() {
        return Err(mismatch("example Klein", "congruence lattice is not M3"));
    }
    writeln!(out, "example check: Equiv(3) and Klein four-group give M3: ok").unwrap();

    // coset action: a three-chain
    let (order, mul) = crate::fixtures::s3_table();
    let a = gset_coset_algebra(order, &mul, &[0, 1])?;
    let (_, gset_lattice) = congruence_lattice(&a, budget)?;
    let three_chain = Lattice::from_poset(Poset::chain(3)).unwrap();
    if lattice_iso(&gset_lattice, &three_chain).is_none() {
        return Err(mismatch("example coset action", "not a 3-chain"));
    }
    writeln!(out, "example check: S3 coset action gives a 3-chain: ok").unwrap();

    // pentagon verdict
    let verdict = lemma13_check(&pentagon_algebra(), Some(&pentagon_quotient_fixtures()), budget)?;
    if !verdict.con_is_hom_lattice() {
        return Err(mismatch("example pentagon verdict", "conditions failed"));
    }
    let alpha = Partition::from_block_id(vec![0, 1, 0, 1]);
    let beta = Partition::from_block_id(vec![0, 0, 1, 1]);
    if alpha.meet(&beta) != Partition::identity(4) || alpha.join(&beta) != Partition::total(4) {
        return Err(mismatch("example pentagon verdict", "meet/join of alpha, beta"));
    }
    writeln!(out, "example check: pentagon congruence-route verdict: ok").unwrap();

    // homomorphism existence between single cycles follows reversed divisibility
    for d1 in [1usize, 2, 3, 6] {
        for d2 in [1usize, 2, 3, 6] {
            let exists = find_hom(&cycle_algebra(&[d1]), &cycle_algebra(&[d2]))?.is_some();
            if exists != (d1 % d2 == 0) {
                return Err(mismatch("example cycle order", format!("C_{d1} -> C_{d2}")));
            }
        }
    }
    writeln!(out, "example check: cycle hom order is reversed divisibility: ok").unwrap();
    Ok(out)
}

fn random_digraph(rng: &mut impl Rng) -> Digraph {
    let mut edges = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            if rng.gen_bool(0.5) {
                edges.push((a, b));
            }
        }
    }
    Digraph::new(3, edges)
}
