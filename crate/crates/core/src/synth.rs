//! Constructions that manufacture finite algebras from combinatorial data:
//! the quasi-primal synthesis from a poset, the Birkhoff–Frink semilattice
//! expansion, the arrow-algebra expansion of a digraph, coset algebras of
//! group actions, independent products, and small fixture algebras.

use crate::algebra::{
    direct_product, for_each_tuple, induced_subalgebra, name_all_elements, AlgebraError,
    FiniteAlgebra, Signature,
};
use crate::budget::Budget;
use crate::hom::discriminator_table;
use crate::order::{
    add_top, covering_forest, divisor_lattice, nonempty_upsets, sharp, CoveringForest, Lattice,
    OrderError, Poset, Word,
};
use std::collections::BTreeMap;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SynthError {
    #[error("poset is empty")]
    EmptyPoset,
    #[error("elements {a} and {b} have no join")]
    NotJoinClosed { a: usize, b: usize },
    #[error("not a group: {0}")]
    NotAGroup(&'static str),
    #[error("not a subgroup: {0}")]
    NotASubgroup(&'static str),
    #[error("independent product factors must not contain nullary operations (found `{0}`)")]
    NullaryPresent(String),
    #[error("operation name `{0}` collides in the merged signature")]
    NameClash(String),
    #[error("algebra must have exactly one unary operation and nothing else")]
    NotMonounary,
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A finite directed graph; loops are allowed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Digraph {
    vertices: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Digraph {
    pub fn new(vertices: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Digraph {
        let edges: BTreeSet<(usize, usize)> = edges.into_iter().collect();
        assert!(edges.iter().all(|&(a, b)| a < vertices && b < vertices));
        Digraph { vertices, edges }
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a, b))
    }

    /// The number of digraph homomorphisms into `other`, by scanning all
    /// vertex maps.
    pub fn hom_count(&self, other: &Digraph) -> u64 {
        let mut count = 0u64;
        let mut map = vec![0usize; self.vertices];
        loop {
            let ok = self
                .edges
                .iter()
                .all(|&(a, b)| other.has_edge(map[a], map[b]));
            if ok {
                count += 1;
            }
            let mut pos = self.vertices;
            loop {
                if pos == 0 {
                    return count;
                }
                pos -= 1;
                map[pos] += 1;
                if map[pos] < other.vertices {
                    break;
                }
                map[pos] = 0;
            }
        }
    }
}

/// The unary algebra on `G ∪ r ∪ {u, v}` encoding a digraph: vertices come
/// first, then the edges in sorted order, then `u` and `v`. The maps act by
///
/// ```text
/// f0(g) = u   f0((g0,g1)) = g0   f0(u) = v   f0(v) = v
/// f1(g) = v   f1((g0,g1)) = g1   f1(u) = u   f1(v) = u
/// ```
///
/// with `u` and `v` also named by nullary operations.
pub fn graph_star(g: &Digraph) -> FiniteAlgebra {
    let nv = g.vertices();
    let edges: Vec<(usize, usize)> = g.edges().iter().copied().collect();
    let ne = edges.len();
    let (u, v) = (nv + ne, nv + ne + 1);
    let size = nv + ne + 2;
    let mut f0 = vec![0usize; size];
    let mut f1 = vec![0usize; size];
    for g0 in 0..nv {
        f0[g0] = u;
        f1[g0] = v;
    }
    for (i, &(g0, g1)) in edges.iter().enumerate() {
        f0[nv + i] = g0;
        f1[nv + i] = g1;
    }
    f0[u] = v;
    f0[v] = v;
    f1[u] = u;
    f1[v] = u;
    let sig = Signature::new(vec![("f0", 1), ("f1", 1), ("u", 0), ("v", 0)]).unwrap();
    FiniteAlgebra::new(size, sig, vec![f0, f1, vec![u], vec![v]]).unwrap()
}

/// The Birkhoff–Frink algebra of a join-semilattice order: join plus one
/// unary `f_t_s` per cover `s < t` sending `t` to `s` and fixing the rest.
/// The subalgebras are then exactly the principal down-sets.
pub fn birkhoff_frink(s: &Poset) -> Result<FiniteAlgebra, SynthError> {
    let n = s.size();
    if n == 0 {
        return Err(SynthError::EmptyPoset);
    }
    let mut join = vec![0usize; n * n];
    for a in 0..n {
        for b in 0..n {
            let mut common = s.up_set_of(a).clone();
            common.intersect_with(s.up_set_of(b));
            join[a * n + b] = common
                .iter()
                .find(|&c| common.is_subset(s.up_set_of(c)))
                .ok_or(SynthError::NotJoinClosed { a, b })?;
        }
    }
    let mut ops: Vec<(String, usize)> = vec![("join".to_owned(), 2)];
    let mut tables = vec![join];
    let mut covers = s.covers().to_vec();
    covers.sort_by_key(|&(lo, up)| (up, lo));
    for (lo, up) in covers {
        ops.push((format!("f_{up}_{lo}"), 1));
        let mut table: Vec<usize> = (0..n).collect();
        table[up] = lo;
        tables.push(table);
    }
    Ok(FiniteAlgebra::new(n, Signature::new(ops)?, tables)?)
}

/// Checks that `mul` (an `n * n` row-major table) is a group table.
fn check_group(n: usize, mul: &[usize]) -> Result<usize, SynthError> {
    if mul.len() != n * n || mul.iter().any(|&x| x >= n) {
        return Err(SynthError::NotAGroup("table has the wrong shape"));
    }
    let at = |a: usize, b: usize| mul[a * n + b];
    let identity = (0..n)
        .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
        .ok_or(SynthError::NotAGroup("no identity element"))?;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if at(at(a, b), c) != at(a, at(b, c)) {
                    return Err(SynthError::NotAGroup("not associative"));
                }
            }
        }
    }
    for a in 0..n {
        if !(0..n).any(|b| at(a, b) == identity && at(b, a) == identity) {
            return Err(SynthError::NotAGroup("missing inverse"));
        }
    }
    Ok(identity)
}

/// The G-set on the left cosets of `subgroup` plus a fixed point `∞`, acted
/// on by one unary operation per group element, with every element also
/// named by a nullary operation. Cosets are ordered by least member; `∞` is
/// the last element.
pub fn gset_coset_algebra(
    n: usize,
    mul: &[usize],
    subgroup: &[usize],
) -> Result<FiniteAlgebra, SynthError> {
    check_group(n, mul)?;
    let at = |a: usize, b: usize| mul[a * n + b];
    if subgroup.is_empty() || subgroup.iter().any(|&h| h >= n) {
        return Err(SynthError::NotASubgroup("empty or out of range"));
    }
    for &a in subgroup {
        for &b in subgroup {
            if !subgroup.contains(&at(a, b)) {
                return Err(SynthError::NotASubgroup("not closed under the product"));
            }
        }
    }
    let coset_of = |a: usize| -> BTreeSet<usize> { subgroup.iter().map(|&h| at(a, h)).collect() };
    let mut cosets: Vec<BTreeSet<usize>> = Vec::new();
    for a in 0..n {
        let c = coset_of(a);
        if !cosets.contains(&c) {
            cosets.push(c);
        }
    }
    cosets.sort_by_key(|c| *c.iter().next().unwrap());
    let coset_index: BTreeMap<usize, usize> = cosets
        .iter()
        .enumerate()
        .flat_map(|(i, c)| c.iter().map(move |&e| (e, i)))
        .collect();
    let k = cosets.len();
    let infinity = k;
    let mut ops: Vec<(String, usize)> = Vec::new();
    let mut tables: Vec<Vec<usize>> = Vec::new();
    for g in 0..n {
        ops.push((format!("lam_{g}"), 1));
        let mut table = Vec::with_capacity(k + 1);
        for coset in &cosets {
            let member = *coset.iter().next().unwrap();
            table.push(coset_index[&at(g, member)]);
        }
        table.push(infinity);
        tables.push(table);
    }
    let algebra = FiniteAlgebra::new(k + 1, Signature::new(ops)?, tables)?;
    Ok(name_all_elements(&algebra)?)
}

/// The independent product: both factors are expanded to the merged
/// signature (foreign operations act as first projections, `*` acts as the
/// first projection on the first factor and the second on the second), and
/// the direct product of the expansions is returned.
pub fn independent_product(
    a1: &FiniteAlgebra,
    a2: &FiniteAlgebra,
) -> Result<FiniteAlgebra, SynthError> {
    for alg in [a1, a2] {
        for (name, arity) in alg.signature().ops() {
            if *arity == 0 {
                return Err(SynthError::NullaryPresent(name.clone()));
            }
            if name == "*" {
                return Err(SynthError::NameClash("*".to_owned()));
            }
        }
    }
    if let Some((name, _)) = a1
        .signature()
        .ops()
        .iter()
        .find(|(name, _)| a2.signature().contains_name(name))
    {
        return Err(SynthError::NameClash(name.clone()));
    }

    let merged: Vec<(String, usize)> = a1
        .signature()
        .ops()
        .iter()
        .chain(a2.signature().ops())
        .cloned()
        .chain([("*".to_owned(), 2)])
        .collect();
    let signature = Signature::new(merged)?;

    let projection = |size: usize, arity: usize, coordinate: usize| -> Vec<usize> {
        let mut table = Vec::with_capacity(size.pow(arity as u32));
        for_each_tuple(size, arity, |args| table.push(args[coordinate]));
        table
    };
    let expand = |own: &FiniteAlgebra, own_first: bool| -> Vec<Vec<usize>> {
        let mut tables = Vec::new();
        for (i, (_, arity)) in a1.signature().ops().iter().enumerate() {
            tables.push(if own_first {
                own.table(i).to_vec()
            } else {
                projection(own.size(), *arity, 0)
            });
        }
        for (i, (_, arity)) in a2.signature().ops().iter().enumerate() {
            tables.push(if own_first {
                projection(own.size(), *arity, 0)
            } else {
                own.table(i).to_vec()
            });
        }
        tables.push(projection(own.size(), 2, if own_first { 0 } else { 1 }));
        tables
    };
    let b1 = FiniteAlgebra::new(a1.size(), signature.clone(), expand(a1, true))?;
    let b2 = FiniteAlgebra::new(a2.size(), signature, expand(a2, false))?;
    Ok(direct_product(&b1, &b2)?)
}

/// A monounary algebra that is a disjoint union of cycles of the given
/// lengths, with single operation `f`.
pub fn cycle_algebra(lengths: &[usize]) -> FiniteAlgebra {
    assert!(!lengths.is_empty() && lengths.iter().all(|&l| l >= 1));
    let size: usize = lengths.iter().sum();
    let mut f = Vec::with_capacity(size);
    let mut base = 0;
    for &len in lengths {
        for i in 0..len {
            f.push(base + (i + 1) % len);
        }
        base += len;
    }
    let sig = Signature::new(vec![("f", 1)]).unwrap();
    FiniteAlgebra::new(size, sig, vec![f]).unwrap()
}

/// The sizes of the cycles (periodic orbits) of a monounary algebra.
pub fn cycle_lengths(a: &FiniteAlgebra) -> Result<Vec<usize>, SynthError> {
    if a.signature().len() != 1 || a.signature().arity(0) != 1 {
        return Err(SynthError::NotMonounary);
    }
    let n = a.size();
    let mut seen = vec![false; n];
    let mut lengths = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        // walk forward; the first repeated element of this walk closes a cycle
        let mut path = Vec::new();
        let mut position = vec![usize::MAX; n];
        let mut x = start;
        loop {
            if seen[x] {
                break; // joined a previously explored component
            }
            if position[x] != usize::MAX {
                lengths.push(path.len() - position[x]);
                break;
            }
            position[x] = path.len();
            path.push(x);
            x = a.eval(0, &[x]);
        }
        for e in path {
            seen[e] = true;
        }
    }
    lengths.sort_unstable();
    Ok(lengths)
}

/// The homomorphism lattice of a monounary algebra: with `n` the least
/// common multiple of its cycle sizes, this is the lattice of non-empty
/// up-sets of the divisor lattice of `n` (the one-element lattice when
/// `n = 1`).
pub fn monounary_hom_lattice(a: &FiniteAlgebra) -> Result<Lattice, SynthError> {
    let lengths = cycle_lengths(a)?;
    let n = lengths
        .iter()
        .fold(1u64, |acc, &l| lcm(acc, l as u64));
    Ok(nonempty_upsets(divisor_lattice(n).poset(), &Budget::default())?)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// The four-element distributive bisemilattice on `{0, a, b, 1}` (encoded
/// 0, 1, 2, 3): `wedge` is meet in the diamond 0 < a,b < 1 and `sqcap` is
/// meet in the diamond b < 0,1 < a.
pub fn pentagon_bisemilattice() -> FiniteAlgebra {
    let wedge = vec![
        0, 0, 0, 0, //
        0, 1, 0, 1, //
        0, 0, 2, 2, //
        0, 1, 2, 3,
    ];
    let sqcap = vec![
        0, 0, 2, 2, //
        0, 1, 2, 3, //
        2, 2, 2, 2, //
        2, 3, 2, 3,
    ];
    let sig = Signature::new(vec![("wedge", 2), ("sqcap", 2)]).unwrap();
    FiniteAlgebra::new(4, sig, vec![wedge, sqcap]).unwrap()
}

/// The pentagon fixture: the bisemilattice above with all four elements
/// named. Its congruence lattice is the pentagon N5.
pub fn pentagon_algebra() -> FiniteAlgebra {
    name_all_elements(&pentagon_bisemilattice()).unwrap()
}

/// The synthesis record produced by [`synthesize_quasiprimal`].
#[derive(Clone, Debug)]
pub struct QpBundle {
    /// The input poset.
    pub p: Poset,
    /// `p` with a new top.
    pub ptop: Poset,
    /// `ptop` with a new minimal element below each old minimal.
    pub psharp: Poset,
    /// The covering tree of `ptop`.
    pub s: CoveringForest,
    /// The covering tree of `psharp`; the universe of `q`.
    pub ssharp: CoveringForest,
    /// The cyclic permutation of the non-top universe used by `h`, stored
    /// as a full index map fixing the top.
    pub lambda: Vec<usize>,
    /// The synthesized algebra.
    pub q: FiniteAlgebra,
    /// Universe index to covering chain of `psharp`.
    pub word_of: Vec<Word>,
    /// Index of the one-letter word at the top.
    pub top_index: usize,
}

impl QpBundle {
    pub fn word_q_index(&self, word: &Word) -> Option<usize> {
        self.word_of.iter().position(|w| w == word)
    }

    /// First letter of the word at a universe index (an element of `psharp`).
    pub fn phi(&self, q_index: usize) -> usize {
        self.word_of[q_index].first()
    }

    /// Universe indices of the words lying in `S` (those not starting with
    /// a primed minimal), in increasing index order. These induce the
    /// subalgebras `Q_u`.
    pub fn s_indices(&self) -> Vec<usize> {
        (0..self.q.size())
            .filter(|&i| self.phi(i) < self.ptop.size())
            .collect()
    }

    /// The universe of the principal down-set of a word in the tree order:
    /// all words having it as a final segment.
    pub fn down_universe(&self, q_index: usize) -> Vec<usize> {
        let u = &self.word_of[q_index];
        (0..self.q.size())
            .filter(|&i| self.word_of[i].has_final_segment(u))
            .collect()
    }

    /// The subalgebra of `q` on the principal down-set of a word.
    pub fn subalgebra_at(&self, q_index: usize) -> FiniteAlgebra {
        induced_subalgebra(&self.q, &self.down_universe(q_index))
            .expect("principal down-sets are subuniverses")
    }
}

/// Synthesizes the quasi-primal algebra of a non-empty poset `P`.
///
/// The universe is the covering tree of `P#` (words sorted by index
/// sequence, the top word last). The operations are the tree join (longest
/// common final segment), the family `f_b_a` indexed by covers `a < b` of
/// `P#` with `b` below the top (step one letter down when the word starts
/// at `b`), the family `g_m` indexed by minimal elements of `P` (step one
/// letter up from a primed start), the binary `h` built from the cyclic
/// permutation `lambda`, and the ternary discriminator. `lambda` maps each
/// non-top word to the lexicographically next one, wrapping around.
pub fn synthesize_quasiprimal(p: &Poset, budget: &Budget) -> Result<QpBundle, SynthError> {
    if p.is_empty() {
        return Err(SynthError::EmptyPoset);
    }
    let ptop = add_top(p);
    let psharp = sharp(&ptop)?;
    let s = covering_forest(&ptop, budget)?;
    let ssharp = covering_forest(&psharp, budget)?;

    let top_letter = p.size(); // index of the top in both ptop and psharp
    let top_word = Word::new(vec![top_letter]);
    let mut words: Vec<Word> = ssharp.words().to_vec();
    words.retain(|w| *w != top_word);
    words.push(top_word.clone());
    let size = words.len();
    let top_index = size - 1;
    let index: BTreeMap<Word, usize> = words
        .iter()
        .enumerate()
        .map(|(i, w)| (w.clone(), i))
        .collect();

    // the non-top words occupy 0..size-1 in lexicographic order already;
    // a non-empty P forces size >= 3
    let lambda: Vec<usize> = (0..size)
        .map(|i| if i == top_index { i } else { (i + 1) % (size - 1) })
        .collect();

    let mut ops: Vec<(String, usize)> = Vec::new();
    let mut tables: Vec<Vec<usize>> = Vec::new();

    let mut join = Vec::with_capacity(size * size);
    for w in &words {
        for v in &words {
            join.push(index[&w.common_final_segment(v)]);
        }
    }
    ops.push(("join".to_owned(), 2));
    tables.push(join);

    let mut f_covers: Vec<(usize, usize)> = psharp
        .covers()
        .iter()
        .copied()
        .filter(|&(_, upper)| upper != top_letter)
        .collect();
    f_covers.sort_by_key(|&(lo, up)| (up, lo));
    for (lo, up) in f_covers {
        ops.push((format!("f_{up}_{lo}"), 1));
        let table: Vec<usize> = words
            .iter()
            .enumerate()
            .map(|(i, w)| {
                if w.first() == up {
                    let mut extended = vec![lo];
                    extended.extend_from_slice(w.letters());
                    index[&Word::new(extended)]
                } else {
                    i
                }
            })
            .collect();
        tables.push(table);
    }

    for m in p.minimals() {
        // the unique lower cover of m in psharp that is a primed element
        let prime = psharp
            .lower_covers(m)
            .into_iter()
            .find(|&c| c >= ptop.size())
            .expect("every minimal of P gains a primed element");
        ops.push((format!("g_{m}"), 1));
        let table: Vec<usize> = words
            .iter()
            .enumerate()
            .map(|(i, w)| {
                if w.first() == prime {
                    index[&Word::new(w.letters()[1..].to_vec())]
                } else {
                    i
                }
            })
            .collect();
        tables.push(table);
    }

    let mut h = Vec::with_capacity(size * size);
    for (x, &cycled) in lambda.iter().enumerate() {
        for y in 0..size {
            h.push(if x != top_index && y == top_index {
                cycled
            } else {
                x
            });
        }
    }
    ops.push(("h".to_owned(), 2));
    tables.push(h);

    ops.push(("tau".to_owned(), 3));
    tables.push(discriminator_table(size));

    let q = FiniteAlgebra::new(size, Signature::new(ops)?, tables)?;
    Ok(QpBundle {
        p: p.clone(),
        ptop,
        psharp,
        s,
        ssharp,
        lambda,
        q,
        word_of: words,
        top_index,
    })
}
