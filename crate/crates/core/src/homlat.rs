//! Homomorphism-lattice pipelines: the hom order on subalgebra classes, the
//! down-set description of the homomorphism lattice of a quasi-primal
//! algebra, the end-to-end round trip from a poset through synthesis and
//! back, and the congruence-lattice route for algebras with every element
//! named.
//!
//! Everything here is desk-scale and exact. Two natural questions remain
//! open and are out of reach of this code: whether every finite lattice
//! (not just every finite distributive one) arises as the homomorphism
//! lattice of some finite algebra, and whether finiteness of the
//! homomorphism lattice of a given finite algebra is decidable. The
//! pipelines only ever certify specific finite instances.

use crate::algebra::{
    all_subuniverses, congruence_lattice, direct_product, induced_subalgebra, quotient_algebra,
    zero_subalgebra, AlgebraError, FiniteAlgebra, Partition,
};
use crate::budget::Budget;
use crate::hom::find_hom;
use crate::order::{condense, downset_lattice, lattice_iso, Lattice, OrderError, Poset};
use crate::synth::{synthesize_quasiprimal, QpBundle, SynthError};
use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HomLatError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Synth(#[from] SynthError),
    #[error("the subalgebra hom order has no top element (input not quasi-primal?)")]
    NoTopInP,
    #[error("every element of the algebra must be the value of a nullary operation")]
    NotAllNamed,
}

/// The hom order on `Sub(Q)/≡`: all non-empty subuniverses, the class of
/// each, one representative algebra per class (the smallest, ties by
/// lexicographic subuniverse), and the induced order.
#[derive(Clone, Debug)]
pub struct SubHomPoset {
    /// All non-empty subuniverses in canonical order.
    pub subuniverses: Vec<Vec<usize>>,
    /// Class index of each subuniverse.
    pub class_of: Vec<usize>,
    /// The subuniverse backing each class representative.
    pub representative_subuniverses: Vec<Vec<usize>>,
    /// The representative subalgebras, renamed to `0..k`.
    pub representatives: Vec<FiniteAlgebra>,
    /// The order on the classes: `c1 <= c2` iff a homomorphism exists from
    /// a member of `c1` to a member of `c2`.
    pub order: Poset,
}

/// Enumerates the subalgebras of `q`, builds the hom quasi-order with a
/// search per ordered pair, and condenses it to a poset.
pub fn sub_hom_poset(q: &FiniteAlgebra, budget: &Budget) -> Result<SubHomPoset, HomLatError> {
    let subuniverses = all_subuniverses(q, budget)?;
    let algebras: Vec<FiniteAlgebra> = subuniverses
        .iter()
        .map(|s| induced_subalgebra(q, s))
        .collect::<Result<_, _>>()?;
    let k = algebras.len();
    let mut reach = vec![false; k * k];
    for i in 0..k {
        for j in 0..k {
            reach[i * k + j] = i == j || find_hom(&algebras[i], &algebras[j])?.is_some();
        }
    }
    // condense numbers classes by least member, and the subuniverses are
    // already in (size, lex) order, so class representatives come out
    // canonical without further sorting
    let (order, class_of) = condense(k, |i, j| reach[i * k + j])?;
    let class_count = order.size();
    let rep_index: Vec<usize> = (0..class_count)
        .map(|c| class_of.iter().position(|&x| x == c).unwrap())
        .collect();
    let representative_subuniverses: Vec<Vec<usize>> = rep_index
        .iter()
        .map(|&i| subuniverses[i].clone())
        .collect();
    let representatives: Vec<FiniteAlgebra> =
        rep_index.iter().map(|&i| algebras[i].clone()).collect();
    let names: Vec<String> = representative_subuniverses
        .iter()
        .map(|s| {
            let inner: Vec<String> = s.iter().map(|e| e.to_string()).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect();
    Ok(SubHomPoset {
        subuniverses,
        class_of,
        representative_subuniverses,
        representatives,
        order: order.with_names(names),
    })
}

/// Whether some singleton is a subuniverse of `q`.
pub fn has_trivial_subalgebra(q: &FiniteAlgebra) -> bool {
    'candidates: for e in 0..q.size() {
        for op in 0..q.signature().len() {
            let arity = q.signature().arity(op);
            let args = vec![e; arity];
            if q.eval(op, &args) != e {
                continue 'candidates;
            }
        }
        return true;
    }
    false
}

/// The homomorphism lattice of a quasi-primal algebra via the subalgebra
/// hom order `P`: the down-set lattice of `P` when `q` has no trivial
/// subalgebra, and of `P` without its top when it has one.
///
/// Quasi-primality of `q` is an asserted precondition, not decided here; on
/// inputs violating it the formula can fail, which surfaces as `NoTopInP`.
pub fn hom_lattice_quasiprimal(
    q: &FiniteAlgebra,
    budget: &Budget,
) -> Result<Lattice, HomLatError> {
    let shp = sub_hom_poset(q, budget)?;
    let top = shp.order.top().ok_or(HomLatError::NoTopInP)?;
    let base = if has_trivial_subalgebra(q) {
        shp.order.without(top)
    } else {
        shp.order
    };
    Ok(downset_lattice(&base, budget)?)
}

/// The same lattice computed through the structure theory of the synthesized
/// algebra instead of generic search: words of the covering tree are grouped
/// by their first letter and ordered by the final-segment order, the class
/// of the top is removed, and the down-set lattice of the result is taken.
/// Kept as a cross-check against [`hom_lattice_quasiprimal`].
pub fn hom_lattice_shortcut(bundle: &QpBundle, budget: &Budget) -> Result<Lattice, HomLatError> {
    let s_indices = bundle.s_indices();
    let phi_values: Vec<usize> = (0..bundle.ptop.size()).collect();
    let le = |a: usize, b: usize| -> bool {
        s_indices.iter().any(|&i| {
            bundle.phi(i) == phi_values[a]
                && s_indices.iter().any(|&j| {
                    bundle.phi(j) == phi_values[b]
                        && bundle.word_of[i].has_final_segment(&bundle.word_of[j])
                })
        })
    };
    let names: Vec<String> = phi_values
        .iter()
        .map(|&v| bundle.ptop.name(v).to_owned())
        .collect();
    let class_poset = Poset::from_le(names, phi_values.len(), le)?;
    let top = class_poset.top().ok_or(HomLatError::NoTopInP)?;
    Ok(downset_lattice(&class_poset.without(top), budget)?)
}

/// Timings of the round-trip stages.
#[derive(Clone, Debug, Default)]
pub struct RoundtripTimings {
    pub synthesize: Duration,
    pub hom_lattice: Duration,
    pub expected_lattice: Duration,
    pub iso_search: Duration,
}

/// The record produced by [`verify_roundtrip`].
#[derive(Clone, Debug)]
pub struct HomLatticeReport {
    pub input_p: Poset,
    pub q: FiniteAlgebra,
    pub computed: Lattice,
    pub expected: Lattice,
    pub iso: Option<Vec<usize>>,
    pub timings: RoundtripTimings,
}

impl HomLatticeReport {
    pub fn passed(&self) -> bool {
        self.iso.is_some()
    }
}

/// Synthesizes the quasi-primal algebra of `p`, computes its homomorphism
/// lattice by generic subuniverse enumeration and pairwise hom search (no
/// structure-theory shortcuts), and compares it with the down-set lattice
/// of `p` by isomorphism search.
pub fn verify_roundtrip(p: &Poset, budget: &Budget) -> Result<HomLatticeReport, HomLatError> {
    let mut timings = RoundtripTimings::default();
    let clock = Instant::now();
    let bundle = synthesize_quasiprimal(p, budget)?;
    timings.synthesize = clock.elapsed();

    let clock = Instant::now();
    let computed = hom_lattice_quasiprimal(&bundle.q, budget)?;
    timings.hom_lattice = clock.elapsed();

    let clock = Instant::now();
    let expected = downset_lattice(p, budget)?;
    timings.expected_lattice = clock.elapsed();

    let clock = Instant::now();
    let iso = lattice_iso(&computed, &expected);
    timings.iso_search = clock.elapsed();

    Ok(HomLatticeReport {
        input_p: p.clone(),
        q: bundle.q,
        computed,
        expected,
        iso,
        timings,
    })
}

/// Outcome of [`lemma13_check`].
#[derive(Clone, Debug)]
pub struct CongruenceRouteVerdict {
    pub congruences: Vec<Partition>,
    pub con_lattice: Lattice,
    /// Whether `(A/t1) x (A/t2) -> A/(t1 ∧ t2)` holds for all congruence
    /// pairs; on failure the offending pair of congruence indices.
    pub product_condition: bool,
    pub product_failure: Option<(usize, usize)>,
    /// Whether every supplied subdirectly irreducible maps onto its
    /// zero-generated subalgebra; `None` when no list was supplied.
    pub si_condition: Option<bool>,
    pub si_failure: Option<usize>,
    /// The supplied list is trusted, not derived; any positive verdict
    /// carries this caveat.
    pub si_list_asserted: bool,
}

impl CongruenceRouteVerdict {
    /// Both conditions verified (the subdirectly-irreducible list being
    /// asserted by the caller), so the homomorphism lattice is the
    /// congruence lattice.
    pub fn con_is_hom_lattice(&self) -> bool {
        self.product_condition && self.si_condition == Some(true)
    }
}

/// Checks the two testable conditions under which an algebra with every
/// element named by a nullary term has its congruence lattice as its
/// homomorphism lattice: the quotient-product condition, exhaustively over
/// congruence pairs, and the retraction condition on a caller-supplied list
/// of subdirectly irreducibles.
pub fn lemma13_check(
    a: &FiniteAlgebra,
    sis: Option<&[FiniteAlgebra]>,
    budget: &Budget,
) -> Result<CongruenceRouteVerdict, HomLatError> {
    let (zero, _) = zero_subalgebra(a).map_err(|e| match e {
        AlgebraError::NoNullaries => HomLatError::NotAllNamed,
        other => HomLatError::Algebra(other),
    })?;
    if zero.size() != a.size() {
        return Err(HomLatError::NotAllNamed);
    }
    let (congruences, con_lattice) = congruence_lattice(a, budget)?;

    let mut product_condition = true;
    let mut product_failure = None;
    'pairs: for i in 0..congruences.len() {
        for j in i..congruences.len() {
            let q1 = quotient_algebra(a, &congruences[i])?;
            let q2 = quotient_algebra(a, &congruences[j])?;
            let product = direct_product(&q1, &q2)?;
            let target = quotient_algebra(a, &congruences[i].meet(&congruences[j]))?;
            if find_hom(&product, &target)?.is_none() {
                product_condition = false;
                product_failure = Some((i, j));
                break 'pairs;
            }
        }
    }

    let mut si_condition = None;
    let mut si_failure = None;
    if let Some(list) = sis {
        let mut all = true;
        for (idx, b) in list.iter().enumerate() {
            if b.signature() != a.signature() {
                return Err(HomLatError::Algebra(AlgebraError::SignatureMismatch));
            }
            let (b0, _) = zero_subalgebra(b)?;
            if find_hom(b, &b0)?.is_none() {
                all = false;
                si_failure = Some(idx);
                break;
            }
        }
        si_condition = Some(all);
    }

    Ok(CongruenceRouteVerdict {
        congruences,
        con_lattice,
        product_condition,
        product_failure,
        si_condition,
        si_failure,
        si_list_asserted: sis.is_some(),
    })
}

/// Wraps [`lattice_iso`] and asserts that the witness preserves meets and
/// joins (which follows from being an order isomorphism).
pub fn lattice_iso_report(l1: &Lattice, l2: &Lattice) -> Option<Vec<usize>> {
    let map = lattice_iso(l1, l2)?;
    for a in 0..l1.size() {
        for b in 0..l1.size() {
            assert_eq!(map[l1.meet(a, b)], l2.meet(map[a], map[b]));
            assert_eq!(map[l1.join(a, b)], l2.join(map[a], map[b]));
        }
    }
    Some(map)
}
