//! Covering forests of finite posets, covering maps, and quotient maps.
//!
//! The covering forest of a poset `P` has one element per covering chain of
//! `P` that reaches a maximal element, ordered by "is a final segment of".
//! The first-letter map back to `P` is a covering map, the order-theoretic
//! analogue of the universal covering tree from graph theory.

use super::{OrderError, Poset};
use crate::budget::Budget;
use std::collections::BTreeMap;

/// A covering chain `a1 < a2 < .. < ak` of the base poset, stored as the
/// index sequence bottom-to-top; the last letter is maximal in the base.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Word {
        Word(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Whether `other` is a final segment of `self` (so `self <= other` in
    /// the forest order).
    pub fn has_final_segment(&self, other: &Word) -> bool {
        other.len() <= self.len() && self.0[self.len() - other.len()..] == other.0[..]
    }

    /// The longest common final segment of two words.
    pub fn common_final_segment(&self, other: &Word) -> Word {
        let mut k = 0;
        while k < self.len().min(other.len())
            && self.0[self.len() - 1 - k] == other.0[other.len() - 1 - k]
        {
            k += 1;
        }
        Word(self.0[self.len() - k..].to_vec())
    }

    pub fn render(&self, base: &Poset) -> String {
        self.0
            .iter()
            .map(|&a| base.name(a).to_owned())
            .collect::<Vec<_>>()
            .join(".")
    }
}

/// The covering forest of a poset: all covering chains reaching a maximal
/// element, the final-segment order on them, and the first-letter map back
/// to the base.
#[derive(Clone, Debug)]
pub struct CoveringForest {
    base: Poset,
    words: Vec<Word>,
    order: Poset,
    phi: Vec<usize>,
    index: BTreeMap<Word, usize>,
}

impl CoveringForest {
    pub fn base(&self) -> &Poset {
        &self.base
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// The final-segment order on the words.
    pub fn order(&self) -> &Poset {
        &self.order
    }

    /// The covering map onto the base: `phi(a1 a2 .. ak) = a1`.
    pub fn phi(&self) -> &[usize] {
        &self.phi
    }

    pub fn word_index(&self, word: &Word) -> Option<usize> {
        self.index.get(word).copied()
    }
}

/// Builds the covering forest of `base`. If the base has a top the result
/// is a tree.
pub fn covering_forest(base: &Poset, budget: &Budget) -> Result<CoveringForest, OrderError> {
    let mut words: Vec<Word> = Vec::new();
    let mut stack: Vec<Vec<usize>> = base.maximals().into_iter().map(|m| vec![m]).collect();
    while let Some(chain) = stack.pop() {
        if words.len() >= budget.words {
            return Err(OrderError::BudgetExceeded {
                what: "covering-forest words",
                cap: budget.words,
            });
        }
        for c in base.lower_covers(chain[0]) {
            let mut extended = Vec::with_capacity(chain.len() + 1);
            extended.push(c);
            extended.extend_from_slice(&chain);
            stack.push(extended);
        }
        words.push(Word(chain));
    }
    words.sort();

    let index: BTreeMap<Word, usize> = words
        .iter()
        .enumerate()
        .map(|(i, w)| (w.clone(), i))
        .collect();
    // covers in the forest: dropping the first letter of a word of length >= 2
    let covers: Vec<(usize, usize)> = words
        .iter()
        .enumerate()
        .filter(|(_, w)| w.len() >= 2)
        .map(|(i, w)| {
            let tail = Word(w.letters()[1..].to_vec());
            (i, index[&tail])
        })
        .collect();
    let names = words.iter().map(|w| w.render(base)).collect();
    let order = Poset::new(names, covers)?;
    let phi = words.iter().map(|w| w.first()).collect();
    Ok(CoveringForest {
        base: base.clone(),
        words,
        order,
        phi,
        index,
    })
}

/// `P` with a new top element covering exactly its maximal elements. The
/// new element is named `⊤` and gets the largest index.
pub fn add_top(p: &Poset) -> Poset {
    let n = p.size();
    let mut names = p.names().to_vec();
    names.push("⊤".to_owned());
    let mut covers = p.covers().to_vec();
    covers.extend(p.maximals().into_iter().map(|m| (m, n)));
    Poset::new(names, covers).expect("adding a top preserves validity")
}

/// `P#`: below each minimal element `m` of a topped poset, a new minimal
/// element named `m'` with `m` as its unique upper cover.
pub fn sharp(ptop: &Poset) -> Result<Poset, OrderError> {
    if ptop.top().is_none() {
        return Err(OrderError::NoTop);
    }
    let n = ptop.size();
    let mut names = ptop.names().to_vec();
    let mut covers = ptop.covers().to_vec();
    for (k, m) in ptop.minimals().into_iter().enumerate() {
        names.push(format!("{}'", ptop.name(m)));
        covers.push((n + k, m));
    }
    Poset::new(names, covers)
}

/// Whether `gamma` restricts to a bijection on maximal elements and on every
/// lower neighbourhood (the covering-map conditions).
pub fn is_covering_map(gamma: &[usize], a: &Poset, b: &Poset) -> bool {
    assert_eq!(gamma.len(), a.size(), "gamma must be total on A");
    assert!(gamma.iter().all(|&v| v < b.size()));
    if !restricts_to_bijection(gamma, &a.maximals(), &b.maximals()) {
        return false;
    }
    (0..a.size()).all(|x| {
        restricts_to_bijection(gamma, &a.lower_covers(x), &b.lower_covers(gamma[x]))
    })
}

fn restricts_to_bijection(gamma: &[usize], from: &[usize], onto: &[usize]) -> bool {
    let mut image: Vec<usize> = from.iter().map(|&x| gamma[x]).collect();
    image.sort_unstable();
    image.windows(2).all(|w| w[0] != w[1]) && {
        let mut target = onto.to_vec();
        target.sort_unstable();
        image == target
    }
}

/// Whether `alpha` is a quotient map: order-preserving, and every
/// comparability `b1 <= b2` in `B` lifts to a comparability in `A`.
pub fn is_quotient_map(alpha: &[usize], a: &Poset, b: &Poset) -> Result<bool, OrderError> {
    assert_eq!(alpha.len(), a.size());
    assert!(alpha.iter().all(|&v| v < b.size()));
    for x in 0..a.size() {
        for y in 0..a.size() {
            if a.le(x, y) && !b.le(alpha[x], alpha[y]) {
                return Err(OrderError::NotOrderPreserving);
            }
        }
    }
    for b1 in 0..b.size() {
        for b2 in 0..b.size() {
            if !b.le(b1, b2) {
                continue;
            }
            let lifts = (0..a.size()).any(|a1| {
                alpha[a1] == b1 && (0..a.size()).any(|a2| alpha[a2] == b2 && a.le(a1, a2))
            });
            if !lifts {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether every covering chain of `b` that reaches a maximal element lifts
/// along `gamma` to a covering chain of `a` reaching a maximal element.
pub fn chain_lifts(gamma: &[usize], a: &Poset, b: &Poset) -> bool {
    let budget = Budget::default();
    let chains = covering_forest(b, &budget).expect("chain enumeration within budget");
    let max_a = a.maximals();
    chains.words().iter().all(|word| {
        let letters = word.letters();
        let top = letters[letters.len() - 1];
        max_a
            .iter()
            .filter(|&&m| gamma[m] == top)
            .any(|&m| lift_down(gamma, a, letters, letters.len() - 1, m))
    })
}

fn lift_down(gamma: &[usize], a: &Poset, letters: &[usize], pos: usize, at: usize) -> bool {
    if pos == 0 {
        return true;
    }
    a.lower_covers(at)
        .into_iter()
        .filter(|&c| gamma[c] == letters[pos - 1])
        .any(|c| lift_down(gamma, a, letters, pos - 1, c))
}
