//! Enumeration caps. Exceeding a cap is always a hard error, never a
//! silently truncated result.

/// Caps on the enumeration loops that can blow up on adversarial input.
#[derive(Clone, Debug)]
pub struct Budget {
    /// Maximum number of subuniverses enumerated per algebra.
    pub subuniverses: usize,
    /// Maximum number of congruences enumerated per algebra.
    pub congruences: usize,
    /// Maximum number of down-sets (or up-sets) enumerated per poset.
    pub downsets: usize,
    /// Maximum number of words in a covering forest.
    pub words: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            subuniverses: 100_000,
            congruences: 100_000,
            downsets: 1_000_000,
            words: 100_000,
        }
    }
}

impl Budget {
    /// A budget with every cap set to `n`.
    pub fn uniform(n: usize) -> Self {
        Budget {
            subuniverses: n,
            congruences: n,
            downsets: n,
            words: n,
        }
    }
}
