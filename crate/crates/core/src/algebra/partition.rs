//! Partitions of `{0, .., n-1}`, used both as plain equivalence relations and
//! as congruences once compatibility has been checked.

/// An equivalence relation stored as a block-index array in normalized form:
/// blocks are numbered by first occurrence, so `block_id` is a restricted
/// growth string (`block_id[0] == 0` and each entry is at most one more than
/// the maximum before it).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Partition {
    block_id: Vec<usize>,
    num_blocks: usize,
}

impl Partition {
    /// Normalizes an arbitrary block assignment into first-occurrence form.
    pub fn from_block_id(raw: Vec<usize>) -> Partition {
        let mut rename: Vec<Option<usize>> = vec![None; raw.len().max(raw.iter().map(|b| b + 1).max().unwrap_or(0))];
        let mut next = 0;
        let mut block_id = Vec::with_capacity(raw.len());
        for &b in &raw {
            let id = *rename[b].get_or_insert_with(|| {
                let id = next;
                next += 1;
                id
            });
            block_id.push(id);
        }
        Partition {
            block_id,
            num_blocks: next,
        }
    }

    /// The identity partition (every element alone).
    pub fn identity(n: usize) -> Partition {
        Partition {
            block_id: (0..n).collect(),
            num_blocks: n,
        }
    }

    /// The total partition (one block).
    pub fn total(n: usize) -> Partition {
        Partition {
            block_id: vec![0; n],
            num_blocks: if n == 0 { 0 } else { 1 },
        }
    }

    pub fn universe_size(&self) -> usize {
        self.block_id.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.num_blocks
    }

    pub fn block_of(&self, elem: usize) -> usize {
        self.block_id[elem]
    }

    pub fn block_id(&self) -> &[usize] {
        &self.block_id
    }

    pub fn same_block(&self, a: usize, b: usize) -> bool {
        self.block_id[a] == self.block_id[b]
    }

    /// The least element of each block, indexed by block id. In normalized
    /// form these are strictly increasing.
    pub fn block_representatives(&self) -> Vec<usize> {
        let mut reps = vec![usize::MAX; self.num_blocks];
        for (e, &b) in self.block_id.iter().enumerate() {
            if reps[b] == usize::MAX {
                reps[b] = e;
            }
        }
        reps
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.num_blocks];
        for (e, &b) in self.block_id.iter().enumerate() {
            blocks[b].push(e);
        }
        blocks
    }

    /// Refinement order: `self <= other` iff every block of `self` is
    /// contained in a block of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        debug_assert_eq!(self.universe_size(), other.universe_size());
        let mut image = vec![usize::MAX; self.num_blocks];
        for (e, &b) in self.block_id.iter().enumerate() {
            let target = other.block_id[e];
            if image[b] == usize::MAX {
                image[b] = target;
            } else if image[b] != target {
                return false;
            }
        }
        true
    }

    /// Meet in the partition lattice: the common refinement.
    pub fn meet(&self, other: &Partition) -> Partition {
        debug_assert_eq!(self.universe_size(), other.universe_size());
        let n = self.universe_size();
        let mut raw = Vec::with_capacity(n);
        let mut seen: std::collections::BTreeMap<(usize, usize), usize> = Default::default();
        for e in 0..n {
            let key = (self.block_id[e], other.block_id[e]);
            let next = seen.len();
            raw.push(*seen.entry(key).or_insert(next));
        }
        Partition::from_block_id(raw)
    }

    /// Join in the partition lattice: the transitive closure of the union of
    /// the two relations, computed by union-find.
    pub fn join(&self, other: &Partition) -> Partition {
        debug_assert_eq!(self.universe_size(), other.universe_size());
        let n = self.universe_size();
        let mut uf = UnionFind::new(n);
        for p in [self, other] {
            let reps = p.block_representatives();
            for (e, &b) in p.block_id.iter().enumerate() {
                uf.union(e, reps[b]);
            }
        }
        uf.into_partition()
    }

    /// Relational composition `self . other` as a set of pairs:
    /// `(x, z)` with `x self y` and `y other z` for some `y`.
    pub fn compose_relation(&self, other: &Partition) -> Vec<(usize, usize)> {
        let n = self.universe_size();
        let mut pairs = Vec::new();
        for x in 0..n {
            for z in 0..n {
                if (0..n).any(|y| self.same_block(x, y) && other.same_block(y, z)) {
                    pairs.push((x, z));
                }
            }
        }
        pairs
    }

    /// Renders blocks as `0,2|1|3`.
    pub fn render(&self) -> String {
        self.blocks()
            .iter()
            .map(|b| {
                b.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join("|")
    }
}

/// Plain union-find used by congruence generation.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    /// Returns true when the two classes were distinct.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // root at the smaller index keeps representatives canonical
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.parent[hi] = lo;
        true
    }

    pub fn into_partition(mut self) -> Partition {
        let raw: Vec<usize> = (0..self.parent.len()).map(|e| self.find(e)).collect();
        Partition::from_block_id(raw)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_is_first_occurrence() {
        let p = Partition::from_block_id(vec![7, 2, 7, 5]);
        assert_eq!(p.block_id(), &[0, 1, 0, 2]);
        assert_eq!(p.num_blocks(), 3);
        assert_eq!(p.block_representatives(), vec![0, 1, 3]);
    }

    #[test]
    fn refinement_meet_join() {
        let alpha = Partition::from_block_id(vec![0, 1, 0, 1]); // {0,2}{1,3}
        let beta = Partition::from_block_id(vec![0, 0, 1, 1]); // {0,1}{2,3}
        assert!(Partition::identity(4).refines(&alpha));
        assert!(alpha.refines(&Partition::total(4)));
        assert!(!alpha.refines(&beta));
        assert_eq!(alpha.meet(&beta), Partition::identity(4));
        assert_eq!(alpha.join(&beta), Partition::total(4));
    }

    #[test]
    fn render_blocks() {
        let p = Partition::from_block_id(vec![0, 1, 0, 2]);
        assert_eq!(p.render(), "0,2|1|3");
    }
}
