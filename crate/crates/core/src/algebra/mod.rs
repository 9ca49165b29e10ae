//! Finite algebras given by total operation tables, together with the
//! classical toolkit: direct products, quotients, subuniverses, congruences.
//!
//! An algebra has universe `{0, .., n-1}` and one flat row-major table per
//! operation; evaluation is a single table lookup.

mod congruence;
mod partition;
mod subuniverse;

pub use congruence::{
    congruence_lattice, is_congruence, is_subdirectly_irreducible, principal_congruence,
};
pub use partition::Partition;
pub use subuniverse::{all_subuniverses, all_subuniverses_exhaustive, subuniverse_closure};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("operation `{op}`: table has length {got}, expected {want}")]
    TableLength { op: String, got: usize, want: usize },
    #[error("operation `{op}`: table entry {entry} is out of range for size {size}")]
    EntryRange { op: String, entry: usize, size: usize },
    #[error("duplicate operation name `{0}`")]
    DuplicateOpName(String),
    #[error("operation name must be non-empty")]
    EmptyOpName,
    #[error("algebra size must be positive")]
    EmptySize,
    #[error("the two algebras do not have the same signature")]
    SignatureMismatch,
    #[error("partition is not compatible with operation `{op}`")]
    NotCompatible { op: String },
    #[error("partition universe {got} does not match algebra size {want}")]
    PartitionSizeMismatch { got: usize, want: usize },
    #[error("algebra has no nullary operations")]
    NoNullaries,
    #[error("signature already contains the name `{0}`")]
    NameClash(String),
    #[error("subset {{{0}}} is not closed under the operations")]
    NotASubuniverse(String),
    #[error("budget exceeded: more than {cap} {what}")]
    BudgetExceeded { what: &'static str, cap: usize },
}

/// An ordered sequence of named operations with their arities.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Signature {
    ops: Vec<(String, usize)>,
}

impl Signature {
    /// Builds a signature, rejecting duplicate or empty names. Arity 0
    /// (nullary operations) is permitted.
    pub fn new<S: Into<String>>(ops: Vec<(S, usize)>) -> Result<Signature, AlgebraError> {
        let ops: Vec<(String, usize)> = ops.into_iter().map(|(n, a)| (n.into(), a)).collect();
        for (i, (name, _)) in ops.iter().enumerate() {
            if name.is_empty() {
                return Err(AlgebraError::EmptyOpName);
            }
            if ops[..i].iter().any(|(m, _)| m == name) {
                return Err(AlgebraError::DuplicateOpName(name.clone()));
            }
        }
        Ok(Signature { ops })
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn name(&self, op: usize) -> &str {
        &self.ops[op].0
    }

    pub fn arity(&self, op: usize) -> usize {
        self.ops[op].1
    }

    pub fn ops(&self) -> &[(String, usize)] {
        &self.ops
    }

    pub fn contains_name(&self, name: &str) -> bool {
        self.ops.iter().any(|(n, _)| n == name)
    }
}

/// A finite algebra: universe `{0, .., size-1}` plus one row-major table per
/// operation of the signature.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteAlgebra {
    size: usize,
    signature: Signature,
    tables: Vec<Vec<usize>>,
}

impl FiniteAlgebra {
    /// Validates table lengths (`size^arity`, length 1 for nullary
    /// operations) and entry ranges.
    pub fn new(
        size: usize,
        signature: Signature,
        tables: Vec<Vec<usize>>,
    ) -> Result<FiniteAlgebra, AlgebraError> {
        if size == 0 {
            return Err(AlgebraError::EmptySize);
        }
        assert_eq!(signature.len(), tables.len(), "one table per operation");
        for (op, table) in tables.iter().enumerate() {
            let want = size.pow(signature.arity(op) as u32);
            if table.len() != want {
                return Err(AlgebraError::TableLength {
                    op: signature.name(op).to_owned(),
                    got: table.len(),
                    want,
                });
            }
            if let Some(&entry) = table.iter().find(|&&e| e >= size) {
                return Err(AlgebraError::EntryRange {
                    op: signature.name(op).to_owned(),
                    entry,
                    size,
                });
            }
        }
        Ok(FiniteAlgebra {
            size,
            signature,
            tables,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn table(&self, op: usize) -> &[usize] {
        &self.tables[op]
    }

    /// Evaluates operation `op` on `args` by row-major table lookup.
    pub fn eval(&self, op: usize, args: &[usize]) -> usize {
        debug_assert_eq!(args.len(), self.signature.arity(op));
        let mut idx = 0;
        for &a in args {
            debug_assert!(a < self.size);
            idx = idx * self.size + a;
        }
        self.tables[op][idx]
    }

    /// Indices of the nullary operations together with their values.
    pub fn nullary_values(&self) -> Vec<(usize, usize)> {
        (0..self.signature.len())
            .filter(|&op| self.signature.arity(op) == 0)
            .map(|op| (op, self.tables[op][0]))
            .collect()
    }

    /// The one-element algebra over a given signature (all tables constant 0).
    pub fn trivial(signature: Signature) -> FiniteAlgebra {
        let tables = (0..signature.len()).map(|_| vec![0]).collect();
        FiniteAlgebra {
            size: 1,
            signature,
            tables,
        }
    }
}

/// Calls `f` on every `arity`-tuple over `0..size` in row-major order.
pub(crate) fn for_each_tuple(size: usize, arity: usize, mut f: impl FnMut(&[usize])) {
    if size == 0 && arity > 0 {
        return;
    }
    let mut args = vec![0usize; arity];
    loop {
        f(&args);
        // odometer increment, most significant digit first
        let mut pos = arity;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            args[pos] += 1;
            if args[pos] < size {
                break;
            }
            args[pos] = 0;
        }
    }
}

/// Direct product `A x B`: pair `(a, b)` is encoded as `a * |B| + b` and the
/// operations act coordinatewise.
pub fn direct_product(
    a: &FiniteAlgebra,
    b: &FiniteAlgebra,
) -> Result<FiniteAlgebra, AlgebraError> {
    if a.signature != b.signature {
        return Err(AlgebraError::SignatureMismatch);
    }
    let n = a.size * b.size;
    let mut tables = Vec::with_capacity(a.signature.len());
    for op in 0..a.signature.len() {
        let arity = a.signature.arity(op);
        let mut table = Vec::with_capacity(n.pow(arity as u32));
        let mut left = Vec::with_capacity(arity);
        let mut right = Vec::with_capacity(arity);
        for_each_tuple(n, arity, |args| {
            left.clear();
            right.clear();
            for &x in args {
                left.push(x / b.size);
                right.push(x % b.size);
            }
            table.push(a.eval(op, &left) * b.size + b.eval(op, &right));
        });
        tables.push(table);
    }
    FiniteAlgebra::new(n, a.signature.clone(), tables)
}

/// Quotient of `A` by a congruence. Compatibility of `theta` with every
/// operation is checked and `NotCompatible` is returned on failure.
pub fn quotient_algebra(
    a: &FiniteAlgebra,
    theta: &Partition,
) -> Result<FiniteAlgebra, AlgebraError> {
    if theta.universe_size() != a.size {
        return Err(AlgebraError::PartitionSizeMismatch {
            got: theta.universe_size(),
            want: a.size,
        });
    }
    if let Some(op) = congruence::incompatible_op(a, theta) {
        return Err(AlgebraError::NotCompatible {
            op: a.signature.name(op).to_owned(),
        });
    }
    let m = theta.num_blocks();
    let reps = theta.block_representatives();
    let mut tables = Vec::with_capacity(a.signature.len());
    for op in 0..a.signature.len() {
        let arity = a.signature.arity(op);
        let mut table = Vec::with_capacity(m.pow(arity as u32));
        let mut lifted = Vec::with_capacity(arity);
        for_each_tuple(m, arity, |blocks| {
            lifted.clear();
            lifted.extend(blocks.iter().map(|&b| reps[b]));
            table.push(theta.block_of(a.eval(op, &lifted)));
        });
        tables.push(table);
    }
    FiniteAlgebra::new(m, a.signature.clone(), tables)
}

/// Restricts `A` to a subuniverse, renaming elements to `0..k-1` in the order
/// given by `elements` (which must be strictly increasing and closed under
/// the operations).
pub fn induced_subalgebra(
    a: &FiniteAlgebra,
    elements: &[usize],
) -> Result<FiniteAlgebra, AlgebraError> {
    let render = || {
        elements
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    let mut new_index = vec![usize::MAX; a.size];
    for (i, &e) in elements.iter().enumerate() {
        new_index[e] = i;
    }
    let k = elements.len();
    let mut tables = Vec::with_capacity(a.signature.len());
    for op in 0..a.signature.len() {
        let arity = a.signature.arity(op);
        let mut table = Vec::with_capacity(k.pow(arity as u32));
        let mut lifted = Vec::with_capacity(arity);
        let mut closed = true;
        for_each_tuple(k, arity, |args| {
            lifted.clear();
            lifted.extend(args.iter().map(|&x| elements[x]));
            let value = a.eval(op, &lifted);
            if new_index[value] == usize::MAX {
                closed = false;
                table.push(0);
            } else {
                table.push(new_index[value]);
            }
        });
        if !closed {
            return Err(AlgebraError::NotASubuniverse(render()));
        }
        tables.push(table);
    }
    FiniteAlgebra::new(k, a.signature.clone(), tables)
}

/// The subalgebra generated by the nullary operation values, together with
/// the renaming map from new indices back to elements of `B`.
pub fn zero_subalgebra(
    b: &FiniteAlgebra,
) -> Result<(FiniteAlgebra, Vec<usize>), AlgebraError> {
    if b.nullary_values().is_empty() {
        return Err(AlgebraError::NoNullaries);
    }
    let universe = subuniverse_closure(b, &[]);
    let sub = induced_subalgebra(b, &universe)?;
    Ok((sub, universe))
}

/// `A+`: the same tables plus one nullary operation `c0, .., c(n-1)` naming
/// each element.
pub fn name_all_elements(a: &FiniteAlgebra) -> Result<FiniteAlgebra, AlgebraError> {
    let mut ops: Vec<(String, usize)> = a.signature.ops().to_vec();
    let mut tables = a.tables.clone();
    for e in 0..a.size {
        let name = format!("c{e}");
        if a.signature.contains_name(&name) {
            return Err(AlgebraError::NameClash(name));
        }
        ops.push((name, 0));
        tables.push(vec![e]);
    }
    FiniteAlgebra::new(a.size, Signature::new(ops)?, tables)
}
