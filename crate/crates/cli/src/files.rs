//! The two on-disk formats: algebras and posets as JSON objects, one file
//! per object. Writing is canonical (fixed key order, sorted covers), so
//! read-then-write is byte-stable.

use crate::error::CliError;
use homlat_core::order::Poset;
use homlat_core::{FiniteAlgebra, Signature};
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct OpFile {
    pub name: String,
    pub arity: usize,
    pub table: Vec<usize>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub size: usize,
    pub ops: Vec<OpFile>,
    /// Set on files produced by `homlat synth`; `homlat homlattice` accepts
    /// such files without `--assume-quasiprimal`.
    #[serde(default, skip_serializing_if = "is_false")]
    pub quasiprimal: bool,
}

fn is_false(b: &bool) -> bool {
    !b
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct PosetFile {
    pub elements: Vec<String>,
    pub covers: Vec<(usize, usize)>,
}

impl AlgebraFile {
    pub fn to_algebra(&self) -> Result<FiniteAlgebra, CliError> {
        let ops: Vec<(String, usize)> = self
            .ops
            .iter()
            .map(|op| (op.name.clone(), op.arity))
            .collect();
        let signature = Signature::new(ops).map_err(CliError::validation)?;
        let tables = self.ops.iter().map(|op| op.table.clone()).collect();
        FiniteAlgebra::new(self.size, signature, tables).map_err(CliError::validation)
    }

    pub fn from_algebra(a: &FiniteAlgebra, name: Option<String>, quasiprimal: bool) -> Self {
        AlgebraFile {
            name,
            size: a.size(),
            ops: (0..a.signature().len())
                .map(|op| OpFile {
                    name: a.signature().name(op).to_owned(),
                    arity: a.signature().arity(op),
                    table: a.table(op).to_vec(),
                })
                .collect(),
            quasiprimal,
        }
    }
}

impl PosetFile {
    pub fn to_poset(&self, reduce: bool) -> Result<Poset, CliError> {
        let result = if reduce {
            Poset::from_order_pairs(self.elements.clone(), self.covers.to_vec())
        } else {
            Poset::new(self.elements.clone(), self.covers.to_vec())
        };
        result.map_err(|e| match e {
            homlat_core::order::OrderError::NotACover { .. } => CliError::validation(format!(
                "{e} (pass --reduce to accept redundant pairs)"
            )),
            other => CliError::validation(other),
        })
    }

    pub fn from_poset(p: &Poset) -> Self {
        PosetFile {
            elements: p.names().to_vec(),
            covers: p.covers().to_vec(),
        }
    }
}

/// Resolves a command-line file argument: either a path or `builtin:NAME`
/// for an embedded fixture.
pub fn read_source(arg: &str) -> Result<String, CliError> {
    if let Some(name) = arg.strip_prefix("builtin:") {
        return crate::fixtures::render(name)
            .ok_or_else(|| CliError::usage(format!("unknown builtin fixture `{name}`")));
    }
    std::fs::read_to_string(arg).map_err(|e| CliError::validation(format!("{arg}: {e}")))
}

pub fn parse_algebra_file(text: &str) -> Result<AlgebraFile, CliError> {
    serde_json::from_str(text).map_err(CliError::json)
}

pub fn parse_poset_file(text: &str) -> Result<PosetFile, CliError> {
    serde_json::from_str(text).map_err(CliError::json)
}

pub fn load_algebra(arg: &str) -> Result<(AlgebraFile, FiniteAlgebra), CliError> {
    let file = parse_algebra_file(&read_source(arg)?)?;
    let algebra = file.to_algebra()?;
    Ok((file, algebra))
}

pub fn load_poset(arg: &str, reduce: bool) -> Result<Poset, CliError> {
    parse_poset_file(&read_source(arg)?)?.to_poset(reduce)
}

/// Canonical rendering: pretty JSON with a trailing newline.
pub fn render_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("serializable");
    out.push('\n');
    out
}
