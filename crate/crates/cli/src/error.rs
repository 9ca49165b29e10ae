//! Error-to-exit-code mapping: 1 verification mismatch, 2 usage or
//! parse/validation failure, 3 budget exhaustion, 4 missing top in the
//! subalgebra hom order.

use homlat_core::algebra::AlgebraError;
use homlat_core::homlat::HomLatError;
use homlat_core::order::OrderError;
use homlat_core::synth::SynthError;

#[derive(Debug)]
pub enum CliError {
    Mismatch(String),
    Usage(String),
    Validation(String),
    Budget(String),
    NoTop(String),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn validation(msg: impl std::fmt::Display) -> Self {
        CliError::Validation(msg.to_string())
    }

    pub fn json(err: serde_json::Error) -> Self {
        CliError::Validation(format!(
            "line {}, column {}: {}",
            err.line(),
            err.column(),
            err
        ))
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Mismatch(_) => 1,
            CliError::Usage(_) | CliError::Validation(_) => 2,
            CliError::Budget(_) => 3,
            CliError::NoTop(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Mismatch(m)
            | CliError::Usage(m)
            | CliError::Validation(m)
            | CliError::Budget(m)
            | CliError::NoTop(m) => m,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_code_contract() {
        assert_eq!(CliError::Mismatch("m".into()).exit_code(), 1);
        assert_eq!(CliError::Usage("u".into()).exit_code(), 2);
        assert_eq!(CliError::Validation("v".into()).exit_code(), 2);
        assert_eq!(CliError::Budget("b".into()).exit_code(), 3);
        assert_eq!(CliError::NoTop("t".into()).exit_code(), 4);
        let err: CliError = HomLatError::NoTopInP.into();
        assert_eq!(err.exit_code(), 4);
    }
}

impl From<OrderError> for CliError {
    fn from(e: OrderError) -> Self {
        match e {
            OrderError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            other => CliError::Validation(other.to_string()),
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            other => CliError::Validation(other.to_string()),
        }
    }
}

impl From<SynthError> for CliError {
    fn from(e: SynthError) -> Self {
        match e {
            SynthError::Order(inner) => inner.into(),
            SynthError::Algebra(inner) => inner.into(),
            other => CliError::Validation(other.to_string()),
        }
    }
}

impl From<HomLatError> for CliError {
    fn from(e: HomLatError) -> Self {
        match e {
            HomLatError::NoTopInP => CliError::NoTop(e.to_string()),
            HomLatError::Algebra(inner) => inner.into(),
            HomLatError::Order(inner) => inner.into(),
            HomLatError::Synth(inner) => inner.into(),
            other => CliError::Validation(other.to_string()),
        }
    }
}
