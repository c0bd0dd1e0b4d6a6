use thiserror::Error;

use crate::{
    model::{ArgumentId, SetafViolation},
    signatures::SignatureVerdict,
};

/// Largest domain handled by operations that enumerate assignments.
pub const MAX_ENUMERATION_SIZE: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument identifier {0:?}")]
    InvalidIdentifier(String),

    #[error("duplicate argument {0}")]
    DuplicateArgument(ArgumentId),

    #[error("argument {0} is not part of the domain")]
    UnknownArgument(ArgumentId),

    #[error("domains do not match")]
    DomainMismatch,

    #[error("{what} has {size} elements, the limit for exhaustive enumeration is {MAX_ENUMERATION_SIZE}")]
    SizeLimit { what: &'static str, size: usize },

    #[error("invalid SETAF: {}", join_violations(.0))]
    InvalidSetaf(Vec<SetafViolation>),

    #[error("labelling is not a partition of the domain")]
    NotAPartition,

    #[error("atom {atom} has no assigned truth value")]
    MissingAtom { atom: ArgumentId },

    #[error("semantics {semantics} is not available for {target}")]
    UnsupportedSemantics {
        semantics: String,
        target: &'static str,
    },

    #[error("({from}, {to}) is not a link")]
    NotALink { from: ArgumentId, to: ArgumentId },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("not representable with collective attacks: {0}")]
    NotRepresentable(String),

    #[error("acceptance condition of {statement} is not a conjunction of negative clauses")]
    NotSetadf { statement: ArgumentId },

    #[error("labelling set rejected: {0}")]
    Rejected(Box<SignatureVerdict>),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        code: &'static str,
        message: String,
    },
}

impl Error {
    /// Stable machine-readable name of the error kind.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidIdentifier(_) => "invalid-identifier",
            Error::DuplicateArgument(_) => "duplicate-argument",
            Error::UnknownArgument(_) => "unknown-argument",
            Error::DomainMismatch => "domain-mismatch",
            Error::SizeLimit { .. } => "size-limit",
            Error::InvalidSetaf(v) if v.len() == 1 => v[0].code(),
            Error::InvalidSetaf(_) => "invalid-setaf",
            Error::NotAPartition => "not-a-partition",
            Error::MissingAtom { .. } => "missing-atom",
            Error::UnsupportedSemantics { .. } => "unsupported-semantics",
            Error::NotALink { .. } => "not-a-link",
            Error::Precondition(_) => "precondition",
            Error::NotRepresentable(_) => "not-representable",
            Error::NotSetadf { .. } => "not-setadf",
            Error::Rejected(_) => "rejected",
            Error::Internal(_) => "internal",
            Error::Parse { code, .. } => code,
        }
    }
}

fn join_violations(violations: &[SetafViolation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_size(what: &'static str, size: usize) -> Result<()> {
    if size > MAX_ENUMERATION_SIZE {
        Err(Error::SizeLimit { what, size })
    } else {
        Ok(())
    }
}
