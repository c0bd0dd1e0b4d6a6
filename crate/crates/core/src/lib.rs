//! Three-valued semantics for SETAFs (argumentation frameworks with
//! collective attacks) and ADFs, the translations between them, and
//! signature checks with witness construction.
//!
//! Everything is exhaustive and deterministic: operations that enumerate
//! assignments refuse domains larger than [`MAX_ENUMERATION_SIZE`].

pub mod adf;
pub mod error;
pub mod formula;
pub mod generate;
pub mod io;
pub mod model;
pub mod setaf_sem;
pub mod signatures;
pub mod translation;

pub use adf::{Adf, Reduct};
pub use error::{Error, Result, MAX_ENUMERATION_SIZE};
pub use formula::{
    equivalent, to_negative_cnf, Classification, Formula, LinkType, NegClause, NegCnf,
};
pub use model::{
    arg, int_to_lab, lab_to_int, validate_setaf, ArgumentId, Attack, Domain, InfoOrder,
    Interpretation, InterpretationSet, Labelling, LabellingSet, RawSetaf, Semantics, Setaf,
    SetafViolation, Value3,
};
pub use signatures::{ConditionId, DeltaVerdict, SignatureVerdict, Violation};
pub use translation::{Pruned, SetadfView};
