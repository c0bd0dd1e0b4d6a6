//! Shared vocabulary: argument identifiers, three-valued assignments and
//! SETAFs.

mod assignment;
mod setaf;

use std::{fmt, ops::Deref, str::FromStr, sync::Arc};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use assignment::{
    int_to_lab, lab_to_int, Assignment, AssignmentSet, InfoOrder, Interpretation,
    InterpretationSet, Label, Labelling, LabellingSet, Truth,
};
pub use setaf::{validate_setaf, Attack, RawSetaf, Setaf, SetafViolation};

/// Name of an argument (or ADF statement).
///
/// Non-empty and made of `[A-Za-z0-9_]`; ordering is plain byte-wise
/// lexicographic, which is the order used for every emitted set.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct ArgumentId(String);

impl ArgumentId {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if name.is_empty() || !name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_') {
            return Err(Error::InvalidIdentifier(name));
        }
        Ok(ArgumentId(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl TryFrom<String> for ArgumentId {
    type Error = Error;

    fn try_from(value: String) -> Result<Self> {
        ArgumentId::new(value)
    }
}

impl From<ArgumentId> for String {
    fn from(id: ArgumentId) -> String {
        id.0
    }
}

impl FromStr for ArgumentId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ArgumentId::new(s)
    }
}

impl fmt::Display for ArgumentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for ArgumentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Builds an identifier from a literal. Panics on invalid names, so only use
/// it with constants.
pub fn arg(name: &str) -> ArgumentId {
    ArgumentId::new(name).expect("valid argument identifier")
}

/// One of the three values shared by labellings and interpretations.
///
/// `In`/`Out`/`Undec` are the labels; the truth values t/f/u are the same
/// variants under the fixed bijection in↔t, out↔f, undec↔u. The derived
/// order (undec < out < in) is the tie-break order used when enumerating.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Value3 {
    Undec,
    Out,
    In,
}

impl Value3 {
    pub const T: Value3 = Value3::In;
    pub const F: Value3 = Value3::Out;
    pub const U: Value3 = Value3::Undec;

    /// All values in enumeration order.
    pub const ALL: [Value3; 3] = [Value3::Undec, Value3::Out, Value3::In];

    pub fn label(self) -> &'static str {
        match self {
            Value3::In => "in",
            Value3::Out => "out",
            Value3::Undec => "undec",
        }
    }

    pub fn truth(self) -> char {
        match self {
            Value3::In => 't',
            Value3::Out => 'f',
            Value3::Undec => 'u',
        }
    }

    pub fn from_truth(c: char) -> Option<Value3> {
        match c {
            't' => Some(Value3::T),
            'f' => Some(Value3::F),
            'u' => Some(Value3::U),
            _ => None,
        }
    }

    pub fn from_bool(b: bool) -> Value3 {
        if b {
            Value3::T
        } else {
            Value3::F
        }
    }

    pub fn is_decided(self) -> bool {
        self != Value3::Undec
    }

    /// `self ≤_i other` in the information order (u below t and f).
    pub fn info_le(self, other: Value3) -> bool {
        self == Value3::Undec || self == other
    }
}

/// A sorted, duplicate-free list of arguments shared by frameworks and the
/// assignments over them. Cloning is cheap.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Domain(Arc<[ArgumentId]>);

impl Domain {
    /// Sorts the arguments; fails on duplicates.
    pub fn new(args: impl IntoIterator<Item = ArgumentId>) -> Result<Self> {
        let mut args: Vec<ArgumentId> = args.into_iter().collect();
        args.sort();
        if let Some(w) = args.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateArgument(w[0].clone()));
        }
        Ok(Domain(args.into()))
    }

    /// Like [`Domain::new`] but silently merges duplicates.
    pub fn from_set(args: impl IntoIterator<Item = ArgumentId>) -> Self {
        let mut args: Vec<ArgumentId> = args.into_iter().collect();
        args.sort();
        args.dedup();
        Domain(args.into())
    }

    pub fn empty() -> Self {
        Domain(Arc::from(Vec::new()))
    }

    pub fn index_of(&self, a: &ArgumentId) -> Option<usize> {
        self.0.binary_search(a).ok()
    }

    pub fn contains(&self, a: &ArgumentId) -> bool {
        self.index_of(a).is_some()
    }

    pub fn args(&self) -> &[ArgumentId] {
        &self.0
    }
}

impl Deref for Domain {
    type Target = [ArgumentId];

    fn deref(&self) -> &[ArgumentId] {
        &self.0
    }
}

impl fmt::Debug for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

/// Every assignment of `alphabet` values to `n` positions that satisfies
/// `keep`, in lexicographic order (position 0 most significant, values in
/// `alphabet` order). The scan runs in parallel; the order does not depend
/// on it.
pub(crate) fn filter_candidates<F>(n: usize, alphabet: &[Value3], keep: F) -> Vec<Box<[Value3]>>
where
    F: Fn(&[Value3]) -> bool + Sync,
{
    let k = alphabet.len() as u64;
    let total = k.pow(n as u32);
    (0..total)
        .into_par_iter()
        .filter_map(|mut index| {
            let mut values = vec![alphabet[0]; n];
            for slot in values.iter_mut().rev() {
                *slot = alphabet[(index % k) as usize];
                index /= k;
            }
            keep(&values).then(|| values.into_boxed_slice())
        })
        .collect()
}

/// The semantics handled by the solvers. `Mod` (two-valued models) only
/// exists for ADFs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Semantics {
    Cf,
    Adm,
    Com,
    Grd,
    Prf,
    Stb,
    Mod,
}

impl Semantics {
    /// The six semantics shared by SETAFs and ADFs.
    pub const SETAF: [Semantics; 6] = [
        Semantics::Cf,
        Semantics::Adm,
        Semantics::Com,
        Semantics::Grd,
        Semantics::Prf,
        Semantics::Stb,
    ];

    pub const ADF: [Semantics; 7] = [
        Semantics::Cf,
        Semantics::Adm,
        Semantics::Com,
        Semantics::Grd,
        Semantics::Prf,
        Semantics::Stb,
        Semantics::Mod,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Semantics::Cf => "cf",
            Semantics::Adm => "adm",
            Semantics::Com => "com",
            Semantics::Grd => "grd",
            Semantics::Prf => "prf",
            Semantics::Stb => "stb",
            Semantics::Mod => "mod",
        }
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Semantics {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Semantics::ADF
            .into_iter()
            .find(|sem| sem.name() == s)
            .ok_or_else(|| Error::UnsupportedSemantics {
                semantics: s.to_string(),
                target: "this tool",
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identifiers_are_validated() {
        assert!(ArgumentId::new("a_1").is_ok());
        assert!(ArgumentId::new("").is_err());
        assert!(ArgumentId::new("a-b").is_err());
        assert!(ArgumentId::new("a b").is_err());
        assert_ne!(arg("a"), arg("A"));
    }

    #[test]
    fn domain_rejects_duplicates_and_sorts() {
        let d = Domain::new([arg("c"), arg("a"), arg("b")]).unwrap();
        assert_eq!(d.args(), &[arg("a"), arg("b"), arg("c")]);
        assert_eq!(d.index_of(&arg("c")), Some(2));
        assert_eq!(
            Domain::new([arg("a"), arg("a")]),
            Err(Error::DuplicateArgument(arg("a")))
        );
    }

    #[test]
    fn value_order_and_bijection() {
        assert!(Value3::Undec < Value3::Out && Value3::Out < Value3::In);
        for v in Value3::ALL {
            assert_eq!(Value3::from_truth(v.truth()), Some(v));
            assert!(Value3::U.info_le(v));
            assert!(v.info_le(v));
        }
        assert!(!Value3::T.info_le(Value3::F));
    }

    #[test]
    fn semantics_round_trip_names() {
        for s in Semantics::ADF {
            assert_eq!(s.name().parse::<Semantics>().unwrap(), s);
        }
        assert!("naive".parse::<Semantics>().is_err());
    }
}
