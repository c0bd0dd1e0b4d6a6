use std::{
    cmp::Ordering,
    collections::{BTreeSet, HashSet},
    fmt,
};

use super::{ArgumentId, Domain};
use crate::error::{Error, Result};

/// A collective attack `(attackers, target)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Attack {
    pub attackers: BTreeSet<ArgumentId>,
    pub target: ArgumentId,
}

impl Attack {
    pub fn new(attackers: impl IntoIterator<Item = ArgumentId>, target: ArgumentId) -> Self {
        Attack {
            attackers: attackers.into_iter().collect(),
            target,
        }
    }
}

/// Attacks are ordered by target first, then by attacker set.
impl Ord for Attack {
    fn cmp(&self, other: &Self) -> Ordering {
        self.target
            .cmp(&other.target)
            .then_with(|| self.attackers.cmp(&other.attackers))
    }
}

impl PartialOrd for Attack {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Attack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("({")?;
        for (i, a) in self.attackers.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}, {})", self.target)
    }
}

/// Unvalidated SETAF data, as it comes out of a parser or a builder.
#[derive(Clone, Debug, Default)]
pub struct RawSetaf {
    pub arguments: Vec<ArgumentId>,
    pub attacks: Vec<(Vec<ArgumentId>, ArgumentId)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SetafViolation {
    EmptyAttackerSet { target: ArgumentId },
    UnknownArgument(ArgumentId),
    DuplicateAttack(Attack),
    DuplicateArgument(ArgumentId),
}

impl SetafViolation {
    pub fn code(&self) -> &'static str {
        match self {
            SetafViolation::EmptyAttackerSet { .. } => "empty-attacker-set",
            SetafViolation::UnknownArgument(_) => "unknown-argument",
            SetafViolation::DuplicateAttack(_) => "duplicate-attack",
            SetafViolation::DuplicateArgument(_) => "duplicate-argument",
        }
    }
}

impl fmt::Display for SetafViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetafViolation::EmptyAttackerSet { target } => {
                write!(f, "{} on {target}", self.code())
            }
            SetafViolation::UnknownArgument(a) => write!(f, "{} {a}", self.code()),
            SetafViolation::DuplicateAttack(att) => write!(f, "{} {att}", self.code()),
            SetafViolation::DuplicateArgument(a) => write!(f, "{} {a}", self.code()),
        }
    }
}

/// Lists every violated SETAF invariant; empty means the data is valid.
pub fn validate_setaf(raw: &RawSetaf) -> Vec<SetafViolation> {
    let mut violations = Vec::new();
    let mut declared = HashSet::new();
    for a in &raw.arguments {
        if !declared.insert(a) {
            violations.push(SetafViolation::DuplicateArgument(a.clone()));
        }
    }
    let mut unknown_seen = HashSet::new();
    let mut seen_attacks = HashSet::new();
    for (attackers, target) in &raw.attacks {
        if attackers.is_empty() {
            violations.push(SetafViolation::EmptyAttackerSet {
                target: target.clone(),
            });
        }
        for a in attackers.iter().chain(std::iter::once(target)) {
            if !declared.contains(a) && unknown_seen.insert(a.clone()) {
                violations.push(SetafViolation::UnknownArgument(a.clone()));
            }
        }
        let attack = Attack::new(attackers.iter().cloned(), target.clone());
        if !seen_attacks.insert(attack.clone()) {
            violations.push(SetafViolation::DuplicateAttack(attack));
        }
    }
    violations
}

/// A SETAF `(A, R)` with `R ⊆ (2^A ∖ {∅}) × A`.
#[derive(Clone, PartialEq, Eq)]
pub struct Setaf {
    arguments: Domain,
    attacks: BTreeSet<Attack>,
    // attacks_on[t] lists the attacker index sets of the attacks on arguments[t]
    attacks_on: Vec<Vec<Vec<usize>>>,
}

impl Setaf {
    pub fn new(
        arguments: impl IntoIterator<Item = ArgumentId>,
        attacks: impl IntoIterator<Item = Attack>,
    ) -> Result<Self> {
        let raw = RawSetaf {
            arguments: arguments.into_iter().collect(),
            attacks: attacks
                .into_iter()
                .map(|a| (a.attackers.into_iter().collect(), a.target))
                .collect(),
        };
        Setaf::from_raw(&raw)
    }

    pub fn from_raw(raw: &RawSetaf) -> Result<Self> {
        let violations = validate_setaf(raw);
        if !violations.is_empty() {
            return Err(Error::InvalidSetaf(violations));
        }
        let arguments = Domain::new(raw.arguments.iter().cloned())?;
        let attacks = raw
            .attacks
            .iter()
            .map(|(b, t)| Attack::new(b.iter().cloned(), t.clone()))
            .collect();
        Ok(Setaf::from_validated(arguments, attacks))
    }

    fn from_validated(arguments: Domain, attacks: BTreeSet<Attack>) -> Self {
        let mut attacks_on = vec![Vec::new(); arguments.len()];
        for att in &attacks {
            let t = arguments.index_of(&att.target).expect("validated target");
            let b = att
                .attackers
                .iter()
                .map(|a| arguments.index_of(a).expect("validated attacker"))
                .collect();
            attacks_on[t].push(b);
        }
        Setaf {
            arguments,
            attacks,
            attacks_on,
        }
    }

    pub fn arguments(&self) -> &Domain {
        &self.arguments
    }

    pub fn attacks(&self) -> &BTreeSet<Attack> {
        &self.attacks
    }

    /// Attacker index sets of the attacks on the argument at `target`.
    pub(crate) fn attacks_on(&self, target: usize) -> &[Vec<usize>] {
        &self.attacks_on[target]
    }

    pub fn to_raw(&self) -> RawSetaf {
        RawSetaf {
            arguments: self.arguments.to_vec(),
            attacks: self
                .attacks
                .iter()
                .map(|a| (a.attackers.iter().cloned().collect(), a.target.clone()))
                .collect(),
        }
    }
}

impl fmt::Debug for Setaf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Setaf")
            .field("arguments", &self.arguments)
            .field(
                "attacks",
                &self
                    .attacks
                    .iter()
                    .map(|a| a.to_string())
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}
