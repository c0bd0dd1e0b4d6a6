use std::{
    cmp::Ordering,
    collections::{BTreeMap, BTreeSet},
    fmt,
    hash::{Hash, Hasher},
    marker::PhantomData,
};

use super::{ArgumentId, Domain, Value3};
use crate::error::{Error, Result};

/// Marker for assignments read as labellings (in/out/undec).
#[derive(Debug)]
pub enum Label {}

/// Marker for assignments read as interpretations (t/f/u).
#[derive(Debug)]
pub enum Truth {}

/// A total map from a [`Domain`] to [`Value3`].
///
/// The kind parameter only selects how the assignment is read and printed;
/// [`lab_to_int`] and [`int_to_lab`] switch between the two without touching
/// the values.
pub struct Assignment<K> {
    domain: Domain,
    values: Box<[Value3]>,
    kind: PhantomData<fn() -> K>,
}

pub type Labelling = Assignment<Label>;
pub type Interpretation = Assignment<Truth>;

/// Result of comparing two interpretations in the information order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InfoOrder {
    Equal,
    /// The left operand is strictly below the right one.
    LessEqual,
    Greater,
    Incomparable,
}

impl<K> Assignment<K> {
    /// `values[i]` is the value of `domain[i]`.
    pub fn new(domain: Domain, values: impl Into<Box<[Value3]>>) -> Result<Self> {
        let values = values.into();
        if values.len() != domain.len() {
            return Err(Error::DomainMismatch);
        }
        Ok(Self::from_parts(domain, values))
    }

    pub(crate) fn from_parts(domain: Domain, values: Box<[Value3]>) -> Self {
        debug_assert_eq!(domain.len(), values.len());
        Assignment {
            domain,
            values,
            kind: PhantomData,
        }
    }

    /// Every argument of `domain` mapped to `value`.
    pub fn constant(domain: &Domain, value: Value3) -> Self {
        Self::from_parts(domain.clone(), vec![value; domain.len()].into())
    }

    /// Builds an assignment from explicit pairs; must cover `domain` exactly.
    pub fn from_pairs(
        domain: &Domain,
        pairs: impl IntoIterator<Item = (ArgumentId, Value3)>,
    ) -> Result<Self> {
        let mut values: Vec<Option<Value3>> = vec![None; domain.len()];
        for (a, v) in pairs {
            let i = domain
                .index_of(&a)
                .ok_or_else(|| Error::UnknownArgument(a.clone()))?;
            if values[i].replace(v).is_some() {
                return Err(Error::DuplicateArgument(a));
            }
        }
        let values: Option<Vec<Value3>> = values.into_iter().collect();
        values
            .map(|v| Self::from_parts(domain.clone(), v.into()))
            .ok_or(Error::DomainMismatch)
    }

    /// Builds an assignment from the three parts `(in, out, undec)`, which
    /// must partition `domain`.
    pub fn from_parts_sets<'a>(
        domain: &Domain,
        in_part: impl IntoIterator<Item = &'a ArgumentId>,
        out_part: impl IntoIterator<Item = &'a ArgumentId>,
        undec_part: impl IntoIterator<Item = &'a ArgumentId>,
    ) -> Result<Self> {
        let pairs = in_part
            .into_iter()
            .map(|a| (a.clone(), Value3::In))
            .chain(out_part.into_iter().map(|a| (a.clone(), Value3::Out)))
            .chain(undec_part.into_iter().map(|a| (a.clone(), Value3::Undec)));
        Self::from_pairs(domain, pairs).map_err(|e| match e {
            Error::UnknownArgument(a) => Error::UnknownArgument(a),
            _ => Error::NotAPartition,
        })
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn values(&self) -> &[Value3] {
        &self.values
    }

    pub fn get(&self, a: &ArgumentId) -> Option<Value3> {
        self.domain.index_of(a).map(|i| self.values[i])
    }

    pub fn value_at(&self, index: usize) -> Value3 {
        self.values[index]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ArgumentId, Value3)> + '_ {
        self.domain.iter().zip(self.values.iter().copied())
    }

    /// The arguments mapped to `value`, in domain order.
    pub fn part(&self, value: Value3) -> BTreeSet<ArgumentId> {
        self.iter()
            .filter(|(_, v)| *v == value)
            .map(|(a, _)| a.clone())
            .collect()
    }

    pub fn has_value(&self, value: Value3) -> bool {
        self.values.contains(&value)
    }

    /// `(λ_in, λ_out, λ_undec)`.
    pub fn triple(
        &self,
    ) -> (
        BTreeSet<ArgumentId>,
        BTreeSet<ArgumentId>,
        BTreeSet<ArgumentId>,
    ) {
        (
            self.part(Value3::In),
            self.part(Value3::Out),
            self.part(Value3::Undec),
        )
    }

    /// The update `v|^b_x`.
    pub fn update(&self, b: &ArgumentId, x: Value3) -> Result<Self> {
        let i = self
            .domain
            .index_of(b)
            .ok_or_else(|| Error::UnknownArgument(b.clone()))?;
        Ok(self.with_value_at(i, x))
    }

    pub(crate) fn with_value_at(&self, index: usize, x: Value3) -> Self {
        let mut values = self.values.clone();
        values[index] = x;
        Self::from_parts(self.domain.clone(), values)
    }

    pub fn is_two_valued(&self) -> bool {
        !self.has_value(Value3::Undec)
    }

    /// Pointwise `self ≤_i other`.
    pub fn info_le(&self, other: &Self) -> Result<bool> {
        if self.domain != other.domain {
            return Err(Error::DomainMismatch);
        }
        Ok(self
            .values
            .iter()
            .zip(other.values.iter())
            .all(|(a, b)| a.info_le(*b)))
    }

    pub fn info_compare(&self, other: &Self) -> Result<InfoOrder> {
        let le = self.info_le(other)?;
        let ge = other.info_le(self)?;
        Ok(match (le, ge) {
            (true, true) => InfoOrder::Equal,
            (true, false) => InfoOrder::LessEqual,
            (false, true) => InfoOrder::Greater,
            (false, false) => InfoOrder::Incomparable,
        })
    }

    pub fn to_map(&self) -> BTreeMap<ArgumentId, Value3> {
        self.iter().map(|(a, v)| (a.clone(), v)).collect()
    }

    fn recast<J>(&self) -> Assignment<J> {
        Assignment::from_parts(self.domain.clone(), self.values.clone())
    }
}

impl Labelling {
    pub fn to_interpretation(&self) -> Interpretation {
        self.recast()
    }
}

impl Interpretation {
    pub fn to_labelling(&self) -> Labelling {
        self.recast()
    }

    /// `v^t`, the statements mapped to true.
    pub fn true_set(&self) -> BTreeSet<ArgumentId> {
        self.part(Value3::T)
    }
}

/// Renames in→t, out→f, undec→u.
pub fn lab_to_int(labelling: &Labelling) -> Interpretation {
    labelling.to_interpretation()
}

/// Inverse of [`lab_to_int`].
pub fn int_to_lab(interpretation: &Interpretation) -> Labelling {
    interpretation.to_labelling()
}

impl<K> Clone for Assignment<K> {
    fn clone(&self) -> Self {
        Self::from_parts(self.domain.clone(), self.values.clone())
    }
}

impl<K> PartialEq for Assignment<K> {
    fn eq(&self, other: &Self) -> bool {
        self.domain == other.domain && self.values == other.values
    }
}

impl<K> Eq for Assignment<K> {}

impl<K> Hash for Assignment<K> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.domain.hash(state);
        self.values.hash(state);
    }
}

impl<K> PartialOrd for Assignment<K> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<K> Ord for Assignment<K> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.domain
            .cmp(&other.domain)
            .then_with(|| self.values.cmp(&other.values))
    }
}

fn write_set(f: &mut fmt::Formatter<'_>, set: &BTreeSet<ArgumentId>) -> fmt::Result {
    f.write_str("{")?;
    for (i, a) in set.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{a}")?;
    }
    f.write_str("}")
}

/// `in:{a,b} out:{c} undec:{}`
impl fmt::Display for Labelling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, o, u) = self.triple();
        f.write_str("in:")?;
        write_set(f, &i)?;
        f.write_str(" out:")?;
        write_set(f, &o)?;
        f.write_str(" undec:")?;
        write_set(f, &u)
    }
}

/// `{a:t,b:f,c:u}`
impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (a, v)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}:{}", v.truth())?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Labelling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl fmt::Debug for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A set of assignments over one shared domain.
pub struct AssignmentSet<K> {
    arguments: Domain,
    members: BTreeSet<Assignment<K>>,
}

pub type LabellingSet = AssignmentSet<Label>;
pub type InterpretationSet = AssignmentSet<Truth>;

impl<K> AssignmentSet<K> {
    pub fn empty(arguments: Domain) -> Self {
        AssignmentSet {
            arguments,
            members: BTreeSet::new(),
        }
    }

    /// Fails when a member's domain differs from `arguments` or a member is
    /// listed twice.
    pub fn new(
        arguments: Domain,
        members: impl IntoIterator<Item = Assignment<K>>,
    ) -> Result<Self> {
        let mut set = Self::empty(arguments);
        for m in members {
            if !set.insert(m)? {
                return Err(Error::Precondition(
                    "duplicate member in assignment set".into(),
                ));
            }
        }
        Ok(set)
    }

    /// Builds the set, merging duplicates.
    pub(crate) fn collect(
        arguments: Domain,
        members: impl IntoIterator<Item = Assignment<K>>,
    ) -> Self {
        let members: BTreeSet<_> = members.into_iter().collect();
        debug_assert!(members.iter().all(|m| m.domain == arguments));
        AssignmentSet { arguments, members }
    }

    /// Returns whether the member was new.
    pub fn insert(&mut self, member: Assignment<K>) -> Result<bool> {
        if member.domain != self.arguments {
            return Err(Error::DomainMismatch);
        }
        Ok(self.members.insert(member))
    }

    pub fn arguments(&self) -> &Domain {
        &self.arguments
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, member: &Assignment<K>) -> bool {
        self.members.contains(member)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Assignment<K>> + '_ {
        self.members.iter()
    }

    pub fn members(&self) -> &BTreeSet<Assignment<K>> {
        &self.members
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.arguments == other.arguments && self.members.is_subset(&other.members)
    }

    fn recast<J>(&self) -> AssignmentSet<J> {
        AssignmentSet {
            arguments: self.arguments.clone(),
            members: self.members.iter().map(|m| m.recast()).collect(),
        }
    }
}

impl LabellingSet {
    pub fn to_interpretations(&self) -> InterpretationSet {
        self.recast()
    }
}

impl InterpretationSet {
    pub fn to_labellings(&self) -> LabellingSet {
        self.recast()
    }
}

impl<K> Clone for AssignmentSet<K> {
    fn clone(&self) -> Self {
        AssignmentSet {
            arguments: self.arguments.clone(),
            members: self.members.clone(),
        }
    }
}

impl<K> PartialEq for AssignmentSet<K> {
    fn eq(&self, other: &Self) -> bool {
        self.arguments == other.arguments && self.members == other.members
    }
}

impl<K> Eq for AssignmentSet<K> {}

impl<K> fmt::Debug for AssignmentSet<K>
where
    Assignment<K>: fmt::Debug,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members.iter()).finish()
    }
}

impl<'a, K> IntoIterator for &'a AssignmentSet<K> {
    type Item = &'a Assignment<K>;
    type IntoIter = std::collections::btree_set::Iter<'a, Assignment<K>>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}
