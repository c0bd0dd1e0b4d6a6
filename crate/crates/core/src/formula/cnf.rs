use std::{collections::BTreeSet, fmt};

use super::{equivalent, Classification, Compiled, Formula};
use crate::{
    error::{Error, Result},
    model::ArgumentId,
};

/// A non-empty clause of negative literals, read as `⋁_{a ∈ cl} ¬a`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NegClause(BTreeSet<ArgumentId>);

impl NegClause {
    pub fn new(atoms: impl IntoIterator<Item = ArgumentId>) -> Result<Self> {
        let atoms: BTreeSet<ArgumentId> = atoms.into_iter().collect();
        if atoms.is_empty() {
            return Err(Error::Precondition(
                "negative clause must not be empty".into(),
            ));
        }
        Ok(NegClause(atoms))
    }

    pub fn atoms(&self) -> &BTreeSet<ArgumentId> {
        &self.0
    }

    pub fn to_formula(&self) -> Formula {
        Formula::or(
            self.0
                .iter()
                .map(|a| Formula::neg(Formula::atom(a.clone())))
                .collect(),
        )
    }
}

impl fmt::Debug for NegClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

/// A conjunction of [`NegClause`]s; the empty conjunction is `⊤`.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NegCnf(BTreeSet<NegClause>);

impl NegCnf {
    pub fn top() -> Self {
        NegCnf(BTreeSet::new())
    }

    pub fn new(clauses: impl IntoIterator<Item = NegClause>) -> Self {
        NegCnf(clauses.into_iter().collect())
    }

    /// Shorthand for tests and builders: each inner list is one clause.
    pub fn from_lists<I, J>(clauses: I) -> Result<Self>
    where
        I: IntoIterator<Item = J>,
        J: IntoIterator<Item = ArgumentId>,
    {
        clauses
            .into_iter()
            .map(NegClause::new)
            .collect::<Result<BTreeSet<_>>>()
            .map(NegCnf)
    }

    pub fn clauses(&self) -> &BTreeSet<NegClause> {
        &self.0
    }

    pub fn is_top(&self) -> bool {
        self.0.is_empty()
    }

    pub fn atoms(&self) -> BTreeSet<ArgumentId> {
        self.0.iter().flat_map(|c| c.0.iter().cloned()).collect()
    }

    /// Drops every clause that is a strict superset of another clause.
    pub fn absorbed(&self) -> NegCnf {
        let kept = self
            .0
            .iter()
            .filter(|c| !self.0.iter().any(|d| d != *c && d.0.is_subset(&c.0)))
            .cloned()
            .collect();
        NegCnf(kept)
    }

    pub fn to_formula(&self) -> Formula {
        Formula::and(self.0.iter().map(NegClause::to_formula).collect())
    }

    /// Reads `f` as a negative CNF without any rewriting: `Top`, a clause,
    /// or an `And` of clauses, where a clause is `neg(atom)` or an `Or` of
    /// those.
    pub fn from_formula(f: &Formula) -> Option<NegCnf> {
        match f {
            Formula::Top => Some(NegCnf::top()),
            Formula::And(items) => items
                .iter()
                .map(clause_of)
                .collect::<Option<BTreeSet<_>>>()
                .map(NegCnf),
            other => clause_of(other).map(|c| NegCnf([c].into())),
        }
    }
}

fn negated_atom(f: &Formula) -> Option<&ArgumentId> {
    match f {
        Formula::Neg(inner) => match inner.as_ref() {
            Formula::Atom(a) => Some(a),
            _ => None,
        },
        _ => None,
    }
}

fn clause_of(f: &Formula) -> Option<NegClause> {
    match f {
        Formula::Or(items) => items
            .iter()
            .map(|g| negated_atom(g).cloned())
            .collect::<Option<BTreeSet<_>>>()
            .map(NegClause),
        other => negated_atom(other).map(|a| NegClause([a.clone()].into())),
    }
}

impl fmt::Debug for NegCnf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl fmt::Display for NegCnf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_formula())
    }
}

type Literal = (ArgumentId, bool);
type Clause = BTreeSet<Literal>;
/// `{}` is ⊤, `{{}}` is ⊥.
type Clauses = BTreeSet<Clause>;

fn is_tautological(c: &Clause) -> bool {
    c.iter()
        .any(|(a, pos)| *pos && c.contains(&(a.clone(), false)))
}

fn simplify(clauses: Clauses) -> Clauses {
    let clauses: Vec<Clause> = clauses
        .into_iter()
        .filter(|c| !is_tautological(c))
        .collect();
    clauses
        .iter()
        .filter(|c| !clauses.iter().any(|d| d != *c && d.is_subset(c)))
        .cloned()
        .collect()
}

fn distribute(x: &Clauses, y: &Clauses) -> Clauses {
    let mut out = Clauses::new();
    for cx in x {
        for cy in y {
            out.insert(cx.union(cy).cloned().collect());
        }
    }
    simplify(out)
}

fn conjoin(parts: impl IntoIterator<Item = Clauses>) -> Clauses {
    simplify(parts.into_iter().flatten().collect())
}

fn disjoin(parts: impl IntoIterator<Item = Clauses>) -> Clauses {
    let falsum: Clauses = [Clause::new()].into();
    parts
        .into_iter()
        .fold(falsum, |acc, p| distribute(&acc, &p))
}

/// CNF of `f` (or of `¬f` when `positive` is false) by distribution, without
/// auxiliary variables.
fn cnf(f: &Formula, positive: bool) -> Clauses {
    let top = Clauses::new;
    let bot = || -> Clauses { [Clause::new()].into() };
    match (f, positive) {
        (Formula::Atom(a), pol) => [[(a.clone(), pol)].into()].into(),
        (Formula::Top, true) | (Formula::Bot, false) => top(),
        (Formula::Top, false) | (Formula::Bot, true) => bot(),
        (Formula::Neg(g), pol) => cnf(g, !pol),
        (Formula::And(gs), true) => conjoin(gs.iter().map(|g| cnf(g, true))),
        (Formula::And(gs), false) => disjoin(gs.iter().map(|g| cnf(g, false))),
        (Formula::Or(gs), true) => disjoin(gs.iter().map(|g| cnf(g, true))),
        (Formula::Or(gs), false) => conjoin(gs.iter().map(|g| cnf(g, false))),
        (Formula::Imp(a, b), true) => distribute(&cnf(a, false), &cnf(b, true)),
        (Formula::Imp(a, b), false) => conjoin([cnf(a, true), cnf(b, false)]),
        (Formula::Iff(a, b), true) => conjoin([
            distribute(&cnf(a, false), &cnf(b, true)),
            distribute(&cnf(a, true), &cnf(b, false)),
        ]),
        (Formula::Iff(a, b), false) => conjoin([
            distribute(&cnf(a, true), &cnf(b, true)),
            distribute(&cnf(a, false), &cnf(b, false)),
        ]),
    }
}

/// Rewrites an acceptance condition whose links are all attacking into an
/// equivalent CNF over negative literals.
///
/// The formula is brought into CNF by distribution, every positive literal
/// is deleted from every clause (sound because each atom is attacking), and
/// clauses that are supersets of other clauses are dropped. The result is
/// checked against the input by truth table.
pub fn to_negative_cnf(phi: &Formula) -> Result<NegCnf> {
    let compiled = Compiled::new(phi)?;
    match compiled.classify(0, compiled.full_mask()) {
        Classification::Unsatisfiable => {
            return Err(Error::NotRepresentable(format!("{phi} is unsatisfiable")))
        }
        Classification::Tautology => return Ok(NegCnf::top()),
        Classification::Contingent => {}
    }
    for (i, atom) in compiled.atoms().iter().enumerate() {
        let kind = compiled.link_type(i);
        if !kind.is_attacking() {
            return Err(Error::Precondition(format!(
                "link from {atom} is {kind}, not attacking"
            )));
        }
    }

    let mut clauses = BTreeSet::new();
    for clause in cnf(phi, true) {
        let negatives: BTreeSet<ArgumentId> = clause
            .into_iter()
            .filter(|(_, pos)| !pos)
            .map(|(a, _)| a)
            .collect();
        if negatives.is_empty() {
            return Err(Error::Internal(format!(
                "deleting positive literals of {phi} left an empty clause"
            )));
        }
        clauses.insert(NegClause(negatives));
    }
    let result = NegCnf(clauses).absorbed();
    if !equivalent(phi, &result.to_formula())? {
        return Err(Error::Internal(format!(
            "negative CNF {result} is not equivalent to {phi}"
        )));
    }
    Ok(result)
}
