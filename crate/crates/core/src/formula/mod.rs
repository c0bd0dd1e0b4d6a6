//! Propositional acceptance conditions: evaluation, partial valuation,
//! truth-table classification, link types and negative CNFs.

mod cnf;

use std::{
    collections::{BTreeMap, BTreeSet},
    fmt,
};

use crate::{
    error::{check_size, Error, Result},
    model::{ArgumentId, Interpretation, Value3},
};

pub use cnf::{to_negative_cnf, NegClause, NegCnf};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(ArgumentId),
    Top,
    Bot,
    Neg(Box<Formula>),
    /// Non-empty.
    And(Vec<Formula>),
    /// Non-empty.
    Or(Vec<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
}

/// Truth-table verdict for a formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    Tautology,
    Unsatisfiable,
    Contingent,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LinkType {
    Supporting,
    Attacking,
    Redundant,
    Dependent,
}

impl LinkType {
    pub fn name(self) -> &'static str {
        match self {
            LinkType::Supporting => "supporting",
            LinkType::Attacking => "attacking",
            LinkType::Redundant => "redundant",
            LinkType::Dependent => "dependent",
        }
    }

    /// Redundant links count as attacking.
    pub fn is_attacking(self) -> bool {
        matches!(self, LinkType::Attacking | LinkType::Redundant)
    }

    pub fn is_supporting(self) -> bool {
        matches!(self, LinkType::Supporting | LinkType::Redundant)
    }

    fn from_flags(attacking: bool, supporting: bool) -> LinkType {
        match (attacking, supporting) {
            (true, true) => LinkType::Redundant,
            (true, false) => LinkType::Attacking,
            (false, true) => LinkType::Supporting,
            (false, false) => LinkType::Dependent,
        }
    }
}

impl fmt::Display for LinkType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Formula {
    pub fn atom(a: ArgumentId) -> Formula {
        Formula::Atom(a)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(f: Formula) -> Formula {
        Formula::Neg(Box::new(f))
    }

    /// Conjunction; the empty conjunction is `Top` and a single conjunct is
    /// returned as is.
    pub fn and(mut parts: Vec<Formula>) -> Formula {
        match parts.len() {
            0 => Formula::Top,
            1 => parts.pop().unwrap(),
            _ => Formula::And(parts),
        }
    }

    /// Disjunction; the empty disjunction is `Bot`.
    pub fn or(mut parts: Vec<Formula>) -> Formula {
        match parts.len() {
            0 => Formula::Bot,
            1 => parts.pop().unwrap(),
            _ => Formula::Or(parts),
        }
    }

    pub fn imp(a: Formula, b: Formula) -> Formula {
        Formula::Imp(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    pub fn atoms(&self) -> BTreeSet<ArgumentId> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<ArgumentId>) {
        match self {
            Formula::Atom(a) => {
                out.insert(a.clone());
            }
            Formula::Top | Formula::Bot => {}
            Formula::Neg(f) => f.collect_atoms(out),
            Formula::And(fs) | Formula::Or(fs) => fs.iter().for_each(|f| f.collect_atoms(out)),
            Formula::Imp(a, b) | Formula::Iff(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    /// Classical evaluation; `w` must assign every atom.
    pub fn eval2(&self, w: &BTreeMap<ArgumentId, bool>) -> Result<bool> {
        self.eval_with(&mut |a| {
            w.get(a)
                .copied()
                .ok_or_else(|| Error::MissingAtom { atom: a.clone() })
        })
    }

    fn eval_with(&self, w: &mut impl FnMut(&ArgumentId) -> Result<bool>) -> Result<bool> {
        Ok(match self {
            Formula::Atom(a) => w(a)?,
            Formula::Top => true,
            Formula::Bot => false,
            Formula::Neg(f) => !f.eval_with(w)?,
            Formula::And(fs) => {
                let mut r = true;
                for f in fs {
                    r &= f.eval_with(w)?;
                }
                r
            }
            Formula::Or(fs) => {
                let mut r = false;
                for f in fs {
                    r |= f.eval_with(w)?;
                }
                r
            }
            Formula::Imp(a, b) => {
                let a = a.eval_with(w)?;
                let b = b.eval_with(w)?;
                !a || b
            }
            Formula::Iff(a, b) => a.eval_with(w)? == b.eval_with(w)?,
        })
    }

    /// Replaces atoms for which `f` returns a value by `Top`/`Bot`; nothing
    /// else is rewritten.
    pub fn substitute(&self, f: &impl Fn(&ArgumentId) -> Option<bool>) -> Formula {
        match self {
            Formula::Atom(a) => match f(a) {
                Some(true) => Formula::Top,
                Some(false) => Formula::Bot,
                None => Formula::Atom(a.clone()),
            },
            Formula::Top => Formula::Top,
            Formula::Bot => Formula::Bot,
            Formula::Neg(g) => Formula::Neg(Box::new(g.substitute(f))),
            Formula::And(gs) => Formula::And(gs.iter().map(|g| g.substitute(f)).collect()),
            Formula::Or(gs) => Formula::Or(gs.iter().map(|g| g.substitute(f)).collect()),
            Formula::Imp(a, b) => Formula::imp(a.substitute(f), b.substitute(f)),
            Formula::Iff(a, b) => Formula::iff(a.substitute(f), b.substitute(f)),
        }
    }

    /// `φ^v`: t-atoms become `Top`, f-atoms `Bot`, u-atoms (and atoms outside
    /// the domain of `v`) stay free.
    pub fn partial_valuation(&self, v: &Interpretation) -> Formula {
        self.substitute(&|a| match v.get(a) {
            Some(Value3::In) => Some(true),
            Some(Value3::Out) => Some(false),
            _ => None,
        })
    }

    /// Exhaustive truth-table classification over `atoms(self)`.
    pub fn classify(&self) -> Result<Classification> {
        let compiled = Compiled::new(self)?;
        Ok(compiled.classify(0, compiled.full_mask()))
    }

    /// Link type of `atom` in this formula, with parents = `atoms(self)`.
    pub fn link_type(&self, atom: &ArgumentId) -> Result<LinkType> {
        let compiled = Compiled::new(self)?;
        let idx = compiled
            .atom_index(atom)
            .ok_or_else(|| Error::Precondition(format!("{atom} does not occur in the formula")))?;
        Ok(compiled.link_type(idx))
    }
}

/// Truth-table equivalence over the union of both atom sets.
pub fn equivalent(phi: &Formula, psi: &Formula) -> Result<bool> {
    let mut atoms = phi.atoms();
    atoms.extend(psi.atoms());
    check_size("atom set", atoms.len())?;
    let atoms: Vec<ArgumentId> = atoms.into_iter().collect();
    let a = Compiled::with_atoms(phi, &atoms);
    let b = Compiled::with_atoms(psi, &atoms);
    Ok((0..1u64 << atoms.len()).all(|m| a.eval(m) == b.eval(m)))
}

/// A formula over an indexed atom list, evaluated against bit masks
/// (bit `i` set means atom `i` is true).
#[derive(Clone, Debug)]
pub(crate) struct Compiled {
    atoms: Vec<ArgumentId>,
    root: Node,
}

#[derive(Clone, Debug)]
enum Node {
    Const(bool),
    Var(usize),
    Not(Box<Node>),
    And(Vec<Node>),
    Or(Vec<Node>),
    Imp(Box<Node>, Box<Node>),
    Iff(Box<Node>, Box<Node>),
}

impl Node {
    fn build(f: &Formula, atoms: &[ArgumentId]) -> Node {
        match f {
            Formula::Atom(a) => Node::Var(atoms.binary_search(a).expect("atom in index")),
            Formula::Top => Node::Const(true),
            Formula::Bot => Node::Const(false),
            Formula::Neg(g) => Node::Not(Box::new(Node::build(g, atoms))),
            Formula::And(gs) => Node::And(gs.iter().map(|g| Node::build(g, atoms)).collect()),
            Formula::Or(gs) => Node::Or(gs.iter().map(|g| Node::build(g, atoms)).collect()),
            Formula::Imp(a, b) => Node::Imp(
                Box::new(Node::build(a, atoms)),
                Box::new(Node::build(b, atoms)),
            ),
            Formula::Iff(a, b) => Node::Iff(
                Box::new(Node::build(a, atoms)),
                Box::new(Node::build(b, atoms)),
            ),
        }
    }

    fn eval(&self, mask: u64) -> bool {
        match self {
            Node::Const(b) => *b,
            Node::Var(i) => mask >> i & 1 == 1,
            Node::Not(n) => !n.eval(mask),
            Node::And(ns) => ns.iter().all(|n| n.eval(mask)),
            Node::Or(ns) => ns.iter().any(|n| n.eval(mask)),
            Node::Imp(a, b) => !a.eval(mask) || b.eval(mask),
            Node::Iff(a, b) => a.eval(mask) == b.eval(mask),
        }
    }
}

impl Compiled {
    /// Indexes `atoms(f)`; fails above the enumeration limit.
    pub(crate) fn new(f: &Formula) -> Result<Self> {
        let atoms: Vec<ArgumentId> = f.atoms().into_iter().collect();
        check_size("atom set", atoms.len())?;
        Ok(Compiled::with_atoms(f, &atoms))
    }

    /// Indexes `f` against a sorted superset of its atoms. No size check.
    pub(crate) fn with_atoms(f: &Formula, atoms: &[ArgumentId]) -> Self {
        Compiled {
            atoms: atoms.to_vec(),
            root: Node::build(f, atoms),
        }
    }

    pub(crate) fn atoms(&self) -> &[ArgumentId] {
        &self.atoms
    }

    pub(crate) fn atom_index(&self, a: &ArgumentId) -> Option<usize> {
        self.atoms.binary_search(a).ok()
    }

    pub(crate) fn full_mask(&self) -> u64 {
        (1u64 << self.atoms.len()) - 1
    }

    pub(crate) fn eval(&self, mask: u64) -> bool {
        self.root.eval(mask)
    }

    /// Classifies the formula with the atoms outside `free` fixed by
    /// `fixed` (only bits outside `free` are read from it).
    pub(crate) fn classify(&self, fixed: u64, free: u64) -> Classification {
        let base = fixed & !free;
        let (mut seen_true, mut seen_false) = (false, false);
        // iterate over all submasks of `free`
        let mut sub = free;
        loop {
            if self.eval(base | sub) {
                seen_true = true;
            } else {
                seen_false = true;
            }
            if seen_true && seen_false {
                return Classification::Contingent;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & free;
        }
        if seen_true {
            Classification::Tautology
        } else {
            Classification::Unsatisfiable
        }
    }

    pub(crate) fn link_type(&self, idx: usize) -> LinkType {
        let bit = 1u64 << idx;
        let (mut attacking, mut supporting) = (true, true);
        for m in 0..=self.full_mask() {
            let before = self.eval(m);
            let after = self.eval(m | bit);
            if !before && after {
                attacking = false;
            }
            if before && !after {
                supporting = false;
            }
        }
        LinkType::from_flags(attacking, supporting)
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, name: &str, items: &[&Formula]) -> fmt::Result {
    write!(f, "{name}(")?;
    for (i, g) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{g}")?;
    }
    f.write_str(")")
}

/// Concrete syntax: `c(v)`, `c(f)`, `a`, `neg(F)`, `and(F,..)`, `or(F,..)`,
/// `imp(F,F)`, `iff(F,F)`.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Atom(a) => write!(f, "{a}"),
            Formula::Top => f.write_str("c(v)"),
            Formula::Bot => f.write_str("c(f)"),
            Formula::Neg(g) => write!(f, "neg({g})"),
            Formula::And(gs) => write_list(f, "and", &gs.iter().collect::<Vec<_>>()),
            Formula::Or(gs) => write_list(f, "or", &gs.iter().collect::<Vec<_>>()),
            Formula::Imp(a, b) => write_list(f, "imp", &[a, b]),
            Formula::Iff(a, b) => write_list(f, "iff", &[a, b]),
        }
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::model::{arg, Domain};

    pub(crate) fn a(n: &str) -> Formula {
        Formula::atom(arg(n))
    }

    pub(crate) fn na(n: &str) -> Formula {
        Formula::neg(a(n))
    }

    fn w(pairs: &[(&str, bool)]) -> BTreeMap<ArgumentId, bool> {
        pairs.iter().map(|(n, b)| (arg(n), *b)).collect()
    }

    fn interp(names: &[&str], truths: &str) -> Interpretation {
        let d = Domain::new(names.iter().map(|n| arg(n))).unwrap();
        let vals: Vec<Value3> = truths
            .chars()
            .map(|c| Value3::from_truth(c).unwrap())
            .collect();
        Interpretation::new(d, vals).unwrap()
    }

    #[test]
    fn eval2_examples() {
        let phi = Formula::or(vec![na("a"), na("b")]);
        assert!(!phi.eval2(&w(&[("a", true), ("b", true)])).unwrap());
        assert!(Formula::Top.eval2(&w(&[])).unwrap());
        let psi = Formula::or(vec![a("b"), na("c")]);
        assert!(psi.eval2(&w(&[("b", false), ("c", false)])).unwrap());
        assert_eq!(
            psi.eval2(&w(&[("b", false)])),
            Err(Error::MissingAtom { atom: arg("c") })
        );
    }

    #[test]
    fn eval2_matches_truth_table_oracle() {
        // b ∨ ¬c written out row by row
        let psi = Formula::or(vec![a("b"), na("c")]);
        let table = [
            (false, false, true),
            (false, true, false),
            (true, false, true),
            (true, true, true),
        ];
        for (b, c, expected) in table {
            assert_eq!(psi.eval2(&w(&[("b", b), ("c", c)])).unwrap(), expected);
        }
    }

    #[test]
    fn partial_valuation_substitutes_only() {
        let phi = Formula::or(vec![na("a"), na("b")]);
        assert_eq!(
            phi.partial_valuation(&interp(&["a", "b"], "tu")),
            Formula::or(vec![Formula::neg(Formula::Top), na("b")])
        );
        assert_eq!(
            na("b").partial_valuation(&interp(&["b"], "f")),
            Formula::neg(Formula::Bot)
        );
        let psi = Formula::or(vec![a("b"), na("c")]);
        assert_eq!(psi.partial_valuation(&interp(&["b", "c"], "uu")), psi);
    }

    #[test]
    fn classify_examples() {
        let phi = Formula::or(vec![Formula::neg(Formula::Top), na("b")]);
        assert_eq!(phi.classify().unwrap(), Classification::Contingent);
        assert_eq!(
            Formula::Bot.classify().unwrap(),
            Classification::Unsatisfiable
        );
        assert_eq!(
            Formula::or(vec![a("a"), na("a")]).classify().unwrap(),
            Classification::Tautology
        );
        let big = Formula::and((0..13).map(|i| a(&format!("x{i}"))).collect());
        assert!(matches!(big.classify(), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn link_type_examples() {
        let phi_c = Formula::or(vec![na("a"), na("b")]);
        assert_eq!(phi_c.link_type(&arg("a")).unwrap(), LinkType::Attacking);
        let phi_b = Formula::or(vec![a("b"), na("c")]);
        assert_eq!(phi_b.link_type(&arg("b")).unwrap(), LinkType::Supporting);
        assert_eq!(phi_b.link_type(&arg("c")).unwrap(), LinkType::Attacking);
        let xnor = Formula::or(vec![
            Formula::and(vec![a("a"), a("b")]),
            Formula::and(vec![na("a"), na("b")]),
        ]);
        assert_eq!(xnor.link_type(&arg("a")).unwrap(), LinkType::Dependent);
        let irrelevant = Formula::or(vec![a("b"), Formula::and(vec![a("a"), na("a")])]);
        assert_eq!(
            irrelevant.link_type(&arg("a")).unwrap(),
            LinkType::Redundant
        );
        assert!(phi_c.link_type(&arg("z")).is_err());
    }

    #[test]
    fn equivalence_examples() {
        assert!(equivalent(&Formula::or(vec![na("a"), na("a")]), &na("a")).unwrap());
        assert!(!equivalent(&Formula::Bot, &na("a")).unwrap());
        let lhs = Formula::and(vec![Formula::or(vec![na("a"), a("b")]), na("b")]);
        let rhs = Formula::and(vec![na("a"), na("b")]);
        assert!(equivalent(&lhs, &rhs).unwrap());
    }

    #[test]
    fn display_uses_concrete_syntax() {
        let phi = Formula::and(vec![
            Formula::or(vec![a("b"), na("c")]),
            Formula::imp(Formula::Top, Formula::iff(a("a"), Formula::Bot)),
        ]);
        assert_eq!(phi.to_string(), "and(or(b,neg(c)),imp(c(v),iff(a,c(f))))");
    }
}
