//! Embedding of SETAFs into ADFs and back, SETADF/SFADF recognition and
//! redundant-link pruning.

use std::collections::{BTreeMap, BTreeSet};

use crate::{
    adf::Adf,
    error::{Error, Result},
    formula::{to_negative_cnf, NegClause, NegCnf},
    model::{ArgumentId, Attack, Domain, Semantics, Setaf},
    setaf_sem,
};

/// An ADF whose conditions are all `⊤` or negative CNFs, kept with its
/// clause sets. The ADF conditions are always the canonical rendering of the
/// clauses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetadfView {
    adf: Adf,
    clauses: Vec<NegCnf>,
}

impl SetadfView {
    /// `clauses[i]` is the clause set of `statements[i]`.
    pub fn new(statements: Domain, clauses: Vec<NegCnf>) -> Result<Self> {
        if clauses.len() != statements.len() {
            return Err(Error::DomainMismatch);
        }
        let adf = Adf::new(
            statements
                .iter()
                .cloned()
                .zip(clauses.iter().map(NegCnf::to_formula)),
        )?;
        Ok(SetadfView { adf, clauses })
    }

    /// Reads an ADF as a SETADF without rewriting any condition.
    pub fn from_adf(adf: &Adf) -> Result<Self> {
        let clauses = adf
            .conditions()
            .map(|(s, phi)| {
                NegCnf::from_formula(phi).ok_or_else(|| Error::NotSetadf {
                    statement: s.clone(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        SetadfView::new(adf.statements().clone(), clauses)
    }

    pub fn adf(&self) -> &Adf {
        &self.adf
    }

    pub fn into_adf(self) -> Adf {
        self.adf
    }

    pub fn statements(&self) -> &Domain {
        self.adf.statements()
    }

    pub fn clauses(&self, s: &ArgumentId) -> Option<&NegCnf> {
        self.statements().index_of(s).map(|i| &self.clauses[i])
    }

    /// `(s, clauses of s)` in statement order.
    pub fn clause_sets(&self) -> impl Iterator<Item = (&ArgumentId, &NegCnf)> + '_ {
        self.statements().iter().zip(&self.clauses)
    }
}

/// `D_F`: one negative clause per attack.
pub fn setaf_to_setadf(f: &Setaf) -> SetadfView {
    let clauses = f
        .arguments()
        .iter()
        .map(|a| {
            NegCnf::new(
                f.attacks()
                    .iter()
                    .filter(|att| &att.target == a)
                    .map(|att| {
                        NegClause::new(att.attackers.iter().cloned())
                            .expect("attacker sets are non-empty")
                    }),
            )
        })
        .collect();
    SetadfView::new(f.arguments().clone(), clauses).expect("attackers are arguments")
}

/// `F_D`: one attack per clause.
pub fn setadf_to_setaf(d: &SetadfView) -> Setaf {
    let attacks: Vec<Attack> = d
        .clause_sets()
        .flat_map(|(s, cnf)| {
            cnf.clauses()
                .iter()
                .map(move |cl| Attack::new(cl.atoms().iter().cloned(), s.clone()))
        })
        .collect();
    Setaf::new(d.statements().iter().cloned(), attacks).expect("clause sets yield a valid SETAF")
}

/// Shorthand for [`SetadfView::from_adf`] followed by [`setadf_to_setaf`].
pub fn adf_to_setaf(adf: &Adf) -> Result<Setaf> {
    SetadfView::from_adf(adf).map(|d| setadf_to_setaf(&d))
}

/// Syntactic test: every condition is `⊤` or a CNF of negative literals.
pub fn is_setadf(adf: &Adf) -> bool {
    adf.conditions()
        .all(|(_, phi)| NegCnf::from_formula(phi).is_some())
}

/// Every link is attacking; redundant links pass as well.
pub fn is_sfadf(adf: &Adf) -> bool {
    adf.is_support_free()
}

/// Result of [`prune_to_sfadf`], with the parents before and after.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pruned {
    pub view: SetadfView,
    pub raw_parents: BTreeMap<ArgumentId, BTreeSet<ArgumentId>>,
    pub pruned_parents: BTreeMap<ArgumentId, BTreeSet<ArgumentId>>,
    /// Links `(b, a)` that disappeared, ordered by target then parent.
    pub removed_links: Vec<(ArgumentId, ArgumentId)>,
}

fn parent_map(d: &SetadfView) -> BTreeMap<ArgumentId, BTreeSet<ArgumentId>> {
    d.clause_sets()
        .map(|(s, c)| (s.clone(), c.atoms()))
        .collect()
}

/// Drops clauses that are supersets of other clauses, which removes every
/// redundant link of a SETADF.
pub fn prune_to_sfadf(d: &SetadfView) -> Pruned {
    let pruned: Vec<NegCnf> = d.clause_sets().map(|(_, c)| c.absorbed()).collect();
    let view = SetadfView::new(d.statements().clone(), pruned).expect("same statements");
    let raw_parents = parent_map(d);
    let pruned_parents = parent_map(&view);
    let removed_links = raw_parents
        .iter()
        .flat_map(|(s, before)| {
            before
                .difference(&pruned_parents[s])
                .map(move |b| (b.clone(), s.clone()))
        })
        .collect();
    Pruned {
        view,
        raw_parents,
        pruned_parents,
        removed_links,
    }
}

/// Rewrites every condition into a negative CNF. Fails when a condition is
/// unsatisfiable or has a non-attacking link.
pub fn normalize(adf: &Adf) -> Result<SetadfView> {
    let clauses = adf
        .conditions()
        .map(|(s, phi)| {
            to_negative_cnf(phi).map_err(|e| match e {
                Error::NotRepresentable(why) => {
                    Error::NotRepresentable(format!("condition of {s}: {why}"))
                }
                Error::Precondition(why) => Error::Precondition(format!("condition of {s}: {why}")),
                other => other,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    SetadfView::new(adf.statements().clone(), clauses)
}

/// Whether the `sem` labellings of `f` are exactly the `sem`
/// interpretations of `D_F` under the label/truth renaming. For `stb` the
/// two-valued models of `D_F` are compared as well.
pub fn verify_correspondence(f: &Setaf, sem: Semantics) -> Result<bool> {
    if sem == Semantics::Mod {
        return Err(Error::UnsupportedSemantics {
            semantics: sem.name().to_string(),
            target: "SETAFs",
        });
    }
    let labs = setaf_sem::enumerate(f, sem)?.to_interpretations();
    let d = setaf_to_setadf(f);
    let same = labs == d.adf().enumerate(sem)?;
    if sem == Semantics::Stb {
        return Ok(same && labs == d.adf().enumerate(Semantics::Mod)?);
    }
    Ok(same)
}
