//! Signature membership for SETAF labelling semantics, witness frameworks
//! for accepted sets, and the test separating support-free ADFs from
//! SETADFs.

use std::{
    collections::{BTreeSet, HashSet},
    fmt,
};

use crate::{
    adf::Adf,
    error::{check_size, Error, Result},
    formula::{to_negative_cnf, Classification, NegClause, NegCnf},
    model::{
        ArgumentId, Attack, Domain, Interpretation, InterpretationSet, Labelling, LabellingSet,
        Semantics, Setaf, Value3,
    },
    setaf_sem,
    translation::{setaf_to_setadf, SetadfView},
};

/// A condition of a signature characterization: its number in the
/// characterization (when it has one) and a short slug.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ConditionId {
    pub number: Option<u8>,
    pub slug: &'static str,
}

impl ConditionId {
    const fn numbered(number: u8, slug: &'static str) -> Self {
        ConditionId {
            number: Some(number),
            slug,
        }
    }

    const fn named(slug: &'static str) -> Self {
        ConditionId { number: None, slug }
    }

    pub const EMPTY_SET: ConditionId = ConditionId::named("empty-set");
    pub const EMPTY_DOMAIN: ConditionId = ConditionId::named("empty-domain");
    pub const SINGLETON: ConditionId = ConditionId::named("singleton");
    pub const OUT_IMPLIES_IN: &'static str = "out-implies-in";
}

impl fmt::Display for ConditionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.number {
            Some(n) => write!(f, "{n}/{}", self.slug),
            None => f.write_str(self.slug),
        }
    }
}

/// One failed condition with the labellings that witness the failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub condition: ConditionId,
    pub labellings: Vec<Labelling>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "condition {}", self.condition)?;
        for (i, l) in self.labellings.iter().enumerate() {
            f.write_str(if i == 0 { " on " } else { " and " })?;
            write!(f, "({l})")?;
        }
        Ok(())
    }
}

/// Outcome of a signature query.
///
/// `violations` lists every failed condition in the order of the
/// characterization, one entry per condition; the first one is the
/// reported reason.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureVerdict {
    pub semantics: Semantics,
    pub accepted: bool,
    pub violations: Vec<Violation>,
    pub witness: Option<Setaf>,
    /// Set for `adm`, whose conditions are only necessary.
    pub necessary_only: bool,
}

impl SignatureVerdict {
    fn from_violations(semantics: Semantics, violations: Vec<Violation>) -> Self {
        SignatureVerdict {
            semantics,
            accepted: violations.is_empty(),
            violations,
            witness: None,
            necessary_only: semantics == Semantics::Adm,
        }
    }

    /// The first violated condition.
    pub fn violated(&self) -> Option<&Violation> {
        self.violations.first()
    }

    pub fn violates(&self, slug: &str) -> bool {
        self.violations.iter().any(|v| v.condition.slug == slug)
    }
}

impl fmt::Display for SignatureVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.violated() {
            None if self.necessary_only => write!(f, "{}: not refuted", self.semantics),
            None => write!(f, "{}: accepted", self.semantics),
            Some(v) => write!(f, "{}: rejected, {v}", self.semantics),
        }
    }
}

// Labellings as raw value slices over the shared domain.
type Vals = Box<[Value3]>;

struct Members<'a> {
    domain: &'a Domain,
    list: Vec<&'a [Value3]>,
    set: HashSet<&'a [Value3]>,
}

impl<'a> Members<'a> {
    fn new(l: &'a LabellingSet) -> Self {
        let list: Vec<&[Value3]> = l.iter().map(|m| m.values()).collect();
        Members {
            domain: l.arguments(),
            set: list.iter().copied().collect(),
            list,
        }
    }

    fn n(&self) -> usize {
        self.domain.len()
    }

    fn contains(&self, candidate: Option<Vals>) -> bool {
        candidate.is_some_and(|c| self.set.contains(&*c))
    }

    fn labelling(&self, vals: &[Value3]) -> Labelling {
        Labelling::from_parts(self.domain.clone(), vals.into())
    }

    fn violation(&self, condition: ConditionId, culprits: &[&[Value3]]) -> Violation {
        Violation {
            condition,
            labellings: culprits.iter().map(|v| self.labelling(v)).collect(),
        }
    }

    fn pairs(&self) -> impl Iterator<Item = (&'a [Value3], &'a [Value3])> + '_ {
        self.list
            .iter()
            .flat_map(move |&x| self.list.iter().map(move |&y| (x, y)))
    }
}

fn positions(vals: &[Value3], value: Value3) -> Vec<usize> {
    (0..vals.len()).filter(|&i| vals[i] == value).collect()
}

fn is_subset(x: &[Value3], y: &[Value3], value: Value3) -> bool {
    x.iter().zip(y).all(|(a, b)| *a != value || *b == value)
}

/// Every subset of `items` as a membership mask over `0..n`.
fn subsets(items: &[usize], n: usize) -> impl Iterator<Item = Vec<bool>> + '_ {
    (0u64..1 << items.len()).map(move |bits| {
        let mut mask = vec![false; n];
        for (k, &i) in items.iter().enumerate() {
            mask[i] = bits >> k & 1 == 1;
        }
        mask
    })
}

/// Assembles a labelling from three membership tests, or `None` when they
/// do not partition the domain.
fn triple(
    n: usize,
    is_in: impl Fn(usize) -> bool,
    is_out: impl Fn(usize) -> bool,
    is_undec: impl Fn(usize) -> bool,
) -> Option<Vals> {
    (0..n)
        .map(|i| match (is_in(i), is_out(i), is_undec(i)) {
            (true, false, false) => Some(Value3::In),
            (false, true, false) => Some(Value3::Out),
            (false, false, true) => Some(Value3::Undec),
            _ => None,
        })
        .collect()
}

fn no_undec(m: &Members) -> Option<Violation> {
    m.list
        .iter()
        .find(|v| v.contains(&Value3::Undec))
        .map(|v| m.violation(ConditionId::numbered(1, "no-undec"), &[v]))
}

fn out_implies_in(m: &Members, number: Option<u8>) -> Option<Violation> {
    let id = ConditionId {
        number,
        slug: ConditionId::OUT_IMPLIES_IN,
    };
    m.list
        .iter()
        .find(|v| v.contains(&Value3::Out) && !v.contains(&Value3::In))
        .map(|v| m.violation(id, &[v]))
}

/// Distinct members must each have an argument in that the other has out.
fn in_out_witness(m: &Members, number: u8) -> Option<Violation> {
    m.pairs()
        .find(|(x, y)| {
            x != y
                && !x
                    .iter()
                    .zip(y.iter())
                    .any(|(a, b)| *a == Value3::In && *b == Value3::Out)
        })
        .map(|(x, y)| m.violation(ConditionId::numbered(number, "in-out-witness"), &[x, y]))
}

/// No member may have in-labelled all of its own in-part plus one of the
/// arguments another member labels out.
fn out_not_accepted(m: &Members, number: u8) -> Option<Violation> {
    m.pairs()
        .find(|(x, y)| {
            is_subset(x, y, Value3::In)
                && x.iter()
                    .zip(y.iter())
                    .any(|(a, b)| *a == Value3::Out && *b == Value3::In)
        })
        .map(|(x, y)| m.violation(ConditionId::numbered(number, "out-not-accepted"), &[x, y]))
}

fn stb_conditions(m: &Members) -> Vec<Violation> {
    let mut out = Vec::new();
    if m.list.is_empty() && m.n() == 0 {
        out.push(m.violation(ConditionId::EMPTY_DOMAIN, &[]));
    }
    out.extend(no_undec(m));
    out.extend(out_implies_in(m, Some(2)));
    out.extend(in_out_witness(m, 3));
    out
}

fn prf_conditions(m: &Members) -> Vec<Violation> {
    let mut out = Vec::new();
    if m.list.is_empty() {
        out.push(m.violation(ConditionId::EMPTY_SET, &[]));
    }
    out.extend(out_implies_in(m, Some(2)));
    out.extend(in_out_witness(m, 3));
    out
}

fn grd_conditions(m: &Members) -> Vec<Violation> {
    let mut out = Vec::new();
    if m.list.len() != 1 {
        let all: Vec<&[Value3]> = m.list.clone();
        out.push(m.violation(ConditionId::SINGLETON, &all));
    }
    out.extend(out_implies_in(m, None));
    out
}

fn cf_conditions(m: &Members) -> Result<Vec<Violation>> {
    check_size("argument set", m.n())?;
    let n = m.n();
    let mut out = Vec::new();
    if m.list.is_empty() {
        out.push(m.violation(ConditionId::EMPTY_SET, &[]));
    }
    out.extend(out_implies_in(m, Some(2)));

    // 3: every subset of an in-part, alone, is a member
    out.extend(
        m.list
            .iter()
            .find(|x| {
                subsets(&positions(x, Value3::In), n)
                    .any(|c| !m.contains(triple(n, |i| c[i], |_| false, |i| !c[i])))
            })
            .map(|x| m.violation(ConditionId::numbered(3, "in-subsets"), &[x])),
    );

    // 4: any part of the out-part may be turned undec
    out.extend(
        m.list
            .iter()
            .find(|x| {
                subsets(&positions(x, Value3::Out), n).any(|c| {
                    !m.contains(triple(
                        n,
                        |i| x[i] == Value3::In,
                        |i| x[i] == Value3::Out && !c[i],
                        |i| x[i] == Value3::Undec || c[i],
                    ))
                })
            })
            .map(|x| m.violation(ConditionId::numbered(4, "out-subsets"), &[x])),
    );

    // 5: a larger in-part inherits the out-part of a smaller one
    out.extend(
        m.pairs()
            .find(|(x, y)| {
                is_subset(x, y, Value3::In)
                    && !m.contains(triple(
                        n,
                        |i| y[i] == Value3::In,
                        |i| x[i] == Value3::Out || y[i] == Value3::Out,
                        |i| x[i] == Value3::Undec && y[i] == Value3::Undec,
                    ))
            })
            .map(|(x, y)| m.violation(ConditionId::numbered(5, "out-inheritance"), &[x, y])),
    );

    out.extend(out_not_accepted(m, 6));
    Ok(out)
}

fn adm_conditions(m: &Members) -> Result<Vec<Violation>> {
    check_size("argument set", m.n())?;
    let n = m.n();
    let mut out = Vec::new();
    out.extend(out_implies_in(m, Some(2)));
    out.extend(out_not_accepted(m, 3));

    // 4: members join unless the first refutes the second
    out.extend(
        m.pairs()
            .find(|(x, y)| {
                let refutes = x
                    .iter()
                    .zip(y.iter())
                    .any(|(a, b)| *a == Value3::In && *b == Value3::Out);
                !refutes
                    && !m.contains(triple(
                        n,
                        |i| x[i] == Value3::In || y[i] == Value3::In,
                        |i| x[i] == Value3::Out || y[i] == Value3::Out,
                        |i| x[i] == Value3::Undec && y[i] == Value3::Undec,
                    ))
            })
            .map(|(x, y)| m.violation(ConditionId::numbered(4, "join"), &[x, y])),
    );

    // 5: in-arguments defended by a smaller out-part can be added
    out.extend(
        m.pairs()
            .find(|(x, y)| {
                if !is_subset(x, y, Value3::Out) {
                    return false;
                }
                let blocked: BTreeSet<usize> = m
                    .list
                    .iter()
                    .filter(|z| positions(z, Value3::In) == positions(y, Value3::In))
                    .flat_map(|z| positions(z, Value3::Out))
                    .collect();
                let addable: Vec<usize> = positions(x, Value3::In)
                    .into_iter()
                    .filter(|i| !blocked.contains(i))
                    .collect();
                let extendable = subsets(&addable, n).any(|c| {
                    !m.contains(triple(
                        n,
                        |i| y[i] == Value3::In || c[i],
                        |i| y[i] == Value3::Out,
                        |i| y[i] == Value3::Undec && !c[i],
                    ))
                });
                extendable
            })
            .map(|(x, y)| m.violation(ConditionId::numbered(5, "in-extension"), &[x, y])),
    );

    // 6: a larger in-part may take over any part of a smaller out-part
    out.extend(
        m.pairs()
            .find(|(x, y)| {
                is_subset(x, y, Value3::In)
                    && subsets(&positions(x, Value3::Out), n).any(|c| {
                        !m.contains(triple(
                            n,
                            |i| y[i] == Value3::In,
                            |i| y[i] == Value3::Out || c[i],
                            |i| y[i] == Value3::Undec && !c[i],
                        ))
                    })
            })
            .map(|(x, y)| m.violation(ConditionId::numbered(6, "out-extension"), &[x, y])),
    );

    // 7: out-parts can shrink to any member's out-part below them
    out.extend(
        m.pairs()
            .find(|(x, y)| {
                is_subset(x, y, Value3::In)
                    && is_subset(y, x, Value3::Out)
                    && !m.contains(triple(
                        n,
                        |i| x[i] == Value3::In,
                        |i| y[i] == Value3::Out,
                        |i| x[i] != Value3::In && y[i] != Value3::Out,
                    ))
            })
            .map(|(x, y)| m.violation(ConditionId::numbered(7, "out-restriction"), &[x, y])),
    );

    if !m.contains(Some(vec![Value3::Undec; n].into())) {
        out.push(m.violation(ConditionId::numbered(8, "all-undec"), &[]));
    }
    Ok(out)
}

/// Decides whether `l` is the `sem` labelling set of some SETAF, for
/// `sem` in `{stb, prf, cf, grd}`. `adm` is accepted too and answered by
/// [`check_adm_necessary`].
pub fn check_signature(l: &LabellingSet, sem: Semantics) -> Result<SignatureVerdict> {
    let m = Members::new(l);
    let violations = match sem {
        Semantics::Stb => stb_conditions(&m),
        Semantics::Prf => prf_conditions(&m),
        Semantics::Grd => grd_conditions(&m),
        Semantics::Cf => cf_conditions(&m)?,
        Semantics::Adm => adm_conditions(&m)?,
        Semantics::Com | Semantics::Mod => {
            return Err(Error::UnsupportedSemantics {
                semantics: sem.name().to_string(),
                target: "signature checks",
            })
        }
    };
    Ok(SignatureVerdict::from_violations(sem, violations))
}

/// Necessary conditions for `l` to be the admissible labelling set of a
/// SETAF. Acceptance only means that no condition refutes `l`.
pub fn check_adm_necessary(l: &LabellingSet) -> Result<SignatureVerdict> {
    check_signature(l, Semantics::Adm)
}

/// Builds a SETAF whose `sem` labellings are exactly `l`. With `verify`
/// the result is re-enumerated and compared.
pub fn realize(l: &LabellingSet, sem: Semantics, verify: bool) -> Result<Setaf> {
    if sem == Semantics::Adm {
        return Err(Error::UnsupportedSemantics {
            semantics: sem.name().to_string(),
            target: "realization",
        });
    }
    let verdict = check_signature(l, sem)?;
    if !verdict.accepted {
        return Err(Error::Rejected(Box::new(verdict)));
    }
    let args = l.arguments();
    let mut attacks: BTreeSet<Attack> = BTreeSet::new();
    for lab in l {
        let ins = lab.part(Value3::In);
        for (a, v) in lab.iter() {
            match v {
                Value3::Out => {
                    attacks.insert(Attack::new(ins.iter().cloned(), a.clone()));
                }
                Value3::Undec if matches!(sem, Semantics::Prf | Semantics::Grd) => {
                    let mut with_self = ins.clone();
                    with_self.insert(a.clone());
                    attacks.insert(Attack::new(with_self, a.clone()));
                }
                _ => {}
            }
        }
    }
    if sem == Semantics::Stb && l.is_empty() {
        // no stable labelling at all: every argument attacks itself
        attacks.extend(args.iter().map(|a| Attack::new([a.clone()], a.clone())));
    }
    if sem == Semantics::Cf {
        check_size("argument set", args.len())?;
        let in_parts: HashSet<BTreeSet<ArgumentId>> =
            l.iter().map(|lab| lab.part(Value3::In)).collect();
        for b in subsets_by_size(args) {
            if !in_parts.contains(&b) {
                for x in &b {
                    attacks.insert(Attack::new(b.iter().cloned(), x.clone()));
                }
            }
        }
    }
    let f = Setaf::new(args.iter().cloned(), attacks)?;
    if verify {
        let got = setaf_sem::enumerate(&f, sem)?;
        if got != *l {
            return Err(Error::Internal(format!(
                "realized SETAF has {} {sem} labellings instead of {}",
                got.len(),
                l.len()
            )));
        }
    }
    Ok(f)
}

/// Non-empty subsets of `args`, by size and then lexicographically.
fn subsets_by_size(args: &[ArgumentId]) -> Vec<BTreeSet<ArgumentId>> {
    let mut all: Vec<Vec<&ArgumentId>> = (1u64..1 << args.len())
        .map(|bits| {
            (0..args.len())
                .filter(|i| bits >> i & 1 == 1)
                .map(|i| &args[i])
                .collect()
        })
        .collect();
    all.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    all.into_iter()
        .map(|s| s.into_iter().cloned().collect())
        .collect()
}

/// How a support-free ADF was turned into a SETADF.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConversionRoute {
    /// Unsatisfiable conditions replaced by collective self-attacks, the
    /// rest rewritten to negative CNF.
    ReplaceBottom,
    /// Through a SETAF realizing the interpretation set.
    Realization,
}

/// Outcome of [`delta_classify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaVerdict {
    pub semantics: Semantics,
    /// Some member has no `t` and at least one `f`, so no SETADF has the
    /// same interpretations.
    pub in_delta: bool,
    pub witness: Option<Interpretation>,
    pub interpretations: InterpretationSet,
    pub converted: Option<SetadfView>,
    pub route: Option<ConversionRoute>,
}

fn first_true(v: &Interpretation) -> Option<ArgumentId> {
    v.iter()
        .find(|(_, x)| *x == Value3::T)
        .map(|(a, _)| a.clone())
}

fn replace_bottom(d: &Adf, members: &InterpretationSet) -> Result<SetadfView> {
    let blockers: BTreeSet<ArgumentId> = members.iter().filter_map(first_true).collect();
    let clauses = d
        .conditions()
        .map(|(s, phi)| match phi.classify()? {
            Classification::Unsatisfiable => {
                let mut clauses = vec![NegClause::new([s.clone()])?];
                for b in &blockers {
                    clauses.push(NegClause::new([b.clone()])?);
                }
                Ok(NegCnf::new(clauses))
            }
            _ => to_negative_cnf(phi),
        })
        .collect::<Result<Vec<_>>>()?;
    SetadfView::new(d.statements().clone(), clauses)
}

/// Decides whether the `sem` interpretations of a support-free ADF lie
/// outside the reach of SETADFs, and otherwise produces an equivalent
/// SETADF (not guaranteed for `com`).
pub fn delta_classify(d: &Adf, sem: Semantics) -> Result<DeltaVerdict> {
    if !d.is_support_free() {
        return Err(Error::Precondition(
            "the ADF has non-attacking links".into(),
        ));
    }
    let members = d.enumerate(sem)?;
    let witness = members
        .iter()
        .find(|v| !v.has_value(Value3::T) && v.has_value(Value3::F))
        .cloned();
    let mut verdict = DeltaVerdict {
        semantics: sem,
        in_delta: witness.is_some(),
        witness,
        interpretations: members,
        converted: None,
        route: None,
    };
    if verdict.in_delta {
        return Ok(verdict);
    }
    let members = &verdict.interpretations;
    let direct = replace_bottom(d, members)?;
    if direct.adf().enumerate(sem)? == *members {
        verdict.converted = Some(direct);
        verdict.route = Some(ConversionRoute::ReplaceBottom);
        return Ok(verdict);
    }
    let target = match sem {
        Semantics::Mod => Semantics::Stb,
        Semantics::Stb | Semantics::Prf | Semantics::Grd => sem,
        Semantics::Com => return Ok(verdict),
        Semantics::Cf | Semantics::Adm => {
            return Err(Error::Internal(format!(
                "negative CNF rewriting changed the {sem} interpretations"
            )))
        }
    };
    let labs = members.to_labellings();
    let f = realize(&labs, target, true)
        .map_err(|e| Error::Internal(format!("{sem} set outside Δ but not realizable: {e}")))?;
    let view = setaf_to_setadf(&f);
    if view.adf().enumerate(sem)? != *members {
        return Err(Error::Internal(format!(
            "realized SETADF does not reproduce the {sem} interpretations"
        )));
    }
    verdict.converted = Some(view);
    verdict.route = Some(ConversionRoute::Realization);
    Ok(verdict)
}

/// For an ADF whose `sem` set is in Δ: the set is a single interpretation,
/// all-f for `stb` and `mod`.
pub fn delta_shape_check(d: &Adf, sem: Semantics) -> Result<bool> {
    if !matches!(sem, Semantics::Stb | Semantics::Mod | Semantics::Prf) {
        return Err(Error::UnsupportedSemantics {
            semantics: sem.name().to_string(),
            target: "the Δ shape check",
        });
    }
    let verdict = delta_classify(d, sem)?;
    if !verdict.in_delta {
        return Err(Error::Precondition(format!("the {sem} set is not in Δ")));
    }
    let members = &verdict.interpretations;
    Ok(members.len() == 1
        && (sem == Semantics::Prf
            || members
                .iter()
                .all(|v| v.values().iter().all(|x| *x == Value3::F))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{tests::na, Formula};
    use crate::model::arg;

    fn dom(names: &[&str]) -> Domain {
        Domain::new(names.iter().map(|n| arg(n))).unwrap()
    }

    fn labs(d: &Domain, members: &[&str]) -> LabellingSet {
        // t/f/u per argument, read through the label bijection
        LabellingSet::new(
            d.clone(),
            members.iter().map(|m| {
                let values: Vec<Value3> =
                    m.chars().map(|c| Value3::from_truth(c).unwrap()).collect();
                Labelling::new(d.clone(), values).unwrap()
            }),
        )
        .unwrap()
    }

    fn joint_attacks() -> Setaf {
        Setaf::new(
            [arg("a"), arg("b"), arg("c")],
            [
                Attack::new([arg("a"), arg("b")], arg("c")),
                Attack::new([arg("a"), arg("c")], arg("b")),
            ],
        )
        .unwrap()
    }

    #[test]
    fn joint_attacks_sets_are_accepted() {
        let f = joint_attacks();
        for sem in [
            Semantics::Stb,
            Semantics::Prf,
            Semantics::Cf,
            Semantics::Grd,
        ] {
            let l = setaf_sem::enumerate(&f, sem).unwrap();
            assert!(check_signature(&l, sem).unwrap().accepted, "{sem}");
            let g = realize(&l, sem, true).unwrap();
            assert_eq!(setaf_sem::enumerate(&g, sem).unwrap(), l);
        }
        let adm = setaf_sem::enumerate(&f, Semantics::Adm).unwrap();
        let verdict = check_adm_necessary(&adm).unwrap();
        assert!(verdict.accepted && verdict.necessary_only);
    }

    #[test]
    fn out_without_in_is_rejected() {
        let d = dom(&["a", "b"]);
        let l = labs(&d, &["uf"]);
        for sem in [Semantics::Grd, Semantics::Prf, Semantics::Cf] {
            let v = check_signature(&l, sem).unwrap();
            assert!(!v.accepted);
            assert_eq!(
                v.violated().unwrap().condition.slug,
                "out-implies-in",
                "{sem}"
            );
        }
        let stb = check_signature(&l, Semantics::Stb).unwrap();
        assert_eq!(
            stb.violated().unwrap().condition,
            ConditionId::numbered(1, "no-undec")
        );
        assert!(stb.violates("out-implies-in"));
        assert!(matches!(
            realize(&l, Semantics::Grd, false),
            Err(Error::Rejected(_))
        ));
    }

    #[test]
    fn empty_sets() {
        let d = dom(&["a", "b"]);
        let empty = LabellingSet::empty(d.clone());
        assert!(check_signature(&empty, Semantics::Stb).unwrap().accepted);
        let f = realize(&empty, Semantics::Stb, true).unwrap();
        assert_eq!(f.attacks().len(), 2);
        for sem in [Semantics::Prf, Semantics::Cf] {
            let v = check_signature(&empty, sem).unwrap();
            assert_eq!(v.violated().unwrap().condition, ConditionId::EMPTY_SET);
        }
        let v = check_signature(&empty, Semantics::Grd).unwrap();
        assert_eq!(v.violated().unwrap().condition, ConditionId::SINGLETON);
        let nothing = LabellingSet::empty(Domain::empty());
        assert!(!check_signature(&nothing, Semantics::Stb).unwrap().accepted);
    }

    #[test]
    fn singleton_cf() {
        let d = dom(&["a"]);
        let l = labs(&d, &["u", "t"]);
        assert!(check_signature(&l, Semantics::Cf).unwrap().accepted);
        let f = realize(&l, Semantics::Cf, true).unwrap();
        assert!(f.attacks().is_empty());
    }

    #[test]
    fn realize_examples() {
        let d = dom(&["a", "b"]);
        let f = realize(&labs(&d, &["tf", "ft"]), Semantics::Stb, true).unwrap();
        let expected: BTreeSet<Attack> = [
            Attack::new([arg("a")], arg("b")),
            Attack::new([arg("b")], arg("a")),
        ]
        .into();
        assert_eq!(f.attacks(), &expected);

        let f = realize(&labs(&d, &["uu"]), Semantics::Grd, true).unwrap();
        let expected: BTreeSet<Attack> = [
            Attack::new([arg("a")], arg("a")),
            Attack::new([arg("b")], arg("b")),
        ]
        .into();
        assert_eq!(f.attacks(), &expected);
    }

    #[test]
    fn adm_counterexample_is_refuted() {
        let d = dom(&["a", "b"]);
        let l = labs(&d, &["uu", "uf", "tf"]);
        let v = check_adm_necessary(&l).unwrap();
        let first = v.violated().unwrap();
        assert_eq!(first.condition, ConditionId::numbered(2, "out-implies-in"));
        assert_eq!(
            first.labellings,
            labs(&d, &["uf"]).iter().cloned().collect::<Vec<_>>()
        );
        // the set is nonetheless admissible for a support-free ADF
        let witness = Adf::new([
            (arg("a"), Formula::or(vec![na("a"), na("b")])),
            (arg("b"), Formula::Bot),
        ])
        .unwrap();
        assert_eq!(
            witness.enumerate(Semantics::Adm).unwrap(),
            l.to_interpretations()
        );
        let missing = labs(&d, &["tf"]);
        assert_eq!(
            check_adm_necessary(&missing)
                .unwrap()
                .violated()
                .unwrap()
                .condition,
            ConditionId::numbered(8, "all-undec")
        );
    }

    fn bottom_and_mutual_attack() -> Adf {
        Adf::new([
            (arg("a"), Formula::Bot),
            (arg("b"), na("c")),
            (arg("c"), na("b")),
        ])
        .unwrap()
    }

    #[test]
    fn delta_on_bottom_and_mutual_attack() {
        let d = bottom_and_mutual_attack();
        let com = delta_classify(&d, Semantics::Com).unwrap();
        assert!(com.in_delta);
        assert_eq!(com.witness.unwrap().to_string(), "{a:f,b:u,c:u}");

        let prf = delta_classify(&d, Semantics::Prf).unwrap();
        assert!(!prf.in_delta);
        assert_eq!(prf.route, Some(ConversionRoute::ReplaceBottom));
        let converted = prf.converted.unwrap();
        assert_eq!(
            converted.adf().condition(&arg("a")),
            Some(&Formula::and(vec![na("a"), na("b"), na("c")]))
        );
        assert_eq!(
            converted.adf().enumerate(Semantics::Prf).unwrap(),
            d.enumerate(Semantics::Prf).unwrap()
        );
    }

    #[test]
    fn delta_with_forced_false() {
        let both = Adf::new([(arg("a"), Formula::Bot), (arg("b"), Formula::Bot)]).unwrap();
        let v = delta_classify(&both, Semantics::Stb).unwrap();
        assert!(v.in_delta);
        assert_eq!(v.witness.unwrap().to_string(), "{a:f,b:f}");
        assert!(delta_shape_check(&both, Semantics::Mod).unwrap());

        let one = Adf::new([(arg("a"), Formula::Bot), (arg("b"), na("b"))]).unwrap();
        assert!(delta_shape_check(&one, Semantics::Prf).unwrap());
        assert_eq!(
            delta_classify(&one, Semantics::Prf)
                .unwrap()
                .interpretations
                .len(),
            1
        );

        let single = Adf::new([(arg("a"), Formula::Bot)]).unwrap();
        for sem in Semantics::ADF {
            assert!(delta_classify(&single, sem).unwrap().in_delta, "{sem}");
        }
        assert!(delta_shape_check(&single, Semantics::Stb).unwrap());
        assert!(matches!(
            delta_shape_check(&bottom_and_mutual_attack(), Semantics::Prf),
            Err(Error::Precondition(_))
        ));
    }
}
