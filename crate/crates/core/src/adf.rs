//! Abstract dialectical frameworks, the characteristic operator and the
//! ADF semantics including two-valued and stable models.

use std::fmt;

use crate::{
    error::{check_size, Error, Result},
    formula::{Classification, Compiled, Formula, LinkType},
    model::{
        filter_candidates, ArgumentId, Domain, Interpretation, InterpretationSet, Semantics, Value3,
    },
};

#[derive(Clone)]
struct Condition {
    formula: Formula,
    compiled: Compiled,
    // statement index of each compiled atom
    parents: Vec<usize>,
}

/// An ADF `(S, L, C)`; links are implicit in the conditions, so
/// `par(s) = atoms(φ_s)`.
#[derive(Clone)]
pub struct Adf {
    statements: Domain,
    conditions: Vec<Condition>,
}

impl Adf {
    /// Every statement needs exactly one condition and every atom must be a
    /// statement.
    pub fn new(conditions: impl IntoIterator<Item = (ArgumentId, Formula)>) -> Result<Self> {
        let mut pairs: Vec<(ArgumentId, Formula)> = conditions.into_iter().collect();
        pairs.sort_by(|x, y| x.0.cmp(&y.0));
        let statements = Domain::new(pairs.iter().map(|(s, _)| s.clone()))?;
        let conditions = pairs
            .into_iter()
            .map(|(_, formula)| {
                let compiled = Compiled::new(&formula)?;
                let parents = compiled
                    .atoms()
                    .iter()
                    .map(|p| {
                        statements
                            .index_of(p)
                            .ok_or_else(|| Error::UnknownArgument(p.clone()))
                    })
                    .collect::<Result<_>>()?;
                Ok(Condition {
                    formula,
                    compiled,
                    parents,
                })
            })
            .collect::<Result<_>>()?;
        Ok(Adf {
            statements,
            conditions,
        })
    }

    pub fn statements(&self) -> &Domain {
        &self.statements
    }

    pub fn condition(&self, s: &ArgumentId) -> Option<&Formula> {
        self.statements
            .index_of(s)
            .map(|i| &self.conditions[i].formula)
    }

    /// `(s, φ_s)` in statement order.
    pub fn conditions(&self) -> impl Iterator<Item = (&ArgumentId, &Formula)> + '_ {
        self.statements
            .iter()
            .zip(self.conditions.iter().map(|c| &c.formula))
    }

    pub fn parents(&self, s: &ArgumentId) -> Option<&[ArgumentId]> {
        self.statements
            .index_of(s)
            .map(|i| self.conditions[i].compiled.atoms())
    }

    /// Type of the link `(b, a)`.
    pub fn link_type(&self, b: &ArgumentId, a: &ArgumentId) -> Result<LinkType> {
        let not_a_link = || Error::NotALink {
            from: b.clone(),
            to: a.clone(),
        };
        let i = self.statements.index_of(a).ok_or_else(not_a_link)?;
        let c = &self.conditions[i].compiled;
        let idx = c.atom_index(b).ok_or_else(not_a_link)?;
        Ok(c.link_type(idx))
    }

    /// All links `(b, a, type)`, ordered by target and then by parent.
    pub fn links(&self) -> Vec<(ArgumentId, ArgumentId, LinkType)> {
        self.statements
            .iter()
            .zip(&self.conditions)
            .flat_map(|(a, c)| {
                c.compiled
                    .atoms()
                    .iter()
                    .enumerate()
                    .map(move |(idx, b)| (b.clone(), a.clone(), c.compiled.link_type(idx)))
            })
            .collect()
    }

    /// Whether every link is attacking (redundant links included).
    pub fn is_support_free(&self) -> bool {
        self.links().iter().all(|(_, _, t)| t.is_attacking())
    }

    fn check_domain(&self, v: &Interpretation) -> Result<()> {
        if v.domain() != &self.statements {
            return Err(Error::DomainMismatch);
        }
        Ok(())
    }

    fn classify_at(&self, s: usize, vals: &[Value3]) -> Classification {
        let c = &self.conditions[s];
        let (mut fixed, mut free) = (0u64, 0u64);
        for (bit, &p) in c.parents.iter().enumerate() {
            match vals[p] {
                Value3::In => fixed |= 1 << bit,
                Value3::Out => {}
                Value3::Undec => free |= 1 << bit,
            }
        }
        c.compiled.classify(fixed, free)
    }

    fn gamma_values(&self, vals: &[Value3]) -> Box<[Value3]> {
        (0..vals.len())
            .map(|s| match self.classify_at(s, vals) {
                Classification::Tautology => Value3::T,
                Classification::Unsatisfiable => Value3::F,
                Classification::Contingent => Value3::U,
            })
            .collect()
    }

    /// The characteristic operator `Γ_D`.
    pub fn gamma(&self, v: &Interpretation) -> Result<Interpretation> {
        self.check_domain(v)?;
        Ok(Interpretation::from_parts(
            self.statements.clone(),
            self.gamma_values(v.values()),
        ))
    }

    /// Least fixpoint of `Γ_D` by iteration from all-u, with the number of
    /// strictly increasing steps taken.
    pub fn grounded_with_steps(&self) -> Result<(Interpretation, usize)> {
        let mut current: Box<[Value3]> = vec![Value3::U; self.statements.len()].into();
        let mut steps = 0;
        loop {
            let next = self.gamma_values(&current);
            if next == current {
                break;
            }
            current = next;
            steps += 1;
            if steps > self.statements.len() {
                return Err(Error::Internal(
                    "grounded iteration did not converge".into(),
                ));
            }
        }
        Ok((
            Interpretation::from_parts(self.statements.clone(), current),
            steps,
        ))
    }

    pub fn grounded(&self) -> Result<Interpretation> {
        self.grounded_with_steps().map(|(g, _)| g)
    }

    fn is_cf(&self, vals: &[Value3]) -> bool {
        (0..vals.len()).all(|s| match vals[s] {
            Value3::In => self.classify_at(s, vals) != Classification::Unsatisfiable,
            Value3::Out => self.classify_at(s, vals) == Classification::Unsatisfiable,
            Value3::Undec => true,
        })
    }

    fn is_adm(&self, vals: &[Value3]) -> bool {
        let g = self.gamma_values(vals);
        vals.iter().zip(g.iter()).all(|(v, w)| v.info_le(*w))
    }

    fn is_com(&self, vals: &[Value3]) -> bool {
        *self.gamma_values(vals) == *vals
    }

    fn is_model(&self, vals: &[Value3]) -> bool {
        !vals.contains(&Value3::U)
            && self.conditions.iter().zip(vals).all(|(c, &v)| {
                let mask = c
                    .parents
                    .iter()
                    .enumerate()
                    .filter(|(_, &p)| vals[p] == Value3::T)
                    .fold(0u64, |m, (bit, _)| m | 1 << bit);
                Value3::from_bool(c.compiled.eval(mask)) == v
            })
    }

    fn is_stable(&self, v: &Interpretation) -> Result<bool> {
        if !self.is_model(v.values()) {
            return Ok(false);
        }
        let reduct = self.reduct(v)?;
        Ok(reduct.grounded.true_set() == v.true_set())
    }

    /// Whether some admissible interpretation lies strictly above `vals`.
    fn has_admissible_refinement(&self, vals: &[Value3]) -> bool {
        let open: Vec<usize> = (0..vals.len()).filter(|&i| vals[i] == Value3::U).collect();
        let refinements = filter_candidates(open.len(), &Value3::ALL, |fill| {
            if fill.iter().all(|x| *x == Value3::U) {
                return false;
            }
            let mut w = vals.to_vec();
            for (&i, &x) in open.iter().zip(fill) {
                w[i] = x;
            }
            self.is_adm(&w)
        });
        !refinements.is_empty()
    }

    /// Decides whether `v` is a `sem` interpretation of this ADF.
    pub fn check_interpretation(&self, v: &Interpretation, sem: Semantics) -> Result<bool> {
        self.check_domain(v)?;
        let vals = v.values();
        match sem {
            Semantics::Cf => Ok(self.is_cf(vals)),
            Semantics::Adm => Ok(self.is_adm(vals)),
            Semantics::Com => Ok(self.is_com(vals)),
            Semantics::Grd => Ok(self.grounded()? == *v),
            Semantics::Prf => {
                check_size("statement set", vals.len())?;
                Ok(self.is_adm(vals) && !self.has_admissible_refinement(vals))
            }
            Semantics::Mod => Ok(self.is_model(vals)),
            Semantics::Stb => self.is_stable(v),
        }
    }

    /// All `sem` interpretations; `mod` and `stb` only scan the two-valued
    /// candidates.
    pub fn enumerate(&self, sem: Semantics) -> Result<InterpretationSet> {
        let n = self.statements.len();
        check_size("statement set", n)?;
        let two = [Value3::F, Value3::T];
        let members: Vec<Box<[Value3]>> = match sem {
            Semantics::Cf => filter_candidates(n, &Value3::ALL, |v| self.is_cf(v)),
            Semantics::Adm => filter_candidates(n, &Value3::ALL, |v| self.is_adm(v)),
            Semantics::Com => filter_candidates(n, &Value3::ALL, |v| self.is_com(v)),
            Semantics::Grd => vec![self.grounded()?.values().into()],
            Semantics::Prf => {
                // maximal admissible = maximal complete
                let com = filter_candidates(n, &Value3::ALL, |v| self.is_com(v));
                com.iter()
                    .filter(|v| {
                        !com.iter()
                            .any(|w| w != *v && v.iter().zip(w.iter()).all(|(x, y)| x.info_le(*y)))
                    })
                    .cloned()
                    .collect()
            }
            Semantics::Mod => filter_candidates(n, &two, |v| self.is_model(v)),
            Semantics::Stb => {
                let models = filter_candidates(n, &two, |v| self.is_model(v));
                let mut stable = Vec::new();
                for m in models {
                    let v = Interpretation::from_parts(self.statements.clone(), m.clone());
                    if self.is_stable(&v)? {
                        stable.push(m);
                    }
                }
                stable
            }
        };
        Ok(InterpretationSet::collect(
            self.statements.clone(),
            members
                .into_iter()
                .map(|v| Interpretation::from_parts(self.statements.clone(), v)),
        ))
    }

    /// The stable-model reduct `D^v` of a two-valued model `v`.
    pub fn reduct(&self, v: &Interpretation) -> Result<Reduct> {
        self.check_domain(v)?;
        if !self.is_model(v.values()) {
            return Err(Error::Precondition(format!(
                "{v} is not a two-valued model"
            )));
        }
        let falsified = |p: &ArgumentId| (v.get(p) == Some(Value3::F)).then_some(false);
        let adf = Adf::new(
            self.conditions()
                .filter(|(s, _)| v.get(s) == Some(Value3::T))
                .map(|(s, phi)| (s.clone(), phi.substitute(&falsified))),
        )?;
        let grounded = adf.grounded()?;
        Ok(Reduct { adf, grounded })
    }

    /// Whether `mod` and `stb` coincide; only defined for support-free ADFs,
    /// where they always should.
    pub fn sfadf_mod_eq_stb(&self) -> Result<bool> {
        if !self.is_support_free() {
            return Err(Error::Precondition(
                "the ADF has non-attacking links".into(),
            ));
        }
        Ok(self.enumerate(Semantics::Mod)? == self.enumerate(Semantics::Stb)?)
    }
}

/// The reduct `D^v` together with its grounded interpretation.
#[derive(Clone, Debug)]
pub struct Reduct {
    pub adf: Adf,
    pub grounded: Interpretation,
}

impl PartialEq for Adf {
    fn eq(&self, other: &Self) -> bool {
        self.statements == other.statements
            && self
                .conditions
                .iter()
                .zip(&other.conditions)
                .all(|(x, y)| x.formula == y.formula)
    }
}

impl Eq for Adf {}

impl fmt::Debug for Adf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.conditions()).finish()
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::formula::tests::{a, na};
    use crate::model::arg;

    pub(crate) fn mixed_links() -> Adf {
        Adf::new([
            (arg("a"), na("b")),
            (arg("b"), Formula::or(vec![a("b"), na("c")])),
            (arg("c"), Formula::or(vec![na("a"), na("b")])),
        ])
        .unwrap()
    }

    pub(crate) fn interp(d: &Adf, truths: &str) -> Interpretation {
        let values: Vec<Value3> = truths
            .chars()
            .map(|c| Value3::from_truth(c).unwrap())
            .collect();
        Interpretation::new(d.statements().clone(), values).unwrap()
    }

    fn set(d: &Adf, members: &[&str]) -> InterpretationSet {
        InterpretationSet::new(d.statements().clone(), members.iter().map(|m| interp(d, m)))
            .unwrap()
    }

    #[test]
    fn gamma_examples() {
        let d = mixed_links();
        assert_eq!(d.gamma(&interp(&d, "uut")).unwrap(), interp(&d, "uuu"));
        assert_eq!(d.gamma(&interp(&d, "ftu")).unwrap(), interp(&d, "ftt"));
        // two-valued input: Γ is plain evaluation
        assert_eq!(d.gamma(&interp(&d, "tft")).unwrap(), interp(&d, "tft"));
    }

    #[test]
    fn mixed_links_semantics() {
        let d = mixed_links();
        let prf = set(&d, &["tft", "ftt"]);
        assert_eq!(d.enumerate(Semantics::Prf).unwrap(), prf);
        assert_eq!(d.enumerate(Semantics::Mod).unwrap(), prf);
        assert_eq!(d.enumerate(Semantics::Stb).unwrap(), set(&d, &["tft"]));
        assert_eq!(d.enumerate(Semantics::Grd).unwrap(), set(&d, &["uuu"]));
        assert_eq!(
            d.enumerate(Semantics::Com).unwrap(),
            set(&d, &["tft", "ftt", "uuu"])
        );
        assert!(d
            .check_interpretation(&interp(&d, "tft"), Semantics::Stb)
            .unwrap());
        assert!(d
            .check_interpretation(&interp(&d, "ftt"), Semantics::Mod)
            .unwrap());
        assert!(!d
            .check_interpretation(&interp(&d, "ftt"), Semantics::Stb)
            .unwrap());
        assert!(d
            .check_interpretation(&interp(&d, "uuu"), Semantics::Grd)
            .unwrap());
        assert!(d
            .check_interpretation(&interp(&d, "ftt"), Semantics::Prf)
            .unwrap());
        assert!(!d
            .check_interpretation(&interp(&d, "fuu"), Semantics::Prf)
            .unwrap());
    }

    #[test]
    fn reducts_of_mixed_links() {
        let d = mixed_links();
        let r = d.reduct(&interp(&d, "tft")).unwrap();
        assert_eq!(r.adf.statements().args(), &[arg("a"), arg("c")]);
        assert_eq!(
            r.adf.condition(&arg("a")),
            Some(&Formula::neg(Formula::Bot))
        );
        assert_eq!(
            r.adf.condition(&arg("c")),
            Some(&Formula::or(vec![na("a"), Formula::neg(Formula::Bot)]))
        );
        assert_eq!(r.grounded, interp(&r.adf, "tt"));

        let r = d.reduct(&interp(&d, "ftt")).unwrap();
        assert_eq!(r.adf.statements().args(), &[arg("b"), arg("c")]);
        assert_eq!(r.grounded, interp(&r.adf, "ut"));

        assert!(matches!(
            d.reduct(&interp(&d, "ttt")),
            Err(Error::Precondition(_))
        ));

        let top = Adf::new([(arg("a"), Formula::Top)]).unwrap();
        let r = top.reduct(&interp(&top, "t")).unwrap();
        assert_eq!(r.grounded, interp(&r.adf, "t"));
    }

    #[test]
    fn bottom_condition_is_false_when_grounded() {
        let d = Adf::new([(arg("a"), Formula::Bot)]).unwrap();
        assert_eq!(d.enumerate(Semantics::Grd).unwrap(), set(&d, &["f"]));
        assert!(d.sfadf_mod_eq_stb().unwrap());
    }

    #[test]
    fn mod_equals_stb_for_mutual_attack() {
        let d = Adf::new([(arg("a"), na("b")), (arg("b"), na("a"))]).unwrap();
        // brute force the 4 two-valued candidates
        let models: Vec<&str> = ["ff", "ft", "tf", "tt"]
            .into_iter()
            .filter(|m| {
                d.check_interpretation(&interp(&d, m), Semantics::Mod)
                    .unwrap()
            })
            .collect();
        assert_eq!(models, vec!["ft", "tf"]);
        assert!(d.sfadf_mod_eq_stb().unwrap());
        assert!(matches!(
            mixed_links().sfadf_mod_eq_stb(),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn links_and_errors() {
        let d = mixed_links();
        assert_eq!(
            d.link_type(&arg("b"), &arg("b")).unwrap(),
            LinkType::Supporting
        );
        assert_eq!(
            d.link_type(&arg("a"), &arg("c")).unwrap(),
            LinkType::Attacking
        );
        assert_eq!(
            d.link_type(&arg("c"), &arg("a")),
            Err(Error::NotALink {
                from: arg("c"),
                to: arg("a")
            })
        );
        assert_eq!(d.links().len(), 5);
        assert!(matches!(
            Adf::new([(arg("a"), na("z"))]),
            Err(Error::UnknownArgument(_))
        ));
        assert!(matches!(
            Adf::new([(arg("a"), Formula::Top), (arg("a"), Formula::Bot)]),
            Err(Error::DuplicateArgument(_))
        ));
    }

    #[test]
    fn grounded_iteration_matches_minimal_complete() {
        let d = mixed_links();
        let (g, steps) = d.grounded_with_steps().unwrap();
        assert_eq!(steps, 0);
        assert_eq!(g, interp(&d, "uuu"));

        let chain = Adf::new([
            (arg("a"), Formula::Top),
            (arg("b"), na("a")),
            (arg("c"), na("b")),
        ])
        .unwrap();
        let (g, steps) = chain.grounded_with_steps().unwrap();
        assert_eq!(g, interp(&chain, "tft"));
        assert_eq!(steps, 3);
    }
}
