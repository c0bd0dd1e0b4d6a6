//! Labelling semantics of SETAFs, decided pointwise and enumerated by
//! brute force over all `3^n` labellings.

use std::collections::BTreeSet;

use crate::{
    adf::Adf,
    error::{check_size, Error, Result},
    model::{filter_candidates, Labelling, LabellingSet, Semantics, Setaf, Value3},
    translation::setaf_to_setadf,
};

fn all_in(vals: &[Value3], attackers: &[usize]) -> bool {
    attackers.iter().all(|&b| vals[b] == Value3::In)
}

fn some_out(vals: &[Value3], attackers: &[usize]) -> bool {
    attackers.iter().any(|&b| vals[b] == Value3::Out)
}

fn is_cf(f: &Setaf, vals: &[Value3]) -> bool {
    (0..vals.len()).all(|t| {
        let attacks = f.attacks_on(t);
        match vals[t] {
            Value3::In => !attacks.iter().any(|b| all_in(vals, b)),
            Value3::Out => attacks.iter().any(|b| all_in(vals, b)),
            Value3::Undec => true,
        }
    })
}

fn is_adm(f: &Setaf, vals: &[Value3]) -> bool {
    is_cf(f, vals)
        && (0..vals.len())
            .all(|t| vals[t] != Value3::In || f.attacks_on(t).iter().all(|b| some_out(vals, b)))
}

fn is_com(f: &Setaf, vals: &[Value3]) -> bool {
    (0..vals.len()).all(|t| {
        let attacks = f.attacks_on(t);
        let defended = attacks.iter().all(|b| some_out(vals, b));
        let defeated = attacks.iter().any(|b| all_in(vals, b));
        (vals[t] == Value3::In) == defended && (vals[t] == Value3::Out) == defeated
    })
}

fn is_stb(f: &Setaf, vals: &[Value3]) -> bool {
    !vals.contains(&Value3::Undec) && is_cf(f, vals)
}

fn in_part(vals: &[Value3]) -> BTreeSet<usize> {
    (0..vals.len()).filter(|&i| vals[i] == Value3::In).collect()
}

fn unsupported(sem: Semantics) -> Error {
    Error::UnsupportedSemantics {
        semantics: sem.name().to_string(),
        target: "SETAFs",
    }
}

/// Decides whether `lab` is a `sem` labelling of `f`.
///
/// `grd` and `prf` compare against the complete labellings and therefore
/// share the size limit of [`enumerate`].
pub fn check_labelling(f: &Setaf, lab: &Labelling, sem: Semantics) -> Result<bool> {
    if lab.domain() != f.arguments() {
        return Err(Error::DomainMismatch);
    }
    let vals = lab.values();
    Ok(match sem {
        Semantics::Cf => is_cf(f, vals),
        Semantics::Adm => is_adm(f, vals),
        Semantics::Com => is_com(f, vals),
        Semantics::Stb => is_stb(f, vals),
        Semantics::Grd => grounded(f)? == *lab,
        Semantics::Prf => {
            is_com(f, vals) && {
                let mine = in_part(vals);
                complete_values(f)?
                    .iter()
                    .all(|other| !mine.is_subset(&in_part(other)) || mine == in_part(other))
            }
        }
        Semantics::Mod => return Err(unsupported(sem)),
    })
}

fn complete_values(f: &Setaf) -> Result<Vec<Box<[Value3]>>> {
    check_size("argument set", f.arguments().len())?;
    Ok(filter_candidates(f.arguments().len(), &Value3::ALL, |v| {
        is_com(f, v)
    }))
}

/// All `sem` labellings of `f`.
pub fn enumerate(f: &Setaf, sem: Semantics) -> Result<LabellingSet> {
    let n = f.arguments().len();
    check_size("argument set", n)?;
    let keep: Vec<Box<[Value3]>> = match sem {
        Semantics::Cf => filter_candidates(n, &Value3::ALL, |v| is_cf(f, v)),
        Semantics::Adm => filter_candidates(n, &Value3::ALL, |v| is_adm(f, v)),
        Semantics::Com => complete_values(f)?,
        Semantics::Stb => filter_candidates(n, &[Value3::Out, Value3::In], |v| is_stb(f, v)),
        Semantics::Grd => {
            let com = complete_values(f)?;
            extremal(&com, |mine, other| other.is_subset(mine))
        }
        Semantics::Prf => {
            let com = complete_values(f)?;
            extremal(&com, |mine, other| mine.is_subset(other))
        }
        Semantics::Mod => return Err(unsupported(sem)),
    };
    Ok(LabellingSet::collect(
        f.arguments().clone(),
        keep.into_iter()
            .map(|v| Labelling::from_parts(f.arguments().clone(), v)),
    ))
}

/// Keeps the members whose in-part is not strictly beaten: `beaten(mine,
/// other)` says that `other` is at least as good as `mine`.
fn extremal(
    candidates: &[Box<[Value3]>],
    beaten: impl Fn(&BTreeSet<usize>, &BTreeSet<usize>) -> bool,
) -> Vec<Box<[Value3]>> {
    let parts: Vec<BTreeSet<usize>> = candidates.iter().map(|v| in_part(v)).collect();
    candidates
        .iter()
        .zip(&parts)
        .filter(|(_, mine)| {
            !parts
                .iter()
                .any(|other| other != *mine && beaten(mine, other))
        })
        .map(|(v, _)| v.clone())
        .collect()
}

/// The grounded labelling: the complete labelling with `⊆`-minimal in-part.
pub fn grounded(f: &Setaf) -> Result<Labelling> {
    let set = enumerate(f, Semantics::Grd)?;
    let mut members = set.iter();
    match (members.next(), members.next()) {
        (Some(g), None) => Ok(g.clone()),
        _ => Err(Error::Internal(format!(
            "expected exactly one grounded labelling, found {}",
            set.len()
        ))),
    }
}

/// Compares the minimal-complete grounded labelling with the least fixpoint
/// of the characteristic operator on the associated ADF.
pub fn grounded_crosscheck(f: &Setaf) -> Result<bool> {
    let by_minimality = grounded(f)?;
    let adf: Adf = setaf_to_setadf(f).into_adf();
    let by_iteration = adf.grounded()?;
    Ok(by_minimality.to_interpretation() == by_iteration)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{arg, Attack, Domain};

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

    fn lab(f: &Setaf, pattern: &str) -> Labelling {
        // one char per argument: i(n) o(ut) u(ndec)
        let values: Vec<Value3> = pattern
            .chars()
            .map(|c| match c {
                'i' => Value3::In,
                'o' => Value3::Out,
                _ => Value3::Undec,
            })
            .collect();
        Labelling::new(f.arguments().clone(), values).unwrap()
    }

    #[test]
    fn joint_attacks_pointwise() {
        let f = joint_attacks();
        assert!(check_labelling(&f, &lab(&f, "iui"), Semantics::Cf).unwrap());
        assert!(!check_labelling(&f, &lab(&f, "iui"), Semantics::Adm).unwrap());
        assert!(check_labelling(&f, &lab(&f, "uuu"), Semantics::Adm).unwrap());
        assert!(!check_labelling(&f, &lab(&f, "uuu"), Semantics::Com).unwrap());
        assert!(check_labelling(&f, &lab(&f, "iuu"), Semantics::Grd).unwrap());
        assert!(check_labelling(&f, &lab(&f, "ioi"), Semantics::Prf).unwrap());
        assert!(!check_labelling(&f, &lab(&f, "iuu"), Semantics::Prf).unwrap());
    }

    #[test]
    fn joint_attacks_sets() {
        let f = joint_attacks();
        let expected =
            LabellingSet::new(f.arguments().clone(), [lab(&f, "ioi"), lab(&f, "iio")]).unwrap();
        assert_eq!(enumerate(&f, Semantics::Prf).unwrap(), expected);
        assert_eq!(enumerate(&f, Semantics::Stb).unwrap(), expected);
        let grd = enumerate(&f, Semantics::Grd).unwrap();
        assert_eq!(grd.len(), 1);
        assert!(grd.contains(&lab(&f, "iuu")));
    }

    #[test]
    fn domain_and_semantics_errors() {
        let f = joint_attacks();
        let other = Domain::new([arg("a")]).unwrap();
        assert_eq!(
            check_labelling(&f, &Labelling::constant(&other, Value3::In), Semantics::Cf),
            Err(Error::DomainMismatch)
        );
        assert!(matches!(
            enumerate(&f, Semantics::Mod),
            Err(Error::UnsupportedSemantics { .. })
        ));
        let big = Setaf::new((0..13).map(|i| arg(&format!("x{i}"))), []).unwrap();
        assert!(matches!(
            enumerate(&big, Semantics::Cf),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn grounded_small_cases() {
        let f = Setaf::new([arg("a")], []).unwrap();
        assert_eq!(grounded(&f).unwrap(), lab(&f, "i"));
        assert!(grounded_crosscheck(&f).unwrap());

        let selfish = Setaf::new([arg("a")], [Attack::new([arg("a")], arg("a"))]).unwrap();
        // brute force: of the three labellings only undec is complete
        let com: Vec<_> = ["i", "o", "u"]
            .iter()
            .filter(|s| check_labelling(&selfish, &lab(&selfish, s), Semantics::Com).unwrap())
            .collect();
        assert_eq!(com, vec![&"u"]);
        assert_eq!(grounded(&selfish).unwrap(), lab(&selfish, "u"));
        assert!(grounded_crosscheck(&selfish).unwrap());
        assert!(grounded_crosscheck(&joint_attacks()).unwrap());
    }

    #[test]
    fn enumeration_order_is_lexicographic() {
        let f = Setaf::new([arg("a"), arg("b")], []).unwrap();
        let cf: Vec<String> = enumerate(&f, Semantics::Cf)
            .unwrap()
            .iter()
            .map(|l| l.to_string())
            .collect();
        assert_eq!(cf.len(), 4);
        assert_eq!(cf[0], "in:{} out:{} undec:{a,b}");
        assert_eq!(cf[3], "in:{a,b} out:{} undec:{}");
    }
}
