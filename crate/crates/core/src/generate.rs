//! Seeded random instances for property tests and benchmarks.

use std::collections::BTreeSet;

use rand::{seq::SliceRandom, Rng};

use crate::{
    adf::Adf,
    formula::{Formula, NegClause, NegCnf},
    model::{arg, ArgumentId, Attack, Setaf},
    translation::SetadfView,
};

fn names(n: usize) -> Vec<ArgumentId> {
    (0..n).map(|i| arg(&format!("a{i}"))).collect()
}

fn random_subset<R: Rng>(rng: &mut R, pool: &[ArgumentId], max: usize) -> Vec<ArgumentId> {
    let size = rng.gen_range(1..=max.min(pool.len()));
    pool.choose_multiple(rng, size).cloned().collect()
}

/// A SETAF with `n` arguments and up to `max_attacks` attacks (fewer when
/// draws coincide). Attacker sets have at most three members.
pub fn random_setaf<R: Rng>(rng: &mut R, n: usize, max_attacks: usize) -> Setaf {
    let args = names(n);
    let mut attacks = BTreeSet::new();
    if n > 0 {
        for _ in 0..rng.gen_range(0..=max_attacks) {
            let attackers = random_subset(rng, &args, 3);
            let target = args.choose(rng).unwrap().clone();
            attacks.insert(Attack::new(attackers, target));
        }
    }
    Setaf::new(args, attacks).expect("generated SETAF is valid")
}

fn random_neg_cnf<R: Rng>(rng: &mut R, args: &[ArgumentId]) -> NegCnf {
    let clauses = (0..rng.gen_range(0..=3))
        .map(|_| NegClause::new(random_subset(rng, args, 3)).expect("non-empty"));
    NegCnf::new(clauses)
}

/// A SETADF over `n` statements with random negative CNF conditions.
pub fn random_setadf<R: Rng>(rng: &mut R, n: usize) -> SetadfView {
    let args = names(n);
    let clauses = args.iter().map(|_| random_neg_cnf(rng, &args)).collect();
    SetadfView::new(crate::model::Domain::new(args).unwrap(), clauses).expect("valid clauses")
}

fn random_formula<R: Rng>(rng: &mut R, atoms: &[ArgumentId], depth: u32) -> Formula {
    if depth == 0 || rng.gen_bool(0.3) {
        return match rng.gen_range(0..10) {
            0 => Formula::Top,
            1 => Formula::Bot,
            _ => Formula::atom(atoms.choose(rng).unwrap().clone()),
        };
    }
    let op = rng.gen_range(0..5);
    let mut sub = || random_formula(rng, atoms, depth - 1);
    match op {
        0 => Formula::neg(sub()),
        1 => Formula::and(vec![sub(), sub()]),
        2 => Formula::or(vec![sub(), sub()]),
        3 => Formula::imp(sub(), sub()),
        _ => Formula::iff(sub(), sub()),
    }
}

/// An arbitrary formula over `atoms`, up to the given nesting depth.
pub fn random_any_formula<R: Rng>(rng: &mut R, atoms: &[ArgumentId], depth: u32) -> Formula {
    random_formula(rng, atoms, depth)
}

/// A satisfiable formula over at most four of `atoms` in which every atom is
/// attacking or redundant. Falls back to a negative CNF when rejection
/// sampling finds nothing.
pub fn random_attacking_formula<R: Rng>(rng: &mut R, atoms: &[ArgumentId]) -> Formula {
    let pool: Vec<ArgumentId> = atoms
        .choose_multiple(rng, atoms.len().min(4))
        .cloned()
        .collect();
    for _ in 0..50 {
        let phi = random_formula(rng, &pool, 3);
        let satisfiable = phi
            .classify()
            .is_ok_and(|c| c != crate::formula::Classification::Unsatisfiable);
        let attacking = phi
            .atoms()
            .iter()
            .all(|a| phi.link_type(a).is_ok_and(|t| t.is_attacking()));
        if satisfiable && attacking {
            return phi;
        }
    }
    random_neg_cnf(rng, &pool).to_formula()
}

/// A support-free ADF over `n` statements. Roughly one condition in ten is
/// `⊥` or `⊤`; the rest are negative CNFs or scrambled attacking formulas.
pub fn random_sfadf<R: Rng>(rng: &mut R, n: usize) -> Adf {
    let args = names(n);
    let conditions: Vec<(ArgumentId, Formula)> = args
        .iter()
        .map(|s| {
            let phi = match rng.gen_range(0..20) {
                0 => Formula::Bot,
                1 => Formula::Top,
                2..=7 => random_attacking_formula(rng, &args),
                _ => random_neg_cnf(rng, &args).to_formula(),
            };
            (s.clone(), phi)
        })
        .collect();
    Adf::new(conditions).expect("generated ADF is valid")
}

/// An ADF with arbitrary conditions over `n` statements.
pub fn random_adf<R: Rng>(rng: &mut R, n: usize) -> Adf {
    let args = names(n);
    let conditions: Vec<(ArgumentId, Formula)> = args
        .iter()
        .map(|s| (s.clone(), random_formula(rng, &args, 3)))
        .collect();
    Adf::new(conditions).expect("generated ADF is valid")
}
