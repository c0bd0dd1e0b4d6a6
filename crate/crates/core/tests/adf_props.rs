use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use setadf_core::{
    generate::{random_adf, random_sfadf},
    Adf, Classification, Interpretation, Semantics, Value3,
};

fn values(n: usize) -> impl Strategy<Value = Vec<Value3>> {
    prop::collection::vec(prop::sample::select(Value3::ALL.to_vec()), n)
}

fn adf(seed: u64, max: usize) -> Adf {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_adf(&mut rng, 1 + (seed % max as u64) as usize)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn gamma_is_monotone(seed in any::<u64>(), w in values(6), refine in values(6)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_adf(&mut rng, 6);
        let w = Interpretation::new(d.statements().clone(), w).unwrap();
        // v refines w: decided values of w are kept, undecided ones taken from `refine`
        let v_vals: Vec<Value3> = w
            .values()
            .iter()
            .zip(&refine)
            .map(|(&x, &r)| if x == Value3::Undec { r } else { x })
            .collect();
        let v = Interpretation::new(d.statements().clone(), v_vals).unwrap();
        prop_assert!(w.info_le(&v).unwrap());
        prop_assert!(d.gamma(&w).unwrap().info_le(&d.gamma(&v).unwrap()).unwrap());
    }

    #[test]
    fn grounded_iteration_is_short_and_matches_enumeration(seed in any::<u64>()) {
        let d = adf(seed, 5);
        let (g, steps) = d.grounded_with_steps().unwrap();
        prop_assert!(steps <= d.statements().len());
        prop_assert_eq!(d.gamma(&g).unwrap(), g.clone());
        let com = d.enumerate(Semantics::Com).unwrap();
        let least: Vec<&Interpretation> = com
            .iter()
            .filter(|v| com.iter().all(|o| v.info_le(o).unwrap()))
            .collect();
        prop_assert_eq!(least, vec![&g]);
        let grd = d.enumerate(Semantics::Grd).unwrap();
        prop_assert_eq!(grd.iter().collect::<Vec<_>>(), vec![&g]);
    }

    #[test]
    fn semantics_form_a_chain(seed in any::<u64>()) {
        let d = adf(seed, 5);
        let get = |s| d.enumerate(s).unwrap();
        let (cf, adm, com, grd, prf, md, stb) = (
            get(Semantics::Cf),
            get(Semantics::Adm),
            get(Semantics::Com),
            get(Semantics::Grd),
            get(Semantics::Prf),
            get(Semantics::Mod),
            get(Semantics::Stb),
        );
        prop_assert!(stb.is_subset(&md));
        prop_assert!(md.is_subset(&prf));
        prop_assert!(prf.is_subset(&com));
        prop_assert!(com.is_subset(&adm));
        prop_assert!(adm.is_subset(&cf));
        prop_assert!(grd.is_subset(&com));
    }

    #[test]
    fn preferred_is_maximal_admissible(seed in any::<u64>()) {
        let d = adf(seed, 4);
        let adm = d.enumerate(Semantics::Adm).unwrap();
        let maximal: Vec<&Interpretation> = adm
            .iter()
            .filter(|v| !adm.iter().any(|o| o != *v && v.info_le(o).unwrap()))
            .collect();
        let prf = d.enumerate(Semantics::Prf).unwrap();
        prop_assert_eq!(prf.iter().collect::<Vec<_>>(), maximal);
    }

    #[test]
    fn falsified_parents_decide_irrefutability(seed in any::<u64>(), vals in values(5)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_sfadf(&mut rng, 5);
        let arbitrary = Interpretation::new(d.statements().clone(), vals).unwrap();
        let mut candidates = vec![arbitrary];
        candidates.extend(d.enumerate(Semantics::Mod).unwrap().iter().cloned());
        for v in &candidates {
            for (s, phi) in d.conditions() {
                let attacking = phi.atoms().iter().all(|p| d.link_type(p, s).unwrap().is_attacking());
                if !attacking {
                    continue;
                }
                let partial = phi.partial_valuation(v).classify().unwrap() == Classification::Tautology;
                let reduced = phi
                    .substitute(&|p| (v.get(p) == Some(Value3::F)).then_some(false))
                    .classify()
                    .unwrap()
                    == Classification::Tautology;
                prop_assert_eq!(partial, reduced, "{} under {}", s, v);
            }
        }
    }

    #[test]
    fn support_free_models_are_stable(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_sfadf(&mut rng, 1 + (seed % 5) as usize);
        prop_assert!(d.is_support_free());
        prop_assert!(d.sfadf_mod_eq_stb().unwrap());
    }

    #[test]
    fn pointwise_checks_match_enumeration(seed in any::<u64>()) {
        let d = adf(seed, 3);
        let n = d.statements().len();
        let everything: Vec<Interpretation> = (0..3usize.pow(n as u32))
            .map(|mut k| {
                let vals: Vec<Value3> = (0..n)
                    .map(|_| {
                        let x = Value3::ALL[k % 3];
                        k /= 3;
                        x
                    })
                    .collect();
                Interpretation::new(d.statements().clone(), vals).unwrap()
            })
            .collect();
        for sem in Semantics::ADF {
            let set = d.enumerate(sem).unwrap();
            for v in &everything {
                prop_assert_eq!(d.check_interpretation(v, sem).unwrap(), set.contains(v), "{} {}", sem, v);
            }
        }
    }
}
