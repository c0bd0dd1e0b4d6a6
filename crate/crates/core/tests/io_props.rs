use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use setadf_core::{
    generate::{random_adf, random_setaf},
    io::{parse_adf, parse_setaf, write_adf, write_setaf, LabellingDocument},
    setaf_sem::enumerate,
    Semantics,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn setaf_text_round_trips(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_setaf(&mut rng, (seed % 7) as usize, 8);
        let text = write_setaf(&f);
        let back = parse_setaf(&text).unwrap();
        prop_assert_eq!(write_setaf(&back), text);
        prop_assert_eq!(back, f);
    }

    #[test]
    fn adf_text_round_trips(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_adf(&mut rng, 1 + (seed % 5) as usize);
        let text = write_adf(&d);
        let back = parse_adf(&text).unwrap();
        prop_assert_eq!(write_adf(&back), text);
        prop_assert_eq!(back, d);
    }

    #[test]
    fn labelling_documents_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_setaf(&mut rng, 1 + (seed % 4) as usize, 6);
        let set = enumerate(&f, Semantics::Adm).unwrap();
        let doc = LabellingDocument::from_set(&set, Some(Semantics::Adm));
        let json = doc.to_json();
        let back = LabellingDocument::from_json(&json).unwrap();
        prop_assert_eq!(back.to_json(), json);
        prop_assert_eq!(back.to_set().unwrap(), set);
    }
}
