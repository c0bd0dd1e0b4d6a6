use proptest::prelude::*;
use setadf_core::{
    arg, int_to_lab, lab_to_int, Domain, InfoOrder, Interpretation, Labelling, Value3,
};

fn domain(n: usize) -> Domain {
    Domain::new((0..n).map(|i| arg(&format!("x{i}")))).unwrap()
}

fn values(max: usize) -> impl Strategy<Value = Vec<Value3>> {
    prop::collection::vec(prop::sample::select(Value3::ALL.to_vec()), 0..=max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn lab_to_int_round_trips(vals in values(8)) {
        let lab = Labelling::new(domain(vals.len()), vals).unwrap();
        let back = int_to_lab(&lab_to_int(&lab));
        prop_assert_eq!(back, lab);
    }
}

proptest! {
    #[test]
    fn parts_partition_the_domain(vals in values(8)) {
        let d = domain(vals.len());
        let lab = Labelling::new(d.clone(), vals).unwrap();
        let (i, o, u) = lab.triple();
        prop_assert!(i.is_disjoint(&o) && i.is_disjoint(&u) && o.is_disjoint(&u));
        let mut all: Vec<_> = i.into_iter().chain(o).chain(u).collect();
        all.sort();
        prop_assert_eq!(&all[..], d.args());
    }

    #[test]
    fn all_undec_is_the_bottom(vals in values(8)) {
        let d = domain(vals.len());
        let v = Interpretation::new(d.clone(), vals).unwrap();
        let bottom = Interpretation::constant(&d, Value3::U);
        let order = bottom.info_compare(&v).unwrap();
        if v == bottom {
            prop_assert_eq!(order, InfoOrder::Equal);
        } else {
            prop_assert_eq!(order, InfoOrder::LessEqual);
            prop_assert_eq!(v.info_compare(&bottom).unwrap(), InfoOrder::Greater);
        }
    }

    #[test]
    fn lab_to_int_renames_pointwise(vals in values(8)) {
        let lab = Labelling::new(domain(vals.len()), vals.clone()).unwrap();
        let v = lab_to_int(&lab);
        for (a, x) in lab.iter() {
            prop_assert_eq!(v.get(a), Some(x));
            prop_assert_eq!(x == Value3::In, v.get(a).unwrap().truth() == 't');
        }
    }
}
