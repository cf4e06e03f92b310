use burnside_core::burnside::{BurnsideElement, GhostVector, MarksTable};
use burnside_core::catalog::{build_catalog, parse_group_spec};
use burnside_core::group::{PermGroup, Subgroup};
use burnside_core::Config;
use num_bigint::BigInt;
use proptest::prelude::*;

/// `|(G/K)^H| = #{g in G : g^-1 H g <= K} / |K|`, computed on permutations.
fn fixed_points(g: &PermGroup, k: &Subgroup, h: &Subgroup) -> i64 {
    let kset: Vec<_> = k.members().iter().map(|&i| g.element(i).clone()).collect();
    let count = g
        .elements()
        .iter()
        .filter(|x| {
            let xi = x.inverse();
            h.members()
                .iter()
                .all(|&m| kset.contains(&xi.then(g.element(m)).then(x)))
        })
        .count();
    assert_eq!(count % k.order(), 0);
    (count / k.order()) as i64
}

#[test]
fn marks_match_fixed_point_oracle() {
    let cfg = Config::default();
    for spec in ["cyclic:2", "symmetric:3", "Q8", "A4", "D5", "C2xC4"] {
        let g = parse_group_spec(spec, &cfg).unwrap();
        let t = MarksTable::compute(&g, &cfg).unwrap();
        let cls = t.lattice().classes();
        for i in 0..cls.len() {
            for j in 0..cls.len() {
                assert_eq!(t.matrix()[(i, j)], fixed_points(&g, &cls[i], &cls[j]), "{spec} ({i},{j})");
            }
        }
    }
}

#[test]
fn structural_invariants_over_catalog() {
    let cfg = Config::default();
    for entry in build_catalog() {
        let g = entry.build(&cfg).unwrap();
        let t = MarksTable::compute(&g, &cfg).unwrap();
        let l = t.lattice();
        let c = t.class_count();
        for i in 0..c {
            for j in 0..c {
                assert_eq!(t.matrix()[(i, j)] != 0, l.is_subconjugate(j, i), "{} ({i},{j})", entry.name);
            }
            assert_eq!(
                t.matrix()[(i, i)] as usize,
                l.normalizer_orders()[i] / l.classes()[i].order(),
                "{}",
                entry.name
            );
        }
        assert_eq!(t.matrix()[(0, 0)] as usize, g.order());
        assert!((1..c).all(|j| t.matrix()[(0, j)] == 0));
        let det = t.matrix().determinant().unwrap();
        assert_ne!(det, BigInt::from(0));
        assert_eq!(det, t.diagonal_product());
    }
}

#[test]
fn dihedral_3_and_symmetric_3_agree() {
    let cfg = Config::default();
    let d3 = MarksTable::compute(&parse_group_spec("dihedral:3", &cfg).unwrap(), &cfg).unwrap();
    let s3 = MarksTable::compute(&parse_group_spec("symmetric:3", &cfg).unwrap(), &cfg).unwrap();
    assert_eq!(d3.matrix(), s3.matrix());
}

#[test]
fn parallel_and_sequential_tables_agree() {
    for spec in ["S4", "D6"] {
        let par = MarksTable::compute(&parse_group_spec(spec, &Config::default()).unwrap(), &Config::default()).unwrap();
        let seq = MarksTable::compute(&parse_group_spec(spec, &Config::sequential()).unwrap(), &Config::sequential()).unwrap();
        assert_eq!(par, seq);
    }
}

fn table(spec: &str) -> MarksTable {
    let cfg = Config::default();
    MarksTable::compute(&parse_group_spec(spec, &cfg).unwrap(), &cfg).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ghost_is_a_ring_homomorphism(
        spec in prop::sample::select(vec!["S3", "Q8", "A4", "C6", "D4"]),
        seed in prop::collection::vec(-6i64..=6, 8),
        other in prop::collection::vec(-6i64..=6, 8),
    ) {
        let t = table(spec);
        let c = t.class_count();
        let x = BurnsideElement(seed[..c].to_vec());
        let y = BurnsideElement(other[..c].to_vec());
        let gx = t.ghost(&x).unwrap();
        let gy = t.ghost(&y).unwrap();
        let xy = t.multiply(&x, &y).unwrap();
        prop_assert_eq!(t.ghost(&xy).unwrap(), gx.pointwise_mul(&gy).unwrap());
        prop_assert_eq!(t.ghost(&t.add(&x, &y).unwrap()).unwrap(), gx.add(&gy).unwrap());
        prop_assert_eq!(t.unghost(&gx).unwrap(), Some(x.clone()));
        prop_assert_eq!(t.multiply(&t.one(), &x).unwrap(), x);
    }

    #[test]
    fn multiples_of_the_order_are_in_the_image(
        spec in prop::sample::select(vec!["S3", "Q8", "A4", "C12", "C3xC3"]),
        v in prop::collection::vec(-20i64..=20, 8),
    ) {
        let t = table(spec);
        let n = t.group_order() as i64;
        let v = GhostVector(v[..t.class_count()].iter().map(|x| x * n).collect());
        prop_assert!(t.is_in_image(&v).unwrap());
    }
}
