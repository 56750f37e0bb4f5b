mod common;

use common::*;
use hopf_galois_core::catalog;
use hopf_galois_core::permcore::{centralizer_in, find_monomorphisms, is_isomorphic, normalizer_in, Budget, MonomorphismConstraints, DEFAULT_BUDGET};
use hopf_galois_core::{PermGroup, Permutation};

#[test]
fn holomorph_is_the_symmetric_normalizer_up_to_twelve() {
    for e in catalog::embedded().groups().iter().filter(|e| e.id.order <= 12) {
        let hol = e.holomorph().unwrap();
        let sym = PermGroup::symmetric(e.id.order as usize);
        let norm = normalizer_in(&sym, &hol.regular).unwrap();
        assert!(norm.same_group(&hol.group), "{}", e.name);
    }
}

#[test]
fn holomorph_orders_and_stabilizers() {
    for e in catalog::embedded().groups() {
        let hol = e.holomorph().unwrap();
        let aut = hol.automorphisms.order();
        assert_eq!(hol.order(), e.id.order * aut, "{}", e.name);
        assert_eq!(hol.group.stabilizer(0).order(), aut, "{}", e.name);
        assert!(hol.regular.is_regular());
        assert!(hol.regular.is_normal_in(&hol.group));
    }
}

#[test]
fn automorphisms_respect_the_table() {
    for e in catalog::embedded().groups().iter().filter(|e| e.id.order <= 24) {
        let hol = e.holomorph().unwrap();
        let lab = &hol.labelled;
        let m = lab.order();
        for a in hol.automorphisms.generators() {
            assert_eq!(a.apply(0), 0);
            for x in 0..m {
                for y in 0..m {
                    assert_eq!(a.apply(lab.mul(x, y)), lab.mul(a.apply(x), a.apply(y)), "{}", e.name);
                }
            }
        }
    }
}

#[test]
fn automorphism_group_orders() {
    let expect = [(30, "C30", 8), (30, "D30", 120), (20, "F5", 20), (8, "C2xC2xC2", 168), (20, "C20", 8), (10, "C10", 4), (10, "D10", 20)];
    for (order, name, aut) in expect {
        let e = catalog::embedded().group(id_of(order, name)).unwrap();
        assert_eq!(e.holomorph().unwrap().automorphisms.order(), aut, "{name}");
    }
    let c10 = catalog::embedded().group(id_of(10, "C10")).unwrap();
    let d10 = catalog::embedded().group(id_of(10, "D10")).unwrap();
    assert_eq!(c10.holomorph().unwrap().order(), 40);
    assert_eq!(d10.holomorph().unwrap().order(), 200);
}

#[test]
fn small_holomorphs_by_isomorphism_type() {
    let c6 = catalog::embedded().group(id_of(6, "C6")).unwrap().holomorph().unwrap();
    let d12 = catalog::embedded().group(id_of(12, "D12")).unwrap();
    assert!(is_isomorphic(&c6.group, d12.group()).unwrap().is_some());

    let s3 = catalog::embedded().group(id_of(6, "S3")).unwrap().holomorph().unwrap();
    let s3xs3 = grp("(1,2,3);(1,2);(4,5,6);(4,5)", 6);
    assert!(is_isomorphic(&s3.group, &s3xs3).unwrap().is_some());
}

#[test]
fn solvability_across_the_scan_orders() {
    for order in [12, 15, 18, 20, 30, 36] {
        for e in catalog::groups_of_order(order).unwrap() {
            assert!(e.holomorph().unwrap().solvable, "{} of order {order}", e.name);
        }
    }
    let unsolvable = |order| -> Vec<String> {
        catalog::groups_of_order(order)
            .unwrap()
            .into_iter()
            .filter(|e| !e.holomorph().unwrap().solvable)
            .map(|e| e.name.clone())
            .collect()
    };
    assert_eq!(unsolvable(40), ["C2xC2xC2xC5"]);
    assert_eq!(unsolvable(60), ["A5"]);
    assert_eq!(unsolvable(24), ["C6xC2xC2"]);
    let c24 = catalog::embedded().group(id_of(24, "C6xC2xC2")).unwrap();
    assert_eq!(c24.holomorph().unwrap().order(), 8064);
}

#[test]
fn the_order_forty_holomorph_has_no_a5() {
    let e = catalog::embedded().group(id_of(40, "C2xC2xC2xC5")).unwrap();
    let hol = e.holomorph().unwrap();
    assert_eq!(hol.order(), 40 * 168 * 4);
    let a5 = PermGroup::alternating(5);
    let constraints = MonomorphismConstraints {
        limit: Some(1),
        ..Default::default()
    };
    let found = find_monomorphisms(&a5, &hol.group, &constraints, &Budget::new(DEFAULT_BUDGET)).unwrap();
    assert!(found.is_empty());
}

#[test]
fn double_transposition_centralizer_in_s5() {
    let s5 = PermGroup::symmetric(5);
    let sigma = Permutation::parse_cycles("(1,2)(3,4)", 5).unwrap();
    assert_eq!(centralizer_in(&s5, &sigma).unwrap().order(), 8);
    let transposition = Permutation::parse_cycles("(1,2)", 5).unwrap();
    assert_eq!(centralizer_in(&s5, &transposition).unwrap().order(), 12);
}

#[test]
fn s3_by_s3_inside_the_holomorph() {
    let g = transitive("6T9");
    let s3 = catalog::embedded().group(id_of(6, "S3")).unwrap().holomorph().unwrap();
    assert_eq!(s3.order(), 36);
    assert!(is_isomorphic(&g, &s3.group).unwrap().is_some());
}
