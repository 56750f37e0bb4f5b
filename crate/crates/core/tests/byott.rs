mod common;

use common::*;
use hopf_galois_core::catalog;
use hopf_galois_core::hopf::{
    byott_embeddings, byott_search, byott_to_regular, transport, ExtensionProblem, ObstructionKind, Transport,
};
use hopf_galois_core::permcore::{conjugating_element, find_monomorphisms, is_isomorphic, normalizer_in, Budget, MonomorphismConstraints};
use hopf_galois_core::PermGroup;

fn entry(order: u64, name: &str) -> &'static catalog::CatalogEntry {
    catalog::embedded().group(id_of(order, name)).unwrap()
}

fn s4_over_c3() -> ExtensionProblem {
    let s4 = PermGroup::symmetric(4);
    ExtensionProblem::new(s4, grp("(1,2,3)", 4)).unwrap()
}

#[test]
fn s4_embeds_in_hol_c2_cubed_and_matches_g1() {
    let p = s4_over_c3();
    let ws = byott_embeddings(&p, entry(8, "C2xC2xC2"), &Budget::default()).unwrap();
    assert!(!ws.is_empty());
    let g1 = grp("(1,7,4,2)(3,6,5,8);(1,2)(3,7)(4,6)(5,8)", 8);
    assert_eq!(g1.order(), 24);
    assert!(g1.is_transitive());
    let s8 = PermGroup::symmetric(8);
    let hit = ws.iter().any(|w| conjugating_element(&s8, &w.beta_image(), &g1).unwrap().is_some());
    assert!(hit);
}

#[test]
fn quaternion_holomorph_has_no_transitive_s4() {
    let p = s4_over_c3();
    assert!(byott_embeddings(&p, entry(8, "Q8"), &Budget::default()).unwrap().is_empty());
}

#[test]
fn only_c2_cubed_and_q8_have_holomorph_order_divisible_by_24() {
    let names: Vec<&str> = catalog::groups_of_order(8)
        .unwrap()
        .into_iter()
        .filter(|e| e.holomorph().unwrap().order() % 24 == 0)
        .map(|e| e.name.as_str())
        .collect();
    assert_eq!(names, vec!["Q8", "C2xC2xC2"]);
}

#[test]
fn normalizer_of_c2_cubed_has_the_listed_generators() {
    let n = grp("(1,6)(2,7)(3,5)(4,8);(1,4)(2,3)(5,7)(6,8);(1,3)(2,4)(5,6)(7,8)", 8);
    let hol = normalizer_in(&PermGroup::symmetric(8), &n).unwrap();
    assert_eq!(hol.order(), 1344);
    let listed = grp("(1,6)(2,7)(3,5)(4,8);(1,4)(2,3)(5,7)(6,8);(1,3)(2,4)(5,6)(7,8);(2,3)(5,7);(2,7)(3,5);(2,4)(7,8);(2,6)(3,5,8,4)", 8);
    assert!(hol.same_group(&listed));
    let g1 = grp("(1,7,4,2)(3,6,5,8);(1,2)(3,7)(4,6)(5,8)", 8);
    assert!(g1.is_subgroup_of(&hol));
    assert!(is_isomorphic(&g1, &PermGroup::symmetric(4)).unwrap().is_some());
}

#[test]
fn witness_back_maps_to_elementary_abelian_regular_subgroup() {
    let p = s4_over_c3();
    for w in byott_embeddings(&p, entry(8, "C2xC2xC2"), &Budget::default()).unwrap() {
        let r = byott_to_regular(&p, &w).unwrap();
        assert!(r.is_regular() && r.is_abelian());
        assert!(r.elements().unwrap().iter().all(|x| x.order() <= 2));
        assert!(p.action().generators().iter().all(|s| r.is_normalized_by(s)));
        assert!(transport(&p, &w, Transport::Right).unwrap().is_regular());
    }
}

#[test]
fn galois_c4_transports_to_itself() {
    let p = natural("4T1");
    let ws = byott_embeddings(&p, entry(4, "C4"), &Budget::default()).unwrap();
    assert_eq!(ws.len(), 1);
    assert!(byott_to_regular(&p, &ws[0]).unwrap().same_group(p.action()));
}

#[test]
fn frobenius_twenty_in_degree_ten() {
    let f5 = transitive("5T3");
    let gpp = inside_stabilizer(&f5, 2, |_| true);
    let p = ExtensionProblem::new(f5, gpp).unwrap();
    assert_eq!(p.degree(), 10);
    let c10 = entry(10, "C10");
    let d10 = entry(10, "D10");
    assert_eq!(c10.holomorph().unwrap().order(), 40);
    assert_eq!(d10.holomorph().unwrap().order(), 200);
    assert!(!byott_embeddings(&p, c10, &Budget::default()).unwrap().is_empty());
    assert!(!byott_embeddings(&p, d10, &Budget::default()).unwrap().is_empty());
}

#[test]
fn f5_subgroups_of_the_degree_ten_holomorphs() {
    let n1 = grp("(1,2,3,4,5,6,7,8,9,10)", 10);
    let hol1 = normalizer_in(&PermGroup::symmetric(10), &n1).unwrap();
    assert!(hol1.same_group(&grp("(1,2,3,4,5,6,7,8,9,10);(2,4,10,8)(3,7,9,5)", 10)));
    let g = grp("(1,2,5,4)(3,8)(6,7,10,9);(1,3,5,7,9)(2,4,6,8,10)", 10);
    assert!(g.is_subgroup_of(&hol1) && g.is_transitive() && g.order() == 20);

    let n2 = grp("(1,7)(2,8)(3,4)(5,9)(6,10);(1,6,4,9,8)(2,5,3,10,7)", 10);
    let hol2 = grp("(1,7)(2,8)(3,4)(5,9)(6,10);(2,5,3,10,7);(2,3,5,7)(4,8,9,6)", 10);
    assert_eq!(hol2.order(), 200);
    assert!(n2.is_subgroup_of(&hol2) && n2.is_normal_in(&hol2));
    let g = grp("(1,7,8,5)(2,4)(3,9,10,6);(1,4,8,6,9)(2,10,5,7,3)", 10);
    assert!(g.is_subgroup_of(&hol2) && g.is_transitive() && g.order() == 20);
    let f5 = transitive("5T3");
    assert!(is_isomorphic(&g, &f5).unwrap().is_some());
}

#[test]
fn s4_6c_degree_twelve_cycle_type_obstruction() {
    let g = transitive("6T8");
    let gpp = inside_stabilizer(&g, 2, |_| true);
    let p = ExtensionProblem::new(g, gpp).unwrap();
    assert_eq!(p.degree(), 12);
    let order_four: Vec<Vec<usize>> = p
        .action()
        .elements()
        .unwrap()
        .into_iter()
        .filter(|x| x.order() == 4)
        .map(|x| x.cycle_type())
        .collect();
    assert!(!order_four.is_empty());
    assert!(order_four.iter().all(|t| t == &vec![4, 4, 2, 2]));
    for e in catalog::groups_of_order(12).unwrap() {
        let s = byott_search(&p, e, &Budget::default()).unwrap();
        assert!(s.witnesses.is_empty());
        let ob = s.obstruction.expect("obstruction");
        assert!(matches!(&ob.kind, ObstructionKind::CycleTypes(t) if t.contains(&vec![4, 4, 2, 2])), "{ob}");
        assert!(!e.holomorph().unwrap().element_index().unwrap().has_cycle_type(&[4, 4, 2, 2]));
    }
}

#[test]
fn s5_degree_sixty_fixed_point_obstruction() {
    let g = transitive("6T14");
    let gpp = inside_stabilizer(&g, 2, |_| true);
    let p = ExtensionProblem::new(g, gpp.clone()).unwrap();
    assert_eq!(p.degree(), 60);
    // the involution of G'' fixes 4 cosets
    let sigma = p.lambda(&gpp.generators()[0]).unwrap();
    assert_eq!(sigma.fixed_point_count(), 4);
    let a5 = entry(60, "A5");
    let s = byott_search(&p, a5, &Budget::default()).unwrap();
    assert!(s.witnesses.is_empty());
    assert!(matches!(s.obstruction.unwrap().kind, ObstructionKind::CycleTypes(_)));
    // the transitive copies of S5 in Hol(A5) have point stabilizers
    // generated by an involution with 6 fixed points
    let hol = a5.holomorph().unwrap();
    let constraints = MonomorphismConstraints {
        transitive_image: true,
        ..Default::default()
    };
    let found = find_monomorphisms(&PermGroup::symmetric(5), &hol.group, &constraints, &Budget::default()).unwrap();
    assert!(!found.is_empty());
    for h in found {
        let stab = h.image().stabilizer(0);
        assert_eq!(stab.order(), 2);
        assert_eq!(stab.generators()[0].fixed_point_count(), 6);
    }
}

#[test]
fn hol_of_d12_and_dic3_are_isomorphic() {
    let a = entry(12, "D12").holomorph().unwrap();
    let b = entry(12, "Dic3").holomorph().unwrap();
    assert_eq!(a.order(), 144);
    assert_eq!(b.order(), 144);
    assert!(is_isomorphic(&a.group, &b.group).unwrap().is_some());
}
