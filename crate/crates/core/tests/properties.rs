use std::collections::HashSet;

use hopf_galois_core::catalog;
use hopf_galois_core::hopf::{acg_check, classify, gp_oracle, intermediate_problems, oracle_applies, product_embedding, transitivity_compose, ExtensionProblem};
use hopf_galois_core::permcore::{centralizer_in, coset_action, is_isomorphic, normal_subgroups, normalizer_in};
use hopf_galois_core::{PermGroup, Permutation};
use proptest::prelude::*;

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(&v).unwrap())
}

fn small_group() -> impl Strategy<Value = PermGroup> {
    (2usize..=6).prop_flat_map(|n| prop::collection::vec(perm(n), 1..=3).prop_map(move |g| PermGroup::new(n, g).unwrap()))
}

/// Closure by breadth-first multiplication.
fn brute_elements(g: &PermGroup) -> HashSet<Permutation> {
    let mut seen: HashSet<Permutation> = HashSet::from([g.identity()]);
    let mut queue = vec![g.identity()];
    while let Some(x) = queue.pop() {
        for s in g.generators() {
            let y = s.compose(&x).unwrap();
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    seen
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inverse_and_composition_laws(p in perm(7), q in perm(7), x in 0usize..7) {
        prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
        prop_assert_eq!(p.compose(&q).unwrap().inverse(), q.inverse().compose(&p.inverse()).unwrap());
        prop_assert_eq!(p.compose(&q).unwrap().apply(x), p.apply(q.apply(x)));
        prop_assert_eq!(p.pow(p.order() as i64), Permutation::identity(7));
        prop_assert_eq!(Permutation::parse_cycles(&p.to_cycle_string(), 7).unwrap(), p);
    }

    #[test]
    fn chain_order_matches_closure(g in small_group()) {
        let elements = brute_elements(&g);
        prop_assert_eq!(g.order(), elements.len() as u64);
        prop_assert!(elements.iter().all(|x| g.contains(x)));
    }

    #[test]
    fn orbits_partition_the_points(g in small_group()) {
        let orbits = g.orbits();
        prop_assert_eq!(orbits.iter().map(Vec::len).sum::<usize>(), g.degree());
        let all: HashSet<usize> = orbits.iter().flatten().copied().collect();
        prop_assert_eq!(all.len(), g.degree());
        for o in &orbits {
            prop_assert!(g.generators().iter().all(|s| o.iter().all(|&x| o.contains(&s.apply(x)))));
        }
    }

    #[test]
    fn normalizer_and_centralizer_by_definition(h in small_group(), x in perm(6)) {
        let n = h.degree();
        let sym = PermGroup::symmetric(n);
        let norm = normalizer_in(&sym, &h).unwrap();
        let brute_norm = sym.elements().unwrap().into_iter().filter(|g| h.is_normalized_by(g)).count();
        prop_assert_eq!(norm.order(), brute_norm as u64);
        prop_assert!(norm.generators().iter().all(|g| h.is_normalized_by(g)));

        let x = x.restrict(n).unwrap_or_else(|| Permutation::identity(n));
        let cent = centralizer_in(&sym, &x).unwrap();
        let commutes = |g: &Permutation| g.compose(&x).unwrap() == x.compose(g).unwrap();
        let brute_cent = sym.elements().unwrap().iter().filter(|g| commutes(g)).count();
        prop_assert_eq!(cent.order(), brute_cent as u64);
        prop_assert!(cent.generators().iter().all(commutes));
    }

    #[test]
    fn coset_kernel_is_the_core(g in small_group(), pick in any::<prop::sample::Index>()) {
        let elements = g.elements().unwrap();
        let h = PermGroup::new(g.degree(), vec![pick.get(&elements).clone()]).unwrap();
        let action = coset_action(&g, &h).unwrap();
        prop_assert_eq!(action.degree() as u64, g.order() / h.order());
        let largest = normal_subgroups(&g)
            .unwrap()
            .into_iter()
            .filter(|n| n.is_subgroup_of(&h))
            .max_by_key(PermGroup::order)
            .unwrap();
        prop_assert!(action.kernel.same_group(&largest));
        prop_assert_eq!(action.image.order() * action.kernel.order(), g.order());
    }

    #[test]
    fn conjugate_groups_are_isomorphic((pick, x) in (0usize..15).prop_flat_map(|k| {
        let degree = catalog::groups_of_order(24).unwrap()[k].group().degree();
        (Just(k), perm(degree))
    })) {
        let g = catalog::groups_of_order(24).unwrap()[pick].group();
        prop_assert!(is_isomorphic(g, &g.conjugate(&x)).unwrap().is_some());
    }

    #[test]
    fn product_embedding_is_a_homomorphism(s1 in perm(4), s2 in perm(4), t1 in perm(3), t2 in perm(3)) {
        let a = product_embedding(&s1, &Permutation::identity(3));
        let b = product_embedding(&Permutation::identity(4), &t1);
        prop_assert_eq!(a.compose(&b).unwrap(), b.compose(&a).unwrap());
        let lhs = product_embedding(&s1.compose(&s2).unwrap(), &t1.compose(&t2).unwrap());
        let rhs = product_embedding(&s1, &t1).compose(&product_embedding(&s2, &t2)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn classification_is_conjugation_invariant(pick in 0usize..(5 + 5 + 16), x in perm(6)) {
        let all: Vec<_> = (4..=6).flat_map(|n| catalog::transitive_groups(n).unwrap()).collect();
        let g = &all[pick].group;
        let n = g.degree();
        let x = x.restrict(n).unwrap_or_else(|| Permutation::identity(n));
        for ip in intermediate_problems(g, &g.stabilizer(0)).unwrap().into_iter().take(3) {
            let h = ip.problem.subgroup();
            let moved = ExtensionProblem::new(g.conjugate(&x), h.conjugate(&x)).unwrap();
            let a = classify(&ip.problem).unwrap();
            let b = classify(&moved).unwrap();
            prop_assert_eq!(a.verdict, b.verdict);
            prop_assert_eq!(a.exact_structure_count, b.exact_structure_count);
            prop_assert_eq!(a.normal_complements.len(), b.normal_complements.len());
        }
        let a = classify(&ExtensionProblem::from_transitive(g.clone()).unwrap()).unwrap();
        let b = classify(&ExtensionProblem::new(g.conjugate(&x), g.stabilizer(0).conjugate(&x)).unwrap()).unwrap();
        prop_assert_eq!(a.verdict, b.verdict);
        prop_assert_eq!(a.exact_structure_count, b.exact_structure_count);
    }
}

#[test]
fn isomorphism_is_an_equivalence_on_order_twelve() {
    let groups: Vec<&PermGroup> = catalog::groups_of_order(12).unwrap().into_iter().map(|e| e.group()).collect();
    let mut pool: Vec<PermGroup> = groups.iter().map(|g| (*g).clone()).collect();
    // the regular image of each group is another representative of the same class
    for e in catalog::groups_of_order(12).unwrap() {
        pool.push(e.holomorph().unwrap().regular.clone());
    }
    let iso: Vec<Vec<bool>> = pool
        .iter()
        .map(|a| pool.iter().map(|b| is_isomorphic(a, b).unwrap().is_some()).collect())
        .collect();
    for i in 0..pool.len() {
        assert!(iso[i][i]);
        for j in 0..pool.len() {
            assert_eq!(iso[i][j], iso[j][i]);
            for k in 0..pool.len() {
                if iso[i][j] && iso[j][k] {
                    assert!(iso[i][k]);
                }
            }
        }
    }
    // each catalog group matches exactly itself and its own regular image
    for row in iso.iter().take(groups.len()) {
        assert_eq!(row.iter().filter(|&&b| b).count(), 2);
    }
}

fn dihedral(n: usize) -> (PermGroup, Permutation, Permutation) {
    let r = Permutation::from_images(&(0..n).map(|i| (i + 1) % n).collect::<Vec<_>>()).unwrap();
    let s = Permutation::from_images(&(0..n).map(|i| (n - i) % n).collect::<Vec<_>>()).unwrap();
    (PermGroup::new(n, vec![r.clone(), s.clone()]).unwrap(), r, s)
}

#[test]
fn dihedral_rotations_complement_reflections() {
    for n in 3..=8 {
        let (d, r, s) = dihedral(n);
        assert_eq!(d.order(), 2 * n as u64);
        let rot = PermGroup::new(n, vec![r]).unwrap();
        let h = PermGroup::new(n, vec![s]).unwrap();
        assert!(!h.is_normal_in(&d));
        let complements = acg_check(&ExtensionProblem::new(d, h).unwrap()).unwrap();
        assert!(complements.iter().any(|c| c.same_group(&rot)), "n = {n}");
    }
}

#[test]
fn order_two_subgroups_of_symmetric_groups() {
    for n in 3..=6 {
        let sym = PermGroup::symmetric(n);
        let alt = PermGroup::alternating(n);
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        for t in sym.elements().unwrap().into_iter().filter(|t| t.order() == 2) {
            if !seen.insert(t.cycle_type()) {
                continue;
            }
            let h = PermGroup::new(n, vec![t.clone()]).unwrap();
            let complements = acg_check(&ExtensionProblem::new(sym.clone(), h).unwrap()).unwrap();
            if t.is_odd() {
                assert_eq!(complements.len(), 1, "{}", t.to_cycle_string());
                assert!(complements[0].same_group(&alt));
            } else {
                assert!(complements.is_empty(), "{}", t.to_cycle_string());
            }
        }
    }
}

#[test]
fn every_low_degree_tower_composes() {
    let (mut composed, mut relabelled) = (0, 0);
    for n in 4..=6 {
        for t in catalog::transitive_groups(n).unwrap() {
            let g = &t.group;
            let gp = g.stabilizer(0);
            let top = ExtensionProblem::from_transitive(g.clone()).unwrap();
            let ns = gp_oracle(&top).unwrap();
            for ip in intermediate_problems(g, &gp).unwrap() {
                let gpp = ip.problem.subgroup();
                let lower = ExtensionProblem::new(gp.clone(), gpp.clone()).unwrap();
                if !oracle_applies(lower.degree()) {
                    continue;
                }
                for (nw, rw) in ns.iter().flat_map(|nw| gp_oracle(&lower).unwrap().into_iter().map(move |rw| (nw, rw))) {
                    let out = transitivity_compose(g, &gp, gpp, nw, &rw).unwrap();
                    assert_eq!(out.regular.order() as usize, top.degree() * lower.degree());
                    assert!(out.image.generators().iter().all(|s| out.regular.is_normalized_by(s)));
                    composed += 1;
                    relabelled += usize::from(out.block_relabelling.iter().any(|c| !c.is_identity()));
                }
            }
        }
    }
    assert!(composed >= 7, "{composed}");
    // the plain transversal is not always enough
    assert!(relabelled > 0);
}
