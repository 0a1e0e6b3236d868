use super::*;
use proptest::prelude::*;

#[test]
fn triangular_scheme_both_ways() {
    let direct = triangular(10).unwrap();
    let orbital = orbital_scheme(&symmetric_group_on_pairs(10), 45).unwrap();
    assert_eq!(direct.relation_matrix(), orbital.relation_matrix());
    assert_eq!(direct.d(), 2);
    assert_eq!(direct.valencies(), &[1, 16, 28]);
    assert!(direct.is_symmetric());
    let p = direct.intersection_numbers(Verification::Exhaustive).unwrap();
    direct.check_identities(&p).unwrap();
    assert!(direct.is_commutative(&p));
    // 2-subsets sharing one point: class 1 is "meet in one point"
    assert_eq!(direct.class(0, 1), 1);
    assert_eq!(p.get(1, 1, 1), 8);
    let orderings = direct.p_polynomial_orderings();
    // any connected strongly regular graph works, so the Kneser complement does too
    assert_eq!(orderings, vec![vec![0, 1, 2], vec![0, 2, 1]]);
    // J(10,2): {2(n-2), n-3; 1, 4}
    let (b, c) = direct.intersection_array(&p, &orderings[0]);
    assert_eq!((b, c), (vec![16, 7], vec![1, 4]));
}

#[test]
fn triangular_valencies() {
    for m in 5..12 {
        let t = triangular(m).unwrap();
        assert_eq!(t.valencies()[1..], [2 * (m - 2), (m - 2) * (m - 3) / 2]);
    }
}

#[test]
fn intransitive_actions_are_rejected() {
    assert_eq!(orbital_scheme(&[Permutation::identity(6)], 6), Err(Error::NotTransitive { orbits: 6, n: 6 }));
    assert_eq!(orbital_scheme(&[], 3), Err(Error::NotTransitive { orbits: 3, n: 3 }));
}

#[test]
fn malformed_relations_are_rejected() {
    // diagonal shared with an off-diagonal pair
    assert!(Scheme::from_relation(2, &[0, 0, 1, 0]).is_err());
    // transpose of class 1 splits
    assert!(Scheme::from_relation(3, &[0, 1, 2, 1, 0, 1, 1, 2, 0]).is_err());
    // unequal row counts
    assert!(Scheme::from_relation(3, &[0, 1, 1, 1, 0, 2, 1, 2, 0]).is_err());
    assert!(Scheme::from_relation(2, &[0, 1, 1]).is_err());
    assert!(Permutation::new(vec![0, 0]).is_err());
    assert!(Permutation::new(vec![0, 2]).is_err());
}

#[test]
fn classes_follow_least_row_major_representative() {
    // a 5-cycle: classes are "distance 1 clockwise", 2, 3, 4
    let cycle = Permutation::new(vec![1, 2, 3, 4, 0]).unwrap();
    let s = orbital_scheme(&[cycle], 5).unwrap();
    for y in 0..5 {
        assert_eq!(s.class(0, y), y);
        assert_eq!(s.representative(y), (0, y));
    }
    assert!(!s.is_symmetric());
    assert_eq!(s.transpose_map(), &[0, 4, 3, 2, 1]);
    let p = s.intersection_numbers(Verification::Exhaustive).unwrap();
    s.check_identities(&p).unwrap();
    assert!(s.is_commutative(&p));
    assert!(s.p_polynomial_orderings().is_empty());
}

#[test]
fn fusion_checks() {
    let t = triangular(7).unwrap();
    let id: Vec<usize> = (0..t.rank()).collect();
    assert!(is_fusion(&t, &t, &id));
    // the complete graph is a fusion of anything
    let all = t.fuse(&[0, 1, 1]).unwrap();
    assert_eq!(all.d(), 1);
    assert!(is_fusion(&all, &t, &[0, 1, 1]));
    assert!(!is_fusion(&t, &t, &[0, 2, 1]));
    assert!(t.fuse(&[0, 0, 1]).is_err());
    assert_eq!(t.refinement_map(&all), Some(vec![0, 1, 1]));
    assert_eq!(all.refinement_map(&t), None);
    // directed 7-cycle: fusing i with -i gives the symmetrized scheme,
    // fusing {1,2} with {3,...} does not give a scheme
    let cycle = Permutation::new(vec![1, 2, 3, 4, 5, 6, 0]).unwrap();
    let c7 = orbital_scheme(&[cycle], 7).unwrap();
    let sym = [0, 1, 2, 3, 3, 2, 1];
    let coarse = c7.fuse(&sym).unwrap();
    assert!(is_fusion(&coarse, &c7, &sym));
    assert!(coarse.is_symmetric());
    assert!(c7.fuse(&[0, 1, 1, 2, 2, 2, 2]).is_err());
}

#[test]
fn relabeling_detection() {
    let t = triangular(6).unwrap();
    assert_eq!(t.equal_up_to_relabel(&t), Some(vec![0, 1, 2]));
    let swap: Vec<u32> = {
        let subsets = two_subsets(6);
        let g = symmetric_group_on_pairs(6);
        let _ = subsets;
        g[0].images().to_vec()
    };
    assert_eq!(t.matches_under(&t, &swap), Some(vec![0, 1, 2]));
}

proptest! {
    #[test]
    fn permutation_group_laws(v in Just((0u32..12).collect::<Vec<_>>()).prop_shuffle(),
                              w in Just((0u32..12).collect::<Vec<_>>()).prop_shuffle()) {
        let g = Permutation::new(v).unwrap();
        let h = Permutation::new(w).unwrap();
        prop_assert_eq!(g.compose(&g.inverse()), Permutation::identity(12));
        for i in 0..12 {
            prop_assert_eq!(g.compose(&h).apply(i), g.apply(h.apply(i)));
        }
    }

    #[test]
    fn orbital_schemes_of_random_transitive_groups(v in Just((0u32..10).collect::<Vec<_>>()).prop_shuffle()) {
        // a 10-cycle plus a random permutation is transitive
        let cycle = Permutation::new((1..=10).map(|i| i % 10).collect()).unwrap();
        let g = Permutation::new(v).unwrap();
        let s = orbital_scheme(&[cycle, g], 10).unwrap();
        let p = s.intersection_numbers(Verification::Exhaustive).unwrap();
        prop_assert!(s.check_identities(&p).is_ok());
        prop_assert_eq!(s.valencies().iter().sum::<usize>(), 10);
    }
}
