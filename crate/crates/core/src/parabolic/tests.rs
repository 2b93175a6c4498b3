use super::*;
use crate::coxeter::catalog::{dihedral, type_a, type_b};
use crate::coxeter::{parse_system, reflection_element};
use crate::label::Label;

fn el(sys: &CoxeterSystem, word: &[usize]) -> GroupElement {
    GroupElement::from_word(sys, word).unwrap()
}

#[test]
fn conjugated_simple_root() {
    let a2 = type_a(2);
    let d = ParabolicDescriptor::new(&el(&a2, &[1]), &[0]);
    assert_eq!(d.canonical_roots(), vec![RootVector::from_ints(&a2, &[1, 1])]);
    let id = ParabolicDescriptor::standard(&a2, &[0, 1]);
    assert_eq!(id.canonical_roots(), vec![RootVector::simple(&a2, 0), RootVector::simple(&a2, 1)]);
}

#[test]
fn descriptor_is_coset_minimal() {
    let a2 = type_a(2);
    // s2 s1 W_{s1} = s2 W_{s1}
    let d = ParabolicDescriptor::new(&el(&a2, &[1, 0]), &[0]);
    assert_eq!(d.w().word(), &[1]);
}

#[test]
fn a2_rank_one_intersection_is_trivial() {
    let a2 = type_a(2);
    let d1 = ParabolicDescriptor::standard(&a2, &[0]);
    let d2 = ParabolicDescriptor::new(&el(&a2, &[1]), &[0]);
    let x = intersect_parabolics_finite(&d1, &d2).unwrap();
    assert!(x.k.is_empty());
    assert_eq!(x.descriptor.rank(), 0);
    let same = intersect_parabolics_finite(&d1, &d1).unwrap();
    assert!(same.descriptor.same_subgroup(&d1));
}

#[test]
fn containment_intersection() {
    let g2 = dihedral(Label::Finite(6));
    let s = ParabolicDescriptor::standard(&g2, &[0]);
    let x = intersect_parabolics_finite(&s, &ParabolicDescriptor::whole(&g2)).unwrap();
    assert!(x.descriptor.same_subgroup(&s));
}

#[test]
fn closures_in_a2() {
    let a2 = type_a(2);
    let refl = reflection_element(&a2, &RootVector::from_ints(&a2, &[1, 1]));
    let d = parabolic_closure_finite(&a2, &[refl.clone()]).unwrap();
    assert_eq!(d.w().word(), &[1]);
    assert_eq!(d.subset(), &[0]);
    let all = all_parabolics(&a2).unwrap();
    assert!(brute_force_closure(&all, &[refl]).unwrap().same_subgroup(&d));

    let whole = parabolic_closure_finite(&a2, &[el(&a2, &[0, 1])]).unwrap();
    assert_eq!(whole.rank(), 2);
    let triv = parabolic_closure_finite(&a2, &[GroupElement::identity(&a2)]).unwrap();
    assert_eq!(triv.rank(), 0);
    assert!(triv.w().is_identity());
}

#[test]
fn a2_has_five_parabolics() {
    // trivial, one rank-one subgroup per reflection, and W
    let all = all_parabolics(&type_a(2)).unwrap();
    assert_eq!(all.len(), 5);
    let b3 = all_parabolics(&type_b(3)).unwrap();
    assert!(b3.iter().all(|d| canonical_descriptor(d).unwrap() == *d));
}

#[test]
fn standard_parabolic_is_parabolic() {
    let b3 = type_b(3);
    let g = ReflectionSubgroup::standard(&b3, &[0, 2]);
    match is_parabolic(&g, &ParabolicSearch::default()) {
        ParabolicVerdict::Yes { u, subset, .. } => {
            assert!(u.is_identity());
            assert_eq!(subset, vec![0, 2]);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn g2_orthogonal_pair_not_parabolic() {
    let g2 = dihedral(Label::Finite(6));
    let tstst = el(&g2, &[1, 0, 1, 0, 1]);
    let g = ReflectionSubgroup::from_reflections(&g2, &[el(&g2, &[0]), tstst]).unwrap();
    assert!(is_parabolic(&g, &ParabolicSearch::default()).is_no());
}

#[test]
fn dependent_roots_rejected() {
    let a2 = type_a(2);
    let roots = vec![
        RootVector::simple(&a2, 0),
        RootVector::simple(&a2, 1),
        RootVector::from_ints(&a2, &[1, 1]),
    ];
    assert!(is_parabolic_roots(&a2, &roots, &ParabolicSearch::default()).is_no());
}

#[test]
fn maximal_finite_in_affine_a2() {
    let sys = parse_system("nodes s1 s2 s3; edge s1 s2 3; edge s2 s3 3; edge s1 s3 3").unwrap();
    assert_eq!(maximal_finite_parabolic_over(&sys, &[0]).unwrap(), vec![0, 1]);
    let mixed = parse_system("nodes a b c; edge a b 3; edge b c oo").unwrap();
    assert_eq!(maximal_finite_parabolic_over(&mixed, &[2]).unwrap(), vec![0, 2]);
    assert!(maximal_finite_parabolic_over(&mixed, &[1, 2]).is_err());
    let a3 = type_a(3);
    assert_eq!(maximal_finite_parabolic_over(&a3, &[0, 1, 2]).unwrap(), vec![0, 1, 2]);
}

#[test]
fn contains_and_subgroup() {
    let a3 = type_a(3);
    let d = ParabolicDescriptor::new(&el(&a3, &[2]), &[0, 1]);
    for x in [el(&a3, &[2, 0, 2]), el(&a3, &[2, 1, 2])] {
        assert!(d.contains(&x));
    }
    assert!(!d.contains(&el(&a3, &[2])));
    assert!(ParabolicDescriptor::trivial(&a3).is_subgroup_of(&d));
    assert!(d.is_subgroup_of(&ParabolicDescriptor::whole(&a3)));
}
