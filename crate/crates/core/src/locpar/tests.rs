use super::*;
use crate::coxeter::catalog::{dihedral, type_a};
use crate::coxeter::{parse_system, reflection_element, RootVector};
use crate::label::Label;

#[test]
fn recognizes_small_types() {
    let cases = [
        ("nodes a", "A1", Some(2u64)),
        ("nodes a b c; edge a b 3; edge b c 3", "A3", Some(24)),
        ("nodes a b c; edge a b 4; edge b c 4", "infinite", None),
        ("nodes a b c; edge a b 4; edge b c 3", "B3", Some(48)),
        ("nodes a b c d; edge a b 3; edge b c 4; edge c d 3", "F4", Some(1152)),
        ("nodes a b c d; edge a c 3; edge b c 3; edge c d 3", "D4", Some(192)),
        ("nodes a b; edge a b 6", "G2", Some(12)),
        ("nodes a b; edge a b 8", "I2(8)", Some(16)),
        ("nodes a b c; edge a b 5; edge b c 3", "H3", Some(120)),
        ("nodes a b c; edge a b 3", "A2 x A1", Some(12)),
    ];
    for (dsl, label, order) in cases {
        let sys = parse_system(dsl).unwrap();
        let t = finite_type_recognize(&sys.graph());
        assert_eq!(t.label(), label, "{dsl}");
        assert_eq!(t.order().map(|o| o.to_string()), order.map(|o| o.to_string()), "{dsl}");
    }
}

#[test]
fn enumeration_matches_table() {
    for dsl in [
        "nodes a b c; edge a b 3; edge b c 3",
        "nodes a b c; edge a b 4; edge b c 3",
        "nodes a b; edge a b 6",
    ] {
        let g = parse_system(dsl).unwrap().graph();
        assert_eq!(order_by_enumeration(&g, 500, 100_000), finite_type_recognize(&g).order());
    }
    let affine = parse_system("nodes a b c; edge a b 4; edge b c 4").unwrap().graph();
    assert_eq!(order_by_enumeration(&affine, 500, 100_000), None);
}

#[test]
fn standard_subgroup_fully_certified() {
    let a3 = type_a(3);
    let g = ReflectionSubgroup::standard(&a3, &[0, 2]);
    let r = is_locally_parabolic(&g, 5, &ParabolicSearch::default());
    assert_eq!(r.verdict, LocalVerdict::FullyCertified);
    assert_eq!(r.checked.len(), 3);
}

#[test]
fn g2_pair_counterexample() {
    let g2 = dihedral(Label::Finite(6));
    let tstst = GroupElement::from_word(&g2, &[1, 0, 1, 0, 1]).unwrap();
    let s = GroupElement::simple(&g2, 0);
    let g = ReflectionSubgroup::from_reflections(&g2, &[s, tstst]).unwrap();
    let r = is_locally_parabolic(&g, 2, &ParabolicSearch::default());
    assert_eq!(r.verdict, LocalVerdict::Counterexample(vec![0, 1]));
    let r1 = is_locally_parabolic(&g, 1, &ParabolicSearch::default());
    assert_eq!(r1.verdict, LocalVerdict::CertifiedUpTo(1));
}

#[test]
fn closure_of_reflection_in_a2() {
    let a2 = type_a(2);
    let x = reflection_element(&a2, &RootVector::from_ints(&a2, &[1, 1]));
    let c = lp_closure(&a2, &[x]).unwrap();
    assert_eq!(c.descriptor.w().word(), &[1]);
    assert_eq!(c.descriptor.subset(), &[0]);
    let s1 = lp_closure(&a2, &[GroupElement::simple(&a2, 0)]).unwrap();
    assert_eq!(s1.subgroup().rank(), 1);
}

#[test]
fn closure_along_tower() {
    let tower: Vec<_> = (3..=6).map(type_a).collect();
    let words = vec![vec!["s2".to_string(), "s1".to_string(), "s2".to_string()]];
    let c = lp_closure_tower(&tower, &words).unwrap();
    assert_eq!(c.descriptor.rank(), 1);
    assert_eq!(
        c.evidence,
        ClosureEvidence::Tower {
            ranks: vec![3, 4, 5, 6],
            stable_from: 3
        }
    );
    assert!(matches!(lp_closure_tower(&tower[..2], &words), Err(Error::NotStabilized(_))));
}

#[test]
fn classify_finite_and_not() {
    let inf = parse_system("nodes a b; edge a b oo").unwrap();
    assert_eq!(locally_finite_classify(&inf).verdict, Finiteness::NotLocallyFinite);
    let a3 = type_a(3);
    let c = locally_finite_classify(&a3);
    assert_eq!(c.verdict, Finiteness::LocallyFinite);
    assert_eq!(c.label(), "A3");
}
