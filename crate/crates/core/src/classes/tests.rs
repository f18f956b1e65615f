use alloc::vec;

use super::*;
use crate::algebra::module::{projective, simple};
use crate::fixtures::{corner, nakayama, sigma_module};
use crate::homology::lambda_ext1_dim;
use crate::morita::{
    h_a, h_b, lambda_injectives, lambda_projectives, lambda_simples, t_a, t_b, z_a,
};

#[test]
fn sigma_module_memberships() {
    let d = corner(3);
    let l = sigma_module(&d);
    assert!(in_mon(&l) && in_epi(&l));
    let col = LambdaClass::Column(ClassSpec::injectives(&d.a), ClassSpec::injectives(&d.b));
    assert!(col.contains(&l).unwrap());
    let z = z_a(&d, &projective(&d.a, 0));
    assert!(!in_mon(&z) && !in_epi(&z));
    assert!(!is_left_orthogonal(&l, &[l.clone()]));
    assert!(lambda_ext1_dim(&l, &l) > 0);
}

#[test]
fn projectives_lie_in_delta_and_injectives_in_nabla() {
    let d = corner(3);
    let (pa, pb) = (ClassSpec::projectives(&d.a), ClassSpec::projectives(&d.b));
    let (ia, ib) = (ClassSpec::injectives(&d.a), ClassSpec::injectives(&d.b));
    for p in lambda_projectives(&d) {
        assert!(in_delta(&p, &pa, &pb).unwrap());
        assert!(LambdaClass::TSum(pa.clone(), pb.clone())
            .contains(&p)
            .unwrap());
    }
    for i in lambda_injectives(&d) {
        assert!(in_nabla(&i, &ia, &ib).unwrap());
        assert!(LambdaClass::HSum(ia.clone(), ib.clone())
            .contains(&i)
            .unwrap());
    }
}

#[test]
fn zero_lists_give_only_zero() {
    let d = corner(3);
    let zero_a = ClassSpec::new(&d.a, ClassKind::FiniteList(vec![])).unwrap();
    let zero_b = ClassSpec::new(&d.b, ClassKind::FiniteList(vec![])).unwrap();
    let cls = LambdaClass::Delta(zero_a, zero_b);
    assert!(cls
        .contains(&crate::morita::LambdaModule::zero(&d))
        .unwrap());
    for s in lambda_simples(&d).unwrap() {
        assert!(!cls.contains(&s).unwrap());
    }
    assert!(!cls.contains(&sigma_module(&d)).unwrap());
}

#[test]
fn class_over_wrong_algebra_is_rejected() {
    let d = corner(3);
    let other = crate::fixtures::a2(5);
    let l = sigma_module(&d);
    assert!(in_column(&l, &ClassSpec::all(&other), &ClassSpec::all(&d.b)).is_err());
    assert!(ClassSpec::projectives(&other).contains(&l.x).is_err());
}

#[test]
fn delta_decomposition_recovers_summands() {
    let d = corner(3);
    let u = simple(&d.a, 1).unwrap();
    let v = projective(&d.b, 0);
    let sum = crate::morita::lambda_direct_sum(&d, &[&t_a(&d, &u), &t_b(&d, &v)]).module;
    let dec = decompose::delta_splits(&sum).unwrap().expect("splits");
    assert!(dec.verify(&sum));
    assert!(crate::algebra::module::isomorphic(&dec.first, &u, 0).is_iso());
    assert!(crate::algebra::module::isomorphic(&dec.second, &v, 0).is_iso());
    let l = sigma_module(&d);
    let got = delta_decompose(
        &l,
        &ClassSpec::all(&d.a),
        &ClassSpec::all(&d.b),
        &ClassSpec::injectives(&d.a),
        &ClassSpec::injectives(&d.b),
    )
    .unwrap();
    assert!(got.is_none());
}

#[test]
fn nabla_decomposition_recovers_summands() {
    let d = corner(3);
    let x = simple(&d.a, 0).unwrap();
    let y = projective(&d.b, 1);
    let sum = crate::morita::lambda_direct_sum(&d, &[&h_a(&d, &x), &h_b(&d, &y)]).module;
    let dec = decompose::nabla_splits(&sum).unwrap().expect("splits");
    assert!(dec.verify(&sum));
    assert_eq!(dec.first.dim(), x.dim());
    assert_eq!(dec.second.dim(), y.dim());
}

#[test]
fn nakayama_corner_is_certified() {
    let d = nakayama(3);
    assert_eq!(d.lambda.dim(), 20);
    let c = GorensteinCert::certify(&d).unwrap();
    assert!(c.hypotheses.holds());
    for p in lambda_projectives(&d) {
        assert!(c.gp_member(&p) && in_mon(&p));
    }
    let z = z_a(&d, &projective(&d.a, 0));
    assert_eq!(c.gp_member(&z), in_mon(&z));
    assert!(GorensteinCert::certify(&corner(3)).is_err());
}

#[test]
fn frobenius_triple_on_nakayama_corner() {
    let d = nakayama(3);
    let mut ws = lambda_simples(&d).unwrap();
    ws.extend(lambda_projectives(&d));
    let specs = [
        HoveySpec::frobenius_b_cofibrant(&d).unwrap(),
        HoveySpec::frobenius_b_fibrant(&d).unwrap(),
        HoveySpec::frobenius_a_cofibrant(&d).unwrap(),
        HoveySpec::frobenius_a_fibrant(&d).unwrap(),
        HoveySpec::projective_b(&d).unwrap(),
    ];
    for spec in &specs {
        for c in hovey_ingredients_check(spec, &ws, &[]).unwrap() {
            assert!(c.ok, "{}: {c:?}", spec.name);
        }
    }
    let spec = &specs[0];
    let mut bad = spec.clone();
    bad.trivially_fibrant = LambdaClass::All;
    let checks = hovey_ingredients_check(&bad, &ws, &[]).unwrap();
    assert!(checks.iter().any(|c| c.name == "orthogonality/2" && !c.ok));
}

#[test]
fn frobenius_triples_need_self_injective_side() {
    let d = corner(3);
    assert!(HoveySpec::frobenius_b_cofibrant(&d).is_err());
    assert!(HoveySpec::projective_b(&d).is_ok());
}
