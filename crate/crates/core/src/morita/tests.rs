use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::algebra::module::{
    hom_dim, hom_space, isomorphic, projective, projectives, regular, simple, simples,
};
use crate::algebra::{Bimodule, ModMap, Module};
use crate::field::Fp;
use crate::fixtures::{a2, corner, sigma_module};

#[test]
fn corner_ring_has_dimension_eight() {
    let d = corner(3);
    assert_eq!(d.lambda.dim(), 8);
    assert!(d.mn_zero && d.nm_zero);
    d.lambda.check_axioms().unwrap();
    let v = d.validate();
    assert!(v.valid() && v.problems.is_empty());
}

#[test]
fn full_ring_has_nonvanishing_tensor() {
    let a = a2(3);
    let reg = Bimodule::regular(&a);
    let d = MoritaData::new(a.clone(), a.clone(), reg.clone(), reg).unwrap();
    assert!(d.validate().valid());
    assert!(!d.mn_zero && !d.nm_zero);
    assert_eq!(d.lambda.dim(), 12);
    d.lambda.check_axioms().unwrap();
}

#[test]
fn zero_bimodules_vanish() {
    let a = a2(2);
    let z = Bimodule::zero(&a, &a);
    let d = MoritaData::new(a.clone(), a.clone(), z.clone(), z).unwrap();
    assert!(d.tensors_vanish());
    assert_eq!(d.lambda.dim(), 6);
}

#[test]
fn t_a_of_p1() {
    let d = corner(3);
    let l = t_a(&d, &projective(&d.a, 0));
    assert_eq!(l.dims(), (2, 1));
    assert!(isomorphic(&l.y, &simple(&d.b, 1).unwrap(), 0).is_iso());
}

#[test]
fn z_a_of_s2_is_t_a() {
    let d = corner(3);
    let s2 = simple(&d.a, 1).unwrap();
    assert_eq!(z_a(&d, &s2), t_a(&d, &s2));
}

#[test]
fn h_b_of_zero_is_zero() {
    let d = corner(3);
    assert!(h_b(&d, &Module::zero(&d.b)).is_zero());
}

#[test]
fn sigma_adjoint_is_the_top_projection() {
    let d = corner(3);
    let l = sigma_module(&d);
    assert_eq!(l.hmy.module.dims, [1, 0]);
    assert!(l.ft.is_epi());
    let (k, _) = crate::algebra::module::kernel(&l.x, &l.ft);
    assert!(isomorphic(&k, &simple(&d.a, 1).unwrap(), 0).is_iso());
    l.check_second_expression().unwrap();
}

#[test]
fn flatten_round_trip() {
    let d = corner(3);
    let l = sigma_module(&d);
    let z = l.flatten();
    z.validate().unwrap();
    assert_eq!(z.dim(), 4);
    let back = LambdaModule::unflatten(&d, &z).unwrap();
    assert_eq!(back, l);
}

#[test]
fn projectives_sum_to_regular() {
    let d = corner(3);
    let ta = t_a(&d, &regular(&d.a));
    let tb = t_b(&d, &regular(&d.b));
    let s = lambda_direct_sum(&d, &[&ta, &tb]);
    let z = s.module.flatten();
    assert_eq!(z.dim(), 8);
    assert!(isomorphic(&z, &regular(&d.lambda), 0).is_iso());
    for (v, p) in lambda_projectives(&d).iter().enumerate() {
        assert!(isomorphic(&p.flatten(), &projective(&d.lambda, v), 1).is_iso());
    }
}

#[test]
fn injectives_match_materialized() {
    let d = corner(3);
    for (v, i) in lambda_injectives(&d).iter().enumerate() {
        let j = crate::algebra::module::injective(&d.lambda, v);
        assert!(isomorphic(&i.flatten(), &j, 2).is_iso(), "vertex {v}");
    }
}

#[test]
fn cokernel_and_kernel_functors_vanish() {
    let d = corner(3);
    for v in projectives(&d.b) {
        let (c, _) = c(&t_b(&d, &v), Side::A);
        assert_eq!(c.dim(), 0);
    }
    for x in projectives(&d.a) {
        let (k, _) = k(&h_a(&d, &x), Side::B);
        assert_eq!(k.dim(), 0);
    }
}

#[test]
fn adjunction_dimensions() {
    let d = corner(3);
    let mut ls = vec![sigma_module(&d)];
    ls.extend(lambda_projectives(&d));
    ls.extend(lambda_simples(&d).unwrap());
    let mods_a: Vec<Module<Fp>> = projectives(&d.a)
        .into_iter()
        .chain(simples(&d.a).unwrap())
        .collect();
    for l in &ls {
        for x in &mods_a {
            assert_eq!(lambda_hom_dim(&t_a(&d, x), l), hom_dim(x, &l.x));
            assert_eq!(lambda_hom_dim(l, &h_a(&d, x)), hom_dim(&l.x, x));
            assert_eq!(lambda_hom_dim(&z_a(&d, x), l), hom_dim(x, &k(l, Side::A).0));
            assert_eq!(lambda_hom_dim(l, &z_a(&d, x)), hom_dim(&c(l, Side::A).0, x));
            assert_eq!(lambda_hom_dim(&t_b(&d, x), l), hom_dim(x, &l.y));
            assert_eq!(lambda_hom_dim(l, &h_b(&d, x)), hom_dim(&l.y, x));
            assert_eq!(lambda_hom_dim(&z_b(&d, x), l), hom_dim(x, &k(l, Side::B).0));
            assert_eq!(lambda_hom_dim(l, &z_b(&d, x)), hom_dim(&c(l, Side::B).0, x));
        }
    }
}

#[test]
fn simples_are_one_dimensional() {
    let d = corner(3);
    let ss = lambda_simples(&d).unwrap();
    assert_eq!(ss.len(), 4);
    for s in &ss {
        assert_eq!(s.dim(), 1);
    }
    for (i, s) in ss.iter().enumerate() {
        for (j, t) in ss.iter().enumerate() {
            assert_eq!(lambda_hom_dim(s, t), usize::from(i == j));
        }
    }
}

#[test]
fn morphism_squares_agree() {
    let d = corner(3);
    let l = sigma_module(&d);
    let p = t_a(&d, &projective(&d.a, 0));
    let hs = lambda_hom_space(&p, &l);
    // T_A is left adjoint to U_A
    assert_eq!(hs.dim(), hom_dim(&p.x, &l.x));
    assert_eq!(hs.dim(), 1);
    for m in hs.basis() {
        let phi = LambdaMap::unflatten(&d, &m);
        assert!(phi.is_morphism(&p, &l));
        assert!(phi.is_morphism_second(&p, &l));
    }
    // a pair that is componentwise fine but breaks the square
    let hx = hom_space(&p.x, &l.x);
    let bad = LambdaMap {
        a: hx.basis_map(0),
        b: ModMap::zero(d.field(), &p.y.dims, &l.y.dims),
    };
    assert!(!bad.is_morphism(&p, &l));
    assert!(!bad.is_morphism_second(&p, &l));
}

#[test]
fn kernel_and_cokernel_are_exact() {
    let d = corner(3);
    let l = sigma_module(&d);
    let p = t_a(&d, &projective(&d.a, 0));
    let hs = lambda_hom_space(&p, &l);
    let phi = LambdaMap::unflatten(&d, &hs.basis_map(0));
    let (_, i) = lambda_kernel(&p, &phi);
    let (_, q) = lambda_cokernel(&l, &phi);
    assert!(is_exact_sequence(&[&i, &phi, &q]));
    assert!(i.is_mono() && q.is_epi());
}
