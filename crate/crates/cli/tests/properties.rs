use std::sync::Arc;

use morita_core::algebra::module::{hom_dim, isomorphic};
use morita_core::homology::{
    ext, ext1_dim, is_injective, is_projective, is_projective_by_ext, lambda_ext1_dim,
    lambda_ext1_dim_quadruple, lambda_is_projective, splits,
};
use morita_core::morita::{
    c, h_a, h_b, k, lambda_projectives, lambda_simples, t_a, t_b, u, z_a, z_b, Side,
};
use morita_core::{Fp, Q};
use morita_lab::catalog::{catalog, CatalogInstance, NakayamaParams, NAMES};
use morita_lab::format::{self, to_canonical, Loader};
use morita_lab::sample::{SampleConfig, Sampler};
use morita_lab::suites::{quadruple_hom_dim, run_suite};
use proptest::prelude::*;

fn instance(name: &str, p: u64) -> CatalogInstance<Fp> {
    catalog(name, &Fp::new(p).unwrap(), NakayamaParams::default()).unwrap()
}

fn sampler(seed: u64) -> Sampler {
    Sampler::new(SampleConfig {
        seed,
        count: 1,
        dim_cap: 8,
        rank_cap: 3,
    })
}

fn any_instance() -> impl Strategy<Value = &'static str> {
    prop::sample::select(NAMES.to_vec())
}

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn six_adjunctions_on_dimensions(name in any_instance(), p in prime(), seed: u64) {
        let inst = instance(name, p);
        let d = &inst.data;
        let mut s = sampler(seed);
        let l = s.lambda_module(d);
        let (x, y) = (s.module(&d.a), s.module(&d.b));
        let hl = |a: &_, b: &_| quadruple_hom_dim(a, b);
        prop_assert_eq!(hl(&t_a(d, &x), &l), hom_dim(&x, &u(&l, Side::A)));
        prop_assert_eq!(hl(&t_b(d, &y), &l), hom_dim(&y, &u(&l, Side::B)));
        prop_assert_eq!(hl(&l, &h_a(d, &x)), hom_dim(&u(&l, Side::A), &x));
        prop_assert_eq!(hl(&l, &h_b(d, &y)), hom_dim(&u(&l, Side::B), &y));
        prop_assert_eq!(hl(&z_a(d, &x), &l), hom_dim(&x, &k(&l, Side::A).0));
        prop_assert_eq!(hl(&z_b(d, &y), &l), hom_dim(&y, &k(&l, Side::B).0));
        prop_assert_eq!(hom_dim(&c(&l, Side::A).0, &x), hl(&l, &z_a(d, &x)));
        prop_assert_eq!(hom_dim(&c(&l, Side::B).0, &y), hl(&l, &z_b(d, &y)));
    }

    #[test]
    fn flatten_preserves_hom_dimensions(name in any_instance(), p in prime(), seed: u64) {
        let inst = instance(name, p);
        let mut s = sampler(seed);
        let (l, t) = (s.lambda_module(&inst.data), s.lambda_module(&inst.data));
        prop_assert_eq!(quadruple_hom_dim(&l, &t), hom_dim(&l.flatten(), &t.flatten()));
    }

    #[test]
    fn projective_by_shape_is_projective_by_ext(name in any_instance(), p in prime(), seed: u64) {
        let inst = instance(name, p);
        let mut s = sampler(seed);
        let l = s.lambda_module(&inst.data);
        prop_assert_eq!(lambda_is_projective(&l), is_projective_by_ext(&l.flatten()).unwrap());
        let x = s.module(&inst.data.a);
        prop_assert_eq!(is_projective(&x), is_projective_by_ext(&x).unwrap());
    }

    #[test]
    fn ext_does_not_depend_on_the_presentation(name in any_instance(), p in prime(), seed: u64) {
        let inst = instance(name, p);
        let mut s = sampler(seed);
        let (l, t) = (s.lambda_module(&inst.data), s.lambda_module(&inst.data));
        let n = ext1_dim(&l.flatten(), &t.flatten());
        prop_assert_eq!(lambda_ext1_dim(&l, &t), n);
        prop_assert_eq!(lambda_ext1_dim_quadruple(&l, &t), n);
    }

    #[test]
    fn ext_vanishes_on_projectives_and_injectives(name in any_instance(), p in prime(), seed: u64) {
        let inst = instance(name, p);
        let d = &inst.data;
        let mut s = sampler(seed);
        let x = s.module(&d.a);
        let (pr, inj) = (s.projective(&d.a), s.injective(&d.a));
        prop_assert!(is_projective(&pr) && is_injective(&inj));
        prop_assert_eq!(ext1_dim(&pr, &x), 0);
        prop_assert_eq!(ext1_dim(&x, &inj), 0);
    }

    #[test]
    fn a_sequence_splits_iff_its_class_vanishes(name in any_instance(), p in prime(), seed: u64) {
        let inst = instance(name, p);
        let mut s = sampler(seed);
        let (x, y) = (s.lambda_module(&inst.data), s.lambda_module(&inst.data));
        let seq = s.extension(&x, &y).flatten();
        let class = ext(&seq.right, &seq.left, 1).class_of(&seq).unwrap();
        prop_assert_eq!(splits(&seq).unwrap(), class.is_zero());
    }

    #[test]
    fn cokernels_of_projectives_are_projective(name in any_instance(), p in prime()) {
        let inst = instance(name, p);
        for l in lambda_projectives(&inst.data) {
            prop_assert!(is_projective(&c(&l, Side::A).0));
            prop_assert!(is_projective(&c(&l, Side::B).0));
        }
    }

    #[test]
    fn simples_come_from_both_sides(name in any_instance(), p in prime()) {
        let inst = instance(name, p);
        let d = &inst.data;
        let ss = lambda_simples(d).unwrap();
        prop_assert_eq!(ss.len(), d.a.num_vertices() + d.b.num_vertices());
        for sm in &ss {
            prop_assert_eq!(sm.x.dim() + sm.y.dim(), 1);
        }
    }

    #[test]
    fn lambda_documents_round_trip(name in any_instance(), p in prime(), seed: u64) {
        let f = Fp::new(p).unwrap();
        let inst = catalog(name, &f, NakayamaParams::default()).unwrap();
        let l = sampler(seed).lambda_module(&inst.data);
        let text = to_canonical(&format::encode_lambda(&l).unwrap());
        let v = serde_json::from_str(&text).unwrap();
        let back = format::decode_lambda(&f, &v, &Loader::default()).unwrap();
        prop_assert_eq!(&back, &l);
        prop_assert_eq!(to_canonical(&format::encode_lambda(&back).unwrap()), text);
    }

    #[test]
    fn identical_configs_give_identical_streams(name in any_instance(), seed: u64) {
        let inst = instance(name, 3);
        let (mut s, mut t) = (sampler(seed), sampler(seed));
        for _ in 0..3 {
            prop_assert_eq!(s.lambda_module(&inst.data), t.lambda_module(&inst.data));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4))]

    #[test]
    fn reports_are_reproducible(suite in prop::sample::select(vec!["equivalence", "adjunction", "orthogonality"]), seed: u64) {
        let inst = instance("a2-corner", 3);
        let cfg = SampleConfig { seed, count: 10, ..SampleConfig::default() };
        prop_assert_eq!(run_suite(suite, &inst, cfg).to_json(), run_suite(suite, &inst, cfg).to_json());
    }
}

#[test]
fn rational_documents_round_trip() {
    let inst = catalog("nakayama-corner", &Q, NakayamaParams::default()).unwrap();
    let mut s = sampler(11);
    for _ in 0..5 {
        let l = s.lambda_module(&inst.data);
        let v = format::encode_lambda(&l).unwrap();
        assert_eq!(
            format::decode_lambda(&Q, &v, &Loader::default()).unwrap(),
            l
        );
    }
}

#[test]
fn adjoint_functors_send_projectives_to_projectives() {
    let inst = instance("nakayama-corner", 3);
    let d: &Arc<_> = &inst.data;
    for pr in morita_core::algebra::module::projectives(&d.a) {
        let tp = t_a(d, &pr);
        assert!(lambda_is_projective(&tp));
        assert!(lambda_projectives(d)
            .iter()
            .any(|q| isomorphic(&q.flatten(), &tp.flatten(), 0).is_iso()));
    }
}
