//! Fixed counts and outcomes that earlier runs established.

use morita_core::algebra::module::projectives;
use morita_core::classes::in_mon;
use morita_core::homology::lambda_ext1_dim;
use morita_core::morita::{t_a, z_a};
use morita_core::Fp;
use morita_lab::catalog::{catalog, NakayamaParams};
use morita_lab::enumerate::{enumerate_modules, enumerate_small};
use morita_lab::sample::{SampleConfig, Sampler};

fn f2() -> Fp {
    Fp::new(2).unwrap()
}

#[test]
fn product_has_two_nonzero_classes_of_dimension_one() {
    let inst = catalog("product", &f2(), NakayamaParams::default()).unwrap();
    let all = enumerate_small(&inst.data, 1).unwrap();
    assert_eq!(all.iter().filter(|l| l.x.dim() + l.y.dim() > 0).count(), 2);
    assert_eq!(all.len(), 3);
}

#[test]
fn enumeration_counts_up_to_dimension_two() {
    for (name, lambda, a, b) in [("a2-corner", 19, 7, 7), ("product", 6, 3, 3)] {
        let inst = catalog(name, &f2(), NakayamaParams::default()).unwrap();
        let d = &inst.data;
        assert_eq!(enumerate_small(d, 2).unwrap().len(), lambda, "{name}");
        assert_eq!(enumerate_modules(&d.a, 2).unwrap().len(), a, "{name}");
        assert_eq!(enumerate_modules(&d.b, 2).unwrap().len(), b, "{name}");
    }
}

#[test]
fn sampler_reaches_outside_mon_quickly() {
    let inst = catalog("a2-corner", &Fp::new(3).unwrap(), NakayamaParams::default()).unwrap();
    let mut s = Sampler::new(SampleConfig::default());
    let first = (1..=50).find(|_| !in_mon(&s.lambda_module(&inst.data)));
    assert!(first.is_some(), "50 draws, all in Mon");
}

#[test]
fn top_of_the_corner_is_not_mon_and_ext_from_projectives_vanishes() {
    let inst = catalog("a2-corner", &Fp::new(3).unwrap(), NakayamaParams::default()).unwrap();
    let d = &inst.data;
    let ae1 = projectives(&d.a)
        .into_iter()
        .find(|p| p.dims == [1, 1])
        .unwrap();
    let top = z_a(d, &ae1);
    assert!(!in_mon(&top));
    assert_eq!(lambda_ext1_dim(&t_a(d, &ae1), &top), 0);
}
