use std::sync::Arc;

use morita_core::algebra::bimodule::{hom_module, tensor};
use morita_core::algebra::module::{
    cokernel, dual, dual_map, hom_dim, hom_space, injectives, is_short_exact, isomorphic, kernel,
    projectives,
};
use morita_core::algebra::{Algebra, Bimodule, Module, Quiver};
use morita_core::{Field, Fp, Matrix};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Quivers without relations, so any choice of arrow matrices is a module.
fn quiver(which: usize) -> Quiver {
    match which {
        0 => Quiver::linear(3),
        1 => Quiver::new(
            vec!["1".into(), "2".into()],
            vec![("a".into(), 0, 1), ("b".into(), 0, 1)],
        )
        .unwrap(),
        _ => Quiver::new(
            vec!["1".into(), "2".into(), "3".into()],
            vec![("a".into(), 0, 1), ("b".into(), 2, 1)],
        )
        .unwrap(),
    }
}

fn algebra(p: u64, which: usize) -> Arc<Algebra<Fp>> {
    Arc::new(Algebra::path_algebra(&Fp::new(p).unwrap(), &quiver(which), &[]).unwrap())
}

fn representation(alg: &Arc<Algebra<Fp>>, seed: u64) -> Module<Fp> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = alg.field();
    let dims: Vec<usize> = (0..alg.num_vertices())
        .map(|_| rand::Rng::random_range(&mut rng, 0..3))
        .collect();
    let act = alg
        .gens
        .iter()
        .map(|g| Matrix::random(f, dims[g.tgt], dims[g.src], &mut rng))
        .collect();
    Module::new(alg.clone(), dims, act).unwrap()
}

fn invertible(f: &Fp, n: usize, rng: &mut ChaCha8Rng) -> Matrix<Fp> {
    loop {
        let m = Matrix::random(f, n, n, rng);
        if m.rank() == n {
            return m;
        }
    }
}

/// The same module after an invertible change of basis at every vertex.
fn rebased(x: &Module<Fp>, seed: u64) -> Module<Fp> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = x.field();
    let ps: Vec<Matrix<Fp>> = x.dims.iter().map(|&d| invertible(f, d, &mut rng)).collect();
    let act = x
        .alg
        .gens
        .iter()
        .zip(&x.act)
        .map(|(g, m)| ps[g.tgt].mul(m).mul(&ps[g.src].inverse().unwrap()))
        .collect();
    Module::new(x.alg.clone(), x.dims.clone(), act).unwrap()
}

fn random_map(x: &Module<Fp>, y: &Module<Fp>, seed: u64) -> morita_core::algebra::ModMap<Fp> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let hs = hom_space(x, y);
    let f = x.field();
    let coeffs: Vec<u64> = (0..hs.dim()).map(|_| f.random(&mut rng)).collect();
    hs.combine(&coeffs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn representations_satisfy_module_axioms(p in prop::sample::select(vec![2u64, 3, 5]), q in 0usize..3, seed: u64) {
        let alg = algebra(p, q);
        let x = representation(&alg, seed);
        prop_assert!(x.validate().is_ok());
        for b in 0..alg.dim() {
            for c in 0..alg.dim() {
                let mut expect = Matrix::zeros(alg.field(), x.dim(), x.dim());
                for (k, coef) in &alg.mult[b][c] {
                    expect = expect.add(&x.full_action(*k).scale(coef));
                }
                prop_assert_eq!(x.full_action(b).mul(&x.full_action(c)), expect);
            }
        }
        let mut one = Matrix::zeros(alg.field(), x.dim(), x.dim());
        for (k, coef) in alg.unit.iter().enumerate() {
            one = one.add(&x.full_action(k).scale(coef));
        }
        prop_assert!(one.is_identity());
    }

    #[test]
    fn hom_dimension_ignores_base_change(p in prop::sample::select(vec![2u64, 3]), q in 0usize..3, s1: u64, s2: u64) {
        let alg = algebra(p, q);
        let (x, y) = (representation(&alg, s1), representation(&alg, s2));
        let n = hom_dim(&x, &y);
        prop_assert_eq!(hom_dim(&rebased(&x, s1 ^ 7), &rebased(&y, s2 ^ 7)), n);
        prop_assert!(isomorphic(&x, &rebased(&x, s2), 0).is_iso());
    }

    #[test]
    fn tensor_hom_adjunction_dimensions(p in prop::sample::select(vec![2u64, 3]), q in 0usize..3, u in 0usize..3, v in 0usize..3, s1: u64, s2: u64) {
        let alg = algebra(p, q);
        let n = alg.num_vertices();
        let (x, y) = (representation(&alg, s1), representation(&alg, s2));
        for m in [Bimodule::outer(&alg, u % n, &alg, v % n), Bimodule::regular(&alg)] {
            let mx = tensor(&m, &x).module;
            let hy = hom_module(&m, &y).module;
            prop_assert_eq!(hom_dim(&mx, &y), hom_dim(&x, &hy));
        }
    }

    #[test]
    fn dual_is_exact(p in prop::sample::select(vec![2u64, 3]), q in 0usize..3, s1: u64, s2: u64) {
        let alg = algebra(p, q);
        let op = Arc::new(alg.opposite());
        let (x, y) = (representation(&alg, s1), representation(&alg, s2));
        let phi = random_map(&x, &y, s1 ^ s2);
        let (_, i) = kernel(&x, &phi);
        let (_, pr, _) = cokernel(&x, &i);
        prop_assert!(is_short_exact(&i, &pr));
        prop_assert!(is_short_exact(&dual_map(&pr), &dual_map(&i)));
        prop_assert!(dual(&x, &op).validate().is_ok());
    }

    #[test]
    fn self_injective_nakayama_projectives_are_injective(p in prop::sample::select(vec![2u64, 3]), n in 2usize..5, dh in 0usize..3) {
        let h = (2 + dh).min(n);
        let q = Quiver::cyclic(n);
        let alg = Arc::new(Algebra::path_algebra(&Fp::new(p).unwrap(), &q, &q.all_paths_of_length(h)).unwrap());
        let (ps, mut is) = (projectives(&alg), injectives(&alg));
        prop_assert_eq!(ps.len(), is.len());
        for pm in &ps {
            let at = is.iter().position(|i| isomorphic(pm, i, 0).is_iso());
            prop_assert!(at.is_some(), "projective {:?} has no injective partner", pm.dims);
            is.remove(at.unwrap());
        }
    }
}
