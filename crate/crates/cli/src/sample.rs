//! Seeded random modules: cokernels of random maps between sums of
//! indecomposable projectives.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use morita_core::algebra::bimodule::tensor;
use morita_core::algebra::module::{cokernel, direct_sum, hom_space, injectives, projectives};
use morita_core::algebra::{Algebra, ModMap, Module};
use morita_core::homology::{ext, LambdaSequence};
use morita_core::morita::{lambda_projectives, LambdaMap, LambdaModule, MoritaData};
use morita_core::Field;

/// The default seed.
pub const DEFAULT_SEED: u64 = 0xC070_7510;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleConfig {
    pub seed: u64,
    pub count: usize,
    pub dim_cap: usize,
    pub rank_cap: usize,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            seed: DEFAULT_SEED,
            count: 100,
            dim_cap: 12,
            rank_cap: 4,
        }
    }
}

/// A deterministic stream of random modules and maps.
pub struct Sampler {
    pub cfg: SampleConfig,
    rng: ChaCha8Rng,
}

fn random_map<F: Field, R: Rng + ?Sized>(x: &Module<F>, y: &Module<F>, rng: &mut R) -> ModMap<F> {
    let hs = hom_space(x, y);
    let f = x.field();
    let coeffs: Vec<F::Elem> = (0..hs.dim()).map(|_| f.random(rng)).collect();
    hs.combine(&coeffs)
}

impl Sampler {
    pub fn new(cfg: SampleConfig) -> Self {
        Sampler {
            cfg,
            rng: ChaCha8Rng::seed_from_u64(cfg.seed),
        }
    }

    /// Independent stream for a named purpose; the same label always gives
    /// the same stream.
    pub fn fork(&self, label: &str) -> Sampler {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in label.bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
        Sampler {
            cfg: self.cfg,
            rng: ChaCha8Rng::seed_from_u64(self.cfg.seed ^ h),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn below(&mut self, n: usize) -> usize {
        if n == 0 {
            0
        } else {
            self.rng.random_range(0..n)
        }
    }

    /// Random direct sum of `count` modules drawn from `pool`.
    pub fn sum_from<F: Field>(
        &mut self,
        alg: &Arc<Algebra<F>>,
        pool: &[Module<F>],
        count: usize,
    ) -> Module<F> {
        if pool.is_empty() || count == 0 {
            return Module::zero(alg);
        }
        let parts: Vec<&Module<F>> = (0..count).map(|_| &pool[self.below(pool.len())]).collect();
        direct_sum(alg, &parts).module
    }

    fn cokernel_sample<F: Field>(
        &mut self,
        alg: &Arc<Algebra<F>>,
        pool: &[Module<F>],
    ) -> Module<F> {
        let cap = self.cfg.rank_cap.max(1);
        for attempt in 0..64 {
            // shrink ranks after repeated oversize draws
            let top = if attempt < 32 { cap } else { 1 };
            let r0 = 1 + self.below(top);
            let r1 = self.below(top + 1);
            let p0 = self.sum_from(alg, pool, r0);
            let p1 = self.sum_from(alg, pool, r1);
            let phi = random_map(&p1, &p0, &mut self.rng);
            let (c, _, _) = cokernel(&p0, &phi);
            if c.dim() <= self.cfg.dim_cap {
                return c;
            }
        }
        Module::zero(alg)
    }

    /// Random module over a quiver-presented algebra.
    pub fn module<F: Field>(&mut self, alg: &Arc<Algebra<F>>) -> Module<F> {
        let pool = projectives(alg);
        self.cokernel_sample(alg, &pool)
    }

    /// Random Λ-module, as a cokernel over the materialized ring.
    pub fn lambda_module<F: Field>(&mut self, d: &Arc<MoritaData<F>>) -> LambdaModule<F> {
        let pool: Vec<Module<F>> = lambda_projectives(d).iter().map(|p| p.flatten()).collect();
        let z = self.cokernel_sample(&d.lambda, &pool);
        LambdaModule::unflatten(d, &z).expect("module over the materialized ring")
    }

    pub fn projective<F: Field>(&mut self, alg: &Arc<Algebra<F>>) -> Module<F> {
        let pool = projectives(alg);
        let r = self.below(self.cfg.rank_cap.min(3)) + 1;
        self.sum_from(alg, &pool, r)
    }

    pub fn injective<F: Field>(&mut self, alg: &Arc<Algebra<F>>) -> Module<F> {
        let pool = injectives(alg);
        let r = self.below(self.cfg.rank_cap.min(3)) + 1;
        self.sum_from(alg, &pool, r)
    }

    pub fn map<F: Field>(&mut self, x: &Module<F>, y: &Module<F>) -> ModMap<F> {
        random_map(x, y, &mut self.rng)
    }

    /// `(X; Y)_{f,g}` with random structure maps; needs the tensors to vanish
    /// so that every pair `(f, g)` is compatible.
    pub fn quadruple<F: Field>(
        &mut self,
        d: &Arc<MoritaData<F>>,
        x: Module<F>,
        y: Module<F>,
    ) -> LambdaModule<F> {
        let mx = tensor(&d.m, &x).module;
        let ny = tensor(&d.n, &y).module;
        let f = self.map(&mx, &y);
        let g = self.map(&ny, &x);
        LambdaModule::new(d, x, y, f, g).expect("tensors vanish, so any pair is compatible")
    }

    /// A random short exact sequence `0 -> y -> E -> x -> 0` of Λ-modules.
    pub fn extension<F: Field>(
        &mut self,
        x: &LambdaModule<F>,
        y: &LambdaModule<F>,
    ) -> LambdaSequence<F> {
        let d = &x.data;
        let g = ext(&x.flatten(), &y.flatten(), 1);
        let f = d.field();
        let coeffs: Vec<F::Elem> = (0..g.dim).map(|_| f.random(&mut self.rng)).collect();
        LambdaSequence::unflatten(d, &g.realize(&coeffs))
            .expect("sequence over the materialized ring")
    }
}

/// The split sequence `0 -> y -> y ⊕ x -> x -> 0`.
pub fn split_sequence<F: Field>(x: &LambdaModule<F>, y: &LambdaModule<F>) -> LambdaSequence<F> {
    let d = &x.data;
    let s = morita_core::morita::lambda_direct_sum(d, &[y, x]);
    LambdaSequence {
        left: y.clone(),
        mid: s.module.clone(),
        right: x.clone(),
        i: s.incl[0].clone(),
        p: s.proj[1].clone(),
    }
}

/// Composite that is zero but not exact in the middle, unless `y` is zero.
pub fn zero_sequence<F: Field>(x: &LambdaModule<F>, y: &LambdaModule<F>) -> LambdaSequence<F> {
    let d = &x.data;
    let s = morita_core::morita::lambda_direct_sum(d, &[y, x]);
    LambdaSequence {
        left: y.clone(),
        mid: s.module.clone(),
        right: x.clone(),
        i: LambdaMap::zero(y, &s.module),
        p: s.proj[1].clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{a2_algebra, a2_corner};
    use morita_core::classes::in_mon;
    use morita_core::Fp;

    #[test]
    fn same_seed_same_stream() {
        let a = a2_algebra(&Fp::new(3).unwrap()).unwrap();
        let mut s1 = Sampler::new(SampleConfig::default());
        let mut s2 = Sampler::new(SampleConfig::default());
        for _ in 0..20 {
            assert_eq!(s1.module(&a), s2.module(&a));
        }
    }

    #[test]
    fn samples_respect_the_cap() {
        let inst = a2_corner(&Fp::new(3).unwrap()).unwrap();
        let mut s = Sampler::new(SampleConfig {
            dim_cap: 5,
            ..SampleConfig::default()
        });
        for _ in 0..30 {
            assert!(s.lambda_module(&inst.data).dim() <= 5);
        }
    }

    #[test]
    fn non_mon_member_appears_early() {
        let inst = a2_corner(&Fp::new(3).unwrap()).unwrap();
        let mut s = Sampler::new(SampleConfig::default());
        let first = (0..50).position(|_| !in_mon(&s.lambda_module(&inst.data)));
        assert!(first.is_some());
    }
}
