//! Gorenstein membership on rings where `inj.dim Λ ≤ 1` is certified.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::algebra::module::regular;
use crate::algebra::Module;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homology::{
    coresolution_ij, ext1_dim_with, free_presentation, is_injective, is_projective,
    lambda_inj_dim_upto, Presentation,
};
use crate::morita::{lambda_injectives, lambda_projectives, t_a, t_b, LambdaModule, MoritaData};

/// The hypotheses of the Gorenstein identification, each checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GorensteinHypotheses {
    pub a_self_injective: bool,
    pub b_self_injective: bool,
    pub an_projective: bool,
    pub bm_projective: bool,
    pub ma_flat: bool,
    pub nb_flat: bool,
    pub tensors_vanish: bool,
    /// `inj.dim ≤ 1` for every indecomposable projective Λ-module, by the
    /// two-term coresolution.
    pub injdim_by_coresolution: bool,
    /// The same bound read off the dual projective resolution.
    pub injdim_by_dual: bool,
}

impl GorensteinHypotheses {
    pub fn check<F: Field>(d: &Arc<MoritaData<F>>) -> Self {
        let op_a = Arc::new(d.a.opposite());
        let op_b = Arc::new(d.b.opposite());
        let mut h = GorensteinHypotheses {
            a_self_injective: is_injective(&regular(&d.a)),
            b_self_injective: is_injective(&regular(&d.b)),
            an_projective: is_projective(&d.n.left_module()),
            bm_projective: is_projective(&d.m.left_module()),
            ma_flat: is_projective(&d.m.right_module(&op_a)),
            nb_flat: is_projective(&d.n.right_module(&op_b)),
            tensors_vanish: d.tensors_vanish(),
            injdim_by_coresolution: false,
            injdim_by_dual: false,
        };
        let projs = lambda_projectives(d);
        if h.tensors_vanish {
            h.injdim_by_coresolution = projs
                .iter()
                .all(|p| coresolution_ij(p).is_ok_and(|s| s.is_exact()));
        }
        h.injdim_by_dual = projs.iter().all(|p| lambda_inj_dim_upto(p, 1).at_most(1));
        h
    }

    pub fn failures(&self) -> Vec<String> {
        let named = [
            ("A self-injective", self.a_self_injective),
            ("B self-injective", self.b_self_injective),
            ("_A N projective", self.an_projective),
            ("_B M projective", self.bm_projective),
            ("M_A flat", self.ma_flat),
            ("N_B flat", self.nb_flat),
            ("tensors vanish", self.tensors_vanish),
            ("inj.dim ≤ 1 (coresolution)", self.injdim_by_coresolution),
            ("inj.dim ≤ 1 (dual)", self.injdim_by_dual),
        ];
        named
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(n, _)| String::from(*n))
            .collect()
    }

    pub fn holds(&self) -> bool {
        self.failures().is_empty()
    }
}

/// A ring on which Gorenstein projectives are `⊥{T_A A, T_B B}` and
/// Gorenstein injectives are `{indecomposable injectives}⊥`.
#[derive(Clone, Debug)]
pub struct GorensteinCert<F: Field> {
    pub data: Arc<MoritaData<F>>,
    pub hypotheses: GorensteinHypotheses,
    /// `T_A A` and `T_B B`, flattened.
    proj_tests: Vec<Module<F>>,
    inj_tests: Vec<Presentation<F>>,
}

impl<F: Field> GorensteinCert<F> {
    pub fn certify(d: &Arc<MoritaData<F>>) -> Result<Self> {
        let hypotheses = GorensteinHypotheses::check(d);
        let bad = hypotheses.failures();
        if !bad.is_empty() {
            return Err(Error::Hypothesis(bad.join(", ")));
        }
        let proj_tests = alloc::vec![
            t_a(d, &regular(&d.a)).flatten(),
            t_b(d, &regular(&d.b)).flatten()
        ];
        let inj_tests = lambda_injectives(d)
            .iter()
            .map(|i| free_presentation(&i.flatten()))
            .collect();
        Ok(GorensteinCert {
            data: d.clone(),
            hypotheses,
            proj_tests,
            inj_tests,
        })
    }

    /// `Ext¹(L, T_A A) = 0 = Ext¹(L, T_B B)`.
    pub fn gp_member(&self, l: &LambdaModule<F>) -> bool {
        let pr = free_presentation(&l.flatten());
        self.proj_tests.iter().all(|t| ext1_dim_with(&pr, t) == 0)
    }

    /// `Ext¹(I, L) = 0` for every indecomposable injective `I`.
    pub fn gi_member(&self, l: &LambdaModule<F>) -> bool {
        let lf = l.flatten();
        self.inj_tests.iter().all(|pr| ext1_dim_with(pr, &lf) == 0)
    }
}
