//! Homological constructions on Λ-modules: sequences, the two-term
//! (co)resolutions of componentwise projective (injective) modules, and
//! the four approximation sequences built from data on one side.

use alloc::sync::Arc;

use super::dims::{is_injective, is_projective, proj_dim_upto, DimBound};
use super::ext::{ext1_dim, extend_along, lift_through, ShortExactSequence};
use super::horseshoe::horseshoe_right;
use super::presentation::projective_cover;
use crate::algebra::bimodule::tensor;
use crate::algebra::bimodule::{hom_module_map, tensor_map};
use crate::algebra::module::direct_sum;
use crate::algebra::{ModMap, Module};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::morita::{
    h_a, h_b, lambda_cokernel, lambda_direct_sum, lambda_hom_dim, lambda_kernel, t_a, t_b, z_a,
    LambdaMap, LambdaModule, LambdaSum, MoritaData,
};

/// `0 -> left -i-> mid -p-> right -> 0` of Λ-modules.
#[derive(Clone, Debug)]
pub struct LambdaSequence<F: Field> {
    pub left: LambdaModule<F>,
    pub mid: LambdaModule<F>,
    pub right: LambdaModule<F>,
    pub i: LambdaMap<F>,
    pub p: LambdaMap<F>,
}

impl<F: Field> LambdaSequence<F> {
    pub fn is_exact(&self) -> bool {
        self.i.is_morphism(&self.left, &self.mid)
            && self.p.is_morphism(&self.mid, &self.right)
            && crate::morita::is_short_exact(&self.i, &self.p)
    }

    pub fn flatten(&self) -> ShortExactSequence<F> {
        ShortExactSequence {
            left: self.left.flatten(),
            mid: self.mid.flatten(),
            right: self.right.flatten(),
            i: self.i.flatten(),
            p: self.p.flatten(),
        }
    }

    pub fn unflatten(d: &Arc<MoritaData<F>>, s: &ShortExactSequence<F>) -> Result<Self> {
        Ok(LambdaSequence {
            left: LambdaModule::unflatten(d, &s.left)?,
            mid: LambdaModule::unflatten(d, &s.mid)?,
            right: LambdaModule::unflatten(d, &s.right)?,
            i: LambdaMap::unflatten(d, &s.i),
            p: LambdaMap::unflatten(d, &s.p),
        })
    }
}

/// Map out of a sum, one component per summand.
pub(crate) fn out_of<F: Field>(s: &LambdaSum<F>, comps: &[LambdaMap<F>]) -> LambdaMap<F> {
    let mut it = comps.iter().zip(&s.proj).map(|(c, p)| c.compose(p));
    let first = it.next().expect("nonempty sum");
    it.fold(first, |acc, m| acc.add(&m))
}

/// Map into a sum, one component per summand.
pub(crate) fn into<F: Field>(s: &LambdaSum<F>, comps: &[LambdaMap<F>]) -> LambdaMap<F> {
    let mut it = comps.iter().zip(&s.incl).map(|(c, i)| i.compose(c));
    let first = it.next().expect("nonempty sum");
    it.fold(first, |acc, m| acc.add(&m))
}

/// Plain two-term block map `X1 ⊕ X2 -> Y1 ⊕ Y2` from its four entries.
fn block2<F: Field>(f: &F, m: [[&ModMap<F>; 2]; 2]) -> ModMap<F> {
    let nv = m[0][0].blocks.len();
    let blocks = (0..nv)
        .map(|v| {
            let top = Matrix::hstack(
                f,
                m[0][0].blocks[v].rows(),
                &[&m[0][0].blocks[v], &m[0][1].blocks[v]],
            );
            let bot = Matrix::hstack(
                f,
                m[1][0].blocks[v].rows(),
                &[&m[1][0].blocks[v], &m[1][1].blocks[v]],
            );
            Matrix::vstack(f, top.cols(), &[&top, &bot])
        })
        .collect();
    ModMap { blocks }
}

pub fn lambda_ext1_dim<F: Field>(l: &LambdaModule<F>, t: &LambdaModule<F>) -> usize {
    ext1_dim(&l.flatten(), &t.flatten())
}

pub fn lambda_is_projective<F: Field>(l: &LambdaModule<F>) -> bool {
    is_projective(&l.flatten())
}

pub fn lambda_is_injective<F: Field>(l: &LambdaModule<F>) -> bool {
    is_injective(&l.flatten())
}

pub fn lambda_proj_dim_upto<F: Field>(l: &LambdaModule<F>, bound: usize) -> DimBound {
    proj_dim_upto(&l.flatten(), bound)
}

pub fn lambda_inj_dim_upto<F: Field>(l: &LambdaModule<F>, bound: usize) -> DimBound {
    super::dims::inj_dim_upto(&l.flatten(), bound)
}

/// Projective presentation `0 -> K -> T_A P ⊕ T_B V -> L -> 0` with `P`, `V`
/// the projective covers of the two components.
pub fn quadruple_presentation<F: Field>(l: &LambdaModule<F>) -> LambdaSequence<F> {
    let pp = projective_cover(&l.x);
    let pv = projective_cover(&l.y);
    let ys = ShortExactSequence {
        left: pv.k,
        mid: pv.p,
        right: pv.x,
        i: pv.incl,
        p: pv.proj,
    };
    approx_sequence_1(l, &pp.proj, &pp.p, &ys).0
}

/// `dim Ext¹_Λ(l, t)` from the quadruple presentation.
pub fn lambda_ext1_dim_quadruple<F: Field>(l: &LambdaModule<F>, t: &LambdaModule<F>) -> usize {
    let s = quadruple_presentation(l);
    lambda_hom_dim(&s.left, t) + lambda_hom_dim(l, t) - lambda_hom_dim(&s.mid, t)
}

/// `0 -> (N⊗Q; M⊗P)_{0,0} -> T_A P ⊕ T_B Q -> (P; Q)_{f,g} -> 0`.
pub fn resolution_pq<F: Field>(l: &LambdaModule<F>) -> Result<LambdaSequence<F>> {
    let d = &l.data;
    if !d.tensors_vanish() {
        return Err(Error::Hypothesis("M ⊗ N and N ⊗ M must vanish".into()));
    }
    if !is_projective(&l.x) || !is_projective(&l.y) {
        return Err(Error::Hypothesis(
            "both components must be projective".into(),
        ));
    }
    let tp = t_a(d, &l.x);
    let tq = t_b(d, &l.y);
    let sum = lambda_direct_sum(d, &[&tp, &tq]);
    let p = out_of(
        &sum,
        &[
            LambdaMap {
                a: ModMap::identity(&l.x),
                b: l.f.clone(),
            },
            LambdaMap {
                a: l.g.clone(),
                b: ModMap::identity(&l.y),
            },
        ],
    );
    let (nq, mp) = (l.ny.module.clone(), l.mx.module.clone());
    let w = zero_structure(d, nq.clone(), mp.clone())?;
    let i = into(
        &sum,
        &[
            LambdaMap {
                a: l.g.neg(),
                b: ModMap::identity(&mp).neg(),
            },
            LambdaMap {
                a: ModMap::identity(&nq),
                b: l.f.clone(),
            },
        ],
    );
    let s = LambdaSequence {
        left: w,
        mid: sum.module,
        right: l.clone(),
        i,
        p,
    };
    check_sequence(&s)?;
    Ok(s)
}

/// `0 -> (I; J)_{f,g} -> H_A I ⊕ H_B J -> (Hom_B(M,J); Hom_A(N,I))_{0,0} -> 0`.
pub fn coresolution_ij<F: Field>(l: &LambdaModule<F>) -> Result<LambdaSequence<F>> {
    let d = &l.data;
    if !d.tensors_vanish() {
        return Err(Error::Hypothesis("M ⊗ N and N ⊗ M must vanish".into()));
    }
    if !is_injective(&l.x) || !is_injective(&l.y) {
        return Err(Error::Hypothesis(
            "both components must be injective".into(),
        ));
    }
    let hi = h_a(d, &l.x);
    let hj = h_b(d, &l.y);
    let sum = lambda_direct_sum(d, &[&hi, &hj]);
    let i = into(
        &sum,
        &[
            LambdaMap {
                a: ModMap::identity(&l.x),
                b: l.gt.clone(),
            },
            LambdaMap {
                a: l.ft.clone(),
                b: ModMap::identity(&l.y),
            },
        ],
    );
    let (mj, ni) = (l.hmy.module.clone(), l.hnx.module.clone());
    let w = zero_structure(d, mj.clone(), ni.clone())?;
    let p = out_of(
        &sum,
        &[
            LambdaMap {
                a: l.ft.clone(),
                b: ModMap::identity(&ni),
            },
            LambdaMap {
                a: ModMap::identity(&mj).neg(),
                b: l.gt.neg(),
            },
        ],
    );
    let s = LambdaSequence {
        left: l.clone(),
        mid: sum.module,
        right: w,
        i,
        p,
    };
    check_sequence(&s)?;
    Ok(s)
}

fn zero_structure<F: Field>(
    d: &Arc<MoritaData<F>>,
    x: Module<F>,
    y: Module<F>,
) -> Result<LambdaModule<F>> {
    let mx = tensor(&d.m, &x);
    let ny = tensor(&d.n, &y);
    let f = ModMap::zero(d.field(), &mx.module.dims, &y.dims);
    let g = ModMap::zero(d.field(), &ny.module.dims, &x.dims);
    LambdaModule::new(d, x, y, f, g)
}

fn check_sequence<F: Field>(s: &LambdaSequence<F>) -> Result<()> {
    s.i.check(&s.left, &s.mid)?;
    s.p.check(&s.mid, &s.right)?;
    if !crate::morita::is_short_exact(&s.i, &s.p) {
        return Err(Error::Hypothesis(
            "constructed sequence is not exact".into(),
        ));
    }
    Ok(())
}

/// One of the four approximation sequences together with the lifting map and
/// the verification of the displayed component.
#[derive(Clone, Debug)]
pub struct ApproxSequence<F: Field> {
    pub seq: LambdaSequence<F>,
    /// The solution of the lifting (or extension) square.
    pub h: ModMap<F>,
    /// The component of the outer term in its displayed form, as an exact
    /// sequence of plain modules `0 -> shape -> mid component -> L component`
    /// (or `L component -> mid component -> shape`).
    pub shape: ShortExactSequence<F>,
}

fn require(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Hypothesis(what.into()))
    }
}

/// Epimorphism `T_A P ⊕ T_B V -> L` from `π: P -> L₁` and `0 -> Y -> V -> L₂ -> 0`,
/// with its kernel. Returns the sequence and the sum.
fn approx_sequence_1<F: Field>(
    l: &LambdaModule<F>,
    pi: &ModMap<F>,
    p: &Module<F>,
    ys: &ShortExactSequence<F>,
) -> (LambdaSequence<F>, LambdaSum<F>) {
    let d = &l.data;
    let tp = t_a(d, p);
    let tv = t_b(d, &ys.mid);
    let sum = lambda_direct_sum(d, &[&tp, &tv]);
    let c1 = LambdaMap {
        a: pi.clone(),
        b: l.f.compose(&tensor_map(&tp.mx, &l.mx, pi)),
    };
    let c2 = LambdaMap {
        a: l.g.compose(&tensor_map(&tv.ny, &l.ny, &ys.p)),
        b: ys.p.clone(),
    };
    let e = out_of(&sum, &[c1, c2]);
    let (k, incl) = lambda_kernel(&sum.module, &e);
    (
        LambdaSequence {
            left: k,
            mid: sum.module.clone(),
            right: l.clone(),
            i: incl,
            p: e,
        },
        sum,
    )
}

/// `0 -> (K; (M⊗P) ⊕ Y) -> T_A P ⊕ T_B V -> L -> 0`. Needs `_B M` projective.
pub fn approx_from_b_right<F: Field>(
    l: &LambdaModule<F>,
    pi: &ModMap<F>,
    p: &Module<F>,
    ys: &ShortExactSequence<F>,
) -> Result<ApproxSequence<F>> {
    let d = &l.data;
    require(is_projective(&d.m.left_module()), "_B M must be projective")?;
    require(
        is_projective(p) && pi.is_epi() && pi.is_morphism(p, &l.x),
        "π must be an epimorphism from a projective",
    )?;
    ys.check()?;
    require(ys.right == l.y, "the sequence must end in L₂")?;
    let (seq, sum) = approx_sequence_1(l, pi, p, ys);
    check_sequence(&seq)?;
    let fld = d.field();
    let tp = &t_a(d, p);
    let mp = tp.y.clone();
    // h: M⊗P -> V with π' h = f(1⊗π)
    let target = l.f.compose(&tensor_map(&tp.mx, &l.mx, pi));
    let h = lift_through(&ys.p, &target, &mp, &ys.mid)
        .ok_or_else(|| Error::NoLift("M ⊗ P -> V".into()))?;
    let left = direct_sum(&d.b, &[&mp, &ys.left]).module;
    let theta = block2(
        fld,
        [
            [
                &ModMap::identity(&mp),
                &ModMap::zero(fld, &ys.left.dims, &mp.dims),
            ],
            [&h.neg(), &ys.i],
        ],
    );
    let shape = ShortExactSequence {
        left,
        mid: sum.module.y.clone(),
        right: l.y.clone(),
        i: theta,
        p: seq.p.b.clone(),
    };
    shape.check()?;
    Ok(ApproxSequence { seq, h, shape })
}

/// `0 -> (X ⊕ (N⊗Q); K) -> T_A U ⊕ T_B Q -> L -> 0`. Needs `_A N` projective.
pub fn approx_from_a_right<F: Field>(
    l: &LambdaModule<F>,
    pi: &ModMap<F>,
    q: &Module<F>,
    xs: &ShortExactSequence<F>,
) -> Result<ApproxSequence<F>> {
    let d = &l.data;
    require(is_projective(&d.n.left_module()), "_A N must be projective")?;
    require(
        is_projective(q) && pi.is_epi() && pi.is_morphism(q, &l.y),
        "π must be an epimorphism from a projective",
    )?;
    xs.check()?;
    require(xs.right == l.x, "the sequence must end in L₁")?;
    let fld = d.field();
    let tu = t_a(d, &xs.mid);
    let tq = t_b(d, q);
    let sum = lambda_direct_sum(d, &[&tu, &tq]);
    let c1 = LambdaMap {
        a: xs.p.clone(),
        b: l.f.compose(&tensor_map(&tu.mx, &l.mx, &xs.p)),
    };
    let c2 = LambdaMap {
        a: l.g.compose(&tensor_map(&tq.ny, &l.ny, pi)),
        b: pi.clone(),
    };
    let e = out_of(&sum, &[c1, c2]);
    let (k, incl) = lambda_kernel(&sum.module, &e);
    let seq = LambdaSequence {
        left: k,
        mid: sum.module.clone(),
        right: l.clone(),
        i: incl,
        p: e,
    };
    check_sequence(&seq)?;
    let nq = tq.x.clone();
    // h: N⊗Q -> U with π' h = g(1⊗π)
    let target = l.g.compose(&tensor_map(&tq.ny, &l.ny, pi));
    let h = lift_through(&xs.p, &target, &nq, &xs.mid)
        .ok_or_else(|| Error::NoLift("N ⊗ Q -> U".into()))?;
    let left = direct_sum(&d.a, &[&xs.left, &nq]).module;
    let theta = block2(
        fld,
        [
            [&xs.i, &h.neg()],
            [
                &ModMap::zero(fld, &xs.left.dims, &nq.dims),
                &ModMap::identity(&nq),
            ],
        ],
    );
    let shape = ShortExactSequence {
        left,
        mid: sum.module.x.clone(),
        right: l.x.clone(),
        i: theta,
        p: seq.p.a.clone(),
    };
    shape.check()?;
    Ok(ApproxSequence { seq, h, shape })
}

/// `0 -> L -> H_A I ⊕ H_B Y -> (C; Hom_A(N,I) ⊕ V) -> 0`. Needs `N_B` flat.
pub fn approx_from_b_left<F: Field>(
    l: &LambdaModule<F>,
    sigma: &ModMap<F>,
    i_mod: &Module<F>,
    ys: &ShortExactSequence<F>,
) -> Result<ApproxSequence<F>> {
    let d = &l.data;
    let op_b = Arc::new(d.b.opposite());
    require(is_projective(&d.n.right_module(&op_b)), "N_B must be flat")?;
    require(
        is_injective(i_mod) && sigma.is_mono() && sigma.is_morphism(&l.x, i_mod),
        "σ must be a monomorphism into an injective",
    )?;
    ys.check()?;
    require(ys.left == l.y, "the sequence must start at L₂")?;
    let fld = d.field();
    let hi = h_a(d, i_mod);
    let hy = h_b(d, &ys.mid);
    let sum = lambda_direct_sum(d, &[&hi, &hy]);
    let n_sigma = hom_module_map(&l.hnx, &hi.hnx, sigma);
    let c1 = LambdaMap {
        a: sigma.clone(),
        b: n_sigma.compose(&l.gt),
    };
    let c2 = LambdaMap {
        a: hom_module_map(&l.hmy, &hy.hmy, &ys.i).compose(&l.ft),
        b: ys.i.clone(),
    };
    let m = into(&sum, &[c1, c2]);
    let (c, proj) = lambda_cokernel(&sum.module, &m);
    let seq = LambdaSequence {
        left: l.clone(),
        mid: sum.module.clone(),
        right: c,
        i: m,
        p: proj,
    };
    check_sequence(&seq)?;
    let ni = hi.y.clone();
    // h: Y -> Hom_A(N, I) with h σ' = (N,σ) g̃
    let h = extend_along(&ys.i, &n_sigma.compose(&l.gt), &ys.mid, &ni)
        .ok_or_else(|| Error::NoLift("Y -> Hom_A(N, I)".into()))?;
    let right = direct_sum(&d.b, &[&ni, &ys.right]).module;
    let theta = block2(
        fld,
        [
            [&ModMap::identity(&ni), &h.neg()],
            [&ModMap::zero(fld, &ni.dims, &ys.right.dims), &ys.p],
        ],
    );
    let shape = ShortExactSequence {
        left: l.y.clone(),
        mid: sum.module.y.clone(),
        right,
        i: seq.i.b.clone(),
        p: theta,
    };
    shape.check()?;
    Ok(ApproxSequence { seq, h, shape })
}

/// `0 -> L -> H_A X ⊕ H_B J -> (U ⊕ Hom_B(M,J); C) -> 0`. Needs `M_A` flat.
pub fn approx_from_a_left<F: Field>(
    l: &LambdaModule<F>,
    sigma: &ModMap<F>,
    j_mod: &Module<F>,
    xs: &ShortExactSequence<F>,
) -> Result<ApproxSequence<F>> {
    let d = &l.data;
    let op_a = Arc::new(d.a.opposite());
    require(is_projective(&d.m.right_module(&op_a)), "M_A must be flat")?;
    require(
        is_injective(j_mod) && sigma.is_mono() && sigma.is_morphism(&l.y, j_mod),
        "σ must be a monomorphism into an injective",
    )?;
    xs.check()?;
    require(xs.left == l.x, "the sequence must start at L₁")?;
    let fld = d.field();
    let hx = h_a(d, &xs.mid);
    let hj = h_b(d, j_mod);
    let sum = lambda_direct_sum(d, &[&hx, &hj]);
    let m_sigma = hom_module_map(&l.hmy, &hj.hmy, sigma);
    let c1 = LambdaMap {
        a: xs.i.clone(),
        b: hom_module_map(&l.hnx, &hx.hnx, &xs.i).compose(&l.gt),
    };
    let c2 = LambdaMap {
        a: m_sigma.compose(&l.ft),
        b: sigma.clone(),
    };
    let m = into(&sum, &[c1, c2]);
    let (c, proj) = lambda_cokernel(&sum.module, &m);
    let seq = LambdaSequence {
        left: l.clone(),
        mid: sum.module.clone(),
        right: c,
        i: m,
        p: proj,
    };
    check_sequence(&seq)?;
    let mj = hj.x.clone();
    // h: X -> Hom_B(M, J) with h σ' = (M,σ) f̃
    let h = extend_along(&xs.i, &m_sigma.compose(&l.ft), &xs.mid, &mj)
        .ok_or_else(|| Error::NoLift("X -> Hom_B(M, J)".into()))?;
    let right = direct_sum(&d.a, &[&xs.right, &mj]).module;
    let theta = block2(
        fld,
        [
            [&xs.p, &ModMap::zero(fld, &mj.dims, &xs.right.dims)],
            [&h.neg(), &ModMap::identity(&mj)],
        ],
    );
    let shape = ShortExactSequence {
        left: l.x.clone(),
        mid: sum.module.x.clone(),
        right,
        i: seq.i.a.clone(),
        p: theta,
    };
    shape.check()?;
    Ok(ApproxSequence { seq, h, shape })
}

/// Right approximation of `L = (L₁; L₂)_g` over a triangular ring (`M = 0`)
/// from approximations `0 -> X -> U -> L₁ -> 0` and `0 -> Y -> V -> L₂ -> 0`,
/// merged along `0 -> (L₁; 0) -> L -> (0; L₂) -> 0`.
pub fn triangular_approximation<F: Field>(
    l: &LambdaModule<F>,
    ua: &ShortExactSequence<F>,
    vb: &ShortExactSequence<F>,
) -> Result<LambdaSequence<F>> {
    let d = &l.data;
    require(d.m.is_zero(), "the ring must be triangular (M = 0)")?;
    ua.check()?;
    vb.check()?;
    let fld = d.field();
    let zb = alloc::vec![0; d.nvb()];
    let za = alloc::vec![0; d.nva()];
    // 0 -> (L1;0) -> L -> (0;L2) -> 0
    let l1 = z_a(d, &l.x);
    let l2 = crate::morita::z_b(d, &l.y);
    let s = LambdaSequence {
        left: l1.clone(),
        mid: l.clone(),
        right: l2.clone(),
        i: LambdaMap {
            a: ModMap::identity(&l.x),
            b: ModMap::zero(fld, &zb, &l.y.dims),
        },
        p: LambdaMap {
            a: ModMap::zero(fld, &l.x.dims, &za),
            b: ModMap::identity(&l.y),
        },
    };
    check_sequence(&s)?;
    // (U;0) -> (L1;0) with kernel (X;0)
    let zu = z_a(d, &ua.mid);
    let a1 = LambdaSequence {
        left: z_a(d, &ua.left),
        mid: zu.clone(),
        right: l1,
        i: LambdaMap {
            a: ua.i.clone(),
            b: ModMap::zero(fld, &zb, &zb),
        },
        p: LambdaMap {
            a: ua.p.clone(),
            b: ModMap::zero(fld, &zb, &zb),
        },
    };
    check_sequence(&a1)?;
    // T_B V = (N⊗V; V)_1 -> (0;L2) with kernel (N⊗V; Y)
    let tv = t_b(d, &vb.mid);
    let q = LambdaMap {
        a: ModMap::zero(fld, &tv.x.dims, &za),
        b: vb.p.clone(),
    };
    let (k2, k2i) = lambda_kernel(&tv, &q);
    let a2 = LambdaSequence {
        left: k2,
        mid: tv,
        right: l2,
        i: k2i,
        p: q,
    };
    check_sequence(&a2)?;
    let h = horseshoe_right(&s.flatten(), &a1.flatten(), &a2.flatten())?;
    LambdaSequence::unflatten(d, &h.approx)
}

/// `0 -> L -> E -> C -> 0` dual to [`triangular_approximation`], from
/// `0 -> L₁ -> X -> U -> 0` and `0 -> L₂ -> Y -> V -> 0`, merged along
/// the same sequence.
pub fn triangular_coapproximation<F: Field>(
    l: &LambdaModule<F>,
    xa: &ShortExactSequence<F>,
    yb: &ShortExactSequence<F>,
) -> Result<LambdaSequence<F>> {
    let d = &l.data;
    require(d.m.is_zero(), "the ring must be triangular (M = 0)")?;
    xa.check()?;
    yb.check()?;
    let fld = d.field();
    let zb = alloc::vec![0; d.nvb()];
    let za = alloc::vec![0; d.nva()];
    let l1 = z_a(d, &l.x);
    let l2 = crate::morita::z_b(d, &l.y);
    let s = LambdaSequence {
        left: l1.clone(),
        mid: l.clone(),
        right: l2.clone(),
        i: LambdaMap {
            a: ModMap::identity(&l.x),
            b: ModMap::zero(fld, &zb, &l.y.dims),
        },
        p: LambdaMap {
            a: ModMap::zero(fld, &l.x.dims, &za),
            b: ModMap::identity(&l.y),
        },
    };
    check_sequence(&s)?;
    // (L1;0) -> H_A X = (X; Hom_A(N,X)) with cokernel
    let hx = h_a(d, &xa.mid);
    let j1 = LambdaMap {
        a: xa.i.clone(),
        b: ModMap::zero(fld, &zb, &hx.y.dims),
    };
    let (c1, p1) = lambda_cokernel(&hx, &j1);
    let b1 = LambdaSequence {
        left: l1,
        mid: hx,
        right: c1,
        i: j1,
        p: p1,
    };
    check_sequence(&b1)?;
    // (0;L2) -> (0;Y) with cokernel (0;V)
    let zy = crate::morita::z_b(d, &yb.mid);
    let b2 = LambdaSequence {
        left: l2,
        mid: zy,
        right: crate::morita::z_b(d, &yb.right),
        i: LambdaMap {
            a: ModMap::zero(fld, &za, &za),
            b: yb.i.clone(),
        },
        p: LambdaMap {
            a: ModMap::zero(fld, &za, &za),
            b: yb.p.clone(),
        },
    };
    check_sequence(&b2)?;
    let h = super::horseshoe::horseshoe_left(&s.flatten(), &b1.flatten(), &b2.flatten())?;
    LambdaSequence::unflatten(d, &h.approx)
}

/// Both components agree with the `Ext` computed through the materialized ring.
pub fn presentations_agree<F: Field>(l: &LambdaModule<F>, t: &LambdaModule<F>) -> bool {
    lambda_ext1_dim(l, t) == lambda_ext1_dim_quadruple(l, t)
}
