//! Λ-modules as quadruples `(X, Y, f, g)` and their morphisms.

use alloc::sync::Arc;
use alloc::vec::Vec;

use super::data::{bimodule_positions, MoritaData};
use crate::algebra::bimodule::{hom_module, tensor, tensor_map, HomModule, Tensor};
use crate::algebra::module::{
    cokernel, direct_sum, hom_dim, hom_space, is_exact_at, kernel, HomSpace,
};
use crate::algebra::{ModMap, Module};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;

/// `f: W ⊗ X -> Y` to its adjoint `X -> Hom(W, Y)`.
pub fn adjoint<F: Field>(t: &Tensor<F>, h: &HomModule<F>, f: &ModMap<F>) -> ModMap<F> {
    let fld = t.module.field().clone();
    let nl = t.proj.len();
    let fp: Vec<Matrix<F>> = (0..nl).map(|l| f.blocks[l].mul(&t.proj[l])).collect();
    let blocks = (0..t.x_dims.len())
        .map(|r| {
            let mut out = Matrix::zeros(&fld, h.spaces[r].dim(), t.x_dims[r]);
            for j in 0..t.x_dims[r] {
                let phi = ModMap {
                    blocks: (0..nl)
                        .map(|l| {
                            Matrix::from_fn(&fld, fp[l].rows(), t.m_dims[l][r], |a, i| {
                                fp[l].get(a, t.amb_index(l, r, i, j)).clone()
                            })
                        })
                        .collect(),
                };
                out.set_block(0, j, &h.coords(r, &phi));
            }
            out
        })
        .collect();
    ModMap { blocks }
}

/// Inverse of [`adjoint`]: `X -> Hom(W, Y)` back to `W ⊗ X -> Y`.
pub fn unadjoint<F: Field>(
    t: &Tensor<F>,
    h: &HomModule<F>,
    y_dims: &[usize],
    ft: &ModMap<F>,
) -> ModMap<F> {
    let fld = t.module.field().clone();
    let nl = t.proj.len();
    let mut amb: Vec<Matrix<F>> = (0..nl)
        .map(|l| Matrix::zeros(&fld, y_dims[l], t.amb_dim(l)))
        .collect();
    for r in 0..t.x_dims.len() {
        for j in 0..t.x_dims[r] {
            let phi = h.element(r, &ft.blocks[r].column(j));
            for (l, am) in amb.iter_mut().enumerate() {
                for i in 0..t.m_dims[l][r] {
                    for a in 0..y_dims[l] {
                        am.set(a, t.amb_index(l, r, i, j), phi.blocks[l].get(a, i).clone());
                    }
                }
            }
        }
    }
    ModMap {
        blocks: amb.iter().zip(&t.sec).map(|(a, s)| a.mul(s)).collect(),
    }
}

/// A Λ-module `(X; Y)_{f,g}` with `f: M ⊗_A X -> Y` and `g: N ⊗_B Y -> X`.
///
/// The adjoints `f̃: X -> Hom_B(M, Y)` and `g̃: Y -> Hom_A(N, X)` are kept
/// alongside, together with the tensor and Hom modules they live on.
#[derive(Clone, Debug)]
pub struct LambdaModule<F: Field> {
    pub data: Arc<MoritaData<F>>,
    pub x: Module<F>,
    pub y: Module<F>,
    pub f: ModMap<F>,
    pub g: ModMap<F>,
    /// `M ⊗_A X`
    pub mx: Tensor<F>,
    /// `N ⊗_B Y`
    pub ny: Tensor<F>,
    /// `Hom_B(M, Y)`
    pub hmy: HomModule<F>,
    /// `Hom_A(N, X)`
    pub hnx: HomModule<F>,
    pub ft: ModMap<F>,
    pub gt: ModMap<F>,
}

impl<F: Field> PartialEq for LambdaModule<F> {
    fn eq(&self, other: &Self) -> bool {
        self.x == other.x && self.y == other.y && self.f == other.f && self.g == other.g
    }
}

fn check_sides<F: Field>(
    data: &MoritaData<F>,
    x: &Module<F>,
    y: &Module<F>,
) -> Result<(Module<F>, Module<F>)> {
    if !x.alg.same_as(&data.a) || !y.alg.same_as(&data.b) {
        return Err(Error::AlgebraMismatch(
            "X must be over A and Y over B".into(),
        ));
    }
    // share handles with the data
    Ok((
        Module {
            alg: data.a.clone(),
            ..x.clone()
        },
        Module {
            alg: data.b.clone(),
            ..y.clone()
        },
    ))
}

impl<F: Field> LambdaModule<F> {
    /// From structure maps `f` and `g`. Checks they are morphisms and that
    /// `g(1 ⊗ f) = 0 = f(1 ⊗ g)`.
    pub fn new(
        data: &Arc<MoritaData<F>>,
        x: Module<F>,
        y: Module<F>,
        f: ModMap<F>,
        g: ModMap<F>,
    ) -> Result<Self> {
        let (x, y) = check_sides(data, &x, &y)?;
        let mx = tensor(&data.m, &x);
        let ny = tensor(&data.n, &y);
        f.check_morphism(&mx.module, &y)?;
        g.check_morphism(&ny.module, &x)?;
        let l = Self::assemble(data, x, y, f, g, mx, ny);
        l.check_compatible()?;
        Ok(l)
    }

    /// From the second expression `f̃: X -> Hom_B(M, Y)`, `g̃: Y -> Hom_A(N, X)`.
    pub fn from_adjoints(
        data: &Arc<MoritaData<F>>,
        x: Module<F>,
        y: Module<F>,
        ft: ModMap<F>,
        gt: ModMap<F>,
    ) -> Result<Self> {
        let (x, y) = check_sides(data, &x, &y)?;
        let hmy = hom_module(&data.m, &y);
        let hnx = hom_module(&data.n, &x);
        ft.check_morphism(&x, &hmy.module)?;
        gt.check_morphism(&y, &hnx.module)?;
        let mx = tensor(&data.m, &x);
        let ny = tensor(&data.n, &y);
        let f = unadjoint(&mx, &hmy, &y.dims, &ft);
        let g = unadjoint(&ny, &hnx, &x.dims, &gt);
        let l = LambdaModule {
            data: data.clone(),
            x,
            y,
            f,
            g,
            mx,
            ny,
            hmy,
            hnx,
            ft,
            gt,
        };
        l.check_compatible()?;
        Ok(l)
    }

    fn assemble(
        data: &Arc<MoritaData<F>>,
        x: Module<F>,
        y: Module<F>,
        f: ModMap<F>,
        g: ModMap<F>,
        mx: Tensor<F>,
        ny: Tensor<F>,
    ) -> Self {
        let hmy = hom_module(&data.m, &y);
        let hnx = hom_module(&data.n, &x);
        let ft = adjoint(&mx, &hmy, &f);
        let gt = adjoint(&ny, &hnx, &g);
        LambdaModule {
            data: data.clone(),
            x,
            y,
            f,
            g,
            mx,
            ny,
            hmy,
            hnx,
            ft,
            gt,
        }
    }

    /// `g(1_N ⊗ f) = 0` and `f(1_M ⊗ g) = 0`.
    pub fn check_compatible(&self) -> Result<()> {
        let d = &self.data;
        if !d.nm_zero {
            let nmx = tensor(&d.n, &self.mx.module);
            if !self
                .g
                .compose(&tensor_map(&nmx, &self.ny, &self.f))
                .is_zero()
            {
                return Err(Error::NotAModule("g(1 ⊗ f) is nonzero".into()));
            }
        }
        if !d.mn_zero {
            let mny = tensor(&d.m, &self.ny.module);
            if !self
                .f
                .compose(&tensor_map(&mny, &self.mx, &self.g))
                .is_zero()
            {
                return Err(Error::NotAModule("f(1 ⊗ g) is nonzero".into()));
            }
        }
        Ok(())
    }

    /// `(M, g̃) f̃ = 0` and `(N, f̃) g̃ = 0`, the same conditions read on adjoints.
    pub fn check_second_expression(&self) -> Result<()> {
        let d = &self.data;
        let hm_hnx = hom_module(&d.m, &self.hnx.module);
        let c1 = crate::algebra::hom_module_map(&self.hmy, &hm_hnx, &self.gt).compose(&self.ft);
        let hn_hmy = hom_module(&d.n, &self.hmy.module);
        let c2 = crate::algebra::hom_module_map(&self.hnx, &hn_hmy, &self.ft).compose(&self.gt);
        if c1.is_zero() && c2.is_zero() {
            Ok(())
        } else {
            Err(Error::NotAModule(
                "second expression conditions fail".into(),
            ))
        }
    }

    pub fn field(&self) -> &F {
        self.data.field()
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.x.dim(), self.y.dim())
    }

    pub fn dim(&self) -> usize {
        self.x.dim() + self.y.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// The same module as a module over the materialized Λ.
    pub fn flatten(&self) -> Module<F> {
        let d = &self.data;
        let mut dims = self.x.dims.clone();
        dims.extend_from_slice(&self.y.dims);
        let mut act = self.x.act.clone();
        for (l, r, i) in bimodule_positions(&d.n) {
            let gp = self.g.blocks[l].mul(&self.ny.proj[l]);
            act.push(gp.block(
                0,
                self.x.dims[l],
                self.ny.amb_index(l, r, i, 0),
                self.y.dims[r],
            ));
        }
        for (l, r, i) in bimodule_positions(&d.m) {
            let fp = self.f.blocks[l].mul(&self.mx.proj[l]);
            act.push(fp.block(
                0,
                self.y.dims[l],
                self.mx.amb_index(l, r, i, 0),
                self.x.dims[r],
            ));
        }
        act.extend(self.y.act.iter().cloned());
        Module {
            alg: d.lambda.clone(),
            dims,
            act,
        }
    }

    /// Reads a module over the materialized Λ as a quadruple.
    pub fn unflatten(data: &Arc<MoritaData<F>>, z: &Module<F>) -> Result<Self> {
        if !z.alg.same_as(&data.lambda) {
            return Err(Error::AlgebraMismatch(
                "module is not over the materialized ring".into(),
            ));
        }
        let fld = data.field().clone();
        let (nva, ga) = (data.nva(), data.a.gens.len());
        let x = Module {
            alg: data.a.clone(),
            dims: z.dims[..nva].to_vec(),
            act: z.act[..ga].to_vec(),
        };
        let y = Module {
            alg: data.b.clone(),
            dims: z.dims[nva..].to_vec(),
            act: z.act[data.b_gen(0)..].to_vec(),
        };
        let mx = tensor(&data.m, &x);
        let ny = tensor(&data.n, &y);

        let mut gamb: Vec<Matrix<F>> = (0..nva)
            .map(|l| Matrix::zeros(&fld, x.dims[l], ny.amb_dim(l)))
            .collect();
        for (k, (l, r, i)) in bimodule_positions(&data.n).into_iter().enumerate() {
            gamb[l].set_block(0, ny.amb_index(l, r, i, 0), &z.act[data.n_gen(k)]);
        }
        let mut famb: Vec<Matrix<F>> = (0..data.nvb())
            .map(|l| Matrix::zeros(&fld, y.dims[l], mx.amb_dim(l)))
            .collect();
        for (k, (l, r, i)) in bimodule_positions(&data.m).into_iter().enumerate() {
            famb[l].set_block(0, mx.amb_index(l, r, i, 0), &z.act[data.m_gen(k)]);
        }
        let g = ModMap {
            blocks: gamb.iter().zip(&ny.sec).map(|(a, s)| a.mul(s)).collect(),
        };
        let f = ModMap {
            blocks: famb.iter().zip(&mx.sec).map(|(a, s)| a.mul(s)).collect(),
        };
        // the relations must die, which holds for a genuine module
        for (l, a) in famb.iter().enumerate() {
            if f.blocks[l].mul(&mx.proj[l]) != *a {
                return Err(Error::NotAModule("M acts non-balanced".into()));
            }
        }
        for (l, a) in gamb.iter().enumerate() {
            if g.blocks[l].mul(&ny.proj[l]) != *a {
                return Err(Error::NotAModule("N acts non-balanced".into()));
            }
        }
        f.check_morphism(&mx.module, &y)?;
        g.check_morphism(&ny.module, &x)?;
        Ok(Self::assemble(data, x, y, f, g, mx, ny))
    }

    pub fn zero(data: &Arc<MoritaData<F>>) -> Self {
        let x = Module::zero(&data.a);
        let y = Module::zero(&data.b);
        let fld = data.field();
        let mx = tensor(&data.m, &x);
        let ny = tensor(&data.n, &y);
        let f = ModMap::zero(fld, &mx.module.dims, &y.dims);
        let g = ModMap::zero(fld, &ny.module.dims, &x.dims);
        Self::assemble(data, x, y, f, g, mx, ny)
    }
}

/// A Λ-morphism `(a; b)`.
#[derive(Clone, Debug, PartialEq)]
pub struct LambdaMap<F: Field> {
    pub a: ModMap<F>,
    pub b: ModMap<F>,
}

impl<F: Field> LambdaMap<F> {
    pub fn zero(s: &LambdaModule<F>, t: &LambdaModule<F>) -> Self {
        let fld = s.field();
        LambdaMap {
            a: ModMap::zero(fld, &s.x.dims, &t.x.dims),
            b: ModMap::zero(fld, &s.y.dims, &t.y.dims),
        }
    }

    pub fn identity(l: &LambdaModule<F>) -> Self {
        LambdaMap {
            a: ModMap::identity(&l.x),
            b: ModMap::identity(&l.y),
        }
    }

    /// `self ∘ first`
    pub fn compose(&self, first: &Self) -> Self {
        LambdaMap {
            a: self.a.compose(&first.a),
            b: self.b.compose(&first.b),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        LambdaMap {
            a: self.a.add(&o.a),
            b: self.b.add(&o.b),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        LambdaMap {
            a: self.a.sub(&o.a),
            b: self.b.sub(&o.b),
        }
    }

    pub fn neg(&self) -> Self {
        LambdaMap {
            a: self.a.neg(),
            b: self.b.neg(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_mono(&self) -> bool {
        self.a.is_mono() && self.b.is_mono()
    }

    pub fn is_epi(&self) -> bool {
        self.a.is_epi() && self.b.is_epi()
    }

    pub fn is_iso(&self) -> bool {
        self.a.is_iso() && self.b.is_iso()
    }

    /// Componentwise morphisms with `b f = f'(1 ⊗ a)` and `a g = g'(1 ⊗ b)`.
    pub fn is_morphism(&self, s: &LambdaModule<F>, t: &LambdaModule<F>) -> bool {
        if !self.a.is_morphism(&s.x, &t.x) || !self.b.is_morphism(&s.y, &t.y) {
            return false;
        }
        let ma = tensor_map(&s.mx, &t.mx, &self.a);
        let nb = tensor_map(&s.ny, &t.ny, &self.b);
        self.b.compose(&s.f) == t.f.compose(&ma) && self.a.compose(&s.g) == t.g.compose(&nb)
    }

    /// The squares on the second expression: `(M, b) f̃ = f̃' a` and `(N, a) g̃ = g̃' b`.
    pub fn is_morphism_second(&self, s: &LambdaModule<F>, t: &LambdaModule<F>) -> bool {
        let mb = crate::algebra::hom_module_map(&s.hmy, &t.hmy, &self.b);
        let na = crate::algebra::hom_module_map(&s.hnx, &t.hnx, &self.a);
        mb.compose(&s.ft) == t.ft.compose(&self.a) && na.compose(&s.gt) == t.gt.compose(&self.b)
    }

    pub fn check(&self, s: &LambdaModule<F>, t: &LambdaModule<F>) -> Result<()> {
        if self.is_morphism(s, t) {
            Ok(())
        } else {
            Err(Error::NotAMorphism(
                "pair does not commute with the structure maps".into(),
            ))
        }
    }

    pub fn flatten(&self) -> ModMap<F> {
        let mut blocks = self.a.blocks.clone();
        blocks.extend(self.b.blocks.iter().cloned());
        ModMap { blocks }
    }

    pub fn unflatten(data: &MoritaData<F>, m: &ModMap<F>) -> Self {
        let nva = data.nva();
        LambdaMap {
            a: ModMap {
                blocks: m.blocks[..nva].to_vec(),
            },
            b: ModMap {
                blocks: m.blocks[nva..].to_vec(),
            },
        }
    }
}

/// `Hom_Λ(L, L')` through the materialized ring.
pub fn lambda_hom_space<F: Field>(s: &LambdaModule<F>, t: &LambdaModule<F>) -> HomSpace<F> {
    hom_space(&s.flatten(), &t.flatten())
}

pub fn lambda_hom_dim<F: Field>(s: &LambdaModule<F>, t: &LambdaModule<F>) -> usize {
    hom_dim(&s.flatten(), &t.flatten())
}

/// Kernel with its inclusion.
pub fn lambda_kernel<F: Field>(
    s: &LambdaModule<F>,
    phi: &LambdaMap<F>,
) -> (LambdaModule<F>, LambdaMap<F>) {
    let (k, i) = kernel(&s.flatten(), &phi.flatten());
    let d = &s.data;
    (
        LambdaModule::unflatten(d, &k).expect("kernel of a module map"),
        LambdaMap::unflatten(d, &i),
    )
}

/// Cokernel with its projection.
pub fn lambda_cokernel<F: Field>(
    t: &LambdaModule<F>,
    phi: &LambdaMap<F>,
) -> (LambdaModule<F>, LambdaMap<F>) {
    let (c, p, _) = cokernel(&t.flatten(), &phi.flatten());
    let d = &t.data;
    (
        LambdaModule::unflatten(d, &c).expect("cokernel of a module map"),
        LambdaMap::unflatten(d, &p),
    )
}

/// Direct sum with inclusions and projections.
pub struct LambdaSum<F: Field> {
    pub module: LambdaModule<F>,
    pub incl: Vec<LambdaMap<F>>,
    pub proj: Vec<LambdaMap<F>>,
}

pub fn lambda_direct_sum<F: Field>(
    data: &Arc<MoritaData<F>>,
    parts: &[&LambdaModule<F>],
) -> LambdaSum<F> {
    let flats: Vec<Module<F>> = parts.iter().map(|p| p.flatten()).collect();
    let refs: Vec<&Module<F>> = flats.iter().collect();
    let ds = direct_sum(&data.lambda, &refs);
    LambdaSum {
        module: LambdaModule::unflatten(data, &ds.module).expect("sum of modules"),
        incl: ds
            .incl
            .iter()
            .map(|m| LambdaMap::unflatten(data, m))
            .collect(),
        proj: ds
            .proj
            .iter()
            .map(|m| LambdaMap::unflatten(data, m))
            .collect(),
    }
}

/// Exact at every interior term of the chain `maps[0], maps[1], ...`.
pub fn is_exact_sequence<F: Field>(maps: &[&LambdaMap<F>]) -> bool {
    maps.windows(2)
        .all(|w| is_exact_at(&w[0].flatten(), &w[1].flatten()))
}

/// `0 -> L' -> L -> L'' -> 0` is exact.
pub fn is_short_exact<F: Field>(i: &LambdaMap<F>, p: &LambdaMap<F>) -> bool {
    crate::algebra::module::is_short_exact(&i.flatten(), &p.flatten())
}
