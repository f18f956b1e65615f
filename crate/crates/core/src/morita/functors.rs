//! The functors `T`, `H`, `Z` into Λ-modules and `U`, `C`, `K` out of them.

use alloc::sync::Arc;
use alloc::vec::Vec;

use super::data::MoritaData;
use super::lambda::{LambdaMap, LambdaModule};
use crate::algebra::bimodule::{hom_module, hom_module_map, tensor, tensor_map};
use crate::algebra::module::{cokernel, injectives, kernel, projectives, simples};
use crate::algebra::{ModMap, Module};
use crate::error::Result;
use crate::field::Field;

/// Which corner of Λ a functor touches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    A,
    B,
}

/// `T_A X = (X; M ⊗ X)_{1,0}`
pub fn t_a<F: Field>(d: &Arc<MoritaData<F>>, x: &Module<F>) -> LambdaModule<F> {
    let mx = tensor(&d.m, x);
    let y = mx.module.clone();
    let f = ModMap::identity(&y);
    let ny = tensor(&d.n, &y);
    let g = ModMap::zero(d.field(), &ny.module.dims, &x.dims);
    LambdaModule::new(d, x.clone(), y, f, g).expect("T_A is a Λ-module")
}

/// `T_B Y = (N ⊗ Y; Y)_{0,1}`
pub fn t_b<F: Field>(d: &Arc<MoritaData<F>>, y: &Module<F>) -> LambdaModule<F> {
    let ny = tensor(&d.n, y);
    let x = ny.module.clone();
    let g = ModMap::identity(&x);
    let mx = tensor(&d.m, &x);
    let f = ModMap::zero(d.field(), &mx.module.dims, &y.dims);
    LambdaModule::new(d, x, y.clone(), f, g).expect("T_B is a Λ-module")
}

/// `H_A X = (X; Hom_A(N, X))` with `f̃ = 0`, `g̃ = 1`.
pub fn h_a<F: Field>(d: &Arc<MoritaData<F>>, x: &Module<F>) -> LambdaModule<F> {
    let hnx = hom_module(&d.n, x);
    let y = hnx.module.clone();
    let hmy = hom_module(&d.m, &y);
    let ft = ModMap::zero(d.field(), &x.dims, &hmy.module.dims);
    let gt = ModMap::identity(&y);
    LambdaModule::from_adjoints(d, x.clone(), y, ft, gt).expect("H_A is a Λ-module")
}

/// `H_B Y = (Hom_B(M, Y); Y)` with `f̃ = 1`, `g̃ = 0`.
pub fn h_b<F: Field>(d: &Arc<MoritaData<F>>, y: &Module<F>) -> LambdaModule<F> {
    let hmy = hom_module(&d.m, y);
    let x = hmy.module.clone();
    let hnx = hom_module(&d.n, &x);
    let ft = ModMap::identity(&x);
    let gt = ModMap::zero(d.field(), &y.dims, &hnx.module.dims);
    LambdaModule::from_adjoints(d, x, y.clone(), ft, gt).expect("H_B is a Λ-module")
}

/// `Z_A X = (X; 0)_{0,0}`
pub fn z_a<F: Field>(d: &Arc<MoritaData<F>>, x: &Module<F>) -> LambdaModule<F> {
    let y = Module::zero(&d.b);
    let mx = tensor(&d.m, x);
    let ny = tensor(&d.n, &y);
    let f = ModMap::zero(d.field(), &mx.module.dims, &y.dims);
    let g = ModMap::zero(d.field(), &ny.module.dims, &x.dims);
    LambdaModule::new(d, x.clone(), y, f, g).expect("Z_A is a Λ-module")
}

/// `Z_B Y = (0; Y)_{0,0}`
pub fn z_b<F: Field>(d: &Arc<MoritaData<F>>, y: &Module<F>) -> LambdaModule<F> {
    let x = Module::zero(&d.a);
    let mx = tensor(&d.m, &x);
    let ny = tensor(&d.n, y);
    let f = ModMap::zero(d.field(), &mx.module.dims, &y.dims);
    let g = ModMap::zero(d.field(), &ny.module.dims, &x.dims);
    LambdaModule::new(d, x, y.clone(), f, g).expect("Z_B is a Λ-module")
}

pub fn t<F: Field>(d: &Arc<MoritaData<F>>, side: Side, m: &Module<F>) -> LambdaModule<F> {
    match side {
        Side::A => t_a(d, m),
        Side::B => t_b(d, m),
    }
}

pub fn h<F: Field>(d: &Arc<MoritaData<F>>, side: Side, m: &Module<F>) -> LambdaModule<F> {
    match side {
        Side::A => h_a(d, m),
        Side::B => h_b(d, m),
    }
}

pub fn z<F: Field>(d: &Arc<MoritaData<F>>, side: Side, m: &Module<F>) -> LambdaModule<F> {
    match side {
        Side::A => z_a(d, m),
        Side::B => z_b(d, m),
    }
}

/// `T_A a` between `T_A X` and `T_A X'`.
pub fn t_a_map<F: Field>(s: &LambdaModule<F>, t: &LambdaModule<F>, a: &ModMap<F>) -> LambdaMap<F> {
    LambdaMap {
        a: a.clone(),
        b: tensor_map(&s.mx, &t.mx, a),
    }
}

/// `T_B b` between `T_B Y` and `T_B Y'`.
pub fn t_b_map<F: Field>(s: &LambdaModule<F>, t: &LambdaModule<F>, b: &ModMap<F>) -> LambdaMap<F> {
    LambdaMap {
        a: tensor_map(&s.ny, &t.ny, b),
        b: b.clone(),
    }
}

/// `H_A a` between `H_A X` and `H_A X'`.
pub fn h_a_map<F: Field>(s: &LambdaModule<F>, t: &LambdaModule<F>, a: &ModMap<F>) -> LambdaMap<F> {
    LambdaMap {
        a: a.clone(),
        b: hom_module_map(&s.hnx, &t.hnx, a),
    }
}

/// `H_B b` between `H_B Y` and `H_B Y'`.
pub fn h_b_map<F: Field>(s: &LambdaModule<F>, t: &LambdaModule<F>, b: &ModMap<F>) -> LambdaMap<F> {
    LambdaMap {
        a: hom_module_map(&s.hmy, &t.hmy, b),
        b: b.clone(),
    }
}

/// `U_A L = X`, `U_B L = Y`.
pub fn u<F: Field>(l: &LambdaModule<F>, side: Side) -> Module<F> {
    match side {
        Side::A => l.x.clone(),
        Side::B => l.y.clone(),
    }
}

/// `C_A L = Coker g`, `C_B L = Coker f`, with the projection from `X` (resp. `Y`).
pub fn c<F: Field>(l: &LambdaModule<F>, side: Side) -> (Module<F>, ModMap<F>) {
    let (m, p, _) = match side {
        Side::A => cokernel(&l.x, &l.g),
        Side::B => cokernel(&l.y, &l.f),
    };
    (m, p)
}

/// `K_A L = Ker f̃`, `K_B L = Ker g̃`, with the inclusion into `X` (resp. `Y`).
pub fn k<F: Field>(l: &LambdaModule<F>, side: Side) -> (Module<F>, ModMap<F>) {
    match side {
        Side::A => kernel(&l.x, &l.ft),
        Side::B => kernel(&l.y, &l.gt),
    }
}

/// Indecomposable projective Λ-modules: `T_A(A e_v)` then `T_B(B e_w)`.
pub fn lambda_projectives<F: Field>(d: &Arc<MoritaData<F>>) -> Vec<LambdaModule<F>> {
    let mut out: Vec<LambdaModule<F>> = projectives(&d.a).iter().map(|p| t_a(d, p)).collect();
    out.extend(projectives(&d.b).iter().map(|q| t_b(d, q)));
    out
}

/// Indecomposable injective Λ-modules: `H_A(I)` then `H_B(J)`.
pub fn lambda_injectives<F: Field>(d: &Arc<MoritaData<F>>) -> Vec<LambdaModule<F>> {
    let mut out: Vec<LambdaModule<F>> = injectives(&d.a).iter().map(|i| h_a(d, i)).collect();
    out.extend(injectives(&d.b).iter().map(|j| h_b(d, j)));
    out
}

/// Simple Λ-modules: `Z_A S` then `Z_B S'`.
pub fn lambda_simples<F: Field>(d: &Arc<MoritaData<F>>) -> Result<Vec<LambdaModule<F>>> {
    let mut out: Vec<LambdaModule<F>> = simples(&d.a)?.iter().map(|s| z_a(d, s)).collect();
    out.extend(simples(&d.b)?.iter().map(|s| z_b(d, s)));
    Ok(out)
}
