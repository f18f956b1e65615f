//! Splitting `L` as `T_A U ⊕ T_B V` or `H_A X ⊕ H_B Y`.

use super::{check_sides, in_delta, in_epi, in_mon, in_nabla, ClassSpec};
use crate::algebra::bimodule::{hom_module, hom_module_map, tensor, tensor_map};
use crate::algebra::{ModMap, Module};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homology::lambda::{into, out_of};
use crate::homology::{ext1_dim, lift_through, splitting, tor1, ShortExactSequence};
use crate::morita::{
    c, h_a, h_b, k, lambda_direct_sum, t_a, t_b, LambdaMap, LambdaModule, MoritaData, Side,
};

/// `L ≅ first-part ⊕ second-part` with mutually inverse maps.
#[derive(Clone, Debug)]
pub struct Decomposition<F: Field> {
    /// `Coker g` resp. `Ker f̃`, over A.
    pub first: Module<F>,
    /// `Coker f` resp. `Ker g̃`, over B.
    pub second: Module<F>,
    /// `T_A first ⊕ T_B second` resp. `H_A first ⊕ H_B second`.
    pub sum: LambdaModule<F>,
    pub to_l: LambdaMap<F>,
    pub from_l: LambdaMap<F>,
}

impl<F: Field> Decomposition<F> {
    /// Both maps are Λ-maps and compose to identities.
    pub fn verify(&self, l: &LambdaModule<F>) -> bool {
        self.to_l.is_morphism(&self.sum, l)
            && self.from_l.is_morphism(l, &self.sum)
            && self.to_l.compose(&self.from_l) == LambdaMap::identity(l)
            && self.from_l.compose(&self.to_l) == LambdaMap::identity(&self.sum)
    }
}

fn need_vanishing<F: Field>(d: &MoritaData<F>) -> Result<()> {
    if d.tensors_vanish() {
        Ok(())
    } else {
        Err(Error::Hypothesis("M⊗N and N⊗M must vanish".into()))
    }
}

fn invert<F: Field>(m: &LambdaMap<F>) -> Option<LambdaMap<F>> {
    Some(LambdaMap {
        a: m.a.inverse()?,
        b: m.b.inverse()?,
    })
}

/// For `L ∈ Mon`: `L ≅ T_A(Coker g) ⊕ T_B(Coker f)` when both cokernel
/// sequences split.
pub fn delta_splits<F: Field>(l: &LambdaModule<F>) -> Result<Option<Decomposition<F>>> {
    let d = &l.data;
    need_vanishing(d)?;
    if !in_mon(l) {
        return Ok(None);
    }
    let (cg, p2) = c(l, Side::A);
    let (cf, p1) = c(l, Side::B);
    let Some(s2) = lift_through(&p2, &ModMap::identity(&cg), &cg, &l.x) else {
        return Ok(None);
    };
    let Some(s1) = lift_through(&p1, &ModMap::identity(&cf), &cf, &l.y) else {
        return Ok(None);
    };
    let ta = t_a(d, &cg);
    let tb = t_b(d, &cf);
    let sum = lambda_direct_sum(d, &[&ta, &tb]);
    let c1 = LambdaMap {
        a: s2.clone(),
        b: l.f.compose(&tensor_map(&ta.mx, &l.mx, &s2)),
    };
    let c2 = LambdaMap {
        a: l.g.compose(&tensor_map(&tb.ny, &l.ny, &s1)),
        b: s1,
    };
    let to_l = out_of(&sum, &[c1, c2]);
    let Some(from_l) = invert(&to_l) else {
        return Ok(None);
    };
    let dec = Decomposition {
        first: cg,
        second: cf,
        sum: sum.module,
        to_l,
        from_l,
    };
    Ok(dec.verify(l).then_some(dec))
}

/// For `L ∈ Epi`: `L ≅ H_A(Ker f̃) ⊕ H_B(Ker g̃)` when both kernel sequences
/// split.
pub fn nabla_splits<F: Field>(l: &LambdaModule<F>) -> Result<Option<Decomposition<F>>> {
    let d = &l.data;
    need_vanishing(d)?;
    if !in_epi(l) {
        return Ok(None);
    }
    let (kf, i1) = k(l, Side::A);
    let (kg, i2) = k(l, Side::B);
    let s1 = ShortExactSequence::new(
        kf.clone(),
        l.x.clone(),
        l.hmy.module.clone(),
        i1,
        l.ft.clone(),
    )?;
    let s2 = ShortExactSequence::new(
        kg.clone(),
        l.y.clone(),
        l.hnx.module.clone(),
        i2,
        l.gt.clone(),
    )?;
    let Some(r1) = splitting(&s1)? else {
        return Ok(None);
    };
    let Some(r2) = splitting(&s2)? else {
        return Ok(None);
    };
    let ha = h_a(d, &kf);
    let hb = h_b(d, &kg);
    let sum = lambda_direct_sum(d, &[&ha, &hb]);
    let c1 = LambdaMap {
        a: r1.clone(),
        b: hom_module_map(&l.hnx, &ha.hnx, &r1).compose(&l.gt),
    };
    let c2 = LambdaMap {
        a: hom_module_map(&l.hmy, &hb.hmy, &r2).compose(&l.ft),
        b: r2,
    };
    let from_l = into(&sum, &[c1, c2]);
    let Some(to_l) = invert(&from_l) else {
        return Ok(None);
    };
    let dec = Decomposition {
        first: kf,
        second: kg,
        sum: sum.module,
        to_l,
        from_l,
    };
    Ok(dec.verify(l).then_some(dec))
}

/// `L ≅ T_A(Coker g) ⊕ T_B(Coker f)` for `L ∈ Δ(𝒰, 𝒱)`, where `(𝒰, 𝒳)` and
/// `(𝒱, 𝒴)` are meant as cotorsion pairs.
///
/// The hypotheses `Tor₁(M, 𝒰) = 0 = Tor₁(N, 𝒱)`, `M⊗𝒰 ⊆ 𝒴` and
/// `N⊗𝒱 ⊆ 𝒳` are checked on the witnesses of `𝒰` and `𝒱`; `None` if they
/// fail, if `L ∉ Δ(𝒰, 𝒱)` or if a sequence does not split.
pub fn delta_decompose<F: Field>(
    l: &LambdaModule<F>,
    us: &ClassSpec<F>,
    vs: &ClassSpec<F>,
    xs: &ClassSpec<F>,
    ys: &ClassSpec<F>,
) -> Result<Option<Decomposition<F>>> {
    let d = &l.data;
    check_sides(d, xs, ys)?;
    need_vanishing(d)?;
    for u in us.witnesses() {
        if tor1(&d.m, &u) != 0 || !ys.contains(&tensor(&d.m, &u).module)? {
            return Ok(None);
        }
    }
    for v in vs.witnesses() {
        if tor1(&d.n, &v) != 0 || !xs.contains(&tensor(&d.n, &v).module)? {
            return Ok(None);
        }
    }
    if !in_delta(l, us, vs)? {
        return Ok(None);
    }
    delta_splits(l)
}

/// Dual of [`delta_decompose`]: `L ≅ H_A(Ker f̃) ⊕ H_B(Ker g̃)` for
/// `L ∈ ∇(𝒳, 𝒴)`, checking `Ext¹(M, 𝒴) = 0 = Ext¹(N, 𝒳)`,
/// `Hom_B(M, 𝒴) ⊆ 𝒰` and `Hom_A(N, 𝒳) ⊆ 𝒱` on witnesses of `𝒳`, `𝒴`.
pub fn nabla_decompose<F: Field>(
    l: &LambdaModule<F>,
    us: &ClassSpec<F>,
    vs: &ClassSpec<F>,
    xs: &ClassSpec<F>,
    ys: &ClassSpec<F>,
) -> Result<Option<Decomposition<F>>> {
    let d = &l.data;
    check_sides(d, us, vs)?;
    need_vanishing(d)?;
    let bm = d.m.left_module();
    let an = d.n.left_module();
    for y in ys.witnesses() {
        if ext1_dim(&bm, &y) != 0 || !us.contains(&hom_module(&d.m, &y).module)? {
            return Ok(None);
        }
    }
    for x in xs.witnesses() {
        if ext1_dim(&an, &x) != 0 || !vs.contains(&hom_module(&d.n, &x).module)? {
            return Ok(None);
        }
    }
    if !in_nabla(l, xs, ys)? {
        return Ok(None);
    }
    nabla_splits(l)
}
