//! Explicit modules over the corner rings: the worked example, its
//! characteristic-two failure, and the witnesses telling cotorsion pairs apart.

use morita_core::algebra::bimodule::{hom_module, tensor};
use morita_core::algebra::module::{isomorphic, projective, regular, simple};
use morita_core::classes::{
    in_column, in_epi, in_mon, in_nabla, is_left_orthogonal, ClassSpec, LambdaClass,
};
use morita_core::homology::{
    ext, lambda_ext1_dim, lambda_is_projective, lambda_proj_dim_upto, projective_cover, splitting,
    DimBound,
};
use morita_core::morita::{
    h_b, lambda_injectives, lambda_projectives, lambda_simples, t_a, t_b, z_a, z_b, LambdaModule,
};
use morita_core::{Field, Result};

use super::{Ctx, ATTEMPTS_PER_SAMPLE};
use crate::corner::{displayed_extension, sigma_module, top_only};
use crate::report::Claim;

fn claim(out: &mut Vec<Claim>, id: &str, anchor: &str, r: Result<(bool, String)>) {
    match r {
        Ok((ok, w)) => out.push(Claim::new(id, anchor, ok, w)),
        Err(e) => out.push(Claim::new(id, anchor, false, format!("error: {e}"))),
    }
}

fn pd_text(b: DimBound) -> String {
    match b {
        DimBound::Exact(n) => n.to_string(),
        DimBound::Exceeds(n) => format!("> {n}"),
    }
}

fn is_corner<F: Field>(ctx: &Ctx<F>) -> std::result::Result<(), Vec<String>> {
    sigma_module(ctx.d())
        .map(|_| ())
        .map_err(|e| vec![e.to_string()])
}

pub(super) fn run_example<F: Field>(ctx: &Ctx<F>) -> std::result::Result<Vec<Claim>, Vec<String>> {
    is_corner(ctx)?;
    if ctx.d().field().characteristic() == 2 {
        return Err(vec!["the example needs characteristic other than 2".into()]);
    }
    let d = ctx.d().clone();
    let mut out = Vec::new();
    let l = sigma_module(&d).expect("checked");
    let top = top_only(&d).expect("checked");
    let (a, b) = (&d.a, &d.b);
    let (inj_a, inj_b) = (ClassSpec::injectives(a), ClassSpec::injectives(b));
    let (proj_a, proj_b) = (ClassSpec::projectives(a), ClassSpec::projectives(b));

    claim(
        &mut out,
        "corner/dim-lambda",
        "dim Λ = 8",
        Ok((d.lambda.dim() == 8, format!("dim Λ = {}", d.lambda.dim()))),
    );
    claim(
        &mut out,
        "corner/m-tensor-p1",
        "M ⊗ Ae₁ ≅ S₂",
        (|| {
            let t = tensor(&d.m, &projective(a, 0)).module;
            Ok((
                isomorphic(&t, &simple(b, 1)?, 0).is_iso(),
                format!("dims {:?}", t.dims),
            ))
        })(),
    );
    claim(
        &mut out,
        "corner/hom-m-p1",
        "Hom_A(M, Ae₁) ≅ S₁",
        (|| {
            let h = hom_module(&d.n, &projective(a, 0)).module;
            Ok((
                isomorphic(&h, &simple(b, 0)?, 0).is_iso(),
                format!("dims {:?}", h.dims),
            ))
        })(),
    );
    let nn = tensor(&d.n, &d.m.left_module()).module.dim();
    let mm = tensor(&d.m, &d.n.left_module()).module.dim();
    claim(
        &mut out,
        "corner/tensors-vanish",
        "N ⊗ M = 0 = M ⊗ N",
        Ok((nn == 0 && mm == 0, format!("dims {nn}, {mm}"))),
    );
    claim(
        &mut out,
        "corner/sigma-classes",
        "L = (Ae₁; Ae₁)_{σ,σ} lies in Mon, Epi and (ℐ; ℐ)",
        (|| {
            let (m, e, c) = (in_mon(&l), in_epi(&l), in_column(&l, &inj_a, &inj_b)?);
            Ok((
                m && e && c,
                format!("mon {m}, epi {e}, column(inj; inj) {c}"),
            ))
        })(),
    );
    claim(
        &mut out,
        "corner/sigma-adjoint",
        "σ̃: Ae₁ -> Hom_A(M, Ae₁) is the projection onto S₁",
        (|| {
            let ok = l.ft.is_epi()
                && isomorphic(&l.hmy.module, &simple(a, 0)?, 0).is_iso()
                && l.ft.blocks.iter().map(|m| m.rank()).sum::<usize>() == 1;
            Ok((ok, format!("target dims {:?}", l.hmy.module.dims)))
        })(),
    );
    let e11 = lambda_ext1_dim(&l, &l);
    claim(
        &mut out,
        "corner/sigma-self-ext",
        "Ext¹(L, L) ≠ 0",
        Ok((e11 > 0, format!("dim Ext¹(L, L) = {e11}"))),
    );
    claim(
        &mut out,
        "corner/displayed-nonsplit",
        "the displayed self-extension of L does not split",
        (|| {
            let s = displayed_extension(&d)?;
            let flat = s.flatten();
            let split = splitting(&flat)?.is_some();
            let class = ext(&flat.right, &flat.left, 1).class_of(&flat)?;
            Ok((
                s.is_exact() && !split && !class.is_zero(),
                format!("exact {}, splits {split}", s.is_exact()),
            ))
        })(),
    );
    let pd = lambda_proj_dim_upto(&l, 4);
    claim(
        &mut out,
        "corner/sigma-pd",
        "proj.dim L = 1",
        Ok((
            pd == DimBound::Exact(1),
            format!("proj.dim {}", pd_text(pd)),
        )),
    );
    claim(
        &mut out,
        "corner/top-only",
        "(Ae₁; 0) is in neither Mon nor Epi and has proj.dim 1",
        (|| {
            let pd = lambda_proj_dim_upto(&top, 4);
            let (m, e) = (in_mon(&top), in_epi(&top));
            Ok((
                !m && !e && pd == DimBound::Exact(1),
                format!("mon {m}, epi {e}, proj.dim {}", pd_text(pd)),
            ))
        })(),
    );
    claim(
        &mut out,
        "corner/t-a-s2",
        "T_A S₂ is projective",
        (|| {
            Ok((
                lambda_is_projective(&t_a(&d, &simple(a, 1)?)),
                String::new(),
            ))
        })(),
    );
    claim(
        &mut out,
        "corner/witness-a",
        "⊥(ℐ;ℐ) ≠ Mon: L in Mon and (ℐ;ℐ) with Ext¹(L,L) ≠ 0",
        (|| {
            let ok = in_mon(&l) && in_column(&l, &inj_a, &inj_b)? && e11 > 0;
            Ok((ok, format!("dim Ext¹(L, L) = {e11}")))
        })(),
    );
    claim(
        &mut out,
        "corner/witness-b",
        "⊥(ℐ;ℐ) ≠ Λ-Mod: L is not left orthogonal to (ℐ;ℐ)",
        (|| {
            let tests = [l.clone()];
            let ok = in_column(&l, &inj_a, &inj_b)? && !is_left_orthogonal(&l, &tests);
            Ok((ok, "test module L itself".into()))
        })(),
    );
    claim(
        &mut out,
        "corner/witness-c",
        "Mon ≠ Λ-Mod: (Ae₁; 0) is not in Mon",
        Ok((!in_mon(&top), String::new())),
    );
    claim(
        &mut out,
        "corner/witness-d",
        "(𝒫;𝒫)⊥ ≠ ∇(ℐ,ℐ) = Λ-injectives: L in (𝒫;𝒫) and Epi with Ext¹(L,L) ≠ 0",
        (|| {
            let injs = lambda_injectives(&d);
            let mut in_nab = true;
            for i in &injs {
                in_nab &= in_nabla(i, &inj_a, &inj_b)?;
            }
            let ok = in_column(&l, &proj_a, &proj_b)? && in_epi(&l) && e11 > 0 && in_nab;
            Ok((
                ok,
                format!("{} injectives in ∇(ℐ, ℐ): {in_nab}", injs.len()),
            ))
        })(),
    );
    Ok(out)
}

pub(super) fn run_char2<F: Field>(ctx: &Ctx<F>) -> std::result::Result<Vec<Claim>, Vec<String>> {
    is_corner(ctx)?;
    if ctx.d().field().characteristic() != 2 {
        return Err(vec!["this suite is about characteristic 2".into()]);
    }
    let d = ctx.d().clone();
    let mut out = Vec::new();
    claim(
        &mut out,
        "char2/displayed-splits",
        "in characteristic 2 the displayed self-extension of L splits",
        (|| {
            let s = displayed_extension(&d)?;
            let flat = s.flatten();
            let r = splitting(&flat)?;
            let class = ext(&flat.right, &flat.left, 1).class_of(&flat)?;
            let w = match &r {
                Some(m) => format!("retraction of rank {}", m.rank()),
                None => "no retraction".into(),
            };
            Ok((s.is_exact() && r.is_some() && class.is_zero(), w))
        })(),
    );
    let l = sigma_module(&d).expect("checked");
    let e = lambda_ext1_dim(&l, &l);
    out.push(Claim::new(
        "char2/self-ext-dim",
        "Ext¹(L, L) is computed in characteristic 2 as well",
        true,
        format!("dim Ext¹(L, L) = {e}"),
    ));
    Ok(out)
}

/// Members of the column class `(xs; ys)` to test orthogonality against:
/// the distinguished Λ-modules, `Z` images of side witnesses, `H_B` of
/// injectives, and random draws that land in the class.
fn column_tests<F: Field>(
    ctx: &Ctx<F>,
    label: &str,
    xs: &ClassSpec<F>,
    ys: &ClassSpec<F>,
) -> Vec<LambdaModule<F>> {
    let d = ctx.d();
    let mut cands: Vec<LambdaModule<F>> = Vec::new();
    cands.extend(lambda_simples(d).unwrap_or_default());
    cands.extend(lambda_projectives(d));
    cands.extend(lambda_injectives(d));
    cands.extend(xs.witnesses().iter().map(|x| z_a(d, x)));
    cands.extend(ys.witnesses().iter().map(|y| z_b(d, y)));
    cands.extend(ys.witnesses().iter().map(|y| h_b(d, y)));
    if let Some(u) = ctx.universe {
        cands.extend(u.lambda.iter().cloned());
    } else {
        let mut s = ctx.sampler(label);
        for _ in 0..ATTEMPTS_PER_SAMPLE * 2 {
            cands.push(s.lambda_module(d));
        }
    }
    cands
        .into_iter()
        .filter(|l| in_column(l, xs, ys).unwrap_or(false))
        .collect()
}

pub(super) fn run_differences<F: Field>(
    ctx: &Ctx<F>,
) -> std::result::Result<Vec<Claim>, Vec<String>> {
    let name = ctx.inst.name.as_str();
    match name {
        "a2-corner" => Ok(differences_corner(ctx)),
        "a2-regular" => Ok(differences_regular(ctx)),
        "nakayama-corner" => Ok(differences_nakayama(ctx)),
        _ => Err(vec![format!(
            "no difference witnesses designated for {name}"
        )]),
    }
}

fn differences_corner<F: Field>(ctx: &Ctx<F>) -> Vec<Claim> {
    let d = ctx.d().clone();
    let (a, b) = (&d.a, &d.b);
    let (all_a, all_b) = (ClassSpec::all(a), ClassSpec::all(b));
    let (inj_a, inj_b) = (ClassSpec::injectives(a), ClassSpec::injectives(b));
    let (proj_a, proj_b) = (ClassSpec::projectives(a), ClassSpec::projectives(b));
    let mut out = Vec::new();

    claim(
        &mut out,
        "differences/t-b-nonprojective",
        "(𝒫;𝒫) ≠ ⊥(A-Mod; ℐ): T_B Y for Y = S₁",
        (|| {
            let y = simple(b, 0)?;
            let ty = t_b(&d, &y);
            let tests = column_tests(ctx, "all-inj", &all_a, &inj_b);
            let orth = is_left_orthogonal(&ty, &tests);
            let pp = in_column(&ty, &proj_a, &proj_b)?;
            Ok((
                !lambda_is_projective(&z_b(&d, &y)) && orth && !pp,
                format!("{} tests, in (𝒫;𝒫) {pp}", tests.len()),
            ))
        })(),
    );
    claim(
        &mut out,
        "differences/t-a-nonprojective",
        "(𝒫;𝒫), (𝒫;All) ≠ ⊥(ℐ;All), ⊥(ℐ;ℐ): T_A X for X = S₁",
        (|| {
            let x = simple(a, 0)?;
            let tx = t_a(&d, &x);
            let t1 = column_tests(ctx, "inj-all", &inj_a, &all_b);
            let t2 = column_tests(ctx, "inj-inj", &inj_a, &inj_b);
            let orth = is_left_orthogonal(&tx, &t1) && is_left_orthogonal(&tx, &t2);
            let pp = in_column(&tx, &proj_a, &proj_b)?;
            let pa = in_column(&tx, &proj_a, &all_b)?;
            Ok((
                orth && !pp && !pa,
                format!(
                    "{} + {} tests, in (𝒫;𝒫) {pp}, in (𝒫;All) {pa}",
                    t1.len(),
                    t2.len()
                ),
            ))
        })(),
    );
    let l = sigma_module(&d).expect("a2-corner");
    let top = top_only(&d).expect("a2-corner");
    let pd_l = lambda_proj_dim_upto(&l, 4);
    let e11 = lambda_ext1_dim(&l, &l);
    claim(
        &mut out,
        "differences/t-a-s2",
        "(ℐ;ℐ) ≠ 𝒫^{<∞}: T_A S₂ is projective but not in (ℐ;ℐ)",
        (|| {
            let t = t_a(&d, &simple(a, 1)?);
            let c = in_column(&t, &inj_a, &inj_b)?;
            Ok((lambda_is_projective(&t) && !c, format!("in (ℐ;ℐ) {c}")))
        })(),
    );
    claim(
        &mut out,
        "differences/sigma-finite-pd",
        "⊥(ℐ;ℐ) ≠ 𝒫^{<∞}: proj.dim L = 1 and Ext¹(L, L) ≠ 0 with L in (ℐ;ℐ)",
        (|| {
            let c = in_column(&l, &inj_a, &inj_b)?;
            Ok((
                pd_l == DimBound::Exact(1) && c && e11 > 0,
                format!("proj.dim {}, Ext¹ dim {e11}", pd_text(pd_l)),
            ))
        })(),
    );
    claim(
        &mut out,
        "differences/sigma-not-gp",
        "Mon ≠ GP: L in Mon has proj.dim 1, so is not Gorenstein projective",
        Ok((
            in_mon(&l) && pd_l == DimBound::Exact(1) && !lambda_is_projective(&l),
            format!("proj.dim {}", pd_text(pd_l)),
        )),
    );
    claim(
        &mut out,
        "differences/top-resolution",
        "Mon, Epi ≠ 𝒫^{<∞}: 0 -> T_B S₂ -> T_A Ae₁ -> (Ae₁; 0) -> 0",
        (|| {
            let pr = projective_cover(&top.flatten());
            let k_iso = isomorphic(&pr.k, &t_b(&d, &simple(b, 1)?).flatten(), 0).is_iso();
            let pd = lambda_proj_dim_upto(&top, 4);
            Ok((
                k_iso && pd == DimBound::Exact(1) && !in_mon(&top) && !in_epi(&top),
                format!("kernel ≅ T_B S₂ {k_iso}, proj.dim {}", pd_text(pd)),
            ))
        })(),
    );
    claim(
        &mut out,
        "differences/sigma-epi",
        "⊥Epi ≠ 𝒫^{<∞}: L in Epi with Ext¹(L, L) ≠ 0",
        Ok((
            in_epi(&l) && e11 > 0 && pd_l == DimBound::Exact(1),
            format!("Ext¹ dim {e11}"),
        )),
    );
    out
}

fn differences_regular<F: Field>(ctx: &Ctx<F>) -> Vec<Claim> {
    let d = ctx.d().clone();
    let (a, b) = (&d.a, &d.b);
    let (all_a, all_b) = (ClassSpec::all(a), ClassSpec::all(b));
    let inj_b = ClassSpec::injectives(b);
    let (proj_a, proj_b) = (ClassSpec::projectives(a), ClassSpec::projectives(b));
    let mut out = Vec::new();
    claim(
        &mut out,
        "differences/regular-n-zero",
        "Λ-projectives ≠ (𝒫;𝒫): (N; 0) is in (𝒫;𝒫) but not projective",
        (|| {
            let zn = z_a(&d, &d.n.left_module());
            let pp = in_column(&zn, &proj_a, &proj_b)?;
            let cls = LambdaClass::Column(proj_a.clone(), all_b.clone()).contains(&zn)?;
            let proj = lambda_is_projective(&zn);
            Ok((pp && cls && !proj, format!("dims {:?}", zn.x.dims)))
        })(),
    );
    claim(
        &mut out,
        "differences/regular-t-b",
        "⊥(A-Mod; ℐ) ≠ (𝒫;All), (All;𝒫): T_B Y = (Y; Y)_{0,1} for Y = S₁",
        (|| {
            let y = simple(b, 0)?;
            let ty = t_b(&d, &y);
            let tests = column_tests(ctx, "all-inj", &all_a, &inj_b);
            let orth = is_left_orthogonal(&ty, &tests);
            let pa = in_column(&ty, &proj_a, &all_b)?;
            let ap = in_column(&ty, &all_a, &proj_b)?;
            let same = isomorphic(&ty.x, &y, 0).is_iso();
            Ok((
                orth && !pa && !ap && same,
                format!("{} tests, in (𝒫;All) {pa}, in (All;𝒫) {ap}", tests.len()),
            ))
        })(),
    );
    out
}

fn differences_nakayama<F: Field>(ctx: &Ctx<F>) -> Vec<Claim> {
    let d = ctx.d().clone();
    let (a, b) = (&d.a, &d.b);
    let (all_a, all_b) = (ClassSpec::all(a), ClassSpec::all(b));
    let (inj_a, inj_b) = (ClassSpec::injectives(a), ClassSpec::injectives(b));
    let (proj_a, proj_b) = (ClassSpec::projectives(a), ClassSpec::projectives(b));
    let mut out = Vec::new();
    claim(
        &mut out,
        "differences/t-a-outside-delta",
        "Δ(𝒫, B-Mod) ≠ Mon: T_A S is in Mon but not in Δ(𝒫, B-Mod)",
        (|| {
            let tx = t_a(&d, &simple(a, 0)?);
            let delta = LambdaClass::Delta(proj_a.clone(), all_b.clone()).contains(&tx)?;
            Ok((in_mon(&tx) && !delta, format!("in Δ(𝒫, All) {delta}")))
        })(),
    );
    claim(
        &mut out,
        "differences/t-b-outside-delta",
        "Δ(A-Mod, 𝒫) ≠ Mon: T_B S is in Mon but not in Δ(A-Mod, 𝒫)",
        (|| {
            let ty = t_b(&d, &simple(b, 0)?);
            let delta = LambdaClass::Delta(all_a.clone(), proj_b.clone()).contains(&ty)?;
            Ok((in_mon(&ty) && !delta, format!("in Δ(All, 𝒫) {delta}")))
        })(),
    );
    claim(
        &mut out,
        "differences/z-a-regular",
        "⊥∇(A-Mod, ℐ), ⊥∇(ℐ, B-Mod) ≠ Mon: Z_A A is orthogonal to both but not in Mon",
        (|| {
            let za = z_a(&d, &regular(a));
            let mut tests = Vec::new();
            for (xs, ys, label) in [
                (&all_a, &inj_b, "nabla-all-inj"),
                (&inj_a, &all_b, "nabla-inj-all"),
            ] {
                let mut s = ctx.sampler(label);
                let mut cands = lambda_injectives(&d);
                cands.extend(lambda_simples(&d)?);
                for _ in 0..ATTEMPTS_PER_SAMPLE * 2 {
                    cands.push(s.lambda_module(&d));
                }
                for c in cands {
                    if in_nabla(&c, xs, ys)? {
                        tests.push(c);
                    }
                }
            }
            let orth = is_left_orthogonal(&za, &tests);
            Ok((orth && !in_mon(&za), format!("{} tests", tests.len())))
        })(),
    );
    out
}
