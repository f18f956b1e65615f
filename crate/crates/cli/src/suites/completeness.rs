//! The four approximation sequences, the recipe approximations built from
//! them, and merged approximations over triangular rings.

use morita_core::algebra::bimodule::hom_module;
use morita_core::algebra::module::{injectives, isomorphic};
use morita_core::classes::{LambdaClass, Recipe, SidePair};
use morita_core::homology::{
    approx_from_a_left, approx_from_a_right, approx_from_b_left, approx_from_b_right,
    injective_copresentation, is_projective, projective_cover, triangular_approximation,
    triangular_coapproximation, ApproxSequence, LambdaSequence, ShortExactSequence,
};
use morita_core::morita::{lambda_injectives, lambda_projectives, lambda_simples, LambdaModule};
use morita_core::{Field, Result};

use super::{dims_of, fact, preflight, Ctx};
use crate::report::Claim;

fn cover<F: Field>(x: &morita_core::algebra::Module<F>) -> ShortExactSequence<F> {
    let pr = projective_cover(x);
    ShortExactSequence {
        left: pr.k,
        mid: pr.p,
        right: pr.x,
        i: pr.incl,
        p: pr.proj,
    }
}

fn envelope<F: Field>(x: &morita_core::algebra::Module<F>) -> ShortExactSequence<F> {
    let (i, s, c, p) = injective_copresentation(x);
    ShortExactSequence {
        left: x.clone(),
        mid: i,
        right: c,
        i: s,
        p,
    }
}

/// Approximation sequence `c1`..`c4` of `l`, built from projective covers
/// and injective envelopes of the components.
pub fn standard_approximation<F: Field>(
    l: &LambdaModule<F>,
    k: usize,
) -> Result<ApproxSequence<F>> {
    match k {
        1 => {
            let pr = projective_cover(&l.x);
            approx_from_b_right(l, &pr.proj, &pr.p, &cover(&l.y))
        }
        2 => {
            let pr = projective_cover(&l.y);
            approx_from_a_right(l, &pr.proj, &pr.p, &cover(&l.x))
        }
        3 => {
            let (i, sigma, _, _) = injective_copresentation(&l.x);
            approx_from_b_left(l, &sigma, &i, &envelope(&l.y))
        }
        4 => {
            let (j, sigma, _, _) = injective_copresentation(&l.y);
            approx_from_a_left(l, &sigma, &j, &envelope(&l.x))
        }
        _ => Err(morita_core::Error::Unknown(format!(
            "no approximation c{k}"
        ))),
    }
}

/// The displayed outer component must be the computed one.
fn outer<F: Field>(
    l: &LambdaModule<F>,
    r: Result<ApproxSequence<F>>,
    pick: impl Fn(
        &LambdaSequence<F>,
    ) -> (
        &morita_core::algebra::Module<F>,
        &morita_core::algebra::Module<F>,
    ),
    shape_end: impl Fn(&ShortExactSequence<F>) -> &morita_core::algebra::Module<F>,
) -> std::result::Result<(), String> {
    let a = r.map_err(|e| format!("{}: {e}", dims_of(l)))?;
    let (comp, mid) = pick(&a.seq);
    let ok = a.seq.is_exact()
        && a.shape.is_exact()
        && isomorphic(comp, shape_end(&a.shape), 0).is_iso()
        && a.shape.mid == *mid;
    fact(
        ok,
        format!(
            "approximation of {} does not have the displayed shape",
            dims_of(l)
        ),
    )
}

pub(super) fn run<F: Field>(ctx: &Ctx<F>) -> std::result::Result<Vec<Claim>, Vec<String>> {
    preflight(
        ctx.inst,
        &["BM-projective", "AN-projective", "NB-flat", "MA-flat"],
    )?;
    let d = ctx.d().clone();
    let n = ctx.cfg.count.max(100);
    let mut out = Vec::new();
    let gen = |s: &mut crate::sample::Sampler| s.lambda_module(&d);

    let anchors = [
        "0 -> (K; M⊗P ⊕ Y) -> T_A P ⊕ T_B V -> L -> 0 is exact",
        "0 -> (X ⊕ N⊗Q; K) -> T_A U ⊕ T_B Q -> L -> 0 is exact",
        "0 -> L -> H_A I ⊕ H_B Y -> (C; Hom_A(N,I) ⊕ V) -> 0 is exact",
        "0 -> L -> H_A X ⊕ H_B J -> (U ⊕ Hom_B(M,J); C) -> 0 is exact",
    ];
    for (k, anchor) in (1..=4).zip(anchors) {
        let t = ctx.tally(
            &format!("c{k}"),
            n,
            gen,
            ctx.universe_lambda(),
            |_| true,
            |l| {
                let r = standard_approximation(l, k);
                match k {
                    1 => outer(l, r, |s| (&s.left.y, &s.mid.y), |sh| &sh.left),
                    2 => outer(l, r, |s| (&s.left.x, &s.mid.x), |sh| &sh.left),
                    3 => outer(l, r, |s| (&s.right.y, &s.mid.y), |sh| &sh.right),
                    _ => outer(l, r, |s| (&s.right.x, &s.mid.x), |sh| &sh.right),
                }
            },
        );
        out.push(Claim::new(
            format!("completeness/c{k}"),
            anchor,
            t.ok(),
            t.witness("modules"),
        ));
    }

    out.extend(recipes_claim(ctx));
    if ctx.inst.has("M-zero") {
        out.extend(triangular_claims(ctx));
    }
    Ok(out)
}

/// Distinguished Λ-modules and a few random ones.
fn witnesses<F: Field>(ctx: &Ctx<F>, label: &str, extra: usize) -> Vec<LambdaModule<F>> {
    let d = ctx.d();
    let mut ws = lambda_simples(d).unwrap_or_default();
    ws.extend(lambda_projectives(d));
    ws.extend(lambda_injectives(d));
    match ctx.universe {
        Some(u) => ws.extend(u.lambda.iter().cloned()),
        None => {
            let mut s = ctx.sampler(label);
            ws.extend((0..extra).map(|_| s.lambda_module(d)));
        }
    }
    ws
}

fn recipes_claim<F: Field>(ctx: &Ctx<F>) -> Option<Claim> {
    let d = ctx.d();
    let ws = witnesses(ctx, "recipes", 6);
    let mut recipes = Vec::new();
    for sp in [SidePair::Projective, SidePair::Injective] {
        recipes.extend([
            Recipe::FromBRight(sp),
            Recipe::FromBLeft(sp),
            Recipe::FromARight(sp),
            Recipe::FromALeft(sp),
        ]);
    }
    recipes.retain(|r| r.hypotheses(d).is_ok());
    if recipes.is_empty() {
        return None;
    }
    let check = |r: &Recipe, l: &LambdaModule<F>| -> std::result::Result<(), String> {
        let (lc, rc) = r.classes(d);
        let err = |e: morita_core::Error| format!("{r:?} on {}: {e}", dims_of(l));
        let s = r.right_approx(l).map_err(err)?;
        let ok = s.is_exact()
            && lc.contains(&s.mid).map_err(err)?
            && rc.contains(&s.left).map_err(err)?;
        fact(
            ok,
            format!(
                "{r:?}: right approximation of {} leaves ({}, {})",
                dims_of(l),
                lc.name(),
                rc.name()
            ),
        )?;
        let s = r.left_approx(l).map_err(err)?;
        let ok = s.is_exact()
            && rc.contains(&s.mid).map_err(err)?
            && lc.contains(&s.right).map_err(err)?;
        fact(
            ok,
            format!(
                "{r:?}: left approximation of {} leaves ({}, {})",
                dims_of(l),
                lc.name(),
                rc.name()
            ),
        )
    };
    let failure = pairs_first_failure(&recipes, &ws, check);
    Some(Claim::new(
        "completeness/recipes",
        "the recipe pairs are complete: both approximations land in the declared classes",
        failure.is_none(),
        failure.unwrap_or_else(|| {
            format!(
                "{} of 8 recipes apply, checked on {} modules",
                recipes.len(),
                ws.len()
            )
        }),
    ))
}

fn pairs_first_failure<R: Sync, T: Sync>(
    rs: &[R],
    ts: &[T],
    check: impl Fn(&R, &T) -> std::result::Result<(), String> + Sync,
) -> Option<String> {
    use rayon::prelude::*;
    let idx: Vec<(usize, usize)> = (0..rs.len())
        .flat_map(|i| (0..ts.len()).map(move |j| (i, j)))
        .collect();
    let res: Vec<_> = idx
        .par_iter()
        .map(|&(i, j)| check(&rs[i], &ts[j]).err())
        .collect();
    res.into_iter().flatten().next()
}

fn triangular_claims<F: Field>(ctx: &Ctx<F>) -> Vec<Claim> {
    let d = ctx.d().clone();
    let (a, b) = (&d.a, &d.b);
    let ws = witnesses(ctx, "triangular", ctx.cfg.count.min(40));
    let nb_flat = is_projective(&d.n.right_module(&std::sync::Arc::new(b.opposite())));
    let an_proj = is_projective(&d.n.left_module());
    let mut out = Vec::new();

    // (𝒫, All) on A with either pair on B; Tor₁(N, 𝒱) = 0 is needed
    let pairs: Vec<SidePair> = [SidePair::Projective, SidePair::Injective]
        .into_iter()
        .filter(|sp| *sp == SidePair::Projective || nb_flat)
        .collect();
    let failure = pairs_first_failure(&pairs, &ws, |sp, l| {
        let sa = SidePair::Projective;
        let err = |e: morita_core::Error| format!("{sp:?} on {}: {e}", dims_of(l));
        let s = triangular_approximation(l, &sa.special_right(&l.x), &sp.special_right(&l.y))
            .map_err(err)?;
        let mid = LambdaClass::TSum(sa.left(a), sp.left(b))
            .contains(&s.mid)
            .map_err(err)?;
        let left = LambdaClass::Column(sa.right(a), sp.right(b))
            .contains(&s.left)
            .map_err(err)?;
        fact(
            s.is_exact() && mid && left,
            format!(
                "merged approximation of {} with {sp:?} on B leaves the pair",
                dims_of(l)
            ),
        )
    });
    out.push(Claim::new(
        "completeness/triangular-right",
        "over M = 0, (T_A(𝒰) ⊕ T_B(𝒱), (𝒳; 𝒴)) is complete via merged approximations",
        failure.is_none() && !pairs.is_empty(),
        failure.unwrap_or_else(|| format!("{} pairs on B, {} modules", pairs.len(), ws.len())),
    ));

    // (All, ℐ) on A; Hom_A(N, ℐ) must lie in 𝒱
    let hom_ok = |sp: SidePair| -> bool {
        let v = sp.left(b);
        injectives(a)
            .iter()
            .all(|i| v.contains(&hom_module(&d.n, i).module).unwrap_or(false))
    };
    let pairs: Vec<SidePair> = [SidePair::Injective, SidePair::Projective]
        .into_iter()
        .filter(|sp| an_proj && hom_ok(*sp))
        .collect();
    let failure = pairs_first_failure(&pairs, &ws, |sp, l| {
        let sa = SidePair::Injective;
        let err = |e: morita_core::Error| format!("{sp:?} on {}: {e}", dims_of(l));
        let s = triangular_coapproximation(l, &sa.special_left(&l.x), &sp.special_left(&l.y))
            .map_err(err)?;
        let mid = LambdaClass::HSum(sa.right(a), sp.right(b))
            .contains(&s.mid)
            .map_err(err)?;
        let right = LambdaClass::Column(sa.left(a), sp.left(b))
            .contains(&s.right)
            .map_err(err)?;
        fact(
            s.is_exact() && mid && right,
            format!(
                "merged coapproximation of {} with {sp:?} on B leaves the pair",
                dims_of(l)
            ),
        )
    });
    out.push(Claim::new(
        "completeness/triangular-left",
        "over M = 0, ((𝒰; 𝒱), H_A(𝒳) ⊕ H_B(𝒴)) is complete via merged approximations",
        failure.is_none() && !pairs.is_empty(),
        failure.unwrap_or_else(|| format!("{} pairs on B, {} modules", pairs.len(), ws.len())),
    ));
    out
}
