//! Gorenstein membership through Mon and Epi, and the two explicit
//! resolutions of quadruples with projective or injective components.

use morita_core::algebra::module::isomorphic;
use morita_core::classes::{in_epi, in_mon, GorensteinCert, GorensteinHypotheses};
use morita_core::homology::{
    coresolution_ij, is_injective, is_projective, lambda_inj_dim_upto, lambda_is_injective,
    lambda_is_projective, lambda_proj_dim_upto, resolution_pq, DimBound,
};
use morita_core::morita::{lambda_projectives, LambdaModule};
use morita_core::Field;

use super::{dims_of, fact, preflight, Ctx};
use crate::report::Claim;

pub(super) fn run<F: Field>(ctx: &Ctx<F>) -> std::result::Result<Vec<Claim>, Vec<String>> {
    preflight(
        ctx.inst,
        &[
            "tensors-vanish",
            "A-self-injective",
            "B-self-injective",
            "AN-projective",
            "BM-projective",
            "MA-flat",
            "NB-flat",
        ],
    )?;
    let d = ctx.d().clone();
    let h = GorensteinHypotheses::check(&d);
    let mut out = vec![
        Claim::new(
            "gorenstein/a-self-injective",
            "A is self-injective",
            h.a_self_injective,
            "",
        ),
        Claim::new(
            "gorenstein/b-self-injective",
            "B is self-injective",
            h.b_self_injective,
            "",
        ),
    ];

    // each indecomposable projective, by the coresolution and by the dual
    let projs = lambda_projectives(&d);
    let by_cores: Vec<bool> = projs
        .iter()
        .map(|p| coresolution_ij(p).is_ok_and(|s| s.is_exact()))
        .collect();
    let by_dual: Vec<bool> = projs
        .iter()
        .map(|p| lambda_inj_dim_upto(p, 1).at_most(1))
        .collect();
    let show = |v: &[bool]| {
        v.iter()
            .map(|b| if *b { '1' } else { '0' })
            .collect::<String>()
    };
    out.push(Claim::new(
        "gorenstein/injdim-coresolution",
        "inj.dim ≤ 1 for projective Λ-modules, from 0 -> P -> H_A I ⊕ H_B J -> (Hom(M,J); Hom(N,I)) -> 0",
        by_cores.iter().all(|b| *b) && h.injdim_by_coresolution,
        format!("{} projectives: {}", projs.len(), show(&by_cores)),
    ));
    out.push(Claim::new(
        "gorenstein/injdim-dual",
        "inj.dim ≤ 1 for projective Λ-modules, from the dual projective resolution",
        by_dual.iter().all(|b| *b) && h.injdim_by_dual,
        format!("{} projectives: {}", projs.len(), show(&by_dual)),
    ));
    out.push(Claim::new(
        "gorenstein/injdim-routes-agree",
        "both routes give the same bound for every projective",
        by_cores == by_dual,
        format!("{} against {}", show(&by_cores), show(&by_dual)),
    ));

    let cert = match GorensteinCert::certify(&d) {
        Ok(c) => c,
        Err(e) => {
            for id in [
                "gorenstein/gp-is-mon",
                "gorenstein/gi-is-epi",
                "gorenstein/gp-finite-pd",
            ] {
                out.push(Claim::new(id, "", false, format!("not certified: {e}")));
            }
            return Ok(out);
        }
    };
    let n = (2 * ctx.cfg.count).max(200);
    let t = ctx.tally(
        "gp",
        n,
        |s| s.lambda_module(&d),
        ctx.universe_lambda(),
        |_| true,
        |l| {
            let (gp, mon) = (cert.gp_member(l), in_mon(l));
            fact(
                gp == mon,
                format!("{}: Gorenstein projective {gp}, in Mon {mon}", dims_of(l)),
            )
        },
    );
    out.push(Claim::new(
        "gorenstein/gp-is-mon",
        "Gorenstein projective Λ-modules are Mon",
        t.ok(),
        t.witness("modules"),
    ));
    let t = ctx.tally(
        "gi",
        n,
        |s| s.lambda_module(&d),
        ctx.universe_lambda(),
        |_| true,
        |l| {
            let (gi, epi) = (cert.gi_member(l), in_epi(l));
            fact(
                gi == epi,
                format!("{}: Gorenstein injective {gi}, in Epi {epi}", dims_of(l)),
            )
        },
    );
    out.push(Claim::new(
        "gorenstein/gi-is-epi",
        "Gorenstein injective Λ-modules are Epi",
        t.ok(),
        t.witness("modules"),
    ));
    let t = ctx.tally(
        "gp-pd",
        ctx.cfg.count,
        |s| s.lambda_module(&d),
        ctx.universe_lambda(),
        |l| cert.gp_member(l),
        |l| {
            let pd = lambda_proj_dim_upto(l, 3);
            fact(
                pd == DimBound::Exact(0) || !matches!(pd, DimBound::Exact(_)),
                format!(
                    "{} is Gorenstein projective with finite proj.dim {pd:?}",
                    dims_of(l)
                ),
            )
        },
    );
    out.push(Claim::new(
        "gorenstein/gp-finite-pd",
        "a Gorenstein projective of finite proj.dim is projective",
        t.ok(),
        t.witness("Gorenstein projectives"),
    ));
    Ok(out)
}

fn components_projective<F: Field>(l: &LambdaModule<F>) -> bool {
    is_projective(&l.x) && is_projective(&l.y)
}

fn components_injective<F: Field>(l: &LambdaModule<F>) -> bool {
    is_injective(&l.x) && is_injective(&l.y)
}

pub(super) fn run_resolutions<F: Field>(
    ctx: &Ctx<F>,
) -> std::result::Result<Vec<Claim>, Vec<String>> {
    preflight(ctx.inst, &["tensors-vanish"])?;
    let d = ctx.d().clone();
    let n = ctx.cfg.count.max(50);
    let mut out = Vec::new();

    let t = ctx.tally(
        "pq",
        n,
        |s| {
            let (p, q) = (s.projective(&d.a), s.projective(&d.b));
            s.quadruple(&d, p, q)
        },
        ctx.universe_lambda(),
        components_projective,
        |l| {
            let s = resolution_pq(l).map_err(|e| format!("{}: {e}", dims_of(l)))?;
            let w = &s.left;
            let shape =
                w.f.blocks
                    .iter()
                    .chain(&w.g.blocks)
                    .all(|b| b.entries().iter().all(|e| *e == d.field().zero()))
                    && isomorphic(&w.x, &l.ny.module, 0).is_iso()
                    && isomorphic(&w.y, &l.mx.module, 0).is_iso();
            let mid_dims = s.mid.x.dim() == l.x.dim() + l.ny.module.dim()
                && s.mid.y.dim() == l.y.dim() + l.mx.module.dim();
            fact(
                s.is_exact() && lambda_is_projective(&s.mid) && shape && mid_dims,
                format!("resolution of {} has the wrong shape", dims_of(l)),
            )
        },
    );
    out.push(Claim::new(
        "resolutions/pq",
        "0 -> (N⊗Q; M⊗P)_{0,0} -> T_A P ⊕ T_B Q -> (P; Q) -> 0 is a projective resolution",
        t.ok(),
        t.witness("quadruples"),
    ));

    let t = ctx.tally(
        "ij",
        n,
        |s| {
            let (i, j) = (s.injective(&d.a), s.injective(&d.b));
            s.quadruple(&d, i, j)
        },
        ctx.universe_lambda(),
        components_injective,
        |l| {
            let s = coresolution_ij(l).map_err(|e| format!("{}: {e}", dims_of(l)))?;
            let w = &s.right;
            let shape =
                w.f.blocks
                    .iter()
                    .chain(&w.g.blocks)
                    .all(|b| b.entries().iter().all(|e| *e == d.field().zero()))
                    && isomorphic(&w.x, &l.hmy.module, 0).is_iso()
                    && isomorphic(&w.y, &l.hnx.module, 0).is_iso();
            let mid_dims = s.mid.x.dim() == l.x.dim() + l.hmy.module.dim()
                && s.mid.y.dim() == l.y.dim() + l.hnx.module.dim();
            fact(
                s.is_exact() && lambda_is_injective(&s.mid) && shape && mid_dims,
                format!("coresolution of {} has the wrong shape", dims_of(l)),
            )
        },
    );
    out.push(Claim::new(
        "resolutions/ij",
        "0 -> (I; J) -> H_A I ⊕ H_B J -> (Hom(M,J); Hom(N,I))_{0,0} -> 0 is an injective coresolution",
        t.ok(),
        t.witness("quadruples"),
    ));
    Ok(out)
}
