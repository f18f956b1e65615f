//! Ingredients of the Hovey triples built from one side.

use morita_core::classes::{hovey_ingredients_check, HoveySpec};
use morita_core::morita::{lambda_injectives, lambda_projectives, lambda_simples, LambdaModule};
use morita_core::Field;

use super::Ctx;
use crate::report::Claim;

pub(super) fn run<F: Field>(ctx: &Ctx<F>) -> std::result::Result<Vec<Claim>, Vec<String>> {
    let d = ctx.d().clone();
    let builders: [fn(&_) -> _; 5] = [
        HoveySpec::projective_b,
        HoveySpec::frobenius_b_cofibrant,
        HoveySpec::frobenius_b_fibrant,
        HoveySpec::frobenius_a_cofibrant,
        HoveySpec::frobenius_a_fibrant,
    ];
    let mut refused = Vec::new();
    let specs: Vec<HoveySpec<F>> = builders
        .iter()
        .filter_map(|b| match b(&d) {
            Ok(s) => Some(s),
            Err(e) => {
                refused.push(e.to_string());
                None
            }
        })
        .collect();
    if specs.is_empty() {
        refused.dedup();
        return Err(refused
            .into_iter()
            .map(|e| format!("no triple applies: {e}"))
            .collect());
    }

    let mut ws: Vec<LambdaModule<F>> = lambda_simples(&d).unwrap_or_default();
    ws.extend(lambda_projectives(&d));
    ws.extend(lambda_injectives(&d));
    let mut seqs = Vec::new();
    match ctx.universe {
        Some(u) => {
            ws.extend(u.lambda.iter().cloned());
            let mut s = ctx.sampler("sequences");
            for x in &u.lambda {
                for y in &u.lambda {
                    seqs.push(s.extension(x, y));
                }
            }
        }
        None => {
            let mut s = ctx.sampler("witnesses");
            ws.extend((0..4).map(|_| s.lambda_module(&d)));
            for _ in 0..4 {
                let (x, y) = (s.lambda_module(&d), s.lambda_module(&d));
                seqs.push(s.extension(&x, &y));
            }
        }
    }

    let mut out = Vec::new();
    for spec in &specs {
        match hovey_ingredients_check(spec, &ws, &seqs) {
            Ok(checks) => {
                for c in checks {
                    out.push(Claim::new(
                        format!("hovey/{}/{}", spec.name, c.name),
                        format!("{} is a Hovey triple: {}", spec.name, c.name),
                        c.ok,
                        c.detail,
                    ));
                }
            }
            Err(e) => out.push(Claim::new(
                format!("hovey/{}", spec.name),
                "",
                false,
                e.to_string(),
            )),
        }
    }
    Ok(out)
}
