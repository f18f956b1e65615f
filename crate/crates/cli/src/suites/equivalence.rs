//! Λ-modules as quadruples: round trips, Hom dimensions, exactness, simples.

use morita_core::algebra::bimodule::tensor_map;
use morita_core::algebra::module::is_short_exact;
use morita_core::algebra::module::{hom_space, isomorphic, regular, simples};
use morita_core::algebra::ModMap;
use morita_core::homology::LambdaSequence;
use morita_core::linalg::Matrix;
use morita_core::morita::{
    lambda_direct_sum, lambda_hom_dim, lambda_simples, t_a, t_b, LambdaModule,
};
use morita_core::Field;

use super::{dims_of, fact, pairs, Ctx};
use crate::report::Claim;
use crate::sample::{split_sequence, zero_sequence};

fn push_vec<F: Field>(col: &mut Vec<F::Elem>, m: &ModMap<F>) {
    for b in &m.blocks {
        col.extend(b.entries().iter().cloned());
    }
}

/// `dim Hom_Λ(s, t)` computed on quadruples: pairs `(a, b)` of an A-map and a
/// B-map with `b f = f' (1⊗a)` and `a g = g' (1⊗b)`.
pub fn quadruple_hom_dim<F: Field>(s: &LambdaModule<F>, t: &LambdaModule<F>) -> usize {
    let fld = s.field().clone();
    let ha = hom_space(&s.x, &t.x);
    let hb = hom_space(&s.y, &t.y);
    let n = ha.dim() + hb.dim();
    if n == 0 {
        return 0;
    }
    let zero_mx_y = ModMap::zero(&fld, &s.mx.module.dims, &t.y.dims);
    let zero_ny_x = ModMap::zero(&fld, &s.ny.module.dims, &t.x.dims);
    let mut cols: Vec<Vec<F::Elem>> = Vec::with_capacity(n);
    for a in ha.basis() {
        let mut c = Vec::new();
        push_vec(
            &mut c,
            &zero_mx_y.sub(&t.f.compose(&tensor_map(&s.mx, &t.mx, &a))),
        );
        push_vec(&mut c, &a.compose(&s.g));
        cols.push(c);
    }
    for b in hb.basis() {
        let mut c = Vec::new();
        push_vec(&mut c, &b.compose(&s.f));
        push_vec(
            &mut c,
            &zero_ny_x.sub(&t.g.compose(&tensor_map(&s.ny, &t.ny, &b))),
        );
        cols.push(c);
    }
    let rows = cols[0].len();
    if rows == 0 {
        return n;
    }
    let m = Matrix::from_fn(&fld, rows, n, |i, j| cols[j][i].clone());
    n - m.rank()
}

fn componentwise_exact<F: Field>(s: &LambdaSequence<F>) -> bool {
    s.i.a.is_morphism(&s.left.x, &s.mid.x)
        && s.i.b.is_morphism(&s.left.y, &s.mid.y)
        && s.p.a.is_morphism(&s.mid.x, &s.right.x)
        && s.p.b.is_morphism(&s.mid.y, &s.right.y)
        && s.i.is_morphism(&s.left, &s.mid)
        && s.p.is_morphism(&s.mid, &s.right)
        && is_short_exact(&s.i.a, &s.p.a)
        && is_short_exact(&s.i.b, &s.p.b)
}

const ANCHOR: &str = "Λ-modules are the same as quadruples (X, Y, f, g)";

pub(super) fn run<F: Field>(ctx: &Ctx<F>) -> Vec<Claim> {
    let d = ctx.d().clone();
    let n = ctx.cfg.count;
    let mut out = Vec::new();

    let t = ctx.tally(
        "round-trip",
        n,
        |s| s.lambda_module(&d),
        ctx.universe_lambda(),
        |_| true,
        |l| {
            let z = l.flatten();
            let back =
                LambdaModule::unflatten(&d, &z).map_err(|e| format!("{}: {e}", dims_of(l)))?;
            fact(
                back == *l && back.flatten() == z,
                format!("round trip changes {}", dims_of(l)),
            )
        },
    );
    out.push(Claim::new(
        "equivalence/round-trip",
        ANCHOR,
        t.ok(),
        t.witness("modules"),
    ));

    let t = ctx.tally(
        "hom-dim",
        n,
        |s| (s.lambda_module(&d), s.lambda_module(&d)),
        ctx.universe.map(|u| pairs(&u.lambda, &u.lambda)),
        |_| true,
        |(l, m)| {
            let (a, b) = (lambda_hom_dim(l, m), quadruple_hom_dim(l, m));
            fact(
                a == b,
                format!(
                    "Hom {} -> {}: {a} over Λ, {b} on quadruples",
                    dims_of(l),
                    dims_of(m)
                ),
            )
        },
    );
    out.push(Claim::new(
        "equivalence/hom-dim",
        "Hom over Λ equals compatible pairs of component maps",
        t.ok(),
        t.witness("pairs"),
    ));

    // extensions, split sequences and zero composites in turn
    let mut kind = 0usize;
    let seqs = ctx.universe.map(|u| {
        let mut v = Vec::new();
        for (x, y) in pairs(&u.lambda, &u.lambda) {
            v.push(split_sequence(&x, &y));
            v.push(zero_sequence(&x, &y));
        }
        v
    });
    let t = ctx.tally(
        "ses",
        n.max(50),
        |s| {
            kind += 1;
            let (x, y) = (s.lambda_module(&d), s.lambda_module(&d));
            match kind % 3 {
                0 => s.extension(&x, &y),
                1 => split_sequence(&x, &y),
                _ => zero_sequence(&x, &y),
            }
        },
        seqs,
        |_| true,
        |s| {
            let (c, f) = (componentwise_exact(s), s.flatten().is_exact());
            fact(
                c == f,
                format!(
                    "componentwise {c}, over Λ {f} for {} -> {}",
                    dims_of(&s.left),
                    dims_of(&s.right)
                ),
            )
        },
    );
    out.push(Claim::new(
        "equivalence/ses-exactness",
        "a sequence of Λ-modules is exact iff both component sequences are",
        t.ok(),
        t.witness("sequences"),
    ));

    let simple_claim = match (lambda_simples(&d), simples(&d.lambda)) {
        (Ok(ls), Ok(flat)) => {
            let want = d.nva() + d.nvb();
            let distinct = ls.iter().enumerate().all(|(i, s)| {
                s.dim() == 1
                    && ls[..i]
                        .iter()
                        .all(|t| !isomorphic(&s.flatten(), &t.flatten(), 0).is_iso())
            });
            let ok = ls.len() == want
                && flat.len() == want
                && d.lambda.num_vertices() == want
                && distinct;
            Claim::new(
                "equivalence/simple-count",
                "simple Λ-modules are Z_A and Z_B of simples",
                ok,
                format!(
                    "{} simples from the sides, {} over Λ, {} + {} vertices",
                    ls.len(),
                    flat.len(),
                    d.nva(),
                    d.nvb()
                ),
            )
        }
        (Err(e), _) | (_, Err(e)) => {
            Claim::new("equivalence/simple-count", "", false, e.to_string())
        }
    };
    out.push(simple_claim);

    let ta = t_a(&d, &regular(&d.a));
    let tb = t_b(&d, &regular(&d.b));
    let sum = lambda_direct_sum(&d, &[&ta, &tb]).module.flatten();
    let iso = isomorphic(&sum, &regular(&d.lambda), ctx.cfg.seed);
    out.push(Claim::new(
        "equivalence/regular",
        "T_A A ⊕ T_B B is the regular module",
        iso.is_iso(),
        format!("dim {} against dim Λ = {}", sum.dim(), d.lambda.dim()),
    ));
    out
}
