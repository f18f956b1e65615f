//! Ext¹ identities between Λ and the two corners.

use morita_core::algebra::Module;
use morita_core::homology::{ext1_dim, tor1};
use morita_core::morita::{c, h_a, h_b, k, t_a, t_b, z_a, z_b, LambdaModule, Side};
use morita_core::Field;

use super::{dims_of, fact, pairs, Ctx};
use crate::report::Claim;

type Pair<F> = (Module<F>, LambdaModule<F>);

struct Identity {
    id: &'static str,
    anchor: &'static str,
    side: Side,
}

const IDENTITIES: [Identity; 8] = [
    Identity {
        id: "adjunction/t-a",
        anchor: "Tor₁(M,X)=0 ⇒ Ext¹(T_A X, L) ≅ Ext¹_A(X, U_A L)",
        side: Side::A,
    },
    Identity {
        id: "adjunction/t-b",
        anchor: "Tor₁(N,Y)=0 ⇒ Ext¹(T_B Y, L) ≅ Ext¹_B(Y, U_B L)",
        side: Side::B,
    },
    Identity {
        id: "adjunction/h-a",
        anchor: "Ext¹_A(N,X)=0 ⇒ Ext¹_A(U_A L, X) ≅ Ext¹(L, H_A X)",
        side: Side::A,
    },
    Identity {
        id: "adjunction/h-b",
        anchor: "Ext¹_B(M,Y)=0 ⇒ Ext¹_B(U_B L, Y) ≅ Ext¹(L, H_B Y)",
        side: Side::B,
    },
    Identity {
        id: "adjunction/c-a",
        anchor: "g mono ⇒ Ext¹_A(C_A L, X) ≅ Ext¹(L, Z_A X)",
        side: Side::A,
    },
    Identity {
        id: "adjunction/c-b",
        anchor: "f mono ⇒ Ext¹_B(C_B L, Y) ≅ Ext¹(L, Z_B Y)",
        side: Side::B,
    },
    Identity {
        id: "adjunction/k-a",
        anchor: "f̃ epi ⇒ Ext¹(Z_A X, L) ≅ Ext¹_A(X, K_A L)",
        side: Side::A,
    },
    Identity {
        id: "adjunction/k-b",
        anchor: "g̃ epi ⇒ Ext¹(Z_B Y, L) ≅ Ext¹_B(Y, K_B L)",
        side: Side::B,
    },
];

/// Hypothesis of identity `i` on `(x, l)`.
fn qualifies<F: Field>(i: usize, (x, l): &Pair<F>) -> bool {
    let d = &l.data;
    match i {
        0 => tor1(&d.m, x) == 0,
        1 => tor1(&d.n, x) == 0,
        2 => ext1_dim(&d.n.left_module(), x) == 0,
        3 => ext1_dim(&d.m.left_module(), x) == 0,
        4 => l.g.is_mono(),
        5 => l.f.is_mono(),
        6 => l.ft.is_epi(),
        _ => l.gt.is_epi(),
    }
}

/// Both sides of identity `i`.
fn sides<F: Field>(i: usize, (x, l): &Pair<F>) -> (usize, usize) {
    let d = &l.data;
    match i {
        0 => (
            ext1_dim(&t_a(d, x).flatten(), &l.flatten()),
            ext1_dim(x, &l.x),
        ),
        1 => (
            ext1_dim(&t_b(d, x).flatten(), &l.flatten()),
            ext1_dim(x, &l.y),
        ),
        2 => (
            ext1_dim(&l.x, x),
            ext1_dim(&l.flatten(), &h_a(d, x).flatten()),
        ),
        3 => (
            ext1_dim(&l.y, x),
            ext1_dim(&l.flatten(), &h_b(d, x).flatten()),
        ),
        4 => (
            ext1_dim(&c(l, Side::A).0, x),
            ext1_dim(&l.flatten(), &z_a(d, x).flatten()),
        ),
        5 => (
            ext1_dim(&c(l, Side::B).0, x),
            ext1_dim(&l.flatten(), &z_b(d, x).flatten()),
        ),
        6 => (
            ext1_dim(&z_a(d, x).flatten(), &l.flatten()),
            ext1_dim(x, &k(l, Side::A).0),
        ),
        _ => (
            ext1_dim(&z_b(d, x).flatten(), &l.flatten()),
            ext1_dim(x, &k(l, Side::B).0),
        ),
    }
}

pub(super) fn run<F: Field>(ctx: &Ctx<F>) -> Vec<Claim> {
    let d = ctx.d().clone();
    IDENTITIES
        .iter()
        .enumerate()
        .map(|(i, idn)| {
            let alg = match idn.side {
                Side::A => d.a.clone(),
                Side::B => d.b.clone(),
            };
            let universe = ctx.universe.map(|u| {
                let side = if idn.side == Side::A { &u.a } else { &u.b };
                pairs(side, &u.lambda)
            });
            // the hypothesis on L can be met by redrawing L alone
            let on_l = i >= 4;
            let t = ctx.tally(
                idn.id.trim_start_matches("adjunction/"),
                ctx.cfg.count,
                |s| {
                    let l = if on_l {
                        (0..super::ATTEMPTS_PER_SAMPLE)
                            .map(|_| s.lambda_module(&d))
                            .find(|l| qualifies(i, &(Module::zero(&alg), l.clone())))
                            .unwrap_or_else(|| s.lambda_module(&d))
                    } else {
                        s.lambda_module(&d)
                    };
                    (s.module(&alg), l)
                },
                universe,
                |p| qualifies(i, p),
                |p| {
                    let (lhs, rhs) = sides(i, p);
                    fact(
                        lhs == rhs,
                        format!("X dims {:?}, L {}: {lhs} vs {rhs}", p.0.dims, dims_of(&p.1)),
                    )
                },
            );
            Claim::new(idn.id, idn.anchor, t.ok(), t.witness("pairs"))
        })
        .collect()
}
