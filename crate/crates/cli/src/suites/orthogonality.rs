//! Column classes and Δ/∇ against finite test lists, and the Ext-vanishing
//! obligations between T, H and Z images.

use std::sync::Arc;

use morita_core::algebra::module::{injectives, projectives};
use morita_core::algebra::{Algebra, Module};
use morita_core::classes::{
    in_delta, in_nabla, is_left_orthogonal, is_right_orthogonal, left_orthogonal, right_orthogonal,
    ClassKind, ClassSpec,
};
use morita_core::homology::{ext1_dim, is_injective, is_projective, tor1};
use morita_core::morita::{
    h_a, h_b, lambda_injectives, lambda_projectives, t_a, t_b, z_a, z_b, LambdaModule, MoritaData,
};
use morita_core::Field;

use super::{dims_of, fact, preflight, Ctx};
use crate::report::Claim;
use crate::sample::Sampler;

/// Longest test list on either side.
pub const LIST_CAP: usize = 5;

#[derive(Clone)]
struct Sample<F: Field> {
    l: LambdaModule<F>,
    xs: Vec<Module<F>>,
    ys: Vec<Module<F>>,
}

fn random_list<F: Field>(
    s: &mut Sampler,
    alg: &Arc<Algebra<F>>,
    base: &[Module<F>],
) -> Vec<Module<F>> {
    let mut v = base.to_vec();
    let room = LIST_CAP.saturating_sub(v.len());
    let extra = if room == 0 { 0 } else { 1 + s.below(room) };
    for _ in 0..extra {
        v.push(s.module(alg));
    }
    v
}

/// Random `L`, or with probability 1/4 a sum of two of `members`.
fn random_l<F: Field>(
    s: &mut Sampler,
    d: &Arc<MoritaData<F>>,
    members: &[LambdaModule<F>],
) -> LambdaModule<F> {
    if !members.is_empty() && s.below(4) == 0 {
        let (a, b) = (
            &members[s.below(members.len())],
            &members[s.below(members.len())],
        );
        morita_core::morita::lambda_direct_sum(d, &[a, b]).module
    } else {
        s.lambda_module(d)
    }
}

fn sides_from_universe<F: Field>(
    ctx: &Ctx<F>,
    base_a: &[Module<F>],
    base_b: &[Module<F>],
) -> Option<Vec<Sample<F>>> {
    // each enumerated L against lists built from the base plus one enumerated
    // module per side, taken in turn
    ctx.universe.map(|u| {
        let mut v = Vec::new();
        let (na, nb) = (u.a.len().max(1), u.b.len().max(1));
        for (k, l) in u.lambda.iter().enumerate() {
            let mut xs = base_a.to_vec();
            let mut ys = base_b.to_vec();
            if let Some(x) = u.a.get(k % na) {
                xs.push(x.clone());
            }
            if let Some(y) = u.b.get(k % nb) {
                ys.push(y.clone());
            }
            v.push(Sample {
                l: l.clone(),
                xs,
                ys,
            });
        }
        v
    })
}

struct Biconditional<'a, F: Field> {
    id: &'static str,
    anchor: &'static str,
    base_a: Vec<Module<F>>,
    base_b: Vec<Module<F>>,
    members: Vec<LambdaModule<F>>,
    list_ok: &'a (dyn Fn(&Sample<F>) -> bool + Sync),
    lhs: &'a (dyn Fn(&Sample<F>) -> bool + Sync),
    rhs: &'a (dyn Fn(&Sample<F>) -> bool + Sync),
}

fn check<F: Field>(ctx: &Ctx<F>, b: Biconditional<F>) -> Claim {
    let d = ctx.d().clone();
    let positive = std::sync::atomic::AtomicUsize::new(0);
    let t = ctx.tally(
        b.id.trim_start_matches("orthogonality/"),
        ctx.cfg.count,
        |s| {
            let l = random_l(s, &d, &b.members);
            let xs = random_list(s, &d.a, &b.base_a);
            let ys = random_list(s, &d.b, &b.base_b);
            Sample { l, xs, ys }
        },
        sides_from_universe(ctx, &b.base_a, &b.base_b),
        |smp| (b.list_ok)(smp),
        |smp| {
            let (p, q) = ((b.lhs)(smp), (b.rhs)(smp));
            if p {
                positive.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
            }
            fact(
                p == q,
                format!("L {}: class membership {p}, Ext test {q}", dims_of(&smp.l)),
            )
        },
    );
    let mut w = t.witness("cases");
    if t.ok() {
        w.push_str(&format!(", {} members", positive.into_inner()));
    }
    Claim::new(b.id, b.anchor, t.ok(), w)
}

fn tensors_flat<F: Field>(d: &MoritaData<F>, smp: &Sample<F>) -> bool {
    smp.xs.iter().all(|x| tor1(&d.m, x) == 0) && smp.ys.iter().all(|y| tor1(&d.n, y) == 0)
}

fn no_ext_from_bimodules<F: Field>(d: &MoritaData<F>, smp: &Sample<F>) -> bool {
    let (n, m) = (d.n.left_module(), d.m.left_module());
    smp.xs.iter().all(|x| ext1_dim(&n, x) == 0) && smp.ys.iter().all(|y| ext1_dim(&m, y) == 0)
}

fn images<F: Field>(
    d: &Arc<MoritaData<F>>,
    smp: &Sample<F>,
    fa: fn(&Arc<MoritaData<F>>, &Module<F>) -> LambdaModule<F>,
    fb: fn(&Arc<MoritaData<F>>, &Module<F>) -> LambdaModule<F>,
) -> Vec<LambdaModule<F>> {
    let mut v: Vec<LambdaModule<F>> = smp.xs.iter().map(|x| fa(d, x)).collect();
    v.extend(smp.ys.iter().map(|y| fb(d, y)));
    v
}

pub(super) fn run<F: Field>(ctx: &Ctx<F>) -> Result<Vec<Claim>, Vec<String>> {
    preflight(ctx.inst, &["tensors-vanish"])?;
    let d = ctx.d().clone();
    let mut out = Vec::new();

    let lhs = |s: &Sample<F>| right_orthogonal(&s.l.x, &s.xs) && right_orthogonal(&s.l.y, &s.ys);
    let rhs = |s: &Sample<F>| is_right_orthogonal(&s.l, &images(&d, s, t_a, t_b));
    let ok = |s: &Sample<F>| tensors_flat(&d, s);
    out.push(check(
        ctx,
        Biconditional {
            id: "orthogonality/right-column",
            anchor: "(𝒳⊥; 𝒴⊥) = T_A(𝒳)⊥ ∩ T_B(𝒴)⊥ when Tor₁ vanishes on the lists",
            base_a: vec![],
            base_b: vec![],
            members: lambda_injectives(&d),
            list_ok: &ok,
            lhs: &lhs,
            rhs: &rhs,
        },
    ));

    let lhs = |s: &Sample<F>| left_orthogonal(&s.l.x, &s.xs) && left_orthogonal(&s.l.y, &s.ys);
    let rhs = |s: &Sample<F>| is_left_orthogonal(&s.l, &images(&d, s, h_a, h_b));
    let ok = |s: &Sample<F>| no_ext_from_bimodules(&d, s);
    out.push(check(
        ctx,
        Biconditional {
            id: "orthogonality/left-column",
            anchor: "(⊥𝒳; ⊥𝒴) = ⊥H_A(𝒳) ∩ ⊥H_B(𝒴) when Ext¹(N,𝒳) = 0 = Ext¹(M,𝒴)",
            base_a: vec![],
            base_b: vec![],
            members: lambda_projectives(&d),
            list_ok: &ok,
            lhs: &lhs,
            rhs: &rhs,
        },
    ));

    let delta = |s: &Sample<F>| {
        let u = ClassSpec::new(&d.a, ClassKind::LeftPerp(s.xs.clone())).expect("lists over A");
        let v = ClassSpec::new(&d.b, ClassKind::LeftPerp(s.ys.clone())).expect("lists over B");
        in_delta(&s.l, &u, &v).expect("classes over the sides")
    };
    let rhs = |s: &Sample<F>| is_left_orthogonal(&s.l, &images(&d, s, z_a, z_b));
    let always = |_: &Sample<F>| true;
    out.push(check(
        ctx,
        Biconditional {
            id: "orthogonality/delta",
            anchor: "Δ(⊥𝒳, ⊥𝒴) = ⊥Z_A(𝒳) ∩ ⊥Z_B(𝒴) for lists containing the injectives",
            base_a: injectives(&d.a),
            base_b: injectives(&d.b),
            members: lambda_projectives(&d),
            list_ok: &always,
            lhs: &delta,
            rhs: &rhs,
        },
    ));

    let nabla = |s: &Sample<F>| {
        let x = ClassSpec::new(&d.a, ClassKind::RightPerp(s.xs.clone())).expect("lists over A");
        let y = ClassSpec::new(&d.b, ClassKind::RightPerp(s.ys.clone())).expect("lists over B");
        in_nabla(&s.l, &x, &y).expect("classes over the sides")
    };
    let rhs = |s: &Sample<F>| is_right_orthogonal(&s.l, &images(&d, s, z_a, z_b));
    out.push(check(
        ctx,
        Biconditional {
            id: "orthogonality/nabla",
            anchor: "∇(𝒳⊥, 𝒴⊥) = Z_A(𝒳)⊥ ∩ Z_B(𝒴)⊥ for lists containing the projectives",
            base_a: projectives(&d.a),
            base_b: projectives(&d.b),
            members: lambda_injectives(&d),
            list_ok: &always,
            lhs: &nabla,
            rhs: &rhs,
        },
    ));

    out.extend(compare_claims(ctx));
    Ok(out)
}

pub(super) fn run_compare<F: Field>(ctx: &Ctx<F>) -> Result<Vec<Claim>, Vec<String>> {
    preflight(ctx.inst, &["tensors-vanish"])?;
    Ok(compare_claims(ctx))
}

/// One side's cotorsion pair: `(𝒫, All)` or `(All, ℐ)`.
#[derive(Clone, Copy, Debug)]
enum Pair {
    ProjAll,
    AllInj,
}

impl Pair {
    fn name(self) -> &'static str {
        match self {
            Pair::ProjAll => "(proj, all)",
            Pair::AllInj => "(all, inj)",
        }
    }

    /// A member of the left class and one of the right.
    fn draw<F: Field>(self, s: &mut Sampler, alg: &Arc<Algebra<F>>) -> (Module<F>, Module<F>) {
        match self {
            Pair::ProjAll => (s.projective(alg), s.module(alg)),
            Pair::AllInj => (s.module(alg), s.injective(alg)),
        }
    }

    fn holds<F: Field>(self, u: &Module<F>, x: &Module<F>) -> bool {
        match self {
            Pair::ProjAll => is_projective(u),
            Pair::AllInj => is_injective(x),
        }
    }
}

const PAIRS: [(Pair, Pair); 4] = [
    (Pair::ProjAll, Pair::ProjAll),
    (Pair::ProjAll, Pair::AllInj),
    (Pair::AllInj, Pair::ProjAll),
    (Pair::AllInj, Pair::AllInj),
];

#[derive(Clone)]
struct Tuple<F: Field> {
    pa: Pair,
    pb: Pair,
    u: Module<F>,
    x: Module<F>,
    v: Module<F>,
    y: Module<F>,
}

fn compare_claims<F: Field>(ctx: &Ctx<F>) -> Vec<Claim> {
    let d = ctx.d().clone();
    let universe = ctx.universe.map(|uv| {
        let mut out = Vec::new();
        for (pa, pb) in PAIRS {
            for u in &uv.a {
                for x in &uv.a {
                    if !pa.holds(u, x) {
                        continue;
                    }
                    for (k, v) in uv.b.iter().enumerate() {
                        // y runs over the B side in step with v to keep the
                        // family quadratic
                        let y = &uv.b[(k + out.len()) % uv.b.len()];
                        if pb.holds(v, y) {
                            out.push(Tuple {
                                pa,
                                pb,
                                u: u.clone(),
                                x: x.clone(),
                                v: v.clone(),
                                y: y.clone(),
                            });
                        }
                    }
                }
            }
        }
        out
    });
    let mut round = 0usize;
    let gen = |s: &mut Sampler| {
        let (pa, pb) = PAIRS[round % 4];
        round += 1;
        let (u, x) = pa.draw(s, &d.a);
        let (v, y) = pb.draw(s, &d.b);
        Tuple { pa, pb, u, x, v, y }
    };
    let label = |t: &Tuple<F>| format!("pairs {} on A, {} on B", t.pa.name(), t.pb.name());

    let t = ctx.tally(
        "compare-t",
        ctx.cfg.count,
        gen,
        universe.clone(),
        |t| tor1(&d.m, &t.u) == 0 && tor1(&d.n, &t.v) == 0,
        |t| {
            let (tu, tv) = (t_a(&d, &t.u).flatten(), t_b(&d, &t.v).flatten());
            let (zx, zy) = (z_a(&d, &t.x).flatten(), z_b(&d, &t.y).flatten());
            let dims = [
                ext1_dim(&tu, &zx),
                ext1_dim(&tu, &zy),
                ext1_dim(&tv, &zx),
                ext1_dim(&tv, &zy),
            ];
            fact(dims == [0; 4], format!("{}: Ext¹ dims {dims:?}", label(t)))
        },
    );
    let c1 = Claim::new(
        "compare/t-against-z",
        "T_A(𝒰) ∪ T_B(𝒱) ⊆ ⊥Z_A(𝒳) ∩ ⊥Z_B(𝒴)",
        t.ok(),
        t.witness("tuples"),
    );

    let mut round = 0usize;
    let gen = |s: &mut Sampler| {
        let (pa, pb) = PAIRS[round % 4];
        round += 1;
        let (u, x) = pa.draw(s, &d.a);
        let (v, y) = pb.draw(s, &d.b);
        Tuple { pa, pb, u, x, v, y }
    };
    let (n, m) = (d.n.left_module(), d.m.left_module());
    let t = ctx.tally(
        "compare-h",
        ctx.cfg.count,
        gen,
        universe,
        |t| ext1_dim(&n, &t.x) == 0 && ext1_dim(&m, &t.y) == 0,
        |t| {
            let (zu, zv) = (z_a(&d, &t.u).flatten(), z_b(&d, &t.v).flatten());
            let (hx, hy) = (h_a(&d, &t.x).flatten(), h_b(&d, &t.y).flatten());
            let dims = [
                ext1_dim(&zu, &hx),
                ext1_dim(&zu, &hy),
                ext1_dim(&zv, &hx),
                ext1_dim(&zv, &hy),
            ];
            fact(dims == [0; 4], format!("{}: Ext¹ dims {dims:?}", label(t)))
        },
    );
    let c2 = Claim::new(
        "compare/z-against-h",
        "Z_A(𝒰) ∪ Z_B(𝒱) ⊆ ⊥H_A(𝒳) ∩ ⊥H_B(𝒴)",
        t.ok(),
        t.witness("tuples"),
    );
    vec![c1, c2]
}
