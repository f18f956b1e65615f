//! Ingredients of Hovey triples on Λ-modules, checked on finite witnesses.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{ClassSpec, LambdaClass};
use crate::algebra::bimodule::{hom_module, tensor};
use crate::algebra::module::{direct_sum, injectives, kernel, projectives, regular};
use crate::algebra::{Algebra, Module};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homology::{
    approx_from_a_left, approx_from_a_right, approx_from_b_left, approx_from_b_right,
    ext1_dim_with, factor_through_mono, free_presentation, injective_copresentation, is_injective,
    is_projective, projective_cover, pushout, LambdaSequence, ShortExactSequence,
};
use crate::morita::{lambda_direct_sum, LambdaModule, MoritaData};

/// The two cotorsion pairs on one side with explicit special approximations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SidePair {
    /// `(𝒫, All)`
    Projective,
    /// `(All, ℐ)`
    Injective,
}

impl SidePair {
    pub fn left<F: Field>(self, alg: &Arc<Algebra<F>>) -> ClassSpec<F> {
        match self {
            SidePair::Projective => ClassSpec::projectives(alg),
            SidePair::Injective => ClassSpec::all(alg),
        }
    }

    pub fn right<F: Field>(self, alg: &Arc<Algebra<F>>) -> ClassSpec<F> {
        match self {
            SidePair::Projective => ClassSpec::all(alg),
            SidePair::Injective => ClassSpec::injectives(alg),
        }
    }

    /// `0 -> Y -> V -> x -> 0` with `V` on the left, `Y` on the right.
    pub fn special_right<F: Field>(self, x: &Module<F>) -> ShortExactSequence<F> {
        match self {
            SidePair::Projective => {
                let pr = projective_cover(x);
                ShortExactSequence {
                    left: pr.k,
                    mid: pr.p,
                    right: pr.x,
                    i: pr.incl,
                    p: pr.proj,
                }
            }
            SidePair::Injective => ShortExactSequence::split(&Module::zero(&x.alg), x),
        }
    }

    /// `0 -> x -> Y -> V -> 0` with `Y` on the right, `V` on the left.
    pub fn special_left<F: Field>(self, x: &Module<F>) -> ShortExactSequence<F> {
        match self {
            SidePair::Projective => ShortExactSequence::split(x, &Module::zero(&x.alg)),
            SidePair::Injective => {
                let (i, s, c, p) = injective_copresentation(x);
                ShortExactSequence {
                    left: x.clone(),
                    mid: i,
                    right: c,
                    i: s,
                    p,
                }
            }
        }
    }
}

/// Which one-sided construction approximates a cotorsion pair of Λ-modules.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Recipe {
    /// `(T_A(𝒫) ⊕ T_B(𝒱), (All; 𝒴))` from a pair on B.
    FromBRight(SidePair),
    /// `((All; 𝒱), H_A(ℐ) ⊕ H_B(𝒴))` from a pair on B.
    FromBLeft(SidePair),
    /// `(T_A(𝒰) ⊕ T_B(𝒫), (𝒳; All))` from a pair on A.
    FromARight(SidePair),
    /// `((𝒰; All), H_A(𝒳) ⊕ H_B(ℐ))` from a pair on A.
    FromALeft(SidePair),
}

impl Recipe {
    /// The pair of Λ-classes the recipe approximates.
    pub fn classes<F: Field>(self, d: &MoritaData<F>) -> (LambdaClass<F>, LambdaClass<F>) {
        let (a, b) = (&d.a, &d.b);
        match self {
            Recipe::FromBRight(s) => (
                LambdaClass::TSum(ClassSpec::projectives(a), s.left(b)),
                LambdaClass::Column(ClassSpec::all(a), s.right(b)),
            ),
            Recipe::FromBLeft(s) => (
                LambdaClass::Column(ClassSpec::all(a), s.left(b)),
                LambdaClass::HSum(ClassSpec::injectives(a), s.right(b)),
            ),
            Recipe::FromARight(s) => (
                LambdaClass::TSum(s.left(a), ClassSpec::projectives(b)),
                LambdaClass::Column(s.right(a), ClassSpec::all(b)),
            ),
            Recipe::FromALeft(s) => (
                LambdaClass::Column(s.left(a), ClassSpec::all(b)),
                LambdaClass::HSum(s.right(a), ClassSpec::injectives(b)),
            ),
        }
    }

    /// The side conditions under which [`Recipe::classes`] is a complete
    /// cotorsion pair: vanishing tensors, the flatness conditions, and one
    /// containment checked on indecomposable projectives or injectives.
    pub fn hypotheses<F: Field>(self, d: &MoritaData<F>) -> Result<()> {
        let (a, b) = (&d.a, &d.b);
        let all_in = |ms: Vec<Module<F>>, cls: ClassSpec<F>, what: &str| -> Result<()> {
            for m in &ms {
                need(cls.contains(m)?, what)?;
            }
            Ok(())
        };
        match self {
            Recipe::FromBRight(s) => {
                b_side_ok(d)?;
                all_in(
                    projectives(a)
                        .iter()
                        .map(|p| tensor(&d.m, p).module)
                        .collect(),
                    s.right(b),
                    "M ⊗ 𝒫 must lie in 𝒴",
                )
            }
            Recipe::FromBLeft(s) => {
                b_side_ok(d)?;
                all_in(
                    injectives(a)
                        .iter()
                        .map(|i| hom_module(&d.n, i).module)
                        .collect(),
                    s.left(b),
                    "Hom_A(N, ℐ) must lie in 𝒱",
                )
            }
            Recipe::FromARight(s) => {
                a_side_ok(d)?;
                all_in(
                    projectives(b)
                        .iter()
                        .map(|p| tensor(&d.n, p).module)
                        .collect(),
                    s.right(a),
                    "N ⊗ 𝒫 must lie in 𝒳",
                )
            }
            Recipe::FromALeft(s) => {
                a_side_ok(d)?;
                all_in(
                    injectives(b)
                        .iter()
                        .map(|i| hom_module(&d.m, i).module)
                        .collect(),
                    s.left(a),
                    "Hom_B(M, ℐ) must lie in 𝒰",
                )
            }
        }
    }

    /// `0 -> F -> C -> L -> 0` with `C` in the left class, `F` in the right.
    pub fn right_approx<F: Field>(self, l: &LambdaModule<F>) -> Result<LambdaSequence<F>> {
        match self {
            Recipe::FromBRight(s) => {
                let pr = projective_cover(&l.x);
                Ok(approx_from_b_right(l, &pr.proj, &pr.p, &s.special_right(&l.y))?.seq)
            }
            Recipe::FromARight(s) => {
                let pr = projective_cover(&l.y);
                Ok(approx_from_a_right(l, &pr.proj, &pr.p, &s.special_right(&l.x))?.seq)
            }
            _ => right_from_left(l, |k| self.left_approx(k)),
        }
    }

    /// `0 -> L -> F -> C -> 0` with `F` in the right class, `C` in the left.
    pub fn left_approx<F: Field>(self, l: &LambdaModule<F>) -> Result<LambdaSequence<F>> {
        match self {
            Recipe::FromBLeft(s) => {
                let (i, sigma, _, _) = injective_copresentation(&l.x);
                Ok(approx_from_b_left(l, &sigma, &i, &s.special_left(&l.y))?.seq)
            }
            Recipe::FromALeft(s) => {
                let (j, sigma, _, _) = injective_copresentation(&l.y);
                Ok(approx_from_a_left(l, &sigma, &j, &s.special_left(&l.x))?.seq)
            }
            _ => left_from_right(l, |c| self.right_approx(c)),
        }
    }
}

/// Pushout of a left approximation of the syzygy along the cover.
fn right_from_left<F: Field>(
    l: &LambdaModule<F>,
    left: impl Fn(&LambdaModule<F>) -> Result<LambdaSequence<F>>,
) -> Result<LambdaSequence<F>> {
    let d = &l.data;
    let pres = projective_cover(&l.flatten());
    let k = LambdaModule::unflatten(d, &pres.k)?;
    let s = left(&k)?.flatten();
    LambdaSequence::unflatten(d, &pushout(&pres, &s.mid, &s.i))
}

/// Pullback of a right approximation of the cosyzygy along the envelope.
fn left_from_right<F: Field>(
    l: &LambdaModule<F>,
    right: impl Fn(&LambdaModule<F>) -> Result<LambdaSequence<F>>,
) -> Result<LambdaSequence<F>> {
    let d = &l.data;
    let lf = l.flatten();
    let (e, sigma, c, pi) = injective_copresentation(&lf);
    let r = right(&LambdaModule::unflatten(d, &c)?)?.flatten();
    let ds = direct_sum(&d.lambda, &[&e, &r.mid]);
    let diff = pi.compose(&ds.proj[0]).sub(&r.p.compose(&ds.proj[1]));
    let (pb, incl) = kernel(&ds.module, &diff);
    let i = factor_through_mono(&incl, &ds.incl[0].compose(&sigma))
        .ok_or_else(|| Error::NoLift("L does not land in the pullback".into()))?;
    let p = ds.proj[1].compose(&incl);
    let ses = ShortExactSequence::new(lf, pb, r.mid.clone(), i, p)?;
    LambdaSequence::unflatten(d, &ses)
}

/// Three classes `(𝒞, ℱ, 𝒲)` with the declared intersections and the
/// recipes approximating `(𝒞∩𝒲, ℱ)` and `(𝒞, ℱ∩𝒲)`.
#[derive(Clone, Debug)]
pub struct HoveySpec<F: Field> {
    pub name: String,
    pub cofibrant: LambdaClass<F>,
    pub fibrant: LambdaClass<F>,
    pub trivial: LambdaClass<F>,
    /// Declared `𝒞 ∩ 𝒲`.
    pub trivially_cofibrant: LambdaClass<F>,
    /// Declared `ℱ ∩ 𝒲`.
    pub trivially_fibrant: LambdaClass<F>,
    pub recipes: [Recipe; 2],
}

fn need(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Hypothesis(what.into()))
    }
}

fn b_side_ok<F: Field>(d: &MoritaData<F>) -> Result<()> {
    need(d.tensors_vanish(), "M⊗N and N⊗M must vanish")?;
    need(is_projective(&d.m.left_module()), "_B M must be projective")?;
    need(
        is_projective(&d.n.right_module(&Arc::new(d.b.opposite()))),
        "N_B must be flat",
    )
}

fn a_side_ok<F: Field>(d: &MoritaData<F>) -> Result<()> {
    need(d.tensors_vanish(), "M⊗N and N⊗M must vanish")?;
    need(is_projective(&d.n.left_module()), "_A N must be projective")?;
    need(
        is_projective(&d.m.right_module(&Arc::new(d.a.opposite()))),
        "M_A must be flat",
    )
}

fn checked<F: Field>(d: &MoritaData<F>, spec: HoveySpec<F>) -> Result<HoveySpec<F>> {
    for r in spec.recipes {
        r.hypotheses(d)?;
    }
    Ok(spec)
}

impl<F: Field> HoveySpec<F> {
    /// `(T_A(𝒫) ⊕ T_B(𝒫), Λ-Mod, Λ-Mod)` from the pair `(𝒫, All)` on B.
    pub fn projective_b(d: &Arc<MoritaData<F>>) -> Result<Self> {
        b_side_ok(d)?;
        let (a, b) = (&d.a, &d.b);
        let c = LambdaClass::TSum(ClassSpec::projectives(a), ClassSpec::projectives(b));
        let w = LambdaClass::Column(ClassSpec::all(a), ClassSpec::all(b));
        checked(
            d,
            HoveySpec {
                name: "projective-b".into(),
                cofibrant: c.clone(),
                fibrant: LambdaClass::All,
                trivial: w.clone(),
                trivially_cofibrant: c,
                trivially_fibrant: w,
                recipes: [Recipe::FromBRight(SidePair::Projective); 2],
            },
        )
    }

    /// `(T_A(𝒫) ⊕ T_B(B-Mod), Λ-Mod, (A-Mod; ℐ))`, B self-injective.
    pub fn frobenius_b_cofibrant(d: &Arc<MoritaData<F>>) -> Result<Self> {
        b_side_ok(d)?;
        need(is_injective(&regular(&d.b)), "B must be self-injective")?;
        let (a, b) = (&d.a, &d.b);
        let w = LambdaClass::Column(ClassSpec::all(a), ClassSpec::injectives(b));
        checked(
            d,
            HoveySpec {
                name: "frobenius-b-cofibrant".into(),
                cofibrant: LambdaClass::TSum(ClassSpec::projectives(a), ClassSpec::all(b)),
                fibrant: LambdaClass::All,
                trivial: w.clone(),
                trivially_cofibrant: LambdaClass::TSum(
                    ClassSpec::projectives(a),
                    ClassSpec::injectives(b),
                ),
                trivially_fibrant: w,
                recipes: [
                    Recipe::FromBRight(SidePair::Projective),
                    Recipe::FromBRight(SidePair::Injective),
                ],
            },
        )
    }

    /// `(Λ-Mod, H_A(ℐ) ⊕ H_B(B-Mod), (A-Mod; 𝒫))`, B self-injective.
    pub fn frobenius_b_fibrant(d: &Arc<MoritaData<F>>) -> Result<Self> {
        b_side_ok(d)?;
        need(is_injective(&regular(&d.b)), "B must be self-injective")?;
        let (a, b) = (&d.a, &d.b);
        let w = LambdaClass::Column(ClassSpec::all(a), ClassSpec::projectives(b));
        checked(
            d,
            HoveySpec {
                name: "frobenius-b-fibrant".into(),
                cofibrant: LambdaClass::All,
                fibrant: LambdaClass::HSum(ClassSpec::injectives(a), ClassSpec::all(b)),
                trivial: w.clone(),
                trivially_cofibrant: w,
                trivially_fibrant: LambdaClass::HSum(
                    ClassSpec::injectives(a),
                    ClassSpec::projectives(b),
                ),
                recipes: [
                    Recipe::FromBLeft(SidePair::Projective),
                    Recipe::FromBLeft(SidePair::Injective),
                ],
            },
        )
    }

    /// `(T_A(A-Mod) ⊕ T_B(𝒫), Λ-Mod, (ℐ; B-Mod))`, A self-injective.
    pub fn frobenius_a_cofibrant(d: &Arc<MoritaData<F>>) -> Result<Self> {
        a_side_ok(d)?;
        need(is_injective(&regular(&d.a)), "A must be self-injective")?;
        let (a, b) = (&d.a, &d.b);
        let w = LambdaClass::Column(ClassSpec::injectives(a), ClassSpec::all(b));
        checked(
            d,
            HoveySpec {
                name: "frobenius-a-cofibrant".into(),
                cofibrant: LambdaClass::TSum(ClassSpec::all(a), ClassSpec::projectives(b)),
                fibrant: LambdaClass::All,
                trivial: w.clone(),
                trivially_cofibrant: LambdaClass::TSum(
                    ClassSpec::injectives(a),
                    ClassSpec::projectives(b),
                ),
                trivially_fibrant: w,
                recipes: [
                    Recipe::FromARight(SidePair::Projective),
                    Recipe::FromARight(SidePair::Injective),
                ],
            },
        )
    }

    /// `(Λ-Mod, H_A(A-Mod) ⊕ H_B(ℐ), (𝒫; B-Mod))`, A self-injective.
    pub fn frobenius_a_fibrant(d: &Arc<MoritaData<F>>) -> Result<Self> {
        a_side_ok(d)?;
        need(is_injective(&regular(&d.a)), "A must be self-injective")?;
        let (a, b) = (&d.a, &d.b);
        let w = LambdaClass::Column(ClassSpec::projectives(a), ClassSpec::all(b));
        checked(
            d,
            HoveySpec {
                name: "frobenius-a-fibrant".into(),
                cofibrant: LambdaClass::All,
                fibrant: LambdaClass::HSum(ClassSpec::all(a), ClassSpec::injectives(b)),
                trivial: w.clone(),
                trivially_cofibrant: w,
                trivially_fibrant: LambdaClass::HSum(
                    ClassSpec::projectives(a),
                    ClassSpec::injectives(b),
                ),
                recipes: [
                    Recipe::FromALeft(SidePair::Projective),
                    Recipe::FromALeft(SidePair::Injective),
                ],
            },
        )
    }

    /// The two cotorsion pairs `(𝒞∩𝒲, ℱ)` and `(𝒞, ℱ∩𝒲)`.
    pub fn pairs(&self) -> [(&LambdaClass<F>, &LambdaClass<F>); 2] {
        [
            (&self.trivially_cofibrant, &self.fibrant),
            (&self.cofibrant, &self.trivially_fibrant),
        ]
    }
}

/// One verified ingredient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    /// First counterexample, or a count of what was checked.
    pub detail: String,
}

impl Check {
    fn new(name: &str, failure: Option<String>, checked: usize) -> Self {
        match failure {
            Some(w) => Check {
                name: name.into(),
                ok: false,
                detail: w,
            },
            None => Check {
                name: name.into(),
                ok: true,
                detail: format!("{checked} checked"),
            },
        }
    }
}

fn members<F: Field>(cls: &LambdaClass<F>, ws: &[LambdaModule<F>]) -> Result<Vec<bool>> {
    ws.iter().map(|w| cls.contains(w)).collect()
}

/// Checks the ingredients of `spec` on the witnesses: orthogonality of both
/// pairs, the declared intersections, thickness of `𝒲` on the sequences and
/// on sums of witness pairs, both approximations of every witness for both
/// pairs, and that `𝒞∩ℱ∩𝒲` is Ext-projective and Ext-injective in `𝒞∩ℱ`.
pub fn hovey_ingredients_check<F: Field>(
    spec: &HoveySpec<F>,
    witnesses: &[LambdaModule<F>],
    sequences: &[LambdaSequence<F>],
) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let c = members(&spec.cofibrant, witnesses)?;
    let f = members(&spec.fibrant, witnesses)?;
    let w = members(&spec.trivial, witnesses)?;
    let cw = members(&spec.trivially_cofibrant, witnesses)?;
    let fw = members(&spec.trivially_fibrant, witnesses)?;
    let flat: Vec<Module<F>> = witnesses.iter().map(|x| x.flatten()).collect();
    let pres: Vec<_> = flat.iter().map(free_presentation).collect();
    let ext = |i: usize, j: usize| ext1_dim_with(&pres[i], &flat[j]);
    let n = witnesses.len();

    for (tag, (lhs, rhs)) in [
        ("orthogonality/1", (&cw, &f)),
        ("orthogonality/2", (&c, &fw)),
    ] {
        let mut bad = None;
        let mut count = 0;
        'outer: for i in (0..n).filter(|&i| lhs[i]) {
            for j in (0..n).filter(|&j| rhs[j]) {
                count += 1;
                if ext(i, j) != 0 {
                    bad = Some(format!("Ext¹(w{i}, w{j}) ≠ 0"));
                    break 'outer;
                }
            }
        }
        out.push(Check::new(tag, bad, count));
    }

    let cw_bad = (0..n)
        .find(|&i| (c[i] && w[i]) != cw[i])
        .map(|i| format!("w{i}"));
    out.push(Check::new("intersection/cofibrant", cw_bad, n));
    let fw_bad = (0..n)
        .find(|&i| (f[i] && w[i]) != fw[i])
        .map(|i| format!("w{i}"));
    out.push(Check::new("intersection/fibrant", fw_bad, n));

    let mut bad = None;
    for (k, s) in sequences.iter().enumerate() {
        let m = [
            spec.trivial.contains(&s.left)?,
            spec.trivial.contains(&s.mid)?,
            spec.trivial.contains(&s.right)?,
        ];
        if m.iter().filter(|&&b| b).count() == 2 {
            bad = Some(format!("sequence {k} has exactly two terms in 𝒲"));
            break;
        }
    }
    out.push(Check::new("thick/two-of-three", bad, sequences.len()));

    let mut bad = None;
    let mut count = 0;
    'sums: for i in 0..n.min(8) {
        for j in i..n.min(8) {
            count += 1;
            let d = &witnesses[i].data;
            let s = lambda_direct_sum(d, &[&witnesses[i], &witnesses[j]]).module;
            if spec.trivial.contains(&s)? != (w[i] && w[j]) {
                bad = Some(format!("w{i} ⊕ w{j}"));
                break 'sums;
            }
        }
    }
    out.push(Check::new("thick/summands", bad, count));

    for (idx, recipe) in spec.recipes.iter().enumerate() {
        let (lc, rc) = spec.pairs()[idx];
        let mut bad = None;
        for (i, l) in witnesses.iter().enumerate() {
            let r = match recipe.right_approx(l) {
                Ok(s) => s,
                Err(e) => {
                    bad = Some(format!("w{i}: {e}"));
                    break;
                }
            };
            if !(r.is_exact() && lc.contains(&r.mid)? && rc.contains(&r.left)?) {
                bad = Some(format!("right approximation of w{i} leaves the pair"));
                break;
            }
            let s = match recipe.left_approx(l) {
                Ok(s) => s,
                Err(e) => {
                    bad = Some(format!("w{i}: {e}"));
                    break;
                }
            };
            if !(s.is_exact() && rc.contains(&s.mid)? && lc.contains(&s.right)?) {
                bad = Some(format!("left approximation of w{i} leaves the pair"));
                break;
            }
        }
        out.push(Check::new(&format!("approximation/{}", idx + 1), bad, n));
    }

    // 𝒞∩ℱ∩𝒲 against 𝒞∩ℱ
    let mut bad = None;
    let mut count = 0;
    'frob: for i in (0..n).filter(|&i| c[i] && f[i] && w[i]) {
        for j in (0..n).filter(|&j| c[j] && f[j]) {
            count += 1;
            if ext(i, j) != 0 || ext(j, i) != 0 {
                bad = Some(format!("w{i} against w{j}"));
                break 'frob;
            }
        }
    }
    out.push(Check::new("frobenius", bad, count));
    Ok(out)
}
