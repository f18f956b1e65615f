//! Finite descriptions of module classes and the membership tests built on
//! them: column classes, Δ, ∇, Mon, Epi, orthogonality, Gorenstein
//! membership, decompositions and Hovey-triple ingredients.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::algebra::module::{injectives, isomorphic, projectives, simples, IsoOutcome};
use crate::algebra::{Algebra, Module};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homology::{ext1_dim, ext1_dim_with, free_presentation, is_injective, is_projective};
use crate::morita::{c, k, LambdaModule, MoritaData, Side};

pub mod decompose;
pub mod gorenstein;
pub mod hovey;

pub use decompose::{delta_decompose, nabla_decompose, Decomposition};
pub use gorenstein::{GorensteinCert, GorensteinHypotheses};
pub use hovey::{hovey_ingredients_check, Check, HoveySpec, Recipe, SidePair};

/// What a [`ClassSpec`] contains.
#[derive(Clone, Debug)]
pub enum ClassKind<F: Field> {
    Projectives,
    Injectives,
    All,
    /// Zero and modules isomorphic to a listed one.
    FiniteList(Vec<Module<F>>),
    /// `Ext¹(-, t) = 0` for every listed `t`.
    LeftPerp(Vec<Module<F>>),
    /// `Ext¹(t, -) = 0` for every listed `t`.
    RightPerp(Vec<Module<F>>),
}

/// A class of modules over a fixed algebra.
#[derive(Clone, Debug)]
pub struct ClassSpec<F: Field> {
    pub alg: Arc<Algebra<F>>,
    pub kind: ClassKind<F>,
}

impl<F: Field> ClassSpec<F> {
    pub fn new(alg: &Arc<Algebra<F>>, kind: ClassKind<F>) -> Result<Self> {
        let listed = match &kind {
            ClassKind::FiniteList(v) | ClassKind::LeftPerp(v) | ClassKind::RightPerp(v) => {
                v.as_slice()
            }
            _ => &[],
        };
        if listed.iter().any(|m| !m.alg.same_as(alg)) {
            return Err(Error::AlgebraMismatch(
                "listed module over another algebra".into(),
            ));
        }
        Ok(ClassSpec {
            alg: alg.clone(),
            kind,
        })
    }

    pub fn projectives(alg: &Arc<Algebra<F>>) -> Self {
        ClassSpec {
            alg: alg.clone(),
            kind: ClassKind::Projectives,
        }
    }

    pub fn injectives(alg: &Arc<Algebra<F>>) -> Self {
        ClassSpec {
            alg: alg.clone(),
            kind: ClassKind::Injectives,
        }
    }

    pub fn all(alg: &Arc<Algebra<F>>) -> Self {
        ClassSpec {
            alg: alg.clone(),
            kind: ClassKind::All,
        }
    }

    pub fn name(&self) -> String {
        String::from(match self.kind {
            ClassKind::Projectives => "proj",
            ClassKind::Injectives => "inj",
            ClassKind::All => "all",
            ClassKind::FiniteList(_) => "list",
            ClassKind::LeftPerp(_) => "left-perp",
            ClassKind::RightPerp(_) => "right-perp",
        })
    }

    pub fn contains(&self, x: &Module<F>) -> Result<bool> {
        if !x.alg.same_as(&self.alg) {
            return Err(Error::AlgebraMismatch(
                "module and class live over different algebras".into(),
            ));
        }
        Ok(match &self.kind {
            ClassKind::All => true,
            ClassKind::Projectives => is_projective(x),
            ClassKind::Injectives => is_injective(x),
            ClassKind::FiniteList(list) => {
                if x.dim() == 0 {
                    return Ok(true);
                }
                for m in list {
                    match isomorphic(x, m, 0) {
                        IsoOutcome::Iso(_) => return Ok(true),
                        IsoOutcome::NotIso => {}
                        IsoOutcome::Undetermined => {
                            return Err(Error::Cap("isomorphism test gave up".into()))
                        }
                    }
                }
                false
            }
            ClassKind::LeftPerp(tests) => left_orthogonal(x, tests),
            ClassKind::RightPerp(tests) => right_orthogonal(x, tests),
        })
    }

    /// A finite set of members: the listed modules, or the indecomposable
    /// projectives, injectives and simples that belong.
    pub fn witnesses(&self) -> Vec<Module<F>> {
        let alg = &self.alg;
        let mut pool = projectives(alg);
        pool.extend(injectives(alg));
        pool.extend(simples(alg).unwrap_or_default());
        match &self.kind {
            ClassKind::FiniteList(list) => list.clone(),
            ClassKind::Projectives => projectives(alg),
            ClassKind::Injectives => injectives(alg),
            ClassKind::All => pool,
            _ => pool
                .into_iter()
                .filter(|m| self.contains(m).unwrap_or(false))
                .collect(),
        }
    }
}

/// `Ext¹(x, t) = 0` for all tests.
pub fn left_orthogonal<F: Field>(x: &Module<F>, tests: &[Module<F>]) -> bool {
    let pr = free_presentation(x);
    tests.iter().all(|t| ext1_dim_with(&pr, t) == 0)
}

/// `Ext¹(t, x) = 0` for all tests.
pub fn right_orthogonal<F: Field>(x: &Module<F>, tests: &[Module<F>]) -> bool {
    tests.iter().all(|t| ext1_dim(t, x) == 0)
}

/// `Ext¹_Λ(L, t) = 0` for every test module.
pub fn is_left_orthogonal<F: Field>(l: &LambdaModule<F>, tests: &[LambdaModule<F>]) -> bool {
    let flat: Vec<Module<F>> = tests.iter().map(|t| t.flatten()).collect();
    left_orthogonal(&l.flatten(), &flat)
}

/// `Ext¹_Λ(t, L) = 0` for every test module.
pub fn is_right_orthogonal<F: Field>(l: &LambdaModule<F>, tests: &[LambdaModule<F>]) -> bool {
    let flat: Vec<Module<F>> = tests.iter().map(|t| t.flatten()).collect();
    right_orthogonal(&l.flatten(), &flat)
}

fn check_sides<F: Field>(d: &MoritaData<F>, xs: &ClassSpec<F>, ys: &ClassSpec<F>) -> Result<()> {
    if !xs.alg.same_as(&d.a) || !ys.alg.same_as(&d.b) {
        return Err(Error::AlgebraMismatch(
            "first class must be over A, second over B".into(),
        ));
    }
    Ok(())
}

/// `X ∈ 𝒳` and `Y ∈ 𝒴`.
pub fn in_column<F: Field>(
    l: &LambdaModule<F>,
    xs: &ClassSpec<F>,
    ys: &ClassSpec<F>,
) -> Result<bool> {
    check_sides(&l.data, xs, ys)?;
    Ok(xs.contains(&l.x)? && ys.contains(&l.y)?)
}

/// `f` and `g` injective.
pub fn in_mon<F: Field>(l: &LambdaModule<F>) -> bool {
    l.f.is_mono() && l.g.is_mono()
}

/// `f̃` and `g̃` surjective.
pub fn in_epi<F: Field>(l: &LambdaModule<F>) -> bool {
    l.ft.is_epi() && l.gt.is_epi()
}

/// Monomorphic `f`, `g` with `Coker g ∈ 𝒰` and `Coker f ∈ 𝒱`.
pub fn in_delta<F: Field>(
    l: &LambdaModule<F>,
    us: &ClassSpec<F>,
    vs: &ClassSpec<F>,
) -> Result<bool> {
    check_sides(&l.data, us, vs)?;
    if !in_mon(l) {
        return Ok(false);
    }
    Ok(us.contains(&c(l, Side::A).0)? && vs.contains(&c(l, Side::B).0)?)
}

/// Epimorphic `f̃`, `g̃` with `Ker f̃ ∈ 𝒳` and `Ker g̃ ∈ 𝒴`.
pub fn in_nabla<F: Field>(
    l: &LambdaModule<F>,
    xs: &ClassSpec<F>,
    ys: &ClassSpec<F>,
) -> Result<bool> {
    check_sides(&l.data, xs, ys)?;
    if !in_epi(l) {
        return Ok(false);
    }
    Ok(xs.contains(&k(l, Side::A).0)? && ys.contains(&k(l, Side::B).0)?)
}

/// Classes of Λ-modules assembled from classes on the two sides.
#[derive(Clone, Debug)]
pub enum LambdaClass<F: Field> {
    All,
    Projectives,
    Injectives,
    Column(ClassSpec<F>, ClassSpec<F>),
    Delta(ClassSpec<F>, ClassSpec<F>),
    Nabla(ClassSpec<F>, ClassSpec<F>),
    /// `T_A(𝒰) ⊕ T_B(𝒱)`
    TSum(ClassSpec<F>, ClassSpec<F>),
    /// `H_A(𝒳) ⊕ H_B(𝒴)`
    HSum(ClassSpec<F>, ClassSpec<F>),
}

impl<F: Field> LambdaClass<F> {
    pub fn contains(&self, l: &LambdaModule<F>) -> Result<bool> {
        match self {
            LambdaClass::All => Ok(true),
            LambdaClass::Projectives => Ok(is_projective(&l.flatten())),
            LambdaClass::Injectives => Ok(is_injective(&l.flatten())),
            LambdaClass::Column(x, y) => in_column(l, x, y),
            LambdaClass::Delta(u, v) => in_delta(l, u, v),
            LambdaClass::Nabla(x, y) => in_nabla(l, x, y),
            LambdaClass::TSum(u, v) => {
                Ok(in_delta(l, u, v)? && decompose::delta_splits(l)?.is_some())
            }
            LambdaClass::HSum(x, y) => {
                Ok(in_nabla(l, x, y)? && decompose::nabla_splits(l)?.is_some())
            }
        }
    }

    pub fn name(&self) -> String {
        let pair = |tag: &str, a: &ClassSpec<F>, b: &ClassSpec<F>| {
            alloc::format!("{tag}({};{})", a.name(), b.name())
        };
        match self {
            LambdaClass::All => "all".into(),
            LambdaClass::Projectives => "proj".into(),
            LambdaClass::Injectives => "inj".into(),
            LambdaClass::Column(a, b) => pair("column", a, b),
            LambdaClass::Delta(a, b) => pair("delta", a, b),
            LambdaClass::Nabla(a, b) => pair("nabla", a, b),
            LambdaClass::TSum(a, b) => pair("tsum", a, b),
            LambdaClass::HSum(a, b) => pair("hsum", a, b),
        }
    }
}

#[cfg(test)]
mod tests;
