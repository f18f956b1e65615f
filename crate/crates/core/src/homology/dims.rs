//! Projectivity, injectivity and bounded homological dimensions.

use alloc::sync::Arc;

use super::ext::{ext1_dim, ext1_dim_with};
use super::presentation::{free_presentation, projective_cover};
use crate::algebra::module::{dual, dual_map, simples};
use crate::algebra::{Algebra, ModMap, Module};
use crate::error::Result;
use crate::field::Field;

/// Default bound for dimension searches.
pub const DIM_BOUND: usize = 4;

/// Outcome of a bounded dimension search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimBound {
    Exact(usize),
    Exceeds(usize),
}

impl DimBound {
    pub fn value(self) -> Option<usize> {
        match self {
            DimBound::Exact(n) => Some(n),
            DimBound::Exceeds(_) => None,
        }
    }

    /// Certified `≤ n`.
    pub fn at_most(self, n: usize) -> bool {
        matches!(self, DimBound::Exact(d) if d <= n)
    }
}

pub fn is_projective<F: Field>(x: &Module<F>) -> bool {
    if x.alg.graded_radical {
        projective_cover(x).k.dim() == 0
    } else {
        // the free presentation splits
        let pr = free_presentation(x);
        ext1_dim_with(&pr, &pr.k) == 0
    }
}

/// `Ext¹(x, S) = 0` for every simple `S`.
pub fn is_projective_by_ext<F: Field>(x: &Module<F>) -> Result<bool> {
    let pr = free_presentation(x);
    Ok(simples(&x.alg)?.iter().all(|s| ext1_dim_with(&pr, s) == 0))
}

pub fn proj_dim_upto<F: Field>(x: &Module<F>, bound: usize) -> DimBound {
    let mut cur = x.clone();
    for n in 0..=bound {
        if is_projective(&cur) {
            return DimBound::Exact(n);
        }
        cur = projective_cover(&cur).k;
    }
    DimBound::Exceeds(bound)
}

/// `x` viewed back over `alg` after two dualizations.
pub fn undual<F: Field>(x: &Module<F>, alg: &Arc<Algebra<F>>) -> Module<F> {
    Module {
        alg: alg.clone(),
        dims: x.dims.clone(),
        act: x.act.iter().map(|m| m.transpose()).collect(),
    }
}

pub fn is_injective<F: Field>(x: &Module<F>) -> bool {
    let op = Arc::new(x.alg.opposite());
    is_projective(&dual(x, &op))
}

pub fn inj_dim_upto<F: Field>(x: &Module<F>, bound: usize) -> DimBound {
    let op = Arc::new(x.alg.opposite());
    proj_dim_upto(&dual(x, &op), bound)
}

/// `Ext¹(S, x) = 0` for every simple `S`.
pub fn is_injective_by_ext<F: Field>(x: &Module<F>) -> Result<bool> {
    Ok(simples(&x.alg)?.iter().all(|s| ext1_dim(s, x) == 0))
}

/// A monomorphism `x -> I` into an injective, with its cokernel:
/// `(I, σ, C, π)`.
pub fn injective_copresentation<F: Field>(
    x: &Module<F>,
) -> (Module<F>, ModMap<F>, Module<F>, ModMap<F>) {
    let op = Arc::new(x.alg.opposite());
    let pr = projective_cover(&dual(x, &op));
    let i = undual(&pr.p, &x.alg);
    let c = undual(&pr.k, &x.alg);
    (i, dual_map(&pr.proj), c, dual_map(&pr.incl))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::module::{injective, is_short_exact, projective, simple};
    use crate::algebra::Quiver;
    use crate::field::Fp;

    fn a3() -> Arc<Algebra<Fp>> {
        Arc::new(Algebra::path_algebra(&Fp::new(3).unwrap(), &Quiver::linear(3), &[]).unwrap())
    }

    #[test]
    fn path_algebra_dims() {
        let a = a3();
        assert_eq!(proj_dim_upto(&projective(&a, 0), 4), DimBound::Exact(0));
        assert_eq!(
            proj_dim_upto(&simple(&a, 0).unwrap(), 4),
            DimBound::Exact(1)
        );
        assert_eq!(inj_dim_upto(&simple(&a, 2).unwrap(), 4), DimBound::Exact(1));
        assert!(is_injective(&injective(&a, 1)));
        assert!(!is_injective(&simple(&a, 1).unwrap()));
        assert!(is_projective_by_ext(&projective(&a, 1)).unwrap());
        assert!(!is_projective_by_ext(&simple(&a, 1).unwrap()).unwrap());
        assert!(is_injective_by_ext(&injective(&a, 2)).unwrap());
    }

    #[test]
    fn dual_numbers_simple_has_infinite_pd() {
        let q = Quiver::cyclic(1);
        let a = Arc::new(
            Algebra::path_algebra(&Fp::new(2).unwrap(), &q, &q.all_paths_of_length(2)).unwrap(),
        );
        assert_eq!(
            proj_dim_upto(&simple(&a, 0).unwrap(), 3),
            DimBound::Exceeds(3)
        );
    }

    #[test]
    fn copresentation_is_exact() {
        let a = a3();
        let s = simple(&a, 1).unwrap();
        let (i, sig, c, pi) = injective_copresentation(&s);
        assert!(is_injective(&i));
        assert!(sig.is_morphism(&s, &i) && pi.is_morphism(&i, &c));
        assert!(is_short_exact(&sig, &pi));
    }
}
