//! Projective presentations `0 -> K -> P -> X -> 0` and syzygies.

use alloc::vec::Vec;

use crate::algebra::module::{direct_sum, kernel, projective};
use crate::algebra::{ModMap, Module};
use crate::field::Field;
use crate::linalg::{quotient, Matrix};

/// `0 -> k -incl-> p -proj-> x -> 0` with `p = ⊕ A e_{tops[i]}`.
#[derive(Clone, Debug)]
pub struct Presentation<F: Field> {
    pub x: Module<F>,
    pub p: Module<F>,
    pub k: Module<F>,
    pub incl: ModMap<F>,
    pub proj: ModMap<F>,
    /// Vertex of each indecomposable summand of `p`, in order.
    pub tops: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PresentationKind {
    /// `⊕_v A e_v ⊗ e_v X -> X`, `a ⊗ x ↦ a x`.
    Free,
    /// Generators chosen from a complement of `rad X`. Minimal; needs the
    /// radical to be the arrow ideal, falls back to `Free` otherwise.
    Cover,
}

/// Columns of `e_v X` that map onto the top `X / rad X` at vertex `v`.
fn top_generators<F: Field>(x: &Module<F>) -> Vec<Matrix<F>> {
    let f = x.field();
    (0..x.dims.len())
        .map(|v| {
            let parts: Vec<&Matrix<F>> = x
                .alg
                .gens
                .iter()
                .enumerate()
                .filter(|(_, g)| g.tgt == v)
                .map(|(k, _)| &x.act[k])
                .collect();
            let rad = Matrix::hstack(f, x.dims[v], &parts);
            let (_, sec) = quotient(f, x.dims[v], &rad);
            sec
        })
        .collect()
}

/// `P -> X` sending the top of the `i`-th summand `A e_v` to column `i` of `gens[v]`.
fn generated_by<F: Field>(x: &Module<F>, gens: &[Matrix<F>]) -> Presentation<F> {
    let f = x.field();
    let alg = &x.alg;
    let nv = x.dims.len();
    let mut tops = Vec::new();
    let mut vecs = Vec::new();
    for (v, g) in gens.iter().enumerate() {
        for j in 0..g.cols() {
            tops.push(v);
            vecs.push(g.column(j));
        }
    }
    let cached: Vec<Module<F>> = (0..nv).map(|v| projective(alg, v)).collect();
    let parts: Vec<&Module<F>> = tops.iter().map(|&v| &cached[v]).collect();
    let p = direct_sum(alg, &parts).module;
    let mut blocks: Vec<Matrix<F>> = (0..nv)
        .map(|w| Matrix::zeros(f, x.dims[w], p.dims[w]))
        .collect();
    let mut start = alloc::vec![0usize; nv];
    for (&v, xv) in tops.iter().zip(&vecs) {
        for w in 0..nv {
            for (c, b) in alg.basis_between(v, w).into_iter().enumerate() {
                let col = x.basis_action(b).mul(xv);
                blocks[w].set_block(0, start[w] + c, &col);
            }
            start[w] += cached[v].dims[w];
        }
    }
    let proj = ModMap { blocks };
    let (k, incl) = kernel(&p, &proj);
    Presentation {
        x: x.clone(),
        p,
        k,
        incl,
        proj,
        tops,
    }
}

pub fn presentation<F: Field>(x: &Module<F>, kind: PresentationKind) -> Presentation<F> {
    let f = x.field();
    match kind {
        PresentationKind::Cover if x.alg.graded_radical => generated_by(x, &top_generators(x)),
        _ => {
            let gens: Vec<Matrix<F>> = x.dims.iter().map(|&d| Matrix::identity(f, d)).collect();
            generated_by(x, &gens)
        }
    }
}

pub fn free_presentation<F: Field>(x: &Module<F>) -> Presentation<F> {
    presentation(x, PresentationKind::Free)
}

/// Minimal presentation when available, free otherwise.
pub fn projective_cover<F: Field>(x: &Module<F>) -> Presentation<F> {
    presentation(x, PresentationKind::Cover)
}

/// `Ω^n X`, through covers when possible.
pub fn syzygy<F: Field>(x: &Module<F>, n: usize) -> Module<F> {
    let mut cur = x.clone();
    for _ in 0..n {
        cur = projective_cover(&cur).k;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::module::{isomorphic, simple};
    use crate::algebra::{Algebra, Quiver};
    use crate::field::Fp;
    use alloc::sync::Arc;

    fn a2() -> Arc<Algebra<Fp>> {
        Arc::new(Algebra::path_algebra(&Fp::new(3).unwrap(), &Quiver::linear(2), &[]).unwrap())
    }

    #[test]
    fn cover_of_s1() {
        let a = a2();
        let s1 = simple(&a, 0).unwrap();
        let pr = projective_cover(&s1);
        assert_eq!(pr.tops, [0]);
        assert!(isomorphic(&pr.k, &simple(&a, 1).unwrap(), 0).is_iso());
        assert!(pr.proj.is_morphism(&pr.p, &s1));
        assert!(crate::algebra::module::is_short_exact(&pr.incl, &pr.proj));
    }

    #[test]
    fn free_presentation_has_rank_dim_x() {
        let a = a2();
        let p1 = projective(&a, 0);
        let pr = free_presentation(&p1);
        assert_eq!(pr.tops.len(), p1.dim());
        assert!(pr.proj.is_epi());
        assert_eq!(pr.k.dim() + p1.dim(), pr.p.dim());
        let cov = projective_cover(&p1);
        assert_eq!(cov.k.dim(), 0);
    }
}
