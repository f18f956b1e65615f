//! Merging approximations of the end terms of a short exact sequence into
//! one of the middle term.

use alloc::sync::Arc;
use alloc::vec::Vec;

use super::dims::undual;
use super::ext::{factor_through_mono, lift_through, pushout_parts, ShortExactSequence};
use super::presentation::projective_cover;
use crate::algebra::module::{dual_map, hom_space, kernel};
use crate::algebra::{Algebra, ModMap};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;

/// Output of a merge.
#[derive(Clone, Debug)]
pub struct Horseshoe<F: Field> {
    /// `0 -> K -> E -> L -> 0` (right) or `0 -> L -> E -> C -> 0` (left).
    pub approx: ShortExactSequence<F>,
    /// `0 -> E' -> E -> E'' -> 0`
    pub middle: ShortExactSequence<F>,
}

fn flat<F: Field>(m: &ModMap<F>) -> Vec<F::Elem> {
    m.blocks
        .iter()
        .flat_map(|b| b.entries().iter().cloned())
        .collect()
}

/// Given `0 -> L' -i-> L -p-> L'' -> 0` and epimorphisms `a1: E' -> L'`,
/// `a2: E'' -> L''` (as sequences `0 -> K -> E -> L -> 0`), builds
/// `E -> L` with `E` an extension of `E''` by `E'`.
///
/// Needs `Ext¹(E'', K') = 0`; otherwise there may be no merge and
/// `NoLift` is returned.
pub fn horseshoe_right<F: Field>(
    s: &ShortExactSequence<F>,
    a1: &ShortExactSequence<F>,
    a2: &ShortExactSequence<F>,
) -> Result<Horseshoe<F>> {
    s.check()?;
    a1.check()?;
    a2.check()?;
    let f = s.mid.field().clone();
    let pres = projective_cover(&a2.mid);
    let (rho, iota) = (&pres.proj, &pres.incl);
    // θ: P -> L over π''ρ
    let theta = lift_through(&s.p, &a2.p.compose(rho), &pres.p, &s.mid)
        .ok_or_else(|| Error::NoLift("P does not lift to the middle term".into()))?;
    let phi = factor_through_mono(&s.i, &theta.compose(iota))
        .ok_or_else(|| Error::NoLift("θι leaves L'".into()))?;
    // π'ψ + χι = φ
    let h1 = hom_space(&pres.k, &a1.mid);
    let h2 = hom_space(&pres.p, &s.left);
    let mut cols: Vec<Vec<F::Elem>> = h1.basis().iter().map(|b| flat(&a1.p.compose(b))).collect();
    cols.extend(h2.basis().iter().map(|c| flat(&c.compose(iota))));
    let t = flat(&phi);
    let a = Matrix::from_fn(&f, t.len(), cols.len(), |i, j| cols[j][i].clone());
    let sol = a
        .solve(&Matrix::column_vector(&f, t))?
        .ok_or_else(|| Error::NoLift("connecting class does not vanish".into()))?;
    let coeff =
        |r: core::ops::Range<usize>| -> Vec<F::Elem> { r.map(|k| sol.get(k, 0).clone()).collect() };
    let psi = h1.combine(&coeff(0..h1.dim()));
    let chi = h2.combine(&coeff(h1.dim()..h1.dim() + h2.dim()));
    let (middle, _, secs) = pushout_parts(&pres, &a1.mid, &psi);
    // Φ(e', x) = iπ'(e') + θ(x) - iχ(x)
    let left = s.i.compose(&a1.p);
    let right = theta.sub(&s.i.compose(&chi));
    let whole = ModMap {
        blocks: left
            .blocks
            .iter()
            .zip(&right.blocks)
            .map(|(l, r)| Matrix::hstack(&f, l.rows(), &[l, r]))
            .collect(),
    };
    let big = ModMap {
        blocks: whole
            .blocks
            .iter()
            .zip(&secs)
            .map(|(w, s)| w.mul(s))
            .collect(),
    };
    let (k, incl) = kernel(&middle.mid, &big);
    let approx = ShortExactSequence::new(k, middle.mid.clone(), s.mid.clone(), incl, big)?;
    Ok(Horseshoe { approx, middle })
}

/// `0 -> D right -> D mid -> D left -> 0` over `alg`, which must be the
/// opposite of the sequence's algebra.
pub fn dual_sequence<F: Field>(
    s: &ShortExactSequence<F>,
    alg: &Arc<Algebra<F>>,
) -> ShortExactSequence<F> {
    ShortExactSequence {
        left: undual(&s.right, alg),
        mid: undual(&s.mid, alg),
        right: undual(&s.left, alg),
        i: dual_map(&s.p),
        p: dual_map(&s.i),
    }
}

/// Dual of [`horseshoe_right`]: monomorphisms `L' -> B'`, `L'' -> B''`
/// (as sequences `0 -> L -> B -> C -> 0`) merge into `L -> B`.
pub fn horseshoe_left<F: Field>(
    s: &ShortExactSequence<F>,
    b1: &ShortExactSequence<F>,
    b2: &ShortExactSequence<F>,
) -> Result<Horseshoe<F>> {
    let alg = s.mid.alg.clone();
    let op = Arc::new(alg.opposite());
    let h = horseshoe_right(
        &dual_sequence(s, &op),
        &dual_sequence(b2, &op),
        &dual_sequence(b1, &op),
    )?;
    Ok(Horseshoe {
        approx: dual_sequence(&h.approx, &alg),
        middle: dual_sequence(&h.middle, &alg),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::module::{isomorphic, projective, simple};
    use crate::algebra::{Module, Quiver};
    use crate::field::Fp;
    use crate::homology::dims::{injective_copresentation, is_injective, is_projective};
    use crate::homology::ext::ext;

    fn a3() -> Arc<Algebra<Fp>> {
        Arc::new(Algebra::path_algebra(&Fp::new(3).unwrap(), &Quiver::linear(3), &[]).unwrap())
    }

    fn cover_seq(x: &Module<Fp>) -> ShortExactSequence<Fp> {
        let pr = projective_cover(x);
        ShortExactSequence::new(pr.k, pr.p, pr.x, pr.incl, pr.proj).unwrap()
    }

    fn envelope_seq(x: &Module<Fp>) -> ShortExactSequence<Fp> {
        let (i, s, c, p) = injective_copresentation(x);
        ShortExactSequence::new(x.clone(), i, c, s, p).unwrap()
    }

    #[test]
    fn nonsplit_extension_gets_projective_cover() {
        let a = a3();
        let (s1, s2) = (simple(&a, 0).unwrap(), simple(&a, 1).unwrap());
        let e = ext(&s1, &s2, 1).classes().remove(0);
        let h = horseshoe_right(&e, &cover_seq(&s2), &cover_seq(&s1)).unwrap();
        assert!(h.approx.is_exact() && h.middle.is_exact());
        assert!(is_projective(&h.approx.mid));
        assert_eq!(
            h.approx.mid.dim(),
            projective(&a, 1).dim() + projective(&a, 0).dim()
        );
    }

    #[test]
    fn split_merge_is_sum() {
        let a = a3();
        let (s1, p2) = (simple(&a, 0).unwrap(), projective(&a, 1));
        let e = ShortExactSequence::split(&p2, &s1);
        let h = horseshoe_right(&e, &cover_seq(&p2), &cover_seq(&s1)).unwrap();
        let k = &h.approx.left;
        assert!(isomorphic(k, &projective(&a, 1), 0).is_iso());
    }

    #[test]
    fn left_merge_lands_in_injectives() {
        let a = a3();
        let (s2, s3) = (simple(&a, 1).unwrap(), simple(&a, 2).unwrap());
        let e = ext(&s2, &s3, 1).classes().remove(0);
        let h = horseshoe_left(&e, &envelope_seq(&s3), &envelope_seq(&s2)).unwrap();
        assert!(h.approx.is_exact());
        assert!(is_injective(&h.approx.mid));
        assert_eq!(h.approx.left, e.mid);
    }
}
