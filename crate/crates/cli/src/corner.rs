//! The distinguished modules over the `a2-corner` ring.

use std::sync::Arc;

use morita_core::algebra::bimodule::{tensor, tensor_map};
use morita_core::algebra::module::{direct_sum, projective, DirectSum};
use morita_core::algebra::{Bimodule, ModMap, Module};
use morita_core::homology::LambdaSequence;
use morita_core::linalg::Matrix;
use morita_core::morita::{z_a, LambdaMap, LambdaModule, MoritaData};
use morita_core::{Error, Field, Result};

/// Checks `d` has the shape of the corner ring: two vertices on each side
/// and `M ⊗ Ae₁` one-dimensional at vertex 2.
fn check_shape<F: Field>(d: &Arc<MoritaData<F>>) -> Result<()> {
    let p1 = projective(&d.a, 0);
    let q1 = projective(&d.b, 0);
    let ok = d.nva() == 2
        && d.nvb() == 2
        && p1.dims == [1, 1]
        && q1.dims == [1, 1]
        && tensor(&d.m, &p1).module.dims == [0, 1]
        && tensor(&d.n, &q1).module.dims == [0, 1];
    if ok {
        Ok(())
    } else {
        Err(Error::Hypothesis("not the a2-corner ring".into()))
    }
}

/// `σ: S₂ -> Ae₁`, the socle inclusion, on `M ⊗ Ae₁ ≅ S₂`.
fn socle<F: Field>(fld: &F) -> ModMap<F> {
    ModMap {
        blocks: vec![Matrix::zeros(fld, 1, 0), Matrix::identity(fld, 1)],
    }
}

/// `L = (Ae₁; Ae₁)_{σ,σ}`.
pub fn sigma_module<F: Field>(d: &Arc<MoritaData<F>>) -> Result<LambdaModule<F>> {
    check_shape(d)?;
    let fld = d.field().clone();
    let p1 = projective(&d.a, 0);
    let q1 = projective(&d.b, 0);
    LambdaModule::new(d, p1, q1, socle(&fld), socle(&fld))
}

/// `(Ae₁; 0)_{0,0}`.
pub fn top_only<F: Field>(d: &Arc<MoritaData<F>>) -> Result<LambdaModule<F>> {
    check_shape(d)?;
    Ok(z_a(d, &projective(&d.a, 0)))
}

fn twisted<F: Field>(
    bm: &Bimodule<F>,
    sx: &DirectSum<F>,
    sy: &DirectSum<F>,
    x: &Module<F>,
    sig: &ModMap<F>,
) -> ModMap<F> {
    let te = tensor(bm, &sx.module);
    let tp = tensor(bm, x);
    let c0 = sig.compose(&tensor_map(&te, &tp, &sx.proj[0]));
    let c1 = sig.compose(&tensor_map(&te, &tp, &sx.proj[1]));
    // [[σ, σ], [0, σ]]
    sy.incl[0]
        .compose(&c0.add(&c1))
        .add(&sy.incl[1].compose(&c1))
}

/// `0 -> L -> (Ae₁⊕Ae₁; Ae₁⊕Ae₁)_{s,s} -> L -> 0` with `s = [[σ, σ], [0, σ]]`,
/// inclusion into the first summands and projection onto the second.
pub fn displayed_extension<F: Field>(d: &Arc<MoritaData<F>>) -> Result<LambdaSequence<F>> {
    let l = sigma_module(d)?;
    let (pa, pb) = (l.x.clone(), l.y.clone());
    let sa = direct_sum(&d.a, &[&pa, &pa]);
    let sb = direct_sum(&d.b, &[&pb, &pb]);
    let f = twisted(&d.m, &sa, &sb, &pa, &l.f);
    let g = twisted(&d.n, &sb, &sa, &pb, &l.g);
    let mid = LambdaModule::new(d, sa.module.clone(), sb.module.clone(), f, g)?;
    let i = LambdaMap {
        a: sa.incl[0].clone(),
        b: sb.incl[0].clone(),
    };
    let p = LambdaMap {
        a: sa.proj[1].clone(),
        b: sb.proj[1].clone(),
    };
    Ok(LambdaSequence {
        left: l.clone(),
        mid,
        right: l,
        i,
        p,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{a2_corner, nakayama_corner, NakayamaParams};
    use morita_core::homology::splits;
    use morita_core::Fp;

    #[test]
    fn displayed_extension_is_exact_in_both_characteristics() {
        for p in [2, 3, 5] {
            let d = a2_corner(&Fp::new(p).unwrap()).unwrap().data;
            let s = displayed_extension(&d).unwrap();
            assert!(s.is_exact());
            assert_eq!(splits(&s.flatten()).unwrap(), p == 2, "p = {p}");
        }
    }

    #[test]
    fn other_rings_are_refused() {
        let d = nakayama_corner(&Fp::new(3).unwrap(), NakayamaParams::default())
            .unwrap()
            .data;
        assert!(sigma_module(&d).is_err());
    }
}
