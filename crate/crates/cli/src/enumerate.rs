//! Exhaustive enumeration of tiny modules up to isomorphism, used as an
//! oracle for sampled claims.

use std::sync::Arc;

use morita_core::algebra::module::{fingerprint, isomorphic, IsoOutcome};
use morita_core::algebra::{Algebra, Module};
use morita_core::linalg::Matrix;
use morita_core::morita::{LambdaModule, MoritaData};
use morita_core::{Error, Field, Result};

/// Largest number of generator-matrix tuples visited.
pub const STATE_BOUND: u128 = 10_000_000;
pub const MAX_TOTAL_DIM: usize = 3;

/// All dimension vectors with `nv` entries summing to `total`.
fn compositions(total: usize, nv: usize) -> Vec<Vec<usize>> {
    if nv == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, nv - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn entries<F: Field>(alg: &Algebra<F>, dims: &[usize]) -> usize {
    alg.gens.iter().map(|g| dims[g.tgt] * dims[g.src]).sum()
}

/// Number of generator tuples [`enumerate_modules`] would visit.
pub fn state_count<F: Field>(alg: &Algebra<F>, max_dim: usize) -> Result<u128> {
    let q = alg
        .field()
        .order()
        .ok_or_else(|| Error::Cap("enumeration needs a finite field".into()))? as u128;
    let mut total: u128 = 0;
    for t in 0..=max_dim {
        for dims in compositions(t, alg.num_vertices()) {
            let e = entries(alg, &dims) as u32;
            total = total.saturating_add(q.checked_pow(e).unwrap_or(u128::MAX));
        }
    }
    Ok(total)
}

struct Classes<F: Field> {
    reps: Vec<(Vec<usize>, Vec<usize>, Module<F>)>,
}

impl<F: Field> Classes<F> {
    fn insert(&mut self, m: Module<F>) -> Result<()> {
        let fp = fingerprint(&m);
        for (dims, f, r) in &self.reps {
            if *dims == m.dims && *f == fp {
                match isomorphic(&m, r, 0) {
                    IsoOutcome::Iso(_) => return Ok(()),
                    IsoOutcome::NotIso => {}
                    IsoOutcome::Undetermined => {
                        return Err(Error::Cap("isomorphism test gave up".into()))
                    }
                }
            }
        }
        self.reps.push((m.dims.clone(), fp, m));
        Ok(())
    }
}

/// Every module of dimension at most `max_dim`, one per isomorphism class,
/// ordered by dimension vector and then by discovery.
pub fn enumerate_modules<F: Field>(
    alg: &Arc<Algebra<F>>,
    max_dim: usize,
) -> Result<Vec<Module<F>>> {
    if max_dim > MAX_TOTAL_DIM {
        return Err(Error::Cap(format!(
            "total dimension {max_dim} exceeds {MAX_TOTAL_DIM}"
        )));
    }
    let states = state_count(alg, max_dim)?;
    if states > STATE_BOUND {
        return Err(Error::Cap(format!(
            "{states} generator tuples exceed {STATE_BOUND}"
        )));
    }
    let f = alg.field();
    let q = f.order().expect("checked above");
    let elems: Vec<F::Elem> = (0..q).map(|k| f.element(k)).collect();
    let mut classes = Classes { reps: Vec::new() };
    for t in 0..=max_dim {
        for dims in compositions(t, alg.num_vertices()) {
            let shapes: Vec<(usize, usize)> = alg
                .gens
                .iter()
                .map(|g| (dims[g.tgt], dims[g.src]))
                .collect();
            let e = entries(alg, &dims);
            let mut digits = vec![0usize; e];
            loop {
                let mut k = 0;
                let act: Vec<Matrix<F>> = shapes
                    .iter()
                    .map(|&(r, c)| {
                        let m =
                            Matrix::from_fn(f, r, c, |i, j| elems[digits[k + i * c + j]].clone());
                        k += r * c;
                        m
                    })
                    .collect();
                if let Ok(m) = Module::new(alg.clone(), dims.clone(), act) {
                    classes.insert(m)?;
                }
                // odometer
                let mut pos = 0;
                while pos < e && digits[pos] + 1 == q as usize {
                    digits[pos] = 0;
                    pos += 1;
                }
                if pos == e {
                    break;
                }
                digits[pos] += 1;
            }
        }
    }
    Ok(classes.reps.into_iter().map(|(_, _, m)| m).collect())
}

/// Every Λ-module of total dimension at most `max_total_dim` up to
/// isomorphism, found by enumerating modules over the materialized ring.
/// The field must be `F_2` or `F_3`.
pub fn enumerate_small<F: Field>(
    d: &Arc<MoritaData<F>>,
    max_total_dim: usize,
) -> Result<Vec<LambdaModule<F>>> {
    if !matches!(d.field().order(), Some(2) | Some(3)) {
        return Err(Error::Cap("enumeration runs over F_2 or F_3 only".into()));
    }
    enumerate_modules(&d.lambda, max_total_dim)?
        .iter()
        .map(|z| LambdaModule::unflatten(d, z))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{a2_algebra, a2_corner, product};
    use morita_core::Fp;

    #[test]
    fn product_counts() {
        let p = product(&Fp::new(2).unwrap()).unwrap();
        let all = enumerate_small(&p.data, 1).unwrap();
        assert_eq!(all.iter().filter(|l| l.dim() == 0).count(), 1);
        assert_eq!(all.iter().filter(|l| l.dim() == 1).count(), 2);
        let two = enumerate_small(&p.data, 2).unwrap();
        // k², k⊕k', k'²
        assert_eq!(two.iter().filter(|l| l.dim() == 2).count(), 3);
    }

    #[test]
    fn a2_has_three_indecomposables() {
        let a = a2_algebra(&Fp::new(3).unwrap()).unwrap();
        let mods = enumerate_modules(&a, 2).unwrap();
        // 0; S1, S2; S1², S1⊕S2, S2², P1
        assert_eq!(mods.len(), 7);
    }

    #[test]
    fn refuses_large_requests() {
        let p = a2_corner(&Fp::new(3).unwrap()).unwrap();
        assert!(enumerate_small(&p.data, 4).is_err());
        let q = a2_corner(&Fp::new(5).unwrap()).unwrap();
        assert!(enumerate_small(&q.data, 1).is_err());
    }
}
