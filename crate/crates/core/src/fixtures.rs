//! Small modules and rings shared by unit tests.

use alloc::sync::Arc;
use alloc::vec;

use crate::algebra::module::projective;
use crate::algebra::{Algebra, Bimodule, ModMap, Quiver};
use crate::field::Fp;
use crate::linalg::Matrix;
use crate::morita::{LambdaModule, MoritaData};

pub fn a2(p: u64) -> Arc<Algebra<Fp>> {
    Arc::new(Algebra::path_algebra(&Fp::new(p).unwrap(), &Quiver::linear(2), &[]).unwrap())
}

/// A = B = A₂, M = N = A e₂ ⊗ e₁ A.
pub fn corner(p: u64) -> Arc<MoritaData<Fp>> {
    let a = a2(p);
    let m = Bimodule::outer(&a, 1, &a, 0);
    Arc::new(MoritaData::new(a.clone(), a.clone(), m.clone(), m).unwrap())
}

/// `(Ae₁; Ae₁)` with both structure maps the socle inclusion.
pub fn sigma_module(d: &Arc<MoritaData<Fp>>) -> LambdaModule<Fp> {
    let fld = d.field().clone();
    let p1 = projective(&d.a, 0);
    let one = Matrix::identity(&fld, 1);
    let sigma = ModMap {
        blocks: vec![Matrix::zeros(&fld, 1, 0), one],
    };
    LambdaModule::new(d, p1.clone(), p1, sigma.clone(), sigma).unwrap()
}

/// `A = B = k(1→2→3→1)/J²`, `M = N = Ae₁ ⊗ e₃A`.
pub fn nakayama(p: u64) -> Arc<MoritaData<Fp>> {
    let q = Quiver::cyclic(3);
    let a = Arc::new(
        Algebra::path_algebra(&Fp::new(p).unwrap(), &q, &q.all_paths_of_length(2)).unwrap(),
    );
    let m = Bimodule::outer(&a, 0, &a, 2);
    Arc::new(MoritaData::new(a.clone(), a.clone(), m.clone(), m).unwrap())
}
