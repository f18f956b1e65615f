//! Morita data `(A, B, M, N)` with zero pairings and the materialized ring.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::bimodule::tensor;
use crate::algebra::{Algebra, BasisElem, BasisKind, Bimodule, Generator};
use crate::error::{Error, Result};
use crate::field::Field;

/// `Λ = (A N; M B)` with `M` a `B`-`A` bimodule, `N` an `A`-`B` bimodule and
/// both pairings zero.
#[derive(Clone, Debug)]
pub struct MoritaData<F: Field> {
    pub a: Arc<Algebra<F>>,
    pub b: Arc<Algebra<F>>,
    pub m: Bimodule<F>,
    pub n: Bimodule<F>,
    /// `M ⊗_A N = 0`
    pub mn_zero: bool,
    /// `N ⊗_B M = 0`
    pub nm_zero: bool,
    /// Λ as a plain algebra. Vertices of `A` come first, then those of `B`;
    /// the basis is ordered `A`, `N`, `M`, `B`.
    pub lambda: Arc<Algebra<F>>,
}

/// Outcome of [`MoritaData::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Validation {
    pub bimodules_ok: bool,
    pub pairings_zero: bool,
    pub mn_zero: bool,
    pub nm_zero: bool,
    pub problems: Vec<String>,
}

impl Validation {
    pub fn valid(&self) -> bool {
        self.bimodules_ok && self.pairings_zero
    }
}

impl<F: Field> MoritaData<F> {
    pub fn new(
        a: Arc<Algebra<F>>,
        b: Arc<Algebra<F>>,
        m: Bimodule<F>,
        n: Bimodule<F>,
    ) -> Result<Self> {
        if a.field() != b.field() {
            return Err(Error::BadField("A and B are over different fields".into()));
        }
        if !m.left.same_as(&b) || !m.right.same_as(&a) {
            return Err(Error::AlgebraMismatch("M must be a B-A bimodule".into()));
        }
        if !n.left.same_as(&a) || !n.right.same_as(&b) {
            return Err(Error::AlgebraMismatch("N must be an A-B bimodule".into()));
        }
        m.validate()?;
        n.validate()?;
        // share the algebra handles so later identity checks are cheap
        let m = Bimodule {
            left: b.clone(),
            right: a.clone(),
            ..m
        };
        let n = Bimodule {
            left: a.clone(),
            right: b.clone(),
            ..n
        };
        let mn_zero = tensor(&m, &n.left_module()).module.dim() == 0;
        let nm_zero = tensor(&n, &m.left_module()).module.dim() == 0;
        let lambda = Arc::new(materialize(&a, &b, &m, &n));
        Ok(MoritaData {
            a,
            b,
            m,
            n,
            mn_zero,
            nm_zero,
            lambda,
        })
    }

    /// Re-checks the bimodule axioms and recomputes the tensor conditions.
    pub fn validate(&self) -> Validation {
        let mut problems = Vec::new();
        let mut ok = true;
        for (name, bm) in [("M", &self.m), ("N", &self.n)] {
            if let Err(e) = bm.validate() {
                ok = false;
                problems.push(format!("{name}: {e}"));
            }
        }
        let mn_zero = tensor(&self.m, &self.n.left_module()).module.dim() == 0;
        let nm_zero = tensor(&self.n, &self.m.left_module()).module.dim() == 0;
        if !mn_zero {
            problems.push("M ⊗_A N is nonzero".into());
        }
        if !nm_zero {
            problems.push("N ⊗_B M is nonzero".into());
        }
        Validation {
            bimodules_ok: ok,
            pairings_zero: true,
            mn_zero,
            nm_zero,
            problems,
        }
    }

    /// Both tensor products vanish.
    pub fn tensors_vanish(&self) -> bool {
        self.mn_zero && self.nm_zero
    }

    pub fn field(&self) -> &F {
        self.a.field()
    }

    pub fn nva(&self) -> usize {
        self.a.num_vertices()
    }

    pub fn nvb(&self) -> usize {
        self.b.num_vertices()
    }

    /// Generator index in Λ of the `k`-th basis vector of `N`.
    pub fn n_gen(&self, k: usize) -> usize {
        self.a.gens.len() + k
    }

    /// Generator index in Λ of the `k`-th basis vector of `M`.
    pub fn m_gen(&self, k: usize) -> usize {
        self.a.gens.len() + self.n.dim() + k
    }

    /// Generator index in Λ of the `k`-th generator of `B`.
    pub fn b_gen(&self, k: usize) -> usize {
        self.a.gens.len() + self.n.dim() + self.m.dim() + k
    }
}

/// Position `(l, r, i)` of each flat basis vector of a bimodule.
pub(crate) fn bimodule_positions<F: Field>(bm: &Bimodule<F>) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for (l, row) in bm.dims.iter().enumerate() {
        for (r, &d) in row.iter().enumerate() {
            for i in 0..d {
                out.push((l, r, i));
            }
        }
    }
    out
}

fn materialize<F: Field>(
    a: &Algebra<F>,
    b: &Algebra<F>,
    m: &Bimodule<F>,
    n: &Bimodule<F>,
) -> Algebra<F> {
    let f = a.field().clone();
    let (nva, da, dn, dm, db) = (a.num_vertices(), a.dim(), n.dim(), m.dim(), b.dim());
    let (ga, gb) = (a.gens.len(), b.gens.len());
    let (on, om, ob) = (da, da + dn, da + dn + dm);
    let total = ob + db;

    let mut vertices: Vec<String> = a.vertices.iter().map(|v| format!("A{v}")).collect();
    vertices.extend(b.vertices.iter().map(|v| format!("B{v}")));

    let mut basis = Vec::with_capacity(total);
    for e in &a.basis {
        basis.push(BasisElem {
            label: format!("A:{}", e.label),
            ..e.clone()
        });
    }
    let npos = bimodule_positions(n);
    for (k, &(l, r, _)) in npos.iter().enumerate() {
        basis.push(BasisElem {
            label: format!("n{}", k + 1),
            src: nva + r,
            tgt: l,
            kind: BasisKind::Word(vec![ga + k]),
        });
    }
    let mpos = bimodule_positions(m);
    for (k, &(l, r, _)) in mpos.iter().enumerate() {
        basis.push(BasisElem {
            label: format!("m{}", k + 1),
            src: r,
            tgt: nva + l,
            kind: BasisKind::Word(vec![ga + dn + k]),
        });
    }
    let shift = ga + dn + dm;
    for e in &b.basis {
        basis.push(BasisElem {
            label: format!("B:{}", e.label),
            src: nva + e.src,
            tgt: nva + e.tgt,
            kind: match &e.kind {
                BasisKind::Idem(v) => BasisKind::Idem(nva + v),
                BasisKind::Word(w) => BasisKind::Word(w.iter().map(|g| g + shift).collect()),
            },
        });
    }

    let mut gens: Vec<Generator> = a
        .gens
        .iter()
        .map(|g| Generator {
            label: format!("A:{}", g.label),
            ..g.clone()
        })
        .collect();
    for k in 0..dn {
        gens.push(Generator {
            label: basis[on + k].label.clone(),
            src: basis[on + k].src,
            tgt: basis[on + k].tgt,
            basis: on + k,
        });
    }
    for k in 0..dm {
        gens.push(Generator {
            label: basis[om + k].label.clone(),
            src: basis[om + k].src,
            tgt: basis[om + k].tgt,
            basis: om + k,
        });
    }
    for g in &b.gens {
        gens.push(Generator {
            label: format!("B:{}", g.label),
            src: nva + g.src,
            tgt: nva + g.tgt,
            basis: ob + g.basis,
        });
    }
    debug_assert_eq!(gens.len(), ga + dn + dm + gb);

    let column = |mat: &crate::linalg::Matrix<F>, j: usize, off: usize| -> Vec<(usize, F::Elem)> {
        (0..mat.rows())
            .filter(|&i| !f.is_zero(mat.get(i, j)))
            .map(|i| (off + i, mat.get(i, j).clone()))
            .collect()
    };
    let mut mult = vec![vec![Vec::new(); total]; total];
    for i in 0..da {
        for j in 0..da {
            mult[i][j] = a.mult[i][j].clone();
        }
        let nl = n.full_left_action(i);
        for k in 0..dn {
            mult[i][on + k] = column(&nl, k, on);
        }
    }
    for j in 0..db {
        let nr = n.full_right_action(j);
        for k in 0..dn {
            mult[on + k][ob + j] = column(&nr, k, on);
        }
        let ml = m.full_left_action(j);
        for k in 0..dm {
            mult[ob + j][om + k] = column(&ml, k, om);
        }
    }
    for j in 0..da {
        let mr = m.full_right_action(j);
        for k in 0..dm {
            mult[om + k][j] = column(&mr, k, om);
        }
    }
    for i in 0..db {
        for j in 0..db {
            mult[ob + i][ob + j] = b.mult[i][j]
                .iter()
                .map(|(k, c)| (ob + k, c.clone()))
                .collect();
        }
    }

    let mut unit = vec![f.zero(); total];
    unit[..da].clone_from_slice(&a.unit);
    unit[ob..].clone_from_slice(&b.unit);

    Algebra {
        field: f,
        vertices,
        basis,
        gens,
        mult,
        unit,
        quiver: None,
        graded_radical: a.graded_radical && b.graded_radical,
    }
}
