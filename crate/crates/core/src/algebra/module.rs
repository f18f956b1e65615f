//! Left modules as representations: one vector space per vertex and one
//! matrix per generator.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{quotient, Matrix, Subspace};

/// A finite-dimensional left module.
///
/// The underlying space is `⊕_v e_v X`, blocks in vertex order. `act[g]` is
/// the matrix of generator `g` from the block of its source vertex to the
/// block of its target vertex.
#[derive(Clone, Debug)]
pub struct Module<F: Field> {
    pub alg: Arc<Algebra<F>>,
    pub dims: Vec<usize>,
    pub act: Vec<Matrix<F>>,
}

impl<F: Field> PartialEq for Module<F> {
    fn eq(&self, other: &Self) -> bool {
        self.alg.same_as(&other.alg) && self.dims == other.dims && self.act == other.act
    }
}

/// A module homomorphism, one block per vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct ModMap<F: Field> {
    pub blocks: Vec<Matrix<F>>,
}

impl<F: Field> Module<F> {
    /// Builds and validates a module.
    pub fn new(alg: Arc<Algebra<F>>, dims: Vec<usize>, act: Vec<Matrix<F>>) -> Result<Self> {
        let m = Module { alg, dims, act };
        m.validate()?;
        Ok(m)
    }

    pub fn zero(alg: &Arc<Algebra<F>>) -> Self {
        let f = alg.field();
        let dims = vec![0; alg.num_vertices()];
        let act = alg.gens.iter().map(|_| Matrix::zeros(f, 0, 0)).collect();
        Module {
            alg: alg.clone(),
            dims,
            act,
        }
    }

    pub fn field(&self) -> &F {
        self.alg.field()
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn offsets(&self) -> Vec<usize> {
        offsets(&self.dims)
    }

    /// Matrix of basis element `b` from block `src(b)` to block `tgt(b)`.
    pub fn basis_action(&self, b: usize) -> Matrix<F> {
        let be = &self.alg.basis[b];
        match self.alg.word(b) {
            None => Matrix::identity(self.field(), self.dims[be.src]),
            Some(w) => {
                let mut m = self.act[w[w.len() - 1]].clone();
                for &g in w[..w.len() - 1].iter().rev() {
                    m = self.act[g].mul(&m);
                }
                m
            }
        }
    }

    /// Matrix of basis element `b` on the whole space.
    pub fn full_action(&self, b: usize) -> Matrix<F> {
        let be = &self.alg.basis[b];
        let off = self.offsets();
        let mut m = Matrix::zeros(self.field(), self.dim(), self.dim());
        m.set_block(off[be.tgt], off[be.src], &self.basis_action(b));
        m
    }

    /// Checks shapes, the structure constant law and the unit law.
    pub fn validate(&self) -> Result<()> {
        let a = &self.alg;
        if self.dims.len() != a.num_vertices() || self.act.len() != a.gens.len() {
            return Err(Error::NotAModule(
                "wrong number of blocks or generator matrices".into(),
            ));
        }
        for (g, m) in a.gens.iter().zip(&self.act) {
            if m.shape() != (self.dims[g.tgt], self.dims[g.src]) {
                return Err(Error::NotAModule(format!(
                    "generator {} has shape {:?}",
                    g.label,
                    m.shape()
                )));
            }
        }
        let f = self.field();
        let acts: Vec<Matrix<F>> = (0..a.dim()).map(|b| self.basis_action(b)).collect();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                if a.basis[i].src != a.basis[j].tgt {
                    if !a.mult[i][j].is_empty() {
                        return Err(Error::NotAModule(
                            "product of non-composable elements".into(),
                        ));
                    }
                    continue;
                }
                let lhs = acts[i].mul(&acts[j]);
                let mut rhs = Matrix::zeros(f, lhs.rows(), lhs.cols());
                for (k, c) in &a.mult[i][j] {
                    rhs = rhs.add(&acts[*k].scale(c));
                }
                if lhs != rhs {
                    return Err(Error::NotAModule(format!(
                        "{} * {} acts wrongly",
                        a.basis[i].label, a.basis[j].label
                    )));
                }
            }
        }
        // unit: with vertex idempotents this is automatic; raw algebras check it
        if (0..a.num_vertices()).any(|v| a.idem_index(v).is_none()) {
            let mut u = Matrix::zeros(f, self.dim(), self.dim());
            for (i, c) in a.unit.iter().enumerate() {
                if !f.is_zero(c) {
                    u = u.add(&self.full_action(i).scale(c));
                }
            }
            if !u.is_identity() {
                return Err(Error::NotAModule(
                    "unit does not act as the identity".into(),
                ));
            }
        }
        Ok(())
    }

    /// Module from full matrices: one per vertex idempotent and one per
    /// generator, all `dim x dim`. The result uses a graded basis adapted to
    /// the idempotents; the second return value has the new basis as columns.
    pub fn from_full_matrices(
        alg: Arc<Algebra<F>>,
        dim: usize,
        idems: &[Matrix<F>],
        gens: &[Matrix<F>],
    ) -> Result<(Self, Matrix<F>)> {
        let f = alg.field().clone();
        let nv = alg.num_vertices();
        if idems.len() != nv || gens.len() != alg.gens.len() {
            return Err(Error::NotAModule(
                "need one matrix per vertex and per generator".into(),
            ));
        }
        if idems.iter().chain(gens).any(|m| m.shape() != (dim, dim)) {
            return Err(Error::Dimension(format!(
                "all action matrices must be {dim}x{dim}"
            )));
        }
        let mut sum = Matrix::zeros(&f, dim, dim);
        for (v, e) in idems.iter().enumerate() {
            if e.mul(e) != *e {
                return Err(Error::NotAModule(format!(
                    "idempotent of vertex {v} is not idempotent"
                )));
            }
            sum = sum.add(e);
        }
        if !sum.is_identity() {
            return Err(Error::NotAModule(
                "vertex idempotents do not sum to the identity".into(),
            ));
        }
        let spaces: Vec<Subspace<F>> = idems.iter().map(Subspace::span).collect();
        let dims: Vec<usize> = spaces.iter().map(|s| s.dim()).collect();
        let parts: Vec<&Matrix<F>> = spaces.iter().map(|s| &s.basis).collect();
        let change = Matrix::hstack(&f, dim, &parts);
        let inv = change
            .inverse()
            .ok_or_else(|| Error::NotAModule("idempotents are not orthogonal".into()))?;
        let off = offsets(&dims);
        let mut act = Vec::new();
        for (g, m) in alg.gens.iter().zip(gens) {
            let full = inv.mul(m).mul(&change);
            // everything outside the (tgt, src) block must vanish
            let mut check = full.clone();
            let blk = full.block(off[g.tgt], dims[g.tgt], off[g.src], dims[g.src]);
            check.set_block(
                off[g.tgt],
                off[g.src],
                &Matrix::zeros(&f, dims[g.tgt], dims[g.src]),
            );
            if !check.is_zero() {
                return Err(Error::NotAModule(format!(
                    "generator {} does not respect the idempotents",
                    g.label
                )));
            }
            act.push(blk);
        }
        let m = Module::new(alg, dims, act)?;
        Ok((m, change))
    }

    /// Module given by full action matrices for every basis element.
    pub fn from_basis_matrices(
        alg: Arc<Algebra<F>>,
        dim: usize,
        mats: &[Matrix<F>],
    ) -> Result<(Self, Matrix<F>)> {
        if mats.len() != alg.dim() {
            return Err(Error::NotAModule(
                "need one matrix per basis element".into(),
            ));
        }
        let f = alg.field().clone();
        let idems: Vec<Matrix<F>> = (0..alg.num_vertices())
            .map(|v| match alg.idem_index(v) {
                Some(i) => mats[i].clone(),
                None => Matrix::identity(&f, dim),
            })
            .collect();
        let gens: Vec<Matrix<F>> = alg.gens.iter().map(|g| mats[g.basis].clone()).collect();
        let (m, change) = Self::from_full_matrices(alg.clone(), dim, &idems, &gens)?;
        let inv = change.inverse().expect("change of basis");
        for (b, mat) in mats.iter().enumerate() {
            if inv.mul(mat).mul(&change) != m.full_action(b) {
                return Err(Error::NotAModule(format!(
                    "basis element {} acts inconsistently",
                    alg.basis[b].label
                )));
            }
        }
        Ok((m, change))
    }
}

pub(crate) fn offsets(dims: &[usize]) -> Vec<usize> {
    let mut off = Vec::with_capacity(dims.len() + 1);
    let mut s = 0;
    for d in dims {
        off.push(s);
        s += d;
    }
    off.push(s);
    off
}

impl<F: Field> ModMap<F> {
    pub fn zero(field: &F, src: &[usize], tgt: &[usize]) -> Self {
        ModMap {
            blocks: src
                .iter()
                .zip(tgt)
                .map(|(&s, &t)| Matrix::zeros(field, t, s))
                .collect(),
        }
    }

    pub fn identity(x: &Module<F>) -> Self {
        ModMap {
            blocks: x
                .dims
                .iter()
                .map(|&d| Matrix::identity(x.field(), d))
                .collect(),
        }
    }

    pub fn src_dims(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.cols()).collect()
    }

    pub fn tgt_dims(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.rows()).collect()
    }

    /// `self ∘ first`
    pub fn compose(&self, first: &ModMap<F>) -> Self {
        ModMap {
            blocks: self
                .blocks
                .iter()
                .zip(&first.blocks)
                .map(|(a, b)| a.mul(b))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        ModMap {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        ModMap {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        ModMap {
            blocks: self.blocks.iter().map(|a| a.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        ModMap {
            blocks: self.blocks.iter().map(|a| a.scale(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(|b| b.rank()).sum()
    }

    pub fn is_mono(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.cols())
    }

    pub fn is_epi(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.rows())
    }

    pub fn is_iso(&self) -> bool {
        self.blocks
            .iter()
            .all(|b| b.rows() == b.cols() && b.rank() == b.rows())
    }

    pub fn inverse(&self) -> Option<Self> {
        let blocks: Option<Vec<_>> = self.blocks.iter().map(|b| b.inverse()).collect();
        blocks.map(|blocks| ModMap { blocks })
    }

    /// Whole-space matrix, block diagonal.
    pub fn to_matrix(&self, field: &F) -> Matrix<F> {
        let parts: Vec<&Matrix<F>> = self.blocks.iter().collect();
        Matrix::block_diag(field, &parts)
    }

    /// Checks shapes and the intertwining law on generators.
    pub fn is_morphism(&self, x: &Module<F>, y: &Module<F>) -> bool {
        if self.src_dims() != x.dims || self.tgt_dims() != y.dims {
            return false;
        }
        x.alg.gens.iter().enumerate().all(|(g, gen)| {
            self.blocks[gen.tgt].mul(&x.act[g]) == y.act[g].mul(&self.blocks[gen.src])
        })
    }

    pub fn check_morphism(&self, x: &Module<F>, y: &Module<F>) -> Result<()> {
        if self.is_morphism(x, y) {
            Ok(())
        } else {
            Err(Error::NotAMorphism(
                "map does not intertwine the actions".into(),
            ))
        }
    }

    /// `[a b ...]`: a map out of a direct sum, from maps out of each summand.
    pub fn hcat(field: &F, maps: &[&ModMap<F>], tgt: &[usize]) -> Self {
        let blocks = (0..tgt.len())
            .map(|v| {
                let parts: Vec<&Matrix<F>> = maps.iter().map(|m| &m.blocks[v]).collect();
                Matrix::hstack(field, tgt[v], &parts)
            })
            .collect();
        ModMap { blocks }
    }

    /// `[a; b; ...]`: a map into a direct sum, from maps into each summand.
    pub fn vcat(field: &F, maps: &[&ModMap<F>], src: &[usize]) -> Self {
        let blocks = (0..src.len())
            .map(|v| {
                let parts: Vec<&Matrix<F>> = maps.iter().map(|m| &m.blocks[v]).collect();
                Matrix::vstack(field, src[v], &parts)
            })
            .collect();
        ModMap { blocks }
    }

    /// Block diagonal map between direct sums.
    pub fn diag(field: &F, maps: &[&ModMap<F>]) -> Self {
        let nv = maps.first().map_or(0, |m| m.blocks.len());
        let blocks = (0..nv)
            .map(|v| {
                let parts: Vec<&Matrix<F>> = maps.iter().map(|m| &m.blocks[v]).collect();
                Matrix::block_diag(field, &parts)
            })
            .collect();
        ModMap { blocks }
    }
}

/// Submodule given by per-vertex subspaces closed under the action.
pub fn submodule<F: Field>(x: &Module<F>, spaces: &[Subspace<F>]) -> (Module<F>, ModMap<F>) {
    let dims: Vec<usize> = spaces.iter().map(|s| s.dim()).collect();
    let act = x
        .alg
        .gens
        .iter()
        .enumerate()
        .map(|(g, gen)| spaces[gen.tgt].coords(&x.act[g].mul(&spaces[gen.src].basis)))
        .collect();
    let incl = ModMap {
        blocks: spaces.iter().map(|s| s.basis.clone()).collect(),
    };
    (
        Module {
            alg: x.alg.clone(),
            dims,
            act,
        },
        incl,
    )
}

/// Quotient of `y` by per-vertex subspaces closed under the action. Returns
/// the quotient, the projection, and per-vertex linear sections.
pub fn quotient_module<F: Field>(
    y: &Module<F>,
    spaces: &[Matrix<F>],
) -> (Module<F>, ModMap<F>, Vec<Matrix<F>>) {
    let f = y.field();
    let (projs, secs): (Vec<_>, Vec<_>) = y
        .dims
        .iter()
        .zip(spaces)
        .map(|(&d, s)| quotient(f, d, s))
        .unzip();
    let dims: Vec<usize> = projs.iter().map(|p| p.rows()).collect();
    let act = y
        .alg
        .gens
        .iter()
        .enumerate()
        .map(|(g, gen)| projs[gen.tgt].mul(&y.act[g]).mul(&secs[gen.src]))
        .collect();
    (
        Module {
            alg: y.alg.clone(),
            dims,
            act,
        },
        ModMap { blocks: projs },
        secs,
    )
}

pub fn kernel<F: Field>(x: &Module<F>, phi: &ModMap<F>) -> (Module<F>, ModMap<F>) {
    let spaces: Vec<Subspace<F>> = phi.blocks.iter().map(|b| b.kernel()).collect();
    submodule(x, &spaces)
}

pub fn image<F: Field>(y: &Module<F>, phi: &ModMap<F>) -> (Module<F>, ModMap<F>) {
    let spaces: Vec<Subspace<F>> = phi.blocks.iter().map(Subspace::span).collect();
    submodule(y, &spaces)
}

pub fn cokernel<F: Field>(
    y: &Module<F>,
    phi: &ModMap<F>,
) -> (Module<F>, ModMap<F>, Vec<Matrix<F>>) {
    quotient_module(y, &phi.blocks)
}

/// `phi` followed by `psi` is exact at the middle term.
pub fn is_exact_at<F: Field>(phi: &ModMap<F>, psi: &ModMap<F>) -> bool {
    phi.blocks
        .iter()
        .zip(&psi.blocks)
        .all(|(a, b)| a.rows() == b.cols() && b.mul(a).is_zero() && b.cols() - b.rank() == a.rank())
}

/// `0 -> X -i-> Y -p-> Z -> 0` is exact.
pub fn is_short_exact<F: Field>(i: &ModMap<F>, p: &ModMap<F>) -> bool {
    i.is_mono() && p.is_epi() && is_exact_at(i, p)
}

/// A direct sum with its structure maps.
#[derive(Clone, Debug)]
pub struct DirectSum<F: Field> {
    pub module: Module<F>,
    pub incl: Vec<ModMap<F>>,
    pub proj: Vec<ModMap<F>>,
}

pub fn direct_sum<F: Field>(alg: &Arc<Algebra<F>>, parts: &[&Module<F>]) -> DirectSum<F> {
    let f = alg.field();
    let nv = alg.num_vertices();
    let dims: Vec<usize> = (0..nv)
        .map(|v| parts.iter().map(|p| p.dims[v]).sum())
        .collect();
    let act = (0..alg.gens.len())
        .map(|g| {
            let blocks: Vec<&Matrix<F>> = parts.iter().map(|p| &p.act[g]).collect();
            Matrix::block_diag(f, &blocks)
        })
        .collect();
    let module = Module {
        alg: alg.clone(),
        dims: dims.clone(),
        act,
    };
    let mut incl = Vec::new();
    let mut proj = Vec::new();
    let mut start = vec![0usize; nv];
    for p in parts {
        let mut ib = Vec::new();
        let mut pb = Vec::new();
        for v in 0..nv {
            let mut i = Matrix::zeros(f, dims[v], p.dims[v]);
            i.set_block(start[v], 0, &Matrix::identity(f, p.dims[v]));
            pb.push(i.transpose());
            ib.push(i);
            start[v] += p.dims[v];
        }
        incl.push(ModMap { blocks: ib });
        proj.push(ModMap { blocks: pb });
    }
    DirectSum { module, incl, proj }
}

/// The space `Hom_A(X, Y)` with a canonical basis.
///
/// A map is vectorized block by block, each block row-major.
#[derive(Clone, Debug)]
pub struct HomSpace<F: Field> {
    pub src_dims: Vec<usize>,
    pub tgt_dims: Vec<usize>,
    pub space: Subspace<F>,
    field: F,
}

impl<F: Field> HomSpace<F> {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    fn unknowns(&self) -> Vec<usize> {
        let sizes: Vec<usize> = self
            .src_dims
            .iter()
            .zip(&self.tgt_dims)
            .map(|(s, t)| s * t)
            .collect();
        offsets(&sizes)
    }

    pub fn unvectorize(&self, v: &Matrix<F>) -> ModMap<F> {
        let off = self.unknowns();
        let blocks = (0..self.src_dims.len())
            .map(|w| {
                let (r, c) = (self.tgt_dims[w], self.src_dims[w]);
                Matrix::from_fn(&self.field, r, c, |i, j| {
                    v.get(off[w] + i * c + j, 0).clone()
                })
            })
            .collect();
        ModMap { blocks }
    }

    pub fn vectorize(&self, m: &ModMap<F>) -> Matrix<F> {
        let mut data = Vec::new();
        for b in &m.blocks {
            data.extend_from_slice(b.entries());
        }
        Matrix::column_vector(&self.field, data)
    }

    pub fn basis_map(&self, k: usize) -> ModMap<F> {
        self.unvectorize(&self.space.basis.column(k))
    }

    pub fn basis(&self) -> Vec<ModMap<F>> {
        (0..self.dim()).map(|k| self.basis_map(k)).collect()
    }

    pub fn combine(&self, coeffs: &[F::Elem]) -> ModMap<F> {
        let c = Matrix::column_vector(&self.field, coeffs.to_vec());
        self.unvectorize(&self.space.basis.mul(&c))
    }

    /// Coordinates of a morphism in the canonical basis.
    pub fn coords(&self, m: &ModMap<F>) -> Matrix<F> {
        self.space.coords(&self.vectorize(m))
    }
}

/// Linear system whose solutions are the morphisms `X -> Y`.
fn hom_system<F: Field>(x: &Module<F>, y: &Module<F>) -> (Matrix<F>, usize) {
    let f = x.field();
    let sizes: Vec<usize> = x.dims.iter().zip(&y.dims).map(|(a, b)| a * b).collect();
    let off = offsets(&sizes);
    let n = off[off.len() - 1];
    let nrows: usize = x
        .alg
        .gens
        .iter()
        .map(|g| y.dims[g.tgt] * x.dims[g.src])
        .sum();
    let mut c = Matrix::zeros(f, nrows, n);
    let mut row = 0;
    for (g, gen) in x.alg.gens.iter().enumerate() {
        let (s, t) = (gen.src, gen.tgt);
        let (xa, ya) = (&x.act[g], &y.act[g]);
        for i in 0..y.dims[t] {
            for j in 0..x.dims[s] {
                // (phi_t X_g - Y_g phi_s)[i][j] = 0
                for k in 0..x.dims[t] {
                    let col = off[t] + i * x.dims[t] + k;
                    let v = f.add(c.get(row, col), xa.get(k, j));
                    c.set(row, col, v);
                }
                for k in 0..y.dims[s] {
                    let col = off[s] + k * x.dims[s] + j;
                    let v = f.sub(c.get(row, col), ya.get(i, k));
                    c.set(row, col, v);
                }
                row += 1;
            }
        }
    }
    (c, n)
}

pub fn hom_space<F: Field>(x: &Module<F>, y: &Module<F>) -> HomSpace<F> {
    let (c, _) = hom_system(x, y);
    HomSpace {
        src_dims: x.dims.clone(),
        tgt_dims: y.dims.clone(),
        space: c.kernel(),
        field: x.field().clone(),
    }
}

pub fn hom_dim<F: Field>(x: &Module<F>, y: &Module<F>) -> usize {
    let (c, n) = hom_system(x, y);
    n - c.rank()
}

/// One-dimensional simple at vertex `v`.
pub fn simple<F: Field>(alg: &Arc<Algebra<F>>, v: usize) -> Result<Module<F>> {
    if !alg.graded_radical {
        return Err(Error::NotQuiverPresented(
            "simples need the radical to be the arrow ideal".into(),
        ));
    }
    let f = alg.field();
    let mut dims = vec![0; alg.num_vertices()];
    dims[v] = 1;
    let act = alg
        .gens
        .iter()
        .map(|g| Matrix::zeros(f, dims[g.tgt], dims[g.src]))
        .collect();
    Ok(Module {
        alg: alg.clone(),
        dims,
        act,
    })
}

pub fn simples<F: Field>(alg: &Arc<Algebra<F>>) -> Result<Vec<Module<F>>> {
    (0..alg.num_vertices()).map(|v| simple(alg, v)).collect()
}

/// `A e_v`, spanned by the basis elements with source `v`, in basis order.
pub fn projective<F: Field>(alg: &Arc<Algebra<F>>, v: usize) -> Module<F> {
    let f = alg.field();
    let nv = alg.num_vertices();
    let blocks: Vec<Vec<usize>> = (0..nv).map(|w| alg.basis_between(v, w)).collect();
    let dims: Vec<usize> = blocks.iter().map(|b| b.len()).collect();
    let act = alg
        .gens
        .iter()
        .map(|g| {
            let mut m = Matrix::zeros(f, dims[g.tgt], dims[g.src]);
            for (j, &b) in blocks[g.src].iter().enumerate() {
                for (k, c) in &alg.mult[g.basis][b] {
                    let i = blocks[g.tgt]
                        .iter()
                        .position(|x| x == k)
                        .expect("product stays in A e_v");
                    m.set(i, j, c.clone());
                }
            }
            m
        })
        .collect();
    Module {
        alg: alg.clone(),
        dims,
        act,
    }
}

pub fn projectives<F: Field>(alg: &Arc<Algebra<F>>) -> Vec<Module<F>> {
    (0..alg.num_vertices())
        .map(|v| projective(alg, v))
        .collect()
}

/// The regular module `A = ⊕_v A e_v`.
pub fn regular<F: Field>(alg: &Arc<Algebra<F>>) -> Module<F> {
    let ps = projectives(alg);
    let refs: Vec<&Module<F>> = ps.iter().collect();
    direct_sum(alg, &refs).module
}

/// `D(e_v A)`: the dual of a projective over the opposite algebra.
pub fn injective<F: Field>(alg: &Arc<Algebra<F>>, v: usize) -> Module<F> {
    let op = Arc::new(alg.opposite());
    let p = projective(&op, v);
    Module {
        alg: alg.clone(),
        dims: p.dims,
        act: p.act.iter().map(|m| m.transpose()).collect(),
    }
}

pub fn injectives<F: Field>(alg: &Arc<Algebra<F>>) -> Vec<Module<F>> {
    (0..alg.num_vertices()).map(|v| injective(alg, v)).collect()
}

/// `D X = Hom_k(X, k)` as a module over the opposite algebra.
pub fn dual<F: Field>(x: &Module<F>, op: &Arc<Algebra<F>>) -> Module<F> {
    debug_assert!(op.same_as(&x.alg.opposite()));
    Module {
        alg: op.clone(),
        dims: x.dims.clone(),
        act: x.act.iter().map(|m| m.transpose()).collect(),
    }
}

/// `D(phi)`, reversing direction.
pub fn dual_map<F: Field>(phi: &ModMap<F>) -> ModMap<F> {
    ModMap {
        blocks: phi.blocks.iter().map(|b| b.transpose()).collect(),
    }
}

/// Outcome of an isomorphism test.
#[derive(Clone, Debug, PartialEq)]
pub enum IsoOutcome<F: Field> {
    Iso(ModMap<F>),
    NotIso,
    Undetermined,
}

impl<F: Field> IsoOutcome<F> {
    pub fn is_iso(&self) -> bool {
        matches!(self, IsoOutcome::Iso(_))
    }
}

/// Exhaustive search is used when `p^d` is at most this.
pub const ISO_EXHAUSTIVE_LIMIT: u64 = 100_000;
pub const ISO_RANDOM_TRIALS: usize = 64;

/// Dimension vector plus Hom dimensions against every simple on both sides.
pub fn fingerprint<F: Field>(x: &Module<F>) -> Vec<usize> {
    let mut fp = x.dims.clone();
    if let Ok(ss) = simples(&x.alg) {
        for s in &ss {
            fp.push(hom_dim(s, x));
            fp.push(hom_dim(x, s));
        }
    }
    fp
}

/// Isomorphism test. Never reports a false isomorphism; may give up.
pub fn isomorphic<F: Field>(x: &Module<F>, y: &Module<F>, seed: u64) -> IsoOutcome<F> {
    if x.dims != y.dims {
        return IsoOutcome::NotIso;
    }
    if x.dim() == 0 {
        return IsoOutcome::Iso(ModMap::identity(x));
    }
    if fingerprint(x) != fingerprint(y) {
        return IsoOutcome::NotIso;
    }
    let h = hom_space(x, y);
    let d = h.dim();
    if d == 0 {
        return IsoOutcome::NotIso;
    }
    let f = x.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ISO_RANDOM_TRIALS {
        let coeffs: Vec<F::Elem> = match f.order() {
            Some(_) => (0..d).map(|_| f.random(&mut rng)).collect(),
            None => (0..d)
                .map(|_| f.element(rand::Rng::random_range(&mut rng, 0..1000u64)))
                .collect(),
        };
        let m = h.combine(&coeffs);
        if m.is_iso() {
            return IsoOutcome::Iso(m);
        }
    }
    if let Some(p) = f.order() {
        let total = p.checked_pow(d as u32);
        if let Some(total) = total.filter(|&t| t <= ISO_EXHAUSTIVE_LIMIT) {
            for k in 0..total {
                let mut r = k;
                let coeffs: Vec<F::Elem> = (0..d)
                    .map(|_| {
                        let c = f.element(r % p);
                        r /= p;
                        c
                    })
                    .collect();
                let m = h.combine(&coeffs);
                if m.is_iso() {
                    return IsoOutcome::Iso(m);
                }
            }
            return IsoOutcome::NotIso;
        }
    }
    IsoOutcome::Undetermined
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::algebra::Quiver;
    use crate::field::{Fp, Q};

    fn a2() -> Arc<Algebra<Fp>> {
        Arc::new(Algebra::path_algebra(&Fp::new(3).unwrap(), &Quiver::linear(2), &[]).unwrap())
    }

    #[test]
    fn projectives_of_a2() {
        let a = a2();
        let p1 = projective(&a, 0);
        let p2 = projective(&a, 1);
        assert_eq!(p1.dim(), 2);
        assert_eq!(p2.dim(), 1);
        p1.validate().unwrap();
        assert_eq!(hom_dim(&p2, &p1), 1);
        assert_eq!(hom_dim(&regular(&a), &p1), 2);
    }

    #[test]
    fn simples_have_no_maps_between() {
        let a = a2();
        let ss = simples(&a).unwrap();
        assert_eq!(ss.len(), 2);
        assert_eq!(hom_dim(&ss[0], &ss[1]), 0);
        assert_eq!(hom_dim(&ss[0], &ss[0]), 1);
    }

    #[test]
    fn radical_of_p1_is_s2() {
        let a = a2();
        let p1 = projective(&a, 0);
        let s1 = simple(&a, 0).unwrap();
        let h = hom_space(&p1, &s1);
        assert_eq!(h.dim(), 1);
        let (k, incl) = kernel(&p1, &h.basis_map(0));
        assert!(incl.is_morphism(&k, &p1));
        assert_eq!(isomorphic(&k, &simple(&a, 1).unwrap(), 1).is_iso(), true);
    }

    #[test]
    fn injectives_of_a2() {
        let a = a2();
        // I_1 = S_1, I_2 = P_1
        assert!(isomorphic(&injective(&a, 0), &simple(&a, 0).unwrap(), 0).is_iso());
        assert!(isomorphic(&injective(&a, 1), &projective(&a, 0), 0).is_iso());
        injective(&a, 1).validate().unwrap();
    }

    #[test]
    fn nakayama_projectives_are_injective() {
        let q = Quiver::cyclic(3);
        let a = Arc::new(Algebra::path_algebra(&Q, &q, &q.all_paths_of_length(2)).unwrap());
        let ps = projectives(&a);
        let is = injectives(&a);
        for p in &ps {
            assert_eq!(p.dim(), 2);
            assert!(is.iter().any(|i| isomorphic(p, i, 7).is_iso()));
        }
    }

    #[test]
    fn cokernel_of_zero_is_target() {
        let a = a2();
        let p1 = projective(&a, 0);
        let z = Module::zero(&a);
        let phi = ModMap::zero(a.field(), &z.dims, &p1.dims);
        let (c, pr, _) = cokernel(&p1, &phi);
        assert_eq!(c, p1);
        assert!(pr.is_iso());
        let (k, _) = kernel(&p1, &ModMap::identity(&p1));
        assert_eq!(k.dim(), 0);
    }

    #[test]
    fn full_matrix_round_trip() {
        let a = a2();
        let p1 = projective(&a, 0);
        let idems: Vec<_> = (0..2)
            .map(|v| p1.full_action(a.idem_index(v).unwrap()))
            .collect();
        let gens: Vec<_> = a.gens.iter().map(|g| p1.full_action(g.basis)).collect();
        let (m, change) = Module::from_full_matrices(a.clone(), 2, &idems, &gens).unwrap();
        assert_eq!(m, p1);
        assert!(change.is_identity());
    }

    #[test]
    fn bad_actions_are_rejected() {
        let q = Quiver::cyclic(2);
        let rels = q.all_paths_of_length(2);
        let f = Fp::new(3).unwrap();
        let a = Arc::new(Algebra::path_algebra(&f, &q, &rels).unwrap());
        let one = Matrix::identity(&f, 1);
        // both arrows nonzero on (1,1) makes a length-2 path act nontrivially
        assert!(Module::new(a.clone(), vec![1, 1], vec![one.clone(), one.clone()]).is_err());
        assert!(Module::new(a, vec![1, 1], vec![one, Matrix::zeros(&f, 1, 1)]).is_ok());
    }

    #[test]
    fn hom_dimension_invariant_under_base_change() {
        let a = a2();
        let f = a.field().clone();
        let p1 = projective(&a, 0);
        let t = Matrix::from_i64(&f, 1, 1, &[2]);
        // rescale the vertex-2 block
        let act: Vec<_> = p1.act.iter().map(|m| t.mul(m)).collect();
        let q = Module::new(a.clone(), p1.dims.clone(), act).unwrap();
        assert_eq!(hom_dim(&q, &p1), hom_dim(&p1, &p1));
    }
}
