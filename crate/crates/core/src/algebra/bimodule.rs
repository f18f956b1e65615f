//! Bimodules, tensor products and Hom modules.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::algebra::Algebra;
use super::module::{direct_sum, hom_space, offsets, HomSpace, ModMap, Module};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{quotient, Matrix, Subspace};

/// An `L`-`R` bimodule, graded by pairs of vertices `(l, r)`: block
/// `e_l M e_r`. Blocks are ordered with `l` outermost.
///
/// `lact[g][r]` is a left generator `g: l -> l'` on `e_l M e_r -> e_l' M e_r`.
/// `ract[h][l]` is right multiplication by `h: r -> r'`, which sends
/// `e_l M e_r'` to `e_l M e_r`.
#[derive(Clone, Debug)]
pub struct Bimodule<F: Field> {
    pub left: Arc<Algebra<F>>,
    pub right: Arc<Algebra<F>>,
    pub dims: Vec<Vec<usize>>,
    pub lact: Vec<Vec<Matrix<F>>>,
    pub ract: Vec<Vec<Matrix<F>>>,
}

impl<F: Field> PartialEq for Bimodule<F> {
    fn eq(&self, other: &Self) -> bool {
        self.left.same_as(&other.left)
            && self.right.same_as(&other.right)
            && self.dims == other.dims
            && self.lact == other.lact
            && self.ract == other.ract
    }
}

impl<F: Field> Bimodule<F> {
    pub fn new(
        left: Arc<Algebra<F>>,
        right: Arc<Algebra<F>>,
        dims: Vec<Vec<usize>>,
        lact: Vec<Vec<Matrix<F>>>,
        ract: Vec<Vec<Matrix<F>>>,
    ) -> Result<Self> {
        let m = Bimodule {
            left,
            right,
            dims,
            lact,
            ract,
        };
        m.validate()?;
        Ok(m)
    }

    pub fn field(&self) -> &F {
        self.left.field()
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().flatten().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn zero(left: &Arc<Algebra<F>>, right: &Arc<Algebra<F>>) -> Self {
        let f = left.field();
        let (nl, nr) = (left.num_vertices(), right.num_vertices());
        Bimodule {
            left: left.clone(),
            right: right.clone(),
            dims: vec![vec![0; nr]; nl],
            lact: left
                .gens
                .iter()
                .map(|_| vec![Matrix::zeros(f, 0, 0); nr])
                .collect(),
            ract: right
                .gens
                .iter()
                .map(|_| vec![Matrix::zeros(f, 0, 0); nl])
                .collect(),
        }
    }

    /// `A` as an `A`-`A` bimodule.
    pub fn regular(alg: &Arc<Algebra<F>>) -> Self {
        let nv = alg.num_vertices();
        let blocks: Vec<Vec<Vec<usize>>> = (0..nv)
            .map(|l| (0..nv).map(|r| alg.basis_between(r, l)).collect())
            .collect();
        Self::from_basis_blocks(
            alg,
            alg,
            &blocks,
            |g, b| alg.mult[g][b].clone(),
            |b, h| alg.mult[b][h].clone(),
        )
    }

    /// `L e_u ⊗_k e_v R`.
    pub fn outer(left: &Arc<Algebra<F>>, u: usize, right: &Arc<Algebra<F>>, v: usize) -> Self {
        let f = left.field().clone();
        let lb: Vec<usize> = (0..left.dim())
            .filter(|&b| left.basis[b].src == u)
            .collect();
        let rb: Vec<usize> = (0..right.dim())
            .filter(|&c| right.basis[c].tgt == v)
            .collect();
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for &b in &lb {
            for &c in &rb {
                pairs.push((b, c));
            }
        }
        let (nl, nr) = (left.num_vertices(), right.num_vertices());
        let blocks: Vec<Vec<Vec<(usize, usize)>>> = (0..nl)
            .map(|l| {
                (0..nr)
                    .map(|r| {
                        pairs
                            .iter()
                            .copied()
                            .filter(|&(b, c)| left.basis[b].tgt == l && right.basis[c].src == r)
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let dims: Vec<Vec<usize>> = blocks
            .iter()
            .map(|row| row.iter().map(|b| b.len()).collect())
            .collect();
        let lact = left
            .gens
            .iter()
            .map(|g| {
                (0..nr)
                    .map(|r| {
                        let mut m = Matrix::zeros(&f, dims[g.tgt][r], dims[g.src][r]);
                        for (j, &(b, c)) in blocks[g.src][r].iter().enumerate() {
                            for (k, s) in &left.mult[g.basis][b] {
                                let i =
                                    blocks[g.tgt][r].iter().position(|&p| p == (*k, c)).unwrap();
                                m.set(i, j, s.clone());
                            }
                        }
                        m
                    })
                    .collect()
            })
            .collect();
        let ract = right
            .gens
            .iter()
            .map(|h| {
                (0..nl)
                    .map(|l| {
                        let mut m = Matrix::zeros(&f, dims[l][h.src], dims[l][h.tgt]);
                        for (j, &(b, c)) in blocks[l][h.tgt].iter().enumerate() {
                            for (k, s) in &right.mult[c][h.basis] {
                                let i =
                                    blocks[l][h.src].iter().position(|&p| p == (b, *k)).unwrap();
                                m.set(i, j, s.clone());
                            }
                        }
                        m
                    })
                    .collect()
            })
            .collect();
        Bimodule {
            left: left.clone(),
            right: right.clone(),
            dims,
            lact,
            ract,
        }
    }

    fn from_basis_blocks(
        left: &Arc<Algebra<F>>,
        right: &Arc<Algebra<F>>,
        blocks: &[Vec<Vec<usize>>],
        lmul: impl Fn(usize, usize) -> Vec<(usize, F::Elem)>,
        rmul: impl Fn(usize, usize) -> Vec<(usize, F::Elem)>,
    ) -> Self {
        let f = left.field().clone();
        let (nl, nr) = (left.num_vertices(), right.num_vertices());
        let dims: Vec<Vec<usize>> = blocks
            .iter()
            .map(|row| row.iter().map(|b| b.len()).collect())
            .collect();
        let lact = left
            .gens
            .iter()
            .map(|g| {
                (0..nr)
                    .map(|r| {
                        let mut m = Matrix::zeros(&f, dims[g.tgt][r], dims[g.src][r]);
                        for (j, &b) in blocks[g.src][r].iter().enumerate() {
                            for (k, s) in lmul(g.basis, b) {
                                let i = blocks[g.tgt][r].iter().position(|&p| p == k).unwrap();
                                m.set(i, j, s);
                            }
                        }
                        m
                    })
                    .collect()
            })
            .collect();
        let ract = right
            .gens
            .iter()
            .map(|h| {
                (0..nl)
                    .map(|l| {
                        let mut m = Matrix::zeros(&f, dims[l][h.src], dims[l][h.tgt]);
                        for (j, &b) in blocks[l][h.tgt].iter().enumerate() {
                            for (k, s) in rmul(b, h.basis) {
                                let i = blocks[l][h.src].iter().position(|&p| p == k).unwrap();
                                m.set(i, j, s);
                            }
                        }
                        m
                    })
                    .collect()
            })
            .collect();
        Bimodule {
            left: left.clone(),
            right: right.clone(),
            dims,
            lact,
            ract,
        }
    }

    /// `M e_r` as a left module.
    pub fn left_module_at(&self, r: usize) -> Module<F> {
        let dims = self.dims.iter().map(|row| row[r]).collect();
        let act = self.lact.iter().map(|per_r| per_r[r].clone()).collect();
        Module {
            alg: self.left.clone(),
            dims,
            act,
        }
    }

    /// `M` as a left module, `⊕_r M e_r`.
    pub fn left_module(&self) -> Module<F> {
        let parts: Vec<Module<F>> = (0..self.right.num_vertices())
            .map(|r| self.left_module_at(r))
            .collect();
        let refs: Vec<&Module<F>> = parts.iter().collect();
        direct_sum(&self.left, &refs).module
    }

    /// `e_l M` as a left module over the opposite of the right algebra.
    pub fn right_module_at(&self, l: usize, right_op: &Arc<Algebra<F>>) -> Module<F> {
        let dims = self.dims[l].clone();
        let act = self.ract.iter().map(|per_l| per_l[l].clone()).collect();
        Module {
            alg: right_op.clone(),
            dims,
            act,
        }
    }

    /// `M` as a right module, i.e. a left module over the opposite algebra.
    pub fn right_module(&self, right_op: &Arc<Algebra<F>>) -> Module<F> {
        let parts: Vec<Module<F>> = (0..self.left.num_vertices())
            .map(|l| self.right_module_at(l, right_op))
            .collect();
        let refs: Vec<&Module<F>> = parts.iter().collect();
        direct_sum(right_op, &refs).module
    }

    /// Right multiplication by generator `h` as a left-module map
    /// `M e_tgt(h) -> M e_src(h)`.
    pub fn right_mult(&self, h: usize) -> ModMap<F> {
        ModMap {
            blocks: self.ract[h].clone(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let (nl, nr) = (self.left.num_vertices(), self.right.num_vertices());
        if self.dims.len() != nl || self.dims.iter().any(|r| r.len() != nr) {
            return Err(Error::NotAModule(
                "bimodule grading has the wrong shape".into(),
            ));
        }
        if self.lact.len() != self.left.gens.len() || self.lact.iter().any(|x| x.len() != nr) {
            return Err(Error::NotAModule("left action has the wrong shape".into()));
        }
        if self.ract.len() != self.right.gens.len() || self.ract.iter().any(|x| x.len() != nl) {
            return Err(Error::NotAModule("right action has the wrong shape".into()));
        }
        for r in 0..nr {
            self.left_module_at(r).validate()?;
        }
        let op = Arc::new(self.right.opposite());
        for l in 0..nl {
            self.right_module_at(l, &op).validate()?;
        }
        for (g, gen) in self.left.gens.iter().enumerate() {
            for (h, hg) in self.right.gens.iter().enumerate() {
                let lhs = self.lact[g][hg.src].mul(&self.ract[h][gen.src]);
                let rhs = self.ract[h][gen.tgt].mul(&self.lact[g][hg.tgt]);
                if lhs != rhs {
                    return Err(Error::NotAModule(format!(
                        "left {} and right {} do not commute",
                        gen.label, hg.label
                    )));
                }
            }
        }
        Ok(())
    }

    /// Bimodule from full matrices: idempotents and generators on both sides.
    /// Right matrices are the linear maps `m -> m a`.
    #[allow(clippy::too_many_arguments)]
    pub fn from_full_matrices(
        left: Arc<Algebra<F>>,
        right: Arc<Algebra<F>>,
        dim: usize,
        left_idems: &[Matrix<F>],
        left_gens: &[Matrix<F>],
        right_idems: &[Matrix<F>],
        right_gens: &[Matrix<F>],
    ) -> Result<Self> {
        let f = left.field().clone();
        let (nl, nr) = (left.num_vertices(), right.num_vertices());
        if left_idems.len() != nl || right_idems.len() != nr {
            return Err(Error::NotAModule(
                "need one idempotent matrix per vertex on each side".into(),
            ));
        }
        if left_gens.len() != left.gens.len() || right_gens.len() != right.gens.len() {
            return Err(Error::NotAModule(
                "need one matrix per generator on each side".into(),
            ));
        }
        if left_idems
            .iter()
            .chain(left_gens)
            .chain(right_idems)
            .chain(right_gens)
            .any(|m| m.shape() != (dim, dim))
        {
            return Err(Error::Dimension(format!(
                "all action matrices must be {dim}x{dim}"
            )));
        }
        let mut spaces = Vec::new();
        for el in left_idems {
            for er in right_idems {
                spaces.push(Subspace::span(&el.mul(er)));
            }
        }
        let parts: Vec<&Matrix<F>> = spaces.iter().map(|s| &s.basis).collect();
        let change = Matrix::hstack(&f, dim, &parts);
        let inv = change
            .inverse()
            .ok_or_else(|| Error::NotAModule("idempotents do not decompose the bimodule".into()))?;
        let flat: Vec<usize> = spaces.iter().map(|s| s.dim()).collect();
        let off = offsets(&flat);
        let dims: Vec<Vec<usize>> = (0..nl)
            .map(|l| (0..nr).map(|r| flat[l * nr + r]).collect())
            .collect();
        let blk = |m: &Matrix<F>, to: (usize, usize), from: (usize, usize)| {
            let full = inv.mul(m).mul(&change);
            let (ti, fi) = (to.0 * nr + to.1, from.0 * nr + from.1);
            full.block(off[ti], flat[ti], off[fi], flat[fi])
        };
        let lact = left
            .gens
            .iter()
            .zip(left_gens)
            .map(|(g, m)| (0..nr).map(|r| blk(m, (g.tgt, r), (g.src, r))).collect())
            .collect();
        let ract = right
            .gens
            .iter()
            .zip(right_gens)
            .map(|(h, m)| (0..nl).map(|l| blk(m, (l, h.src), (l, h.tgt))).collect())
            .collect();
        let b = Bimodule::new(left, right, dims, lact, ract)?;
        // the blocks must carry the whole action
        for (g, m) in b.left.gens.iter().zip(left_gens) {
            let mut rebuilt = Matrix::zeros(&f, dim, dim);
            for r in 0..nr {
                let (ti, fi) = (g.tgt * nr + r, g.src * nr + r);
                rebuilt.set_block(
                    off[ti],
                    off[fi],
                    &b.lact[b.left.gen_index(&g.label).unwrap()][r],
                );
            }
            if inv.mul(m).mul(&change) != rebuilt {
                return Err(Error::NotAModule(format!(
                    "left generator {} does not respect the grading",
                    g.label
                )));
            }
        }
        for (h, m) in b.right.gens.iter().zip(right_gens) {
            let mut rebuilt = Matrix::zeros(&f, dim, dim);
            for l in 0..nl {
                let (ti, fi) = (l * nr + h.src, l * nr + h.tgt);
                rebuilt.set_block(
                    off[ti],
                    off[fi],
                    &b.ract[b.right.gen_index(&h.label).unwrap()][l],
                );
            }
            if inv.mul(m).mul(&change) != rebuilt {
                return Err(Error::NotAModule(format!(
                    "right generator {} does not respect the grading",
                    h.label
                )));
            }
        }
        Ok(b)
    }

    /// Whole-space matrix of a left basis element.
    pub fn full_left_action(&self, b: usize) -> Matrix<F> {
        let m = self.left_module();
        let full = m.full_action(b);
        // left_module orders by l then r, which is the bimodule order
        full
    }

    /// Whole-space matrix of `m -> m c` for a right basis element `c`.
    pub fn full_right_action(&self, c: usize) -> Matrix<F> {
        let f = self.field();
        let op = Arc::new(self.right.opposite());
        let nl = self.left.num_vertices();
        let parts: Vec<Matrix<F>> = (0..nl)
            .map(|l| self.right_module_at(l, &op).full_action(c))
            .collect();
        let refs: Vec<&Matrix<F>> = parts.iter().collect();
        Matrix::block_diag(f, &refs)
    }
}

/// `M ⊗_R X` for an `L`-`R` bimodule `M`, with the quotient data.
///
/// For each left vertex `l`, the ambient space is `⊕_r e_l M e_r ⊗ e_r X`,
/// pure tensors ordered by `(r, m, x)`. `proj[l]` maps onto the canonical
/// quotient basis and `sec[l]` is the matching section.
#[derive(Clone, Debug)]
pub struct Tensor<F: Field> {
    pub module: Module<F>,
    pub proj: Vec<Matrix<F>>,
    pub sec: Vec<Matrix<F>>,
    pub amb_off: Vec<Vec<usize>>,
    pub x_dims: Vec<usize>,
    pub m_dims: Vec<Vec<usize>>,
}

impl<F: Field> Tensor<F> {
    /// Ambient index of `m_i ⊗ x_j` with `m_i` in block `(l, r)`.
    pub fn amb_index(&self, l: usize, r: usize, i: usize, j: usize) -> usize {
        self.amb_off[l][r] + i * self.x_dims[r] + j
    }

    pub fn amb_dim(&self, l: usize) -> usize {
        *self.amb_off[l].last().unwrap()
    }
}

pub fn tensor<F: Field>(m: &Bimodule<F>, x: &Module<F>) -> Tensor<F> {
    debug_assert!(m.right.same_as(&x.alg));
    let f = m.field().clone();
    let (nl, nr) = (m.left.num_vertices(), m.right.num_vertices());
    let amb_off: Vec<Vec<usize>> = (0..nl)
        .map(|l| {
            offsets(
                &(0..nr)
                    .map(|r| m.dims[l][r] * x.dims[r])
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    let mut proj = Vec::new();
    let mut sec = Vec::new();
    for l in 0..nl {
        let n = amb_off[l][nr];
        let mut rels: Vec<Vec<F::Elem>> = Vec::new();
        for (h, hg) in m.right.gens.iter().enumerate() {
            let (r, r2) = (hg.src, hg.tgt);
            let rm = &m.ract[h][l];
            let xh = &x.act[h];
            for i in 0..m.dims[l][r2] {
                for j in 0..x.dims[r] {
                    // (m_i h) ⊗ x_j - m_i ⊗ (h x_j)
                    let mut v = vec![f.zero(); n];
                    for a in 0..m.dims[l][r] {
                        let idx = amb_off[l][r] + a * x.dims[r] + j;
                        v[idx] = f.add(&v[idx], rm.get(a, i));
                    }
                    for b in 0..x.dims[r2] {
                        let idx = amb_off[l][r2] + i * x.dims[r2] + b;
                        v[idx] = f.sub(&v[idx], xh.get(b, j));
                    }
                    if v.iter().any(|e| !f.is_zero(e)) {
                        rels.push(v);
                    }
                }
            }
        }
        let relm = if rels.is_empty() {
            Matrix::zeros(&f, n, 0)
        } else {
            Matrix::from_rows(&f, &rels).unwrap().transpose()
        };
        let (p, s) = quotient(&f, n, &relm);
        proj.push(p);
        sec.push(s);
    }
    let dims: Vec<usize> = proj.iter().map(|p| p.rows()).collect();
    let act = m
        .left
        .gens
        .iter()
        .enumerate()
        .map(|(g, gen)| {
            let (l, l2) = (gen.src, gen.tgt);
            let mut amb = Matrix::zeros(&f, amb_off[l2][nr], amb_off[l][nr]);
            for r in 0..nr {
                let blk = m.lact[g][r].kron(&Matrix::identity(&f, x.dims[r]));
                amb.set_block(amb_off[l2][r], amb_off[l][r], &blk);
            }
            proj[l2].mul(&amb).mul(&sec[l])
        })
        .collect();
    Tensor {
        module: Module {
            alg: m.left.clone(),
            dims,
            act,
        },
        proj,
        sec,
        amb_off,
        x_dims: x.dims.clone(),
        m_dims: m.dims.clone(),
    }
}

/// `1 ⊗ a : M ⊗ X -> M ⊗ X'`.
pub fn tensor_map<F: Field>(t1: &Tensor<F>, t2: &Tensor<F>, a: &ModMap<F>) -> ModMap<F> {
    let f = t1.module.field().clone();
    let nl = t1.proj.len();
    let nr = t1.x_dims.len();
    let blocks = (0..nl)
        .map(|l| {
            let mut amb = Matrix::zeros(&f, t2.amb_dim(l), t1.amb_dim(l));
            for r in 0..nr {
                let blk = Matrix::identity(&f, t1.m_dims[l][r]).kron(&a.blocks[r]);
                amb.set_block(t2.amb_off[l][r], t1.amb_off[l][r], &blk);
            }
            t2.proj[l].mul(&amb).mul(&t1.sec[l])
        })
        .collect();
    ModMap { blocks }
}

/// `Hom_L(M, X)` for an `L`-`R` bimodule `M`, as a left `R`-module.
///
/// Block `r` is `Hom_L(M e_r, X)` with its canonical basis; a generator
/// `h: r -> r'` acts by precomposition with right multiplication by `h`.
#[derive(Clone, Debug)]
pub struct HomModule<F: Field> {
    pub module: Module<F>,
    pub spaces: Vec<HomSpace<F>>,
}

impl<F: Field> HomModule<F> {
    /// The map `M e_r -> X` with coordinates `c` in block `r`.
    pub fn element(&self, r: usize, c: &Matrix<F>) -> ModMap<F> {
        let v = self.spaces[r].space.basis.mul(c);
        self.spaces[r].unvectorize(&v)
    }

    pub fn coords(&self, r: usize, phi: &ModMap<F>) -> Matrix<F> {
        self.spaces[r].coords(phi)
    }
}

pub fn hom_module<F: Field>(m: &Bimodule<F>, x: &Module<F>) -> HomModule<F> {
    debug_assert!(m.left.same_as(&x.alg));
    let f = m.field().clone();
    let nr = m.right.num_vertices();
    let spaces: Vec<HomSpace<F>> = (0..nr)
        .map(|r| hom_space(&m.left_module_at(r), x))
        .collect();
    let dims: Vec<usize> = spaces.iter().map(|s| s.dim()).collect();
    let act = m
        .right
        .gens
        .iter()
        .enumerate()
        .map(|(h, hg)| {
            let (r, r2) = (hg.src, hg.tgt);
            let rho = m.right_mult(h);
            let mut out = Matrix::zeros(&f, dims[r2], dims[r]);
            for k in 0..dims[r] {
                let phi = spaces[r].basis_map(k);
                let c = spaces[r2].coords(&phi.compose(&rho));
                out.set_block(0, k, &c);
            }
            out
        })
        .collect();
    HomModule {
        module: Module {
            alg: m.right.clone(),
            dims,
            act,
        },
        spaces,
    }
}

/// `Hom_L(M, b) : Hom_L(M, X) -> Hom_L(M, X')`, postcomposition with `b`.
pub fn hom_module_map<F: Field>(h1: &HomModule<F>, h2: &HomModule<F>, b: &ModMap<F>) -> ModMap<F> {
    let f = h1.module.field().clone();
    let blocks = (0..h1.spaces.len())
        .map(|r| {
            let mut out = Matrix::zeros(&f, h2.spaces[r].dim(), h1.spaces[r].dim());
            for k in 0..h1.spaces[r].dim() {
                let phi = h1.spaces[r].basis_map(k);
                out.set_block(0, k, &h2.coords(r, &b.compose(&phi)));
            }
            out
        })
        .collect();
    ModMap { blocks }
}
