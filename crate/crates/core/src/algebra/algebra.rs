//! Finite-dimensional algebras given by a basis and structure constants.
//!
//! Algebras carry a set of vertices (orthogonal idempotents summing to one)
//! and a list of generators. Every basis element is either a vertex idempotent
//! or a word in the generators, so a module is determined by one matrix per
//! generator between vertex blocks.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Field;

/// How a basis element is written in terms of the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisKind {
    /// The idempotent of a vertex.
    Idem(usize),
    /// A product of generators, written left to right as composed: `[b, a]`
    /// means `b * a`, which acts by `a` first.
    Word(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElem {
    pub label: String,
    /// `b = e_tgt * b * e_src`
    pub src: usize,
    pub tgt: usize,
    pub kind: BasisKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub label: String,
    pub src: usize,
    pub tgt: usize,
    /// Index of the generator in the basis.
    pub basis: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

/// A finite quiver. Paths compose right to left: the path `b a` runs along
/// `a` first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, usize, usize)>) -> Result<Self> {
        let n = vertices.len();
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::Quiver(format!("duplicate vertex {v}")));
            }
        }
        let mut out = Vec::new();
        for (name, s, t) in arrows {
            if s >= n || t >= n {
                return Err(Error::Quiver(format!(
                    "arrow {name} has an invalid endpoint"
                )));
            }
            if out.iter().any(|a: &Arrow| a.name == name) || vertices.contains(&name) {
                return Err(Error::Quiver(format!("duplicate name {name}")));
            }
            out.push(Arrow {
                name,
                src: s,
                tgt: t,
            });
        }
        Ok(Quiver {
            vertices,
            arrows: out,
        })
    }

    /// Linear quiver `1 -> 2 -> ... -> n` with arrows `a1, a2, ...`.
    pub fn linear(n: usize) -> Self {
        let vertices = (1..=n).map(|i| i.to_string()).collect();
        let arrows = (0..n.saturating_sub(1))
            .map(|i| (format!("a{}", i + 1), i, i + 1))
            .collect();
        Quiver::new(vertices, arrows).expect("linear quiver")
    }

    /// Cyclic quiver `1 -> 2 -> ... -> n -> 1` with arrows `a1, ..., an`.
    pub fn cyclic(n: usize) -> Self {
        let vertices = (1..=n).map(|i| i.to_string()).collect();
        let arrows = (0..n)
            .map(|i| (format!("a{}", i + 1), i, (i + 1) % n))
            .collect();
        Quiver::new(vertices, arrows).expect("cyclic quiver")
    }

    fn arrow_index(&self, name: &str) -> Result<usize> {
        self.arrows
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| Error::Quiver(format!("unknown arrow {name}")))
    }

    /// All words of length `h` (arrow indices, composition order), which
    /// generate `J^h` as a monomial ideal.
    pub fn all_paths_of_length(&self, h: usize) -> Vec<Vec<String>> {
        let mut paths: Vec<Vec<usize>> = self
            .arrows
            .iter()
            .enumerate()
            .map(|(i, _)| vec![i])
            .collect();
        for _ in 1..h {
            let mut next = Vec::new();
            for p in &paths {
                let last = &self.arrows[p[0]];
                for (i, a) in self.arrows.iter().enumerate() {
                    if a.src == last.tgt {
                        let mut q = vec![i];
                        q.extend_from_slice(p);
                        next.push(q);
                    }
                }
            }
            paths = next;
        }
        paths
            .into_iter()
            .map(|p| p.into_iter().map(|i| self.arrows[i].name.clone()).collect())
            .collect()
    }
}

/// Sparse expansion of a product of two basis elements.
pub type Expansion<F> = Vec<(usize, <F as Field>::Elem)>;

/// A finite-dimensional associative unital algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct Algebra<F: Field> {
    pub field: F,
    pub vertices: Vec<String>,
    pub basis: Vec<BasisElem>,
    pub gens: Vec<Generator>,
    /// `mult[i][j]` expands `b_i * b_j`.
    pub mult: Vec<Vec<Expansion<F>>>,
    pub unit: Vec<F::Elem>,
    /// The quiver and monomial relations, for quiver-presented algebras.
    pub quiver: Option<(Quiver, Vec<Vec<String>>)>,
    /// True when the non-idempotent basis elements span the radical, which
    /// then is generated by the generators. Simples need this.
    pub graded_radical: bool,
}

/// Basis cap for path algebras. Larger bases are reported as errors.
pub const MAX_BASIS: usize = 4096;

impl<F: Field> Algebra<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    /// Basis index of the idempotent of vertex `v`, if it is a basis element.
    pub fn idem_index(&self, v: usize) -> Option<usize> {
        self.basis.iter().position(|b| b.kind == BasisKind::Idem(v))
    }

    pub fn is_quiver_presented(&self) -> bool {
        self.quiver.is_some()
    }

    /// Path algebra `kQ/I` where `I` is generated by the given arrow words.
    ///
    /// Words list arrow names in composition order, so `["b", "a"]` is the
    /// path `b a` that runs along `a` first.
    pub fn path_algebra(field: &F, quiver: &Quiver, forbidden: &[Vec<String>]) -> Result<Self> {
        let mut rels: Vec<Vec<usize>> = Vec::new();
        for w in forbidden {
            if w.is_empty() {
                return Err(Error::Quiver("empty relation".into()));
            }
            let idx: Vec<usize> = w
                .iter()
                .map(|a| quiver.arrow_index(a))
                .collect::<Result<_>>()?;
            for k in 0..idx.len() - 1 {
                if quiver.arrows[idx[k]].src != quiver.arrows[idx[k + 1]].tgt {
                    return Err(Error::Quiver(format!("relation {w:?} is not a path")));
                }
            }
            rels.push(idx);
        }
        let maxlen = rels.iter().map(|r| r.len()).max().unwrap_or(1);
        let admissible = |p: &[usize]| {
            !rels
                .iter()
                .any(|r| p.windows(r.len()).any(|w| w == r.as_slice()))
        };

        // pumping bound: a longer admissible path revisits a (vertex, window) state
        let states = quiver.vertices.len().max(1)
            * (quiver.arrows.len() + 1).pow(maxlen.saturating_sub(1) as u32);
        let bound = states + maxlen + 1;

        let mut by_len: Vec<Vec<Vec<usize>>> = vec![];
        let mut cur: Vec<Vec<usize>> = (0..quiver.arrows.len())
            .map(|i| vec![i])
            .filter(|p| admissible(p))
            .collect();
        let mut total = quiver.vertices.len();
        while !cur.is_empty() {
            total += cur.len();
            if by_len.len() >= bound || total > MAX_BASIS {
                return Err(Error::InfiniteBasis(format!(
                    "paths of length {} survive the relations",
                    by_len.len() + 1
                )));
            }
            cur.sort();
            let mut next = Vec::new();
            for p in &cur {
                let last = &quiver.arrows[p[0]];
                for (i, a) in quiver.arrows.iter().enumerate() {
                    if a.src == last.tgt {
                        let mut q = vec![i];
                        q.extend_from_slice(p);
                        if admissible(&q) {
                            next.push(q);
                        }
                    }
                }
            }
            by_len.push(core::mem::take(&mut cur));
            cur = next;
        }

        // generators are the surviving arrows
        let arrow_gen: Vec<Option<usize>> = {
            let mut k = 0;
            (0..quiver.arrows.len())
                .map(|i| {
                    if admissible(&[i]) {
                        k += 1;
                        Some(k - 1)
                    } else {
                        None
                    }
                })
                .collect()
        };

        let mut basis = Vec::new();
        let mut paths: Vec<Vec<usize>> = Vec::new();
        for (v, name) in quiver.vertices.iter().enumerate() {
            basis.push(BasisElem {
                label: format!("e{name}"),
                src: v,
                tgt: v,
                kind: BasisKind::Idem(v),
            });
            paths.push(vec![]);
        }
        let mut index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        let mut gens = Vec::new();
        for layer in &by_len {
            for p in layer {
                let label = p
                    .iter()
                    .map(|&i| quiver.arrows[i].name.as_str())
                    .collect::<Vec<_>>()
                    .join("*");
                let src = quiver.arrows[*p.last().unwrap()].src;
                let tgt = quiver.arrows[p[0]].tgt;
                let word: Vec<usize> = p.iter().map(|&i| arrow_gen[i].unwrap()).collect();
                index.insert(p.clone(), basis.len());
                if p.len() == 1 {
                    gens.push(Generator {
                        label: label.clone(),
                        src,
                        tgt,
                        basis: basis.len(),
                    });
                }
                basis.push(BasisElem {
                    label,
                    src,
                    tgt,
                    kind: BasisKind::Word(word),
                });
                paths.push(p.clone());
            }
        }

        let n = basis.len();
        let nv = quiver.vertices.len();
        let one = field.one();
        let mut mult = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                if basis[i].src != basis[j].tgt {
                    continue;
                }
                let prod = if i < nv {
                    Some(j)
                } else if j < nv {
                    Some(i)
                } else {
                    let mut w = paths[i].clone();
                    w.extend_from_slice(&paths[j]);
                    index.get(&w).copied()
                };
                if let Some(k) = prod {
                    mult[i][j].push((k, one.clone()));
                }
            }
        }
        let mut unit = vec![field.zero(); n];
        for u in unit.iter_mut().take(nv) {
            *u = one.clone();
        }
        Ok(Algebra {
            field: field.clone(),
            vertices: quiver.vertices.clone(),
            basis,
            gens,
            mult,
            unit,
            quiver: Some((quiver.clone(), forbidden.to_vec())),
            graded_radical: true,
        })
    }

    /// Algebra from raw structure constants: `consts[i][j][k]` is the
    /// coefficient of `b_k` in `b_i b_j`. It gets a single vertex and every
    /// basis element becomes a generator.
    pub fn from_structure_constants(
        field: &F,
        labels: Vec<String>,
        consts: &[Vec<Vec<F::Elem>>],
        unit: Vec<F::Elem>,
    ) -> Result<Self> {
        let n = labels.len();
        if consts.len() != n
            || consts
                .iter()
                .any(|r| r.len() != n || r.iter().any(|c| c.len() != n))
            || unit.len() != n
        {
            return Err(Error::Dimension(
                "structure constants must be n x n x n with a length-n unit".into(),
            ));
        }
        let mult: Vec<Vec<Expansion<F>>> = consts
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| {
                        c.iter()
                            .enumerate()
                            .filter(|(_, x)| !field.is_zero(x))
                            .map(|(k, x)| (k, x.clone()))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let basis = labels
            .iter()
            .enumerate()
            .map(|(i, l)| BasisElem {
                label: l.clone(),
                src: 0,
                tgt: 0,
                kind: BasisKind::Word(vec![i]),
            })
            .collect();
        let gens = labels
            .iter()
            .enumerate()
            .map(|(i, l)| Generator {
                label: l.clone(),
                src: 0,
                tgt: 0,
                basis: i,
            })
            .collect();
        let a = Algebra {
            field: field.clone(),
            vertices: vec!["1".to_string()],
            basis,
            gens,
            mult,
            unit,
            quiver: None,
            graded_radical: false,
        };
        a.check_axioms()?;
        Ok(a)
    }

    fn expand_product(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim()];
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if f.is_zero(yj) {
                    continue;
                }
                let c = f.mul(xi, yj);
                for (k, s) in &self.mult[i][j] {
                    f.mul_add_assign(&mut out[*k], &c, s);
                }
            }
        }
        out
    }

    fn unit_vector(&self, i: usize) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    /// Associativity and unit laws on basis triples.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            let ei = self.unit_vector(i);
            if self.expand_product(&self.unit, &ei) != ei
                || self.expand_product(&ei, &self.unit) != ei
            {
                return Err(Error::NotAModule(format!(
                    "unit law fails at {}",
                    self.basis[i].label
                )));
            }
            for j in 0..n {
                let ij = self.expand_product(&ei, &self.unit_vector(j));
                for k in 0..n {
                    let ek = self.unit_vector(k);
                    let left = self.expand_product(&ij, &ek);
                    let jk = self.expand_product(&self.unit_vector(j), &ek);
                    if left != self.expand_product(&ei, &jk) {
                        return Err(Error::NotAModule(format!(
                            "associativity fails at ({}, {}, {})",
                            self.basis[i].label, self.basis[j].label, self.basis[k].label
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The opposite algebra. Basis order, labels and generators are kept;
    /// sources and targets swap and words reverse.
    pub fn opposite(&self) -> Self {
        let n = self.dim();
        let basis = self
            .basis
            .iter()
            .map(|b| BasisElem {
                label: b.label.clone(),
                src: b.tgt,
                tgt: b.src,
                kind: match &b.kind {
                    BasisKind::Idem(v) => BasisKind::Idem(*v),
                    BasisKind::Word(w) => BasisKind::Word(w.iter().rev().copied().collect()),
                },
            })
            .collect();
        let gens = self
            .gens
            .iter()
            .map(|g| Generator {
                label: g.label.clone(),
                src: g.tgt,
                tgt: g.src,
                basis: g.basis,
            })
            .collect();
        let mult = (0..n)
            .map(|i| (0..n).map(|j| self.mult[j][i].clone()).collect())
            .collect();
        let quiver = self.quiver.as_ref().map(|(q, rels)| {
            let arrows = q
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    src: a.tgt,
                    tgt: a.src,
                })
                .collect();
            let rels = rels
                .iter()
                .map(|w| w.iter().rev().cloned().collect())
                .collect();
            (
                Quiver {
                    vertices: q.vertices.clone(),
                    arrows,
                },
                rels,
            )
        });
        Algebra {
            field: self.field.clone(),
            vertices: self.vertices.clone(),
            basis,
            gens,
            mult,
            unit: self.unit.clone(),
            quiver,
            graded_radical: self.graded_radical,
        }
    }

    /// Basis indices `b` with `e_tgt b e_src = b`.
    pub fn basis_between(&self, src: usize, tgt: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&b| self.basis[b].src == src && self.basis[b].tgt == tgt)
            .collect()
    }

    /// Generators whose label matches.
    pub fn gen_index(&self, label: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.label == label)
    }

    pub fn basis_index(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.label == label)
    }

    /// Words of the generators as basis indices, for evaluating modules.
    pub fn word(&self, b: usize) -> Option<&[usize]> {
        match &self.basis[b].kind {
            BasisKind::Idem(_) => None,
            BasisKind::Word(w) => Some(w),
        }
    }

    /// Same algebra up to structure (pointer equality is not required).
    pub fn same_as(&self, other: &Self) -> bool {
        core::ptr::eq(self, other) || self == other
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Q};

    fn f3() -> Fp {
        Fp::new(3).unwrap()
    }

    #[test]
    fn a2_has_dimension_three() {
        let a = Algebra::path_algebra(&f3(), &Quiver::linear(2), &[]).unwrap();
        assert_eq!(a.dim(), 3);
        let labels: Vec<_> = a.basis.iter().map(|b| b.label.as_str()).collect();
        assert_eq!(labels, ["e1", "e2", "a1"]);
        assert_eq!((a.basis[2].src, a.basis[2].tgt), (0, 1));
        a.check_axioms().unwrap();
    }

    #[test]
    fn nakayama_dimension_is_n_times_h() {
        let q = Quiver::cyclic(3);
        let rels = q.all_paths_of_length(2);
        let a = Algebra::path_algebra(&f3(), &q, &rels).unwrap();
        assert_eq!(a.dim(), 6);
        let q4 = Quiver::cyclic(4);
        let a = Algebra::path_algebra(&Q, &q4, &q4.all_paths_of_length(3)).unwrap();
        assert_eq!(a.dim(), 12);
        a.check_axioms().unwrap();
    }

    #[test]
    fn point_is_the_ground_field() {
        let q = Quiver::new(vec!["1".into()], vec![]).unwrap();
        let a = Algebra::path_algebra(&f3(), &q, &[]).unwrap();
        assert_eq!(a.dim(), 1);
    }

    #[test]
    fn unrelated_cycle_is_rejected() {
        let q = Quiver::cyclic(2);
        assert!(matches!(
            Algebra::path_algebra(&f3(), &q, &[]),
            Err(Error::InfiniteBasis(_))
        ));
        // a single loop killed at length 3 is fine
        let l = Quiver::new(vec!["1".into()], vec![("x".into(), 0, 0)]).unwrap();
        let a =
            Algebra::path_algebra(&f3(), &l, &[vec!["x".into(), "x".into(), "x".into()]]).unwrap();
        assert_eq!(a.dim(), 3);
    }

    #[test]
    fn opposite_reverses_and_is_involutive() {
        let a = Algebra::path_algebra(&f3(), &Quiver::linear(2), &[]).unwrap();
        let op = a.opposite();
        assert_eq!(op.dim(), 3);
        assert_eq!((op.basis[2].src, op.basis[2].tgt), (1, 0));
        op.check_axioms().unwrap();
        assert_eq!(op.opposite(), a);
    }

    #[test]
    fn dual_numbers_are_self_opposite() {
        let f = f3();
        let c = |v: [i64; 2]| v.iter().map(|&x| f.from_i64(x)).collect::<Vec<_>>();
        // basis 1, x with x^2 = 0
        let consts = vec![vec![c([1, 0]), c([0, 1])], vec![c([0, 1]), c([0, 0])]];
        let a =
            Algebra::from_structure_constants(&f, vec!["1".into(), "x".into()], &consts, c([1, 0]))
                .unwrap();
        assert_eq!(a.opposite().mult, a.mult);
    }

    #[test]
    fn bad_structure_constants_fail() {
        let f = f3();
        let c = |v: [i64; 2]| v.iter().map(|&x| f.from_i64(x)).collect::<Vec<_>>();
        let consts = vec![vec![c([1, 0]), c([0, 1])], vec![c([0, 1]), c([1, 1])]];
        // unit (0,1) is wrong
        assert!(Algebra::from_structure_constants(
            &f,
            vec!["1".into(), "x".into()],
            &consts,
            c([0, 1])
        )
        .is_err());
    }
}
