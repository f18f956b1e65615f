//! Named Morita rings with their properties re-checked at load.

use std::sync::Arc;

use morita_core::algebra::module::regular;
use morita_core::algebra::{Algebra, Bimodule, Quiver};
use morita_core::homology::{is_injective, is_projective};
use morita_core::morita::MoritaData;
use morita_core::{Error, Field, Result};

/// Every catalog entry, in listing order.
pub const NAMES: [&str; 6] = [
    "a2-corner",
    "nakayama-corner",
    "a2-regular",
    "a2",
    "triangular",
    "product",
];

/// Parameters of `nakayama-corner`: `A = k(cyclic n)/J^h`, `M = N = Ae_i ⊗ e_jA`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NakayamaParams {
    pub n: usize,
    pub h: usize,
    pub i: usize,
    pub j: usize,
}

impl Default for NakayamaParams {
    fn default() -> Self {
        NakayamaParams {
            n: 3,
            h: 2,
            i: 1,
            j: 3,
        }
    }
}

impl NakayamaParams {
    pub fn check(&self) -> Result<()> {
        let NakayamaParams { n, h, i, j } = *self;
        if !(2 <= h && h <= n) {
            return Err(Error::Hypothesis(format!(
                "need 2 <= h <= n, got h={h}, n={n}"
            )));
        }
        if !(1 <= i && i < j && j <= n) {
            return Err(Error::Hypothesis(format!(
                "need 1 <= i < j <= n, got i={i}, j={j}"
            )));
        }
        if j - i < h {
            return Err(Error::Hypothesis(format!(
                "need j - i >= h, got j-i={}, h={h}",
                j - i
            )));
        }
        Ok(())
    }
}

/// A property an instance declares, with the result of checking it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Property {
    pub name: &'static str,
    pub holds: bool,
}

#[derive(Clone, Debug)]
pub struct CatalogInstance<F: Field> {
    pub name: String,
    pub data: Arc<MoritaData<F>>,
    /// Declared properties; loading fails if one does not hold.
    pub properties: Vec<Property>,
    pub note: &'static str,
}

impl<F: Field> CatalogInstance<F> {
    pub fn has(&self, prop: &str) -> bool {
        self.properties.iter().any(|p| p.name == prop && p.holds)
    }
}

fn path_algebra<F: Field>(field: &F, q: &Quiver, rels: &[Vec<String>]) -> Result<Arc<Algebra<F>>> {
    Ok(Arc::new(Algebra::path_algebra(field, q, rels)?))
}

pub fn a2_algebra<F: Field>(field: &F) -> Result<Arc<Algebra<F>>> {
    path_algebra(field, &Quiver::linear(2), &[])
}

pub fn point_algebra<F: Field>(field: &F) -> Result<Arc<Algebra<F>>> {
    path_algebra(field, &Quiver::linear(1), &[])
}

pub fn nakayama_algebra<F: Field>(field: &F, n: usize, h: usize) -> Result<Arc<Algebra<F>>> {
    let q = Quiver::cyclic(n);
    let rels = q.all_paths_of_length(h);
    path_algebra(field, &q, &rels)
}

/// Checks computed for every instance; `declared` selects which must hold.
fn properties<F: Field>(
    d: &Arc<MoritaData<F>>,
    declared: &[&'static str],
) -> Result<Vec<Property>> {
    let op_a = Arc::new(d.a.opposite());
    let op_b = Arc::new(d.b.opposite());
    let all: Vec<(&'static str, bool)> = vec![
        ("tensors-vanish", d.tensors_vanish()),
        ("tensors-nonzero", !d.mn_zero || !d.nm_zero),
        ("A-self-injective", is_injective(&regular(&d.a))),
        ("B-self-injective", is_injective(&regular(&d.b))),
        ("AN-projective", is_projective(&d.n.left_module())),
        ("BM-projective", is_projective(&d.m.left_module())),
        ("MA-flat", is_projective(&d.m.right_module(&op_a))),
        ("NB-flat", is_projective(&d.n.right_module(&op_b))),
        ("M-zero", d.m.is_zero()),
        ("N-zero", d.n.is_zero()),
    ];
    for name in declared {
        match all.iter().find(|(n, _)| n == name) {
            Some((_, true)) => {}
            Some((_, false)) => {
                return Err(Error::Hypothesis(format!("declared property {name} fails")))
            }
            None => return Err(Error::Unknown(format!("no check for property {name}"))),
        }
    }
    Ok(all
        .into_iter()
        .map(|(name, holds)| Property { name, holds })
        .collect())
}

fn build<F: Field>(
    name: &str,
    a: Arc<Algebra<F>>,
    b: Arc<Algebra<F>>,
    m: Bimodule<F>,
    n: Bimodule<F>,
    declared: &[&'static str],
    note: &'static str,
) -> Result<CatalogInstance<F>> {
    let d = MoritaData::new(a, b, m, n)?;
    let v = d.validate();
    if !v.valid() {
        return Err(Error::Hypothesis(format!(
            "{name}: invalid Morita data: {v:?}"
        )));
    }
    let d = Arc::new(d);
    let properties = properties(&d, declared)?;
    Ok(CatalogInstance {
        name: name.into(),
        data: d,
        properties,
        note,
    })
}

/// `A = B = k(1→2)`, `M = N = Ae₂ ⊗ e₁A`.
pub fn a2_corner<F: Field>(field: &F) -> Result<CatalogInstance<F>> {
    let a = a2_algebra(field)?;
    let m = Bimodule::outer(&a, 1, &a, 0);
    build(
        "a2-corner",
        a.clone(),
        a,
        m.clone(),
        m,
        &[
            "tensors-vanish",
            "AN-projective",
            "BM-projective",
            "MA-flat",
            "NB-flat",
        ],
        "A = B = k(1->2), M = N = Ae2 (x) e1A",
    )
}

pub fn nakayama_corner<F: Field>(field: &F, p: NakayamaParams) -> Result<CatalogInstance<F>> {
    p.check()?;
    let a = nakayama_algebra(field, p.n, p.h)?;
    // e_j A e_i = 0
    if !a.basis_between(p.i - 1, p.j - 1).is_empty() {
        return Err(Error::Hypothesis("e_j A e_i is nonzero".into()));
    }
    let m = Bimodule::outer(&a, p.i - 1, &a, p.j - 1);
    build(
        "nakayama-corner",
        a.clone(),
        a,
        m.clone(),
        m,
        &[
            "tensors-vanish",
            "A-self-injective",
            "B-self-injective",
            "AN-projective",
            "BM-projective",
            "MA-flat",
            "NB-flat",
        ],
        "A = B = k(cyclic n)/J^h, M = N = Ae_i (x) e_jA",
    )
}

/// `Λ = (A A; A A)` over `A = k(1→2)`: the pairings vanish but `M ⊗ N ≠ 0`.
pub fn a2_regular<F: Field>(field: &F) -> Result<CatalogInstance<F>> {
    let a = a2_algebra(field)?;
    let m = Bimodule::regular(&a);
    build(
        "a2-regular",
        a.clone(),
        a,
        m.clone(),
        m,
        &["tensors-nonzero"],
        "A = B = M = N = k(1->2)",
    )
}

/// `Λ = (k k; 0 k)`, which is `k(1→2)` itself.
pub fn a2<F: Field>(field: &F) -> Result<CatalogInstance<F>> {
    let k = point_algebra(field)?;
    let n = Bimodule::outer(&k, 0, &k, 0);
    let m = Bimodule::zero(&k, &k);
    build(
        "a2",
        k.clone(),
        k,
        m,
        n,
        &[
            "tensors-vanish",
            "M-zero",
            "A-self-injective",
            "B-self-injective",
            "AN-projective",
            "BM-projective",
            "MA-flat",
            "NB-flat",
        ],
        "A = B = N = k, M = 0",
    )
}

/// `A = B = k(1→2)`, `M = 0`, `N = Ae₂ ⊗ e₁A`.
pub fn triangular<F: Field>(field: &F) -> Result<CatalogInstance<F>> {
    let a = a2_algebra(field)?;
    let n = Bimodule::outer(&a, 1, &a, 0);
    let m = Bimodule::zero(&a, &a);
    build(
        "triangular",
        a.clone(),
        a,
        m,
        n,
        &[
            "tensors-vanish",
            "M-zero",
            "AN-projective",
            "BM-projective",
            "MA-flat",
            "NB-flat",
        ],
        "A = B = k(1->2), M = 0, N = Ae2 (x) e1A",
    )
}

/// `Λ = k × k`.
pub fn product<F: Field>(field: &F) -> Result<CatalogInstance<F>> {
    let k = point_algebra(field)?;
    let z = Bimodule::zero(&k, &k);
    build(
        "product",
        k.clone(),
        k,
        z.clone(),
        z,
        &[
            "tensors-vanish",
            "M-zero",
            "N-zero",
            "A-self-injective",
            "B-self-injective",
            "AN-projective",
            "BM-projective",
            "MA-flat",
            "NB-flat",
        ],
        "A = B = k, M = N = 0",
    )
}

pub fn catalog<F: Field>(
    name: &str,
    field: &F,
    nakayama: NakayamaParams,
) -> Result<CatalogInstance<F>> {
    match name {
        "a2-corner" => a2_corner(field),
        "nakayama-corner" => nakayama_corner(field, nakayama),
        "a2-regular" => a2_regular(field),
        "a2" => a2(field),
        "triangular" => triangular(field),
        "product" => product(field),
        _ => Err(Error::Unknown(format!("no catalog instance named {name}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use morita_core::Fp;

    fn f3() -> Fp {
        Fp::new(3).unwrap()
    }

    #[test]
    fn dimensions_of_the_corner_rings() {
        assert_eq!(a2_corner(&f3()).unwrap().data.lambda.dim(), 8);
        let nk = nakayama_corner(&f3(), NakayamaParams::default()).unwrap();
        assert_eq!(nk.data.lambda.dim(), 20);
        assert!(nk.has("A-self-injective") && nk.has("tensors-vanish"));
    }

    #[test]
    fn product_is_two_copies_of_the_field() {
        let p = product(&f3()).unwrap();
        assert_eq!(p.data.lambda.dim(), 2);
        assert_eq!(p.data.lambda.num_vertices(), 2);
    }

    #[test]
    fn a2_is_the_path_algebra() {
        let i = a2(&f3()).unwrap();
        assert_eq!(i.data.lambda.dim(), 3);
    }

    #[test]
    fn regular_corner_has_nonvanishing_tensor() {
        let r = a2_regular(&f3()).unwrap();
        assert!(!r.has("tensors-vanish"));
    }

    #[test]
    fn bad_nakayama_parameters_are_refused() {
        for p in [
            NakayamaParams {
                n: 3,
                h: 1,
                i: 1,
                j: 3,
            },
            NakayamaParams {
                n: 3,
                h: 4,
                i: 1,
                j: 3,
            },
            NakayamaParams {
                n: 3,
                h: 2,
                i: 2,
                j: 3,
            },
            NakayamaParams {
                n: 3,
                h: 2,
                i: 3,
                j: 1,
            },
        ] {
            assert!(nakayama_corner(&f3(), p).is_err(), "{p:?}");
        }
        let big = nakayama_corner(
            &f3(),
            NakayamaParams {
                n: 4,
                h: 2,
                i: 1,
                j: 4,
            },
        )
        .unwrap();
        assert_eq!(big.data.lambda.dim(), 8 + 8 + 4 + 4);
    }

    #[test]
    fn unknown_name() {
        assert!(catalog("nope", &f3(), NakayamaParams::default()).is_err());
    }
}
