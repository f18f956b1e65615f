//! Versioned JSON documents for algebras, modules, bimodules, Morita data,
//! Λ-modules and reports.
//!
//! Every document is an object with `"version"` and `"kind"`. Keys are
//! emitted sorted and pretty-printed, so emission is byte-stable. Entries of
//! `F_p` matrices are integers `0..p-1`; rational entries are `"num/den"`
//! strings. Matrices are arrays of rows and their shape is always implied by
//! the surrounding document.
//!
//! Wherever a document embeds another (`"algebra"`, `"morita"`, ...), it may
//! instead give a path, resolved relative to the file that contains it.
//!
//! Module actions are full matrices: one per vertex idempotent and one per
//! generator, keyed by name. Inside a Λ-module the components `X` and `Y`
//! must be in vertex-sorted form (diagonal 0/1 idempotents, vertices in
//! order), and `f: M⊗X -> Y`, `g: N⊗Y -> X` are full matrices over the
//! tensor bases produced by the core: pure tensors `m ⊗ x` in lexicographic
//! order, reduced to the pivot columns of the balancing relations, grouped by
//! vertex.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde_json::{json, Map, Value};

use morita_core::algebra::bimodule::tensor;
use morita_core::algebra::{Algebra, Bimodule, ModMap, Module, Quiver};
use morita_core::classes::{ClassKind, ClassSpec};
use morita_core::field::{rational_from_str, rational_to_string};
use morita_core::linalg::Matrix;
use morita_core::morita::{LambdaModule, MoritaData};
use morita_core::{Error, Field, Fp, Result, Q};

use crate::report::Report;

pub const FORMAT_VERSION: u64 = 1;

/// Kinds of document.
pub const KINDS: [&str; 7] = [
    "algebra",
    "module",
    "bimodule",
    "morita",
    "lambda_module",
    "class_spec",
    "report",
];

fn bad(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Matrix entries to and from JSON.
pub trait Codec: Field {
    fn encode(&self, e: &Self::Elem) -> Value;
    fn decode(&self, v: &Value) -> Result<Self::Elem>;
    fn tag(&self) -> Value;
}

impl Codec for Fp {
    fn encode(&self, e: &u64) -> Value {
        json!(*e)
    }

    fn decode(&self, v: &Value) -> Result<u64> {
        match v.as_u64() {
            Some(n) if n < self.p() => Ok(n),
            _ => Err(bad(format!(
                "expected an integer in 0..{}, got {v}",
                self.p()
            ))),
        }
    }

    fn tag(&self) -> Value {
        json!(self.p())
    }
}

impl Codec for Q {
    fn encode(&self, e: &Self::Elem) -> Value {
        json!(rational_to_string(e))
    }

    fn decode(&self, v: &Value) -> Result<Self::Elem> {
        match v.as_str() {
            Some(s) => rational_from_str(s),
            None => Err(bad(format!("expected a \"num/den\" string, got {v}"))),
        }
    }

    fn tag(&self) -> Value {
        json!("Q")
    }
}

/// The field a document lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldTag {
    Prime(u64),
    Rationals,
}

impl FieldTag {
    pub fn parse(s: &str) -> Result<Self> {
        if s == "Q" || s == "q" {
            return Ok(FieldTag::Rationals);
        }
        let p: u64 = s
            .parse()
            .map_err(|_| bad(format!("field must be a prime or Q, got {s:?}")))?;
        Fp::new(p)?;
        Ok(FieldTag::Prime(p))
    }

    fn from_value(v: &Value) -> Result<Self> {
        match v {
            Value::Number(n) => FieldTag::parse(&n.to_string()),
            Value::String(s) => FieldTag::parse(s),
            _ => Err(bad(format!("bad field {v}"))),
        }
    }
}

/// Canonical text of a value: sorted keys, two-space indent, final newline.
pub fn to_canonical(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

/// Resolves path references relative to a directory.
#[derive(Clone, Debug, Default)]
pub struct Loader {
    pub base: PathBuf,
}

impl Loader {
    pub fn for_file(path: &Path) -> Self {
        Loader {
            base: path.parent().map(Path::to_path_buf).unwrap_or_default(),
        }
    }

    pub fn read(path: &Path) -> Result<(Value, Loader)> {
        let text =
            std::fs::read_to_string(path).map_err(|e| bad(format!("{}: {e}", path.display())))?;
        let v: Value =
            serde_json::from_str(&text).map_err(|e| bad(format!("{}: {e}", path.display())))?;
        Ok((v, Loader::for_file(path)))
    }

    /// An embedded document, or the one a path points to.
    fn resolve<'a>(&self, v: &'a Value) -> Result<(std::borrow::Cow<'a, Value>, Loader)> {
        match v {
            Value::String(rel) => {
                let (doc, l) = Loader::read(&self.base.join(rel))?;
                Ok((std::borrow::Cow::Owned(doc), l))
            }
            Value::Object(_) => Ok((std::borrow::Cow::Borrowed(v), self.clone())),
            _ => Err(bad(format!("expected a document or a path, got {v}"))),
        }
    }
}

fn obj<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| bad(format!("{what} must be an object")))
}

fn get<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key)
        .ok_or_else(|| bad(format!("missing field {key:?}")))
}

fn get_usize(v: &Value, key: &str) -> Result<usize> {
    get(v, key)?
        .as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| bad(format!("{key:?} must be a non-negative integer")))
}

fn get_str<'a>(v: &'a Value, key: &str) -> Result<&'a str> {
    get(v, key)?
        .as_str()
        .ok_or_else(|| bad(format!("{key:?} must be a string")))
}

/// Checks `version` and `kind`.
pub fn check_header(v: &Value, kind: &str) -> Result<()> {
    obj(v, "document")?;
    let ver = get(v, "version")?
        .as_u64()
        .ok_or_else(|| bad("version must be an integer"))?;
    if ver != FORMAT_VERSION {
        return Err(bad(format!(
            "unsupported version {ver}, expected {FORMAT_VERSION}"
        )));
    }
    let k = get_str(v, "kind")?;
    if k != kind {
        return Err(bad(format!("expected a {kind} document, got {k}")));
    }
    Ok(())
}

pub fn kind_of(v: &Value) -> Result<&str> {
    let k = get_str(v, "kind")?;
    if KINDS.contains(&k) {
        Ok(k)
    } else {
        Err(bad(format!("unknown kind {k:?}")))
    }
}

fn header(kind: &str) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("version".into(), json!(FORMAT_VERSION));
    m.insert("kind".into(), json!(kind));
    m
}

/// Finds the field of a document, following embedded algebras.
pub fn field_of(v: &Value, loader: &Loader) -> Result<FieldTag> {
    if let Some(f) = v.get("field") {
        if v.get("kind").and_then(Value::as_str) != Some("report") {
            return FieldTag::from_value(f);
        }
    }
    for key in ["algebra", "left_algebra", "morita", "A"] {
        if let Some(sub) = v.get(key) {
            let (doc, l) = loader.resolve(sub)?;
            return field_of(&doc, &l);
        }
    }
    Err(bad("document names no field"))
}

pub fn encode_matrix<F: Codec>(m: &Matrix<F>) -> Value {
    let f = m.field();
    Value::Array(
        m.to_rows()
            .iter()
            .map(|r| Value::Array(r.iter().map(|e| f.encode(e)).collect()))
            .collect(),
    )
}

pub fn decode_matrix<F: Codec>(f: &F, v: &Value, rows: usize, cols: usize) -> Result<Matrix<F>> {
    let rs = v
        .as_array()
        .ok_or_else(|| bad("a matrix must be an array of rows"))?;
    if rs.len() != rows {
        return Err(bad(format!("expected {rows} rows, got {}", rs.len())));
    }
    let mut out = Vec::with_capacity(rows);
    for r in rs {
        let r = r
            .as_array()
            .ok_or_else(|| bad("a matrix row must be an array"))?;
        if r.len() != cols {
            return Err(bad(format!("expected {cols} columns, got {}", r.len())));
        }
        out.push(r.iter().map(|e| f.decode(e)).collect::<Result<Vec<_>>>()?);
    }
    if rows == 0 {
        return Ok(Matrix::zeros(f, 0, cols));
    }
    Matrix::from_rows(f, &out)
}

// ---- algebras

pub fn encode_algebra<F: Codec>(a: &Algebra<F>) -> Result<Value> {
    let mut m = header("algebra");
    m.insert("field".into(), a.field().tag());
    match &a.quiver {
        Some((q, rels)) => {
            let arrows: Vec<Value> = q
                .arrows
                .iter()
                .map(|ar| json!({"name": ar.name, "source": q.vertices[ar.src], "target": q.vertices[ar.tgt]}))
                .collect();
            m.insert(
                "quiver".into(),
                json!({"vertices": q.vertices, "arrows": arrows}),
            );
            m.insert("relations".into(), json!(rels));
        }
        None => {
            if a.num_vertices() != 1 {
                return Err(bad(
                    "only quiver algebras or one-vertex algebras can be written",
                ));
            }
            let n = a.dim();
            let consts: Vec<Value> = (0..n)
                .map(|i| {
                    Value::Array(
                        (0..n)
                            .map(|j| {
                                let mut row = vec![a.field().zero(); n];
                                for (k, c) in &a.mult[i][j] {
                                    row[*k] = c.clone();
                                }
                                Value::Array(row.iter().map(|e| a.field().encode(e)).collect())
                            })
                            .collect(),
                    )
                })
                .collect();
            let labels: Vec<&str> = a.basis.iter().map(|b| b.label.as_str()).collect();
            m.insert("basis".into(), json!(labels));
            m.insert("structure_constants".into(), Value::Array(consts));
            m.insert(
                "unit".into(),
                Value::Array(a.unit.iter().map(|e| a.field().encode(e)).collect()),
            );
        }
    }
    Ok(Value::Object(m))
}

pub fn decode_algebra<F: Codec>(f: &F, v: &Value, loader: &Loader) -> Result<Arc<Algebra<F>>> {
    let (v, _) = loader.resolve(v)?;
    let v = v.as_ref();
    check_header(v, "algebra")?;
    let tag = FieldTag::from_value(get(v, "field")?)?;
    if FieldTag::from_value(&f.tag())? != tag {
        return Err(bad(format!(
            "algebra is over {tag:?}, expected {}",
            f.name()
        )));
    }
    if let Some(q) = v.get("quiver") {
        let vertices: Vec<String> = get(q, "vertices")?
            .as_array()
            .ok_or_else(|| bad("vertices must be an array"))?
            .iter()
            .map(|x| {
                x.as_str()
                    .map(String::from)
                    .ok_or_else(|| bad("vertex names are strings"))
            })
            .collect::<Result<_>>()?;
        let idx = |name: &str| {
            vertices
                .iter()
                .position(|x| x == name)
                .ok_or_else(|| bad(format!("no vertex {name:?}")))
        };
        let mut arrows = Vec::new();
        for ar in get(q, "arrows")?
            .as_array()
            .ok_or_else(|| bad("arrows must be an array"))?
        {
            arrows.push((
                get_str(ar, "name")?.to_string(),
                idx(get_str(ar, "source")?)?,
                idx(get_str(ar, "target")?)?,
            ));
        }
        let rels: Vec<Vec<String>> =
            serde_json::from_value(v.get("relations").cloned().unwrap_or(json!([])))
                .map_err(|e| bad(format!("relations: {e}")))?;
        let quiver = Quiver::new(vertices, arrows)?;
        return Ok(Arc::new(Algebra::path_algebra(f, &quiver, &rels)?));
    }
    let labels: Vec<String> =
        serde_json::from_value(get(v, "basis")?.clone()).map_err(|e| bad(format!("basis: {e}")))?;
    let n = labels.len();
    let sc = get(v, "structure_constants")?
        .as_array()
        .ok_or_else(|| bad("structure_constants must be an array"))?;
    if sc.len() != n {
        return Err(bad("structure_constants must be n x n x n"));
    }
    let mut consts = Vec::with_capacity(n);
    for row in sc {
        let m = decode_matrix(f, row, n, n)?;
        consts.push(m.to_rows());
    }
    let unit = decode_matrix(f, &json!([get(v, "unit")?.clone()]), 1, n)?
        .to_rows()
        .remove(0);
    Ok(Arc::new(Algebra::from_structure_constants(
        f, labels, &consts, unit,
    )?))
}

// ---- modules

fn idempotent_matrix<F: Field>(m: &Module<F>, v: usize) -> Matrix<F> {
    match m.alg.idem_index(v) {
        Some(b) => m.full_action(b),
        None => Matrix::identity(m.field(), m.dim()),
    }
}

fn encode_action<F: Codec>(alg: &Algebra<F>, idems: &[Matrix<F>], gens: &[Matrix<F>]) -> Value {
    let mut i = Map::new();
    for (v, m) in alg.vertices.iter().zip(idems) {
        i.insert(v.clone(), encode_matrix(m));
    }
    let mut g = Map::new();
    for (gen, m) in alg.gens.iter().zip(gens) {
        g.insert(gen.label.clone(), encode_matrix(m));
    }
    json!({"idempotents": i, "generators": g})
}

fn decode_action<F: Codec>(
    f: &F,
    alg: &Algebra<F>,
    v: &Value,
    dim: usize,
) -> Result<(Vec<Matrix<F>>, Vec<Matrix<F>>)> {
    let i = obj(get(v, "idempotents")?, "idempotents")?;
    let g = obj(get(v, "generators")?, "generators")?;
    if i.len() != alg.num_vertices() || g.len() != alg.gens.len() {
        return Err(bad("need exactly one matrix per vertex and per generator"));
    }
    let idems = alg
        .vertices
        .iter()
        .map(|name| {
            decode_matrix(
                f,
                i.get(name)
                    .ok_or_else(|| bad(format!("no idempotent for vertex {name:?}")))?,
                dim,
                dim,
            )
        })
        .collect::<Result<_>>()?;
    let gens = alg
        .gens
        .iter()
        .map(|gen| {
            decode_matrix(
                f,
                g.get(&gen.label)
                    .ok_or_else(|| bad(format!("no matrix for generator {:?}", gen.label)))?,
                dim,
                dim,
            )
        })
        .collect::<Result<_>>()?;
    Ok((idems, gens))
}

/// `{dim, action}` without the algebra.
fn module_body<F: Codec>(m: &Module<F>) -> Value {
    let idems: Vec<Matrix<F>> = (0..m.alg.num_vertices())
        .map(|v| idempotent_matrix(m, v))
        .collect();
    let gens: Vec<Matrix<F>> = m.alg.gens.iter().map(|g| m.full_action(g.basis)).collect();
    json!({"dim": m.dim(), "action": encode_action(&m.alg, &idems, &gens)})
}

/// Module from a body; also returns whether the basis was vertex-sorted.
fn decode_module_body<F: Codec>(
    f: &F,
    alg: &Arc<Algebra<F>>,
    v: &Value,
) -> Result<(Module<F>, bool)> {
    let dim = get_usize(v, "dim")?;
    let (idems, gens) = decode_action(f, alg, get(v, "action")?, dim)?;
    let (m, change) = Module::from_full_matrices(alg.clone(), dim, &idems, &gens)?;
    Ok((m, change.is_identity() || dim == 0))
}

pub fn encode_module<F: Codec>(m: &Module<F>) -> Result<Value> {
    let mut out = header("module");
    out.insert("algebra".into(), encode_algebra(&m.alg)?);
    if let Value::Object(b) = module_body(m) {
        out.extend(b);
    }
    Ok(Value::Object(out))
}

pub fn decode_module<F: Codec>(f: &F, v: &Value, loader: &Loader) -> Result<Module<F>> {
    check_header(v, "module")?;
    let alg = decode_algebra(f, get(v, "algebra")?, loader)?;
    Ok(decode_module_body(f, &alg, v)?.0)
}

// ---- bimodules

fn bimodule_body<F: Codec>(b: &Bimodule<F>) -> Value {
    let (l, r) = (&b.left, &b.right);
    let dim: usize = b.dims.iter().flatten().sum();
    let li: Vec<Matrix<F>> = (0..l.num_vertices())
        .map(|v| {
            l.idem_index(v)
                .map(|i| b.full_left_action(i))
                .unwrap_or_else(|| Matrix::identity(l.field(), dim))
        })
        .collect();
    let lg: Vec<Matrix<F>> = l.gens.iter().map(|g| b.full_left_action(g.basis)).collect();
    let ri: Vec<Matrix<F>> = (0..r.num_vertices())
        .map(|v| {
            r.idem_index(v)
                .map(|i| b.full_right_action(i))
                .unwrap_or_else(|| Matrix::identity(l.field(), dim))
        })
        .collect();
    let rg: Vec<Matrix<F>> = r
        .gens
        .iter()
        .map(|g| b.full_right_action(g.basis))
        .collect();
    json!({"dim": dim, "left_action": encode_action(l, &li, &lg), "right_action": encode_action(r, &ri, &rg)})
}

fn decode_bimodule_body<F: Codec>(
    f: &F,
    left: &Arc<Algebra<F>>,
    right: &Arc<Algebra<F>>,
    v: &Value,
) -> Result<Bimodule<F>> {
    let dim = get_usize(v, "dim")?;
    let (li, lg) = decode_action(f, left, get(v, "left_action")?, dim)?;
    let (ri, rg) = decode_action(f, right, get(v, "right_action")?, dim)?;
    Bimodule::from_full_matrices(left.clone(), right.clone(), dim, &li, &lg, &ri, &rg)
}

pub fn encode_bimodule<F: Codec>(b: &Bimodule<F>) -> Result<Value> {
    let mut out = header("bimodule");
    out.insert("left_algebra".into(), encode_algebra(&b.left)?);
    out.insert("right_algebra".into(), encode_algebra(&b.right)?);
    if let Value::Object(m) = bimodule_body(b) {
        out.extend(m);
    }
    Ok(Value::Object(out))
}

pub fn decode_bimodule<F: Codec>(f: &F, v: &Value, loader: &Loader) -> Result<Bimodule<F>> {
    check_header(v, "bimodule")?;
    let left = decode_algebra(f, get(v, "left_algebra")?, loader)?;
    let right = decode_algebra(f, get(v, "right_algebra")?, loader)?;
    decode_bimodule_body(f, &left, &right, v)
}

// ---- Morita data

/// `M` is a B-A-bimodule and `N` an A-B-bimodule; inside a Morita document
/// they omit their algebras.
pub fn encode_morita<F: Codec>(d: &MoritaData<F>) -> Result<Value> {
    let mut out = header("morita");
    out.insert("A".into(), encode_algebra(&d.a)?);
    out.insert("B".into(), encode_algebra(&d.b)?);
    out.insert("M".into(), bimodule_body(&d.m));
    out.insert("N".into(), bimodule_body(&d.n));
    Ok(Value::Object(out))
}

pub fn decode_morita<F: Codec>(f: &F, v: &Value, loader: &Loader) -> Result<Arc<MoritaData<F>>> {
    let (v, loader) = loader.resolve(v)?;
    let v = v.as_ref();
    check_header(v, "morita")?;
    let a = decode_algebra(f, get(v, "A")?, &loader)?;
    let b = if get(v, "B")? == get(v, "A")? {
        a.clone()
    } else {
        decode_algebra(f, get(v, "B")?, &loader)?
    };
    let m = decode_bimodule_body(f, &b, &a, get(v, "M")?)?;
    let n = decode_bimodule_body(f, &a, &b, get(v, "N")?)?;
    let d = MoritaData::new(a, b, m, n)?;
    let val = d.validate();
    if !val.valid() {
        return Err(Error::Hypothesis(format!("invalid Morita data: {val:?}")));
    }
    Ok(Arc::new(d))
}

// ---- Λ-modules

fn full_of<F: Field>(m: &ModMap<F>, field: &F) -> Matrix<F> {
    let parts: Vec<&Matrix<F>> = m.blocks.iter().collect();
    Matrix::block_diag(field, &parts)
}

/// Splits a full matrix into vertex blocks; off-diagonal blocks must vanish.
fn blocks_of<F: Field>(
    full: &Matrix<F>,
    src: &[usize],
    tgt: &[usize],
    what: &str,
) -> Result<ModMap<F>> {
    let f = full.field().clone();
    let (so, to) = (prefix(src), prefix(tgt));
    let mut rebuilt = Matrix::zeros(&f, full.rows(), full.cols());
    let mut blocks = Vec::with_capacity(src.len());
    for v in 0..src.len() {
        let b = full.block(to[v], tgt[v], so[v], src[v]);
        rebuilt.set_block(to[v], so[v], &b);
        blocks.push(b);
    }
    if rebuilt != *full {
        return Err(bad(format!("{what} does not preserve vertices")));
    }
    Ok(ModMap { blocks })
}

fn prefix(dims: &[usize]) -> Vec<usize> {
    let mut o = Vec::with_capacity(dims.len());
    let mut s = 0;
    for d in dims {
        o.push(s);
        s += d;
    }
    o
}

pub fn encode_lambda<F: Codec>(l: &LambdaModule<F>) -> Result<Value> {
    let fld = l.field();
    let mut out = header("lambda_module");
    out.insert("morita".into(), encode_morita(&l.data)?);
    out.insert("X".into(), module_body(&l.x));
    out.insert("Y".into(), module_body(&l.y));
    out.insert("f".into(), encode_matrix(&full_of(&l.f, fld)));
    out.insert("g".into(), encode_matrix(&full_of(&l.g, fld)));
    Ok(Value::Object(out))
}

pub fn decode_lambda_with<F: Codec>(
    f: &F,
    d: &Arc<MoritaData<F>>,
    v: &Value,
) -> Result<LambdaModule<F>> {
    let (x, xs) = decode_module_body(f, &d.a, get(v, "X")?)?;
    let (y, ys) = decode_module_body(f, &d.b, get(v, "Y")?)?;
    if !xs || !ys {
        return Err(bad("X and Y must be given in vertex-sorted form"));
    }
    let mx = tensor(&d.m, &x).module;
    let ny = tensor(&d.n, &y).module;
    let fm = decode_matrix(f, get(v, "f")?, y.dim(), mx.dim())?;
    let gm = decode_matrix(f, get(v, "g")?, x.dim(), ny.dim())?;
    let fb = blocks_of(&fm, &mx.dims, &y.dims, "f")?;
    let gb = blocks_of(&gm, &ny.dims, &x.dims, "g")?;
    LambdaModule::new(d, x, y, fb, gb)
}

pub fn decode_lambda<F: Codec>(f: &F, v: &Value, loader: &Loader) -> Result<LambdaModule<F>> {
    check_header(v, "lambda_module")?;
    let d = decode_morita(f, get(v, "morita")?, loader)?;
    decode_lambda_with(f, &d, v)
}

// ---- class specifications

/// The four classes `𝒰, 𝒳` over A and `𝒱, 𝒴` over B used by Δ, ∇ and the
/// decompositions; `(𝒰, 𝒳)` and `(𝒱, 𝒴)` are meant as cotorsion pairs.
#[derive(Clone, Debug)]
pub struct ClassQuad<F: Field> {
    pub data: Arc<MoritaData<F>>,
    pub u: ClassSpec<F>,
    pub v: ClassSpec<F>,
    pub x: ClassSpec<F>,
    pub y: ClassSpec<F>,
}

impl<F: Field> ClassQuad<F> {
    /// `(𝒫, All)` on both sides.
    pub fn projective(d: &Arc<MoritaData<F>>) -> Self {
        ClassQuad {
            data: d.clone(),
            u: ClassSpec::projectives(&d.a),
            v: ClassSpec::projectives(&d.b),
            x: ClassSpec::all(&d.a),
            y: ClassSpec::all(&d.b),
        }
    }

    /// `(All, ℐ)` on both sides.
    pub fn injective(d: &Arc<MoritaData<F>>) -> Self {
        ClassQuad {
            data: d.clone(),
            u: ClassSpec::all(&d.a),
            v: ClassSpec::all(&d.b),
            x: ClassSpec::injectives(&d.a),
            y: ClassSpec::injectives(&d.b),
        }
    }
}

fn encode_class<F: Codec>(c: &ClassSpec<F>) -> Value {
    let listed = match &c.kind {
        ClassKind::FiniteList(v) | ClassKind::LeftPerp(v) | ClassKind::RightPerp(v) => v.as_slice(),
        _ => &[],
    };
    let mut m = Map::new();
    m.insert("class".into(), json!(c.name()));
    if matches!(
        c.kind,
        ClassKind::FiniteList(_) | ClassKind::LeftPerp(_) | ClassKind::RightPerp(_)
    ) {
        m.insert(
            "modules".into(),
            Value::Array(listed.iter().map(module_body).collect()),
        );
    }
    Value::Object(m)
}

fn decode_class<F: Codec>(f: &F, alg: &Arc<Algebra<F>>, v: &Value) -> Result<ClassSpec<F>> {
    let modules = || -> Result<Vec<Module<F>>> {
        get(v, "modules")?
            .as_array()
            .ok_or_else(|| bad("modules must be an array"))?
            .iter()
            .map(|m| Ok(decode_module_body(f, alg, m)?.0))
            .collect()
    };
    let kind = match get_str(v, "class")? {
        "proj" => ClassKind::Projectives,
        "inj" => ClassKind::Injectives,
        "all" => ClassKind::All,
        "list" => ClassKind::FiniteList(modules()?),
        "left-perp" => ClassKind::LeftPerp(modules()?),
        "right-perp" => ClassKind::RightPerp(modules()?),
        other => return Err(bad(format!("unknown class {other:?}"))),
    };
    ClassSpec::new(alg, kind)
}

pub fn encode_class_quad<F: Codec>(q: &ClassQuad<F>) -> Result<Value> {
    let mut out = header("class_spec");
    out.insert("morita".into(), encode_morita(&q.data)?);
    for (key, c) in [("U", &q.u), ("V", &q.v), ("X", &q.x), ("Y", &q.y)] {
        out.insert(key.into(), encode_class(c));
    }
    Ok(Value::Object(out))
}

pub fn decode_class_quad<F: Codec>(f: &F, v: &Value, loader: &Loader) -> Result<ClassQuad<F>> {
    check_header(v, "class_spec")?;
    let d = decode_morita(f, get(v, "morita")?, loader)?;
    Ok(ClassQuad {
        u: decode_class(f, &d.a, get(v, "U")?)?,
        v: decode_class(f, &d.b, get(v, "V")?)?,
        x: decode_class(f, &d.a, get(v, "X")?)?,
        y: decode_class(f, &d.b, get(v, "Y")?)?,
        data: d,
    })
}

// ---- reports

pub fn encode_report(r: &Report) -> Value {
    let mut v: Value = serde_json::from_str(&r.to_json()).expect("reports serialize");
    if let Value::Object(m) = &mut v {
        m.insert("kind".into(), json!("report"));
        m.insert("version".into(), json!(FORMAT_VERSION));
    }
    v
}

pub fn decode_report(v: &Value) -> Result<Report> {
    check_header(v, "report")?;
    let mut v = v.clone();
    if let Value::Object(m) = &mut v {
        m.remove("kind");
    }
    Report::from_json(&v.to_string()).map_err(|e| bad(format!("report: {e}")))
}

/// A parsed document of any kind.
#[derive(Debug)]
pub enum Document<F: Field> {
    Algebra(Arc<Algebra<F>>),
    Module(Module<F>),
    Bimodule(Bimodule<F>),
    Morita(Arc<MoritaData<F>>),
    Lambda(LambdaModule<F>),
    Classes(Box<ClassQuad<F>>),
    Report(Box<Report>),
}

impl<F: Codec> Document<F> {
    pub fn decode(f: &F, v: &Value, loader: &Loader) -> Result<Self> {
        Ok(match kind_of(v)? {
            "algebra" => Document::Algebra(decode_algebra(f, v, loader)?),
            "module" => Document::Module(decode_module(f, v, loader)?),
            "bimodule" => Document::Bimodule(decode_bimodule(f, v, loader)?),
            "morita" => Document::Morita(decode_morita(f, v, loader)?),
            "lambda_module" => Document::Lambda(decode_lambda(f, v, loader)?),
            "class_spec" => Document::Classes(Box::new(decode_class_quad(f, v, loader)?)),
            _ => Document::Report(Box::new(decode_report(v)?)),
        })
    }

    pub fn encode(&self) -> Result<Value> {
        match self {
            Document::Algebra(a) => encode_algebra(a),
            Document::Module(m) => encode_module(m),
            Document::Bimodule(b) => encode_bimodule(b),
            Document::Morita(d) => encode_morita(d),
            Document::Lambda(l) => encode_lambda(l),
            Document::Classes(q) => encode_class_quad(q),
            Document::Report(r) => Ok(encode_report(r)),
        }
    }

    pub fn summary(&self) -> String {
        match self {
            Document::Algebra(a) => format!(
                "algebra of dimension {} with {} vertices",
                a.dim(),
                a.num_vertices()
            ),
            Document::Module(m) => format!("module of dimension {} (dims {:?})", m.dim(), m.dims),
            Document::Bimodule(b) => format!(
                "bimodule of dimension {}",
                b.dims.iter().flatten().sum::<usize>()
            ),
            Document::Morita(d) => format!("Morita ring of dimension {}", d.lambda.dim()),
            Document::Lambda(l) => format!("Λ-module (X {:?}; Y {:?})", l.x.dims, l.y.dims),
            Document::Classes(q) => {
                format!(
                    "classes U {}, V {}, X {}, Y {}",
                    q.u.name(),
                    q.v.name(),
                    q.x.name(),
                    q.y.name()
                )
            }
            Document::Report(r) => format!(
                "report of {} on {}: {} claims",
                r.suite,
                r.instance,
                r.claims.len()
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog, NakayamaParams, NAMES};
    use crate::sample::{SampleConfig, Sampler};
    use morita_core::algebra::module::projectives;

    fn round_trip<F: Codec>(f: &F, v: &Value) -> Value {
        let text = to_canonical(v);
        let parsed: Value = serde_json::from_str(&text).unwrap();
        let doc = Document::decode(f, &parsed, &Loader::default()).unwrap();
        let again = doc.encode().unwrap();
        assert_eq!(to_canonical(&again), text);
        again
    }

    #[test]
    fn every_catalog_instance_round_trips() {
        let f = Fp::new(3).unwrap();
        for name in NAMES {
            let inst = catalog(name, &f, NakayamaParams::default()).unwrap();
            let v = encode_morita(&inst.data).unwrap();
            round_trip(&f, &v);
            let d = decode_morita(&f, &v, &Loader::default()).unwrap();
            assert!(
                d.a.same_as(&inst.data.a) && d.m == inst.data.m && d.n == inst.data.n,
                "{name}"
            );
        }
    }

    #[test]
    fn sampled_lambda_modules_round_trip() {
        let f = Fp::new(3).unwrap();
        for name in ["a2-corner", "nakayama-corner", "triangular"] {
            let inst = catalog(name, &f, NakayamaParams::default()).unwrap();
            let mut s = Sampler::new(SampleConfig::default()).fork(name);
            for _ in 0..10 {
                let l = s.lambda_module(&inst.data);
                let v = encode_lambda(&l).unwrap();
                round_trip(&f, &v);
                let back = decode_lambda(&f, &v, &Loader::default()).unwrap();
                assert_eq!(back, l);
            }
        }
    }

    #[test]
    fn modules_and_bimodules_round_trip() {
        let f = Fp::new(5).unwrap();
        let inst = catalog("a2-corner", &f, NakayamaParams::default()).unwrap();
        for p in projectives(&inst.data.a) {
            let v = encode_module(&p).unwrap();
            round_trip(&f, &v);
            assert_eq!(decode_module(&f, &v, &Loader::default()).unwrap(), p);
        }
        let v = encode_bimodule(&inst.data.m).unwrap();
        round_trip(&f, &v);
        assert_eq!(
            decode_bimodule(&f, &v, &Loader::default()).unwrap(),
            inst.data.m
        );
    }

    #[test]
    fn rational_entries_are_strings() {
        let inst = catalog("a2-corner", &Q, NakayamaParams::default()).unwrap();
        let mut s = Sampler::new(SampleConfig::default());
        let l = s.lambda_module(&inst.data);
        let v = encode_lambda(&l).unwrap();
        assert_eq!(
            decode_lambda(&Q, &round_trip(&Q, &v), &Loader::default()).unwrap(),
            l
        );
        let e = Q.encode(&rational_from_str("-3/6").unwrap());
        assert_eq!(e, json!("-1/2"));
    }

    #[test]
    fn structure_constant_algebras_round_trip() {
        let f = Fp::new(2).unwrap();
        // k[x]/(x^2)
        let z = vec![vec![0u64; 2]; 2];
        let consts = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], z[0].clone()]];
        let a = Algebra::from_structure_constants(
            &f,
            vec!["1".into(), "x".into()],
            &consts,
            vec![1, 0],
        )
        .unwrap();
        let v = encode_algebra(&a).unwrap();
        round_trip(&f, &v);
        assert!(decode_algebra(&f, &v, &Loader::default())
            .unwrap()
            .same_as(&a));
    }

    #[test]
    fn references_resolve_relative_to_the_file() {
        let dir = std::env::temp_dir().join(format!("morita-format-{}", std::process::id()));
        std::fs::create_dir_all(dir.join("sub")).unwrap();
        let f = Fp::new(3).unwrap();
        let inst = catalog("a2-corner", &f, NakayamaParams::default()).unwrap();
        std::fs::write(
            dir.join("sub/ring.json"),
            to_canonical(&encode_morita(&inst.data).unwrap()),
        )
        .unwrap();
        let l = Sampler::new(SampleConfig::default()).lambda_module(&inst.data);
        let mut v = encode_lambda(&l).unwrap();
        v["morita"] = json!("sub/ring.json");
        std::fs::write(dir.join("l.json"), to_canonical(&v)).unwrap();
        let (doc, loader) = Loader::read(&dir.join("l.json")).unwrap();
        assert_eq!(field_of(&doc, &loader).unwrap(), FieldTag::Prime(3));
        assert_eq!(decode_lambda(&f, &doc, &loader).unwrap(), l);
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn class_specs_round_trip() {
        let f = Fp::new(3).unwrap();
        let inst = catalog("a2-corner", &f, NakayamaParams::default()).unwrap();
        let d = &inst.data;
        let mut q = ClassQuad::projective(d);
        q.v = ClassSpec::new(&d.b, ClassKind::FiniteList(projectives(&d.b))).unwrap();
        q.x = ClassSpec::new(&d.a, ClassKind::RightPerp(vec![])).unwrap();
        let v = encode_class_quad(&q).unwrap();
        round_trip(&f, &v);
        let back = decode_class_quad(&f, &v, &Loader::default()).unwrap();
        assert_eq!(back.v.name(), "list");
        assert_eq!(back.x.witnesses().len(), q.x.witnesses().len());
        let mut v = v;
        v["U"] = json!({"class": "gp"});
        assert!(decode_class_quad(&f, &v, &Loader::default()).is_err());
    }

    #[test]
    fn schema_violations_are_rejected() {
        let f = Fp::new(3).unwrap();
        let inst = catalog("a2", &f, NakayamaParams::default()).unwrap();
        let good = encode_morita(&inst.data).unwrap();
        let mut v = good.clone();
        v.as_object_mut().unwrap().remove("version");
        assert!(decode_morita(&f, &v, &Loader::default()).is_err());
        let mut v = good.clone();
        v["version"] = json!(2);
        assert!(decode_morita(&f, &v, &Loader::default()).is_err());
        let mut v = good.clone();
        v["M"]["dim"] = json!(5);
        assert!(decode_morita(&f, &v, &Loader::default()).is_err());
        let mut v = good;
        v["A"]["field"] = json!(4);
        assert!(field_of(&v, &Loader::default()).is_err());
        assert!(Fp::new(3).unwrap().decode(&json!(3)).is_err());
    }
}
