//! Command-line interface: argument parsing and the commands themselves.
//!
//! Exit codes: 0 when every check passes, 1 when one fails, 2 for malformed
//! input or failed preconditions, 3 for internal errors.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use morita_core::algebra::bimodule::tensor;
use morita_core::algebra::Module;
use morita_core::classes::{
    delta_decompose, in_delta, in_epi, in_mon, in_nabla, nabla_decompose, GorensteinCert,
};
use morita_core::homology::{
    coresolution_ij, ext, is_injective, is_projective, lambda_is_injective, lambda_is_projective,
    quadruple_presentation, resolution_pq, syzygy, tor1, LambdaSequence,
};
use morita_core::morita::{c, h_a, h_b, k, t_a, t_b, u, z_a, z_b, LambdaModule, MoritaData, Side};
use morita_core::{Error, Fp, Q};

use crate::catalog::{catalog, CatalogInstance, NakayamaParams, NAMES};
use crate::enumerate::{enumerate_modules, enumerate_small};
use crate::format::{self, to_canonical, ClassQuad, Codec, Document, FieldTag, Loader};
use crate::sample::{SampleConfig, Sampler, DEFAULT_SEED};
use crate::suites::{run_suite, run_suite_on, standard_approximation, Universe, SUITES};

#[derive(Parser, Debug)]
#[command(
    name = "morita-lab",
    version,
    about = "Modules over Morita rings of finite-dimensional algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse a document and check it; reports whether it is in canonical form.
    Validate { file: PathBuf },
    /// Write a catalog Morita ring.
    Catalog {
        name: String,
        #[command(flatten)]
        params: InstanceParams,
        #[arg(long)]
        field: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply T, U, H, C, K or Z on either side.
    Functor {
        #[arg(value_enum)]
        name: FunctorName,
        /// A module (for T, H, Z) or a Λ-module (for U, C, K).
        #[arg(long = "in")]
        input: PathBuf,
        /// The Morita ring, needed for T, H and Z.
        #[arg(long)]
        morita: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dimension of Ext^d between two modules or two Λ-modules.
    Ext {
        #[arg(long)]
        src: PathBuf,
        #[arg(long)]
        tgt: PathBuf,
        #[arg(long, default_value_t = 1)]
        degree: usize,
    },
    /// Dimension of Tor_d(M, X) for a bimodule M and a module X.
    Tor {
        #[arg(long)]
        bimodule: PathBuf,
        #[arg(long)]
        module: PathBuf,
        #[arg(long, default_value_t = 1)]
        degree: usize,
    },
    /// Decide membership of a Λ-module (or a module, for proj and inj).
    Classify {
        #[arg(long)]
        module: PathBuf,
        #[arg(long, value_enum)]
        class: ClassName,
        /// Class specification for delta and nabla.
        #[arg(long)]
        spec: Option<PathBuf>,
    },
    /// Build a resolution, presentation or approximation sequence.
    Resolve {
        #[arg(long)]
        module: PathBuf,
        #[arg(long, value_enum)]
        kind: ResolveKind,
        /// Directory for left.json, mid.json and right.json.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Split a Λ-module as T_A U ⊕ T_B V (delta) or H_A X ⊕ H_B Y (nabla).
    Decompose {
        #[arg(long)]
        module: PathBuf,
        #[arg(long, value_enum)]
        kind: DecomposeKind,
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Draw random modules.
    Sample {
        #[command(flatten)]
        inst: InstanceArgs,
        #[arg(long, value_enum, default_value = "lambda")]
        side: SideName,
        #[command(flatten)]
        cfg: CfgArgs,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// List every module up to isomorphism over a finite field.
    Enumerate {
        #[command(flatten)]
        inst: InstanceArgs,
        #[arg(long, value_enum, default_value = "lambda")]
        side: SideName,
        #[arg(long, default_value_t = 2)]
        max_dim: usize,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Run a verification suite and write its report.
    Verify {
        suite: String,
        #[command(flatten)]
        inst: InstanceArgs,
        #[command(flatten)]
        cfg: CfgArgs,
        /// Check every claim on all modules up to this total dimension
        /// instead of sampling.
        #[arg(long)]
        universe: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(clap::Args, Debug, Clone)]
pub struct InstanceArgs {
    #[arg(long)]
    pub instance: String,
    #[arg(long)]
    pub field: String,
    #[command(flatten)]
    pub params: InstanceParams,
}

/// Parameters of the Nakayama instance.
#[derive(clap::Args, Debug, Clone)]
pub struct InstanceParams {
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    #[arg(long, default_value_t = 2)]
    pub h: usize,
    #[arg(long, default_value_t = 1)]
    pub i: usize,
    #[arg(long, default_value_t = 3)]
    pub j: usize,
}

impl InstanceParams {
    fn nakayama(&self) -> NakayamaParams {
        NakayamaParams {
            n: self.n,
            h: self.h,
            i: self.i,
            j: self.j,
        }
    }
}

#[derive(clap::Args, Debug, Clone)]
pub struct CfgArgs {
    #[arg(long, default_value_t = DEFAULT_SEED, value_parser = parse_seed)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    #[arg(long, default_value_t = 12)]
    pub dim_cap: usize,
    #[arg(long, default_value_t = 4)]
    pub rank_cap: usize,
}

impl CfgArgs {
    fn cfg(&self) -> SampleConfig {
        SampleConfig {
            seed: self.seed,
            count: self.count,
            dim_cap: self.dim_cap,
            rank_cap: self.rank_cap,
        }
    }
}

fn parse_seed(s: &str) -> std::result::Result<u64, String> {
    match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(h) => u64::from_str_radix(&h.replace('_', ""), 16).map_err(|e| e.to_string()),
        None => s
            .parse()
            .map_err(|e: std::num::ParseIntError| e.to_string()),
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
#[value(rename_all = "verbatim")]
pub enum FunctorName {
    TA,
    TB,
    UA,
    UB,
    HA,
    HB,
    CA,
    CB,
    KA,
    KB,
    ZA,
    ZB,
}

impl FunctorName {
    fn side(self) -> Side {
        use FunctorName::*;
        match self {
            TA | UA | HA | CA | KA | ZA => Side::A,
            _ => Side::B,
        }
    }

    fn takes_lambda(self) -> bool {
        use FunctorName::*;
        matches!(self, UA | UB | CA | CB | KA | KB)
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassName {
    Mon,
    Epi,
    Delta,
    Nabla,
    Proj,
    Inj,
    Gp,
    Gi,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResolveKind {
    Pq,
    Ij,
    Present,
    #[value(name = "approx-c1")]
    ApproxC1,
    #[value(name = "approx-c2")]
    ApproxC2,
    #[value(name = "approx-c3")]
    ApproxC3,
    #[value(name = "approx-c4")]
    ApproxC4,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecomposeKind {
    Delta,
    Nabla,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SideName {
    Lambda,
    A,
    B,
}

/// How a command ended, other than by success.
#[derive(Debug)]
pub enum Failure {
    /// Checks ran and at least one failed.
    Fail(String),
    /// Malformed input or failed preconditions.
    Input(String),
    Internal(String),
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Fail(_) => 1,
            Failure::Input(_) => 2,
            Failure::Internal(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Fail(m) | Failure::Input(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Cap(_) | Error::NoLift(_) => Failure::Internal(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<String, Failure>;

fn input(msg: impl Into<String>) -> Failure {
    Failure::Input(msg.into())
}

macro_rules! with_field {
    ($tag:expr, $f:ident => $body:expr) => {
        match $tag {
            FieldTag::Prime(p) => {
                let $f = &Fp::new(p)?;
                $body
            }
            FieldTag::Rationals => {
                let $f = &Q;
                $body
            }
        }
    };
}

/// Size of the worker pool from `MORITA_LAB_THREADS`, if set.
pub fn thread_cap() -> std::result::Result<Option<usize>, Failure> {
    match std::env::var("MORITA_LAB_THREADS") {
        Err(_) => Ok(None),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(input(format!(
                "MORITA_LAB_THREADS must be a positive integer, got {s:?}"
            ))),
        },
    }
}

/// Runs a command and returns what it prints.
pub fn execute(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Validate { file } => validate(file),
        Command::Catalog {
            name,
            params,
            field,
            out,
        } => {
            with_field!(FieldTag::parse(field)?, f => {
                let inst = catalog(name, f, params.nakayama())?;
                emit(&format::encode_morita(&inst.data)?, out.as_deref())
            })
        }
        Command::Functor {
            name,
            input: path,
            morita,
            out,
        } => {
            let (v, l) = Loader::read(path)?;
            with_field!(format::field_of(&v, &l)?, f => functor(f, *name, &v, &l, morita.as_deref(), out.as_deref()))
        }
        Command::Ext { src, tgt, degree } => {
            let (v, l) = Loader::read(src)?;
            with_field!(format::field_of(&v, &l)?, f => ext_cmd(f, (&v, &l), tgt, *degree))
        }
        Command::Tor {
            bimodule,
            module,
            degree,
        } => {
            let (v, l) = Loader::read(bimodule)?;
            with_field!(format::field_of(&v, &l)?, f => tor_cmd(f, (&v, &l), module, *degree))
        }
        Command::Classify {
            module,
            class,
            spec,
        } => {
            let (v, l) = Loader::read(module)?;
            with_field!(format::field_of(&v, &l)?, f => classify(f, (&v, &l), *class, spec.as_deref()))
        }
        Command::Resolve {
            module,
            kind,
            out_dir,
        } => {
            let (v, l) = Loader::read(module)?;
            with_field!(format::field_of(&v, &l)?, f => resolve(f, (&v, &l), *kind, out_dir.as_deref()))
        }
        Command::Decompose {
            module,
            kind,
            spec,
            out_dir,
        } => {
            let (v, l) = Loader::read(module)?;
            with_field!(format::field_of(&v, &l)?, f => decompose(f, (&v, &l), *kind, spec.as_deref(), out_dir.as_deref()))
        }
        Command::Sample {
            inst,
            side,
            cfg,
            out_dir,
        } => {
            with_field!(FieldTag::parse(&inst.field)?, f => sample(&instance(f, inst)?, *side, cfg.cfg(), out_dir.as_deref()))
        }
        Command::Enumerate {
            inst,
            side,
            max_dim,
            out_dir,
        } => {
            with_field!(FieldTag::parse(&inst.field)?, f => enumerate(&instance(f, inst)?, *side, *max_dim, out_dir.as_deref()))
        }
        Command::Verify {
            suite,
            inst,
            cfg,
            universe,
            out,
        } => {
            with_field!(FieldTag::parse(&inst.field)?, f => verify(suite, &instance(f, inst)?, cfg.cfg(), *universe, out.as_deref()))
        }
    }
}

fn instance<F: Codec>(f: &F, a: &InstanceArgs) -> std::result::Result<CatalogInstance<F>, Failure> {
    if !NAMES.contains(&a.instance.as_str()) {
        return Err(input(format!(
            "unknown instance {:?}; known: {}",
            a.instance,
            NAMES.join(", ")
        )));
    }
    Ok(catalog(&a.instance, f, a.params.nakayama())?)
}

/// Writes a document to a file, or returns it for printing.
fn emit(v: &Value, out: Option<&Path>) -> Outcome {
    let text = to_canonical(v);
    match out {
        Some(p) if p != Path::new("-") => {
            std::fs::write(p, &text)
                .map_err(|e| Failure::Internal(format!("{}: {e}", p.display())))?;
            Ok(format!("wrote {}\n", p.display()))
        }
        _ => Ok(text),
    }
}

fn write_dir(dir: &Path, docs: &[(String, Value)]) -> std::result::Result<(), Failure> {
    std::fs::create_dir_all(dir)
        .map_err(|e| Failure::Internal(format!("{}: {e}", dir.display())))?;
    for (name, v) in docs {
        let p = dir.join(name);
        std::fs::write(&p, to_canonical(v))
            .map_err(|e| Failure::Internal(format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

fn validate(path: &Path) -> Outcome {
    let text =
        std::fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
    let v: Value =
        serde_json::from_str(&text).map_err(|e| input(format!("{}: {e}", path.display())))?;
    let loader = Loader::for_file(path);
    let kind = format::kind_of(&v)?.to_string();
    let (summary, again) = if kind == "report" {
        let r = format::decode_report(&v)?;
        (
            format!(
                "report of {} on {}: {} claims",
                r.suite,
                r.instance,
                r.claims.len()
            ),
            format::encode_report(&r),
        )
    } else {
        with_field!(format::field_of(&v, &loader)?, f => {
            let doc = Document::decode(f, &v, &loader)?;
            (doc.summary(), doc.encode()?)
        })
    };
    let canonical = if to_canonical(&again) == text {
        "canonical"
    } else {
        "valid, not in canonical form"
    };
    Ok(format!(
        "{}: {kind}: {summary} ({canonical})\n",
        path.display()
    ))
}

enum Either<F: morita_core::Field> {
    Plain(Module<F>),
    Lambda(LambdaModule<F>),
}

fn load_any<F: Codec>(f: &F, (v, l): (&Value, &Loader)) -> std::result::Result<Either<F>, Failure> {
    match format::kind_of(v)? {
        "module" => Ok(Either::Plain(format::decode_module(f, v, l)?)),
        "lambda_module" => Ok(Either::Lambda(format::decode_lambda(f, v, l)?)),
        k => Err(input(format!(
            "expected a module or Λ-module, got a {k} document"
        ))),
    }
}

fn load_lambda<F: Codec>(
    f: &F,
    doc: (&Value, &Loader),
) -> std::result::Result<LambdaModule<F>, Failure> {
    match load_any(f, doc)? {
        Either::Lambda(l) => Ok(l),
        Either::Plain(_) => Err(input("expected a Λ-module")),
    }
}

fn load_path<F: Codec>(f: &F, path: &Path) -> std::result::Result<Either<F>, Failure> {
    let (v, l) = Loader::read(path)?;
    if format::field_of(&v, &l)? != format::field_of(&json_field(f), &Loader::default())? {
        return Err(input(format!(
            "{} lives over another field",
            path.display()
        )));
    }
    load_any(f, (&v, &l))
}

fn json_field<F: Codec>(f: &F) -> Value {
    serde_json::json!({ "field": f.tag() })
}

fn functor<F: Codec>(
    f: &F,
    name: FunctorName,
    v: &Value,
    l: &Loader,
    morita: Option<&Path>,
    out: Option<&Path>,
) -> Outcome {
    let side = name.side();
    if name.takes_lambda() {
        let lm = load_lambda(f, (v, l))?;
        let m = match name {
            FunctorName::UA | FunctorName::UB => u(&lm, side),
            FunctorName::CA | FunctorName::CB => c(&lm, side).0,
            _ => k(&lm, side).0,
        };
        return emit(&format::encode_module(&m)?, out);
    }
    let mp = morita.ok_or_else(|| input(format!("{name:?} needs --morita")))?;
    let (mv, ml) = Loader::read(mp)?;
    let d: Arc<MoritaData<F>> = format::decode_morita(f, &mv, &ml)?;
    let x = match load_any(f, (v, l))? {
        Either::Plain(x) => x,
        Either::Lambda(_) => return Err(input(format!("{name:?} takes a module, not a Λ-module"))),
    };
    let want = if side == Side::A { &d.a } else { &d.b };
    if !x.alg.same_as(want) {
        return Err(input(format!(
            "{name:?} needs a module over {}",
            if side == Side::A { "A" } else { "B" }
        )));
    }
    let lm = match name {
        FunctorName::TA => t_a(&d, &x),
        FunctorName::TB => t_b(&d, &x),
        FunctorName::HA => h_a(&d, &x),
        FunctorName::HB => h_b(&d, &x),
        FunctorName::ZA => z_a(&d, &x),
        _ => z_b(&d, &x),
    };
    emit(&format::encode_lambda(&lm)?, out)
}

fn ext_cmd<F: Codec>(f: &F, src: (&Value, &Loader), tgt: &Path, degree: usize) -> Outcome {
    let (x, y) = match (load_any(f, src)?, load_path(f, tgt)?) {
        (Either::Plain(x), Either::Plain(y)) => (x, y),
        (Either::Lambda(x), Either::Lambda(y)) => {
            if !x.data.a.same_as(&y.data.a)
                || !x.data.b.same_as(&y.data.b)
                || x.data.m != y.data.m
                || x.data.n != y.data.n
            {
                return Err(input("the Λ-modules live over different Morita rings"));
            }
            (x.flatten(), y.flatten())
        }
        _ => {
            return Err(input(
                "src and tgt must both be modules or both be Λ-modules",
            ))
        }
    };
    if !x.alg.same_as(&y.alg) {
        return Err(input("src and tgt live over different algebras"));
    }
    Ok(format!("{}\n", ext(&x, &y, degree).dim))
}

fn tor_cmd<F: Codec>(f: &F, bim: (&Value, &Loader), module: &Path, degree: usize) -> Outcome {
    format::check_header(bim.0, "bimodule")?;
    let m = format::decode_bimodule(f, bim.0, bim.1)?;
    let x = match load_path(f, module)? {
        Either::Plain(x) => x,
        Either::Lambda(_) => return Err(input("tor takes a module")),
    };
    if !x.alg.same_as(&m.right) {
        return Err(input(
            "the module must live over the right algebra of the bimodule",
        ));
    }
    let n = match degree {
        0 => tensor(&m, &x).module.dim(),
        d => tor1(&m, &syzygy(&x, d - 1)),
    };
    Ok(format!("{n}\n"))
}

fn load_spec<F: Codec>(
    f: &F,
    spec: Option<&Path>,
    d: &Arc<MoritaData<F>>,
    nabla: bool,
) -> std::result::Result<ClassQuad<F>, Failure> {
    let Some(p) = spec else {
        return Ok(if nabla {
            ClassQuad::injective(d)
        } else {
            ClassQuad::projective(d)
        });
    };
    let (v, l) = Loader::read(p)?;
    let q = format::decode_class_quad(f, &v, &l)?;
    if !q.data.a.same_as(&d.a) || !q.data.b.same_as(&d.b) || q.data.m != d.m || q.data.n != d.n {
        return Err(input("the class specification is over another Morita ring"));
    }
    Ok(q)
}

fn classify<F: Codec>(
    f: &F,
    doc: (&Value, &Loader),
    class: ClassName,
    spec: Option<&Path>,
) -> Outcome {
    let l = match (load_any(f, doc)?, class) {
        (Either::Plain(x), ClassName::Proj) => return Ok(format!("{}\n", is_projective(&x))),
        (Either::Plain(x), ClassName::Inj) => return Ok(format!("{}\n", is_injective(&x))),
        (Either::Plain(_), _) => return Err(input(format!("{class:?} applies to Λ-modules"))),
        (Either::Lambda(l), _) => l,
    };
    let d = l.data.clone();
    let verdict = match class {
        ClassName::Mon => in_mon(&l),
        ClassName::Epi => in_epi(&l),
        ClassName::Proj => lambda_is_projective(&l),
        ClassName::Inj => lambda_is_injective(&l),
        ClassName::Delta => {
            let q = load_spec(f, spec, &d, false)?;
            in_delta(&l, &q.u, &q.v)?
        }
        ClassName::Nabla => {
            let q = load_spec(f, spec, &d, true)?;
            in_nabla(&l, &q.x, &q.y)?
        }
        ClassName::Gp => GorensteinCert::certify(&d)?.gp_member(&l),
        ClassName::Gi => GorensteinCert::certify(&d)?.gi_member(&l),
    };
    Ok(format!("{verdict}\n"))
}

fn dims<F: morita_core::Field>(l: &LambdaModule<F>) -> String {
    format!("(X {:?}; Y {:?})", l.x.dims, l.y.dims)
}

fn resolve<F: Codec>(
    f: &F,
    doc: (&Value, &Loader),
    kind: ResolveKind,
    out_dir: Option<&Path>,
) -> Outcome {
    let l = load_lambda(f, doc)?;
    let s: LambdaSequence<F> = match kind {
        ResolveKind::Pq => resolution_pq(&l)?,
        ResolveKind::Ij => coresolution_ij(&l)?,
        ResolveKind::Present => quadruple_presentation(&l),
        ResolveKind::ApproxC1 => standard_approximation(&l, 1)?.seq,
        ResolveKind::ApproxC2 => standard_approximation(&l, 2)?.seq,
        ResolveKind::ApproxC3 => standard_approximation(&l, 3)?.seq,
        ResolveKind::ApproxC4 => standard_approximation(&l, 4)?.seq,
    };
    let mut text = String::new();
    let _ = writeln!(
        text,
        "0 -> {} -> {} -> {} -> 0",
        dims(&s.left),
        dims(&s.mid),
        dims(&s.right)
    );
    let _ = writeln!(text, "exact: {}", s.is_exact());
    if let Some(dir) = out_dir {
        write_dir(
            dir,
            &[
                ("left.json".into(), format::encode_lambda(&s.left)?),
                ("mid.json".into(), format::encode_lambda(&s.mid)?),
                ("right.json".into(), format::encode_lambda(&s.right)?),
            ],
        )?;
    }
    if s.is_exact() {
        Ok(text)
    } else {
        Err(Failure::Fail(text))
    }
}

fn decompose<F: Codec>(
    f: &F,
    doc: (&Value, &Loader),
    kind: DecomposeKind,
    spec: Option<&Path>,
    out_dir: Option<&Path>,
) -> Outcome {
    let l = load_lambda(f, doc)?;
    let q = load_spec(f, spec, &l.data, kind == DecomposeKind::Nabla)?;
    let found = match kind {
        DecomposeKind::Delta => delta_decompose(&l, &q.u, &q.v, &q.x, &q.y)?,
        DecomposeKind::Nabla => nabla_decompose(&l, &q.u, &q.v, &q.x, &q.y)?,
    };
    let (t, what) = match kind {
        DecomposeKind::Delta => ("T", "Δ"),
        DecomposeKind::Nabla => ("H", "∇"),
    };
    let Some(dc) = found else {
        return Err(Failure::Fail(format!(
            "{} does not split as a {what}-sum\n",
            dims(&l)
        )));
    };
    if !dc.verify(&l) {
        return Err(Failure::Internal(
            "decomposition maps are not mutually inverse".into(),
        ));
    }
    if let Some(dir) = out_dir {
        write_dir(
            dir,
            &[
                ("first.json".into(), format::encode_module(&dc.first)?),
                ("second.json".into(), format::encode_module(&dc.second)?),
            ],
        )?;
    }
    Ok(format!(
        "{} ≅ {t}_A(dims {:?}) ⊕ {t}_B(dims {:?})\n",
        dims(&l),
        dc.first.dims,
        dc.second.dims
    ))
}

fn side_docs<F: Codec>(
    inst: &CatalogInstance<F>,
    side: SideName,
    lambda: &mut dyn FnMut() -> std::result::Result<Vec<LambdaModule<F>>, Failure>,
    plain: &mut dyn FnMut(
        &Arc<morita_core::algebra::Algebra<F>>,
    ) -> std::result::Result<Vec<Module<F>>, Failure>,
) -> std::result::Result<Vec<(String, Value)>, Failure> {
    let mut out = Vec::new();
    match side {
        SideName::Lambda => {
            for l in lambda()? {
                out.push((dims(&l), format::encode_lambda(&l)?));
            }
        }
        SideName::A | SideName::B => {
            let alg = if side == SideName::A {
                &inst.data.a
            } else {
                &inst.data.b
            };
            for m in plain(alg)? {
                out.push((format!("{:?}", m.dims), format::encode_module(&m)?));
            }
        }
    }
    Ok(out)
}

fn listing(
    docs: Vec<(String, Value)>,
    out_dir: Option<&Path>,
    what: &str,
    prefix: &str,
    zero: Option<usize>,
) -> Outcome {
    let mut text = match zero {
        Some(z) => format!("{} {what} ({} nonzero)\n", docs.len(), docs.len() - z),
        None => format!("{} {what}\n", docs.len()),
    };
    for (label, _) in &docs {
        let _ = writeln!(text, "{label}");
    }
    if let Some(dir) = out_dir {
        let width = docs.len().max(1).to_string().len();
        let named: Vec<(String, Value)> = docs
            .into_iter()
            .enumerate()
            .map(|(i, (_, v))| (format!("{prefix}-{i:0width$}.json"), v))
            .collect();
        write_dir(dir, &named)?;
    }
    Ok(text)
}

fn is_zero_body(v: &Value) -> bool {
    v.get("dim").and_then(Value::as_u64) == Some(0)
}

fn sample<F: Codec>(
    inst: &CatalogInstance<F>,
    side: SideName,
    cfg: SampleConfig,
    out_dir: Option<&Path>,
) -> Outcome {
    let mut s = Sampler::new(cfg);
    let n = cfg.count;
    let mut t = s.fork("sample");
    let docs = side_docs(
        inst,
        side,
        &mut || Ok((0..n).map(|_| s.lambda_module(&inst.data)).collect()),
        &mut |alg| Ok((0..n).map(|_| t.module(alg)).collect()),
    )?;
    listing(docs, out_dir, "samples", "sample", None)
}

fn enumerate<F: Codec>(
    inst: &CatalogInstance<F>,
    side: SideName,
    max_dim: usize,
    out_dir: Option<&Path>,
) -> Outcome {
    let docs = side_docs(
        inst,
        side,
        &mut || Ok(enumerate_small(&inst.data, max_dim)?),
        &mut |alg| Ok(enumerate_modules(alg, max_dim)?),
    )?;
    let zero = docs
        .iter()
        .filter(|(_, v)| {
            v.get("X").map_or(false, is_zero_body) && v.get("Y").map_or(false, is_zero_body)
                || is_zero_body(v)
        })
        .count();
    listing(docs, out_dir, "classes", "class", Some(zero))
}

fn verify<F: Codec>(
    suite: &str,
    inst: &CatalogInstance<F>,
    cfg: SampleConfig,
    universe: Option<usize>,
    out: Option<&Path>,
) -> Outcome {
    if !SUITES.contains(&suite) {
        return Err(input(format!(
            "unknown suite {suite:?}; known: {}",
            SUITES.join(", ")
        )));
    }
    let report = match universe {
        Some(dim) => run_suite_on(suite, inst, cfg, &Universe::enumerate(&inst.data, dim)?),
        None => run_suite(suite, inst, cfg),
    };
    let doc = format::encode_report(&report);
    let mut text = String::new();
    for c in &report.claims {
        let _ = writeln!(text, "{:?} {} {}", c.verdict, c.id, c.witness);
    }
    match out {
        Some(p) if p == Path::new("-") => text = to_canonical(&doc),
        Some(p) => {
            emit(&doc, Some(p))?;
        }
        None => {}
    }
    if report.preflight_failed() {
        return Err(input(format!(
            "preflight failed: {}",
            report.preflight.join("; ")
        )));
    }
    if report.passed() {
        Ok(text)
    } else {
        Err(Failure::Fail(text))
    }
}
