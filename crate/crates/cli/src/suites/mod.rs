//! Named verification suites.
//!
//! Every sampled claim draws from a seeded stream; with a [`Universe`] the
//! same claims are instead checked on every enumerated module.

use std::sync::Arc;

use rayon::prelude::*;

use morita_core::algebra::Module;
use morita_core::morita::{LambdaModule, MoritaData};
use morita_core::{Field, Result};

use crate::catalog::CatalogInstance;
use crate::enumerate::{enumerate_modules, enumerate_small};
use crate::report::{Claim, Mode, Report};
use crate::sample::{SampleConfig, Sampler};

mod adjunction;
mod completeness;
mod corner;
mod equivalence;
mod gorenstein;
mod hovey;
mod orthogonality;

pub use completeness::standard_approximation;
pub use equivalence::quadruple_hom_dim;

pub const SUITES: [&str; 11] = [
    "equivalence",
    "adjunction",
    "orthogonality",
    "corner-example",
    "char2",
    "gorenstein",
    "resolutions",
    "completeness",
    "compare",
    "differences",
    "hovey",
];

/// Sampled items must qualify within this many draws per requested sample.
pub const ATTEMPTS_PER_SAMPLE: usize = 20;

/// Every module up to a total dimension, on each side and over Λ.
#[derive(Clone, Debug)]
pub struct Universe<F: Field> {
    pub max_dim: usize,
    pub lambda: Vec<LambdaModule<F>>,
    pub a: Vec<Module<F>>,
    pub b: Vec<Module<F>>,
}

impl<F: Field> Universe<F> {
    pub fn enumerate(d: &Arc<MoritaData<F>>, max_dim: usize) -> Result<Self> {
        Ok(Universe {
            max_dim,
            lambda: enumerate_small(d, max_dim)?,
            a: enumerate_modules(&d.a, max_dim)?,
            b: enumerate_modules(&d.b, max_dim)?,
        })
    }
}

pub(crate) struct Ctx<'a, F: Field> {
    pub inst: &'a CatalogInstance<F>,
    pub cfg: SampleConfig,
    pub universe: Option<&'a Universe<F>>,
    pub suite: &'a str,
}

/// Outcome of checking a family of items.
pub(crate) struct Tally {
    pub checked: usize,
    pub attempts: usize,
    pub needed: usize,
    pub exhaustive: bool,
    pub failure: Option<String>,
}

impl Tally {
    pub fn ok(&self) -> bool {
        self.failure.is_none() && (self.exhaustive || self.checked >= self.needed)
    }

    pub fn witness(&self, what: &str) -> String {
        if let Some(f) = &self.failure {
            return f.clone();
        }
        let scope = if self.exhaustive {
            "every enumerated"
        } else {
            "sampled"
        };
        if self.ok() {
            format!("{} {scope} {what} checked", self.checked)
        } else {
            format!(
                "only {} of {} {what} qualified in {} draws",
                self.checked, self.needed, self.attempts
            )
        }
    }
}

impl<'a, F: Field> Ctx<'a, F> {
    pub fn d(&self) -> &Arc<MoritaData<F>> {
        &self.inst.data
    }

    pub fn sampler(&self, label: &str) -> Sampler {
        Sampler::new(self.cfg).fork(&format!("{}/{label}", self.suite))
    }

    /// Checks `check` on items: every universe item when enumerating, else
    /// the first `needed` qualifying draws from `gen`. Items are evaluated in
    /// parallel; the result does not depend on scheduling.
    pub fn tally<T, G, Q, C>(
        &self,
        label: &str,
        needed: usize,
        gen: G,
        universe: Option<Vec<T>>,
        qualifies: Q,
        check: C,
    ) -> Tally
    where
        T: Send + Sync,
        G: FnMut(&mut Sampler) -> T,
        Q: Fn(&T) -> bool + Sync,
        C: Fn(&T) -> std::result::Result<(), String> + Sync,
    {
        let eval = |items: &[T]| -> Vec<Option<std::result::Result<(), String>>> {
            items
                .par_iter()
                .map(|t| if qualifies(t) { Some(check(t)) } else { None })
                .collect()
        };
        if let Some(items) = universe {
            let res = eval(&items);
            let checked = res.iter().filter(|r| r.is_some()).count();
            let failure = res.into_iter().flatten().find_map(|r| r.err());
            return Tally {
                checked,
                attempts: items.len(),
                needed,
                exhaustive: true,
                failure,
            };
        }
        let mut gen = gen;
        let mut s = self.sampler(label);
        let cap = needed * ATTEMPTS_PER_SAMPLE;
        let (mut checked, mut attempts) = (0, 0);
        while checked < needed && attempts < cap {
            let batch = (needed - checked).max(8).min(cap - attempts);
            let items: Vec<T> = (0..batch).map(|_| gen(&mut s)).collect();
            attempts += batch;
            for r in eval(&items).into_iter().flatten() {
                if checked == needed {
                    break;
                }
                checked += 1;
                if let Err(e) = r {
                    return Tally {
                        checked,
                        attempts,
                        needed,
                        exhaustive: false,
                        failure: Some(e),
                    };
                }
            }
        }
        Tally {
            checked,
            attempts,
            needed,
            exhaustive: false,
            failure: None,
        }
    }

    pub fn universe_lambda(&self) -> Option<Vec<LambdaModule<F>>> {
        self.universe.map(|u| u.lambda.clone())
    }
}

/// Pairs from two lists, first index outermost.
pub(crate) fn pairs<S: Clone, T: Clone>(xs: &[S], ys: &[T]) -> Vec<(S, T)> {
    xs.iter()
        .flat_map(|x| ys.iter().map(move |y| (x.clone(), y.clone())))
        .collect()
}

pub(crate) fn fact(ok: bool, what: impl Into<String>) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

pub(crate) fn dims_of<F: Field>(l: &LambdaModule<F>) -> String {
    format!("(X {:?}; Y {:?})", l.x.dims, l.y.dims)
}

/// Runs a suite on sampled modules.
pub fn run_suite<F: Field>(name: &str, inst: &CatalogInstance<F>, cfg: SampleConfig) -> Report {
    run(name, inst, cfg, None)
}

/// Runs a suite with every sampled claim checked on the whole universe.
pub fn run_suite_on<F: Field>(
    name: &str,
    inst: &CatalogInstance<F>,
    cfg: SampleConfig,
    universe: &Universe<F>,
) -> Report {
    run(name, inst, cfg, Some(universe))
}

fn run<F: Field>(
    name: &str,
    inst: &CatalogInstance<F>,
    cfg: SampleConfig,
    universe: Option<&Universe<F>>,
) -> Report {
    let mode = if universe.is_some() {
        Mode::Exhaustive
    } else {
        Mode::Sampled
    };
    let mut report = Report::new(name, &inst.name, &inst.data.field().name(), cfg, mode);
    let ctx = Ctx {
        inst,
        cfg,
        universe,
        suite: name,
    };
    let outcome: std::result::Result<Vec<Claim>, Vec<String>> = match name {
        "equivalence" => Ok(equivalence::run(&ctx)),
        "adjunction" => Ok(adjunction::run(&ctx)),
        "orthogonality" => orthogonality::run(&ctx),
        "compare" => orthogonality::run_compare(&ctx),
        "corner-example" => corner::run_example(&ctx),
        "char2" => corner::run_char2(&ctx),
        "differences" => corner::run_differences(&ctx),
        "gorenstein" => gorenstein::run(&ctx),
        "resolutions" => gorenstein::run_resolutions(&ctx),
        "completeness" => completeness::run(&ctx),
        "hovey" => hovey::run(&ctx),
        _ => Err(vec![format!(
            "unknown suite {name}; known: {}",
            SUITES.join(", ")
        )]),
    };
    match outcome {
        Ok(claims) => report.claims = claims,
        Err(pre) => report.preflight = pre,
    }
    report.finish()
}

/// Names of instance properties that fail among `needed`.
pub(crate) fn missing<F: Field>(inst: &CatalogInstance<F>, needed: &[&str]) -> Vec<String> {
    needed
        .iter()
        .filter(|p| !inst.has(p))
        .map(|p| format!("instance lacks {p}"))
        .collect()
}

pub(crate) fn preflight<F: Field>(
    inst: &CatalogInstance<F>,
    needed: &[&str],
) -> std::result::Result<(), Vec<String>> {
    let m = missing(inst, needed);
    if m.is_empty() {
        Ok(())
    } else {
        Err(m)
    }
}
