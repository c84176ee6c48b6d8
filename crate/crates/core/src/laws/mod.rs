//! Randomised verification of the combinator laws.
//!
//! Every law is an identity between two polynomial maps built from a freshly
//! generated input. Both sides are compared exactly. Case `i` of a law draws
//! its inputs from a generator seeded by `(seed, law id, i)`, so cases are
//! independent and reproducible no matter how they are scheduled.

mod axioms;
mod context;
mod fdb;
mod higher;
mod stable;
mod transpose;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::comparison::Comparison;
use crate::corpus::{Corpus, CorpusConfig};
use crate::error::{Error, Result};
use crate::poly::{ArityProfile, PolyMap, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    RdAxioms,
    Context,
    Dagger,
    Stable,
    Bridge,
    Symmetry,
    FdbForward,
    FdbReverse,
    All,
}

impl Suite {
    pub const EVERY: [Suite; 8] = [
        Suite::RdAxioms,
        Suite::Context,
        Suite::Dagger,
        Suite::Stable,
        Suite::Bridge,
        Suite::Symmetry,
        Suite::FdbForward,
        Suite::FdbReverse,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::RdAxioms => "rd-axioms",
            Suite::Context => "context",
            Suite::Dagger => "dagger",
            Suite::Stable => "stable",
            Suite::Bridge => "bridge",
            Suite::Symmetry => "symmetry",
            Suite::FdbForward => "fdb-forward",
            Suite::FdbReverse => "fdb-reverse",
            Suite::All => "all",
        }
    }

    fn laws(self, config: &VerifyConfig) -> Vec<Law> {
        match self {
            Suite::RdAxioms => axioms::laws(),
            Suite::Context => context::laws(),
            Suite::Dagger => transpose::laws(),
            Suite::Stable => stable::laws(config.max_order),
            Suite::Bridge => higher::bridge_laws(config.max_order),
            Suite::Symmetry => higher::symmetry_laws(config.max_order),
            Suite::FdbForward => fdb::forward_laws(config.max_order),
            Suite::FdbReverse => fdb::reverse_laws(config.max_order),
            Suite::All => Suite::EVERY.iter().flat_map(|s| s.laws(config)).collect(),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EVERY
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Cases per law.
    pub cases: usize,
    pub max_dim: usize,
    pub max_deg: u32,
    /// Largest `n` for the order-indexed laws (`n = 0..=max_order`).
    pub max_order: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 42,
            cases: 100,
            max_dim: 3,
            max_deg: 3,
            max_order: 3,
        }
    }
}

impl VerifyConfig {
    fn corpus(&self, law: &str, case: usize) -> Corpus {
        let config = CorpusConfig {
            max_dim: self.max_dim,
            max_deg: self.max_deg,
            ..CorpusConfig::default()
        };
        Corpus::new(case_seed(self.seed, law, case), config)
    }
}

// FNV-1a over the law id, mixed with the base seed and case number.
fn case_seed(seed: u64, law: &str, case: usize) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in law.bytes() {
        h ^= u64::from(byte);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h ^ seed.rotate_left(17) ^ (case as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

/// Inputs and both sides of one law instance.
pub(crate) struct Case {
    maps: Vec<PolyMap>,
    comparison: Comparison,
}

impl Case {
    fn new(maps: Vec<PolyMap>, lhs: PolyMap, rhs: PolyMap) -> Self {
        Case {
            maps,
            comparison: Comparison::new(lhs, rhs),
        }
    }
}

type Check = Box<dyn Fn(&mut Corpus) -> Result<Case> + Send + Sync>;

pub(crate) struct Law {
    id: String,
    check: Check,
}

fn law<F>(id: impl Into<String>, check: F) -> Law
where
    F: Fn(&mut Corpus) -> Result<Case> + Send + Sync + 'static,
{
    Law {
        id: id.into(),
        check: Box::new(check),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawFailure {
    pub law: String,
    pub maps: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawTally {
    pub law: String,
    pub cases: usize,
    pub failures: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub suite: String,
    pub seed: u64,
    pub cases: usize,
    pub laws: Vec<LawTally>,
    pub failures: Vec<LawFailure>,
    pub elapsed_ms: u64,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn tally(&self, law: &str) -> Option<&LawTally> {
        self.laws.iter().find(|t| t.law == law)
    }

    /// Human-readable summary; carries no timing so it is reproducible.
    pub fn render(&self) -> String {
        let mut out = format!(
            "suite: {}\nseed: {}\ncases per law: {}\n",
            self.suite, self.seed, self.cases
        );
        let width = self.laws.iter().map(|t| t.law.len()).max().unwrap_or(0);
        for t in &self.laws {
            let verdict = if t.failures == 0 { "ok" } else { "FAILED" };
            out.push_str(&format!(
                "  {:<width$}  {:>5} cases  {:>3} failures  {}\n",
                t.law, t.cases, t.failures, verdict
            ));
        }
        for f in &self.failures {
            out.push_str(&format!(
                "failure in {}\n  maps: {}\n  lhs:  {}\n  rhs:  {}\n",
                f.law,
                f.maps.join(" ; "),
                f.lhs,
                f.rhs
            ));
        }
        out.push_str(&format!(
            "{} laws, {} failures\n",
            self.laws.len(),
            self.failures.len()
        ));
        out
    }
}

fn run_law(law: &Law, config: &VerifyConfig) -> (LawTally, Vec<LawFailure>) {
    let failures: Vec<LawFailure> = (0..config.cases)
        .into_par_iter()
        .filter_map(|i| {
            let mut corpus = config.corpus(&law.id, i);
            match (law.check)(&mut corpus) {
                Ok(case) if case.comparison.holds() => None,
                Ok(case) => Some(LawFailure {
                    law: law.id.clone(),
                    maps: case.maps.iter().map(PolyMap::to_string).collect(),
                    lhs: case.comparison.lhs.to_string(),
                    rhs: case.comparison.rhs.to_string(),
                }),
                Err(e) => Some(LawFailure {
                    law: law.id.clone(),
                    maps: Vec::new(),
                    lhs: format!("error: {e}"),
                    rhs: String::new(),
                }),
            }
        })
        .collect();
    let tally = LawTally {
        law: law.id.clone(),
        cases: config.cases,
        failures: failures.len(),
    };
    (tally, failures)
}

pub fn law_ids(suite: Suite, config: &VerifyConfig) -> Vec<String> {
    suite.laws(config).into_iter().map(|l| l.id).collect()
}

/// Runs every law of `suite` for `config.cases` cases each.
pub fn run_suite(suite: Suite, config: &VerifyConfig) -> Result<LawReport> {
    if config.cases == 0 || config.max_dim == 0 {
        return Err(Error::Usage("cases and max-dim must be positive".into()));
    }
    let start = Instant::now();
    let mut laws_out = Vec::new();
    let mut failures = Vec::new();
    for law in suite.laws(config) {
        let (tally, fails) = run_law(&law, config);
        laws_out.push(tally);
        failures.extend(fails);
    }
    Ok(LawReport {
        suite: suite.name().to_string(),
        seed: config.seed,
        cases: config.cases,
        laws: laws_out,
        failures,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

// Shared construction helpers.

/// `f ∘ ⟨args…⟩`.
fn apply(f: &PolyMap, args: &[PolyMap]) -> Result<PolyMap> {
    f.compose(&PolyMap::pair(args)?)
}

fn projections(domain: &ArityProfile) -> Result<Vec<PolyMap>> {
    (0..domain.len())
        .map(|b| PolyMap::proj(domain, b))
        .collect()
}

/// `s·x + t·y`.
fn combo(s: &Scalar, x: &PolyMap, t: &Scalar, y: &PolyMap) -> Result<PolyMap> {
    x.scale(s).checked_add(&y.scale(t))
}

fn profile(blocks: Vec<usize>) -> Result<ArityProfile> {
    ArityProfile::new(blocks)
}

/// `f` is k-linear in `block`: `f(…, s·x + t·y, …) = s·f(…, x, …) + t·f(…, y, …)`,
/// over the domain of `f` extended by one extra copy of that block.
fn klinear_case(f: &PolyMap, block: usize, s: &Scalar, t: &Scalar) -> Result<(PolyMap, PolyMap)> {
    let dim = f.domain().dim(block)?;
    let domain = f.domain().extend(&[dim]);
    let ps = projections(&domain)?;
    let extra = ps.last().expect("extended domain").clone();
    let mut mixed = ps[..f.domain().len()].to_vec();
    mixed[block] = combo(s, &ps[block], t, &extra)?;
    let mut swapped = ps[..f.domain().len()].to_vec();
    swapped[block] = extra;
    let lhs = apply(f, &mixed)?;
    let at_x = apply(f, &ps[..f.domain().len()])?;
    let at_y = apply(f, &swapped)?;
    Ok((lhs, combo(s, &at_x, t, &at_y)?))
}
