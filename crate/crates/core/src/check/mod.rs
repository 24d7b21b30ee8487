//! Seeded property harness.
//!
//! Every suite runs `trials` independent trials. Trial `i` of suite `s` draws
//! from [`gen::trial_rng`]`(seed, s, i)`, so results do not depend on thread
//! scheduling and any recorded counterexample can be replayed on its own.

pub mod gen;
pub mod suites;

use std::fmt::Write as _;
use std::time::Instant;

use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::vect::{parse_q, FinVect, SuperVect};
use gen::Bounds;
use suites::{Ctx, Outcome};

pub const SCHEMA: &str = "traced-report/1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Config {
    pub seed: u64,
    pub trials: usize,
    pub max_dim: usize,
    pub max_degree: i64,
    /// Braiding parameter of the graded instance, as a rational string.
    pub q: String,
    /// Suite filters; empty means every suite.
    #[serde(default)]
    pub suites: Vec<String>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: 0,
            trials: 200,
            max_dim: 4,
            max_degree: 4,
            q: "2".into(),
            suites: Vec::new(),
        }
    }
}

impl Config {
    fn ctx(&self) -> Result<Ctx> {
        let q = parse_q(&self.q)?;
        crate::balanced::GradedVect::new(q.clone())?;
        Ok(Ctx {
            bounds: Bounds { max_dim: self.max_dim.max(1), max_degree: self.max_degree.max(0) },
            q,
        })
    }

    fn selects(&self, id: &str) -> bool {
        self.suites.is_empty() || self.suites.iter().any(|p| matches_filter(p, id))
    }
}

/// `p` selects `id` when equal to it, when it is a dotted prefix of it
/// (`slide` selects `slide.graded`), or when it ends in `*` and the rest is a
/// plain prefix.
pub fn matches_filter(p: &str, id: &str) -> bool {
    match p.strip_suffix('*') {
        Some(prefix) => id.starts_with(prefix),
        None => id == p || id.strip_prefix(p).is_some_and(|rest| rest.starts_with('.')),
    }
}

pub type TrialFn = fn(&mut ChaCha8Rng, &Ctx) -> Result<Outcome>;

#[derive(Clone)]
pub struct Suite {
    pub id: &'static str,
    pub instance: &'static str,
    pub tags: &'static [&'static str],
    /// Controls pass when they find at least one counterexample.
    pub expect_counterexample: bool,
    pub summary: &'static str,
    pub trial: TrialFn,
}

macro_rules! suite {
    ($id:literal, $inst:literal, [$($tag:literal),*], $expect:literal, $summary:literal, $f:expr) => {
        Suite {
            id: $id,
            instance: $inst,
            tags: &[$($tag),*],
            expect_counterexample: $expect,
            summary: $summary,
            trial: $f,
        }
    };
}

/// Every registered suite, in report order.
pub fn registry() -> Vec<Suite> {
    use crate::thickened::Crossings;
    use suites::*;
    vec![
        suite!("core.laws.finvect", "finvect", ["lemma.laws"], false, "monoidal laws and naturality of s",
            |r, c| laws_matrix(&FinVect::new(), r, &c.bounds)),
        suite!("core.laws.supervect", "supervect", ["lemma.laws"], false, "monoidal laws and naturality of s",
            |r, c| laws_matrix(&SuperVect::new(), r, &c.bounds)),
        suite!("core.laws.graded", "graded", ["lemma.laws"], false, "monoidal laws and naturality of s",
            |r, c| laws_matrix(&c.graded(), r, &c.bounds)),
        suite!("core.laws.rbord1", "rbord1", ["lemma.laws"], false, "monoidal laws and naturality of s",
            |r, _| laws_bord(r)),
        suite!("balanced.relations.supervect", "supervect", ["lemma.relations"], false,
            "braid relations, twist equation, crossing lemmas", |r, c| relations_matrix(&SuperVect::new(), r, &c.bounds)),
        suite!("balanced.relations.graded", "graded", ["lemma.relations"], false,
            "braid relations, twist equation, crossing lemmas", |r, c| relations_matrix(&c.graded(), r, &c.bounds)),
        suite!("slide.finvect", "finvect", ["lemma.psi", "lemma.trace-hat"], false, "psi and tr_hat are slide invariant",
            |r, c| slide_matrix(&FinVect::new(), r, &c.bounds)),
        suite!("slide.supervect", "supervect", ["lemma.psi", "lemma.trace-hat"], false, "psi and tr_hat are slide invariant",
            |r, c| slide_matrix(&SuperVect::new(), r, &c.bounds)),
        suite!("slide.graded", "graded", ["lemma.psi", "lemma.trace-hat"], false, "psi and tr_hat are slide invariant",
            |r, c| slide_matrix(&c.graded(), r, &c.bounds)),
        suite!("slide.rbord1", "rbord1", ["lemma.psi", "lemma.trace-hat"], false, "psi and tr_hat are slide invariant",
            |r, _| slide_bord(r)),
        suite!("witness.finvect", "finvect", ["lemma.witness"], false, "composition witness is a slide",
            |r, c| witness_matrix(&FinVect::new(), r, &c.bounds)),
        suite!("witness.supervect", "supervect", ["lemma.witness"], false, "composition witness is a slide",
            |r, c| witness_matrix(&SuperVect::new(), r, &c.bounds)),
        suite!("witness.graded", "graded", ["lemma.witness"], false, "composition witness is a slide",
            |r, c| witness_matrix(&c.graded(), r, &c.bounds)),
        suite!("witness.rbord1", "rbord1", ["lemma.witness"], false, "composition witness is a slide",
            |r, _| witness_bord(r)),
        suite!("symmetry.finvect", "finvect", ["trace.symmetry", "pairing.symmetry"], false, "tr(f,g) = tr(g,f)",
            |r, c| symmetry_matrix(&FinVect::new(), r, &c.bounds)),
        suite!("symmetry.supervect", "supervect", ["trace.symmetry", "pairing.symmetry"], false, "tr(f,g) = tr(g,f)",
            |r, c| symmetry_matrix(&SuperVect::new(), r, &c.bounds)),
        suite!("symmetry.graded", "graded", ["trace.symmetry", "pairing.symmetry"], false, "tr(f,g) = tr(g,f)",
            |r, c| symmetry_matrix(&c.graded(), r, &c.bounds)),
        suite!("symmetry.rbord1", "rbord1", ["trace.symmetry", "pairing.symmetry"], false, "tr(f,g) = tr(g,f)",
            |r, _| symmetry_bord(r)),
        suite!("additivity.finvect", "finvect", ["trace.linear", "pairing.bilinear"], false, "linearity of psi, tr_hat, tr",
            |r, c| additivity_matrix(&FinVect::new(), r, &c.bounds)),
        suite!("additivity.supervect", "supervect", ["trace.linear", "pairing.bilinear"], false, "linearity of psi, tr_hat, tr",
            |r, c| additivity_matrix(&SuperVect::new(), r, &c.bounds)),
        suite!("additivity.graded", "graded", ["trace.linear", "pairing.bilinear"], false, "linearity of psi, tr_hat, tr",
            |r, c| additivity_matrix(&c.graded(), r, &c.bounds)),
        suite!("multiplicativity.finvect", "finvect", ["trace.multiplicative", "pairing.multiplicative", "lemma.crossing"],
            false, "psi, tr_hat and tr are multiplicative", |r, c| multiplicativity_matrix(&FinVect::new(), r, &c.bounds)),
        suite!("multiplicativity.supervect", "supervect", ["trace.multiplicative", "pairing.multiplicative", "lemma.crossing"],
            false, "psi, tr_hat and tr are multiplicative", |r, c| multiplicativity_matrix(&SuperVect::new(), r, &c.bounds)),
        suite!("multiplicativity.graded", "graded", ["trace.multiplicative", "pairing.multiplicative", "lemma.crossing"],
            false, "psi, tr_hat and tr are multiplicative", |r, c| multiplicativity_matrix(&c.graded(), r, &c.bounds)),
        suite!("balanced.negative-control", "graded", ["trace.multiplicative"], true,
            "plain swap in place of s should break multiplicativity", |r, c| {
                let cat = c.graded();
                multiplicativity_with_switch(&cat, r, &c.bounds, plain_swap_graded(&cat))
            }),
        suite!("balanced.no-twist-control", "graded", ["trace.multiplicative"], true,
            "braiding without twist should break multiplicativity", |r, c| {
                let cat = c.graded();
                multiplicativity_with_switch(&cat, r, &c.bounds, braiding_only_graded(&cat))
            }),
        suite!("tensor.mirrored.graded", "graded", ["lemma.crossing"], false,
            "crossings from the mirror braiding keep psi multiplicative",
            |r, c| crossings_multiplicative(&c.graded(), r, &c.bounds, Crossings::Mirrored)),
        suite!("tensor.crossing-control", "graded", ["lemma.crossing"], true,
            "crossings mixed from c and its mirror should break multiplicativity of psi",
            |r, c| crossings_multiplicative(&c.graded(), r, &c.bounds, Crossings::Mixed)),
        suite!("trace-property.finvect", "finvect", ["trace.property"], false, "padding invariance, tr(f,g) = tr(fg)",
            |r, c| trace_property_matrix(&FinVect::new(), r, &c.bounds)),
        suite!("trace-property.supervect", "supervect", ["trace.property"], false, "padding invariance, tr(f,g) = tr(fg)",
            |r, c| trace_property_matrix(&SuperVect::new(), r, &c.bounds)),
        suite!("trace-property.graded", "graded", ["trace.property"], false, "padding invariance, tr(f,g) = tr(fg)",
            |r, c| trace_property_matrix(&c.graded(), r, &c.bounds)),
        suite!("vect.phi", "finvect", ["vect.thick", "vect.phi-injective"], false, "phi is the contraction isomorphism",
            |r, c| phi_finvect(r, &c.bounds)),
        suite!("vect.classical", "finvect", ["vect.classical", "dual.bijection", "dual.classical"], false,
            "canonical triples recover f and its classical trace", |r, c| canonical_trace(&FinVect::new(), r, &c.bounds, 5, unit_weight)),
        suite!("dual.super", "supervect", ["dual.bijection", "dual.classical"], false,
            "canonical triples give the supertrace", |r, c| canonical_trace(&SuperVect::new(), r, &c.bounds, 4, parity_weight)),
        suite!("dual.graded", "graded", ["dual.bijection", "dual.classical"], false,
            "canonical triples give the trace", |r, c| canonical_trace(&c.graded(), r, &c.bounds, 4, unit_weight)),
        suite!("bord.thick", "rbord1", ["bord.thick"], false, "thickened morphisms are exactly bordisms",
            |r, _| thick_bord(r)),
        suite!("bord.trace-property", "rbord1", ["bord.trace-property"], false, "tr_hat is independent of the cut",
            |r, _| trace_property_bord(r)),
        suite!("bord.glue", "rbord1", ["bord.glue"], false, "tr_hat of a cut is the glued bordism",
            |r, _| glue_bord(r)),
        suite!("partition", "rbord1", ["partition"], false, "E(glued) = tr(E(s2), E(s1))",
            |r, _| partition(r)),
    ]
}

pub fn find_suite(id: &str) -> Option<Suite> {
    registry().into_iter().find(|s| s.id == id)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub trial: usize,
    pub detail: String,
    pub inputs: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub id: String,
    pub tags: Vec<String>,
    pub instance: String,
    pub trials: usize,
    /// Trials that produced a counterexample.
    pub failures: usize,
    /// Trials that errored instead of producing a verdict.
    pub errors: usize,
    pub expect_counterexample: bool,
    pub counterexamples_found: usize,
    pub passed: bool,
    pub first_counterexample: Option<Counterexample>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_error: Option<Counterexample>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub config: Config,
    pub suites: Vec<SuiteReport>,
    pub passed: bool,
}

fn run_trial(suite: &Suite, config: &Config, ctx: &Ctx, trial: usize) -> Result<Outcome> {
    let mut rng = gen::trial_rng(config.seed, suite.id, trial);
    (suite.trial)(&mut rng, ctx)
}

fn run_suite(suite: &Suite, config: &Config, ctx: &Ctx, timings: bool) -> SuiteReport {
    let start = Instant::now();
    let outcomes: Vec<Result<Outcome>> = (0..config.trials)
        .into_par_iter()
        .map(|i| run_trial(suite, config, ctx, i))
        .collect();
    let mut failures = 0;
    let mut errors = 0;
    let mut first_counterexample = None;
    let mut first_error = None;
    for (trial, outcome) in outcomes.into_iter().enumerate() {
        match outcome {
            Ok(Outcome::Holds) => {}
            Ok(Outcome::Counterexample { detail, inputs }) => {
                failures += 1;
                first_counterexample.get_or_insert(Counterexample { trial, detail, inputs });
            }
            Err(e) => {
                errors += 1;
                first_error.get_or_insert(Counterexample { trial, detail: e.to_string(), inputs: Value::Null });
            }
        }
    }
    let passed = errors == 0 && if suite.expect_counterexample { failures > 0 } else { failures == 0 };
    SuiteReport {
        id: suite.id.into(),
        tags: suite.tags.iter().map(|t| t.to_string()).collect(),
        instance: suite.instance.into(),
        trials: config.trials,
        failures,
        errors,
        expect_counterexample: suite.expect_counterexample,
        counterexamples_found: failures,
        passed,
        first_counterexample,
        first_error,
        wall_ms: timings.then(|| start.elapsed().as_secs_f64() * 1000.0),
    }
}

/// Runs every selected suite. Suites run one after another; trials within a
/// suite run in parallel.
pub fn run(config: &Config, timings: bool) -> Result<Report> {
    let ctx = config.ctx()?;
    let selected: Vec<Suite> = registry().into_iter().filter(|s| config.selects(s.id)).collect();
    if selected.is_empty() {
        return Err(Error::Invalid(format!("no suite matches {:?}", config.suites)));
    }
    let suites: Vec<SuiteReport> = selected.iter().map(|s| run_suite(s, config, &ctx, timings)).collect();
    let passed = suites.iter().all(|s| s.passed);
    Ok(Report { schema: SCHEMA.into(), config: config.clone(), suites, passed })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Replay {
    pub suite: String,
    pub trial: usize,
    pub reproduced: bool,
    pub detail: String,
}

/// Re-runs each recorded first counterexample with the report's own config
/// and checks that the same trial fails again with the same detail.
pub fn replay(report: &Report) -> Result<Vec<Replay>> {
    if report.schema != SCHEMA {
        return Err(Error::Invalid(format!("unknown report schema {:?}", report.schema)));
    }
    let ctx = report.config.ctx()?;
    let mut out = Vec::new();
    for s in &report.suites {
        let Some(cx) = &s.first_counterexample else { continue };
        let suite = find_suite(&s.id).ok_or_else(|| Error::Invalid(format!("unknown suite {:?}", s.id)))?;
        let (reproduced, detail) = match run_trial(&suite, &report.config, &ctx, cx.trial)? {
            Outcome::Counterexample { detail, inputs } => (detail == cx.detail && inputs == cx.inputs, detail),
            Outcome::Holds => (false, "property held".into()),
        };
        out.push(Replay { suite: s.id.clone(), trial: cx.trial, reproduced, detail });
    }
    Ok(out)
}

/// One line per suite, then a summary line.
pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    for s in &report.suites {
        let verdict = if s.passed { "PASS" } else { "FAIL" };
        let note = if s.expect_counterexample {
            format!("expects counterexample, found {}", s.counterexamples_found)
        } else {
            format!("{} counterexamples", s.failures)
        };
        let _ = write!(out, "{verdict} {:<32} {:>5} trials  {note}", s.id, s.trials);
        if s.errors > 0 {
            let _ = write!(out, ", {} errors", s.errors);
        }
        if let Some(ms) = s.wall_ms {
            let _ = write!(out, "  {ms:.1} ms");
        }
        out.push('\n');
        if !s.passed {
            if let Some(cx) = s.first_counterexample.as_ref().filter(|_| !s.expect_counterexample) {
                let _ = writeln!(out, "    trial {}: {}", cx.trial, cx.detail);
            }
            if let Some(e) = &s.first_error {
                let _ = writeln!(out, "    trial {} errored: {}", e.trial, e.detail);
            }
        }
    }
    let failed = report.suites.iter().filter(|s| !s.passed).count();
    let _ = writeln!(
        out,
        "{} suites, {} failed (seed {}, {} trials each)",
        report.suites.len(),
        failed,
        report.config.seed,
        report.config.trials
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filters() {
        assert!(matches_filter("slide", "slide.graded"));
        assert!(matches_filter("slide.graded", "slide.graded"));
        assert!(!matches_filter("slide.g", "slide.graded"));
        assert!(matches_filter("slide.g*", "slide.graded"));
        assert!(!matches_filter("partition", "bord.glue"));
    }

    #[test]
    fn suite_ids_are_unique() {
        let mut ids: Vec<&str> = registry().iter().map(|s| s.id).collect();
        let n = ids.len();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }

    #[test]
    fn small_run_is_deterministic() {
        let config = Config { trials: 8, suites: vec!["slide".into(), "partition".into()], ..Config::default() };
        let a = run(&config, false).unwrap();
        let b = run(&config, false).unwrap();
        assert_eq!(a, b);
        assert!(a.passed, "{}", render_text(&a));
    }
}
