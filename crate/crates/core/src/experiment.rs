//! Seeded validation runs for the degree-condition theorems.
//!
//! A run draws graphs (seeded `G(n,p)`, an exhaustive catalog, or an
//! extremal family), evaluates the configured hypothesis checker, and runs
//! the factor finder on every graph that passes. A graph that passes the
//! hypothesis but has no factor is a counterexample. Trials are independent
//! and seeded by index, so reports do not depend on scheduling.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::conditions::{check_main, check_nishimura, check_odd_lemma, HypothesisReport, TheoremId};
use crate::error::{Error, Result};
use crate::extremal::{apex_clique_count, build_apex_extremal, build_bipartite_extremal};
use crate::finder::find_parity_factor;
use crate::generate::{connected_catalog, generate, graph_catalog, Model, Probability, CATALOG_MAX_N};
use crate::graph::{Graph, VertexSet};
use crate::parity::{eta, Certificate, ParitySpec, DEFAULT_CERT_MAX_N};
use crate::text::format_graph_text;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Bipartite,
    Apex,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Mode {
    /// `trials` seeded `G(n,p)` graphs cycling through the `(n, p)` grid.
    #[default]
    Random,
    /// Every graph (one per isomorphism class) of each order in range.
    Exhaustive,
    /// The extremal family for `(a, b)` at `m = m_min..=m_max`.
    Sharpness { family: Family, m_min: usize, m_max: usize },
}

fn default_trials() -> usize {
    1
}

fn default_true() -> bool {
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TrialConfig {
    pub theorem: TheoremId,
    #[serde(default)]
    pub a: Option<usize>,
    #[serde(default)]
    pub b: Option<usize>,
    #[serde(default)]
    pub k: Option<usize>,
    #[serde(default)]
    pub n_min: usize,
    #[serde(default)]
    pub n_max: usize,
    #[serde(default)]
    pub probabilities: Vec<Probability>,
    #[serde(default = "default_trials")]
    pub trials: usize,
    #[serde(default)]
    pub seed: u64,
    /// Skip disconnected samples before evaluating the hypothesis.
    #[serde(default = "default_true")]
    pub connected_only: bool,
    /// Attach exhaustive certificates to counterexamples when small enough.
    #[serde(default)]
    pub certificates: bool,
    #[serde(default)]
    pub mode: Mode,
}

impl TrialConfig {
    /// Random-mode config for the main theorem.
    pub fn main(a: usize, b: usize, n_min: usize, n_max: usize, probabilities: Vec<Probability>, trials: usize, seed: u64) -> Self {
        TrialConfig {
            theorem: TheoremId::Main,
            a: Some(a),
            b: Some(b),
            k: None,
            n_min,
            n_max,
            probabilities,
            trials,
            seed,
            connected_only: true,
            certificates: false,
            mode: Mode::Random,
        }
    }

    /// Uniform bounds of the promised factor; validates the parameters.
    fn factor_bounds(&self) -> Result<(usize, usize)> {
        let need = |x: Option<usize>, name: &str| {
            x.ok_or_else(|| Error::BadConfig(format!("theorem {} needs {name}", self.theorem)))
        };
        match self.theorem {
            TheoremId::Main => {
                let (a, b) = (need(self.a, "a")?, need(self.b, "b")?);
                if a == 0 || a > b || (b - a) % 2 != 0 {
                    return Err(Error::BadConfig(format!("need 1 <= a <= b, a = b (mod 2); got a={a}, b={b}")));
                }
                Ok((a, b))
            }
            TheoremId::Nishimura => {
                let k = need(self.k, "k")?;
                if k < 3 {
                    return Err(Error::BadConfig(format!("need k >= 3, got {k}")));
                }
                Ok((k, k))
            }
            TheoremId::OddLemma => {
                let k = need(self.k, "k")?;
                if k % 2 == 0 {
                    return Err(Error::BadConfig(format!("need odd k, got {k}")));
                }
                Ok((1, k))
            }
            TheoremId::LiCai => Err(Error::BadConfig(
                "licai concludes an [a,b]-factor, which the parity finder does not decide".into(),
            )),
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.factor_bounds()?;
        match self.mode {
            Mode::Random => {
                if self.trials == 0 {
                    return Err(Error::BadConfig("trials must be at least 1".into()));
                }
                if self.probabilities.is_empty() {
                    return Err(Error::BadConfig("no edge probabilities given".into()));
                }
                for p in &self.probabilities {
                    Probability::new(p.num, p.den).map_err(|e| Error::BadConfig(e.to_string()))?;
                }
                self.check_n_range(usize::MAX)
            }
            Mode::Exhaustive => self.check_n_range(CATALOG_MAX_N),
            Mode::Sharpness { m_min, m_max, .. } => {
                if self.theorem != TheoremId::Main {
                    return Err(Error::BadConfig("sharpness families are defined for theorem main".into()));
                }
                if m_min == 0 || m_min > m_max {
                    return Err(Error::BadConfig(format!("bad m range {m_min}..={m_max}")));
                }
                Ok(())
            }
        }
    }

    fn check_n_range(&self, limit: usize) -> Result<()> {
        if self.n_min > self.n_max || self.n_min == 0 {
            return Err(Error::BadConfig(format!("bad n range {}..={}", self.n_min, self.n_max)));
        }
        if self.n_max > limit {
            return Err(Error::BadConfig(format!("n_max={} exceeds {limit}", self.n_max)));
        }
        Ok(())
    }

    fn hypothesis(&self, graph: &Graph) -> Result<HypothesisReport> {
        match self.theorem {
            TheoremId::Main => check_main(graph, self.a.unwrap_or(0), self.b.unwrap_or(0)),
            TheoremId::Nishimura => check_nishimura(graph, self.k.unwrap_or(0)),
            TheoremId::OddLemma => check_odd_lemma(graph, self.k.unwrap_or(0)),
            TheoremId::LiCai => unreachable!("rejected by validate"),
        }
    }
}

/// A graph meeting the hypothesis without having the promised factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub trial: usize,
    pub seed: u64,
    pub n: usize,
    pub p: Option<Probability>,
    /// The graph in edge-list text form.
    pub graph: String,
    pub certificate: Option<Certificate>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SharpnessCase {
    pub family: Family,
    pub m: usize,
    pub n: usize,
    pub min_degree: usize,
    pub hypothesis_holds: bool,
    pub factor_free: bool,
    /// Bipartite: `(a+b)δ < an < (a+b)(δ+1)`. Apex: `δ = q`,
    /// `aδ < a² + b - a` and `η(∅, {apex}) = -a`.
    pub bounds_hold: bool,
    pub passed: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SharpnessSummary {
    pub run: usize,
    pub passed: usize,
    pub cases: Vec<SharpnessCase>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialReport {
    pub config: TrialConfig,
    pub trials_generated: usize,
    pub trials_skipped_disconnected: usize,
    pub trials_passing_hypothesis: usize,
    pub factors_found: usize,
    pub counterexamples: Vec<Counterexample>,
    pub sharpness: Option<SharpnessSummary>,
    /// Wall-clock time; left out of the JSON so reports are reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl TrialReport {
    /// `factors_found + |counterexamples| = trials_passing_hypothesis`.
    pub fn is_consistent(&self) -> bool {
        self.factors_found + self.counterexamples.len() == self.trials_passing_hypothesis
            && self.trials_passing_hypothesis + self.trials_skipped_disconnected <= self.trials_generated
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

enum TrialOutcome {
    SkippedDisconnected,
    FailsHypothesis,
    Factor,
    Counterexample(Option<Certificate>),
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Seed of trial `index` under `master`.
pub fn trial_seed(master: u64, index: usize) -> u64 {
    splitmix64(master ^ splitmix64(index as u64))
}

fn evaluate(config: &TrialConfig, graph: &Graph, filter_connected: bool) -> Result<TrialOutcome> {
    if filter_connected && !graph.is_connected() {
        return Ok(TrialOutcome::SkippedDisconnected);
    }
    if graph.vertex_count() == 0 || !config.hypothesis(graph)?.overall {
        return Ok(TrialOutcome::FailsHypothesis);
    }
    let (a, b) = config.factor_bounds()?;
    let spec = ParitySpec::uniform(graph.vertex_count(), a, b)?;
    let outcome = find_parity_factor(graph, &spec, config.certificates, DEFAULT_CERT_MAX_N)?;
    Ok(match outcome.certificate() {
        _ if outcome.has_factor() => TrialOutcome::Factor,
        cert => TrialOutcome::Counterexample(cert.cloned()),
    })
}

struct Sample {
    trial: usize,
    seed: u64,
    p: Option<Probability>,
    graph: Graph,
}

fn tally(config: &TrialConfig, samples: Vec<Sample>, filter_connected: bool) -> Result<TrialReport> {
    let outcomes: Vec<TrialOutcome> = samples
        .par_iter()
        .map(|s| evaluate(config, &s.graph, filter_connected))
        .collect::<Result<_>>()?;
    let mut report = TrialReport {
        config: config.clone(),
        trials_generated: samples.len(),
        trials_skipped_disconnected: 0,
        trials_passing_hypothesis: 0,
        factors_found: 0,
        counterexamples: Vec::new(),
        sharpness: None,
        elapsed: Duration::ZERO,
    };
    for (sample, outcome) in samples.into_iter().zip(outcomes) {
        match outcome {
            TrialOutcome::SkippedDisconnected => report.trials_skipped_disconnected += 1,
            TrialOutcome::FailsHypothesis => {}
            TrialOutcome::Factor => {
                report.trials_passing_hypothesis += 1;
                report.factors_found += 1;
            }
            TrialOutcome::Counterexample(certificate) => {
                report.trials_passing_hypothesis += 1;
                report.counterexamples.push(Counterexample {
                    trial: sample.trial,
                    seed: sample.seed,
                    n: sample.graph.vertex_count(),
                    p: sample.p,
                    graph: format_graph_text(&sample.graph),
                    certificate,
                });
            }
        }
    }
    Ok(report)
}

fn random_samples(config: &TrialConfig) -> Result<Vec<Sample>> {
    let orders = config.n_max - config.n_min + 1;
    let probs = config.probabilities.len();
    (0..config.trials)
        .into_par_iter()
        .map(|trial| {
            let cell = trial % (orders * probs);
            let n = config.n_min + cell / probs;
            let p = config.probabilities[cell % probs];
            let seed = trial_seed(config.seed, trial);
            let graph = generate(Model::Gnp { n, p }, seed)?;
            Ok(Sample { trial, seed, p: Some(p), graph })
        })
        .collect()
}

fn catalog_samples(config: &TrialConfig) -> Result<Vec<Sample>> {
    let mut samples = Vec::new();
    for n in config.n_min..=config.n_max {
        let graphs = if config.connected_only {
            connected_catalog(n)?
        } else {
            graph_catalog(n)?
        };
        for (index, graph) in graphs.into_iter().enumerate() {
            samples.push(Sample {
                trial: samples.len(),
                seed: index as u64,
                p: None,
                graph,
            });
        }
    }
    Ok(samples)
}

fn sharpness_case(config: &TrialConfig, family: Family, m: usize, graph: &Graph) -> Result<SharpnessCase> {
    let (a, b) = config.factor_bounds()?;
    let n = graph.vertex_count();
    let delta = graph.min_degree()?;
    let spec = ParitySpec::uniform(n, a, b)?;
    let factor_free = !find_parity_factor(graph, &spec, false, 0)?.has_factor();
    let hypothesis_holds = config.hypothesis(graph)?.overall;
    let bounds_hold = match family {
        Family::Bipartite => (a + b) * delta < a * n && a * n < (a + b) * (delta + 1),
        Family::Apex => {
            let apex = VertexSet::new([n - 1]);
            delta == apex_clique_count(a, b)
                && a * delta < a * a + b - a
                && eta(graph, &spec, &VertexSet::empty(), &apex)? == -(a as i64)
        }
    };
    Ok(SharpnessCase {
        family,
        m,
        n,
        min_degree: delta,
        hypothesis_holds,
        factor_free,
        bounds_hold,
        passed: factor_free && bounds_hold && !hypothesis_holds,
    })
}

fn run_sharpness(config: &TrialConfig, family: Family, m_min: usize, m_max: usize) -> Result<TrialReport> {
    let (a, b) = config.factor_bounds()?;
    let mut samples = Vec::new();
    for m in m_min..=m_max {
        let graph = match family {
            Family::Bipartite => build_bipartite_extremal(a, b, m)?,
            Family::Apex => match build_apex_extremal(a, b, m) {
                Ok(g) => g,
                Err(Error::BadM { .. }) => continue,
                Err(e) => return Err(e),
            },
        };
        samples.push((m, graph));
    }
    let cases: Vec<SharpnessCase> = samples
        .par_iter()
        .map(|(m, g)| sharpness_case(config, family, *m, g))
        .collect::<Result<_>>()?;
    let trial_samples = samples
        .into_iter()
        .enumerate()
        .map(|(trial, (m, graph))| Sample { trial, seed: m as u64, p: None, graph })
        .collect();
    let mut report = tally(config, trial_samples, false)?;
    report.sharpness = Some(SharpnessSummary {
        run: cases.len(),
        passed: cases.iter().filter(|c| c.passed).count(),
        cases,
    });
    Ok(report)
}

/// Runs the configured validation. Deterministic for a fixed config.
pub fn run_validation(config: &TrialConfig) -> Result<TrialReport> {
    config.validate()?;
    let start = Instant::now();
    let mut report = match config.mode {
        Mode::Random => tally(config, random_samples(config)?, config.connected_only)?,
        Mode::Exhaustive => tally(config, catalog_samples(config)?, config.connected_only)?,
        Mode::Sharpness { family, m_min, m_max } => run_sharpness(config, family, m_min, m_max)?,
    };
    report.elapsed = start.elapsed();
    assert!(report.is_consistent(), "trial counts do not add up");
    Ok(report)
}
