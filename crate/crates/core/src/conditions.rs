//! Hypothesis checkers for Fan-type degree conditions.
//!
//! Each checker evaluates the clauses of one sufficient condition for a
//! factor and reports, per clause, whether it holds together with the exact
//! integer sides of the comparison. Rational thresholds are cross-multiplied
//! so no comparison goes through floating point; the extremal families sit
//! within one unit of these thresholds.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TheoremId {
    /// `(a,b)`-parity factor from `δ >= a + (b-a)/a`, `n >= b(a+b)(a+b+2)/(2a)`
    /// and `max{d(u),d(v)} >= an/(a+b)` for nonadjacent `u, v`.
    Main,
    /// `k`-factor for connected graphs with `n >= 4k-3`, `δ >= k` and
    /// `max{d(u),d(v)} >= n/2`.
    Nishimura,
    /// `[a,b]`-factor from `δ >= a`, `n >= 2a+b+(a²-a)/b` and
    /// `max{d(u),d(v)} >= an/(a+b)`.
    #[serde(alias = "li_cai")]
    LiCai,
    /// `(1,k)`-odd factor for connected graphs of even order `n >= k+1`
    /// with `max{d(u),d(v)} >= n/(1+k)`.
    #[serde(alias = "odd_lemma")]
    OddLemma,
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TheoremId::Main => "main",
            TheoremId::Nishimura => "nishimura",
            TheoremId::LiCai => "licai",
            TheoremId::OddLemma => "oddlemma",
        })
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "main" => Ok(TheoremId::Main),
            "nishimura" => Ok(TheoremId::Nishimura),
            "licai" | "li_cai" => Ok(TheoremId::LiCai),
            "oddlemma" | "odd_lemma" => Ok(TheoremId::OddLemma),
            other => Err(Error::BadParams(format!("unknown theorem {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClauseKind {
    Order,
    Parity,
    MinDegree,
    PairDegree,
    Connectivity,
}

/// One hypothesis clause. Comparison clauses read `lhs >= rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub kind: ClauseKind,
    pub holds: bool,
    /// Reported but not part of `overall`.
    pub informational: bool,
    pub lhs: Option<i64>,
    pub rhs: Option<i64>,
    /// Worst nonadjacent pair for the pair-degree clause.
    pub witness: Option<(usize, usize)>,
}

impl Clause {
    fn compare(kind: ClauseKind, lhs: i128, rhs: i128) -> Result<Clause> {
        let narrow = |x: i128| i64::try_from(x).map_err(|_| Error::BadParams("threshold overflow".into()));
        Ok(Clause {
            kind,
            holds: lhs >= rhs,
            informational: false,
            lhs: Some(narrow(lhs)?),
            rhs: Some(narrow(rhs)?),
            witness: None,
        })
    }

    fn flag(kind: ClauseKind, holds: bool) -> Clause {
        Clause {
            kind,
            holds,
            informational: false,
            lhs: None,
            rhs: None,
            witness: None,
        }
    }

    /// `lhs - rhs` for comparison clauses.
    pub fn slack(&self) -> Option<i64> {
        Some(self.lhs? - self.rhs?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisReport {
    pub theorem: TheoremId,
    pub a: Option<usize>,
    pub b: Option<usize>,
    pub k: Option<usize>,
    pub n: usize,
    pub clauses: Vec<Clause>,
    pub overall: bool,
}

impl HypothesisReport {
    fn new(theorem: TheoremId, n: usize, clauses: Vec<Clause>) -> Self {
        let overall = clauses.iter().all(|c| c.informational || c.holds);
        HypothesisReport {
            theorem,
            a: None,
            b: None,
            k: None,
            n,
            clauses,
            overall,
        }
    }

    pub fn clause(&self, kind: ClauseKind) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.kind == kind)
    }

    /// Uniform parity bounds `(g, f)` of the factor the theorem promises, if
    /// it promises a parity factor.
    pub fn promised_factor(&self) -> Option<(usize, usize)> {
        match self.theorem {
            TheoremId::Main => Some((self.a?, self.b?)),
            TheoremId::Nishimura => Some((self.k?, self.k?)),
            TheoremId::OddLemma => Some((1, self.k?)),
            TheoremId::LiCai => None,
        }
    }
}

/// Clause `(weight) * max{d(u), d(v)} >= threshold` over all nonadjacent
/// pairs; the witness is a pair minimizing the left side.
fn pair_clause(graph: &Graph, weight: i128, threshold: i128) -> Result<Clause> {
    let worst = graph
        .nonadjacent_pairs()
        .into_iter()
        .min_by_key(|&(u, v)| graph.degree(u).max(graph.degree(v)));
    match worst {
        None => {
            // vacuous
            let mut c = Clause::flag(ClauseKind::PairDegree, true);
            c.rhs = Some(i64::try_from(threshold).unwrap_or(i64::MAX));
            Ok(c)
        }
        Some((u, v)) => {
            let top = graph.degree(u).max(graph.degree(v)) as i128;
            let mut c = Clause::compare(ClauseKind::PairDegree, weight * top, threshold)?;
            c.witness = Some((u, v));
            Ok(c)
        }
    }
}

fn min_degree(graph: &Graph) -> Result<i128> {
    Ok(graph.min_degree()? as i128)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MainOptions {
    /// Fold connectivity into `overall`.
    pub require_connected: bool,
}

pub fn check_main(graph: &Graph, a: usize, b: usize) -> Result<HypothesisReport> {
    check_main_with(graph, a, b, MainOptions::default())
}

pub fn check_main_with(
    graph: &Graph,
    a: usize,
    b: usize,
    options: MainOptions,
) -> Result<HypothesisReport> {
    if a == 0 || a > b || (b - a) % 2 != 0 {
        return Err(Error::BadParity { a, b });
    }
    let n = graph.vertex_count();
    let (ai, bi, ni) = (a as i128, b as i128, n as i128);
    let delta = min_degree(graph)?;
    let mut connectivity = Clause::flag(ClauseKind::Connectivity, graph.is_connected());
    connectivity.informational = !options.require_connected;
    let clauses = vec![
        Clause::compare(ClauseKind::Order, 2 * ai * ni, bi * (ai + bi) * (ai + bi + 2))?,
        Clause::flag(ClauseKind::Parity, (n * a) % 2 == 0),
        Clause::compare(ClauseKind::MinDegree, ai * delta, ai * ai + bi - ai)?,
        pair_clause(graph, ai + bi, ai * ni)?,
        connectivity,
    ];
    let mut report = HypothesisReport::new(TheoremId::Main, n, clauses);
    report.a = Some(a);
    report.b = Some(b);
    Ok(report)
}

pub fn check_nishimura(graph: &Graph, k: usize) -> Result<HypothesisReport> {
    if k < 3 {
        return Err(Error::KTooSmall(k));
    }
    let n = graph.vertex_count();
    let (ki, ni) = (k as i128, n as i128);
    let clauses = vec![
        Clause::flag(ClauseKind::Connectivity, graph.is_connected()),
        Clause::compare(ClauseKind::Order, ni, 4 * ki - 3)?,
        Clause::flag(ClauseKind::Parity, (k * n) % 2 == 0),
        Clause::compare(ClauseKind::MinDegree, min_degree(graph)?, ki)?,
        pair_clause(graph, 2, ni)?,
    ];
    let mut report = HypothesisReport::new(TheoremId::Nishimura, n, clauses);
    report.k = Some(k);
    Ok(report)
}

pub fn check_li_cai(graph: &Graph, a: usize, b: usize) -> Result<HypothesisReport> {
    if a == 0 || a >= b {
        return Err(Error::BadRange { a, b });
    }
    let n = graph.vertex_count();
    let (ai, bi, ni) = (a as i128, b as i128, n as i128);
    let clauses = vec![
        Clause::compare(ClauseKind::MinDegree, min_degree(graph)?, ai)?,
        Clause::compare(ClauseKind::Order, bi * ni, bi * (2 * ai + bi) + ai * ai - ai)?,
        pair_clause(graph, ai + bi, ai * ni)?,
    ];
    let mut report = HypothesisReport::new(TheoremId::LiCai, n, clauses);
    report.a = Some(a);
    report.b = Some(b);
    Ok(report)
}

pub fn check_odd_lemma(graph: &Graph, k: usize) -> Result<HypothesisReport> {
    if k % 2 == 0 {
        return Err(Error::EvenK(k));
    }
    let n = graph.vertex_count();
    let (ki, ni) = (k as i128, n as i128);
    let clauses = vec![
        Clause::flag(ClauseKind::Connectivity, graph.is_connected()),
        Clause::flag(ClauseKind::Parity, n % 2 == 0),
        Clause::compare(ClauseKind::Order, ni, ki + 1)?,
        pair_clause(graph, 1 + ki, ni)?,
    ];
    let mut report = HypothesisReport::new(TheoremId::OddLemma, n, clauses);
    report.k = Some(k);
    Ok(report)
}
