//! Parity specifications, the deficiency `η(S,T)` of a disjoint pair, and
//! the exhaustive oracles built on it.
//!
//! A graph has a `(g,f)`-parity factor iff `η(S,T) >= 0` for every pair of
//! disjoint vertex sets, where
//!
//! ```text
//! η(S,T) = f(S) - g(T) + Σ_{x∈T} d_{G-S}(x) - q(S,T)
//! ```
//!
//! and `q(S,T)` counts the components `C` of `G-S-T` with
//! `g(V(C)) + e(V(C),T)` odd. The searches here enumerate pairs
//! exhaustively and are only meant for small graphs.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const DEFAULT_CERT_MAX_N: usize = 12;
pub const DEFAULT_BRUTE_MAX_EDGES: usize = 18;

const MAX_BOUND: usize = i32::MAX as usize;

/// Per-vertex degree bounds `g <= f` with `g = f (mod 2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParitySpec {
    g: Vec<usize>,
    f: Vec<usize>,
    uniform: Option<(usize, usize)>,
}

impl ParitySpec {
    pub fn new(g: Vec<usize>, f: Vec<usize>) -> Result<Self> {
        if g.len() != f.len() {
            return Err(Error::InvalidSpec(format!(
                "g has {} entries but f has {}",
                g.len(),
                f.len()
            )));
        }
        for (v, (&lo, &hi)) in g.iter().zip(&f).enumerate() {
            if lo > hi || (hi - lo) % 2 != 0 || hi > MAX_BOUND {
                return Err(Error::InvalidSpec(format!(
                    "vertex {v}: g={lo}, f={hi} violates g <= f, g = f (mod 2)"
                )));
            }
        }
        Ok(ParitySpec { g, f, uniform: None })
    }

    /// `g = a`, `f = b` at each of the `n` vertices.
    pub fn uniform(n: usize, a: usize, b: usize) -> Result<Self> {
        if a > b || (b - a) % 2 != 0 || b > MAX_BOUND {
            return Err(Error::BadParity { a, b });
        }
        Ok(ParitySpec {
            g: vec![a; n],
            f: vec![b; n],
            uniform: Some((a, b)),
        })
    }

    pub fn len(&self) -> usize {
        self.g.len()
    }

    pub fn is_empty(&self) -> bool {
        self.g.is_empty()
    }

    pub fn lower(&self, v: usize) -> usize {
        self.g[v]
    }

    pub fn upper(&self, v: usize) -> usize {
        self.f[v]
    }

    pub fn lower_bounds(&self) -> &[usize] {
        &self.g
    }

    pub fn upper_bounds(&self) -> &[usize] {
        &self.f
    }

    /// `(a, b)` when built by [`ParitySpec::uniform`].
    pub fn uniform_bounds(&self) -> Option<(usize, usize)> {
        self.uniform
    }

    pub fn lower_sum(&self) -> usize {
        self.g.iter().sum()
    }

    /// Whether `degree` is an admissible factor degree at `v`.
    pub fn admits(&self, v: usize, degree: usize) -> bool {
        self.g[v] <= degree && degree <= self.f[v] && (degree - self.g[v]) % 2 == 0
    }

    pub(crate) fn check_graph(&self, graph: &Graph) -> Result<()> {
        if self.len() != graph.vertex_count() {
            return Err(Error::InvalidSpec(format!(
                "spec covers {} vertices, graph has {}",
                self.len(),
                graph.vertex_count()
            )));
        }
        Ok(())
    }
}

/// A disjoint pair `(S, T)` with negative deficiency.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub s: VertexSet,
    pub t: VertexSet,
    pub eta: i64,
    pub odd_components: Vec<VertexSet>,
}

impl Certificate {
    /// Recomputes the deficiency and odd components from scratch.
    pub fn verify(&self, graph: &Graph, spec: &ParitySpec) -> bool {
        match g_odd_components(graph, spec, &self.s, &self.t) {
            Ok(odd) => {
                self.eta < 0
                    && odd == self.odd_components
                    && eta(graph, spec, &self.s, &self.t) == Ok(self.eta)
            }
            Err(_) => false,
        }
    }
}

/// A set `S` with more than `k|S|` odd components in `G - S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmahashiCertificate {
    pub s: VertexSet,
    pub odd_component_count: usize,
}

fn check_pair(graph: &Graph, spec: &ParitySpec, s: &VertexSet, t: &VertexSet) -> Result<()> {
    spec.check_graph(graph)?;
    if !s.is_disjoint(t) {
        return Err(Error::OverlappingSets);
    }
    s.indicator(graph.vertex_count())?;
    t.indicator(graph.vertex_count())?;
    Ok(())
}

/// The `g`-odd components of `G - S - T`.
pub fn g_odd_components(
    graph: &Graph,
    spec: &ParitySpec,
    s: &VertexSet,
    t: &VertexSet,
) -> Result<Vec<VertexSet>> {
    check_pair(graph, spec, s, t)?;
    let removed = VertexSet::new(s.iter().chain(t.iter()));
    let mut odd = Vec::new();
    for comp in graph.components_excluding(&removed)? {
        let weight: usize = comp.iter().map(|v| spec.lower(v)).sum();
        if (weight + graph.edges_between(&comp, t)?) % 2 == 1 {
            odd.push(comp);
        }
    }
    Ok(odd)
}

/// `q(S,T)` together with the components it counts.
pub fn g_odd_component_count(
    graph: &Graph,
    spec: &ParitySpec,
    s: &VertexSet,
    t: &VertexSet,
) -> Result<(usize, Vec<VertexSet>)> {
    let odd = g_odd_components(graph, spec, s, t)?;
    Ok((odd.len(), odd))
}

/// The deficiency `η(S,T)`.
pub fn eta(graph: &Graph, spec: &ParitySpec, s: &VertexSet, t: &VertexSet) -> Result<i64> {
    let q = g_odd_components(graph, spec, s, t)?.len();
    let f_s: usize = s.iter().map(|v| spec.upper(v)).sum();
    let g_t: usize = t.iter().map(|v| spec.lower(v)).sum();
    let mut deg_t = 0usize;
    for x in t.iter() {
        deg_t += graph.degree_excluding(x, s)?;
    }
    Ok(f_s as i64 - g_t as i64 + deg_t as i64 - q as i64)
}

/// Bitmask view of a small graph for the exhaustive searches.
struct MaskGraph {
    n: usize,
    adj: Vec<u64>,
}

impl MaskGraph {
    fn new(graph: &Graph) -> Self {
        let adj = (0..graph.vertex_count())
            .map(|v| graph.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
            .collect();
        MaskGraph {
            n: graph.vertex_count(),
            adj,
        }
    }

    fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Calls `visit` with each connected component of the subgraph induced
    /// on `alive`.
    fn for_each_component(&self, mut alive: u64, mut visit: impl FnMut(u64)) {
        while alive != 0 {
            let start = alive & alive.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & alive & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            alive &= !comp;
            visit(comp);
        }
    }

    fn eta(&self, spec: &ParitySpec, s: u64, t: u64) -> i64 {
        let mut value = 0i64;
        for v in bits(s) {
            value += spec.upper(v) as i64;
        }
        for x in bits(t) {
            value -= spec.lower(x) as i64;
            value += (self.adj[x] & !s).count_ones() as i64;
        }
        self.for_each_component(self.full() & !s & !t, |comp| {
            let mut parity = 0usize;
            for v in bits(comp) {
                parity += spec.lower(v) + (self.adj[v] & t).count_ones() as usize;
            }
            if parity % 2 == 1 {
                value -= 1;
            }
        });
        value
    }

    fn odd_order_components(&self, s: u64) -> usize {
        let mut count = 0;
        self.for_each_component(self.full() & !s, |comp| {
            if comp.count_ones() % 2 == 1 {
                count += 1;
            }
        });
        count
    }
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Compares two masks as ascending id lists, lexicographically.
fn lex_cmp(mut a: u64, mut b: u64) -> Ordering {
    loop {
        match (a == 0, b == 0) {
            (true, true) => return Ordering::Equal,
            (true, false) => return Ordering::Less,
            (false, true) => return Ordering::Greater,
            _ => {}
        }
        let (ia, ib) = (a.trailing_zeros(), b.trailing_zeros());
        if ia != ib {
            return ia.cmp(&ib);
        }
        a &= a - 1;
        b &= b - 1;
    }
}

fn masks_by_size(n: usize) -> Vec<Vec<u64>> {
    let mut levels = vec![Vec::new(); n + 1];
    for mask in 0..1u64 << n {
        levels[mask.count_ones() as usize].push(mask);
    }
    levels
}

fn guard(n: usize, max_n: usize) -> Result<()> {
    // 3^40 pairs is already far out of reach; the mask view needs n < 64.
    if n > max_n || n > 40 {
        return Err(Error::TooLarge { size: n, max: max_n.min(40) });
    }
    Ok(())
}

/// Exhaustive search for a disjoint pair with `η(S,T) < 0`.
///
/// Pairs are visited by `|S| + |T|` ascending; within one size the reported
/// pair is the smallest by `(S, T)` compared as sorted id lists.
pub fn certificate_search(
    graph: &Graph,
    spec: &ParitySpec,
    max_n: usize,
) -> Result<Option<Certificate>> {
    spec.check_graph(graph)?;
    let n = graph.vertex_count();
    guard(n, max_n)?;
    let mg = MaskGraph::new(graph);
    for level in masks_by_size(n) {
        let mut best: Option<(u64, u64, i64)> = None;
        for &union in &level {
            // every split of `union` into S and T
            let mut s = union;
            loop {
                let t = union & !s;
                let value = mg.eta(spec, s, t);
                if value < 0 {
                    let better = match best {
                        None => true,
                        Some((bs, bt, _)) => lex_cmp(s, bs).then(lex_cmp(t, bt)) == Ordering::Less,
                    };
                    if better {
                        best = Some((s, t, value));
                    }
                }
                if s == 0 {
                    break;
                }
                s = (s - 1) & union;
            }
        }
        if let Some((s, t, value)) = best {
            let s = VertexSet::from_mask(s);
            let t = VertexSet::from_mask(t);
            let odd_components = g_odd_components(graph, spec, &s, &t)?;
            let cert = Certificate {
                s,
                t,
                eta: value,
                odd_components,
            };
            assert!(cert.verify(graph, spec), "certificate failed recomputation");
            return Ok(Some(cert));
        }
    }
    Ok(None)
}

/// Exhaustive search for `S` with `c_o(G - S) > k|S|`, visiting sets by
/// size and then lexicographically.
pub fn amahashi_search(graph: &Graph, k: usize, max_n: usize) -> Result<Option<AmahashiCertificate>> {
    if k % 2 == 0 {
        return Err(Error::EvenK(k));
    }
    let n = graph.vertex_count();
    guard(n, max_n)?;
    let mg = MaskGraph::new(graph);
    for (size, level) in masks_by_size(n).into_iter().enumerate() {
        let hit = level
            .into_iter()
            .map(|s| (s, mg.odd_order_components(s)))
            .filter(|&(_, odd)| odd > k * size)
            .min_by(|x, y| lex_cmp(x.0, y.0));
        if let Some((s, odd)) = hit {
            return Ok(Some(AmahashiCertificate {
                s: VertexSet::from_mask(s),
                odd_component_count: odd,
            }));
        }
    }
    Ok(None)
}

/// Enumerates edge subsets in reflected Gray-code order and returns the
/// first one that is a `(g,f)`-parity factor.
pub fn brute_force_factor(
    graph: &Graph,
    spec: &ParitySpec,
    max_edges: usize,
) -> Result<Option<Vec<(usize, usize)>>> {
    spec.check_graph(graph)?;
    let m = graph.edge_count();
    if m > max_edges || m > 40 {
        return Err(Error::TooLarge { size: m, max: max_edges.min(40) });
    }
    let n = graph.vertex_count();
    let edges = graph.edges();
    let mut degree = vec![0usize; n];
    let mut bad = (0..n).filter(|&v| !spec.admits(v, 0)).count();
    let mut chosen = 0u64;
    let toggle = |v: usize, add: bool, degree: &mut [usize], bad: &mut usize| {
        let before = spec.admits(v, degree[v]);
        if add {
            degree[v] += 1;
        } else {
            degree[v] -= 1;
        }
        match (before, spec.admits(v, degree[v])) {
            (true, false) => *bad += 1,
            (false, true) => *bad -= 1,
            _ => {}
        }
    };
    for step in 0..1u64 << m {
        if step > 0 {
            let i = step.trailing_zeros() as usize;
            chosen ^= 1 << i;
            let add = chosen >> i & 1 == 1;
            let (u, v) = edges[i];
            toggle(u, add, &mut degree, &mut bad);
            toggle(v, add, &mut degree, &mut bad);
        }
        if bad == 0 {
            return Ok(Some(bits(chosen).map(|i| edges[i]).collect()));
        }
    }
    Ok(None)
}
