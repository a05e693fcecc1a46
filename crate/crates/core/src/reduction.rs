//! Reduction of `(g,f)`-parity factors to perfect matchings.
//!
//! Every original edge `uv` becomes two external nodes `e(u,v)`, `e(v,u)`
//! joined by a twin edge. Vertex `v` gets `d(v) - g(v)` internal nodes, each
//! adjacent to all of `v`'s external nodes, and `(f(v) - g(v)) / 2` disjoint
//! pair edges among them. In a perfect matching that uses `k` pair edges at
//! `v`, exactly `g(v) + 2k` externals of `v` are matched through twins, so
//! the twin edges in the matching form a factor with degrees
//! `g(v), g(v)+2, ..., f(v)`.
//!
//! Node numbering: edge `i = (u, v)` of the original edge list owns nodes
//! `2i = e(u,v)` and `2i+1 = e(v,u)`; internal nodes follow, grouped by
//! vertex in ascending order.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::Matching;
use crate::parity::ParitySpec;

/// A spec whose upper bounds are cut down to the degrees, keeping parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClampedSpec {
    pub spec: ParitySpec,
    /// Vertices with `g(v) > d(v)`; their entry in `spec` keeps `f = g`.
    pub infeasible: Vec<usize>,
}

/// `f'(v) = g(v) + 2*floor((min(f(v), d(v)) - g(v)) / 2)` wherever `g(v) <= d(v)`.
pub fn clamp_spec(graph: &Graph, spec: &ParitySpec) -> Result<ClampedSpec> {
    spec.check_graph(graph)?;
    let mut infeasible = Vec::new();
    let mut upper = Vec::with_capacity(spec.len());
    for v in 0..graph.vertex_count() {
        let (lo, hi, d) = (spec.lower(v), spec.upper(v), graph.degree(v));
        if lo > d {
            infeasible.push(v);
            upper.push(lo);
        } else {
            upper.push(lo + 2 * ((hi.min(d) - lo) / 2));
        }
    }
    let spec = ParitySpec::new(spec.lower_bounds().to_vec(), upper)?;
    Ok(ClampedSpec { spec, infeasible })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeRole {
    /// `e(vertex, other)` on original edge `edge`.
    External { vertex: usize, other: usize, edge: usize },
    Internal { vertex: usize },
}

#[derive(Clone, Debug)]
pub struct GadgetGraph {
    pub gadget: Graph,
    roles: Vec<NodeRole>,
    /// `twin_edges[i]` is the gadget edge standing for original edge `i`.
    pub twin_edges: Vec<(usize, usize)>,
    pub pair_edges: Vec<(usize, usize)>,
    /// Pair edges owned by each original vertex.
    pair_owner: Vec<usize>,
    original_edges: Vec<(usize, usize)>,
    spec: ParitySpec,
}

impl GadgetGraph {
    pub fn role(&self, node: usize) -> NodeRole {
        self.roles[node]
    }

    /// Original vertex and edge index of an external node.
    pub fn external_of(&self, node: usize) -> Option<(usize, usize)> {
        match self.roles.get(node)? {
            NodeRole::External { vertex, edge, .. } => Some((*vertex, *edge)),
            NodeRole::Internal { .. } => None,
        }
    }

    pub fn internal_of(&self, node: usize) -> Option<usize> {
        match self.roles.get(node)? {
            NodeRole::Internal { vertex } => Some(*vertex),
            NodeRole::External { .. } => None,
        }
    }

    /// A matching of the gadget to start augmenting from. A greedy pass
    /// picks original edges while both ends are below their lower bound;
    /// those edges get their twin edge, and every vertex's internal nodes
    /// are matched to its remaining external nodes in order.
    pub fn seed_matching(&self) -> Matching {
        let n = self.spec.len();
        let mut degree = vec![0usize; n];
        let mut chosen = vec![false; self.original_edges.len()];
        for (i, &(u, v)) in self.original_edges.iter().enumerate() {
            if degree[u] < self.spec.lower(u) && degree[v] < self.spec.lower(v) {
                degree[u] += 1;
                degree[v] += 1;
                chosen[i] = true;
            }
        }
        let mut pairs: Vec<(usize, usize)> = self
            .twin_edges
            .iter()
            .zip(&chosen)
            .filter(|(_, &c)| c)
            .map(|(&e, _)| e)
            .collect();
        let mut spare: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (node, role) in self.roles.iter().enumerate() {
            match *role {
                NodeRole::External { vertex, edge, .. } => {
                    if !chosen[edge] {
                        spare[vertex].push(node);
                    }
                }
                NodeRole::Internal { vertex } => {
                    if let Some(x) = spare[vertex].pop() {
                        pairs.push((x, node));
                    }
                }
            }
        }
        Matching::new(pairs)
    }

    pub fn node_count(&self) -> usize {
        self.gadget.vertex_count()
    }

    /// Sidecar describing every gadget node, one per line:
    /// `<node> external <vertex> <other>` or `<node> internal <vertex>`.
    /// A twin edge in a perfect matching means the original edge is in the
    /// factor.
    pub fn node_map_text(&self) -> String {
        let mut out = String::from("# twin edge matched <=> original edge in factor\n");
        for (node, role) in self.roles.iter().enumerate() {
            match *role {
                NodeRole::External { vertex, other, .. } => {
                    writeln!(out, "{node} external {vertex} {other}").unwrap()
                }
                NodeRole::Internal { vertex } => writeln!(out, "{node} internal {vertex}").unwrap(),
            }
        }
        out
    }
}

/// Expected gadget order: `2|E| + Σ_v (d(v) - g(v))`.
pub fn gadget_node_count(graph: &Graph, clamped: &ClampedSpec) -> usize {
    2 * graph.edge_count()
        + (0..graph.vertex_count())
            .map(|v| graph.degree(v).saturating_sub(clamped.spec.lower(v)))
            .sum::<usize>()
}

pub fn build_gadget(graph: &Graph, clamped: &ClampedSpec) -> Result<GadgetGraph> {
    clamped.spec.check_graph(graph)?;
    if let Some(&v) = clamped.infeasible.first() {
        return Err(Error::InfeasibleVertex(v));
    }
    let n = graph.vertex_count();
    let spec = &clamped.spec;
    let mut roles = Vec::with_capacity(gadget_node_count(graph, clamped));
    let mut externals: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut twin_edges = Vec::with_capacity(graph.edge_count());
    for (i, &(u, v)) in graph.edges().iter().enumerate() {
        roles.push(NodeRole::External { vertex: u, other: v, edge: i });
        roles.push(NodeRole::External { vertex: v, other: u, edge: i });
        externals[u].push(2 * i);
        externals[v].push(2 * i + 1);
        twin_edges.push((2 * i, 2 * i + 1));
    }
    let mut gadget_edges = twin_edges.clone();
    let mut pair_edges = Vec::new();
    let mut pair_owner = Vec::new();
    for v in 0..n {
        let (lo, hi, d) = (spec.lower(v), spec.upper(v), graph.degree(v));
        if hi > d {
            return Err(Error::InvalidSpec(format!("vertex {v}: f={hi} exceeds degree {d}")));
        }
        let first = roles.len();
        for _ in lo..d {
            let node = roles.len();
            roles.push(NodeRole::Internal { vertex: v });
            gadget_edges.extend(externals[v].iter().map(|&x| (x, node)));
        }
        for k in 0..(hi - lo) / 2 {
            pair_edges.push((first + 2 * k, first + 2 * k + 1));
            pair_owner.push(v);
        }
    }
    gadget_edges.extend(pair_edges.iter().copied());
    let gadget = Graph::new(roles.len(), &gadget_edges)?;
    assert_eq!(gadget.vertex_count(), gadget_node_count(graph, clamped));
    Ok(GadgetGraph {
        gadget,
        roles,
        twin_edges,
        pair_edges,
        pair_owner,
        original_edges: graph.edges().to_vec(),
        spec: spec.clone(),
    })
}

/// Original edges whose twin edge lies in the perfect matching `pm`.
pub fn extract_factor(gg: &GadgetGraph, pm: &Matching) -> Result<Vec<(usize, usize)>> {
    if !pm.is_perfect_for(&gg.gadget) {
        return Err(Error::NotPerfect);
    }
    let n = gg.spec.len();
    let factor: Vec<_> = gg
        .twin_edges
        .iter()
        .zip(&gg.original_edges)
        .filter(|(&(x, y), _)| pm.contains(x, y))
        .map(|(_, &e)| e)
        .collect();
    let mut degree = vec![0usize; n];
    for &(u, v) in &factor {
        degree[u] += 1;
        degree[v] += 1;
    }
    let mut pairs_used = vec![0usize; n];
    for (&(x, y), &v) in gg.pair_edges.iter().zip(&gg.pair_owner) {
        if pm.contains(x, y) {
            pairs_used[v] += 1;
        }
    }
    for v in 0..n {
        assert_eq!(
            degree[v],
            gg.spec.lower(v) + 2 * pairs_used[v],
            "factor degree at {v} disagrees with pair edges used"
        );
        assert!(gg.spec.admits(v, degree[v]));
    }
    Ok(factor)
}
