//! Maximum-cardinality matching in general graphs (Edmonds' blossom method).
//!
//! Each search grows an alternating BFS tree from one free vertex. An edge
//! between two even vertices of the tree closes an odd cycle; the cycle is
//! contracted by relabeling every vertex on it with the blossom base, and
//! the path through a contracted blossom is recovered from the `parent`
//! links when augmenting. A vertex from which a search fails never becomes
//! augmentable later, so one pass over the vertices suffices: O(V^3).

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

const NONE: usize = usize::MAX;

pub const DEFAULT_BRUTE_MAX_N: usize = 10;

/// A set of pairwise disjoint edges, each stored as `(u, v)` with `u < v`,
/// sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut edges: Vec<_> = pairs.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort_unstable();
        Matching { edges }
    }

    fn from_mates(mate: &[usize]) -> Self {
        let edges = mate
            .iter()
            .enumerate()
            .filter(|&(v, &w)| w != NONE && v < w)
            .map(|(v, &w)| (v, w))
            .collect();
        Matching { edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    /// `mate[v]`, or `None` for exposed vertices.
    pub fn mates(&self, n: usize) -> Vec<Option<usize>> {
        let mut mate = vec![None; n];
        for &(u, v) in &self.edges {
            mate[u] = Some(v);
            mate[v] = Some(u);
        }
        mate
    }

    /// Every edge is in `graph` and no vertex is covered twice.
    pub fn is_valid_for(&self, graph: &Graph) -> bool {
        let mut covered = vec![false; graph.vertex_count()];
        self.edges.iter().all(|&(u, v)| {
            if !graph.has_edge(u, v) || covered[u] || covered[v] {
                return false;
            }
            covered[u] = true;
            covered[v] = true;
            true
        })
    }

    pub fn is_perfect_for(&self, graph: &Graph) -> bool {
        self.is_valid_for(graph) && 2 * self.len() == graph.vertex_count()
    }
}

struct Search<'g> {
    graph: &'g Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    touched: Vec<usize>,
    blossom_mark: Vec<u32>,
    lca_mark: Vec<u32>,
    stamp: u32,
    queue: VecDeque<usize>,
}

impl<'g> Search<'g> {
    fn new(graph: &'g Graph) -> Self {
        let n = graph.vertex_count();
        Search {
            graph,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            touched: Vec::new(),
            blossom_mark: vec![0; n],
            lca_mark: vec![0; n],
            stamp: 0,
            queue: VecDeque::new(),
        }
    }

    fn seed(&mut self, initial: &Matching) {
        assert!(initial.is_valid_for(self.graph), "seed is not a matching of the graph");
        for &(u, v) in initial.edges() {
            self.mate[u] = v;
            self.mate[v] = u;
        }
    }

    fn greedy(&mut self) {
        for u in 0..self.graph.vertex_count() {
            if self.mate[u] != NONE {
                continue;
            }
            if let Some(&w) = self.graph.neighbors(u).iter().find(|&&w| self.mate[w] == NONE) {
                self.mate[u] = w;
                self.mate[w] = u;
            }
        }
    }

    fn next_stamp(&mut self) -> u32 {
        self.stamp += 1;
        self.stamp
    }

    fn lca(&mut self, mut a: usize, mut b: usize) -> usize {
        let stamp = self.next_stamp();
        loop {
            a = self.base[a];
            self.lca_mark[a] = stamp;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if self.lca_mark[b] == stamp {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize, stamp: u32) {
        while self.base[v] != b {
            let m = self.mate[v];
            self.blossom_mark[self.base[v]] = stamp;
            self.blossom_mark[self.base[m]] = stamp;
            self.parent[v] = child;
            child = m;
            v = self.parent[m];
        }
    }

    fn visit(&mut self, v: usize) {
        if !self.used[v] {
            self.used[v] = true;
            self.touched.push(v);
            self.queue.push_back(v);
        }
    }

    fn reset(&mut self) {
        for &v in &self.touched {
            self.used[v] = false;
            self.parent[v] = NONE;
            self.base[v] = v;
        }
        self.touched.clear();
        self.queue.clear();
    }

    /// Returns the free endpoint of an augmenting path from `root`, leaving
    /// the path encoded in `parent`.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        self.reset();
        self.visit(root);
        let graph = self.graph;
        while let Some(v) = self.queue.pop_front() {
            for &to in graph.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // `to` is even: contract the odd cycle through v and to.
                    let top = self.lca(v, to);
                    let stamp = self.next_stamp();
                    self.mark_path(v, top, to, stamp);
                    self.mark_path(to, top, v, stamp);
                    for i in 0..self.touched.len() {
                        let u = self.touched[i];
                        if self.blossom_mark[self.base[u]] == stamp {
                            self.base[u] = top;
                            self.visit(u);
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if !self.used[to] {
                        self.touched.push(to);
                    }
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    self.visit(self.mate[to]);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }

    /// Augments from every exposed vertex; with `stop_on_failure` gives up
    /// at the first vertex that must stay exposed.
    fn run(&mut self, stop_on_failure: bool) -> bool {
        for root in 0..self.graph.vertex_count() {
            if self.mate[root] != NONE {
                continue;
            }
            match self.find_path(root) {
                Some(end) => self.augment(end),
                None if stop_on_failure => return false,
                None => {}
            }
        }
        true
    }
}

/// A maximum matching, deterministic for a given graph.
pub fn maximum_matching(graph: &Graph) -> Matching {
    maximum_matching_from(graph, &Matching::default())
}

/// A maximum matching grown from `seed`, which must be a matching of
/// `graph`; exposed vertices are first matched greedily.
pub fn maximum_matching_from(graph: &Graph, seed: &Matching) -> Matching {
    let mut search = Search::new(graph);
    search.seed(seed);
    search.greedy();
    search.run(false);
    let m = Matching::from_mates(&search.mate);
    debug_assert!(m.is_valid_for(graph));
    m
}

/// A perfect matching if one exists; stops at the first vertex that cannot
/// be covered.
pub fn perfect_matching(graph: &Graph) -> Option<Matching> {
    perfect_matching_from(graph, &Matching::default())
}

/// [`perfect_matching`] starting from the matching `seed`.
pub fn perfect_matching_from(graph: &Graph, seed: &Matching) -> Option<Matching> {
    if graph.vertex_count() % 2 == 1 {
        return None;
    }
    let mut search = Search::new(graph);
    search.seed(seed);
    search.greedy();
    if !search.run(true) {
        return None;
    }
    let m = Matching::from_mates(&search.mate);
    debug_assert!(m.is_perfect_for(graph));
    Some(m)
}

pub fn has_perfect_matching(graph: &Graph) -> bool {
    2 * maximum_matching(graph).len() == graph.vertex_count()
}

/// Maximum matching size by exhaustive branching; for checking
/// [`maximum_matching`] on small graphs.
pub fn brute_force_matching(graph: &Graph, max_n: usize) -> Result<usize> {
    let n = graph.vertex_count();
    if n > max_n {
        return Err(Error::TooLarge { size: n, max: max_n });
    }
    fn best(graph: &Graph, v: usize, covered: &mut [bool]) -> usize {
        let n = graph.vertex_count();
        let mut v = v;
        while v < n && covered[v] {
            v += 1;
        }
        if v == n {
            return 0;
        }
        covered[v] = true;
        let mut result = best(graph, v + 1, covered);
        for &w in graph.neighbors(v) {
            if !covered[w] {
                covered[w] = true;
                result = result.max(1 + best(graph, v + 1, covered));
                covered[w] = false;
            }
        }
        covered[v] = false;
        result
    }
    Ok(best(graph, 0, &mut vec![false; n]))
}
