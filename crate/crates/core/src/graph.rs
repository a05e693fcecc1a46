//! Immutable simple undirected graphs on vertices `0..n`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A sorted, duplicate-free list of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct VertexSet(Vec<usize>);

impl From<Vec<usize>> for VertexSet {
    fn from(ids: Vec<usize>) -> Self {
        VertexSet::new(ids)
    }
}

impl From<VertexSet> for Vec<usize> {
    fn from(set: VertexSet) -> Self {
        set.0
    }
}

impl VertexSet {
    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    /// Builds a set from arbitrary ids; order and repetition are normalized.
    pub fn new(ids: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = ids.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub(crate) fn from_sorted(ids: Vec<usize>) -> Self {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        VertexSet(ids)
    }

    /// Vertices whose bit is set in `mask`.
    pub fn from_mask(mask: u64) -> Self {
        let mut ids = Vec::with_capacity(mask.count_ones() as usize);
        let mut m = mask;
        while m != 0 {
            ids.push(m.trailing_zeros() as usize);
            m &= m - 1;
        }
        VertexSet(ids)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    /// Membership vector of length `n`; fails if an id is out of range.
    pub(crate) fn indicator(&self, n: usize) -> Result<Vec<bool>> {
        let mut mark = vec![false; n];
        for v in self.iter() {
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            mark[v] = true;
        }
        Ok(mark)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

/// Simple undirected graph. Neighbor lists are sorted and `edges` holds each
/// edge once as `(u, v)` with `u < v`, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, repeated edges (in either
    /// orientation) and out-of-range endpoints.
    pub fn new(n: usize, edge_pairs: &[(usize, usize)]) -> Result<Graph> {
        let mut edges = Vec::with_capacity(edge_pairs.len());
        for &(u, v) in edge_pairs {
            if u >= n {
                return Err(Error::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let g = Graph { n, adj, edges };
        debug_assert_eq!(g.degree_sum(), 2 * g.edge_count());
        Ok(g)
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn degree_sum(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Index of edge `uv` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// A fresh graph with the extra edge `uv`.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut pairs = self.edges.clone();
        pairs.push((u, v));
        Graph::new(self.n, &pairs)
    }

    /// `d_{G-S}(v)`: neighbors of `v` outside `excluded`.
    pub fn degree_excluding(&self, v: usize, excluded: &VertexSet) -> Result<usize> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange(v));
        }
        if excluded.contains(v) {
            return Err(Error::VertexInExcluded(v));
        }
        Ok(self.adj[v].iter().filter(|&&w| !excluded.contains(w)).count())
    }

    /// Connected components of the subgraph induced on `V \ removed`, ordered
    /// by smallest vertex.
    pub fn components_excluding(&self, removed: &VertexSet) -> Result<Vec<VertexSet>> {
        let removed = removed.indicator(self.n)?;
        Ok(self.components_masked(&removed))
    }

    pub(crate) fn components_masked(&self, removed: &[bool]) -> Vec<VertexSet> {
        let mut seen = removed.to_vec();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut comp = vec![start];
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(VertexSet::from_sorted(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components_masked(&vec![false; self.n]).len() == 1
    }

    /// `e_G(A, B)` for disjoint `A`, `B`.
    pub fn edges_between(&self, a: &VertexSet, b: &VertexSet) -> Result<usize> {
        if !a.is_disjoint(b) {
            return Err(Error::OverlappingSets);
        }
        a.indicator(self.n)?;
        let in_b = b.indicator(self.n)?;
        Ok(a.iter()
            .map(|u| self.adj[u].iter().filter(|&&w| in_b[w]).count())
            .sum())
    }

    /// Minimum degree `δ(G)`.
    pub fn min_degree(&self) -> Result<usize> {
        self.adj.iter().map(Vec::len).min().ok_or(Error::EmptyGraph)
    }

    /// All non-adjacent pairs `u < v` in lexicographic order.
    pub fn nonadjacent_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            let mut it = self.adj[u].iter().copied().peekable();
            for v in u + 1..self.n {
                while it.peek().is_some_and(|&w| w < v) {
                    it.next();
                }
                if it.peek() != Some(&v) {
                    out.push((u, v));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn p3() -> Graph {
        Graph::new(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn c6() -> Graph {
        Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap()
    }

    fn k23() -> Graph {
        let pairs: Vec<_> = (0..2).flat_map(|u| (2..5).map(move |v| (u, v))).collect();
        Graph::new(5, &pairs).unwrap()
    }

    fn vs(ids: &[usize]) -> VertexSet {
        VertexSet::new(ids.iter().copied())
    }

    #[test]
    fn build_examples() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.degrees(), vec![1, 1]);
        assert_eq!(p3().degrees(), vec![1, 2, 1]);
        assert_eq!(Graph::new(3, &[(0, 0)]), Err(Error::SelfLoop(0)));
    }

    #[test]
    fn build_errors() {
        assert_eq!(Graph::new(3, &[(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(Graph::new(2, &[(0, 2)]), Err(Error::VertexOutOfRange(2)));
    }

    #[test]
    fn edges_are_normalized() {
        let g = Graph::new(4, &[(3, 2), (1, 0), (2, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (2, 3)]);
        assert_eq!(g.neighbors(0), &[1, 2]);
        assert_eq!(g.degree_sum(), 2 * g.edge_count());
    }

    #[test]
    fn degree_excluding_examples() {
        assert_eq!(k4().degree_excluding(0, &VertexSet::empty()), Ok(3));
        assert_eq!(k4().degree_excluding(0, &vs(&[1])), Ok(2));
        assert_eq!(p3().degree_excluding(1, &vs(&[0, 2])), Ok(0));
        assert_eq!(
            p3().degree_excluding(1, &vs(&[1])),
            Err(Error::VertexInExcluded(1))
        );
    }

    #[test]
    fn components_examples() {
        assert_eq!(
            p3().components_excluding(&vs(&[1])).unwrap(),
            vec![vs(&[0]), vs(&[2])]
        );
        assert_eq!(
            k4().components_excluding(&VertexSet::empty()).unwrap(),
            vec![vs(&[0, 1, 2, 3])]
        );
        assert_eq!(
            c6().components_excluding(&vs(&[0, 3])).unwrap(),
            vec![vs(&[1, 2]), vs(&[4, 5])]
        );
    }

    #[test]
    fn edges_between_examples() {
        assert_eq!(k23().edges_between(&vs(&[0, 1]), &vs(&[2, 3, 4])), Ok(6));
        assert_eq!(p3().edges_between(&vs(&[0]), &vs(&[2])), Ok(0));
        assert_eq!(c6().edges_between(&vs(&[0]), &vs(&[1, 5])), Ok(2));
        assert_eq!(
            c6().edges_between(&vs(&[0, 1]), &vs(&[1])),
            Err(Error::OverlappingSets)
        );
    }

    #[test]
    fn min_degree_examples() {
        assert_eq!(k4().min_degree(), Ok(3));
        assert_eq!(k23().min_degree(), Ok(2));
        assert_eq!(Graph::empty(0).min_degree(), Err(Error::EmptyGraph));
    }

    #[test]
    fn nonadjacent_examples() {
        assert!(k4().nonadjacent_pairs().is_empty());
        assert_eq!(p3().nonadjacent_pairs(), vec![(0, 2)]);
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.nonadjacent_pairs(), vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn vertex_set_display_and_mask() {
        assert_eq!(VertexSet::from_mask(0b1011).to_string(), "{0,1,3}");
        assert!(vs(&[0, 2]).is_disjoint(&vs(&[1, 3])));
        assert!(!vs(&[0, 2]).is_disjoint(&vs(&[2])));
    }
}
