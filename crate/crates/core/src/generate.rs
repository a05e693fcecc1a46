//! Deterministic graph generators and small-graph catalogs.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Exact edge probability `num/den`; serialized as the string `"num/den"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Probability {
    pub num: u64,
    pub den: u64,
}

impl Probability {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 || num > den {
            return Err(Error::BadParams(format!("probability {num}/{den} not in [0,1]")));
        }
        Ok(Probability { num, den })
    }

    pub fn one() -> Self {
        Probability { num: 1, den: 1 }
    }

    fn sample(&self, rng: &mut impl Rng) -> bool {
        rng.gen_range(0..self.den) < self.num
    }
}

impl fmt::Display for Probability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl TryFrom<String> for Probability {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Probability> for String {
    fn from(p: Probability) -> String {
        p.to_string()
    }
}

impl FromStr for Probability {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadParams(format!("cannot parse probability {s:?}"));
        match s.split_once('/') {
            Some((n, d)) => Probability::new(
                n.trim().parse().map_err(|_| bad())?,
                d.trim().parse().map_err(|_| bad())?,
            ),
            None => Probability::new(s.trim().parse().map_err(|_| bad())?, 1),
        }
    }
}

/// Graph families understood by [`generate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Model {
    Complete { n: usize },
    Cycle { n: usize },
    Path { n: usize },
    CompleteBipartite { p: usize, q: usize },
    Gnp { n: usize, p: Probability },
}

/// Builds a graph from `model`. Only `Gnp` consumes `seed`; it draws one
/// trial per pair `u < v` in lexicographic order from a ChaCha8 stream.
pub fn generate(model: Model, seed: u64) -> Result<Graph> {
    let g = match model {
        Model::Complete { n } => complete(n),
        Model::Cycle { n } => {
            if n < 3 {
                return Err(Error::BadParams(format!("cycle needs n >= 3, got {n}")));
            }
            let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::new(n, &pairs)?
        }
        Model::Path { n } => {
            let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::new(n, &pairs)?
        }
        Model::CompleteBipartite { p, q } => complete_bipartite(p, q),
        Model::Gnp { n, p } => {
            let p = Probability::new(p.num, p.den)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut pairs = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if p.sample(&mut rng) {
                        pairs.push((u, v));
                    }
                }
            }
            Graph::new(n, &pairs)?
        }
    };
    debug_assert_eq!(g.degree_sum(), 2 * g.edge_count());
    Ok(g)
}

pub fn complete(n: usize) -> Graph {
    let pairs: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::new(n, &pairs).expect("complete graph is simple")
}

/// `K_{p,q}` with left part `0..p` and right part `p..p+q`.
pub fn complete_bipartite(p: usize, q: usize) -> Graph {
    let pairs: Vec<_> = (0..p).flat_map(|u| (p..p + q).map(move |v| (u, v))).collect();
    Graph::new(p + q, &pairs).expect("complete bipartite graph is simple")
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
pub fn petersen() -> Graph {
    let mut pairs = Vec::new();
    for i in 0..5 {
        pairs.push((i, (i + 1) % 5));
        pairs.push((i, i + 5));
        pairs.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, &pairs).expect("petersen graph is simple")
}

/// The `d`-dimensional hypercube `Q_d`.
pub fn hypercube(d: u32) -> Graph {
    let n = 1usize << d;
    let pairs: Vec<_> = (0..n)
        .flat_map(|u| (0..d).map(move |b| (u, u ^ (1 << b))))
        .filter(|&(u, v)| u < v)
        .collect();
    Graph::new(n, &pairs).expect("hypercube is simple")
}

/// Largest order supported by [`graph_catalog`].
pub const CATALOG_MAX_N: usize = 7;

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Graph on `n` vertices whose edges are the bits of `mask` over the pairs
/// `u < v` in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs: Vec<_> = all_pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::new(n, &pairs).expect("mask graph is simple")
}

/// Iterator over all `2^(n(n-1)/2)` labeled graphs on `n` vertices.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let m = n * n.saturating_sub(1) / 2;
    assert!(m < 64, "too many vertex pairs for a mask");
    (0..1u64 << m).map(move |mask| graph_from_mask(n, mask))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// One representative of every isomorphism class of graphs on `n`
/// vertices (the class member with the smallest edge mask), in ascending
/// mask order. Supported for `n <= CATALOG_MAX_N`.
pub fn graph_catalog(n: usize) -> Result<Vec<Graph>> {
    if n > CATALOG_MAX_N {
        return Err(Error::TooLarge { size: n, max: CATALOG_MAX_N });
    }
    let pairs = all_pairs(n);
    let m = pairs.len();
    let mut index = vec![vec![0usize; n]; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        index[u][v] = i;
        index[v][u] = i;
    }
    let edge_maps: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .map(|perm| pairs.iter().map(|&(u, v)| index[perm[u]][perm[v]]).collect())
        .collect();
    let mut seen = vec![false; 1usize << m];
    let mut reps = Vec::new();
    for mask in 0..1u64 << m {
        if seen[mask as usize] {
            continue;
        }
        reps.push(graph_from_mask(n, mask));
        for map in &edge_maps {
            let mut image = 0u64;
            let mut bits = mask;
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                image |= 1 << map[i];
                bits &= bits - 1;
            }
            seen[image as usize] = true;
        }
    }
    Ok(reps)
}

/// Connected members of [`graph_catalog`].
pub fn connected_catalog(n: usize) -> Result<Vec<Graph>> {
    Ok(graph_catalog(n)?.into_iter().filter(Graph::is_connected).collect())
}
