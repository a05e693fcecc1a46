//! Graphs showing the degree conditions cannot be relaxed.
//!
//! * `K_{ma, mb+1}` misses the pair-degree threshold `an/(a+b)` by less
//!   than one and has no `(a,b)`-parity factor: the `mb+1` right vertices
//!   need at least `a(mb+1)` factor edges but the `ma` left vertices can
//!   carry at most `mab`.
//! * The apex graph: `q = a + ceil((b-a)/a) - 1` disjoint copies of `K_m`
//!   and one extra vertex joined to one vertex of each copy. Its minimum
//!   degree is `q`, and with `m` even each copy is odd against
//!   `T = {apex}`, giving deficiency `-a` at `(∅, {apex})`.

use crate::error::{Error, Result};
use crate::generate::complete_bipartite;
use crate::graph::Graph;

fn check_pair(a: usize, b: usize) -> Result<()> {
    if a == 0 || a > b || (b - a) % 2 != 0 {
        return Err(Error::BadParity { a, b });
    }
    Ok(())
}

/// `K_{ma, mb+1}` with left part `0..ma`.
pub fn build_bipartite_extremal(a: usize, b: usize, m: usize) -> Result<Graph> {
    check_pair(a, b)?;
    if m == 0 {
        return Err(Error::BadM { m, reason: "need m >= 1".into() });
    }
    Ok(complete_bipartite(m * a, m * b + 1))
}

/// Number of cliques in the apex graph, `a + ceil((b-a)/a) - 1`.
pub fn apex_clique_count(a: usize, b: usize) -> usize {
    a + (b - a).div_ceil(a) - 1
}

/// Apex graph on `q*m + 1` vertices: copy `i` of `K_m` spans
/// `i*m..(i+1)*m`, the apex is the last vertex and is adjacent to `i*m`.
pub fn build_apex_extremal(a: usize, b: usize, m: usize) -> Result<Graph> {
    check_pair(a, b)?;
    let q = apex_clique_count(a, b);
    if q == 0 {
        return Err(Error::BadParams(format!(
            "(a,b)=({a},{b}) gives no cliques; the apex graph degenerates to one vertex"
        )));
    }
    if m % 2 == 1 {
        return Err(Error::BadM { m, reason: "m must be even".into() });
    }
    if m < q + 1 {
        return Err(Error::BadM { m, reason: format!("need m >= q+1 = {}", q + 1) });
    }
    let apex = q * m;
    let mut pairs = Vec::with_capacity(q * (m * (m - 1) / 2 + 1));
    for copy in 0..q {
        let base = copy * m;
        for u in 0..m {
            for v in u + 1..m {
                pairs.push((base + u, base + v));
            }
        }
        pairs.push((base, apex));
    }
    Graph::new(apex + 1, &pairs)
}
