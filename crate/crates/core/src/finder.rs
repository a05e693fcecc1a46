//! Decision procedure for `(g,f)`-parity factors.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::perfect_matching_from;
use crate::parity::{certificate_search, Certificate, ParitySpec};
use crate::reduction::{build_gadget, clamp_spec, extract_factor, gadget_node_count};

/// Why no factor exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NoFactorReason {
    /// `g(v) > d(v)` at this vertex.
    InfeasibleVertex(usize),
    /// `Σ g(v)` is odd, so no subgraph has the right degree-sum parity.
    OddLowerSum,
    OddGadget,
    NoPerfectMatching,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum FactorOutcome {
    Factor {
        edges: Vec<(usize, usize)>,
    },
    NoFactor {
        reason: NoFactorReason,
        certificate: Option<Certificate>,
    },
}

impl FactorOutcome {
    pub fn has_factor(&self) -> bool {
        matches!(self, FactorOutcome::Factor { .. })
    }

    pub fn factor(&self) -> Option<&[(usize, usize)]> {
        match self {
            FactorOutcome::Factor { edges } => Some(edges),
            FactorOutcome::NoFactor { .. } => None,
        }
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            FactorOutcome::NoFactor { certificate, .. } => certificate.as_ref(),
            FactorOutcome::Factor { .. } => None,
        }
    }
}

/// Whether `factor` (a set of edges of `graph`) meets the degree and parity
/// bounds of `spec` at every vertex.
pub fn verify_factor(graph: &Graph, spec: &ParitySpec, factor: &[(usize, usize)]) -> Result<bool> {
    spec.check_graph(graph)?;
    let mut seen = vec![false; graph.edge_count()];
    let mut degree = vec![0usize; graph.vertex_count()];
    for &(u, v) in factor {
        let i = graph.edge_index(u, v).ok_or(Error::EdgeNotInGraph(u, v))?;
        if std::mem::replace(&mut seen[i], true) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        degree[u] += 1;
        degree[v] += 1;
    }
    Ok(degree.iter().enumerate().all(|(v, &d)| spec.admits(v, d)))
}

/// Decides whether `graph` has a `(g,f)`-parity factor and returns one if
/// so. Polynomial unless `want_certificate` is set, in which case a
/// violating pair is searched exhaustively for graphs with at most
/// `cert_max_n` vertices.
pub fn find_parity_factor(
    graph: &Graph,
    spec: &ParitySpec,
    want_certificate: bool,
    cert_max_n: usize,
) -> Result<FactorOutcome> {
    spec.check_graph(graph)?;
    let no_factor = |reason| -> Result<FactorOutcome> {
        let certificate = if want_certificate && graph.vertex_count() <= cert_max_n {
            certificate_search(graph, spec, cert_max_n)?
        } else {
            None
        };
        debug_assert!(certificate.as_ref().is_none_or(|c| c.verify(graph, spec)));
        Ok(FactorOutcome::NoFactor { reason, certificate })
    };

    let clamped = clamp_spec(graph, spec)?;
    if let Some(&v) = clamped.infeasible.first() {
        return no_factor(NoFactorReason::InfeasibleVertex(v));
    }
    if spec.lower_sum() % 2 == 1 {
        return no_factor(NoFactorReason::OddLowerSum);
    }
    if gadget_node_count(graph, &clamped) % 2 == 1 {
        return no_factor(NoFactorReason::OddGadget);
    }
    let gg = build_gadget(graph, &clamped)?;
    match perfect_matching_from(&gg.gadget, &gg.seed_matching()) {
        Some(pm) => {
            let edges = extract_factor(&gg, &pm)?;
            assert!(
                verify_factor(graph, spec, &edges)?,
                "extracted factor violates the spec"
            );
            Ok(FactorOutcome::Factor { edges })
        }
        None => no_factor(NoFactorReason::NoPerfectMatching),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, complete_bipartite, generate, Model};
    use crate::parity::DEFAULT_CERT_MAX_N;

    fn uniform(g: &Graph, a: usize, b: usize) -> ParitySpec {
        ParitySpec::uniform(g.vertex_count(), a, b).unwrap()
    }

    fn find(g: &Graph, a: usize, b: usize) -> FactorOutcome {
        find_parity_factor(g, &uniform(g, a, b), true, DEFAULT_CERT_MAX_N).unwrap()
    }

    #[test]
    fn finder_examples() {
        let k4 = complete(4);
        let f = find(&k4, 1, 1);
        assert_eq!(f.factor().unwrap().len(), 2);

        let k25 = complete_bipartite(2, 5);
        let out = find(&k25, 2, 4);
        assert!(!out.has_factor());
        assert!(out.certificate().unwrap().verify(&k25, &uniform(&k25, 2, 4)));

        let c6 = generate(Model::Cycle { n: 6 }, 0).unwrap();
        assert_eq!(find(&c6, 2, 2).factor().unwrap(), c6.edges());
    }

    #[test]
    fn verify_examples() {
        let c6 = generate(Model::Cycle { n: 6 }, 0).unwrap();
        assert_eq!(verify_factor(&c6, &uniform(&c6, 2, 2), c6.edges()), Ok(true));
        let k4 = complete(4);
        let sp = uniform(&k4, 1, 1);
        assert_eq!(verify_factor(&k4, &sp, &[(0, 1), (2, 3)]), Ok(true));
        assert_eq!(verify_factor(&k4, &sp, &[(0, 1), (1, 2)]), Ok(false));
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            verify_factor(&p3, &uniform(&p3, 1, 1), &[(0, 2)]),
            Err(Error::EdgeNotInGraph(0, 2))
        );
        assert!(verify_factor(&k4, &sp, &[(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn early_rejections() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        match find(&p3, 3, 3) {
            FactorOutcome::NoFactor { reason, certificate } => {
                assert_eq!(reason, NoFactorReason::InfeasibleVertex(0));
                assert!(certificate.is_some());
            }
            other => panic!("unexpected {other:?}"),
        }
        match find(&p3, 1, 1) {
            FactorOutcome::NoFactor { reason, .. } => assert_eq!(reason, NoFactorReason::OddLowerSum),
            other => panic!("unexpected {other:?}"),
        }
        // No certificate above the size limit.
        let k = complete_bipartite(6, 13);
        let out = find_parity_factor(&k, &uniform(&k, 2, 4), true, 12).unwrap();
        assert!(!out.has_factor());
        assert!(out.certificate().is_none());
    }

    #[test]
    fn disconnected_input() {
        // Two disjoint triangles have a 2-factor but no perfect matching.
        let g = Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(find(&g, 2, 2).has_factor());
        assert!(!find(&g, 1, 1).has_factor());
        assert!(find(&g, 1, 3).factor().is_none());
    }

    #[test]
    fn general_spec() {
        // Star: center needs degree 1 or 3, three leaves exactly 1, the last
        // leaf 0 or 2 (so 0).
        let star = complete_bipartite(1, 4);
        let sp = ParitySpec::new(vec![1, 1, 1, 1, 0], vec![3, 1, 1, 1, 2]).unwrap();
        let out = find_parity_factor(&star, &sp, false, 12).unwrap();
        assert_eq!(out.factor().unwrap(), &[(0, 1), (0, 2), (0, 3)]);
        // Forcing the last leaf to 1 as well makes the center degree 4.
        let sp = ParitySpec::uniform(5, 1, 3).unwrap();
        assert!(!find_parity_factor(&star, &sp, false, 12).unwrap().has_factor());
    }
}
