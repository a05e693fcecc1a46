//! Parity factors of simple graphs.
//!
//! A `(g,f)`-parity factor of `G` is a spanning subgraph `F` with
//! `g(v) <= d_F(v) <= f(v)` and `d_F(v) = f(v) (mod 2)` at every vertex.
//! This crate decides existence in polynomial time through a gadget
//! reduction to perfect matching ([`finder`]), checks the answer against
//! exhaustive oracles built on the deficiency criterion ([`parity`]),
//! evaluates Fan-type degree conditions in exact integer arithmetic
//! ([`conditions`]) and builds the graphs showing those conditions are
//! tight ([`extremal`]). [`experiment`] runs seeded validation sweeps that
//! combine all of these.

pub mod conditions;
pub mod error;
pub mod experiment;
pub mod extremal;
pub mod finder;
pub mod generate;
pub mod graph;
pub mod matching;
pub mod parity;
pub mod reduction;
pub mod text;

pub use conditions::{HypothesisReport, TheoremId};
pub use error::{Error, Result};
pub use experiment::{run_validation, TrialConfig, TrialReport};
pub use finder::{find_parity_factor, verify_factor, FactorOutcome, NoFactorReason};
pub use graph::{Graph, VertexSet};
pub use matching::{maximum_matching, Matching};
pub use parity::{Certificate, ParitySpec};
pub use text::{format_graph_text, parse_graph_text};
