//! Plain-text edge-list format.
//!
//! ```text
//! # optional comments, anywhere
//! n m
//! u v
//! ...
//! ```
//!
//! `n` vertices `0..n`, then exactly `m` edge lines of two 0-based ids
//! separated by whitespace. `#` starts a comment that runs to the end of
//! the line. [`format_graph_text`] writes the canonical form: header, then
//! edges `u < v` sorted lexicographically, one space, newline-terminated.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let syntax = |msg: &str| Error::Syntax { line: lineno, msg: msg.to_string() };
    let mut tokens = line.split_whitespace();
    let mut next = || -> Result<usize> {
        tokens
            .next()
            .ok_or_else(|| syntax("expected two integers"))?
            .parse()
            .map_err(|_| syntax("expected a non-negative integer"))
    };
    let x = next()?;
    let y = next()?;
    if tokens.next().is_some() {
        return Err(syntax("trailing tokens"));
    }
    Ok((x, y))
}

pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (header_line, header) = lines.next().ok_or(Error::Syntax {
        line: 1,
        msg: "missing header \"n m\"".into(),
    })?;
    let (n, m) = parse_pair(header, header_line)?;
    let mut pairs = Vec::with_capacity(m);
    for (lineno, line) in lines {
        if pairs.len() == m {
            return Err(Error::Syntax {
                line: lineno,
                msg: format!("more than the {m} edges declared"),
            });
        }
        pairs.push(parse_pair(line, lineno)?);
    }
    if pairs.len() < m {
        return Err(Error::Syntax {
            line: text.lines().count().max(1),
            msg: format!("expected {m} edges, found {}", pairs.len()),
        });
    }
    Graph::new(n, &pairs)
}

pub fn format_graph_text(graph: &Graph) -> String {
    let mut out = String::with_capacity(8 * (graph.edge_count() + 1));
    writeln!(out, "{} {}", graph.vertex_count(), graph.edge_count()).unwrap();
    for &(u, v) in graph.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Model, Probability};
    use proptest::prelude::*;

    #[test]
    fn parse_examples() {
        assert_eq!(
            parse_graph_text("3 2\n0 1\n1 2\n").unwrap(),
            Graph::new(3, &[(0, 1), (1, 2)]).unwrap()
        );
        assert_eq!(parse_graph_text("2 1\n0 1\n").unwrap(), Graph::new(2, &[(0, 1)]).unwrap());
        assert_eq!(parse_graph_text("2 1\n0 2\n"), Err(Error::VertexOutOfRange(2)));
    }

    #[test]
    fn format_examples() {
        assert_eq!(format_graph_text(&Graph::new(2, &[(0, 1)]).unwrap()), "2 1\n0 1\n");
        assert_eq!(
            format_graph_text(&Graph::new(3, &[(2, 1), (1, 0)]).unwrap()),
            "3 2\n0 1\n1 2\n"
        );
        assert_eq!(format_graph_text(&Graph::empty(1)), "1 0\n");
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# a path\n\n3 2  # header\n1 0\n# middle\n2 1\n";
        assert_eq!(parse_graph_text(text).unwrap().edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(parse_graph_text(""), Err(Error::Syntax { line: 1, .. })));
        assert!(matches!(parse_graph_text("3\n"), Err(Error::Syntax { line: 1, .. })));
        assert!(matches!(parse_graph_text("3 1\n0 x\n"), Err(Error::Syntax { line: 2, .. })));
        assert!(matches!(parse_graph_text("3 1\n0 1 2\n"), Err(Error::Syntax { line: 2, .. })));
        assert!(matches!(parse_graph_text("3 2\n0 1\n"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_graph_text("3 1\n0 1\n1 2\n"), Err(Error::Syntax { line: 3, .. })));
        assert!(matches!(parse_graph_text("3 -1\n"), Err(Error::Syntax { line: 1, .. })));
        assert_eq!(parse_graph_text("3 1\n1 1\n"), Err(Error::SelfLoop(1)));
    }

    proptest! {
        #[test]
        fn parse_inverts_format(n in 0usize..25, num in 0u64..=8, seed in any::<u64>()) {
            let p = Probability::new(num, 8).unwrap();
            let g = generate(Model::Gnp { n, p }, seed).unwrap();
            let text = format_graph_text(&g);
            prop_assert_eq!(parse_graph_text(&text).unwrap(), g);
        }

        #[test]
        fn format_canonicalizes(n in 2usize..12, raw in proptest::collection::vec((0usize..12, 0usize..12), 0..30)) {
            let mut pairs: Vec<(usize, usize)> = raw
                .into_iter()
                .map(|(u, v)| (u % n, v % n))
                .filter(|(u, v)| u != v)
                .collect();
            pairs.sort_by_key(|&(u, v)| (u.min(v), u.max(v)));
            pairs.dedup_by_key(|p| (p.0.min(p.1), p.0.max(p.1)));
            let mut text = format!("{} {}\n", n, pairs.len());
            for (u, v) in pairs.iter().rev() {
                text.push_str(&format!("{v} {u}\n"));
            }
            let canonical = format_graph_text(&parse_graph_text(&text).unwrap());
            let again = format_graph_text(&parse_graph_text(&canonical).unwrap());
            prop_assert_eq!(canonical, again);
        }
    }
}
