//! The plain-text edge-list format.
//!
//! Line 1 is the header `n m`; the next `m` lines each hold one edge `u v`
//! with 0-based vertex ids. Lines starting with `#` are comments and blank
//! lines are ignored. Ids are 0-based on disk exactly as in memory; a
//! `one_based` switch shifts ids down by one on ingestion for fixtures
//! numbered from 1 (never auto-detected).

use splice_indices::Graph;

use crate::error::CliError;

fn parse_count(token: &str, what: &str, line_no: usize) -> Result<usize, CliError> {
    token
        .parse()
        .map_err(|_| CliError::Parse(format!("line {line_no}: invalid {what} `{token}`")))
}

fn parse_vertex(token: &str, one_based: bool, line_no: usize) -> Result<usize, CliError> {
    let id: usize = token
        .parse()
        .map_err(|_| CliError::Parse(format!("line {line_no}: invalid vertex id `{token}`")))?;
    if one_based {
        id.checked_sub(1).ok_or_else(|| {
            CliError::Parse(format!(
                "line {line_no}: vertex id 0 is invalid in one-based input"
            ))
        })
    } else {
        Ok(id)
    }
}

/// Parses the edge-list format and validates the resulting graph.
pub fn parse(text: &str, one_based: bool) -> Result<Graph, CliError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'));

    let (line_no, header) = lines
        .next()
        .ok_or_else(|| CliError::Parse("empty input: missing `n m` header".into()))?;
    let mut tokens = header.split_whitespace();
    let (n_token, m_token) = match (tokens.next(), tokens.next(), tokens.next()) {
        (Some(n), Some(m), None) => (n, m),
        _ => {
            return Err(CliError::Parse(format!(
                "line {line_no}: header must be `n m`, got `{header}`"
            )))
        }
    };
    let n = parse_count(n_token, "vertex count", line_no)?;
    let m = parse_count(m_token, "edge count", line_no)?;

    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines {
        if edges.len() == m {
            return Err(CliError::Parse(format!(
                "line {line_no}: unexpected content after {m} edges: `{line}`"
            )));
        }
        let mut tokens = line.split_whitespace();
        let (u, v) = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => {
                return Err(CliError::Parse(format!(
                    "line {line_no}: edge line must be `u v`, got `{line}`"
                )))
            }
        };
        edges.push((
            parse_vertex(u, one_based, line_no)?,
            parse_vertex(v, one_based, line_no)?,
        ));
    }
    if edges.len() != m {
        return Err(CliError::Parse(format!(
            "header declares {m} edges but the file lists {}",
            edges.len()
        )));
    }
    Ok(Graph::new(n, &edges)?)
}

/// Serializes a graph in normalized form: parsing the output reproduces the
/// graph exactly, and serializing a parsed normalized file is
/// byte-identical.
pub fn serialize(graph: &Graph) -> String {
    let mut out = format!("{} {}\n", graph.vertex_count(), graph.edge_count());
    for &(u, v) in graph.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use splice_indices::verify::{random_connected_graph, SplitMix64};

    #[test]
    fn parses_with_comments_and_blank_lines() {
        let text = "# a path\n\n3 2\n0 1\n\n# middle comment\n1 2\n";
        let graph = parse(text, false).unwrap();
        assert_eq!(graph.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn one_based_ingestion_shifts_ids() {
        let graph = parse("3 2\n1 2\n2 3\n", true).unwrap();
        assert_eq!(graph.edges(), &[(0, 1), (1, 2)]);
        let err = parse("2 1\n0 1\n", true).unwrap_err();
        assert_eq!(err.exit_code(), 1);
        assert!(err.to_string().contains("one-based"));
    }

    #[test]
    fn parse_errors_are_exit_1() {
        for text in [
            "",
            "3\n",
            "3 2 1\n0 1\n1 2\n",
            "x 2\n0 1\n1 2\n",
            "3 2\n0 1\n",
            "3 2\n0 1\n1 2\n2 0\n",
            "3 2\n0 1 2\n1 2\n",
            "3 2\n0 one\n1 2\n",
        ] {
            let err = parse(text, false).unwrap_err();
            assert_eq!(
                err.exit_code(),
                1,
                "text {text:?} should be a parse error, got {err}"
            );
        }
    }

    #[test]
    fn validation_errors_are_exit_2() {
        let err = parse("2 1\n0 0\n", false).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("self-loop"));
        let err = parse("4 2\n0 1\n2 3\n", false).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("disconnected"));
    }

    #[test]
    fn round_trips() {
        let mut rng = SplitMix64::new(0x10AD);
        for _ in 0..50 {
            let n = 1 + rng.next_below(60) as usize;
            let graph = random_connected_graph(n, rng.next_f64() * 0.5, &mut rng).unwrap();
            let text = serialize(&graph);
            let reparsed = parse(&text, false).unwrap();
            assert_eq!(reparsed, graph);
            assert_eq!(serialize(&reparsed), text);
        }
    }
}
