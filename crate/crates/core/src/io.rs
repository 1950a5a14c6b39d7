//! Edge-list text format.
//!
//! ```text
//! # optional comments
//! n 4
//! 0 1
//! 1 2
//! ```
//!
//! Blank lines and lines starting with `#` are skipped. The writer emits no
//! comments, edges as `u v` with `u < v` in lexicographic order, LF endings.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_id(tok: &str, line: usize) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| parse_err(line, format!("expected a vertex id, found {tok:?}")))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = trimmed.split_whitespace().collect();
        match n {
            None => {
                if toks.len() != 2 || toks[0] != "n" {
                    return Err(parse_err(
                        line,
                        format!("expected header \"n <count>\", found {trimmed:?}"),
                    ));
                }
                n = Some(
                    toks[1]
                        .parse()
                        .map_err(|_| parse_err(line, format!("bad vertex count {:?}", toks[1])))?,
                );
            }
            Some(count) => {
                if toks.len() != 2 {
                    return Err(parse_err(
                        line,
                        format!("expected \"u v\", found {trimmed:?}"),
                    ));
                }
                let u = parse_id(toks[0], line)?;
                let v = parse_id(toks[1], line)?;
                for w in [u, v] {
                    if w >= count {
                        return Err(parse_err(
                            line,
                            format!("vertex {w} out of range (n = {count})"),
                        ));
                    }
                }
                if u == v {
                    return Err(parse_err(line, format!("self-loop at vertex {u}")));
                }
                edges.push((u, v));
            }
        }
    }
    let n =
        n.ok_or_else(|| parse_err(text.lines().count().max(1), "missing header \"n <count>\""))?;
    Graph::new(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", g.n()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Whitespace-separated vertex ids. Ids are range-checked against `n`.
pub fn parse_vertex_set(text: &str, n: usize) -> Result<VertexSet> {
    let mut ids = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        for tok in raw.split_whitespace() {
            let v = parse_id(tok, idx + 1)?;
            if v >= n {
                return Err(parse_err(
                    idx + 1,
                    format!("vertex {v} out of range (n = {n})"),
                ));
            }
            ids.push(v);
        }
    }
    Ok(ids.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_edge_list("# a path\nn 3\n\n0 1\n# mid\n2 1\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn writer_is_sorted() {
        let g = Graph::new(4, [(3, 2), (1, 0), (0, 3)]).unwrap();
        assert_eq!(write_edge_list(&g), "n 4\n0 1\n0 3\n2 3\n");
    }

    #[test]
    fn malformed_header_names_line() {
        let err = parse_edge_list("# c\nnodes 3\n0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err:?}");
    }

    #[test]
    fn bad_edge_lines() {
        assert!(matches!(
            parse_edge_list("n 2\n0 2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("n 2\n0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("n 2\n1 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("n 2\n0 x\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(parse_edge_list(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn vertex_set_file() {
        assert_eq!(parse_vertex_set("3 0\n", 4).unwrap(), [0, 3].into());
        assert!(parse_vertex_set("", 4).unwrap().is_empty());
        assert!(parse_vertex_set("0 9", 4).is_err());
    }
}
