//! Text (`.hg`) and JSON serialization of hypergraphs.
//!
//! The `.hg` format is line based: a header `n <N>`, then one line
//! `e v1 v2 [v3 ...]` per hyperedge with 1-based vertices. Blank lines and
//! `#` comments are ignored. The JSON mirror is `{"n": N, "edges": [[..]]}`.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

#[derive(Serialize, Deserialize)]
struct HypergraphJson {
    n: u32,
    edges: Vec<Vec<u32>>,
}

pub fn parse_hg(text: &str) -> Result<(u32, Vec<Vec<u32>>)> {
    let mut n: Option<u32> = None;
    let mut edges: Vec<Vec<u32>> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let mut tokens = line.split_whitespace();
        let Some(head) = tokens.next() else { continue };
        match head {
            "n" => {
                let value = tokens
                    .next()
                    .ok_or_else(|| Error::Parse(format!("line {}: missing vertex count", lineno + 1)))?;
                let parsed = value
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("line {}: bad vertex count {value:?}", lineno + 1)))?;
                if n.replace(parsed).is_some() {
                    return Err(Error::Parse(format!("line {}: repeated n header", lineno + 1)));
                }
            }
            "e" => {
                let mut edge = Vec::new();
                for tok in tokens {
                    let v = tok
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("line {}: bad vertex {tok:?}", lineno + 1)))?;
                    edge.push(v);
                }
                if edge.is_empty() {
                    return Err(Error::Parse(format!("line {}: empty edge", lineno + 1)));
                }
                edges.push(edge);
            }
            other => {
                return Err(Error::Parse(format!(
                    "line {}: unknown directive {other:?}",
                    lineno + 1
                )));
            }
        }
    }
    let n = n.ok_or_else(|| Error::Parse("missing `n <N>` header".into()))?;
    Ok((n, edges))
}

pub fn to_hg_string(h: &Hypergraph) -> String {
    let mut out = format!("n {}\n", h.n());
    for e in h.edges() {
        out.push('e');
        for v in e {
            out.push(' ');
            out.push_str(&v.to_string());
        }
        out.push('\n');
    }
    out
}

pub fn parse_json(text: &str) -> Result<(u32, Vec<Vec<u32>>)> {
    let parsed: HypergraphJson =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Ok((parsed.n, parsed.edges))
}

pub fn to_json_string(h: &Hypergraph) -> String {
    serde_json::to_string(&HypergraphJson {
        n: h.n(),
        edges: h.edges().to_vec(),
    })
    .expect("hypergraph serialization cannot fail")
}

/// Parses either format, deciding by the first non-space character, and
/// validates against `sizes` (or the sizes actually present when `None`).
pub fn load_auto(text: &str, sizes: Option<&BTreeSet<usize>>) -> Result<Hypergraph> {
    let (n, edges) = if text.trim_start().starts_with('{') {
        parse_json(text)?
    } else {
        parse_hg(text)?
    };
    match sizes {
        Some(s) => Hypergraph::validate(n, &edges, s),
        None => Hypergraph::from_edges(n, &edges),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_hg_roundtrip() {
        let text = "# a covering example\nn 5\ne 1 2 3\ne 1 4 5   # chain\ne 2 4 5\ne 3 4 5\n";
        let (n, edges) = parse_hg(text).unwrap();
        assert_eq!(n, 5);
        assert_eq!(edges.len(), 4);
        let h = Hypergraph::from_edges(n, &edges).unwrap();
        let again = load_auto(&to_hg_string(&h), None).unwrap();
        assert_eq!(h, again);
    }

    #[test]
    fn parse_json_mirror() {
        let text = r#"{"n": 4, "edges": [[1,2],[1,2,3]]}"#;
        let h = load_auto(text, None).unwrap();
        assert_eq!(h.n(), 4);
        assert_eq!(h.num_edges(), 2);
        let again = load_auto(&to_json_string(&h), None).unwrap();
        assert_eq!(h, again);
    }

    #[test]
    fn parse_errors() {
        assert!(parse_hg("e 1 2\n").is_err()); // missing header
        assert!(parse_hg("n 4\nx 1 2\n").is_err());
        assert!(parse_hg("n 4\ne 1 two\n").is_err());
        assert!(parse_hg("n 4\nn 5\n").is_err());
    }
}
