//! Interchange formats: graph6, edge-list JSON and DOT.
//!
//! graph6 follows the usual header-less encoding (an optional `>>graph6<<`
//! prefix is accepted on input). Vertices are written in identifier order and
//! read back as `0..n`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

const HEADER: &str = ">>graph6<<";

fn parse_err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse { position: format!("byte {position}"), message: message.into() }
}

pub fn to_graph6(g: &Graph) -> String {
    let (g, _) = g.compact();
    let n = g.vertex_count();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n as Vertex {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

pub fn from_graph6(s: &str) -> Result<Graph> {
    let trimmed = s.trim_end_matches(['\n', '\r']);
    let (offset, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(offset + i, format!("invalid graph6 character {:?}", b as char)));
        }
    }
    let val = |i: usize| (body[i] - 63) as usize;
    let (n, start) = match body {
        [] => return Err(parse_err(offset, "empty graph6 string")),
        [126, 126, ..] => {
            if body.len() < 8 {
                return Err(parse_err(offset + body.len(), "truncated size field"));
            }
            ((2..8).fold(0, |acc, i| (acc << 6) | val(i)), 8)
        }
        [126, ..] => {
            if body.len() < 4 {
                return Err(parse_err(offset + body.len(), "truncated size field"));
            }
            ((1..4).fold(0, |acc, i| (acc << 6) | val(i)), 4)
        }
        _ => (val(0), 1),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    let got = body.len() - start;
    if got != expected {
        return Err(parse_err(
            offset + body.len().min(start + expected),
            format!("expected {expected} adjacency bytes for {n} vertices, found {got}"),
        ));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = val(start + k / 6);
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i as Vertex, j as Vertex)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// `{"n": …, "edges": [[u, v], …]}`. When identifiers are not `0..n` an extra
/// `"vertices"` array lists them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeListJson {
    pub n: usize,
    pub edges: Vec<[Vertex; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<Vertex>>,
}

impl EdgeListJson {
    pub fn from_graph(g: &Graph) -> Self {
        let ids: Vec<Vertex> = g.vertices().collect();
        let contiguous = ids.iter().enumerate().all(|(i, &v)| v as usize == i);
        EdgeListJson {
            n: ids.len(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            vertices: (!contiguous).then_some(ids),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        match &self.vertices {
            Some(vs) => {
                if vs.len() != self.n {
                    return Err(Error::input(format!("\"n\" is {} but {} vertices are listed", self.n, vs.len())));
                }
                Graph::from_parts(vs.iter().copied(), self.edges.iter().map(|e| (e[0], e[1])))
            }
            None => Graph::from_edges(self.n, self.edges.iter().map(|e| (e[0], e[1]))),
        }
    }
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(&EdgeListJson::from_graph(g)).expect("edge lists serialize")
}

pub fn from_json(s: &str) -> Result<Graph> {
    let parsed: EdgeListJson = serde_json::from_str(s).map_err(json_error)?;
    parsed.to_graph()
}

pub(crate) fn json_error(e: serde_json::Error) -> Error {
    Error::Parse { position: format!("line {} column {}", e.line(), e.column()), message: e.to_string() }
}

/// Reads either format: JSON when the first non-blank character is `{`,
/// graph6 otherwise.
pub fn read_graph(s: &str) -> Result<Graph> {
    let t = s.trim_start();
    if t.starts_with('{') {
        from_json(t)
    } else {
        from_graph6(t.trim())
    }
}

/// DOT for `g`; `labels` adds a `label` attribute (for example a color) per vertex.
pub fn to_dot(g: &Graph, labels: Option<&BTreeMap<Vertex, String>>) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        match labels.and_then(|l| l.get(&v)) {
            Some(label) => writeln!(out, "  {v} [label=\"{v}:{label}\"];").unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_known_strings() {
        // C4 as 0-1-2-3-0 and K4.
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(to_graph6(&c4), "Cl");
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(to_graph6(&k4), "C~");
        assert_eq!(from_graph6("C~").unwrap(), k4);
        assert_eq!(from_graph6(">>graph6<<Cl\n").unwrap(), c4);
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(from_graph6("?").unwrap().vertex_count(), 0);
    }

    #[test]
    fn graph6_large_size_field() {
        let mut g = Graph::empty(70);
        g.add_edge(0, 69).unwrap();
        g.add_edge(33, 34).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn graph6_errors_carry_positions() {
        match from_graph6("C~~") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, "byte 2"),
            other => panic!("{other:?}"),
        }
        match from_graph6("C l") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, "byte 1"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn json_round_trip_and_errors() {
        let g = Graph::from_parts([3, 7, 9], [(3, 7), (7, 9)]).unwrap();
        let s = to_json(&g);
        assert!(s.contains("\"vertices\""));
        assert_eq!(from_json(&s).unwrap(), g);
        let plain = from_json(r#"{"n":3,"edges":[[0,1],[1,2]]}"#).unwrap();
        assert_eq!(plain.edge_count(), 2);
        assert!(matches!(from_json("{\"n\":3,\n\"edges\":[[0,1]"), Err(Error::Parse { .. })));
        assert!(matches!(from_json(r#"{"n":2,"edges":[[0,5]]}"#), Err(Error::UnknownVertex(5))));
    }

    #[test]
    fn dot_output() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let dot = to_dot(&g, None);
        assert!(dot.contains("0 -- 1;"));
        let labels = BTreeMap::from([(0, "1".to_string())]);
        assert!(to_dot(&g, Some(&labels)).contains("0 [label=\"0:1\"]"));
    }
}
