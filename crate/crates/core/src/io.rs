//! Edge-list, graph6 and DOT formats, plus the prism sidecar header.
//!
//! Edge lists may carry two directive comments that ordinary readers skip:
//! `#!labels ["0","(1,2)",…]` (JSON array of vertex labels) and `#!perm (…)`
//! (cycle notation over those labels).

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::labels::{Label, LabelMap};
use crate::permutation::Permutation;
use crate::prism::PrismGraph;

const GRAPH6_HEADER: &str = ">>graph6<<";

/// A graph read from a file with whatever metadata it carried.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    pub labels: Option<LabelMap>,
    pub perm: Option<Permutation>,
}

impl GraphFile {
    /// Parses a permutation on this file's labels (integer ids when unlabeled).
    pub fn parse_perm(&self, text: &str) -> Result<Permutation> {
        match &self.labels {
            Some(labels) => Permutation::parse_labeled(labels, text),
            None => Permutation::parse(self.graph.n(), text),
        }
    }

    pub fn label_strings(&self) -> Vec<String> {
        match &self.labels {
            Some(l) => l.labels().iter().map(ToString::to_string).collect(),
            None => (0..self.graph.n()).map(|v| v.to_string()).collect(),
        }
    }
}

/// Reads an edge list or a graph6 string, deciding by the first meaningful line.
pub fn read_graph(text: &str) -> Result<GraphFile> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.starts_with(GRAPH6_HEADER) || !l.starts_with(|c: char| c.is_ascii_digit()) => {
            Ok(GraphFile {
                graph: read_graph6(text)?,
                labels: None,
                perm: None,
            })
        }
        _ => read_edge_list(text),
    }
}

fn column_of(line: &str, token: &str) -> usize {
    token.as_ptr() as usize - line.as_ptr() as usize + 1
}

pub fn read_edge_list(text: &str) -> Result<GraphFile> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut labels_directive = None;
    let mut perm_directive = None;
    let mut last_line = 0;

    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let trimmed = line.trim_start();
        if let Some(rest) = trimmed.strip_prefix("#!labels") {
            labels_directive = Some((lineno, column_of(line, rest), rest.trim().to_string()));
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix("#!perm") {
            perm_directive = Some((lineno, column_of(line, rest), rest.trim().to_string()));
            continue;
        }
        let content = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let number = |tok: &str| -> Result<usize> {
            tok.parse().map_err(|_| {
                Error::parse(
                    lineno,
                    column_of(line, tok),
                    format!("expected a vertex count or id, found {tok:?}"),
                )
            })
        };
        if tokens.len() != 2 {
            let tok = tokens.get(2).unwrap_or(&tokens[0]);
            return Err(Error::parse(
                lineno,
                column_of(line, tok),
                format!("expected two numbers, found {} tokens", tokens.len()),
            ));
        }
        let a = number(tokens[0])?;
        let b = number(tokens[1])?;
        match header {
            None => {
                if a > MAX_VERTICES {
                    return Err(Error::TooLarge {
                        n: a,
                        max: MAX_VERTICES,
                    });
                }
                header = Some((a, b));
            }
            Some((n, _)) => {
                for (v, tok) in [(a, tokens[0]), (b, tokens[1])] {
                    if v >= n {
                        return Err(Error::parse(
                            lineno,
                            column_of(line, tok),
                            format!("vertex {v} out of range for n = {n}"),
                        ));
                    }
                }
                if a == b {
                    return Err(Error::parse(
                        lineno,
                        column_of(line, tokens[0]),
                        "self-loop",
                    ));
                }
                edges.push((a, b));
            }
        }
    }

    let (n, m) =
        header.ok_or_else(|| Error::parse(last_line.max(1), 1, "missing \"n m\" header"))?;
    if edges.len() != m {
        return Err(Error::parse(
            last_line.max(1),
            1,
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    let graph = Graph::new(n, edges)?;

    let labels = match labels_directive {
        None => None,
        Some((line, col, json)) => {
            let raw: Vec<String> = serde_json::from_str(&json).map_err(|e| {
                Error::parse(line, col + e.column().saturating_sub(1), e.to_string())
            })?;
            if raw.len() != n {
                return Err(Error::parse(
                    line,
                    col,
                    format!("{} labels for {n} vertices", raw.len()),
                ));
            }
            let parsed = raw
                .iter()
                .map(|s| s.parse::<Label>())
                .collect::<Result<Vec<_>>>()
                .map_err(|e| Error::parse(line, col, e.to_string()))?;
            Some(LabelMap::new(parsed)?)
        }
    };
    let perm = match perm_directive {
        None => None,
        Some((line, col, cycles)) => {
            let parsed = match &labels {
                Some(l) => Permutation::parse_labeled(l, &cycles),
                None => Permutation::parse(n, &cycles),
            };
            Some(parsed.map_err(|e| match e {
                Error::Parse {
                    column, message, ..
                } => Error::parse(line, col + column - 1, message),
                other => other,
            })?)
        }
    };
    Ok(GraphFile {
        graph,
        labels,
        perm,
    })
}

pub fn write_edge_list(g: &Graph, labels: Option<&LabelMap>, perm: Option<&Permutation>) -> String {
    let mut out = String::new();
    if let Some(l) = labels {
        let strings: Vec<String> = l.labels().iter().map(ToString::to_string).collect();
        let json = serde_json::to_string(&strings).expect("strings serialize");
        writeln!(out, "#!labels {json}").unwrap();
    }
    if let Some(p) = perm {
        writeln!(out, "#!perm {}", p.to_cycle_string(labels)).unwrap();
    }
    writeln!(out, "{} {}", g.n(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

fn graph6_size(n: usize) -> Vec<u8> {
    if n <= 62 {
        vec![n as u8 + 63]
    } else if n <= 258_047 {
        vec![
            126,
            ((n >> 12) & 63) as u8 + 63,
            ((n >> 6) & 63) as u8 + 63,
            (n & 63) as u8 + 63,
        ]
    } else {
        let mut out = vec![126, 126];
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
        out
    }
}

/// graph6 encoding (no header, no trailing newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes = graph6_size(n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                bytes.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

pub fn read_graph6(text: &str) -> Result<Graph> {
    let (lineno, line) = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .find(|(_, l)| !l.is_empty())
        .ok_or_else(|| Error::parse(1, 1, "empty graph6 input"))?;
    let (offset, body) = match line.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (GRAPH6_HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(
                lineno,
                offset + i + 1,
                format!("invalid graph6 byte {b:#04x}"),
            ));
        }
    }
    let short = || Error::parse(lineno, offset + body.len() + 1, "truncated graph6 string");
    let six = |range: std::ops::Range<usize>| -> Result<usize> {
        let chunk = body.get(range).ok_or_else(short)?;
        Ok(chunk
            .iter()
            .fold(0, |acc, &b| (acc << 6) | (b - 63) as usize))
    };
    let (n, start) = match body.first() {
        None => return Err(short()),
        Some(126) if body.get(1) == Some(&126) => (six(2..8)?, 8),
        Some(126) => (six(1..4)?, 4),
        Some(&b) => ((b - 63) as usize, 1),
    };
    if n > MAX_VERTICES {
        return Err(Error::TooLarge {
            n,
            max: MAX_VERTICES,
        });
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    if body.len() != start + needed {
        return Err(Error::parse(
            lineno,
            offset + start + 1,
            format!(
                "expected {needed} adjacency bytes for n = {n}, found {}",
                body.len() - start
            ),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[start + k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

/// DOT rendering; `labels` become node labels when given.
pub fn write_dot(g: &Graph, labels: Option<&[String]>) -> String {
    let mut out = String::from("graph G {\n");
    if let Some(labels) = labels {
        for (v, l) in labels.iter().enumerate() {
            writeln!(out, "  {v} [label={}];", serde_json::to_string(l).unwrap()).unwrap();
        }
    } else {
        for v in 0..g.n() {
            writeln!(out, "  {v};").unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// JSON header written next to a prism's edge list or graph6 string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrismSidecar {
    pub n: usize,
    pub perm_image: Vec<usize>,
    pub labels: Vec<String>,
}

impl PrismSidecar {
    pub fn new(prism: &PrismGraph, base_labels: Option<&LabelMap>) -> PrismSidecar {
        PrismSidecar {
            n: prism.base_n(),
            perm_image: prism.perm().image().to_vec(),
            labels: prism.vertex_labels(base_labels),
        }
    }

    /// Rebuilds the prism from its base graph.
    pub fn rebuild(&self, base: &Graph) -> Result<PrismGraph> {
        if base.n() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: base.n(),
            });
        }
        PrismGraph::build(base, &Permutation::from_image(self.perm_image.clone())?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn graph6_reference_vector() {
        // a-c, a-e, b-d, d-e on five vertices
        let g = Graph::new(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&g), "DQc");
        assert_eq!(read_graph6(">>graph6<<DQc\n").unwrap(), g);
        assert_eq!(write_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(write_graph6(&Graph::empty(1).unwrap()), "@");
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(write_graph6(&k2), "A_");
    }

    #[test]
    fn graph6_long_size() {
        let g = Graph::new(100, (1..100).map(|i| (i - 1, i))).unwrap();
        let s = write_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(read_graph6(&s).unwrap(), g);
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(read_graph6("DQ"), Err(Error::Parse { .. })));
        assert!(matches!(
            read_graph6("D Qc"),
            Err(Error::Parse {
                line: 1,
                column: 2,
                ..
            })
        ));
    }

    #[test]
    fn edge_list_basics() {
        let text = "# path\n3 2\n0 1\n\n1 2 # tail\n";
        let f = read_edge_list(text).unwrap();
        assert_eq!(f.graph.degree_sequence(), vec![1, 2, 1]);
        assert!(f.labels.is_none());
        assert_eq!(read_graph(text).unwrap(), f);
    }

    #[test]
    fn edge_list_errors_carry_position() {
        let err = read_edge_list("3 2\n0 1\n1 x\n").unwrap_err();
        assert!(
            matches!(
                err,
                Error::Parse {
                    line: 3,
                    column: 3,
                    ..
                }
            ),
            "{err:?}"
        );
        let err = read_edge_list("3 1\n0 3\n").unwrap_err();
        assert!(
            matches!(
                err,
                Error::Parse {
                    line: 2,
                    column: 3,
                    ..
                }
            ),
            "{err:?}"
        );
        let err = read_edge_list("3 1\n1 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = read_edge_list("3 2\n0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
        assert!(read_edge_list("# nothing\n").is_err());
    }

    #[test]
    fn directives_round_trip() {
        let g = crate::families::sept_path_gadget(3).unwrap();
        let text = write_edge_list(&g.graph, Some(&g.labels), g.canonical_perm.as_ref());
        let f = read_graph(&text).unwrap();
        assert_eq!(f.graph, g.graph);
        assert_eq!(f.labels.as_ref(), Some(&g.labels));
        assert_eq!(f.perm, g.canonical_perm);
        assert_eq!(f.parse_perm("(2 6 (5,1) (3,1))").unwrap(), f.perm.unwrap());
    }

    #[test]
    fn bad_perm_directive() {
        let err = read_edge_list("#!perm (0 5)\n3 0\n").unwrap_err();
        assert!(matches!(err, Error::VertexOutOfRange { .. }), "{err:?}");
        let err = read_edge_list("#!perm (0 1\n3 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err:?}");
    }

    #[test]
    fn dot_output() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let dot = write_dot(&g, Some(&["a".to_string(), "(1,2)".to_string()]));
        assert!(dot.contains("0 -- 1;"));
        assert!(dot.contains("label=\"(1,2)\""));
    }

    #[test]
    fn sidecar_rebuilds_prism() {
        let base = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let perm = Permutation::parse(3, "(0 1)").unwrap();
        let prism = PrismGraph::build(&base, &perm).unwrap();
        let side = PrismSidecar::new(&prism, None);
        let json = serde_json::to_string(&side).unwrap();
        let back: PrismSidecar = serde_json::from_str(&json).unwrap();
        assert_eq!(back.rebuild(&base).unwrap(), prism);
        assert_eq!(back.labels.len(), 6);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..40).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            edges.push((i, j));
                        }
                        k += 1;
                    }
                }
                Graph::new(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn round_trips(g in arb_graph()) {
            prop_assert_eq!(&read_graph6(&write_graph6(&g)).unwrap(), &g);
            prop_assert_eq!(&read_edge_list(&write_edge_list(&g, None, None)).unwrap().graph, &g);
        }
    }
}
