//! Text and JSON documents for hypergraphs and graphs.
//!
//! Text: a `ground: a,b,c` line, then one item per line (`a,b` for a
//! hypergraph edge, `a-b` for a graph edge). Blank lines and lines starting
//! with `#` are ignored. JSON: `{"ground":[..],"edges":[[..],..]}`.

use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::set::{GroundSet, VertexSet};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Non-blank, non-comment lines with their 1-based line numbers; the first
/// must be the ground declaration.
fn content_lines(text: &str) -> Result<(GroundSet, Vec<(usize, &str)>)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line, header) = lines.next().ok_or_else(|| parse_err(1, "missing `ground:` line"))?;
    let rest = header
        .strip_prefix("ground:")
        .ok_or_else(|| parse_err(line, "expected `ground: a,b,...`"))?;
    let labels: Vec<&str> = rest.split(',').map(str::trim).collect();
    if labels.iter().any(|l| l.is_empty()) {
        return Err(parse_err(line, "empty label in ground set"));
    }
    let ground = GroundSet::new(labels)?;
    Ok((ground, lines.collect()))
}

fn lookup(ground: &GroundSet, line: usize, label: &str) -> Result<usize> {
    ground
        .index_of(label)
        .ok_or_else(|| parse_err(line, format!("unknown label `{label}`")))
}

fn build_hypergraph(ground: GroundSet, family: Vec<VertexSet>, minimize: bool) -> Result<Hypergraph> {
    if minimize {
        Hypergraph::minimize(ground, family)
    } else {
        let mut family = family;
        family.sort_unstable();
        if family.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::NotAnAntichain);
        }
        Hypergraph::new(ground, family)
    }
}

/// Parses the text hypergraph format. Without `minimize`, a family that is
/// not an antichain is rejected.
pub fn parse_hypergraph_text(text: &str, minimize: bool) -> Result<Hypergraph> {
    let (ground, lines) = content_lines(text)?;
    let mut family = Vec::with_capacity(lines.len());
    for (line, content) in lines {
        let mut set = VertexSet::EMPTY;
        for label in content.split(',').map(str::trim) {
            if label.is_empty() {
                return Err(parse_err(line, "empty label in edge"));
            }
            set = set.with(lookup(&ground, line, label)?);
        }
        family.push(set);
    }
    build_hypergraph(ground, family, minimize)
}

/// Parses the text graph format. Edges may also share a line when separated
/// by commas or whitespace.
pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let (ground, lines) = content_lines(text)?;
    let mut edges = Vec::new();
    for (line, content) in lines {
        for item in content.split(|c: char| c == ',' || c.is_whitespace()) {
            if item.is_empty() {
                continue;
            }
            let (a, b) = item
                .split_once('-')
                .ok_or_else(|| parse_err(line, format!("expected an edge `a-b`, got `{item}`")))?;
            let (a, b) = (a.trim(), b.trim());
            if a == b {
                return Err(Error::InvalidEdge(a.into(), b.into()));
            }
            edges.push((lookup(&ground, line, a)?, lookup(&ground, line, b)?));
        }
    }
    Graph::from_edges(ground, &edges)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    ground: Vec<String>,
    edges: Vec<Vec<String>>,
}

fn parse_raw(text: &str) -> Result<(GroundSet, Vec<Vec<String>>)> {
    let raw: RawDocument =
        serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))?;
    Ok((GroundSet::new(raw.ground)?, raw.edges))
}

fn json_lookup(ground: &GroundSet, label: &str) -> Result<usize> {
    ground
        .index_of(label)
        .ok_or_else(|| Error::UnknownLabel(label.into()))
}

pub fn parse_hypergraph_json(text: &str, minimize: bool) -> Result<Hypergraph> {
    let (ground, raw) = parse_raw(text)?;
    let mut family = Vec::with_capacity(raw.len());
    for edge in raw {
        let mut set = VertexSet::EMPTY;
        for label in &edge {
            set = set.with(json_lookup(&ground, label)?);
        }
        family.push(set);
    }
    build_hypergraph(ground, family, minimize)
}

pub fn parse_graph_json(text: &str) -> Result<Graph> {
    let (ground, raw) = parse_raw(text)?;
    let mut edges = Vec::with_capacity(raw.len());
    for edge in raw {
        match edge.as_slice() {
            [a, b] if a != b => edges.push((json_lookup(&ground, a)?, json_lookup(&ground, b)?)),
            [a, b] => return Err(Error::InvalidEdge(a.clone(), b.clone())),
            _ => return Err(parse_err(1, "graph edges must be label pairs")),
        }
    }
    Graph::from_edges(ground, &edges)
}

fn looks_like_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

/// Either format, chosen by the first non-blank character.
pub fn parse_hypergraph(text: &str, minimize: bool) -> Result<Hypergraph> {
    if looks_like_json(text) {
        parse_hypergraph_json(text, minimize)
    } else {
        parse_hypergraph_text(text, minimize)
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    if looks_like_json(text) {
        parse_graph_json(text)
    } else {
        parse_graph_text(text)
    }
}

fn ground_line(ground: &GroundSet) -> String {
    format!("ground: {}\n", ground.labels().join(","))
}

pub fn format_hypergraph_text(h: &Hypergraph) -> String {
    let mut out = ground_line(h.ground());
    for &e in h.edges() {
        out.push_str(&h.ground().labels_of(e).join(","));
        out.push('\n');
    }
    out
}

pub fn format_graph_text(g: &Graph) -> String {
    let mut out = ground_line(g.ground());
    for (a, b) in g.edges() {
        out.push_str(&format!("{}-{}\n", g.ground().label(a), g.ground().label(b)));
    }
    out
}

impl Serialize for GroundSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.labels().serialize(s)
    }
}

impl Serialize for Hypergraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let edges: Vec<Vec<&str>> = self
            .edges()
            .iter()
            .map(|&e| self.ground().labels_of(e))
            .collect();
        let mut st = s.serialize_struct("Hypergraph", 2)?;
        st.serialize_field("ground", self.ground())?;
        st.serialize_field("edges", &edges)?;
        st.end()
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let edges: Vec<[&str; 2]> = self
            .edges()
            .into_iter()
            .map(|(a, b)| [self.ground().label(a), self.ground().label(b)])
            .collect();
        let mut st = s.serialize_struct("Graph", 2)?;
        st.serialize_field("ground", self.ground())?;
        st.serialize_field("edges", &edges)?;
        st.end()
    }
}

pub fn hypergraph_json(h: &Hypergraph) -> String {
    serde_json::to_string(h).expect("hypergraphs serialize")
}

pub fn graph_json(g: &Graph) -> String {
    serde_json::to_string(g).expect("graphs serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{graph, hg};

    #[test]
    fn parse_examples() {
        let h = parse_hypergraph_text("ground: 1,2,3\n1,2\n3\n", false).unwrap();
        assert_eq!(h, hg(3, &[&[3], &[1, 2]]));
        assert_eq!(h.to_string(), "{{3},{1,2}}");

        assert_eq!(
            parse_hypergraph_text("ground: 1,2\n1\n1,2\n", false),
            Err(Error::NotAnAntichain)
        );
        assert_eq!(
            parse_hypergraph_text("ground: 1,2\n1\n1,2\n", true).unwrap(),
            hg(2, &[&[1]])
        );
        assert_eq!(
            parse_hypergraph_text("ground: 1,2\n1\n1\n", false),
            Err(Error::NotAnAntichain)
        );

        let g = parse_graph_text("ground: 1,2,3\n1-2\n").unwrap();
        assert_eq!(g, graph(3, &[(1, 2)]));
        assert_eq!(g.isolated_vertices().len(), 1);
        assert_eq!(parse_graph_text("ground: 1,2,3\n").unwrap().edge_count(), 0);
    }

    #[test]
    fn comments_and_errors_carry_lines() {
        let h = parse_hypergraph_text("# comment\n\nground: a,b\n# x\na\nb\n", false).unwrap();
        assert_eq!(h.len(), 2);
        assert_eq!(
            parse_hypergraph_text("ground: 1,2\n1\n3\n", false),
            Err(Error::Parse {
                line: 3,
                message: "unknown label `3`".into()
            })
        );
        assert!(matches!(
            parse_hypergraph_text("1,2\n", false),
            Err(Error::Parse { line: 1, .. })
        ));
        assert_eq!(
            parse_hypergraph_text("ground: 1,1\n1\n", false),
            Err(Error::DuplicateLabel("1".into()))
        );
        assert!(matches!(
            parse_graph_text("ground: 1,2\n1+2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(parse_graph_text("ground: 1,2\n1-1\n"), Err(Error::InvalidEdge(..))));
    }

    #[test]
    fn json_round_trip() {
        let h = hg(3, &[&[3], &[1, 2]]);
        let text = hypergraph_json(&h);
        assert_eq!(text, r#"{"ground":["1","2","3"],"edges":[["3"],["1","2"]]}"#);
        assert_eq!(parse_hypergraph(&text, false).unwrap(), h);

        let g = graph(4, &[(1, 2), (3, 4)]);
        let text = graph_json(&g);
        assert_eq!(text, r#"{"ground":["1","2","3","4"],"edges":[["1","2"],["3","4"]]}"#);
        assert_eq!(parse_graph(&text).unwrap(), g);
        assert!(matches!(parse_graph("{\"ground\":[\"1\"]"), Err(Error::Parse { .. })));
    }

    #[test]
    fn text_round_trip() {
        let h = hg(4, &[&[1], &[2, 3], &[2, 4]]);
        assert_eq!(parse_hypergraph(&format_hypergraph_text(&h), false).unwrap(), h);
        let g = graph(4, &[(1, 4), (2, 3)]);
        assert_eq!(format_graph_text(&g), "ground: 1,2,3,4\n1-4\n2-3\n");
        assert_eq!(parse_graph(&format_graph_text(&g)).unwrap(), g);
    }
}
