use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::set::{GroundSet, VertexSet};

/// Set over `{1..n}` given by 1-based labels.
pub fn set(members: &[usize]) -> VertexSet {
    VertexSet::from_indices(members.iter().map(|&m| m - 1))
}

pub fn hg(n: usize, edges: &[&[usize]]) -> Hypergraph {
    let ground = GroundSet::range(n).unwrap();
    Hypergraph::new(ground, edges.iter().map(|e| set(e)).collect()).unwrap()
}

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    let ground = GroundSet::range(n).unwrap();
    let edges: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
    Graph::from_edges(ground, &edges).unwrap()
}
