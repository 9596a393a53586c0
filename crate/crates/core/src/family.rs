//! Deterministic enumeration of labeled graph families.

use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{pair_count, Graph};
use crate::set::{GroundSet, VertexSet};

/// Largest `n` swept by [`GraphFamilyKind::AllGraphs`] without an explicit cap.
pub const DEFAULT_ALL_GRAPHS_CAP: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GraphFamilyKind {
    AllGraphs,
    StarForests,
    CycleC5,
    CompleteBipartite23,
    MatchingComplements,
    Complete,
    Empty,
}

impl GraphFamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            GraphFamilyKind::AllGraphs => "AllGraphs",
            GraphFamilyKind::StarForests => "StarForests",
            GraphFamilyKind::CycleC5 => "CycleC5",
            GraphFamilyKind::CompleteBipartite23 => "CompleteBipartite23",
            GraphFamilyKind::MatchingComplements => "MatchingComplements",
            GraphFamilyKind::Complete => "Complete",
            GraphFamilyKind::Empty => "Empty",
        }
    }
}

/// The members of a graph family, ordered by edge code.
///
/// `AllGraphs` is materialized lazily from the edge-code index, so any index
/// range can be handed to a separate worker.
#[derive(Debug, Clone)]
pub enum Family {
    All { ground: GroundSet, len: u64 },
    Listed(Vec<Graph>),
}

impl Family {
    pub fn len(&self) -> u64 {
        match self {
            Family::All { len, .. } => *len,
            Family::Listed(v) => v.len() as u64,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, index: u64) -> Graph {
        match self {
            Family::All { ground, .. } => Graph::from_edge_code(ground.clone(), index),
            Family::Listed(v) => v[index as usize].clone(),
        }
    }

    pub fn range(&self, range: Range<u64>) -> impl Iterator<Item = Graph> + '_ {
        range.map(move |i| self.get(i))
    }

    pub fn iter(&self) -> impl Iterator<Item = Graph> + '_ {
        self.range(0..self.len())
    }

    pub fn into_vec(self) -> Vec<Graph> {
        match self {
            Family::Listed(v) => v,
            all => all.iter().collect(),
        }
    }
}

/// Enumerates a family over `ground`. `cap` bounds `n` for `AllGraphs`
/// (default [`DEFAULT_ALL_GRAPHS_CAP`], never above 11 so edge codes fit a word).
pub fn enumerate_family(kind: GraphFamilyKind, ground: &GroundSet, cap: Option<usize>) -> Result<Family> {
    let n = ground.len();
    let arity = |ok: bool| {
        if ok {
            Ok(())
        } else {
            Err(Error::FamilyArityMismatch {
                family: kind.name(),
                n,
            })
        }
    };
    let mut graphs = match kind {
        GraphFamilyKind::AllGraphs => {
            let cap = cap.unwrap_or(DEFAULT_ALL_GRAPHS_CAP).min(11);
            if n > cap {
                return Err(Error::GroundTooLarge { n, cap });
            }
            return Ok(Family::All {
                ground: ground.clone(),
                len: 1u64 << pair_count(n),
            });
        }
        GraphFamilyKind::StarForests => star_forests(ground),
        GraphFamilyKind::CycleC5 => {
            arity(n == 5)?;
            cycles(ground)
        }
        GraphFamilyKind::CompleteBipartite23 => {
            arity(n == 5)?;
            bipartite_2_3(ground)
        }
        GraphFamilyKind::MatchingComplements => {
            arity(n.is_multiple_of(2))?;
            perfect_matchings(ground.full())
                .into_iter()
                .map(|m| remove_edges(&Graph::complete(ground.clone()), &m))
                .collect()
        }
        GraphFamilyKind::Complete => vec![Graph::complete(ground.clone())],
        GraphFamilyKind::Empty => vec![Graph::empty(ground.clone())],
    };
    graphs.sort();
    graphs.dedup();
    Ok(Family::Listed(graphs))
}

fn remove_edges(g: &Graph, drop: &[(usize, usize)]) -> Graph {
    let edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(a, b)| !drop.contains(&(a.min(b), a.max(b))))
        .collect();
    Graph::from_edges(g.ground().clone(), &edges).expect("subset of valid edges")
}

/// All spanning star forests: set partitions into blocks of size ≥ 2, one
/// center per block of size ≥ 3. A `K₂` block is a single labeled graph.
fn star_forests(ground: &GroundSet) -> Vec<Graph> {
    let mut out = Vec::new();
    let mut edges = Vec::new();
    star_forests_rec(ground, ground.full(), &mut edges, &mut out);
    out
}

fn star_forests_rec(
    ground: &GroundSet,
    remaining: VertexSet,
    edges: &mut Vec<(usize, usize)>,
    out: &mut Vec<Graph>,
) {
    let Some(first) = remaining.first() else {
        out.push(Graph::from_edges(ground.clone(), edges).expect("valid star edges"));
        return;
    };
    let others = remaining.without(first);
    // Every non-empty subset of `others` joins `first` in its block.
    let members: Vec<usize> = others.iter().collect();
    for mask in 1u64..(1u64 << members.len()) {
        let block = VertexSet::from_indices(
            members
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &v)| v),
        )
        .with(first);
        let centers: Vec<usize> = if block.len() == 2 {
            vec![first]
        } else {
            block.iter().collect()
        };
        for center in centers {
            let mark = edges.len();
            edges.extend(block.without(center).iter().map(|leaf| (center, leaf)));
            star_forests_rec(ground, remaining - block, edges, out);
            edges.truncate(mark);
        }
    }
}

fn cycles(ground: &GroundSet) -> Vec<Graph> {
    // Fix vertex 0 and keep one orientation of each cycle.
    let mut out = Vec::new();
    let rest = [1usize, 2, 3, 4];
    for perm in permutations(&rest) {
        if perm[0] > perm[3] {
            continue;
        }
        let order = [0, perm[0], perm[1], perm[2], perm[3]];
        let edges: Vec<(usize, usize)> = (0..5).map(|k| (order[k], order[(k + 1) % 5])).collect();
        out.push(Graph::from_edges(ground.clone(), &edges).expect("valid cycle"));
    }
    out
}

fn bipartite_2_3(ground: &GroundSet) -> Vec<Graph> {
    let mut out = Vec::new();
    for a in 0..5 {
        for b in a + 1..5 {
            let small = VertexSet::singleton(a).with(b);
            let edges: Vec<(usize, usize)> = small
                .iter()
                .flat_map(|x| (ground.full() - small).iter().map(move |y| (x, y)))
                .collect();
            out.push(Graph::from_edges(ground.clone(), &edges).expect("valid bipartite graph"));
        }
    }
    out
}

/// Perfect matchings of `vertices` as lists of pairs.
pub(crate) fn perfect_matchings(vertices: VertexSet) -> Vec<Vec<(usize, usize)>> {
    let Some(first) = vertices.first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    for partner in vertices.without(first).iter() {
        for mut rest in perfect_matchings(vertices.without(first).without(partner)) {
            rest.insert(0, (first, partner));
            out.push(rest);
        }
    }
    out
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn count(kind: GraphFamilyKind, n: usize) -> u64 {
        enumerate_family(kind, &GroundSet::range(n).unwrap(), None)
            .unwrap()
            .len()
    }

    #[test]
    fn family_sizes() {
        assert_eq!(count(GraphFamilyKind::StarForests, 8), 5041);
        assert_eq!(count(GraphFamilyKind::CycleC5, 5), 12);
        assert_eq!(count(GraphFamilyKind::CompleteBipartite23, 5), 10);
        assert_eq!(count(GraphFamilyKind::MatchingComplements, 4), 3);
        assert_eq!(count(GraphFamilyKind::MatchingComplements, 6), 15);
        assert_eq!(count(GraphFamilyKind::AllGraphs, 4), 64);
        assert_eq!(count(GraphFamilyKind::Complete, 3), 1);
        assert_eq!(count(GraphFamilyKind::Empty, 3), 1);
    }

    #[test]
    fn star_forests_match_all_graphs_filter() {
        for n in 1..=6 {
            let ground = GroundSet::range(n).unwrap();
            let generated = enumerate_family(GraphFamilyKind::StarForests, &ground, None)
                .unwrap()
                .into_vec();
            let filtered: Vec<Graph> = enumerate_family(GraphFamilyKind::AllGraphs, &ground, None)
                .unwrap()
                .iter()
                .filter(|g| g.is_star_forest())
                .collect();
            assert_eq!(generated, filtered, "n = {n}");
            let distinct: HashSet<_> = generated.iter().collect();
            assert_eq!(distinct.len(), generated.len());
        }
        assert_eq!(count(GraphFamilyKind::StarForests, 4), 7);
        assert_eq!(count(GraphFamilyKind::StarForests, 5), 35);
    }

    #[test]
    fn c5_and_k23_shapes() {
        let g5 = GroundSet::range(5).unwrap();
        for g in enumerate_family(GraphFamilyKind::CycleC5, &g5, None).unwrap().iter() {
            assert_eq!(g.edge_count(), 5);
            assert!((0..5).all(|x| g.degree(x) == 2));
            assert_eq!(g.components().len(), 1);
        }
        for g in enumerate_family(GraphFamilyKind::CompleteBipartite23, &g5, None)
            .unwrap()
            .iter()
        {
            assert_eq!(g.edge_count(), 6);
            let mut degrees: Vec<usize> = (0..5).map(|x| g.degree(x)).collect();
            degrees.sort();
            assert_eq!(degrees, vec![2, 2, 2, 3, 3]);
        }
    }

    #[test]
    fn arity_and_cap_errors() {
        let g4 = GroundSet::range(4).unwrap();
        assert_eq!(
            enumerate_family(GraphFamilyKind::CycleC5, &g4, None).unwrap_err(),
            Error::FamilyArityMismatch { family: "CycleC5", n: 4 }
        );
        let g5 = GroundSet::range(5).unwrap();
        assert!(matches!(
            enumerate_family(GraphFamilyKind::MatchingComplements, &g5, None),
            Err(Error::FamilyArityMismatch { .. })
        ));
        let g8 = GroundSet::range(8).unwrap();
        assert_eq!(
            enumerate_family(GraphFamilyKind::AllGraphs, &g8, None).unwrap_err(),
            Error::GroundTooLarge { n: 8, cap: 7 }
        );
        assert_eq!(
            enumerate_family(GraphFamilyKind::AllGraphs, &g8, Some(8))
                .unwrap()
                .len(),
            1 << 28
        );
    }

    #[test]
    fn listed_families_sorted_by_edge_code() {
        let g5 = GroundSet::range(5).unwrap();
        let v = enumerate_family(GraphFamilyKind::StarForests, &g5, None)
            .unwrap()
            .into_vec();
        assert!(v.windows(2).all(|w| w[0].edge_code() < w[1].edge_code()));
    }
}
