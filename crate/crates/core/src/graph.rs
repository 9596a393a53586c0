//! Labeled simple graphs and their domination structure.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::hypergraph::{minimize_sets, transversal_sets, Hypergraph};
use crate::set::{GroundSet, VertexSet};

/// A simple undirected graph whose vertex set is a whole ground set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    ground: GroundSet,
    adj: Vec<VertexSet>,
}

/// Position of the pair `i < j` in the lexicographic list of all pairs.
pub fn edge_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl Graph {
    pub fn empty(ground: GroundSet) -> Self {
        let n = ground.len();
        Graph {
            ground,
            adj: vec![VertexSet::EMPTY; n],
        }
    }

    pub fn complete(ground: GroundSet) -> Self {
        let full = ground.full();
        let adj = (0..ground.len()).map(|x| full.without(x)).collect();
        Graph { ground, adj }
    }

    pub fn from_edges(ground: GroundSet, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(ground);
        for &(a, b) in edges {
            let n = g.order();
            if a == b || a >= n || b >= n {
                let name = |v: usize| {
                    if v < n {
                        g.ground.label(v).to_string()
                    } else {
                        v.to_string()
                    }
                };
                return Err(Error::InvalidEdge(name(a), name(b)));
            }
            g.adj[a] = g.adj[a].with(b);
            g.adj[b] = g.adj[b].with(a);
        }
        Ok(g)
    }

    /// Builds the graph whose edges are the set bits of `code`, pair `i < j`
    /// at bit [`edge_index`]. Requires `C(n,2) ≤ 64`.
    pub fn from_edge_code(ground: GroundSet, code: u64) -> Self {
        let n = ground.len();
        debug_assert!(pair_count(n) <= 64);
        let mut adj = vec![VertexSet::EMPTY; n];
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if code >> bit & 1 == 1 {
                    adj[i] = adj[i].with(j);
                    adj[j] = adj[j].with(i);
                }
                bit += 1;
            }
        }
        Graph { ground, adj }
    }

    /// Edge set as a little-endian multiword bitmask over [`edge_index`].
    pub fn edge_code_words(&self) -> Vec<u64> {
        let n = self.order();
        let mut words = vec![0u64; pair_count(n).div_ceil(64).max(1)];
        for (i, j) in self.edges() {
            let k = edge_index(n, i, j);
            words[k / 64] |= 1 << (k % 64);
        }
        words
    }

    /// Single-word edge code, when `C(n,2) ≤ 64`.
    pub fn edge_code(&self) -> Option<u64> {
        (pair_count(self.order()) <= 64).then(|| self.edge_code_words()[0])
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        self.ground.full()
    }

    pub fn neighbors(&self, x: usize) -> VertexSet {
        self.adj[x]
    }

    /// `N[x] = N(x) ∪ {x}`.
    pub fn closed_neighborhood(&self, x: usize) -> VertexSet {
        self.adj[x].with(x)
    }

    pub fn degree(&self, x: usize) -> usize {
        self.adj[x].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    /// Edges as index pairs `(i, j)` with `i < j`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &a) in self.adj.iter().enumerate() {
            for j in a.iter().filter(|&j| j > i) {
                out.push((i, j));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// `E(G)` as a 2-uniform hypergraph, absent for edgeless graphs.
    pub fn edge_hypergraph(&self) -> Option<Hypergraph> {
        let edges: Vec<VertexSet> = self
            .edges()
            .into_iter()
            .map(|(i, j)| VertexSet::singleton(i).with(j))
            .collect();
        (!edges.is_empty()).then(|| Hypergraph::new(self.ground.clone(), edges).unwrap())
    }

    /// Copy with the extra edges added.
    pub fn with_edges(&self, extra: &[(usize, usize)]) -> Result<Graph> {
        let mut edges = self.edges();
        edges.extend_from_slice(extra);
        Graph::from_edges(self.ground.clone(), &edges)
    }

    /// `𝒩[G]`: inclusion-minimal closed neighborhoods.
    pub fn minimal_closed_neighborhoods(&self) -> Hypergraph {
        let family = (0..self.order()).map(|x| self.closed_neighborhood(x)).collect();
        Hypergraph::from_canonical(self.ground.clone(), minimize_sets(family))
    }

    pub fn is_dominating(&self, d: VertexSet) -> Result<bool> {
        if !self.ground.contains_set(d) {
            return Err(Error::OutOfGround);
        }
        Ok(self.dominated_by(d) == self.vertices())
    }

    pub(crate) fn dominated_by(&self, d: VertexSet) -> VertexSet {
        d.iter()
            .fold(VertexSet::EMPTY, |acc, x| acc | self.closed_neighborhood(x))
    }

    /// `𝒟(G) = tr(𝒩[G])`.
    pub fn minimal_dominating_sets(&self) -> Hypergraph {
        let nbhd: Vec<VertexSet> = minimize_sets(
            (0..self.order()).map(|x| self.closed_neighborhood(x)).collect(),
        );
        Hypergraph::from_canonical(self.ground.clone(), transversal_sets(&nbhd))
    }

    /// `V₀(G)`.
    pub fn isolated_vertices(&self) -> VertexSet {
        VertexSet::from_indices((0..self.order()).filter(|&x| self.adj[x].is_empty()))
    }

    /// Vertices adjacent to every other vertex.
    pub fn universal_vertices(&self) -> VertexSet {
        let full = self.vertices();
        VertexSet::from_indices((0..self.order()).filter(|&x| self.closed_neighborhood(x) == full))
    }

    /// `G₁ + ⋯ + G_r` on the concatenated ground set.
    pub fn disjoint_union(gs: &[Graph]) -> Result<Graph> {
        Self::combine(gs, false)
    }

    /// `G₁ ∨ ⋯ ∨ G_r`: disjoint union plus every edge between different parts.
    pub fn join(gs: &[Graph]) -> Result<Graph> {
        Self::combine(gs, true)
    }

    fn combine(gs: &[Graph], cross: bool) -> Result<Graph> {
        if gs.len() < 2 {
            return Err(Error::TooFewOperands(2));
        }
        let grounds: Vec<&GroundSet> = gs.iter().map(|g| &g.ground).collect();
        let ground = GroundSet::concat(&grounds)?;
        let mut adj = Vec::with_capacity(ground.len());
        let mut offset = 0;
        for g in gs {
            let part = VertexSet::from_bits(g.ground.full().bits() << offset);
            for a in &g.adj {
                let mut row = VertexSet::from_bits(a.bits() << offset);
                if cross {
                    row = row | (ground.full() - part);
                }
                adj.push(row);
            }
            offset += g.order();
        }
        Ok(Graph { ground, adj })
    }

    /// Moves the graph onto another ground set with the same labels.
    pub fn relabel(&self, ground: &GroundSet) -> Result<Graph> {
        let map: Vec<usize> = self
            .ground
            .labels()
            .iter()
            .map(|l| ground.index_of(l).ok_or_else(|| Error::UnknownLabel(l.clone())))
            .collect::<Result<_>>()?;
        if ground.len() != self.order() {
            return Err(Error::GroundMismatch);
        }
        let edges: Vec<(usize, usize)> = self.edges().into_iter().map(|(a, b)| (map[a], map[b])).collect();
        Graph::from_edges(ground.clone(), &edges)
    }

    /// Induced subgraph on `within`, re-grounded on its members.
    pub fn induced(&self, within: VertexSet) -> Result<Graph> {
        let ground = self.ground.subset(within)?;
        let adj = within
            .iter()
            .map(|x| (self.adj[x] & within).compress(within))
            .collect();
        Ok(Graph { ground, adj })
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for start in 0..self.order() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let reach = frontier.iter().fold(VertexSet::EMPTY, |acc, x| acc | self.adj[x]);
                frontier = reach - comp;
                comp = comp | reach;
            }
            seen = seen | comp;
            out.push(comp);
        }
        out
    }

    /// Disjoint union of stars without isolated vertices, tested through
    /// `𝒩[G] = E(G)`.
    pub fn is_star_forest(&self) -> bool {
        if !self.isolated_vertices().is_empty() {
            return false;
        }
        match self.edge_hypergraph() {
            Some(e) => self.minimal_closed_neighborhoods() == e,
            None => false,
        }
    }

    /// A spanning star forest of a graph without isolated vertices.
    ///
    /// Each component gets a spanning tree grown from its smallest vertex by
    /// always adding the lexicographically smallest boundary edge. A tree that
    /// is not a star is split by deleting the first edge on the path between
    /// its two smallest vertices of degree at least two, and both halves are
    /// processed again.
    pub fn spanning_star_forest(&self) -> Result<Graph> {
        if let Some(v) = self.isolated_vertices().first() {
            return Err(Error::HasIsolatedVertex(self.ground.label(v).to_string()));
        }
        let mut kept = Vec::new();
        for comp in self.components() {
            let tree = self.lex_spanning_tree(comp);
            split_into_stars(self.order(), tree, &mut kept);
        }
        Graph::from_edges(self.ground.clone(), &kept)
    }

    fn lex_spanning_tree(&self, comp: VertexSet) -> Vec<(usize, usize)> {
        let mut inside = VertexSet::singleton(comp.first().expect("non-empty component"));
        let mut tree = Vec::new();
        while inside != comp {
            let best = inside
                .iter()
                .flat_map(|u| (self.adj[u] - inside).iter().map(move |w| (u.min(w), u.max(w))))
                .min()
                .expect("component is connected");
            inside = inside.with(best.0).with(best.1);
            tree.push(best);
        }
        tree
    }

    /// Admissible centers of each component of a star forest (both ends of
    /// a `K₂`), or `None` when the graph is not a star forest.
    pub(crate) fn star_centers(&self) -> Option<Vec<Vec<usize>>> {
        if !self.is_star_forest() {
            return None;
        }
        let centers = self
            .components()
            .into_iter()
            .map(|comp| {
                if comp.len() == 2 {
                    comp.iter().collect()
                } else {
                    comp.iter().filter(|&x| self.degree(x) >= 2).collect()
                }
            })
            .collect();
        Some(centers)
    }
}

fn split_into_stars(n: usize, tree: Vec<(usize, usize)>, out: &mut Vec<(usize, usize)>) {
    let mut degree = vec![0usize; n];
    for &(a, b) in &tree {
        degree[a] += 1;
        degree[b] += 1;
    }
    let hubs: Vec<usize> = (0..n).filter(|&v| degree[v] >= 2).collect();
    if hubs.len() <= 1 {
        out.extend(tree);
        return;
    }
    let (a, b) = (hubs[0], hubs[1]);
    let path = tree_path(n, &tree, a, b);
    let cut = (path[0].min(path[1]), path[0].max(path[1]));
    let rest: Vec<(usize, usize)> = tree.into_iter().filter(|&e| e != cut).collect();
    let side_a = reachable(n, &rest, a);
    let (left, right): (Vec<_>, Vec<_>) = rest.into_iter().partition(|&(u, _)| side_a.contains(u));
    split_into_stars(n, left, out);
    split_into_stars(n, right, out);
}

fn tree_path(n: usize, tree: &[(usize, usize)], from: usize, to: usize) -> Vec<usize> {
    let mut parent = vec![usize::MAX; n];
    parent[from] = from;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        for &(a, b) in tree {
            let w = if a == u {
                b
            } else if b == u {
                a
            } else {
                continue;
            };
            if parent[w] == usize::MAX {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![to];
    let mut cur = to;
    while cur != from {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    path
}

fn reachable(n: usize, edges: &[(usize, usize)], start: usize) -> VertexSet {
    let mut seen = VertexSet::singleton(start);
    loop {
        let mut grew = false;
        for &(a, b) in edges {
            if seen.contains(a) != seen.contains(b) {
                seen = seen.with(a).with(b);
                grew = true;
            }
        }
        if !grew {
            debug_assert!(seen.is_subset(VertexSet::full(n)));
            return seen;
        }
    }
}

impl PartialOrd for Graph {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Graphs on one ground set compare by the integer value of their edge code.
impl Ord for Graph {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ground.cmp(&other.ground).then_with(|| {
            let a = self.edge_code_words();
            let b = other.edge_code_words();
            a.iter().rev().cmp(b.iter().rev())
        })
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(a, b)| format!("{}-{}", self.ground.label(a), self.ground.label(b)))
            .collect();
        write!(f, "[{}]", edges.join(" "))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{graph, hg, set};

    fn c5() -> Graph {
        graph(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)])
    }

    #[test]
    fn edge_index_is_lexicographic() {
        let n = 5;
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                assert_eq!(edge_index(n, i, j), k);
                k += 1;
            }
        }
        let g = c5();
        assert_eq!(Graph::from_edge_code(g.ground().clone(), g.edge_code().unwrap()), g);
    }

    #[test]
    fn neighborhoods_examples() {
        let star_forest = graph(5, &[(1, 2), (3, 4), (3, 5)]);
        assert_eq!(
            star_forest.minimal_closed_neighborhoods(),
            star_forest.edge_hypergraph().unwrap()
        );
        let empty = Graph::empty(GroundSet::range(3).unwrap());
        assert_eq!(
            empty.minimal_closed_neighborhoods(),
            hg(3, &[&[1], &[2], &[3]])
        );
        assert_eq!(
            c5().minimal_closed_neighborhoods(),
            hg(5, &[&[5, 1, 2], &[1, 2, 3], &[2, 3, 4], &[3, 4, 5], &[4, 5, 1]])
        );
    }

    #[test]
    fn is_dominating_examples() {
        let g = c5();
        assert!(g.is_dominating(g.vertices()).unwrap());
        let k = Graph::complete(GroundSet::range(4).unwrap());
        for x in 0..4 {
            assert!(k.is_dominating(VertexSet::singleton(x)).unwrap());
        }
        let iso = graph(3, &[(1, 2)]);
        assert!(!iso.is_dominating(set(&[1, 2])).unwrap());
        assert_eq!(iso.is_dominating(set(&[4])), Err(Error::OutOfGround));
    }

    #[test]
    fn minimal_dominating_sets_examples() {
        let g = graph(4, &[(1, 2), (3, 4)]);
        assert_eq!(
            g.minimal_dominating_sets(),
            hg(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]])
        );
        let g0 = graph(8, &[(1, 2), (3, 4), (5, 6), (5, 7), (5, 8)]);
        assert_eq!(
            g0.minimal_dominating_sets(),
            hg(
                8,
                &[
                    &[1, 3, 5],
                    &[1, 3, 6, 7, 8],
                    &[1, 4, 5],
                    &[1, 4, 6, 7, 8],
                    &[2, 3, 5],
                    &[2, 3, 6, 7, 8],
                    &[2, 4, 5],
                    &[2, 4, 6, 7, 8],
                ]
            )
        );
        let empty = Graph::empty(GroundSet::range(4).unwrap());
        assert_eq!(empty.minimal_dominating_sets(), hg(4, &[&[1, 2, 3, 4]]));
    }

    #[test]
    fn isolated_vertices_examples() {
        let g4 = GroundSet::range(4).unwrap();
        assert_eq!(Graph::empty(g4.clone()).isolated_vertices(), g4.full());
        assert_eq!(Graph::complete(g4).isolated_vertices(), VertexSet::EMPTY);
        assert_eq!(graph(3, &[(1, 2)]).isolated_vertices(), set(&[3]));
    }

    #[test]
    fn union_and_join() {
        let a = Graph::complete(GroundSet::new(["1", "2"]).unwrap());
        let b = Graph::complete(GroundSet::new(["3", "4"]).unwrap());
        let u = Graph::disjoint_union(&[a.clone(), b.clone()]).unwrap();
        assert_eq!(
            u.minimal_dominating_sets(),
            hg(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]])
        );

        let e1 = Graph::empty(GroundSet::new(["1", "2"]).unwrap());
        let e2 = Graph::empty(GroundSet::new(["3", "4"]).unwrap());
        let j = Graph::join(&[e1, e2]).unwrap();
        assert_eq!(
            j.minimal_dominating_sets(),
            Hypergraph::uniform(2, &GroundSet::range(4).unwrap()).unwrap()
        );

        assert_eq!(
            Graph::join(&[a.clone(), a.clone()]),
            Err(Error::OverlappingLabels("1".into()))
        );
        assert_eq!(Graph::join(&[a]), Err(Error::TooFewOperands(2)));
    }

    #[test]
    fn join_with_universal_vertex() {
        // G' = P3 on {2,3,4} has universal vertex 3, so use 2K2 on {2..5}.
        let k = Graph::complete(GroundSet::new(["1"]).unwrap());
        let rest = Graph::from_edges(GroundSet::new(["2", "3", "4", "5"]).unwrap(), &[(0, 1), (2, 3)])
            .unwrap();
        let j = Graph::join(&[k, rest.clone()]).unwrap();
        let mut expected = vec![set(&[1])];
        expected.extend(
            rest.minimal_dominating_sets()
                .edges()
                .iter()
                .map(|e| VertexSet::from_bits(e.bits() << 1)),
        );
        assert_eq!(
            j.minimal_dominating_sets(),
            Hypergraph::new(GroundSet::range(5).unwrap(), expected).unwrap()
        );
    }

    #[test]
    fn star_forest_predicate() {
        assert!(graph(4, &[(1, 2), (1, 3), (1, 4)]).is_star_forest());
        assert!(!c5().is_star_forest());
        assert!(!graph(5, &[(1, 2), (3, 4)]).is_star_forest());
        assert!(graph(4, &[(1, 2), (3, 4)]).is_star_forest());
        assert!(!Graph::empty(GroundSet::range(1).unwrap()).is_star_forest());
    }

    #[test]
    fn spanning_star_forest_examples() {
        let star = graph(4, &[(1, 2), (1, 3), (1, 4)]);
        assert_eq!(star.spanning_star_forest().unwrap(), star);

        // Lexicographic tree of C5 is the path 5-1-2-3-4; the hubs 1 and 2
        // are separated by deleting 1-2.
        let f = c5().spanning_star_forest().unwrap();
        assert_eq!(f, graph(5, &[(1, 5), (2, 3), (3, 4)]));
        assert!(f.is_star_forest());
        assert!(f
            .minimal_dominating_sets()
            .is_leq(&c5().minimal_dominating_sets())
            .unwrap());

        assert_eq!(
            graph(3, &[(1, 2)]).spanning_star_forest(),
            Err(Error::HasIsolatedVertex("3".into()))
        );
    }

    #[test]
    fn components_in_order() {
        let g = graph(6, &[(2, 5), (1, 3), (4, 6)]);
        assert_eq!(g.components(), vec![set(&[1, 3]), set(&[2, 5]), set(&[4, 6])]);
    }

    #[test]
    fn induced_subgraph() {
        let g = c5();
        let h = g.induced(set(&[1, 2, 3])).unwrap();
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(h.ground().labels(), &["1", "2", "3"]);
    }

    #[test]
    fn graph_order_matches_edge_code() {
        let a = graph(4, &[(3, 4)]);
        let b = graph(4, &[(1, 2), (2, 3)]);
        assert!(a.edge_code() > b.edge_code());
        assert!(a > b);
    }
}
