//! Sperner systems and their algebra: minimization, transversal, the order
//! `≤` on up-closures and the meet `⊓`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::set::{subsets_of_size, GroundSet, VertexSet};

/// A non-empty antichain of non-empty subsets of a ground set.
///
/// Edges are kept in canonical order (cardinality, then mask value), so two
/// hypergraphs are equal exactly when their edge lists are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    ground: GroundSet,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    /// Validates an antichain without minimizing it.
    pub fn new(ground: GroundSet, edges: Vec<VertexSet>) -> Result<Self> {
        check_family(&ground, &edges)?;
        let mut edges = edges;
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::NotAnAntichain);
        }
        if !is_antichain(&edges) {
            return Err(Error::NotAnAntichain);
        }
        Ok(Hypergraph { ground, edges })
    }

    /// The inclusion-minimal members of `family`, deduplicated.
    pub fn minimize(ground: GroundSet, family: Vec<VertexSet>) -> Result<Self> {
        check_family(&ground, &family)?;
        Ok(Hypergraph {
            ground,
            edges: minimize_sets(family),
        })
    }

    /// Callers guarantee a canonical, non-empty antichain within `ground`.
    pub(crate) fn from_canonical(ground: GroundSet, edges: Vec<VertexSet>) -> Self {
        debug_assert!(!edges.is_empty());
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(is_antichain(&edges));
        Hypergraph { ground, edges }
    }

    /// `U_{r,Ω}`: every `r`-subset of the ground set.
    pub fn uniform(r: usize, ground: &GroundSet) -> Result<Self> {
        let n = ground.len();
        if r == 0 || r > n {
            return Err(Error::RankOutOfRange { r, n });
        }
        Ok(Hypergraph {
            ground: ground.clone(),
            edges: subsets_of_size(n, r).collect(),
        })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains_edge(&self, edge: VertexSet) -> bool {
        self.edges.binary_search(&edge).is_ok()
    }

    /// Union of all edges.
    pub fn ground_of(&self) -> VertexSet {
        self.edges.iter().fold(VertexSet::EMPTY, |acc, &e| acc | e)
    }

    /// Whether the edges cover the whole ground set.
    pub fn has_full_ground(&self) -> bool {
        self.ground_of() == self.ground.full()
    }

    /// Whether every edge has `r` members.
    pub fn is_uniform(&self, r: usize) -> bool {
        self.edges.iter().all(|e| e.len() == r)
    }

    /// `tr(H)`, the blocker: minimal sets meeting every edge.
    pub fn transversal(&self) -> Hypergraph {
        Hypergraph {
            ground: self.ground.clone(),
            edges: transversal_sets(&self.edges),
        }
    }

    /// `self ≤ other`, i.e. `self⁺ ⊆ other⁺`.
    pub fn is_leq(&self, other: &Hypergraph) -> Result<bool> {
        self.same_ground(other)?;
        Ok(leq_sets(&self.edges, &other.edges))
    }

    /// The meet `⊓` of a list of hypergraphs over one ground set.
    pub fn meet(hs: &[Hypergraph]) -> Result<Hypergraph> {
        let (first, rest) = hs.split_first().ok_or(Error::EmptyList)?;
        for h in rest {
            first.same_ground(h)?;
        }
        let mut edges = first.edges.clone();
        for h in rest {
            edges = meet_sets(&edges, &h.edges);
        }
        Ok(Hypergraph {
            ground: first.ground.clone(),
            edges,
        })
    }

    /// `H[Ω']`, re-grounded on the members of `within`; `None` when no edge
    /// fits inside `within`.
    pub fn restrict(&self, within: VertexSet) -> Result<Option<Hypergraph>> {
        if within.is_empty() || !self.ground.contains_set(within) {
            return Err(Error::OutOfGround);
        }
        let ground = self.ground.subset(within)?;
        let mut edges: Vec<VertexSet> = self
            .edges
            .iter()
            .filter(|e| e.is_subset(within))
            .map(|e| e.compress(within))
            .collect();
        if edges.is_empty() {
            return Ok(None);
        }
        edges.sort_unstable();
        Ok(Some(Hypergraph { ground, edges }))
    }

    /// Moves the hypergraph onto another ground set through the label names.
    pub fn relabel(&self, ground: &GroundSet) -> Result<Hypergraph> {
        let map: Vec<usize> = self
            .ground
            .labels()
            .iter()
            .map(|l| ground.index_of(l).ok_or_else(|| Error::UnknownLabel(l.clone())))
            .collect::<Result<_>>()?;
        let edges = self
            .edges
            .iter()
            .map(|e| VertexSet::from_indices(e.iter().map(|i| map[i])))
            .collect();
        Hypergraph::new(ground.clone(), edges)
    }

    pub(crate) fn same_ground(&self, other: &Hypergraph) -> Result<()> {
        if self.ground == other.ground {
            Ok(())
        } else {
            Err(Error::GroundMismatch)
        }
    }
}

impl PartialOrd for Hypergraph {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order used for deterministic listings: edge lists compared
/// lexicographically in canonical edge order.
impl Ord for Hypergraph {
    fn cmp(&self, other: &Self) -> Ordering {
        self.edges
            .cmp(&other.edges)
            .then_with(|| self.ground.cmp(&other.ground))
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .edges
            .iter()
            .map(|&e| self.ground.format_set(e))
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph{self}")
    }
}

fn check_family(ground: &GroundSet, family: &[VertexSet]) -> Result<()> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    if family.iter().any(|s| s.is_empty()) {
        return Err(Error::EmptySetMember);
    }
    if family.iter().any(|&s| !ground.contains_set(s)) {
        return Err(Error::OutOfGround);
    }
    Ok(())
}

pub(crate) fn is_antichain(edges: &[VertexSet]) -> bool {
    edges.iter().enumerate().all(|(i, &a)| {
        edges
            .iter()
            .enumerate()
            .all(|(j, &b)| i == j || !a.is_subset(b))
    })
}

/// Inclusion-minimal members of `family`, canonical order.
pub fn minimize_sets(mut family: Vec<VertexSet>) -> Vec<VertexSet> {
    family.sort_unstable();
    family.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(family.len());
    // Sorted by size, so any subset of `s` is already in `kept`.
    for s in family {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

/// Berge's algorithm: fold edges in one at a time, extending each partial
/// transversal that misses the new edge by one of its elements.
pub fn transversal_sets(edges: &[VertexSet]) -> Vec<VertexSet> {
    let mut partial = vec![VertexSet::EMPTY];
    for &edge in edges {
        let mut next = Vec::with_capacity(partial.len() * 2);
        for &t in &partial {
            if t.intersects(edge) {
                next.push(t);
            } else {
                next.extend(edge.iter().map(|x| t.with(x)));
            }
        }
        partial = minimize_sets(next);
    }
    partial
}

pub fn leq_sets(lower: &[VertexSet], upper: &[VertexSet]) -> bool {
    lower
        .iter()
        .all(|&a| upper.iter().any(|&b| b.is_subset(a)))
}

pub fn meet_sets(a: &[VertexSet], b: &[VertexSet]) -> Vec<VertexSet> {
    let mut unions = Vec::with_capacity(a.len() * b.len());
    for &x in a {
        for &y in b {
            unions.push(x | y);
        }
    }
    minimize_sets(unions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{hg, set};

    #[test]
    fn minimize_examples() {
        let g = GroundSet::range(3).unwrap();
        let h = Hypergraph::minimize(g.clone(), vec![set(&[1, 2]), set(&[1]), set(&[2, 3])]).unwrap();
        assert_eq!(h, hg(3, &[&[1], &[2, 3]]));

        let h = Hypergraph::minimize(
            g.clone(),
            vec![set(&[1, 2]), set(&[1, 3]), set(&[2, 3]), set(&[1, 2, 3])],
        )
        .unwrap();
        assert_eq!(h, hg(3, &[&[1, 2], &[1, 3], &[2, 3]]));

        let reordered =
            Hypergraph::minimize(g.clone(), vec![set(&[2, 3]), set(&[1])]).unwrap();
        assert_eq!(reordered.edges(), &[set(&[1]), set(&[2, 3])]);
    }

    #[test]
    fn minimize_errors() {
        let g = GroundSet::range(2).unwrap();
        assert_eq!(Hypergraph::minimize(g.clone(), vec![]), Err(Error::EmptyFamily));
        assert_eq!(
            Hypergraph::minimize(g.clone(), vec![VertexSet::EMPTY]),
            Err(Error::EmptySetMember)
        );
        assert_eq!(
            Hypergraph::minimize(g, vec![set(&[3])]),
            Err(Error::OutOfGround)
        );
    }

    #[test]
    fn new_rejects_comparable_edges() {
        let g = GroundSet::range(2).unwrap();
        assert_eq!(
            Hypergraph::new(g.clone(), vec![set(&[1]), set(&[1, 2])]),
            Err(Error::NotAnAntichain)
        );
        assert_eq!(
            Hypergraph::new(g, vec![set(&[1]), set(&[1])]),
            Err(Error::NotAnAntichain)
        );
    }

    #[test]
    fn transversal_examples() {
        let g4 = GroundSet::range(4).unwrap();
        let u2 = Hypergraph::uniform(2, &g4).unwrap();
        assert_eq!(u2.transversal(), Hypergraph::uniform(3, &g4).unwrap());
        assert_eq!(hg(1, &[&[1]]).transversal(), hg(1, &[&[1]]));
        assert_eq!(
            hg(3, &[&[1, 2], &[3]]).transversal(),
            hg(3, &[&[1, 3], &[2, 3]])
        );
    }

    #[test]
    fn order_examples() {
        let h1 = hg(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        let h2 = hg(3, &[&[1, 2], &[3]]);
        assert!(h1.is_leq(&h2).unwrap());
        assert!(h1.is_leq(&h1).unwrap());
        let h = hg(3, &[&[1], &[2, 3]]);
        assert!(h1.is_leq(&h).unwrap());
        assert!(!h.is_leq(&h1).unwrap());
        assert_eq!(h.is_leq(&hg(4, &[&[1]])), Err(Error::GroundMismatch));
    }

    #[test]
    fn meet_examples() {
        let a = hg(3, &[&[1], &[2, 3]]);
        let b = hg(3, &[&[2], &[1, 3]]);
        let g3 = GroundSet::range(3).unwrap();
        assert_eq!(
            Hypergraph::meet(&[a.clone(), b]).unwrap(),
            Hypergraph::uniform(2, &g3).unwrap()
        );
        assert_eq!(Hypergraph::meet(&[a.clone(), a.clone()]).unwrap(), a);
        assert_eq!(Hypergraph::meet(&[]), Err(Error::EmptyList));
        assert_eq!(
            Hypergraph::meet(&[a, hg(4, &[&[1]])]),
            Err(Error::GroundMismatch)
        );
    }

    #[test]
    fn meet_of_maximal_stars_n4() {
        // D(K_{1,3}) with center i is {{i}, Ω∖{i}}.
        let stars: Vec<Hypergraph> = vec![
            hg(4, &[&[1], &[2, 3, 4]]),
            hg(4, &[&[2], &[1, 3, 4]]),
            hg(4, &[&[3], &[1, 2, 4]]),
        ];
        let g4 = GroundSet::range(4).unwrap();
        assert_eq!(
            Hypergraph::meet(&stars).unwrap(),
            Hypergraph::uniform(3, &g4).unwrap()
        );
    }

    #[test]
    fn uniform_examples() {
        let g3 = GroundSet::range(3).unwrap();
        assert_eq!(
            Hypergraph::uniform(2, &g3).unwrap(),
            hg(3, &[&[1, 2], &[1, 3], &[2, 3]])
        );
        assert_eq!(Hypergraph::uniform(3, &g3).unwrap(), hg(3, &[&[1, 2, 3]]));
        assert_eq!(
            Hypergraph::uniform(1, &g3).unwrap(),
            hg(3, &[&[1], &[2], &[3]])
        );
        assert_eq!(
            Hypergraph::uniform(4, &g3),
            Err(Error::RankOutOfRange { r: 4, n: 3 })
        );
        assert_eq!(
            Hypergraph::uniform(0, &g3),
            Err(Error::RankOutOfRange { r: 0, n: 3 })
        );
    }

    #[test]
    fn restrict_examples() {
        let g5 = GroundSet::range(5).unwrap();
        let g4 = GroundSet::range(4).unwrap();
        let u3 = Hypergraph::uniform(3, &g5).unwrap();
        assert_eq!(
            u3.restrict(set(&[1, 2, 3, 4])).unwrap(),
            Some(Hypergraph::uniform(3, &g4).unwrap())
        );
        assert_eq!(u3.restrict(g5.full()).unwrap(), Some(u3.clone()));

        let h = hg(3, &[&[1], &[2, 3]]);
        let r = h.restrict(set(&[1, 2])).unwrap().unwrap();
        assert_eq!(r.ground().labels(), &["1", "2"]);
        assert_eq!(r.edges(), &[set(&[1])]);
        assert_eq!(h.restrict(set(&[2])).unwrap(), None);
        assert_eq!(h.restrict(VertexSet::EMPTY), Err(Error::OutOfGround));
        assert_eq!(h.restrict(set(&[4])), Err(Error::OutOfGround));
    }

    #[test]
    fn ground_of_examples() {
        assert_eq!(hg(3, &[&[1], &[2, 3]]).ground_of(), set(&[1, 2, 3]));
        let h = hg(3, &[&[1, 2]]);
        assert_eq!(h.ground_of(), set(&[1, 2]));
        assert!(!h.has_full_ground());
    }
}
