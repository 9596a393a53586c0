//! Deciding whether a hypergraph is `𝒟(G)` for some graph, and listing the
//! graphs that realize it.

use serde::Serialize;

use crate::config::SearchConfig;
use crate::error::{Error, Result};
use crate::family::{enumerate_family, perfect_matchings, GraphFamilyKind};
use crate::graph::Graph;
use crate::hypergraph::{minimize_sets, transversal_sets, Hypergraph};
use crate::parallel::map_chunks;
use crate::set::{GroundSet, VertexSet};
use crate::util::binomial;

pub const DEFAULT_RECOGNITION_CAP: usize = 7;
/// Largest vertex count for the brute-force reference path.
pub const SWEEP_RECOGNITION_CAP: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecognitionResult {
    pub is_domination: bool,
    pub rejected_by_necessary_condition: bool,
    /// Realizations on the vertex set `⋃ H`, ordered by edge code.
    pub realizations: Vec<Graph>,
}

impl RecognitionResult {
    fn rejected(by_condition: bool) -> Self {
        RecognitionResult {
            is_domination: false,
            rejected_by_necessary_condition: by_condition,
            realizations: Vec::new(),
        }
    }

    fn from_realizations(realizations: Vec<Graph>) -> Self {
        RecognitionResult {
            is_domination: !realizations.is_empty(),
            rejected_by_necessary_condition: false,
            realizations,
        }
    }
}

/// `h` re-grounded on the union of its edges, which is the only admissible
/// vertex set of a realization.
fn on_support(h: &Hypergraph) -> Result<(GroundSet, Vec<VertexSet>)> {
    let support = h.ground_of();
    if support == h.ground().full() {
        return Ok((h.ground().clone(), h.edges().to_vec()));
    }
    let ground = h.ground().subset(support)?;
    let mut edges: Vec<VertexSet> = h.edges().iter().map(|e| e.compress(support)).collect();
    edges.sort_unstable();
    Ok((ground, edges))
}

/// Full recognition: the `|tr(H)| ≤ |Ω|` test, then a search over closed
/// neighborhood assignments whose minimal members must be exactly `tr(H)`.
pub fn recognize(h: &Hypergraph, config: &SearchConfig) -> Result<RecognitionResult> {
    let (ground, edges) = on_support(h)?;
    let m = ground.len();
    let cap = config.cap_for(DEFAULT_RECOGNITION_CAP);
    if m > cap {
        return Err(Error::GroundTooLarge { n: m, cap });
    }
    let target = transversal_sets(&edges);
    if target.len() > m {
        return Ok(RecognitionResult::rejected(true));
    }

    let mut search = NeighborhoodSearch {
        m,
        target: &target,
        nbhd: Vec::with_capacity(m),
        found: Vec::new(),
    };
    search.assign(0);

    let mut realizations: Vec<Graph> = search
        .found
        .into_iter()
        .map(|nbhd| graph_from_neighborhoods(&ground, &nbhd))
        .collect();
    realizations.sort();
    if config.verify_outputs {
        let expected = Hypergraph::from_canonical(ground.clone(), edges);
        for g in &realizations {
            assert_eq!(g.minimal_dominating_sets(), expected, "unsound realization {g}");
        }
    }
    Ok(RecognitionResult::from_realizations(realizations))
}

struct NeighborhoodSearch<'a> {
    m: usize,
    target: &'a [VertexSet],
    nbhd: Vec<VertexSet>,
    found: Vec<Vec<VertexSet>>,
}

impl NeighborhoodSearch<'_> {
    /// Chooses `N[x]`; membership of earlier vertices is already forced by
    /// symmetry, so only later vertices are free.
    fn assign(&mut self, x: usize) {
        if x == self.m {
            if minimize_sets(self.nbhd.clone()) == self.target {
                self.found.push(self.nbhd.clone());
            }
            return;
        }
        let fixed = self.known_part(x).with(x);
        let free_count = self.m - x - 1;
        for sub in 0u64..(1u64 << free_count) {
            let candidate = fixed | VertexSet::from_bits(sub << (x + 1));
            if !self.target.iter().any(|t| t.is_subset(candidate)) {
                continue;
            }
            self.nbhd.push(candidate);
            if self.feasible(x + 1) {
                self.assign(x + 1);
            }
            self.nbhd.pop();
        }
    }

    /// `N[z] ∩ {0..p}` for a vertex `z ≥ p` once vertices `0..p` are assigned.
    fn known_part(&self, z: usize) -> VertexSet {
        VertexSet::from_indices((0..self.nbhd.len()).filter(|&y| self.nbhd[y].contains(z)))
    }

    fn feasible(&self, p: usize) -> bool {
        let processed = VertexSet::full(p);
        let pending: Vec<(usize, VertexSet)> =
            (p..self.m).map(|z| (z, self.known_part(z))).collect();
        // Each target set must still be able to appear as some N[z] with z in it.
        for &t in self.target {
            if self.nbhd.contains(&t) {
                continue;
            }
            let reachable = pending
                .iter()
                .any(|&(z, known)| t.contains(z) && t & processed == known);
            if !reachable {
                return false;
            }
        }
        // Each pending N[z] must be able to contain some target set.
        pending.iter().all(|&(_, known)| {
            self.target.iter().any(|&t| (t & processed).is_subset(known))
        })
    }
}

fn graph_from_neighborhoods(ground: &GroundSet, nbhd: &[VertexSet]) -> Graph {
    let edges: Vec<(usize, usize)> = nbhd
        .iter()
        .enumerate()
        .flat_map(|(x, n)| n.iter().filter(move |&y| y > x).map(move |y| (x, y)))
        .collect();
    Graph::from_edges(ground.clone(), &edges).expect("symmetric assignment")
}

/// Reference recognition by filtering every graph on `⋃ H`.
pub fn recognize_by_sweep(h: &Hypergraph, config: &SearchConfig) -> Result<RecognitionResult> {
    let (ground, edges) = on_support(h)?;
    let m = ground.len();
    let cap = config.cap_for(SWEEP_RECOGNITION_CAP);
    if m > cap {
        return Err(Error::GroundTooLarge { n: m, cap });
    }
    let target = transversal_sets(&edges);
    let rejected = target.len() > m;
    let family = enumerate_family(GraphFamilyKind::AllGraphs, &ground, Some(m))?;
    let parts = map_chunks(family.len(), config.workers, |range| {
        family
            .range(range)
            .filter(|g| g.minimal_dominating_sets().edges() == edges.as_slice())
            .collect::<Vec<_>>()
    });
    let realizations: Vec<Graph> = parts.into_iter().flatten().collect();
    let mut result = RecognitionResult::from_realizations(realizations);
    result.rejected_by_necessary_condition = rejected;
    Ok(result)
}

/// Closed-form recognition of `U_{r,Ω}`: a domination hypergraph exactly when
/// `r = 1`, `r = n`, or `r = 2` with `n` even.
pub fn uniform_recognition(r: usize, ground: &GroundSet) -> Result<RecognitionResult> {
    let n = ground.len();
    if r == 0 || r > n {
        return Err(Error::RankOutOfRange { r, n });
    }
    // |tr(U_{r,Ω})| = |U_{n-r+1,Ω}|.
    let rejected = binomial(n, n - r + 1) > n as u128;
    let realizations = if r == 1 {
        vec![Graph::complete(ground.clone())]
    } else if r == n {
        vec![Graph::empty(ground.clone())]
    } else if r == 2 && n.is_multiple_of(2) {
        let mut graphs: Vec<Graph> = perfect_matchings(ground.full())
            .into_iter()
            .map(|matching| join_of_empty_pairs(ground, &matching))
            .collect::<Result<_>>()?;
        graphs.sort();
        graphs
    } else {
        return Ok(RecognitionResult::rejected(rejected));
    };
    Ok(RecognitionResult::from_realizations(realizations))
}

/// `K̄_{Ω₁} ∨ ⋯ ∨ K̄_{Ω_m}` for the blocks of a perfect matching, brought
/// back to the label order of `ground`.
fn join_of_empty_pairs(ground: &GroundSet, matching: &[(usize, usize)]) -> Result<Graph> {
    let parts: Vec<Graph> = matching
        .iter()
        .map(|&(a, b)| {
            ground
                .subset(VertexSet::singleton(a).with(b))
                .map(Graph::empty)
        })
        .collect::<Result<_>>()?;
    let joined = Graph::join(&parts)?;
    joined.relabel(ground)
}

/// Every graph with the same minimal dominating sets as the star forest `f`:
/// pick one center per component (either end of a `K₂`) and add any set of
/// edges among the chosen centers.
pub fn realization_expansion(f: &Graph, config: &SearchConfig) -> Result<Vec<Graph>> {
    let centers = f.star_centers().ok_or(Error::NotAStarForest)?;
    let mut out: Vec<Graph> = Vec::new();
    let mut choice = vec![0usize; centers.len()];
    loop {
        let chosen: Vec<usize> = choice.iter().zip(&centers).map(|(&k, c)| c[k]).collect();
        let pairs: Vec<(usize, usize)> = chosen
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| chosen[i + 1..].iter().map(move |&b| (a.min(b), a.max(b))))
            .collect();
        for mask in 0u64..(1u64 << pairs.len()) {
            let extra: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            out.push(f.with_edges(&extra)?);
        }
        // Odometer over the center choices.
        let mut k = 0;
        while k < choice.len() {
            choice[k] += 1;
            if choice[k] < centers[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
        if k == choice.len() {
            break;
        }
    }
    out.sort();
    out.dedup();
    if config.verify_outputs {
        let d = f.minimal_dominating_sets();
        for g in &out {
            assert_eq!(g.minimal_dominating_sets(), d, "expansion changed 𝒟 for {g}");
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{graph, hg};

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    #[test]
    fn two_by_two_family_realizations() {
        let h = hg(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]);
        let res = recognize(&h, &cfg()).unwrap();
        assert!(res.is_domination);
        for g in [
            graph(4, &[(1, 2), (3, 4)]),
            graph(4, &[(1, 2), (2, 3), (3, 4)]),
            graph(4, &[(1, 2), (1, 4), (3, 4)]),
        ] {
            assert!(res.realizations.contains(&g), "missing {g}");
        }
        assert_eq!(res, recognize_by_sweep(&h, &cfg()).unwrap());
        // 2K2 plus the four single cross edges between the two K2s.
        assert_eq!(res.realizations.len(), 5);
    }

    #[test]
    fn uniform_two_three_is_rejected() {
        let h = hg(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        let res = recognize(&h, &cfg()).unwrap();
        assert!(!res.is_domination);
        assert!(!res.rejected_by_necessary_condition);
        assert!(res.realizations.is_empty());
    }

    #[test]
    fn necessary_condition_rejects_u34() {
        let g4 = GroundSet::range(4).unwrap();
        let h = Hypergraph::uniform(3, &g4).unwrap();
        assert_eq!(h.transversal().len(), 6);
        let res = recognize(&h, &cfg()).unwrap();
        assert!(res.rejected_by_necessary_condition);
        assert!(!res.is_domination);
    }

    #[test]
    fn full_set_has_unique_empty_realization() {
        let h = hg(4, &[&[1, 2, 3, 4]]);
        let res = recognize(&h, &cfg()).unwrap();
        assert_eq!(res.realizations, vec![Graph::empty(GroundSet::range(4).unwrap())]);
    }

    #[test]
    fn search_vertex_set_is_edge_union() {
        let h = hg(4, &[&[1], &[2]]);
        let res = recognize(&h, &cfg()).unwrap();
        assert_eq!(res.realizations.len(), 1);
        assert_eq!(res.realizations[0].ground().labels(), &["1", "2"]);
        assert_eq!(res.realizations[0].edge_count(), 1);
    }

    #[test]
    fn recognition_cap() {
        let g8 = GroundSet::range(8).unwrap();
        let h = Hypergraph::uniform(8, &g8).unwrap();
        assert_eq!(
            recognize(&h, &cfg()).unwrap_err(),
            Error::GroundTooLarge { n: 8, cap: 7 }
        );
        assert!(recognize(&h, &cfg().with_cap(8)).unwrap().is_domination);
    }

    #[test]
    fn uniform_recognition_closed_forms() {
        let g = |n| GroundSet::range(n).unwrap();
        assert_eq!(uniform_recognition(2, &g(4)).unwrap().realizations.len(), 3);
        assert_eq!(uniform_recognition(2, &g(6)).unwrap().realizations.len(), 15);
        assert!(!uniform_recognition(3, &g(5)).unwrap().is_domination);
        let one = uniform_recognition(1, &g(4)).unwrap();
        assert_eq!(one.realizations, vec![Graph::complete(g(4))]);
        assert_eq!(
            uniform_recognition(0, &g(4)).unwrap_err(),
            Error::RankOutOfRange { r: 0, n: 4 }
        );
        for gr in uniform_recognition(2, &g(6)).unwrap().realizations {
            assert_eq!(gr.minimal_dominating_sets(), Hypergraph::uniform(2, &g(6)).unwrap());
        }
    }

    #[test]
    fn expansion_examples() {
        let g0 = graph(8, &[(1, 2), (3, 4), (5, 6), (5, 7), (5, 8)]);
        let all = realization_expansion(&g0, &cfg()).unwrap();
        assert_eq!(all.len(), 25);
        assert!(all.contains(&g0));

        let star = graph(4, &[(1, 2), (1, 3), (1, 4)]);
        assert_eq!(realization_expansion(&star, &cfg()).unwrap(), vec![star]);

        let two_k2 = graph(4, &[(1, 2), (3, 4)]);
        let expanded = realization_expansion(&two_k2, &cfg()).unwrap();
        assert_eq!(expanded.len(), 5);
        let h = two_k2.minimal_dominating_sets();
        assert_eq!(expanded, recognize_by_sweep(&h, &cfg()).unwrap().realizations);

        let c5 = graph(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]);
        assert_eq!(realization_expansion(&c5, &cfg()), Err(Error::NotAStarForest));
    }
}
