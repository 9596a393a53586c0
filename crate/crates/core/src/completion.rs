//! Domination completions of `U_{r,Ω}`: the poset `Dom(r,Ω)`, its minimal
//! elements, closed-form families, separating completions and the
//! decomposition parameter.

use std::collections::HashMap;

use serde::Serialize;

use crate::config::SearchConfig;
use crate::error::{Error, Result};
use crate::family::{enumerate_family, GraphFamilyKind};
use crate::graph::Graph;
use crate::hypergraph::{leq_sets, meet_sets, Hypergraph};
use crate::parallel::map_chunks;
use crate::set::{GroundSet, VertexSet};
use crate::shape::shape_name;
use crate::util::binomial;

/// Default bound on `n` for the exhaustive graph sweep.
pub const DEFAULT_COMPLETION_CAP: usize = 5;

fn check_rank(r: usize, ground: &GroundSet) -> Result<()> {
    let n = ground.len();
    if r == 0 || r > n {
        Err(Error::RankOutOfRange { r, n })
    } else {
        Ok(())
    }
}

/// Every `𝒟(G)` with `U_{r,Ω} ≤ 𝒟(G)`, with all witnesses in sweep order.
fn sweep(r: usize, ground: &GroundSet, config: &SearchConfig) -> Result<Vec<(Hypergraph, Vec<Graph>)>> {
    check_rank(r, ground)?;
    let n = ground.len();
    let cap = config.cap_for(DEFAULT_COMPLETION_CAP);
    if n > cap {
        return Err(Error::GroundTooLarge { n, cap });
    }
    let family = enumerate_family(GraphFamilyKind::AllGraphs, ground, Some(n))?;
    let target = Hypergraph::uniform(r, ground)?;
    let locals = map_chunks(family.len(), config.workers, |range| {
        let mut local: HashMap<Vec<VertexSet>, Vec<u64>> = HashMap::new();
        for code in range {
            let g = Graph::from_edge_code(ground.clone(), code);
            let d = g.minimal_dominating_sets();
            if leq_sets(target.edges(), d.edges()) {
                local.entry(d.edges().to_vec()).or_default().push(code);
            }
        }
        local
    });
    // Chunks arrive in index order, so appending keeps witnesses in sweep order.
    let mut merged: HashMap<Vec<VertexSet>, Vec<u64>> = HashMap::new();
    for local in locals {
        for (key, codes) in local {
            merged.entry(key).or_default().extend(codes);
        }
    }
    let mut entries: Vec<(Hypergraph, Vec<Graph>)> = merged
        .into_iter()
        .map(|(edges, codes)| {
            let h = Hypergraph::from_canonical(ground.clone(), edges);
            let witnesses = codes
                .into_iter()
                .map(|c| Graph::from_edge_code(ground.clone(), c))
                .collect();
            (h, witnesses)
        })
        .collect();
    entries.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(entries)
}

/// `Dom(r,Ω)` by sweeping every graph on `Ω`, one witness per hypergraph.
pub fn completions(r: usize, ground: &GroundSet, config: &SearchConfig) -> Result<Vec<(Hypergraph, Graph)>> {
    Ok(sweep(r, ground, config)?
        .into_iter()
        .map(|(h, mut w)| (h, w.swap_remove(0)))
        .collect())
}

fn minimal_entries(entries: Vec<(Hypergraph, Vec<Graph>)>) -> Vec<(Hypergraph, Vec<Graph>)> {
    let keep: Vec<bool> = entries
        .iter()
        .enumerate()
        .map(|(i, (h, _))| {
            !entries
                .iter()
                .enumerate()
                .any(|(j, (other, _))| i != j && leq_sets(other.edges(), h.edges()))
        })
        .collect();
    entries
        .into_iter()
        .zip(keep)
        .filter_map(|(e, k)| k.then_some(e))
        .collect()
}

/// `𝒟om(r,Ω)`, the `≤`-minimal completions, each with every witness graph.
pub fn minimal_completions(
    r: usize,
    ground: &GroundSet,
    config: &SearchConfig,
) -> Result<Vec<(Hypergraph, Vec<Graph>)>> {
    Ok(minimal_entries(sweep(r, ground, config)?))
}

/// `H_ω = {{ω}} ∪ U_{2,Ω∖{ω}}`.
pub fn h_omega(omega: usize, ground: &GroundSet) -> Hypergraph {
    let n = ground.len();
    let mut edges = vec![VertexSet::singleton(omega)];
    for a in 0..n {
        for b in a + 1..n {
            if a != omega && b != omega {
                edges.push(VertexSet::singleton(a).with(b));
            }
        }
    }
    Hypergraph::new(ground.clone(), edges).expect("H_ω is an antichain")
}

/// The minimal completions in closed form, where one is known:
/// `r = 1`, `r = n`, `r = 2`, `r = n − 1` and `(r, n) = (3, 5)`.
pub fn structured_minimal_completions(r: usize, ground: &GroundSet) -> Result<Option<Vec<Hypergraph>>> {
    check_rank(r, ground)?;
    let n = ground.len();
    let from_family = |kind| -> Result<Vec<Hypergraph>> {
        Ok(enumerate_family(kind, ground, None)?
            .iter()
            .map(|g| g.minimal_dominating_sets())
            .collect())
    };
    let mut hs = if r == 1 || r == n || (r == 2 && n.is_multiple_of(2)) {
        vec![Hypergraph::uniform(r, ground)?]
    } else if r == 2 {
        (0..n).map(|w| h_omega(w, ground)).collect()
    } else if r == n - 1 {
        from_family(GraphFamilyKind::StarForests)?
    } else if (r, n) == (3, 5) {
        let mut v = from_family(GraphFamilyKind::CycleC5)?;
        v.extend(from_family(GraphFamilyKind::CompleteBipartite23)?);
        v
    } else {
        return Ok(None);
    };
    hs.sort();
    hs.dedup();
    Ok(Some(hs))
}

/// A completion `H₀ ∈ Dom(r,Ω)` with `h ≰ H₀`, for `U_{r,Ω} ≤ h ≠ U_{r,Ω}`.
///
/// Takes the first edge `A₀` of `h` with fewer than `r` members, pads it with
/// the smallest unused indices to an `r`-set `Ω₁` and returns
/// `{Ω₁} ∪ {{w} : w ∉ Ω₁}`, i.e. `𝒟(K̄_{Ω₁} ∨ K_{Ω∖Ω₁})`.
pub fn separating_completion(h: &Hypergraph, r: usize) -> Result<Hypergraph> {
    let ground = h.ground();
    let u = Hypergraph::uniform(r, ground)?;
    if h == &u {
        return Err(Error::PreconditionViolated("h equals U_{r,Ω}".into()));
    }
    if !u.is_leq(h)? {
        return Err(Error::PreconditionViolated("U_{r,Ω} ≰ h".into()));
    }
    let n = ground.len();
    let h0 = if r == n {
        u.clone()
    } else {
        let a0 = *h
            .edges()
            .iter()
            .find(|e| e.len() < r)
            .expect("an edge below rank r exists when U ≤ h ≠ U");
        let mut omega1 = a0;
        for w in 0..n {
            if omega1.len() == r {
                break;
            }
            omega1 = omega1.with(w);
        }
        let mut edges = vec![omega1];
        edges.extend((ground.full() - omega1).iter().map(VertexSet::singleton));
        Hypergraph::new(ground.clone(), edges)?
    };
    assert!(u.is_leq(&h0)?, "separating completion must dominate U");
    assert!(!h.is_leq(&h0)?, "separating completion must avoid h");
    Ok(h0)
}

/// The join graph realizing a separating completion: `Ω₁` independent,
/// every other vertex universal.
pub fn separating_realization(h0: &Hypergraph) -> Graph {
    let omega1 = *h0.edges().last().expect("non-empty");
    let ground = h0.ground().clone();
    let n = ground.len();
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if !(omega1.contains(a) && omega1.contains(b)) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(ground, &edges).expect("valid join")
}

/// Whether `⊓ hs = U_{r,Ω}`.
pub fn verify_meet_decomposition(hs: &[Hypergraph], r: usize, ground: &GroundSet) -> Result<bool> {
    if hs.iter().any(|h| h.ground() != ground) {
        return Err(Error::GroundMismatch);
    }
    let meet = Hypergraph::meet(hs)?;
    Ok(meet == Hypergraph::uniform(r, ground)?)
}

/// The `n − 1` maximal stars `K_{1,n−1}` centered at all but the last
/// element; their `𝒟` values meet to `U_{n−1,Ω}`.
pub fn max_star_witness(ground: &GroundSet) -> Result<Vec<Hypergraph>> {
    let n = ground.len();
    if n < 3 {
        return Err(Error::PreconditionViolated("needs |Ω| ≥ 3".into()));
    }
    Ok((0..n - 1)
        .map(|c| {
            let edges: Vec<(usize, usize)> = (0..n).filter(|&v| v != c).map(|v| (c, v)).collect();
            Graph::from_edges(ground.clone(), &edges)
                .expect("valid star")
                .minimal_dominating_sets()
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Exactness {
    /// Searched over minimal completions found by the exhaustive sweep.
    Exhaustive,
    /// Searched over the closed-form minimal completions.
    ClosedForm,
    /// The search budget was exhausted; the value is the max-star bound.
    UpperBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub value: usize,
    pub witness: Vec<Hypergraph>,
    pub exactness: Exactness,
    /// Number of minimal completions searched.
    pub candidates: usize,
    /// Every smaller size was searched exhaustively without success.
    pub lower_bound: usize,
}

/// Smallest `t` such that some `t` of `candidates` meet to `target`, with the
/// lexicographically first such index set.
pub fn smallest_decomposition(
    candidates: &[Hypergraph],
    target: &Hypergraph,
    budget: u64,
) -> Result<Option<Vec<usize>>> {
    let s = candidates.len();
    for t in 1..=s {
        let count = binomial(s, t);
        if count > budget as u128 {
            return Err(Error::SearchSpaceExceeded { s, t, count, budget });
        }
        let mut chosen = Vec::with_capacity(t);
        if search_combination(candidates, target.edges(), 0, t, None, &mut chosen) {
            return Ok(Some(chosen));
        }
    }
    Ok(None)
}

fn search_combination(
    candidates: &[Hypergraph],
    target: &[VertexSet],
    start: usize,
    t: usize,
    prefix: Option<&[VertexSet]>,
    chosen: &mut Vec<usize>,
) -> bool {
    if chosen.len() == t {
        return prefix == Some(target);
    }
    let remaining = t - chosen.len();
    for i in start..=candidates.len() - remaining {
        let next = match prefix {
            None => candidates[i].edges().to_vec(),
            Some(p) => meet_sets(p, candidates[i].edges()),
        };
        chosen.push(i);
        if search_combination(candidates, target, i + 1, t, Some(&next), chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// `𝔇(r,Ω)`: searched over the swept minimal completions when `n` is within
/// the sweep cap, otherwise over the closed-form family.
pub fn decomposition_parameter(r: usize, ground: &GroundSet, config: &SearchConfig) -> Result<Decomposition> {
    check_rank(r, ground)?;
    let n = ground.len();
    let cap = config.cap_for(DEFAULT_COMPLETION_CAP);
    let (candidates, exactness) = if n <= cap {
        let minimal = minimal_completions(r, ground, config)?;
        (minimal.into_iter().map(|(h, _)| h).collect(), Exactness::Exhaustive)
    } else {
        match structured_minimal_completions(r, ground)? {
            Some(hs) => (hs, Exactness::ClosedForm),
            None => return Err(Error::GroundTooLarge { n, cap }),
        }
    };
    decompose_candidates(r, ground, candidates, exactness, config)
}

fn decompose_candidates(
    r: usize,
    ground: &GroundSet,
    candidates: Vec<Hypergraph>,
    exactness: Exactness,
    config: &SearchConfig,
) -> Result<Decomposition> {
    let target = Hypergraph::uniform(r, ground)?;
    let picked = smallest_decomposition(&candidates, &target, config.budget)?
        .expect("the minimal completions always meet to U_{r,Ω}");
    Ok(Decomposition {
        value: picked.len(),
        witness: picked.iter().map(|&i| candidates[i].clone()).collect(),
        exactness,
        candidates: candidates.len(),
        lower_bound: picked.len(),
    })
}

/// Like [`decomposition_parameter`], but for `r = n − 1` falls back to the
/// verified max-star bound when the exact search exceeds its budget.
pub fn decompose_or_bound(r: usize, ground: &GroundSet, config: &SearchConfig) -> Result<Decomposition> {
    let n = ground.len();
    match decomposition_parameter(r, ground, config) {
        Err(Error::SearchSpaceExceeded { t, .. }) if n >= 3 && r == n - 1 => {
            let witness = max_star_witness(ground)?;
            assert!(verify_meet_decomposition(&witness, r, ground)?);
            let candidates = structured_minimal_completions(r, ground)?.map_or(0, |v| v.len());
            Ok(Decomposition {
                value: witness.len(),
                witness,
                exactness: Exactness::UpperBound,
                candidates,
                lower_bound: t,
            })
        }
        other => other,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompletionEntry {
    pub hypergraph: Hypergraph,
    pub witness: Graph,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalCompletionEntry {
    pub hypergraph: Hypergraph,
    pub witnesses: Vec<Graph>,
}

/// The computed poset `Dom(r,Ω)` with its minimal elements and `𝔇(r,Ω)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompletionReport {
    pub r: usize,
    pub ground: GroundSet,
    pub completions: Vec<CompletionEntry>,
    pub minimal_completions: Vec<MinimalCompletionEntry>,
    pub decomposition_parameter: usize,
    pub decomposition_witness: Vec<Hypergraph>,
}

impl CompletionReport {
    pub fn compute(r: usize, ground: &GroundSet, config: &SearchConfig) -> Result<Self> {
        let entries = sweep(r, ground, config)?;
        let completions = entries
            .iter()
            .map(|(h, w)| CompletionEntry {
                hypergraph: h.clone(),
                witness: w[0].clone(),
            })
            .collect();
        let minimal = minimal_entries(entries);
        let candidates: Vec<Hypergraph> = minimal.iter().map(|(h, _)| h.clone()).collect();
        let decomposition = decompose_candidates(r, ground, candidates, Exactness::Exhaustive, config)?;
        Ok(CompletionReport {
            r,
            ground: ground.clone(),
            completions,
            minimal_completions: minimal
                .into_iter()
                .map(|(hypergraph, witnesses)| MinimalCompletionEntry { hypergraph, witnesses })
                .collect(),
            decomposition_parameter: decomposition.value,
            decomposition_witness: decomposition.witness,
        })
    }

    /// Summary row: `n`, `r`, `s = |𝒟om(r,Ω)|`, `𝔇` and how many minimal
    /// completions are realized by each graph shape (sparsest witness).
    pub fn table_row(&self) -> TableRow {
        let mut tallies: Vec<(String, usize)> = Vec::new();
        for entry in &self.minimal_completions {
            let sparsest = entry
                .witnesses
                .iter()
                .min_by_key(|g| g.edge_count())
                .expect("at least one witness");
            let name = shape_name(sparsest);
            match tallies.iter_mut().find(|(s, _)| *s == name) {
                Some((_, c)) => *c += 1,
                None => tallies.push((name, 1)),
            }
        }
        tallies.sort();
        let closed_form = structured_minimal_completions(self.r, &self.ground)
            .ok()
            .flatten()
            .is_some_and(|hs| {
                hs.len() == self.minimal_completions.len()
                    && hs.iter().zip(&self.minimal_completions).all(|(h, e)| *h == e.hypergraph)
            });
        TableRow {
            n: self.ground.len(),
            r: self.r,
            s: self.minimal_completions.len(),
            decomposition_parameter: self.decomposition_parameter,
            shapes: tallies,
            closed_form,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub r: usize,
    pub s: usize,
    pub decomposition_parameter: usize,
    pub shapes: Vec<(String, usize)>,
    /// The row agrees with a known closed-form family; otherwise it is backed
    /// by the exhaustive sweep alone.
    pub closed_form: bool,
}

impl std::fmt::Display for TableRow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let shapes: Vec<String> = self.shapes.iter().map(|(s, c)| format!("{s}:{c}")).collect();
        write!(
            f,
            "n={} r={} s={} D={} shapes=[{}] {}",
            self.n,
            self.r,
            self.s,
            self.decomposition_parameter,
            shapes.join(" "),
            if self.closed_form { "closed-form" } else { "sweep-only" }
        )
    }
}
