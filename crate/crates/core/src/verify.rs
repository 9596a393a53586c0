//! The acceptance checks, runnable from the library, the test suite and the
//! command line. Every check compares library output with an independent
//! brute-force computation or with a literal known value.
//!
//! Reports are deterministic: random instances come from a seeded ChaCha
//! stream drawn on one thread, and only the per-instance work is spread over
//! workers.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::completion::{
    completions, decomposition_parameter, minimal_completions, separating_completion,
    separating_realization, structured_minimal_completions, verify_meet_decomposition, Exactness,
};
use crate::config::SearchConfig;
use crate::family::{enumerate_family, GraphFamilyKind};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::parallel::map_items;
use crate::recognition::{realization_expansion, recognize, uniform_recognition};
use crate::set::{GroundSet, VertexSet};

pub const DEFAULT_SEED: u64 = 0x00d0_4a7e;

/// Worker counts compared by the determinism check.
pub const DETERMINISM_WORKERS: [usize; 3] = [1, 2, 8];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {:>2} {:<34} {}", self.id, self.name, self.detail)
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub workers: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            workers: 1,
            seed: DEFAULT_SEED,
        }
    }
}

impl VerifyConfig {
    fn search(&self) -> SearchConfig {
        SearchConfig::default().with_workers(self.workers)
    }

    fn rng(&self, id: usize) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ (id as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }
}

/// Tally of individual assertions; keeps the first failure message.
#[derive(Default)]
struct Tally {
    checks: usize,
    failure: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn absorb(&mut self, other: Tally) {
        self.checks += other.checks;
        if self.failure.is_none() {
            self.failure = other.failure;
        }
    }

    fn finish(self, id: usize, name: &'static str, summary: String) -> CheckResult {
        let passed = self.failure.is_none();
        let detail = match self.failure {
            None => format!("{summary}; {} assertions", self.checks),
            Some(msg) => format!("{summary}; first failure: {msg}"),
        };
        CheckResult {
            id,
            name,
            passed,
            detail,
        }
    }
}

fn ground(n: usize) -> GroundSet {
    GroundSet::range(n).expect("valid size")
}

// ---------------------------------------------------------------------------
// Brute-force oracles over explicit subset enumeration.

fn all_subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (1u64..(1u64 << n)).map(VertexSet::from_bits)
}

fn sorted(mut v: Vec<VertexSet>) -> Vec<VertexSet> {
    v.sort();
    v.dedup();
    v
}

/// Minimal members of an up-closed predicate, by single-element removal.
fn minimal_satisfying(n: usize, pred: impl Fn(VertexSet) -> bool) -> Vec<VertexSet> {
    sorted(
        all_subsets(n)
            .filter(|&s| pred(s) && s.iter().all(|v| !pred(s.without(v))))
            .collect(),
    )
}

fn brute_dominating_sets(g: &Graph) -> Vec<VertexSet> {
    let n = g.order();
    minimal_satisfying(n, |s| (0..n).all(|x| g.closed_neighborhood(x).intersects(s)))
}

fn brute_transversal(n: usize, edges: &[VertexSet]) -> Vec<VertexSet> {
    minimal_satisfying(n, |s| edges.iter().all(|e| e.intersects(s)))
}

/// Indicator of the up-closure `H⁺`, indexed by subset mask.
fn up_closure(n: usize, edges: &[VertexSet]) -> Vec<bool> {
    (0u64..(1u64 << n))
        .map(|m| edges.iter().any(|e| e.is_subset(VertexSet::from_bits(m))))
        .collect()
}

fn brute_leq(n: usize, a: &[VertexSet], b: &[VertexSet]) -> bool {
    let (ua, ub) = (up_closure(n, a), up_closure(n, b));
    ua.iter().zip(&ub).all(|(&x, &y)| !x || y)
}

fn brute_meet(n: usize, hs: &[&[VertexSet]]) -> Vec<VertexSet> {
    let ups: Vec<Vec<bool>> = hs.iter().map(|h| up_closure(n, h)).collect();
    minimal_satisfying(n, |s| ups.iter().all(|u| u[s.bits() as usize]))
}

fn uniform_sets(n: usize, r: usize) -> Vec<VertexSet> {
    sorted(all_subsets(n).filter(|s| s.len() == r).collect())
}

/// Components by breadth-first search over the adjacency predicate.
#[allow(clippy::needless_range_loop)]
fn components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut k = 0;
        while k < comp.len() {
            let x = comp[k];
            for y in 0..n {
                if !seen[y] && g.has_edge(x, y) {
                    seen[y] = true;
                    comp.push(y);
                }
            }
            k += 1;
        }
        comp.sort();
        out.push(comp);
    }
    out
}

/// Star-forest test by counting: every component has at least two vertices,
/// is a tree and has a vertex adjacent to all the others.
fn is_star_forest_oracle(g: &Graph) -> bool {
    components(g).iter().all(|c| {
        let k = c.len();
        let edges: usize = c.iter().map(|&x| g.degree(x)).sum::<usize>() / 2;
        k >= 2 && edges == k - 1 && c.iter().any(|&x| g.degree(x) == k - 1)
    })
}

fn is_five_cycle(g: &Graph) -> bool {
    g.order() == 5 && (0..5).all(|x| g.degree(x) == 2) && components(g).len() == 1
}

fn is_k23(g: &Graph) -> bool {
    if g.order() != 5 || g.edge_count() != 6 {
        return false;
    }
    (0..5).any(|a| {
        (a + 1..5).any(|b| {
            let small = VertexSet::singleton(a).with(b);
            (0..5).all(|x| {
                (x + 1..5).all(|y| g.has_edge(x, y) == (small.contains(x) != small.contains(y)))
            })
        })
    })
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let pairs = n * (n - 1) / 2;
    let code = if pairs == 0 { 0 } else { rng.gen::<u64>() & ((1u64 << pairs) - 1) };
    Graph::from_edge_code(ground(n), code)
}

fn random_family(rng: &mut ChaCha8Rng, n: usize) -> Vec<VertexSet> {
    let k = rng.gen_range(1..=8);
    (0..k)
        .map(|_| VertexSet::from_bits(rng.gen_range(1u64..(1u64 << n))))
        .collect()
}

fn random_antichain(rng: &mut ChaCha8Rng, n: usize) -> Hypergraph {
    Hypergraph::minimize(ground(n), random_family(rng, n)).expect("non-empty family")
}

/// A random `H` with `U_{r,Ω} ≤ H`: every `r`-set keeps a random non-empty
/// subset of itself.
fn random_above_uniform(rng: &mut ChaCha8Rng, n: usize, r: usize) -> Hypergraph {
    let family: Vec<VertexSet> = uniform_sets(n, r)
        .into_iter()
        .map(|a| {
            let members: Vec<usize> = a.iter().collect();
            loop {
                let pick = VertexSet::from_indices(members.iter().copied().filter(|_| rng.gen_bool(0.7)));
                if !pick.is_empty() {
                    break pick;
                }
            }
        })
        .collect();
    Hypergraph::minimize(ground(n), family).expect("non-empty family")
}

/// Every non-empty antichain of non-empty subsets of an `n`-set.
fn all_antichains(n: usize) -> Vec<Hypergraph> {
    let subsets: Vec<VertexSet> = all_subsets(n).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn rec(
        subsets: &[VertexSet],
        i: usize,
        chosen: &mut Vec<VertexSet>,
        out: &mut Vec<Vec<VertexSet>>,
    ) {
        if i == subsets.len() {
            if !chosen.is_empty() {
                out.push(chosen.clone());
            }
            return;
        }
        rec(subsets, i + 1, chosen, out);
        let s = subsets[i];
        if chosen.iter().all(|&c| !c.is_subset(s) && !s.is_subset(c)) {
            chosen.push(s);
            rec(subsets, i + 1, chosen, out);
            chosen.pop();
        }
    }
    rec(&subsets, 0, &mut chosen, &mut out);
    out.into_iter()
        .map(|e| Hypergraph::minimize(ground(n), e).expect("antichain"))
        .collect()
}

fn all_graphs(n: usize) -> Vec<Graph> {
    enumerate_family(GraphFamilyKind::AllGraphs, &ground(n), Some(n))
        .expect("small n")
        .into_vec()
}

fn hyper(n: usize, edges: &[&[usize]]) -> Hypergraph {
    let sets = edges
        .iter()
        .map(|e| VertexSet::from_indices(e.iter().map(|&x| x - 1)))
        .collect();
    Hypergraph::new(ground(n), sets).expect("literal antichain")
}

fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    let edges: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
    Graph::from_edges(ground(n), &edges).expect("literal graph")
}

fn run_parallel<I: Sync>(items: &[I], workers: usize, f: impl Fn(&I) -> Tally + Sync) -> Tally {
    let mut total = Tally::default();
    for t in map_items(items, workers, f) {
        total.absorb(t);
    }
    total
}

// ---------------------------------------------------------------------------
// Criteria.

/// Minimal dominating sets against subset enumeration and `tr(𝒩[G])`.
pub fn oracle_equivalence(cfg: &VerifyConfig) -> CheckResult {
    let mut graphs: Vec<Graph> = (1..=5).flat_map(all_graphs).collect();
    let exhaustive = graphs.len();
    let mut rng = cfg.rng(1);
    for n in [6, 7] {
        for _ in 0..500 {
            graphs.push(random_graph(&mut rng, n));
        }
    }
    let tally = run_parallel(&graphs, cfg.workers, |g| {
        let mut t = Tally::default();
        let d = g.minimal_dominating_sets();
        let brute = brute_dominating_sets(g);
        t.check(d.edges() == brute.as_slice(), || format!("𝒟({g}) differs from enumeration"));
        t.check(d == g.minimal_closed_neighborhoods().transversal(), || {
            format!("𝒟({g}) differs from tr(𝒩[G])")
        });
        let nbhd = sorted((0..g.order()).map(|x| g.closed_neighborhood(x)).collect());
        let nbhd_min: Vec<VertexSet> = nbhd
            .iter()
            .copied()
            .filter(|a| !nbhd.iter().any(|b| b != a && b.is_subset(*a)))
            .collect();
        t.check(brute_transversal(g.order(), &nbhd_min) == brute, || {
            format!("tr(𝒩[{g}]) enumeration differs")
        });
        t
    });
    tally.finish(
        1,
        "oracle equivalence",
        format!("{exhaustive} exhaustive graphs (n≤5), 1000 random (n=6,7)"),
    )
}

/// Transversal involution, order axioms and the meet as greatest lower bound.
pub fn involution_and_order(cfg: &VerifyConfig) -> CheckResult {
    let mut tally = Tally::default();
    let small: Vec<Hypergraph> = (1..=3).flat_map(all_antichains).collect();
    for h in &small {
        let n = h.ground().len();
        tally.check(h.transversal().transversal() == *h, || format!("tr∘tr ≠ id on {h}"));
        tally.check(h.transversal().edges() == brute_transversal(n, h.edges()), || {
            format!("tr({h}) differs from enumeration")
        });
    }
    for n in 1..=3 {
        let hs: Vec<&Hypergraph> = small.iter().filter(|h| h.ground().len() == n).collect();
        for a in &hs {
            tally.check(a.is_leq(a).unwrap(), || format!("≤ not reflexive at {a}"));
            for b in &hs {
                let ab = a.is_leq(b).unwrap();
                tally.check(ab == brute_leq(n, a.edges(), b.edges()), || {
                    format!("{a} ≤ {b} differs from up-closure inclusion")
                });
                if ab && b.is_leq(a).unwrap() {
                    tally.check(a == b, || format!("≤ not antisymmetric at {a}, {b}"));
                }
                let m = Hypergraph::meet(&[(*a).clone(), (*b).clone()]).unwrap();
                tally.check(m.edges() == brute_meet(n, &[a.edges(), b.edges()]), || {
                    format!("{a} ⊓ {b} differs from min(H₁⁺ ∩ H₂⁺)")
                });
                for c in &hs {
                    if ab && b.is_leq(c).unwrap() {
                        tally.check(a.is_leq(c).unwrap(), || format!("≤ not transitive at {a}, {b}, {c}"));
                    }
                    if c.is_leq(a).unwrap() && c.is_leq(b).unwrap() {
                        tally.check(c.is_leq(&m).unwrap(), || format!("{c} is a lower bound above the meet"));
                    }
                }
            }
        }
    }
    let exhaustive = small.len();

    let mut rng = cfg.rng(2);
    let triples: Vec<(Hypergraph, Hypergraph, Hypergraph)> = (0..1000)
        .map(|_| {
            let n = rng.gen_range(1..=6);
            (
                random_antichain(&mut rng, n),
                random_antichain(&mut rng, n),
                random_antichain(&mut rng, n),
            )
        })
        .collect();
    tally.absorb(run_parallel(&triples, cfg.workers, |(a, b, c)| {
        let mut t = Tally::default();
        let n = a.ground().len();
        t.check(a.transversal().transversal() == *a, || format!("tr∘tr ≠ id on {a}"));
        t.check(a.transversal().edges() == brute_transversal(n, a.edges()), || {
            format!("tr({a}) differs from enumeration")
        });
        let ab = a.is_leq(b).unwrap();
        t.check(ab == brute_leq(n, a.edges(), b.edges()), || format!("{a} ≤ {b} wrong"));
        let m = Hypergraph::meet(&[a.clone(), b.clone(), c.clone()]).unwrap();
        t.check(
            m.edges() == brute_meet(n, &[a.edges(), b.edges(), c.edges()]),
            || format!("meet of {a}, {b}, {c} wrong"),
        );
        t.check(m.is_leq(a).unwrap() && m.is_leq(b).unwrap() && m.is_leq(c).unwrap(), || {
            format!("meet of {a}, {b}, {c} is not a lower bound")
        });
        if ab && b.is_leq(c).unwrap() {
            t.check(a.is_leq(c).unwrap(), || format!("≤ not transitive at {a}, {b}, {c}"));
        }
        t
    }));
    tally.finish(
        2,
        "involution and order laws",
        format!("{exhaustive} exhaustive antichains (n≤3), 1000 random triples (n≤6)"),
    )
}

/// `(2m)! / (2^m m!)` by direct products.
fn matching_count(m: u64) -> u64 {
    let num: u64 = (1..=2 * m).product();
    let den: u64 = (1..=m).map(|i| 2 * i).product();
    num / den
}

/// Closed-form recognition of `U_{r,Ω}` against the general search.
pub fn uniform_characterization(cfg: &VerifyConfig) -> CheckResult {
    let mut tally = Tally::default();
    let search = cfg.search();
    let mut dominations = Vec::new();
    for n in 1..=5 {
        for r in 1..=n {
            let u = Hypergraph::uniform(r, &ground(n)).unwrap();
            let closed = uniform_recognition(r, &ground(n)).unwrap();
            let general = recognize(&u, &search).unwrap();
            tally.check(closed == general, || format!("U_{{{r},{n}}}: closed form and search disagree"));
            let expected = r == 1 || r == n || (r == 2 && n % 2 == 0);
            tally.check(general.is_domination == expected, || {
                format!("U_{{{r},{n}}} domination = {}", general.is_domination)
            });
            if general.is_domination {
                dominations.push(format!("({r},{n})"));
            }
        }
    }
    for m in [2usize, 3] {
        let n = 2 * m;
        let u = Hypergraph::uniform(2, &ground(n)).unwrap();
        let general = recognize(&u, &search).unwrap();
        let closed = uniform_recognition(2, &ground(n)).unwrap();
        let expected = matching_count(m as u64) as usize;
        tally.check(general.realizations.len() == expected, || {
            format!("U_{{2,{n}}} has {} realizations, expected {expected}", general.realizations.len())
        });
        tally.check(general == closed, || format!("U_{{2,{n}}}: closed form and search disagree"));
        for g in &general.realizations {
            let complement_degree_one = (0..n).all(|x| g.degree(x) == n - 2);
            tally.check(complement_degree_one, || format!("{g} is not a perfect-matching complement"));
        }
    }
    for (r, n) in [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5)] {
        let u = Hypergraph::uniform(r, &ground(n)).unwrap();
        tally.check(!recognize(&u, &search).unwrap().is_domination, || {
            format!("U_{{{r},{n}}} recognized as domination")
        });
    }
    tally.finish(
        3,
        "uniform recognition",
        format!("domination cases n≤5: {}; U_{{2,4}}→3, U_{{2,6}}→15", dominations.join(" ")),
    )
}

/// Completions of `U_{2,Ω}` on three points.
pub fn three_point_completions(cfg: &VerifyConfig) -> CheckResult {
    let mut tally = Tally::default();
    let search = cfg.search();
    let g3 = ground(3);
    let all: Vec<Hypergraph> = completions(2, &g3, &search)
        .unwrap()
        .into_iter()
        .map(|(h, w)| {
            tally.check(w.minimal_dominating_sets() == h, || format!("witness {w} does not realize {h}"));
            h
        })
        .collect();
    let h1 = hyper(3, &[&[1], &[2, 3]]);
    let h2 = hyper(3, &[&[2], &[1, 3]]);
    let h3 = hyper(3, &[&[3], &[1, 2]]);
    let u1 = hyper(3, &[&[1], &[2], &[3]]);
    let expected: BTreeSet<Hypergraph> = [h1.clone(), h2.clone(), h3.clone(), u1].into();
    tally.check(all.iter().cloned().collect::<BTreeSet<_>>() == expected && all.len() == 4, || {
        format!("Dom(2,Ω₃) has {} elements", all.len())
    });
    let minimal: BTreeSet<Hypergraph> = minimal_completions(2, &g3, &search)
        .unwrap()
        .into_iter()
        .map(|(h, _)| h)
        .collect();
    tally.check(minimal == [h1.clone(), h2.clone(), h3.clone()].into(), || {
        format!("𝒟om(2,Ω₃) has {} elements", minimal.len())
    });
    let d = decomposition_parameter(2, &g3, &search).unwrap();
    tally.check(d.value == 2 && d.witness.len() == 2, || format!("𝔇(2,Ω₃) = {}", d.value));
    let w: Vec<&[VertexSet]> = d.witness.iter().map(|h| h.edges()).collect();
    tally.check(brute_meet(3, &w) == uniform_sets(3, 2), || "witness pair does not meet to U₂".into());
    tally.check(
        brute_meet(3, &[h1.edges(), h2.edges(), h3.edges()]) == uniform_sets(3, 2),
        || "H₁ ⊓ H₂ ⊓ H₃ ≠ U₂".into(),
    );
    tally.finish(4, "Dom(2,Ω₃)", format!("|Dom|={} |𝒟om|={} 𝔇={}", all.len(), minimal.len(), d.value))
}

fn h_omega_literal(n: usize, omega: usize) -> Vec<VertexSet> {
    let mut v: Vec<VertexSet> = uniform_sets(n, 2)
        .into_iter()
        .filter(|s| !s.contains(omega))
        .collect();
    v.push(VertexSet::singleton(omega));
    sorted(v)
}

/// Minimal completions of `U_{2,Ω}` for odd `n = 5`.
pub fn rank_two_odd(cfg: &VerifyConfig) -> CheckResult {
    let mut tally = Tally::default();
    let search = cfg.search();
    let n = 5;
    let g5 = ground(n);
    let minimal = minimal_completions(2, &g5, &search).unwrap();
    let found: BTreeSet<Vec<VertexSet>> = minimal.iter().map(|(h, _)| h.edges().to_vec()).collect();
    let expected: BTreeSet<Vec<VertexSet>> = (0..n).map(|w| h_omega_literal(n, w)).collect();
    tally.check(found == expected && minimal.len() == n, || {
        format!("𝒟om(2,Ω₅) has {} elements", minimal.len())
    });
    for (h, witnesses) in &minimal {
        let omega = h.edges()[0].first().unwrap();
        for g in witnesses {
            tally.check(g.degree(omega) == n - 1, || format!("{g}: ω={} not universal", omega + 1));
            let rest = g5.full().without(omega);
            let sub = g.induced(rest).unwrap();
            tally.check(brute_dominating_sets(&sub) == uniform_sets(n - 1, 2), || {
                format!("{g} minus ω does not realize U₂")
            });
        }
    }
    let hs: Vec<Hypergraph> = minimal.iter().map(|(h, _)| h.clone()).collect();
    let mut pairs = 0;
    for i in 0..hs.len() {
        for j in i + 1..hs.len() {
            pairs += 1;
            tally.check(
                verify_meet_decomposition(&[hs[i].clone(), hs[j].clone()], 2, &g5).unwrap()
                    && brute_meet(n, &[hs[i].edges(), hs[j].edges()]) == uniform_sets(n, 2),
                || format!("{} ⊓ {} ≠ U₂", hs[i], hs[j]),
            );
        }
    }
    let d = decomposition_parameter(2, &g5, &search).unwrap();
    tally.check(d.value == 2, || format!("𝔇(2,Ω₅) = {}", d.value));
    tally.finish(
        5,
        "Dom(2,Ω₅) for odd n",
        format!("|𝒟om|={} pairs={} 𝔇={}", minimal.len(), pairs, d.value),
    )
}

/// Minimal completions of `U_{n−1,Ω}` are the star-forest hypergraphs.
pub fn star_forest_completions(cfg: &VerifyConfig) -> CheckResult {
    let mut tally = Tally::default();
    let search = cfg.search();
    let mut counts = Vec::new();
    for (n, expected) in [(3usize, 3usize), (4, 7), (5, 35)] {
        let g = ground(n);
        let forests = enumerate_family(GraphFamilyKind::StarForests, &g, None)
            .unwrap()
            .into_vec();
        let filtered: Vec<Graph> = all_graphs(n).into_iter().filter(is_star_forest_oracle).collect();
        tally.check(forests == filtered, || format!("star forest generator differs from filter at n={n}"));
        tally.check(forests.len() == expected, || format!("{} star forests at n={n}", forests.len()));
        let from_forests: BTreeSet<Vec<VertexSet>> =
            forests.iter().map(brute_dominating_sets).collect();
        tally.check(from_forests.len() == forests.len(), || format!("star forests collide at n={n}"));
        let minimal: BTreeSet<Vec<VertexSet>> = minimal_completions(n - 1, &g, &search)
            .unwrap()
            .into_iter()
            .map(|(h, _)| h.edges().to_vec())
            .collect();
        tally.check(minimal == from_forests, || format!("𝒟om({},Ω{n}) ≠ star forests", n - 1));
        counts.push(minimal.len().to_string());
    }
    tally.finish(6, "Dom(n−1,Ω) = star forests", format!("counts n=3,4,5: {}", counts.join(",")))
}

/// The eight-point example: forest count, `𝒟(G₀)` and its 25 realizations.
pub fn eight_point_example(cfg: &VerifyConfig) -> CheckResult {
    let mut tally = Tally::default();
    let g8 = ground(8);
    let forests = enumerate_family(GraphFamilyKind::StarForests, &g8, None).unwrap();
    tally.check(forests.len() == 5041, || format!("{} star forests on 8 points", forests.len()));
    let distinct: BTreeSet<Hypergraph> = forests.iter().map(|f| f.minimal_dominating_sets()).collect();
    tally.check(distinct.len() == 5041, || format!("{} distinct 𝒟(F)", distinct.len()));
    let g0 = graph(8, &[(1, 2), (3, 4), (5, 6), (5, 7), (5, 8)]);
    let listed = hyper(
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
        ],
    );
    let d0 = g0.minimal_dominating_sets();
    tally.check(d0 == listed, || format!("𝒟(G₀) = {d0}"));
    tally.check(brute_dominating_sets(&g0).as_slice() == listed.edges(), || "enumeration of 𝒟(G₀) differs".into());
    let expansion = realization_expansion(&g0, &cfg.search()).unwrap();
    tally.check(expansion.len() == 25, || format!("{} realizations of 𝒟(G₀)", expansion.len()));
    for g in &expansion {
        tally.check(brute_dominating_sets(g).as_slice() == listed.edges(), || format!("{g} does not realize 𝒟(G₀)"));
    }
    tally.finish(
        7,
        "eight-point star forests",
        format!("forests={} |𝒟(G₀)|={} realizations={}", forests.len(), d0.len(), expansion.len()),
    )
}

/// The maximal-star witness bound and exact values for small `n`.
pub fn max_star_decomposition(cfg: &VerifyConfig) -> CheckResult {
    let mut tally = Tally::default();
    for n in 3..=8 {
        let g = ground(n);
        let stars: Vec<Hypergraph> = (0..n - 1)
            .map(|c| {
                let edges: Vec<(usize, usize)> = (0..n).filter(|&v| v != c).map(|v| (c, v)).collect();
                Graph::from_edges(g.clone(), &edges).unwrap().minimal_dominating_sets()
            })
            .collect();
        for (c, h) in stars.iter().enumerate() {
            let expected = sorted(vec![VertexSet::singleton(c), g.full().without(c)]);
            tally.check(h.edges() == expected.as_slice(), || format!("𝒟(S_{}) = {h} at n={n}", c + 1));
        }
        tally.check(verify_meet_decomposition(&stars, n - 1, &g).unwrap(), || {
            format!("maximal stars do not meet to U_{{{},{n}}}", n - 1)
        });
        let forests: BTreeSet<Hypergraph> = structured_minimal_completions(n - 1, &g)
            .unwrap()
            .unwrap()
            .into_iter()
            .collect();
        tally.check(stars.iter().all(|h| forests.contains(h)), || {
            format!("a maximal star is not a minimal completion at n={n}")
        });
        if n <= 6 {
            let hs: Vec<&[VertexSet]> = stars.iter().map(|h| h.edges()).collect();
            tally.check(brute_meet(n, &hs) == uniform_sets(n, n - 1), || {
                format!("enumerated meet of maximal stars wrong at n={n}")
            });
        }
    }
    let mut exact = Vec::new();
    for n in 3..=5 {
        let d = decomposition_parameter(n - 1, &ground(n), &cfg.search()).unwrap();
        tally.check(d.value == n - 1 && d.exactness == Exactness::Exhaustive, || {
            format!("𝔇({},Ω{n}) = {}", n - 1, d.value)
        });
        tally.check(verify_meet_decomposition(&d.witness, n - 1, &ground(n)).unwrap(), || {
            format!("𝔇 witness invalid at n={n}")
        });
        exact.push(d.value.to_string());
    }
    tally.finish(
        8,
        "maximal-star decomposition",
        format!("witness verified n=3..8; exact 𝔇(n−1) for n=3,4,5: {}", exact.join(",")),
    )
}

/// `𝒟om(3,Ω₅)`: cycle and bipartite types, and which pairs decompose.
pub fn rank_three_five_points(cfg: &VerifyConfig) -> CheckResult {
    let mut tally = Tally::default();
    let search = cfg.search();
    let g5 = ground(5);
    let minimal = minimal_completions(3, &g5, &search).unwrap();
    tally.check(minimal.len() == 22, || format!("|𝒟om(3,Ω₅)| = {}", minimal.len()));
    let mut cycle_of: Vec<Option<Graph>> = Vec::new();
    let (mut cycles, mut bipartite) = (0, 0);
    for (h, witnesses) in &minimal {
        let c5 = witnesses.iter().find(|g| is_five_cycle(g)).cloned();
        let k23 = witnesses.iter().any(is_k23);
        tally.check(c5.is_some() != k23, || format!("{h} is not exactly one of the two types"));
        if c5.is_some() {
            cycles += 1;
        }
        if k23 {
            bipartite += 1;
        }
        cycle_of.push(c5);
    }
    tally.check(cycles == 12 && bipartite == 10, || format!("{cycles} C₅-type, {bipartite} K₂,₃-type"));
    let structured: Vec<Hypergraph> = structured_minimal_completions(3, &g5).unwrap().unwrap();
    let swept: Vec<Hypergraph> = minimal.iter().map(|(h, _)| h.clone()).collect();
    tally.check(structured == swept, || "closed-form family differs from the sweep".into());
    let d = decomposition_parameter(3, &g5, &search).unwrap();
    tally.check(d.value == 2, || format!("𝔇(3,Ω₅) = {}", d.value));

    let u3 = uniform_sets(5, 3);
    let mut pairs = 0;
    let mut decomposing = 0;
    for i in 0..swept.len() {
        for j in i..swept.len() {
            pairs += 1;
            let meets = brute_meet(5, &[swept[i].edges(), swept[j].edges()]) == u3;
            tally.check(
                meets == verify_meet_decomposition(&[swept[i].clone(), swept[j].clone()], 3, &g5).unwrap(),
                || "library and enumerated meets disagree".into(),
            );
            let complementary = match (&cycle_of[i], &cycle_of[j]) {
                (Some(a), Some(b)) => {
                    let ea: BTreeSet<_> = a.edges().into_iter().collect();
                    let eb: BTreeSet<_> = b.edges().into_iter().collect();
                    ea.is_disjoint(&eb) && ea.len() + eb.len() == 10
                }
                _ => false,
            };
            tally.check(meets == complementary, || {
                format!("{} ⊓ {}: meet={meets}, complementary cycles={complementary}", swept[i], swept[j])
            });
            if meets {
                decomposing += 1;
            }
        }
    }
    tally.finish(
        9,
        "Dom(3,Ω₅)",
        format!(
            "|𝒟om|={} C5={cycles} K2,3={bipartite} 𝔇={} pairs={pairs} decomposing={decomposing}",
            minimal.len(),
            d.value
        ),
    )
}

/// Star forest centers chosen independently of the library: the vertex of
/// maximum degree, the smaller end of a `K₂`.
fn centers_and_leaves(g: &Graph) -> Vec<(usize, VertexSet)> {
    components(g)
        .into_iter()
        .map(|c| {
            let center = *c.iter().max_by_key(|&&x| (g.degree(x), std::cmp::Reverse(x))).unwrap();
            let leaves = VertexSet::from_indices(c.iter().copied().filter(|&x| x != center));
            (center, leaves)
        })
        .collect()
}

fn random_star_forest(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    // Random partition into blocks of size ≥ 2, random center per block.
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut i = 0;
    while i < n {
        let left = n - i;
        let mut size = rng.gen_range(2..=left);
        if left - size == 1 {
            size = left;
        }
        blocks.push(order[i..i + size].to_vec());
        i += size;
    }
    let mut edges = Vec::new();
    for b in blocks {
        let c = b[rng.gen_range(0..b.len())];
        edges.extend(b.iter().filter(|&&x| x != c).map(|&x| (c, x)));
    }
    Graph::from_edges(ground(n), &edges).unwrap()
}

fn check_union_cover(g: &Graph) -> Tally {
    let mut t = Tally::default();
    let d = g.minimal_dominating_sets();
    let union = d.edges().iter().fold(VertexSet::EMPTY, |a, &b| a | b);
    let inter = d.edges().iter().fold(g.vertices(), |a, &b| a & b);
    let isolated = VertexSet::from_indices((0..g.order()).filter(|&x| g.degree(x) == 0));
    t.check(union == g.vertices(), || format!("⋃𝒟({g}) ≠ V"));
    t.check(inter == isolated, || format!("⋂𝒟({g}) ≠ V₀"));
    t
}

fn shifted(sets: &[VertexSet], by: usize) -> Vec<VertexSet> {
    sets.iter().map(|s| VertexSet::from_bits(s.bits() << by)).collect()
}

/// Relabels `gs` onto disjoint blocks `a1..`, `b1..`, ... in order.
fn disjoint_copies(gs: &[Graph]) -> Vec<Graph> {
    gs.iter()
        .enumerate()
        .map(|(k, g)| {
            let tag = (b'a' + k as u8) as char;
            let labels: Vec<String> = (1..=g.order()).map(|i| format!("{tag}{i}")).collect();
            Graph::from_edges(GroundSet::new(labels).unwrap(), &g.edges()).unwrap()
        })
        .collect()
}

fn check_operations(parts: &[Graph]) -> Tally {
    let mut t = Tally::default();
    let parts = disjoint_copies(parts);
    let offsets: Vec<usize> = parts
        .iter()
        .scan(0, |acc, g| {
            let o = *acc;
            *acc += g.order();
            Some(o)
        })
        .collect();
    let doms: Vec<Vec<VertexSet>> = parts
        .iter()
        .zip(&offsets)
        .map(|(g, &o)| shifted(brute_dominating_sets(g).as_slice(), o))
        .collect();

    // Disjoint union: all unions of one minimal dominating set per part.
    let mut unions = vec![VertexSet::EMPTY];
    for d in &doms {
        unions = unions
            .iter()
            .flat_map(|&u| d.iter().map(move |&x| u | x))
            .collect();
    }
    let sum = Graph::disjoint_union(&parts).unwrap();
    t.check(sum.minimal_dominating_sets().edges() == sorted(unions).as_slice(), || {
        format!("𝒟 of disjoint union {sum} differs")
    });

    // Join: the parts' sets plus cross pairs of non-universal vertices.
    let mut family: Vec<VertexSet> = doms.concat();
    let non_universal: Vec<Vec<usize>> = parts
        .iter()
        .zip(&offsets)
        .map(|(g, &o)| {
            (0..g.order())
                .filter(|&x| g.degree(x) + 1 != g.order())
                .map(|x| x + o)
                .collect()
        })
        .collect();
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            for &x in &non_universal[i] {
                for &y in &non_universal[j] {
                    family.push(VertexSet::singleton(x).with(y));
                }
            }
        }
    }
    let join = Graph::join(&parts).unwrap();
    t.check(join.minimal_dominating_sets().edges() == sorted(family).as_slice(), || {
        format!("𝒟 of join {join} differs")
    });
    t
}

fn check_union_of_stars(g: &Graph) -> Tally {
    let mut t = Tally::default();
    let stars = centers_and_leaves(g);
    let r = stars.len();
    let expected: Vec<VertexSet> = (0u64..(1 << r))
        .map(|j| {
            stars
                .iter()
                .enumerate()
                .fold(VertexSet::EMPTY, |acc, (i, &(c, leaves))| {
                    if j >> i & 1 == 1 {
                        acc.with(c)
                    } else {
                        acc | leaves
                    }
                })
        })
        .collect();
    let expected = sorted(expected);
    let d = g.minimal_dominating_sets();
    t.check(d.len() == 1 << r, || format!("|𝒟({g})| = {} ≠ 2^{r}", d.len()));
    t.check(d.edges() == expected.as_slice(), || format!("𝒟({g}) is not the center/leaf family"));
    t
}

fn check_spanning(g: &Graph, sub: &Graph) -> Tally {
    let mut t = Tally::default();
    t.check(
        sub.minimal_dominating_sets().is_leq(&g.minimal_dominating_sets()).unwrap(),
        || format!("𝒟({sub}) ≰ 𝒟({g})"),
    );
    t
}

fn check_transversal_antitone(a: &Hypergraph, b: &Hypergraph) -> Tally {
    let mut t = Tally::default();
    if a.is_leq(b).unwrap() {
        t.check(b.transversal().is_leq(&a.transversal()).unwrap(), || {
            format!("{a} ≤ {b} but tr({b}) ≰ tr({a})")
        });
    }
    t
}

/// `H[Ω'] ≤ 𝒟(G')` ⇔ `H ≤ 𝒟(G' ∨ K_{Ω∖Ω'})`, with the join built directly.
fn check_restrict_join(h: &Hypergraph, within: VertexSet, sub: &Graph) -> Tally {
    let mut t = Tally::default();
    let n = h.ground().len();
    let Some(restricted) = h.restrict(within).unwrap() else {
        return t;
    };
    let members: Vec<usize> = within.iter().collect();
    let mut edges: Vec<(usize, usize)> = sub.edges().into_iter().map(|(a, b)| (members[a], members[b])).collect();
    for a in 0..n {
        for b in a + 1..n {
            if !within.contains(a) || !within.contains(b) {
                edges.push((a, b));
            }
        }
    }
    let joined = Graph::from_edges(h.ground().clone(), &edges).unwrap();
    let left = restricted.is_leq(&sub.minimal_dominating_sets()).unwrap();
    let right = h.is_leq(&joined.minimal_dominating_sets()).unwrap();
    let expected_restriction: Vec<VertexSet> = sorted(
        h.edges()
            .iter()
            .filter(|e| e.is_subset(within))
            .map(|e| e.compress(within))
            .collect(),
    );
    t.check(restricted.edges() == expected_restriction.as_slice(), || format!("restriction of {h} wrong"));
    t.check(left == right, || format!("equivalence fails for {h}, Ω'={within:?}, G'={sub}"));
    t
}

fn check_size_transversal(h: &Hypergraph) -> Tally {
    let mut t = Tally::default();
    t.check(h.transversal().edges().iter().all(|x| x.len() >= 3), || {
        format!("tr({h}) has a member of size < 3")
    });
    t
}

fn check_separation(h: &Hypergraph, r: usize) -> Tally {
    let mut t = Tally::default();
    let n = h.ground().len();
    let h0 = separating_completion(h, r).unwrap();
    let u = uniform_sets(n, r);
    t.check(brute_leq(n, &u, h0.edges()), || format!("U_{r} ≰ H₀ for {h}"));
    t.check(!brute_leq(n, h.edges(), h0.edges()), || format!("{h} ≤ H₀"));
    let g0 = separating_realization(&h0);
    t.check(brute_dominating_sets(&g0).as_slice() == h0.edges(), || format!("{g0} does not realize {h0}"));
    t.check(h0.has_full_ground(), || format!("{h0} does not cover Ω"));
    t
}

/// Lemma-level property suites on random and exhaustive instances.
pub fn lemma_suites(cfg: &VerifyConfig) -> CheckResult {
    const RANDOM: usize = 500;
    let mut rng = cfg.rng(10);
    let w = cfg.workers;
    let mut tally = Tally::default();
    let mut sizes = Vec::new();

    // Union and intersection of 𝒟(G).
    let mut graphs: Vec<Graph> = (1..=4).flat_map(all_graphs).collect();
    graphs.extend((0..RANDOM).map(|_| {
        let n = rng.gen_range(1..=6);
        random_graph(&mut rng, n)
    }));
    tally.absorb(run_parallel(&graphs, w, check_union_cover));
    sizes.push(format!("union={}", graphs.len()));

    // Disjoint union and join formulas.
    let small: Vec<Graph> = (1..=3).flat_map(all_graphs).collect();
    let mut tuples: Vec<Vec<Graph>> = Vec::new();
    for a in &small {
        for b in &small {
            if a.order() + b.order() <= 4 {
                tuples.push(vec![a.clone(), b.clone()]);
            }
        }
    }
    for _ in 0..RANDOM {
        let k = rng.gen_range(2..=3);
        let mut total = rng.gen_range(k..=6);
        let mut parts = Vec::new();
        for i in 0..k {
            let n = if i + 1 == k { total } else { rng.gen_range(1..=total - (k - i - 1)) };
            total -= n;
            parts.push(random_graph(&mut rng, n));
        }
        tuples.push(parts);
    }
    tally.absorb(run_parallel(&tuples, w, |p| check_operations(p)));
    sizes.push(format!("operations={}", tuples.len()));

    // 2^r minimal dominating sets of a union of r stars.
    let mut forests: Vec<Graph> = (2..=4)
        .flat_map(|n| enumerate_family(GraphFamilyKind::StarForests, &ground(n), None).unwrap().into_vec())
        .collect();
    forests.extend((0..RANDOM).map(|_| {
        let n = rng.gen_range(2..=6);
        random_star_forest(&mut rng, n)
    }));
    for f in &forests {
        tally.check(is_star_forest_oracle(f), || format!("{f} is not a star forest"));
    }
    tally.absorb(run_parallel(&forests, w, check_union_of_stars));
    sizes.push(format!("stars={}", forests.len()));

    // Spanning subgraphs lower 𝒟.
    let mut spanning: Vec<(Graph, Graph)> = Vec::new();
    for n in 1..=4 {
        let all = all_graphs(n);
        for g in &all {
            let gc = g.edge_code().unwrap();
            for s in &all {
                if s.edge_code().unwrap() & !gc == 0 {
                    spanning.push((g.clone(), s.clone()));
                }
            }
        }
    }
    for _ in 0..RANDOM {
        let n = rng.gen_range(1..=6);
        let g = random_graph(&mut rng, n);
        let code = g.edge_code().unwrap() & rng.gen::<u64>();
        spanning.push((g, Graph::from_edge_code(ground(n), code)));
    }
    tally.absorb(run_parallel(&spanning, w, |(g, s)| check_spanning(g, s)));
    sizes.push(format!("spanning={}", spanning.len()));

    // tr is antitone.
    let mut antitone: Vec<(Hypergraph, Hypergraph)> = Vec::new();
    for n in 1..=3 {
        let all = all_antichains(n);
        for a in &all {
            for b in &all {
                antitone.push((a.clone(), b.clone()));
            }
        }
    }
    let four = all_antichains(4);
    for _ in 0..RANDOM {
        antitone.push((four[rng.gen_range(0..four.len())].clone(), four[rng.gen_range(0..four.len())].clone()));
    }
    for _ in 0..RANDOM {
        // Pairs with H ≤ H' by construction: enlarge each edge of H'.
        let n = rng.gen_range(1..=6);
        let upper = random_antichain(&mut rng, n);
        let lower: Vec<VertexSet> = upper
            .edges()
            .iter()
            .map(|&e| e | VertexSet::from_bits(rng.gen::<u64>() & ground(n).full().bits()))
            .collect();
        antitone.push((Hypergraph::minimize(ground(n), lower).unwrap(), upper));
    }
    let comparable = antitone.iter().filter(|(a, b)| a.is_leq(b).unwrap()).count();
    tally.absorb(run_parallel(&antitone, w, |(a, b)| check_transversal_antitone(a, b)));
    sizes.push(format!("antitone={}/{}", comparable, antitone.len()));

    // Restriction against joins with a complete graph.
    let mut restrict_join: Vec<(Hypergraph, VertexSet, Graph)> = Vec::new();
    for n in 2..=4 {
        let full = ground(n).full();
        let antichains = all_antichains(n);
        for m in 1..full.bits() {
            let within = VertexSet::from_bits(m);
            let sub_ground = ground(n).subset(within).unwrap();
            let subs = enumerate_family(GraphFamilyKind::AllGraphs, &sub_ground, None).unwrap();
            for g in subs.iter() {
                for h in &antichains {
                    if h.edges().iter().any(|e| e.is_subset(within)) {
                        restrict_join.push((h.clone(), within, g.clone()));
                    }
                }
            }
        }
    }
    let exhaustive_restrict_join = restrict_join.len();
    while restrict_join.len() < exhaustive_restrict_join + RANDOM {
        let n = rng.gen_range(2..=6);
        let within = VertexSet::from_bits(rng.gen_range(1..(1u64 << n) - 1));
        let h = random_antichain(&mut rng, n);
        if !h.edges().iter().any(|e| e.is_subset(within)) {
            continue;
        }
        let sub_ground = ground(n).subset(within).unwrap();
        let k = within.len();
        let sub = if k >= 2 && rng.gen_bool(0.5) {
            let f = random_star_forest(&mut rng, k);
            Graph::from_edges(sub_ground, &f.edges()).unwrap()
        } else {
            let g = random_graph(&mut rng, k);
            Graph::from_edges(sub_ground, &g.edges()).unwrap()
        };
        restrict_join.push((h, within, sub));
    }
    tally.absorb(run_parallel(&restrict_join, w, |(h, within, g)| check_restrict_join(h, *within, g)));
    sizes.push(format!("restrict_join={}", restrict_join.len()));

    // Transversals of hypergraphs above U_3 have members of size ≥ 3.
    let mut above: Vec<Hypergraph> = completions(3, &ground(5), &cfg.search())
        .unwrap()
        .into_iter()
        .map(|(h, _)| h)
        .collect();
    let computed = above.len();
    for _ in 0..RANDOM {
        let n = rng.gen_range(5..=6);
        above.push(random_above_uniform(&mut rng, n, 3));
    }
    tally.absorb(run_parallel(&above, w, check_size_transversal));
    sizes.push(format!("size-tr={}+{}", computed, above.len() - computed));

    // Separating completions.
    let mut separating: Vec<(Hypergraph, usize)> = Vec::new();
    for n in 2..=4 {
        for h in all_antichains(n) {
            for r in 2..=n {
                let u = uniform_sets(n, r);
                if h.edges() != u.as_slice() && brute_leq(n, &u, h.edges()) {
                    separating.push((h.clone(), r));
                }
            }
        }
    }
    let exhaustive_sep = separating.len();
    while separating.len() < exhaustive_sep + 1000 {
        let n = rng.gen_range(2..=6);
        let r = rng.gen_range(2..=n);
        let h = random_above_uniform(&mut rng, n, r);
        if h.edges() != uniform_sets(n, r).as_slice() {
            separating.push((h, r));
        }
    }
    tally.absorb(run_parallel(&separating, w, |(h, r)| check_separation(h, *r)));
    sizes.push(format!("separating={}", separating.len()));

    tally.finish(10, "lemma property suites", sizes.join(" "))
}

type Criterion = fn(&VerifyConfig) -> CheckResult;

/// Criteria 1–10 in order.
pub const CRITERIA: [Criterion; 10] = [
    oracle_equivalence,
    involution_and_order,
    uniform_characterization,
    three_point_completions,
    rank_two_odd,
    star_forest_completions,
    eight_point_example,
    max_star_decomposition,
    rank_three_five_points,
    lemma_suites,
];

/// Criteria 1–10 for one configuration.
pub fn run_criteria(cfg: &VerifyConfig) -> Vec<CheckResult> {
    CRITERIA.iter().map(|c| c(cfg)).collect()
}

pub fn format_report(results: &[CheckResult]) -> String {
    results.iter().map(|r| format!("{r}\n")).collect()
}

/// Compares reports produced with different worker counts; `base` may supply
/// an already computed report for one of them.
pub fn determinism(cfg: &VerifyConfig, base: Option<&[CheckResult]>) -> CheckResult {
    let reports: Vec<String> = DETERMINISM_WORKERS
        .iter()
        .map(|&w| match base {
            Some(b) if w == cfg.workers => format_report(b),
            _ => format_report(&run_criteria(&VerifyConfig {
                workers: w,
                seed: cfg.seed,
            })),
        })
        .collect();
    let mut tally = Tally::default();
    for (w, r) in DETERMINISM_WORKERS.iter().zip(&reports).skip(1) {
        tally.check(*r == reports[0], || format!("report with {w} workers differs"));
    }
    tally.finish(11, "determinism across workers", "workers 1,2,8".into())
}

/// The whole suite: criteria 1–10, then the determinism comparison.
pub fn run_all(cfg: &VerifyConfig) -> Vec<CheckResult> {
    let mut results = run_criteria(cfg);
    let det = determinism(cfg, Some(&results));
    results.push(det);
    results
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracles_agree_on_examples() {
        let g = graph(4, &[(1, 2), (3, 4)]);
        assert_eq!(brute_dominating_sets(&g), hyper(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]).edges());
        assert_eq!(all_antichains(2).len(), 4);
        assert_eq!(all_antichains(3).len(), 18);
        assert_eq!(matching_count(3), 15);
        assert!(is_k23(&graph(5, &[(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])));
        assert!(is_five_cycle(&graph(5, &[(1, 3), (3, 5), (5, 2), (2, 4), (4, 1)])));
        for _ in 0..50 {
            let mut rng = ChaCha8Rng::seed_from_u64(3);
            let n = rng.gen_range(2..=6);
            assert!(is_star_forest_oracle(&random_star_forest(&mut rng, n)));
        }
    }
}
