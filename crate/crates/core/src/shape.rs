//! Human-readable isomorphism-class names for small graphs, used by the
//! per-shape tallies of completion reports.

use crate::graph::Graph;
use crate::set::VertexSet;

/// A name for the shape of `g`: disjoint unions are written `2K2+K1`, joins
/// `K1∨C4`, and connected pieces as `Kn`, `Cn`, `Ka,b,..`, `Pn`, falling back to
/// `G(n,m)` with vertex and edge counts.
pub fn shape_name(g: &Graph) -> String {
    name_within(g, g.vertices())
}

fn neighbors_within(g: &Graph, x: usize, within: VertexSet) -> VertexSet {
    g.neighbors(x) & within
}

fn edge_count_within(g: &Graph, within: VertexSet) -> usize {
    within.iter().map(|x| neighbors_within(g, x, within).len()).sum::<usize>() / 2
}

fn components_within(g: &Graph, within: VertexSet, complement: bool) -> Vec<VertexSet> {
    let mut left = within;
    let mut out = Vec::new();
    while let Some(start) = left.first() {
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp;
        while let Some(x) = frontier.first() {
            frontier = frontier.without(x);
            let mut nb = neighbors_within(g, x, within);
            if complement {
                nb = (within - nb).without(x);
            }
            let fresh = nb - comp;
            comp = comp | fresh;
            frontier = frontier | fresh;
        }
        left = left - comp;
        out.push(comp);
    }
    out
}

fn grouped(mut names: Vec<String>, sep: &str) -> String {
    names.sort();
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < names.len() {
        let j = (i..names.len()).find(|&j| names[j] != names[i]).unwrap_or(names.len());
        let k = j - i;
        let needs_paren = names[i].contains('+')
            || names[i].contains('∨')
            || names[i].starts_with(|c: char| c.is_ascii_digit());
        let base = if needs_paren && k > 1 {
            format!("({})", names[i])
        } else {
            names[i].clone()
        };
        parts.push(if k > 1 { format!("{k}{base}") } else { base });
        i = j;
    }
    parts.join(sep)
}

fn name_within(g: &Graph, within: VertexSet) -> String {
    let n = within.len();
    if n == 0 {
        return "K0".into();
    }
    let comps = components_within(g, within, false);
    if comps.len() > 1 {
        return grouped(comps.into_iter().map(|c| name_within(g, c)).collect(), "+");
    }
    let m = edge_count_within(g, within);
    let degrees: Vec<usize> = within.iter().map(|x| neighbors_within(g, x, within).len()).collect();
    if m == n * (n - 1) / 2 {
        return format!("K{n}");
    }
    if n >= 4 && degrees.iter().all(|&d| d == 2) {
        return format!("C{n}");
    }
    let co = components_within(g, within, true);
    if co.len() >= 2 && co.iter().all(|&c| edge_count_within(g, c) == 0) {
        let mut parts: Vec<usize> = co.iter().map(|c| c.len()).collect();
        parts.sort_unstable();
        let parts: Vec<String> = parts.iter().map(usize::to_string).collect();
        return format!("K{}", parts.join(","));
    }
    if m == n - 1 && degrees.iter().all(|&d| d <= 2) {
        return format!("P{n}");
    }
    if co.len() > 1 {
        let names = co
            .into_iter()
            .map(|c| {
                let s = name_within(g, c);
                if s.contains('+') {
                    format!("({s})")
                } else {
                    s
                }
            })
            .collect();
        return grouped(names, "∨");
    }
    format!("G({n},{m})")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::graph;

    #[test]
    fn names() {
        assert_eq!(shape_name(&graph(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])), "C5");
        assert_eq!(
            shape_name(&graph(5, &[(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])),
            "K2,3"
        );
        assert_eq!(shape_name(&graph(4, &[(1, 2), (3, 4)])), "2K2");
        assert_eq!(shape_name(&graph(3, &[(1, 2)])), "K1+K2");
        assert_eq!(shape_name(&graph(4, &[(1, 2), (1, 3), (1, 4)])), "K1,3");
        assert_eq!(shape_name(&graph(4, &[(1, 2), (2, 3), (3, 4)])), "P4");
        assert_eq!(shape_name(&graph(3, &[(1, 2), (1, 3), (2, 3)])), "K3");
        // K5 minus a two-edge matching.
        assert_eq!(
            shape_name(&graph(5, &[(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 5), (4, 5)])),
            "K1,2,2"
        );
        // K1 joined with two K2s (a bowtie).
        assert_eq!(
            shape_name(&graph(5, &[(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (4, 5)])),
            "2K2∨K1"
        );
    }
}
