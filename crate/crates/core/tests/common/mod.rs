//! Independent reference implementations the integration tests measure the
//! library against.
//!
//! Nothing here shares code with the crate: the chromatic number is a naive
//! k-sweep instead of branch and bound, clique number is a full subset
//! scan, pattern containment enumerates subsets and permutations instead of
//! backtracking over hosts, and the pattern edge lists themselves are
//! written out again by hand. Agreement between these and the library is
//! evidence; disagreement is a bug on one side or the other.

#![allow(dead_code)]

use colorbound::detect::Pattern;
use colorbound::Graph;

/// Smallest k admitting a proper k-coloring, by trying k = 1, 2, … with
/// plain backtracking over vertices in id order.
pub fn naive_chromatic_number(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let mut assign = vec![0usize; n];
    (1..=n)
        .find(|&k| sweep(g, k, &mut assign, 0))
        .expect("n colors always suffice")
}

fn sweep(g: &Graph, k: usize, assign: &mut [usize], v: usize) -> bool {
    if v == g.n() {
        return true;
    }
    for c in 0..k {
        if (0..v).all(|u| !g.has_edge(u, v) || assign[u] != c) {
            assign[v] = c;
            if sweep(g, k, assign, v + 1) {
                return true;
            }
        }
    }
    false
}

/// Clique number by scanning every vertex subset. Only sensible for the
/// small hosts the tests use.
pub fn subset_clique_number(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 20, "subset scan is for desk-scale graphs");
    let mut best = 0;
    for mask in 0u32..(1u32 << n) {
        let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if verts.len() > best && is_clique(g, &verts) {
            best = verts.len();
        }
    }
    best
}

fn is_clique(g: &Graph, verts: &[usize]) -> bool {
    verts
        .iter()
        .enumerate()
        .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// The pattern adjacency lists, restated by hand so the detector's own
/// tables are not the reference for themselves.
pub fn pattern_edges(pattern: Pattern) -> (usize, Vec<(usize, usize)>) {
    match pattern {
        Pattern::P2 => (2, vec![(0, 1)]),
        Pattern::P3 => (3, vec![(0, 1), (1, 2)]),
        Pattern::P4 => (4, vec![(0, 1), (1, 2), (2, 3)]),
        Pattern::P2P4 => (6, vec![(0, 1), (2, 3), (3, 4), (4, 5)]),
        Pattern::Diamond => (4, vec![(0, 1), (1, 2), (0, 3), (1, 3), (2, 3)]),
        Pattern::Gem => (
            5,
            vec![(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)],
        ),
        Pattern::Butterfly => (5, vec![(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]),
        Pattern::Clique(t) => {
            let edges = (0..t)
                .flat_map(|u| (u + 1..t).map(move |v| (u, v)))
                .collect();
            (t, edges)
        }
        Pattern::Cycle(k) => {
            assert!(k >= 3);
            let edges = (0..k).map(|u| (u, (u + 1) % k)).collect();
            (k, edges)
        }
    }
}

/// Whether `g` contains the pattern as an induced subgraph, decided by
/// enumerating every vertex subset of the right size and every bijection
/// onto the pattern.
pub fn contains_induced_exhaustive(g: &Graph, pattern: Pattern) -> bool {
    let (k, edges) = pattern_edges(pattern);
    let n = g.n();
    if k > n {
        return false;
    }
    let mut adj = vec![vec![false; k]; k];
    for (u, v) in edges {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        let mut perm = subset.clone();
        if permutations_match(g, &adj, &mut perm, 0) {
            return true;
        }
        // Advance to the next k-combination of 0..n in lexicographic order.
        let mut i = k;
        while i > 0 && subset[i - 1] == i - 1 + n - k {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        subset[i - 1] += 1;
        for j in i..k {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

/// Tries every ordering of `perm[at..]` and reports whether some ordering
/// realizes the pattern adjacency exactly.
fn permutations_match(g: &Graph, adj: &[Vec<bool>], perm: &mut [usize], at: usize) -> bool {
    let k = perm.len();
    if at == k {
        return true;
    }
    for i in at..k {
        perm.swap(at, i);
        let consistent = (0..at).all(|j| g.has_edge(perm[j], perm[at]) == adj[j][at]);
        if consistent && permutations_match(g, adj, perm, at + 1) {
            perm.swap(at, i);
            return true;
        }
        perm.swap(at, i);
    }
    false
}

/// BFS 2-coloring: the side assignment if `g` is bipartite, else `None`.
pub fn bipartite_sides(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut side = vec![usize::MAX; n];
    for start in 0..n {
        if side[start] != usize::MAX {
            continue;
        }
        side[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if side[v] == usize::MAX {
                    side[v] = 1 - side[u];
                    queue.push_back(v);
                } else if side[v] == side[u] {
                    return None;
                }
            }
        }
    }
    Some(side)
}

#[cfg(test)]
mod self_checks {
    use super::*;

    #[test]
    fn reference_implementations_agree_with_known_values() {
        assert_eq!(naive_chromatic_number(&Graph::cycle(5)), 3);
        assert_eq!(naive_chromatic_number(&Graph::cycle(6)), 2);
        assert_eq!(naive_chromatic_number(&Graph::complete(5)), 5);
        assert_eq!(naive_chromatic_number(&Graph::empty(4)), 1);
        assert_eq!(naive_chromatic_number(&Graph::empty(0)), 0);

        assert_eq!(subset_clique_number(&Graph::complete(6)), 6);
        assert_eq!(subset_clique_number(&Graph::cycle(5)), 2);
        assert_eq!(subset_clique_number(&Graph::empty(3)), 1);

        assert!(contains_induced_exhaustive(
            &Graph::complete(4),
            Pattern::Clique(3)
        ));
        assert!(!contains_induced_exhaustive(
            &Graph::complete(4),
            Pattern::Diamond
        ));
        assert!(contains_induced_exhaustive(&Graph::cycle(6), Pattern::P4));
        assert!(!contains_induced_exhaustive(
            &Graph::cycle(5),
            Pattern::Cycle(4)
        ));

        assert!(bipartite_sides(&Graph::cycle(6)).is_some());
        assert!(bipartite_sides(&Graph::cycle(5)).is_none());
        assert!(bipartite_sides(&Graph::empty(3)).is_some());
    }
}
