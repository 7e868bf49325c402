//! Induced-subgraph detection for the small fixed patterns the coloring
//! schemes forbid, plus parametric cliques and cycles.
//!
//! Detection is a plain backtracking embed over pattern vertices in id
//! order, trying host vertices ascending, so the first embedding found is
//! lexicographically least. At the sizes this crate targets (hosts well
//! under a hundred vertices, patterns of at most six) nothing smarter is
//! needed.

use crate::graph::Graph;
use std::fmt;

/// Patterns recognized by [`find_induced`].
///
/// `P2P4` is the disjoint union of an edge and a four-vertex path, with no
/// edges between the two parts. The diamond is K4 minus one edge, the gem is
/// a P4 plus a vertex adjacent to all of it, and the butterfly is two
/// triangles sharing one vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pattern {
    P2,
    P3,
    P4,
    P2P4,
    Diamond,
    Gem,
    Butterfly,
    /// Complete graph on `t` vertices.
    Clique(usize),
    /// Chordless cycle on `k >= 3` vertices.
    Cycle(usize),
}

impl Pattern {
    /// The pattern as a concrete graph. Vertex numbering is fixed and public
    /// API: witnesses report embeddings against these ids.
    ///
    /// - `P2`, `P3`, `P4`: paths `0 - 1 - …`.
    /// - `P2P4`: edge `0 - 1`, path `2 - 3 - 4 - 5`.
    /// - `Diamond`: path `0 - 1 - 2` plus `3` adjacent to all; `0`/`2` are
    ///   the nonadjacent pair.
    /// - `Gem`: path `0 - 1 - 2 - 3` plus `4` adjacent to all.
    /// - `Butterfly`: triangles `{0, 1, 2}` and `{2, 3, 4}` sharing `2`.
    /// - `Clique(t)`, `Cycle(k)`: the obvious numbering.
    pub fn graph(self) -> Graph {
        match self {
            Pattern::P2 => Graph::path(2),
            Pattern::P3 => Graph::path(3),
            Pattern::P4 => Graph::path(4),
            Pattern::P2P4 => Graph::from_edge_list(6, &[(0, 1), (2, 3), (3, 4), (4, 5)]).unwrap(),
            Pattern::Diamond => {
                Graph::from_edge_list(4, &[(0, 1), (1, 2), (0, 3), (1, 3), (2, 3)]).unwrap()
            }
            Pattern::Gem => {
                Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)])
                    .unwrap()
            }
            Pattern::Butterfly => {
                Graph::from_edge_list(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
            }
            Pattern::Clique(t) => Graph::complete(t),
            Pattern::Cycle(k) => Graph::cycle(k),
        }
    }

    pub fn order(self) -> usize {
        match self {
            Pattern::P2 => 2,
            Pattern::P3 => 3,
            Pattern::P4 => 4,
            Pattern::P2P4 => 6,
            Pattern::Diamond => 4,
            Pattern::Gem | Pattern::Butterfly => 5,
            Pattern::Clique(t) => t,
            Pattern::Cycle(k) => k,
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::P2 => write!(f, "P2"),
            Pattern::P3 => write!(f, "P3"),
            Pattern::P4 => write!(f, "P4"),
            Pattern::P2P4 => write!(f, "P2+P4"),
            Pattern::Diamond => write!(f, "diamond"),
            Pattern::Gem => write!(f, "gem"),
            Pattern::Butterfly => write!(f, "butterfly"),
            Pattern::Clique(t) => write!(f, "K{t}"),
            Pattern::Cycle(k) => write!(f, "C{k}"),
        }
    }
}

/// An induced embedding of a pattern in some host graph: `embedding[i]` is
/// the host vertex playing pattern vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternWitness {
    pub pattern: Pattern,
    pub embedding: Vec<usize>,
}

impl PatternWitness {
    /// Checks the embedding against `host`: distinct vertices, edges exactly
    /// where the pattern has them.
    pub fn verify(&self, host: &Graph) -> bool {
        let p = self.pattern.graph();
        if self.embedding.len() != p.n() {
            return false;
        }
        if self.embedding.iter().any(|&v| v >= host.n()) {
            return false;
        }
        for i in 0..p.n() {
            for j in i + 1..p.n() {
                if self.embedding[i] == self.embedding[j] {
                    return false;
                }
                if host.has_edge(self.embedding[i], self.embedding[j]) != p.has_edge(i, j) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for PatternWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {:?}", self.pattern, self.embedding)
    }
}

/// Finds the lexicographically least induced copy of `pattern` in `g`, if any.
pub fn find_induced(g: &Graph, pattern: Pattern) -> Option<PatternWitness> {
    let p = pattern.graph();
    if p.n() == 0 || p.n() > g.n() {
        return None;
    }
    let mut embedding = vec![0usize; p.n()];
    let mut used = vec![false; g.n()];
    if extend(g, &p, 0, &mut embedding, &mut used) {
        Some(PatternWitness { pattern, embedding })
    } else {
        None
    }
}

fn extend(g: &Graph, p: &Graph, next: usize, embedding: &mut [usize], used: &mut [bool]) -> bool {
    if next == p.n() {
        return true;
    }
    for v in 0..g.n() {
        if used[v] {
            continue;
        }
        let fits = (0..next).all(|i| g.has_edge(embedding[i], v) == p.has_edge(i, next));
        if fits {
            embedding[next] = v;
            used[v] = true;
            if extend(g, p, next + 1, embedding, used) {
                return true;
            }
            used[v] = false;
        }
    }
    false
}

/// Outcome of screening one graph against a list of forbidden patterns.
#[derive(Debug, Clone)]
pub struct MembershipReport {
    pub checks: Vec<(Pattern, Option<PatternWitness>)>,
}

impl MembershipReport {
    /// True when none of the screened patterns occur.
    pub fn is_member(&self) -> bool {
        self.checks.iter().all(|(_, w)| w.is_none())
    }

    /// First pattern found, if any.
    pub fn witness(&self) -> Option<&PatternWitness> {
        self.checks.iter().find_map(|(_, w)| w.as_ref())
    }
}

/// Screens `g` against every pattern in `forbidden`, recording a witness for
/// each one that occurs.
pub fn screen(g: &Graph, forbidden: &[Pattern]) -> MembershipReport {
    MembershipReport {
        checks: forbidden.iter().map(|&p| (p, find_induced(g, p))).collect(),
    }
}

/// Shortest odd hole (induced odd cycle of length at least five) up to
/// `max_len`, scanning lengths `5, 7, …` ascending.
pub fn find_odd_hole(g: &Graph, max_len: usize) -> Option<PatternWitness> {
    let cap = max_len.min(g.n());
    (5..=cap)
        .step_by(2)
        .find_map(|k| find_induced(g, Pattern::Cycle(k)))
}

/// Shortest odd antihole (complement of an odd hole) of length at least
/// seven, up to `max_len`. Length five is excluded: a five-hole is its own
/// antihole and is already covered by [`find_odd_hole`]. The witness
/// embedding lists the host vertices forming the complement cycle.
pub fn find_odd_antihole(g: &Graph, max_len: usize) -> Option<PatternWitness> {
    let co = g.complement();
    let cap = max_len.min(g.n());
    (7..=cap)
        .step_by(2)
        .find_map(|k| find_induced(&co, Pattern::Cycle(k)))
}
