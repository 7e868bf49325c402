//! Certificates attached to failed structural checks.
//!
//! Every runtime check in the partition and coloring code either passes or
//! produces a [`Violation`] small enough to verify by hand: an induced
//! pattern that contradicts class membership, a clique exceeding the stated
//! clique number, or (for facts that hold by construction and can only
//! break through an internal bug) the offending vertex pair.
//!
//! The constructors here assemble pattern witnesses with fixed embeddings;
//! each one documents the adjacency obligations of its arguments and checks
//! them in debug builds.

use crate::detect::{Pattern, PatternWitness};
use crate::graph::Graph;
use std::fmt;

/// Evidence that a structural claim fails on a concrete graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// An induced pattern that the graph's claimed class forbids.
    ForbiddenPattern(PatternWitness),
    /// A clique strictly larger than the clique number the check assumed.
    OversizedClique { members: Vec<usize> },
    /// A pair that had to be adjacent but is not. Only produced by checks
    /// on facts that hold by construction, so seeing this means a bug in
    /// the partition code rather than bad input.
    MissingEdge { u: usize, v: usize },
}

impl Violation {
    /// Confirms the certificate against `g`: the pattern embeds, the clique
    /// is a clique, the edge is absent.
    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            Violation::ForbiddenPattern(w) => w.verify(g),
            Violation::OversizedClique { members } => members.len() >= 2 && g.is_clique(members),
            Violation::MissingEdge { u, v } => *u < g.n() && *v < g.n() && !g.has_edge(*u, *v),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ForbiddenPattern(w) => write!(f, "forbidden pattern: {w}"),
            Violation::OversizedClique { members } => {
                write!(f, "oversized clique on {members:?}")
            }
            Violation::MissingEdge { u, v } => write!(f, "expected edge {u}-{v} is missing"),
        }
    }
}

/// A named structural claim together with the evidence against it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureViolation {
    /// Which claim failed, e.g. `stable(I[2])` or `p4-free(C[1,2])`.
    /// Set names use 1-based anchor positions to match report output.
    pub claim: String,
    pub violation: Violation,
}

impl fmt::Display for StructureViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "claim {} refuted: {}", self.claim, self.violation)
    }
}

impl StructureViolation {
    pub fn new(claim: impl Into<String>, violation: Violation) -> Self {
        StructureViolation {
            claim: claim.into(),
            violation,
        }
    }
}

/// Diamond on `{u, common[0], v, common[1]}` where `u` and `v` are the
/// nonadjacent pair. Requires: `common` vertices adjacent to each other and
/// to both `u` and `v`; `u` nonadjacent to `v`.
pub fn diamond_witness(g: &Graph, u: usize, v: usize, common: [usize; 2]) -> PatternWitness {
    let w = PatternWitness {
        pattern: Pattern::Diamond,
        embedding: vec![u, common[0], v, common[1]],
    };
    debug_assert!(w.verify(g), "malformed diamond certificate: {w}");
    w
}

/// P2∪P4 built from the edge `e` and the path `p0 - p1 - p2 - p3`.
/// Requires: consecutive path vertices adjacent, nonconsecutive ones not,
/// and both endpoints of `e` anticomplete to the path.
pub fn p2p4_witness(g: &Graph, e: (usize, usize), path: [usize; 4]) -> PatternWitness {
    let w = PatternWitness {
        pattern: Pattern::P2P4,
        embedding: vec![e.0, e.1, path[0], path[1], path[2], path[3]],
    };
    debug_assert!(w.verify(g), "malformed P2+P4 certificate: {w}");
    w
}

/// Butterfly with triangles `{wing1, center}` and `{center, wing2}`.
/// Requires: each wing an edge whose endpoints see the center, and no edges
/// between the wings.
pub fn butterfly_witness(
    g: &Graph,
    wing1: (usize, usize),
    center: usize,
    wing2: (usize, usize),
) -> PatternWitness {
    let w = PatternWitness {
        pattern: Pattern::Butterfly,
        embedding: vec![wing1.0, wing1.1, center, wing2.0, wing2.1],
    };
    debug_assert!(w.verify(g), "malformed butterfly certificate: {w}");
    w
}

/// Gem from the path `p0 - p1 - p2 - p3` plus `apex` adjacent to all four.
pub fn gem_witness(g: &Graph, path: [usize; 4], apex: usize) -> PatternWitness {
    let w = PatternWitness {
        pattern: Pattern::Gem,
        embedding: vec![path[0], path[1], path[2], path[3], apex],
    };
    debug_assert!(w.verify(g), "malformed gem certificate: {w}");
    w
}
