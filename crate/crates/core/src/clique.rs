//! Exact maximum clique via branch and bound.
//!
//! The search is the classic scheme of Tomita and Kameda: candidates are
//! greedily colored at each node and branching happens in reverse color
//! order, so `|current| + color(v)` bounds every extension through `v`.
//! Vertices are scanned in a degeneracy order, which keeps the greedy bound
//! tight on the sparse instances the generators produce.
//!
//! [`max_clique`] additionally pins the *lexicographically least* maximum
//! clique by re-running bounded feasibility checks vertex by vertex, so
//! downstream partitions are reproducible across runs and platforms.

use crate::graph::{Graph, VertexSet};
use fixedbitset::FixedBitSet;

/// A maximum clique together with its size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueResult {
    pub members: VertexSet,
}

impl CliqueResult {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Clique number of `g`.
pub fn clique_number(g: &Graph) -> usize {
    let mut s = Searcher::new(g, None);
    let mut all = FixedBitSet::with_capacity(g.n());
    all.set_range(.., true);
    s.expand(0, &all);
    s.best
}

/// The lexicographically least maximum clique of `g`, as a sorted vertex
/// set. Deterministic: independent of edge-list order.
pub fn max_clique(g: &Graph) -> CliqueResult {
    let omega = clique_number(g);
    let mut chosen = Vec::with_capacity(omega);
    let mut cand = FixedBitSet::with_capacity(g.n());
    cand.set_range(.., true);
    let mut need = omega;
    for v in 0..g.n() {
        if need == 0 {
            break;
        }
        if !cand.contains(v) {
            continue;
        }
        // Keep v exactly when a clique of the remaining size fits inside
        // its candidate neighborhood; skipped vertices never rejoin since
        // candidate sets only shrink.
        let mut rest = cand.clone();
        rest.intersect_with(g.row(v));
        if need == 1 || has_clique(g, &rest, need - 1) {
            chosen.push(v);
            cand = rest;
            need -= 1;
        }
    }
    debug_assert_eq!(chosen.len(), omega);
    debug_assert!(g.is_clique(&chosen));
    CliqueResult {
        members: VertexSet::new(chosen),
    }
}

/// True when `g` restricted to `cand` contains a clique of size `k`.
fn has_clique(g: &Graph, cand: &FixedBitSet, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if cand.count_ones(..) < k {
        return false;
    }
    let mut s = Searcher::new(g, Some(k));
    s.best = k - 1; // prune anything that cannot beat k - 1
    s.expand(0, cand);
    s.best >= k
}

struct Searcher<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    best: usize,
    target: Option<usize>,
}

impl<'a> Searcher<'a> {
    fn new(g: &'a Graph, target: Option<usize>) -> Self {
        Searcher {
            g,
            order: degeneracy_order(g),
            best: 0,
            target,
        }
    }

    fn done(&self) -> bool {
        matches!(self.target, Some(t) if self.best >= t)
    }

    /// Greedy coloring of `cand`; returns vertices with their color numbers
    /// (1-based), grouped by color class, colors nondecreasing.
    fn color_bound(&self, cand: &FixedBitSet) -> (Vec<usize>, Vec<usize>) {
        let mut remaining = cand.clone();
        let mut verts = Vec::new();
        let mut colors = Vec::new();
        let mut color = 0;
        while remaining.count_ones(..) > 0 {
            color += 1;
            let mut avail = remaining.clone();
            for &v in &self.order {
                if avail.contains(v) {
                    verts.push(v);
                    colors.push(color);
                    remaining.set(v, false);
                    avail.set(v, false);
                    avail.difference_with(self.g.row(v));
                }
            }
        }
        (verts, colors)
    }

    fn expand(&mut self, size: usize, cand: &FixedBitSet) {
        if cand.count_ones(..) == 0 {
            if size > self.best {
                self.best = size;
            }
            return;
        }
        let (verts, colors) = self.color_bound(cand);
        let mut cand = cand.clone();
        for i in (0..verts.len()).rev() {
            // Colors are nondecreasing in i, so once the bound fails here it
            // fails for every remaining index.
            if size + colors[i] <= self.best {
                return;
            }
            let v = verts[i];
            let mut next = cand.clone();
            next.intersect_with(self.g.row(v));
            self.expand(size + 1, &next);
            if self.done() {
                return;
            }
            cand.set(v, false);
        }
    }
}

/// Degeneracy order: repeatedly remove a minimum-degree vertex (lowest id on
/// ties). Returned in removal order.
fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .unwrap();
        removed[v] = true;
        order.push(v);
        for u in g.neighbors(v) {
            if !removed[u] {
                deg[u] -= 1;
            }
        }
    }
    order
}
