//! Exact chromatic-number solver, independent of the structural colorers.
//!
//! This is the reference the class-specific schemes are measured against:
//! it shares no code with the partition machinery, so agreement between the
//! two is meaningful evidence. The search is DSATUR branch and bound — seed
//! a maximum clique, repeatedly branch on the most saturated uncolored
//! vertex, allow at most one brand-new color per step, and prune against
//! the best solution found so far. Exponential in the worst case, entirely
//! fine at the instance sizes this crate targets.

use crate::clique;
use crate::coloring::{ClassTag, Coloring};
use crate::graph::Graph;
use fixedbitset::FixedBitSet;
use thiserror::Error;

/// Default order cap for the exact solver. Exhaustive search past this
/// size stops being a quick desk check.
pub const SIZE_LIMIT: usize = 20;

/// Chromatic number together with a witnessing optimal coloring.
#[derive(Debug, Clone)]
pub struct OracleResult {
    pub chi: usize,
    /// Proper coloring with exactly `chi` colors; its bound is `chi`.
    pub witness_coloring: Coloring,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph order {n} exceeds the exact-solver guard of {limit} vertices")]
    TooLarge { n: usize, limit: usize },
}

/// Exact chromatic number of `g`, guarded at [`SIZE_LIMIT`] vertices.
pub fn chromatic_number(g: &Graph) -> Result<OracleResult, OracleError> {
    chromatic_number_with_limit(g, SIZE_LIMIT)
}

/// [`chromatic_number`] with a caller-chosen order cap.
pub fn chromatic_number_with_limit(g: &Graph, limit: usize) -> Result<OracleResult, OracleError> {
    if g.n() > limit {
        return Err(OracleError::TooLarge { n: g.n(), limit });
    }
    let coloring = optimal_coloring(g);
    Ok(OracleResult {
        chi: coloring.colors_used(),
        witness_coloring: coloring,
    })
}

/// An optimal proper coloring; its bound is the chromatic number itself.
/// Unguarded — callers own the cost judgement.
fn optimal_coloring(g: &Graph) -> Coloring {
    let n = g.n();
    if n == 0 {
        return Coloring::from_raw(Vec::new(), 0, ClassTag::Exact);
    }
    let clique = clique::max_clique(g);
    let lower = clique.size();
    let mut best = dsatur_greedy(g);
    let mut best_k = best.iter().max().map_or(0, |&c| c + 1);
    if best_k > lower {
        let mut colors: Vec<Option<usize>> = vec![None; n];
        for (i, &v) in clique.members.iter().enumerate() {
            colors[v] = Some(i);
        }
        branch(
            g,
            &mut colors,
            lower,
            clique.size(),
            lower,
            &mut best,
            &mut best_k,
        );
    }
    let chi = best_k;
    Coloring::from_raw(best, chi, ClassTag::Exact)
}

/// DSATUR greedy: color the vertex with the most distinctly colored
/// neighborhood first, breaking ties by degree and then by index.
fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut colors: Vec<Option<usize>> = vec![None; n];
    let mut seen = FixedBitSet::with_capacity(n + 1);
    for _ in 0..n {
        let v = most_saturated(g, &colors, &degrees);
        seen.clear();
        for nb in g.neighbors(v) {
            if let Some(c) = colors[nb] {
                seen.insert(c);
            }
        }
        let c = (0..=n).find(|&c| !seen.contains(c)).unwrap();
        colors[v] = Some(c);
    }
    colors.into_iter().map(Option::unwrap).collect()
}

fn most_saturated(g: &Graph, colors: &[Option<usize>], degrees: &[usize]) -> usize {
    let n = g.n();
    let mut pick = usize::MAX;
    let mut pick_sat = 0usize;
    let mut seen = FixedBitSet::with_capacity(n + 1);
    for v in 0..n {
        if colors[v].is_some() {
            continue;
        }
        seen.clear();
        for nb in g.neighbors(v) {
            if let Some(c) = colors[nb] {
                seen.insert(c);
            }
        }
        let sat = seen.count_ones(..);
        let better =
            pick == usize::MAX || sat > pick_sat || (sat == pick_sat && degrees[v] > degrees[pick]);
        if better {
            pick = v;
            pick_sat = sat;
        }
    }
    pick
}

/// One branching step: try every feasible old color plus at most one fresh
/// color on the most saturated vertex, pruning branches that cannot beat
/// the incumbent.
#[allow(clippy::too_many_arguments)]
fn branch(
    g: &Graph,
    colors: &mut Vec<Option<usize>>,
    used: usize,
    colored: usize,
    lower: usize,
    best: &mut Vec<usize>,
    best_k: &mut usize,
) {
    if used >= *best_k || *best_k == lower {
        return;
    }
    if colored == g.n() {
        *best_k = used;
        *best = colors.iter().map(|c| c.unwrap()).collect();
        return;
    }
    let degrees: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let v = most_saturated(g, colors, &degrees);
    let mut seen = FixedBitSet::with_capacity(g.n() + 1);
    for nb in g.neighbors(v) {
        if let Some(c) = colors[nb] {
            seen.insert(c);
        }
    }
    let limit = (used + 1).min(*best_k - 1);
    for c in 0..limit {
        if seen.contains(c) {
            continue;
        }
        colors[v] = Some(c);
        branch(g, colors, used.max(c + 1), colored + 1, lower, best, best_k);
        colors[v] = None;
        if *best_k == lower {
            return;
        }
    }
}
