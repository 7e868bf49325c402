//! Cograph recognition and optimal coloring through cotrees.
//!
//! A cograph (P4-free graph) decomposes recursively: every induced subgraph
//! on two or more vertices is either disconnected (disjoint union of
//! smaller cographs) or co-disconnected (join of smaller cographs). The
//! recursion bottoms out at single vertices and yields a cotree; a graph
//! that is both connected and co-connected on the way down contains an
//! induced P4, which is returned as the refutation.
//!
//! The cotree gives the clique number and an optimal coloring for free:
//! union nodes take the maximum over children on a shared palette, join
//! nodes stack disjoint palettes, so the paint pass uses exactly as many
//! colors as the largest clique.

use crate::coloring::{ClassTag, Coloring};
use crate::detect::{find_induced, Pattern, PatternWitness};
use crate::graph::Graph;

/// Decomposition tree of a cograph. Leaves carry host vertex ids; internal
/// nodes have at least two children except for the empty-graph root
/// `Union([])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cotree {
    Leaf(usize),
    Union(Vec<Cotree>),
    Join(Vec<Cotree>),
}

impl Cotree {
    /// Host vertices covered by this subtree, ascending.
    pub fn vertices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_vertices(&mut out);
        out.sort_unstable();
        out
    }

    fn collect_vertices(&self, out: &mut Vec<usize>) {
        match self {
            Cotree::Leaf(v) => out.push(*v),
            Cotree::Union(ch) | Cotree::Join(ch) => {
                for c in ch {
                    c.collect_vertices(out);
                }
            }
        }
    }

    /// Clique number of the represented graph: max over unions, sum over
    /// joins.
    pub fn width(&self) -> usize {
        match self {
            Cotree::Leaf(_) => 1,
            Cotree::Union(ch) => ch.iter().map(Cotree::width).max().unwrap_or(0),
            Cotree::Join(ch) => ch.iter().map(Cotree::width).sum(),
        }
    }

    /// Rebuilds the represented graph on vertex set `0..n`. Vertices not
    /// covered by the tree stay isolated.
    pub fn evaluate(&self, n: usize) -> Graph {
        let mut edges = Vec::new();
        self.collect_edges(&mut edges);
        Graph::from_edge_list(n, &edges).expect("cotree vertices within range")
    }

    fn collect_edges(&self, edges: &mut Vec<(usize, usize)>) -> Vec<usize> {
        match self {
            Cotree::Leaf(v) => vec![*v],
            Cotree::Union(ch) => {
                let mut verts = Vec::new();
                for c in ch {
                    verts.extend(c.collect_edges(edges));
                }
                verts
            }
            Cotree::Join(ch) => {
                let parts: Vec<Vec<usize>> = ch.iter().map(|c| c.collect_edges(edges)).collect();
                for i in 0..parts.len() {
                    for j in i + 1..parts.len() {
                        for &u in &parts[i] {
                            for &v in &parts[j] {
                                edges.push((u, v));
                            }
                        }
                    }
                }
                parts.into_iter().flatten().collect()
            }
        }
    }
}

/// Builds the cotree of `g`, or returns the lexicographically least induced
/// P4 if `g` is not a cograph.
pub fn decompose(g: &Graph) -> Result<Cotree, PatternWitness> {
    if g.n() == 0 {
        return Ok(Cotree::Union(Vec::new()));
    }
    let all: Vec<usize> = (0..g.n()).collect();
    split(g, &all)
}

fn split(g: &Graph, verts: &[usize]) -> Result<Cotree, PatternWitness> {
    if verts.len() == 1 {
        return Ok(Cotree::Leaf(verts[0]));
    }
    let (sub, map) = g.induced(verts).expect("vertex subset within range");

    let comps = sub.components();
    if comps.len() > 1 {
        let children = comps
            .iter()
            .map(|c| split(g, &to_host(c, &map)))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(Cotree::Union(children));
    }

    let co_comps = sub.complement().components();
    if co_comps.len() > 1 {
        let children = co_comps
            .iter()
            .map(|c| split(g, &to_host(c, &map)))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(Cotree::Join(children));
    }

    // Connected and co-connected on >= 2 vertices forces an induced P4.
    let w = find_induced(&sub, Pattern::P4)
        .expect("connected co-connected graphs contain an induced P4");
    Err(PatternWitness {
        pattern: Pattern::P4,
        embedding: to_host(&w.embedding, &map),
    })
}

fn to_host(local: &[usize], map: &[usize]) -> Vec<usize> {
    local.iter().map(|&i| map[i]).collect()
}

/// True when `g` has no induced P4.
pub fn is_cograph(g: &Graph) -> bool {
    decompose(g).is_ok()
}

/// Optimally colors a cograph with exactly `width` (= clique number)
/// colors, or returns an induced P4.
pub fn color_cograph(g: &Graph) -> Result<Coloring, PatternWitness> {
    let tree = decompose(g)?;
    let width = tree.width();
    let mut slots = vec![0usize; g.n()];
    paint(&tree, &mut slots, 0);
    Ok(Coloring::from_raw(slots, width, ClassTag::Cograph))
}

/// Assigns colors starting at `base`; returns the palette width consumed.
/// Union children share the base palette, join children stack above each
/// other.
fn paint(tree: &Cotree, slots: &mut [usize], base: usize) -> usize {
    match tree {
        Cotree::Leaf(v) => {
            slots[*v] = base;
            1
        }
        Cotree::Union(ch) => ch.iter().map(|c| paint(c, slots, base)).max().unwrap_or(0),
        Cotree::Join(ch) => {
            let mut used = 0;
            for c in ch {
                used += paint(c, slots, base + used);
            }
            used
        }
    }
}
