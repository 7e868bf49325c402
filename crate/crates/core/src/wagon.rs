//! Anchored vertex partition underlying the structural coloring schemes.
//!
//! Fix a maximum clique `A = {v_1 < v_2 < … < v_ω}` (the lexicographically
//! least one, so everything downstream is deterministic). Every vertex
//! outside `A` misses at least one anchor vertex — otherwise `A` was not
//! maximum — and is filed by its nonneighbors among the anchor:
//!
//! - `C[i,j]`: vertices whose first two nonneighbor positions are `i < j`;
//! - `I[a]`: vertices nonadjacent to `v_a` and adjacent to the rest of `A`.
//!
//! Set names in reports use 1-based anchor positions (`C[1,2]` pairs the
//! two smallest anchor vertices); method arguments are 0-based like
//! everything else in the crate.
//!
//! [`verify_structure`] recomputes the facts a class's coloring scheme
//! reads off this partition and attaches a refutation certificate to every
//! failed one. On a graph that truly lies in the claimed class every fact
//! holds; the checks exist so that out-of-class inputs surface as evidence
//! instead of as improper colorings.

use crate::clique::{self, CliqueResult};
use crate::cograph;
use crate::coloring::ColorClass;
use crate::evidence::{butterfly_witness, diamond_witness, gem_witness, p2p4_witness, Violation};
use crate::graph::Graph;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Where a vertex landed in the partition. Positions are 0-based indices
/// into the anchor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    Anchor(usize),
    /// Member of `C[i,j]`: first two anchor nonneighbors at positions `i < j`.
    C(usize, usize),
    /// Member of `I[a]`: sole anchor nonneighbor at position `a`.
    I(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("anchor vertices {0} and {1} are nonadjacent")]
    AnchorNotClique(usize, usize),
    #[error("anchor is not a maximum clique: {certificate:?} is larger")]
    AnchorNotMaximum { certificate: Vec<usize> },
}

/// The anchored partition of one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WagonPartition {
    anchor: Vec<usize>,
    roles: Vec<Role>,
    c_sets: BTreeMap<(usize, usize), Vec<usize>>,
    i_sets: BTreeMap<usize, Vec<usize>>,
}

const NO_VERTICES: &[usize] = &[];

impl WagonPartition {
    /// Anchor clique, ascending.
    pub fn anchor(&self) -> &[usize] {
        &self.anchor
    }

    pub fn omega(&self) -> usize {
        self.anchor.len()
    }

    pub fn n(&self) -> usize {
        self.roles.len()
    }

    pub fn role(&self, v: usize) -> Role {
        self.roles[v]
    }

    /// Members of `C[i,j]` (0-based positions), ascending; empty if none.
    pub fn c_set(&self, i: usize, j: usize) -> &[usize] {
        self.c_sets.get(&(i, j)).map_or(NO_VERTICES, |v| v)
    }

    /// Members of `I[a]` (0-based position), ascending; empty if none.
    pub fn i_set(&self, a: usize) -> &[usize] {
        self.i_sets.get(&a).map_or(NO_VERTICES, |v| v)
    }

    /// Nonempty `C` sets in lexicographic position order.
    pub fn c_sets(&self) -> impl Iterator<Item = ((usize, usize), &[usize])> {
        self.c_sets.iter().map(|(&k, v)| (k, v.as_slice()))
    }

    /// Nonempty `I` sets in position order.
    pub fn i_sets(&self) -> impl Iterator<Item = (usize, &[usize])> {
        self.i_sets.iter().map(|(&k, v)| (k, v.as_slice()))
    }

    /// Re-derives every role from adjacency and checks the stored partition
    /// matches. Used by tests and debug assertions.
    pub fn validate(&self, g: &Graph) -> bool {
        if g.n() != self.roles.len() || !g.is_clique(&self.anchor) {
            return false;
        }
        for v in 0..g.n() {
            let expect = match self.anchor.iter().position(|&a| a == v) {
                Some(pos) => Role::Anchor(pos),
                None => {
                    let miss: Vec<usize> = (0..self.anchor.len())
                        .filter(|&p| !g.has_edge(v, self.anchor[p]))
                        .collect();
                    match miss.len() {
                        0 => return false,
                        1 => Role::I(miss[0]),
                        _ => Role::C(miss[0], miss[1]),
                    }
                }
            };
            if self.roles[v] != expect {
                return false;
            }
        }
        true
    }

    /// The two halves of the vertex set outside `A ∪ C[1,2]`, as used by the
    /// gem scheme: `side1` is complete to the first anchor vertex (anchor
    /// positions 1 and up, every `I[a]` with `a >= 1`, every `C[i,j]` with
    /// `i >= 1`), `side2` is complete to the second (`I[0]` and the
    /// `C[0,j]` with `j >= 2`). Both sorted ascending.
    pub fn gem_sides(&self) -> (Vec<usize>, Vec<usize>) {
        let mut side1: Vec<usize> = self.anchor[1..].to_vec();
        let mut side2: Vec<usize> = Vec::new();
        for (&(i, j), set) in &self.c_sets {
            if i >= 1 {
                side1.extend_from_slice(set);
            } else if j >= 2 {
                side2.extend_from_slice(set);
            }
        }
        for (&a, set) in &self.i_sets {
            if a >= 1 {
                side1.extend_from_slice(set);
            } else {
                side2.extend_from_slice(set);
            }
        }
        side1.sort_unstable();
        side2.sort_unstable();
        (side1, side2)
    }
}

impl fmt::Display for WagonPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "anchor {{")?;
        for (i, v) in self.anchor.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")?;
        for (&(i, j), set) in &self.c_sets {
            write!(f, "\nC[{},{}] {:?}", i + 1, j + 1, set)?;
        }
        for (&a, set) in &self.i_sets {
            write!(f, "\nI[{}] {:?}", a + 1, set)?;
        }
        Ok(())
    }
}

/// Builds the partition anchored at `anchor`, which must be a maximum
/// clique. A vertex adjacent to the whole anchor refutes maximality and is
/// returned as an error certificate.
pub fn partition(g: &Graph, anchor: &CliqueResult) -> Result<WagonPartition, PartitionError> {
    let a: Vec<usize> = anchor.members.to_vec();
    for (i, &u) in a.iter().enumerate() {
        for &v in &a[i + 1..] {
            if !g.has_edge(u, v) {
                return Err(PartitionError::AnchorNotClique(u, v));
            }
        }
    }
    let mut roles = vec![Role::Anchor(0); g.n()];
    let mut c_sets: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    let mut i_sets: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, role) in roles.iter_mut().enumerate() {
        if let Some(pos) = a.iter().position(|&x| x == v) {
            *role = Role::Anchor(pos);
            continue;
        }
        let mut miss = (0..a.len()).filter(|&p| !g.has_edge(v, a[p]));
        match (miss.next(), miss.next()) {
            (None, _) => {
                let mut certificate = a.clone();
                certificate.push(v);
                certificate.sort_unstable();
                return Err(PartitionError::AnchorNotMaximum { certificate });
            }
            (Some(p), None) => {
                *role = Role::I(p);
                i_sets.entry(p).or_default().push(v);
            }
            (Some(p), Some(q)) => {
                *role = Role::C(p, q);
                c_sets.entry((p, q)).or_default().push(v);
            }
        }
    }
    Ok(WagonPartition {
        anchor: a,
        roles,
        c_sets,
        i_sets,
    })
}

/// One structural fact, either confirmed or refuted with a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactCheck {
    pub claim: String,
    pub refutation: Option<Violation>,
}

impl FactCheck {
    pub fn holds(&self) -> bool {
        self.refutation.is_none()
    }
}

/// Every partition-level fact a class's scheme relies on, checked against
/// the concrete graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub class: ColorClass,
    pub facts: Vec<FactCheck>,
}

impl StructureReport {
    pub fn all_hold(&self) -> bool {
        self.facts.iter().all(FactCheck::holds)
    }

    pub fn violations(&self) -> impl Iterator<Item = &FactCheck> {
        self.facts.iter().filter(|f| !f.holds())
    }
}

impl fmt::Display for StructureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "structure checks ({} scheme):", self.class)?;
        for fact in &self.facts {
            match &fact.refutation {
                None => writeln!(f, "  ok   {}", fact.claim)?,
                Some(v) => writeln!(f, "  FAIL {}: {}", fact.claim, v)?,
            }
        }
        Ok(())
    }
}

/// Checks the partition-level facts the given scheme depends on. Facts are
/// only emitted for sets that exist, so the report length varies with the
/// graph.
pub fn verify_structure(g: &Graph, p: &WagonPartition, class: ColorClass) -> StructureReport {
    let mut facts = Vec::new();
    common_facts(g, p, &mut facts);
    match class {
        ColorClass::GemFree => gem_facts(g, p, &mut facts),
        ColorClass::ButterflyFree => butterfly_facts(g, p, &mut facts),
        ColorClass::DiamondFree => diamond_facts(g, p, &mut facts),
    }
    StructureReport { class, facts }
}

fn common_facts(g: &Graph, p: &WagonPartition, out: &mut Vec<FactCheck>) {
    let omega = p.omega();
    for ((i, j), set) in p.c_sets() {
        out.push(FactCheck {
            claim: format!("p4-free(C[{},{}])", i + 1, j + 1),
            refutation: c_set_p4_refutation(g, p, i, j),
        });
        if (i, j) == (0, 1) {
            out.push(FactCheck {
                claim: "omega(C[1,2])<=omega".into(),
                refutation: width_refutation(g, set, omega, None),
            });
        } else {
            // Any anchor position outside {i, j} is complete to C[i,j], so
            // its clique number stays below omega.
            let k = (0..omega).find(|k| *k != i && *k != j).unwrap();
            out.push(FactCheck {
                claim: format!("omega(C[{},{}])<omega", i + 1, j + 1),
                refutation: width_refutation(g, set, omega - 1, Some(p.anchor()[k])),
            });
        }
    }
    for (a, _) in p.i_sets() {
        out.push(FactCheck {
            claim: format!("stable(I[{}])", a + 1),
            refutation: i_set_edge_refutation(g, p, a),
        });
    }
}

/// P4 inside `C[i,j]` extends to a P2∪P4 with the defining anchor pair,
/// which is anticomplete to the whole set.
pub(crate) fn c_set_p4_refutation(
    g: &Graph,
    p: &WagonPartition,
    i: usize,
    j: usize,
) -> Option<Violation> {
    let path = p4_in(g, p.c_set(i, j))?;
    Some(c_p4_violation(g, path, (p.anchor()[i], p.anchor()[j])))
}

/// An edge inside `I[a]` joins two vertices complete to the rest of the
/// anchor, giving a clique one past the clique number.
pub(crate) fn i_set_edge_refutation(g: &Graph, p: &WagonPartition, a: usize) -> Option<Violation> {
    let (x, y) = g.first_edge_within(p.i_set(a))?;
    let mut members: Vec<usize> = p
        .anchor()
        .iter()
        .enumerate()
        .filter(|&(pos, _)| pos != a)
        .map(|(_, &v)| v)
        .collect();
    members.extend([x, y]);
    members.sort_unstable();
    Some(Violation::OversizedClique { members })
}

/// Clique number of `G[set]` must stay at or below `cap`; `boost` is a
/// vertex complete to `set` that inflates a cap-breaking clique past the
/// graph's clique number when needed.
pub(crate) fn width_refutation(
    g: &Graph,
    set: &[usize],
    cap: usize,
    boost: Option<usize>,
) -> Option<Violation> {
    let (sub, map) = g.induced(set).expect("partition vertices in range");
    let found = clique::max_clique(&sub);
    if found.size() <= cap {
        return None;
    }
    let mut members: Vec<usize> = found.members.iter().map(|&i| map[i]).collect();
    if let Some(b) = boost {
        members.push(b);
        members.sort_unstable();
    }
    Some(Violation::OversizedClique { members })
}

/// Least induced P4 within `verts` of the host graph.
pub(crate) fn p4_in(g: &Graph, verts: &[usize]) -> Option<[usize; 4]> {
    let (sub, map) = g.induced(verts).expect("vertices in range");
    let w = crate::detect::find_induced(&sub, crate::detect::Pattern::P4)?;
    Some([
        map[w.embedding[0]],
        map[w.embedding[1]],
        map[w.embedding[2]],
        map[w.embedding[3]],
    ])
}

fn gem_facts(g: &Graph, p: &WagonPartition, out: &mut Vec<FactCheck>) {
    let omega = p.omega();
    if omega < 2 {
        // A one-vertex anchor means an edgeless graph; both sides are
        // trivially fine and side2's apex does not even exist.
        return;
    }
    let (side1, side2) = p.gem_sides();
    let sides = [(1, side1, p.anchor()[0]), (2, side2, p.anchor()[1])];
    for (id, side, apex) in sides {
        if side.is_empty() {
            continue;
        }
        out.push(FactCheck {
            claim: format!("complete(v{id},side{id})"),
            refutation: g
                .first_nonedge_between(&[apex], &side)
                .map(|(u, v)| Violation::MissingEdge { u, v }),
        });
        out.push(FactCheck {
            claim: format!("p4-free(side{id})"),
            refutation: p4_in(g, &side).map(|path| side_p4_violation(g, path, apex)),
        });
        out.push(FactCheck {
            claim: format!("omega(side{id})<omega"),
            refutation: width_refutation(g, &side, omega - 1, Some(apex)),
        });
    }
}

/// P4 inside a gem side extends with the side's apex to a gem, provided the
/// apex really covers the path (it does whenever the side was built
/// correctly; otherwise report the missing edge).
pub(crate) fn side_p4_violation(g: &Graph, path: [usize; 4], apex: usize) -> Violation {
    if let Some(&v) = path.iter().find(|&&v| !g.has_edge(apex, v)) {
        return Violation::MissingEdge { u: apex, v };
    }
    Violation::ForbiddenPattern(gem_witness(g, path, apex))
}

/// P4 inside a `C` set joins its defining anchor pair into a P2∪P4.
pub(crate) fn c_p4_violation(g: &Graph, path: [usize; 4], pair: (usize, usize)) -> Violation {
    Violation::ForbiddenPattern(p2p4_witness(g, pair, path))
}

fn butterfly_facts(g: &Graph, p: &WagonPartition, out: &mut Vec<FactCheck>) {
    for ((i, j), _) in p.c_sets() {
        if j >= 2 {
            out.push(FactCheck {
                claim: format!("stable(C[{},{}])", i + 1, j + 1),
                refutation: c_set_stability_refutation(g, p, i, j),
            });
        }
    }
}

/// An edge inside `C[i,j]` with `j >= 2` closes a butterfly: the edge plus
/// any third anchor vertex forms one triangle, the anchor pair the other.
pub(crate) fn c_set_stability_refutation(
    g: &Graph,
    p: &WagonPartition,
    i: usize,
    j: usize,
) -> Option<Violation> {
    let (x, y) = g.first_edge_within(p.c_set(i, j))?;
    let z = (0..p.omega()).find(|k| *k != i && *k != j).unwrap();
    Some(Violation::ForbiddenPattern(butterfly_witness(
        g,
        (x, y),
        p.anchor()[z],
        (p.anchor()[i], p.anchor()[j]),
    )))
}

fn diamond_facts(g: &Graph, p: &WagonPartition, out: &mut Vec<FactCheck>) {
    let omega = p.omega();
    let anchor = p.anchor();
    // C sets beyond the third anchor position cannot exist.
    for ((i, j), set) in p.c_sets() {
        if j >= 3 {
            let mut low = (0..3).filter(|&k| k != i);
            let (pq1, pq2) = (low.next().unwrap(), low.next().unwrap());
            out.push(FactCheck {
                claim: format!("empty(C[{},{}])", i + 1, j + 1),
                refutation: Some(Violation::ForbiddenPattern(diamond_witness(
                    g,
                    set[0],
                    anchor[j],
                    [anchor[pq1], anchor[pq2]],
                ))),
            });
        }
    }
    // I sets vanish once the anchor has three vertices.
    if omega >= 3 {
        for (a, set) in p.i_sets() {
            let mut low = (0..omega).filter(|&k| k != a);
            let (pq1, pq2) = (low.next().unwrap(), low.next().unwrap());
            out.push(FactCheck {
                claim: format!("empty(I[{}])", a + 1),
                refutation: Some(Violation::ForbiddenPattern(diamond_witness(
                    g,
                    set[0],
                    anchor[a],
                    [anchor[pq1], anchor[pq2]],
                ))),
            });
        }
    }
    // C[1,3] touches nothing in the anchor beyond v2, and symmetrically for
    // C[2,3]; their members also stay complete to that one anchor vertex.
    for (set_ij, partner, avoid) in [((0usize, 2usize), 1usize, 0usize), ((1, 2), 0, 1)] {
        let set = p.c_set(set_ij.0, set_ij.1);
        if set.is_empty() {
            continue;
        }
        let display = format!("C[{},{}]", set_ij.0 + 1, set_ij.1 + 1);
        out.push(FactCheck {
            claim: format!("complete(v{},{display})", partner + 1),
            refutation: g
                .first_nonedge_between(&[anchor[partner]], set)
                .map(|(u, v)| Violation::MissingEdge { u, v }),
        });
        out.push(FactCheck {
            claim: format!("anticomplete({display},A-v{})", partner + 1),
            refutation: outer_anchor_edge_refutation(g, p, set_ij, partner, avoid),
        });
    }
    // No C[1,2] vertex reaches two anchor vertices.
    if !p.c_set(0, 1).is_empty() && omega >= 3 {
        out.push(FactCheck {
            claim: "anchor-degree(C[1,2])<=1".into(),
            refutation: c12_anchor_degree_refutation(g, p),
        });
    }
}

/// Edge between `C[i,3]` and an anchor vertex past the third position makes
/// a diamond through the partner anchor vertex.
pub(crate) fn outer_anchor_edge_refutation(
    g: &Graph,
    p: &WagonPartition,
    set_ij: (usize, usize),
    partner: usize,
    avoid: usize,
) -> Option<Violation> {
    let anchor = p.anchor();
    let set = p.c_set(set_ij.0, set_ij.1);
    for &x in set {
        for k in 3..p.omega() {
            if g.has_edge(x, anchor[k]) {
                return Some(Violation::ForbiddenPattern(diamond_witness(
                    g,
                    x,
                    anchor[avoid],
                    [anchor[k], anchor[partner]],
                )));
            }
        }
    }
    None
}

/// Two anchor neighbors of one `C[1,2]` vertex form a diamond with the
/// first anchor vertex.
pub(crate) fn c12_anchor_degree_refutation(g: &Graph, p: &WagonPartition) -> Option<Violation> {
    let anchor = p.anchor();
    for &x in p.c_set(0, 1) {
        let nbrs: Vec<usize> = (2..p.omega())
            .filter(|&k| g.has_edge(x, anchor[k]))
            .collect();
        if nbrs.len() >= 2 {
            return Some(Violation::ForbiddenPattern(diamond_witness(
                g,
                x,
                anchor[0],
                [anchor[nbrs[0]], anchor[nbrs[1]]],
            )));
        }
    }
    None
}

/// Cograph-colors `G[verts]` against the host graph, returning each vertex
/// with its palette-local color, plus the palette width. On a P4 the caller
/// maps the path to a class-level certificate via `witness`.
pub(crate) fn piece_coloring(
    g: &Graph,
    verts: &[usize],
    witness: impl FnOnce(&Graph, [usize; 4]) -> Violation,
) -> Result<(usize, Vec<(usize, usize)>), Violation> {
    if verts.is_empty() {
        return Ok((0, Vec::new()));
    }
    let (sub, map) = g.induced(verts).expect("vertices in range");
    match cograph::color_cograph(&sub) {
        Ok(c) => Ok((
            c.colors_used(),
            c.assignment()
                .iter()
                .enumerate()
                .map(|(i, &col)| (map[i], col))
                .collect(),
        )),
        Err(p4) => {
            let path = [
                map[p4.embedding[0]],
                map[p4.embedding[1]],
                map[p4.embedding[2]],
                map[p4.embedding[3]],
            ];
            Err(witness(g, path))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique::max_clique;
    use crate::detect::Pattern;

    fn part(g: &Graph) -> WagonPartition {
        partition(g, &max_clique(g)).unwrap()
    }

    #[test]
    fn five_cycle_partition() {
        let g = Graph::cycle(5);
        let p = part(&g);
        assert_eq!(p.anchor(), &[0, 1]);
        assert_eq!(p.i_set(0), &[2]);
        assert_eq!(p.i_set(1), &[4]);
        assert_eq!(p.c_set(0, 1), &[3]);
        assert_eq!(p.role(3), Role::C(0, 1));
        assert_eq!(p.role(2), Role::I(0));
        assert!(p.validate(&g));
    }

    #[test]
    fn two_cliques_partition() {
        // K5 on 0..5, K5 on 5..10: the whole second clique lands in C[1,2].
        let mut edges = Vec::new();
        for base in [0, 5] {
            for u in base..base + 5 {
                for v in u + 1..base + 5 {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edge_list(10, &edges).unwrap();
        let p = part(&g);
        assert_eq!(p.anchor(), &[0, 1, 2, 3, 4]);
        assert_eq!(p.c_set(0, 1), &[5, 6, 7, 8, 9]);
        assert_eq!(p.c_sets().count(), 1);
        assert_eq!(p.i_sets().count(), 0);
        assert!(p.validate(&g));
    }

    #[test]
    fn grotzsch_partition() {
        let g = Graph::cycle(5).mycielskian();
        let p = part(&g);
        assert_eq!(p.anchor(), &[0, 1]);
        assert_eq!(p.i_set(0), &[2, 5, 7]);
        assert_eq!(p.i_set(1), &[4, 6, 9]);
        assert_eq!(p.c_set(0, 1), &[3, 8, 10]);
        assert!(p.validate(&g));
    }

    #[test]
    fn nonmaximal_anchor_is_refuted() {
        let g = Graph::complete(3);
        let k2 = CliqueResult {
            members: crate::graph::VertexSet::new(vec![0, 1]),
        };
        assert_eq!(
            partition(&g, &k2),
            Err(PartitionError::AnchorNotMaximum {
                certificate: vec![0, 1, 2]
            })
        );
        let bad = CliqueResult {
            members: crate::graph::VertexSet::new(vec![0, 1]),
        };
        assert_eq!(
            partition(&Graph::empty(2), &bad),
            Err(PartitionError::AnchorNotClique(0, 1))
        );
    }

    #[test]
    fn gem_sides_of_five_cycle() {
        let p = part(&Graph::cycle(5));
        let (side1, side2) = p.gem_sides();
        assert_eq!(side1, vec![1, 4]); // v2 plus I[2]
        assert_eq!(side2, vec![2]); // I[1]
    }

    #[test]
    fn structure_clean_on_five_cycle() {
        let g = Graph::cycle(5);
        let p = part(&g);
        for class in [
            ColorClass::GemFree,
            ColorClass::ButterflyFree,
            ColorClass::DiamondFree,
        ] {
            let report = verify_structure(&g, &p, class);
            assert!(report.all_hold(), "unexpected violation:\n{report}");
        }
    }

    #[test]
    fn diamond_scheme_flags_anchor_edge_past_position_three() {
        // K4 plus x = 4 adjacent to anchor positions 1 and 3 only: x lands
        // in C[1,3] and its edge to the fourth anchor vertex closes a
        // diamond on {0, 1, 3, 4}.
        let g = Graph::from_edge_list(
            5,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (2, 3),
                (4, 1),
                (4, 3),
            ],
        )
        .unwrap();
        let p = part(&g);
        assert_eq!(p.role(4), Role::C(0, 2));
        let report = verify_structure(&g, &p, ColorClass::DiamondFree);
        let bad: Vec<_> = report.violations().collect();
        assert_eq!(bad.len(), 1);
        assert_eq!(bad[0].claim, "anticomplete(C[1,3],A-v2)");
        let v = bad[0].refutation.as_ref().unwrap();
        assert!(v.verify(&g));
        match v {
            Violation::ForbiddenPattern(w) => assert_eq!(w.pattern, Pattern::Diamond),
            other => panic!("expected a diamond, got {other}"),
        }
    }

    #[test]
    fn gem_scheme_flags_p4_in_side() {
        // K3 anchor; a P4 on {3,4,5,6} whose vertices see only v1 lands in
        // C[2,3] and closes a gem with the apex.
        let g = Graph::from_edge_list(
            7,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (0, 3),
                (0, 4),
                (0, 5),
                (0, 6),
                (3, 4),
                (4, 5),
                (5, 6),
            ],
        )
        .unwrap();
        let p = part(&g);
        assert_eq!(p.anchor(), &[0, 1, 2]);
        assert_eq!(p.c_set(1, 2), &[3, 4, 5, 6]);
        let report = verify_structure(&g, &p, ColorClass::GemFree);
        let bad: Vec<_> = report.violations().collect();
        assert!(bad.iter().any(|f| f.claim == "p4-free(side1)"));
        for f in &bad {
            assert!(f.refutation.as_ref().unwrap().verify(&g));
        }
    }

    #[test]
    fn butterfly_scheme_flags_edge_in_outer_set() {
        // K3 anchor; adjacent pair {3,4} sees only v2, landing in C[1,3];
        // the pair plus v2 and the anchor pair {v1, v3} is a butterfly.
        let g =
            Graph::from_edge_list(5, &[(0, 1), (0, 2), (1, 2), (3, 1), (4, 1), (3, 4)]).unwrap();
        let p = part(&g);
        assert_eq!(p.c_set(0, 2), &[3, 4]);
        let report = verify_structure(&g, &p, ColorClass::ButterflyFree);
        let bad: Vec<_> = report.violations().collect();
        assert_eq!(bad.len(), 1);
        assert_eq!(bad[0].claim, "stable(C[1,3])");
        let v = bad[0].refutation.as_ref().unwrap();
        assert!(v.verify(&g));
        match v {
            Violation::ForbiddenPattern(w) => assert_eq!(w.pattern, Pattern::Butterfly),
            other => panic!("expected a butterfly, got {other}"),
        }
    }

    #[test]
    fn i_set_edge_becomes_oversized_clique() {
        // With the true maximum clique as anchor, I-set edges cannot occur
        // (they would certify a larger clique). Feed a stale anchor instead:
        // in a triangle {1,2,3} with pendant 0-1, the K2 {0,1} is a clique
        // no vertex is complete to, so the partition builds -- and the edge
        // 2-3 inside I[1] is then caught with the clique {1,2,3}.
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (1, 3), (2, 3)]).unwrap();
        let stale = CliqueResult {
            members: crate::graph::VertexSet::new(vec![0, 1]),
        };
        let p = partition(&g, &stale).unwrap();
        assert_eq!(p.i_set(0), &[2, 3]);
        let report = verify_structure(&g, &p, ColorClass::GemFree);
        // The same edge breaks both the stability fact and the side-width
        // cap, and both certificates name the triangle.
        let bad: Vec<_> = report.violations().collect();
        let claims: Vec<&str> = bad.iter().map(|f| f.claim.as_str()).collect();
        assert_eq!(claims, ["stable(I[1])", "omega(side2)<omega"]);
        for f in &bad {
            assert_eq!(
                f.refutation,
                Some(Violation::OversizedClique {
                    members: vec![1, 2, 3]
                })
            );
            assert!(f.refutation.as_ref().unwrap().verify(&g));
        }
    }

    #[test]
    fn report_renders_one_line_per_fact() {
        let g = Graph::cycle(5);
        let p = part(&g);
        let report = verify_structure(&g, &p, ColorClass::DiamondFree);
        let text = report.to_string();
        assert!(text.contains("ok   p4-free(C[1,2])"));
        assert!(text.contains("stable(I[1])"));
        assert!(!text.contains("FAIL"));
    }
}
