//! Coloring scheme for graphs with no induced P2∪P4 and no induced diamond.
//!
//! Diamond-freeness collapses the partition hard: every `C[i,j]` with `j`
//! past the third anchor position is empty, the `I` sets are empty once
//! `ω >= 3`, the outer sets `C[1,3]` and `C[2,3]` touch nothing in the
//! anchor beyond the one vertex they are complete to, and each `C[1,2]`
//! vertex has at most one anchor neighbor. All of this is re-checked up
//! front with diamond certificates.
//!
//! What remains is a case split on ω and on the *core* — the
//! lexicographically least maximum clique of `C[1,2]`. Small ω uses fixed
//! palettes; for `ω >= 5` the core size decides how the outer sets interact
//! with `C[1,2]`, and the checks of each arm refute bad inputs with a
//! diamond, a P2∪P4, or an oversized clique. The resulting palette never
//! exceeds [`bound_for`] for the class: 4, 7, 9 colors for ω = 2, 3, 4 and
//! `2ω - 1` beyond.

use crate::clique;
use crate::coloring::{bound_for, ClassTag, ColorClass, Coloring};
use crate::evidence::{diamond_witness, p2p4_witness, StructureViolation, Violation};
use crate::graph::Graph;
use crate::wagon::{self, piece_coloring, WagonPartition};
use std::collections::VecDeque;
use std::fmt;

use super::{anchored_partition, run, Slots};

/// Which arm of the diamond scheme colored the graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiamondCase {
    /// ω <= 1: the graph is edgeless.
    SmallOmega,
    Omega2,
    Omega3,
    /// ω = 4 with core of size at most 3.
    Omega4CoreUnder4,
    /// ω = 4 with a K4 core inside `C[1,2]`.
    Omega4CoreFull,
    /// ω >= 5, core of size at most 1 (`C[1,2]` stable).
    HighCoreLe1,
    /// ω >= 5, core is a single edge.
    HighCorePair,
    /// ω >= 5, core as large as the anchor.
    HighCoreFull,
    /// ω >= 5, core size strictly between 2 and ω.
    HighCoreMid,
}

impl DiamondCase {
    pub const ALL: [DiamondCase; 9] = [
        DiamondCase::SmallOmega,
        DiamondCase::Omega2,
        DiamondCase::Omega3,
        DiamondCase::Omega4CoreUnder4,
        DiamondCase::Omega4CoreFull,
        DiamondCase::HighCoreLe1,
        DiamondCase::HighCorePair,
        DiamondCase::HighCoreFull,
        DiamondCase::HighCoreMid,
    ];
}

impl fmt::Display for DiamondCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DiamondCase::SmallOmega => "omega<=1",
            DiamondCase::Omega2 => "omega=2",
            DiamondCase::Omega3 => "omega=3",
            DiamondCase::Omega4CoreUnder4 => "omega=4,core<=3",
            DiamondCase::Omega4CoreFull => "omega=4,core=4",
            DiamondCase::HighCoreLe1 => "omega>=5,core<=1",
            DiamondCase::HighCorePair => "omega>=5,core=2",
            DiamondCase::HighCoreFull => "omega>=5,core=omega",
            DiamondCase::HighCoreMid => "omega>=5,2<core<omega",
        };
        f.write_str(s)
    }
}

/// Colors a (P2∪P4, diamond)-free graph within the class bound.
pub fn color_diamond_free(g: &Graph) -> Result<Coloring, StructureViolation> {
    color_diamond_free_traced(g).map(|(c, _)| c)
}

/// Same as [`color_diamond_free`], also reporting which arm ran.
pub fn color_diamond_free_traced(g: &Graph) -> Result<(Coloring, DiamondCase), StructureViolation> {
    if g.n() == 0 {
        let c = Coloring::from_raw(Vec::new(), 0, ClassTag::DiamondFree);
        return Ok((c, DiamondCase::SmallOmega));
    }
    let p = anchored_partition(g)?;
    let omega = p.omega();
    let bound = bound_for(ColorClass::DiamondFree, omega);
    if omega <= 1 {
        let mut slots = Slots::new(g.n());
        for v in 0..g.n() {
            slots.set(v, 0);
        }
        return Ok((
            slots.finish(g, bound, ClassTag::DiamondFree),
            DiamondCase::SmallOmega,
        ));
    }
    collapse_checks(g, &p)?;
    let (slots, case) = match omega {
        2 => (omega2(g, &p)?, DiamondCase::Omega2),
        3 => (omega3(g, &p)?, DiamondCase::Omega3),
        4 => omega4(g, &p)?,
        _ => high_omega(g, &p)?,
    };
    Ok((slots.finish(g, bound, ClassTag::DiamondFree), case))
}

/// Roles of the two outer sets. `C[1,3]` misses the first anchor vertex and
/// is complete to the second; `C[2,3]` the other way around.
#[derive(Clone, Copy, PartialEq, Eq)]
struct Side {
    ij: (usize, usize),
    avoid: usize,
    partner: usize,
}

const SIDE13: Side = Side {
    ij: (0, 2),
    avoid: 0,
    partner: 1,
};
const SIDE23: Side = Side {
    ij: (1, 2),
    avoid: 1,
    partner: 0,
};

impl Side {
    fn name(&self) -> String {
        format!("C[{},{}]", self.ij.0 + 1, self.ij.1 + 1)
    }
}

/// The partition-collapse facts every arm relies on: no sets beyond the
/// third anchor position, no `I` sets at ω >= 3, outer sets anticomplete to
/// the far anchor, `C[1,2]` near-anticomplete to the anchor.
fn collapse_checks(g: &Graph, p: &WagonPartition) -> Result<(), StructureViolation> {
    let anchor = p.anchor();
    for ((i, j), set) in p.c_sets() {
        if j >= 3 {
            // Members see all anchor positions below j except i, so two of
            // the first three plus the missed v_{j+1} close a diamond.
            let mut low = (0..3).filter(|&k| k != i);
            let (a, b) = (low.next().unwrap(), low.next().unwrap());
            return Err(StructureViolation::new(
                format!("empty(C[{},{}])", i + 1, j + 1),
                Violation::ForbiddenPattern(diamond_witness(
                    g,
                    set[0],
                    anchor[j],
                    [anchor[a], anchor[b]],
                )),
            ));
        }
    }
    if p.omega() >= 3 {
        if let Some((a, set)) = p.i_sets().next() {
            let mut low = (0..p.omega()).filter(|&k| k != a);
            let (x, y) = (low.next().unwrap(), low.next().unwrap());
            return Err(StructureViolation::new(
                format!("empty(I[{}])", a + 1),
                Violation::ForbiddenPattern(diamond_witness(
                    g,
                    set[0],
                    anchor[a],
                    [anchor[x], anchor[y]],
                )),
            ));
        }
        for side in [SIDE13, SIDE23] {
            if let Some(v) =
                wagon::outer_anchor_edge_refutation(g, p, side.ij, side.partner, side.avoid)
            {
                return Err(StructureViolation::new(
                    format!("anticomplete({},A-v{})", side.name(), side.partner + 1),
                    v,
                ));
            }
        }
        if let Some(v) = wagon::c12_anchor_degree_refutation(g, p) {
            return Err(StructureViolation::new("anchor-degree(C[1,2])<=1", v));
        }
    }
    Ok(())
}

/// ω = 2: anchor colors reused by the `I` sets, two fresh for `C[1,2]`.
fn omega2(g: &Graph, p: &WagonPartition) -> Result<Slots, StructureViolation> {
    let anchor = p.anchor();
    let mut slots = Slots::new(g.n());
    slots.set(anchor[0], 0);
    slots.set(anchor[1], 1);
    for (a, set) in p.i_sets() {
        if let Some(v) = wagon::i_set_edge_refutation(g, p, a) {
            return Err(StructureViolation::new(format!("stable(I[{}])", a + 1), v));
        }
        slots.set_all(set, a);
    }
    let (w12, piece) = color_c12(g, p)?;
    width_guard(g, p.c_set(0, 1), w12, 2, None, "omega(C[1,2])<=omega")?;
    slots.set_mapped(&piece, &run(2, w12));
    Ok(slots)
}

/// ω = 3: `C[1,2]` reuses the colors of the anchor pair it misses plus one
/// fresh, `C[2,3]` reuses `v3` plus one fresh, `C[1,3]` takes two fresh.
fn omega3(g: &Graph, p: &WagonPartition) -> Result<Slots, StructureViolation> {
    let anchor = p.anchor();
    let mut slots = Slots::new(g.n());
    for (pos, &v) in anchor.iter().enumerate() {
        slots.set(v, pos);
    }
    let (w12, piece12) = color_c12(g, p)?;
    width_guard(g, p.c_set(0, 1), w12, 3, None, "omega(C[1,2])<=omega")?;
    slots.set_mapped(&piece12, &[0, 1, 3]);

    let (w13, piece13) = color_side(g, p, SIDE13)?;
    width_guard(
        g,
        p.c_set(0, 2),
        w13,
        2,
        Some(anchor[1]),
        "omega(C[1,3])<omega",
    )?;
    slots.set_mapped(&piece13, &[5, 6]);

    let (w23, piece23) = color_side(g, p, SIDE23)?;
    width_guard(
        g,
        p.c_set(1, 2),
        w23,
        2,
        Some(anchor[0]),
        "omega(C[2,3])<omega",
    )?;
    slots.set_mapped(&piece23, &[2, 4]);
    Ok(slots)
}

/// ω = 4 splits on whether `C[1,2]` holds a K4.
fn omega4(g: &Graph, p: &WagonPartition) -> Result<(Slots, DiamondCase), StructureViolation> {
    let anchor = p.anchor();
    let core = clique_in(g, p.c_set(0, 1));
    let mut slots = Slots::new(g.n());
    for (pos, &v) in anchor.iter().enumerate() {
        slots.set(v, pos);
    }
    let (w12, piece12) = color_c12(g, p)?;

    if core.len() <= 3 {
        debug_assert!(w12 <= 3);
        slots.set_mapped(&piece12, &[0, 1, 4]);
        let (w13, piece13) = color_side(g, p, SIDE13)?;
        width_guard(
            g,
            p.c_set(0, 2),
            w13,
            3,
            Some(anchor[1]),
            "omega(C[1,3])<omega",
        )?;
        slots.set_mapped(&piece13, &[2, 3, 5]);
        let (w23, piece23) = color_side(g, p, SIDE23)?;
        width_guard(
            g,
            p.c_set(1, 2),
            w23,
            3,
            Some(anchor[0]),
            "omega(C[2,3])<omega",
        )?;
        slots.set_mapped(&piece23, &[6, 7, 8]);
        return Ok((slots, DiamondCase::Omega4CoreUnder4));
    }

    // A K4 core: C[1,2] takes four colors, two of them fresh, so the outer
    // sets must make do with what is left.
    slots.set_mapped(&piece12, &[0, 1, 4, 5]);
    let c13 = p.c_set(0, 2);
    let c23 = p.c_set(1, 2);
    if !c13.is_empty() && !c23.is_empty() {
        // With both outer sets alive they are complete to each other and
        // each collapses to a stable set; one old color each suffices.
        if let Some((x, y)) = g.first_nonedge_between(c13, c23) {
            outer_core_degree_guard(g, &core, x, "C[1,3]")?;
            outer_core_degree_guard(g, &core, y, "C[2,3]")?;
            let (u, v) = core_pair_clear_of(g, &core, x, y);
            return Err(StructureViolation::new(
                "complete(C[1,3],C[2,3])",
                Violation::ForbiddenPattern(p2p4_witness(g, (u, v), [x, anchor[1], anchor[0], y])),
            ));
        }
        if let Some((x, x2)) = g.first_edge_within(c13) {
            return Err(StructureViolation::new(
                "stable(C[1,3])",
                Violation::ForbiddenPattern(diamond_witness(g, c23[0], anchor[1], [x, x2])),
            ));
        }
        if let Some((y, y2)) = g.first_edge_within(c23) {
            return Err(StructureViolation::new(
                "stable(C[2,3])",
                Violation::ForbiddenPattern(diamond_witness(g, c13[0], anchor[0], [y, y2])),
            ));
        }
        slots.set_all(c13, 2);
        slots.set_all(c23, 3);
    } else {
        // At most one outer set: cograph-color it over the two far anchor
        // colors plus one fresh.
        let side = if c13.is_empty() { SIDE23 } else { SIDE13 };
        let set = p.c_set(side.ij.0, side.ij.1);
        let (w, piece) = color_side(g, p, side)?;
        width_guard(
            g,
            set,
            w,
            3,
            Some(anchor[side.partner]),
            &format!("omega({})<omega", side.name()),
        )?;
        slots.set_mapped(&piece, &[2, 3, 6]);
    }
    Ok((slots, DiamondCase::Omega4CoreFull))
}

/// ω >= 5: four arms by core size.
fn high_omega(g: &Graph, p: &WagonPartition) -> Result<(Slots, DiamondCase), StructureViolation> {
    let omega = p.omega();
    let anchor = p.anchor();
    let core = clique_in(g, p.c_set(0, 1));
    let mut slots = Slots::new(g.n());
    for (pos, &v) in anchor.iter().enumerate() {
        slots.set(v, pos);
    }

    match core.len() {
        0 | 1 => {
            // Stable C[1,2] reuses v2's color; C[1,3] reuses v1's and the
            // colors past the anchor pair; C[2,3] gets ω - 1 fresh ones.
            debug_assert!(g.first_edge_within(p.c_set(0, 1)).is_none());
            slots.set_all(p.c_set(0, 1), 1);
            let (w13, piece13) = color_side(g, p, SIDE13)?;
            width_guard(
                g,
                p.c_set(0, 2),
                w13,
                omega - 1,
                Some(anchor[1]),
                "omega(C[1,3])<omega",
            )?;
            let mut palette13 = vec![0];
            palette13.extend(2..omega);
            slots.set_mapped(&piece13, &palette13);
            let (w23, piece23) = color_side(g, p, SIDE23)?;
            width_guard(
                g,
                p.c_set(1, 2),
                w23,
                omega - 1,
                Some(anchor[0]),
                "omega(C[2,3])<omega",
            )?;
            slots.set_mapped(&piece23, &run(omega, w23));
            Ok((slots, DiamondCase::HighCoreLe1))
        }
        2 => {
            high_pair(g, p, &core, &mut slots)?;
            Ok((slots, DiamondCase::HighCorePair))
        }
        t if t == omega => {
            let c13 = p.c_set(0, 2);
            let c23 = p.c_set(1, 2);
            if !c13.is_empty() && !c23.is_empty() {
                return Err(full_core_two_sides(g, p, &core));
            }
            let side = if c13.is_empty() { SIDE23 } else { SIDE13 };
            let set = p.c_set(side.ij.0, side.ij.1);
            let (w, piece) = color_side(g, p, side)?;
            width_guard(
                g,
                set,
                w,
                omega - 1,
                Some(anchor[side.partner]),
                &format!("omega({})<omega", side.name()),
            )?;
            let mut side_palette = vec![side.avoid];
            side_palette.extend(2..omega);
            slots.set_mapped(&piece, &side_palette);

            let (w12, piece12) = color_c12(g, p)?;
            debug_assert_eq!(w12, omega);
            let mut c12_palette = vec![side.partner];
            c12_palette.extend(omega..2 * omega - 1);
            slots.set_mapped(&piece12, &c12_palette);
            Ok((slots, DiamondCase::HighCoreFull))
        }
        _ => {
            high_mid(g, p, &core, &mut slots)?;
            Ok((slots, DiamondCase::HighCoreMid))
        }
    }
}

/// Zones of one outer set against a two-vertex core.
struct PairZones {
    /// Sees the first core vertex only.
    only_first: Vec<usize>,
    /// Sees the second core vertex only.
    only_second: Vec<usize>,
    /// Sees both.
    both: Vec<usize>,
    /// Sees neither.
    free: Vec<usize>,
}

impl PairZones {
    /// The zones sharing the first core vertex — they share a color too.
    fn sees_first(&self) -> Vec<usize> {
        let mut out = self.only_first.clone();
        out.extend_from_slice(&self.both);
        out.sort_unstable();
        out
    }
}

fn pair_zones(g: &Graph, set: &[usize], core: &[usize]) -> PairZones {
    let mut z = PairZones {
        only_first: Vec::new(),
        only_second: Vec::new(),
        both: Vec::new(),
        free: Vec::new(),
    };
    for &x in set {
        match (g.has_edge(x, core[0]), g.has_edge(x, core[1])) {
            (true, true) => z.both.push(x),
            (true, false) => z.only_first.push(x),
            (false, true) => z.only_second.push(x),
            (false, false) => z.free.push(x),
        }
    }
    z
}

/// ω >= 5 with a single core edge `{q1, q2}`. Each outer set splits into
/// the zone seeing `q1`, the zone seeing only `q2`, and the core-free zone;
/// the first two are stable and reuse old colors, the core-free zone of the
/// one side allowed to have one breaks into cliques colored like the far
/// anchor tail, and `C[1,2]` takes two fresh colors.
fn high_pair(
    g: &Graph,
    p: &WagonPartition,
    core: &[usize],
    slots: &mut Slots,
) -> Result<(), StructureViolation> {
    let omega = p.omega();
    let anchor = p.anchor();
    let sides = [SIDE13, SIDE23];
    let zones: Vec<PairZones> = sides
        .iter()
        .map(|s| pair_zones(g, p.c_set(s.ij.0, s.ij.1), core))
        .collect();

    for (side, z) in sides.iter().zip(&zones) {
        // An edge inside either seen zone closes a diamond through the
        // shared core vertex and the partner anchor vertex.
        if let Some((x, y)) = g.first_edge_within(&z.sees_first()) {
            return Err(StructureViolation::new(
                format!("stable({}:sees-core1)", side.name()),
                Violation::ForbiddenPattern(diamond_witness(
                    g,
                    core[0],
                    anchor[side.partner],
                    [x, y],
                )),
            ));
        }
        if let Some((x, y)) = g.first_edge_within(&z.only_second) {
            return Err(StructureViolation::new(
                format!("stable({}:only-core2)", side.name()),
                Violation::ForbiddenPattern(diamond_witness(
                    g,
                    core[1],
                    anchor[side.partner],
                    [x, y],
                )),
            ));
        }
        // An edge from the only-second zone into the both zone closes a
        // diamond through the core edge instead.
        if let Some((x, y)) = g.first_edge_between(&z.only_second, &z.both) {
            return Err(StructureViolation::new(
                format!("anticomplete({s}:only-core2,{s}:both)", s = side.name()),
                Violation::ForbiddenPattern(diamond_witness(g, x, core[0], [y, core[1]])),
            ));
        }
    }

    if !zones[0].free.is_empty() && !zones[1].free.is_empty() {
        return Err(both_sides_core_free(
            g,
            p,
            (core[0], core[1]),
            zones[0].free[0],
            zones[1].free[0],
        ));
    }
    let s = if zones[1].free.is_empty() { 0 } else { 1 };
    let t = 1 - s;

    slots.set_all(&zones[s].sees_first(), sides[s].avoid);
    slots.set_all(&zones[t].sees_first(), sides[t].avoid);
    slots.set_all(&zones[s].only_second, 2);
    slots.set_all(&zones[t].only_second, 3);
    color_free_zone(g, p, sides[s], &zones[s], slots)?;

    let (w12, piece12) = color_c12(g, p)?;
    debug_assert_eq!(w12, 2);
    slots.set_mapped(&piece12, &[omega + 2, omega + 3]);
    Ok(())
}

/// Core-free zone of the surviving side: its components must be cliques of
/// size below ω. A component of size exactly ω - 1 must not touch the rest
/// of its side and reuses old colors plus one fresh; smaller ones use the
/// far anchor tail plus two fresh.
fn color_free_zone(
    g: &Graph,
    p: &WagonPartition,
    side: Side,
    z: &PairZones,
    slots: &mut Slots,
) -> Result<(), StructureViolation> {
    let omega = p.omega();
    let anchor = p.anchor();
    let vp = anchor[side.partner];
    if z.free.is_empty() {
        return Ok(());
    }
    let (sub, map) = g.induced(&z.free).expect("zone in range");
    for comp_local in sub.components() {
        let comp: Vec<usize> = comp_local.iter().map(|&i| map[i]).collect();
        if let Some((a, b, c)) = non_clique_p3(g, &comp) {
            return Err(StructureViolation::new(
                format!("cliques(core-free({}))", side.name()),
                Violation::ForbiddenPattern(diamond_witness(g, a, c, [b, vp])),
            ));
        }
        if comp.len() >= omega {
            let mut members = comp.clone();
            members.push(vp);
            members.sort_unstable();
            return Err(StructureViolation::new(
                format!("component-size<omega(core-free({}))", side.name()),
                Violation::OversizedClique { members },
            ));
        }
        let palette: Vec<usize> = if comp.len() == omega - 1 {
            // A maximal component: it must be cut off from the seen zones,
            // otherwise a diamond or an oversized clique appears.
            let mut rest: Vec<usize> = z.sees_first();
            rest.extend_from_slice(&z.only_second);
            if let Some((x, y)) = g.first_edge_between(&rest, &comp) {
                let refutation = if comp.iter().all(|&c| g.has_edge(x, c)) {
                    let mut members = comp.clone();
                    members.extend([x, vp]);
                    members.sort_unstable();
                    Violation::OversizedClique { members }
                } else {
                    let &y2 = comp.iter().find(|&&c| !g.has_edge(x, c)).unwrap();
                    Violation::ForbiddenPattern(diamond_witness(g, x, y2, [y, vp]))
                };
                return Err(StructureViolation::new(
                    format!("anticomplete(max-component,{})", side.name()),
                    refutation,
                ));
            }
            let mut pal = vec![side.avoid, 2];
            pal.extend(4..omega);
            pal.push(omega);
            pal
        } else {
            let mut pal: Vec<usize> = (4..omega).collect();
            pal.extend([omega, omega + 1]);
            pal.truncate(comp.len());
            pal
        };
        for (k, &v) in comp.iter().enumerate() {
            slots.set(v, palette[k]);
        }
    }
    Ok(())
}

/// Zones of one outer set against a core of size >= 3: complete to it,
/// seeing exactly one vertex, or seeing none. Any other degree closes a
/// diamond inside the core.
struct CoreSplit {
    full: Vec<usize>,
    one: Vec<usize>,
    zero: Vec<usize>,
}

fn core_split(
    g: &Graph,
    side_name: &str,
    set: &[usize],
    core: &[usize],
) -> Result<CoreSplit, StructureViolation> {
    let mut split = CoreSplit {
        full: Vec::new(),
        one: Vec::new(),
        zero: Vec::new(),
    };
    for &x in set {
        let nbrs: Vec<usize> = core.iter().copied().filter(|&q| g.has_edge(x, q)).collect();
        match nbrs.len() {
            0 => split.zero.push(x),
            1 => split.one.push(x),
            d if d == core.len() => split.full.push(x),
            _ => {
                let &miss = core.iter().find(|&&q| !g.has_edge(x, q)).unwrap();
                return Err(StructureViolation::new(
                    format!("core-split({side_name})"),
                    Violation::ForbiddenPattern(diamond_witness(g, x, miss, [nbrs[0], nbrs[1]])),
                ));
            }
        }
    }
    Ok(split)
}

/// ω >= 5 with `2 < |core| < ω`. The zones seeing the core are stable per
/// side and reuse the avoided anchor color; the core-free zone survives on
/// one side only, is anticomplete to `C[1,2]`, and shares ω - 1 fresh
/// colors with it.
fn high_mid(
    g: &Graph,
    p: &WagonPartition,
    core: &[usize],
    slots: &mut Slots,
) -> Result<(), StructureViolation> {
    let omega = p.omega();
    let anchor = p.anchor();
    let sides = [SIDE13, SIDE23];
    let mut splits = Vec::new();
    for side in sides {
        let split = core_split(g, &side.name(), p.c_set(side.ij.0, side.ij.1), core)?;
        seen_zone_stability(g, p, side, core, &split)?;
        splits.push(split);
    }

    if !splits[0].zero.is_empty() && !splits[1].zero.is_empty() {
        return Err(both_sides_core_free(
            g,
            p,
            (core[0], core[1]),
            splits[0].zero[0],
            splits[1].zero[0],
        ));
    }
    let s = if splits[1].zero.is_empty() { 0 } else { 1 };
    for (k, split) in splits.iter().enumerate() {
        slots.set_all(&split.full, sides[k].avoid);
        slots.set_all(&split.one, sides[k].avoid);
    }

    let c12 = p.c_set(0, 1);
    let zero = &splits[s].zero;
    if let Some((x2, x1)) = g.first_edge_between(c12, zero) {
        return Err(StructureViolation::new(
            format!("anticomplete(C[1,2],core-free({}))", sides[s].name()),
            c12_zero_edge(g, p, core, sides[s], x2, x1),
        ));
    }

    // Both remaining pieces are anticomplete to each other, so they share
    // one fresh palette starting at ω.
    let (w12, piece12) = color_c12(g, p)?;
    debug_assert!(w12 < omega);
    slots.set_mapped(&piece12, &run(omega, w12));
    let (wz, piecez) = piece_coloring(g, zero, |g, path| {
        wagon::c_p4_violation(g, path, (anchor[sides[s].ij.0], anchor[sides[s].ij.1]))
    })
    .map_err(|v| StructureViolation::new(format!("p4-free(core-free({}))", sides[s].name()), v))?;
    width_guard(
        g,
        zero,
        wz,
        omega - 1,
        Some(anchor[sides[s].partner]),
        &format!("omega(core-free({}))<omega", sides[s].name()),
    )?;
    slots.set_mapped(&piecez, &run(omega, wz));
    Ok(())
}

/// Stability of `full ∪ one` for one side: every edge closes a diamond or,
/// in the one nasty subcase (two vertices hanging off different core
/// vertices), a P2∪P4 through the anchor.
fn seen_zone_stability(
    g: &Graph,
    p: &WagonPartition,
    side: Side,
    core: &[usize],
    split: &CoreSplit,
) -> Result<(), StructureViolation> {
    let anchor = p.anchor();
    let vp = anchor[side.partner];
    let mut seen: Vec<usize> = split.full.clone();
    seen.extend_from_slice(&split.one);
    seen.sort_unstable();
    let Some((a, b)) = g.first_edge_within(&seen) else {
        return Ok(());
    };
    let claim = format!("stable({}&N(core))", side.name());
    let deg = |x: usize| core.iter().filter(|&&q| g.has_edge(x, q)).count();
    let one_nbr = |x: usize| core.iter().copied().find(|&q| g.has_edge(x, q)).unwrap();

    let violation = if deg(a) == core.len() {
        // a is complete to the core, so whichever core vertex b sees is
        // adjacent to both ends of the edge.
        Violation::ForbiddenPattern(diamond_witness(g, one_nbr(b), vp, [a, b]))
    } else if deg(b) == core.len() {
        Violation::ForbiddenPattern(diamond_witness(g, one_nbr(a), vp, [a, b]))
    } else {
        let (za, zb) = (one_nbr(a), one_nbr(b));
        if za == zb {
            Violation::ForbiddenPattern(diamond_witness(g, za, vp, [a, b]))
        } else {
            // Distinct single hooks: walk out to a third core vertex and an
            // anchor vertex clear of the pair.
            let &z3 = core.iter().find(|&&q| q != za && q != zb).unwrap();
            let m = anchor_clear_of(g, p, za, z3);
            Violation::ForbiddenPattern(p2p4_witness(
                g,
                (anchor[side.avoid], anchor[m]),
                [b, a, za, z3],
            ))
        }
    };
    Err(StructureViolation::new(claim, violation))
}

/// Core-free vertices on both outer sides contradict the scheme: they chain
/// into a P2∪P4 against the core edge.
fn both_sides_core_free(
    g: &Graph,
    p: &WagonPartition,
    core_pair: (usize, usize),
    z13: usize,
    z23: usize,
) -> StructureViolation {
    let anchor = p.anchor();
    let violation = if !g.has_edge(z13, z23) {
        Violation::ForbiddenPattern(p2p4_witness(g, core_pair, [z13, anchor[1], anchor[0], z23]))
    } else {
        let m = anchor_clear_of(g, p, core_pair.0, core_pair.1);
        Violation::ForbiddenPattern(p2p4_witness(g, core_pair, [z13, z23, anchor[0], anchor[m]]))
    };
    StructureViolation::new("core-free-side-unique", violation)
}

/// Full-size core with both outer sets nonempty: rule out directly.
fn full_core_two_sides(g: &Graph, p: &WagonPartition, core: &[usize]) -> StructureViolation {
    let anchor = p.anchor();
    let x = p.c_set(0, 2)[0];
    let y = p.c_set(1, 2)[0];
    if let Err(e) = outer_core_degree_guard(g, core, x, "C[1,3]") {
        return e;
    }
    if let Err(e) = outer_core_degree_guard(g, core, y, "C[2,3]") {
        return e;
    }
    let (u, v) = core_pair_clear_of(g, core, x, y);
    let violation = if !g.has_edge(x, y) {
        Violation::ForbiddenPattern(p2p4_witness(g, (u, v), [x, anchor[1], anchor[0], y]))
    } else {
        let m = anchor_clear_of(g, p, u, v);
        Violation::ForbiddenPattern(p2p4_witness(g, (u, v), [x, y, anchor[0], anchor[m]]))
    };
    StructureViolation::new("outer-side-unique", violation)
}

/// An outer vertex with two or more core neighbors (but not all of a
/// maximal core) closes a diamond; complete to the core it extends it.
fn outer_core_degree_guard(
    g: &Graph,
    core: &[usize],
    x: usize,
    side_name: &str,
) -> Result<(), StructureViolation> {
    let nbrs: Vec<usize> = core.iter().copied().filter(|&q| g.has_edge(x, q)).collect();
    if nbrs.len() <= 1 {
        return Ok(());
    }
    if nbrs.len() == core.len() {
        let mut members = core.to_vec();
        members.push(x);
        members.sort_unstable();
        return Err(StructureViolation::new(
            format!("core-degree({side_name})<=1"),
            Violation::OversizedClique { members },
        ));
    }
    let &miss = core.iter().find(|&&q| !g.has_edge(x, q)).unwrap();
    Err(StructureViolation::new(
        format!("core-degree({side_name})<=1"),
        Violation::ForbiddenPattern(diamond_witness(g, x, miss, [nbrs[0], nbrs[1]])),
    ))
}

/// Edge between `C[1,2]` and the core-free zone: the offending `C[1,2]`
/// vertex misses at least two core vertices, which anchor a P2∪P4.
fn c12_zero_edge(
    g: &Graph,
    p: &WagonPartition,
    core: &[usize],
    side: Side,
    x2: usize,
    x1: usize,
) -> Violation {
    let anchor = p.anchor();
    let missed: Vec<usize> = core
        .iter()
        .copied()
        .filter(|&q| q != x2 && !g.has_edge(x2, q))
        .collect();
    if missed.is_empty() {
        // x2 extends a clique that was maximal inside C[1,2].
        let mut members = core.to_vec();
        members.push(x2);
        members.sort_unstable();
        return Violation::OversizedClique { members };
    }
    if missed.len() == 1 {
        // x2 sees all core vertices but one; two of them close a diamond.
        let nbrs: Vec<usize> = core
            .iter()
            .copied()
            .filter(|&q| g.has_edge(x2, q))
            .collect();
        return Violation::ForbiddenPattern(diamond_witness(g, x2, missed[0], [nbrs[0], nbrs[1]]));
    }
    Violation::ForbiddenPattern(p2p4_witness(
        g,
        (missed[0], missed[1]),
        [x2, x1, anchor[side.partner], anchor[side.avoid]],
    ))
}

/// Lex-least maximum clique of `G[set]`, in host ids.
fn clique_in(g: &Graph, set: &[usize]) -> Vec<usize> {
    if set.is_empty() {
        return Vec::new();
    }
    let (sub, map) = g.induced(set).expect("set in range");
    clique::max_clique(&sub)
        .members
        .iter()
        .map(|&i| map[i])
        .collect()
}

/// First anchor position >= 2 with no edge to either given vertex. Exists
/// whenever the anchor-degree fact holds and ω >= 5.
fn anchor_clear_of(g: &Graph, p: &WagonPartition, a: usize, b: usize) -> usize {
    (2..p.omega())
        .find(|&k| !g.has_edge(p.anchor()[k], a) && !g.has_edge(p.anchor()[k], b))
        .expect("anchor-degree fact guarantees a clear anchor position")
}

/// First two core vertices adjacent to neither `x` nor `y`. Exists once
/// both have core degree <= 1 and the core has at least four vertices.
fn core_pair_clear_of(g: &Graph, core: &[usize], x: usize, y: usize) -> (usize, usize) {
    let mut clear = core
        .iter()
        .copied()
        .filter(|&q| !g.has_edge(q, x) && !g.has_edge(q, y));
    (
        clear.next().expect("core large enough"),
        clear.next().expect("core large enough"),
    )
}

/// Induced P3 inside a connected non-clique vertex set: endpoints of the
/// first two hops of a shortest path between some nonadjacent pair.
fn non_clique_p3(g: &Graph, comp: &[usize]) -> Option<(usize, usize, usize)> {
    let (u, x) = g.first_nonedge_between(comp, comp)?;
    let mut parent: Vec<Option<usize>> = vec![None; g.n()];
    let mut seen: Vec<bool> = vec![false; g.n()];
    let allowed: Vec<bool> = {
        let mut a = vec![false; g.n()];
        for &v in comp {
            a[v] = true;
        }
        a
    };
    let mut queue = VecDeque::from([u]);
    seen[u] = true;
    while let Some(w) = queue.pop_front() {
        if w == x {
            break;
        }
        for nb in g.neighbors(w) {
            if allowed[nb] && !seen[nb] {
                seen[nb] = true;
                parent[nb] = Some(w);
                queue.push_back(nb);
            }
        }
    }
    let mut path = vec![x];
    let mut cur = x;
    while let Some(prev) = parent[cur] {
        path.push(prev);
        cur = prev;
    }
    path.reverse(); // now u .. x, length >= 3 since u and x are nonadjacent
    debug_assert!(path.len() >= 3 && path[0] == u);
    Some((path[0], path[1], path[2]))
}

/// Cograph-colors `C[1,2]`; a P4 there combines with the anchor edge.
fn color_c12(
    g: &Graph,
    p: &WagonPartition,
) -> Result<(usize, Vec<(usize, usize)>), StructureViolation> {
    let pair = (p.anchor()[0], p.anchor()[1]);
    piece_coloring(g, p.c_set(0, 1), |g, path| {
        wagon::c_p4_violation(g, path, pair)
    })
    .map_err(|v| StructureViolation::new("p4-free(C[1,2])", v))
}

/// Cograph-colors one outer set; a P4 there combines with its defining
/// anchor pair.
fn color_side(
    g: &Graph,
    p: &WagonPartition,
    side: Side,
) -> Result<(usize, Vec<(usize, usize)>), StructureViolation> {
    let pair = (p.anchor()[side.ij.0], p.anchor()[side.ij.1]);
    piece_coloring(g, p.c_set(side.ij.0, side.ij.1), |g, path| {
        wagon::c_p4_violation(g, path, pair)
    })
    .map_err(|v| StructureViolation::new(format!("p4-free({})", side.name()), v))
}

/// Converts an overweight piece into an oversized-clique violation.
fn width_guard(
    g: &Graph,
    set: &[usize],
    width: usize,
    cap: usize,
    boost: Option<usize>,
    claim: &str,
) -> Result<(), StructureViolation> {
    if width <= cap {
        return Ok(());
    }
    let v = wagon::width_refutation(g, set, cap, boost).expect("width recomputation agrees");
    Err(StructureViolation::new(claim, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_coloring;
    use crate::detect::{find_induced, screen, Pattern};
    use crate::gen::{clique_union, clique_with_pendant};

    fn assert_case(g: &Graph, expect: DiamondCase) -> Coloring {
        let report = screen(g, &[Pattern::P2P4, Pattern::Diamond]);
        assert!(report.is_member(), "test instance out of class");
        let (c, case) = color_diamond_free_traced(g).unwrap();
        assert_eq!(case, expect, "wrong arm for {g:?}");
        assert!(verify_coloring(g, &c).unwrap().is_proper());
        assert!(c.colors_used() <= c.bound());
        c
    }

    #[test]
    fn edgeless_and_tiny() {
        assert_eq!(
            color_diamond_free_traced(&Graph::empty(0)).unwrap().1,
            DiamondCase::SmallOmega
        );
        assert_case(&Graph::empty(7), DiamondCase::SmallOmega);
        assert_case(&Graph::complete(2), DiamondCase::Omega2);
        assert_case(&Graph::complete(3), DiamondCase::Omega3);
        assert_case(&Graph::complete(4), DiamondCase::Omega4CoreUnder4);
        assert_case(&Graph::complete(6), DiamondCase::HighCoreLe1);
    }

    #[test]
    fn five_cycle_and_grotzsch() {
        let c = assert_case(&Graph::cycle(5), DiamondCase::Omega2);
        assert_eq!(c.colors_used(), 3);
        let g = Graph::cycle(5).mycielskian();
        let c = assert_case(&g, DiamondCase::Omega2);
        assert_eq!(c.colors_used(), 4);
        assert_eq!(c.bound(), 4);
    }

    #[test]
    fn clique_unions_cover_the_high_arms() {
        // Second clique fills C[1,2]; its size is the core size.
        assert_case(&clique_union(&[5, 5]), DiamondCase::HighCoreFull);
        assert_case(&clique_union(&[5, 2]), DiamondCase::HighCorePair);
        assert_case(&clique_union(&[5, 3]), DiamondCase::HighCoreMid);
        assert_case(&clique_union(&[5, 4]), DiamondCase::HighCoreMid);
        assert_case(&clique_union(&[5, 1]), DiamondCase::HighCoreLe1);
        assert_case(&clique_union(&[6, 6]), DiamondCase::HighCoreFull);
        assert_case(&clique_union(&[4, 4]), DiamondCase::Omega4CoreFull);
        assert_case(&clique_union(&[4, 2]), DiamondCase::Omega4CoreUnder4);
        assert_case(&clique_union(&[3, 3]), DiamondCase::Omega3);
        assert_case(&clique_union(&[2, 2]), DiamondCase::Omega2);
    }

    #[test]
    fn bounds_are_tight_on_clique_pairs() {
        // K5 + K5: anchor 5 colors, C[1,2] needs omega fresh-ish ones:
        // 2*5 - 1 = 9 total.
        let c = assert_case(&clique_union(&[5, 5]), DiamondCase::HighCoreFull);
        assert_eq!(c.colors_used(), 9);
        assert_eq!(c.bound(), 9);
        // K5 + K3 shares the fresh palette: 5 + 3 = 8 <= 9.
        let c = assert_case(&clique_union(&[5, 3]), DiamondCase::HighCoreMid);
        assert_eq!(c.colors_used(), 8);
    }

    #[test]
    fn pendant_vertex_lands_in_an_outer_set() {
        // K5 plus one vertex adjacent to a single anchor vertex: it misses
        // two-plus anchor positions, so it lives in an outer C set and the
        // graph stays in class.
        assert_case(&clique_with_pendant(5), DiamondCase::HighCoreLe1);
    }

    #[test]
    fn rejects_diamond_with_certificate() {
        // K4 minus an edge plus a far apart edge: contains a diamond.
        let g =
            Graph::from_edge_list(6, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (4, 5)]).unwrap();
        let err = color_diamond_free(&g).unwrap_err();
        assert!(err.violation.verify(&g), "bad certificate: {err}");
        assert!(find_induced(&g, Pattern::Diamond).is_some());
    }

    #[test]
    fn rejects_p2p4_in_c12_with_certificate() {
        // K2 anchor {0,1}, P4 on {2,3,4,5} anticomplete to it: C[1,2]
        // carries the P4 and the anchor edge completes a P2∪P4.
        let g = Graph::from_edge_list(6, &[(0, 1), (2, 3), (3, 4), (4, 5)]).unwrap();
        let err = color_diamond_free(&g).unwrap_err();
        assert_eq!(err.claim, "p4-free(C[1,2])");
        assert!(err.violation.verify(&g));
        match &err.violation {
            Violation::ForbiddenPattern(w) => assert_eq!(w.pattern, Pattern::P2P4),
            other => panic!("expected a pattern, got {other}"),
        }
    }
}
