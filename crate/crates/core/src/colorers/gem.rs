//! Coloring scheme for graphs with no induced P2∪P4 and no induced gem.
//!
//! Outside the anchor's least vertex `v1` and the set `C[1,2]`, the graph
//! splits into a side complete to `v1` and a side complete to `v2`
//! ([`crate::wagon::WagonPartition::gem_sides`]). In this class each side
//! and `C[1,2]` must be P4-free: a P4 in a side closes a gem with its apex,
//! a P4 in `C[1,2]` pairs with the edge `v1 v2` into a P2∪P4. Each of the
//! three pieces is cograph-colored on its own palette — at most `ω - 1`,
//! `ω - 1`, and `ω` colors — and `v1` reuses the first color of the side it
//! cannot touch, for `3ω - 2` colors in total.

use crate::coloring::{bound_for, ClassTag, ColorClass, Coloring};
use crate::evidence::StructureViolation;
use crate::graph::Graph;
use crate::wagon::{self, piece_coloring};

use super::{anchored_partition, run, Slots};

/// Colors a (P2∪P4, gem)-free graph with at most `3ω - 2` colors, or
/// returns a refuted structural claim with its certificate.
pub fn color_gem_free(g: &Graph) -> Result<Coloring, StructureViolation> {
    if g.n() == 0 {
        return Ok(Coloring::from_raw(Vec::new(), 0, ClassTag::GemFree));
    }
    let p = anchored_partition(g)?;
    let omega = p.omega();
    let bound = bound_for(ColorClass::GemFree, omega);
    let anchor = p.anchor();
    let v1 = anchor[0];
    let v2 = if omega >= 2 { anchor[1] } else { v1 };

    let (side1, side2) = p.gem_sides();
    let c12 = p.c_set(0, 1);

    let (w1, piece1) = piece_coloring(g, &side1, |g, path| wagon::side_p4_violation(g, path, v1))
        .map_err(|v| StructureViolation::new("p4-free(side1)", v))?;
    let (w2, piece2) = piece_coloring(g, &side2, |g, path| wagon::side_p4_violation(g, path, v2))
        .map_err(|v| StructureViolation::new("p4-free(side2)", v))?;
    let (w3, piece3) = piece_coloring(g, c12, |g, path| wagon::c_p4_violation(g, path, (v1, v2)))
        .map_err(|v| StructureViolation::new("p4-free(C[1,2])", v))?;

    // Side widths stay below omega (each side is complete to its apex) and
    // C[1,2]'s width cannot pass omega itself. The cograph width equals the
    // piece's clique number, so a breach comes with a concrete clique.
    if omega >= 2 {
        if w1 > omega - 1 {
            let v = wagon::width_refutation(g, &side1, omega - 1, Some(v1)).unwrap();
            return Err(StructureViolation::new("omega(side1)<omega", v));
        }
        if w2 > omega - 1 {
            let v = wagon::width_refutation(g, &side2, omega - 1, Some(v2)).unwrap();
            return Err(StructureViolation::new("omega(side2)<omega", v));
        }
    }
    if w3 > omega {
        let v = wagon::width_refutation(g, c12, omega, None).unwrap();
        return Err(StructureViolation::new("omega(C[1,2])<=omega", v));
    }

    let mut slots = Slots::new(g.n());
    slots.set_mapped(&piece1, &run(0, w1));
    slots.set_mapped(&piece2, &run(w1, w2));
    slots.set_mapped(&piece3, &run(w1 + w2, w3));
    // v1 is anticomplete to side2 and C[1,2], so the first color past
    // side1's palette is free for it whether or not anyone else has it.
    slots.set(v1, w1);
    Ok(slots.finish(g, bound, ClassTag::GemFree))
}
