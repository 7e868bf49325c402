//! Coloring scheme for graphs with no induced P2∪P4 and no induced
//! butterfly.
//!
//! Here every `C[i,j]` other than `C[1,2]` must be stable: an edge inside
//! one, together with a third anchor vertex and the defining anchor pair,
//! is a butterfly. So the anchor takes `ω` colors which the `I` sets reuse
//! (each `I[a]` is stable and misses exactly `v_a`), `C[1,2]` is
//! cograph-colored on at most `ω` fresh colors, and the remaining `C` sets
//! take one fresh color apiece — at most `C(ω,2) - 1` of them, for
//! `(ω² + 3ω - 2) / 2` colors in total.

use crate::coloring::{bound_for, ClassTag, ColorClass, Coloring};
use crate::evidence::StructureViolation;
use crate::graph::Graph;
use crate::wagon::{self, piece_coloring};

use super::{anchored_partition, run, Slots};

/// Colors a (P2∪P4, butterfly)-free graph with at most
/// `(ω² + 3ω - 2) / 2` colors, or returns a refuted structural claim.
pub fn color_butterfly_free(g: &Graph) -> Result<Coloring, StructureViolation> {
    if g.n() == 0 {
        return Ok(Coloring::from_raw(Vec::new(), 0, ClassTag::ButterflyFree));
    }
    let p = anchored_partition(g)?;
    let omega = p.omega();
    let bound = bound_for(ColorClass::ButterflyFree, omega);
    let anchor = p.anchor();

    let mut slots = Slots::new(g.n());
    for (pos, &v) in anchor.iter().enumerate() {
        slots.set(v, pos);
    }
    // I[a] reuses v_a's color: it is complete to the rest of the anchor
    // (so an internal edge would grow a bigger clique) and misses v_a.
    for (a, set) in p.i_sets() {
        if let Some(v) = wagon::i_set_edge_refutation(g, &p, a) {
            return Err(StructureViolation::new(format!("stable(I[{}])", a + 1), v));
        }
        slots.set_all(set, a);
    }

    let c12 = p.c_set(0, 1);
    // The anchor pair only matters when C[1,2] exists, which needs ω >= 2.
    let pair = if omega >= 2 {
        (anchor[0], anchor[1])
    } else {
        (anchor[0], anchor[0])
    };
    let (w12, piece12) = piece_coloring(g, c12, |g, path| wagon::c_p4_violation(g, path, pair))
        .map_err(|v| StructureViolation::new("p4-free(C[1,2])", v))?;
    if w12 > omega {
        let v = wagon::width_refutation(g, c12, omega, None).unwrap();
        return Err(StructureViolation::new("omega(C[1,2])<=omega", v));
    }
    slots.set_mapped(&piece12, &run(omega, w12));

    let mut next = omega + w12;
    for ((i, j), set) in p.c_sets() {
        if (i, j) == (0, 1) {
            continue;
        }
        if let Some(v) = wagon::c_set_stability_refutation(g, &p, i, j) {
            return Err(StructureViolation::new(
                format!("stable(C[{},{}])", i + 1, j + 1),
                v,
            ));
        }
        slots.set_all(set, next);
        next += 1;
    }
    Ok(slots.finish(g, bound, ClassTag::ButterflyFree))
}
