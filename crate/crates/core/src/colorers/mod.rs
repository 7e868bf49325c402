//! The three class-specific coloring schemes.
//!
//! Each colorer anchors the partition from [`crate::wagon`] at the
//! lexicographically least maximum clique, re-checks the structural facts
//! its palette layout depends on, and only then assigns colors. Failed
//! checks surface as [`StructureViolation`]s carrying hand-checkable
//! certificates; a returned coloring is always proper and always within
//! the class bound from [`crate::coloring::bound_for`].

pub mod butterfly;
pub mod diamond;
pub mod gem;

pub use butterfly::color_butterfly_free;
pub use diamond::{color_diamond_free, color_diamond_free_traced, DiamondCase};
pub use gem::color_gem_free;

use crate::clique;
use crate::coloring::{verify_coloring, ClassTag, Coloring};
use crate::evidence::{StructureViolation, Violation};
use crate::graph::Graph;
use crate::wagon::{self, PartitionError, WagonPartition};

/// Builds the partition around the least maximum clique. The error paths
/// can only fire if the exact clique solver is wrong, but they stay honest:
/// a certificate comes back instead of a panic.
pub(crate) fn anchored_partition(g: &Graph) -> Result<WagonPartition, StructureViolation> {
    let anchor = clique::max_clique(g);
    wagon::partition(g, &anchor).map_err(|e| match e {
        PartitionError::AnchorNotMaximum { certificate } => StructureViolation::new(
            "anchor-is-maximum",
            Violation::OversizedClique {
                members: certificate,
            },
        ),
        PartitionError::AnchorNotClique(u, v) => {
            StructureViolation::new("anchor-is-clique", Violation::MissingEdge { u, v })
        }
    })
}

/// Write-once color slots; `finish` fails loudly on any uncolored vertex,
/// which would be a scheme bug rather than bad input.
pub(crate) struct Slots {
    colors: Vec<Option<usize>>,
}

impl Slots {
    pub(crate) fn new(n: usize) -> Self {
        Slots {
            colors: vec![None; n],
        }
    }

    pub(crate) fn set(&mut self, v: usize, color: usize) {
        debug_assert!(self.colors[v].is_none(), "vertex {v} colored twice");
        self.colors[v] = Some(color);
    }

    pub(crate) fn set_all(&mut self, verts: &[usize], color: usize) {
        for &v in verts {
            self.set(v, color);
        }
    }

    /// Applies a piece coloring, sending local color `k` to `palette[k]`.
    pub(crate) fn set_mapped(&mut self, piece: &[(usize, usize)], palette: &[usize]) {
        for &(v, local) in piece {
            self.set(v, palette[local]);
        }
    }

    pub(crate) fn finish(self, g: &Graph, bound: usize, tag: ClassTag) -> Coloring {
        let raw: Vec<usize> = self
            .colors
            .into_iter()
            .enumerate()
            .map(|(v, c)| c.unwrap_or_else(|| panic!("vertex {v} left uncolored")))
            .collect();
        let coloring = Coloring::from_raw(raw, bound, tag);
        let verdict = verify_coloring(g, &coloring).expect("assignment is total");
        assert!(
            verdict.is_proper(),
            "scheme produced an improper coloring: {verdict:?}"
        );
        assert!(
            coloring.colors_used() <= bound,
            "scheme exceeded its bound: {} > {}",
            coloring.colors_used(),
            bound
        );
        coloring
    }
}

/// Consecutive palette `[start, start + len)`.
pub(crate) fn run(start: usize, len: usize) -> Vec<usize> {
    (start..start + len).collect()
}
