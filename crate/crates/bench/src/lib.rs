//! Shared instance builders for the benchmark targets. Kept out of the
//! bench files so both targets measure the same graphs.

use colorbound::gen::{self, GenSpec};
use colorbound::{ColorClass, Graph};

/// A seeded in-class sample at the sampler's calibrated density.
///
/// # Panics
///
/// Panics if rejection sampling exhausts its budget; the sizes used by the
/// bench targets are chosen well inside the feasible range.
pub fn member(class: ColorClass, n: usize, seed: u64) -> Graph {
    gen::random_in_class(GenSpec::new(class, n, seed)).expect("bench instance within budget")
}

/// A catalog graph by name.
///
/// # Panics
///
/// Panics if the name is not in the catalog.
pub fn catalog(name: &str) -> Graph {
    gen::named(name).expect("catalog name")
}

/// Disjoint cliques of the given sizes: members of all three classes at
/// any scale, so they exercise the schemes without rejection sampling.
pub fn clique_union(sizes: &[usize]) -> Graph {
    gen::clique_union(sizes)
}
