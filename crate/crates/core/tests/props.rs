//! Property tests: the library against independent reference
//! implementations and against its own declared contracts, on arbitrary
//! small graphs rather than a curated corpus.

mod common;

use colorbound::clique;
use colorbound::cograph;
use colorbound::colorers::{color_butterfly_free, color_diamond_free, color_gem_free};
use colorbound::coloring::verify_coloring;
use colorbound::detect::{self, Pattern};
use colorbound::gen::{self, GenSpec};
use colorbound::wagon::{self, Role};
use colorbound::{bound_for, oracle, ColorClass, Coloring, Graph};
use proptest::prelude::*;

/// Arbitrary graph on up to `max_n` vertices: order first, then one bit per
/// vertex pair.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

fn color_for(
    class: ColorClass,
    g: &Graph,
) -> Result<Coloring, colorbound::evidence::StructureViolation> {
    match class {
        ColorClass::GemFree => color_gem_free(g),
        ColorClass::ButterflyFree => color_butterfly_free(g),
        ColorClass::DiamondFree => color_diamond_free(g),
    }
}

proptest! {
    /// On any input a scheme either colors properly within its bound or
    /// returns a certificate that re-verifies against the graph; on
    /// in-class input it never refuses.
    #[test]
    fn colorers_accept_or_certify(g in arb_graph(10)) {
        let omega = common::subset_clique_number(&g);
        for class in [ColorClass::GemFree, ColorClass::ButterflyFree, ColorClass::DiamondFree] {
            let in_class = detect::screen(&g, &class.forbidden()).is_member();
            match color_for(class, &g) {
                Ok(c) => {
                    prop_assert!(verify_coloring(&g, &c).unwrap().is_proper());
                    prop_assert!(c.colors_used() <= bound_for(class, omega));
                    prop_assert!(g.n() == 0 || c.colors_used() >= omega);
                }
                Err(v) => {
                    prop_assert!(!in_class, "{class} scheme refused an in-class graph: {v}");
                    prop_assert!(v.violation.verify(&g), "certificate fails: {v}");
                }
            }
        }
    }

    /// Branch-and-bound chromatic number equals the naive k-sweep.
    #[test]
    fn oracle_matches_naive_sweep(g in arb_graph(8)) {
        let r = oracle::chromatic_number(&g).unwrap();
        prop_assert_eq!(r.chi, common::naive_chromatic_number(&g));
        prop_assert!(verify_coloring(&g, &r.witness_coloring).unwrap().is_proper());
        prop_assert_eq!(r.witness_coloring.colors_used(), r.chi);
    }

    /// Branch-and-bound clique number equals the full subset scan, and the
    /// reported members really form a clique of that size.
    #[test]
    fn clique_matches_subset_scan(g in arb_graph(10)) {
        let found = clique::max_clique(&g);
        prop_assert_eq!(found.size(), common::subset_clique_number(&g));
        prop_assert!(g.is_clique(&found.members));
    }

    /// Backtracking detection agrees with subset-and-permutation
    /// enumeration for every pattern, and witnesses verify.
    #[test]
    fn detector_matches_enumeration(g in arb_graph(7)) {
        for pattern in [
            Pattern::P2, Pattern::P4, Pattern::P2P4, Pattern::Diamond,
            Pattern::Gem, Pattern::Butterfly, Pattern::Clique(3), Pattern::Cycle(5),
        ] {
            let found = detect::find_induced(&g, pattern);
            if let Some(w) = &found {
                prop_assert!(w.verify(&g));
            }
            prop_assert_eq!(found.is_some(), common::contains_induced_exhaustive(&g, pattern));
        }
    }

    /// A partition anchored at an honest maximum clique always succeeds,
    /// and each vertex's role matches the definition recomputed from
    /// scratch: first two missed anchor positions, or the single one.
    #[test]
    fn partition_roles_match_definition(g in arb_graph(10)) {
        prop_assume!(g.n() > 0);
        let anchor = clique::max_clique(&g);
        let p = wagon::partition(&g, &anchor).unwrap();
        prop_assert!(p.validate(&g));
        let a = p.anchor();
        for v in 0..g.n() {
            let role = p.role(v);
            if let Some(pos) = a.iter().position(|&x| x == v) {
                prop_assert_eq!(role, Role::Anchor(pos));
                continue;
            }
            let missed: Vec<usize> = (0..a.len()).filter(|&i| !g.has_edge(v, a[i])).collect();
            match role {
                Role::I(i) => prop_assert_eq!(missed, vec![i]),
                Role::C(i, j) => prop_assert_eq!(missed[..2].to_vec(), vec![i, j]),
                Role::Anchor(_) => prop_assert!(false, "non-anchor vertex got an anchor role"),
            }
        }
    }

    /// Cograph recognition is exactly P4-freeness; the cotree evaluates
    /// back to the input; rejection carries a verified P4.
    #[test]
    fn cograph_recognition_is_p4_freeness(g in arb_graph(8)) {
        match cograph::decompose(&g) {
            Ok(tree) => {
                prop_assert!(!common::contains_induced_exhaustive(&g, Pattern::P4));
                prop_assert_eq!(tree.evaluate(g.n()), g.clone());
                let c = cograph::color_cograph(&g).unwrap();
                prop_assert!(verify_coloring(&g, &c).unwrap().is_proper());
                prop_assert_eq!(c.colors_used(), clique::clique_number(&g));
            }
            Err(w) => {
                prop_assert_eq!(w.pattern, Pattern::P4);
                prop_assert!(w.verify(&g));
                prop_assert!(common::contains_induced_exhaustive(&g, Pattern::P4));
            }
        }
    }

    /// Generated cographs round-trip through recognition at larger orders.
    #[test]
    fn random_cographs_round_trip(n in 1usize..=20, seed in any::<u64>()) {
        let g = gen::random_cograph(n, seed);
        let tree = cograph::decompose(&g).unwrap();
        prop_assert_eq!(tree.evaluate(n), g);
    }

    /// Same generator spec, same graph; and accepted samples really are in
    /// class.
    #[test]
    fn generator_is_deterministic(n in 4usize..=10, seed in any::<u64>()) {
        for class in [ColorClass::GemFree, ColorClass::ButterflyFree, ColorClass::DiamondFree] {
            let spec = GenSpec::new(class, n, seed);
            let a = gen::random_in_class(spec);
            let b = gen::random_in_class(spec);
            prop_assert_eq!(&a, &b);
            if let Ok(g) = a {
                prop_assert!(detect::screen(&g, &class.forbidden()).is_member());
            }
        }
    }

    /// Any odd antihole of length at least seven forces an induced diamond
    /// in the host graph.
    #[test]
    fn odd_antiholes_carry_diamonds(g in arb_graph(9)) {
        if detect::find_odd_antihole(&g, g.n()).is_some() {
            prop_assert!(detect::find_induced(&g, Pattern::Diamond).is_some());
        }
    }
}
