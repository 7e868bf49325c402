//! Perfection certificates for graphs excluding P2∪P4, the diamond, and the
//! five-cycle.
//!
//! In that class, once the clique number reaches five the graph is perfect.
//! [`certify_perfect`] checks the three exclusions and the clique threshold
//! and then *corroborates* the conclusion instead of trusting it: by the
//! strong perfect graph theorem a graph is perfect exactly when it has no
//! odd hole and no odd antihole, so the certificate records exhaustive
//! sweeps for both (fine at this crate's instance sizes). A second,
//! entirely independent check, [`exhaustive_perfection`], tests χ = ω on
//! every induced subgraph directly.

use crate::clique;
use crate::detect::{self, Pattern, PatternWitness};
use crate::graph::Graph;
use crate::oracle;
use std::fmt;
use thiserror::Error;

/// A verified imperfection: an odd hole, or an odd antihole of length at
/// least seven. Either one rules out perfection outright.
#[derive(Debug, Clone)]
pub enum Imperfection {
    /// Induced odd cycle of length at least five; embedding in cycle order.
    OddHole(PatternWitness),
    /// Complement of an odd cycle of length at least seven; the embedding
    /// lists host vertices in complement-cycle order.
    OddAntihole(PatternWitness),
}

impl Imperfection {
    /// Re-checks the witness against `g`, including odd length.
    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            Imperfection::OddHole(w) => {
                matches!(w.pattern, Pattern::Cycle(k) if k >= 5 && k % 2 == 1) && w.verify(g)
            }
            Imperfection::OddAntihole(w) => {
                matches!(w.pattern, Pattern::Cycle(k) if k >= 7 && k % 2 == 1)
                    && w.verify(&g.complement())
            }
        }
    }
}

impl fmt::Display for Imperfection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Imperfection::OddHole(w) => write!(f, "odd hole {:?}", w.embedding),
            Imperfection::OddAntihole(w) => write!(f, "odd antihole {:?}", w.embedding),
        }
    }
}

/// Sweeps `g` for any odd hole, then any odd antihole. `None` means the
/// graph is perfect.
pub fn find_imperfection(g: &Graph) -> Option<Imperfection> {
    if let Some(w) = detect::find_odd_hole(g, g.n()) {
        return Some(Imperfection::OddHole(w));
    }
    detect::find_odd_antihole(g, g.n()).map(Imperfection::OddAntihole)
}

/// Why [`certify_perfect`] made no judgement about perfection.
#[derive(Debug, Clone)]
pub enum Inapplicability {
    /// An induced P2∪P4, diamond, or five-cycle: the graph is outside the
    /// class this certifier covers (though possibly still perfect).
    OutOfClass(PatternWitness),
    /// Clique number below five. Use [`find_imperfection`] or
    /// [`exhaustive_perfection`] directly for such graphs.
    CliqueNumber { omega: usize },
}

/// The verdict a [`PerfectionCertificate`] carries.
#[derive(Debug, Clone)]
pub enum Conclusion {
    /// Every hypothesis holds and both corroboration sweeps came back
    /// clean: the graph is perfect, so χ = ω.
    Perfect,
    /// A hypothesis failed; the certifier says nothing about perfection.
    NotApplicable(Inapplicability),
    /// The hypotheses hold yet a sweep found odd structure. Unreachable on
    /// honest runs — it means a detector or the certifier itself is buggy,
    /// and is surfaced loudly rather than silently trusted.
    Refuted(Imperfection),
}

/// Outcome of [`certify_perfect`]: the verdict together with everything
/// that was checked to reach it, so the certificate can be re-validated
/// without rerunning the certifier.
#[derive(Debug, Clone)]
pub struct PerfectionCertificate {
    /// Clique number of the input.
    pub omega: usize,
    /// Exclusion screen for P2∪P4, the diamond, and the five-cycle.
    pub class_check: detect::MembershipReport,
    /// First induced seven-cycle, if one exists. Must be `None` for the
    /// verdict to be `Perfect`.
    pub c7: Option<PatternWitness>,
    /// Corroboration: first odd hole of any length up to n, if any.
    pub odd_hole_scan: Option<PatternWitness>,
    /// Corroboration: first odd antihole of length at least seven, if any.
    pub odd_antihole_scan: Option<PatternWitness>,
    pub conclusion: Conclusion,
}

impl PerfectionCertificate {
    /// Re-derives the verdict from the recorded evidence and re-checks
    /// every witness against `g`. True exactly when the certificate is
    /// internally consistent with the graph it was issued for.
    pub fn verify(&self, g: &Graph) -> bool {
        let evidence_ok = self
            .class_check
            .checks
            .iter()
            .all(|(_, w)| w.as_ref().is_none_or(|w| w.verify(g)))
            && self.c7.as_ref().is_none_or(|w| w.verify(g))
            && self.odd_hole_scan.as_ref().is_none_or(|w| w.verify(g))
            && self
                .odd_antihole_scan
                .as_ref()
                .is_none_or(|w| w.verify(&g.complement()));
        let verdict_ok = match &self.conclusion {
            Conclusion::Perfect => {
                self.class_check.is_member()
                    && self.omega >= 5
                    && self.c7.is_none()
                    && self.odd_hole_scan.is_none()
                    && self.odd_antihole_scan.is_none()
            }
            Conclusion::NotApplicable(Inapplicability::OutOfClass(w)) => {
                !self.class_check.is_member() && w.verify(g)
            }
            Conclusion::NotApplicable(Inapplicability::CliqueNumber { omega }) => {
                self.class_check.is_member() && *omega == self.omega && self.omega < 5
            }
            Conclusion::Refuted(i) => i.verify(g),
        };
        evidence_ok && verdict_ok
    }
}

impl fmt::Display for PerfectionCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.conclusion {
            Conclusion::Perfect => write!(
                f,
                "perfect: chi = omega = {}, no odd holes or antiholes",
                self.omega
            ),
            Conclusion::NotApplicable(Inapplicability::OutOfClass(w)) => {
                write!(f, "not applicable: out of class, {w}")
            }
            Conclusion::NotApplicable(Inapplicability::CliqueNumber { omega }) => {
                write!(
                    f,
                    "not applicable: clique number {omega} is below the threshold of 5"
                )
            }
            Conclusion::Refuted(i) => write!(f, "refuted: {i}"),
        }
    }
}

/// Certifies that `g` is perfect, given that it excludes P2∪P4, the
/// diamond, and the five-cycle and has clique number at least five.
///
/// Never fails: each possible outcome is a certificate state, and every
/// negative state carries a concrete witness. On top of the hypothesis
/// checks the certificate records full odd-hole and odd-antihole sweeps,
/// so a `Perfect` verdict is corroborated, not merely derived. The sweeps
/// are exhaustive — intended for desk-scale inputs.
pub fn certify_perfect(g: &Graph) -> PerfectionCertificate {
    let class_check = detect::screen(g, &[Pattern::P2P4, Pattern::Diamond, Pattern::Cycle(5)]);
    let omega = clique::clique_number(g);
    let c7 = detect::find_induced(g, Pattern::Cycle(7));
    let odd_hole_scan = detect::find_odd_hole(g, g.n());
    let odd_antihole_scan = detect::find_odd_antihole(g, g.n());

    let conclusion = if let Some(w) = class_check.witness() {
        Conclusion::NotApplicable(Inapplicability::OutOfClass(w.clone()))
    } else if omega < 5 {
        Conclusion::NotApplicable(Inapplicability::CliqueNumber { omega })
    } else if let Some(w) = &odd_hole_scan {
        Conclusion::Refuted(Imperfection::OddHole(w.clone()))
    } else if let Some(w) = &odd_antihole_scan {
        Conclusion::Refuted(Imperfection::OddAntihole(w.clone()))
    } else {
        debug_assert!(c7.is_none(), "C7 is an odd hole; the sweep must see it");
        Conclusion::Perfect
    };

    PerfectionCertificate {
        omega,
        class_check,
        c7,
        odd_hole_scan,
        odd_antihole_scan,
        conclusion,
    }
}

/// Order cap for [`exhaustive_perfection`]: the subset scan visits all
/// 2^n induced subgraphs.
pub const EXHAUSTIVE_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PerfectionError {
    #[error("graph order {n} exceeds the exhaustive-perfection guard of {limit} vertices")]
    TooLarge { n: usize, limit: usize },
}

/// Tests the definition of perfection directly: χ(H) = ω(H) for every
/// induced subgraph H, by scanning all vertex subsets. Independent of
/// [`certify_perfect`] — the two agreeing is evidence, not tautology.
pub fn exhaustive_perfection(g: &Graph) -> Result<bool, PerfectionError> {
    let n = g.n();
    if n > EXHAUSTIVE_LIMIT {
        return Err(PerfectionError::TooLarge {
            n,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    for mask in 0u32..(1u32 << n) {
        let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let (h, _) = g.induced(&verts).expect("subset vertices are valid");
        let chi = oracle::chromatic_number(&h)
            .expect("subgraph order is under the oracle guard")
            .chi;
        if chi != clique::clique_number(&h) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{clique_union, clique_with_pendant};

    #[test]
    fn certifies_simple_members() {
        for g in [Graph::complete(6), clique_with_pendant(5)] {
            let cert = certify_perfect(&g);
            assert!(matches!(cert.conclusion, Conclusion::Perfect));
            assert!(cert.c7.is_none());
            assert!(cert.verify(&g));
            assert!(exhaustive_perfection(&g).unwrap());
        }
        assert_eq!(certify_perfect(&Graph::complete(6)).omega, 6);
    }

    #[test]
    fn certifies_disjoint_cliques() {
        let g = clique_union(&[5, 5]);
        let cert = certify_perfect(&g);
        assert!(matches!(cert.conclusion, Conclusion::Perfect));
        assert_eq!(cert.omega, 5);
        assert!(cert.verify(&g));
        assert!(exhaustive_perfection(&g).unwrap());
    }

    #[test]
    fn declines_five_cycle_with_witness() {
        let g = Graph::cycle(5);
        let cert = certify_perfect(&g);
        match &cert.conclusion {
            Conclusion::NotApplicable(Inapplicability::OutOfClass(w)) => {
                assert_eq!(w.pattern, Pattern::Cycle(5));
                assert!(w.verify(&g));
            }
            other => panic!("expected out-of-class, got {other:?}"),
        }
        assert!(cert.verify(&g));
        // The scan corroborates: C5 itself is the odd hole.
        assert!(cert.odd_hole_scan.is_some());
        assert!(!exhaustive_perfection(&g).unwrap());
    }

    #[test]
    fn declines_diamond_with_witness() {
        // K5 plus a far-away diamond: omega is 5 but the class check fails.
        let mut edges = vec![(5, 6), (6, 7), (5, 8), (6, 8), (7, 8)];
        for u in 0..5 {
            for v in u + 1..5 {
                edges.push((u, v));
            }
        }
        let g = Graph::from_edge_list(9, &edges).unwrap();
        let cert = certify_perfect(&g);
        match &cert.conclusion {
            Conclusion::NotApplicable(Inapplicability::OutOfClass(w)) => {
                assert_eq!(w.pattern, Pattern::Diamond);
                assert!(w.verify(&g));
            }
            other => panic!("expected out-of-class, got {other:?}"),
        }
        assert!(cert.verify(&g));
    }

    #[test]
    fn declines_small_cliques_without_judging() {
        let g = Graph::complete(4);
        let cert = certify_perfect(&g);
        match cert.conclusion {
            Conclusion::NotApplicable(Inapplicability::CliqueNumber { omega }) => {
                assert_eq!(omega, 4)
            }
            other => panic!("expected clique refusal, got {other:?}"),
        }
        assert!(cert.verify(&g));
        // The declined graph is still perfect, as the direct checks confirm.
        assert!(find_imperfection(&g).is_none());
        assert!(exhaustive_perfection(&g).unwrap());
    }

    #[test]
    fn sweep_finds_odd_structure() {
        assert!(find_imperfection(&Graph::cycle(6)).is_none());
        assert!(find_imperfection(&Graph::path(7)).is_none());

        let hole = find_imperfection(&Graph::cycle(7)).unwrap();
        assert!(matches!(hole, Imperfection::OddHole(_)));
        assert!(hole.verify(&Graph::cycle(7)));

        let co7 = Graph::cycle(7).complement();
        let anti = find_imperfection(&co7).unwrap();
        assert!(matches!(anti, Imperfection::OddAntihole(_)));
        assert!(anti.verify(&co7));
        assert!(!anti.verify(&Graph::cycle(7)), "wrong host must fail");
    }

    #[test]
    fn subset_scan_matches_the_definition() {
        // C5: chi = 3 > 2 = omega already on the full vertex set.
        assert!(!exhaustive_perfection(&Graph::cycle(5)).unwrap());
        // Bipartite graphs are perfect.
        assert!(exhaustive_perfection(&Graph::cycle(12)).unwrap());
        assert!(exhaustive_perfection(&Graph::path(9)).unwrap());
        // A C5 buried in a larger graph is still found.
        let g = Graph::from_edge_list(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6)])
            .unwrap();
        assert!(!exhaustive_perfection(&g).unwrap());
    }

    #[test]
    fn subset_scan_guard() {
        assert_eq!(
            exhaustive_perfection(&Graph::empty(13)).unwrap_err(),
            PerfectionError::TooLarge { n: 13, limit: 12 }
        );
    }

    #[test]
    fn grotzsch_is_imperfect() {
        let g = Graph::cycle(5).mycielskian();
        let obstruction = find_imperfection(&g).unwrap();
        assert!(obstruction.verify(&g));
        assert!(!exhaustive_perfection(&g).unwrap());
    }
}
