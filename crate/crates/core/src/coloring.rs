//! Proper colorings, the class tags attached to them, and the color-count
//! guarantees each structural scheme promises.

use crate::graph::Graph;
use std::fmt;
use thiserror::Error;

/// The three hereditary classes with dedicated coloring schemes. Each class
/// excludes the induced P2∪P4 together with one more pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ColorClass {
    GemFree,
    ButterflyFree,
    DiamondFree,
}

impl ColorClass {
    /// The two forbidden patterns defining the class.
    pub fn forbidden(self) -> [crate::detect::Pattern; 2] {
        use crate::detect::Pattern;
        match self {
            ColorClass::GemFree => [Pattern::P2P4, Pattern::Gem],
            ColorClass::ButterflyFree => [Pattern::P2P4, Pattern::Butterfly],
            ColorClass::DiamondFree => [Pattern::P2P4, Pattern::Diamond],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ColorClass::GemFree => "gem-free",
            ColorClass::ButterflyFree => "butterfly-free",
            ColorClass::DiamondFree => "diamond-free",
        }
    }
}

impl fmt::Display for ColorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Number of colors the scheme for `class` guarantees on a graph with
/// clique number `omega`. Exact integer arithmetic; the butterfly formula
/// `(omega² + 3·omega - 2) / 2` is always even-numerated.
pub fn bound_for(class: ColorClass, omega: usize) -> usize {
    if omega == 0 {
        return 0;
    }
    if omega == 1 {
        return 1;
    }
    match class {
        ColorClass::GemFree => 3 * omega - 2,
        ColorClass::ButterflyFree => (omega * omega + 3 * omega - 2) / 2,
        ColorClass::DiamondFree => match omega {
            2 => 4,
            3 => 7,
            4 => 9,
            _ => 2 * omega - 1,
        },
    }
}

/// Provenance of a coloring: which scheme produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassTag {
    Cograph,
    GemFree,
    ButterflyFree,
    DiamondFree,
    /// Exact solver; `bound` equals the chromatic number itself.
    Exact,
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ClassTag::Cograph => "cograph",
            ClassTag::GemFree => "gem-free",
            ClassTag::ButterflyFree => "butterfly-free",
            ClassTag::DiamondFree => "diamond-free",
            ClassTag::Exact => "exact",
        };
        f.write_str(s)
    }
}

/// A total color assignment with a compact palette: colors are `0..colors_used`
/// and every one of them is used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    assignment: Vec<usize>,
    colors_used: usize,
    bound: usize,
    tag: ClassTag,
}

impl Coloring {
    /// Compacts `raw` (arbitrary color ids) into ranks `0..k` preserving
    /// relative order and records the promised `bound`.
    pub fn from_raw(raw: Vec<usize>, bound: usize, tag: ClassTag) -> Self {
        let mut palette: Vec<usize> = raw.clone();
        palette.sort_unstable();
        palette.dedup();
        let assignment = raw
            .iter()
            .map(|c| palette.binary_search(c).unwrap())
            .collect();
        Coloring {
            assignment,
            colors_used: palette.len(),
            bound,
            tag,
        }
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn color(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn colors_used(&self) -> usize {
        self.colors_used
    }

    /// Color count promised in advance by the producing scheme.
    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn tag(&self) -> ClassTag {
        self.tag
    }

    /// Vertices of each color class, indexed by color.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.colors_used];
        for (v, &c) in self.assignment.iter().enumerate() {
            out[c].push(v);
        }
        out
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} coloring with {} colors (promised {})",
            self.tag, self.colors_used, self.bound
        )
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("assignment covers {got} vertices but the graph has {expected}")]
    WrongLength { got: usize, expected: usize },
}

/// Result of checking a coloring against a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Proper,
    /// An edge whose endpoints share a color.
    MonochromaticEdge(usize, usize),
}

impl Verdict {
    pub fn is_proper(&self) -> bool {
        matches!(self, Verdict::Proper)
    }
}

/// Checks that `coloring` properly colors `g`, reporting the first
/// monochromatic edge (lexicographically) otherwise.
pub fn verify_coloring(g: &Graph, coloring: &Coloring) -> Result<Verdict, ColoringError> {
    if coloring.assignment.len() != g.n() {
        return Err(ColoringError::WrongLength {
            got: coloring.assignment.len(),
            expected: g.n(),
        });
    }
    for (u, v) in g.edges() {
        if coloring.assignment[u] == coloring.assignment[v] {
            return Ok(Verdict::MonochromaticEdge(u, v));
        }
    }
    Ok(Verdict::Proper)
}
