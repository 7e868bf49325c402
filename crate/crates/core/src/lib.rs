//! Structural graph coloring with certified bounds.
//!
//! The crate colors graphs from three hereditary classes — graphs excluding
//! an induced P2∪P4 together with a gem, a butterfly, or a diamond — using
//! partition-based schemes whose color counts stay within a function of the
//! clique number. Every structural assumption a scheme relies on is checked
//! at runtime; when a check fails the library returns a small certificate
//! (a forbidden induced subgraph or an oversized clique) instead of a
//! coloring, so callers never receive an unsupported answer on out-of-class
//! input.
//!
//! Supporting pieces: exact maximum-clique and chromatic-number solvers for
//! cross-checking at small sizes ([`clique`], [`oracle`]), induced-subgraph
//! detection ([`detect`]), a cograph recognizer/colorer ([`cograph`]),
//! perfection certification for one diamond-free subclass ([`perfection`]),
//! and seeded instance generators ([`gen`]).

pub mod clique;
pub mod cograph;
pub mod colorers;
pub mod coloring;
pub mod detect;
pub mod evidence;
pub mod gen;
pub mod graph;
pub mod oracle;
pub mod perfection;
pub mod wagon;

pub use coloring::{bound_for, ClassTag, ColorClass, Coloring};
pub use graph::{Graph, GraphError, VertexSet};
