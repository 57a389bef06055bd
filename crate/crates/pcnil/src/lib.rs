//! Commutator bases and canonical forms for partially commutative
//! nilpotent groups.
//!
//! A group is described by a finite simple graph: vertices generate,
//! adjacent vertices commute, and the whole group is truncated at a fixed
//! nilpotency class. This crate builds the ordered commutator basis of
//! such a group, computes the canonical exponent vector of any word over
//! the generators, and provides exact group arithmetic on those vectors.
//!
//! The pipeline, bottom to top:
//!
//! * [`graph`]: the commutation graph and the base order on generators.
//! * [`words`]: the word order and associative Lyndon-Shirshov words.
//! * [`trace`]: the trace monoid and truncated integer series over it.
//! * [`commutators`]: standard bracketings, the admissibility filter, and
//!   the ordered [`MaltsevBasis`].
//! * [`lie`]: associative expansion of brackets and exact linear algebra
//!   over the monomial coordinates.
//! * [`group`]: group words, the multiplicative expansion, and the
//!   [`Collector`] that turns expansions into canonical forms.
//! * [`verify`]: counting and round-trip self-checks.
//!
//! All arithmetic is exact: arbitrary-precision integers throughout, with
//! rationals appearing only inside the linear solver.

pub mod commutators;
pub mod error;
pub mod graph;
pub mod group;
pub mod lie;
pub mod trace;
pub mod verify;
pub mod words;

#[cfg(test)]
pub(crate) mod test_support;

pub use commutators::{
    is_pc_admissible, is_standard, standard_bracketing, BasisElement, CommTree, MaltsevBasis,
};
pub use error::{Error, Result};
pub use graph::{CommutationGraph, Vertex};
pub use group::{commutator_word, magnus, parse_word, Collector, GroupWord, NormalForm};
pub use lie::{express_in_basis, lie_expand, rank_of_degree, SegmentSolver};
pub use trace::{Monomial, TruncatedSeries};
pub use verify::{run_verification, DegreeRecord, VerifyReport};
pub use words::{format_word, generate_als, is_als, word_cmp, Word};
