//! Identifying codes, dominating, resolving and determining sets on
//! directed de Bruijn graphs `B(d,n)`, with brute-force oracles to check
//! every construction.
//!
//! Vertices are words of length `n` over `{0, …, d−1}`; there is an edge
//! `x₁…x_n → x₂…x_n a` for every letter `a`. Ranks read words as base-`d`
//! numbers, most significant letter first.

pub mod codes;
pub mod codeset;
pub mod cover;
pub mod error;
pub mod graph;
pub mod verify;
pub mod words;

pub use codes::{construct_auto, id_lower_bound, twin_pair, CodeSpec};
pub use codeset::{CodeSet, SetKind, Theorem};
pub use cover::SymbolPermutation;
pub use error::{Error, Result};
pub use graph::{Direction, GraphSpace, VertexSet};
pub use verify::{Signature, VerificationReport};
pub use words::Word;

/// Constructors run their own verifier on graphs up to this many vertices.
pub const SELF_CHECK_CAP: u64 = 1 << 14;
