//! Desk-scale combinatorics of C-sequences over ordinals.
//!
//! This crate makes a family of set-theoretic constructions executable on
//! finite hardware: exact ordinal arithmetic in Cantor normal form below
//! epsilon-zero, clubs of ordinals with exact membership/indexing queries,
//! C-sequences and their coherence relations, the C-sequence graph together
//! with chromatic- and coloring-number machinery, postprocessing functions,
//! and the square-sequence forcing posets with their extension, game, and
//! projection procedures.
//!
//! Everything infinitary is evaluated against explicit *windows* and budgets;
//! every verdict records the window it was computed on, so nothing claims
//! more than what was actually checked.
//!
//! The `book/` directory of the repository contains a guide with runnable
//! examples; its snippets are compiled as doc-tests of this crate (see
//! [`guide`]).

pub mod club;
pub mod color;
pub mod cseq;
pub mod forcing;
pub mod graph;
pub mod guide;
pub mod ord;
pub mod postproc;
pub mod rng;
pub mod suite;
pub mod window;

pub use club::{Club, ClubError};
pub use ord::{CardinalTag, Cofinality, Ordinal, ParseOrdinalError};
pub use window::Window;
