//! The book's chapters, compiled as doc-tests.
//!
//! mdBook renders `book/` for reading; including the chapters here makes
//! `cargo test --doc` compile and run every Rust snippet in them, which
//! keeps the guide in sync with the library.

#[doc = include_str!("../../../book/src/intro.md")]
pub mod intro {}

#[doc = include_str!("../../../book/src/ordinals.md")]
pub mod ordinals {}

#[doc = include_str!("../../../book/src/clubs.md")]
pub mod clubs {}

#[doc = include_str!("../../../book/src/c-sequences.md")]
pub mod c_sequences {}

#[doc = include_str!("../../../book/src/graphs.md")]
pub mod graphs {}

#[doc = include_str!("../../../book/src/coloring.md")]
pub mod coloring {}

#[doc = include_str!("../../../book/src/postprocessing.md")]
pub mod postprocessing {}

#[doc = include_str!("../../../book/src/posets.md")]
pub mod posets {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
