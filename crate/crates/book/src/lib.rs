//! The bicliques guide. Each module holds one chapter of `book/src`, so the
//! chapter examples run as doc-tests with `cargo test -p bicliques-book`.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/graphs.md")]
pub mod graphs {}

#[doc = include_str!("../../../book/src/kernels.md")]
pub mod kernels {}

#[doc = include_str!("../../../book/src/induced.md")]
pub mod induced {}

#[doc = include_str!("../../../book/src/consensus.md")]
pub mod consensus {}

#[doc = include_str!("../../../book/src/generator.md")]
pub mod generator {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
