//! Runs every code example in the guide as a doc-test. The chapters live in
//! `book/src`; this crate only includes them, so `cargo test` fails whenever
//! the guide drifts from the library.

#[doc = include_str!("../../../book/src/overview.md")]
pub mod overview {}

#[doc = include_str!("../../../book/src/problem.md")]
pub mod problem {}

#[doc = include_str!("../../../book/src/series-parallel.md")]
pub mod series_parallel {}

#[doc = include_str!("../../../book/src/decomposition.md")]
pub mod decomposition {}

#[doc = include_str!("../../../book/src/solving.md")]
pub mod solving {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
