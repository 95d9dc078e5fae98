//! The user guide, one module per chapter.
//!
//! Each module's documentation is included verbatim from a chapter source
//! under `book/src/`, so every Rust snippet in the rendered book also
//! compiles and runs as a doc-test of this crate; the book cannot drift
//! from the library. Render the standalone version with `mdbook build book`
//! from the repository root.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/estimators.md")]
pub mod estimators {}

#[doc = include_str!("../../../book/src/cross-fitting.md")]
pub mod cross_fitting {}

#[doc = include_str!("../../../book/src/nuisance-models.md")]
pub mod nuisance_models {}

#[doc = include_str!("../../../book/src/simulation-studies.md")]
pub mod simulation_studies {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
