//! Command line front end for `hecke-core`: argument parsing, JSON and
//! LaTeX renderings, and an on-disk KL table cache.
//!
//! - [`cli`]: verbs, validation and dispatch.
//! - [`json`]: serde layouts for polynomials, Hecke elements, symmetric
//!   functions and good-word dumps.
//! - [`render`]: plain text and LaTeX.
//! - [`cache`]: versioned KL table files.

pub mod cache;
pub mod cli;
pub mod error;
pub mod json;
pub mod render;

pub use error::{LabError, Result};
