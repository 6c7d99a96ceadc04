//! Deciding whether a planar graph with terminals on the outer face has
//! k+1 pairwise far-apart S-T paths, with machine-checkable certificates
//! for both answers.
//!
//! The library is organized around a rotation-system embedding
//! ([`graph`]), the drawing-in-a-disc view with its boundary slots and
//! regions ([`disc`]), boom obstructions ([`boom`]), the constructive
//! far-apart disc linkage solver ([`linkage`]), the contraction pipeline
//! producing verdicts ([`menger`]), a brute-force oracle and certificate
//! checkers ([`oracle`]), and file formats, generators and exporters
//! ([`io`], [`gen`], [`export`]).

pub mod boom;
pub mod disc;
pub mod error;
pub mod export;
pub mod gen;
pub mod graph;
pub mod instance;
pub mod io;
pub mod linkage;
pub mod menger;
pub mod oracle;

pub use error::{Error, Result};
