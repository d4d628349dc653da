//! Diagrammatic knot invariants over PD codes: exact Laurent arithmetic,
//! Kauffman state graphs and adequacy, cable diagrams, colored Jones degree
//! laws, and certified crossing-number reports.
//!
//! The crate is `no_std` (with `alloc`); IO, JSON and the parallel bracket
//! driver live in the companion `knotted-cli` crate.

#![no_std]

extern crate alloc;

pub mod cabling;
pub mod degrees;
pub mod diagram;
pub mod error;
pub mod jones;
pub mod laurent;
pub mod states;
pub mod verdict;

pub use diagram::{Crossing, Diagram, DiagramStats};
pub use error::Error;
pub use laurent::LaurentPoly;
pub use states::{KauffmanState, Resolution, StateGraph};
pub use verdict::{AdequacyVerdict, Citation, CrossingReport};
