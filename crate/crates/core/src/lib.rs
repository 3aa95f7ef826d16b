//! Regular B2-crystals: the sail construction `S(a,b)`, the worm model
//! `W(a,b)`, the local axioms characterizing them, and the string
//! parametrization of the crystal `B(∞)`.

pub mod a2;
pub mod axioms;
pub mod cli;
pub mod error;
pub mod graph;
pub mod littelmann;
pub mod report;
pub mod sails;
pub mod worm;
pub mod worm_graph;

pub use error::{Error, Result};
pub use graph::{ColoredDigraph, EdgeColor};
pub use worm::WormState;
