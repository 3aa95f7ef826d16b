use thiserror::Error;

use crate::graph::EdgeColor;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} has more than one {direction} edge of color {color}")]
    DegreeViolation {
        vertex: String,
        color: EdgeColor,
        direction: &'static str,
    },
    #[error("graph contains a directed cycle through {0}")]
    Cyclic(String),
    #[error("graph has no source vertex")]
    NoSource,
    #[error("graph has several sources: {0:?}")]
    MultipleSources(Vec<String>),
    #[error("graph is not weakly connected ({reached} of {total} vertices reachable)")]
    NotConnected { reached: usize, total: usize },
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("cannot access {path}: {message}")]
    Io { path: String, message: String },
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("central graph extraction failed: {0}")]
    Diagonal(String),
    #[error("interval model: {0}")]
    IntervalModel(String),
    #[error("construction invariant violated: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
