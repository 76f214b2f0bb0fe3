//! A toolkit for plane graphs built around *orderly spanning trees*.
//!
//! An orderly spanning tree of a plane graph `H` is a rooted spanning tree
//! whose counterclockwise preordering splits every node's neighbor cycle
//! into four contiguous blocks: the parent, lower-numbered unrelated nodes,
//! the children, and higher-numbered unrelated nodes. Not every embedding
//! admits one, but every connected planar graph has an *orderly pair*
//! `(H, T)`: a re-embedding `H` together with an orderly spanning tree `T`
//! of `H`, computable in linear time.
//!
//! On top of the orderly-pair algorithm the crate provides:
//!
//! * Schnyder realizers of plane triangulations ([`realizer`]),
//! * area-optimal 2-visibility drawings ([`drawing`]),
//! * succinct encodings with constant-time degree/adjacency queries and
//!   linear-time decoding ([`succinct`]).

pub mod bicon;
pub mod drawing;
pub mod gen;
pub mod graph;
pub mod order;
pub mod ost;
pub mod realizer;
pub mod succinct;
pub mod triangulate;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("inconsistent rotation: node {u} lists {v} {cu} times but {v} lists {u} {cv} times")]
    InconsistentRotation { u: usize, v: usize, cu: usize, cv: usize },
    #[error("self-loop at node {0}")]
    SelfLoop(usize),
    #[error("Euler check failed: n={n} m={m} faces={f}")]
    EulerCheck { n: usize, m: usize, f: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not 2-connected")]
    NotBiconnected,
    #[error("node {0} is not on the external face")]
    NotExternal(usize),
    #[error("expected a simple graph (parallel edges present)")]
    NotSimple,
    #[error("graph is not a triangulation: {0}")]
    NotTriangulation(String),
    #[error("face has no admissible chord; input cannot be triangulated simply")]
    Untriangulatable,
    #[error("spanning tree expected: {0}")]
    NotSpanning(String),
    #[error("tree is not orderly: {0}")]
    NotOrderly(String),
    #[error("input too large for brute-force enumeration (n={0} > {1})")]
    TooLarge(usize, usize),
    #[error("need at least {0} nodes")]
    TooSmall(usize),
    #[error("corrupt stream: {0}")]
    Corrupt(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
