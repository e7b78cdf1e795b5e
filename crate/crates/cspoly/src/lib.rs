//! Exact-arithmetic toolkit for centrally symmetric polytopes.
//!
//! Everything here runs over arbitrary-precision rationals: polytopes are
//! given by exact vertex lists, facets are enumerated by an incremental
//! double description pass, face lattices are built by intersection closure,
//! and flag vectors, stress spaces and Hanner catalogs are derived from
//! those. There is no floating point anywhere on a computation path, so
//! every reported number is exact.
//!
//! The crate is organized around a handful of submodules:
//!
//! * [`exact`] — rational scalars, vectors and matrices with exact rank and
//!   nullspace computations;
//! * [`polytope`] — vertex polytopes, facet enumeration, face lattices,
//!   combinatorial duals and lattice isomorphism;
//! * [`constructors`] — cubes, crosspolytopes, products, sums, (twisted)
//!   prisms, hypersimplices, slab truncations and Hansen polytopes;
//! * [`flags`] — flag vectors, f-polynomials, `s(P)`, the toric `g_2`
//!   functional and the four-dimensional identity/inequality battery;
//! * [`hanner`] — canonical Hanner expression trees, the per-dimension
//!   catalog, f-vector algebra and conjecture checks;
//! * [`rigidity`] — triangulated 2-skeleton frameworks, rigidity matrices
//!   and (symmetric) stress space dimensions;
//! * [`expr`], [`io`], [`verify`] — the CLI expression language, file
//!   formats, and the table-verification harness behind `verify-paper`.

pub mod constructors;
pub mod exact;
pub mod expr;
pub mod flags;
pub mod hanner;
pub mod io;
pub mod polytope;
pub mod rigidity;
pub mod verify;

use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("too many vertices: {0} exceeds the supported maximum of 128")]
    TooManyVertices(usize),

    #[error("polytope is not centrally symmetric")]
    NotCentrallySymmetric,

    #[error("exact-arithmetic identity violated (lattice bug?): {0}")]
    IdentityViolation(String),

    #[error("isomorphism search inconclusive: node budget of {0} exhausted")]
    IsoInconclusive(u64),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("{file}:{line}: {msg}")]
    FileFormat {
        file: String,
        line: usize,
        msg: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
