//! Exact counting, enumeration and cross-validation of spanning trees and
//! two-component spanning forests of wheel and fan graphs.
//!
//! Every quantity is computed along (at least) two independent routes:
//! closed-form Fibonacci/Lucas expressions ([`formulas`]), exact Laplacian
//! minors ([`kirchhoff`]) and brute-force enumeration ([`enumerate`]).
//! The wheel/fan correspondence lives in [`bijection`].
//!
//! The arithmetic core is generic over an exact integer scalar (see
//! [`scalar::Exact`]); the aliases below fix it to arbitrary precision.
//!
//! ```
//! use wheelfan_core::{formulas, graph, kirchhoff, Int};
//!
//! let w = graph::make_wheel(5)?;
//! let t: Int = kirchhoff::count_spanning_trees(&w);
//! assert_eq!(t, formulas::trees_wheel::<Int>(5)?);
//! assert_eq!(t, Int::from(121));
//! let r = kirchhoff::effective_resistance::<Int>(&w, 1, 3)?;
//! assert_eq!(r, formulas::resistance_rim::<Int>(5, 2)?);
//! # Ok::<(), wheelfan_core::Error>(())
//! ```

pub mod bijection;
pub mod enumerate;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod kirchhoff;
pub mod report;
pub mod scalar;
pub mod seq;

pub use error::{Error, Result};
pub use graph::{Edge, EdgeSet, LabeledGraph, VertexId};
pub use report::{Check, Status, VerificationReport};
pub use scalar::Exact;

/// Arbitrary-precision signed integer used throughout the toolkit.
pub type Int = num_bigint::BigInt;

/// Normalized exact rational (`den > 0`, lowest terms).
pub type ExactRational = num_rational::Ratio<Int>;

/// Laplacian / minor matrices over [`Int`].
pub type IntMatrix = kirchhoff::Matrix<Int>;

/// Renders a rational as `p/q`, always with an explicit positive denominator.
pub fn render_rational<T: Exact>(r: &num_rational::Ratio<T>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}
