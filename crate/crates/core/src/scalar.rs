//! Exact integer scalars.
//!
//! Determinants, sequence values and closed forms only need a commutative
//! ring with exact division, so every kernel is written against [`Exact`].
//! Fixed-width types are usable while values stay small; [`crate::Int`] never
//! overflows.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed};

pub trait Exact: Integer + Signed + FromPrimitive + Clone + Debug + Display {
    fn from_usize_exact(v: usize) -> Self {
        Self::from_usize(v).expect("value fits the scalar type")
    }
}

impl<T> Exact for T where T: Integer + Signed + FromPrimitive + Clone + Debug + Display {}
