//! Scalar traits for the numeric parts of the library.
//!
//! Graph data is always integral. Thresholds and bound evaluations are
//! generic: [`Scalar`] covers exact rationals and floats alike, [`Real`]
//! adds the square roots the case analysis needs.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, Num, NumCast};

/// Ordered field element usable as a threshold.
pub trait Scalar: Copy + PartialOrd + Num + FromPrimitive + Debug + Display + Send + Sync {
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count fits the scalar type")
    }
}

impl<T> Scalar for T where T: Copy + PartialOrd + Num + FromPrimitive + Debug + Display + Send + Sync {}

/// Floating-point scalar.
pub trait Real: Scalar + Float {
    fn lit(x: f64) -> Self {
        <Self as NumCast>::from(x).expect("literal fits the float type")
    }
}

impl<T> Real for T where T: Scalar + Float {}
