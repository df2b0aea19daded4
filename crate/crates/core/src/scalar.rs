//! Numeric fields the evaluation routines run over: exact rationals and `f64`.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive, Zero};

pub trait Scalar: Clone + Debug + PartialOrd + Num + Signed + Send + Sync {
    fn from_bigint(v: &BigInt) -> Self;

    fn from_ratio(v: &BigRational) -> Self;

    fn from_i64(v: i64) -> Self;

    /// True when `pivot` should be treated as zero relative to `scale`.
    fn is_negligible(pivot: &Self, scale: &Self) -> bool;
}

impl Scalar for BigRational {
    fn from_bigint(v: &BigInt) -> Self {
        BigRational::from_integer(v.clone())
    }

    fn from_ratio(v: &BigRational) -> Self {
        v.clone()
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn is_negligible(pivot: &Self, _scale: &Self) -> bool {
        pivot.is_zero()
    }
}

/// Relative pivot tolerance for floating-point elimination.
pub const FLOAT_PIVOT_TOLERANCE: f64 = 1e-12;

impl Scalar for f64 {
    fn from_bigint(v: &BigInt) -> Self {
        v.to_f64().unwrap_or(f64::NAN)
    }

    fn from_ratio(v: &BigRational) -> Self {
        v.to_f64().unwrap_or(f64::NAN)
    }

    fn from_i64(v: i64) -> Self {
        <f64 as FromPrimitive>::from_i64(v).unwrap_or(f64::NAN)
    }

    fn is_negligible(pivot: &Self, scale: &Self) -> bool {
        let scale = if *scale > 0.0 { *scale } else { 1.0 };
        pivot.abs() <= FLOAT_PIVOT_TOLERANCE * scale
    }
}
