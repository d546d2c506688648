use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Signed integer scalar the whole crate is generic over.
///
/// Implemented by `num_bigint::BigInt` (the canonical instantiation, see
/// [`crate::Int`]) and by the fixed-width signed primitives.
pub trait Scalar:
    Integer + Signed + FromPrimitive + ToPrimitive + Clone + Hash + Debug + Display
{
}

impl<T> Scalar for T where
    T: Integer + Signed + FromPrimitive + ToPrimitive + Clone + Hash + Debug + Display
{
}

/// Converts a count into the scalar type. Counts always fit.
pub(crate) fn from_usize<I: Scalar>(n: usize) -> I {
    I::from_usize(n).expect("count representable in scalar type")
}
