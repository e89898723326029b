//! Integer scalars usable as Gaussian-integer components.

use std::fmt::Debug;

use num_integer::Integer;
use num_traits::{PrimInt, Signed};

/// Exact signed machine integer: `i32`, `i64` or `i128`.
///
/// Floating point types are deliberately not admitted; every quantity in this
/// crate is an exact integer or ratio of integers.
pub trait ExactScalar: PrimInt + Signed + Integer + Debug + Send + Sync + 'static {}

impl ExactScalar for i32 {}
impl ExactScalar for i64 {}
impl ExactScalar for i128 {}
