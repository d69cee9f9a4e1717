//! Scalar abstraction for the linear algebra layer.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, Zero};

/// Field scalar the matrix and polynomial routines are generic over.
///
/// The engine's contracts (exact ranks, root counts, inertia) hold for exact
/// scalars such as [`BigRational`]; the float impls give the same routines in
/// approximate arithmetic for callers that want them.
pub trait Scalar: Num + Signed + PartialOrd + FromPrimitive + Clone + Debug + Display {
    /// Rescale a row by a positive factor of the implementation's choice to
    /// keep entries small during elimination. Called only where row scaling
    /// cannot change the result (rank, kernel, echelon forms).
    fn reduce_row(_row: &mut [Self]) {}
}

impl Scalar for f64 {}
impl Scalar for f32 {}

impl Scalar for BigRational {
    /// Scale the row so its entries become coprime integers.
    fn reduce_row(row: &mut [Self]) {
        let mut den_lcm = BigInt::from(1);
        for v in row.iter() {
            if !v.is_zero() {
                den_lcm = den_lcm.lcm(v.denom());
            }
        }
        let mut num_gcd = BigInt::from(0);
        for v in row.iter() {
            if !v.is_zero() {
                num_gcd = num_gcd.gcd(&(v.numer() * (&den_lcm / v.denom())));
            }
        }
        if num_gcd.is_zero() || (num_gcd == den_lcm) {
            return;
        }
        for v in row.iter_mut() {
            if !v.is_zero() {
                let scaled = v.numer() * (&den_lcm / v.denom()) / &num_gcd;
                *v = BigRational::from_integer(scaled);
            }
        }
    }
}
