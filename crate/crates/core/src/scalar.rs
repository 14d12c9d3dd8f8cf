//! The base-field interface shared by finite and local fields.
//!
//! Elements carry a handle to their field, so constants are produced from an
//! existing element (`zero_like`, `one_like`, ...).

use std::cmp::Ordering;
use std::fmt;

use crate::error::Result;

pub trait Scalar: Clone + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_i64_like(&self, n: i64) -> Self;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;

    fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// Zero, or zero to the available precision for truncated elements.
    fn is_zero(&self) -> bool;

    fn same(&self, rhs: &Self) -> bool {
        self.sub(rhs).is_zero()
    }

    /// The canonical total order used to pick representatives.
    fn canonical_cmp(&self, rhs: &Self) -> Ordering;

    /// Pivot preference for elimination: `None` for zero, smaller is better.
    fn pivot_weight(&self) -> Option<i64>;

    fn characteristic(&self) -> u64;

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

/// Lexicographic comparison of scalar sequences under the canonical order.
pub fn cmp_slices<S: Scalar>(a: &[S], b: &[S]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.canonical_cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}
