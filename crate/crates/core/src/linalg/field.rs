use std::fmt;
use std::hash::Hash;

/// An exact field. Every computation in the crate is generic over this trait.
///
/// Arithmetic is by reference because the rational implementation may carry
/// heap-allocated big integers.
pub trait Field:
    Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    /// 0 for the rationals, `p` for a prime field.
    fn characteristic() -> u64;

    /// Short name used in reports, e.g. `Q` or `F_7`.
    fn field_name() -> String;

    /// Parses the textual form produced by `Display`.
    fn parse(s: &str) -> Option<Self>;

    fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv())
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// `self += a * b`
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self = self.add(&a.mul(b));
    }
}
