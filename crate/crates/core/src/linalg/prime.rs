//! Prime fields `F_p` with a session-wide modulus.
//!
//! The characteristic is fixed once per process with [`Fp::set_modulus`];
//! every value created afterwards lives in that field.

use std::fmt;
use std::sync::OnceLock;

use super::field::Field;

static MODULUS: OnceLock<u64> = OnceLock::new();

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp(u64);

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ModulusError {
    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),
    #[error("field characteristic already fixed to {current}, cannot switch to {requested}")]
    AlreadySet { current: u64, requested: u64 },
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Fp {
    /// Fixes the characteristic for this process. Setting the same prime
    /// twice is allowed.
    pub fn set_modulus(p: u64) -> Result<(), ModulusError> {
        if p >= 1 << 32 || !is_prime(p) {
            return Err(ModulusError::NotPrime(p));
        }
        let current = *MODULUS.get_or_init(|| p);
        if current != p {
            return Err(ModulusError::AlreadySet { current, requested: p });
        }
        Ok(())
    }

    pub fn modulus() -> u64 {
        *MODULUS
            .get()
            .expect("Fp::set_modulus must be called before using F_p arithmetic")
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let p = Self::modulus();
        let mut base = self.0;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        Fp(acc)
    }
}

impl Field for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % Self::modulus())
    }
    fn from_i64(v: i64) -> Self {
        let p = Self::modulus() as i64;
        Fp(v.rem_euclid(p) as u64)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, rhs: &Self) -> Self {
        Fp((self.0 + rhs.0) % Self::modulus())
    }
    fn sub(&self, rhs: &Self) -> Self {
        let p = Self::modulus();
        Fp((self.0 + p - rhs.0) % p)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Fp(self.0 * rhs.0 % Self::modulus())
    }
    fn neg(&self) -> Self {
        let p = Self::modulus();
        Fp((p - self.0) % p)
    }
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero");
        self.pow(Self::modulus() - 2)
    }
    fn characteristic() -> u64 {
        Self::modulus()
    }
    fn field_name() -> String {
        format!("F_{}", Self::modulus())
    }
    fn parse(s: &str) -> Option<Self> {
        let v: i64 = s.trim().parse().ok()?;
        Some(Self::from_i64(v))
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_mod_101() {
        Fp::set_modulus(101).unwrap();
        let a = Fp::from_i64(-1);
        assert_eq!(a.value(), 100);
        assert_eq!(a.mul(&a), Fp::one());
        let x = Fp::from_i64(37);
        assert_eq!(x.mul(&x.inv()), Fp::one());
        assert_eq!(Fp::set_modulus(103), Err(ModulusError::AlreadySet { current: 101, requested: 103 }));
        assert_eq!(Fp::set_modulus(100), Err(ModulusError::NotPrime(100)));
    }
}
