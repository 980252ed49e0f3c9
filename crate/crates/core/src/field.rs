//! Coefficient fields: prime residue fields GF(p) and exact rationals.

use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand_core::RngCore;

/// Invalid characteristic for a prime field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldError {
    /// The requested positive characteristic is composite or 1.
    NonPrime(u32),
    /// The requested characteristic does not fit the supported range [2, 2^31).
    OutOfRange(u32),
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NonPrime(p) => write!(f, "characteristic {p} is not prime"),
            FieldError::OutOfRange(p) => write!(f, "characteristic {p} outside [2, 2^31)"),
        }
    }
}

/// Arithmetic context for coefficients.
///
/// Elements do not know their field; every operation goes through the field
/// value, which lets GF(p) use plain machine words. Mixing elements from
/// different field values is a caller bug and is only caught by debug
/// assertions where representations allow it.
pub trait Field: Clone + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Multiplicative inverse. `a` must be nonzero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    /// `a / b`; `b` must be nonzero.
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    /// Canonical image of an integer. Takes `&self` because the receiver
    /// carries the modulus; this is a conversion into the field, not from it.
    #[allow(clippy::wrong_self_convention)]
    fn from_i128(&self, n: i128) -> Self::Elem;

    /// 0 for the rationals, p for GF(p).
    fn characteristic(&self) -> u32;

    /// Uniform-ish nonzero element for randomized verification. Only the
    /// distribution's support matters to callers, not its exact shape.
    fn sample_nonzero(&self, rng: &mut dyn RngCore) -> Self::Elem;
}

/// GF(p) for a prime p in [2, 2^31). Elements are residues in [0, p).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl PrimeField {
    pub fn new(p: u32) -> Result<PrimeField, FieldError> {
        if !(2..(1 << 31)).contains(&p) {
            return Err(FieldError::OutOfRange(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NonPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        1 % self.p
    }

    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }

    fn is_one(&self, a: &u32) -> bool {
        *a == 1
    }

    fn neg(&self, a: &u32) -> u32 {
        debug_assert!(*a < self.p);
        if *a == 0 {
            0
        } else {
            self.p - *a
        }
    }

    fn add(&self, a: &u32, b: &u32) -> u32 {
        debug_assert!(*a < self.p && *b < self.p);
        let s = *a as u64 + *b as u64;
        let p = self.p as u64;
        (if s >= p { s - p } else { s }) as u32
    }

    fn sub(&self, a: &u32, b: &u32) -> u32 {
        self.add(a, &self.neg(b))
    }

    fn mul(&self, a: &u32, b: &u32) -> u32 {
        debug_assert!(*a < self.p && *b < self.p);
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }

    fn inv(&self, a: &u32) -> u32 {
        assert!(*a != 0, "inverse of zero");
        // Extended Euclid on (p, a).
        let (mut t, mut new_t): (i64, i64) = (0, 1);
        let (mut r, mut new_r): (i64, i64) = (self.p as i64, *a as i64);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        debug_assert!(r == 1, "modulus must be prime");
        (t.rem_euclid(self.p as i64)) as u32
    }

    fn from_i128(&self, n: i128) -> u32 {
        let p = self.p as i128;
        (n.rem_euclid(p)) as u32
    }

    fn characteristic(&self) -> u32 {
        self.p
    }

    fn sample_nonzero(&self, rng: &mut dyn RngCore) -> u32 {
        1 + rng.next_u32() % (self.p - 1)
    }
}

/// The rational numbers with exact arithmetic. Values are kept in lowest
/// terms with positive denominator (the representation `BigRational`
/// maintains on construction).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }

    fn from_i128(&self, n: i128) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn characteristic(&self) -> u32 {
        0
    }

    fn sample_nonzero(&self, rng: &mut dyn RngCore) -> BigRational {
        let num = 1 + (rng.next_u32() % 9) as i64;
        let num = if rng.next_u32() & 1 == 0 { num } else { -num };
        let den = 1 + (rng.next_u32() % 4) as i64;
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
}
