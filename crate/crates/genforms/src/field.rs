//! Prime-field arithmetic for the rank engine.
//!
//! Elements are machine integers `< p` with `2 <= p < 2^31`, so products fit
//! in `u64`. Reduction goes through a precomputed Barrett constant instead of
//! hardware division in the elimination hot path.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A checked prime modulus, 2 <= p < 2^31.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct FieldSpec {
    p: u64,
}

impl FieldSpec {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..(1 << 31)).contains(&p) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn field(&self) -> PrimeField {
        PrimeField::new(self.p)
    }
}

impl TryFrom<u64> for FieldSpec {
    type Error = Error;
    fn try_from(p: u64) -> Result<Self> {
        Self::new(p)
    }
}

impl From<FieldSpec> for u64 {
    fn from(f: FieldSpec) -> u64 {
        f.p
    }
}

/// Deterministic primality by trial division; fine for p < 2^31.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Smallest prime strictly greater than `n` (n + 1 candidates upward).
pub fn next_prime(n: u64) -> u64 {
    let mut c = n + 1;
    loop {
        if is_prime(c) {
            return c;
        }
        c += 1;
    }
}

/// F_p arithmetic with Barrett reduction for x < 2^62.
#[derive(Clone, Copy, Debug)]
pub struct PrimeField {
    p: u64,
    // floor(2^62 / p); valid since p >= 2.
    barrett: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        debug_assert!((2..(1 << 31)).contains(&p));
        Self { p, barrett: ((1u128 << 62) / p as u128) as u64 }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Reduce x < 2^62 modulo p without hardware division.
    #[inline]
    pub fn reduce(&self, x: u64) -> u64 {
        debug_assert!(x < (1 << 62));
        let q = ((x as u128 * self.barrett as u128) >> 62) as u64;
        let mut r = x.wrapping_sub(q.wrapping_mul(self.p));
        // Barrett quotient may undershoot by at most 2.
        while r >= self.p {
            r -= self.p;
        }
        r
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p { s - self.p } else { s }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b { a - b } else { a + self.p - b }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 { 0 } else { self.p - a }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.reduce(a * b)
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via Fermat; a must be nonzero mod p.
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }

    /// Signed integer into the field.
    pub fn from_i64(&self, v: i64) -> u64 {
        let m = v.rem_euclid(self.p as i64);
        m as u64
    }
}
