//! Scalar fields: prime fields `F_p` and the rationals.
//!
//! Algorithms are generic over [`Field`]; a field value is a small runtime
//! object (the modulus for `F_p`) that performs the arithmetic on plain
//! element values.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default working prime `2^31 - 1`.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;
/// Default confirmation prime.
pub const DEFAULT_SECOND_PRIME: u64 = 1_000_000_007;

/// Serializable description of a field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldSpec {
    Prime(u64),
    Rational,
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Prime(DEFAULT_PRIME)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "F_{p}"),
            FieldSpec::Rational => write!(f, "Q"),
        }
    }
}

impl FieldSpec {
    pub fn validate(self) -> Result<Self> {
        if let FieldSpec::Prime(p) = self {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
        }
        Ok(self)
    }
}

/// Exact scalar arithmetic. Elements are plain values; the field object
/// carries whatever context (the modulus) the operations need.
#[allow(clippy::wrong_self_convention)]
pub trait Field: Clone + PartialEq + Eq + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + fmt::Debug + Send + Sync;

    fn spec(&self) -> FieldSpec;
    /// Zero for the rationals.
    fn characteristic(&self) -> u64;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn from_i64(&self, v: i64) -> Self::Elem;
    fn from_rational(&self, q: &BigRational) -> Result<Self::Elem>;
    /// Uniform over nonzero elements for `F_p`; small nonzero integers for `Q`.
    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    /// Integer or fraction text, using the symmetric representative in `F_p`.
    fn format(&self, a: &Self::Elem) -> String;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn from_u64(&self, v: u64) -> Self::Elem {
        self.from_rational(&BigRational::from_integer(BigInt::from(v)))
            .expect("integer always maps into a field")
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Fails when `p <= degree`, where factorials up to `degree` stop being invertible.
    fn check_characteristic(&self, degree: usize) -> Result<()> {
        let p = self.characteristic();
        if p != 0 && p <= degree as u64 {
            return Err(Error::Characteristic { p, degree });
        }
        Ok(())
    }
}

/// The prime field `Z/pZ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(PrimeField { p })
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    fn reduce_i128(&self, v: i128) -> u64 {
        v.rem_euclid(self.p as i128) as u64
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = *a as u128 + *b as u128;
        let p = self.p as u128;
        (if s >= p { s - p } else { s }) as u64
    }

    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            (*a as u128 + self.p as u128 - *b as u128) as u64
        }
    }

    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        if self.p <= u32::MAX as u64 {
            (a * b) % self.p
        } else {
            ((*a as u128 * *b as u128) % self.p as u128) as u64
        }
    }

    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        Some(self.pow(a, self.p - 2))
    }

    fn from_i64(&self, v: i64) -> u64 {
        self.reduce_i128(v as i128)
    }

    fn from_rational(&self, q: &BigRational) -> Result<u64> {
        let p = BigInt::from(self.p);
        let num = q.numer().mod_floor(&p).to_u64().expect("residue fits");
        let den = q.denom().mod_floor(&p).to_u64().expect("residue fits");
        let den_inv = self.inv(&den).ok_or(Error::DenominatorVanishes(self.p))?;
        Ok(self.mul(&num, &den_inv))
    }

    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(1..self.p)
    }

    fn format(&self, a: &u64) -> String {
        if *a > self.p / 2 {
            format!("-{}", self.p - a)
        } else {
            a.to_string()
        }
    }
}

/// The rationals, with arbitrary-precision normalized fractions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

/// Magnitude bound for random nonzero rationals.
const RANDOM_RATIONAL_BOUND: i64 = 1 << 12;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rational
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
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

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_rational(&self, q: &BigRational) -> Result<BigRational> {
        Ok(q.clone())
    }

    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        let mag = rng.gen_range(1..=RANDOM_RATIONAL_BOUND);
        let v = if rng.gen::<bool>() { mag } else { -mag };
        self.from_i64(v)
    }

    fn format(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else if a.is_negative() {
            format!("-{}/{}", a.numer().abs(), a.denom())
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &q in &SMALL {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division(n: u64) -> bool {
        n >= 2
            && (2..)
                .take_while(|d| d * d <= n)
                .all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn miller_rabin_matches_trial_division() {
        for n in 0..5000u64 {
            assert_eq!(is_prime(n), trial_division(n), "n = {n}");
        }
        assert!(is_prime(DEFAULT_PRIME));
        assert!(is_prime(DEFAULT_SECOND_PRIME));
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2,3,5,7
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.add(&5, &4), 2);
        assert_eq!(f.sub(&2, &5), 4);
        assert_eq!(f.mul(&3, &5), 1);
        assert_eq!(f.inv(&3), Some(5));
        assert_eq!(f.inv(&0), None);
        assert_eq!(f.from_i64(-1), 6);
        assert_eq!(f.format(&6), "-1");
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(f.from_rational(&half).unwrap(), 4);
        let bad = BigRational::new(1.into(), 14.into());
        assert_eq!(f.from_rational(&bad), Err(Error::DenominatorVanishes(7)));
        assert!(PrimeField::new(21).is_err());
    }

    #[test]
    fn large_modulus_uses_wide_products() {
        let p = 18_446_744_073_709_551_557;
        let f = PrimeField::new(p).unwrap();
        let a = p - 1;
        assert_eq!(f.mul(&a, &a), 1);
        assert_eq!(f.add(&a, &a), p - 2);
        assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
    }

    #[test]
    fn rational_format() {
        let q = Rationals;
        assert_eq!(q.format(&BigRational::new((-3).into(), 6.into())), "-1/2");
        assert_eq!(q.format(&q.from_i64(12)), "12");
    }
}
