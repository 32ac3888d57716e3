//! Exact coefficient fields: the rationals and prime fields 𝔽_p.
//!
//! Field objects are passed by reference so a prime field can carry its
//! modulus; elements are plain values (BigRational, u64 residue).

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

pub trait Field: Clone + Debug + PartialEq + Eq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn from_int(&self, n: i64) -> Self::Elem;
    /// Exact image of num/den; fails when den vanishes (in 𝔽_p: den ≡ 0 mod p).
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem>;

    /// 0 for the rationals, p for 𝔽_p.
    fn characteristic(&self) -> u64;

    /// Split into (is_negative, absolute value) for rendering; prime-field
    /// residues are never negative.
    fn sign_split(&self, a: &Self::Elem) -> (bool, Self::Elem);
    fn render(&self, a: &Self::Elem) -> String;
    fn name(&self) -> String;

    /// Generic coefficient draw for seeded reduction candidates.
    fn sample_nonzero(&self, rng: &mut ChaCha8Rng) -> Self::Elem;
}

/// The field ℚ with arbitrary-precision values kept in lowest terms with a
/// positive denominator (BigRational normalizes on construction).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
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
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Result<BigRational> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(a.recip())
    }
    fn from_int(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<BigRational> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn sign_split(&self, a: &BigRational) -> (bool, BigRational) {
        (a.is_negative(), a.abs())
    }
    fn render(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn name(&self) -> String {
        "QQ".into()
    }
    fn sample_nonzero(&self, rng: &mut ChaCha8Rng) -> BigRational {
        // Small nonzero integers keep Gröbner coefficient growth manageable.
        let mut n: i64 = 0;
        while n == 0 {
            n = rng.gen_range(-5..=5);
        }
        self.from_int(n)
    }
}

/// 𝔽_p for a word-sized prime p; elements are least nonnegative residues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::Config(format!("{p} is not prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_bigint(&self, n: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let mut r = n % &p;
        if r.sign() == num_bigint::Sign::Minus {
            r += &p;
        }
        let (_, digits) = r.to_u64_digits();
        digits.first().copied().unwrap_or(0)
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn is_one(&self, a: &u64) -> bool {
        *a == 1 % self.p
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = (*a as u128 + *b as u128) % self.p as u128;
        s as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        let s = (*a as u128 + (self.p - *b) as u128) % self.p as u128;
        s as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - *a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn inv(&self, a: &u64) -> Result<u64> {
        if *a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(pow_mod(*a, self.p - 2, self.p))
    }
    fn from_int(&self, n: i64) -> u64 {
        let p = self.p as i128;
        let mut r = (n as i128) % p;
        if r < 0 {
            r += p;
        }
        r as u64
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<u64> {
        let d = self.reduce_bigint(den);
        if d == 0 {
            return Err(Error::DivisionByZero);
        }
        let n = self.reduce_bigint(num);
        Ok(self.mul(&n, &self.inv(&d)?))
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn sign_split(&self, a: &u64) -> (bool, u64) {
        (false, *a)
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
    fn name(&self) -> String {
        format!("F{}", self.p)
    }
    fn sample_nonzero(&self, rng: &mut ChaCha8Rng) -> u64 {
        rng.gen_range(1..self.p)
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut b: u128 = base as u128 % p as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p as u128;
        }
        b = b * b % p as u128;
        exp >>= 1;
    }
    base = acc as u64;
    base
}

/// Deterministic Miller–Rabin for u64 inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
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
    use rand::SeedableRng;

    #[test]
    fn rational_normalization() {
        let f = Rationals;
        let half = f.from_ratio(&BigInt::from(2), &BigInt::from(4)).unwrap();
        let quarter = f.from_ratio(&BigInt::from(1), &BigInt::from(4)).unwrap();
        let sum = f.add(&half, &quarter);
        assert_eq!(f.render(&sum), "3/4");
    }

    #[test]
    fn rational_inverse() {
        let f = Rationals;
        let x = f.from_ratio(&BigInt::from(-3), &BigInt::from(7)).unwrap();
        assert_eq!(f.render(&f.inv(&x).unwrap()), "-7/3");
        assert_eq!(f.inv(&f.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.inv(&2).unwrap(), 3);
        assert_eq!(f.inv(&0), Err(Error::DivisionByZero));
    }

    #[test]
    fn prime_field_rejects_composites() {
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(91).is_err());
        assert!(PrimeField::new(101).is_ok());
        assert!(is_prime_u64(2_147_483_647));
        assert!(!is_prime_u64(2_147_483_649));
    }

    #[test]
    fn negative_ratio_reduces_mod_p() {
        let f = PrimeField::new(101).unwrap();
        let e = f.from_ratio(&BigInt::from(-1), &BigInt::from(2)).unwrap();
        // -1/2 = 100 * inv(2) = 100 * 51 mod 101 = 50
        assert_eq!(e, 50);
        assert_eq!(f.mul(&e, &2), 100);
    }

    #[test]
    fn sampling_is_seed_deterministic() {
        let f = Rationals;
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..32 {
            assert_eq!(f.sample_nonzero(&mut a), f.sample_nonzero(&mut b));
        }
    }
}
