//! Scalar domains for exact linear algebra.
//!
//! A [`Field`] is a value describing the domain (the rationals, or `F_p` for a
//! particular prime), and it performs the arithmetic on its element type. This
//! keeps runtime-chosen primes possible while letting the elimination code in
//! [`crate::linalg`] stay generic.

use std::fmt::Debug;
use std::marker::PhantomData;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub trait Field: Clone + PartialEq + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
}

/// The field of fractions `Ratio<T>` over an integer type `T`.
#[derive(Debug)]
pub struct Rationals<T>(PhantomData<T>);

impl<T> Rationals<T> {
    pub const fn new() -> Self {
        Rationals(PhantomData)
    }
}

impl<T> Default for Rationals<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T> Clone for Rationals<T> {
    fn clone(&self) -> Self {
        *self
    }
}

impl<T> Copy for Rationals<T> {}

impl<T> PartialEq for Rationals<T> {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}

impl<T> Field for Rationals<T>
where
    T: Integer + Clone + Signed + From<i64> + Debug + Send + Sync,
{
    type Elem = Ratio<T>;

    fn zero(&self) -> Ratio<T> {
        Ratio::zero()
    }
    fn one(&self) -> Ratio<T> {
        Ratio::one()
    }
    fn from_i64(&self, v: i64) -> Ratio<T> {
        Ratio::from_integer(T::from(v))
    }
    fn is_zero(&self, a: &Ratio<T>) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Ratio<T>, b: &Ratio<T>) -> Ratio<T> {
        a + b
    }
    fn sub(&self, a: &Ratio<T>, b: &Ratio<T>) -> Ratio<T> {
        a - b
    }
    fn mul(&self, a: &Ratio<T>, b: &Ratio<T>) -> Ratio<T> {
        a * b
    }
    fn neg(&self, a: &Ratio<T>) -> Ratio<T> {
        -a.clone()
    }
    fn inv(&self, a: &Ratio<T>) -> Option<Ratio<T>> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
}

/// The prime field `F_p`, elements stored as reduced representatives in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Panics unless `p` is prime and below 2^31 (products must fit in u64).
    pub fn new(p: u64) -> Self {
        assert!(is_prime(p), "{p} is not prime");
        assert!(p < (1 << 31), "prime {p} too large");
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    /// Reduce a rational number; `None` when `p` divides the denominator.
    pub fn reduce_ratio<T>(&self, r: &Ratio<T>) -> Option<u64>
    where
        T: Integer + Clone + Signed + ToPrimitive + From<i64>,
    {
        let p = T::from(self.p as i64);
        let num = r.numer().mod_floor(&p).to_u64()?;
        let den = r.denom().mod_floor(&p).to_u64()?;
        let den_inv = self.inv(&den)?;
        Some(self.mul(&num, &den_inv))
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, v: i64) -> u64 {
        self.reduce_i64(v)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        (a * b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        let mut base = *a;
        let mut exp = self.p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        Some(acc)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The first `count` primes in increasing order.
pub fn first_primes(count: usize) -> Vec<u64> {
    (2u64..).filter(|&n| is_prime(n)).take(count).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn prime_field_inverses() {
        let f = PrimeField::new(7);
        for a in 1..7 {
            let inv = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &inv), 1);
        }
        assert_eq!(f.inv(&0), None);
        assert_eq!(f.from_i64(-1), 6);
    }

    #[test]
    fn reduce_ratio_respects_denominator() {
        let f = PrimeField::new(5);
        let half = Ratio::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(f.reduce_ratio(&half), Some(3));
        let fifth = Ratio::new(BigInt::from(1), BigInt::from(5));
        assert_eq!(f.reduce_ratio(&fifth), None);
        let neg = Ratio::from_integer(BigInt::from(-3));
        assert_eq!(f.reduce_ratio(&neg), Some(2));
    }

    #[test]
    fn prime_pool() {
        assert_eq!(
            first_primes(12),
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]
        );
    }
}
