//! Exact field arithmetic: GF(2), GF(p) for odd primes, and arbitrary
//! precision rationals. Every scalar is stored in canonical form, so equality
//! of values (and hence of echelonized matrices) is structural equality.

use std::fmt::Debug;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::bitmatrix::BitMatrix;
use crate::matrix::{DenseMatrix, MatrixStore};

/// An exact field, used as a context object so that fields with runtime
/// parameters (the modulus of GF(p)) fit the same interface. The associated
/// `Matrix` type lets GF(2) use a packed-bit representation while the other
/// fields share a dense element matrix; all observable behavior is identical.
pub trait Field: Clone + PartialEq + Eq + Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Debug + Send + Sync + 'static;
    type Matrix: MatrixStore<Self>;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    /// Multiplicative inverse. Panics on zero; callers test `is_zero` first.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    fn embed_int(&self, n: i64) -> Self::Elem;
    fn render(&self, a: &Self::Elem) -> String;

    /// Descriptor matching the CLI `--field` syntax: `gf2`, `gf:p`, `rational`.
    fn name(&self) -> String;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
}

/// The two-element field.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Gf2;

impl Field for Gf2 {
    type Elem = bool;
    type Matrix = BitMatrix;

    fn zero(&self) -> bool {
        false
    }
    fn one(&self) -> bool {
        true
    }
    fn is_zero(&self, a: &bool) -> bool {
        !*a
    }
    fn add(&self, a: &bool, b: &bool) -> bool {
        a ^ b
    }
    fn sub(&self, a: &bool, b: &bool) -> bool {
        a ^ b
    }
    fn mul(&self, a: &bool, b: &bool) -> bool {
        a & b
    }
    fn neg(&self, a: &bool) -> bool {
        *a
    }
    fn inv(&self, a: &bool) -> bool {
        assert!(*a, "inverse of zero in GF(2)");
        true
    }
    fn embed_int(&self, n: i64) -> bool {
        n.rem_euclid(2) == 1
    }
    fn render(&self, a: &bool) -> String {
        if *a {
            "1".into()
        } else {
            "0".into()
        }
    }
    fn name(&self) -> String {
        "gf2".into()
    }
}

/// GF(p) for a prime modulus supplied at runtime. Elements are canonical
/// representatives in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GfPrime {
    p: u64,
}

impl GfPrime {
    /// Fails on non-primes (including 0 and 1). `GfPrime::new(2)` is valid but
    /// the dedicated [`Gf2`] field is preferred for it.
    pub fn new(p: u64) -> Option<Self> {
        if is_prime(p) {
            Some(GfPrime { p })
        } else {
            None
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for GfPrime {
    type Elem = u64;
    type Matrix = DenseMatrix<u64>;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
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
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero in GF({})", self.p);
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (*a as i128, self.p as i128);
        let (mut s0, mut s1) = (1i128, 0i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        s0.rem_euclid(self.p as i128) as u64
    }
    fn embed_int(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
    fn name(&self) -> String {
        format!("gf:{}", self.p)
    }
}

/// The rational numbers with arbitrary-precision integers. `BigRational` keeps
/// values in lowest terms with a positive denominator, which is exactly the
/// canonical form the subspace comparisons rely on.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;
    type Matrix = DenseMatrix<BigRational>;

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
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero rational");
        a.recip()
    }
    fn embed_int(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn render(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn name(&self) -> String {
        "rational".into()
    }

    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one() && a.denom().is_positive()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gfp_rejects_composites() {
        assert!(GfPrime::new(0).is_none());
        assert!(GfPrime::new(1).is_none());
        assert!(GfPrime::new(4).is_none());
        assert!(GfPrime::new(91).is_none()); // 7 * 13
        assert!(GfPrime::new(5).is_some());
        assert!(GfPrime::new(97).is_some());
    }

    #[test]
    fn gfp_inverse() {
        let f = GfPrime::new(97).unwrap();
        for a in 1..97 {
            let b = f.inv(&a);
            assert_eq!(f.mul(&a, &b), 1);
        }
    }

    #[test]
    fn rational_canonical() {
        let f = Rationals;
        let two_thirds = f.mul(&f.inv(&f.embed_int(3)), &f.embed_int(2));
        assert_eq!(f.render(&two_thirds), "2/3");
        let minus = f.neg(&two_thirds);
        assert_eq!(f.render(&minus), "-2/3");
        assert_eq!(f.add(&two_thirds, &minus), f.zero());
    }
}
