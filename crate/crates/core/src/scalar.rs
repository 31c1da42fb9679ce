//! Exact scalar carriers: arbitrary-precision rationals and integers,
//! word-sized prime fields, and complex doubles for the numerical lab.
//!
//! All identity checks in this crate are exact unless a function name says
//! otherwise. Rational mode is the default; prime fields are reserved for
//! rank computations where rational coefficient growth would dominate.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::complex::Complex64;
use num::{One, Signed, Zero};
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

/// Commutative ring scalar. Values are immutable and safe to share.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
}

/// Ring with division. `half` exists because the Jordan product and the
/// pencil coefficients divide by 2; constructing a field of characteristic
/// 2 or 3 is rejected at the type/constructor level.
pub trait Field: Ring {
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn half(&self) -> Self;
    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.clone() * r)
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn half(&self) -> Self {
        self / BigRational::from_integer(BigInt::from(2))
    }
}

impl Ring for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_i64(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
}

impl Field for Complex64 {
    fn inv(&self) -> Option<Self> {
        if Ring::is_zero(self) {
            None
        } else {
            Some(Complex64::new(1.0, 0.0) / self)
        }
    }
    fn half(&self) -> Self {
        self * 0.5
    }
}

/// Gaussian rationals, used where the constructions of the nilcone proof
/// need a square root of -1 while staying exact.
pub type GaussRat = num::complex::Complex<BigRational>;

impl Ring for GaussRat {
    fn zero() -> Self {
        GaussRat::new(Ring::zero(), Ring::zero())
    }
    fn one() -> Self {
        GaussRat::new(Ring::one(), Ring::zero())
    }
    fn from_i64(n: i64) -> Self {
        GaussRat::new(Ring::from_i64(n), Ring::zero())
    }
    fn is_zero(&self) -> bool {
        Ring::is_zero(&self.re) && Ring::is_zero(&self.im)
    }
}

impl Field for GaussRat {
    fn inv(&self) -> Option<Self> {
        let n = &self.re * &self.re + &self.im * &self.im;
        if Zero::is_zero(&n) {
            return None;
        }
        Some(GaussRat::new(&self.re / &n, -(&self.im / &n)))
    }
    fn half(&self) -> Self {
        GaussRat::new(self.re.half(), self.im.half())
    }
}

/// First fixed prime, 2^61 - 1 (Mersenne).
pub const PRIME_A: u64 = 2_305_843_009_213_693_951;
/// Second fixed prime, 2^61 + 15.
pub const PRIME_B: u64 = 2_305_843_009_213_693_967;
/// Third prime, drawn only on disagreement between the first two.
pub const PRIME_C: u64 = 2_305_843_009_213_693_973;

/// Residue in the prime field of the compile-time modulus `P`.
///
/// The modulus is a property of the type, so values of distinct fields
/// cannot be mixed. Runtime-chosen primes go through [`PrimeCtx`] instead.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp<const P: u64>(pub u64);

impl<const P: u64> Fp<P> {
    // p > 2^60, and odd so that 2 and 3 are invertible.
    const _GUARD: () = assert!(P > (1u64 << 60) && P % 2 == 1 && P % 3 != 0);

    pub fn new(v: u64) -> Self {
        Fp(v % P)
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp::<P>(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(if self.0 >= rhs.0 {
            self.0 - rhs.0
        } else {
            self.0 + P - rhs.0
        })
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp((u128::from(self.0) * u128::from(rhs.0) % u128::from(P)) as u64)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u64> Ring for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn from_i64(n: i64) -> Self {
        let r = n.rem_euclid(P as i64);
        Fp(r as u64)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> Field for Fp<P> {
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            // Fermat: p is prime.
            Some(self.pow(P - 2))
        }
    }
    fn half(&self) -> Self {
        *self * Fp((P + 1) / 2)
    }
}

/// Arithmetic context for a runtime-chosen prime. Raw `u64` residues keep
/// the sparse elimination inner loops free of per-value tags.
#[derive(Clone, Copy, Debug)]
pub struct PrimeCtx {
    pub p: u64,
}

impl PrimeCtx {
    pub fn new(p: u64) -> Result<Self, String> {
        if p <= 1 << 60 {
            return Err(format!("prime {p} not above 2^60"));
        }
        if !is_prime_u64(p) {
            return Err(format!("{p} is not prime"));
        }
        Ok(PrimeCtx { p })
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        (u128::from(a) * u128::from(b) % u128::from(self.p)) as u64
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero");
        self.pow(a, self.p - 2)
    }

    pub fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    pub fn from_bigint(&self, n: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let mut r = n % &p;
        if r.is_negative() {
            r += &p;
        }
        let (_, digits) = r.to_u64_digits();
        match digits.len() {
            0 => 0,
            1 => digits[0],
            _ => unreachable!("reduced residue exceeds one word"),
        }
    }
}

/// Deterministic Miller-Rabin for u64 (the listed bases are proven
/// sufficient below 2^64).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
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
    let mulmod = |a: u64, b: u64| (u128::from(a) * u128::from(b) % u128::from(n)) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        b %= n;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Convenience alias used throughout: exact rational scalar.
pub type Rat = BigRational;
/// Convenience alias: exact integer scalar (a subring of the rationals).
pub type Int = BigInt;

pub fn rat(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_primes_are_prime_and_large() {
        for p in [PRIME_A, PRIME_B, PRIME_C] {
            assert!(is_prime_u64(p), "{p} must be prime");
            assert!(p > 1 << 60);
            assert!(p % 3 != 0);
        }
        assert!(PRIME_A != PRIME_B && PRIME_B != PRIME_C);
    }

    #[test]
    fn miller_rabin_small() {
        let primes: Vec<u64> = (2..100).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97]
        );
        assert!(!is_prime_u64(u64::MAX));
        assert!(is_prime_u64(18_446_744_073_709_551_557)); // largest u64 prime
    }

    #[test]
    fn fp_field_ops() {
        type F = Fp<PRIME_A>;
        let a = F::new(12345678901234567);
        let b = a.inv().unwrap();
        assert_eq!(a * b, F::new(1));
        assert_eq!(a.half() + a.half(), a);
        assert_eq!(F::from_i64(-1) + F::new(1), F::new(0));
    }

    #[test]
    fn prime_ctx_matches_fp() {
        let ctx = PrimeCtx::new(PRIME_A).unwrap();
        let a = 987654321987654321u64 % PRIME_A;
        assert_eq!(ctx.mul(a, ctx.inv(a)), 1);
        assert_eq!(ctx.from_i64(-5), PRIME_A - 5);
        assert_eq!(
            ctx.from_bigint(&(BigInt::from(-3) * BigInt::from(PRIME_A) + 7)),
            7
        );
    }

    #[test]
    fn gauss_rat_inverse() {
        let z = GaussRat::new(rat(3, 1), rat(4, 1));
        let w = Field::inv(&z).unwrap();
        assert_eq!(z * w, <GaussRat as Ring>::one());
    }
}
