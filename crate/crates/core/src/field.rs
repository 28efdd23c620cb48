//! Prime field arithmetic modulo an odd prime `r < 2^63`.
//!
//! Elements are stored as canonical residues in `[0, r)` and carry their
//! modulus, so mixing elements of different fields is detected. The
//! operator traits panic on a modulus mismatch; the `checked_*` methods
//! report it as [`FieldError::ModulusMismatch`] instead.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use thiserror::Error;

/// Largest supported modulus (exclusive).
pub const MODULUS_LIMIT: u64 = 1 << 63;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("modulus {0} is not an odd prime in [3, 2^63)")]
    BadModulus(u64),
    #[error("attempted to invert zero")]
    ZeroInverse,
    #[error("operands belong to different fields (mod {0} vs mod {1})")]
    ModulusMismatch(u64, u64),
}

/// An odd prime modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldModulus(u64);

impl FieldModulus {
    /// Validates `r` as an odd prime below 2^63.
    pub fn new(r: u64) -> Result<Self, FieldError> {
        if r < 3 || r.is_multiple_of(2) || r >= MODULUS_LIMIT || !is_prime(r) {
            return Err(FieldError::BadModulus(r));
        }
        Ok(FieldModulus(r))
    }

    #[inline]
    pub fn value(self) -> u64 {
        self.0
    }

    /// The residue of `v` as an element of this field.
    #[inline]
    pub fn elem(self, v: u64) -> FieldElement {
        FieldElement {
            value: v % self.0,
            modulus: self,
        }
    }

    /// The residue of a signed integer.
    pub fn elem_i64(self, v: i64) -> FieldElement {
        let r = self.0 as i128;
        let canon = (v as i128).rem_euclid(r) as u64;
        FieldElement {
            value: canon,
            modulus: self,
        }
    }

    #[inline]
    pub fn zero(self) -> FieldElement {
        FieldElement {
            value: 0,
            modulus: self,
        }
    }

    #[inline]
    pub fn one(self) -> FieldElement {
        FieldElement {
            value: 1,
            modulus: self,
        }
    }

    /// Smallest quadratic non-residue, found by sequential search from 2.
    pub fn non_residue(self) -> FieldElement {
        let mut z = 2;
        loop {
            let e = self.elem(z);
            if e.legendre() == -1 {
                return e;
            }
            z += 1;
        }
    }
}

impl fmt::Display for FieldModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A canonical residue modulo a [`FieldModulus`].
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u64,
    modulus: FieldModulus,
}

impl FieldElement {
    #[inline]
    pub fn value(self) -> u64 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> FieldModulus {
        self.modulus
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    #[inline]
    pub fn is_one(self) -> bool {
        self.value == 1
    }

    fn check(self, other: Self) -> Result<(), FieldError> {
        if self.modulus != other.modulus {
            Err(FieldError::ModulusMismatch(self.modulus.0, other.modulus.0))
        } else {
            Ok(())
        }
    }

    pub fn checked_add(self, other: Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self.add_raw(other))
    }

    pub fn checked_sub(self, other: Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self.sub_raw(other))
    }

    pub fn checked_mul(self, other: Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self.mul_raw(other))
    }

    #[inline]
    fn add_raw(self, other: Self) -> Self {
        // r < 2^63, so the sum cannot overflow.
        let mut v = self.value + other.value;
        if v >= self.modulus.0 {
            v -= self.modulus.0;
        }
        FieldElement {
            value: v,
            modulus: self.modulus,
        }
    }

    #[inline]
    fn sub_raw(self, other: Self) -> Self {
        let v = if self.value >= other.value {
            self.value - other.value
        } else {
            self.value + self.modulus.0 - other.value
        };
        FieldElement {
            value: v,
            modulus: self.modulus,
        }
    }

    #[inline]
    fn mul_raw(self, other: Self) -> Self {
        let v = (self.value as u128 * other.value as u128) % self.modulus.0 as u128;
        FieldElement {
            value: v as u64,
            modulus: self.modulus,
        }
    }

    pub fn square(self) -> Self {
        self.mul_raw(self)
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = self.modulus.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_raw(base);
            }
            base = base.square();
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via Fermat's little theorem.
    pub fn inv(self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        Ok(self.pow(self.modulus.0 - 2))
    }

    /// `self / other`.
    pub fn div(self, other: Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self.mul_raw(other.inv()?))
    }

    /// Legendre symbol: 0 for zero, 1 for a nonzero square, -1 otherwise.
    pub fn legendre(self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        if self.pow((self.modulus.0 - 1) / 2).is_one() {
            1
        } else {
            -1
        }
    }

    /// Square root by Tonelli-Shanks. Returns the smaller of the two
    /// canonical roots, or `None` for a non-residue.
    pub fn sqrt(self) -> Option<Self> {
        let r = self.modulus.0;
        if self.is_zero() {
            return Some(self);
        }
        if self.legendre() != 1 {
            return None;
        }
        let root = if r % 4 == 3 {
            self.pow((r + 1) / 4)
        } else {
            let s = (r - 1).trailing_zeros();
            let q = (r - 1) >> s;
            let mut c = self.modulus.non_residue().pow(q);
            let mut x = self.pow(q.div_ceil(2));
            let mut t = self.pow(q);
            let mut m = s;
            while !t.is_one() {
                let mut i = 0;
                let mut t2 = t;
                while !t2.is_one() {
                    t2 = t2.square();
                    i += 1;
                }
                let mut b = c;
                for _ in 0..(m - i - 1) {
                    b = b.square();
                }
                x = x.mul_raw(b);
                c = b.square();
                t = t.mul_raw(c);
                m = i;
            }
            x
        };
        let other = -root;
        Some(if other.value < root.value {
            other
        } else {
            root
        })
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus.0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

macro_rules! impl_binop {
    ($tr:ident, $method:ident, $raw:ident, $assign_tr:ident, $assign_method:ident) => {
        impl $tr for FieldElement {
            type Output = FieldElement;
            #[inline]
            fn $method(self, rhs: FieldElement) -> FieldElement {
                assert_eq!(self.modulus, rhs.modulus, "field modulus mismatch");
                self.$raw(rhs)
            }
        }

        impl $assign_tr for FieldElement {
            #[inline]
            fn $assign_method(&mut self, rhs: FieldElement) {
                *self = $tr::$method(*self, rhs);
            }
        }
    };
}

impl_binop!(Add, add, add_raw, AddAssign, add_assign);
impl_binop!(Sub, sub, sub_raw, SubAssign, sub_assign);
impl_binop!(Mul, mul, mul_raw, MulAssign, mul_assign);

impl Neg for FieldElement {
    type Output = FieldElement;
    #[inline]
    fn neg(self) -> FieldElement {
        self.modulus.zero().sub_raw(self)
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Miller-Rabin with the first twelve prime bases, which is exact for
/// every 64-bit input.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
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
    use proptest::prelude::*;

    fn f7() -> FieldModulus {
        FieldModulus::new(7).unwrap()
    }

    #[test]
    fn modulus_validation() {
        assert!(FieldModulus::new(7).is_ok());
        assert!(FieldModulus::new(10007).is_ok());
        assert!(FieldModulus::new((1 << 62) - 57).is_ok());
        assert_eq!(FieldModulus::new(2), Err(FieldError::BadModulus(2)));
        assert_eq!(FieldModulus::new(9), Err(FieldError::BadModulus(9)));
        assert_eq!(FieldModulus::new(1), Err(FieldError::BadModulus(1)));
        assert!(FieldModulus::new((1 << 63) + 29).is_err());
    }

    #[test]
    fn primality_small_range() {
        let sieve: Vec<u64> = (0..2000u64)
            .filter(|&n| n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0))
            .collect();
        let mr: Vec<u64> = (0..2000u64).filter(|&n| is_prime(n)).collect();
        assert_eq!(sieve, mr);
        // Strong pseudoprime to bases 2, 3, 5, 7.
        assert!(!is_prime(3_215_031_751));
    }

    #[test]
    fn inversion_examples() {
        let m = f7();
        assert_eq!(m.elem(3).inv().unwrap(), m.elem(5));
        assert_eq!(m.elem(1).inv().unwrap(), m.elem(1));
        assert_eq!(m.elem(0).inv(), Err(FieldError::ZeroInverse));
    }

    #[test]
    fn sqrt_examples() {
        let m = f7();
        assert_eq!(m.elem(2).sqrt(), Some(m.elem(3)));
        assert_eq!(m.elem(0).sqrt(), Some(m.elem(0)));
        assert_eq!(m.elem(3).sqrt(), None);
    }

    #[test]
    fn ring_examples() {
        let m = f7();
        assert_eq!(m.elem(3) + m.elem(5), m.elem(1));
        assert_eq!(m.elem(3) * m.elem(5), m.elem(1));
        assert_eq!(-m.elem(0), m.elem(0));
        assert_eq!(m.elem_i64(-1), m.elem(6));
    }

    #[test]
    fn mismatch_is_reported() {
        let a = f7().elem(3);
        let b = FieldModulus::new(11).unwrap().elem(3);
        assert_eq!(a.checked_add(b), Err(FieldError::ModulusMismatch(7, 11)));
        assert_eq!(a.checked_sub(b), Err(FieldError::ModulusMismatch(7, 11)));
        assert_eq!(a.checked_mul(b), Err(FieldError::ModulusMismatch(7, 11)));
    }

    #[test]
    fn sqrt_exhaustive_small_primes() {
        // 13 and 17 exercise the Tonelli-Shanks loop (r = 1 mod 4).
        for r in [3u64, 5, 7, 13, 17, 41, 97] {
            let m = FieldModulus::new(r).unwrap();
            for v in 0..r {
                let a = m.elem(v);
                let brute: Vec<u64> = (0..r).filter(|&s| s * s % r == v).collect();
                match a.sqrt() {
                    Some(s) => {
                        assert_eq!(s.square(), a);
                        assert_eq!(s.value(), brute[0]);
                    }
                    None => assert!(brute.is_empty()),
                }
            }
        }
    }

    const BIG: u64 = (1 << 62) - 57;

    proptest! {
        #[test]
        fn inverse_round_trip(v in 1u64..BIG) {
            let a = FieldModulus::new(BIG).unwrap().elem(v);
            let ai = a.inv().unwrap();
            prop_assert!((a * ai).is_one());
            prop_assert_eq!(ai.inv().unwrap(), a);
        }

        #[test]
        fn sqrt_matches_euler_criterion(v in 0u64..BIG) {
            let m = FieldModulus::new(BIG).unwrap();
            let a = m.elem(v);
            let euler = a.pow((BIG - 1) / 2);
            match a.sqrt() {
                Some(s) => {
                    prop_assert_eq!(s.square(), a);
                    prop_assert!(euler.value() != BIG - 1);
                }
                None => prop_assert_eq!(euler.value(), BIG - 1),
            }
        }

        #[test]
        fn sqrt_general_prime(v in 0u64..1_000_000u64) {
            // 998244353 = 119 * 2^23 + 1 has a deep 2-adic part.
            let m = FieldModulus::new(998_244_353).unwrap();
            let a = m.elem(v);
            if let Some(s) = a.sqrt() {
                prop_assert_eq!(s.square(), a);
                prop_assert!(s.value() <= (-s).value());
            } else {
                prop_assert_eq!(a.legendre(), -1);
            }
        }

        #[test]
        fn field_axioms(x in 0u64..BIG, y in 0u64..BIG, z in 0u64..BIG) {
            let m = FieldModulus::new(BIG).unwrap();
            let (a, b, c) = (m.elem(x), m.elem(y), m.elem(z));
            prop_assert_eq!((a + b) + c, a + (b + c));
            prop_assert_eq!((a * b) * c, a * (b * c));
            prop_assert_eq!(a * (b + c), a * b + a * c);
            prop_assert_eq!(a - a, m.zero());
            prop_assert!(a.value() < BIG);
        }
    }
}
