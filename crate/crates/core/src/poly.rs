//! Dense univariate polynomials over a prime field.
//!
//! Coefficients are stored in ascending order with no trailing zeros.
//! Reading a coefficient at any index outside the stored range, negative
//! indices included, yields zero, so a polynomial can be indexed like a
//! formal power series.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::field::{FieldElement, FieldError, FieldModulus};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("interpolation abscissa {0} appears twice")]
    DuplicateAbscissa(u64),
    #[error("interpolation needs at least one point")]
    NoPoints,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    modulus: FieldModulus,
    coeffs: Vec<FieldElement>,
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    ///
    /// Panics if a coefficient belongs to a different field.
    pub fn new(modulus: FieldModulus, mut coeffs: Vec<FieldElement>) -> Self {
        assert!(
            coeffs.iter().all(|c| c.modulus() == modulus),
            "coefficient modulus mismatch"
        );
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { modulus, coeffs }
    }

    pub fn from_u64s(modulus: FieldModulus, coeffs: &[u64]) -> Self {
        Self::new(modulus, coeffs.iter().map(|&c| modulus.elem(c)).collect())
    }

    pub fn from_i64s(modulus: FieldModulus, coeffs: &[i64]) -> Self {
        Self::new(
            modulus,
            coeffs.iter().map(|&c| modulus.elem_i64(c)).collect(),
        )
    }

    pub fn zero(modulus: FieldModulus) -> Self {
        Polynomial {
            modulus,
            coeffs: Vec::new(),
        }
    }

    pub fn one(modulus: FieldModulus) -> Self {
        Self::constant(modulus.one())
    }

    pub fn constant(c: FieldElement) -> Self {
        Self::new(c.modulus(), vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: FieldElement, k: usize) -> Self {
        let m = c.modulus();
        let mut coeffs = vec![m.zero(); k + 1];
        coeffs[k] = c;
        Self::new(m, coeffs)
    }

    /// `x - root`.
    pub fn linear_root(root: FieldElement) -> Self {
        Self::new(root.modulus(), vec![-root, root.modulus().one()])
    }

    #[inline]
    pub fn modulus(&self) -> FieldModulus {
        self.modulus
    }

    #[inline]
    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial (degree minus infinity).
    #[inline]
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i`; zero for every index outside the stored range.
    #[inline]
    pub fn coeff(&self, i: i64) -> FieldElement {
        if i < 0 {
            return self.modulus.zero();
        }
        self.coeffs
            .get(i as usize)
            .copied()
            .unwrap_or_else(|| self.modulus.zero())
    }

    pub fn leading_coefficient(&self) -> Option<FieldElement> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coefficient().is_some_and(|c| c.is_one())
    }

    /// Scales to a monic polynomial; the zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) => self.scale(lc.inv().expect("leading coefficient is nonzero")),
        }
    }

    pub fn scale(&self, c: FieldElement) -> Self {
        Self::new(self.modulus, self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.modulus.zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        Polynomial {
            modulus: self.modulus,
            coeffs,
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, x: FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(self.modulus.zero(), |acc, &c| acc * x + c)
    }

    /// The polynomial `x -> self(x + c)`.
    pub fn translate(&self, c: FieldElement) -> Self {
        let step = Polynomial::new(self.modulus, vec![c, self.modulus.one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Polynomial::zero(self.modulus), |acc, &a| {
                &(&acc * &step) + &Polynomial::constant(a)
            })
    }

    pub fn derivative(&self) -> Self {
        let m = self.modulus;
        Self::new(
            m,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| c * m.elem(i as u64))
                .collect(),
        )
    }

    fn check(&self, other: &Self) -> Result<(), PolyError> {
        if self.modulus != other.modulus {
            return Err(
                FieldError::ModulusMismatch(self.modulus.value(), other.modulus.value()).into(),
            );
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        Ok(self * other)
    }

    /// Long division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        self.check(divisor)?;
        let m = self.modulus;
        let db = divisor.degree().ok_or(PolyError::DivisionByZeroPoly)?;
        let lc_inv = divisor.coeffs[db].inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((Polynomial::zero(m), self.clone()));
        }
        let mut quot = vec![m.zero(); rem.len() - db];
        for k in (0..quot.len()).rev() {
            let c = rem[k + db] * lc_inv;
            quot[k] = c;
            if c.is_zero() {
                continue;
            }
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= c * b;
            }
        }
        rem.truncate(db);
        Ok((Polynomial::new(m, quot), Polynomial::new(m, rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self, PolyError> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Exact quotient; `None` when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Self) -> Result<Option<Self>, PolyError> {
        let (q, r) = self.divrem(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self, PolyError> {
        Ok(self.xgcd(other)?.0)
    }

    /// Extended Euclid: returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn xgcd(&self, other: &Self) -> Result<(Self, Self, Self), PolyError> {
        self.check(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(PolyError::BothZero);
        }
        let m = self.modulus;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Polynomial::one(m), Polynomial::zero(m));
        let (mut t0, mut t1) = (Polynomial::zero(m), Polynomial::one(m));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let lc_inv = r0.leading_coefficient().expect("nonzero gcd").inv()?;
        Ok((r0.scale(lc_inv), s0.scale(lc_inv), t0.scale(lc_inv)))
    }

    /// Lagrange interpolation through points with pairwise distinct abscissas.
    pub fn interpolate_distinct(
        points: &[(FieldElement, FieldElement)],
    ) -> Result<Self, PolyError> {
        let m = points.first().ok_or(PolyError::NoPoints)?.0.modulus();
        for (i, (xi, _)) in points.iter().enumerate() {
            if points[..i].iter().any(|(xj, _)| xj == xi) {
                return Err(PolyError::DuplicateAbscissa(xi.value()));
            }
        }
        let mut acc = Polynomial::zero(m);
        for (i, &(xi, yi)) in points.iter().enumerate() {
            let mut basis = Polynomial::one(m);
            let mut denom = m.one();
            for (j, &(xj, _)) in points.iter().enumerate() {
                if i != j {
                    basis = &basis * &Polynomial::linear_root(xj);
                    denom *= xi - xj;
                }
            }
            acc = &acc + &basis.scale(yi * denom.inv()?);
        }
        Ok(acc)
    }

    /// Resultant via the Euclidean recurrence
    /// `Res(a, b) = (-1)^(mn) lc(b)^(m - k) Res(b, a mod b)`.
    pub fn resultant(&self, other: &Self) -> Result<FieldElement, PolyError> {
        self.check(other)?;
        let m = self.modulus;
        let (Some(da), Some(db)) = (self.degree(), other.degree()) else {
            return Ok(m.zero());
        };
        if db == 0 {
            return Ok(other.coeffs[0].pow(da as u64));
        }
        if da == 0 {
            return Ok(self.coeffs[0].pow(db as u64));
        }
        let r = self.rem(other)?;
        let Some(dr) = r.degree() else {
            return Ok(m.zero());
        };
        let sign = if (da * db) % 2 == 1 {
            -m.one()
        } else {
            m.one()
        };
        let lc = other.leading_coefficient().expect("nonzero");
        Ok(sign * lc.pow((da - dr) as u64) * other.resultant(&r)?)
    }

    /// Parses the bracketed form `[c0,c1,...]`.
    pub fn parse(modulus: FieldModulus, s: &str) -> Result<Self, PolyError> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| PolyError::Parse(format!("expected [c0,c1,...], got {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Polynomial::zero(modulus));
        }
        let coeffs = inner
            .split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<u64>()
                    .ok()
                    .filter(|&v| v < modulus.value())
                    .map(|v| modulus.elem(v))
                    .ok_or_else(|| PolyError::Parse(format!("bad coefficient {t:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Polynomial::new(modulus, coeffs))
    }

    /// Bracketed form padded with zeros to at least `len` coefficients.
    pub fn to_padded_string(&self, len: usize) -> String {
        let mut parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        while parts.len() < len.max(1) {
            parts.push("0".into());
        }
        format!("[{}]", parts.join(","))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_padded_string(1))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.to_padded_string(1), self.modulus)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n as i64)
            .map(|i| self.coeff(i) + rhs.coeff(i))
            .collect();
        Polynomial::new(self.modulus, coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n as i64)
            .map(|i| self.coeff(i) - rhs.coeff(i))
            .collect();
        Polynomial::new(self.modulus, coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.modulus, rhs.modulus, "polynomial modulus mismatch");
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(self.modulus);
        }
        let mut coeffs = vec![self.modulus.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(self.modulus, coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.modulus, self.coeffs.iter().map(|&c| -c).collect())
    }
}
