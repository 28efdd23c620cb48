//! Mumford coordinates for weight-`g` divisors on the affine chart.
//!
//! A divisor `P_1 + ... + P_g` with no point at infinity and no conjugate
//! pair is encoded by `(u, v)`: `u` is monic of degree `g` with the
//! `x_i` as roots, `deg v < g`, and `v` agrees with `y` at each `P_i` to
//! the right order. Equivalently `f - v^2 = u w` for a monic cofactor `w`
//! of degree `g + 1`.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::curve::{AffinePoint, Curve, CurveError};
use crate::field::{FieldElement, FieldModulus};
use crate::poly::{PolyError, Polynomial};
use crate::rng::SeededRng;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MumfordError {
    #[error("shape: {0}")]
    ShapeError(String),
    #[error("u does not divide f - v^2")]
    NotOnChart,
    #[error("x-coordinate {0} occurs twice")]
    DuplicateX(u64),
    #[error("expected {expected} points, got {found}")]
    WrongPointCount { expected: usize, found: usize },
    #[error("divisors live on different curves")]
    CurveMismatch,
    #[error("divisor literal: {0}")]
    Parse(String),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// The cofactor `w = (f - v^2) / u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cofactor {
    pub w: Polynomial,
}

/// A point of the chart: `u` monic of degree `g`, `deg v <= g - 1`, `u | f - v^2`.
#[derive(Clone, PartialEq, Eq)]
pub struct MumfordDivisor {
    curve: Arc<Curve>,
    u: Polynomial,
    v: Polynomial,
}

fn check_shape(curve: &Curve, u: &Polynomial, v: &Polynomial) -> Result<(), MumfordError> {
    let g = curve.genus();
    if u.modulus() != curve.modulus() || v.modulus() != curve.modulus() {
        return Err(MumfordError::ShapeError(
            "coefficients use a different field".into(),
        ));
    }
    if u.degree() != Some(g) {
        return Err(MumfordError::ShapeError(format!(
            "u must have degree {g}, found {:?}",
            u.degree()
        )));
    }
    if !u.is_monic() {
        return Err(MumfordError::ShapeError("u must be monic".into()));
    }
    if v.degree().is_some_and(|d| d >= g) {
        return Err(MumfordError::ShapeError(format!(
            "v must have degree at most {}, found {:?}",
            g - 1,
            v.degree()
        )));
    }
    Ok(())
}

/// Checks every coefficient identity
/// `f_i - sum_j v_j v_(i-j) = sum_j u_j w_(i-j)` for `0 <= i <= 2g + 1`.
pub fn chart_equations_hold(curve: &Curve, u: &Polynomial, v: &Polynomial, w: &Polynomial) -> bool {
    let m = curve.modulus();
    let f = curve.f();
    (0..=(2 * curve.genus() as i64 + 1)).all(|i| {
        let lhs = (0..=i).fold(f.coeff(i), |acc, j| acc - v.coeff(j) * v.coeff(i - j));
        let rhs = (0..=i).fold(m.zero(), |acc, j| acc + u.coeff(j) * w.coeff(i - j));
        lhs == rhs
    })
}

/// Membership test for the chart. Returns the cofactor when `(u, v)`
/// lies on it and `None` when `u` does not divide `f - v^2`.
pub fn is_on_z(
    curve: &Curve,
    u: &Polynomial,
    v: &Polynomial,
) -> Result<Option<Cofactor>, MumfordError> {
    check_shape(curve, u, v)?;
    let rhs = curve.f() - &(v * v);
    let (w, rem) = rhs.divrem(u)?;
    if !rem.is_zero() {
        return Ok(None);
    }
    let g = curve.genus();
    assert!(w.is_monic() && w.degree() == Some(g + 1), "cofactor shape");
    assert!(chart_equations_hold(curve, u, v, &w), "chart equations");
    Ok(Some(Cofactor { w }))
}

impl MumfordDivisor {
    /// Validates `(u, v)` against the chart equations.
    pub fn new(curve: Arc<Curve>, u: Polynomial, v: Polynomial) -> Result<Self, MumfordError> {
        match is_on_z(&curve, &u, &v)? {
            Some(_) => Ok(MumfordDivisor { curve, u, v }),
            None => Err(MumfordError::NotOnChart),
        }
    }

    /// Divisor of `g` points with pairwise distinct x-coordinates.
    pub fn from_points(curve: Arc<Curve>, points: &[AffinePoint]) -> Result<Self, MumfordError> {
        let g = curve.genus();
        if points.len() != g {
            return Err(MumfordError::WrongPointCount {
                expected: g,
                found: points.len(),
            });
        }
        for (i, p) in points.iter().enumerate() {
            curve.point(p.x, p.y)?;
            if points[..i].iter().any(|q| q.x == p.x) {
                return Err(MumfordError::DuplicateX(p.x.value()));
            }
        }
        let m = curve.modulus();
        let u = points.iter().fold(Polynomial::one(m), |acc, p| {
            &acc * &Polynomial::linear_root(p.x)
        });
        let pairs: Vec<_> = points.iter().map(|p| (p.x, p.y)).collect();
        let v = Polynomial::interpolate_distinct(&pairs)?;
        MumfordDivisor::new(curve, u, v)
    }

    /// Random divisor of `g` points with distinct x-coordinates and `y != 0`.
    pub fn random(
        curve: Arc<Curve>,
        seed: u64,
        require_nonzero_x: bool,
    ) -> Result<Self, MumfordError> {
        let mut rng = SeededRng::new(seed);
        let g = curve.genus();
        let mut points: Vec<AffinePoint> = Vec::with_capacity(g);
        let mut attempts = 0;
        while points.len() < g {
            attempts += 1;
            if attempts > crate::curve::SAMPLING_ATTEMPTS {
                return Err(CurveError::SamplingExhausted.into());
            }
            let p = curve.sample_point_with(&mut rng, require_nonzero_x, true)?;
            if points.iter().all(|q| q.x != p.x) {
                points.push(p);
            }
        }
        MumfordDivisor::from_points(curve, &points)
    }

    #[inline]
    pub fn curve(&self) -> &Arc<Curve> {
        &self.curve
    }

    #[inline]
    pub fn u(&self) -> &Polynomial {
        &self.u
    }

    #[inline]
    pub fn v(&self) -> &Polynomial {
        &self.v
    }

    pub fn genus(&self) -> usize {
        self.curve.genus()
    }

    /// Recomputes the cofactor `w`.
    pub fn cofactor(&self) -> Cofactor {
        is_on_z(&self.curve, &self.u, &self.v)
            .expect("validated at construction")
            .expect("validated at construction")
    }

    /// `(u, -v)`, the class of the conjugate points.
    pub fn negate(&self) -> MumfordDivisor {
        MumfordDivisor {
            curve: self.curve.clone(),
            u: self.u.clone(),
            v: -&self.v,
        }
    }

    /// Coefficient-wise comparison; the representation is canonical.
    pub fn equals(&self, other: &MumfordDivisor) -> Result<bool, MumfordError> {
        if self.curve != other.curve {
            return Err(MumfordError::CurveMismatch);
        }
        Ok(self.u == other.u && self.v == other.v)
    }

    /// The same divisor with every x-coordinate shifted by `-c`, on the
    /// curve `y^2 = f(x + c)`.
    pub fn translate(
        &self,
        curve: Arc<Curve>,
        c: FieldElement,
    ) -> Result<MumfordDivisor, MumfordError> {
        MumfordDivisor::new(curve, self.u.translate(c), self.v.translate(c))
    }

    /// Parses `u=[u0,...,1]; v=[v0,...]` and validates the result.
    pub fn parse(curve: Arc<Curve>, s: &str) -> Result<Self, MumfordError> {
        let (u, v) = parse_literal(curve.modulus(), s)?;
        MumfordDivisor::new(curve, u, v)
    }
}

/// Splits a divisor literal `u=[...]; v=[...]` into its two polynomials
/// without checking chart membership.
pub fn parse_literal(
    modulus: FieldModulus,
    s: &str,
) -> Result<(Polynomial, Polynomial), MumfordError> {
    let (mut u, mut v) = (None, None);
    for part in s.split(';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| MumfordError::Parse(format!("expected key=value, got {part:?}")))?;
        let poly = Polynomial::parse(modulus, value)?;
        match key.trim() {
            "u" => u = Some(poly),
            "v" => v = Some(poly),
            other => return Err(MumfordError::Parse(format!("unknown key {other:?}"))),
        }
    }
    let u = u.ok_or_else(|| MumfordError::Parse("missing u".into()))?;
    let v = v.ok_or_else(|| MumfordError::Parse("missing v".into()))?;
    Ok((u, v))
}

impl fmt::Display for MumfordDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.genus();
        write!(
            f,
            "u={}; v={}",
            self.u.to_padded_string(g + 1),
            self.v.to_padded_string(g)
        )
    }
}

impl fmt::Debug for MumfordDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MumfordDivisor({self})")
    }
}
