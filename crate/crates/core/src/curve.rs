//! Imaginary hyperelliptic curves `y^2 = f(x)` with `f` monic of degree `2g + 1`.
//!
//! Only the affine chart is modelled. The point at infinity never appears
//! as a value; it is implicit in the divisor classes built on top.

use std::fmt;

use thiserror::Error;

use crate::field::{FieldElement, FieldError, FieldModulus};
use crate::poly::{PolyError, Polynomial};
use crate::rng::SeededRng;

/// Attempts made by [`Curve::sample_point`] before giving up.
pub const SAMPLING_ATTEMPTS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("genus must be at least 1")]
    GenusZero,
    #[error("f must have degree {expected}, found {found:?}")]
    WrongDegree {
        expected: usize,
        found: Option<usize>,
    },
    #[error("f is not monic")]
    NotMonic,
    #[error("f has a repeated root (zero discriminant)")]
    SingularCurve,
    #[error("point ({0}, {1}) is not on the curve")]
    PointOffCurve(u64, u64),
    #[error("no suitable point found after {SAMPLING_ATTEMPTS} attempts")]
    SamplingExhausted,
    #[error("curve file: {0}")]
    Parse(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Curve {
    genus: usize,
    f: Polynomial,
}

/// A point `(x, y)` with `y^2 = f(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AffinePoint {
    pub x: FieldElement,
    pub y: FieldElement,
}

impl AffinePoint {
    /// The hyperelliptic involution `(x, y) -> (x, -y)`.
    pub fn involution(self) -> AffinePoint {
        AffinePoint {
            x: self.x,
            y: -self.y,
        }
    }

    pub fn is_branch_point(self) -> bool {
        self.y.is_zero()
    }
}

impl Curve {
    pub fn new(genus: usize, f: Polynomial) -> Result<Self, CurveError> {
        if genus == 0 {
            return Err(CurveError::GenusZero);
        }
        let expected = 2 * genus + 1;
        if f.degree() != Some(expected) {
            return Err(CurveError::WrongDegree {
                expected,
                found: f.degree(),
            });
        }
        if !f.is_monic() {
            return Err(CurveError::NotMonic);
        }
        let curve = Curve { genus, f };
        if curve.discriminant()?.is_zero() {
            return Err(CurveError::SingularCurve);
        }
        Ok(curve)
    }

    /// A curve with uniformly random lower coefficients, resampled until
    /// the discriminant is nonzero.
    pub fn random(modulus: FieldModulus, genus: usize, seed: u64) -> Result<Self, CurveError> {
        let mut rng = SeededRng::new(seed);
        for _ in 0..SAMPLING_ATTEMPTS {
            let mut coeffs: Vec<FieldElement> =
                (0..=2 * genus).map(|_| rng.element(modulus)).collect();
            coeffs.push(modulus.one());
            match Curve::new(genus, Polynomial::new(modulus, coeffs)) {
                Err(CurveError::SingularCurve) => continue,
                other => return other,
            }
        }
        Err(CurveError::SamplingExhausted)
    }

    #[inline]
    pub fn genus(&self) -> usize {
        self.genus
    }

    #[inline]
    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    #[inline]
    pub fn modulus(&self) -> FieldModulus {
        self.f.modulus()
    }

    /// `(-1)^(n(n-1)/2) Res(f, f')` with `n = 2g + 1`. Only whether it
    /// vanishes matters to this crate.
    pub fn discriminant(&self) -> Result<FieldElement, CurveError> {
        let res = self.f.resultant(&self.f.derivative())?;
        // n(n-1)/2 = g(2g+1) has the parity of g
        Ok(if self.genus % 2 == 1 { -res } else { res })
    }

    pub fn contains(&self, x: FieldElement, y: FieldElement) -> bool {
        y.square() == self.f.eval(x)
    }

    pub fn point(&self, x: FieldElement, y: FieldElement) -> Result<AffinePoint, CurveError> {
        if self.contains(x, y) {
            Ok(AffinePoint { x, y })
        } else {
            Err(CurveError::PointOffCurve(x.value(), y.value()))
        }
    }

    /// Deterministic random affine point for a given seed.
    pub fn sample_point(
        &self,
        seed: u64,
        require_nonzero_x: bool,
        require_nonzero_y: bool,
    ) -> Result<AffinePoint, CurveError> {
        self.sample_point_with(
            &mut SeededRng::new(seed),
            require_nonzero_x,
            require_nonzero_y,
        )
    }

    /// Like [`Curve::sample_point`] but drawing from a caller-owned stream.
    pub fn sample_point_with(
        &self,
        rng: &mut SeededRng,
        require_nonzero_x: bool,
        require_nonzero_y: bool,
    ) -> Result<AffinePoint, CurveError> {
        let m = self.modulus();
        for _ in 0..SAMPLING_ATTEMPTS {
            let x = rng.element(m);
            if require_nonzero_x && x.is_zero() {
                continue;
            }
            let fx = self.f.eval(x);
            if fx.is_zero() && require_nonzero_y {
                continue;
            }
            let Some(root) = fx.sqrt() else {
                continue;
            };
            let y = if rng.coin() { -root } else { root };
            return Ok(AffinePoint { x, y });
        }
        Err(CurveError::SamplingExhausted)
    }

    /// The isomorphic curve `y^2 = f(x + c)`.
    pub fn translate(&self, c: FieldElement) -> Curve {
        Curve {
            genus: self.genus,
            f: self.f.translate(c),
        }
    }

    /// Parses the `key = value` curve file format (`p`, `g`, `f`).
    /// Blank lines and lines starting with `#` are ignored.
    pub fn parse(text: &str) -> Result<Self, CurveError> {
        let (mut p, mut g, mut f) = (None, None, None);
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CurveError::Parse(format!("line {}: expected key = value", lineno + 1))
            })?;
            let value = value.trim();
            match key.trim() {
                "p" => {
                    p =
                        Some(value.parse::<u64>().map_err(|e| {
                            CurveError::Parse(format!("line {}: p: {e}", lineno + 1))
                        })?)
                }
                "g" => {
                    g =
                        Some(value.parse::<usize>().map_err(|e| {
                            CurveError::Parse(format!("line {}: g: {e}", lineno + 1))
                        })?)
                }
                "f" => f = Some(value.to_string()),
                other => {
                    return Err(CurveError::Parse(format!(
                        "line {}: unknown key {other:?}",
                        lineno + 1
                    )))
                }
            }
        }
        let p = p.ok_or_else(|| CurveError::Parse("missing p".into()))?;
        let g = g.ok_or_else(|| CurveError::Parse("missing g".into()))?;
        let f = f.ok_or_else(|| CurveError::Parse("missing f".into()))?;
        let modulus = FieldModulus::new(p)?;
        let f = Polynomial::parse(modulus, &f)?;
        Curve::new(g, f)
    }

    /// Renders the curve in the file format accepted by [`Curve::parse`].
    pub fn to_file_string(&self) -> String {
        format!(
            "p = {}\ng = {}\nf = {}\n",
            self.modulus(),
            self.genus,
            self.f.to_padded_string(2 * self.genus + 2)
        )
    }
}

impl fmt::Debug for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Curve {{ g: {}, p: {}, f: {} }}",
            self.genus,
            self.modulus(),
            self.f
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> FieldModulus {
        FieldModulus::new(7).unwrap()
    }

    fn x3_plus_1() -> Curve {
        Curve::new(1, Polynomial::from_u64s(f7(), &[1, 0, 0, 1])).unwrap()
    }

    #[test]
    fn construction_examples() {
        let c = x3_plus_1();
        // -27 = 1 mod 7
        assert_eq!(c.discriminant().unwrap(), f7().elem(1));
        assert_eq!(
            Curve::new(1, Polynomial::from_u64s(f7(), &[0, 0, 0, 1])),
            Err(CurveError::SingularCurve)
        );
        assert_eq!(
            Curve::new(1, Polynomial::from_u64s(f7(), &[1, 0, 0, 2])),
            Err(CurveError::NotMonic)
        );
        assert!(matches!(
            Curve::new(2, Polynomial::from_u64s(f7(), &[1, 0, 0, 1])),
            Err(CurveError::WrongDegree {
                expected: 5,
                found: Some(3)
            })
        ));
        assert_eq!(
            Curve::new(0, Polynomial::from_u64s(f7(), &[1, 1])),
            Err(CurveError::GenusZero)
        );
    }

    #[test]
    fn discriminant_vanishes_exactly_on_repeated_roots() {
        let m = FieldModulus::new(13).unwrap();
        // Brute-force repeated-root test over every monic cubic mod 13.
        for a in 0..13u64 {
            for b in 0..13u64 {
                for c in 0..13u64 {
                    let f = Polynomial::from_u64s(m, &[c, b, a, 1]);
                    let repeated = f.gcd(&f.derivative()).unwrap().degree() != Some(0);
                    let res = Curve::new(1, f);
                    assert_eq!(matches!(res, Err(CurveError::SingularCurve)), repeated);
                }
            }
        }
    }

    #[test]
    fn involution_examples() {
        let c = x3_plus_1();
        let m = f7();
        let p = c.point(m.elem(2), m.elem(3)).unwrap();
        assert_eq!(p.involution(), c.point(m.elem(2), m.elem(4)).unwrap());
        assert_eq!(p.involution().involution(), p);
        // f(3) = 28 = 0 mod 7
        let branch = c.point(m.elem(3), m.zero()).unwrap();
        assert_eq!(branch.involution(), branch);
        assert!(branch.is_branch_point());
        assert_eq!(
            c.point(m.elem(2), m.elem(2)),
            Err(CurveError::PointOffCurve(2, 2))
        );
    }

    #[test]
    fn sampling() {
        let c = x3_plus_1();
        let m = f7();
        for seed in 0..200 {
            let p = c.sample_point(seed, true, false).unwrap();
            assert!(c.contains(p.x, p.y));
            assert!(!p.x.is_zero());
            if p.x == m.elem(2) {
                assert!(p.y == m.elem(3) || p.y == m.elem(4));
            }
            let q = c.sample_point(seed, false, true).unwrap();
            assert!(!q.y.is_zero());
            assert_eq!(c.sample_point(seed, true, false).unwrap(), p);
        }
    }

    #[test]
    fn random_curves_are_valid() {
        let m = FieldModulus::new(10007).unwrap();
        for g in 1..=5 {
            let c = Curve::random(m, g, g as u64).unwrap();
            assert_eq!(c.genus(), g);
            assert!(!c.discriminant().unwrap().is_zero());
            assert_eq!(Curve::random(m, g, g as u64).unwrap(), c);
        }
    }

    #[test]
    fn file_round_trip_and_errors() {
        let c = x3_plus_1();
        let text = c.to_file_string();
        assert_eq!(text, "p = 7\ng = 1\nf = [1,0,0,1]\n");
        assert_eq!(Curve::parse(&text).unwrap(), c);
        assert_eq!(
            Curve::parse("# comment\n\np = 7\ng = 1\nf = [1, 0, 0, 1]\n").unwrap(),
            c
        );
        assert!(matches!(
            Curve::parse("p = 7\ng = 1\n"),
            Err(CurveError::Parse(_))
        ));
        assert!(matches!(
            Curve::parse("p = 8\ng = 1\nf = [1,0,0,1]"),
            Err(CurveError::Field(_))
        ));
        assert!(matches!(
            Curve::parse("p = 7\ng = x\nf = [1,0,0,1]"),
            Err(CurveError::Parse(_))
        ));
        assert!(matches!(
            Curve::parse("p = 7\nq = 1"),
            Err(CurveError::Parse(_))
        ));
        assert_eq!(
            Curve::parse("p = 7\ng = 1\nf = [0,0,0,1]"),
            Err(CurveError::SingularCurve)
        );
    }

    #[test]
    fn translation_preserves_points() {
        let c = x3_plus_1();
        let m = f7();
        let shift = m.elem(3);
        let t = c.translate(shift);
        // (2, 3) maps to (2 - 3, 3)
        assert!(t.contains(m.elem(2) - shift, m.elem(3)));
        assert!(!t.discriminant().unwrap().is_zero());
    }
}
