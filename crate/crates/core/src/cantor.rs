//! Cantor's composition-and-reduction algorithm.
//!
//! This is the reference group law the explicit formulas are tested
//! against. It works on reduced divisors of any weight `<= g`, so it is
//! total: shared points, conjugate pairs and doubling need no special
//! handling.

use std::fmt;

use thiserror::Error;

use crate::curve::Curve;
use crate::mumford::MumfordDivisor;
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CantorError {
    #[error("divisors live on different curves")]
    CurveMismatch,
}

/// A reduced divisor `(u, v)`: `u` monic, `deg u <= g`, `deg v < deg u`,
/// `u | f - v^2`. `(1, 0)` is the identity.
#[derive(Clone, PartialEq, Eq)]
pub struct ReducedDivisor {
    pub u: Polynomial,
    pub v: Polynomial,
}

impl ReducedDivisor {
    pub fn identity(curve: &Curve) -> Self {
        ReducedDivisor {
            u: Polynomial::one(curve.modulus()),
            v: Polynomial::zero(curve.modulus()),
        }
    }

    pub fn weight(&self) -> usize {
        self.u.degree().expect("u is nonzero")
    }

    pub fn negate(&self) -> Self {
        ReducedDivisor {
            u: self.u.clone(),
            v: -&self.v,
        }
    }

    /// Checks the reduced-divisor invariants on `curve`.
    pub fn is_valid(&self, curve: &Curve) -> bool {
        let deg_u = match self.u.degree() {
            Some(d) => d,
            None => return false,
        };
        let v_ok = match self.v.degree() {
            None => true,
            Some(dv) => dv < deg_u,
        };
        self.u.is_monic()
            && deg_u <= curve.genus()
            && v_ok
            && (curve.f() - &(&self.v * &self.v))
                .rem(&self.u)
                .expect("u is nonzero")
                .is_zero()
    }
}

impl From<&MumfordDivisor> for ReducedDivisor {
    fn from(d: &MumfordDivisor) -> Self {
        ReducedDivisor {
            u: d.u().clone(),
            v: d.v().clone(),
        }
    }
}

impl fmt::Debug for ReducedDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ReducedDivisor(u={}; v={})", self.u, self.v)
    }
}

/// Outcome of [`cantor_add`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CantorSum {
    /// A full-weight sum, representable on the chart.
    Generic(MumfordDivisor),
    /// A sum of weight `< g` (on the theta divisor, or the identity).
    Subgeneric(ReducedDivisor),
}

impl CantorSum {
    pub fn generic(self) -> Option<MumfordDivisor> {
        match self {
            CantorSum::Generic(d) => Some(d),
            CantorSum::Subgeneric(_) => None,
        }
    }
}

/// Composition followed by reduction.
pub fn add_reduced(curve: &Curve, a: &ReducedDivisor, b: &ReducedDivisor) -> ReducedDivisor {
    let f = curve.f();
    // d1 = e1 u1 + e2 u2, d = c1 d1 + c2 (v1 + v2)
    let (d1, e1, e2) = a.u.xgcd(&b.u).expect("u is nonzero");
    let (d, c1, c2) = d1.xgcd(&(&a.v + &b.v)).expect("d1 is nonzero");
    let s1 = &c1 * &e1;
    let s2 = &c1 * &e2;
    let s3 = c2;

    let d_sq = &d * &d;
    let mut u = (&a.u * &b.u)
        .exact_div(&d_sq)
        .unwrap()
        .expect("d^2 divides u1 u2");
    let numerator =
        &(&(&s1 * &a.u) * &b.v) + &(&(&(&s2 * &b.u) * &a.v) + &(&s3 * &(&(&a.v * &b.v) + f)));
    let mut v = numerator
        .exact_div(&d)
        .unwrap()
        .expect("d divides the composition numerator")
        .rem(&u)
        .unwrap();

    while u.degree().expect("u is nonzero") > curve.genus() {
        let next = (f - &(&v * &v))
            .exact_div(&u)
            .unwrap()
            .expect("u divides f - v^2");
        u = next.monic();
        v = (-&v).rem(&u).unwrap();
    }
    ReducedDivisor { u, v }
}

/// `[D] + [D']` by Cantor's algorithm.
pub fn cantor_add(d1: &MumfordDivisor, d2: &MumfordDivisor) -> Result<CantorSum, CantorError> {
    if d1.curve() != d2.curve() {
        return Err(CantorError::CurveMismatch);
    }
    let curve = d1.curve();
    let sum = add_reduced(curve, &d1.into(), &d2.into());
    if sum.weight() == curve.genus() {
        let d = MumfordDivisor::new(curve.clone(), sum.u, sum.v)
            .expect("reduced full-weight divisor is on the chart");
        Ok(CantorSum::Generic(d))
    } else {
        Ok(CantorSum::Subgeneric(sum))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldModulus;
    use std::sync::Arc;

    fn f7() -> FieldModulus {
        FieldModulus::new(7).unwrap()
    }

    fn poly(c: &[u64]) -> Polynomial {
        Polynomial::from_u64s(f7(), c)
    }

    #[test]
    fn genus_one_chord() {
        let c = Arc::new(Curve::new(1, poly(&[1, 0, 0, 1])).unwrap());
        let d1 = MumfordDivisor::new(c.clone(), poly(&[5, 1]), poly(&[3])).unwrap();
        let d2 = MumfordDivisor::new(c.clone(), poly(&[6, 1]), poly(&[3])).unwrap();
        let sum = cantor_add(&d1, &d2).unwrap().generic().unwrap();
        assert_eq!(sum.to_string(), "u=[3,1]; v=[4]");
    }

    #[test]
    fn inverse_gives_identity() {
        let m = FieldModulus::new(10007).unwrap();
        for g in 1..=4 {
            let c = Arc::new(Curve::random(m, g, g as u64).unwrap());
            let d = MumfordDivisor::random(c.clone(), 7, false).unwrap();
            match cantor_add(&d, &d.negate()).unwrap() {
                CantorSum::Subgeneric(r) => {
                    assert_eq!(r, ReducedDivisor::identity(&c));
                    assert_eq!(r.weight(), 0);
                }
                other => panic!("expected identity, got {other:?}"),
            }
        }
    }

    #[test]
    fn curve_mismatch() {
        let m = FieldModulus::new(10007).unwrap();
        let c1 = Arc::new(Curve::random(m, 2, 1).unwrap());
        let c2 = Arc::new(Curve::random(m, 2, 2).unwrap());
        let a = MumfordDivisor::random(c1, 1, false).unwrap();
        let b = MumfordDivisor::random(c2, 1, false).unwrap();
        assert_eq!(cantor_add(&a, &b), Err(CantorError::CurveMismatch));
    }

    #[test]
    fn genus_one_matches_affine_chord_tangent_law() {
        // Brute-force comparison against textbook affine formulas on every
        // pair of points of y^2 = x^3 + 2x + 3 over F_31.
        let m = FieldModulus::new(31).unwrap();
        let curve = Curve::new(1, Polynomial::from_u64s(m, &[3, 2, 0, 1])).unwrap();
        let pts: Vec<_> = (0..31)
            .flat_map(|x| (0..31).map(move |y| (m.elem(x), m.elem(y))))
            .filter(|&(x, y)| curve.contains(x, y))
            .collect();
        let to_div = |p: Option<(crate::field::FieldElement, crate::field::FieldElement)>| match p {
            None => ReducedDivisor::identity(&curve),
            Some((x, y)) => ReducedDivisor {
                u: Polynomial::linear_root(x),
                v: Polynomial::constant(y),
            },
        };
        for &p in &pts {
            for &q in &pts {
                let expected = if p.0 == q.0 && p.1 == -q.1 {
                    None
                } else {
                    let lambda = if p == q {
                        (m.elem(3) * p.0.square() + m.elem(2))
                            .div(m.elem(2) * p.1)
                            .unwrap()
                    } else {
                        (q.1 - p.1).div(q.0 - p.0).unwrap()
                    };
                    let x3 = lambda.square() - p.0 - q.0;
                    Some((x3, lambda * (p.0 - x3) - p.1))
                };
                let got = add_reduced(&curve, &to_div(Some(p)), &to_div(Some(q)));
                assert!(got.is_valid(&curve));
                assert_eq!(got, to_div(expected));
            }
        }
    }
}
