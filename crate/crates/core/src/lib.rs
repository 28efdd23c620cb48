//! Group-law arithmetic on Jacobians of imaginary hyperelliptic curves
//! `y^2 = f(x)`, `deg f = 2g + 1`, over odd prime fields.
//!
//! Divisor classes in general position are held in Mumford coordinates
//! `(u, v)`. [`grouplaw`] adds them with explicit rational formulas built
//! from an interpolating function `p/q`; [`cantor`] implements Cantor's
//! algorithm and serves as the reference every explicit sum is checked
//! against.
//!
//! Module map:
//!
//! - [`field`]: prime field elements, inversion, square roots
//! - [`poly`]: dense polynomials, division, gcd, interpolation
//! - [`kernels`]: composition-indexed closed forms and their iterative twins
//! - [`curve`]: curve validation, points, sampling, curve files
//! - [`mumford`]: chart membership and divisor construction
//! - [`grouplaw`]: the explicit addition, translation retry, doubling
//! - [`cantor`]: the reference group law
//! - [`cli`]: command implementations behind the `hyperjac` binary
//!
//! ```
//! use std::sync::Arc;
//! use hyperjac::{curve::Curve, field::FieldModulus, grouplaw, mumford::MumfordDivisor, poly::Polynomial};
//!
//! let m = FieldModulus::new(7).unwrap();
//! let curve = Arc::new(Curve::new(1, Polynomial::from_u64s(m, &[1, 0, 0, 1])).unwrap());
//! let p = MumfordDivisor::parse(curve.clone(), "u=[5,1]; v=[3]").unwrap();
//! let q = MumfordDivisor::parse(curve.clone(), "u=[6,1]; v=[3]").unwrap();
//! assert_eq!(grouplaw::add(&p, &q).unwrap().to_string(), "u=[3,1]; v=[4]");
//! ```

pub mod cantor;
pub mod cli;
pub mod curve;
pub mod field;
pub mod grouplaw;
pub mod kernels;
pub mod mumford;
pub mod poly;
pub mod rng;
