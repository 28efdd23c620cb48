//! Explicit rational formulas for adding two chart divisors.
//!
//! An addition runs in three stages:
//!
//! 1. [`interpolate`] finds `p/q` with `deg p = a`, `deg q = b` that
//!    agrees with `v` modulo `u` and with `v'` modulo `u'`, by solving a
//!    `g x g` linear system whose entries are the `kappa`/`lambda`
//!    closed forms;
//! 2. [`compose_u`] reads `u''` off `p^2 - f q^2 = rho u u' u''` through
//!    the product-inversion closed form;
//! 3. [`compose_v`] recovers `v''` from `p + q v'' = 0 mod u''` via the
//!    banded system `(Q + T) v'' = mu`.
//!
//! Every stage reports the degenerate situation it hits instead of
//! falling back to another algorithm. [`add_translated`] and [`double`]
//! are separate entry points that work around the two most common
//! degenerate loci.

mod linear;

pub use linear::LinearSystem;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::curve::Curve;
use crate::field::{FieldElement, FieldModulus};
use crate::kernels::{signed_composition_sums, ProductInverter, MAX_COMPOSITION_N};
use crate::mumford::{MumfordDivisor, MumfordError};
use crate::poly::Polynomial;
use crate::rng::{derive_seed, SeededRng};

/// Dummy-divisor attempts made by [`double`].
pub const DOUBLE_ATTEMPTS: usize = 16;

/// Which part of an addition failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    Interpolate,
    ComposeU,
    ComposeV,
    Closure,
    Retry,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stage::Interpolate => "interpolate",
            Stage::ComposeU => "compose_u",
            Stage::ComposeV => "compose_v",
            Stage::Closure => "closure",
            Stage::Retry => "retry",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupLawError {
    #[error("divisors live on different curves")]
    CurveMismatch,
    #[error("genus {0} exceeds the supported maximum")]
    GenusTooLarge(usize),
    #[error("u and u' share a root (gcd of degree {gcd_degree})")]
    SharedSupport { gcd_degree: usize },
    #[error("interpolation matrix M is singular (rank {rank} < {dim})")]
    SingularM { rank: usize, dim: usize },
    #[error("omega_0 = u_0 u'_0 vanishes (u_0 = {u0}, u'_0 = {u0_prime})")]
    ZeroOmega { u0: u64, u0_prime: u64 },
    #[error("rho vanishes: p/q lost its leading coefficient")]
    ZeroRho,
    #[error("matrix Q + T is singular (rank {rank} < {dim})")]
    SingularQT { rank: usize, dim: usize },
    #[error("postcondition failed in {stage}: {what}")]
    Postcondition { stage: Stage, what: &'static str },
    #[error("gave up after {attempts} attempts; last failure: {last}")]
    RetriesExhausted {
        attempts: usize,
        last: Box<GroupLawError>,
    },
    #[error("could not sample an auxiliary divisor: {0}")]
    Sampling(#[from] MumfordError),
}

impl GroupLawError {
    /// Short tag such as `SingularM`.
    pub fn name(&self) -> &'static str {
        match self {
            GroupLawError::CurveMismatch => "CurveMismatch",
            GroupLawError::GenusTooLarge(_) => "GenusTooLarge",
            GroupLawError::SharedSupport { .. } => "SharedSupport",
            GroupLawError::SingularM { .. } => "SingularM",
            GroupLawError::ZeroOmega { .. } => "ZeroOmega",
            GroupLawError::ZeroRho => "ZeroRho",
            GroupLawError::SingularQT { .. } => "SingularQT",
            GroupLawError::Postcondition { .. } => "Postcondition",
            GroupLawError::RetriesExhausted { .. } => "RetriesExhausted",
            GroupLawError::Sampling(_) => "Sampling",
        }
    }

    /// The stage an addition failed in, when the error comes from one.
    pub fn stage(&self) -> Option<Stage> {
        match self {
            GroupLawError::SharedSupport { .. } | GroupLawError::SingularM { .. } => {
                Some(Stage::Interpolate)
            }
            GroupLawError::ZeroOmega { .. } | GroupLawError::ZeroRho => Some(Stage::ComposeU),
            GroupLawError::SingularQT { .. } => Some(Stage::ComposeV),
            GroupLawError::Postcondition { stage, .. } => Some(*stage),
            GroupLawError::RetriesExhausted { .. } | GroupLawError::Sampling(_) => {
                Some(Stage::Retry)
            }
            GroupLawError::CurveMismatch | GroupLawError::GenusTooLarge(_) => None,
        }
    }
}

/// Degree bookkeeping that depends only on the genus.
///
/// `a = deg p = (3g - eps)/2`, `b = deg q = (g - 2 + eps)/2`,
/// `d = a - g = (g - eps)/2`, with `eps = g mod 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenusProfile {
    pub g: usize,
    pub epsilon: usize,
    pub a: usize,
    pub b: usize,
    pub d: usize,
}

impl GenusProfile {
    pub fn new(g: usize) -> Result<Self, GroupLawError> {
        if g == 0 || g > MAX_COMPOSITION_N {
            return Err(GroupLawError::GenusTooLarge(g));
        }
        let epsilon = g % 2;
        Ok(GenusProfile {
            g,
            epsilon,
            a: (3 * g - epsilon) / 2,
            b: (g + epsilon - 2) / 2,
            d: (g - epsilon) / 2,
        })
    }
}

/// The rational function `p/q`, defined up to a common nonzero scalar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interpolant {
    pub p: Polynomial,
    pub q: Polynomial,
}

impl Interpolant {
    pub fn scale(&self, t: FieldElement) -> Interpolant {
        Interpolant {
            p: self.p.scale(t),
            q: self.q.scale(t),
        }
    }

    /// Rescales so that `q_0 = 1`; `None` when `q_0 = 0`.
    pub fn normalized(&self) -> Option<Interpolant> {
        let q0 = self.q.coeff(0).inv().ok()?;
        Some(self.scale(q0))
    }
}

/// How the interpolation system is solved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SolveMethod {
    /// Elimination with the normalization `q_0 = 1`.
    #[default]
    Gaussian,
    /// Literal Cramer determinants: `q_0 = det M`, the rest from `det M_j`.
    Cramer,
}

/// Composition sums `c_t = sum over S_t of (-1)^|sigma| prod u_(g - sigma_r)`
/// for `t = 0..=d`.
fn kappa_inner(u: &Polynomial, profile: &GenusProfile) -> Vec<FieldElement> {
    let g = profile.g as i64;
    signed_composition_sums(u.modulus(), profile.d, |part| u.coeff(g - part as i64))
        .expect("d is within the composition table")
}

fn kappa_from_inner(
    u: &Polynomial,
    profile: &GenusProfile,
    inner: &[FieldElement],
    i: i64,
    l: usize,
) -> FieldElement {
    let d = profile.d as i64;
    (l..=profile.d).fold(u.modulus().zero(), |acc, m| {
        acc + u.coeff(i - d + m as i64) * inner[m - l]
    })
}

/// `kappa_(i,l) = sum_(l <= m <= d) u_(i-d+m) sum_(S_(m-l)) (-1)^|sigma| prod u_(g-sigma_r)`.
pub fn kappa(u: &Polynomial, profile: &GenusProfile, i: i64, l: usize) -> FieldElement {
    assert!(l <= profile.d, "l must lie in 0..=d");
    kappa_from_inner(u, profile, &kappa_inner(u, profile), i, l)
}

/// `lambda_(i,j) = -v_(i-j) + sum_(0 <= l <= d) v_(a-j-l) kappa_(i,l)`.
pub fn lambda_coeff(
    u: &Polynomial,
    v: &Polynomial,
    profile: &GenusProfile,
    i: i64,
    j: usize,
) -> FieldElement {
    assert!(j <= profile.b, "j must lie in 0..=b");
    let inner = kappa_inner(u, profile);
    lambda_from(v, profile, i, j, |l| {
        kappa_from_inner(u, profile, &inner, i, l)
    })
}

fn lambda_from(
    v: &Polynomial,
    profile: &GenusProfile,
    i: i64,
    j: usize,
    kappa_at: impl Fn(usize) -> FieldElement,
) -> FieldElement {
    let a = profile.a as i64;
    let j = j as i64;
    (0..=profile.d).fold(-v.coeff(i - j), |acc, l| {
        acc + v.coeff(a - j - l as i64) * kappa_at(l)
    })
}

/// `kappa` rows `0..g` (columns `0..=d`) and `lambda` rows `0..g` (columns `0..=b`).
struct Tables {
    kappa: Vec<Vec<FieldElement>>,
    lambda: Vec<Vec<FieldElement>>,
}

fn kappa_rows(u: &Polynomial, profile: &GenusProfile) -> Vec<Vec<FieldElement>> {
    let inner = kappa_inner(u, profile);
    (0..profile.g as i64)
        .map(|i| {
            (0..=profile.d)
                .map(|l| kappa_from_inner(u, profile, &inner, i, l))
                .collect()
        })
        .collect()
}

fn tables(u: &Polynomial, v: &Polynomial, profile: &GenusProfile) -> Tables {
    let kappa = kappa_rows(u, profile);
    let lambda = kappa
        .iter()
        .enumerate()
        .map(|(i, row)| {
            (0..=profile.b)
                .map(|j| lambda_from(v, profile, i as i64, j, |l| row[l]))
                .collect()
        })
        .collect();
    Tables { kappa, lambda }
}

fn check_same_curve(d1: &MumfordDivisor, d2: &MumfordDivisor) -> Result<(), GroupLawError> {
    if d1.curve() != d2.curve() {
        return Err(GroupLawError::CurveMismatch);
    }
    Ok(())
}

/// Builds the interpolation system for `D` and `D'`.
pub fn interpolation_system(
    d1: &MumfordDivisor,
    d2: &MumfordDivisor,
) -> Result<LinearSystem, GroupLawError> {
    check_same_curve(d1, d2)?;
    let profile = GenusProfile::new(d1.genus())?;
    let t1 = tables(d1.u(), d1.v(), &profile);
    let t2 = tables(d2.u(), d2.v(), &profile);
    Ok(assemble_m(&profile, &t1, &t2))
}

fn assemble_m(profile: &GenusProfile, t1: &Tables, t2: &Tables) -> LinearSystem {
    let (g, d) = (profile.g, profile.d);
    let matrix = (0..g)
        .map(|i| {
            let mut row = Vec::with_capacity(g);
            for col in 0..=d {
                let l = d - col;
                row.push(t1.kappa[i][l] - t2.kappa[i][l]);
            }
            for j in 1..=profile.b {
                row.push(t2.lambda[i][j] - t1.lambda[i][j]);
            }
            row
        })
        .collect();
    let rhs = (0..g).map(|i| t1.lambda[i][0] - t2.lambda[i][0]).collect();
    LinearSystem::new(matrix, rhs)
}

/// The interpolant through `D` and `D'` with `q_0 = 1`.
pub fn interpolate(d1: &MumfordDivisor, d2: &MumfordDivisor) -> Result<Interpolant, GroupLawError> {
    interpolate_with(d1, d2, SolveMethod::Gaussian)
}

/// The interpolant through `D` and `D'`.
///
/// The rank of `M` is checked before the supports, so `D = D'` always
/// reports [`GroupLawError::SingularM`].
pub fn interpolate_with(
    d1: &MumfordDivisor,
    d2: &MumfordDivisor,
    method: SolveMethod,
) -> Result<Interpolant, GroupLawError> {
    check_same_curve(d1, d2)?;
    let profile = GenusProfile::new(d1.genus())?;
    let m = d1.curve().modulus();
    let t1 = tables(d1.u(), d1.v(), &profile);
    let t2 = tables(d2.u(), d2.v(), &profile);
    let system = assemble_m(&profile, &t1, &t2);
    let (g, d, a, b) = (profile.g, profile.d, profile.a, profile.b);

    // unknowns (p_g..p_a | q_1..q_b) scaled by q_0
    let (q0, unknowns) = match method {
        SolveMethod::Gaussian => {
            let x = system
                .solve()
                .map_err(|rank| GroupLawError::SingularM { rank, dim: g })?;
            (m.one(), x)
        }
        SolveMethod::Cramer => {
            let (det, minors) = system.cramer();
            if det.is_zero() {
                return Err(GroupLawError::SingularM {
                    rank: system.rank(),
                    dim: g,
                });
            }
            (det, minors)
        }
    };

    let gcd = d1.u().gcd(d2.u()).expect("u is nonzero");
    if gcd.degree() != Some(0) {
        return Err(GroupLawError::SharedSupport {
            gcd_degree: gcd.degree().unwrap_or(0),
        });
    }

    let mut p = vec![m.zero(); a + 1];
    p[g..=a].copy_from_slice(&unknowns[..=d]);
    let mut q = vec![m.zero(); b + 1];
    q[0] = q0;
    q[1..=b].copy_from_slice(&unknowns[d + 1..]);
    for (i, slot) in p.iter_mut().enumerate().take(g) {
        let from_p = (0..=d).fold(m.zero(), |acc, l| acc + unknowns[d - l] * t1.kappa[i][l]);
        let from_q = (0..=b).fold(m.zero(), |acc, j| acc + q[j] * t1.lambda[i][j]);
        *slot = from_p - from_q;
    }
    let interp = Interpolant {
        p: Polynomial::new(m, p),
        q: Polynomial::new(m, q),
    };

    let agrees = |div: &MumfordDivisor| {
        (&interp.p - &(&interp.q * div.v()))
            .rem(div.u())
            .expect("u is nonzero")
            .is_zero()
    };
    if !agrees(d1) || !agrees(d2) {
        return Err(GroupLawError::Postcondition {
            stage: Stage::Interpolate,
            what: "p - q v is not divisible by u",
        });
    }
    Ok(interp)
}

/// `rho = p_a^2 (1 - eps) - f_(2g+1) q_b^2 eps`, the leading coefficient of `p^2 - f q^2`.
pub fn rho(curve: &Curve, interp: &Interpolant) -> Result<FieldElement, GroupLawError> {
    let profile = GenusProfile::new(curve.genus())?;
    let m = curve.modulus();
    let eps = m.elem(profile.epsilon as u64);
    let pa = interp.p.coeff(profile.a as i64);
    let qb = interp.q.coeff(profile.b as i64);
    let lead_f = curve.f().coeff(2 * profile.g as i64 + 1);
    Ok(pa.square() * (m.one() - eps) - lead_f * qb.square() * eps)
}

/// `u''` from `p^2 - f q^2 = rho u u' u''`.
pub fn compose_u(
    curve: &Curve,
    d1: &MumfordDivisor,
    d2: &MumfordDivisor,
    interp: &Interpolant,
) -> Result<Polynomial, GroupLawError> {
    let profile = GenusProfile::new(curve.genus())?;
    let m = curve.modulus();
    let g = profile.g as i64;
    let (u, u2) = (d1.u(), d2.u());

    let omega: Vec<FieldElement> = (0..=2 * g)
        .map(|j| (0..=j).fold(m.zero(), |acc, i| acc + u.coeff(i) * u2.coeff(j - i)))
        .collect();
    if omega[0].is_zero() {
        return Err(GroupLawError::ZeroOmega {
            u0: u.coeff(0).value(),
            u0_prime: u2.coeff(0).value(),
        });
    }
    let rho = rho(curve, interp)?;
    if rho.is_zero() {
        return Err(GroupLawError::ZeroRho);
    }

    let (p, q, f) = (&interp.p, &interp.q, curve.f());
    let eta = |k: i64| {
        (0..=k).fold(m.zero(), |acc, j| {
            let qq = (0..=j).fold(m.zero(), |s, i| s + q.coeff(i) * q.coeff(j - i));
            acc + p.coeff(j) * p.coeff(k - j) - f.coeff(k - j) * qq
        })
    };
    let rho_inv = rho.inv().expect("rho is nonzero");
    let scaled_eta: Vec<FieldElement> = (0..=g).map(|k| eta(k) * rho_inv).collect();
    let omega_poly = Polynomial::new(m, omega);
    let inverter = ProductInverter::new(&omega_poly, profile.g).expect("omega_0 is nonzero");
    let u3 = Polynomial::new(
        m,
        (0..=profile.g)
            .map(|j| inverter.coefficient(&scaled_eta, j))
            .collect(),
    );

    if u3.degree() != Some(profile.g) || !u3.is_monic() {
        return Err(GroupLawError::Postcondition {
            stage: Stage::ComposeU,
            what: "u'' is not monic of degree g",
        });
    }
    let lhs = &(p * p) - &(f * &(q * q));
    let rhs = (&(u * u2) * &u3).scale(rho);
    if lhs != rhs {
        return Err(GroupLawError::Postcondition {
            stage: Stage::ComposeU,
            what: "p^2 - f q^2 != rho u u' u''",
        });
    }
    Ok(u3)
}

/// Builds `(Q + T) v'' = mu` for a given `u''`.
pub fn v_system(
    curve: &Curve,
    interp: &Interpolant,
    u3: &Polynomial,
) -> Result<LinearSystem, GroupLawError> {
    let profile = GenusProfile::new(curve.genus())?;
    let m = curve.modulus();
    let (g, d, a, eps) = (profile.g, profile.d, profile.a as i64, profile.epsilon);
    let (p, q) = (&interp.p, &interp.q);
    let kappa = kappa_rows(u3, &profile);

    let matrix = (0..g)
        .map(|i| {
            (0..g)
                .map(|s| {
                    let banded = q.coeff(i as i64 - s as i64);
                    if s <= d {
                        return banded;
                    }
                    // tau_(i,s) = -sum_(m = g+1-eps)^(d+s) q_(a-m) kappa''_(i,m-s)
                    let tau = ((g + 1 - eps)..=(d + s)).fold(m.zero(), |acc, mm| {
                        acc - q.coeff(a - mm as i64) * kappa[i][mm - s]
                    });
                    banded + tau
                })
                .collect()
        })
        .collect();
    let rhs = (0..g)
        .map(|i| {
            (0..=d).fold(-p.coeff(i as i64), |acc, l| {
                acc + p.coeff(a - l as i64) * kappa[i][l]
            })
        })
        .collect();
    Ok(LinearSystem::new(matrix, rhs))
}

/// `v''` from `p + q v'' = 0 mod u''`.
pub fn compose_v(
    curve: &Curve,
    interp: &Interpolant,
    u3: &Polynomial,
) -> Result<Polynomial, GroupLawError> {
    let system = v_system(curve, interp, u3)?;
    let g = curve.genus();
    let v3 = system
        .solve()
        .map_err(|rank| GroupLawError::SingularQT { rank, dim: g })?;
    let v3 = Polynomial::new(curve.modulus(), v3);
    let residue = (&interp.p + &(&interp.q * &v3))
        .rem(u3)
        .expect("u'' is nonzero");
    if !residue.is_zero() {
        return Err(GroupLawError::Postcondition {
            stage: Stage::ComposeV,
            what: "p + q v'' is not divisible by u''",
        });
    }
    Ok(v3)
}

/// Intermediate data of one explicit addition.
#[derive(Debug, Clone)]
pub struct AdditionTrace {
    pub interpolant: Interpolant,
    pub rho: FieldElement,
    pub sum: MumfordDivisor,
}

/// `[D] + [D']` by the explicit formulas, keeping the intermediates.
pub fn add_traced(
    d1: &MumfordDivisor,
    d2: &MumfordDivisor,
    method: SolveMethod,
) -> Result<AdditionTrace, GroupLawError> {
    let interpolant = interpolate_with(d1, d2, method)?;
    let curve = d1.curve();
    let u3 = compose_u(curve, d1, d2, &interpolant)?;
    let v3 = compose_v(curve, &interpolant, &u3)?;
    let rho = rho(curve, &interpolant)?;
    let sum =
        MumfordDivisor::new(curve.clone(), u3, v3).map_err(|_| GroupLawError::Postcondition {
            stage: Stage::Closure,
            what: "(u'', v'') is not on the chart",
        })?;
    Ok(AdditionTrace {
        interpolant,
        rho,
        sum,
    })
}

/// `[D] + [D']` by the explicit formulas.
pub fn add(d1: &MumfordDivisor, d2: &MumfordDivisor) -> Result<MumfordDivisor, GroupLawError> {
    Ok(add_traced(d1, d2, SolveMethod::Gaussian)?.sum)
}

/// `-[D]`, i.e. `(u, -v)`.
pub fn negate(d: &MumfordDivisor) -> MumfordDivisor {
    d.negate()
}

/// Result of [`add_translated`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslatedSum {
    pub sum: MumfordDivisor,
    /// Number of translations tried; zero when the plain addition worked.
    pub retries: usize,
}

/// [`add`], retrying under random translations `x -> x + c` when an
/// x-coordinate is zero.
pub fn add_translated(
    d1: &MumfordDivisor,
    d2: &MumfordDivisor,
    max_retries: usize,
    seed: u64,
) -> Result<TranslatedSum, GroupLawError> {
    let mut last = match add(d1, d2) {
        Ok(sum) => return Ok(TranslatedSum { sum, retries: 0 }),
        Err(e @ GroupLawError::ZeroOmega { .. }) => e,
        Err(e) => return Err(e),
    };
    let curve = d1.curve();
    let m: FieldModulus = curve.modulus();
    let mut rng = SeededRng::new(seed);
    for attempt in 1..=max_retries {
        let c = rng.nonzero_element(m);
        let shifted = Arc::new(curve.translate(c));
        let t1 = d1.translate(shifted.clone(), c)?;
        let t2 = d2.translate(shifted.clone(), c)?;
        match add(&t1, &t2) {
            Ok(sum) => {
                let back =
                    sum.translate(curve.clone(), -c)
                        .map_err(|_| GroupLawError::Postcondition {
                            stage: Stage::Closure,
                            what: "translated sum left the chart",
                        })?;
                return Ok(TranslatedSum {
                    sum: back,
                    retries: attempt,
                });
            }
            Err(e @ GroupLawError::ZeroOmega { .. }) => last = e,
            Err(e) => return Err(e),
        }
    }
    Err(GroupLawError::RetriesExhausted {
        attempts: max_retries,
        last: Box::new(last),
    })
}

/// `2[D]` as `(([D] + [E]) + [D]) - [E]` for a random dummy `E`.
pub fn double(d: &MumfordDivisor, dummy_seed: u64) -> Result<MumfordDivisor, GroupLawError> {
    let curve = d.curve();
    let mut last = None;
    for attempt in 0..DOUBLE_ATTEMPTS {
        let e = match MumfordDivisor::random(
            curve.clone(),
            derive_seed(dummy_seed, attempt as u64),
            true,
        ) {
            Ok(e) => e,
            Err(err) => {
                last = Some(GroupLawError::Sampling(err));
                continue;
            }
        };
        let chain = add(d, &e)
            .and_then(|de| add(&de, d))
            .and_then(|dde| add(&dde, &e.negate()));
        match chain {
            Ok(sum) => return Ok(sum),
            Err(err) => last = Some(err),
        }
    }
    Err(GroupLawError::RetriesExhausted {
        attempts: DOUBLE_ATTEMPTS,
        last: Box::new(last.expect("at least one attempt")),
    })
}
