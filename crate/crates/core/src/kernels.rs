//! Closed forms indexed by integer compositions.
//!
//! Two coefficient formulas drive the explicit group law:
//!
//! * iterated reduction: the coefficients of the `n`th iterate of
//!   `A_n = A_{n-1} - x^(d-n) [A_{n-1}]_(k-n) beta`, `A_{-1} = alpha`,
//!   written as a sum over compositions;
//! * product inversion: the coefficients of `beta = alpha / gamma` for
//!   power series with `gamma_0 != 0`, likewise as a sum over compositions.
//!
//! Each closed form is paired with a direct iterative computation so the
//! two can be compared coefficient by coefficient.
//!
//! The inner composition sums depend only on the composition size, never
//! on the output index, so both kernels compute them once per size and
//! reuse them across a whole row of coefficients.

use std::sync::OnceLock;

use thiserror::Error;

use crate::field::{FieldElement, FieldModulus};
use crate::poly::Polynomial;

/// Largest `n` for which compositions are enumerated.
pub const MAX_COMPOSITION_N: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("composition size {0} outside 0..={MAX_COMPOSITION_N}")]
    NOutOfRange(i64),
    #[error("coefficient at negative exponent {0} did not cancel")]
    NegativeExponentResidue(i64),
    #[error("constant term of the divisor series is zero")]
    ZeroConstantTerm,
}

/// An ordered sequence of positive parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Composition<'a> {
    parts: &'a [u8],
}

impl<'a> Composition<'a> {
    pub fn parts(&self) -> &'a [u8] {
        self.parts
    }

    /// Number of parts, `|sigma|`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }
}

/// All compositions of one integer, stored flat.
#[derive(Debug)]
pub struct CompositionSet {
    n: usize,
    parts: Vec<u8>,
    ends: Vec<u32>,
}

impl CompositionSet {
    fn build(n: usize) -> Self {
        fn walk(rest: usize, prefix: &mut Vec<u8>, set: &mut CompositionSet) {
            if rest == 0 {
                set.parts.extend_from_slice(prefix);
                set.ends.push(set.parts.len() as u32);
                return;
            }
            for first in 1..=rest {
                prefix.push(first as u8);
                walk(rest - first, prefix, set);
                prefix.pop();
            }
        }
        let mut set = CompositionSet {
            n,
            parts: Vec::new(),
            ends: Vec::new(),
        };
        walk(n, &mut Vec::with_capacity(n), &mut set);
        set
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.ends.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ends.is_empty()
    }

    pub fn get(&self, idx: usize) -> Composition<'_> {
        let start = if idx == 0 {
            0
        } else {
            self.ends[idx - 1] as usize
        };
        Composition {
            parts: &self.parts[start..self.ends[idx] as usize],
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Composition<'_>> + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }
}

static TABLE: [OnceLock<CompositionSet>; MAX_COMPOSITION_N + 1] =
    [const { OnceLock::new() }; MAX_COMPOSITION_N + 1];

/// The compositions of `n` in lexicographic order, memoized per `n`.
///
/// `compositions(0)` holds exactly the empty composition.
pub fn compositions(n: usize) -> Result<&'static CompositionSet, KernelError> {
    if n > MAX_COMPOSITION_N {
        return Err(KernelError::NOutOfRange(n as i64));
    }
    Ok(TABLE[n].get_or_init(|| CompositionSet::build(n)))
}

/// `sum over sigma in S_n of (-1)^|sigma| * prod_r weight(sigma_r)`.
pub fn signed_composition_sum(
    modulus: FieldModulus,
    n: usize,
    weight: impl Fn(usize) -> FieldElement,
) -> Result<FieldElement, KernelError> {
    let weights: Vec<FieldElement> = (0..=n)
        .map(|part| {
            if part == 0 {
                modulus.one()
            } else {
                weight(part)
            }
        })
        .collect();
    let mut total = modulus.zero();
    for sigma in compositions(n)?.iter() {
        let prod = sigma
            .parts()
            .iter()
            .fold(modulus.one(), |acc, &part| acc * weights[part as usize]);
        if sigma.len() % 2 == 1 {
            total -= prod;
        } else {
            total += prod;
        }
    }
    Ok(total)
}

/// Signed composition sums for every size `0..=n_max`.
pub fn signed_composition_sums(
    modulus: FieldModulus,
    n_max: usize,
    weight: impl Fn(usize) -> FieldElement,
) -> Result<Vec<FieldElement>, KernelError> {
    (0..=n_max)
        .map(|m| signed_composition_sum(modulus, m, &weight))
        .collect()
}

/// Closed form for the iterated reduction of `alpha` by `beta` with
/// order `d`, index `k`, evaluated for one fixed iterate `n`.
#[derive(Debug, Clone)]
pub struct ReductionKernel {
    d: i64,
    k: i64,
    n: i64,
    beta: Polynomial,
    /// `inner[t] = sum over S_t of (-1)^|sigma| prod beta_(k-d-sigma_r)`.
    inner: Vec<FieldElement>,
}

impl ReductionKernel {
    pub fn new(beta: &Polynomial, d: i64, k: i64, n: i64) -> Result<Self, KernelError> {
        if n > MAX_COMPOSITION_N as i64 {
            return Err(KernelError::NOutOfRange(n));
        }
        let inner = if n < 0 {
            Vec::new()
        } else {
            signed_composition_sums(beta.modulus(), n as usize, |part| {
                beta.coeff(k - d - part as i64)
            })?
        };
        Ok(ReductionKernel {
            d,
            k,
            n,
            beta: beta.clone(),
            inner,
        })
    }

    /// Composition sum for size `t`.
    pub fn inner_sum(&self, t: usize) -> FieldElement {
        self.inner[t]
    }

    /// `[A_n]_i` for an arbitrary `alpha`.
    pub fn coefficient(&self, alpha: &Polynomial, i: i64) -> FieldElement {
        let mut acc = alpha.coeff(i);
        for m in 0..=self.n {
            let b = self.beta.coeff(i - self.d + m);
            if b.is_zero() {
                continue;
            }
            for l in 0..=m {
                acc -= alpha.coeff(self.k - l) * b * self.inner[(m - l) as usize];
            }
        }
        acc
    }
}

/// `[A_n]_i` by the closed form. For `n < 0` this is `alpha_i`.
pub fn reduction_coefficient(
    alpha: &Polynomial,
    beta: &Polynomial,
    d: i64,
    k: i64,
    n: i64,
    i: i64,
) -> Result<FieldElement, KernelError> {
    Ok(ReductionKernel::new(beta, d, k, n)?.coefficient(alpha, i))
}

/// `A_n` by running the recurrence directly on Laurent series.
///
/// Fails if a coefficient at a negative power of `x` survives.
pub fn reduction_iterative(
    alpha: &Polynomial,
    beta: &Polynomial,
    d: i64,
    k: i64,
    n: i64,
) -> Result<Polynomial, KernelError> {
    let m = alpha.modulus();
    // coefficient of x^e lives at index e - low
    let mut low: i64 = 0;
    let mut acc: Vec<FieldElement> = alpha.coeffs().to_vec();
    let read = |acc: &Vec<FieldElement>, low: i64, e: i64| {
        let idx = e - low;
        if idx < 0 {
            m.zero()
        } else {
            acc.get(idx as usize).copied().unwrap_or_else(|| m.zero())
        }
    };
    for step in 0..=n {
        let c = read(&acc, low, k - step);
        if c.is_zero() {
            continue;
        }
        let shift = d - step;
        let Some(beta_deg) = beta.degree() else {
            continue;
        };
        if shift < low {
            let grow = (low - shift) as usize;
            let mut grown = vec![m.zero(); grow];
            grown.extend(acc);
            acc = grown;
            low = shift;
        }
        let top = (shift + beta_deg as i64 - low) as usize;
        if acc.len() <= top {
            acc.resize(top + 1, m.zero());
        }
        for (j, &b) in beta.coeffs().iter().enumerate() {
            let idx = (shift + j as i64 - low) as usize;
            acc[idx] -= c * b;
        }
    }
    for (idx, c) in acc.iter().enumerate() {
        let e = low + idx as i64;
        if e >= 0 {
            break;
        }
        if !c.is_zero() {
            return Err(KernelError::NegativeExponentResidue(e));
        }
    }
    let skip = (-low).max(0) as usize;
    Ok(Polynomial::new(m, acc.into_iter().skip(skip).collect()))
}

/// Closed form for the coefficients of `alpha / gamma` as power series.
#[derive(Debug, Clone)]
pub struct ProductInverter {
    gamma0_inv: FieldElement,
    /// `inner[t] = sum over S_t of (-1)^|sigma| / gamma_0^|sigma| prod gamma_(sigma_r)`.
    inner: Vec<FieldElement>,
}

impl ProductInverter {
    pub fn new(gamma: &Polynomial, k_max: usize) -> Result<Self, KernelError> {
        let gamma0 = gamma.coeff(0);
        let gamma0_inv = gamma0.inv().map_err(|_| KernelError::ZeroConstantTerm)?;
        let inner = signed_composition_sums(gamma.modulus(), k_max, |part| {
            gamma.coeff(part as i64) * gamma0_inv
        })?;
        Ok(ProductInverter { gamma0_inv, inner })
    }

    /// `beta_k` where `alpha` lists the power-series coefficients of the product.
    pub fn coefficient(&self, alpha: &[FieldElement], k: usize) -> FieldElement {
        let modulus = self.gamma0_inv.modulus();
        (0..=k).fold(modulus.zero(), |acc, j| {
            let a = alpha.get(j).copied().unwrap_or_else(|| modulus.zero());
            acc + a * self.gamma0_inv * self.inner[k - j]
        })
    }
}

/// `beta_k` for `alpha = beta * gamma`, by the closed form.
pub fn product_inversion(
    alpha: &Polynomial,
    gamma: &Polynomial,
    k: usize,
) -> Result<FieldElement, KernelError> {
    Ok(ProductInverter::new(gamma, k)?.coefficient(alpha.coeffs(), k))
}
