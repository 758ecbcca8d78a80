//! Edge-Wiener and edge-hyper-Wiener indices, and conversion between the two
//! edge-distance conventions.
//!
//! `W_e = H_e'(1)` and `WW_e = H_e'(1) + H_e''(1) / 2`. Both are computed in a
//! caller-chosen integer width (`u128` by default) with checked arithmetic, so
//! a width that is too narrow reports [`IndexError::Overflow`] instead of
//! wrapping.

use thiserror::Error;

use crate::poly::{Coefficient, PolyError, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("index value overflows the {0}-bit accumulator")]
    Overflow(u32),
    #[error("constant term {found} does not match the edge count {edges}")]
    ConstantTermMismatch { edges: u64, found: u64 },
}

/// Integer widths the indices can be accumulated in.
pub trait IndexWidth: Coefficient + From<u64> {
    const BITS: u32;
}

impl IndexWidth for u64 {
    const BITS: u32 = 64;
}

impl IndexWidth for u128 {
    const BITS: u32 = 128;
}

fn overflow<W: IndexWidth>(_: PolyError) -> IndexError {
    IndexError::Overflow(W::BITS)
}

pub fn edge_wiener_in<W: IndexWidth>(p: &Polynomial) -> Result<W, IndexError> {
    p.widen::<W>()
        .derivative()
        .and_then(|d| d.eval_at_one())
        .map_err(overflow::<W>)
}

/// Accumulated as `sum_k k(k+1)/2 * c_k`, so overflow is reported only when
/// the index itself does not fit.
pub fn edge_hyper_wiener_in<W: IndexWidth>(p: &Polynomial) -> Result<W, IndexError> {
    let overflow = IndexError::Overflow(W::BITS);
    p.coeffs().iter().enumerate().try_fold(W::zero(), |acc, (k, &c)| {
        let k = k as u128;
        let pairs = u64::try_from(k * (k + 1) / 2).map_err(|_| overflow.clone())?;
        W::from(pairs)
            .checked_mul(&W::from(c))
            .and_then(|t| acc.checked_add(&t))
            .ok_or(overflow.clone())
    })
}

/// `H_e'(1)` in 128 bits.
pub fn edge_wiener(p: &Polynomial) -> Result<u128, IndexError> {
    edge_wiener_in::<u128>(p)
}

/// `H_e'(1) + H_e''(1) / 2` in 128 bits.
pub fn edge_hyper_wiener(p: &Polynomial) -> Result<u128, IndexError> {
    edge_hyper_wiener_in::<u128>(p)
}

/// `Ĥ_e = (H_e - m) / x + m`.
pub fn to_hat(p: &Polynomial, edges: u64) -> Result<Polynomial, IndexError> {
    let found = p.coeff(0);
    if found != edges {
        return Err(IndexError::ConstantTermMismatch { edges, found });
    }
    let mut coeffs = p.coeffs().get(1..).unwrap_or_default().to_vec();
    if coeffs.is_empty() {
        coeffs.push(0);
    }
    coeffs[0] = coeffs[0].checked_add(edges).ok_or(IndexError::Overflow(64))?;
    Ok(Polynomial::new(coeffs))
}

/// `H_e = x (Ĥ_e - m) + m`.
pub fn from_hat(q: &Polynomial, edges: u64) -> Result<Polynomial, IndexError> {
    let found = q.coeff(0);
    if found < edges {
        return Err(IndexError::ConstantTermMismatch { edges, found });
    }
    let mut coeffs = Vec::with_capacity(q.coeffs().len() + 1);
    coeffs.push(edges);
    coeffs.push(found - edges);
    coeffs.extend_from_slice(q.coeffs().get(1..).unwrap_or_default());
    Ok(Polynomial::new(coeffs))
}

/// Scalar summary of an edge-Hosoya polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexReport {
    pub edge_count: u64,
    pub degree: usize,
    pub edge_wiener: u128,
    pub edge_hyper_wiener: u128,
    pub polynomial: Polynomial,
}

impl IndexReport {
    pub fn from_polynomial(polynomial: Polynomial) -> Result<Self, IndexError> {
        Self::from_polynomial_in::<u128>(polynomial)
    }

    /// Accumulates the indices in width `W` before widening them for the report.
    pub fn from_polynomial_in<W: IndexWidth + Into<u128>>(polynomial: Polynomial) -> Result<Self, IndexError> {
        let edge_wiener = edge_wiener_in::<W>(&polynomial)?.into();
        let edge_hyper_wiener = edge_hyper_wiener_in::<W>(&polynomial)?.into();
        Ok(Self {
            edge_count: polynomial.coeff(0),
            degree: polynomial.degree().unwrap_or(0),
            edge_wiener,
            edge_hyper_wiener,
            polynomial,
        })
    }
}
