//! Dense univariate polynomials with exact, overflow-checked integer coefficients.
//!
//! `coeffs[k]` holds the coefficient of `x^k`. Trailing zeros are always trimmed,
//! so the zero polynomial is the empty vector.
//!
//! Distance-counting polynomials use [`Polynomial`] (`u64` coefficients). Closed-form
//! numerators carry negative coefficients and are built as [`SignedPolynomial`]
//! (`i128`), divided exactly, and converted back with [`Poly::to_unsigned`].

use std::fmt;

use num_traits::{CheckedAdd, CheckedMul, CheckedNeg, CheckedSub, One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("integer overflow in polynomial arithmetic")]
    Overflow,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("divisor leading coefficient must be 1 or -1")]
    NonUnitLeading,
    #[error("division left a nonzero remainder of degree {degree}")]
    NonZeroRemainder { degree: usize },
    #[error("negative coefficient {value} at x^{index}")]
    NegativeCoefficient { index: usize, value: String },
}

/// Integer types usable as polynomial coefficients.
pub trait Coefficient:
    Copy
    + Eq
    + Ord
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + Send
    + Sync
    + 'static
{
    fn from_usize(n: usize) -> Option<Self>;
}

macro_rules! impl_coefficient {
    ($($t:ty),*) => {
        $(impl Coefficient for $t {
            fn from_usize(n: usize) -> Option<Self> {
                <$t>::try_from(n).ok()
            }
        })*
    };
}

impl_coefficient!(u64, u128, i64, i128);

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

/// Polynomial with non-negative coefficients: every distance-counting polynomial.
pub type Polynomial = Poly<u64>;
/// Signed intermediate form used for closed-form numerators.
pub type SignedPolynomial = Poly<i128>;

impl<C: Coefficient> Poly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: C, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).copied().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<C> {
        self.coeffs.last().copied()
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = long.coeffs.clone();
        for (o, s) in out.iter_mut().zip(&short.coeffs) {
            *o = o.checked_add(s).ok_or(PolyError::Overflow)?;
        }
        Ok(Self::new(out))
    }

    /// Coefficient-wise difference. For unsigned coefficients a negative result
    /// surfaces as [`PolyError::Overflow`].
    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let out = (0..len)
            .map(|k| self.coeff(k).checked_sub(&other.coeff(k)).ok_or(PolyError::Overflow))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(out))
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + k);
        coeffs.resize(k, C::zero());
        coeffs.extend_from_slice(&self.coeffs);
        Self { coeffs }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut out = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let term = a.checked_mul(b).ok_or(PolyError::Overflow)?;
                out[i + j] = out[i + j].checked_add(&term).ok_or(PolyError::Overflow)?;
            }
        }
        Ok(Self::new(out))
    }

    pub fn scale(&self, c: C) -> Result<Self, PolyError> {
        let out = self
            .coeffs
            .iter()
            .map(|a| a.checked_mul(&c).ok_or(PolyError::Overflow))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(out))
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Result<Self, PolyError> {
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| {
                C::from_usize(k)
                    .and_then(|k| k.checked_mul(c))
                    .ok_or(PolyError::Overflow)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(out))
    }

    /// Value at `x = 1`, i.e. the coefficient sum.
    pub fn eval_at_one(&self) -> Result<C, PolyError> {
        self.coeffs.iter().try_fold(C::zero(), |acc, c| {
            acc.checked_add(c).ok_or(PolyError::Overflow)
        })
    }

    /// Re-expresses the coefficients in another integer type, failing if any
    /// coefficient does not fit.
    pub fn convert<D: Coefficient + TryFrom<C>>(&self) -> Result<Poly<D>, PolyError> {
        let out = self
            .coeffs
            .iter()
            .map(|&c| D::try_from(c).map_err(|_| PolyError::Overflow))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly { coeffs: out })
    }
}

impl<C: Coefficient + CheckedNeg> Poly<C> {
    /// Exact division by a divisor whose leading coefficient is `1` or `-1`.
    ///
    /// Classical long division; any nonzero remainder is an error rather than
    /// being discarded.
    pub fn divide_exact(&self, divisor: &Self) -> Result<Self, PolyError> {
        let lead = divisor.leading_coeff().ok_or(PolyError::DivisionByZero)?;
        let lead_is_neg = if lead == C::one() {
            false
        } else if Some(lead) == C::one().checked_neg() {
            true
        } else {
            return Err(PolyError::NonUnitLeading);
        };
        let dn = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dn {
            return if self.is_zero() {
                Ok(Self::zero())
            } else {
                Err(PolyError::NonZeroRemainder { degree: rem.len() - 1 })
            };
        }
        let mut quot = vec![C::zero(); rem.len() - dn];
        for i in (0..quot.len()).rev() {
            let top = rem[i + dn];
            if top.is_zero() {
                continue;
            }
            let q = if lead_is_neg {
                top.checked_neg().ok_or(PolyError::Overflow)?
            } else {
                top
            };
            quot[i] = q;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                let t = q.checked_mul(d).ok_or(PolyError::Overflow)?;
                rem[i + j] = rem[i + j].checked_sub(&t).ok_or(PolyError::Overflow)?;
            }
        }
        if let Some(degree) = rem.iter().rposition(|c| !c.is_zero()) {
            return Err(PolyError::NonZeroRemainder { degree });
        }
        Ok(Self::new(quot))
    }
}

impl Polynomial {
    pub fn to_signed(&self) -> SignedPolynomial {
        Poly {
            coeffs: self.coeffs.iter().map(|&c| i128::from(c)).collect(),
        }
    }

    /// Widens the coefficients to an index-sized integer type.
    pub fn widen<W: Coefficient + From<u64>>(&self) -> Poly<W> {
        Poly {
            coeffs: self.coeffs.iter().map(|&c| W::from(c)).collect(),
        }
    }
}

impl SignedPolynomial {
    /// Converts back to a distance-counting polynomial; every coefficient must be
    /// non-negative and fit in `u64`.
    pub fn to_unsigned(&self) -> Result<Polynomial, PolyError> {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(index, &c)| {
                if c < 0 {
                    Err(PolyError::NegativeCoefficient { index, value: c.to_string() })
                } else {
                    u64::try_from(c).map_err(|_| PolyError::Overflow)
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly { coeffs })
    }
}

impl<C: Coefficient> From<Vec<C>> for Poly<C> {
    fn from(coeffs: Vec<C>) -> Self {
        Self::new(coeffs)
    }
}

impl<C: Coefficient> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Ascending powers: `11 + 14x + 18x^2 + 16x^3 + 6x^4 + x^5`.
impl<C: Coefficient> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = *c < C::zero();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let text = c.to_string();
            let magnitude = text.trim_start_matches('-');
            if k == 0 || magnitude != "1" {
                f.write_str(magnitude)?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}
