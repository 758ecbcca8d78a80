//! Closed forms for linear chains (polyacenes) `L_h`.
//!
//! Each formula is a rational function with denominator `x^2 - 1` or
//! `(x^2 - 1)^2`. The numerator is built exactly and divided with
//! [`Poly::divide_exact`](crate::poly::Poly::divide_exact); a nonzero remainder
//! means the formula is wrong, so the division doubles as a check.

use crate::poly::{PolyError, Polynomial, SignedPolynomial};

fn x2_minus_1() -> SignedPolynomial {
    SignedPolynomial::new(vec![-1, 0, 1])
}

fn exponent(h: usize, offset: usize) -> Result<usize, PolyError> {
    h.checked_mul(2)
        .and_then(|e| e.checked_add(offset))
        .ok_or(PolyError::Overflow)
}

fn to_i128(n: usize) -> Result<i128, PolyError> {
    i128::try_from(n).map_err(|_| PolyError::Overflow)
}

/// `x^{2h} * head + tail`
fn numerator(h: usize, head: &[i128], tail: &[i128]) -> Result<SignedPolynomial, PolyError> {
    let mut coeffs = vec![0i128; exponent(h, head.len())?.max(tail.len())];
    let base = exponent(h, 0)?;
    for (k, &c) in head.iter().enumerate() {
        coeffs[base + k] += c;
    }
    for (k, &c) in tail.iter().enumerate() {
        coeffs[k] = coeffs[k].checked_add(c).ok_or(PolyError::Overflow)?;
    }
    Ok(SignedPolynomial::new(coeffs))
}

/// `beta_h = gamma_h = (x^{2h}(2x^2 + 2x + 1) - x^2 - 2x - 2) / (x^2 - 1)`.
pub fn beta_closed(h: usize) -> Result<Polynomial, PolyError> {
    numerator(h, &[1, 2, 2], &[-2, -2, -1])?
        .divide_exact(&x2_minus_1())?
        .to_unsigned()
}

/// `delta_h = (x^{2h}(x^3 + 2x^2 + 2x) - x^3 - x^2 - 2x - 1) / (x^2 - 1)`.
pub fn delta_closed(h: usize) -> Result<Polynomial, PolyError> {
    delta_numerator(h, -1)?
        .divide_exact(&x2_minus_1())?
        .to_unsigned()
}

/// The same quotient with the `x^3` term of the subtracted part taken with a
/// plus sign, as a literal reading of a doubled minus would give. It never
/// divides exactly; kept so the rejection can be demonstrated.
pub fn delta_closed_plus_x3_reading(h: usize) -> Result<Polynomial, PolyError> {
    delta_numerator(h, 1)?
        .divide_exact(&x2_minus_1())?
        .to_unsigned()
}

fn delta_numerator(h: usize, cubic_sign: i128) -> Result<SignedPolynomial, PolyError> {
    numerator(h, &[0, 2, 2, 1], &[-1, -2, -1, cubic_sign])
}

/// `H_e(L_h, x)`: numerator
/// `x^{2h+5} + 6x^{2h+4} + 10x^{2h+3} + 6x^{2h+2} + 2x^{2h+1}
///  + 2h x^7 - (9h+1)x^5 - (7h+5)x^4 - (h+10)x^3 + 2(h-4)x^2 + 2(4h-1)x + 5h + 1`
/// over `(x^2 - 1)^2`. At `h = 0` this yields `1`, the seed edge.
pub fn edge_hosoya_closed(h: usize) -> Result<Polynomial, PolyError> {
    let d = x2_minus_1();
    edge_hosoya_numerator(h)?
        .divide_exact(&d)?
        .divide_exact(&d)?
        .to_unsigned()
}

fn edge_hosoya_numerator(h: usize) -> Result<SignedPolynomial, PolyError> {
    let n = to_i128(h)?;
    let tail = [5 * n + 1, 2 * (4 * n - 1), 2 * (n - 4), -(n + 10), -(7 * n + 5), -(9 * n + 1), 0, 2 * n];
    numerator(h, &[0, 2, 6, 10, 6, 1], &tail)
}
