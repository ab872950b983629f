//! Closed predegree quadratics for the two nodal-cubic-plus-line orbits, and
//! the node and cusp contributions they determine.

use num_bigint::BigInt;

use crate::error::{usage, Result};

fn check(d: u32) -> Result<i64> {
    if d < 4 {
        return usage(format!("predegree formulas need d >= 4, got {d}"));
    }
    Ok(d as i64 - 3)
}

/// Degree of the orbit closure of a nodal cubic plus a `(d-3)`-fold line
/// tangent to a branch: `24 + 144e + 140e^2`, `e = d - 3`.
pub fn cbn(d: u32) -> Result<BigInt> {
    let e = check(d)?;
    Ok(BigInt::from(24 + 144 * e + 140 * e * e))
}

/// Predegree of a smooth cubic plus a `(d-3)`-fold flex line:
/// `12(9 + 72e + 84e^2)`.
pub fn cflex(d: u32) -> Result<BigInt> {
    let e = check(d)?;
    Ok(BigInt::from(12 * (9 + 72 * e + 84 * e * e)))
}

/// What acquiring a node subtracts from the predegree of a degree `d` curve.
pub fn node_contribution(d: u32) -> Result<BigInt> {
    check(d)?;
    let d = d as i64;
    Ok(BigInt::from(24 * (35 * d * d - 174 * d + 213)))
}

/// What acquiring a cusp subtracts.
pub fn cusp_contribution(d: u32) -> Result<BigInt> {
    check(d)?;
    let d = d as i64;
    Ok(BigInt::from(72 * (28 * d * d - 144 * d + 183)))
}
