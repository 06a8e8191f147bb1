//! Exact integer ceilings.
//!
//! The label formulas have numerators such as `j - i*c` that are negative for
//! most of the grid, so truncating division would be wrong there.

use crate::error::{Error, Result};

/// Least integer `>= p / q` for `q > 0`, rounding toward positive infinity.
pub fn ceil_div(p: i64, q: i64) -> Result<i64> {
    if q <= 0 {
        return Err(Error::InvalidParameter(format!(
            "ceil_div divisor must be positive, got {q}"
        )));
    }
    Ok(ceil_div_pos(p, q))
}

#[inline]
pub(crate) fn ceil_div_pos(p: i64, q: i64) -> i64 {
    debug_assert!(q > 0);
    let d = p.div_euclid(q);
    if p.rem_euclid(q) == 0 {
        d
    } else {
        d + 1
    }
}
