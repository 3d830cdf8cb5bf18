//! Checked integer helpers shared by the whole crate.

use crate::error::{Error, Result};

/// Hard cap on dense table / Apéry vector sizes, in entries.
pub(crate) const MAX_TABLE_LEN: u64 = 1 << 28;

pub(crate) fn checked_mul(a: u64, b: u64) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

pub(crate) fn checked_add(a: u64, b: u64) -> Result<u64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

/// Exact ⌈(p − q)/den⌉ for den > 0, correct for negative numerators.
///
/// The subtraction is kept symbolic so the full u128 range of both sides is
/// usable; ⌈−x/d⌉ = −⌊x/d⌋ handles the negative case without floats.
pub(crate) fn ceil_sub_div(p: u128, q: u128, den: u128) -> i128 {
    debug_assert!(den > 0);
    if p >= q {
        i128::try_from((p - q).div_ceil(den)).expect("ceiling quotient out of range")
    } else {
        -i128::try_from((q - p) / den).expect("ceiling quotient out of range")
    }
}

/// Validates that a dense table of `needed` entries is allocatable.
pub(crate) fn ensure_table_len(needed: u64) -> Result<usize> {
    if needed > MAX_TABLE_LEN {
        return Err(Error::TableTooLarge {
            needed: needed as u128,
        });
    }
    Ok(needed as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceil_sub_div_matches_rational_ceiling() {
        // (24 - 3) / 21 = 1
        assert_eq!(ceil_sub_div(24, 3, 21), 1);
        // (16 - 9) / 21 -> ceil(1/3) = 1
        assert_eq!(ceil_sub_div(16, 9, 21), 1);
        // (8 - 15) / 21 -> ceil(-1/3) = 0
        assert_eq!(ceil_sub_div(8, 15, 21), 0);
        // exact negative: (0 - 42) / 21 = -2
        assert_eq!(ceil_sub_div(0, 42, 21), -2);
        // just past an exact negative: ceil(-43/21) = -2
        assert_eq!(ceil_sub_div(0, 43, 21), -2);
        // zero numerator
        assert_eq!(ceil_sub_div(7, 7, 3), 0);
    }

    #[test]
    fn checked_ops_flag_overflow() {
        assert_eq!(checked_mul(u64::MAX, 2), Err(Error::Overflow));
        assert_eq!(checked_add(u64::MAX, 1), Err(Error::Overflow));
        assert_eq!(checked_mul(3, 4), Ok(12));
    }
}
