//! Enumeration caps shared by every exhaustive scan over a base field.

use crate::{Error, Result};

/// Default cap on the order of a field scanned element by element.
pub const DEFAULT_MAX_Q: u64 = 1 << 14;

/// Cap on the number of candidates the integral-point oracle will visit.
pub const MAX_SEARCH_CANDIDATES: u64 = 1 << 26;

/// Reads `ISOTWIST_MAX_Q`, falling back to [`DEFAULT_MAX_Q`].
pub fn max_q() -> u64 {
    std::env::var("ISOTWIST_MAX_Q")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_Q)
}

pub(crate) fn check_scan(size: u64) -> Result<()> {
    let cap = max_q();
    if size > cap {
        return Err(Error::TooLarge { size, cap });
    }
    Ok(())
}
