use std::fmt::Debug;

use num_traits::{FromPrimitive, Signed};

use crate::error::{Error, Result};

/// Coefficient field for [`crate::BiPoly`].
///
/// Division must be exact field division: binomial polynomials divide by
/// `m!`, and interpolation solves linear systems. Rationals satisfy this
/// exactly, floats approximately. Integer types do not qualify.
pub trait Field: Signed + Clone + Debug + FromPrimitive {
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer representable in scalar field")
    }

    fn from_count(v: u64) -> Self {
        Self::from_u64(v).expect("count representable in scalar field")
    }
}

impl<T> Field for T where T: Signed + Clone + Debug + FromPrimitive {}

/// Cap on the number of objects a brute-force enumerator may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Budget {
    pub const DEFAULT: Budget = Budget(10_000_000);

    /// Errors unless `base^exp` objects fit within the budget.
    pub fn admit_power(self, base: u64, exp: usize) -> Result<()> {
        let mut needed: u128 = 1;
        for _ in 0..exp {
            needed = needed.saturating_mul(base as u128);
            if needed > self.0 as u128 {
                return Err(Error::BudgetExceeded {
                    needed: (base as u128).saturating_pow(exp as u32),
                    budget: self.0,
                });
            }
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}
