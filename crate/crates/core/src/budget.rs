use num_bigint::BigUint;

use crate::error::{Error, Result};

pub const BUDGET_ENV: &str = "TETRAPOSET_BUDGET";

/// Resource guard for exhaustive enumeration.
///
/// Enumeration refuses to start when the number of objects it would produce
/// exceeds `max_items`. Counting by dynamic programming is only limited by
/// `max_vertices`, which is unset by default.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Budget {
    pub max_items: u128,
    pub max_vertices: Option<usize>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_items: 100_000_000,
            max_vertices: None,
        }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            max_items: u128::MAX,
            max_vertices: None,
        }
    }

    pub fn with_max_items(max_items: u128) -> Self {
        Budget {
            max_items,
            ..Budget::default()
        }
    }

    /// Default budget, with `max_items` overridden by `TETRAPOSET_BUDGET` when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(BUDGET_ENV) {
            Ok(s) => s
                .trim()
                .parse::<u128>()
                .map(Budget::with_max_items)
                .map_err(|_| Error::InvalidObject(format!("{BUDGET_ENV}={s:?} is not a non-negative integer"))),
            Err(_) => Ok(Budget::default()),
        }
    }

    pub(crate) fn check_items(&self, what: &'static str, needed: &BigUint) -> Result<()> {
        if *needed > BigUint::from(self.max_items) {
            return Err(Error::BudgetExceeded {
                what,
                needed: needed.to_string(),
                limit: self.max_items.to_string(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_vertices(&self, size: usize) -> Result<()> {
        match self.max_vertices {
            Some(limit) if size > limit => Err(Error::BudgetExceeded {
                what: "poset vertices",
                needed: size.to_string(),
                limit: limit.to_string(),
            }),
            _ => Ok(()),
        }
    }
}
