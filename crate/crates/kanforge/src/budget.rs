use crate::error::{Error, Result};
use std::cell::Cell;

/// Default cap on candidate evaluations for exhaustive searches.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "KANFORGE_BUDGET";

/// Counter shared by the exhaustive enumerators.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: Cell<u64>,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: Cell::new(0) }
    }

    /// Budget from `KANFORGE_BUDGET`, falling back to the default.
    pub fn from_env() -> Self {
        let limit = std::env::var(BUDGET_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_BUDGET);
        Budget::new(limit)
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used.get()
    }

    /// A fresh counter with the same limit, for one enumeration inside a
    /// larger check.
    pub fn scope(&self) -> Budget {
        Budget::new(self.limit)
    }

    /// Adds what `child` used to this counter without enforcing the limit.
    pub fn absorb(&self, child: &Budget) {
        self.used.set(self.used.get().saturating_add(child.used()));
    }

    /// Charges `n` evaluations.
    pub fn charge(&self, n: u64) -> Result<()> {
        let used = self.used.get().saturating_add(n);
        self.used.set(used);
        if used > self.limit {
            Err(Error::BudgetExceeded(self.limit))
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::from_env()
    }
}
