//! Numeric limits shared by the search and enumeration routines.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};

/// Default node budget for backtracking searches.
pub const DEFAULT_BUDGET: u64 = 50_000_000;
/// Default cap on the number of cosets defined by Todd–Coxeter.
pub const DEFAULT_TC_CAP: usize = 100_000;
/// Default cap on the order accepted by quandle enumeration.
pub const DEFAULT_ORDER_CAP: usize = 5;
/// Default cap on the size of a permutation group closure.
pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub budget: u64,
    pub tc_cap: usize,
    pub order_cap: usize,
    pub element_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            budget: DEFAULT_BUDGET,
            tc_cap: DEFAULT_TC_CAP,
            order_cap: DEFAULT_ORDER_CAP,
            element_cap: DEFAULT_ELEMENT_CAP,
        }
    }
}

/// Node counter shared by the branches of a parallel search.
pub(crate) struct Budget {
    used: AtomicU64,
    cap: u64,
}

impl Budget {
    pub(crate) fn new(cap: u64) -> Self {
        Budget { used: AtomicU64::new(0), cap }
    }

    pub(crate) fn tick(&self) -> Result<()> {
        if self.used.fetch_add(1, Ordering::Relaxed) >= self.cap {
            Err(Error::SearchBudgetExceeded { budget: self.cap })
        } else {
            Ok(())
        }
    }
}
