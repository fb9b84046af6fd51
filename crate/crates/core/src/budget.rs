//! Node budgets for the exact searches.
//!
//! Every exhaustive search in the crate counts expanded search nodes rather
//! than wall time, so the same input and budget always give the same answer.

use serde::Serialize;

/// Default node limit for the exact searches.
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

/// Counter of expanded search nodes against a fixed limit.
#[derive(Debug, Clone)]
pub struct NodeBudget {
    limit: u64,
    used: u64,
}

impl NodeBudget {
    pub fn new(limit: u64) -> Self {
        NodeBudget { limit, used: 0 }
    }

    /// Records one expanded node. Returns `false` once the limit is exceeded.
    #[inline]
    pub fn tick(&mut self) -> bool {
        self.used += 1;
        self.used <= self.limit
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn exhausted(&self) -> bool {
        self.used > self.limit
    }
}

impl Default for NodeBudget {
    fn default() -> Self {
        NodeBudget::new(DEFAULT_NODE_BUDGET)
    }
}

/// Result of a budgeted exact computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Budgeted<T> {
    Done(T),
    /// The node limit was reached before the search could decide.
    Unknown { expanded: u64 },
}

impl<T> Budgeted<T> {
    pub fn done(self) -> Option<T> {
        match self {
            Budgeted::Done(v) => Some(v),
            Budgeted::Unknown { .. } => None,
        }
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Budgeted::Unknown { .. })
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Budgeted<U> {
        match self {
            Budgeted::Done(v) => Budgeted::Done(f(v)),
            Budgeted::Unknown { expanded } => Budgeted::Unknown { expanded },
        }
    }

    /// Unwraps a finished result; panics on `Unknown`.
    pub fn expect_done(self, msg: &str) -> T {
        match self {
            Budgeted::Done(v) => v,
            Budgeted::Unknown { expanded } => panic!("{msg}: budget exhausted after {expanded} nodes"),
        }
    }
}
