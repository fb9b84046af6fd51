use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest label accepted anywhere in the crate. Neighbor sums are
/// accumulated in `u128`, so sums of up to 2^66 labels cannot wrap.
pub const MAX_LABEL: u64 = 1 << 62;

/// A finite set of distinct positive integers, kept in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct LabelSet(Vec<u64>);

impl LabelSet {
    /// Builds a set from any ordering of distinct labels in `1..=MAX_LABEL`.
    pub fn new(mut labels: Vec<u64>) -> Result<Self> {
        labels.sort_unstable();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::precondition(format!("label {} repeated", w[0])));
        }
        if let Some(&bad) = labels.iter().find(|&&l| l == 0 || l > MAX_LABEL) {
            return Err(Error::precondition(format!("label {bad} outside 1..=2^62")));
        }
        Ok(LabelSet(labels))
    }

    /// `{1, ..., k}`.
    pub fn range(k: u64) -> Self {
        LabelSet((1..=k).collect())
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max(&self) -> Option<u64> {
        self.0.last().copied()
    }

    pub fn contains(&self, label: u64) -> bool {
        self.0.binary_search(&label).is_ok()
    }

    /// Position of `label` in increasing order.
    pub fn index_of(&self, label: u64) -> Option<usize> {
        self.0.binary_search(&label).ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }

    /// Whether the set is exactly `{1, ..., k}` for some `k`.
    pub fn is_initial_range(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &l)| l == i as u64 + 1)
    }

    /// The `k` smallest elements.
    pub fn prefix(&self, k: usize) -> Result<Self> {
        if k > self.0.len() {
            return Err(Error::precondition(format!(
                "requested {k} labels from a set of {}",
                self.0.len()
            )));
        }
        Ok(LabelSet(self.0[..k].to_vec()))
    }
}

impl TryFrom<Vec<u64>> for LabelSet {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        LabelSet::new(v)
    }
}

impl From<LabelSet> for Vec<u64> {
    fn from(s: LabelSet) -> Self {
        s.0
    }
}

impl fmt::Display for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("}")
    }
}
