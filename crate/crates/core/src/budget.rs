use crate::{Error, Result};

/// Node counter shared by the exhaustive searches.
///
/// A budget is threaded through a whole top-level call, so the limit applies
/// to the total number of search nodes that call visits.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: Option<u64>,
    used: u64,
}

impl Budget {
    pub const fn unlimited() -> Self {
        Budget { limit: None, used: 0 }
    }

    pub const fn nodes(limit: u64) -> Self {
        Budget { limit: Some(limit), used: 0 }
    }

    pub fn limit(&self) -> Option<u64> {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    /// Charge one search node.
    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        match self.limit {
            Some(limit) if self.used > limit => Err(Error::BudgetExceeded { limit }),
            _ => Ok(()),
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::unlimited()
    }
}
