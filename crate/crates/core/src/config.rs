/// Knobs shared by the enumeration-heavy operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    /// Worker threads for partitioned sweeps. Results do not depend on it.
    pub workers: usize,
    /// Overrides the operation's default bound on `n`.
    pub cap: Option<usize>,
    /// Bound that `cap` cannot lift.
    pub hard_cap: Option<usize>,
    /// Re-check every emitted realization against `𝒟(G)`.
    pub verify_outputs: bool,
    /// Maximum number of candidate subsets examined per size by the
    /// decomposition search.
    pub budget: u64,
}

pub const DEFAULT_SEARCH_BUDGET: u64 = 5_000_000;

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            workers: 1,
            cap: None,
            hard_cap: None,
            verify_outputs: true,
            budget: DEFAULT_SEARCH_BUDGET,
        }
    }
}

impl SearchConfig {
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = Some(cap);
        self
    }

    /// Effective bound for an operation whose own default is `default`.
    pub fn cap_for(&self, default: usize) -> usize {
        let cap = self.cap.unwrap_or(default);
        match self.hard_cap {
            Some(hard) => cap.min(hard),
            None => cap,
        }
    }
}
