//! Caps for the exact searches and compositions.
//!
//! Every cap is a guard against exponential blowup, not a tolerance: results
//! are exact or the operation reports `ComplexityBudgetExceeded`.

#[derive(Debug, Clone)]
pub struct Budget {
    /// Breakpoint cap for lifting composition (PL composition grows
    /// multiplicatively; the doubling map's 20th iterate has ~10^6 laps).
    pub max_breakpoints: usize,
    /// Iteration cap for invariant-interval stabilization.
    pub max_stabilize_iters: usize,
    /// Element cap for the set-cover branch-and-bound phase (after exact
    /// reductions).
    pub setcover_bb_cap: usize,
    /// Tuple cap for pattern-complexity searches.
    pub max_tuples: usize,
    /// Cap on independence index-set size (2^|I| patterns are verified).
    pub max_pattern_indices: usize,
    /// Bit budget for orbit denominators.
    pub orbit_bit_budget: u64,
    /// Cap on candidate pairs in horseshoe / periodic-interval searches.
    pub max_candidates: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_breakpoints: 1_000_000,
            max_stabilize_iters: 10_000,
            setcover_bb_cap: 40,
            max_tuples: 1_000_000,
            max_pattern_indices: 20,
            orbit_bit_budget: 1 << 16,
            max_candidates: 20_000,
        }
    }
}
