/// Work caps shared by every enumeration in the crate.
///
/// The units differ per field: `lattice` counts candidate vectors visited by
/// the lattice enumerations, `discrepancy` counts corner-times-point
/// evaluations, `expsum` counts exponential terms, and `search` bounds the
/// number of candidates an exhaustive search may generate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub lattice: u64,
    pub discrepancy: u64,
    pub expsum: u64,
    pub search: u64,
}

impl Budget {
    pub const DEFAULT: Budget =
        Budget { lattice: 100_000_000, discrepancy: 1_000_000_000, expsum: 100_000_000, search: 1_000_000 };

    /// Same cap for every kind of work.
    pub const fn uniform(cap: u64) -> Budget {
        Budget { lattice: cap, discrepancy: cap, expsum: cap, search: cap }
    }

    pub(crate) fn check(needed: u128, budget: u64) -> crate::Result<()> {
        if needed > budget as u128 {
            Err(crate::Error::BudgetExceeded { needed, budget })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}
