//! Pass/fail records for verification sweeps.

/// Outcome of an exhaustive sweep: how many assertions ran, whether all of
/// them held, and the first counterexample in the sweep's deterministic
/// enumeration order if one exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport<C> {
    pub checked: u64,
    pub passed: bool,
    pub counterexample: Option<C>,
}

impl<C> VerificationReport<C> {
    pub fn pass(checked: u64) -> Self {
        VerificationReport {
            checked,
            passed: true,
            counterexample: None,
        }
    }

    pub fn fail(checked: u64, counterexample: C) -> Self {
        VerificationReport {
            checked,
            passed: false,
            counterexample: Some(counterexample),
        }
    }

    pub fn from_sweep(checked: u64, first: Option<C>) -> Self {
        match first {
            None => VerificationReport::pass(checked),
            Some(c) => VerificationReport::fail(checked, c),
        }
    }

    /// Combines two sweep phases; an earlier phase's counterexample wins.
    pub fn merge(self, later: Self) -> Self {
        VerificationReport {
            checked: self.checked + later.checked,
            passed: self.passed && later.passed,
            counterexample: self.counterexample.or(later.counterexample),
        }
    }
}
