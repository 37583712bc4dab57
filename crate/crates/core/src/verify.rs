//! Case runners for the fourteen joint fixed-group determinations and the
//! supporting lemma suites, emitting structured reports.

pub mod report {
    use serde::{Deserialize, Serialize};

    #[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
    pub struct Check {
        pub name: String,
        pub pass: bool,
        pub detail: String,
    }

    #[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
    pub struct CaseReport {
        pub case: String,
        pub checks: Vec<Check>,
        pub expected_dim: Option<usize>,
        pub computed_dim: Option<usize>,
        pub elapsed_ms: u64,
    }

    impl CaseReport {
        pub fn passed(&self) -> bool {
            self.checks.iter().all(|c| c.pass)
        }
    }
}

pub use report::{CaseReport, Check};
