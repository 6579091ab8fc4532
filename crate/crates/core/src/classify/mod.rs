//! Verifiers and enumerators for the case analysis, each producing a [`VerdictReport`].

pub mod curves;
pub mod poly;
pub mod report;
pub mod solids;
pub mod table1;
pub mod verifiers;

pub use report::{Source, Step, Value, VerdictReport};
pub use table1::{enumerate_table1, filter_table1, CaseRecord};
pub use verifiers::{run_verifier, verify_all, VERIFIER_IDS};
