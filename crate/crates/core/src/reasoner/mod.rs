//! Validity by refutation, the enumeration oracle, and corpus evaluation.

mod decide;
pub mod oracle;
mod report;

pub use decide::{decide_statements, decide_validity, Verdict};
pub use oracle::{brute_force_validity, DisjunctionSemantics, OracleModel, MAX_ORACLE_TERMS};
pub use report::{evaluate_corpus, CorpusReport, ReportSummary, RunRecord, CSV_HEADER};
