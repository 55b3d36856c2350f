//! Shared inputs for the benchmarks.

use sphnn_core::logic::{generate_classic256, generate_extended16, ReasoningTask};

/// A corpus task by id, from either built-in corpus.
pub fn task(id: &str) -> ReasoningTask {
    generate_extended16()
        .into_iter()
        .chain(generate_classic256())
        .find(|t| t.id == id)
        .unwrap_or_else(|| panic!("no task {id}"))
}
