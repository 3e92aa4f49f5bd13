//! Benchmarks for the `fmcheck-core` checks; see `benches/checks.rs`.
