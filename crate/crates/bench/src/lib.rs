//! Benchmark-only crate; see `benches/polar.rs`.
