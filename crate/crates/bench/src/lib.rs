//! Criterion benchmarks for the Bernoulli-Barnes routes; see `benches/routes.rs`.
