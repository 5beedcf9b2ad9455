//! Criterion benchmarks for the fuscat pipeline; see `benches/pipeline.rs`.
