//! Criterion benchmarks for the alignment, feature and scoring kernels live in `benches/`.
