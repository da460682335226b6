//! Criterion benchmarks for the `etaineq` kernels live under `benches/`.
