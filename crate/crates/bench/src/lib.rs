//! Benchmarks for quandlekit live in `benches/`.
