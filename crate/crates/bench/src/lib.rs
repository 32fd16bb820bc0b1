//! Benchmark-only crate; the measurements live in `benches/saturation.rs`.
//! Run them with `cargo bench -p saturn-bench`.
