//! Criterion benchmarks for group closure and Matsuo algebra routines.
//! Run with `cargo bench -p fischer-lab-bench`.
