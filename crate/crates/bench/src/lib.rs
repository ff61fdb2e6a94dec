//! Benchmarks live in `benches/pipeline.rs`; run them with `cargo bench -p littleweyl-bench`.
