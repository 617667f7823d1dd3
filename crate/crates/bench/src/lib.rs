//! Benchmarks live in `benches/`; run them with `cargo bench -p g3-bench`.

pub use g3_core;
