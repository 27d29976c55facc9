//! Benchmarks for the degeneration constructors and validators live in
//! `benches/`; this crate has no library surface.
