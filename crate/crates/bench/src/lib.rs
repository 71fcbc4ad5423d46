//! Shared fixtures for the benchmarks.

use dyngb::{generate_cyclic, generate_katsura, Polynomial, Strategy, StrategyConfig};

pub fn cyclic(n: usize) -> Vec<Polynomial> {
    generate_cyclic(n).expect("n >= 2")
}

pub fn katsura(nvars: usize) -> Vec<Polynomial> {
    generate_katsura(nvars - 1).expect("nvars >= 2")
}

pub fn sugar_cfg() -> StrategyConfig {
    StrategyConfig {
        strategy: Strategy::Sugar,
        ..StrategyConfig::default()
    }
}
