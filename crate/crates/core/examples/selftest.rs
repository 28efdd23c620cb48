//! Differential sweep of the explicit law against Cantor's algorithm.
//!
//! `cargo run --release --example selftest -- [genus_max] [trials]`

use hyperjac::cli::{selftest, SelftestConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>());
    let config = SelftestConfig {
        genus_max: args.next().transpose()?.unwrap_or(6),
        trials: args.next().transpose()?.unwrap_or(50),
        ..SelftestConfig::default()
    };
    let report = selftest(&config)?;
    print!("{}", report.to_text());
    std::process::exit(if report.passed { 0 } else { 1 });
}
