//! Timing table for explicit vs Cantor addition, with the JSON report.

use hyperjac::cli::{bench, BenchConfig, BenchReport};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let config = BenchConfig {
        genus_max: 8,
        trials: 50,
        ..BenchConfig::default()
    };
    let report = bench(&config)?;
    print!("{}", report.to_text());
    let json = serde_json::to_string_pretty(&report)?;
    BenchReport::from_json(&json)?;
    println!("{} bytes of schema-{} JSON", json.len(), report.schema);
    Ok(())
}
