//! Exhaustive comparison of closed forms against the oracles over every spec
//! with n, m and summand count within the given bounds.
//!
//! ```bash
//! cargo run --release --example sweep -- 4 4 3
//! ```

use mixprod::report::OracleLevel;
use mixprod::sweep::{run_sweep, SweepConfig};

fn main() -> mixprod::Result<()> {
    let bounds: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let mut config = SweepConfig {
        oracle: OracleLevel::Full,
        ..Default::default()
    };
    if let [n, m, s] = bounds[..] {
        config.max_n = n;
        config.max_m = m;
        config.max_s = s;
    }
    let result = run_sweep(&config)?;
    println!(
        "{} specs checked, {} skipped, {} mismatches in {:.2?}",
        result.configs_checked,
        result.skipped,
        result.mismatches.len(),
        result.elapsed
    );
    for (spec, mismatch) in result.mismatches.iter().take(10) {
        println!("  {spec}: {mismatch:?}");
    }
    Ok(())
}
