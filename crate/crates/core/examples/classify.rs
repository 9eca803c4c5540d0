//! Classify one mixed product ideal, with closed forms checked by the oracles.
//!
//! ```bash
//! cargo run --example classify -- 3 3 1:2,2:1
//! ```

use mixprod::report::{classify, ClassifyOptions, OracleLevel};
use mixprod::{parse_pairs, MixedProductSpec, VariableUniverse};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (n, m, pairs) = match args.as_slice() {
        [n, m, p] => (n.parse()?, m.parse()?, p.clone()),
        _ => (3, 3, "1:2,2:1".to_string()),
    };
    let (spec, warnings) =
        MixedProductSpec::normalize(VariableUniverse::new(n, m)?, &parse_pairs(&pairs)?)?;
    for w in &warnings {
        eprintln!("note: {w}");
    }

    let options = ClassifyOptions {
        oracle: OracleLevel::Full,
        ..Default::default()
    };
    let report = classify(&spec, &options)?;
    print!("{}", report.to_text());

    let mismatches = report.mismatches();
    if !mismatches.is_empty() {
        return Err(format!("{} disagreement(s) with the oracles", mismatches.len()).into());
    }
    Ok(())
}
