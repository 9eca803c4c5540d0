//! Minimal primes of a mixed product ideal, grouped the way the closed form
//! produces them, and the unmixedness verdict with its witness.

use mixprod::{minimal_primes, parse_pairs, Caps, MixedProductSpec, VariableUniverse, Verdict};

fn main() -> mixprod::Result<()> {
    let caps = Caps::default();
    for (n, m, pairs) in [(2, 2, "1:2,2:1"), (3, 3, "1:1"), (3, 3, "1:2")] {
        let spec = MixedProductSpec::new(VariableUniverse::new(n, m)?, &parse_pairs(pairs)?)?;
        let u = spec.universe();
        let pd = spec.closed_form_primary_decomposition(&caps)?;
        println!("{spec}  height {}", pd.height);
        for g in &pd.groups {
            println!(
                "  {:?}: {} prime(s) of size {}",
                g.kind,
                g.components.len(),
                g.size
            );
            for p in &g.components {
                println!("    {}", u.format_set(p.variables()));
            }
        }
        assert_eq!(
            pd.components(),
            minimal_primes(&spec.expand_generators(&caps)?)?
        );

        match spec.is_unmixed_closed_form() {
            Verdict::Holds => println!("  unmixed"),
            Verdict::Fails(v) => println!("  not unmixed: {v:?}"),
        }
    }
    Ok(())
}
