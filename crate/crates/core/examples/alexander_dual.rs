//! The dual of a mixed product ideal is again a mixed product ideal. This
//! compares the closed form against minimal transversals of the expanded
//! generators, then applies it twice.

use mixprod::{alexander_dual, parse_pairs, Caps, MixedProductSpec, VariableUniverse};

fn main() -> mixprod::Result<()> {
    let caps = Caps::default();
    for (n, m, pairs) in [(3, 2, "2:1"), (3, 3, "1:3,2:1"), (2, 2, "1:1")] {
        let spec = MixedProductSpec::new(VariableUniverse::new(n, m)?, &parse_pairs(pairs)?)?;
        let dual = spec.closed_form_dual();
        println!("{spec}\n  dual: {dual}");

        let generic = alexander_dual(&spec.expand_generators(&caps)?)?;
        assert_eq!(generic, dual.expand_generators(&caps)?);
        println!("  generators: {generic}");

        assert_eq!(dual.closed_form_dual(), spec);
    }
    Ok(())
}
