//! Shellings of Cohen-Macaulay mixed products: the explicit block order, its
//! verification, and what the generic search finds on a non-shellable case.

use mixprod::{
    find_shelling, parse_pairs, verify_shelling_order, Caps, MixedProductSpec, ShellingSearch,
    VariableUniverse,
};

fn main() -> mixprod::Result<()> {
    let caps = Caps::default();

    let spec = MixedProductSpec::new(VariableUniverse::new(2, 2)?, &parse_pairs("1:2,2:1")?)?;
    let u = spec.universe();
    let complex = spec.complex(&caps)?;
    let construction = spec
        .shelling_order(&caps)?
        .expect("CM, so a shelling exists");
    println!("{spec}: {:?}", construction.direction);
    for f in &construction.order {
        println!("  {}", u.format_set(*f));
    }
    assert!(verify_shelling_order(&complex, &construction.order)?.holds());

    // two disjoint edges: pure, but not connected
    let spec = MixedProductSpec::new(VariableUniverse::new(2, 2)?, &parse_pairs("1:1")?)?;
    let complex = spec.complex(&caps)?;
    match find_shelling(&complex, caps.shelling_facets) {
        ShellingSearch::Found(c) => println!("{spec}: shelled as {:?}", c.order),
        ShellingSearch::NotShellable => println!("{spec}: no shelling exists"),
        ShellingSearch::Inconclusive { facets } => {
            println!("{spec}: {facets} facets, search skipped")
        }
    }
    Ok(())
}
