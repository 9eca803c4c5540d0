//! Reduced homology over Q from exact boundary ranks, on a few small
//! complexes and on one Stanley-Reisner complex of a mixed product.

use mixprod::{
    boundary_matrix, parse_pairs, rank_exact, reduced_homology_ranks, Caps, MixedProductSpec,
    SimplicialComplex, VarSet, VariableUniverse,
};

fn show(name: &str, c: &SimplicialComplex) -> mixprod::Result<()> {
    let ranks = reduced_homology_ranks(c)?;
    let listed: Vec<String> = ranks
        .iter()
        .enumerate()
        .map(|(i, r)| format!("H~{}={r}", i as isize - 1))
        .collect();
    println!("{name:>18}: {}", listed.join(" "));
    Ok(())
}

fn main() -> mixprod::Result<()> {
    let u = VariableUniverse::new(4, 0)?;
    let set = |ix: &[usize]| VarSet::from_indices(ix.iter().copied());

    let circle = SimplicialComplex::new(u, vec![set(&[0, 1]), set(&[1, 2]), set(&[0, 2])])?;
    let d1 = boundary_matrix(&circle, 1)?;
    println!(
        "boundary of the triangle's edges has rank {}",
        rank_exact(&d1)
    );
    show("circle", &circle)?;
    show(
        "two points",
        &SimplicialComplex::new(u, vec![set(&[0]), set(&[3])])?,
    )?;
    show(
        "solid tetrahedron",
        &SimplicialComplex::new(u, vec![set(&[0, 1, 2, 3])])?,
    )?;
    let sphere = set(&[0, 1, 2, 3]).subsets_of_size(3);
    show("2-sphere", &SimplicialComplex::new(u, sphere)?)?;

    let spec = MixedProductSpec::new(VariableUniverse::new(2, 2)?, &parse_pairs("1:1")?)?;
    show(&spec.to_string(), &spec.complex(&Caps::default())?)?;
    Ok(())
}
