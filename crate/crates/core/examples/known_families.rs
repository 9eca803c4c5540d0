//! Familiar ideals written as mixed products: edge ideals of complete
//! bipartite graphs, squarefree Veronese ideals and the maximal ideal.

use mixprod::{MixedProductSpec, Verdict};

fn line(label: &str, spec: &MixedProductSpec) {
    let mark = |v: bool| if v { "yes" } else { "no" };
    println!(
        "{label:<28} {:<24} unmixed {:<3} CM {:<3} SCM {}",
        spec.to_string(),
        mark(spec.is_unmixed_closed_form().holds()),
        mark(spec.is_cm_closed_form().holds()),
        mark(spec.is_scm_closed_form().holds()),
    );
}

fn main() -> mixprod::Result<()> {
    for (n, m) in [(1, 1), (1, 3), (2, 2), (3, 4)] {
        line(
            &format!("K_{{{n},{m}}} edge ideal"),
            &MixedProductSpec::from_pairs(n, m, &[(1, 1)])?,
        );
    }
    line(
        "degree-2 squarefree Veronese",
        &MixedProductSpec::from_pairs(3, 3, &[(2, 0), (1, 1), (0, 2)])?,
    );
    line(
        "Veronese in the x-block",
        &MixedProductSpec::from_pairs(4, 2, &[(2, 0)])?,
    );
    line(
        "maximal ideal",
        &MixedProductSpec::from_pairs(2, 2, &[(1, 0), (0, 1)])?,
    );

    let spec = MixedProductSpec::from_pairs(2, 3, &[(1, 1)])?;
    if let Verdict::Fails(w) = spec.is_scm_closed_form() {
        println!("{spec} fails SCM: {w:?}");
    }
    Ok(())
}
