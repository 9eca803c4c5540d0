//! Sequential Cohen-Macaulayness through pure skeleta. Each skeleton of a
//! mixed product complex is again described by a profile; the mixed product
//! is SCM exactly when every such skeleton is CM.

use mixprod::{duval_scm, parse_pairs, reisner_cm, Caps, MixedProductSpec, VariableUniverse};

fn main() -> mixprod::Result<()> {
    let caps = Caps::default();
    for (n, m, pairs) in [(1, 3, "1:1"), (2, 3, "1:1"), (3, 3, "1:3,3:1")] {
        let spec = MixedProductSpec::new(VariableUniverse::new(n, m)?, &parse_pairs(pairs)?)?;
        let complex = spec.complex(&caps)?;
        println!("{spec}  dim {}", complex.dim());
        for l in 0..=spec.qr_profile().dim_ring {
            let sp = spec.skeleton_profile(l)?;
            let cm = reisner_cm(&complex.skeleton(l)?)?.holds();
            println!("  level {l}: q {:?} r {:?} CM {cm}", sp.q_bar, sp.r_bar);
        }
        let closed = spec.is_scm_closed_form();
        let oracle = duval_scm(&complex)?;
        println!("  SCM closed form {:?}, Duval {}", closed, oracle.holds());
        assert_eq!(closed.holds(), oracle.holds());
    }
    Ok(())
}
