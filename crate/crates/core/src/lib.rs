//! Mixed product ideals in `K[x_1..x_n, y_1..y_m]`.
//!
//! The crate has two halves that check each other:
//!
//! * [`mixed`] derives everything about `Σ I_{q_i} J_{r_i}` from the summand
//!   list: the Alexander dual, the minimal primes, the facet partition of the
//!   Stanley-Reisner complex, an explicit shelling, and the unmixed,
//!   Cohen-Macaulay and sequentially Cohen-Macaulay verdicts.
//! * [`ideal`], [`complex`] and [`homology`] know nothing about mixed
//!   products. They compute duals by minimal transversals, links and skeleta,
//!   exact rational homology, Reisner's criterion, Duval's skeleton test and a
//!   shelling search.
//!
//! [`report`] joins the two for one spec and [`sweep`] runs the comparison over
//! every spec within given bounds.

pub mod caps;
pub mod complex;
pub mod error;
pub mod homology;
pub mod ideal;
pub mod mixed;
pub mod report;
pub mod sweep;
pub mod varset;
mod verdict;

pub use caps::Caps;
pub use complex::{
    duval_scm, find_shelling, is_strongly_connected, reisner_cm, verify_shelling_order,
    ShellingCertificate, ShellingSearch, SimplicialComplex,
};
pub use error::{Error, Result};
pub use homology::{boundary_matrix, rank_exact, reduced_homology_ranks, BoundaryMatrix};
pub use ideal::{
    alexander_dual, ideal_intersect, ideal_of_complex, ideal_product, ideal_sum, minimal_primes,
    minimalize, stanley_reisner_complex, Monomial, PrimeComponent, SquarefreeIdeal,
    VariableUniverse,
};
pub use mixed::{parse_pairs, MixedProductSpec, QrProfile, Summand};
pub use varset::VarSet;
pub use verdict::Verdict;
