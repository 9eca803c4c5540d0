use crate::error::{Error, Result};

/// Enumeration limits.
///
/// Closed-form verdicts are pure profile arithmetic and ignore these; anything
/// that materializes generators, facets or faces is gated here.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest `n + m` for explicit generator/facet enumeration.
    pub vertices: usize,
    /// Largest `n + m` accepted by the generic Alexander dual.
    pub dual_vertices: usize,
    /// Largest number of generators, components or facets to materialize.
    pub items: u128,
    /// Largest vertex count for which homology oracles run.
    pub homology_vertices: usize,
    /// Largest facet count for the exhaustive shelling search.
    pub shelling_facets: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            vertices: 20,
            dual_vertices: 24,
            items: 1 << 20,
            homology_vertices: 12,
            shelling_facets: 10,
        }
    }
}

impl Caps {
    pub(crate) fn check_vertices(&self, actual: usize) -> Result<()> {
        check("vertex count", actual as u128, self.vertices as u128)
    }

    pub(crate) fn check_items(&self, what: &'static str, actual: u128) -> Result<()> {
        check(what, actual, self.items)
    }

    pub(crate) fn check_dual(&self, actual: usize) -> Result<()> {
        check(
            "vertex count for dual",
            actual as u128,
            self.dual_vertices as u128,
        )
    }

    pub(crate) fn check_homology(&self, actual: usize) -> Result<()> {
        check(
            "vertex count for homology",
            actual as u128,
            self.homology_vertices as u128,
        )
    }
}

fn check(what: &'static str, actual: u128, limit: u128) -> Result<()> {
    if actual > limit {
        Err(Error::Resource {
            what,
            actual,
            limit,
        })
    } else {
        Ok(())
    }
}

/// Binomial coefficient, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(20, 10), 184_756);
    }
}
