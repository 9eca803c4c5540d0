//! Squarefree monomial ideals over a two-block variable universe.
//!
//! Monomials are identified with their supports. Generating sets are always
//! kept as divisibility antichains in canonical (lexicographic) order, so two
//! ideals are equal exactly when their generator vectors are equal.

use std::fmt;

use crate::caps::Caps;
use crate::complex::SimplicialComplex;
use crate::error::{domain, invalid, Result};
use crate::varset::{minimal_sets, VarSet, MAX_VARS};

/// The variables `x_1..x_n, y_1..y_m`, numbered `0..n` then `n..n+m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VariableUniverse {
    n: usize,
    m: usize,
}

impl VariableUniverse {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if n + m == 0 {
            return Err(invalid("universe needs at least one variable"));
        }
        Ok(VariableUniverse { n, m })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.n + self.m
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn x(&self, i: usize) -> usize {
        debug_assert!(i < self.n);
        i
    }

    pub fn y(&self, j: usize) -> usize {
        debug_assert!(j < self.m);
        self.n + j
    }

    /// Whether the universe fits in a [`VarSet`].
    pub fn is_addressable(&self) -> bool {
        self.len() <= MAX_VARS
    }

    pub(crate) fn require_addressable(&self) -> Result<()> {
        if self.is_addressable() {
            Ok(())
        } else {
            Err(invalid(format!(
                "{} variables exceed the {MAX_VARS}-variable bitset",
                self.len()
            )))
        }
    }

    pub fn all(&self) -> VarSet {
        VarSet::full(self.len())
    }

    pub fn x_block(&self) -> VarSet {
        VarSet::range(0, self.n)
    }

    pub fn y_block(&self) -> VarSet {
        VarSet::range(self.n, self.m)
    }

    /// 1-based display name, `x3` or `y1`.
    pub fn name(&self, index: usize) -> String {
        if index < self.n {
            format!("x{}", index + 1)
        } else {
            format!("y{}", index - self.n + 1)
        }
    }

    pub fn names(&self, set: VarSet) -> Vec<String> {
        set.iter().map(|i| self.name(i)).collect()
    }

    /// Renders a set as `{x1,y2}`.
    pub fn format_set(&self, set: VarSet) -> String {
        format!("{{{}}}", self.names(set).join(","))
    }

    /// Renders a monomial as `x1y2`, or `1` for the empty support.
    pub fn format_monomial(&self, set: VarSet) -> String {
        if set.is_empty() {
            "1".to_string()
        } else {
            self.names(set).concat()
        }
    }

    pub(crate) fn contains(&self, set: VarSet) -> bool {
        set.span() <= self.len()
    }
}

/// A squarefree monomial, identified with its support.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    support: VarSet,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        support: VarSet::EMPTY,
    };

    pub fn new(support: VarSet) -> Self {
        Monomial { support }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        Monomial::new(VarSet::from_indices(it))
    }

    pub fn support(&self) -> VarSet {
        self.support
    }

    pub fn degree(&self) -> usize {
        self.support.len()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.support.is_subset(other.support)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.support.union(other.support))
    }
}

/// A monomial prime ideal, generated by a nonempty set of variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeComponent {
    variables: VarSet,
}

impl PrimeComponent {
    pub fn new(variables: VarSet) -> Result<Self> {
        if variables.is_empty() {
            return Err(invalid("a prime component needs at least one variable"));
        }
        Ok(PrimeComponent { variables })
    }

    pub fn variables(&self) -> VarSet {
        self.variables
    }

    /// Height of the prime, i.e. its number of generators.
    pub fn size(&self) -> usize {
        self.variables.len()
    }

    /// The prime as an ideal generated by its variables.
    pub fn to_ideal(&self, universe: VariableUniverse) -> Result<SquarefreeIdeal> {
        minimalize(
            universe,
            self.variables.iter().map(|i| Monomial::from_indices([i])),
        )
    }
}

/// A squarefree monomial ideal given by its minimal generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SquarefreeIdeal {
    universe: VariableUniverse,
    generators: Vec<Monomial>,
}

impl SquarefreeIdeal {
    pub fn zero(universe: VariableUniverse) -> Self {
        SquarefreeIdeal {
            universe,
            generators: Vec::new(),
        }
    }

    pub fn unit(universe: VariableUniverse) -> Self {
        SquarefreeIdeal {
            universe,
            generators: vec![Monomial::ONE],
        }
    }

    /// The ideal generated by all variables.
    pub fn maximal(universe: VariableUniverse) -> Self {
        SquarefreeIdeal {
            universe,
            generators: (0..universe.len())
                .map(|i| Monomial::from_indices([i]))
                .collect(),
        }
    }

    pub fn universe(&self) -> VariableUniverse {
        self.universe
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn supports(&self) -> impl Iterator<Item = VarSet> + '_ {
        self.generators.iter().map(|g| g.support())
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.first() == Some(&Monomial::ONE)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// Builds an ideal from supports already known to be in range.
    pub(crate) fn from_supports_unchecked(universe: VariableUniverse, sets: Vec<VarSet>) -> Self {
        SquarefreeIdeal {
            universe,
            generators: minimal_sets(sets).into_iter().map(Monomial::new).collect(),
        }
    }

    fn require_same(&self, other: &SquarefreeIdeal) -> Result<()> {
        if self.universe != other.universe {
            return Err(invalid(format!(
                "universe mismatch: (n={}, m={}) vs (n={}, m={})",
                self.universe.n, self.universe.m, other.universe.n, other.universe.m
            )));
        }
        Ok(())
    }
}

impl fmt::Debug for SquarefreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SquarefreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        let gens: Vec<String> = self
            .supports()
            .map(|s| self.universe.format_monomial(s))
            .collect();
        write!(f, "({})", gens.join(", "))
    }
}

/// Reduces `raw` to its divisibility antichain.
pub fn minimalize<I>(universe: VariableUniverse, raw: I) -> Result<SquarefreeIdeal>
where
    I: IntoIterator<Item = Monomial>,
{
    universe.require_addressable()?;
    let mut sets = Vec::new();
    for mono in raw {
        if !universe.contains(mono.support()) {
            return Err(invalid(format!(
                "monomial {:?} has an index outside 0..{}",
                mono.support(),
                universe.len()
            )));
        }
        sets.push(mono.support());
    }
    Ok(SquarefreeIdeal::from_supports_unchecked(universe, sets))
}

pub fn ideal_sum(a: &SquarefreeIdeal, b: &SquarefreeIdeal) -> Result<SquarefreeIdeal> {
    a.require_same(b)?;
    let sets = a.supports().chain(b.supports()).collect();
    Ok(SquarefreeIdeal::from_supports_unchecked(a.universe, sets))
}

/// Product of squarefree ideals, keeping supports (the squarefree part of each product).
pub fn ideal_product(a: &SquarefreeIdeal, b: &SquarefreeIdeal) -> Result<SquarefreeIdeal> {
    a.require_same(b)?;
    Ok(SquarefreeIdeal::from_supports_unchecked(
        a.universe,
        pairwise_unions(a, b),
    ))
}

/// Intersection, generated by pairwise least common multiples.
pub fn ideal_intersect(a: &SquarefreeIdeal, b: &SquarefreeIdeal) -> Result<SquarefreeIdeal> {
    a.require_same(b)?;
    Ok(SquarefreeIdeal::from_supports_unchecked(
        a.universe,
        pairwise_unions(a, b),
    ))
}

fn pairwise_unions(a: &SquarefreeIdeal, b: &SquarefreeIdeal) -> Vec<VarSet> {
    let mut out = Vec::with_capacity(a.generators.len() * b.generators.len());
    for g in a.supports() {
        for h in b.supports() {
            out.push(g.union(h));
        }
    }
    out
}

/// Minimal transversals (hitting sets) of `edges`, by Berge's incremental method.
///
/// An empty edge admits no transversal; an empty family has the single
/// transversal `∅`.
pub(crate) fn minimal_transversals(edges: &[VarSet]) -> Vec<VarSet> {
    let mut edges = minimal_sets(edges.to_vec());
    // small edges first keep the intermediate families small
    edges.sort_by_key(|e| (e.len(), *e));
    let mut current = vec![VarSet::EMPTY];
    for edge in edges {
        let mut next = Vec::with_capacity(current.len() * edge.len());
        for &t in &current {
            if t.intersects(edge) {
                next.push(t);
            } else {
                next.extend(edge.iter().map(|v| t.with(v)));
            }
        }
        current = minimal_sets(next);
        if current.is_empty() {
            break;
        }
    }
    current
}

/// The Alexander dual, with the default size limit.
pub fn alexander_dual(ideal: &SquarefreeIdeal) -> Result<SquarefreeIdeal> {
    alexander_dual_with(ideal, &Caps::default())
}

/// The Alexander dual `⋂_g (x_i : i ∈ supp g)`, computed as minimal transversals.
pub fn alexander_dual_with(ideal: &SquarefreeIdeal, caps: &Caps) -> Result<SquarefreeIdeal> {
    if ideal.is_zero() {
        return Err(domain("the Alexander dual of the zero ideal is undefined"));
    }
    if ideal.is_unit() {
        return Err(domain("the Alexander dual of the unit ideal is undefined"));
    }
    caps.check_dual(ideal.universe.len())?;
    let edges: Vec<VarSet> = ideal.supports().collect();
    Ok(SquarefreeIdeal::from_supports_unchecked(
        ideal.universe,
        minimal_transversals(&edges),
    ))
}

/// Minimal primes, read off the generators of the Alexander dual.
pub fn minimal_primes(ideal: &SquarefreeIdeal) -> Result<Vec<PrimeComponent>> {
    minimal_primes_with(ideal, &Caps::default())
}

pub fn minimal_primes_with(ideal: &SquarefreeIdeal, caps: &Caps) -> Result<Vec<PrimeComponent>> {
    let dual = alexander_dual_with(ideal, caps)?;
    dual.supports().map(PrimeComponent::new).collect()
}

/// The complex whose facets are the complements of the minimal primes.
pub fn stanley_reisner_complex(ideal: &SquarefreeIdeal) -> Result<SimplicialComplex> {
    stanley_reisner_complex_with(ideal, &Caps::default())
}

pub fn stanley_reisner_complex_with(
    ideal: &SquarefreeIdeal,
    caps: &Caps,
) -> Result<SimplicialComplex> {
    let universe = ideal.universe;
    if ideal.is_unit() {
        return Err(domain("the unit ideal has no Stanley-Reisner complex"));
    }
    if ideal.is_zero() {
        return SimplicialComplex::new(universe, vec![universe.all()]);
    }
    let all = universe.all();
    let facets = minimal_primes_with(ideal, caps)?
        .into_iter()
        .map(|p| all.difference(p.variables()))
        .collect();
    SimplicialComplex::new(universe, facets)
}

/// The Stanley-Reisner ideal of `complex`: its minimal non-faces.
pub fn ideal_of_complex(complex: &SimplicialComplex) -> SquarefreeIdeal {
    let universe = complex.universe();
    let all = universe.all();
    // a set is a non-face iff it meets the complement of every facet
    let complements: Vec<VarSet> = complex
        .facets()
        .iter()
        .map(|f| all.difference(*f))
        .collect();
    SquarefreeIdeal::from_supports_unchecked(universe, minimal_transversals(&complements))
}
