//! Mixed product ideals `Σ I_{q_i} J_{r_i}` and their closed-form invariants.
//!
//! `I_q` is generated by the squarefree degree-`q` monomials in the x-block and
//! `J_r` likewise in the y-block. Everything here except explicit generator and
//! facet enumeration is arithmetic on the summand list or on the derived
//! [`QrProfile`], so it runs for any `n`, `m`.

use std::fmt;
use std::str::FromStr;

use crate::caps::{binomial, Caps};
use crate::complex::SimplicialComplex;
use crate::error::{invalid, Error, Result};
use crate::ideal::{PrimeComponent, SquarefreeIdeal, VariableUniverse};
use crate::varset::VarSet;
use crate::verdict::Verdict;

/// One summand `I_q J_r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Summand {
    pub q: usize,
    pub r: usize,
}

impl Summand {
    pub const fn new(q: usize, r: usize) -> Self {
        Summand { q, r }
    }

    /// `I_q J_r ⊆ I_{q'} J_{r'}` for distinct summands.
    fn dominated_by(&self, other: &Summand) -> bool {
        self != other && other.q <= self.q && other.r <= self.r
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.q, self.r)
    }
}

impl FromStr for Summand {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (q, r) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| invalid(format!("summand `{s}` is not of the form q:r")))?;
        let parse = |t: &str| {
            t.trim().parse::<usize>().map_err(|_| {
                invalid(format!(
                    "`{t}` in summand `{s}` is not a non-negative integer"
                ))
            })
        };
        Ok(Summand::new(parse(q)?, parse(r)?))
    }
}

/// Parses a comma-separated list such as `1:2,2:1`.
pub fn parse_pairs(s: &str) -> Result<Vec<Summand>> {
    if s.trim().is_empty() {
        return Err(invalid("no summands given"));
    }
    s.split(',').map(str::parse).collect()
}

/// Something normalization changed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalizeWarning {
    /// `q > n` or `r > m`, so the summand is the zero ideal.
    ZeroSummand(Summand),
    /// The summand is contained in another one.
    Dominated {
        dropped: Summand,
        by: Summand,
    },
    Duplicate(Summand),
    Reordered,
}

impl fmt::Display for NormalizeWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalizeWarning::ZeroSummand(s) => write!(f, "dropped zero summand {s}"),
            NormalizeWarning::Dominated { dropped, by } => {
                write!(f, "dropped summand {dropped}, contained in {by}")
            }
            NormalizeWarning::Duplicate(s) => write!(f, "dropped duplicate summand {s}"),
            NormalizeWarning::Reordered => write!(f, "summands reordered by increasing q"),
        }
    }
}

/// A normalized mixed product ideal: `0 ≤ q_1 < … < q_s ≤ n`, `m ≥ r_1 > … > r_s ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MixedProductSpec {
    universe: VariableUniverse,
    summands: Vec<Summand>,
}

impl MixedProductSpec {
    /// Normalizes raw summands, discarding warnings.
    pub fn new(universe: VariableUniverse, summands: &[Summand]) -> Result<Self> {
        Self::normalize(universe, summands).map(|(spec, _)| spec)
    }

    pub fn from_pairs(n: usize, m: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let summands: Vec<Summand> = pairs.iter().map(|&(q, r)| Summand::new(q, r)).collect();
        Self::new(VariableUniverse::new(n, m)?, &summands)
    }

    /// Drops zero, duplicate and dominated summands and sorts by `q`.
    pub fn normalize(
        universe: VariableUniverse,
        summands: &[Summand],
    ) -> Result<(Self, Vec<NormalizeWarning>)> {
        if summands.is_empty() {
            return Err(invalid("a mixed product needs at least one summand"));
        }
        if summands.iter().any(|s| s.q == 0 && s.r == 0) {
            return Err(Error::NonProper);
        }
        let mut warnings = Vec::new();
        let mut live: Vec<Summand> = Vec::new();
        for &s in summands {
            if s.q > universe.n() || s.r > universe.m() {
                warnings.push(NormalizeWarning::ZeroSummand(s));
            } else if live.contains(&s) {
                warnings.push(NormalizeWarning::Duplicate(s));
            } else {
                live.push(s);
            }
        }
        if live.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        let mut kept: Vec<Summand> = Vec::with_capacity(live.len());
        for &s in &live {
            match live.iter().find(|o| s.dominated_by(o)) {
                Some(&by) => warnings.push(NormalizeWarning::Dominated { dropped: s, by }),
                None => kept.push(s),
            }
        }
        let before = kept.clone();
        kept.sort();
        if kept != before {
            warnings.push(NormalizeWarning::Reordered);
        }
        let spec = MixedProductSpec {
            universe,
            summands: kept,
        };
        debug_assert!(spec.is_normalized());
        Ok((spec, warnings))
    }

    fn is_normalized(&self) -> bool {
        let s = &self.summands;
        !s.is_empty()
            && s.windows(2).all(|w| w[0].q < w[1].q && w[0].r > w[1].r)
            && s.iter()
                .all(|x| x.q <= self.n() && x.r <= self.m() && x.q + x.r > 0)
    }

    pub fn universe(&self) -> VariableUniverse {
        self.universe
    }

    pub fn n(&self) -> usize {
        self.universe.n()
    }

    pub fn m(&self) -> usize {
        self.universe.m()
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    /// Number of summands `s`.
    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn pairs_string(&self) -> String {
        let parts: Vec<String> = self.summands.iter().map(Summand::to_string).collect();
        parts.join(",")
    }

    /// Number of minimal generators, `Σ C(n, q_i) C(m, r_i)`.
    pub fn generator_count(&self) -> u128 {
        self.summands
            .iter()
            .map(|s| binomial(self.n(), s.q).saturating_mul(binomial(self.m(), s.r)))
            .fold(0u128, u128::saturating_add)
    }

    /// All minimal generators of the ideal.
    pub fn expand_generators(&self, caps: &Caps) -> Result<SquarefreeIdeal> {
        self.universe.require_addressable()?;
        caps.check_vertices(self.universe.len())?;
        caps.check_items("generator count", self.generator_count())?;
        let x = self.universe.x_block();
        let y = self.universe.y_block();
        let mut sets = Vec::new();
        for s in &self.summands {
            let xs = x.subsets_of_size(s.q);
            let ys = y.subsets_of_size(s.r);
            for a in &xs {
                for b in &ys {
                    sets.push(a.union(*b));
                }
            }
        }
        let count = sets.len();
        let ideal = SquarefreeIdeal::from_supports_unchecked(self.universe, sets);
        // normalized summands never divide one another's generators
        assert_eq!(
            ideal.generators().len(),
            count,
            "cross-summand divisibility"
        );
        Ok(ideal)
    }

    /// The `(s', q̄, r̄)` profile.
    pub fn qr_profile(&self) -> QrProfile {
        let (n, m) = (self.n(), self.m());
        let s = self.len();
        let q = |i: usize| -> usize {
            // 1-based, with q_{s+1} = n + 1
            if i == s + 1 {
                n + 1
            } else {
                self.summands[i - 1].q
            }
        };
        let r = |i: usize| -> usize {
            // 1-based, with r_0 = m + 1
            if i == 0 {
                m + 1
            } else {
                self.summands[i - 1].r
            }
        };
        let q1_pos = q(1) > 0;
        let rs_pos = r(s) > 0;
        let s_prime = match (q1_pos, rs_pos) {
            (true, true) => s + 1,
            (false, false) => s - 1,
            _ => s,
        };
        let (q_bar, r_bar): (Vec<usize>, Vec<usize>) = (1..=s_prime)
            .map(|i| {
                if q1_pos {
                    (q(i) - 1, r(i - 1) - 1)
                } else {
                    (q(i + 1) - 1, r(i) - 1)
                }
            })
            .unzip();
        QrProfile::from_vectors(self.universe, q_bar, r_bar)
            .expect("profile of a normalized spec is valid")
    }

    /// Alexander dual as a mixed product:
    /// `I_{n-q_1+1} + Σ_{i<s} I_{n-q_{i+1}+1} J_{m-r_i+1} + J_{m-r_s+1}`.
    pub fn closed_form_dual(&self) -> MixedProductSpec {
        let (n, m) = (self.n(), self.m());
        let s = &self.summands;
        let mut dual = Vec::with_capacity(s.len() + 1);
        dual.push(Summand::new(n - s[0].q + 1, 0));
        for i in 0..s.len() - 1 {
            dual.push(Summand::new(n - s[i + 1].q + 1, m - s[i].r + 1));
        }
        dual.push(Summand::new(0, m - s[s.len() - 1].r + 1));
        MixedProductSpec::new(self.universe, &dual)
            .expect("dual of a proper mixed product is proper")
    }

    /// Component sizes of the `P_x`, `P_xy` and `P_y` blocks, with their counts.
    fn component_blocks(&self) -> Vec<ComponentBlockShape> {
        let (n, m) = (self.n(), self.m());
        let s = &self.summands;
        let mut blocks = Vec::new();
        if s[0].q > 0 {
            blocks.push(ComponentBlockShape {
                kind: BlockKind::X,
                x: n - s[0].q + 1,
                y: 0,
            });
        }
        for i in 0..s.len() - 1 {
            blocks.push(ComponentBlockShape {
                kind: BlockKind::Xy(i + 1),
                x: n - s[i + 1].q + 1,
                y: m - s[i].r + 1,
            });
        }
        if s[s.len() - 1].r > 0 {
            blocks.push(ComponentBlockShape {
                kind: BlockKind::Y,
                x: 0,
                y: m - s[s.len() - 1].r + 1,
            });
        }
        blocks
    }

    /// `Σ` over components of binomial counts.
    pub fn component_count(&self) -> u128 {
        self.component_blocks()
            .iter()
            .map(|b| binomial(self.n(), b.x).saturating_mul(binomial(self.m(), b.y)))
            .fold(0u128, u128::saturating_add)
    }

    /// Minimal primes grouped into `P_x`, `P_xy` (one group per `i < s`) and `P_y`.
    pub fn closed_form_primary_decomposition(&self, caps: &Caps) -> Result<PrimaryDecomposition> {
        self.universe.require_addressable()?;
        caps.check_vertices(self.universe.len())?;
        caps.check_items("component count", self.component_count())?;
        let xb = self.universe.x_block();
        let yb = self.universe.y_block();
        let mut groups = Vec::new();
        for shape in self.component_blocks() {
            let mut comps = Vec::new();
            for a in xb.subsets_of_size(shape.x) {
                for b in yb.subsets_of_size(shape.y) {
                    comps.push(PrimeComponent::new(a.union(b))?);
                }
            }
            comps.sort();
            groups.push(ComponentGroup {
                kind: shape.kind,
                size: shape.x + shape.y,
                components: comps,
            });
        }
        Ok(PrimaryDecomposition {
            height: self.qr_profile().height,
            groups,
        })
    }

    /// Unmixedness from the component sizes of the closed-form decomposition.
    pub fn is_unmixed_closed_form(&self) -> Verdict<UnmixedViolation> {
        let (n, m) = (self.n(), self.m());
        let h = self.qr_profile().height;
        let s = &self.summands;
        debug_assert_eq!(
            Some(h),
            self.component_blocks().iter().map(|b| b.x + b.y).min(),
            "height must equal the smallest component"
        );
        for i in 0..s.len() - 1 {
            let size = m + n + 2 - (s[i + 1].q + s[i].r);
            if size != h {
                return Verdict::Fails(UnmixedViolation {
                    condition: UnmixedCondition::Mixed { index: i + 1 },
                    component_size: size,
                    height: h,
                });
            }
        }
        if s[0].q > 0 && n - s[0].q + 1 != h {
            return Verdict::Fails(UnmixedViolation {
                condition: UnmixedCondition::XOnly,
                component_size: n - s[0].q + 1,
                height: h,
            });
        }
        let rs = s[s.len() - 1].r;
        if rs > 0 && m - rs + 1 != h {
            return Verdict::Fails(UnmixedViolation {
                condition: UnmixedCondition::YOnly,
                component_size: m - rs + 1,
                height: h,
            });
        }
        Verdict::Holds
    }

    /// Cohen-Macaulay iff `q(i+1) = q(i) + 1` and `r(i+1) = r(i) - 1` for all `i < s'`.
    pub fn is_cm_closed_form(&self) -> Verdict<ProfileViolation> {
        self.qr_profile().cm_verdict(false)
    }

    /// Like [`is_cm_closed_form`](Self::is_cm_closed_form) but ignoring the
    /// r-step condition. Only for exercising the verification harness.
    pub fn is_cm_closed_form_perturbed(&self) -> Verdict<ProfileViolation> {
        self.qr_profile().cm_verdict(true)
    }

    /// Sequentially Cohen-Macaulay iff every step moves `q` up by one or `r`
    /// down by one, and `σ` is unimodal.
    pub fn is_scm_closed_form(&self) -> Verdict<ProfileViolation> {
        self.qr_profile().scm_verdict()
    }

    /// Facets grouped into blocks of `q(k)` x-vertices and `r(k)` y-vertices.
    pub fn facet_partition(&self, caps: &Caps) -> Result<Vec<FacetBlock>> {
        let profile = self.qr_profile();
        self.universe.require_addressable()?;
        caps.check_vertices(self.universe.len())?;
        caps.check_items("facet count", self.facet_count())?;
        let xb = self.universe.x_block();
        let yb = self.universe.y_block();
        Ok((0..profile.s_prime)
            .map(|k| {
                let (q, r) = (profile.q_bar[k], profile.r_bar[k]);
                let ys = yb.subsets_of_size(r);
                let facets = xb
                    .subsets_of_size(q)
                    .into_iter()
                    .flat_map(|a| ys.iter().map(move |b| a.union(*b)))
                    .collect();
                FacetBlock { q, r, facets }
            })
            .collect())
    }

    pub fn facet_count(&self) -> u128 {
        let p = self.qr_profile();
        p.q_bar
            .iter()
            .zip(&p.r_bar)
            .map(|(&q, &r)| binomial(self.n(), q).saturating_mul(binomial(self.m(), r)))
            .fold(0u128, u128::saturating_add)
    }

    /// The Stanley-Reisner complex, assembled from the facet partition.
    pub fn complex(&self, caps: &Caps) -> Result<SimplicialComplex> {
        let facets = self
            .facet_partition(caps)?
            .into_iter()
            .flat_map(|b| b.facets)
            .collect();
        SimplicialComplex::new(self.universe, facets)
    }

    /// The explicit shelling for profiles whose x-degrees (or y-degrees) step by one.
    ///
    /// With unit q-steps blocks are taken in increasing `k`, with unit r-steps in
    /// decreasing `k`; inside a block facets go lexicographically by their
    /// x-part, then by their y-part. Returns `None` when neither condition holds.
    pub fn shelling_order(&self, caps: &Caps) -> Result<Option<ShellingConstruction>> {
        let p = self.qr_profile();
        let q_steps = p.q_bar.windows(2).all(|w| w[1] == w[0] + 1);
        let r_steps = p.r_bar.windows(2).all(|w| w[1] + 1 == w[0]);
        let direction = if q_steps {
            ShellingDirection::IncreasingQ
        } else if r_steps {
            ShellingDirection::DecreasingR
        } else {
            return Ok(None);
        };
        let mut blocks = self.facet_partition(caps)?;
        if direction == ShellingDirection::DecreasingR {
            blocks.reverse();
        }
        let order = blocks.into_iter().flat_map(|b| b.facets).collect();
        Ok(Some(ShellingConstruction { direction, order }))
    }

    /// Block descriptors `(q', r')` of the pure skeleton `Δ^{[l-1]}`.
    ///
    /// Each block `k` with `σ(k) ≥ l` contributes the faces of size `l` with
    /// x-count from `max(0, l - r(k))` up to `min(q(k), l)`; the families are
    /// merged and sorted by x-count.
    pub fn skeleton_profile(&self, l: usize) -> Result<SkeletonProfile> {
        let p = self.qr_profile();
        if l > p.dim_ring {
            return Err(invalid(format!(
                "skeleton level {l} outside 0..={}",
                p.dim_ring
            )));
        }
        let mut xs: Vec<usize> = Vec::new();
        for k in 0..p.s_prime {
            if p.sigma[k] < l {
                continue;
            }
            let top = p.q_bar[k].min(l);
            let bottom = l - p.r_bar[k].min(l);
            xs.extend(bottom..=top);
        }
        xs.sort_unstable();
        xs.dedup();
        Ok(SkeletonProfile {
            level: l,
            r_bar: xs.iter().map(|&q| l - q).collect(),
            q_bar: xs,
        })
    }
}

impl fmt::Display for MixedProductSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .summands
            .iter()
            .map(|s| match (s.q, s.r) {
                (q, 0) => format!("I{q}"),
                (0, r) => format!("J{r}"),
                (q, r) => format!("I{q}J{r}"),
            })
            .collect();
        write!(f, "{} (n={}, m={})", terms.join(" + "), self.n(), self.m())
    }
}

/// The vectors `q̄`, `r̄`, `σ` with height and Krull dimension of `S/I`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QrProfile {
    pub universe: VariableUniverse,
    pub s_prime: usize,
    pub q_bar: Vec<usize>,
    pub r_bar: Vec<usize>,
    pub sigma: Vec<usize>,
    pub height: usize,
    pub dim_ring: usize,
}

impl QrProfile {
    /// Validates `0 ≤ q(1) < … < q(s') ≤ n` and `m ≥ r(1) > … > r(s') ≥ 0`.
    pub fn from_vectors(
        universe: VariableUniverse,
        q_bar: Vec<usize>,
        r_bar: Vec<usize>,
    ) -> Result<Self> {
        if q_bar.is_empty() || q_bar.len() != r_bar.len() {
            return Err(invalid("q̄ and r̄ must be nonempty and of equal length"));
        }
        if !q_bar.windows(2).all(|w| w[0] < w[1]) {
            return Err(invalid(format!("q̄ = {q_bar:?} is not strictly increasing")));
        }
        if !r_bar.windows(2).all(|w| w[0] > w[1]) {
            return Err(invalid(format!("r̄ = {r_bar:?} is not strictly decreasing")));
        }
        if q_bar[q_bar.len() - 1] > universe.n() || r_bar[0] > universe.m() {
            return Err(invalid("profile entries exceed the block sizes"));
        }
        let sigma: Vec<usize> = q_bar.iter().zip(&r_bar).map(|(q, r)| q + r).collect();
        let dim_ring = *sigma.iter().max().expect("nonempty");
        Ok(QrProfile {
            universe,
            s_prime: q_bar.len(),
            height: universe.len() - dim_ring,
            dim_ring,
            q_bar,
            r_bar,
            sigma,
        })
    }

    /// Recovers the summands from the profile.
    pub fn spec_from_profile(&self) -> Result<MixedProductSpec> {
        let (n, m) = (self.universe.n(), self.universe.m());
        let sp = self.s_prime;
        let r_top = self.r_bar[0] == m;
        let q_top = self.q_bar[sp - 1] == n;
        let s = match (r_top, q_top) {
            (true, true) => sp - 1,
            (false, false) => sp + 1,
            _ => sp,
        };
        if s == 0 {
            return Err(invalid("profile describes no summands"));
        }
        // 1-based accessors with q(0) = r(s'+1) = -1
        let q = |i: usize| -> isize {
            if i == 0 {
                -1
            } else {
                self.q_bar[i - 1] as isize
            }
        };
        let r = |i: usize| -> isize {
            if i == sp + 1 {
                -1
            } else {
                self.r_bar[i - 1] as isize
            }
        };
        let summands: Vec<Summand> = (1..=s)
            .map(|i| {
                let (qi, ri) = if r_top {
                    (q(i) + 1, r(i + 1) + 1)
                } else {
                    (q(i - 1) + 1, r(i) + 1)
                };
                Summand::new(qi as usize, ri as usize)
            })
            .collect();
        let (spec, warnings) = MixedProductSpec::normalize(self.universe, &summands)?;
        if !warnings.is_empty() {
            return Err(invalid(format!(
                "profile does not describe a normalized spec: {}",
                warnings[0]
            )));
        }
        Ok(spec)
    }

    fn cm_verdict(&self, ignore_r: bool) -> Verdict<ProfileViolation> {
        for i in 0..self.s_prime.saturating_sub(1) {
            if self.q_bar[i + 1] != self.q_bar[i] + 1 {
                return Verdict::Fails(ProfileViolation::QStep { index: i + 1 });
            }
            if !ignore_r && self.r_bar[i + 1] + 1 != self.r_bar[i] {
                return Verdict::Fails(ProfileViolation::RStep { index: i + 1 });
            }
        }
        Verdict::Holds
    }

    fn scm_verdict(&self) -> Verdict<ProfileViolation> {
        for i in 0..self.s_prime.saturating_sub(1) {
            let q_ok = self.q_bar[i + 1] == self.q_bar[i] + 1;
            let r_ok = self.r_bar[i + 1] + 1 == self.r_bar[i];
            if !q_ok && !r_ok {
                return Verdict::Fails(ProfileViolation::Step { index: i + 1 });
            }
        }
        match sigma_valley(&self.sigma) {
            Some((left, valley, right)) => Verdict::Fails(ProfileViolation::Valley {
                left,
                valley,
                right,
            }),
            None => Verdict::Holds,
        }
    }
}

/// First `(k⁻, k, k⁺)` (1-based) with `σ(k⁻) > σ(k) < σ(k⁺)`, if `σ` is not unimodal.
fn sigma_valley(sigma: &[usize]) -> Option<(usize, usize, usize)> {
    let descent = (0..sigma.len().saturating_sub(1)).find(|&i| sigma[i] > sigma[i + 1])?;
    let ascent = (descent + 1..sigma.len() - 1).find(|&j| sigma[j] < sigma[j + 1])?;
    Some((descent + 1, ascent + 1, ascent + 2))
}

/// Why a profile condition fails; indices are 1-based as in `q(i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProfileViolation {
    /// `q(i+1) ≠ q(i) + 1`.
    QStep { index: usize },
    /// `r(i+1) ≠ r(i) - 1`.
    RStep { index: usize },
    /// Neither unit step holds between `i` and `i + 1`.
    Step { index: usize },
    /// `σ(left) > σ(valley) < σ(right)`.
    Valley {
        left: usize,
        valley: usize,
        right: usize,
    },
}

impl fmt::Display for ProfileViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProfileViolation::QStep { index } => write!(f, "q({}) != q({index}) + 1", index + 1),
            ProfileViolation::RStep { index } => write!(f, "r({}) != r({index}) - 1", index + 1),
            ProfileViolation::Step { index } => write!(
                f,
                "neither q({0}) = q({1}) - 1 nor r({0}) = r({1}) + 1",
                index,
                index + 1
            ),
            ProfileViolation::Valley {
                left,
                valley,
                right,
            } => write!(f, "sigma({left}) > sigma({valley}) < sigma({right})"),
        }
    }
}

/// Which unmixedness condition failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnmixedCondition {
    /// `m + n - (q_{i+1} + r_i) + 2 = h`.
    Mixed { index: usize },
    /// `n - q_1 + 1 = h` when `q_1 > 0`.
    XOnly,
    /// `m - r_s + 1 = h` when `r_s > 0`.
    YOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnmixedViolation {
    pub condition: UnmixedCondition,
    pub component_size: usize,
    pub height: usize,
}

impl fmt::Display for UnmixedViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let which = match self.condition {
            UnmixedCondition::Mixed { index } => format!("P_xy block {index}"),
            UnmixedCondition::XOnly => "P_x block".to_string(),
            UnmixedCondition::YOnly => "P_y block".to_string(),
        };
        write!(
            f,
            "{which} has components of size {} but the height is {}",
            self.component_size, self.height
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKind {
    X,
    /// `P_xy` group for summand index `i` (1-based, `i < s`).
    Xy(usize),
    Y,
}

#[derive(Debug, Clone, Copy)]
struct ComponentBlockShape {
    kind: BlockKind,
    x: usize,
    y: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentGroup {
    pub kind: BlockKind,
    /// Common size of the primes in this group.
    pub size: usize,
    pub components: Vec<PrimeComponent>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimaryDecomposition {
    pub height: usize,
    pub groups: Vec<ComponentGroup>,
}

impl PrimaryDecomposition {
    /// All components, canonically sorted.
    pub fn components(&self) -> Vec<PrimeComponent> {
        let mut all: Vec<PrimeComponent> = self
            .groups
            .iter()
            .flat_map(|g| g.components.iter().copied())
            .collect();
        all.sort();
        all
    }
}

/// Facets with exactly `q` x-vertices and `r` y-vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetBlock {
    pub q: usize,
    pub r: usize,
    pub facets: Vec<VarSet>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShellingDirection {
    IncreasingQ,
    DecreasingR,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShellingConstruction {
    pub direction: ShellingDirection,
    pub order: Vec<VarSet>,
}

/// Facet-block descriptors of a pure skeleton: block `i` has `q_bar[i]`
/// x-vertices and `r_bar[i]` y-vertices, with `q_bar[i] + r_bar[i] = level`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletonProfile {
    pub level: usize,
    pub q_bar: Vec<usize>,
    pub r_bar: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(n: usize, m: usize, pairs: &[(usize, usize)]) -> MixedProductSpec {
        MixedProductSpec::from_pairs(n, m, pairs).unwrap()
    }

    fn pairs(s: &MixedProductSpec) -> Vec<(usize, usize)> {
        s.summands().iter().map(|s| (s.q, s.r)).collect()
    }

    fn names(spec: &MixedProductSpec, sets: &[VarSet]) -> Vec<String> {
        sets.iter()
            .map(|s| spec.universe().format_monomial(*s))
            .collect()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(pairs(&spec(2, 2, &[(1, 1), (2, 2)])), vec![(1, 1)]);
        assert_eq!(pairs(&spec(2, 2, &[(3, 1), (1, 2)])), vec![(1, 2)]);
        assert_eq!(pairs(&spec(3, 3, &[(2, 1), (1, 2)])), vec![(1, 2), (2, 1)]);
    }

    #[test]
    fn normalize_warnings() {
        let u = VariableUniverse::new(2, 2).unwrap();
        let (_, w) = MixedProductSpec::normalize(
            u,
            &[
                Summand::new(2, 1),
                Summand::new(3, 0),
                Summand::new(1, 1),
                Summand::new(1, 1),
            ],
        )
        .unwrap();
        assert!(w.contains(&NormalizeWarning::ZeroSummand(Summand::new(3, 0))));
        assert!(w.contains(&NormalizeWarning::Duplicate(Summand::new(1, 1))));
        assert!(w.contains(&NormalizeWarning::Dominated {
            dropped: Summand::new(2, 1),
            by: Summand::new(1, 1)
        }));
    }

    #[test]
    fn normalize_errors() {
        let u = VariableUniverse::new(2, 2).unwrap();
        assert!(matches!(
            MixedProductSpec::normalize(u, &[]),
            Err(Error::InvalidInput(_))
        ));
        assert_eq!(
            MixedProductSpec::new(u, &[Summand::new(0, 0), Summand::new(1, 1)]),
            Err(Error::NonProper)
        );
        assert_eq!(
            MixedProductSpec::new(u, &[Summand::new(3, 0), Summand::new(0, 3)]),
            Err(Error::ZeroIdeal)
        );
    }

    #[test]
    fn parse_pairs_accepts_and_rejects() {
        assert_eq!(
            parse_pairs("1:2, 2:1").unwrap(),
            vec![Summand::new(1, 2), Summand::new(2, 1)]
        );
        assert!(parse_pairs("").is_err());
        assert!(parse_pairs("1-2").is_err());
        assert!(parse_pairs("1:-2").is_err());
        assert!(parse_pairs("1:2,").is_err());
    }

    #[test]
    fn expand_examples() {
        let caps = Caps::default();
        let s = spec(1, 1, &[(1, 1)]);
        assert_eq!(
            names(
                &s,
                &s.expand_generators(&caps)
                    .unwrap()
                    .supports()
                    .collect::<Vec<_>>()
            ),
            ["x1y1"]
        );
        let s = spec(2, 2, &[(1, 1)]);
        let g: Vec<VarSet> = s.expand_generators(&caps).unwrap().supports().collect();
        assert_eq!(names(&s, &g), ["x1y1", "x1y2", "x2y1", "x2y2"]);
        let s = spec(2, 2, &[(0, 2), (2, 0)]);
        let g: Vec<VarSet> = s.expand_generators(&caps).unwrap().supports().collect();
        assert_eq!(names(&s, &g), ["x1x2", "y1y2"]);
    }

    #[test]
    fn expand_respects_caps() {
        let caps = Caps {
            items: 5,
            ..Caps::default()
        };
        assert!(matches!(
            spec(3, 3, &[(1, 1)]).expand_generators(&caps),
            Err(Error::Resource { .. })
        ));
        assert!(spec(15, 15, &[(1, 1)])
            .expand_generators(&Caps::default())
            .is_err());
    }

    #[test]
    fn profile_examples() {
        let p = spec(2, 2, &[(1, 1)]).qr_profile();
        assert_eq!(
            (p.s_prime, p.q_bar, p.r_bar, p.sigma),
            (2, vec![0, 2], vec![2, 0], vec![2, 2])
        );
        let p = spec(1, 3, &[(1, 1)]).qr_profile();
        assert_eq!(
            (p.s_prime, p.q_bar, p.r_bar, p.sigma),
            (2, vec![0, 1], vec![3, 0], vec![3, 1])
        );
        assert_eq!((p.dim_ring, p.height), (3, 1));
        let p = spec(2, 2, &[(0, 1), (1, 0)]).qr_profile();
        assert_eq!(
            (p.s_prime, p.q_bar, p.r_bar, p.sigma),
            (1, vec![0], vec![0], vec![0])
        );
        assert_eq!(p.dim_ring, 0);
    }

    #[test]
    fn profile_inverse_examples() {
        let u = VariableUniverse::new(2, 2).unwrap();
        let p = QrProfile::from_vectors(u, vec![0, 2], vec![2, 0]).unwrap();
        assert_eq!(pairs(&p.spec_from_profile().unwrap()), vec![(1, 1)]);
        let p = QrProfile::from_vectors(u, vec![0], vec![0]).unwrap();
        assert_eq!(pairs(&p.spec_from_profile().unwrap()), vec![(0, 1), (1, 0)]);
    }

    #[test]
    fn profile_validation() {
        let u = VariableUniverse::new(2, 2).unwrap();
        assert!(QrProfile::from_vectors(u, vec![1, 0], vec![2, 0]).is_err());
        assert!(QrProfile::from_vectors(u, vec![0, 1], vec![0, 2]).is_err());
        assert!(QrProfile::from_vectors(u, vec![0, 3], vec![2, 0]).is_err());
        assert!(QrProfile::from_vectors(u, vec![0], vec![0, 1]).is_err());
        assert!(QrProfile::from_vectors(u, vec![], vec![]).is_err());
        // s' = 1 with q(1) = n and r(1) = m would need s = 0
        let full = QrProfile::from_vectors(u, vec![2], vec![2]).unwrap();
        assert!(full.spec_from_profile().is_err());
    }

    #[test]
    fn dual_examples() {
        assert_eq!(
            pairs(&spec(3, 2, &[(2, 1)]).closed_form_dual()),
            vec![(0, 2), (2, 0)]
        );
        assert_eq!(
            pairs(&spec(1, 1, &[(1, 1)]).closed_form_dual()),
            vec![(0, 1), (1, 0)]
        );
    }

    #[test]
    fn decomposition_examples() {
        let caps = Caps::default();
        let s = spec(2, 2, &[(1, 1)]);
        let d = s.closed_form_primary_decomposition(&caps).unwrap();
        let comps: Vec<VarSet> = d.components().iter().map(|p| p.variables()).collect();
        assert_eq!(
            comps,
            vec![VarSet::from_indices([0, 1]), VarSet::from_indices([2, 3])]
        );
        assert_eq!(d.height, 2);

        let s = spec(2, 2, &[(1, 2), (2, 1)]);
        let d = s.closed_form_primary_decomposition(&caps).unwrap();
        let sizes: Vec<(BlockKind, usize)> = d
            .groups
            .iter()
            .map(|g| (g.kind, g.components.len()))
            .collect();
        assert_eq!(
            sizes,
            vec![(BlockKind::X, 1), (BlockKind::Xy(1), 4), (BlockKind::Y, 1)]
        );
    }

    #[test]
    fn unmixed_examples() {
        assert!(spec(2, 2, &[(1, 1)]).is_unmixed_closed_form().holds());
        let v = spec(1, 3, &[(1, 1)]).is_unmixed_closed_form();
        assert!(!v.holds());
        let s = spec(2, 2, &[(1, 2), (2, 1)]);
        assert_eq!(s.qr_profile().height, 2);
        assert!(s.is_unmixed_closed_form().holds());
    }

    #[test]
    fn cm_examples() {
        assert!(spec(1, 1, &[(1, 1)]).is_cm_closed_form().holds());
        assert_eq!(
            spec(2, 2, &[(1, 1)]).is_cm_closed_form(),
            Verdict::Fails(ProfileViolation::QStep { index: 1 })
        );
        assert!(spec(2, 2, &[(1, 2), (2, 1)]).is_cm_closed_form().holds());
        // perturbation drops the r-step check
        let star = spec(1, 3, &[(1, 1)]);
        assert!(!star.is_cm_closed_form().holds());
        assert!(star.is_cm_closed_form_perturbed().holds());
    }

    #[test]
    fn scm_examples() {
        assert!(spec(1, 3, &[(1, 1)]).is_scm_closed_form().holds());
        assert_eq!(
            spec(2, 2, &[(1, 1)]).is_scm_closed_form(),
            Verdict::Fails(ProfileViolation::Step { index: 1 })
        );
        assert!(spec(2, 2, &[(1, 2), (2, 1)]).is_scm_closed_form().holds());
    }

    #[test]
    fn valley_detection() {
        assert_eq!(sigma_valley(&[3, 1, 2]), Some((1, 2, 3)));
        assert_eq!(sigma_valley(&[1, 3, 3, 2, 2, 4]), Some((3, 5, 6)));
        assert_eq!(sigma_valley(&[1, 2, 2, 1]), None);
        assert_eq!(sigma_valley(&[2]), None);
    }

    #[test]
    fn facet_partition_examples() {
        let caps = Caps::default();
        let s = spec(2, 2, &[(1, 1)]);
        let blocks = s.facet_partition(&caps).unwrap();
        assert_eq!(names(&s, &blocks[0].facets), ["y1y2"]);
        assert_eq!(names(&s, &blocks[1].facets), ["x1x2"]);
        let s = spec(2, 2, &[(1, 2), (2, 1)]);
        let sizes: Vec<usize> = s
            .facet_partition(&caps)
            .unwrap()
            .iter()
            .map(|b| b.facets.len())
            .collect();
        assert_eq!(sizes, vec![1, 4, 1]);
        assert_eq!(s.facet_count(), 6);
    }

    #[test]
    fn shelling_order_examples() {
        let caps = Caps::default();
        let s = spec(2, 2, &[(1, 2), (2, 1)]);
        let c = s.shelling_order(&caps).unwrap().unwrap();
        assert_eq!(c.direction, ShellingDirection::IncreasingQ);
        assert_eq!(
            names(&s, &c.order),
            ["y1y2", "x1y1", "x1y2", "x2y1", "x2y2", "x1x2"]
        );
        let s = spec(1, 3, &[(1, 1)]);
        let c = s.shelling_order(&caps).unwrap().unwrap();
        assert_eq!(names(&s, &c.order), ["y1y2y3", "x1"]);
        assert!(spec(2, 2, &[(1, 1)])
            .shelling_order(&caps)
            .unwrap()
            .is_none());
    }

    #[test]
    fn shelling_order_uses_r_steps() {
        // q̄ = (0, 2), r̄ = (1, 0): only the r-step condition holds
        let s = spec(2, 1, &[(1, 1)]);
        let p = s.qr_profile();
        assert_eq!((p.q_bar.clone(), p.r_bar.clone()), (vec![0, 2], vec![1, 0]));
        let c = s.shelling_order(&Caps::default()).unwrap().unwrap();
        assert_eq!(c.direction, ShellingDirection::DecreasingR);
        assert_eq!(names(&s, &c.order), ["x1x2", "y1"]);
    }

    #[test]
    fn skeleton_profile_examples() {
        let s = spec(1, 3, &[(1, 1)]);
        let sp = s.skeleton_profile(1).unwrap();
        assert_eq!((sp.q_bar, sp.r_bar), (vec![0, 1], vec![1, 0]));
        let top = s.skeleton_profile(3).unwrap();
        assert_eq!((top.q_bar, top.r_bar), (vec![0], vec![3]));
        assert!(s.skeleton_profile(4).is_err());
        let zero = s.skeleton_profile(0).unwrap();
        assert_eq!((zero.q_bar, zero.r_bar), (vec![0], vec![0]));
    }

    #[test]
    fn display() {
        assert_eq!(
            spec(2, 2, &[(0, 1), (1, 0)]).to_string(),
            "J1 + I1 (n=2, m=2)"
        );
        assert_eq!(spec(2, 2, &[(2, 1), (1, 2)]).pairs_string(), "1:2,2:1");
    }
}
