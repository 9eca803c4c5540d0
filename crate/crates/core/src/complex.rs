//! Simplicial complexes and the brute-force oracles run against the closed forms.

use std::collections::HashSet;

use crate::caps::Caps;
use crate::error::{domain, invalid, Result};
use crate::homology::homology_below;
use crate::ideal::VariableUniverse;
use crate::varset::{maximal_sets, VarSet};
use crate::verdict::Verdict;

/// A simplicial complex on the variables of a universe, stored by its facets.
///
/// The facet list is an inclusion antichain in canonical order and is never
/// empty: the complex with facet list `[∅]` is the `(-1)`-dimensional one.
/// Vertices covered by no facet are simply absent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    universe: VariableUniverse,
    facets: Vec<VarSet>,
}

impl SimplicialComplex {
    /// Builds the complex generated by `faces`; non-maximal entries are dropped.
    pub fn new(universe: VariableUniverse, faces: Vec<VarSet>) -> Result<Self> {
        universe.require_addressable()?;
        if let Some(bad) = faces.iter().find(|f| !universe.contains(**f)) {
            return Err(invalid(format!(
                "face {bad:?} has a vertex outside 0..{}",
                universe.len()
            )));
        }
        let facets = if faces.is_empty() {
            vec![VarSet::EMPTY]
        } else {
            maximal_sets(faces)
        };
        Ok(SimplicialComplex { universe, facets })
    }

    pub fn universe(&self) -> VariableUniverse {
        self.universe
    }

    pub fn facets(&self) -> &[VarSet] {
        &self.facets
    }

    /// Union of the facets.
    pub fn vertices(&self) -> VarSet {
        self.facets
            .iter()
            .fold(VarSet::EMPTY, |acc, f| acc.union(*f))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices().len()
    }

    pub fn contains_face(&self, face: VarSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.len()).max().unwrap_or(0) as isize - 1
    }

    pub fn is_pure(&self) -> bool {
        let size = self.facets[0].len();
        self.facets.iter().all(|f| f.len() == size)
    }

    /// All faces of dimension `d`, canonically sorted.
    pub fn faces_of_dim(&self, d: isize) -> Result<Vec<VarSet>> {
        if d < -1 || d > self.dim() {
            return Err(invalid(format!(
                "face dimension {d} outside -1..={}",
                self.dim()
            )));
        }
        let k = (d + 1) as usize;
        let mut faces: Vec<VarSet> = self
            .facets
            .iter()
            .filter(|f| f.len() >= k)
            .flat_map(|f| f.subsets_of_size(k))
            .collect();
        faces.sort();
        faces.dedup();
        Ok(faces)
    }

    /// Every face, canonically sorted (so `∅` comes first).
    pub fn all_faces(&self) -> Vec<VarSet> {
        let mut faces: Vec<VarSet> = (-1..=self.dim())
            .flat_map(|d| self.faces_of_dim(d).expect("degree in range"))
            .collect();
        faces.sort();
        faces
    }

    /// The pure complex generated by the `(l-1)`-dimensional faces.
    pub fn skeleton(&self, l: usize) -> Result<SimplicialComplex> {
        if l as isize > self.dim() + 1 {
            return Err(invalid(format!(
                "skeleton level {l} outside 0..={}",
                self.dim() + 1
            )));
        }
        let faces = self.faces_of_dim(l as isize - 1)?;
        Ok(SimplicialComplex {
            universe: self.universe,
            facets: faces,
        })
    }

    pub fn link(&self, face: VarSet) -> Result<SimplicialComplex> {
        if !self.contains_face(face) {
            return Err(invalid(format!("{face:?} is not a face")));
        }
        // distinct facets containing `face` stay incomparable after removing it
        let mut facets: Vec<VarSet> = self
            .facets
            .iter()
            .filter(|f| face.is_subset(**f))
            .map(|f| f.difference(face))
            .collect();
        facets.sort();
        Ok(SimplicialComplex {
            universe: self.universe,
            facets,
        })
    }

    /// Applies a vertex permutation, `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Result<SimplicialComplex> {
        let len = self.universe.len();
        let mut seen = vec![false; len];
        if perm.len() != len
            || perm
                .iter()
                .any(|&p| p >= len || std::mem::replace(&mut seen[p], true))
        {
            return Err(invalid("relabeling must be a permutation of the universe"));
        }
        let facets = self
            .facets
            .iter()
            .map(|f| f.iter().map(|v| perm[v]).collect())
            .collect();
        SimplicialComplex::new(self.universe, facets)
    }
}

/// Whether the ridge graph of a pure complex is connected.
pub fn is_strongly_connected(complex: &SimplicialComplex) -> Result<bool> {
    if !complex.is_pure() {
        return Err(domain(
            "strong connectivity is defined for pure complexes only",
        ));
    }
    let facets = complex.facets();
    let ridge = facets[0].len().saturating_sub(1);
    let mut reached = vec![false; facets.len()];
    reached[0] = true;
    let mut stack = vec![0usize];
    let mut count = 1;
    while let Some(i) = stack.pop() {
        for j in 0..facets.len() {
            if !reached[j] && facets[i].intersection(facets[j]).len() == ridge {
                reached[j] = true;
                count += 1;
                stack.push(j);
            }
        }
    }
    Ok(count == facets.len())
}

/// A shelling condition failure: no earlier facet lets `later` attach along `earlier`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShellingFailure {
    /// Position (0-based) of `F_i`.
    pub earlier: usize,
    /// Position (0-based) of `F_j`.
    pub later: usize,
}

/// Checks that for all `i < j` some `v ∈ F_j \ F_i` and `k < j` give `F_j \ F_k = {v}`.
pub fn verify_shelling_order(
    complex: &SimplicialComplex,
    order: &[VarSet],
) -> Result<Verdict<ShellingFailure>> {
    let mut sorted = order.to_vec();
    sorted.sort();
    if sorted != complex.facets() {
        return Err(invalid("order is not a permutation of the facets"));
    }
    for j in 1..order.len() {
        let g = order[j];
        let attach = attachment_vertices(g, &order[..j]);
        if let Some(i) = (0..j).find(|&i| !g.difference(order[i]).intersects(attach)) {
            return Ok(Verdict::Fails(ShellingFailure {
                earlier: i,
                later: j,
            }));
        }
    }
    Ok(Verdict::Holds)
}

/// Vertices `v` with `g \ k = {v}` for some earlier facet `k`.
fn attachment_vertices(g: VarSet, earlier: &[VarSet]) -> VarSet {
    earlier
        .iter()
        .map(|k| g.difference(*k))
        .filter(|d| d.len() == 1)
        .fold(VarSet::EMPTY, |acc, d| acc.union(d))
}

/// A facet order that has been checked to be a shelling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShellingCertificate {
    pub order: Vec<VarSet>,
    pub verified: bool,
}

/// Result of the exhaustive shelling search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShellingSearch {
    Found(ShellingCertificate),
    NotShellable,
    /// The facet count exceeded the search cap.
    Inconclusive {
        facets: usize,
    },
}

impl ShellingSearch {
    pub fn is_found(&self) -> bool {
        matches!(self, ShellingSearch::Found(_))
    }
}

/// Depth-first search over facet orders.
///
/// Whether a facet may follow a prefix depends only on the set of facets in the
/// prefix, so failed prefix sets are memoized.
pub fn find_shelling(complex: &SimplicialComplex, cap: usize) -> ShellingSearch {
    let facets = complex.facets();
    let t = facets.len();
    if t > cap || t > 63 {
        return ShellingSearch::Inconclusive { facets: t };
    }
    let full: u64 = (1u64 << t) - 1;
    let mut dead: HashSet<u64> = HashSet::new();
    let mut order: Vec<usize> = Vec::with_capacity(t);

    fn extend(
        facets: &[VarSet],
        placed: u64,
        full: u64,
        order: &mut Vec<usize>,
        dead: &mut HashSet<u64>,
    ) -> bool {
        if placed == full {
            return true;
        }
        if dead.contains(&placed) {
            return false;
        }
        let prefix: Vec<VarSet> = order.iter().map(|&i| facets[i]).collect();
        for g in 0..facets.len() {
            if placed >> g & 1 == 1 {
                continue;
            }
            let attach = attachment_vertices(facets[g], &prefix);
            let ok = prefix
                .iter()
                .all(|f| facets[g].difference(*f).intersects(attach));
            if ok {
                order.push(g);
                if extend(facets, placed | 1 << g, full, order, dead) {
                    return true;
                }
                order.pop();
            }
        }
        dead.insert(placed);
        false
    }

    if extend(facets, 0, full, &mut order, &mut dead) {
        let order: Vec<VarSet> = order.into_iter().map(|i| facets[i]).collect();
        let verified = verify_shelling_order(complex, &order)
            .map(|v| v.holds())
            .unwrap_or(false);
        debug_assert!(verified);
        ShellingSearch::Found(ShellingCertificate { order, verified })
    } else {
        ShellingSearch::NotShellable
    }
}

/// A face whose link has nonzero reduced homology below its dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReisnerFailure {
    pub face: VarSet,
    pub degree: isize,
    pub rank: usize,
}

/// Reisner's criterion over the rationals, with the default caps.
pub fn reisner_cm(complex: &SimplicialComplex) -> Result<Verdict<ReisnerFailure>> {
    reisner_cm_with(complex, &Caps::default())
}

/// Checks `H̃_i(lk F) = 0` for every face `F` and `i < dim lk F`.
///
/// The witness is the lexicographically least failing face, with its lowest
/// failing degree.
pub fn reisner_cm_with(
    complex: &SimplicialComplex,
    caps: &Caps,
) -> Result<Verdict<ReisnerFailure>> {
    caps.check_homology(complex.vertex_count())?;
    for face in complex.all_faces() {
        let link = complex.link(face)?;
        let ranks = homology_below(&link, link.dim());
        if let Some((k, &rank)) = ranks.iter().enumerate().find(|(_, &r)| r != 0) {
            return Ok(Verdict::Fails(ReisnerFailure {
                face,
                degree: k as isize - 1,
                rank,
            }));
        }
    }
    Ok(Verdict::Holds)
}

/// The pure skeleton `Δ^{[level-1]}` that fails Reisner's criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DuvalFailure {
    pub level: usize,
    pub failure: ReisnerFailure,
}

pub fn duval_scm(complex: &SimplicialComplex) -> Result<Verdict<DuvalFailure>> {
    duval_scm_with(complex, &Caps::default())
}

/// Sequential Cohen-Macaulayness via Cohen-Macaulayness of every pure skeleton.
pub fn duval_scm_with(complex: &SimplicialComplex, caps: &Caps) -> Result<Verdict<DuvalFailure>> {
    caps.check_homology(complex.vertex_count())?;
    for level in 0..=(complex.dim() + 1) as usize {
        let skeleton = complex.skeleton(level)?;
        if let Verdict::Fails(failure) = reisner_cm_with(&skeleton, caps)? {
            return Ok(Verdict::Fails(DuvalFailure { level, failure }));
        }
    }
    Ok(Verdict::Holds)
}
