//! One spec, classified by closed forms and (optionally) by the oracles.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use serde_json::{json, Value};

use crate::caps::Caps;
use crate::complex::{
    duval_scm_with, find_shelling, is_strongly_connected, reisner_cm_with, verify_shelling_order,
    DuvalFailure, ReisnerFailure, ShellingSearch,
};
use crate::error::Result;
use crate::ideal::{alexander_dual_with, minimal_primes_with, VariableUniverse};
use crate::mixed::{
    MixedProductSpec, NormalizeWarning, ProfileViolation, QrProfile, Summand, UnmixedCondition,
    UnmixedViolation,
};
use crate::varset::VarSet;
use crate::verdict::Verdict;

/// How much independent checking to run next to the closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum OracleLevel {
    /// Closed forms and their algebraic identities only.
    #[default]
    None,
    /// Adds the generic dual, minimal primes, facets, purity and strong connectivity.
    Fast,
    /// Adds Reisner's criterion, Duval's skeleton test and the shelling search.
    Full,
}

impl std::str::FromStr for OracleLevel {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(OracleLevel::None),
            "fast" => Ok(OracleLevel::Fast),
            "full" => Ok(OracleLevel::Full),
            other => Err(crate::error::invalid(format!(
                "oracle level `{other}` is not one of none, fast, full"
            ))),
        }
    }
}

impl OracleLevel {
    pub fn as_str(&self) -> &'static str {
        match self {
            OracleLevel::None => "none",
            OracleLevel::Fast => "fast",
            OracleLevel::Full => "full",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ClassifyOptions {
    pub oracle: OracleLevel,
    pub caps: Caps,
    /// Use the deliberately broken CM closed form (harness self-test).
    pub perturb: bool,
    /// Record wall-clock timings in the report.
    pub timing: bool,
}

/// Closed-form identities that need no oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Identities {
    pub profile_roundtrip: bool,
    pub dual_involution: bool,
    /// `CM ⇒ unmixed` and `CM ⇒ SCM`.
    pub implications: bool,
}

/// Verdicts computed without using any mixed-product formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub level: OracleLevel,
    /// Closed-form dual expanded equals the generic dual.
    pub dual_agrees: bool,
    /// Closed-form components equal the generic minimal primes.
    pub decomposition_agrees: bool,
    /// The facet partition tiles the complex of the generic decomposition.
    pub facets_agree: bool,
    /// All generic minimal primes have one size.
    pub unmixed: bool,
    pub pure: bool,
    /// `None` for non-pure complexes, where strong connectivity is undefined.
    pub strongly_connected: Option<bool>,
    /// The explicit shelling, when applicable, passed verification.
    pub construction_verified: Option<bool>,
    pub reisner: Option<Verdict<ReisnerFailure>>,
    pub duval: Option<Verdict<DuvalFailure>>,
    pub shelling: Option<ShellingSearch>,
}

impl OracleReport {
    /// Cohen-Macaulay in the sense of "pure and strongly connected".
    pub fn pure_strongly_connected(&self) -> bool {
        self.pure && self.strongly_connected == Some(true)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Timing {
    pub closed_form: Duration,
    pub oracle: Duration,
}

/// A disagreement between a closed form and an oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub field: &'static str,
    pub closed_form: String,
    pub oracle: String,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub spec: MixedProductSpec,
    pub warnings: Vec<NormalizeWarning>,
    pub profile: QrProfile,
    pub unmixed: Verdict<UnmixedViolation>,
    pub cohen_macaulay: Verdict<ProfileViolation>,
    pub sequentially_cm: Verdict<ProfileViolation>,
    pub identities: Identities,
    pub oracle: Option<OracleReport>,
    pub timing: Option<Timing>,
}

/// Normalizes raw summands and classifies the result.
pub fn classify_raw(
    universe: VariableUniverse,
    summands: &[Summand],
    options: &ClassifyOptions,
) -> Result<ClassificationReport> {
    let (spec, warnings) = MixedProductSpec::normalize(universe, summands)?;
    let mut report = classify(&spec, options)?;
    report.warnings = warnings;
    Ok(report)
}

pub fn classify(
    spec: &MixedProductSpec,
    options: &ClassifyOptions,
) -> Result<ClassificationReport> {
    let start = Instant::now();
    let profile = spec.qr_profile();
    let unmixed = spec.is_unmixed_closed_form();
    let cohen_macaulay = if options.perturb {
        spec.is_cm_closed_form_perturbed()
    } else {
        spec.is_cm_closed_form()
    };
    let sequentially_cm = spec.is_scm_closed_form();
    let identities = Identities {
        profile_roundtrip: profile.spec_from_profile().as_ref() == Ok(spec),
        dual_involution: spec.closed_form_dual().closed_form_dual() == *spec,
        implications: !cohen_macaulay.holds() || (unmixed.holds() && sequentially_cm.holds()),
    };
    let closed_form = start.elapsed();

    let start = Instant::now();
    let oracle = match options.oracle {
        OracleLevel::None => None,
        level => Some(run_oracles(spec, level, &options.caps)?),
    };
    let oracle_time = start.elapsed();

    Ok(ClassificationReport {
        spec: spec.clone(),
        warnings: Vec::new(),
        profile,
        unmixed,
        cohen_macaulay,
        sequentially_cm,
        identities,
        oracle,
        timing: options.timing.then_some(Timing {
            closed_form,
            oracle: oracle_time,
        }),
    })
}

/// Runs the generic computations for `spec`.
pub fn run_oracles(
    spec: &MixedProductSpec,
    level: OracleLevel,
    caps: &Caps,
) -> Result<OracleReport> {
    let generators = spec.expand_generators(caps)?;

    let generic_dual = alexander_dual_with(&generators, caps)?;
    let closed_dual = spec.closed_form_dual().expand_generators(caps)?;
    let dual_agrees = generic_dual == closed_dual;

    let primes = minimal_primes_with(&generators, caps)?;
    let decomposition_agrees = spec.closed_form_primary_decomposition(caps)?.components() == primes;
    let unmixed = primes.windows(2).all(|w| w[0].size() == w[1].size());

    let generic_complex = crate::ideal::stanley_reisner_complex_with(&generators, caps)?;
    let mut tiled: Vec<VarSet> = spec
        .facet_partition(caps)?
        .into_iter()
        .flat_map(|b| b.facets)
        .collect();
    let tiled_len = tiled.len();
    tiled.sort();
    tiled.dedup();
    let facets_agree = tiled.len() == tiled_len && tiled == generic_complex.facets();

    let pure = generic_complex.is_pure();
    let strongly_connected = if pure {
        Some(is_strongly_connected(&generic_complex)?)
    } else {
        None
    };
    let construction_verified = match spec.shelling_order(caps)? {
        Some(c) => Some(verify_shelling_order(&generic_complex, &c.order)?.holds()),
        None => None,
    };

    let (reisner, duval, shelling) = if level == OracleLevel::Full {
        (
            Some(reisner_cm_with(&generic_complex, caps)?),
            Some(duval_scm_with(&generic_complex, caps)?),
            Some(find_shelling(&generic_complex, caps.shelling_facets)),
        )
    } else {
        (None, None, None)
    };

    Ok(OracleReport {
        level,
        dual_agrees,
        decomposition_agrees,
        facets_agree,
        unmixed,
        pure,
        strongly_connected,
        construction_verified,
        reisner,
        duval,
        shelling,
    })
}

fn yes_no(b: bool) -> String {
    b.to_string()
}

impl ClassificationReport {
    /// Every closed-form claim the oracles contradict, plus failed identities.
    pub fn mismatches(&self) -> Vec<Mismatch> {
        let mut out = Vec::new();
        let mut flag =
            |field: &'static str, closed: bool, oracle: bool, witness: Option<String>| {
                if closed != oracle {
                    out.push(Mismatch {
                        field,
                        closed_form: yes_no(closed),
                        oracle: yes_no(oracle),
                        witness,
                    });
                }
            };
        let id = &self.identities;
        flag("profile_roundtrip", true, id.profile_roundtrip, None);
        flag("dual_involution", true, id.dual_involution, None);
        flag("implications", true, id.implications, None);

        let Some(o) = &self.oracle else { return out };
        let u = self.spec.universe();
        let cm = self.cohen_macaulay.holds();
        let cm_witness = || self.cohen_macaulay.witness().map(|w| w.to_string());
        flag("dual", true, o.dual_agrees, None);
        flag("decomposition", true, o.decomposition_agrees, None);
        flag("facet_partition", true, o.facets_agree, None);
        flag(
            "unmixed",
            self.unmixed.holds(),
            o.unmixed,
            self.unmixed.witness().map(|w| w.to_string()),
        );
        flag(
            "cohen_macaulay/strong",
            cm,
            o.pure_strongly_connected(),
            cm_witness(),
        );
        if let Some(ok) = o.construction_verified {
            flag("shelling_order", true, ok, None);
        }
        if let Some(r) = &o.reisner {
            let w = r
                .witness()
                .map(|f| format!("{} at face {}", describe_reisner(f), u.format_set(f.face)))
                .or_else(cm_witness);
            flag("cohen_macaulay/reisner", cm, r.holds(), w);
        }
        if let Some(d) = &o.duval {
            let w = d
                .witness()
                .map(|f| {
                    format!(
                        "skeleton level {}: {}",
                        f.level,
                        describe_reisner(&f.failure)
                    )
                })
                .or_else(|| self.sequentially_cm.witness().map(|w| w.to_string()));
            flag(
                "sequentially_cm/duval",
                self.sequentially_cm.holds(),
                d.holds(),
                w,
            );
        }
        match &o.shelling {
            Some(ShellingSearch::NotShellable) => {
                flag("shelling_search", cm, false, cm_witness());
            }
            Some(ShellingSearch::Found(cert)) => {
                flag("shelling_certificate", true, cert.verified, None);
                if o.pure {
                    flag("shelling_search", cm, true, cm_witness());
                }
                flag(
                    "shelling_search/scm",
                    self.sequentially_cm.holds(),
                    true,
                    None,
                );
            }
            _ => {}
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let u = self.spec.universe();
        let p = &self.profile;
        let pairs: Vec<[usize; 2]> = self.spec.summands().iter().map(|s| [s.q, s.r]).collect();
        json!({
            "spec": {
                "n": u.n(),
                "m": u.m(),
                "pairs": pairs,
                "warnings": self.warnings.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            },
            "profile": {
                "s_prime": p.s_prime,
                "q_bar": p.q_bar,
                "r_bar": p.r_bar,
                "sigma": p.sigma,
                "height": p.height,
                "dim": p.dim_ring,
            },
            "verdicts": {
                "unmixed": self.unmixed.holds(),
                "cohen_macaulay": self.cohen_macaulay.holds(),
                "sequentially_cm": self.sequentially_cm.holds(),
            },
            "witnesses": {
                "unmixed": self.unmixed.witness().map(unmixed_json),
                "cohen_macaulay": self.cohen_macaulay.witness().map(profile_json),
                "sequentially_cm": self.sequentially_cm.witness().map(profile_json),
            },
            "oracle": self.oracle.as_ref().map(|o| oracle_json(o, &u)),
            "timing": self.timing.map(|t| json!({
                "closed_form_us": t.closed_form.as_micros() as u64,
                "oracle_us": t.oracle.as_micros() as u64,
            })),
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let p = &self.profile;
        let _ = writeln!(s, "spec: {}", self.spec);
        let _ = writeln!(s, "pairs: {}", self.spec.pairs_string());
        for w in &self.warnings {
            let _ = writeln!(s, "warning: {w}");
        }
        let _ = writeln!(
            s,
            "profile: s'={} q={:?} r={:?} sigma={:?} height={} dim={}",
            p.s_prime, p.q_bar, p.r_bar, p.sigma, p.height, p.dim_ring
        );
        let line = |name: &str, holds: bool, witness: Option<String>| match witness {
            Some(w) => format!("{name}: {holds} ({w})\n"),
            None => format!("{name}: {holds}\n"),
        };
        s += &line(
            "unmixed",
            self.unmixed.holds(),
            self.unmixed.witness().map(|w| w.to_string()),
        );
        s += &line(
            "cohen_macaulay",
            self.cohen_macaulay.holds(),
            self.cohen_macaulay.witness().map(|w| w.to_string()),
        );
        s += &line(
            "sequentially_cm",
            self.sequentially_cm.holds(),
            self.sequentially_cm.witness().map(|w| w.to_string()),
        );
        if let Some(o) = &self.oracle {
            let u = self.spec.universe();
            let _ = writeln!(s, "oracle ({}):", o.level.as_str());
            let _ = writeln!(s, "  dual agrees: {}", o.dual_agrees);
            let _ = writeln!(s, "  decomposition agrees: {}", o.decomposition_agrees);
            let _ = writeln!(s, "  facets agree: {}", o.facets_agree);
            let _ = writeln!(s, "  unmixed: {}", o.unmixed);
            let _ = writeln!(s, "  pure: {}", o.pure);
            if let Some(sc) = o.strongly_connected {
                let _ = writeln!(s, "  strongly connected: {sc}");
            }
            if let Some(v) = o.construction_verified {
                let _ = writeln!(s, "  explicit shelling verified: {v}");
            }
            if let Some(r) = &o.reisner {
                s += &line(
                    "  reisner cm",
                    r.holds(),
                    r.witness().map(|f| {
                        format!("{} at face {}", describe_reisner(f), u.format_set(f.face))
                    }),
                );
            }
            if let Some(d) = &o.duval {
                s += &line(
                    "  duval scm",
                    d.holds(),
                    d.witness().map(|f| {
                        format!(
                            "skeleton level {}: {} at face {}",
                            f.level,
                            describe_reisner(&f.failure),
                            u.format_set(f.failure.face)
                        )
                    }),
                );
            }
            if let Some(sh) = &o.shelling {
                let _ = writeln!(s, "  shelling search: {}", shelling_str(sh));
            }
            let mismatches = self.mismatches();
            let _ = writeln!(s, "  mismatches: {}", mismatches.len());
            for m in mismatches {
                let _ = writeln!(
                    s,
                    "    {}: closed form {} vs oracle {}",
                    m.field, m.closed_form, m.oracle
                );
            }
        }
        if let Some(t) = &self.timing {
            let _ = writeln!(
                s,
                "timing: closed form {} us, oracle {} us",
                t.closed_form.as_micros(),
                t.oracle.as_micros()
            );
        }
        s
    }
}

fn describe_reisner(f: &ReisnerFailure) -> String {
    format!("reduced H_{} has rank {}", f.degree, f.rank)
}

fn shelling_str(s: &ShellingSearch) -> &'static str {
    match s {
        ShellingSearch::Found(_) => "found",
        ShellingSearch::NotShellable => "not shellable",
        ShellingSearch::Inconclusive { .. } => "inconclusive",
    }
}

fn profile_json(v: &ProfileViolation) -> Value {
    match *v {
        ProfileViolation::QStep { index } => json!({"kind": "q_step", "index": index}),
        ProfileViolation::RStep { index } => json!({"kind": "r_step", "index": index}),
        ProfileViolation::Step { index } => json!({"kind": "step", "index": index}),
        ProfileViolation::Valley {
            left,
            valley,
            right,
        } => json!({"kind": "valley", "triple": [left, valley, right]}),
    }
}

fn unmixed_json(v: &UnmixedViolation) -> Value {
    let (condition, index) = match v.condition {
        UnmixedCondition::Mixed { index } => ("p_xy", Some(index)),
        UnmixedCondition::XOnly => ("p_x", None),
        UnmixedCondition::YOnly => ("p_y", None),
    };
    json!({
        "condition": condition,
        "index": index,
        "component_size": v.component_size,
        "height": v.height,
    })
}

fn reisner_json(f: &ReisnerFailure, u: &VariableUniverse) -> Value {
    json!({"face": u.names(f.face), "degree": f.degree, "rank": f.rank})
}

fn oracle_json(o: &OracleReport, u: &VariableUniverse) -> Value {
    json!({
        "level": o.level.as_str(),
        "dual_agrees": o.dual_agrees,
        "decomposition_agrees": o.decomposition_agrees,
        "facets_agree": o.facets_agree,
        "unmixed": o.unmixed,
        "pure": o.pure,
        "strongly_connected": o.strongly_connected,
        "cohen_macaulay_strong": o.pure_strongly_connected(),
        "construction_verified": o.construction_verified,
        "reisner_cm": o.reisner.as_ref().map(|r| r.holds()),
        "reisner_witness": o.reisner.as_ref().and_then(|r| r.witness()).map(|f| reisner_json(f, u)),
        "duval_scm": o.duval.as_ref().map(|d| d.holds()),
        "duval_witness": o.duval.as_ref().and_then(|d| d.witness()).map(|f| {
            let mut v = reisner_json(&f.failure, u);
            v["level"] = json!(f.level);
            v
        }),
        "shelling": o.shelling.as_ref().map(|s| shelling_str(s)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn full() -> ClassifyOptions {
        ClassifyOptions {
            oracle: OracleLevel::Full,
            ..Default::default()
        }
    }

    #[test]
    fn classify_worked_examples() {
        let r = classify(
            &MixedProductSpec::from_pairs(2, 2, &[(1, 2), (2, 1)]).unwrap(),
            &full(),
        )
        .unwrap();
        assert!(r.unmixed.holds() && r.cohen_macaulay.holds() && r.sequentially_cm.holds());
        assert!(r.mismatches().is_empty());

        let r = classify(
            &MixedProductSpec::from_pairs(2, 2, &[(1, 1)]).unwrap(),
            &full(),
        )
        .unwrap();
        assert!(r.unmixed.holds() && !r.cohen_macaulay.holds() && !r.sequentially_cm.holds());
        assert!(r.mismatches().is_empty());

        let r = classify(
            &MixedProductSpec::from_pairs(1, 3, &[(1, 1)]).unwrap(),
            &full(),
        )
        .unwrap();
        assert!(r.sequentially_cm.holds());
        assert_eq!(
            r.oracle.as_ref().unwrap().duval.as_ref().map(|d| d.holds()),
            Some(true)
        );
        assert!(r.mismatches().is_empty());
    }

    #[test]
    fn perturbation_is_detected() {
        let opts = ClassifyOptions {
            perturb: true,
            ..full()
        };
        let r = classify(
            &MixedProductSpec::from_pairs(1, 3, &[(1, 1)]).unwrap(),
            &opts,
        )
        .unwrap();
        let fields: Vec<&str> = r.mismatches().iter().map(|m| m.field).collect();
        assert!(fields.contains(&"cohen_macaulay/reisner"));
    }

    #[test]
    fn json_is_deterministic_and_shaped() {
        let spec = MixedProductSpec::from_pairs(2, 2, &[(1, 1)]).unwrap();
        let a = classify(&spec, &full()).unwrap().to_json().to_string();
        let b = classify(&spec, &full()).unwrap().to_json().to_string();
        assert_eq!(a, b);
        let v: Value = serde_json::from_str(&a).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(
            keys,
            [
                "spec",
                "profile",
                "verdicts",
                "witnesses",
                "oracle",
                "timing"
            ]
        );
        assert_eq!(v["witnesses"]["cohen_macaulay"]["kind"], "q_step");
        assert_eq!(v["oracle"]["reisner_witness"]["face"], json!([]));
        assert!(v["timing"].is_null());
    }

    #[test]
    fn text_and_json_carry_the_same_verdicts() {
        let spec = MixedProductSpec::from_pairs(1, 3, &[(1, 1)]).unwrap();
        let r = classify(&spec, &full()).unwrap();
        let text = r.to_text();
        let json = r.to_json();
        for key in ["unmixed", "cohen_macaulay", "sequentially_cm"] {
            let expected = format!("{key}: {}", json["verdicts"][key]);
            assert!(text.contains(&expected), "{text}");
        }
    }

    #[test]
    fn oracle_level_parsing() {
        assert_eq!("fast".parse::<OracleLevel>().unwrap(), OracleLevel::Fast);
        assert!("slow".parse::<OracleLevel>().is_err());
    }
}
