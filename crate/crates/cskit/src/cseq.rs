//! C-sequences over a budget ordinal: construction, coherence validation,
//! boundedness, support, and thread detection.
//!
//! A [`CSequence`] assigns a club `C_a` to every limit ordinal `a` up to its
//! budget. The assignment is a default rule (canonical fundamental tails or
//! full intervals) plus finitely many explicit overrides, which keeps every
//! query exact while allowing arbitrary desk-scale tables.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::club::{rel_sq, rel_sq_chi, rel_sq_x, Club, ClubDesc, ClubError};
use crate::ord::{CardinalTag, Ordinal};
use crate::window::Window;

/// Default budget cap: `w^w`.
pub fn default_budget_cap() -> Ordinal {
    Ordinal::omega_pow(Ordinal::omega())
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CSeqError {
    #[error("budget {budget} exceeds the configured cap {cap}")]
    BudgetExceeded { budget: Ordinal, cap: Ordinal },
    #[error("spec error at {path}: {msg}")]
    Spec { path: String, msg: String },
    #[error("assigned set at {at} is not a club: {why}")]
    ClubViolation { at: Ordinal, why: String },
    #[error(transparent)]
    Club(#[from] ClubError),
}

/// Default assignment rule for limit ordinals without an explicit override.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DefaultRule {
    /// Canonical fundamental-sequence clubs (omega-type, empty acc).
    Canonical,
    /// `C_a` is everything below `a` (the maximally coherent family).
    Full,
}

/// Vertex filter used when deriving graphs from a sequence.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GFilter {
    /// Every ordinal (the coherent case of the graph hypotheses).
    #[default]
    All,
    /// Limit ordinals only.
    Limits,
    /// An explicit set.
    Explicit(ClubDesc),
}

impl GFilter {
    pub fn admits(&self, x: &Ordinal) -> Result<bool, ClubError> {
        match self {
            GFilter::All => Ok(true),
            GFilter::Limits => Ok(x.is_limit()),
            GFilter::Explicit(d) => Ok(d.to_club()?.contains(x)),
        }
    }
}

/// A C-sequence over `budget`: a total assignment of clubs to limit
/// ordinals `a <= budget`, with the successor convention `C_{a+1} = {a}`.
#[derive(Debug, Clone)]
pub struct CSequence {
    budget: Ordinal,
    default: DefaultRule,
    overrides: BTreeMap<Ordinal, Club>,
    successor_convention: bool,
    g_filter: GFilter,
    provenance: String,
}

impl CSequence {
    /// Every limit gets its canonical fundamental-sequence club.
    pub fn canonical(budget: Ordinal) -> Result<CSequence, CSeqError> {
        Self::canonical_with_cap(budget, default_budget_cap())
    }

    pub fn canonical_with_cap(budget: Ordinal, cap: Ordinal) -> Result<CSequence, CSeqError> {
        if budget > cap {
            return Err(CSeqError::BudgetExceeded { budget, cap });
        }
        Ok(CSequence {
            budget,
            default: DefaultRule::Canonical,
            overrides: BTreeMap::new(),
            successor_convention: true,
            g_filter: GFilter::All,
            provenance: "canonical".into(),
        })
    }

    /// Every limit gets the full interval below it.
    pub fn full(budget: Ordinal) -> Result<CSequence, CSeqError> {
        let cap = default_budget_cap();
        if budget > cap {
            return Err(CSeqError::BudgetExceeded { budget, cap });
        }
        Ok(CSequence {
            budget,
            default: DefaultRule::Full,
            overrides: BTreeMap::new(),
            successor_convention: true,
            g_filter: GFilter::All,
            provenance: "full".into(),
        })
    }

    /// Builds from a validated spec document.
    pub fn from_spec(spec: &CSeqSpec) -> Result<CSequence, CSeqError> {
        let mut overrides = BTreeMap::new();
        for (i, ov) in spec.overrides.iter().enumerate() {
            let path = format!("overrides[{i}]");
            if ov.at > spec.budget {
                return Err(CSeqError::Spec {
                    path: path + ".at",
                    msg: format!("{} is above the budget {}", ov.at, spec.budget),
                });
            }
            if !ov.at.is_limit() {
                return Err(CSeqError::Spec {
                    path: path + ".at",
                    msg: format!("{} is not a limit ordinal", ov.at),
                });
            }
            let club = ov.club.to_club().map_err(|e| CSeqError::Spec {
                path: path.clone() + ".club",
                msg: e.to_string(),
            })?;
            club.is_club_in(&ov.at)
                .map_err(|e| CSeqError::ClubViolation {
                    at: ov.at.clone(),
                    why: e.to_string(),
                })?;
            overrides.insert(ov.at.clone(), club);
        }
        Ok(CSequence {
            budget: spec.budget.clone(),
            default: spec.default,
            overrides,
            successor_convention: spec.successor_convention,
            g_filter: spec.g_filter.clone().unwrap_or_default(),
            provenance: "spec".into(),
        })
    }

    /// Installs an override club at a limit ordinal (validated).
    pub fn with_override(mut self, at: Ordinal, club: Club) -> Result<CSequence, CSeqError> {
        if !at.is_limit() || at > self.budget {
            return Err(CSeqError::Spec {
                path: "override.at".into(),
                msg: format!("{at} must be a limit ordinal within the budget"),
            });
        }
        club.is_club_in(&at).map_err(|e| CSeqError::ClubViolation {
            at: at.clone(),
            why: e.to_string(),
        })?;
        self.overrides.insert(at, club);
        self.provenance = "mixed".into();
        Ok(self)
    }

    /// Installs an override without validating the club property
    /// (for deliberately broken test tables).
    pub fn with_override_unchecked(mut self, at: Ordinal, club: Club) -> CSequence {
        self.overrides.insert(at, club);
        self.provenance = "mixed".into();
        self
    }

    pub fn budget(&self) -> &Ordinal {
        &self.budget
    }

    pub fn g_filter(&self) -> &GFilter {
        &self.g_filter
    }

    pub fn set_g_filter(&mut self, g: GFilter) {
        self.g_filter = g;
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn overrides(&self) -> impl Iterator<Item = (&Ordinal, &Club)> {
        self.overrides.iter()
    }

    pub fn successor_convention(&self) -> bool {
        self.successor_convention
    }

    /// The club assigned to `a` (total on ordinals `<= budget`): `C_0` is
    /// empty, `C_{a+1} = {a}` under the successor convention, and limits
    /// get their override or the default rule.
    pub fn club_at(&self, a: &Ordinal) -> Club {
        if a.is_zero() {
            return Club::empty();
        }
        if let Some(p) = a.pred() {
            if self.successor_convention {
                return Club::singleton(p);
            }
            return self
                .overrides
                .get(a)
                .cloned()
                .unwrap_or_else(|| Club::singleton(p));
        }
        if let Some(c) = self.overrides.get(a) {
            return c.clone();
        }
        match self.default {
            DefaultRule::Canonical => Club::fundamental(a).expect("a is a limit"),
            DefaultRule::Full => Club::full_below(a.clone()),
        }
    }

    /// Serializes back to a spec document.
    pub fn to_spec(&self) -> CSeqSpec {
        CSeqSpec {
            budget: self.budget.clone(),
            default: self.default,
            overrides: self
                .overrides
                .iter()
                .map(|(at, c)| OverrideSpec {
                    at: at.clone(),
                    club: c.descriptor(),
                })
                .collect(),
            g_filter: match self.g_filter {
                GFilter::All => None,
                ref g => Some(g.clone()),
            },
            successor_convention: self.successor_convention,
        }
    }

    /// Probe points for coherence sweeps: limits in the window plus all
    /// override points inside it.
    fn probe_limits(&self, window: &Window) -> (Vec<Ordinal>, bool) {
        let (mut pts, truncated) = window.limit_points();
        for at in self.overrides.keys() {
            if window.contains(at) && !pts.contains(at) {
                pts.push(at.clone());
            }
        }
        pts.sort();
        (pts, truncated)
    }
}

/// The coherence relation to check between `C_a'` and `C_a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "relation", content = "chi")]
pub enum Relation {
    Sq,
    SqX(CardinalTag),
    SqChi(CardinalTag),
}

impl Relation {
    pub fn holds(&self, d: &Club, c: &Club) -> Result<bool, ClubError> {
        match self {
            Relation::Sq => rel_sq(d, c),
            Relation::SqX(chi) => rel_sq_x(d, c, chi),
            Relation::SqChi(chi) => rel_sq_chi(d, c, chi),
        }
    }
}

/// Outcome of a coherence sweep over a window.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoherenceReport {
    pub relation: Relation,
    pub window: Window,
    /// Pairs `(a, a')` with `a' in acc(C_a)` where the relation fails.
    pub violations: Vec<(Ordinal, Ordinal)>,
    pub checked_pairs: usize,
    /// Whether enumeration hit a cap somewhere (the verdict covers only the
    /// pairs actually checked).
    pub truncated: bool,
    /// Pairs whose relation could not be decided by the representation.
    pub undecidable: Vec<(Ordinal, Ordinal, String)>,
}

impl CoherenceReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty() && self.undecidable.is_empty()
    }
}

/// Exhaustively tests all `(a, a' in acc(C_a))` pairs in the window.
pub fn check_coherence(
    vec: &CSequence,
    relation: Relation,
    window: &Window,
) -> CoherenceReport {
    let (alphas, mut truncated) = vec.probe_limits(window);
    let mut violations = Vec::new();
    let mut undecidable = Vec::new();
    let mut checked = 0usize;
    for a in &alphas {
        let ca = vec.club_at(a);
        let (accs, acc_trunc) = window.members_of(&ca.acc());
        truncated |= acc_trunc;
        for ab in accs {
            let cab = vec.club_at(&ab);
            checked += 1;
            match relation.holds(&cab, &ca) {
                Ok(true) => {}
                Ok(false) => violations.push((a.clone(), ab.clone())),
                Err(e) => undecidable.push((a.clone(), ab.clone(), e.to_string())),
            }
        }
    }
    CoherenceReport {
        relation,
        window: window.clone(),
        violations,
        checked_pairs: checked,
        truncated,
        undecidable,
    }
}

/// Report for a boundedness sweep.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundedReport {
    pub mu: CardinalTag,
    pub window: Window,
    pub violations: Vec<Ordinal>,
    pub checked: usize,
    pub truncated: bool,
}

impl BoundedReport {
    pub fn is_bounded(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Tests `otp(C_a) <= mu` for limits in the window.
pub fn check_bounded(vec: &CSequence, mu: &CardinalTag, window: &Window) -> BoundedReport {
    let (alphas, truncated) = vec.probe_limits(window);
    let mut violations = Vec::new();
    let mut checked = 0usize;
    for a in &alphas {
        checked += 1;
        if !mu.ge_ordinal(&vec.club_at(a).otp()) {
            violations.push(a.clone());
        }
    }
    BoundedReport {
        mu: mu.clone(),
        window: window.clone(),
        violations,
        checked,
        truncated,
    }
}

/// The support of the sequence inside the window: limits `d` such that
/// `C_d ∩ g = C_g` for every `g in acc(C_d)`.
pub fn support_of(vec: &CSequence, window: &Window) -> Result<(Vec<Ordinal>, bool), ClubError> {
    let (alphas, mut truncated) = vec.probe_limits(window);
    let mut out = Vec::new();
    for d in &alphas {
        let cd = vec.club_at(d);
        let (accs, t) = window.members_of(&cd.acc());
        truncated |= t;
        let mut ok = true;
        for g in accs {
            let cg = vec.club_at(&g);
            if !cd.restrict(&g).eq_club(&cg)? {
                ok = false;
                break;
            }
        }
        if ok {
            out.push(d.clone());
        }
    }
    Ok((out, truncated))
}

/// Least `a in acc(D)` inside the window with `D ∩ a != C_a`, if any.
/// A `None` verdict is window-relative only.
pub fn thread_check(
    d: &Club,
    vec: &CSequence,
    window: &Window,
) -> Result<Option<Ordinal>, ClubError> {
    let (accs, _) = window.members_of(&d.acc());
    for a in accs {
        let ca = vec.club_at(&a);
        if !d.restrict(&a).eq_club(&ca)? {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

/// Report for the two vertex-filter hypotheses a derived graph relies on:
/// outside the filter the clubs avoid it entirely, and inside it the
/// clubs agree with the sequence at their accumulation points of the
/// designated cofinality.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HypothesesReport {
    pub window: Window,
    /// Points `a` outside the filter whose club meets it.
    pub avoidance_failures: Vec<Ordinal>,
    /// Pairs `(a, a')` inside the filter where agreement fails.
    pub agreement_failures: Vec<(Ordinal, Ordinal)>,
    pub checked: usize,
    pub truncated: bool,
}

impl HypothesesReport {
    pub fn holds(&self) -> bool {
        self.avoidance_failures.is_empty() && self.agreement_failures.is_empty()
    }
}

/// Validates the graph hypotheses for the sequence's vertex filter on a
/// window: for `a` outside the filter, `C_a` misses the filter; for `a`
/// inside it, every accumulation point of `C_a` of cofinality `chi` is
/// inside too, with `C_a'` equal to the cut `C_a ∩ a'`.
pub fn check_graph_hypotheses(
    vec: &CSequence,
    chi: &CardinalTag,
    window: &Window,
) -> Result<HypothesesReport, ClubError> {
    let (alphas, mut truncated) = vec.probe_limits(window);
    let mut report = HypothesesReport {
        window: window.clone(),
        avoidance_failures: Vec::new(),
        agreement_failures: Vec::new(),
        checked: 0,
        truncated: false,
    };
    for a in &alphas {
        let ca = vec.club_at(a);
        report.checked += 1;
        if !vec.g_filter().admits(a)? {
            // hypothesis one: the club avoids the filter
            let (members, t) = window.members_of(&ca);
            truncated |= t;
            for m in members {
                if vec.g_filter().admits(&m)? {
                    report.avoidance_failures.push(a.clone());
                    break;
                }
            }
            continue;
        }
        // hypothesis two: agreement at acc points of the right cofinality
        let (accs, t) = window.members_of(&ca.acc());
        truncated |= t;
        for ab in accs {
            let cof_matches = match chi {
                CardinalTag::Aleph0 => ab.is_limit(),
                CardinalTag::Fin(n) => {
                    // finite cofinalities below omega: only 1 is realized
                    *n == 1 && ab.is_successor()
                }
                CardinalTag::AlephSymbolic(_) => false,
            };
            if !cof_matches {
                continue;
            }
            let inside = vec.g_filter().admits(&ab)?;
            let agrees = inside && ca.restrict(&ab).eq_club(&vec.club_at(&ab))?;
            if !agrees {
                report.agreement_failures.push((a.clone(), ab.clone()));
            }
        }
    }
    report.truncated = truncated;
    Ok(report)
}

/// JSON spec document for a C-sequence.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CSeqSpec {
    pub budget: Ordinal,
    pub default: DefaultRule,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub overrides: Vec<OverrideSpec>,
    #[serde(rename = "gFilter", default, skip_serializing_if = "Option::is_none")]
    pub g_filter: Option<GFilter>,
    #[serde(rename = "successorConvention", default = "default_true")]
    pub successor_convention: bool,
}

fn default_true() -> bool {
    true
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OverrideSpec {
    pub at: Ordinal,
    pub club: ClubDesc,
}

impl CSeqSpec {
    pub fn parse(json: &str) -> Result<CSeqSpec, CSeqError> {
        serde_json::from_str(json).map_err(|e| CSeqError::Spec {
            path: format!("line {} column {}", e.line(), e.column()),
            msg: e.to_string(),
        })
    }
}
