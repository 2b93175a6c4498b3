//! Rule-defined Coxeter systems of infinite rank, studied through their
//! finite truncations.
//!
//! Generators carry integer indices. `A_oo<2>` is indexed by all integers and
//! truncated symmetrically around 0; in `D_oo` the fork node `0'` has index -1.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, LazyLock, Mutex};

use serde::Serialize;

use crate::coxeter::{CoxeterSystem, RootVector};
use crate::error::{Error, Result};
use crate::label::Label;
use crate::locpar::{finite_type_recognize, is_locally_parabolic, ComponentType, Finiteness};
use crate::parabolic::ParabolicSearch;
use crate::refsub::{reflection_membership, Membership, ReflectionSubgroup};

pub type LabelRule = Arc<dyn Fn(i64, i64) -> Label + Send + Sync>;

#[derive(Clone)]
pub enum FamilyKind {
    A1Inf,
    A2Inf,
    BInf,
    DInf,
    /// `A_oo<1>` viewed as the ambient group of the non-parabolic closure example.
    Ex33,
    /// Path `s1 - s2 - ...` with every edge labelled `m` (even, at least 4, or infinite).
    Ex45(Label),
    /// Generators `1, 2, ...` with labels from `rule`.
    Custom { name: String, rule: LabelRule },
}

impl fmt::Debug for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}

impl FamilyKind {
    fn key(&self) -> String {
        match self {
            FamilyKind::A1Inf => "a1inf".into(),
            FamilyKind::A2Inf => "a2inf".into(),
            FamilyKind::BInf => "binf".into(),
            FamilyKind::DInf => "dinf".into(),
            FamilyKind::Ex33 => "ex33".into(),
            FamilyKind::Ex45(m) => format!("ex45(m={m})"),
            FamilyKind::Custom { name, .. } => format!("custom({name})"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct FamilyDescriptor {
    pub kind: FamilyKind,
}

fn chain(i: i64, j: i64, m: Label) -> Label {
    match (i - j).abs() {
        0 => Label::Finite(1),
        1 => m,
        _ => Label::Finite(2),
    }
}

impl FamilyDescriptor {
    pub fn new(kind: FamilyKind) -> Result<Self> {
        if let FamilyKind::Ex45(m) = kind {
            match m {
                Label::Infinite => {}
                Label::Finite(k) if k >= 4 && k % 2 == 0 => {}
                Label::Finite(k) => {
                    return Err(Error::InvalidParameter(format!(
                        "ex45 needs m even and at least 4, or oo; got {k}"
                    )))
                }
            }
        }
        Ok(FamilyDescriptor { kind })
    }

    pub fn custom(name: &str, rule: impl Fn(i64, i64) -> Label + Send + Sync + 'static) -> Self {
        FamilyDescriptor {
            kind: FamilyKind::Custom {
                name: name.to_string(),
                rule: Arc::new(rule),
            },
        }
    }

    /// Looks up a family by its command-line name. `ex45` reads `m` from `params` (default 4).
    pub fn by_name(name: &str, params: &BTreeMap<String, String>) -> Result<Self> {
        let kind = match name {
            "a1inf" => FamilyKind::A1Inf,
            "a2inf" => FamilyKind::A2Inf,
            "binf" => FamilyKind::BInf,
            "dinf" => FamilyKind::DInf,
            "ex33" => FamilyKind::Ex33,
            "ex45" => {
                let m = match params.get("m") {
                    Some(text) => text
                        .parse::<Label>()
                        .map_err(|_| Error::InvalidParameter(format!("bad label `{text}` for m")))?,
                    None => Label::Finite(4),
                };
                FamilyKind::Ex45(m)
            }
            other => return Err(Error::InvalidParameter(format!("unknown family `{other}`"))),
        };
        Self::new(kind)
    }

    pub fn name(&self) -> String {
        self.kind.key()
    }

    /// `m(s_i, s_j)`, with `m(s_i, s_i) = 1`.
    pub fn label(&self, i: i64, j: i64) -> Label {
        if i == j {
            return Label::Finite(1);
        }
        let three = Label::Finite(3);
        match &self.kind {
            FamilyKind::A1Inf | FamilyKind::A2Inf | FamilyKind::Ex33 => chain(i, j, three),
            FamilyKind::Ex45(m) => chain(i, j, *m),
            FamilyKind::BInf => {
                if i.min(j) == 0 && i.max(j) == 1 {
                    Label::Finite(4)
                } else {
                    chain(i, j, three)
                }
            }
            FamilyKind::DInf => {
                // 0' (index -1) attaches to 1 like 0 does
                let fold = |k: i64| if k == -1 { 0 } else { k };
                if i.min(j) == -1 && i.max(j) == 0 {
                    Label::Finite(2)
                } else {
                    chain(fold(i), fold(j), three)
                }
            }
            FamilyKind::Custom { rule, .. } => rule(i, j),
        }
    }

    pub fn min_rank(&self) -> usize {
        match self.kind {
            FamilyKind::DInf => 2,
            _ => 1,
        }
    }

    /// Indices of the rank-`n` truncation, ascending.
    pub fn indices(&self, n: usize) -> Result<Vec<i64>> {
        if n < self.min_rank() {
            return Err(Error::InvalidParameter(format!(
                "{} needs rank at least {}",
                self.name(),
                self.min_rank()
            )));
        }
        let n = n as i64;
        Ok(match self.kind {
            FamilyKind::A2Inf => {
                let lo = -((n - 1) / 2);
                (lo..lo + n).collect()
            }
            FamilyKind::BInf => (0..n).collect(),
            FamilyKind::DInf => (-1..n - 1).collect(),
            _ => (1..=n).collect(),
        })
    }

    pub fn generator_name(&self, i: i64) -> String {
        match (&self.kind, i) {
            (FamilyKind::DInf, -1) => "s0'".to_string(),
            (_, i) if i < 0 => format!("sm{}", -i),
            (_, i) => format!("s{i}"),
        }
    }

    /// The infinite-rank type read off the descriptor, if it is one of
    /// the four locally finite shapes.
    pub fn pattern(&self) -> Option<ComponentType> {
        match self.kind {
            FamilyKind::A1Inf | FamilyKind::Ex33 => Some(ComponentType::AInf1),
            FamilyKind::A2Inf => Some(ComponentType::AInf2),
            FamilyKind::BInf => Some(ComponentType::BInf),
            FamilyKind::DInf => Some(ComponentType::DInf),
            FamilyKind::Ex45(_) | FamilyKind::Custom { .. } => None,
        }
    }

    /// Finite type expected for the rank-`n` truncation of a named pattern.
    fn expected_truncation_type(&self, n: usize) -> Option<Vec<ComponentType>> {
        Some(match self.pattern()? {
            ComponentType::AInf1 | ComponentType::AInf2 => vec![ComponentType::A(n)],
            ComponentType::BInf if n == 1 => vec![ComponentType::A(1)],
            ComponentType::BInf => vec![ComponentType::B(n)],
            ComponentType::DInf => match n {
                2 => vec![ComponentType::A(1), ComponentType::A(1)],
                3 => vec![ComponentType::A(3)],
                _ => vec![ComponentType::D(n)],
            },
            _ => return None,
        })
    }
}

static TRUNCATIONS: LazyLock<Mutex<HashMap<(String, usize), CoxeterSystem>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// The system on the first `n` generators. Named families are memoized.
pub fn truncate(family: &FamilyDescriptor, n: usize) -> Result<CoxeterSystem> {
    let cacheable = !matches!(family.kind, FamilyKind::Custom { .. });
    let key = (family.name(), n);
    if cacheable {
        if let Some(sys) = TRUNCATIONS.lock().unwrap().get(&key) {
            return Ok(sys.clone());
        }
    }
    let idx = family.indices(n)?;
    let names: Vec<String> = idx.iter().map(|&i| family.generator_name(i)).collect();
    let matrix: Vec<Vec<Label>> = idx
        .iter()
        .map(|&i| idx.iter().map(|&j| family.label(i, j)).collect())
        .collect();
    let sys = CoxeterSystem::new(names, matrix)?.with_indices(idx);
    if cacheable {
        TRUNCATIONS.lock().unwrap().insert(key, sys.clone());
    }
    Ok(sys)
}

/// Whether `small` is the restriction of `big` to the generators of `small`
/// (matched by name).
pub fn nests_in(small: &CoxeterSystem, big: &CoxeterSystem) -> bool {
    let pos: Option<Vec<usize>> = small.names().iter().map(|n| big.generator(n).ok()).collect();
    let Some(pos) = pos else { return false };
    (0..small.rank()).all(|i| (0..small.rank()).all(|j| small.label(i, j) == big.label(pos[i], pos[j])))
}

/// Ascending sequence of truncations of one family.
#[derive(Debug, Clone)]
pub struct TruncationTower {
    pub family: FamilyDescriptor,
    pub ranks: Vec<usize>,
}

impl TruncationTower {
    /// Ranks must be non-decreasing.
    pub fn new(family: FamilyDescriptor, ranks: Vec<usize>) -> Result<Self> {
        if ranks.is_empty() {
            return Err(Error::InvalidParameter("empty rank range".into()));
        }
        if ranks.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidParameter(format!("tower ranks are not monotone: {ranks:?}")));
        }
        for &n in &ranks {
            family.indices(n)?;
        }
        Ok(TruncationTower { family, ranks })
    }

    pub fn systems(&self) -> Result<Vec<CoxeterSystem>> {
        self.ranks.iter().map(|&n| truncate(&self.family, n)).collect()
    }
}

pub type SubgroupRule = Arc<dyn Fn(&CoxeterSystem) -> Result<ReflectionSubgroup> + Send + Sync>;
pub type RankPredicate = Arc<dyn Fn(&CoxeterSystem) -> Result<RankOutcome> + Send + Sync>;

/// A property evaluated on each truncation.
#[derive(Clone)]
pub enum TowerProperty {
    /// The truncation itself is of finite type, matching the family's pattern when it has one.
    LocallyFinite,
    /// Each `G_n` lies in `G_{n'}` for the next rank.
    UnionIsSubgroup(SubgroupRule),
    /// Each `G_n` is generated by the reflections along its canonical roots, and these persist upward.
    UnionIsReflectionSubgroup(SubgroupRule),
    /// Each `G_n` is a finite group.
    UnionLocallyFinite(SubgroupRule),
    /// Each `G_n` is locally parabolic (every subset of `S(G_n)` certified).
    UnionLocallyParabolic(SubgroupRule),
    Custom { name: String, check: RankPredicate },
}

impl TowerProperty {
    pub fn name(&self) -> String {
        match self {
            TowerProperty::LocallyFinite => "locally-finite".into(),
            TowerProperty::UnionIsSubgroup(_) => "union-is-subgroup".into(),
            TowerProperty::UnionIsReflectionSubgroup(_) => "union-is-reflection-subgroup".into(),
            TowerProperty::UnionLocallyFinite(_) => "union-locally-finite".into(),
            TowerProperty::UnionLocallyParabolic(_) => "union-locally-parabolic".into(),
            TowerProperty::Custom { name, .. } => name.clone(),
        }
    }
}

/// The subgroup rule that takes the whole truncation.
pub fn whole_group() -> SubgroupRule {
    Arc::new(|sys: &CoxeterSystem| {
        let all: Vec<usize> = (0..sys.rank()).collect();
        Ok(ReflectionSubgroup::standard(sys, &all))
    })
}

/// Result of a property at one rank. `window` is the part of the output
/// compared across ranks for stability.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankOutcome {
    pub passed: bool,
    pub window: String,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct RankReport {
    pub rank: usize,
    #[serde(flatten)]
    pub outcome: RankOutcome,
}

#[derive(Debug, Clone, Serialize)]
pub struct TowerReport {
    pub family: String,
    pub property: String,
    pub ranks: Vec<RankReport>,
    pub all_passed: bool,
    /// The windowed outputs of the top three ranks agree.
    pub stable: bool,
}

/// Number of top ranks whose windowed outputs must agree.
pub const STABILITY_DEPTH: usize = 3;

/// Canonical roots supported on the window generators, as text, sorted.
fn windowed_roots(g: &ReflectionSubgroup, window: &[String]) -> String {
    let sys = g.ambient();
    let mut shown: Vec<String> = g
        .canonical_roots()
        .iter()
        .filter(|r| r.support().iter().all(|&i| window.iter().any(|w| w == sys.name(i))))
        .map(|r| r.display(sys))
        .collect();
    shown.sort();
    format!("{{{}}}", shown.join("; "))
}

fn is_finite_type(g: &ReflectionSubgroup) -> Result<(bool, String)> {
    let m = g.induced_coxeter_matrix(64)?;
    let names: Vec<String> = (0..m.len()).map(|i| format!("g{i}")).collect();
    let sub = CoxeterSystem::new(names, m)?;
    let t = finite_type_recognize(&sub.graph());
    Ok((t.is_finite(), t.label()))
}

/// Evaluates `property` on each rank of the tower.
pub fn tower_check(tower: &TruncationTower, property: &TowerProperty) -> Result<TowerReport> {
    let systems = tower.systems()?;
    for w in systems.windows(2) {
        if !nests_in(&w[0], &w[1]) {
            return Err(Error::InvalidParameter("truncations do not nest".into()));
        }
    }
    let window: Vec<String> = systems[0].names().to_vec();
    let mut groups: Vec<Option<ReflectionSubgroup>> = Vec::new();
    for sys in &systems {
        groups.push(match property {
            TowerProperty::UnionIsSubgroup(rule)
            | TowerProperty::UnionIsReflectionSubgroup(rule)
            | TowerProperty::UnionLocallyFinite(rule)
            | TowerProperty::UnionLocallyParabolic(rule) => Some(rule(sys)?),
            _ => None,
        });
    }
    let mut reports = Vec::new();
    for (k, sys) in systems.iter().enumerate() {
        let g = groups[k].as_ref();
        let next = groups.get(k + 1).and_then(|x| x.as_ref());
        let outcome = match property {
            TowerProperty::LocallyFinite => {
                let t = finite_type_recognize(&sys.graph());
                let expected = tower.family.expected_truncation_type(sys.rank());
                let types: Vec<ComponentType> = t.components.iter().map(|c| c.1).collect();
                let matches = expected.as_ref().is_none_or(|e| {
                    let mut a = e.clone();
                    let mut b = types.clone();
                    a.sort_by_key(|c| c.to_string());
                    b.sort_by_key(|c| c.to_string());
                    a == b
                });
                let finite = t.is_finite();
                RankOutcome {
                    passed: finite && matches,
                    window: if finite { "locally finite" } else { "not locally finite" }.to_string(),
                    detail: t.label(),
                }
            }
            TowerProperty::UnionIsSubgroup(_) | TowerProperty::UnionIsReflectionSubgroup(_) => {
                let g = g.expect("subgroup built");
                let mut passed = true;
                let mut detail = format!("rank {}", g.rank());
                if matches!(property, TowerProperty::UnionIsReflectionSubgroup(_)) {
                    passed &= g
                        .canonical_reflections()
                        .iter()
                        .zip(g.canonical_roots())
                        .all(|(x, r)| x.as_reflection().as_ref() == Some(r));
                }
                if let Some(h) = next {
                    let big = h.ambient();
                    for r in g.canonical_roots() {
                        let lifted = lift_root(sys, big, r)?;
                        match reflection_membership(h, &lifted, 10_000)? {
                            Membership::Yes { .. } => {}
                            other => {
                                passed = false;
                                detail = format!("{} not found upward: {other:?}", r.display(sys));
                            }
                        }
                    }
                }
                RankOutcome {
                    passed,
                    window: windowed_roots(g, &window),
                    detail,
                }
            }
            TowerProperty::UnionLocallyFinite(_) => {
                let g = g.expect("subgroup built");
                let (finite, label) = is_finite_type(g)?;
                RankOutcome {
                    passed: finite,
                    window: if finite { "finite" } else { "infinite" }.to_string(),
                    detail: label,
                }
            }
            TowerProperty::UnionLocallyParabolic(_) => {
                let g = g.expect("subgroup built");
                let report = is_locally_parabolic(g, g.rank(), &ParabolicSearch::default());
                RankOutcome {
                    passed: report.is_certified(),
                    window: windowed_roots(g, &window),
                    detail: format!("{:?}", report.verdict),
                }
            }
            TowerProperty::Custom { check, .. } => check(sys)?,
        };
        reports.push(RankReport {
            rank: sys.rank(),
            outcome,
        });
    }
    let all_passed = reports.iter().all(|r| r.outcome.passed);
    let tail = &reports[reports.len().saturating_sub(STABILITY_DEPTH)..];
    let stable = tail.windows(2).all(|w| w[0].outcome.window == w[1].outcome.window);
    Ok(TowerReport {
        family: tower.family.name(),
        property: property.name(),
        ranks: reports,
        all_passed,
        stable,
    })
}

/// Re-expresses a root of `small` in `big`, matching generators by name.
/// Rational coefficients move into any field; otherwise the levels must agree.
pub fn lift_root(small: &CoxeterSystem, big: &CoxeterSystem, r: &RootVector) -> Result<RootVector> {
    let same_field = small.field().level() == big.field().level();
    let mut coeffs = RootVector::zero(big).coeffs().to_vec();
    for i in r.support() {
        let c = r.coeff(i);
        coeffs[big.generator(small.name(i))?] = if same_field {
            c.clone()
        } else {
            let q = c
                .to_rational()
                .ok_or_else(|| Error::InvalidParameter("truncations use incompatible fields".into()))?;
            big.field().from_rational(q)
        };
    }
    Ok(RootVector::from_coeffs(coeffs))
}

/// Per-rank classification of a family, with the verdict.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyClassification {
    pub family: String,
    pub pattern: Option<String>,
    pub per_rank: Vec<(usize, String)>,
    pub verdict: Finiteness,
}

/// Named shapes are recognized from the descriptor; other families are
/// inspected rank by rank, and an infinite truncation settles the answer.
pub fn classify_family(family: &FamilyDescriptor, ranks: &[usize]) -> Result<FamilyClassification> {
    let mut per_rank = Vec::new();
    let mut any_infinite = false;
    for &n in ranks {
        let t = finite_type_recognize(&truncate(family, n)?.graph());
        any_infinite |= !t.is_finite();
        per_rank.push((n, t.label()));
    }
    let verdict = match family.pattern() {
        Some(_) if !any_infinite => Finiteness::LocallyFinite,
        _ if any_infinite => Finiteness::NotLocallyFinite,
        _ => Finiteness::Undetermined { ranks: ranks.to_vec() },
    };
    Ok(FamilyClassification {
        family: family.name(),
        pattern: family.pattern().map(|p| p.to_string()),
        per_rank,
        verdict,
    })
}
