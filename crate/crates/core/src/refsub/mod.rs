//! Reflection subgroups: canonical simple systems, membership, induced Coxeter structure.

mod oracle;

use std::collections::{HashMap, HashSet, VecDeque};

use itertools::Itertools;

use crate::coxeter::{classify_root, depth, reflect, reflection_element, CoxeterSystem, GroupElement, RootClass, RootVector};
use crate::error::{Error, Result};
use crate::label::Label;

pub use oracle::{all_positive_roots, pi_oracle, reflection_roots_of_subgroup};

/// Cap on the size of a finite dihedral root orbit explored during reduction.
const DIHEDRAL_ORBIT_CAP: usize = 4096;
/// Cap on pair replacements before the reduction gives up.
const REDUCTION_STEP_CAP: usize = 100_000;

/// Reflection subgroup `G = <s_gamma : gamma in generating_roots>` of a finite-rank system.
#[derive(Clone, Debug)]
pub struct ReflectionSubgroup {
    ambient: CoxeterSystem,
    generating_roots: Vec<RootVector>,
    canonical_roots: Vec<RootVector>,
}

impl ReflectionSubgroup {
    /// Subgroup generated by the reflections in the given positive roots.
    pub fn new(ambient: &CoxeterSystem, roots: &[RootVector]) -> Result<Self> {
        let canonical_roots = canonical_generators(ambient, roots)?;
        Ok(ReflectionSubgroup {
            ambient: ambient.clone(),
            generating_roots: roots.to_vec(),
            canonical_roots,
        })
    }

    /// Subgroup generated by reflections given as group elements.
    pub fn from_reflections(ambient: &CoxeterSystem, elements: &[GroupElement]) -> Result<Self> {
        let roots = elements
            .iter()
            .map(|t| {
                t.as_reflection()
                    .ok_or_else(|| Error::NotARoot(format!("element {} is not a reflection", t.display())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(ambient, &roots)
    }

    /// The standard parabolic subgroup `W_I` viewed as a reflection subgroup.
    pub fn standard(ambient: &CoxeterSystem, subset: &[usize]) -> Self {
        let mut roots: Vec<RootVector> = subset.iter().map(|&i| RootVector::simple(ambient, i)).collect();
        sort_roots(ambient, &mut roots);
        ReflectionSubgroup {
            ambient: ambient.clone(),
            generating_roots: roots.clone(),
            canonical_roots: roots,
        }
    }

    pub fn ambient(&self) -> &CoxeterSystem {
        &self.ambient
    }

    pub fn generating_roots(&self) -> &[RootVector] {
        &self.generating_roots
    }

    /// `Pi(G)`, sorted by depth then coefficients.
    pub fn canonical_roots(&self) -> &[RootVector] {
        &self.canonical_roots
    }

    /// `S(G)`, the reflections in the canonical roots.
    pub fn canonical_reflections(&self) -> Vec<GroupElement> {
        self.canonical_roots
            .iter()
            .map(|g| reflection_element(&self.ambient, g))
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.canonical_roots.len()
    }

    /// Same subgroup: equal canonical root sets.
    pub fn same_subgroup(&self, other: &ReflectionSubgroup) -> bool {
        let a: HashSet<&RootVector> = self.canonical_roots.iter().collect();
        let b: HashSet<&RootVector> = other.canonical_roots.iter().collect();
        a == b
    }

    pub fn induced_coxeter_matrix(&self, order_bound: u32) -> Result<Vec<Vec<Label>>> {
        induced_coxeter_matrix(&self.ambient, &self.canonical_roots, order_bound)
    }
}

/// Deterministic order: depth, then coefficient vectors in decreasing
/// lexicographic order (so simple roots follow the generator order).
pub fn sort_roots(sys: &CoxeterSystem, roots: &mut [RootVector]) {
    let mut cache: HashMap<RootVector, usize> = HashMap::new();
    for r in roots.iter() {
        cache
            .entry(r.clone())
            .or_insert_with(|| depth(sys, r).unwrap_or(usize::MAX));
    }
    roots.sort_by(|a, b| cache[a].cmp(&cache[b]).then_with(|| b.cmp_coeffs(a)));
}

fn check_positive_root(sys: &CoxeterSystem, r: &RootVector) -> Result<()> {
    match classify_root(sys, r) {
        RootClass::Positive if depth(sys, r).is_some() => Ok(()),
        RootClass::Negative => Err(Error::NonPositiveRoot(r.display(sys))),
        _ => Err(Error::NotARoot(r.display(sys))),
    }
}

/// Positive roots of the dihedral reflection subgroup `<s_x, s_y>` when it is
/// finite; `None` if the orbit exceeds the cap.
fn dihedral_positive_roots(sys: &CoxeterSystem, x: &RootVector, y: &RootVector) -> Option<Vec<RootVector>> {
    let mut seen: HashSet<RootVector> = HashSet::new();
    let mut queue: VecDeque<RootVector> = VecDeque::new();
    for r in [x, y] {
        if seen.insert(r.clone()) {
            queue.push_back(r.clone());
        }
    }
    while let Some(v) = queue.pop_front() {
        for g in [x, y] {
            let img = reflect(sys, g, &v).positive_rep();
            if seen.insert(img.clone()) {
                if seen.len() > DIHEDRAL_ORBIT_CAP {
                    return None;
                }
                queue.push_back(img);
            }
        }
    }
    Some(seen.into_iter().collect())
}

/// Canonical simple roots of a finite root system given by its positive roots:
/// `rho` is simple iff `s_rho` permutes the other positive roots.
fn simple_roots_of_finite(sys: &CoxeterSystem, positive: &[RootVector]) -> Vec<RootVector> {
    let set: HashSet<&RootVector> = positive.iter().collect();
    positive
        .iter()
        .filter(|rho| {
            positive
                .iter()
                .filter(|b| b != rho)
                .all(|b| set.contains(&reflect(sys, rho, b)))
        })
        .cloned()
        .collect()
}

enum PairStatus {
    Canonical,
    Replace(Vec<RootVector>),
}

/// Decides whether `{x, y}` is the canonical simple system of `<s_x, s_y>`,
/// otherwise returns that canonical system (or a step towards it).
fn reduce_pair(sys: &CoxeterSystem, x: &RootVector, y: &RootVector, depths: &mut HashMap<RootVector, usize>) -> Result<PairStatus> {
    let c = x.pair(sys, y);
    let one = sys.field().one();
    if c.is_zero() || !(&c + &one).is_positive() {
        // orthogonal, or <x, y> <= -1
        return Ok(PairStatus::Canonical);
    }
    if (&c - &one).is_negative() {
        // |<x, y>| < 1: finite dihedral subgroup
        let pos = dihedral_positive_roots(sys, x, y)
            .ok_or_else(|| Error::BoundExceeded("dihedral root orbit too large".into()))?;
        let simple = simple_roots_of_finite(sys, &pos);
        if simple.len() == 2 && simple.contains(x) && simple.contains(y) {
            return Ok(PairStatus::Canonical);
        }
        return Ok(PairStatus::Replace(simple));
    }
    // <x, y> >= 1: one reflection shortens the other root
    let mut dp = |r: &RootVector| -> usize {
        *depths
            .entry(r.clone())
            .or_insert_with(|| depth(sys, r).unwrap_or(usize::MAX))
    };
    let y2 = reflect(sys, x, y).positive_rep();
    let x2 = reflect(sys, y, x).positive_rep();
    let (dx, dy, dx2, dy2) = (dp(x), dp(y), dp(&x2), dp(&y2));
    if dy2 < dy {
        Ok(PairStatus::Replace(vec![x.clone(), y2]))
    } else if dx2 < dx {
        Ok(PairStatus::Replace(vec![x2, y.clone()]))
    } else {
        Err(Error::BoundExceeded(format!(
            "no shortening step for roots {} and {}",
            x.display(sys),
            y.display(sys)
        )))
    }
}

/// `Pi(G)` for `G` generated by reflections in the given positive roots.
///
/// Repeatedly replaces a pair of roots by the canonical simple system of the
/// dihedral reflection subgroup they generate, until every pair is canonical.
/// A set in which every pair is canonical is the canonical simple system of
/// the subgroup it generates.
pub fn canonical_generators(sys: &CoxeterSystem, roots: &[RootVector]) -> Result<Vec<RootVector>> {
    for r in roots {
        check_positive_root(sys, r)?;
    }
    let mut depths: HashMap<RootVector, usize> = HashMap::new();
    let mut work: Vec<RootVector> = roots.iter().cloned().unique().collect();
    sort_roots(sys, &mut work);
    for _ in 0..REDUCTION_STEP_CAP {
        let mut replacement = None;
        'scan: for (i, j) in (0..work.len()).tuple_combinations() {
            if let PairStatus::Replace(new) = reduce_pair(sys, &work[i], &work[j], &mut depths)? {
                replacement = Some((i, j, new));
                break 'scan;
            }
        }
        let Some((i, j, new)) = replacement else {
            return Ok(work);
        };
        work.remove(j);
        work.remove(i);
        for r in new {
            if !work.contains(&r) {
                work.push(r);
            }
        }
        sort_roots(sys, &mut work);
    }
    Err(Error::BoundExceeded("canonical generator reduction did not finish".into()))
}

/// Result of a membership query `s_gamma in G`.
#[derive(Debug, Clone)]
pub enum Membership {
    /// `gamma = g . delta` with `delta = canonical_roots[delta_index]` and
    /// `g` the product of the canonical reflections listed in `word`.
    Yes {
        word: Vec<usize>,
        delta_index: usize,
        element: GroupElement,
    },
    No(NonMembership),
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NonMembership {
    /// `gamma` is simple in the ambient system and not in `Pi(G)`.
    SimpleRootNotCanonical,
    /// The full orbit `G . Pi(G)` was enumerated and does not contain `gamma`.
    OrbitExhausted,
}

/// Decides `s_gamma in G` for a positive root.
///
/// Exact when `gamma` is a simple root or when the orbit of `Pi(G)` is finite
/// and fits the search; otherwise a bounded orbit search may end in `Unknown`.
pub fn reflection_membership(g: &ReflectionSubgroup, gamma: &RootVector, depth_bound: usize) -> Result<Membership> {
    let sys = g.ambient();
    check_positive_root(sys, gamma)?;
    let canon = g.canonical_roots();
    if let Some(k) = canon.iter().position(|d| d == gamma) {
        return Ok(Membership::Yes {
            word: Vec::new(),
            delta_index: k,
            element: GroupElement::identity(sys),
        });
    }
    if gamma.as_simple().is_some() {
        return Ok(Membership::No(NonMembership::SimpleRootNotCanonical));
    }
    // breadth-first over words in S(G) acting on Pi(G); signed roots are kept
    // so that every stored root is exactly g . delta
    let mut seen: HashMap<RootVector, (Vec<usize>, usize)> = HashMap::new();
    let mut layer: Vec<RootVector> = Vec::new();
    for (k, d) in canon.iter().enumerate() {
        seen.insert(d.clone(), (Vec::new(), k));
        layer.push(d.clone());
    }
    for _ in 0..depth_bound {
        let mut next = Vec::new();
        for v in &layer {
            for (k, d) in canon.iter().enumerate() {
                let img = reflect(sys, d, v);
                if seen.contains_key(&img) {
                    continue;
                }
                let (w, idx) = seen[v].clone();
                let mut word = vec![k];
                word.extend(w);
                if img == *gamma {
                    let element = word_element(g, &word);
                    return Ok(Membership::Yes {
                        word,
                        delta_index: idx,
                        element,
                    });
                }
                seen.insert(img.clone(), (word, idx));
                next.push(img);
            }
        }
        if next.is_empty() {
            return Ok(Membership::No(NonMembership::OrbitExhausted));
        }
        layer = next;
    }
    Ok(Membership::Unknown)
}

/// Product of canonical reflections `s_{d_{k1}} s_{d_{k2}} ...`.
fn word_element(g: &ReflectionSubgroup, word: &[usize]) -> GroupElement {
    let refl = g.canonical_reflections();
    let mut x = GroupElement::identity(g.ambient());
    for &k in word {
        x = x.mul(&refl[k]);
    }
    x
}

/// Coxeter matrix of `(G, S(G))` from the pairings of the canonical roots:
/// `<g, d> = -cos(pi/k)` gives `k`, `<g, d> <= -1` gives `oo`.
pub fn induced_coxeter_matrix(sys: &CoxeterSystem, canon: &[RootVector], order_bound: u32) -> Result<Vec<Vec<Label>>> {
    let n = canon.len();
    let mut m = vec![vec![Label::Finite(1); n]; n];
    let one = sys.field().one();
    for i in 0..n {
        for j in i + 1..n {
            let c = canon[i].pair(sys, &canon[j]);
            let label = if !(&c + &one).is_positive() {
                Label::Infinite
            } else {
                let x = -(&c + &c);
                (2..=order_bound.max(2))
                    .find(|&k| x.equals_two_cos_pi_over(k))
                    .map(Label::Finite)
                    .ok_or_else(|| {
                        Error::UndeterminedLabel(canon[i].display(sys), canon[j].display(sys), order_bound)
                    })?
            };
            m[i][j] = label;
            m[j][i] = label;
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests;
