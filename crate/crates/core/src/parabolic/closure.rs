use std::collections::HashSet;

use itertools::Itertools;

use crate::coxeter::{enumerate_parabolic, reflect, CoxeterSystem, GroupElement, RootVector};
use crate::error::{Error, Result};
use crate::locpar::is_finite_standard;
use crate::refsub::{sort_roots, ReflectionSubgroup};

use super::search::{is_parabolic_roots, ParabolicSearch, ParabolicVerdict};
use super::ParabolicDescriptor;

/// Largest group enumerated by the brute-force helpers.
const ENUM_LIMIT: usize = 500_000;
const ROOT_DEPTH: usize = 1_000;

fn elements_of(sys: &CoxeterSystem, subset: &[usize]) -> Result<Vec<GroupElement>> {
    enumerate_parabolic(sys, subset, ENUM_LIMIT)
        .ok_or_else(|| Error::InfiniteGroup(format!("W_{{{}}} is too large to enumerate", sys.names_of(subset).join(","))))
}

/// Minimal length representatives of `W_K / W_J` for `J ⊆ K`, in ShortLex order.
///
/// The representatives are closed under taking suffixes `w = s w'`, so they
/// are grown from the identity by left multiplication without touching the rest of `W_K`.
fn coset_reps(sys: &CoxeterSystem, k: &[usize], j: &[usize]) -> Result<Vec<GroupElement>> {
    let mut seen: HashSet<GroupElement> = HashSet::new();
    let mut frontier = vec![GroupElement::identity(sys)];
    seen.insert(frontier[0].clone());
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for &s in k {
                if w.is_left_descent(s) {
                    continue;
                }
                let sw = GroupElement::simple(sys, s).mul(w);
                if j.iter().any(|&t| sw.is_right_descent(t)) || seen.contains(&sw) {
                    continue;
                }
                seen.insert(sw.clone());
                next.push(sw);
            }
        }
        if seen.len() > ENUM_LIMIT {
            return Err(Error::InfiniteGroup(format!(
                "W_{{{}}} has too many cosets to enumerate",
                sys.names_of(k).join(",")
            )));
        }
        frontier = next;
    }
    let mut out: Vec<GroupElement> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

fn root_set(d: &ParabolicDescriptor) -> Vec<RootVector> {
    let mut r = d.canonical_roots();
    r.sort_by(|a, b| a.cmp_coeffs(b));
    r
}

/// Every parabolic subgroup of a finite group, one descriptor each: the
/// lexicographically first generator subset (by size, then indices) and the
/// ShortLex-first coset representative.
pub fn all_parabolics(sys: &CoxeterSystem) -> Result<Vec<ParabolicDescriptor>> {
    let all: Vec<usize> = (0..sys.rank()).collect();
    let elements = elements_of(sys, &all)?;
    let mut seen: HashSet<Vec<RootVector>> = HashSet::new();
    let mut out = Vec::new();
    for size in 0..=all.len() {
        for subset in all.iter().copied().combinations(size) {
            for w in &elements {
                if subset.iter().any(|&s| w.is_right_descent(s)) {
                    continue;
                }
                let d = ParabolicDescriptor::new(w, &subset);
                if seen.insert(root_set(&d)) {
                    out.push(d);
                }
            }
        }
    }
    Ok(out)
}

/// The representative descriptor of the same subgroup chosen by [`all_parabolics`].
pub fn canonical_descriptor(d: &ParabolicDescriptor) -> Result<ParabolicDescriptor> {
    let sys = d.system();
    let target = root_set(d);
    let all: Vec<usize> = (0..sys.rank()).collect();
    let elements = elements_of(sys, &all)?;
    for subset in all.iter().copied().combinations(d.rank()) {
        for w in &elements {
            if subset.iter().any(|&s| w.is_right_descent(s)) {
                continue;
            }
            let cand = ParabolicDescriptor::new(w, &subset);
            if root_set(&cand) == target {
                return Ok(cand);
            }
        }
    }
    unreachable!("a descriptor always matches itself")
}

/// Parabolic intersection with its normalized form.
#[derive(Debug, Clone)]
pub struct Intersection {
    pub descriptor: ParabolicDescriptor,
    /// With `d1 = (w, I)`: `W_I ∩ w^-1 P2 w = u W_K u^-1`, `u in W_I`, `K ⊆ I`.
    pub u: GroupElement,
    pub k: Vec<usize>,
}

/// `P1 ∩ P2` for parabolic subgroups of a finite group.
///
/// The intersection is the reflection subgroup on the common positive roots;
/// its canonical roots are conjugated into `W_I` and matched to a subset of
/// `Pi_I` by a search restricted to `W_I`.
pub fn intersect_parabolics_finite(d1: &ParabolicDescriptor, d2: &ParabolicDescriptor) -> Result<Intersection> {
    let sys = d1.system();
    let infinite = || Error::InfiniteGroup("parabolic subgroup has infinitely many roots".into());
    let phi1 = d1.positive_roots(ROOT_DEPTH).ok_or_else(infinite)?;
    let phi2: HashSet<RootVector> = d2.positive_roots(ROOT_DEPTH).ok_or_else(infinite)?.into_iter().collect();
    let common: Vec<RootVector> = phi1.into_iter().filter(|r| phi2.contains(r)).collect();
    let common_set: HashSet<&RootVector> = common.iter().collect();
    let mut pi: Vec<RootVector> = common
        .iter()
        .filter(|g| {
            common
                .iter()
                .filter(|b| b != g)
                .all(|b| common_set.contains(&reflect(sys, g, b)))
        })
        .cloned()
        .collect();
    sort_roots(sys, &mut pi);

    let winv = d1.w().inverse();
    let framed: Vec<RootVector> = pi.iter().map(|r| winv.act(r)).collect();
    let opts = ParabolicSearch {
        bound: ENUM_LIMIT,
        within: Some(d1.subset().to_vec()),
        target: None,
    };
    match is_parabolic_roots(sys, &framed, &opts) {
        ParabolicVerdict::Yes { u, subset, .. } => {
            let u_inv = u.inverse();
            let descriptor = ParabolicDescriptor::new(&d1.w().mul(&u_inv), &subset);
            Ok(Intersection {
                descriptor,
                u: u_inv,
                k: subset,
            })
        }
        other => Err(Error::BoundExceeded(format!("intersection not matched to a standard parabolic: {other:?}"))),
    }
}

/// Union of the supports of the elements.
fn support_of(xs: &[GroupElement]) -> Vec<usize> {
    let mut s: Vec<usize> = xs.iter().flat_map(|x| x.support()).collect();
    s.sort_unstable();
    s.dedup();
    s
}

/// The smallest parabolic subgroup containing `xs`.
///
/// Starts from the standard parabolic on the support of `xs` and descends:
/// while some maximal parabolic subgroup `w g W_{K - k} g^-1 w^-1` of the
/// current `w W_K w^-1` contains `xs`, move into it. Each step drops the rank,
/// and the minimal parabolic lies below every parabolic containing `xs`, so
/// the descent ends exactly there. Generators are dropped from the largest
/// index down and coset representatives tried in ShortLex order.
///
/// When the support generates an infinite group the descent is unavailable;
/// if `xs` are reflections generating a parabolic subgroup, that subgroup is
/// returned, otherwise an error.
pub fn parabolic_closure_finite(sys: &CoxeterSystem, xs: &[GroupElement]) -> Result<ParabolicDescriptor> {
    let support = support_of(xs);
    if !is_finite_standard(sys, &support) {
        if !xs.is_empty() && xs.iter().all(|x| x.length() % 2 == 1) {
            if let Some(roots) = xs.iter().map(GroupElement::as_reflection).collect::<Option<Vec<_>>>() {
                let g = ReflectionSubgroup::new(sys, &roots)?;
                let opts = ParabolicSearch {
                    bound: ENUM_LIMIT,
                    within: Some(support.clone()),
                    target: None,
                };
                if let ParabolicVerdict::Yes { descriptor, .. } = is_parabolic_roots(sys, g.canonical_roots(), &opts) {
                    return Ok(descriptor);
                }
            }
        }
        return Err(Error::InfiniteGroup(format!(
            "standard parabolic on {{{}}} is infinite",
            sys.names_of(&support).join(",")
        )));
    }
    let mut current = ParabolicDescriptor::standard(sys, &support);
    'descend: loop {
        let k = current.subset().to_vec();
        for &drop in k.iter().rev() {
            let j: Vec<usize> = k.iter().copied().filter(|&s| s != drop).collect();
            for g in coset_reps(sys, &k, &j)? {
                let cand = ParabolicDescriptor::new(&current.w().mul(&g), &j);
                if xs.iter().all(|x| cand.contains(x)) {
                    current = cand;
                    continue 'descend;
                }
            }
        }
        return Ok(current);
    }
}

/// Minimal parabolic containing `xs` by scanning every parabolic subgroup.
pub fn brute_force_closure(parabolics: &[ParabolicDescriptor], xs: &[GroupElement]) -> Option<ParabolicDescriptor> {
    parabolics
        .iter()
        .filter(|d| xs.iter().all(|x| d.contains(x)))
        .min_by_key(|d| d.rank())
        .cloned()
}

/// Greedy ascent in generator order to a maximal `J ⊇ I` with `W_J` finite.
/// Maximal sets are not unique in general; this one depends on the order.
pub fn maximal_finite_parabolic_over(sys: &CoxeterSystem, subset: &[usize]) -> Result<Vec<usize>> {
    let mut j: Vec<usize> = subset.to_vec();
    j.sort_unstable();
    j.dedup();
    if !is_finite_standard(sys, &j) {
        return Err(Error::InfiniteGroup(format!(
            "W_{{{}}} is infinite",
            sys.names_of(&j).join(",")
        )));
    }
    for s in 0..sys.rank() {
        if j.contains(&s) {
            continue;
        }
        let mut cand = j.clone();
        cand.push(s);
        cand.sort_unstable();
        if is_finite_standard(sys, &cand) {
            j = cand;
        }
    }
    Ok(j)
}
