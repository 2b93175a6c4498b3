//! Locally parabolic subgroups, the locally parabolic closure, finite-type
//! recognition and locally finite classification.

mod types;

use std::collections::BTreeMap;

use itertools::Itertools;
use serde::Serialize;

use crate::coxeter::{CoxeterSystem, GroupElement};
use crate::error::{Error, Result};
use crate::parabolic::{
    is_parabolic_roots, parabolic_closure_finite, verify_certificate, ParabolicDescriptor, ParabolicSearch,
    ParabolicVerdict,
};
use crate::refsub::ReflectionSubgroup;

pub use types::{finite_type_recognize, is_finite_standard, order_by_enumeration, ComponentType, TypeName};

/// A subset of `Pi(G)` (by position) certified parabolic: `u . subset = Pi_target`.
#[derive(Debug, Clone)]
pub struct SubsetCertificate {
    pub subset: Vec<usize>,
    pub u: GroupElement,
    pub target: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LocalVerdict {
    /// Every subset of `S(G)` is parabolic (so `G` itself is, having finite rank).
    FullyCertified,
    /// Every subset of size at most `k` is parabolic; larger ones were not examined.
    CertifiedUpTo(usize),
    /// This subset of `Pi(G)` generates a non-parabolic subgroup.
    Counterexample(Vec<usize>),
    /// No counterexample found, but the search bound left these subsets open.
    Inconclusive(Vec<Vec<usize>>),
}

#[derive(Debug, Clone)]
pub struct LocallyParabolicReport {
    pub subgroup: ReflectionSubgroup,
    pub checked: Vec<SubsetCertificate>,
    pub verdict: LocalVerdict,
}

impl LocallyParabolicReport {
    pub fn is_certified(&self) -> bool {
        matches!(self.verdict, LocalVerdict::FullyCertified | LocalVerdict::CertifiedUpTo(_))
    }
}

/// Checks every nonempty subset of `S(G)` of size at most `k` for parabolicity.
///
/// Subsets are visited from the largest size down, so a certificate `u` for a
/// set also serves all of its subsets without a fresh search.
pub fn is_locally_parabolic(g: &ReflectionSubgroup, k: usize, search: &ParabolicSearch) -> LocallyParabolicReport {
    let sys = g.ambient();
    let pi = g.canonical_roots();
    let top = k.min(pi.len());
    let mut checked: Vec<SubsetCertificate> = Vec::new();
    let mut failures: Vec<Vec<usize>> = Vec::new();
    let mut open: Vec<Vec<usize>> = Vec::new();
    for size in (1..=top).rev() {
        for subset in (0..pi.len()).combinations(size) {
            let roots: Vec<_> = subset.iter().map(|&i| pi[i].clone()).collect();
            let reused = checked
                .iter()
                .filter(|c| subset.iter().all(|i| c.subset.contains(i)))
                .find_map(|c| verify_certificate(sys, &roots, &c.u, search.within.as_deref()).map(|t| (c.u.clone(), t)));
            if let Some((u, target)) = reused {
                checked.push(SubsetCertificate { subset, u, target });
                continue;
            }
            match is_parabolic_roots(sys, &roots, search) {
                ParabolicVerdict::Yes { u, subset: target, .. } => checked.push(SubsetCertificate { subset, u, target }),
                ParabolicVerdict::No(_) => failures.push(subset),
                ParabolicVerdict::Unknown { .. } => open.push(subset),
            }
        }
    }
    let verdict = if let Some(smallest) = failures.into_iter().min_by_key(|s| (s.len(), s.clone())) {
        LocalVerdict::Counterexample(smallest)
    } else if !open.is_empty() {
        open.sort();
        LocalVerdict::Inconclusive(open)
    } else if top == pi.len() {
        LocalVerdict::FullyCertified
    } else {
        LocalVerdict::CertifiedUpTo(top)
    };
    checked.sort_by(|a, b| (a.subset.len(), &a.subset).cmp(&(b.subset.len(), &b.subset)));
    LocallyParabolicReport {
        subgroup: g.clone(),
        checked,
        verdict,
    }
}

/// How a locally parabolic closure was obtained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosureEvidence {
    /// Computed in the finite standard parabolic on the support of `X`.
    FiniteSupport { support: Vec<String> },
    /// Computed in each truncation; the top three ranks agree.
    Tower { ranks: Vec<usize>, stable_from: usize },
}

#[derive(Debug, Clone)]
pub struct LpClosure {
    pub descriptor: ParabolicDescriptor,
    pub evidence: ClosureEvidence,
}

impl LpClosure {
    pub fn subgroup(&self) -> ReflectionSubgroup {
        self.descriptor.as_reflection_subgroup()
    }
}

/// `LP(X)` for `X` lying in a finite standard parabolic subgroup, where it equals `P(X)`.
pub fn lp_closure(sys: &CoxeterSystem, xs: &[GroupElement]) -> Result<LpClosure> {
    let mut support: Vec<usize> = xs.iter().flat_map(|x| x.support()).collect();
    support.sort_unstable();
    support.dedup();
    let descriptor = parabolic_closure_finite(sys, xs)?;
    Ok(LpClosure {
        descriptor,
        evidence: ClosureEvidence::FiniteSupport {
            support: sys.names_of(&support),
        },
    })
}

/// Canonical roots as maps from generator name to coefficient text, so that
/// results from different truncations can be compared.
fn named_roots(d: &ParabolicDescriptor) -> Vec<BTreeMap<String, String>> {
    let sys = d.system();
    let mut out: Vec<BTreeMap<String, String>> = d
        .canonical_roots()
        .iter()
        .map(|r| {
            r.support()
                .into_iter()
                .map(|i| (sys.name(i).to_string(), r.coeff(i).to_string()))
                .collect()
        })
        .collect();
    out.sort();
    out
}

/// `LP(X)` along a tower of nested finite truncations, with `X` given as words
/// in generator names. Each truncation must contain every named generator.
/// The result is accepted when the top three truncations agree; otherwise
/// [`Error::NotStabilized`].
pub fn lp_closure_tower(tower: &[CoxeterSystem], words: &[Vec<String>]) -> Result<LpClosure> {
    let mut results: Vec<(usize, ParabolicDescriptor, Vec<BTreeMap<String, String>>)> = Vec::new();
    for sys in tower {
        let xs = words
            .iter()
            .map(|w| GroupElement::from_names(sys, w))
            .collect::<Result<Vec<_>>>()?;
        let d = parabolic_closure_finite(sys, &xs)?;
        let key = named_roots(&d);
        results.push((sys.rank(), d, key));
    }
    let ranks: Vec<usize> = results.iter().map(|r| r.0).collect();
    if results.len() < 3 {
        return Err(Error::NotStabilized(format!("need at least three truncations, got ranks {ranks:?}")));
    }
    let top = &results[results.len() - 3..];
    if !(top[0].2 == top[1].2 && top[1].2 == top[2].2) {
        return Err(Error::NotStabilized(format!("closure differs across the top ranks of {ranks:?}")));
    }
    let mut stable_idx = results.len() - 1;
    while stable_idx > 0 && results[stable_idx - 1].2 == results[stable_idx].2 {
        stable_idx -= 1;
    }
    let stable_from = results[stable_idx].0;
    let (_, descriptor, _) = results.pop().expect("nonempty");
    Ok(LpClosure {
        descriptor,
        evidence: ClosureEvidence::Tower { ranks, stable_from },
    })
}

/// Local finiteness verdict for a system or family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Finiteness {
    LocallyFinite,
    NotLocallyFinite,
    /// Every inspected truncation was finite, but no pattern decides the limit.
    Undetermined { ranks: Vec<usize> },
}

#[derive(Debug, Clone)]
pub struct Classification {
    pub components: Vec<(Vec<String>, ComponentType)>,
    pub verdict: Finiteness,
}

impl Classification {
    pub fn label(&self) -> String {
        if self.components.is_empty() {
            return "A0".to_string();
        }
        self.components.iter().map(|(_, t)| t.to_string()).join(" x ")
    }
}

/// For a finite-rank system, locally finite is the same as finite.
pub fn locally_finite_classify(sys: &CoxeterSystem) -> Classification {
    let t = finite_type_recognize(&sys.graph());
    let verdict = if t.is_finite() {
        Finiteness::LocallyFinite
    } else {
        Finiteness::NotLocallyFinite
    };
    Classification {
        components: t
            .components
            .into_iter()
            .map(|(c, ty)| (sys.names_of(&c), ty))
            .collect(),
        verdict,
    }
}

#[cfg(test)]
mod tests;
