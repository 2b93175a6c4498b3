//! Parabolic subgroups `w W_I w^-1`: recognition, intersections, closures,
//! and maximal finite standard parabolic overgroups.

mod closure;
mod search;

use std::collections::HashSet;
use std::fmt;

use crate::coxeter::{coset_min, enumerate_parabolic_roots, CoxeterSystem, GroupElement, RootVector};
use crate::refsub::{sort_roots, ReflectionSubgroup};

pub use closure::{
    all_parabolics, brute_force_closure, canonical_descriptor, intersect_parabolics_finite, maximal_finite_parabolic_over,
    parabolic_closure_finite, Intersection,
};
pub use search::{is_parabolic, is_parabolic_roots, verify_certificate, NotParabolic, ParabolicSearch, ParabolicVerdict};

/// The subgroup `w W_I w^-1`, stored with `w` minimal in its coset `w W_I`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ParabolicDescriptor {
    w: GroupElement,
    subset: Vec<usize>,
}

impl ParabolicDescriptor {
    /// Normalizes `w` to the shortest element of `w W_I`.
    pub fn new(w: &GroupElement, subset: &[usize]) -> Self {
        let mut subset = subset.to_vec();
        subset.sort_unstable();
        subset.dedup();
        let (wi, _) = coset_min(w, &subset);
        ParabolicDescriptor { w: wi, subset }
    }

    pub fn standard(sys: &CoxeterSystem, subset: &[usize]) -> Self {
        Self::new(&GroupElement::identity(sys), subset)
    }

    pub fn trivial(sys: &CoxeterSystem) -> Self {
        Self::standard(sys, &[])
    }

    pub fn whole(sys: &CoxeterSystem) -> Self {
        let all: Vec<usize> = (0..sys.rank()).collect();
        Self::standard(sys, &all)
    }

    pub fn system(&self) -> &CoxeterSystem {
        self.w.system()
    }

    pub fn w(&self) -> &GroupElement {
        &self.w
    }

    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    pub fn rank(&self) -> usize {
        self.subset.len()
    }

    /// `Pi(w W_I w^-1) = w . Pi_I`.
    pub fn canonical_roots(&self) -> Vec<RootVector> {
        parabolic_canonical_roots(self)
    }

    pub fn as_reflection_subgroup(&self) -> ReflectionSubgroup {
        ReflectionSubgroup::new(self.system(), &self.canonical_roots()).expect("w . Pi_I is a canonical system")
    }

    /// `x in w W_I w^-1`, decided by the support of `w^-1 x w`.
    pub fn contains(&self, x: &GroupElement) -> bool {
        let y = self.w.inverse().mul(x).mul(&self.w);
        y.word().iter().all(|s| self.subset.binary_search(s).is_ok())
    }

    /// Whether both descriptors give the same subgroup (equal canonical root sets).
    pub fn same_subgroup(&self, other: &ParabolicDescriptor) -> bool {
        if self.subset.len() != other.subset.len() {
            return false;
        }
        let a: HashSet<RootVector> = self.canonical_roots().into_iter().collect();
        let b: HashSet<RootVector> = other.canonical_roots().into_iter().collect();
        a == b
    }

    /// `self ⊆ other` as subgroups.
    pub fn is_subgroup_of(&self, other: &ParabolicDescriptor) -> bool {
        self.subset
            .iter()
            .all(|&s| other.contains(&self.w.mul_simple(s).mul(&self.w.inverse())))
    }

    /// Positive roots of the subgroup, `w . Phi_I^+`.
    pub fn positive_roots(&self, depth_bound: usize) -> Option<Vec<RootVector>> {
        let sys = self.system();
        let e = enumerate_parabolic_roots(sys, &self.subset, depth_bound);
        if !e.saturated {
            return None;
        }
        let mut out: Vec<RootVector> = e.roots.iter().map(|r| self.w.act(r)).collect();
        sort_roots(sys, &mut out);
        Some(out)
    }

    pub fn display(&self) -> String {
        let names = self.system().names_of(&self.subset);
        format!("({}, {{{}}})", self.w.display(), names.join(", "))
    }
}

impl fmt::Debug for ParabolicDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

/// `w . Pi_I`, sorted.
pub fn parabolic_canonical_roots(d: &ParabolicDescriptor) -> Vec<RootVector> {
    let sys = d.system();
    let mut out: Vec<RootVector> = d
        .subset
        .iter()
        .map(|&s| d.w.act(&RootVector::simple(sys, s)))
        .collect();
    sort_roots(sys, &mut out);
    out
}

#[cfg(test)]
mod tests;
