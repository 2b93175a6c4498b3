//! Brute-force `Pi(G)` straight from the definition, for finite ambient groups.

use std::collections::HashSet;

use itertools::Itertools;

use crate::coxeter::{enumerate_positive_roots, enumerate_subgroup, reflection_element, CoxeterSystem, GroupElement, RootVector};
use crate::error::{Error, Result};
use crate::linalg;

use super::sort_roots;

const GROUP_LIMIT: usize = 200_000;
const ROOT_DEPTH_LIMIT: usize = 1_000;

/// All positive roots of a finite system; an error for infinite systems.
pub fn all_positive_roots(sys: &CoxeterSystem) -> Result<Vec<RootVector>> {
    let e = enumerate_positive_roots(sys, ROOT_DEPTH_LIMIT);
    if !e.saturated {
        return Err(Error::InfiniteGroup("positive roots do not saturate".into()));
    }
    Ok(e.roots)
}

/// `Phi(G) ∩ Phi+ = {gamma : s_gamma in G}`, with `G` enumerated element by element.
pub fn reflection_roots_of_subgroup(sys: &CoxeterSystem, roots: &[RootVector]) -> Result<Vec<RootVector>> {
    let positive = all_positive_roots(sys)?;
    let gens: Vec<GroupElement> = roots.iter().map(|r| reflection_element(sys, r)).collect();
    let elements = enumerate_subgroup(sys, &gens, GROUP_LIMIT)
        .ok_or_else(|| Error::BoundExceeded("subgroup enumeration".into()))?;
    let set: HashSet<GroupElement> = elements.into_iter().collect();
    Ok(positive
        .into_iter()
        .filter(|g| set.contains(&reflection_element(sys, g)))
        .collect())
}

/// Whether `target` is a positive combination of some of `others`.
///
/// By the conic Caratheodory theorem it suffices to try linearly independent
/// subsets, solving exactly for the coefficients.
fn in_open_cone(sys: &CoxeterSystem, target: &RootVector, others: &[&RootVector]) -> bool {
    let dim = sys.rank();
    for k in 1..=dim.min(others.len()) {
        for subset in others.iter().combinations(k) {
            let basis: Vec<&[_]> = subset.iter().map(|r| r.coeffs()).collect();
            if let Some(c) = linalg::solve_combination(sys.field(), &basis, target.coeffs()) {
                if c.iter().all(|x| x.is_positive()) {
                    return true;
                }
            }
        }
    }
    false
}

/// `Pi(G)`: roots of `Phi(G) ∩ Phi+` that are not positive combinations of
/// other such roots.
pub fn pi_oracle(sys: &CoxeterSystem, roots: &[RootVector]) -> Result<Vec<RootVector>> {
    let phi_g = reflection_roots_of_subgroup(sys, roots)?;
    let mut out: Vec<RootVector> = phi_g
        .iter()
        .filter(|g| {
            let others: Vec<&RootVector> = phi_g.iter().filter(|r| r != g).collect();
            !in_open_cone(sys, g, &others)
        })
        .cloned()
        .collect();
    sort_roots(sys, &mut out);
    Ok(out)
}
