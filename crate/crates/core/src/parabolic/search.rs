use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use crate::coxeter::{depth, CoxeterSystem, GroupElement, RootVector};
use crate::linalg;
use crate::refsub::ReflectionSubgroup;

use super::ParabolicDescriptor;

/// Options for the conjugation search.
#[derive(Debug, Clone)]
pub struct ParabolicSearch {
    /// Maximum number of expanded states.
    pub bound: usize,
    /// Only conjugate by elements of `W_I` and only accept targets in `Pi_I`.
    pub within: Option<Vec<usize>>,
    /// Only accept `u` with `u . Pi(G) = Pi_target` exactly.
    pub target: Option<Vec<usize>>,
}

impl Default for ParabolicSearch {
    fn default() -> Self {
        ParabolicSearch {
            bound: 200_000,
            within: None,
            target: None,
        }
    }
}

impl ParabolicSearch {
    pub fn with_bound(bound: usize) -> Self {
        ParabolicSearch {
            bound,
            ..Default::default()
        }
    }

    pub fn with_target(mut self, target: &[usize]) -> Self {
        let mut t = target.to_vec();
        t.sort_unstable();
        self.target = Some(t);
        self
    }
}

#[derive(Debug, Clone)]
pub enum ParabolicVerdict {
    /// `u . Pi(G) = Pi_K`, hence `G = u^-1 W_K u`.
    Yes {
        u: GroupElement,
        subset: Vec<usize>,
        descriptor: ParabolicDescriptor,
    },
    No(NotParabolic),
    Unknown {
        explored: usize,
    },
}

impl ParabolicVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, ParabolicVerdict::Yes { .. })
    }

    pub fn is_no(&self) -> bool {
        matches!(self, ParabolicVerdict::No(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotParabolic {
    /// Canonical roots of a parabolic subgroup are linearly independent.
    LinearlyDependent,
    /// Some root has support outside the allowed generators.
    OutsideStandardParabolic,
    /// Every conjugate `u . Pi(G)` inside the positive roots was visited; none
    /// is simple (or, with a target, none equals `Pi_target`).
    SearchExhausted,
}

/// Exact check of a certificate: `u . roots ⊆ Pi` (restricted to `within` if given).
pub fn verify_certificate(sys: &CoxeterSystem, roots: &[RootVector], u: &GroupElement, within: Option<&[usize]>) -> Option<Vec<usize>> {
    debug_assert!(u.system().same(sys));
    let mut k = Vec::new();
    for r in roots {
        let s = u.act(r).as_simple()?;
        if within.is_some_and(|w| !w.contains(&s)) {
            return None;
        }
        k.push(s);
    }
    k.sort_unstable();
    Some(k)
}

fn state_key(mut roots: Vec<RootVector>) -> Vec<RootVector> {
    roots.sort_by(|a, b| a.cmp_coeffs(b));
    roots
}

struct Node {
    roots: Vec<RootVector>,
    parent: Option<(usize, usize)>,
}

/// Searches for `u` with `u . Pi(G) ⊆ Pi`.
pub fn is_parabolic(g: &ReflectionSubgroup, opts: &ParabolicSearch) -> ParabolicVerdict {
    is_parabolic_roots(g.ambient(), g.canonical_roots(), opts)
}

/// Same as [`is_parabolic`] for a canonical root set given directly.
///
/// Best-first search over root sets `x . Pi(G)` that stay positive, moving by
/// simple reflections and preferring small total depth. A path to a subset of
/// `Pi` exists through positive states whenever one exists at all (follow a
/// reduced word of the minimal coset representative), so an exhausted search
/// is a proof of non-parabolicity.
pub fn is_parabolic_roots(sys: &CoxeterSystem, roots: &[RootVector], opts: &ParabolicSearch) -> ParabolicVerdict {
    let n = sys.rank();
    let moves: Vec<usize> = match &opts.within {
        Some(w) => {
            let mut w = w.clone();
            w.sort_unstable();
            w
        }
        None => (0..n).collect(),
    };
    if let Some(w) = &opts.within {
        if roots.iter().any(|r| r.support().iter().any(|s| !w.contains(s))) {
            return ParabolicVerdict::No(NotParabolic::OutsideStandardParabolic);
        }
    }
    let vecs: Vec<Vec<_>> = roots.iter().map(|r| r.coeffs().to_vec()).collect();
    if linalg::rank(&vecs) < roots.len() {
        return ParabolicVerdict::No(NotParabolic::LinearlyDependent);
    }

    let priority = |rs: &[RootVector]| -> usize { rs.iter().map(|r| depth(sys, r).unwrap_or(usize::MAX / 64)).sum() };
    let is_goal = |rs: &[RootVector]| {
        let simple: Option<Vec<usize>> = rs.iter().map(|r| r.as_simple().filter(|s| moves.contains(s))).collect();
        match (simple, &opts.target) {
            (None, _) => false,
            (Some(_), None) => true,
            (Some(mut k), Some(t)) => {
                k.sort_unstable();
                k == *t
            }
        }
    };

    let start = state_key(roots.to_vec());
    let mut nodes = vec![Node {
        roots: start.clone(),
        parent: None,
    }];
    let mut seen: HashSet<Vec<RootVector>> = HashSet::from([start.clone()]);
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((priority(&start), 0usize)));
    let mut found = is_goal(&start).then_some(0);
    let mut expanded = 0;

    while found.is_none() {
        let Some(Reverse((_, idx))) = heap.pop() else {
            return ParabolicVerdict::No(NotParabolic::SearchExhausted);
        };
        expanded += 1;
        if expanded > opts.bound {
            return ParabolicVerdict::Unknown { explored: expanded - 1 };
        }
        for &s in &moves {
            let cur = &nodes[idx].roots;
            if cur.iter().any(|r| r.as_simple() == Some(s)) {
                continue;
            }
            let next = state_key(cur.iter().map(|r| r.reflect_simple(sys, s)).collect());
            if !seen.insert(next.clone()) {
                continue;
            }
            let p = priority(&next);
            let goal = is_goal(&next);
            nodes.push(Node {
                roots: next,
                parent: Some((idx, s)),
            });
            let id = nodes.len() - 1;
            if goal {
                found = Some(id);
                break;
            }
            heap.push(Reverse((p, id)));
        }
    }

    // moves applied in order s_1, s_2, ..., s_k give u = s_k ... s_1
    let mut letters = Vec::new();
    let mut cur = found.unwrap();
    while let Some((p, s)) = nodes[cur].parent {
        letters.push(s);
        cur = p;
    }
    let u = GroupElement::from_word(sys, &letters).expect("valid letters");
    let subset = verify_certificate(sys, roots, &u, opts.within.as_deref()).expect("search certificate verifies");
    let descriptor = ParabolicDescriptor::new(&u.inverse(), &subset);
    ParabolicVerdict::Yes {
        u,
        subset,
        descriptor,
    }
}
