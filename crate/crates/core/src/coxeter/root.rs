use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

use serde::Serialize;

use crate::numberfield::{FieldElem, Sign};

use super::system::CoxeterSystem;

/// Vector in the span of the simple roots, with one coefficient per generator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RootVector {
    coeffs: Vec<FieldElem>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RootClass {
    Positive,
    Negative,
    NotAUnitRoot,
}

impl RootVector {
    pub fn zero(sys: &CoxeterSystem) -> Self {
        let z = sys.field().zero();
        RootVector {
            coeffs: vec![z; sys.rank()],
        }
    }

    /// The simple root `alpha_i`.
    pub fn simple(sys: &CoxeterSystem, i: usize) -> Self {
        let mut v = Self::zero(sys);
        v.coeffs[i] = sys.field().one();
        v
    }

    pub fn from_coeffs(coeffs: Vec<FieldElem>) -> Self {
        RootVector { coeffs }
    }

    /// Integer combination of simple roots.
    pub fn from_ints(sys: &CoxeterSystem, ints: &[i64]) -> Self {
        assert_eq!(ints.len(), sys.rank());
        RootVector {
            coeffs: ints.iter().map(|&k| sys.field().from_int(k)).collect(),
        }
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &FieldElem {
        &self.coeffs[i]
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(FieldElem::is_zero)
    }

    pub fn support(&self) -> BTreeSet<usize> {
        (0..self.coeffs.len()).filter(|&i| !self.coeffs[i].is_zero()).collect()
    }

    /// Generators whose coefficient is strictly positive.
    pub fn positive_support(&self) -> BTreeSet<usize> {
        (0..self.coeffs.len())
            .filter(|&i| self.coeffs[i].is_positive())
            .collect()
    }

    /// Sign of the first nonzero coefficient. For genuine roots this is the sign
    /// of every coefficient.
    pub fn leading_sign(&self) -> Sign {
        self.coeffs
            .iter()
            .find(|c| !c.is_zero())
            .map(FieldElem::sign)
            .unwrap_or(Sign::Zero)
    }

    /// Every nonzero coefficient positive, and at least one nonzero.
    pub fn is_positive(&self) -> bool {
        let mut any = false;
        for c in &self.coeffs {
            match c.sign() {
                Sign::Negative => return false,
                Sign::Positive => any = true,
                Sign::Zero => {}
            }
        }
        any
    }

    pub fn is_negative(&self) -> bool {
        self.neg().is_positive()
    }

    pub fn neg(&self) -> RootVector {
        RootVector {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &RootVector) -> RootVector {
        RootVector {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &RootVector) -> RootVector {
        RootVector {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, k: &FieldElem) -> RootVector {
        RootVector {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// The positive one of `self` and `-self` (by leading sign).
    pub fn positive_rep(&self) -> RootVector {
        if self.leading_sign() == Sign::Negative {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// `<alpha_i, self>`.
    pub fn pair_simple(&self, sys: &CoxeterSystem, i: usize) -> FieldElem {
        let mut acc = sys.field().zero();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let b = sys.form(i, j);
            if b.is_zero() {
                continue;
            }
            acc = &acc + &(b * c);
        }
        acc
    }

    /// `<self, other>` under the system's bilinear form.
    pub fn pair(&self, sys: &CoxeterSystem, other: &RootVector) -> FieldElem {
        let mut acc = sys.field().zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = &acc + &(c * &other.pair_simple(sys, i));
        }
        acc
    }

    pub fn norm(&self, sys: &CoxeterSystem) -> FieldElem {
        self.pair(sys, self)
    }

    /// Image under the simple reflection `s_i`: `v - 2<alpha_i, v> alpha_i`.
    pub fn reflect_simple(&self, sys: &CoxeterSystem, i: usize) -> RootVector {
        let p = self.pair_simple(sys, i);
        let mut out = self.clone();
        if !p.is_zero() {
            out.coeffs[i] = &out.coeffs[i] - &(&p + &p);
        }
        out
    }

    /// In-place simple reflection.
    pub fn reflect_simple_mut(&mut self, sys: &CoxeterSystem, i: usize) {
        let p = self.pair_simple(sys, i);
        if !p.is_zero() {
            self.coeffs[i] = &self.coeffs[i] - &(&p + &p);
        }
    }

    /// Index of the simple root equal to `self`, if any.
    pub fn as_simple(&self) -> Option<usize> {
        let mut found = None;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !c.is_one() || found.is_some() {
                return None;
            }
            found = Some(i);
        }
        found
    }

    /// Human-readable linear combination, e.g. `a + r2*b`.
    pub fn display(&self, sys: &CoxeterSystem) -> String {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let compound = text[1..].contains(['+', '-']);
            let (neg, body) = if !compound && text.starts_with('-') {
                (true, text[1..].to_string())
            } else {
                (false, text)
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let name = sys.name(i);
            if body == "1" {
                out.push_str(name);
            } else if compound {
                let _ = write!(out, "({body})*{name}");
            } else {
                let _ = write!(out, "{body}*{name}");
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Deterministic comparison by coefficients: numeric order, first coordinate first.
    pub fn cmp_coeffs(&self, other: &RootVector) -> Ordering {
        for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        self.coeffs.len().cmp(&other.coeffs.len())
    }
}

impl std::fmt::Debug for RootVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

/// Reflection of `v` in the hyperplane of the unit root `gamma`: `v - 2<gamma, v> gamma`.
pub fn reflect(sys: &CoxeterSystem, gamma: &RootVector, v: &RootVector) -> RootVector {
    let p = gamma.pair(sys, v);
    if p.is_zero() {
        return v.clone();
    }
    v.sub(&gamma.scale(&(&p + &p)))
}

/// Positive, negative, or not a unit root (zero, norm other than 1, or mixed signs).
pub fn classify_root(sys: &CoxeterSystem, v: &RootVector) -> RootClass {
    if v.is_zero() || !v.norm(sys).is_one() {
        return RootClass::NotAUnitRoot;
    }
    if v.is_positive() {
        RootClass::Positive
    } else if v.is_negative() {
        RootClass::Negative
    } else {
        RootClass::NotAUnitRoot
    }
}

/// Depth of a positive root together with the descent path: simple indices
/// `s_1, ..., s_k` and the simple root `t` with `s_k ... s_1 gamma = alpha_t`.
///
/// Each step applies the smallest `s` with `<gamma, alpha_s> > 0`, which lowers
/// depth by exactly one. The depth is `k + 1`. Returns `None` if `gamma` is
/// not a positive root (the descent leaves the positive cone).
pub fn descent_path(sys: &CoxeterSystem, gamma: &RootVector) -> Option<(Vec<usize>, usize)> {
    let mut v = gamma.clone();
    let mut path = Vec::new();
    let limit = 10_000usize;
    loop {
        if let Some(t) = v.as_simple() {
            return Some((path, t));
        }
        if !v.is_positive() || path.len() > limit {
            return None;
        }
        let s = (0..sys.rank()).find(|&s| v.pair_simple(sys, s).is_positive())?;
        v.reflect_simple_mut(sys, s);
        path.push(s);
    }
}

pub fn depth(sys: &CoxeterSystem, gamma: &RootVector) -> Option<usize> {
    descent_path(sys, gamma).map(|(p, _)| p.len() + 1)
}

/// Positive roots of depth at most `depth_bound`, ordered by depth then coefficients.
#[derive(Debug, Clone)]
pub struct RootEnumeration {
    pub roots: Vec<RootVector>,
    pub depths: Vec<usize>,
    /// Every positive root has been found (the root system is finite and complete).
    pub saturated: bool,
}

pub fn enumerate_positive_roots(sys: &CoxeterSystem, depth_bound: usize) -> RootEnumeration {
    enumerate_positive_roots_capped(sys, depth_bound, usize::MAX)
}

/// As [`enumerate_positive_roots`], also stopping (unsaturated) once more than
/// `count_cap` roots have been found.
pub fn enumerate_positive_roots_capped(sys: &CoxeterSystem, depth_bound: usize, count_cap: usize) -> RootEnumeration {
    let all: Vec<usize> = (0..sys.rank()).collect();
    enumerate_roots_inner(sys, &all, depth_bound, count_cap)
}

/// Positive roots of the standard parabolic subgroup `W_I`, as vectors of the
/// ambient system; depths are measured in `W_I`, which agrees with the ambient depth.
pub fn enumerate_parabolic_roots(sys: &CoxeterSystem, subset: &[usize], depth_bound: usize) -> RootEnumeration {
    enumerate_roots_inner(sys, subset, depth_bound, usize::MAX)
}

fn enumerate_roots_inner(sys: &CoxeterSystem, gens: &[usize], depth_bound: usize, count_cap: usize) -> RootEnumeration {
    let mut seen: HashSet<RootVector> = HashSet::new();
    let mut roots = Vec::new();
    let mut depths = Vec::new();
    let mut layer: Vec<RootVector> = gens.iter().map(|&i| RootVector::simple(sys, i)).collect();
    let mut d = 1;
    for r in &layer {
        seen.insert(r.clone());
    }
    let mut saturated = gens.is_empty();
    while !layer.is_empty() {
        if d > depth_bound || roots.len() + layer.len() > count_cap {
            break;
        }
        let mut sorted = layer.clone();
        sorted.sort_by(|a, b| b.cmp_coeffs(a));
        for r in &sorted {
            roots.push(r.clone());
            depths.push(d);
        }
        let mut next = Vec::new();
        for r in &layer {
            for &s in gens {
                // depth grows exactly when <r, alpha_s> < 0
                if r.pair_simple(sys, s).is_negative() {
                    let img = r.reflect_simple(sys, s);
                    if seen.insert(img.clone()) {
                        next.push(img);
                    }
                }
            }
        }
        if next.is_empty() {
            saturated = true;
        }
        layer = next;
        d += 1;
    }
    RootEnumeration {
        roots,
        depths,
        saturated,
    }
}
