use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::numberfield::Sign;

use super::root::RootVector;
use super::system::CoxeterSystem;

/// Group element stored by its ShortLex normal form with respect to the
/// declared generator order. Equal elements have identical words.
#[derive(Clone)]
pub struct GroupElement {
    sys: CoxeterSystem,
    word: Vec<usize>,
}

/// Columns are the images `x * alpha_t` of the simple roots.
type Action = Vec<RootVector>;

fn identity_action(sys: &CoxeterSystem) -> Action {
    (0..sys.rank()).map(|i| RootVector::simple(sys, i)).collect()
}

/// `M <- M * s`: column `t` becomes `M(s alpha_t) = M alpha_t - 2<alpha_s, alpha_t> M alpha_s`.
fn right_mul_simple(sys: &CoxeterSystem, m: &mut Action, s: usize) {
    let col_s = m[s].clone();
    for (t, col) in m.iter_mut().enumerate() {
        if t == s {
            *col = col_s.neg();
            continue;
        }
        let b = sys.form(s, t);
        if b.is_zero() {
            continue;
        }
        let k = b + b;
        *col = col.sub(&col_s.scale(&k));
    }
}

/// ShortLex normal form of the product of `word`.
///
/// Works on the action matrix of the inverse: the smallest left descent `s`
/// of `w` is the smallest `s` with `w^-1 alpha_s` negative.
fn normal_form(sys: &CoxeterSystem, word: &[usize]) -> Vec<usize> {
    let mut inv = identity_action(sys);
    for &s in word.iter().rev() {
        right_mul_simple(sys, &mut inv, s);
    }
    let mut out = Vec::new();
    loop {
        let next = (0..sys.rank()).find(|&s| inv[s].leading_sign() == Sign::Negative);
        match next {
            Some(s) => {
                out.push(s);
                right_mul_simple(sys, &mut inv, s);
            }
            None => return out,
        }
    }
}

impl GroupElement {
    pub fn identity(sys: &CoxeterSystem) -> Self {
        GroupElement {
            sys: sys.clone(),
            word: Vec::new(),
        }
    }

    pub fn simple(sys: &CoxeterSystem, s: usize) -> Self {
        GroupElement {
            sys: sys.clone(),
            word: vec![s],
        }
    }

    /// Element represented by an arbitrary word of generator indices.
    pub fn from_word(sys: &CoxeterSystem, word: &[usize]) -> Result<Self> {
        if let Some(&bad) = word.iter().find(|&&s| s >= sys.rank()) {
            return Err(Error::UnknownGenerator(format!("#{bad}")));
        }
        Ok(GroupElement {
            sys: sys.clone(),
            word: normal_form(sys, word),
        })
    }

    /// Element from generator names.
    pub fn from_names<S: AsRef<str>>(sys: &CoxeterSystem, names: &[S]) -> Result<Self> {
        let word = names
            .iter()
            .map(|n| sys.generator(n.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::from_word(sys, &word)
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.sys
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Generators occurring in the reduced word; the element lies in the
    /// standard parabolic subgroup on this set.
    pub fn support(&self) -> BTreeSet<usize> {
        self.word.iter().copied().collect()
    }

    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        let mut w = self.word.clone();
        w.extend_from_slice(&other.word);
        GroupElement {
            sys: self.sys.clone(),
            word: normal_form(&self.sys, &w),
        }
    }

    pub fn mul_simple(&self, s: usize) -> GroupElement {
        let mut w = self.word.clone();
        w.push(s);
        GroupElement {
            sys: self.sys.clone(),
            word: normal_form(&self.sys, &w),
        }
    }

    pub fn inverse(&self) -> GroupElement {
        let w: Vec<usize> = self.word.iter().rev().copied().collect();
        GroupElement {
            sys: self.sys.clone(),
            word: normal_form(&self.sys, &w),
        }
    }

    pub fn conjugate_by(&self, g: &GroupElement) -> GroupElement {
        g.mul(self).mul(&g.inverse())
    }

    pub fn pow(&self, k: usize) -> GroupElement {
        let mut w = Vec::with_capacity(self.word.len() * k);
        for _ in 0..k {
            w.extend_from_slice(&self.word);
        }
        GroupElement {
            sys: self.sys.clone(),
            word: normal_form(&self.sys, &w),
        }
    }

    /// `w * v`.
    pub fn act(&self, v: &RootVector) -> RootVector {
        let mut out = v.clone();
        for &s in self.word.iter().rev() {
            out.reflect_simple_mut(&self.sys, s);
        }
        out
    }

    /// Images of all simple roots.
    pub fn action_matrix(&self) -> Vec<RootVector> {
        let mut m = identity_action(&self.sys);
        for &s in &self.word {
            right_mul_simple(&self.sys, &mut m, s);
        }
        m
    }

    /// `l(ws) < l(w)`, decided by `w alpha_s` being negative.
    pub fn is_right_descent(&self, s: usize) -> bool {
        self.act(&RootVector::simple(&self.sys, s)).leading_sign() == Sign::Negative
    }

    pub fn is_left_descent(&self, s: usize) -> bool {
        self.word.first() == Some(&s) || self.inverse().is_right_descent(s)
    }

    /// Order of the element, if at most `bound`.
    pub fn order(&self, bound: usize) -> Option<usize> {
        let mut x = self.clone();
        for k in 1..=bound {
            if x.is_identity() {
                return Some(k);
            }
            x = x.mul(self);
        }
        None
    }

    /// The positive root `gamma` with `self = s_gamma`, if the element is a reflection.
    ///
    /// Conjugates by left descents while the length drops; a reflection reaches a
    /// simple reflection this way. The candidate root is verified at the end.
    pub fn as_reflection(&self) -> Option<RootVector> {
        if self.word.len() % 2 == 0 {
            return None;
        }
        let mut x = self.clone();
        let mut prefix = Vec::new();
        while x.length() > 1 {
            let s = x.word[0];
            let y = GroupElement::simple(&self.sys, s).mul(&x).mul_simple(s);
            if y.length() >= x.length() {
                return None;
            }
            prefix.push(s);
            x = y;
        }
        let t = x.word[0];
        let mut gamma = RootVector::simple(&self.sys, t);
        for &s in prefix.iter().rev() {
            gamma.reflect_simple_mut(&self.sys, s);
        }
        let gamma = gamma.positive_rep();
        (reflection_element(&self.sys, &gamma) == *self).then_some(gamma)
    }

    pub fn display(&self) -> String {
        if self.word.is_empty() {
            return "e".to_string();
        }
        self.word
            .iter()
            .map(|&s| self.sys.name(s))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.word == other.word
    }
}

impl Eq for GroupElement {}

impl Hash for GroupElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.word.hash(state);
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// ShortLex order.
impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.word.cmp(&other.word))
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.display())
    }
}

/// The reflection `s_gamma` for a positive root: if `gamma = x alpha_t` then
/// `s_gamma = x s_t x^-1`.
pub fn reflection_element(sys: &CoxeterSystem, gamma: &RootVector) -> GroupElement {
    let gamma = gamma.positive_rep();
    let (path, t) = super::root::descent_path(sys, &gamma).expect("not a positive root");
    // s_k ... s_1 gamma = alpha_t, so gamma = s_1 ... s_k alpha_t
    let mut word: Vec<usize> = path.clone();
    word.push(t);
    word.extend(path.iter().rev());
    GroupElement::from_word(sys, &word).expect("valid word")
}

/// All elements of the subgroup generated by `gens`, by breadth-first closure.
/// Returns `None` once more than `limit` elements are found.
pub fn enumerate_subgroup(
    sys: &CoxeterSystem,
    gens: &[GroupElement],
    limit: usize,
) -> Option<Vec<GroupElement>> {
    let id = GroupElement::identity(sys);
    let mut seen: HashSet<GroupElement> = HashSet::new();
    seen.insert(id.clone());
    let mut order = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.mul(g);
            if seen.insert(y.clone()) {
                if seen.len() > limit {
                    return None;
                }
                order.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Some(order)
}

/// All elements of the standard parabolic subgroup on `subset` (all of `W`
/// when `subset` lists every generator), in ShortLex order. Returns `None`
/// past `limit` elements.
pub fn enumerate_parabolic(sys: &CoxeterSystem, subset: &[usize], limit: usize) -> Option<Vec<GroupElement>> {
    let id = GroupElement::identity(sys);
    let mut seen: HashMap<Vec<usize>, ()> = HashMap::new();
    seen.insert(Vec::new(), ());
    let mut all = vec![id];
    let mut layer_start = 0;
    loop {
        let layer_end = all.len();
        if layer_start == layer_end {
            break;
        }
        for idx in layer_start..layer_end {
            for &s in subset {
                let x = &all[idx];
                if x.is_right_descent(s) {
                    continue;
                }
                let y = x.mul_simple(s);
                if seen.insert(y.word.clone(), ()).is_none() {
                    all.push(y);
                    if all.len() > limit {
                        return None;
                    }
                }
            }
        }
        layer_start = layer_end;
    }
    all.sort();
    Some(all)
}

/// `w = w^I w_I` with `w^I` the unique shortest element of `w W_I`.
pub fn coset_min(w: &GroupElement, subset: &[usize]) -> (GroupElement, GroupElement) {
    let mut x = w.clone();
    loop {
        let desc = subset.iter().copied().find(|&s| x.is_right_descent(s));
        match desc {
            Some(s) => x = x.mul_simple(s),
            None => break,
        }
    }
    let rest = x.inverse().mul(w);
    (x, rest)
}

/// True iff `supp(w alpha_s)` meets the odd-graph component of `s`.
pub fn check_odd_support(w: &GroupElement, s: usize) -> bool {
    let sys = w.system();
    let comp = sys.graph().odd_component_of(s);
    let img = w.act(&RootVector::simple(sys, s));
    img.support().iter().any(|i| comp.contains(i))
}
