//! Recognition of finite Coxeter graphs and an enumeration oracle for group orders.

use std::collections::HashMap;
use std::fmt;
use std::sync::{LazyLock, Mutex};

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::coxeter::{enumerate_parabolic, enumerate_positive_roots_capped, CoxeterGraph, CoxeterSystem};
use crate::label::Label;

/// Type of an irreducible component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ComponentType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    /// Dihedral of order `2m`, for `m` other than 3, 4, 6.
    I2(u32),
    G2,
    AInf1,
    AInf2,
    BInf,
    DInf,
    /// Finite rank, infinite group.
    Infinite,
}

impl ComponentType {
    pub fn is_finite(self) -> bool {
        !matches!(
            self,
            ComponentType::Infinite
                | ComponentType::AInf1
                | ComponentType::AInf2
                | ComponentType::BInf
                | ComponentType::DInf
        )
    }

    /// Locally finite: finite, or one of the four infinite-rank types.
    pub fn is_locally_finite(self) -> bool {
        self != ComponentType::Infinite
    }

    pub fn order(self) -> Option<BigUint> {
        let fact = |n: usize| (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k);
        let pow2 = |n: usize| BigUint::one() << n;
        Some(match self {
            ComponentType::A(n) => fact(n + 1),
            ComponentType::B(n) => pow2(n) * fact(n),
            ComponentType::D(n) => pow2(n - 1) * fact(n),
            ComponentType::E(6) => BigUint::from(51_840u64),
            ComponentType::E(7) => BigUint::from(2_903_040u64),
            ComponentType::E(8) => BigUint::from(696_729_600u64),
            ComponentType::F4 => BigUint::from(1_152u64),
            ComponentType::H(3) => BigUint::from(120u64),
            ComponentType::H(4) => BigUint::from(14_400u64),
            ComponentType::G2 => BigUint::from(12u64),
            ComponentType::I2(m) => BigUint::from(2 * m as u64),
            _ => return None,
        })
    }
}

impl fmt::Display for ComponentType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentType::A(n) => write!(f, "A{n}"),
            ComponentType::B(n) => write!(f, "B{n}"),
            ComponentType::D(n) => write!(f, "D{n}"),
            ComponentType::E(n) => write!(f, "E{n}"),
            ComponentType::F4 => write!(f, "F4"),
            ComponentType::H(n) => write!(f, "H{n}"),
            ComponentType::I2(m) => write!(f, "I2({m})"),
            ComponentType::G2 => write!(f, "G2"),
            ComponentType::AInf1 => write!(f, "A_oo<1>"),
            ComponentType::AInf2 => write!(f, "A_oo<2>"),
            ComponentType::BInf => write!(f, "B_oo"),
            ComponentType::DInf => write!(f, "D_oo"),
            ComponentType::Infinite => write!(f, "infinite"),
        }
    }
}

/// Decomposition of a finite graph into typed irreducible components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeName {
    pub components: Vec<(Vec<usize>, ComponentType)>,
}

impl TypeName {
    pub fn is_finite(&self) -> bool {
        self.components.iter().all(|(_, t)| t.is_finite())
    }

    pub fn order(&self) -> Option<BigUint> {
        self.components
            .iter()
            .try_fold(BigUint::one(), |acc, (_, t)| t.order().map(|o| acc * o))
    }

    /// Component types joined with ` x `, e.g. `A2 x A1`; the empty graph is `A0`.
    pub fn label(&self) -> String {
        if self.components.is_empty() {
            return "A0".to_string();
        }
        self.components.iter().map(|(_, t)| t.to_string()).join(" x ")
    }
}

impl fmt::Display for TypeName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

fn recognize_component(g: &CoxeterGraph, comp: &[usize]) -> ComponentType {
    let n = comp.len();
    let sub = g.induced(comp);
    if n == 1 {
        return ComponentType::A(1);
    }
    if n == 2 {
        return match sub.label(0, 1) {
            Label::Finite(3) => ComponentType::A(2),
            Label::Finite(4) => ComponentType::B(2),
            Label::Finite(6) => ComponentType::G2,
            Label::Finite(m) => ComponentType::I2(m),
            Label::Infinite => ComponentType::Infinite,
        };
    }
    let edges = sub.edges();
    if edges.len() != n - 1 {
        return ComponentType::Infinite;
    }
    let mut special: Vec<(usize, usize, u32)> = Vec::new();
    for &(i, j, m) in edges {
        match m {
            Label::Finite(3) => {}
            Label::Finite(m @ (4 | 5)) => special.push((i, j, m)),
            _ => return ComponentType::Infinite,
        }
    }
    let degrees: Vec<usize> = (0..n).map(|v| sub.degree(v)).collect();
    let branch: Vec<usize> = (0..n).filter(|&v| degrees[v] >= 3).collect();
    if special.len() > 1 {
        return ComponentType::Infinite;
    }
    if let Some(&(i, j, m)) = special.first() {
        if !branch.is_empty() {
            return ComponentType::Infinite;
        }
        let at_end = degrees[i] == 1 || degrees[j] == 1;
        return match (m, n, at_end) {
            (4, _, true) => ComponentType::B(n),
            (4, 4, false) => ComponentType::F4,
            (5, 3, true) => ComponentType::H(3),
            (5, 4, true) => ComponentType::H(4),
            _ => ComponentType::Infinite,
        };
    }
    match branch.as_slice() {
        [] => ComponentType::A(n),
        [c] if degrees[*c] == 3 => {
            // arm lengths from the branch vertex
            let mut arms: Vec<usize> = sub
                .neighbors(*c)
                .into_iter()
                .map(|(start, _)| {
                    let (mut prev, mut cur, mut len) = (*c, start, 1);
                    loop {
                        let next = sub.neighbors(cur).into_iter().map(|x| x.0).find(|&x| x != prev);
                        match next {
                            Some(x) => {
                                prev = cur;
                                cur = x;
                                len += 1;
                            }
                            None => break len,
                        }
                    }
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => ComponentType::D(n),
                [1, 2, 2] => ComponentType::E(6),
                [1, 2, 3] => ComponentType::E(7),
                [1, 2, 4] => ComponentType::E(8),
                _ => ComponentType::Infinite,
            }
        }
        _ => ComponentType::Infinite,
    }
}

/// Types of the connected components of a finite Coxeter graph.
pub fn finite_type_recognize(g: &CoxeterGraph) -> TypeName {
    TypeName {
        components: g
            .components()
            .into_iter()
            .map(|c| {
                let t = recognize_component(g, &c);
                (c, t)
            })
            .collect(),
    }
}

/// Whether the standard parabolic subgroup on `subset` is finite.
pub fn is_finite_standard(sys: &CoxeterSystem, subset: &[usize]) -> bool {
    finite_type_recognize(&sys.graph().induced(subset)).is_finite()
}

/// Canonical key of a labelled graph up to relabelling of vertices.
fn iso_key(g: &CoxeterGraph) -> Vec<Label> {
    let n = g.vertices().len();
    (0..n)
        .permutations(n)
        .map(|p| {
            let mut key = Vec::with_capacity(n * n);
            for i in 0..n {
                for j in 0..n {
                    key.push(g.label(p[i], p[j]));
                }
            }
            key
        })
        .min()
        .unwrap_or_default()
}

static ORDER_CACHE: LazyLock<Mutex<HashMap<Vec<Label>, Option<usize>>>> = LazyLock::new(|| Mutex::new(HashMap::new()));

/// Order of a connected graph's group by brute force: the positive roots are
/// enumerated first (more than `root_cap` of them means infinite), then the
/// elements. `None` means infinite or beyond `element_cap`.
fn component_order(g: &CoxeterGraph, root_cap: usize, element_cap: usize) -> Option<usize> {
    let key = iso_key(g);
    if let Some(v) = ORDER_CACHE.lock().unwrap().get(&key) {
        return *v;
    }
    let n = g.vertices().len();
    let sys = CoxeterSystem::from_edges(g.vertices().to_vec(), g.edges()).expect("graph gives a valid system");
    let roots = enumerate_positive_roots_capped(&sys, usize::MAX, root_cap);
    let result = if !roots.saturated {
        None
    } else {
        let all: Vec<usize> = (0..n).collect();
        enumerate_parabolic(&sys, &all, element_cap).map(|e| e.len())
    };
    ORDER_CACHE.lock().unwrap().insert(key, result);
    result
}

/// Group order by enumeration, component by component; `None` if infinite
/// (or past the caps).
pub fn order_by_enumeration(g: &CoxeterGraph, root_cap: usize, element_cap: usize) -> Option<BigUint> {
    let mut total = BigUint::one();
    for comp in g.components() {
        let sub = g.induced(&comp);
        total *= BigUint::from(component_order(&sub, root_cap, element_cap)?);
    }
    Some(total)
}
