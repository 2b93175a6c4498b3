//! Small named systems, generators named `s1, s2, ...`.

use crate::label::Label;

use super::system::CoxeterSystem;

fn names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("s{i}")).collect()
}

fn path(n: usize, labels: &[Label]) -> CoxeterSystem {
    let edges: Vec<(usize, usize, Label)> = labels.iter().enumerate().map(|(i, &m)| (i, i + 1, m)).collect();
    CoxeterSystem::from_edges(names(n), &edges).expect("valid path system")
}

/// `A_n`: path with labels 3.
pub fn type_a(n: usize) -> CoxeterSystem {
    path(n, &vec![Label::Finite(3); n.saturating_sub(1)])
}

/// `B_n`: path with the label 4 on the first edge.
pub fn type_b(n: usize) -> CoxeterSystem {
    assert!(n >= 2);
    let mut labels = vec![Label::Finite(3); n - 1];
    labels[0] = Label::Finite(4);
    path(n, &labels)
}

/// `D_n`: `s1` and `s2` both attached to `s3`, then a path.
pub fn type_d(n: usize) -> CoxeterSystem {
    assert!(n >= 4);
    let mut edges = vec![(0, 2, Label::Finite(3)), (1, 2, Label::Finite(3))];
    for i in 2..n - 1 {
        edges.push((i, i + 1, Label::Finite(3)));
    }
    CoxeterSystem::from_edges(names(n), &edges).expect("valid D system")
}

/// Dihedral `I_2(m)`.
pub fn dihedral(m: Label) -> CoxeterSystem {
    path(2, &[m])
}

/// `A_1^k`: `k` commuting involutions.
pub fn a1_power(k: usize) -> CoxeterSystem {
    CoxeterSystem::from_edges(names(k), &[]).expect("valid system")
}

/// Path with the given labels.
pub fn path_system(labels: &[Label]) -> CoxeterSystem {
    path(labels.len() + 1, labels)
}
