use std::collections::BTreeSet;

use crate::label::Label;

/// Coxeter graph: vertices are generators, edges carry labels `m >= 3` or `oo`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterGraph {
    vertices: Vec<String>,
    edges: Vec<(usize, usize, Label)>,
}

impl CoxeterGraph {
    pub fn new(vertices: Vec<String>, edges: Vec<(usize, usize, Label)>) -> Self {
        let edges = edges
            .into_iter()
            .filter(|&(_, _, m)| m != Label::Finite(2))
            .map(|(i, j, m)| if i < j { (i, j, m) } else { (j, i, m) })
            .collect();
        CoxeterGraph { vertices, edges }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize, Label)] {
        &self.edges
    }

    /// Edges kept in the odd graph: those with odd finite label.
    pub fn odd_edges(&self) -> Vec<(usize, usize, Label)> {
        self.edges.iter().copied().filter(|e| e.2.is_odd()).collect()
    }

    pub fn label(&self, i: usize, j: usize) -> Label {
        if i == j {
            return Label::Finite(1);
        }
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        self.edges
            .iter()
            .find(|e| e.0 == a && e.1 == b)
            .map(|e| e.2)
            .unwrap_or(Label::Finite(2))
    }

    fn components_with(&self, edges: &[(usize, usize, Label)]) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for &(i, j, _) in edges {
            let a = find(&mut parent, i);
            let b = find(&mut parent, j);
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut comps: Vec<Vec<usize>> = Vec::new();
        let mut root_slot = vec![usize::MAX; n];
        for v in 0..n {
            let r = find(&mut parent, v);
            if root_slot[r] == usize::MAX {
                root_slot[r] = comps.len();
                comps.push(Vec::new());
            }
            comps[root_slot[r]].push(v);
        }
        comps
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_with(&self.edges)
    }

    /// Connected components of the odd graph; two simple reflections are
    /// conjugate exactly when they share a component.
    pub fn odd_components(&self) -> Vec<Vec<usize>> {
        self.components_with(&self.odd_edges())
    }

    pub fn odd_component_of(&self, s: usize) -> BTreeSet<usize> {
        self.odd_components()
            .into_iter()
            .find(|c| c.contains(&s))
            .unwrap_or_default()
            .into_iter()
            .collect()
    }

    /// Induced subgraph on `subset` with vertices renumbered in the given order.
    pub fn induced(&self, subset: &[usize]) -> CoxeterGraph {
        let vertices = subset.iter().map(|&i| self.vertices[i].clone()).collect();
        let mut edges = Vec::new();
        for (a, &i) in subset.iter().enumerate() {
            for (b, &j) in subset.iter().enumerate().skip(a + 1) {
                let m = self.label(i, j);
                if m != Label::Finite(2) {
                    edges.push((a, b, m));
                }
            }
        }
        CoxeterGraph::new(vertices, edges)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.0 == v || e.1 == v).count()
    }

    pub fn neighbors(&self, v: usize) -> Vec<(usize, Label)> {
        self.edges
            .iter()
            .filter_map(|&(i, j, m)| {
                if i == v {
                    Some((j, m))
                } else if j == v {
                    Some((i, m))
                } else {
                    None
                }
            })
            .collect()
    }
}
