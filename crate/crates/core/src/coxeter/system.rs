use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::label::Label;
use crate::numberfield::{make_context, FieldContext, FieldElem};

use super::graph::CoxeterGraph;

struct Inner {
    names: Vec<String>,
    index: HashMap<String, usize>,
    matrix: Vec<Vec<Label>>,
    field: Arc<FieldContext>,
    form: Vec<Vec<FieldElem>>,
    /// Integer indices of the generators when the system is a family truncation.
    indices: Option<Vec<i64>>,
}

/// A Coxeter system of finite rank together with its geometric representation.
///
/// Cheap to clone; all data sits behind an `Arc`.
#[derive(Clone)]
pub struct CoxeterSystem {
    inner: Arc<Inner>,
}

impl CoxeterSystem {
    /// Builds a system from generator names and a full Coxeter matrix.
    pub fn new(names: Vec<String>, matrix: Vec<Vec<Label>>) -> Result<Self> {
        let n = names.len();
        if matrix.len() != n || matrix.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidMatrix(format!("matrix must be {n}x{n}")));
        }
        let mut index = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::InvalidMatrix(format!("duplicate generator `{name}`")));
            }
        }
        for i in 0..n {
            if matrix[i][i] != Label::Finite(1) {
                return Err(Error::InvalidMatrix(format!("m({0},{0}) must be 1", names[i])));
            }
            for j in 0..n {
                if matrix[i][j] != matrix[j][i] {
                    return Err(Error::InvalidMatrix(format!(
                        "m({},{}) != m({},{})",
                        names[i], names[j], names[j], names[i]
                    )));
                }
                if i != j && matches!(matrix[i][j], Label::Finite(m) if m < 2) {
                    return Err(Error::InvalidMatrix(format!(
                        "m({},{}) must be at least 2",
                        names[i], names[j]
                    )));
                }
            }
        }
        let labels = matrix
            .iter()
            .flatten()
            .filter_map(|m| m.finite())
            .filter(|&m| m >= 2);
        let field = make_context(labels)?;
        let form = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| field.form_entry(matrix[i][j]))
                    .collect::<std::result::Result<Vec<_>, _>>()
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(CoxeterSystem {
            inner: Arc::new(Inner {
                names,
                index,
                matrix,
                field,
                form,
                indices: None,
            }),
        })
    }

    /// Builds a system from names and the edges with label other than 2.
    pub fn from_edges<S: Into<String>>(names: Vec<S>, edges: &[(usize, usize, Label)]) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let n = names.len();
        let mut matrix = vec![vec![Label::Finite(2); n]; n];
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = Label::Finite(1);
        }
        for &(i, j, m) in edges {
            if i >= n || j >= n || i == j {
                return Err(Error::InvalidMatrix(format!("bad edge ({i}, {j})")));
            }
            matrix[i][j] = m;
            matrix[j][i] = m;
        }
        Self::new(names, matrix)
    }

    /// Attaches integer indices (used for rule-defined families).
    pub fn with_indices(self, indices: Vec<i64>) -> Self {
        assert_eq!(indices.len(), self.rank());
        let inner = &self.inner;
        CoxeterSystem {
            inner: Arc::new(Inner {
                names: inner.names.clone(),
                index: inner.index.clone(),
                matrix: inner.matrix.clone(),
                field: inner.field.clone(),
                form: inner.form.clone(),
                indices: Some(indices),
            }),
        }
    }

    pub fn rank(&self) -> usize {
        self.inner.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.inner.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.inner.names[i]
    }

    pub fn indices(&self) -> Option<&[i64]> {
        self.inner.indices.as_deref()
    }

    pub fn generator(&self, name: &str) -> Result<usize> {
        self.inner
            .index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn label(&self, i: usize, j: usize) -> Label {
        self.inner.matrix[i][j]
    }

    pub fn matrix(&self) -> &[Vec<Label>] {
        &self.inner.matrix
    }

    pub fn field(&self) -> &Arc<FieldContext> {
        &self.inner.field
    }

    /// `<alpha_i, alpha_j>`.
    pub fn form(&self, i: usize, j: usize) -> &FieldElem {
        &self.inner.form[i][j]
    }

    pub fn graph(&self) -> CoxeterGraph {
        let n = self.rank();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let m = self.label(i, j);
                if m != Label::Finite(2) {
                    edges.push((i, j, m));
                }
            }
        }
        CoxeterGraph::new(self.inner.names.clone(), edges)
    }

    /// Whether both handles refer to the same system instance.
    pub fn same(&self, other: &CoxeterSystem) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }

    /// Same generators and matrix (field contexts then agree as well).
    pub fn structurally_eq(&self, other: &CoxeterSystem) -> bool {
        self.same(other) || (self.inner.names == other.inner.names && self.inner.matrix == other.inner.matrix)
    }

    /// Standard parabolic subsystem on `subset`, in the given order.
    pub fn subsystem(&self, subset: &[usize]) -> Result<CoxeterSystem> {
        let names = subset.iter().map(|&i| self.inner.names[i].clone()).collect();
        let matrix = subset
            .iter()
            .map(|&i| subset.iter().map(|&j| self.label(i, j)).collect())
            .collect();
        let sys = CoxeterSystem::new(names, matrix)?;
        Ok(match &self.inner.indices {
            Some(idx) => sys.with_indices(subset.iter().map(|&i| idx[i]).collect()),
            None => sys,
        })
    }

    /// Names of generators in `set`, in declared order.
    pub fn names_of(&self, set: &[usize]) -> Vec<String> {
        let mut v = set.to_vec();
        v.sort_unstable();
        v.into_iter().map(|i| self.inner.names[i].clone()).collect()
    }
}

impl fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoxeterSystem")
            .field("names", &self.inner.names)
            .field("edges", &self.graph().edges())
            .finish()
    }
}

impl PartialEq for CoxeterSystem {
    fn eq(&self, other: &Self) -> bool {
        self.structurally_eq(other)
    }
}

impl Eq for CoxeterSystem {}
