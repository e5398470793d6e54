//! Laplacian minors over exact integers.
//!
//! Spanning trees are counted by the matrix-tree theorem (delete vertex `0`),
//! two-component forests separating `u` and `v` by the all-minors extension
//! (delete both `u` and `v`), and effective resistance is the ratio of the
//! two.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::{LabeledGraph, VertexId};
use crate::scalar::Exact;

/// Dense square matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    order: usize,
    entries: Vec<T>,
}

impl<T: Exact> Matrix<T> {
    pub fn zeros(order: usize) -> Self {
        Matrix {
            order,
            entries: vec![T::zero(); order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            m.set(i, i, T::one());
        }
        m
    }

    /// Panics unless `rows` is square.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let order = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == order),
            "matrix must be square"
        );
        Matrix {
            order,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.order + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.entries[i * self.order + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    /// Principal submatrix with the listed indices removed.
    pub fn principal_minor_matrix(&self, deleted: &[usize]) -> Self {
        let kept: Vec<usize> = (0..self.order).filter(|i| !deleted.contains(i)).collect();
        let mut m = Self::zeros(kept.len());
        for (r, &i) in kept.iter().enumerate() {
            for (c, &j) in kept.iter().enumerate() {
                m.set(r, c, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

/// `L = D - A` with unit edge weights.
pub fn laplacian<T: Exact>(g: &LabeledGraph) -> Matrix<T> {
    let mut m = Matrix::zeros(g.vertex_count());
    for e in g.edges() {
        let (a, b) = (e.a(), e.b());
        m.set(a, b, -T::one());
        m.set(b, a, -T::one());
        let da = m.get(a, a).clone() + T::one();
        m.set(a, a, da);
        let db = m.get(b, b).clone() + T::one();
        m.set(b, b, db);
    }
    m
}

/// Determinant by Bareiss fraction-free elimination. Every division is
/// exact; a column with no nonzero pivot means the determinant is zero.
pub fn det_exact<T: Exact>(m: &Matrix<T>) -> T {
    let n = m.order;
    if n == 0 {
        return T::one();
    }
    let mut a = m.entries.clone();
    let idx = |i: usize, j: usize| i * n + j;
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[idx(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[idx(r, k)].is_zero()) else {
                return T::zero();
            };
            for j in 0..n {
                a.swap(idx(k, j), idx(p, j));
            }
            negate = !negate;
        }
        let pivot = a[idx(k, k)].clone();
        for i in k + 1..n {
            let lead = a[idx(i, k)].clone();
            for j in k + 1..n {
                let v = (a[idx(i, j)].clone() * pivot.clone()
                    - lead.clone() * a[idx(k, j)].clone())
                    / prev.clone();
                a[idx(i, j)] = v;
            }
            a[idx(i, k)] = T::zero();
        }
        prev = pivot;
    }
    let det = a[idx(n - 1, n - 1)].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Number of spanning trees: the Laplacian minor with vertex `0` deleted.
/// Disconnected graphs yield zero.
pub fn count_spanning_trees<T: Exact>(g: &LabeledGraph) -> T {
    count_spanning_trees_deleting(g, 0)
}

/// Same count with an arbitrary reference vertex removed.
pub fn count_spanning_trees_deleting<T: Exact>(g: &LabeledGraph, reference: VertexId) -> T {
    det_exact(&laplacian::<T>(g).principal_minor_matrix(&[reference]))
}

/// Spanning forests with exactly two components, `u` and `v` in different ones.
pub fn count_two_forests<T: Exact>(g: &LabeledGraph, u: VertexId, v: VertexId) -> Result<T> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    Ok(det_exact(
        &laplacian::<T>(g).principal_minor_matrix(&[u, v]),
    ))
}

/// `r(u, v) = F(u | v) / T(g)` as a normalized rational; `r(u, u) = 0`.
pub fn effective_resistance<T: Exact>(
    g: &LabeledGraph,
    u: VertexId,
    v: VertexId,
) -> Result<Ratio<T>> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Ok(Ratio::from_integer(T::zero()));
    }
    let trees: T = count_spanning_trees(g);
    if trees.is_zero() {
        return Err(Error::InfiniteResistance);
    }
    let forests: T = count_two_forests(g, u, v)?;
    Ok(Ratio::new(forests, trees))
}
