//! Grid graphs `P_m x P_n` and general finite simple graphs.
//!
//! Vertex `u_i^j` sits in row `i` and column `j`, both 1-based. General
//! graphs reuse the same ids through a single-row embedding: vertex number
//! `k` becomes `(1, k)`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Shape of a grid: `m` rows by `n` columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridSpec {
    pub m: usize,
    pub n: usize,
}

impl GridSpec {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidParameter(format!(
                "grid dimensions must be positive, got m={m}, n={n}"
            )));
        }
        Ok(Self { m, n })
    }

    pub fn vertex_count(&self) -> usize {
        self.m * self.n
    }

    /// `2mn - m - n`.
    pub fn edge_count(&self) -> usize {
        self.m * (self.n - 1) + self.n * (self.m - 1)
    }

    pub fn transposed(&self) -> Self {
        Self { m: self.n, n: self.m }
    }

    pub fn contains(&self, v: VertexId) -> bool {
        (1..=self.m).contains(&v.i) && (1..=self.n).contains(&v.j)
    }
}

/// Checks `2 <= m <= c <= n`, the shapes the closed forms and constructions cover.
pub fn check_scope(m: usize, c: usize, n: usize) -> Result<()> {
    if m < 2 {
        return Err(Error::OutOfScope(format!("need m >= 2, got m={m}")));
    }
    if m > n {
        return Err(Error::OutOfScope(format!(
            "need m <= n, got m={m}, n={n}; transpose the grid (swap m and n)"
        )));
    }
    if c < m {
        return Err(Error::OutOfScope(format!("need window width c >= m, got c={c}, m={m}")));
    }
    if c > n {
        return Err(Error::OutOfScope(format!("need window width c <= n, got c={c}, n={n}")));
    }
    Ok(())
}

/// Vertex `u_i^j`: row `i`, column `j`, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId {
    pub i: usize,
    pub j: usize,
}

impl VertexId {
    pub const fn new(i: usize, j: usize) -> Self {
        Self { i, j }
    }

    fn grid_adjacent(self, other: VertexId) -> bool {
        (self.j == other.j && self.i.abs_diff(other.i) == 1) || (self.i == other.i && self.j.abs_diff(other.j) == 1)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u({},{})", self.i, self.j)
    }
}

/// How an edge lies in the grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// `u_i^j u_{i+1}^j`
    Vertical,
    /// `u_i^j u_i^{j+1}`
    Horizontal,
    /// Not a grid edge (general graphs only).
    Other,
}

/// Undirected edge with endpoints in row-major order (`a < b`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId {
    a: VertexId,
    b: VertexId,
}

impl EdgeId {
    /// Edge between two distinct vertices, without any adjacency requirement.
    pub fn new(a: VertexId, b: VertexId) -> Result<Self> {
        if a == b {
            return Err(Error::InvalidEdge {
                a,
                b,
                reason: "self-loop",
            });
        }
        Ok(if a < b { Self { a, b } } else { Self { a: b, b: a } })
    }

    pub fn a(&self) -> VertexId {
        self.a
    }

    pub fn b(&self) -> VertexId {
        self.b
    }

    pub fn orientation(&self) -> Orientation {
        if self.a.j == self.b.j && self.b.i == self.a.i + 1 {
            Orientation::Vertical
        } else if self.a.i == self.b.i && self.b.j == self.a.j + 1 {
            Orientation::Horizontal
        } else {
            Orientation::Other
        }
    }

    pub fn is_incident(&self, v: VertexId) -> bool {
        self.a == v || self.b == v
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

/// Grid edge between `a` and `b` in canonical order. The endpoints must be
/// orthogonal neighbours.
pub fn canonical_edge(a: VertexId, b: VertexId) -> Result<EdgeId> {
    if a == b {
        return Err(Error::InvalidEdge {
            a,
            b,
            reason: "endpoints are equal",
        });
    }
    if !a.grid_adjacent(b) {
        return Err(Error::InvalidEdge {
            a,
            b,
            reason: "endpoints are not grid neighbours",
        });
    }
    EdgeId::new(a, b)
}

/// Finite simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: BTreeSet<VertexId>,
    edges: BTreeSet<EdgeId>,
    grid: Option<GridSpec>,
}

impl Graph {
    /// Builds a general graph; every edge endpoint must be a listed vertex.
    pub fn new(vertices: impl IntoIterator<Item = VertexId>, edges: impl IntoIterator<Item = EdgeId>) -> Result<Self> {
        let vertices: BTreeSet<_> = vertices.into_iter().collect();
        let mut set = BTreeSet::new();
        for e in edges {
            for v in [e.a, e.b] {
                if !vertices.contains(&v) {
                    return Err(Error::InvalidParameter(format!(
                        "edge {e} uses vertex {v} which is not in the vertex set"
                    )));
                }
            }
            if !set.insert(e) {
                return Err(Error::InvalidParameter(format!("duplicate edge {e}")));
            }
        }
        Ok(Self {
            vertices,
            edges: set,
            grid: None,
        })
    }

    /// Grid `P_m x P_n`.
    pub fn grid(m: usize, n: usize) -> Result<Self> {
        Ok(make_grid(GridSpec::new(m, n)?))
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<EdgeId> {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// The grid shape, when this graph was built by [`make_grid`].
    pub fn grid_spec(&self) -> Option<GridSpec> {
        self.grid
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.contains(&e)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|e| e.is_incident(v)).count()
    }

    /// Swaps rows and columns. The result of transposing a grid is again a grid.
    pub fn transpose(&self) -> Graph {
        let flip = |v: VertexId| VertexId::new(v.j, v.i);
        Graph {
            vertices: self.vertices.iter().map(|&v| flip(v)).collect(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeId::new(flip(e.a), flip(e.b)).expect("distinct endpoints stay distinct"))
                .collect(),
            grid: self.grid.map(|g| g.transposed()),
        }
    }
}

/// Builds `P_m x P_n` with `mn` vertices and `2mn - m - n` edges.
pub fn make_grid(spec: GridSpec) -> Graph {
    let GridSpec { m, n } = spec;
    let mut vertices = BTreeSet::new();
    let mut edges = BTreeSet::new();
    for i in 1..=m {
        for j in 1..=n {
            let v = VertexId::new(i, j);
            vertices.insert(v);
            if i < m {
                edges.insert(EdgeId {
                    a: v,
                    b: VertexId::new(i + 1, j),
                });
            }
            if j < n {
                edges.insert(EdgeId {
                    a: v,
                    b: VertexId::new(i, j + 1),
                });
            }
        }
    }
    Graph {
        vertices,
        edges,
        grid: Some(spec),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn u(i: usize, j: usize) -> VertexId {
        VertexId::new(i, j)
    }

    #[test]
    fn small_grid_counts() {
        for (m, n, v, e) in [(2, 3, 6, 7), (2, 2, 4, 4), (3, 5, 15, 22)] {
            let g = Graph::grid(m, n).unwrap();
            assert_eq!(g.vertex_count(), v);
            assert_eq!(g.edge_count(), e);
        }
    }

    #[test]
    fn two_by_two_is_a_four_cycle() {
        let g = Graph::grid(2, 2).unwrap();
        assert!(g.vertices().iter().all(|&v| g.degree(v) == 2));
    }

    #[test]
    fn rejects_zero_dimensions() {
        assert!(matches!(Graph::grid(0, 3), Err(Error::InvalidParameter(_))));
        assert!(matches!(Graph::grid(2, 0), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn canonical_edge_examples() {
        let e = canonical_edge(u(2, 1), u(1, 1)).unwrap();
        assert_eq!((e.a(), e.b()), (u(1, 1), u(2, 1)));
        assert_eq!(e.orientation(), Orientation::Vertical);

        let e = canonical_edge(u(1, 1), u(1, 2)).unwrap();
        assert_eq!((e.a(), e.b()), (u(1, 1), u(1, 2)));
        assert_eq!(e.orientation(), Orientation::Horizontal);

        assert!(matches!(
            canonical_edge(u(1, 1), u(2, 2)),
            Err(Error::InvalidEdge { .. })
        ));
        assert!(matches!(
            canonical_edge(u(1, 1), u(1, 1)),
            Err(Error::InvalidEdge { .. })
        ));
    }

    #[test]
    fn general_graph_checks_endpoints() {
        let a = u(1, 1);
        let b = u(1, 5);
        let e = EdgeId::new(a, b).unwrap();
        assert_eq!(e.orientation(), Orientation::Other);
        assert!(Graph::new([a, b], [e]).is_ok());
        assert!(Graph::new([a], [e]).is_err());
        assert!(Graph::new([a, b], [e, EdgeId::new(b, a).unwrap()]).is_err());
    }

    #[test]
    fn scope_errors_mention_transpose() {
        let err = check_scope(4, 4, 3).unwrap_err();
        assert!(err.to_string().contains("transpose"));
        assert!(check_scope(1, 2, 3).is_err());
        assert!(check_scope(3, 2, 5).is_err());
        assert!(check_scope(2, 6, 5).is_err());
        assert!(check_scope(2, 2, 2).is_ok());
    }

    proptest! {
        #[test]
        fn element_counts(m in 1usize..12, n in 1usize..12) {
            let g = Graph::grid(m, n).unwrap();
            prop_assert_eq!(g.vertex_count(), m * n);
            prop_assert_eq!(g.edge_count(), m * (n - 1) + n * (m - 1));
        }

        #[test]
        fn degrees_and_corners(m in 2usize..9, n in 2usize..9) {
            let g = Graph::grid(m, n).unwrap();
            let degrees: Vec<usize> = g.vertices().iter().map(|&v| g.degree(v)).collect();
            prop_assert!(degrees.iter().all(|d| (2..=4).contains(d)));
            prop_assert_eq!(degrees.iter().filter(|&&d| d == 2).count(), 4);
        }

        #[test]
        fn canonicalization_is_symmetric(m in 1usize..7, n in 1usize..7) {
            let g = Graph::grid(m, n).unwrap();
            for e in g.edges() {
                let fwd = canonical_edge(e.a(), e.b()).unwrap();
                let back = canonical_edge(e.b(), e.a()).unwrap();
                prop_assert_eq!(fwd, back);
                prop_assert_eq!(fwd, *e);
            }
        }

        #[test]
        fn transpose_is_an_involution(m in 1usize..7, n in 1usize..7) {
            let g = Graph::grid(m, n).unwrap();
            prop_assert_eq!(g.transpose(), Graph::grid(n, m).unwrap());
            prop_assert_eq!(g.transpose().transpose(), g);
        }
    }
}
