//! Column-window coverings of grids and edge-covering checks for arbitrary
//! subgraph families.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::grid::{check_scope, make_grid, EdgeId, Graph, GridSpec, VertexId};

/// A subgraph given by explicit element sets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Subgraph {
    pub vertices: BTreeSet<VertexId>,
    pub edges: BTreeSet<EdgeId>,
}

impl Subgraph {
    pub fn new(vertices: impl IntoIterator<Item = VertexId>, edges: impl IntoIterator<Item = EdgeId>) -> Self {
        Self {
            vertices: vertices.into_iter().collect(),
            edges: edges.into_iter().collect(),
        }
    }

    /// Window `H_l` of width `c` in an `m`-row grid: columns `l ..= l+c-1`,
    /// all vertical edges in those columns and the horizontal edges between them.
    pub fn window(m: usize, c: usize, l: usize) -> Self {
        let shifted = make_grid(GridSpec { m, n: c });
        let shift = |v: VertexId| VertexId::new(v.i, v.j + l - 1);
        Self {
            vertices: shifted.vertices().iter().map(|&v| shift(v)).collect(),
            edges: shifted
                .edges()
                .iter()
                .map(|e| EdgeId::new(shift(e.a()), shift(e.b())).expect("shift keeps endpoints distinct"))
                .collect(),
        }
    }

    /// Columns spanned, if the vertex set is nonempty.
    pub fn column_span(&self) -> Option<(usize, usize)> {
        let lo = self.vertices.iter().map(|v| v.j).min()?;
        let hi = self.vertices.iter().map(|v| v.j).max()?;
        Some((lo, hi))
    }

    /// True when this subgraph is exactly a `P_m x P_c` column window of some
    /// grid: element counts match and the edge set re-derived from the vertex
    /// block equals the stored one.
    pub fn is_grid_window(&self, m: usize, c: usize) -> bool {
        if m == 0 || c == 0 {
            return false;
        }
        if self.vertices.len() != m * c || self.edges.len() != 2 * m * c - m - c {
            return false;
        }
        let Some((lo, hi)) = self.column_span() else {
            return false;
        };
        if hi + 1 - lo != c {
            return false;
        }
        let rows_ok = self.vertices.iter().all(|v| (1..=m).contains(&v.i));
        rows_ok && *self == Subgraph::window(m, c, lo)
    }
}

/// An ordered family of subgraphs of `host`, in member order `H_1, ..., H_t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverFamily {
    host: Graph,
    members: Vec<Subgraph>,
}

impl CoverFamily {
    /// Validates that the family is nonempty, its members are pairwise
    /// distinct subgraphs of `host`, and each member's edges join its own
    /// vertices. Whether it covers the host is a separate question; see
    /// [`is_edge_covering`].
    pub fn new(host: Graph, members: Vec<Subgraph>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::MalformedFamily("family has no members".into()));
        }
        for (idx, h) in members.iter().enumerate() {
            let l = idx + 1;
            if let Some(v) = h.vertices.iter().find(|v| !host.contains_vertex(**v)) {
                return Err(Error::MalformedFamily(format!(
                    "member {l} contains vertex {v} which is not in the host"
                )));
            }
            if let Some(e) = h.edges.iter().find(|e| !host.contains_edge(**e)) {
                return Err(Error::MalformedFamily(format!(
                    "member {l} contains edge {e} which is not in the host"
                )));
            }
            if let Some(e) = h
                .edges
                .iter()
                .find(|e| !h.vertices.contains(&e.a()) || !h.vertices.contains(&e.b()))
            {
                return Err(Error::MalformedFamily(format!(
                    "member {l} contains edge {e} without both of its endpoints"
                )));
            }
        }
        let distinct: BTreeSet<&Subgraph> = members.iter().collect();
        if distinct.len() != members.len() {
            let dup = (1..members.len())
                .find_map(|b| (0..b).find(|&a| members[a] == members[b]).map(|a| (a + 1, b + 1)))
                .expect("a duplicate exists");
            return Err(Error::MalformedFamily(format!(
                "members {} and {} are the same subgraph",
                dup.0, dup.1
            )));
        }
        Ok(Self { host, members })
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn members(&self) -> &[Subgraph] {
        &self.members
    }

    /// Member count `t`.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Outcome of the edge-covering check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Covering {
    Covered,
    /// Uncovered host edges in canonical order; never empty.
    Uncovered(Vec<EdgeId>),
}

impl Covering {
    pub fn is_covered(&self) -> bool {
        matches!(self, Covering::Covered)
    }
}

/// Every host edge must lie in at least one member.
pub fn is_edge_covering(family: &CoverFamily) -> Covering {
    let covered: BTreeSet<&EdgeId> = family.members.iter().flat_map(|h| h.edges.iter()).collect();
    let missing: Vec<EdgeId> = family
        .host
        .edges()
        .iter()
        .filter(|e| !covered.contains(e))
        .copied()
        .collect();
    if missing.is_empty() {
        Covering::Covered
    } else {
        Covering::Uncovered(missing)
    }
}

/// The `n - c + 1` column windows of width `c` covering `P_m x P_n`, ordered by `l`.
pub fn enumerate_windows(m: usize, n: usize, c: usize) -> Result<CoverFamily> {
    check_scope(m, c, n)?;
    let host = make_grid(GridSpec::new(m, n)?);
    let members = (1..=n - c + 1).map(|l| Subgraph::window(m, c, l)).collect();
    CoverFamily::new(host, members)
}
