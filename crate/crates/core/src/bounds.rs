//! General lower/upper bounds on the three H-irregularity strengths and the
//! closed-form values for grids under column-window coverings.

use serde::Serialize;

use crate::arith::ceil_div_pos;
use crate::construct::{LabelingKind, WindowSizes};
use crate::error::{Error, Result};
use crate::grid::{check_scope, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub kind: LabelingKind,
    pub lower: u32,
    /// The upper bound is `2^upper_exponent`.
    pub upper_exponent: u64,
}

impl BoundReport {
    /// `2^upper_exponent` when it fits in a `u128`.
    pub fn upper(&self) -> Option<u128> {
        1u128.checked_shl(u32::try_from(self.upper_exponent).ok()?)
    }

    /// Whether `value <= 2^upper_exponent`; always true once the power
    /// exceeds `u128`.
    pub fn upper_admits(&self, value: u32) -> bool {
        self.upper().is_none_or(|u| u128::from(value) <= u)
    }
}

fn to_u32(x: i64) -> Result<u32> {
    u32::try_from(x).map_err(|_| Error::InvalidParameter(format!("bound {x} does not fit in u32")))
}

/// `1 + ceil((t - 1) / d)` where `d` is `|V(H)|`, `|E(H)|` or `|V(H)| + |E(H)|`
/// for the vertex, edge and total strengths.
pub fn lower_bound(kind: LabelingKind, t: usize, vertices_h: usize, edges_h: usize) -> Result<u32> {
    if t == 0 {
        return Err(Error::InvalidParameter("member count t must be at least 1".into()));
    }
    let d = match kind {
        LabelingKind::Vertex => vertices_h,
        LabelingKind::Edge => edges_h,
        LabelingKind::Total => vertices_h + edges_h,
    };
    if d == 0 {
        return Err(Error::InvalidParameter(format!(
            "{kind} bound needs a nonzero element count in H"
        )));
    }
    to_u32(1 + ceil_div_pos(t as i64 - 1, d as i64))
}

/// Exponent of the `2^(|V(G)|-1)` (vertex) or `2^(|E(G)|-1)` (edge, total) upper bound.
pub fn upper_bound_exponent(kind: LabelingKind, host: &Graph) -> Result<u64> {
    let count = match kind {
        LabelingKind::Vertex => host.vertex_count(),
        LabelingKind::Edge | LabelingKind::Total => host.edge_count(),
    };
    if count == 0 {
        let what = if kind == LabelingKind::Vertex { "vertex" } else { "edge" };
        return Err(Error::InvalidParameter(format!(
            "{kind} upper bound needs a host with at least one {what}"
        )));
    }
    Ok(count as u64 - 1)
}

/// Both bounds for a host and a covering by `t` copies of `H`.
pub fn bound_report(
    kind: LabelingKind,
    host: &Graph,
    t: usize,
    vertices_h: usize,
    edges_h: usize,
) -> Result<BoundReport> {
    Ok(BoundReport {
        kind,
        lower: lower_bound(kind, t, vertices_h, edges_h)?,
        upper_exponent: upper_bound_exponent(kind, host)?,
    })
}

/// Strength of `P_m x P_n` under `P_m x P_c` windows: `1 + ceil((n - c) / D)`
/// with `D = mc`, `2mc - m - c` or `3mc - m - c`.
pub fn closed_form_strength(kind: LabelingKind, m: usize, n: usize, c: usize) -> Result<u32> {
    check_scope(m, c, n)?;
    let sizes = WindowSizes::new(m, c);
    let d = match kind {
        LabelingKind::Vertex => sizes.vertices,
        LabelingKind::Edge => sizes.edges,
        LabelingKind::Total => sizes.total(),
    };
    to_u32(1 + ceil_div_pos(n as i64 - c as i64, d))
}

/// Lower bound for the grid window covering, from the general formula with
/// `t = n - c + 1`, `|V(H)| = mc`, `|E(H)| = 2mc - m - c`.
pub fn grid_lower_bound(kind: LabelingKind, m: usize, n: usize, c: usize) -> Result<u32> {
    check_scope(m, c, n)?;
    lower_bound(kind, n - c + 1, m * c, 2 * m * c - m - c)
}
