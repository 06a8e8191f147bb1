//! Subgraph weights and the H-irregularity check.

use std::collections::HashMap;
use std::fmt;

use crate::construct::{Element, Labeling};
use crate::covering::{is_edge_covering, CoverFamily, Covering, Subgraph};
use crate::error::{Error, Result};

/// Member weights `w(H_1), ..., w(H_t)` in family order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightProfile {
    pub weights: Vec<i64>,
}

impl WeightProfile {
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// True when the weights are exactly `base, base+1, ..., base+t-1`.
    pub fn is_consecutive_from(&self, base: i64) -> bool {
        self.weights.iter().zip(base..).all(|(&w, expected)| w == expected)
    }

    /// First pair of 1-based member indices with equal weight, smallest
    /// `(l1, l2)` lexicographically.
    pub fn first_collision(&self) -> Option<(usize, usize)> {
        let mut next_same: HashMap<i64, usize> = HashMap::new();
        let mut best: Option<(usize, usize)> = None;
        // Walking backwards leaves, for each index, the nearest later index
        // with the same weight; the first index (in forward order) that has
        // one gives the lexicographically smallest pair.
        for (idx, w) in self.weights.iter().enumerate().rev() {
            if let Some(&later) = next_same.get(w) {
                best = Some((idx + 1, later + 1));
            }
            next_same.insert(*w, idx);
        }
        best
    }
}

/// Why a labeling is not H-irregular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// A label outside `1..=k`.
    Range { element: Element, label: i64, k: u32 },
    /// Members `first < second` (1-based) share a weight.
    Collision { first: usize, second: usize, weight: i64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Range { element, label, k } => {
                write!(f, "range violation: {element} has label {label}, outside 1..={k}")
            }
            Violation::Collision { first, second, weight } => {
                write!(f, "collision: members {first} and {second} both weigh {weight}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Accepted,
    Rejected(Violation),
}

impl Verdict {
    pub fn is_accepted(&self) -> bool {
        matches!(self, Verdict::Accepted)
    }

    pub fn violation(&self) -> Option<&Violation> {
        match self {
            Verdict::Accepted => None,
            Verdict::Rejected(v) => Some(v),
        }
    }
}

fn add(acc: i64, label: i64) -> Result<i64> {
    acc.checked_add(label).ok_or(Error::WeightOverflow)
}

/// Sum of labels over the member's vertices, edges, or both, according to
/// the labeling's kind.
pub fn subgraph_weight(labeling: &Labeling, member: &Subgraph) -> Result<i64> {
    let kind = labeling.kind();
    let mut total = 0i64;
    if kind.labels_vertices() {
        for &v in &member.vertices {
            let label = labeling.vertex_label(v).ok_or_else(|| Error::missing_vertex(v))?;
            total = add(total, label)?;
        }
    }
    if kind.labels_edges() {
        for &e in &member.edges {
            let label = labeling.edge_label(e).ok_or_else(|| Error::missing_edge(e))?;
            total = add(total, label)?;
        }
    }
    Ok(total)
}

pub fn weight_profile(labeling: &Labeling, family: &CoverFamily) -> Result<WeightProfile> {
    let weights = family
        .members()
        .iter()
        .map(|h| subgraph_weight(labeling, h))
        .collect::<Result<_>>()?;
    Ok(WeightProfile { weights })
}

/// Accepts iff every label lies in `1..=k` and all member weights are
/// pairwise distinct. Range violations are reported before collisions; the
/// first range violation is the smallest element in canonical order.
///
/// The family must edge-cover its host, and the labeling must label exactly
/// the elements its kind requires on the host.
pub fn verify_irregular(labeling: &Labeling, family: &CoverFamily) -> Result<Verdict> {
    if let Covering::Uncovered(missing) = is_edge_covering(family) {
        return Err(Error::MalformedFamily(format!(
            "family does not cover the host: edge {} lies in no member ({} uncovered)",
            missing[0],
            missing.len()
        )));
    }
    labeling.check_domain(family.host())?;

    let k = labeling.k();
    if let Some((&element, &label)) = labeling
        .labels()
        .iter()
        .find(|(_, &l)| !(1..=i64::from(k)).contains(&l))
    {
        return Ok(Verdict::Rejected(Violation::Range { element, label, k }));
    }

    let profile = weight_profile(labeling, family)?;
    Ok(match profile.first_collision() {
        Some((first, second)) => Verdict::Rejected(Violation::Collision {
            first,
            second,
            weight: profile.weights[first - 1],
        }),
        None => Verdict::Accepted,
    })
}
