//! Exhaustive search for the minimum budget admitting an H-irregular labeling.
//!
//! A member's weight depends only on the label sums of its elements, so the
//! elements are grouped into classes by the set of members containing them.
//! A class of `g` elements under budget `k` can realise exactly the sums
//! `g..=g*k`, and the search branches over class sums instead of individual
//! labels. Classes are visited so that members complete in order; a branch is
//! cut when a completed member repeats a weight, or when the weight ranges
//! still reachable by the open members cannot be made pairwise distinct.
//!
//! Every witness is expanded to a full labeling and passed through
//! [`verify_irregular`] before it is returned.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::arith::ceil_div_pos;
use crate::bounds::lower_bound;
use crate::construct::{labeled_elements, Element, Labeling, LabelingKind};
use crate::covering::{is_edge_covering, CoverFamily, Covering, Subgraph};
use crate::error::{Error, Result};
use crate::verify::verify_irregular;

/// Default cap on `log2` of the class-sum search space.
pub const DEFAULT_MAX_SPACE_LOG2: f64 = 38.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchOptions {
    /// Refuse instances whose raw class-sum space exceeds `2^max_space_log2`.
    pub max_space_log2: f64,
    /// Start at the general lower bound instead of `k = 1`.
    pub skip_below_lower_bound: bool,
    /// Cut branches whose open members cannot reach pairwise distinct
    /// weights. With this off, only repeated weights of completed members
    /// cut the search.
    pub prune_ranges: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            max_space_log2: DEFAULT_MAX_SPACE_LOG2,
            skip_below_lower_bound: true,
            prune_ranges: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    /// Smallest budget with a witness, or `None` if there is none up to `k_max`.
    pub minimal_k: Option<u32>,
    pub witness: Option<Labeling>,
    /// First budget actually searched.
    pub start_k: u32,
    pub k_max: u32,
    pub nodes_explored: u64,
}

/// Outcome of a single-budget search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Search {
    pub witness: Option<Labeling>,
    pub nodes_explored: u64,
}

fn member_size(kind: LabelingKind, h: &Subgraph) -> usize {
    let mut d = 0;
    if kind.labels_vertices() {
        d += h.vertices.len();
    }
    if kind.labels_edges() {
        d += h.edges.len();
    }
    d
}

/// Lower bound on the strength for this family. For families of equal-size
/// members this is the usual `1 + ceil((t-1)/|H|)`; otherwise it uses the
/// weight range `[min |H_l|, k * max |H_l|]`.
pub fn family_lower_bound(family: &CoverFamily, kind: LabelingKind) -> u32 {
    let t = family.len();
    let sizes: Vec<usize> = family.members().iter().map(|h| member_size(kind, h)).collect();
    let min_d = *sizes.iter().min().expect("families are nonempty");
    let max_d = *sizes.iter().max().expect("families are nonempty");
    if max_d == 0 {
        return 1;
    }
    if min_d == max_d {
        let h = &family.members()[0];
        if let Ok(lb) = lower_bound(kind, t, h.vertices.len(), h.edges.len()) {
            return lb;
        }
    }
    let k = ceil_div_pos((t - 1 + min_d) as i64, max_d as i64).max(1);
    u32::try_from(k).unwrap_or(u32::MAX)
}

struct Class {
    elements: Vec<Element>,
    members: Vec<usize>,
}

struct Plan {
    t: usize,
    classes: Vec<Class>,
    /// Members whose last class is `classes[idx]`.
    completes_after: Vec<Vec<usize>>,
    /// Members with no labeled elements; their weight is 0 from the start.
    empty_members: Vec<usize>,
    /// Labeled elements in no member; they get label 1.
    free: Vec<Element>,
    /// Labeled-element count per member.
    member_sizes: Vec<i64>,
}

impl Plan {
    fn new(family: &CoverFamily, kind: LabelingKind) -> Self {
        let t = family.len();
        let mut membership: BTreeMap<Element, Vec<usize>> = labeled_elements(family.host(), kind)
            .into_iter()
            .map(|el| (el, Vec::new()))
            .collect();
        for (l, h) in family.members().iter().enumerate() {
            if kind.labels_vertices() {
                for &v in &h.vertices {
                    membership.get_mut(&Element::Vertex(v)).expect("member ⊆ host").push(l);
                }
            }
            if kind.labels_edges() {
                for &e in &h.edges {
                    membership.get_mut(&Element::Edge(e)).expect("member ⊆ host").push(l);
                }
            }
        }

        let mut free = Vec::new();
        let mut by_members: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut classes: Vec<Class> = Vec::new();
        for (el, members) in membership {
            if members.is_empty() {
                free.push(el);
                continue;
            }
            match by_members.get(&members) {
                Some(&idx) => classes[idx].elements.push(el),
                None => {
                    by_members.insert(members.clone(), classes.len());
                    classes.push(Class {
                        elements: vec![el],
                        members,
                    });
                }
            }
        }
        // Stable sort keeps first-appearance (canonical) order as the last key.
        classes.sort_by_key(|c| (*c.members.last().unwrap(), c.members[0]));

        let mut last_class = vec![None; t];
        for (idx, class) in classes.iter().enumerate() {
            for &l in &class.members {
                last_class[l] = Some(idx);
            }
        }
        let mut completes_after = vec![Vec::new(); classes.len()];
        let mut empty_members = Vec::new();
        for (l, last) in last_class.into_iter().enumerate() {
            match last {
                Some(idx) => completes_after[idx].push(l),
                None => empty_members.push(l),
            }
        }
        let member_sizes = family.members().iter().map(|h| member_size(kind, h) as i64).collect();
        Self {
            t,
            classes,
            completes_after,
            empty_members,
            free,
            member_sizes,
        }
    }

    fn space_log2(&self, k: u32) -> f64 {
        self.classes
            .iter()
            .map(|c| ((c.elements.len() as f64) * f64::from(k - 1) + 1.0).log2())
            .sum()
    }
}

struct Dfs<'a> {
    plan: &'a Plan,
    k: i64,
    weights: Vec<i64>,
    /// Labeled elements of each member not yet assigned.
    remaining: Vec<i64>,
    complete: Vec<bool>,
    used: BTreeSet<i64>,
    sums: Vec<i64>,
    nodes: u64,
    prune_ranges: bool,
}

impl<'a> Dfs<'a> {
    fn new(plan: &'a Plan, k: u32, prune_ranges: bool) -> Self {
        Self {
            plan,
            k: i64::from(k),
            weights: vec![0; plan.t],
            remaining: plan.member_sizes.clone(),
            complete: vec![false; plan.t],
            used: BTreeSet::new(),
            sums: vec![0; plan.classes.len()],
            nodes: 0,
            prune_ranges,
        }
    }

    /// Complete members must have distinct weights, and there must be a
    /// system of distinct values for the open members inside their reachable
    /// ranges that avoids the used weights (greedy earliest-deadline matching).
    fn open_members_feasible(&self) -> bool {
        if !self.prune_ranges {
            return true;
        }
        let mut ranges: Vec<(i64, i64)> = (0..self.plan.t)
            .filter(|&l| !self.complete[l])
            .map(|l| {
                let w = self.weights[l];
                let r = self.remaining[l];
                (w + r, w + r * self.k)
            })
            .collect();
        ranges.sort_by_key(|&(lo, hi)| (hi, lo));
        let mut taken: BTreeSet<i64> = BTreeSet::new();
        for (lo, hi) in ranges {
            let mut x = lo;
            while self.used.contains(&x) || taken.contains(&x) {
                x += 1;
            }
            if x > hi {
                return false;
            }
            taken.insert(x);
        }
        true
    }

    fn run(&mut self, idx: usize) -> bool {
        if idx == self.plan.classes.len() {
            return true;
        }
        let class = &self.plan.classes[idx];
        let g = class.elements.len() as i64;
        for s in g..=g * self.k {
            self.nodes += 1;
            for &l in &class.members {
                self.weights[l] += s;
                self.remaining[l] -= g;
            }
            let mut inserted = Vec::new();
            let mut ok = true;
            for &l in &self.plan.completes_after[idx] {
                self.complete[l] = true;
                if self.used.insert(self.weights[l]) {
                    inserted.push(self.weights[l]);
                } else {
                    ok = false;
                }
            }
            if ok && self.open_members_feasible() {
                self.sums[idx] = s;
                if self.run(idx + 1) {
                    return true;
                }
            }
            for w in inserted {
                self.used.remove(&w);
            }
            for &l in &self.plan.completes_after[idx] {
                self.complete[l] = false;
            }
            for &l in &class.members {
                self.weights[l] -= s;
                self.remaining[l] += g;
            }
        }
        false
    }

    fn search(&mut self) -> bool {
        for &l in &self.plan.empty_members {
            self.complete[l] = true;
            if !self.used.insert(0) {
                return false;
            }
        }
        self.open_members_feasible() && self.run(0)
    }
}

/// Lexicographically smallest labels in `1..=k` over `count` slots summing to `sum`.
fn fill_class(count: usize, sum: i64, k: i64) -> Vec<i64> {
    let mut rest = sum;
    (0..count)
        .map(|pos| {
            let after = (count - pos - 1) as i64;
            let label = (rest - after * k).max(1);
            rest -= label;
            label
        })
        .collect()
}

fn check_family(family: &CoverFamily) -> Result<()> {
    match is_edge_covering(family) {
        Covering::Covered => Ok(()),
        Covering::Uncovered(missing) => Err(Error::MalformedFamily(format!(
            "family does not cover the host: edge {} lies in no member",
            missing[0]
        ))),
    }
}

fn search_at(plan: &Plan, family: &CoverFamily, kind: LabelingKind, k: u32, limits: &SearchOptions) -> Result<Search> {
    let space = plan.space_log2(k);
    if space > limits.max_space_log2 {
        return Err(Error::ResourceLimit(format!(
            "{kind} search at k={k} spans 2^{space:.1} class assignments, cap is 2^{:.1}",
            limits.max_space_log2
        )));
    }
    let mut dfs = Dfs::new(plan, k, limits.prune_ranges);
    let found = dfs.search();
    let nodes_explored = dfs.nodes;
    if !found {
        return Ok(Search {
            witness: None,
            nodes_explored,
        });
    }

    let mut labels = BTreeMap::new();
    for (class, &sum) in plan.classes.iter().zip(&dfs.sums) {
        let fill = fill_class(class.elements.len(), sum, i64::from(k));
        labels.extend(class.elements.iter().copied().zip(fill));
    }
    labels.extend(plan.free.iter().map(|&el| (el, 1)));
    let witness = Labeling::new(kind, k, labels)?;
    let verdict = verify_irregular(&witness, family)?;
    if !verdict.is_accepted() {
        return Err(Error::Internal(format!(
            "search produced a witness the verifier rejects: {}",
            verdict.violation().map(ToString::to_string).unwrap_or_default()
        )));
    }
    Ok(Search {
        witness: Some(witness),
        nodes_explored,
    })
}

/// Searches for an H-irregular labeling of `kind` with labels in `1..=k`.
/// `Ok(None)` in `witness` is a proof that none exists.
pub fn exists_irregular(family: &CoverFamily, kind: LabelingKind, k: u32, limits: &SearchOptions) -> Result<Search> {
    if k == 0 {
        return Err(Error::InvalidParameter("budget k must be at least 1".into()));
    }
    check_family(family)?;
    let plan = Plan::new(family, kind);
    search_at(&plan, family, kind, k, limits)
}

/// Smallest `k <= k_max` admitting an H-irregular labeling of `kind`.
pub fn min_strength(
    family: &CoverFamily,
    kind: LabelingKind,
    k_max: u32,
    limits: &SearchOptions,
) -> Result<SearchResult> {
    if k_max == 0 {
        return Err(Error::InvalidParameter("k_max must be at least 1".into()));
    }
    check_family(family)?;
    let plan = Plan::new(family, kind);
    let start_k = if limits.skip_below_lower_bound {
        family_lower_bound(family, kind)
    } else {
        1
    };
    let mut nodes_explored = 0;
    for k in start_k..=k_max {
        let found = search_at(&plan, family, kind, k, limits)?;
        nodes_explored += found.nodes_explored;
        if let Some(witness) = found.witness {
            return Ok(SearchResult {
                minimal_k: Some(k),
                witness: Some(witness),
                start_k,
                k_max,
                nodes_explored,
            });
        }
    }
    Ok(SearchResult {
        minimal_k: None,
        witness: None,
        start_k,
        k_max,
        nodes_explored,
    })
}
