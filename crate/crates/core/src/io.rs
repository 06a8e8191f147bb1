//! File formats: labeling and family JSON, grid JSON, DOT export.
//!
//! Labeling file:
//!
//! ```json
//! {"kind": "vertex", "k": 2, "m": 2, "n": 3,
//!  "labels": [{"element": {"v": [1, 1]}, "label": 1},
//!             {"element": {"e": [[1, 1], [1, 2]]}, "label": 1}]}
//! ```
//!
//! Family file:
//!
//! ```json
//! {"host": {"grid": [2, 3]},
//!  "members": [{"vertices": [[1, 1], [2, 1]], "edges": [[[1, 1], [2, 1]]]}]}
//! ```
//!
//! A general host lists `"vertices"` and `"edges"` instead of `"grid"`; its
//! vertices use the single-row convention `[1, ordinal]`. Edges are always
//! written with endpoints in canonical (row-major) order.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::construct::{Element, Labeling, LabelingKind};
use crate::covering::{CoverFamily, Subgraph};
use crate::error::{Error, Result};
use crate::grid::{EdgeId, Graph, VertexId};

type VertexRepr = [usize; 2];
type EdgeRepr = [VertexRepr; 2];

fn vertex_repr(v: VertexId) -> VertexRepr {
    [v.i, v.j]
}

fn edge_repr(e: EdgeId) -> EdgeRepr {
    [vertex_repr(e.a()), vertex_repr(e.b())]
}

fn parse_vertex([i, j]: VertexRepr) -> Result<VertexId> {
    if i == 0 || j == 0 {
        return Err(Error::Format(format!("vertex indices are 1-based, got [{i}, {j}]")));
    }
    Ok(VertexId::new(i, j))
}

fn parse_edge([a, b]: EdgeRepr) -> Result<EdgeId> {
    EdgeId::new(parse_vertex(a)?, parse_vertex(b)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum ElementRepr {
    V(VertexRepr),
    E(EdgeRepr),
}

impl From<Element> for ElementRepr {
    fn from(el: Element) -> Self {
        match el {
            Element::Vertex(v) => ElementRepr::V(vertex_repr(v)),
            Element::Edge(e) => ElementRepr::E(edge_repr(e)),
        }
    }
}

impl TryFrom<&ElementRepr> for Element {
    type Error = Error;

    fn try_from(r: &ElementRepr) -> Result<Self> {
        Ok(match *r {
            ElementRepr::V(v) => Element::Vertex(parse_vertex(v)?),
            ElementRepr::E(e) => Element::Edge(parse_edge(e)?),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabelEntry {
    pub element: ElementRepr,
    pub label: i64,
}

/// On-disk labeling. `m` and `n` give the host extent: the largest row and
/// column index among the labeled elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabelingFile {
    pub kind: LabelingKind,
    pub k: u32,
    pub m: usize,
    pub n: usize,
    pub labels: Vec<LabelEntry>,
}

fn extent(lab: &Labeling) -> (usize, usize) {
    let mut m = 0;
    let mut n = 0;
    for el in lab.labels().keys() {
        let vs = match el {
            Element::Vertex(v) => [*v, *v],
            Element::Edge(e) => [e.a(), e.b()],
        };
        for v in vs {
            m = m.max(v.i);
            n = n.max(v.j);
        }
    }
    (m, n)
}

impl LabelingFile {
    pub fn from_labeling(lab: &Labeling) -> Self {
        let (m, n) = extent(lab);
        Self {
            kind: lab.kind(),
            k: lab.k(),
            m,
            n,
            labels: lab
                .labels()
                .iter()
                .map(|(&el, &label)| LabelEntry {
                    element: el.into(),
                    label,
                })
                .collect(),
        }
    }

    pub fn to_labeling(&self) -> Result<Labeling> {
        let mut labels = BTreeMap::new();
        for entry in &self.labels {
            let el = Element::try_from(&entry.element)?;
            if labels.insert(el, entry.label).is_some() {
                return Err(Error::Format(format!("{el} is labeled twice")));
            }
        }
        let lab = Labeling::new(self.kind, self.k, labels)?;
        if extent(&lab) != (self.m, self.n) && !lab.labels().is_empty() {
            return Err(Error::Format(format!(
                "declared extent m={}, n={} does not match the labeled elements",
                self.m, self.n
            )));
        }
        Ok(lab)
    }
}

pub fn labeling_to_json(lab: &Labeling) -> String {
    serde_json::to_string_pretty(&LabelingFile::from_labeling(lab)).expect("labeling serializes")
}

pub fn labeling_from_json(text: &str) -> Result<Labeling> {
    serde_json::from_str::<LabelingFile>(text)?.to_labeling()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HostRepr {
    Grid {
        grid: [usize; 2],
    },
    General {
        vertices: Vec<VertexRepr>,
        edges: Vec<EdgeRepr>,
    },
}

impl HostRepr {
    pub fn from_graph(g: &Graph) -> Self {
        match g.grid_spec() {
            Some(spec) => HostRepr::Grid { grid: [spec.m, spec.n] },
            None => HostRepr::General {
                vertices: g.vertices().iter().map(|&v| vertex_repr(v)).collect(),
                edges: g.edges().iter().map(|&e| edge_repr(e)).collect(),
            },
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        match self {
            HostRepr::Grid { grid: [m, n] } => Graph::grid(*m, *n),
            HostRepr::General { vertices, edges } => {
                let vs = vertices.iter().map(|&v| parse_vertex(v)).collect::<Result<Vec<_>>>()?;
                let es = edges.iter().map(|&e| parse_edge(e)).collect::<Result<Vec<_>>>()?;
                Graph::new(vs, es)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MemberRepr {
    pub vertices: Vec<VertexRepr>,
    pub edges: Vec<EdgeRepr>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyFile {
    pub host: HostRepr,
    pub members: Vec<MemberRepr>,
}

impl FamilyFile {
    pub fn from_family(fam: &CoverFamily) -> Self {
        Self {
            host: HostRepr::from_graph(fam.host()),
            members: fam
                .members()
                .iter()
                .map(|h| MemberRepr {
                    vertices: h.vertices.iter().map(|&v| vertex_repr(v)).collect(),
                    edges: h.edges.iter().map(|&e| edge_repr(e)).collect(),
                })
                .collect(),
        }
    }

    pub fn to_family(&self) -> Result<CoverFamily> {
        let host = self.host.to_graph()?;
        let members = self
            .members
            .iter()
            .map(|m| {
                let vs = m
                    .vertices
                    .iter()
                    .map(|&v| parse_vertex(v))
                    .collect::<Result<Vec<_>>>()?;
                let es = m.edges.iter().map(|&e| parse_edge(e)).collect::<Result<Vec<_>>>()?;
                Ok(Subgraph::new(vs, es))
            })
            .collect::<Result<Vec<_>>>()?;
        CoverFamily::new(host, members)
    }
}

pub fn family_to_json(fam: &CoverFamily) -> String {
    serde_json::to_string_pretty(&FamilyFile::from_family(fam)).expect("family serializes")
}

pub fn family_from_json(text: &str) -> Result<CoverFamily> {
    serde_json::from_str::<FamilyFile>(text)?.to_family()
}

#[derive(Serialize)]
struct GraphFile {
    m: Option<usize>,
    n: Option<usize>,
    vertices: Vec<VertexRepr>,
    edges: Vec<EdgeRepr>,
}

/// Canonical JSON listing of a graph's vertices and edges.
pub fn graph_to_json(g: &Graph) -> String {
    let spec = g.grid_spec();
    let file = GraphFile {
        m: spec.map(|s| s.m),
        n: spec.map(|s| s.n),
        vertices: g.vertices().iter().map(|&v| vertex_repr(v)).collect(),
        edges: g.edges().iter().map(|&e| edge_repr(e)).collect(),
    };
    serde_json::to_string_pretty(&file).expect("graph serializes")
}

fn node_name(v: VertexId) -> String {
    format!("u_{}_{}", v.i, v.j)
}

/// Graphviz export. Labels become `label` attributes; window membership, if
/// given as a family, is written as comments.
pub fn to_dot(g: &Graph, labeling: Option<&Labeling>, family: Option<&CoverFamily>) -> String {
    let name = match g.grid_spec() {
        Some(s) => format!("grid_{}x{}", s.m, s.n),
        None => "host".to_string(),
    };
    let mut out = String::new();
    writeln!(out, "graph {name} {{").unwrap();
    if let Some(lab) = labeling {
        writeln!(out, "  // {} labeling, k = {}", lab.kind(), lab.k()).unwrap();
    }
    if let Some(fam) = family {
        for (idx, h) in fam.members().iter().enumerate() {
            match h.column_span() {
                Some((lo, hi)) => writeln!(
                    out,
                    "  // member {}: columns {lo}..{hi}, {} vertices, {} edges",
                    idx + 1,
                    h.vertices.len(),
                    h.edges.len()
                ),
                None => writeln!(out, "  // member {}: empty", idx + 1),
            }
            .unwrap();
        }
    }
    for &v in g.vertices() {
        match labeling.and_then(|l| l.vertex_label(v)) {
            Some(label) => writeln!(out, "  {} [label=\"{label}\"];", node_name(v)),
            None => writeln!(out, "  {};", node_name(v)),
        }
        .unwrap();
    }
    for &e in g.edges() {
        let (a, b) = (node_name(e.a()), node_name(e.b()));
        match labeling.and_then(|l| l.edge_label(e)) {
            Some(label) => writeln!(out, "  {a} -- {b} [label=\"{label}\"];"),
            None => writeln!(out, "  {a} -- {b};"),
        }
        .unwrap();
    }
    out.push_str("}\n");
    out
}
