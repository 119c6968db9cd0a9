//! Defining graphs of graph products: vertices with their vertex groups,
//! opposite graphs, components and cliques.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Deserialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::series::json::{series_from_json, series_to_json};
use crate::Series;

/// Vertex sets are stored as bitmasks.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("malformed graph description: {0}")]
    Parse(String),
    #[error("duplicate vertex {0:?}")]
    DuplicateVertex(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("loop edge at {0:?}")]
    LoopEdge(String),
    #[error("edge {0:?}-{1:?} listed more than once")]
    MultiEdge(String, String),
    #[error("bad vertex group for {vertex:?}: {reason}")]
    BadVertexGroup { vertex: String, reason: String },
    #[error("at most {MAX_VERTICES} vertices are supported")]
    TooManyVertices,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum VertexGroupSpec {
    #[default]
    InfiniteCyclic,
    /// Cyclic group of the given order (at least 2), one symmetric generator.
    FiniteCyclic(u64),
    /// Any group given only through its spherical growth series.
    Explicit(Series),
}

impl VertexGroupSpec {
    /// `true` when elements of this group can be written as letters.
    pub fn is_cyclic(&self) -> bool {
        !matches!(self, Self::Explicit(_))
    }

    pub(crate) fn check(&self) -> Result<(), String> {
        match self {
            Self::InfiniteCyclic => Ok(()),
            Self::FiniteCyclic(m) if *m >= 2 => Ok(()),
            Self::FiniteCyclic(m) => Err(format!("cyclic order {m} must be at least 2")),
            Self::Explicit(s) => {
                if s.constant_term() != num_rational::BigRational::from_integer(1.into()) {
                    return Err("explicit series must have constant term 1".into());
                }
                let coeffs = crate::series::expand_fraction(s.num(), s.den(), 16).map_err(|e| e.to_string())?;
                if coeffs.iter().any(|c| !c.is_integer() || c < &num_rational::BigRational::from_integer(0.into())) {
                    return Err("explicit series must have nonnegative integer coefficients".into());
                }
                Ok(())
            }
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Self::InfiniteCyclic => json!("Z"),
            Self::FiniteCyclic(m) => json!({ "finite_cyclic": m }),
            Self::Explicit(s) => json!({ "series": series_to_json(s) }),
        }
    }
}

/// A complete subgraph, vertices ascending in graph order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Clique {
    vertices: Vec<usize>,
}

impl Clique {
    pub fn new(graph: &DefiningGraph, mut vertices: Vec<usize>) -> Result<Self, GraphError> {
        vertices.sort_unstable();
        vertices.dedup();
        for &v in &vertices {
            if v >= graph.len() {
                return Err(GraphError::UnknownVertex(format!("#{v}")));
            }
        }
        for (i, &u) in vertices.iter().enumerate() {
            for &w in &vertices[i + 1..] {
                if !graph.adjacent(u, w) {
                    return Err(GraphError::Parse(format!(
                        "{} and {} are not adjacent",
                        graph.name(u),
                        graph.name(w)
                    )));
                }
            }
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct DefiningGraph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    /// `adj[v]` has bit `u` set iff `uv` is an edge.
    adj: Vec<u64>,
    groups: Vec<VertexGroupSpec>,
}

impl DefiningGraph {
    pub fn new<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        edges: &[(usize, usize)],
        groups: Vec<VertexGroupSpec>,
    ) -> Result<Self, GraphError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_VERTICES {
            return Err(GraphError::TooManyVertices);
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.clone(), i).is_some() {
                return Err(GraphError::DuplicateVertex(n.clone()));
            }
        }
        let groups = if groups.is_empty() {
            vec![VertexGroupSpec::InfiniteCyclic; names.len()]
        } else {
            groups
        };
        if groups.len() != names.len() {
            return Err(GraphError::Parse("one vertex group per vertex".into()));
        }
        let mut adj = vec![0u64; names.len()];
        for &(u, v) in edges {
            let name = |i: usize| names.get(i).cloned().unwrap_or_else(|| format!("#{i}"));
            if u >= names.len() {
                return Err(GraphError::UnknownVertex(name(u)));
            }
            if v >= names.len() {
                return Err(GraphError::UnknownVertex(name(v)));
            }
            if u == v {
                return Err(GraphError::LoopEdge(name(u)));
            }
            if adj[u] >> v & 1 == 1 {
                return Err(GraphError::MultiEdge(name(u), name(v)));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        for (name, g) in names.iter().zip(&groups) {
            g.check().map_err(|reason| GraphError::BadVertexGroup {
                vertex: name.clone(),
                reason,
            })?;
        }
        Ok(Self {
            names,
            index,
            adj,
            groups,
        })
    }

    /// Right-angled Artin group on the given graph (every vertex group infinite cyclic).
    pub fn raag<S: Into<String>>(names: impl IntoIterator<Item = S>, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::new(names, edges, Vec::new())
    }

    /// Parse the JSON graph description.
    pub fn from_json_str(text: &str) -> Result<Self, GraphError> {
        let file: GraphFile = serde_json::from_str(text).map_err(|e| GraphError::Parse(e.to_string()))?;
        let lookup = |n: &str, index: &HashMap<&str, usize>| {
            index.get(n).copied().ok_or_else(|| GraphError::UnknownVertex(n.to_string()))
        };
        let mut index = HashMap::new();
        for (i, n) in file.vertices.iter().enumerate() {
            if index.insert(n.as_str(), i).is_some() {
                return Err(GraphError::DuplicateVertex(n.clone()));
            }
        }
        let edges = file
            .edges
            .iter()
            .map(|[a, b]| Ok((lookup(a, &index)?, lookup(b, &index)?)))
            .collect::<Result<Vec<_>, GraphError>>()?;
        let mut groups = vec![VertexGroupSpec::InfiniteCyclic; file.vertices.len()];
        for (name, spec) in &file.vertex_groups {
            let i = lookup(name, &index)?;
            groups[i] = spec.to_spec(name)?;
        }
        Self::new(file.vertices, &edges, groups)
    }

    pub fn to_json(&self) -> Value {
        let edges: Vec<Value> = self
            .edges()
            .into_iter()
            .map(|(u, v)| json!([self.names[u], self.names[v]]))
            .collect();
        let groups: serde_json::Map<String, Value> = self
            .names
            .iter()
            .zip(&self.groups)
            .filter(|(_, g)| **g != VertexGroupSpec::InfiniteCyclic)
            .map(|(n, g)| (n.clone(), g.to_json()))
            .collect();
        let mut out = json!({ "vertices": self.names, "edges": edges });
        if !groups.is_empty() {
            out["vertex_groups"] = Value::Object(groups);
        }
        out
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex(&self, name: &str) -> Result<usize, GraphError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| GraphError::UnknownVertex(name.to_string()))
    }

    pub fn group(&self, v: usize) -> &VertexGroupSpec {
        &self.groups[v]
    }

    pub fn groups(&self) -> &[VertexGroupSpec] {
        &self.groups
    }

    pub fn is_raag(&self) -> bool {
        self.groups.iter().all(|g| *g == VertexGroupSpec::InfiniteCyclic)
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Neighbors of `v`, ascending.
    pub fn link(&self, v: usize) -> Vec<usize> {
        (0..self.len()).filter(|&u| self.adjacent(v, u)).collect()
    }

    /// Edges `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.adjacent(u, v))
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        self.edges().len() == self.len() * self.len().saturating_sub(1) / 2
    }

    /// Same vertices and vertex groups, complementary edge set.
    pub fn opposite(&self) -> Self {
        let n = self.len();
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let adj = (0..n).map(|v| !self.adj[v] & full & !(1u64 << v)).collect();
        Self {
            names: self.names.clone(),
            index: self.index.clone(),
            adj,
            groups: self.groups.clone(),
        }
    }

    /// Induced subgraph on `vertices`, keeping the original relative order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut vs = vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        let edges: Vec<(usize, usize)> = (0..vs.len())
            .flat_map(|i| (i + 1..vs.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| self.adjacent(vs[i], vs[j]))
            .collect();
        Self::new(
            vs.iter().map(|&v| self.names[v].clone()),
            &edges,
            vs.iter().map(|&v| self.groups[v].clone()).collect(),
        )
        .expect("induced subgraph of a valid graph is valid")
    }

    /// Vertex sets of the connected components, ordered by least vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let new = self.adj[v] & !comp;
                comp |= new;
                frontier |= new;
            }
            seen |= comp;
            out.push(bits(comp));
        }
        out
    }

    /// Every complete subgraph exactly once, the empty one included; by size, then lexicographic.
    pub fn cliques(&self) -> Vec<Clique> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        let all = if self.len() == 64 { u64::MAX } else { (1u64 << self.len()) - 1 };
        self.extend_cliques(&mut current, all, &mut out);
        out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.vertices.cmp(&b.vertices)));
        out
    }

    fn extend_cliques(&self, current: &mut Vec<usize>, candidates: u64, out: &mut Vec<Clique>) {
        out.push(Clique {
            vertices: current.clone(),
        });
        // only extend by vertices after the last one, so each set is produced once
        let mut c = candidates;
        while c != 0 {
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            current.push(v);
            let next = candidates & self.adj[v] & !((2u64 << v).wrapping_sub(1));
            self.extend_cliques(current, next, out);
            current.pop();
        }
    }

    /// Number of cliques of each size, starting with the empty clique.
    pub fn clique_polynomial(&self) -> Vec<u64> {
        let mut counts = Vec::new();
        for c in self.cliques() {
            if counts.len() <= c.size() {
                counts.resize(c.size() + 1, 0);
            }
            counts[c.size()] += 1;
        }
        counts
    }
}

fn bits(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

pub fn load_graph(text: &str) -> Result<DefiningGraph, GraphError> {
    DefiningGraph::from_json_str(text)
}

pub fn opposite_graph(g: &DefiningGraph) -> DefiningGraph {
    g.opposite()
}

pub fn connected_components(g: &DefiningGraph) -> Vec<Vec<usize>> {
    g.connected_components()
}

pub fn enumerate_cliques(g: &DefiningGraph) -> Vec<Clique> {
    g.cliques()
}

impl fmt::Debug for DefiningGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(u, v)| format!("{}-{}", self.names[u], self.names[v]))
            .collect();
        f.debug_struct("DefiningGraph")
            .field("vertices", &self.names)
            .field("edges", &edges)
            .field("groups", &self.groups)
            .finish()
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    vertices: Vec<String>,
    #[serde(default)]
    edges: Vec<[String; 2]>,
    #[serde(default)]
    vertex_groups: BTreeMap<String, GroupFile>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum GroupFile {
    Named(String),
    Object(serde_json::Map<String, Value>),
}

impl GroupFile {
    fn to_spec(&self, vertex: &str) -> Result<VertexGroupSpec, GraphError> {
        let bad = |reason: String| GraphError::BadVertexGroup {
            vertex: vertex.to_string(),
            reason,
        };
        match self {
            Self::Named(s) if s == "Z" => Ok(VertexGroupSpec::InfiniteCyclic),
            Self::Named(s) => Err(bad(format!("unknown group name {s:?}"))),
            Self::Object(map) if map.len() == 1 => {
                if let Some(m) = map.get("finite_cyclic") {
                    let m = m.as_u64().ok_or_else(|| bad("finite_cyclic must be an integer".into()))?;
                    Ok(VertexGroupSpec::FiniteCyclic(m))
                } else if let Some(s) = map.get("series") {
                    let s = series_from_json(s).map_err(|e| bad(e.to_string()))?;
                    Ok(VertexGroupSpec::Explicit(s))
                } else {
                    Err(bad("expected \"finite_cyclic\" or \"series\"".into()))
                }
            }
            Self::Object(_) => Err(bad("expected a single key".into())),
        }
    }
}
