//! Immutable simple-graph values and the graph algebra used by the
//! constructions: complement, join, disjoint union, Cartesian product,
//! pendant attachment, components and regularity checks.
//!
//! Vertices are positional ids `0..n`. Every operation returns a fresh
//! graph; a constructed [`Graph`] is never mutated, so values are safe to
//! share across threads.

use std::collections::BTreeSet;
use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge ({u},{v}) is a self-loop")]
    SelfLoop { u: u32, v: u32 },
    #[error("edge ({u},{v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: u32, v: u32, n: usize },
    #[error("vertex {v} outside 0..{n}")]
    VertexOutOfRange { v: u32, n: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("missing header line \"n m\"")]
    MissingHeader,
    #[error("malformed header line {0:?}: expected \"n m\"")]
    MalformedHeader(String),
    #[error("malformed edge line {0:?}: expected \"u v\"")]
    MalformedEdge(String),
    #[error("expected {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A simple undirected graph on vertices `0..n` with a canonical edge set.
///
/// Equality is order-independent: two graphs compare equal iff they have the
/// same order and the same edge set. Adjacency lists are derived at
/// construction and kept sorted.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(u32, u32)>,
    adj: Vec<Vec<u32>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from an edge iterator. Pairs may come in any order and
    /// orientation; duplicates collapse. Self-loops and out-of-range
    /// endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop { u, v });
            }
            if u as usize >= n || v as usize >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            set.insert((u.min(v), u.max(v)));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &set {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges: set, adj })
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        u != v && self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Sorted open neighborhood of `v`.
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Degrees indexed by vertex id.
    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Canonical edge iterator: pairs `(u,v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.edges.iter().copied()
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.adj.iter().all(|list| list.len() == k)
    }

    /// New graph on the same vertices with the complementary edge set.
    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n as u32 {
            for v in u + 1..self.n as u32 {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(self.n, edges).expect("complement edges are in range")
    }

    /// Join: both graphs side by side (`other` shifted by `self.n`) plus all
    /// cross edges.
    pub fn join(&self, other: &Graph) -> Graph {
        let shift = self.n as u32;
        let n = self.n + other.n;
        let mut edges: Vec<(u32, u32)> = self.edges().collect();
        edges.extend(other.edges().map(|(u, v)| (u + shift, v + shift)));
        for u in 0..shift {
            for v in 0..other.n as u32 {
                edges.push((u, v + shift));
            }
        }
        Graph::new(n, edges).expect("join edges are in range")
    }

    /// Disjoint union with `other`'s vertices shifted by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n as u32;
        let n = self.n + other.n;
        let mut edges: Vec<(u32, u32)> = self.edges().collect();
        edges.extend(other.edges().map(|(u, v)| (u + shift, v + shift)));
        Graph::new(n, edges).expect("union edges are in range")
    }

    /// Cartesian product. Vertex `(a,b)` flattens row-major to
    /// `a * other.n + b`; `(a,b) ~ (a',b')` iff `a = a'` and `b ~ b'`, or
    /// `b = b'` and `a ~ a'`.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let nh = other.n as u32;
        let n = self.n * other.n;
        let mut edges = Vec::new();
        for a in 0..self.n as u32 {
            for (b, c) in other.edges() {
                edges.push((a * nh + b, a * nh + c));
            }
        }
        for (a, c) in self.edges() {
            for b in 0..nh {
                edges.push((a * nh + b, c * nh + b));
            }
        }
        Graph::new(n, edges).expect("product edges are in range")
    }

    /// Adds a fresh vertex of degree one attached to `v`; returns the new
    /// graph and the id of the pendant (always the old order).
    pub fn attach_pendant(&self, v: u32) -> Result<(Graph, u32), GraphError> {
        if v as usize >= self.n {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        let new = self.n as u32;
        let mut edges: Vec<(u32, u32)> = self.edges().collect();
        edges.push((v, new));
        Ok((Graph::new(self.n + 1, edges)?, new))
    }

    /// Connected components as sorted vertex sets, ordered by minimum
    /// element.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([start as u32]);
            seen[start] = true;
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in self.neighbors(u) {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(VertexSet::from_sorted(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Proper 2-coloring (colors 0/1) if the graph is bipartite.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = VecDeque::from([start as u32]);
            while let Some(u) = queue.pop_front() {
                for &w in self.neighbors(u) {
                    if color[w as usize] == u8::MAX {
                        color[w as usize] = 1 - color[u as usize];
                        queue.push_back(w);
                    } else if color[w as usize] == color[u as usize] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Subgraph induced by `verts` (which must be sorted and in range).
    /// Vertex `i` of the result corresponds to `verts[i]`.
    pub fn induced(&self, verts: &[u32]) -> Graph {
        let pos = |v: u32| verts.binary_search(&v).ok();
        let mut edges = Vec::new();
        for (i, &v) in verts.iter().enumerate() {
            for &w in self.neighbors(v) {
                if w > v {
                    if let Some(j) = pos(w) {
                        edges.push((i as u32, j as u32));
                    }
                }
            }
        }
        Graph::new(verts.len(), edges).expect("induced edges are in range")
    }

    /// Parses the edge-list text format: a header line `n m` followed by
    /// `m` lines `u v` (0-based ids). Blank lines and lines starting with
    /// `#` are skipped.
    pub fn from_edge_list_text(text: &str) -> Result<Graph, EdgeListError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or(EdgeListError::MissingHeader)?;
        let mut it = header.split_whitespace();
        let (n, m) = match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => match (a.parse::<usize>(), b.parse::<usize>()) {
                (Ok(n), Ok(m)) => (n, m),
                _ => return Err(EdgeListError::MalformedHeader(header.to_string())),
            },
            _ => return Err(EdgeListError::MalformedHeader(header.to_string())),
        };
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            let mut it = line.split_whitespace();
            match (it.next(), it.next(), it.next()) {
                (Some(a), Some(b), None) => match (a.parse::<u32>(), b.parse::<u32>()) {
                    (Ok(u), Ok(v)) => edges.push((u, v)),
                    _ => return Err(EdgeListError::MalformedEdge(line.to_string())),
                },
                _ => return Err(EdgeListError::MalformedEdge(line.to_string())),
            }
        }
        if edges.len() != m {
            return Err(EdgeListError::EdgeCountMismatch {
                expected: m,
                found: edges.len(),
            });
        }
        Ok(Graph::new(n, edges)?)
    }

    /// Writes the edge-list text format accepted by
    /// [`Graph::from_edge_list_text`].
    pub fn to_edge_list_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// A sorted, duplicate-free set of vertex ids of some host graph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct VertexSet {
    members: Vec<u32>,
}

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = u32>) -> Self {
        let mut v: Vec<u32> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet { members: v }
    }

    fn from_sorted(members: Vec<u32>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet { members }
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn contains(&self, v: u32) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.members.iter().copied()
    }
}

impl FromIterator<u32> for VertexSet {
    fn from_iter<T: IntoIterator<Item = u32>>(iter: T) -> Self {
        VertexSet::new(iter)
    }
}

/// A set of unordered vertex pairs, stored canonically as `(min,max)` and
/// sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeSet {
    members: Vec<(u32, u32)>,
}

impl EdgeSet {
    pub fn new(members: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut v: Vec<(u32, u32)> = members
            .into_iter()
            .map(|(u, w)| (u.min(w), u.max(w)))
            .collect();
        v.sort_unstable();
        v.dedup();
        EdgeSet { members: v }
    }

    pub fn members(&self) -> &[(u32, u32)] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.members.iter().copied()
    }

    /// All endpoints of member edges, deduplicated.
    pub fn vertices(&self) -> VertexSet {
        VertexSet::new(self.members.iter().flat_map(|&(u, v)| [u, v]))
    }
}

impl FromIterator<(u32, u32)> for EdgeSet {
    fn from_iter<T: IntoIterator<Item = (u32, u32)>>(iter: T) -> Self {
        EdgeSet::new(iter)
    }
}
