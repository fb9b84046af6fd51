//! Immutable simple undirected graphs and the structural queries the
//! coloring procedures rely on: girth, edge neighborhoods and 2-reachability.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

/// A finite simple graph with dense vertex ids `0..n` and dense edge ids
/// `0..m` assigned in insertion order.
///
/// Edges keep the endpoint orientation they were inserted with; the graph
/// itself is undirected. Adjacency lists are sorted by neighbor id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<Vec<(VertexId, EdgeId)>>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list. Rejects loops,
    /// parallel edges and out-of-range endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut list = Vec::new();
        let mut adj: Vec<Vec<(VertexId, EdgeId)>> = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let id = list.len();
            list.push((u, v));
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        for (v, nbrs) in adj.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if let Some(w) = nbrs.windows(2).find(|w| w[0].0 == w[1].0) {
                let (a, b) = (v.min(w[0].0), v.max(w[0].0));
                return Err(Error::DuplicateEdge(a, b));
            }
        }
        Ok(Graph { n, edges: list, adj })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new(), adj: vec![Vec::new(); n] }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in id order, with their insertion orientation.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn check_edge(&self, e: EdgeId) -> Result<()> {
        if e < self.edges.len() {
            Ok(())
        } else {
            Err(Error::InvalidEdge { edge: e, m: self.edges.len() })
        }
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Endpoints of `e`. Panics on an invalid id; see [`Graph::check_edge`].
    #[inline]
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    /// The endpoint of `e` that is not `v`.
    #[inline]
    pub fn other_endpoint(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// `(neighbor, edge)` pairs at `v`, sorted by neighbor.
    #[inline]
    pub fn incident(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// The common degree if the graph is regular. Graphs without vertices
    /// are reported as 0-regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|a| a.len() == d).then_some(d)
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let nbrs = self.adj.get(u)?;
        nbrs.binary_search_by_key(&v, |&(w, _)| w).ok().map(|i| nbrs[i].1)
    }

    #[inline]
    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// A proper 2-coloring of the vertices (`false`/`true` sides), or `None`
    /// when the graph has an odd cycle.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(false);
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                let s = side[v].unwrap();
                for w in self.neighbors(v) {
                    match side[w] {
                        None => {
                            side[w] = Some(!s);
                            queue.push_back(w);
                        }
                        Some(t) if t == s => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap_or(false)).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Length of a shortest cycle, or [`Girth::Infinite`] for forests.
    ///
    /// Runs a BFS from every vertex; a non-tree edge `uw` met from root `s`
    /// closes a closed walk of length `dist(u) + dist(w) + 1` through `s`,
    /// and the minimum over all roots is attained by a shortest cycle.
    pub fn girth(&self) -> Girth {
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent_edge = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent_edge[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            'bfs: while let Some(u) = queue.pop_front() {
                // no shorter cycle can be found past this depth
                if 2 * dist[u] >= best {
                    break 'bfs;
                }
                for &(w, e) in &self.adj[u] {
                    if e == parent_edge[u] {
                        continue;
                    }
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent_edge[w] = e;
                        queue.push_back(w);
                    } else {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    /// `N'(e)`: every edge sharing an endpoint with `e`, excluding `e`, in
    /// increasing id order.
    pub fn edge_neighbors(&self, e: EdgeId) -> Result<Vec<EdgeId>> {
        self.check_edge(e)?;
        let (u, v) = self.edges[e];
        let mut out: Vec<EdgeId> = self.adj[u]
            .iter()
            .chain(&self.adj[v])
            .map(|&(_, f)| f)
            .filter(|&f| f != e)
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Whether a path of length exactly two, on three distinct vertices,
    /// joins an endpoint of `e` to an endpoint of `f`.
    pub fn is_two_reachable(&self, e: EdgeId, f: EdgeId) -> Result<bool> {
        self.check_edge(e)?;
        self.check_edge(f)?;
        Ok(self.two_reachable_unchecked(e, f))
    }

    pub(crate) fn two_reachable_unchecked(&self, e: EdgeId, f: EdgeId) -> bool {
        let (a0, a1) = self.edges[e];
        let (c0, c1) = self.edges[f];
        for a in [a0, a1] {
            for &(b, _) in &self.adj[a] {
                for c in [c0, c1] {
                    if c != a && c != b && self.adjacent(b, c) {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Whether `e` lies on a triangle.
    pub fn edge_in_triangle(&self, e: EdgeId) -> Result<bool> {
        self.check_edge(e)?;
        let (u, v) = self.edges[e];
        Ok(self.neighbors(u).any(|w| w != v && self.adjacent(w, v)))
    }
}

/// Serialized with the JSON graph schema `{"n": .., "edges": [[u, v], ..]}`.
impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        crate::io::GraphJson::from(self).serialize(s)
    }
}

/// Girth of a graph: a cycle length, or infinite for forests.
///
/// `Finite(_)` orders below `Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }

    /// Whether the girth is at least `k` (always true for forests).
    pub fn at_least(self, k: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= k,
            Girth::Infinite => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("infinite"),
        }
    }
}

/// Serialized as the cycle length, or `null` for forests.
impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u64(*g as u64),
            Girth::Infinite => s.serialize_none(),
        }
    }
}

/// A non-backtracking walk `x_0, x_1, ..., x_k` in a host graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Walk {
    vertices: Vec<VertexId>,
}

impl Walk {
    /// Validates adjacency of consecutive vertices and the no-backtracking
    /// rule `x_{k-1} != x_{k+1}`.
    pub fn new(g: &Graph, vertices: Vec<VertexId>) -> Result<Self> {
        for &v in &vertices {
            g.check_vertex(v)?;
        }
        if let Some(w) = vertices.windows(2).find(|w| !g.adjacent(w[0], w[1])) {
            return Err(Error::precondition(format!(
                "walk steps between non-adjacent vertices {} and {}",
                w[0], w[1]
            )));
        }
        if let Some(w) = vertices.windows(3).find(|w| w[0] == w[2]) {
            return Err(Error::precondition(format!("walk backtracks at vertex {}", w[1])));
        }
        Ok(Walk { vertices })
    }

    /// A closed walk through `cycle` and back to its first vertex. The
    /// listed vertices must be distinct and at least three.
    pub fn cycle(g: &Graph, cycle: &[VertexId]) -> Result<Self> {
        let mut vertices = cycle.to_vec();
        if let Some(&first) = cycle.first() {
            vertices.push(first);
        }
        let walk = Walk::new(g, vertices)?;
        if !walk.is_cycle() {
            return Err(Error::precondition("vertex sequence is not a cycle"));
        }
        Ok(walk)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Edge ids traversed, in walk order.
    pub fn edges(&self, g: &Graph) -> Vec<EdgeId> {
        self.vertices
            .windows(2)
            .map(|w| g.edge_between(w[0], w[1]).expect("walk validated against this graph"))
            .collect()
    }

    /// True for closed walks of length >= 3 that repeat no vertex other than
    /// the closing one.
    pub fn is_cycle(&self) -> bool {
        let vs = &self.vertices;
        if vs.len() < 4 || vs.first() != vs.last() {
            return false;
        }
        let mut inner = vs[..vs.len() - 1].to_vec();
        inner.sort_unstable();
        inner.windows(2).all(|w| w[0] != w[1])
    }
}

/// Returns the smallest-id edge of `cycle` that is not 2-reachable from any
/// edge of `avoid`.
///
/// When `|avoid| = l - 1` and the girth is at least `6l - 5`, such an edge is
/// guaranteed to exist; otherwise [`Error::NotFound`] may be returned.
pub fn find_unreachable_cycle_edge(g: &Graph, cycle: &Walk, avoid: &[EdgeId]) -> Result<EdgeId> {
    if !cycle.is_cycle() {
        return Err(Error::precondition("walk is not a cycle"));
    }
    for &s in avoid {
        g.check_edge(s)?;
    }
    let mut cycle_edges = cycle.edges(g);
    if let Some(&s) = avoid.iter().find(|s| cycle_edges.contains(s)) {
        return Err(Error::precondition(format!("edge {s} lies on the cycle")));
    }
    cycle_edges.sort_unstable();
    cycle_edges
        .into_iter()
        .find(|&e| avoid.iter().all(|&s| !g.two_reachable_unchecked(s, e)))
        .ok_or(Error::NotFound)
}
