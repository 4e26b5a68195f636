//! Multigraphs with first-class parallel edges, simple graphs, and the
//! distance operations the colouring machinery is built on.
//!
//! A [`Multigraph`] stores its edges as a dense list of endpoint pairs; the
//! edge id is the index into that list, so parallel edges are distinct
//! entities throughout (they matter: a parallel pair is a cycle of length 2,
//! and in the line graph parallel edges are adjacent). Loops are rejected.
//!
//! Distances come in two metrics: the vertex metric (ordinary BFS) and the
//! edge metric, which is BFS in the line graph — two edges are at distance 1
//! when they share an endpoint.

use serde::{Deserialize, Serialize};
use std::collections::VecDeque;
use thiserror::Error;

use crate::parallel::{map_indexed, min_indexed};

/// Errors from graph construction and queries.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edges are not allowed (vertex {vertex})")]
    LoopEdge { vertex: usize },
    #[error("vertex {vertex} out of range (graph has {n} vertices)")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {edge} out of range (graph has {m} edges)")]
    EdgeOutOfRange { edge: usize, m: usize },
    #[error("operation requires a tree (connected, acyclic, no parallel edges)")]
    NotATree,
    #[error(
        "matching search guard exceeded: graph has {vertices} vertices and {edges} edges, \
         guard admits ≤ {max_vertices} vertices or ≤ {max_edges} edges"
    )]
    MatchingGuardExceeded {
        vertices: usize,
        edges: usize,
        max_vertices: usize,
        max_edges: usize,
    },
}

/// Which entities a distance class or colouring ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EntityKind {
    Vertex,
    Edge,
}

/// The set of entities at distance `1..=radius` from a centre entity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceClass {
    pub kind: EntityKind,
    pub centre: usize,
    pub radius: usize,
    /// Members in ascending id order; the centre itself is excluded.
    pub members: Vec<usize>,
}

/// Size guard for the exhaustive matching search: the search runs when the
/// graph has at most `max_vertices` vertices *or* at most `max_edges` edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatchingGuard {
    pub max_vertices: usize,
    pub max_edges: usize,
}

impl Default for MatchingGuard {
    fn default() -> Self {
        MatchingGuard {
            max_vertices: 14,
            max_edges: 24,
        }
    }
}

/// A multigraph on vertices `0..n` with dense edge ids `0..m` and no loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    endpoints: Vec<(usize, usize)>,
    /// incidence[v] lists the ids of edges incident to v, ascending.
    incidence: Vec<Vec<usize>>,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph {
            n,
            endpoints: Vec::new(),
            incidence: vec![Vec::new(); n],
        }
    }

    /// Adds an edge and returns its id (= current edge count).
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<usize, GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        if u == v {
            return Err(GraphError::LoopEdge { vertex: u });
        }
        let id = self.endpoints.len();
        self.endpoints.push((u, v));
        self.incidence[u].push(id);
        self.incidence[v].push(id);
        Ok(id)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Multigraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Appends a fresh vertex and returns its id.
    pub fn add_vertex(&mut self) -> usize {
        self.n += 1;
        self.incidence.push(Vec::new());
        self.n - 1
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.endpoints.len()
    }

    pub fn endpoints(&self, e: usize) -> Result<(usize, usize), GraphError> {
        self.endpoints
            .get(e)
            .copied()
            .ok_or(GraphError::EdgeOutOfRange {
                edge: e,
                m: self.endpoints.len(),
            })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.endpoints
    }

    /// Ids of edges incident to `v`, ascending.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Whether some other edge shares both endpoints with `e`.
    pub fn has_parallel_partner(&self, e: usize) -> Result<bool, GraphError> {
        let (u, v) = self.endpoints(e)?;
        Ok(self.incidence[u]
            .iter()
            .any(|&f| f != e && self.other_endpoint(f, u) == v))
    }

    fn other_endpoint(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.endpoints[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// The underlying simple graph: same vertices, parallel edges merged.
    pub fn underlying_simple(&self) -> SimpleGraph {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for &(u, v) in &self.endpoints {
            adj[u].push(v);
            adj[v].push(u);
        }
        for row in &mut adj {
            row.sort_unstable();
            row.dedup();
        }
        SimpleGraph { n: self.n, adj }
    }

    /// The line graph: one vertex per edge id, adjacency = shared endpoint.
    /// Parallel edges share both endpoints and are adjacent (once).
    pub fn line_graph(&self) -> SimpleGraph {
        let m = self.endpoints.len();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); m];
        for list in &self.incidence {
            for (i, &e) in list.iter().enumerate() {
                for &f in &list[i + 1..] {
                    adj[e].push(f);
                    adj[f].push(e);
                }
            }
        }
        for row in &mut adj {
            row.sort_unstable();
            row.dedup();
        }
        SimpleGraph { n: m, adj }
    }

    /// BFS distances from `source` in the vertex metric; `None` marks
    /// unreachable vertices.
    pub fn vertex_distances(&self, source: usize) -> Result<Vec<Option<usize>>, GraphError> {
        if source >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: source,
                n: self.n,
            });
        }
        Ok(self.vertex_bfs(source, usize::MAX))
    }

    fn vertex_bfs(&self, source: usize, limit: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            if du == limit {
                continue;
            }
            for &e in &self.incidence[u] {
                let w = self.other_endpoint(e, u);
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// BFS distances from edge `source` in the edge metric (line-graph
    /// distances); `None` marks unreachable edges.
    pub fn edge_distances(&self, source: usize) -> Result<Vec<Option<usize>>, GraphError> {
        if source >= self.endpoints.len() {
            return Err(GraphError::EdgeOutOfRange {
                edge: source,
                m: self.endpoints.len(),
            });
        }
        Ok(self.edge_bfs(source, usize::MAX))
    }

    pub(crate) fn edge_bfs(&self, source: usize, limit: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.endpoints.len()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(e) = queue.pop_front() {
            let de = dist[e].unwrap();
            if de == limit {
                continue;
            }
            let (u, v) = self.endpoints[e];
            for &w in [u, v].iter() {
                for &f in &self.incidence[w] {
                    if dist[f].is_none() {
                        dist[f] = Some(de + 1);
                        queue.push_back(f);
                    }
                }
            }
        }
        dist
    }

    /// All entities at distance `1..=radius` of `centre` in the chosen
    /// metric, excluding the centre itself.
    pub fn neighbourhood(
        &self,
        centre: usize,
        radius: usize,
        kind: EntityKind,
    ) -> Result<DistanceClass, GraphError> {
        let dist = match kind {
            EntityKind::Vertex => {
                if centre >= self.n {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: centre,
                        n: self.n,
                    });
                }
                self.vertex_bfs(centre, radius)
            }
            EntityKind::Edge => {
                if centre >= self.endpoints.len() {
                    return Err(GraphError::EdgeOutOfRange {
                        edge: centre,
                        m: self.endpoints.len(),
                    });
                }
                self.edge_bfs(centre, radius)
            }
        };
        let members = dist
            .iter()
            .enumerate()
            .filter(|&(x, d)| x != centre && matches!(d, Some(dd) if *dd <= radius))
            .map(|(x, _)| x)
            .collect();
        Ok(DistanceClass {
            kind,
            centre,
            radius,
            members,
        })
    }

    /// Length of a shortest cycle; `None` for forests. A parallel edge pair
    /// is a cycle of length 2.
    ///
    /// Every cycle contains a shortest path between the endpoints of one of
    /// its edges avoiding that edge; the search removes each edge in turn and
    /// BFS-connects its endpoints.
    pub fn girth(&self) -> Option<usize> {
        min_indexed(self.endpoints.len(), |e| {
            let (u, v) = self.endpoints[e];
            let mut dist = vec![None; self.n];
            dist[u] = Some(0usize);
            let mut queue = VecDeque::from([u]);
            while let Some(x) = queue.pop_front() {
                if x == v {
                    break;
                }
                let dx = dist[x].unwrap();
                for &f in &self.incidence[x] {
                    if f == e {
                        continue;
                    }
                    let w = self.other_endpoint(f, x);
                    if dist[w].is_none() {
                        dist[w] = Some(dx + 1);
                        queue.push_back(w);
                    }
                }
            }
            dist[v].map(|d| d + 1)
        })
    }

    /// Connected, acyclic, no parallel edges. (With `m = n − 1` and
    /// connectivity the other two follow, but all three are checked.)
    pub fn is_tree(&self) -> bool {
        self.n >= 1
            && self.endpoints.len() == self.n - 1
            && self.connected_components().len() == 1
            && self.girth().is_none()
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut components = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut component = vec![s];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &e in &self.incidence[u] {
                    let w = self.other_endpoint(e, u);
                    if !seen[w] {
                        seen[w] = true;
                        component.push(w);
                        queue.push_back(w);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    /// Contracts the listed edges (a quotient by the union of their
    /// endpoints), discarding loops and merging parallel edges. Contracted
    /// vertex ids are dense, numbered by first appearance among `0..n`.
    pub fn contract_edges(&self, edges: &[usize]) -> Result<SimpleGraph, GraphError> {
        self.contract_edges_with_map(edges).map(|(g, _)| g)
    }

    /// As [`contract_edges`](Self::contract_edges), also returning the map
    /// from original vertex to contracted vertex.
    pub fn contract_edges_with_map(
        &self,
        edges: &[usize],
    ) -> Result<(SimpleGraph, Vec<usize>), GraphError> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &e in edges {
            let (u, v) = self.endpoints(e)?;
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru.max(rv)] = ru.min(rv);
            }
        }
        let mut label = vec![usize::MAX; self.n];
        let mut map = vec![0; self.n];
        let mut next = 0;
        for v in 0..self.n {
            let r = find(&mut parent, v);
            if label[r] == usize::MAX {
                label[r] = next;
                next += 1;
            }
            map[v] = label[r];
        }
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); next];
        for &(u, v) in &self.endpoints {
            let (cu, cv) = (map[u], map[v]);
            if cu != cv {
                adj[cu].push(cv);
                adj[cv].push(cu);
            }
        }
        for row in &mut adj {
            row.sort_unstable();
            row.dedup();
        }
        Ok((SimpleGraph { n: next, adj }, map))
    }
}

/// A simple graph on vertices `0..n`: no loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    /// Sorted, deduplicated adjacency lists.
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph {
            n,
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::LoopEdge { vertex: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for row in &mut adj {
            row.sort_unstable();
            row.dedup();
        }
        Ok(SimpleGraph { n, adj })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        if u == v {
            return Err(GraphError::LoopEdge { vertex: u });
        }
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
            let pos = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos, u);
        }
        Ok(())
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// All `(u, v)` with `u < v`, lexicographic.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::with_capacity(self.num_edges());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        edges
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn distances(&self, source: usize) -> Result<Vec<Option<usize>>, GraphError> {
        if source >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: source,
                n: self.n,
            });
        }
        Ok(self.bfs(source, usize::MAX))
    }

    fn bfs(&self, source: usize, limit: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            if du == limit {
                continue;
            }
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Vertices at distance `1..=radius` of `centre`, excluding the centre.
    pub fn neighbourhood(
        &self,
        centre: usize,
        radius: usize,
    ) -> Result<DistanceClass, GraphError> {
        if centre >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: centre,
                n: self.n,
            });
        }
        let dist = self.bfs(centre, radius);
        let members = dist
            .iter()
            .enumerate()
            .filter(|&(x, d)| x != centre && matches!(d, Some(dd) if *dd <= radius))
            .map(|(x, _)| x)
            .collect();
        Ok(DistanceClass {
            kind: EntityKind::Vertex,
            centre,
            radius,
            members,
        })
    }

    /// The t-th power: same vertices, adjacency = BFS distance in `1..=t`.
    /// Requires `t ≥ 1`; `power(g, 1) == g`.
    pub fn power(&self, t: usize) -> SimpleGraph {
        assert!(t >= 1, "graph power requires t >= 1");
        let adj = map_indexed(self.n, |s| {
            let dist = self.bfs(s, t);
            dist.iter()
                .enumerate()
                .filter(|&(x, d)| x != s && matches!(d, Some(dd) if *dd <= t))
                .map(|(x, _)| x)
                .collect::<Vec<_>>()
        });
        SimpleGraph { n: self.n, adj }
    }

    /// All pairs of distinct vertices adjacent. `K_0` and `K_1` are cliques.
    pub fn is_clique(&self) -> bool {
        self.adj.iter().all(|row| row.len() + 1 == self.n)
    }

    /// Degeneracy order: repeatedly delete a minimum-degree vertex (ties to
    /// the lowest id) and return the removal sequence reversed, together
    /// with the degeneracy (the largest degree seen at removal). Colouring
    /// greedily along the returned order uses at most degeneracy + 1 colours.
    pub fn degeneracy_order(&self) -> (Vec<usize>, usize) {
        let mut degree: Vec<usize> = (0..self.n).map(|v| self.adj[v].len()).collect();
        let mut removed = vec![false; self.n];
        let mut order = Vec::with_capacity(self.n);
        let mut degeneracy = 0;
        for _ in 0..self.n {
            let v = (0..self.n)
                .filter(|&v| !removed[v])
                .min_by_key(|&v| (degree[v], v))
                .unwrap();
            degeneracy = degeneracy.max(degree[v]);
            removed[v] = true;
            order.push(v);
            for &w in &self.adj[v] {
                if !removed[w] {
                    degree[w] -= 1;
                }
            }
        }
        order.reverse();
        (order, degeneracy)
    }

    /// Maximum matching size by exhaustive branch: the lowest uncovered
    /// vertex is either left unmatched or matched to each uncovered
    /// neighbour. Refuses graphs beyond the guard.
    pub fn max_matching(&self, guard: MatchingGuard) -> Result<usize, GraphError> {
        let m = self.num_edges();
        if self.n > guard.max_vertices && m > guard.max_edges {
            return Err(GraphError::MatchingGuardExceeded {
                vertices: self.n,
                edges: m,
                max_vertices: guard.max_vertices,
                max_edges: guard.max_edges,
            });
        }
        let mut covered = vec![false; self.n];
        Ok(self.matching_branch(0, &mut covered))
    }

    fn matching_branch(&self, from: usize, covered: &mut [bool]) -> usize {
        let mut v = from;
        loop {
            if v >= self.n {
                return 0;
            }
            if !covered[v] && self.adj[v].iter().any(|&w| !covered[w]) {
                break;
            }
            v += 1;
        }
        // v stays unmatched…
        let mut best = self.matching_branch(v + 1, covered);
        // …or is matched to an uncovered neighbour.
        covered[v] = true;
        for i in 0..self.adj[v].len() {
            let w = self.adj[v][i];
            if !covered[w] {
                covered[w] = true;
                best = best.max(1 + self.matching_branch(v + 1, covered));
                covered[w] = false;
            }
        }
        covered[v] = false;
        best
    }
}
