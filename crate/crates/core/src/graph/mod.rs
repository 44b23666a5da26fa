//! Reflexive undirected graphs whose edges and loops carry a protection flag.
//!
//! Loops are never stored: every vertex implicitly owns one, and the vertex's
//! protection *is* the protection of that loop. Non-loop edges are kept in a
//! sorted adjacency map per vertex so that iteration order is deterministic.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

pub mod families;
pub mod io;

pub type VertexId = usize;

/// Protection flag of an edge or loop. `Unprotected < Protected`; the order is
/// only consulted when two insertions of the same pair disagree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Protection {
    Unprotected,
    Protected,
}

impl Protection {
    pub fn is_protected(self) -> bool {
        self == Protection::Protected
    }

    pub fn symbol(self) -> char {
        match self {
            Protection::Protected => 'P',
            Protection::Unprotected => 'U',
        }
    }

    pub fn from_symbol(s: &str) -> Option<Self> {
        match s {
            "P" => Some(Protection::Protected),
            "U" => Some(Protection::Unprotected),
            _ => None,
        }
    }

    /// Merge rule for repeated insertions: unprotected wins.
    pub fn merge(self, other: Protection) -> Protection {
        self.min(other)
    }
}

impl fmt::Display for Protection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Outcome of [`PGraph::add_edge`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeInsert {
    New,
    /// The pair already existed with the same protection.
    Unchanged,
    /// The pair already existed with a different protection; the stored
    /// value is now `Unprotected`.
    Merged,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PGraph {
    vertex_prot: Vec<Protection>,
    adj: Vec<BTreeMap<VertexId, Protection>>,
}

impl PGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// `n` isolated vertices, all with loop protection `p`.
    pub fn with_vertices(n: usize, p: Protection) -> Self {
        PGraph {
            vertex_prot: vec![p; n],
            adj: vec![BTreeMap::new(); n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_prot.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_prot.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.vertex_count()
    }

    /// Number of non-loop edges.
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeMap::len).sum::<usize>() / 2
    }

    /// Number of edges including the implicit loops.
    pub fn edge_count_with_loops(&self) -> usize {
        self.edge_count() + self.vertex_count()
    }

    pub fn add_vertex(&mut self, p: Protection) -> VertexId {
        self.vertex_prot.push(p);
        self.adj.push(BTreeMap::new());
        self.vertex_prot.len() - 1
    }

    fn check(&self, v: VertexId) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::InvalidVertex(v, self.vertex_count()))
        }
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId, p: Protection) -> Result<EdgeInsert> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::SelfPair(u));
        }
        let outcome = match self.adj[u].get(&v) {
            None => EdgeInsert::New,
            Some(&old) if old == p => EdgeInsert::Unchanged,
            Some(_) => EdgeInsert::Merged,
        };
        let stored = match self.adj[u].get(&v) {
            Some(&old) => old.merge(p),
            None => p,
        };
        self.adj[u].insert(v, stored);
        self.adj[v].insert(u, stored);
        Ok(outcome)
    }

    /// Removes a non-loop edge. Returns whether it was present.
    pub fn remove_edge(&mut self, u: VertexId, v: VertexId) -> Result<bool> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::SelfPair(u));
        }
        let present = self.adj[u].remove(&v).is_some();
        self.adj[v].remove(&u);
        Ok(present)
    }

    /// Overwrites the protection of an existing edge (or loop when `u == v`),
    /// bypassing the merge rule.
    pub fn set_protection(&mut self, u: VertexId, v: VertexId, p: Protection) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            self.vertex_prot[u] = p;
            return Ok(());
        }
        match self.adj[u].get_mut(&v) {
            Some(slot) => {
                *slot = p;
                self.adj[v].insert(u, p);
                Ok(())
            }
            None => Err(Error::InvalidArgument(format!("no edge between {u} and {v}"))),
        }
    }

    pub fn vertex_protection(&self, v: VertexId) -> Protection {
        self.vertex_prot[v]
    }

    pub fn edge_query(&self, u: VertexId, v: VertexId) -> Result<Option<Protection>> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.protection(u, v))
    }

    /// Unchecked variant of [`edge_query`](Self::edge_query); panics on invalid ids.
    pub fn protection(&self, u: VertexId, v: VertexId) -> Option<Protection> {
        if u == v {
            Some(self.vertex_prot[u])
        } else {
            self.adj[u].get(&v).copied()
        }
    }

    pub fn is_adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.protection(u, v).is_some()
    }

    /// Open neighbourhood with edge protections, in increasing id order.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = (VertexId, Protection)> + '_ {
        self.adj[v].iter().map(|(&u, &p)| (u, p))
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    /// `N[v]` in increasing id order.
    pub fn closed_neighborhood(&self, v: VertexId) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = self.adj[v].keys().copied().collect();
        let pos = out.partition_point(|&u| u < v);
        out.insert(pos, v);
        out
    }

    /// Non-loop edges as `(u, v, p)` with `u < v`, lexicographically ordered.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId, Protection)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, m)| {
            m.range(u + 1..).map(move |(&v, &p)| (u, v, p))
        })
    }

    /// All edges including loops as `(u, v, p)` with `u <= v`, lexicographic.
    pub fn edges_with_loops(&self) -> Vec<(VertexId, VertexId, Protection)> {
        let mut out = Vec::with_capacity(self.edge_count_with_loops());
        for u in self.vertices() {
            out.push((u, u, self.vertex_prot[u]));
            out.extend(self.adj[u].range(u + 1..).map(|(&v, &p)| (u, v, p)));
        }
        out
    }

    /// Same vertices and edges with every protection flag cleared.
    pub fn unprotected_copy(&self) -> PGraph {
        PGraph {
            vertex_prot: vec![Protection::Unprotected; self.vertex_count()],
            adj: self
                .adj
                .iter()
                .map(|m| m.keys().map(|&u| (u, Protection::Unprotected)).collect())
                .collect(),
        }
    }

    pub fn is_fully_unprotected(&self) -> bool {
        self.vertex_prot.iter().all(|p| !p.is_protected())
            && self.edges().all(|(_, _, p)| !p.is_protected())
    }

    /// Line graph over all edges *including* loops. Output vertex `i`
    /// corresponds to `edges[i]` of the returned map; everything is
    /// unprotected.
    pub fn line_graph(&self) -> LineGraph {
        let edges: Vec<(VertexId, VertexId)> = self
            .edges_with_loops()
            .into_iter()
            .map(|(u, v, _)| (u, v))
            .collect();
        let mut incident: Vec<Vec<VertexId>> = vec![Vec::new(); self.vertex_count()];
        for (i, &(u, v)) in edges.iter().enumerate() {
            incident[u].push(i);
            if v != u {
                incident[v].push(i);
            }
        }
        let mut graph = PGraph::with_vertices(edges.len(), Protection::Unprotected);
        for inc in &incident {
            for (a, &e) in inc.iter().enumerate() {
                for &f in &inc[a + 1..] {
                    graph
                        .add_edge(e, f, Protection::Unprotected)
                        .expect("line graph ids are in range and distinct");
                }
            }
        }
        LineGraph { graph, edges }
    }

    /// Subdivides every edge and loop once. Branch vertices keep their ids
    /// `0..n`; the subdivision vertex of `edges[i]` is `n + i`. A subdivided
    /// loop becomes a leaf. Everything is unprotected.
    pub fn subdivide(&self) -> Subdivision {
        let n = self.vertex_count();
        let edges: Vec<(VertexId, VertexId)> = self
            .edges_with_loops()
            .into_iter()
            .map(|(u, v, _)| (u, v))
            .collect();
        let mut graph = PGraph::with_vertices(n + edges.len(), Protection::Unprotected);
        for (i, &(u, v)) in edges.iter().enumerate() {
            let s = n + i;
            graph.add_edge(u, s, Protection::Unprotected).expect("valid");
            if u != v {
                graph.add_edge(v, s, Protection::Unprotected).expect("valid");
            }
        }
        Subdivision { graph, edges }
    }
}

/// Result of [`PGraph::line_graph`].
#[derive(Clone, Debug)]
pub struct LineGraph {
    pub graph: PGraph,
    /// `edges[i]` is the original edge (`u <= v`) represented by vertex `i`.
    pub edges: Vec<(VertexId, VertexId)>,
}

impl LineGraph {
    pub fn vertex_of(&self, u: VertexId, v: VertexId) -> Option<VertexId> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }
}

/// Result of [`PGraph::subdivide`].
#[derive(Clone, Debug)]
pub struct Subdivision {
    pub graph: PGraph,
    /// `edges[i]` is subdivided by vertex `branch_count + i`.
    pub edges: Vec<(VertexId, VertexId)>,
}

impl Subdivision {
    pub fn branch_count(&self) -> usize {
        self.graph.vertex_count() - self.edges.len()
    }

    pub fn subdivision_vertex(&self, u: VertexId, v: VertexId) -> Option<VertexId> {
        let key = (u.min(v), u.max(v));
        self.edges
            .binary_search(&key)
            .ok()
            .map(|i| self.branch_count() + i)
    }
}
