//! Compiles a lazy-cops instance `(G, k)` into a protected-edge instance
//! `(G', k)` with the same winner.
//!
//! For `k >= 2`, `G'` is the disjoint union of
//!
//! * `G_C`: `G` with every edge and loop subdivided once and every branch
//!   vertex blown up into a `K_k` (its *branch clique*, members indexed
//!   `1..=k`); subdivision vertices count as index-1 vertices;
//! * `G_R`, a copy of `G`, and `L_R`, the line graph of `G` (loops included);
//! * a reset clique `r_1..r_k` and a hub vertex `ω`;
//!
//! joined as follows (everything unprotected unless noted):
//!
//! * each `L_R` vertex for `uv` is adjacent to `λ_R(u)` and `λ_R(v)`;
//! * every member of `λ_C(u)` is adjacent to `λ_R(v)` and vice versa, with
//!   the protection of `uv` in `G`;
//! * subdivision vertices see all of `G_R`; index-1 branch vertices see all
//!   of `L_R`;
//! * the `r_i` are protected, pairwise joined by protected edges, joined to
//!   every `i`-vertex by an unprotected edge, and to all of `G_R`, `L_R` by
//!   protected edges;
//! * `ω` is adjacent to every vertex of `G_C`, `G_R` and `L_R`.
//!
//! For `k = 1` the output is `G` itself.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::io::RoleSidecar;
use crate::graph::{EdgeInsert, PGraph, Protection, VertexId};

use Protection::{Protected, Unprotected};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum T22Role {
    /// Vertex of the input graph, used only when `k = 1`.
    Original { v: VertexId },
    /// Member `i` (1-based) of the branch clique of `v`.
    Branch { v: VertexId, i: usize },
    /// Subdivision vertex of edge or loop `(u, v)`, `u <= v`.
    Subdivision { u: VertexId, v: VertexId },
    Gr { v: VertexId },
    Lr { u: VertexId, v: VertexId },
    Reset { i: usize },
    Omega,
}

impl fmt::Display for T22Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            T22Role::Original { v } => write!(f, "orig v={v}"),
            T22Role::Branch { v, i } => write!(f, "branch v={v} i={i}"),
            T22Role::Subdivision { u, v } => write!(f, "subdiv e=({u},{v})"),
            T22Role::Gr { v } => write!(f, "gr v={v}"),
            T22Role::Lr { u, v } => write!(f, "lr e=({u},{v})"),
            T22Role::Reset { i } => write!(f, "reset i={i}"),
            T22Role::Omega => write!(f, "omega"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ReductionOutput {
    pub graph: PGraph,
    pub roles: Vec<T22Role>,
    pub cop_count: usize,
    /// Construction log (protection merges and similar events).
    pub notes: Vec<String>,
}

impl ReductionOutput {
    pub fn sidecar(&self) -> RoleSidecar {
        RoleSidecar {
            roles: self
                .roles
                .iter()
                .enumerate()
                .map(|(id, r)| (id, r.to_string()))
                .collect(),
            aliases: Vec::new(),
            meta: vec![
                ("construction".into(), "lcrp-to-crp".into()),
                ("cops".into(), self.cop_count.to_string()),
            ],
        }
    }
}

/// Expected `|V(G')|` for `k >= 2`: `k n + 2 m_E + n + k + 1`, where `m_E`
/// counts edges including loops.
pub fn expected_vertex_count(g: &PGraph, k: usize) -> usize {
    let n = g.vertex_count();
    let me = g.edge_count_with_loops();
    k * n + 2 * me + n + k + 1
}

struct Builder {
    graph: PGraph,
    roles: Vec<T22Role>,
    notes: Vec<String>,
}

impl Builder {
    fn vertex(&mut self, role: T22Role, p: Protection) -> VertexId {
        self.roles.push(role);
        self.graph.add_vertex(p)
    }

    fn edge(&mut self, u: VertexId, v: VertexId, p: Protection) {
        if self.graph.add_edge(u, v, p).expect("builder ids are valid") == EdgeInsert::Merged {
            self.notes.push(format!(
                "protection merge on ({}, {}) -> U",
                self.roles[u], self.roles[v]
            ));
        }
    }
}

pub fn build_t22(g: &PGraph, k: usize) -> Result<ReductionOutput> {
    if k < 1 {
        return Err(Error::InvalidArgument("need at least one cop".into()));
    }
    if k == 1 {
        return Ok(ReductionOutput {
            graph: g.clone(),
            roles: g.vertices().map(|v| T22Role::Original { v }).collect(),
            cop_count: 1,
            notes: vec!["k = 1: output is the input graph".into()],
        });
    }

    let n = g.vertex_count();
    let edges = g.edges_with_loops();
    let mut b = Builder {
        graph: PGraph::new(),
        roles: Vec::new(),
        notes: Vec::new(),
    };

    // G_C
    let clique: Vec<Vec<VertexId>> = (0..n)
        .map(|v| {
            (1..=k)
                .map(|i| b.vertex(T22Role::Branch { v, i }, Unprotected))
                .collect()
        })
        .collect();
    let subdiv: Vec<VertexId> = edges
        .iter()
        .map(|&(u, v, _)| b.vertex(T22Role::Subdivision { u, v }, Unprotected))
        .collect();
    // G_R and L_R
    let gr: Vec<VertexId> = (0..n)
        .map(|v| b.vertex(T22Role::Gr { v }, Unprotected))
        .collect();
    let lr: Vec<VertexId> = edges
        .iter()
        .map(|&(u, v, _)| b.vertex(T22Role::Lr { u, v }, Unprotected))
        .collect();
    let reset: Vec<VertexId> = (1..=k)
        .map(|i| b.vertex(T22Role::Reset { i }, Protected))
        .collect();
    let omega = b.vertex(T22Role::Omega, Unprotected);

    for members in &clique {
        for (a, &x) in members.iter().enumerate() {
            for &y in &members[a + 1..] {
                b.edge(x, y, Unprotected);
            }
        }
    }
    for (e, &(u, v, _)) in edges.iter().enumerate() {
        for &c in clique[u].iter().chain(if u != v { &clique[v][..] } else { &[][..] }) {
            b.edge(subdiv[e], c, Unprotected);
        }
    }
    for (u, v, _) in g.edges() {
        b.edge(gr[u], gr[v], Unprotected);
    }
    let line = g.line_graph();
    for (e, f, _) in line.graph.edges() {
        b.edge(lr[e], lr[f], Unprotected);
    }

    for (e, &(u, v, p)) in edges.iter().enumerate() {
        b.edge(lr[e], gr[u], Unprotected);
        if u != v {
            b.edge(lr[e], gr[v], Unprotected);
        }
        for &c in &clique[u] {
            b.edge(c, gr[v], p);
        }
        for &c in &clique[v] {
            b.edge(c, gr[u], p);
        }
    }
    for &s in &subdiv {
        for &r in &gr {
            b.edge(s, r, Unprotected);
        }
    }
    for members in &clique {
        for &l in &lr {
            b.edge(members[0], l, Unprotected);
        }
    }

    for (a, &ri) in reset.iter().enumerate() {
        for &rj in &reset[a + 1..] {
            b.edge(ri, rj, Protected);
        }
        for members in &clique {
            b.edge(ri, members[a], Unprotected);
        }
        if a == 0 {
            for &s in &subdiv {
                b.edge(ri, s, Unprotected);
            }
        }
        for &x in gr.iter().chain(&lr) {
            b.edge(ri, x, Protected);
        }
    }

    for x in clique.iter().flatten().chain(&subdiv).chain(&gr).chain(&lr) {
        b.edge(omega, *x, Unprotected);
    }

    Ok(ReductionOutput {
        graph: b.graph,
        roles: b.roles,
        cop_count: k,
        notes: b.notes,
    })
}

struct T22Index {
    clique: Vec<Vec<VertexId>>,
    subdiv: BTreeMap<(VertexId, VertexId), VertexId>,
    gr: Vec<VertexId>,
    lr: BTreeMap<(VertexId, VertexId), VertexId>,
    reset: Vec<VertexId>,
    omega: VertexId,
}

fn index_roles(out: &ReductionOutput, g: &PGraph, k: usize) -> Result<T22Index> {
    let n = g.vertex_count();
    if out.roles.len() != out.graph.vertex_count() {
        return Err(Error::Structure(format!(
            "{} roles for {} vertices",
            out.roles.len(),
            out.graph.vertex_count()
        )));
    }
    let mut clique = vec![vec![None; k]; n];
    let mut gr = vec![None; n];
    let mut reset = vec![None; k];
    let mut omega = None;
    let mut subdiv = BTreeMap::new();
    let mut lr = BTreeMap::new();
    let dup = |r: &T22Role| Error::Structure(format!("role '{r}' assigned twice"));
    let range = |r: &T22Role| Error::Structure(format!("role '{r}' does not fit the input"));
    for (id, role) in out.roles.iter().enumerate() {
        let slot = match *role {
            T22Role::Branch { v, i } if v < n && (1..=k).contains(&i) => &mut clique[v][i - 1],
            T22Role::Gr { v } if v < n => &mut gr[v],
            T22Role::Reset { i } if (1..=k).contains(&i) => &mut reset[i - 1],
            T22Role::Omega => &mut omega,
            T22Role::Subdivision { u, v } if g.is_adjacent(u, v) => {
                if subdiv.insert((u, v), id).is_some() {
                    return Err(dup(role));
                }
                continue;
            }
            T22Role::Lr { u, v } if g.is_adjacent(u, v) => {
                if lr.insert((u, v), id).is_some() {
                    return Err(dup(role));
                }
                continue;
            }
            _ => return Err(range(role)),
        };
        if slot.replace(id).is_some() {
            return Err(dup(role));
        }
    }
    let missing = |what: &str| Error::Structure(format!("no vertex carries role {what}"));
    let me = g.edge_count_with_loops();
    if subdiv.len() != me || lr.len() != me {
        return Err(missing("for every edge"));
    }
    Ok(T22Index {
        clique: clique
            .into_iter()
            .map(|c| c.into_iter().collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| missing("branch"))?,
        gr: gr.into_iter().collect::<Option<Vec<_>>>().ok_or_else(|| missing("gr"))?,
        reset: reset
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| missing("reset"))?,
        omega: omega.ok_or_else(|| missing("omega"))?,
        subdiv,
        lr,
    })
}

/// Structural checks of a `k >= 2` construction; returns one line per
/// violation (empty means the construction is sound).
pub fn check_t22_structure(out: &ReductionOutput, g: &PGraph, k: usize) -> Result<Vec<String>> {
    if k < 2 {
        return Err(Error::InvalidArgument(
            "structural check applies to k >= 2".into(),
        ));
    }
    let idx = index_roles(out, g, k)?;
    let h = &out.graph;
    let mut violations = Vec::new();

    let expected = expected_vertex_count(g, k);
    if h.vertex_count() != expected {
        violations.push(format!(
            "vertex count {} != k n + 2 m_E + n + k + 1 = {expected}",
            h.vertex_count()
        ));
    }

    for (v, members) in idx.clique.iter().enumerate() {
        for (a, &x) in members.iter().enumerate() {
            for &y in &members[a + 1..] {
                if h.protection(x, y) != Some(Unprotected) {
                    violations.push(format!("branch clique of {v} is not an unprotected K_{k}"));
                }
            }
        }
    }

    // every i-vertex defends r_i
    for (i, &r) in idx.reset.iter().enumerate() {
        let i_vertices = idx.clique.iter().map(|c| c[i]);
        let subdiv = idx.subdiv.values().copied().filter(|_| i == 0);
        for x in i_vertices.chain(subdiv) {
            if h.protection(x, r) != Some(Unprotected) {
                violations.push(format!(
                    "reset defense: {} does not defend {}",
                    out.roles[x],
                    out.roles[r]
                ));
            }
        }
    }

    let covered = idx
        .clique
        .iter()
        .flatten()
        .chain(idx.subdiv.values())
        .chain(&idx.gr)
        .chain(idx.lr.values());
    for &x in covered {
        if h.protection(idx.omega, x) != Some(Unprotected) {
            violations.push(format!("omega coverage: omega does not defend {}", out.roles[x]));
        }
    }

    for u in g.vertices() {
        for v in g.vertices() {
            let want = g.protection(u, v);
            for &c in &idx.clique[u] {
                let got = h.protection(c, idx.gr[v]);
                if got != want {
                    violations.push(format!(
                        "cop-robber edge {} -- {}: expected {:?}, found {:?}",
                        out.roles[c],
                        out.roles[idx.gr[v]],
                        want,
                        got
                    ));
                }
            }
        }
    }

    for (a, &ri) in idx.reset.iter().enumerate() {
        if h.vertex_protection(ri) != Protected {
            violations.push(format!("reset clique: {} is unprotected", out.roles[ri]));
        }
        for &rj in &idx.reset[a + 1..] {
            if h.protection(ri, rj) != Some(Protected) {
                violations.push(format!(
                    "reset clique: {} -- {} is not a protected edge",
                    out.roles[ri],
                    out.roles[rj]
                ));
            }
        }
    }

    Ok(violations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{defended, CopPositions};
    use crate::graph::families;
    use crate::verify::random_instance;

    fn find(out: &ReductionOutput, role: T22Role) -> VertexId {
        out.roles.iter().position(|&r| r == role).unwrap()
    }

    #[test]
    fn k1_is_identity() {
        let g = random_instance(5, 5, 0.5, 0.3);
        let out = build_t22(&g, 1).unwrap();
        assert_eq!(out.graph, g);
        assert!(build_t22(&g, 0).is_err());
    }

    #[test]
    fn counts_for_small_graphs() {
        let c3 = families::cycle(3);
        let out = build_t22(&c3, 2).unwrap();
        assert_eq!(out.graph.vertex_count(), 24);
        assert!(check_t22_structure(&out, &c3, 2).unwrap().is_empty());

        let k2 = families::path(2);
        let out = build_t22(&k2, 2).unwrap();
        assert_eq!(out.graph.vertex_count(), 15);
        let r1 = find(&out, T22Role::Reset { i: 1 });
        let unprotected: Vec<T22Role> = out
            .graph
            .neighbors(r1)
            .filter(|&(_, p)| p == Unprotected)
            .map(|(x, _)| out.roles[x])
            .collect();
        let branch = unprotected
            .iter()
            .filter(|r| matches!(r, T22Role::Branch { i: 1, .. }))
            .count();
        let sub = unprotected
            .iter()
            .filter(|r| matches!(r, T22Role::Subdivision { .. }))
            .count();
        assert_eq!((branch, sub, unprotected.len()), (2, 3, 5));
    }

    #[test]
    fn size_is_linear_in_k() {
        let g = random_instance(11, 5, 0.5, 0.3);
        let sizes: Vec<usize> = (2..6)
            .map(|k| build_t22(&g, k).unwrap().graph.vertex_count())
            .collect();
        let step = sizes[1] - sizes[0];
        assert!(sizes.windows(2).all(|w| w[1] - w[0] == step));
        assert_eq!(step, g.vertex_count() + 1);
    }

    #[test]
    fn protection_fault_is_reported_once() {
        let mut g = families::cycle(3);
        g.set_protection(0, 1, Protected).unwrap();
        let mut out = build_t22(&g, 2).unwrap();
        let c = find(&out, T22Role::Branch { v: 0, i: 2 });
        let r = find(&out, T22Role::Gr { v: 1 });
        assert_eq!(out.graph.protection(c, r), Some(Protected));
        out.graph.set_protection(c, r, Unprotected).unwrap();
        let v = check_t22_structure(&out, &g, 2).unwrap();
        assert_eq!(v.len(), 1, "{v:?}");
    }

    #[test]
    fn missing_omega_edge_is_reported() {
        let g = families::cycle(3);
        let mut out = build_t22(&g, 2).unwrap();
        let omega = find(&out, T22Role::Omega);
        let x = find(&out, T22Role::Lr { u: 0, v: 1 });
        out.graph.remove_edge(omega, x).unwrap();
        let v = check_t22_structure(&out, &g, 2).unwrap();
        assert_eq!(v.len(), 1);
        assert!(v[0].starts_with("omega coverage"));
    }

    #[test]
    fn inconsistent_roles_are_structural_errors() {
        let g = families::cycle(3);
        let mut out = build_t22(&g, 2).unwrap();
        out.roles.pop();
        assert!(matches!(
            check_t22_structure(&out, &g, 2),
            Err(Error::Structure(_))
        ));
        let mut out = build_t22(&g, 2).unwrap();
        out.roles[0] = T22Role::Omega;
        assert!(check_t22_structure(&out, &g, 2).is_err());
    }

    #[test]
    fn one_cop_per_index_defends_reset_and_omega() {
        for seed in 0..6 {
            let g = random_instance(seed, 3, 0.6, 0.4);
            let k = 2 + seed as usize % 2;
            let out = build_t22(&g, k).unwrap();
            let mut by_index: Vec<Vec<VertexId>> = vec![Vec::new(); k];
            for (id, r) in out.roles.iter().enumerate() {
                match *r {
                    T22Role::Branch { i, .. } => by_index[i - 1].push(id),
                    T22Role::Subdivision { .. } => by_index[0].push(id),
                    _ => {}
                }
            }
            let targets: Vec<VertexId> = out
                .roles
                .iter()
                .enumerate()
                .filter(|(_, r)| matches!(r, T22Role::Reset { .. } | T22Role::Omega))
                .map(|(id, _)| id)
                .collect();
            // every choice of one i-vertex per index
            let mut choice = vec![0usize; k];
            loop {
                let cops = CopPositions::new((0..k).map(|i| by_index[i][choice[i]]).collect());
                for &t in &targets {
                    assert!(defended(&out.graph, &cops, t), "{} undefended", out.roles[t]);
                }
                let mut i = 0;
                while i < k {
                    choice[i] += 1;
                    if choice[i] < by_index[i].len() {
                        break;
                    }
                    choice[i] = 0;
                    i += 1;
                }
                if i == k {
                    break;
                }
            }
        }
    }
}
