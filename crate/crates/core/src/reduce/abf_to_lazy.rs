//! Compiles an ABF instance into a lazy-cops instance with `m + n + 3` cops
//! whose winner matches the ABF winner (cops win iff player A wins).
//!
//! With `k = m + n + 2`, the graph consists of
//!
//! * variable vertices `z^T, z^F` per variable (`x_i^T x_i^F` adjacent), one
//!   protected restriction vertex `u_z` per variable, and one protected
//!   clause vertex `u_C` per clause;
//! * per `y_j` a gadget over `y_j^*`, the primary robber vertices
//!   `a_j^T, a_j'^T, a_j^F, a_j'^F` and the secondary robber vertices
//!   `b_j^T, b_j'^T, b_j^F, b_j'^F`, hanging off the robber's home vertex `v`;
//! * a reset gadget `c_i, r_i, s_i, t_i, w_{i,j}` for `i, j` in `1..=k`, where
//!   `s_1..s_{m+n}` are the variable vertices of the initial values,
//!   `s_{k-1}` is the vertex `s` and `c_{k-1}` is the vertex `u`;
//! * a guard pair `c^*` / `r^*`.
//!
//! Every edge to the placeholder `h` is emitted as `k` protected edges, one
//! to each `r_i`. When a pair is inserted twice with different protections,
//! the unprotected insertion wins; this happens exactly once, on
//! `(u, r_{k-1})`.

use std::collections::HashMap;
use std::fmt;

use crate::abf::AbfInstance;
use crate::error::{Error, Result};
use crate::game::{defended, Configuration, Turn};
use crate::graph::io::RoleSidecar;
use crate::graph::{EdgeInsert, PGraph, Protection, VertexId};

use Protection::{Protected, Unprotected};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pol {
    T,
    F,
}

impl Pol {
    pub fn of(value: bool) -> Pol {
        if value {
            Pol::T
        } else {
            Pol::F
        }
    }
}

impl fmt::Display for Pol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pol::T => "T",
            Pol::F => "F",
        })
    }
}

/// Vertex roles; all indices are 1-based. `Restriction` takes the variable
/// index over `x_1..x_m, y_1..y_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum T31Role {
    VarX { i: usize, pol: Pol },
    VarY { j: usize, pol: Pol },
    YStar { j: usize },
    Primary { j: usize, pol: Pol, primed: bool },
    Secondary { j: usize, pol: Pol, primed: bool },
    Restriction { var: usize },
    Clause { c: usize },
    V,
    U,
    S,
    C { i: usize },
    R { i: usize },
    SVert { i: usize },
    T { i: usize },
    W { i: usize, j: usize },
    CStar,
    RStar,
}

impl fmt::Display for T31Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prime = |p: bool| if p { "'" } else { "" };
        match *self {
            T31Role::VarX { i, pol } => write!(f, "x i={i} {pol}"),
            T31Role::VarY { j, pol } => write!(f, "y j={j} {pol}"),
            T31Role::YStar { j } => write!(f, "ystar j={j}"),
            T31Role::Primary { j, pol, primed } => write!(f, "a{} j={j} {pol}", prime(primed)),
            T31Role::Secondary { j, pol, primed } => write!(f, "b{} j={j} {pol}", prime(primed)),
            T31Role::Restriction { var } => write!(f, "restrict z={var}"),
            T31Role::Clause { c } => write!(f, "clause c={c}"),
            T31Role::V => f.write_str("v"),
            T31Role::U => f.write_str("u"),
            T31Role::S => f.write_str("s"),
            T31Role::C { i } => write!(f, "c i={i}"),
            T31Role::R { i } => write!(f, "r i={i}"),
            T31Role::SVert { i } => write!(f, "s i={i}"),
            T31Role::T { i } => write!(f, "t i={i}"),
            T31Role::W { i, j } => write!(f, "w i={i} j={j}"),
            T31Role::CStar => f.write_str("cstar"),
            T31Role::RStar => f.write_str("rstar"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct T31Output {
    pub graph: PGraph,
    /// Canonical role of every vertex.
    pub roles: Vec<T31Role>,
    /// Extra names of identified vertices.
    pub aliases: Vec<(VertexId, T31Role)>,
    pub k: usize,
    pub cop_count: usize,
    pub initial_config: Configuration,
    pub instance: AbfInstance,
    /// Protection merges observed while building.
    pub merges: Vec<(VertexId, VertexId)>,
    lookup: HashMap<T31Role, VertexId>,
}

impl T31Output {
    /// Vertex carrying `role`, canonical or alias.
    pub fn vertex(&self, role: T31Role) -> Option<VertexId> {
        self.lookup.get(&role).copied()
    }

    fn at(&self, role: T31Role) -> VertexId {
        self.lookup[&role]
    }

    pub fn sidecar(&self) -> RoleSidecar {
        let cfg = &self.initial_config;
        RoleSidecar {
            roles: self
                .roles
                .iter()
                .enumerate()
                .map(|(id, r)| (id, r.to_string()))
                .collect(),
            aliases: self.aliases.iter().map(|&(id, r)| (id, r.to_string())).collect(),
            meta: vec![
                ("construction".into(), "abf-to-lcrp".into()),
                ("k".into(), self.k.to_string()),
                ("cops".into(), self.cop_count.to_string()),
                (
                    "initial".into(),
                    format!("cops={} robber={} turn=cops", cfg.cops, cfg.robber),
                ),
            ],
        }
    }
}

/// `3m + 12n + ℓ + 5 + 3k + k²` with `k = m + n + 2` and `ℓ` clauses.
pub fn expected_vertex_count(m: usize, n: usize, clauses: usize) -> usize {
    let k = m + n + 2;
    3 * m + 12 * n + clauses + 5 + 3 * k + k * k
}

struct Builder {
    graph: PGraph,
    roles: Vec<T31Role>,
    lookup: HashMap<T31Role, VertexId>,
    aliases: Vec<(VertexId, T31Role)>,
    merges: Vec<(VertexId, VertexId)>,
    /// Neighbours of the placeholder `h`.
    h: Vec<VertexId>,
}

impl Builder {
    fn vertex(&mut self, role: T31Role, p: Protection) -> VertexId {
        let id = self.graph.add_vertex(p);
        self.roles.push(role);
        self.lookup.insert(role, id);
        id
    }

    fn alias(&mut self, id: VertexId, role: T31Role) {
        self.aliases.push((id, role));
        self.lookup.insert(role, id);
    }

    fn id(&self, role: T31Role) -> VertexId {
        self.lookup[&role]
    }

    fn edge(&mut self, a: T31Role, b: T31Role, p: Protection) {
        let (u, v) = (self.id(a), self.id(b));
        self.edge_ids(u, v, p);
    }

    fn edge_ids(&mut self, u: VertexId, v: VertexId, p: Protection) {
        if self.graph.add_edge(u, v, p).expect("builder ids are valid") == EdgeInsert::Merged {
            self.merges.push((u.min(v), u.max(v)));
        }
    }

    fn add_to_h(&mut self, a: T31Role) {
        let id = self.id(a);
        self.h.push(id);
    }
}

pub fn build_t31(inst: &AbfInstance) -> Result<T31Output> {
    let (m, n) = (inst.num_x(), inst.num_y());
    if m + n == 0 {
        return Err(Error::InvalidArgument("instance has no variables".into()));
    }
    if inst.clauses().iter().any(|c| c.is_empty()) {
        return Err(Error::InvalidArgument("instance has an empty clause".into()));
    }
    if inst.eval_formula(inst.initial()) {
        return Err(Error::InvalidArgument(
            "formula is true under the initial assignment".into(),
        ));
    }
    let k = m + n + 2;
    let mut b = Builder {
        graph: PGraph::new(),
        roles: Vec::new(),
        lookup: HashMap::new(),
        aliases: Vec::new(),
        merges: Vec::new(),
        h: Vec::new(),
    };
    use T31Role::*;

    let var_role = |var: usize, pol: Pol| {
        if var < m {
            VarX { i: var + 1, pol }
        } else {
            VarY { j: var - m + 1, pol }
        }
    };

    // phase 1 vertices
    b.vertex(V, Unprotected);
    for i in 1..=m {
        b.vertex(VarX { i, pol: Pol::T }, Unprotected);
        b.vertex(VarX { i, pol: Pol::F }, Unprotected);
    }
    for j in 1..=n {
        b.vertex(VarY { j, pol: Pol::T }, Unprotected);
        b.vertex(VarY { j, pol: Pol::F }, Unprotected);
        b.vertex(YStar { j }, Unprotected);
        for pol in [Pol::T, Pol::F] {
            for primed in [false, true] {
                b.vertex(Primary { j, pol, primed }, Unprotected);
            }
        }
        for pol in [Pol::T, Pol::F] {
            for primed in [false, true] {
                b.vertex(Secondary { j, pol, primed }, Unprotected);
            }
        }
    }
    for var in 1..=m + n {
        b.vertex(Restriction { var }, Protected);
    }
    for c in 1..=inst.clauses().len() {
        b.vertex(Clause { c }, Protected);
    }
    b.vertex(U, Unprotected);
    b.vertex(S, Unprotected);

    // E-A
    for i in 1..=m {
        b.edge(VarX { i, pol: Pol::T }, VarX { i, pol: Pol::F }, Unprotected);
    }
    // E-B: the y gadget
    for j in 1..=n {
        let a = |pol, primed| Primary { j, pol, primed };
        let bb = |pol, primed| Secondary { j, pol, primed };
        let y = |pol| VarY { j, pol };
        let star = YStar { j };
        for pol in [Pol::T, Pol::F] {
            b.edge(V, a(pol, false), Unprotected);
            b.edge(V, a(pol, true), Unprotected);
            b.edge(a(pol, false), a(pol, true), Unprotected);
            b.edge(a(pol, false), bb(pol, false), Unprotected);
            b.edge(a(pol, true), bb(pol, true), Unprotected);
            b.edge(a(pol, false), y(pol), Unprotected);
            b.edge(a(pol, false), star, Unprotected);
            b.edge(a(pol, true), y(Pol::T), Unprotected);
            b.edge(a(pol, true), y(Pol::F), Unprotected);
            b.edge(bb(pol, false), star, Unprotected);
            b.edge(bb(pol, true), y(pol), Unprotected);
            b.edge(star, y(pol), Unprotected);
            b.add_to_h(bb(pol, false));
            b.add_to_h(bb(pol, true));
        }
        b.edge(V, star, Unprotected);
    }
    // E-C
    for var in 0..m + n {
        let uz = Restriction { var: var + 1 };
        b.add_to_h(uz);
        b.edge(uz, V, Unprotected);
        b.edge(uz, var_role(var, Pol::T), Unprotected);
        b.edge(uz, var_role(var, Pol::F), Unprotected);
    }
    // E-D
    for (ci, clause) in inst.clauses().iter().enumerate() {
        let uc = Clause { c: ci + 1 };
        b.add_to_h(uc);
        b.edge(uc, S, Unprotected);
        b.edge(uc, V, Unprotected);
        for lit in clause {
            b.edge(uc, var_role(lit.var, Pol::of(lit.positive)), Unprotected);
        }
    }
    b.add_to_h(U);
    b.edge(U, S, Unprotected);
    b.edge(U, V, Unprotected);
    // E-E, E-F
    for j in 1..=n {
        for pol in [Pol::T, Pol::F] {
            for primed in [false, true] {
                b.edge(U, Primary { j, pol, primed }, Unprotected);
                b.edge(U, Secondary { j, pol, primed }, Unprotected);
                for c in 1..=inst.clauses().len() {
                    b.edge(Clause { c }, Primary { j, pol, primed }, Unprotected);
                }
            }
        }
    }
    for var in 1..=m + n {
        b.edge(U, Restriction { var }, Unprotected);
    }

    // phase 2: reset gadget with identifications
    for i in 1..=k {
        if i == k - 1 {
            let u = b.id(U);
            b.alias(u, C { i });
        } else {
            b.vertex(C { i }, Unprotected);
        }
        b.vertex(R { i }, Protected);
        if i <= m + n {
            let var = i - 1;
            let id = b.id(var_role(var, Pol::of(inst.initial()[var])));
            b.alias(id, SVert { i });
        } else if i == k - 1 {
            let s = b.id(S);
            b.alias(s, SVert { i });
        } else {
            b.vertex(SVert { i }, Unprotected);
        }
        b.vertex(T { i }, Protected);
    }
    for i in 1..=k {
        for j in 1..=k {
            b.vertex(W { i, j }, Protected);
        }
    }
    for i in 1..=k {
        for j in i + 1..=k {
            b.edge(R { i }, R { i: j }, Protected); // E-I
        }
        b.edge(C { i }, R { i }, Unprotected);
    }
    // E-J
    for z in std::mem::take(&mut b.h) {
        for i in 1..=k {
            let r = b.id(R { i });
            b.edge_ids(z, r, Protected);
        }
    }
    for i in 1..=k {
        b.edge(C { i }, SVert { i }, Unprotected); // E-K
        b.edge(R { i }, SVert { i }, Protected); // E-L
        b.edge(SVert { i }, T { i }, Unprotected); // E-M
        for j in 1..=k {
            if i != j {
                b.edge(T { i }, R { i: j }, Protected); // E-N
            }
            b.edge(W { i, j }, SVert { i: j }, Unprotected); // E-O
            b.edge(W { i, j }, T { i: j }, Protected);
            for j2 in j + 1..=k {
                b.edge(W { i, j }, W { i, j: j2 }, Protected); // E-P
            }
        }
        // E-Q
        if i == 1 {
            b.edge(R { i: 1 }, W { i: 1, j: 2 }, Protected);
        } else {
            b.edge(R { i }, W { i, j: 1 }, Protected);
        }
        b.edge(W { i, j: k }, V, Protected); // E-R
    }
    // E-S
    for i in 1..k {
        for j in 1..=k {
            let target = match (i, j) {
                (1, 1) => W { i: 1, j: 3 },
                (2, 1) => W { i: 1, j: 1 },
                _ => W { i: j, j: i + 1 },
            };
            b.edge(C { i }, target, Unprotected);
        }
    }
    // E-T, E-U
    for c in 1..=inst.clauses().len() {
        b.edge(C { i: k }, Clause { c }, Unprotected);
    }
    b.edge(V, C { i: k }, Unprotected);

    // phase 3
    let cstar = b.vertex(CStar, Unprotected);
    let rstar = b.vertex(RStar, Protected);
    b.edge_ids(cstar, rstar, Unprotected);
    for var in 0..m + n {
        for pol in [Pol::T, Pol::F] {
            let z = b.id(var_role(var, pol));
            b.edge_ids(cstar, z, Unprotected);
        }
    }
    for j in 1..=n {
        let z = b.id(YStar { j });
        b.edge_ids(cstar, z, Unprotected);
    }
    for w in 0..b.graph.vertex_count() {
        if w != cstar && w != rstar {
            b.edge_ids(rstar, w, Protected);
        }
    }

    let mut cops: Vec<VertexId> = (1..=k).map(|i| b.id(SVert { i })).collect();
    cops.push(cstar);
    let initial_config = Configuration::new(cops, b.id(V), Turn::Cops);
    Ok(T31Output {
        graph: b.graph,
        roles: b.roles,
        aliases: b.aliases,
        k,
        cop_count: k + 1,
        initial_config,
        instance: inst.clone(),
        merges: b.merges,
        lookup: b.lookup,
    })
}

/// Robber on `v`, cops on `c^*`, `s_k`, `s`, and each variable's vertex for
/// its value in `assignment`; cops to move.
pub fn basic_configuration(out: &T31Output, assignment: &[bool]) -> Result<Configuration> {
    let inst = &out.instance;
    if assignment.len() != inst.num_vars() {
        return Err(Error::InvalidArgument(format!(
            "assignment has {} values, instance has {} variables",
            assignment.len(),
            inst.num_vars()
        )));
    }
    let m = inst.num_x();
    let mut cops: Vec<VertexId> = assignment
        .iter()
        .enumerate()
        .map(|(var, &val)| {
            let pol = Pol::of(val);
            out.at(if var < m {
                T31Role::VarX { i: var + 1, pol }
            } else {
                T31Role::VarY { j: var - m + 1, pol }
            })
        })
        .collect();
    cops.push(out.at(T31Role::S));
    cops.push(out.at(T31Role::SVert { i: out.k }));
    cops.push(out.at(T31Role::CStar));
    Ok(Configuration::new(cops, out.at(T31Role::V), Turn::Cops))
}

/// Vertices that defend `x`, including `x` itself when its loop is unprotected.
fn defenders(g: &PGraph, x: VertexId) -> Vec<VertexId> {
    let mut d: Vec<VertexId> = g
        .closed_neighborhood(x)
        .into_iter()
        .filter(|&p| g.protection(p, x) == Some(Unprotected))
        .collect();
    d.sort_unstable();
    d
}

/// Checks the defender-set facts the correctness argument relies on;
/// returns one line per violation.
pub fn check_claim_structure(out: &T31Output) -> Vec<String> {
    use T31Role::*;
    let g = &out.graph;
    let inst = &out.instance;
    let (m, n) = (inst.num_x(), inst.num_y());
    let k = out.k;
    let mut violations = Vec::new();
    let name = |ids: &[VertexId]| {
        ids.iter()
            .map(|&id| out.roles[id].to_string())
            .collect::<Vec<_>>()
            .join(", ")
    };
    let mut expect_defenders = |what: String, x: VertexId, mut want: Vec<VertexId>| {
        want.sort_unstable();
        want.dedup();
        let got = defenders(g, x);
        if got != want {
            violations.push(format!(
                "{what}: defenders of {} are {{{}}}, expected {{{}}}",
                out.roles[x],
                name(&got),
                name(&want)
            ));
        }
    };

    let primaries: Vec<VertexId> = (1..=n)
        .flat_map(|j| {
            [(Pol::T, false), (Pol::T, true), (Pol::F, false), (Pol::F, true)]
                .map(|(pol, primed)| out.at(Primary { j, pol, primed }))
        })
        .collect();

    // secondary robber vertices
    for j in 1..=n {
        for pol in [Pol::T, Pol::F] {
            let a = |primed| out.at(Primary { j, pol, primed });
            let bv = |primed| out.at(Secondary { j, pol, primed });
            expect_defenders(
                "secondary".into(),
                bv(false),
                vec![a(false), bv(false), out.at(YStar { j }), out.at(U)],
            );
            expect_defenders(
                "secondary".into(),
                bv(true),
                vec![a(true), bv(true), out.at(VarY { j, pol }), out.at(U)],
            );
        }
    }

    // clause vertices
    for (ci, clause) in inst.clauses().iter().enumerate() {
        let mut want = vec![out.at(S), out.at(V), out.at(C { i: k })];
        want.extend(&primaries);
        for lit in clause {
            let pol = Pol::of(lit.positive);
            want.push(out.at(if lit.var < m {
                VarX { i: lit.var + 1, pol }
            } else {
                VarY { j: lit.var - m + 1, pol }
            }));
        }
        expect_defenders("clause".into(), out.at(Clause { c: ci + 1 }), want);
    }

    // reset rows
    for l in 2..=k {
        expect_defenders(
            "reset row".into(),
            out.at(W { i: l, j: 1 }),
            vec![out.at(SVert { i: 1 })],
        );
    }

    // undefended part of N[v] in every basic configuration
    let v = out.at(V);
    for mask in 0u64..(1u64 << (m + n)) {
        let assignment: Vec<bool> = (0..m + n).map(|b| mask >> b & 1 == 1).collect();
        let cfg = basic_configuration(out, &assignment).expect("assignment length matches");
        let mut got: Vec<VertexId> = g
            .closed_neighborhood(v)
            .into_iter()
            .filter(|&x| !defended(g, &cfg.cops, x))
            .collect();
        got.sort_unstable();
        let mut want = vec![v];
        for j in 1..=n {
            let pol = if assignment[m + j - 1] { Pol::F } else { Pol::T };
            want.push(out.at(Primary { j, pol, primed: false }));
        }
        want.sort_unstable();
        if got != want {
            violations.push(format!(
                "home neighbourhood under {}: undefended {{{}}}, expected {{{}}}",
                assignment.iter().map(|&b| if b { '1' } else { '0' }).collect::<String>(),
                name(&got),
                name(&want)
            ));
        }
    }

    let expected = expected_vertex_count(m, n, inst.clauses().len());
    if g.vertex_count() != expected {
        violations.push(format!(
            "vertex count {} != 3m + 12n + l + 5 + 3k + k^2 = {expected}",
            g.vertex_count()
        ));
    }
    violations
}
