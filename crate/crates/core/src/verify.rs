//! Oracles and suites used to check the solver and the two constructions.
//!
//! The oracles here never touch the solver's region code: they work on
//! [`Configuration`] values through the plain move functions of
//! [`crate::game`].

use std::collections::HashMap;
use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::abf::{AbfInstance, Literal};
use crate::error::{Error, Result};
use crate::game::{
    capture_now, cop_successors, robber_successors, Configuration, CopPositions, Turn, Variant,
};
use crate::graph::{PGraph, Protection, VertexId};
use crate::reduce::{
    build_t22, build_t31, check_claim_structure, check_t22_structure, Pol, T22Role, T31Output,
    T31Role,
};
use crate::solver::{decide, Winner};

/// Seeded random reflexive graph: each pair is an edge with probability
/// `edge_prob`; each vertex and edge is protected with probability
/// `prot_prob`.
pub fn random_instance(seed: u64, n: usize, edge_prob: f64, prot_prob: f64) -> PGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = PGraph::new();
    for _ in 0..n {
        let p = if rng.gen_bool(prot_prob) {
            Protection::Protected
        } else {
            Protection::Unprotected
        };
        g.add_vertex(p);
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(edge_prob) {
                let p = if rng.gen_bool(prot_prob) {
                    Protection::Protected
                } else {
                    Protection::Unprotected
                };
                g.add_edge(u, v, p).expect("ids in range");
            }
        }
    }
    g
}

/// Largest configuration count the minimax oracle accepts.
pub const ORACLE_CAP: usize = 1 << 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleVerdict {
    CopsWin,
    RobberWins,
    /// The depth bound ran out before the search became exhaustive.
    Inconclusive,
}

impl OracleVerdict {
    pub fn winner(self) -> Option<Winner> {
        match self {
            OracleVerdict::CopsWin => Some(Winner::CopsWin),
            OracleVerdict::RobberWins => Some(Winner::RobberWins),
            OracleVerdict::Inconclusive => None,
        }
    }
}

fn multisets(n: usize, k: usize) -> Vec<CopPositions> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<VertexId>, out: &mut Vec<CopPositions>) {
        if cur.len() == k {
            out.push(CopPositions::new(cur.clone()));
            return;
        }
        for v in start..n {
            cur.push(v);
            go(n, k, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Depth-bounded minimax. `depth` caps the number of cop turns; `None` uses
/// the number of configurations, which makes the answer exact.
///
/// Values are tabulated level by level: level `d` holds, for every cop-turn
/// configuration, whether the cops force capture within `d` cop turns. Once
/// two levels agree, deeper levels cannot change and the verdict is exact
/// whatever the remaining bound.
pub fn bounded_minimax(
    g: &PGraph,
    variant: Variant,
    k: usize,
    depth: Option<usize>,
) -> Result<OracleVerdict> {
    if k == 0 || g.is_empty() {
        return Err(Error::InvalidArgument("need cops and vertices".into()));
    }
    let n = g.vertex_count();
    let placements = multisets(n, k);
    let count = placements.len() * n * 2;
    if count > ORACLE_CAP {
        return Err(Error::Capacity {
            total: count as u128,
            multisets: placements.len() as u128,
            vertices: n,
            cap: ORACLE_CAP as u64,
        });
    }
    let depth = depth.unwrap_or(count);
    let index: HashMap<&CopPositions, usize> =
        placements.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let moves: Vec<Vec<usize>> = placements
        .iter()
        .map(|p| {
            cop_successors(g, variant, p)
                .iter()
                .map(|q| index[q])
                .collect()
        })
        .collect();
    let robber_moves: Vec<Vec<VertexId>> = g.vertices().map(|v| robber_successors(g, v)).collect();
    let at = |p: usize, r: VertexId| p * n + r;
    let config = |p: usize, r: VertexId, turn| Configuration {
        cops: placements[p].clone(),
        robber: r,
        turn,
    };
    let caught_cop_turn: Vec<bool> = (0..placements.len())
        .flat_map(|p| (0..n).map(move |r| (p, r)))
        .map(|(p, r)| capture_now(g, variant, &config(p, r, Turn::Cops)))
        .collect();
    let caught_robber_turn: Vec<bool> = (0..placements.len())
        .flat_map(|p| (0..n).map(move |r| (p, r)))
        .map(|(p, r)| capture_now(g, variant, &config(p, r, Turn::Robber)))
        .collect();

    let mut level = caught_cop_turn.clone();
    let mut exact = false;
    for _ in 0..depth {
        let next: Vec<bool> = (0..placements.len())
            .flat_map(|p| (0..n).map(move |r| (p, r)))
            .map(|(p, r)| {
                caught_cop_turn[at(p, r)]
                    || moves[p].iter().any(|&q| {
                        caught_robber_turn[at(q, r)]
                            || robber_moves[r].iter().all(|&r2| level[at(q, r2)])
                    })
            })
            .collect();
        if next == level {
            exact = true;
            break;
        }
        level = next;
    }

    let placement_wins = |p: usize| {
        (0..n).all(|v| (variant == Variant::Cr && placements[p].contains(v)) || level[at(p, v)])
    };
    Ok(if (0..placements.len()).any(placement_wins) {
        OracleVerdict::CopsWin
    } else if exact || depth >= count {
        OracleVerdict::RobberWins
    } else {
        OracleVerdict::Inconclusive
    })
}

/// Whether `g` reduces to one vertex by repeatedly deleting a vertex whose
/// closed neighbourhood is contained in another's. Protection is ignored.
pub fn dismantlable(g: &PGraph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return false;
    }
    let mut alive = vec![true; n];
    let mut remaining = n;
    let closed: Vec<Vec<VertexId>> = g.vertices().map(|v| g.closed_neighborhood(v)).collect();
    'outer: while remaining > 1 {
        for u in 0..n {
            if !alive[u] {
                continue;
            }
            for &v in &closed[u] {
                if v != u
                    && alive[v]
                    && closed[u]
                        .iter()
                        .all(|&w| !alive[w] || g.is_adjacent(v, w))
                {
                    alive[u] = false;
                    remaining -= 1;
                    continue 'outer;
                }
            }
        }
        return false;
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialRecord {
    /// Enough to regenerate the instance.
    pub fingerprint: String,
    pub expected: String,
    pub got: String,
    pub matched: bool,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub trials: Vec<TrialRecord>,
    /// Structural check failures, prefixed by the fingerprint.
    pub violations: Vec<String>,
    /// Per-trial errors (for example capacity), prefixed by the fingerprint.
    pub errors: Vec<String>,
}

impl VerifyReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &TrialRecord> {
        self.trials.iter().filter(|t| !t.matched)
    }

    pub fn passed(&self) -> bool {
        self.mismatches().next().is_none() && self.violations.is_empty() && self.errors.is_empty()
    }

    pub fn total_elapsed(&self) -> Duration {
        self.trials.iter().map(|t| t.elapsed).sum()
    }
}

/// Text form without timings, so that reruns print identical bytes.
impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.trials {
            writeln!(
                f,
                "trial {} {} {} {}",
                t.fingerprint,
                t.expected,
                t.got,
                if t.matched { "MATCH" } else { "MISMATCH" }
            )?;
        }
        for v in &self.violations {
            writeln!(f, "violation {v}")?;
        }
        for e in &self.errors {
            writeln!(f, "error {e}")?;
        }
        write!(
            f,
            "summary trials={} mismatches={} violations={} errors={} {}",
            self.trials.len(),
            self.mismatches().count(),
            self.violations.len(),
            self.errors.len(),
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum T22Fault {
    /// Flip the protection of one branch-clique to `G_R` edge.
    FlipCopRobberEdge,
    /// Delete one edge at `ω`.
    DropOmegaEdge,
    /// Delete the edge from `r_1` to one 1-vertex.
    DropResetEdge,
}

impl T22Fault {
    pub const ALL: [T22Fault; 3] = [
        T22Fault::FlipCopRobberEdge,
        T22Fault::DropOmegaEdge,
        T22Fault::DropResetEdge,
    ];
}

#[derive(Clone, Debug)]
pub struct T22Params {
    pub trials: usize,
    pub min_n: usize,
    pub max_n: usize,
    pub k: usize,
    pub seed: u64,
    pub edge_prob: f64,
    pub prot_prob: f64,
    pub fault: Option<T22Fault>,
}

impl Default for T22Params {
    fn default() -> Self {
        T22Params {
            trials: 200,
            min_n: 2,
            max_n: 6,
            k: 2,
            seed: 1,
            edge_prob: 0.5,
            prot_prob: 0.3,
            fault: None,
        }
    }
}

/// Applies `fault` to a `k >= 2` construction; returns false if it does not
/// apply.
pub fn inject_t22_fault(out: &mut crate::reduce::ReductionOutput, fault: T22Fault) -> bool {
    let find = |role: T22Role| out.roles.iter().position(|&r| r == role);
    let g = &mut out.graph;
    match fault {
        T22Fault::FlipCopRobberEdge => {
            let (Some(c), Some(r)) = (find(T22Role::Branch { v: 0, i: 1 }), find(T22Role::Gr { v: 0 }))
            else {
                return false;
            };
            let flipped = match g.protection(c, r) {
                Some(Protection::Protected) => Protection::Unprotected,
                _ => Protection::Protected,
            };
            g.set_protection(c, r, flipped).is_ok()
        }
        T22Fault::DropOmegaEdge => {
            let (Some(o), Some(r)) = (find(T22Role::Omega), find(T22Role::Gr { v: 0 })) else {
                return false;
            };
            g.remove_edge(o, r).unwrap_or(false)
        }
        T22Fault::DropResetEdge => {
            let (Some(r), Some(c)) = (find(T22Role::Reset { i: 1 }), find(T22Role::Branch { v: 0, i: 1 }))
            else {
                return false;
            };
            g.remove_edge(r, c).unwrap_or(false)
        }
    }
}

fn verdict(w: Winner) -> String {
    w.verdict().to_string()
}

pub fn run_t22_suite(params: &T22Params) -> VerifyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut report = VerifyReport::default();
    for _ in 0..params.trials {
        let n = rng.gen_range(params.min_n..=params.max_n);
        let seed: u64 = rng.gen();
        let fp = format!(
            "t22:seed={seed}:n={n}:k={}:pe={}:pp={}",
            params.k, params.edge_prob, params.prot_prob
        );
        let g = random_instance(seed, n, params.edge_prob, params.prot_prob);
        let start = Instant::now();
        let mut out = match build_t22(&g, params.k) {
            Ok(o) => o,
            Err(e) => {
                report.errors.push(format!("{fp} {e}"));
                continue;
            }
        };
        if let Some(fault) = params.fault {
            inject_t22_fault(&mut out, fault);
        }
        if params.k >= 2 {
            match check_t22_structure(&out, &g, params.k) {
                Ok(v) => report.violations.extend(v.into_iter().map(|v| format!("{fp} {v}"))),
                Err(e) => report.errors.push(format!("{fp} {e}")),
            }
        }
        let lhs = decide(&g, Variant::Lcrp, params.k);
        let rhs = decide(&out.graph, Variant::Crp, params.k);
        match (lhs, rhs) {
            (Ok(a), Ok(b)) => report.trials.push(TrialRecord {
                fingerprint: fp,
                expected: verdict(a),
                got: verdict(b),
                matched: a == b,
                elapsed: start.elapsed(),
            }),
            (Err(e), _) | (_, Err(e)) => report.errors.push(format!("{fp} {e}")),
        }
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum T31Fault {
    /// Delete `b_1^T u`.
    DropSecondaryGuard,
    /// Delete `a_1'^T y_1^F` from the y gadget.
    DropGadgetEdge,
    /// Delete `c_k u_{C_1}`.
    DropClauseGuard,
    /// Delete `s_1 w_{2,1}`.
    DropResetRowEdge,
}

impl T31Fault {
    pub const ALL: [T31Fault; 4] = [
        T31Fault::DropSecondaryGuard,
        T31Fault::DropGadgetEdge,
        T31Fault::DropClauseGuard,
        T31Fault::DropResetRowEdge,
    ];
}

/// Applies `fault`; returns false if the instance lacks the relevant
/// vertices.
pub fn inject_t31_fault(out: &mut T31Output, fault: T31Fault) -> bool {
    use T31Role::*;
    let pair = match fault {
        T31Fault::DropSecondaryGuard => (
            out.vertex(Secondary { j: 1, pol: Pol::T, primed: false }),
            out.vertex(U),
        ),
        T31Fault::DropGadgetEdge => (
            out.vertex(Primary { j: 1, pol: Pol::T, primed: true }),
            out.vertex(VarY { j: 1, pol: Pol::F }),
        ),
        T31Fault::DropClauseGuard => (out.vertex(C { i: out.k }), out.vertex(Clause { c: 1 })),
        T31Fault::DropResetRowEdge => (out.vertex(SVert { i: 1 }), out.vertex(W { i: 2, j: 1 })),
    };
    match pair {
        (Some(a), Some(b)) => out.graph.remove_edge(a, b).unwrap_or(false),
        _ => false,
    }
}

/// Every instance with `m` x- and `n` y-variables, between 1 and
/// `max_clauses` distinct clauses (nonempty literal sets), and an initial
/// assignment under which the formula is false. Deterministic order.
pub fn t31_family(m: usize, n: usize, max_clauses: usize) -> Vec<AbfInstance> {
    let vars = m + n;
    let lits: Vec<Literal> = (0..vars)
        .flat_map(|v| [Literal::pos(v), Literal::neg(v)])
        .collect();
    let clauses: Vec<Vec<Literal>> = (1u32..1 << lits.len())
        .map(|mask| {
            lits.iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &l)| l)
                .collect()
        })
        .collect();
    let mut formulas: Vec<Vec<Vec<Literal>>> = Vec::new();
    fn choose(
        from: usize,
        left: usize,
        pool: &[Vec<Literal>],
        cur: &mut Vec<Vec<Literal>>,
        out: &mut Vec<Vec<Vec<Literal>>>,
    ) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if left == 0 {
            return;
        }
        for i in from..pool.len() {
            cur.push(pool[i].clone());
            choose(i + 1, left - 1, pool, cur, out);
            cur.pop();
        }
    }
    choose(0, max_clauses, &clauses, &mut Vec::new(), &mut formulas);
    formulas.sort_by_key(|f| f.len());

    let mut out = Vec::new();
    for phi in formulas {
        for mask in 0u32..1 << vars {
            let init: Vec<bool> = (0..vars).map(|b| mask >> b & 1 == 1).collect();
            let inst = AbfInstance::new(m, n, init, phi.clone()).expect("family is well formed");
            if !inst.eval_formula(inst.initial()) {
                out.push(inst);
            }
        }
    }
    out
}

/// Short regenerable name of an ABF instance.
pub fn abf_fingerprint(inst: &AbfInstance) -> String {
    let init: String = inst
        .initial()
        .iter()
        .map(|&b| if b { '1' } else { '0' })
        .collect();
    let phi: Vec<String> = inst
        .clauses()
        .iter()
        .map(|c| {
            c.iter()
                .map(|l| l.to_dimacs().to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect();
    format!(
        "t31:m={}:n={}:init={init}:phi={}",
        inst.num_x(),
        inst.num_y(),
        phi.join("/")
    )
}

#[derive(Clone, Debug, Default)]
pub struct T31Params {
    pub instances: Vec<AbfInstance>,
    pub fault: Option<T31Fault>,
}

impl T31Params {
    /// Both single-variable families with up to two clauses.
    pub fn micro() -> Self {
        let mut instances = t31_family(1, 0, 2);
        instances.extend(t31_family(0, 1, 2));
        T31Params {
            instances,
            fault: None,
        }
    }

    /// `(x_1) ∧ (y_1)` with both variables initially false.
    pub fn stretch() -> Self {
        let inst = AbfInstance::new(
            1,
            1,
            vec![false, false],
            vec![vec![Literal::pos(0)], vec![Literal::pos(1)]],
        )
        .expect("well formed");
        T31Params {
            instances: vec![inst],
            fault: None,
        }
    }
}

pub fn run_t31_suite(params: &T31Params) -> VerifyReport {
    let mut report = VerifyReport::default();
    for inst in &params.instances {
        let fp = abf_fingerprint(inst);
        let start = Instant::now();
        let mut out = match build_t31(inst) {
            Ok(o) => o,
            Err(e) => {
                report.errors.push(format!("{fp} {e}"));
                continue;
            }
        };
        if let Some(fault) = params.fault {
            inject_t31_fault(&mut out, fault);
        }
        report
            .violations
            .extend(check_claim_structure(&out).into_iter().map(|v| format!("{fp} {v}")));
        let a_wins = inst.decide_a_wins();
        match decide(&out.graph, Variant::Lcrp, out.cop_count) {
            Ok(w) => report.trials.push(TrialRecord {
                fingerprint: fp,
                expected: if a_wins { "A-WINS" } else { "B-WINS" }.into(),
                got: verdict(w),
                matched: a_wins == (w == Winner::CopsWin),
                elapsed: start.elapsed(),
            }),
            Err(e) => report.errors.push(format!("{fp} {e}")),
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;
    use crate::solver::compute_region;
    use proptest::prelude::*;

    #[test]
    fn random_instance_examples() {
        assert_eq!(random_instance(9, 6, 0.5, 0.3), random_instance(9, 6, 0.5, 0.3));
        let g = random_instance(3, 5, 1.0, 0.0);
        assert_eq!(g, families::complete(5));
        let g = random_instance(3, 5, 0.0, 0.5);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.vertex_count(), 5);
    }

    #[test]
    fn minimax_examples() {
        assert_eq!(
            bounded_minimax(&families::path(3), Variant::Cr, 1, None).unwrap(),
            OracleVerdict::CopsWin
        );
        assert_eq!(
            bounded_minimax(&families::cycle(4), Variant::Cr, 1, None).unwrap(),
            OracleVerdict::RobberWins
        );
        assert_eq!(
            bounded_minimax(&families::cycle(4), Variant::Cr, 2, None).unwrap(),
            OracleVerdict::CopsWin
        );
        assert_eq!(
            bounded_minimax(&families::petersen(), Variant::Cr, 2, None).unwrap(),
            OracleVerdict::RobberWins
        );
    }

    #[test]
    fn shallow_minimax_is_inconclusive_not_robber() {
        // P_5 with one cop needs more than one cop turn from any placement.
        let g = families::path(5);
        assert_eq!(
            bounded_minimax(&g, Variant::Cr, 1, Some(1)).unwrap(),
            OracleVerdict::Inconclusive
        );
        assert_eq!(
            bounded_minimax(&g, Variant::Cr, 1, None).unwrap(),
            OracleVerdict::CopsWin
        );
    }

    #[test]
    fn minimax_capacity() {
        assert!(matches!(
            bounded_minimax(&families::complete(60), Variant::Cr, 4, None),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn dismantlable_examples() {
        assert!(dismantlable(&families::path(4)));
        assert!(!dismantlable(&families::cycle(4)));
        assert!(!dismantlable(&families::petersen()));
        assert!(dismantlable(&families::complete(4)));
        assert!(dismantlable(&PGraph::with_vertices(1, Protection::Protected)));
        assert!(!dismantlable(&PGraph::with_vertices(2, Protection::Unprotected)));
    }

    #[test]
    fn solver_agrees_with_minimax() {
        for seed in 0..60u64 {
            let n = 1 + seed as usize % 5;
            let g = random_instance(seed, n, 0.5, 0.3);
            for variant in Variant::ALL {
                for k in 1..=2 {
                    let oracle = bounded_minimax(&g, variant, k, None).unwrap();
                    assert_eq!(
                        oracle.winner(),
                        Some(decide(&g, variant, k).unwrap()),
                        "seed {seed} {variant} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn c4_two_cops_capture_within_four_turns() {
        let g = families::cycle(4);
        let w = compute_region(&g, Variant::Cr, 2).unwrap();
        let cops = w.winning_placement().unwrap();
        for r in g.vertices() {
            if cops.contains(r) {
                continue;
            }
            let start = Configuration {
                cops: cops.clone(),
                robber: r,
                turn: Turn::Cops,
            };
            assert!(w.rank_of(&start).unwrap() <= 4);
            let t = w.extract_trace(&start, 32).unwrap();
            assert!(t.captured && t.cop_turns <= 4);
        }
    }

    #[test]
    fn micro_family_size() {
        assert_eq!(t31_family(1, 0, 2).len(), 6);
        assert_eq!(t31_family(0, 1, 2).len(), 6);
        for inst in T31Params::micro().instances {
            assert!(!inst.eval_formula(inst.initial()));
        }
    }

    #[test]
    fn t22_suite_small() {
        let report = run_t22_suite(&T22Params {
            trials: 8,
            max_n: 4,
            ..T22Params::default()
        });
        assert!(report.passed(), "{report}");
        let text = report.to_string();
        assert_eq!(text.lines().count(), 9);
        assert!(text.lines().last().unwrap().starts_with("summary trials=8"));
    }

    #[test]
    fn t22_faults_are_detected() {
        for fault in T22Fault::ALL {
            let report = run_t22_suite(&T22Params {
                trials: 3,
                max_n: 3,
                fault: Some(fault),
                ..T22Params::default()
            });
            assert!(!report.passed(), "{fault:?} went unnoticed");
        }
    }

    #[test]
    fn t31_faults_are_detected_structurally() {
        let inst = AbfInstance::new(0, 1, vec![false], vec![vec![Literal::pos(0)]]).unwrap();
        for fault in T31Fault::ALL {
            let mut out = build_t31(&inst).unwrap();
            assert!(inject_t31_fault(&mut out, fault), "{fault:?}");
            assert!(!check_claim_structure(&out).is_empty(), "{fault:?}");
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn k1_characterization(seed in any::<u64>(), n in 1usize..=7) {
            let g = random_instance(seed, n, 0.5, 0.0);
            prop_assert_eq!(
                dismantlable(&g),
                decide(&g, Variant::Cr, 1).unwrap() == Winner::CopsWin
            );
        }

        #[test]
        fn monotone_in_cops(seed in any::<u64>(), n in 1usize..=5) {
            let g = random_instance(seed, n, 0.5, 0.3);
            for variant in Variant::ALL {
                if decide(&g, variant, 1).unwrap() == Winner::CopsWin {
                    prop_assert_eq!(decide(&g, variant, 2).unwrap(), Winner::CopsWin);
                }
            }
        }

        #[test]
        fn lazy_win_implies_protected_win(seed in any::<u64>(), n in 1usize..=5) {
            let g = random_instance(seed, n, 0.5, 0.3);
            if decide(&g, Variant::Lcrp, 2).unwrap() == Winner::CopsWin {
                prop_assert_eq!(decide(&g, Variant::Crp, 2).unwrap(), Winner::CopsWin);
            }
        }

        #[test]
        fn classic_matches_protected_without_protection(seed in any::<u64>(), n in 1usize..=5) {
            let g = random_instance(seed, n, 0.5, 0.0);
            for k in 1..=2 {
                prop_assert_eq!(decide(&g, Variant::Cr, k).unwrap(), decide(&g, Variant::Crp, k).unwrap());
            }
        }
    }
}
