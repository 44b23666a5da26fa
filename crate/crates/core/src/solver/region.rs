//! Backward attractor computation for the cops' reachability objective.
//!
//! Every robber-turn configuration keeps a counter of robber replies that are
//! not yet known to be lost for the robber. The worklist is seeded with the
//! capture configurations and processed in nondecreasing rank order:
//!
//! * a won cop-turn configuration `(P, r)` decrements the counters of the
//!   robber-turn configurations `(P, r')` with `r' ∈ N[r]`; a counter that
//!   reaches zero makes `(P, r')` won with the same rank;
//! * a won robber-turn configuration `(P, r)` makes every cop-turn
//!   configuration `(Q, r)` with `Q` one cop move away from `P` won with rank
//!   one higher (the cop move relation is symmetric, so predecessors are
//!   enumerated as successors).
//!
//! Ranks count cop turns until capture. Under `Cr` a capture configuration
//! (robber co-located with a cop) has rank 0; under `Crp`/`Lcrp` a capture
//! configuration still needs the capturing traversal and has rank 1.

use crate::error::{Error, Result};
use crate::game::{Configuration, CopPositions, MoveTables, Turn, Variant};
use crate::graph::{PGraph, VertexId};

use super::space::{ConfigSpace, DEFAULT_CAP};
use super::Winner;

/// Budget (in stored `u32` entries) for caching the simultaneous cop move
/// relation; above it moves are regenerated on demand.
const MOVE_CACHE_LIMIT: u64 = 1 << 26;

#[derive(Clone, Debug)]
pub struct SolverOptions {
    /// Maximum number of configurations; larger spaces fail with
    /// [`Error::Capacity`].
    pub cap: u64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { cap: DEFAULT_CAP }
    }
}

#[derive(Clone, Debug)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn new(len: u64) -> Self {
        BitSet(vec![0; len.div_ceil(64) as usize])
    }

    #[inline]
    fn get(&self, i: u64) -> bool {
        self.0[(i >> 6) as usize] >> (i & 63) & 1 == 1
    }

    #[inline]
    fn set(&mut self, i: u64) {
        self.0[(i >> 6) as usize] |= 1 << (i & 63);
    }

    fn count(&self) -> u64 {
        self.0.iter().map(|w| w.count_ones() as u64).sum()
    }
}

/// Cop-winning configurations with their capture distances.
#[derive(Clone, Debug)]
pub struct WinRegion {
    variant: Variant,
    space: ConfigSpace,
    tables: MoveTables,
    member: BitSet,
    rank: Vec<u16>,
}

/// Cop move relation over multiset ranks.
enum CopMoves {
    Cached { offsets: Vec<u64>, targets: Vec<u32> },
    OnDemand { stamp: Vec<u32>, epoch: u32 },
}

struct MoveSource<'a> {
    variant: Variant,
    space: &'a ConfigSpace,
    tables: &'a MoveTables,
    moves: CopMoves,
    buf: Vec<u32>,
    scratch: Vec<u64>,
}

impl<'a> MoveSource<'a> {
    fn new(variant: Variant, space: &'a ConfigSpace, tables: &'a MoveTables) -> Self {
        let mut src = MoveSource {
            variant,
            space,
            tables,
            moves: CopMoves::OnDemand {
                stamp: Vec::new(),
                epoch: 0,
            },
            buf: vec![0; space.cop_count()],
            scratch: Vec::new(),
        };
        if variant != Variant::Lcrp && space.cop_count() > 1 {
            src.moves = CopMoves::OnDemand {
                stamp: vec![0; space.multiset_count() as usize],
                epoch: 0,
            };
            if let Some(cached) = src.build_cache() {
                src.moves = cached;
            }
        }
        src
    }

    fn build_cache(&mut self) -> Option<CopMoves> {
        let m = self.space.multiset_count();
        let mut offsets = Vec::with_capacity(m as usize + 1);
        let mut targets: Vec<u32> = Vec::new();
        offsets.push(0);
        for p in 0..m {
            let out = self.generate(p);
            targets.extend(out.iter().map(|&q| q as u32));
            if targets.len() as u64 > MOVE_CACHE_LIMIT {
                return None;
            }
            offsets.push(targets.len() as u64);
        }
        Some(CopMoves::Cached { offsets, targets })
    }

    /// Distinct cop multiset ranks one cop turn away from multiset `p`.
    fn generate(&mut self, p: u64) -> &[u64] {
        self.space.unrank_cops(p, &mut self.buf);
        self.scratch.clear();
        let space = self.space;
        let scratch = &mut self.scratch;
        match &mut self.moves {
            CopMoves::OnDemand { stamp, epoch } if !stamp.is_empty() => {
                *epoch = epoch.wrapping_add(1);
                if *epoch == 0 {
                    stamp.iter_mut().for_each(|s| *s = 0);
                    *epoch = 1;
                }
                let e = *epoch;
                self.tables
                    .for_each_cop_move(self.variant, &self.buf, &mut |t| {
                        let q = space.rank_cops(t);
                        if stamp[q as usize] != e {
                            stamp[q as usize] = e;
                            scratch.push(q);
                        }
                    });
            }
            _ => {
                // lazy moves (or a single cop) never repeat a tuple
                self.tables
                    .for_each_cop_move(self.variant, &self.buf, &mut |t| {
                        scratch.push(space.rank_cops(t));
                    });
            }
        }
        &self.scratch
    }

    fn for_each(&mut self, p: u64, f: &mut impl FnMut(u64)) {
        if let CopMoves::Cached { offsets, targets } = &self.moves {
            let (a, b) = (offsets[p as usize] as usize, offsets[p as usize + 1] as usize);
            for &q in &targets[a..b] {
                f(q as u64);
            }
            return;
        }
        for &q in self.generate(p) {
            f(q);
        }
    }
}

pub fn compute_region(g: &PGraph, variant: Variant, k: usize) -> Result<WinRegion> {
    compute_region_with(g, variant, k, &SolverOptions::default())
}

pub fn compute_region_with(
    g: &PGraph,
    variant: Variant,
    k: usize,
    opts: &SolverOptions,
) -> Result<WinRegion> {
    // worklist entries are u32 configuration indices
    let space = ConfigSpace::new(g.vertex_count(), k, opts.cap.min(u32::MAX as u64))?;
    let tables = MoveTables::new(g);
    let n = space.vertex_count();
    let total = space.total();
    let mut member = BitSet::new(total);
    let mut rank = vec![0u16; total as usize];
    // remaining robber replies per robber-turn configuration, indexed by idx / 2
    let mut pending: Vec<u16> = Vec::with_capacity((total / 2) as usize);
    let closed_sizes: Vec<u16> = (0..n)
        .map(|v| {
            u16::try_from(tables.closed(v as u32).len())
                .map_err(|_| Error::InvalidArgument("vertex degree exceeds 65534".into()))
        })
        .collect::<Result<_>>()?;

    let base_rank: u16 = if variant == Variant::Cr { 0 } else { 1 };
    let mut layer: Vec<u32> = Vec::new();
    let mut buf = vec![0u32; k];
    for p in 0..space.multiset_count() {
        space.unrank_cops(p, &mut buf);
        for r in 0..n as u32 {
            pending.push(closed_sizes[r as usize]);
            for turn in [Turn::Cops, Turn::Robber] {
                if tables.capture_now(variant, &buf, r, turn) {
                    let idx = space.index(p, r, turn);
                    member.set(idx);
                    rank[idx as usize] = base_rank;
                    layer.push(idx as u32);
                }
            }
        }
    }

    let mut moves = MoveSource::new(variant, &space, &tables);
    let mut current = base_rank;
    let mut next: Vec<u32> = Vec::new();
    while !layer.is_empty() {
        let mut head = 0;
        while head < layer.len() {
            let idx = layer[head] as u64;
            head += 1;
            let (p, r, turn) = space.split(idx);
            match turn {
                Turn::Cops => {
                    for &r2 in tables.closed(r) {
                        let pred = space.index(p, r2, Turn::Robber);
                        if member.get(pred) {
                            continue;
                        }
                        let slot = &mut pending[(pred >> 1) as usize];
                        *slot -= 1;
                        if *slot == 0 {
                            member.set(pred);
                            rank[pred as usize] = current;
                            layer.push(pred as u32);
                        }
                    }
                }
                Turn::Robber => {
                    let nr = current.checked_add(1).ok_or_else(|| {
                        Error::InvalidArgument("capture distance exceeds 65535 cop turns".into())
                    })?;
                    moves.for_each(p, &mut |q| {
                        let pred = space.index(q, r, Turn::Cops);
                        if !member.get(pred) {
                            member.set(pred);
                            rank[pred as usize] = nr;
                            next.push(pred as u32);
                        }
                    });
                }
            }
        }
        layer.clear();
        std::mem::swap(&mut layer, &mut next);
        current = current.saturating_add(1);
    }
    drop(moves);

    Ok(WinRegion {
        variant,
        space,
        tables,
        member,
        rank,
    })
}

impl WinRegion {
    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn space(&self) -> &ConfigSpace {
        &self.space
    }

    pub(crate) fn tables(&self) -> &MoveTables {
        &self.tables
    }

    pub fn len(&self) -> u64 {
        self.member.count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains_index(&self, idx: u64) -> bool {
        self.member.get(idx)
    }

    pub fn rank_of_index(&self, idx: u64) -> Option<u16> {
        self.member.get(idx).then(|| self.rank[idx as usize])
    }

    pub fn contains(&self, c: &Configuration) -> bool {
        self.space
            .rank(c)
            .map(|i| self.member.get(i))
            .unwrap_or(false)
    }

    /// Capture distance in cop turns, or `None` outside the region.
    pub fn rank_of(&self, c: &Configuration) -> Option<u16> {
        self.space.rank(c).ok().and_then(|i| self.rank_of_index(i))
    }

    /// Whether the cops win after placing on `cops`, whatever the robber's
    /// placement.
    pub fn placement_wins(&self, cops: &[u32]) -> bool {
        let p = self.space.rank_cops(cops);
        (0..self.space.vertex_count() as u32).all(|r| {
            (self.variant == Variant::Cr && cops.contains(&r))
                || self.member.get(self.space.index(p, r, Turn::Cops))
        })
    }

    /// Lexicographically first winning cop placement, if any.
    pub fn winning_placement(&self) -> Option<CopPositions> {
        let mut buf = vec![0u32; self.space.cop_count()];
        for p in 0..self.space.multiset_count() {
            self.space.unrank_cops(p, &mut buf);
            if self.placement_wins(&buf) {
                return Some(CopPositions::new(
                    buf.iter().map(|&v| v as VertexId).collect(),
                ));
            }
        }
        None
    }

    pub fn winner(&self) -> Winner {
        if self.winning_placement().is_some() {
            Winner::CopsWin
        } else {
            Winner::RobberWins
        }
    }
}
