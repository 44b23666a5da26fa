//! Move generation and capture predicates for the three pursuit variants.
//!
//! * `Cr`: classic rules, protection ignored, capture on co-location.
//! * `Crp`: captures only across unprotected edges or loops.
//! * `Lcrp`: as `Crp`, but at most one cop changes vertex per cop turn.
//!
//! Cops are anonymous, so cop placements are kept as sorted multisets.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::graph::{PGraph, Protection, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    Cr,
    Crp,
    Lcrp,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Cr, Variant::Crp, Variant::Lcrp];

    pub fn honors_protection(self) -> bool {
        self != Variant::Cr
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::Cr => "cr",
            Variant::Crp => "crp",
            Variant::Lcrp => "lcrp",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "cr" => Ok(Variant::Cr),
            "crp" => Ok(Variant::Crp),
            "lcrp" => Ok(Variant::Lcrp),
            _ => Err(Error::InvalidArgument(format!("unknown variant '{s}'"))),
        }
    }
}

/// Whose move it is. `Cops < Robber` in the configuration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Turn {
    Cops,
    Robber,
}

impl Turn {
    pub fn other(self) -> Turn {
        match self {
            Turn::Cops => Turn::Robber,
            Turn::Robber => Turn::Cops,
        }
    }
}

/// Multiset of cop positions, stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CopPositions(Vec<VertexId>);

impl CopPositions {
    pub fn new(mut positions: Vec<VertexId>) -> Self {
        positions.sort_unstable();
        CopPositions(positions)
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }
}

impl fmt::Display for CopPositions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    pub cops: CopPositions,
    pub robber: VertexId,
    pub turn: Turn,
}

impl Configuration {
    pub fn new(cops: Vec<VertexId>, robber: VertexId, turn: Turn) -> Self {
        Configuration {
            cops: CopPositions::new(cops),
            robber,
            turn,
        }
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = match self.turn {
            Turn::Cops => "cops",
            Turn::Robber => "robber",
        };
        write!(f, "cops={} robber={} turn={}", self.cops, self.robber, t)
    }
}

/// Whether some cop stands on a vertex joined to `v` by an unprotected edge
/// or loop.
pub fn defended(g: &PGraph, cops: &CopPositions, v: VertexId) -> bool {
    cops.as_slice()
        .iter()
        .any(|&p| g.protection(p, v) == Some(Protection::Unprotected))
}

pub fn capture_now(g: &PGraph, variant: Variant, c: &Configuration) -> bool {
    match variant {
        Variant::Cr => c.cops.contains(c.robber),
        Variant::Crp | Variant::Lcrp => c.turn == Turn::Cops && defended(g, &c.cops, c.robber),
    }
}

/// Distinct cop placements reachable in one cop turn, lexicographically sorted.
pub fn cop_successors(g: &PGraph, variant: Variant, cops: &CopPositions) -> Vec<CopPositions> {
    let tables = MoveTables::new(g);
    let compact: Vec<u32> = cops.as_slice().iter().map(|&c| c as u32).collect();
    let mut out = Vec::new();
    tables.for_each_cop_move(variant, &compact, &mut |t| {
        out.push(CopPositions(t.iter().map(|&c| c as VertexId).collect()));
    });
    out.sort();
    out.dedup();
    out
}

/// `N[robber]` in increasing order.
pub fn robber_successors(g: &PGraph, robber: VertexId) -> Vec<VertexId> {
    g.closed_neighborhood(robber)
}

/// Precomputed neighbourhoods and capture relation for fast move generation.
#[derive(Clone, Debug)]
pub struct MoveTables {
    n: usize,
    closed: Vec<Vec<u32>>,
    open: Vec<Vec<u32>>,
    /// `guards[u * n + v]`: edge or loop `uv` exists and is unprotected.
    guards: Vec<bool>,
}

impl MoveTables {
    pub fn new(g: &PGraph) -> Self {
        let n = g.vertex_count();
        let mut guards = vec![false; n * n];
        let mut closed = Vec::with_capacity(n);
        let mut open = Vec::with_capacity(n);
        for v in g.vertices() {
            closed.push(g.closed_neighborhood(v).into_iter().map(|u| u as u32).collect());
            open.push(g.neighbors(v).map(|(u, _)| u as u32).collect());
            for u in g.closed_neighborhood(v) {
                guards[u * n + v] = g.protection(u, v) == Some(Protection::Unprotected);
            }
        }
        MoveTables {
            n,
            closed,
            open,
            guards,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn closed(&self, v: u32) -> &[u32] {
        &self.closed[v as usize]
    }

    #[inline]
    pub fn defended(&self, cops: &[u32], v: u32) -> bool {
        let v = v as usize;
        cops.iter().any(|&p| self.guards[p as usize * self.n + v])
    }

    #[inline]
    pub fn capture_now(&self, variant: Variant, cops: &[u32], robber: u32, turn: Turn) -> bool {
        match variant {
            Variant::Cr => cops.contains(&robber),
            Variant::Crp | Variant::Lcrp => turn == Turn::Cops && self.defended(cops, robber),
        }
    }

    /// Calls `f` with every sorted cop tuple reachable in one cop turn from the
    /// sorted tuple `cops`. For `Lcrp` every tuple is yielded exactly once;
    /// for `Cr`/`Crp` a tuple may be yielded more than once.
    pub fn for_each_cop_move(&self, variant: Variant, cops: &[u32], f: &mut impl FnMut(&[u32])) {
        match variant {
            Variant::Lcrp => self.lazy_moves(cops, f),
            Variant::Cr | Variant::Crp => self.simultaneous_moves(cops, f),
        }
    }

    fn lazy_moves(&self, cops: &[u32], f: &mut impl FnMut(&[u32])) {
        f(cops);
        let mut buf = cops.to_vec();
        for i in 0..cops.len() {
            if i > 0 && cops[i] == cops[i - 1] {
                continue;
            }
            for &q in &self.open[cops[i] as usize] {
                buf.copy_from_slice(cops);
                buf[i] = q;
                // restore sortedness by bubbling the moved entry
                let mut j = i;
                while j > 0 && buf[j - 1] > buf[j] {
                    buf.swap(j - 1, j);
                    j -= 1;
                }
                while j + 1 < buf.len() && buf[j] > buf[j + 1] {
                    buf.swap(j, j + 1);
                    j += 1;
                }
                f(&buf);
            }
        }
    }

    fn simultaneous_moves(&self, cops: &[u32], f: &mut impl FnMut(&[u32])) {
        let k = cops.len();
        if k == 0 {
            f(cops);
            return;
        }
        // Odometer over closed neighbourhoods. Cops sharing a vertex are
        // interchangeable, so within a run of equal positions the choice
        // indices are kept nondecreasing.
        let mut idx = vec![0usize; k];
        let mut sorted = vec![0u32; k];
        loop {
            for i in 0..k {
                sorted[i] = self.closed[cops[i] as usize][idx[i]];
            }
            sorted.sort_unstable();
            f(&sorted);

            let mut i = k;
            loop {
                if i == 0 {
                    return;
                }
                i -= 1;
                idx[i] += 1;
                if idx[i] < self.closed[cops[i] as usize].len() {
                    for j in i + 1..k {
                        idx[j] = if cops[j] == cops[j - 1] { idx[j - 1] } else { 0 };
                    }
                    break;
                }
            }
        }
    }
}
