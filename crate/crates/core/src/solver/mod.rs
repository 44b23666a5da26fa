//! Exact decision of the pursuit games by retrograde analysis over the full
//! configuration space.

use std::fmt;

use crate::error::{Error, Result};
use crate::game::Variant;
use crate::graph::PGraph;

mod region;
mod space;
mod trace;

pub use region::{compute_region, compute_region_with, SolverOptions, WinRegion};
pub use space::{multiset_count, ConfigSpace, DEFAULT_CAP};
pub use trace::{Trace, TraceStep};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Winner {
    CopsWin,
    RobberWins,
}

impl Winner {
    /// Single-token verdict used on the command line.
    pub fn verdict(self) -> &'static str {
        match self {
            Winner::CopsWin => "COPS",
            Winner::RobberWins => "ROBBER",
        }
    }
}

impl fmt::Display for Winner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.verdict())
    }
}

/// Cops choose their placement first, then the robber; the cops win iff some
/// placement wins against every robber placement.
pub fn decide(g: &PGraph, variant: Variant, k: usize) -> Result<Winner> {
    Ok(compute_region(g, variant, k)?.winner())
}

pub fn decide_with(g: &PGraph, variant: Variant, k: usize, opts: &SolverOptions) -> Result<Winner> {
    Ok(compute_region_with(g, variant, k, opts)?.winner())
}

/// Least `k` such that `k` cops win the classic game on `g`.
pub fn cop_number(g: &PGraph) -> Result<usize> {
    if g.is_empty() {
        return Err(Error::InvalidArgument("cop number of the empty graph".into()));
    }
    for k in 1..=g.vertex_count() {
        if decide(g, Variant::Cr, k)? == Winner::CopsWin {
            return Ok(k);
        }
    }
    unreachable!("one cop per vertex always wins")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{families, Protection};

    #[test]
    fn small_decisions() {
        assert_eq!(decide(&families::path(3), Variant::Cr, 1).unwrap(), Winner::CopsWin);
        let mut k2 = PGraph::with_vertices(2, Protection::Unprotected);
        k2.add_edge(0, 1, Protection::Protected).unwrap();
        assert_eq!(decide(&k2, Variant::Crp, 1).unwrap(), Winner::RobberWins);
        assert_eq!(decide(&k2, Variant::Cr, 1).unwrap(), Winner::CopsWin);
    }

    #[test]
    fn lazy_equals_protected_for_one_cop() {
        for seed in 0..30 {
            let g = crate::verify::random_instance(seed, 1 + seed as usize % 6, 0.5, 0.3);
            assert_eq!(
                decide(&g, Variant::Lcrp, 1).unwrap(),
                decide(&g, Variant::Crp, 1).unwrap()
            );
        }
    }

    #[test]
    fn cop_numbers() {
        assert_eq!(cop_number(&families::path(4)).unwrap(), 1);
        assert_eq!(cop_number(&families::cycle(4)).unwrap(), 2);
        assert_eq!(cop_number(&families::complete(5)).unwrap(), 1);
        assert!(cop_number(&PGraph::new()).is_err());
    }

    #[test]
    fn capacity_error_surfaces() {
        let g = families::complete(40);
        let err = decide_with(&g, Variant::Cr, 5, &SolverOptions { cap: 1 << 20 }).unwrap_err();
        assert!(matches!(err, Error::Capacity { .. }));
    }
}
