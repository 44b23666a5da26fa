use std::fmt;

use crate::error::{Error, Result};
use crate::game::{Configuration, CopPositions, Turn, Variant};
use crate::graph::VertexId;

use super::region::WinRegion;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    /// Side that just moved.
    pub mover: Turn,
    pub config: Configuration,
}

/// A play from a start configuration under the region's optimal policies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    pub start: Configuration,
    pub start_rank: Option<u16>,
    pub steps: Vec<TraceStep>,
    pub captured: bool,
    pub cop_turns: usize,
}

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.start_rank {
            Some(r) => writeln!(f, "start {} rank {}", self.start, r)?,
            None => writeln!(f, "start {} rank none", self.start)?,
        }
        for (i, s) in self.steps.iter().enumerate() {
            let who = match s.mover {
                Turn::Cops => "cops",
                Turn::Robber => "robber",
            };
            writeln!(f, "step {} {} cops={} robber={}", i + 1, who, s.config.cops, s.config.robber)?;
        }
        write!(
            f,
            "result {} after {} cop turns",
            if self.captured { "capture" } else { "no-capture" },
            self.cop_turns
        )
    }
}

impl WinRegion {
    /// Plays from `start` for at most `max_steps` half-moves.
    ///
    /// Inside the region the cops always move to the first successor of
    /// minimal rank and the robber to the first successor of maximal rank, so
    /// capture happens within `rank_of(start)` cop turns. Outside the region
    /// the robber always steps to the first successor outside it and the cops
    /// take their first legal move.
    pub fn extract_trace(&self, start: &Configuration, max_steps: usize) -> Result<Trace> {
        if max_steps == 0 {
            return Err(Error::InvalidArgument("step bound must be positive".into()));
        }
        let space = self.space();
        let tables = self.tables();
        let variant = self.variant();
        let mut idx = space.rank(start)?;
        let mut trace = Trace {
            start: start.clone(),
            start_rank: self.rank_of_index(idx),
            steps: Vec::new(),
            captured: false,
            cop_turns: 0,
        };
        let mut cops: Vec<u32> = start.cops.as_slice().iter().map(|&v| v as u32).collect();
        let mut robber = start.robber as u32;
        let mut turn = start.turn;

        while trace.steps.len() < max_steps {
            if tables.capture_now(variant, &cops, robber, turn) {
                if variant != Variant::Cr {
                    // a defender traverses its unprotected edge onto the robber
                    let pos = cops
                        .iter()
                        .position(|&c| tables.defended(&[c], robber))
                        .expect("capture requires a defender");
                    cops[pos] = robber;
                    cops.sort_unstable();
                    trace.cop_turns += 1;
                    trace.steps.push(step(Turn::Cops, &cops, robber, Turn::Robber));
                }
                trace.captured = true;
                break;
            }
            let won = self.contains_index(idx);
            match turn {
                Turn::Cops => {
                    let mut options: Vec<Vec<u32>> = Vec::new();
                    tables.for_each_cop_move(variant, &cops, &mut |t| options.push(t.to_vec()));
                    options.sort();
                    options.dedup();
                    let pick = if won {
                        options
                            .iter()
                            .filter_map(|q| {
                                let i = space.index(space.rank_cops(q), robber, Turn::Robber);
                                self.rank_of_index(i).map(|r| (r, q))
                            })
                            .min_by_key(|&(r, _)| r)
                            .map(|(_, q)| q.clone())
                            .expect("won cop configuration has a winning move")
                    } else {
                        options[0].clone()
                    };
                    cops = pick;
                    trace.cop_turns += 1;
                }
                Turn::Robber => {
                    let p = space.rank_cops(&cops);
                    let options = tables.closed(robber);
                    robber = if won {
                        // first successor of maximal rank
                        let mut best = (0u16, options[0]);
                        let mut first = true;
                        for &r in options {
                            let rk = self
                                .rank_of_index(space.index(p, r, Turn::Cops))
                                .expect("all replies of a won robber configuration are won");
                            if first || rk > best.0 {
                                best = (rk, r);
                                first = false;
                            }
                        }
                        best.1
                    } else {
                        *options
                            .iter()
                            .find(|&&r| !self.contains_index(space.index(p, r, Turn::Cops)))
                            .expect("a lost robber configuration has an escape")
                    };
                }
            }
            let mover = turn;
            turn = turn.other();
            idx = space.index(space.rank_cops(&cops), robber, turn);
            trace.steps.push(step(mover, &cops, robber, turn));
        }
        Ok(trace)
    }
}

fn step(mover: Turn, cops: &[u32], robber: u32, turn: Turn) -> TraceStep {
    TraceStep {
        mover,
        config: Configuration {
            cops: CopPositions::new(cops.iter().map(|&c| c as VertexId).collect()),
            robber: robber as VertexId,
            turn,
        },
    }
}
