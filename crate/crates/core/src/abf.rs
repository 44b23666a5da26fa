//! The Alternating Boolean Formula game.
//!
//! Player A owns `x_1..x_m`, player B owns `y_1..y_n`. A moves first; on each
//! turn the mover flips at most one of their own variables. A wins as soon as
//! the CNF formula is true (it is tested on the initial assignment and after
//! every half-move); B wins if that never happens.
//!
//! `.abf` text format:
//!
//! ```text
//! p abf <m> <n> <clauses>
//! i <bits>            x-block then y-block, '0'/'1'
//! <lit> <lit> ... 0   one clause per line; 1..m are x, m+1..m+n are y,
//!                     negative means negated
//! ```

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use crate::error::{Error, Result};

/// A possibly negated variable; `var` is 0-based over `x_1..x_m, y_1..y_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Literal {
            var,
            positive: false,
        }
    }

    /// Signed 1-based encoding used by the text format.
    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.positive {
            v
        } else {
            -v
        }
    }

    pub fn holds(self, assignment: &[bool]) -> bool {
        assignment[self.var] == self.positive
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbfInstance {
    num_x: usize,
    num_y: usize,
    initial: Vec<bool>,
    clauses: Vec<Vec<Literal>>,
}

impl AbfInstance {
    /// Builds an instance; literals inside a clause are sorted and deduplicated.
    pub fn new(
        num_x: usize,
        num_y: usize,
        initial: Vec<bool>,
        clauses: Vec<Vec<Literal>>,
    ) -> Result<Self> {
        let vars = num_x + num_y;
        if initial.len() != vars {
            return Err(Error::InvalidArgument(format!(
                "initial assignment has {} values, expected {vars}",
                initial.len()
            )));
        }
        let mut norm = Vec::with_capacity(clauses.len());
        for (ci, clause) in clauses.into_iter().enumerate() {
            if clause.is_empty() {
                return Err(Error::InvalidArgument(format!("clause {} is empty", ci + 1)));
            }
            if let Some(l) = clause.iter().find(|l| l.var >= vars) {
                return Err(Error::InvalidArgument(format!(
                    "clause {} references variable {} of {vars}",
                    ci + 1,
                    l.var + 1
                )));
            }
            let set: BTreeSet<Literal> = clause.into_iter().collect();
            norm.push(set.into_iter().collect());
        }
        Ok(AbfInstance {
            num_x,
            num_y,
            initial,
            clauses: norm,
        })
    }

    pub fn num_x(&self) -> usize {
        self.num_x
    }

    pub fn num_y(&self) -> usize {
        self.num_y
    }

    pub fn num_vars(&self) -> usize {
        self.num_x + self.num_y
    }

    pub fn initial(&self) -> &[bool] {
        &self.initial
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.clauses
    }

    pub fn eval_formula(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|l| l.holds(assignment)))
    }

    fn eval_mask(&self, mask: u64) -> bool {
        self.clauses.iter().all(|c| {
            c.iter()
                .any(|l| ((mask >> l.var) & 1 == 1) == l.positive)
        })
    }

    fn initial_mask(&self) -> u64 {
        self.initial
            .iter()
            .enumerate()
            .fold(0, |m, (i, &b)| m | (u64::from(b) << i))
    }

    /// Whether player A can force the formula to become true.
    ///
    /// Solved as a least fixed point over `(assignment, side to move)`; state
    /// count is `2^(m+n+1)`, so this is meant for small variable counts.
    pub fn decide_a_wins(&self) -> bool {
        let vars = self.num_vars();
        assert!(vars < 32, "ABF solver supports fewer than 32 variables");
        let states = 1usize << vars;
        let target: Vec<bool> = (0..states as u64).map(|m| self.eval_mask(m)).collect();
        // won_a[m]: A to move at assignment m; won_b[m]: B to move
        let mut won_a = target.clone();
        let mut won_b = target.clone();
        let x_bits = 0..self.num_x;
        let y_bits = self.num_x..vars;
        loop {
            let mut changed = false;
            for m in 0..states {
                if !won_a[m] {
                    let win = won_b[m] || x_bits.clone().any(|i| won_b[m ^ (1 << i)]);
                    if win {
                        won_a[m] = true;
                        changed = true;
                    }
                }
                if !won_b[m] {
                    let win = won_a[m] && y_bits.clone().all(|j| won_a[m ^ (1 << j)]);
                    if win {
                        won_b[m] = true;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        won_a[self.initial_mask() as usize]
    }

    pub fn write_abf(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "p abf {} {} {}",
            self.num_x,
            self.num_y,
            self.clauses.len()
        )
        .unwrap();
        let bits: String = self.initial.iter().map(|&b| if b { '1' } else { '0' }).collect();
        writeln!(out, "i {bits}").unwrap();
        for c in &self.clauses {
            for l in c {
                write!(out, "{} ", l.to_dimacs()).unwrap();
            }
            out.push_str("0\n");
        }
        out
    }

    pub fn read_abf(text: &str) -> Result<AbfInstance> {
        let mut lines = text.lines().enumerate().filter_map(|(i, raw)| {
            let t = raw.trim();
            (!t.is_empty() && !t.starts_with('c') && !t.starts_with('#')).then_some((i + 1, raw))
        });
        let (hl, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing 'p abf' header"))?;
        let toks: Vec<&str> = header.split_whitespace().collect();
        if toks.len() != 5 || toks[0] != "p" || toks[1] != "abf" {
            return Err(Error::parse(hl, "expected 'p abf <m> <n> <clauses>'"));
        }
        let num = |s: &str| -> Result<usize> {
            s.parse()
                .map_err(|_| Error::parse(hl, format!("bad number '{s}' in header")))
        };
        let (m, n, nc) = (num(toks[2])?, num(toks[3])?, num(toks[4])?);

        let (il, init_line) = lines
            .next()
            .ok_or_else(|| Error::parse(hl + 1, "missing 'i <bits>' line"))?;
        let init_line = init_line.trim_start();
        let bits = init_line
            .strip_prefix('i')
            .ok_or_else(|| Error::parse(il, "expected 'i <bits>'"))?
            .trim();
        let initial = bits
            .chars()
            .map(|ch| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::parse(il, format!("bad bit '{ch}'"))),
            })
            .collect::<Result<Vec<bool>>>()?;
        if initial.len() != m + n {
            return Err(Error::parse(
                il,
                format!("initial assignment has {} bits, expected {}", initial.len(), m + n),
            ));
        }

        let mut clauses = Vec::with_capacity(nc);
        let mut last = il;
        for (ln, raw) in lines {
            last = ln;
            let mut clause = Vec::new();
            let mut terminated = false;
            for tok in raw.split_whitespace() {
                if terminated {
                    return Err(Error::parse(ln, "tokens after terminating 0"));
                }
                let lit: i64 = tok
                    .parse()
                    .map_err(|_| Error::parse(ln, format!("bad literal '{tok}'")))?;
                if lit == 0 {
                    terminated = true;
                    continue;
                }
                let var = lit.unsigned_abs() as usize;
                if var > m + n {
                    return Err(Error::parse(
                        ln,
                        format!("variable {var} of {} referenced", m + n),
                    ));
                }
                clause.push(Literal {
                    var: var - 1,
                    positive: lit > 0,
                });
            }
            if !terminated {
                return Err(Error::parse(ln, "clause not terminated by 0"));
            }
            if clause.is_empty() {
                return Err(Error::parse(ln, "empty clause"));
            }
            clauses.push(clause);
        }
        if clauses.len() != nc {
            return Err(Error::parse(
                last,
                format!("header announces {nc} clauses, found {}", clauses.len()),
            ));
        }
        AbfInstance::new(m, n, initial, clauses).map_err(|e| Error::parse(hl, e.to_string()))
    }
}

impl fmt::Display for AbfInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |v: usize| {
            if v < self.num_x {
                format!("x{}", v + 1)
            } else {
                format!("y{}", v - self.num_x + 1)
            }
        };
        if self.clauses.is_empty() {
            return f.write_str("true");
        }
        for (i, c) in self.clauses.iter().enumerate() {
            if i > 0 {
                f.write_str(" & ")?;
            }
            f.write_str("(")?;
            for (j, l) in c.iter().enumerate() {
                if j > 0 {
                    f.write_str(" | ")?;
                }
                if !l.positive {
                    f.write_str("~")?;
                }
                f.write_str(&name(l.var))?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}
