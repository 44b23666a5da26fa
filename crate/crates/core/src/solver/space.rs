use crate::error::{Error, Result};
use crate::game::{Configuration, CopPositions, Turn};
use crate::graph::VertexId;

/// Default upper bound on the number of configurations a solve may touch.
pub const DEFAULT_CAP: u64 = 1 << 31;

/// Dense numbering of game configurations.
///
/// A configuration `(cops, robber, turn)` gets index
/// `(lex_rank(cops) * n + robber) * 2 + turn`, where `lex_rank` is the
/// position of the sorted cop tuple among all nondecreasing `k`-tuples over
/// `0..n` in lexicographic order. Indices are therefore strictly increasing in
/// the lexicographic order of `(cops, robber, turn)`.
#[derive(Clone, Debug)]
pub struct ConfigSpace {
    n: usize,
    k: usize,
    multisets: u64,
    /// `prefix[i][x]`: number of nondecreasing suffixes of length `k - 1 - i`
    /// whose first value is below `x` (summed over first values `< x`).
    prefix: Vec<Vec<u64>>,
}

/// `C(n + k - 1, k)`: number of size-`k` multisets over `n` elements.
pub fn multiset_count(n: usize, k: usize) -> Option<u128> {
    if k == 0 {
        return Some(1);
    }
    if n == 0 {
        return Some(0);
    }
    let top = (n + k - 1) as u128;
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc.checked_mul(top - i)? / (i + 1);
    }
    Some(acc)
}

impl ConfigSpace {
    pub fn new(n: usize, k: usize, cap: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument("need at least one cop".into()));
        }
        if n == 0 {
            return Err(Error::InvalidArgument("graph has no vertices".into()));
        }
        let multisets = multiset_count(n, k).unwrap_or(u128::MAX);
        let total = multisets.saturating_mul(n as u128).saturating_mul(2);
        if total > cap as u128 {
            return Err(Error::Capacity {
                total,
                multisets,
                vertices: n,
                cap,
            });
        }
        let mut prefix = Vec::with_capacity(k);
        for i in 0..k {
            let len = k - 1 - i;
            let mut row = Vec::with_capacity(n + 1);
            let mut acc = 0u64;
            row.push(0);
            for v in 0..n {
                // suffixes of length `len` with values in v..n
                acc += multiset_count(n - v, len).expect("bounded by total") as u64;
                row.push(acc);
            }
            prefix.push(row);
        }
        Ok(ConfigSpace {
            n,
            k,
            multisets: multisets as u64,
            prefix,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn cop_count(&self) -> usize {
        self.k
    }

    pub fn multiset_count(&self) -> u64 {
        self.multisets
    }

    pub fn total(&self) -> u64 {
        self.multisets * self.n as u64 * 2
    }

    /// Lexicographic rank of a sorted cop tuple.
    #[inline]
    pub fn rank_cops(&self, cops: &[u32]) -> u64 {
        let mut r = 0;
        let mut prev = 0usize;
        for (i, &c) in cops.iter().enumerate() {
            let row = &self.prefix[i];
            r += row[c as usize] - row[prev];
            prev = c as usize;
        }
        r
    }

    pub fn unrank_cops(&self, mut idx: u64, out: &mut [u32]) {
        debug_assert!(idx < self.multisets);
        let mut prev = 0usize;
        for (i, slot) in out.iter_mut().enumerate().take(self.k) {
            let row = &self.prefix[i];
            let mut v = prev;
            while v + 1 < self.n && row[v + 1] - row[prev] <= idx {
                v += 1;
            }
            idx -= row[v] - row[prev];
            *slot = v as u32;
            prev = v;
        }
    }

    #[inline]
    pub fn index(&self, cops_rank: u64, robber: u32, turn: Turn) -> u64 {
        (cops_rank * self.n as u64 + robber as u64) * 2 + turn as u64
    }

    /// Splits an index into `(cops_rank, robber, turn)`.
    #[inline]
    pub fn split(&self, idx: u64) -> (u64, u32, Turn) {
        let turn = if idx & 1 == 0 { Turn::Cops } else { Turn::Robber };
        let rest = idx >> 1;
        (rest / self.n as u64, (rest % self.n as u64) as u32, turn)
    }

    pub fn rank(&self, c: &Configuration) -> Result<u64> {
        let cops = c.cops.as_slice();
        if cops.len() != self.k {
            return Err(Error::InvalidArgument(format!(
                "configuration has {} cops, space has {}",
                cops.len(),
                self.k
            )));
        }
        if let Some(&bad) = cops.iter().chain([&c.robber]).find(|&&v| v >= self.n) {
            return Err(Error::InvalidVertex(bad, self.n));
        }
        let compact: Vec<u32> = cops.iter().map(|&v| v as u32).collect();
        Ok(self.index(self.rank_cops(&compact), c.robber as u32, c.turn))
    }

    pub fn unrank(&self, idx: u64) -> Result<Configuration> {
        if idx >= self.total() {
            return Err(Error::InvalidArgument(format!(
                "configuration index {idx} out of range (total {})",
                self.total()
            )));
        }
        let (cr, robber, turn) = self.split(idx);
        let mut buf = vec![0u32; self.k];
        self.unrank_cops(cr, &mut buf);
        Ok(Configuration {
            cops: CopPositions::new(buf.into_iter().map(|v| v as VertexId).collect()),
            robber: robber as VertexId,
            turn,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_vertices_two_cops() {
        let s = ConfigSpace::new(3, 2, DEFAULT_CAP).unwrap();
        assert_eq!(s.multiset_count(), 6);
        assert_eq!(s.total(), 36);
        let all: Vec<Configuration> = (0..36).map(|i| s.unrank(i).unwrap()).collect();
        for (i, c) in all.iter().enumerate() {
            assert_eq!(s.rank(c).unwrap(), i as u64);
        }
        assert!(all.windows(2).all(|w| w[0] < w[1]), "rank must follow lex order");
        assert!(s.unrank(36).is_err());
    }

    #[test]
    fn round_trip_larger_spaces() {
        for (n, k) in [(1, 1), (1, 4), (5, 3), (7, 4), (10, 3)] {
            let s = ConfigSpace::new(n, k, DEFAULT_CAP).unwrap();
            let mut prev: Option<Vec<u32>> = None;
            let mut buf = vec![0u32; k];
            for i in 0..s.multiset_count() {
                s.unrank_cops(i, &mut buf);
                assert!(buf.windows(2).all(|w| w[0] <= w[1]));
                assert_eq!(s.rank_cops(&buf), i);
                if let Some(p) = &prev {
                    assert!(p < &buf);
                }
                prev = Some(buf.clone());
            }
        }
    }

    #[test]
    fn capacity_is_enforced() {
        let err = ConfigSpace::new(100, 6, 1 << 20).unwrap_err();
        assert!(matches!(err, Error::Capacity { .. }));
        assert!(ConfigSpace::new(0, 1, DEFAULT_CAP).is_err());
        assert!(ConfigSpace::new(3, 0, DEFAULT_CAP).is_err());
    }

    #[test]
    fn rank_validates_input() {
        let s = ConfigSpace::new(3, 2, DEFAULT_CAP).unwrap();
        assert!(s.rank(&Configuration::new(vec![0], 1, Turn::Cops)).is_err());
        assert!(s.rank(&Configuration::new(vec![0, 3], 1, Turn::Cops)).is_err());
    }
}
