//! Small named reflexive graphs, all unprotected.

use super::{PGraph, Protection};

pub fn path(n: usize) -> PGraph {
    let mut g = PGraph::with_vertices(n, Protection::Unprotected);
    for v in 1..n {
        g.add_edge(v - 1, v, Protection::Unprotected).expect("valid");
    }
    g
}

pub fn cycle(n: usize) -> PGraph {
    let mut g = path(n);
    if n >= 3 {
        g.add_edge(n - 1, 0, Protection::Unprotected).expect("valid");
    }
    g
}

pub fn complete(n: usize) -> PGraph {
    let mut g = PGraph::with_vertices(n, Protection::Unprotected);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v, Protection::Unprotected).expect("valid");
        }
    }
    g
}

/// Outer 5-cycle 0..5, inner pentagram 5..10, spokes i -- i+5.
pub fn petersen() -> PGraph {
    let mut g = PGraph::with_vertices(10, Protection::Unprotected);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5, Protection::Unprotected).expect("valid");
        g.add_edge(5 + i, 5 + (i + 2) % 5, Protection::Unprotected)
            .expect("valid");
        g.add_edge(i, i + 5, Protection::Unprotected).expect("valid");
    }
    g
}
