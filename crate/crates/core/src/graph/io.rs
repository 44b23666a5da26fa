//! Text formats: `.crg` graphs, role sidecars, and DOT export.
//!
//! `.crg` is line oriented; `#` starts a comment.
//!
//! ```text
//! p crg <n>
//! v <id> <P|U>
//! e <u> <v> <P|U>
//! ```
//!
//! A role sidecar annotates vertices of a constructed graph:
//!
//! ```text
//! role <id> <role string>
//! alias <id> <role string>
//! meta <key> <value...>
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::{PGraph, Protection, VertexId};
use crate::error::{Error, Result};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_id(tok: Option<&str>, line: usize, n: usize) -> Result<VertexId> {
    let tok = tok.ok_or_else(|| Error::parse(line, "missing vertex id"))?;
    let id: VertexId = tok
        .parse()
        .map_err(|_| Error::parse(line, format!("bad vertex id '{tok}'")))?;
    if id >= n {
        return Err(Error::parse(
            line,
            format!("vertex id {id} out of range (n = {n})"),
        ));
    }
    Ok(id)
}

fn parse_prot(tok: Option<&str>, line: usize) -> Result<Protection> {
    tok.and_then(Protection::from_symbol)
        .ok_or_else(|| Error::parse(line, "expected protection flag P or U"))
}

pub fn read_crg(text: &str) -> Result<PGraph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing 'p crg <n>' header"))?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some("p") || toks.next() != Some("crg") {
        return Err(Error::parse(hline, "expected 'p crg <n>' header"));
    }
    let n: usize = toks
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::parse(hline, "bad vertex count"))?;
    if toks.next().is_some() {
        return Err(Error::parse(hline, "trailing tokens after header"));
    }

    let mut declared: Vec<Option<Protection>> = vec![None; n];
    let mut edges = Vec::new();
    for (line, content) in lines {
        let mut toks = content.split_whitespace();
        match toks.next() {
            Some("v") => {
                let id = parse_id(toks.next(), line, n)?;
                let p = parse_prot(toks.next(), line)?;
                if declared[id].replace(p).is_some() {
                    return Err(Error::parse(line, format!("vertex {id} declared twice")));
                }
            }
            Some("e") => {
                let u = parse_id(toks.next(), line, n)?;
                let v = parse_id(toks.next(), line, n)?;
                let p = parse_prot(toks.next(), line)?;
                if u == v {
                    return Err(Error::parse(
                        line,
                        format!("explicit self-edge ({u}, {u}); loops are implicit"),
                    ));
                }
                edges.push((line, u, v, p));
            }
            Some(other) => {
                return Err(Error::parse(line, format!("unknown record '{other}'")));
            }
            None => unreachable!("blank lines are filtered"),
        }
        if toks.next().is_some() {
            return Err(Error::parse(line, "trailing tokens"));
        }
    }

    let mut g = PGraph::new();
    for (id, p) in declared.iter().enumerate() {
        let p = p.ok_or_else(|| Error::parse(hline, format!("vertex {id} never declared")))?;
        g.add_vertex(p);
    }
    for (line, u, v, p) in edges {
        if g.protection(u, v).is_some() {
            return Err(Error::parse(line, format!("duplicate edge ({u}, {v})")));
        }
        g.add_edge(u, v, p)?;
    }
    Ok(g)
}

pub fn write_crg(g: &PGraph) -> String {
    let mut out = String::new();
    writeln!(out, "p crg {}", g.vertex_count()).unwrap();
    for v in g.vertices() {
        writeln!(out, "v {} {}", v, g.vertex_protection(v)).unwrap();
    }
    for (u, v, p) in g.edges() {
        writeln!(out, "e {u} {v} {p}").unwrap();
    }
    out
}

/// Per-vertex annotations written next to a constructed graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RoleSidecar {
    pub roles: BTreeMap<VertexId, String>,
    pub aliases: Vec<(VertexId, String)>,
    pub meta: Vec<(String, String)>,
}

impl RoleSidecar {
    pub fn write(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.meta {
            writeln!(out, "meta {k} {v}").unwrap();
        }
        for (id, r) in &self.roles {
            writeln!(out, "role {id} {r}").unwrap();
        }
        for (id, r) in &self.aliases {
            writeln!(out, "alias {id} {r}").unwrap();
        }
        out
    }

    pub fn read(text: &str) -> Result<RoleSidecar> {
        let mut sc = RoleSidecar::default();
        for (line, content) in content_lines(text) {
            let (kind, rest) = content
                .split_once(char::is_whitespace)
                .ok_or_else(|| Error::parse(line, "incomplete record"))?;
            let rest = rest.trim();
            match kind {
                "role" | "alias" => {
                    let (id, role) = rest
                        .split_once(char::is_whitespace)
                        .ok_or_else(|| Error::parse(line, "expected '<id> <role>'"))?;
                    let id: VertexId = id
                        .parse()
                        .map_err(|_| Error::parse(line, format!("bad vertex id '{id}'")))?;
                    let role = role.trim().to_string();
                    if kind == "role" {
                        if sc.roles.insert(id, role).is_some() {
                            return Err(Error::parse(line, format!("vertex {id} has two roles")));
                        }
                    } else {
                        sc.aliases.push((id, role));
                    }
                }
                "meta" => {
                    let (k, v) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                    sc.meta.push((k.to_string(), v.trim().to_string()));
                }
                other => return Err(Error::parse(line, format!("unknown record '{other}'"))),
            }
        }
        Ok(sc)
    }
}

/// Renders `g` as an undirected DOT graph. Unprotected vertices are filled
/// black, protected vertices are white; protected edges are dashed. Loops are
/// implicit and not drawn.
pub fn write_dot(g: &PGraph, roles: Option<&BTreeMap<VertexId, String>>) -> String {
    let mut out = String::from("graph G {\n");
    out.push_str("  node [shape=circle, style=filled, fontsize=10];\n");
    for v in g.vertices() {
        let label = roles
            .and_then(|r| r.get(&v))
            .map(|r| format!("{v}: {r}"))
            .unwrap_or_else(|| v.to_string());
        let label = label.replace('"', "\\\"");
        match g.vertex_protection(v) {
            Protection::Unprotected => writeln!(
                out,
                "  {v} [label=\"{label}\", fillcolor=black, fontcolor=white];"
            ),
            Protection::Protected => writeln!(
                out,
                "  {v} [label=\"{label}\", fillcolor=white, fontcolor=black];"
            ),
        }
        .unwrap();
    }
    for (u, v, p) in g.edges() {
        match p {
            Protection::Unprotected => writeln!(out, "  {u} -- {v};"),
            Protection::Protected => writeln!(out, "  {u} -- {v} [style=dashed];"),
        }
        .unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;
    use proptest::prelude::*;

    #[test]
    fn reads_protected_k2() {
        let g = read_crg("p crg 2\nv 0 U\nv 1 U\ne 0 1 P\n").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.protection(0, 1), Some(Protection::Protected));
        assert_eq!(g.protection(0, 0), Some(Protection::Unprotected));
    }

    #[test]
    fn round_trips_c4() {
        let g = families::cycle(4);
        assert_eq!(read_crg(&write_crg(&g)).unwrap(), g);
    }

    #[test]
    fn rejects_explicit_loop_with_line_number() {
        let err = read_crg("p crg 1\n# comment\nv 0 U\ne 0 0 U\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }), "{err}");
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(read_crg("").is_err());
        assert!(read_crg("p crg 2\nv 0 U\n").is_err());
        assert!(matches!(
            read_crg("p crg 2\nv 0 U\nv 1 X\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            read_crg("p crg 2\nv 0 U\nv 1 U\ne 0 2 U\n"),
            Err(Error::Parse { line: 4, .. })
        ));
        assert!(read_crg("p crg 2\nv 0 U\nv 1 U\ne 0 1 U\ne 1 0 P\n").is_err());
    }

    #[test]
    fn dot_marks_protection() {
        let mut g = PGraph::with_vertices(2, Protection::Unprotected);
        g.add_edge(0, 1, Protection::Protected).unwrap();
        let dot = write_dot(&g, None);
        assert_eq!(dot.matches("style=dashed").count(), 1);

        let h = PGraph::with_vertices(1, Protection::Protected);
        assert!(write_dot(&h, None).contains("fillcolor=white"));

        let empty = write_dot(&PGraph::new(), None);
        assert!(empty.starts_with("graph G {") && empty.trim_end().ends_with('}'));
    }

    #[test]
    fn dot_attaches_roles() {
        let g = PGraph::with_vertices(1, Protection::Unprotected);
        let roles = BTreeMap::from([(0, "omega".to_string())]);
        assert!(write_dot(&g, Some(&roles)).contains("label=\"0: omega\""));
    }

    #[test]
    fn sidecar_round_trip() {
        let mut sc = RoleSidecar::default();
        sc.roles.insert(0, "branch v=3 i=2".into());
        sc.roles.insert(1, "lr e=(0,0)".into());
        sc.aliases.push((0, "svert i=1".into()));
        sc.meta.push(("cops".into(), "4".into()));
        assert_eq!(RoleSidecar::read(&sc.write()).unwrap(), sc);
    }

    proptest! {
        #[test]
        fn crg_round_trip(n in 1usize..8, bits in proptest::collection::vec(0u8..3, 64), vp in proptest::collection::vec(any::<bool>(), 8)) {
            let mut g = PGraph::new();
            for &b in vp.iter().take(n) {
                g.add_vertex(if b { Protection::Protected } else { Protection::Unprotected });
            }
            for u in 0..n {
                for v in u + 1..n {
                    match bits[u * 8 + v] {
                        1 => { g.add_edge(u, v, Protection::Unprotected).unwrap(); }
                        2 => { g.add_edge(u, v, Protection::Protected).unwrap(); }
                        _ => {}
                    }
                }
            }
            prop_assert_eq!(read_crg(&write_crg(&g)).unwrap(), g);
        }
    }
}
