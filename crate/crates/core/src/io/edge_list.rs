use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parses `"n m"` followed by `m` lines `"u v"`. Blank lines and lines
/// starting with `#` are ignored; line numbers in errors are 1-based.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let err = |line: usize, message: String| Error::Parse { line, message };

    let (hline, header) = lines.next().ok_or_else(|| err(1, "missing \"n m\" header".into()))?;
    let (n, m) = parse_pair(header).ok_or_else(|| err(hline, format!("expected \"n m\", got {header:?}")))?;
    if n == 0 {
        return Err(err(hline, "graph must have at least one vertex".into()));
    }

    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m);
    for (line, text) in lines {
        if edges.len() == m {
            return Err(err(line, format!("more than {m} edge lines")));
        }
        let (u, v) = parse_pair(text).ok_or_else(|| err(line, format!("expected \"u v\", got {text:?}")))?;
        for w in [u, v] {
            if w >= n {
                return Err(err(line, format!("vertex {w} out of range (n = {n})")));
            }
        }
        if u == v {
            return Err(err(line, format!("self-loop at vertex {u}")));
        }
        let e = (u.min(v), u.max(v));
        if edges.contains(&e) {
            return Err(err(line, format!("duplicate edge {} {}", e.0, e.1)));
        }
        edges.push(e);
    }
    if edges.len() != m {
        return Err(err(
            text.lines().count().max(1),
            format!("expected {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, edges)
}

fn parse_pair(s: &str) -> Option<(usize, usize)> {
    let mut it = s.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

/// Canonical form: header then edges sorted, one per line.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
