//! Line-oriented instance files.
//!
//! ```text
//! c a triangle, every vertex of degree 2
//! p ffactor 3 3 0
//! f 2 2 2
//! e 0 1
//! e 1 2
//! e 0 2
//! ```
//!
//! The `p` line gives `n`, `m` and whether edges carry a weight (`1`) or not
//! (`0`). The single `f` line lists `f(0) .. f(n-1)`. Each `e` line is an edge
//! `u v`, followed by an integer weight in weighted files. Lines starting
//! with `c` and blank lines are ignored.

use std::fmt;
use std::fmt::Write as _;

use connfactor_core::{DegreeSpec, Graph, Vertex, Weight};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    /// Absent only in files parsed with [`parse_graph`].
    pub f: Option<DegreeSpec>,
    /// Problems that do not make the file invalid, e.g. an odd sum of `f`.
    pub warnings: Vec<String>,
}

struct Token<'a> {
    column: usize,
    text: &'a str,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Token {
                    column: line[..s].chars().count() + 1,
                    text: &line[s..i],
                });
                start = None;
            }
            _ => {}
        }
    }
    out
}

fn error(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

fn number<T: std::str::FromStr>(line: usize, tok: &Token<'_>, what: &str) -> Result<T, ParseError> {
    tok.text
        .parse()
        .map_err(|_| error(line, tok.column, format!("expected {what}, found '{}'", tok.text)))
}

struct Header {
    n: usize,
    m: usize,
    weighted: bool,
}

/// Parses a complete instance; the `f` line is required.
pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    parse(text, true)
}

/// Parses a file whose `f` line may be missing, e.g. input graphs for the
/// generator.
pub fn parse_graph(text: &str) -> Result<Instance, ParseError> {
    parse(text, false)
}

fn parse(text: &str, require_f: bool) -> Result<Instance, ParseError> {
    let mut header: Option<Header> = None;
    let mut f: Option<Vec<usize>> = None;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut weights: Vec<Weight> = Vec::new();
    let mut seen = std::collections::HashMap::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let ln = idx + 1;
        last_line = ln;
        let toks = tokens(raw);
        let Some(first) = toks.first() else { continue };
        match first.text {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(error(ln, first.column, "second problem line"));
                }
                if toks.len() != 5 {
                    return Err(error(ln, first.column, "expected 'p ffactor <n> <m> <0|1>'"));
                }
                if toks[1].text != "ffactor" {
                    return Err(error(ln, toks[1].column, format!("unknown problem type '{}'", toks[1].text)));
                }
                let n = number(ln, &toks[2], "vertex count")?;
                let m = number(ln, &toks[3], "edge count")?;
                let weighted = match toks[4].text {
                    "0" => false,
                    "1" => true,
                    other => {
                        return Err(error(ln, toks[4].column, format!("weighted flag must be 0 or 1, found '{other}'")))
                    }
                };
                header = Some(Header { n, m, weighted });
            }
            "f" => {
                let h = header
                    .as_ref()
                    .ok_or_else(|| error(ln, first.column, "f line before the problem line"))?;
                if f.is_some() {
                    return Err(error(ln, first.column, "second f line"));
                }
                if toks.len() - 1 != h.n {
                    let col = toks.get(h.n + 1).map_or(raw.chars().count() + 1, |t| t.column);
                    return Err(error(ln, col, format!("expected {} degree values, found {}", h.n, toks.len() - 1)));
                }
                let values = toks[1..]
                    .iter()
                    .map(|t| number(ln, t, "a degree value"))
                    .collect::<Result<Vec<usize>, _>>()?;
                f = Some(values);
            }
            "e" => {
                let h = header
                    .as_ref()
                    .ok_or_else(|| error(ln, first.column, "edge line before the problem line"))?;
                let want = if h.weighted { 4 } else { 3 };
                if toks.len() < want {
                    let col = raw.chars().count() + 1;
                    let msg = if toks.len() == 3 { "missing weight" } else { "expected 'e <u> <v>'" };
                    return Err(error(ln, col, msg));
                }
                if toks.len() > want {
                    let msg = if h.weighted { "too many fields" } else { "unexpected weight in an unweighted file" };
                    return Err(error(ln, toks[want].column, msg));
                }
                let u: Vertex = number(ln, &toks[1], "a vertex")?;
                let v: Vertex = number(ln, &toks[2], "a vertex")?;
                for (x, tok) in [(u, &toks[1]), (v, &toks[2])] {
                    if x >= h.n {
                        return Err(error(ln, tok.column, format!("vertex {x} out of range 0..{}", h.n)));
                    }
                }
                if u == v {
                    return Err(error(ln, toks[1].column, format!("self-loop at vertex {u}")));
                }
                let key = (u.min(v), u.max(v));
                if let Some(prev) = seen.insert(key, ln) {
                    return Err(error(ln, toks[1].column, format!("duplicate edge {{{u}, {v}}} (first on line {prev})")));
                }
                if edges.len() == h.m {
                    return Err(error(ln, first.column, format!("more than the declared {} edges", h.m)));
                }
                if h.weighted {
                    let w: Weight = number(ln, &toks[3], "an integer weight")?;
                    if w < 0 {
                        return Err(error(ln, toks[3].column, format!("negative weight {w}")));
                    }
                    weights.push(w);
                }
                edges.push((u, v));
            }
            other => {
                return Err(error(ln, first.column, format!("unknown line type '{other}'")));
            }
        }
    }

    let end = last_line + 1;
    let h = header.ok_or_else(|| error(end, 1, "missing problem line"))?;
    if edges.len() != h.m {
        return Err(error(end, 1, format!("declared {} edges, found {}", h.m, edges.len())));
    }
    if require_f && f.is_none() {
        return Err(error(end, 1, "missing f line"));
    }
    let mut graph = Graph::new(h.n, edges).map_err(|e| error(end, 1, e.to_string()))?;
    if h.weighted {
        graph = graph.with_weights(weights).map_err(|e| error(end, 1, e.to_string()))?;
    }
    let f = f.map(DegreeSpec::new);
    let mut warnings = Vec::new();
    if let Some(f) = &f {
        if !f.has_even_total() {
            warnings.push(format!("sum of f is {}, which is odd: no f-factor exists", f.total()));
        }
        if let Some((v, value, degree)) = f.first_excess(&graph) {
            warnings.push(format!("f({v}) = {value} exceeds degree {degree}: no f-factor exists"));
        }
    }
    Ok(Instance { graph, f, warnings })
}

/// Writes `graph` and `f` in the instance format; [`parse_instance`] reads
/// it back unchanged.
pub fn serialize_instance(graph: &Graph, f: Option<&DegreeSpec>) -> String {
    let mut out = String::new();
    let flag = u8::from(graph.is_weighted());
    let _ = writeln!(out, "p ffactor {} {} {flag}", graph.vertex_count(), graph.edge_count());
    if let Some(f) = f {
        out.push('f');
        for v in f.values() {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    for (e, &(u, v)) in graph.edges().iter().enumerate() {
        match graph.weight(e) {
            Some(w) => {
                let _ = writeln!(out, "e {u} {v} {w}");
            }
            None => {
                let _ = writeln!(out, "e {u} {v}");
            }
        }
    }
    out
}
