//! File formats: DIMACS-like graphs (`c` comments, `p edge n m`, `e u v`,
//! 1-based ids), line-oriented list assignments (`<id> <color> ...`), and
//! colorings (`<id> <color>`). Ids are 1-based in files and 0-based in
//! memory. Emission is canonical, so parse(emit(x)) = x.

use choosable::coloring::{Color, ListAssignment, PartialColoring};
use choosable::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected `p edge <n> <m>`")]
    BadHeader { line: usize },
    #[error("line {line}: edge before the `p` line")]
    EdgeBeforeHeader { line: usize },
    #[error("line {line}: duplicate `p` line")]
    DuplicateHeader { line: usize },
    #[error("line {line}: cannot parse `{token}` as a number")]
    BadToken { line: usize, token: String },
    #[error("line {line}: expected `{expected}`")]
    BadShape { line: usize, expected: &'static str },
    #[error("line {line}: vertex id {id} out of range 1..={n}")]
    IdOutOfRange { line: usize, id: usize, n: usize },
    #[error("line {line}: self-loop on vertex {id}")]
    SelfLoop { line: usize, id: usize },
    #[error("line {line}: unrecognized line type")]
    UnknownLine { line: usize },
    #[error("missing `p edge` header")]
    MissingHeader,
    #[error("line {line}: vertex {id} appears twice")]
    DuplicateVertex { line: usize, id: usize },
    #[error("line {line}: vertex {id} has an empty color list")]
    EmptyList { line: usize, id: usize },
    #[error("vertex {id} missing from file")]
    MissingVertex { id: usize },
}

fn parse_number<T: std::str::FromStr>(token: &str, line: usize) -> Result<T, ParseError> {
    token.parse().map_err(|_| ParseError::BadToken {
        line,
        token: token.to_string(),
    })
}

fn check_id(id: usize, n: usize, line: usize) -> Result<usize, ParseError> {
    if id == 0 || id > n {
        Err(ParseError::IdOutOfRange { line, id, n })
    } else {
        Ok(id - 1)
    }
}

/// Lines whose first character is `c` are comments; blank lines are
/// skipped.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.trim()))
        .filter(|(_, t)| !t.is_empty() && !t.starts_with('c'))
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut size: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (line, t) in data_lines(text) {
        let tokens: Vec<&str> = t.split_ascii_whitespace().collect();
        match tokens[0] {
            "p" => {
                if size.is_some() {
                    return Err(ParseError::DuplicateHeader { line });
                }
                if tokens.len() != 4 || tokens[1] != "edge" {
                    return Err(ParseError::BadHeader { line });
                }
                let n: usize = parse_number(tokens[2], line)?;
                let _m: usize = parse_number(tokens[3], line)?;
                size = Some(n);
            }
            "e" => {
                let n = size.ok_or(ParseError::EdgeBeforeHeader { line })?;
                if tokens.len() != 3 {
                    return Err(ParseError::BadShape {
                        line,
                        expected: "e <u> <v>",
                    });
                }
                let u = check_id(parse_number(tokens[1], line)?, n, line)?;
                let v = check_id(parse_number(tokens[2], line)?, n, line)?;
                if u == v {
                    return Err(ParseError::SelfLoop { line, id: u + 1 });
                }
                edges.push((u, v));
            }
            _ => return Err(ParseError::UnknownLine { line }),
        }
    }
    let n = size.ok_or(ParseError::MissingHeader)?;
    Ok(Graph::build(n, &edges).expect("ids validated during parsing"))
}

pub fn emit_graph(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

/// One line per vertex: `<id> <color> [<color> ...]`. Every vertex 1..=n
/// must appear exactly once; duplicate colors within a line collapse.
pub fn parse_lists(text: &str, n: usize) -> Result<ListAssignment, ParseError> {
    let mut lists: Vec<Option<Vec<Color>>> = vec![None; n];
    for (line, t) in data_lines(text) {
        let tokens: Vec<&str> = t.split_ascii_whitespace().collect();
        let v = check_id(parse_number(tokens[0], line)?, n, line)?;
        if lists[v].is_some() {
            return Err(ParseError::DuplicateVertex { line, id: v + 1 });
        }
        if tokens.len() < 2 {
            return Err(ParseError::EmptyList { line, id: v + 1 });
        }
        let colors = tokens[1..]
            .iter()
            .map(|tok| parse_number::<Color>(tok, line))
            .collect::<Result<Vec<_>, _>>()?;
        lists[v] = Some(colors);
    }
    let complete = lists
        .into_iter()
        .enumerate()
        .map(|(v, l)| l.ok_or(ParseError::MissingVertex { id: v + 1 }))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ListAssignment::new(complete).expect("lines were checked nonempty"))
}

pub fn emit_lists(lists: &ListAssignment) -> String {
    let mut out = String::new();
    for v in 0..lists.vertex_count() {
        out.push_str(&(v + 1).to_string());
        for c in lists.list(v) {
            out.push_str(&format!(" {c}"));
        }
        out.push('\n');
    }
    out
}

/// One line per colored vertex: `<id> <color>`. Vertices absent from the
/// file stay uncolored.
pub fn parse_coloring(text: &str, n: usize) -> Result<PartialColoring, ParseError> {
    let mut f = PartialColoring::new(n);
    for (line, t) in data_lines(text) {
        let tokens: Vec<&str> = t.split_ascii_whitespace().collect();
        if tokens.len() != 2 {
            return Err(ParseError::BadShape {
                line,
                expected: "<id> <color>",
            });
        }
        let v = check_id(parse_number(tokens[0], line)?, n, line)?;
        if f.get(v).is_some() {
            return Err(ParseError::DuplicateVertex { line, id: v + 1 });
        }
        f.set(v, parse_number(tokens[1], line)?);
    }
    Ok(f)
}

pub fn emit_coloring(f: &PartialColoring) -> String {
    let mut out = String::new();
    for v in 0..f.vertex_count() {
        if let Some(c) = f.get(v) {
            out.push_str(&format!("{} {}\n", v + 1, c));
        }
    }
    out
}
