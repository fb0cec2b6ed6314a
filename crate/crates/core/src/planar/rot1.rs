//! `ROT1` text format.
//!
//! ```text
//! ROT1 <n> <m>
//! <v>: <w1> <w2> ... <wk>
//! ```
//!
//! One line per vertex in id order, 1-based ids, clockwise rotation, single
//! spaces, LF endings including the last line. The parser only accepts the
//! canonical form, so `emit(parse(text)) == text` for every accepted input.

use std::fmt::Write as _;

use thiserror::Error;

use super::{GraphError, PlanarGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Rot1Error {
    #[error("ROT1 line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, message: impl Into<String>) -> Rot1Error {
    Rot1Error::Syntax {
        line,
        message: message.into(),
    }
}

impl PlanarGraph {
    pub fn to_rot1(&self) -> String {
        let mut out = String::new();
        writeln!(out, "ROT1 {} {}", self.vertex_count(), self.edge_count()).unwrap();
        for v in self.vertices() {
            write!(out, "{}:", v + 1).unwrap();
            for w in self.neighbors(v) {
                write!(out, " {}", w + 1).unwrap();
            }
            out.push('\n');
        }
        out
    }

    pub fn from_rot1(text: &str) -> Result<Self, Rot1Error> {
        let Some(body) = text.strip_suffix('\n') else {
            return Err(syntax(0, "missing final newline"));
        };
        let mut lines = body.split('\n');
        let header = lines.next().unwrap_or_default();
        let fields: Vec<&str> = header.split(' ').collect();
        let (n, m) = match fields.as_slice() {
            ["ROT1", n, m] => (parse_count(n, 1)?, parse_count(m, 1)?),
            _ => return Err(syntax(1, "expected header `ROT1 <n> <m>`")),
        };
        if header != format!("ROT1 {n} {m}") {
            return Err(syntax(1, "non-canonical header"));
        }

        let mut rotation = Vec::with_capacity(n);
        for (i, line) in lines.enumerate() {
            let lineno = i + 2;
            if i >= n {
                return Err(syntax(lineno, "more vertex lines than declared"));
            }
            let Some((label, rest)) = line.split_once(':') else {
                return Err(syntax(lineno, "expected `<v>: <neighbours>`"));
            };
            if parse_count(label, lineno)? != i + 1 {
                return Err(syntax(lineno, format!("expected vertex {}", i + 1)));
            }
            let mut nbrs = Vec::new();
            let mut canonical = format!("{}:", i + 1);
            for token in rest.split(' ').skip(1) {
                let w = parse_count(token, lineno)?;
                if w == 0 || w > n {
                    return Err(syntax(lineno, format!("vertex id {w} out of range")));
                }
                nbrs.push(w - 1);
                write!(canonical, " {w}").unwrap();
            }
            if line != canonical {
                return Err(syntax(lineno, "non-canonical spacing"));
            }
            rotation.push(nbrs);
        }
        if rotation.len() != n {
            return Err(syntax(rotation.len() + 2, "fewer vertex lines than declared"));
        }
        let graph = PlanarGraph::from_rotation(rotation)?;
        if graph.edge_count() != m {
            return Err(syntax(
                1,
                format!("header declares {m} edges, found {}", graph.edge_count()),
            ));
        }
        Ok(graph)
    }
}

fn parse_count(token: &str, line: usize) -> Result<usize, Rot1Error> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) || token.starts_with("0") && token.len() > 1 {
        return Err(syntax(line, format!("invalid number `{token}`")));
    }
    token
        .parse()
        .map_err(|_| syntax(line, format!("invalid number `{token}`")))
}
