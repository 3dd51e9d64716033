//! Reader and writer for a practical GML subset: one `graph [...]` block
//! with `directed`, `node [ id ]`, and `edge [ source target weight ]`
//! entries. Unknown keys are skipped and counted, never fatal.
//!
//! Node ids may be arbitrary integers; they are renumbered to `0..n` in
//! file order. Duplicate node ids and edges that reference undeclared
//! nodes are errors, as are duplicate edges. Self-loops are accepted.

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use std::collections::HashMap;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::Path;

#[derive(Debug)]
pub struct GmlRead {
    pub graph: Graph,
    /// Number of keys that were not understood and skipped.
    pub skipped_keys: u64,
}

#[derive(Debug, PartialEq)]
enum Tok {
    Key(String),
    Int(i64),
    Real(f64),
    Str(String),
    Open,
    Close,
}

fn parse_err(path: &str, line: u64, msg: impl Into<String>) -> Error {
    Error::Parse {
        path: path.to_string(),
        line,
        msg: msg.into(),
    }
}

fn tokenize(text: &str, path: &str) -> Result<Vec<(u64, Tok)>> {
    let mut toks = Vec::new();
    let mut line = 1u64;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            '\n' => {
                line += 1;
                chars.next();
            }
            c if c.is_whitespace() => {
                chars.next();
            }
            '[' => {
                toks.push((line, Tok::Open));
                chars.next();
            }
            ']' => {
                toks.push((line, Tok::Close));
                chars.next();
            }
            '"' => {
                chars.next();
                let mut s = String::new();
                loop {
                    match chars.next() {
                        Some('"') => break,
                        Some('\n') => {
                            line += 1;
                            s.push('\n');
                        }
                        Some(c) => s.push(c),
                        None => return Err(parse_err(path, line, "unterminated string")),
                    }
                }
                toks.push((line, Tok::Str(s)));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut s = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        s.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                toks.push((line, Tok::Key(s)));
            }
            c if c.is_ascii_digit() || c == '-' || c == '+' || c == '.' => {
                let mut s = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_digit()
                        || matches!(c, '-' | '+' | '.' | 'e' | 'E')
                    {
                        s.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let tok = if s.contains(['.', 'e', 'E']) {
                    Tok::Real(
                        s.parse::<f64>()
                            .map_err(|_| parse_err(path, line, format!("bad number '{s}'")))?,
                    )
                } else {
                    Tok::Int(
                        s.parse::<i64>()
                            .map_err(|_| parse_err(path, line, format!("bad integer '{s}'")))?,
                    )
                };
                toks.push((line, tok));
            }
            c => return Err(parse_err(path, line, format!("unexpected character '{c}'"))),
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: &'a [(u64, Tok)],
    pos: usize,
    path: &'a str,
    skipped: u64,
}

impl<'a> Parser<'a> {
    fn line(&self) -> u64 {
        self.toks
            .get(self.pos)
            .or_else(|| self.toks.last())
            .map_or(1, |(l, _)| *l)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        parse_err(self.path, self.line(), msg)
    }

    fn next(&mut self) -> Result<&'a (u64, Tok)> {
        let t = self
            .toks
            .get(self.pos)
            .ok_or_else(|| parse_err(self.path, self.line(), "unexpected end of input"))?;
        self.pos += 1;
        Ok(t)
    }

    fn expect_open(&mut self) -> Result<()> {
        match self.next()? {
            (_, Tok::Open) => Ok(()),
            (l, _) => Err(parse_err(self.path, *l, "expected '['")),
        }
    }

    fn expect_int(&mut self, what: &str) -> Result<i64> {
        match self.next()? {
            (_, Tok::Int(v)) => Ok(*v),
            (l, _) => Err(parse_err(self.path, *l, format!("expected integer {what}"))),
        }
    }

    fn expect_number(&mut self, what: &str) -> Result<f64> {
        match self.next()? {
            (_, Tok::Int(v)) => Ok(*v as f64),
            (_, Tok::Real(v)) => Ok(*v),
            (l, _) => Err(parse_err(self.path, *l, format!("expected number {what}"))),
        }
    }

    /// Consume the value following an unrecognized key: a scalar, or a
    /// bracketed list with arbitrary nesting.
    fn skip_value(&mut self) -> Result<()> {
        match self.next()? {
            (_, Tok::Int(_)) | (_, Tok::Real(_)) | (_, Tok::Str(_)) => Ok(()),
            (_, Tok::Open) => {
                let mut depth = 1u32;
                while depth > 0 {
                    match self.next()? {
                        (_, Tok::Open) => depth += 1,
                        (_, Tok::Close) => depth -= 1,
                        _ => {}
                    }
                }
                Ok(())
            }
            (l, _) => Err(parse_err(self.path, *l, "expected a value")),
        }
    }
}

struct RawEdge {
    source: i64,
    target: i64,
    weight: Option<f64>,
    line: u64,
}

fn parse(text: &str, path: &str) -> Result<GmlRead> {
    let toks = tokenize(text, path)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        path,
        skipped: 0,
    };

    loop {
        match p.next()? {
            (_, Tok::Key(k)) if k == "graph" => break,
            (_, Tok::Key(_)) => {
                p.skipped += 1;
                p.skip_value()?;
            }
            (l, _) => return Err(parse_err(path, *l, "expected a key")),
        }
    }
    p.expect_open()?;

    let mut directed = false;
    let mut ids: HashMap<i64, u64> = HashMap::new();
    let mut raw_edges: Vec<RawEdge> = Vec::new();

    loop {
        match p.next()? {
            (_, Tok::Close) => break,
            (l, Tok::Key(k)) if k == "directed" => {
                let v = p.expect_int("after 'directed'")?;
                directed = match v {
                    0 => false,
                    1 => true,
                    _ => return Err(parse_err(path, *l, "directed must be 0 or 1")),
                };
            }
            (_, Tok::Key(k)) if k == "node" => {
                p.expect_open()?;
                let mut id: Option<(i64, u64)> = None;
                loop {
                    match p.next()? {
                        (_, Tok::Close) => break,
                        (l, Tok::Key(k)) if k == "id" => {
                            if id.is_some() {
                                return Err(parse_err(path, *l, "node has two id keys"));
                            }
                            id = Some((p.expect_int("node id")?, *l));
                        }
                        (_, Tok::Key(_)) => {
                            p.skipped += 1;
                            p.skip_value()?;
                        }
                        (l, _) => return Err(parse_err(path, *l, "expected a key in node")),
                    }
                }
                let (id, line) = id.ok_or_else(|| p.err("node without id"))?;
                let next = ids.len() as u64;
                if ids.insert(id, next).is_some() {
                    return Err(parse_err(path, line, format!("duplicate node id {id}")));
                }
            }
            (l, Tok::Key(k)) if k == "edge" => {
                let start = *l;
                p.expect_open()?;
                let mut source = None;
                let mut target = None;
                let mut weight = None;
                loop {
                    match p.next()? {
                        (_, Tok::Close) => break,
                        (_, Tok::Key(k)) if k == "source" => {
                            source = Some(p.expect_int("edge source")?);
                        }
                        (_, Tok::Key(k)) if k == "target" => {
                            target = Some(p.expect_int("edge target")?);
                        }
                        (_, Tok::Key(k)) if k == "weight" => {
                            weight = Some(p.expect_number("edge weight")?);
                        }
                        (_, Tok::Key(_)) => {
                            p.skipped += 1;
                            p.skip_value()?;
                        }
                        (l, _) => return Err(parse_err(path, *l, "expected a key in edge")),
                    }
                }
                raw_edges.push(RawEdge {
                    source: source
                        .ok_or_else(|| parse_err(path, start, "edge without source"))?,
                    target: target
                        .ok_or_else(|| parse_err(path, start, "edge without target"))?,
                    weight,
                    line: start,
                });
            }
            (_, Tok::Key(_)) => {
                p.skipped += 1;
                p.skip_value()?;
            }
            (l, _) => return Err(parse_err(path, *l, "expected a key in graph")),
        }
    }

    let weighted = raw_edges.iter().any(|e| e.weight.is_some());
    let mut b = GraphBuilder::new(ids.len() as u64)
        .directed(directed)
        .weighted(weighted)
        .allow_self_loops(true);
    for e in &raw_edges {
        let lookup = |id: i64| {
            ids.get(&id).copied().ok_or_else(|| {
                parse_err(path, e.line, format!("edge references undeclared node {id}"))
            })
        };
        let u = lookup(e.source)?;
        let v = lookup(e.target)?;
        if weighted {
            b.add_weighted_edge(u, v, e.weight.unwrap_or(1.0))?;
        } else {
            b.add_edge(u, v)?;
        }
    }
    Ok(GmlRead {
        graph: b.build()?,
        skipped_keys: p.skipped,
    })
}

/// Parse GML from a string. Errors carry the label `<string>` as the path.
pub fn parse_gml(text: &str) -> Result<GmlRead> {
    parse(text, "<string>")
}

pub fn read_gml(path: impl AsRef<Path>) -> Result<Graph> {
    Ok(read_gml_verbose(path)?.graph)
}

/// Like [`read_gml`] but also reports how many unknown keys were skipped.
pub fn read_gml_verbose(path: impl AsRef<Path>) -> Result<GmlRead> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::file(path, e))?;
    parse(&text, &path.display().to_string())
}

/// Write a graph as GML. Weights use 17 significant digits, enough to
/// reproduce every f64 exactly, so write -> read -> write is
/// byte-identical.
pub fn write_gml<W: Write>(g: &Graph, mut out: W) -> Result<()> {
    let mut s = String::new();
    s.push_str("graph [\n");
    let _ = writeln!(s, "  directed {}", if g.is_directed() { 1 } else { 0 });
    for v in g.nodes() {
        let _ = writeln!(s, "  node [\n    id {v}\n  ]");
    }
    for (u, v, w) in g.edges() {
        s.push_str("  edge [\n");
        let _ = writeln!(s, "    source {u}");
        let _ = writeln!(s, "    target {v}");
        if g.is_weighted() {
            let _ = writeln!(s, "    weight {w:.16e}");
        }
        s.push_str("  ]\n");
    }
    s.push_str("]\n");
    out.write_all(s.as_bytes())?;
    Ok(())
}

pub fn write_gml_file(g: &Graph, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let f = fs::File::create(path).map_err(|e| Error::file(path, e))?;
    write_gml(g, std::io::BufWriter::new(f))
}
