//! Plain-text edge lists: one edge per line as `u v` or `u v w`, split on
//! whitespace. Lines starting with a comment character are skipped, blank
//! lines too, and CRLF endings are fine. The first data line fixes the
//! column count; a third column switches the whole file to weighted.
//!
//! The reader streams through a reused line buffer, so multi-gigabyte
//! files parse without per-line allocation.

use crate::error::{Error, Result};
use crate::graph::{DuplicatePolicy, Graph, GraphBuilder, NodeId};
use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

#[derive(Clone, Debug)]
pub struct EdgeListOptions {
    /// Node ids in the file start at 1 instead of 0.
    pub one_indexed: bool,
    pub directed: bool,
    /// A line whose first non-blank character is one of these is skipped.
    pub comment_chars: Vec<char>,
    pub duplicates: DuplicatePolicy,
}

impl Default for EdgeListOptions {
    fn default() -> Self {
        EdgeListOptions {
            one_indexed: false,
            directed: false,
            comment_chars: vec!['#', '%'],
            duplicates: DuplicatePolicy::Reject,
        }
    }
}

fn parse_err(path: &Path, line: u64, msg: impl Into<String>) -> Error {
    Error::Parse {
        path: path.display().to_string(),
        line,
        msg: msg.into(),
    }
}

/// Read an edge list. The node count is one past the largest id seen
/// (after the one-indexed shift), so isolated trailing nodes do not exist
/// from this format's point of view.
pub fn read_edge_list(path: impl AsRef<Path>, opts: &EdgeListOptions) -> Result<Graph> {
    let path = path.as_ref();
    let file = fs::File::open(path).map_err(|e| Error::file(path, e))?;
    let mut reader = BufReader::with_capacity(1 << 20, file);
    let mut buf = String::new();
    let mut line_no = 0u64;
    let mut weighted: Option<bool> = None;
    let mut edges: Vec<(NodeId, NodeId, f64)> = Vec::new();
    let mut max_id = 0u64;
    let mut saw_node = false;

    loop {
        buf.clear();
        if reader.read_line(&mut buf)? == 0 {
            break;
        }
        line_no += 1;
        let text = buf.trim();
        if text.is_empty() || text.starts_with(opts.comment_chars.as_slice()) {
            continue;
        }
        let mut fields = text.split_ascii_whitespace();
        let u = parse_id(fields.next(), path, line_no, opts.one_indexed)?;
        let v = parse_id(fields.next(), path, line_no, opts.one_indexed)?;
        let w = fields.next();
        let extra = fields.next();
        if extra.is_some() {
            return Err(parse_err(path, line_no, "more than three columns"));
        }
        let has_weight = w.is_some();
        match weighted {
            None => weighted = Some(has_weight),
            Some(expect) if expect != has_weight => {
                return Err(parse_err(
                    path,
                    line_no,
                    format!(
                        "expected {} columns as on the first data line",
                        if expect { 3 } else { 2 }
                    ),
                ));
            }
            _ => {}
        }
        let w = match w {
            Some(tok) => tok
                .parse::<f64>()
                .map_err(|_| parse_err(path, line_no, format!("bad weight '{tok}'")))?,
            None => 1.0,
        };
        max_id = max_id.max(u).max(v);
        saw_node = true;
        edges.push((u, v, w));
    }

    let n = if saw_node { max_id + 1 } else { 0 };
    let weighted = weighted.unwrap_or(false);
    let mut b = GraphBuilder::new(n)
        .directed(opts.directed)
        .weighted(weighted)
        .allow_self_loops(true)
        .duplicates(opts.duplicates);
    for &(u, v, w) in &edges {
        if weighted {
            b.add_weighted_edge(u, v, w)?;
        } else {
            b.add_edge(u, v)?;
        }
    }
    b.build()
}

fn parse_id(tok: Option<&str>, path: &Path, line: u64, one_indexed: bool) -> Result<u64> {
    let tok = tok.ok_or_else(|| parse_err(path, line, "expected at least two columns"))?;
    let id = tok
        .parse::<u64>()
        .map_err(|_| parse_err(path, line, format!("bad node id '{tok}'")))?;
    if one_indexed {
        if id == 0 {
            return Err(parse_err(path, line, "node id 0 in one-indexed input"));
        }
        Ok(id - 1)
    } else {
        Ok(id)
    }
}

/// Write an edge list; weights (when present) use the shortest decimal
/// form that parses back to the same f64.
pub fn write_edge_list<W: Write>(g: &Graph, mut out: W, one_indexed: bool) -> Result<()> {
    use std::fmt::Write as _;
    let shift = u64::from(one_indexed);
    let mut s = String::new();
    for (u, v, w) in g.edges() {
        s.clear();
        if g.is_weighted() {
            let _ = writeln!(s, "{} {} {}", u + shift, v + shift, w);
        } else {
            let _ = writeln!(s, "{} {}", u + shift, v + shift);
        }
        out.write_all(s.as_bytes())?;
    }
    Ok(())
}

pub fn write_edge_list_file(g: &Graph, path: impl AsRef<Path>, one_indexed: bool) -> Result<()> {
    let path = path.as_ref();
    let f = fs::File::create(path).map_err(|e| Error::file(path, e))?;
    write_edge_list(g, std::io::BufWriter::with_capacity(1 << 20, f), one_indexed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn write_temp(content: &[u8]) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(content).unwrap();
        f.flush().unwrap();
        f
    }

    #[test]
    fn parses_comments_blanks_and_crlf() {
        let f = write_temp(b"# header\r\n\r\n0 1\r\n% other comment style\n1 2\n");
        let g = read_edge_list(f.path(), &EdgeListOptions::default()).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 2);
        assert!(g.has_edge(1, 2));
    }

    #[test]
    fn third_column_means_weighted() {
        let f = write_temp(b"0 1 2.5\n1 2 0.125\n");
        let g = read_edge_list(f.path(), &EdgeListOptions::default()).unwrap();
        assert!(g.is_weighted());
        assert_eq!(g.edge_weight(0, 1), Some(2.5));
    }

    #[test]
    fn column_count_must_stay_consistent() {
        let f = write_temp(b"0 1\n1 2 0.5\n");
        let err = read_edge_list(f.path(), &EdgeListOptions::default()).unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn one_indexed_ids_are_shifted() {
        let f = write_temp(b"1 2\n2 3\n");
        let opts = EdgeListOptions {
            one_indexed: true,
            ..Default::default()
        };
        let g = read_edge_list(f.path(), &opts).unwrap();
        assert_eq!(g.n(), 3);
        assert!(g.has_edge(0, 1));
        assert!(g.has_edge(1, 2));
    }

    #[test]
    fn zero_id_in_one_indexed_input_is_an_error() {
        let f = write_temp(b"0 1\n");
        let opts = EdgeListOptions {
            one_indexed: true,
            ..Default::default()
        };
        let err = read_edge_list(f.path(), &opts).unwrap_err();
        assert!(err.to_string().contains("one-indexed"));
    }

    #[test]
    fn bad_tokens_report_path_and_line() {
        let f = write_temp(b"0 1\nx 2\n");
        match read_edge_list(f.path(), &EdgeListOptions::default()).unwrap_err() {
            Error::Parse { path, line, msg } => {
                assert!(!path.is_empty());
                assert_eq!(line, 2);
                assert!(msg.contains("bad node id"));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn round_trip_preserves_edges_and_weights() {
        let g = Graph::from_weighted_edges(4, &[(0, 1, 0.1), (2, 3, 1.0 / 3.0)]).unwrap();
        let mut buf = Vec::new();
        write_edge_list(&g, &mut buf, false).unwrap();
        let f = write_temp(&buf);
        let opts = EdgeListOptions {
            duplicates: DuplicatePolicy::Reject,
            ..Default::default()
        };
        let back = read_edge_list(f.path(), &opts).unwrap();
        assert_eq!(back.edge_weight(0, 1), Some(0.1));
        assert_eq!(back.edge_weight(2, 3), Some(1.0 / 3.0));
    }

    #[test]
    fn directed_option_keeps_orientation() {
        let f = write_temp(b"2 0\n");
        let opts = EdgeListOptions {
            directed: true,
            ..Default::default()
        };
        let g = read_edge_list(f.path(), &opts).unwrap();
        assert!(g.is_directed());
        assert!(g.has_edge(2, 0));
        assert!(!g.has_edge(0, 2));
    }

    #[test]
    fn merge_sum_policy_accumulates_duplicates() {
        let f = write_temp(b"0 1 1.5\n1 0 2.0\n");
        let opts = EdgeListOptions {
            duplicates: DuplicatePolicy::MergeSum,
            ..Default::default()
        };
        let g = read_edge_list(f.path(), &opts).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(g.edge_weight(0, 1), Some(3.5));
    }

    #[test]
    fn empty_file_gives_empty_graph() {
        let f = write_temp(b"# nothing here\n");
        let g = read_edge_list(f.path(), &EdgeListOptions::default()).unwrap();
        assert_eq!(g.n(), 0);
        assert_eq!(g.m(), 0);
    }
}
