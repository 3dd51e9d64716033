//! Graph file formats and path-based convenience entry points.

pub mod edgelist;
pub mod gml;

pub use edgelist::{read_edge_list, write_edge_list, write_edge_list_file, EdgeListOptions};
pub use gml::{parse_gml, read_gml, read_gml_verbose, write_gml, write_gml_file, GmlRead};

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::path::Path;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFileFormat {
    Gml,
    EdgeList,
}

impl FromStr for GraphFileFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gml" => Ok(GraphFileFormat::Gml),
            "edgelist" | "edge-list" | "el" => Ok(GraphFileFormat::EdgeList),
            other => Err(Error::bad_param(format!("unknown format '{other}'"))),
        }
    }
}

/// Guess the format from the file extension: `.gml` is GML; `.edgelist`,
/// `.el`, `.edges`, and `.txt` are edge lists.
pub fn infer_format(path: &Path) -> Option<GraphFileFormat> {
    match path
        .extension()?
        .to_str()?
        .to_ascii_lowercase()
        .as_str()
    {
        "gml" => Some(GraphFileFormat::Gml),
        "edgelist" | "el" | "edges" | "txt" => Some(GraphFileFormat::EdgeList),
        _ => None,
    }
}

/// Read a graph in the given format; edge lists use default options.
pub fn read_graph(path: impl AsRef<Path>, format: GraphFileFormat) -> Result<Graph> {
    match format {
        GraphFileFormat::Gml => read_gml(path),
        GraphFileFormat::EdgeList => read_edge_list(path, &EdgeListOptions::default()),
    }
}

pub fn write_graph(g: &Graph, path: impl AsRef<Path>, format: GraphFileFormat) -> Result<()> {
    match format {
        GraphFileFormat::Gml => write_gml_file(g, path),
        GraphFileFormat::EdgeList => write_edge_list_file(g, path, false),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_parse_from_names() {
        assert_eq!("gml".parse::<GraphFileFormat>().unwrap(), GraphFileFormat::Gml);
        assert_eq!(
            "edgelist".parse::<GraphFileFormat>().unwrap(),
            GraphFileFormat::EdgeList
        );
        assert!("dot".parse::<GraphFileFormat>().is_err());
    }

    #[test]
    fn extensions_infer_formats() {
        assert_eq!(
            infer_format(Path::new("a/b/net.gml")),
            Some(GraphFileFormat::Gml)
        );
        assert_eq!(
            infer_format(Path::new("roads.edgelist")),
            Some(GraphFileFormat::EdgeList)
        );
        assert_eq!(
            infer_format(Path::new("roads.TXT")),
            Some(GraphFileFormat::EdgeList)
        );
        assert_eq!(infer_format(Path::new("noext")), None);
    }

    #[test]
    fn path_round_trip_both_formats() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let dir = tempfile::tempdir().unwrap();
        for (name, fmt) in [
            ("g.gml", GraphFileFormat::Gml),
            ("g.edgelist", GraphFileFormat::EdgeList),
        ] {
            let path = dir.path().join(name);
            write_graph(&g, &path, fmt).unwrap();
            assert_eq!(infer_format(&path), Some(fmt));
            let back = read_graph(&path, fmt).unwrap();
            assert_eq!(back.n(), 4);
            assert_eq!(back.m(), 3);
        }
    }
}
