//! Text formats: graph6, a plain edge list, and JSON coloring files.

mod coloring_json;
mod edgelist;
mod graph6;

pub use coloring_json::{parse_coloring, write_coloring};
pub use edgelist::{parse_edge_list, write_central_edge_list, write_edge_list};
pub use graph6::{decode_graph6, decode_graph6_stream, encode_graph6, GRAPH6_HEADER};

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<GraphFormat> {
        match s {
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            "edgelist" | "edge-list" | "edges" => Ok(GraphFormat::EdgeList),
            _ => Err(Error::Parameter(format!("unknown graph format {s:?}; expected graph6 or edgelist"))),
        }
    }
}

/// Decodes a single graph. Graph6 input may carry the optional header and a
/// trailing newline.
pub fn parse_graph(input: &[u8], format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::Graph6 => {
            let mut line = input;
            while let [rest @ .., b'\n' | b'\r'] = line {
                line = rest;
            }
            decode_graph6(line)
        }
        GraphFormat::EdgeList => {
            let text = std::str::from_utf8(input).map_err(|e| Error::Parse {
                offset: e.valid_up_to(),
                message: "input is not valid UTF-8".into(),
            })?;
            parse_edge_list(text)
        }
    }
}

/// Byte offset of a 1-based (line, column) position, as reported by serde_json.
pub(crate) fn offset_of(text: &str, line: usize, column: usize) -> usize {
    let start: usize = text
        .split_inclusive('\n')
        .take(line.saturating_sub(1))
        .map(str::len)
        .sum();
    (start + column.saturating_sub(1)).min(text.len())
}
