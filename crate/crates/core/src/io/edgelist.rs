//! Edge lists: a first line holding the order `n`, then one `i j` pair per
//! line with 0-based endpoints. Blank lines and `#` comments are ignored.

use crate::central::CentralGraph;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let start = offset;
        offset += line.len();
        let content = line.split('#').next().unwrap_or("");
        let mut fields = Vec::new();
        let mut pos = start;
        for tok in content.split(|c: char| c.is_ascii_whitespace()) {
            if !tok.is_empty() {
                fields.push((pos, tok));
            }
            pos += tok.len() + 1;
        }
        if fields.is_empty() {
            continue;
        }
        let num = |(at, tok): (usize, &str)| {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                offset: at,
                message: format!("expected a non-negative integer, got {tok:?}"),
            })
        };
        match (n, fields.as_slice()) {
            (None, [f]) => {
                let v = num(*f)?;
                if v == 0 || v > crate::graph::MAX_ORDER {
                    return Err(Error::Parse {
                        offset: f.0,
                        message: format!("order must be in 1..={}", crate::graph::MAX_ORDER),
                    });
                }
                n = Some(v);
            }
            (None, _) => {
                return Err(Error::Parse {
                    offset: fields[0].0,
                    message: "the first line must hold only the vertex count".into(),
                })
            }
            (Some(order), [a, b]) => {
                let (u, v) = (num(*a)?, num(*b)?);
                for (x, at) in [(u, a.0), (v, b.0)] {
                    if x >= order {
                        return Err(Error::Parse {
                            offset: at,
                            message: format!("vertex {x} is out of range for order {order}"),
                        });
                    }
                }
                if u == v {
                    return Err(Error::Parse {
                        offset: a.0,
                        message: format!("self-loop at vertex {u}"),
                    });
                }
                edges.push((u, v));
            }
            (Some(_), _) => {
                return Err(Error::Parse {
                    offset: fields[0].0,
                    message: "expected an edge \"i j\"".into(),
                })
            }
        }
    }
    let n = n.ok_or(Error::Parse {
        offset: text.len(),
        message: "missing vertex count".into(),
    })?;
    Graph::from_edges(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// The edge list of `C(G)`, preceded by one comment per vertex naming its
/// role (`original:i` or `subdiv:i,j`).
pub fn write_central_edge_list(cg: &CentralGraph) -> String {
    let g = cg.result();
    let mut out = String::new();
    for v in 0..g.order() {
        out.push_str(&format!("# {v} {}\n", cg.role(v)));
    }
    out.push_str(&write_edge_list(g));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::central::central;
    use crate::family::FamilySpec;

    #[test]
    fn parses_path() {
        let g = parse_edge_list("3\n0 1\n1 2").unwrap();
        assert_eq!(g, FamilySpec::Path(3).build().unwrap());
    }

    #[test]
    fn rejects_out_of_range() {
        match parse_edge_list("3\n0 1\n1 5\n") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 8),
            other => panic!("{other:?}"),
        }
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("3 4\n").is_err());
        assert!(parse_edge_list("3\n1\n").is_err());
        assert!(parse_edge_list("3\n1 1\n").is_err());
        assert!(parse_edge_list("3\n-1 1\n").is_err());
    }

    #[test]
    fn central_roles_round_trip() {
        let cg = central(&FamilySpec::Path(3).build().unwrap());
        let text = write_central_edge_list(&cg);
        assert!(text.contains("# 0 original:0\n"));
        assert!(text.contains("# 3 subdiv:0,1\n"));
        assert_eq!(&parse_edge_list(&text).unwrap(), cg.result());
    }
}
