//! The central graph `C(G)`: subdivide every edge of `G` once and join every
//! pair of originally non-adjacent vertices.
//!
//! Originals keep their indices `0..n`. The subdivision vertex `c_ij` of edge
//! `{i, j}` (`i < j`) gets index `n + r`, where `r` is the rank of `(i, j)` in
//! lexicographic edge order.

use std::fmt;

use crate::graph::Graph;

/// Role of a vertex of `C(G)` with respect to the base graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexRole {
    Original(usize),
    Subdivision(usize, usize),
}

impl fmt::Display for VertexRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexRole::Original(i) => write!(f, "original:{i}"),
            VertexRole::Subdivision(i, j) => write!(f, "subdiv:{i},{j}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralGraph {
    base: Graph,
    result: Graph,
    /// Base edges in lexicographic order; position `r` is vertex `n + r`.
    subdivisions: Vec<(usize, usize)>,
}

impl CentralGraph {
    pub fn new(base: &Graph) -> CentralGraph {
        let n = base.order();
        let subdivisions: Vec<(usize, usize)> = base.edges().collect();
        let mut result =
            Graph::empty(n + subdivisions.len()).expect("central order bounded by n + n^2");
        for u in 0..n {
            for v in u + 1..n {
                if !base.has_edge(u, v) {
                    result.insert_edge(u, v);
                }
            }
        }
        for (r, &(i, j)) in subdivisions.iter().enumerate() {
            result.insert_edge(i, n + r);
            result.insert_edge(j, n + r);
        }
        CentralGraph {
            base: base.clone(),
            result,
            subdivisions,
        }
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn result(&self) -> &Graph {
        &self.result
    }

    pub fn into_result(self) -> Graph {
        self.result
    }

    /// Number of original vertices (the base order).
    pub fn originals(&self) -> usize {
        self.base.order()
    }

    pub fn original_index(&self, i: usize) -> usize {
        assert!(i < self.base.order(), "vertex {i} is not in the base graph");
        i
    }

    /// Vertex `c_ij`, if `{i, j}` is an edge of the base graph. Endpoint order
    /// does not matter.
    pub fn subdivision_index(&self, i: usize, j: usize) -> Option<usize> {
        let key = (i.min(j), i.max(j));
        self.subdivisions
            .binary_search(&key)
            .ok()
            .map(|r| self.base.order() + r)
    }

    /// Like [`CentralGraph::subdivision_index`] but panics on a non-edge; for
    /// constructions that only name edges they know exist.
    pub(crate) fn sub(&self, i: usize, j: usize) -> usize {
        self.subdivision_index(i, j)
            .unwrap_or_else(|| panic!("{{{i},{j}}} is not an edge of the base graph"))
    }

    pub fn role(&self, v: usize) -> VertexRole {
        let n = self.base.order();
        if v < n {
            VertexRole::Original(v)
        } else {
            let (i, j) = self.subdivisions[v - n];
            VertexRole::Subdivision(i, j)
        }
    }

    /// The subdivision vertices `n..n+m`.
    pub fn subdivision_vertices(&self) -> std::ops::Range<usize> {
        self.base.order()..self.result.order()
    }

    /// Rebuilds the base graph from the provenance labels alone.
    pub fn recover_base(&self) -> Graph {
        Graph::from_edges(self.base.order(), self.subdivisions.iter().copied())
            .expect("labels reference base vertices")
    }
}

pub fn central(g: &Graph) -> CentralGraph {
    CentralGraph::new(g)
}
