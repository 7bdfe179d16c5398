//! Simple undirected graphs on vertices `0..n`, stored as a dense bit matrix.
//!
//! Graphs are immutable once built. All structural operations (complement,
//! disjoint union, join, relabeling) return new graphs.

use std::fmt;

use crate::error::{param, Result};

/// Upper limit on the order of any graph this crate will allocate.
pub const MAX_ORDER: usize = 4096;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n ≥ 1` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(param("graph order must be at least 1"));
        }
        if n > MAX_ORDER {
            return Err(param(format!("graph order {n} exceeds the limit {MAX_ORDER}")));
        }
        let words = n.div_ceil(64);
        Ok(Graph {
            n,
            m: 0,
            words,
            bits: vec![0; words * n],
        })
    }

    /// Builds a graph from an edge list. Repeated edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(param(format!(
                    "edge ({u}, {v}) references a vertex outside 0..{n}"
                )));
            }
            if u == v {
                return Err(param(format!("self-loop at vertex {u}")));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge(u, v);
            }
        }
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        if !self.has_edge(u, v) {
            self.bits[u * self.words + v / 64] |= 1 << (v % 64);
            self.bits[v * self.words + u / 64] |= 1 << (u % 64);
            self.m += 1;
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// δ(G).
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Δ(G).
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    /// Neighborhood of `v` as a single word. Only valid for graphs of order ≤ 64.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        assert!(self.n <= 64, "neighbor_mask needs order <= 64");
        self.bits[v]
    }

    /// All neighborhoods as words; see [`Graph::neighbor_mask`].
    pub fn adjacency_masks(&self) -> Vec<u64> {
        (0..self.n).map(|v| self.neighbor_mask(v)).collect()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn first_isolated_vertex(&self) -> Option<usize> {
        (0..self.n).find(|&v| self.row(v).iter().all(|&w| w == 0))
    }

    /// The complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let mut h = Graph::empty(self.n).expect("order already validated");
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    h.insert_edge(u, v);
                }
            }
        }
        h
    }

    /// Disjoint union; the vertices of `gs[i]` are shifted by the orders of
    /// `gs[..i]`.
    pub fn disjoint_union(gs: &[Graph]) -> Result<Graph> {
        if gs.is_empty() {
            return Err(param("disjoint union of an empty list"));
        }
        let n = gs.iter().map(Graph::order).sum();
        let mut h = Graph::empty(n)?;
        let mut offset = 0;
        for g in gs {
            for (u, v) in g.edges() {
                h.insert_edge(u + offset, v + offset);
            }
            offset += g.order();
        }
        Ok(h)
    }

    /// `G ∘ H`: the disjoint union plus every edge between `G` and `H`.
    /// `G` keeps its labels; `H` is shifted by `|G|`.
    pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
        let off = g.order();
        let mut j = Graph::disjoint_union(&[g.clone(), h.clone()])?;
        for u in 0..off {
            for v in 0..h.order() {
                j.insert_edge(u, off + v);
            }
        }
        Ok(j)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        check_permutation(perm, self.n)?;
        Graph::from_edges(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Connected components, each sorted, listed by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Subgraph induced by `vertices`, relabeled to `0..vertices.len()` in the
    /// given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let mut h = Graph::empty(vertices.len())?;
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    h.insert_edge(i, j);
                }
            }
        }
        Ok(h)
    }

    pub fn classify(&self) -> Structure {
        classify(self)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(param(format!("permutation has length {}, expected {n}", perm.len())));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(param("relabeling is not a permutation"));
        }
    }
    Ok(())
}

/// Structure tags used to decide which theorems apply to a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Structure {
    pub is_complete: bool,
    pub is_complete_bipartite: bool,
    /// Sorted part sizes when the graph is complete multipartite with at
    /// least two parts.
    pub complete_multipartite: Option<Vec<usize>>,
    pub is_tree: bool,
    pub is_connected: bool,
    pub min_degree: usize,
    pub max_degree: usize,
}

pub fn classify(g: &Graph) -> Structure {
    let n = g.order();
    let comps = g.components();
    let is_connected = comps.len() == 1;
    // Complete multipartite iff non-adjacency is an equivalence relation,
    // i.e. the complement is a disjoint union of cliques.
    let co = g.complement();
    let parts = co.components();
    let cliques = parts.iter().all(|p| {
        p.iter()
            .enumerate()
            .all(|(i, &u)| p[i + 1..].iter().all(|&v| co.has_edge(u, v)))
    });
    let complete_multipartite = (cliques && parts.len() >= 2).then(|| {
        let mut sizes: Vec<usize> = parts.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes
    });
    Structure {
        is_complete: g.size() == n * (n - 1) / 2,
        is_complete_bipartite: complete_multipartite.as_ref().is_some_and(|p| p.len() == 2),
        complete_multipartite,
        is_tree: is_connected && g.size() + 1 == n,
        is_connected,
        min_degree: g.min_degree(),
        max_degree: g.max_degree(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn same_up_to_iso(a: &Graph, b: &Graph) -> bool {
        crate::enumerate::canonical_code(a) == crate::enumerate::canonical_code(b)
    }

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        assert!(Graph::empty(0).is_err());
    }

    #[test]
    fn complement_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.complement().size(), 0);
        assert!(same_up_to_iso(&cycle(5).complement(), &cycle(5)));
        // P4 = 0-1-2-3; its complement has edges 0-2, 0-3, 1-3, i.e. the path 2-0-3-1.
        let co = path(4).complement();
        let edges: Vec<_> = co.edges().collect();
        assert_eq!(edges, vec![(0, 2), (0, 3), (1, 3)]);
        assert!(same_up_to_iso(&co, &path(4)));
    }

    #[test]
    fn union_examples() {
        let k2 = Graph::complete(2).unwrap();
        let u = Graph::disjoint_union(&[k2.clone(), k2]).unwrap();
        assert_eq!((u.order(), u.size(), u.components().len()), (4, 2, 2));
        let u = Graph::disjoint_union(&[path(3), cycle(3)]).unwrap();
        assert_eq!((u.order(), u.size()), (6, 5));
        let k3 = Graph::complete(3).unwrap();
        let u = Graph::disjoint_union(&[k3.clone(), k3.clone(), k3]).unwrap();
        assert_eq!((u.order(), u.size(), u.components().len()), (9, 9, 3));
        assert!(Graph::disjoint_union(&[]).is_err());
    }

    #[test]
    fn join_examples() {
        let w = Graph::join(&cycle(5), &Graph::empty(1).unwrap()).unwrap();
        assert_eq!((w.order(), w.size()), (6, 10));
        assert_eq!(w.degree(5), 5);
        let k23 = Graph::join(&Graph::empty(2).unwrap(), &Graph::empty(3).unwrap()).unwrap();
        assert_eq!(k23.classify().complete_multipartite, Some(vec![2, 3]));
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(Graph::join(&k2, &k2).unwrap(), Graph::complete(4).unwrap());
    }

    #[test]
    fn components_examples() {
        assert_eq!(path(5).components(), vec![vec![0, 1, 2, 3, 4]]);
        let u = Graph::disjoint_union(&[Graph::complete(2).unwrap(), Graph::complete(3).unwrap()])
            .unwrap();
        assert_eq!(u.components(), vec![vec![0, 1], vec![2, 3, 4]]);
        assert_eq!(Graph::empty(3).unwrap().components(), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn classify_examples() {
        let s = Graph::complete(5).unwrap().classify();
        assert!(s.is_complete);
        assert_eq!(s.complete_multipartite, Some(vec![1, 1, 1, 1, 1]));
        let k23 = Graph::join(&Graph::empty(2).unwrap(), &Graph::empty(3).unwrap()).unwrap();
        let s = k23.classify();
        assert!(s.is_complete_bipartite && !s.is_complete);
        let s = path(4).classify();
        assert!(s.is_tree && !s.is_complete_bipartite);
        assert_eq!((s.min_degree, s.max_degree), (1, 2));
    }

    #[test]
    fn relabel_checks_permutation() {
        assert!(path(3).relabel(&[0, 0, 1]).is_err());
        let r = path(3).relabel(&[2, 1, 0]).unwrap();
        assert_eq!(r, path(3));
    }
}
