//! Exact longest simple path by depth-first search memoized on
//! (visited set, endpoint).

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solve::bits;

pub const DEFAULT_LONGEST_PATH_CAP: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LongestPath {
    /// t, the number of vertices on a longest path.
    pub order: usize,
    pub path: Vec<usize>,
}

pub fn longest_path_order(g: &Graph) -> Result<LongestPath> {
    longest_path_with_cap(g, DEFAULT_LONGEST_PATH_CAP)
}

pub fn longest_path_with_cap(g: &Graph, cap: usize) -> Result<LongestPath> {
    let cap = cap.min(64);
    if g.order() > cap {
        return Err(Error::Capacity {
            what: "the longest path search",
            order: g.order(),
            cap,
        });
    }
    let adj = g.adjacency_masks();
    let mut s = Search {
        adj: &adj,
        memo: HashMap::new(),
    };
    let mut best: Option<(u32, usize)> = None;
    for start in 0..g.order() {
        let reach = s.reachable(1 << start, start);
        if best.is_some_and(|(b, _)| reach + 1 <= b) {
            continue;
        }
        let e = s.extend(1 << start, start) + 1;
        if best.map_or(true, |(b, _)| e > b) {
            best = Some((e, start));
        }
        if e as usize == g.order() {
            break;
        }
    }
    let (order, start) = best.expect("graph has a vertex");
    let mut path = vec![start];
    let mut mask = 1u64 << start;
    let mut end = start;
    while let Some(&(_, next)) = s.memo.get(&(mask, end)) {
        let Some(next) = next else { break };
        path.push(next);
        mask |= 1 << next;
        end = next;
    }
    debug_assert_eq!(path.len(), order as usize);
    Ok(LongestPath {
        order: order as usize,
        path,
    })
}

struct Search<'a> {
    adj: &'a [u64],
    /// Longest extension from a state and the first step that achieves it.
    memo: HashMap<(u64, usize), (u32, Option<usize>)>,
}

impl Search<'_> {
    /// Vertices outside `visited` reachable from `end` through unvisited
    /// vertices; no path from this state can add more.
    fn reachable(&self, visited: u64, end: usize) -> u32 {
        let mut seen = 0u64;
        let mut frontier = self.adj[end] & !visited;
        while frontier != 0 {
            seen |= frontier;
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !visited & !seen;
        }
        seen.count_ones()
    }

    fn extend(&mut self, visited: u64, end: usize) -> u32 {
        if let Some(&(e, _)) = self.memo.get(&(visited, end)) {
            return e;
        }
        let bound = self.reachable(visited, end);
        let mut best = (0, None);
        for v in bits(self.adj[end] & !visited) {
            let e = self.extend(visited | 1 << v, v) + 1;
            if e > best.0 {
                best = (e, Some(v));
                if e == bound {
                    break;
                }
            }
        }
        self.memo.insert((visited, end), best);
        best.0
    }
}

/// Whether `path` is a simple path of `g` with at least one vertex.
pub fn is_path(g: &Graph, path: &[usize]) -> bool {
    let mut seen = vec![false; g.order()];
    for &v in path {
        if v >= g.order() || std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    !path.is_empty() && path.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;

    fn t(g: &Graph) -> usize {
        let r = longest_path_order(g).unwrap();
        assert!(is_path(g, &r.path));
        assert_eq!(r.path.len(), r.order);
        r.order
    }

    #[test]
    fn examples() {
        assert_eq!(t(&FamilySpec::Path(7).build().unwrap()), 7);
        assert_eq!(t(&FamilySpec::CompleteMultipartite(vec![1, 3]).build().unwrap()), 3);
        assert_eq!(t(&Graph::empty(3).unwrap()), 1);
        let disjoint = Graph::disjoint_union(&[
            FamilySpec::Path(2).build().unwrap(),
            FamilySpec::Path(4).build().unwrap(),
        ])
        .unwrap();
        assert_eq!(t(&disjoint), 4);
    }

    #[test]
    fn cap_enforced() {
        assert!(matches!(
            longest_path_order(&Graph::empty(33).unwrap()),
            Err(Error::Capacity { .. })
        ));
    }
}
