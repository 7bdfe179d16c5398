//! Exhaustive enumeration of small graphs up to isomorphism.
//!
//! Graphs of order `n` are produced from graphs of order `n - 1` by adding a
//! vertex of minimum degree (every graph arises this way by deleting such a
//! vertex) and deduplicated by a canonical code computed with
//! individualization-refinement.

use std::collections::HashSet;

use crate::graph::Graph;

/// Largest order accepted by [`canonical_code`].
pub const CANONICAL_MAX_ORDER: usize = 16;

type Masks = Vec<u16>;

fn masks_of(g: &Graph) -> Masks {
    assert!(
        g.order() <= CANONICAL_MAX_ORDER,
        "canonical forms need order <= {CANONICAL_MAX_ORDER}"
    );
    (0..g.order())
        .map(|v| g.neighbors(v).fold(0u16, |m, u| m | 1 << u))
        .collect()
}

fn graph_of(adj: &[u16]) -> Graph {
    let n = adj.len();
    let mut g = Graph::empty(n).expect("order is at least 1");
    for u in 0..n {
        let mut rest = adj[u] & !((2u32 << u) - 1) as u16;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            g.insert_edge(u, v);
        }
    }
    g
}

/// Splits cells by neighbor counts into every cell until nothing changes.
/// New cells are ordered by their count vectors, so the result depends only
/// on the graph and the input partition, never on vertex names.
fn refine(adj: &[u16], cells: &mut Vec<Vec<u8>>) {
    loop {
        let masks: Vec<u16> = cells
            .iter()
            .map(|c| c.iter().fold(0u16, |m, &v| m | 1 << v))
            .collect();
        let mut next = Vec::with_capacity(cells.len());
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u8>, u8)> = cell
                .iter()
                .map(|&v| {
                    let sig = masks
                        .iter()
                        .map(|&m| (adj[v as usize] & m).count_ones() as u8)
                        .collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|k| k.1).collect());
                    start = i;
                }
            }
        }
        let stable = next.len() == cells.len();
        *cells = next;
        if stable {
            return;
        }
    }
}

fn leaf_code(adj: &[u16], order: &[u8]) -> u128 {
    let mut code = 0u128;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            code = code << 1 | u128::from(adj[order[i] as usize] >> order[j] & 1);
        }
    }
    code
}

fn search(adj: &[u16], mut cells: Vec<Vec<u8>>, best: &mut u128) {
    refine(adj, &mut cells);
    let Some(at) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<u8> = cells.iter().map(|c| c[0]).collect();
        *best = (*best).max(leaf_code(adj, &order));
        return;
    };
    let mut tried: Vec<u8> = Vec::new();
    for &v in &cells[at] {
        // Swapping twins is an automorphism fixing everything individualized
        // so far, so their subtrees yield the same codes.
        let twin = tried.iter().any(|&u| {
            let (nu, nv) = (adj[u as usize] & !(1 << v), adj[v as usize] & !(1 << u));
            nu == nv
        });
        if twin {
            continue;
        }
        tried.push(v);
        let mut child = Vec::with_capacity(cells.len() + 1);
        child.extend_from_slice(&cells[..at]);
        child.push(vec![v]);
        child.push(cells[at].iter().copied().filter(|&u| u != v).collect());
        child.extend_from_slice(&cells[at + 1..]);
        search(adj, child, best);
    }
}

fn code_of_masks(adj: &[u16]) -> u128 {
    let n = adj.len();
    let mut best = 0;
    search(adj, vec![(0..n as u8).collect()], &mut best);
    (n as u128) << 120 | best
}

/// A complete isomorphism invariant for graphs of order at most 16: two
/// graphs get the same code iff they are isomorphic.
///
/// # Panics
///
/// If the order exceeds [`CANONICAL_MAX_ORDER`].
pub fn canonical_code(g: &Graph) -> u128 {
    code_of_masks(&masks_of(g))
}

/// Adds one vertex to each parent in every way that makes it a vertex of
/// minimum degree, keeping one representative per isomorphism class among
/// the children accepted by `keep`.
fn augment<F>(parents: &[Masks], keep: F) -> Vec<Masks>
where
    F: Fn(&[u16]) -> bool,
{
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for p in parents {
        let n = p.len();
        for s in 0u16..1 << n {
            let d = s.count_ones();
            let ok = (0..n).all(|v| p[v].count_ones() + u32::from(s >> v & 1) >= d);
            if !ok {
                continue;
            }
            let mut child = p.clone();
            for (v, row) in child.iter_mut().enumerate() {
                if s >> v & 1 == 1 {
                    *row |= 1 << n;
                }
            }
            child.push(s);
            if keep(&child) && seen.insert(code_of_masks(&child)) {
                out.push(child);
            }
        }
    }
    out
}

fn connected(adj: &[u16]) -> bool {
    let full: u16 = ((1u32 << adj.len()) - 1) as u16;
    let mut reach = 1u16;
    let mut frontier = 1u16;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & !reach;
        reach |= new;
        frontier |= new;
    }
    reach == full
}

fn all_masks(n: usize) -> Vec<Masks> {
    assert!((1..=CANONICAL_MAX_ORDER).contains(&n), "order must be in 1..=16");
    let mut level = vec![vec![0u16]];
    for _ in 1..n {
        level = augment(&level, |_| true);
    }
    level
}

fn finish(mut v: Vec<Masks>) -> Vec<Graph> {
    v.sort_by_cached_key(|m| code_of_masks(m));
    v.iter().map(|m| graph_of(m)).collect()
}

/// One representative of every isomorphism class of graphs of order `n`,
/// ordered by canonical code. Practical for `n ≤ 8`.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    finish(all_masks(n))
}

/// Connected graphs of order `n`, up to isomorphism.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    finish(all_masks(n).into_iter().filter(|m| connected(m)).collect())
}

/// Connected graphs of order `n` with minimum degree at least `min_degree`.
/// The last level is filtered during generation, which keeps `n = 9`
/// affordable.
pub fn connected_graphs_min_degree(n: usize, min_degree: u32) -> Vec<Graph> {
    let keep = |m: &[u16]| connected(m) && m.iter().all(|r| r.count_ones() >= min_degree);
    if n == 1 {
        return finish(vec![vec![0]].into_iter().filter(|m| keep(m)).collect());
    }
    let parents = all_masks(n - 1);
    finish(augment(&parents, keep))
}

/// Trees of order `n`, up to isomorphism.
pub fn trees(n: usize) -> Vec<Graph> {
    connected_graphs(n)
        .into_iter()
        .filter(|g| g.size() + 1 == n)
        .collect()
}
