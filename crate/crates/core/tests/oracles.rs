//! Exact solvers against independent exhaustive searches written here.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tdc_core::chromatic::chromatic_number;
use tdc_core::coloring::{is_proper, Coloring};
use tdc_core::enumerate::{all_graphs, connected_graphs};
use tdc_core::graph::Graph;
use tdc_core::longest_path::{is_path, longest_path_order};

/// Plain backtracking over vertex order 0..n with no heuristics.
fn colorable(g: &Graph, k: usize, color: &mut Vec<usize>) -> bool {
    let v = color.len();
    if v == g.order() {
        return true;
    }
    for c in 0..k {
        if (0..v).all(|u| !g.has_edge(u, v) || color[u] != c) {
            color.push(c);
            if colorable(g, k, color) {
                return true;
            }
            color.pop();
        }
    }
    false
}

fn chi_oracle(g: &Graph) -> usize {
    (1..=g.order()).find(|&k| colorable(g, k, &mut Vec::new())).unwrap()
}

fn longest_from(g: &Graph, v: usize, seen: &mut Vec<bool>) -> usize {
    seen[v] = true;
    let mut best = 0;
    for u in 0..g.order() {
        if g.has_edge(v, u) && !seen[u] {
            best = best.max(longest_from(g, u, seen));
        }
    }
    seen[v] = false;
    best + 1
}

fn longest_oracle(g: &Graph) -> usize {
    (0..g.order())
        .map(|v| longest_from(g, v, &mut vec![false; g.order()]))
        .max()
        .unwrap()
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.2..0.8);
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges).unwrap()
}

#[test]
fn chromatic_matches_exhaustive() {
    for n in 1..=7 {
        for g in all_graphs(n) {
            let r = chromatic_number(&g).unwrap();
            assert_eq!(r.value, chi_oracle(&g), "{g:?}");
            let c: &Coloring = r.coloring().unwrap();
            assert!(is_proper(&g, c).unwrap().holds());
            assert_eq!(c.class_count(), r.value);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..300 {
        let g = random_graph(&mut rng, 8);
        assert_eq!(chromatic_number(&g).unwrap().value, chi_oracle(&g), "{g:?}");
    }
}

#[test]
fn longest_path_matches_exhaustive() {
    for n in 1..=7 {
        for g in all_graphs(n) {
            let r = longest_path_order(&g).unwrap();
            assert!(is_path(&g, &r.path));
            assert_eq!(r.order, longest_oracle(&g), "{g:?}");
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let g = random_graph(&mut rng, 8);
        assert_eq!(longest_path_order(&g).unwrap().order, longest_oracle(&g));
    }
}

#[test]
fn central_of_complete_is_bipartite() {
    for n in 2..=8 {
        let cg = tdc_core::central::central(&Graph::complete(n).unwrap());
        let r = chromatic_number(cg.result()).unwrap();
        assert_eq!(r.value, 2);
    }
}

#[test]
fn enumeration_counts() {
    let all: Vec<usize> = (1..=7).map(|n| all_graphs(n).len()).collect();
    assert_eq!(all, [1, 2, 4, 11, 34, 156, 1044]);
    let connected: Vec<usize> = (1..=7).map(|n| connected_graphs(n).len()).collect();
    assert_eq!(connected, [1, 1, 2, 6, 21, 112, 853]);
}
