//! Exact chromatic number by iterative deepening on the number of colors,
//! with DSATUR branching and a greedy clique fixed to the first colors.

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solve::{bits, Budget, SolveOptions, SolveResult, Witness, DEFAULT_CHI_CAP};

/// χ(g) with a proper coloring attaining it.
pub fn chromatic_number(g: &Graph) -> Result<SolveResult> {
    chromatic_number_with(g, &SolveOptions::default())
}

pub fn chromatic_number_with(g: &Graph, opts: &SolveOptions) -> Result<SolveResult> {
    opts.check_order(g, DEFAULT_CHI_CAP, "the chromatic number solver")?;
    let adj = g.adjacency_masks();
    let mut budget = Budget::new(opts);
    let clique = greedy_clique(&adj);
    let (upper, mut best) = dsatur_greedy(&adj);
    for k in clique.len()..upper {
        let mut s = Search::new(&adj, k);
        for (c, &v) in clique.iter().enumerate() {
            s.assign(v, c);
        }
        match s.run(&mut budget) {
            Some(true) => {
                best = s.color;
                break;
            }
            Some(false) => {}
            None => {
                return Err(Error::Budget { lower: k, upper });
            }
        }
    }
    let coloring = Coloring::from_labels(&best);
    debug_assert!(crate::coloring::is_proper(g, &coloring).unwrap().holds());
    Ok(SolveResult {
        value: coloring.class_count(),
        witness: Witness::Coloring(coloring),
        stats: budget.stats(),
    })
}

fn greedy_clique(adj: &[u64]) -> Vec<usize> {
    let n = adj.len();
    let mut best = Vec::new();
    for start in 0..n {
        let mut clique = vec![start];
        let mut cand = adj[start];
        while cand != 0 {
            let v = bits(cand)
                .max_by_key(|&v| ((adj[v] & cand).count_ones(), std::cmp::Reverse(v)))
                .expect("nonempty");
            clique.push(v);
            cand &= adj[v];
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

fn saturation(adj: &[u64], classes: &[u64], v: usize) -> u32 {
    classes.iter().filter(|&&c| adj[v] & c != 0).count() as u32
}

fn dsatur_greedy(adj: &[u64]) -> (usize, Vec<usize>) {
    let n = adj.len();
    let mut color = vec![usize::MAX; n];
    let mut classes: Vec<u64> = Vec::new();
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == usize::MAX)
            .max_by_key(|&v| (saturation(adj, &classes, v), adj[v].count_ones(), std::cmp::Reverse(v)))
            .expect("uncolored vertex");
        let c = (0..classes.len())
            .find(|&c| adj[v] & classes[c] == 0)
            .unwrap_or_else(|| {
                classes.push(0);
                classes.len() - 1
            });
        classes[c] |= 1 << v;
        color[v] = c;
    }
    (classes.len(), color)
}

struct Search<'a> {
    adj: &'a [u64],
    k: usize,
    classes: Vec<u64>,
    color: Vec<usize>,
    uncolored: u64,
}

impl<'a> Search<'a> {
    fn new(adj: &'a [u64], k: usize) -> Search<'a> {
        let n = adj.len();
        Search {
            adj,
            k,
            classes: vec![0; k],
            color: vec![usize::MAX; n],
            uncolored: if n == 64 { u64::MAX } else { (1 << n) - 1 },
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.classes[c] |= 1 << v;
        self.color[v] = c;
        self.uncolored &= !(1 << v);
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.classes[c] &= !(1 << v);
        self.color[v] = usize::MAX;
        self.uncolored |= 1 << v;
    }

    /// `Some(found)` or `None` when the budget ran out.
    fn run(&mut self, budget: &mut Budget) -> Option<bool> {
        if self.uncolored == 0 {
            return Some(true);
        }
        if !budget.tick() {
            return None;
        }
        let mut pick = None;
        let mut pick_key = (0, 0);
        for v in bits(self.uncolored) {
            let sat = saturation(self.adj, &self.classes, v);
            if sat as usize >= self.k {
                return Some(false);
            }
            let key = (sat + 1, (self.adj[v] & self.uncolored).count_ones());
            if key > pick_key {
                pick_key = key;
                pick = Some(v);
            }
        }
        let v = pick.expect("uncolored vertex");
        // Only the first empty class is tried: empty classes are interchangeable.
        let mut tried_empty = false;
        for c in 0..self.k {
            if self.adj[v] & self.classes[c] != 0 {
                continue;
            }
            if self.classes[c] == 0 {
                if tried_empty {
                    continue;
                }
                tried_empty = true;
            }
            self.assign(v, c);
            let r = self.run(budget);
            if r != Some(false) {
                return r;
            }
            self.unassign(v, c);
        }
        Some(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::central::central;
    use crate::family::FamilySpec;

    fn chi(g: &Graph) -> usize {
        chromatic_number(g).unwrap().value
    }

    #[test]
    fn examples() {
        assert_eq!(chi(&Graph::complete(5).unwrap()), 5);
        assert_eq!(chi(central(&Graph::complete(4).unwrap()).result()), 2);
        assert_eq!(chi(&FamilySpec::Cycle(5).build().unwrap()), 3);
        assert_eq!(chi(&Graph::empty(3).unwrap()), 1);
        assert_eq!(chi(&FamilySpec::Wheel(5).build().unwrap()), 4);
    }

    #[test]
    fn cap_enforced() {
        let g = Graph::empty(65).unwrap();
        assert!(matches!(chromatic_number(&g), Err(Error::Capacity { .. })));
    }
}
