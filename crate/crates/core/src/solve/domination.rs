use crate::coloring::is_total_dominating_set;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solve::{bits, require_no_isolated, Budget, SolveOptions, SolveResult, Witness, DEFAULT_GAMMA_CAP};

/// γ_t(g): the smallest set `S` such that every vertex has a neighbor in `S`.
///
/// Branches on the uncovered vertex with the fewest remaining candidate
/// neighbors; candidates tried earlier in the same branch are excluded from
/// later siblings.
pub fn total_domination_number(g: &Graph, opts: &SolveOptions) -> Result<SolveResult> {
    opts.check_order(g, DEFAULT_GAMMA_CAP, "the total domination solver")?;
    require_no_isolated(g, "the total domination number")?;
    let adj = g.adjacency_masks();
    let n = g.order();
    let all = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let greedy = greedy_tds(&adj, all);
    let mut s = Search {
        adj: &adj,
        best: greedy,
        budget: Budget::new(opts),
        exhausted: false,
    };
    s.branch(all, 0, 0);
    if s.exhausted {
        return Err(Error::Budget {
            lower: 2.min(n),
            upper: s.best.count_ones() as usize,
        });
    }
    let set: Vec<usize> = bits(s.best).collect();
    debug_assert!(is_total_dominating_set(g, &set));
    Ok(SolveResult {
        value: set.len(),
        witness: Witness::Set(set),
        stats: s.budget.stats(),
    })
}

fn greedy_tds(adj: &[u64], all: u64) -> u64 {
    let mut uncovered = all;
    let mut set = 0u64;
    while uncovered != 0 {
        let u = bits(all)
            .max_by_key(|&u| ((adj[u] & uncovered).count_ones(), std::cmp::Reverse(u)))
            .expect("vertices exist");
        set |= 1 << u;
        uncovered &= !adj[u];
    }
    set
}

struct Search<'a> {
    adj: &'a [u64],
    best: u64,
    budget: Budget,
    exhausted: bool,
}

impl Search<'_> {
    /// Lower bound on the vertices still needed to cover `uncovered` using
    /// candidates outside `excluded`.
    fn bound(&self, uncovered: u64, excluded: u64) -> Option<u32> {
        let mut max_cover = 0;
        for u in bits(!excluded & mask_len(self.adj.len())) {
            max_cover = max_cover.max((self.adj[u] & uncovered).count_ones());
        }
        if max_cover == 0 {
            return None;
        }
        let by_cover = uncovered.count_ones().div_ceil(max_cover);
        // Vertices whose candidate sets are pairwise disjoint need distinct
        // dominators.
        let mut used = 0u64;
        let mut packing = 0;
        for w in bits(uncovered) {
            let cand = self.adj[w] & !excluded;
            if cand == 0 {
                return None;
            }
            if cand & used == 0 {
                used |= cand;
                packing += 1;
            }
        }
        Some(by_cover.max(packing))
    }

    fn branch(&mut self, uncovered: u64, set: u64, excluded: u64) {
        if self.exhausted {
            return;
        }
        if uncovered == 0 {
            if set.count_ones() < self.best.count_ones() {
                self.best = set;
            }
            return;
        }
        if !self.budget.tick() {
            self.exhausted = true;
            return;
        }
        let Some(lb) = self.bound(uncovered, excluded) else {
            return;
        };
        if set.count_ones() + lb >= self.best.count_ones() {
            return;
        }
        let w = bits(uncovered)
            .min_by_key(|&w| ((self.adj[w] & !excluded).count_ones(), w))
            .expect("uncovered vertex");
        let mut cands: Vec<usize> = bits(self.adj[w] & !excluded).collect();
        cands.sort_by_key(|&u| (std::cmp::Reverse((self.adj[u] & uncovered).count_ones()), u));
        let mut ex = excluded;
        for u in cands {
            self.branch(uncovered & !self.adj[u], set | 1 << u, ex | 1 << u);
            ex |= 1 << u;
        }
    }
}

fn mask_len(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1 << n) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::central::central;
    use crate::family::FamilySpec;

    fn gamma(g: &Graph) -> usize {
        total_domination_number(g, &SolveOptions::default()).unwrap().value
    }

    #[test]
    fn examples() {
        assert_eq!(gamma(&FamilySpec::Cycle(4).build().unwrap()), 2);
        assert_eq!(gamma(central(&Graph::complete(4).unwrap()).result()), 5);
        assert_eq!(gamma(central(&FamilySpec::Cycle(4).build().unwrap()).result()), 4);
        assert_eq!(gamma(&FamilySpec::Cycle(6).build().unwrap()), 4);
    }

    #[test]
    fn isolated_rejected() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(matches!(
            total_domination_number(&g, &SolveOptions::default()),
            Err(Error::Isolated { vertex: 2, .. })
        ));
    }
}
