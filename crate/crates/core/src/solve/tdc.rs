use crate::chromatic::chromatic_number_with;
use crate::coloring::{is_tdc, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solve::{
    bits, require_no_isolated, total_domination_number, Budget, SolveOptions, SolveResult, Witness,
    DEFAULT_TDC_CAP,
};

/// χ_d^t(g) with a total dominator coloring attaining it.
///
/// The search starts from the lower bound `max(χ, γ_t, 2)` and a greedy
/// upper bound, then repeatedly looks for a coloring with fewer classes than
/// the best one found until that is impossible or the bounds meet.
pub fn tdc_number(g: &Graph, opts: &SolveOptions) -> Result<SolveResult> {
    opts.check_order(g, DEFAULT_TDC_CAP, "the TDC solver")?;
    require_no_isolated(g, "a total dominator coloring")?;
    let adj = g.adjacency_masks();
    let mut budget = Budget::new(opts);

    let sub = |r: Result<SolveResult>| match r {
        Ok(r) => Ok(r.value),
        Err(Error::Budget { lower, .. }) => Ok(lower),
        Err(e) => Err(e),
    };
    let chi = sub(chromatic_number_with(g, opts))?;
    let gamma = sub(total_domination_number(g, opts))?;
    let lower = chi.max(gamma).max(2);

    let mut best = greedy_upper(&adj);
    loop {
        let count = best.iter().max().map_or(0, |&c| c + 1);
        if count <= lower {
            break;
        }
        let target = count - 1;
        let mut s = Search::new(&adj, target);
        match s.run(&mut budget) {
            Some(true) => best = s.color.clone(),
            Some(false) => break,
            None => {
                return Err(Error::Budget {
                    lower,
                    upper: count,
                })
            }
        }
    }
    let coloring = Coloring::from_labels(&best);
    if !is_tdc(g, &coloring)?.holds() {
        return Err(Error::Uncertified("solver witness failed re-verification".into()));
    }
    Ok(SolveResult {
        value: coloring.class_count(),
        witness: Witness::Coloring(coloring),
        stats: budget.stats(),
    })
}

fn all_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1 << n) - 1
    }
}

/// Starts from singleton classes and merges non-adjacent classes while every
/// vertex still dominates some class.
fn greedy_upper(adj: &[u64]) -> Vec<usize> {
    let n = adj.len();
    let mut classes: Vec<u64> = (0..n).map(|v| 1 << v).collect();
    let valid = |cs: &[u64]| (0..n).all(|w| cs.iter().any(|&c| c & !adj[w] == 0));
    loop {
        let mut merged = false;
        let mut i = 0;
        while i < classes.len() {
            let mut j = i + 1;
            while j < classes.len() {
                let (a, b) = (classes[i], classes[j]);
                let independent = bits(a).all(|v| adj[v] & b == 0);
                if independent {
                    let mut trial = classes.clone();
                    trial[i] = a | b;
                    trial.remove(j);
                    if valid(&trial) {
                        classes = trial;
                        merged = true;
                        continue;
                    }
                }
                j += 1;
            }
            i += 1;
        }
        if !merged {
            break;
        }
    }
    let mut color = vec![0; n];
    for (c, &m) in classes.iter().enumerate() {
        for v in bits(m) {
            color[v] = c;
        }
    }
    color
}

/// A requirement for some class not yet opened: it must lie inside `within`
/// and contain `must`.
#[derive(Clone, Copy)]
struct Demand {
    must: u64,
    within: u64,
}

impl Demand {
    fn compatible(self, other: Demand) -> bool {
        let both = self.within & other.within;
        both != 0 && (self.must | other.must) & !both == 0
    }
}

/// Decides whether a TDC with at most `k` classes exists.
struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    k: usize,
    classes: Vec<u64>,
    opened: usize,
    color: Vec<usize>,
    uncolored: u64,
    /// For each vertex, the open classes contained in its neighborhood.
    dom: Vec<u64>,
    rank: Vec<usize>,
    demands: Vec<Demand>,
}

impl<'a> Search<'a> {
    fn new(adj: &'a [u64], k: usize) -> Search<'a> {
        let n = adj.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(adj[v].count_ones()), v));
        let mut rank = vec![0; n];
        for (r, &v) in order.iter().enumerate() {
            rank[v] = r;
        }
        Search {
            adj,
            n,
            k,
            classes: vec![0; k],
            opened: 0,
            color: vec![usize::MAX; n],
            uncolored: all_mask(n),
            dom: vec![0; n],
            rank,
            demands: Vec::with_capacity(2 * n),
        }
    }

    fn assign(&mut self, u: usize, c: usize) {
        let bit = 1u64 << c;
        if c == self.opened {
            self.opened += 1;
            for w in bits(self.adj[u]) {
                self.dom[w] |= bit;
            }
        } else {
            for w in bits(!self.adj[u] & all_mask(self.n)) {
                self.dom[w] &= !bit;
            }
        }
        self.classes[c] |= 1 << u;
        self.color[u] = c;
        self.uncolored &= !(1 << u);
    }

    /// False when the partial coloring provably cannot be completed within
    /// `k` classes.
    fn feasible(&mut self) -> bool {
        let spare = self.k - self.opened;
        self.demands.clear();
        for w in 0..self.n {
            if self.dom[w] != 0 {
                continue;
            }
            let avail = self.adj[w] & self.uncolored;
            if avail == 0 || spare == 0 {
                return false;
            }
            self.demands.push(Demand {
                must: 0,
                within: avail,
            });
        }
        for u in bits(self.uncolored) {
            let fits = self.classes[..self.opened]
                .iter()
                .any(|&c| self.adj[u] & c == 0);
            if !fits {
                if spare == 0 {
                    return false;
                }
                self.demands.push(Demand {
                    must: 1 << u,
                    within: self.uncolored & !self.adj[u],
                });
            }
        }
        if self.demands.len() <= spare {
            return true;
        }
        // Pairwise incompatible demands need distinct new classes.
        self.demands
            .sort_by_key(|d| (d.must == 0, d.within.count_ones()));
        let mut clique: Vec<Demand> = Vec::with_capacity(spare + 1);
        for &d in &self.demands {
            if clique.iter().all(|&e| !e.compatible(d)) {
                clique.push(d);
                if clique.len() > spare {
                    return false;
                }
            }
        }
        true
    }

    fn choose(&self) -> usize {
        let mut pick = usize::MAX;
        let mut key = (u32::MAX, usize::MAX);
        for u in bits(self.uncolored) {
            let open = self.classes[..self.opened]
                .iter()
                .filter(|&&c| self.adj[u] & c == 0)
                .count() as u32;
            let options = open + u32::from(self.opened < self.k);
            let k = (options, self.rank[u]);
            if k < key {
                key = k;
                pick = u;
            }
        }
        pick
    }

    fn run(&mut self, budget: &mut Budget) -> Option<bool> {
        if self.uncolored == 0 {
            return Some(true);
        }
        if !budget.tick() {
            return None;
        }
        let u = self.choose();
        let limit = (self.opened + 1).min(self.k);
        for c in 0..limit {
            if self.adj[u] & self.classes[c] != 0 {
                continue;
            }
            let saved_dom = self.dom.clone();
            let saved_opened = self.opened;
            self.assign(u, c);
            if self.feasible() {
                let r = self.run(budget);
                if r != Some(false) {
                    return r;
                }
            }
            self.classes[c] &= !(1 << u);
            self.color[u] = usize::MAX;
            self.uncolored |= 1 << u;
            self.opened = saved_opened;
            self.dom = saved_dom;
        }
        Some(false)
    }
}
