//! Exact solvers for γ_t and χ_d^t, the shared result type, and the
//! brute-force oracles used to cross-check them.

use std::time::{Duration, Instant};

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;

mod domination;
mod oracle;
mod tdc;

pub use domination::total_domination_number;
pub use oracle::{gamma_t_bruteforce, tdc_number_bruteforce, BRUTEFORCE_GAMMA_CAP, BRUTEFORCE_TDC_CAP};
pub use tdc::tdc_number;

pub const DEFAULT_TDC_CAP: usize = 40;
pub const DEFAULT_GAMMA_CAP: usize = 40;
pub const DEFAULT_CHI_CAP: usize = 64;

/// Limits for one exact solve.
#[derive(Debug, Clone, Default)]
pub struct SolveOptions {
    /// Largest accepted order; `None` uses the solver's default.
    pub cap: Option<usize>,
    /// Wall-clock limit for the whole solve.
    pub budget: Option<Duration>,
    /// Limit on search nodes, mainly for tests.
    pub node_limit: Option<u64>,
}

impl SolveOptions {
    pub fn with_budget(budget: Duration) -> SolveOptions {
        SolveOptions {
            budget: Some(budget),
            ..SolveOptions::default()
        }
    }

    pub(crate) fn check_order(&self, g: &Graph, default: usize, what: &'static str) -> Result<()> {
        let cap = self.cap.unwrap_or(default).min(64);
        if g.order() > cap {
            return Err(Error::Capacity {
                what,
                order: g.order(),
                cap,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Coloring(Coloring),
    Set(Vec<usize>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SolveStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub value: usize,
    pub witness: Witness,
    pub stats: SolveStats,
}

impl SolveResult {
    pub fn coloring(&self) -> Option<&Coloring> {
        match &self.witness {
            Witness::Coloring(c) => Some(c),
            Witness::Set(_) => None,
        }
    }

    pub fn set(&self) -> Option<&[usize]> {
        match &self.witness {
            Witness::Set(s) => Some(s),
            Witness::Coloring(_) => None,
        }
    }
}

/// Which invariant to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Invariant {
    Chi,
    GammaT,
    Tdc,
}

impl Invariant {
    pub fn name(self) -> &'static str {
        match self {
            Invariant::Chi => "chi",
            Invariant::GammaT => "gammat",
            Invariant::Tdc => "tdc",
        }
    }
}

impl std::str::FromStr for Invariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Invariant> {
        match s {
            "chi" => Ok(Invariant::Chi),
            "gammat" => Ok(Invariant::GammaT),
            "tdc" => Ok(Invariant::Tdc),
            _ => Err(Error::Parameter(format!("unknown invariant {s:?}; expected chi, gammat or tdc"))),
        }
    }
}

pub fn solve(g: &Graph, invariant: Invariant, opts: &SolveOptions) -> Result<SolveResult> {
    match invariant {
        Invariant::Chi => crate::chromatic::chromatic_number_with(g, opts),
        Invariant::GammaT => total_domination_number(g, opts),
        Invariant::Tdc => tdc_number(g, opts),
    }
}

/// Node and time accounting shared by the searches.
pub(crate) struct Budget {
    start: Instant,
    deadline: Option<Instant>,
    node_limit: Option<u64>,
    pub(crate) nodes: u64,
}

impl Budget {
    pub(crate) fn new(opts: &SolveOptions) -> Budget {
        let start = Instant::now();
        Budget {
            start,
            deadline: opts.budget.map(|b| start + b),
            node_limit: opts.node_limit,
            nodes: 0,
        }
    }

    /// Counts a node; false once the budget is spent.
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.node_limit.is_some_and(|l| self.nodes > l) {
            return false;
        }
        if self.nodes % 4096 == 0 {
            if let Some(d) = self.deadline {
                return Instant::now() < d;
            }
        }
        true
    }

    pub(crate) fn stats(&self) -> SolveStats {
        SolveStats {
            nodes: self.nodes,
            elapsed: self.start.elapsed(),
        }
    }
}

pub(crate) fn require_no_isolated(g: &Graph, what: &'static str) -> Result<()> {
    match g.first_isolated_vertex() {
        Some(vertex) => Err(Error::Isolated { vertex, what }),
        None => Ok(()),
    }
}

pub(crate) fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}
