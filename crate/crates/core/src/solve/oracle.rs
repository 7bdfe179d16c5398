//! Exhaustive reference implementations. They share no search code with the
//! exact solvers and only use the verifiers from [`crate::coloring`].

use crate::coloring::{is_tdc, is_total_dominating_set, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solve::require_no_isolated;

pub const BRUTEFORCE_TDC_CAP: usize = 10;
pub const BRUTEFORCE_GAMMA_CAP: usize = 16;

/// χ_d^t by checking every set partition of the vertices.
pub fn tdc_number_bruteforce(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > BRUTEFORCE_TDC_CAP {
        return Err(Error::Capacity {
            what: "the brute-force TDC oracle",
            order: n,
            cap: BRUTEFORCE_TDC_CAP,
        });
    }
    require_no_isolated(g, "a total dominator coloring")?;
    // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[..i]).
    let mut a = vec![0usize; n];
    let mut best = usize::MAX;
    loop {
        let c = Coloring::new(a.clone())?;
        if c.class_count() < best && is_tdc(g, &c)?.holds() {
            best = c.class_count();
        }
        let mut i = n;
        loop {
            if i <= 1 {
                return Ok(best);
            }
            i -= 1;
            let prefix_max = a[..i].iter().copied().max().unwrap_or(0);
            if a[i] <= prefix_max {
                a[i] += 1;
                a[i + 1..].iter_mut().for_each(|x| *x = 0);
                break;
            }
        }
    }
}

/// γ_t by checking subsets in order of increasing size.
pub fn gamma_t_bruteforce(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > BRUTEFORCE_GAMMA_CAP {
        return Err(Error::Capacity {
            what: "the brute-force total domination oracle",
            order: n,
            cap: BRUTEFORCE_GAMMA_CAP,
        });
    }
    require_no_isolated(g, "the total domination number")?;
    for k in 1..=n {
        let mut set: Vec<usize> = (0..k).collect();
        loop {
            if is_total_dominating_set(g, &set) {
                return Ok(k);
            }
            // next k-combination in lexicographic order
            let Some(i) = (0..k).rev().find(|&i| set[i] < n - k + i) else {
                break;
            };
            set[i] += 1;
            for j in i + 1..k {
                set[j] = set[j - 1] + 1;
            }
        }
    }
    unreachable!("the whole vertex set is a TDS when no vertex is isolated")
}
