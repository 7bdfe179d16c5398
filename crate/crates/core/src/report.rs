//! Theorem conformance reports: for one graph, every bound and identity whose
//! hypotheses it satisfies, evaluated with exact values.
//!
//! Each entry records integer operands `lhs` and `rhs`. The relation between
//! them is fixed by the theorem id (see [`relation`]) so that `holds` can be
//! recomputed from the stored numbers alone.

use std::collections::HashMap;
use std::sync::Mutex;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::central::central;
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::formulas::{formula_complement_central, formula_value};
use crate::graph::{Graph, Structure};
use crate::io::{decode_graph6, encode_graph6};
use crate::longest_path::{longest_path_with_cap, DEFAULT_LONGEST_PATH_CAP};
use crate::solve::{solve, Invariant, SolveOptions};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphId {
    pub n: u64,
    pub m: u64,
    pub graph6: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportEntry {
    pub theorem: String,
    pub applicable: bool,
    pub lhs: Vec<u64>,
    pub rhs: Vec<u64>,
    pub holds: bool,
    pub note: String,
    pub skipped: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TheoremReport {
    pub graph: GraphId,
    pub entries: Vec<ReportEntry>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// `lhs[i] <= rhs[i]` for every `i`.
    Le,
    /// `lhs == rhs`.
    Eq,
    /// `lhs != rhs`.
    Ne,
}

/// How an entry's operands are compared.
pub fn relation(theorem: &str) -> Relation {
    match theorem {
        "thm1.3-bipartite" | "thm1.3-complete" | "lemma2.4" | "thm2.5" | "thm4.2" | "prop4.3-path"
        | "formula" => Relation::Eq,
        "thm1.3-bipartite-converse" | "thm1.3-complete-converse" | "thm2.5-converse" | "rem2.9" => {
            Relation::Ne
        }
        _ => Relation::Le,
    }
}

impl ReportEntry {
    /// Whether the recorded operands satisfy the entry's relation. Always
    /// false for skipped or inapplicable entries.
    pub fn recompute_holds(&self) -> bool {
        if !self.applicable || self.skipped || self.lhs.len() != self.rhs.len() || self.lhs.is_empty() {
            return false;
        }
        let pairs = self.lhs.iter().zip(&self.rhs);
        match relation(&self.theorem) {
            Relation::Le => pairs.clone().all(|(a, b)| a <= b),
            Relation::Eq => self.lhs == self.rhs,
            Relation::Ne => self.lhs != self.rhs,
        }
    }

    /// An applicable, decided entry whose relation fails.
    pub fn is_violation(&self) -> bool {
        self.applicable && !self.skipped && !self.holds
    }
}

impl TheoremReport {
    pub fn violations(&self) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(|e| e.is_violation())
    }

    pub fn entry(&self, theorem: &str) -> Option<&ReportEntry> {
        self.entries.iter().find(|e| e.theorem == theorem)
    }
}

#[derive(Debug, Clone)]
pub struct ReportOptions {
    /// Time limit for each exact solve.
    pub budget: Option<Duration>,
    /// Order cap passed to the exact solvers.
    pub cap: Option<usize>,
    pub longest_path_cap: usize,
    /// Values of `t` for the join bound on `C(G ∘ K̄_t)`.
    pub join_t: Vec<usize>,
}

impl Default for ReportOptions {
    fn default() -> ReportOptions {
        ReportOptions {
            budget: None,
            cap: None,
            longest_path_cap: DEFAULT_LONGEST_PATH_CAP,
            join_t: vec![1],
        }
    }
}

/// Exact values shared across reports, keyed by invariant and labeled graph6.
/// Safe for concurrent use; solves run outside the lock.
#[derive(Default)]
pub struct SolveCache {
    map: Mutex<HashMap<(Invariant, String), Result<usize>>>,
}

impl SolveCache {
    pub fn new() -> SolveCache {
        SolveCache::default()
    }

    pub fn len(&self) -> usize {
        self.map.lock().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn value(&self, g: &Graph, inv: Invariant, opts: &SolveOptions) -> Result<usize> {
        let key = (inv, encode_graph6(g));
        if let Some(v) = self.map.lock().expect("cache lock").get(&key) {
            return v.clone();
        }
        let v = solve(g, inv, opts).map(|r| r.value);
        self.map.lock().expect("cache lock").insert(key, v.clone());
        v
    }
}

fn inapplicable(msg: impl Into<String>) -> Error {
    Error::Inapplicable(msg.into())
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(inapplicable(msg))
    }
}

type Check = (Vec<usize>, Vec<usize>, String);

fn make_entry(theorem: &str, outcome: Result<Check>) -> ReportEntry {
    let mut e = ReportEntry {
        theorem: theorem.to_string(),
        applicable: true,
        lhs: Vec::new(),
        rhs: Vec::new(),
        holds: false,
        note: String::new(),
        skipped: false,
    };
    match outcome {
        Ok((lhs, rhs, note)) => {
            e.lhs = lhs.into_iter().map(|x| x as u64).collect();
            e.rhs = rhs.into_iter().map(|x| x as u64).collect();
            e.note = note;
            e.holds = e.recompute_holds();
        }
        Err(Error::Inapplicable(msg)) => {
            e.applicable = false;
            e.note = msg;
        }
        Err(Error::Budget { lower, upper }) => {
            e.skipped = true;
            e.note = format!("budget exhausted; value lies in [{lower}, {upper}]");
        }
        Err(other) => {
            e.skipped = true;
            e.note = other.to_string();
        }
    }
    e
}

struct Ctx<'a> {
    g: &'a Graph,
    s: Structure,
    n: usize,
    m: usize,
    cache: &'a SolveCache,
    solve_opts: SolveOptions,
    opts: &'a ReportOptions,
    central: Option<Graph>,
    complement_central: Option<Graph>,
    longest: Option<Result<usize>>,
}

impl Ctx<'_> {
    fn value(&self, g: &Graph, inv: Invariant) -> Result<usize> {
        self.cache.value(g, inv, &self.solve_opts)
    }

    fn central(&mut self) -> &Graph {
        let g = self.g;
        self.central.get_or_insert_with(|| central(g).into_result())
    }

    /// χ_d^t(C(G)).
    fn x(&mut self) -> Result<usize> {
        let c = self.central().clone();
        self.value(&c, Invariant::Tdc)
    }

    /// χ_d^t of the complement of C(G).
    fn y(&mut self) -> Result<usize> {
        if self.complement_central.is_none() {
            self.complement_central = Some(self.central().complement());
        }
        let c = self.complement_central.clone().expect("set above");
        self.value(&c, Invariant::Tdc)
    }

    /// Order of a longest path of G.
    fn t(&mut self) -> Result<usize> {
        let (g, cap) = (self.g, self.opts.longest_path_cap);
        self.longest
            .get_or_insert_with(|| longest_path_with_cap(g, cap).map(|p| p.order))
            .clone()
    }

    fn connected(&self) -> Result<()> {
        require(self.s.is_connected, "the graph must be connected")
    }

    fn order_at_least(&self, k: usize) -> Result<()> {
        require(self.n >= k, &format!("the order must be at least {k}"))
    }
}

/// Evaluates every applicable theorem on `g`.
pub fn theorem_report(g: &Graph, opts: &ReportOptions, cache: &SolveCache) -> TheoremReport {
    let mut cx = Ctx {
        g,
        s: g.classify(),
        n: g.order(),
        m: g.size(),
        cache,
        solve_opts: SolveOptions {
            cap: opts.cap,
            budget: opts.budget,
            node_limit: None,
        },
        opts,
        central: None,
        complement_central: None,
        longest: None,
    };
    let n = cx.n;
    let m = cx.m;
    let half = n.div_ceil(2);
    let two_thirds = 2 * n / 3;
    let mut entries = Vec::new();
    let mut push = |id: &str, r: Result<Check>| entries.push(make_entry(id, r));

    // Bounds on χ_d^t(G) itself and its two characterizations.
    let base = |cx: &mut Ctx| -> Result<(usize, usize, usize)> {
        cx.connected()?;
        require(cx.s.min_degree >= 1, "the graph needs minimum degree at least 1")?;
        let chi = cx.value(g, Invariant::Chi)?;
        let gamma = cx.value(g, Invariant::GammaT)?;
        let tdc = cx.value(g, Invariant::Tdc)?;
        Ok((chi, gamma, tdc))
    };
    push(
        "thm1.3",
        base(&mut cx).map(|(chi, gamma, tdc)| {
            let lo = chi.max(gamma).max(2);
            (
                vec![lo, tdc],
                vec![tdc, n],
                format!("max(chi={chi}, gamma_t={gamma}, 2) <= chi_d^t={tdc} <= n={n}"),
            )
        }),
    );
    let bip = cx.s.is_complete_bipartite;
    let complete = cx.s.is_complete;
    push(
        "thm1.3-bipartite",
        require(bip, "the graph is not complete bipartite")
            .and_then(|_| base(&mut cx))
            .map(|(_, _, tdc)| (vec![tdc], vec![2], "complete bipartite, so chi_d^t = 2".into())),
    );
    push(
        "thm1.3-bipartite-converse",
        require(!bip, "the graph is complete bipartite")
            .and_then(|_| base(&mut cx))
            .map(|(_, _, tdc)| (vec![tdc], vec![2], "not complete bipartite, so chi_d^t != 2".into())),
    );
    push(
        "thm1.3-complete",
        require(complete, "the graph is not complete")
            .and_then(|_| base(&mut cx))
            .map(|(_, _, tdc)| (vec![tdc], vec![n], "complete, so chi_d^t = n".into())),
    );
    push(
        "thm1.3-complete-converse",
        require(!complete, "the graph is complete")
            .and_then(|_| base(&mut cx))
            .map(|(_, _, tdc)| (vec![tdc], vec![n], "not complete, so chi_d^t != n".into())),
    );

    push(
        "thm1.4",
        (|| {
            cx.connected()?;
            require(cx.s.min_degree >= 2, "the graph needs minimum degree at least 2")?;
            let cycle = cx.s.max_degree == 2;
            require(
                !(cycle && [3, 5, 6, 10].contains(&n)),
                &format!("C_{n} is an excluded graph"),
            )?;
            require(n != 10, "order 10 contains the excluded graphs H_10 and H'_10")?;
            let gamma = cx.value(g, Invariant::GammaT)?;
            Ok((vec![gamma], vec![4 * n / 7], format!("gamma_t={gamma} <= floor(4n/7)")))
        })(),
    );

    push(
        "thm2.1",
        (|| {
            cx.connected()?;
            cx.order_at_least(2)?;
            let t = cx.t()?;
            let x = cx.x()?;
            Ok((
                vec![two_thirds + 1, x],
                vec![x, n + t.div_ceil(2)],
                format!("floor(2n/3)+1 <= X={x} <= n+ceil(t/2), t={t}"),
            ))
        })(),
    );
    push(
        "thm2.2",
        (|| {
            cx.order_at_least(2)?;
            require(cx.t()? == n, "the graph has no Hamiltonian path")?;
            let x = cx.x()?;
            Ok((
                vec![two_thirds + 1, x],
                vec![x, n + half],
                format!("floor(2n/3)+1 <= X={x} <= n+ceil(n/2)"),
            ))
        })(),
    );
    push(
        "thm2.3",
        (|| {
            cx.connected()?;
            cx.order_at_least(2)?;
            require(cx.s.max_degree + 2 <= n, "the maximum degree exceeds n-2")?;
            let x = cx.x()?;
            Ok((
                vec![two_thirds + 1, x],
                vec![x, n + 1],
                format!("floor(2n/3)+1 <= X={x} <= n+1"),
            ))
        })(),
    );
    push(
        "lemma2.4",
        (|| {
            require(complete, "the graph is not complete")?;
            cx.order_at_least(2)?;
            let c = cx.central().clone();
            let gamma = cx.value(&c, Invariant::GammaT)?;
            Ok((
                vec![gamma],
                vec![n + half - 1],
                format!("gamma_t(C(K_n))={gamma} = n+ceil(n/2)-1"),
            ))
        })(),
    );
    push(
        "thm2.5",
        (|| {
            cx.connected()?;
            cx.order_at_least(4)?;
            require(complete, "the graph is not complete")?;
            let x = cx.x()?;
            Ok((vec![x], vec![n + half], format!("K_n, so X={x} = n+ceil(n/2)")))
        })(),
    );
    push(
        "thm2.5-converse",
        (|| {
            cx.connected()?;
            cx.order_at_least(4)?;
            require(!complete, "the graph is complete")?;
            let x = cx.x()?;
            Ok((vec![x], vec![n + half], format!("not K_n, so X={x} != n+ceil(n/2)")))
        })(),
    );
    push(
        "thm2.7",
        (|| {
            cx.connected()?;
            cx.order_at_least(4)?;
            let c = cx.central().clone();
            let gamma = cx.value(&c, Invariant::GammaT)?;
            Ok((
                vec![3, gamma],
                vec![gamma, n + half - 1],
                format!("3 <= gamma_t(C(G))={gamma} <= n+ceil(n/2)-1"),
            ))
        })(),
    );

    let components = g.components();
    let w = components.len();
    let union_hyp = || -> Result<()> {
        require(w >= 2, "the graph is connected")?;
        require(cx.s.min_degree >= 1, "the graph has an isolated vertex")
    };
    let union_hyp = union_hyp();
    let union_lower: usize = components.iter().map(|c| 2 * c.len() / 3).sum::<usize>() + 1;
    push(
        "thm2.8",
        union_hyp.clone().and_then(|_| {
            let x = cx.x()?;
            Ok((
                vec![union_lower, x],
                vec![x, n + w - 1],
                format!("sum floor(2n_i/3)+1 <= X={x} <= n+w-1, w={w}"),
            ))
        }),
    );
    push(
        "thm2.8-construction",
        union_hyp.and_then(|_| {
            let x = cx.x()?;
            Ok((vec![x], vec![n - w + 1], format!("X={x} <= n-w+1, w={w}")))
        }),
    );
    push(
        "rem2.9",
        (|| {
            cx.connected()?;
            cx.order_at_least(2)?;
            let x = cx.x()?;
            Ok((vec![x], vec![3], format!("X={x} != 3")))
        })(),
    );

    for &t in &opts.join_t {
        let id = format!("thm3.1(t={t})");
        push(
            &id,
            (|| {
                cx.order_at_least(2)?;
                require(t >= 1, "t must be positive")?;
                let x = cx.x()?;
                let joined = Graph::join(g, &Graph::empty(t)?)?;
                let yj = cx.value(&central(&joined).into_result(), Invariant::Tdc)?;
                Ok((
                    vec![x + t, yj],
                    vec![yj, x + t + 1],
                    format!("X+t <= chi_d^t(C(G join empty_{t}))={yj} <= X+t+1, X={x}"),
                ))
            })(),
        );
    }

    let nordhaus = (|| {
        let chi = cx.value(g, Invariant::Chi)?;
        let chi_bar = cx.value(&g.complement(), Invariant::Chi)?;
        Ok((chi, chi_bar))
    })();
    push(
        "thm4.1-lower",
        nordhaus.clone().map(|(a, b)| {
            let s = a + b;
            (
                vec![4 * n],
                vec![s * s],
                format!("2 sqrt(n) <= chi+chi_bar={s}, compared as 4n <= s^2"),
            )
        }),
    );
    push(
        "thm4.1-upper",
        nordhaus.map(|(a, b)| (vec![a + b], vec![n + 1], format!("chi+chi_bar={} <= n+1", a + b))),
    );
    push(
        "thm4.2",
        formula_complement_central(g).and_then(|expected| {
            let y = cx.y()?;
            let what = if cx.s.is_tree { "tree, so n" } else { "not a tree, so m" };
            Ok((vec![y], vec![expected], format!("chi_d^t(complement of C(G))={y} = {what}")))
        }),
    );
    push(
        "prop4.3-path",
        (|| {
            require(cx.s.is_tree, "the graph is not a tree")?;
            cx.order_at_least(4)?;
            require(cx.s.max_degree <= 2, "the tree is not a path")?;
            let (x, y) = (cx.x()?, cx.y()?);
            let extra = if n % 3 == 1 || n == 5 { 2 } else { 1 };
            Ok((
                vec![x + y],
                vec![two_thirds + n + extra],
                format!("X+Y={} with X={x}, Y={y}", x + y),
            ))
        })(),
    );
    push(
        "prop4.3-bounds",
        (|| {
            require(cx.s.is_tree, "the graph is not a tree")?;
            cx.order_at_least(4)?;
            require(cx.s.max_degree + 2 <= n, "the maximum degree exceeds n-2")?;
            let (x, y) = (cx.x()?, cx.y()?);
            Ok((
                vec![n + 1 + two_thirds, x + y],
                vec![x + y, 2 * n + 1],
                format!("n+1+floor(2n/3) <= X+Y={} <= 2n+1", x + y),
            ))
        })(),
    );
    push(
        "prop4.4-hamiltonian",
        (|| {
            cx.connected()?;
            cx.order_at_least(4)?;
            require(m >= n, "the size is less than the order")?;
            require(cx.t()? == n, "the graph has no Hamiltonian path")?;
            let (x, y) = (cx.x()?, cx.y()?);
            Ok((
                vec![m + 1 + two_thirds, x + y],
                vec![x + y, m + n + half],
                format!("m+1+floor(2n/3) <= X+Y={} <= m+n+ceil(n/2)", x + y),
            ))
        })(),
    );
    push(
        "prop4.4-bounds",
        (|| {
            cx.connected()?;
            cx.order_at_least(4)?;
            require(m >= n, "the size is less than the order")?;
            require(cx.s.max_degree + 2 <= n, "the maximum degree exceeds n-2")?;
            let (x, y) = (cx.x()?, cx.y()?);
            Ok((
                vec![m + 1 + two_thirds, x + y],
                vec![x + y, m + n + 1],
                format!("m+1+floor(2n/3) <= X+Y={} <= m+n+1", x + y),
            ))
        })(),
    );

    TheoremReport {
        graph: GraphId {
            n: n as u64,
            m: m as u64,
            graph6: encode_graph6(g),
        },
        entries,
    }
}

/// [`theorem_report`] on the family graph plus a `formula` entry comparing
/// the exact χ_d^t(C(G)) with the closed form.
pub fn theorem_report_for_family(
    spec: &FamilySpec,
    opts: &ReportOptions,
    cache: &SolveCache,
) -> Result<TheoremReport> {
    let g = spec.build()?;
    let mut report = theorem_report(&g, opts, cache);
    let outcome = match formula_value(spec) {
        Ok(f) => {
            let solve_opts = SolveOptions {
                cap: opts.cap,
                budget: opts.budget,
                node_limit: None,
            };
            cache
                .value(&central(&g).into_result(), Invariant::Tdc, &solve_opts)
                .map(|x| (vec![x], vec![f], format!("{spec}: X={x}, closed form {f}")))
        }
        Err(Error::UnsupportedFamily(s)) => Err(inapplicable(format!("no closed form for {s}"))),
        Err(e) => Err(inapplicable(e.to_string())),
    };
    report.entries.push(make_entry("formula", outcome));
    Ok(report)
}

/// One-line JSON with the field order of the structs above.
pub fn serialize_report(r: &TheoremReport) -> String {
    serde_json::to_string(r).expect("reports are serializable")
}

/// Parses a serialized report and checks that its graph fields agree with the
/// embedded graph6 string.
pub fn parse_report(text: &str) -> Result<TheoremReport> {
    let r: TheoremReport = serde_json::from_str(text).map_err(|e| Error::Parse {
        offset: crate::io::offset_of(text, e.line(), e.column()),
        message: e.to_string(),
    })?;
    let g = decode_graph6(r.graph.graph6.as_bytes())?;
    if g.order() as u64 != r.graph.n || g.size() as u64 != r.graph.m {
        return Err(Error::Parse {
            offset: 0,
            message: format!(
                "graph fields n={}, m={} disagree with the graph6 string (n={}, m={})",
                r.graph.n,
                r.graph.m,
                g.order(),
                g.size()
            ),
        });
    }
    Ok(r)
}
