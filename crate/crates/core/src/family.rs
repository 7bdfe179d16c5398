//! Labeled generators for the graph families the formulas are stated for.
//!
//! Labeling conventions (vertex `v_i` of the usual 1-based notation is index
//! `i - 1` unless the family names a `v_0`):
//!
//! | family | vertices | edges |
//! |---|---|---|
//! | `path:n` | `0..n` | `i ~ i+1` |
//! | `cycle:n` | `0..n` | `i ~ i+1`, `0 ~ n-1` |
//! | `complete:n` | `0..n` | all pairs |
//! | `wheel:n` | hub `0`, rim `1..=n` | `0 ~ i`, `i ~ i+1`, `n ~ 1` |
//! | `multipartite:n1,..,np` | parts are consecutive index blocks | pairs in different parts |
//! | `double_star:n` | center `0`, middles `1..=n`, leaves `n+1..=2n` | `0 ~ i`, `i ~ n+i` |
//! | `prop210:n` | `0..n` | `K_n` minus `{0,3}`, `{2i,2i+1}` and, for odd `n`, `{3,n-1}` |
//! | `empty:n` | `0..n` | none |

use std::fmt;
use std::str::FromStr;

use crate::error::{param, Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `W_n`, of order `n + 1`.
    Wheel(usize),
    /// Part sizes in ascending order; two parts is the complete bipartite graph.
    CompleteMultipartite(Vec<usize>),
    /// `S_{1,n,n}`, of order `2n + 1`.
    DoubleStar(usize),
    /// The order-`n` graph whose central graph needs exactly `n` colors.
    Prop210Witness(usize),
    Empty(usize),
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let check = |ok: bool, msg: &str| if ok { Ok(()) } else { Err(param(msg.to_string())) };
        match self {
            FamilySpec::Path(n) => check(*n >= 1, "path needs n >= 1"),
            FamilySpec::Cycle(n) => check(*n >= 3, "cycle needs n >= 3"),
            FamilySpec::Complete(n) => check(*n >= 1, "complete graph needs n >= 1"),
            FamilySpec::Wheel(n) => check(*n >= 3, "wheel W_n needs n >= 3 (order n+1 >= 4)"),
            FamilySpec::CompleteMultipartite(parts) => {
                check(parts.len() >= 2, "multipartite graph needs at least two parts")?;
                check(parts.iter().all(|&p| p >= 1), "part sizes must be positive")?;
                check(
                    parts.windows(2).all(|w| w[0] <= w[1]),
                    "part sizes must be sorted ascending",
                )
            }
            FamilySpec::DoubleStar(n) => check(*n >= 1, "double star needs n >= 1"),
            FamilySpec::Prop210Witness(n) => check(*n >= 4, "prop210 witness needs n >= 4"),
            FamilySpec::Empty(n) => check(*n >= 1, "empty graph needs n >= 1"),
        }
    }

    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Prop210Witness(n)
            | FamilySpec::Empty(n) => *n,
            FamilySpec::Wheel(n) => n + 1,
            FamilySpec::CompleteMultipartite(parts) => parts.iter().sum(),
            FamilySpec::DoubleStar(n) => 2 * n + 1,
        }
    }

    /// Number of singleton parts of a complete multipartite graph.
    pub fn singleton_parts(&self) -> Option<usize> {
        match self {
            FamilySpec::CompleteMultipartite(parts) => Some(parts.iter().filter(|&&p| p == 1).count()),
            _ => None,
        }
    }

    pub fn build(&self) -> Result<Graph> {
        build_family(self)
    }
}

pub fn build_family(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let n = spec.order();
    match spec {
        FamilySpec::Path(n) => Graph::from_edges(*n, (1..*n).map(|i| (i - 1, i))),
        FamilySpec::Cycle(n) => Graph::from_edges(*n, (0..*n).map(|i| (i, (i + 1) % n))),
        FamilySpec::Complete(n) => Graph::complete(*n),
        FamilySpec::Wheel(k) => {
            let spokes = (1..=*k).map(|i| (0, i));
            let rim = (1..=*k).map(|i| (i, if i == *k { 1 } else { i + 1 }));
            Graph::from_edges(n, spokes.chain(rim))
        }
        FamilySpec::CompleteMultipartite(parts) => {
            let mut part_of = Vec::with_capacity(n);
            for (p, &size) in parts.iter().enumerate() {
                part_of.extend(std::iter::repeat(p).take(size));
            }
            let edges = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| part_of[u] != part_of[v]);
            Graph::from_edges(n, edges.collect::<Vec<_>>())
        }
        FamilySpec::DoubleStar(k) => {
            Graph::from_edges(n, (1..=*k).flat_map(|i| [(0, i), (i, k + i)]))
        }
        FamilySpec::Prop210Witness(n) => {
            let mut removed = vec![(0, 3)];
            removed.extend((0..n / 2).map(|i| (2 * i, 2 * i + 1)));
            if n % 2 == 1 {
                removed.push((3, n - 1));
            }
            let edges = (0..*n)
                .flat_map(|u| (u + 1..*n).map(move |v| (u, v)))
                .filter(|e| !removed.contains(e));
            Graph::from_edges(*n, edges.collect::<Vec<_>>())
        }
        FamilySpec::Empty(n) => Graph::empty(*n),
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Wheel(n) => write!(f, "wheel:{n}"),
            FamilySpec::CompleteMultipartite(parts) => {
                let name = if parts.len() == 2 { "bipartite" } else { "multipartite" };
                let list: Vec<String> = parts.iter().map(usize::to_string).collect();
                write!(f, "{name}:{}", list.join(","))
            }
            FamilySpec::DoubleStar(n) => write!(f, "double_star:{n}"),
            FamilySpec::Prop210Witness(n) => write!(f, "prop210:{n}"),
            FamilySpec::Empty(n) => write!(f, "empty:{n}"),
        }
    }
}

/// Parses `name:params`, e.g. `path:8`, `bipartite:3,5`, `multipartite:1,2,2`.
/// The result is validated.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilySpec> {
        let bad = |offset: usize, message: String| Error::Parse { offset, message };
        let (name, args) = s
            .split_once(':')
            .ok_or_else(|| bad(0, format!("expected <family>:<params>, got {s:?}")))?;
        let args_offset = name.len() + 1;
        let mut nums = Vec::new();
        let mut pos = args_offset;
        for tok in args.split(',') {
            let t = tok.trim();
            let v = t
                .parse::<usize>()
                .map_err(|_| bad(pos, format!("expected a non-negative integer, got {t:?}")))?;
            if v > crate::graph::MAX_ORDER {
                return Err(bad(pos, format!("parameter {v} exceeds {}", crate::graph::MAX_ORDER)));
            }
            nums.push(v);
            pos += tok.len() + 1;
        }
        let single = || match nums.as_slice() {
            [n] => Ok(*n),
            _ => Err(bad(args_offset, format!("{name} takes exactly one parameter"))),
        };
        let spec = match name.trim().to_ascii_lowercase().as_str() {
            "path" => FamilySpec::Path(single()?),
            "cycle" => FamilySpec::Cycle(single()?),
            "complete" => FamilySpec::Complete(single()?),
            "wheel" => FamilySpec::Wheel(single()?),
            "bipartite" => {
                if nums.len() != 2 {
                    return Err(bad(args_offset, "bipartite takes two part sizes".into()));
                }
                FamilySpec::CompleteMultipartite(nums)
            }
            "multipartite" => FamilySpec::CompleteMultipartite(nums),
            "double_star" | "double-star" | "doublestar" => FamilySpec::DoubleStar(single()?),
            "prop210" | "prop210_witness" => FamilySpec::Prop210Witness(single()?),
            "empty" => FamilySpec::Empty(single()?),
            other => return Err(bad(0, format!("unknown family {other:?}"))),
        };
        spec.validate()?;
        // Keep the order bounded before anything tries to allocate it.
        if spec.order() > crate::graph::MAX_ORDER {
            return Err(param(format!("family order exceeds {}", crate::graph::MAX_ORDER)));
        }
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn closed_form(spec: &FamilySpec) -> (usize, usize) {
        match spec {
            FamilySpec::Path(n) => (*n, n - 1),
            FamilySpec::Cycle(n) => (*n, *n),
            FamilySpec::Complete(n) => (*n, n * (n - 1) / 2),
            FamilySpec::Wheel(n) => (n + 1, 2 * n),
            FamilySpec::CompleteMultipartite(p) => {
                let m = (0..p.len())
                    .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
                    .map(|(i, j)| p[i] * p[j])
                    .sum();
                (p.iter().sum(), m)
            }
            FamilySpec::DoubleStar(n) => (2 * n + 1, 2 * n),
            FamilySpec::Prop210Witness(n) => {
                let removed = 1 + n / 2 + n % 2;
                (*n, n * (n - 1) / 2 - removed)
            }
            FamilySpec::Empty(n) => (*n, 0),
        }
    }

    #[test]
    fn huge_parameters_rejected() {
        for s in ["multipartite:1,18446744073709551615", "wheel:18446744073709551615", "double_star:9999999999"] {
            assert!(matches!(s.parse::<FamilySpec>(), Err(Error::Parse { .. })), "{s}");
        }
        assert!("bipartite:3000,3000".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn path4_degrees() {
        let g = FamilySpec::Path(4).build().unwrap();
        assert_eq!((g.order(), g.size()), (4, 3));
        assert_eq!(g.degrees(), vec![1, 2, 2, 1]);
    }

    #[test]
    fn double_star3() {
        let g = FamilySpec::DoubleStar(3).build().unwrap();
        assert_eq!((g.order(), g.size(), g.degree(0)), (7, 6, 3));
    }

    #[test]
    fn prop210_witness6_removes_listed_edges() {
        let g = FamilySpec::Prop210Witness(6).build().unwrap();
        assert_eq!((g.order(), g.size()), (6, 11));
        for (u, v) in [(0, 3), (0, 1), (2, 3), (4, 5)] {
            assert!(!g.has_edge(u, v));
        }
        let g = FamilySpec::Prop210Witness(7).build().unwrap();
        assert!(!g.has_edge(3, 6));
        assert_eq!(g.size(), 21 - 5);
    }

    #[test]
    fn generators_match_closed_forms() {
        let mut specs = Vec::new();
        for n in 1..9 {
            specs.push(FamilySpec::Path(n));
            specs.push(FamilySpec::Complete(n));
            specs.push(FamilySpec::Empty(n));
            specs.push(FamilySpec::DoubleStar(n));
        }
        for n in 3..9 {
            specs.push(FamilySpec::Cycle(n));
            specs.push(FamilySpec::Wheel(n));
        }
        for n in 4..10 {
            specs.push(FamilySpec::Prop210Witness(n));
        }
        for parts in [vec![1, 1], vec![1, 3], vec![2, 3], vec![1, 2, 2], vec![2, 2, 3, 4]] {
            specs.push(FamilySpec::CompleteMultipartite(parts));
        }
        for spec in specs {
            let g = spec.build().unwrap();
            assert_eq!((g.order(), g.size()), closed_form(&spec), "{spec}");
            assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.size());
        }
    }

    #[test]
    fn multipartite_parts_recovered() {
        for parts in [vec![1, 2], vec![2, 2, 2], vec![1, 1, 3], vec![3, 3, 3]] {
            let g = FamilySpec::CompleteMultipartite(parts.clone()).build().unwrap();
            assert_eq!(g.classify().complete_multipartite, Some(parts));
        }
    }

    #[test]
    fn wheel_hub_is_zero() {
        let g = FamilySpec::Wheel(5).build().unwrap();
        assert_eq!(g.degree(0), 5);
        assert!((1..=5).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn invalid_ranges_rejected() {
        for s in [
            FamilySpec::Cycle(2),
            FamilySpec::Wheel(2),
            FamilySpec::CompleteMultipartite(vec![3, 2]),
            FamilySpec::CompleteMultipartite(vec![4]),
            FamilySpec::Prop210Witness(3),
            FamilySpec::Path(0),
        ] {
            assert!(matches!(s.build(), Err(Error::Parameter(_))), "{s:?}");
        }
    }

    #[test]
    fn parse_and_display() {
        let s: FamilySpec = "bipartite:3,5".parse().unwrap();
        assert_eq!(s, FamilySpec::CompleteMultipartite(vec![3, 5]));
        assert_eq!(s.to_string(), "bipartite:3,5");
        let s: FamilySpec = "multipartite:1,2,2".parse().unwrap();
        assert_eq!(s.to_string().parse::<FamilySpec>().unwrap(), s);
        assert!("path".parse::<FamilySpec>().is_err());
        assert!("path:x".parse::<FamilySpec>().is_err());
        assert!("wheel:2".parse::<FamilySpec>().is_err());
        assert!("bipartite:5,3".parse::<FamilySpec>().is_err());
        assert!("blob:3".parse::<FamilySpec>().is_err());
    }
}
