//! Closed-form values of χ_d^t(C(G)) for the standard families, and of a few
//! related invariants.

use crate::error::{param, Error, Result};
use crate::family::FamilySpec;
use crate::graph::Graph;

/// χ_d^t(C(G)) for `G = build_family(spec)`.
pub fn formula_value(spec: &FamilySpec) -> Result<usize> {
    spec.validate()?;
    Ok(match spec {
        FamilySpec::Path(n) => path(*n)?,
        FamilySpec::Cycle(n) => {
            let n = *n;
            if n % 3 == 0 && n != 3 {
                2 * n / 3 + 1
            } else {
                2 * n / 3 + 2
            }
        }
        FamilySpec::Complete(n) => complete(*n)?,
        FamilySpec::Wheel(n) => {
            let n = *n;
            if n % 3 == 0 && n != 3 {
                2 * n / 3 + 3
            } else {
                2 * n / 3 + 4
            }
        }
        FamilySpec::CompleteMultipartite(parts) if parts.iter().all(|&p| p == 1) => {
            complete(parts.len())?
        }
        FamilySpec::CompleteMultipartite(parts) if parts.len() == 2 => match (parts[0], parts[1]) {
            (1, 2) => 4,
            (m, n) => m + n,
        },
        FamilySpec::CompleteMultipartite(parts) => {
            let n: usize = parts.iter().sum();
            if parts[..parts.len() - 1].iter().all(|&p| p == 2) {
                n + 1
            } else {
                let t1 = parts.iter().filter(|&&p| p == 1).count();
                n + t1.div_ceil(2)
            }
        }
        FamilySpec::DoubleStar(n) => n + 3,
        FamilySpec::Prop210Witness(n) => *n,
        FamilySpec::Empty(_) => return Err(Error::UnsupportedFamily(spec.to_string())),
    })
}

fn path(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(param("C(P_1) is a single isolated vertex"));
    }
    Ok(if n % 3 == 1 || n == 3 || n == 5 {
        2 * n / 3 + 2
    } else {
        2 * n / 3 + 1
    })
}

fn complete(n: usize) -> Result<usize> {
    match n {
        0 | 1 => Err(param("C(K_1) is a single isolated vertex")),
        2 | 3 => Ok(n + n.div_ceil(2) - 1),
        _ => Ok(n + n.div_ceil(2)),
    }
}

/// γ_t(C(K_n)) = n + ⌈n/2⌉ - 1 for n ≥ 2.
pub fn formula_gamma_t_central_complete(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(param("C(K_1) is a single isolated vertex"));
    }
    Ok(n + n.div_ceil(2) - 1)
}

/// χ_d^t of the complement of C(G): `n` when `g` is a tree, `m` otherwise.
pub fn formula_complement_central(g: &Graph) -> Result<usize> {
    let s = g.classify();
    if !s.is_connected {
        return Err(Error::Inapplicable("the graph must be connected".into()));
    }
    if g.order() < 4 {
        return Err(Error::Inapplicable("the graph must have order at least 4".into()));
    }
    Ok(if s.is_tree { g.order() } else { g.size() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> usize {
        formula_value(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn catalog_examples() {
        assert_eq!(f("path:9"), 7);
        assert_eq!(f("path:7"), 6);
        assert_eq!(f("path:5"), 5);
        assert_eq!(f("cycle:3"), 4);
        assert_eq!(f("cycle:9"), 7);
        assert_eq!(f("cycle:8"), 7);
        assert_eq!(f("wheel:9"), 9);
        assert_eq!(f("wheel:3"), 6);
        assert_eq!(f("bipartite:1,2"), 4);
        assert_eq!(f("bipartite:3,5"), 8);
        assert_eq!(f("bipartite:1,1"), 2);
        assert_eq!(f("multipartite:2,2,2"), 7);
        assert_eq!(f("multipartite:1,1,2"), 5);
        assert_eq!(f("complete:6"), 9);
        assert_eq!(f("complete:3"), 4);
        assert_eq!(f("complete:2"), 2);
        assert_eq!(f("double_star:3"), 6);
    }

    #[test]
    fn unsupported() {
        assert!(matches!(
            formula_value(&FamilySpec::Empty(3)),
            Err(Error::UnsupportedFamily(_))
        ));
        assert!(formula_value(&FamilySpec::Path(1)).is_err());
    }

    #[test]
    fn complement_examples() {
        let path6 = FamilySpec::Path(6).build().unwrap();
        assert_eq!(formula_complement_central(&path6).unwrap(), 6);
        assert_eq!(formula_complement_central(&FamilySpec::Cycle(5).build().unwrap()).unwrap(), 5);
        assert_eq!(formula_complement_central(&Graph::complete(4).unwrap()).unwrap(), 6);
        assert!(matches!(
            formula_complement_central(&Graph::complete(3).unwrap()),
            Err(Error::Inapplicable(_))
        ));
    }

    #[test]
    fn gamma_complete() {
        assert_eq!(formula_gamma_t_central_complete(2).unwrap(), 2);
        assert_eq!(formula_gamma_t_central_complete(4).unwrap(), 5);
        assert_eq!(formula_gamma_t_central_complete(5).unwrap(), 7);
    }
}
