//! Vertex colorings and the two verifiers everything else is checked against:
//! properness and total dominator coloring (TDC).
//!
//! A vertex `v` totally dominates class `V_k` when `V_k ⊆ N(v)`. A TDC is a
//! proper coloring in which every vertex totally dominates some class.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A partition of `0..n` into classes `0..ℓ`, every class nonempty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    assignment: Vec<usize>,
    classes: usize,
}

impl Coloring {
    /// Wraps an assignment `vertex -> class`. Class indices must be exactly
    /// `0..ℓ` with every class used.
    pub fn new(assignment: Vec<usize>) -> Result<Coloring> {
        let classes = assignment.iter().max().map_or(0, |&c| c + 1);
        if classes > assignment.len() {
            return Err(Error::MalformedColoring(format!(
                "class {} is used but there are only {} vertices",
                classes - 1,
                assignment.len()
            )));
        }
        let mut used = vec![false; classes];
        for &c in &assignment {
            used[c] = true;
        }
        if let Some(missing) = used.iter().position(|&u| !u) {
            return Err(Error::MalformedColoring(format!(
                "class {missing} is empty but class {} is used",
                classes - 1
            )));
        }
        Ok(Coloring {
            assignment,
            classes,
        })
    }

    /// Builds a coloring of `0..n` from explicit classes, which must partition
    /// the vertex set. Empty classes are dropped.
    pub fn from_classes(n: usize, classes: &[Vec<usize>]) -> Result<Coloring> {
        let mut assignment = vec![usize::MAX; n];
        let mut next = 0;
        for class in classes.iter().filter(|c| !c.is_empty()) {
            for &v in class {
                if v >= n {
                    return Err(Error::MalformedColoring(format!("vertex {v} out of range 0..{n}")));
                }
                if assignment[v] != usize::MAX {
                    return Err(Error::MalformedColoring(format!("vertex {v} is in two classes")));
                }
                assignment[v] = next;
            }
            next += 1;
        }
        if let Some(v) = assignment.iter().position(|&c| c == usize::MAX) {
            return Err(Error::MalformedColoring(format!("vertex {v} is uncolored")));
        }
        Ok(Coloring {
            assignment,
            classes: next,
        })
    }

    /// Accepts arbitrary labels and renumbers them `0..ℓ` in increasing label
    /// order.
    pub fn from_labels(labels: &[usize]) -> Coloring {
        let mut distinct: Vec<usize> = labels.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let assignment = labels
            .iter()
            .map(|l| distinct.binary_search(l).expect("label present"))
            .collect();
        Coloring {
            assignment,
            classes: distinct.len(),
        }
    }

    /// ℓ, the number of classes.
    pub fn class_count(&self) -> usize {
        self.classes
    }

    pub fn order(&self) -> usize {
        self.assignment.len()
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    /// Members of each class, in increasing vertex order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.classes];
        for (v, &c) in self.assignment.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    fn check_fits(&self, g: &Graph) -> Result<()> {
        if self.order() != g.order() {
            return Err(Error::MalformedColoring(format!(
                "coloring covers {} vertices but the graph has {}",
                self.order(),
                g.order()
            )));
        }
        Ok(())
    }
}

/// Outcome of a verification. Failures carry the lowest-index counterexample.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    /// An edge `(u, v)`, `u < v`, with both ends in the same class.
    MonochromaticEdge(usize, usize),
    /// A vertex that totally dominates no class.
    Undominated(usize),
}

impl Verdict {
    pub fn holds(self) -> bool {
        self == Verdict::Pass
    }
}

pub fn is_proper(g: &Graph, c: &Coloring) -> Result<Verdict> {
    c.check_fits(g)?;
    Ok(g.edges()
        .find(|&(u, v)| c.class_of(u) == c.class_of(v))
        .map_or(Verdict::Pass, |(u, v)| Verdict::MonochromaticEdge(u, v)))
}

fn class_sizes(c: &Coloring) -> Vec<usize> {
    let mut sizes = vec![0; c.class_count()];
    for &k in c.assignment() {
        sizes[k] += 1;
    }
    sizes
}

fn dominated_with(g: &Graph, c: &Coloring, sizes: &[usize], v: usize, hits: &mut [usize]) -> Vec<usize> {
    hits.iter_mut().for_each(|h| *h = 0);
    for u in g.neighbors(v) {
        hits[c.class_of(u)] += 1;
    }
    (0..c.class_count()).filter(|&k| hits[k] == sizes[k]).collect()
}

/// Indices `k` with `V_k ⊆ N(v)`.
pub fn dominated_classes(g: &Graph, c: &Coloring, v: usize) -> Result<Vec<usize>> {
    c.check_fits(g)?;
    if v >= g.order() {
        return Err(Error::Parameter(format!("vertex {v} out of range")));
    }
    let sizes = class_sizes(c);
    let mut hits = vec![0; c.class_count()];
    Ok(dominated_with(g, c, &sizes, v, &mut hits))
}

/// Checks that `c` is a total dominator coloring of `g`. Properness is
/// checked first, so a reported undominated vertex implies the coloring is
/// proper.
pub fn is_tdc(g: &Graph, c: &Coloring) -> Result<Verdict> {
    c.check_fits(g)?;
    if let Some(vertex) = g.first_isolated_vertex() {
        return Err(Error::Isolated {
            vertex,
            what: "a total dominator coloring",
        });
    }
    let proper = is_proper(g, c)?;
    if !proper.holds() {
        return Ok(proper);
    }
    let sizes = class_sizes(c);
    let mut hits = vec![0; c.class_count()];
    for v in 0..g.order() {
        if dominated_with(g, c, &sizes, v, &mut hits).is_empty() {
            return Ok(Verdict::Undominated(v));
        }
    }
    Ok(Verdict::Pass)
}

/// Whether `set` is a total dominating set: every vertex has a neighbor in it.
pub fn is_total_dominating_set(g: &Graph, set: &[usize]) -> bool {
    let mut inside = vec![false; g.order()];
    for &s in set {
        if s >= g.order() {
            return false;
        }
        inside[s] = true;
    }
    (0..g.order()).all(|v| g.neighbors(v).any(|u| inside[u]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::central::central;
    use crate::family::FamilySpec;

    fn classes(n: usize, cs: &[&[usize]]) -> Coloring {
        let v: Vec<Vec<usize>> = cs.iter().map(|c| c.to_vec()).collect();
        Coloring::from_classes(n, &v).unwrap()
    }

    #[test]
    fn rejects_noncontiguous_and_wrong_order() {
        assert!(matches!(Coloring::new(vec![0, 2]), Err(Error::MalformedColoring(_))));
        let k3 = Graph::complete(3).unwrap();
        let c = Coloring::new(vec![0, 1]).unwrap();
        assert!(matches!(is_proper(&k3, &c), Err(Error::MalformedColoring(_))));
        assert!(Coloring::from_classes(3, &[vec![0, 1], vec![1, 2]]).is_err());
        assert!(Coloring::from_classes(3, &[vec![0, 1]]).is_err());
    }

    #[test]
    fn proper_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(is_proper(&k3, &Coloring::new(vec![0, 1, 2]).unwrap()).unwrap(), Verdict::Pass);
        let c = classes(3, &[&[0, 1], &[2]]);
        assert_eq!(is_proper(&k3, &c).unwrap(), Verdict::MonochromaticEdge(0, 1));
    }

    #[test]
    fn dominated_classes_examples() {
        let c4 = FamilySpec::Cycle(4).build().unwrap();
        let c = classes(4, &[&[0], &[2], &[1, 3]]);
        assert_eq!(dominated_classes(&c4, &c, 0).unwrap(), vec![2]);
        // the own class never counts
        assert!(!dominated_classes(&c4, &c, 1).unwrap().contains(&c.class_of(1)));
        let p3 = central(&Graph::complete(2).unwrap());
        // C(K2): 0 - 2 - 1, center is the subdivision vertex 2
        let c = classes(3, &[&[0, 1], &[2]]);
        assert_eq!(dominated_classes(p3.result(), &c, 2).unwrap(), vec![0]);
    }

    #[test]
    fn tdc_examples() {
        let p3 = FamilySpec::Path(3).build().unwrap();
        assert_eq!(is_tdc(&p3, &classes(3, &[&[0, 2], &[1]])).unwrap(), Verdict::Pass);
        let k4 = Graph::complete(4).unwrap();
        let c = Coloring::new(vec![0, 1, 2, 2]).unwrap();
        assert_eq!(is_tdc(&k4, &c).unwrap(), Verdict::MonochromaticEdge(2, 3));
        let e = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(matches!(
            is_tdc(&e, &Coloring::new(vec![0, 1, 0]).unwrap()),
            Err(Error::Isolated { vertex: 2, .. })
        ));
    }

    #[test]
    fn tdc_of_central_p8_six_classes() {
        let cg = central(&FamilySpec::Path(8).build().unwrap());
        let subs: Vec<usize> = cg.subdivision_vertices().collect();
        let c = Coloring::from_classes(
            cg.result().order(),
            &[vec![0, 1], vec![2], vec![3, 4], vec![5], vec![6, 7], subs],
        )
        .unwrap();
        assert_eq!(is_tdc(cg.result(), &c).unwrap(), Verdict::Pass);
    }

    #[test]
    fn undominated_reported() {
        // N(0) = {1} contains neither class
        let p4 = FamilySpec::Path(4).build().unwrap();
        let c = classes(4, &[&[0, 2], &[1, 3]]);
        assert_eq!(is_tdc(&p4, &c).unwrap(), Verdict::Undominated(0));
    }

    #[test]
    fn from_labels_renumbers() {
        let c = Coloring::from_labels(&[5, 1, 5, 9]);
        assert_eq!(c.assignment(), &[1, 0, 1, 2]);
        assert_eq!(c.class_count(), 3);
    }

    #[test]
    fn tds_check() {
        let c4 = FamilySpec::Cycle(4).build().unwrap();
        assert!(is_total_dominating_set(&c4, &[0, 1]));
        assert!(!is_total_dominating_set(&c4, &[0, 2]));
    }
}
