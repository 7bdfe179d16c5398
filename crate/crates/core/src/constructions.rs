//! Explicit colorings and dominating sets for central graphs of the standard
//! families, each re-verified before it is returned.
//!
//! Classes are written against the family labelings of
//! [`crate::family`]: `v_i` of the 1-based notation is vertex `i - 1`, and
//! `c_ij` is [`CentralGraph::subdivision_index`]`(i, j)`.

use crate::central::{central, CentralGraph};
use crate::coloring::{is_tdc, is_total_dominating_set, Coloring};
use crate::error::{param, Error, Result};
use crate::family::FamilySpec;
use crate::graph::Graph;
use crate::longest_path::is_path;

fn certify_on(g: &Graph, c: Coloring, what: &str) -> Result<Coloring> {
    match is_tdc(g, &c)? {
        v if v.holds() => Ok(c),
        v => Err(Error::Uncertified(format!("{what}: {v:?}"))),
    }
}

fn certify(cg: &CentralGraph, classes: &[Vec<usize>], what: &str) -> Result<Coloring> {
    let c = Coloring::from_classes(cg.result().order(), classes)?;
    certify_on(cg.result(), c, what)
}

/// All subdivision vertices not listed in `taken`.
fn rest_of_subdivisions(cg: &CentralGraph, taken: &[usize]) -> Vec<usize> {
    cg.subdivision_vertices().filter(|c| !taken.contains(c)).collect()
}

/// A total dominator coloring of `C(G)` for a family graph `G`, using as many
/// classes as the closed-form value for that family.
pub fn construct_tdc_central(spec: &FamilySpec) -> Result<(CentralGraph, Coloring)> {
    spec.validate()?;
    let g = spec.build()?;
    let cg = central(&g);
    let c = match spec {
        FamilySpec::Path(n) => path_coloring(&cg, *n)?,
        FamilySpec::Cycle(n) => cycle_coloring(&cg, *n)?,
        FamilySpec::Complete(n) => complete_coloring(&cg, *n)?,
        FamilySpec::Wheel(n) => wheel_coloring(&cg, *n)?,
        FamilySpec::CompleteMultipartite(parts) if parts.iter().all(|&p| p == 1) => {
            complete_coloring(&cg, parts.len())?
        }
        FamilySpec::CompleteMultipartite(parts) if parts.len() == 2 => {
            bipartite_coloring(&cg, parts[0], parts[1])?
        }
        FamilySpec::CompleteMultipartite(parts) => multipartite_coloring(&cg, parts)?,
        FamilySpec::DoubleStar(n) => double_star_coloring(&cg, *n)?,
        FamilySpec::Prop210Witness(n) => {
            let mut classes = vec![vec![0], vec![1, 2]];
            classes.extend((3..*n).map(|v| vec![v]));
            classes.push(cg.subdivision_vertices().collect());
            certify(&cg, &classes, "prop210 witness")?
        }
        FamilySpec::Empty(_) => return Err(Error::UnsupportedFamily(spec.to_string())),
    };
    Ok((cg, c))
}

fn path_coloring(cg: &CentralGraph, n: usize) -> Result<Coloring> {
    match n {
        0 | 1 => Err(param("the central graph of P_1 has an isolated vertex")),
        2 => complete_coloring(cg, 2),
        3 => {
            let classes = [vec![0], vec![cg.sub(0, 1)], vec![1, 2], vec![cg.sub(1, 2)]];
            certify(cg, &classes, "C(P_3)")
        }
        // The general labels leave v_3 without a dominated class when n = 4.
        4 => {
            let classes = [
                vec![0, 1],
                vec![2],
                vec![3, cg.sub(0, 1), cg.sub(1, 2)],
                vec![cg.sub(2, 3)],
            ];
            certify(cg, &classes, "C(P_4)")
        }
        _ => {
            // labels for v_i, 1-based
            let short = n % 3 == 2 && n != 5;
            let label = |i: usize| {
                if i % 3 == 0 {
                    2 * (i / 3)
                } else if i == n && !short {
                    n - n / 3
                } else {
                    2 * (i / 3) + 1
                }
            };
            let sub_label = if short { 2 * n / 3 + 1 } else { n - n / 3 + 1 };
            let mut labels: Vec<usize> = (1..=n).map(label).collect();
            labels.extend(cg.subdivision_vertices().map(|_| sub_label));
            certify_on(cg.result(), Coloring::from_labels(&labels), "C(P_n)")
        }
    }
}

fn cycle_coloring(cg: &CentralGraph, n: usize) -> Result<Coloring> {
    match n {
        3 => complete_coloring(cg, 3),
        4 => {
            let classes = [
                vec![0, cg.sub(1, 2), cg.sub(2, 3)],
                vec![1],
                vec![2, cg.sub(0, 1), cg.sub(0, 3)],
                vec![3],
            ];
            certify(cg, &classes, "C(C_4)")
        }
        _ => {
            let label = |i: usize| {
                if i == n {
                    n - n / 3
                } else if i % 3 == 0 {
                    2 * (i / 3)
                } else {
                    2 * (i / 3) + 1
                }
            };
            let sub_label = if n % 3 == 0 { 2 * n / 3 + 1 } else { 2 * n / 3 + 2 };
            let mut labels: Vec<usize> = (1..=n).map(label).collect();
            labels.extend(cg.subdivision_vertices().map(|_| sub_label));
            certify_on(cg.result(), Coloring::from_labels(&labels), "C(C_n)")
        }
    }
}

/// `c_ij` for the pairs `(v_1 v_2), (v_3 v_4), …` plus `(v_{n-1} v_n)` when
/// `n` is odd, so that every original vertex is an endpoint of one of them.
fn complete_pair_subdivisions(cg: &CentralGraph, n: usize) -> Vec<usize> {
    let mut subs: Vec<usize> = (0..n / 2).map(|i| cg.sub(2 * i, 2 * i + 1)).collect();
    if n % 2 == 1 {
        subs.push(cg.sub(n - 2, n - 1));
    }
    subs
}

fn complete_coloring(cg: &CentralGraph, n: usize) -> Result<Coloring> {
    let classes = match n {
        0 | 1 => return Err(param("the central graph of K_1 has an isolated vertex")),
        2 => vec![vec![0, 1], vec![cg.sub(0, 1)]],
        3 => vec![vec![0], vec![cg.sub(0, 1)], vec![1, 2], vec![cg.sub(1, 2), cg.sub(0, 2)]],
        _ => {
            let mut classes: Vec<Vec<usize>> = (0..n - 2).map(|v| vec![v]).collect();
            classes.push(vec![n - 2, n - 1]);
            let pairs = complete_pair_subdivisions(cg, n);
            classes.extend(pairs.iter().map(|&c| vec![c]));
            classes.push(rest_of_subdivisions(cg, &pairs));
            classes
        }
    };
    certify(cg, &classes, "C(K_n)")
}

fn wheel_coloring(cg: &CentralGraph, n: usize) -> Result<Coloring> {
    if n == 3 {
        return complete_coloring(cg, 4);
    }
    // W_n = C_n ∘ K_1: extend the cycle coloring, then move the hub from
    // index n to index 0.
    let (cycle_cg, cycle_c) = construct_tdc_central(&FamilySpec::Cycle(n))?;
    let joined = construct_tdc_central_join_empty(cycle_cg.base(), 1, &cycle_c)?;
    let joined_cg = central(&Graph::join(cycle_cg.base(), &Graph::empty(1)?)?);
    let perm: Vec<usize> = (0..=n).map(|i| if i == n { 0 } else { i + 1 }).collect();
    let moved = transport(&joined_cg, &joined, &perm, cg)?;
    certify_on(cg.result(), moved, "C(W_n)")
}

/// Carries a coloring of `C(G)` over to `C(H)` where `H` is `G` relabeled by
/// `perm` (vertex `i` of `G` is vertex `perm[i]` of `H`).
fn transport(from: &CentralGraph, c: &Coloring, perm: &[usize], to: &CentralGraph) -> Result<Coloring> {
    let n = from.originals();
    let mut labels = vec![usize::MAX; to.result().order()];
    for i in 0..n {
        labels[perm[i]] = c.class_of(i);
    }
    for v in from.subdivision_vertices() {
        let crate::central::VertexRole::Subdivision(i, j) = from.role(v) else {
            unreachable!("subdivision range")
        };
        let w = to
            .subdivision_index(perm[i], perm[j])
            .ok_or_else(|| param("relabeled graph is missing an edge"))?;
        labels[w] = c.class_of(v);
    }
    Coloring::new(labels)
}

fn bipartite_coloring(cg: &CentralGraph, m: usize, n: usize) -> Result<Coloring> {
    // V = 0..m, U = m..m+n
    let u = |i: usize| m + i;
    let classes: Vec<Vec<usize>> = match (m, n) {
        (1, 1) => vec![vec![0, 1], vec![cg.sub(0, 1)]],
        (1, 2) => vec![vec![0], vec![cg.sub(0, 1)], vec![1, cg.sub(0, 2)], vec![2]],
        (1, _) => {
            let mut cs: Vec<Vec<usize>> = (0..n - 1).map(|i| vec![u(i)]).collect();
            cs.push(vec![0, u(n - 1)]);
            cs.push(cg.subdivision_vertices().collect());
            cs
        }
        (2, _) => {
            let mut cs: Vec<Vec<usize>> = (0..n).map(|i| vec![u(i)]).collect();
            let mut first = vec![0];
            first.extend((0..n).map(|i| cg.sub(1, u(i))));
            let mut second = vec![1];
            second.extend((0..n).map(|i| cg.sub(0, u(i))));
            cs.push(first);
            cs.push(second);
            cs
        }
        _ => {
            let mut cs = vec![vec![0, u(0)]];
            cs.extend((1..n).map(|i| vec![u(i)]));
            cs.extend((1..m).map(|i| vec![i]));
            cs.push(cg.subdivision_vertices().collect());
            cs
        }
    };
    certify(cg, &classes, "C(K_{m,n})")
}

fn multipartite_coloring(cg: &CentralGraph, parts: &[usize]) -> Result<Coloring> {
    let n: usize = parts.iter().sum();
    let p = parts.len();
    let t1 = parts.iter().filter(|&&s| s == 1).count();
    let starts: Vec<usize> = parts
        .iter()
        .scan(0, |acc, &s| {
            let start = *acc;
            *acc += s;
            Some(start)
        })
        .collect();
    let last = starts[p - 1];
    // The classes {a, b} and the subdivision singletons depend on the case;
    // every other original vertex is a singleton and the remaining
    // subdivision vertices form one class.
    let (pair, singles): ((usize, usize), Vec<usize>) = if parts[..p - 1].iter().all(|&s| s == 2) {
        ((0, n - 1), vec![cg.sub(1, n - 2)])
    } else if t1 == 0 {
        ((starts[p - 2], last), vec![])
    } else if t1 >= 2 {
        let subs = (0..t1.div_ceil(2)).map(|i| cg.sub(2 * i, 2 * i + 1)).collect();
        ((0, 1), subs)
    } else if parts.iter().any(|&s| s >= 3) {
        ((0, last), vec![cg.sub(0, last)])
    } else {
        ((0, 1), vec![cg.sub(0, 2)])
    };
    let mut classes = vec![vec![pair.0, pair.1]];
    classes.extend((0..n).filter(|&v| v != pair.0 && v != pair.1).map(|v| vec![v]));
    classes.extend(singles.iter().map(|&c| vec![c]));
    classes.push(rest_of_subdivisions(cg, &singles));
    certify(cg, &classes, "C(K_{n_1,…,n_p})")
}

fn double_star_coloring(cg: &CentralGraph, n: usize) -> Result<Coloring> {
    let mut classes: Vec<Vec<usize>> = (1..=n).map(|i| vec![i, n + i]).collect();
    classes.push(vec![0]);
    classes.push((1..=n).map(|i| cg.sub(i, n + i)).collect());
    classes.push((1..=n).map(|i| cg.sub(0, i)).collect());
    certify(cg, &classes, "C(S_{1,n,n})")
}

/// A total dominating set of `C(K_n)` of size `n + ⌈n/2⌉ - 1`: all original
/// vertices but the last, plus subdivision vertices whose edges cover every
/// original vertex.
pub fn construct_tds_central_complete(n: usize) -> Result<Vec<usize>> {
    if n < 2 {
        return Err(param("the central graph of K_n needs n >= 2"));
    }
    let cg = central(&Graph::complete(n)?);
    let mut set: Vec<usize> = (0..n - 1).collect();
    set.extend(complete_pair_subdivisions(&cg, n));
    if !is_total_dominating_set(cg.result(), &set) {
        return Err(Error::Uncertified("TDS of C(K_n)".into()));
    }
    Ok(set)
}

/// Which class layout [`construct_tdc_central_longest_path`] uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathVariant {
    /// `n + ⌈t/2⌉` classes; valid for any path that cannot be extended.
    Standard,
    /// `n + ⌈t/2⌉ - 1` classes, for non-complete graphs. The path and its
    /// reverse are both tried. This can fail when the path covers every
    /// vertex and its ends are adjacent (on `C_4`, for instance); a shorter
    /// path usually works.
    NonComplete,
}

/// A TDC of `C(G)` built around a path of `G`.
pub fn construct_tdc_central_longest_path(g: &Graph, path: &[usize], variant: PathVariant) -> Result<Coloring> {
    if g.order() < 2 || !g.is_connected() {
        return Err(param("the path construction needs a connected graph with n >= 2"));
    }
    if path.len() < 2 || !is_path(g, path) {
        return Err(param("not a simple path of the graph with at least two vertices"));
    }
    let cg = central(g);
    match variant {
        PathVariant::Standard => certify(&cg, &path_classes(&cg, path, false), "path construction"),
        PathVariant::NonComplete => {
            let reversed: Vec<usize> = path.iter().rev().copied().collect();
            certify(&cg, &path_classes(&cg, path, true), "path construction")
                .or_else(|_| certify(&cg, &path_classes(&cg, &reversed, true), "path construction"))
        }
    }
}

fn path_classes(cg: &CentralGraph, path: &[usize], shifted: bool) -> Vec<Vec<usize>> {
    let n = cg.originals();
    let t = path.len();
    let mut l: Vec<usize> = path.to_vec();
    let mut others: Vec<usize> = (0..n).filter(|v| !path.contains(v)).collect();
    if shifted {
        // v_1 dominates {v_n}, so the last vertex should be a non-neighbor of v_1.
        if let Some(i) = others.iter().rposition(|&v| !cg.base().has_edge(l[0], v)) {
            let v = others.remove(i);
            others.push(v);
        }
    }
    l.extend(others);
    let mut classes = Vec::new();
    let mut subs = Vec::new();
    if shifted {
        classes.push(vec![l[0]]);
        if t >= 3 {
            classes.push(vec![l[1], l[2]]);
            classes.extend(l[3..].iter().map(|&v| vec![v]));
        } else {
            classes.extend(l[1..].iter().map(|&v| vec![v]));
        }
        subs.extend((1..t.div_ceil(2)).map(|k| cg.sub(l[2 * k - 1], l[2 * k])));
    } else {
        classes.push(vec![l[0], l[1]]);
        classes.extend(l[2..].iter().map(|&v| vec![v]));
        subs.extend((1..=t / 2).map(|k| cg.sub(l[2 * k - 2], l[2 * k - 1])));
        if t % 2 == 1 {
            subs.push(cg.sub(l[t - 2], l[t - 1]));
        }
    }
    classes.extend(subs.iter().map(|&c| vec![c]));
    classes.push(rest_of_subdivisions(cg, &subs));
    classes
}

/// A TDC of `C(G_1 ∪ … ∪ G_w)` with `n - w + 1` classes.
pub fn construct_tdc_central_union(gs: &[Graph]) -> Result<Coloring> {
    if gs.len() < 2 {
        return Err(param("the union construction needs at least two graphs"));
    }
    if gs.iter().any(|g| g.order() < 2 || g.min_degree() == 0) {
        return Err(param("every graph in the union needs order >= 2 and no isolated vertex"));
    }
    let union = Graph::disjoint_union(gs)?;
    let cg = central(&union);
    let mut classes = Vec::new();
    let mut offset = 0;
    for g in gs {
        let (a, b) = g.edges().next().expect("no isolated vertices, so an edge exists");
        classes.push(vec![offset + a, offset + b]);
        classes.extend((0..g.order()).filter(|&v| v != a && v != b).map(|v| vec![offset + v]));
        offset += g.order();
    }
    classes.push(cg.subdivision_vertices().collect());
    certify(&cg, &classes, "union construction")
}

/// Extends a TDC of `C(G)` with `ℓ` classes to a TDC of `C(G ∘ K̄_t)` with
/// `ℓ + t + 1` classes: the new subdivision vertices form one class and each
/// new vertex is a singleton. The new vertices are `n..n+t`.
pub fn construct_tdc_central_join_empty(g: &Graph, t: usize, base: &Coloring) -> Result<Coloring> {
    if t == 0 {
        return Err(param("the join construction needs t >= 1"));
    }
    if g.order() < 2 {
        return Err(param("the join construction needs n >= 2"));
    }
    let cg = central(g);
    let base_ok = base.order() == cg.result().order() && is_tdc(cg.result(), base).is_ok_and(|v| v.holds());
    if !base_ok {
        return Err(param("the base coloring is not a TDC of C(G)"));
    }
    let n = g.order();
    let joined = central(&Graph::join(g, &Graph::empty(t)?)?);
    let mut classes = vec![Vec::new(); base.class_count()];
    for v in 0..n {
        classes[base.class_of(v)].push(v);
    }
    for v in cg.subdivision_vertices() {
        let crate::central::VertexRole::Subdivision(i, j) = cg.role(v) else {
            unreachable!("subdivision range")
        };
        classes[base.class_of(v)].push(joined.sub(i, j));
    }
    classes.push((0..n).flat_map(|i| (n..n + t).map(move |w| (i, w))).map(|(i, w)| joined.sub(i, w)).collect());
    classes.extend((n..n + t).map(|w| vec![w]));
    certify(&joined, &classes, "join construction")
}

/// A TDC of the complement of `C(G)` for connected `G` with `n ≥ 4`: `n`
/// classes when `G` is a tree and `m` classes otherwise.
pub fn construct_tdc_complement_central(g: &Graph) -> Result<Coloring> {
    let n = g.order();
    if n < 4 || !g.is_connected() {
        return Err(param("needs a connected graph with n >= 4"));
    }
    let cg = central(g);
    let h = cg.result().complement();
    if g.size() + 1 == n {
        // y has two neighbors x and z, which are non-adjacent in a tree.
        let y = (0..n).find(|&v| g.degree(v) >= 2).expect("a tree on 4+ vertices has an internal vertex");
        let mut nb = g.neighbors(y);
        let (x, z) = (nb.next().expect("degree >= 2"), nb.next().expect("degree >= 2"));
        let parent = bfs_parents(g, z);
        let mut classes = vec![vec![x, z]];
        for k in (0..n).filter(|&k| k != x && k != z) {
            classes.push(vec![k, cg.sub(k, parent[k])]);
        }
        classes.push(vec![cg.sub(x, y)]);
        let c = Coloring::from_classes(h.order(), &classes)?;
        return certify_on(&h, c, "complement of C(tree)");
    }
    // Give every vertex its own incident edge; unused subdivision vertices
    // become singletons. Matchings are tried until one certifies.
    let incident: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).map(|u| cg.sub(v, u)).collect()).collect();
    let mut chosen = vec![usize::MAX; n];
    let mut used = vec![false; h.order()];
    let mut found = None;
    assign_edges(&cg, &h, &incident, 0, &mut chosen, &mut used, &mut found);
    found.ok_or_else(|| Error::Uncertified("complement of C(G): no edge assignment certified".into()))
}

fn bfs_parents(g: &Graph, root: usize) -> Vec<usize> {
    let mut parent = vec![usize::MAX; g.order()];
    parent[root] = root;
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for u in g.neighbors(v) {
            if parent[u] == usize::MAX {
                parent[u] = v;
                queue.push_back(u);
            }
        }
    }
    parent
}

fn assign_edges(
    cg: &CentralGraph,
    h: &Graph,
    incident: &[Vec<usize>],
    v: usize,
    chosen: &mut [usize],
    used: &mut [bool],
    found: &mut Option<Coloring>,
) {
    if found.is_some() {
        return;
    }
    let n = incident.len();
    if v == n {
        let mut classes: Vec<Vec<usize>> = (0..n).map(|i| vec![i, chosen[i]]).collect();
        classes.extend(cg.subdivision_vertices().filter(|&c| !used[c]).map(|c| vec![c]));
        let c = Coloring::from_classes(h.order(), &classes).expect("classes partition the vertices");
        if is_tdc(h, &c).is_ok_and(|r| r.holds()) {
            *found = Some(c);
        }
        return;
    }
    for &e in &incident[v] {
        if !used[e] {
            used[e] = true;
            chosen[v] = e;
            assign_edges(cg, h, incident, v + 1, chosen, used, found);
            used[e] = false;
            if found.is_some() {
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(spec: FamilySpec) -> usize {
        construct_tdc_central(&spec).unwrap().1.class_count()
    }

    #[test]
    fn family_examples() {
        assert_eq!(count(FamilySpec::Path(8)), 6);
        assert_eq!(count(FamilySpec::Cycle(8)), 7);
        assert_eq!(count(FamilySpec::Complete(6)), 9);
        assert_eq!(count(FamilySpec::CompleteMultipartite(vec![3, 5])), 8);
        assert_eq!(count(FamilySpec::CompleteMultipartite(vec![3, 3, 3])), 9);
        assert_eq!(count(FamilySpec::DoubleStar(3)), 6);
        assert!(matches!(
            construct_tdc_central(&FamilySpec::Empty(3)),
            Err(Error::UnsupportedFamily(_))
        ));
    }

    #[test]
    fn tds_examples() {
        for (n, size) in [(2, 2), (4, 5), (5, 7)] {
            assert_eq!(construct_tds_central_complete(n).unwrap().len(), size);
        }
        assert!(construct_tds_central_complete(1).is_err());
    }

    #[test]
    fn longest_path_examples() {
        let p5 = FamilySpec::Path(5).build().unwrap();
        let c = construct_tdc_central_longest_path(&p5, &[0, 1, 2, 3, 4], PathVariant::Standard).unwrap();
        assert!(c.class_count() <= 8);
        let c6 = FamilySpec::Cycle(6).build().unwrap();
        let c = construct_tdc_central_longest_path(&c6, &[0, 1, 2, 3, 4, 5], PathVariant::Standard).unwrap();
        assert!(c.class_count() <= 9);
        let k4e = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let c = construct_tdc_central_longest_path(&k4e, &[2, 0, 1, 3], PathVariant::NonComplete).unwrap();
        assert_eq!(c.class_count(), 5);
        assert!(construct_tdc_central_longest_path(&p5, &[0, 2], PathVariant::Standard).is_err());
    }

    #[test]
    fn union_examples() {
        let k = |n| Graph::complete(n).unwrap();
        assert_eq!(construct_tdc_central_union(&[k(2), k(2)]).unwrap().class_count(), 3);
        assert_eq!(construct_tdc_central_union(&[k(3), k(3)]).unwrap().class_count(), 5);
        let p3 = FamilySpec::Path(3).build().unwrap();
        let c4 = FamilySpec::Cycle(4).build().unwrap();
        assert_eq!(construct_tdc_central_union(&[p3, c4]).unwrap().class_count(), 6);
        assert!(construct_tdc_central_union(&[k(1), k(2)]).is_err());
    }

    #[test]
    fn join_examples() {
        for (spec, t, expect) in [
            (FamilySpec::Cycle(5), 1, 7),
            (FamilySpec::Complete(2), 2, 5),
            (FamilySpec::Path(4), 1, 6),
        ] {
            let (cg, base) = construct_tdc_central(&spec).unwrap();
            let c = construct_tdc_central_join_empty(cg.base(), t, &base).unwrap();
            assert_eq!(c.class_count(), expect, "{spec}");
        }
        let p4 = FamilySpec::Path(4).build().unwrap();
        let singletons = Coloring::new((0..p4.order() + 3).collect()).unwrap();
        assert!(construct_tdc_central_join_empty(&p4, 1, &singletons).is_ok());
        let bad = Coloring::new(vec![0; 7]).unwrap();
        assert!(construct_tdc_central_join_empty(&p4, 1, &bad).is_err());
    }

    #[test]
    fn complement_examples() {
        let p5 = FamilySpec::Path(5).build().unwrap();
        assert_eq!(construct_tdc_complement_central(&p5).unwrap().class_count(), 5);
        let c4 = FamilySpec::Cycle(4).build().unwrap();
        assert_eq!(construct_tdc_complement_central(&c4).unwrap().class_count(), 4);
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap();
        assert_eq!(construct_tdc_complement_central(&g).unwrap().class_count(), 5);
        assert!(construct_tdc_complement_central(&FamilySpec::Path(3).build().unwrap()).is_err());
    }
}
