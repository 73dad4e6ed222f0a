//! Edge bounds for critical graphs, the Gallai class and the signed line graph.

use num_rational::Ratio;
use serde::Serialize;

use crate::coloring::ColorSet;
use crate::error::{Error, Result};
use crate::graph::{Edge, SignedGraph, VertexId, VertexSet};
use crate::list_coloring::{solve_list_coloring, ListAssignment};
use crate::structure::{self, BrickClass};

/// Exact rationals; all comparisons here are exact.
pub type Rational = Ratio<i128>;

fn check_k(k: usize) -> Result<()> {
    if k < 4 {
        Err(Error::KTooSmall(k))
    } else {
        Ok(())
    }
}

/// `r = k - 2 + 2/(k - 1)`.
pub fn gallai_ratio(k: usize) -> Rational {
    let k = k as i128;
    Rational::from_integer(k - 2) + Rational::new(2, k - 1)
}

/// Membership in `𝒯_k` with the outcome of each defining condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GallaiMembership {
    pub member: bool,
    pub connected: bool,
    pub simple: bool,
    pub degree_within: bool,
    pub blocks_are_bricks: bool,
    pub not_balanced_complete: bool,
}

/// `T ∈ 𝒯_k`: connected, `μ(T) ≤ 1`, `Δ(T) ≤ k - 1`, every block a brick, and
/// not a balanced complete graph of order `k`.
pub fn gallai_class_member(t: &SignedGraph, k: usize) -> Result<GallaiMembership> {
    check_k(k)?;
    let connected = t.is_connected();
    let simple = t.is_simple();
    let degree_within = t.max_degree() < k;
    let blocks_are_bricks = structure::blocks(t)
        .blocks
        .iter()
        .all(|b| structure::classify_brick(&b.graph).is_ok_and(|c| c.is_brick()));
    let not_balanced_complete = !structure::is_balanced_complete(t, k);
    Ok(GallaiMembership {
        member: connected && simple && degree_within && blocks_are_bricks && not_balanced_complete,
        connected,
        simple,
        degree_within,
        blocks_are_bricks,
        not_balanced_complete,
    })
}

/// `m(T) = r|V(T)| - 2|E(T)|` with `r = k - 2 + 2/(k - 1)`.
pub fn gallai_deficiency(t: &SignedGraph, k: usize) -> Result<Rational> {
    check_k(k)?;
    Ok(
        gallai_ratio(k) * Rational::from_integer(t.vertex_count() as i128)
            - Rational::from_integer(2 * t.edge_count() as i128),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeBound {
    pub holds: bool,
    /// `2|E|`
    pub lhs: i128,
    /// `(k - 1 + (k - 3)/(k² - 3))·|V|`
    pub rhs: Rational,
}

/// Compares `2|E|` with `(k - 1 + (k - 3)/(k² - 3))·|V|`. Intended for simple
/// `k`-list-critical graphs other than the balanced `K_k`; certifying
/// criticality is left to the caller.
pub fn edge_bound_check(g: &SignedGraph, k: usize) -> Result<EdgeBound> {
    check_k(k)?;
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    if structure::is_balanced_complete(g, k) {
        return Err(Error::ExcludedBalancedComplete);
    }
    let ki = k as i128;
    let factor = Rational::from_integer(ki - 1) + Rational::new(ki - 3, ki * ki - 3);
    let rhs = factor * Rational::from_integer(g.vertex_count() as i128);
    let lhs = 2 * g.edge_count() as i128;
    Ok(EdgeBound {
        holds: Rational::from_integer(lhs) >= rhs,
        lhs,
        rhs,
    })
}

/// `H = {v : d(v) > |L(v)|}`, `F = V \ H` and `G[F]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowVertexSplit {
    pub high: VertexSet,
    pub low: VertexSet,
    /// `G[F]`; its vertex `i` is `low.to_vec()[i]`.
    pub induced: SignedGraph,
}

pub fn low_vertex_subgraph(g: &SignedGraph, l: &ListAssignment) -> Result<LowVertexSplit> {
    l.check_total(g)?;
    let high = VertexSet::from_predicate(g.vertex_count(), |v| g.incident(v).len() > l[v].len());
    let low = high.complement();
    let (induced, _) = g.induced(&low.to_vec())?;
    Ok(LowVertexSplit { high, low, induced })
}

/// One component `X` of `G[F]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LowComponent {
    pub vertices: Vec<VertexId>,
    /// `d_G(v) = |L(v)|` on `X`.
    pub degree_lists: bool,
    pub blocks: Vec<BrickClass>,
    pub blocks_are_bricks: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ListCriticalReport {
    pub high: Vec<VertexId>,
    pub low: Vec<VertexId>,
    pub components: Vec<LowComponent>,
    /// The common list size when `L` is a `(k-1)`-assignment.
    pub uniform_size: Option<usize>,
    /// For uniform lists: `H ≠ ∅` or `G` is a brick.
    pub high_or_brick: Option<bool>,
    /// For uniform lists of size `k - 1`: whether `G[F]` contains a `K_k`, and
    /// if so whether `G` is the balanced `K_k`.
    pub contains_k_clique: Option<bool>,
    pub clique_forces_complete: Option<bool>,
}

impl ListCriticalReport {
    pub fn holds(&self) -> bool {
        self.components
            .iter()
            .all(|c| c.degree_lists && c.blocks_are_bricks)
            && self.high_or_brick != Some(false)
            && self.clique_forces_complete != Some(false)
    }
}

/// `G` has no `L`-coloring but every proper subgraph has one. Deleting one
/// edge or one vertex covers all proper subgraphs.
pub fn is_list_critical(g: &SignedGraph, l: &ListAssignment) -> Result<bool> {
    l.check_total(g)?;
    if solve_list_coloring(g, l)?.is_some() {
        return Ok(false);
    }
    for e in 0..g.edge_count() {
        if solve_list_coloring(&g.delete_edge(e)?, l)?.is_none() {
            return Ok(false);
        }
    }
    for v in g.vertices() {
        let (h, map) = g.delete_vertex(v)?;
        let mut lists = vec![ColorSet::new(); h.vertex_count()];
        for (old, new) in map.iter().enumerate() {
            if let Some(new) = new {
                lists[*new] = l[old].clone();
            }
        }
        if solve_list_coloring(&h, &ListAssignment::new(lists))?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn has_clique(g: &SignedGraph, size: usize) -> bool {
    fn extend(g: &SignedGraph, clique: &mut Vec<VertexId>, size: usize, start: VertexId) -> bool {
        if clique.len() == size {
            return true;
        }
        for v in start..g.vertex_count() {
            if clique.iter().all(|&u| g.multiplicity(u, v) > 0) {
                clique.push(v);
                if extend(g, clique, size, v + 1) {
                    return true;
                }
                clique.pop();
            }
        }
        false
    }
    extend(g, &mut Vec::new(), size, 0)
}

/// The structure of an `L`-critical graph on its low vertices: each
/// component `X` of `G[F]` has `d_G = |L|` and only brick blocks, and for
/// uniform lists of size `k - 1` either `H ≠ ∅` or `G` is a brick, while a
/// `K_k` inside `G[F]` forces `G` to be the balanced `K_k`.
pub fn check_list_critical_structure(
    g: &SignedGraph,
    l: &ListAssignment,
) -> Result<ListCriticalReport> {
    if !is_list_critical(g, l)? {
        return Err(Error::NotCritical);
    }
    let split = low_vertex_subgraph(g, l)?;
    let low = split.low.to_vec();
    let mut components = Vec::new();
    for comp in split.induced.components() {
        let vertices: Vec<VertexId> = comp.iter().map(|&i| low[i]).collect();
        let (gx, _) = g.induced(&vertices)?;
        let blocks: Vec<BrickClass> = structure::blocks(&gx)
            .blocks
            .iter()
            .map(|b| structure::classify_brick(&b.graph))
            .collect::<Result<_>>()?;
        components.push(LowComponent {
            degree_lists: vertices.iter().all(|&v| g.incident(v).len() == l[v].len()),
            blocks_are_bricks: blocks.iter().all(BrickClass::is_brick),
            blocks,
            vertices,
        });
    }
    let sizes = l.sizes();
    let uniform_size = sizes
        .first()
        .copied()
        .filter(|s| sizes.iter().all(|x| x == s));
    let (high_or_brick, contains_k_clique, clique_forces_complete) = match uniform_size {
        Some(size) => {
            let k = size + 1;
            let clique = has_clique(&split.induced, k);
            (
                Some(!split.high.is_empty() || structure::is_brick(g)),
                Some(clique),
                Some(!clique || structure::is_balanced_complete(g, k)),
            )
        }
        None => (None, None, None),
    };
    Ok(ListCriticalReport {
        high: split.high.to_vec(),
        low,
        components,
        uniform_size,
        high_or_brick,
        contains_k_clique,
        clique_forces_complete,
    })
}

/// The signed line graph: one vertex per edge of `g` (same ids), one edge per
/// pair of distinct edges sharing an endpoint, signed by the product of the
/// two edge signs. Edges appear in lexicographic order of the pair.
pub fn signed_line_graph(g: &SignedGraph) -> SignedGraph {
    let m = g.edge_count();
    let mut edges = Vec::new();
    for (i, a) in g.edges().iter().enumerate() {
        for (j, b) in g.edges().iter().enumerate().skip(i + 1) {
            if a.is_incident(b.u) || a.is_incident(b.v) {
                edges.push(Edge::new(i, j, a.sign * b.sign));
            }
        }
    }
    SignedGraph::from_edges(m, edges).expect("line graph is loopless")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_k_critical;
    use crate::graph::Sign::{self, Negative as N, Positive as P};
    use crate::structure::{balance, Balance};

    fn q(a: i128, b: i128) -> Rational {
        Rational::new(a, b)
    }

    fn wheel(rim: usize) -> SignedGraph {
        let mut edges: Vec<(usize, usize, Sign)> =
            (0..rim).map(|i| (i, (i + 1) % rim, P)).collect();
        edges.extend((0..rim).map(|i| (i, rim, P)));
        SignedGraph::new(rim + 1, edges).unwrap()
    }

    #[test]
    fn gallai_membership_examples() {
        assert!(
            gallai_class_member(&SignedGraph::complete(3, P), 4)
                .unwrap()
                .member
        );
        let k4 = gallai_class_member(&SignedGraph::complete(4, P), 4).unwrap();
        assert!(!k4.member && !k4.not_balanced_complete);
        let d2 = gallai_class_member(&SignedGraph::cycle(&[P, N]), 4).unwrap();
        assert!(!d2.member && !d2.simple);
        assert_eq!(
            gallai_class_member(&SignedGraph::complete(3, P), 3),
            Err(Error::KTooSmall(3))
        );
    }

    #[test]
    fn deficiency_examples() {
        assert_eq!(gallai_ratio(4), q(8, 3));
        assert_eq!(
            gallai_deficiency(&SignedGraph::complete(3, P), 4),
            Ok(q(2, 1))
        );
        assert_eq!(gallai_deficiency(&SignedGraph::edgeless(1), 4), Ok(q(8, 3)));
        assert_eq!(
            gallai_deficiency(&SignedGraph::cycle(&[P; 5]), 4),
            Ok(q(10, 3))
        );
    }

    #[test]
    fn edge_bound_examples() {
        let w5 = wheel(5);
        assert_eq!(is_k_critical(&w5, 4), Ok(true));
        let b = edge_bound_check(&w5, 4).unwrap();
        assert_eq!((b.holds, b.lhs, b.rhs), (true, 20, q(240, 13)));
        assert_eq!(
            edge_bound_check(&SignedGraph::complete(5, P), 5),
            Err(Error::ExcludedBalancedComplete)
        );
        // 3-regular on 4 vertices with a negative edge: 2|E| = 3|V| exactly
        let k4 = SignedGraph::new(
            4,
            [
                (0, 1, N),
                (0, 2, P),
                (0, 3, P),
                (1, 2, P),
                (1, 3, P),
                (2, 3, P),
            ],
        )
        .unwrap();
        assert!(!edge_bound_check(&k4, 4).unwrap().holds);
        assert_eq!(
            edge_bound_check(&SignedGraph::cycle(&[P, N]), 4),
            Err(Error::NotSimple)
        );
    }

    #[test]
    fn low_vertex_examples() {
        let two = ColorSet::from([1, 2]);
        let s = low_vertex_subgraph(
            &SignedGraph::complete(3, P),
            &ListAssignment::constant(3, &two),
        )
        .unwrap();
        assert!(s.high.is_empty());
        assert_eq!(s.low.len(), 3);
        let s = low_vertex_subgraph(
            &SignedGraph::complete(4, P),
            &ListAssignment::constant(4, &two),
        )
        .unwrap();
        assert_eq!(s.high.len(), 4);
        assert_eq!(s.induced.vertex_count(), 0);
        let star = SignedGraph::new(4, [(0, 1, P), (0, 2, P), (0, 3, P)]).unwrap();
        let s =
            low_vertex_subgraph(&star, &ListAssignment::constant(4, &ColorSet::from([1]))).unwrap();
        assert_eq!(s.high.to_vec(), vec![0]);
        assert_eq!(s.low.to_vec(), vec![1, 2, 3]);
    }

    #[test]
    fn list_critical_examples() {
        let k4 = SignedGraph::complete(4, P);
        let r = check_list_critical_structure(&k4, &ListAssignment::constant(4, &ColorSet::z(3)))
            .unwrap();
        assert!(r.holds());
        assert_eq!(r.contains_k_clique, Some(true));
        assert_eq!(r.components.len(), 1);

        let c4 = SignedGraph::cycle(&[P, P, P, N]);
        let r = check_list_critical_structure(&c4, &ListAssignment::constant(4, &ColorSet::z(2)))
            .unwrap();
        assert!(r.holds());
        assert_eq!(
            r.components[0].blocks,
            vec![BrickClass::UnbalancedEvenCycle(4)]
        );

        let c5 = SignedGraph::cycle(&[P; 5]);
        let r = check_list_critical_structure(&c5, &ListAssignment::constant(5, &ColorSet::z(2)))
            .unwrap();
        assert!(r.holds());
        assert_eq!(
            r.components[0].blocks,
            vec![BrickClass::BalancedOddCycle(5)]
        );

        let c4p = SignedGraph::cycle(&[P; 4]);
        assert_eq!(
            check_list_critical_structure(&c4p, &ListAssignment::constant(4, &ColorSet::z(2))),
            Err(Error::NotCritical)
        );
    }

    #[test]
    fn line_graph_examples() {
        assert_eq!(
            signed_line_graph(&SignedGraph::path(&[P, P])),
            SignedGraph::complete(2, P)
        );
        assert_eq!(
            signed_line_graph(&SignedGraph::path(&[P, N])),
            SignedGraph::complete(2, N)
        );
        let k3 = signed_line_graph(&SignedGraph::complete(3, P));
        assert_eq!(k3.edge_count(), 3);
        assert!(k3.is_positive() && k3.neighbors(0).len() == 2);

        let g = SignedGraph::new(3, [(0, 1, P), (0, 1, N), (1, 2, N)]).unwrap();
        let h = signed_line_graph(&g);
        assert_eq!(h.edge_count(), 3);
        match balance(&h) {
            Balance::Parts { x, y } => {
                let (pos, neg) = (g.edges_with_sign(P), g.edges_with_sign(N));
                assert!(
                    (x.to_vec(), y.to_vec()) == (pos.clone(), neg.clone())
                        || (x.to_vec(), y.to_vec()) == (neg, pos)
                );
            }
            other => panic!("{other:?}"),
        }
    }
}
