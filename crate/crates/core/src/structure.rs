//! Balance, antibalance, switching equivalence, blocks and bricks.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeId, Sign, SignedGraph, VertexId, VertexSet};

/// Outcome of a balance test.
///
/// `Parts` satisfies: an edge is negative iff it joins `x` to `y` (for
/// antibalance: positive iff it joins them). `UnbalancedCycle` lists the edge
/// ids of a cycle in traversal order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Balance {
    Parts { x: VertexSet, y: VertexSet },
    UnbalancedCycle(Vec<EdgeId>),
}

impl Balance {
    pub fn holds(&self) -> bool {
        matches!(self, Balance::Parts { .. })
    }

    pub fn parts(&self) -> Option<(&VertexSet, &VertexSet)> {
        match self {
            Balance::Parts { x, y } => Some((x, y)),
            Balance::UnbalancedCycle(_) => None,
        }
    }
}

/// Spanning-forest normalization: assign each vertex a potential so that tree
/// edges become positive after switching at the vertices of potential `-1`.
/// The graph is balanced iff every non-tree edge agrees with the potentials.
pub fn balance(g: &SignedGraph) -> Balance {
    let n = g.vertex_count();
    let mut potential: Vec<Option<Sign>> = vec![None; n];
    let mut parent_edge: Vec<Option<EdgeId>> = vec![None; n];
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if potential[root].is_some() {
            continue;
        }
        potential[root] = Some(Sign::Positive);
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            let px = potential[x].unwrap();
            for &e in g.incident(x) {
                let edge = &g.edges()[e];
                let y = edge.other(x);
                if potential[y].is_none() {
                    potential[y] = Some(px * edge.sign);
                    parent_edge[y] = Some(e);
                    depth[y] = depth[x] + 1;
                    queue.push_back(y);
                }
            }
        }
    }
    for (id, e) in g.edges().iter().enumerate() {
        if e.sign != potential[e.u].unwrap() * potential[e.v].unwrap() {
            return Balance::UnbalancedCycle(tree_cycle(g, id, &parent_edge, &depth));
        }
    }
    let x = VertexSet::from_predicate(n, |v| potential[v] == Some(Sign::Positive));
    let y = x.complement();
    Balance::Parts { x, y }
}

/// The fundamental cycle of a non-tree edge: the edge, then the tree path back.
fn tree_cycle(
    g: &SignedGraph,
    closing: EdgeId,
    parent_edge: &[Option<EdgeId>],
    depth: &[usize],
) -> Vec<EdgeId> {
    let e = &g.edges()[closing];
    let (mut a, mut b) = (e.u, e.v);
    let mut from_a = Vec::new();
    let mut from_b = Vec::new();
    while a != b {
        if depth[a] >= depth[b] {
            let pe = parent_edge[a].expect("non-root has a parent edge");
            from_a.push(pe);
            a = g.edges()[pe].other(a);
        } else {
            let pe = parent_edge[b].expect("non-root has a parent edge");
            from_b.push(pe);
            b = g.edges()[pe].other(b);
        }
    }
    // closing edge u->v, then v up to the meeting vertex, then down to u
    let mut cycle = vec![closing];
    cycle.extend(from_b);
    cycle.extend(from_a.into_iter().rev());
    cycle
}

pub fn is_balanced(g: &SignedGraph) -> bool {
    balance(g).holds()
}

/// Antibalance test via the negation. Parts, when returned, have exactly the
/// positive edges between them; a cycle witness is a cycle of `g` that is
/// unbalanced in the negation.
pub fn antibalance(g: &SignedGraph) -> Balance {
    balance(&g.negate())
}

pub fn is_antibalanced(g: &SignedGraph) -> bool {
    antibalance(g).holds()
}

/// Returns `Some(X)` with `h = g/X` when the two graphs (same underlying edge
/// sequence) are switching equivalent, `None` otherwise.
pub fn switching_equivalence(g: &SignedGraph, h: &SignedGraph) -> Result<Option<VertexSet>> {
    if g.vertex_count() != h.vertex_count()
        || g.edge_count() != h.edge_count()
        || g.edges()
            .iter()
            .zip(h.edges())
            .any(|(a, b)| !a.joins(b.u, b.v))
    {
        return Err(Error::UnderlyingMismatch);
    }
    let ratio_edges = g
        .edges()
        .iter()
        .zip(h.edges())
        .map(|(a, b)| Edge {
            sign: a.sign * b.sign,
            ..*a
        })
        .collect();
    let ratio = SignedGraph::from_edges(g.vertex_count(), ratio_edges)?;
    Ok(match balance(&ratio) {
        Balance::Parts { x, .. } => Some(x),
        Balance::UnbalancedCycle(_) => None,
    })
}

pub fn is_switching_equivalent(g: &SignedGraph, h: &SignedGraph) -> Result<bool> {
    Ok(switching_equivalence(g, h)?.is_some())
}

/// One block: its vertices (ascending, original ids), its edge ids
/// (ascending) and the block as a standalone graph where vertex `i` stands for
/// `vertices[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
    pub graph: SignedGraph,
}

impl Block {
    pub fn local_index(&self, v: VertexId) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: VertexSet,
    /// `membership[v]`: indices of the blocks containing `v`.
    pub membership: Vec<Vec<usize>>,
}

impl BlockDecomposition {
    /// Blocks containing at most one cut vertex.
    pub fn end_blocks(&self) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&b| {
                self.blocks[b]
                    .vertices
                    .iter()
                    .filter(|&&v| self.cut_vertices.contains(v))
                    .count()
                    <= 1
            })
            .collect()
    }

    pub fn blocks_at(&self, v: VertexId) -> &[usize] {
        &self.membership[v]
    }
}

/// Biconnected decomposition of the underlying multigraph. A parallel pair is
/// 2-connected, and isolated vertices form single-vertex blocks. Blocks are
/// ordered by their smallest edge id (isolated vertices last, by vertex).
pub fn blocks(g: &SignedGraph) -> BlockDecomposition {
    let n = g.vertex_count();
    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    let mut groups: Vec<Vec<EdgeId>> = Vec::new();
    let mut isolated = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        if g.incident(root).is_empty() {
            disc[root] = timer;
            timer += 1;
            isolated.push(root);
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        // (vertex, edge to parent, next incidence index)
        let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = vec![(root, None, 0)];
        while let Some(top) = stack.last_mut() {
            let (v, pe, i) = *top;
            if i < g.incident(v).len() {
                top.2 += 1;
                let e = g.incident(v)[i];
                if Some(e) == pe {
                    continue;
                }
                let w = g.edges()[e].other(v);
                if disc[w] == UNSEEN {
                    edge_stack.push(e);
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, Some(e), 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(pe) = pe {
                    let u = g.edges()[pe].other(v);
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut group = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            group.push(e);
                            if e == pe {
                                break;
                            }
                        }
                        group.sort_unstable();
                        groups.push(group);
                    }
                }
            }
        }
    }

    groups.sort_by_key(|grp| grp[0]);
    let mut out = Vec::with_capacity(groups.len() + isolated.len());
    for group in groups {
        let (graph, vertices) = g.edge_subgraph(&group).expect("block edges are valid");
        out.push(Block {
            vertices,
            edges: group,
            graph,
        });
    }
    for v in isolated {
        out.push(Block {
            vertices: vec![v],
            edges: Vec::new(),
            graph: SignedGraph::edgeless(1),
        });
    }
    let mut membership = vec![Vec::new(); n];
    for (b, block) in out.iter().enumerate() {
        for &v in &block.vertices {
            membership[v].push(b);
        }
    }
    let cut_vertices = VertexSet::from_predicate(n, |v| membership[v].len() >= 2);
    BlockDecomposition {
        blocks: out,
        cut_vertices,
        membership,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum NotBrickReason {
    UnbalancedComplete,
    BalancedEvenCycle,
    UnbalancedOddCycle,
    NeitherCompleteNorCycle,
    MultiplicityAboveTwo,
    EqualSignedParallelPair,
    MixedMultiplicity,
    DoubledEvenCycle,
    DoubledNeitherCompleteNorCycle,
}

impl fmt::Display for NotBrickReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NotBrickReason::UnbalancedComplete => "complete but unbalanced",
            NotBrickReason::BalancedEvenCycle => "balanced even cycle",
            NotBrickReason::UnbalancedOddCycle => "unbalanced odd cycle",
            NotBrickReason::NeitherCompleteNorCycle => "simple, neither complete nor a cycle",
            NotBrickReason::MultiplicityAboveTwo => "some pair has more than two edges",
            NotBrickReason::EqualSignedParallelPair => "parallel pair with equal signs",
            NotBrickReason::MixedMultiplicity => "single and doubled pairs mixed",
            NotBrickReason::DoubledEvenCycle => "doubled even cycle",
            NotBrickReason::DoubledNeitherCompleteNorCycle => {
                "doubled, support neither complete nor a cycle"
            }
        })
    }
}

/// The five brick shapes. A balanced triangle is reported as
/// `BalancedComplete(3)` and `2K_2`, `2K_3` as `DoubledComplete`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BrickClass {
    BalancedComplete(usize),
    BalancedOddCycle(usize),
    UnbalancedEvenCycle(usize),
    DoubledComplete(usize),
    DoubledOddCycle(usize),
    NotABrick(NotBrickReason),
}

impl BrickClass {
    pub fn is_brick(&self) -> bool {
        !matches!(self, BrickClass::NotABrick(_))
    }

    /// Order of the brick.
    pub fn order(&self) -> Option<usize> {
        match *self {
            BrickClass::BalancedComplete(n)
            | BrickClass::BalancedOddCycle(n)
            | BrickClass::UnbalancedEvenCycle(n)
            | BrickClass::DoubledComplete(n)
            | BrickClass::DoubledOddCycle(n) => Some(n),
            BrickClass::NotABrick(_) => None,
        }
    }

    /// The common degree of every vertex of the brick.
    pub fn degree(&self) -> Option<usize> {
        match *self {
            BrickClass::BalancedComplete(n) => Some(n - 1),
            BrickClass::BalancedOddCycle(_) | BrickClass::UnbalancedEvenCycle(_) => Some(2),
            BrickClass::DoubledComplete(n) => Some(2 * n - 2),
            BrickClass::DoubledOddCycle(_) => Some(4),
            BrickClass::NotABrick(_) => None,
        }
    }

    /// Balanced bricks carry `C`/`-C` lists on their parts; the others carry a
    /// symmetric list.
    pub fn is_balanced_class(&self) -> bool {
        matches!(
            self,
            BrickClass::BalancedComplete(_) | BrickClass::BalancedOddCycle(_)
        )
    }
}

impl fmt::Display for BrickClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BrickClass::BalancedComplete(n) => write!(f, "balanced K_{n}"),
            BrickClass::BalancedOddCycle(n) => write!(f, "balanced C_{n}"),
            BrickClass::UnbalancedEvenCycle(n) => write!(f, "unbalanced C_{n}"),
            BrickClass::DoubledComplete(n) => write!(f, "2K_{n}"),
            BrickClass::DoubledOddCycle(n) => write!(f, "2C_{n}"),
            BrickClass::NotABrick(r) => write!(f, "not a brick ({r})"),
        }
    }
}

fn support_is_complete(g: &SignedGraph) -> bool {
    let n = g.vertex_count();
    (0..n).all(|v| g.neighbors(v).len() == n - 1)
}

/// Connected with every vertex having exactly two distinct neighbors.
fn support_is_cycle(g: &SignedGraph) -> bool {
    g.vertex_count() >= 3
        && g.is_connected()
        && (0..g.vertex_count()).all(|v| g.neighbors(v).len() == 2)
}

/// Classifies a block against the five brick shapes.
pub fn classify_brick(b: &SignedGraph) -> Result<BrickClass> {
    if !b.is_connected() || blocks(b).blocks.len() != 1 {
        return Err(Error::NotABlock);
    }
    let n = b.vertex_count();
    if n == 1 {
        return Ok(BrickClass::BalancedComplete(1));
    }
    let mu = b.max_multiplicity();
    if mu == 1 {
        if support_is_complete(b) {
            return Ok(if is_balanced(b) {
                BrickClass::BalancedComplete(n)
            } else {
                BrickClass::NotABrick(NotBrickReason::UnbalancedComplete)
            });
        }
        if support_is_cycle(b) {
            let all: Vec<EdgeId> = (0..b.edge_count()).collect();
            let sign = b.sign_product(&all)?;
            return Ok(match (n % 2 == 1, sign) {
                (true, Sign::Positive) => BrickClass::BalancedOddCycle(n),
                (false, Sign::Negative) => BrickClass::UnbalancedEvenCycle(n),
                (true, Sign::Negative) => BrickClass::NotABrick(NotBrickReason::UnbalancedOddCycle),
                (false, Sign::Positive) => BrickClass::NotABrick(NotBrickReason::BalancedEvenCycle),
            });
        }
        return Ok(BrickClass::NotABrick(
            NotBrickReason::NeitherCompleteNorCycle,
        ));
    }
    if mu > 2 {
        return Ok(BrickClass::NotABrick(NotBrickReason::MultiplicityAboveTwo));
    }
    for u in 0..n {
        for w in b.neighbors(u) {
            match b.signed_multiplicity(u, w) {
                (1, 1) => {}
                (1, 0) | (0, 1) => {
                    return Ok(BrickClass::NotABrick(NotBrickReason::MixedMultiplicity))
                }
                _ => {
                    return Ok(BrickClass::NotABrick(
                        NotBrickReason::EqualSignedParallelPair,
                    ))
                }
            }
        }
    }
    if support_is_complete(b) {
        Ok(BrickClass::DoubledComplete(n))
    } else if support_is_cycle(b) {
        Ok(if n % 2 == 1 {
            BrickClass::DoubledOddCycle(n)
        } else {
            BrickClass::NotABrick(NotBrickReason::DoubledEvenCycle)
        })
    } else {
        Ok(BrickClass::NotABrick(
            NotBrickReason::DoubledNeitherCompleteNorCycle,
        ))
    }
}

/// Classifies every block of a connected graph; `true` iff all are bricks.
pub fn all_blocks_are_bricks(g: &SignedGraph) -> Result<(bool, Vec<BrickClass>)> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let classes: Vec<BrickClass> = blocks(g)
        .blocks
        .iter()
        .map(|b| classify_brick(&b.graph).expect("a block classifies"))
        .collect();
    Ok((classes.iter().all(BrickClass::is_brick), classes))
}

/// True iff `g` is itself a brick (connected, one block, brick-shaped).
pub fn is_brick(g: &SignedGraph) -> bool {
    matches!(classify_brick(g), Ok(c) if c.is_brick())
}

/// True iff `g` is a balanced complete graph of order `k`.
pub fn is_balanced_complete(g: &SignedGraph, k: usize) -> bool {
    g.vertex_count() == k && g.is_simple() && support_is_complete(g) && is_balanced(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::{Negative as N, Positive as P};

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, v).unwrap()
    }

    #[test]
    fn balance_examples() {
        let k4 = SignedGraph::complete(4, P);
        assert_eq!(
            balance(&k4),
            Balance::Parts {
                x: VertexSet::full(4),
                y: VertexSet::empty(4)
            }
        );

        let k2 = SignedGraph::complete(2, N);
        assert_eq!(
            balance(&k2),
            Balance::Parts {
                x: set(2, &[0]),
                y: set(2, &[1])
            }
        );

        let tri = SignedGraph::cycle(&[P, P, N]);
        match balance(&tri) {
            Balance::UnbalancedCycle(c) => {
                let mut sorted = c.clone();
                sorted.sort();
                assert_eq!(sorted, vec![0, 1, 2]);
                assert_eq!(tri.sign_product(&c), Ok(N));
            }
            other => panic!("expected a cycle, got {other:?}"),
        }
    }

    #[test]
    fn parallel_pair_is_an_unbalanced_digon() {
        let g = SignedGraph::new(2, [(0, 1, P), (0, 1, N)]).unwrap();
        assert_eq!(balance(&g), Balance::UnbalancedCycle(vec![1, 0]));
    }

    #[test]
    fn antibalance_examples() {
        assert!(is_antibalanced(&SignedGraph::complete(3, N)));
        assert!(!is_antibalanced(&SignedGraph::complete(3, P)));
        let c4 = SignedGraph::cycle(&[P; 4]);
        match antibalance(&c4) {
            Balance::Parts { x, y } => {
                assert_eq!(x.to_vec(), vec![0, 2]);
                assert_eq!(y.to_vec(), vec![1, 3]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn switching_equivalence_examples() {
        let g =
            SignedGraph::new(4, [(0, 1, P), (1, 2, N), (2, 3, P), (3, 0, P), (0, 2, N)]).unwrap();
        let x = set(4, &[1, 3]);
        let h = g.switch(&x).unwrap();
        let found = switching_equivalence(&g, &h).unwrap().unwrap();
        assert!(found == x || found == x.complement());
        assert_eq!(g.switch(&found).unwrap(), h);

        let pos = SignedGraph::complete(2, P);
        let neg = SignedGraph::complete(2, N);
        assert_eq!(
            switching_equivalence(&pos, &neg).unwrap(),
            Some(set(2, &[0]))
        );

        let c3 = SignedGraph::cycle(&[P, P, P]);
        let c3n = SignedGraph::cycle(&[P, P, N]);
        assert_eq!(switching_equivalence(&c3, &c3n).unwrap(), None);
        assert_eq!(
            switching_equivalence(&c3, &pos),
            Err(Error::UnderlyingMismatch)
        );
    }

    #[test]
    fn block_examples() {
        let path = SignedGraph::path(&[P, P]);
        let d = blocks(&path);
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.blocks[0].vertices, vec![0, 1]);
        assert_eq!(d.blocks[1].vertices, vec![1, 2]);
        assert_eq!(d.cut_vertices.to_vec(), vec![1]);

        let d3 = SignedGraph::double(&SignedGraph::complete(3, P)).unwrap();
        let d = blocks(&d3);
        assert_eq!(d.blocks.len(), 1);
        assert!(d.cut_vertices.is_empty());

        let bowtie = SignedGraph::new(
            5,
            [
                (0, 1, P),
                (1, 2, P),
                (2, 0, P),
                (2, 3, P),
                (3, 4, P),
                (4, 2, P),
            ],
        )
        .unwrap();
        let d = blocks(&bowtie);
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.cut_vertices.to_vec(), vec![2]);
        assert_eq!(d.end_blocks(), vec![0, 1]);
        assert_eq!(d.blocks_at(2), &[0, 1]);
    }

    #[test]
    fn isolated_vertices_are_blocks() {
        let d = blocks(&SignedGraph::edgeless(2));
        assert_eq!(d.blocks.len(), 2);
        assert!(d.cut_vertices.is_empty());
    }

    #[test]
    fn brick_examples() {
        assert_eq!(
            classify_brick(&SignedGraph::complete(4, P)),
            Ok(BrickClass::BalancedComplete(4))
        );
        assert_eq!(
            classify_brick(&SignedGraph::cycle(&[P, P, P, N])),
            Ok(BrickClass::UnbalancedEvenCycle(4))
        );
        assert_eq!(
            classify_brick(&SignedGraph::cycle(&[P; 4])),
            Ok(BrickClass::NotABrick(NotBrickReason::BalancedEvenCycle))
        );
        assert_eq!(
            classify_brick(&SignedGraph::complete(3, P)),
            Ok(BrickClass::BalancedComplete(3))
        );
        assert_eq!(
            classify_brick(&SignedGraph::cycle(&[P, N])),
            Ok(BrickClass::DoubledComplete(2))
        );
        assert_eq!(
            classify_brick(&SignedGraph::cycle(&[N, P, N, P, P])),
            Ok(BrickClass::BalancedOddCycle(5))
        );
        let d5 = SignedGraph::double(&SignedGraph::cycle(&[P; 5])).unwrap();
        assert_eq!(classify_brick(&d5), Ok(BrickClass::DoubledOddCycle(5)));
        let d4 = SignedGraph::double(&SignedGraph::cycle(&[P; 4])).unwrap();
        assert_eq!(
            classify_brick(&d4),
            Ok(BrickClass::NotABrick(NotBrickReason::DoubledEvenCycle))
        );
        assert_eq!(
            classify_brick(&SignedGraph::edgeless(1)),
            Ok(BrickClass::BalancedComplete(1))
        );
        assert_eq!(
            classify_brick(&SignedGraph::complete(2, N)),
            Ok(BrickClass::BalancedComplete(2))
        );
        assert_eq!(
            classify_brick(&SignedGraph::path(&[P, P])),
            Err(Error::NotABlock)
        );
        let pp = SignedGraph::new(2, [(0, 1, P), (0, 1, P)]).unwrap();
        assert_eq!(
            classify_brick(&pp),
            Ok(BrickClass::NotABrick(
                NotBrickReason::EqualSignedParallelPair
            ))
        );
    }

    #[test]
    fn all_blocks_bricks_examples() {
        let (ok, classes) = all_blocks_are_bricks(&SignedGraph::path(&[P, P])).unwrap();
        assert!(ok);
        assert_eq!(classes, vec![BrickClass::BalancedComplete(2); 2]);
        assert!(
            !all_blocks_are_bricks(&SignedGraph::cycle(&[P; 4]))
                .unwrap()
                .0
        );
        let bowtie = SignedGraph::new(
            5,
            [
                (0, 1, P),
                (1, 2, P),
                (2, 0, P),
                (2, 3, P),
                (3, 4, P),
                (4, 2, P),
            ],
        )
        .unwrap();
        assert!(all_blocks_are_bricks(&bowtie).unwrap().0);
        assert_eq!(
            all_blocks_are_bricks(&SignedGraph::edgeless(2)),
            Err(Error::Disconnected)
        );
    }
}
