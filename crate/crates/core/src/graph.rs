//! Signed multigraphs and their elementary algebra.
//!
//! A [`SignedGraph`] is a loopless multigraph whose edges carry a [`Sign`].
//! Edges are identified by their insertion index, and every operation that
//! changes a graph returns a new value.

use std::collections::VecDeque;
use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn from_value(value: i64) -> Option<Sign> {
        match value {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }

    /// Applies the sign to a color: `+c` or `-c`.
    pub fn apply(self, color: i64) -> i64 {
        self.value() * color
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub sign: Sign,
}

impl Edge {
    pub fn new(u: VertexId, v: VertexId, sign: Sign) -> Self {
        Edge { u, v, sign }
    }

    /// The endpoint opposite to `x`. `x` must be an endpoint.
    pub fn other(&self, x: VertexId) -> VertexId {
        if self.u == x {
            self.v
        } else {
            debug_assert_eq!(self.v, x);
            self.u
        }
    }

    pub fn joins(&self, a: VertexId, b: VertexId) -> bool {
        (self.u == a && self.v == b) || (self.u == b && self.v == a)
    }

    pub fn is_incident(&self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }
}

/// A subset of the vertex set of a graph on a fixed number of vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    members: Vec<bool>,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            members: vec![false; universe],
        }
    }

    pub fn full(universe: usize) -> Self {
        VertexSet {
            members: vec![true; universe],
        }
    }

    pub fn from_vertices(universe: usize, vertices: &[VertexId]) -> Result<Self> {
        let mut set = VertexSet::empty(universe);
        for &v in vertices {
            if v >= universe {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: universe,
                });
            }
            set.members[v] = true;
        }
        Ok(set)
    }

    pub fn from_predicate(universe: usize, pred: impl Fn(VertexId) -> bool) -> Self {
        VertexSet {
            members: (0..universe).map(pred).collect(),
        }
    }

    pub fn universe(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.members.get(v).copied().unwrap_or(false)
    }

    pub fn insert(&mut self, v: VertexId) {
        self.members[v] = true;
    }

    pub fn remove(&mut self, v: VertexId) {
        self.members[v] = false;
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.members.iter().any(|&b| b)
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(v, _)| v)
    }

    pub fn to_vec(&self) -> Vec<VertexId> {
        self.iter().collect()
    }

    pub fn complement(&self) -> Self {
        VertexSet {
            members: self.members.iter().map(|&b| !b).collect(),
        }
    }

    /// `X + Y`, the symmetric difference.
    pub fn symmetric_difference(&self, other: &VertexSet) -> Self {
        assert_eq!(
            self.universe(),
            other.universe(),
            "vertex sets over different universes"
        );
        VertexSet {
            members: self
                .members
                .iter()
                .zip(&other.members)
                .map(|(&a, &b)| a != b)
                .collect(),
        }
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A loopless signed multigraph on vertices `0..n`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawGraph")]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
    #[serde(skip)]
    incidence: Vec<Vec<EdgeId>>,
}

#[derive(Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<Edge>,
}

impl TryFrom<RawGraph> for SignedGraph {
    type Error = Error;

    fn try_from(raw: RawGraph) -> Result<Self> {
        SignedGraph::from_edges(raw.n, raw.edges)
    }
}

impl PartialEq for SignedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for SignedGraph {}

impl std::hash::Hash for SignedGraph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.edges.hash(state);
    }
}

impl SignedGraph {
    /// Builds a graph from `(u, v, sign)` triples. Edge ids follow the input order.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId, Sign)>,
    {
        Self::from_edges(
            n,
            edges
                .into_iter()
                .map(|(u, v, s)| Edge::new(u, v, s))
                .collect(),
        )
    }

    pub fn from_edges(n: usize, edges: Vec<Edge>) -> Result<Self> {
        let mut incidence = vec![Vec::new(); n];
        for (id, e) in edges.iter().enumerate() {
            for x in [e.u, e.v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if e.u == e.v {
                return Err(Error::Loop {
                    edge: id,
                    vertex: e.u,
                });
            }
            incidence[e.u].push(id);
            incidence[e.v].push(id);
        }
        Ok(SignedGraph {
            n,
            edges,
            incidence,
        })
    }

    pub fn edgeless(n: usize) -> Self {
        SignedGraph {
            n,
            edges: Vec::new(),
            incidence: vec![Vec::new(); n],
        }
    }

    /// Complete graph with every edge carrying `sign`.
    pub fn complete(n: usize, sign: Sign) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push(Edge::new(u, v, sign));
            }
        }
        Self::from_edges(n, edges).expect("complete graph is well formed")
    }

    /// The cycle `0-1-...-(l-1)-0` whose `i`-th edge joins `i` and `i+1 mod l`.
    /// A length-2 cycle is a pair of parallel edges.
    pub fn cycle(signs: &[Sign]) -> Self {
        let l = signs.len();
        assert!(l >= 2, "a cycle needs at least two edges");
        let edges = signs
            .iter()
            .enumerate()
            .map(|(i, &s)| Edge::new(i, (i + 1) % l, s))
            .collect();
        Self::from_edges(l, edges).expect("cycle is well formed")
    }

    /// The path `0-1-...-l` with the given edge signs.
    pub fn path(signs: &[Sign]) -> Self {
        let edges = signs
            .iter()
            .enumerate()
            .map(|(i, &s)| Edge::new(i, i + 1, s))
            .collect();
        Self::from_edges(signs.len() + 1, edges).expect("path is well formed")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Result<&Edge> {
        self.edges.get(id).ok_or(Error::EdgeOutOfRange {
            edge: id,
            m: self.edges.len(),
        })
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.n
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub(crate) fn check_set(&self, set: &VertexSet) -> Result<()> {
        if set.universe() == self.n {
            Ok(())
        } else {
            Err(Error::SetSizeMismatch {
                expected: self.n,
                got: set.universe(),
            })
        }
    }

    /// Edge ids incident to `v`. Panics on an invalid vertex.
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.incidence[v].len())
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.max_degree() == self.min_degree()
    }

    /// Number of edges joining `u` and `v`.
    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        if u >= self.n || v >= self.n || u == v {
            return 0;
        }
        self.incidence[u]
            .iter()
            .filter(|&&e| self.edges[e].other(u) == v)
            .count()
    }

    /// Number of positive and negative edges joining `u` and `v`.
    pub fn signed_multiplicity(&self, u: VertexId, v: VertexId) -> (usize, usize) {
        let mut pos = 0;
        let mut neg = 0;
        if u < self.n && v < self.n {
            for &e in &self.incidence[u] {
                let edge = &self.edges[e];
                if edge.other(u) == v && u != v {
                    match edge.sign {
                        Sign::Positive => pos += 1,
                        Sign::Negative => neg += 1,
                    }
                }
            }
        }
        (pos, neg)
    }

    /// `μ(G)`, the largest multiplicity of a vertex pair.
    pub fn max_multiplicity(&self) -> usize {
        let mut best = 0;
        let mut count = vec![0usize; self.n];
        for u in 0..self.n {
            for &e in &self.incidence[u] {
                let w = self.edges[e].other(u);
                count[w] += 1;
                best = best.max(count[w]);
            }
            for &e in &self.incidence[u] {
                count[self.edges[e].other(u)] = 0;
            }
        }
        best
    }

    pub fn is_simple(&self) -> bool {
        self.max_multiplicity() <= 1
    }

    pub fn is_positive(&self) -> bool {
        self.edges.iter().all(|e| e.sign.is_positive())
    }

    pub fn is_negative(&self) -> bool {
        self.edges.iter().all(|e| !e.sign.is_positive())
    }

    /// Distinct neighbors of `v`, sorted.
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let mut out: Vec<_> = self.incidence[v]
            .iter()
            .map(|&e| self.edges[e].other(v))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// `N⁺(v)`: vertices joined to `v` by at least one positive edge.
    pub fn positive_neighbors(&self, v: VertexId) -> Vec<VertexId> {
        self.signed_neighbors(v, Sign::Positive)
    }

    /// `N⁻(v)`: vertices joined to `v` by at least one negative edge.
    pub fn negative_neighbors(&self, v: VertexId) -> Vec<VertexId> {
        self.signed_neighbors(v, Sign::Negative)
    }

    fn signed_neighbors(&self, v: VertexId, sign: Sign) -> Vec<VertexId> {
        let mut out: Vec<_> = self.incidence[v]
            .iter()
            .map(|&e| &self.edges[e])
            .filter(|e| e.sign == sign)
            .map(|e| e.other(v))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// `E(X, Y)`: edges with one end in `x` and the other in `y`.
    pub fn edges_between(&self, x: &VertexSet, y: &VertexSet) -> Result<Vec<EdgeId>> {
        self.check_set(x)?;
        self.check_set(y)?;
        Ok(self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, e)| {
                (x.contains(e.u) && y.contains(e.v)) || (x.contains(e.v) && y.contains(e.u))
            })
            .map(|(id, _)| id)
            .collect())
    }

    /// `∂X`: edges with exactly one end in `x`.
    pub fn coboundary(&self, x: &VertexSet) -> Result<Vec<EdgeId>> {
        self.check_set(x)?;
        Ok(self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, e)| x.contains(e.u) != x.contains(e.v))
            .map(|(id, _)| id)
            .collect())
    }

    /// `d(v : X)`, the number of edges from `v` into `x`.
    pub fn degree_into(&self, v: VertexId, x: &VertexSet) -> Result<usize> {
        self.check_vertex(v)?;
        self.check_set(x)?;
        Ok(self.incidence[v]
            .iter()
            .filter(|&&e| x.contains(self.edges[e].other(v)))
            .count())
    }

    /// `G/X`: reverses the sign of every edge in the coboundary of `x`.
    pub fn switch(&self, x: &VertexSet) -> Result<Self> {
        self.check_set(x)?;
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let sign = if x.contains(e.u) != x.contains(e.v) {
                    e.sign.flipped()
                } else {
                    e.sign
                };
                Edge { sign, ..*e }
            })
            .collect();
        Ok(SignedGraph {
            n: self.n,
            edges,
            incidence: self.incidence.clone(),
        })
    }

    /// Reverses the sign of every edge.
    pub fn negate(&self) -> Self {
        self.with_signs(|e| e.sign.flipped())
    }

    pub(crate) fn with_signs(&self, f: impl Fn(&Edge) -> Sign) -> Self {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge { sign: f(e), ..*e })
            .collect();
        SignedGraph {
            n: self.n,
            edges,
            incidence: self.incidence.clone(),
        }
    }

    /// `2H`: every edge of the simple positive graph `h` becomes a positive and a
    /// negative parallel pair (positive edge first).
    pub fn double(h: &SignedGraph) -> Result<Self> {
        if !h.is_positive() || !h.is_simple() {
            return Err(Error::NotSimplePositive);
        }
        let mut edges = Vec::with_capacity(2 * h.edge_count());
        for e in &h.edges {
            edges.push(Edge::new(e.u, e.v, Sign::Positive));
            edges.push(Edge::new(e.u, e.v, Sign::Negative));
        }
        Self::from_edges(h.n, edges)
    }

    /// The simple positive graph on the same vertices with an edge wherever `self`
    /// has at least one.
    pub fn support(&self) -> Self {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    edges.push(Edge::new(u, v, Sign::Positive));
                }
            }
        }
        SignedGraph::from_edges(self.n, edges).expect("support is well formed")
    }

    /// `G - v`. The returned map sends old vertex ids to new ones (`None` for `v`).
    pub fn delete_vertex(&self, v: VertexId) -> Result<(Self, Vec<Option<VertexId>>)> {
        self.check_vertex(v)?;
        let keep: Vec<VertexId> = (0..self.n).filter(|&x| x != v).collect();
        let (g, _) = self.induced(&keep)?;
        let map = (0..self.n)
            .map(|x| {
                if x == v {
                    None
                } else if x < v {
                    Some(x)
                } else {
                    Some(x - 1)
                }
            })
            .collect();
        Ok((g, map))
    }

    /// `G - e`. Remaining edges keep their relative order.
    pub fn delete_edge(&self, id: EdgeId) -> Result<Self> {
        self.edge(id)?;
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != id)
            .map(|(_, e)| *e)
            .collect();
        Self::from_edges(self.n, edges)
    }

    /// `G[X]` for the listed vertices; vertex `i` of the result is `vertices[i]`.
    /// Returns the subgraph and, for each of its edges, the original edge id.
    pub fn induced(&self, vertices: &[VertexId]) -> Result<(Self, Vec<EdgeId>)> {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            self.check_vertex(v)?;
            pos[v] = i;
        }
        let mut edges = Vec::new();
        let mut origin = Vec::new();
        for (id, e) in self.edges.iter().enumerate() {
            if pos[e.u] != usize::MAX && pos[e.v] != usize::MAX {
                edges.push(Edge::new(pos[e.u], pos[e.v], e.sign));
                origin.push(id);
            }
        }
        Ok((Self::from_edges(vertices.len(), edges)?, origin))
    }

    /// The subgraph spanned by the given edge ids; vertices are the endpoints,
    /// sorted, and edges keep the order given.
    pub fn edge_subgraph(&self, ids: &[EdgeId]) -> Result<(Self, Vec<VertexId>)> {
        let mut verts = Vec::new();
        for &id in ids {
            let e = self.edge(id)?;
            verts.push(e.u);
            verts.push(e.v);
        }
        verts.sort_unstable();
        verts.dedup();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let edges = ids
            .iter()
            .map(|&id| {
                let e = &self.edges[id];
                Edge::new(pos[e.u], pos[e.v], e.sign)
            })
            .collect();
        Ok((Self::from_edges(verts.len(), edges)?, verts))
    }

    /// `σ(H)`, the product of the signs over the given edge ids.
    pub fn sign_product(&self, ids: &[EdgeId]) -> Result<Sign> {
        let mut acc = Sign::Positive;
        for &id in ids {
            acc = acc * self.edge(id)?.sign;
        }
        Ok(acc)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &e in &self.incidence[x] {
                    let y = self.edges[e].other(x);
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True for graphs with at least one vertex and a single component.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    /// Ids of the edges carrying `sign`, ascending.
    pub fn edges_with_sign(&self, sign: Sign) -> Vec<EdgeId> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.sign == sign)
            .map(|(i, _)| i)
            .collect()
    }
}

impl fmt::Display for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} [", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}{}{}", e.u, e.sign, e.v)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::{Negative as N, Positive as P};

    #[test]
    fn build_rejects_loops_and_bad_ids() {
        assert_eq!(
            SignedGraph::new(2, [(1, 1, P)]),
            Err(Error::Loop { edge: 0, vertex: 1 })
        );
        assert_eq!(
            SignedGraph::new(2, [(0, 2, P)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn build_examples() {
        let k1 = SignedGraph::new(1, []).unwrap();
        assert_eq!(k1.vertex_count(), 1);
        assert_eq!(k1.degree(0), Ok(0));

        let dk2 = SignedGraph::new(2, [(0, 1, P), (0, 1, N)]).unwrap();
        assert_eq!(
            dk2,
            SignedGraph::double(&SignedGraph::complete(2, P)).unwrap()
        );
        assert_eq!(dk2.degree(0), Ok(2));
        assert_eq!(dk2.max_multiplicity(), 2);

        let tri = SignedGraph::new(3, [(0, 1, P), (1, 2, P), (0, 2, N)]).unwrap();
        assert!(tri.degrees().iter().all(|&d| d == 2));
        assert_eq!(
            tri.degree(3),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn doubled_triangle_and_pentagon() {
        let d3 = SignedGraph::double(&SignedGraph::complete(3, P)).unwrap();
        assert_eq!(d3.edge_count(), 6);
        assert!(d3.degrees().iter().all(|&d| d == 4));
        let c5 = SignedGraph::cycle(&[P; 5]);
        let d5 = SignedGraph::double(&c5).unwrap();
        assert_eq!(d5.edge_count(), 10);
        assert!(d5.degrees().iter().all(|&d| d == 4));
        for u in 0..5 {
            let v = (u + 1) % 5;
            assert_eq!(d5.signed_multiplicity(u, v), (1, 1));
        }
        assert_eq!(SignedGraph::double(&d3), Err(Error::NotSimplePositive));
        assert_eq!(
            SignedGraph::double(&SignedGraph::complete(2, N)),
            Err(Error::NotSimplePositive)
        );
    }

    #[test]
    fn switching_examples() {
        let k2 = SignedGraph::complete(2, P);
        let empty = VertexSet::empty(2);
        assert_eq!(k2.switch(&empty).unwrap(), k2);
        let x = VertexSet::from_vertices(2, &[0]).unwrap();
        assert_eq!(k2.switch(&x).unwrap(), SignedGraph::complete(2, N));
        assert!(k2.switch(&VertexSet::empty(3)).is_err());
    }

    #[test]
    fn negation_examples() {
        assert_eq!(
            SignedGraph::complete(3, P).negate(),
            SignedGraph::complete(3, N)
        );
        let dk2 = SignedGraph::new(2, [(0, 1, P), (0, 1, N)]).unwrap();
        assert_eq!(dk2.negate().signed_multiplicity(0, 1), (1, 1));
    }

    #[test]
    fn deletion_examples() {
        let d3 = SignedGraph::double(&SignedGraph::complete(3, P)).unwrap();
        for v in 0..3 {
            let (g, map) = d3.delete_vertex(v).unwrap();
            assert_eq!(
                g,
                SignedGraph::double(&SignedGraph::complete(2, P)).unwrap()
            );
            assert_eq!(map[v], None);
        }
        let k2 = SignedGraph::complete(2, P);
        assert_eq!(k2.delete_edge(0).unwrap(), SignedGraph::edgeless(2));
        assert!(k2.delete_edge(1).is_err());
        let path = SignedGraph::path(&[P, P]);
        let (g, map) = path.delete_vertex(1).unwrap();
        assert_eq!(g, SignedGraph::edgeless(2));
        assert_eq!(map, vec![Some(0), None, Some(1)]);
    }

    #[test]
    fn sign_product_examples() {
        let c3 = SignedGraph::cycle(&[P, P, P]);
        assert_eq!(c3.sign_product(&[0, 1, 2]), Ok(P));
        let c4 = SignedGraph::cycle(&[P, N, P, P]);
        assert_eq!(c4.sign_product(&[0, 1, 2, 3]), Ok(N));
        assert_eq!(c4.sign_product(&[]), Ok(P));
        assert!(c4.sign_product(&[4]).is_err());
    }

    #[test]
    fn neighborhoods_and_coboundary() {
        let g = SignedGraph::new(3, [(0, 1, P), (0, 1, N), (0, 2, N)]).unwrap();
        assert_eq!(g.positive_neighbors(0), vec![1]);
        assert_eq!(g.negative_neighbors(0), vec![1, 2]);
        let x = VertexSet::from_vertices(3, &[0]).unwrap();
        assert_eq!(g.coboundary(&x).unwrap(), vec![0, 1, 2]);
        assert_eq!(
            g.degree_into(0, &VertexSet::from_vertices(3, &[1]).unwrap()),
            Ok(2)
        );
        assert_eq!(g.support().edge_count(), 2);
    }

    #[test]
    fn vertex_set_algebra() {
        let a = VertexSet::from_vertices(4, &[0, 1]).unwrap();
        let b = VertexSet::from_vertices(4, &[1, 2]).unwrap();
        assert_eq!(a.symmetric_difference(&b).to_vec(), vec![0, 2]);
        assert_eq!(a.complement().to_vec(), vec![2, 3]);
        assert!(VertexSet::from_vertices(2, &[2]).is_err());
    }
}
