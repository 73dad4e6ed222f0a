//! Exhaustive generation of small signed multigraphs.
//!
//! Graphs are stored as matrices of pair states, a pair state being the
//! number of positive and negative edges `(p, q)` between two vertices. The
//! code of a graph under a vertex order is the upper triangle read column by
//! column. Under switching, each code is first normalized greedily: walking
//! the code, the first entry with `p ≠ q` that links two not yet related
//! groups of vertices is switched to have `p > q`.
//!
//! A graph is canonical when no vertex order yields a smaller normalized code.
//! Deleting the last vertex of a canonical graph leaves a canonical graph, so
//! every class is produced exactly once by extending canonical graphs one
//! vertex at a time and keeping the canonical extensions.

pub mod suites;

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Sign, SignedGraph};

/// Largest number of vertices the generator handles.
pub const MAX_VERTICES: usize = 8;
/// Largest multiplicity the generator handles.
pub const MAX_MULTIPLICITY: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Equivalence {
    Isomorphism,
    SwitchingIsomorphism,
}

/// Which graphs to generate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumSpec {
    pub min_vertices: usize,
    pub max_vertices: usize,
    pub max_multiplicity: usize,
    pub connected_only: bool,
    pub modulo: Equivalence,
    /// Upper bound on the maximum degree.
    pub degree_cap: Option<usize>,
    /// Upper bound on the number of edges.
    pub max_edges: Option<usize>,
}

impl EnumSpec {
    /// Connected graphs on `1..=max_vertices` vertices up to switching and
    /// isomorphism.
    pub fn new(max_vertices: usize, max_multiplicity: usize) -> Self {
        EnumSpec {
            min_vertices: 1,
            max_vertices,
            max_multiplicity,
            connected_only: true,
            modulo: Equivalence::SwitchingIsomorphism,
            degree_cap: None,
            max_edges: None,
        }
    }

    pub fn modulo(mut self, modulo: Equivalence) -> Self {
        self.modulo = modulo;
        self
    }

    pub fn min_vertices(mut self, n: usize) -> Self {
        self.min_vertices = n;
        self
    }

    pub fn degree_cap(mut self, cap: usize) -> Self {
        self.degree_cap = Some(cap);
        self
    }

    pub fn max_edges(mut self, m: usize) -> Self {
        self.max_edges = Some(m);
        self
    }

    pub fn connected_only(mut self, connected: bool) -> Self {
        self.connected_only = connected;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.max_vertices > MAX_VERTICES {
            return Err(Error::EnumerationBound(format!(
                "{} vertices requested, at most {MAX_VERTICES} supported",
                self.max_vertices
            )));
        }
        if self.max_multiplicity > MAX_MULTIPLICITY {
            return Err(Error::EnumerationBound(format!(
                "multiplicity {} requested, at most {MAX_MULTIPLICITY} supported",
                self.max_multiplicity
            )));
        }
        Ok(())
    }
}

/// Pair states `(p, q)` with `p + q ≤ μ`, indexed by `t(t+1)/2 + q` where
/// `t = p + q`. For `μ = 2` the order is `none < + < - < ++ < +- < --`.
struct States {
    count: usize,
    positive: Vec<u8>,
    negative: Vec<u8>,
    flip: Vec<u8>,
    polar: Vec<bool>,
    /// `p > q`: the smaller of a polar state and its flip
    leading: Vec<bool>,
}

fn state_index(p: usize, q: usize) -> usize {
    let t = p + q;
    t * (t + 1) / 2 + q
}

impl States {
    fn new(mu: usize) -> Self {
        let count = (mu + 1) * (mu + 2) / 2;
        let mut s = States {
            count,
            positive: vec![0; count],
            negative: vec![0; count],
            flip: vec![0; count],
            polar: vec![false; count],
            leading: vec![false; count],
        };
        for t in 0..=mu {
            for q in 0..=t {
                let p = t - q;
                let i = state_index(p, q);
                s.positive[i] = p as u8;
                s.negative[i] = q as u8;
                s.flip[i] = state_index(q, p) as u8;
                s.polar[i] = p != q;
                s.leading[i] = p > q;
            }
        }
        s
    }

    fn edges(&self, s: u8) -> usize {
        (self.positive[s as usize] + self.negative[s as usize]) as usize
    }
}

type Matrix = [[u8; MAX_VERTICES]; MAX_VERTICES];

#[derive(Clone, Copy)]
struct Code {
    n: usize,
    m: Matrix,
}

impl Code {
    fn to_graph(self, states: &States) -> SignedGraph {
        let mut edges = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                let s = self.m[i][j] as usize;
                for _ in 0..states.positive[s] {
                    edges.push(Edge::new(i, j, Sign::Positive));
                }
                for _ in 0..states.negative[s] {
                    edges.push(Edge::new(i, j, Sign::Negative));
                }
            }
        }
        SignedGraph::from_edges(self.n, edges).expect("codes describe loopless graphs")
    }

    fn from_graph(g: &SignedGraph, states: &States) -> Result<Self> {
        let n = g.vertex_count();
        if n > MAX_VERTICES {
            return Err(Error::EnumerationBound(format!(
                "{n} vertices, at most {MAX_VERTICES} supported"
            )));
        }
        let mut m = [[0u8; MAX_VERTICES]; MAX_VERTICES];
        for i in 0..n {
            for j in i + 1..n {
                let (p, q) = g.signed_multiplicity(i, j);
                let idx = state_index(p, q);
                if idx >= states.count {
                    return Err(Error::EnumerationBound(format!(
                        "multiplicity {} exceeds the state table",
                        p + q
                    )));
                }
                m[i][j] = idx as u8;
                m[j][i] = idx as u8;
            }
        }
        Ok(Code { n, m })
    }

    fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = 1u16;
        let mut stack = [0usize; MAX_VERTICES];
        let mut top = 1;
        while top > 0 {
            top -= 1;
            let x = stack[top];
            for y in 0..self.n {
                if self.m[x][y] != 0 && seen >> y & 1 == 0 {
                    seen |= 1 << y;
                    stack[top] = y;
                    top += 1;
                }
            }
        }
        seen.count_ones() as usize == self.n
    }
}

/// Greedy switching normalization state over the positions placed so far:
/// `group[a]` is a representative and `parity[a]` the switching of `a`
/// relative to it.
#[derive(Clone, Copy)]
struct Groups {
    group: [u8; MAX_VERTICES],
    parity: [u8; MAX_VERTICES],
}

impl Groups {
    fn new() -> Self {
        Groups {
            group: [0; MAX_VERTICES],
            parity: [0; MAX_VERTICES],
        }
    }

    /// Value of entry `(a, k)` for raw state `s`, merging groups when the
    /// entry is the first link between them.
    #[inline]
    fn entry(&mut self, states: &States, s: u8, a: usize, k: usize) -> u8 {
        if !states.polar[s as usize] {
            return s;
        }
        let (ga, gk) = (self.group[a], self.group[k]);
        if ga != gk {
            let want = self.parity[a] ^ u8::from(!states.leading[s as usize]);
            let delta = want ^ self.parity[k];
            for x in 0..=k {
                if self.group[x] == gk {
                    self.group[x] = ga;
                    self.parity[x] ^= delta;
                }
            }
        }
        if self.parity[a] != self.parity[k] {
            states.flip[s as usize]
        } else {
            s
        }
    }
}

struct Canonizer<'a> {
    states: &'a States,
    switching: bool,
    n: usize,
    m: &'a Matrix,
    target: Matrix,
    order: [usize; MAX_VERTICES],
    /// in search mode the best code found so far replaces `target`
    minimize: bool,
}

#[derive(PartialEq, Eq)]
enum Found {
    Smaller,
    NotSmaller,
}

impl Canonizer<'_> {
    fn search(&mut self, k: usize, used: u16, groups: Groups) -> Found {
        if k == self.n {
            return Found::NotSmaller;
        }
        for v in 0..self.n {
            if used >> v & 1 == 1 {
                continue;
            }
            let mut g = groups;
            g.group[k] = k as u8;
            g.parity[k] = 0;
            let mut column = [0u8; MAX_VERTICES];
            let mut cmp = std::cmp::Ordering::Equal;
            for a in 0..k {
                let raw = self.m[self.order[a]][v];
                let value = if self.switching {
                    g.entry(self.states, raw, a, k)
                } else {
                    raw
                };
                column[a] = value;
                if cmp == std::cmp::Ordering::Equal {
                    cmp = value.cmp(&self.target[a][k]);
                    if cmp == std::cmp::Ordering::Greater && !self.minimize {
                        break;
                    }
                    if cmp == std::cmp::Ordering::Less && !self.minimize {
                        return Found::Smaller;
                    }
                }
            }
            match cmp {
                std::cmp::Ordering::Greater => continue,
                std::cmp::Ordering::Less => {
                    // minimize: adopt this column, everything after is unknown
                    for a in 0..k {
                        self.target[a][k] = column[a];
                    }
                    for j in k + 1..self.n {
                        for a in 0..j {
                            self.target[a][j] = u8::MAX;
                        }
                    }
                }
                std::cmp::Ordering::Equal => {}
            }
            self.order[k] = v;
            if self.search(k + 1, used | 1 << v, g) == Found::Smaller {
                return Found::Smaller;
            }
        }
        Found::NotSmaller
    }
}

/// True iff no vertex order gives a smaller (normalized) code than the
/// identity. `code` must already be normalized under the identity.
fn is_canonical(code: &Code, states: &States, switching: bool) -> bool {
    let mut c = Canonizer {
        states,
        switching,
        n: code.n,
        m: &code.m,
        target: code.m,
        order: [0; MAX_VERTICES],
        minimize: false,
    };
    c.search(0, 0, Groups::new()) == Found::NotSmaller
}

/// The minimal normalized code over all vertex orders.
fn canonical_code(code: &Code, states: &States, switching: bool) -> Code {
    let mut c = Canonizer {
        states,
        switching,
        n: code.n,
        m: &code.m,
        target: [[u8::MAX; MAX_VERTICES]; MAX_VERTICES],
        order: [0; MAX_VERTICES],
        minimize: true,
    };
    c.search(0, 0, Groups::new());
    let mut m = [[0u8; MAX_VERTICES]; MAX_VERTICES];
    for j in 0..code.n {
        for a in 0..j {
            m[a][j] = c.target[a][j];
            m[j][a] = c.target[a][j];
        }
    }
    Code { n: code.n, m }
}

/// The canonical representative of `g`'s class: equal outputs exactly for
/// isomorphic (or, with switching, switching-isomorphic) inputs.
pub fn canonical_form(g: &SignedGraph, modulo: Equivalence) -> Result<SignedGraph> {
    let states = States::new(g.max_multiplicity().max(1));
    let code = Code::from_graph(g, &states)?;
    Ok(
        canonical_code(&code, &states, modulo == Equivalence::SwitchingIsomorphism)
            .to_graph(&states),
    )
}

/// A compact string key for `g`'s class.
pub fn canonical_key(g: &SignedGraph, modulo: Equivalence) -> Result<String> {
    let c = canonical_form(g, modulo)?;
    let mut key = format!("{}:", c.vertex_count());
    for i in 0..c.vertex_count() {
        for j in i + 1..c.vertex_count() {
            let (p, q) = c.signed_multiplicity(i, j);
            key.push_str(&format!("{p}{q}"));
        }
    }
    Ok(key)
}

struct Generator<'a> {
    spec: &'a EnumSpec,
    states: States,
    switching: bool,
}

impl Generator<'_> {
    /// Calls `child` for every canonical one-vertex extension of `parent`.
    fn extend(
        &self,
        parent: &Code,
        child: &mut dyn FnMut(&Code) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let n = parent.n;
        let mut degree = [0usize; MAX_VERTICES];
        let mut edges = 0;
        // groups of the parent linked by polar entries
        let mut group = [0u8; MAX_VERTICES];
        for (i, g) in group.iter_mut().enumerate().take(n) {
            *g = i as u8;
        }
        for i in 0..n {
            for j in i + 1..n {
                let s = parent.m[i][j];
                degree[i] += self.states.edges(s);
                degree[j] += self.states.edges(s);
                edges += self.states.edges(s);
                if self.states.polar[s as usize] {
                    let (gi, gj) = (group[i], group[j]);
                    if gi != gj {
                        for g in group.iter_mut().take(n) {
                            if *g == gj {
                                *g = gi;
                            }
                        }
                    }
                }
            }
        }
        let mut code = *parent;
        code.n = n + 1;
        self.columns(&mut code, 0, &degree, 0, edges, 0u16, &group, child)
    }

    #[allow(clippy::too_many_arguments)]
    fn columns(
        &self,
        code: &mut Code,
        i: usize,
        degree: &[usize; MAX_VERTICES],
        new_degree: usize,
        edges: usize,
        entered: u16,
        group: &[u8; MAX_VERTICES],
        child: &mut dyn FnMut(&Code) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let n = code.n - 1;
        if i == n {
            if is_canonical(code, &self.states, self.switching) {
                return child(code);
            }
            return ControlFlow::Continue(());
        }
        let cap = self.spec.degree_cap.unwrap_or(usize::MAX);
        let max_edges = self.spec.max_edges.unwrap_or(usize::MAX);
        for s in 0..self.states.count as u8 {
            let e = self.states.edges(s);
            if degree[i] + e > cap || new_degree + e > cap || edges + e > max_edges {
                continue;
            }
            let mut now_entered = entered;
            if self.switching && self.states.polar[s as usize] {
                let bit = 1u16 << group[i];
                if entered & bit == 0 {
                    if !self.states.leading[s as usize] {
                        continue;
                    }
                    now_entered |= bit;
                }
            }
            code.m[i][n] = s;
            code.m[n][i] = s;
            self.columns(
                code,
                i + 1,
                degree,
                new_degree + e,
                edges + e,
                now_entered,
                group,
                child,
            )?;
        }
        code.m[i][n] = 0;
        code.m[n][i] = 0;
        ControlFlow::Continue(())
    }
}

/// Streams every graph of `spec` exactly once up to the chosen equivalence,
/// in a fixed order (by vertex count, then generation order). Returns the
/// number of graphs visited.
pub fn for_each_graph<F>(spec: &EnumSpec, mut visit: F) -> Result<u64>
where
    F: FnMut(&SignedGraph) -> ControlFlow<()>,
{
    spec.validate()?;
    let generator = Generator {
        spec,
        states: States::new(spec.max_multiplicity),
        switching: spec.modulo == Equivalence::SwitchingIsomorphism,
    };
    let mut count = 0u64;
    let mut emit = |code: &Code, count: &mut u64| -> ControlFlow<()> {
        if code.n >= spec.min_vertices && (!spec.connected_only || code.is_connected()) {
            *count += 1;
            visit(&code.to_graph(&generator.states))
        } else {
            ControlFlow::Continue(())
        }
    };
    if spec.max_vertices == 0 {
        return Ok(0);
    }
    let mut level = vec![Code {
        n: 1,
        m: [[0; MAX_VERTICES]; MAX_VERTICES],
    }];
    if emit(&level[0], &mut count).is_break() {
        return Ok(count);
    }
    for n in 2..=spec.max_vertices {
        let last = n == spec.max_vertices;
        let mut next = Vec::new();
        for parent in &level {
            let flow = generator.extend(parent, &mut |child| {
                if !last {
                    next.push(*child);
                }
                emit(child, &mut count)
            });
            if flow.is_break() {
                return Ok(count);
            }
        }
        level = next;
    }
    Ok(count)
}

/// Collects [`for_each_graph`] into a vector.
pub fn enumerate(spec: &EnumSpec) -> Result<Vec<SignedGraph>> {
    let mut out = Vec::new();
    for_each_graph(spec, |g| {
        out.push(g.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::{Negative as N, Positive as P};
    use crate::graph::VertexSet;
    use std::collections::BTreeSet;

    fn count(spec: &EnumSpec) -> u64 {
        for_each_graph(spec, |_| ControlFlow::Continue(())).unwrap()
    }

    #[test]
    fn state_order() {
        let s = States::new(2);
        let names: Vec<(u8, u8)> = (0..s.count)
            .map(|i| (s.positive[i], s.negative[i]))
            .collect();
        assert_eq!(names, vec![(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]);
        assert_eq!(s.flip, vec![0, 2, 1, 5, 4, 3]);
    }

    #[test]
    fn two_vertex_catalog() {
        let iso = EnumSpec::new(2, 2).modulo(Equivalence::Isomorphism);
        let graphs = enumerate(&iso).unwrap();
        let expected = vec![
            SignedGraph::edgeless(1),
            SignedGraph::complete(2, P),
            SignedGraph::complete(2, N),
            SignedGraph::new(2, [(0, 1, P), (0, 1, P)]).unwrap(),
            SignedGraph::new(2, [(0, 1, P), (0, 1, N)]).unwrap(),
            SignedGraph::new(2, [(0, 1, N), (0, 1, N)]).unwrap(),
        ];
        assert_eq!(graphs, expected);
        assert_eq!(count(&EnumSpec::new(2, 2)), 4);
    }

    #[test]
    fn three_vertex_simple_classes() {
        let spec = EnumSpec::new(3, 1).min_vertices(3);
        let graphs = enumerate(&spec).unwrap();
        assert_eq!(graphs.len(), 3);
        let unbalanced = graphs
            .iter()
            .filter(|g| !crate::structure::is_balanced(g))
            .count();
        assert_eq!(unbalanced, 1);
    }

    #[test]
    fn canonical_form_identifies_switching_classes() {
        let g = SignedGraph::new(
            4,
            [
                (0, 1, P),
                (1, 2, N),
                (2, 3, P),
                (3, 0, P),
                (0, 2, N),
                (0, 2, P),
            ],
        )
        .unwrap();
        let h = g
            .switch(&VertexSet::from_vertices(4, &[1, 3]).unwrap())
            .unwrap();
        let relabeled = SignedGraph::new(
            4,
            g.edges()
                .iter()
                .map(|e| ((e.u + 1) % 4, (e.v + 1) % 4, e.sign)),
        )
        .unwrap();
        let sw = Equivalence::SwitchingIsomorphism;
        assert_eq!(
            canonical_key(&g, sw).unwrap(),
            canonical_key(&h, sw).unwrap()
        );
        assert_eq!(
            canonical_key(&g, sw).unwrap(),
            canonical_key(&relabeled, sw).unwrap()
        );
        assert_ne!(
            canonical_key(&g, Equivalence::Isomorphism).unwrap(),
            canonical_key(&h, Equivalence::Isomorphism).unwrap()
        );
    }

    #[test]
    fn enumeration_outputs_are_distinct_canonical_forms() {
        for modulo in [Equivalence::Isomorphism, Equivalence::SwitchingIsomorphism] {
            let spec = EnumSpec::new(4, 2).modulo(modulo);
            let graphs = enumerate(&spec).unwrap();
            let keys: BTreeSet<String> = graphs
                .iter()
                .map(|g| canonical_key(g, modulo).unwrap())
                .collect();
            assert_eq!(keys.len(), graphs.len());
            for g in &graphs {
                assert_eq!(&canonical_form(g, modulo).unwrap(), g);
            }
        }
    }

    #[test]
    fn simple_unsigned_counts() {
        // connected simple graphs on 1..=5 vertices: 1, 1, 2, 6, 21
        let spec = EnumSpec::new(5, 1).modulo(Equivalence::Isomorphism);
        let mut per_n = [0usize; 6];
        for g in enumerate(&spec).unwrap() {
            if g.is_positive() {
                per_n[g.vertex_count()] += 1;
            }
        }
        assert_eq!(&per_n[1..], &[1, 1, 2, 6, 21]);
    }

    #[test]
    fn bounds_are_checked() {
        assert!(matches!(
            count_result(&EnumSpec::new(9, 1)),
            Err(Error::EnumerationBound(_))
        ));
        assert!(matches!(
            count_result(&EnumSpec::new(3, 7)),
            Err(Error::EnumerationBound(_))
        ));
    }

    fn count_result(spec: &EnumSpec) -> Result<u64> {
        for_each_graph(spec, |_| ControlFlow::Continue(()))
    }

    #[test]
    fn caps_restrict_output() {
        let spec = EnumSpec::new(4, 6)
            .max_edges(6)
            .modulo(Equivalence::SwitchingIsomorphism);
        for g in enumerate(&spec).unwrap() {
            assert!(g.edge_count() <= 6);
        }
        let spec = EnumSpec::new(5, 2).degree_cap(3);
        for g in enumerate(&spec).unwrap() {
            assert!(g.max_degree() <= 3);
        }
    }
}
