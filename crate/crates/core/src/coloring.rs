//! Signed colorings, the signed chromatic number and the coloring number.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{SignedGraph, VertexId, VertexSet};
use crate::solver::{Engine, Symmetry};

/// A finite set of integer colors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColorSet(BTreeSet<i64>);

impl ColorSet {
    pub fn new() -> Self {
        ColorSet(BTreeSet::new())
    }

    /// `Z_k`: `{±1, ..., ±h}` for `k = 2h`, plus `0` when `k = 2h + 1`.
    pub fn z(k: usize) -> Self {
        let h = (k / 2) as i64;
        let mut set: BTreeSet<i64> = (1..=h).flat_map(|c| [c, -c]).collect();
        if k % 2 == 1 {
            set.insert(0);
        }
        ColorSet(set)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, c: i64) -> bool {
        self.0.contains(&c)
    }

    pub fn insert(&mut self, c: i64) -> bool {
        self.0.insert(c)
    }

    pub fn remove(&mut self, c: i64) -> bool {
        self.0.remove(&c)
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.0.iter().copied()
    }

    /// `-C`.
    pub fn negated(&self) -> Self {
        self.iter().map(|c| -c).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.iter().all(|c| self.contains(-c))
    }

    pub fn union(&self, other: &ColorSet) -> Self {
        ColorSet(self.0.union(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &ColorSet) -> Self {
        ColorSet(self.0.intersection(&other.0).copied().collect())
    }

    pub fn is_disjoint(&self, other: &ColorSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn to_vec(&self) -> Vec<i64> {
        self.iter().collect()
    }
}

impl FromIterator<i64> for ColorSet {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        ColorSet(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[i64; N]> for ColorSet {
    fn from(colors: [i64; N]) -> Self {
        colors.into_iter().collect()
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// A total map from vertices to integer colors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SignedColoring(Vec<i64>);

impl SignedColoring {
    pub fn new(colors: Vec<i64>) -> Self {
        SignedColoring(colors)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn color(&self, v: VertexId) -> i64 {
        self.0[v]
    }

    pub fn colors(&self) -> &[i64] {
        &self.0
    }

    pub fn image(&self) -> ColorSet {
        self.0.iter().copied().collect()
    }

    /// `φ/X`: negates the colors on `x`. A coloring of `G` becomes a coloring
    /// of `G/X`.
    pub fn switch(&self, x: &VertexSet) -> Self {
        SignedColoring(
            self.0
                .iter()
                .enumerate()
                .map(|(v, &c)| if x.contains(v) { -c } else { c })
                .collect(),
        )
    }
}

impl fmt::Display for SignedColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, c) in self.0.iter().enumerate() {
            if v > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}:{c}")?;
        }
        Ok(())
    }
}

/// True iff `φ(u) ≠ σ(e)·φ(v)` for every edge `e = uv`.
pub fn is_valid_coloring(g: &SignedGraph, phi: &SignedColoring) -> Result<bool> {
    if phi.len() != g.vertex_count() {
        return Err(Error::PartialAssignment {
            expected: g.vertex_count(),
            got: phi.len(),
        });
    }
    Ok(g.edges()
        .iter()
        .all(|e| phi.color(e.u) != e.sign.apply(phi.color(e.v))))
}

/// A coloring with image in `c`, or `None` if none exists.
pub fn solve_with_colorset(g: &SignedGraph, c: &ColorSet) -> Result<Option<SignedColoring>> {
    let symmetry = if c.is_symmetric() {
        Symmetry::Pairs
    } else {
        Symmetry::None
    };
    let engine = Engine::new(g, c.to_vec())?.with_symmetry(symmetry);
    let domains = vec![engine.full_domain(); g.vertex_count()];
    Ok(engine.solve_colors(&domains).map(SignedColoring))
}

fn colorable_with_z(g: &SignedGraph, k: usize) -> Result<Option<SignedColoring>> {
    if g.vertex_count() == 0 {
        return Ok(Some(SignedColoring(Vec::new())));
    }
    solve_with_colorset(g, &ColorSet::z(k))
}

/// `χ±(G)` together with a coloring into `Z_χ±`. The empty graph has `χ± = 0`
/// and an edgeless graph `χ± = 1`.
pub fn signed_chromatic_witness(g: &SignedGraph) -> Result<(usize, SignedColoring)> {
    if g.vertex_count() == 0 {
        return Ok((0, SignedColoring(Vec::new())));
    }
    let mut engine = Engine::new(g, Vec::new())?;
    let n = g.vertex_count();
    for k in 1..=g.max_degree() + 1 {
        engine = engine
            .with_palette(ColorSet::z(k).to_vec())?
            .with_symmetry(Symmetry::Pairs);
        if let Some(colors) = engine.solve_colors(&vec![engine.full_domain(); n]) {
            return Ok((k, SignedColoring(colors)));
        }
    }
    unreachable!("greedy coloring fits in Z_(Δ+1)")
}

pub fn signed_chromatic_number(g: &SignedGraph) -> Result<usize> {
    Ok(signed_chromatic_witness(g)?.0)
}

/// `col(G)` and the order in which vertices were removed while repeatedly
/// deleting a vertex of minimum degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoringNumber {
    pub value: usize,
    pub elimination_order: Vec<VertexId>,
}

impl ColoringNumber {
    /// The reverse elimination order: each vertex has at most `col - 1`
    /// earlier neighbors (counted with multiplicity).
    pub fn coloring_order(&self) -> Vec<VertexId> {
        self.elimination_order.iter().rev().copied().collect()
    }
}

pub fn coloring_number(g: &SignedGraph) -> ColoringNumber {
    let n = g.vertex_count();
    let mut deg = g.degrees();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut degeneracy = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| deg[v])
            .expect("a vertex remains");
        degeneracy = degeneracy.max(deg[v]);
        removed[v] = true;
        order.push(v);
        for &e in g.incident(v) {
            let w = g.edges()[e].other(v);
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    ColoringNumber {
        value: if n == 0 { 0 } else { degeneracy + 1 },
        elimination_order: order,
    }
}

/// The `i`-th term of `0, 1, -1, 2, -2, ...`.
fn greedy_color(i: usize) -> i64 {
    let h = i.div_ceil(2) as i64;
    if i % 2 == 1 {
        h
    } else {
        -h
    }
}

/// Sequential coloring: each vertex in `order` gets the first admissible color
/// of `Z_col(G)` in the order `0, 1, -1, 2, -2, ...`. If an unlucky order
/// exhausts `Z_col(G)`, the remaining integers are tried in the same order, so
/// the result is always valid. Along [`ColoringNumber::coloring_order`] the
/// image stays inside `Z_col(G)`.
pub fn greedy_coloring(g: &SignedGraph, order: &[VertexId]) -> Result<SignedColoring> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    if order.len() != n
        || order
            .iter()
            .any(|&v| v >= n || std::mem::replace(&mut seen[v], true))
    {
        return Err(Error::BadOrdering);
    }
    let z = ColorSet::z(coloring_number(g).value);
    let preference = || {
        let inside = (0..)
            .map(greedy_color)
            .filter(|c| z.contains(*c))
            .take(z.len());
        inside.chain((0..).map(greedy_color).filter(|c| !z.contains(*c)))
    };
    let mut colors: Vec<Option<i64>> = vec![None; n];
    for &v in order {
        let forbidden: BTreeSet<i64> = g
            .incident(v)
            .iter()
            .filter_map(|&e| {
                let edge = &g.edges()[e];
                colors[edge.other(v)].map(|c| edge.sign.apply(c))
            })
            .collect();
        let c = preference()
            .find(|c| !forbidden.contains(c))
            .expect("a free color exists");
        colors[v] = Some(c);
    }
    Ok(SignedColoring(
        colors
            .into_iter()
            .map(|c| c.expect("all colored"))
            .collect(),
    ))
}

/// `χ±(G) = k` and every proper subgraph is `(k-1)`-colorable. Deleting a
/// single edge or a single vertex covers every proper subgraph.
pub fn is_k_critical(g: &SignedGraph, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::KZero);
    }
    if colorable_with_z(g, k - 1)?.is_some() || colorable_with_z(g, k)?.is_none() {
        return Ok(false);
    }
    for e in 0..g.edge_count() {
        if colorable_with_z(&g.delete_edge(e)?, k - 1)?.is_none() {
            return Ok(false);
        }
    }
    for v in 0..g.vertex_count() {
        if colorable_with_z(&g.delete_vertex(v)?.0, k - 1)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Ordinary chromatic number of the simple support of `g`.
pub fn support_chromatic_number(g: &SignedGraph) -> Result<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(0);
    }
    let support = g.support();
    for k in 1..=n {
        let engine =
            Engine::new(&support, (1..=k as i64).collect())?.with_symmetry(Symmetry::Values);
        if engine.solve(&vec![engine.full_domain(); n]).is_some() {
            return Ok(k);
        }
    }
    unreachable!("n colors always suffice")
}
