//! List colorings, uncolorable pairs and degree choosability.
//!
//! An uncolorable pair `(G, L)` is a connected graph with `|L(v)| ≥ d(v)`
//! everywhere and no `L`-coloring. The functions here reduce such pairs,
//! inspect their structure, and build them from the block structure of `G`.

pub mod oracle;

use std::fmt;
use std::ops::{ControlFlow, Index};

use serde::{Deserialize, Serialize};

use crate::coloring::{ColorSet, SignedColoring};
use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph, VertexId, VertexSet};
use crate::solver::Engine;
use crate::structure::{self, Balance, BrickClass};

pub use oracle::{
    all_f_assignments_colorable, degree_choosable_oracle, signed_choice_number, OracleOutcome,
};

/// A list of colors for every vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ListAssignment(Vec<ColorSet>);

impl ListAssignment {
    pub fn new(lists: Vec<ColorSet>) -> Self {
        ListAssignment(lists)
    }

    /// The same list on each of `n` vertices.
    pub fn constant(n: usize, list: &ColorSet) -> Self {
        ListAssignment(vec![list.clone(); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn lists(&self) -> &[ColorSet] {
        &self.0
    }

    pub fn list_mut(&mut self, v: VertexId) -> &mut ColorSet {
        &mut self.0[v]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.0.iter().map(ColorSet::len).collect()
    }

    /// The union of all lists.
    pub fn palette(&self) -> ColorSet {
        self.0.iter().flat_map(ColorSet::iter).collect()
    }

    pub fn is_f_assignment(&self, f: &[usize]) -> bool {
        self.sizes() == f
    }

    pub fn is_k_assignment(&self, k: usize) -> bool {
        self.0.iter().all(|l| l.len() == k)
    }

    /// `L/X`: negates the lists on `x`.
    pub fn switch(&self, x: &VertexSet) -> Self {
        ListAssignment(
            self.0
                .iter()
                .enumerate()
                .map(|(v, l)| {
                    if x.contains(v) {
                        l.negated()
                    } else {
                        l.clone()
                    }
                })
                .collect(),
        )
    }

    pub(crate) fn check_total(&self, g: &SignedGraph) -> Result<()> {
        if self.len() == g.vertex_count() {
            Ok(())
        } else {
            Err(Error::PartialAssignment {
                expected: g.vertex_count(),
                got: self.len(),
            })
        }
    }
}

impl Index<VertexId> for ListAssignment {
    type Output = ColorSet;

    fn index(&self, v: VertexId) -> &ColorSet {
        &self.0[v]
    }
}

impl FromIterator<ColorSet> for ListAssignment {
    fn from_iter<I: IntoIterator<Item = ColorSet>>(iter: I) -> Self {
        ListAssignment(iter.into_iter().collect())
    }
}

impl fmt::Display for ListAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, l) in self.0.iter().enumerate() {
            if v > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}:{l}")?;
        }
        Ok(())
    }
}

fn list_engine(g: &SignedGraph, l: &ListAssignment) -> Result<(Engine, Vec<u128>)> {
    let engine = Engine::new(g, l.palette().to_vec())?;
    let domains = l
        .lists()
        .iter()
        .map(|list| {
            list.iter().fold(0u128, |m, c| {
                m | 1 << engine.index_of(c).expect("color is in the palette")
            })
        })
        .collect();
    Ok((engine, domains))
}

/// An `L`-coloring of `g`, or `None` if there is none.
pub fn solve_list_coloring(g: &SignedGraph, l: &ListAssignment) -> Result<Option<SignedColoring>> {
    l.check_total(g)?;
    let (engine, domains) = list_engine(g, l)?;
    Ok(engine.solve_colors(&domains).map(SignedColoring::new))
}

/// Every `L`-coloring of `g`, in search order.
pub fn for_each_list_coloring<F>(g: &SignedGraph, l: &ListAssignment, mut visit: F) -> Result<()>
where
    F: FnMut(&SignedColoring) -> ControlFlow<()>,
{
    l.check_total(g)?;
    let (engine, domains) = list_engine(g, l)?;
    let _ = engine.for_each_solution(&domains, |a| {
        visit(&SignedColoring::new(
            a.iter().map(|&i| engine.color(i)).collect(),
        ))
    });
    Ok(())
}

/// True iff deleting `v` increases the number of components.
pub fn is_separating(g: &SignedGraph, v: VertexId) -> Result<bool> {
    let (h, _) = g.delete_vertex(v)?;
    Ok(h.components().len() > g.components().len())
}

/// Result of `(G, L)/(v, c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub graph: SignedGraph,
    pub lists: ListAssignment,
    /// Old vertex id to new vertex id (`None` for the removed vertex).
    pub vertex_map: Vec<Option<VertexId>>,
}

/// `(G, L)/(v, c)`: colors `v` with `c`, deletes it, and removes `c` from the
/// lists of positive neighbors and `-c` from the lists of negative neighbors.
pub fn reduce_pair(g: &SignedGraph, l: &ListAssignment, v: VertexId, c: i64) -> Result<Reduction> {
    l.check_total(g)?;
    g.check_vertex(v)?;
    if g.vertex_count() < 2 {
        return Err(Error::TooFewVertices);
    }
    if !l[v].contains(c) {
        return Err(Error::ColorNotInList {
            vertex: v,
            color: c,
        });
    }
    if is_separating(g, v)? {
        return Err(Error::SeparatingVertex(v));
    }
    let (graph, vertex_map) = g.delete_vertex(v)?;
    let mut lists: Vec<ColorSet> = Vec::with_capacity(graph.vertex_count());
    for u in (0..g.vertex_count()).filter(|&u| u != v) {
        let (pos, neg) = g.signed_multiplicity(v, u);
        let mut list = l[u].clone();
        if pos > 0 {
            list.remove(c);
        }
        if neg > 0 {
            list.remove(-c);
        }
        lists.push(list);
    }
    Ok(Reduction {
        graph,
        lists: ListAssignment(lists),
        vertex_map,
    })
}

/// A certified uncolorable pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UncolorablePair {
    graph: SignedGraph,
    lists: ListAssignment,
}

impl UncolorablePair {
    /// Checks connectivity and `|L(v)| ≥ d(v)`, then certifies with the solver
    /// that no `L`-coloring exists.
    pub fn new(graph: SignedGraph, lists: ListAssignment) -> Result<Self> {
        lists.check_total(&graph)?;
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        for v in graph.vertices() {
            let degree = graph.incident(v).len();
            if lists[v].len() < degree {
                return Err(Error::ListBelowDegree {
                    vertex: v,
                    size: lists[v].len(),
                    degree,
                });
            }
        }
        if solve_list_coloring(&graph, &lists)?.is_some() {
            return Err(Error::Colorable);
        }
        Ok(UncolorablePair { graph, lists })
    }

    pub fn graph(&self) -> &SignedGraph {
        &self.graph
    }

    pub fn lists(&self) -> &ListAssignment {
        &self.lists
    }
}

/// How the lists of one block relate to each other.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockLists {
    pub vertices: Vec<VertexId>,
    pub class: BrickClass,
    /// `L_B` on `vertices`, in the same order.
    pub lists: Vec<ColorSet>,
    /// `L_B(v) = σ(e) L_B(w)` on every edge of the block.
    pub edge_relation: bool,
    pub all_positive: bool,
    /// The common list, if all lists of the block coincide.
    pub constant: Option<ColorSet>,
    /// The common list exists and is symmetric.
    pub symmetric_constant: bool,
    /// Parts `X`, `Y` of a balanced block with `L_B = C` on `X` and `-C` on `Y`.
    pub balanced_parts: Option<(Vec<VertexId>, Vec<VertexId>, ColorSet)>,
    /// `(B, L_B)` is itself an uncolorable pair.
    pub uncolorable: bool,
}

impl BlockLists {
    /// Statement (c) for this block: the edge relation, then a constant list
    /// for positive blocks, or a symmetric constant list or `C`/`-C` on the
    /// parts of a balanced block otherwise.
    pub fn case_holds(&self) -> bool {
        self.edge_relation
            && if self.all_positive {
                self.constant.is_some()
            } else {
                self.symmetric_constant || self.balanced_parts.is_some()
            }
    }
}

/// The structural statements about an uncolorable pair, each evaluated
/// directly from the pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairStructureReport {
    /// (a) `|L(v)| = d(v)` everywhere.
    pub degree_lists: bool,
    /// (b) adjacent vertices are joined by one edge or one edge of each sign.
    pub edge_shape: bool,
    /// (c) list relations inside every block.
    pub list_relations: bool,
    /// (d) every block with a parallel pair is `r`-regular for an even `r ≥ 2`.
    pub even_regular: bool,
    /// (e) every block is a brick.
    pub blocks_are_bricks: bool,
    /// The per-block lists are uncolorable pairs whose union is `L`.
    pub block_lists_decompose: bool,
    pub blocks: Vec<BlockLists>,
}

impl PairStructureReport {
    pub fn all_hold(&self) -> bool {
        self.degree_lists
            && self.edge_shape
            && self.list_relations
            && self.even_regular
            && self.blocks_are_bricks
            && self.block_lists_decompose
    }

    /// Names of the statements that fail.
    pub fn failures(&self) -> Vec<&'static str> {
        let flags = [
            (self.degree_lists, "a"),
            (self.edge_shape, "b"),
            (self.list_relations, "c"),
            (self.even_regular, "d"),
            (self.blocks_are_bricks, "e"),
            (self.block_lists_decompose, "block lists"),
        ];
        flags
            .iter()
            .filter(|(ok, _)| !ok)
            .map(|&(_, name)| name)
            .collect()
    }
}

/// Vertices separated from `block` by the cut vertex `v`, together with `v`.
fn hanging_part(g: &SignedGraph, block: &[VertexId], v: VertexId) -> Vec<VertexId> {
    let others: Vec<VertexId> = g
        .vertices()
        .filter(|&u| u == v || block.binary_search(&u).is_err())
        .collect();
    let (h, _) = g.induced(&others).expect("vertices are valid");
    let at = others.binary_search(&v).expect("v is kept");
    let comp = h
        .components()
        .into_iter()
        .find(|c| c.contains(&at))
        .expect("v has a component");
    comp.into_iter().map(|i| others[i]).collect()
}

/// Per-block lists: at a cut vertex `v`, `L_B(v)` keeps the colors `c` for
/// which the part hanging at `v` away from `B` has an `L`-coloring with
/// `φ(v) = c`. Elsewhere `L_B(v) = L(v)`.
fn block_lists(
    g: &SignedGraph,
    l: &ListAssignment,
    vertices: &[VertexId],
    cut: &VertexSet,
) -> Result<Vec<ColorSet>> {
    let mut out = Vec::with_capacity(vertices.len());
    for &v in vertices {
        if !cut.contains(v) {
            out.push(l[v].clone());
            continue;
        }
        let part = hanging_part(g, vertices, v);
        let (h, _) = g.induced(&part)?;
        let at = part.binary_search(&v).expect("v is in its part");
        let mut kept = ColorSet::new();
        for c in l[v].iter() {
            let mut lists: Vec<ColorSet> = part.iter().map(|&u| l[u].clone()).collect();
            lists[at] = ColorSet::from([c]);
            if solve_list_coloring(&h, &ListAssignment(lists))?.is_some() {
                kept.insert(c);
            }
        }
        out.push(kept);
    }
    Ok(out)
}

fn analyze_block_lists(
    block: &SignedGraph,
    lists: Vec<ColorSet>,
    vertices: Vec<VertexId>,
) -> Result<BlockLists> {
    let class = structure::classify_brick(block)?;
    let edge_relation = block.edges().iter().all(|e| {
        lists[e.u]
            == match e.sign {
                Sign::Positive => lists[e.v].clone(),
                Sign::Negative => lists[e.v].negated(),
            }
    });
    let constant = lists
        .first()
        .filter(|first| lists.iter().all(|l| l == *first))
        .cloned();
    let symmetric_constant = constant.as_ref().is_some_and(ColorSet::is_symmetric);
    let balanced_parts = match structure::balance(block) {
        Balance::Parts { x, y } => {
            let c = x
                .iter()
                .next()
                .map(|v| lists[v].clone())
                .unwrap_or_default();
            let minus = c.negated();
            let fits = x.iter().all(|v| lists[v] == c) && y.iter().all(|v| lists[v] == minus);
            fits.then(|| {
                let map = |s: &VertexSet| s.iter().map(|i| vertices[i]).collect::<Vec<_>>();
                (map(&x), map(&y), c)
            })
        }
        Balance::UnbalancedCycle(_) => None,
    };
    let degrees_fit = block
        .vertices()
        .all(|v| lists[v].len() >= block.incident(v).len());
    let uncolorable =
        degrees_fit && solve_list_coloring(block, &ListAssignment(lists.clone()))?.is_none();
    Ok(BlockLists {
        vertices,
        class,
        lists,
        edge_relation,
        all_positive: block.is_positive(),
        constant,
        symmetric_constant,
        balanced_parts,
        uncolorable,
    })
}

/// Evaluates statements (a)-(e) for an uncolorable pair. Statement (c) is
/// checked per block on the lists `L_B` of the block decomposition.
pub fn check_pair_structure(p: &UncolorablePair) -> Result<PairStructureReport> {
    let g = p.graph();
    let l = p.lists();
    let degree_lists = g.vertices().all(|v| l[v].len() == g.incident(v).len());
    let edge_shape = g.vertices().all(|u| {
        g.neighbors(u)
            .into_iter()
            .all(|w| matches!(g.signed_multiplicity(u, w), (1, 0) | (0, 1) | (1, 1)))
    });

    let decomposition = structure::blocks(g);
    let mut blocks = Vec::with_capacity(decomposition.blocks.len());
    for b in &decomposition.blocks {
        let lists = block_lists(g, l, &b.vertices, &decomposition.cut_vertices)?;
        blocks.push(analyze_block_lists(&b.graph, lists, b.vertices.clone())?);
    }
    let list_relations = blocks.iter().all(BlockLists::case_holds);
    let even_regular = decomposition.blocks.iter().all(|b| {
        let bg = &b.graph;
        bg.max_multiplicity() < 2
            || (bg.is_regular() && bg.max_degree() >= 2 && bg.max_degree() % 2 == 0)
    });
    let blocks_are_bricks = blocks.iter().all(|b| b.class.is_brick());
    let unions_match = g.vertices().all(|v| {
        let union = decomposition
            .blocks_at(v)
            .iter()
            .fold(ColorSet::new(), |acc, &bi| {
                let b = &blocks[bi];
                let at = b.vertices.binary_search(&v).expect("v lies in the block");
                acc.union(&b.lists[at])
            });
        union == l[v]
    });
    let block_lists_decompose = unions_match && blocks.iter().all(|b| b.uncolorable);
    Ok(PairStructureReport {
        degree_lists,
        edge_shape,
        list_relations,
        even_regular,
        blocks_are_bricks,
        block_lists_decompose,
        blocks,
    })
}

/// Width of the band of absolute values a brick's bad lists occupy.
fn band_width(class: BrickClass) -> usize {
    let degree = class.degree().unwrap_or(0);
    if class.is_balanced_class() {
        degree
    } else {
        degree / 2
    }
}

/// Lists making the brick `b` uncolorable, built from the absolute values
/// `band_offset + 1, band_offset + 2, ...`. Balanced bricks get `C` on one
/// part and `-C` on the other; the other bricks get one symmetric list.
pub fn brick_bad_lists(b: &SignedGraph, band_offset: usize) -> Result<ListAssignment> {
    let class = structure::classify_brick(b)?;
    if let BrickClass::NotABrick(reason) = class {
        return Err(Error::NotABrick(reason));
    }
    let degree = class.degree().expect("bricks are regular");
    let base = band_offset as i64;
    if class.is_balanced_class() {
        let c: ColorSet = (1..=degree as i64).map(|i| base + i).collect();
        let (x, _) = match structure::balance(b) {
            Balance::Parts { x, y } => (x, y),
            Balance::UnbalancedCycle(_) => unreachable!("balanced brick class"),
        };
        Ok(b.vertices()
            .map(|v| {
                if x.contains(v) {
                    c.clone()
                } else {
                    c.negated()
                }
            })
            .collect())
    } else {
        if degree % 2 == 1 {
            return Err(Error::OddSymmetricDegree(degree));
        }
        let c: ColorSet = (1..=(degree / 2) as i64)
            .flat_map(|i| [base + i, -(base + i)])
            .collect();
        Ok(ListAssignment::constant(b.vertex_count(), &c))
    }
}

/// A degree-sized list assignment without an `L`-coloring for a connected
/// graph whose blocks are all bricks. Blocks get disjoint bands of absolute
/// values in block order and lists are united at cut vertices.
pub fn build_uncolorable_assignment(g: &SignedGraph) -> Result<ListAssignment> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let decomposition = structure::blocks(g);
    let mut lists = vec![ColorSet::new(); g.vertex_count()];
    let mut offset = 0;
    for b in &decomposition.blocks {
        let class = structure::classify_brick(&b.graph)?;
        let local = brick_bad_lists(&b.graph, offset)?;
        for (i, &v) in b.vertices.iter().enumerate() {
            lists[v] = lists[v].union(&local[i]);
        }
        offset += band_width(class);
    }
    Ok(ListAssignment(lists))
}

/// Verdict on degree choosability with its certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum DegreeChoosability {
    /// Some block is not a brick.
    Choosable {
        block: Vec<VertexId>,
        class: BrickClass,
    },
    /// Every block is a brick; `lists` is a degree-sized assignment and
    /// `verified` records that the solver found no coloring from it.
    NotChoosable {
        lists: ListAssignment,
        verified: bool,
    },
}

impl DegreeChoosability {
    pub fn is_choosable(&self) -> bool {
        matches!(self, DegreeChoosability::Choosable { .. })
    }
}

/// A connected graph fails to be degree choosable exactly when every block
/// is a brick.
pub fn is_degree_choosable(g: &SignedGraph) -> Result<DegreeChoosability> {
    let (all_bricks, classes) = structure::all_blocks_are_bricks(g)?;
    if !all_bricks {
        let decomposition = structure::blocks(g);
        let i = classes
            .iter()
            .position(|c| !c.is_brick())
            .expect("a non-brick block");
        return Ok(DegreeChoosability::Choosable {
            block: decomposition.blocks[i].vertices.clone(),
            class: classes[i],
        });
    }
    let lists = build_uncolorable_assignment(g)?;
    let verified = solve_list_coloring(g, &lists)?.is_none();
    Ok(DegreeChoosability::NotChoosable { lists, verified })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::{Negative as N, Positive as P};

    fn cs<const K: usize>(c: [i64; K]) -> ColorSet {
        ColorSet::from(c)
    }

    fn la(lists: &[&[i64]]) -> ListAssignment {
        lists.iter().map(|l| l.iter().copied().collect()).collect()
    }

    #[test]
    fn list_solver_examples() {
        let k2 = SignedGraph::complete(2, P);
        assert_eq!(solve_list_coloring(&k2, &la(&[&[1], &[1]])).unwrap(), None);
        let k2n = SignedGraph::complete(2, N);
        assert_eq!(
            solve_list_coloring(&k2n, &la(&[&[1], &[1]])).unwrap(),
            Some(SignedColoring::new(vec![1, 1]))
        );
        let k3 = SignedGraph::complete(3, P);
        assert_eq!(
            solve_list_coloring(&k3, &ListAssignment::constant(3, &cs([1, 2]))).unwrap(),
            None
        );
        assert_eq!(
            solve_list_coloring(&k3, &la(&[&[1]])),
            Err(Error::PartialAssignment {
                expected: 3,
                got: 1
            })
        );
    }

    #[test]
    fn reduction_examples() {
        let k3 = SignedGraph::complete(3, P);
        let r = reduce_pair(&k3, &ListAssignment::constant(3, &cs([1, 2])), 0, 1).unwrap();
        assert_eq!(r.graph, SignedGraph::complete(2, P));
        assert_eq!(r.lists, ListAssignment::constant(2, &cs([2])));

        let d2 = SignedGraph::cycle(&[P, N]);
        let r = reduce_pair(&d2, &ListAssignment::constant(2, &cs([1, -1])), 0, 1).unwrap();
        assert_eq!(r.graph, SignedGraph::edgeless(1));
        assert_eq!(r.lists, ListAssignment::constant(1, &ColorSet::new()));

        let tri = SignedGraph::new(3, [(0, 1, P), (1, 2, P), (0, 2, N)]).unwrap();
        let l = la(&[&[1, 2], &[1, 2], &[-1, -2]]);
        let r = reduce_pair(&tri, &l, 1, 1).unwrap();
        assert_eq!(r.graph, SignedGraph::new(2, [(0, 1, N)]).unwrap());
        assert_eq!(r.lists, la(&[&[2], &[-1, -2]]));
        assert_eq!(r.vertex_map, vec![Some(0), None, Some(1)]);
    }

    #[test]
    fn reduction_errors() {
        let path = SignedGraph::path(&[P, P]);
        let l = la(&[&[1], &[1, 2], &[2]]);
        assert_eq!(
            reduce_pair(&path, &l, 1, 1),
            Err(Error::SeparatingVertex(1))
        );
        assert_eq!(
            reduce_pair(&path, &l, 0, 5),
            Err(Error::ColorNotInList {
                vertex: 0,
                color: 5
            })
        );
        assert_eq!(
            reduce_pair(&SignedGraph::edgeless(1), &la(&[&[1]]), 0, 1),
            Err(Error::TooFewVertices)
        );
    }

    #[test]
    fn uncolorable_pair_certification() {
        let k2 = SignedGraph::complete(2, P);
        assert_eq!(
            UncolorablePair::new(k2.clone(), la(&[&[1], &[2]])),
            Err(Error::Colorable)
        );
        assert_eq!(
            UncolorablePair::new(k2.clone(), la(&[&[], &[1]])),
            Err(Error::ListBelowDegree {
                vertex: 0,
                size: 0,
                degree: 1
            })
        );
        assert!(UncolorablePair::new(k2, la(&[&[1], &[1]])).is_ok());
    }

    #[test]
    fn pair_structure_examples() {
        let k3 = SignedGraph::complete(3, P);
        let p = UncolorablePair::new(k3, ListAssignment::constant(3, &cs([1, 2]))).unwrap();
        let r = check_pair_structure(&p).unwrap();
        assert!(r.all_hold(), "{:?}", r.failures());
        assert_eq!(r.blocks[0].constant, Some(cs([1, 2])));
        assert!(r.blocks[0].all_positive);

        let c4 = SignedGraph::cycle(&[P, P, P, N]);
        let p = UncolorablePair::new(c4, ListAssignment::constant(4, &cs([1, -1]))).unwrap();
        let r = check_pair_structure(&p).unwrap();
        assert!(r.all_hold());
        assert!(r.blocks[0].symmetric_constant);
        assert!(!r.blocks[0].all_positive);

        let d3 = SignedGraph::double(&SignedGraph::complete(3, P)).unwrap();
        let p = UncolorablePair::new(d3, ListAssignment::constant(3, &cs([1, -1, 2, -2]))).unwrap();
        let r = check_pair_structure(&p).unwrap();
        assert!(r.all_hold());
        assert!(r.even_regular);
    }

    #[test]
    fn brick_lists_examples() {
        assert_eq!(
            brick_bad_lists(&SignedGraph::complete(3, P), 0).unwrap(),
            ListAssignment::constant(3, &cs([1, 2]))
        );
        assert_eq!(
            brick_bad_lists(&SignedGraph::cycle(&[P, P, P, N]), 0).unwrap(),
            ListAssignment::constant(4, &cs([1, -1]))
        );
        assert_eq!(
            brick_bad_lists(&SignedGraph::cycle(&[P, N]), 3).unwrap(),
            ListAssignment::constant(2, &cs([4, -4]))
        );
        assert_eq!(
            brick_bad_lists(&SignedGraph::complete(2, N), 0).unwrap(),
            la(&[&[1], &[-1]])
        );
        assert_eq!(
            brick_bad_lists(&SignedGraph::edgeless(1), 0).unwrap(),
            la(&[&[]])
        );
        assert!(matches!(
            brick_bad_lists(&SignedGraph::cycle(&[P; 4]), 0),
            Err(Error::NotABrick(_))
        ));
    }

    #[test]
    fn constructed_assignments() {
        let path = SignedGraph::path(&[P, P]);
        let l = build_uncolorable_assignment(&path).unwrap();
        assert_eq!(l, la(&[&[1], &[1, 2], &[2]]));
        assert_eq!(solve_list_coloring(&path, &l).unwrap(), None);

        assert_eq!(
            build_uncolorable_assignment(&SignedGraph::complete(3, P)).unwrap(),
            ListAssignment::constant(3, &cs([1, 2]))
        );

        // two unbalanced 4-cycles sharing vertex 0
        let g = SignedGraph::new(
            7,
            [
                (0, 1, P),
                (1, 2, P),
                (2, 3, P),
                (3, 0, N),
                (0, 4, P),
                (4, 5, P),
                (5, 6, P),
                (6, 0, N),
            ],
        )
        .unwrap();
        let l = build_uncolorable_assignment(&g).unwrap();
        assert_eq!(l[0], cs([1, -1, 2, -2]));
        assert_eq!(l[1], cs([1, -1]));
        assert_eq!(l[5], cs([2, -2]));
        assert_eq!(solve_list_coloring(&g, &l).unwrap(), None);
        let r = check_pair_structure(&UncolorablePair::new(g, l).unwrap()).unwrap();
        assert!(r.all_hold(), "{:?}", r.failures());
    }

    #[test]
    fn degree_choosability_examples() {
        match is_degree_choosable(&SignedGraph::complete(3, P)).unwrap() {
            DegreeChoosability::NotChoosable { lists, verified } => {
                assert!(verified);
                assert_eq!(lists, ListAssignment::constant(3, &cs([1, 2])));
            }
            other => panic!("{other:?}"),
        }
        assert!(is_degree_choosable(&SignedGraph::cycle(&[P; 4]))
            .unwrap()
            .is_choosable());
        let d4 = SignedGraph::double(&SignedGraph::cycle(&[P; 4])).unwrap();
        assert!(is_degree_choosable(&d4).unwrap().is_choosable());
        assert_eq!(
            is_degree_choosable(&SignedGraph::edgeless(2)),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn switching_lists_preserves_colorability() {
        let g =
            SignedGraph::new(4, [(0, 1, P), (1, 2, N), (2, 3, P), (3, 0, P), (0, 2, N)]).unwrap();
        let l = la(&[&[1, 2], &[1, -3], &[2, 3], &[-1, 3]]);
        let x = VertexSet::from_vertices(4, &[1, 2]).unwrap();
        let phi = solve_list_coloring(&g, &l).unwrap().unwrap();
        let gx = g.switch(&x).unwrap();
        let lx = l.switch(&x);
        let psi = phi.switch(&x);
        assert!(crate::coloring::is_valid_coloring(&gx, &psi).unwrap());
        assert!(psi
            .colors()
            .iter()
            .enumerate()
            .all(|(v, &c)| lx[v].contains(c)));
    }
}
