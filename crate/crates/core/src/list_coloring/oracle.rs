//! Brute-force choosability over all list assignments of given sizes.
//!
//! Colors only interact through equality and negation, so an assignment with
//! total list size `S` is equivalent to one drawn from `Z_(2S+1)`, and any map
//! `ρ` with `ρ(-c) = -ρ(c)` preserves colorability. Lists are therefore
//! enumerated vertex by vertex, where a list may reuse colors already seen and
//! otherwise opens the next unused pairs `{±j}` in a fixed order: first the
//! pairs it takes with both signs, then the pairs it takes with one sign only
//! (relabeled to `+j`).
//!
//! The last vertex is never enumerated. A bad list for it exists iff the
//! other vertices have no coloring, or every coloring `ψ` of them forbids the
//! same `f(last)` colors at the last vertex.

use std::ops::ControlFlow;

use crate::coloring::ColorSet;
use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph, VertexId};
use crate::list_coloring::ListAssignment;
use crate::solver::Engine;

/// Default bound on the total list size the oracle accepts.
pub const DEFAULT_BUDGET: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleOutcome {
    pub all_colorable: bool,
    /// An assignment without a coloring, when one exists.
    pub counterexample: Option<ListAssignment>,
    /// Canonical assignments of all vertices but the last that were examined.
    pub assignments: u64,
}

struct Search {
    n: usize,
    span: i64,
    sizes: Vec<usize>,
    /// `engines[i]` colors the first `i + 1` vertices of the reordered graph.
    engines: Vec<Engine>,
    /// The last vertex's neighbors among the others, with the edge sign.
    last_edges: Vec<(usize, Sign)>,
    empty: Engine,
    assignments: u64,
    bad: Option<Vec<u128>>,
}

impl Search {
    fn bit(&self, c: i64) -> u128 {
        1 << (c + self.span)
    }

    fn color(&self, index: u32) -> i64 {
        index as i64 - self.span
    }

    fn run(&mut self, lists: &mut Vec<u128>, opened: i64) -> ControlFlow<()> {
        let i = lists.len();
        if i + 1 == self.n {
            return self.finish(lists);
        }
        let size = self.sizes[i];
        let old: Vec<i64> = (-opened..=opened).collect();
        for both in 0..=size / 2 {
            for single in 0..=size - 2 * both {
                let reuse = size - 2 * both - single;
                if reuse > old.len() {
                    continue;
                }
                let mut fresh = 0u128;
                for j in 1..=both as i64 {
                    fresh |= self.bit(opened + j) | self.bit(-(opened + j));
                }
                for j in 1..=single as i64 {
                    fresh |= self.bit(opened + both as i64 + j);
                }
                let next_opened = opened + (both + single) as i64;
                let flow = for_each_subset(&old, reuse, &mut |subset| {
                    let mask = subset.iter().fold(fresh, |m, &c| m | self.bit(c));
                    lists.push(mask);
                    let flow = if self.engines[i].solve(lists).is_none() {
                        self.bad = Some(lists.clone());
                        ControlFlow::Break(())
                    } else {
                        self.run(lists, next_opened)
                    };
                    lists.pop();
                    flow
                });
                flow?;
            }
        }
        ControlFlow::Continue(())
    }

    fn finish(&mut self, lists: &[u128]) -> ControlFlow<()> {
        self.assignments += 1;
        let need = self.sizes[self.n - 1] as u32;
        let engine = if self.n == 1 {
            &self.empty
        } else {
            &self.engines[self.n - 2]
        };
        let mut common = u128::MAX;
        let _ = engine.for_each_solution(lists, |psi| {
            let forbidden = self.last_edges.iter().fold(0u128, |m, &(w, sign)| {
                m | self.bit(sign.apply(self.color(psi[w] as u32)))
            });
            common &= forbidden;
            if common.count_ones() < need {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        if common.count_ones() >= need {
            let mut last = 0u128;
            let mut rest = common;
            for _ in 0..need {
                let low = rest & rest.wrapping_neg();
                last |= low;
                rest ^= low;
            }
            let mut bad = lists.to_vec();
            bad.push(last);
            self.bad = Some(bad);
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    }
}

fn for_each_subset(
    items: &[i64],
    k: usize,
    visit: &mut dyn FnMut(&[i64]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    fn go(
        items: &[i64],
        k: usize,
        start: usize,
        chosen: &mut Vec<i64>,
        visit: &mut dyn FnMut(&[i64]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if chosen.len() == k {
            return visit(chosen);
        }
        for i in start..=items.len() - (k - chosen.len()) {
            chosen.push(items[i]);
            let flow = go(items, k, i + 1, chosen, visit);
            chosen.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }
    go(items, k, 0, &mut Vec::with_capacity(k), visit)
}

/// Vertex order for the search: breadth first over all but the last vertex,
/// which has the largest `f` (ties: larger degree, then larger id).
fn search_order(g: &SignedGraph, f: &[usize]) -> Vec<VertexId> {
    let n = g.vertex_count();
    let last = (0..n)
        .max_by_key(|&v| (f[v], g.incident(v).len(), v))
        .expect("nonempty graph");
    let mut seen = vec![false; n];
    seen[last] = true;
    let mut order = Vec::with_capacity(n);
    let mut starts: Vec<VertexId> = (0..n).filter(|&v| v != last).collect();
    starts.sort_by_key(|&v| std::cmp::Reverse(g.incident(v).len()));
    for s in starts {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut head = order.len();
        order.push(s);
        while head < order.len() {
            let x = order[head];
            head += 1;
            for y in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    order.push(y);
                }
            }
        }
    }
    order.push(last);
    order
}

/// Decides whether `g` has an `L`-coloring for every assignment with
/// `|L(v)| = f(v)`, returning a bad assignment when one exists.
pub fn all_f_assignments_colorable(g: &SignedGraph, f: &[usize]) -> Result<OracleOutcome> {
    let n = g.vertex_count();
    if f.len() != n {
        return Err(Error::PartialAssignment {
            expected: n,
            got: f.len(),
        });
    }
    if n == 0 {
        return Ok(OracleOutcome {
            all_colorable: true,
            counterexample: None,
            assignments: 0,
        });
    }
    let total: usize = f.iter().sum();
    let palette_size = 2 * total + 1;
    if palette_size > 128 {
        return Err(Error::PaletteTooLarge(palette_size));
    }
    let span = total as i64;
    let palette: Vec<i64> = (-span..=span).collect();

    let order = search_order(g, f);
    let (h, _) = g.induced(&order)?;
    let mut engines = Vec::with_capacity(n);
    for i in 0..n {
        let prefix: Vec<VertexId> = (0..=i).collect();
        engines.push(Engine::new(&h.induced(&prefix)?.0, palette.clone())?);
    }
    let last = n - 1;
    let last_edges = h
        .incident(last)
        .iter()
        .map(|&e| (h.edges()[e].other(last), h.edges()[e].sign))
        .collect();
    let mut search = Search {
        n,
        span,
        sizes: order.iter().map(|&v| f[v]).collect(),
        engines,
        last_edges,
        empty: Engine::new(&SignedGraph::edgeless(0), palette)?,
        assignments: 0,
        bad: None,
    };
    let _ = search.run(&mut Vec::with_capacity(n), 0);

    let counterexample = search.bad.take().map(|masks| {
        let mut lists = vec![ColorSet::new(); n];
        let mut fresh = span;
        for (pos, &v) in order.iter().enumerate() {
            lists[v] = match masks.get(pos) {
                Some(&mask) => (0..128)
                    .filter(|b| mask >> b & 1 == 1)
                    .map(|b| search.color(b))
                    .collect(),
                // unconstrained remainder after an uncolorable prefix
                None => (0..f[v])
                    .map(|_| {
                        fresh += 1;
                        fresh
                    })
                    .collect(),
            };
        }
        ListAssignment::new(lists)
    });
    Ok(OracleOutcome {
        all_colorable: counterexample.is_none(),
        counterexample,
        assignments: search.assignments,
    })
}

fn check_budget(needed: usize, budget: usize) -> Result<()> {
    if needed > budget {
        Err(Error::BudgetExceeded { needed, budget })
    } else {
        Ok(())
    }
}

/// The oracle run behind [`degree_choosable_oracle`], with its certificate.
pub fn degree_oracle_outcome(g: &SignedGraph, budget: usize) -> Result<OracleOutcome> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let degrees = g.degrees();
    check_budget(degrees.iter().sum(), budget)?;
    all_f_assignments_colorable(g, &degrees)
}

/// Brute-force degree choosability for a connected graph whose total degree
/// is at most `budget`.
pub fn degree_choosable_oracle(g: &SignedGraph, budget: usize) -> Result<bool> {
    Ok(degree_oracle_outcome(g, budget)?.all_colorable)
}

/// `χ±_ℓ(G)`, ascending from `k = 1`; each tested `k` needs `|V|·k ≤ budget`.
pub fn signed_choice_number(g: &SignedGraph, budget: usize) -> Result<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(0);
    }
    for k in 1.. {
        check_budget(n * k, budget)?;
        if all_f_assignments_colorable(g, &vec![k; n])?.all_colorable {
            return Ok(k);
        }
    }
    unreachable!()
}
