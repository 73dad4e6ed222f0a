//! Backtracking engine shared by the coloring and list-coloring front ends.
//!
//! Colors are indexed into a palette of at most 128 values so that a domain
//! is a single `u128`. Variables are chosen by smallest remaining domain
//! (ties: larger degree, then smaller id) and every assignment is propagated
//! to the neighbors before descending.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};

const NONE: usize = usize::MAX;

/// Value symmetry the caller vouches for. Only valid when every initial
/// domain is the full palette.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Symmetry {
    None,
    /// The palette is `C = -C`; pairs `{c, -c}` (c > 0) may be permuted and
    /// flipped freely, 0 is fixed.
    Pairs,
    /// All colors are interchangeable (only valid for all-positive graphs).
    Values,
}

pub(crate) struct Engine {
    n: usize,
    /// neighbor, bit 0: a positive edge, bit 1: a negative edge
    adj: Vec<Vec<(usize, u8)>>,
    degree: Vec<usize>,
    colors: Vec<i64>,
    neg_mask: Vec<u128>,
    symmetry: Symmetry,
    /// Pairs mode: bit of 0 if present, then positive and negative member
    /// bits of each pair in order of absolute value.
    zero_bit: u128,
    pair_pos: Vec<u128>,
    pair_of: Vec<usize>,
}

impl Engine {
    /// `colors` must be sorted and distinct.
    pub(crate) fn new(g: &SignedGraph, colors: Vec<i64>) -> Result<Self> {
        if colors.len() > 128 {
            return Err(Error::PaletteTooLarge(colors.len()));
        }
        let n = g.vertex_count();
        let mut slot = vec![NONE; n];
        let mut adj: Vec<Vec<(usize, u8)>> = vec![Vec::new(); n];
        for v in 0..n {
            for &e in g.incident(v) {
                let edge = &g.edges()[e];
                let w = edge.other(v);
                let bit = if edge.sign == Sign::Positive { 1 } else { 2 };
                if slot[w] == NONE {
                    slot[w] = adj[v].len();
                    adj[v].push((w, bit));
                } else {
                    adj[v][slot[w]].1 |= bit;
                }
            }
            for &(w, _) in &adj[v] {
                slot[w] = NONE;
            }
        }
        Engine {
            n,
            adj,
            degree: g.degrees(),
            colors: Vec::new(),
            neg_mask: Vec::new(),
            symmetry: Symmetry::None,
            zero_bit: 0,
            pair_pos: Vec::new(),
            pair_of: Vec::new(),
        }
        .with_palette(colors)
    }

    /// The same graph over another palette, without symmetry.
    pub(crate) fn with_palette(mut self, colors: Vec<i64>) -> Result<Self> {
        if colors.len() > 128 {
            return Err(Error::PaletteTooLarge(colors.len()));
        }
        self.neg_mask = colors
            .iter()
            .map(|c| colors.binary_search(&-c).map_or(0, |j| 1u128 << j))
            .collect();
        self.colors = colors;
        self.symmetry = Symmetry::None;
        self.zero_bit = 0;
        self.pair_pos.clear();
        self.pair_of.clear();
        Ok(self)
    }

    pub(crate) fn with_symmetry(mut self, symmetry: Symmetry) -> Self {
        if symmetry == Symmetry::Pairs {
            let k = self.colors.len();
            self.pair_of = vec![NONE; k];
            for (i, &c) in self.colors.iter().enumerate() {
                if c == 0 {
                    self.zero_bit = 1 << i;
                } else if c > 0 {
                    // positive members come in ascending order, so pairs are ranked by |c|
                    let j = self
                        .colors
                        .binary_search(&-c)
                        .expect("palette is symmetric");
                    self.pair_of[i] = self.pair_pos.len();
                    self.pair_of[j] = self.pair_pos.len();
                    self.pair_pos.push(1 << i);
                }
            }
        }
        self.symmetry = symmetry;
        self
    }

    pub(crate) fn full_domain(&self) -> u128 {
        if self.colors.len() == 128 {
            u128::MAX
        } else {
            (1u128 << self.colors.len()) - 1
        }
    }

    pub(crate) fn color(&self, index: usize) -> i64 {
        self.colors[index]
    }

    pub(crate) fn index_of(&self, color: i64) -> Option<usize> {
        self.colors.binary_search(&color).ok()
    }

    fn allowed(&self, opened: usize) -> u128 {
        match self.symmetry {
            Symmetry::None => u128::MAX,
            Symmetry::Values => {
                if opened + 1 >= 128 {
                    u128::MAX
                } else {
                    (1u128 << (opened + 1)) - 1
                }
            }
            Symmetry::Pairs => {
                let mut mask = self.zero_bit;
                for (p, &pos) in self.pair_pos.iter().enumerate().take(opened + 1) {
                    mask |= pos;
                    if p < opened {
                        mask |= self.neg_mask[pos.trailing_zeros() as usize];
                    }
                }
                mask
            }
        }
    }

    fn opens(&self, c: usize, opened: usize) -> usize {
        match self.symmetry {
            Symmetry::None => opened,
            Symmetry::Values => opened.max(c + 1),
            Symmetry::Pairs => {
                let p = self.pair_of[c];
                if p != NONE && p == opened {
                    opened + 1
                } else {
                    opened
                }
            }
        }
    }

    /// First solution as palette indices.
    pub(crate) fn solve(&self, domains: &[u128]) -> Option<Vec<usize>> {
        let mut found = None;
        let _ = self.for_each_solution(domains, |a| {
            found = Some(a.to_vec());
            ControlFlow::Break(())
        });
        found
    }

    pub(crate) fn solve_colors(&self, domains: &[u128]) -> Option<Vec<i64>> {
        self.solve(domains)
            .map(|a| a.into_iter().map(|i| self.colors[i]).collect())
    }

    /// Visits every solution (up to the configured symmetry) as palette indices.
    pub(crate) fn for_each_solution<F>(&self, domains: &[u128], mut visit: F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        assert_eq!(domains.len(), self.n);
        if domains.contains(&0) {
            return ControlFlow::Continue(());
        }
        let mut stack = vec![0u128; self.n * (self.n + 1)];
        stack[..self.n].copy_from_slice(domains);
        let mut assign = vec![NONE; self.n];
        self.search(&mut stack, &mut assign, 0, 0, &mut visit)
    }

    fn search(
        &self,
        stack: &mut [u128],
        assign: &mut [usize],
        level: usize,
        opened: usize,
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let n = self.n;
        if level == n {
            return visit(assign);
        }
        let cur = level * n;
        let next = cur + n;

        let mut best = NONE;
        let mut best_size = u32::MAX;
        for v in 0..n {
            if assign[v] != NONE {
                continue;
            }
            let size = stack[cur + v].count_ones();
            if size < best_size || (size == best_size && self.degree[v] > self.degree[best]) {
                best = v;
                best_size = size;
            }
        }
        let mut cand = stack[cur + best] & self.allowed(opened);
        while cand != 0 {
            let c = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            stack.copy_within(cur..next, next);
            stack[next + best] = 1 << c;
            let mut ok = true;
            for &(w, mask) in &self.adj[best] {
                if assign[w] != NONE {
                    continue;
                }
                let mut removal = 0;
                if mask & 1 != 0 {
                    removal |= 1 << c;
                }
                if mask & 2 != 0 {
                    removal |= self.neg_mask[c];
                }
                let d = &mut stack[next + w];
                *d &= !removal;
                if *d == 0 {
                    ok = false;
                    break;
                }
            }
            if ok {
                assign[best] = c;
                let flow = self.search(stack, assign, level + 1, self.opens(c, opened), visit);
                assign[best] = NONE;
                flow?;
            }
        }
        ControlFlow::Continue(())
    }
}
