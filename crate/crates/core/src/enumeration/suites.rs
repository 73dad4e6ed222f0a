//! Exhaustive verification suites over enumerated graphs.
//!
//! Each suite is a predicate evaluated on every graph of an [`EnumSpec`].
//! Several suites can share one enumeration pass through [`run_suites`]. A
//! failing graph becomes a [`Certificate`] whose text is a graph file with
//! the violated statement as a comment; [`replay`] re-runs the predicate on it.

use std::collections::HashMap;
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use super::{for_each_graph, EnumSpec, Equivalence};
use crate::bounds::{edge_bound_check, gallai_class_member, gallai_deficiency, Rational};
use crate::coloring::{
    coloring_number, is_k_critical, signed_chromatic_number, solve_with_colorset,
    support_chromatic_number, ColorSet,
};
use crate::error::{Error, Result};
use crate::graph::SignedGraph;
use crate::io::{parse_graph, write_document, write_lists, GraphDocument};
use crate::list_coloring::oracle::{
    all_f_assignments_colorable, degree_choosable_oracle, DEFAULT_BUDGET,
};
use crate::list_coloring::{
    build_uncolorable_assignment, check_pair_structure, is_degree_choosable, solve_list_coloring,
    UncolorablePair,
};
use crate::structure::{self, BrickClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SuiteId {
    S1,
    S2,
    S3,
    S4,
    S5,
    S6,
    S7,
    S8,
    S9,
    S10,
}

impl SuiteId {
    pub const ALL: [SuiteId; 10] = [
        SuiteId::S1,
        SuiteId::S2,
        SuiteId::S3,
        SuiteId::S4,
        SuiteId::S5,
        SuiteId::S6,
        SuiteId::S7,
        SuiteId::S8,
        SuiteId::S9,
        SuiteId::S10,
    ];

    /// The statement the suite checks.
    pub fn statement(self) -> &'static str {
        match self {
            SuiteId::S1 => "chi_pm <= col <= max degree + 1, and chi_pm <= choice number <= col within budget",
            SuiteId::S2 => "chi_pm <= 2 iff antibalanced",
            SuiteId::S3 => "a connected non-brick has chi_pm <= max degree and is colorable from every list of max-degree size",
            SuiteId::S4 => "degree choosable iff some block is not a brick",
            SuiteId::S5 => "constructed degree-sized lists are uncolorable and have the pair structure",
            SuiteId::S6 => "3-critical iff a balanced odd cycle or an unbalanced even cycle",
            SuiteId::S7 => "m(T) >= 2 on the Gallai class",
            SuiteId::S8 => "simple k-critical graphs other than balanced K_k have 2|E| >= (k - 1 + (k - 3)/(k^2 - 3))|V|",
            SuiteId::S9 => "chi_pm(2H) = 2 chi(H) - 1 for simple H",
            SuiteId::S10 => "chi_pm <= 2 chi(underlying) - 1",
        }
    }

    /// The enumeration the suite runs over by default.
    pub fn default_spec(self) -> EnumSpec {
        match self {
            SuiteId::S1 | SuiteId::S5 | SuiteId::S6 | SuiteId::S10 => EnumSpec::new(6, 2),
            SuiteId::S2 | SuiteId::S3 => EnumSpec::new(5, 2),
            SuiteId::S4 => EnumSpec::new(4, 6).max_edges(6),
            SuiteId::S7 => EnumSpec::new(6, 1).degree_cap(4),
            SuiteId::S8 => EnumSpec::new(7, 1),
            SuiteId::S9 => EnumSpec::new(6, 1).modulo(Equivalence::Isomorphism),
        }
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for SuiteId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SuiteId::ALL
            .into_iter()
            .find(|id| id.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// Knobs beyond the enumeration itself.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    /// Total list size the brute-force oracle may handle.
    pub budget: usize,
    /// Largest order on which the list version of S3 runs.
    pub list_max_n: usize,
    /// Values of `k` for S7 and S8.
    pub gallai_ks: Vec<usize>,
    pub critical_ks: Vec<usize>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            budget: DEFAULT_BUDGET,
            list_max_n: 3,
            gallai_ks: vec![4, 5],
            critical_ks: vec![4, 5],
        }
    }
}

/// A failing instance, replayable from `text`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub graph: SignedGraph,
    pub violation: String,
    /// Extra data such as list assignments, in list-file format.
    pub auxiliary: Option<String>,
    /// Graph file with the violation (and auxiliary lines) as comments.
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Status {
    Pass,
    Counterexample(Certificate),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: SuiteId,
    pub statement: String,
    pub spec: EnumSpec,
    /// Graphs enumerated.
    pub instances: u64,
    /// Graphs the statement applied to non-vacuously.
    pub checked: u64,
    pub status: Status,
    /// Deterministic observations, such as the census of S6.
    pub findings: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Human-readable rendering; wall time only when `timing` is set.
    pub fn to_text(&self, timing: bool) -> String {
        let s = &self.spec;
        let mut out = format!("suite {}: {}\n", self.suite, self.statement);
        out.push_str(&format!(
            "graphs: n {}..={}, multiplicity <= {}, {}, modulo {}",
            s.min_vertices,
            s.max_vertices,
            s.max_multiplicity,
            if s.connected_only { "connected" } else { "all" },
            match s.modulo {
                Equivalence::Isomorphism => "isomorphism",
                Equivalence::SwitchingIsomorphism => "switching and isomorphism",
            }
        ));
        if let Some(c) = s.degree_cap {
            out.push_str(&format!(", max degree <= {c}"));
        }
        if let Some(m) = s.max_edges {
            out.push_str(&format!(", edges <= {m}"));
        }
        out.push('\n');
        out.push_str(&format!(
            "instances: {}\nchecked: {}\n",
            self.instances, self.checked
        ));
        for f in &self.findings {
            out.push_str(&format!("  {f}\n"));
        }
        match &self.status {
            Status::Pass => out.push_str("result: pass\n"),
            Status::Counterexample(c) => {
                out.push_str(&format!(
                    "result: counterexample\nviolation: {}\n",
                    c.violation
                ));
                out.push_str(&c.text);
            }
        }
        if timing {
            out.push_str(&format!("time: {:.3}s\n", self.elapsed.as_secs_f64()));
        }
        out
    }
}

/// Chromatic numbers of supports seen so far, keyed by adjacency bits.
type SupportCache = HashMap<(usize, u64), usize>;

/// Lazily computed invariants shared by the suites of one pass.
struct Facts<'a> {
    g: &'a SignedGraph,
    support_cache: &'a mut SupportCache,
    chi: Option<usize>,
    col: Option<usize>,
    support_chi: Option<usize>,
    bricks: Option<(bool, Vec<BrickClass>)>,
}

impl<'a> Facts<'a> {
    fn new(g: &'a SignedGraph, support_cache: &'a mut SupportCache) -> Self {
        Facts {
            g,
            support_cache,
            chi: None,
            col: None,
            support_chi: None,
            bricks: None,
        }
    }

    fn chi(&mut self) -> Result<usize> {
        if self.chi.is_none() {
            self.chi = Some(signed_chromatic_number(self.g)?);
        }
        Ok(self.chi.unwrap())
    }

    fn col(&mut self) -> usize {
        *self
            .col
            .get_or_insert_with(|| coloring_number(self.g).value)
    }

    fn support_chi(&mut self) -> Result<usize> {
        if self.support_chi.is_none() {
            let n = self.g.vertex_count();
            let value = if n <= 11 {
                let mut bits = 0u64;
                for e in self.g.edges() {
                    let (a, b) = (e.u.min(e.v), e.u.max(e.v));
                    bits |= 1 << (a * n + b - (a + 1) * (a + 2) / 2);
                }
                match self.support_cache.get(&(n, bits)) {
                    Some(&chi) => chi,
                    None => {
                        let chi = support_chromatic_number(self.g)?;
                        self.support_cache.insert((n, bits), chi);
                        chi
                    }
                }
            } else {
                support_chromatic_number(self.g)?
            };
            self.support_chi = Some(value);
        }
        Ok(self.support_chi.unwrap())
    }

    fn all_bricks(&mut self) -> Result<bool> {
        // a block with two equally signed parallel edges is never a brick
        if self.bricks.is_none() && has_equal_parallel_pair(self.g) {
            return Ok(false);
        }
        if self.bricks.is_none() {
            self.bricks = Some(structure::all_blocks_are_bricks(self.g)?);
        }
        Ok(self.bricks.as_ref().unwrap().0)
    }
}

fn has_equal_parallel_pair(g: &SignedGraph) -> bool {
    let mut keys: Vec<(usize, usize, bool)> = g
        .edges()
        .iter()
        .map(|e| (e.u.min(e.v), e.u.max(e.v), e.sign.is_positive()))
        .collect();
    keys.sort_unstable();
    keys.windows(2).any(|w| w[0] == w[1])
}

struct Violation {
    statement: String,
    auxiliary: Option<String>,
}

impl Violation {
    fn new(statement: impl Into<String>) -> Self {
        Violation {
            statement: statement.into(),
            auxiliary: None,
        }
    }

    fn with_lists(statement: impl Into<String>, lists: String) -> Self {
        Violation {
            statement: statement.into(),
            auxiliary: Some(lists),
        }
    }
}

/// Per-suite counters that become findings.
#[derive(Default)]
struct Tally {
    checked: u64,
    within_budget: u64,
    beyond_budget: u64,
    special: u64,
    /// S6 census entries as (order, description)
    census: Vec<(usize, String)>,
    /// S7 per k: members, minimum deficiency, balanced K_{k-1} deficiency
    gallai: Vec<(usize, u64, Option<Rational>, Option<Rational>)>,
    /// S8 per k: critical graphs, smallest slack 2|E| - bound
    critical: Vec<(usize, u64, Option<Rational>)>,
}

struct Runner<'c> {
    suite: SuiteId,
    config: &'c SuiteConfig,
    tally: Tally,
}

fn is_cycle_shape(class: BrickClass) -> Option<String> {
    match class {
        BrickClass::BalancedComplete(3) => Some("balanced C_3".into()),
        BrickClass::BalancedOddCycle(n) => Some(format!("balanced C_{n}")),
        BrickClass::UnbalancedEvenCycle(n) => Some(format!("unbalanced C_{n}")),
        BrickClass::DoubledComplete(2) => Some("unbalanced C_2 (2K_2)".into()),
        _ => None,
    }
}

impl<'c> Runner<'c> {
    fn new(suite: SuiteId, config: &'c SuiteConfig) -> Self {
        let tally = Tally {
            gallai: config
                .gallai_ks
                .iter()
                .map(|&k| (k, 0, None, None))
                .collect(),
            critical: config.critical_ks.iter().map(|&k| (k, 0, None)).collect(),
            ..Tally::default()
        };
        Runner {
            suite,
            config,
            tally,
        }
    }

    fn check(&mut self, facts: &mut Facts) -> Result<Option<Violation>> {
        let g = facts.g;
        let t = &mut self.tally;
        match self.suite {
            SuiteId::S1 => {
                t.checked += 1;
                let (chi, col, delta) = (facts.chi()?, facts.col(), g.max_degree());
                if chi > col || col > delta + 1 {
                    return Ok(Some(Violation::new(format!(
                        "chi_pm = {chi}, col = {col}, max degree + 1 = {}",
                        delta + 1
                    ))));
                }
                let n = g.vertex_count();
                if n * col > self.config.budget {
                    t.beyond_budget += 1;
                    return Ok(None);
                }
                t.within_budget += 1;
                let upper = all_f_assignments_colorable(g, &vec![col; n])?;
                if let Some(bad) = upper.counterexample {
                    return Ok(Some(Violation::with_lists(
                        format!("an assignment of {col}-lists has no coloring though col = {col}"),
                        write_lists(&bad),
                    )));
                }
                if chi > 1 && all_f_assignments_colorable(g, &vec![chi - 1; n])?.all_colorable {
                    return Ok(Some(Violation::new(format!(
                        "every {}-assignment is colorable though chi_pm = {chi}",
                        chi - 1
                    ))));
                }
            }
            SuiteId::S2 => {
                t.checked += 1;
                let two = solve_with_colorset(g, &ColorSet::z(2))?.is_some();
                let anti = structure::is_antibalanced(g);
                if two != anti {
                    return Ok(Some(Violation::new(format!(
                        "2-colorable = {two}, antibalanced = {anti}"
                    ))));
                }
            }
            SuiteId::S3 => {
                if !g.is_connected() || structure::is_brick(g) {
                    return Ok(None);
                }
                t.checked += 1;
                let delta = g.max_degree();
                if solve_with_colorset(g, &ColorSet::z(delta))?.is_none() {
                    return Ok(Some(Violation::new(format!(
                        "non-brick with chi_pm > max degree = {delta}"
                    ))));
                }
                let n = g.vertex_count();
                if n <= self.config.list_max_n {
                    if n * delta > self.config.budget {
                        t.beyond_budget += 1;
                    } else {
                        t.within_budget += 1;
                        if let Some(bad) =
                            all_f_assignments_colorable(g, &vec![delta; n])?.counterexample
                        {
                            return Ok(Some(Violation::with_lists(
                                format!("non-brick not colorable from some {delta}-assignment"),
                                write_lists(&bad),
                            )));
                        }
                    }
                }
            }
            SuiteId::S4 => {
                let total: usize = g.degrees().iter().sum();
                if !g.is_connected() {
                    return Ok(None);
                }
                if total > self.config.budget {
                    t.beyond_budget += 1;
                    return Ok(None);
                }
                t.checked += 1;
                let oracle = degree_choosable_oracle(g, self.config.budget)?;
                let verdict = is_degree_choosable(g)?;
                if !oracle {
                    t.special += 1;
                }
                if oracle != verdict.is_choosable() {
                    return Ok(Some(Violation::new(format!(
                        "oracle says degree choosable = {oracle}, block characterization says {}",
                        verdict.is_choosable()
                    ))));
                }
            }
            SuiteId::S5 => {
                if !g.is_connected() || !facts.all_bricks()? {
                    return Ok(None);
                }
                t.checked += 1;
                let lists = build_uncolorable_assignment(g)?;
                if lists.sizes() != g.degrees() {
                    return Ok(Some(Violation::with_lists(
                        "list sizes differ from degrees",
                        write_lists(&lists),
                    )));
                }
                if solve_list_coloring(g, &lists)?.is_some() {
                    return Ok(Some(Violation::with_lists(
                        "constructed lists admit a coloring",
                        write_lists(&lists),
                    )));
                }
                let pair = UncolorablePair::new(g.clone(), lists.clone())?;
                let report = check_pair_structure(&pair)?;
                if !report.all_hold() {
                    return Ok(Some(Violation::with_lists(
                        format!("pair structure fails: {}", report.failures().join(", ")),
                        write_lists(&lists),
                    )));
                }
            }
            SuiteId::S6 => {
                t.checked += 1;
                let critical = facts.chi()? == 3 && is_k_critical(g, 3)?;
                // every listed shape is 2-regular
                let two_regular = g.vertex_count() >= 2 && g.degrees().iter().all(|&d| d == 2);
                let shape =
                    if two_regular && g.is_connected() && structure::blocks(g).blocks.len() == 1 {
                        structure::classify_brick(g).ok().and_then(is_cycle_shape)
                    } else {
                        None
                    };
                match (critical, shape) {
                    (true, Some(name)) => t.census.push((g.vertex_count(), name)),
                    (false, None) => {}
                    (true, None) => {
                        return Ok(Some(Violation::new(
                            "3-critical but not of the listed shapes",
                        )))
                    }
                    (false, Some(name)) => {
                        return Ok(Some(Violation::new(format!("{name} is not 3-critical"))))
                    }
                }
            }
            SuiteId::S7 => {
                for entry in &mut t.gallai {
                    let k = entry.0;
                    if !gallai_class_member(g, k)?.member {
                        continue;
                    }
                    t.checked += 1;
                    entry.1 += 1;
                    let m = gallai_deficiency(g, k)?;
                    if entry.2.is_none_or(|best| m < best) {
                        entry.2 = Some(m);
                    }
                    if structure::is_balanced_complete(g, k - 1) {
                        entry.3 = Some(m);
                    }
                    if m < Rational::from_integer(2) {
                        return Ok(Some(Violation::new(format!("k = {k}: m(T) = {m} < 2"))));
                    }
                }
            }
            SuiteId::S8 => {
                if !g.is_simple() {
                    return Ok(None);
                }
                let chi = facts.chi()?;
                let Some(entry) = t.critical.iter_mut().find(|e| e.0 == chi) else {
                    return Ok(None);
                };
                if structure::is_balanced_complete(g, chi) || !is_k_critical(g, chi)? {
                    return Ok(None);
                }
                t.checked += 1;
                entry.1 += 1;
                let bound = edge_bound_check(g, chi)?;
                let slack = Rational::from_integer(bound.lhs) - bound.rhs;
                if entry.2.is_none_or(|best| slack < best) {
                    entry.2 = Some(slack);
                }
                if !bound.holds {
                    return Ok(Some(Violation::new(format!(
                        "{chi}-critical with 2|E| = {} < {}",
                        bound.lhs, bound.rhs
                    ))));
                }
            }
            SuiteId::S9 => {
                if !g.is_simple() || !g.is_positive() {
                    return Ok(None);
                }
                t.checked += 1;
                let doubled = SignedGraph::double(g)?;
                let (lhs, chi) = (signed_chromatic_number(&doubled)?, facts.support_chi()?);
                if lhs != 2 * chi - 1 {
                    return Ok(Some(Violation::new(format!(
                        "chi_pm(2H) = {lhs}, chi(H) = {chi}"
                    ))));
                }
            }
            SuiteId::S10 => {
                t.checked += 1;
                let (chi, under) = (facts.chi()?, facts.support_chi()?);
                if under > 0 && chi > 2 * under - 1 {
                    return Ok(Some(Violation::new(format!(
                        "chi_pm = {chi} > 2 * {under} - 1"
                    ))));
                }
            }
        }
        Ok(None)
    }

    fn findings(&self) -> Vec<String> {
        let t = &self.tally;
        let budget = self.config.budget;
        match self.suite {
            SuiteId::S1 => vec![format!(
                "choice number checked up to budget {budget} on {} graphs; {} graphs beyond budget",
                t.within_budget, t.beyond_budget
            )],
            SuiteId::S3 => vec![format!(
                "list version checked up to budget {budget} on {} non-bricks with n <= {}; {} beyond budget",
                t.within_budget, self.config.list_max_n, t.beyond_budget
            )],
            SuiteId::S4 => vec![
                format!("{} graphs are not degree choosable", t.special),
                format!("{} graphs beyond budget {budget}", t.beyond_budget),
            ],
            SuiteId::S6 => {
                let mut census = t.census.clone();
                census.sort();
                let mut out = vec![format!("3-critical graphs found: {}", census.len())];
                out.extend(census.into_iter().map(|(_, name)| name));
                out
            }
            SuiteId::S7 => t
                .gallai
                .iter()
                .map(|(k, members, min, complete)| {
                    let show = |r: &Option<Rational>| r.map_or("none".to_string(), |r| r.to_string());
                    format!(
                        "k = {k}: {members} members, min m(T) = {}, m(balanced K_{}) = {}",
                        show(min),
                        k - 1,
                        show(complete)
                    )
                })
                .collect(),
            SuiteId::S8 => t
                .critical
                .iter()
                .map(|(k, count, slack)| {
                    format!(
                        "k = {k}: {count} critical graphs, min 2|E| - bound = {}",
                        slack.map_or("none".to_string(), |s| s.to_string())
                    )
                })
                .collect(),
            _ => Vec::new(),
        }
    }
}

fn certificate(g: &SignedGraph, suite: SuiteId, v: Violation) -> Certificate {
    let mut doc = GraphDocument::new(g.clone());
    doc.comments
        .push(format!("violation {suite}: {}", v.statement));
    if let Some(aux) = &v.auxiliary {
        doc.comments.extend(aux.lines().map(str::to_string));
    }
    Certificate {
        graph: g.clone(),
        violation: v.statement,
        auxiliary: v.auxiliary,
        text: write_document(&doc),
    }
}

/// Runs one suite over `spec`, stopping at the first counterexample.
pub fn run_suite(suite: SuiteId, spec: &EnumSpec) -> Result<VerificationReport> {
    run_suite_with(suite, spec, &SuiteConfig::default())
}

pub fn run_suite_with(
    suite: SuiteId,
    spec: &EnumSpec,
    config: &SuiteConfig,
) -> Result<VerificationReport> {
    Ok(run_suites(&[suite], spec, config)?.remove(0))
}

/// Runs several suites over a single enumeration of `spec`. Each suite stops
/// at its own first counterexample; the pass ends once every suite has one.
pub fn run_suites(
    suites: &[SuiteId],
    spec: &EnumSpec,
    config: &SuiteConfig,
) -> Result<Vec<VerificationReport>> {
    let start = Instant::now();
    let mut runners: Vec<Runner> = suites.iter().map(|&s| Runner::new(s, config)).collect();
    let mut failures: Vec<Option<Certificate>> = vec![None; suites.len()];
    let mut instances = 0u64;
    let mut error = None;
    let mut cache = SupportCache::new();
    for_each_graph(spec, |g| {
        instances += 1;
        let mut facts = Facts::new(g, &mut cache);
        for (runner, failure) in runners.iter_mut().zip(failures.iter_mut()) {
            if failure.is_some() {
                continue;
            }
            match runner.check(&mut facts) {
                Ok(None) => {}
                Ok(Some(v)) => *failure = Some(certificate(g, runner.suite, v)),
                Err(e) => {
                    error = Some(e);
                    return ControlFlow::Break(());
                }
            }
        }
        if failures.iter().all(Option::is_some) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    if let Some(e) = error {
        return Err(e);
    }
    let elapsed = start.elapsed();
    Ok(runners
        .into_iter()
        .zip(failures)
        .map(|(runner, failure)| VerificationReport {
            suite: runner.suite,
            statement: runner.suite.statement().to_string(),
            spec: spec.clone(),
            instances,
            checked: runner.tally.checked,
            findings: runner.findings(),
            status: failure.map_or(Status::Pass, Status::Counterexample),
            elapsed,
        })
        .collect())
}

/// Re-evaluates `suite` on the graph of a certificate text. Returns the
/// violated statement when the failure reproduces.
pub fn replay(
    suite: SuiteId,
    certificate_text: &str,
    config: &SuiteConfig,
) -> Result<Option<String>> {
    let g = parse_graph(certificate_text)?.graph;
    let mut runner = Runner::new(suite, config);
    Ok(runner
        .check(&mut Facts::new(&g, &mut SupportCache::new()))?
        .map(|v| v.statement))
}

/// Runs the predicate of `suite` on a single graph.
pub fn check_graph(
    suite: SuiteId,
    g: &SignedGraph,
    config: &SuiteConfig,
) -> Result<Option<String>> {
    let mut runner = Runner::new(suite, config);
    Ok(runner
        .check(&mut Facts::new(g, &mut SupportCache::new()))?
        .map(|v| v.statement))
}
