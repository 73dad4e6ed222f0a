use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use signcolor::bounds::signed_line_graph;
use signcolor::coloring::{coloring_number, signed_chromatic_witness};
use signcolor::enumeration::suites::{run_suite_with, SuiteConfig, SuiteId, VerificationReport};
use signcolor::io::{parse_graph, parse_lists, write_coloring, write_graph, write_lists};
use signcolor::list_coloring::{
    build_uncolorable_assignment, is_degree_choosable, solve_list_coloring, DegreeChoosability,
};
use signcolor::structure::{self, Balance};
use signcolor::{Error, ListAssignment, SignedGraph};

#[derive(Parser)]
#[command(
    name = "signcolor",
    version,
    about = "Coloring and list coloring of signed graphs"
)]
struct Cli {
    /// Output format
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Balance, blocks, brick classes, degrees and coloring number
    Analyze { file: PathBuf },
    /// Signed chromatic number with a witness coloring
    Chromatic { file: PathBuf },
    /// Find a coloring from the given lists
    Listcolor {
        file: PathBuf,
        #[arg(long)]
        lists: PathBuf,
    },
    /// Decide degree choosability, with a certificate
    Choosable { file: PathBuf },
    /// Degree-sized lists without a coloring (every block must be a brick)
    Badlists { file: PathBuf },
    /// The signed line graph
    Linegraph { file: PathBuf },
    /// Run a verification suite (S1 to S10) exhaustively
    Verify {
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        mu: Option<usize>,
        /// Total list size allowed to the brute-force oracle
        #[arg(long)]
        budget: Option<usize>,
        /// Include wall time in the report
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Input(msg) => f.write_str(msg),
            Failure::Core(e) => write!(f, "{e}"),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<SignedGraph, Failure> {
    parse_graph(&read(path)?)
        .map(|d| d.graph)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

#[derive(Serialize)]
struct BalanceReport {
    holds: bool,
    parts: Option<(Vec<usize>, Vec<usize>)>,
    /// Edge ids of a cycle with the wrong sign product.
    witness_cycle: Option<Vec<usize>>,
}

impl From<Balance> for BalanceReport {
    fn from(b: Balance) -> Self {
        match b {
            Balance::Parts { x, y } => BalanceReport {
                holds: true,
                parts: Some((x.to_vec(), y.to_vec())),
                witness_cycle: None,
            },
            Balance::UnbalancedCycle(c) => BalanceReport {
                holds: false,
                parts: None,
                witness_cycle: Some(c),
            },
        }
    }
}

impl BalanceReport {
    fn text(&self, label: &str) -> String {
        match (&self.parts, &self.witness_cycle) {
            (Some((x, y)), _) => format!("{label}: yes, parts {x:?} {y:?}\n"),
            (_, Some(c)) => format!("{label}: no, cycle on edges {c:?}\n"),
            _ => unreachable!(),
        }
    }
}

#[derive(Serialize)]
struct BlockReport {
    vertices: Vec<usize>,
    edges: Vec<usize>,
    class: String,
    is_brick: bool,
}

#[derive(Serialize)]
struct Analysis {
    vertices: usize,
    edges: usize,
    connected: bool,
    max_degree: usize,
    min_degree: usize,
    max_multiplicity: usize,
    coloring_number: usize,
    balanced: BalanceReport,
    antibalanced: BalanceReport,
    cut_vertices: Vec<usize>,
    blocks: Vec<BlockReport>,
}

fn analyze(g: &SignedGraph) -> Analysis {
    let decomposition = structure::blocks(g);
    let blocks = decomposition
        .blocks
        .iter()
        .map(|b| {
            let class = structure::classify_brick(&b.graph);
            BlockReport {
                vertices: b.vertices.clone(),
                edges: b.edges.clone(),
                class: class
                    .as_ref()
                    .map_or_else(|e| e.to_string(), |c| c.to_string()),
                is_brick: class.is_ok_and(|c| c.is_brick()),
            }
        })
        .collect();
    Analysis {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        connected: g.is_connected(),
        max_degree: g.max_degree(),
        min_degree: g.min_degree(),
        max_multiplicity: g.max_multiplicity(),
        coloring_number: coloring_number(g).value,
        balanced: structure::balance(g).into(),
        antibalanced: structure::antibalance(g).into(),
        cut_vertices: decomposition.cut_vertices.to_vec(),
        blocks,
    }
}

impl Analysis {
    fn text(&self) -> String {
        let mut out = format!(
            "vertices: {}\nedges: {}\nconnected: {}\n",
            self.vertices, self.edges, self.connected
        );
        out.push_str(&format!(
            "max degree: {}\nmin degree: {}\nmax multiplicity: {}\ncoloring number: {}\n",
            self.max_degree, self.min_degree, self.max_multiplicity, self.coloring_number
        ));
        out.push_str(&self.balanced.text("balanced"));
        out.push_str(&self.antibalanced.text("antibalanced"));
        out.push_str(&format!("cut vertices: {:?}\n", self.cut_vertices));
        for (i, b) in self.blocks.iter().enumerate() {
            out.push_str(&format!(
                "block {i}: vertices {:?}, {}\n",
                b.vertices, b.class
            ));
        }
        out
    }
}

#[derive(Serialize)]
struct Chromatic {
    chi_pm: usize,
    coloring: Vec<i64>,
}

#[derive(Serialize)]
struct ListColoring {
    colorable: bool,
    coloring: Option<Vec<i64>>,
}

#[derive(Serialize)]
struct Choosability {
    degree_choosable: bool,
    /// A block that is not a brick, when choosable.
    non_brick_block: Option<Vec<usize>>,
    block_class: Option<String>,
    /// Degree-sized lists with no coloring, when not choosable.
    lists: Option<Vec<Vec<i64>>>,
    verified: Option<bool>,
}

fn list_vectors(l: &ListAssignment) -> Vec<Vec<i64>> {
    l.lists().iter().map(|c| c.to_vec()).collect()
}

fn lists_inline(l: &ListAssignment) -> String {
    let parts: Vec<String> = l.lists().iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(","))
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(value).expect("reports serialize")
        ),
        Format::Text => print!("{}", text()),
    }
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    #[serde(flatten)]
    report: &'a VerificationReport,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    seconds: Option<f64>,
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let format = cli.format;
    match cli.command {
        Command::Analyze { file } => {
            let a = analyze(&load_graph(&file)?);
            emit(format, &a, || a.text());
        }
        Command::Chromatic { file } => {
            let g = load_graph(&file)?;
            let (k, phi) = signed_chromatic_witness(&g)?;
            let out = Chromatic {
                chi_pm: k,
                coloring: phi.colors().to_vec(),
            };
            emit(format, &out, || {
                format!("chi_pm = {k}\n{}", write_coloring(&phi))
            });
        }
        Command::Listcolor { file, lists } => {
            let g = load_graph(&file)?;
            let l = parse_lists(&read(&lists)?, &g)
                .map_err(|e| Failure::Input(format!("{}: {e}", lists.display())))?;
            let phi = solve_list_coloring(&g, &l)?;
            let out = ListColoring {
                colorable: phi.is_some(),
                coloring: phi.as_ref().map(|p| p.colors().to_vec()),
            };
            emit(format, &out, || match &phi {
                Some(p) => format!("colorable\n{}", write_coloring(p)),
                None => "not colorable\n".to_string(),
            });
        }
        Command::Choosable { file } => {
            let g = load_graph(&file)?;
            let out = match is_degree_choosable(&g)? {
                DegreeChoosability::Choosable { block, class } => Choosability {
                    degree_choosable: true,
                    non_brick_block: Some(block),
                    block_class: Some(class.to_string()),
                    lists: None,
                    verified: None,
                },
                DegreeChoosability::NotChoosable { lists, verified } => Choosability {
                    degree_choosable: false,
                    non_brick_block: None,
                    block_class: None,
                    lists: Some(list_vectors(&lists)),
                    verified: Some(verified),
                },
            };
            emit(format, &out, || {
                if out.degree_choosable {
                    format!(
                        "degree-choosable\nblock {:?} is {}\n",
                        out.non_brick_block.as_ref().unwrap(),
                        out.block_class.as_ref().unwrap()
                    )
                } else {
                    let l = ListAssignment::new(
                        out.lists
                            .as_ref()
                            .unwrap()
                            .iter()
                            .map(|c| c.iter().copied().collect())
                            .collect(),
                    );
                    format!(
                        "NOT degree-choosable\nlists {}\n{}",
                        lists_inline(&l),
                        write_lists(&l)
                    )
                }
            });
        }
        Command::Badlists { file } => {
            let g = load_graph(&file)?;
            let l = build_uncolorable_assignment(&g)?;
            emit(format, &list_vectors(&l), || write_lists(&l));
        }
        Command::Linegraph { file } => {
            let h = signed_line_graph(&load_graph(&file)?);
            emit(format, &h, || write_graph(&h));
        }
        Command::Verify {
            suite,
            max_n,
            mu,
            budget,
            timing,
        } => {
            let id: SuiteId = suite.parse()?;
            let mut spec = id.default_spec();
            if let Some(n) = max_n {
                spec.max_vertices = n;
            }
            if let Some(m) = mu {
                spec.max_multiplicity = m;
            }
            let mut config = SuiteConfig::default();
            if let Some(b) = budget {
                config.budget = b;
            }
            let report = run_suite_with(id, &spec, &config)?;
            let out = VerifyOutput {
                report: &report,
                passed: report.passed(),
                seconds: timing.then_some(report.elapsed.as_secs_f64()),
            };
            emit(format, &out, || report.to_text(timing));
            if !report.passed() {
                return Ok(ExitCode::from(2));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
