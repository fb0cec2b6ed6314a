//! `quadham` command line. [`run`] takes the argument list and the three
//! standard streams so the whole surface can be driven from tests.
//!
//! Exit codes: 0 success or pass, 1 verification failure, 2 usage, parse or
//! precondition error.

pub mod draw;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use quadham::alpha::{random_instance, GenerationHistory};
use quadham::e4::{classify, e4_colouring, TriColouring};
use quadham::oracle::{
    cycle_orbit_count, enumerate_cover_pairs, enumerate_hamilton_cycles, verify_theorem11, verify_theorem12,
    OracleError, HAMILTON_CAP,
};
use quadham::stein::{cover_to_dual_cycle, from_cyc1, DualCycle};
use quadham::tree_pair::{
    build_auxiliary_j, enumerate_thm13_covers, extend_cover, greedy_chromatic_independent_set, seed_pair_thm13,
    seed_pair_thm14, ChoiceVector, CoverPair,
};
use quadham::{dual_graph, PlanarGraph};
use thiserror::Error;

use draw::Overlay;

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Failed(String),
    #[error("{0}")]
    Io(#[from] io::Error),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Input(_) | CliError::Io(_) => 2,
        }
    }
}

fn input<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

#[derive(Parser, Debug)]
#[command(
    name = "quadham",
    version,
    about = "Hamilton cycles of cubic bipartite plane graphs with quadrilateral 2-factors"
)]
struct Cli {
    /// Worker threads for enumeration; output bytes do not depend on it.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Io {
    /// Input file (default: stdin).
    #[arg(short, long)]
    input: Option<PathBuf>,
    /// Output file (default: stdout).
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate an E(4) triangulation by seeded α-operations.
    Gen {
        #[arg(long, default_value_t = 0)]
        ops: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Replay an ALPHA1 history instead of sampling.
        #[arg(long, conflicts_with_all = ["ops", "seed"])]
        replay: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Emit::Triangulation)]
        emit: Emit,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Structural report for a ROT1 graph.
    Classify(Io),
    /// The black/white/red colouring of an E(4) triangulation.
    Color(Io),
    /// Build induced-tree covers of an E(4) triangulation.
    Construct {
        #[arg(long, value_enum)]
        mode: Mode,
        /// Single choice vector (`v:STAR`, `v:PATH:r`) instead of all of them.
        #[arg(long)]
        choices: Option<String>,
        /// `v:n` pairs (1-based) for thm14.
        #[arg(long)]
        targets: Option<String>,
        #[command(flatten)]
        io: Io,
    },
    /// Check a theorem on a cubic ROT1 graph; exit 0 iff it passes.
    Verify {
        #[arg(long, value_enum)]
        theorem: Theorem,
        /// Comma-separated 1-based face ids (theorem 1.2).
        #[arg(long, value_delimiter = ',')]
        faces: Vec<usize>,
        /// Comma-separated `u-v` edges, one per face (theorem 1.2).
        #[arg(long, value_delimiter = ',')]
        chosen: Vec<String>,
        /// Largest graph checked against exhaustive enumeration.
        #[arg(long, default_value_t = HAMILTON_CAP)]
        oracle_cap: usize,
        #[command(flatten)]
        io: Io,
    },
    /// Exhaustive counts.
    Oracle {
        #[arg(long, value_enum)]
        kind: OracleKind,
        /// Also print every cycle or tree pair.
        #[arg(long)]
        list: bool,
        #[arg(long, default_value_t = HAMILTON_CAP)]
        cap: usize,
        #[command(flatten)]
        io: Io,
    },
    /// DOT or SVG drawing.
    Export {
        #[arg(long, value_enum)]
        format: Format,
        /// CYC1 file whose edges are highlighted.
        #[arg(long)]
        cycle: Option<PathBuf>,
        /// File with `X:` and `Y:` lines whose sides are shaded.
        #[arg(long)]
        cover: Option<PathBuf>,
        /// Fill vertices by their E(4) colour class.
        #[arg(long)]
        colour: bool,
        #[command(flatten)]
        io: Io,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Emit {
    Triangulation,
    Cubic,
    History,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Thm13,
    Thm14,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Theorem {
    #[value(name = "1.1")]
    T11,
    #[value(name = "1.2")]
    T12,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OracleKind {
    Cycles,
    Covers,
    Faces,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Dot,
    Svg,
}

/// Runs one command line (`argv[0]` is the program name).
pub fn run<I, T>(argv: I, stdin: &mut (dyn Read + Send), stdout: &mut (dyn Write + Send), stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(stdout, "{e}");
            return 0;
        }
        Err(e) => {
            let text = e.to_string();
            let _ = writeln!(stderr, "{}", text.lines().next().unwrap_or("usage error"));
            return 2;
        }
    };
    let result = match cli.jobs {
        Some(0) => Err(CliError::Input("--jobs must be at least 1".into())),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| dispatch(cli.command, stdin, stdout)),
            Err(e) => Err(CliError::Failed(e.to_string())),
        },
        None => dispatch(cli.command, stdin, stdout),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.code()
        }
    }
}

fn read_text(path: &Option<PathBuf>, stdin: &mut (dyn Read + Send)) -> Result<String, CliError> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| CliError::Input(format!("{}: {e}", p.display()))),
        None => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn emit(path: &Option<PathBuf>, stdout: &mut (dyn Write + Send), text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn read_graph(io: &Io, stdin: &mut (dyn Read + Send)) -> Result<PlanarGraph, CliError> {
    PlanarGraph::from_rot1(&read_text(&io.input, stdin)?).map_err(input)
}

fn e4(graph: &PlanarGraph) -> Result<TriColouring, CliError> {
    e4_colouring(graph).map_err(|e| CliError::Input(format!("not an E(4) triangulation: {e}")))
}

fn parse_id(s: &str, bound: usize) -> Result<usize, CliError> {
    match s.trim().parse::<usize>() {
        Ok(v) if v >= 1 && v <= bound => Ok(v - 1),
        _ => Err(CliError::Input(format!("bad id `{s}`"))),
    }
}

fn parse_pair(s: &str, sep: char, bound: usize) -> Result<(usize, usize), CliError> {
    let (a, b) = s
        .split_once(sep)
        .ok_or_else(|| CliError::Input(format!("expected `a{sep}b`, got `{s}`")))?;
    Ok((parse_id(a, bound)?, parse_id(b, bound)?))
}

fn parse_cover(graph: &PlanarGraph, text: &str) -> Result<CoverPair, CliError> {
    let n = graph.vertex_count();
    let (mut x, mut y) = (None, None);
    for line in text.lines() {
        let (label, ids) = line
            .split_once(':')
            .ok_or_else(|| CliError::Input(format!("bad cover line `{line}`")))?;
        let ids: Vec<usize> = ids
            .split_whitespace()
            .map(|s| parse_id(s, n))
            .collect::<Result<_, _>>()?;
        match label {
            "X" => x = Some(ids),
            "Y" => y = Some(ids),
            _ => return Err(CliError::Input(format!("bad cover label `{label}`"))),
        }
    }
    let (Some(mut x), Some(mut y)) = (x, y) else {
        return Err(CliError::Input("cover needs X: and Y: lines".into()));
    };
    x.sort_unstable();
    y.sort_unstable();
    let mut all: Vec<usize> = x.iter().chain(&y).copied().collect();
    all.sort_unstable();
    if all != (0..n).collect::<Vec<_>>() {
        return Err(CliError::Input("cover is not a partition of the vertices".into()));
    }
    let xm = quadham::planar::mask_of(n, x.iter().copied());
    let ym: Vec<bool> = xm.iter().map(|b| !b).collect();
    Ok(CoverPair {
        connected_x: graph.induces_tree(&xm),
        connected_y: graph.induces_tree(&ym),
        x,
        y,
    })
}

fn oracle_error(e: OracleError) -> CliError {
    match e {
        OracleError::PipelineFailure { .. } => CliError::Failed(e.to_string()),
        _ => CliError::Input(e.to_string()),
    }
}

fn dispatch(command: Command, stdin: &mut (dyn Read + Send), stdout: &mut (dyn Write + Send)) -> Result<i32, CliError> {
    match command {
        Command::Gen {
            ops,
            seed,
            replay,
            emit: what,
            output,
        } => {
            let history = match &replay {
                Some(path) => GenerationHistory::from_alpha1(&read_text(&Some(path.clone()), stdin)?).map_err(input)?,
                None => random_instance(ops, seed).2,
            };
            let (g, _) = history.replay().map_err(input)?;
            let text = match what {
                Emit::Triangulation => g.to_rot1(),
                Emit::Cubic => dual_graph(&g).map_err(input)?.0.to_rot1(),
                Emit::History => history.to_alpha1(),
            };
            emit(&output, stdout, &text)?;
        }
        Command::Classify(io) => {
            let g = read_graph(&io, stdin)?;
            emit(&io.output, stdout, &classify(&g).to_string())?;
        }
        Command::Color(io) => {
            let g = read_graph(&io, stdin)?;
            emit(&io.output, stdout, &e4(&g)?.to_string())?;
        }
        Command::Construct {
            mode,
            choices,
            targets,
            io,
        } => {
            let g = read_graph(&io, stdin)?;
            let c = e4(&g)?;
            let (p, corr) = dual_graph(&g).map_err(input)?;
            let hamiltonian = |cover: &CoverPair| -> Result<bool, CliError> {
                let cut = cover_to_dual_cycle(&g, &p, cover, &corr).map_err(|e| CliError::Failed(e.to_string()))?;
                Ok(matches!(cut, DualCycle::Hamilton(_)))
            };
            let mut out = String::new();
            match mode {
                Mode::Thm13 => {
                    let j = build_auxiliary_j(&g, &c).map_err(|e| CliError::Failed(e.to_string()))?;
                    let k = greedy_chromatic_independent_set(&j).map_err(|e| CliError::Failed(e.to_string()))?;
                    let covers = match choices {
                        Some(text) => {
                            let cv: ChoiceVector = text.parse().map_err(CliError::Input)?;
                            let pair = seed_pair_thm13(&g, &c, &k.members, &cv).map_err(input)?;
                            let cover = extend_cover(&g, &c, &pair).map_err(|e| CliError::Failed(e.to_string()))?;
                            vec![(cv, cover)]
                        }
                        None => {
                            enumerate_thm13_covers(&g, &c, &k.members).map_err(|e| CliError::Failed(e.to_string()))?
                        }
                    };
                    let ids: Vec<String> = k.members.iter().map(|v| (v + 1).to_string()).collect();
                    out.push_str(&format!("K={}\ncovers={}\n", ids.join(","), covers.len()));
                    for (cv, cover) in &covers {
                        out.push_str(&format!("\nchoices={cv}\n{cover}hamiltonian={}\n", hamiltonian(cover)?));
                    }
                }
                Mode::Thm14 => {
                    let n = g.vertex_count();
                    let pairs: Vec<(usize, usize)> = targets
                        .unwrap_or_default()
                        .split_whitespace()
                        .map(|t| parse_pair(t, ':', n))
                        .collect::<Result<_, _>>()?;
                    let pair = seed_pair_thm14(&g, &c, &pairs).map_err(input)?;
                    let cover = extend_cover(&g, &c, &pair).map_err(|e| CliError::Failed(e.to_string()))?;
                    out.push_str(&format!("{cover}hamiltonian={}\n", hamiltonian(&cover)?));
                }
            }
            emit(&io.output, stdout, &out)?;
        }
        Command::Verify {
            theorem,
            faces,
            chosen,
            oracle_cap,
            io,
        } => {
            let p = read_graph(&io, stdin)?;
            let (text, pass) = match theorem {
                Theorem::T11 => {
                    let r = verify_theorem11(&p, oracle_cap).map_err(oracle_error)?;
                    (r.to_string(), r.pass)
                }
                Theorem::T12 => {
                    if faces.len() != chosen.len() {
                        return Err(CliError::Input("--faces and --chosen need the same length".into()));
                    }
                    let face_ids: Vec<usize> = faces
                        .iter()
                        .map(|f| parse_id(&f.to_string(), p.faces().len()))
                        .collect::<Result<_, _>>()?;
                    let mut edge_ids = Vec::new();
                    for e in &chosen {
                        let (u, v) = parse_pair(e, '-', p.vertex_count())?;
                        edge_ids.push(
                            p.edge_id(u, v)
                                .ok_or_else(|| CliError::Input(format!("`{e}` is not an edge")))?,
                        );
                    }
                    let r = verify_theorem12(&p, &face_ids, &edge_ids).map_err(oracle_error)?;
                    let mut text = r.to_string();
                    if let Some(h) = &r.cycle {
                        text.push_str(&h.to_string());
                    }
                    (text, r.pass)
                }
            };
            emit(&io.output, stdout, &text)?;
            return Ok(if pass { 0 } else { 1 });
        }
        Command::Oracle { kind, list, cap, io } => {
            let g = read_graph(&io, stdin)?;
            let mut out = String::new();
            match kind {
                OracleKind::Cycles => {
                    let cycles = enumerate_hamilton_cycles(&g, cap).map_err(oracle_error)?;
                    out.push_str(&format!("hamilton_cycles={}\n", cycles.len()));
                    let orbits = cycle_orbit_count(&g, &cycles);
                    out.push_str(&format!("orbits={}\n", orbits.map_or("-".into(), |o| o.to_string())));
                    if list {
                        for h in &cycles {
                            out.push_str(&format!("\n{h}"));
                        }
                    }
                }
                OracleKind::Covers => {
                    let count = enumerate_cover_pairs(&g, list).map_err(oracle_error)?;
                    out.push_str(&format!(
                        "acyclic_pairs={}\ntree_pairs={}\n",
                        count.acyclic, count.tree_pairs
                    ));
                    for cover in count.pairs.unwrap_or_default() {
                        out.push_str(&format!("\n{cover}"));
                    }
                }
                OracleKind::Faces => {
                    for f in 0..g.faces().len() {
                        let vs: Vec<String> = g.face_vertices(f).iter().map(|v| (v + 1).to_string()).collect();
                        out.push_str(&format!("face {}: {}\n", f + 1, vs.join(" ")));
                    }
                }
            }
            emit(&io.output, stdout, &out)?;
        }
        Command::Export {
            format,
            cycle,
            cover,
            colour,
            io,
        } => {
            let g = read_graph(&io, stdin)?;
            let mut overlay = Overlay::default();
            if let Some(path) = &cycle {
                overlay.cycle = Some(from_cyc1(&g, &read_text(&Some(path.clone()), stdin)?).map_err(input)?);
            }
            if let Some(path) = &cover {
                overlay.cover = Some(parse_cover(&g, &read_text(&Some(path.clone()), stdin)?)?);
            }
            if colour {
                overlay.colouring = Some(e4(&g)?);
            }
            let text = match format {
                Format::Dot => draw::to_dot(&g, &overlay),
                Format::Svg => draw::to_svg(&g, &overlay).map_err(input)?,
            };
            emit(&io.output, stdout, &text)?;
        }
    }
    Ok(0)
}
