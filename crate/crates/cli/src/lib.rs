//! The `reflex` command line: graph products and homs, Kan extensions of
//! seeds, property checks and the seed classification.

pub mod files;
pub mod names;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use reflex_core::classify::{
    classify_seeds, default_test_graphs, enumerate_labelled_seeds, enumerate_merged_label_seeds, seed_vertex_names,
};
use reflex_core::kan::{finality_report, lan};
use reflex_core::monoidal::{check_adjunction, pairs_of, property_table, triples_of};
use reflex_core::products::{internal_hom, product, HomKind, ProductKind};
use reflex_core::{are_isomorphic, enumerate_maps, graphs_up_to};

use crate::files::{json_files, read_graph, read_seed, FormatError, NamedGraph, NamedSeed};
use crate::report::{check_text, render_classification, render_table, Classified, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "reflex", version, about = "Monoidal products on finite reflexive graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Product of two graphs.
    Product {
        #[arg(long, value_enum)]
        kind: KindArg,
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        out: GraphOutput,
    },
    /// Internal hom of one of the two closed products.
    Hom {
        #[arg(long, value_enum)]
        kind: HomArg,
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        out: GraphOutput,
    },
    /// Count and list the graph maps A -> B.
    Maps { a: PathBuf, b: PathBuf },
    /// Print an isomorphism A -> B, or "non-isomorphic".
    Iso { a: PathBuf, b: PathBuf },
    /// Product of A and B defined by a seed.
    Lan {
        #[arg(long)]
        seed: PathBuf,
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        out: GraphOutput,
    },
    /// Bounded checks of the table, adjunctions and finality.
    #[command(subcommand)]
    Check(CheckCommand),
    /// Run every check on a list of seeds and certify the survivors.
    Classify {
        /// Directory of seed files; defaults to the 64 labelled candidates.
        #[arg(long)]
        seeds: Option<PathBuf>,
        /// Also classify the enumerated merged-label seeds.
        #[arg(long)]
        merged: bool,
        /// Directory of test graph files; defaults to all graphs on at most
        /// three vertices and path(3).
        #[arg(long)]
        tests: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "md")]
        format: ClassifyFormat,
    },
}

#[derive(Subcommand, Debug)]
enum CheckCommand {
    /// The Monoidal / Symmetric / Closed table of the six built-in products.
    Table {
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
    },
    /// Hom-set counts and currying round trips over all triples.
    Adjunction {
        #[arg(long, value_enum)]
        kind: HomArg,
        #[arg(long)]
        max_n: usize,
    },
    /// Compare the edge-cell colimit with the full colimit over all pairs.
    Finality {
        #[arg(long)]
        seed: PathBuf,
        #[arg(long)]
        max_n: usize,
    },
}

#[derive(Args, Debug)]
struct GraphOutput {
    /// Write the graph as JSON here instead of stdout.
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
    /// Also write the graph in DOT format.
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Box,
    Categorical,
    Tensor,
    Lex,
    Conormal,
    Modular,
}

impl From<KindArg> for ProductKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Box => ProductKind::Box,
            KindArg::Categorical => ProductKind::Categorical,
            KindArg::Tensor => ProductKind::Tensor,
            KindArg::Lex => ProductKind::Lexicographic,
            KindArg::Conormal => ProductKind::Conormal,
            KindArg::Modular => ProductKind::Modular,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum HomArg {
    Box,
    Categorical,
}

impl From<HomArg> for HomKind {
    fn from(k: HomArg) -> Self {
        match k {
            HomArg::Box => HomKind::Box,
            HomArg::Categorical => HomKind::Categorical,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ClassifyFormat {
    Md,
    Json,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("{0}")]
    Usage(String),
    #[error("write failed: {0}")]
    Io(#[from] std::io::Error),
}

/// Parses `argv` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn emit_graph(g: &NamedGraph, out: &GraphOutput, stdout: &mut dyn Write) -> Result<(), CliError> {
    let json = g.to_json() + "\n";
    match &out.output {
        Some(path) => std::fs::write(path, json)?,
        None => stdout.write_all(json.as_bytes())?,
    }
    if let Some(path) = &out.dot {
        std::fs::write(path, g.to_dot())?;
    }
    Ok(())
}

fn execute(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Product { kind, a, b, out } => {
            let (x, y) = (read_graph(&a)?, read_graph(&b)?);
            let graph = product(kind.into(), &x.graph, &y.graph);
            emit_graph(&NamedGraph { graph, names: names::product_names(&x, &y) }, &out, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Hom { kind, a, b, out } => {
            let (x, y) = (read_graph(&a)?, read_graph(&b)?);
            let hom = internal_hom(kind.into(), &x.graph, &y.graph);
            let names = names::hom_names(&x, &y, &hom);
            emit_graph(&NamedGraph { graph: hom.graph, names }, &out, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Maps { a, b } => {
            let (x, y) = (read_graph(&a)?, read_graph(&b)?);
            let maps = enumerate_maps(&x.graph, &y.graph);
            writeln!(stdout, "count: {}", maps.len())?;
            for m in &maps {
                writeln!(stdout, "{}", names::map_signature(&x.names, &y.names, m.images()))?;
            }
            Ok(EXIT_OK)
        }
        Command::Iso { a, b } => {
            let (x, y) = (read_graph(&a)?, read_graph(&b)?);
            match are_isomorphic(&x.graph, &y.graph) {
                Some(bij) => writeln!(stdout, "{}", names::map_signature(&x.names, &y.names, &bij.forward))?,
                None => writeln!(stdout, "non-isomorphic")?,
            }
            Ok(EXIT_OK)
        }
        Command::Lan { seed, a, b, out } => {
            let s = read_seed(&seed)?;
            let (x, y) = (read_graph(&a)?, read_graph(&b)?);
            let r = lan(&s.seed, &x.graph, &y.graph).map_err(|e| CliError::Usage(e.to_string()))?;
            let names = names::lan_names(&r, &s.names, &x, &y);
            emit_graph(&NamedGraph { graph: r.graph().clone(), names }, &out, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Check(CheckCommand::Table { max_n, format }) => {
            if max_n < 2 {
                return Err(CliError::Usage("--max-n must be at least 2".into()));
            }
            stdout.write_all(render_table(&property_table(bounded(max_n)?), format).as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Check(CheckCommand::Adjunction { kind, max_n }) => {
            let triples = triples_of(&graphs_up_to(bounded(max_n)?));
            let r = check_adjunction(kind.into(), &triples);
            stdout.write_all(check_text(&r, &format!("graphs on at most {max_n} vertices")).as_bytes())?;
            Ok(if r.passed { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Check(CheckCommand::Finality { seed, max_n }) => {
            let s = read_seed(&seed)?;
            let pairs = pairs_of(&graphs_up_to(bounded(max_n)?));
            let mut failures = 0;
            for (x, y) in &pairs {
                match finality_report(&s.seed, x, y) {
                    Ok(r) if r.isomorphic => {}
                    Ok(r) => {
                        failures += 1;
                        writeln!(
                            stdout,
                            "FAIL X = {x:?}, Y = {y:?}: edge colimit has {} vertices, full colimit {}",
                            r.edge_vertices, r.full_vertices
                        )?;
                    }
                    Err(e) => {
                        writeln!(stdout, "FAIL {e}")?;
                        return Ok(EXIT_FAIL);
                    }
                }
            }
            writeln!(stdout, "finality: {} pairs on at most {max_n} vertices, {failures} failures", pairs.len())?;
            Ok(if failures == 0 { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Classify { seeds, merged, tests, format } => {
            let mut named: Vec<(String, NamedSeed)> = match &seeds {
                Some(dir) => json_files(dir)?
                    .into_iter()
                    .map(|p| Ok((file_stem(&p), read_seed(&p)?)))
                    .collect::<Result<_, CliError>>()?,
                None => enumerate_labelled_seeds().into_iter().map(|s| (String::new(), label_named(s))).collect(),
            };
            if merged {
                named.extend(enumerate_merged_label_seeds().into_iter().map(|s| (String::new(), label_named(s))));
            }
            let test_graphs = match &tests {
                Some(dir) => {
                    json_files(dir)?.iter().map(|p| Ok(read_graph(p)?.graph)).collect::<Result<Vec<_>, CliError>>()?
                }
                None => default_test_graphs(),
            };
            let list: Vec<_> = named.iter().map(|(_, s)| s.seed.clone()).collect();
            let mut report = classify_seeds(&list, &test_graphs).map_err(|e| CliError::Usage(e.to_string()))?;
            for (r, (stem, _)) in report.records.iter_mut().zip(&named) {
                if !stem.is_empty() {
                    r.description = format!("{stem}: {}", r.description);
                }
            }
            let files: Vec<_> = named.iter().map(|(_, s)| s.to_file()).collect();
            let format = match format {
                ClassifyFormat::Md => Format::Md,
                ClassifyFormat::Json => Format::Json,
            };
            stdout
                .write_all(render_classification(&Classified { report: &report, files: &files }, format).as_bytes())?;
            if !report.all_certified() {
                writeln!(stderr, "some surviving seed is not certified against Box or Categorical")?;
                return Ok(EXIT_FAIL);
            }
            Ok(EXIT_OK)
        }
    }
}

/// Graph universes are only enumerated up to six vertices.
fn bounded(max_n: usize) -> Result<usize, CliError> {
    if max_n > 6 {
        Err(CliError::Usage(format!("--max-n {max_n} is too large; at most 6 is supported")))
    } else {
        Ok(max_n)
    }
}

fn file_stem(p: &Path) -> String {
    p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

fn label_named(seed: reflex_core::FunctorSeed) -> NamedSeed {
    let names = seed_vertex_names(&seed);
    NamedSeed { seed, names }
}
