//! `cosetlab`: analyze how the left cosets of one subgroup intersect the
//! right cosets of another.
//!
//! Exit codes: 0 when everything checked out, 1 when a structural check
//! failed (or an internal invariant broke), 2 for unusable input.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cosetlab::{
    analyze, catalog_group, format_group_file, load_group, parse_generator_list,
    transversal_section, AnalysisOptions, AnalysisReport, CatalogSpec, CellStyle, CosetGraph,
    Error, Family, PermutationGroup, Permutation, TransversalMode, TransversalSection,
    DEFAULT_CAP,
};

#[derive(Parser)]
#[command(name = "cosetlab", version, about = "coset intersection graphs, chessboards and transversals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the coset intersection graph of (G, H, K) and run every
    /// structural check
    Analyze(AnalyzeArgs),
    /// Render the chessboard decomposition as an ASCII grid or DOT graph
    Chessboard(ChessboardArgs),
    /// Construct a transversal and verify it
    Transversal(TransversalArgs),
    /// Count the cosets meeting gH and Kg, by enumeration and by formula
    Counts(CountsArgs),
    /// Print a catalog group in the group file format
    Catalog(CatalogArgs),
}

#[derive(Args)]
struct GroupSource {
    /// Group file (degree/gen lines)
    #[arg(long, conflicts_with_all = ["family", "n", "m"])]
    group: Option<PathBuf>,
    /// Catalog family: cyclic, dihedral, symmetric, alternating,
    /// quaternion8, direct_product
    #[arg(long)]
    family: Option<String>,
    /// Family parameter
    #[arg(long)]
    n: Option<usize>,
    /// Second family parameter (direct_product builds C_n x S_m)
    #[arg(long)]
    m: Option<usize>,
    /// Closure cap; COSETLAB_CAP overrides the default
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Args)]
struct Subgroups {
    /// Generators of H as comma-separated cycles, e.g. "(1 2)(3 4), (1 3)";
    /// defaults to the whole group
    #[arg(long = "h")]
    h: Option<String>,
    /// Generators of K; defaults to --h
    #[arg(long = "k")]
    k: Option<String>,
}

#[derive(Args)]
struct Output {
    /// Output file; stdout by default
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Ascii,
    Dot,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    source: GroupSource,
    #[command(flatten)]
    subgroups: Subgroups,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Include a verified left-right transversal for H in the report
    #[arg(long)]
    with_transversal: bool,
    /// Include the count report for one g per chessboard
    #[arg(long)]
    with_counts: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct ChessboardArgs {
    #[command(flatten)]
    source: GroupSource,
    #[command(flatten)]
    subgroups: Subgroups,
    #[arg(long, value_enum, default_value = "ascii")]
    format: Format,
    /// Cell contents: the tile size or the tile's minimal element
    #[arg(long, value_enum, default_value = "size")]
    cells: Cells,
    #[command(flatten)]
    output: Output,
}

#[derive(Clone, Copy, ValueEnum)]
enum Cells {
    Size,
    Reps,
}

#[derive(Args)]
struct TransversalArgs {
    #[command(flatten)]
    source: GroupSource,
    #[command(flatten)]
    subgroups: Subgroups,
    /// left, right, left-right, extendable or hall
    #[arg(long, default_value = "left-right")]
    mode: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct CountsArgs {
    #[command(flatten)]
    source: GroupSource,
    #[command(flatten)]
    subgroups: Subgroups,
    /// The element g in cycle notation
    #[arg(long, default_value = "()")]
    g: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct CatalogArgs {
    #[command(flatten)]
    source: GroupSource,
    #[command(flatten)]
    output: Output,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Analyze(args) => run_analyze(args),
        Command::Chessboard(args) => run_chessboard(args),
        Command::Transversal(args) => run_transversal(args),
        Command::Counts(args) => run_counts(args),
        Command::Catalog(args) => run_catalog(args),
    };
    match outcome {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            // a falsified invariant is a failed check, not bad input
            Error::Internal(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn resolve_cap(flag: Option<usize>) -> Result<usize, Failure> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var("COSETLAB_CAP") {
        Ok(value) => value
            .parse::<usize>()
            .map_err(|_| usage(format!("COSETLAB_CAP must be an integer, got {value:?}"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn load_group_source(source: &GroupSource) -> Result<(PermutationGroup, usize), Failure> {
    let cap = resolve_cap(source.cap)?;
    let group = match (&source.group, &source.family) {
        (Some(path), None) => {
            let text = fs::read_to_string(path)?;
            load_group(&text, cap)?
        }
        (None, Some(family)) => {
            let family = Family::parse(family)?;
            let mut parameters = Vec::new();
            if let Some(n) = source.n {
                parameters.push(n);
            }
            if let Some(m) = source.m {
                parameters.push(m);
            }
            let group = catalog_group(&CatalogSpec::new(family, parameters))?;
            if group.order() > cap {
                return Err(Error::CapExceeded { cap }.into());
            }
            group
        }
        (None, None) => return Err(usage("provide a group with --group or --family/--n")),
        (Some(_), Some(_)) => return Err(usage("--group and --family are mutually exclusive")),
    };
    Ok((group, cap))
}

fn load_triple(
    source: &GroupSource,
    subgroups: &Subgroups,
) -> Result<(PermutationGroup, PermutationGroup, PermutationGroup), Failure> {
    let (group, cap) = load_group_source(source)?;
    let h = match &subgroups.h {
        Some(text) => {
            let generators = parse_generator_list(text, group.degree())?;
            PermutationGroup::generate(&generators, group.degree(), cap)?
        }
        None => group.clone(),
    };
    let k = match &subgroups.k {
        Some(text) => {
            let generators = parse_generator_list(text, group.degree())?;
            PermutationGroup::generate(&generators, group.degree(), cap)?
        }
        None => h.clone(),
    };
    Ok((group, h, k))
}

fn emit(output: &Output, text: &str) -> Result<(), Failure> {
    match &output.out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run_analyze(args: AnalyzeArgs) -> Result<ExitCode, Failure> {
    let (group, h, k) = load_triple(&args.source, &args.subgroups)?;
    let report = analyze(
        &group,
        &h,
        &k,
        AnalysisOptions {
            with_transversal: args.with_transversal,
            with_counts: args.with_counts,
        },
    )?;
    let text = match args.format {
        Format::Json => to_json(&report)?,
        Format::Text => analysis_text(&report),
        _ => return Err(usage("analyze supports --format json or text")),
    };
    emit(&args.output, &text)?;
    Ok(if report.all_checks_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, Failure> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| Failure {
        code: 1,
        message: format!("serialization failed: {e}"),
    })?;
    text.push('\n');
    Ok(text)
}

fn analysis_text(report: &AnalysisReport) -> String {
    let mut out = format!(
        "group order {}, |H| = {} (index {}), |K| = {} (index {})\nchessboards:\n",
        report.group_order, report.h_order, report.h_index, report.k_order, report.k_index
    );
    for (i, b) in report.chessboards.iter().enumerate() {
        out.push_str(&format!(
            "  {}: s={} t={} double_coset={} size={} tile={}\n",
            i + 1,
            b.s,
            b.t,
            b.double_coset_rep,
            b.double_coset_size,
            b.tile_size
        ));
    }
    out.push_str("checks:\n");
    for (name, passed) in &report.checks {
        out.push_str(&format!(
            "  {name}: {}\n",
            if *passed { "pass" } else { "FAIL" }
        ));
    }
    if let Some(t) = &report.transversal {
        out.push_str(&transversal_text(t));
    }
    if let Some(counts) = &report.counts {
        for c in counts {
            out.push_str(&format!(
                "counts for g = {}: M_g direct={} by_order={} by_index={}, symmetric direct={} by_order={}\n",
                c.g, c.m_direct, c.m_by_order, c.m_by_index, c.symmetric_direct, c.symmetric_by_order
            ));
        }
    }
    out
}

fn run_chessboard(args: ChessboardArgs) -> Result<ExitCode, Failure> {
    let (group, h, k) = load_triple(&args.source, &args.subgroups)?;
    let graph = CosetGraph::build(&group, &h, &k)?;
    let boards = graph.components()?;
    let text = match args.format {
        Format::Ascii => cosetlab::to_ascii(
            &graph,
            &boards,
            match args.cells {
                Cells::Size => CellStyle::TileSize,
                Cells::Reps => CellStyle::Representatives,
            },
        ),
        Format::Dot => cosetlab::to_dot(&graph, &boards),
        _ => return Err(usage("chessboard supports --format ascii or dot")),
    };
    emit(&args.output, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn transversal_text(section: &TransversalSection) -> String {
    let mut out = format!("kind: {}\nT = {}\n", section.kind, section.elements.join(" "));
    if !section.extension.is_empty() {
        out.push_str(&format!("extension = {}\n", section.extension.join(" ")));
    }
    out.push_str(&format!(
        "verified: {}\n",
        if section.verified { "true" } else { "false" }
    ));
    out
}

fn run_transversal(args: TransversalArgs) -> Result<ExitCode, Failure> {
    let (group, h, k) = load_triple(&args.source, &args.subgroups)?;
    let mode = TransversalMode::parse(&args.mode)?;
    let section = transversal_section(&group, &h, &k, mode)?;
    let text = match args.format {
        Format::Text => transversal_text(&section),
        Format::Json => to_json(&section)?,
        _ => return Err(usage("transversal supports --format text or json")),
    };
    emit(&args.output, &text)?;
    Ok(if section.verified {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_counts(args: CountsArgs) -> Result<ExitCode, Failure> {
    let (group, h, k) = load_triple(&args.source, &args.subgroups)?;
    let g = Permutation::parse_cycles(&args.g, group.degree())?;
    let report = cosetlab::full_count_report(&group, &h, &k, &g)?;
    let text = match args.format {
        Format::Text => format!(
            "g = {}\nright cosets of K meeting gH: direct={} by_order={} by_index={}\nleft cosets of H meeting Kg: direct={} by_order={}\n",
            report.g,
            report.m_direct,
            report.m_by_order,
            report.m_by_index,
            report.symmetric_direct,
            report.symmetric_by_order
        ),
        Format::Json => to_json(&serde_json::json!({
            "g": report.g.to_cycles(),
            "m_direct": report.m_direct,
            "m_by_order": report.m_by_order,
            "m_by_index": report.m_by_index,
            "symmetric_direct": report.symmetric_direct,
            "symmetric_by_order": report.symmetric_by_order,
        }))?,
        _ => return Err(usage("counts supports --format text or json")),
    };
    emit(&args.output, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn run_catalog(args: CatalogArgs) -> Result<ExitCode, Failure> {
    let (group, _) = load_group_source(&args.source)?;
    let family = args.source.family.as_deref().unwrap_or("group");
    let mut text = format!("# {} group of order {}\n", family, group.order());
    text.push_str(&format_group_file(&group));
    emit(&args.output, &text)?;
    Ok(ExitCode::SUCCESS)
}
