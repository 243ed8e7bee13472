//! Command-line surface: enumeration, classification, traces, occurrence
//! constructions, admissibility checks, and knowledge-base maintenance.
//!
//! Exit codes: 0 on success (verdicts never change it), 2 for bad input
//! or flags, 3 for knowledge-base failures.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use cdg_core::admissible::{
    check_normal_sylow_hypothesis, vertex_admissible, vertex_strongly_admissible, TriValue,
};
use cdg_core::construct;
use cdg_core::factor;
use cdg_core::fixtures;
use cdg_core::graph::Graph;
use cdg_core::kb::{self, KnowledgeBase};
use cdg_core::verdict::{Certificate, StepBody, VerdictRecord};
use cdg_core::Classifier;

use crate::{dot, format, json, kbfile};

const KB_ENV: &str = "CDG_KB";

/// Writes to stdout without panicking when the reader goes away (for
/// example `cdg report --n 6 | head`): a broken pipe ends the process
/// quietly with status 0, any other write failure with status 1.
fn handle_stdout_error(e: std::io::Error) -> ! {
    if e.kind() == std::io::ErrorKind::BrokenPipe {
        std::process::exit(0);
    }
    eprintln!("error: cannot write to stdout: {e}");
    std::process::exit(1);
}

macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if let Err(e) = write!(std::io::stdout(), $($arg)*) {
            handle_stdout_error(e);
        }
    }};
}

macro_rules! outln {
    () => { out!("\n") };
    ($($arg:tt)*) => {{
        use std::io::Write;
        if let Err(e) = writeln!(std::io::stdout(), $($arg)*) {
            handle_stdout_error(e);
        }
    }};
}

#[derive(Parser)]
#[command(
    name = "cdg",
    version,
    about = "Classify small graphs as prime character degree graphs of solvable groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream every isomorphism class on n vertices, one per line
    Enumerate {
        /// Vertex count (1..=8)
        #[arg(long)]
        n: u8,
        /// Keep only connected graphs
        #[arg(long)]
        connected: bool,
    },
    /// Classify one graph: verdict plus justification trace
    Classify {
        #[command(flatten)]
        input: GraphInput,
        /// Emit the report-entry JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Print the detailed justification trace for one graph
    Explain {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Classify every class on n vertices and print the report
    Report {
        /// Vertex count (1..=7)
        #[arg(long)]
        n: u8,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
        /// Write one DOT file per graph into this directory
        #[arg(long = "dot-dir", value_name = "DIR", conflicts_with = "json")]
        dot_dir: Option<PathBuf>,
    },
    /// Search for a field certificate realizing two complete components
    Construct {
        /// Component sizes, e.g. 1,5
        #[arg(long, value_name = "A,B")]
        components: String,
    },
    /// Join graphs read from files and print the result
    Join {
        /// Two or more graph files
        files: Vec<PathBuf>,
    },
    /// Check whether a vertex is (strongly) admissible
    Admissible {
        #[command(flatten)]
        input: GraphInput,
        /// Vertex, e.g. p4 or 4
        #[arg(long)]
        vertex: String,
        /// Check strong admissibility
        #[arg(long)]
        strong: bool,
    },
    /// Evaluate the five normal-Sylow conditions at a pivot vertex
    Hypothesis28 {
        #[command(flatten)]
        input: GraphInput,
        /// Pivot vertex, e.g. p2 or 2
        #[arg(long)]
        vertex: String,
    },
    /// Knowledge-base maintenance
    Kb {
        #[command(subcommand)]
        action: KbAction,
    },
}

#[derive(Subcommand)]
enum KbAction {
    /// Print the active knowledge base in the line format
    Dump,
    /// Re-check every record invariant and certificate
    Verify {
        /// Knowledge-base file (defaults to $CDG_KB, then the built-in seed)
        path: Option<PathBuf>,
    },
}

/// One graph, from a file, an inline string, or the built-in catalog.
#[derive(Args)]
struct GraphInput {
    /// Graph file in the cdg1 format
    file: Option<PathBuf>,
    /// Inline graph, e.g. "n=3;edges=1-2,2-3"
    #[arg(long, conflicts_with = "file")]
    inline: Option<String>,
    /// Built-in graph name, e.g. FIG1 or FIG5_III
    #[arg(long, conflicts_with_all = ["file", "inline"])]
    fixture: Option<String>,
}

enum CliError {
    /// Bad graph input or flags: exit 2.
    Input(String),
    /// Knowledge-base failure: exit 3.
    Kb(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Kb(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Kb(m) => m,
        }
    }
}

impl GraphInput {
    fn resolve(&self) -> Result<Graph, CliError> {
        match (&self.file, &self.inline, &self.fixture) {
            (Some(path), None, None) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
                format::parse(&text)
                    .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
            }
            (None, Some(text), None) => {
                format::parse(text).map_err(|e| CliError::Input(format!("--inline: {e}")))
            }
            (None, None, Some(name)) => fixtures::by_name(name)
                .ok_or_else(|| CliError::Input(format!("unknown fixture {name:?}"))),
            _ => Err(CliError::Input(
                "provide exactly one of: a graph file, --inline, or --fixture".into(),
            )),
        }
    }
}

fn parse_vertex(text: &str) -> Result<u8, CliError> {
    let trimmed = text.trim();
    let digits = trimmed.strip_prefix('p').unwrap_or(trimmed);
    digits
        .parse()
        .map_err(|_| CliError::Input(format!("invalid vertex {text:?}, expected e.g. p4")))
}

/// Active knowledge base: the `CDG_KB` file when set, the built-in seed
/// otherwise.
fn active_kb() -> Result<KnowledgeBase, CliError> {
    match std::env::var_os(KB_ENV) {
        Some(path) => kbfile::load_path(Path::new(&path))
            .map_err(|e| CliError::Kb(format!("{}: {e}", Path::new(&path).display()))),
        None => Ok(kb::seed()),
    }
}

/// Parses argv and runs; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.code()
        }
    }
}

fn dispatch(command: Command) -> Result<(), CliError> {
    match command {
        Command::Enumerate { n, connected } => cmd_enumerate(n, connected),
        Command::Classify { input, json } => cmd_classify(&input, json),
        Command::Explain { input } => cmd_explain(&input),
        Command::Report { n, json, dot_dir } => cmd_report(n, json, dot_dir.as_deref()),
        Command::Construct { components } => cmd_construct(&components),
        Command::Join { files } => cmd_join(&files),
        Command::Admissible {
            input,
            vertex,
            strong,
        } => cmd_admissible(&input, &vertex, strong),
        Command::Hypothesis28 { input, vertex } => cmd_hypothesis(&input, &vertex),
        Command::Kb { action } => match action {
            KbAction::Dump => cmd_kb_dump(),
            KbAction::Verify { path } => cmd_kb_verify(path.as_deref()),
        },
    }
}

fn cmd_enumerate(n: u8, connected: bool) -> Result<(), CliError> {
    if n == 8 {
        eprintln!(
            "warning: n=8 canonicalizes under 8! relabelings per candidate; this may take a while"
        );
    }
    let universe =
        cdg_core::enumerate_graphs(n, connected).map_err(|e| CliError::Input(e.to_string()))?;
    for g in universe.iter() {
        outln!("{}", format::emit_inline(g));
    }
    outln!("count={}", universe.len());
    Ok(())
}

fn render_certificate_details(cert: &Certificate, indent: &str) -> String {
    let mut out = String::new();
    match cert {
        Certificate::Field(fc) => {
            let large = fc.degrees.largest();
            if let Ok(primes) = factor::factorize(large) {
                let product = primes
                    .iter()
                    .map(u64::to_string)
                    .collect::<Vec<_>>()
                    .join(" * ");
                out.push_str(&format!("{indent}{large} = {product}\n"));
            }
            if let Ok((g, primes)) = construct::degree_set_to_graph(&fc.degrees) {
                let parts: Vec<String> = g
                    .connected_components()
                    .iter()
                    .map(|c| {
                        let ps: Vec<String> = c
                            .iter()
                            .map(|v| primes[(v - 1) as usize].to_string())
                            .collect();
                        format!("{{{}}}", ps.join(","))
                    })
                    .collect();
                out.push_str(&format!(
                    "{indent}prime components: {}\n",
                    parts.join(" | ")
                ));
            }
        }
        Certificate::Join { factors } => {
            for f in factors {
                out.push_str(&format!(
                    "{indent}factor {} = {} -> {}\n",
                    f.key,
                    format::emit_inline(&f.key.to_graph()),
                    f.record.verdict
                ));
            }
        }
        Certificate::Literature { .. } => {}
    }
    out
}

fn print_record_text(g: &Graph, record: &VerdictRecord) {
    outln!("graph: {}", format::emit_inline(g));
    outln!("key: {}", g.canonical_form());
    outln!("verdict: {}", record.verdict);
    if let Some(cert) = &record.certificate {
        outln!("certificate: {cert}");
    }
    outln!("justification:");
    for (i, step) in record.justification.steps.iter().enumerate() {
        outln!("  {}. {step}", i + 1);
        if let StepBody::Certificate(cert) = &step.body {
            out!("{}", render_certificate_details(cert, "     "));
        }
    }
}

fn cmd_classify(input: &GraphInput, as_json: bool) -> Result<(), CliError> {
    let g = input.resolve()?;
    let seed = active_kb()?;
    let mut cls = Classifier::new(&seed);
    let record = cls.classify(&g);
    if as_json {
        let entry = json::GraphEntryDto::for_graph(&g, &record);
        outln!(
            "{}",
            serde_json::to_string_pretty(&entry).expect("serializable")
        );
    } else {
        print_record_text(&g, &record);
    }
    Ok(())
}

fn cmd_explain(input: &GraphInput) -> Result<(), CliError> {
    let g = input.resolve()?;
    let seed = active_kb()?;
    let mut cls = Classifier::new(&seed);
    let record = cls.classify(&g);
    print_record_text(&g, &record);
    Ok(())
}

fn cmd_report(n: u8, as_json: bool, dot_dir: Option<&Path>) -> Result<(), CliError> {
    if !(1..=7).contains(&n) {
        return Err(CliError::Input(format!(
            "report supports n in 1..=7, got {n}"
        )));
    }
    let seed = active_kb()?;
    let mut cls = Classifier::new(&seed);
    let report = cls
        .classify_all(n)
        .map_err(|e| CliError::Input(e.to_string()))?;
    if let Some(dir) = dot_dir {
        std::fs::create_dir_all(dir)
            .map_err(|e| CliError::Input(format!("cannot create {}: {e}", dir.display())))?;
        for (key, _) in &report.per_graph {
            let path = dir.join(format!("{}.dot", key.hex()));
            std::fs::write(&path, dot::emit(&key.to_graph()))
                .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?;
        }
    }
    if as_json {
        let dto = json::ReportDto::from_core(&report);
        outln!(
            "{}",
            serde_json::to_string_pretty(&dto).expect("serializable")
        );
        return Ok(());
    }
    outln!(
        "classification of the {} isomorphism classes on {} vertices",
        report.total(),
        report.n
    );
    outln!(
        "verdicts: OCCURS={} DOES_NOT_OCCUR={} UNKNOWN={}",
        report.occurs, report.does_not_occur, report.unknown
    );
    outln!();
    for (key, record) in &report.per_graph {
        let rule = record
            .justification
            .steps
            .last()
            .map(|s| s.rule.as_str())
            .unwrap_or("-");
        outln!(
            "{}  {:<14}  {:<18}  {}",
            key.hex(),
            record.verdict.as_str(),
            rule,
            format::emit_inline(&key.to_graph())
        );
    }
    outln!();
    let p = &report.pipeline;
    outln!(
        "pipeline: connected={} palfy={} post_diameter={} joins={} eliminated={} unknown={}",
        p.connected, p.palfy, p.post_diameter, p.joins, p.eliminated, p.unknown
    );
    Ok(())
}

fn cmd_construct(components: &str) -> Result<(), CliError> {
    let (a_text, b_text) = components
        .split_once(',')
        .ok_or_else(|| CliError::Input(format!("--components expects A,B, got {components:?}")))?;
    let a: u8 = a_text
        .trim()
        .parse()
        .map_err(|_| CliError::Input(format!("invalid size {a_text:?}")))?;
    let b: u8 = b_text
        .trim()
        .parse()
        .map_err(|_| CliError::Input(format!("invalid size {b_text:?}")))?;
    let (small, large) = if a <= b { (a, b) } else { (b, a) };
    let hit = construct::search_field_certificate(small, large)
        .map_err(|e| CliError::Input(e.to_string()))?;
    match hit {
        Some(cert) => {
            outln!("FIELD(q={}, n={})", cert.q, cert.exponent);
            outln!("degrees: {}", cert.degrees);
            out!(
                "{}",
                render_certificate_details(&Certificate::Field(cert), "")
            );
        }
        None => {
            if (large as u32) < (1u32 << small) - 1 {
                outln!(
                    "none (component sizes ({small},{large}) violate the size inequality: {large} < 2^{small}-1 = {})",
                    (1u32 << small) - 1
                );
            } else {
                outln!("none (search budget exhausted)");
            }
        }
    }
    Ok(())
}

fn cmd_join(files: &[PathBuf]) -> Result<(), CliError> {
    if files.len() < 2 {
        return Err(CliError::Input(
            "join needs at least two graph files".into(),
        ));
    }
    let mut parts = Vec::with_capacity(files.len());
    for path in files {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        parts.push(
            format::parse(&text)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?,
        );
    }
    let joined = construct::join_graphs(&parts).map_err(|e| CliError::Input(e.to_string()))?;
    out!("{}", format::emit(&joined));
    Ok(())
}

fn cmd_admissible(input: &GraphInput, vertex: &str, strong: bool) -> Result<(), CliError> {
    let g = input.resolve()?;
    let v = parse_vertex(vertex)?;
    let seed = active_kb()?;
    let mut cls = Classifier::new(&seed);
    let result = if strong {
        vertex_strongly_admissible(&g, v, &mut cls)
    } else {
        vertex_admissible(&g, v, &mut cls)
    }
    .map_err(|e| CliError::Input(e.to_string()))?;
    outln!("graph: {}", format::emit_inline(&g));
    let kind = if strong {
        "strongly admissible"
    } else {
        "admissible"
    };
    outln!("vertex p{v}: {kind} = {}", result.value);
    match result.value {
        TriValue::Yes => outln!(
            "checked {} subgraphs, all eliminated:",
            result.evidence.len()
        ),
        TriValue::No => outln!("an occurring subgraph:"),
        TriValue::Unknown => outln!("open subgraphs blocking the check:"),
    }
    for ev in &result.evidence {
        outln!(
            "  - {}: {}  ({})",
            ev.operation,
            ev.verdict,
            format::emit_inline(&ev.graph)
        );
    }
    Ok(())
}

fn cmd_hypothesis(input: &GraphInput, vertex: &str) -> Result<(), CliError> {
    let g = input.resolve()?;
    let v = parse_vertex(vertex)?;
    let seed = active_kb()?;
    let mut cls = Classifier::new(&seed);
    let report = check_normal_sylow_hypothesis(&g, v, &mut cls)
        .map_err(|e| CliError::Input(e.to_string()))?;
    outln!("graph: {}", format::emit_inline(&g));
    outln!(
        "pivot p{}: neighbors {}, non-neighbors {}",
        report.pivot, report.neighbors, report.non_neighbors
    );
    for (label, cond) in ["(i)", "(ii)", "(iii)", "(iv)", "(v)"]
        .iter()
        .zip(report.conditions.iter())
    {
        outln!("{label} {} - {}", cond.status, cond.detail);
    }
    outln!("complete cases (pi* u rho* -> tau):");
    for case in &report.clique_cases {
        outln!("  {} u {} -> {}", case.pi_star, case.rho_star, case.tau);
    }
    if report.all_hold() {
        outln!("all five conditions hold");
    }
    Ok(())
}

fn cmd_kb_dump() -> Result<(), CliError> {
    let kb = active_kb()?;
    out!("{}", kbfile::store(&kb));
    Ok(())
}

fn cmd_kb_verify(path: Option<&Path>) -> Result<(), CliError> {
    let kb = match path {
        Some(p) => {
            kbfile::load_path(p).map_err(|e| CliError::Kb(format!("{}: {e}", p.display())))?
        }
        None => active_kb()?,
    };
    match kb::verify(&kb) {
        Ok(count) => {
            outln!("ok: {count} records verified");
            Ok(())
        }
        Err(message) => Err(CliError::Kb(message)),
    }
}
