//! The `tricyclic` command line, as a library so it can be driven in tests.

use std::io::{Read, Write};

use clap::{error::ErrorKind, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use tricyclic_core::enumerate::{enumerate_forms, verify_theorem, EnumerationReport};
use tricyclic_core::families::{build, catalog_sweep, Catalog};
use tricyclic_core::io::{parse_graphs, to_edge_list};
use tricyclic_core::{
    base_type, check_two_walk_linear, CanonicalForm, main_eigen_report, main_eigenvalue_count_exact, to_graph6, BaseType, FamilyId,
    Format, Graph, LinearityVerdict, Strategy,
};

#[derive(Parser, Debug)]
#[command(name = "tricyclic", version, about = "Main eigenvalues and the classification of tricyclic graphs")]
struct Cli {
    /// Cap on worker threads for enumeration and verification.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Emit JSON (one object per line) instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Linearity verdict and main-eigenvalue counts for each input graph.
    Check(InputArgs),
    /// Catalog member isomorphic to each input graph, or "none".
    Classify(InputArgs),
    /// Emit a catalog graph: `H 7`, `G 2 1 0`, `T 1 1 1 1`, or `catalog`.
    Generate {
        /// H, G, T (optionally fused with the index, as in H7) or catalog.
        kind: String,
        params: Vec<String>,
        /// Output encoding.
        #[arg(long, value_enum, default_value_t = FormatArg::Graph6)]
        format: FormatArg,
        /// Largest order emitted by `generate catalog`.
        #[arg(long, default_value_t = 12)]
        max_order: usize,
    },
    /// Every connected tricyclic graph of order `n`, once per isomorphism class.
    Enumerate {
        n: usize,
        #[arg(long, value_enum, default_value_t = StrategyArg::Structured)]
        strategy: StrategyArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Graph6)]
        format: FormatArg,
    },
    /// Compare the catalog with exhaustive enumeration at every order up to the bound.
    Verify {
        #[arg(long, default_value_t = 8)]
        max_order: usize,
        #[arg(long, value_enum, default_value_t = StrategyArg::Structured)]
        strategy: StrategyArg,
        /// Also print every positive graph as graph6.
        #[arg(long)]
        dump_positives: bool,
    },
}

#[derive(clap::Args, Debug)]
struct InputArgs {
    /// Input file; standard input when absent.
    file: Option<std::path::PathBuf>,
    /// Input encoding; detected per input when absent.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FormatArg {
    Graph6,
    EdgeList,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Graph6 => Format::Graph6,
            FormatArg::EdgeList => Format::EdgeList,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum StrategyArg {
    Naive,
    Structured,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Naive => Strategy::Naive,
            StrategyArg::Structured => Strategy::Structured,
        }
    }
}

/// Exit status for success.
pub const EXIT_OK: i32 = 0;
/// Exit status for usage errors and malformed input.
pub const EXIT_INPUT: i32 = 1;
/// Exit status when verification finds a discrepancy.
pub const EXIT_COUNTEREXAMPLE: i32 = 2;

struct Failure(i32, String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(EXIT_INPUT, e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

/// Runs the command line `args` (including the program name) and returns
/// the exit status.
pub fn run(args: &[String], stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{text}");
                    EXIT_INPUT
                }
            };
        }
    };
    let pool = match cli.threads.map(|k| rayon::ThreadPoolBuilder::new().num_threads(k.max(1)).build()).transpose() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_INPUT;
        }
    };
    let result = dispatch(&cli, pool.as_ref(), stdin, stdout);
    match result {
        Ok(code) => code,
        Err(Failure(code, message)) => {
            let _ = writeln!(stderr, "error: {message}");
            code
        }
    }
}

fn in_pool<T: Send>(pool: Option<&rayon::ThreadPool>, f: impl FnOnce() -> T + Send) -> T {
    match pool {
        Some(pool) => pool.install(f),
        None => f(),
    }
}

fn dispatch(cli: &Cli, pool: Option<&rayon::ThreadPool>, stdin: &mut dyn Read, out: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Check(input) => check(&read_graphs(input, stdin)?, cli.json, out),
        Command::Classify(input) => classify(&read_graphs(input, stdin)?, cli.json, out),
        Command::Generate { kind, params, format, max_order } => generate(kind, params, *format, *max_order, out),
        Command::Enumerate { n, strategy, format } => {
            let forms = in_pool(pool, || enumerate_forms(*n, (*strategy).into()))?;
            enumerate(&forms, *format, out)
        }
        Command::Verify { max_order, strategy, dump_positives } => {
            let reports = in_pool(pool, || verify_theorem(*max_order, (*strategy).into()))?;
            verify(&reports, *max_order, (*strategy).into(), *dump_positives, cli.json, out)
        }
    }
}

fn read_graphs(input: &InputArgs, stdin: &mut dyn Read) -> Result<Vec<Graph>, Failure> {
    let text = match &input.file {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Failure(EXIT_INPUT, format!("{}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            s
        }
    };
    let graphs = parse_graphs(&text, input.format.map(Format::from))?;
    if graphs.is_empty() {
        return Err(Failure(EXIT_INPUT, "no graphs in input".into()));
    }
    Ok(graphs)
}

#[derive(Serialize)]
struct CheckRecord<'a> {
    graph6: String,
    order: usize,
    size: usize,
    tricyclic: bool,
    base_type: Option<String>,
    verdict: &'a LinearityVerdict,
    main_eigenvalues_exact: usize,
    main_eigenvalues_float: Option<usize>,
    main_values_float: Vec<f64>,
}

fn check(graphs: &[Graph], json: bool, out: &mut dyn Write) -> Outcome {
    for g in graphs {
        let verdict = check_two_walk_linear(g);
        let report = main_eigen_report(g).ok();
        let tricyclic = g.is_tricyclic();
        let record = CheckRecord {
            graph6: to_graph6(g),
            order: g.order(),
            size: g.size(),
            tricyclic,
            base_type: tricyclic.then(|| base_type(g).ok()).flatten().map(|t: BaseType| t.to_string()),
            verdict: &verdict,
            main_eigenvalues_exact: report.as_ref().map_or_else(|| main_eigenvalue_count_exact(g), |r| r.exact_count),
            main_eigenvalues_float: report.as_ref().map(|r| r.float_count),
            main_values_float: report.map(|r| r.main_values_float).unwrap_or_default(),
        };
        if json {
            writeln!(out, "{}", serde_json::to_string(&record)?)?;
        } else {
            let float = record.main_eigenvalues_float.map_or("unavailable".to_string(), |c| c.to_string());
            writeln!(
                out,
                "{} n={} m={} {} main={} float_main={} tricyclic={} base={}",
                record.graph6,
                record.order,
                record.size,
                verdict,
                record.main_eigenvalues_exact,
                float,
                record.tricyclic,
                record.base_type.as_deref().unwrap_or("-"),
            )?;
        }
    }
    Ok(EXIT_OK)
}

fn classify(graphs: &[Graph], json: bool, out: &mut dyn Write) -> Outcome {
    let max_order = graphs.iter().map(Graph::order).max().unwrap_or(0);
    let catalog = Catalog::up_to(max_order);
    for g in graphs {
        let family = if g.is_tricyclic() { catalog.classify(g) } else { None };
        if json {
            #[derive(Serialize)]
            struct Record {
                graph6: String,
                family: Option<FamilyId>,
            }
            writeln!(out, "{}", serde_json::to_string(&Record { graph6: to_graph6(g), family })?)?;
        } else {
            let label = family.map_or("none".to_string(), |f| f.to_string());
            writeln!(out, "{} {label}", to_graph6(g))?;
        }
    }
    Ok(EXIT_OK)
}

fn emit(g: &Graph, format: FormatArg, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        FormatArg::Graph6 => writeln!(out, "{}", to_graph6(g)),
        FormatArg::EdgeList => write!(out, "{}", to_edge_list(g)),
    }
}

fn parse_numbers(values: &[String]) -> Result<Vec<usize>, Failure> {
    values
        .iter()
        .map(|v| v.parse::<usize>().map_err(|_| Failure(EXIT_INPUT, format!("not a non-negative integer: {v}"))))
        .collect()
}

fn generate(kind: &str, params: &[String], format: FormatArg, max_order: usize, out: &mut dyn Write) -> Outcome {
    if kind.eq_ignore_ascii_case("catalog") {
        for (id, g) in catalog_sweep(max_order) {
            match format {
                FormatArg::Graph6 => writeln!(out, "{} {id}", to_graph6(&g))?,
                FormatArg::EdgeList => {
                    writeln!(out, "# {id}")?;
                    emit(&g, format, out)?;
                }
            }
        }
        return Ok(EXIT_OK);
    }
    let (letter, fused) = kind.split_at(kind.len().min(1));
    let mut numbers = Vec::new();
    if !fused.is_empty() {
        numbers.push(fused.to_string());
    }
    numbers.extend(params.iter().cloned());
    let numbers = parse_numbers(&numbers)?;
    let (&index, rest) = numbers
        .split_first()
        .ok_or_else(|| Failure(EXIT_INPUT, format!("{kind}: missing index")))?;
    let g = match letter.to_ascii_uppercase().as_str() {
        "H" if rest.is_empty() => build(&FamilyId::H(u8::try_from(index).unwrap_or(u8::MAX)))?,
        "H" => return Err(Failure(EXIT_INPUT, "H takes a single index".into())),
        "G" => build(&FamilyId::G { j: u8::try_from(index).unwrap_or(u8::MAX), params: rest.to_vec() })?,
        "T" => {
            let t = BaseType::new(u8::try_from(index).unwrap_or(u8::MAX))?;
            tricyclic_core::build_base(t, rest)?
        }
        _ => return Err(Failure(EXIT_INPUT, format!("unknown kind {kind}; expected H, G, T or catalog"))),
    };
    emit(&g, format, out)?;
    Ok(EXIT_OK)
}

fn enumerate(forms: &std::collections::BTreeSet<CanonicalForm>, format: FormatArg, out: &mut dyn Write) -> Outcome {
    for form in forms {
        match format {
            FormatArg::Graph6 => writeln!(out, "{}", form.as_graph6())?,
            FormatArg::EdgeList => emit(&tricyclic_core::parse_graph6(form.as_graph6())?, format, out)?,
        }
    }
    Ok(EXIT_OK)
}

fn verify(
    reports: &[EnumerationReport],
    max_order: usize,
    strategy: Strategy,
    dump: bool,
    json: bool,
    out: &mut dyn Write,
) -> Outcome {
    let clean = reports.iter().all(|r| r.counterexamples.is_empty() && r.hagos_failures.is_empty());
    if json {
        #[derive(Serialize)]
        struct Summary<'a> {
            max_order: usize,
            strategy: Strategy,
            clean: bool,
            reports: &'a [EnumerationReport],
        }
        let view = Summary {
            max_order,
            strategy,
            clean,
            reports,
        };
        writeln!(out, "{}", serde_json::to_string(&view)?)?;
    } else {
        writeln!(out, "{:>5} {:>8} {:>9} {:>10} {:>15} {:>6} {:>8}", "order", "graphs", "positives", "classified", "counterexamples", "hagos", "audit")?;
        for r in reports {
            writeln!(
                out,
                "{:>5} {:>8} {:>9} {:>10} {:>15} {:>6} {:>8}",
                r.order,
                r.total,
                r.positives,
                r.classified,
                r.counterexamples.len(),
                r.hagos_failures.len(),
                r.lemma_violations.len() + r.g0_long_paths.len(),
            )?;
        }
        for r in reports {
            for g in &r.counterexamples {
                writeln!(out, "counterexample n={} {g}", r.order)?;
            }
            for g in &r.hagos_failures {
                writeln!(out, "hagos-failure n={} {g}", r.order)?;
            }
            for g in &r.float_disagreements {
                writeln!(out, "float-disagreement n={} {g}", r.order)?;
            }
            if dump {
                for g in &r.positive_graphs {
                    writeln!(out, "positive n={} {g}", r.order)?;
                }
            }
        }
        writeln!(out, "{}", if clean { "result: consistent" } else { "result: DISCREPANCY" })?;
    }
    Ok(if clean { EXIT_OK } else { EXIT_COUNTEREXAMPLE })
}
