use std::fs::{self, File};
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cyclepack::enumerate::enumerate_labeled;
use cyclepack::io::{graph6_lines, parse_certificate, parse_edge_list, write_certificate, write_edge_list, write_graph6};
use cyclepack::reduce::{reduce_and_find, Mode};
use cyclepack::scan::OnError;
use cyclepack::solvers::triangle_packing_number;
use cyclepack::theorems::{check_theorem, search_open, ScanOptions};
use cyclepack::{families, Graph, OpenQuestion, Report, Result, TheoremPredicate};
use serde_json::json;

const EXIT_NOT_FOUND: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_FLAG: u8 = 3;

#[derive(Parser)]
#[command(name = "cyclepack", version, about = "Disjoint cycles, degree classes and theorem scans on small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a graph from a built-in family.
    Gen(GenArgs),
    /// Print order, size, minimum degree, degree classes, triangle packing number and planarity.
    Analyze(AnalyzeArgs),
    /// Search for k disjoint cycles and print them as a certificate.
    Find(FindArgs),
    /// Check a certificate of disjoint cycles against a graph.
    Verify(VerifyArgs),
    /// Scan a graph stream for counterexamples to a theorem.
    Theorem(TheoremArgs),
    /// Scan a graph stream for graphs answering an open question negatively.
    SearchOpen(SearchOpenArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    G6,
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Complete,
    Cycle,
    Path,
    Sk,
    Gnk,
    De,
    Kky,
    Wheel,
    Remark8,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Aggressive,
}

#[derive(Args)]
struct Input {
    /// Input file, or `-` for stdin.
    #[arg(long, default_value = "-")]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "g6")]
    format: Format,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value = "g6")]
    format: Format,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[arg(long)]
    k: usize,
    #[command(flatten)]
    input: Input,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct FindArgs {
    #[arg(long)]
    k: usize,
    #[command(flatten)]
    input: Input,
    #[arg(long, value_enum, default_value = "exact")]
    mode: ModeArg,
    /// Print the reduction steps to stderr.
    #[arg(long)]
    trace: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Required number of cycles; defaults to the number in the certificate.
    #[arg(long)]
    k: Option<usize>,
    #[command(flatten)]
    input: Input,
    #[arg(long)]
    cert: PathBuf,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long)]
    k: usize,
    #[command(flatten)]
    input: Input,
    /// Scan every labeled graph on N vertices instead of reading input. Repeatable.
    #[arg(long, value_name = "N")]
    enumerate: Vec<usize>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long)]
    json: bool,
    /// Report unreadable inputs and continue instead of stopping.
    #[arg(long)]
    skip_errors: bool,
    /// Evaluate even when k lies outside the statement's range.
    #[arg(long)]
    force_k: bool,
}

#[derive(Args)]
struct TheoremArgs {
    #[arg(long)]
    name: TheoremPredicate,
    #[command(flatten)]
    scan: ScanArgs,
}

#[derive(Args)]
struct SearchOpenArgs {
    #[arg(long)]
    which: OpenQuestion,
    #[command(flatten)]
    scan: ScanArgs,
}

fn open(path: &PathBuf) -> Result<Box<dyn BufRead>> {
    if path.as_os_str() == "-" {
        return Ok(Box::new(BufReader::new(io::stdin())));
    }
    File::open(path)
        .map(|f| Box::new(BufReader::new(f)) as Box<dyn BufRead>)
        .map_err(|e| cyclepack::Error::Precondition(format!("cannot open {}: {e}", path.display())))
}

fn read_graphs(input: &Input) -> Result<Box<dyn Iterator<Item = Result<Graph>>>> {
    let mut reader = open(&input.input)?;
    Ok(match input.format {
        Format::G6 => Box::new(graph6_lines(reader)),
        Format::Edges => {
            let mut text = String::new();
            reader
                .read_to_string(&mut text)
                .map_err(|e| cyclepack::Error::Precondition(format!("cannot read input: {e}")))?;
            Box::new(std::iter::once(parse_edge_list(&text)))
        }
    })
}

fn read_one(input: &Input) -> Result<Graph> {
    let mut graphs = read_graphs(input)?;
    let g = graphs.next().ok_or_else(|| cyclepack::Error::Precondition("no graph on input".into()))??;
    if graphs.next().is_some() {
        return Err(cyclepack::Error::Precondition("expected a single graph on input".into()));
    }
    Ok(g)
}

fn need(value: Option<usize>, flag: &str, family: &str) -> Result<usize> {
    value.ok_or_else(|| cyclepack::Error::Precondition(format!("family {family} needs --{flag}")))
}

fn gen(args: &GenArgs) -> Result<u8> {
    let (n, m, k) = (args.n, args.m, args.k);
    let g = match args.family {
        Family::Complete => families::complete(need(n, "n", "complete")?),
        Family::Cycle => families::cycle(need(n, "n", "cycle")?)?,
        Family::Path => families::path(need(n, "n", "path")?),
        Family::Sk => families::sk(need(m, "m", "sk")?)?,
        Family::Gnk => families::gnk(need(n, "n", "gnk")?, need(k, "k", "gnk")?)?,
        Family::De => families::de_matching(need(n, "n", "de")?, need(k, "k", "de")?)?,
        Family::Kky => families::kky_exception(need(k, "k", "kky")?)?,
        Family::Wheel => families::wheel(need(n, "n", "wheel")?)?,
        Family::Remark8 => families::remark8(need(k, "k", "remark8")?)?,
    };
    match args.format {
        Format::G6 => println!("{}", write_graph6(&g)),
        Format::Edges => print!("{}", write_edge_list(&g)),
    }
    Ok(0)
}

fn analyze(args: &AnalyzeArgs) -> Result<u8> {
    if args.k == 0 {
        return Err(cyclepack::Error::Precondition("--k must be at least 1".into()));
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for g in read_graphs(&args.input)? {
        let g = g?;
        let classes = g.degree_classes(args.k);
        let delta = g.min_degree().unwrap_or(0);
        let t = triangle_packing_number(&g)?;
        let planar = g.is_planar();
        let line = if args.json {
            json!({
                "graph6": write_graph6(&g),
                "n": g.order(),
                "m": g.size(),
                "delta": delta,
                "h": classes.h(),
                "l": classes.l(),
                "t": t,
                "planar": planar,
            })
            .to_string()
        } else {
            format!("n={} m={} delta={delta} h={} l={} t={t} planar={planar}", g.order(), g.size(), classes.h(), classes.l())
        };
        let _ = writeln!(out, "{line}");
    }
    Ok(0)
}

fn find(args: &FindArgs) -> Result<u8> {
    let g = read_one(&args.input)?;
    let mode = match args.mode {
        ModeArg::Exact => Mode::Exact,
        ModeArg::Aggressive => Mode::Aggressive,
    };
    let reduced = reduce_and_find(&g, args.k, mode)?;
    if args.trace {
        eprint!("{}", reduced.trace);
        eprintln!("kernel n={} m={}", reduced.trace.kernel.order(), reduced.trace.kernel.size());
    }
    if args.json {
        let doc = json!({
            "k": args.k,
            "found": reduced.packing.is_some(),
            "cycles": reduced.packing.as_ref().map(|p| &p.cycles),
            "kernel_order": reduced.trace.kernel.order(),
            "fell_back": reduced.fell_back,
        });
        println!("{doc}");
    }
    match reduced.packing {
        Some(p) => {
            if !args.json {
                print!("{}", write_certificate(&p));
            }
            Ok(0)
        }
        None => {
            if !args.json {
                println!("none");
            }
            Ok(EXIT_NOT_FOUND)
        }
    }
}

fn verify(args: &VerifyArgs) -> Result<u8> {
    let g = read_one(&args.input)?;
    let text = fs::read_to_string(&args.cert)
        .map_err(|e| cyclepack::Error::Precondition(format!("cannot read {}: {e}", args.cert.display())))?;
    let p = parse_certificate(&text)?;
    let k = args.k.unwrap_or(p.len());
    if p.verify(&g, k) {
        println!("valid");
        Ok(0)
    } else {
        println!("invalid");
        Ok(EXIT_NOT_FOUND)
    }
}

fn scan_input(args: &ScanArgs) -> Result<(Box<dyn Iterator<Item = Result<Graph>>>, ScanOptions)> {
    let opts = ScanOptions {
        jobs: args.jobs,
        on_error: if args.skip_errors { OnError::Skip } else { OnError::Fatal },
        force_k: args.force_k,
    };
    if args.enumerate.is_empty() {
        return Ok((read_graphs(&args.input)?, opts));
    }
    let mut chained: Box<dyn Iterator<Item = Result<Graph>>> = Box::new(std::iter::empty());
    for &n in &args.enumerate {
        chained = Box::new(chained.chain(enumerate_labeled(n)?.map(Ok)));
    }
    Ok((chained, opts))
}

fn print_report(report: &Report, json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(report).expect("report serializes"));
        return;
    }
    println!("{}", report.summary());
    for g in &report.violations {
        println!("{g}");
    }
    for s in &report.skipped {
        eprintln!("skipped {s}");
    }
}

fn theorem(args: &TheoremArgs) -> Result<u8> {
    let (graphs, opts) = scan_input(&args.scan)?;
    let report = check_theorem(args.name, args.scan.k, graphs, &opts)?;
    print_report(&report, args.scan.json);
    Ok(if report.passed() { 0 } else { EXIT_NOT_FOUND })
}

fn search(args: &SearchOpenArgs) -> Result<u8> {
    let (graphs, opts) = scan_input(&args.scan)?;
    let report = search_open(args.which, args.scan.k, graphs, &opts)?;
    print_report(&report, args.scan.json);
    Ok(if report.passed() { 0 } else { EXIT_FLAG })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Gen(a) => gen(a),
        Command::Analyze(a) => analyze(a),
        Command::Find(a) => find(a),
        Command::Verify(a) => verify(a),
        Command::Theorem(a) => theorem(a),
        Command::SearchOpen(a) => search(a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
