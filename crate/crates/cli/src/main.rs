use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use ipfactor::bounds::{ck_lower, glue_lower_bound, rho_tree, rho_tree_recurrence, BoundReport, GlueDecomposition};
use ipfactor::census::{census_reader, CensusMode, CensusOptions};
use ipfactor::constructive::{construct, Certificate, ConstructError, Method};
use ipfactor::exact::{rho_exact, Budget, SolveResult};
use ipfactor::families::FamilySpec;
use ipfactor::graph::adjlist::{parse_adjlist, write_adjlist};
use ipfactor::graph::graph6::{parse_graph6, write_graph6};
use ipfactor::{Edge, Graph, Ipf};
use serde::Deserialize;
use serde_json::json;
use std::io::{BufRead, BufReader, Read, Write};
use std::process::ExitCode;

const OK: u8 = 0;
const USAGE: u8 = 1;
const VIOLATION: u8 = 2;
const BUDGET: u8 = 3;

/// Largest graph the `auto` method hands to the exact solver.
const AUTO_EXACT_CAP: usize = 40;

#[derive(Parser)]
#[command(name = "ipf", version, about = "Induced path factors of subcubic graphs")]
struct Cli {
    #[command(flatten)]
    io: Io,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Io {
    /// Input file, or "-" for stdin
    #[arg(long, global = true, default_value = "-")]
    input: String,
    #[arg(long, global = true, value_enum, default_value = "graph6")]
    format: Format,
    /// Output file; stdout if absent
    #[arg(long, global = true)]
    output: Option<String>,
    #[arg(long, global = true)]
    json: bool,
    /// Leave out timing and other run-dependent fields
    #[arg(long, global = true)]
    stable: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Adjlist,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Cubic,
    Ham23,
    Blocktree,
    #[value(name = "2factor")]
    TwoFactor,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    VerifyTheorem,
    ExactRho,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Exact induced path number
    Solve {
        /// Search node limit
        #[arg(long, env = "IPF_BUDGET", default_value_t = 100_000_000)]
        budget: u64,
    },
    /// Build an IPF within the (n-1)/3 bound and certify it
    Construct {
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
        #[arg(long, env = "IPF_BUDGET", default_value_t = 100_000_000)]
        budget: u64,
    },
    /// Check an IPF file or certificate against its graph
    Verify,
    /// Write a member of a named family
    Generate {
        #[arg(long)]
        family: String,
        /// Comma-separated key=value pairs, e.g. "k=3,h=2"
        #[arg(long, default_value = "")]
        params: String,
    },
    /// Process a stream of graph6 lines
    Census {
        #[arg(long, value_enum, default_value = "both")]
        mode: ModeArg,
        /// Worker threads (0 = one per core)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, env = "IPF_BUDGET", default_value_t = 100_000_000)]
        budget: u64,
        /// Also print one certificate per graph
        #[arg(long)]
        certificates: bool,
    },
    /// Closed-form values and lower bounds
    Bounds {
        /// Lower bound on c_k
        #[arg(long, value_name = "K")]
        ck: Option<u32>,
        /// ρ of the perfect (k-1)-ary tree: K,H
        #[arg(long, value_name = "K,H", value_parser = parse_pair)]
        tree: Option<(u32, u32)>,
        /// Gluing lower bound for the input graph
        #[arg(long)]
        glue: bool,
    },
}

fn parse_pair(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s.split_once(',').ok_or("expected K,H")?;
    let p = |x: &str| x.trim().parse::<u32>().map_err(|e| e.to_string());
    Ok((p(a)?, p(b)?))
}

/// Where output goes; everything is buffered and written at the end.
struct Out {
    buf: String,
}

impl Out {
    fn line(&mut self, s: impl AsRef<str>) {
        self.buf.push_str(s.as_ref());
        self.buf.push('\n');
    }
    fn json(&mut self, v: &serde_json::Value) {
        self.line(serde_json::to_string(v).expect("values serialize"));
    }
}

fn read_input(path: &str) -> Result<String> {
    let mut s = String::new();
    if path == "-" {
        std::io::stdin().read_to_string(&mut s)?;
    } else {
        s = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    }
    Ok(s)
}

fn open_input(path: &str) -> Result<Box<dyn BufRead>> {
    Ok(if path == "-" {
        Box::new(BufReader::new(std::io::stdin()))
    } else {
        Box::new(BufReader::new(
            std::fs::File::open(path).with_context(|| format!("opening {path}"))?,
        ))
    })
}

fn read_graphs(io: &Io) -> Result<Vec<Graph>> {
    let text = read_input(&io.input)?;
    match io.format {
        Format::Adjlist => Ok(vec![parse_adjlist(&text)?]),
        Format::Graph6 => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| parse_graph6(l.trim()).with_context(|| format!("line {}", i + 1)))
            .collect(),
    }
}

fn g6(g: &Graph) -> String {
    write_graph6(g).unwrap_or_default()
}

fn paths_text(out: &mut Out, ipf: &Ipf) {
    for p in &ipf.paths {
        let vs: Vec<String> = p.iter().map(|v| v.to_string()).collect();
        out.line(format!("  {}", vs.join(" ")));
    }
}

fn solve_one(out: &mut Out, io: &Io, g: &Graph, budget: u64) -> Result<u8> {
    let r: SolveResult = rho_exact(g, Budget::nodes(budget))?;
    if io.json {
        let mut v = json!({
            "graph6": g6(g),
            "n": g.n(),
            "rho": r.rho,
            "optimal": r.optimal,
            "ipf": r.witness,
        });
        if !io.stable {
            v["nodes"] = json!(r.stats.nodes);
            v["elapsed_ms"] = json!(r.stats.elapsed.as_secs_f64() * 1e3);
        }
        out.json(&v);
    } else {
        out.line(format!("graph6   {}", g6(g)));
        out.line(format!("n        {}", g.n()));
        let tag = if r.optimal { "" } else { " (upper bound, budget exhausted)" };
        out.line(format!("rho      {}{tag}", r.rho));
        if !io.stable {
            out.line(format!("nodes    {}", r.stats.nodes));
            out.line(format!("time     {:.3} ms", r.stats.elapsed.as_secs_f64() * 1e3));
        }
        out.line("paths");
        paths_text(out, &r.witness);
    }
    Ok(if r.optimal { OK } else { BUDGET })
}

fn certificate_text(out: &mut Out, c: &Certificate) {
    out.line(format!("graph6   {}", c.graph6));
    out.line(format!("n        {}", c.n));
    out.line(format!("bound    {} = {}", c.bound.as_str(), c.bound.value(c.n)));
    out.line(format!("paths    {}", c.ipf.path_count));
    paths_text(out, &c.ipf);
    out.line(format!("trace    {}", c.trace.join(", ")));
    out.line(format!("verified {}", if c.verified { "yes" } else { "NO" }));
}

fn construct_one(out: &mut Out, io: &Io, g: &Graph, method: MethodArg, budget: u64) -> Result<u8> {
    let m = match method {
        MethodArg::Cubic => Method::Cubic,
        MethodArg::Ham23 => Method::Ham23,
        MethodArg::Blocktree => Method::Blocktree,
        MethodArg::TwoFactor => Method::TwoFactor,
        MethodArg::Auto => Method::Auto,
    };
    match construct(g, m) {
        Ok(c) => {
            if io.json {
                out.json(&serde_json::to_value(&c)?);
            } else {
                certificate_text(out, &c);
            }
            Ok(if c.verified { OK } else { VIOLATION })
        }
        Err(ConstructError::Precondition(why)) if matches!(method, MethodArg::Auto) && g.n() <= AUTO_EXACT_CAP => {
            eprintln!("no construction applies ({why}); using the exact solver");
            solve_one(out, io, g, budget)
        }
        Err(e @ ConstructError::Precondition(_)) => Err(anyhow!(e)),
        Err(e) => {
            eprintln!("error: {e}");
            Ok(VIOLATION)
        }
    }
}

/// `{"graph6": ..., "edges": [[u, v], ...]}`, or a certificate whose `ipf`
/// holds the edges.
#[derive(Deserialize)]
struct IpfFile {
    graph6: String,
    #[serde(default)]
    edges: Option<Vec<[usize; 2]>>,
    #[serde(default)]
    ipf: Option<EdgesOnly>,
}

#[derive(Deserialize)]
struct EdgesOnly {
    edges: Vec<[usize; 2]>,
}

fn verify(out: &mut Out, io: &Io) -> Result<u8> {
    let text = read_input(&io.input)?;
    let mut worst = OK;
    let docs = serde_json::Deserializer::from_str(&text).into_iter::<IpfFile>();
    for doc in docs {
        let f = doc.context("reading IPF file")?;
        let g = parse_graph6(&f.graph6)?;
        let edges = f
            .edges
            .or(f.ipf.map(|i| i.edges))
            .ok_or_else(|| anyhow!("no edge list"))?;
        let edges = edges.into_iter().map(|[a, b]| Edge::new(a, b));
        match Ipf::new(&g, edges) {
            Ok(p) => {
                if io.json {
                    out.json(&json!({"graph6": f.graph6, "valid": true, "path_count": p.path_count}));
                } else {
                    out.line(format!("{}: valid, {} paths", f.graph6, p.path_count));
                }
            }
            Err(e) => {
                if io.json {
                    out.json(&json!({"graph6": f.graph6, "valid": false, "error": e.to_string()}));
                } else {
                    out.line(format!("{}: invalid, {e}", f.graph6));
                }
                worst = VIOLATION;
            }
        }
    }
    Ok(worst)
}

fn generate(out: &mut Out, io: &Io, family: &str, params: &str) -> Result<u8> {
    let spec = FamilySpec::parse(family, params)?;
    let gen = spec.generate()?;
    let g = &gen.graph;
    if io.json {
        out.json(&json!({
            "family": family,
            "params": params,
            "n": g.n(),
            "graph6": g6(g),
            "deficient_root": gen.deficient_root,
        }));
    } else {
        match io.format {
            Format::Graph6 => out.line(g6(g)),
            Format::Adjlist => out.buf.push_str(&write_adjlist(g)),
        }
    }
    Ok(OK)
}

fn census(out: &mut Out, io: &Io, mode: ModeArg, jobs: usize, budget: u64, certificates: bool) -> Result<u8> {
    let opts = CensusOptions {
        mode: match mode {
            ModeArg::VerifyTheorem => CensusMode::VerifyTheorem,
            ModeArg::ExactRho => CensusMode::ExactRho,
            ModeArg::Both => CensusMode::Both,
        },
        jobs,
        budget: Budget::nodes(budget),
    };
    let res = census_reader(open_input(&io.input)?, &opts);
    let r = &res.report;
    for e in &r.errors {
        eprintln!("line {}: {}", e.line, e.message);
    }
    if certificates {
        for c in res.entries.iter().filter_map(|e| e.certificate.as_ref()) {
            if io.json {
                out.json(&serde_json::to_value(c)?);
            } else {
                certificate_text(out, c);
                out.line("");
            }
        }
    }
    if io.json {
        out.json(&serde_json::to_value(r)?);
    } else {
        out.line(format!("graphs processed  {}", r.graphs_processed));
        out.line(format!("skipped           {}", r.skipped));
        out.line(format!("input errors      {}", r.errors.len()));
        out.line(format!("budget exhausted  {}", r.budget_exhausted.len()));
        out.line(format!("violations        {}", r.violations.len()));
        for v in &r.violations {
            out.line(format!("  line {} {}: {}", v.line, v.graph6, v.what));
        }
        if !r.rho_histogram.is_empty() {
            out.line("n    max rho  histogram");
            for (n, h) in &r.rho_histogram {
                let cells: Vec<String> = h.iter().map(|(rho, c)| format!("{rho}:{c}")).collect();
                out.line(format!("{n:<4} {:<8} {}", r.n_to_max_rho[n], cells.join(" ")));
            }
        }
    }
    Ok(if !r.violations.is_empty() {
        VIOLATION
    } else if !r.budget_exhausted.is_empty() {
        BUDGET
    } else if !r.errors.is_empty() {
        USAGE
    } else {
        OK
    })
}

fn bound_line(out: &mut Out, io: &Io, label: &str, b: &BoundReport) -> Result<()> {
    if io.json {
        out.json(&serde_json::to_value(b)?);
    } else {
        out.line(format!("{label} {}", b.value));
    }
    Ok(())
}

fn bounds(out: &mut Out, io: &Io, ck: Option<u32>, tree: Option<(u32, u32)>, glue: bool) -> Result<u8> {
    if ck.is_none() && tree.is_none() && !glue {
        bail!("bounds needs --ck, --tree or --glue");
    }
    if let Some(k) = ck {
        let b = ck_lower(k)?;
        if io.json {
            bound_line(out, io, "", &b)?;
        } else {
            out.line(b.value.to_string());
        }
    }
    if let Some((k, h)) = tree {
        let closed = rho_tree(k, h)?;
        let rec = rho_tree_recurrence(k, h)?;
        bound_line(out, io, "closed form", &closed)?;
        bound_line(out, io, "recurrence ", &rec)?;
        if closed.value != rec.value {
            return Ok(VIOLATION);
        }
    }
    if glue {
        for g in read_graphs(io)? {
            let b = glue_lower_bound(&g, &GlueDecomposition::coarse_blocks(&g))?;
            if io.json {
                out.json(&json!({"graph6": g6(&g), "n": g.n(), "bound": b.bound, "part_rho": b.part_rho}));
            } else {
                out.line(format!("{}: rho >= {}", g6(&g), b.bound));
            }
        }
    }
    Ok(OK)
}

fn run(cli: &Cli, out: &mut Out) -> Result<u8> {
    let io = &cli.io;
    match &cli.command {
        Command::Solve { budget } => {
            let mut worst = OK;
            for g in read_graphs(io)? {
                worst = worst.max(solve_one(out, io, &g, *budget)?);
            }
            Ok(worst)
        }
        Command::Construct { method, budget } => {
            let mut worst = OK;
            for g in read_graphs(io)? {
                worst = worst.max(construct_one(out, io, &g, *method, *budget)?);
            }
            Ok(worst)
        }
        Command::Verify => verify(out, io),
        Command::Generate { family, params } => generate(out, io, family, params),
        Command::Census {
            mode,
            jobs,
            budget,
            certificates,
        } => census(out, io, *mode, *jobs, *budget, *certificates),
        Command::Bounds { ck, tree, glue } => bounds(out, io, *ck, *tree, *glue),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { OK });
        }
    };
    let mut out = Out { buf: String::new() };
    let code = match run(&cli, &mut out) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e:#}");
            USAGE
        }
    };
    let written = match &cli.io.output {
        Some(path) => std::fs::write(path, &out.buf).with_context(|| format!("writing {path}")),
        None => std::io::stdout().write_all(out.buf.as_bytes()).map_err(Into::into),
    };
    if let Err(e) = written {
        eprintln!("error: {e:#}");
        return ExitCode::from(USAGE);
    }
    ExitCode::from(code)
}
