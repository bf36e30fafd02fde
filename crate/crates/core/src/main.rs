//! `noncomm`: spectra, energies and closed-form checks for non-commuting
//! graphs from the command line.
//!
//! Exit codes: 0 on success, 1 when a check or table cell fails, 2 on
//! usage errors (bad group spec, unknown theorem id, out-of-range flags).

use std::io::Write;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde_json::json;

use noncomm::formulas::{blocks, dihedral, gl2, multipartite, products};
use noncomm::graph::noncommuting_graph;
use noncomm::reference::{reproduce_table1, reproduce_table2, TableRow};
use noncomm::report::{Status, VerificationReport};
use noncomm::spectra::{matrix_spectrum, Method};
use noncomm::{Error, FiniteGroup, Graph, GroupSpec, Spectrum, DEFAULT_CAP};

#[derive(Parser)]
#[command(name = "noncomm", version, about = "Non-commuting graphs of finite groups")]
struct Cli {
    #[command(flatten)]
    cfg: RunConfig,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args, Clone, Debug)]
struct RunConfig {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Jacobi tolerance for numeric spectra.
    #[arg(long, default_value_t = 1e-9, global = true)]
    tol: f64,
    /// Number of random primes for modular checks.
    #[arg(long, default_value_t = 3, global = true)]
    primes: usize,
    /// Upper bound on group order (at most 10000).
    #[arg(long, env = "NONCOMM_CAP", default_value_t = DEFAULT_CAP, global = true)]
    cap: usize,
    /// Count documented discrepancies as passing.
    #[arg(long, global = true)]
    allow_documented: bool,
    /// Worker threads for verification sweeps.
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    #[default]
    Auto,
    Exact,
    Numeric,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Exact => Method::Exact,
            MethodArg::Numeric => Method::Numeric,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableId {
    Table1,
    Table2,
}

#[derive(Subcommand)]
enum Command {
    /// Adjacency spectrum of Γ(G).
    Spectrum {
        spec: String,
        #[arg(long, value_enum, default_value_t)]
        method: MethodArg,
    },
    /// Energy of Γ(G).
    Energy {
        spec: String,
        #[arg(long, value_enum, default_value_t)]
        method: MethodArg,
    },
    /// Laplacian spectrum and Laplacian energy of Γ(G).
    Laplacian {
        spec: String,
        #[arg(long, value_enum, default_value_t)]
        method: MethodArg,
    },
    /// Check a closed form against brute force over a parameter range.
    Verify(VerifyArgs),
    /// Recompute a stored table and compare every cell.
    Table { which: TableId },
    /// Write Γ(G) as an edge list (text), edge rows (csv) or JSON.
    ExportGraph { spec: String },
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: multipartite, dihedral-spectrum, dihedral-energy,
    /// dihedral-laplacian, dihedral-le, gl2-charpoly, gl2-energy,
    /// product-scaling, d8xd8, d2n-squared, block-gxs3, block-gxd2n,
    /// block-gxd8.
    id: String,
    /// `a..b` (inclusive), `a,b,c` or `a`.
    #[arg(long)]
    n: Option<String>,
    #[arg(long)]
    q: Option<String>,
    /// Group spec; repeatable.
    #[arg(long)]
    g: Vec<String>,
    /// Abelian group spec; repeatable.
    #[arg(long)]
    h: Vec<String>,
    /// Comma-separated part sizes; repeatable.
    #[arg(long)]
    sizes: Vec<String>,
    /// Force exact characteristic polynomials.
    #[arg(long, conflicts_with = "modular")]
    exact: bool,
    /// Force modular checks.
    #[arg(long)]
    modular: bool,
}

const THEOREMS: &[&str] = &[
    "multipartite",
    "dihedral-spectrum",
    "dihedral-energy",
    "dihedral-laplacian",
    "dihedral-le",
    "gl2-charpoly",
    "gl2-energy",
    "product-scaling",
    "d8xd8",
    "d2n-squared",
    "block-gxs3",
    "block-gxd2n",
    "block-gxd8",
];

struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::InvalidArgument(_) | Error::OrderCap { .. } | Error::DimensionCap { .. } => 2,
            _ => 1,
        };
        Failure { code, msg: e.to_string() }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: 2, msg: msg.into() }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let res = run(&cli, &mut out);
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes());
    let _ = stdout.flush();
    match res {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn validate(cfg: &RunConfig) -> CliResult<()> {
    if !(cfg.tol.is_finite() && cfg.tol > 0.0) {
        return Err(usage("--tol must be positive"));
    }
    if cfg.primes == 0 {
        return Err(usage("--primes must be at least 1"));
    }
    if cfg.cap == 0 || cfg.cap > DEFAULT_CAP {
        return Err(usage(format!("--cap must be in 1..={DEFAULT_CAP}")));
    }
    if let Some(j) = cfg.jobs {
        if j == 0 {
            return Err(usage("--jobs must be at least 1"));
        }
        // a second global pool cannot be installed; ignore that case
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j).build_global();
    }
    Ok(())
}

fn run(cli: &Cli, out: &mut String) -> CliResult<u8> {
    let cfg = &cli.cfg;
    validate(cfg)?;
    match &cli.cmd {
        Command::Spectrum { spec, method } => cmd_spectrum(cfg, spec, *method, out),
        Command::Energy { spec, method } => cmd_energy(cfg, spec, *method, out),
        Command::Laplacian { spec, method } => cmd_laplacian(cfg, spec, *method, out),
        Command::Verify(args) => cmd_verify(cfg, args, out),
        Command::Table { which } => cmd_table(cfg, *which, out),
        Command::ExportGraph { spec } => cmd_export(cfg, spec, out),
    }
}

fn build(cfg: &RunConfig, spec: &str) -> CliResult<(GroupSpec, Arc<FiniteGroup>)> {
    let parsed: GroupSpec = spec.parse()?;
    let g = parsed.build(cfg.cap)?;
    Ok((parsed, g))
}

fn csv_text(rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.write_record(r).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flushing to memory")).expect("csv output is UTF-8")
}

fn json_text(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Prints the null-graph notice; `true` if `g` is abelian.
fn null_graph(cfg: &RunConfig, spec: &GroupSpec, g: &FiniteGroup, out: &mut String) -> bool {
    if !g.is_abelian() {
        return false;
    }
    match cfg.format {
        Format::Json => out.push_str(&json_text(&json!({ "group": spec.to_string(), "null_graph": true }))),
        _ => out.push_str(&format!("null graph: {spec} is abelian\n")),
    }
    true
}

fn spectrum_rows(spec: &Spectrum) -> Vec<Vec<String>> {
    let mut rows = vec![vec!["root".into(), "kind".into(), "value".into(), "multiplicity".into(), "error".into()]];
    for (e, j) in spec.entries().iter().zip(spec.to_json()) {
        rows.push(vec![
            e.root.to_string(),
            j.kind,
            format!("{:.15}", e.root.value()),
            e.multiplicity.to_string(),
            j.error.map(|v| format!("{v:e}")).unwrap_or_default(),
        ]);
    }
    rows
}

fn header(spec: &GroupSpec, g: &FiniteGroup, graph: &Graph) -> String {
    format!(
        "group: {spec} (order {}, centre {})\nvertices: {}, edges: {}\n",
        g.order(),
        g.center().len(),
        graph.vertex_count(),
        graph.edge_count()
    )
}

fn cmd_spectrum(cfg: &RunConfig, s: &str, method: MethodArg, out: &mut String) -> CliResult<u8> {
    let (spec, g) = build(cfg, s)?;
    if null_graph(cfg, &spec, &g, out) {
        return Ok(0);
    }
    let graph = noncommuting_graph(&g);
    let sp = matrix_spectrum(&graph.adjacency(), method.into(), cfg.tol)?;
    let e = sp.energy();
    match cfg.format {
        Format::Text => {
            out.push_str(&header(&spec, &g, &graph));
            out.push_str(&format!("spectrum: {sp}\nenergy: {e}\n"));
        }
        Format::Csv => out.push_str(&csv_text(&spectrum_rows(&sp))),
        Format::Json => out.push_str(&json_text(&json!({
            "group": spec.to_string(),
            "vertices": graph.vertex_count(),
            "edges": graph.edge_count(),
            "spectrum": sp.to_json(),
            "energy": e.to_json(),
        }))),
    }
    Ok(0)
}

fn cmd_energy(cfg: &RunConfig, s: &str, method: MethodArg, out: &mut String) -> CliResult<u8> {
    let (spec, g) = build(cfg, s)?;
    if null_graph(cfg, &spec, &g, out) {
        return Ok(0);
    }
    let graph = noncommuting_graph(&g);
    let e = matrix_spectrum(&graph.adjacency(), method.into(), cfg.tol)?.energy();
    match cfg.format {
        Format::Text => out.push_str(&format!("{e}\n")),
        Format::Csv => out.push_str(&csv_text(&[
            vec!["group".into(), "exact".into(), "numeric".into(), "error_bound".into()],
            vec![spec.to_string(), e.exact.as_ref().map(|x| x.to_string()).unwrap_or_default(), format!("{:.15}", e.numeric), format!("{:e}", e.error_bound)],
        ])),
        Format::Json => out.push_str(&json_text(&json!({ "group": spec.to_string(), "energy": e.to_json() }))),
    }
    Ok(0)
}

fn cmd_laplacian(cfg: &RunConfig, s: &str, method: MethodArg, out: &mut String) -> CliResult<u8> {
    let (spec, g) = build(cfg, s)?;
    if null_graph(cfg, &spec, &g, out) {
        return Ok(0);
    }
    let graph = noncommuting_graph(&g);
    let sp = matrix_spectrum(&graph.laplacian(), method.into(), cfg.tol)?;
    let mean = BigRational::new(BigInt::from(2 * graph.edge_count()), BigInt::from(graph.vertex_count()));
    let le = sp.absolute_deviation(&mean);
    match cfg.format {
        Format::Text => {
            out.push_str(&header(&spec, &g, &graph));
            out.push_str(&format!("Laplacian spectrum: {sp}\nLaplacian energy: {le}\n"));
        }
        Format::Csv => out.push_str(&csv_text(&spectrum_rows(&sp))),
        Format::Json => out.push_str(&json_text(&json!({
            "group": spec.to_string(),
            "vertices": graph.vertex_count(),
            "edges": graph.edge_count(),
            "laplacian_spectrum": sp.to_json(),
            "laplacian_energy": le.to_json(),
        }))),
    }
    Ok(0)
}

fn cmd_export(cfg: &RunConfig, s: &str, out: &mut String) -> CliResult<u8> {
    let (_, g) = build(cfg, s)?;
    let graph = noncommuting_graph(&g);
    match cfg.format {
        Format::Text => out.push_str(&graph.to_edge_list()),
        Format::Csv => {
            let mut rows = vec![vec!["u".to_string(), "v".to_string()]];
            rows.extend(graph.edges().iter().map(|[u, v]| vec![u.to_string(), v.to_string()]));
            out.push_str(&csv_text(&rows));
        }
        Format::Json => out.push_str(&json_text(&graph.to_json())),
    }
    Ok(0)
}

fn table_status(rows: &[TableRow]) -> u8 {
    u8::from(rows.iter().any(|r| r.status() == Status::Fail))
}

fn cmd_table(cfg: &RunConfig, which: TableId, out: &mut String) -> CliResult<u8> {
    let rows = match which {
        TableId::Table1 => reproduce_table1()?,
        TableId::Table2 => reproduce_table2()?,
    };
    match cfg.format {
        Format::Text => {
            for r in &rows {
                out.push_str(&format!("{} [{}]\n", r.group, r.status()));
                for c in &r.cells {
                    out.push_str(&format!("  {}: {} [{}]\n", c.column, c.computed, c.status));
                    if c.status != Status::Pass || c.computed != c.expected {
                        out.push_str(&format!("    expected: {}\n", c.expected));
                    }
                }
            }
        }
        Format::Csv => {
            let mut t = vec![["group", "anchor", "column", "computed", "expected", "status"].map(String::from).to_vec()];
            for r in &rows {
                for c in &r.cells {
                    t.push(vec![r.group.clone(), r.anchor.clone(), c.column.clone(), c.computed.clone(), c.expected.clone(), c.status.to_string()]);
                }
            }
            out.push_str(&csv_text(&t));
        }
        Format::Json => out.push_str(&json_text(&rows)),
    }
    Ok(table_status(&rows))
}

/// `a..b` or `a..=b` (both inclusive), `a,b,c`, or `a`.
fn parse_range(s: &str) -> CliResult<Vec<usize>> {
    let bad = || usage(format!("bad range `{s}`"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let v = if let Some((a, b)) = s.split_once("..") {
        let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
        if a > b {
            return Err(bad());
        }
        (a..=b).collect()
    } else {
        s.split(',').map(num).collect::<CliResult<Vec<_>>>()?
    };
    if v.is_empty() {
        return Err(bad());
    }
    Ok(v)
}

fn parse_sizes(s: &str) -> CliResult<Vec<usize>> {
    s.split(',').map(|t| t.trim().parse::<usize>().map_err(|_| usage(format!("bad size list `{s}`")))).collect()
}

type Task = Box<dyn Fn() -> noncomm::Result<VerificationReport> + Send + Sync>;

fn specs(given: &[String], default: &[&str]) -> Vec<String> {
    if given.is_empty() {
        default.iter().map(|s| s.to_string()).collect()
    } else {
        given.to_vec()
    }
}

fn groups(cfg: &RunConfig, given: &[String], default: &[&str]) -> CliResult<Vec<Arc<FiniteGroup>>> {
    specs(given, default).iter().map(|s| build(cfg, s).map(|(_, g)| g)).collect()
}

fn tasks(cfg: &RunConfig, a: &VerifyArgs) -> CliResult<Vec<Task>> {
    let ns = |default: &str| parse_range(a.n.as_deref().unwrap_or(default));
    let qs = || -> CliResult<Vec<u32>> {
        parse_range(a.q.as_deref().unwrap_or("3..4"))?.into_iter().map(|q| u32::try_from(q).map_err(|_| usage("q out of range"))).collect()
    };
    let cap = cfg.cap;
    let primes = cfg.primes;
    let mut out: Vec<Task> = Vec::new();
    match a.id.as_str() {
        "multipartite" => {
            let sizes: Vec<Vec<usize>> = if a.sizes.is_empty() {
                vec![vec![2, 3], vec![3, 2, 2, 1], vec![4, 4, 4], vec![4, 1, 1, 1, 1, 1]]
            } else {
                a.sizes.iter().map(|s| parse_sizes(s)).collect::<CliResult<_>>()?
            };
            for s in sizes {
                out.push(Box::new(move || multipartite::verify_multipartite(&s)));
            }
        }
        id @ ("dihedral-spectrum" | "dihedral-energy" | "dihedral-laplacian" | "dihedral-le") => {
            let f: fn(usize) -> noncomm::Result<VerificationReport> = match id {
                "dihedral-spectrum" => dihedral::verify_spectrum,
                "dihedral-energy" => dihedral::verify_energy,
                "dihedral-laplacian" => dihedral::verify_laplacian,
                _ => dihedral::verify_laplacian_energy,
            };
            for n in ns("3..12")? {
                out.push(Box::new(move || f(n)));
            }
        }
        "gl2-charpoly" => {
            for q in qs()? {
                let exact = a.exact || (!a.modular && q <= 4);
                out.push(Box::new(move || gl2::verify_gl2_charpoly(q, exact, primes)));
            }
        }
        "gl2-energy" => {
            for q in qs()? {
                out.push(Box::new(move || gl2::verify_gl2_energy(q)));
            }
        }
        "product-scaling" => {
            let gs = groups(cfg, &a.g, &["dihedral:3", "dihedral:4", "dihedral:5", "dihedral:6"])?;
            let hs = groups(cfg, &a.h, &["cyclic:2", "cyclic:3", "cyclic:4", "prod(cyclic:2,cyclic:2)"])?;
            for g in &gs {
                for h in &hs {
                    let (g, h) = (g.clone(), h.clone());
                    out.push(Box::new(move || products::product_scaling_check(g.clone(), h.clone(), cap)));
                }
            }
        }
        "d8xd8" => out.push(Box::new(products::d8xd8_check)),
        "d2n-squared" => {
            for n in ns("6")? {
                let exact = a.exact || (!a.modular && n <= 6);
                out.push(Box::new(move || products::d2n_squared_check(n, exact, primes, cap)));
            }
        }
        id @ ("block-gxs3" | "block-gxd2n" | "block-gxd8") => {
            let gs = groups(cfg, &a.g, &["dihedral:3", "dihedral:4"])?;
            let fams: Vec<blocks::BlockFamily> = match id {
                "block-gxs3" => vec![blocks::BlockFamily::GxS3],
                "block-gxd8" => vec![blocks::BlockFamily::GxD8],
                _ => ns("4,6")?.into_iter().map(blocks::BlockFamily::GxD2n).collect(),
            };
            for g in &gs {
                for &fam in &fams {
                    let g = g.clone();
                    out.push(Box::new(move || blocks::block_factorization_check(fam, g.clone(), cap)));
                }
            }
        }
        other => return Err(usage(format!("unknown theorem id `{other}`; expected one of: {}", THEOREMS.join(", ")))),
    }
    Ok(out)
}

fn cmd_verify(cfg: &RunConfig, a: &VerifyArgs, out: &mut String) -> CliResult<u8> {
    let ts = tasks(cfg, a)?;
    let results: Vec<noncomm::Result<VerificationReport>> = ts.par_iter().map(|t| t()).collect();
    let reports = results.into_iter().collect::<noncomm::Result<Vec<_>>>()?;
    match cfg.format {
        Format::Text => {
            for r in &reports {
                out.push_str(&format!("{r}\n"));
            }
            let count = |s| reports.iter().filter(|r| r.status == s).count();
            out.push_str(&format!(
                "{} checks: {} passed, {} documented discrepancies, {} failed\n",
                reports.len(),
                count(Status::Pass),
                count(Status::DiscrepancyDocumented),
                count(Status::Fail)
            ));
        }
        Format::Csv => {
            let mut t = vec![["theorem", "parameters", "status", "deviation", "lhs", "rhs", "notes"].map(String::from).to_vec()];
            for r in &reports {
                t.push(vec![
                    r.theorem.clone(),
                    r.parameter_text(),
                    r.status.to_string(),
                    r.deviation.to_string(),
                    r.lhs.clone(),
                    r.rhs.clone(),
                    r.notes.join("; "),
                ]);
            }
            out.push_str(&csv_text(&t));
        }
        Format::Json => out.push_str(&json_text(&reports)),
    }
    Ok(u8::from(!reports.iter().all(|r| r.acceptable(cfg.allow_documented))))
}
