//! Command-line front end: `analyze`, `generate` and `verify`.
//!
//! Exit codes: 0 success, 1 a theorem check failed, 2 usage or parse error,
//! 3 the float and exact routes disagreed or an internal check failed.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::edgelist::parse_edge_list;
use crate::families::FamilySpec;
use crate::graph::Graph;
use crate::graph6::{parse_graph6, to_graph6_string};
use crate::spectra::SpectraError;
use crate::theorems::sweep::{
    self, run_sweep, Family, GraphSet, Source, SweepOptions, SweepSummary,
};
use crate::theorems::{check_harmonic, fmt_float, round_sig, Analysis, TheoremId};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DISAGREEMENT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "mainspec",
    version,
    about = "Main eigenvalues of graphs: analysis and theorem sweeps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Spectrum, main eigenvalues and complement summary of graphs.
    Analyze {
        /// File, `-` for standard input, or an inline graph6 line.
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        /// One JSON object per graph.
        #[arg(long)]
        json: bool,
    },
    /// Print a family member as a graph6 line, e.g. `doublestar 2 3`.
    Generate {
        /// Family name followed by its parameters.
        #[arg(required = true, num_args = 1..)]
        family: Vec<String>,
    },
    /// Run theorem checkers over instance sets.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Theorem id (e.g. T45) or `all`.
    theorem: String,
    /// All labeled graphs of this order.
    #[arg(long, value_name = "N")]
    exhaustive: Option<usize>,
    /// Only connected graphs.
    #[arg(long, requires = "exhaustive")]
    connected: bool,
    /// Only bipartite graphs.
    #[arg(long, requires = "exhaustive")]
    bipartite: bool,
    /// Visit K random graphs of the `--exhaustive` order instead of all.
    #[arg(long, value_name = "K", requires = "exhaustive")]
    sample: Option<u64>,
    /// Seed for `--sample`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Paths `P_n` for `n` in `A..B` (inclusive).
    #[arg(long, value_name = "A..B", value_parser = parse_range)]
    paths: Option<(usize, usize)>,
    /// Double stars `T(k,s)`, `1 ≤ k,s ≤ K`.
    #[arg(long, value_name = "K")]
    doublestars: Option<usize>,
    /// Complete bipartite `K_{r,s}`, `1 ≤ r,s ≤ R`.
    #[arg(long, value_name = "R")]
    krr: Option<usize>,
    /// Harmonic trees `T_ℓ`, `2 ≤ ℓ ≤ L`.
    #[arg(long, value_name = "L")]
    harmonic_trees: Option<usize>,
    /// Pendant-decorated cycles `C_p`, `p ≤ P`, `q ≤ Q`.
    #[arg(long, value_name = "P,Q", value_parser = parse_pair)]
    pendant_cycles: Option<(usize, usize)>,
    /// Reports and the summary as JSON lines.
    #[arg(long)]
    json: bool,
    /// Print every report, not only failures.
    #[arg(long)]
    verbose: bool,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected A..B, got `{s}`"))?;
    let a: usize = a.parse().map_err(|_| format!("bad lower bound `{a}`"))?;
    let b: usize = b
        .trim_start_matches('=')
        .parse()
        .map_err(|_| format!("bad upper bound `{b}`"))?;
    if a < 2 || a > b {
        return Err(format!("need 2 <= A <= B, got {a}..{b}"));
    }
    Ok((a, b))
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected P,Q, got `{s}`"))?;
    let p = a.trim().parse().map_err(|_| format!("bad P `{a}`"))?;
    let q = b.trim().parse().map_err(|_| format!("bad Q `{b}`"))?;
    Ok((p, q))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GroupRecord {
    pub value: f64,
    pub multiplicity: usize,
    pub projection_norm_sq: f64,
    pub main: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComplementSummary {
    pub lambda1: f64,
    pub lambda2: Option<f64>,
    /// `−1 − λ_n(G)`.
    pub window: f64,
    pub main_count: usize,
    /// `λ₂(Ḡ) ≤ −1−λ_n(G) ≤ λ₁(Ḡ)` within `1e-8`.
    pub window_holds: bool,
}

/// Everything `analyze` reports about one graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisRecord {
    pub input: String,
    pub order: usize,
    pub edges: usize,
    pub groups: Vec<GroupRecord>,
    pub main_count_float: usize,
    pub main_count_exact: usize,
    /// The float classification needed the exact rank to settle.
    pub gray_zone: bool,
    pub harmonic: bool,
    pub ell: Option<u64>,
    pub complement: ComplementSummary,
}

impl AnalysisRecord {
    pub fn new(a: &Analysis) -> Self {
        let g = &a.g;
        let h = check_harmonic(&g.graph);
        let w = a.window();
        let l1c = a.complement.lambda1();
        let l2c = a.complement.lambda2();
        let tol = crate::theorems::EQ_TOL;
        let window_holds = w <= l1c + tol && l2c.is_none_or(|l2| l2 <= w + tol);
        AnalysisRecord {
            input: a.instance.clone(),
            order: g.n(),
            edges: g.degrees.m as usize,
            groups: g
                .spectrum
                .groups
                .iter()
                .map(|x| GroupRecord {
                    value: round_sig(x.value),
                    multiplicity: x.multiplicity,
                    projection_norm_sq: round_sig(x.projection_norm_sq),
                    main: x.is_main,
                })
                .collect(),
            main_count_float: g.s(),
            main_count_exact: g.walk_rank,
            gray_zone: g.gray_zone,
            harmonic: h.is_harmonic,
            ell: h.ell,
            complement: ComplementSummary {
                lambda1: round_sig(l1c),
                lambda2: l2c.map(round_sig),
                window: round_sig(w),
                main_count: a.complement.s(),
                window_holds,
            },
        }
    }

    fn write_text(&self, out: &mut dyn Write) -> std::io::Result<()> {
        writeln!(
            out,
            "graph        {} (n = {}, m = {})",
            self.input, self.order, self.edges
        )?;
        writeln!(
            out,
            "  {:>18}  {:>4}  {:>18}  main",
            "eigenvalue", "mult", "|P j|^2"
        )?;
        for g in &self.groups {
            writeln!(
                out,
                "  {:>18}  {:>4}  {:>18}  {}",
                fmt_float(g.value),
                g.multiplicity,
                fmt_float(g.projection_norm_sq),
                if g.main { "yes" } else { "no" }
            )?;
        }
        writeln!(
            out,
            "main count   {} (float) = {} (walk rank){}",
            self.main_count_float,
            self.main_count_exact,
            if self.gray_zone {
                ", settled by exact rank"
            } else {
                ""
            }
        )?;
        match self.ell {
            Some(ell) if self.harmonic => writeln!(out, "harmonic     yes, l = {ell}")?,
            _ => writeln!(out, "harmonic     no")?,
        }
        let c = &self.complement;
        writeln!(
            out,
            "complement   lambda1 = {}, lambda2 = {}, -1-lambda_n = {}, main count {}, window {}",
            fmt_float(c.lambda1),
            c.lambda2.map_or("-".to_string(), fmt_float),
            fmt_float(c.window),
            c.main_count,
            if c.window_holds { "holds" } else { "FAILS" }
        )
    }
}

/// Runs the command line; returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Analyze {
            input,
            format,
            json,
        } => analyze(&input, format, json, stdin, out),
        Command::Generate { family } => generate(&family.join(" "), out),
        Command::Verify(args) => verify(&args, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn io_failure(e: std::io::Error) -> Failure {
    usage(format!("i/o: {e}"))
}

fn read_input(input: &str, format: Format, stdin: &mut dyn Read) -> Result<Vec<Graph>, Failure> {
    let text = if input == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(io_failure)?;
        s
    } else if Path::new(input).exists() {
        std::fs::read_to_string(input).map_err(|e| usage(format!("{input}: {e}")))?
    } else if format == Format::Graph6 {
        input.to_string()
    } else {
        return Err(usage(format!("{input}: no such file")));
    };
    match format {
        Format::Edgelist => Ok(vec![
            parse_edge_list(&text).map_err(|e| usage(e.to_string()))?
        ]),
        Format::Graph6 => {
            let graphs: Result<Vec<Graph>, Failure> = text
                .lines()
                .filter(|l| !l.trim().is_empty())
                .enumerate()
                .map(|(i, l)| {
                    parse_graph6(l.trim().as_bytes())
                        .map_err(|e| usage(format!("graph6 line {}: {e}", i + 1)))
                })
                .collect();
            let graphs = graphs?;
            if graphs.is_empty() {
                return Err(usage("no graph in input"));
            }
            Ok(graphs)
        }
    }
}

fn internal(e: SpectraError) -> Failure {
    Failure {
        code: EXIT_DISAGREEMENT,
        message: e.to_string(),
    }
}

fn analyze(
    input: &str,
    format: Format,
    json: bool,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    for g in read_input(input, format, stdin)? {
        let descriptor = to_graph6_string(&g);
        let a = Analysis::with_instance(g, descriptor).map_err(internal)?;
        let record = AnalysisRecord::new(&a);
        if json {
            let line = serde_json::to_string(&record).expect("records serialise");
            writeln!(out, "{line}").map_err(io_failure)?;
        } else {
            record.write_text(out).map_err(io_failure)?;
        }
    }
    Ok(EXIT_OK)
}

fn generate(family: &str, out: &mut dyn Write) -> Result<i32, Failure> {
    let spec: FamilySpec = family
        .parse()
        .map_err(|e: crate::families::FamilyParseError| usage(e.to_string()))?;
    let g = spec.build().map_err(|e| usage(e.to_string()))?;
    writeln!(out, "{}", to_graph6_string(&g)).map_err(io_failure)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct SummaryRecord<'a> {
    instances: u64,
    gray_zone: u64,
    worst_residual_ratio: f64,
    tallies: &'a std::collections::BTreeMap<TheoremId, sweep::Tally>,
    failures: usize,
    errors: &'a [sweep::InstanceError],
}

fn families_of(args: &VerifyArgs) -> Vec<Family> {
    let mut list = Vec::new();
    if let Some((a, b)) = args.paths {
        list.extend(sweep::paths(a, b));
    }
    if let Some(k) = args.doublestars {
        list.extend(sweep::double_stars(k));
    }
    if let Some(r) = args.krr {
        list.extend(sweep::complete_bipartite(r));
    }
    if let Some(l) = args.harmonic_trees {
        list.extend(sweep::harmonic_trees(l));
    }
    if let Some((p, q)) = args.pendant_cycles {
        list.extend(sweep::pendant_cycles(p, q));
    }
    list
}

fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let opts = if args.theorem.eq_ignore_ascii_case("all") {
        SweepOptions::all()
    } else {
        let id: TheoremId = args
            .theorem
            .parse()
            .map_err(|e: crate::theorems::UnknownTheorem| usage(e.to_string()))?;
        SweepOptions::only(&[id])
    };
    let opts = if args.verbose {
        opts.keeping_reports()
    } else {
        opts
    };

    let mut sources = Vec::new();
    if let Some(n) = args.exhaustive {
        sources.push(Source::Graphs(GraphSet {
            n,
            connected_only: args.connected,
            bipartite_only: args.bipartite,
            sample: args.sample.map(|k| (k, args.seed)),
        }));
    }
    let families = families_of(args);
    if !families.is_empty() {
        sources.push(Source::Families(families));
    }
    if sources.is_empty() {
        return Err(usage(
            "no instances selected: use --exhaustive N or a family flag (--paths, --doublestars, --krr, --harmonic-trees, --pendant-cycles)",
        ));
    }
    let mut summary = SweepSummary::default();
    for source in &sources {
        let part = run_sweep(source, &opts).map_err(|e| usage(e.to_string()))?;
        summary = summary.merge(part);
    }

    let shown = if args.verbose {
        &summary.reports
    } else {
        &summary.failures
    };
    if args.json {
        for r in shown {
            writeln!(out, "{}", r.to_json()).map_err(io_failure)?;
        }
        let record = SummaryRecord {
            instances: summary.instances,
            gray_zone: summary.gray_zone,
            worst_residual_ratio: round_sig(summary.worst_residual_ratio),
            tallies: &summary.tallies,
            failures: summary.failures.len(),
            errors: &summary.errors,
        };
        let line = serde_json::json!({ "summary": record });
        writeln!(out, "{line}").map_err(io_failure)?;
    } else {
        for r in shown {
            writeln!(out, "{r}").map_err(io_failure)?;
        }
        write!(out, "{summary}").map_err(io_failure)?;
        for e in &summary.errors {
            writeln!(out, "error on {}: {}", e.instance, e.error).map_err(io_failure)?;
        }
        writeln!(
            out,
            "{}",
            if summary.passed() {
                "result: ok"
            } else {
                "result: FAILED"
            }
        )
        .map_err(io_failure)?;
    }
    Ok(exit_code(&summary))
}

/// Instance errors outrank failed verdicts.
pub fn exit_code(summary: &SweepSummary) -> i32 {
    if !summary.errors.is_empty() {
        EXIT_DISAGREEMENT
    } else if !summary.failures.is_empty() {
        EXIT_FAILED
    } else {
        EXIT_OK
    }
}
