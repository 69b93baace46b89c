//! `codegree` command line. Exit status: 0 when everything passed, 1 when a
//! check failed, 2 on usage, input or internal errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use codegree_core::analysis::GroupAnalysis;
use codegree_core::catalog::verification_corpus;
use codegree_core::verify::{run_all, run_suite, CheckResult, Clock, Corpus, NoClock, Suite, Verdict};
use codegree_core::DEFAULT_ORDER_CAP;

use crate::export::{dot, manifest_json, table_json, GraphKind};
use crate::groupfile::load_group;
use crate::report::{jsonl, summary, RunInfo};

#[derive(Parser, Debug)]
#[command(name = "codegree", version, about = "Character codegrees and codegree graphs of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print order, classes, degrees, codegrees and graph summaries.
    Analyze {
        /// Catalog name (e.g. `F(7,3)`, `S4`, `D8xC3`) or group file.
        group: String,
    },
    /// Run a theorem suite, or `all`, over the verification corpus.
    Verify {
        /// table, prime-powers, connectivity, triangle-free, lemmas, tables,
        /// diophantine or all.
        suite: String,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..=DEFAULT_ORDER_CAP as u64))]
        max_order: u64,
        /// Write the JSON-lines report here (`-` for standard output, in
        /// which case the summary goes to standard error).
        #[arg(long)]
        report: Option<PathBuf>,
        /// Record wall time per result; reports are no longer reproducible.
        #[arg(long)]
        timings: bool,
    },
    /// Inspect the built-in catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Write the character graph or the prime graph as DOT.
    ExportDot {
        group: String,
        #[arg(long, value_enum)]
        graph: GraphArg,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Write the character table as JSON.
    ExportTable {
        group: String,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    /// List the verification corpus.
    List {
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..=DEFAULT_ORDER_CAP as u64))]
        max_order: u64,
        /// Print the manifest as JSON (name, order, recipe).
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GraphArg {
    Gamma,
    Delta,
}

struct WallClock(Instant);

impl Clock for WallClock {
    fn now_millis(&self) -> Option<u64> {
        Some(self.0.elapsed().as_millis() as u64)
    }
}

/// Failure that ends the command with status 2.
struct Fatal(String);

impl<E: std::fmt::Display> From<E> for Fatal {
    fn from(e: E) -> Self {
        Fatal(e.to_string())
    }
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(Fatal(message)) => {
            let _ = writeln!(err, "error: {message}");
            2
        }
    }
}

fn analysis_of(spec: &str) -> Result<GroupAnalysis, Fatal> {
    let (name, group) = load_group(spec)?;
    Ok(GroupAnalysis::new(name, group)?)
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8, Fatal> {
    match command {
        Command::Analyze { group } => {
            out.write_all(describe(&analysis_of(&group)?).as_bytes())?;
            Ok(0)
        }
        Command::Verify { suite, max_order, report, timings } => {
            let suites: Vec<Suite> = if suite == "all" {
                let mut all = Suite::ALL.to_vec();
                all.sort_by_key(|s| s.id());
                all
            } else {
                vec![Suite::parse(&suite).ok_or_else(|| Fatal(format!("unknown suite {suite:?}")))?]
            };
            let clock: Box<dyn Clock> = if timings { Box::new(WallClock(Instant::now())) } else { Box::new(NoClock) };
            let max_order = max_order as usize;
            let corpus = if suites.iter().any(|s| s.needs_corpus()) { Some(Corpus::build(max_order)?) } else { None };
            let results: Vec<CheckResult> = if suites.len() > 1 {
                run_all(corpus.as_ref().expect("all includes corpus suites"), clock.as_ref())?
            } else {
                run_suite(suites[0], corpus.as_ref(), clock.as_ref())?
            };
            let ids: Vec<&str> = suites.iter().map(|s| s.id()).collect();
            let info = RunInfo {
                max_order: corpus.as_ref().map(|c| c.max_order),
                groups: corpus.as_ref().map(|c| c.groups.len()),
                suites: &ids,
            };
            let text = summary(&results);
            match report {
                Some(path) if path.as_os_str() == "-" => {
                    out.write_all(jsonl(&info, &results).as_bytes())?;
                    err.write_all(text.as_bytes())?;
                }
                Some(path) => {
                    std::fs::write(&path, jsonl(&info, &results)).map_err(|e| Fatal(format!("{}: {e}", path.display())))?;
                    out.write_all(text.as_bytes())?;
                }
                None => out.write_all(text.as_bytes())?,
            }
            Ok(if results.iter().any(|r| r.verdict == Verdict::Fail) { 1 } else { 0 })
        }
        Command::Catalog { action: CatalogAction::List { max_order, json } } => {
            let entries = verification_corpus(max_order as usize)?;
            if json {
                out.write_all(manifest_json(&entries).as_bytes())?;
            } else {
                for e in &entries {
                    let order = e.recipe.order().map_or("-".to_string(), |o| o.to_string());
                    writeln!(out, "{:<24} {:>4}  {}", e.name, order, e.recipe)?;
                }
            }
            Ok(0)
        }
        Command::ExportDot { group, graph, output } => {
            let a = analysis_of(&group)?;
            let kind = match graph {
                GraphArg::Gamma => GraphKind::Gamma,
                GraphArg::Delta => GraphKind::Delta,
            };
            std::fs::write(&output, dot(&a, kind)).map_err(|e| Fatal(format!("{}: {e}", output.display())))?;
            Ok(0)
        }
        Command::ExportTable { group, output } => {
            let a = analysis_of(&group)?;
            std::fs::write(&output, table_json(&a)).map_err(|e| Fatal(format!("{}: {e}", output.display())))?;
            Ok(0)
        }
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// The `analyze` report.
pub fn describe(a: &GroupAnalysis) -> String {
    let t = &a.table;
    let mut s = String::new();
    let p = &a.predicates;
    writeln!(s, "group: {}", a.name).unwrap();
    writeln!(s, "order: {}", a.order()).unwrap();
    writeln!(s, "exponent: {}", a.group.exponent()).unwrap();
    writeln!(
        s,
        "properties: abelian={} nilpotent={} solvable={} simple={}",
        p.is_abelian, p.is_nilpotent, p.is_solvable, p.is_simple
    )
    .unwrap();
    writeln!(s, "classes: {}", t.len()).unwrap();
    writeln!(s, "class sizes: {}", join(t.class_sizes())).unwrap();
    writeln!(s, "element orders: {}", join(t.class_element_orders())).unwrap();
    writeln!(s, "degrees: {}", join(t.degrees())).unwrap();
    writeln!(s, "codegrees: {}", join(a.nonprincipal_codegrees())).unwrap();
    let g = &a.gamma_stats;
    writeln!(
        s,
        "gamma: {} vertices, {} edges, {} components, diameters {}, triangle {}, complete {}",
        a.gamma.graph.vertex_count(),
        a.gamma.graph.edge_count(),
        g.component_count,
        if g.diameters.is_empty() { "-".to_string() } else { join(&g.diameters) },
        match g.triangle {
            Some(tri) => format!("on codegrees {}", join(tri.map(|v| a.gamma.codegrees[v]))),
            None => "none".to_string(),
        },
        g.is_complete
    )
    .unwrap();
    writeln!(
        s,
        "delta: primes {}, {} edges, {} components",
        if a.delta.primes.is_empty() { "-".to_string() } else { join(&a.delta.primes) },
        a.delta.graph.edge_count(),
        a.delta_stats.component_count
    )
    .unwrap();
    match &a.frobenius {
        Some(w) => writeln!(s, "frobenius: kernel order {}, complement order {}", w.kernel.order(), w.complement.order()),
        None => writeln!(s, "frobenius: no"),
    }
    .unwrap();
    match &a.two_frobenius {
        Some(w) => writeln!(s, "2-frobenius: K order {}, L order {}", w.k.order(), w.l.order()),
        None => writeln!(s, "2-frobenius: no"),
    }
    .unwrap();
    s
}
