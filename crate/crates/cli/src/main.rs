use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use oddhole::coloring::{self, Coloring};
use oddhole::cycles::{self, Parity};
use oddhole::harness::battery::{self, BatteryConfig, RunEcho, RunReport, Sinks};
use oddhole::harness::{corpus, edgelist, enumerate, graph6};
use oddhole::layers;
use oddhole::named::PatternName;
use oddhole::par::Executor;
use oddhole::structure;
use oddhole::verify::{self, Applicability, Outcome, WitnessBundle};
use oddhole::Graph;

const EXIT_ERROR: u8 = 1;
const EXIT_VIOLATION: u8 = 2;
const EXIT_CONJECTURE: u8 = 3;

#[derive(Parser)]
#[command(name = "oddhole", version, about = "Graphs of girth 2l+1 without long odd holes")]
struct Cli {
    /// One JSON record per line instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Exact,
    Layered,
}

#[derive(clap::Args)]
struct Input {
    /// Input file, or `-` for standard input.
    file: PathBuf,
    #[arg(long, value_enum, default_value = "graph6")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Girth, chromatic number, membership, connectivity and pattern flags.
    Analyze(Input),
    /// Color each graph exactly or by distance layers.
    Color {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "exact")]
        method: Method,
        #[arg(long, default_value_t = 0)]
        root: usize,
        /// Family parameter for the layered method; inferred when omitted.
        #[arg(long)]
        ell: Option<usize>,
    },
    /// List chordless cycles in a length window.
    Holes {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 4)]
        min: usize,
        /// Defaults to the number of vertices.
        #[arg(long)]
        max: Option<usize>,
        #[arg(long, default_value = "any")]
        parity: Parity,
    },
    /// List vertex cutsets of a given size.
    Cutsets {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 3)]
        size: usize,
    },
    /// Search for an induced copy of a named pattern.
    Patterns {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        pattern: PatternName,
    },
    /// Check statements on each input graph.
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "all")]
        statements: String,
        /// Include every verdict, not only the totals.
        #[arg(long)]
        verbose: bool,
    },
    /// Enumerate connected graphs of girth at least 2l+1 and check statements.
    Search {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 2)]
        ell: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, default_value = "all")]
        statements: String,
        /// Where to write theorem-violation bundles (default: stderr).
        #[arg(long)]
        violations: Option<PathBuf>,
        /// Where to write conjecture-counterexample bundles (default: stderr).
        #[arg(long)]
        conjectures: Option<PathBuf>,
        /// Go past the built-in size guard.
        #[arg(long)]
        allow_large: bool,
    },
    /// Print a named graph in graph6.
    Gen {
        #[arg(long)]
        name: String,
    },
    /// Re-run the bundles in a file and report whether each reproduces.
    Replay { file: PathBuf },
}

fn open(path: &Path) -> anyhow::Result<Box<dyn BufRead>> {
    if path == Path::new("-") {
        return Ok(Box::new(BufReader::new(io::stdin())));
    }
    let f = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    Ok(Box::new(BufReader::new(f)))
}

fn read_graphs(input: &Input) -> anyhow::Result<Vec<oddhole::Result<Graph>>> {
    let mut r = open(&input.file)?;
    match input.format {
        Format::Edges => {
            let mut text = String::new();
            r.read_to_string(&mut text)?;
            Ok(vec![edgelist::parse(&text)])
        }
        Format::Graph6 => {
            let mut out = Vec::new();
            for line in r.lines() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                out.push(graph6::decode(line.trim()));
            }
            Ok(out)
        }
    }
}

fn load(input: &Input) -> anyhow::Result<Vec<Graph>> {
    read_graphs(input)?
        .into_iter()
        .enumerate()
        .map(|(i, g)| g.with_context(|| format!("input graph {i}")))
        .collect()
}

fn analyze(g: &Graph) -> serde_json::Value {
    let girth = cycles::girth(g);
    let (chi, _) = coloring::chromatic_number(g);
    let patterns: Vec<String> = PatternName::NAMED
        .iter()
        .filter(|&&p| structure::find_named_pattern(g, p).is_some())
        .map(|p| p.to_string())
        .collect();
    json!({
        "graph6": graph6::encode(g),
        "n": g.n(),
        "m": g.edge_count(),
        "girth": girth.finite(),
        "chi": chi,
        "omega": cycles::clique_number(g),
        "ell": cycles::family_parameter(g),
        "connected": g.is_connected(),
        "connectivity": structure::vertex_connectivity(g),
        "sharing_five_holes": structure::five_cycles_sharing_edge(g).is_some(),
        "patterns": patterns,
    })
}

fn print_analysis(v: &serde_json::Value, json_out: bool) {
    if json_out {
        println!("{v}");
        return;
    }
    let ell = match v["ell"].as_u64() {
        Some(l) => format!("G_{l}"),
        None => "none".into(),
    };
    println!(
        "{}: n={} m={} girth={} chi={} omega={} family={} connectivity={} sharing-5-holes={} patterns=[{}]",
        v["graph6"].as_str().unwrap_or_default(),
        v["n"],
        v["m"],
        v["girth"].as_u64().map_or("inf".to_string(), |k| k.to_string()),
        v["chi"],
        v["omega"],
        ell,
        v["connectivity"],
        v["sharing_five_holes"],
        v["patterns"]
            .as_array()
            .map(|a| a.iter().filter_map(|p| p.as_str()).collect::<Vec<_>>().join(","))
            .unwrap_or_default(),
    );
}

fn color(g: &Graph, method: Method, root: usize, ell: Option<usize>) -> anyhow::Result<Coloring> {
    match method {
        Method::Exact => Ok(coloring::chromatic_number(g).1),
        Method::Layered => {
            let ell = match ell.or_else(|| cycles::family_parameter(g)) {
                Some(l) => l,
                None => bail!("graph is in no family G_l with l >= 2; layered coloring needs one"),
            };
            Ok(layers::layered_four_coloring(g, root, ell)?)
        }
    }
}

fn print_report(report: &RunReport, json_out: bool) -> anyhow::Result<()> {
    if json_out {
        println!("{}", serde_json::to_string(report)?);
        return Ok(());
    }
    println!("graphs: {}  workers: {}", report.graphs, report.workers);
    println!(
        "{:<12} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9}",
        "statement", "evaluated", "met", "not-met", "confirmed", "exception", "violation", "timeout"
    );
    for (id, t) in &report.totals {
        println!(
            "{:<12} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9}",
            id.to_string(),
            t.evaluated,
            t.hypotheses_met,
            t.not_met,
            t.confirmed,
            t.exceptions,
            t.violations + t.conjecture_counterexamples,
            t.timeouts
        );
    }
    for g in &report.verdicts {
        for v in &g.verdicts {
            let status = match (&v.applicability, &v.outcome) {
                (Applicability::HypothesesNotMet { clause }, _) => format!("not met ({clause})"),
                (Applicability::TimedOut, _) => "timed out".into(),
                (_, Some(Outcome::Confirmed)) => "confirmed".into(),
                (_, Some(Outcome::ConfirmedByException { exception })) => {
                    format!("confirmed by exception ({exception})")
                }
                (_, Some(Outcome::Violation(b))) => format!("VIOLATION: {}", b.detail),
                (_, Some(Outcome::ConjectureCounterexample(b))) => format!("CONJECTURE COUNTEREXAMPLE: {}", b.detail),
                (_, None) => "no outcome".into(),
            };
            println!("#{} {} {}: {}", g.index, g.graph6, v.statement, status);
        }
    }
    Ok(())
}

fn exit_for(report: &RunReport) -> u8 {
    if report.violations() > 0 {
        EXIT_VIOLATION
    } else if report.conjecture_counterexamples() > 0 {
        EXIT_CONJECTURE
    } else {
        0
    }
}

fn sink(path: Option<&PathBuf>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("cannot create {}", p.display()))?,
        )),
        None => Box::new(io::stderr()),
    })
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    let json_out = cli.json;
    match cli.command {
        Command::Analyze(input) => {
            for g in load(&input)? {
                print_analysis(&analyze(&g), json_out);
            }
        }
        Command::Color {
            input,
            method,
            root,
            ell,
        } => {
            for g in load(&input)? {
                let c = color(&g, method, root, ell)?;
                c.check(&g)?;
                if json_out {
                    println!(
                        "{}",
                        json!({"graph6": graph6::encode(&g), "colors": c.palette_size(), "coloring": c.colors()})
                    );
                } else {
                    let list: Vec<String> = c.colors().iter().map(usize::to_string).collect();
                    println!("{} colors: {}", c.palette_size(), list.join(" "));
                }
            }
        }
        Command::Holes {
            input,
            min,
            max,
            parity,
        } => {
            for g in load(&input)? {
                let max = max.unwrap_or(g.n());
                for h in cycles::enumerate_chordless_cycles(&g, min, max, parity)? {
                    if json_out {
                        println!("{}", json!({"length": h.len(), "cycle": h.vertices()}));
                    } else {
                        let list: Vec<String> = h.vertices().iter().map(usize::to_string).collect();
                        println!("{}: {}", h.len(), list.join(" "));
                    }
                }
            }
        }
        Command::Cutsets { input, size } => {
            for g in load(&input)? {
                for r in structure::enumerate_cutsets(&g, size) {
                    if json_out {
                        println!("{}", serde_json::to_string(&r)?);
                    } else {
                        let list: Vec<String> = r.cutset.iter().map(|v| v.to_string()).collect();
                        println!(
                            "{{{}}} {} components={}",
                            list.join(","),
                            if r.stable { "stable" } else { "unstable" },
                            r.component_count
                        );
                    }
                }
            }
        }
        Command::Patterns { input, pattern } => {
            let Some(p) = pattern.graph() else {
                bail!("pattern `{pattern}` has no fixed graph");
            };
            for g in load(&input)? {
                let found = structure::find_named_pattern(&g, pattern);
                if let Some(e) = &found {
                    e.verify(&g, &p)
                        .map_err(|why| anyhow::anyhow!("embedding failed its check: {why}"))?;
                }
                if json_out {
                    println!(
                        "{}",
                        json!({"pattern": pattern.to_string(), "embedding": found.map(|e| e.map)})
                    );
                } else {
                    match found {
                        Some(e) => {
                            let list: Vec<String> = e.map.iter().map(usize::to_string).collect();
                            println!("{pattern}: {}", list.join(" "));
                        }
                        None => println!("{pattern}: absent"),
                    }
                }
            }
        }
        Command::Verify {
            input,
            statements,
            verbose,
        } => {
            let config = BatteryConfig {
                echo: RunEcho {
                    source: input.file.display().to_string(),
                    ..RunEcho::default()
                },
                statements: verify::parse_statements(&statements)?,
                keep_verdicts: verbose,
                ..BatteryConfig::default()
            };
            let (mut v, mut c) = (io::stderr(), io::stderr());
            let mut sinks = Sinks {
                violations: &mut v,
                conjectures: &mut c,
            };
            let report = battery::run_battery(read_graphs(&input)?, &config, &Executor::sequential(), &mut sinks)?;
            print_report(&report, json_out)?;
            return Ok(exit_for(&report));
        }
        Command::Search {
            max_n,
            ell,
            workers,
            statements,
            violations,
            conjectures,
            allow_large,
        } => {
            if ell < 2 {
                bail!("--ell must be at least 2");
            }
            let exec = Executor::with_workers(workers);
            let graphs = if ell == 2 {
                enumerate::enumerate_girth5_with(max_n, allow_large, exec.clone())?
            } else {
                enumerate::enumerate_min_girth(max_n, 2 * ell + 1, exec.clone())
            };
            let config = BatteryConfig {
                echo: RunEcho {
                    source: format!("connected graphs of girth >= {}", 2 * ell + 1),
                    n_range: Some((1, max_n)),
                    ell: Some(ell),
                    seed: None,
                },
                statements: verify::parse_statements(&statements)?,
                ..BatteryConfig::default()
            };
            let (mut v, mut c) = (sink(violations.as_ref())?, sink(conjectures.as_ref())?);
            let mut sinks = Sinks {
                violations: &mut *v,
                conjectures: &mut *c,
            };
            let report = battery::run_battery(graphs.map(Ok), &config, &exec, &mut sinks)?;
            print_report(&report, json_out)?;
            return Ok(exit_for(&report));
        }
        Command::Gen { name } => {
            let Some(g) = corpus::by_name(&name) else {
                let names: Vec<&str> = corpus::corpus().iter().map(|(n, _)| *n).collect();
                bail!("unknown graph `{name}`; known: {}", names.join(", "));
            };
            println!("{}", graph6::encode(&g));
        }
        Command::Replay { file } => {
            let mut all = true;
            for (i, line) in open(&file)?.lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let bundle =
                    WitnessBundle::from_json_line(&line).with_context(|| format!("bundle on line {}", i + 1))?;
                let ok = verify::replay(&bundle)?;
                all &= ok;
                if json_out {
                    println!(
                        "{}",
                        json!({"line": i + 1, "statement": bundle.statement, "reproduced": ok})
                    );
                } else {
                    println!(
                        "line {} {}: {}",
                        i + 1,
                        bundle.statement,
                        if ok { "reproduced" } else { "NOT reproduced" }
                    );
                }
            }
            if !all {
                return Ok(EXIT_ERROR);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use oddhole::harness::battery::StatementTotals;
    use oddhole::verify::StatementId;

    fn report(violations: usize, conjectures: usize) -> RunReport {
        let totals = StatementTotals {
            violations,
            conjecture_counterexamples: conjectures,
            ..StatementTotals::default()
        };
        RunReport {
            echo: RunEcho::default(),
            graphs: 1,
            workers: 1,
            statements: vec![StatementId::C1_1],
            totals: [(StatementId::C1_1, totals)].into(),
            verdicts: Vec::new(),
        }
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_for(&report(0, 0)), 0);
        assert_eq!(exit_for(&report(1, 0)), EXIT_VIOLATION);
        assert_eq!(exit_for(&report(0, 1)), EXIT_CONJECTURE);
        // a theorem violation outranks a conjecture counterexample
        assert_eq!(exit_for(&report(1, 1)), EXIT_VIOLATION);
    }
}
