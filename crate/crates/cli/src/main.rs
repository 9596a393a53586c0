use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use domhg::completion::{
    completions, decompose_or_bound, minimal_completions, CompletionReport, Exactness,
};
use domhg::format::{format_hypergraph_text, parse_graph, parse_hypergraph};
use domhg::parallel::available_workers;
use domhg::recognition::{realization_expansion, recognize, uniform_recognition, RecognitionResult};
use domhg::verify::{format_report, run_all, VerifyConfig, DEFAULT_SEED};
use domhg::{enumerate_family, GraphFamilyKind, GroundSet, Hypergraph, SearchConfig};

/// Minimal dominating sets, domination hypergraphs and completions of
/// uniform hypergraphs.
#[derive(Parser)]
#[command(name = "domhg", version)]
struct Cli {
    /// Print a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for enumeration sweeps (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Override the operation's bound on the ground set size.
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Skip re-checking emitted realizations.
    #[arg(long, global = true)]
    no_verify: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct HypergraphInput {
    /// Input file; standard input when absent or `-`.
    file: Option<PathBuf>,
    /// Minimize the family instead of rejecting a non-antichain.
    #[arg(long)]
    minimize: bool,
}

#[derive(Args)]
struct UniformTarget {
    /// Rank of the uniform hypergraph.
    #[arg(long = "r")]
    r: usize,
    /// Ground set: comma-separated labels, or a number n for 1..n.
    #[arg(long)]
    ground: String,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal dominating sets of a graph.
    Domsets { file: Option<PathBuf> },
    /// Inclusion-minimal closed neighborhoods of a graph.
    Neighborhoods { file: Option<PathBuf> },
    /// Transversal (blocker) of a hypergraph.
    Transversal(HypergraphInput),
    /// Meet of hypergraphs given as files or as `---`-separated blocks.
    Meet {
        files: Vec<PathBuf>,
        #[arg(long)]
        minimize: bool,
    },
    /// Whether the first hypergraph is below the second.
    Leq {
        files: Vec<PathBuf>,
        #[arg(long)]
        minimize: bool,
    },
    /// Decide whether a hypergraph is a domination hypergraph.
    Recognize(HypergraphInput),
    /// Closed-form recognition of a uniform hypergraph.
    UniformCheck(UniformTarget),
    /// All domination completions of a uniform hypergraph.
    Completions(UniformTarget),
    /// Minimal domination completions, with every witness graph.
    MinimalCompletions {
        #[command(flatten)]
        target: UniformTarget,
        /// Print the summary row: n, r, s, decomposition parameter, shapes.
        #[arg(long)]
        table: bool,
    },
    /// Decomposition parameter with a witness.
    Decompose(UniformTarget),
    /// Spanning star forests of a ground set.
    StarForests {
        #[arg(long)]
        ground: String,
        /// Print only the number of forests.
        #[arg(long)]
        count: bool,
    },
    /// Every graph with the same minimal dominating sets as a star forest.
    ExpandRealizations { file: Option<PathBuf> },
    /// Run the acceptance suite.
    Verify {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

enum Failure {
    Domain(domhg::Error),
    Io(String),
}

impl From<domhg::Error> for Failure {
    fn from(e: domhg::Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome = Result<(String, bool), Failure>;

fn read_text(file: Option<&PathBuf>) -> Result<String, Failure> {
    match file {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn parse_ground(spec: &str) -> Result<GroundSet, Failure> {
    let spec = spec.trim();
    if !spec.contains(',') {
        if let Ok(n) = spec.parse::<usize>() {
            return Ok(GroundSet::range(n)?);
        }
    }
    Ok(GroundSet::new(spec.split(',').map(str::trim))?)
}

/// Hypergraphs from several files, or from `---`-separated blocks of one input.
fn read_hypergraphs(files: &[PathBuf], minimize: bool) -> Result<Vec<Hypergraph>, Failure> {
    let texts: Vec<String> = if files.len() > 1 {
        files.iter().map(|f| read_text(Some(f))).collect::<Result<_, _>>()?
    } else {
        let text = read_text(files.first())?;
        let mut blocks = vec![String::new()];
        for line in text.lines() {
            if line.trim() == "---" {
                blocks.push(String::new());
            } else {
                let last = blocks.last_mut().expect("non-empty");
                last.push_str(line);
                last.push('\n');
            }
        }
        blocks
    };
    Ok(texts
        .iter()
        .map(|t| parse_hypergraph(t, minimize))
        .collect::<Result<_, _>>()?)
}

fn hypergraph_out(h: &Hypergraph, as_json: bool) -> String {
    if as_json {
        serde_json::to_string(h).expect("serializable")
    } else {
        format_hypergraph_text(h).trim_end().to_string()
    }
}

fn recognition_out(res: &RecognitionResult, as_json: bool) -> String {
    if as_json {
        return serde_json::to_string(res).expect("serializable");
    }
    let mut lines = vec![
        format!("domination: {}", if res.is_domination { "yes" } else { "no" }),
        format!("rejected by necessary condition: {}", res.rejected_by_necessary_condition),
        format!("realizations: {}", res.realizations.len()),
    ];
    lines.extend(res.realizations.iter().map(|g| g.to_string()));
    lines.join("\n")
}

fn exactness_label(e: Exactness) -> &'static str {
    match e {
        Exactness::Exhaustive => "exact, searched over the swept minimal completions",
        Exactness::ClosedForm => {
            "verified witness; minimal over the closed-form family of minimal completions"
        }
        Exactness::UpperBound => "upper bound: exact search exceeded its budget",
    }
}

fn run(cli: &Cli) -> Outcome {
    let workers = cli.workers.unwrap_or_else(available_workers).max(1);
    let mut config = SearchConfig::default().with_workers(workers);
    config.cap = cli.cap;
    config.verify_outputs = !cli.no_verify;
    config.hard_cap = std::env::var("DOMHG_MAX_N").ok().and_then(|v| v.trim().parse().ok());
    let js = cli.json;

    let out = match &cli.command {
        Command::Domsets { file } => {
            let g = parse_graph(&read_text(file.as_ref())?)?;
            hypergraph_out(&g.minimal_dominating_sets(), js)
        }
        Command::Neighborhoods { file } => {
            let g = parse_graph(&read_text(file.as_ref())?)?;
            hypergraph_out(&g.minimal_closed_neighborhoods(), js)
        }
        Command::Transversal(input) => {
            let h = parse_hypergraph(&read_text(input.file.as_ref())?, input.minimize)?;
            hypergraph_out(&h.transversal(), js)
        }
        Command::Meet { files, minimize } => {
            let hs = read_hypergraphs(files, *minimize)?;
            hypergraph_out(&Hypergraph::meet(&hs)?, js)
        }
        Command::Leq { files, minimize } => {
            let hs = read_hypergraphs(files, *minimize)?;
            if hs.len() != 2 {
                return Err(domhg::Error::Parse {
                    line: 1,
                    message: format!("leq needs exactly two hypergraphs, got {}", hs.len()),
                }
                .into());
            }
            let leq = hs[0].is_leq(&hs[1])?;
            if js {
                json!({ "leq": leq }).to_string()
            } else {
                leq.to_string()
            }
        }
        Command::Recognize(input) => {
            let h = parse_hypergraph(&read_text(input.file.as_ref())?, input.minimize)?;
            recognition_out(&recognize(&h, &config)?, js)
        }
        Command::UniformCheck(t) => {
            let ground = parse_ground(&t.ground)?;
            recognition_out(&uniform_recognition(t.r, &ground)?, js)
        }
        Command::Completions(t) => {
            let ground = parse_ground(&t.ground)?;
            let all = completions(t.r, &ground, &config)?;
            if js {
                let items: Vec<_> = all
                    .iter()
                    .map(|(h, g)| json!({ "hypergraph": h, "witness": g }))
                    .collect();
                serde_json::to_string(&items).expect("serializable")
            } else {
                let mut lines = vec![format!("completions: {}", all.len())];
                lines.extend(all.iter().map(|(h, g)| format!("{h}  witness {g}")));
                lines.join("\n")
            }
        }
        Command::MinimalCompletions { target, table } => {
            let ground = parse_ground(&target.ground)?;
            if *table {
                let row = CompletionReport::compute(target.r, &ground, &config)?.table_row();
                if js {
                    serde_json::to_string(&row).expect("serializable")
                } else {
                    row.to_string()
                }
            } else {
                let minimal = minimal_completions(target.r, &ground, &config)?;
                if js {
                    let items: Vec<_> = minimal
                        .iter()
                        .map(|(h, gs)| json!({ "hypergraph": h, "witnesses": gs }))
                        .collect();
                    serde_json::to_string(&items).expect("serializable")
                } else {
                    let mut lines = vec![format!("minimal completions: {}", minimal.len())];
                    for (h, gs) in &minimal {
                        let ws: Vec<String> = gs.iter().map(|g| g.to_string()).collect();
                        lines.push(format!("{h}  witnesses {}", ws.join(" ")));
                    }
                    lines.join("\n")
                }
            }
        }
        Command::Decompose(t) => {
            let ground = parse_ground(&t.ground)?;
            let d = decompose_or_bound(t.r, &ground, &config)?;
            if js {
                serde_json::to_string(&d).expect("serializable")
            } else {
                let mut lines = vec![
                    format!("decomposition parameter: {}", d.value),
                    format!("status: {}", exactness_label(d.exactness)),
                    format!("candidates: {}", d.candidates),
                    format!("no decomposition with fewer than {} members", d.lower_bound),
                ];
                lines.extend(d.witness.iter().map(|h| h.to_string()));
                lines.join("\n")
            }
        }
        Command::StarForests { ground, count } => {
            let ground = parse_ground(ground)?;
            let forests = enumerate_family(GraphFamilyKind::StarForests, &ground, None)?.into_vec();
            match (*count, js) {
                (true, true) => json!({ "count": forests.len() }).to_string(),
                (true, false) => forests.len().to_string(),
                (false, true) => serde_json::to_string(&forests).expect("serializable"),
                (false, false) => forests.iter().map(|g| g.to_string()).collect::<Vec<_>>().join("\n"),
            }
        }
        Command::ExpandRealizations { file } => {
            let g = parse_graph(&read_text(file.as_ref())?)?;
            let all = realization_expansion(&g, &config)?;
            if js {
                serde_json::to_string(&all).expect("serializable")
            } else {
                let mut lines = vec![format!("realizations: {}", all.len())];
                lines.extend(all.iter().map(|g| g.to_string()));
                lines.join("\n")
            }
        }
        Command::Verify { seed } => {
            let results = run_all(&VerifyConfig { workers, seed: *seed });
            let ok = results.iter().all(|r| r.passed);
            let text = if js {
                serde_json::to_string(&results).expect("serializable")
            } else {
                format_report(&results).trim_end().to_string()
            };
            return Ok((text, ok));
        }
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, ok)) => {
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = writeln!(io::stdout().lock(), "{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {}: {e}", e.name());
            ExitCode::from(if e.is_parse_error() { 2 } else { 1 })
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: Io: {msg}");
            ExitCode::from(1)
        }
    }
}
