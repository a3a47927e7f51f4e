//! Command-line front end for the connectivity oracles: generate graphs,
//! build and persist oracles, answer queries, verify against brute force,
//! and benchmark query latency.
//!
//! Exit codes: 0 success, 1 usage, 2 unreadable or malformed input,
//! 3 graph not k-connected, 4 verification mismatch.

use std::collections::HashSet;
use std::fs;
use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use vcq_core::families;
use vcq_core::format::{self, Oracle};
use vcq_core::general::GeneralOracle;
use vcq_core::graph::{emit_graph, parse_graph, Graph, NodeId};
use vcq_core::kconn::KConnOracle;
use vcq_core::verify::oracle_equivalence;

const EXIT_USAGE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_NOT_K_CONNECTED: u8 = 3;
const EXIT_VERIFY_MISMATCH: u8 = 4;

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn parse(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_PARSE,
            message: message.into(),
        }
    }

    fn not_connected(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_NOT_K_CONNECTED,
            message: message.into(),
        }
    }
}

type CmdResult = Result<(), Failure>;

#[derive(Parser)]
#[command(name = "vcq", version, about = "Vertex-connectivity query oracles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a named graph family in the text format.
    Gen {
        /// Family name: complete, cycle, path, petersen, wheel, hypercube,
        /// bridged-cliques, gnp.
        family: String,
        /// Family parameters, e.g. `gen bridged-cliques 6 3` or
        /// `gen gnp 40 0.3 7`.
        args: Vec<String>,
        /// Write to a file instead of stdout.
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// For gnp: retry with seeds seed, seed+1, ... until the sample is
        /// this connected.
        #[arg(long)]
        connectivity: Option<usize>,
        /// For gnp with --connectivity: attempts before giving up.
        #[arg(long, default_value_t = 64)]
        tries: u64,
    },
    /// Build an oracle from a graph file and persist it.
    Build {
        graph: PathBuf,
        /// Connectivity threshold k.
        #[arg(short)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Mode::Kconn)]
        mode: Mode,
        /// Output oracle file.
        #[arg(short, long)]
        out: PathBuf,
        /// Confirm kappa(s, t) >= k for all pairs before building
        /// (kconn mode). Auto means on for n <= 300.
        #[arg(long, value_enum, default_value_t = VerifyFlag::Auto)]
        verify: VerifyFlag,
    },
    /// Answer connectivity queries from an oracle file.
    Query {
        oracle: PathBuf,
        /// Whitespace-separated node ids forming pairs, e.g. `0 2 1 3`.
        pairs: Vec<String>,
        /// Read pairs from a file instead (stdin if neither is given).
        #[arg(long)]
        pairs_file: Option<PathBuf>,
    },
    /// Print an oracle's space accounting against its size bounds.
    Stats { oracle: PathBuf },
    /// Replay every query against brute force on the original graph.
    /// Emits one tab-separated line per check: name, instance, status.
    Verify { oracle: PathBuf, graph: PathBuf },
    /// Measure mean query latency over batched random pairs.
    Bench {
        oracle: PathBuf,
        #[arg(long, default_value_t = 1_000_000)]
        queries: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Kconn,
    General,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyFlag {
    Auto,
    On,
    Off,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes; everything else is
            // a usage error, which this tool reports as exit code 1.
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let _ = e.print();
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let result = match cli.command {
        Command::Gen {
            family,
            args,
            out,
            connectivity,
            tries,
        } => cmd_gen(&family, &args, out.as_deref(), connectivity, tries),
        Command::Build {
            graph,
            k,
            mode,
            out,
            verify,
        } => cmd_build(&graph, k, mode, &out, verify),
        Command::Query {
            oracle,
            pairs,
            pairs_file,
        } => cmd_query(&oracle, &pairs, pairs_file.as_deref()),
        Command::Stats { oracle } => cmd_stats(&oracle),
        Command::Verify { oracle, graph } => cmd_verify(&oracle, &graph),
        Command::Bench {
            oracle,
            queries,
            seed,
        } => cmd_bench(&oracle, queries, seed),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_file(path: &Path) -> Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|e| Failure::parse(format!("cannot read {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    let bytes = read_file(path)?;
    let text = String::from_utf8(bytes)
        .map_err(|_| Failure::parse(format!("{} is not UTF-8 text", path.display())))?;
    parse_graph(&text)
        .map_err(|e| Failure::parse(format!("{}:{}: {}", path.display(), e.line, e.kind)))
}

fn load_oracle(path: &Path) -> Result<Oracle, Failure> {
    let bytes = read_file(path)?;
    format::load(&bytes).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))
}

fn write_output(path: Option<&Path>, content: &str) -> CmdResult {
    match path {
        Some(path) => fs::write(path, content)
            .map_err(|e| Failure::parse(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

// ----- gen -----

fn cmd_gen(
    family: &str,
    args: &[String],
    out: Option<&Path>,
    connectivity: Option<usize>,
    tries: u64,
) -> CmdResult {
    if connectivity.is_some() && family != "gnp" {
        return Err(Failure::usage("--connectivity only applies to gnp"));
    }
    let g = make_family(family, args, connectivity, tries)?;
    write_output(out, &emit_graph(&g))
}

fn arity(args: &[String], family: &str, want: usize) -> CmdResult {
    if args.len() != want {
        return Err(Failure::usage(format!(
            "{family} takes {want} parameter(s), got {}",
            args.len()
        )));
    }
    Ok(())
}

fn num<T: std::str::FromStr>(arg: &str, what: &str) -> Result<T, Failure> {
    arg.parse()
        .map_err(|_| Failure::usage(format!("{what} must be a number, got {arg:?}")))
}

fn make_family(
    family: &str,
    args: &[String],
    connectivity: Option<usize>,
    tries: u64,
) -> Result<Graph, Failure> {
    let graph = match family {
        "complete" => {
            arity(args, family, 1)?;
            let n: usize = num(&args[0], "node count")?;
            require(n >= 1, "complete needs n >= 1")?;
            families::complete(n)
        }
        "cycle" => {
            arity(args, family, 1)?;
            let n: usize = num(&args[0], "node count")?;
            require(n >= 3, "cycle needs n >= 3")?;
            families::cycle(n)
        }
        "path" => {
            arity(args, family, 1)?;
            let n: usize = num(&args[0], "node count")?;
            require(n >= 1, "path needs n >= 1")?;
            families::path(n)
        }
        "petersen" => {
            arity(args, family, 0)?;
            families::petersen()
        }
        "wheel" => {
            arity(args, family, 1)?;
            let r: usize = num(&args[0], "rim size")?;
            require(r >= 3, "wheel needs a rim of at least 3 nodes")?;
            families::wheel(r)
        }
        "hypercube" => {
            arity(args, family, 1)?;
            let d: u32 = num(&args[0], "dimension")?;
            require(d <= 16, "hypercube dimension must be at most 16")?;
            families::hypercube(d)
        }
        "bridged-cliques" => {
            arity(args, family, 2)?;
            let c: usize = num(&args[0], "clique size")?;
            let b: usize = num(&args[1], "bridge count")?;
            require(c >= 2, "bridged-cliques needs cliques of at least 2 nodes")?;
            require(b <= c, "bridged-cliques cannot have more bridges than clique nodes")?;
            families::bridged_cliques(c, b)
        }
        "gnp" => {
            arity(args, family, 3)?;
            let n: usize = num(&args[0], "node count")?;
            let p: f64 = num(&args[1], "edge probability")?;
            let seed: u64 = num(&args[2], "seed")?;
            require((0.0..=1.0).contains(&p), "edge probability must be in [0, 1]")?;
            match connectivity {
                None => families::gnp(n, p, seed),
                Some(k) => families::gnp_k_connected(n, p, seed, k, tries).ok_or_else(|| {
                    Failure::not_connected(format!(
                        "no {k}-connected sample among {tries} draws from gnp({n}, {p})"
                    ))
                })?,
            }
        }
        other => {
            return Err(Failure::usage(format!(
                "unknown family {other:?}; expected complete, cycle, path, petersen, \
                 wheel, hypercube, bridged-cliques, or gnp"
            )))
        }
    };
    Ok(graph)
}

fn require(ok: bool, message: &str) -> CmdResult {
    if ok {
        Ok(())
    } else {
        Err(Failure::usage(message))
    }
}

// ----- build / stats -----

fn cmd_build(graph: &Path, k: usize, mode: Mode, out: &Path, verify: VerifyFlag) -> CmdResult {
    let g = load_graph(graph)?;
    if k == 0 {
        return Err(Failure::usage("k must be at least 1"));
    }
    let oracle = match mode {
        Mode::Kconn => {
            let verify = match verify {
                VerifyFlag::Auto => g.n() <= 300,
                VerifyFlag::On => true,
                VerifyFlag::Off => false,
            };
            let built = KConnOracle::build(&g, k, verify)
                .map_err(|e| Failure::not_connected(e.to_string()))?;
            Oracle::KConn(built)
        }
        Mode::General => {
            if k + 1 > u8::MAX as usize {
                return Err(Failure::usage("k must be at most 254 in general mode"));
            }
            Oracle::General(GeneralOracle::build(&g, k))
        }
    };
    let bytes = format::save(&oracle);
    fs::write(out, &bytes)
        .map_err(|e| Failure::parse(format!("cannot write {}: {e}", out.display())))?;
    print!("{}", render_stats(&oracle));
    println!("file-bytes {}", bytes.len());
    Ok(())
}

fn cmd_stats(oracle: &Path) -> CmdResult {
    let oracle = load_oracle(oracle)?;
    print!("{}", render_stats(&oracle));
    Ok(())
}

/// Space accounting, one `name value` line each, with the size bounds the
/// structure promises to respect.
fn render_stats(oracle: &Oracle) -> String {
    let mut out = String::new();
    let k = oracle.k();
    let n = oracle.n();
    let mut line = |name: &str, value: String| {
        out.push_str(&format!("{name} {value}\n"));
    };
    let cut_members: usize = oracle.cuts().iter().map(|c| c.size()).sum();
    match oracle {
        Oracle::KConn(o) => {
            line("mode", "kconn".into());
            line("k", k.to_string());
            line("n", n.to_string());
            line(
                "cuts",
                format!("{} (bound 2n = {})", o.cuts().len(), 2 * n),
            );
            line("cut-members", cut_members.to_string());
            line(
                "forests",
                format!("{} (bound 2k+1 = {})", o.forests().len(), 2 * k + 1),
            );
            let forest_nodes: usize = o.forests().iter().map(|f| f.len()).sum();
            line("forest-nodes", forest_nodes.to_string());
            line("critical-edges", o.critical_edges().len().to_string());
            let sources = o.source_records().iter().flatten().count();
            line("sources", sources.to_string());
            line(
                "boundary-entries",
                format!("{} (k per source)", k * sources),
            );
            let total = n
                + o.critical_edges().len() * 2
                + sources * (k + 3)
                + forest_nodes * 3
                + n * o.forests().len()
                + cut_members;
            line("total-entries", total.to_string());
        }
        Oracle::General(o) => {
            let stats = o.stats();
            line("mode", "general".into());
            line("k", k.to_string());
            line("n", n.to_string());
            line(
                "cuts",
                format!("{} (bound (3k+2)n = {})", o.cuts().len(), (3 * k + 2) * n),
            );
            line(
                "adjacent-cuts",
                format!("{} (bound (k+1)n = {})", stats.adjacent_cuts, (k + 1) * n),
            );
            line(
                "nonadjacent-cuts",
                format!(
                    "{} (bound (2k+1)n = {})",
                    stats.nonadjacent_cuts,
                    (2 * k + 1) * n
                ),
            );
            line("cut-members", cut_members.to_string());
            line("matrix-cells", (n * n).to_string());
            line("total-entries", (2 * n * n + cut_members).to_string());
        }
    }
    out
}

// ----- query -----

fn cmd_query(oracle: &Path, pairs: &[String], pairs_file: Option<&Path>) -> CmdResult {
    let oracle = load_oracle(oracle)?;
    let tokens: String = if !pairs.is_empty() {
        if pairs_file.is_some() {
            return Err(Failure::usage(
                "give pairs as arguments or via --pairs-file, not both",
            ));
        }
        pairs.join(" ")
    } else if let Some(path) = pairs_file {
        String::from_utf8(read_file(path)?)
            .map_err(|_| Failure::parse(format!("{} is not UTF-8 text", path.display())))?
    } else {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::parse(format!("cannot read stdin: {e}")))?;
        buf
    };
    let ids: Vec<usize> = tokens
        .split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| Failure::parse(format!("pair token {t:?} is not a node id")))
        })
        .collect::<Result<_, _>>()?;
    if !ids.len().is_multiple_of(2) {
        return Err(Failure::parse(format!(
            "odd number of node ids ({}); queries are pairs",
            ids.len()
        )));
    }
    let mut out = String::new();
    for pair in ids.chunks_exact(2) {
        let (s, t) = (pair[0], pair[1]);
        if s >= oracle.n() || t >= oracle.n() {
            return Err(Failure::parse(format!(
                "pair {s} {t} out of range for n = {}",
                oracle.n()
            )));
        }
        let (s, t) = (NodeId::new(s), NodeId::new(t));
        match oracle.query_cut(s, t) {
            Ok(None) => out.push_str(&format!("{s} {t} CON\n")),
            Ok(Some(id)) => {
                let cut = oracle.cut(id);
                out.push_str(&format!("{s} {t} CUT {}", cut.size()));
                for v in &cut.vertices {
                    out.push_str(&format!(" {v}"));
                }
                for e in &cut.edges {
                    out.push_str(&format!(" E({},{})", e.u(), e.v()));
                }
                out.push('\n');
            }
            Err(e) => return Err(Failure::parse(e)),
        }
    }
    print!("{out}");
    Ok(())
}

// ----- verify -----

fn cmd_verify(oracle: &Path, graph: &Path) -> CmdResult {
    let oracle = load_oracle(oracle)?;
    let g = load_graph(graph)?;
    let report = oracle_equivalence(&oracle, &g, oracle.k());
    let failed: HashSet<(&str, NodeId, NodeId)> = report
        .mismatches
        .iter()
        .map(|m| (m.check, m.s, m.t))
        .collect();
    let mut out = String::new();
    let mut tsv = |check: &str, instance: String, ok: bool| {
        let status = if ok { "ok" } else { "fail" };
        out.push_str(&format!("{check}\t{instance}\t{status}\n"));
    };
    let shape_ok = oracle.n() == g.n();
    tsv("shape", "-".into(), shape_ok);
    if shape_ok {
        for s in g.nodes() {
            for t in g.nodes() {
                if s == t {
                    continue;
                }
                let inst = format!("{s}-{t}");
                tsv("verdict", inst.clone(), !failed.contains(&("verdict", s, t)));
                if let Ok(Some(_)) = oracle.query_cut(s, t) {
                    tsv("cut", inst.clone(), !failed.contains(&("cut", s, t)));
                }
                if matches!(oracle, Oracle::General(_)) {
                    tsv("matrix", inst, !failed.contains(&("matrix", s, t)));
                }
            }
        }
    }
    print!("{out}");
    eprintln!(
        "checked {} ordered pairs, validated {} cuts, {} mismatches",
        report.pairs_checked,
        report.cuts_validated,
        report.mismatches.len()
    );
    for m in &report.mismatches {
        eprintln!("mismatch {} {}-{}: {}", m.check, m.s, m.t, m.detail);
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure {
            code: EXIT_VERIFY_MISMATCH,
            message: format!("{} mismatches", report.mismatches.len()),
        })
    }
}

// ----- bench -----

fn cmd_bench(oracle: &Path, queries: usize, seed: u64) -> CmdResult {
    let oracle = load_oracle(oracle)?;
    let n = oracle.n();
    if n < 2 {
        return Err(Failure::usage("bench needs an oracle over at least 2 nodes"));
    }
    if queries == 0 {
        return Err(Failure::usage("bench needs at least one query"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nodes: Vec<usize> = (0..n).collect();
    let batch: Vec<(NodeId, NodeId)> = (0..queries)
        .map(|_| {
            let pick: Vec<usize> = nodes.choose_multiple(&mut rng, 2).copied().collect();
            (NodeId::new(pick[0]), NodeId::new(pick[1]))
        })
        .collect();
    let start = Instant::now();
    let mut cut_answers = 0usize;
    for &(s, t) in &batch {
        if oracle.query_cut(s, t).expect("distinct nodes").is_some() {
            cut_answers += 1;
        }
    }
    let elapsed = start.elapsed();
    println!("n {n}");
    println!("queries {queries}");
    println!("cut-answers {cut_answers}");
    println!("total-us {}", elapsed.as_micros());
    println!(
        "mean-ns {:.1}",
        elapsed.as_nanos() as f64 / queries as f64
    );
    Ok(())
}
