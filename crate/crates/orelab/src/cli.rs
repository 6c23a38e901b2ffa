//! The `orelab` command line.

use std::fmt::Write as _;
use std::path::PathBuf;

use anyhow::Context as _;
use clap::{Parser, Subcommand};
use orelab_core::discharge::{closing_inequalities, run_discharge};
use orelab_core::ore::{enumerate_5_ore, OreRecognizer};
use orelab_core::packing::t_number;
use orelab_core::potential::{p_ky, structure_lemma_audit, verify_main_theorem};
use orelab_core::{families, Graph};

use crate::campaign::{self, list, CampaignConfig, Suite};
use crate::corpus::{Corpus, CorpusEntry, Provenance};
use crate::format::{parse_any, parse_vertex_list};
use crate::fuzz;
use crate::report::Report;

pub const NAMED: [&str; 5] = ["k5", "c5_join_k2", "groetzsch", "k1_join_groetzsch", "mycielski_groetzsch"];

pub fn named_graph(name: &str) -> Option<Graph> {
    Some(match name {
        "k5" => families::complete(5),
        "c5_join_k2" => families::c5_join_k2(),
        "groetzsch" => families::groetzsch(),
        "k1_join_groetzsch" => families::k1_join_groetzsch(),
        "mycielski_groetzsch" => families::mycielski_groetzsch(),
        _ => return None,
    })
}

#[derive(Debug, Parser)]
#[command(name = "orelab", version, about = "Build and audit a corpus of 5-critical graphs")]
pub struct Cli {
    /// Corpus directory.
    #[arg(long, global = true, env = "ORELAB_CORPUS", default_value = "corpus")]
    pub corpus: PathBuf,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate 5-Ore graphs up to `max-n` vertices into the corpus.
    Gen {
        #[arg(long, default_value_t = 13)]
        max_n: usize,
    },
    /// Add a named graph or every graph in a file (text format or graph6).
    Add {
        /// One of k5, c5_join_k2, groetzsch, k1_join_groetzsch,
        /// mycielski_groetzsch, or a path.
        target: String,
    },
    /// Run a verification suite over the corpus.
    Verify {
        suite: Suite,
        /// Most subsets examined per graph by the ore5 suite.
        #[arg(long, default_value_t = 256)]
        budget: usize,
        /// Extension records per graph.
        #[arg(long, default_value_t = 8)]
        records: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Build one critical extension of a corpus graph and check it.
    Extend {
        key: String,
        /// Vertex list such as `0,1,2,3,4`.
        #[arg(long)]
        r: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print `T(G)` and a witnessing packing.
    T { key: String },
    /// Print `p_KY`, `T` and `p` with the case bound.
    Potential { key: String },
    /// Print the charge ledger and the closing counts.
    Discharge { key: String },
    /// Evaluate the structural predicates of a minimum counterexample.
    Audit { key: String },
    /// List corpus entries.
    List,
}

/// Command failures split by exit code.
#[derive(Debug)]
pub enum Failure {
    /// Checks ran and some failed (exit 1).
    Checks,
    /// Bad arguments, IO or parse errors (exit 2).
    Usage(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

/// Runs a command, writing its report to `out` and warnings to `err`.
pub fn execute(cli: &Cli, out: &mut String, err: &mut String) -> Result<(), Failure> {
    match &cli.command {
        Command::Gen { max_n } => gen(cli, *max_n, out),
        Command::Add { target } => add(cli, target, out),
        Command::Verify { suite, budget, records, seed } => verify(cli, *suite, CampaignConfig { seed: *seed, budget: *budget, records: *records }, out, err),
        Command::Extend { key, r, seed } => extend(cli, key, r, *seed, out),
        Command::T { key } => {
            let (e, g) = load(cli, key)?;
            let (t, packing) = t_number(&g);
            writeln!(out, "key {}\nT {t}", e.key).unwrap();
            for piece in packing.pieces {
                writeln!(out, "piece {}", list(piece)).unwrap();
            }
            Ok(())
        }
        Command::Potential { key } => {
            let (e, g) = load(cli, key)?;
            let t = t_number(&g).0;
            writeln!(out, "key {}\nn {}\nm {}\np_ky {}\nT {t}", e.key, g.n(), g.edge_count(), p_ky(&g)).unwrap();
            writeln!(out, "p {}", orelab_core::potential::potential_from(g.n(), g.edge_count(), t)).unwrap();
            match verify_main_theorem(&g, &mut OreRecognizer::new()) {
                Ok(r) => writeln!(out, "case {:?}\nbound {}\nslack {}", r.case, r.bound, r.slack()).unwrap(),
                Err(_) => writeln!(out, "case none (not 5-critical)").unwrap(),
            }
            Ok(())
        }
        Command::Discharge { key } => discharge(cli, key, out),
        Command::Audit { key } => {
            let (e, g) = load(cli, key)?;
            let audit = structure_lemma_audit(&g, &mut OreRecognizer::new()).with_context(|| format!("entry {}", e.key))?;
            writeln!(out, "key {}\nis_5_ore {}", e.key, audit.is_5_ore).unwrap();
            for (name, holds) in audit.rows() {
                writeln!(out, "audit {name} {holds}").unwrap();
            }
            Ok(())
        }
        Command::List => {
            let corpus = Corpus::open(&cli.corpus)?;
            for e in corpus.entries()? {
                let i = e.invariants;
                let kind = match &e.provenance {
                    Provenance::Recipe { .. } => "recipe",
                    Provenance::Named { .. } => "named",
                    Provenance::File { .. } => "file",
                    Provenance::Search { .. } => "search",
                };
                writeln!(out, "{} n={} m={} p_ky={} T={} critical={} ore={} {kind}", e.key, i.n, i.m, i.p_ky, i.t, i.five_critical, i.five_ore).unwrap();
            }
            Ok(())
        }
    }
}

fn load(cli: &Cli, key: &str) -> anyhow::Result<(CorpusEntry, Graph)> {
    let e = Corpus::open(&cli.corpus)?.find(key)?;
    let g = e.parse_graph()?;
    Ok((e, g))
}

fn gen(cli: &Cli, max_n: usize, out: &mut String) -> Result<(), Failure> {
    if max_n > 21 {
        return Err(Failure::Usage(anyhow::anyhow!("--max-n {max_n} is too large (at most 21)")));
    }
    let corpus = Corpus::create(&cli.corpus)?;
    let mut rec = OreRecognizer::new();
    let (mut added, mut total) = (0, 0);
    for class in enumerate_5_ore(max_n) {
        let e = CorpusEntry::new(&class.graph, Provenance::Recipe { recipe: class.recipe.to_string() }, &mut rec);
        total += 1;
        added += usize::from(corpus.insert(&e)?);
    }
    writeln!(out, "enumerated {total} classes, added {added}").unwrap();
    Ok(())
}

fn add(cli: &Cli, target: &str, out: &mut String) -> Result<(), Failure> {
    let (graphs, provenance) = match named_graph(target) {
        Some(g) => (vec![g], Provenance::Named { name: target.to_string() }),
        None => {
            let path = PathBuf::from(target);
            if !path.exists() {
                return Err(Failure::Usage(anyhow::anyhow!("`{target}` is neither a named graph ({}) nor a file", NAMED.join(", "))));
            }
            let text = std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
            let graphs = parse_any(&text).with_context(|| format!("parsing {}", path.display()))?;
            (graphs, Provenance::File { path: target.to_string() })
        }
    };
    let corpus = Corpus::create(&cli.corpus)?;
    let mut rec = OreRecognizer::new();
    for g in &graphs {
        let e = CorpusEntry::new(g, provenance.clone(), &mut rec);
        let fresh = corpus.insert(&e)?;
        writeln!(out, "{} n={} m={} {}", e.key, e.invariants.n, e.invariants.m, if fresh { "added" } else { "exists" }).unwrap();
    }
    Ok(())
}

fn verify(cli: &Cli, suite: Suite, cfg: CampaignConfig, out: &mut String, err: &mut String) -> Result<(), Failure> {
    let corpus = Corpus::open(&cli.corpus)?;
    let entries = corpus.entries()?;
    if entries.is_empty() {
        writeln!(err, "warning: corpus {} is empty", cli.corpus.display()).unwrap();
    }
    let report = campaign::run(&entries, suite, &cfg);
    write!(out, "{report}").unwrap();
    let mut ledger = vec![format!("verify suite={suite:?} seed={} budget={} records={} {}", cfg.seed, cfg.budget, cfg.records, report.summary())];
    ledger.extend(report.lines.iter().map(|l| l.to_string()).filter(|l| l.contains(" FAIL ")));
    corpus.append_ledger(&ledger)?;
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn extend(cli: &Cli, key: &str, r: &str, seed: u64, out: &mut String) -> Result<(), Failure> {
    let (e, g) = load(cli, key)?;
    let r = parse_vertex_list(r).map_err(|m| anyhow::anyhow!("--r: {m}"))?;
    let record = fuzz::random_extension(&g, Some(r), &mut fuzz::rng(seed)).map_err(|m| anyhow::anyhow!("--r {}: {m}", list(r)))?;
    let colors: Vec<String> = record.phi.colors().iter().map(u8::to_string).collect();
    writeln!(out, "key {}\nr {}\nphi {}", e.key, list(record.r), colors.join(",")).unwrap();
    writeln!(out, "extender n={} m={}", record.w.n(), record.w.edge_count()).unwrap();
    writeln!(out, "core {}\nr_prime {}\ncomplete {}\nspanning {}", record.core_size(), list(record.r_prime), record.complete, record.spanning).unwrap();
    let mut report = Report::default();
    campaign::extension_checks(&g, &e.key, &record, &mut report);
    write!(out, "{report}").unwrap();
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn discharge(cli: &Cli, key: &str, out: &mut String) -> Result<(), Failure> {
    let (e, g) = load(cli, key)?;
    writeln!(out, "key {}", e.key).unwrap();
    write!(out, "{}", run_discharge(&g)).unwrap();
    match closing_inequalities(&g) {
        Ok(r) => {
            writeln!(out, "S {}\nM {}\nmic {}\nedge_bound_slack {}\ncover_slack {}", r.singles, r.pairs, r.mic, r.edge_bound_slack, r.cover_slack).unwrap();
            match r.count_slack {
                Some(s) => writeln!(out, "count_slack {s}").unwrap(),
                None => writeln!(out, "count_slack - (p <= 0)").unwrap(),
            }
        }
        Err(_) => writeln!(out, "closing counts skipped: not 5-critical").unwrap(),
    }
    Ok(())
}

/// Parses arguments, runs, prints, and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let (mut out, mut err) = (String::new(), String::new());
    let result = execute(&cli, &mut out, &mut err);
    print!("{out}");
    eprint!("{err}");
    match result {
        Ok(()) => 0,
        Err(Failure::Checks) => 1,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            2
        }
    }
}
