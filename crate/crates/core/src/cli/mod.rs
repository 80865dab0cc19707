//! Command-line front end: `ingest`, `stats`, `rank`, `eval`.
//!
//! Exit codes: 0 success, 1 runtime failure, 2 usage error.

mod manifest;

use std::ffi::OsString;
use std::fs;
use std::io::BufReader;
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

pub use manifest::{InputDigest, RunManifest};

use crate::eval::{compare_report, GroundTruthSet, Metric};
use crate::ingest::{
    corpus_stats, ingest_records, read_clean_corpus, write_clean_corpus, AliasTable, Corpus,
    TimeWindow,
};
use crate::network::{build_citation_graph, build_hetero_graph, project_institution_graph, ClassWeights};
use crate::solver::{
    citation_scores, institution_scores, merge_institution_scores, pagerank, rank, split_scores,
    EntityClass, EntityScores, MergeMap, Method, RankingMetadata, RankingTable, ScoreVector,
    SolverConfig,
};

#[derive(Debug, Parser)]
#[command(name = "iprank", version, about = "Rank papers and institutions on an institution-citation network")]
pub struct Cli {
    /// Probability of following a link (1 - alpha teleports).
    #[arg(long, global = true, default_value_t = 0.85, value_parser = parse_alpha)]
    pub alpha: f64,
    /// L1 convergence threshold.
    #[arg(long, global = true, default_value_t = 1e-10, value_parser = parse_tol)]
    pub tol: f64,
    #[arg(long = "max-iters", global = true, default_value = "200")]
    pub max_iters: NonZeroUsize,
    /// Reserved; every code path is deterministic.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long = "out-dir", global = true, default_value = ".")]
    pub out_dir: PathBuf,
    /// Use the parallel sparse multiply.
    #[arg(long, global = true)]
    pub parallel: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse, normalize and filter a record file into a cleaned corpus.
    Ingest {
        records: PathBuf,
        /// Alias table (`raw<TAB>canonical` lines).
        #[arg(long)]
        aliases: Option<PathBuf>,
        /// Cleaned corpus path (default: OUT_DIR/corpus.clean.tsv).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print corpus statistics for a time window.
    Stats {
        corpus: PathBuf,
        /// START:END, inclusive years (default: whole corpus).
        #[arg(long)]
        window: Option<TimeWindow>,
    },
    /// Compute a ranking and write TSV/JSON tables.
    Rank {
        corpus: PathBuf,
        #[arg(long)]
        window: Option<TimeWindow>,
        #[arg(long, value_enum)]
        method: MethodArg,
        /// Institution merge map (`source<TAB>target` lines) applied to scores.
        #[arg(long)]
        merge: Option<PathBuf>,
        /// Citation:affiliation edge weights for the heterogeneous graph.
        #[arg(long = "class-weights", default_value = "1:1", value_parser = parse_class_weights)]
        class_weights: ClassWeights,
    },
    /// Compare ranking tables and score them against ground-truth sets.
    Eval {
        /// Ranking table TSV; repeat for several. The first anchors Spearman.
        #[arg(long = "table", required = true)]
        tables: Vec<PathBuf>,
        /// Ground-truth file, one identifier per line.
        #[arg(long = "truth")]
        truths: Vec<PathBuf>,
        /// Class for truth files without a `# class:` line.
        #[arg(long = "truth-class", default_value = "paper")]
        truth_class: EntityClass,
        #[arg(long = "metric", value_delimiter = ',', default_value = "spearman")]
        metrics: Vec<Metric>,
        #[arg(long = "n", value_delimiter = ',', default_value = "10,20,30,40,50,60,70,80,90,100")]
        n: Vec<NonZeroUsize>,
        /// Drop truth members missing from a table from its denominators.
        #[arg(long = "exclude-missing")]
        exclude_missing: bool,
        /// Window echoed into the report.
        #[arg(long)]
        window: Option<TimeWindow>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Iprank,
    Pagerank,
    Irank,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Iprank => Method::IPRank,
            MethodArg::Pagerank => Method::PageRank,
            MethodArg::Irank => Method::IRank,
        }
    }
}

fn parse_alpha(s: &str) -> Result<f64, String> {
    let a: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if a > 0.0 && a < 1.0 {
        Ok(a)
    } else {
        Err("alpha must be in (0, 1)".into())
    }
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let t: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if t > 0.0 {
        Ok(t)
    } else {
        Err("tol must be positive".into())
    }
}

fn parse_class_weights(s: &str) -> Result<ClassWeights, String> {
    let (c, a) = s.split_once(':').ok_or("expected CITATION:AFFILIATION")?;
    let parse = |x: &str| -> Result<f64, String> {
        let v: f64 = x.trim().parse().map_err(|e| format!("{e}"))?;
        if v > 0.0 && v.is_finite() {
            Ok(v)
        } else {
            Err("class weights must be positive".into())
        }
    };
    Ok(ClassWeights {
        citation: parse(c)?,
        affiliation: parse(a)?,
    })
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

pub fn execute(cli: &Cli) -> anyhow::Result<()> {
    let solver = SolverConfig {
        alpha: cli.alpha,
        tol: cli.tol,
        max_iters: cli.max_iters.get(),
        parallel: cli.parallel,
    };
    fs::create_dir_all(&cli.out_dir)
        .with_context(|| format!("creating output directory {}", cli.out_dir.display()))?;
    let name = match &cli.command {
        Command::Ingest { .. } => "ingest",
        Command::Stats { .. } => "stats",
        Command::Rank { .. } => "rank",
        Command::Eval { .. } => "eval",
    };
    let mut manifest = RunManifest::new(name, solver, cli.seed);
    let result = match &cli.command {
        Command::Ingest { records, aliases, out } => {
            cmd_ingest(&mut manifest, &cli.out_dir, records, aliases.as_deref(), out.as_deref())
        }
        Command::Stats { corpus, window } => cmd_stats(&mut manifest, corpus, *window),
        Command::Rank {
            corpus,
            window,
            method,
            merge,
            class_weights,
        } => cmd_rank(
            &mut manifest,
            &cli.out_dir,
            corpus,
            *window,
            (*method).into(),
            merge.as_deref(),
            *class_weights,
            &solver,
        ),
        Command::Eval {
            tables,
            truths,
            truth_class,
            metrics,
            n,
            exclude_missing,
            window,
        } => {
            let n: Vec<usize> = n.iter().map(|x| x.get()).collect();
            cmd_eval(
                &mut manifest,
                &cli.out_dir,
                tables,
                truths,
                *truth_class,
                metrics,
                &n,
                *exclude_missing,
                *window,
            )
        }
    };
    match &result {
        Ok(()) => manifest.status = "ok".into(),
        Err(e) => {
            manifest.status = "error".into();
            manifest.error = Some(format!("{e:#}"));
        }
    }
    let path = manifest.path_in(&cli.out_dir);
    fs::write(&path, serde_json::to_string_pretty(&manifest)? + "\n")
        .with_context(|| format!("writing {}", path.display()))?;
    result
}

fn read_input(manifest: &mut RunManifest, path: &Path) -> anyhow::Result<Vec<u8>> {
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    manifest.inputs.push(InputDigest::of(path, &bytes));
    Ok(bytes)
}

fn write_output(manifest: &mut RunManifest, path: &Path, contents: &[u8]) -> anyhow::Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))?;
    manifest.record_output(path);
    Ok(())
}

fn load_corpus(manifest: &mut RunManifest, path: &Path) -> anyhow::Result<Corpus> {
    let bytes = read_input(manifest, path)?;
    read_clean_corpus(&bytes[..]).with_context(|| format!("loading cleaned corpus {}", path.display()))
}

fn cmd_ingest(
    manifest: &mut RunManifest,
    out_dir: &Path,
    records: &Path,
    aliases: Option<&Path>,
    out: Option<&Path>,
) -> anyhow::Result<()> {
    let input = read_input(manifest, records)?;
    let table = match aliases {
        Some(p) if p.exists() => {
            let bytes = read_input(manifest, p)?;
            AliasTable::from_reader(&bytes[..]).with_context(|| format!("loading alias table {}", p.display()))?
        }
        Some(p) => {
            log::warn!("alias file {} not found; using heuristic normalization only", p.display());
            AliasTable::new()
        }
        None => AliasTable::new(),
    };
    let filtered = ingest_records(&input[..], &table)?;
    let report = filtered.report.clone();
    let corpus = Corpus::new(filtered.records, filtered.registry);

    let store = out.map(Path::to_path_buf).unwrap_or_else(|| out_dir.join("corpus.clean.tsv"));
    let mut buf = Vec::new();
    write_clean_corpus(&mut buf, &corpus)?;
    write_output(manifest, &store, &buf)?;
    let report_json = report.to_json();
    write_output(manifest, &out_dir.join("filter_report.json"), (report_json.clone() + "\n").as_bytes())?;
    println!("{report_json}");
    Ok(())
}

fn cmd_stats(manifest: &mut RunManifest, corpus: &Path, window: Option<TimeWindow>) -> anyhow::Result<()> {
    let corpus = load_corpus(manifest, corpus)?;
    let window = match window.or_else(|| corpus.year_range()) {
        Some(w) => w,
        None => {
            log::warn!("corpus is empty");
            println!("{}", crate::ingest::StatsSummary::default());
            return Ok(());
        }
    };
    manifest.window = Some(window);
    let slice = corpus.slice(window);
    println!("{}", corpus_stats(&slice));
    if slice.unresolved_references > 0 {
        println!(
            "unresolved_references\t{} ({} distinct ids)",
            slice.unresolved_references, slice.unresolved_reference_ids
        );
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_rank(
    manifest: &mut RunManifest,
    out_dir: &Path,
    corpus: &Path,
    window: Option<TimeWindow>,
    method: Method,
    merge: Option<&Path>,
    class_weights: ClassWeights,
    solver: &SolverConfig,
) -> anyhow::Result<()> {
    manifest.methods.push(method.to_string());
    let corpus = load_corpus(manifest, corpus)?;
    let merge = match merge {
        Some(p) => {
            let bytes = read_input(manifest, p)?;
            MergeMap::from_reader(&bytes[..]).with_context(|| format!("loading merge map {}", p.display()))?
        }
        None => MergeMap::new(),
    };
    let Some(window) = window.or_else(|| corpus.year_range()) else {
        bail!("corpus is empty");
    };
    manifest.window = Some(window);
    let slice = corpus.slice(window);

    let mut solve = |op: &crate::network::StochasticOperator| -> anyhow::Result<ScoreVector> {
        let result = pagerank(op, solver);
        match &result {
            Ok(pr) => {
                manifest.iterations = Some(pr.iterations_used);
                manifest.final_residual = Some(pr.final_residual);
            }
            Err(crate::Error::NonConvergence { iterations, residual }) => {
                manifest.iterations = Some(*iterations);
                manifest.final_residual = Some(*residual);
            }
            Err(_) => {}
        }
        Ok(result?)
    };

    let mut tables: Vec<(RankingTable, RankingMetadata)> = Vec::new();
    let meta = |pr: &ScoreVector, nodes: usize, edges: usize| RankingMetadata {
        solver: *solver,
        window: Some(window),
        iterations_used: pr.iterations_used,
        final_residual: pr.final_residual,
        graph_nodes: nodes,
        graph_edges: edges,
    };
    match method {
        Method::IPRank => {
            let graph = build_hetero_graph(&slice)?;
            let pr = solve(&graph.transition_operator_weighted(class_weights))?;
            let (papers, institutions) = split_scores(&pr, &graph)?;
            let institutions = merge_institution_scores(&institutions, &merge)?;
            let m = meta(&pr, graph.node_count(), graph.edge_count());
            tables.push((rank(&papers, method), m.clone()));
            tables.push((rank(&institutions, method), m));
        }
        Method::PageRank => {
            let graph = build_citation_graph(&slice);
            let pr = solve(&graph.transition_operator())?;
            let papers = citation_scores(&pr, &graph)?;
            tables.push((rank(&papers, method), meta(&pr, graph.node_count(), graph.edge_count())));
        }
        Method::IRank => {
            let graph = project_institution_graph(&slice);
            let pr = solve(&graph.transition_operator())?;
            let inst: EntityScores = merge_institution_scores(&institution_scores(&pr, &graph)?, &merge)?;
            tables.push((rank(&inst, method), meta(&pr, graph.node_count(), graph.edge_count())));
        }
    }

    for (table, meta) in &tables {
        let stem = format!("{}.{}", method.to_string().to_lowercase(), plural(table.class));
        let mut tsv = Vec::new();
        table.write_tsv(&mut tsv)?;
        write_output(manifest, &out_dir.join(format!("{stem}.tsv")), &tsv)?;
        let json = table.to_json(meta)? + "\n";
        write_output(manifest, &out_dir.join(format!("{stem}.json")), json.as_bytes())?;
        eprintln!("{stem}: {} rows", table.len());
    }
    Ok(())
}

fn plural(class: EntityClass) -> &'static str {
    match class {
        EntityClass::Paper => "papers",
        EntityClass::Institution => "institutions",
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_eval(
    manifest: &mut RunManifest,
    out_dir: &Path,
    table_paths: &[PathBuf],
    truth_paths: &[PathBuf],
    truth_class: EntityClass,
    metrics: &[Metric],
    n_values: &[usize],
    exclude_missing: bool,
    window: Option<TimeWindow>,
) -> anyhow::Result<()> {
    manifest.window = window;
    let mut tables = Vec::new();
    for p in table_paths {
        let bytes = read_input(manifest, p)?;
        let t = RankingTable::read_tsv(BufReader::new(&bytes[..]))
            .with_context(|| format!("reading ranking table {}", p.display()))?;
        manifest.methods.push(t.method.to_string());
        tables.push(t);
    }
    let mut truths = Vec::new();
    for p in truth_paths {
        let bytes = read_input(manifest, p)?;
        let label = p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        let t = GroundTruthSet::from_reader(&bytes[..], truth_class, label)
            .with_context(|| format!("reading ground truth {}", p.display()))?;
        for table in tables.iter().filter(|t2| t2.class == t.class) {
            let missing = t.missing_from(table);
            if !missing.is_empty() {
                log::warn!(
                    "{} of {} members of {} are absent from the {} table",
                    missing.len(),
                    t.len(),
                    t.label,
                    table.method
                );
            }
        }
        truths.push(t);
    }

    let mut mismatches = Vec::new();
    if metrics.contains(&Metric::Spearman) {
        for (i, a) in tables.iter().enumerate() {
            for b in &tables[i + 1..] {
                if a.class != b.class {
                    mismatches.push(format!("spearman: {} table is {}, {} table is {}", a.method, a.class, b.method, b.class));
                }
            }
        }
    }
    if metrics.iter().any(|m| *m != Metric::Spearman) {
        for a in &tables {
            for t in &truths {
                if a.class != t.class {
                    mismatches.push(format!("{} table is {}, truth {} is {}", a.method, a.class, t.label, t.class));
                }
            }
        }
    }

    let mut report = if exclude_missing && !truths.is_empty() {
        // Denominators depend on the table, so evaluate each table separately.
        let mut merged = compare_report(&tables, &[], metrics, n_values)?;
        for table in &tables {
            let restricted: Vec<GroundTruthSet> = truths
                .iter()
                .filter_map(|t| if t.class == table.class { t.restricted_to(table).ok() } else { Some(t.clone()) })
                .collect();
            let mut part = compare_report(std::slice::from_ref(table), &restricted, metrics, n_values)?;
            part.rows.retain(|r| r.metric != Metric::Spearman);
            merged.rows.extend(part.rows);
        }
        merged
    } else {
        compare_report(&tables, &truths, metrics, n_values)?
    };
    report.window = window;

    let mut tsv = Vec::new();
    report.write_tsv(&mut tsv)?;
    write_output(manifest, &out_dir.join("eval.tsv"), &tsv)?;
    write_output(manifest, &out_dir.join("eval.json"), (report.to_json()? + "\n").as_bytes())?;
    let mut csv = Vec::new();
    report.write_curves_csv(&mut csv)?;
    write_output(manifest, &out_dir.join("curves.csv"), &csv)?;
    print!("{}", String::from_utf8_lossy(&tsv));

    for row in report.errors() {
        log::warn!("{} n={} {} vs {}: {}", row.metric, row.n, row.subject, row.reference, row.error.as_deref().unwrap_or(""));
    }
    if !mismatches.is_empty() {
        bail!("entity class mismatch:\n  {}", mismatches.join("\n  "));
    }
    Ok(())
}
