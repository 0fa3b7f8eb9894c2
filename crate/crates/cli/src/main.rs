mod pipeline;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Deserialize;
use serde_json::{json, Value};

use chordfree::coloring::{
    chi_e, chi_star_e, color_constructive, exact_equitable_with_limit, exact_list_coloring,
    list_color_constructive, random_uniform_lists, validate_coloring, validate_list_coloring,
    ConstructiveOptions, ListAssignment, DEFAULT_EXACT_LIMIT,
};
use chordfree::config::{
    builtin_catalog, configuration_h, find_reducible_set, load_catalog_dir, match_configuration,
    parse_configuration, FindOptions,
};
use chordfree::corpus::{
    generate_fixture, load_fixture_dir, shipped_fixture_dir, standard_corpus, Family, Fixture,
};
use chordfree::degeneracy::assert_4_degenerate;
use chordfree::discharging::{
    apply_ruleset, audit_charges, initial_charges, Allowances, AuditReport, ChargeLedger,
    ChargeScalar, Element, RuleTable, Scheme,
};
use chordfree::graph::{degree_profile, write_dot, Adjacency, GraphFile, PlaneGraph};
use chordfree::structure::{class_membership, classify_faces_and_vertices, structural_audit};
use chordfree::{Charge, SmallCharge};

use pipeline::{parse_tasks, run_pipeline, PipelineReport, Status};

#[derive(Parser)]
#[command(version, about = "Plane graphs without chordal 4- and 6-cycles: structure, discharging, equitable coloring")]
struct Cli {
    /// Input graph or fixture (JSON rotation system).
    #[arg(long, global = true)]
    graph: Option<PathBuf>,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for randomized steps.
    #[arg(long, global = true, default_value_t = 20240601)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Constructive,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Precision {
    /// 64-bit rationals.
    Small,
    /// Arbitrary precision.
    Big,
}

#[derive(clap::Args)]
struct SearchArgs {
    #[arg(long, default_value_t = 40)]
    seed_pool: usize,
    #[arg(long, default_value_t = 5)]
    max_seed_size: usize,
    #[arg(long, default_value_t = 5)]
    max_seed_degree: usize,
    #[arg(long, default_value_t = 500_000)]
    exhaustive_limit: u64,
    /// Directory of extra configuration files to match besides H.
    #[arg(long)]
    catalog: Option<PathBuf>,
}

impl SearchArgs {
    fn options(&self) -> FindOptions {
        FindOptions {
            seed_pool: self.seed_pool,
            max_seed_size: self.max_seed_size,
            max_seed_degree: self.max_seed_degree,
            exhaustive_limit: self.exhaustive_limit,
        }
    }

    fn catalog(&self) -> Result<Vec<chordfree::config::Configuration>> {
        let mut cat = builtin_catalog();
        if let Some(dir) = &self.catalog {
            cat.extend(load_catalog_dir(dir)?);
        }
        Ok(cat)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Class membership, chordal cycle witnesses, structural audit,
    /// face/vertex classification.
    Analyze {
        /// Exit 1 unless membership equals this.
        #[arg(long)]
        expect_member: Option<bool>,
    },
    /// Smallest-last ordering and the at-most-4 check.
    Degeneracy {
        /// Exit 1 if the degeneracy exceeds 4.
        #[arg(long)]
        assert: bool,
    },
    /// Initial charges, rule application and the audit of negatives.
    Discharge {
        #[arg(long, default_value = "A")]
        scheme: String,
        /// Built-in table id (D, R1, R3, R2v, R4v) or a path; repeatable.
        #[arg(long = "rules")]
        rules: Vec<String>,
        /// Allow the exceptional negatives of the second scheme.
        #[arg(long)]
        budget: bool,
        /// Elements left out of the audit, e.g. `f0,v3`.
        #[arg(long, value_delimiter = ',')]
        exempt: Vec<String>,
        /// Exit 1 on any unexplained negative charge.
        #[arg(long)]
        assert_nonnegative: bool,
        #[arg(long, value_enum, default_value_t = Precision::Big)]
        precision: Precision,
    },
    /// Occurrences of a configuration (default: H).
    Match {
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Search for a reducible set of size k.
    Reduce {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Equitable k-coloring.
    Color {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Mode::Constructive)]
        mode: Mode,
        /// Skip the class and k >= max(7, Δ) preconditions.
        #[arg(long)]
        force: bool,
        #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
        limit: usize,
    },
    /// Equitable chromatic number.
    Chie,
    /// Equitable chromatic threshold.
    Chiestar,
    /// Equitable list coloring from a list file or random lists.
    ListColor {
        /// JSON object `{ "<v>": [colors] }`.
        #[arg(long)]
        lists: Option<PathBuf>,
        /// List size when drawing random lists.
        #[arg(long)]
        k: Option<usize>,
        /// Palette size for random lists (default 3k).
        #[arg(long)]
        palette: Option<usize>,
        #[arg(long, value_enum, default_value_t = Mode::Constructive)]
        mode: Mode,
        #[arg(long)]
        force: bool,
        #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
        limit: usize,
    },
    /// Check a coloring file (`{"colors": [..]}`) independently.
    Validate {
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        lists: Option<PathBuf>,
        /// Number of colors; defaults to the file's `k`.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Build a fixture from a family expression such as `cycle(7)`, or the
    /// whole standard corpus into `--out DIR`.
    Generate {
        #[arg(long, required_unless_present = "standard_corpus")]
        family: Option<String>,
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        standard_corpus: bool,
    },
    /// Run a task chain on every fixture of a directory (or on --graph).
    CorpusRun {
        /// Defaults to the shipped fixtures.
        #[arg(long)]
        dir: Option<PathBuf>,
        /// Comma-separated: analyze, degeneracy, discharge[:A|B[:RULES]],
        /// color[:K[:exact|constructive]].
        #[arg(long, default_value = "analyze,degeneracy,discharge:A,discharge:B,color")]
        tasks: String,
    },
}

/// Result of a subcommand: what to print and whether an assertion failed.
struct Outcome {
    value: Value,
    graph: Option<PlaneGraph>,
    colors: Option<Vec<usize>>,
    failure: Option<String>,
}

impl Outcome {
    fn ok(value: Value) -> Self {
        Outcome {
            value,
            graph: None,
            colors: None,
            failure: None,
        }
    }

    fn fail_if(mut self, failed: bool, msg: impl Into<String>) -> Self {
        if failed {
            self.failure = Some(msg.into());
        }
        self
    }
}

fn load_input(path: Option<&Path>) -> Result<(PlaneGraph, Option<Fixture>)> {
    let path = path.ok_or_else(|| anyhow!("--graph is required"))?;
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    if let Ok(f) = Fixture::parse(&text) {
        return Ok((f.graph.clone(), Some(f)));
    }
    let g = GraphFile::parse(&text)?.build()?;
    Ok((g, None))
}

fn load_graph(path: Option<&Path>) -> Result<PlaneGraph> {
    Ok(load_input(path)?.0)
}

fn rule_table(spec: &str) -> Result<RuleTable> {
    if Path::new(spec).is_file() {
        let text = std::fs::read_to_string(spec)?;
        return Ok(RuleTable::parse(&text)?);
    }
    Ok(RuleTable::builtin(spec)?)
}

fn discharge_with<S: ChargeScalar>(
    g: &PlaneGraph,
    scheme: Scheme,
    tables: &[RuleTable],
    allowances: &Allowances<S>,
) -> Result<(ChargeLedger<S>, AuditReport<S>)> {
    let classes = classify_faces_and_vertices(g);
    let mut ledger = initial_charges::<S>(g, scheme)?;
    for t in tables {
        ledger = apply_ruleset(g, &classes, ledger, t)?;
    }
    let audit = audit_charges(g, &classes, &ledger, allowances);
    Ok((ledger, audit))
}

fn run_discharge<S: ChargeScalar>(
    g: &PlaneGraph,
    scheme: Scheme,
    tables: &[RuleTable],
    budget: bool,
    exempt: &[Element],
    assert_nonnegative: bool,
) -> Result<Outcome> {
    let allowances = if budget {
        Allowances::<S>::exceptional_budget()
    } else {
        Allowances::none()
    }
    .with_exempt(exempt.iter().copied());
    let (ledger, audit) = discharge_with(g, scheme, tables, &allowances)?;
    let conserved = ledger.final_total() == ledger.initial_total();
    let unexplained = audit.unexplained.len();
    let value = json!({
        "conserved": conserved,
        "component_totals": ledger.final_component_totals(g).iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        "ledger": ledger,
        "audit": audit,
    });
    Ok(Outcome::ok(value)
        .fail_if(!conserved, "total charge changed")
        .fail_if(
            assert_nonnegative && unexplained > 0,
            format!("{unexplained} unexplained negative charge(s)"),
        ))
}

#[derive(Deserialize)]
struct ColoringFile {
    colors: Vec<usize>,
    #[serde(default)]
    k: Option<usize>,
}

fn run(cli: &Cli) -> Result<Outcome> {
    let graph = cli.graph.as_deref();
    let outcome = match &cli.command {
        Command::Analyze { expect_member } => {
            let g = load_graph(graph)?;
            let class = class_membership(&g);
            let member = class.is_member;
            let value = json!({
                "membership": class,
                "audit": structural_audit(&g),
                "profile": degree_profile(&g),
                "classification": classify_faces_and_vertices(&g),
            });
            let mut out = Outcome::ok(value).fail_if(
                expect_member.is_some_and(|m| m != member),
                format!("membership is {member}"),
            );
            out.graph = Some(g);
            out
        }
        Command::Degeneracy { assert } => {
            let g = load_graph(graph)?;
            let no_chordal4 = class_membership(&g).chordal4.is_empty();
            let check = assert_4_degenerate(&g, no_chordal4);
            let passed = check.passed;
            Outcome::ok(json!(check)).fail_if(*assert && !passed, "degeneracy exceeds 4")
        }
        Command::Discharge {
            scheme,
            rules,
            budget,
            exempt,
            assert_nonnegative,
            precision,
        } => {
            let g = load_graph(graph)?;
            let scheme: Scheme = scheme.parse().map_err(|e: String| anyhow!(e))?;
            let tables = rules.iter().map(|r| rule_table(r)).collect::<Result<Vec<_>>>()?;
            let exempt = exempt
                .iter()
                .map(|e| e.parse::<Element>().map_err(|e| anyhow!(e)))
                .collect::<Result<Vec<_>>>()?;
            match precision {
                Precision::Big => run_discharge::<Charge>(&g, scheme, &tables, *budget, &exempt, *assert_nonnegative)?,
                Precision::Small => {
                    run_discharge::<SmallCharge>(&g, scheme, &tables, *budget, &exempt, *assert_nonnegative)?
                }
            }
        }
        Command::Match { config } => {
            let g = load_graph(graph)?;
            let cfg = match config {
                Some(p) => parse_configuration(&std::fs::read_to_string(p)?)?,
                None => configuration_h(),
            };
            let matches: Vec<_> = match_configuration(&g, &cfg).iter().map(|m| m.named(&cfg)).collect();
            Outcome::ok(json!({ "configuration": cfg.name, "count": matches.len(), "matches": matches }))
        }
        Command::Reduce { k, search } => {
            let g = load_graph(graph)?;
            let cert = find_reducible_set(&g, *k, &search.catalog()?, &search.options());
            let found = cert.is_some();
            Outcome::ok(json!(cert)).fail_if(!found, format!("no reducible set of size {k} found"))
        }
        Command::Color { k, mode, force, limit } => {
            let g = load_graph(graph)?;
            let (colors, value) = match mode {
                Mode::Exact => {
                    let c = exact_equitable_with_limit(&g, *k, *limit)?;
                    (c.as_ref().map(|c| c.colors.clone()), json!({ "k": k, "mode": "exact", "coloring": c }))
                }
                Mode::Constructive => {
                    let opts = ConstructiveOptions {
                        force: *force,
                        exact_limit: *limit,
                        ..ConstructiveOptions::default()
                    };
                    let out = color_constructive(&g, *k, &opts)?;
                    (Some(out.coloring.colors.clone()), json!({ "k": k, "mode": "constructive", "outcome": out }))
                }
            };
            let verdict = colors.as_ref().map(|c| validate_coloring(&g, c, *k));
            let mut out = Outcome::ok(value);
            match verdict {
                None => out.failure = Some(format!("no equitable {k}-coloring exists")),
                Some(Err(v)) => out.failure = Some(format!("invalid coloring: {v}")),
                Some(Ok(())) => {}
            }
            out.colors = colors;
            out.graph = Some(g);
            out
        }
        Command::Chie => {
            let g = load_graph(graph)?;
            Outcome::ok(json!({ "chi_e": chi_e(&g)? }))
        }
        Command::Chiestar => {
            let g = load_graph(graph)?;
            Outcome::ok(json!(chi_star_e(&g)?))
        }
        Command::ListColor {
            lists,
            k,
            palette,
            mode,
            force,
            limit,
        } => {
            let g = load_graph(graph)?;
            let n = g.vertex_count();
            let lists = match (lists, k) {
                (Some(p), _) => ListAssignment::from_json(&std::fs::read_to_string(p)?, n)?,
                (None, Some(k)) => random_uniform_lists(n, *k, palette.unwrap_or(3 * k), cli.seed),
                (None, None) => bail!("pass --lists FILE or --k K for random lists"),
            };
            let coloring = match mode {
                Mode::Exact => exact_list_coloring(&g, &lists, *limit)?,
                Mode::Constructive => {
                    let opts = ConstructiveOptions {
                        force: *force,
                        exact_limit: *limit,
                        ..ConstructiveOptions::default()
                    };
                    Some(list_color_constructive(&g, &lists, &opts)?.coloring)
                }
            };
            let verdict = coloring
                .as_ref()
                .map(|c| validate_list_coloring(&g, &c.colors, &lists.lists, lists.k));
            let mut out = Outcome::ok(json!({ "lists": lists, "coloring": coloring }));
            match verdict {
                None => out.failure = Some("no equitable list coloring exists".into()),
                Some(Err(v)) => out.failure = Some(format!("invalid coloring: {v}")),
                Some(Ok(())) => {}
            }
            out.colors = coloring.map(|c| c.colors);
            out.graph = Some(g);
            out
        }
        Command::Validate { coloring, lists, k } => {
            let g = load_graph(graph)?;
            let text = std::fs::read_to_string(coloring)?;
            let file: ColoringFile = serde_json::from_str(&text)
                .or_else(|_| {
                    // whole output of `color`
                    let v: Value = serde_json::from_str(&text)?;
                    let inner = v
                        .pointer("/coloring")
                        .or_else(|| v.pointer("/outcome/coloring"))
                        .cloned()
                        .unwrap_or(Value::Null);
                    serde_json::from_value(inner)
                })
                .context("coloring file needs a \"colors\" array")?;
            let verdict = match lists {
                Some(p) => {
                    let l = ListAssignment::from_json(&std::fs::read_to_string(p)?, g.vertex_count())?;
                    validate_list_coloring(&g, &file.colors, &l.lists, l.k)
                }
                None => {
                    let k = k
                        .or(file.k)
                        .unwrap_or_else(|| file.colors.iter().copied().max().unwrap_or(0));
                    validate_coloring(&g, &file.colors, k)
                }
            };
            let valid = verdict.is_ok();
            let violation = verdict.err();
            Outcome::ok(json!({ "valid": valid, "violation": violation }))
                .fail_if(!valid, format!("invalid: {}", violation.map(|v| v.to_string()).unwrap_or_default()))
        }
        Command::Generate {
            family,
            name,
            standard_corpus: all,
        } => {
            if *all {
                let dir = cli.out.as_ref().ok_or_else(|| anyhow!("--standard-corpus needs --out DIR"))?;
                std::fs::create_dir_all(dir)?;
                let fixtures = standard_corpus()?;
                for f in &fixtures {
                    std::fs::write(dir.join(format!("{}.json", f.name)), f.to_json())?;
                }
                let names: Vec<_> = fixtures.iter().map(|f| f.name.clone()).collect();
                eprintln!("wrote {} fixtures to {}", names.len(), dir.display());
                return Ok(Outcome {
                    value: Value::Null,
                    graph: None,
                    colors: None,
                    failure: None,
                });
            }
            let spec = family.as_deref().expect("clap requires --family");
            let family: Family = spec.parse()?;
            let name = name.clone().unwrap_or_else(|| spec.to_string());
            let fixture = generate_fixture(&name, &family)?;
            let value = serde_json::from_str(&fixture.to_json())?;
            let mut out = Outcome::ok(value);
            out.graph = Some(fixture.graph);
            out
        }
        Command::CorpusRun { dir, tasks } => {
            let tasks = parse_tasks(tasks)?;
            let inputs: Vec<(String, PlaneGraph, Option<Fixture>)> = match (graph, dir) {
                (Some(p), _) => {
                    let (g, f) = load_input(Some(p))?;
                    vec![(p.display().to_string(), g, f)]
                }
                (None, d) => {
                    let d = d.as_deref().unwrap_or(shipped_fixture_dir());
                    load_fixture_dir(d)?
                        .into_iter()
                        .map(|f| (f.name.clone(), f.graph.clone(), Some(f)))
                        .collect()
                }
            };
            let reports: Vec<PipelineReport> = inputs
                .par_iter()
                .map(|(name, g, f)| run_pipeline(name, g, f.as_ref(), &tasks))
                .collect();
            let failed: Vec<&str> = reports
                .iter()
                .filter(|r| r.worst() == Status::Fail)
                .map(|r| r.graph.as_str())
                .collect();
            let errored = reports.iter().any(|r| r.worst() == Status::Error);
            let value = json!({ "graphs": reports.len(), "failed": failed, "reports": reports });
            if errored && failed.is_empty() {
                let out = serde_json::to_string_pretty(&value)?;
                emit(cli, &out)?;
                bail!("some tasks could not run");
            }
            let msg = format!("assertions failed on: {}", failed.join(", "));
            Outcome::ok(value).fail_if(!failed.is_empty(), msg)
        }
    };
    Ok(outcome)
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            match writeln!(stdout, "{}", text.trim_end()) {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
                _ => Ok(()),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let text = match cli.format {
        Format::Dot => match outcome.graph.as_ref() {
            Some(g) => write_dot(g, outcome.colors.as_deref()),
            None => match load_graph(cli.graph.as_deref()) {
                Ok(g) => write_dot(&g, outcome.colors.as_deref()),
                Err(e) => {
                    eprintln!("error: --format dot needs a graph: {e:#}");
                    return ExitCode::from(2);
                }
            },
        },
        Format::Json => serde_json::to_string_pretty(&outcome.value).expect("serializable"),
    };
    let skip_print = outcome.value.is_null() && cli.format == Format::Json;
    if !skip_print {
        if let Err(e) = emit(&cli, &text) {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    }
    match outcome.failure {
        Some(msg) => {
            eprintln!("assertion failed: {msg}");
            ExitCode::from(1)
        }
        None => ExitCode::SUCCESS,
    }
}
