//! `hdecomp` command-line front end.
//!
//! Exit codes: 0 on success, 1 on parse or validation failure, 2 when a decomposition was
//! written but its promise check failed (the parameter was probably too small).

mod dot;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use hdecomp::decomposition::json::{from_json, to_json, Decomposition};
use hdecomp::decomposition::{build_ed_forest, build_tree_h_decomposition, ed_to_tree_decomposition, make_nice};
use hdecomp::io::{parse_family, parse_gr, write_solution};
use hdecomp::oracles::{brute_abc, brute_ed, brute_important_separators, brute_min_deletion};
use hdecomp::solvers::{
    solve_klfree_elim, solve_oct_dp, solve_oct_elim, solve_vc_dp, solve_vc_elim, vc_bipartite, vc_branching, BaseVc,
};
use hdecomp::{Graph, GraphClassSpec};
use rayon::prelude::*;

#[derive(Parser)]
#[command(name = "hdecomp", version, about = "Hybrid decompositions and H-deletion solvers")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build an H-elimination forest or a tree H-decomposition.
    Decompose(DecomposeArgs),
    /// Solve a deletion problem on top of a decomposition.
    Solve(SolveArgs),
    /// Check a decomposition against a graph.
    Verify(VerifyArgs),
    /// Run a brute-force oracle on a small graph.
    Oracle(OracleArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Ed,
    Tw,
}

#[derive(Args)]
struct DecomposeArgs {
    /// Target class: `bip` or `forbid:<family-file>`.
    #[arg(long)]
    class: String,
    #[arg(long, value_enum)]
    mode: Mode,
    #[arg(long)]
    k: usize,
    /// Make the tree decomposition nice (tw mode only).
    #[arg(long)]
    nice: bool,
    /// JSON output file (a directory with --batch).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Graphviz output file.
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Process every .gr file in a directory.
    #[arg(long, conflicts_with_all = ["graph", "dot"])]
    batch: Option<PathBuf>,
    #[arg(required_unless_present = "batch")]
    graph: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Problem {
    Oct,
    Vc,
    Klfree,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Via {
    Elim,
    Dp,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long, value_enum)]
    problem: Problem,
    /// Clique size for klfree.
    #[arg(long, default_value_t = 3)]
    l: usize,
    #[arg(long, value_enum, default_value = "elim")]
    via: Via,
    /// Decomposition JSON, or `auto` to build one with k = 0, 1, 2, ...
    #[arg(long, default_value = "auto")]
    decomp: String,
    #[arg(long, conflicts_with = "graph")]
    batch: Option<PathBuf>,
    #[arg(required_unless_present = "batch")]
    graph: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    decomp: PathBuf,
    graph: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Deletion,
    Ed,
    Abc,
    Impsep,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, value_enum)]
    what: What,
    #[arg(long, default_value = "bip")]
    class: String,
    /// Budget (abc, impsep). Defaults to n for abc.
    #[arg(long)]
    k: Option<usize>,
    /// Precoloured sets for abc, comma-separated 1-based ids.
    #[arg(long, value_delimiter = ',')]
    b1: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    b2: Vec<usize>,
    /// Terminal sets for impsep, comma-separated 1-based ids.
    #[arg(long, value_delimiter = ',')]
    x: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    y: Vec<usize>,
    graph: PathBuf,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_graph(path: &Path) -> Result<Graph> {
    parse_gr(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn parse_class(spec: &str) -> Result<GraphClassSpec> {
    if spec == "bip" {
        return Ok(GraphClassSpec::Bipartite);
    }
    let Some(path) = spec.strip_prefix("forbid:") else {
        bail!("unknown class `{spec}` (expected `bip` or `forbid:<path>`)");
    };
    let family = parse_family(&read(Path::new(path))?).with_context(|| format!("parsing family {path}"))?;
    Ok(GraphClassSpec::forbidden(family)?)
}

fn zero_based(g: &Graph, ids: &[usize]) -> Result<Vec<usize>> {
    let mut out = Vec::with_capacity(ids.len());
    for &v in ids {
        if v == 0 || v > g.n() {
            bail!("vertex {v} out of range 1..={}", g.n());
        }
        out.push(v - 1);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// `.gr` files of a directory in name order.
fn batch_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .with_context(|| format!("listing {}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "gr"))
        .collect();
    files.sort();
    Ok(files)
}

fn file_name(p: &Path) -> String {
    p.file_name().map_or_else(|| p.display().to_string(), |n| n.to_string_lossy().into_owned())
}

struct Decomposed {
    decomposition: Decomposition,
    summary: String,
    warnings: Vec<String>,
}

fn decompose(g: &Graph, class: &GraphClassSpec, mode: Mode, k: usize, nice: bool) -> Result<Decomposed> {
    let (decomposition, summary, warnings) = match mode {
        Mode::Ed => {
            let built = build_ed_forest(g, k, class)?;
            let summary = format!("DEPTH {}", built.value.depth());
            (Decomposition::Forest(built.value), summary, built.promise_violations)
        }
        Mode::Tw => {
            let built = build_tree_h_decomposition(g, k, class)?;
            let summary = format!("WIDTH {}", built.value.width());
            let d = if nice { Decomposition::Nice(make_nice(&built.value)?) } else { Decomposition::Tree(built.value) };
            (d, summary, built.promise_violations)
        }
    };
    let violations = decomposition.validate(g);
    if !violations.is_empty() {
        bail!("constructed decomposition is invalid: {}", violations.join("; "));
    }
    Ok(Decomposed { decomposition, summary, warnings })
}

fn cmd_decompose(a: DecomposeArgs) -> Result<u8> {
    let class = parse_class(&a.class)?;
    if let Some(dir) = &a.batch {
        if let Some(out) = &a.out {
            fs::create_dir_all(out)?;
        }
        let results: Vec<(PathBuf, Result<Decomposed>)> = batch_files(dir)?
            .into_par_iter()
            .map(|p| {
                let r = load_graph(&p).and_then(|g| decompose(&g, &class, a.mode, a.k, a.nice));
                (p, r)
            })
            .collect();
        let mut code = 0;
        for (p, r) in results {
            let name = file_name(&p);
            match r {
                Ok(d) => {
                    if let Some(out) = &a.out {
                        let stem = p.file_stem().unwrap_or_default().to_string_lossy().into_owned();
                        fs::write(out.join(format!("{stem}.json")), to_json(&d.decomposition))?;
                    }
                    println!("{name}: {}", d.summary);
                    for w in &d.warnings {
                        eprintln!("{name}: warning: {w}");
                    }
                    if !d.warnings.is_empty() && code == 0 {
                        code = 2;
                    }
                }
                Err(e) => {
                    println!("{name}: ERROR {e:#}");
                    code = 1;
                }
            }
        }
        return Ok(code);
    }

    let g = load_graph(a.graph.as_deref().expect("clap enforces a graph"))?;
    let d = decompose(&g, &class, a.mode, a.k, a.nice)?;
    if let Some(out) = &a.out {
        fs::write(out, to_json(&d.decomposition)).with_context(|| format!("writing {}", out.display()))?;
    }
    if let Some(path) = &a.dot {
        fs::write(path, dot::render(&d.decomposition)).with_context(|| format!("writing {}", path.display()))?;
    }
    println!("{}", d.summary);
    for w in &d.warnings {
        eprintln!("warning: {w}");
    }
    Ok(if d.warnings.is_empty() { 0 } else { 2 })
}

fn class_for(problem: Problem, l: usize) -> Result<GraphClassSpec> {
    Ok(match problem {
        Problem::Oct | Problem::Vc => GraphClassSpec::Bipartite,
        Problem::Klfree => GraphClassSpec::clique_free(l)?,
    })
}

/// Smallest `k` whose construction passes the promise check.
fn auto_decomposition(g: &Graph, class: &GraphClassSpec, via: Via) -> Result<Decomposition> {
    for k in 0..=g.n() {
        let d = decompose(g, class, if via == Via::Elim { Mode::Ed } else { Mode::Tw }, k, via == Via::Dp)?;
        if d.warnings.is_empty() {
            return Ok(d.decomposition);
        }
    }
    bail!("no parameter passed the promise check")
}

fn solve(a: &SolveArgs, g: &Graph) -> Result<String> {
    if a.problem == Problem::Klfree && a.via == Via::Dp {
        bail!("klfree is solved with --via elim only");
    }
    let d = if a.decomp == "auto" {
        auto_decomposition(g, &class_for(a.problem, a.l)?, a.via)?
    } else {
        let d = from_json(&read(Path::new(&a.decomp))?)?;
        let violations = d.validate(g);
        if !violations.is_empty() {
            bail!("decomposition does not fit the graph: {}", violations.join("; "));
        }
        d
    };
    let base: BaseVc = if *d.class() == GraphClassSpec::Bipartite { &vc_bipartite } else { &vc_branching };
    let (name, x) = match a.via {
        Via::Elim => {
            let Decomposition::Forest(f) = &d else {
                bail!("--via elim needs an elimination forest");
            };
            match a.problem {
                Problem::Oct => ("oct", solve_oct_elim(g, f)?),
                Problem::Vc => ("vc", solve_vc_elim(g, f, base)?),
                Problem::Klfree => ("klfree", solve_klfree_elim(g, f, a.l)?),
            }
        }
        Via::Dp => {
            let nice = match d {
                Decomposition::Nice(n) => n,
                Decomposition::Tree(t) => make_nice(&t)?,
                Decomposition::Forest(f) => make_nice(&ed_to_tree_decomposition(&f)?)?,
            };
            match a.problem {
                Problem::Oct => ("oct", solve_oct_dp(g, &nice)?.1),
                Problem::Vc => ("vc", solve_vc_dp(g, &nice, base)?.1),
                Problem::Klfree => unreachable!("rejected above"),
            }
        }
    };
    Ok(write_solution(name, &x))
}

fn cmd_solve(a: SolveArgs) -> Result<u8> {
    if let Some(dir) = &a.batch {
        let results: Vec<(PathBuf, Result<String>)> =
            batch_files(dir)?.into_par_iter().map(|p| {
                let r = load_graph(&p).and_then(|g| solve(&a, &g));
                (p, r)
            }).collect();
        let mut code = 0;
        for (p, r) in results {
            println!("== {}", file_name(&p));
            match r {
                Ok(block) => print!("{block}"),
                Err(e) => {
                    println!("ERROR {e:#}");
                    code = 1;
                }
            }
        }
        return Ok(code);
    }
    let g = load_graph(a.graph.as_deref().expect("clap enforces a graph"))?;
    print!("{}", solve(&a, &g)?);
    Ok(0)
}

fn cmd_verify(a: VerifyArgs) -> Result<u8> {
    let g = load_graph(&a.graph)?;
    let d = from_json(&read(&a.decomp)?).with_context(|| format!("parsing {}", a.decomp.display()))?;
    let violations = d.validate(&g);
    if violations.is_empty() {
        println!("VALID");
        return Ok(0);
    }
    println!("INVALID");
    for v in violations {
        println!("  {v}");
    }
    Ok(1)
}

fn cmd_oracle(a: OracleArgs) -> Result<u8> {
    let g = load_graph(&a.graph)?;
    match a.what {
        What::Deletion => {
            let (_, x) = brute_min_deletion(&g, &parse_class(&a.class)?)?;
            print!("{}", write_solution("deletion", &x));
        }
        What::Ed => println!("ED {}", brute_ed(&g, &parse_class(&a.class)?)?),
        What::Abc => {
            let (b1, b2) = (zero_based(&g, &a.b1)?, zero_based(&g, &a.b2)?);
            match brute_abc(&g, &b1, &b2, a.k.unwrap_or(g.n()))? {
                Some(x) => print!("{}", write_solution("abc", &x)),
                None => println!("NONE"),
            }
        }
        What::Impsep => {
            let Some(k) = a.k else {
                bail!("impsep needs --k");
            };
            let (x, y) = (zero_based(&g, &a.x)?, zero_based(&g, &a.y)?);
            let seps = brute_important_separators(&g, &x, &y, k)?;
            println!("IMPSEP {}", seps.len());
            for s in seps {
                let line: Vec<String> = s.iter().map(|v| (v + 1).to_string()).collect();
                println!("{}", if line.is_empty() { "-".to_string() } else { line.join(" ") });
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Decompose(a) => cmd_decompose(a),
        Cmd::Solve(a) => cmd_solve(a),
        Cmd::Verify(a) => cmd_verify(a),
        Cmd::Oracle(a) => cmd_oracle(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            if let Some(hdecomp::Error::TooLarge(msg)) = e.downcast_ref::<hdecomp::Error>() {
                eprintln!("TOO LARGE: {msg}");
            } else {
                eprintln!("error: {e:#}");
            }
            ExitCode::from(1)
        }
    }
}
