//! Command-line surface. Every subcommand is deterministic: the same
//! flags produce byte-identical output, except for elapsed-time fields.
//! Exit codes: 0 all good, 1 verification failure or bad input, 2 budget
//! exceeded.

use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{self, SMatrix};
use crate::metric::{self, DimReport, Verdict};
use crate::semiring::{check_axioms, FiniteSemiring, SemiringDef};
use crate::verify;
use crate::zdgraph;
use crate::Budget;

#[derive(Parser, Debug)]
#[command(
    name = "zdim",
    version,
    about = "Zero-divisor graphs of matrix semirings: build, count, verify, and measure"
)]
pub struct Cli {
    /// Worker threads for graph construction and searches (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a semiring definition against the required axioms
    Axioms {
        #[command(flatten)]
        semiring: SemiringOpt,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Print the class-size table and zero-divisor counts
    Counts {
        /// Matrix dimension
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        semiring: SemiringOpt,
        /// Re-derive every number by enumeration and fail on mismatch
        #[arg(long)]
        check: bool,
        /// Emit the table as JSON
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        budget: BudgetOpt,
    },
    /// Run named verification checks and print a verdict table
    Verify {
        /// Matrix dimension
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        semiring: SemiringOpt,
        /// Structure checks: t-singleton, twins, wr-size, dist2, dist3, pattern-twins
        #[arg(long)]
        lemma: Vec<String>,
        /// Headline checks: wr-resolving, dim-boolean, dim-general
        #[arg(long)]
        theorem: Vec<String>,
        /// Run every check that applies to the chosen semiring
        #[arg(long)]
        all: bool,
        /// Emit the outcomes as JSON
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        budget: BudgetOpt,
    },
    /// Build the zero-divisor graph; print a summary, optionally export it
    Graph {
        /// Matrix dimension
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        semiring: SemiringOpt,
        /// Write the graph in DOT form to this path
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Write the all-pairs distance matrix as CSV to this path
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Emit the summary as JSON
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        budget: BudgetOpt,
    },
    /// Evaluate the dimension formula and construction, optionally exactly
    Dim {
        /// Matrix dimension
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        semiring: SemiringOpt,
        /// Also run the exact search and verify the construction resolves
        #[arg(long)]
        exact: bool,
        /// Write the constructed resolving set to this path, one matrix per line
        #[arg(long)]
        construct: Option<PathBuf>,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        budget: BudgetOpt,
    },
}

#[derive(Args, Debug)]
struct SemiringOpt {
    /// Built-in semiring: "boolean" or "chainN" with N >= 2
    #[arg(long, default_value = "boolean", conflicts_with = "file")]
    builtin: String,
    /// JSON file with a semiring definition
    #[arg(long)]
    file: Option<PathBuf>,
}

impl SemiringOpt {
    fn load_def(&self) -> Result<SemiringDef> {
        match &self.file {
            Some(path) => {
                let text = fs::read_to_string(path).map_err(|source| Error::Io {
                    path: path.display().to_string(),
                    source,
                })?;
                Ok(serde_json::from_str(&text)?)
            }
            None => Ok(FiniteSemiring::builtin(&self.builtin)?.def()),
        }
    }

    fn load(&self) -> Result<FiniteSemiring> {
        match &self.file {
            Some(path) => FiniteSemiring::load(path),
            None => FiniteSemiring::builtin(&self.builtin),
        }
    }
}

#[derive(Args, Debug)]
struct BudgetOpt {
    /// Refuse enumerations beyond this many matrices
    #[arg(long, default_value_t = Budget::default().max_matrices)]
    max_matrices: u64,
    /// Abort the exact search beyond this many branch nodes
    #[arg(long = "max-nodes", default_value_t = Budget::default().max_search_nodes)]
    max_search_nodes: u64,
}

impl BudgetOpt {
    fn budget(&self) -> Budget {
        Budget {
            max_matrices: self.max_matrices,
            max_search_nodes: self.max_search_nodes,
        }
    }
}

/// Parses the process arguments, runs the command, and returns the exit
/// code for the process.
pub fn run() -> i32 {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error: --threads must be at least 1");
            return 1;
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .ok();
    }
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command) -> Result<i32> {
    match command {
        Command::Axioms { semiring, json } => cmd_axioms(&semiring, json),
        Command::Counts {
            n,
            semiring,
            check,
            json,
            budget,
        } => cmd_counts(n, &semiring, check, json, &budget.budget()),
        Command::Verify {
            n,
            semiring,
            lemma,
            theorem,
            all,
            json,
            budget,
        } => cmd_verify(n, &semiring, &lemma, &theorem, all, json, &budget.budget()),
        Command::Graph {
            n,
            semiring,
            dot,
            csv,
            json,
            budget,
        } => cmd_graph(
            n,
            &semiring,
            dot.as_deref(),
            csv.as_deref(),
            json,
            &budget.budget(),
        ),
        Command::Dim {
            n,
            semiring,
            exact,
            construct,
            json,
            budget,
        } => cmd_dim(
            n,
            &semiring,
            exact,
            construct.as_deref(),
            json,
            &budget.budget(),
        ),
    }
}

fn require_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::BadInput(
            "matrix dimension must be at least 2".into(),
        ));
    }
    Ok(())
}

fn cmd_axioms(semiring: &SemiringOpt, json: bool) -> Result<i32> {
    let def = semiring.load_def()?;
    let report = check_axioms(&def)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        println!("semiring {} (order {})", def.name, def.order);
        print!("{report}");
    }
    Ok(if report.all_hold() { 0 } else { 1 })
}

#[derive(Serialize)]
struct CountsReport {
    semiring: String,
    order: u8,
    n: usize,
    class_sizes: Vec<Vec<String>>,
    zero_divisors: String,
    vertices: String,
    check: Option<String>,
}

fn cmd_counts(
    n: usize,
    semiring: &SemiringOpt,
    check: bool,
    json: bool,
    budget: &Budget,
) -> Result<i32> {
    require_n(n)?;
    let s = semiring.load()?;
    let q = s.order();
    let mut sizes = Vec::new();
    for i in 0..n {
        let mut row = Vec::new();
        for j in 0..n {
            row.push(matrix::count_class(n, i, j, q)?);
        }
        sizes.push(row);
    }
    let zero_divisors = matrix::count_zero_divisors(n, q);
    let vertices = &zero_divisors - 1u32;

    let check_note = if check {
        Some(recount_by_enumeration(&s, n, &sizes, &vertices, budget)?)
    } else {
        None
    };
    let failed = check_note
        .as_deref()
        .is_some_and(|d| d.starts_with("mismatch"));

    if json {
        let report = CountsReport {
            semiring: s.name().to_string(),
            order: q,
            n,
            class_sizes: sizes
                .iter()
                .map(|row| row.iter().map(BigUint::to_string).collect())
                .collect(),
            zero_divisors: zero_divisors.to_string(),
            vertices: vertices.to_string(),
            check: check_note,
        };
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        println!("semiring {} (order {}), n = {}", s.name(), q, n);
        println!("class sizes by (zero rows, zero columns):");
        let cells: Vec<Vec<String>> = sizes
            .iter()
            .map(|row| row.iter().map(BigUint::to_string).collect())
            .collect();
        let mut widths = vec![0usize; n];
        for row in &cells {
            for (j, cell) in row.iter().enumerate() {
                widths[j] = widths[j].max(cell.len()).max(format!("j={j}").len());
            }
        }
        let header: Vec<String> = (0..n)
            .map(|j| format!("{:>width$}", format!("j={j}"), width = widths[j]))
            .collect();
        println!("      {}", header.join("  "));
        for (i, row) in cells.iter().enumerate() {
            let body: Vec<String> = row
                .iter()
                .enumerate()
                .map(|(j, cell)| format!("{:>width$}", cell, width = widths[j]))
                .collect();
            println!("  i={i} {}", body.join("  "));
        }
        println!("zero divisors including the zero matrix: {zero_divisors}");
        println!("graph vertices: {vertices}");
        if let Some(note) = &check_note {
            println!("check: {note}");
        }
    }
    Ok(if failed { 1 } else { 0 })
}

/// Materializes every support class and compares sizes and totals with
/// the closed-form table. Returns a one-line summary starting with
/// "mismatch" on disagreement.
fn recount_by_enumeration(
    s: &FiniteSemiring,
    n: usize,
    sizes: &[Vec<BigUint>],
    vertices: &BigUint,
    budget: &Budget,
) -> Result<String> {
    let required = matrix::space_size(n, s.order()).unwrap_or(u64::MAX);
    if required > budget.max_matrices {
        return Err(Error::BudgetExceeded {
            required,
            cap: budget.max_matrices,
        });
    }
    let full = (1u32 << n) - 1;
    let mut classes = 0u32;
    let mut total = BigUint::from(0u32);
    for rows in 0..=full {
        for cols in 0..=full {
            if rows == full && cols == full {
                continue;
            }
            let i = rows.count_ones() as usize;
            let j = cols.count_ones() as usize;
            if i == n || j == n {
                continue;
            }
            let cls = matrix::SupportClass::from_masks(n, rows, cols)?;
            let found = matrix::enumerate_class(&cls, s, budget.max_matrices)?.len();
            if BigUint::from(found) != sizes[i][j] {
                return Ok(format!(
                    "mismatch: class {cls:?} materializes {found}, table says {}",
                    sizes[i][j]
                ));
            }
            classes += 1;
            if i > 0 || j > 0 {
                total += found;
            }
        }
    }
    if total != *vertices {
        return Ok(format!(
            "mismatch: classes total {total}, vertex count says {vertices}"
        ));
    }
    Ok(format!(
        "{classes} classes materialized; every size and the vertex total match"
    ))
}

fn cmd_verify(
    n: usize,
    semiring: &SemiringOpt,
    lemma: &[String],
    theorem: &[String],
    all: bool,
    json: bool,
    budget: &Budget,
) -> Result<i32> {
    require_n(n)?;
    let s = semiring.load()?;
    let mut selected: Vec<&str> = Vec::new();
    if all {
        selected.extend(verify::applicable_checks(s.order()));
    }
    for name in lemma {
        if !verify::LEMMA_CHECKS.contains(&name.as_str()) {
            return Err(Error::BadInput(format!(
                "unknown --lemma check {name:?} (expected one of {})",
                verify::LEMMA_CHECKS.join(", ")
            )));
        }
        selected.push(name);
    }
    for name in theorem {
        if !verify::THEOREM_CHECKS.contains(&name.as_str()) {
            return Err(Error::BadInput(format!(
                "unknown --theorem check {name:?} (expected one of {})",
                verify::THEOREM_CHECKS.join(", ")
            )));
        }
        selected.push(name);
    }
    let mut seen = Vec::new();
    selected.retain(|name| {
        let fresh = !seen.contains(name);
        seen.push(name);
        fresh
    });
    if selected.is_empty() {
        return Err(Error::BadInput(
            "nothing selected: pass --lemma, --theorem, or --all".into(),
        ));
    }

    let mut outcomes = Vec::new();
    for name in &selected {
        outcomes.push(verify::run_check(name, &s, n, budget)?);
    }

    if json {
        println!("{}", serde_json::to_string_pretty(&outcomes)?);
    } else {
        println!(
            "semiring {} (order {}), n = {}: {} checks",
            s.name(),
            s.order(),
            n,
            outcomes.len()
        );
        let width = outcomes.iter().map(|o| o.name.len()).max().unwrap_or(0);
        for o in &outcomes {
            println!(
                "{:<width$}  {:<6}  {}",
                o.name,
                verdict_label(o.status),
                o.detail
            );
        }
    }
    Ok(if outcomes.iter().any(|o| o.status == Verdict::Fail) {
        1
    } else if outcomes.iter().any(|o| o.status == Verdict::Budget) {
        2
    } else {
        0
    })
}

fn verdict_label(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Fail => "FAIL",
        Verdict::Budget => "budget",
    }
}

#[derive(Serialize)]
struct BlockCensus {
    size: usize,
    count: usize,
}

#[derive(Serialize)]
struct GraphReport {
    semiring: String,
    order: u8,
    n: usize,
    vertices: usize,
    edges: usize,
    connected: bool,
    diameter: Option<u8>,
    twin_blocks: Vec<BlockCensus>,
}

fn cmd_graph(
    n: usize,
    semiring: &SemiringOpt,
    dot: Option<&Path>,
    csv: Option<&Path>,
    json: bool,
    budget: &Budget,
) -> Result<i32> {
    require_n(n)?;
    let s = semiring.load()?;
    let g = zdgraph::build_graph(&s, n, budget)?;
    let connected = g.graph().is_connected();
    let diameter = if connected {
        Some(g.graph().diameter()?)
    } else {
        None
    };
    let mut census: Vec<BlockCensus> = Vec::new();
    for size in g.graph().twin_classes().block_sizes() {
        match census.last_mut() {
            Some(last) if last.size == size => last.count += 1,
            _ => census.push(BlockCensus { size, count: 1 }),
        }
    }

    if let Some(path) = dot {
        write_export(path, |w| g.write_dot(w))?;
    }
    if let Some(path) = csv {
        write_export(path, |w| g.write_csv_distances(w))?;
    }

    if json {
        let report = GraphReport {
            semiring: s.name().to_string(),
            order: s.order(),
            n,
            vertices: g.vertices().len(),
            edges: g.graph().edge_count(),
            connected,
            diameter,
            twin_blocks: census,
        };
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        println!("semiring {} (order {}), n = {}", s.name(), s.order(), n);
        println!("vertices: {}", g.vertices().len());
        println!("edges: {}", g.graph().edge_count());
        match diameter {
            Some(d) => println!("diameter: {d}"),
            None => println!("diameter: undefined (graph is disconnected)"),
        }
        let parts: Vec<String> = census
            .iter()
            .map(|b| format!("{} of size {}", b.count, b.size))
            .collect();
        println!("twin blocks: {}", parts.join(", "));
        if let Some(path) = dot {
            println!("wrote DOT to {}", path.display());
        }
        if let Some(path) = csv {
            println!("wrote distance CSV to {}", path.display());
        }
    }
    Ok(0)
}

fn write_export<F>(path: &Path, emit: F) -> Result<()>
where
    F: FnOnce(&mut BufWriter<fs::File>) -> std::io::Result<()>,
{
    let wrap = |source: std::io::Error| Error::Io {
        path: path.display().to_string(),
        source,
    };
    let file = fs::File::create(path).map_err(wrap)?;
    let mut writer = BufWriter::new(file);
    emit(&mut writer).map_err(wrap)?;
    writer.flush().map_err(wrap)
}

fn cmd_dim(
    n: usize,
    semiring: &SemiringOpt,
    exact: bool,
    construct: Option<&Path>,
    json: bool,
    budget: &Budget,
) -> Result<i32> {
    require_n(n)?;
    let s = semiring.load()?;
    let q = s.order();
    let start = Instant::now();

    let formula = if q == 2 {
        metric::dim_formula_boolean(n)?
    } else {
        metric::dim_formula_general(n, q)?
    };
    let set: Vec<SMatrix> = if q == 2 {
        metric::build_wr(n, budget)?
    } else {
        metric::build_general_resolving_set(&s, n, budget)?
    };
    if let Some(path) = construct {
        let mut text = String::new();
        for m in &set {
            text.push_str(&m.to_string());
            text.push('\n');
        }
        fs::write(path, text).map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        })?;
    }

    let mut verdict = if BigUint::from(set.len()) == formula {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    let mut oracle = None;
    let mut basis_ranks = None;
    let mut witness = None;
    let mut explored = 0;
    if exact {
        let g = zdgraph::build_graph(&s, n, budget)?;
        let w: Vec<usize> = set
            .iter()
            .map(|m| {
                g.index_of(m)
                    .ok_or_else(|| Error::BadMatrix(format!("{m} is not a vertex of the graph")))
            })
            .collect::<Result<_>>()?;
        if let Some((u, v)) = metric::is_resolving(g.graph(), &w) {
            witness = Some([g.ranks()[u], g.ranks()[v]]);
            verdict = Verdict::Fail;
        }
        let found = metric::exact_metric_dimension(g.graph(), budget)?;
        if BigUint::from(found.basis.len()) != formula {
            verdict = Verdict::Fail;
        }
        oracle = Some(found.basis.len() as u64);
        basis_ranks = Some(found.basis.iter().map(|&v| g.ranks()[v]).collect());
        explored = found.explored;
    }

    let report = DimReport {
        semiring: s.name().to_string(),
        n,
        formula: Some(formula.to_string()),
        constructed_size: Some(set.len() as u64),
        oracle,
        basis_ranks,
        witness,
        elapsed_ms: start.elapsed().as_millis(),
        verdict,
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        println!("semiring {} (order {q}), n = {n}", s.name());
        println!("formula: {formula}");
        println!("construction: {} matrices", set.len());
        if exact {
            println!(
                "exact: {} (searched {} nodes)",
                report.oracle.unwrap_or(0),
                explored
            );
            match witness {
                None => println!("construction resolves: yes"),
                Some([a, b]) => {
                    println!("construction resolves: NO, ranks {a} and {b} collide")
                }
            }
        }
        if let Some(path) = construct {
            println!("wrote resolving set to {}", path.display());
        }
        println!("verdict: {}", verdict_label(report.verdict));
    }
    Ok(if report.verdict == Verdict::Pass {
        0
    } else {
        1
    })
}
