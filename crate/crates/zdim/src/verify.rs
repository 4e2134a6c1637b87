//! Named verification checks: each one replays a structural claim about
//! the zero-divisor graph at a chosen size and semiring, mostly by
//! exhaustive enumeration, and reports pass or fail with a short detail
//! line. The CLI `verify` subcommand and the test suite both run these.

use std::time::Instant;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{self, SMatrix};
use crate::metric::{self, Verdict};
use crate::semiring::FiniteSemiring;
use crate::zdgraph::{self, ZeroDivisorGraph};
use crate::Budget;

/// Checks selectable through `verify --lemma`.
pub const LEMMA_CHECKS: &[&str] = &[
    "t-singleton",
    "twins",
    "wr-size",
    "dist2",
    "dist3",
    "pattern-twins",
];

/// Checks selectable through `verify --theorem`.
pub const THEOREM_CHECKS: &[&str] = &["wr-resolving", "dim-boolean", "dim-general"];

/// The checks that make sense for a semiring of the given order, in the
/// order `verify --all` runs them.
pub fn applicable_checks(q: u8) -> Vec<&'static str> {
    if q == 2 {
        vec![
            "t-singleton",
            "twins",
            "wr-size",
            "dist2",
            "dist3",
            "wr-resolving",
            "dim-boolean",
        ]
    } else {
        vec![
            "t-singleton",
            "twins",
            "dist2",
            "dist3",
            "pattern-twins",
            "dim-general",
        ]
    }
}

/// Result of one named check.
#[derive(Serialize, Clone, Debug)]
pub struct CheckOutcome {
    pub name: String,
    pub status: Verdict,
    pub detail: String,
    pub elapsed_ms: u128,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.status == Verdict::Pass
    }
}

/// Runs one check by name. Budget overruns come back as an outcome with
/// [`Verdict::Budget`]; other errors (bad names, inapplicable semirings)
/// propagate.
pub fn run_check(
    name: &str,
    s: &FiniteSemiring,
    n: usize,
    budget: &Budget,
) -> Result<CheckOutcome> {
    let start = Instant::now();
    let run = match name {
        "t-singleton" => check_t_singleton(n, budget),
        "twins" => check_twins(s, n, budget),
        "wr-size" => check_wr_size(n, budget),
        "dist2" => check_dist2(s, n, budget),
        "dist3" => check_dist3(s, n, budget),
        "pattern-twins" => check_pattern_twins(s, n, budget),
        "wr-resolving" => check_wr_resolving(n, budget),
        "dim-boolean" => check_dim_boolean(n, budget),
        "dim-general" => check_dim_general(s, n, budget),
        other => return Err(Error::BadInput(format!("unknown check {other:?}"))),
    };
    let (status, detail) = match run {
        Ok((true, detail)) => (Verdict::Pass, detail),
        Ok((false, detail)) => (Verdict::Fail, detail),
        Err(e) if e.exit_code() == 2 => (Verdict::Budget, e.to_string()),
        Err(e) => return Err(e),
    };
    Ok(CheckOutcome {
        name: name.to_string(),
        status,
        detail,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

type CheckResult = Result<(bool, String)>;

/// Every boolean class with n-1 zero rows or n-1 zero columns has exactly
/// one member: by the closed-form count, and by materializing each such
/// class (the live part of those matrices is a single line, so this stays
/// cheap at any n we accept).
fn check_t_singleton(n: usize, budget: &Budget) -> CheckResult {
    let b = FiniteSemiring::boolean();
    let one = BigUint::from(1u32);
    let mut checked = 0;
    for i in 0..n {
        for j in 0..n {
            if i != n - 1 && j != n - 1 {
                continue;
            }
            let counted = matrix::count_class(n, i, j, 2)?;
            if counted != one {
                return Ok((false, format!("class shape ({i},{j}) counts {counted}")));
            }
            let rows: Vec<usize> = (0..i).collect();
            let cols: Vec<usize> = (0..j).collect();
            let cls = matrix::SupportClass::new(n, &rows, &cols)?;
            let members = matrix::enumerate_class(&cls, &b, budget.max_matrices)?;
            if members.len() != 1 {
                return Ok((
                    false,
                    format!(
                        "class shape ({i},{j}) materializes {} members",
                        members.len()
                    ),
                ));
            }
            checked += 1;
        }
    }
    Ok((
        true,
        format!("{checked} extreme class shapes counted and materialized as singletons"),
    ))
}

/// Every support class sits inside a single twin block of the graph.
fn check_twins(s: &FiniteSemiring, n: usize, budget: &Budget) -> CheckResult {
    let g = zdgraph::build_graph(s, n, budget)?;
    let ids = g.graph().twin_classes().vertex_block_ids();
    let members = g.class_members();
    for (ci, verts) in members.iter().enumerate() {
        let block = ids[verts[0]];
        if let Some(&v) = verts.iter().find(|&&v| ids[v] != block) {
            return Ok((
                false,
                format!(
                    "class {:?} splits across twin blocks at vertex {}",
                    g.classes()[ci],
                    g.vertices()[v]
                ),
            ));
        }
    }
    Ok((
        true,
        format!(
            "{} support classes, each within one twin block of {} vertices total",
            members.len(),
            g.vertices().len()
        ),
    ))
}

/// The materialized boolean resolving set has exactly the closed-form
/// size.
fn check_wr_size(n: usize, budget: &Budget) -> CheckResult {
    let built = metric::build_wr(n, budget)?.len();
    let predicted = metric::predicted_wr_size(n)?;
    Ok(if BigUint::from(built) == predicted {
        (true, format!("built {built}, predicted {predicted}"))
    } else {
        (false, format!("built {built}, predicted {predicted}"))
    })
}

/// From any vertex with exactly one zero row and one zero column, every
/// other vertex is within distance 2.
fn check_dist2(s: &FiniteSemiring, n: usize, budget: &Budget) -> CheckResult {
    let g = zdgraph::build_graph(s, n, budget)?;
    let mut sources = 0;
    for (v, &ci) in g.class_of().iter().enumerate() {
        let cls = g.classes()[ci];
        if cls.zero_row_count() != 1 || cls.zero_col_count() != 1 {
            continue;
        }
        sources += 1;
        let dist = g.graph().distances_from(v);
        if let Some(far) = (0..dist.len()).find(|&u| dist[u] > 2) {
            return Ok((
                false,
                format!(
                    "d({}, {}) = {}",
                    g.vertices()[v],
                    g.vertices()[far],
                    dist[far]
                ),
            ));
        }
    }
    Ok((
        true,
        format!("{sources} single-zero-line sources, all eccentricities at most 2"),
    ))
}

/// Vertices from classes with zero rows only (no zero columns) and
/// disjoint zero-row sets are at distance exactly 3, and dually for
/// columns.
fn check_dist3(s: &FiniteSemiring, n: usize, budget: &Budget) -> CheckResult {
    let g = zdgraph::build_graph(s, n, budget)?;
    let members = g.class_members();
    let mut pairs = 0u64;
    for by_rows in [true, false] {
        let qualifying: Vec<usize> = (0..g.classes().len())
            .filter(|&ci| {
                let c = g.classes()[ci];
                if by_rows {
                    c.zero_col_count() == 0
                } else {
                    c.zero_row_count() == 0
                }
            })
            .collect();
        for &ca in &qualifying {
            let a = g.classes()[ca];
            for &cb in &qualifying {
                let b = g.classes()[cb];
                let disjoint = if by_rows {
                    a.zero_rows_mask() & b.zero_rows_mask() == 0
                } else {
                    a.zero_cols_mask() & b.zero_cols_mask() == 0
                };
                if !disjoint {
                    continue;
                }
                for &u in &members[ca] {
                    let dist = g.graph().distances_from(u);
                    for &v in &members[cb] {
                        pairs += 1;
                        if dist[v] != 3 {
                            return Ok((
                                false,
                                format!(
                                    "d({}, {}) = {}",
                                    g.vertices()[u],
                                    g.vertices()[v],
                                    dist[v]
                                ),
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok((
        true,
        format!("{pairs} qualifying pairs, every distance is 3"),
    ))
}

/// Each matrix is a twin of its pattern (carried back into the semiring),
/// and same-class matrices with equal patterns share a twin block.
fn check_pattern_twins(s: &FiniteSemiring, n: usize, budget: &Budget) -> CheckResult {
    if s.order() < 3 {
        return Err(Error::BadInput(
            "pattern-twins needs a semiring with at least three elements".into(),
        ));
    }
    let g = zdgraph::build_graph(s, n, budget)?;
    let ids = g.graph().twin_classes().vertex_block_ids();
    for (v, mat) in g.vertices().iter().enumerate() {
        let patt = matrix::embed_boolean(&matrix::pattern(mat), s)?;
        let pv = g
            .index_of(&patt)
            .ok_or_else(|| Error::BadMatrix(format!("pattern of {mat} is not a vertex")))?;
        if ids[v] != ids[pv] {
            return Ok((false, format!("{mat} is not a twin of its pattern {patt}")));
        }
    }
    for verts in g.class_members() {
        for i in 0..verts.len() {
            for j in i + 1..verts.len() {
                let (u, v) = (verts[i], verts[j]);
                let same_pattern =
                    matrix::pattern(&g.vertices()[u]) == matrix::pattern(&g.vertices()[v]);
                if same_pattern && ids[u] != ids[v] {
                    return Ok((
                        false,
                        format!(
                            "{} and {} share class and pattern but not a twin block",
                            g.vertices()[u],
                            g.vertices()[v]
                        ),
                    ));
                }
            }
        }
    }
    Ok((
        true,
        format!(
            "{} vertices twin their patterns; same-class same-pattern pairs share blocks",
            g.vertices().len()
        ),
    ))
}

/// The constructed boolean resolving set actually resolves the graph.
fn check_wr_resolving(n: usize, budget: &Budget) -> CheckResult {
    let b = FiniteSemiring::boolean();
    let g = zdgraph::build_graph(&b, n, budget)?;
    let wr = metric::build_wr(n, budget)?;
    let w = landmark_indices(&g, &wr)?;
    Ok(match metric::is_resolving(g.graph(), &w) {
        None => (
            true,
            format!(
                "{} landmarks resolve {} vertices",
                w.len(),
                g.vertices().len()
            ),
        ),
        Some((u, v)) => (
            false,
            format!(
                "{} and {} share a representation",
                g.vertices()[u],
                g.vertices()[v]
            ),
        ),
    })
}

/// Formula, construction, and (on small graphs) the exact search all give
/// the same boolean metric dimension.
fn check_dim_boolean(n: usize, budget: &Budget) -> CheckResult {
    let formula = metric::dim_formula_boolean(n)?;
    let wr = metric::build_wr(n, budget)?;
    if BigUint::from(wr.len()) != formula {
        return Ok((
            false,
            format!(
                "formula {formula} but construction has {} members",
                wr.len()
            ),
        ));
    }
    let b = FiniteSemiring::boolean();
    let g = zdgraph::build_graph(&b, n, budget)?;
    let w = landmark_indices(&g, &wr)?;
    if let Some((u, v)) = metric::is_resolving(g.graph(), &w) {
        return Ok((
            false,
            format!(
                "construction fails to separate {} and {}",
                g.vertices()[u],
                g.vertices()[v]
            ),
        ));
    }
    if g.vertices().len() > ORACLE_VERTEX_LIMIT {
        return Ok((
            true,
            format!("formula = construction = {formula}, resolving; graph too large for the exact search"),
        ));
    }
    let exact = metric::exact_metric_dimension(g.graph(), budget)?;
    Ok(if BigUint::from(exact.basis.len()) == formula {
        (true, format!("formula = construction = exact = {formula}"))
    } else {
        (
            false,
            format!(
                "formula {formula} but exact search found {}",
                exact.basis.len()
            ),
        )
    })
}

/// Formula, mixed-entry construction, and (on small graphs) the exact
/// search agree over a semiring with more than two elements.
fn check_dim_general(s: &FiniteSemiring, n: usize, budget: &Budget) -> CheckResult {
    if s.order() < 3 {
        return Err(Error::BadInput(
            "dim-general needs a semiring with at least three elements".into(),
        ));
    }
    let formula = metric::dim_formula_general(n, s.order())?;
    let set = metric::build_general_resolving_set(s, n, budget)?;
    if BigUint::from(set.len()) != formula {
        return Ok((
            false,
            format!(
                "formula {formula} but construction has {} members",
                set.len()
            ),
        ));
    }
    let g = zdgraph::build_graph(s, n, budget)?;
    let w = landmark_indices(&g, &set)?;
    if let Some((u, v)) = metric::is_resolving(g.graph(), &w) {
        return Ok((
            false,
            format!(
                "construction fails to separate {} and {}",
                g.vertices()[u],
                g.vertices()[v]
            ),
        ));
    }
    if g.vertices().len() > ORACLE_VERTEX_LIMIT {
        return Ok((
            true,
            format!("formula = construction = {formula}, resolving; graph too large for the exact search"),
        ));
    }
    let exact = metric::exact_metric_dimension(g.graph(), budget)?;
    Ok(if BigUint::from(exact.basis.len()) == formula {
        (true, format!("formula = construction = exact = {formula}"))
    } else {
        (
            false,
            format!(
                "formula {formula} but exact search found {}",
                exact.basis.len()
            ),
        )
    })
}

/// Above this many vertices the dim checks skip the exact search and rely
/// on construction + resolving verification.
const ORACLE_VERTEX_LIMIT: usize = 1000;

fn landmark_indices(g: &ZeroDivisorGraph, set: &[SMatrix]) -> Result<Vec<usize>> {
    set.iter()
        .map(|m| {
            g.index_of(m)
                .ok_or_else(|| Error::BadMatrix(format!("{m} is not a vertex of the graph")))
        })
        .collect()
}
