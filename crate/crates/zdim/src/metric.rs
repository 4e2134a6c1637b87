//! Metric dimension: resolving-set checks, an exact branch-and-bound
//! oracle, closed-form dimension values, and explicit resolving-set
//! constructions for the zero-divisor graphs built in this crate.
//!
//! A set W resolves a graph when every vertex is determined by its vector
//! of distances to W. Twins (vertices with identical open or closed
//! neighborhoods) are the obstruction that drives everything here: any
//! resolving set must contain all but one member of each twin block, and
//! in these graphs whole support classes are twin blocks. The exact
//! search therefore fixes all-but-one per block up front and runs a
//! hitting-set search over the few pairs that remain.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde::Serialize;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::matrix::{self, binomial, SMatrix, SupportClass};
use crate::semiring::FiniteSemiring;
use crate::zdgraph::Graph;
use crate::Budget;

/// Checks whether `w` resolves `g`. Returns the first colliding pair
/// (ordered by distance key, then index) or `None` when `w` resolves.
///
/// Vertices inside `w` are distinguished for free: each has distance zero
/// to itself and every other vertex has distance at least one to it. Only
/// vertices outside `w` need their distance vectors compared, so the
/// check runs one BFS per outside vertex.
pub fn is_resolving(g: &Graph, w: &[usize]) -> Option<(usize, usize)> {
    let v = g.vertex_count();
    let mut ws: Vec<usize> = w.to_vec();
    ws.sort_unstable();
    ws.dedup();
    let mut in_w = vec![false; v];
    for &x in &ws {
        assert!(x < v, "landmark {x} out of range");
        in_w[x] = true;
    }
    let outside: Vec<usize> = (0..v).filter(|&i| !in_w[i]).collect();
    if outside.len() <= 1 {
        return None;
    }
    let mut keyed: Vec<(Vec<u8>, usize)> = outside
        .par_iter()
        .map(|&u| {
            let d = g.distances_from(u);
            (ws.iter().map(|&x| d[x]).collect(), u)
        })
        .collect();
    keyed.sort_unstable();
    keyed
        .windows(2)
        .find(|win| win[0].0 == win[1].0)
        .map(|win| (win[0].1, win[1].1))
}

/// Vertices every resolving set must contain once twins are accounted
/// for: all but the highest-index member of each twin block.
pub fn forced_twin_elements(g: &Graph) -> Vec<usize> {
    let mut forced = Vec::new();
    for block in &g.twin_classes().blocks {
        if block.vertices.len() >= 2 {
            forced.extend_from_slice(&block.vertices[..block.vertices.len() - 1]);
        }
    }
    forced.sort_unstable();
    forced
}

/// Outcome of the exact search: a minimum resolving set and the number of
/// branch nodes it took to prove minimality.
#[derive(Clone, Debug)]
pub struct BasisSearch {
    pub basis: Vec<usize>,
    pub explored: u64,
}

struct HittingSearch<'a> {
    pairs: &'a [Bits],
    best: Vec<usize>,
    explored: u64,
    cap: u64,
    out_of_budget: bool,
}

impl HittingSearch<'_> {
    fn lower_bound(&self, chosen: &Bits, width: usize) -> usize {
        let mut lb = 0;
        let mut used = Bits::new(width);
        for d in self.pairs {
            if !d.intersects(chosen) && !d.intersects(&used) {
                lb += 1;
                used.or_assign(d);
            }
        }
        lb
    }

    fn dfs(&mut self, chosen: &mut Vec<usize>, mask: &mut Bits, width: usize) {
        if self.out_of_budget {
            return;
        }
        self.explored += 1;
        if self.explored > self.cap {
            self.out_of_budget = true;
            return;
        }
        let Some(open) = self.pairs.iter().find(|d| !d.intersects(mask)) else {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
            }
            return;
        };
        if chosen.len() + self.lower_bound(mask, width) >= self.best.len() {
            return;
        }
        for k in open.ones() {
            chosen.push(k);
            mask.set(k);
            self.dfs(chosen, mask, width);
            mask.unset(k);
            chosen.pop();
        }
    }
}

/// Exact metric dimension by branch and bound, returning a minimum
/// resolving set (the basis).
///
/// Twin blocks force all-but-one of their members into any resolving set;
/// swapping two twins is a graph automorphism, so some minimum resolving
/// set contains exactly the forced vertices plus a minimum hitting set
/// over the vertex pairs the forced set fails to separate. The search
/// branches on the pair with the fewest remaining distinguishers, prunes
/// with a disjoint-pair packing bound, and gives up past
/// `budget.max_search_nodes` with the bounds established so far.
pub fn exact_metric_dimension(g: &Graph, budget: &Budget) -> Result<BasisSearch> {
    let v = g.vertex_count();
    if v <= 1 {
        return Ok(BasisSearch {
            basis: Vec::new(),
            explored: 0,
        });
    }
    let forced = forced_twin_elements(g);
    let mut is_forced = vec![false; v];
    for &f in &forced {
        is_forced[f] = true;
    }
    let candidates: Vec<usize> = (0..v).filter(|&i| !is_forced[i]).collect();
    let width = candidates.len();
    let rows: Vec<Vec<u8>> = candidates
        .par_iter()
        .map(|&u| g.distances_from(u))
        .collect();

    let mut groups: HashMap<Vec<u8>, Vec<usize>> = HashMap::new();
    for (ci, _) in candidates.iter().enumerate() {
        let key: Vec<u8> = forced.iter().map(|&f| rows[ci][f]).collect();
        groups.entry(key).or_default().push(ci);
    }
    let mut pairs: Vec<(usize, usize, Bits)> = Vec::new();
    for group in groups.values() {
        for a in 0..group.len() {
            for b in a + 1..group.len() {
                let (ci, cj) = (group[a], group[b]);
                let mut d = Bits::new(width);
                for (k, &cand) in candidates.iter().enumerate() {
                    if rows[ci][cand] != rows[cj][cand] {
                        d.set(k);
                    }
                }
                debug_assert!(d.count_ones() > 0, "a vertex always separates itself");
                pairs.push((ci, cj, d));
            }
        }
    }
    if pairs.is_empty() {
        return Ok(BasisSearch {
            basis: forced,
            explored: 0,
        });
    }
    pairs.sort_by_key(|(a, b, d)| (d.count_ones(), *a, *b));
    let pair_sets: Vec<Bits> = pairs.into_iter().map(|(_, _, d)| d).collect();

    // greedy cover for the initial upper bound
    let mut covered = vec![false; pair_sets.len()];
    let mut greedy: Vec<usize> = Vec::new();
    loop {
        let mut best_k = None;
        let mut best_hits = 0usize;
        for k in 0..width {
            let hits = pair_sets
                .iter()
                .zip(&covered)
                .filter(|(d, &c)| !c && d.get(k))
                .count();
            if hits > best_hits {
                best_hits = hits;
                best_k = Some(k);
            }
        }
        let Some(k) = best_k else { break };
        greedy.push(k);
        for (d, c) in pair_sets.iter().zip(covered.iter_mut()) {
            if d.get(k) {
                *c = true;
            }
        }
    }

    let mut search = HittingSearch {
        pairs: &pair_sets,
        best: greedy,
        explored: 0,
        cap: budget.max_search_nodes,
        out_of_budget: false,
    };
    let root_lb = search.lower_bound(&Bits::new(width), width);
    if search.best.len() > root_lb {
        let mut chosen = Vec::new();
        let mut mask = Bits::new(width);
        search.dfs(&mut chosen, &mut mask, width);
    }
    if search.out_of_budget {
        return Err(Error::SearchBudgetExceeded {
            explored: search.explored,
            lower: (forced.len() + root_lb) as u64,
            upper: (forced.len() + search.best.len()) as u64,
        });
    }

    let mut basis = forced;
    basis.extend(search.best.iter().map(|&k| candidates[k]));
    basis.sort_unstable();
    Ok(BasisSearch {
        basis,
        explored: search.explored,
    })
}

/// The explicit resolving set for the square boolean matrices, as a list
/// of matrices in ascending canonical-rank order.
///
/// Per support class: when the class has both a zero row and a zero
/// column, every member except the rank-minimum goes in; same when only
/// rows (or only columns) are zero and fewer than n-1 of them are. Of the
/// n classes with exactly n-1 zero rows (each a single matrix whose one
/// live row is all ones), the one whose live row is the last is left out
/// entirely and the rest go in whole; columns mirror that.
pub fn build_wr(n: usize, budget: &Budget) -> Result<Vec<SMatrix>> {
    if n == 0 {
        return Err(Error::BadInput("matrix size must be at least 1".into()));
    }
    let s = FiniteSemiring::boolean();
    let required = matrix::space_size(n, 2).unwrap_or(u64::MAX);
    if required > budget.max_matrices {
        return Err(Error::BudgetExceeded {
            required,
            cap: budget.max_matrices,
        });
    }
    let full = (1u32 << n) - 1;
    let dropped_extreme = full >> 1;
    let mut out: Vec<SMatrix> = Vec::new();
    for rows in 0..=full {
        for cols in 0..=full {
            let i = rows.count_ones() as usize;
            let j = cols.count_ones() as usize;
            if i == n || j == n || (i == 0 && j == 0) {
                continue;
            }
            let cls = SupportClass::from_masks(n, rows, cols)?;
            let members = matrix::enumerate_class(&cls, &s, budget.max_matrices)?;
            if i > 0 && j > 0 {
                out.extend(members.into_iter().skip(1));
            } else if j == 0 {
                if i + 2 <= n {
                    out.extend(members.into_iter().skip(1));
                } else if rows != dropped_extreme {
                    out.extend(members);
                }
            } else if j + 2 <= n {
                out.extend(members.into_iter().skip(1));
            } else if cols != dropped_extreme {
                out.extend(members);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Size of [`build_wr`]'s set in closed form: 2(n-1) from the classes
/// with n-1 zero lines, plus one less than the class size for every class
/// shape with at most n-2 zero rows and at most n-2 zero columns.
pub fn predicted_wr_size(n: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::BadInput("matrix size must be at least 1".into()));
    }
    let mut total = BigUint::from(2 * (n - 1));
    if n >= 2 {
        for i in 0..=n - 2 {
            for j in 0..=n - 2 {
                if i == 0 && j == 0 {
                    continue;
                }
                let t = matrix::count_class(n, i, j, 2)?;
                total += binomial(n, i) * binomial(n, j) * (t - 1u32);
            }
        }
    }
    Ok(total)
}

/// Metric dimension of the zero-divisor graph of n x n boolean matrices.
/// Coincides with the size of the set [`build_wr`] produces.
pub fn dim_formula_boolean(n: usize) -> Result<BigUint> {
    predicted_wr_size(n)
}

/// Metric dimension of the zero-divisor graph of n x n matrices over a
/// commutative, entire, zero-sum-free semiring with `q` elements.
///
/// For `q > 2` the count is: all zero-divisor matrices containing an
/// entry other than 0 and 1 (an inclusion-exclusion difference against
/// the boolean layer), plus the boolean dimension, minus the 2(n-1)
/// all-ones-line matrices the boolean set contributes but the mixed-entry
/// construction replaces.
pub fn dim_formula_general(n: usize, q: u8) -> Result<BigUint> {
    if q < 2 {
        return Err(Error::BadInput(
            "a semiring has at least two elements".into(),
        ));
    }
    if n == 0 {
        return Err(Error::BadInput("matrix size must be at least 1".into()));
    }
    if q == 2 {
        return dim_formula_boolean(n);
    }
    let qb = BigInt::from(q);
    let two = BigInt::from(2);
    let cells = (n * n) as u32;
    let mut total = qb.pow(cells) - two.pow(cells);
    for k in 0..=n {
        let power = (n - k) as u32;
        let term = (qb.pow(power) - 1i32).pow(n as u32) - (two.pow(power) - 1i32).pow(n as u32);
        let signed = BigInt::from(binomial(n, k)) * term;
        if k % 2 == 0 {
            total -= signed;
        } else {
            total += signed;
        }
    }
    total += BigInt::from(dim_formula_boolean(n)?);
    total -= BigInt::from(2 * (n - 1));
    total
        .to_biguint()
        .ok_or_else(|| Error::BadInput("dimension formula went negative".into()))
}

/// Resolving set for the zero-divisor graph over a semiring with more
/// than two elements: every vertex with an entry other than 0 and 1,
/// plus, for each class shape with at most n-2 zero rows and at most n-2
/// zero columns, all but the rank-maximum member of the boolean class
/// carried into `s` entrywise.
pub fn build_general_resolving_set(
    s: &FiniteSemiring,
    n: usize,
    budget: &Budget,
) -> Result<Vec<SMatrix>> {
    if s.order() < 3 {
        return Err(Error::BadInput(
            "the mixed-entry construction needs a semiring with at least three elements".into(),
        ));
    }
    if n == 0 {
        return Err(Error::BadInput("matrix size must be at least 1".into()));
    }
    let one = s.one();
    let mut out: Vec<SMatrix> = Vec::new();
    for m in matrix::enumerate_matrices(n, s.order(), budget.max_matrices)? {
        if m.is_zero() || !m.has_zero_line() {
            continue;
        }
        if m.entries().iter().any(|&e| e != 0 && e != one) {
            out.push(m);
        }
    }
    let b = FiniteSemiring::boolean();
    let full = (1u32 << n) - 1;
    for rows in 0..=full {
        for cols in 0..=full {
            let i = rows.count_ones() as usize;
            let j = cols.count_ones() as usize;
            if (i == 0 && j == 0) || i + 2 > n || j + 2 > n {
                continue;
            }
            let cls = SupportClass::from_masks(n, rows, cols)?;
            let members = matrix::enumerate_class(&cls, &b, budget.max_matrices)?;
            let keep = members.len().saturating_sub(1);
            for p in members.into_iter().take(keep) {
                out.push(matrix::embed_boolean(&p, s)?);
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Verdict of a dimension run, for the JSON report.
#[derive(Serialize, Clone, Copy, PartialEq, Eq, Debug)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Budget,
}

/// Machine-readable summary of a dimension computation.
#[derive(Serialize, Clone, Debug)]
pub struct DimReport {
    pub semiring: String,
    pub n: usize,
    pub formula: Option<String>,
    pub constructed_size: Option<u64>,
    pub oracle: Option<u64>,
    pub basis_ranks: Option<Vec<u64>>,
    pub witness: Option<[u64; 2]>,
    pub elapsed_ms: u128,
    pub verdict: Verdict,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zdgraph::{build_graph, Graph};
    use proptest::prelude::*;

    fn path(v: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..v).map(|i| (i - 1, i)).collect();
        Graph::from_edges(v, &edges)
    }

    fn cycle(v: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..v).map(|i| (i, (i + 1) % v)).collect();
        Graph::from_edges(v, &edges)
    }

    fn complete(v: usize) -> Graph {
        let mut edges = Vec::new();
        for a in 0..v {
            for b in a + 1..v {
                edges.push((a, b));
            }
        }
        Graph::from_edges(v, &edges)
    }

    fn star(leaves: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges)
    }

    fn m(text: &str, q: u8) -> SMatrix {
        SMatrix::parse(text, q).unwrap()
    }

    /// Smallest resolving-set size by exhaustive subset search.
    fn brute_min_resolving(g: &Graph) -> usize {
        let v = g.vertex_count();
        assert!(v <= 16, "exhaustive search only for tiny graphs");
        let mut masks: Vec<u32> = (0..(1u32 << v)).collect();
        masks.sort_unstable_by_key(|m| (m.count_ones(), *m));
        for mask in masks {
            let w: Vec<usize> = (0..v).filter(|&i| mask >> i & 1 == 1).collect();
            if is_resolving(g, &w).is_none() {
                return w.len();
            }
        }
        unreachable!("the full vertex set always resolves");
    }

    #[test]
    fn resolving_on_fixtures() {
        let p4 = path(4);
        assert_eq!(is_resolving(&p4, &[0]), None);
        assert_eq!(is_resolving(&p4, &[3]), None);
        // the middle of a path cannot tell its two sides apart
        let p3 = path(3);
        assert_eq!(is_resolving(&p3, &[1]), Some((0, 2)));
        assert_eq!(is_resolving(&p3, &[]), Some((0, 1)));
        // duplicates and unordered input are fine
        assert_eq!(is_resolving(&p4, &[3, 3, 0]), None);
        let k4 = complete(4);
        assert!(is_resolving(&k4, &[0, 1]).is_some());
        assert_eq!(is_resolving(&k4, &[0, 1, 2]), None);
    }

    #[test]
    fn forced_elements_on_fixtures() {
        assert_eq!(forced_twin_elements(&path(3)), vec![0]);
        assert_eq!(forced_twin_elements(&path(4)), Vec::<usize>::new());
        assert_eq!(forced_twin_elements(&complete(4)), vec![0, 1, 2]);
        assert_eq!(forced_twin_elements(&cycle(4)), vec![0, 1]);
        assert_eq!(forced_twin_elements(&star(3)), vec![1, 2]);
    }

    #[test]
    fn exact_dimension_on_fixtures() {
        let cases: Vec<(Graph, usize)> = vec![
            (path(2), 1),
            (path(3), 1),
            (path(4), 1),
            (cycle(4), 2),
            (cycle(5), 2),
            (complete(5), 4),
            (star(3), 2),
            (Graph::new(3), 2),
            (Graph::from_edges(4, &[(0, 1), (2, 3)]), 2),
        ];
        for (g, want) in cases {
            let found = exact_metric_dimension(&g, &Budget::default()).unwrap();
            assert_eq!(found.basis.len(), want);
            assert_eq!(is_resolving(&g, &found.basis), None);
        }
    }

    #[test]
    fn exact_matches_exhaustive_on_small_graphs() {
        let graphs = vec![
            path(5),
            cycle(6),
            complete(4),
            star(4),
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]),
            Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)]),
        ];
        for g in graphs {
            let exact = exact_metric_dimension(&g, &Budget::default()).unwrap();
            assert_eq!(exact.basis.len(), brute_min_resolving(&g));
        }
    }

    #[test]
    fn wr_for_2x2_is_the_known_pair() {
        let wr = build_wr(2, &Budget::default()).unwrap();
        assert_eq!(wr, vec![m("1,0;1,0", 2), m("1,1;0,0", 2)]);
    }

    #[test]
    fn wr_resolves_2x2_and_is_minimum() {
        let g = build_graph(&FiniteSemiring::boolean(), 2, &Budget::default()).unwrap();
        let wr = build_wr(2, &Budget::default()).unwrap();
        let w: Vec<usize> = wr.iter().map(|x| g.index_of(x).unwrap()).collect();
        assert_eq!(is_resolving(g.graph(), &w), None);
        let exact = exact_metric_dimension(g.graph(), &Budget::default()).unwrap();
        assert_eq!(exact.basis.len(), w.len());
    }

    #[test]
    fn wr_resolves_3x3() {
        let g = build_graph(&FiniteSemiring::boolean(), 3, &Budget::default()).unwrap();
        let wr = build_wr(3, &Budget::default()).unwrap();
        assert_eq!(wr.len(), 202);
        assert_eq!(BigUint::from(wr.len()), predicted_wr_size(3).unwrap());
        let w: Vec<usize> = wr.iter().map(|x| g.index_of(x).unwrap()).collect();
        assert_eq!(is_resolving(g.graph(), &w), None);
    }

    #[test]
    fn predicted_sizes_frozen() {
        assert_eq!(predicted_wr_size(2).unwrap(), BigUint::from(2u32));
        assert_eq!(predicted_wr_size(3).unwrap(), BigUint::from(202u32));
        assert_eq!(predicted_wr_size(4).unwrap(), BigUint::from(23814u32));
        assert_eq!(dim_formula_boolean(3).unwrap(), BigUint::from(202u32));
        assert!(predicted_wr_size(0).is_err());
    }

    #[test]
    fn exact_dimension_of_boolean_3x3() {
        let g = build_graph(&FiniteSemiring::boolean(), 3, &Budget::default()).unwrap();
        assert_eq!(forced_twin_elements(g.graph()).len(), 198);
        let exact = exact_metric_dimension(g.graph(), &Budget::default()).unwrap();
        assert_eq!(exact.basis.len(), 202);
        assert_eq!(is_resolving(g.graph(), &exact.basis), None);
    }

    #[test]
    fn general_formula_values() {
        assert_eq!(dim_formula_general(2, 3).unwrap(), BigUint::from(16u32));
        assert_eq!(dim_formula_general(3, 3).unwrap(), BigUint::from(3570u32));
        // q = 2 falls back to the boolean count
        assert_eq!(dim_formula_general(3, 2).unwrap(), BigUint::from(202u32));
        assert!(dim_formula_general(2, 1).is_err());
        assert!(dim_formula_general(0, 3).is_err());
    }

    #[test]
    fn general_construction_2x2_chain3() {
        let s = FiniteSemiring::chain(3).unwrap();
        let set = build_general_resolving_set(&s, 2, &Budget::default()).unwrap();
        assert_eq!(set.len(), 16);
        // n = 2 has no embedded boolean part, so every member shows the
        // middle element
        assert!(set
            .iter()
            .all(|x| x.entries().iter().any(|&e| e != 0 && e != s.one())));
        let g = build_graph(&s, 2, &Budget::default()).unwrap();
        let w: Vec<usize> = set.iter().map(|x| g.index_of(x).unwrap()).collect();
        assert_eq!(is_resolving(g.graph(), &w), None);
        let exact = exact_metric_dimension(g.graph(), &Budget::default()).unwrap();
        assert_eq!(exact.basis.len(), 16);
    }

    #[test]
    fn general_construction_3x3_chain3() {
        let s = FiniteSemiring::chain(3).unwrap();
        let set = build_general_resolving_set(&s, 3, &Budget::default()).unwrap();
        assert_eq!(BigUint::from(set.len()), dim_formula_general(3, 3).unwrap());
        let g = build_graph(&s, 3, &Budget::default()).unwrap();
        assert_eq!(g.vertices().len(), 3618);
        let w: Vec<usize> = set.iter().map(|x| g.index_of(x).unwrap()).collect();
        assert_eq!(is_resolving(g.graph(), &w), None);
    }

    #[test]
    fn general_construction_rejects_boolean() {
        let err = build_general_resolving_set(&FiniteSemiring::boolean(), 2, &Budget::default());
        assert!(err.is_err());
    }

    #[test]
    fn search_budget_reports_bounds() {
        // on a 5-cycle the greedy bounds stay apart, so branching happens
        let g = cycle(5);
        let tight = Budget {
            max_search_nodes: 0,
            ..Budget::default()
        };
        match exact_metric_dimension(&g, &tight) {
            Err(Error::SearchBudgetExceeded {
                explored,
                lower,
                upper,
            }) => {
                assert!(explored >= 1);
                assert!(lower >= 1);
                assert!(lower <= upper);
                assert!(upper <= 3);
            }
            other => panic!("expected a budget error, got {other:?}"),
        }
    }

    #[test]
    fn wr_budget_guard() {
        let err = build_wr(5, &Budget::default()).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }

    #[test]
    fn report_serializes_stably() {
        let report = DimReport {
            semiring: "boolean".into(),
            n: 2,
            formula: Some("2".into()),
            constructed_size: Some(2),
            oracle: None,
            basis_ranks: None,
            witness: None,
            elapsed_ms: 0,
            verdict: Verdict::Pass,
        };
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains("\"verdict\":\"pass\""));
        assert!(json.contains("\"oracle\":null"));
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (2usize..=7).prop_flat_map(|v| {
            proptest::collection::vec(any::<bool>(), v * (v - 1) / 2).prop_map(move |flags| {
                let mut edges = Vec::new();
                let mut k = 0;
                for a in 0..v {
                    for b in a + 1..v {
                        if flags[k] {
                            edges.push((a, b));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(v, &edges)
            })
        })
    }

    proptest! {
        #[test]
        fn full_vertex_set_resolves(g in arb_graph()) {
            let all: Vec<usize> = (0..g.vertex_count()).collect();
            prop_assert_eq!(is_resolving(&g, &all), None);
        }

        #[test]
        fn basis_is_minimum_and_resolving(g in arb_graph()) {
            let found = exact_metric_dimension(&g, &Budget::default()).unwrap();
            prop_assert_eq!(is_resolving(&g, &found.basis), None);
            prop_assert_eq!(found.basis.len(), brute_min_resolving(&g));
            // every nontrivial twin block is hit in all but at most one vertex
            for block in &g.twin_classes().blocks {
                let misses = block
                    .vertices
                    .iter()
                    .filter(|v| !found.basis.contains(v))
                    .count();
                prop_assert!(misses <= 1);
            }
        }

        #[test]
        fn supersets_of_a_resolving_set_resolve(g in arb_graph(), extra in 0usize..7) {
            let found = exact_metric_dimension(&g, &Budget::default()).unwrap();
            let mut w = found.basis.clone();
            w.push(extra % g.vertex_count());
            prop_assert_eq!(is_resolving(&g, &w), None);
        }
    }
}
