//! End-to-end acceptance checks. Each test covers one headline claim,
//! checks it against independent brute-force reasoning where one exists,
//! and prints a single PASS line (visible with --nocapture).

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use zdim::matrix::{self, SMatrix, SupportClass};
use zdim::metric;
use zdim::semiring::FiniteSemiring;
use zdim::zdgraph::{self, ZeroDivisorGraph};
use zdim::Budget;

fn boolean() -> FiniteSemiring {
    FiniteSemiring::boolean()
}

fn chain3() -> FiniteSemiring {
    FiniteSemiring::chain(3).unwrap()
}

fn m(text: &str, q: u8) -> SMatrix {
    SMatrix::parse(text, q).unwrap()
}

fn build(s: &FiniteSemiring, n: usize) -> ZeroDivisorGraph {
    zdgraph::build_graph(s, n, &Budget::default()).unwrap()
}

fn within(start: Instant, secs: u64, what: &str) {
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(secs),
        "{what} took {elapsed:?}, limit {secs}s"
    );
}

#[test]
fn criterion_01_known_2x2_graph_and_dimension() {
    let start = Instant::now();
    let g = build(&boolean(), 2);
    assert_eq!(g.vertices().len(), 8);

    // the two known landmarks resolve the graph
    let w = vec![
        g.index_of(&m("1,0;1,0", 2)).unwrap(),
        g.index_of(&m("1,1;0,0", 2)).unwrap(),
    ];
    assert_eq!(metric::is_resolving(g.graph(), &w), None);

    // no single vertex does
    for v in 0..8 {
        assert!(metric::is_resolving(g.graph(), &[v]).is_some());
    }

    let exact = metric::exact_metric_dimension(g.graph(), &Budget::default()).unwrap();
    assert_eq!(exact.basis.len(), 2);
    assert_eq!(metric::dim_formula_boolean(2).unwrap(), BigUint::from(2u32));

    within(start, 1, "criterion 1");
    println!("criterion 01 (2x2 boolean graph, dimension 2): PASS");
}

/// Counts r x c zero-one matrices with no zero row or column by walking
/// every bit pattern; shares nothing with the library's counting path.
fn brute_no_zero_lines(r: usize, c: usize) -> u64 {
    let mut count = 0;
    for code in 0u64..1 << (r * c) {
        let rows_ok = (0..r).all(|i| code >> (i * c) & ((1 << c) - 1) != 0);
        let cols_ok = (0..c).all(|j| (0..r).any(|i| code >> (i * c + j) & 1 == 1));
        if rows_ok && cols_ok {
            count += 1;
        }
    }
    count
}

#[test]
fn criterion_02_counting_against_enumeration() {
    let start = Instant::now();
    for r in 1..=4 {
        for c in 1..=4 {
            assert_eq!(
                matrix::count_no_zero_lines(r, c, 2),
                BigUint::from(brute_no_zero_lines(r, c)),
                "no-zero-line count at {r}x{c}"
            );
        }
    }
    // the class-size table against materialized classes
    let b = boolean();
    for n in [2usize, 3] {
        for i in 0..n {
            for j in 0..n {
                let rows: Vec<usize> = (0..i).collect();
                let cols: Vec<usize> = (0..j).collect();
                let cls = SupportClass::new(n, &rows, &cols).unwrap();
                let members = matrix::enumerate_class(&cls, &b, 1 << 24).unwrap();
                assert_eq!(
                    matrix::count_class(n, i, j, 2).unwrap(),
                    BigUint::from(members.len()),
                    "class size at n={n} ({i},{j})"
                );
            }
        }
    }
    within(start, 10, "criterion 2");
    println!("criterion 02 (counting formulas match enumeration): PASS");
}

#[test]
fn criterion_03_extreme_classes_are_singletons() {
    let b = boolean();
    // materialized at n = 2 and 3: every class shape with n-1 zero rows
    // or n-1 zero columns, over every choice of index sets
    for n in [2usize, 3] {
        for rows_mask in 0..1u32 << n {
            for cols_mask in 0..1u32 << n {
                let i = rows_mask.count_ones() as usize;
                let j = cols_mask.count_ones() as usize;
                if i != n - 1 && j != n - 1 {
                    continue;
                }
                if i == n || j == n {
                    continue;
                }
                let cls = SupportClass::from_masks(n, rows_mask, cols_mask).unwrap();
                let members = matrix::enumerate_class(&cls, &b, 1 << 24).unwrap();
                assert_eq!(members.len(), 1, "n={n} class {cls:?}");
            }
        }
    }
    // counted arithmetically at n = 4
    for i in 0..4 {
        for j in 0..4 {
            if i == 3 || j == 3 {
                assert_eq!(
                    matrix::count_class(4, i, j, 2).unwrap(),
                    BigUint::from(1u32),
                    "n=4 shape ({i},{j})"
                );
            }
        }
    }
    println!("criterion 03 (classes with n-1 zero lines are singletons): PASS");
}

#[test]
fn criterion_04_twin_suites() {
    let start = Instant::now();
    // definitional twin check: equal neighborhoods once the pair itself
    // is masked out, straight from adjacency rows
    for (s, n) in [(boolean(), 2), (boolean(), 3), (chain3(), 2)] {
        let g = build(&s, n);
        for verts in g.class_members() {
            for a in 0..verts.len() {
                for b in a + 1..verts.len() {
                    let (u, v) = (verts[a], verts[b]);
                    let mut ru = g.graph().neighbors(u).clone();
                    let mut rv = g.graph().neighbors(v).clone();
                    for row in [&mut ru, &mut rv] {
                        row.unset(u);
                        row.unset(v);
                    }
                    assert_eq!(
                        ru,
                        rv,
                        "{} and {} over {} are not twins",
                        g.vertices()[u],
                        g.vertices()[v],
                        s.name()
                    );
                }
            }
        }
    }
    // each matrix shares a class (hence all of the above) with its pattern
    let s = chain3();
    let g = build(&s, 2);
    for mat in g.vertices() {
        let patt = matrix::embed_boolean(&matrix::pattern(mat), &s).unwrap();
        assert!(g.index_of(&patt).is_some(), "pattern of {mat} is a vertex");
        assert_eq!(
            matrix::support_class(mat).unwrap(),
            matrix::support_class(&patt).unwrap()
        );
    }
    within(start, 120, "criterion 4");
    println!("criterion 04 (support classes are twin sets): PASS");
}

#[test]
fn criterion_05_distance_laws_at_n3() {
    let g = build(&boolean(), 3);

    // one zero row and one zero column: everything is within distance 2
    let mut sources = 0;
    for (v, &ci) in g.class_of().iter().enumerate() {
        let cls = g.classes()[ci];
        if cls.zero_row_count() == 1 && cls.zero_col_count() == 1 {
            sources += 1;
            let dist = g.graph().distances_from(v);
            assert!(dist.iter().all(|&d| d <= 2), "source {}", g.vertices()[v]);
        }
    }
    assert_eq!(sources, 63);

    // disjoint zero-row sets with no zero columns: distance exactly 3,
    // and the column-side mirror
    let members = g.class_members();
    let mut pairs = 0;
    for by_rows in [true, false] {
        for ca in 0..g.classes().len() {
            for cb in 0..g.classes().len() {
                let (a, b) = (g.classes()[ca], g.classes()[cb]);
                let qualifies = if by_rows {
                    a.zero_col_count() == 0
                        && b.zero_col_count() == 0
                        && a.zero_rows_mask() & b.zero_rows_mask() == 0
                } else {
                    a.zero_row_count() == 0
                        && b.zero_row_count() == 0
                        && a.zero_cols_mask() & b.zero_cols_mask() == 0
                };
                if !qualifies {
                    continue;
                }
                for &u in &members[ca] {
                    let dist = g.graph().distances_from(u);
                    for &v in &members[cb] {
                        pairs += 1;
                        assert_eq!(dist[v], 3, "{} to {}", g.vertices()[u], g.vertices()[v]);
                    }
                }
            }
        }
    }
    assert!(pairs > 0);
    println!("criterion 05 (distance laws: nearby hubs, far disjoint lines): PASS");
}

#[test]
fn criterion_06_wr_construction_size_and_resolving() {
    let start = Instant::now();
    let wr3 = metric::build_wr(3, &Budget::default()).unwrap();
    assert_eq!(wr3.len(), 202);
    assert_eq!(
        BigUint::from(wr3.len()),
        metric::predicted_wr_size(3).unwrap()
    );
    let g = build(&boolean(), 3);
    assert_eq!(g.vertices().len(), 246);
    let w: Vec<usize> = wr3.iter().map(|x| g.index_of(x).unwrap()).collect();
    assert_eq!(metric::is_resolving(g.graph(), &w), None);

    // stretch size identity one dimension up
    let wr4 = metric::build_wr(4, &Budget::default()).unwrap();
    assert_eq!(wr4.len(), 23814);
    assert_eq!(
        BigUint::from(wr4.len()),
        metric::predicted_wr_size(4).unwrap()
    );

    within(start, 60, "criterion 6");
    println!("criterion 06 (resolving-set construction at n=3, size identity at n=4): PASS");
}

#[test]
fn criterion_07_exact_dimension_at_n3() {
    let start = Instant::now();
    let g = build(&boolean(), 3);
    let forced = metric::forced_twin_elements(g.graph());
    assert_eq!(forced.len(), 198);

    // the forced set alone does not resolve
    assert!(metric::is_resolving(g.graph(), &forced).is_some());

    // and no 3 of the 48 remaining vertices complete it: exhaustive over
    // all 17296 triples, with pair-separation masks packed into u64
    let mut in_forced = vec![false; g.vertices().len()];
    for &f in &forced {
        in_forced[f] = true;
    }
    let cands: Vec<usize> = (0..g.vertices().len()).filter(|&v| !in_forced[v]).collect();
    assert_eq!(cands.len(), 48);
    let rows: Vec<Vec<u8>> = cands.iter().map(|&u| g.graph().distances_from(u)).collect();
    let mut pairs: Vec<u64> = Vec::new();
    for a in 0..cands.len() {
        for b in a + 1..cands.len() {
            if forced.iter().any(|&f| rows[a][f] != rows[b][f]) {
                continue;
            }
            let mut mask = 0u64;
            for (k, &cand) in cands.iter().enumerate() {
                if rows[a][cand] != rows[b][cand] {
                    mask |= 1 << k;
                }
            }
            pairs.push(mask);
        }
    }
    assert_eq!(pairs.len(), 54);
    for a in 0..48 {
        for b in a + 1..48 {
            for c in b + 1..48 {
                let chosen = 1u64 << a | 1 << b | 1 << c;
                assert!(
                    pairs.iter().any(|&p| p & chosen == 0),
                    "a 201-vertex resolving set exists"
                );
            }
        }
    }

    // the search agrees with the closed form
    let exact = metric::exact_metric_dimension(g.graph(), &Budget::default()).unwrap();
    assert_eq!(exact.basis.len(), 202);
    assert_eq!(
        metric::dim_formula_boolean(3).unwrap(),
        BigUint::from(202u32)
    );
    assert_eq!(metric::is_resolving(g.graph(), &exact.basis), None);

    // every twin pair contributes a member to the basis
    for verts in g.class_members() {
        for a in 0..verts.len() {
            for b in a + 1..verts.len() {
                assert!(
                    exact.basis.binary_search(&verts[a]).is_ok()
                        || exact.basis.binary_search(&verts[b]).is_ok()
                );
            }
        }
    }

    within(start, 300, "criterion 7");
    println!("criterion 07 (exact dimension 202 at n=3, lower bound exhaustive): PASS");
}

#[test]
fn criterion_08_order_three_semiring_at_n2() {
    let start = Instant::now();
    let s = chain3();
    let formula = metric::dim_formula_general(2, 3).unwrap();
    assert_eq!(formula, BigUint::from(16u32));

    // cross-identity through the zero-divisor counts
    let by_counts = matrix::count_zero_divisors(2, 3) - matrix::count_zero_divisors(2, 2)
        + metric::dim_formula_boolean(2).unwrap()
        - BigUint::from(2u32);
    assert_eq!(formula, by_counts);

    let set = metric::build_general_resolving_set(&s, 2, &Budget::default()).unwrap();
    assert_eq!(set.len(), 16);
    let g = build(&s, 2);
    assert_eq!(g.vertices().len(), 24);
    let w: Vec<usize> = set.iter().map(|x| g.index_of(x).unwrap()).collect();
    assert_eq!(metric::is_resolving(g.graph(), &w), None);

    let exact = metric::exact_metric_dimension(g.graph(), &Budget::default()).unwrap();
    assert_eq!(exact.basis.len(), 16);

    within(start, 30, "criterion 8");
    println!(
        "criterion 08 (order-3 semiring: formula, construction, and search agree at 16): PASS"
    );
}

#[test]
fn criterion_09_zero_divisor_characterization() {
    for (n, s) in [(2usize, boolean()), (3, boolean()), (2, chain3())] {
        let all: Vec<SMatrix> = matrix::enumerate_matrices(n, s.order(), 1 << 24)
            .unwrap()
            .collect();
        let nonzero: Vec<&SMatrix> = all.iter().filter(|x| !x.is_zero()).collect();
        for a in &all {
            let by_rule = matrix::is_zero_divisor(a, &s);
            let by_witness = nonzero.iter().any(|b| {
                matrix::mat_mul(a, b, &s).unwrap().is_zero()
                    || matrix::mat_mul(b, a, &s).unwrap().is_zero()
            });
            assert_eq!(by_rule, by_witness, "matrix {a} over {}", s.name());
        }
    }
    println!("criterion 09 (zero-line rule matches the witness definition): PASS");
}

#[test]
fn criterion_10_diameter_bounds() {
    let g2 = build(&boolean(), 2);
    assert_eq!(g2.graph().diameter().unwrap(), 3);
    let g3 = build(&boolean(), 3);
    assert!(g3.graph().diameter().unwrap() <= 3);
    println!("criterion 10 (diameter 3 at n=2, at most 3 at n=3): PASS");
}
