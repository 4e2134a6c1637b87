//! The zero-divisor graph of the n x n matrix semiring: vertices are the
//! nonzero matrices with at least one all-zero row or column, and two
//! distinct matrices are adjacent when their product in at least one order
//! is the zero matrix.
//!
//! Whether a product vanishes depends only on the support classes of the
//! factors, so the builder decides adjacency once per class pair and fans
//! the answer out to the members; `edge_by_products` keeps the literal
//! multiplication test around as an independent cross-check.
//!
//! Distances fit in a byte (these graphs have diameter at most 3 when
//! connected; 255 marks unreachable), and entire support classes turn out
//! to be twin sets, which the metric-dimension layer exploits.

use std::collections::{HashMap, VecDeque};
use std::io::{self, Write};

use rayon::prelude::*;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::matrix::{self, SMatrix, SupportClass};
use crate::semiring::FiniteSemiring;
use crate::Budget;

pub const UNREACHABLE: u8 = u8::MAX;

/// Undirected graph on `0..v` with bitset adjacency rows.
#[derive(Clone, Debug)]
pub struct Graph {
    adj: Vec<Bits>,
}

impl Graph {
    pub fn new(v: usize) -> Self {
        Graph {
            adj: vec![Bits::new(v); v],
        }
    }

    pub fn from_edges(v: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(v);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Bits::count_ones).sum::<usize>() / 2
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a != b, "no self-loops");
        self.adj[a].set(b);
        self.adj[b].set(a);
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].get(b)
    }

    pub fn neighbors(&self, v: usize) -> &Bits {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones()
    }

    /// BFS distances from `src`; unreachable vertices get [`UNREACHABLE`].
    pub fn distances_from(&self, src: usize) -> Vec<u8> {
        let mut dist = vec![UNREACHABLE; self.vertex_count()];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u];
            assert!(du < UNREACHABLE - 1, "distance does not fit in a byte");
            for w in self.adj[u].ones() {
                if dist[w] == UNREACHABLE {
                    dist[w] = du + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance_matrix(&self) -> Vec<Vec<u8>> {
        (0..self.vertex_count())
            .into_par_iter()
            .map(|v| self.distances_from(v))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        let v = self.vertex_count();
        v == 0 || self.distances_from(0).iter().all(|&d| d != UNREACHABLE)
    }

    pub fn diameter(&self) -> Result<u8> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok((0..self.vertex_count())
            .into_par_iter()
            .map(|v| self.distances_from(v).into_iter().max().unwrap_or(0))
            .max()
            .unwrap_or(0))
    }

    /// Partition into maximal twin blocks.
    ///
    /// Two distinct vertices are twins when their open neighborhoods agree
    /// (they see the same vertices and are not adjacent) or their closed
    /// neighborhoods agree (same vertices, mutually adjacent). No pair can
    /// satisfy both, and a vertex cannot sit in a nontrivial block of each
    /// kind at once, so grouping by the two keys yields a partition.
    pub fn twin_classes(&self) -> TwinPartition {
        let v = self.vertex_count();
        let mut open_groups: HashMap<&Bits, Vec<usize>> = HashMap::new();
        for (i, row) in self.adj.iter().enumerate() {
            open_groups.entry(row).or_default().push(i);
        }
        let mut in_block = vec![false; v];
        let mut blocks = Vec::new();
        for group in open_groups.into_values() {
            if group.len() >= 2 {
                for &i in &group {
                    in_block[i] = true;
                }
                blocks.push(TwinBlock {
                    vertices: group,
                    kind: TwinKind::Open,
                });
            }
        }
        let mut closed_groups: HashMap<Bits, Vec<usize>> = HashMap::new();
        for i in (0..v).filter(|&i| !in_block[i]) {
            let mut key = self.adj[i].clone();
            key.set(i);
            closed_groups.entry(key).or_default().push(i);
        }
        for group in closed_groups.into_values() {
            if group.len() >= 2 {
                for &i in &group {
                    in_block[i] = true;
                }
                blocks.push(TwinBlock {
                    vertices: group,
                    kind: TwinKind::Closed,
                });
            }
        }
        for i in (0..v).filter(|&i| !in_block[i]) {
            blocks.push(TwinBlock {
                vertices: vec![i],
                kind: TwinKind::Singleton,
            });
        }
        for b in &mut blocks {
            b.vertices.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b.vertices[0]);
        TwinPartition { blocks }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TwinKind {
    /// Equal open neighborhoods, members pairwise non-adjacent.
    Open,
    /// Equal closed neighborhoods, members pairwise adjacent.
    Closed,
    /// A block with a single vertex.
    Singleton,
}

#[derive(Clone, Debug)]
pub struct TwinBlock {
    pub vertices: Vec<usize>,
    pub kind: TwinKind,
}

#[derive(Clone, Debug)]
pub struct TwinPartition {
    pub blocks: Vec<TwinBlock>,
}

impl TwinPartition {
    /// Block index of every vertex.
    pub fn vertex_block_ids(&self) -> Vec<usize> {
        let v: usize = self.blocks.iter().map(|b| b.vertices.len()).sum();
        let mut ids = vec![usize::MAX; v];
        for (bi, b) in self.blocks.iter().enumerate() {
            for &i in &b.vertices {
                ids[i] = bi;
            }
        }
        ids
    }

    /// Sizes of the blocks, descending, e.g. for a census line.
    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.blocks.iter().map(|b| b.vertices.len()).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }
}

/// The zero-divisor graph together with its vertex matrices, kept in
/// ascending canonical-rank order.
#[derive(Clone, Debug)]
pub struct ZeroDivisorGraph {
    graph: Graph,
    vertices: Vec<SMatrix>,
    ranks: Vec<u64>,
    classes: Vec<SupportClass>,
    class_of: Vec<usize>,
    semiring: FiniteSemiring,
    n: usize,
}

impl ZeroDivisorGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertices(&self) -> &[SMatrix] {
        &self.vertices
    }

    pub fn ranks(&self) -> &[u64] {
        &self.ranks
    }

    /// Distinct support classes, in order of first appearance by rank.
    pub fn classes(&self) -> &[SupportClass] {
        &self.classes
    }

    /// Class index of every vertex.
    pub fn class_of(&self) -> &[usize] {
        &self.class_of
    }

    pub fn semiring(&self) -> &FiniteSemiring {
        &self.semiring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn index_of(&self, m: &SMatrix) -> Option<usize> {
        self.vertices.binary_search(m).ok()
    }

    /// Vertex indices of every class, indexed like [`Self::classes`].
    pub fn class_members(&self) -> Vec<Vec<usize>> {
        let mut members = vec![Vec::new(); self.classes.len()];
        for (v, &c) in self.class_of.iter().enumerate() {
            members[c].push(v);
        }
        members
    }

    /// Graphviz form with one node per vertex labelled by its matrix text,
    /// each edge written once with the lower index first.
    pub fn write_dot<W: Write>(&self, w: &mut W) -> io::Result<()> {
        writeln!(w, "graph zero_divisors {{")?;
        writeln!(w, "  node [shape=box];")?;
        for (i, m) in self.vertices.iter().enumerate() {
            writeln!(w, "  v{i} [label=\"{m}\"];")?;
        }
        for u in 0..self.vertices.len() {
            for v in self.graph.neighbors(u).ones() {
                if v > u {
                    writeln!(w, "  v{u} -- v{v};")?;
                }
            }
        }
        writeln!(w, "}}")
    }

    /// All-pairs distance matrix as CSV: a header row of vertex ranks, then
    /// one row per vertex led by its rank. Unreachable prints as 255.
    pub fn write_csv_distances<W: Write>(&self, w: &mut W) -> io::Result<()> {
        let dist = self.graph.distance_matrix();
        write!(w, "rank")?;
        for r in &self.ranks {
            write!(w, ",{r}")?;
        }
        writeln!(w)?;
        for (i, row) in dist.iter().enumerate() {
            write!(w, "{}", self.ranks[i])?;
            for d in row {
                write!(w, ",{d}")?;
            }
            writeln!(w)?;
        }
        Ok(())
    }
}

/// Builds the zero-divisor graph of n x n matrices over `s`.
///
/// Enumerates the whole matrix space (refused beyond `budget.max_matrices`),
/// keeps the nonzero matrices with a zero line, and wires edges through the
/// support-class criterion.
pub fn build_graph(s: &FiniteSemiring, n: usize, budget: &Budget) -> Result<ZeroDivisorGraph> {
    let q = s.order();
    let mut vertices = Vec::new();
    let mut ranks = Vec::new();
    let mut classes: Vec<SupportClass> = Vec::new();
    let mut class_ids: HashMap<SupportClass, usize> = HashMap::new();
    let mut class_of = Vec::new();

    for (rank, m) in matrix::enumerate_matrices(n, q, budget.max_matrices)?.enumerate() {
        if m.is_zero() || !m.has_zero_line() {
            continue;
        }
        let cls = matrix::support_class(&m)?;
        let id = *class_ids.entry(cls).or_insert_with(|| {
            classes.push(cls);
            classes.len() - 1
        });
        vertices.push(m);
        ranks.push(rank as u64);
        class_of.push(id);
    }

    let v = vertices.len();
    let c = classes.len();
    let mut class_mask = vec![Bits::new(v); c];
    for (i, &ci) in class_of.iter().enumerate() {
        class_mask[ci].set(i);
    }
    let adjacent: Vec<Vec<bool>> = (0..c)
        .map(|i| {
            (0..c)
                .map(|j| classes[i].products_vanish(&classes[j]))
                .collect()
        })
        .collect();
    let templates: Vec<Bits> = (0..c)
        .map(|i| {
            let mut row = Bits::new(v);
            for j in 0..c {
                if adjacent[i][j] {
                    row.or_assign(&class_mask[j]);
                }
            }
            row
        })
        .collect();
    let adj: Vec<Bits> = (0..v)
        .into_par_iter()
        .map(|i| {
            let mut row = templates[class_of[i]].clone();
            row.unset(i);
            row
        })
        .collect();

    Ok(ZeroDivisorGraph {
        graph: Graph { adj },
        vertices,
        ranks,
        classes,
        class_of,
        semiring: s.clone(),
        n,
    })
}

/// Literal edge test: multiplies the pair in both orders. Independent of
/// the support-class criterion the builder uses.
pub fn edge_by_products(a: &SMatrix, b: &SMatrix, s: &FiniteSemiring) -> Result<bool> {
    Ok(matrix::mat_mul(a, b, s)?.is_zero() || matrix::mat_mul(b, a, s)?.is_zero())
}
