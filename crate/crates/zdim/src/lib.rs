//! Zero-divisor graphs of matrix semirings.
//!
//! Matrices over a finite commutative semiring that is entire (no zero
//! divisors among the scalars) and zero-sum-free (a + b = 0 forces
//! a = b = 0) have a clean zero-divisor structure: a matrix is a zero
//! divisor exactly when it has an all-zero row or column, and whether a
//! product vanishes depends only on which rows and columns are zero.
//! This crate builds the graph on those matrices (edges join pairs whose
//! product vanishes in at least one order), counts its vertices and
//! classes exactly, constructs explicit resolving sets, evaluates the
//! closed-form metric dimension, and cross-checks everything against
//! brute-force oracles at small sizes.
//!
//! Modules:
//! - [`semiring`]: operation tables, axiom checking, builtins.
//! - [`matrix`]: matrix arithmetic, support classes, exact counting.
//! - [`zdgraph`]: graph construction, distances, twin partitions.
//! - [`metric`]: resolving sets, dimension formulas, the exact search.
//! - [`verify`]: named end-to-end checks used by the CLI and tests.
//! - [`cli`]: the `zdim` command-line tool.

pub mod bits;
pub mod cli;
pub mod error;
pub mod matrix;
pub mod metric;
pub mod semiring;
pub mod verify;
pub mod zdgraph;

pub use error::{Error, Result};

/// Caps on enumeration and search work. Operations that would exceed a
/// cap refuse up front with a budget error instead of running away.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    /// Upper bound on q^(n^2), the full matrix-space size an operation
    /// may enumerate.
    pub max_matrices: u64,
    /// Upper bound on branch nodes in the exact dimension search.
    pub max_search_nodes: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_matrices: 1 << 24,
            max_search_nodes: 5_000_000,
        }
    }
}
