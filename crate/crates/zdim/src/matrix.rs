//! Square matrices over a finite semiring carrier, their zero-line support
//! classes, and exact counts of zero patterns.
//!
//! Entries are carrier indices. Every `n x n` matrix over `q` elements has a
//! canonical rank: the row-major base-`q` integer of its entry sequence, a
//! bijection with `0..q^(n^2)`. Ranks order matrices exactly like the
//! lexicographic order on their entries, and every "pick a representative"
//! step elsewhere in the crate uses that order, so results are reproducible
//! run to run.
//!
//! The support class of a nonzero matrix is the pair (I, J) of its all-zero
//! row and all-zero column index sets. Over an entire zero-sum-free
//! semiring a product A*B vanishes exactly when every column index of A
//! that is nonzero meets an all-zero row of B, which depends only on the
//! support classes of the factors; the graph layer builds on that.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::semiring::FiniteSemiring;

/// `q^(n^2)` if it fits in `u64`.
pub fn space_size(n: usize, q: u8) -> Option<u64> {
    let mut size: u64 = 1;
    for _ in 0..n * n {
        size = size.checked_mul(q as u64)?;
    }
    Some(size)
}

/// A square matrix of carrier indices, stored row-major.
///
/// The derived ordering compares entries lexicographically, which for a
/// fixed shape coincides with canonical-rank order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SMatrix {
    n: usize,
    q: u8,
    entries: Vec<u8>,
}

impl SMatrix {
    pub fn new(n: usize, q: u8, entries: Vec<u8>) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadMatrix("dimension must be positive".into()));
        }
        if q < 2 {
            return Err(Error::BadMatrix(format!("carrier order {q} too small")));
        }
        if entries.len() != n * n {
            return Err(Error::BadMatrix(format!(
                "{} entries for a {n}x{n} matrix",
                entries.len()
            )));
        }
        if let Some(&bad) = entries.iter().find(|&&e| e >= q) {
            return Err(Error::BadMatrix(format!(
                "entry {bad} out of range for carrier order {q}"
            )));
        }
        Ok(SMatrix { n, q, entries })
    }

    pub fn zero(n: usize, q: u8) -> Self {
        SMatrix {
            n,
            q,
            entries: vec![0; n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        assert!(v < self.q);
        self.entries[i * self.n + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// Canonical rank; `None` only when `q^(n^2)` overflows `u64`.
    pub fn rank(&self) -> Option<u64> {
        let mut r: u64 = 0;
        for &e in &self.entries {
            r = r.checked_mul(self.q as u64)?.checked_add(e as u64)?;
        }
        Some(r)
    }

    pub fn from_rank(n: usize, q: u8, rank: u64) -> Result<Self> {
        let space = space_size(n, q).ok_or(Error::RankOutOfRange { rank, n, q })?;
        if rank >= space {
            return Err(Error::RankOutOfRange { rank, n, q });
        }
        let mut entries = vec![0u8; n * n];
        let mut r = rank;
        for e in entries.iter_mut().rev() {
            *e = (r % q as u64) as u8;
            r /= q as u64;
        }
        Ok(SMatrix { n, q, entries })
    }

    /// Parses the text form `"a,b;c,d"`: rows separated by `;`, entries by
    /// `,`, entries given as decimal carrier indices.
    pub fn parse(text: &str, q: u8) -> Result<Self> {
        let fail = |reason: &str| Error::MatrixText {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let rows: Vec<&str> = text.split(';').collect();
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            let cells: Vec<&str> = row.split(',').collect();
            if cells.len() != n {
                return Err(fail(&format!(
                    "row {:?} has {} entries, expected {n} (matrix must be square)",
                    row,
                    cells.len()
                )));
            }
            for cell in cells {
                let v: u8 = cell
                    .trim()
                    .parse()
                    .map_err(|_| fail(&format!("bad entry {cell:?}")))?;
                entries.push(v);
            }
        }
        Self::new(n, q, entries).map_err(|e| fail(&e.to_string()))
    }

    pub fn row_is_zero(&self, i: usize) -> bool {
        self.entries[i * self.n..(i + 1) * self.n]
            .iter()
            .all(|&e| e == 0)
    }

    pub fn col_is_zero(&self, j: usize) -> bool {
        (0..self.n).all(|i| self.get(i, j) == 0)
    }

    pub fn has_zero_line(&self) -> bool {
        (0..self.n).any(|i| self.row_is_zero(i)) || (0..self.n).any(|j| self.col_is_zero(j))
    }
}

impl fmt::Display for SMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            if i > 0 {
                write!(f, ";")?;
            }
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        Ok(())
    }
}

/// All matrices of the given shape in ascending canonical-rank order,
/// refused when the space exceeds `cap`.
pub fn enumerate_matrices(n: usize, q: u8, cap: u64) -> Result<impl Iterator<Item = SMatrix>> {
    let required = space_size(n, q).unwrap_or(u64::MAX);
    if required > cap {
        return Err(Error::BudgetExceeded { required, cap });
    }
    Ok((0..required).map(move |r| SMatrix::from_rank(n, q, r).expect("rank within space")))
}

/// The pair (I, J) of all-zero row and all-zero column index sets of a
/// nonzero matrix, stored as bit masks over `0..n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SupportClass {
    n: usize,
    zero_rows: u32,
    zero_cols: u32,
}

impl SupportClass {
    pub fn new(n: usize, zero_rows: &[usize], zero_cols: &[usize]) -> Result<Self> {
        if n == 0 || n > 32 {
            return Err(Error::BadClass(format!("dimension {n} out of range")));
        }
        let mut rows = 0u32;
        let mut cols = 0u32;
        for &i in zero_rows {
            if i >= n {
                return Err(Error::BadClass(format!("index {i} out of range for n={n}")));
            }
            rows |= 1 << i;
        }
        for &j in zero_cols {
            if j >= n {
                return Err(Error::BadClass(format!("index {j} out of range for n={n}")));
            }
            cols |= 1 << j;
        }
        Ok(SupportClass {
            n,
            zero_rows: rows,
            zero_cols: cols,
        })
    }

    pub fn from_masks(n: usize, zero_rows: u32, zero_cols: u32) -> Result<Self> {
        if n == 0 || n > 32 {
            return Err(Error::BadClass(format!("dimension {n} out of range")));
        }
        let full = full_mask(n);
        if zero_rows & !full != 0 || zero_cols & !full != 0 {
            return Err(Error::BadClass("mask exceeds dimension".into()));
        }
        Ok(SupportClass {
            n,
            zero_rows,
            zero_cols,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn zero_rows_mask(&self) -> u32 {
        self.zero_rows
    }

    pub fn zero_cols_mask(&self) -> u32 {
        self.zero_cols
    }

    pub fn zero_row_count(&self) -> usize {
        self.zero_rows.count_ones() as usize
    }

    pub fn zero_col_count(&self) -> usize {
        self.zero_cols.count_ones() as usize
    }

    pub fn zero_rows(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|i| self.zero_rows >> i & 1 == 1)
            .collect()
    }

    pub fn zero_cols(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|j| self.zero_cols >> j & 1 == 1)
            .collect()
    }

    /// True when A*B = 0 or B*A = 0 for A in `self` and B in `other`.
    ///
    /// Over an entire zero-sum-free semiring the outcome is the same for
    /// every choice of members, because A*B = 0 holds exactly when each
    /// index is an all-zero column of A or an all-zero row of B.
    pub fn products_vanish(&self, other: &SupportClass) -> bool {
        assert_eq!(self.n, other.n);
        let full = full_mask(self.n);
        let ab = full & !self.zero_cols & !other.zero_rows == 0;
        let ba = full & !other.zero_cols & !self.zero_rows == 0;
        ab || ba
    }
}

fn full_mask(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1 << n) - 1
    }
}

/// Support class of a nonzero matrix; the zero matrix is rejected.
pub fn support_class(a: &SMatrix) -> Result<SupportClass> {
    if a.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    let n = a.n();
    if n > 32 {
        return Err(Error::BadClass(format!("dimension {n} out of range")));
    }
    let mut rows = 0u32;
    let mut cols = 0u32;
    for i in 0..n {
        if a.row_is_zero(i) {
            rows |= 1 << i;
        }
        if a.col_is_zero(i) {
            cols |= 1 << i;
        }
    }
    SupportClass::from_masks(n, rows, cols)
}

pub fn mat_mul(a: &SMatrix, b: &SMatrix, s: &FiniteSemiring) -> Result<SMatrix> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch(a.n(), b.n()));
    }
    if a.q() != b.q() {
        return Err(Error::OrderMismatch(a.q(), b.q()));
    }
    if a.q() != s.order() {
        return Err(Error::OrderMismatch(a.q(), s.order()));
    }
    let n = a.n();
    let mut out = SMatrix::zero(n, a.q());
    for i in 0..n {
        for j in 0..n {
            let mut acc = 0u8;
            for k in 0..n {
                acc = s.add(acc, s.mul(a.get(i, k), b.get(k, j)));
            }
            out.set(i, j, acc);
        }
    }
    Ok(out)
}

/// The 0/1 matrix marking the nonzero positions of `a`.
pub fn pattern(a: &SMatrix) -> SMatrix {
    let entries = a.entries().iter().map(|&e| (e != 0) as u8).collect();
    SMatrix {
        n: a.n(),
        q: 2,
        entries,
    }
}

/// Lifts a 0/1 matrix into `s` by sending 1 to the multiplicative identity.
pub fn embed_boolean(p: &SMatrix, s: &FiniteSemiring) -> Result<SMatrix> {
    if p.q() != 2 {
        return Err(Error::BadMatrix(format!(
            "expected a 0/1 matrix, carrier order is {}",
            p.q()
        )));
    }
    let entries = p
        .entries()
        .iter()
        .map(|&e| if e == 0 { 0 } else { s.one() })
        .collect();
    Ok(SMatrix {
        n: p.n(),
        q: s.order(),
        entries,
    })
}

/// A matrix is a zero divisor in the full matrix semiring exactly when it
/// has an all-zero row or an all-zero column (the zero matrix trivially
/// qualifies). Valid over entire zero-sum-free scalars, which is what
/// `FiniteSemiring` guarantees.
pub fn is_zero_divisor(a: &SMatrix, s: &FiniteSemiring) -> bool {
    assert_eq!(a.q(), s.order());
    a.has_zero_line()
}

/// Every matrix over `s` whose all-zero rows are exactly the class rows and
/// all-zero columns exactly the class columns, ascending by canonical rank.
///
/// The class with all rows and all columns zero is the zero matrix and is
/// rejected; classes with all rows (or all columns) zero but not both are
/// empty. `cap` bounds the number of entry assignments tried.
pub fn enumerate_class(cls: &SupportClass, s: &FiniteSemiring, cap: u64) -> Result<Vec<SMatrix>> {
    let n = cls.n();
    let q = s.order();
    let full = full_mask(n);
    if cls.zero_rows_mask() == full && cls.zero_cols_mask() == full {
        return Err(Error::BadClass(
            "all rows and all columns zero is the zero matrix, not a class of nonzero matrices"
                .into(),
        ));
    }
    if cls.zero_rows_mask() == full || cls.zero_cols_mask() == full {
        return Ok(Vec::new());
    }
    let free_rows: Vec<usize> = (0..n)
        .filter(|i| cls.zero_rows_mask() >> i & 1 == 0)
        .collect();
    let free_cols: Vec<usize> = (0..n)
        .filter(|j| cls.zero_cols_mask() >> j & 1 == 0)
        .collect();
    let r = free_rows.len();
    let c = free_cols.len();
    let required = space_size_rect(r, c, q).unwrap_or(u64::MAX);
    if required > cap {
        return Err(Error::BudgetExceeded { required, cap });
    }

    let mut out = Vec::new();
    let mut digits = vec![0u8; r * c];
    for counter in 0..required {
        let mut x = counter;
        for d in digits.iter_mut().rev() {
            *d = (x % q as u64) as u8;
            x /= q as u64;
        }
        let rows_ok = (0..r).all(|i| digits[i * c..(i + 1) * c].iter().any(|&d| d != 0));
        let cols_ok = rows_ok && (0..c).all(|j| (0..r).any(|i| digits[i * c + j] != 0));
        if !cols_ok {
            continue;
        }
        let mut m = SMatrix::zero(n, q);
        for (i, &row) in free_rows.iter().enumerate() {
            for (j, &col) in free_cols.iter().enumerate() {
                m.set(row, col, digits[i * c + j]);
            }
        }
        out.push(m);
    }
    Ok(out)
}

fn space_size_rect(r: usize, c: usize, q: u8) -> Option<u64> {
    let mut size: u64 = 1;
    for _ in 0..r * c {
        size = size.checked_mul(q as u64)?;
    }
    Some(size)
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

/// Number of `r x c` matrices over `q` elements with no all-zero row and no
/// all-zero column, by inclusion-exclusion over the all-zero column sets:
/// sum over k of `(-1)^k C(c,k) (q^(c-k) - 1)^r`.
pub fn count_no_zero_lines(r: usize, c: usize, q: u8) -> BigUint {
    let mut total = BigInt::zero();
    for k in 0..=c {
        let nonzero_rows = BigInt::from(BigUint::from(q).pow((c - k) as u32) - 1u32);
        let term = BigInt::from(binomial(c, k)) * nonzero_rows.pow(r as u32);
        if k % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
        .to_biguint()
        .expect("inclusion-exclusion total is nonnegative")
}

/// Size of the support class with `i` zero rows and `j` zero columns among
/// `n x n` matrices over `q` elements. Depends only on the cardinalities.
pub fn count_class(n: usize, i: usize, j: usize, q: u8) -> Result<BigUint> {
    if i > n || j > n {
        return Err(Error::BadClass(format!(
            "cardinalities ({i}, {j}) out of range for n={n}"
        )));
    }
    if i == n && j == n {
        return Err(Error::BadClass(
            "all rows and all columns zero is the zero matrix, not a class of nonzero matrices"
                .into(),
        ));
    }
    Ok(count_no_zero_lines(n - i, n - j, q))
}

/// Number of zero divisors in the `n x n` matrix semiring over `q`
/// elements, the zero matrix included: matrices with at least one all-zero
/// row or column.
pub fn count_zero_divisors(n: usize, q: u8) -> BigUint {
    let space = BigUint::from(q).pow((n * n) as u32);
    space - count_no_zero_lines(n, n, q)
}
