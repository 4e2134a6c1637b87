//! Finite commutative semirings presented by operation tables.
//!
//! The carrier is the index set `{0, .., q-1}` with 0 as the additive
//! identity; addition and multiplication are given as `q x q` tables. The
//! graph constructions downstream need scalars with two extra properties
//! beyond the plain semiring laws:
//!
//! * entire: a product of nonzero elements is nonzero,
//! * zero-sum-free (also called antinegative): a sum is zero only when
//!   both summands are zero.
//!
//! `check_axioms` reports every law separately with a minimal witness for
//! each failure; the validating constructors of [`FiniteSemiring`] refuse
//! any table that fails a law.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Raw operation-table presentation, the on-disk JSON shape.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SemiringDef {
    pub name: String,
    pub order: u8,
    pub one: u8,
    pub add: Vec<Vec<u8>>,
    pub mul: Vec<Vec<u8>>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    AddAssociative,
    AddCommutative,
    AddIdentity,
    MulAssociative,
    MulCommutative,
    MulIdentity,
    LeftDistributive,
    RightDistributive,
    Annihilation,
    Entire,
    ZeroSumFree,
}

impl Axiom {
    pub const ALL: [Axiom; 11] = [
        Axiom::AddAssociative,
        Axiom::AddCommutative,
        Axiom::AddIdentity,
        Axiom::MulAssociative,
        Axiom::MulCommutative,
        Axiom::MulIdentity,
        Axiom::LeftDistributive,
        Axiom::RightDistributive,
        Axiom::Annihilation,
        Axiom::Entire,
        Axiom::ZeroSumFree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::AddAssociative => "add-associative",
            Axiom::AddCommutative => "add-commutative",
            Axiom::AddIdentity => "add-identity",
            Axiom::MulAssociative => "mul-associative",
            Axiom::MulCommutative => "mul-commutative",
            Axiom::MulIdentity => "mul-identity",
            Axiom::LeftDistributive => "left-distributive",
            Axiom::RightDistributive => "right-distributive",
            Axiom::Annihilation => "annihilation",
            Axiom::Entire => "entire",
            Axiom::ZeroSumFree => "zero-sum-free",
        }
    }
}

/// Verdict for a single law, with the lexicographically first violating
/// tuple of carrier indices when the law fails.
#[derive(Clone, Debug, Serialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub holds: bool,
    pub witness: Option<Vec<u8>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            if c.holds {
                writeln!(f, "{:<18} ok", c.axiom.name())?;
            } else {
                let w = c
                    .witness
                    .as_ref()
                    .map(|w| {
                        w.iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join(", ")
                    })
                    .unwrap_or_default();
                writeln!(f, "{:<18} FAIL  witness ({w})", c.axiom.name())?;
            }
        }
        Ok(())
    }
}

fn validate_shape(def: &SemiringDef) -> Result<()> {
    let q = def.order as usize;
    if q < 2 {
        return Err(Error::SemiringFormat(format!(
            "order must be at least 2, got {q}"
        )));
    }
    if def.one as usize >= q {
        return Err(Error::SemiringFormat(format!(
            "one = {} is not a carrier index (order {q})",
            def.one
        )));
    }
    for (label, table) in [("add", &def.add), ("mul", &def.mul)] {
        if table.len() != q {
            return Err(Error::SemiringFormat(format!(
                "{label} table has {} rows, expected {q}",
                table.len()
            )));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != q {
                return Err(Error::SemiringFormat(format!(
                    "{label} table row {i} has {} entries, expected {q}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v as usize >= q {
                    return Err(Error::SemiringFormat(format!(
                        "{label}[{i}][{j}] = {v} is not a carrier index (order {q})"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Checks every semiring law over the full table, one verdict per axiom.
///
/// Witnesses are minimal in lexicographic order over the scanned tuples, so
/// a reported failure can be replayed directly against the tables.
pub fn check_axioms(def: &SemiringDef) -> Result<AxiomReport> {
    validate_shape(def)?;
    let q = def.order;
    let add = |a: u8, b: u8| def.add[a as usize][b as usize];
    let mul = |a: u8, b: u8| def.mul[a as usize][b as usize];
    let one = def.one;

    let mut checks = Vec::with_capacity(Axiom::ALL.len());
    let mut push = |axiom: Axiom, witness: Option<Vec<u8>>| {
        checks.push(AxiomCheck {
            axiom,
            holds: witness.is_none(),
            witness,
        });
    };

    let first_triple = |bad: &dyn Fn(u8, u8, u8) -> bool| -> Option<Vec<u8>> {
        for a in 0..q {
            for b in 0..q {
                for c in 0..q {
                    if bad(a, b, c) {
                        return Some(vec![a, b, c]);
                    }
                }
            }
        }
        None
    };
    let first_pair = |bad: &dyn Fn(u8, u8) -> bool| -> Option<Vec<u8>> {
        for a in 0..q {
            for b in 0..q {
                if bad(a, b) {
                    return Some(vec![a, b]);
                }
            }
        }
        None
    };
    let first_single =
        |bad: &dyn Fn(u8) -> bool| -> Option<Vec<u8>> { (0..q).find(|&a| bad(a)).map(|a| vec![a]) };

    push(
        Axiom::AddAssociative,
        first_triple(&|a, b, c| add(add(a, b), c) != add(a, add(b, c))),
    );
    push(
        Axiom::AddCommutative,
        first_pair(&|a, b| add(a, b) != add(b, a)),
    );
    push(
        Axiom::AddIdentity,
        first_single(&|a| add(0, a) != a || add(a, 0) != a),
    );
    push(
        Axiom::MulAssociative,
        first_triple(&|a, b, c| mul(mul(a, b), c) != mul(a, mul(b, c))),
    );
    push(
        Axiom::MulCommutative,
        first_pair(&|a, b| mul(a, b) != mul(b, a)),
    );
    push(
        Axiom::MulIdentity,
        first_single(&|a| mul(one, a) != a || mul(a, one) != a),
    );
    push(
        Axiom::LeftDistributive,
        first_triple(&|a, b, c| mul(a, add(b, c)) != add(mul(a, b), mul(a, c))),
    );
    push(
        Axiom::RightDistributive,
        first_triple(&|a, b, c| mul(add(a, b), c) != add(mul(a, c), mul(b, c))),
    );
    push(
        Axiom::Annihilation,
        first_single(&|a| mul(0, a) != 0 || mul(a, 0) != 0),
    );
    push(
        Axiom::Entire,
        first_pair(&|a, b| a != 0 && b != 0 && mul(a, b) == 0),
    );
    push(
        Axiom::ZeroSumFree,
        first_pair(&|a, b| (a != 0 || b != 0) && add(a, b) == 0),
    );

    Ok(AxiomReport { checks })
}

/// A validated finite commutative entire zero-sum-free semiring.
///
/// Construction always runs the full axiom check, so a value of this type
/// can be trusted downstream without re-verification.
#[derive(Clone, Debug)]
pub struct FiniteSemiring {
    name: String,
    q: u8,
    one: u8,
    add: Vec<u8>,
    mul: Vec<u8>,
}

impl FiniteSemiring {
    pub fn from_def(def: SemiringDef) -> Result<Self> {
        let report = check_axioms(&def)?;
        if !report.all_hold() {
            return Err(Error::AxiomsViolated(report));
        }
        let flatten = |t: &[Vec<u8>]| t.iter().flatten().copied().collect::<Vec<u8>>();
        Ok(FiniteSemiring {
            name: def.name,
            q: def.order,
            one: def.one,
            add: flatten(&def.add),
            mul: flatten(&def.mul),
        })
    }

    /// The two-element semiring with OR as addition and AND as multiplication.
    pub fn boolean() -> Self {
        FiniteSemiring {
            name: "boolean".into(),
            q: 2,
            one: 1,
            add: vec![0, 1, 1, 1],
            mul: vec![0, 0, 0, 1],
        }
    }

    /// The chain `0 < 1 < .. < q-1` with max as addition and min as
    /// multiplication; the top element is the multiplicative identity.
    pub fn chain(q: u8) -> Result<Self> {
        if q < 2 {
            return Err(Error::SemiringFormat(format!(
                "chain order must be at least 2, got {q}"
            )));
        }
        let mut add = Vec::with_capacity(q as usize * q as usize);
        let mut mul = Vec::with_capacity(q as usize * q as usize);
        for a in 0..q {
            for b in 0..q {
                add.push(a.max(b));
                mul.push(a.min(b));
            }
        }
        Ok(FiniteSemiring {
            name: format!("chain{q}"),
            q,
            one: q - 1,
            add,
            mul,
        })
    }

    /// Parses `"boolean"` or `"chainN"`.
    pub fn builtin(name: &str) -> Result<Self> {
        if name == "boolean" {
            return Ok(Self::boolean());
        }
        if let Some(rest) = name.strip_prefix("chain") {
            if let Ok(q) = rest.parse::<u8>() {
                return Self::chain(q);
            }
        }
        Err(Error::UnknownBuiltin(name.to_string()))
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let def: SemiringDef = serde_json::from_str(s)?;
        Self::from_def(def)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_json_str(&text)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> u8 {
        self.q
    }

    pub fn one(&self) -> u8 {
        self.one
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    /// Reconstructs the table presentation, e.g. for reporting.
    pub fn def(&self) -> SemiringDef {
        let q = self.q as usize;
        let unflatten = |t: &[u8]| t.chunks(q).map(|r| r.to_vec()).collect::<Vec<_>>();
        SemiringDef {
            name: self.name.clone(),
            order: self.q,
            one: self.one,
            add: unflatten(&self.add),
            mul: unflatten(&self.mul),
        }
    }
}
