//! Finite mc-biquandles.
//!
//! Elements of an order-`n` structure are stored as `0..n`. Every textual
//! rendering (tables, endomorphisms, colorings) shifts to the 1-based labels
//! `1..=n`.

mod axioms;
mod construct;
mod endo;
mod enumerate;
mod iso;

use alloc::vec::Vec;
use core::fmt;
use core::ops::Deref;

use thiserror::Error;

pub use axioms::{check_axioms, AxiomReport, AxiomViolation, DerivedMap, EXCHANGE_TRIPLES};
pub(crate) use construct::is_prime;
pub use construct::{
    alexander_mcb, trivial_extension, AlexanderError, AlexanderParams, BiquandleTables,
};
pub use endo::{endomorphisms, EndoParseError, Endomorphism};
pub use enumerate::{
    enumerate_mcb, EnumerateError, EnumerateOptions, McbEnumeration, DEFAULT_ENUMERATION_ORDER,
    MAX_ENUMERATION_ORDER,
};
pub use iso::mcb_isomorphic;

/// Which kind of crossing an operation pair is used at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CrossingClass {
    /// Both strands belong to the same link component.
    Single,
    /// The strands belong to different components.
    Multi,
}

impl CrossingClass {
    pub const ALL: [CrossingClass; 2] = [CrossingClass::Single, CrossingClass::Multi];

    pub fn symbol(self) -> char {
        match self {
            CrossingClass::Single => 's',
            CrossingClass::Multi => 'm',
        }
    }
}

impl fmt::Display for CrossingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// One of the four binary operations, in block-matrix order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Op {
    UnderSingle,
    OverSingle,
    UnderMulti,
    OverMulti,
}

impl Op {
    pub const ALL: [Op; 4] = [
        Op::UnderSingle,
        Op::OverSingle,
        Op::UnderMulti,
        Op::OverMulti,
    ];

    pub fn under(class: CrossingClass) -> Op {
        match class {
            CrossingClass::Single => Op::UnderSingle,
            CrossingClass::Multi => Op::UnderMulti,
        }
    }

    pub fn over(class: CrossingClass) -> Op {
        match class {
            CrossingClass::Single => Op::OverSingle,
            CrossingClass::Multi => Op::OverMulti,
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("order must be positive")]
    EmptyOrder,
    #[error("table {op:?} has {found} entries, expected {expected}")]
    WrongShape {
        op: Op,
        expected: usize,
        found: usize,
    },
    #[error("table {op:?} entry at ({x}, {y}) is {value}, outside 1..={order}")]
    EntryOutOfRange {
        op: Op,
        x: usize,
        y: usize,
        value: usize,
        order: usize,
    },
    #[error("operation tables violate {} mc-biquandle axiom instance(s)", .0.violations.len())]
    Axioms(AxiomReport),
}

/// Four `n x n` operation tables with entries in range, not yet checked
/// against the axioms.
///
/// Tables are row-major: the entry at `x * n + y` is `x ⋄ y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OperationTables {
    order: usize,
    tables: [Vec<usize>; 4],
}

impl OperationTables {
    /// Builds tables from 0-based row-major entries, in the order
    /// `[▷̲ˢ, ▷̄ˢ, ▷̲ᵐ, ▷̄ᵐ]`.
    pub fn new(order: usize, tables: [Vec<usize>; 4]) -> Result<Self, AlgebraError> {
        if order == 0 {
            return Err(AlgebraError::EmptyOrder);
        }
        for (op, table) in Op::ALL.iter().zip(tables.iter()) {
            if table.len() != order * order {
                return Err(AlgebraError::WrongShape {
                    op: *op,
                    expected: order * order,
                    found: table.len(),
                });
            }
            if let Some(pos) = table.iter().position(|&v| v >= order) {
                return Err(AlgebraError::EntryOutOfRange {
                    op: *op,
                    x: pos / order + 1,
                    y: pos % order + 1,
                    value: table[pos] + 1,
                    order,
                });
            }
        }
        Ok(OperationTables { order, tables })
    }

    /// Builds tables from 1-based rows as printed in operation tables.
    pub fn from_rows(rows: [&[&[usize]]; 4]) -> Result<Self, AlgebraError> {
        let order = rows[0].len();
        let mut tables: [Vec<usize>; 4] = Default::default();
        for (k, table) in rows.iter().enumerate() {
            let op = Op::ALL[k];
            if table.len() != order || table.iter().any(|r| r.len() != order) {
                return Err(AlgebraError::WrongShape {
                    op,
                    expected: order * order,
                    found: table.iter().map(|r| r.len()).sum(),
                });
            }
            for (x, row) in table.iter().enumerate() {
                for (y, &v) in row.iter().enumerate() {
                    if v == 0 || v > order {
                        return Err(AlgebraError::EntryOutOfRange {
                            op,
                            x: x + 1,
                            y: y + 1,
                            value: v,
                            order,
                        });
                    }
                    tables[k].push(v - 1);
                }
            }
        }
        OperationTables::new(order, tables)
    }

    /// Tables where every operation is the left projection `x ⋄ y = x`.
    pub fn trivial(order: usize) -> Result<Self, AlgebraError> {
        let proj: Vec<usize> = (0..order * order).map(|i| i / order.max(1)).collect();
        OperationTables::new(order, [proj.clone(), proj.clone(), proj.clone(), proj])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn op(&self, op: Op, x: usize, y: usize) -> usize {
        self.tables[op.index()][x * self.order + y]
    }

    #[inline]
    pub fn under(&self, class: CrossingClass, x: usize, y: usize) -> usize {
        self.op(Op::under(class), x, y)
    }

    #[inline]
    pub fn over(&self, class: CrossingClass, x: usize, y: usize) -> usize {
        self.op(Op::over(class), x, y)
    }

    pub fn table(&self, op: Op) -> &[usize] {
        &self.tables[op.index()]
    }

    /// Mutable access to one table entry, for building perturbed variants.
    pub fn set(&mut self, op: Op, x: usize, y: usize, value: usize) {
        assert!(value < self.order, "entry out of range");
        self.tables[op.index()][x * self.order + y] = value;
    }

    /// The four tables concatenated row-major; the enumeration order key.
    pub fn key(&self) -> Vec<usize> {
        self.tables.iter().flatten().copied().collect()
    }

    /// Transports the structure along the bijection `perm`, so that
    /// `perm` becomes an isomorphism from `self` to the result.
    pub fn relabel(&self, perm: &[usize]) -> OperationTables {
        let n = self.order;
        assert_eq!(perm.len(), n);
        let mut tables: [Vec<usize>; 4] = Default::default();
        for (k, table) in self.tables.iter().enumerate() {
            let mut out = alloc::vec![0; n * n];
            for x in 0..n {
                for y in 0..n {
                    out[perm[x] * n + perm[y]] = perm[table[x * n + y]];
                }
            }
            tables[k] = out;
        }
        OperationTables { order: n, tables }
    }

    /// Checks the axioms and returns the validated structure.
    pub fn validate(self) -> Result<McBiquandle, AlgebraError> {
        let report = check_axioms(&self);
        if report.passed() {
            Ok(McBiquandle(self))
        } else {
            Err(AlgebraError::Axioms(report))
        }
    }
}

/// Writes the 1-based block matrix `[▷̲ˢ | ▷̄ˢ | ▷̲ᵐ | ▷̄ᵐ]`, one row per line.
impl fmt::Display for OperationTables {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.order;
        for x in 0..n {
            let mut first = true;
            for op in Op::ALL {
                for y in 0..n {
                    if !first {
                        f.write_str(" ")?;
                    }
                    first = false;
                    write!(f, "{}", self.op(op, x, y) + 1)?;
                }
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

/// An mc-biquandle whose tables passed [`check_axioms`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct McBiquandle(OperationTables);

impl McBiquandle {
    pub fn tables(&self) -> &OperationTables {
        &self.0
    }

    pub fn into_tables(self) -> OperationTables {
        self.0
    }

    /// The trivial structure of the given order; all operations are `x ⋄ y = x`.
    pub fn trivial(order: usize) -> Result<Self, AlgebraError> {
        OperationTables::trivial(order)?.validate()
    }

    pub fn relabel(&self, perm: &[usize]) -> McBiquandle {
        McBiquandle(self.0.relabel(perm))
    }
}

impl Deref for McBiquandle {
    type Target = OperationTables;

    fn deref(&self) -> &OperationTables {
        &self.0
    }
}

impl TryFrom<OperationTables> for McBiquandle {
    type Error = AlgebraError;

    fn try_from(tables: OperationTables) -> Result<Self, AlgebraError> {
        tables.validate()
    }
}

impl fmt::Display for McBiquandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
