use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{CrossingClass, OperationTables};
use CrossingClass::{Multi, Single};

/// The `(j, k, l)` class triples for which the exchange laws must hold.
pub const EXCHANGE_TRIPLES: [[CrossingClass; 3]; 5] = [
    [Single, Single, Single],
    [Single, Multi, Multi],
    [Multi, Single, Multi],
    [Multi, Multi, Single],
    [Multi, Multi, Multi],
];

/// The column maps `α_y(x) = x ▷̲ y` and `β_y(x) = x ▷̄ y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DerivedMap {
    Alpha,
    Beta,
}

/// A single failing axiom instance. Element fields are 0-based; `Display`
/// prints them 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AxiomViolation {
    /// Axiom (i): `x ▷̄ˢ x ≠ x ▷̲ˢ x`.
    Idempotence { x: usize },
    /// Axiom (ii): `α_y` or `β_y` sends `first` and `second` to the same element.
    ColumnNotBijective {
        class: CrossingClass,
        map: DerivedMap,
        y: usize,
        first: usize,
        second: usize,
    },
    /// Axiom (ii): the switch map `S(x, y) = (y ▷̄ x, x ▷̲ y)` identifies two pairs.
    SwitchNotBijective {
        class: CrossingClass,
        first: (usize, usize),
        second: (usize, usize),
    },
    /// Axiom (iii): exchange law `law` (1, 2 or 3) fails for `triple` at `(x, y, z)`.
    Exchange {
        law: u8,
        triple: [CrossingClass; 3],
        x: usize,
        y: usize,
        z: usize,
    },
}

impl AxiomViolation {
    /// The axiom group, `1`, `2` or `3`.
    pub fn axiom(&self) -> u8 {
        match self {
            AxiomViolation::Idempotence { .. } => 1,
            AxiomViolation::ColumnNotBijective { .. }
            | AxiomViolation::SwitchNotBijective { .. } => 2,
            AxiomViolation::Exchange { .. } => 3,
        }
    }
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            AxiomViolation::Idempotence { x } => {
                write!(f, "(i) x ▷̄ˢ x ≠ x ▷̲ˢ x at x = {}", x + 1)
            }
            AxiomViolation::ColumnNotBijective {
                class,
                map,
                y,
                first,
                second,
            } => {
                let name = match map {
                    DerivedMap::Alpha => "alpha",
                    DerivedMap::Beta => "beta",
                };
                write!(
                    f,
                    "(ii) {name}^{class}_{} is not bijective: {} and {} have the same image",
                    y + 1,
                    first + 1,
                    second + 1
                )
            }
            AxiomViolation::SwitchNotBijective {
                class,
                first,
                second,
            } => write!(
                f,
                "(ii) S^{class} is not bijective: ({}, {}) and ({}, {}) have the same image",
                first.0 + 1,
                first.1 + 1,
                second.0 + 1,
                second.1 + 1
            ),
            AxiomViolation::Exchange {
                law,
                triple,
                x,
                y,
                z,
            } => write!(
                f,
                "(iii) exchange law {law} fails for (j,k,l) = ({},{},{}) at (x,y,z) = ({}, {}, {})",
                triple[0],
                triple[1],
                triple[2],
                x + 1,
                y + 1,
                z + 1
            ),
        }
    }
}

/// Outcome of [`check_axioms`]: every failing instance, in a fixed order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AxiomReport {
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return writeln!(f, "pass");
        }
        writeln!(f, "fail: {} violation(s)", self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        Ok(())
    }
}

/// Checks all mc-biquandle axioms and reports every failing instance.
pub fn check_axioms(t: &OperationTables) -> AxiomReport {
    let n = t.order();
    let mut violations = Vec::new();

    for x in 0..n {
        if t.over(Single, x, x) != t.under(Single, x, x) {
            violations.push(AxiomViolation::Idempotence { x });
        }
    }

    for class in CrossingClass::ALL {
        for (map, apply) in [
            (
                DerivedMap::Alpha,
                OperationTables::under
                    as fn(&OperationTables, CrossingClass, usize, usize) -> usize,
            ),
            (DerivedMap::Beta, OperationTables::over),
        ] {
            for y in 0..n {
                let mut preimage = vec![None; n];
                for x in 0..n {
                    let image = apply(t, class, x, y);
                    match preimage[image] {
                        Some(first) => violations.push(AxiomViolation::ColumnNotBijective {
                            class,
                            map,
                            y,
                            first,
                            second: x,
                        }),
                        None => preimage[image] = Some(x),
                    }
                }
            }
        }

        let mut preimage: Vec<Option<(usize, usize)>> = vec![None; n * n];
        for x in 0..n {
            for y in 0..n {
                let image = t.over(class, y, x) * n + t.under(class, x, y);
                match preimage[image] {
                    Some(first) => violations.push(AxiomViolation::SwitchNotBijective {
                        class,
                        first,
                        second: (x, y),
                    }),
                    None => preimage[image] = Some((x, y)),
                }
            }
        }
    }

    for triple in EXCHANGE_TRIPLES {
        let [j, k, l] = triple;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let o = |c, a, b| t.over(c, a, b);
                    let u = |c, a, b| t.under(c, a, b);
                    if o(l, o(k, x, y), o(j, z, y)) != o(k, o(l, x, z), u(j, y, z)) {
                        violations.push(AxiomViolation::Exchange {
                            law: 1,
                            triple,
                            x,
                            y,
                            z,
                        });
                    }
                    if o(j, u(l, x, y), u(k, z, y)) != u(l, o(j, x, z), o(k, y, z)) {
                        violations.push(AxiomViolation::Exchange {
                            law: 2,
                            triple,
                            x,
                            y,
                            z,
                        });
                    }
                    if u(j, u(k, x, y), u(l, z, y)) != u(k, u(j, x, z), o(l, y, z)) {
                        violations.push(AxiomViolation::Exchange {
                            law: 3,
                            triple,
                            x,
                            y,
                            z,
                        });
                    }
                }
            }
        }
    }

    AxiomReport { violations }
}
