//! Standard constructions: trivial extensions and Alexander mc-biquandles.

use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use super::CrossingClass::{self, Multi, Single};
use super::{
    check_axioms, AlgebraError, AxiomReport, McBiquandle, OperationTables, EXCHANGE_TRIPLES,
};

/// A single operation pair `(▷̲, ▷̄)`, 0-based and row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiquandleTables {
    pub order: usize,
    pub under: Vec<usize>,
    pub over: Vec<usize>,
}

impl BiquandleTables {
    pub fn new(order: usize, under: Vec<usize>, over: Vec<usize>) -> Self {
        BiquandleTables { order, under, over }
    }

    /// Uses the pair at both crossing classes. The mc-biquandle axioms of
    /// the result are exactly the biquandle axioms of the pair.
    pub fn doubled(&self) -> Result<OperationTables, AlgebraError> {
        OperationTables::new(
            self.order,
            [
                self.under.clone(),
                self.over.clone(),
                self.under.clone(),
                self.over.clone(),
            ],
        )
    }

    pub fn check(&self) -> Result<AxiomReport, AlgebraError> {
        Ok(check_axioms(&self.doubled()?))
    }
}

/// Keeps `b` at single-component crossings and uses the left projection
/// `x ⋄ y = x` for both multi-component operations.
pub fn trivial_extension(b: &BiquandleTables) -> Result<McBiquandle, AlgebraError> {
    let report = b.check()?;
    if !report.passed() {
        return Err(AlgebraError::Axioms(report));
    }
    let n = b.order;
    let proj: Vec<usize> = (0..n * n).map(|i| i / n).collect();
    OperationTables::new(n, [b.under.clone(), b.over.clone(), proj.clone(), proj])?.validate()
}

/// Units `tˢ, rˢ, tᵐ, rᵐ` of `Z/modulus`, stored as residues in `0..modulus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlexanderParams {
    pub modulus: u64,
    pub t_s: u64,
    pub r_s: u64,
    pub t_m: u64,
    pub r_m: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlexanderError {
    #[error("modulus must be at least 2, got {0}")]
    Modulus(u64),
    #[error("parameter {name} = {value} is not a unit mod {modulus}")]
    NotUnit {
        name: &'static str,
        value: u64,
        modulus: u64,
    },
    #[error("constraint {equation} fails for (j,k,l) = ({},{},{})", .triple[0], .triple[1], .triple[2])]
    Constraint {
        equation: u8,
        triple: [CrossingClass; 3],
    },
    #[error("modulus {0} is not prime")]
    CompositeModulus(u64),
}

impl AlexanderParams {
    pub fn new(modulus: u64, t_s: u64, r_s: u64, t_m: u64, r_m: u64) -> Self {
        let m = modulus.max(1);
        AlexanderParams {
            modulus,
            t_s: t_s % m,
            r_s: r_s % m,
            t_m: t_m % m,
            r_m: r_m % m,
        }
    }

    pub fn t(&self, class: CrossingClass) -> u64 {
        match class {
            Single => self.t_s,
            Multi => self.t_m,
        }
    }

    pub fn r(&self, class: CrossingClass) -> u64 {
        match class {
            Single => self.r_s,
            Multi => self.r_m,
        }
    }

    /// `x ▷̲ y = t x + (r - t) y`
    pub fn under(&self, class: CrossingClass, x: u64, y: u64) -> u64 {
        let m = self.modulus;
        let (t, r) = (self.t(class), self.r(class));
        (t * x + (r + m - t) % m * y) % m
    }

    /// `x ▷̄ y = r x`
    pub fn over(&self, class: CrossingClass, x: u64, _y: u64) -> u64 {
        self.r(class) * x % self.modulus
    }

    /// Checks that every parameter is a unit and that the three
    /// compatibility equations hold for all five class triples.
    pub fn check(&self) -> Result<(), AlexanderError> {
        let m = self.modulus;
        if m < 2 {
            return Err(AlexanderError::Modulus(m));
        }
        for (name, value) in [
            ("tS", self.t_s),
            ("rS", self.r_s),
            ("tM", self.t_m),
            ("rM", self.r_m),
        ] {
            if gcd(value, m) != 1 {
                return Err(AlexanderError::NotUnit {
                    name,
                    value,
                    modulus: m,
                });
            }
        }
        let sub = |a: u64, b: u64| (a + m - b) % m;
        for triple in EXCHANGE_TRIPLES {
            let [j, k, l] = triple;
            let (tj, tk, tl) = (self.t(j), self.t(k), self.t(l));
            let (rj, rk, rl) = (self.r(j), self.r(k), self.r(l));
            if sub(rj, rk) * sub(rl, tl) % m != 0 {
                return Err(AlexanderError::Constraint {
                    equation: 1,
                    triple,
                });
            }
            if sub(tk, tl) * sub(rj, tj) % m != 0 {
                return Err(AlexanderError::Constraint {
                    equation: 2,
                    triple,
                });
            }
            if sub(rj, tj) * sub(rl, tl) % m != sub(rl, tj) * sub(rk, tk) % m {
                return Err(AlexanderError::Constraint {
                    equation: 3,
                    triple,
                });
            }
        }
        Ok(())
    }

    pub fn is_prime_modulus(&self) -> bool {
        is_prime(self.modulus)
    }
}

impl fmt::Display for AlexanderParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Z/{} with tS={}, rS={}, tM={}, rM={}",
            self.modulus, self.t_s, self.r_s, self.t_m, self.r_m
        )
    }
}

/// Residue `v` is stored as element `v - 1`, so residue 0 is the label `modulus`.
fn residue_to_element(v: u64, m: u64) -> usize {
    ((v + m - 1) % m) as usize
}

fn element_to_residue(e: usize, m: u64) -> u64 {
    (e as u64 + 1) % m
}

/// The Alexander mc-biquandle on `{1, …, modulus}`.
pub fn alexander_mcb(p: &AlexanderParams) -> Result<McBiquandle, AlexanderError> {
    p.check()?;
    let m = p.modulus;
    let n = m as usize;
    let mut tables: [Vec<usize>; 4] = Default::default();
    for (k, class) in [Single, Single, Multi, Multi].into_iter().enumerate() {
        let over = k % 2 == 1;
        tables[k] = (0..n * n)
            .map(|i| {
                let (x, y) = (element_to_residue(i / n, m), element_to_residue(i % n, m));
                let v = if over {
                    p.over(class, x, y)
                } else {
                    p.under(class, x, y)
                };
                residue_to_element(v, m)
            })
            .collect();
    }
    let tables = OperationTables::new(n, tables).expect("residues are in range");
    // constraint equations and axioms agree for this operation family
    Ok(tables
        .validate()
        .expect("constraint equations imply the axioms"))
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
