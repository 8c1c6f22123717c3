//! Coloring matrices for Alexander mc-biquandles over prime moduli.
//!
//! With `x ▷̲ y = t x + (r − t) y` and `x ▷̄ y = r x`, the coloring
//! conditions are linear, so the homset is the kernel of a matrix over
//! `Z/p`. Residue `v` corresponds to element `v` for `v > 0` and to
//! element `p` for `v = 0`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::algebra::AlexanderParams;
use crate::diagram::LinkDiagram;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinearError {
    #[error("modulus {0} is not prime; use the backtracking count instead")]
    CompositeModulus(u64),
    #[error("kernel size {modulus}^{dimension} does not fit in 128 bits")]
    Overflow { modulus: u64, dimension: usize },
}

/// A matrix over `Z/p` with entries kept in `0..p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringMatrix {
    modulus: u64,
    cols: usize,
    rows: Vec<Vec<u64>>,
}

impl ColoringMatrix {
    /// Reduces every entry; panics if a row has the wrong length.
    pub fn new(modulus: u64, cols: usize, rows: Vec<Vec<u64>>) -> Result<Self, LinearError> {
        if !crate::algebra::is_prime(modulus) {
            return Err(LinearError::CompositeModulus(modulus));
        }
        let rows = rows
            .into_iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "row length must equal the column count");
                r.into_iter().map(|v| v % modulus).collect()
            })
            .collect();
        Ok(ColoringMatrix {
            modulus,
            cols,
            rows,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// Leading column of each nonzero row, in row order.
    pub fn pivots(&self) -> Vec<Option<usize>> {
        self.rows
            .iter()
            .map(|r| r.iter().position(|&v| v != 0))
            .collect()
    }

    /// Nonzero rows first with strictly increasing leading columns.
    pub fn is_row_echelon(&self) -> bool {
        let mut last: Option<usize> = None;
        let mut seen_zero = false;
        for p in self.pivots() {
            match p {
                None => seen_zero = true,
                Some(_) if seen_zero => return false,
                Some(c) => {
                    if last.is_some_and(|l| c <= l) {
                        return false;
                    }
                    last = Some(c);
                }
            }
        }
        true
    }

    /// `p^(cols − rank)`.
    pub fn kernel_size(&self) -> Result<u128, LinearError> {
        let (_, rank) = rref_mod_p(self);
        let dimension = self.cols - rank;
        (self.modulus as u128)
            .checked_pow(dimension as u32)
            .ok_or(LinearError::Overflow {
                modulus: self.modulus,
                dimension,
            })
    }

    /// Whether `v` (residues, one per column) is in the kernel.
    pub fn annihilates(&self, v: &[u64]) -> bool {
        let p = self.modulus;
        self.rows.iter().all(|r| {
            r.iter()
                .zip(v)
                .fold(0, |acc, (&a, &b)| (acc + a * (b % p)) % p)
                == 0
        })
    }
}

impl fmt::Display for ColoringMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            for (j, v) in r.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

/// Two rows per crossing in id order (under relation, then over relation),
/// one column per semiarc.
pub fn build_coloring_matrix(
    diagram: &LinkDiagram,
    params: &AlexanderParams,
) -> Result<ColoringMatrix, LinearError> {
    let p = params.modulus;
    if !params.is_prime_modulus() {
        return Err(LinearError::CompositeModulus(p));
    }
    let cols = diagram.semiarc_count();
    let mut rows = Vec::with_capacity(2 * diagram.crossings().len());
    for c in diagram.crossings() {
        let (t, r) = (params.t(c.class), params.r(c.class));
        let (u, o) = c.left();
        let (u2, o2) = c.right();
        let mut under = vec![0u64; cols];
        under[u.0] = (under[u.0] + t) % p;
        under[o.0] = (under[o.0] + r + p - t) % p;
        under[u2.0] = (under[u2.0] + p - 1) % p;
        let mut over = vec![0u64; cols];
        over[o.0] = (over[o.0] + r) % p;
        over[o2.0] = (over[o2.0] + p - 1) % p;
        rows.push(under);
        rows.push(over);
    }
    Ok(ColoringMatrix {
        modulus: p,
        cols,
        rows,
    })
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2)
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Reduced row-echelon form over `Z/p` and the rank.
pub fn rref_mod_p(m: &ColoringMatrix) -> (ColoringMatrix, usize) {
    let p = m.modulus;
    let mut rows = m.rows.clone();
    let mut rank = 0;
    for col in 0..m.cols {
        let Some(pivot) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = inverse_mod(rows[rank][col], p);
        for v in rows[rank].iter_mut() {
            *v = *v * inv % p;
        }
        for i in 0..rows.len() {
            let factor = rows[i][col];
            if i == rank || factor == 0 {
                continue;
            }
            let pivot_row = rows[rank].clone();
            for (a, b) in rows[i].iter_mut().zip(&pivot_row) {
                *a = (*a + (p - factor) * b) % p;
            }
        }
        rank += 1;
    }
    (
        ColoringMatrix {
            modulus: p,
            cols: m.cols,
            rows,
        },
        rank,
    )
}

/// The counting invariant of an Alexander mc-biquandle, via the kernel.
pub fn linear_count(diagram: &LinkDiagram, params: &AlexanderParams) -> Result<u128, LinearError> {
    build_coloring_matrix(diagram, params)?.kernel_size()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::alexander_mcb;
    use crate::coloring::count_colorings;
    use crate::diagram::parse_gauss;
    use alloc::string::ToString;

    fn matrix(p: u64, rows: &[&[u64]]) -> ColoringMatrix {
        ColoringMatrix::new(p, rows[0].len(), rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn printed() -> ColoringMatrix {
        matrix(
            3,
            &[
                &[2, 2, 2, 0, 0, 0],
                &[0, 1, 0, 2, 0, 0],
                &[2, 2, 0, 0, 0, 0],
                &[0, 0, 0, 0, 2, 2],
                &[0, 0, 0, 0, 2, 2],
                &[0, 0, 2, 2, 0, 0],
            ],
        )
    }

    #[test]
    fn printed_example_over_z3() {
        let (r, rank) = rref_mod_p(&printed());
        assert_eq!(rank, 5);
        assert_eq!(printed().kernel_size().unwrap(), 3);
        // the printed reduction is an echelon form of the same row space
        let echelon = matrix(
            3,
            &[
                &[1, 1, 0, 0, 0, 0],
                &[0, 1, 0, 2, 0, 0],
                &[0, 0, 1, 0, 0, 0],
                &[0, 0, 0, 1, 0, 0],
                &[0, 0, 0, 0, 1, 1],
                &[0, 0, 0, 0, 0, 0],
            ],
        );
        assert!(echelon.is_row_echelon());
        assert_eq!(rref_mod_p(&echelon).0, r);
    }

    #[test]
    fn identity_and_zero() {
        let id = matrix(7, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(rref_mod_p(&id), (id.clone(), 3));
        assert_eq!(id.kernel_size().unwrap(), 1);
        let zero = matrix(5, &[&[0; 4], &[0; 4], &[0; 4]]);
        assert_eq!(rref_mod_p(&zero).1, 0);
        assert_eq!(zero.kernel_size().unwrap(), 625);
    }

    #[test]
    fn rref_is_idempotent_with_increasing_pivots() {
        let (r, _) = rref_mod_p(&printed());
        assert_eq!(rref_mod_p(&r).0, r);
        assert!(r.is_row_echelon());
    }

    #[test]
    fn composite_rejected() {
        let d = parse_gauss("").unwrap();
        let params = AlexanderParams::new(4, 1, 1, 1, 1);
        assert_eq!(
            linear_count(&d, &params),
            Err(LinearError::CompositeModulus(4))
        );
    }

    #[test]
    fn agrees_with_backtracking() {
        let params = AlexanderParams::new(3, 2, 1, 2, 2);
        let x = alexander_mcb(&params).unwrap();
        for code in [
            "",
            "O1+ U2+ ; U1+ O2+",
            "O1+ U2+ O3+ U1+ O2+ U3+",
            "O1- U2+ O3- ; U1- O2+ U3-",
            "O1+ U1+ ; ",
        ] {
            let d = parse_gauss(code).unwrap();
            assert_eq!(
                linear_count(&d, &params).unwrap(),
                count_colorings(&x, &d) as u128,
                "{code}"
            );
        }
        let hopf =
            build_coloring_matrix(&parse_gauss("O1+ U2+ ; U1+ O2+").unwrap(), &params).unwrap();
        assert_eq!((hopf.rows().len(), hopf.cols()), (4, 4));
        assert_eq!(hopf.to_string().lines().count(), 4);
    }
}
