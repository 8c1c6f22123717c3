//! Exhaustive enumeration of small mc-biquandles.
//!
//! Operation pairs are generated first: biquandles for the single-component
//! slot and biracks for the multi-component slot, each by backtracking over
//! table cells with the pair's own axioms checked on partial tables. Every
//! (biquandle, birack) combination is then filtered by the mixed exchange
//! laws. Both lists are sorted, so the output is ordered by the
//! concatenated table key.

use alloc::vec;
use alloc::vec::Vec;

use itertools::Itertools;
use thiserror::Error;

use super::{CrossingClass, McBiquandle, OperationTables, EXCHANGE_TRIPLES};

/// Largest order accepted without opting in.
pub const DEFAULT_ENUMERATION_ORDER: usize = 3;
/// Hard upper bound on the order.
pub const MAX_ENUMERATION_ORDER: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerateOptions {
    /// Emit only the lexicographically least member of each isomorphism class.
    pub modulo_isomorphism: bool,
    /// Orders above this are rejected; capped at [`MAX_ENUMERATION_ORDER`].
    pub max_order: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            modulo_isomorphism: false,
            max_order: DEFAULT_ENUMERATION_ORDER,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("order must be positive")]
    ZeroOrder,
    #[error("order {order} exceeds the enumeration bound {bound}")]
    OrderTooLarge { order: usize, bound: usize },
}

/// A deterministic stream of every validated mc-biquandle of one order.
pub struct McbEnumeration {
    order: usize,
    singles: Vec<Pair>,
    multis: Vec<Pair>,
    next: (usize, usize),
    perms: Option<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Pair {
    under: Vec<usize>,
    over: Vec<usize>,
}

pub fn enumerate_mcb(
    order: usize,
    opts: EnumerateOptions,
) -> Result<McbEnumeration, EnumerateError> {
    if order == 0 {
        return Err(EnumerateError::ZeroOrder);
    }
    let bound = opts.max_order.min(MAX_ENUMERATION_ORDER);
    if order > bound {
        return Err(EnumerateError::OrderTooLarge { order, bound });
    }
    let multis = operation_pairs(order);
    let singles: Vec<Pair> = multis
        .iter()
        .filter(|p| (0..order).all(|x| p.under[x * order + x] == p.over[x * order + x]))
        .cloned()
        .collect();
    let perms = opts
        .modulo_isomorphism
        .then(|| (0..order).permutations(order).collect());
    Ok(McbEnumeration {
        order,
        singles,
        multis,
        next: (0, 0),
        perms,
    })
}

impl Iterator for McbEnumeration {
    type Item = McBiquandle;

    fn next(&mut self) -> Option<McBiquandle> {
        while self.next.0 < self.singles.len() {
            let (i, j) = self.next;
            self.next = if j + 1 < self.multis.len() {
                (i, j + 1)
            } else {
                (i + 1, 0)
            };
            let (s, m) = (&self.singles[i], &self.multis[j]);
            let tables = OperationTables {
                order: self.order,
                tables: [
                    s.under.clone(),
                    s.over.clone(),
                    m.under.clone(),
                    m.over.clone(),
                ],
            };
            if !mixed_laws_hold(&tables) {
                continue;
            }
            if let Some(perms) = &self.perms {
                let key = tables.key();
                if perms.iter().any(|p| tables.relabel(p).key() < key) {
                    continue;
                }
            }
            return Some(McBiquandle(tables));
        }
        None
    }
}

fn mixed_laws_hold(t: &OperationTables) -> bool {
    let n = t.order();
    EXCHANGE_TRIPLES[1..4].iter().all(|&[j, k, l]| {
        let o = |c: CrossingClass, a, b| t.over(c, a, b);
        let u = |c: CrossingClass, a, b| t.under(c, a, b);
        (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| {
                    o(l, o(k, x, y), o(j, z, y)) == o(k, o(l, x, z), u(j, y, z))
                        && o(j, u(l, x, y), u(k, z, y)) == u(l, o(j, x, z), o(k, y, z))
                        && u(j, u(k, x, y), u(l, z, y)) == u(k, u(j, x, z), o(l, y, z))
                })
            })
        })
    })
}

const UNSET: usize = usize::MAX;

/// All biracks of order `n` (switch-invertible pairs satisfying the
/// exchange laws with one operation pair), sorted.
fn operation_pairs(n: usize) -> Vec<Pair> {
    let cells = n * n;
    let mut st = PairSearch {
        n,
        under: vec![UNSET; cells],
        over: vec![UNSET; cells],
        under_col_used: vec![false; cells],
        over_col_used: vec![false; cells],
        switch_used: vec![false; cells],
        out: Vec::new(),
    };
    st.fill(0);
    let mut out = st.out;
    out.sort();
    out
}

struct PairSearch {
    n: usize,
    under: Vec<usize>,
    over: Vec<usize>,
    // [y * n + v]: value v already used in column y
    under_col_used: Vec<bool>,
    over_col_used: Vec<bool>,
    // [a * n + b]: switch image (a, b) taken
    switch_used: Vec<bool>,
    out: Vec<Pair>,
}

impl PairSearch {
    // Cells are filled in the order U[0], O[0], U[1], O[1], … (row-major).
    fn fill(&mut self, step: usize) {
        let n = self.n;
        if step == 2 * n * n {
            self.out.push(Pair {
                under: self.under.clone(),
                over: self.over.clone(),
            });
            return;
        }
        let cell = step / 2;
        let is_over = step % 2 == 1;
        let (x, y) = (cell / n, cell % n);
        for v in 0..n {
            let used = if is_over {
                &mut self.over_col_used
            } else {
                &mut self.under_col_used
            };
            if used[y * n + v] {
                continue;
            }
            used[y * n + v] = true;
            if is_over {
                self.over[cell] = v;
            } else {
                self.under[cell] = v;
            }
            let switch = self.switch_slot(x, y, is_over);
            let switch_ok = match switch {
                Some(s) if self.switch_used[s] => false,
                Some(s) => {
                    self.switch_used[s] = true;
                    true
                }
                None => true,
            };
            if switch_ok && self.laws_consistent() {
                self.fill(step + 1);
            }
            if switch_ok {
                if let Some(s) = switch {
                    self.switch_used[s] = false;
                }
            }
            let used = if is_over {
                &mut self.over_col_used
            } else {
                &mut self.under_col_used
            };
            used[y * n + v] = false;
            if is_over {
                self.over[cell] = UNSET;
            } else {
                self.under[cell] = UNSET;
            }
        }
    }

    /// The switch image `(y' ▷̄ x', x' ▷̲ y')` completed by setting this cell, if any.
    fn switch_slot(&self, x: usize, y: usize, is_over: bool) -> Option<usize> {
        let n = self.n;
        // S(a, b) = (O[b][a], U[a][b])
        let (a, b) = if is_over { (y, x) } else { (x, y) };
        let o = self.over[b * n + a];
        let u = self.under[a * n + b];
        (o != UNSET && u != UNSET).then(|| o * n + u)
    }

    fn laws_consistent(&self) -> bool {
        let n = self.n;
        let u = |a: usize, b: usize| {
            if a == UNSET || b == UNSET {
                UNSET
            } else {
                self.under[a * n + b]
            }
        };
        let o = |a: usize, b: usize| {
            if a == UNSET || b == UNSET {
                UNSET
            } else {
                self.over[a * n + b]
            }
        };
        let differ = |l: usize, r: usize| l != UNSET && r != UNSET && l != r;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if differ(o(o(x, y), o(z, y)), o(o(x, z), u(y, z)))
                        || differ(o(u(x, y), u(z, y)), u(o(x, z), o(y, z)))
                        || differ(u(u(x, y), u(z, y)), u(u(x, z), o(y, z)))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::check_axioms;

    #[test]
    fn order_one_has_exactly_one() {
        let all: Vec<_> = enumerate_mcb(1, EnumerateOptions::default())
            .unwrap()
            .collect();
        assert_eq!(all, vec![McBiquandle::trivial(1).unwrap()]);
    }

    #[test]
    fn order_two_matches_brute_force_over_all_tables() {
        let mut brute = Vec::new();
        for code in 0u32..(1 << 16) {
            let bits: Vec<usize> = (0..16).rev().map(|i| ((code >> i) & 1) as usize).collect();
            let tables = OperationTables::new(
                2,
                [
                    bits[0..4].to_vec(),
                    bits[4..8].to_vec(),
                    bits[8..12].to_vec(),
                    bits[12..16].to_vec(),
                ],
            )
            .unwrap();
            if check_axioms(&tables).passed() {
                brute.push(tables);
            }
        }
        let listed: Vec<OperationTables> = enumerate_mcb(2, EnumerateOptions::default())
            .unwrap()
            .map(McBiquandle::into_tables)
            .collect();
        assert_eq!(listed, brute);
        assert_eq!(listed.len(), 8);
    }

    #[test]
    fn order_three_counts() {
        let all: Vec<_> = enumerate_mcb(3, EnumerateOptions::default())
            .unwrap()
            .collect();
        assert_eq!(all.len(), 456);
        assert!(all.windows(2).all(|w| w[0].key() < w[1].key()));
        assert!(all.iter().all(|x| check_axioms(x).passed()));
    }

    #[test]
    fn order_three_up_to_isomorphism() {
        let opts = EnumerateOptions {
            modulo_isomorphism: true,
            ..Default::default()
        };
        let reps: Vec<_> = enumerate_mcb(3, opts).unwrap().collect();
        assert_eq!(reps.len(), 163);
        let perms: Vec<Vec<usize>> = (0..3).permutations(3).collect();
        for (i, a) in reps.iter().enumerate() {
            assert!(check_axioms(a).passed());
            for b in &reps[i + 1..] {
                assert!(perms.iter().all(|p| a.relabel(p) != *b));
            }
        }
    }

    #[test]
    fn bound_is_enforced() {
        assert_eq!(
            enumerate_mcb(4, EnumerateOptions::default()).err(),
            Some(EnumerateError::OrderTooLarge { order: 4, bound: 3 })
        );
        let opts = EnumerateOptions {
            max_order: 9,
            ..Default::default()
        };
        assert_eq!(
            enumerate_mcb(5, opts).err(),
            Some(EnumerateError::OrderTooLarge { order: 5, bound: 4 })
        );
    }
}
