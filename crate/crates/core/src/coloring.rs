//! Colorings of diagrams by mc-biquandles.
//!
//! At every crossing the two right-hand semiarcs are determined by the two
//! left-hand ones through `(u, o) ↦ (u ▷̲ o, o ▷̄ u)` using the operations of
//! the crossing's class. That map is a bijection, so either side of a
//! crossing determines the other; the search exploits this by propagating
//! every assignment before branching again.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::algebra::{CrossingClass, Endomorphism, McBiquandle};
use crate::diagram::LinkDiagram;

/// Default cap on `n^semiarcs` for [`brute_force_colorings`].
pub const BRUTE_FORCE_LIMIT: u128 = 100_000_000;

/// Colors of all semiarcs, indexed by semiarc id.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring(pub Vec<usize>);

impl Coloring {
    pub fn colors(&self) -> &[usize] {
        &self.0
    }

    /// `f ∘ self`.
    pub fn compose(&self, f: &Endomorphism) -> Coloring {
        Coloring(self.0.iter().map(|&c| f.apply(c)).collect())
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", c + 1)?;
        }
        f.write_str(")")
    }
}

/// The set of all colorings of one diagram, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homset {
    pub order: usize,
    pub semiarcs: usize,
    pub colorings: Vec<Coloring>,
}

impl Homset {
    pub fn len(&self) -> usize {
        self.colorings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colorings.is_empty()
    }

    pub fn index_of(&self, coloring: &Coloring) -> Option<usize> {
        self.colorings.binary_search(coloring).ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("brute force would visit {candidates} assignments, above the limit {limit}")]
    TooLarge { candidates: u128, limit: u128 },
}

/// Whether `colors` satisfies the crossing relations of `diagram`.
pub fn is_coloring(x: &McBiquandle, diagram: &LinkDiagram, colors: &[usize]) -> bool {
    colors.len() == diagram.semiarc_count()
        && colors.iter().all(|&c| c < x.order())
        && diagram.crossings().iter().all(|c| {
            let (u, o) = c.left();
            let (u2, o2) = c.right();
            let (cu, co) = (colors[u.0], colors[o.0]);
            colors[u2.0] == x.under(c.class, cu, co) && colors[o2.0] == x.over(c.class, co, cu)
        })
}

/// All colorings, found by backtracking with propagation.
pub fn find_colorings(x: &McBiquandle, diagram: &LinkDiagram) -> Homset {
    let mut colorings = Vec::new();
    Search::new(x, diagram).run(&mut |c| colorings.push(Coloring(c.to_vec())));
    debug_assert!(colorings.windows(2).all(|w| w[0] < w[1]));
    Homset {
        order: x.order(),
        semiarcs: diagram.semiarc_count(),
        colorings,
    }
}

/// The counting invariant: the number of colorings.
pub fn count_colorings(x: &McBiquandle, diagram: &LinkDiagram) -> usize {
    let mut count = 0;
    Search::new(x, diagram).run(&mut |_| count += 1);
    count
}

/// Every assignment checked directly; fails above `limit` candidates.
pub fn brute_force_colorings(
    x: &McBiquandle,
    diagram: &LinkDiagram,
    limit: u128,
) -> Result<Vec<Coloring>, ColoringError> {
    let n = x.order();
    let k = diagram.semiarc_count();
    let candidates = (n as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if candidates > limit {
        return Err(ColoringError::TooLarge { candidates, limit });
    }
    let mut out = Vec::new();
    let mut colors = vec![0usize; k];
    loop {
        if is_coloring(x, diagram, &colors) {
            out.push(Coloring(colors.clone()));
        }
        // odometer, last position fastest
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            colors[i] += 1;
            if colors[i] < n {
                break;
            }
            colors[i] = 0;
        }
    }
}

const UNSET: usize = usize::MAX;

struct Search {
    n: usize,
    // per class: forward[u * n + o] = (u ▷̲ o, o ▷̄ u) and its inverse
    forward: [Vec<(usize, usize)>; 2],
    backward: [Vec<(usize, usize)>; 2],
    // (class index, left u, left o, right u, right o)
    crossings: Vec<(usize, usize, usize, usize, usize)>,
    touching: Vec<Vec<usize>>,
    colors: Vec<usize>,
}

fn class_index(c: CrossingClass) -> usize {
    match c {
        CrossingClass::Single => 0,
        CrossingClass::Multi => 1,
    }
}

impl Search {
    fn new(x: &McBiquandle, diagram: &LinkDiagram) -> Self {
        let n = x.order();
        let mut forward = [vec![(0, 0); n * n], vec![(0, 0); n * n]];
        let mut backward = [vec![(0, 0); n * n], vec![(0, 0); n * n]];
        for class in CrossingClass::ALL {
            let ci = class_index(class);
            for u in 0..n {
                for o in 0..n {
                    let image = (x.under(class, u, o), x.over(class, o, u));
                    forward[ci][u * n + o] = image;
                    backward[ci][image.0 * n + image.1] = (u, o);
                }
            }
        }
        let mut touching = vec![Vec::new(); diagram.semiarc_count()];
        let crossings = diagram
            .crossings()
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let (u, o) = c.left();
                let (u2, o2) = c.right();
                for s in [u, o, u2, o2] {
                    if !touching[s.0].contains(&i) {
                        touching[s.0].push(i);
                    }
                }
                (class_index(c.class), u.0, o.0, u2.0, o2.0)
            })
            .collect();
        Search {
            n,
            forward,
            backward,
            crossings,
            touching,
            colors: vec![UNSET; diagram.semiarc_count()],
        }
    }

    fn run(&mut self, emit: &mut dyn FnMut(&[usize])) {
        let mut trail = Vec::new();
        self.branch(0, &mut trail, emit);
    }

    fn branch(&mut self, from: usize, trail: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
        let Some(next) = (from..self.colors.len()).find(|&s| self.colors[s] == UNSET) else {
            emit(&self.colors);
            return;
        };
        for v in 0..self.n {
            let mark = trail.len();
            if self.assign(next, v, trail) {
                self.branch(next + 1, trail, emit);
            }
            for s in trail.drain(mark..) {
                self.colors[s] = UNSET;
            }
        }
    }

    /// Sets `semiarc` and everything it forces; false on a contradiction.
    fn assign(&mut self, semiarc: usize, value: usize, trail: &mut Vec<usize>) -> bool {
        let mut queue = vec![(semiarc, value)];
        while let Some((s, v)) = queue.pop() {
            match self.colors[s] {
                UNSET => {
                    self.colors[s] = v;
                    trail.push(s);
                }
                c if c == v => continue,
                _ => return false,
            }
            for &ci in &self.touching[s] {
                let (class, lu, lo, ru, ro) = self.crossings[ci];
                let c = &self.colors;
                let (forced, targets) = if c[lu] != UNSET && c[lo] != UNSET {
                    (self.forward[class][c[lu] * self.n + c[lo]], (ru, ro))
                } else if c[ru] != UNSET && c[ro] != UNSET {
                    (self.backward[class][c[ru] * self.n + c[ro]], (lu, lo))
                } else {
                    continue;
                };
                for (t, want) in [(targets.0, forced.0), (targets.1, forced.1)] {
                    match self.colors[t] {
                        UNSET => queue.push((t, want)),
                        have if have != want => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }
}
