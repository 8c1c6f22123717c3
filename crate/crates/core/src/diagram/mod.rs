//! Oriented link diagrams given by signed Gauss codes.
//!
//! A diagram is a list of components, each a cyclic sequence of crossing
//! passages. Virtual crossings are not recorded at all. Semiarcs are
//! numbered component by component; within a component with passages
//! `p_0, …, p_{k-1}`, semiarc `i` is the one leaving `p_i`. A component
//! without passages is a free loop and carries a single semiarc.

mod gauss;
mod pd;
mod presentation;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::algebra::CrossingClass;

pub use gauss::parse_gauss;
pub use pd::parse_pd;
pub use presentation::{extract_presentation, Presentation, Relation, RelationKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StrandRole {
    Over,
    Under,
}

impl StrandRole {
    fn other(self) -> StrandRole {
        match self {
            StrandRole::Over => StrandRole::Under,
            StrandRole::Under => StrandRole::Over,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// Index of a semiarc; displayed 1-based as `x1, x2, …`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SemiarcId(pub usize);

impl fmt::Display for SemiarcId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0 + 1)
    }
}

/// One Gauss-code token such as `O3-`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Passage {
    pub crossing: u32,
    pub role: StrandRole,
    pub sign: Sign,
}

impl fmt::Display for Passage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let role = match self.role {
            StrandRole::Over => 'O',
            StrandRole::Under => 'U',
        };
        let sign = match self.sign {
            Sign::Positive => '+',
            Sign::Negative => '-',
        };
        write!(f, "{role}{}{sign}", self.crossing)
    }
}

/// A classical crossing with its four incident semiarcs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    pub id: u32,
    pub sign: Sign,
    pub class: CrossingClass,
    pub under_in: SemiarcId,
    pub over_in: SemiarcId,
    pub under_out: SemiarcId,
    pub over_out: SemiarcId,
    pub under_component: usize,
    pub over_component: usize,
}

impl Crossing {
    /// The two semiarcs to the left of the crossing when both strands are
    /// drawn pointing upward, as `(under, over)`.
    ///
    /// Colorings are constrained by `right = (u ▷̲ o, o ▷̄ u)` where
    /// `(u, o) = left`.
    pub fn left(&self) -> (SemiarcId, SemiarcId) {
        match self.sign {
            Sign::Positive => (self.under_out, self.over_in),
            Sign::Negative => (self.under_in, self.over_out),
        }
    }

    /// The two semiarcs to the right, as `(under, over)`.
    pub fn right(&self) -> (SemiarcId, SemiarcId) {
        match self.sign {
            Sign::Positive => (self.under_in, self.over_out),
            Sign::Negative => (self.under_out, self.over_in),
        }
    }

    pub fn semiarcs(&self) -> [SemiarcId; 4] {
        [self.under_in, self.over_in, self.under_out, self.over_out]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("crossing {id} appears {count} time(s); every crossing needs exactly one over and one under passage")]
    Unpaired { id: u32, count: usize },
    #[error("crossing {id} has different signs at its two passages")]
    SignMismatch { id: u32 },
    #[error("crossing {id} has two {role:?} passages")]
    DuplicateRole { id: u32, role: StrandRole },
    #[error("no crossing with id {0}")]
    UnknownCrossing(u32),
    #[error("no component with index {0}")]
    UnknownComponent(usize),
    #[error("PD edge label {label} is used {count} time(s), expected 2")]
    PdEdgeCount { label: u32, count: usize },
    #[error("PD entry {entry}: {message}")]
    PdOrientation { entry: usize, message: String },
    #[error("PD code is ambiguous: orientation of the component containing edge {label} cannot be inferred")]
    PdAmbiguous { label: u32 },
    #[error("PD code has no crossings")]
    PdEmpty,
}

/// A validated oriented link diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkDiagram {
    components: Vec<Vec<Passage>>,
    crossings: Vec<Crossing>,
    semiarc_base: Vec<usize>,
    semiarc_count: usize,
}

impl LinkDiagram {
    /// Validates the passage pairing and traces semiarcs and crossings.
    pub fn new(components: Vec<Vec<Passage>>) -> Result<Self, DiagramError> {
        // id -> [(component, position, passage)]
        let mut seen: BTreeMap<u32, Vec<(usize, usize, Passage)>> = BTreeMap::new();
        for (c, comp) in components.iter().enumerate() {
            for (i, p) in comp.iter().enumerate() {
                seen.entry(p.crossing).or_default().push((c, i, *p));
            }
        }

        let mut semiarc_base = Vec::with_capacity(components.len());
        let mut next = 0;
        for comp in &components {
            semiarc_base.push(next);
            next += comp.len().max(1);
        }
        let incoming = |c: usize, i: usize| {
            let k = components[c].len();
            SemiarcId(semiarc_base[c] + (i + k - 1) % k)
        };
        let outgoing = |c: usize, i: usize| SemiarcId(semiarc_base[c] + i);

        let mut crossings = Vec::with_capacity(seen.len());
        for (&id, uses) in &seen {
            if uses.len() != 2 {
                return Err(DiagramError::Unpaired {
                    id,
                    count: uses.len(),
                });
            }
            let (a, b) = (uses[0], uses[1]);
            if a.2.sign != b.2.sign {
                return Err(DiagramError::SignMismatch { id });
            }
            if a.2.role == b.2.role {
                return Err(DiagramError::DuplicateRole { id, role: a.2.role });
            }
            let (over, under) = if a.2.role == StrandRole::Over {
                (a, b)
            } else {
                (b, a)
            };
            crossings.push(Crossing {
                id,
                sign: a.2.sign,
                class: if over.0 == under.0 {
                    CrossingClass::Single
                } else {
                    CrossingClass::Multi
                },
                under_in: incoming(under.0, under.1),
                over_in: incoming(over.0, over.1),
                under_out: outgoing(under.0, under.1),
                over_out: outgoing(over.0, over.1),
                under_component: under.0,
                over_component: over.0,
            });
        }

        Ok(LinkDiagram {
            components,
            crossings,
            semiarc_base,
            semiarc_count: next,
        })
    }

    pub fn components(&self) -> &[Vec<Passage>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Crossings sorted by id.
    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing(&self, id: u32) -> Option<&Crossing> {
        self.crossings
            .binary_search_by_key(&id, |c| c.id)
            .ok()
            .map(|i| &self.crossings[i])
    }

    pub fn semiarc_count(&self) -> usize {
        self.semiarc_count
    }

    /// Semiarc ids of one component, in traversal order.
    pub fn component_semiarcs(&self, component: usize) -> core::ops::Range<usize> {
        let base = self.semiarc_base[component];
        base..base + self.components[component].len().max(1)
    }

    /// Crossing id to class (`s` iff both passages lie on one component).
    pub fn classify(&self) -> BTreeMap<u32, CrossingClass> {
        self.crossings.iter().map(|c| (c.id, c.class)).collect()
    }

    /// Makes a classical crossing virtual by deleting both of its passages.
    pub fn virtualize(&self, id: u32) -> Result<LinkDiagram, DiagramError> {
        self.require(id)?;
        let components = self
            .components
            .iter()
            .map(|comp| comp.iter().copied().filter(|p| p.crossing != id).collect())
            .collect();
        LinkDiagram::new(components)
    }

    /// Swaps over and under at a crossing, which also reverses its sign.
    pub fn crossing_change(&self, id: u32) -> Result<LinkDiagram, DiagramError> {
        self.require(id)?;
        let components = self
            .components
            .iter()
            .map(|comp| {
                comp.iter()
                    .map(|&p| {
                        if p.crossing == id {
                            Passage {
                                crossing: id,
                                role: p.role.other(),
                                sign: p.sign.flip(),
                            }
                        } else {
                            p
                        }
                    })
                    .collect()
            })
            .collect();
        LinkDiagram::new(components)
    }

    /// Reverses the orientation of one component. Crossings between that
    /// component and another change sign; self-crossings keep theirs.
    pub fn reverse_component(&self, component: usize) -> Result<LinkDiagram, DiagramError> {
        if component >= self.components.len() {
            return Err(DiagramError::UnknownComponent(component));
        }
        let flip: Vec<u32> = self
            .crossings
            .iter()
            .filter(|c| {
                c.class == CrossingClass::Multi
                    && (c.under_component == component || c.over_component == component)
            })
            .map(|c| c.id)
            .collect();
        let components = self
            .components
            .iter()
            .enumerate()
            .map(|(i, comp)| {
                let mut comp: Vec<Passage> = comp
                    .iter()
                    .map(|&p| {
                        if flip.contains(&p.crossing) {
                            Passage {
                                sign: p.sign.flip(),
                                ..p
                            }
                        } else {
                            p
                        }
                    })
                    .collect();
                if i == component {
                    comp.reverse();
                }
                comp
            })
            .collect();
        LinkDiagram::new(components)
    }

    fn require(&self, id: u32) -> Result<(), DiagramError> {
        self.crossing(id)
            .map(|_| ())
            .ok_or(DiagramError::UnknownCrossing(id))
    }
}

/// Writes the signed Gauss code, components separated by ` ; `.
impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (c, comp) in self.components.iter().enumerate() {
            if c > 0 {
                f.write_str(" ; ")?;
            }
            for (i, p) in comp.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use CrossingClass::{Multi, Single};

    const HOPF: &str = "O1+ U2+ ; U1+ O2+";
    const TREFOIL: &str = "O1+ U2+ O3+ U1+ O2+ U3+";

    #[test]
    fn hopf_link() {
        let d = parse_gauss(HOPF).unwrap();
        assert_eq!(d.component_count(), 2);
        assert_eq!(d.crossings().len(), 2);
        assert_eq!(d.semiarc_count(), 4);
        assert_eq!(d.classify(), [(1, Multi), (2, Multi)].into_iter().collect());
    }

    #[test]
    fn trefoil() {
        let d = parse_gauss(TREFOIL).unwrap();
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.semiarc_count(), 6);
        assert!(d.classify().values().all(|&c| c == Single));
        let c1 = d.crossing(1).unwrap();
        assert_eq!((c1.over_in, c1.over_out), (SemiarcId(5), SemiarcId(0)));
        assert_eq!((c1.under_in, c1.under_out), (SemiarcId(2), SemiarcId(3)));
    }

    #[test]
    fn kinked_unknot_and_free_loop() {
        let d = parse_gauss("O1+ U1+ ; ").unwrap();
        assert_eq!(d.component_count(), 2);
        assert!(d.components()[1].is_empty());
        assert_eq!(d.semiarc_count(), 3);
        assert_eq!(d.component_semiarcs(1), 2..3);
    }

    #[test]
    fn trefoil_plus_kink_classes() {
        let d = parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+ ; U4- O4-").unwrap();
        assert!(d.classify().values().all(|&c| c == Single));
    }

    #[test]
    fn display_round_trip() {
        for code in [HOPF, TREFOIL, "O1+ U1+ ; ", "", " ; ; "] {
            let d = parse_gauss(code).unwrap();
            assert_eq!(parse_gauss(&d.to_string()).unwrap(), d);
        }
        assert_eq!(parse_gauss(HOPF).unwrap().to_string(), HOPF);
    }

    #[test]
    fn virtualize_examples() {
        let hopf = parse_gauss(HOPF).unwrap();
        assert_eq!(hopf.virtualize(1).unwrap().crossings().len(), 1);
        let t = parse_gauss(TREFOIL).unwrap().virtualize(2).unwrap();
        assert_eq!((t.component_count(), t.crossings().len()), (1, 2));
        assert_eq!(hopf.virtualize(7), Err(DiagramError::UnknownCrossing(7)));

        let mut d = parse_gauss("O1+ U2- O3+ ; U1+ O2- U3+ ; ").unwrap();
        for id in [1, 2, 3] {
            d = d.virtualize(id).unwrap();
        }
        assert_eq!(d.component_count(), 3);
        assert!(d.crossings().is_empty());
        assert_eq!(d.semiarc_count(), 3);
    }

    #[test]
    fn crossing_change_and_reverse() {
        let hopf = parse_gauss(HOPF).unwrap();
        let changed = hopf.crossing_change(1).unwrap();
        assert_eq!(changed.to_string(), "U1- U2+ ; O1- O2+");
        let reversed = hopf.reverse_component(1).unwrap();
        assert_eq!(reversed.to_string(), "O1- U2- ; O2- U1-");
        let t = parse_gauss(TREFOIL).unwrap().reverse_component(0).unwrap();
        assert!(t.crossings().iter().all(|c| c.sign == Sign::Positive));
    }

    #[test]
    fn left_and_right_slots() {
        let d = parse_gauss("O1+ U2- ; U1+ O2-").unwrap();
        let pos = d.crossing(1).unwrap();
        assert_eq!(pos.left(), (pos.under_out, pos.over_in));
        assert_eq!(pos.right(), (pos.under_in, pos.over_out));
        let neg = d.crossing(2).unwrap();
        assert_eq!(neg.left(), (neg.under_in, neg.over_out));
        assert_eq!(neg.right(), (neg.under_out, neg.over_in));
    }
}
