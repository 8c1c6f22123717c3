use alloc::vec::Vec;
use core::fmt;

use super::{LinkDiagram, SemiarcId};
use crate::algebra::CrossingClass;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationKind {
    /// `result = left ▷̲ right`
    Under,
    /// `result = left ▷̄ right`
    Over,
}

/// One defining relation `result = left ⋄ right` of the fundamental
/// mc-biquandle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Relation {
    pub crossing: u32,
    pub class: CrossingClass,
    pub kind: RelationKind,
    pub result: SemiarcId,
    pub left: SemiarcId,
    pub right: SemiarcId,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.kind {
            RelationKind::Under => "▷̲",
            RelationKind::Over => "▷̄",
        };
        let class = match self.class {
            CrossingClass::Single => "ˢ",
            CrossingClass::Multi => "ᵐ",
        };
        write!(
            f,
            "{} = {} {op}{class} {}",
            self.result, self.left, self.right
        )
    }
}

/// Generators are all semiarcs; relations come two per crossing, in
/// crossing-id order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<SemiarcId>,
    pub relations: Vec<Relation>,
}

pub fn extract_presentation(diagram: &LinkDiagram) -> Presentation {
    let generators = (0..diagram.semiarc_count()).map(SemiarcId).collect();
    let mut relations = Vec::with_capacity(2 * diagram.crossings().len());
    for c in diagram.crossings() {
        let (u, o) = c.left();
        let (u2, o2) = c.right();
        relations.push(Relation {
            crossing: c.id,
            class: c.class,
            kind: RelationKind::Under,
            result: u2,
            left: u,
            right: o,
        });
        relations.push(Relation {
            crossing: c.id,
            class: c.class,
            kind: RelationKind::Over,
            result: o2,
            left: o,
            right: u,
        });
    }
    Presentation {
        generators,
        relations,
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("generators:")?;
        for g in &self.generators {
            write!(f, " {g}")?;
        }
        for r in &self.relations {
            write!(f, "\n{r}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_gauss;
    use alloc::string::ToString;

    #[test]
    fn hopf_presentation() {
        let d = parse_gauss("O1+ U2+ ; U1+ O2+").unwrap();
        let p = extract_presentation(&d);
        assert_eq!(p.relations.len(), 4);
        assert_eq!(
            p.to_string(),
            "generators: x1 x2 x3 x4\n\
             x4 = x3 ▷̲ᵐ x2\n\
             x1 = x2 ▷̄ᵐ x3\n\
             x1 = x2 ▷̲ᵐ x3\n\
             x4 = x3 ▷̄ᵐ x2"
        );
    }
}
