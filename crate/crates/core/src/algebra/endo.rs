use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

use super::{McBiquandle, Op, OperationTables};

/// A self-map of `{1, …, n}` written `[f(1), …, f(n)]`; stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Endomorphism(Vec<usize>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EndoParseError {
    #[error("expected a bracketed list like [1,2,3], got {0:?}")]
    Syntax(alloc::string::String),
    #[error("image {value} is outside 1..={order}")]
    OutOfRange { value: usize, order: usize },
}

impl Endomorphism {
    /// Wraps 0-based images.
    pub fn new(images: Vec<usize>) -> Self {
        Endomorphism(images)
    }

    pub fn identity(order: usize) -> Self {
        Endomorphism((0..order).collect())
    }

    /// From the 1-based notation `[f(1), …, f(n)]`.
    pub fn from_one_based(images: &[usize]) -> Self {
        Endomorphism(images.iter().map(|&v| v - 1).collect())
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn after(&self, other: &Endomorphism) -> Endomorphism {
        Endomorphism(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Whether the map preserves all four operations of `x`.
    pub fn is_endomorphism_of(&self, x: &OperationTables) -> bool {
        let n = x.order();
        self.0.len() == n
            && self.0.iter().all(|&v| v < n)
            && Op::ALL.iter().all(|&op| {
                (0..n).all(|a| {
                    (0..n).all(|b| self.0[x.op(op, a, b)] == x.op(op, self.0[a], self.0[b]))
                })
            })
    }

    /// Parses `[1,2,3]` (brackets optional, commas or whitespace between entries).
    pub fn parse(text: &str, order: usize) -> Result<Self, EndoParseError> {
        let inner = text.trim();
        let inner = inner.strip_prefix('[').unwrap_or(inner);
        let inner = inner.strip_suffix(']').unwrap_or(inner);
        let mut images = Vec::new();
        for tok in inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
        {
            let v: usize = tok
                .parse()
                .map_err(|_| EndoParseError::Syntax(text.into()))?;
            if v == 0 || v > order {
                return Err(EndoParseError::OutOfRange { value: v, order });
            }
            images.push(v - 1);
        }
        if images.len() != order {
            return Err(EndoParseError::Syntax(text.into()));
        }
        Ok(Endomorphism(images))
    }
}

impl fmt::Display for Endomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str("]")
    }
}

impl FromStr for Endomorphism {
    type Err = EndoParseError;

    /// Parses with the order taken from the number of entries.
    fn from_str(s: &str) -> Result<Self, EndoParseError> {
        let count = s
            .trim()
            .trim_start_matches('[')
            .trim_end_matches(']')
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .count();
        Endomorphism::parse(s, count)
    }
}

/// All endomorphisms of `x`, sorted lexicographically by image list.
///
/// Backtracks over `f(0), f(1), …`; each homomorphism condition
/// `f(a ⋄ b) = f(a) ⋄ f(b)` is checked as soon as `a`, `b` and `a ⋄ b`
/// all have images.
pub fn endomorphisms(x: &McBiquandle) -> Vec<Endomorphism> {
    let n = x.order();
    // constraints[i]: (op, a, b) whose largest involved element is i
    let mut constraints: Vec<Vec<(Op, usize, usize)>> = vec![Vec::new(); n];
    for op in Op::ALL {
        for a in 0..n {
            for b in 0..n {
                let c = x.op(op, a, b);
                constraints[a.max(b).max(c)].push((op, a, b));
            }
        }
    }

    let mut out = Vec::new();
    let mut image = vec![0usize; n];
    search(x, &constraints, &mut image, 0, &mut out);
    out
}

fn search(
    x: &McBiquandle,
    constraints: &[Vec<(Op, usize, usize)>],
    image: &mut [usize],
    i: usize,
    out: &mut Vec<Endomorphism>,
) {
    let n = image.len();
    if i == n {
        out.push(Endomorphism(image.to_vec()));
        return;
    }
    for v in 0..n {
        image[i] = v;
        let ok = constraints[i]
            .iter()
            .all(|&(op, a, b)| image[x.op(op, a, b)] == x.op(op, image[a], image[b]));
        if ok {
            search(x, constraints, image, i + 1, out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures;
    use alloc::string::ToString;

    fn brute_force(x: &McBiquandle) -> Vec<Endomorphism> {
        let n = x.order();
        let total = n.pow(n as u32);
        let mut out = Vec::new();
        for code in 0..total {
            let mut c = code;
            let mut images = vec![0; n];
            for slot in images.iter_mut().rev() {
                *slot = c % n;
                c /= n;
            }
            let f = Endomorphism(images);
            if f.is_endomorphism_of(x) {
                out.push(f);
            }
        }
        out
    }

    #[test]
    fn ex33_contains_listed_maps() {
        let x = fixtures::ex26().validate().unwrap();
        let endos = endomorphisms(&x);
        for f in [[1, 2, 3], [2, 2, 2], [3, 2, 1]] {
            assert!(endos.contains(&Endomorphism::from_one_based(&f)));
        }
        assert_eq!(endos, brute_force(&x));
    }

    #[test]
    fn ex34_has_21() {
        let x = fixtures::ex34().validate().unwrap();
        let endos = endomorphisms(&x);
        assert_eq!(endos.len(), 21);
        assert!(endos.contains(&Endomorphism::from_one_based(&[3, 3, 3, 4, 5])));
        assert_eq!(endos, brute_force(&x));
    }

    #[test]
    fn ex38_exact_list() {
        let x = fixtures::ex38().validate().unwrap();
        let expected: Vec<Endomorphism> = [
            [1, 2, 3, 4],
            [1, 2, 4, 3],
            [2, 1, 3, 4],
            [2, 1, 4, 3],
            [3, 3, 3, 3],
            [3, 3, 4, 4],
            [4, 4, 3, 3],
            [4, 4, 4, 4],
        ]
        .iter()
        .map(|f| Endomorphism::from_one_based(f))
        .collect();
        assert_eq!(endomorphisms(&x), expected);
    }

    #[test]
    fn closed_under_composition() {
        for x in [fixtures::ex26(), fixtures::ex34(), fixtures::ex38()] {
            let x = x.validate().unwrap();
            let endos = endomorphisms(&x);
            assert!(endos.contains(&Endomorphism::identity(x.order())));
            for f in &endos {
                for g in &endos {
                    assert!(endos.binary_search(&f.after(g)).is_ok());
                }
            }
        }
    }

    #[test]
    fn notation_round_trip() {
        let f = Endomorphism::from_one_based(&[3, 3, 3, 4, 5]);
        assert_eq!(f.to_string(), "[3,3,3,4,5]");
        assert_eq!("[3,3,3,4,5]".parse::<Endomorphism>().unwrap(), f);
        assert_eq!(Endomorphism::parse("3 3 3 4 5", 5).unwrap(), f);
        assert!(Endomorphism::parse("[1,6]", 2).is_err());
        assert!(Endomorphism::parse("[1,2]", 3).is_err());
    }
}
