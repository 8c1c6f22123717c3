//! Planar diagram codes.
//!
//! Each entry `X[a,b,c,d]` lists the edge labels around a crossing
//! counterclockwise, starting from the incoming under edge, so the under
//! strand runs `a → c`. Labels are assumed consecutive along each oriented
//! component (wrapping at the end), which fixes the orientation of every
//! strand except possibly on two-edge components. Those are settled by
//! requiring each edge to start at one crossing and end at another.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{DiagramError, LinkDiagram, Passage, Sign, StrandRole};

/// Parses `X[4,1,3,2], X[2,3,1,4]`; parentheses, an outer `PD[…]` and
/// arbitrary separators are accepted.
///
/// Crossing ids are the 1-based positions of the entries. Components are
/// ordered by their smallest label and traversed from it, so semiarc `i`
/// of a component is its `i`-th smallest edge label.
pub fn parse_pd(text: &str) -> Result<LinkDiagram, DiagramError> {
    let entries = tokenize(text)?;
    if entries.is_empty() {
        return Err(DiagramError::PdEmpty);
    }

    let mut uses: BTreeMap<u32, usize> = BTreeMap::new();
    for e in &entries {
        for &l in e {
            *uses.entry(l).or_default() += 1;
        }
    }
    if let Some((&label, &count)) = uses.iter().find(|(_, &c)| c != 2) {
        return Err(DiagramError::PdEdgeCount { label, count });
    }

    // Components: strands a–c and b–d join labels.
    let labels: Vec<u32> = uses.keys().copied().collect();
    let index = |l: u32| labels.binary_search(&l).expect("known label");
    let mut parent: Vec<usize> = (0..labels.len()).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for e in &entries {
        for (p, q) in [(e[0], e[2]), (e[1], e[3])] {
            let (rp, rq) = (find(&mut parent, index(p)), find(&mut parent, index(q)));
            parent[rp] = rq;
        }
    }
    let mut groups: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
    for &l in &labels {
        let root = find(&mut parent, index(l));
        groups.entry(root).or_default().push(l);
    }
    let mut components: Vec<Vec<u32>> = groups.into_values().collect();
    components.sort();
    let mut succ: BTreeMap<u32, u32> = BTreeMap::new();
    for comp in &components {
        for (i, &l) in comp.iter().enumerate() {
            succ.insert(l, comp[(i + 1) % comp.len()]);
        }
    }

    // Orientation of each over strand: Some(true) for b → d.
    let mut over_forward: Vec<Option<bool>> = vec![None; entries.len()];
    let mut starts: BTreeSet<u32> = BTreeSet::new();
    let mut ends: BTreeSet<u32> = BTreeSet::new();
    let mark =
        |starts: &mut BTreeSet<u32>, ends: &mut BTreeSet<u32>, i: usize, from: u32, to: u32| {
            if !ends.insert(from) || !starts.insert(to) {
                return Err(DiagramError::PdOrientation {
                    entry: i + 1,
                    message: format!("edges {from} and {to} cannot be oriented consistently"),
                });
            }
            Ok(())
        };
    for (i, &[a, b, c, d]) in entries.iter().enumerate() {
        if succ[&a] != c {
            return Err(DiagramError::PdOrientation {
                entry: i + 1,
                message: format!("under strand {a} → {c} is not consecutive"),
            });
        }
        mark(&mut starts, &mut ends, i, a, c)?;
        match (succ[&b] == d, succ[&d] == b) {
            (true, false) => over_forward[i] = Some(true),
            (false, true) => over_forward[i] = Some(false),
            (true, true) => {}
            (false, false) => {
                return Err(DiagramError::PdOrientation {
                    entry: i + 1,
                    message: format!("over strand {b}–{d} is not consecutive"),
                })
            }
        }
        if let Some(fwd) = over_forward[i] {
            let (from, to) = if fwd { (b, d) } else { (d, b) };
            mark(&mut starts, &mut ends, i, from, to)?;
        }
    }
    loop {
        let mut progress = false;
        let mut pending = None;
        for (i, e) in entries.iter().enumerate() {
            if over_forward[i].is_some() {
                continue;
            }
            let (b, d) = (e[1], e[3]);
            let forward_ok = !ends.contains(&b) && !starts.contains(&d);
            let backward_ok = !ends.contains(&d) && !starts.contains(&b);
            let fwd = match (forward_ok, backward_ok) {
                (true, false) => true,
                (false, true) => false,
                (false, false) => {
                    return Err(DiagramError::PdOrientation {
                        entry: i + 1,
                        message: format!("over strand {b}–{d} cannot be oriented consistently"),
                    })
                }
                (true, true) => {
                    pending.get_or_insert(b);
                    continue;
                }
            };
            over_forward[i] = Some(fwd);
            let (from, to) = if fwd { (b, d) } else { (d, b) };
            mark(&mut starts, &mut ends, i, from, to)?;
            progress = true;
        }
        match (pending, progress) {
            (None, _) => break,
            (Some(_), true) => continue,
            (Some(label), false) => return Err(DiagramError::PdAmbiguous { label }),
        }
    }

    // Passage at the tail of each edge.
    let mut tail: BTreeMap<u32, Passage> = BTreeMap::new();
    for (i, (&[_, b, c, d], fwd)) in entries.iter().zip(&over_forward).enumerate() {
        let fwd = fwd.expect("resolved");
        let crossing = i as u32 + 1;
        let sign = if fwd { Sign::Negative } else { Sign::Positive };
        tail.insert(
            c,
            Passage {
                crossing,
                role: StrandRole::Under,
                sign,
            },
        );
        tail.insert(
            if fwd { d } else { b },
            Passage {
                crossing,
                role: StrandRole::Over,
                sign,
            },
        );
    }
    let passages = components
        .iter()
        .map(|comp| comp.iter().map(|l| tail[l]).collect())
        .collect();
    LinkDiagram::new(passages)
}

fn tokenize(text: &str) -> Result<Vec<[u32; 4]>, DiagramError> {
    let body = text.trim();
    let body = body
        .strip_prefix("PD")
        .map(|rest| rest.trim_start())
        .and_then(|rest| rest.strip_prefix('[').or_else(|| rest.strip_prefix('(')))
        .and_then(|rest| {
            rest.trim_end()
                .strip_suffix(']')
                .or_else(|| rest.trim_end().strip_suffix(')'))
        })
        .unwrap_or(body);

    let syntax = |message: &str| DiagramError::Syntax {
        line: 1,
        column: 0,
        message: message.into(),
    };
    let mut out = Vec::new();
    let mut rest = body;
    loop {
        rest = rest.trim_start_matches(|c: char| c.is_whitespace() || c == ',');
        if rest.is_empty() {
            break;
        }
        let after_x = rest
            .strip_prefix('X')
            .ok_or_else(|| syntax(&format!("expected 'X' at {:?}", head(rest))))?
            .trim_start();
        let (close, inner_start) = match after_x.chars().next() {
            Some('[') => (']', &after_x[1..]),
            Some('(') => (')', &after_x[1..]),
            _ => {
                return Err(syntax(&format!(
                    "expected '[' or '(' at {:?}",
                    head(after_x)
                )))
            }
        };
        let end = inner_start
            .find(close)
            .ok_or_else(|| syntax(&format!("unterminated entry at {:?}", head(rest))))?;
        let labels: Vec<u32> = inner_start[..end]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<u32>()
                    .map_err(|_| syntax(&format!("bad label {s:?}")))
            })
            .collect::<Result<_, _>>()?;
        let entry: [u32; 4] = labels.try_into().map_err(|_| {
            syntax(&format!(
                "entry {:?} needs four labels",
                &inner_start[..end]
            ))
        })?;
        out.push(entry);
        rest = &inner_start[end + 1..];
    }
    Ok(out)
}

fn head(s: &str) -> &str {
    match s.char_indices().nth(12) {
        Some((i, _)) => &s[..i],
        None => s,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CrossingClass;
    use crate::diagram::parse_gauss;
    use alloc::string::ToString;

    #[test]
    fn hopf_from_pd() {
        let d = parse_pd("X[4,1,3,2], X[2,3,1,4]").unwrap();
        assert_eq!(d, parse_gauss("U2- O1- ; U1- O2-").unwrap());
        assert_eq!(parse_pd("PD[X(4,1,3,2) X(2,3,1,4)]").unwrap(), d);
    }

    #[test]
    fn trefoil_from_pd() {
        let d = parse_pd("X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]").unwrap();
        assert_eq!(d.to_string(), "O2+ U1+ O3+ U2+ O1+ U3+");
        let d = parse_pd("X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]").unwrap();
        assert!(d.crossings().iter().all(|c| c.sign == Sign::Negative));
    }

    #[test]
    fn whitehead_classes() {
        let d = parse_pd("X[6,1,7,2], X[10,7,5,8], X[4,5,1,6], X[2,10,3,9], X[8,4,9,3]").unwrap();
        let classes = d.classify();
        let singles = classes
            .values()
            .filter(|&&c| c == CrossingClass::Single)
            .count();
        assert_eq!((d.component_count(), singles), (2, 1));
    }

    #[test]
    fn errors() {
        assert_eq!(parse_pd(""), Err(DiagramError::PdEmpty));
        assert_eq!(
            parse_pd("X[1,2,3,4], X[1,2,3,4], X[1,5,6,7]"),
            Err(DiagramError::PdEdgeCount { label: 1, count: 3 })
        );
        assert!(matches!(
            parse_pd("X[1,2,3]"),
            Err(DiagramError::Syntax { .. })
        ));
        assert!(matches!(
            parse_pd("Y[1,2,3,4]"),
            Err(DiagramError::Syntax { .. })
        ));
        assert!(matches!(
            parse_pd("X[2,5,1,4], X[3,1,4,6], X[5,3,6,2]"),
            Err(DiagramError::PdOrientation { entry: 1, .. })
        ));
        // a two-crossing diagram whose second component is only ever over
        assert_eq!(
            parse_pd("X[1,3,2,4], X[2,4,1,3]"),
            Err(DiagramError::PdAmbiguous { label: 3 })
        );
    }
}
