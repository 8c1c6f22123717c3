//! Coloring quivers: one vertex per coloring and, for every chosen
//! endomorphism `φ`, an edge from `f` to `φ ∘ f`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

use crate::algebra::{Endomorphism, McBiquandle};
use crate::coloring::Homset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("the endomorphism set is empty")]
    EmptyEndoSet,
    #[error("{0} is listed twice")]
    Duplicate(Endomorphism),
    #[error("{0} is not an endomorphism of the mc-biquandle")]
    NotEndomorphism(Endomorphism),
    #[error("homset was computed over an mc-biquandle of order {found}, expected {expected}")]
    OrderMismatch { expected: usize, found: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct QuiverEdge {
    pub src: usize,
    pub dst: usize,
    /// Index into [`Quiver::endos`].
    pub endo: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    pub vertex_count: usize,
    pub endos: Vec<Endomorphism>,
    /// Ordered by source vertex, then endomorphism.
    pub edges: Vec<QuiverEdge>,
}

pub fn build_quiver(
    x: &McBiquandle,
    homset: &Homset,
    endos: &[Endomorphism],
) -> Result<Quiver, QuiverError> {
    if homset.order != x.order() {
        return Err(QuiverError::OrderMismatch {
            expected: x.order(),
            found: homset.order,
        });
    }
    if endos.is_empty() {
        return Err(QuiverError::EmptyEndoSet);
    }
    for (i, f) in endos.iter().enumerate() {
        if !f.is_endomorphism_of(x) {
            return Err(QuiverError::NotEndomorphism(f.clone()));
        }
        if endos[..i].contains(f) {
            return Err(QuiverError::Duplicate(f.clone()));
        }
    }
    let mut edges = Vec::with_capacity(homset.len() * endos.len());
    for (src, coloring) in homset.colorings.iter().enumerate() {
        for (e, f) in endos.iter().enumerate() {
            let dst = homset
                .index_of(&coloring.compose(f))
                .expect("colorings are closed under endomorphisms");
            edges.push(QuiverEdge { src, dst, endo: e });
        }
    }
    Ok(Quiver {
        vertex_count: homset.len(),
        endos: endos.to_vec(),
        edges,
    })
}

impl Quiver {
    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for e in &self.edges {
            deg[e.dst] += 1;
        }
        deg
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for e in &self.edges {
            deg[e.src] += 1;
        }
        deg
    }

    pub fn indegree_polynomial(&self) -> InDegreePolynomial {
        let mut coeffs = BTreeMap::new();
        for d in self.in_degrees() {
            *coeffs.entry(d as u64).or_insert(0u64) += 1;
        }
        InDegreePolynomial { coeffs }
    }

    /// Edge multiplicities, `m[src * n + dst]`.
    fn multiplicities(&self) -> Vec<u32> {
        let n = self.vertex_count;
        let mut m = vec![0u32; n * n];
        for e in &self.edges {
            m[e.src * n + e.dst] += 1;
        }
        m
    }

    /// The same quiver with vertex `v` renamed `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Quiver {
        let mut edges: Vec<QuiverEdge> = self
            .edges
            .iter()
            .map(|e| QuiverEdge {
                src: perm[e.src],
                dst: perm[e.dst],
                endo: e.endo,
            })
            .collect();
        edges.sort();
        Quiver {
            vertex_count: self.vertex_count,
            endos: self.endos.clone(),
            edges,
        }
    }
}

/// `Σ_f u^{deg⁺(f)}`, stored as exponent → coefficient.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InDegreePolynomial {
    coeffs: BTreeMap<u64, u64>,
}

impl InDegreePolynomial {
    /// From `(coefficient, exponent)` pairs; repeated exponents add up.
    pub fn from_terms(terms: &[(u64, u64)]) -> Self {
        let mut coeffs = BTreeMap::new();
        for &(c, e) in terms {
            if c > 0 {
                *coeffs.entry(e).or_insert(0) += c;
            }
        }
        InDegreePolynomial { coeffs }
    }

    /// `(coefficient, exponent)` with exponents descending.
    pub fn terms(&self) -> Vec<(u64, u64)> {
        self.coeffs.iter().rev().map(|(&e, &c)| (c, e)).collect()
    }

    pub fn eval_at_one(&self) -> u64 {
        self.coeffs.values().sum()
    }

    pub fn derivative_at_one(&self) -> u64 {
        self.coeffs.iter().map(|(e, c)| e * c).sum()
    }
}

impl fmt::Display for InDegreePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (c, e)) in self.terms().into_iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*u^{e}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot read polynomial term {0:?}")]
pub struct PolynomialParseError(pub String);

impl FromStr for InDegreePolynomial {
    type Err = PolynomialParseError;

    /// Accepts `2*u^20 + 6*u^4` as well as `2u^20+6u^4`, `u^3`, `3u` and `5`.
    fn from_str(s: &str) -> Result<Self, PolynomialParseError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "0" {
            return Ok(InDegreePolynomial::default());
        }
        let mut terms = Vec::new();
        for term in compact.split('+') {
            let bad = || PolynomialParseError(term.into());
            let (coeff, power) = match term.find('u') {
                Some(i) => (term[..i].trim_end_matches('*'), Some(&term[i + 1..])),
                None => (term, None),
            };
            let c = if coeff.is_empty() && power.is_some() {
                1
            } else {
                coeff.parse().map_err(|_| bad())?
            };
            let e = match power {
                None => 0,
                Some("") => 1,
                Some(p) => p
                    .strip_prefix('^')
                    .ok_or_else(bad)?
                    .parse()
                    .map_err(|_| bad())?,
            };
            terms.push((c, e));
        }
        Ok(InDegreePolynomial::from_terms(&terms))
    }
}

/// A vertex bijection `a → b` preserving directed edge multiplicities, if
/// one exists. Edge labels are ignored.
///
/// Vertex classes are refined by degrees and neighbour classes in both
/// quivers together, then matched by backtracking.
pub fn quiver_isomorphic(a: &Quiver, b: &Quiver) -> Option<Vec<usize>> {
    let n = a.vertex_count;
    if n != b.vertex_count || a.edges.len() != b.edges.len() {
        return None;
    }
    if a.indegree_polynomial() != b.indegree_polynomial() {
        return None;
    }
    let (ma, mb) = (a.multiplicities(), b.multiplicities());
    let colors = refine(n, &ma, &mb)?;
    let (ca, cb) = colors.split_at(n);

    let mut class_size = BTreeMap::new();
    for &c in ca {
        *class_size.entry(c).or_insert(0usize) += 1;
    }
    // Visit order: most links to already ordered vertices, then smallest class.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (core::cmp::Reverse(links[v]), class_size[&ca[v]], v))
            .expect("unplaced vertex");
        placed[v] = true;
        order.push(v);
        for w in 0..n {
            if ma[v * n + w] + ma[w * n + v] > 0 {
                links[w] += 1;
            }
        }
    }

    let mut st = Matcher {
        n,
        ma: &ma,
        mb: &mb,
        ca,
        cb,
        order: &order,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    st.extend(0).then_some(st.map)
}

/// Joint color refinement of two multigraphs on `n` vertices each.
/// Returns `None` if the color histograms differ.
/// Own color, then sorted (neighbour color, multiplicity) lists for out- and in-edges.
type Signature = (usize, Vec<(usize, u32)>, Vec<(usize, u32)>);

fn refine(n: usize, ma: &[u32], mb: &[u32]) -> Option<Vec<usize>> {
    let adj = |v: usize, w: usize| -> u32 {
        if v < n {
            if w < n {
                ma[v * n + w]
            } else {
                0
            }
        } else if w >= n {
            mb[(v - n) * n + (w - n)]
        } else {
            0
        }
    };
    let total = 2 * n;
    let mut colors = vec![0usize; total];
    let mut classes = 1;
    loop {
        let sigs: Vec<Signature> = (0..total)
            .map(|v| {
                let side = if v < n { 0..n } else { n..total };
                let mut outs: Vec<(usize, u32)> = side
                    .clone()
                    .filter(|&w| adj(v, w) > 0)
                    .map(|w| (colors[w], adj(v, w)))
                    .collect();
                let mut ins: Vec<(usize, u32)> = side
                    .filter(|&w| adj(w, v) > 0)
                    .map(|w| (colors[w], adj(w, v)))
                    .collect();
                outs.sort_unstable();
                ins.sort_unstable();
                (colors[v], outs, ins)
            })
            .collect();
        let mut ids = BTreeMap::new();
        for s in &sigs {
            let next = ids.len();
            ids.entry(s).or_insert(next);
        }
        let refined: Vec<usize> = sigs.iter().map(|s| ids[s]).collect();
        let count = ids.len();
        colors = refined;
        if count == classes {
            break;
        }
        classes = count;
    }
    let mut hist_a = colors[..n].to_vec();
    let mut hist_b = colors[n..].to_vec();
    hist_a.sort_unstable();
    hist_b.sort_unstable();
    (hist_a == hist_b).then_some(colors)
}

struct Matcher<'a> {
    n: usize,
    ma: &'a [u32],
    mb: &'a [u32],
    ca: &'a [usize],
    cb: &'a [usize],
    order: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Matcher<'_> {
    fn extend(&mut self, k: usize) -> bool {
        if k == self.n {
            return true;
        }
        let n = self.n;
        let v = self.order[k];
        for w in 0..n {
            if self.used[w] || self.cb[w] != self.ca[v] {
                continue;
            }
            let consistent = self.ma[v * n + v] == self.mb[w * n + w]
                && self.order[..k].iter().all(|&u| {
                    let x = self.map[u];
                    self.ma[v * n + u] == self.mb[w * n + x]
                        && self.ma[u * n + v] == self.mb[x * n + w]
                });
            if !consistent {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            if self.extend(k + 1) {
                return true;
            }
            self.used[w] = false;
            self.map[v] = usize::MAX;
        }
        false
    }
}
