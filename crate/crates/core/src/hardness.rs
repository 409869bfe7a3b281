//! Reduction from INDEPENDENT-SET to the cover problem (PARTIAL-TENSOR-ONES),
//! the polynomial certificate check that puts it in NP, and a brute-force
//! independence number used to cross-check the reduction.
//!
//! A graph on `V` becomes a `1×|V|` by `|V|×1` instance. Index `i` contributes
//! `1` to `f` exactly when both `(1,i)` and `(i,1)` are free, and each edge
//! `{i,j}` forbids `i` and `j` from being free together, so the maximum of `f`
//! is the independence number.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cover::{f_value, Cover, PartialPatternInstance};
use crate::error::{Error, Result};
use crate::indexing::EntryIndex;

pub const ALPHA_ORACLE_LIMIT: usize = 24;

/// Undirected simple graph on vertices `1..=vertices`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGraph")]
pub struct SimpleGraph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
struct RawGraph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawGraph> for SimpleGraph {
    type Error = Error;

    fn try_from(raw: RawGraph) -> Result<Self> {
        SimpleGraph::new(raw.vertices, raw.edges)
    }
}

impl SimpleGraph {
    /// Edges are stored as `(min, max)`, sorted. Self-loops, repeated edges
    /// and out-of-range endpoints are rejected.
    pub fn new(vertices: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {a}")));
            }
            if a == 0 || b == 0 || a > vertices || b > vertices {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a},{b}) outside vertices 1..={vertices}"
                )));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({a},{b})")));
            }
        }
        Ok(SimpleGraph {
            vertices,
            edges: seen.into_iter().collect(),
        })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn complete(n: usize) -> Self {
        let edges = (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b)));
        Self::new(n, edges).expect("valid complete graph")
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|a| (a, a + 1))).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<_> = (1..n).map(|a| (a, a + 1)).collect();
        if n >= 3 {
            edges.push((n, 1));
        }
        Self::new(n, edges).expect("valid cycle")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (1..=a).flat_map(|x| (a + 1..=a + b).map(move |y| (x, y)));
        Self::new(a + b, edges).expect("valid complete bipartite graph")
    }

    pub fn is_independent(&self, set: &BTreeSet<usize>) -> bool {
        self.edges
            .iter()
            .all(|(a, b)| !(set.contains(a) && set.contains(b)))
    }
}

/// Builds the `1×|V|` by `|V|×1` instance with pairs `((1,i),(j,1))` and
/// `((1,j),(i,1))` for every edge `{i,j}`.
pub fn reduce_independent_set(graph: &SimpleGraph) -> PartialPatternInstance {
    let n = graph.vertices();
    let pairs = graph
        .edges()
        .iter()
        .flat_map(|&(i, j)| {
            [
                (EntryIndex::new(1, i), EntryIndex::new(j, 1)),
                (EntryIndex::new(1, j), EntryIndex::new(i, 1)),
            ]
        })
        .collect();
    PartialPatternInstance::new(1, n, 1, pairs).expect("reduction stays in range")
}

/// Independence number by subset enumeration.
pub fn brute_force_alpha(graph: &SimpleGraph) -> Result<usize> {
    let n = graph.vertices();
    if n > ALPHA_ORACLE_LIMIT {
        return Err(Error::OracleTooLarge {
            entries: n,
            limit: ALPHA_ORACLE_LIMIT,
        });
    }
    let edge_masks: Vec<u32> = graph
        .edges()
        .iter()
        .map(|&(a, b)| (1 << (a - 1)) | (1 << (b - 1)))
        .collect();
    Ok((0u32..1 << n)
        .filter(|s| edge_masks.iter().all(|e| s & e != *e))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0))
}

/// Vertices whose two entries are both free under `cover` of a reduced instance.
pub fn independent_set_from_cover(graph: &SimpleGraph, cover: &Cover) -> BTreeSet<usize> {
    (1..=graph.vertices())
        .filter(|&i| {
            !cover.left.contains(&EntryIndex::new(1, i))
                && !cover.right.contains(&EntryIndex::new(i, 1))
        })
        .collect()
}

/// Aligns one-sided zeros of a reduced-instance cover: if either `(1,i)` or
/// `(i,1)` is zeroed, zero both. Leaves `f` unchanged.
pub fn symmetrize_reduced_cover(vertices: usize, cover: &Cover) -> Cover {
    let zeroed: Vec<usize> = (1..=vertices)
        .filter(|&i| {
            cover.left.contains(&EntryIndex::new(1, i))
                || cover.right.contains(&EntryIndex::new(i, 1))
        })
        .collect();
    Cover::new(
        zeroed.iter().map(|&i| EntryIndex::new(1, i)),
        zeroed.iter().map(|&i| EntryIndex::new(i, 1)),
    )
}

/// How one constraint pair is satisfied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Symbol {
    /// Left entry zeroed, right entry free.
    L,
    /// Right entry zeroed, left entry free.
    R,
    /// Both zeroed.
    B,
}

impl Symbol {
    fn left_zero(self) -> bool {
        matches!(self, Symbol::L | Symbol::B)
    }

    fn right_zero(self) -> bool {
        matches!(self, Symbol::R | Symbol::B)
    }
}

/// One symbol per constraint, in the instance's (sorted) pair order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate(pub Vec<Symbol>);

impl FromStr for Certificate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| match c.to_ascii_uppercase() {
                'L' => Ok(Symbol::L),
                'R' => Ok(Symbol::R),
                'B' => Ok(Symbol::B),
                other => Err(Error::ParseElement {
                    text: s.to_string(),
                    reason: format!("certificate symbol {other:?} is not L, R or B"),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(Certificate)
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{s:?}")?;
        }
        Ok(())
    }
}

impl Certificate {
    /// Certificate describing an actual cover; `None` if some pair is uncovered.
    pub fn from_cover(inst: &PartialPatternInstance, cover: &Cover) -> Option<Self> {
        inst.pairs()
            .iter()
            .map(
                |(a, b)| match (cover.left.contains(a), cover.right.contains(b)) {
                    (true, true) => Some(Symbol::B),
                    (true, false) => Some(Symbol::L),
                    (false, true) => Some(Symbol::R),
                    (false, false) => None,
                },
            )
            .collect::<Option<Vec<_>>>()
            .map(Certificate)
    }

    /// The zero pattern the symbols ask for.
    pub fn induced_cover(&self, inst: &PartialPatternInstance) -> Cover {
        let pairs = inst.pairs();
        Cover::new(
            pairs
                .iter()
                .zip(&self.0)
                .filter(|(_, s)| s.left_zero())
                .map(|((a, _), _)| *a),
            pairs
                .iter()
                .zip(&self.0)
                .filter(|(_, s)| s.right_zero())
                .map(|((_, b), _)| *b),
        )
    }
}

/// Checks that no entry is asked to be both free and zero by two constraints,
/// then that the induced pattern reaches `f ≥ k`.
pub fn verify_certificate(
    inst: &PartialPatternInstance,
    cert: &Certificate,
    k: u64,
) -> Result<bool> {
    let pairs = inst.pairs();
    if cert.0.len() != pairs.len() {
        return Err(Error::CertificateLength {
            expected: pairs.len(),
            got: cert.0.len(),
        });
    }
    // Quadratic consistency scan over constraint pairs.
    for (x, ((a1, b1), s1)) in pairs.iter().zip(&cert.0).enumerate() {
        for ((a2, b2), s2) in pairs[x + 1..].iter().zip(&cert.0[x + 1..]) {
            if a1 == a2 && s1.left_zero() != s2.left_zero() {
                return Ok(false);
            }
            if b1 == b2 && s1.right_zero() != s2.right_zero() {
                return Ok(false);
            }
        }
    }
    let cover = cert.induced_cover(inst);
    Ok(f_value(inst, &cover)? >= k)
}
