//! Indexing triples `S, T, U`, the triple product property and the aliasing
//! set: all solutions of `s_i⁻¹ t_j t_{j'}⁻¹ u_k = s_{i'}⁻¹ u_{k'}` other than
//! the trivial `i = i', j = j', k = k'`.
//!
//! Matrix indices are 1-based throughout, including serialized output.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::group::{Group, GroupDescriptor, GroupElement};

pub const DEFAULT_TPP_BUDGET: u64 = 10_000_000_000;
pub const DEFAULT_PAIR_BUDGET: u64 = 1_000_000;

const CLOSED_FORM_HINT: &str =
    "; for the wreath constructions use the closed-form f values instead of enumeration";

/// Work limits for the quadratic/sextic loops over the index sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WorkBudget {
    /// Group multiplications allowed in the sextuple TPP check.
    pub tpp_multiplications: u64,
    /// `(left entry, right entry)` pairs allowed in aliasing enumeration.
    pub aliasing_pairs: u64,
}

impl Default for WorkBudget {
    fn default() -> Self {
        WorkBudget {
            tpp_multiplications: DEFAULT_TPP_BUDGET,
            aliasing_pairs: DEFAULT_PAIR_BUDGET,
        }
    }
}

/// 1-based `(row, col)` position in a matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct EntryIndex {
    pub row: usize,
    pub col: usize,
}

impl EntryIndex {
    pub const fn new(row: usize, col: usize) -> Self {
        EntryIndex { row, col }
    }

    pub fn in_bounds(&self, rows: usize, cols: usize) -> bool {
        (1..=rows).contains(&self.row) && (1..=cols).contains(&self.col)
    }

    pub(crate) fn check(&self, rows: usize, cols: usize) -> Result<()> {
        if self.in_bounds(rows, cols) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                row: self.row,
                col: self.col,
                rows,
                cols,
            })
        }
    }
}

impl From<(usize, usize)> for EntryIndex {
    fn from((row, col): (usize, usize)) -> Self {
        EntryIndex { row, col }
    }
}

impl From<EntryIndex> for (usize, usize) {
    fn from(e: EntryIndex) -> Self {
        (e.row, e.col)
    }
}

impl fmt::Display for EntryIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// `((i,j), (j',k), (i',k'))`: the term `M_{i,j} N_{j',k}` lands in `P_{i',k'}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(
    from = "(EntryIndex, EntryIndex, EntryIndex)",
    into = "(EntryIndex, EntryIndex, EntryIndex)"
)]
pub struct AliasingTriple {
    pub left: EntryIndex,
    pub right: EntryIndex,
    pub product: EntryIndex,
}

impl From<(EntryIndex, EntryIndex, EntryIndex)> for AliasingTriple {
    fn from((left, right, product): (EntryIndex, EntryIndex, EntryIndex)) -> Self {
        AliasingTriple {
            left,
            right,
            product,
        }
    }
}

impl From<AliasingTriple> for (EntryIndex, EntryIndex, EntryIndex) {
    fn from(a: AliasingTriple) -> Self {
        (a.left, a.right, a.product)
    }
}

impl AliasingTriple {
    /// Builds a triple from 1-based `((i,j),(j2,k),(i2,k2))`.
    pub fn from_indices(
        (i, j): (usize, usize),
        (j2, k): (usize, usize),
        (i2, k2): (usize, usize),
    ) -> Self {
        AliasingTriple {
            left: EntryIndex::new(i, j),
            right: EntryIndex::new(j2, k),
            product: EntryIndex::new(i2, k2),
        }
    }

    /// How many of `i≠i'`, `j≠j'`, `k≠k'` hold.
    pub fn mismatches(&self) -> usize {
        usize::from(self.left.row != self.product.row)
            + usize::from(self.left.col != self.right.row)
            + usize::from(self.right.col != self.product.col)
    }
}

impl fmt::Display for AliasingTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.left, self.right, self.product)
    }
}

/// Sorted, duplicate-free aliasing triples together with `(|S|, |T|, |U|)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawAliasingSet")]
pub struct AliasingSet {
    dims: (usize, usize, usize),
    triples: Vec<AliasingTriple>,
}

#[derive(Deserialize)]
struct RawAliasingSet {
    dims: (usize, usize, usize),
    triples: Vec<AliasingTriple>,
}

impl TryFrom<RawAliasingSet> for AliasingSet {
    type Error = Error;

    fn try_from(raw: RawAliasingSet) -> Result<Self> {
        AliasingSet::new(raw.dims, raw.triples)
    }
}

impl AliasingSet {
    pub fn new(dims: (usize, usize, usize), mut triples: Vec<AliasingTriple>) -> Result<Self> {
        let (m, n, p) = dims;
        for a in &triples {
            a.left.check(m, n)?;
            a.right.check(n, p)?;
            a.product.check(m, p)?;
        }
        triples.sort_unstable();
        triples.dedup();
        Ok(AliasingSet { dims, triples })
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    pub fn triples(&self) -> &[AliasingTriple] {
        &self.triples
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    /// Left, right and product aliasing sets: the distinct first, second and
    /// third components of the triples.
    pub fn projections(
        &self,
    ) -> (
        BTreeSet<EntryIndex>,
        BTreeSet<EntryIndex>,
        BTreeSet<EntryIndex>,
    ) {
        let left = self.triples.iter().map(|a| a.left).collect();
        let right = self.triples.iter().map(|a| a.right).collect();
        let product = self.triples.iter().map(|a| a.product).collect();
        (left, right, product)
    }
}

/// Ordered subsets `S, T, U` of a group.
#[derive(Clone, Debug)]
pub struct IndexingTriple {
    group: Group,
    s: Vec<GroupElement>,
    t: Vec<GroupElement>,
    u: Vec<GroupElement>,
}

#[derive(Serialize, Deserialize)]
struct SubsetsFile {
    group: GroupDescriptor,
    #[serde(rename = "S")]
    s: Vec<Value>,
    #[serde(rename = "T")]
    t: Vec<Value>,
    #[serde(rename = "U")]
    u: Vec<Value>,
}

impl IndexingTriple {
    /// Elements may repeat across the three lists but not within one.
    pub fn new(
        group: Group,
        s: Vec<GroupElement>,
        t: Vec<GroupElement>,
        u: Vec<GroupElement>,
    ) -> Result<Self> {
        for (name, list) in [('S', &s), ('T', &t), ('U', &u)] {
            let mut seen = HashSet::with_capacity(list.len());
            for (pos, g) in list.iter().enumerate() {
                if !group.contains(g) {
                    return Err(Error::ForeignElement {
                        element: format!("{g:?}"),
                        group: group.descriptor().to_string(),
                    });
                }
                if !seen.insert(g) {
                    return Err(Error::DuplicateElement {
                        set: name,
                        position: pos + 1,
                    });
                }
            }
        }
        Ok(IndexingTriple { group, s, t, u })
    }

    /// Convenience constructor from element text, see [`Group::parse_element`].
    pub fn parse(group: Group, s: &[&str], t: &[&str], u: &[&str]) -> Result<Self> {
        let parse = |list: &[&str]| -> Result<Vec<GroupElement>> {
            list.iter().map(|x| group.parse_element(x)).collect()
        };
        let (s, t, u) = (parse(s)?, parse(t)?, parse(u)?);
        Self::new(group, s, t, u)
    }

    pub fn from_json_value(value: Value) -> Result<Self> {
        let file: SubsetsFile = serde_json::from_value(value)?;
        let group = Group::from_descriptor(file.group)?;
        let read = |list: &[Value]| -> Result<Vec<GroupElement>> {
            list.iter().map(|v| group.element_from_json(v)).collect()
        };
        let (s, t, u) = (read(&file.s)?, read(&file.t)?, read(&file.u)?);
        Self::new(group, s, t, u)
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        Self::from_json_value(serde_json::from_str(text)?)
    }

    pub fn to_json_value(&self) -> Value {
        let write = |list: &[GroupElement]| -> Vec<Value> {
            list.iter().map(|g| self.group.element_to_json(g)).collect()
        };
        serde_json::to_value(SubsetsFile {
            group: self.group.descriptor().clone(),
            s: write(&self.s),
            t: write(&self.t),
            u: write(&self.u),
        })
        .expect("subsets serialize")
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn s(&self) -> &[GroupElement] {
        &self.s
    }

    pub fn t(&self) -> &[GroupElement] {
        &self.t
    }

    pub fn u(&self) -> &[GroupElement] {
        &self.u
    }

    /// `(|S|, |T|, |U|)`, the shape of a `|S|×|T|` by `|T|×|U|` product.
    pub fn dims(&self) -> (usize, usize, usize) {
        (self.s.len(), self.t.len(), self.u.len())
    }
}

/// Whether `s s'⁻¹ t t'⁻¹ u u'⁻¹ = e` forces `s = s', t = t', u = u'`.
///
/// Runs the sextuple loop directly over the quotient sets; it shares no code
/// with [`enumerate_aliasing`] so the two can be checked against each other.
pub fn check_tpp(triple: &IndexingTriple, budget: &WorkBudget) -> Result<bool> {
    let (m, n, p) = triple.dims();
    let work = [m, m, n, n, p, p]
        .iter()
        .fold(1u128, |acc, &x| acc * x as u128);
    if work > u128::from(budget.tpp_multiplications) {
        return Err(Error::BudgetExceeded {
            operation: "triple product property check",
            required: work,
            budget: budget.tpp_multiplications,
            hint: CLOSED_FORM_HINT,
        });
    }
    let g = triple.group();
    let quotients = |set: &[GroupElement]| -> Vec<(GroupElement, bool)> {
        let mut out = Vec::with_capacity(set.len() * set.len());
        for (a, x) in set.iter().enumerate() {
            for (b, y) in set.iter().enumerate() {
                out.push((g.op(x, &g.inv(y)), a == b));
            }
        }
        out
    };
    let qs = quotients(triple.s());
    let qt = quotients(triple.t());
    let qu = quotients(triple.u());
    let violated = qs.par_iter().any(|(a, a_trivial)| {
        qt.iter().any(|(b, b_trivial)| {
            let ab = g.op(a, b);
            qu.iter().any(|(c, c_trivial)| {
                !(*a_trivial && *b_trivial && *c_trivial) && g.is_identity(&g.op(&ab, c))
            })
        })
    });
    Ok(!violated)
}

/// All aliasing triples of `S, T, U`, sorted lexicographically.
pub fn enumerate_aliasing(triple: &IndexingTriple, budget: &WorkBudget) -> Result<AliasingSet> {
    let (m, n, p) = triple.dims();
    let pairs = (m * n) as u128 * (n * p) as u128;
    if pairs > u128::from(budget.aliasing_pairs) {
        return Err(Error::BudgetExceeded {
            operation: "aliasing enumeration",
            required: pairs,
            budget: budget.aliasing_pairs,
            hint: CLOSED_FORM_HINT,
        });
    }
    let g = triple.group();
    let s_inv: Vec<GroupElement> = triple.s().iter().map(|s| g.inv(s)).collect();
    let t_inv: Vec<GroupElement> = triple.t().iter().map(|t| g.inv(t)).collect();

    // s_{i'}⁻¹ u_{k'} -> all (i', k') producing it
    let mut targets: HashMap<GroupElement, Vec<(usize, usize)>> = HashMap::new();
    for (i2, si) in s_inv.iter().enumerate() {
        for (k2, u) in triple.u().iter().enumerate() {
            targets.entry(g.op(si, u)).or_default().push((i2, k2));
        }
    }
    let left: Vec<Vec<GroupElement>> = s_inv
        .iter()
        .map(|si| triple.t().iter().map(|t| g.op(si, t)).collect())
        .collect();
    let right: Vec<Vec<GroupElement>> = t_inv
        .iter()
        .map(|ti| triple.u().iter().map(|u| g.op(ti, u)).collect())
        .collect();

    let triples: Vec<AliasingTriple> = (0..m)
        .into_par_iter()
        .flat_map_iter(|i| {
            let mut found = Vec::new();
            for (j, lhs) in left[i].iter().enumerate() {
                for (j2, row) in right.iter().enumerate() {
                    for (k, rhs) in row.iter().enumerate() {
                        let Some(hits) = targets.get(&g.op(lhs, rhs)) else {
                            continue;
                        };
                        for &(i2, k2) in hits {
                            if i == i2 && j == j2 && k == k2 {
                                continue;
                            }
                            found.push(AliasingTriple::from_indices(
                                (i + 1, j + 1),
                                (j2 + 1, k + 1),
                                (i2 + 1, k2 + 1),
                            ));
                        }
                    }
                }
            }
            found
        })
        .collect();
    AliasingSet::new((m, n, p), triples)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_tpp() -> IndexingTriple {
        IndexingTriple::parse(
            Group::dihedral(6).unwrap(),
            &["1", "y"],
            &["1", "yx2", "x3", "xy"],
            &["1", "yx"],
        )
        .unwrap()
    }

    fn example_aliased() -> IndexingTriple {
        IndexingTriple::parse(
            Group::dihedral(6).unwrap(),
            &["1", "y"],
            &["1", "yx2", "x3", "x4"],
            &["1", "yx"],
        )
        .unwrap()
    }

    fn paper_aliasing() -> Vec<AliasingTriple> {
        let mut v = vec![
            AliasingTriple::from_indices((2, 4), (3, 2), (1, 1)),
            AliasingTriple::from_indices((2, 4), (3, 1), (1, 2)),
            AliasingTriple::from_indices((1, 4), (3, 2), (2, 1)),
            AliasingTriple::from_indices((1, 4), (3, 1), (2, 2)),
        ];
        v.sort();
        v
    }

    #[test]
    fn tpp_example() {
        let t = example_tpp();
        assert!(check_tpp(&t, &WorkBudget::default()).unwrap());
        assert!(enumerate_aliasing(&t, &WorkBudget::default())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn aliased_example_matches_listed_set() {
        let t = example_aliased();
        assert!(!check_tpp(&t, &WorkBudget::default()).unwrap());
        let a = enumerate_aliasing(&t, &WorkBudget::default()).unwrap();
        assert_eq!(a.dims(), (2, 4, 2));
        assert_eq!(a.triples(), paper_aliasing().as_slice());
    }

    #[test]
    fn projections_of_aliased_example() {
        let a = enumerate_aliasing(&example_aliased(), &WorkBudget::default()).unwrap();
        let (l, r, p) = a.projections();
        assert_eq!(l, [EntryIndex::new(1, 4), EntryIndex::new(2, 4)].into());
        assert_eq!(r, [EntryIndex::new(3, 1), EntryIndex::new(3, 2)].into());
        assert_eq!(p.len(), 4);
        let empty = AliasingSet::new((1, 1, 1), vec![]).unwrap();
        let (l, r, p) = empty.projections();
        assert!(l.is_empty() && r.is_empty() && p.is_empty());
    }

    #[test]
    fn trivial_triple() {
        let g = Group::cyclic_power(&[1]).unwrap();
        let e = g.identity();
        let t = IndexingTriple::new(g, vec![e.clone()], vec![e.clone()], vec![e]).unwrap();
        assert!(check_tpp(&t, &WorkBudget::default()).unwrap());
        assert!(enumerate_aliasing(&t, &WorkBudget::default())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn rejects_duplicates_within_a_list() {
        let g = Group::dihedral(6).unwrap();
        let err = IndexingTriple::parse(g, &["1", "x6"], &["1"], &["1"]).unwrap_err();
        assert!(matches!(
            err,
            Error::DuplicateElement {
                set: 'S',
                position: 2
            }
        ));
    }

    #[test]
    fn budget_guard() {
        let tight = WorkBudget {
            tpp_multiplications: 10,
            aliasing_pairs: 10,
        };
        let t = example_aliased();
        assert!(matches!(
            check_tpp(&t, &tight),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(matches!(
            enumerate_aliasing(&t, &tight),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn aliasing_json_shape() {
        let a = enumerate_aliasing(&example_aliased(), &WorkBudget::default()).unwrap();
        let text = serde_json::to_string(&a).unwrap();
        assert!(text.starts_with(r#"{"dims":[2,4,2],"triples":[[[1,4],[3,1],[2,2]]"#));
        let back: AliasingSet = serde_json::from_str(&text).unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<AliasingSet>(
            r#"{"dims":[1,1,1],"triples":[[[1,2],[1,1],[1,1]]]}"#
        )
        .is_err());
    }

    #[test]
    fn subsets_json_round_trip() {
        let t = example_aliased();
        let back = IndexingTriple::from_json_value(t.to_json_value()).unwrap();
        assert_eq!(back.s(), t.s());
        assert_eq!(back.t(), t.t());
        assert_eq!(back.u(), t.u());
    }
}
