//! Zero patterns `(I, J)` covering an aliasing set and the objective
//!
//! ```text
//! f(I, J) = Σ_c k_c · n_c
//! ```
//!
//! where `k_c` counts entries of column `c` of the left factor outside `I` and
//! `n_c` counts entries of row `c` of the right factor outside `J`.
//!
//! Three solvers maximize `f` over covers: an exact depth-first branch and
//! bound, a König matching heuristic (fewest zeroed entries, not maximal `f`),
//! and an exhaustive oracle for small instances.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::indexing::{AliasingSet, EntryIndex};

/// Largest number of aliasing-involved entries the exhaustive oracle accepts.
pub const BRUTE_FORCE_LIMIT: usize = 24;

/// Left factor `m×n`, right factor `n×p`, and the constraint pairs: for each
/// `(a, b)` at least one of `a` (left) or `b` (right) must be zeroed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawInstance")]
pub struct PartialPatternInstance {
    m: usize,
    n: usize,
    p: usize,
    pairs: Vec<(EntryIndex, EntryIndex)>,
}

#[derive(Deserialize)]
struct RawInstance {
    m: usize,
    n: usize,
    p: usize,
    pairs: Vec<(EntryIndex, EntryIndex)>,
}

impl TryFrom<RawInstance> for PartialPatternInstance {
    type Error = Error;

    fn try_from(raw: RawInstance) -> Result<Self> {
        PartialPatternInstance::new(raw.m, raw.n, raw.p, raw.pairs)
    }
}

impl PartialPatternInstance {
    /// Validates ranges and sorts/deduplicates the pairs.
    pub fn new(
        m: usize,
        n: usize,
        p: usize,
        mut pairs: Vec<(EntryIndex, EntryIndex)>,
    ) -> Result<Self> {
        for (a, b) in &pairs {
            a.check(m, n)?;
            b.check(n, p)?;
        }
        pairs.sort_unstable();
        pairs.dedup();
        Ok(PartialPatternInstance { m, n, p, pairs })
    }

    /// Keeps the `(left, right)` components of each aliasing triple.
    pub fn from_aliasing(set: &AliasingSet) -> Self {
        let (m, n, p) = set.dims();
        let mut pairs: Vec<_> = set.triples().iter().map(|a| (a.left, a.right)).collect();
        pairs.sort_unstable();
        pairs.dedup();
        PartialPatternInstance { m, n, p, pairs }
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.m, self.n, self.p)
    }

    pub fn pairs(&self) -> &[(EntryIndex, EntryIndex)] {
        &self.pairs
    }

    /// `m·n·p`, the value of `f` with nothing zeroed.
    pub fn full_value(&self) -> u64 {
        (self.m * self.n * self.p) as u64
    }

    pub fn left_entries(&self) -> BTreeSet<EntryIndex> {
        self.pairs.iter().map(|(a, _)| *a).collect()
    }

    pub fn right_entries(&self) -> BTreeSet<EntryIndex> {
        self.pairs.iter().map(|(_, b)| *b).collect()
    }
}

/// Zeroed entries `I` of the left factor and `J` of the right factor.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cover {
    #[serde(rename = "I")]
    pub left: BTreeSet<EntryIndex>,
    #[serde(rename = "J")]
    pub right: BTreeSet<EntryIndex>,
}

impl Cover {
    pub fn new<L, R>(left: L, right: R) -> Self
    where
        L: IntoIterator<Item = EntryIndex>,
        R: IntoIterator<Item = EntryIndex>,
    {
        Cover {
            left: left.into_iter().collect(),
            right: right.into_iter().collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.left.len() + self.right.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveMethod {
    BranchAndBound,
    /// Minimum vertex cover via König; does not maximize `f`.
    MatchingHeuristic,
    BruteForce,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReport {
    pub f: u64,
    #[serde(flatten)]
    pub cover: Cover,
    /// `f` is proven to be the maximum over all covers.
    pub exact: bool,
    pub method: SolveMethod,
    pub nodes: u64,
    pub pruned: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub matching_size: Option<usize>,
}

pub fn f_value(inst: &PartialPatternInstance, cover: &Cover) -> Result<u64> {
    let (m, n, p) = inst.dims();
    let mut left_zeros = vec![0usize; n];
    let mut right_zeros = vec![0usize; n];
    for e in &cover.left {
        e.check(m, n)?;
        left_zeros[e.col - 1] += 1;
    }
    for e in &cover.right {
        e.check(n, p)?;
        right_zeros[e.row - 1] += 1;
    }
    Ok(left_zeros
        .iter()
        .zip(&right_zeros)
        .map(|(zl, zr)| ((m - zl) * (p - zr)) as u64)
        .sum())
}

pub fn is_cover(inst: &PartialPatternInstance, cover: &Cover) -> bool {
    inst.pairs
        .iter()
        .all(|(a, b)| cover.left.contains(a) || cover.right.contains(b))
}

/// Limits and modes for [`exact_max_f`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactOptions {
    /// Stop after this many search nodes and report the incumbent as non-exact.
    pub node_limit: Option<u64>,
    /// Shuffle the branching order with this seed instead of lexicographic.
    pub shuffle_seed: Option<u64>,
    /// Worker threads; `1` gives the deterministic single-threaded descent.
    pub threads: usize,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions {
            node_limit: None,
            shuffle_seed: None,
            threads: 1,
        }
    }
}

/// Compact form of an instance: entries renumbered, pairs as id pairs.
#[derive(Clone, Debug)]
struct Compact {
    m: u64,
    p: u64,
    left: Vec<EntryIndex>,
    right: Vec<EntryIndex>,
    pairs: Vec<(usize, usize)>,
}

impl Compact {
    fn new(inst: &PartialPatternInstance, shuffle_seed: Option<u64>) -> Self {
        let left: Vec<EntryIndex> = inst.left_entries().into_iter().collect();
        let right: Vec<EntryIndex> = inst.right_entries().into_iter().collect();
        let lid: BTreeMap<EntryIndex, usize> =
            left.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        let rid: BTreeMap<EntryIndex, usize> =
            right.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        let mut pairs: Vec<(usize, usize)> =
            inst.pairs.iter().map(|(a, b)| (lid[a], rid[b])).collect();
        if let Some(seed) = shuffle_seed {
            pairs.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        }
        Compact {
            m: inst.m as u64,
            p: inst.p as u64,
            left,
            right,
            pairs,
        }
    }
}

/// Mutable search state: which involved entries are zeroed, which left
/// entries a right branch has committed to keeping, and the per-column /
/// per-row zero counts that determine `f`.
#[derive(Clone, Debug)]
struct State {
    left_zero: Vec<bool>,
    left_kept: Vec<bool>,
    right_zero: Vec<bool>,
    col_zeros: Vec<u64>,
    row_zeros: Vec<u64>,
    f: u64,
}

impl State {
    fn new(inst: &PartialPatternInstance, c: &Compact) -> Self {
        State {
            left_zero: vec![false; c.left.len()],
            left_kept: vec![false; c.left.len()],
            right_zero: vec![false; c.right.len()],
            col_zeros: vec![0; inst.n],
            row_zeros: vec![0; inst.n],
            f: inst.full_value(),
        }
    }

    fn zero_left(&mut self, c: &Compact, id: usize) {
        let col = c.left[id].col - 1;
        self.left_zero[id] = true;
        self.f -= c.p - self.row_zeros[col];
        self.col_zeros[col] += 1;
    }

    fn unzero_left(&mut self, c: &Compact, id: usize) {
        let col = c.left[id].col - 1;
        self.left_zero[id] = false;
        self.col_zeros[col] -= 1;
        self.f += c.p - self.row_zeros[col];
    }

    fn zero_right(&mut self, c: &Compact, id: usize) {
        let row = c.right[id].row - 1;
        self.right_zero[id] = true;
        self.f -= c.m - self.col_zeros[row];
        self.row_zeros[row] += 1;
    }

    fn unzero_right(&mut self, c: &Compact, id: usize) {
        let row = c.right[id].row - 1;
        self.right_zero[id] = false;
        self.row_zeros[row] -= 1;
        self.f += c.m - self.col_zeros[row];
    }

    fn first_uncovered(&self, c: &Compact, from: usize) -> Option<usize> {
        (from..c.pairs.len()).find(|&k| {
            let (l, r) = c.pairs[k];
            !self.left_zero[l] && !self.right_zero[r]
        })
    }

    fn cover(&self, c: &Compact) -> Cover {
        Cover::new(
            c.left
                .iter()
                .zip(&self.left_zero)
                .filter(|(_, z)| **z)
                .map(|(e, _)| *e),
            c.right
                .iter()
                .zip(&self.right_zero)
                .filter(|(_, z)| **z)
                .map(|(e, _)| *e),
        )
    }
}

/// Incumbent shared between workers. `0` means none; otherwise `f + 1`.
struct Shared {
    best: AtomicU64,
    nodes: AtomicU64,
    pruned: AtomicU64,
    aborted: AtomicBool,
    node_limit: u64,
}

impl Shared {
    fn best(&self) -> Option<u64> {
        match self.best.load(Ordering::Relaxed) {
            0 => None,
            x => Some(x - 1),
        }
    }

    fn offer(&self, f: u64) -> bool {
        let mut current = self.best.load(Ordering::Relaxed);
        loop {
            if current > f {
                return false;
            }
            match self
                .best
                .compare_exchange(current, f + 1, Ordering::Relaxed, Ordering::Relaxed)
            {
                Ok(_) => return true,
                Err(actual) => current = actual,
            }
        }
    }
}

struct Worker<'a> {
    compact: &'a Compact,
    shared: &'a Shared,
    state: State,
    best: Option<(u64, Cover)>,
}

impl Worker<'_> {
    /// One search node, recursing left-zero first.
    fn visit(&mut self, from: usize) {
        if self.shared.aborted.load(Ordering::Relaxed) {
            return;
        }
        if self.shared.nodes.fetch_add(1, Ordering::Relaxed) >= self.shared.node_limit {
            self.shared.aborted.store(true, Ordering::Relaxed);
            return;
        }
        let f = self.state.f;
        let next = self.state.first_uncovered(self.compact, from);
        if next.is_none() && self.shared.offer(f) {
            self.best = Some((f, self.state.cover(self.compact)));
            return;
        }
        // f only decreases as zeros are added, so f is an upper bound for the subtree.
        if self.shared.best().is_some_and(|b| f <= b) {
            self.shared.pruned.fetch_add(1, Ordering::Relaxed);
            return;
        }
        let Some(k) = next else { return };
        let (l, r) = self.compact.pairs[k];
        let kept = self.state.left_kept[l];
        if !kept {
            self.state.zero_left(self.compact, l);
            self.visit(k + 1);
            self.state.unzero_left(self.compact, l);
        }
        // Covers zeroing `l` were all reached in the left branch, so the right
        // branch keeps `l`; later pairs through `l` then have one child.
        self.state.left_kept[l] = true;
        self.state.zero_right(self.compact, r);
        self.visit(k + 1);
        self.state.unzero_right(self.compact, r);
        self.state.left_kept[l] = kept;
    }
}

/// Exact maximum of `f` over covers by depth-first branch and bound.
///
/// Branches on the first uncovered pair (left entry zeroed first) and prunes
/// any node whose current `f` does not exceed the incumbent. The right branch
/// keeps the pair's left entry free for the rest of its subtree. With one thread
/// the returned cover is the first maximizer in exploration order.
pub fn exact_max_f(inst: &PartialPatternInstance, opts: &ExactOptions) -> SolveReport {
    let compact = Compact::new(inst, opts.shuffle_seed);
    let shared = Shared {
        best: AtomicU64::new(0),
        nodes: AtomicU64::new(0),
        pruned: AtomicU64::new(0),
        aborted: AtomicBool::new(false),
        node_limit: opts.node_limit.unwrap_or(u64::MAX),
    };
    let root = State::new(inst, &compact);

    let best = if opts.threads <= 1 {
        let mut w = Worker {
            compact: &compact,
            shared: &shared,
            state: root,
            best: None,
        };
        w.visit(0);
        w.best
    } else {
        parallel_search(&compact, &shared, root, opts.threads)
    };

    let aborted = shared.aborted.load(Ordering::Relaxed);
    let nodes = shared.nodes.load(Ordering::Relaxed).min(shared.node_limit);
    let pruned = shared.pruned.load(Ordering::Relaxed);
    let (f, cover) = match best {
        Some(b) => b,
        None => {
            // Limit hit before any complete cover: zero every left endpoint.
            let cover = Cover::new(inst.left_entries(), []);
            (f_value(inst, &cover).expect("entries in range"), cover)
        }
    };
    SolveReport {
        f,
        cover,
        exact: !aborted,
        method: SolveMethod::BranchAndBound,
        nodes,
        pruned,
        matching_size: None,
    }
}

fn parallel_search(
    compact: &Compact,
    shared: &Shared,
    root: State,
    threads: usize,
) -> Option<(u64, Cover)> {
    // Expand breadth-first (without pruning) into independent subtrees.
    let target = threads * 8;
    let mut frontier: VecDeque<(State, usize)> = VecDeque::from([(root, 0)]);
    let mut done: Vec<(State, usize)> = Vec::new();
    while !frontier.is_empty() && frontier.len() + done.len() < target {
        let (state, from) = frontier.pop_front().unwrap();
        match state.first_uncovered(compact, from) {
            None => done.push((state, from)),
            Some(k) => {
                let (l, r) = compact.pairs[k];
                if !state.left_kept[l] {
                    let mut a = state.clone();
                    a.zero_left(compact, l);
                    frontier.push_back((a, k + 1));
                }
                let mut b = state;
                b.left_kept[l] = true;
                b.zero_right(compact, r);
                frontier.push_back((b, k + 1));
            }
        }
    }
    done.extend(frontier);

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool");
    pool.install(|| {
        done.into_par_iter()
            .filter_map(|(state, from)| {
                let mut w = Worker {
                    compact,
                    shared,
                    state,
                    best: None,
                };
                w.visit(from);
                w.best
            })
            .max_by_key(|(f, _)| *f)
    })
}

/// Hopcroft–Karp maximum matching on a bipartite graph given as adjacency
/// lists from left vertices to right vertices. Returns `match_left`,
/// `match_right`.
fn hopcroft_karp(adj: &[Vec<usize>], n_right: usize) -> (Vec<Option<usize>>, Vec<Option<usize>>) {
    let n_left = adj.len();
    let mut match_l: Vec<Option<usize>> = vec![None; n_left];
    let mut match_r: Vec<Option<usize>> = vec![None; n_right];
    let mut dist = vec![u32::MAX; n_left];

    loop {
        // BFS layering from free left vertices.
        let mut queue = VecDeque::new();
        for u in 0..n_left {
            if match_l[u].is_none() {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = u32::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                match match_r[v] {
                    None => found = true,
                    Some(w) if dist[w] == u32::MAX => {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                    Some(_) => {}
                }
            }
        }
        if !found {
            break;
        }
        for u in 0..n_left {
            if match_l[u].is_none() {
                augment(u, adj, &mut match_l, &mut match_r, &mut dist);
            }
        }
    }
    (match_l, match_r)
}

fn augment(
    u: usize,
    adj: &[Vec<usize>],
    match_l: &mut [Option<usize>],
    match_r: &mut [Option<usize>],
    dist: &mut [u32],
) -> bool {
    for &v in &adj[u] {
        let ok = match match_r[v] {
            None => true,
            Some(w) => dist[w] == dist[u] + 1 && augment(w, adj, match_l, match_r, dist),
        };
        if ok {
            match_l[u] = Some(v);
            match_r[v] = Some(u);
            return true;
        }
    }
    dist[u] = u32::MAX;
    false
}

/// Fewest-zeros cover: a minimum vertex cover of the conflict graph (left
/// entries vs right entries, one edge per pair) obtained from a maximum
/// matching by König's construction. Not optimal for `f`.
pub fn heuristic_cover(inst: &PartialPatternInstance) -> SolveReport {
    let compact = Compact::new(inst, None);
    let mut adj = vec![Vec::new(); compact.left.len()];
    for &(l, r) in &compact.pairs {
        adj[l].push(r);
    }
    let (match_l, match_r) = hopcroft_karp(&adj, compact.right.len());
    let matching = match_l.iter().flatten().count();

    // Alternating reachability from free left vertices: free edges left→right,
    // matched edges right→left.
    let mut seen_l = vec![false; compact.left.len()];
    let mut seen_r = vec![false; compact.right.len()];
    let mut queue: VecDeque<usize> = (0..compact.left.len())
        .filter(|&u| match_l[u].is_none())
        .collect();
    for &u in &queue {
        seen_l[u] = true;
    }
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if match_l[u] == Some(v) || seen_r[v] {
                continue;
            }
            seen_r[v] = true;
            if let Some(w) = match_r[v] {
                if !seen_l[w] {
                    seen_l[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let cover = Cover::new(
        compact
            .left
            .iter()
            .zip(&seen_l)
            .filter(|(_, s)| !**s)
            .map(|(e, _)| *e),
        compact
            .right
            .iter()
            .zip(&seen_r)
            .filter(|(_, s)| **s)
            .map(|(e, _)| *e),
    );
    debug_assert_eq!(cover.size(), matching);
    SolveReport {
        f: f_value(inst, &cover).expect("entries in range"),
        cover,
        exact: false,
        method: SolveMethod::MatchingHeuristic,
        nodes: 0,
        pruned: 0,
        matching_size: Some(matching),
    }
}

/// Exhaustive maximum of `f` over subsets of the aliasing-involved entries.
///
/// Dropping an uninvolved entry from a cover keeps it a cover and never lowers
/// `f`, so restricting to involved entries loses no maximizer.
pub fn brute_force_max_f(inst: &PartialPatternInstance) -> Result<SolveReport> {
    let left: Vec<EntryIndex> = inst.left_entries().into_iter().collect();
    let right: Vec<EntryIndex> = inst.right_entries().into_iter().collect();
    let k = left.len() + right.len();
    if k > BRUTE_FORCE_LIMIT {
        return Err(Error::OracleTooLarge {
            entries: k,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let (m, n, p) = inst.dims();
    let lpos = |e: &EntryIndex| left.binary_search(e).unwrap();
    let rpos = |e: &EntryIndex| right.binary_search(e).unwrap() + left.len();
    let masks: Vec<(u32, u32)> = inst
        .pairs
        .iter()
        .map(|(a, b)| (1u32 << lpos(a), 1u32 << rpos(b)))
        .collect();

    let mut best: Option<(u64, u32)> = None;
    for mask in 0u32..(1u32 << k) {
        if !masks.iter().all(|(a, b)| mask & (a | b) != 0) {
            continue;
        }
        let mut col_zeros = vec![0usize; n];
        let mut row_zeros = vec![0usize; n];
        for (bit, e) in left.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                col_zeros[e.col - 1] += 1;
            }
        }
        for (bit, e) in right.iter().enumerate() {
            if mask >> (bit + left.len()) & 1 == 1 {
                row_zeros[e.row - 1] += 1;
            }
        }
        let f: u64 = (0..n)
            .map(|c| ((m - col_zeros[c]) * (p - row_zeros[c])) as u64)
            .sum();
        if best.is_none_or(|(b, _)| f > b) {
            best = Some((f, mask));
        }
    }
    let (f, mask) = best.expect("zeroing every involved entry is always a cover");
    let cover = Cover::new(
        left.iter()
            .enumerate()
            .filter(|(bit, _)| mask >> bit & 1 == 1)
            .map(|(_, e)| *e),
        right
            .iter()
            .enumerate()
            .filter(|(bit, _)| mask >> (bit + left.len()) & 1 == 1)
            .map(|(_, e)| *e),
    );
    Ok(SolveReport {
        f,
        cover,
        exact: true,
        method: SolveMethod::BruteForce,
        nodes: 1u64 << k,
        pruned: 0,
        matching_size: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(r: usize, c: usize) -> EntryIndex {
        EntryIndex::new(r, c)
    }

    /// Pairs of the aliased D12 example.
    fn aliased_example() -> PartialPatternInstance {
        PartialPatternInstance::new(
            2,
            4,
            2,
            vec![
                (e(2, 4), e(3, 2)),
                (e(2, 4), e(3, 1)),
                (e(1, 4), e(3, 2)),
                (e(1, 4), e(3, 1)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn f_of_empty_cover_is_mnp() {
        let inst = PartialPatternInstance::new(2, 4, 2, vec![]).unwrap();
        assert_eq!(f_value(&inst, &Cover::default()).unwrap(), 16);
    }

    #[test]
    fn f_with_left_column_zeroed() {
        let inst = aliased_example();
        let c = Cover::new([e(1, 4), e(2, 4)], []);
        assert_eq!(f_value(&inst, &c).unwrap(), 12);
        let all = Cover::new((1..=2).flat_map(|r| (1..=4).map(move |c| e(r, c))), []);
        assert_eq!(f_value(&inst, &all).unwrap(), 0);
        assert!(f_value(&inst, &Cover::new([e(3, 1)], [])).is_err());
    }

    #[test]
    fn cover_predicate() {
        let inst = aliased_example();
        assert!(is_cover(&inst, &Cover::new([e(1, 4), e(2, 4)], [])));
        assert!(is_cover(&inst, &Cover::new([], [e(3, 1), e(3, 2)])));
        assert!(!is_cover(&inst, &Cover::default()));
        assert!(!is_cover(&inst, &Cover::new([e(1, 4)], [e(3, 1)])));
    }

    #[test]
    fn solvers_on_aliased_example() {
        let inst = aliased_example();
        let exact = exact_max_f(&inst, &ExactOptions::default());
        assert_eq!(exact.f, 12);
        assert!(exact.exact);
        // left branch explored first
        assert_eq!(exact.cover, Cover::new([e(1, 4), e(2, 4)], []));
        let h = heuristic_cover(&inst);
        assert_eq!((h.f, h.cover.size(), h.matching_size), (12, 2, Some(2)));
        assert!(is_cover(&inst, &h.cover));
        assert_eq!(brute_force_max_f(&inst).unwrap().f, 12);
    }

    #[test]
    fn mixed_covers_are_worse() {
        let inst = aliased_example();
        let mixed = Cover::new([e(1, 4)], [e(3, 1), e(3, 2)]);
        assert!(is_cover(&inst, &mixed));
        assert_eq!(f_value(&inst, &mixed).unwrap(), 10);
    }

    #[test]
    fn empty_instance() {
        let inst = PartialPatternInstance::new(2, 4, 2, vec![]).unwrap();
        let exact = exact_max_f(&inst, &ExactOptions::default());
        assert_eq!((exact.f, exact.cover.size()), (16, 0));
        let h = heuristic_cover(&inst);
        assert_eq!((h.f, h.cover.size()), (16, 0));
        assert_eq!(brute_force_max_f(&inst).unwrap().f, 16);
    }

    #[test]
    fn node_limit_flags_inexact() {
        let inst = aliased_example();
        let r = exact_max_f(
            &inst,
            &ExactOptions {
                node_limit: Some(1),
                ..Default::default()
            },
        );
        assert!(!r.exact);
        assert!(is_cover(&inst, &r.cover));
    }

    #[test]
    fn instance_json() {
        let text = r#"{"m":2,"n":4,"p":2,"pairs":[[[1,4],[3,2]],[[1,4],[3,2]]]}"#;
        let inst: PartialPatternInstance = serde_json::from_str(text).unwrap();
        assert_eq!(inst.pairs().len(), 1);
        assert!(serde_json::from_str::<PartialPatternInstance>(
            r#"{"m":2,"n":4,"p":2,"pairs":[[[3,4],[3,2]]]}"#
        )
        .is_err());
        let report = exact_max_f(&aliased_example(), &ExactOptions::default());
        let v = serde_json::to_value(&report).unwrap();
        assert_eq!(v["f"], 12);
        assert_eq!(v["I"], serde_json::json!([[1, 4], [2, 4]]));
        assert_eq!(v["J"], serde_json::json!([]));
        assert_eq!(v["exact"], true);
    }

    #[test]
    fn oracle_size_guard() {
        let pairs = (1..=13).map(|c| (e(1, c), e(c, 1))).collect();
        let inst = PartialPatternInstance::new(1, 13, 1, pairs).unwrap();
        assert!(matches!(
            brute_force_max_f(&inst),
            Err(Error::OracleTooLarge { .. })
        ));
    }
}
