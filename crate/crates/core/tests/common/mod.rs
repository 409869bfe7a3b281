//! Independent oracles shared by the integration suites.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use pgmm::{
    AliasingTriple, EntryIndex, Group, GroupDescriptor, GroupElement, IndexingTriple,
    PartialPatternInstance, SimpleGraph,
};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name]
        .iter()
        .collect();
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn example_tpp() -> IndexingTriple {
    IndexingTriple::from_json_str(&fixture("d12_tpp.json")).unwrap()
}

pub fn example_aliased() -> IndexingTriple {
    IndexingTriple::from_json_str(&fixture("d12_aliased.json")).unwrap()
}

/// The four aliasing triples listed for the aliased D12 example.
pub fn example_aliasing_expected() -> BTreeSet<AliasingTriple> {
    [
        ((2, 4), (3, 2), (1, 1)),
        ((2, 4), (3, 1), (1, 2)),
        ((1, 4), (3, 2), (2, 1)),
        ((1, 4), (3, 1), (2, 2)),
    ]
    .into_iter()
    .map(|(a, b, c)| AliasingTriple::from_indices(a, b, c))
    .collect()
}

/// Dihedral element `y^s x^r` as the affine map `v ↦ (−1)^s (v + r)` on `Z_n`,
/// stored as its value table; composition applies the right factor first.
pub fn dihedral_as_map(n: u32, g: &GroupElement) -> Vec<u32> {
    let GroupElement::Dihedral { r, s } = g else {
        panic!("not dihedral: {g:?}")
    };
    (0..n)
        .map(|v| {
            let w = (v + r) % n;
            if *s == 1 {
                (n - w) % n
            } else {
                w
            }
        })
        .collect()
}

/// `(a, b) z^j` as a permutation of `base × {0, 1}`: `(a, b)` translates the two
/// copies by `a` and `b`, `z` swaps them. Points are encoded `side·|base| + index`.
pub fn wreath_as_permutation(moduli: &[u32], g: &GroupElement) -> Vec<usize> {
    let GroupElement::Wreath { a, b, j } = g else {
        panic!("not wreath: {g:?}")
    };
    let base: usize = moduli.iter().map(|&m| m as usize).product();
    let decode = |mut x: usize| -> Vec<u32> {
        let mut out = vec![0; moduli.len()];
        for (slot, &m) in out.iter_mut().zip(moduli).rev() {
            *slot = (x % m as usize) as u32;
            x /= m as usize;
        }
        out
    };
    let encode = |v: &[u32]| -> usize {
        v.iter()
            .zip(moduli)
            .fold(0, |acc, (&x, &m)| acc * m as usize + x as usize)
    };
    let translate = |x: usize, by: &[u32]| -> usize {
        let v: Vec<u32> = decode(x)
            .iter()
            .zip(by)
            .zip(moduli)
            .map(|((&x, &d), &m)| (x + d) % m)
            .collect();
        encode(&v)
    };
    (0..2 * base)
        .map(|p| {
            // z acts first, then the translation.
            let (mut side, idx) = (p / base, p % base);
            if *j == 1 {
                side ^= 1;
            }
            let moved = translate(idx, if side == 0 { a } else { b });
            side * base + moved
        })
        .collect()
}

/// `(f ∘ g)(x) = f(g(x))`.
pub fn compose<T: Copy + TryInto<usize>>(f: &[T], g: &[T]) -> Vec<T>
where
    <T as TryInto<usize>>::Error: std::fmt::Debug,
{
    g.iter().map(|&x| f[x.try_into().unwrap()]).collect()
}

/// Aliasing from the definition: all `(i,j,j',k,i',k')` with
/// `s_i⁻¹ t_j t_{j'}⁻¹ u_k = s_{i'}⁻¹ u_{k'}`, not all three pairs equal.
pub fn brute_force_aliasing(t: &IndexingTriple) -> BTreeSet<AliasingTriple> {
    let g = t.group();
    let inv = |x: &GroupElement| g.inverse(x).unwrap();
    let mul = |x: &GroupElement, y: &GroupElement| g.multiply(x, y).unwrap();
    let mut out = BTreeSet::new();
    for (i, s) in t.s().iter().enumerate() {
        for (j, tj) in t.t().iter().enumerate() {
            for (j2, tj2) in t.t().iter().enumerate() {
                for (k, u) in t.u().iter().enumerate() {
                    let lhs = mul(&mul(&mul(&inv(s), tj), &inv(tj2)), u);
                    for (i2, s2) in t.s().iter().enumerate() {
                        for (k2, u2) in t.u().iter().enumerate() {
                            if (i, j, k) == (i2, j2, k2) {
                                continue;
                            }
                            if lhs == mul(&inv(s2), u2) {
                                out.insert(AliasingTriple::from_indices(
                                    (i + 1, j + 1),
                                    (j2 + 1, k + 1),
                                    (i2 + 1, k2 + 1),
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Small groups used for random subset triples.
pub fn small_groups() -> Vec<Group> {
    let s3 = GroupDescriptor::Table {
        order: 6,
        // S3 as permutations of {0,1,2}: 0 = id, 1 = (012), 2 = (021), 3 = (01), 4 = (02), 5 = (12).
        mul: s3_table(),
    };
    vec![
        Group::cyclic_power(&[6]).unwrap(),
        Group::cyclic_power(&[2, 4]).unwrap(),
        Group::cyclic_power(&[3, 3]).unwrap(),
        Group::dihedral(4).unwrap(),
        Group::dihedral(5).unwrap(),
        Group::dihedral(6).unwrap(),
        Group::wreath_s2(&[2]).unwrap(),
        Group::wreath_s2(&[3]).unwrap(),
        Group::from_descriptor(s3).unwrap(),
    ]
}

/// Multiplication table of S3 computed from explicit permutations.
pub fn s3_table() -> Vec<Vec<usize>> {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [1, 2, 0],
        [2, 0, 1],
        [1, 0, 2],
        [2, 1, 0],
        [0, 2, 1],
    ];
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    perms
        .iter()
        .map(|a| {
            perms
                .iter()
                .map(|b| index([a[b[0]], a[b[1]], a[b[2]]]))
                .collect()
        })
        .collect()
}

pub fn random_subset<R: Rng>(
    elements: &[GroupElement],
    size: usize,
    rng: &mut R,
) -> Vec<GroupElement> {
    elements.choose_multiple(rng, size).cloned().collect()
}

pub fn random_triple<R: Rng>(group: &Group, max_size: usize, rng: &mut R) -> IndexingTriple {
    let elements = group.elements().unwrap();
    let max = max_size.min(elements.len());
    let mut pick = || {
        let size = rng.gen_range(1..=max);
        random_subset(&elements, size, rng)
    };
    let (s, t, u) = (pick(), pick(), pick());
    IndexingTriple::new(group.clone(), s, t, u).unwrap()
}

pub fn random_instance<R: Rng>(rng: &mut R) -> PartialPatternInstance {
    let (m, n, p) = (
        rng.gen_range(1..=4),
        rng.gen_range(1..=4),
        rng.gen_range(1..=4),
    );
    let count = rng.gen_range(0..=10);
    let pairs = (0..count)
        .map(|_| {
            (
                EntryIndex::new(rng.gen_range(1..=m), rng.gen_range(1..=n)),
                EntryIndex::new(rng.gen_range(1..=n), rng.gen_range(1..=p)),
            )
        })
        .collect();
    PartialPatternInstance::new(m, n, p, pairs).unwrap()
}

/// Minimum vertex cover of the bipartite constraint graph by subset search.
pub fn brute_force_min_vertex_cover(inst: &PartialPatternInstance) -> usize {
    let left: Vec<EntryIndex> = inst.left_entries().into_iter().collect();
    let right: Vec<EntryIndex> = inst.right_entries().into_iter().collect();
    let total = left.len() + right.len();
    assert!(total <= 20, "oracle too large");
    let edges: Vec<(usize, usize)> = inst
        .pairs()
        .iter()
        .map(|(a, b)| {
            (
                left.iter().position(|x| x == a).unwrap(),
                left.len() + right.iter().position(|x| x == b).unwrap(),
            )
        })
        .collect();
    (0u32..1 << total)
        .filter(|mask| {
            edges
                .iter()
                .all(|&(a, b)| mask & (1 << a) != 0 || mask & (1 << b) != 0)
        })
        .map(|mask| mask.count_ones() as usize)
        .min()
        .unwrap()
}

/// Maximum independent set size by subset search.
pub fn independence_number(g: &SimpleGraph) -> usize {
    let n = g.vertices();
    (0u32..1 << n)
        .filter(|mask| {
            g.edges()
                .iter()
                .all(|&(a, b)| mask & (1 << (a - 1)) == 0 || mask & (1 << (b - 1)) == 0)
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap()
}

pub fn random_graph<R: Rng>(vertices: usize, density: f64, rng: &mut R) -> SimpleGraph {
    let mut edges = Vec::new();
    for a in 1..=vertices {
        for b in a + 1..=vertices {
            if rng.gen_bool(density) {
                edges.push((a, b));
            }
        }
    }
    SimpleGraph::new(vertices, edges).unwrap()
}

/// Maximum matching of the conflict graph by simple augmenting paths (Kuhn).
pub fn kuhn_matching_size(inst: &PartialPatternInstance) -> usize {
    let left: Vec<EntryIndex> = inst.left_entries().into_iter().collect();
    let right: Vec<EntryIndex> = inst.right_entries().into_iter().collect();
    let adj: Vec<Vec<usize>> = left
        .iter()
        .map(|a| {
            inst.pairs()
                .iter()
                .filter(|(x, _)| x == a)
                .map(|(_, b)| right.iter().position(|y| y == b).unwrap())
                .collect()
        })
        .collect();
    fn try_augment(
        u: usize,
        adj: &[Vec<usize>],
        seen: &mut [bool],
        owner: &mut [Option<usize>],
    ) -> bool {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                if owner[v].is_none_or(|w| try_augment(w, adj, seen, owner)) {
                    owner[v] = Some(u);
                    return true;
                }
            }
        }
        false
    }
    let mut owner = vec![None; right.len()];
    (0..left.len())
        .filter(|&u| try_augment(u, &adj, &mut vec![false; right.len()], &mut owner))
        .count()
}
