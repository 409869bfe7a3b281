//! The wreath-product construction over `H = Cₙ³`, `G = H ≀ S₂`.
//!
//! `Sᵢ = {(a, b)zʲ : a ∈ Hᵢ \ {e}, b ∈ H_{i+1}, j ∈ {0,1}}` with indices mod 3
//! gives three sets with the triple product property. The relaxed variant
//! appends the identity to each set; it aliases, but zeroing only entries in
//! the added identity columns recovers a strictly larger partial product.

use std::collections::BTreeSet;

use serde::Serialize;
use smallvec::smallvec;

use crate::cover::{f_value, is_cover, Cover, PartialPatternInstance};
use crate::error::{Error, Result};
use crate::group::{Group, GroupElement, Residues};
use crate::indexing::{
    enumerate_aliasing, AliasingSet, AliasingTriple, EntryIndex, IndexingTriple, WorkBudget,
};

#[derive(Clone, Debug)]
pub struct WreathConstruction {
    n: u32,
    relaxed: bool,
    triple: IndexingTriple,
}

impl WreathConstruction {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn relaxed(&self) -> bool {
        self.relaxed
    }

    pub fn triple(&self) -> &IndexingTriple {
        &self.triple
    }

    /// Common size of the three sets.
    pub fn set_size(&self) -> usize {
        self.triple.s().len()
    }

    /// 1-based positions of the identity in `S`, `T`, `U` (relaxed only).
    fn identity_positions(&self) -> Option<(usize, usize, usize)> {
        let g = self.triple.group();
        let find = |set: &[GroupElement]| set.iter().position(|x| g.is_identity(x)).map(|p| p + 1);
        Some((
            find(self.triple.s())?,
            find(self.triple.t())?,
            find(self.triple.u())?,
        ))
    }

    /// Whether `entry` of the left (`|S|×|T|`) or right (`|T|×|U|`) factor sits in
    /// a row or column indexed by an appended identity element.
    pub fn in_added_lines(&self, entry: EntryIndex, right_factor: bool) -> bool {
        let Some((es, et, eu)) = self.identity_positions() else {
            return false;
        };
        if right_factor {
            entry.row == et || entry.col == eu
        } else {
            entry.row == es || entry.col == et
        }
    }
}

fn unit(coordinate: usize, value: u32) -> Residues {
    let mut v: Residues = smallvec![0; 3];
    v[coordinate] = value;
    v
}

/// Builds `S₁, S₂, S₃` (plus the identity when `relaxed`), each sorted
/// lexicographically on `(a, b, j)` with the identity appended last.
pub fn build_sets(n: u32, relaxed: bool) -> Result<WreathConstruction> {
    if n < 2 {
        return Err(Error::Construction(format!(
            "n must be at least 2, got {n}"
        )));
    }
    let group = Group::wreath_s2(&[n, n, n])?;
    let set = |i: usize| -> Vec<GroupElement> {
        let mut out = Vec::with_capacity(2 * n as usize * (n as usize - 1) + 1);
        for r in 1..n {
            for s in 0..n {
                for j in 0..2 {
                    out.push(GroupElement::Wreath {
                        a: unit(i, r),
                        b: unit((i + 1) % 3, s),
                        j,
                    });
                }
            }
        }
        out.sort();
        if relaxed {
            out.push(group.identity());
        }
        out
    };
    let (s, t, u) = (set(0), set(1), set(2));
    let triple = IndexingTriple::new(group, s, t, u)?;
    Ok(WreathConstruction { n, relaxed, triple })
}

/// `8n³(n−1)³` for the original sets; `q³ + q² + q(q − (n−1)² + 1)` with
/// `q = 2n(n−1)` for the relaxed sets.
pub fn formula_f(n: u64, relaxed: bool) -> Result<u64> {
    if n < 2 {
        return Err(Error::Construction(format!(
            "n must be at least 2, got {n}"
        )));
    }
    let q = 2 * n * (n - 1);
    let cube = |x: u64| x.checked_mul(x).and_then(|y| y.checked_mul(x));
    let value = if relaxed {
        let tail = q.checked_mul(q - (n - 1) * (n - 1) + 1);
        cube(q)
            .zip(q.checked_mul(q))
            .zip(tail)
            .and_then(|((a, b), c)| a.checked_add(b)?.checked_add(c))
    } else {
        cube(q)
    };
    value.ok_or(Error::Overflow)
}

/// Relaxed-construction aliasing split by where it lands and how it arises,
/// together with the entries that cover each class.
#[derive(Clone, Debug, Serialize)]
pub struct AliasingTaxonomy {
    /// Product row not indexed by the identity.
    pub bottom: Vec<AliasingTriple>,
    /// Identity product row, left entry in the identity column of L.
    pub top_easy: Vec<AliasingTriple>,
    /// Identity product row, everything else.
    pub top_hard: Vec<AliasingTriple>,
    /// Entries of R's identity column covering the bottom class.
    pub bottom_cover: BTreeSet<EntryIndex>,
    /// Entries of L's identity column covering the top-easy class.
    pub top_easy_cover: BTreeSet<EntryIndex>,
    /// Further entries of R's identity column needed for the top-hard class.
    pub top_hard_extra: BTreeSet<EntryIndex>,
}

impl AliasingTaxonomy {
    pub fn len(&self) -> usize {
        self.bottom.len() + self.top_easy.len() + self.top_hard.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn violated(claim: impl Into<String>, triple: &AliasingTriple) -> Error {
    Error::ClaimViolated {
        claim: claim.into(),
        triple: *triple,
    }
}

fn relaxed_aliasing(
    c: &WreathConstruction,
    budget: &WorkBudget,
) -> Result<(AliasingSet, (usize, usize, usize))> {
    let ids =
        match (c.relaxed, c.identity_positions()) {
            (true, Some(ids)) => ids,
            _ => return Err(Error::Construction(
                "the original sets have the triple product property; only the relaxed sets alias"
                    .into(),
            )),
        };
    let set = enumerate_aliasing(&c.triple, budget)?;
    if set.is_empty() {
        return Err(Error::Construction(
            "relaxed sets produced no aliasing".into(),
        ));
    }
    Ok((set, ids))
}

/// Splits the relaxed aliasing into bottom, top-easy and top-hard classes and
/// checks the covering claims for each class.
pub fn classify_aliasing(c: &WreathConstruction, budget: &WorkBudget) -> Result<AliasingTaxonomy> {
    let (set, (es, et, eu)) = relaxed_aliasing(c, budget)?;
    let n = u64::from(c.n);
    let small = ((n - 1) * (n - 1)) as usize;
    let q = (2 * n * (n - 1)) as usize;

    let mut tax = AliasingTaxonomy {
        bottom: Vec::new(),
        top_easy: Vec::new(),
        top_hard: Vec::new(),
        bottom_cover: BTreeSet::new(),
        top_easy_cover: BTreeSet::new(),
        top_hard_extra: BTreeSet::new(),
    };
    for a in set.triples() {
        if a.product.row != es {
            tax.bottom.push(*a);
        } else if a.left.col == et {
            tax.top_easy.push(*a);
        } else {
            tax.top_hard.push(*a);
        }
    }

    for a in &tax.bottom {
        if a.right.col != eu {
            return Err(violated(
                "bottom aliasing is covered by R's identity column",
                a,
            ));
        }
        tax.bottom_cover.insert(a.right);
    }
    if tax.bottom_cover.len() > small {
        return Err(Error::Construction(format!(
            "bottom aliasing needs {} entries, more than (n-1)^2 = {small}",
            tax.bottom_cover.len()
        )));
    }
    tax.top_easy_cover = tax.top_easy.iter().map(|a| a.left).collect();
    if tax.top_easy_cover.len() > small {
        return Err(Error::Construction(format!(
            "top-easy aliasing needs {} entries, more than (n-1)^2 = {small}",
            tax.top_easy_cover.len()
        )));
    }
    for a in &tax.top_hard {
        if tax.top_easy_cover.contains(&a.left) {
            continue;
        }
        if a.right.col != eu {
            return Err(violated(
                "top-hard aliasing is covered by the top-easy entries and R's identity column",
                a,
            ));
        }
        tax.top_hard_extra.insert(a.right);
    }
    if tax.top_hard_extra.len() > q {
        return Err(Error::Construction(format!(
            "top-hard aliasing needs {} extra entries, more than 2n(n-1) = {q}",
            tax.top_hard_extra.len()
        )));
    }
    Ok(tax)
}

#[derive(Clone, Debug, Serialize)]
pub struct PaperCover {
    pub cover: Cover,
    pub f: u64,
    #[serde(skip)]
    pub instance: PartialPatternInstance,
}

/// The cover zeroing all of R's identity column and the fewest entries of L's
/// identity column that handle what is left.
pub fn paper_cover(c: &WreathConstruction, budget: &WorkBudget) -> Result<PaperCover> {
    let (set, (_, et, eu)) = relaxed_aliasing(c, budget)?;
    let n = u64::from(c.n);
    let instance = PartialPatternInstance::from_aliasing(&set);
    let t_len = c.triple.t().len();

    let right: BTreeSet<EntryIndex> = (1..=t_len).map(|j| EntryIndex::new(j, eu)).collect();
    let mut left = BTreeSet::new();
    for a in set.triples() {
        if right.contains(&a.right) {
            continue;
        }
        if a.left.col != et {
            return Err(violated(
                "left-over aliasing lies in L's identity column",
                a,
            ));
        }
        left.insert(a.left);
    }
    let small = ((n - 1) * (n - 1)) as usize;
    if left.len() > small {
        return Err(Error::Construction(format!(
            "cover needs {} entries of L's identity column, more than (n-1)^2 = {small}",
            left.len()
        )));
    }
    let cover = Cover { left, right };
    if !is_cover(&instance, &cover) {
        return Err(Error::Construction(
            "computed pattern is not a cover".into(),
        ));
    }
    let f = f_value(&instance, &cover)?;
    let bound = formula_f(n, true)?;
    if f < bound {
        return Err(Error::Construction(format!(
            "cover reaches f = {f}, below the closed form {bound}"
        )));
    }
    Ok(PaperCover { cover, f, instance })
}
