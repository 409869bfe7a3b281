//! The group-algebra multiplication algorithm on exact integer matrices.
//!
//! `M` (`|S|×|T|`) becomes `f_M = Σ M_{ij} s_i⁻¹t_j` and `N` (`|T|×|U|`)
//! becomes `f_N = Σ N_{jk} t_j⁻¹u_k`; entry `(i,k)` of the result is the
//! coefficient of `s_i⁻¹u_k` in `f_M·f_N`. All arithmetic is overflow-checked.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Group, GroupElement};
use crate::indexing::{AliasingSet, EntryIndex, IndexingTriple};

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix", into = "RawMatrix")]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct RawMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<i64>>,
}

impl TryFrom<RawMatrix> for IntMatrix {
    type Error = Error;

    fn try_from(raw: RawMatrix) -> Result<Self> {
        let m = IntMatrix::from_rows(raw.data)?;
        if (m.rows, m.cols) != (raw.rows, raw.cols) {
            return Err(Error::DimensionMismatch(format!(
                "declared {}x{}, data is {}x{}",
                raw.rows, raw.cols, m.rows, m.cols
            )));
        }
        Ok(m)
    }
}

impl From<IntMatrix> for RawMatrix {
    fn from(m: IntMatrix) -> Self {
        RawMatrix {
            rows: m.rows,
            cols: m.cols,
            data: m.to_rows(),
        }
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 || rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch(
                "matrix rows must be non-empty and of equal length".into(),
            ));
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Entries drawn uniformly from `lo..=hi`.
    pub fn random<R: Rng + ?Sized>(
        rows: usize,
        cols: usize,
        lo: i64,
        hi: i64,
        rng: &mut R,
    ) -> Self {
        let mut m = Self::zeros(rows, cols);
        m.data.iter_mut().for_each(|x| *x = rng.gen_range(lo..=hi));
        m
    }

    /// Matrix with a single `1` at the 1-based position `at`.
    pub fn unit(rows: usize, cols: usize, at: EntryIndex) -> Self {
        let mut m = Self::zeros(rows, cols);
        m[at] = 1;
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.cols).map(<[i64]>::to_vec).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Sets the given 1-based entries to zero ("realizes" a zero pattern).
    pub fn zero_entries<'a>(&mut self, entries: impl IntoIterator<Item = &'a EntryIndex>) {
        for e in entries {
            self[*e] = 0;
        }
    }

    pub fn checked_mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..rhs.cols {
                let mut acc = 0i64;
                for j in 0..self.cols {
                    let term = self.data[i * self.cols + j]
                        .checked_mul(rhs.data[j * rhs.cols + k])
                        .ok_or(Error::Overflow)?;
                    acc = acc.checked_add(term).ok_or(Error::Overflow)?;
                }
                out.data[i * rhs.cols + k] = acc;
            }
        }
        Ok(out)
    }

    fn zip_with(&self, rhs: &IntMatrix, op: fn(i64, i64) -> Option<i64>) -> Result<IntMatrix> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| op(*a, *b).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn checked_add(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        self.zip_with(rhs, i64::checked_add)
    }

    pub fn checked_sub(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        self.zip_with(rhs, i64::checked_sub)
    }

    pub fn checked_scale(&self, k: i64) -> Result<IntMatrix> {
        let data = self
            .data
            .iter()
            .map(|x| x.checked_mul(k).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }
}

impl std::ops::Index<EntryIndex> for IntMatrix {
    type Output = i64;

    fn index(&self, e: EntryIndex) -> &i64 {
        assert!(e.in_bounds(self.rows, self.cols), "index {e} out of range");
        &self.data[(e.row - 1) * self.cols + e.col - 1]
    }
}

impl std::ops::IndexMut<EntryIndex> for IntMatrix {
    fn index_mut(&mut self, e: EntryIndex) -> &mut i64 {
        assert!(e.in_bounds(self.rows, self.cols), "index {e} out of range");
        &mut self.data[(e.row - 1) * self.cols + e.col - 1]
    }
}

impl std::fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let width = self
            .data
            .iter()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        for row in self.data.chunks(self.cols) {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
            writeln!(f, "[ {} ]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Finitely supported integer combination of group elements.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    coeffs: BTreeMap<GroupElement, i64>,
}

impl GroupAlgebraElement {
    pub fn delta(g: GroupElement) -> Self {
        let mut a = Self::default();
        a.coeffs.insert(g, 1);
        a
    }

    pub fn add_term(&mut self, g: GroupElement, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        match self.coeffs.entry(g) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().checked_add(c).ok_or(Error::Overflow)?;
                if sum == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    pub fn coefficient(&self, g: &GroupElement) -> i64 {
        self.coeffs.get(g).copied().unwrap_or(0)
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GroupElement, i64)> {
        self.coeffs.iter().map(|(g, c)| (g, *c))
    }
}

fn check_shapes(m: &IntMatrix, n: &IntMatrix, dims: (usize, usize, usize)) -> Result<()> {
    let (a, b, c) = dims;
    if (m.rows, m.cols) != (a, b) || (n.rows, n.cols) != (b, c) {
        return Err(Error::DimensionMismatch(format!(
            "expected {a}x{b} and {b}x{c}, got {}x{} and {}x{}",
            m.rows, m.cols, n.rows, n.cols
        )));
    }
    Ok(())
}

/// `(f_M, f_N)`; coefficients of coinciding group elements accumulate.
pub fn embed(
    m: &IntMatrix,
    n: &IntMatrix,
    triple: &IndexingTriple,
) -> Result<(GroupAlgebraElement, GroupAlgebraElement)> {
    check_shapes(m, n, triple.dims())?;
    let g = triple.group();
    let mut f_m = GroupAlgebraElement::default();
    for (i, s) in triple.s().iter().enumerate() {
        let s_inv = g.inv(s);
        for (j, t) in triple.t().iter().enumerate() {
            f_m.add_term(g.op(&s_inv, t), m.data[i * m.cols + j])?;
        }
    }
    let mut f_n = GroupAlgebraElement::default();
    for (j, t) in triple.t().iter().enumerate() {
        let t_inv = g.inv(t);
        for (k, u) in triple.u().iter().enumerate() {
            f_n.add_term(g.op(&t_inv, u), n.data[j * n.cols + k])?;
        }
    }
    Ok((f_m, f_n))
}

/// Product in the group algebra: naive double loop over the supports.
pub fn convolve(
    group: &Group,
    a: &GroupAlgebraElement,
    b: &GroupAlgebraElement,
) -> Result<GroupAlgebraElement> {
    let mut out = GroupAlgebraElement::default();
    for (x, ca) in a.iter() {
        for (y, cb) in b.iter() {
            let c = ca.checked_mul(cb).ok_or(Error::Overflow)?;
            out.add_term(group.multiply(x, y)?, c)?;
        }
    }
    Ok(out)
}

/// Reads entry `(i,k)` as the coefficient of `s_i⁻¹u_k` in `f_M·f_N`.
///
/// When several `(i,k)` share the same `s_i⁻¹u_k` each reads the shared
/// coefficient.
pub fn cu_multiply(m: &IntMatrix, n: &IntMatrix, triple: &IndexingTriple) -> Result<IntMatrix> {
    let (f_m, f_n) = embed(m, n, triple)?;
    let g = triple.group();
    let f_p = convolve(g, &f_m, &f_n)?;
    let mut out = IntMatrix::zeros(m.rows, n.cols);
    for (i, s) in triple.s().iter().enumerate() {
        let s_inv = g.inv(s);
        for (k, u) in triple.u().iter().enumerate() {
            out.data[i * out.cols + k] = f_p.coefficient(&g.op(&s_inv, u));
        }
    }
    Ok(out)
}

/// `M·N` plus, for each aliasing triple `((i,j),(j',k),(i',k'))`, the
/// spurious term `M_{ij}·N_{j'k}` at `(i',k')`.
pub fn predicted_output(m: &IntMatrix, n: &IntMatrix, aliasing: &AliasingSet) -> Result<IntMatrix> {
    check_shapes(m, n, aliasing.dims())?;
    let mut out = m.checked_mul(n)?;
    for a in aliasing.triples() {
        let term = m[a.left].checked_mul(n[a.right]).ok_or(Error::Overflow)?;
        out[a.product] = out[a.product].checked_add(term).ok_or(Error::Overflow)?;
    }
    Ok(out)
}
