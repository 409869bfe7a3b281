//! Finite groups in the families used by the constructions: explicit
//! multiplication tables, direct powers of cyclic groups, dihedral groups and
//! wreath products `H ≀ S₂` over an abelian base.
//!
//! Structured families never enumerate their elements unless asked to, so a
//! group such as `(C₁₇)³ ≀ S₂` (order 48,275,138) is as cheap to hold as `D₁₂`.

use std::fmt;
use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Residue vector of an element of `C_{n1} × … × C_{nk}`.
pub type Residues = SmallVec<[u32; 4]>;

/// Default ceiling on the order of a group whose elements may be listed.
pub const DEFAULT_ENUMERATION_THRESHOLD: u64 = 1_000_000;

/// Group element in the canonical encoding of its family.
///
/// Dihedral elements are `y^s x^r`; wreath elements are `(a, b) z^j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    Table(u32),
    Cyclic(Residues),
    Dihedral { r: u32, s: u8 },
    Wreath { a: Residues, b: Residues, j: u8 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupDescriptor {
    Table { order: usize, mul: Vec<Vec<usize>> },
    CyclicPower { moduli: Vec<u32> },
    Dihedral { n: u32 },
    WreathS2 { base: Box<GroupDescriptor> },
}

impl GroupDescriptor {
    pub fn family(&self) -> &'static str {
        match self {
            GroupDescriptor::Table { .. } => "table",
            GroupDescriptor::CyclicPower { .. } => "cyclic_power",
            GroupDescriptor::Dihedral { .. } => "dihedral",
            GroupDescriptor::WreathS2 { .. } => "wreath_s2",
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDescriptor::Table { order, .. } => write!(f, "table group of order {order}"),
            GroupDescriptor::CyclicPower { moduli } => {
                let parts: Vec<String> = moduli.iter().map(|m| format!("C{m}")).collect();
                write!(f, "{}", parts.join("x"))
            }
            GroupDescriptor::Dihedral { n } => write!(f, "D{}", 2 * u64::from(*n)),
            GroupDescriptor::WreathS2 { base } => write!(f, "({base}) wr S2"),
        }
    }
}

#[derive(Debug)]
struct Table {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    identity: u32,
}

#[derive(Clone, Debug)]
enum Repr {
    Table(Arc<Table>),
    Cyclic(Vec<u32>),
    Dihedral(u32),
    Wreath(Vec<u32>),
}

/// A finite group. Cloning is cheap; table data is shared.
#[derive(Clone, Debug)]
pub struct Group {
    descriptor: GroupDescriptor,
    order: u64,
    repr: Repr,
    enumeration_threshold: u64,
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.descriptor == other.descriptor
    }
}

impl Eq for Group {}

impl Group {
    pub fn from_descriptor(descriptor: GroupDescriptor) -> Result<Self> {
        let (order, repr) = match &descriptor {
            GroupDescriptor::Table { order, mul } => {
                let table = validate_table(*order, mul)?;
                (*order as u64, Repr::Table(Arc::new(table)))
            }
            GroupDescriptor::CyclicPower { moduli } => {
                (cyclic_order(moduli)?, Repr::Cyclic(moduli.clone()))
            }
            GroupDescriptor::Dihedral { n } => {
                if *n == 0 {
                    return Err(Error::InvalidDescriptor(
                        "dihedral n must be at least 1".into(),
                    ));
                }
                (2 * u64::from(*n), Repr::Dihedral(*n))
            }
            GroupDescriptor::WreathS2 { base } => match base.as_ref() {
                GroupDescriptor::CyclicPower { moduli } => {
                    let h = cyclic_order(moduli)?;
                    let order = h
                        .checked_mul(h)
                        .and_then(|x| x.checked_mul(2))
                        .ok_or_else(|| Error::InvalidDescriptor("wreath order overflows".into()))?;
                    (order, Repr::Wreath(moduli.clone()))
                }
                other => {
                    return Err(Error::InvalidDescriptor(format!(
                        "wreath_s2 base must be cyclic_power, got {}",
                        other.family()
                    )))
                }
            },
        };
        Ok(Group {
            descriptor,
            order,
            repr,
            enumeration_threshold: DEFAULT_ENUMERATION_THRESHOLD,
        })
    }

    pub fn cyclic_power(moduli: &[u32]) -> Result<Self> {
        Self::from_descriptor(GroupDescriptor::CyclicPower {
            moduli: moduli.to_vec(),
        })
    }

    /// Dihedral group of order `2n`.
    pub fn dihedral(n: u32) -> Result<Self> {
        Self::from_descriptor(GroupDescriptor::Dihedral { n })
    }

    /// `(C_{m1} × … × C_{mk}) ≀ S₂`.
    pub fn wreath_s2(base_moduli: &[u32]) -> Result<Self> {
        Self::from_descriptor(GroupDescriptor::WreathS2 {
            base: Box::new(GroupDescriptor::CyclicPower {
                moduli: base_moduli.to_vec(),
            }),
        })
    }

    pub fn with_enumeration_threshold(mut self, threshold: u64) -> Self {
        self.enumeration_threshold = threshold;
        self
    }

    pub fn descriptor(&self) -> &GroupDescriptor {
        &self.descriptor
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn identity(&self) -> GroupElement {
        match &self.repr {
            Repr::Table(t) => GroupElement::Table(t.identity),
            Repr::Cyclic(m) => GroupElement::Cyclic(zeros(m.len())),
            Repr::Dihedral(_) => GroupElement::Dihedral { r: 0, s: 0 },
            Repr::Wreath(m) => GroupElement::Wreath {
                a: zeros(m.len()),
                b: zeros(m.len()),
                j: 0,
            },
        }
    }

    pub fn is_identity(&self, g: &GroupElement) -> bool {
        match (g, &self.repr) {
            (GroupElement::Table(x), Repr::Table(t)) => *x == t.identity,
            (GroupElement::Cyclic(r), _) => r.iter().all(|&x| x == 0),
            (GroupElement::Dihedral { r, s }, _) => *r == 0 && *s == 0,
            (GroupElement::Wreath { a, b, j }, _) => {
                *j == 0 && a.iter().all(|&x| x == 0) && b.iter().all(|&x| x == 0)
            }
            _ => false,
        }
    }

    /// Whether `g` is a well-formed element of this group.
    pub fn contains(&self, g: &GroupElement) -> bool {
        match (g, &self.repr) {
            (GroupElement::Table(x), Repr::Table(t)) => (*x as usize) < t.order,
            (GroupElement::Cyclic(r), Repr::Cyclic(m)) => residues_ok(r, m),
            (GroupElement::Dihedral { r, s }, Repr::Dihedral(n)) => r < n && *s <= 1,
            (GroupElement::Wreath { a, b, j }, Repr::Wreath(m)) => {
                *j <= 1 && residues_ok(a, m) && residues_ok(b, m)
            }
            _ => false,
        }
    }

    fn check(&self, g: &GroupElement) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::ForeignElement {
                element: format!("{g:?}"),
                group: self.descriptor.to_string(),
            })
        }
    }

    pub fn multiply(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        self.check(h)?;
        Ok(self.op(g, h))
    }

    pub fn inverse(&self, g: &GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        Ok(self.inv(g))
    }

    /// Product of a sequence of elements, left to right.
    pub fn product<'a, I>(&self, elements: I) -> Result<GroupElement>
    where
        I: IntoIterator<Item = &'a GroupElement>,
    {
        let mut acc = self.identity();
        for g in elements {
            self.check(g)?;
            acc = self.op(&acc, g);
        }
        Ok(acc)
    }

    /// Unchecked product; both arguments must satisfy [`Group::contains`].
    pub(crate) fn op(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        match (&self.repr, g, h) {
            (Repr::Table(t), GroupElement::Table(x), GroupElement::Table(y)) => {
                GroupElement::Table(t.mul[*x as usize * t.order + *y as usize])
            }
            (Repr::Cyclic(m), GroupElement::Cyclic(x), GroupElement::Cyclic(y)) => {
                GroupElement::Cyclic(add_residues(x, y, m))
            }
            (
                Repr::Dihedral(n),
                GroupElement::Dihedral { r: r1, s: s1 },
                GroupElement::Dihedral { r: r2, s: s2 },
            ) => {
                // x^r1 y^s2 = y^s2 x^{(-1)^s2 r1}
                let r1 = if *s2 == 1 { (n - r1) % n } else { *r1 };
                GroupElement::Dihedral {
                    r: ((u64::from(r1) + u64::from(*r2)) % u64::from(*n)) as u32,
                    s: s1 ^ s2,
                }
            }
            (
                Repr::Wreath(m),
                GroupElement::Wreath { a, b, j },
                GroupElement::Wreath { a: c, b: d, j: k },
            ) => {
                let (c, d) = if *j == 1 { (d, c) } else { (c, d) };
                GroupElement::Wreath {
                    a: add_residues(a, c, m),
                    b: add_residues(b, d, m),
                    j: j ^ k,
                }
            }
            _ => panic!("element family does not match group {}", self.descriptor),
        }
    }

    pub(crate) fn inv(&self, g: &GroupElement) -> GroupElement {
        match (&self.repr, g) {
            (Repr::Table(t), GroupElement::Table(x)) => GroupElement::Table(t.inv[*x as usize]),
            (Repr::Cyclic(m), GroupElement::Cyclic(x)) => GroupElement::Cyclic(neg_residues(x, m)),
            (Repr::Dihedral(n), GroupElement::Dihedral { r, s }) => {
                if *s == 1 {
                    // reflections are involutions
                    g.clone()
                } else {
                    GroupElement::Dihedral {
                        r: (n - r) % n,
                        s: 0,
                    }
                }
            }
            (Repr::Wreath(m), GroupElement::Wreath { a, b, j }) => {
                let (na, nb) = (neg_residues(a, m), neg_residues(b, m));
                let (na, nb) = if *j == 1 { (nb, na) } else { (na, nb) };
                GroupElement::Wreath {
                    a: na,
                    b: nb,
                    j: *j,
                }
            }
            _ => panic!("element family does not match group {}", self.descriptor),
        }
    }

    /// All elements in encoding order. Refused above the enumeration threshold.
    pub fn elements(&self) -> Result<Vec<GroupElement>> {
        if self.order > self.enumeration_threshold {
            return Err(Error::TooLargeToEnumerate {
                order: self.order,
                threshold: self.enumeration_threshold,
            });
        }
        Ok(match &self.repr {
            Repr::Table(t) => (0..t.order as u32).map(GroupElement::Table).collect(),
            Repr::Cyclic(m) => all_residues(m)
                .into_iter()
                .map(GroupElement::Cyclic)
                .collect(),
            Repr::Dihedral(n) => (0..2u8)
                .flat_map(|s| (0..*n).map(move |r| GroupElement::Dihedral { r, s }))
                .collect(),
            Repr::Wreath(m) => {
                let base = all_residues(m);
                let mut out = Vec::with_capacity(self.order as usize);
                for a in &base {
                    for b in &base {
                        for j in 0..2 {
                            out.push(GroupElement::Wreath {
                                a: a.clone(),
                                b: b.clone(),
                                j,
                            });
                        }
                    }
                }
                out
            }
        })
    }

    /// Uniformly random element.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> GroupElement {
        let residues = |rng: &mut R, m: &[u32]| -> Residues {
            m.iter().map(|&k| rng.gen_range(0..k)).collect()
        };
        match &self.repr {
            Repr::Table(t) => GroupElement::Table(rng.gen_range(0..t.order as u32)),
            Repr::Cyclic(m) => GroupElement::Cyclic(residues(rng, m)),
            Repr::Dihedral(n) => GroupElement::Dihedral {
                r: rng.gen_range(0..*n),
                s: rng.gen_range(0..2),
            },
            Repr::Wreath(m) => GroupElement::Wreath {
                a: residues(rng, m),
                b: residues(rng, m),
                j: rng.gen_range(0..2),
            },
        }
    }

    /// Parse an element written in the family's text notation.
    ///
    /// * dihedral: words in `x` and `y` with optional integer exponents
    ///   (`yx2`, `xy`, `x^-1 y`), normalized with `xy = yx⁻¹`;
    /// * cyclic power: `(r1,…,rk)`;
    /// * wreath: `((a1,…),(b1,…))z^j`, the `z^j` suffix optional for `j = 0`;
    /// * table: the element index.
    ///
    /// `1` and `e` denote the identity in every structured family, `e` in tables.
    pub fn parse_element(&self, text: &str) -> Result<GroupElement> {
        let compact: String = text
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '*' && *c != '·')
            .collect();
        let fail = |reason: &str| Error::ParseElement {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        if compact.is_empty() {
            return Err(fail("empty"));
        }
        if compact == "e" {
            return Ok(self.identity());
        }
        let g = match &self.repr {
            Repr::Table(_) => {
                let idx: u32 = compact
                    .parse()
                    .map_err(|_| fail("expected an element index"))?;
                GroupElement::Table(idx)
            }
            _ if compact == "1" => self.identity(),
            Repr::Dihedral(_) => {
                if compact.starts_with('[') || compact.starts_with('(') {
                    let v = parse_tuple(&compact).map_err(|r| fail(&r))?;
                    match v.as_slice() {
                        [r, s] => GroupElement::Dihedral {
                            r: to_u32(*r).map_err(|r| fail(&r))?,
                            s: to_u32(*s).map_err(|r| fail(&r))? as u8,
                        },
                        _ => return Err(fail("dihedral tuples are [r, s]")),
                    }
                } else {
                    self.parse_dihedral_word(&compact).map_err(|r| fail(&r))?
                }
            }
            Repr::Cyclic(_) => {
                let v = parse_tuple(&compact).map_err(|r| fail(&r))?;
                GroupElement::Cyclic(to_residues(&v).map_err(|r| fail(&r))?)
            }
            Repr::Wreath(_) => parse_wreath(&compact).map_err(|r| fail(&r))?,
        };
        if !self.contains(&g) {
            return Err(fail("component out of range"));
        }
        Ok(g)
    }

    fn parse_dihedral_word(&self, word: &str) -> std::result::Result<GroupElement, String> {
        let n = match self.repr {
            Repr::Dihedral(n) => i64::from(n),
            _ => unreachable!(),
        };
        let x = GroupElement::Dihedral { r: 1, s: 0 };
        let y = GroupElement::Dihedral { r: 0, s: 1 };
        let mut acc = self.identity();
        let chars: Vec<char> = word.chars().collect();
        let mut pos = 0;
        while pos < chars.len() {
            let generator = match chars[pos] {
                'x' => &x,
                'y' => &y,
                c => return Err(format!("unexpected character {c:?}")),
            };
            pos += 1;
            if pos < chars.len() && chars[pos] == '^' {
                pos += 1;
            }
            let start = pos;
            if pos < chars.len() && chars[pos] == '-' {
                pos += 1;
            }
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                pos += 1;
            }
            let exponent: i64 = if start == pos {
                1
            } else {
                chars[start..pos]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| "bad exponent".to_string())?
            };
            let order = if generator == &y { 2 } else { n };
            let e = exponent.rem_euclid(order);
            for _ in 0..e {
                acc = self.op(&acc, generator);
            }
        }
        Ok(acc)
    }

    pub fn format_element(&self, g: &GroupElement) -> String {
        match g {
            GroupElement::Table(x) => x.to_string(),
            GroupElement::Cyclic(r) => format_tuple(r),
            GroupElement::Dihedral { r, s } => {
                let mut out = String::new();
                if *s == 1 {
                    out.push('y');
                }
                if *r == 1 {
                    out.push('x');
                } else if *r > 1 {
                    out.push_str(&format!("x{r}"));
                }
                if out.is_empty() {
                    out.push('1');
                }
                out
            }
            GroupElement::Wreath { a, b, j } => {
                let body = format!("({},{})", format_tuple(a), format_tuple(b));
                if *j == 1 {
                    body + "z^1"
                } else {
                    body
                }
            }
        }
    }

    /// Read an element from its JSON form. Strings go through
    /// [`Group::parse_element`].
    pub fn element_from_json(&self, value: &Value) -> Result<GroupElement> {
        let fail = |reason: &str| Error::ParseElement {
            text: value.to_string(),
            reason: reason.to_string(),
        };
        if let Value::String(s) = value {
            return self.parse_element(s);
        }
        let uint = |v: &Value| -> Result<u32> {
            v.as_u64()
                .and_then(|x| u32::try_from(x).ok())
                .ok_or_else(|| fail("expected a non-negative integer"))
        };
        let residues = |v: &Value| -> Result<Residues> {
            v.as_array()
                .ok_or_else(|| fail("expected an integer array"))?
                .iter()
                .map(uint)
                .collect()
        };
        let g = match &self.repr {
            Repr::Table(_) => GroupElement::Table(uint(value)?),
            Repr::Cyclic(_) => GroupElement::Cyclic(residues(value)?),
            Repr::Dihedral(_) => match value.as_array().map(Vec::as_slice) {
                Some([r, s]) => GroupElement::Dihedral {
                    r: uint(r)?,
                    s: u8::try_from(uint(s)?).map_err(|_| fail("bit out of range"))?,
                },
                _ => return Err(fail("dihedral elements are [r, s]")),
            },
            Repr::Wreath(_) => match value.as_array().map(Vec::as_slice) {
                Some([a, b, j]) => GroupElement::Wreath {
                    a: residues(a)?,
                    b: residues(b)?,
                    j: u8::try_from(uint(j)?).map_err(|_| fail("bit out of range"))?,
                },
                _ => return Err(fail("wreath elements are [[a..], [b..], j]")),
            },
        };
        if !self.contains(&g) {
            return Err(fail("component out of range"));
        }
        Ok(g)
    }

    pub fn element_to_json(&self, g: &GroupElement) -> Value {
        match g {
            GroupElement::Table(x) => Value::from(*x),
            GroupElement::Cyclic(r) => Value::from(r.to_vec()),
            GroupElement::Dihedral { r, s } => Value::from(vec![*r, u32::from(*s)]),
            GroupElement::Wreath { a, b, j } => Value::Array(vec![
                Value::from(a.to_vec()),
                Value::from(b.to_vec()),
                Value::from(*j),
            ]),
        }
    }
}

fn zeros(k: usize) -> Residues {
    smallvec::smallvec![0; k]
}

fn residues_ok(r: &Residues, moduli: &[u32]) -> bool {
    r.len() == moduli.len() && r.iter().zip(moduli).all(|(x, m)| x < m)
}

fn add_residues(x: &Residues, y: &Residues, moduli: &[u32]) -> Residues {
    x.iter()
        .zip(y)
        .zip(moduli)
        .map(|((a, b), m)| ((u64::from(*a) + u64::from(*b)) % u64::from(*m)) as u32)
        .collect()
}

fn neg_residues(x: &Residues, moduli: &[u32]) -> Residues {
    x.iter().zip(moduli).map(|(a, m)| (m - a) % m).collect()
}

fn all_residues(moduli: &[u32]) -> Vec<Residues> {
    let mut out = vec![Residues::new()];
    for &m in moduli {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..m).map(move |r| {
                    let mut v = prefix.clone();
                    v.push(r);
                    v
                })
            })
            .collect();
    }
    out
}

fn cyclic_order(moduli: &[u32]) -> Result<u64> {
    if moduli.is_empty() {
        return Err(Error::InvalidDescriptor(
            "cyclic_power needs at least one modulus".into(),
        ));
    }
    if moduli.contains(&0) {
        return Err(Error::InvalidDescriptor(
            "cyclic moduli must be positive".into(),
        ));
    }
    moduli
        .iter()
        .try_fold(1u64, |acc, &m| acc.checked_mul(u64::from(m)))
        .ok_or_else(|| Error::InvalidDescriptor("group order overflows".into()))
}

fn validate_table(order: usize, rows: &[Vec<usize>]) -> Result<Table> {
    let bad = |msg: String| Err(Error::InvalidDescriptor(msg));
    if order == 0 {
        return bad("table order must be positive".into());
    }
    if order > u32::MAX as usize {
        return bad("table order too large".into());
    }
    if rows.len() != order || rows.iter().any(|r| r.len() != order) {
        return bad(format!("multiplication table must be {order}x{order}"));
    }
    let mut seen = vec![false; order];
    for (i, row) in rows.iter().enumerate() {
        seen.iter_mut().for_each(|s| *s = false);
        for &x in row {
            if x >= order || std::mem::replace(&mut seen[x], true) {
                return bad(format!("row {i} is not a permutation of 0..{order}"));
            }
        }
    }
    for col in 0..order {
        seen.iter_mut().for_each(|s| *s = false);
        for row in rows {
            if std::mem::replace(&mut seen[row[col]], true) {
                return bad(format!("column {col} is not a permutation of 0..{order}"));
            }
        }
    }
    let identity = (0..order)
        .find(|&e| (0..order).all(|g| rows[e][g] == g && rows[g][e] == g))
        .ok_or_else(|| Error::InvalidDescriptor("table has no two-sided identity".into()))?;
    // Full associativity check is cubic; only run it where that is cheap.
    if order <= 128 {
        for a in 0..order {
            for b in 0..order {
                let ab = rows[a][b];
                for c in 0..order {
                    if rows[ab][c] != rows[a][rows[b][c]] {
                        return bad(format!("table is not associative at ({a},{b},{c})"));
                    }
                }
            }
        }
    }
    let mul: Vec<u32> = rows.iter().flatten().map(|&x| x as u32).collect();
    let inv = (0..order)
        .map(|g| rows[g].iter().position(|&x| x == identity).unwrap() as u32)
        .collect();
    Ok(Table {
        order,
        mul,
        inv,
        identity: identity as u32,
    })
}

fn parse_tuple(text: &str) -> std::result::Result<Vec<i64>, String> {
    let inner = text
        .strip_prefix(['(', '['])
        .and_then(|s| s.strip_suffix([')', ']']))
        .ok_or_else(|| "expected a bracketed tuple".to_string())?;
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|p| p.parse::<i64>().map_err(|_| format!("bad integer {p:?}")))
        .collect()
}

fn to_u32(x: i64) -> std::result::Result<u32, String> {
    u32::try_from(x).map_err(|_| format!("component {x} out of range"))
}

fn to_residues(v: &[i64]) -> std::result::Result<Residues, String> {
    v.iter().map(|&x| to_u32(x)).collect()
}

fn parse_wreath(text: &str) -> std::result::Result<GroupElement, String> {
    let (body, j) = if let Some(b) = text.strip_suffix("z^1").or_else(|| text.strip_suffix("z1")) {
        (b, 1)
    } else if let Some(b) = text.strip_suffix("z^0").or_else(|| text.strip_suffix("z0")) {
        (b, 0)
    } else if let Some(b) = text.strip_suffix('z') {
        (b, 1)
    } else {
        (text, 0)
    };
    let inner = body
        .strip_prefix(['(', '['])
        .and_then(|s| s.strip_suffix([')', ']']))
        .ok_or_else(|| "expected ((a..),(b..))z^j".to_string())?;
    let split = inner
        .find([')', ']'])
        .ok_or_else(|| "expected two coordinate tuples".to_string())?;
    let (first, rest) = inner.split_at(split + 1);
    let second = rest
        .strip_prefix(',')
        .ok_or_else(|| "expected ',' between coordinates".to_string())?;
    Ok(GroupElement::Wreath {
        a: to_residues(&parse_tuple(first)?)?,
        b: to_residues(&parse_tuple(second)?)?,
        j,
    })
}

fn format_tuple(r: &Residues) -> String {
    let parts: Vec<String> = r.iter().map(u32::to_string).collect();
    format!("({})", parts.join(","))
}
