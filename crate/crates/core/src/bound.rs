//! Character-degree spectra and the exponent bound
//!
//! ```text
//! ω ≤ 3·log(Σᵢ cᵢ dᵢ^ω) / log f
//! ```
//!
//! where degree `dᵢ` occurs with multiplicity `cᵢ`. Because `ω` appears on both
//! sides the usable bound is the fixed point, found as the root of
//! `h(ω) = ω·log f − 3·log Σ cᵢdᵢ^ω`.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Group, GroupDescriptor};
use crate::indexing::{check_tpp, IndexingTriple, WorkBudget};

/// Bisection stops once the bracket is narrower than this.
pub const OMEGA_TOLERANCE: f64 = 1e-9;
/// Upper bracket cap for the fixed-point search.
pub const OMEGA_CAP: f64 = 64.0;

/// `(degree, multiplicity)` pairs of the irreducible characters of a group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSpectrum {
    pub order: u64,
    pub degrees: Vec<(u64, u64)>,
}

impl DegreeSpectrum {
    /// Number of irreducible characters.
    pub fn character_count(&self) -> u64 {
        self.degrees.iter().map(|(_, c)| c).sum()
    }

    fn wedderburn_sum(&self) -> u128 {
        self.degrees
            .iter()
            .map(|&(d, c)| u128::from(c) * u128::from(d) * u128::from(d))
            .sum()
    }
}

/// Closed-form spectrum for abelian, dihedral and abelian-wreath-S₂ groups.
pub fn degrees_for(descriptor: &GroupDescriptor) -> Result<DegreeSpectrum> {
    let group = Group::from_descriptor(descriptor.clone())?;
    let order = group.order();
    let degrees = match descriptor {
        GroupDescriptor::CyclicPower { .. } => vec![(1, order)],
        GroupDescriptor::Dihedral { n } => {
            let n = u64::from(*n);
            if n % 2 == 0 {
                vec![(1, 4), (2, (n - 2) / 2)]
            } else {
                vec![(1, 2), (2, (n - 1) / 2)]
            }
        }
        GroupDescriptor::WreathS2 { base } => {
            // pairs (χ, ψ) of base characters: χ = ψ extends two ways,
            // χ ≠ ψ induces a degree-2 character per unordered pair
            let m = Group::from_descriptor(base.as_ref().clone())?.order();
            vec![(1, 2 * m), (2, (m * m - m) / 2)]
        }
        GroupDescriptor::Table { .. } => {
            return Err(Error::UnsupportedFamily(descriptor.family().to_string()))
        }
    };
    supply_degrees(order, degrees, None)
}

/// Validates a user-provided spectrum: `Σ cᵢdᵢ² = order` and, when given,
/// `Σ cᵢ = classes`. Zero multiplicities are dropped and equal degrees merged.
pub fn supply_degrees(
    order: u64,
    degrees: Vec<(u64, u64)>,
    classes: Option<u64>,
) -> Result<DegreeSpectrum> {
    let mut merged: BTreeMap<u64, u64> = BTreeMap::new();
    for (d, c) in degrees {
        if d == 0 {
            return Err(Error::InvalidSpectrum("degrees must be positive".into()));
        }
        if c > 0 {
            *merged.entry(d).or_default() += c;
        }
    }
    let spectrum = DegreeSpectrum {
        order,
        degrees: merged.into_iter().collect(),
    };
    if spectrum.degrees.is_empty() {
        return Err(Error::InvalidSpectrum("no characters given".into()));
    }
    let sum = spectrum.wedderburn_sum();
    if sum != u128::from(order) {
        return Err(Error::InvalidSpectrum(format!(
            "sum of multiplicity x degree^2 is {sum}, group order is {order} (off by {})",
            sum as i128 - i128::from(order)
        )));
    }
    if let Some(k) = classes {
        let count = spectrum.character_count();
        if count != k {
            return Err(Error::InvalidSpectrum(format!(
                "{count} characters but {k} conjugacy classes"
            )));
        }
    }
    Ok(spectrum)
}

/// Number of conjugacy classes of an enumerable group.
pub fn conjugacy_class_count(group: &Group) -> Result<u64> {
    let elements = group.elements()?;
    let mut seen = HashSet::with_capacity(elements.len());
    let mut classes = 0;
    for g in &elements {
        if seen.contains(g) {
            continue;
        }
        classes += 1;
        for x in &elements {
            seen.insert(group.op(&group.op(x, g), &group.inv(x)));
        }
    }
    Ok(classes)
}

/// [`supply_degrees`] for a concrete group, checking the class count too.
pub fn supply_degrees_for_group(group: &Group, degrees: Vec<(u64, u64)>) -> Result<DegreeSpectrum> {
    let classes = conjugacy_class_count(group)?;
    supply_degrees(group.order(), degrees, Some(classes))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundResult {
    /// Upper end of the final bracket, so never below the true fixed point.
    pub omega: f64,
    pub f: u64,
    pub spectrum: DegreeSpectrum,
    pub bracket: (f64, f64),
    pub iterations: u32,
    /// `ω ≥ 3`: no better than the classical algorithm.
    pub vacuous: bool,
    /// `h(ω)` at the returned point.
    pub residual: f64,
    /// Fixed point fell below 2 and was raised to 2.
    pub clamped: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

/// `log Σ cᵢ dᵢ^ω` evaluated with the largest term factored out, plus the
/// weighted mean of `log dᵢ` (the derivative of that log-sum in `ω`).
fn log_sum_and_slope(spectrum: &DegreeSpectrum, omega: f64) -> (f64, f64) {
    let terms: Vec<(f64, f64)> = spectrum
        .degrees
        .iter()
        .map(|&(d, c)| {
            let ln_d = (d as f64).ln();
            ((c as f64).ln() + omega * ln_d, ln_d)
        })
        .collect();
    let top = terms
        .iter()
        .map(|(t, _)| *t)
        .fold(f64::NEG_INFINITY, f64::max);
    let (mut total, mut weighted) = (0.0, 0.0);
    for (t, ln_d) in &terms {
        let w = (t - top).exp();
        total += w;
        weighted += w * ln_d;
    }
    (top + total.ln(), weighted / total)
}

/// Fixed point of `ω = 3·log(Σ cᵢdᵢ^ω)/log f` by bracketed bisection.
pub fn solve_omega(spectrum: &DegreeSpectrum, f: u64) -> Result<BoundResult> {
    if f < 2 {
        return Err(Error::Solver(format!("f must be at least 2, got {f}")));
    }
    let ln_f = (f as f64).ln();
    let h = |w: f64| ln_f * w - 3.0 * log_sum_and_slope(spectrum, w).0;
    let slope = |w: f64| ln_f - 3.0 * log_sum_and_slope(spectrum, w).1;

    let mut result = BoundResult {
        omega: 2.0,
        f,
        spectrum: spectrum.clone(),
        bracket: (2.0, 2.0),
        iterations: 0,
        vacuous: false,
        residual: h(2.0),
        clamped: false,
        note: None,
    };
    if h(2.0) >= 0.0 {
        result.clamped = true;
        result.note = Some("fixed point is at most 2; clamped to 2".into());
        return Ok(result);
    }

    let mut lo = 2.0;
    let mut width = 0.5;
    let mut hi = lo + width;
    while h(hi) <= 0.0 {
        lo = hi;
        width *= 2.0;
        hi = 2.0 + width;
        if hi > OMEGA_CAP {
            return Err(Error::Solver(format!(
                "no sign change of h on [2, {OMEGA_CAP}]"
            )));
        }
    }
    // h is concave in ω, so a positive slope at the top of the bracket
    // means h is increasing across it.
    for end in [2.0, hi] {
        if slope(end) <= 0.0 {
            return Err(Error::Solver(format!(
                "h is not increasing at ω = {end}; refusing to pick a root"
            )));
        }
    }
    result.bracket = (lo, hi);
    while hi - lo > OMEGA_TOLERANCE {
        let mid = 0.5 * (lo + hi);
        if h(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
        result.iterations += 1;
    }
    result.omega = hi;
    result.residual = h(hi);
    result.vacuous = hi >= 3.0;
    Ok(result)
}

/// Bound from a triple with the triple product property, where `f = |S||T||U|`.
pub fn tpp_bound(
    triple: &IndexingTriple,
    spectrum: &DegreeSpectrum,
    budget: &WorkBudget,
) -> Result<BoundResult> {
    if spectrum.order != triple.group().order() {
        return Err(Error::InvalidSpectrum(format!(
            "spectrum is for order {}, group has order {}",
            spectrum.order,
            triple.group().order()
        )));
    }
    if !check_tpp(triple, budget)? {
        return Err(Error::NotTpp);
    }
    let (m, n, p) = triple.dims();
    solve_omega(spectrum, (m * n * p) as u64)
}
