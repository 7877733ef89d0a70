//! Picard lattices of del Pezzo surfaces.
//!
//! The first block of each split is the intersection lattice `I_X` of the
//! degree `d` del Pezzo surface, with `-K = ω_d`. On a rational surface
//! Riemann–Roch reads `χ(L) = 1 + L·(L - K)/2`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::Error;
use crate::grading::build_grading;
use crate::lattice::{hyperbolic_pair, GradingLabel, LatticeVector};

/// An element of `I_X`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PicardClass {
    pub label: GradingLabel,
    pub beta: LatticeVector,
}

impl PicardClass {
    pub fn new(label: GradingLabel, beta: LatticeVector) -> Result<Self, Error> {
        if !label.in_first_block(&beta) {
            return Err(Error::NotInPicardLattice { label, v: beta });
        }
        Ok(PicardClass { label, beta })
    }

    /// The structure sheaf, `0`.
    pub fn trivial(label: GradingLabel) -> Self {
        PicardClass {
            label,
            beta: LatticeVector::ZERO,
        }
    }

    /// `-K`.
    pub fn anticanonical(label: GradingLabel) -> Self {
        PicardClass {
            label,
            beta: label.omega(),
        }
    }

    /// `(-K)·β`.
    pub fn degree(&self) -> i64 {
        self.label.omega().dot(&self.beta)
    }

    pub fn euler_characteristic(&self) -> Result<i64, Error> {
        euler_characteristic(self.label, &self.beta)
    }
}

/// `χ(β) = 1 + β·(β - K)/2`.
pub fn euler_characteristic(label: GradingLabel, beta: &LatticeVector) -> Result<i64, Error> {
    let num = beta.dot(&(*beta + label.omega()));
    if num % 2 != 0 {
        return Err(Error::OddEulerNumerator { beta: *beta });
    }
    Ok(1 + num / 2)
}

/// Classes `β ∈ I_X` with `(-K)·β = m` and `β² = m - 2`, for `0 <= m <= d`,
/// sorted by coordinates.
pub fn curve_classes(label: GradingLabel, m: i64) -> Result<Vec<PicardClass>, Error> {
    let d = label.d();
    if !(0..=d).contains(&m) {
        return Err(Error::DegreeOutOfRange { m, lo: 0, hi: d });
    }
    let mut out = match label.n() {
        Some(n) => standard_solutions(n, m),
        None => hyperbolic_solutions(m),
    };
    out.sort();
    out.dedup();
    Ok(out
        .into_iter()
        .map(|beta| PicardClass { label, beta })
        .collect())
}

fn isqrt(x: i64) -> i64 {
    debug_assert!(x >= 0);
    (x as u64).isqrt() as i64
}

/// Solve `3a + Σc_i = m`, `a² - Σc_i² = m - 2` over `Z^{1,n}`.
///
/// Cauchy–Schwarz on the `c_i` gives `(m - 3a)² <= n (a² - m + 2)`, i.e.
/// `d a² - 6m a + (m² + nm - 2n) <= 0` with `d = 9 - n > 0`, which confines
/// `a` to a bounded interval. The `c_i` are then filled in with the same
/// bound applied to every suffix.
fn standard_solutions(n: usize, m: i64) -> Vec<LatticeVector> {
    let ni = n as i64;
    let d = 9 - ni;
    let (qa, qb, qc) = (d, -6 * m, m * m + ni * m - 2 * ni);
    let disc = qb * qb - 4 * qa * qc;
    if disc < 0 {
        return Vec::new();
    }
    let s = isqrt(disc);
    // a within [(6m - √disc)/2d, (6m + √disc)/2d], widened by one and then
    // filtered exactly
    let lo = (-qb - s - 1).div_euclid(2 * qa) - 1;
    let hi = (-qb + s + 1).div_euclid(2 * qa) + 1;

    let mut out = Vec::new();
    let mut coeffs = [0i64; 10];
    for a in lo..=hi {
        if qa * a * a + qb * a + qc > 0 {
            continue;
        }
        let sum = m - 3 * a;
        let sq = a * a - m + 2;
        if sq < 0 {
            continue;
        }
        coeffs[0] = a;
        fill(&mut coeffs, 1, n, sum, sq, &mut out);
    }
    out
}

/// Assign `coeffs[i..=n]` so they sum to `sum` with squares summing to `sq`.
fn fill(
    coeffs: &mut [i64; 10],
    i: usize,
    n: usize,
    sum: i64,
    sq: i64,
    out: &mut Vec<LatticeVector>,
) {
    let left = (n + 1 - i) as i64;
    if left == 0 {
        if sum == 0 && sq == 0 {
            out.push(LatticeVector(*coeffs));
        }
        return;
    }
    if sq < 0 || sum * sum > left * sq {
        return;
    }
    let bound = isqrt(sq);
    for c in -bound..=bound {
        coeffs[i] = c;
        fill(coeffs, i + 1, n, sum - c, sq - c * c, out);
    }
    coeffs[i] = 0;
}

/// Solve `2(x + y) = m`, `2xy = m - 2` for `β = x f_1 + y f_2`.
fn hyperbolic_solutions(m: i64) -> Vec<LatticeVector> {
    if m % 2 != 0 {
        return Vec::new();
    }
    let (s, p) = (m / 2, (m - 2) / 2);
    // x, y are the roots of t² - s t + p
    let disc = s * s - 4 * p;
    if disc < 0 {
        return Vec::new();
    }
    let r = isqrt(disc);
    if r * r != disc || (s + r) % 2 != 0 {
        return Vec::new();
    }
    let (x, y) = ((s + r) / 2, (s - r) / 2);
    let mut out = alloc::vec![hyperbolic_pair(x, y), hyperbolic_pair(y, x)];
    out.dedup();
    out
}

/// Outcome of the helicality test.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Helicality {
    pub helical: bool,
    /// `(-K)·β`.
    pub m: i64,
}

/// `β ∉ {0, -K}`, `0 <= (-K)·β <= d` and `β² = (-K)·β - 2`.
///
/// The last condition is checked both directly and as
/// `χ(-β) = 0, χ(β) = m`; the two always agree.
pub fn is_helical(label: GradingLabel, beta: &LatticeVector) -> Helicality {
    let omega = label.omega();
    let m = omega.dot(beta);
    let excluded = beta.is_zero() || *beta == omega;
    let in_window = (0..=label.d()).contains(&m);

    let direct = beta.norm() == m - 2;
    let via_chi = matches!(
        (
            euler_characteristic(label, &-*beta),
            euler_characteristic(label, beta)
        ),
        (Ok(0), Ok(x)) if x == m
    );
    debug_assert_eq!(direct, via_chi, "criteria disagree for {beta}");

    Helicality {
        helical: !excluded && in_window && direct && via_chi,
        m,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrosscheckRow {
    pub m: i64,
    pub curves: usize,
    pub weights: usize,
    pub equal: bool,
}

/// Compare the curve classes with `0 < m < d` against the lifted weights
/// of the grading, degree by degree.
pub fn crosscheck_report(label: GradingLabel) -> Vec<CrosscheckRow> {
    let grading = build_grading(label);
    (1..label.d())
        .map(|m| {
            let curves: Vec<LatticeVector> = curve_classes(label, m)
                .expect("m in range")
                .into_iter()
                .map(|c| c.beta)
                .collect();
            let weights = grading.beta_weights(m);
            CrosscheckRow {
                m,
                curves: curves.len(),
                weights: weights.len(),
                equal: curves == weights,
            }
        })
        .collect()
}

pub fn crosscheck_weights(label: GradingLabel) -> bool {
    crosscheck_report(label).iter().all(|r| r.equal)
}

/// Number of classes in a helix period after `O`: `12 - d`.
pub fn period_length(label: GradingLabel) -> usize {
    (12 - label.d()) as usize
}

/// A candidate period `O = L_0, L_1, .., L_N = -K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HelixPeriod {
    pub label: GradingLabel,
    pub sequence: Vec<LatticeVector>,
}

impl HelixPeriod {
    pub fn new(label: GradingLabel, sequence: Vec<LatticeVector>) -> Self {
        HelixPeriod { label, sequence }
    }

    /// `L_k` for any integer `k`, extended by `L_{k+N} = L_k - K`.
    pub fn member(&self, k: i64) -> LatticeVector {
        let n = (self.sequence.len() - 1) as i64;
        let (q, r) = (k.div_euclid(n), k.rem_euclid(n));
        self.sequence[r as usize] + self.label.omega() * q
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructuralIssue {
    WrongLength { expected: usize, found: usize },
    FirstNotTrivial,
    LastNotAnticanonical,
    OutsidePicardLattice { index: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairFailure {
    pub i: usize,
    pub j: usize,
    /// `L_j - L_i`.
    pub diff: LatticeVector,
    pub m: i64,
    pub norm: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HelixReport {
    pub structural: Vec<StructuralIssue>,
    pub failing_pairs: Vec<PairFailure>,
}

impl HelixReport {
    pub fn is_valid(&self) -> bool {
        self.structural.is_empty() && self.failing_pairs.is_empty()
    }
}

/// Check that every pair `i < j` other than `(0, N)` has a helical
/// difference `L_j - L_i`. Pairs are only examined if the endpoints and
/// length are right.
pub fn validate_helix_period(period: &HelixPeriod) -> HelixReport {
    let label = period.label;
    let seq = &period.sequence;
    let mut report = HelixReport::default();

    let expected = period_length(label) + 1;
    if seq.len() != expected {
        report.structural.push(StructuralIssue::WrongLength {
            expected,
            found: seq.len(),
        });
    }
    if seq.first() != Some(&LatticeVector::ZERO) {
        report.structural.push(StructuralIssue::FirstNotTrivial);
    }
    if seq.last() != Some(&label.omega()) {
        report
            .structural
            .push(StructuralIssue::LastNotAnticanonical);
    }
    for (index, v) in seq.iter().enumerate() {
        if !label.in_first_block(v) {
            report
                .structural
                .push(StructuralIssue::OutsidePicardLattice { index });
        }
    }
    if !report.structural.is_empty() {
        return report;
    }

    let last = seq.len() - 1;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if (i, j) == (0, last) {
                continue;
            }
            let diff = seq[j] - seq[i];
            let h = is_helical(label, &diff);
            if !h.helical {
                report.failing_pairs.push(PairFailure {
                    i,
                    j,
                    diff,
                    m: h.m,
                    norm: diff.norm(),
                });
            }
        }
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuiverVertex {
    /// Helix index `k` of `L_k`; may be negative.
    pub index: i64,
    pub class: LatticeVector,
    /// `(-K)·L_k`.
    pub m: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Column {
    pub m: i64,
    /// Helix indices, increasing.
    pub vertices: Vec<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub from: i64,
    pub to: i64,
    pub multiplicity: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<QuiverVertex>,
    pub columns: Vec<Column>,
    /// One entry per pair in consecutive columns, including multiplicity 0.
    pub arrows: Vec<Arrow>,
    /// `chi[i][j] = χ(L_j - L_i)` over the period indices `0..=N`.
    pub chi: Vec<Vec<i64>>,
}

impl Quiver {
    /// Arrows between column `layer` and column `layer + 1`.
    pub fn layer(&self, layer: usize) -> impl Iterator<Item = &Arrow> {
        let (from, to) = (
            &self.columns[layer].vertices,
            &self.columns[layer + 1].vertices,
        );
        self.arrows
            .iter()
            .filter(move |a| from.contains(&a.from) && to.contains(&a.to))
    }

    pub fn vertex(&self, index: i64) -> Option<&QuiverVertex> {
        self.vertices.iter().find(|v| v.index == index)
    }
}

/// Quiver of a valid period.
///
/// Vertices are the helix members `L_k` with `0 <= (-K)·L_k <= d`: the
/// period itself, plus `L_{k-N} = L_k + K` for members `0 < k < N` of
/// degree `d` and `L_{k+N}` for members of degree 0. They are grouped
/// into columns by degree, and arrows of multiplicity `χ(L_j - L_i)` are
/// drawn between consecutive columns only.
pub fn quiver(period: &HelixPeriod) -> Result<Quiver, Error> {
    let report = validate_helix_period(period);
    if !report.is_valid() {
        return Err(Error::InvalidHelix(report));
    }
    let label = period.label;
    let omega = label.omega();
    let d = label.d();
    let n = period.sequence.len() as i64 - 1;

    let mut indices: BTreeSet<i64> = (0..=n).collect();
    for k in 1..n {
        let m = omega.dot(&period.member(k));
        if m == d {
            indices.insert(k - n);
        }
        if m == 0 {
            indices.insert(k + n);
        }
    }
    let vertices: Vec<QuiverVertex> = indices
        .into_iter()
        .map(|index| {
            let class = period.member(index);
            QuiverVertex {
                index,
                class,
                m: omega.dot(&class),
            }
        })
        .collect();

    let degrees: BTreeSet<i64> = vertices.iter().map(|v| v.m).collect();
    let columns: Vec<Column> = degrees
        .into_iter()
        .map(|m| Column {
            m,
            vertices: vertices
                .iter()
                .filter(|v| v.m == m)
                .map(|v| v.index)
                .collect(),
        })
        .collect();

    let chi_of = |a: &LatticeVector, b: &LatticeVector| euler_characteristic(label, &(*b - *a));
    let mut arrows = Vec::new();
    for pair in columns.windows(2) {
        for &from in &pair[0].vertices {
            for &to in &pair[1].vertices {
                let multiplicity = chi_of(&period.member(from), &period.member(to))?;
                arrows.push(Arrow {
                    from,
                    to,
                    multiplicity,
                });
            }
        }
    }

    let chi = period
        .sequence
        .iter()
        .map(|a| {
            period
                .sequence
                .iter()
                .map(|b| chi_of(a, b))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;

    Ok(Quiver {
        vertices,
        columns,
        arrows,
        chi,
    })
}
