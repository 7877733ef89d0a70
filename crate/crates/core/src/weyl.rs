//! Reflection groups `W(g_U)` acting on the first block, orbit closure and
//! the per-shape weight counts.

use alloc::boxed::Box;
use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::error::Error;
use crate::grading::build_grading;
use crate::lattice::{f1, f2, reflect, GradingLabel, LatticeVector};

/// Hard cap on orbit size. Every orbit in scope has at most 56 elements.
pub const ORBIT_CAP: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflectionGroup {
    pub label: GradingLabel,
    /// Norm `-2` vectors orthogonal to `ω_label`.
    pub generators: Vec<LatticeVector>,
}

impl ReflectionGroup {
    pub fn apply(&self, generator: usize, v: &LatticeVector) -> LatticeVector {
        // generators are checked roots, reflect cannot fail here
        reflect(v, &self.generators[generator]).expect("generator is a root")
    }

    fn images<'a>(&'a self, v: &'a LatticeVector) -> impl Iterator<Item = LatticeVector> + 'a {
        (0..self.generators.len()).map(move |g| self.apply(g, v))
    }
}

/// Simple reflections of `W(g_U)`: `e_i - e_{i+1}` for `i < n`, plus
/// `h - e_1 - e_2 - e_3` once `n >= 3`; `f_1 - f_2` for `8b`.
pub fn gu_generators(label: GradingLabel) -> ReflectionGroup {
    let mut group = sn_generators(label);
    match label.n() {
        Some(n) if n >= 3 => group
            .generators
            .push(LatticeVector::h() - LatticeVector::e_sum(1..=3)),
        Some(_) => {}
        None => group.generators.push(f1() - f2()),
    }
    group
}

/// The permutation subgroup `S_n` only (empty for `8b`).
pub fn sn_generators(label: GradingLabel) -> ReflectionGroup {
    let n = label.n().unwrap_or(0);
    ReflectionGroup {
        label,
        generators: (1..n)
            .map(|i| LatticeVector::e(i) - LatticeVector::e(i + 1))
            .collect(),
    }
}

/// Smallest generator-closed set containing `start`, in sorted order.
pub fn orbit(start: &LatticeVector, group: &ReflectionGroup) -> Result<Vec<LatticeVector>, Error> {
    let mut seen = BTreeSet::from([*start]);
    let mut queue = VecDeque::from([*start]);
    while let Some(v) = queue.pop_front() {
        for image in group.images(&v) {
            if seen.insert(image) {
                if seen.len() > ORBIT_CAP {
                    return Err(Error::OrbitTooLarge);
                }
                queue.push_back(image);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDecomposition {
    /// Orbits, each sorted, ordered by smallest element.
    pub orbits: Vec<Vec<LatticeVector>>,
}

impl OrbitDecomposition {
    pub fn sizes(&self) -> Vec<usize> {
        let mut s: Vec<_> = self.orbits.iter().map(Vec::len).collect();
        s.sort_unstable();
        s
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }
}

/// Partition a generator-closed set into orbits.
pub fn orbit_decompose(
    vectors: &[LatticeVector],
    group: &ReflectionGroup,
) -> Result<OrbitDecomposition, Error> {
    let set: BTreeSet<_> = vectors.iter().copied().collect();
    for v in &set {
        if let Some(image) = group.images(v).find(|w| !set.contains(w)) {
            return Err(Error::NotClosed {
                element: Box::new(*v),
                image: Box::new(image),
            });
        }
    }
    let mut assigned = BTreeSet::new();
    let mut orbits = Vec::new();
    for v in &set {
        if assigned.contains(v) {
            continue;
        }
        let o = orbit(v, group)?;
        assigned.extend(o.iter().copied());
        orbits.push(o);
    }
    Ok(OrbitDecomposition { orbits })
}

/// The four shapes lifted weights take.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum WeightShape {
    /// `e_i`
    E,
    /// `h - e_J`
    HMinusE,
    /// `2h - e_J`
    TwoHMinusE,
    /// `ω_d - e_i`
    OmegaMinusE,
}

/// Classify a lifted weight of degree `m` by its shape.
pub fn weight_shape(label: GradingLabel, beta: &LatticeVector) -> Option<WeightShape> {
    let n = label.n()?;
    let tail = &beta.coeffs()[1..=n];
    let only = |vals: &[i64]| tail.iter().all(|c| vals.contains(c));
    let ones = tail.iter().filter(|&&c| c == 1).count();
    match beta.h_coeff() {
        0 if only(&[0, 1]) && ones == 1 => Some(WeightShape::E),
        1 if only(&[0, -1]) => Some(WeightShape::HMinusE),
        2 if only(&[0, -1]) => Some(WeightShape::TwoHMinusE),
        3 => {
            let rest = label.omega() - *beta;
            let r = &rest.coeffs()[1..=n];
            (rest.h_coeff() == 0
                && r.iter().all(|&c| c == 0 || c == 1)
                && r.iter().filter(|&&c| c == 1).count() == 1)
                .then_some(WeightShape::OmegaMinusE)
        }
        _ => None,
    }
}

/// One row of the shape-count table: `None` where the shape cannot occur.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeCountRow {
    pub m: i64,
    pub e: Option<usize>,
    pub h_minus_e: Option<usize>,
    pub two_h_minus_e: Option<usize>,
    pub omega_minus_e: Option<usize>,
    pub total: usize,
}

impl ShapeCountRow {
    pub fn cells(&self) -> [Option<usize>; 4] {
        [
            self.e,
            self.h_minus_e,
            self.two_h_minus_e,
            self.omega_minus_e,
        ]
    }
}

/// Count lifted weights by shape for each degree `1..d-1`.
///
/// Only labels `2..7` and `8a` are tabulated.
pub fn appendix_counts(label: GradingLabel) -> Result<Vec<ShapeCountRow>, Error> {
    use GradingLabel::*;
    if matches!(label, D1 | D8b | D9) {
        return Err(Error::LabelNotTabulated(label));
    }
    let n = label.n().expect("standard label") as i64;
    let d = label.d();
    let grading = build_grading(label);

    Ok((1..d)
        .map(|m| {
            let betas = grading.beta_weights(m);
            let count = |shape| {
                betas
                    .iter()
                    .filter(|b| weight_shape(label, b) == Some(shape))
                    .count()
            };
            let cell = |applicable: bool, shape| applicable.then(|| count(shape));
            ShapeCountRow {
                m,
                e: cell(m == 1, WeightShape::E),
                h_minus_e: cell((0..=n).contains(&(3 - m)), WeightShape::HMinusE),
                two_h_minus_e: cell((0..=n).contains(&(6 - m)), WeightShape::TwoHMinusE),
                omega_minus_e: cell(m == d - 1, WeightShape::OmegaMinusE),
                total: betas.len(),
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use GradingLabel::*;
    use LatticeVector as V;

    #[test]
    fn generator_counts() {
        assert_eq!(gu_generators(D3).generators.len(), 6);
        assert_eq!(gu_generators(D1).generators.len(), 8);
        assert_eq!(gu_generators(D7).generators, [V::e(1) - V::e(2)]);
        assert_eq!(gu_generators(D8b).generators, [f1() - f2()]);
        assert!(gu_generators(D8a).generators.is_empty());
        assert!(gu_generators(D9).generators.is_empty());
    }

    #[test]
    fn generators_fix_omega() {
        for label in GradingLabel::ALL {
            let w = label.omega();
            for g in gu_generators(label).generators {
                assert_eq!(g.norm(), -2);
                assert_eq!(g.dot(&w), 0);
                assert!(label.in_first_block(&g));
            }
        }
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(orbit(&V::e(1), &gu_generators(D4)).unwrap().len(), 16);
        assert_eq!(
            orbit(&V::e(1), &gu_generators(D7)).unwrap(),
            [V::e(2), V::e(1)]
        );
        let w3 = D3.omega();
        assert_eq!(orbit(&w3, &gu_generators(D3)).unwrap(), [w3]);
    }

    #[test]
    fn decompose_examples() {
        let g5 = build_grading(D5);
        let dec = orbit_decompose(g5.beta_weights(2), &gu_generators(D5)).unwrap();
        assert_eq!(dec.sizes(), [5]);

        let g7 = build_grading(D7);
        for m in [1, 6] {
            let dec = orbit_decompose(g7.beta_weights(m), &gu_generators(D7)).unwrap();
            assert_eq!(dec.sizes(), [1, 2]);
        }
    }

    #[test]
    fn decompose_rejects_open_sets() {
        let err = orbit_decompose(&[V::e(1)], &gu_generators(D4)).unwrap_err();
        assert!(matches!(err, Error::NotClosed { .. }));
    }

    #[test]
    fn shape_count_rows() {
        let rows = appendix_counts(D2).unwrap();
        assert_eq!(rows[0].cells(), [Some(7), Some(21), Some(21), Some(7)]);
        assert_eq!(rows[0].total, 56);

        let rows = appendix_counts(D5).unwrap();
        assert_eq!(rows[2].cells(), [None, Some(1), Some(4), None]);
        assert_eq!(rows[2].total, 5);

        let rows = appendix_counts(D8a).unwrap();
        assert_eq!(rows[3].cells(), [None; 4]);
        assert_eq!(rows[3].total, 0);
    }

    #[test]
    fn shape_counts_reject_untabulated() {
        for label in [D1, D8b, D9] {
            assert_eq!(appendix_counts(label), Err(Error::LabelNotTabulated(label)));
        }
    }
}
