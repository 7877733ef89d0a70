//! `Z_d`-gradings of `E8` induced by pairing roots with `ω_d`.
//!
//! Degree 0 holds `sl_d ⊕ g_U` (together with the full Cartan subalgebra);
//! degree `m` for `1 <= m <= d-1` is `Λ^m(C^d) ⊗ R^m_d`, where the weights of
//! `R^m_d` are lifted to the first block as the vectors `β`.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::error::Error;
use crate::lattice::{GradingLabel, LatticeVector};
use crate::roots::{degree, enumerate_root_classes, normalize_degree, RootKind};

/// Rank of `E8`; the whole Cartan subalgebra sits in degree 0.
pub const CARTAN_RANK: usize = 8;

/// Total dimension of `E8`.
pub const E8_DIM: usize = 248;

/// The U-duality algebra attached to a label.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GuAlgebra {
    pub name: &'static str,
    pub dim: usize,
    /// Number of roots, i.e. `dim - rank`.
    pub root_count: usize,
}

impl GuAlgebra {
    pub fn for_label(label: GradingLabel) -> GuAlgebra {
        use GradingLabel::*;
        let (name, dim, root_count) = match label {
            D1 => ("E8", 248, 240),
            D2 => ("E7", 133, 126),
            D3 => ("E6", 78, 72),
            D4 => ("D5", 45, 40),
            D5 => ("A4", 24, 20),
            D6 => ("A1A2", 11, 8),
            D7 => ("A1u1", 4, 2),
            D8a => ("u1", 1, 0),
            D8b => ("A1", 3, 2),
            D9 => ("0", 0, 0),
        };
        GuAlgebra {
            name,
            dim,
            root_count,
        }
    }
}

/// A root normalised into the degree window, with its block split.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GradedRoot {
    pub alpha: LatticeVector,
    pub beta: LatticeVector,
    pub gamma: LatticeVector,
    pub m: i64,
    pub kind: RootKind,
}

impl GradedRoot {
    pub fn new(label: GradingLabel, alpha: LatticeVector, kind: RootKind) -> Self {
        let (beta, gamma) = label.split(&alpha);
        GradedRoot {
            alpha,
            beta,
            gamma,
            m: degree(label, &alpha),
            kind,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub m: i64,
    /// Roots of this degree, sorted by `alpha`.
    pub roots: Vec<GradedRoot>,
    /// Distinct lifted weights `β`, sorted.
    pub beta_weights: Vec<LatticeVector>,
    /// Distinct `γ` among the roots.
    pub gamma_count: usize,
    pub dimension: usize,
}

impl Component {
    /// In degree 0: roots of `g_U` (`γ = 0`).
    pub fn gu_roots(&self) -> impl Iterator<Item = &GradedRoot> {
        self.roots.iter().filter(|r| r.gamma.is_zero())
    }

    /// In degree 0: roots of `sl_d` (`β = 0`).
    pub fn sl_roots(&self) -> impl Iterator<Item = &GradedRoot> {
        self.roots.iter().filter(|r| r.beta.is_zero())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    pub label: GradingLabel,
    pub gu: GuAlgebra,
    /// Indexed by degree `0..d`.
    pub components: Vec<Component>,
}

impl Grading {
    pub fn d(&self) -> i64 {
        self.label.d()
    }

    pub fn component(&self, m: i64) -> Option<&Component> {
        usize::try_from(m).ok().and_then(|m| self.components.get(m))
    }

    pub fn beta_weights(&self, m: i64) -> &[LatticeVector] {
        self.component(m).map_or(&[], |c| &c.beta_weights)
    }

    pub fn total_dimension(&self) -> usize {
        self.components.iter().map(|c| c.dimension).sum()
    }

    /// Dimensions of `R^m_d` for `m = 1..d-1`.
    pub fn rep_dims(&self) -> Vec<usize> {
        self.components[1..]
            .iter()
            .map(|c| c.beta_weights.len())
            .collect()
    }
}

/// Bucket all 240 roots by degree after normalising into `[0, d)`.
pub fn build_grading(label: GradingLabel) -> Grading {
    let d = label.d();
    let mut buckets: BTreeMap<i64, Vec<GradedRoot>> = (0..d).map(|m| (m, Vec::new())).collect();
    for class in enumerate_root_classes() {
        let root = GradedRoot::new(label, normalize_degree(label, &class.rep), class.kind);
        debug_assert!((0..d).contains(&root.m));
        buckets.entry(root.m).or_default().push(root);
    }

    let components = buckets
        .into_iter()
        .map(|(m, mut roots)| {
            roots.sort();
            let betas: BTreeSet<_> = roots.iter().map(|r| r.beta).collect();
            let gammas: BTreeSet<_> = roots.iter().map(|r| r.gamma).collect();
            let dimension = roots.len() + if m == 0 { CARTAN_RANK } else { 0 };
            Component {
                m,
                beta_weights: betas.into_iter().collect(),
                gamma_count: gammas.len(),
                dimension,
                roots,
            }
        })
        .collect();

    Grading {
        label,
        gu: GuAlgebra::for_label(label),
        components,
    }
}

/// `β ↦ ω_d - β`, the duality on lifted weights.
pub fn dual_weight(label: GradingLabel, beta: &LatticeVector) -> LatticeVector {
    label.omega() - *beta
}

/// The involution `α ↦ ω_0 - α` from degree `m` to degree `d - m`, as a
/// list of `(root, image)` pairs in the order of `roots(m)`.
///
/// On the split this is `β ↦ ω_d - β` and `γ ↦ -Δ_d - γ`, so `-e_I` goes
/// to `-e_{I^c}`.
pub fn duality_map(grading: &Grading, m: i64) -> Result<Vec<(GradedRoot, GradedRoot)>, Error> {
    let d = grading.d();
    if !(1..d).contains(&m) {
        return Err(Error::DegreeOutOfRange {
            m,
            lo: 1,
            hi: d - 1,
        });
    }
    let label = grading.label;
    let target = &grading.components[(d - m) as usize].roots;
    grading.components[m as usize]
        .roots
        .iter()
        .map(|r| {
            let image = normalize_degree(label, &(LatticeVector::omega0() - r.alpha));
            let found = target
                .binary_search_by(|t| t.alpha.cmp(&image))
                .map_err(|_| Error::NotClosed {
                    element: Box::new(r.alpha),
                    image: Box::new(image),
                })?;
            Ok((*r, target[found]))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimsRow {
    pub label: GradingLabel,
    /// `dim R^m_d` for `m = 1..d-1`.
    pub dims: Vec<usize>,
}

/// The grid of `dim R^m_d` over all labels (label 1 has an empty row).
pub fn dims_table() -> Vec<DimsRow> {
    GradingLabel::ALL
        .into_iter()
        .map(|label| DimsRow {
            label,
            dims: build_grading(label).rep_dims(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use GradingLabel::*;

    fn binom(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn d3_components() {
        let g = build_grading(D3);
        assert_eq!(g.rep_dims(), [27, 27]);
        let dims: Vec<_> = g.components.iter().map(|c| c.dimension).collect();
        assert_eq!(dims, [86, 81, 81]);
    }

    #[test]
    fn d9_components() {
        let dims: Vec<_> = build_grading(D9)
            .components
            .iter()
            .map(|c| c.dimension)
            .collect();
        assert_eq!(dims, [80, 0, 0, 84, 0, 0, 84, 0, 0]);
    }

    #[test]
    fn eight_a_and_eight_b_reps() {
        assert_eq!(build_grading(D8a).rep_dims(), [1, 1, 1, 0, 1, 1, 1]);
        assert_eq!(build_grading(D8b).rep_dims(), [0, 2, 0, 1, 0, 2, 0]);
    }

    #[test]
    fn trivial_grading() {
        let g = build_grading(D1);
        assert_eq!(g.components.len(), 1);
        assert_eq!(g.components[0].dimension, 248);
        assert_eq!(g.gu.name, "E8");
        assert!(g.rep_dims().is_empty());
    }

    #[test]
    fn component_dimensions_factor() {
        for label in GradingLabel::ALL {
            let g = build_grading(label);
            let d = label.d() as usize;
            assert_eq!(g.total_dimension(), E8_DIM, "{label}");
            let c0 = &g.components[0];
            assert_eq!(c0.dimension, d * d - 1 + g.gu.dim, "{label}");
            assert_eq!(c0.gu_roots().count(), g.gu.root_count, "{label}");
            assert_eq!(c0.sl_roots().count(), d * (d - 1), "{label}");
            assert_eq!(
                c0.gu_roots().count() + c0.sl_roots().count(),
                c0.roots.len(),
                "{label}"
            );
            for c in &g.components[1..] {
                let m = c.m as usize;
                assert_eq!(c.dimension, binom(d, m) * c.beta_weights.len());
                assert_eq!(c.dimension, c.roots.len());
            }
        }
    }

    #[test]
    fn graded_root_invariants() {
        for label in GradingLabel::ALL {
            let g = build_grading(label);
            let w = label.omega();
            for c in &g.components[1..] {
                for r in &c.roots {
                    assert_eq!(r.beta + r.gamma, r.alpha);
                    assert_eq!(r.gamma.norm(), -r.m);
                    assert_eq!(r.beta.norm(), r.m - 2);
                    assert_eq!(w.dot(&r.beta), r.m);
                }
            }
        }
    }

    #[test]
    fn duality_rejects_bad_degree() {
        let g = build_grading(D4);
        assert!(matches!(
            duality_map(&g, 0),
            Err(Error::DegreeOutOfRange { m: 0, .. })
        ));
        assert!(duality_map(&g, 4).is_err());
        assert!(duality_map(&build_grading(D1), 1).is_err());
    }

    #[test]
    fn duality_d4() {
        let g = build_grading(D4);
        let pairs = duality_map(&g, 1).unwrap();
        let images: BTreeSet<_> = pairs.iter().map(|(_, b)| b.beta).collect();
        assert_eq!(images.len(), 16);
        assert_eq!(images.into_iter().collect::<Vec<_>>(), g.beta_weights(3));

        let self_dual: BTreeSet<_> = g
            .beta_weights(2)
            .iter()
            .map(|b| dual_weight(D4, b))
            .collect();
        assert_eq!(self_dual.len(), 10);
        assert_eq!(self_dual.into_iter().collect::<Vec<_>>(), g.beta_weights(2));

        for (a, b) in pairs {
            assert_eq!(b.beta, dual_weight(D4, &a.beta));
            assert_eq!(b.gamma, -D4.delta() - a.gamma);
        }
    }

    #[test]
    fn dims_rows() {
        let table = dims_table();
        let row = |l| table.iter().find(|r| r.label == l).unwrap().dims.clone();
        assert_eq!(row(D2), [56]);
        assert_eq!(row(D5), [10, 5, 5, 10]);
        assert_eq!(row(D7), [3, 2, 1, 1, 2, 3]);
        assert_eq!(row(D6), [6, 3, 2, 3, 6]);
        assert!(row(D1).is_empty());
    }
}
