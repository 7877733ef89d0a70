//! The 240 roots of `E8`, realised as the real roots of the affine lattice
//! `ω_0^⊥ ⊂ Z^{1,9}` taken modulo `ω_0`.

use alloc::vec::Vec;
use core::fmt;

use crate::lattice::{GradingLabel, LatticeVector};

/// Which closed-form family a canonical representative belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum RootKind {
    /// `e_i - e_j`, `i != j`.
    EiMinusEj,
    /// `h - e_J`, `|J| = 3`.
    HMinusEJ,
    /// `2h - e_J`, `|J| = 6`.
    TwoHMinusEJ,
}

impl RootKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            RootKind::EiMinusEj => "e_i-e_j",
            RootKind::HMinusEJ => "h-e_J",
            RootKind::TwoHMinusEJ => "2h-e_J",
        }
    }
}

impl fmt::Display for RootKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A canonical representative of an element of `Φ(Ẽ8)/<ω_0>`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RootClass {
    pub rep: LatticeVector,
    pub kind: RootKind,
}

/// Whether `v` is a real root of `Ẽ8`: `v·v = -2` and `v·ω_0 = 0`.
pub fn is_affine_root(v: &LatticeVector) -> bool {
    v.norm() == -2 && v.dot(&LatticeVector::omega0()) == 0
}

/// All `k`-element subsets of `{1, .., 9}` in lexicographic order.
pub(crate) fn subsets_of_nine(k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=9 {
            if 9 - i + 1 < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, k, &mut Vec::new(), &mut out);
    out
}

/// The 240 canonical root classes: 72 of the form `e_i - e_j`, 84 of the
/// form `h - e_J` and 84 of the form `2h - e_J`, sorted by coordinates.
pub fn enumerate_root_classes() -> Vec<RootClass> {
    let mut out = Vec::with_capacity(240);
    for i in 1..=9 {
        for j in 1..=9 {
            if i != j {
                out.push(RootClass {
                    rep: LatticeVector::e(i) - LatticeVector::e(j),
                    kind: RootKind::EiMinusEj,
                });
            }
        }
    }
    for j in subsets_of_nine(3) {
        out.push(RootClass {
            rep: LatticeVector::h() - LatticeVector::e_sum(j),
            kind: RootKind::HMinusEJ,
        });
    }
    for j in subsets_of_nine(6) {
        out.push(RootClass {
            rep: LatticeVector::h() * 2 - LatticeVector::e_sum(j),
            kind: RootKind::TwoHMinusEJ,
        });
    }
    out.sort();
    out
}

/// `m = ω_label · α`.
pub fn degree(label: GradingLabel, alpha: &LatticeVector) -> i64 {
    label.omega().dot(alpha)
}

/// Shift `α` by the multiple of `ω_0` that puts its degree in `[0, d)`.
pub fn normalize_degree(label: GradingLabel, alpha: &LatticeVector) -> LatticeVector {
    let d = label.d();
    let m = degree(label, alpha);
    *alpha + LatticeVector::omega0() * (m.rem_euclid(d) - m).div_euclid(d)
}
