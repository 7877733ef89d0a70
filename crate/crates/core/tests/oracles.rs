//! Independent brute-force enumerations checked against the closed-form
//! production paths.

use std::collections::BTreeSet;

use e8grade_core::lattice::DIM;
use e8grade_core::{curve_classes, enumerate_root_classes, GradingLabel, LatticeVector};

/// Every vector with coefficients in `[-3, 3]`, `α·ω_0 = 0` and `α² = -2`,
/// reduced modulo `ω_0` to the representative with `c_h ∈ {0, 1, 2}`.
fn brute_force_root_classes() -> BTreeSet<LatticeVector> {
    fn go(c: &mut [i64; DIM], i: usize, out: &mut BTreeSet<LatticeVector>) {
        if i == DIM {
            let v = LatticeVector(*c);
            if v.norm() == -2 && v.dot(&LatticeVector::omega0()) == 0 {
                out.insert(reduce_mod_omega0(v));
            }
            return;
        }
        // prune: Σ_{i>=1} c_i² = c_h² + 2 <= 11
        if i > 1 {
            let used: i64 = c[1..i].iter().map(|x| x * x).sum();
            if used > c[0] * c[0] + 2 {
                return;
            }
        }
        for x in -3..=3 {
            c[i] = x;
            go(c, i + 1, out);
        }
        c[i] = 0;
    }
    let mut out = BTreeSet::new();
    go(&mut [0; DIM], 0, &mut out);
    out
}

fn reduce_mod_omega0(v: LatticeVector) -> LatticeVector {
    let k = v.h_coeff().div_euclid(3);
    v - LatticeVector::omega0() * k
}

#[test]
fn root_census_matches_brute_force() {
    let oracle = brute_force_root_classes();
    assert_eq!(oracle.len(), 240);

    let classes = enumerate_root_classes();
    let reduced: BTreeSet<_> = classes.iter().map(|c| reduce_mod_omega0(c.rep)).collect();
    assert_eq!(reduced.len(), 240, "representatives collide modulo ω_0");
    assert_eq!(reduced, oracle);
}

/// All `β = a h + Σ c_i e_i` in a box with `(-K)·β = m`, `β² = m - 2`.
fn box_scan(
    n: usize,
    m: i64,
    a_range: std::ops::RangeInclusive<i64>,
    c_max: i64,
) -> BTreeSet<LatticeVector> {
    let omega = GradingLabel::from_degree(9 - n as i64).unwrap().omega();
    let mut out = BTreeSet::new();
    let mut c = [0i64; DIM];
    fn rec(c: &mut [i64; DIM], i: usize, n: usize, c_max: i64, visit: &mut dyn FnMut(&[i64; DIM])) {
        if i > n {
            visit(c);
            return;
        }
        for x in -c_max..=c_max {
            c[i] = x;
            rec(c, i + 1, n, c_max, visit);
        }
        c[i] = 0;
    }
    for a in a_range {
        c[0] = a;
        rec(&mut c, 1, n, c_max, &mut |coeffs| {
            let v = LatticeVector(*coeffs);
            if omega.dot(&v) == m && v.norm() == m - 2 {
                out.insert(v);
            }
        });
    }
    out
}

#[test]
fn curve_classes_match_box_scan() {
    for n in 0..=5usize {
        let label = GradingLabel::from_degree(9 - n as i64).unwrap();
        for m in 0..=label.d() {
            let oracle = box_scan(n, m, -4..=8, 4);
            let got: BTreeSet<_> = curve_classes(label, m)
                .unwrap()
                .into_iter()
                .map(|c| c.beta)
                .collect();
            assert_eq!(got, oracle, "label {label}, m = {m}");
        }
    }
}

#[test]
fn hyperbolic_curve_classes_match_scan() {
    use e8grade_core::lattice::hyperbolic_pair;
    let label = GradingLabel::D8b;
    for m in 0..=8 {
        let mut oracle = BTreeSet::new();
        for x in -10..=10 {
            for y in -10..=10 {
                if 2 * (x + y) == m && 2 * x * y == m - 2 {
                    oracle.insert(hyperbolic_pair(x, y));
                }
            }
        }
        let got: BTreeSet<_> = curve_classes(label, m)
            .unwrap()
            .into_iter()
            .map(|c| c.beta)
            .collect();
        assert_eq!(got, oracle, "m = {m}");
    }
}
