use std::collections::{BTreeMap, BTreeSet};

use e8grade_core::lattice::{e0, f1, f2, to_hyperbolic};
use e8grade_core::weyl::{sn_generators, weight_shape};
use e8grade_core::{
    appendix_counts, build_grading, crosscheck_weights, curve_classes, degree,
    enumerate_root_classes, euler_characteristic, gu_generators, normalize_degree, orbit_decompose,
    roots::is_affine_root, GradingLabel, LatticeVector,
};

use GradingLabel::*;
use LatticeVector as V;

fn second_block_indices(label: GradingLabel) -> Vec<usize> {
    let n = label.n().unwrap();
    (n + 1..=9).collect()
}

#[test]
fn normalized_representatives_are_distinct_and_in_window() {
    for label in GradingLabel::ALL {
        let reps: BTreeSet<_> = enumerate_root_classes()
            .iter()
            .map(|c| normalize_degree(label, &c.rep))
            .collect();
        assert_eq!(reps.len(), 240, "{label}");
        for r in &reps {
            assert!(is_affine_root(r));
            assert!((0..label.d()).contains(&degree(label, r)), "{label}: {r}");
        }
    }
}

/// Which of the four closed forms a root of degree `1..d-1` takes.
fn enum_roots_shapes(label: GradingLabel, alpha: &V, m: i64) -> usize {
    let n = label.n().unwrap();
    let d = label.d();
    let tail = &alpha.coeffs()[1..];
    let support = |sign: i64| -> Vec<usize> { (1..=9).filter(|&i| tail[i - 1] == sign).collect() };
    let others_zero = |allowed: &[i64]| tail.iter().all(|c| allowed.contains(c));
    let mut hits = 0;

    // (i) e_i - e_j with i <= n < j
    if m == 1 && alpha.h_coeff() == 0 && others_zero(&[0, 1, -1]) {
        let (p, q) = (support(1), support(-1));
        if p.len() == 1 && q.len() == 1 && p[0] <= n && q[0] > n {
            hits += 1;
        }
    }
    // (ii) h - e_J, |J| = 3, J not inside {1..n}
    if (1..=3).contains(&m) && alpha.h_coeff() == 1 && others_zero(&[0, -1]) {
        let j = support(-1);
        if j.len() == 3 && j.iter().any(|&i| i > n) {
            hits += 1;
        }
    }
    // (iii) 2h - e_J, |J| = 6, J not inside {1..n}
    if (1..=6).contains(&m) && alpha.h_coeff() == 2 && others_zero(&[0, -1]) {
        let j = support(-1);
        if j.len() == 6 && j.iter().any(|&i| i > n) {
            hits += 1;
        }
    }
    // (iv) ω_0 - e_i + e_j with i <= n < j
    if m == d - 1 {
        let rest = *alpha - V::omega0();
        let t = &rest.coeffs()[1..];
        let p: Vec<usize> = (1..=9).filter(|&i| t[i - 1] == 1).collect();
        let q: Vec<usize> = (1..=9).filter(|&i| t[i - 1] == -1).collect();
        if rest.h_coeff() == 0
            && t.iter().all(|c| [0, 1, -1].contains(c))
            && p.len() == 1
            && q.len() == 1
            && q[0] <= n
            && p[0] > n
        {
            hits += 1;
        }
    }
    hits
}

#[test]
fn graded_roots_take_exactly_one_closed_form() {
    for label in GradingLabel::ALL.into_iter().filter(|l| !l.is_hyperbolic()) {
        let g = build_grading(label);
        for c in &g.components[1..] {
            for r in &c.roots {
                assert_eq!(
                    enum_roots_shapes(label, &r.alpha, c.m),
                    1,
                    "{label}, m = {}: {}",
                    c.m,
                    r.alpha
                );
            }
        }
    }
}

#[test]
fn hyperbolic_graded_roots_have_listed_forms() {
    let g = build_grading(D8b);
    let allowed: BTreeMap<i64, Vec<V>> = [
        (2, vec![f1(), f2()]),
        (4, vec![f1() + f2()]),
        (6, vec![f1() * 2 + f2(), f1() + f2() * 2]),
    ]
    .into_iter()
    .collect();
    for c in &g.components[1..] {
        let forms = allowed.get(&c.m);
        assert_eq!(c.roots.is_empty(), forms.is_none(), "m = {}", c.m);
        for r in &c.roots {
            assert!(forms.unwrap().contains(&r.beta), "{}", r.beta);
            let hc = to_hyperbolic(&r.gamma);
            assert_eq!(&hc[..2], &[0, 0]);
            assert!(hc[2..].iter().all(|&x| x == 0 || x == -1));
            assert_eq!(hc[2..].iter().filter(|&&x| x == -1).count() as i64, c.m);
        }
    }
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if items.len() < k {
        return vec![];
    }
    let mut with: Vec<Vec<usize>> = subsets(&items[1..], k - 1)
        .into_iter()
        .map(|mut s| {
            s.insert(0, items[0]);
            s
        })
        .collect();
    with.extend(subsets(&items[1..], k));
    with
}

#[test]
fn gammas_are_all_m_subsets() {
    for label in GradingLabel::ALL {
        let g = build_grading(label);
        for c in &g.components[1..] {
            let gammas: BTreeSet<V> = c.roots.iter().map(|r| r.gamma).collect();
            if c.roots.is_empty() {
                continue;
            }
            let expected: BTreeSet<V> = if label.is_hyperbolic() {
                let block = label.second_block();
                subsets(&(0..8).collect::<Vec<_>>(), c.m as usize)
                    .into_iter()
                    .map(|s| -s.into_iter().map(|i| block[i]).sum::<V>())
                    .collect()
            } else {
                subsets(&second_block_indices(label), c.m as usize)
                    .into_iter()
                    .map(|s| -V::e_sum(s))
                    .collect()
            };
            assert_eq!(gammas, expected, "{label}, m = {}", c.m);
            assert_eq!(c.gamma_count, expected.len());
            // every β pairs with every γ exactly once
            for b in &c.beta_weights {
                let n = c.roots.iter().filter(|r| r.beta == *b).count();
                assert_eq!(n, expected.len());
            }
        }
        if label.is_hyperbolic() {
            let nonempty: Vec<i64> = g.components[1..]
                .iter()
                .filter(|c| !c.roots.is_empty())
                .map(|c| c.m)
                .collect();
            assert_eq!(nonempty, [2, 4, 6]);
        }
    }
}

#[test]
fn degree_zero_is_sl_plus_gu() {
    for label in GradingLabel::ALL {
        let g = build_grading(label);
        let w = label.omega();
        for r in &g.components[0].roots {
            if r.beta.is_zero() {
                assert_eq!(r.gamma.norm(), -2);
                assert_eq!(r.gamma.dot(&label.delta()), 0);
            } else {
                assert!(r.gamma.is_zero(), "{label}: {}", r.alpha);
                assert_eq!(r.beta.norm(), -2);
                assert_eq!(r.beta.dot(&w), 0);
            }
        }
    }
}

#[test]
fn root_level_grading_is_additive() {
    for label in GradingLabel::ALL {
        let d = label.d();
        let g = build_grading(label);
        let all: Vec<(V, i64)> = g
            .components
            .iter()
            .flat_map(|c| c.roots.iter().map(|r| (r.alpha, r.m)))
            .collect();
        let index: BTreeMap<V, i64> = all.iter().copied().collect();
        for (a, ma) in all.iter().step_by(7) {
            for (b, mb) in &all {
                let sum = *a + *b;
                if !is_affine_root(&sum) {
                    continue;
                }
                let n = normalize_degree(label, &sum);
                let mn = index[&n];
                assert_eq!(mn.rem_euclid(d), (ma + mb).rem_euclid(d));
            }
        }
    }
}

#[test]
fn beta_weights_are_closed_and_mostly_single_orbits() {
    for label in GradingLabel::ALL {
        let g = build_grading(label);
        let group = gu_generators(label);
        for m in 1..label.d() {
            let betas = g.beta_weights(m);
            let dec = orbit_decompose(betas, &group).unwrap();
            let expected = match (label, m) {
                _ if betas.is_empty() => 0,
                (D7, 1 | 6) => 2,
                _ => 1,
            };
            assert_eq!(dec.len(), expected, "{label}, m = {m}");
        }
    }
}

#[test]
fn permutation_orbits_refine_into_shape_classes() {
    use e8grade_core::weyl::WeightShape;
    for label in [D2, D3, D4, D5, D6, D7, D8a] {
        let g = build_grading(label);
        let rows = appendix_counts(label).unwrap();
        let sn = sn_generators(label);
        for row in rows {
            let betas = g.beta_weights(row.m);
            let dec = orbit_decompose(betas, &sn).unwrap();
            let nonzero = row
                .cells()
                .iter()
                .filter(|c| matches!(c, Some(x) if *x > 0))
                .count();
            assert_eq!(dec.len(), nonzero, "{label} m={}", row.m);
            for o in &dec.orbits {
                let shapes: BTreeSet<Option<WeightShape>> =
                    o.iter().map(|b| weight_shape(label, b)).collect();
                assert_eq!(shapes.len(), 1);
                assert!(shapes.iter().next().unwrap().is_some());
            }
            let cell_sum: usize = row.cells().iter().flatten().sum();
            assert_eq!(cell_sum, row.total);
        }
    }
}

#[test]
fn crosscheck_holds_for_every_label() {
    for label in GradingLabel::ALL {
        assert!(crosscheck_weights(label), "{label}");
    }
}

#[test]
fn curve_classes_are_rational_with_h0_equal_m() {
    for label in GradingLabel::ALL {
        let w = label.omega();
        for m in 0..=label.d() {
            for c in curve_classes(label, m).unwrap() {
                // adjunction: β² + K·β = -2
                assert_eq!(c.beta.norm() - w.dot(&c.beta), -2);
                if m > 0 {
                    assert_eq!(euler_characteristic(label, &c.beta), Ok(m));
                }
            }
        }
    }
}

#[test]
fn eight_a_and_eight_b_marked_classes() {
    let count = |label: GradingLabel| -> Vec<usize> {
        (1..8)
            .map(|m| curve_classes(label, m).unwrap().len())
            .collect()
    };
    assert_eq!(count(D8a), [1, 1, 1, 0, 1, 1, 1]);
    assert_eq!(count(D8b), [0, 2, 0, 1, 0, 2, 0]);
    // C + C' = -K pairs the marked classes up
    for label in [D8a, D8b] {
        for m in 1..8 {
            for c in curve_classes(label, m).unwrap() {
                let dual = label.omega() - c.beta;
                assert!(curve_classes(label, 8 - m)
                    .unwrap()
                    .iter()
                    .any(|x| x.beta == dual));
            }
        }
    }
    assert_eq!(e0(), V::h() - V::e(1) - V::e(2));
}
