//! The registered checks run by `e8grade verify`.
//!
//! Each check recomputes one published table or identity from scratch and
//! compares it with frozen expected values.

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use e8grade_core::lattice::{e0, f1, f2, hyperbolic_pair, omega_2p, omega_3p, omega_4p, DIM};
use e8grade_core::roots::is_affine_root;
use e8grade_core::{
    appendix_counts, build_grading, crosscheck_report, dims_table, duality_map,
    enumerate_root_classes, euler_characteristic, gu_generators, is_helical, orbit_decompose,
    quiver, reflect, split, validate_helix_period, GradingLabel, HelixPeriod, LatticeVector,
    RootKind,
};

use GradingLabel::*;
use LatticeVector as V;

/// `dim R^m_d` for `m = 1..d-1`, rows `d = 2..9` (with `8a`, `8b`).
pub const REP_DIMS: [(GradingLabel, &[usize]); 9] = [
    (D2, &[56]),
    (D3, &[27, 27]),
    (D4, &[16, 10, 16]),
    (D5, &[10, 5, 5, 10]),
    (D6, &[6, 3, 2, 3, 6]),
    (D7, &[3, 2, 1, 1, 2, 3]),
    (D8a, &[1, 1, 1, 0, 1, 1, 1]),
    (D8b, &[0, 2, 0, 1, 0, 2, 0]),
    (D9, &[0, 0, 1, 0, 0, 1, 0, 0]),
];

/// Shape counts `(e_i, h - e_J, 2h - e_J, ω_d - e_i, total)` by `(d, m)`;
/// `None` marks a blank cell.
pub type ShapeCountEntry = (GradingLabel, i64, [Option<usize>; 4], usize);

pub const SHAPE_COUNTS: [ShapeCountEntry; 28] = [
    (D2, 1, [Some(7), Some(21), Some(21), Some(7)], 56),
    (D3, 1, [Some(6), Some(15), Some(6), None], 27),
    (D3, 2, [None, Some(6), Some(15), Some(6)], 27),
    (D4, 1, [Some(5), Some(10), Some(1), None], 16),
    (D4, 2, [None, Some(5), Some(5), None], 10),
    (D4, 3, [None, Some(1), Some(10), Some(5)], 16),
    (D5, 1, [Some(4), Some(6), None, None], 10),
    (D5, 2, [None, Some(4), Some(1), None], 5),
    (D5, 3, [None, Some(1), Some(4), None], 5),
    (D5, 4, [None, None, Some(6), Some(4)], 10),
    (D6, 1, [Some(3), Some(3), None, None], 6),
    (D6, 2, [None, Some(3), None, None], 3),
    (D6, 3, [None, Some(1), Some(1), None], 2),
    (D6, 4, [None, None, Some(3), None], 3),
    (D6, 5, [None, None, Some(3), Some(3)], 6),
    (D7, 1, [Some(2), Some(1), None, None], 3),
    (D7, 2, [None, Some(2), None, None], 2),
    (D7, 3, [None, Some(1), None, None], 1),
    (D7, 4, [None, None, Some(1), None], 1),
    (D7, 5, [None, None, Some(2), None], 2),
    (D7, 6, [None, None, Some(1), Some(2)], 3),
    (D8a, 1, [Some(1), None, None, None], 1),
    (D8a, 2, [None, Some(1), None, None], 1),
    (D8a, 3, [None, Some(1), None, None], 1),
    (D8a, 4, [None, None, None, None], 0),
    (D8a, 5, [None, None, Some(1), None], 1),
    (D8a, 6, [None, None, Some(1), None], 1),
    (D8a, 7, [None, None, None, Some(1)], 1),
];

/// The period `O, O(e_0), O(e_3), O(e_4), O(e_5), O(f_1), O(f_2),
/// O(f_1 + f_2), -K` on `dP_4`.
pub fn dp4_period() -> HelixPeriod {
    HelixPeriod::new(
        D4,
        vec![
            V::ZERO,
            e0(),
            V::e(3),
            V::e(4),
            V::e(5),
            f1(),
            f2(),
            f1() + f2(),
            D4.omega(),
        ],
    )
}

/// `O, O(1), O(2), O(3)` on `P^2`.
pub fn p2_period() -> HelixPeriod {
    HelixPeriod::new(D9, vec![V::ZERO, V::h(), V::h() * 2, V::h() * 3])
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub pass: bool,
    pub details: String,
}

impl CheckOutcome {
    fn from_failures(failures: Vec<String>, ok_details: impl Into<String>) -> Self {
        if failures.is_empty() {
            CheckOutcome {
                pass: true,
                details: ok_details.into(),
            }
        } else {
            CheckOutcome {
                pass: false,
                details: failures.join("; "),
            }
        }
    }
}

pub struct Check {
    /// Acceptance criterion number.
    pub id: u32,
    pub name: &'static str,
    pub run: fn() -> CheckOutcome,
}

pub fn registry() -> Vec<Check> {
    vec![
        Check {
            id: 1,
            name: "root-census",
            run: root_census,
        },
        Check {
            id: 2,
            name: "rep-dimension-grid",
            run: rep_dimension_grid,
        },
        Check {
            id: 3,
            name: "dimension-sums",
            run: dimension_sums,
        },
        Check {
            id: 4,
            name: "shape-count-table",
            run: shape_count_table,
        },
        Check {
            id: 5,
            name: "orbit-structure",
            run: orbit_structure,
        },
        Check {
            id: 6,
            name: "duality",
            run: duality,
        },
        Check {
            id: 7,
            name: "curve-weight-crosscheck",
            run: curve_weight_crosscheck,
        },
        Check {
            id: 8,
            name: "form-degree-identities",
            run: form_degree_identities,
        },
        Check {
            id: 9,
            name: "rank-two-marked-classes",
            run: rank_two_marked_classes,
        },
        Check {
            id: 10,
            name: "helix-validation",
            run: helix_validation,
        },
        Check {
            id: 11,
            name: "property-suites",
            run: property_suites,
        },
    ]
}

/// Brute-force scan of `|c| <= 3` for roots of `Ẽ8`, reduced mod `ω_0`.
pub fn brute_force_root_classes() -> BTreeSet<V> {
    fn go(c: &mut [i64; DIM], i: usize, out: &mut BTreeSet<V>) {
        if i == DIM {
            let v = LatticeVector(*c);
            if is_affine_root(&v) {
                out.insert(reduce_mod_omega0(&v));
            }
            return;
        }
        if i > 1 && c[1..i].iter().map(|x| x * x).sum::<i64>() > c[0] * c[0] + 2 {
            return;
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

fn reduce_mod_omega0(v: &V) -> V {
    *v - V::omega0() * v.h_coeff().div_euclid(3)
}

fn root_census() -> CheckOutcome {
    let classes = enumerate_root_classes();
    let mut failures = Vec::new();
    let fam = |k| classes.iter().filter(|c| c.kind == k).count();
    let sizes = [
        fam(RootKind::EiMinusEj),
        fam(RootKind::HMinusEJ),
        fam(RootKind::TwoHMinusEJ),
    ];
    if classes.len() != 240 || sizes != [72, 84, 84] {
        failures.push(format!("counts {} by family {:?}", classes.len(), sizes));
    }
    let reduced: BTreeSet<_> = classes.iter().map(|c| reduce_mod_omega0(&c.rep)).collect();
    if reduced.len() != classes.len() {
        failures.push("representatives collide modulo ω_0".into());
    }
    let oracle = brute_force_root_classes();
    if oracle != reduced {
        failures.push(format!(
            "brute-force oracle found {} classes, mismatch",
            oracle.len()
        ));
    }
    CheckOutcome::from_failures(failures, "240 = 72 + 84 + 84, equal to brute-force scan")
}

fn rep_dimension_grid() -> CheckOutcome {
    let table = dims_table();
    let mut failures = Vec::new();
    for (label, want) in REP_DIMS {
        let got = &table.iter().find(|r| r.label == label).unwrap().dims;
        if got.as_slice() != want {
            failures.push(format!("d={label}: got {got:?}, want {want:?}"));
        }
    }
    CheckOutcome::from_failures(failures, "9 rows match")
}

fn dimension_sums() -> CheckOutcome {
    let mut failures = Vec::new();
    for label in GradingLabel::ALL {
        let g = build_grading(label);
        let d = label.d() as usize;
        let c0 = &g.components[0];
        if g.total_dimension() != 248 {
            failures.push(format!("{label}: total {}", g.total_dimension()));
        }
        if c0.dimension != d * d - 1 + g.gu.dim {
            failures.push(format!("{label}: degree-0 dimension {}", c0.dimension));
        }
        if c0.gu_roots().count() != g.gu.root_count {
            failures.push(format!(
                "{label}: {} has {} roots, found {}",
                g.gu.name,
                g.gu.root_count,
                c0.gu_roots().count()
            ));
        }
    }
    CheckOutcome::from_failures(failures, "all ten labels sum to 248")
}

fn shape_count_table() -> CheckOutcome {
    let mut failures = Vec::new();
    for (label, m, cells, total) in SHAPE_COUNTS {
        let rows = match appendix_counts(label) {
            Ok(r) => r,
            Err(e) => {
                failures.push(e.to_string());
                continue;
            }
        };
        let row = &rows[(m - 1) as usize];
        if row.cells() != cells || row.total != total {
            failures.push(format!(
                "d={label} m={m}: got {:?}/{}, want {:?}/{}",
                row.cells(),
                row.total,
                cells,
                total
            ));
        }
    }
    CheckOutcome::from_failures(failures, "28 rows match")
}

fn orbit_structure() -> CheckOutcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for label in GradingLabel::ALL {
        let g = build_grading(label);
        let group = gu_generators(label);
        for m in 1..label.d() {
            let betas = g.beta_weights(m);
            if betas.is_empty() {
                continue;
            }
            checked += 1;
            let want = if label == D7 && (m == 1 || m == 6) {
                2
            } else {
                1
            };
            match orbit_decompose(betas, &group) {
                Ok(dec) if dec.len() == want => {}
                Ok(dec) => failures.push(format!("d={label} m={m}: {} orbits", dec.len())),
                Err(e) => failures.push(format!("d={label} m={m}: {e}")),
            }
        }
    }
    CheckOutcome::from_failures(
        failures,
        format!("{checked} nonempty components; two orbits only at d=7, m=1,6"),
    )
}

fn duality() -> CheckOutcome {
    let mut failures = Vec::new();
    for label in GradingLabel::ALL {
        let g = build_grading(label);
        let d = label.d();
        for m in 1..d {
            let image: BTreeSet<V> = g
                .beta_weights(m)
                .iter()
                .map(|b| label.omega() - *b)
                .collect();
            let target: BTreeSet<V> = g.beta_weights(d - m).iter().copied().collect();
            if image != target || image.len() != g.beta_weights(m).len() {
                failures.push(format!(
                    "d={label} m={m}: weights not carried onto degree {}",
                    d - m
                ));
            }
            let back: BTreeSet<V> = image.iter().map(|b| label.omega() - *b).collect();
            if back.iter().ne(g.beta_weights(m).iter()) {
                failures.push(format!("d={label} m={m}: not an involution"));
            }
            match duality_map(&g, m) {
                Ok(pairs) => {
                    let imgs: BTreeSet<V> = pairs.iter().map(|(_, b)| b.alpha).collect();
                    if imgs.len() != pairs.len()
                        || imgs.len() != g.components[(d - m) as usize].roots.len()
                    {
                        failures.push(format!("d={label} m={m}: root map not bijective"));
                    }
                }
                Err(e) => failures.push(format!("d={label} m={m}: {e}")),
            }
        }
    }
    CheckOutcome::from_failures(
        failures,
        "β ↦ ω_d - β is a bijection R^m -> R^(d-m) for all labels",
    )
}

fn curve_weight_crosscheck() -> CheckOutcome {
    let mut failures = Vec::new();
    for label in GradingLabel::ALL {
        for row in crosscheck_report(label) {
            if !row.equal {
                failures.push(format!(
                    "d={label} m={}: {} curves vs {} weights",
                    row.m, row.curves, row.weights
                ));
            }
        }
    }
    CheckOutcome::from_failures(
        failures,
        "curve classes equal lifted weights for all ten labels",
    )
}

fn form_degree_identities() -> CheckOutcome {
    let dims = |label| -> Vec<usize> {
        build_grading(label)
            .components
            .iter()
            .map(|c| c.dimension)
            .collect()
    };
    let mut failures = Vec::new();
    let expected: [(GradingLabel, &[usize]); 3] = [
        (D9, &[80, 0, 0, 84, 0, 0, 84, 0, 0]),
        (D8a, &[64, 8, 28, 56, 0, 56, 28, 8]),
        (D8b, &[66, 0, 56, 0, 70, 0, 56, 0]),
    ];
    for (label, want) in expected {
        let got = dims(label);
        if got.as_slice() != want {
            failures.push(format!("d={label}: got {got:?}"));
        }
    }
    CheckOutcome::from_failures(failures, "sl9+Λ3+Λ6, IIA and IIB degree lists match")
}

/// Helical classes of a rank-2 Picard lattice with `0 < m < 8`, found by
/// scanning a box rather than by the curve enumerator.
pub fn rank_two_helical_scan(label: GradingLabel) -> Vec<(i64, V)> {
    let mut out = Vec::new();
    for x in -20..=20 {
        for y in -20..=20 {
            let v = match label {
                D8b => hyperbolic_pair(x, y),
                _ => V::h() * x + V::e(1) * y,
            };
            let h = is_helical(label, &v);
            if h.helical && 0 < h.m && h.m < 8 {
                out.push((h.m, v));
            }
        }
    }
    out.sort();
    out
}

fn rank_two_marked_classes() -> CheckOutcome {
    let mut failures = Vec::new();
    let a = rank_two_helical_scan(D8a);
    let a_degrees: Vec<i64> = a.iter().map(|(m, _)| *m).collect();
    if a_degrees != [1, 2, 3, 5, 6, 7] {
        failures.push(format!("8a degrees {a_degrees:?}"));
    }
    let b = rank_two_helical_scan(D8b);
    let count = |m| b.iter().filter(|(x, _)| *x == m).count();
    if b.len() != 5 || [count(2), count(4), count(6)] != [2, 1, 2] {
        failures.push(format!("8b has {} classes", b.len()));
    }
    CheckOutcome::from_failures(
        failures,
        "8a: one class at each m in {1,2,3,5,6,7}; 8b: (2,1,2) at m = (2,4,6)",
    )
}

fn helix_validation() -> CheckOutcome {
    let mut failures = Vec::new();
    for (name, p) in [("dP4", dp4_period()), ("P2", p2_period())] {
        let r = validate_helix_period(&p);
        if !r.is_valid() {
            failures.push(format!("{name} period rejected: {r:?}"));
        }
    }
    match quiver(&dp4_period()) {
        Ok(q) => {
            let ones: usize = (0..2)
                .map(|l| q.layer(l).filter(|a| a.multiplicity == 1).count())
                .sum();
            let layer0_1: usize = (0..2).map(|l| q.layer(l).count()).sum();
            let twos = q.layer(2).filter(|a| a.multiplicity == 2).count();
            if ones != 16 || layer0_1 != 16 || twos != 4 || q.layer(2).count() != 4 {
                failures.push(format!("quiver arrows: {ones} single, {twos} double"));
            }
        }
        Err(e) => failures.push(e.to_string()),
    }
    let mut swapped = dp4_period();
    swapped.sequence.swap(1, 5);
    let r = validate_helix_period(&swapped);
    match r.failing_pairs.iter().find(|f| (f.i, f.j) == (1, 5)) {
        Some(f) if f.diff == -V::e(2) && f.m == -1 => {}
        _ => failures.push("swapped period: pair (1,5) not reported with D = -e_2".into()),
    }
    CheckOutcome::from_failures(
        failures,
        "dP4 and P2 periods valid; 16 single + 4 double arrows; swap detected",
    )
}

fn property_suites() -> CheckOutcome {
    const N: usize = 1000;
    let mut rng = StdRng::seed_from_u64(0x0e8_9ad1);
    let mut failures = Vec::new();
    let roots: Vec<V> = enumerate_root_classes()
        .into_iter()
        .map(|c| c.rep)
        .collect();
    let rand_vec =
        |rng: &mut StdRng, b: i64| LatticeVector(std::array::from_fn(|_| rng.gen_range(-b..=b)));

    let mut named_vectors = vec![
        V::h(),
        V::omega0(),
        e0(),
        f1(),
        f2(),
        omega_2p(),
        omega_3p(),
        omega_4p(),
    ];
    named_vectors.extend(GradingLabel::ALL.iter().map(|l| l.omega()));
    named_vectors.extend(GradingLabel::ALL.iter().map(|l| l.delta()));

    let mut fail = |name: &str, ok: bool, counter: &mut usize| {
        if !ok {
            *counter += 1;
            if *counter == 1 {
                failures.push(name.to_string());
            }
        }
    };
    let (mut f_chi, mut f_eq, mut f_refl, mut f_split, mut f_fw) = (0, 0, 0, 0, 0);

    let mut samples: Vec<V> = (0..N).map(|_| rand_vec(&mut rng, 6)).collect();
    samples.extend(named_vectors.iter().copied());
    for (k, u) in samples.iter().enumerate() {
        let label = GradingLabel::ALL[k % 10];
        let beta = split(label, u).0;
        let chi = euler_characteristic(label, &beta);
        let chi_neg = euler_characteristic(label, &-beta);
        fail(
            "chi reciprocity",
            matches!((&chi, &chi_neg), (Ok(a), Ok(b)) if a + b == 2 + beta.norm()),
            &mut f_chi,
        );

        let m = label.omega().dot(&beta) + (k as i64 % 3) - 1;
        let lhs = label.omega().dot(&beta) == m && beta.norm() == m - 2;
        let rhs = chi_neg == Ok(0) && chi == Ok(m);
        fail("curve/chi equivalence", lhs == rhs, &mut f_eq);

        let alpha = roots[rng.gen_range(0..roots.len())];
        let v = rand_vec(&mut rng, 6);
        let (ru, rv) = (reflect(u, &alpha).unwrap(), reflect(&v, &alpha).unwrap());
        fail(
            "reflection",
            ru.dot(&rv) == u.dot(&v) && reflect(&ru, &alpha).unwrap() == *u,
            &mut f_refl,
        );

        let (b, g) = split(label, &alpha);
        let (b2, g2) = split(label, u);
        fail(
            "split orthogonality",
            b.dot(&g) == 0 && b + g == alpha && b2.dot(&g2) == 0 && b2 + g2 == *u,
            &mut f_split,
        );

        let fw = D7.omega().dot(u) == (omega_3p() + omega_4p()).dot(u)
            && D8a.omega().dot(u) == (omega_3p() * 2 + omega_2p()).dot(u)
            && D8b.omega().dot(u) == (omega_4p() * 2).dot(u)
            && D9.omega().dot(u) == (omega_3p() * 3).dot(u);
        fail("fundamental-weight identities", fw, &mut f_fw);
    }
    CheckOutcome::from_failures(
        failures,
        format!("{} inputs per suite, 5 suites, no failures", samples.len()),
    )
}

/// Run every registered check, in id order.
pub fn run_all() -> Vec<(Check, CheckOutcome)> {
    registry()
        .into_iter()
        .map(|c| {
            let outcome = (c.run)();
            (c, outcome)
        })
        .collect()
}
