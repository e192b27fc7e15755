//! Randomised and exhaustive checks shared by the core test suites and the
//! CLI acceptance suite. Each returns the number of cases checked, or a
//! description of the first failure.

use std::collections::{BTreeMap, BTreeSet};

use blossom_core::blossom::{
    self, blossom_curve, blossom_tensor, blossom_tensor_enumerated, blossom_triangle, disjoint_subset_pairs,
    monomial_blossom_tensor, monomial_blossom_tensor_enumerated, CurveBlossomArgs, TensorBlossomArgs,
    TriangleBlossomArgs,
};
use blossom_core::sample;
use blossom_core::subdivision::{index_assignment_count, index_assignment_count_v_first};
use blossom_core::{
    subdivide_curve, subdivide_curve_with, subdivide_tensor, subdivide_tensor_with, subdivide_triangle,
    subdivide_triangle_with, Execution, IndexSplit, Point2, Point3, Rational, TriangularLoopBounds,
};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type CheckResult = Result<usize, String>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn rationals(rng: &mut ChaCha8Rng, len: usize) -> Vec<Rational> {
    (0..len).map(|_| sample::rational(rng)).collect()
}

fn lerp(x: &Rational, y: &Rational, alpha: &Rational) -> Rational {
    &(&(&Rational::one() - alpha) * x) + &(alpha * y)
}

fn affine(p: &Point3, q: &Point3, alpha: &Rational) -> Point3 {
    &p.scale(&(&Rational::one() - alpha)) + &q.scale(alpha)
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

/// Symmetry, multi-affinity and diagonal reduction of the curve blossom.
pub fn curve_blossom_axioms(seed: u64, instances: usize) -> CheckResult {
    let mut rng = rng(seed);
    for case in 0..instances {
        let n = rng.gen_range(1..=4);
        let curve = sample::curve(&mut rng, n);
        let args = rationals(&mut rng, n);
        let base = blossom_curve(&curve, &CurveBlossomArgs(args.clone())).unwrap();

        let mut shuffled = args.clone();
        shuffled.shuffle(&mut rng);
        ensure!(
            blossom_curve(&curve, &CurveBlossomArgs(shuffled)).unwrap() == base,
            "curve symmetry, case {case}"
        );

        let k = rng.gen_range(0..n);
        let (x, y, alpha) = (
            sample::rational(&mut rng),
            sample::rational(&mut rng),
            sample::rational(&mut rng),
        );
        let with = |value: Rational| {
            let mut a = args.clone();
            a[k] = value;
            blossom_curve(&curve, &CurveBlossomArgs(a)).unwrap()
        };
        ensure!(
            with(lerp(&x, &y, &alpha)) == affine(&with(x.clone()), &with(y.clone()), &alpha),
            "curve multi-affinity, case {case}"
        );

        let t = sample::rational(&mut rng);
        ensure!(
            blossom_curve(&curve, &CurveBlossomArgs(vec![t.clone(); n])).unwrap() == curve.eval(&t),
            "curve diagonal, case {case}"
        );
    }
    Ok(instances)
}

/// Axioms for the tensor-product blossom, in both argument groups.
pub fn tensor_blossom_axioms(seed: u64, instances: usize) -> CheckResult {
    let mut rng = rng(seed);
    for case in 0..instances {
        let (n, m) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let surface = sample::surface(&mut rng, n, m);
        let args = TensorBlossomArgs {
            u_values: rationals(&mut rng, n),
            v_values: rationals(&mut rng, m),
        };
        let base = blossom_tensor(&surface, &args).unwrap();

        let mut shuffled = args.clone();
        shuffled.u_values.shuffle(&mut rng);
        shuffled.v_values.shuffle(&mut rng);
        ensure!(
            blossom_tensor(&surface, &shuffled).unwrap() == base,
            "tensor symmetry, case {case}"
        );

        let in_u = rng.gen_bool(0.5);
        let k = rng.gen_range(0..if in_u { n } else { m });
        let (x, y, alpha) = (
            sample::rational(&mut rng),
            sample::rational(&mut rng),
            sample::rational(&mut rng),
        );
        let with = |value: Rational| {
            let mut a = args.clone();
            if in_u {
                a.u_values[k] = value;
            } else {
                a.v_values[k] = value;
            }
            blossom_tensor(&surface, &a).unwrap()
        };
        ensure!(
            with(lerp(&x, &y, &alpha)) == affine(&with(x.clone()), &with(y.clone()), &alpha),
            "tensor multi-affinity, case {case}"
        );

        let (u, v) = (sample::rational(&mut rng), sample::rational(&mut rng));
        let diagonal = TensorBlossomArgs {
            u_values: vec![u.clone(); n],
            v_values: vec![v.clone(); m],
        };
        ensure!(
            blossom_tensor(&surface, &diagonal).unwrap() == surface.eval(&u, &v),
            "tensor diagonal, case {case}"
        );
    }
    Ok(instances)
}

/// Axioms for the triangular blossom; affinity is over a whole point argument.
pub fn triangle_blossom_axioms(seed: u64, instances: usize) -> CheckResult {
    let mut rng = rng(seed);
    for case in 0..instances {
        let (n, m) = (rng.gen_range(0..=4), rng.gen_range(0..=4));
        let (n, m) = if n + m == 0 { (1, 0) } else { (n, m) };
        let total = n + m;
        let surface = sample::surface(&mut rng, n, m);
        let points: Vec<Point2> = (0..total).map(|_| sample::point2(&mut rng)).collect();
        let base = blossom_triangle(&surface, &TriangleBlossomArgs(points.clone())).unwrap();

        let mut shuffled = points.clone();
        shuffled.shuffle(&mut rng);
        ensure!(
            blossom_triangle(&surface, &TriangleBlossomArgs(shuffled)).unwrap() == base,
            "triangle symmetry, case {case}"
        );

        let k = rng.gen_range(0..total);
        let (x, y, alpha) = (
            sample::point2(&mut rng),
            sample::point2(&mut rng),
            sample::rational(&mut rng),
        );
        let with = |value: Point2| {
            let mut a = points.clone();
            a[k] = value;
            blossom_triangle(&surface, &TriangleBlossomArgs(a)).unwrap()
        };
        let mixed = Point2::new(lerp(&x.s, &y.s, &alpha), lerp(&x.t, &y.t, &alpha));
        ensure!(
            with(mixed) == affine(&with(x.clone()), &with(y.clone()), &alpha),
            "triangle multi-affinity, case {case}"
        );

        let p = sample::point2(&mut rng);
        ensure!(
            blossom_triangle(&surface, &TriangleBlossomArgs(vec![p.clone(); total])).unwrap() == surface.eval_at(&p),
            "triangle diagonal, case {case}"
        );
    }
    Ok(instances)
}

/// Factored and directly enumerated tensor monomial blossoms agree for every
/// `(i, j)` with `n, m <= 4`.
pub fn tensor_product_form(seed: u64, rounds: usize) -> CheckResult {
    let mut rng = rng(seed);
    let mut checked = 0;
    for _ in 0..rounds {
        for n in 0..=4 {
            for m in 0..=4 {
                let args = TensorBlossomArgs {
                    u_values: rationals(&mut rng, n),
                    v_values: rationals(&mut rng, m),
                };
                for i in 0..=n {
                    for j in 0..=m {
                        ensure!(
                            monomial_blossom_tensor(i, j, &args).unwrap()
                                == monomial_blossom_tensor_enumerated(i, j, &args).unwrap(),
                            "product form differs at n={n} m={m} i={i} j={j}"
                        );
                        checked += 1;
                    }
                }
                let surface = sample::surface(&mut rng, n, m);
                ensure!(
                    blossom_tensor(&surface, &args).unwrap() == blossom_tensor_enumerated(&surface, &args).unwrap(),
                    "surface blossom forms differ at n={n} m={m}"
                );
            }
        }
    }
    Ok(checked)
}

/// Closed-form control points equal oracle blossom values, per shape.
pub fn oracle_equivalence(seed: u64, cases: usize, max_degree: usize) -> CheckResult {
    let mut rng = rng(seed);
    for case in 0..cases {
        let n = rng.gen_range(0..=max_degree);
        let m = rng.gen_range(0..=max_degree);

        let curve = sample::curve(&mut rng, n);
        let interval = sample::interval(&mut rng);
        let fast = subdivide_curve(&curve, &interval);
        let slow = blossom::curve_control_points(&curve, &interval, Execution::Sequential).value;
        ensure!(fast == slow, "curve case {case}: {curve:?} over {interval:?}");

        let surface = sample::surface(&mut rng, n, m);
        let rect = sample::rect(&mut rng);
        let fast = subdivide_tensor(&surface, &rect);
        let slow = blossom::tensor_control_points(&surface, &rect, Execution::Sequential).value;
        ensure!(fast == slow, "tensor case {case}: {surface:?} over {rect:?}");

        let tri = sample::triangle(&mut rng);
        let fast = subdivide_triangle(&surface, &tri);
        let slow = blossom::triangle_control_points(&surface, &tri, Execution::Sequential).value;
        ensure!(fast == slow, "triangle case {case}: {surface:?} over {tri:?}");
        for ((nu, mu), q) in fast.labelled() {
            let args = TriangleBlossomArgs::repeated(&[(&tri.va, nu), (&tri.vb, mu), (&tri.vc, n + m - nu - mu)]);
            ensure!(
                *q == blossom_triangle(&surface, &args).unwrap(),
                "triangle case {case}, q_{nu}{mu}"
            );
        }
    }
    Ok(cases)
}

/// Rational sample parameters in `[0, 1]` (plus a few outside) for patch checks.
fn unit_samples(count: i64) -> Vec<Rational> {
    (0..count).map(|k| Rational::frac(k, count - 1)).collect()
}

/// Evaluating the subdivided patch equals evaluating the monomial form at the
/// reparameterised point: 5 x 5 grid for tensor patches, 15 barycentric
/// samples for triangular patches, 11 parameters for curves.
pub fn geometric_consistency(seed: u64, surfaces: usize) -> CheckResult {
    let mut rng = rng(seed);
    let grid = unit_samples(5);
    let params: Vec<Rational> = unit_samples(9)
        .into_iter()
        .chain([Rational::frac(-1, 2), Rational::frac(5, 3)])
        .collect();
    let mut bary: Vec<(Rational, Rational)> = Vec::new();
    for a in 0..=4i64 {
        for b in 0..=(4 - a) {
            bary.push((Rational::frac(a, 4), Rational::frac(b, 4)));
        }
    }
    assert_eq!(bary.len(), 15);
    let mut checked = 0;
    for case in 0..surfaces {
        let (n, m) = (rng.gen_range(0..=3), rng.gen_range(0..=3));

        let curve = sample::curve(&mut rng, n);
        let interval = sample::interval(&mut rng);
        let bez = subdivide_curve(&curve, &interval);
        for t in &params {
            ensure!(
                bez.de_casteljau(t) == curve.eval(&interval.at(t)),
                "curve case {case} at t={t}"
            );
            checked += 1;
        }

        let surface = sample::surface(&mut rng, n, m);
        let rect = sample::rect(&mut rng);
        let patch = subdivide_tensor(&surface, &rect);
        for u in &grid {
            for v in &grid {
                let expected = surface.eval(&rect.u_range.at(u), &rect.v_range.at(v));
                ensure!(patch.de_casteljau(u, v) == expected, "tensor case {case} at ({u}, {v})");
                checked += 1;
            }
        }

        let tri = sample::triangle(&mut rng);
        let patch = subdivide_triangle(&surface, &tri);
        for (u, v) in &bary {
            let expected = surface.eval_at(&tri.barycentric_to_cartesian(u, v));
            ensure!(
                patch.de_casteljau(u, v) == expected,
                "triangle case {case} at ({u}, {v})"
            );
            checked += 1;
        }
    }
    Ok(checked)
}

/// The two cardinality groupings agree on every valid split up to
/// `max_total`, and both equal a literal count of index assignments up to
/// `max_literal`.
pub fn cardinality_agreement(max_total: i64, max_literal: i64) -> CheckResult {
    let mut checked = 0;
    for total in 0..=max_total {
        for nu in 0..=total {
            for mu in 0..=(total - nu) {
                for i in 0..=total {
                    for j in 0..=(total - i) {
                        let literal = (total <= max_literal).then(|| literal_counts(total, nu, mu, i, j));
                        for split in all_splits(i, j) {
                            let u_first = index_assignment_count(total, nu, mu, &split);
                            let v_first = index_assignment_count_v_first(total, nu, mu, &split);
                            ensure!(
                                u_first == v_first,
                                "groupings differ at N={total} nu={nu} mu={mu} {split:?}: {u_first} vs {v_first}"
                            );
                            if let Some(counts) = &literal {
                                let expected = counts.get(&split).copied().unwrap_or(0);
                                ensure!(
                                    u_first == BigInt::from(expected),
                                    "literal count differs at N={total} nu={nu} mu={mu} {split:?}"
                                );
                            }
                            checked += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(checked)
}

fn all_splits(i: i64, j: i64) -> impl Iterator<Item = IndexSplit> {
    (0..=i).flat_map(move |i_alpha| {
        (0..=i - i_alpha).flat_map(move |i_beta| {
            (0..=j).flat_map(move |j_alpha| {
                (0..=j - j_alpha).map(move |j_beta| IndexSplit {
                    i_alpha,
                    i_beta,
                    i_gamma: i - i_alpha - i_beta,
                    j_alpha,
                    j_beta,
                    j_gamma: j - j_alpha - j_beta,
                })
            })
        })
    })
}

fn literal_counts(total: i64, nu: i64, mu: i64, i: i64, j: i64) -> BTreeMap<IndexSplit, u64> {
    let zone = |k: usize| {
        let k = k as i64;
        if k < nu {
            0
        } else if k < nu + mu {
            1
        } else {
            2
        }
    };
    let mut counts = BTreeMap::new();
    for (alpha, beta) in disjoint_subset_pairs(total as usize, i as usize, j as usize) {
        let mut per = [[0i64; 3]; 2];
        alpha.iter().for_each(|&k| per[0][zone(k)] += 1);
        beta.iter().for_each(|&k| per[1][zone(k)] += 1);
        let split = IndexSplit {
            i_alpha: per[0][0],
            i_beta: per[0][1],
            i_gamma: per[0][2],
            j_alpha: per[1][0],
            j_beta: per[1][1],
            j_gamma: per[1][2],
        };
        *counts.entry(split).or_insert(0) += 1;
    }
    counts
}

/// The nested loop ranges enumerate exactly the splits satisfying the raw
/// feasibility conditions, for every valid `(N, nu, mu, i, j)`.
pub fn bounds_exhaustive(max_total: i64) -> CheckResult {
    let mut checked = 0;
    for total in 0..=max_total {
        for nu in 0..=total {
            for mu in 0..=(total - nu) {
                let lambda = total - nu - mu;
                for i in 0..=total {
                    for j in 0..=(total - i) {
                        let bounds = TriangularLoopBounds::new(total, nu, mu, i, j).unwrap();
                        let listed: Vec<IndexSplit> = bounds.splits().collect();
                        let enumerated: BTreeSet<IndexSplit> = listed.iter().copied().collect();
                        ensure!(enumerated.len() == listed.len(), "duplicate splits at N={total}");
                        let mut filtered = BTreeSet::new();
                        for i_alpha in 0..=i {
                            for i_beta in 0..=i {
                                for j_alpha in 0..=j {
                                    for j_beta in 0..=j {
                                        let i_gamma = i - i_alpha - i_beta;
                                        let j_gamma = j - j_alpha - j_beta;
                                        let counts_ok = (0..=nu).contains(&i_alpha)
                                            && (0..=mu).contains(&i_beta)
                                            && i_alpha + i_beta <= i
                                            && i_gamma <= lambda
                                            && i_alpha + j_alpha <= nu
                                            && i_beta + j_beta <= mu
                                            && j_alpha + j_beta <= j
                                            && j_gamma <= lambda - i_gamma;
                                        if counts_ok {
                                            filtered.insert(IndexSplit {
                                                i_alpha,
                                                i_beta,
                                                i_gamma,
                                                j_alpha,
                                                j_beta,
                                                j_gamma,
                                            });
                                        }
                                    }
                                }
                            }
                        }
                        ensure!(
                            enumerated == filtered,
                            "bounds mismatch at N={total} nu={nu} mu={mu} i={i} j={j}"
                        );
                        checked += 1;
                    }
                }
            }
        }
    }
    Ok(checked)
}

/// Summand counts `(closed_form, oracle)` per shape at a given degree, on a
/// deterministic random instance.
pub fn term_counts(seed: u64, degree: usize) -> [(&'static str, u64, u64); 3] {
    let mut rng = rng(seed);
    let curve = sample::curve(&mut rng, degree);
    let surface = sample::surface(&mut rng, degree, degree);
    let interval = sample::interval(&mut rng);
    let rect = sample::rect(&mut rng);
    let tri = sample::triangle(&mut rng);
    let exec = Execution::Parallel;
    [
        (
            "curve",
            subdivide_curve_with(&curve, &interval, exec).terms,
            blossom::curve_control_points(&curve, &interval, exec).terms,
        ),
        (
            "tpb",
            subdivide_tensor_with(&surface, &rect, exec).terms,
            blossom::tensor_control_points(&surface, &rect, exec).terms,
        ),
        (
            "tb",
            subdivide_triangle_with(&surface, &tri, exec).terms,
            blossom::triangle_control_points(&surface, &tri, exec).terms,
        ),
    ]
}
