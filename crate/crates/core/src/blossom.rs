//! Brute-force blossoms.
//!
//! Every monomial blossom here is computed by literally enumerating the
//! distinct-index subsets of its arguments. Nothing is cached or pruned:
//! this module is the reference the closed-form formulas in
//! [`crate::subdivision`] are checked against, and it must not share their
//! code path.
//!
//! Each evaluated subset product counts as one term; the counted variants
//! report that number so the two approaches can be compared independently of
//! machine speed.

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::geometry::{
    triangle_indices, BezierCurve, DomainTriangle, MonomialCurve, MonomialSurface, ParamInterval, ParamRect, Point2,
    Point3, TensorPatch, TrianglePatch,
};
use crate::numeric::{binomial, multinomial, Rational};
use crate::par::Execution;
use crate::Counted;

/// Arguments `u_1..u_n` of a curve blossom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveBlossomArgs(pub Vec<Rational>);

impl CurveBlossomArgs {
    /// `count` copies of each value, in order.
    pub fn repeated(parts: &[(&Rational, usize)]) -> Self {
        CurveBlossomArgs(
            parts
                .iter()
                .flat_map(|&(value, count)| std::iter::repeat_n(value.clone(), count))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Arguments `u_1..u_n; v_1..v_m` of a tensor-product blossom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorBlossomArgs {
    pub u_values: Vec<Rational>,
    pub v_values: Vec<Rational>,
}

/// Arguments `(u_1, v_1)..(u_N, v_N)` of a triangular blossom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleBlossomArgs(pub Vec<Point2>);

impl TriangleBlossomArgs {
    pub fn repeated(parts: &[(&Point2, usize)]) -> Self {
        TriangleBlossomArgs(
            parts
                .iter()
                .flat_map(|&(value, count)| std::iter::repeat_n(value.clone(), count))
                .collect(),
        )
    }
}

fn check_len(expected: usize, actual: usize) -> Result<()> {
    if expected != actual {
        return Err(Error::ArgumentCount { expected, actual });
    }
    Ok(())
}

/// `values` over a common denominator: integers `x_k` and `d` with
/// `values[k] = x_k / d`. Products of subsets are then integer products,
/// normalised once at the end.
fn common_denominator(values: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let d = values.iter().fold(BigInt::one(), |d, x| d.lcm(x.denom()));
    let scaled = values.iter().map(|x| x.numer() * (&d / x.denom())).collect();
    (scaled, d)
}

fn integer_product<'a>(factors: impl Iterator<Item = &'a BigInt>) -> BigInt {
    factors.fold(BigInt::one(), |acc, x| acc * x)
}

/// Sum of `values[a_1] * ... * values[a_size]` over all `size`-subsets.
fn subset_product_sum(values: &[Rational], size: usize, terms: &mut u64) -> Rational {
    let (scaled, d) = common_denominator(values);
    let mut sum = BigInt::zero();
    for subset in (0..values.len()).combinations(size) {
        *terms += 1;
        sum += integer_product(subset.iter().map(|&k| &scaled[k]));
    }
    Rational::integer(sum) / Rational::integer(d.pow(size as u32))
}

/// All ordered pairs `(alpha, beta)` of disjoint subsets of `0..total` with
/// `|alpha| = i`, `|beta| = j`, in lexicographic order.
pub fn disjoint_subset_pairs(total: usize, i: usize, j: usize) -> impl Iterator<Item = (Vec<usize>, Vec<usize>)> {
    (0..total).combinations(i).flat_map(move |alpha| {
        let rest: Vec<usize> = (0..total).filter(|k| !alpha.contains(k)).collect();
        rest.into_iter().combinations(j).map(move |beta| (alpha.clone(), beta))
    })
}

fn curve_monomial(i: usize, values: &[Rational], terms: &mut u64) -> Result<Rational> {
    let n = values.len();
    if i > n {
        return Err(Error::IndexOutOfRange { index: i, degree: n });
    }
    let sum = subset_product_sum(values, i, terms);
    Ok(sum / Rational::integer(binomial(n as i64, i as i64)))
}

/// Blossom of `u^i` in `n = args.len()` variables.
pub fn monomial_blossom_curve(i: usize, args: &CurveBlossomArgs) -> Result<Rational> {
    curve_monomial(i, &args.0, &mut 0)
}

fn blossom_curve_counted(curve: &MonomialCurve, args: &CurveBlossomArgs, terms: &mut u64) -> Result<Point3> {
    check_len(curve.degree(), args.len())?;
    let mut acc = Point3::zero();
    for (i, c) in curve.coeffs().iter().enumerate() {
        acc.add_scaled(c, &curve_monomial(i, &args.0, terms)?);
    }
    Ok(acc)
}

/// Blossom of a monomial curve.
pub fn blossom_curve(curve: &MonomialCurve, args: &CurveBlossomArgs) -> Result<Point3> {
    blossom_curve_counted(curve, args, &mut 0)
}

/// Blossom of `u^i v^j`, as a product of the two univariate blossoms.
pub fn monomial_blossom_tensor(i: usize, j: usize, args: &TensorBlossomArgs) -> Result<Rational> {
    let mut terms = 0;
    Ok(curve_monomial(i, &args.u_values, &mut terms)? * curve_monomial(j, &args.v_values, &mut terms)?)
}

fn tensor_monomial_enumerated(i: usize, j: usize, args: &TensorBlossomArgs, terms: &mut u64) -> Result<Rational> {
    let (n, m) = (args.u_values.len(), args.v_values.len());
    if i > n {
        return Err(Error::IndexOutOfRange { index: i, degree: n });
    }
    if j > m {
        return Err(Error::IndexOutOfRange { index: j, degree: m });
    }
    let mut sum = Rational::zero();
    for alpha in (0..n).combinations(i) {
        for beta in (0..m).combinations(j) {
            *terms += 1;
            let mut term: Rational = alpha.iter().map(|&k| &args.u_values[k]).product();
            for &k in &beta {
                term *= &args.v_values[k];
            }
            sum += term;
        }
    }
    let norm = binomial(n as i64, i as i64) * binomial(m as i64, j as i64);
    Ok(sum / Rational::integer(norm))
}

/// Blossom of `u^i v^j` by direct double enumeration over `u`- and
/// `v`-subsets, without factoring into univariate blossoms.
pub fn monomial_blossom_tensor_enumerated(i: usize, j: usize, args: &TensorBlossomArgs) -> Result<Rational> {
    tensor_monomial_enumerated(i, j, args, &mut 0)
}

fn check_tensor_args(surface: &MonomialSurface, args: &TensorBlossomArgs) -> Result<()> {
    let (n, m) = surface.degrees();
    check_len(n, args.u_values.len())?;
    check_len(m, args.v_values.len())
}

/// Blossom of a monomial surface of bidegree `(n, m)`.
pub fn blossom_tensor(surface: &MonomialSurface, args: &TensorBlossomArgs) -> Result<Point3> {
    check_tensor_args(surface, args)?;
    let (n, m) = surface.degrees();
    let mut acc = Point3::zero();
    for i in 0..=n {
        for j in 0..=m {
            acc.add_scaled(surface.coeff(i, j), &monomial_blossom_tensor(i, j, args)?);
        }
    }
    Ok(acc)
}

fn blossom_tensor_enumerated_counted(
    surface: &MonomialSurface,
    args: &TensorBlossomArgs,
    terms: &mut u64,
) -> Result<Point3> {
    check_tensor_args(surface, args)?;
    let (n, m) = surface.degrees();
    let mut acc = Point3::zero();
    for i in 0..=n {
        for j in 0..=m {
            acc.add_scaled(surface.coeff(i, j), &tensor_monomial_enumerated(i, j, args, terms)?);
        }
    }
    Ok(acc)
}

/// [`blossom_tensor`] computed through [`monomial_blossom_tensor_enumerated`].
pub fn blossom_tensor_enumerated(surface: &MonomialSurface, args: &TensorBlossomArgs) -> Result<Point3> {
    blossom_tensor_enumerated_counted(surface, args, &mut 0)
}

fn triangle_monomial(i: usize, j: usize, points: &[Point2], terms: &mut u64) -> Result<Rational> {
    let total = points.len();
    if i + j > total {
        return Err(Error::IndexOutOfRange {
            index: i + j,
            degree: total,
        });
    }
    let (s, ds) = common_denominator(&points.iter().map(|p| p.s.clone()).collect::<Vec<_>>());
    let (t, dt) = common_denominator(&points.iter().map(|p| p.t.clone()).collect::<Vec<_>>());
    let mut sum = BigInt::zero();
    for (alpha, beta) in disjoint_subset_pairs(total, i, j) {
        *terms += 1;
        sum += integer_product(alpha.iter().map(|&k| &s[k]).chain(beta.iter().map(|&k| &t[k])));
    }
    let scale = ds.pow(i as u32) * dt.pow(j as u32) * multinomial(total as i64, i as i64, j as i64);
    Ok(Rational::integer(sum) / Rational::integer(scale))
}

/// Blossom of `u^i v^j` in `N = args.len()` point arguments.
pub fn monomial_blossom_triangle(i: usize, j: usize, args: &TriangleBlossomArgs) -> Result<Rational> {
    triangle_monomial(i, j, &args.0, &mut 0)
}

fn blossom_triangle_counted(surface: &MonomialSurface, args: &TriangleBlossomArgs, terms: &mut u64) -> Result<Point3> {
    check_len(surface.total_degree(), args.0.len())?;
    let (n, m) = surface.degrees();
    let mut acc = Point3::zero();
    for i in 0..=n {
        for j in 0..=m {
            acc.add_scaled(surface.coeff(i, j), &triangle_monomial(i, j, &args.0, terms)?);
        }
    }
    Ok(acc)
}

/// Blossom of a monomial surface viewed as a polynomial of total degree `n + m`.
pub fn blossom_triangle(surface: &MonomialSurface, args: &TriangleBlossomArgs) -> Result<Point3> {
    blossom_triangle_counted(surface, args, &mut 0)
}

/// `w_nu = blossom(b x nu, a x (n - nu))` for every `nu`.
pub fn curve_control_points(curve: &MonomialCurve, interval: &ParamInterval, exec: Execution) -> Counted<BezierCurve> {
    let n = curve.degree();
    let nus: Vec<usize> = (0..=n).collect();
    let results = exec.map(&nus, |&nu| {
        let mut terms = 0;
        let args = CurveBlossomArgs::repeated(&[(&interval.b, nu), (&interval.a, n - nu)]);
        let point = blossom_curve_counted(curve, &args, &mut terms).expect("argument count matches degree");
        (point, terms)
    });
    let terms = results.iter().map(|r| r.1).sum();
    let points = results.into_iter().map(|r| r.0).collect();
    Counted {
        value: BezierCurve::new(points).expect("n + 1 points"),
        terms,
    }
}

/// `p_{nu,mu} = blossom(b x nu, a x (n - nu); d x mu, c x (m - mu))`, through
/// the double-enumeration monomial blossoms.
pub fn tensor_control_points(surface: &MonomialSurface, rect: &ParamRect, exec: Execution) -> Counted<TensorPatch> {
    let (n, m) = surface.degrees();
    let (ur, vr) = (&rect.u_range, &rect.v_range);
    let index: Vec<(usize, usize)> = (0..=n).flat_map(|nu| (0..=m).map(move |mu| (nu, mu))).collect();
    let results = exec.map(&index, |&(nu, mu)| {
        let mut terms = 0;
        let args = TensorBlossomArgs {
            u_values: CurveBlossomArgs::repeated(&[(&ur.b, nu), (&ur.a, n - nu)]).0,
            v_values: CurveBlossomArgs::repeated(&[(&vr.b, mu), (&vr.a, m - mu)]).0,
        };
        let point =
            blossom_tensor_enumerated_counted(surface, &args, &mut terms).expect("argument counts match degrees");
        (point, terms)
    });
    let terms = results.iter().map(|r| r.1).sum();
    let points = results.into_iter().map(|r| r.0).collect();
    Counted {
        value: TensorPatch::new(n, m, points, rect.clone()).expect("(n+1)(m+1) points"),
        terms,
    }
}

/// `q_{nu,mu} = blossom(a x nu, b x mu, c x lambda)`.
pub fn triangle_control_points(
    surface: &MonomialSurface,
    tri: &DomainTriangle,
    exec: Execution,
) -> Counted<TrianglePatch> {
    let total = surface.total_degree();
    let index: Vec<(usize, usize)> = triangle_indices(total).collect();
    let results = exec.map(&index, |&(nu, mu)| {
        let mut terms = 0;
        let args = TriangleBlossomArgs::repeated(&[(&tri.va, nu), (&tri.vb, mu), (&tri.vc, total - nu - mu)]);
        let point = blossom_triangle_counted(surface, &args, &mut terms).expect("argument count matches degree");
        (point, terms)
    });
    let terms = results.iter().map(|r| r.1).sum();
    let points = results.into_iter().map(|r| r.0).collect();
    Counted {
        value: TrianglePatch::new(total, points, tri.clone()).expect("triangular point count"),
        terms,
    }
}
