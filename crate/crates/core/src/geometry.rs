//! Monomial and Bernstein representations of curves and surfaces, together
//! with the evaluation routines used to cross-check subdivision results.
//!
//! Monomial input is evaluated with Horner's scheme, Bernstein output with
//! de Casteljau's algorithm. The two code paths share nothing beyond
//! [`Point3`] arithmetic. All grids are stored i-major (outer index `i` or
//! `nu`).
//!
//! Scalar polynomials are represented as [`Point3`] values with `y = z = 0`.

use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{binomial, multinomial, Rational};

/// Point (or vector) in world space.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "[Rational; 3]", into = "[Rational; 3]")]
pub struct Point3 {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Point3 {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        Point3 { x, y, z }
    }

    pub fn zero() -> Self {
        Point3::default()
    }

    /// `(value, 0, 0)`.
    pub fn scalar(value: Rational) -> Self {
        Point3::new(value, Rational::zero(), Rational::zero())
    }

    pub fn scale(&self, s: &Rational) -> Point3 {
        Point3::new(&self.x * s, &self.y * s, &self.z * s)
    }

    /// `self += other * s`
    pub fn add_scaled(&mut self, other: &Point3, s: &Rational) {
        self.x += &other.x * s;
        self.y += &other.y * s;
        self.z += &other.z * s;
    }

    /// `(1 - t) * self + t * other`
    pub fn lerp(&self, other: &Point3, t: &Rational) -> Point3 {
        self + &(other - self).scale(t)
    }

    pub fn to_f64(&self) -> [f64; 3] {
        [self.x.to_f64(), self.y.to_f64(), self.z.to_f64()]
    }
}

impl From<[Rational; 3]> for Point3 {
    fn from([x, y, z]: [Rational; 3]) -> Self {
        Point3 { x, y, z }
    }
}

impl From<Point3> for [Rational; 3] {
    fn from(p: Point3) -> Self {
        [p.x, p.y, p.z]
    }
}

impl Add for &Point3 {
    type Output = Point3;
    fn add(self, rhs: &Point3) -> Point3 {
        Point3::new(&self.x + &rhs.x, &self.y + &rhs.y, &self.z + &rhs.z)
    }
}

impl Add for Point3 {
    type Output = Point3;
    fn add(self, rhs: Point3) -> Point3 {
        Point3::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl Sub for &Point3 {
    type Output = Point3;
    fn sub(self, rhs: &Point3) -> Point3 {
        Point3::new(&self.x - &rhs.x, &self.y - &rhs.y, &self.z - &rhs.z)
    }
}

impl Mul<&Rational> for &Point3 {
    type Output = Point3;
    fn mul(self, rhs: &Rational) -> Point3 {
        self.scale(rhs)
    }
}

/// Point in the parameter plane.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "[Rational; 2]", into = "[Rational; 2]")]
pub struct Point2 {
    pub s: Rational,
    pub t: Rational,
}

impl Point2 {
    pub fn new(s: Rational, t: Rational) -> Self {
        Point2 { s, t }
    }
}

impl From<[Rational; 2]> for Point2 {
    fn from([s, t]: [Rational; 2]) -> Self {
        Point2 { s, t }
    }
}

impl From<Point2> for [Rational; 2] {
    fn from(p: Point2) -> Self {
        [p.s, p.t]
    }
}

/// `C(u) = sum c_i u^i`, `i = 0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialCurve {
    coeffs: Vec<Point3>,
}

impl MonomialCurve {
    /// `coeffs[i]` multiplies `u^i`; must be non-empty.
    pub fn new(coeffs: Vec<Point3>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Shape {
                expected: (1, 1),
                actual: (0, 1),
            });
        }
        Ok(MonomialCurve { coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Point3] {
        &self.coeffs
    }

    /// Horner evaluation.
    pub fn eval(&self, u: &Rational) -> Point3 {
        let mut acc = Point3::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc.scale(u) + c;
        }
        acc
    }
}

/// `S(u, v) = sum c_ij u^i v^j`, `i = 0..=n`, `j = 0..=m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialSurface {
    n: usize,
    m: usize,
    coeffs: Vec<Point3>,
}

impl MonomialSurface {
    /// `grid[i][j]` multiplies `u^i v^j`.
    pub fn new(grid: Vec<Vec<Point3>>) -> Result<Self> {
        let rows = grid.len();
        let cols = grid.first().map_or(0, Vec::len);
        if rows == 0 || cols == 0 {
            return Err(Error::Shape {
                expected: (rows.max(1), cols.max(1)),
                actual: (rows, cols),
            });
        }
        if let Some(bad) = grid.iter().find(|row| row.len() != cols) {
            return Err(Error::Shape {
                expected: (rows, cols),
                actual: (rows, bad.len()),
            });
        }
        Ok(MonomialSurface {
            n: rows - 1,
            m: cols - 1,
            coeffs: grid.into_iter().flatten().collect(),
        })
    }

    /// Bidegree `(n, m)` with coefficients listed i-major.
    pub fn from_flat(n: usize, m: usize, coeffs: Vec<Point3>) -> Result<Self> {
        if coeffs.len() != (n + 1) * (m + 1) {
            return Err(Error::Shape {
                expected: (n + 1, m + 1),
                actual: (coeffs.len() / (m + 1), m + 1),
            });
        }
        Ok(MonomialSurface { n, m, coeffs })
    }

    pub fn degrees(&self) -> (usize, usize) {
        (self.n, self.m)
    }

    /// Total degree `n + m` used for triangular patches.
    pub fn total_degree(&self) -> usize {
        self.n + self.m
    }

    pub fn coeff(&self, i: usize, j: usize) -> &Point3 {
        &self.coeffs[i * (self.m + 1) + j]
    }

    pub fn coeffs(&self) -> &[Point3] {
        &self.coeffs
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Point3]> {
        self.coeffs.chunks(self.m + 1)
    }

    /// Nested Horner evaluation, `v` inner.
    pub fn eval(&self, u: &Rational, v: &Rational) -> Point3 {
        let mut acc = Point3::zero();
        for row in self.rows().collect::<Vec<_>>().into_iter().rev() {
            let mut inner = Point3::zero();
            for c in row.iter().rev() {
                inner = &inner.scale(v) + c;
            }
            acc = &acc.scale(u) + &inner;
        }
        acc
    }

    pub fn eval_at(&self, p: &Point2) -> Point3 {
        self.eval(&p.s, &p.t)
    }
}

/// Parameter interval `[a, b]`. Neither `a < b` nor `a != b` is required.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamInterval {
    pub a: Rational,
    pub b: Rational,
}

impl ParamInterval {
    pub fn new(a: Rational, b: Rational) -> Self {
        ParamInterval { a, b }
    }

    /// `a + (b - a) t`
    pub fn at(&self, t: &Rational) -> Rational {
        &self.a + &(&(&self.b - &self.a) * t)
    }
}

/// `[a, b] x [c, d]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamRect {
    pub u_range: ParamInterval,
    pub v_range: ParamInterval,
}

impl ParamRect {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        ParamRect {
            u_range: ParamInterval::new(a, b),
            v_range: ParamInterval::new(c, d),
        }
    }
}

/// Triangle `abc` in the parameter plane. Collinear vertices are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainTriangle {
    pub va: Point2,
    pub vb: Point2,
    pub vc: Point2,
}

impl DomainTriangle {
    pub fn new(va: Point2, vb: Point2, vc: Point2) -> Self {
        DomainTriangle { va, vb, vc }
    }

    /// Twice the signed area.
    pub fn signed_area2(&self) -> Rational {
        let (a, b, c) = (&self.va, &self.vb, &self.vc);
        &(&(&b.s - &a.s) * &(&c.t - &a.t)) - &(&(&b.t - &a.t) * &(&c.s - &a.s))
    }

    pub fn is_degenerate(&self) -> bool {
        self.signed_area2().is_zero()
    }

    /// `u * a + v * b + (1 - u - v) * c`
    pub fn barycentric_to_cartesian(&self, u: &Rational, v: &Rational) -> Point2 {
        let w = &(&Rational::one() - u) - v;
        let combine = |pa: &Rational, pb: &Rational, pc: &Rational| &(&(u * pa) + &(v * pb)) + &(&w * pc);
        Point2::new(
            combine(&self.va.s, &self.vb.s, &self.vc.s),
            combine(&self.va.t, &self.vb.t, &self.vc.t),
        )
    }
}

/// `B_k^n(t) = C(n, k) t^k (1 - t)^(n - k)`; zero for `k > n`.
pub fn bernstein(n: usize, k: usize, t: &Rational) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let s = &Rational::one() - t;
    Rational::integer(binomial(n as i64, k as i64)) * t.pow(k as u32) * s.pow((n - k) as u32)
}

/// `B_{nu,mu}^N(u, v) = N!/(nu! mu! lambda!) u^nu v^mu (1-u-v)^lambda`.
pub fn bernstein_triangle(total: usize, nu: usize, mu: usize, u: &Rational, v: &Rational) -> Rational {
    if nu + mu > total {
        return Rational::zero();
    }
    let w = &(&Rational::one() - u) - v;
    Rational::integer(multinomial(total as i64, nu as i64, mu as i64))
        * u.pow(nu as u32)
        * v.pow(mu as u32)
        * w.pow((total - nu - mu) as u32)
}

fn de_casteljau(points: &[Point3], t: &Rational) -> Point3 {
    let mut work = points.to_vec();
    for level in (1..work.len()).rev() {
        for k in 0..level {
            work[k] = work[k].lerp(&work[k + 1], t);
        }
    }
    work.into_iter().next().unwrap_or_default()
}

/// Bernstein-form curve of degree `n` with control points `w_0..w_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BezierCurve {
    control_points: Vec<Point3>,
}

impl BezierCurve {
    pub fn new(control_points: Vec<Point3>) -> Result<Self> {
        if control_points.is_empty() {
            return Err(Error::Shape {
                expected: (1, 1),
                actual: (0, 1),
            });
        }
        Ok(BezierCurve { control_points })
    }

    pub fn degree(&self) -> usize {
        self.control_points.len() - 1
    }

    pub fn control_points(&self) -> &[Point3] {
        &self.control_points
    }

    pub fn de_casteljau(&self, t: &Rational) -> Point3 {
        de_casteljau(&self.control_points, t)
    }

    /// Direct Bernstein-basis sum; independent of [`Self::de_casteljau`].
    pub fn bernstein_sum(&self, t: &Rational) -> Point3 {
        let n = self.degree();
        let mut acc = Point3::zero();
        for (k, w) in self.control_points.iter().enumerate() {
            acc.add_scaled(w, &bernstein(n, k, t));
        }
        acc
    }
}

/// Tensor-product Bezier patch of bidegree `(n, m)`, control points i-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorPatch {
    n: usize,
    m: usize,
    control_points: Vec<Point3>,
    domain: ParamRect,
}

impl TensorPatch {
    pub fn new(n: usize, m: usize, control_points: Vec<Point3>, domain: ParamRect) -> Result<Self> {
        if control_points.len() != (n + 1) * (m + 1) {
            return Err(Error::Shape {
                expected: (n + 1, m + 1),
                actual: (control_points.len() / (m + 1), m + 1),
            });
        }
        Ok(TensorPatch {
            n,
            m,
            control_points,
            domain,
        })
    }

    pub fn degrees(&self) -> (usize, usize) {
        (self.n, self.m)
    }

    pub fn domain(&self) -> &ParamRect {
        &self.domain
    }

    pub fn control_point(&self, nu: usize, mu: usize) -> &Point3 {
        &self.control_points[nu * (self.m + 1) + mu]
    }

    pub fn control_points(&self) -> &[Point3] {
        &self.control_points
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Point3]> {
        self.control_points.chunks(self.m + 1)
    }

    /// Curve de Casteljau along `v` on each row, then along `u`.
    pub fn de_casteljau(&self, u: &Rational, v: &Rational) -> Point3 {
        let column: Vec<Point3> = self.rows().map(|row| de_casteljau(row, v)).collect();
        de_casteljau(&column, u)
    }
}

/// Row-major offset of `(nu, mu)` in a triangular array of degree `total`.
pub fn triangle_index(total: usize, nu: usize, mu: usize) -> usize {
    debug_assert!(nu + mu <= total);
    nu * (total + 1) - nu * nu.saturating_sub(1) / 2 + mu
}

/// Number of control points of a triangular patch of degree `total`.
pub fn triangle_len(total: usize) -> usize {
    (total + 1) * (total + 2) / 2
}

/// All `(nu, mu)` with `nu + mu <= total`, row-major by `nu` then `mu`.
pub fn triangle_indices(total: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..=total).flat_map(move |nu| (0..=total - nu).map(move |mu| (nu, mu)))
}

/// Triangular Bezier patch of total degree `N`.
///
/// `q_{nu,mu}` carries barycentric weight `u^nu v^mu (1-u-v)^lambda`, i.e. it is
/// the blossom at `nu` copies of vertex `a`, `mu` of `b` and `lambda` of `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrianglePatch {
    total: usize,
    control_points: Vec<Point3>,
    domain: DomainTriangle,
}

impl TrianglePatch {
    pub fn new(total: usize, control_points: Vec<Point3>, domain: DomainTriangle) -> Result<Self> {
        let expected = triangle_len(total);
        if control_points.len() != expected {
            return Err(Error::Shape {
                expected: (expected, 1),
                actual: (control_points.len(), 1),
            });
        }
        Ok(TrianglePatch {
            total,
            control_points,
            domain,
        })
    }

    pub fn degree(&self) -> usize {
        self.total
    }

    pub fn domain(&self) -> &DomainTriangle {
        &self.domain
    }

    pub fn control_point(&self, nu: usize, mu: usize) -> &Point3 {
        &self.control_points[triangle_index(self.total, nu, mu)]
    }

    pub fn control_points(&self) -> &[Point3] {
        &self.control_points
    }

    /// `((nu, mu), q)` in storage order.
    pub fn labelled(&self) -> impl Iterator<Item = ((usize, usize), &Point3)> {
        triangle_indices(self.total).zip(self.control_points.iter())
    }

    pub fn de_casteljau(&self, u: &Rational, v: &Rational) -> Point3 {
        let w = &(&Rational::one() - u) - v;
        let mut level = self.total;
        let mut work = self.control_points.clone();
        while level > 0 {
            let next_level = level - 1;
            let mut next = Vec::with_capacity(triangle_len(next_level));
            for (nu, mu) in triangle_indices(next_level) {
                let mut p = work[triangle_index(level, nu + 1, mu)].scale(u);
                p.add_scaled(&work[triangle_index(level, nu, mu + 1)], v);
                p.add_scaled(&work[triangle_index(level, nu, mu)], &w);
                next.push(p);
            }
            work = next;
            level = next_level;
        }
        work.into_iter().next().unwrap_or_default()
    }

    /// Direct bivariate Bernstein sum; independent of [`Self::de_casteljau`].
    pub fn bernstein_sum(&self, u: &Rational, v: &Rational) -> Point3 {
        let mut acc = Point3::zero();
        for ((nu, mu), q) in self.labelled() {
            acc.add_scaled(q, &bernstein_triangle(self.total, nu, mu, u, v));
        }
        acc
    }
}
