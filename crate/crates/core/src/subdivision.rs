//! Closed-form subdivision.
//!
//! Every control point of the subdivided curve or patch is computed directly
//! from the monomial coefficients and the subdomain, by counting how many
//! distinct-index subsets of the blossom arguments land on each subdomain
//! parameter instead of enumerating them:
//!
//! * curve over `[a, b]`:
//!   `w_nu = sum_i c_i / C(n,i) * sum_k C(nu,k) C(n-nu,i-k) b^k a^(i-k)`,
//!   `k` in `max(0, i+nu-n) ..= min(i, nu)`;
//! * tensor-product patch over `[a, b] x [c, d]`: the same count applied
//!   independently in `u` (indices `k`) and `v` (indices `r`);
//! * triangular patch over triangle `abc`: the `u`-subset of size `i` is split
//!   into `i_alpha + i_beta + i_gamma` indices landing on copies of `a`, `b`,
//!   `c`, the `v`-subset likewise, with ranges given by
//!   [`TriangularLoopBounds`].
//!
//! Empty ranges contribute nothing. Control points are independent and may be
//! computed through [`Execution::Parallel`] with bit-identical results.

use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geometry::{
    triangle_indices, BezierCurve, DomainTriangle, MonomialCurve, MonomialSurface, ParamInterval, ParamRect, Point3,
    TensorPatch, TrianglePatch,
};
use crate::numeric::{binomial, multinomial, power_table, BinomialTable, Rational};
use crate::par::Execution;
use crate::Counted;

fn range(lo: i64, hi: i64) -> RangeInclusive<i64> {
    lo..=hi
}

/// Subdivides `curve` over `interval`.
pub fn subdivide_curve(curve: &MonomialCurve, interval: &ParamInterval) -> BezierCurve {
    subdivide_curve_with(curve, interval, Execution::default()).value
}

/// [`subdivide_curve`] with an explicit execution strategy; also reports
/// the number of innermost summands evaluated.
pub fn subdivide_curve_with(curve: &MonomialCurve, interval: &ParamInterval, exec: Execution) -> Counted<BezierCurve> {
    let n = curve.degree();
    let ni = n as i64;
    let binom = BinomialTable::new(n);
    let pow_a = power_table(&interval.a, n);
    let pow_b = power_table(&interval.b, n);
    let nus: Vec<i64> = (0..=ni).collect();

    let results = exec.map(&nus, |&nu| {
        let mut terms = 0u64;
        let mut w = Point3::zero();
        for (i, c) in curve.coeffs().iter().enumerate() {
            let i = i as i64;
            let mut inner = Rational::zero();
            for k in range((i + nu - ni).max(0), i.min(nu)) {
                terms += 1;
                inner += binom.get(nu, k) * binom.get(ni - nu, i - k) * &pow_b[k as usize] * &pow_a[(i - k) as usize];
            }
            w.add_scaled(c, &(inner / binom.get(ni, i)));
        }
        (w, terms)
    });

    let terms = results.iter().map(|r| r.1).sum();
    Counted {
        value: BezierCurve::new(results.into_iter().map(|r| r.0).collect()).expect("n + 1 points"),
        terms,
    }
}

/// Subdivides `surface` over the rectangle `rect` into a tensor-product patch.
pub fn subdivide_tensor(surface: &MonomialSurface, rect: &ParamRect) -> TensorPatch {
    subdivide_tensor_with(surface, rect, Execution::default()).value
}

pub fn subdivide_tensor_with(surface: &MonomialSurface, rect: &ParamRect, exec: Execution) -> Counted<TensorPatch> {
    let (n, m) = surface.degrees();
    let (ni, mi) = (n as i64, m as i64);
    let binom = BinomialTable::new(n.max(m));
    let pow_a = power_table(&rect.u_range.a, n);
    let pow_b = power_table(&rect.u_range.b, n);
    let pow_c = power_table(&rect.v_range.a, m);
    let pow_d = power_table(&rect.v_range.b, m);
    let index: Vec<(i64, i64)> = (0..=ni).flat_map(|nu| (0..=mi).map(move |mu| (nu, mu))).collect();

    let results = exec.map(&index, |&(nu, mu)| {
        let mut terms = 0u64;
        let mut p = Point3::zero();
        for i in 0..=ni {
            for j in 0..=mi {
                let mut inner = Rational::zero();
                for k in range((i + nu - ni).max(0), i.min(nu)) {
                    for r in range((j + mu - mi).max(0), j.min(mu)) {
                        terms += 1;
                        inner += binom.get(nu, k)
                            * binom.get(ni - nu, i - k)
                            * binom.get(mu, r)
                            * binom.get(mi - mu, j - r)
                            * &pow_b[k as usize]
                            * &pow_a[(i - k) as usize]
                            * &pow_d[r as usize]
                            * &pow_c[(j - r) as usize];
                    }
                }
                if !inner.is_zero() {
                    let norm = binom.get(ni, i) * binom.get(mi, j);
                    p.add_scaled(surface.coeff(i as usize, j as usize), &(inner / norm));
                }
            }
        }
        (p, terms)
    });

    let terms = results.iter().map(|r| r.1).sum();
    Counted {
        value: TensorPatch::new(n, m, results.into_iter().map(|r| r.0).collect(), rect.clone())
            .expect("(n+1)(m+1) points"),
        terms,
    }
}

/// How the `i` indices of the `u`-subset and the `j` indices of the
/// `v`-subset are distributed over the copies of vertices `a`, `b`, `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSplit {
    pub i_alpha: i64,
    pub i_beta: i64,
    pub i_gamma: i64,
    pub j_alpha: i64,
    pub j_beta: i64,
    pub j_gamma: i64,
}

/// Summation ranges for one control point `q_{nu,mu}` and one monomial
/// `u^i v^j` of a surface of total degree `N`.
///
/// Ranges are produced innermost-last as the outer counts are fixed:
/// `i_alpha`, then `i_beta`, then `j_alpha`, then `j_beta`. Any range may be
/// empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriangularLoopBounds {
    total: i64,
    nu: i64,
    mu: i64,
    i: i64,
    j: i64,
}

impl TriangularLoopBounds {
    pub fn new(total: i64, nu: i64, mu: i64, i: i64, j: i64) -> Result<Self> {
        if total < 0 || nu < 0 || mu < 0 || nu + mu > total {
            return Err(Error::Bounds(format!("(nu, mu) = ({nu}, {mu}) outside degree {total}")));
        }
        if i < 0 || j < 0 || i + j > total {
            return Err(Error::Bounds(format!("(i, j) = ({i}, {j}) outside degree {total}")));
        }
        Ok(TriangularLoopBounds { total, nu, mu, i, j })
    }

    /// `lambda = N - nu - mu`, the number of copies of `c`.
    pub fn lambda(&self) -> i64 {
        self.total - self.nu - self.mu
    }

    pub fn i_alpha(&self) -> RangeInclusive<i64> {
        range((self.i + self.nu - self.total).max(0), self.i.min(self.nu))
    }

    pub fn i_beta(&self, i_alpha: i64) -> RangeInclusive<i64> {
        range(
            (self.i - i_alpha - self.lambda()).max(0),
            (self.i - i_alpha).min(self.mu),
        )
    }

    pub fn j_alpha(&self, i_alpha: i64, i_beta: i64) -> RangeInclusive<i64> {
        let i_gamma = self.i - i_alpha - i_beta;
        range(
            (self.j - (self.mu - i_beta) - (self.lambda() - i_gamma)).max(0),
            self.j.min(self.nu - i_alpha),
        )
    }

    pub fn j_beta(&self, i_alpha: i64, i_beta: i64, j_alpha: i64) -> RangeInclusive<i64> {
        let i_gamma = self.i - i_alpha - i_beta;
        range(
            (self.j - j_alpha - (self.lambda() - i_gamma)).max(0),
            (self.j - j_alpha).min(self.mu - i_beta),
        )
    }

    /// Every split in the nested ranges, in loop order.
    pub fn splits(&self) -> impl Iterator<Item = IndexSplit> + '_ {
        self.i_alpha().flat_map(move |i_alpha| {
            self.i_beta(i_alpha).flat_map(move |i_beta| {
                self.j_alpha(i_alpha, i_beta).flat_map(move |j_alpha| {
                    self.j_beta(i_alpha, i_beta, j_alpha).map(move |j_beta| IndexSplit {
                        i_alpha,
                        i_beta,
                        i_gamma: self.i - i_alpha - i_beta,
                        j_alpha,
                        j_beta,
                        j_gamma: self.j - j_alpha - j_beta,
                    })
                })
            })
        })
    }
}

fn choose(n: i64, k: i64) -> BigInt {
    if n < 0 {
        BigInt::zero()
    } else {
        binomial(n, k)
    }
}

/// Number of disjoint index-set pairs realising `split` for control point
/// `(nu, mu)`: choose the `u`-indices in each zone first, then the
/// `v`-indices among what is left.
pub fn index_assignment_count(total: i64, nu: i64, mu: i64, split: &IndexSplit) -> BigInt {
    let lambda = total - nu - mu;
    choose(nu, split.i_alpha)
        * choose(mu, split.i_beta)
        * choose(lambda, split.i_gamma)
        * choose(nu - split.i_alpha, split.j_alpha)
        * choose(mu - split.i_beta, split.j_beta)
        * choose(lambda - split.i_gamma, split.j_gamma)
}

/// Same count as [`index_assignment_count`], choosing the `v`-indices first.
pub fn index_assignment_count_v_first(total: i64, nu: i64, mu: i64, split: &IndexSplit) -> BigInt {
    let lambda = total - nu - mu;
    choose(nu, split.j_alpha)
        * choose(mu, split.j_beta)
        * choose(lambda, split.j_gamma)
        * choose(nu - split.j_alpha, split.i_alpha)
        * choose(mu - split.j_beta, split.i_beta)
        * choose(lambda - split.j_gamma, split.i_gamma)
}

/// Subdivides `surface`, read as a polynomial of total degree `N = n + m`,
/// over the triangle `tri`.
pub fn subdivide_triangle(surface: &MonomialSurface, tri: &DomainTriangle) -> TrianglePatch {
    subdivide_triangle_with(surface, tri, Execution::default()).value
}

pub fn subdivide_triangle_with(
    surface: &MonomialSurface,
    tri: &DomainTriangle,
    exec: Execution,
) -> Counted<TrianglePatch> {
    let (n, m) = surface.degrees();
    let total = n + m;
    let ti = total as i64;
    let binom = BinomialTable::new(total);
    let pow = |x: &Rational| power_table(x, total);
    let (a1, a2) = (pow(&tri.va.s), pow(&tri.va.t));
    let (b1, b2) = (pow(&tri.vb.s), pow(&tri.vb.t));
    let (c1, c2) = (pow(&tri.vc.s), pow(&tri.vc.t));
    let index: Vec<(usize, usize)> = triangle_indices(total).collect();

    let results = exec.map(&index, |&(nu, mu)| {
        let (nu, mu) = (nu as i64, mu as i64);
        let lambda = ti - nu - mu;
        let mut terms = 0u64;
        let mut q = Point3::zero();
        for i in 0..=n as i64 {
            for j in 0..=m as i64 {
                let bounds = TriangularLoopBounds::new(ti, nu, mu, i, j).expect("indices within degree");
                let mut inner = Rational::zero();
                for s in bounds.splits() {
                    terms += 1;
                    let (ia, ib, ig) = (s.i_alpha as usize, s.i_beta as usize, s.i_gamma as usize);
                    let (ja, jb, jg) = (s.j_alpha as usize, s.j_beta as usize, s.j_gamma as usize);
                    inner += binom.get(nu, s.i_alpha)
                        * binom.get(mu, s.i_beta)
                        * binom.get(lambda, s.i_gamma)
                        * binom.get(nu - s.i_alpha, s.j_alpha)
                        * binom.get(mu - s.i_beta, s.j_beta)
                        * binom.get(lambda - s.i_gamma, s.j_gamma)
                        * &a1[ia]
                        * &b1[ib]
                        * &c1[ig]
                        * &a2[ja]
                        * &b2[jb]
                        * &c2[jg];
                }
                if !inner.is_zero() {
                    let norm = Rational::integer(multinomial(ti, i, j));
                    q.add_scaled(surface.coeff(i as usize, j as usize), &(inner / norm));
                }
            }
        }
        (q, terms)
    });

    let terms = results.iter().map(|r| r.1).sum();
    Counted {
        value: TrianglePatch::new(total, results.into_iter().map(|r| r.0).collect(), tri.clone())
            .expect("triangular point count"),
        terms,
    }
}
