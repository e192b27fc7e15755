//! Seeded random instances for property checks.
//!
//! Rationals have numerators in `-9..=9` and denominators in `1..=9`, which
//! keeps big-integer growth modest while still hitting signs, zeros and
//! coincident parameters.

use rand::Rng;

use crate::geometry::{DomainTriangle, MonomialCurve, MonomialSurface, ParamInterval, ParamRect, Point2, Point3};
use crate::numeric::Rational;

pub fn rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    Rational::frac(rng.gen_range(-9..=9), rng.gen_range(1..=9))
}

pub fn point2<R: Rng + ?Sized>(rng: &mut R) -> Point2 {
    Point2::new(rational(rng), rational(rng))
}

pub fn point3<R: Rng + ?Sized>(rng: &mut R) -> Point3 {
    Point3::new(rational(rng), rational(rng), rational(rng))
}

pub fn curve<R: Rng + ?Sized>(rng: &mut R, degree: usize) -> MonomialCurve {
    MonomialCurve::new((0..=degree).map(|_| point3(rng)).collect()).expect("non-empty")
}

pub fn surface<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize) -> MonomialSurface {
    MonomialSurface::from_flat(n, m, (0..(n + 1) * (m + 1)).map(|_| point3(rng)).collect()).expect("shape")
}

pub fn interval<R: Rng + ?Sized>(rng: &mut R) -> ParamInterval {
    ParamInterval::new(rational(rng), rational(rng))
}

pub fn rect<R: Rng + ?Sized>(rng: &mut R) -> ParamRect {
    ParamRect {
        u_range: interval(rng),
        v_range: interval(rng),
    }
}

pub fn triangle<R: Rng + ?Sized>(rng: &mut R) -> DomainTriangle {
    DomainTriangle::new(point2(rng), point2(rng), point2(rng))
}
