//! Exact subdivision of polynomial curves and surfaces into Bezier form.
//!
//! Given a curve `C(u) = sum c_i u^i` or a surface
//! `S(u, v) = sum c_ij u^i v^j` in the monomial basis, this crate computes
//! the Bezier control points of
//!
//! * the curve segment over an interval `[a, b]`
//!   ([`subdivide_curve`]),
//! * the tensor-product patch over `[a, b] x [c, d]`
//!   ([`subdivide_tensor`]),
//! * the triangular patch of total degree `n + m` over a triangle `abc`
//!   ([`subdivide_triangle`]),
//!
//! using closed-form sums. The [`blossom`] module evaluates the same control
//! points by brute-force subset enumeration and serves as the reference.
//!
//! All arithmetic is exact ([`Rational`]); floating point only appears in
//! [`Rational::to_f64`].
//!
//! ```
//! use blossom_core::{subdivide_curve, MonomialCurve, ParamInterval, Point3, Rational};
//!
//! // u^2 on [1, 3]
//! let curve = MonomialCurve::new(vec![
//!     Point3::zero(),
//!     Point3::zero(),
//!     Point3::scalar(Rational::from(1)),
//! ])
//! .unwrap();
//! let bezier = subdivide_curve(&curve, &ParamInterval::new(1.into(), 3.into()));
//! let xs: Vec<String> = bezier.control_points().iter().map(|p| p.x.to_string()).collect();
//! assert_eq!(xs, ["1", "3", "9"]);
//! ```

pub mod blossom;
pub mod error;
pub mod geometry;
pub mod numeric;
pub mod par;
pub mod sample;
pub mod subdivision;

pub use error::{Error, Result};
pub use geometry::{
    BezierCurve, DomainTriangle, MonomialCurve, MonomialSurface, ParamInterval, ParamRect, Point2, Point3, TensorPatch,
    TrianglePatch,
};
pub use numeric::{binomial, multinomial, Rational};
pub use par::Execution;
pub use subdivision::{
    subdivide_curve, subdivide_curve_with, subdivide_tensor, subdivide_tensor_with, subdivide_triangle,
    subdivide_triangle_with, IndexSplit, TriangularLoopBounds,
};

/// A result together with the number of summands evaluated to produce it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counted<T> {
    pub value: T,
    pub terms: u64,
}
