//! JSON documents: monomial input (`SurfaceDocument`) and Bezier output
//! (`PatchDocument`). Rationals are always strings (`"p/q"` or `"p"`).

use anyhow::{bail, ensure, Context, Result};
use blossom_core::geometry::triangle_len;
use blossom_core::{
    BezierCurve, DomainTriangle, MonomialCurve, MonomialSurface, ParamInterval, ParamRect, Point2, Point3, Rational,
    TensorPatch, TrianglePatch,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum SurfaceDocument {
    Curve {
        degree: [usize; 1],
        coeffs: Vec<Point3>,
    },
    Surface {
        degree: [usize; 2],
        coeffs: Vec<Vec<Point3>>,
    },
}

impl SurfaceDocument {
    pub fn from_curve(curve: &MonomialCurve) -> Self {
        SurfaceDocument::Curve {
            degree: [curve.degree()],
            coeffs: curve.coeffs().to_vec(),
        }
    }

    pub fn from_surface(surface: &MonomialSurface) -> Self {
        let (n, m) = surface.degrees();
        SurfaceDocument::Surface {
            degree: [n, m],
            coeffs: surface.rows().map(<[Point3]>::to_vec).collect(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            SurfaceDocument::Curve { .. } => "curve",
            SurfaceDocument::Surface { .. } => "surface",
        }
    }

    pub fn into_curve(self) -> Result<MonomialCurve> {
        match self {
            SurfaceDocument::Curve { degree: [n], coeffs } => {
                ensure!(
                    coeffs.len() == n + 1,
                    "curve of degree {n} needs {} coefficients, got {}",
                    n + 1,
                    coeffs.len()
                );
                Ok(MonomialCurve::new(coeffs)?)
            }
            other => bail!("expected a document of kind \"curve\", got \"{}\"", other.kind()),
        }
    }

    pub fn into_surface(self) -> Result<MonomialSurface> {
        match self {
            SurfaceDocument::Surface { degree: [n, m], coeffs } => {
                ensure!(
                    coeffs.len() == n + 1,
                    "surface of degree ({n}, {m}) needs {} coefficient rows, got {}",
                    n + 1,
                    coeffs.len()
                );
                for (i, row) in coeffs.iter().enumerate() {
                    ensure!(
                        row.len() == m + 1,
                        "row {i} has {} coefficients, expected {}",
                        row.len(),
                        m + 1
                    );
                }
                Ok(MonomialSurface::new(coeffs)?)
            }
            other => bail!("expected a document of kind \"surface\", got \"{}\"", other.kind()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntervalDomain {
    pub a: Rational,
    pub b: Rational,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RectDomain {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TriangleDomain {
    pub a: Point2,
    pub b: Point2,
    pub c: Point2,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabelledPoint {
    pub nu: usize,
    pub mu: usize,
    pub point: Point3,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
pub enum PatchDocument {
    #[serde(rename = "bezier-curve")]
    Curve {
        degree: [usize; 1],
        domain: IntervalDomain,
        control_points: Vec<Point3>,
    },
    #[serde(rename = "tpb-patch")]
    Tensor {
        degree: [usize; 2],
        domain: RectDomain,
        control_points: Vec<Vec<Point3>>,
    },
    #[serde(rename = "tb-patch")]
    Triangle {
        degree: [usize; 1],
        domain: TriangleDomain,
        control_points: Vec<LabelledPoint>,
    },
}

/// A parsed patch, ready for evaluation.
#[derive(Debug, Clone)]
pub enum Patch {
    Curve(BezierCurve),
    Tensor(TensorPatch),
    Triangle(TrianglePatch),
}

impl PatchDocument {
    pub fn from_curve(curve: &BezierCurve, interval: &ParamInterval) -> Self {
        PatchDocument::Curve {
            degree: [curve.degree()],
            domain: IntervalDomain {
                a: interval.a.clone(),
                b: interval.b.clone(),
            },
            control_points: curve.control_points().to_vec(),
        }
    }

    pub fn from_tensor(patch: &TensorPatch) -> Self {
        let (n, m) = patch.degrees();
        let rect = patch.domain();
        PatchDocument::Tensor {
            degree: [n, m],
            domain: RectDomain {
                a: rect.u_range.a.clone(),
                b: rect.u_range.b.clone(),
                c: rect.v_range.a.clone(),
                d: rect.v_range.b.clone(),
            },
            control_points: patch.rows().map(<[Point3]>::to_vec).collect(),
        }
    }

    pub fn from_triangle(patch: &TrianglePatch) -> Self {
        let tri = patch.domain();
        PatchDocument::Triangle {
            degree: [patch.degree()],
            domain: TriangleDomain {
                a: tri.va.clone(),
                b: tri.vb.clone(),
                c: tri.vc.clone(),
            },
            control_points: patch
                .labelled()
                .map(|((nu, mu), q)| LabelledPoint {
                    nu,
                    mu,
                    point: q.clone(),
                })
                .collect(),
        }
    }

    pub fn into_patch(self) -> Result<Patch> {
        match self {
            PatchDocument::Curve {
                degree: [n],
                control_points,
                ..
            } => {
                ensure!(
                    control_points.len() == n + 1,
                    "bezier-curve of degree {n} needs {} control points",
                    n + 1
                );
                Ok(Patch::Curve(BezierCurve::new(control_points)?))
            }
            PatchDocument::Tensor {
                degree: [n, m],
                domain,
                control_points,
            } => {
                ensure!(
                    control_points.len() == n + 1,
                    "tpb-patch of degree ({n}, {m}) needs {} rows",
                    n + 1
                );
                for (nu, row) in control_points.iter().enumerate() {
                    ensure!(
                        row.len() == m + 1,
                        "tpb-patch row {nu} has {} points, expected {}",
                        row.len(),
                        m + 1
                    );
                }
                let rect = ParamRect::new(domain.a, domain.b, domain.c, domain.d);
                Ok(Patch::Tensor(TensorPatch::new(
                    n,
                    m,
                    control_points.into_iter().flatten().collect(),
                    rect,
                )?))
            }
            PatchDocument::Triangle {
                degree: [total],
                domain,
                control_points,
            } => {
                ensure!(
                    control_points.len() == triangle_len(total),
                    "tb-patch of degree {total} needs {} control points, got {}",
                    triangle_len(total),
                    control_points.len()
                );
                let mut slots: Vec<Option<Point3>> = vec![None; triangle_len(total)];
                for LabelledPoint { nu, mu, point } in control_points {
                    ensure!(nu + mu <= total, "label ({nu}, {mu}) exceeds degree {total}");
                    let slot = &mut slots[blossom_core::geometry::triangle_index(total, nu, mu)];
                    ensure!(slot.is_none(), "duplicate label ({nu}, {mu})");
                    *slot = Some(point);
                }
                let points = slots.into_iter().map(|p| p.expect("all labels present")).collect();
                let tri = DomainTriangle::new(domain.a, domain.b, domain.c);
                Ok(Patch::Triangle(TrianglePatch::new(total, points, tri)?))
            }
        }
    }
}

/// Either document kind, dispatched on the `kind` field.
#[derive(Debug, Clone)]
pub enum AnyDocument {
    Monomial(SurfaceDocument),
    Bezier(Box<PatchDocument>),
}

pub fn parse_any(text: &str) -> Result<AnyDocument> {
    let value: serde_json::Value = serde_json::from_str(text).context("input is not valid JSON")?;
    let kind = value
        .get("kind")
        .and_then(serde_json::Value::as_str)
        .context("document has no \"kind\" field")?
        .to_string();
    match kind.as_str() {
        "curve" | "surface" => Ok(AnyDocument::Monomial(
            serde_json::from_value(value).with_context(|| format!("invalid {kind} document"))?,
        )),
        "bezier-curve" | "tpb-patch" | "tb-patch" => Ok(AnyDocument::Bezier(Box::new(
            serde_json::from_value(value).with_context(|| format!("invalid {kind} document"))?,
        ))),
        other => bail!("unknown document kind {other:?}"),
    }
}

pub fn parse_surface_document(text: &str) -> Result<SurfaceDocument> {
    match parse_any(text)? {
        AnyDocument::Monomial(doc) => Ok(doc),
        AnyDocument::Bezier(_) => bail!("expected a monomial curve or surface document"),
    }
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("documents serialise");
    text.push('\n');
    text
}
