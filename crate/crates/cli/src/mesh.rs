//! Wavefront OBJ export. Geometry is evaluated exactly and converted to
//! `f64` only when written.

use std::fmt::Write as _;

use blossom_core::geometry::triangle_indices;
use blossom_core::{MonomialCurve, MonomialSurface, Point3, Rational};

use crate::document::Patch;

/// Something that can be sampled into a mesh.
#[allow(clippy::large_enum_variant)]
pub enum MeshSource {
    Patch(Patch),
    /// Monomial curve sampled over `[0, 1]`.
    Curve(MonomialCurve),
    /// Monomial surface sampled over `[0, 1] x [0, 1]`.
    Surface(MonomialSurface),
}

#[derive(Debug, Default)]
pub struct Mesh {
    pub vertices: Vec<Point3>,
    pub faces: Vec<Vec<usize>>,
    pub lines: Vec<Vec<usize>>,
}

fn params(samples: usize) -> Vec<Rational> {
    let last = (samples - 1) as i64;
    (0..=last).map(|k| Rational::frac(k, last)).collect()
}

fn grid(mesh: &mut Mesh, samples: usize, eval: impl Fn(&Rational, &Rational) -> Point3) {
    let ts = params(samples);
    let base = mesh.vertices.len();
    for u in &ts {
        for v in &ts {
            mesh.vertices.push(eval(u, v));
        }
    }
    let at = |iu: usize, iv: usize| base + iu * samples + iv;
    for iu in 0..samples - 1 {
        for iv in 0..samples - 1 {
            mesh.faces
                .push(vec![at(iu, iv), at(iu + 1, iv), at(iu + 1, iv + 1), at(iu, iv + 1)]);
        }
    }
}

fn polyline(mesh: &mut Mesh, samples: usize, eval: impl Fn(&Rational) -> Point3) {
    let base = mesh.vertices.len();
    mesh.vertices.extend(params(samples).iter().map(eval));
    mesh.lines.push((base..base + samples).collect());
}

/// Barycentric grid with `samples` points per edge; `(a, b)` is the vertex at
/// `u = a / (samples - 1)`, `v = b / (samples - 1)`.
fn triangle_grid(mesh: &mut Mesh, samples: usize, eval: impl Fn(&Rational, &Rational) -> Point3) {
    let last = samples - 1;
    let base = mesh.vertices.len();
    for (a, b) in triangle_indices(last) {
        mesh.vertices.push(eval(
            &Rational::frac(a as i64, last as i64),
            &Rational::frac(b as i64, last as i64),
        ));
    }
    let at = |a: usize, b: usize| base + blossom_core::geometry::triangle_index(last, a, b);
    for (a, b) in triangle_indices(last) {
        if a + b < last {
            mesh.faces.push(vec![at(a, b), at(a + 1, b), at(a, b + 1)]);
        }
        if a + b + 1 < last {
            mesh.faces.push(vec![at(a + 1, b), at(a + 1, b + 1), at(a, b + 1)]);
        }
    }
}

fn control_net(mesh: &mut Mesh, patch: &Patch) {
    let base = mesh.vertices.len();
    match patch {
        Patch::Curve(c) => {
            mesh.vertices.extend(c.control_points().iter().cloned());
            mesh.lines.push((base..mesh.vertices.len()).collect());
        }
        Patch::Tensor(p) => {
            let (n, m) = p.degrees();
            mesh.vertices.extend(p.control_points().iter().cloned());
            let at = |nu: usize, mu: usize| base + nu * (m + 1) + mu;
            for nu in 0..=n {
                mesh.lines.push((0..=m).map(|mu| at(nu, mu)).collect());
            }
            for mu in 0..=m {
                mesh.lines.push((0..=n).map(|nu| at(nu, mu)).collect());
            }
        }
        Patch::Triangle(p) => {
            let total = p.degree();
            mesh.vertices.extend(p.control_points().iter().cloned());
            let at = |nu: usize, mu: usize| base + blossom_core::geometry::triangle_index(total, nu, mu);
            for (nu, mu) in triangle_indices(total) {
                if nu + mu < total {
                    mesh.lines
                        .push(vec![at(nu, mu), at(nu + 1, mu), at(nu, mu + 1), at(nu, mu)]);
                }
            }
        }
    }
}

/// Samples `source`; `samples >= 2` points per parameter direction.
pub fn build(source: &MeshSource, samples: usize, with_net: bool) -> Mesh {
    assert!(samples >= 2);
    let mut mesh = Mesh::default();
    match source {
        MeshSource::Patch(patch) => {
            match patch {
                Patch::Curve(c) => polyline(&mut mesh, samples, |t| c.de_casteljau(t)),
                Patch::Tensor(p) => grid(&mut mesh, samples, |u, v| p.de_casteljau(u, v)),
                Patch::Triangle(p) => triangle_grid(&mut mesh, samples, |u, v| p.de_casteljau(u, v)),
            }
            if with_net {
                control_net(&mut mesh, patch);
            }
        }
        MeshSource::Curve(c) => polyline(&mut mesh, samples, |t| c.eval(t)),
        MeshSource::Surface(s) => grid(&mut mesh, samples, |u, v| s.eval(u, v)),
    }
    mesh
}

/// 17 significant digits, round-to-nearest from the exact value.
pub fn format_coord(x: &Rational) -> String {
    format!("{:.16e}", x.to_f64())
}

pub fn to_obj(mesh: &Mesh) -> String {
    let mut out = String::from("# blossom-subdiv mesh\n");
    for v in &mesh.vertices {
        let _ = writeln!(
            out,
            "v {} {} {}",
            format_coord(&v.x),
            format_coord(&v.y),
            format_coord(&v.z)
        );
    }
    let join = |idx: &[usize]| idx.iter().map(|k| (k + 1).to_string()).collect::<Vec<_>>().join(" ");
    for f in &mesh.faces {
        let _ = writeln!(out, "f {}", join(f));
    }
    for l in &mesh.lines {
        let _ = writeln!(out, "l {}", join(l));
    }
    out
}
