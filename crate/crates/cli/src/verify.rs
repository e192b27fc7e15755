//! Randomised closed-form vs. oracle comparison.

use blossom_core::blossom::{self, blossom_tensor, TensorBlossomArgs};
use blossom_core::{sample, subdivide_curve, subdivide_tensor, subdivide_triangle, Execution};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::document::{PatchDocument, SurfaceDocument};

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct ShapeTally {
    pub cases: usize,
    pub control_points: usize,
}

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub curve: ShapeTally,
    pub tpb: ShapeTally,
    pub tb: ShapeTally,
}

/// First disagreement found, with both results.
#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub trial: usize,
    pub shape: &'static str,
    pub input: SurfaceDocument,
    pub closed_form: PatchDocument,
    pub oracle: PatchDocument,
}

pub fn run(trials: usize, max_degree: usize, seed: u64) -> Result<VerifyReport, Box<Counterexample>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = VerifyReport::default();
    let exec = Execution::default();
    for trial in 0..trials {
        let n = rng.gen_range(0..=max_degree);
        let m = rng.gen_range(0..=max_degree);

        let curve = sample::curve(&mut rng, n);
        let interval = sample::interval(&mut rng);
        let fast = subdivide_curve(&curve, &interval);
        let slow = blossom::curve_control_points(&curve, &interval, exec).value;
        if fast != slow {
            return Err(Box::new(Counterexample {
                trial,
                shape: "curve",
                input: SurfaceDocument::from_curve(&curve),
                closed_form: PatchDocument::from_curve(&fast, &interval),
                oracle: PatchDocument::from_curve(&slow, &interval),
            }));
        }
        report.curve.cases += 1;
        report.curve.control_points += fast.control_points().len();

        let surface = sample::surface(&mut rng, n, m);
        let rect = sample::rect(&mut rng);
        let fast = subdivide_tensor(&surface, &rect);
        let slow = blossom::tensor_control_points(&surface, &rect, exec).value;
        // The factored blossom must agree with the enumerated one as well.
        let factored_ok = (0..=n).all(|nu| {
            (0..=m).all(|mu| {
                let args = TensorBlossomArgs {
                    u_values: [vec![rect.u_range.b.clone(); nu], vec![rect.u_range.a.clone(); n - nu]].concat(),
                    v_values: [vec![rect.v_range.b.clone(); mu], vec![rect.v_range.a.clone(); m - mu]].concat(),
                };
                blossom_tensor(&surface, &args).ok().as_ref() == Some(fast.control_point(nu, mu))
            })
        });
        if fast != slow || !factored_ok {
            return Err(Box::new(Counterexample {
                trial,
                shape: "tpb",
                input: SurfaceDocument::from_surface(&surface),
                closed_form: PatchDocument::from_tensor(&fast),
                oracle: PatchDocument::from_tensor(&slow),
            }));
        }
        report.tpb.cases += 1;
        report.tpb.control_points += fast.control_points().len();

        let tri = sample::triangle(&mut rng);
        let fast = subdivide_triangle(&surface, &tri);
        let slow = blossom::triangle_control_points(&surface, &tri, exec).value;
        if fast != slow {
            return Err(Box::new(Counterexample {
                trial,
                shape: "tb",
                input: SurfaceDocument::from_surface(&surface),
                closed_form: PatchDocument::from_triangle(&fast),
                oracle: PatchDocument::from_triangle(&slow),
            }));
        }
        report.tb.cases += 1;
        report.tb.control_points += fast.control_points().len();
    }
    Ok(report)
}
