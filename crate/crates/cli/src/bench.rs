//! Closed-form vs. enumeration timing and summand counts.

use std::time::Instant;

use blossom_core::{blossom, sample, Execution};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Shape {
    Curve,
    Tpb,
    Tb,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ClosedForm,
    Oracle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub shape: Shape,
    /// `"n"` for curves, `"nxm"` for surfaces.
    pub degrees: String,
    pub method: Method,
    pub repetition: usize,
    pub wall_time_ns: u64,
    pub control_point_count: usize,
    pub term_count: u64,
}

pub struct BenchConfig {
    pub shapes: Vec<Shape>,
    pub degrees: Vec<usize>,
    pub methods: Vec<Method>,
    pub repeat: usize,
    pub oracle_cap: usize,
    pub seed: u64,
    pub execution: Execution,
}

fn run_one(shape: Shape, degree: usize, method: Method, seed: u64, exec: Execution) -> (u64, usize, u64) {
    // Same instance for both methods.
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((degree as u64) << 8) ^ shape as u64);
    match shape {
        Shape::Curve => {
            let curve = sample::curve(&mut rng, degree);
            let interval = sample::interval(&mut rng);
            let start = Instant::now();
            let out = match method {
                Method::ClosedForm => blossom_core::subdivide_curve_with(&curve, &interval, exec),
                Method::Oracle => blossom::curve_control_points(&curve, &interval, exec),
            };
            (
                start.elapsed().as_nanos() as u64,
                out.value.control_points().len(),
                out.terms,
            )
        }
        Shape::Tpb => {
            let surface = sample::surface(&mut rng, degree, degree);
            let rect = sample::rect(&mut rng);
            let start = Instant::now();
            let out = match method {
                Method::ClosedForm => blossom_core::subdivide_tensor_with(&surface, &rect, exec),
                Method::Oracle => blossom::tensor_control_points(&surface, &rect, exec),
            };
            (
                start.elapsed().as_nanos() as u64,
                out.value.control_points().len(),
                out.terms,
            )
        }
        Shape::Tb => {
            let surface = sample::surface(&mut rng, degree, degree);
            let tri = sample::triangle(&mut rng);
            let start = Instant::now();
            let out = match method {
                Method::ClosedForm => blossom_core::subdivide_triangle_with(&surface, &tri, exec),
                Method::Oracle => blossom::triangle_control_points(&surface, &tri, exec),
            };
            (
                start.elapsed().as_nanos() as u64,
                out.value.control_points().len(),
                out.terms,
            )
        }
    }
}

/// Runs every `(shape, degree, method, repetition)`; oracle rows above the
/// cap are skipped and reported through `warn`.
pub fn run(config: &BenchConfig, mut warn: impl FnMut(String)) -> Vec<BenchRecord> {
    let mut records = Vec::new();
    for &shape in &config.shapes {
        for &degree in &config.degrees {
            for &method in &config.methods {
                if method == Method::Oracle && degree > config.oracle_cap {
                    warn(format!(
                        "skipping oracle for {shape:?} at degree {degree}: above cap {}",
                        config.oracle_cap
                    ));
                    continue;
                }
                for repetition in 0..config.repeat {
                    let (wall_time_ns, control_point_count, term_count) =
                        run_one(shape, degree, method, config.seed, config.execution);
                    records.push(BenchRecord {
                        shape,
                        degrees: match shape {
                            Shape::Curve => degree.to_string(),
                            _ => format!("{degree}x{degree}"),
                        },
                        method,
                        repetition,
                        wall_time_ns,
                        control_point_count,
                        term_count,
                    });
                }
            }
        }
    }
    records
}

pub fn write_csv<W: std::io::Write>(records: &[BenchRecord], out: W) -> anyhow::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    for record in records {
        writer.serialize(record)?;
    }
    if records.is_empty() {
        writer.write_record([
            "shape",
            "degrees",
            "method",
            "repetition",
            "wall_time_ns",
            "control_point_count",
            "term_count",
        ])?;
    }
    writer.flush()?;
    Ok(())
}
