use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use blossom_core::{
    subdivide_curve, subdivide_tensor, subdivide_triangle, DomainTriangle, Execution, ParamInterval, ParamRect, Point2,
    Rational,
};
use blossom_subdiv::bench::{self, BenchConfig, Method, Shape};
use blossom_subdiv::document::{self, AnyDocument, Patch, PatchDocument, SurfaceDocument};
use blossom_subdiv::mesh::{self, MeshSource};
use blossom_subdiv::{diag, verify};
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact Bezier subdivision of monomial curves and surfaces.
#[derive(Debug, Parser)]
#[command(name = "blossom-subdiv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Io {
    /// Input document; `-` or absent for stdin.
    #[arg(long, short)]
    input: Option<PathBuf>,
    /// Output file; `-` or absent for stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Bezier control points of a monomial curve over [a, b].
    SubdivideCurve {
        #[command(flatten)]
        io: Io,
        #[arg(long, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, allow_hyphen_values = true)]
        b: Rational,
    },
    /// Tensor-product patch of a monomial surface over [a, b] x [c, d].
    SubdivideTpb {
        #[command(flatten)]
        io: Io,
        #[arg(long, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, allow_hyphen_values = true)]
        b: Rational,
        #[arg(long, allow_hyphen_values = true)]
        c: Rational,
        #[arg(long, allow_hyphen_values = true)]
        d: Rational,
    },
    /// Triangular patch of total degree n + m over the triangle abc.
    SubdivideTb {
        #[command(flatten)]
        io: Io,
        /// Vertex `s,t`; give exactly three, in the order a, b, c.
        #[arg(long = "vertex", value_parser = parse_point2, allow_hyphen_values = true, num_args = 1)]
        vertices: Vec<Point2>,
    },
    /// Evaluates a monomial or Bezier document at a parameter.
    Eval {
        #[command(flatten)]
        io: Io,
        #[arg(long, allow_hyphen_values = true)]
        u: Rational,
        /// Second parameter, for surfaces and patches.
        #[arg(long, allow_hyphen_values = true)]
        v: Option<Rational>,
    },
    /// Compares closed-form and brute-force control points on random inputs.
    Verify {
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Samples a patch (or monomial form over the unit domain) into a mesh.
    Mesh {
        #[command(flatten)]
        io: Io,
        /// Points per parameter direction (per edge for triangles).
        #[arg(long, default_value_t = 17, value_parser = clap::value_parser!(u64).range(2..))]
        samples: u64,
        #[arg(long, value_enum, default_value_t = MeshFormat::Obj)]
        format: MeshFormat,
        /// Also emit the control net as line elements.
        #[arg(long)]
        with_net: bool,
    },
    /// Times closed-form and enumeration subdivision and counts summands.
    Bench {
        #[arg(long, value_enum, value_delimiter = ',', required = true, num_args = 1..)]
        shapes: Vec<Shape>,
        #[arg(long, value_delimiter = ',', default_values_t = [2usize, 3, 4])]
        degrees: Vec<usize>,
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = [Method::ClosedForm, Method::Oracle])]
        methods: Vec<Method>,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
        repeat: u64,
        /// Highest degree the enumeration oracle is run at.
        #[arg(long, default_value_t = 6)]
        oracle_cap: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Compute control points on one thread.
        #[arg(long)]
        sequential: bool,
        /// CSV output; `-` or absent for stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MeshFormat {
    Obj,
}

fn parse_point2(text: &str) -> Result<Point2, String> {
    let (s, t) = text
        .split_once(',')
        .ok_or_else(|| format!("expected `s,t`, got {text:?}"))?;
    let s: Rational = s.parse().map_err(|e| format!("{e}"))?;
    let t: Rational = t.parse().map_err(|e| format!("{e}"))?;
    Ok(Point2::new(s, t))
}

fn read_input(path: &Option<PathBuf>) -> Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        _ => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text).context("reading stdin")?;
            Ok(text)
        }
    }
}

fn write_output(path: &Option<PathBuf>, text: &str) -> Result<()> {
    match path {
        Some(p) if p.as_os_str() != "-" => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        _ => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::SubdivideCurve { io, a, b } => {
            let curve = document::parse_surface_document(&read_input(&io.input)?)?.into_curve()?;
            let interval = ParamInterval::new(a, b);
            let bez = subdivide_curve(&curve, &interval);
            write_output(
                &io.output,
                &document::to_json(&PatchDocument::from_curve(&bez, &interval)),
            )?;
        }
        Command::SubdivideTpb { io, a, b, c, d } => {
            let surface = document::parse_surface_document(&read_input(&io.input)?)?.into_surface()?;
            let patch = subdivide_tensor(&surface, &ParamRect::new(a, b, c, d));
            write_output(&io.output, &document::to_json(&PatchDocument::from_tensor(&patch)))?;
        }
        Command::SubdivideTb { io, vertices } => {
            let [va, vb, vc]: [Point2; 3] = match vertices.try_into() {
                Ok(v) => v,
                Err(v) => bail!("expected exactly 3 --vertex values, got {}", v.len()),
            };
            let surface = document::parse_surface_document(&read_input(&io.input)?)?.into_surface()?;
            let tri = DomainTriangle::new(va, vb, vc);
            if tri.is_degenerate() {
                diag::warn("triangle vertices are collinear; the patch is degenerate");
            }
            let patch = subdivide_triangle(&surface, &tri);
            write_output(&io.output, &document::to_json(&PatchDocument::from_triangle(&patch)))?;
        }
        Command::Eval { io, u, v } => {
            let need_v = || v.clone().context("this document needs --v");
            let point = match document::parse_any(&read_input(&io.input)?)? {
                AnyDocument::Monomial(doc @ SurfaceDocument::Curve { .. }) => doc.into_curve()?.eval(&u),
                AnyDocument::Monomial(doc) => doc.into_surface()?.eval(&u, &need_v()?),
                AnyDocument::Bezier(doc) => match (*doc).into_patch()? {
                    Patch::Curve(c) => c.de_casteljau(&u),
                    Patch::Tensor(p) => p.de_casteljau(&u, &need_v()?),
                    Patch::Triangle(p) => p.de_casteljau(&u, &need_v()?),
                },
            };
            write_output(&io.output, &format!("{}\n", serde_json::to_string(&point)?))?;
        }
        Command::Verify {
            trials,
            max_degree,
            seed,
        } => match verify::run(trials as usize, max_degree, seed) {
            Ok(report) => {
                for (shape, tally) in [("curve", &report.curve), ("tpb", &report.tpb), ("tb", &report.tb)] {
                    println!(
                        "{shape}: {} cases, {} control points, all equal to oracle",
                        tally.cases, tally.control_points
                    );
                }
            }
            Err(counterexample) => {
                diag::error(format!(
                    "closed form disagrees with oracle ({} shape, trial {})",
                    counterexample.shape, counterexample.trial
                ));
                println!("{}", serde_json::to_string_pretty(&counterexample)?);
                return Ok(ExitCode::from(1));
            }
        },
        Command::Mesh {
            io,
            samples,
            format: MeshFormat::Obj,
            with_net,
        } => {
            let source = match document::parse_any(&read_input(&io.input)?)? {
                AnyDocument::Bezier(doc) => MeshSource::Patch((*doc).into_patch()?),
                AnyDocument::Monomial(doc @ SurfaceDocument::Curve { .. }) => MeshSource::Curve(doc.into_curve()?),
                AnyDocument::Monomial(doc) => MeshSource::Surface(doc.into_surface()?),
            };
            if with_net && !matches!(source, MeshSource::Patch(_)) {
                diag::warn("--with-net ignored: monomial documents have no control net");
            }
            let mesh = mesh::build(&source, samples as usize, with_net);
            write_output(&io.output, &mesh::to_obj(&mesh))?;
        }
        Command::Bench {
            shapes,
            degrees,
            methods,
            repeat,
            oracle_cap,
            seed,
            sequential,
            output,
        } => {
            if degrees.is_empty() || methods.is_empty() {
                bail!("--degrees and --methods must not be empty");
            }
            let config = BenchConfig {
                shapes,
                degrees,
                methods,
                repeat: repeat as usize,
                oracle_cap,
                seed,
                execution: if sequential {
                    Execution::Sequential
                } else {
                    Execution::Parallel
                },
            };
            let records = bench::run(&config, diag::warn);
            let mut buf = Vec::new();
            bench::write_csv(&records, &mut buf)?;
            write_output(&output, &String::from_utf8(buf)?)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return ExitCode::from(if err.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            diag::error(format!("{err:#}"));
            ExitCode::from(2)
        }
    }
}
