//! The `mink` command line.
//!
//! Every report is pretty-printed JSON on standard output. Failures print a
//! single line `error[<code>]: <message>` on standard error and exit with
//! status 2 for invalid input (bad flags, malformed JSON, violated
//! preconditions, exceeded caps) or 1 for solver failures and for
//! `table reproduce` mismatches.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::covering::{cube_halfcover, DEFAULT_MAX_DEPTH};
use crate::error::Error;
use crate::illumination::{
    bezdek_parameter, convert_covering_to_lights, illuminates_body, unlit_vertices, DEFAULT_EPSILON,
    DEFAULT_PARTITION_CAP,
};
use crate::io::{load_body, load_certificate, load_gauge, load_lights, load_points, InputError};
use crate::geometry::enumerate_vertices;
use crate::steiner::{degree_bound_check_capped, solve_smt, star_smt_test};
use crate::svg::render_tree;
use crate::table::reproduce_table;

/// Environment variable overriding the cap on set partitions examined for `B(K)`.
pub const PARTITION_CAP_VAR: &str = "MINK_MAX_PARTITIONS";

#[derive(Debug, Parser)]
#[command(name = "mink", version, about = "Illumination, covering and Steiner tree computations for centred polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Illumination number and quantitative illumination parameter.
    #[command(subcommand)]
    Illum(IllumCommand),
    /// Homothetic covering certificates.
    #[command(subcommand)]
    Cover(CoverCommand),
    /// Steiner minimal trees and vertex degrees.
    #[command(subcommand)]
    Smt(SmtCommand),
    /// Reference tables.
    #[command(subcommand)]
    Table(TableCommand),
}

#[derive(Debug, Args)]
struct BodyArgs {
    /// `cube`, `crosspolytope`, `hexagon`, or a polytope JSON file `{"dim", "normals"}`.
    #[arg(long)]
    body: String,
    /// Dimension of a named body (ignored for files).
    #[arg(long, default_value_t = 2)]
    dim: usize,
}

#[derive(Debug, Subcommand)]
enum IllumCommand {
    /// Computes L(K) and B(K) with an optimal light set.
    Solve(BodyArgs),
    /// Checks whether a light set illuminates the body.
    Check {
        #[command(flatten)]
        body: BodyArgs,
        /// JSON file `{"lights": [[...], ...]}`.
        #[arg(long)]
        lights: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
enum CoverCommand {
    /// Verifies a covering certificate by simplex subdivision.
    Verify {
        /// Certificate JSON `{"body": {...}, "homothets": [{"lambda": r, "t": [...]}]}`.
        #[arg(long)]
        cert: PathBuf,
        /// Maximal bisection depth.
        #[arg(long, default_value_t = DEFAULT_MAX_DEPTH)]
        max_depth: usize,
    },
    /// Sum of 1/(1 - lambda) over the homothets.
    Cost {
        #[arg(long)]
        cert: PathBuf,
    },
    /// The verified covering of the d-cube by 2^d half-size cubes.
    CubeHalfcover {
        #[arg(long)]
        dim: usize,
    },
    /// Converts a covering into a light set (centres of the homotheties).
    ToLights {
        #[arg(long)]
        cert: PathBuf,
        /// Must lie in (0, min(1 - lambda)).
        #[arg(long, default_value_t = DEFAULT_EPSILON)]
        eps: f64,
        #[arg(long, default_value_t = DEFAULT_MAX_DEPTH)]
        max_depth: usize,
    },
}

#[derive(Debug, Subcommand)]
enum SmtCommand {
    /// Exact Steiner minimal tree (approximate for the Euclidean norm).
    Solve {
        /// A body (see `illum solve`) or `euclidean`.
        #[arg(long)]
        gauge: String,
        /// JSON file `{"dim": d, "points": [[...], ...]}`; its `dim` selects the dimension.
        #[arg(long)]
        points: PathBuf,
        /// Writes an SVG drawing of a planar tree.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Tests whether the star from the origin to unit vectors is minimal.
    StarTest {
        /// A body or `euclidean`.
        #[arg(long)]
        body: String,
        /// Points JSON with the unit vectors.
        #[arg(long)]
        directions: PathBuf,
    },
    /// Vertex degrees of minimal trees on random terminal sets against B(K).
    Degrees {
        #[command(flatten)]
        body: BodyArgs,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
enum TableCommand {
    /// Recomputes B, L and the degree lower bounds; exits 1 on mismatch.
    Reproduce {
        /// Also runs the 3-cube rows (minutes).
        #[arg(long)]
        slow: bool,
    },
}

#[derive(Debug)]
struct Failure {
    code: String,
    message: String,
    status: i32,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Lp(_) | Error::Internal(_) | Error::DegreeBoundViolated { .. } => 1,
            _ => 2,
        };
        Failure {
            code: e.code().into(),
            message: e.to_string(),
            status,
        }
    }
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        match e {
            InputError::Invalid(inner) => inner.into(),
            other => Failure {
                code: other.code().into(),
                message: other.to_string(),
                status: 2,
            },
        }
    }
}

impl Failure {
    fn output(e: std::io::Error) -> Self {
        Failure {
            code: "io".into(),
            message: e.to_string(),
            status: 1,
        }
    }
}

fn partition_cap() -> Result<u128, Failure> {
    match std::env::var(PARTITION_CAP_VAR) {
        Ok(raw) => raw.trim().parse().map_err(|_| Failure {
            code: "invalid-env".into(),
            message: format!("{PARTITION_CAP_VAR}={raw} is not a nonnegative integer"),
            status: 2,
        }),
        Err(_) => Ok(DEFAULT_PARTITION_CAP),
    }
}

fn to_value<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("reports serialize to JSON")
}

/// Merges the fields of `extra` into the object `base`.
fn merged(mut base: Value, extra: Value) -> Value {
    if let (Value::Object(b), Value::Object(e)) = (&mut base, extra) {
        b.extend(e);
    }
    base
}

/// Report plus whether the command succeeded.
type Outcome = Result<(Value, bool), Failure>;

fn illum(cmd: IllumCommand) -> Outcome {
    match cmd {
        IllumCommand::Solve(args) => {
            let body = load_body(&args.body, args.dim)?;
            let report = bezdek_parameter(&body, partition_cap()?)?;
            let value = json!({
                "L": report.illumination_number,
                "B": report.bezdek,
                "lights": report.witness.lights,
                "cost": report.witness.cost,
                "assignment": report.witness.assignment,
                "blocks": report.blocks,
                "partitionsExamined": report.partitions_examined,
                "slack": report.slack,
                "body": report.body,
            });
            Ok((value, true))
        }
        IllumCommand::Check { body, lights } => {
            let body = load_body(&body.body, body.dim)?;
            let lights = load_lights(&lights)?.lights;
            let unlit = unlit_vertices(&lights, &body)?;
            let verts = enumerate_vertices(&body)?;
            let unlit_points: Vec<_> = unlit.iter().map(|&k| verts.vertices[k].point.clone()).collect();
            let value = json!({
                "illuminates": illuminates_body(&lights, &body)?,
                "unlit": unlit,
                "unlitVertices": unlit_points,
            });
            Ok((value, true))
        }
    }
}

fn cover(cmd: CoverCommand) -> Outcome {
    match cmd {
        CoverCommand::Verify { cert, max_depth } => {
            let mut cert = load_certificate(&cert)?;
            cert.verify(max_depth)?;
            let value = merged(to_value(&cert), json!({ "cost": cert.cost() }));
            Ok((value, true))
        }
        CoverCommand::Cost { cert } => {
            let cert = load_certificate(&cert)?;
            Ok((json!({ "cost": cert.cost() }), true))
        }
        CoverCommand::CubeHalfcover { dim } => {
            let cert = cube_halfcover(dim)?;
            let value = merged(to_value(&cert), json!({ "cost": cert.cost() }));
            Ok((value, true))
        }
        CoverCommand::ToLights { cert, eps, max_depth } => {
            let mut cert = load_certificate(&cert)?;
            let verdict = cert.verify(max_depth)?.clone();
            let converted = convert_covering_to_lights(&cert, &cert.body, eps)?;
            let illuminates = illuminates_body(&converted.lights.lights, &cert.body)?;
            let value = merged(
                to_value(&converted),
                json!({
                    "covering": verdict,
                    "illuminates": illuminates,
                    "body": cert.body,
                }),
            );
            Ok((value, true))
        }
    }
}

fn smt(cmd: SmtCommand) -> Outcome {
    match cmd {
        SmtCommand::Solve { gauge, points, svg } => {
            let points = load_points(&points)?;
            let gauge = load_gauge(&gauge, points.dim)?;
            let sol = solve_smt(&points.points, &gauge)?;
            if let Some(path) = svg {
                let drawing = render_tree(&sol.tree, gauge.polytope()).ok_or_else(|| Failure {
                    code: "svg-needs-plane".into(),
                    message: format!("SVG output needs planar points, got dimension {}", points.dim),
                    status: 2,
                })?;
                fs::write(&path, drawing).map_err(Failure::output)?;
            }
            let value = json!({
                "length": sol.tree.length,
                "dim": points.dim,
                "points": points.points,
                "tree": sol.tree,
                "degrees": sol.degrees,
                "topologiesEvaluated": sol.topologies_evaluated,
                "subtreesPruned": sol.subtrees_pruned,
            });
            Ok((value, true))
        }
        SmtCommand::StarTest { body, directions } => {
            let dirs = load_points(&directions)?;
            let gauge = load_gauge(&body, dirs.dim)?;
            let test = star_smt_test(&gauge, &dirs.points)?;
            Ok((to_value(&test), true))
        }
        SmtCommand::Degrees { body, trials, seed } => {
            let gauge = load_gauge(&body.body, body.dim)?;
            let check = degree_bound_check_capped(&gauge, trials, seed, partition_cap()?)?;
            let value = merged(json!({ "trials": trials, "seed": seed }), to_value(&check));
            Ok((value, true))
        }
    }
}

fn execute(cli: Cli) -> Outcome {
    match cli.command {
        Command::Illum(cmd) => illum(cmd),
        Command::Cover(cmd) => cover(cmd),
        Command::Smt(cmd) => smt(cmd),
        Command::Table(TableCommand::Reproduce { slow }) => {
            let report = reproduce_table(slow)?;
            Ok((to_value(&report), report.all_match))
        }
    }
}

/// Runs the command line `args` (including the program name) and returns the
/// process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    0
                }
                ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = write!(err, "{}", e.render());
                    2
                }
                _ => {
                    let rendered = e.render().to_string();
                    let line = rendered
                        .lines()
                        .find(|l| !l.trim().is_empty())
                        .unwrap_or("invalid arguments")
                        .trim_start_matches("error: ");
                    let _ = writeln!(err, "error[usage]: {line}");
                    2
                }
            };
        }
    };
    match execute(cli) {
        Ok((value, success)) => {
            let text = serde_json::to_string_pretty(&value).expect("reports serialize to JSON");
            if writeln!(out, "{text}").is_err() {
                return 1;
            }
            if success {
                0
            } else {
                let _ = writeln!(err, "error[mismatch]: computed values differ from the expected ones");
                1
            }
        }
        Err(f) => {
            let _ = writeln!(err, "error[{}]: {}", f.code, f.message);
            f.status
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let status = run(std::iter::once("mink").chain(args.iter().copied()), &mut out, &mut err);
        (status, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn hexagon_report() {
        let (status, out, _) = run_args(&["illum", "solve", "--body", "hexagon"]);
        assert_eq!(status, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["L"], 3);
        assert!((v["B"].as_f64().unwrap() - 6.0).abs() < 1e-6);
    }

    #[test]
    fn unknown_flag_is_a_usage_error() {
        let (status, _, err) = run_args(&["illum", "solve", "--body", "cube", "--bogus"]);
        assert_eq!(status, 2);
        assert!(err.starts_with("error[usage]:"), "{err}");
        assert_eq!(err.lines().count(), 1);
    }

    #[test]
    fn unsupported_dimension() {
        let (status, _, err) = run_args(&["cover", "cube-halfcover", "--dim", "7"]);
        assert_eq!(status, 2);
        assert!(err.starts_with("error[unsupported-body]"), "{err}");
    }
}
