use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ph7::canonical::{CanonicalData, G2LengthData};
use ph7::io::commands::spline_scene;
use ph7::io::{
    cmd_circle_spline, cmd_interpolate_arc, cmd_interpolate_g2, cmd_order_study, cmd_render,
    cmd_verify_lemmas, render_curves, G2Input, RenderOptions, SolutionDocument, SolveOptions,
};
use ph7::{Complex, Criterion, Error};

#[derive(Parser, Debug)]
#[command(name = "ph7", version, about = "G2 interpolation with prescribed arc length by degree-7 PH curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Interpolate the circular arc with half angle ALPHA in canonical position.
    InterpolateArc {
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, value_enum, default_value_t = CriterionArg::Curvature)]
        criterion: CriterionArg,
        #[command(flatten)]
        common: SolveFlags,
    },
    /// Interpolate general G2 data with a prescribed length, either canonical
    /// (--theta0/--theta1) or in endpoint form (--q0/--q1/--g0/--g1).
    InterpolateG2 {
        #[arg(long, allow_hyphen_values = true)]
        theta0: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        theta1: Option<f64>,
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        q0: Option<Complex>,
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        q1: Option<Complex>,
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        g0: Option<Complex>,
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        g1: Option<Complex>,
        #[arg(long, allow_hyphen_values = true)]
        k0: f64,
        #[arg(long, allow_hyphen_values = true)]
        k1: f64,
        #[arg(long, allow_hyphen_values = true)]
        length: f64,
        #[arg(long, value_enum, default_value_t = CriterionArg::Rotation)]
        criterion: CriterionArg,
        #[command(flatten)]
        common: SolveFlags,
    },
    /// Radial distances and approximation orders for alpha = pi/2^n (CSV).
    OrderStudy {
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the solvability inequalities on a grid of angles in (0, pi/2].
    VerifyLemmas {
        #[arg(long, default_value_t = 64)]
        grid: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closed G2 spline of SEGMENTS rotated arc interpolants.
    CircleSpline {
        #[arg(long, default_value_t = 4)]
        segments: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        no_meta: bool,
    },
    /// Render a solution document produced by interpolate-arc or interpolate-g2.
    Render {
        input: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        control_polygon: bool,
    },
}

#[derive(Args, Debug)]
struct SolveFlags {
    /// Emit all solutions, not just the selected one.
    #[arg(long)]
    all: bool,
    /// Angles are given in degrees.
    #[arg(long)]
    degrees: bool,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
    #[arg(long)]
    control_polygon: bool,
    /// Omit the timestamped meta block so output is reproducible.
    #[arg(long)]
    no_meta: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CriterionArg {
    Rotation,
    Curvature,
    Radial,
}

impl From<CriterionArg> for Criterion {
    fn from(c: CriterionArg) -> Self {
        match c {
            CriterionArg::Rotation => Criterion::RotationIndex,
            CriterionArg::Curvature => Criterion::CurvatureL2,
            CriterionArg::Radial => Criterion::Radial,
        }
    }
}

fn parse_point(s: &str) -> Result<Complex, String> {
    let (x, y) = s
        .split_once(',')
        .ok_or_else(|| format!("expected X,Y, got `{s}`"))?;
    let x: f64 = x.trim().parse().map_err(|e| format!("{e}"))?;
    let y: f64 = y.trim().parse().map_err(|e| format!("{e}"))?;
    Ok(Complex::new(x, y))
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn angle(v: f64, degrees: bool) -> f64 {
    if degrees {
        v.to_radians()
    } else {
        v
    }
}

fn write_document(doc: &SolutionDocument, flags: &SolveFlags) -> Result<(), Error> {
    emit(&flags.out, &(doc.to_json()? + "\n"))?;
    if let Some(path) = &flags.svg {
        let options = RenderOptions {
            control_polygon: flags.control_polygon,
            ..RenderOptions::default()
        };
        fs::write(path, cmd_render(doc, &options))?;
    }
    Ok(())
}

fn g2_input(
    theta: (Option<f64>, Option<f64>),
    points: [Option<Complex>; 4],
    k: (f64, f64),
    length: f64,
    degrees: bool,
) -> Result<G2Input, Error> {
    match (theta, points) {
        ((Some(t0), Some(t1)), [None, None, None, None]) => Ok(G2Input::Canonical(
            CanonicalData::new(angle(t0, degrees), angle(t1, degrees), k.0, k.1, length)?,
        )),
        ((None, None), [Some(q0), Some(q1), Some(g0), Some(g1)]) => Ok(G2Input::Endpoint(
            G2LengthData::new(q0, q1, g0, g1, k.0, k.1, length)?,
        )),
        _ => Err(Error::InvalidInput(
            "give either --theta0 and --theta1, or all of --q0 --q1 --g0 --g1".into(),
        )),
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::InterpolateArc {
            alpha,
            criterion,
            common,
        } => {
            let options = SolveOptions {
                criterion: criterion.into(),
                all: common.all,
                meta: !common.no_meta,
            };
            let doc = cmd_interpolate_arc(angle(alpha, common.degrees), &options)?;
            write_document(&doc, &common)?;
            Ok(if doc.solutions.is_empty() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::InterpolateG2 {
            theta0,
            theta1,
            q0,
            q1,
            g0,
            g1,
            k0,
            k1,
            length,
            criterion,
            common,
        } => {
            let input = g2_input((theta0, theta1), [q0, q1, g0, g1], (k0, k1), length, common.degrees)?;
            let options = SolveOptions {
                criterion: criterion.into(),
                all: common.all,
                meta: !common.no_meta,
            };
            let doc = cmd_interpolate_g2(input, &options)?;
            write_document(&doc, &common)?;
            if doc.solutions.is_empty() {
                if let Some(d) = &doc.diagnostics {
                    eprintln!(
                        "no solutions: {} starts, {} converged, best residual {:e}",
                        d.starts, d.converged, d.best_residual
                    );
                }
                return Ok(ExitCode::from(2));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::OrderStudy { n_max, out } => {
            emit(&out, &cmd_order_study(n_max)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyLemmas { grid, out } => {
            if grid == 0 {
                return Err(Error::InvalidInput("grid must be positive".into()));
            }
            let (report, ok) = cmd_verify_lemmas(grid);
            emit(&out, &report)?;
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(4) })
        }
        Command::CircleSpline {
            segments,
            out,
            svg,
            no_meta,
        } => {
            let (doc, spline) = cmd_circle_spline(segments, !no_meta)?;
            emit(&out, &(doc.to_json()? + "\n"))?;
            if let Some(path) = svg {
                fs::write(path, render_curves(&spline_scene(&spline), &RenderOptions::default()))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Render {
            input,
            svg,
            control_polygon,
        } => {
            let doc = SolutionDocument::from_json(&fs::read_to_string(&input)?)?;
            let options = RenderOptions {
                control_polygon,
                ..RenderOptions::default()
            };
            let text = cmd_render(&doc, &options);
            emit(&svg, &text)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(3) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
