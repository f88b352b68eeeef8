//! Command-line front end: every module behind subcommands that read a norm
//! and a curve specification and write CSV/JSON data or SVG figures.
//!
//! Exit codes: 0 success, 1 module error (one machine-parsable line on
//! stderr), 2 usage error.

use std::f64::consts::PI;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use crate::analysis;
use crate::curvature::{self, CurvatureKind};
use crate::curve::{ParamTarget, PlaneCurve};
use crate::error::{Error, Result};
use crate::evolute;
use crate::geom::Vec2;
use crate::io;
use crate::norm_plane::{NormProfile, NormProfileSpec};
use crate::plot::{Layer, SvgPlot};
use crate::reconstruct;

#[derive(Parser, Debug)]
#[command(name = "minkcurve", version, about = "Plane-curve geometry in normed (Minkowski) planes")]
struct Cli {
    /// Grid resolution override for profiles and curves.
    #[arg(long, global = true)]
    grid: Option<usize>,
    /// Tolerance override used by checks that take one.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// key=value config file (flags take precedence).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args, Debug, Clone)]
struct NormArg {
    /// Norm: `euclidean`, `lp:P`, or a JSON profile file.
    #[arg(long)]
    norm: Option<String>,
}

#[derive(Args, Debug, Clone)]
struct CurveArg {
    /// Curve: `circle:R`, `ellipse:A,B`, `segment:X0,Y0,X1,Y1`,
    /// `unit-circle`, `anti-circle`, `lq-circle`,
    /// `harmonic:C0;A1,B1;A2,B2;...`, or a JSON/CSV file.
    #[arg(long)]
    curve: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Inspect a norm: unit circle, anti-circle, Radon test.
    Norm {
        #[command(subcommand)]
        cmd: NormCmd,
    },
    /// Curvature profile (k_e, k_m, k_n, k_c, k_l) along a curve.
    Curvature {
        #[command(flatten)]
        norm: NormArg,
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Frenet relations residuals on the arc-length parametrization.
    FrenetCheck {
        #[command(flatten)]
        norm: NormArg,
        #[command(flatten)]
        curve: CurveArg,
    },
    /// Integrate a curve from a prescribed curvature function.
    Reconstruct {
        #[command(flatten)]
        norm: NormArg,
        /// Curvature type: minkowski | normal | circular | arclength.
        #[arg(long = "type", value_name = "TYPE")]
        kind: String,
        /// Curvature: `const:C`, `sinusoid:A,B` (A + B sin(2 pi s/L)),
        /// `cosine:A,B` (A + B cos(2 pi s/L)), or a CSV file of (s, k).
        #[arg(long)]
        k: String,
        /// Domain length (required for closed-form presets).
        #[arg(long)]
        length: Option<f64>,
        /// Initial point `X,Y`.
        #[arg(long, default_value = "0,0", allow_hyphen_values = true)]
        start: String,
        /// Initial tangent direction (polar angle of a unit-norm vector).
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        dir: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evolute (locus of curvature centers) with cusps.
    Evolute {
        #[command(flatten)]
        norm: NormArg,
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Involute with string length c.
    Involute {
        #[command(flatten)]
        norm: NormArg,
        #[command(flatten)]
        curve: CurveArg,
        /// String length.
        #[arg(long, allow_negative_numbers = true)]
        c: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Left parallel at distance d with singular samples.
    Parallel {
        #[command(flatten)]
        norm: NormArg,
        #[command(flatten)]
        curve: CurveArg,
        /// Signed offset along the left-normal direction.
        #[arg(long, allow_negative_numbers = true)]
        d: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Theorem-level analyses.
    Analyze {
        #[command(subcommand)]
        cmd: AnalyzeCmd,
    },
    /// Compare curvatures against the anti-norm (duality identities).
    DualityCheck {
        #[command(flatten)]
        norm: NormArg,
        #[command(flatten)]
        curve: CurveArg,
    },
}

#[derive(Subcommand, Debug)]
enum NormCmd {
    /// Print a norm report; optionally write circle/anti-circle data.
    Show {
        #[command(flatten)]
        norm: NormArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum AnalyzeCmd {
    /// Extrema counts of each curvature type (four-vertex theorem).
    FourVertex {
        #[command(flatten)]
        norm: NormArg,
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Width function and constant-width flag.
    Width {
        #[command(flatten)]
        norm: NormArg,
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Extremal osculating circle/anti-circle containment margins.
    Inclusion {
        #[command(flatten)]
        norm: NormArg,
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Radon / Euclidean plane probes of a norm.
    Probes {
        #[command(flatten)]
        norm: NormArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Default, Clone)]
struct Config {
    norm: Option<String>,
    curve: Option<String>,
    grid: Option<usize>,
    tol: Option<f64>,
}

fn load_config(path: Option<&Path>) -> Result<Config> {
    let mut cfg = Config::default();
    let path = match path {
        Some(p) => p.to_path_buf(),
        None => {
            let default = PathBuf::from("minkcurve.toml");
            if !default.exists() {
                return Ok(cfg);
            }
            default
        }
    };
    let text = std::fs::read_to_string(&path)?;
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(Error::Parse(format!("config line without '=': {line}")));
        };
        let value = value.trim().trim_matches('"');
        match key.trim() {
            "norm" => cfg.norm = Some(value.to_string()),
            "curve" => cfg.curve = Some(value.to_string()),
            "grid" => {
                cfg.grid = Some(value.parse().map_err(|_| {
                    Error::Parse(format!("config grid: not an integer: {value}"))
                })?)
            }
            "tol" => {
                cfg.tol = Some(value.parse().map_err(|_| {
                    Error::Parse(format!("config tol: not a number: {value}"))
                })?)
            }
            other => return Err(Error::Parse(format!("unknown config key: {other}"))),
        }
    }
    Ok(cfg)
}

fn parse_norm(spec: &str, grid: Option<usize>) -> Result<NormProfile> {
    let profile = if spec == "euclidean" || spec == "euclid" {
        NormProfile::euclidean()
    } else if let Some(rest) = spec.strip_prefix("lp:") {
        let p: f64 = rest
            .parse()
            .map_err(|_| Error::Parse(format!("lp exponent: {rest}")))?;
        NormProfile::lp(p)?
    } else {
        let text = std::fs::read_to_string(spec)?;
        let parsed: NormProfileSpec = serde_json::from_str(&text)?;
        NormProfile::from_spec(&parsed)?
    };
    match grid {
        Some(n) => profile.with_grid_n(n),
        None => Ok(profile),
    }
}

fn parse_floats(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|v| {
            v.trim()
                .parse::<f64>()
                .map_err(|_| Error::Parse(format!("expected a number: {v}")))
        })
        .collect()
}

fn parse_curve(spec: &str, profile: &NormProfile, grid: Option<usize>) -> Result<PlaneCurve> {
    let curve = if let Some(rest) = spec.strip_prefix("circle:") {
        let r = parse_floats(rest)?;
        if r.len() != 1 {
            return Err(Error::Parse("circle takes one radius".into()));
        }
        PlaneCurve::circle(r[0])
    } else if let Some(rest) = spec.strip_prefix("ellipse:") {
        let v = parse_floats(rest)?;
        if v.len() != 2 {
            return Err(Error::Parse("ellipse takes two semi-axes".into()));
        }
        PlaneCurve::ellipse(v[0], v[1])
    } else if let Some(rest) = spec.strip_prefix("segment:") {
        let v = parse_floats(rest)?;
        if v.len() != 4 {
            return Err(Error::Parse("segment takes x0,y0,x1,y1".into()));
        }
        PlaneCurve::segment(Vec2::new(v[0], v[1]), Vec2::new(v[2], v[3]))
    } else if spec == "unit-circle" {
        PlaneCurve::unit_circle(profile)
    } else if spec == "anti-circle" || spec == "lq-circle" {
        PlaneCurve::anti_circle(profile)?
    } else if let Some(rest) = spec.strip_prefix("harmonic:") {
        let mut groups = rest.split(';');
        let c0: f64 = groups
            .next()
            .unwrap_or("")
            .trim()
            .parse()
            .map_err(|_| Error::Parse("harmonic needs a constant term".into()))?;
        let mut coeffs = Vec::new();
        for g in groups {
            let v = parse_floats(g)?;
            if v.len() != 2 {
                return Err(Error::Parse("each harmonic is a_k,b_k".into()));
            }
            coeffs.push((v[0], v[1]));
        }
        PlaneCurve::from_support_harmonics(c0, &coeffs)?
    } else if spec.ends_with(".json") {
        let text = std::fs::read_to_string(spec)?;
        let parsed: io::CurveSpec = serde_json::from_str(&text)?;
        parsed.to_curve()?
    } else if spec.ends_with(".csv") {
        let text = std::fs::read_to_string(spec)?;
        io::curve_from_csv(&text, true)?
    } else {
        return Err(Error::Parse(format!("unrecognized curve spec: {spec}")));
    };
    Ok(match grid {
        Some(n) => curve.with_samples_n(n),
        None => curve,
    })
}

fn parse_kind(s: &str) -> Result<CurvatureKind> {
    Ok(match s {
        "minkowski" => CurvatureKind::Minkowski,
        "normal" => CurvatureKind::Normal,
        "circular" => CurvatureKind::Circular,
        "arclength" | "arc-length" => CurvatureKind::ArcLength,
        other => return Err(Error::Parse(format!("unknown curvature type: {other}"))),
    })
}

fn write_output(out: Option<&Path>, content: &str) -> Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, content)?;
            Ok(())
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn json_line<T: serde::Serialize>(value: &T) -> Result<String> {
    Ok(format!("{}\n", serde_json::to_string_pretty(value)?))
}

fn required<'a>(flag: Option<&'a String>, cfg: Option<&'a String>, what: &str) -> Result<&'a str> {
    flag.or(cfg)
        .map(|s| s.as_str())
        .ok_or_else(|| Error::Parse(format!("missing --{what} (flag or config)")))
}

/// Entry point used by the binary; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("minkcurve-error kind={} msg={:?}", e.kind(), e.to_string());
            1
        }
    }
}

fn dispatch(cli: Cli) -> Result<()> {
    let cfg = load_config(cli.config.as_deref())?;
    let grid = cli.grid.or(cfg.grid);
    let tol = cli.tol.or(cfg.tol);

    let norm_of = |arg: &NormArg| -> Result<NormProfile> {
        parse_norm(required(arg.norm.as_ref(), cfg.norm.as_ref(), "norm")?, grid)
    };
    let curve_of = |arg: &CurveArg, profile: &NormProfile| -> Result<PlaneCurve> {
        parse_curve(
            required(arg.curve.as_ref(), cfg.curve.as_ref(), "curve")?,
            profile,
            grid,
        )
    };

    match cli.cmd {
        Command::Norm { cmd } => match cmd {
            NormCmd::Show { norm, out } => {
                let profile = norm_of(&norm)?;
                let radon = profile.is_radon(tol.unwrap_or(1e-6));
                #[derive(serde::Serialize)]
                struct NormReport {
                    kind: crate::norm_plane::ProfileKind,
                    circle_length: f64,
                    ball_area_x2: f64,
                    euclid_circle_length: f64,
                    radon: crate::norm_plane::RadonReport,
                }
                let report = NormReport {
                    kind: profile.kind().clone(),
                    circle_length: profile.circle_length(),
                    ball_area_x2: profile.ball_area_x2(),
                    euclid_circle_length: profile
                        .circle_tables()
                        .total(crate::tables::Column::Euclidean),
                    radon,
                };
                if let Some(path) = out.as_deref() {
                    if path.extension().is_some_and(|e| e == "svg") {
                        let circle = PlaneCurve::unit_circle(&profile).sample_points(1024);
                        let anti = PlaneCurve::anti_circle(&profile)?.sample_points(1024);
                        let mut plot = SvgPlot::new();
                        plot.add(Layer::path(circle, true, "black"));
                        plot.add(Layer::path(anti, true, "crimson"));
                        write_output(Some(path), &plot.render())?;
                    } else {
                        write_output(Some(path), &json_line(&report)?)?;
                    }
                }
                print!("{}", json_line(&report)?);
                Ok(())
            }
        },
        Command::Curvature { norm, curve, out } => {
            let profile = norm_of(&norm)?;
            let curve = curve_of(&curve, &profile)?;
            let kp = curvature::curvatures(&curve, &profile)?;
            let is_json = out
                .as_deref()
                .is_some_and(|p| p.extension().is_some_and(|e| e == "json"));
            if is_json {
                write_output(out.as_deref(), &json_line(&kp)?)
            } else {
                write_output(out.as_deref(), &io::curvature_csv(&kp))
            }
        }
        Command::FrenetCheck { norm, curve } => {
            let profile = norm_of(&norm)?;
            let curve = curve_of(&curve, &profile)?;
            let (unit, _) = curve.reparametrize(&profile, ParamTarget::NormArclength)?;
            let (r1, r2) = curvature::frenet_residuals(&unit, &profile)?;
            #[derive(serde::Serialize)]
            struct FrenetReport {
                grid: usize,
                r1: f64,
                r2: f64,
            }
            print!(
                "{}",
                json_line(&FrenetReport {
                    grid: unit.samples_n(),
                    r1,
                    r2
                })?
            );
            Ok(())
        }
        Command::Reconstruct {
            norm,
            kind,
            k,
            length,
            start,
            dir,
            out,
        } => {
            let profile = norm_of(&norm)?;
            let kind = parse_kind(&kind)?;
            let sv = parse_floats(&start)?;
            if sv.len() != 2 {
                return Err(Error::Parse("start takes x,y".into()));
            }
            let start = Vec2::new(sv[0], sv[1]);
            let start_dir = profile.phi(dir);
            let curve = if let Some(rest) = k.strip_prefix("const:") {
                let value: f64 = rest
                    .parse()
                    .map_err(|_| Error::Parse(format!("const curvature: {rest}")))?;
                let len = length.ok_or_else(|| Error::Parse("--length required".into()))?;
                reconstruct::curve_from_curvature(
                    move |_| value,
                    kind,
                    len,
                    &profile,
                    start,
                    start_dir,
                )?
            } else if let Some(rest) = k.strip_prefix("sinusoid:").or(k.strip_prefix("cosine:")) {
                let v = parse_floats(rest)?;
                if v.len() != 2 {
                    return Err(Error::Parse("preset takes A,B".into()));
                }
                let len = length.ok_or_else(|| Error::Parse("--length required".into()))?;
                let cosine = k.starts_with("cosine:");
                let (a, b) = (v[0], v[1]);
                reconstruct::curve_from_curvature(
                    move |s| {
                        let arg = 2.0 * PI * s / len;
                        a + b * if cosine { arg.cos() } else { arg.sin() }
                    },
                    kind,
                    len,
                    &profile,
                    start,
                    start_dir,
                )?
            } else if k.ends_with(".csv") {
                let text = std::fs::read_to_string(&k)?;
                let (kf, total) = io::curvature_fn_from_csv(&text)?;
                let len = length.unwrap_or(total);
                reconstruct::curve_from_curvature(kf, kind, len, &profile, start, start_dir)?
            } else {
                return Err(Error::Parse(format!("unrecognized curvature spec: {k}")));
            };
            let n = grid.unwrap_or(2048);
            let is_csv = out
                .as_deref()
                .is_some_and(|p| p.extension().is_some_and(|e| e == "csv"));
            if is_csv {
                write_output(out.as_deref(), &io::points_csv(&curve.sample_points(n)))
            } else {
                write_output(
                    out.as_deref(),
                    &json_line(&io::CurveSpec::from_curve(&curve, n))?,
                )
            }
        }
        Command::Evolute { norm, curve, out } => {
            let profile = norm_of(&norm)?;
            let curve = curve_of(&curve, &profile)?;
            let (unit, _) = curve.reparametrize(&profile, ParamTarget::NormArclength)?;
            let ev = evolute::evolute(&unit, &profile)?;
            render_evolute_output(&unit, &ev, out.as_deref())
        }
        Command::Involute { norm, curve, c, out } => {
            let profile = norm_of(&norm)?;
            let curve = curve_of(&curve, &profile)?;
            let (unit, _) = curve.reparametrize(&profile, ParamTarget::NormArclength)?;
            let inv = evolute::involute(&unit, &profile, c)?;
            let n = grid.unwrap_or(1024);
            match out.as_deref() {
                Some(p) if p.extension().is_some_and(|e| e == "svg") => {
                    let mut plot = SvgPlot::new();
                    plot.add(Layer::path(unit.sample_points(n), unit.closed(), "black"));
                    plot.add(Layer::path(inv.sample_points(n), false, "crimson"));
                    write_output(Some(p), &plot.render())
                }
                other => write_output(other, &json_line(&io::CurveSpec::from_curve(&inv, n))?),
            }
        }
        Command::Parallel { norm, curve, d, out } => {
            let profile = norm_of(&norm)?;
            let curve = curve_of(&curve, &profile)?;
            let (unit, _) = curve.reparametrize(&profile, ParamTarget::NormArclength)?;
            let (par, singular) = evolute::left_parallel(&unit, &profile, d)?;
            let n = grid.unwrap_or(1024);
            match out.as_deref() {
                Some(p) if p.extension().is_some_and(|e| e == "svg") => {
                    let mut plot = SvgPlot::new();
                    plot.add(Layer::path(unit.sample_points(n), unit.closed(), "black"));
                    plot.add(Layer::path(par.sample_points(n), par.closed(), "crimson"));
                    let marks: Vec<Vec2> = singular.iter().map(|&s| par.eval(s)).collect();
                    plot.add(Layer::crosses(marks, "royalblue"));
                    write_output(Some(p), &plot.render())
                }
                other => {
                    #[derive(serde::Serialize)]
                    struct ParallelReport {
                        curve: io::CurveSpec,
                        singular_params: Vec<f64>,
                    }
                    write_output(
                        other,
                        &json_line(&ParallelReport {
                            curve: io::CurveSpec::from_curve(&par, n),
                            singular_params: singular,
                        })?,
                    )
                }
            }
        }
        Command::Analyze { cmd } => match cmd {
            AnalyzeCmd::FourVertex { norm, curve, out } => {
                let profile = norm_of(&norm)?;
                let curve = curve_of(&curve, &profile)?;
                let reports: Vec<analysis::FourVertexReport> = CurvatureKind::ALL_MINKOWSKIAN
                    .iter()
                    .map(|&kind| analysis::four_vertex_report(&curve, &profile, kind))
                    .collect::<Result<_>>()?;
                write_output(out.as_deref(), &json_line(&reports)?)
            }
            AnalyzeCmd::Width { norm, curve, out } => {
                let profile = norm_of(&norm)?;
                let curve = curve_of(&curve, &profile)?;
                let report = analysis::width_function(&curve, &profile, grid.unwrap_or(512))?;
                write_output(out.as_deref(), &json_line(&report)?)
            }
            AnalyzeCmd::Inclusion { norm, curve, out } => {
                let profile = norm_of(&norm)?;
                let curve = curve_of(&curve, &profile)?;
                let report = analysis::inclusion_check(&curve, &profile)?;
                write_output(out.as_deref(), &json_line(&report)?)
            }
            AnalyzeCmd::Probes { norm, out } => {
                let profile = norm_of(&norm)?;
                let report = analysis::plane_probes(&profile)?;
                write_output(out.as_deref(), &json_line(&report)?)
            }
        },
        Command::DualityCheck { norm, curve } => {
            let profile = norm_of(&norm)?;
            let curve = curve_of(&curve, &profile)?;
            let report = curvature::duality_check(&curve, &profile, tol.unwrap_or(1e-7))?;
            print!("{}", json_line(&report)?);
            Ok(())
        }
    }
}

fn render_evolute_output(
    unit: &PlaneCurve,
    ev: &evolute::Evolute,
    out: Option<&Path>,
) -> Result<()> {
    match out {
        Some(p) if p.extension().is_some_and(|e| e == "svg") => {
            let mut plot = SvgPlot::new();
            plot.add(Layer::path(unit.sample_points(1024), unit.closed(), "black"));
            plot.add(Layer::path(ev.points.clone(), false, "crimson"));
            let cusp_points: Vec<Vec2> = ev
                .cusps
                .iter()
                .map(|&s| {
                    // nearest sample
                    let i = ev
                        .s
                        .iter()
                        .position(|&x| x >= s)
                        .unwrap_or(ev.s.len() - 1);
                    ev.points[i]
                })
                .collect();
            plot.add(Layer::crosses(cusp_points, "royalblue"));
            write_output(Some(p), &plot.render())
        }
        Some(p) if p.extension().is_some_and(|e| e == "csv") => {
            write_output(Some(p), &io::points_csv(&ev.points))
        }
        other => write_output(other, &json_line(ev)?),
    }
}
