//! Differential geometry of plane curves in two-dimensional normed
//! (Minkowski) planes.
//!
//! A norm is modelled by the polar profile of its unit circle. On top of
//! that the crate computes the four curvature types of a curve (Minkowski,
//! normal, circular, arc-length), the Frenet frame adapted to the norm,
//! reconstructs curves from prescribed curvature, and builds evolutes,
//! involutes and parallels, together with theorem-level analyses
//! (four-vertex counts, constant width, osculating-circle containment,
//! Radon/Euclidean plane probes).
//!
//! Start with [`NormProfile`] and [`PlaneCurve`]; see the `examples/`
//! directory for one runnable program per capability.

pub mod analysis;
pub mod curvature;
pub mod curve;
pub mod error;
pub mod evolute;
pub mod geom;
pub mod interp;
pub mod io;
pub mod norm_plane;
pub mod numerics;
pub mod plot;
pub mod reconstruct;
pub mod spline;
pub mod tables;

pub mod cli;

pub use curvature::{CurvatureKind, CurvatureProfile, FrameSample};
pub use curve::{Metric, ParamTarget, PlaneCurve};

pub use error::{Error, Result};
pub use geom::Vec2;
pub use norm_plane::{AntiProfile, DeterminantForm, NormProfile, NormProfileSpec, ProfileKind};



pub use tables::{Column, ParamTable};
