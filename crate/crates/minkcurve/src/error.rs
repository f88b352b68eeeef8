//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("zero vector is not a valid input here")]
    ZeroVector,

    #[error("profile is not C2: {0}")]
    NotC2(String),

    #[error("unit circle is not convex: {0}")]
    NonConvex(String),

    #[error("curve is not strictly convex: {0}")]
    NotConvex(String),

    #[error("degenerate speed: {0}")]
    DegenerateSpeed(String),

    #[error("unit-circle curvature below the flat-point guard at {count} samples")]
    FlatUnitCircle { count: usize },

    #[error("circular curvature vanishes on the curve")]
    VanishingCurvature,

    #[error("reference point lies on the curve")]
    PointOnCurve,

    #[error("curvature value must be nonzero")]
    ZeroCurvature,

    #[error("anti-circle could not be fit to a polar profile: sup deviation {0:.3e}")]
    AntiProfileFit(f64),

    #[error("curvature conversion requires dividing by a flat-point circle curvature")]
    GuardViolation,

    #[error("curve does not have constant width: relative spread {0:.3e}")]
    NotConstantWidth(f64),

    #[error("invalid norm profile: {0}")]
    InvalidProfile(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable machine-readable tag, used by the CLI error line.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ZeroVector => "ZeroVector",
            Error::NotC2(_) => "NotC2",
            Error::NonConvex(_) => "NonConvex",
            Error::NotConvex(_) => "NotConvex",
            Error::DegenerateSpeed(_) => "DegenerateSpeed",
            Error::FlatUnitCircle { .. } => "FlatUnitCircle",
            Error::VanishingCurvature => "VanishingCurvature",
            Error::PointOnCurve => "PointOnCurve",
            Error::ZeroCurvature => "ZeroCurvature",
            Error::AntiProfileFit(_) => "AntiProfileFit",
            Error::GuardViolation => "GuardViolation",
            Error::NotConstantWidth(_) => "NotConstantWidth",
            Error::InvalidProfile(_) => "InvalidProfile",
            Error::InvalidInput(_) => "InvalidInput",
            Error::Io(_) => "Io",
            Error::Json(_) => "Json",
            Error::Parse(_) => "Parse",
        }
    }
}
