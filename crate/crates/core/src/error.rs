use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("failed to read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("row {row}: {message}")]
    Parse { row: usize, message: String },
    #[error("row {row}: non-finite value")]
    NonFinite { row: usize },
    #[error("sample too small: {size} points, need at least {min}")]
    SampleTooSmall { size: usize, min: usize },
    #[error("degenerate {axis} axis: all pooled values equal {value}")]
    DegenerateAxis { axis: &'static str, value: f64 },
    #[error("point ({x}, {y}) lies outside the unit square")]
    OutsideUnitSquare { x: f64, y: f64 },
    #[error("coordinate {value} is not on the combined grid")]
    GridMismatch { value: f64 },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
}

pub type Result<T> = std::result::Result<T, Error>;
