//! Sample ingestion, validation and pooled rescaling onto the unit square.

use std::fs::File;
use std::io::Read;
use std::path::Path;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Minimum number of rows accepted from an input file.
pub const MIN_RAW_SIZE: usize = 2;

/// Delimiter of an input file.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputFormat {
    Csv,
    Tsv,
}

impl InputFormat {
    fn delimiter(self) -> u8 {
        match self {
            InputFormat::Csv => b',',
            InputFormat::Tsv => b'\t',
        }
    }

    /// Picks the format from a file extension, defaulting to CSV.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("tsv") => InputFormat::Tsv,
            _ => InputFormat::Csv,
        }
    }
}

/// Observations as read from disk, in their original units.
#[derive(Clone, Debug, PartialEq)]
pub struct RawSample<T> {
    points: Vec<(T, T)>,
    label: String,
}

impl<T: Scalar> RawSample<T> {
    pub fn new(points: Vec<(T, T)>, label: impl Into<String>) -> Result<Self> {
        if points.len() < MIN_RAW_SIZE {
            return Err(Error::SampleTooSmall {
                size: points.len(),
                min: MIN_RAW_SIZE,
            });
        }
        if let Some(row) = points
            .iter()
            .position(|(x, y)| !x.is_finite() || !y.is_finite())
        {
            return Err(Error::NonFinite { row: row + 1 });
        }
        Ok(Self {
            points,
            label: label.into(),
        })
    }

    pub fn points(&self) -> &[(T, T)] {
        &self.points
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Affine per-axis map taking the pooled extremes of two raw samples to 0 and 1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RescaleTransform<T> {
    pub x_min: T,
    pub x_max: T,
    pub y_min: T,
    pub y_max: T,
    pub identity: bool,
}

impl<T: Scalar> RescaleTransform<T> {
    pub fn identity() -> Self {
        Self {
            x_min: T::zero(),
            x_max: T::one(),
            y_min: T::zero(),
            y_max: T::one(),
            identity: true,
        }
    }

    pub fn apply(&self, x: T, y: T) -> (T, T) {
        if self.identity {
            return (x, y);
        }
        (
            (x - self.x_min) / (self.x_max - self.x_min),
            (y - self.y_min) / (self.y_max - self.y_min),
        )
    }

    /// Maps a unit-square location back to original units.
    pub fn invert(&self, x: T, y: T) -> (T, T) {
        if self.identity {
            return (x, y);
        }
        (
            self.x_min + x * (self.x_max - self.x_min),
            self.y_min + y * (self.y_max - self.y_min),
        )
    }
}

/// A nonempty sample supported on `[0, 1]²`.
///
/// Duplicate points are kept; each carries its own empirical mass.
#[derive(Clone, Debug, PartialEq)]
pub struct BivariateSample<T> {
    points: Vec<(T, T)>,
    transform: RescaleTransform<T>,
}

impl<T: Scalar> BivariateSample<T> {
    /// Wraps points that already lie in the unit square.
    pub fn new(points: Vec<(T, T)>) -> Result<Self> {
        Self::with_transform(points, RescaleTransform::identity())
    }

    pub fn with_transform(points: Vec<(T, T)>, transform: RescaleTransform<T>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::SampleTooSmall { size: 0, min: 1 });
        }
        let unit = |v: T| v >= T::zero() && v <= T::one();
        if let Some(&(x, y)) = points.iter().find(|(x, y)| !(unit(*x) && unit(*y))) {
            return Err(Error::OutsideUnitSquare {
                x: x.to_f64().unwrap_or(f64::NAN),
                y: y.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { points, transform })
    }

    pub fn points(&self) -> &[(T, T)] {
        &self.points
    }

    pub fn size(&self) -> usize {
        self.points.len()
    }

    pub fn transform(&self) -> &RescaleTransform<T> {
        &self.transform
    }

    /// Appends more points, keeping the transform.
    pub fn extended(&self, extra: &[(T, T)]) -> Result<Self> {
        let mut points = self.points.clone();
        points.extend_from_slice(extra);
        Self::with_transform(points, self.transform)
    }
}

/// How raw samples are mapped onto the unit square.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RescaleMode {
    PooledMinMax,
    Identity,
}

/// Reads a two-column sample from any reader. Row numbers in errors are file lines.
pub fn read_sample<T: Scalar, R: Read>(
    reader: R,
    format: InputFormat,
    has_header: bool,
    label: impl Into<String>,
) -> Result<RawSample<T>> {
    let mut rdr = csv::ReaderBuilder::new()
        .delimiter(format.delimiter())
        .has_headers(has_header)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(reader);

    let mut points = Vec::new();
    for record in rdr.records() {
        let record = record.map_err(|e| Error::Parse {
            row: e.position().map_or(0, |p| p.line() as usize),
            message: e.to_string(),
        })?;
        let row = record
            .position()
            .map_or(points.len() + 1, |p| p.line() as usize);
        if record.iter().all(str::is_empty) {
            continue;
        }
        if record.len() != 2 {
            return Err(Error::Parse {
                row,
                message: format!("expected 2 columns, found {}", record.len()),
            });
        }
        let parse = |field: &str| -> Result<T> {
            let v: f64 = field.parse().map_err(|_| Error::Parse {
                row,
                message: format!("not a number: {field:?}"),
            })?;
            if !v.is_finite() {
                return Err(Error::NonFinite { row });
            }
            T::from_f64(v).ok_or(Error::NonFinite { row })
        };
        let x = parse(&record[0])?;
        let y = parse(&record[1])?;
        points.push((x, y));
    }
    RawSample::new(points, label)
}

pub fn load_sample<T: Scalar>(
    path: impl AsRef<Path>,
    format: InputFormat,
    has_header: bool,
) -> Result<RawSample<T>> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    read_sample(file, format, has_header, path.display().to_string())
}

fn extremes<T: Scalar>(values: impl Iterator<Item = T>) -> (T, T) {
    values.fold((T::infinity(), T::neg_infinity()), |(lo, hi), v| {
        (lo.min(v), hi.max(v))
    })
}

/// Maps both samples onto `[0, 1]²` with the pooled per-axis min and max.
pub fn rescale_pooled<T: Scalar>(
    a: &RawSample<T>,
    b: &RawSample<T>,
) -> Result<(BivariateSample<T>, BivariateSample<T>, RescaleTransform<T>)> {
    let pooled = || a.points().iter().chain(b.points());
    let (x_min, x_max) = extremes(pooled().map(|p| p.0));
    let (y_min, y_max) = extremes(pooled().map(|p| p.1));
    if x_min == x_max {
        return Err(Error::DegenerateAxis {
            axis: "x",
            value: x_min.to_f64().unwrap_or(f64::NAN),
        });
    }
    if y_min == y_max {
        return Err(Error::DegenerateAxis {
            axis: "y",
            value: y_min.to_f64().unwrap_or(f64::NAN),
        });
    }
    let transform = RescaleTransform {
        x_min,
        x_max,
        y_min,
        y_max,
        identity: false,
    };
    let map = |s: &RawSample<T>| {
        let points = s
            .points()
            .iter()
            .map(|&(x, y)| transform.apply(x, y))
            .collect();
        BivariateSample::with_transform(points, transform)
    };
    Ok((map(a)?, map(b)?, transform))
}

/// Applies `mode`; identity mode requires both samples to lie in the unit square already.
pub fn rescale<T: Scalar>(
    a: &RawSample<T>,
    b: &RawSample<T>,
    mode: RescaleMode,
) -> Result<(BivariateSample<T>, BivariateSample<T>, RescaleTransform<T>)> {
    match mode {
        RescaleMode::PooledMinMax => rescale_pooled(a, b),
        RescaleMode::Identity => Ok((
            BivariateSample::new(a.points().to_vec())?,
            BivariateSample::new(b.points().to_vec())?,
            RescaleTransform::identity(),
        )),
    }
}
