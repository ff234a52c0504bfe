use std::path::PathBuf;

use thiserror::Error;

use crate::geometry::Point;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("a point set needs at least 2 points, got {0}")]
    TooFewPoints(usize),
    #[error("point {index} = {point} is outside the supported coordinate range")]
    CoordinateOutOfRange { index: usize, point: Point },
    #[error("points {i} and {j} coincide at {point}")]
    DuplicatePoint { i: usize, j: usize, point: Point },
    #[error("points {i}, {j}, {k} are collinear: {} {} {}", points[0], points[1], points[2])]
    Collinear { i: usize, j: usize, k: usize, points: [Point; 3] },

    #[error("graph has {0} vertices, more than the supported {max}", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("{what} supports at most {max} vertices, got {got}")]
    OracleTooLarge { what: &'static str, max: usize, got: usize },
    #[error("{0}")]
    InvalidArgument(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("order-type database for n = {0} is not supported (expected 3..=10)")]
    UnsupportedDatabaseSize(usize),
    #[error("database truncated: {len} bytes is not a multiple of the {record_size}-byte record (trailing record at byte offset {offset})")]
    TruncatedDatabase { len: usize, record_size: usize, offset: usize },
    #[error("database holds {found} records for n = {n}, expected {expected}")]
    RecordCountMismatch { n: usize, found: usize, expected: usize },
    #[error("database record at byte offset {offset} is not in general position: {source}")]
    DegenerateRecord {
        offset: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("minor replay step {step}: {message}")]
    Replay { step: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}
