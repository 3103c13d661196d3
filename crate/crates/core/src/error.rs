//! Error type shared by all faultline modules.

use std::io;
use std::path::PathBuf;

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while ingesting, clustering or evaluating.
#[derive(Debug, Error)]
pub enum Error {
    #[error("feature vector must hold at least one value")]
    EmptyVector,

    #[error("non-finite value {value} at coordinate {index}")]
    NonFiniteValue { index: usize, value: f64 },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error(
        "sorensen distance needs a positive coordinate sum, got {sum}; \
         normalize the inputs to a nonnegative range first"
    )]
    SorensenCoordinateSum { sum: f64 },

    #[error("sample vector {index} has dimension {found}, expected {expected}")]
    SampleDimensionMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("cannot pick k = {k} centroids from {distinct} distinct data points")]
    TooFewDistinctPoints { k: usize, distinct: usize },

    #[error("invalid clustering config: {reason}")]
    InvalidConfig { reason: String },

    #[error("assignment holds {labels} labels but the dataset holds {data} points")]
    AssignmentLength { labels: usize, data: usize },

    #[error("cluster index {label} out of range for k = {k}")]
    LabelOutOfRange { label: usize, k: usize },

    #[error("cannot read {path}: {source}")]
    FileRead { path: PathBuf, source: io::Error },

    #[error("cannot write {path}: {source}")]
    FileWrite { path: PathBuf, source: io::Error },

    #[error("{path}: malformed table: {source}")]
    TableFormat { path: PathBuf, source: csv::Error },

    #[error("{path}: missing required column '{column}'")]
    MissingColumn { path: PathBuf, column: String },

    #[error("{path}: line {line}: empty module id")]
    EmptyModuleId { path: PathBuf, line: u64 },

    #[error("{path}: line {line}, column '{column}': expected a number, got '{value}'")]
    NonNumericCell {
        path: PathBuf,
        line: u64,
        column: String,
        value: String,
    },

    #[error(
        "{path}: line {line}, column '{column}': invalid label '{value}' \
         (expected Y/N, TRUE/FALSE or 1/0)"
    )]
    InvalidLabel {
        path: PathBuf,
        line: u64,
        column: String,
        value: String,
    },

    #[error("{path}: line {line}: duplicate module id '{id}'")]
    DuplicateModuleId {
        path: PathBuf,
        line: u64,
        id: String,
    },

    #[error("{path}: table holds no data rows")]
    EmptyTable { path: PathBuf },

    #[error("dataset is invalid: {reason}")]
    InvalidDataset { reason: String },

    #[error("natural join found no module ids common to both tables")]
    EmptyJoin,

    #[error("conflicting defect labels for module ids: {}", ids.join(", "))]
    LabelConflict { ids: Vec<String> },

    #[error("dataset carries no defect labels")]
    MissingLabels,

    #[error("invalid synthetic dataset spec: {reason}")]
    InvalidSynthetic { reason: String },

    #[error("truth and prediction lengths differ: {truth} vs {predicted}")]
    TruthLengthMismatch { truth: usize, predicted: usize },

    #[error("cannot build a confusion matrix from empty inputs")]
    EmptyConfusion,

    #[error("{name} = {value} is outside [0, 1]")]
    RateOutOfRange { name: &'static str, value: f64 },
}
