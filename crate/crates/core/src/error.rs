//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ground set must contain at least one element")]
    EmptyGroundSet,
    #[error("ground set size {n} exceeds the supported maximum {max}")]
    GroundTooLarge { n: usize, max: usize },
    #[error("invalid labels: {0}")]
    InvalidLabels(String),
    #[error("base sets of an upfamily must be non-empty")]
    EmptyBaseSet,
    #[error("mask {mask:#b} out of range for a ground set of size {n}")]
    MaskOutOfRange { mask: u32, n: usize },
    #[error("family is not upward closed")]
    NotUpwardClosed,
    #[error("family is not a maximal linked upfamily")]
    NotMaximal,
    #[error("ground set sizes differ: {left} vs {right}")]
    GroundMismatch { left: usize, right: usize },
    #[error("order {n} exceeds the limit {max} for this operation")]
    OrderTooLarge { n: usize, max: usize },
    #[error("{0} is not a unit modulo 5")]
    NotAUnit(usize),
    #[error("table is not associative at ({i},{j},{k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("invalid table: {0}")]
    InvalidTable(String),
    #[error("idempotents {e} and {f} do not commute; no semilattice order")]
    NotASemilattice { e: usize, f: usize },
    #[error("the group is not central in the semigroup")]
    NotCentral,
    #[error("cannot resolve named element: {0}")]
    NameResolutionFailure(String),
    #[error("map is not a semigroup automorphism")]
    NotAnAutomorphism,
    #[error("corrupt cache file: {0}")]
    CorruptCache(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
