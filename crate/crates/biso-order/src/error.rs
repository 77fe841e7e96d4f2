use thiserror::Error;

/// Errors produced by the library.
///
/// `Domain` is for scalar arguments outside their mathematical domain,
/// `Validation` for malformed channels or distributions, `Usage` for
/// structurally incompatible arguments (mismatched alphabets, bad grid
/// sizes), and `UnitAlpha` for operations that are undefined at α = 1.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("validation error: {0}")]
    Validation(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("not defined at alpha = 1: {0}")]
    UnitAlpha(&'static str),
    #[error("calibration failed: {0}")]
    Calibration(String),
    #[error("channel file error: {0}")]
    ChannelFile(String),
}

pub type Result<T> = std::result::Result<T, Error>;
