/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Approach angle outside the supported cone.
    #[error("approach angle {0} deg outside [-{max}, {max}] deg", max = crate::camera::MAX_APPROACH_DEG)]
    AngleOutOfRange(f64),

    /// 3D point with non-positive depth cannot be projected.
    #[error("point behind camera (z = {0})")]
    BehindCamera(f64),

    /// Zero-sized image where a non-empty one is required.
    #[error("zero-size image ({width}x{height})")]
    EmptyImage { width: u32, height: u32 },

    /// Two inputs that must agree in shape do not.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// Invalid parameter or configuration value.
    #[error("invalid config: {0}")]
    Config(String),

    /// A grasp policy could not produce a pose.
    #[error("no grasp: {0}")]
    NoGrasp(String),

    /// Malformed file content (bad magic, truncated payload, ...).
    #[error("format error: {0}")]
    Format(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
