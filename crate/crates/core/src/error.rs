//! Crate-wide error type.

use alloc::string::String;
use core::fmt;

/// Errors reported by the core operations.
///
/// Every rejection named by an operation contract maps to one variant here;
/// the message carries the offending axis, bound, or byte position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A tensor axis does not match what the operation requires.
    ShapeMismatch {
        axis: &'static str,
        expected: usize,
        got: usize,
    },
    /// Same-padding convolution with an even kernel side.
    EvenKernelSamePadding { kh: usize, kw: usize },
    /// Pooling window does not fit inside the input.
    WindowTooLarge {
        axis: &'static str,
        window: usize,
        input: usize,
    },
    /// Batch normalization over an empty batch.
    EmptyBatch,
    /// PTLU threshold must be strictly positive.
    NonPositiveThreshold { channel: usize },
    /// Class label outside {0, 1, 2}.
    LabelOutOfRange { label: usize, classes: usize },
    /// Generic invalid argument with a short description.
    InvalidArgument(String),
    /// Embedding rate outside [0, 1].
    RateOutOfRange,
    /// Payload does not fit the keyed chip budget.
    PayloadExceedsCapacity { capacity_bits: u64, payload_bits: u64 },
    /// Malformed serialized data (checkpoint, manifest, raw video).
    Format { offset: usize, reason: String },
    /// Checkpoint entry whose name the model does not declare.
    UnknownParameter(String),
    /// A gradient turned non-finite during optimization.
    NonFiniteGradient { parameter: String },
    /// Dataset construction was given fewer source clips than required.
    InsufficientClips { required: usize, available: usize },
    /// Segment sampling asked for more segments than frames.
    SegmentsExceedFrames { segments: usize, frames: usize },
    /// Video shorter than one clip.
    VideoTooShort { frames: usize, needed: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ShapeMismatch { axis, expected, got } => {
                write!(f, "shape mismatch on {axis}: expected {expected}, got {got}")
            }
            Error::EvenKernelSamePadding { kh, kw } => {
                write!(f, "same padding requires odd kernel sides, got {kh}x{kw}")
            }
            Error::WindowTooLarge { axis, window, input } => {
                write!(f, "pooling window {window} exceeds input {axis} {input}")
            }
            Error::EmptyBatch => write!(f, "batch normalization over an empty batch"),
            Error::NonPositiveThreshold { channel } => {
                write!(f, "PTLU threshold for channel {channel} must be positive")
            }
            Error::LabelOutOfRange { label, classes } => {
                write!(f, "label {label} out of range for {classes} classes")
            }
            Error::InvalidArgument(msg) => write!(f, "{msg}"),
            Error::RateOutOfRange => write!(f, "embedding rate must lie in [0, 1]"),
            Error::PayloadExceedsCapacity { capacity_bits, payload_bits } => write!(
                f,
                "payload of {payload_bits} bits exceeds capacity of {capacity_bits} bits"
            ),
            Error::Format { offset, reason } => {
                write!(f, "malformed data at byte {offset}: {reason}")
            }
            Error::UnknownParameter(name) => write!(f, "unknown parameter '{name}'"),
            Error::NonFiniteGradient { parameter } => {
                write!(f, "non-finite gradient in parameter '{parameter}'")
            }
            Error::InsufficientClips { required, available } => write!(
                f,
                "dataset needs {required} source clips, only {available} available"
            ),
            Error::SegmentsExceedFrames { segments, frames } => write!(
                f,
                "cannot sample {segments} segments from a {frames}-frame clip"
            ),
            Error::VideoTooShort { frames, needed } => {
                write!(f, "video has {frames} frames, one clip needs {needed}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
