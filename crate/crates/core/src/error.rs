use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A computation was asked for at a size beyond the named limit.
    #[error("{what}: n = {n} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        n: u32,
        cap: u32,
    },

    #[error("generator index {index} out of range for n = {n}")]
    IndexOutOfRange { index: u32, n: u32 },

    #[error("mask {mask:#b} has generators outside 0..{n}")]
    MaskOutOfRange { mask: u64, n: u32 },

    /// An internal identity failed to hold; always a bug, never bad input.
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}
