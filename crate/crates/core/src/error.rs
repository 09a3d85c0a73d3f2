use thiserror::Error;

use crate::partition::Partition;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts are not weakly decreasing: {0:?}")]
    NotWeaklyDecreasing(Vec<u32>),

    #[error("cannot parse partition {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("partitions {left} and {right} have different sizes")]
    SizeMismatch { left: Partition, right: Partition },

    #[error("{top} does not dominate {bottom}")]
    NotComparable { top: Partition, bottom: Partition },

    #[error("{lambda} does not cover {mu}")]
    NotACover { lambda: Partition, mu: Partition },

    #[error("largest part of {partition} exceeds rank {rank}")]
    RankExceeded { partition: Partition, rank: u32 },

    #[error("rank {rank} is smaller than degree {n}; the weight bound needs r >= n")]
    RankTooSmall { n: u32, rank: u32 },

    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(u32, u32),

    #[error("variable c_{index} is out of range for rank {rank}")]
    VariableOutOfRange { index: u32, rank: u32 },

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("integer overflow in exact arithmetic")]
    ArithmeticOverflow,

    #[error("chain limit {limit} exceeded ({found} chains found so far)")]
    LimitExceeded { limit: usize, found: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
