use thiserror::Error;

/// Errors raised while building root systems, groups and algebra elements.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a generalized Cartan matrix: {0}")]
    NotGeneralizedCartan(String),

    #[error("Cartan matrix is not of finite type (root closure exceeded {bound} positive roots)")]
    NotFiniteType { bound: usize },

    #[error("Weyl group order exceeds the configured cap of {cap}")]
    OrderCapExceeded { cap: usize },

    #[error("elements belong to different Weyl groups")]
    MixedGroups,

    #[error("simple index {index} out of range for rank {rank}")]
    InvalidSubset { index: usize, rank: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
