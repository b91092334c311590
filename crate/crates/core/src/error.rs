use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Reads a file, naming it in the error.
pub(crate) fn read_file(path: &std::path::Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    BadPermutation(String),

    #[error("group closure exceeded the enumeration cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("generated group has order {actual}, file declares {declared}")]
    OrderMismatch { declared: usize, actual: usize },

    #[error("subgroups belong to different ambient groups")]
    AmbientMismatch,

    #[error("element {0} is not in the ambient group")]
    ElementNotInAmbient(String),

    #[error("subgroup is not contained in the group")]
    NotSubgroup,

    #[error("subgroup is not a Hall subgroup for pi = {0}")]
    NotHall(String),

    #[error("work budget of {budget} steps exceeded")]
    WorkBudgetExceeded { budget: u64 },

    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    #[error("unknown family {0:?}")]
    UnknownFamily(String),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("difference polynomial has non-positive leading coefficient: {0}")]
    NotEventuallyPositive(String),

    #[error("denominator {0} is not positive on the range")]
    DenominatorNotPositive(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}
