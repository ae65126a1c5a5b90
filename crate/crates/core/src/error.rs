use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("non-invertible series")]
    NonInvertible,
    #[error("exp of non-positive-valuation series")]
    ExpDomain,
    #[error("log requires a series of the form 1 + O(q)")]
    LogDomain,
    #[error("substitution power must be at least 1")]
    ZeroPower,
    #[error("coefficient beyond truncation: q^{exponent} requested, series known to q^{order}")]
    BeyondTruncation { exponent: i64, order: i64 },
    #[error("unsupported Eisenstein weight {0}")]
    UnsupportedWeight(i64),
    #[error("coefficient q^{exponent} is not an integer after exact division")]
    Integrality { exponent: i64 },
    #[error("precision too low for T_{k}: need input order {needed}, have {available}")]
    HeckePrecision { k: u64, needed: i64, available: i64 },
    #[error("precision too low: {0}")]
    Precision(String),
    #[error("series not normalized: {0}")]
    NotNormalized(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("group too large: {order} elements exceeds limit {limit}")]
    GroupTooLarge { order: usize, limit: usize },
    #[error("invalid group spec: {0}")]
    GroupSpec(String),
    #[error("element is not in the group")]
    NotInGroup,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime bound {bound} exceeds limit {limit}")]
    PrimeBound { bound: u64, limit: u64 },
    #[error("Hasse polynomial requires p >= 5, got {0}")]
    SmallPrime(u64),
    #[error("tree equation integrality violated at z^{0}")]
    TreeIntegrality(usize),
    #[error("brute-force tree enumeration is limited to n <= 10, got {0}")]
    TreeOracleBound(usize),
    #[error("invalid series JSON: {0}")]
    Json(String),
}
