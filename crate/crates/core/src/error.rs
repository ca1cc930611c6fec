use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid domain: {0}")]
    InvalidDomain(String),

    #[error("point {point:?} is not in the domain d={d}, L={side}")]
    DomainMismatch {
        point: Vec<u32>,
        d: usize,
        side: u32,
    },

    #[error("operation requires dimension {expected}, got {found}")]
    Dimension { expected: usize, found: usize },

    #[error("resource guard tripped: {required} items requested, limit is {limit}")]
    ResourceGuard { required: u128, limit: u128 },

    #[error("series constant term is not a unit of the coefficient ring")]
    NonUnitConstant,

    #[error("series has nonzero coefficient below t^{0}; cannot divide")]
    NonzeroLowOrder(usize),

    #[error("series order {order} is too small for degree bounds ({deg_num}, {deg_den})")]
    InsufficientOrder {
        order: usize,
        deg_num: usize,
        deg_den: usize,
    },

    #[error("no rational function with degrees <= ({deg_num}, {deg_den}) matches the series")]
    NoRationalMatch { deg_num: usize, deg_den: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("evaluation point has a zero coordinate")]
    ZeroCoordinate,

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
