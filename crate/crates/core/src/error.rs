use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table shape mismatch: expected {expected} entries, found {found}")]
    BadShape { expected: usize, found: usize },
    #[error("semigroup order must be positive")]
    EmptyTable,
    #[error("entry ({row},{col}) = {value} is outside [0,{order})")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("order {order} exceeds the configured maximum {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("product order {left}*{right} exceeds the configured maximum {max}")]
    Overflow {
        left: usize,
        right: usize,
        max: usize,
    },
    #[error("element {element} is outside [0,{order})")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("subset is not an H-class")]
    NotAnHClass,
    #[error("subsemigroup is not regular: element {0} has no inverse inside it")]
    NotRegularSubsemigroup(usize),
    #[error("element {0} is not idempotent")]
    NotIdempotent(usize),
    #[error("subset is not a two-sided ideal")]
    NotAnIdeal,
    #[error("element {0} is not in the subset")]
    ElementNotInSubset(usize),
    #[error("semigroup is not a group")]
    NotAGroup,
    #[error("sandwich entry ({row},{col}) = {value} is not a group element")]
    BadSandwichEntry {
        row: usize,
        col: usize,
        value: usize,
    },
    #[error("semigroup is not completely simple")]
    NotCompletelySimple,
    #[error("subset is not closed under the product: {a}*{b} = {product}")]
    NotASubsemigroup { a: usize, b: usize, product: usize },
    #[error("search cap exceeded: order {order} > cap {cap}")]
    SearchCapExceeded { order: usize, cap: usize },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("census order {order} exceeds the configured limit {limit}")]
    CensusLimitExceeded { order: usize, limit: usize },
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("i/o error: {0}")]
    Io(String),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
