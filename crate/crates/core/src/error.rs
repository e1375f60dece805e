use alloc::string::String;

/// A line of a square, used to locate validation failures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    Row(usize),
    Col(usize),
}

impl core::fmt::Display for Line {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Line::Row(r) => write!(f, "row {r}"),
            Line::Col(c) => write!(f, "column {c}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("grid is not square: expected {expected} entries in {line}, found {found}")]
    NotSquare {
        line: Line,
        expected: usize,
        found: usize,
    },
    #[error("symbol {symbol} out of range for order {order}")]
    SymbolOutOfRange { symbol: u32, order: usize },
    #[error("not a Latin square: symbol {symbol} repeated in {line}")]
    NotLatin { line: Line, symbol: u32 },
    #[error("not a Latin hypercube: symbol {symbol} repeated along axis {axis}")]
    NotLatinHypercube { axis: usize, symbol: u32 },
    #[error("index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("not a row cycle of the square")]
    InvalidCycle,
    #[error("trade not applicable: {0}")]
    NotApplicable(&'static str),
    #[error("shift {shift} not in 1..{order}")]
    BadShift { shift: usize, order: usize },
    #[error("replacement symbol equals the existing symbol")]
    SameSymbol,
    #[error("cannot lower dimension from {from} to {to}")]
    BadDim { from: usize, to: usize },
    #[error("order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("order {0} must be even")]
    OddOrder(usize),
    #[error("order {0} not supported by this construction")]
    BadOrder(usize),
    #[error("construction failed: {0}")]
    ConstructionFailed(&'static str),
    #[error("certification failed: {0}")]
    CertificationFailed(String),
    #[error("search budget exhausted after {0} iterations")]
    BudgetExhausted(u64),
    #[error("witness propagation failed: {0}")]
    WitnessPropagationFailed(String),
    #[error("no N∞ Latin square of order {0} exists")]
    UnsupportedOrder(usize),
    #[error("order {0} is not of the form 2^x 3^y with x >= 1 and at least 12")]
    Unsupported(usize),
    #[error("no N∞ Latin hypercube of order {order} and dimension {dim} exists")]
    NoSuchObject { order: usize, dim: usize },
}

pub type Result<T> = core::result::Result<T, Error>;
