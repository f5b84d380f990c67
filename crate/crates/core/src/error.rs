use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Non-finite input or an equation with every coefficient zero.
    #[error("domain error: {0}")]
    Domain(&'static str),

    #[error("degenerate input: leading coefficient a is zero")]
    DegenerateInput,

    /// `a = b = 0`: the equation is a nonzero constant.
    #[error("no root: a and b are both zero")]
    NoRoot,

    #[error("method not applicable: {0}")]
    NotApplicable(&'static str),

    #[error("stagnation: interpolation abscissae coincide")]
    Stagnation,

    #[error("breakdown: both denominators vanish")]
    Breakdown,

    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
}
