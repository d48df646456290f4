use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{what} = {value} is outside the supported range {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },

    #[error("invalid partition {parts:?}: {reason}")]
    InvalidPartition { parts: Vec<u32>, reason: &'static str },

    #[error("skew shape {outer:?}/{inner:?}: inner diagram is not contained in the outer one")]
    NotContained { outer: Vec<u32>, inner: Vec<u32> },

    #[error("two-row kernel needs i >= j, got ({i}, {j})")]
    KernelOrder { i: u32, j: u32 },

    #[error("pfaffian of an odd-sized {size}x{size} matrix")]
    OddPfaffian { size: usize },

    #[error("matrix is not square with matching dimensions ({rows}x{cols})")]
    Shape { rows: usize, cols: usize },

    #[error("matrix is not nonnegative and irreducible")]
    NotPerronFrobenius,

    #[error("power iteration did not converge in {iterations} iterations (last estimate {estimate})")]
    NoConvergence { iterations: usize, estimate: f64 },

    #[error("eigenvectors {first} and {second} are numerically proportional")]
    Degenerate { first: usize, second: usize },

    #[error("integer overflow in exact matrix arithmetic")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_range(what: &'static str, value: i64, min: i64, max: i64) -> Result<()> {
    if (min..=max).contains(&value) {
        Ok(())
    } else {
        Err(Error::OutOfRange { what, value, min, max })
    }
}
