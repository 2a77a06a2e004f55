use thiserror::Error;

/// Errors raised by the analysis entry points.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty text: analyses require at least one symbol")]
    EmptyText,

    #[error("{name} = {value} is out of range [{min}, {max}]")]
    OutOfRange {
        name: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("invalid interval [{start}, {end}] for a text of length {len}")]
    InvalidInterval {
        start: usize,
        end: usize,
        len: usize,
    },
}

impl Error {
    pub(crate) fn check_range(
        name: &'static str,
        value: usize,
        min: usize,
        max: usize,
    ) -> Result<()> {
        if value < min || value > max {
            Err(Error::OutOfRange {
                name,
                value,
                min,
                max,
            })
        } else {
            Ok(())
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
