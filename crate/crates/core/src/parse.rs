//! Command-line syntax for dimension vectors (`1,0,2`) and flag types (`0,1;1,1`).

use crate::error::{Error, Result};
use crate::quiver::{DimVector, FlagType};

pub fn parse_dim_vector(text: &str) -> Result<DimVector> {
    let entries = text
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse { line: 1, msg: format!("`{}` is not a nonnegative integer", s.trim()) })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DimVector(entries))
}

pub fn parse_flag_type(text: &str) -> Result<FlagType> {
    let steps = text.split(';').map(parse_dim_vector).collect::<Result<Vec<_>>>()?;
    FlagType::new(steps)
}
