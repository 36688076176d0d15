use serde::Serialize;

use crate::error::{Error, Result};

/// Environment variable overriding the tuple-space cap.
pub const MAX_TUPLES_ENV: &str = "ARITYLAB_MAX_TUPLES";

pub const DEFAULT_MAX_SIZE: usize = 12;
pub const DEFAULT_MAX_TUPLES: usize = 20_000_000;

/// Size caps shared by the automorphism search and the tuple-space machinery.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Limits {
    /// Largest universe the automorphism search and generators accept.
    pub max_size: usize,
    /// Largest tuple space `s^m` that may be materialized.
    pub max_tuples: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_size: DEFAULT_MAX_SIZE,
            max_tuples: DEFAULT_MAX_TUPLES,
        }
    }
}

impl Limits {
    /// Defaults, with the tuple cap taken from `ARITYLAB_MAX_TUPLES` when set.
    pub fn from_env() -> Result<Self> {
        let mut limits = Limits::default();
        if let Ok(raw) = std::env::var(MAX_TUPLES_ENV) {
            let cap: usize = raw
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("{MAX_TUPLES_ENV}={raw:?} is not a positive integer")))?;
            if cap == 0 {
                return Err(Error::InvalidParameter(format!("{MAX_TUPLES_ENV} must be positive")));
            }
            limits.max_tuples = cap;
        }
        Ok(limits)
    }

    pub fn check_size(&self, size: usize) -> Result<()> {
        if size > self.max_size {
            return Err(Error::SizeCap {
                size,
                cap: self.max_size,
            });
        }
        Ok(())
    }

    /// Returns `s^m` when it fits under the tuple cap.
    pub fn tuple_space(&self, size: usize, m: usize) -> Result<usize> {
        match checked_space(size, m) {
            Some(total) if total <= self.max_tuples => Ok(total),
            other => Err(Error::TupleBudget {
                size,
                m,
                required: other.map_or_else(|| "overflow".to_string(), |t| t.to_string()),
                cap: self.max_tuples,
            }),
        }
    }
}

pub(crate) fn checked_space(size: usize, m: usize) -> Option<usize> {
    u32::try_from(m).ok().and_then(|m| size.checked_pow(m))
}
