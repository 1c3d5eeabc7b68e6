use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The Baumslag-Solitar group `BS(N,M) = <a, b | a^N b = b a^M>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    n: u64,
    m: u64,
}

impl GroupSpec {
    pub fn new(n: u64, m: u64) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidGroup { n, m });
        }
        Ok(Self { n, m })
    }

    /// `BS(N,N)`.
    pub fn symmetric(n: u64) -> Result<Self> {
        Self::new(n, n)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn is_symmetric(&self) -> bool {
        self.n == self.m
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BS({},{})", self.n, self.m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_zero() {
        assert!(GroupSpec::new(0, 2).is_err());
        assert!(GroupSpec::new(2, 0).is_err());
        assert_eq!(GroupSpec::new(2, 3).unwrap().to_string(), "BS(2,3)");
    }
}
