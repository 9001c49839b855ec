use num_integer::Integer;
use serde::Serialize;

use super::CurveError;

/// The pair `(q, m)` selecting the curve parametrised by
/// `(x^{d+2m}, x^{d+m} y^m, x^d y^{2m}, y^{d+2m})` with `d = 2q + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CurveParams {
    q: u32,
    m: u32,
}

impl CurveParams {
    /// Requires `q, m >= 1` and `gcd(2q + 1, m) = 1`.
    pub fn new(q: u32, m: u32) -> Result<Self, CurveError> {
        if q == 0 || m == 0 {
            return Err(CurveError::InvalidParams(format!(
                "q and m must be positive (got q={q}, m={m})"
            )));
        }
        if q > 1000 || m > 1000 {
            return Err(CurveError::InvalidParams(format!(
                "q and m must be at most 1000 (got q={q}, m={m})"
            )));
        }
        let d = 2 * q + 1;
        if d.gcd(&m) != 1 {
            return Err(CurveError::InvalidParams(format!(
                "gcd(2q+1, m) = gcd({d}, {m}) = {} != 1",
                d.gcd(&m)
            )));
        }
        Ok(CurveParams { q, m })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// `d = 2q + 1`.
    pub fn d(&self) -> u32 {
        2 * self.q + 1
    }

    /// Degree of the curve, `e = d + 2m = 2(q + m) + 1`.
    pub fn e(&self) -> u32 {
        self.d() + 2 * self.m
    }

    /// `q + m`, the exponent that appears throughout.
    pub fn s(&self) -> u32 {
        self.q + self.m
    }

    /// Period of the containment pattern, `2q + 2m`.
    pub fn period(&self) -> u32 {
        2 * self.s()
    }
}

impl std::fmt::Display for CurveParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(q={}, m={})", self.q, self.m)
    }
}
