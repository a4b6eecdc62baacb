//! Integer power series, for Poincaré series given as rational functions.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("denominator factor degrees must be at least 1")]
    ZeroDegreeFactor,
    #[error("series known to degree {have}, comparison needs degree {need}")]
    InsufficientPrefix { have: usize, need: usize },
}

/// A truncated series `Σ c_d t^d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct PowerSeries {
    coeffs: Vec<i64>,
}

impl PowerSeries {
    pub fn new(coeffs: Vec<i64>) -> Self {
        PowerSeries { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Highest degree stored, or `None` if empty.
    pub fn max_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, d: usize) -> Option<i64> {
        self.coeffs.get(d).copied()
    }
}

impl From<Vec<i64>> for PowerSeries {
    fn from(coeffs: Vec<i64>) -> Self {
        PowerSeries { coeffs }
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(d, c)| match d {
                0 => format!("{c}"),
                1 => format!("{c}*t"),
                _ => format!("{c}*t^{d}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// `Σ_e t^e / Π_i (1 - t^{d_i})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalSeriesSpec {
    pub numerator: Vec<u32>,
    pub denominator: Vec<u32>,
}

impl RationalSeriesSpec {
    pub fn new(numerator: &[u32], denominator: &[u32]) -> Result<Self, SeriesError> {
        if denominator.contains(&0) {
            return Err(SeriesError::ZeroDegreeFactor);
        }
        Ok(RationalSeriesSpec { numerator: numerator.to_vec(), denominator: denominator.to_vec() })
    }

    /// The Poincaré series of the invariant ring.
    pub fn poincare() -> Self {
        Self::new(&crate::tables::POINCARE_NUMERATOR, &crate::tables::POINCARE_DENOMINATOR).expect("valid")
    }

    /// Coefficients through degree `n`, by convolving the numerator with one
    /// geometric series per denominator factor.
    pub fn expand(&self, n: usize) -> PowerSeries {
        let mut c = vec![0i64; n + 1];
        for &e in &self.numerator {
            if (e as usize) <= n {
                c[e as usize] += 1;
            }
        }
        for &d in &self.denominator {
            let d = d as usize;
            for i in d..=n {
                c[i] += c[i - d];
            }
        }
        PowerSeries::new(c)
    }
}

pub fn expand(spec: &RationalSeriesSpec, n: usize) -> PowerSeries {
    spec.expand(n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result")]
pub enum Comparison {
    Equal,
    Mismatch { degree: usize, left: i64, right: i64 },
}

/// Compares coefficients `0..=n`.
pub fn compare(a: &PowerSeries, b: &PowerSeries, n: usize) -> Result<Comparison, SeriesError> {
    for s in [a, b] {
        if s.coeffs.len() <= n {
            return Err(SeriesError::InsufficientPrefix { have: s.coeffs.len().saturating_sub(1), need: n });
        }
    }
    Ok(a.coeffs[..=n]
        .iter()
        .zip(&b.coeffs[..=n])
        .position(|(x, y)| x != y)
        .map_or(Comparison::Equal, |d| Comparison::Mismatch { degree: d, left: a.coeffs[d], right: b.coeffs[d] }))
}

/// The Poincaré series written as
/// `Σ_i t^{12i} (1 + t^3 + 2t^4 + t^5 + t^9 + t^10 + t^11 + Σ_j t^{4j} (t^7 + 2t^8 + t^9 + t^13 + 2t^14 + t^15))`,
/// expanded term by term.
pub fn double_sum_expand(n: usize) -> PowerSeries {
    const OUTER: [(usize, i64); 7] = [(0, 1), (3, 1), (4, 2), (5, 1), (9, 1), (10, 1), (11, 1)];
    const INNER: [(usize, i64); 6] = [(7, 1), (8, 2), (9, 1), (13, 1), (14, 2), (15, 1)];
    let mut c = vec![0i64; n + 1];
    for base in (0..=n).step_by(12) {
        for (e, k) in OUTER {
            if base + e <= n {
                c[base + e] += k;
            }
        }
        for shift in (base..=n).step_by(4) {
            for (e, k) in INNER {
                if shift + e <= n {
                    c[shift + e] += k;
                }
            }
        }
    }
    PowerSeries::new(c)
}
