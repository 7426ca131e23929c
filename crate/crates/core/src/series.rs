//! Truncated univariate power series `Σ_{n=0}^{N} c_n tⁿ` over ℚ.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::algebra::{rat, Rational};
use crate::error::{usage, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    /// Zero series with coefficients through `t^trunc`.
    pub fn zero(trunc: usize) -> Self {
        Series {
            coeffs: vec![Rational::zero(); trunc + 1],
        }
    }

    pub fn one(trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        s.coeffs[0] = Rational::one();
        s
    }

    /// Pads or truncates `coeffs` to length `trunc + 1`.
    pub fn from_coeffs(mut coeffs: Vec<Rational>, trunc: usize) -> Self {
        coeffs.resize(trunc + 1, Rational::zero());
        Series { coeffs }
    }

    /// `tᵏ` (zero if `k > trunc`).
    pub fn monomial(k: usize, c: Rational, trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        if k <= trunc {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn truncate(&self, trunc: usize) -> Series {
        Series::from_coeffs(self.coeffs.clone(), trunc)
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|v| v * c).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Series {
        let mut acc = Series::one(self.trunc());
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Series> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return usage("series inverse: constant term is zero");
        }
        let n = self.trunc();
        let inv0 = c0.recip();
        let mut out = vec![Rational::zero(); n + 1];
        out[0] = inv0.clone();
        for k in 1..=n {
            let s: Rational = (1..=k).map(|i| &self.coeffs[i] * &out[k - i]).sum();
            out[k] = -s * &inv0;
        }
        Ok(Series { coeffs: out })
    }

    pub fn checked_div(&self, other: &Series) -> Result<Series> {
        Ok(self * &other.inverse()?)
    }

    /// `log` of a series with constant term 1.
    pub fn log(&self) -> Result<Series> {
        if !self.coeffs[0].is_one() {
            return usage("series log: constant term must be 1");
        }
        // (log f)' = f'/f
        let n = self.trunc();
        let quotient = &self.derivative() * &self.inverse()?;
        let mut out = vec![Rational::zero(); n + 1];
        for (k, c) in out.iter_mut().enumerate().skip(1) {
            *c = quotient.coeff(k - 1) / rat(k as i64);
        }
        Ok(Series { coeffs: out })
    }

    /// `exp` of a series with constant term 0.
    pub fn exp(&self) -> Result<Series> {
        if !self.coeffs[0].is_zero() {
            return usage("series exp: constant term must be 0");
        }
        // g = exp f satisfies n g_n = Σ_{k=1}^{n} k f_k g_{n-k}
        let n = self.trunc();
        let mut g = vec![Rational::zero(); n + 1];
        g[0] = Rational::one();
        for m in 1..=n {
            let s: Rational = (1..=m)
                .map(|k| rat(k as i64) * &self.coeffs[k] * &g[m - k])
                .sum();
            g[m] = s / rat(m as i64);
        }
        Ok(Series { coeffs: g })
    }

    /// Formal derivative, keeping the same truncation length.
    pub fn derivative(&self) -> Series {
        let n = self.trunc();
        let mut out = vec![Rational::zero(); n + 1];
        for k in 1..=n {
            out[k - 1] = &self.coeffs[k] * rat(k as i64);
        }
        Series { coeffs: out }
    }
}

impl Add for &Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        let n = self.trunc().min(rhs.trunc());
        Series {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl Sub for &Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        self + &(-rhs)
    }
}

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Series {
    type Output = Series;

    fn mul(self, rhs: &Series) -> Series {
        let n = self.trunc().min(rhs.trunc());
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] += a * b;
            }
        }
        Series { coeffs: out }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    #[test]
    fn inverse_of_geometric() {
        // 1/(1 - t) = Σ tⁿ
        let s = Series::from_coeffs(vec![rat(1), rat(-1)], 5);
        let inv = s.inverse().unwrap();
        assert!(inv.coeffs().iter().all(|c| *c == rat(1)));
        assert!(Series::zero(3).inverse().is_err());
    }

    #[test]
    fn exp_log_roundtrip() {
        let f = Series::from_coeffs(vec![rat(0), ratio(1, 2), rat(-3), ratio(2, 7)], 6);
        let back = f.exp().unwrap().log().unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn exp_of_t() {
        let e = Series::monomial(1, rat(1), 4).exp().unwrap();
        assert_eq!(e.coeff(4), ratio(1, 24));
    }
}
