//! Exact rational arithmetic and the graded polynomial rings that hold every
//! characteristic class in the crate.

mod graded;
mod numbers;
mod partition;
mod roots;
mod symmetric;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use graded::{pair, poly_mul, power_sums, GradedPoly};
pub use numbers::PontryaginNumbers;
pub use partition::Partition;
pub use roots::RootPoly;
pub use symmetric::{expand_in_roots, symmetric_reduce};

use crate::error::{usage, Error, Result};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

/// Parses `"a"`, `"-a"` or `"a/b"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parsed = match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
            let d: BigInt = d.trim().parse().map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Rational::new(n, d)
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
            Rational::from_integer(n)
        }
    };
    Ok(parsed)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Bernoulli number `B_n` for even `n >= 2`, with `B_2 = 1/6`.
pub fn bernoulli(n: u32) -> Result<Rational> {
    if n < 2 || n % 2 == 1 {
        return usage(format!("bernoulli({n}): index must be even and at least 2"));
    }
    Ok(bernoulli_table(n as usize).swap_remove(n as usize))
}

/// `B_0..=B_m` from `sum_{k=0}^{m} C(m+1, k) B_k = 0`.
pub(crate) fn bernoulli_table(m: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(m + 1);
    b.push(Rational::one());
    for n in 1..=m {
        let mut acc = Rational::zero();
        for (k, bk) in b.iter().enumerate() {
            acc += int(&binomial(n as u64 + 1, k as u64)) * bk;
        }
        b.push(-acc / rat(n as i64 + 1));
    }
    b
}

/// p-adic valuation of a nonzero integer; `None` for zero.
pub fn valuation(n: &BigInt, p: u64) -> Option<u32> {
    if n.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return Some(v);
        }
        n = q;
        v += 1;
    }
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(2).unwrap(), ratio(1, 6));
        assert_eq!(bernoulli(4).unwrap(), ratio(-1, 30));
        assert_eq!(bernoulli(12).unwrap(), ratio(-691, 2730));
    }

    #[test]
    fn bernoulli_rejects_bad_index() {
        assert!(matches!(bernoulli(3), Err(Error::Usage(_))));
        assert!(matches!(bernoulli(0), Err(Error::Usage(_))));
    }

    #[test]
    fn bernoulli_recurrence_holds() {
        let b = bernoulli_table(21);
        for m in 0..=20u64 {
            let s: Rational = (0..=m)
                .map(|k| int(&binomial(m + 1, k)) * &b[k as usize])
                .sum();
            if m == 0 {
                // C(1,0) B_0 = 1; the recurrence starts at m = 1
                assert_eq!(s, rat(1));
            } else {
                assert!(s.is_zero(), "m = {m}");
            }
        }
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("-7/4").unwrap(), ratio(-7, 4));
        assert_eq!(parse_rational("1958").unwrap(), rat(1958));
        assert_eq!(parse_rational("6/4").unwrap(), ratio(3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn valuations() {
        assert_eq!(valuation(&BigInt::from(374784), 2), Some(11));
        assert_eq!(valuation(&BigInt::from(-96), 3), Some(1));
        assert_eq!(valuation(&BigInt::zero(), 5), None);
    }
}
