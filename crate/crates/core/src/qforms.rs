//! q-expansions of level-one modular forms and of the Witten genus.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{int, rat, GradedPoly, PontryaginNumbers, Rational};
use crate::error::{usage, Result};
use crate::genus::ahat_genus;
use crate::series::Series;
use crate::twist::{ch_tangent, reduced_symmetric_series, twisted_ahat, ChernCharacter};

/// A truncated power series in `q`.
pub type QSeries = Series;

fn divisor_power_sum(n: u64, k: u32) -> BigInt {
    (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .map(|d| num_traits::pow(BigInt::from(d), k as usize))
        .sum()
}

fn eisenstein(n: usize, k: u32, c: i64) -> QSeries {
    let mut coeffs = vec![rat(1)];
    coeffs.extend((1..=n as u64).map(|m| int(&(divisor_power_sum(m, k) * c))));
    Series::from_coeffs(coeffs, n)
}

/// `E₄ = 1 + 240 Σ σ₃(n) qⁿ`.
pub fn eisenstein_e4(n: usize) -> QSeries {
    eisenstein(n, 3, 240)
}

/// `E₆ = 1 - 504 Σ σ₅(n) qⁿ`.
pub fn eisenstein_e6(n: usize) -> QSeries {
    eisenstein(n, 5, -504)
}

/// `Δ = q ∏_{m≥1} (1 - q^m)²⁴`.
pub fn delta(n: usize) -> QSeries {
    let mut prod = Series::one(n);
    for m in 1..=n {
        let factor = &Series::one(n) - &Series::monomial(m, rat(1), n);
        prod = &prod * &factor.pow(24);
    }
    &Series::monomial(1, rat(1), n) * &prod
}

/// `Δ̄ = E₄³ - 744 Δ`.
pub fn delta_bar(n: usize) -> QSeries {
    &eisenstein_e4(n).pow(3) - &delta(n).scale(&rat(744))
}

fn check_dim_24(nums: &PontryaginNumbers) -> Result<()> {
    if nums.dim() != 24 {
        return usage(format!(
            "Witten genus expansion is only implemented in dimension 24, got {}",
            nums.dim()
        ));
    }
    Ok(())
}

/// `Â(M, T)` for the complexified tangent bundle.
pub fn ahat_tangent(nums: &PontryaginNumbers) -> Result<Rational> {
    let t = ch_tangent(nums.dim(), nums.dim() / 4)?;
    twisted_ahat(nums, &t)
}

/// `W(M) = Â(M) Δ̄ + Â(M, T) Δ` through `qⁿ`.
pub fn witten_modular(nums: &PontryaginNumbers, n: usize) -> Result<QSeries> {
    check_dim_24(nums)?;
    let a = ahat_genus(nums)?;
    let at = ahat_tangent(nums)?;
    Ok(&delta_bar(n).scale(&a) + &delta(n).scale(&at))
}

/// Characters of the Witten bundle `⊗_{m≥1} S_{q^m}(T̃)` through `qⁿ`,
/// as the coefficient list of a q-series.
pub fn witten_bundle(dim: u32, n: usize) -> Result<Vec<ChernCharacter>> {
    let cap = dim / 4;
    let t = ch_tangent(dim, cap)?;
    let s = reduced_symmetric_series(n as u32, &t)?;
    let mut acc: Vec<GradedPoly> = vec![GradedPoly::zero(cap); n + 1];
    acc[0] = GradedPoly::one(cap);
    for m in 1..=n {
        // multiply by Σ_k q^{mk} s_k
        let mut next = vec![GradedPoly::zero(cap); n + 1];
        for (i, a) in acc.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, sk) in s.iter().enumerate() {
                let e = i + m * k;
                if e > n {
                    break;
                }
                next[e] = &next[e] + &(a * sk.total());
            }
        }
        acc = next;
    }
    Ok(acc.into_iter().map(ChernCharacter::from_total).collect())
}

/// `⟨Â(M) ch(Θ(T_ℂM)), [M]⟩` through `qⁿ`, from the Witten bundle directly.
pub fn witten_direct(nums: &PontryaginNumbers, n: usize) -> Result<QSeries> {
    check_dim_24(nums)?;
    let coeffs = witten_bundle(nums.dim(), n)?
        .iter()
        .map(|ch| twisted_ahat(nums, ch))
        .collect::<Result<Vec<_>>>()?;
    Ok(Series::from_coeffs(coeffs, n))
}

/// Coefficients as rational strings, for JSON output.
pub fn to_strings(s: &QSeries) -> Vec<String> {
    s.coeffs().iter().map(ToString::to_string).collect()
}

/// True when every coefficient is zero.
pub fn is_zero(s: &QSeries) -> bool {
    s.coeffs().iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eisenstein_coefficients() {
        assert_eq!(eisenstein_e4(3).coeff(2), rat(2160));
        assert_eq!(eisenstein_e6(3).coeff(3), rat(-122976));
        assert_eq!(eisenstein_e4(0).coeff(0), rat(1));
        assert_eq!(eisenstein_e6(0).coeff(0), rat(1));
    }

    #[test]
    fn delta_coefficients() {
        let d = delta(6);
        assert_eq!(d.coeff(0), rat(0));
        assert_eq!(d.coeff(1), rat(1));
        assert_eq!(d.coeff(2), rat(-24));
        assert_eq!(d.coeff(3), rat(252));
        assert_eq!(d.coeff(6), rat(-6048));
    }

    #[test]
    fn delta_bar_coefficients() {
        let db = delta_bar(3);
        assert_eq!(db.coeff(0), rat(1));
        assert_eq!(db.coeff(1), rat(-24));
        assert_eq!(&db + &delta(3).scale(&rat(744)), eisenstein_e4(3).pow(3));
    }

    #[test]
    fn witten_needs_dimension_24() {
        let nums = PontryaginNumbers::new(16).unwrap();
        assert!(witten_modular(&nums, 2).is_err());
        assert!(witten_direct(&nums, 2).is_err());
    }
}
