//! Multiplicative sequences of even characteristic power series.
//!
//! A normalized even series `Q(x) = 1 + a₁x² + a₂x⁴ + ⋯` determines
//! polynomials `K_j(p₁, …, p_j)` with `∏ Q(x_i) = Σ K_j(e₁(x²), …)`. They
//! are computed by writing `Σ log Q(x_i)` in power sums of the squared roots,
//! converting power sums to `p`'s by Newton's identities and exponentiating.

use num_traits::{One, Zero};

use crate::algebra::{factorial, pair, power_sums, ratio, GradedPoly, PontryaginNumbers, Rational};
use crate::error::{usage, Error, Result};
use crate::series::Series;

/// `Q(x) = 1 + Σ coeffs[k-1] · x^{2k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacteristicSeries {
    pub name: String,
    pub coeffs: Vec<Rational>,
}

impl CharacteristicSeries {
    pub fn new(name: impl Into<String>, coeffs: Vec<Rational>) -> Self {
        CharacteristicSeries {
            name: name.into(),
            coeffs,
        }
    }

    /// The identity series `Q = 1`.
    pub fn trivial(cap: u32) -> Self {
        Self::new("1", vec![Rational::zero(); cap as usize])
    }

    /// `(x/2) / sinh(x/2)` through `x^{2·cap}`, by exact series division.
    pub fn ahat(cap: u32) -> Self {
        let n = cap as usize;
        // sinh(x/2)/(x/2) = Σ y^k / (4^k (2k+1)!) with y = x²
        let denom = Series::from_coeffs(
            (0..=n)
                .map(|k| Rational::new(1.into(), factorial(2 * k as u64 + 1) << (2 * k)))
                .collect(),
            n,
        );
        let q = denom.inverse().expect("constant term is 1");
        Self::new("ahat", q.coeffs()[1..].to_vec())
    }

    /// `x / tanh(x)` through `x^{2·cap}`.
    pub fn l_genus(cap: u32) -> Self {
        let n = cap as usize;
        let cosh = Series::from_coeffs(
            (0..=n).map(|k| Rational::new(1.into(), factorial(2 * k as u64))).collect(),
            n,
        );
        let sinh_over_x = Series::from_coeffs(
            (0..=n).map(|k| Rational::new(1.into(), factorial(2 * k as u64 + 1))).collect(),
            n,
        );
        let q = cosh.checked_div(&sinh_over_x).expect("constant term is 1");
        Self::new("L", q.coeffs()[1..].to_vec())
    }

    /// The Hopkins–Singer integral Wu-class series
    /// `g(x) = 1 + ½x² + (11/8)x⁴ + (37/16)x⁶ + (691/128)x⁸ + (2847/256)x¹⁰ + ⋯`,
    /// of which only these five coefficients are known here.
    pub fn wu_spin() -> Self {
        Self::new(
            "wu-spin",
            vec![
                ratio(1, 2),
                ratio(11, 8),
                ratio(37, 16),
                ratio(691, 128),
                ratio(2847, 256),
            ],
        )
    }

    fn as_series(&self, cap: u32) -> Series {
        let mut c = vec![Rational::one()];
        c.extend(self.coeffs.iter().cloned());
        Series::from_coeffs(c, cap as usize)
    }
}

/// `K_0 = 1, K_1, …, K_cap`, with `K_j` homogeneous of weight `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicativeSequence {
    cap: u32,
    polys: Vec<GradedPoly>,
}

impl MultiplicativeSequence {
    pub fn cap(&self) -> u32 {
        self.cap
    }

    /// `K_j`.
    pub fn part(&self, j: u32) -> &GradedPoly {
        &self.polys[j as usize]
    }

    pub fn parts(&self) -> &[GradedPoly] {
        &self.polys
    }

    /// `Σ_j K_j`.
    pub fn total(&self) -> GradedPoly {
        self.polys
            .iter()
            .fold(GradedPoly::zero(self.cap), |acc, k| &acc + k)
    }

    /// `⟨K_top, [M]⟩`.
    pub fn genus(&self, nums: &PontryaginNumbers) -> Result<Rational> {
        pair(&self.total(), nums)
    }
}

pub fn multiplicative_sequence(q: &CharacteristicSeries, cap: u32) -> Result<MultiplicativeSequence> {
    if cap == 0 {
        return usage("multiplicative_sequence: cap must be at least 1");
    }
    if q.coeffs.len() < cap as usize {
        return Err(Error::InsufficientCoefficients {
            what: q.name.clone(),
            needed: cap as usize,
            have: q.coeffs.len(),
        });
    }
    let log = q.as_series(cap).log()?;
    let ps = power_sums(cap);
    let mut exponent = GradedPoly::zero(cap);
    for (k, p) in ps.iter().enumerate().skip(1) {
        exponent = &exponent + &p.scale(&log.coeff(k));
    }
    let total = exponent.exp()?;
    let polys = (0..=cap).map(|j| total.weight_part(j)).collect();
    Ok(MultiplicativeSequence { cap, polys })
}

/// Â-class, the multiplicative sequence of `(x/2)/sinh(x/2)`.
pub fn ahat_class(cap: u32) -> Result<MultiplicativeSequence> {
    multiplicative_sequence(&CharacteristicSeries::ahat(cap), cap)
}

/// Hirzebruch L-class, the multiplicative sequence of `x/tanh(x)`.
pub fn l_class(cap: u32) -> Result<MultiplicativeSequence> {
    multiplicative_sequence(&CharacteristicSeries::l_genus(cap), cap)
}

/// Multiplicative sequence of the Hopkins–Singer series `g`. Weights above
/// five need coefficients of `g` that are not available.
pub fn wu_spin_class(cap: u32) -> Result<MultiplicativeSequence> {
    multiplicative_sequence(&CharacteristicSeries::wu_spin(), cap).map_err(|e| match e {
        Error::InsufficientCoefficients { needed, have, .. } => Error::InsufficientCoefficients {
            what: "g".into(),
            needed,
            have,
        },
        other => other,
    })
}

/// `⟨L, [M]⟩`.
pub fn signature(nums: &PontryaginNumbers) -> Result<Rational> {
    l_class(nums.dim() / 4)?.genus(nums)
}

/// `⟨Â, [M]⟩`.
pub fn ahat_genus(nums: &PontryaginNumbers) -> Result<Rational> {
    ahat_class(nums.dim() / 4)?.genus(nums)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, Partition};

    fn p(i: u32, cap: u32) -> GradedPoly {
        GradedPoly::generator(i, cap)
    }

    #[test]
    fn trivial_series_gives_unit() {
        let seq = multiplicative_sequence(&CharacteristicSeries::trivial(4), 4).unwrap();
        assert_eq!(seq.part(0), &GradedPoly::one(4));
        for j in 1..=4 {
            assert!(seq.part(j).is_zero());
        }
    }

    #[test]
    fn low_degree_classes() {
        let a = ahat_class(2).unwrap();
        assert_eq!(a.part(1), &p(1, 2).scale(&ratio(-1, 24)));
        // Â_2 = (-4 p2 + 7 p1²)/5760
        let expected = &p(2, 2).scale(&ratio(-4, 5760)) + &(&p(1, 2) * &p(1, 2)).scale(&ratio(7, 5760));
        assert_eq!(a.part(2), &expected);

        let l = l_class(2).unwrap();
        assert_eq!(l.part(1), &p(1, 2).scale(&ratio(1, 3)));
        let expected = &p(2, 2).scale(&ratio(7, 45)) - &(&p(1, 2) * &p(1, 2)).scale(&ratio(1, 45));
        assert_eq!(l.part(2), &expected);
    }

    #[test]
    fn homogeneity() {
        for seq in [ahat_class(6).unwrap(), l_class(6).unwrap(), wu_spin_class(5).unwrap()] {
            for j in 0..=seq.cap() {
                assert!(seq.part(j).is_homogeneous(j));
            }
        }
    }

    #[test]
    fn wu_class_weights() {
        let g = wu_spin_class(3).unwrap();
        assert_eq!(g.part(0), &GradedPoly::one(3));
        assert_eq!(g.part(1), &p(1, 3).scale(&ratio(1, 2)));
        let on_string_locus: GradedPoly = GradedPoly::from_terms(
            3,
            g.part(3)
                .terms()
                .filter(|(l, _)| !l.contains_part(1))
                .map(|(l, c)| (l.clone(), c.clone())),
        );
        assert_eq!(on_string_locus, p(3, 3).scale(&rat(5)));
        assert!(matches!(
            wu_spin_class(6),
            Err(Error::InsufficientCoefficients { .. })
        ));
    }

    #[test]
    fn signature_of_kummer_like_numbers() {
        // K3: p1 = -48, signature -16
        let nums = PontryaginNumbers::from_entries(4, [(Partition::single(1), rat(-48))]).unwrap();
        assert_eq!(signature(&nums).unwrap(), rat(-16));
        assert_eq!(ahat_genus(&nums).unwrap(), rat(2));
    }
}
