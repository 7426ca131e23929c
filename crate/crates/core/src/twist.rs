//! Chern characters of bundles built from the complexified tangent bundle.
//!
//! All characters produced here are self-dual, so only components of degree
//! `4j` occur; the character is stored as a single [`GradedPoly`] whose
//! weight-`j` part is the degree-`4j` component and whose constant term is
//! the (virtual) rank.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::algebra::{factorial, pair, power_sums, rat, GradedPoly, PontryaginNumbers, Rational};
use crate::error::{usage, Error, Result};
use crate::genus::{ahat_class, l_class};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernCharacter {
    total: GradedPoly,
}

impl ChernCharacter {
    /// Wraps a total character. The constant term is the rank.
    pub fn from_total(total: GradedPoly) -> Self {
        ChernCharacter { total }
    }

    /// Trivial bundle of the given rank.
    pub fn trivial(rank: Rational, cap: u32) -> Self {
        Self::from_total(GradedPoly::constant(rank, cap))
    }

    pub fn cap(&self) -> u32 {
        self.total.cap()
    }

    pub fn rank(&self) -> Rational {
        self.total.constant_term()
    }

    /// Degree-`4j` component (`j >= 1`), or the rank for `j = 0`.
    pub fn component(&self, j: u32) -> GradedPoly {
        self.total.weight_part(j)
    }

    pub fn total(&self) -> &GradedPoly {
        &self.total
    }

    pub fn checked_add(&self, other: &ChernCharacter) -> Result<ChernCharacter> {
        Ok(Self::from_total(self.total.checked_add(&other.total)?))
    }

    pub fn scale(&self, c: &Rational) -> ChernCharacter {
        Self::from_total(self.total.scale(c))
    }
}

/// `ch(T_ℂM)` for a `dim`-manifold: rank `dim` plus `2 ps_j(x²)/(2j)!` in
/// weight `j`, the roots of `T_ℂM` coming in `±x_i` pairs.
pub fn ch_tangent(dim: u32, cap: u32) -> Result<ChernCharacter> {
    if !dim.is_multiple_of(2) {
        return usage(format!("ch_tangent: dimension {dim} is odd"));
    }
    let ps = power_sums(cap);
    let mut total = GradedPoly::constant(rat(dim as i64), cap);
    for j in 1..=cap {
        let c = Rational::new(2.into(), factorial(2 * j as u64));
        total = &total + &ps[j as usize].scale(&c);
    }
    // only dim/2 roots: higher elementary symmetric functions vanish
    Ok(ChernCharacter::from_total(total.kill_generators_above(dim / 2)))
}

pub fn tensor(a: &ChernCharacter, b: &ChernCharacter) -> Result<ChernCharacter> {
    Ok(ChernCharacter::from_total(a.total.checked_mul(&b.total)?))
}

/// Adams operation `ψ^k`: scales the degree-`4j` component by `k^{2j}`.
pub fn adams(k: u32, a: &ChernCharacter) -> ChernCharacter {
    let k = rat(k as i64);
    ChernCharacter::from_total(a.total.scale_by_weight(|w| num_traits::pow(k.clone(), 2 * w as usize)))
}

/// `ch₂`: scales the degree-`4j` component by `2^{2j}`.
pub fn ch2_scale(a: &ChernCharacter) -> ChernCharacter {
    ChernCharacter::from_total(a.total.scale_by_weight(|w| rat(1i64 << (2 * w))))
}

/// `λ⁰, …, λ^{jmax}` by `j λ^j = Σ_{m=1}^{j} (-1)^{m-1} ψ^m λ^{j-m}`.
pub fn exterior_powers(jmax: u32, a: &ChernCharacter) -> Result<Vec<ChernCharacter>> {
    if jmax >= 2 && a.rank().is_negative() {
        return Err(Error::Virtual(format!(
            "exterior power of a bundle of negative rank {}",
            a.rank()
        )));
    }
    newton_powers(jmax, a, true)
}

pub fn exterior_power(j: u32, a: &ChernCharacter) -> Result<ChernCharacter> {
    Ok(exterior_powers(j, a)?.pop().expect("non-empty"))
}

/// `S⁰, …, S^{kmax}` by `k S^k = Σ_{m=1}^{k} ψ^m S^{k-m}`.
pub fn symmetric_powers(kmax: u32, a: &ChernCharacter) -> Result<Vec<ChernCharacter>> {
    newton_powers(kmax, a, false)
}

pub fn symmetric_power(k: u32, a: &ChernCharacter) -> Result<ChernCharacter> {
    Ok(symmetric_powers(k, a)?.pop().expect("non-empty"))
}

fn newton_powers(nmax: u32, a: &ChernCharacter, alternating: bool) -> Result<Vec<ChernCharacter>> {
    let cap = a.cap();
    let adams_ops: Vec<ChernCharacter> = (0..=nmax).map(|m| adams(m.max(1), a)).collect();
    let mut out = vec![ChernCharacter::trivial(Rational::one(), cap)];
    for j in 1..=nmax {
        let mut acc = GradedPoly::zero(cap);
        for m in 1..=j {
            let term = adams_ops[m as usize].total.checked_mul(&out[(j - m) as usize].total)?;
            if alternating && m % 2 == 0 {
                acc = &acc - &term;
            } else {
                acc = &acc + &term;
            }
        }
        out.push(ChernCharacter::from_total(acc.scale(&Rational::new(1.into(), (j as i64).into()))));
    }
    Ok(out)
}

/// `⟨Â(TM) · ch(E), [M]⟩`.
pub fn twisted_ahat(nums: &PontryaginNumbers, a: &ChernCharacter) -> Result<Rational> {
    check_caps(nums, a)?;
    let ahat = ahat_class(a.cap())?.total();
    pair(&ahat.checked_mul(&a.total)?, nums)
}

/// `⟨L(TM) · ch₂(E), [M]⟩`.
pub fn twisted_sig(nums: &PontryaginNumbers, a: &ChernCharacter) -> Result<Rational> {
    check_caps(nums, a)?;
    let l = l_class(a.cap())?.total();
    pair(&l.checked_mul(&ch2_scale(a).total)?, nums)
}

fn check_caps(nums: &PontryaginNumbers, a: &ChernCharacter) -> Result<()> {
    if nums.dim() / 4 != a.cap() || nums.dim() == 0 {
        return usage(format!(
            "character cap {} does not match manifold dimension {}",
            a.cap(),
            nums.dim()
        ));
    }
    Ok(())
}

/// One factor of a twist expression.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwistFactor {
    /// `T^i`: `i`-fold tensor power of `T_ℂM`.
    Tangent(u32),
    /// `L^j`: `j`-th exterior power `Λ^j(T_ℂM)`.
    Exterior(u32),
    /// `S^k`: `k`-th symmetric power `S^k(T_ℂM)`.
    Symmetric(u32),
}

/// Product of factors such as `T^i*L^j*S^k`; the empty product (written
/// `1`) is the trivial line bundle.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TwistExpr {
    factors: Vec<TwistFactor>,
}

impl TwistExpr {
    pub fn trivial() -> Self {
        TwistExpr::default()
    }

    /// `T^i ⊗ Λ^j ⊗ S^k`, omitting zero exponents.
    pub fn tls(i: u32, j: u32, k: u32) -> Self {
        let mut factors = Vec::new();
        if i > 0 {
            factors.push(TwistFactor::Tangent(i));
        }
        if j > 0 {
            factors.push(TwistFactor::Exterior(j));
        }
        if k > 0 {
            factors.push(TwistFactor::Symmetric(k));
        }
        TwistExpr { factors }
    }

    pub fn factors(&self) -> &[TwistFactor] {
        &self.factors
    }

    /// Chern character of the twist over a `dim`-manifold.
    pub fn character(&self, dim: u32) -> Result<ChernCharacter> {
        let cap = dim / 4;
        let t = ch_tangent(dim, cap)?;
        let mut acc = ChernCharacter::trivial(Rational::one(), cap);
        for f in &self.factors {
            let factor = match *f {
                TwistFactor::Tangent(i) => {
                    let mut p = ChernCharacter::trivial(Rational::one(), cap);
                    for _ in 0..i {
                        p = tensor(&p, &t)?;
                    }
                    p
                }
                TwistFactor::Exterior(j) => exterior_power(j, &t)?,
                TwistFactor::Symmetric(k) => symmetric_power(k, &t)?,
            };
            acc = tensor(&acc, &factor)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for TwistExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|x| match *x {
                TwistFactor::Tangent(i) => format!("T^{i}"),
                TwistFactor::Exterior(j) => format!("L^{j}"),
                TwistFactor::Symmetric(k) => format!("S^{k}"),
            })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

impl FromStr for TwistExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(TwistExpr::trivial());
        }
        let mut factors = Vec::new();
        for raw in s.split('*') {
            let raw = raw.trim();
            let (name, exp) = match raw.split_once('^') {
                Some((n, e)) => {
                    let e: u32 = e
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in twist factor {raw:?}")))?;
                    (n.trim(), e)
                }
                None => (raw, 1),
            };
            let factor = match name {
                "T" => TwistFactor::Tangent(exp),
                "L" => TwistFactor::Exterior(exp),
                "S" => TwistFactor::Symmetric(exp),
                "1" => continue,
                _ => return Err(Error::Parse(format!("unknown twist factor {name:?}"))),
            };
            factors.push(factor);
        }
        Ok(TwistExpr { factors })
    }
}

/// `Σ_{k} tᵏ [S^k(E - r)]` coefficients through `t^{kmax}` for the reduced
/// bundle `E - r`, using `S_t(E - r) = S_t(E) · (1 - t)^r`.
pub fn reduced_symmetric_series(
    kmax: u32,
    a: &ChernCharacter,
) -> Result<Vec<ChernCharacter>> {
    let r = a.rank();
    if !r.is_integer() || r.is_negative() {
        return usage("reduced_symmetric_series: rank must be a non-negative integer");
    }
    let r: u64 = r.to_integer().try_into().map_err(|_| Error::Usage("rank too large".into()))?;
    let sym = symmetric_powers(kmax, a)?;
    let cap = a.cap();
    let mut out = Vec::with_capacity(kmax as usize + 1);
    for k in 0..=kmax {
        let mut acc = GradedPoly::zero(cap);
        for m in 0..=k {
            let c = crate::algebra::int(&crate::algebra::binomial(r, (k - m) as u64));
            let c = if (k - m) % 2 == 1 { -c } else { c };
            if c.is_zero() {
                continue;
            }
            acc = &acc + &sym[m as usize].total.scale(&c);
        }
        out.push(ChernCharacter::from_total(acc));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ratio, Partition};

    fn p(i: u32) -> GradedPoly {
        GradedPoly::generator(i, 6)
    }

    #[test]
    fn tangent_character_low_components() {
        let t = ch_tangent(24, 6).unwrap();
        assert_eq!(t.rank(), rat(24));
        assert_eq!(t.component(1), p(1));
        let expected = (&(&p(1) * &p(1)) - &p(2).scale(&rat(2))).scale(&ratio(1, 12));
        assert_eq!(t.component(2), expected);
        assert!(ch_tangent(23, 6).is_err());
    }

    #[test]
    fn tensor_ranks_and_unit() {
        let t = ch_tangent(24, 6).unwrap();
        let one = ChernCharacter::trivial(rat(1), 6);
        assert_eq!(tensor(&one, &t).unwrap(), t);
        let tt = tensor(&t, &t).unwrap();
        assert_eq!(tt.rank(), rat(576));
        assert_eq!(tt.component(1), p(1).scale(&rat(48)));
    }

    #[test]
    fn adams_scaling() {
        let t = ch_tangent(24, 6).unwrap();
        assert_eq!(adams(1, &t), t);
        assert_eq!(adams(2, &t).component(1), p(1).scale(&rat(4)));
        assert_eq!(adams(3, &t).component(2), t.component(2).scale(&rat(81)));
        assert_eq!(ch2_scale(&t).component(1), p(1).scale(&rat(4)));
        let one = ChernCharacter::trivial(rat(1), 6);
        assert_eq!(ch2_scale(&one), one);
    }

    #[test]
    fn exterior_and_symmetric_ranks() {
        let t = ch_tangent(24, 6).unwrap();
        assert_eq!(exterior_power(0, &t).unwrap(), ChernCharacter::trivial(rat(1), 6));
        assert_eq!(exterior_power(1, &t).unwrap(), t);
        assert_eq!(exterior_power(2, &t).unwrap().rank(), rat(276));
        assert_eq!(symmetric_power(1, &t).unwrap(), t);
        assert_eq!(symmetric_power(2, &t).unwrap().rank(), rat(300));
        assert_eq!(exterior_power(24, &t).unwrap().rank(), rat(1));
        assert!(exterior_power(25, &t).unwrap().rank().is_zero());
    }

    #[test]
    fn virtual_exterior_rejected() {
        let v = ChernCharacter::trivial(rat(-3), 6);
        assert!(matches!(exterior_power(2, &v), Err(Error::Virtual(_))));
        assert!(exterior_power(1, &v).is_ok());
    }

    #[test]
    fn twist_expression_parsing() {
        let e: TwistExpr = "T^2*L^3*S".parse().unwrap();
        assert_eq!(
            e.factors(),
            &[TwistFactor::Tangent(2), TwistFactor::Exterior(3), TwistFactor::Symmetric(1)]
        );
        assert_eq!(e.to_string(), "T^2*L^3*S^1");
        assert_eq!("1".parse::<TwistExpr>().unwrap(), TwistExpr::trivial());
        assert_eq!("L^2".parse::<TwistExpr>().unwrap(), TwistExpr::tls(0, 2, 0));
        assert!("Q^2".parse::<TwistExpr>().is_err());
        assert!("T^x".parse::<TwistExpr>().is_err());
    }

    #[test]
    fn twisted_genera_check_dimension() {
        let nums = PontryaginNumbers::from_entries(8, [(Partition::single(2), rat(1440))]).unwrap();
        let t = ch_tangent(24, 6).unwrap();
        assert!(twisted_ahat(&nums, &t).is_err());
        let trivial = ChernCharacter::trivial(rat(1), 2);
        assert_eq!(twisted_sig(&nums, &trivial).unwrap(), rat(224));
    }
}
