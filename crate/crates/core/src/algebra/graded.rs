use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{rat, Partition, PontryaginNumbers, Rational};
use crate::error::{usage, Result};

/// Truncated polynomial in the Pontryagin generators `p_1, p_2, ...` with
/// `p_i` of weight `i`. Terms of weight above `cap` are never stored, and no
/// stored coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPoly {
    cap: u32,
    terms: BTreeMap<Partition, Rational>,
}

impl GradedPoly {
    pub fn zero(cap: u32) -> Self {
        GradedPoly {
            cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(cap: u32) -> Self {
        Self::constant(Rational::one(), cap)
    }

    pub fn constant(c: Rational, cap: u32) -> Self {
        Self::monomial(Partition::empty(), c, cap)
    }

    /// The generator `p_i` (zero if `i > cap`).
    pub fn generator(i: u32, cap: u32) -> Self {
        Self::monomial(Partition::single(i), Rational::one(), cap)
    }

    pub fn monomial(lambda: Partition, c: Rational, cap: u32) -> Self {
        let mut out = Self::zero(cap);
        out.add_term(lambda, c);
        out
    }

    pub fn from_terms(cap: u32, terms: impl IntoIterator<Item = (Partition, Rational)>) -> Self {
        let mut out = Self::zero(cap);
        for (lambda, c) in terms {
            out.add_term(lambda, c);
        }
        out
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Partition::empty())
    }

    /// Adds `c · p_λ`, dropping it if it is beyond the cap.
    pub fn add_term(&mut self, lambda: Partition, c: Rational) {
        if lambda.weight() > self.cap || c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// The homogeneous component of weight `w`.
    pub fn weight_part(&self, w: u32) -> GradedPoly {
        GradedPoly {
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.weight() == w)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_homogeneous(&self, w: u32) -> bool {
        self.terms.keys().all(|l| l.weight() == w)
    }

    pub fn max_weight(&self) -> Option<u32> {
        self.terms.keys().map(|l| l.weight()).max()
    }

    /// Re-caps the polynomial: lowering the cap truncates, raising it keeps
    /// every term.
    pub fn with_cap(&self, cap: u32) -> GradedPoly {
        GradedPoly::from_terms(cap, self.terms.iter().map(|(l, c)| (l.clone(), c.clone())))
    }

    pub fn scale(&self, c: &Rational) -> GradedPoly {
        if c.is_zero() {
            return GradedPoly::zero(self.cap);
        }
        GradedPoly {
            cap: self.cap,
            terms: self.terms.iter().map(|(l, v)| (l.clone(), v * c)).collect(),
        }
    }

    /// Multiplies each weight-`w` component by `f(w)`.
    pub fn scale_by_weight(&self, f: impl Fn(u32) -> Rational) -> GradedPoly {
        GradedPoly::from_terms(
            self.cap,
            self.terms.iter().map(|(l, c)| (l.clone(), c * f(l.weight()))),
        )
    }

    /// Sets every generator `p_i` with `i > n` to zero.
    pub fn kill_generators_above(&self, n: u32) -> GradedPoly {
        GradedPoly {
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.largest_part() <= n)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn checked_add(&self, other: &GradedPoly) -> Result<GradedPoly> {
        if self.cap != other.cap {
            return usage(format!("cap mismatch: {} vs {}", self.cap, other.cap));
        }
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &GradedPoly) -> Result<GradedPoly> {
        if self.cap != other.cap {
            return usage(format!("cap mismatch: {} vs {}", self.cap, other.cap));
        }
        let mut out = GradedPoly::zero(self.cap);
        for (la, ca) in &self.terms {
            let wa = la.weight();
            for (lb, cb) in &other.terms {
                if wa + lb.weight() > self.cap {
                    continue;
                }
                out.add_term(la.merge(lb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> GradedPoly {
        let mut acc = GradedPoly::one(self.cap);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `p_i ↦ images[i-1]`. All images must share one cap,
    /// which becomes the cap of the result.
    pub fn substitute(&self, images: &[GradedPoly]) -> Result<GradedPoly> {
        let cap = match images.first() {
            Some(img) => img.cap,
            None => {
                if self.terms.keys().any(|l| !l.is_empty()) {
                    return usage("substitute: no images supplied");
                }
                return Ok(self.clone());
            }
        };
        if images.iter().any(|img| img.cap != cap) {
            return usage("substitute: images have differing caps");
        }
        let mut out = GradedPoly::zero(cap);
        for (lambda, c) in &self.terms {
            let mut term = GradedPoly::constant(c.clone(), cap);
            for &part in lambda.parts() {
                let img = images.get(part as usize - 1).ok_or_else(|| {
                    crate::error::Error::Usage(format!("substitute: no image for p_{part}"))
                })?;
                term = &term * img;
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// `exp(self)` for a polynomial without constant term.
    pub fn exp(&self) -> Result<GradedPoly> {
        if !self.constant_term().is_zero() {
            return usage("exp: argument must have zero constant term");
        }
        let mut acc = GradedPoly::one(self.cap);
        let mut power = GradedPoly::one(self.cap);
        for m in 1..=self.cap {
            power = (&power * self).scale(&Rational::new(1.into(), (m as i64).into()));
            acc = &acc + &power;
        }
        Ok(acc)
    }
}

/// Power sums `ps_1..=ps_cap` of the squared roots, written in the
/// elementary symmetric functions `p_j = e_j(x²)` by Newton's identities.
/// Index 0 of the result is unused (zero).
pub fn power_sums(cap: u32) -> Vec<GradedPoly> {
    let mut ps = vec![GradedPoly::zero(cap)];
    for k in 1..=cap {
        let mut acc = GradedPoly::zero(cap);
        for i in 1..k {
            let sign = if i % 2 == 1 { 1 } else { -1 };
            let term = (&GradedPoly::generator(i, cap) * &ps[(k - i) as usize]).scale(&rat(sign));
            acc = &acc + &term;
        }
        let sign = if k % 2 == 1 { 1 } else { -1 };
        acc = &acc + &GradedPoly::generator(k, cap).scale(&rat(sign * k as i64));
        ps.push(acc);
    }
    ps
}

pub fn poly_mul(a: &GradedPoly, b: &GradedPoly) -> Result<GradedPoly> {
    a.checked_mul(b)
}

/// `⟨poly, [M]⟩`: sum over the top-weight terms of coefficient times the
/// corresponding Pontryagin number.
pub fn pair(poly: &GradedPoly, nums: &PontryaginNumbers) -> Result<Rational> {
    let top = nums.dim() / 4;
    if poly.cap != top {
        return usage(format!(
            "pair: polynomial cap {} does not match dimension {} (weight {top})",
            poly.cap,
            nums.dim()
        ));
    }
    Ok(poly
        .terms
        .iter()
        .filter(|(l, _)| l.weight() == top)
        .map(|(l, c)| c * nums.get(l))
        .sum())
}

impl Add for &GradedPoly {
    type Output = GradedPoly;

    fn add(self, rhs: &GradedPoly) -> GradedPoly {
        self.checked_add(rhs).expect("GradedPoly addition with mismatched caps")
    }
}

impl Sub for &GradedPoly {
    type Output = GradedPoly;

    fn sub(self, rhs: &GradedPoly) -> GradedPoly {
        self.checked_add(&-rhs).expect("GradedPoly subtraction with mismatched caps")
    }
}

impl Mul for &GradedPoly {
    type Output = GradedPoly;

    fn mul(self, rhs: &GradedPoly) -> GradedPoly {
        self.checked_mul(rhs).expect("GradedPoly product with mismatched caps")
    }
}

impl Neg for &GradedPoly {
    type Output = GradedPoly;

    fn neg(self) -> GradedPoly {
        GradedPoly {
            cap: self.cap,
            terms: self.terms.iter().map(|(l, c)| (l.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // lowest weight first, then the crate's partition order
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(l, _)| l.weight());
        for (i, (lambda, c)) in terms.into_iter().enumerate() {
            let negative = c < &Rational::zero();
            let abs = if negative { -c } else { c.clone() };
            if i == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            let mono: Vec<String> = lambda.parts().iter().map(|p| format!("p{p}")).collect();
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&mono.join("*"))?;
            } else {
                write!(f, "{abs}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}
