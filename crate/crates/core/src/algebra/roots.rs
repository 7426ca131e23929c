use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Rational;

/// Polynomial in formal root variables `x_1..x_n` with rational
/// coefficients, truncated at total degree `cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootPoly {
    nvars: usize,
    cap: u32,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl RootPoly {
    pub fn zero(nvars: usize, cap: u32) -> Self {
        RootPoly {
            nvars,
            cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rational, nvars: usize, cap: u32) -> Self {
        let mut out = Self::zero(nvars, cap);
        out.add_term(vec![0; nvars], c);
        out
    }

    pub fn one(nvars: usize, cap: u32) -> Self {
        Self::constant(Rational::one(), nvars, cap)
    }

    /// The variable `x_{i+1}` (zero-based index).
    pub fn var(i: usize, nvars: usize, cap: u32) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        let mut out = Self::zero(nvars, cap);
        out.add_term(exps, Rational::one());
        out
    }

    /// The linear form `Σ coeffs[i] x_i`.
    pub fn linear(coeffs: &[Rational], cap: u32) -> Self {
        let n = coeffs.len();
        let mut out = Self::zero(n, cap);
        for (i, c) in coeffs.iter().enumerate() {
            let mut exps = vec![0; n];
            exps[i] = 1;
            out.add_term(exps, c.clone());
        }
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length");
        if exps.iter().sum::<u32>() > self.cap || c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> RootPoly {
        let mut out = RootPoly::zero(self.nvars, self.cap);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn pow(&self, n: u32) -> RootPoly {
        let mut acc = RootPoly::one(self.nvars, self.cap);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Applies a variable permutation/sign change: `x_i ↦ signs[i] · x_{perm[i]}`.
    pub fn transform(&self, perm: &[usize], signs: &[i32]) -> RootPoly {
        let mut out = RootPoly::zero(self.nvars, self.cap);
        for (e, c) in &self.terms {
            let mut ne = vec![0; self.nvars];
            let mut sign = 1i32;
            for (i, &k) in e.iter().enumerate() {
                ne[perm[i]] = k;
                if signs[i] < 0 && k % 2 == 1 {
                    sign = -sign;
                }
            }
            let v = if sign < 0 { -c } else { c.clone() };
            out.add_term(ne, v);
        }
        out
    }

    /// Elementary symmetric polynomial `e_j(x_1², ..., x_n²)`.
    pub fn elementary_of_squares(j: u32, nvars: usize, cap: u32) -> RootPoly {
        let mut out = RootPoly::zero(nvars, cap);
        if 2 * j > cap || j as usize > nvars {
            return out;
        }
        fn rec(start: usize, left: u32, cur: &mut Vec<u32>, out: &mut RootPoly) {
            if left == 0 {
                out.add_term(cur.clone(), Rational::one());
                return;
            }
            for i in start..cur.len() {
                cur[i] = 2;
                rec(i + 1, left - 1, cur, out);
                cur[i] = 0;
            }
        }
        rec(0, j, &mut vec![0; nvars], &mut out);
        out
    }

    /// Power sum `Σ x_i^k`.
    pub fn power_sum(k: u32, nvars: usize, cap: u32) -> RootPoly {
        let mut out = RootPoly::zero(nvars, cap);
        for i in 0..nvars {
            let mut e = vec![0; nvars];
            e[i] = k;
            out.add_term(e, Rational::one());
        }
        out
    }
}

impl Add for &RootPoly {
    type Output = RootPoly;

    fn add(self, rhs: &RootPoly) -> RootPoly {
        assert_eq!(self.nvars, rhs.nvars, "RootPoly variable count mismatch");
        let mut out = RootPoly::zero(self.nvars, self.cap.min(rhs.cap));
        for (e, c) in self.terms.iter().chain(rhs.terms.iter()) {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &RootPoly {
    type Output = RootPoly;

    fn sub(self, rhs: &RootPoly) -> RootPoly {
        self + &(-rhs)
    }
}

impl Neg for &RootPoly {
    type Output = RootPoly;

    fn neg(self) -> RootPoly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &RootPoly {
    type Output = RootPoly;

    fn mul(self, rhs: &RootPoly) -> RootPoly {
        assert_eq!(self.nvars, rhs.nvars, "RootPoly variable count mismatch");
        let cap = self.cap.min(rhs.cap);
        let mut out = RootPoly::zero(self.nvars, cap);
        for (ea, ca) in &self.terms {
            let da: u32 = ea.iter().sum();
            for (eb, cb) in &rhs.terms {
                if da + eb.iter().sum::<u32>() > cap {
                    continue;
                }
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn square_of_linear_form() {
        let l = RootPoly::linear(&[rat(1), rat(1)], 4);
        let sq = &l * &l;
        assert_eq!(sq.coeff(&[1, 1]), rat(2));
        assert_eq!(sq.coeff(&[2, 0]), rat(1));
    }

    #[test]
    fn elementary_counts() {
        let e2 = RootPoly::elementary_of_squares(2, 4, 8);
        assert_eq!(e2.terms().count(), 6);
        assert!(RootPoly::elementary_of_squares(5, 4, 20).is_zero());
    }

    #[test]
    fn sign_change_flips_odd_terms() {
        let x = RootPoly::var(0, 2, 3);
        let flipped = x.transform(&[0, 1], &[-1, 1]);
        assert_eq!(flipped, -&x);
    }
}
