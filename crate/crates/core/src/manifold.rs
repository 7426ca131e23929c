//! Finite rational cohomology-ring models of manifolds.
//!
//! A [`RingModel`] records an additive basis of `H^*(M; ℚ)` with degrees, the
//! multiplication table, the fundamental-class functional and the total
//! Pontryagin class. Products, fake rescalings and Wall's 3-connected
//! 8-manifolds are built on top of it, and every model yields its
//! Pontryagin numbers.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{
    bernoulli, factorial, int, parse_rational, rat, GradedPoly, Partition, PontryaginNumbers,
    Rational,
};
use crate::error::{usage, Error, Result};
use crate::genus;
use crate::linalg::{self, Matrix};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisElement {
    pub name: String,
    pub degree: u32,
}

/// Element of a ring model, as coordinates in the model's additive basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingElement {
    coeffs: Vec<Rational>,
}

impl RingElement {
    pub fn zero(len: usize) -> Self {
        RingElement {
            coeffs: vec![Rational::zero(); len],
        }
    }

    pub fn basis(i: usize, len: usize) -> Self {
        let mut e = Self::zero(len);
        e.coeffs[i] = Rational::one();
        e
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &RingElement) -> RingElement {
        RingElement {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &RingElement) -> RingElement {
        RingElement {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> RingElement {
        RingElement {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }
}

/// Rational cohomology ring model of a closed oriented manifold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingModel {
    dim: u32,
    basis: Vec<BasisElement>,
    /// Products of non-unit basis elements `i <= j`; absent pairs multiply to 0.
    products: BTreeMap<(usize, usize), Vec<(usize, Rational)>>,
    fundamental: Vec<Rational>,
    /// `pontryagin[k]` is `p_k`, of degree `4k`, for `k = 0..=dim/4`.
    pontryagin: Vec<RingElement>,
}

impl RingModel {
    /// Validates and assembles a model. `basis[0]` must be the unit in
    /// degree 0; the unit is never listed in `products`.
    pub fn new(
        dim: u32,
        basis: Vec<BasisElement>,
        products: BTreeMap<(usize, usize), Vec<(usize, Rational)>>,
        fundamental: Vec<Rational>,
        pontryagin: Vec<RingElement>,
    ) -> Result<Self> {
        let n = basis.len();
        if n == 0 || basis[0].degree != 0 {
            return usage("ring model: basis must start with the unit in degree 0");
        }
        if basis.iter().skip(1).any(|b| b.degree == 0) {
            return usage("ring model: only the unit may sit in degree 0");
        }
        let mut names: Vec<&str> = basis.iter().map(|b| b.name.as_str()).collect();
        names.sort_unstable();
        if names.windows(2).any(|w| w[0] == w[1]) {
            return usage("ring model: duplicate basis names");
        }
        if basis.iter().any(|b| b.degree > dim) {
            return usage("ring model: basis element above the dimension");
        }
        for (&(i, j), out) in &products {
            if i == 0 || j == 0 || i > j || j >= n {
                return usage(format!("ring model: bad product index ({i}, {j})"));
            }
            let d = basis[i].degree + basis[j].degree;
            if out.iter().any(|&(k, _)| k >= n || basis[k].degree != d) {
                return usage(format!(
                    "ring model: product {}·{} leaves degree {d}",
                    basis[i].name, basis[j].name
                ));
            }
        }
        if fundamental.len() != n {
            return usage("ring model: fundamental functional has wrong length");
        }
        if fundamental
            .iter()
            .zip(&basis)
            .any(|(f, b)| !f.is_zero() && b.degree != dim)
        {
            return usage("ring model: fundamental class is nonzero below the top degree");
        }
        let mut pontryagin = pontryagin;
        if pontryagin.is_empty() {
            pontryagin.push(RingElement::basis(0, n));
        }
        pontryagin.resize((dim / 4 + 1) as usize, RingElement::zero(n));
        if pontryagin.len() != (dim / 4 + 1) as usize {
            return usage("ring model: too many Pontryagin pieces");
        }
        if pontryagin[0] != RingElement::basis(0, n) {
            return usage("ring model: p_0 must be 1");
        }
        for (k, p) in pontryagin.iter().enumerate() {
            if p.coeffs.len() != n {
                return usage("ring model: Pontryagin piece has wrong length");
            }
            if p
                .coeffs
                .iter()
                .zip(&basis)
                .any(|(c, b)| !c.is_zero() && b.degree != 4 * k as u32)
            {
                return usage(format!("ring model: p_{k} is not homogeneous of degree {}", 4 * k));
            }
        }
        Ok(RingModel {
            dim,
            basis,
            products,
            fundamental,
            pontryagin,
        })
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.name == name)
    }

    /// The basis element called `name`. Panics if absent.
    pub fn element(&self, name: &str) -> RingElement {
        let i = self
            .index_of(name)
            .unwrap_or_else(|| panic!("no basis element named {name:?}"));
        RingElement::basis(i, self.rank())
    }

    pub fn unit(&self) -> RingElement {
        RingElement::basis(0, self.rank())
    }

    pub fn zero(&self) -> RingElement {
        RingElement::zero(self.rank())
    }

    fn basis_product(&self, i: usize, j: usize) -> RingElement {
        let n = self.rank();
        if i == 0 {
            return RingElement::basis(j, n);
        }
        if j == 0 {
            return RingElement::basis(i, n);
        }
        let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
        let mut out = RingElement::zero(n);
        if let Some(terms) = self.products.get(&(lo, hi)) {
            let odd = i > j && self.basis[i].degree % 2 == 1 && self.basis[j].degree % 2 == 1;
            for (k, c) in terms {
                out.coeffs[*k] += if odd { -c } else { c.clone() };
            }
        }
        out
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        let mut out = self.zero();
        for (i, ca) in a.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.coeffs.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let c = ca * cb;
                let prod = self.basis_product(i, j);
                for (k, v) in prod.coeffs.iter().enumerate() {
                    if !v.is_zero() {
                        out.coeffs[k] += &c * v;
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &RingElement, n: u32) -> RingElement {
        (0..n).fold(self.unit(), |acc, _| self.mul(&acc, a))
    }

    /// `⟨a, [M]⟩`.
    pub fn evaluate(&self, a: &RingElement) -> Rational {
        a.coeffs.iter().zip(&self.fundamental).map(|(x, f)| x * f).sum()
    }

    pub fn degree_part(&self, a: &RingElement, d: u32) -> RingElement {
        RingElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&self.basis)
                .map(|(c, b)| if b.degree == d { c.clone() } else { Rational::zero() })
                .collect(),
        }
    }

    /// `p_k`, zero above `dim/4`.
    pub fn pont(&self, k: u32) -> RingElement {
        self.pontryagin
            .get(k as usize)
            .cloned()
            .unwrap_or_else(|| self.zero())
    }

    pub fn total_pont(&self) -> RingElement {
        self.pontryagin.iter().fold(self.zero(), |acc, p| acc.add(p))
    }

    /// Same ring with a new total Pontryagin class, split by degree.
    pub fn with_total_pont(&self, total: &RingElement) -> Result<RingModel> {
        let pieces = (0..=self.dim / 4)
            .map(|k| self.degree_part(total, 4 * k))
            .collect::<Vec<_>>();
        let covered = pieces.iter().fold(self.zero(), |acc, p| acc.add(p));
        if covered != *total {
            return usage("total Pontryagin class has components outside degrees 4k");
        }
        RingModel::new(
            self.dim,
            self.basis.clone(),
            self.products.clone(),
            self.fundamental.clone(),
            pieces,
        )
    }

    /// Image of a polynomial in `p_1, p_2, …` under `p_i ↦ images[i-1]`.
    pub fn evaluate_poly(&self, poly: &GradedPoly, images: &[RingElement]) -> Result<RingElement> {
        let mut out = self.zero();
        for (lambda, c) in poly.terms() {
            let mut term = self.unit().scale(c);
            for &part in lambda.parts() {
                let img = images
                    .get(part as usize - 1)
                    .ok_or_else(|| Error::Usage(format!("no image supplied for p_{part}")))?;
                term = self.mul(&term, img);
                if term.is_zero() {
                    break;
                }
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Every Pontryagin number `⟨p_λ, [M]⟩`, `λ ⊢ dim/4`.
    pub fn numbers(&self) -> PontryaginNumbers {
        let top = self.dim / 4;
        let mut nums = PontryaginNumbers::new(self.dim).expect("dimension checked at construction");
        if !self.dim.is_multiple_of(4) {
            return nums;
        }
        for lambda in Partition::all(top, top) {
            let prod = lambda
                .parts()
                .iter()
                .fold(self.unit(), |acc, &k| self.mul(&acc, &self.pontryagin[k as usize]));
            nums.set(lambda, self.evaluate(&prod));
        }
        nums
    }

    /// Signature through the L-genus (Hirzebruch signature theorem).
    pub fn signature(&self) -> Result<Rational> {
        if self.dim == 0 {
            return Ok(self.fundamental[0].clone());
        }
        genus::signature(&self.numbers())
    }

    /// Matrix of `(a, b) ↦ ⟨a·b, [M]⟩` on the basis elements of degree
    /// `dim/2`, with their indices.
    pub fn intersection_form(&self) -> (Vec<usize>, Matrix) {
        let mid: Vec<usize> = (0..self.rank())
            .filter(|&i| 2 * self.basis[i].degree == self.dim)
            .collect();
        let m = mid
            .iter()
            .map(|&i| {
                mid.iter()
                    .map(|&j| self.evaluate(&self.basis_product(i, j)))
                    .collect()
            })
            .collect();
        (mid, m)
    }

    /// Checks `(ab)c = a(bc)` on all basis triples.
    pub fn check_associative(&self) -> Result<()> {
        let n = self.rank();
        for i in 1..n {
            for j in 1..n {
                let ij = self.basis_product(i, j);
                if ij.is_zero() {
                    continue;
                }
                for k in 1..n {
                    let left = self.mul(&ij, &RingElement::basis(k, n));
                    let right = self.mul(&RingElement::basis(i, n), &self.basis_product(j, k));
                    if left != right {
                        return Err(Error::Internal(format!(
                            "multiplication is not associative on ({}, {}, {})",
                            self.basis[i].name, self.basis[j].name, self.basis[k].name
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Human-readable linear combination of basis names.
    pub fn format(&self, a: &RingElement) -> String {
        let mut out = String::new();
        for (c, b) in a.coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            let abs = if neg { -c } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if b.degree == 0 {
                let _ = write!(out, "{abs}");
            } else if abs.is_one() {
                out.push_str(&b.name);
            } else {
                let _ = write!(out, "{abs}*{}", b.name);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

// ---------------------------------------------------------------------------
// constructions

fn basis_el(name: &str, degree: u32) -> BasisElement {
    BasisElement {
        name: name.to_string(),
        degree,
    }
}

/// The one-point space: unit of the product.
pub fn point() -> RingModel {
    RingModel::new(
        0,
        vec![basis_el("1", 0)],
        BTreeMap::new(),
        vec![Rational::one()],
        vec![RingElement::basis(0, 1)],
    )
    .expect("valid point model")
}

/// `p_n` of the Kervaire–Milnor almost parallelizable `4n`-manifold, as a
/// multiple of the top generator: `denom(B_{2n}/4n) · a_n · (2n-1)!` with
/// `a_n = 2` for odd `n` and `1` for even `n`.
pub fn kervaire_milnor_top(n: u32) -> Result<BigInt> {
    if !(1..=6).contains(&n) {
        return usage(format!("Kervaire–Milnor generator n = {n} outside 1..=6"));
    }
    let ratio = bernoulli(2 * n)? / rat(4 * n as i64);
    let a_n = if n % 2 == 1 { 2 } else { 1 };
    Ok(ratio.denom().clone() * BigInt::from(a_n) * factorial(2 * n as u64 - 1))
}

/// `M_0^{4n}`: cohomology `ℚ{1, x}` with all Pontryagin classes below the
/// top zero.
pub fn kervaire_milnor_model(n: u32) -> Result<RingModel> {
    let top = int(&kervaire_milnor_top(n)?);
    let dim = 4 * n;
    let mut pont = vec![RingElement::zero(2); n as usize + 1];
    pont[0] = RingElement::basis(0, 2);
    pont[n as usize] = RingElement::basis(1, 2).scale(&top);
    RingModel::new(
        dim,
        vec![basis_el("1", 0), basis_el("x", dim)],
        BTreeMap::new(),
        vec![Rational::zero(), Rational::one()],
        pont,
    )
}

/// The Cayley plane: `ℚ[u]/u³`, `|u| = 8`, `p = 1 + 6u + 39u²`.
pub fn op2_model() -> RingModel {
    let mut products = BTreeMap::new();
    products.insert((1, 1), vec![(2, Rational::one())]);
    RingModel::new(
        16,
        vec![basis_el("1", 0), basis_el("u", 8), basis_el("u2", 16)],
        products,
        vec![Rational::zero(), Rational::zero(), Rational::one()],
        vec![
            RingElement::basis(0, 3),
            RingElement::zero(3),
            RingElement::basis(1, 3).scale(&rat(6)),
            RingElement::zero(3),
            RingElement::basis(2, 3).scale(&rat(39)),
        ],
    )
    .expect("valid Cayley plane model")
}

fn product_name(a: &str, b: &str) -> String {
    match (a, b) {
        ("1", "1") => "1".into(),
        (x, "1") | ("1", x) => x.into(),
        (x, y) => format!("{x}*{y}"),
    }
}

/// Künneth product `X × Y` with the product fundamental class and
/// `p(X × Y) = p(X) ⊗ p(Y)`. Clashing basis names of `Y` get a `'` suffix.
pub fn product_model(x: &RingModel, y: &RingModel) -> RingModel {
    let xnames: Vec<&str> = x.basis.iter().map(|b| b.name.as_str()).collect();
    let ynames: Vec<String> = y
        .basis
        .iter()
        .map(|b| {
            let mut name = b.name.clone();
            while name != "1" && xnames.iter().any(|xn| xn.split('*').any(|part| part == name)) {
                name.push('\'');
            }
            name
        })
        .collect();
    let (nx, ny) = (x.rank(), y.rank());
    let idx = |i: usize, j: usize| i * ny + j;
    let basis: Vec<BasisElement> = (0..nx)
        .flat_map(|i| (0..ny).map(move |j| (i, j)))
        .map(|(i, j)| BasisElement {
            name: product_name(&x.basis[i].name, &ynames[j]),
            degree: x.basis[i].degree + y.basis[j].degree,
        })
        .collect();
    let n = basis.len();

    let mut products = BTreeMap::new();
    for a in 1..n {
        for b in a..n {
            let (i, j) = (a / ny, a % ny);
            let (k, l) = (b / ny, b % ny);
            let xs = x.basis_product(i, k);
            let ys = y.basis_product(j, l);
            let sign = if y.basis[j].degree % 2 == 1 && x.basis[k].degree % 2 == 1 {
                -Rational::one()
            } else {
                Rational::one()
            };
            let mut terms = Vec::new();
            for (p, cx) in xs.coeffs.iter().enumerate() {
                if cx.is_zero() {
                    continue;
                }
                for (q, cy) in ys.coeffs.iter().enumerate() {
                    if !cy.is_zero() {
                        terms.push((idx(p, q), cx * cy * &sign));
                    }
                }
            }
            if !terms.is_empty() {
                products.insert((a, b), terms);
            }
        }
    }

    let fundamental: Vec<Rational> = (0..n)
        .map(|a| &x.fundamental[a / ny] * &y.fundamental[a % ny])
        .collect();

    let tensor = |u: &RingElement, v: &RingElement| -> RingElement {
        let mut out = RingElement::zero(n);
        for (p, cu) in u.coeffs.iter().enumerate() {
            if cu.is_zero() {
                continue;
            }
            for (q, cv) in v.coeffs.iter().enumerate() {
                if !cv.is_zero() {
                    out.coeffs[idx(p, q)] += cu * cv;
                }
            }
        }
        out
    };
    let total = tensor(&x.total_pont(), &y.total_pont());
    let dim = x.dim + y.dim;
    let pieces: Vec<RingElement> = (0..=dim / 4)
        .map(|k| RingElement {
            coeffs: total
                .coeffs
                .iter()
                .zip(&basis)
                .map(|(c, b)| if b.degree == 4 * k { c.clone() } else { Rational::zero() })
                .collect(),
        })
        .collect();
    RingModel::new(dim, basis, products, fundamental, pieces).expect("product of valid models")
}

/// Scales the single nonzero positive-degree Pontryagin piece of a
/// generator model by `c` (a "fake manifold" such as `½ M_0^{12}`; only its
/// characteristic numbers are meaningful).
pub fn scale_top_class(x: &RingModel, c: &Rational) -> Result<RingModel> {
    let nonzero: Vec<usize> = (1..x.pontryagin.len())
        .filter(|&k| !x.pontryagin[k].is_zero())
        .collect();
    if nonzero.len() != 1 || 4 * nonzero[0] as u32 != x.dim {
        return usage(
            "scale_top_class: model must have exactly one nonzero Pontryagin piece, in top degree",
        );
    }
    let mut pont = x.pontryagin.clone();
    let k = nonzero[0];
    pont[k] = pont[k].scale(c);
    RingModel::new(
        x.dim,
        x.basis.clone(),
        x.products.clone(),
        x.fundamental.clone(),
        pont,
    )
}

/// Extends `base` by a generator `name` of degree `degree` with
/// `name^order = 0`, giving `H^*(base) ⊗ ℚ[u]/u^order`. The fundamental
/// class pairs `x · u^{order-1}` to `⟨x, [base]⟩`; the Pontryagin class is
/// pulled back from `base`.
pub fn extend_truncated(base: &RingModel, name: &str, degree: u32, order: u32) -> Result<RingModel> {
    if order < 1 || degree == 0 || degree % 2 == 1 {
        return usage("extend_truncated: need order >= 1 and a positive even degree");
    }
    let powers: Vec<BasisElement> = (0..order)
        .map(|k| BasisElement {
            name: match k {
                0 => "1".into(),
                1 => name.to_string(),
                _ => format!("{name}{k}"),
            },
            degree: degree * k,
        })
        .collect();
    let mut products = BTreeMap::new();
    for a in 1..order as usize {
        for b in a..order as usize {
            if a + b < order as usize {
                products.insert((a, b), vec![(a + b, Rational::one())]);
            }
        }
    }
    let fundamental = (0..order as usize)
        .map(|k| if k + 1 == order as usize { Rational::one() } else { Rational::zero() })
        .collect();
    let pont = vec![RingElement::basis(0, order as usize)];
    let fiber = RingModel::new(degree * (order - 1), powers, products, fundamental, pont)?;
    Ok(product_model(base, &fiber))
}

/// Unimodular symmetric integer matrix with an integer vector, the input
/// data of a 3-connected 8-manifold (intersection form and first Spin
/// class `q_1 = p_1 / 2`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallPair {
    pub a: Vec<Vec<i64>>,
    pub b: Vec<i64>,
}

impl WallPair {
    pub fn new(a: Vec<Vec<i64>>, b: Vec<i64>) -> Self {
        WallPair { a, b }
    }

    /// Cartan matrix of E₈ in the node order used for the M₄ base.
    pub fn e8_matrix() -> Vec<Vec<i64>> {
        vec![
            vec![2, 1, 0, 0, 0, 0, 0, 0],
            vec![1, 2, 1, 0, 0, 0, 0, 0],
            vec![0, 1, 2, 1, 0, 0, 0, 0],
            vec![0, 0, 1, 2, 1, 0, 0, 0],
            vec![0, 0, 0, 1, 2, 1, 0, 1],
            vec![0, 0, 0, 0, 1, 2, 1, 0],
            vec![0, 0, 0, 0, 0, 1, 2, 0],
            vec![0, 0, 0, 0, 1, 0, 0, 2],
        ]
    }

    /// `(diag(H, E₈), (2, 2, 0, …, 0))`, the base of M₄.
    pub fn hyperbolic_plus_e8() -> Self {
        let e8 = Self::e8_matrix();
        let mut a = vec![vec![0i64; 10]; 10];
        a[0][1] = 1;
        a[1][0] = 1;
        for i in 0..8 {
            for j in 0..8 {
                a[i + 2][j + 2] = e8[i][j];
            }
        }
        let mut b = vec![0; 10];
        b[0] = 2;
        b[1] = 2;
        WallPair { a, b }
    }

    pub fn rank(&self) -> usize {
        self.b.len()
    }

    fn matrix(&self) -> Matrix {
        linalg::to_rational_matrix(&self.a)
    }

    pub fn signature(&self) -> i64 {
        linalg::signature(&self.matrix())
    }

    /// `b A bᵀ`.
    pub fn b_a_b(&self) -> i64 {
        let n = self.rank();
        (0..n)
            .map(|i| (0..n).map(|j| self.b[i] * self.a[i][j] * self.b[j]).sum::<i64>())
            .sum()
    }

    /// Checks symmetry, unimodularity, `a_ii ≡ b_i (mod 2)` and
    /// `Sig(A) ≡ bAbᵀ (mod 224)`.
    pub fn validate(&self) -> Result<()> {
        let n = self.rank();
        if self.a.len() != n || self.a.iter().any(|r| r.len() != n) {
            return Err(Error::NotRealizable("matrix and vector sizes disagree".into()));
        }
        for i in 0..n {
            for j in 0..n {
                if self.a[i][j] != self.a[j][i] {
                    return Err(Error::NotRealizable("matrix is not symmetric".into()));
                }
            }
        }
        let det = linalg::determinant(&self.matrix());
        if det != rat(1) && det != rat(-1) {
            return Err(Error::NotRealizable(format!("matrix is not unimodular (det = {det})")));
        }
        for i in 0..n {
            if (self.a[i][i] - self.b[i]).rem_euclid(2) != 0 {
                return Err(Error::NotRealizable(format!(
                    "a_{0}{0} = {1} and b_{0} = {2} differ mod 2",
                    i + 1,
                    self.a[i][i],
                    self.b[i]
                )));
            }
        }
        let (sig, bab) = (self.signature(), self.b_a_b());
        if (sig - bab).rem_euclid(224) != 0 {
            return Err(Error::NotRealizable(format!(
                "Sig(A) = {sig} and bAbᵀ = {bab} differ mod 224"
            )));
        }
        Ok(())
    }
}

/// 8-dimensional model realizing a Wall pair: `H⁴` spanned by `labels` with
/// intersection form `A`, `p_1 = 2 Σ b_i e_i`, and `p_2` fixed by
/// `⟨(7p_2 - p_1²)/45, [N]⟩ = Sig(A)`.
pub fn wall_model_labeled(wp: &WallPair, labels: &[&str]) -> Result<RingModel> {
    wp.validate()?;
    let r = wp.rank();
    if labels.len() != r {
        return usage("wall_model: one label per basis element required");
    }
    let mut basis = vec![basis_el("1", 0)];
    basis.extend(labels.iter().map(|l| basis_el(l, 4)));
    basis.push(basis_el("top", 8));
    let n = basis.len();
    let top = n - 1;
    let mut products = BTreeMap::new();
    for i in 0..r {
        for j in i..r {
            if wp.a[i][j] != 0 {
                products.insert((i + 1, j + 1), vec![(top, rat(wp.a[i][j]))]);
            }
        }
    }
    let mut fundamental = vec![Rational::zero(); n];
    fundamental[top] = Rational::one();
    let mut p1 = RingElement::zero(n);
    for i in 0..r {
        p1.coeffs[i + 1] = rat(2 * wp.b[i]);
    }
    let p1_sq = rat(4 * wp.b_a_b());
    let p2_value = (rat(45 * wp.signature()) + p1_sq) / rat(7);
    let mut p2 = RingElement::zero(n);
    p2.coeffs[top] = p2_value;
    RingModel::new(
        8,
        basis,
        products,
        fundamental,
        vec![RingElement::basis(0, n), p1, p2],
    )
}

pub fn wall_model(wp: &WallPair) -> Result<RingModel> {
    let labels: Vec<String> = (1..=wp.rank()).map(|i| format!("e{i}")).collect();
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    wall_model_labeled(wp, &refs)
}

/// Pontryagin numbers of `M₁ = (B₁ + B₂)/72` and `M₂ = (-41B₁ + 31B₂)/72`
/// with `B₁ = (M_0^8)³` and `B₂ = (½M_0^{12})²`.
pub fn m1_m2_numbers() -> Result<(PontryaginNumbers, PontryaginNumbers)> {
    let (b1, b2) = (basis_b1().numbers(), basis_b2()?.numbers());
    let m1 = PontryaginNumbers::linear_combination(&[
        (Rational::new(1.into(), 72.into()), &b1),
        (Rational::new(1.into(), 72.into()), &b2),
    ])?;
    let m2 = PontryaginNumbers::linear_combination(&[
        (Rational::new((-41).into(), 72.into()), &b1),
        (Rational::new(31.into(), 72.into()), &b2),
    ])?;
    for (name, nums) in [("M1", &m1), ("M2", &m2)] {
        if nums.entries().any(|(_, v)| !v.is_integer()) {
            return Err(Error::Internal(format!("{name} has non-integral Pontryagin numbers")));
        }
    }
    Ok((m1, m2))
}

/// `B₁ = M_0^8 × M_0^8 × M_0^8`.
pub fn basis_b1() -> RingModel {
    let m8 = kervaire_milnor_model(2).expect("n = 2 in range");
    product_model(&product_model(&m8, &m8), &m8)
}

/// `B₂ = ½M_0^{12} × ½M_0^{12}`.
pub fn basis_b2() -> Result<RingModel> {
    let half = scale_top_class(&kervaire_milnor_model(3)?, &Rational::new(1.into(), 2.into()))?;
    Ok(product_model(&half, &half))
}

/// `B₃ = M_0^8 × M_0^{16}`.
pub fn basis_b3() -> Result<RingModel> {
    Ok(product_model(&kervaire_milnor_model(2)?, &kervaire_milnor_model(4)?))
}

/// `B₄ = ½M_0^{24}`.
pub fn basis_b4() -> Result<RingModel> {
    scale_top_class(&kervaire_milnor_model(6)?, &Rational::new(1.into(), 2.into()))
}

/// `M₃ = M_0^8 × 𝕆P²`.
pub fn m3_model() -> RingModel {
    product_model(&kervaire_milnor_model(2).expect("n = 2 in range"), &op2_model())
}

// ---------------------------------------------------------------------------
// manifests

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductEntry {
    pub left: String,
    pub right: String,
    pub result: BTreeMap<String, String>,
}

/// JSON form of a [`RingModel`]: basis with degrees, sparse structure
/// constants, fundamental values and Pontryagin pieces, all as linear
/// combinations of basis names with rational-string coefficients.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingManifest {
    pub dim: u32,
    pub basis: Vec<BasisElement>,
    pub products: Vec<ProductEntry>,
    pub fundamental: BTreeMap<String, String>,
    pub pontryagin: BTreeMap<String, BTreeMap<String, String>>,
}

fn combo_to_map(model: &RingModel, e: &RingElement) -> BTreeMap<String, String> {
    e.coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (model.basis[i].name.clone(), c.to_string()))
        .collect()
}

impl RingModel {
    pub fn to_manifest(&self) -> RingManifest {
        let products = self
            .products
            .iter()
            .map(|(&(i, j), terms)| {
                let mut e = self.zero();
                for (k, c) in terms {
                    e.coeffs[*k] += c;
                }
                ProductEntry {
                    left: self.basis[i].name.clone(),
                    right: self.basis[j].name.clone(),
                    result: combo_to_map(self, &e),
                }
            })
            .collect();
        let fundamental = combo_to_map(
            self,
            &RingElement {
                coeffs: self.fundamental.clone(),
            },
        );
        let pontryagin = self
            .pontryagin
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, p)| !p.is_zero())
            .map(|(k, p)| (k.to_string(), combo_to_map(self, p)))
            .collect();
        RingManifest {
            dim: self.dim,
            basis: self.basis.clone(),
            products,
            fundamental,
            pontryagin,
        }
    }

    pub fn from_manifest(m: &RingManifest) -> Result<RingModel> {
        let n = m.basis.len();
        let index = |name: &str| -> Result<usize> {
            m.basis
                .iter()
                .position(|b| b.name == name)
                .ok_or_else(|| Error::Parse(format!("unknown basis element {name:?}")))
        };
        let combo = |map: &BTreeMap<String, String>| -> Result<RingElement> {
            let mut e = RingElement::zero(n);
            for (name, v) in map {
                e.coeffs[index(name)?] += parse_rational(v)?;
            }
            Ok(e)
        };
        let mut products = BTreeMap::new();
        for entry in &m.products {
            let (i, j) = (index(&entry.left)?, index(&entry.right)?);
            let (lo, hi) = (i.min(j), i.max(j));
            let e = combo(&entry.result)?;
            let terms: Vec<(usize, Rational)> = e
                .coeffs
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            if products.insert((lo, hi), terms).is_some() {
                return Err(Error::Parse(format!(
                    "duplicate product {}·{}",
                    entry.left, entry.right
                )));
            }
        }
        let fundamental = combo(&m.fundamental)?.coeffs;
        let mut pont = vec![RingElement::zero(n); (m.dim / 4 + 1) as usize];
        if n > 0 {
            pont[0] = RingElement::basis(0, n);
        }
        for (k, map) in &m.pontryagin {
            let k: usize = k
                .parse()
                .map_err(|_| Error::Parse(format!("bad Pontryagin index {k:?}")))?;
            if k == 0 || k >= pont.len() {
                return Err(Error::Parse(format!("Pontryagin index {k} out of range")));
            }
            pont[k] = combo(map)?;
        }
        let model = RingModel::new(m.dim, m.basis.clone(), products, fundamental, pont)?;
        model.check_associative()?;
        Ok(model)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_manifest()).expect("manifest serializes")
    }
}

/// A loaded manifold: either a full ring model or Pontryagin numbers only.
#[derive(Clone, Debug)]
pub enum Manifold {
    Ring(RingModel),
    Numbers(PontryaginNumbers),
}

impl Manifold {
    pub fn numbers(&self) -> PontryaginNumbers {
        match self {
            Manifold::Ring(m) => m.numbers(),
            Manifold::Numbers(n) => n.clone(),
        }
    }

    pub fn dim(&self) -> u32 {
        match self {
            Manifold::Ring(m) => m.dim(),
            Manifold::Numbers(n) => n.dim(),
        }
    }

    /// Parses either manifest form.
    pub fn from_json(text: &str) -> Result<Manifold> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if value.get("basis").is_some() {
            let m: RingManifest =
                serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
            Ok(Manifold::Ring(RingModel::from_manifest(&m)?))
        } else {
            let n: PontryaginNumbers =
                serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
            Ok(Manifold::Numbers(n))
        }
    }

    pub fn to_json(&self) -> String {
        match self {
            Manifold::Ring(m) => m.to_json(),
            Manifold::Numbers(n) => {
                let v: serde_json::Value = serde_json::from_str(&n.to_json()).expect("valid json");
                serde_json::to_string_pretty(&v).expect("json")
            }
        }
    }
}

/// Names of the manifests shipped with the crate.
pub const BUILTIN_NAMES: [&str; 7] = ["M1", "M2", "M3", "M4", "M0_8", "OP2", "N8"];

/// A bundled manifest by name.
pub fn builtin_manifest(name: &str) -> Option<&'static str> {
    Some(match name {
        "M1" => include_str!("../manifests/M1.json"),
        "M2" => include_str!("../manifests/M2.json"),
        "M3" => include_str!("../manifests/M3.json"),
        "M4" => include_str!("../manifests/M4.json"),
        "M0_8" => include_str!("../manifests/M0_8.json"),
        "OP2" => include_str!("../manifests/OP2.json"),
        "N8" => include_str!("../manifests/N8.json"),
        _ => return None,
    })
}

/// Builds a named manifold from its construction instead of its bundled
/// manifest. The bundled files are exactly `reference_model(name).to_json()`.
pub fn reference_model(name: &str) -> Result<Manifold> {
    Ok(match name {
        "M1" => Manifold::Numbers(m1_m2_numbers()?.0),
        "M2" => Manifold::Numbers(m1_m2_numbers()?.1),
        "M3" => Manifold::Ring(m3_model()),
        "M4" => Manifold::Ring(crate::bundle::m4_model()?),
        "M0_8" => Manifold::Ring(kervaire_milnor_model(2)?),
        "OP2" => Manifold::Ring(op2_model()),
        "N8" => Manifold::Ring(crate::bundle::n8_model()?),
        _ => return Err(Error::Usage(format!("unknown built-in manifold {name:?}"))),
    })
}

pub fn builtin(name: &str) -> Result<Manifold> {
    let text = builtin_manifest(name)
        .ok_or_else(|| Error::Usage(format!("unknown built-in manifold {name:?}")))?;
    Manifold::from_json(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pnum(nums: &PontryaginNumbers, key: &str) -> Rational {
        nums.get(&key.parse().unwrap())
    }

    #[test]
    fn kervaire_milnor_generators() {
        assert_eq!(kervaire_milnor_top(1).unwrap(), BigInt::from(48));
        assert_eq!(kervaire_milnor_top(2).unwrap(), BigInt::from(1440));
        assert_eq!(kervaire_milnor_top(3).unwrap(), BigInt::from(120960));
        assert!(kervaire_milnor_model(0).is_err());
        assert!(kervaire_milnor_model(7).is_err());
        let sigs: Vec<Rational> = (1..=3)
            .map(|n| kervaire_milnor_model(n).unwrap().signature().unwrap())
            .collect();
        assert_eq!(sigs, vec![rat(16), rat(224), rat(7936)]);
    }

    #[test]
    fn cayley_plane() {
        let op2 = op2_model();
        let nums = op2.numbers();
        assert_eq!(pnum(&nums, "2,2"), rat(36));
        assert_eq!(pnum(&nums, "4"), rat(39));
        assert!(op2.pont(1).is_zero());
        assert_eq!(op2.signature().unwrap(), rat(1));
    }

    #[test]
    fn product_with_point_is_identity() {
        let x = op2_model();
        let xp = product_model(&x, &point());
        assert_eq!(xp.numbers(), x.numbers());
        assert_eq!(xp.basis(), x.basis());
    }

    #[test]
    fn m3_numbers() {
        let m3 = m3_model();
        let nums = m3.numbers();
        assert_eq!(pnum(&nums, "2,2,2"), rat(155520));
        assert_eq!(pnum(&nums, "4,2"), rat(108000));
        assert_eq!(pnum(&nums, "6"), rat(56160));
        assert_eq!(pnum(&nums, "3,3"), rat(0));
        assert_eq!(m3.signature().unwrap(), rat(224));
        m3.check_associative().unwrap();
    }

    #[test]
    fn fake_scaling() {
        let half = scale_top_class(&kervaire_milnor_model(3).unwrap(), &Rational::new(1.into(), 2.into())).unwrap();
        assert_eq!(half.pont(3), half.element("x").scale(&rat(60480)));
        let b2 = basis_b2().unwrap();
        assert_eq!(pnum(&b2.numbers(), "3,3"), rat(2) * rat(60480) * rat(60480));
        let b4 = basis_b4().unwrap();
        let expected = int(&(BigInt::from(65520) * factorial(11))) / rat(2);
        assert_eq!(pnum(&b4.numbers(), "6"), expected);
        assert!(scale_top_class(&m3_model(), &rat(2)).is_err());
    }

    #[test]
    fn wall_pair_for_m4_base() {
        let wp = WallPair::hyperbolic_plus_e8();
        wp.validate().unwrap();
        assert_eq!(wp.signature(), 8);
        assert_eq!(wp.b_a_b(), 8);
        let n8 = wall_model(&wp).unwrap();
        assert_eq!(n8.pont(2), n8.element("top").scale(&rat(56)));
        assert_eq!(n8.signature().unwrap(), rat(8));
        let (_, form) = n8.intersection_form();
        assert_eq!(linalg::signature(&form), 8);
    }

    #[test]
    fn wall_pair_rejections() {
        let bad_parity = WallPair::new(WallPair::e8_matrix(), vec![1, 0, 0, 0, 0, 0, 0, 0]);
        assert!(matches!(wall_model(&bad_parity), Err(Error::NotRealizable(_))));
        // E8 with b = 0: Sig = 8 but bAbᵀ = 0
        let bad_congruence = WallPair::new(WallPair::e8_matrix(), vec![0; 8]);
        assert!(matches!(bad_congruence.validate(), Err(Error::NotRealizable(_))));
        let not_unimodular = WallPair::new(vec![vec![2]], vec![0]);
        assert!(matches!(not_unimodular.validate(), Err(Error::NotRealizable(_))));
    }

    #[test]
    fn m1_m2_are_integral_and_string() {
        let (m1, m2) = m1_m2_numbers().unwrap();
        assert!(m1.is_string() && m2.is_string());
        assert_eq!(pnum(&m1, "2,2,2"), rat(8192 * 243 * 125));
        assert_eq!(pnum(&m2, "6"), rat(-512 * 81 * 25 * 121));
    }

    #[test]
    fn manifest_roundtrip() {
        let m3 = m3_model();
        let back = RingModel::from_manifest(&m3.to_manifest()).unwrap();
        assert_eq!(back, m3);
        let text = m3.to_json();
        match Manifold::from_json(&text).unwrap() {
            Manifold::Ring(m) => assert_eq!(m, m3),
            Manifold::Numbers(_) => panic!("expected ring manifest"),
        }
    }

    #[test]
    fn manifest_rejects_bad_degrees() {
        let text = r#"{"dim": 8, "basis": [{"name": "1", "degree": 0}, {"name": "x", "degree": 4}],
            "products": [{"left": "x", "right": "x", "result": {"x": "1"}}],
            "fundamental": {}, "pontryagin": {}}"#;
        assert!(Manifold::from_json(text).is_err());
    }
}
