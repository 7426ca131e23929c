//! Borel–Hirzebruch computation for the universal F₄–𝕆P² bundle
//! `𝕆P² → BSpin(9) → BF₄` and the 24-dimensional String manifold M₄ built
//! from it.
//!
//! The tangent bundle along the fiber has total Pontryagin class
//! `∏ (1 + r²)` over the roots of F₄ complementary to those of Spin(9),
//! namely `r = ½(x₁ ± x₂ ± x₃ ± x₄)`. Reducing that product symmetrically
//! expresses it in `p₁, …, p₄` of BSpin(9). M₄ is the pullback of the
//! bundle over a Wall 8-manifold N⁸; its Pontryagin class is
//! `π*p(N⁸) · f̃*p(Θ^Δ)`.

use serde::{Deserialize, Serialize};

use num_traits::{One, Zero};

use crate::algebra::{parse_rational, rat, ratio, symmetric_reduce, GradedPoly, Partition, Rational, RootPoly};
use crate::error::{usage, Error, Result};
use crate::linalg::{self, Matrix};
use crate::manifold::{extend_truncated, op2_model, wall_model_labeled, RingElement, RingModel, WallPair};

/// Weight cap used for 24-manifolds (`p₁, …, p₆`).
pub const DEFAULT_CAP: u32 = 6;

/// Rank of the maximal torus and one representative of each `±` pair of
/// complementary roots, written in the torus coordinates `x₁, …, x_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystemData {
    pub n_torus: usize,
    pub complementary_roots: Vec<Vec<Rational>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRootSystem {
    n_torus: usize,
    complementary_roots: Vec<Vec<String>>,
}

impl RootSystemData {
    pub fn new(n_torus: usize, complementary_roots: Vec<Vec<Rational>>) -> Result<Self> {
        let rsd = RootSystemData {
            n_torus,
            complementary_roots,
        };
        rsd.validate()?;
        Ok(rsd)
    }

    /// F₄ over Spin(9): the eight roots `½(x₁ ± x₂ ± x₃ ± x₄)`.
    pub fn f4_spin9() -> Self {
        let half = ratio(1, 2);
        let roots = (0..8u32)
            .map(|mask| {
                let mut v = vec![half.clone()];
                for bit in 0..3 {
                    v.push(if mask >> bit & 1 == 1 { -&half } else { half.clone() });
                }
                v
            })
            .collect();
        RootSystemData {
            n_torus: 4,
            complementary_roots: roots,
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (i, r) in self.complementary_roots.iter().enumerate() {
            if r.len() != self.n_torus {
                return usage(format!(
                    "root {i} has {} coordinates, expected {}",
                    r.len(),
                    self.n_torus
                ));
            }
            if r.iter().all(Zero::is_zero) {
                return usage(format!("root {i} is zero"));
            }
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawRootSystem =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let roots = raw
            .complementary_roots
            .iter()
            .map(|r| r.iter().map(|c| parse_rational(c)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(raw.n_torus, roots)
    }

    pub fn to_json(&self) -> String {
        let raw = RawRootSystem {
            n_torus: self.n_torus,
            complementary_roots: self
                .complementary_roots
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect(),
        };
        serde_json::to_string(&raw).expect("root data serializes")
    }
}

/// `∏_j (1 + b_j²)` over the complementary roots, reduced to Pontryagin
/// classes of the torus coordinates, through weight `cap`.
pub fn fiber_pontryagin(rsd: &RootSystemData, cap: u32) -> Result<GradedPoly> {
    rsd.validate()?;
    let n = rsd.n_torus;
    let one = RootPoly::one(n, 2 * cap);
    let mut prod = one.clone();
    for root in &rsd.complementary_roots {
        let b = RootPoly::linear(root, 2 * cap);
        prod = &prod * &(&one + &b.pow(2));
    }
    symmetric_reduce(&prod, n)
}

fn check_spin_weight(poly: &GradedPoly, what: &str) -> Result<()> {
    if poly.terms().any(|(l, _)| l.largest_part() > 4) {
        return usage(format!(
            "{what}: conversion between Spin and Pontryagin classes is only known through q₄/p₄"
        ));
    }
    Ok(())
}

/// `p₁, …, p₄` written in `q₁, …, q₄`.
fn pont_in_spin(cap: u32) -> Vec<GradedPoly> {
    let q = |i: u32| GradedPoly::generator(i, cap);
    let (q1, q2, q3, q4) = (q(1), q(2), q(3), q(4));
    vec![
        q1.scale(&rat(2)),
        &q2.scale(&rat(2)) + &(&q1 * &q1),
        q3.clone(),
        &(&q4.scale(&rat(2)) + &(&q2 * &q2)) - &(&q1 * &q3).scale(&rat(2)),
    ]
}

/// `q₁, …, q₄` written in `p₁, …, p₄`, inverting [`pont_in_spin`] step by step.
fn spin_in_pont(cap: u32) -> Vec<GradedPoly> {
    let p = |i: u32| GradedPoly::generator(i, cap);
    let half = ratio(1, 2);
    let q1 = p(1).scale(&half);
    let q2 = (&p(2) - &(&q1 * &q1)).scale(&half);
    let q3 = p(3);
    let q4 = (&(&p(4) - &(&q2 * &q2)) + &(&q1 * &q3).scale(&rat(2))).scale(&half);
    vec![q1, q2, q3, q4]
}

/// Rewrites a polynomial in Spin classes `q_i` as one in Pontryagin classes.
pub fn spin_to_pont(q_expr: &GradedPoly) -> Result<GradedPoly> {
    check_spin_weight(q_expr, "spin_to_pont")?;
    q_expr.substitute(&spin_in_pont(q_expr.cap()))
}

/// Rewrites a polynomial in Pontryagin classes `p_i` as one in Spin classes.
pub fn pont_to_spin(p_expr: &GradedPoly) -> Result<GradedPoly> {
    check_spin_weight(p_expr, "pont_to_spin")?;
    p_expr.substitute(&pont_in_spin(p_expr.cap()))
}

/// Images of `p₃` and `p₄` forced by the vanishing of the F₄ invariants
/// `-6p₃ + p₁p₂` and `12p₄ + p₂² - ½p₁²p₂` under the classifying map.
pub fn pullback_solver(
    img_p1: &RingElement,
    img_p2: &RingElement,
    target: &RingModel,
) -> (RingElement, RingElement) {
    let p1p2 = target.mul(img_p1, img_p2);
    let img_p3 = p1p2.scale(&ratio(1, 6));
    let p2sq = target.mul(img_p2, img_p2);
    let p1sq_p2 = target.mul(img_p1, &p1p2);
    let img_p4 = p1sq_p2.scale(&ratio(1, 2)).sub(&p2sq).scale(&ratio(1, 12));
    (img_p3, img_p4)
}

/// Every intermediate object of the M₄ construction.
#[derive(Clone, Debug)]
pub struct M4Construction {
    pub wall_pair: WallPair,
    pub n8: RingModel,
    /// `H*(N⁸) ⊗ ℚ[u₈]/u₈^order`, with `p` still that of N⁸.
    pub ring: RingModel,
    pub fiber_class: GradedPoly,
    /// `f̃*(q₁), …, f̃*(q₄)`.
    pub q_images: Vec<RingElement>,
    /// `f̃*(p₁), …, f̃*(p₄)`.
    pub p_images: Vec<RingElement>,
    /// `π*p(N⁸) · f̃*p(Θ^Δ)`.
    pub total_pont: RingElement,
}

/// Labels of the `H⁴(N⁸)` basis: the hyperbolic pair then the E₈ block.
pub fn n8_labels() -> Vec<String> {
    let mut labels = vec!["a1".to_string(), "a2".to_string()];
    labels.extend((1..=8).map(|j| format!("b{j}")));
    labels
}

/// The Wall manifold N⁸ realizing `(diag(H, E₈), (2, 2, 0, …, 0))`.
pub fn n8_model() -> Result<RingModel> {
    let labels = n8_labels();
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    wall_model_labeled(&WallPair::hyperbolic_plus_e8(), &refs)
}

/// Runs the construction in the ring where `u₈^order = 0`. The geometric
/// ring of M₄ has `order = 3`; a larger order keeps terms that the relation
/// `u₈³ = 0` would kill.
pub fn construct_m4(order: u32) -> Result<M4Construction> {
    let wall_pair = WallPair::hyperbolic_plus_e8();
    let n8 = n8_model()?;
    let ring = extend_truncated(&n8, "u", 8, order)?;
    let fiber_class = fiber_pontryagin(&RootSystemData::f4_spin9(), DEFAULT_CAP)?;

    let a_sum = ring.element("a1").add(&ring.element("a2"));
    let q1 = a_sum.scale(&rat(-1));
    let q2 = ring.element("u").scale(&rat(3));
    let p_in_q = pont_in_spin(2);
    let img_p1 = ring.evaluate_poly(&p_in_q[0], &[q1.clone(), q2.clone()])?;
    let img_p2 = ring.evaluate_poly(&p_in_q[1], &[q1.clone(), q2.clone()])?;
    let (img_p3, img_p4) = pullback_solver(&img_p1, &img_p2, &ring);
    let p_images = vec![img_p1, img_p2, img_p3, img_p4];

    let q_in_p = spin_in_pont(4);
    let q_images = q_in_p
        .iter()
        .map(|q| ring.evaluate_poly(q, &p_images))
        .collect::<Result<Vec<_>>>()?;

    let fiber_image = ring.evaluate_poly(&fiber_class, &p_images)?;
    let base = ring.total_pont();
    let total_pont = ring.mul(&base, &fiber_image);
    Ok(M4Construction {
        wall_pair,
        n8,
        ring,
        fiber_class,
        q_images,
        p_images,
        total_pont,
    })
}

/// Reference values for the M₄ construction, written as ring elements of
/// `ring` (any order ≥ 3). Returned as `(q₃, q₄)` images and the five
/// positive-degree pieces of `p(M₄)` before applying `u₈³ = 0`.
pub struct M4Reference {
    pub q3: RingElement,
    pub q4: RingElement,
    pub pont_pieces: Vec<RingElement>,
}

pub fn m4_reference(ring: &RingModel) -> M4Reference {
    let e = |name: &str| ring.element(name);
    let a_sum = e("a1").add(&e("a2"));
    let a1a2 = ring.mul(&e("a1"), &e("a2"));
    let u = e("u");
    let u2 = ring.mul(&u, &u);
    let u3 = ring.mul(&u2, &u);
    let q3 = ring.mul(&a_sum, &u).scale(&rat(-2));
    let q4 = u2.scale(&rat(-6)).add(&ring.mul(&a1a2, &u).scale(&rat(4)));
    let pont_pieces = vec![
        ring.zero(),
        a1a2.scale(&rat(36)).sub(&u.scale(&rat(6))),
        ring.mul(&a_sum, &u).scale(&rat(-10)),
        ring.mul(&a1a2.scale(&rat(-244)).add(&u.scale(&rat(39))), &u),
        ring.mul(&a_sum, &u2).scale(&rat(126)),
        ring.mul(&a1a2, &u2).scale(&rat(1958)).add(&u3.scale(&rat(18))),
    ];
    M4Reference { q3, q4, pont_pieces }
}

fn mismatch(what: &str, ring: &RingModel, got: &RingElement, want: &RingElement) -> Error {
    Error::Internal(format!(
        "M4 cross-check failed for {what}: computed {}, expected {}",
        ring.format(got),
        ring.format(want)
    ))
}

/// Compares the six positive-degree pieces of `total` with the reference.
fn check_pieces(c: &M4Construction, reference: &M4Reference) -> Result<()> {
    for (k, want) in reference.pont_pieces.iter().enumerate() {
        let k = k as u32 + 1;
        let got = c.ring.degree_part(&c.total_pont, 4 * k);
        if &got != want {
            return Err(mismatch(&format!("p{k}(M4)"), &c.ring, &got, want));
        }
    }
    Ok(())
}

/// The String manifold M₄ as a ring model, after all internal checks:
/// `p₁ = 0`, the derived `q₃, q₄` images, the graded pieces of `p(M₄)`
/// both with `u₈⁴ = 0` and with `u₈³ = 0`, and signature 8 both from the
/// L-genus and as `Sig(N⁸)·Sig(𝕆P²)`.
pub fn m4_model() -> Result<RingModel> {
    let wide = construct_m4(4)?;
    let wide_ref = m4_reference(&wide.ring);
    check_pieces(&wide, &wide_ref)?;

    let c = construct_m4(3)?;
    let reference = m4_reference(&c.ring);
    for (name, got, want) in [("q3", &c.q_images[2], &reference.q3), ("q4", &c.q_images[3], &reference.q4)] {
        if got != want {
            return Err(mismatch(name, &c.ring, got, want));
        }
    }
    check_pieces(&c, &reference)?;
    let m4 = c.ring.with_total_pont(&c.total_pont)?;
    if !m4.pont(1).is_zero() {
        return Err(Error::Internal("p1(M4) is not zero".into()));
    }
    let sig = m4.signature()?;
    let product = rat(c.wall_pair.signature()) * op2_model().signature()?;
    if sig != rat(8) || product != sig {
        return Err(Error::Internal(format!(
            "Sig(M4): L-genus gives {sig}, Sig(N8)·Sig(OP2) gives {product}"
        )));
    }
    Ok(m4)
}

/// Outcome of comparing the F₄ Weyl invariants with the three generators
/// `p₁`, `-6p₃ + p₁p₂`, `12p₄ + p₂² - ½p₁²p₂` through weight 4.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylReport {
    /// `I₂, I₆, I₈` in Pontryagin classes.
    pub invariants: Vec<(u32, GradedPoly)>,
    /// `(weight, dim span I, dim span generators, dim of their sum)`.
    pub spans: Vec<(u32, usize, usize, usize)>,
}

impl WeylReport {
    pub fn passed(&self) -> bool {
        self.spans.iter().all(|&(_, a, b, s)| a == b && b == s)
    }
}

/// `I_{2k} = Σ x_i^{2k} + Σ_j r_j^{2k}` in Pontryagin classes.
pub fn weyl_invariant(k: u32, cap: u32) -> Result<GradedPoly> {
    if 2 * k > 2 * cap {
        return usage("weyl_invariant: degree exceeds the cap");
    }
    let rsd = RootSystemData::f4_spin9();
    let n = rsd.n_torus;
    let mut sum = RootPoly::power_sum(2 * k, n, 2 * cap);
    for root in &rsd.complementary_roots {
        sum = &sum + &RootPoly::linear(root, 2 * cap).pow(2 * k);
    }
    symmetric_reduce(&sum, n)
}

/// Monomials of the given weight in generators of the given weights.
fn monomials(gens: &[(u32, GradedPoly)], weight: u32, cap: u32) -> Vec<GradedPoly> {
    fn go(gens: &[(u32, GradedPoly)], start: usize, left: u32, acc: GradedPoly, out: &mut Vec<GradedPoly>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for (i, (w, g)) in gens.iter().enumerate().skip(start) {
            if *w <= left {
                go(gens, i, left - w, &acc * g, out);
            }
        }
    }
    let mut out = Vec::new();
    go(gens, 0, weight, GradedPoly::one(cap), &mut out);
    out
}

fn span_rank(polys: &[GradedPoly], weight: u32) -> usize {
    let cols = Partition::all(weight, weight);
    let m: Matrix = polys
        .iter()
        .map(|p| cols.iter().map(|l| p.coeff(l)).collect())
        .collect();
    if m.is_empty() {
        0
    } else {
        linalg::rank(&m)
    }
}

pub fn weyl_invariant_check() -> Result<WeylReport> {
    let cap = 4;
    let invariants: Vec<(u32, GradedPoly)> = [1u32, 3, 4]
        .iter()
        .map(|&w| Ok((w, weyl_invariant(w, cap)?)))
        .collect::<Result<_>>()?;
    let p = |i: u32| GradedPoly::generator(i, cap);
    let generators = vec![
        (1, p(1)),
        (3, &p(3).scale(&rat(-6)) + &(&p(1) * &p(2))),
        (
            4,
            &(&p(4).scale(&rat(12)) + &(&p(2) * &p(2))) - &(&(&p(1) * &p(1)) * &p(2)).scale(&ratio(1, 2)),
        ),
    ];
    let spans = (1..=cap)
        .map(|w| {
            let a = monomials(&invariants, w, cap);
            let b = monomials(&generators, w, cap);
            let both: Vec<GradedPoly> = a.iter().chain(&b).cloned().collect();
            (w, span_rank(&a, w), span_rank(&b, w), span_rank(&both, w))
        })
        .collect();
    let report = WeylReport { invariants, spans };
    if let Some(&(w, a, b, s)) = report.spans.iter().find(|&&(_, a, b, s)| !(a == b && b == s)) {
        return Err(Error::Internal(format!(
            "Weyl invariant span mismatch at weight {w}: {a} vs {b} (sum {s})"
        )));
    }
    Ok(report)
}

/// Fiber class of an empty root system.
pub fn trivial_fiber_class(cap: u32) -> GradedPoly {
    GradedPoly::constant(Rational::one(), cap)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cap: u32, terms: &[(&str, Rational)]) -> GradedPoly {
        GradedPoly::from_terms(cap, terms.iter().map(|(k, c)| (k.parse().unwrap(), c.clone())))
    }

    #[test]
    fn fiber_class_low_weights() {
        let f = fiber_pontryagin(&RootSystemData::f4_spin9(), 4).unwrap();
        assert_eq!(f.weight_part(1), poly(4, &[("1", rat(2))]));
        assert_eq!(f.weight_part(2), poly(4, &[("2", rat(-1)), ("1,1", ratio(7, 4))]));
        assert_eq!(
            f.weight_part(4),
            poly(
                4,
                &[
                    ("4", ratio(-17, 2)),
                    ("3,1", rat(2)),
                    ("2,2", ratio(3, 8)),
                    ("2,1,1", ratio(-15, 16)),
                    ("1,1,1,1", ratio(35, 128)),
                ]
            )
        );
    }

    #[test]
    fn empty_root_list_gives_one() {
        let rsd = RootSystemData::new(3, vec![]).unwrap();
        assert_eq!(fiber_pontryagin(&rsd, 3).unwrap(), trivial_fiber_class(3));
    }

    #[test]
    fn root_data_json_roundtrip() {
        let rsd = RootSystemData::f4_spin9();
        assert_eq!(RootSystemData::from_json(&rsd.to_json()).unwrap(), rsd);
        assert!(RootSystemData::from_json(r#"{"n_torus": 2, "complementary_roots": [["0", "0"]]}"#).is_err());
    }

    #[test]
    fn spin_conversions() {
        let q1 = GradedPoly::generator(1, 4);
        assert_eq!(spin_to_pont(&q1).unwrap(), GradedPoly::generator(1, 4).scale(&ratio(1, 2)));
        for i in 1..=4 {
            let p = GradedPoly::generator(i, 4);
            assert_eq!(spin_to_pont(&pont_to_spin(&p).unwrap()).unwrap(), p);
        }
        assert!(pont_to_spin(&GradedPoly::generator(5, 6)).is_err());
    }

    #[test]
    fn n8_pontryagin_class() {
        let n8 = n8_model().unwrap();
        let a_sum = n8.element("a1").add(&n8.element("a2"));
        assert_eq!(n8.pont(1), a_sum.scale(&rat(4)));
        let a1a2 = n8.mul(&n8.element("a1"), &n8.element("a2"));
        assert_eq!(n8.pont(2), a1a2.scale(&rat(56)));
    }

    #[test]
    fn pullback_images() {
        let c = construct_m4(3).unwrap();
        let r = &c.ring;
        let a_sum = r.element("a1").add(&r.element("a2"));
        let a1a2 = r.mul(&r.element("a1"), &r.element("a2"));
        let u = r.element("u");
        assert_eq!(c.p_images[0], a_sum.scale(&rat(-2)));
        assert_eq!(c.p_images[1], u.scale(&rat(6)).add(&a1a2.scale(&rat(2))));
        assert_eq!(c.p_images[2], r.mul(&a_sum, &u).scale(&rat(-2)));
        assert_eq!(c.p_images[3], r.mul(&u, &u).scale(&rat(-3)));
        let zero = r.zero();
        assert_eq!(pullback_solver(&zero, &zero, r), (zero.clone(), zero));
    }

    #[test]
    fn m4_numbers() {
        let m4 = m4_model().unwrap();
        let nums = m4.numbers();
        let get = |k: &str| nums.get(&k.parse().unwrap());
        assert_eq!(get("2,2,2"), rat(3888));
        assert_eq!(get("3,3"), rat(200));
        assert_eq!(get("4,2"), rat(2868));
        assert_eq!(get("6"), rat(1958));
        assert!(nums.is_string());
    }

    #[test]
    fn weyl_invariants() {
        let report = weyl_invariant_check().unwrap();
        assert!(report.passed());
        assert_eq!(report.invariants[0].1, GradedPoly::generator(1, 4).scale(&rat(3)));
        let dims: Vec<usize> = report.spans.iter().map(|s| s.1).collect();
        assert_eq!(dims, vec![1, 1, 2, 3]);
    }
}
