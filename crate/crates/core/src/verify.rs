//! Named verification suites. Each suite recomputes a group of published
//! values from scratch and compares them exactly.

use std::fmt::Display;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::algebra::{
    expand_in_roots, factorial, parse_rational, rat, symmetric_reduce, GradedPoly, Partition,
    PontryaginNumbers, Rational, RootPoly,
};
use crate::bundle::{construct_m4, fiber_pontryagin, m4_model, m4_reference, n8_model, weyl_invariant_check, RootSystemData, DEFAULT_CAP};
use crate::error::{usage, Result};
use crate::genus::{ahat_genus, signature};
use crate::lattice::{
    basis_numbers, conjecture_sweep, decompose, divisibility_theorems, gcd_over_box,
    gcd_over_sublattice, invariant_values, kappa, sig_lambda2, CobordismVector, KappaData,
    SublatticeConstraint,
};
use crate::linalg;
use crate::manifold::{
    basis_b1, basis_b2, basis_b3, kervaire_milnor_model, kervaire_milnor_top, m3_model, op2_model,
    product_model, RingModel,
};
use crate::qforms::{delta, delta_bar, eisenstein_e4, eisenstein_e6, witten_direct, witten_modular};
use crate::series::Series;
use crate::twist::{ch_tangent, exterior_power, symmetric_power, twisted_ahat};

/// Outcome of one exact comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub suite: &'static str,
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

impl CheckResult {
    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        if self.passed {
            format!("{status} [{}] {}: {}", self.suite, self.name, self.actual)
        } else {
            format!(
                "{status} [{}] {}: expected {}, got {}",
                self.suite, self.name, self.expected, self.actual
            )
        }
    }
}

/// Suite names in acceptance order.
pub const SUITES: [&str; 10] = [
    "generators",
    "m1-m2",
    "m3",
    "fiber-class",
    "m4",
    "kappa",
    "witten",
    "divisibility",
    "sweep",
    "properties",
];

struct Suite {
    name: &'static str,
    out: Vec<CheckResult>,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Suite { name, out: Vec::new() }
    }

    fn eq<T: PartialEq + Display>(&mut self, name: impl Into<String>, expected: T, actual: T) {
        let passed = expected == actual;
        self.out.push(CheckResult {
            suite: self.name,
            name: name.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            passed,
        });
    }

    fn truth(&mut self, name: impl Into<String>, passed: bool, detail: impl Display) {
        self.out.push(CheckResult {
            suite: self.name,
            name: name.into(),
            expected: "true".into(),
            actual: detail.to_string(),
            passed,
        });
    }
}

/// `± ∏ p^e` as an exact rational.
fn factored(sign: i64, factors: &[(u64, u32)]) -> Rational {
    let n: BigInt = factors
        .iter()
        .map(|&(p, e)| num_traits::pow(BigInt::from(p), e as usize))
        .product();
    Rational::from_integer(n * sign)
}

fn poly(cap: u32, terms: &[(&str, &str)]) -> GradedPoly {
    GradedPoly::from_terms(
        cap,
        terms.iter().map(|(k, c)| {
            (
                k.parse::<Partition>().expect("valid partition literal"),
                parse_rational(c).expect("valid rational literal"),
            )
        }),
    )
}

fn num(nums: &PontryaginNumbers, key: &str) -> Rational {
    nums.get(&key.parse().expect("valid partition literal"))
}

pub fn run_suite(name: &str) -> Result<Vec<CheckResult>> {
    match name {
        "generators" => generators(),
        "m1-m2" => m1_m2(),
        "m3" => m3(),
        "fiber-class" => fiber_class(),
        "m4" => m4(),
        "kappa" => kappa_suite(),
        "witten" => witten(),
        "divisibility" => divisibility(),
        "sweep" => sweep(),
        "properties" => properties(),
        other => usage(format!(
            "unknown suite {other:?}; expected one of {}",
            SUITES.join(", ")
        )),
    }
}

pub fn run_all() -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for s in SUITES {
        out.extend(run_suite(s)?);
    }
    Ok(out)
}

fn generators() -> Result<Vec<CheckResult>> {
    let mut s = Suite::new("generators");
    for (n, top, sig) in [(1u32, 48i64, 16i64), (2, 1440, 224), (3, 120960, 7936)] {
        s.eq(format!("p{n}(M0^{})", 4 * n), BigInt::from(top), kervaire_milnor_top(n)?);
        let model = kervaire_milnor_model(n)?;
        s.eq(format!("Sig(M0^{})", 4 * n), rat(sig), model.signature()?);
    }
    Ok(s.out)
}

fn m1_m2() -> Result<Vec<CheckResult>> {
    let mut s = Suite::new("m1-m2");
    let basis = basis_numbers()?;
    let expected = [
        (0, "2,2,2", factored(1, &[(2, 13), (3, 5), (5, 3)])),
        (0, "3,3", factored(1, &[(2, 10), (3, 4), (5, 2), (7, 2)])),
        (0, "4,2", factored(1, &[(2, 12), (3, 5), (5, 3)])),
        (0, "6", factored(1, &[(2, 9), (3, 4), (5, 2), (89, 1)])),
        (1, "2,2,2", factored(-1, &[(2, 13), (3, 5), (5, 3), (41, 1)])),
        (1, "3,3", factored(1, &[(2, 10), (3, 4), (5, 2), (7, 2), (31, 1)])),
        (1, "4,2", factored(-1, &[(2, 12), (3, 5), (5, 3), (41, 1)])),
        (1, "6", factored(-1, &[(2, 9), (3, 4), (5, 2), (11, 2)])),
    ];
    for (i, key, want) in expected {
        s.eq(format!("M{} p[{key}]", i + 1), want, num(&basis[i], key));
    }
    for (i, nums) in basis.iter().take(2).enumerate() {
        s.truth(format!("M{} is String", i + 1), nums.is_string(), nums.is_string());
    }
    Ok(s.out)
}

fn m3() -> Result<Vec<CheckResult>> {
    let mut s = Suite::new("m3");
    let nums = m3_model().numbers();
    s.eq("M3 p[2,2,2]", factored(1, &[(2, 7), (3, 5), (5, 1)]), num(&nums, "2,2,2"));
    s.eq("M3 p[4,2]", factored(1, &[(2, 5), (3, 3), (5, 3)]), num(&nums, "4,2"));
    s.eq("M3 p[6]", factored(1, &[(2, 5), (3, 3), (5, 1), (13, 1)]), num(&nums, "6"));
    s.eq("M3 p[3,3]", rat(0), num(&nums, "3,3"));
    let l2 = exterior_power(2, &ch_tangent(24, DEFAULT_CAP)?)?;
    s.eq("Ahat(M3, L^2)", rat(-1), twisted_ahat(&nums, &l2)?);
    Ok(s.out)
}

/// The fiber class of the universal F₄–𝕆P² bundle, weights 0 through 6.
pub fn expected_fiber_class() -> GradedPoly {
    poly(
        DEFAULT_CAP,
        &[
            ("", "1"),
            ("1", "2"),
            ("2", "-1"),
            ("1,1", "7/4"),
            ("3", "2"),
            ("2,1", "-3/2"),
            ("1,1,1", "7/8"),
            ("4", "-17/2"),
            ("3,1", "2"),
            ("2,2", "3/8"),
            ("2,1,1", "-15/16"),
            ("1,1,1,1", "35/128"),
            ("4,1", "-5/2"),
            ("3,2", "-1"),
            ("3,1,1", "3/4"),
            ("2,2,1", "3/8"),
            ("2,1,1,1", "-5/16"),
            ("1,1,1,1,1", "7/128"),
            ("4,2", "-7/4"),
            ("4,1,1", "5/16"),
            ("3,3", "1"),
            ("3,2,1", "-1/2"),
            ("3,1,1,1", "1/8"),
            ("2,2,2", "-1/16"),
            ("2,2,1,1", "9/64"),
            ("2,1,1,1,1", "-15/256"),
            ("1,1,1,1,1,1", "7/1024"),
        ],
    )
}

fn fiber_class() -> Result<Vec<CheckResult>> {
    let mut s = Suite::new("fiber-class");
    let got = fiber_pontryagin(&RootSystemData::f4_spin9(), DEFAULT_CAP)?;
    let want = expected_fiber_class();
    for w in 0..=DEFAULT_CAP {
        s.eq(format!("weight {w}"), want.weight_part(w), got.weight_part(w));
    }
    let weyl = weyl_invariant_check()?;
    for &(w, a, b, both) in &weyl.spans {
        s.truth(
            format!("Weyl span weight {w}"),
            a == b && b == both,
            format!("invariants {a}, generators {b}, sum {both}"),
        );
    }
    Ok(s.out)
}

fn m4() -> Result<Vec<CheckResult>> {
    let mut s = Suite::new("m4");
    let n8 = n8_model()?;
    let a_sum = n8.element("a1").add(&n8.element("a2"));
    let a1a2 = n8.mul(&n8.element("a1"), &n8.element("a2"));
    let expected_n8 = n8.unit().add(&a_sum.scale(&rat(4))).add(&a1a2.scale(&rat(56)));
    s.eq("p(N8)", n8.format(&expected_n8), n8.format(&n8.total_pont()));

    for order in [4u32, 3] {
        let c = construct_m4(order)?;
        let r = &c.ring;
        let reference = m4_reference(r);
        let e = |name: &str| r.element(name);
        let a_sum = e("a1").add(&e("a2"));
        let a1a2 = r.mul(&e("a1"), &e("a2"));
        let u = e("u");
        let u2 = r.mul(&u, &u);
        if order == 3 {
            let want_q = [a_sum.scale(&rat(-1)), u.scale(&rat(3)), reference.q3.clone(), reference.q4.clone()];
            for (i, (w, g)) in want_q.iter().zip(&c.q_images).enumerate() {
                s.eq(format!("f*(q{})", i + 1), r.format(w), r.format(g));
            }
            let want_p = [
                a_sum.scale(&rat(-2)),
                u.scale(&rat(6)).add(&a1a2.scale(&rat(2))),
                r.mul(&a_sum, &u).scale(&rat(-2)),
                u2.scale(&rat(-3)),
            ];
            for (i, (w, g)) in want_p.iter().zip(&c.p_images).enumerate() {
                s.eq(format!("f*(p{})", i + 1), r.format(w), r.format(g));
            }
        }
        for (k, want) in reference.pont_pieces.iter().enumerate() {
            let k = k as u32 + 1;
            let got = r.degree_part(&c.total_pont, 4 * k);
            s.eq(format!("p{k}(M4), u^{order} = 0"), r.format(want), r.format(&got));
        }
    }

    let m4 = m4_model()?;
    let nums = m4.numbers();
    for (key, want) in [("2,2,2", 3888), ("3,3", 200), ("4,2", 2868), ("6", 1958)] {
        s.eq(format!("M4 p[{key}]"), rat(want), num(&nums, key));
    }
    s.truth("p1(M4) = 0", m4.pont(1).is_zero(), m4.format(&m4.pont(1)));
    s.eq("Sig(M4) by L-genus", rat(8), m4.signature()?);
    let product = n8.signature()? * op2_model().signature()?;
    s.eq("Sig(N8) Sig(OP2)", rat(8), product);
    let (_, form) = n8.intersection_form();
    s.eq("Sig of the intersection form", 8, linalg::signature(&form));
    Ok(s.out)
}

fn kappa_suite() -> Result<Vec<CheckResult>> {
    let mut s = Suite::new("kappa");
    let data = KappaData::compute()?;
    let want: [[i64; 4]; 4] = [
        [0, 1, 0, 0],
        [-1, 0, 0, 0],
        [1080, 218076, -1, 0],
        [46848, 47360, 28, 1],
    ];
    for (i, row) in want.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            s.eq(format!("K[{}][{}]", i + 1, j + 1), BigInt::from(v), data.k[i][j].clone());
        }
    }
    s.eq("det K", rat(-1), data.determinant());
    let factorizations = [
        ("1080", factored(1, &[(2, 3), (3, 3), (5, 1)]), 2, 0),
        ("218076", factored(1, &[(2, 2), (3, 1), (17, 1), (1069, 1)]), 2, 1),
        ("46848", factored(1, &[(2, 8), (3, 1), (61, 1)]), 3, 0),
        ("47360", factored(1, &[(2, 8), (5, 1), (37, 1)]), 3, 1),
        ("28", factored(1, &[(2, 2), (7, 1)]), 3, 2),
    ];
    for (label, value, i, j) in factorizations {
        s.eq(format!("K entry {label} factorization"), value, Rational::from_integer(data.k[i][j].clone()));
    }
    let vectors = [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [0, 0, 67, 3],
        [3, -5, 7, 11],
        [-2, 9, -4, 1],
    ];
    for v in vectors {
        let x = CobordismVector::new(v);
        let back = decompose(&x.numbers()?)?;
        s.eq(format!("decompose(numbers{x})"), x.to_string(), back.to_string());
        let k = kappa(&x.numbers()?)?;
        let via_inverse = data.solve_kappa(&k);
        let got = CobordismVector {
            x: [
                via_inverse[0].to_integer(),
                via_inverse[1].to_integer(),
                via_inverse[2].to_integer(),
                via_inverse[3].to_integer(),
            ],
        };
        let integral = via_inverse.iter().all(|c| c.is_integer());
        s.truth(format!("K^-1 kappa{x}"), integral && got == x, got);
    }
    Ok(s.out)
}

fn witten() -> Result<Vec<CheckResult>> {
    let mut s = Suite::new("witten");
    let basis = basis_numbers()?;
    let n = 5;
    s.eq("W(M1) = -24 Delta", delta(n).scale(&rat(-24)).coeffs().to_vec().iter().map(ToString::to_string).collect::<Vec<_>>().join(", "), witten_modular(&basis[0], n)?.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>().join(", "));
    s.eq("W(M2) = Delta bar", join(&delta_bar(n)), join(&witten_modular(&basis[1], n)?));
    for (i, nums) in basis.iter().enumerate() {
        let direct = witten_direct(nums, 2)?;
        let modular = witten_modular(nums, 2)?;
        s.eq(format!("direct = modular through q^2 on M{}", i + 1), join(&modular), join(&direct));
    }
    let zero = join(&Series::zero(n));
    s.eq("W(M3) = 0", zero.clone(), join(&witten_modular(&basis[2], n)?));
    s.eq("W(M4) = 0", zero, join(&witten_modular(&basis[3], n)?));
    Ok(s.out)
}

fn join(series: &Series) -> String {
    series.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn divisibility() -> Result<Vec<CheckResult>> {
    let mut s = Suite::new("divisibility");
    let sig = invariant_values(signature)?;
    let want_sig = [
        factored(1, &[(2, 11), (3, 1), (61, 1)]),
        factored(1, &[(2, 11), (5, 1), (37, 1)]),
        factored(1, &[(2, 5), (7, 1)]),
        factored(1, &[(2, 3)]),
    ];
    for (i, w) in want_sig.iter().enumerate() {
        s.eq(format!("Sig(M{})", i + 1), w.to_integer(), sig[i].clone());
    }
    let modsig = invariant_values(crate::lattice::modified_signature)?;
    let want_modsig = [
        factored(-1, &[(2, 10), (3, 1), (826753, 1)]),
        factored(-1, &[(2, 10), (5, 1), (23, 1), (668687, 1)]),
        factored(1, &[(2, 5), (7, 1)]),
        factored(-1, &[(2, 7), (3, 1), (13, 1)]),
    ];
    for (i, w) in want_modsig.iter().enumerate() {
        s.eq(format!("Sig(M{}, nu)", i + 1), w.to_integer(), modsig[i].clone());
    }
    let l2 = invariant_values(sig_lambda2)?;
    let want_l2 = [
        factored(1, &[(2, 13), (3, 1), (4013, 1)]),
        factored(-1, &[(2, 13), (3, 4), (1063, 1)]),
        factored(1, &[(2, 7), (3, 1), (7, 1), (23, 1)]),
        factored(1, &[(2, 5), (3, 1), (23, 1)]),
    ];
    for (i, w) in want_l2.iter().enumerate() {
        s.eq(format!("Sig(M{}, L^2)", i + 1), w.to_integer(), l2[i].clone());
    }
    for c in divisibility_theorems()? {
        s.truth(format!("{}: {}", c.name, c.claim), c.passed, c.computed);
    }
    Ok(s.out)
}

fn sweep() -> Result<Vec<CheckResult>> {
    let mut s = Suite::new("sweep");
    let rows = conjecture_sweep(5, 24)?;
    s.eq("rows with i+j+k <= 5", 56, rows.len());
    let bad: Vec<String> = rows
        .iter()
        .filter(|r| !r.divisible())
        .map(|r| format!("({},{},{})", r.i, r.j, r.k))
        .collect();
    s.truth(
        "all entries divisible by 24",
        bad.is_empty(),
        if bad.is_empty() { "56 of 56".to_string() } else { bad.join(" ") },
    );
    for (ijk, ahat) in [((1, 0, 0), -24i64), ((0, 2, 0), 1080), ((0, 0, 0), 0)] {
        let row = rows
            .iter()
            .find(|r| (r.i, r.j, r.k) == ijk)
            .expect("triple present in sweep");
        s.eq(format!("Ahat(M1, T^{} L^{} S^{})", ijk.0, ijk.1, ijk.2), ahat.to_string(), row.ahat.clone());
    }
    Ok(s.out)
}

// ---------------------------------------------------------------------------
// oracles

/// Pontryagin numbers of `X × Y` from the numbers of `X` and `Y` alone,
/// by splitting each `p_k` of the product as `Σ p_i(X) p_{k-i}(Y)`.
pub fn whitney_product_numbers(x: &PontryaginNumbers, y: &PontryaginNumbers) -> Result<PontryaginNumbers> {
    let (a, b) = (x.dim() / 4, y.dim() / 4);
    let mut out = PontryaginNumbers::new(x.dim() + y.dim())?;
    for lambda in Partition::all(a + b, a + b) {
        let mut total = Rational::zero();
        let parts = lambda.parts().to_vec();
        let mut split = vec![0u32; parts.len()];
        loop {
            let wx: u32 = split.iter().sum();
            if wx == a {
                let px = Partition::new(split.iter().copied().filter(|&i| i > 0).collect());
                let py = Partition::new(
                    parts.iter().zip(&split).map(|(k, i)| k - i).filter(|&j| j > 0).collect(),
                );
                total += x.get(&px) * y.get(&py);
            }
            // odometer over 0..=parts[s]
            let mut idx = 0;
            while idx < split.len() {
                if split[idx] < parts[idx] {
                    split[idx] += 1;
                    break;
                }
                split[idx] = 0;
                idx += 1;
            }
            if idx == split.len() {
                break;
            }
        }
        out.set(lambda, total);
    }
    Ok(out)
}

/// `exp(Σ c_i z_i)` in two root variables through degree `2·cap`.
fn exp_linear(coeffs: &[Rational], cap: u32) -> RootPoly {
    let lin = RootPoly::linear(coeffs, 2 * cap);
    let mut out = RootPoly::zero(coeffs.len(), 2 * cap);
    let mut power = RootPoly::one(coeffs.len(), 2 * cap);
    for n in 0..=2 * cap {
        out = &out + &power.scale(&Rational::new(BigInt::one(), factorial(n as u64)));
        power = &power * &lin;
    }
    out
}

/// `λ^j` (or `S^j`) of a rank-4 real bundle with roots `±z₁, ±z₂`, from
/// the elementary (or complete) symmetric functions of the line classes
/// `e^{±z₁}, e^{±z₂}`.
pub fn rank4_power_oracle(j: u32, symmetric: bool, cap: u32) -> Result<GradedPoly> {
    let lines: Vec<Vec<Rational>> = vec![
        vec![rat(1), rat(0)],
        vec![rat(-1), rat(0)],
        vec![rat(0), rat(1)],
        vec![rat(0), rat(-1)],
    ];
    let mut total = RootPoly::zero(2, 2 * cap);
    let mut choose = |combo: &[usize]| {
        let mut c = vec![rat(0), rat(0)];
        for &i in combo {
            c[0] += &lines[i][0];
            c[1] += &lines[i][1];
        }
        total = &total + &exp_linear(&c, cap);
    };
    fn combos(n: usize, k: usize, start: usize, repeat: bool, acc: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if acc.len() == k {
            f(acc);
            return;
        }
        for i in start..n {
            acc.push(i);
            combos(n, k, if repeat { i } else { i + 1 }, repeat, acc, f);
            acc.pop();
        }
    }
    combos(4, j as usize, 0, symmetric, &mut Vec::new(), &mut choose);
    symmetric_reduce(&total, 2)
}

fn random_poly(rng: &mut StdRng, cap: u32, max_part: u32) -> GradedPoly {
    let mut p = GradedPoly::zero(cap);
    for w in 0..=cap {
        for lambda in Partition::all(w, max_part) {
            if rng.gen_bool(0.6) {
                let c = Rational::new(rng.gen_range(-20i64..=20).into(), rng.gen_range(1i64..=9).into());
                p.add_term(lambda, c);
            }
        }
    }
    p
}

fn multiplicativity(s: &mut Suite) -> Result<()> {
    let m8 = kervaire_milnor_model(2)?;
    let pairs: Vec<(&str, RingModel, RingModel)> = vec![
        ("M0^8 x OP2", m8.clone(), op2_model()),
        ("M0^4 x M0^8", kervaire_milnor_model(1)?, m8.clone()),
        ("OP2 x OP2", op2_model(), op2_model()),
        ("M0^8 x M0^16", m8.clone(), kervaire_milnor_model(4)?),
    ];
    for (label, x, y) in pairs {
        let (nx, ny) = (x.numbers(), y.numbers());
        let prod = product_model(&x, &y).numbers();
        s.eq(format!("Sig multiplicative on {label}"), signature(&nx)? * signature(&ny)?, signature(&prod)?);
        s.eq(format!("Ahat multiplicative on {label}"), ahat_genus(&nx)? * ahat_genus(&ny)?, ahat_genus(&prod)?);
        let oracle = whitney_product_numbers(&nx, &ny)?;
        s.truth(format!("Whitney convolution on {label}"), oracle == prod, prod.to_json());
    }
    let b3 = basis_b3()?;
    let b3_oracle = whitney_product_numbers(&m8.numbers(), &kervaire_milnor_model(4)?.numbers())?;
    s.truth("Whitney convolution on B3", b3.numbers() == b3_oracle, b3.numbers().to_json());
    let b1 = basis_b1();
    let m8n = m8.numbers();
    let b1_oracle = whitney_product_numbers(&whitney_product_numbers(&m8n, &m8n)?, &m8n)?;
    s.truth("Whitney convolution on B1", b1.numbers() == b1_oracle, b1.numbers().to_json());
    let b2 = basis_b2()?;
    let half = crate::manifold::scale_top_class(&kervaire_milnor_model(3)?, &Rational::new(1.into(), 2.into()))?;
    let b2_oracle = whitney_product_numbers(&half.numbers(), &half.numbers())?;
    s.truth("Whitney convolution on B2", b2.numbers() == b2_oracle, b2.numbers().to_json());
    Ok(())
}

fn properties() -> Result<Vec<CheckResult>> {
    let mut s = Suite::new("properties");
    multiplicativity(&mut s)?;

    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut roundtrip_ok = 0;
    for _ in 0..50 {
        let nvars = rng.gen_range(2usize..=4);
        let cap = rng.gen_range(1u32..=4);
        let p = random_poly(&mut rng, cap, nvars as u32);
        if symmetric_reduce(&expand_in_roots(&p, nvars), nvars)? == p {
            roundtrip_ok += 1;
        }
    }
    s.eq("symmetric_reduce round trip on 50 random inputs", 50, roundtrip_ok);

    let cap = 4;
    let ch = ch_tangent(4, cap)?;
    for j in 0..=4 {
        s.eq(format!("rank 4 lambda^{j} oracle"), rank4_power_oracle(j, false, cap)?, exterior_power(j, &ch)?.total().clone());
    }
    for k in 0..=4 {
        s.eq(format!("rank 4 S^{k} oracle"), rank4_power_oracle(k, true, cap)?, symmetric_power(k, &ch)?.total().clone());
    }

    let sig = invariant_values(signature)?;
    let cases: Vec<(&str, Vec<SublatticeConstraint>)> = vec![
        ("Sig, no constraint", vec![]),
        ("Sig, nu2(p2^3) >= 6", vec![SublatticeConstraint::p2_cubed(2, 6)?]),
        ("Sig, nu3(p2^3) >= 6", vec![SublatticeConstraint::p2_cubed(3, 6)?]),
    ];
    for (label, cons) in cases {
        s.eq(format!("box oracle B=8: {label}"), gcd_over_box(&sig, &cons, 8), gcd_over_sublattice(&sig, &cons));
    }

    let n = 10;
    let e4 = eisenstein_e4(n);
    let e6 = eisenstein_e6(n);
    let oracle = (&e4.pow(3) - &e6.pow(2)).scale(&Rational::new(1.into(), 1728.into()));
    s.eq("Delta = (E4^3 - E6^2)/1728 through q^10", join(&oracle), join(&delta(n)));
    Ok(s.out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_a_usage_error() {
        assert!(run_suite("nope").is_err());
    }

    #[test]
    fn whitney_oracle_on_small_product() {
        let x = kervaire_milnor_model(1).unwrap();
        let prod = product_model(&x, &x).numbers();
        let oracle = whitney_product_numbers(&x.numbers(), &x.numbers()).unwrap();
        assert_eq!(prod, oracle);
        assert_eq!(num(&prod, "1,1"), rat(2 * 48 * 48));
    }

    #[test]
    fn rank4_lambda_oracle_matches_rank() {
        let l2 = rank4_power_oracle(2, false, 2).unwrap();
        assert_eq!(l2.constant_term(), rat(6));
        let s2 = rank4_power_oracle(2, true, 2).unwrap();
        assert_eq!(s2.constant_term(), rat(10));
    }
}
