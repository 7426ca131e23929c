//! The lattice `Ω₂₄^String ≅ ℤ⁴` in the basis M₁, M₂, M₃, M₄.
//!
//! `κ = (Â, Â(·,T)/24, Â(·,Λ²), Sig/8)` is an isomorphism onto ℤ⁴ whose
//! matrix in this basis is `K`. Divisibility statements for characteristic
//! numbers under hypotheses on `p₂` reduce to gcd computations over
//! sublattices cut out by congruences on the `p₂³` functional.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{int, pair, rat, valuation, GradedPoly, Partition, PontryaginNumbers, Rational};
use crate::bundle::{m4_model, DEFAULT_CAP};
use crate::error::{usage, Error, Result};
use crate::genus::{ahat_genus, signature, wu_spin_class};
use crate::linalg::{self, Matrix};
use crate::manifold::{m1_m2_numbers, m3_model};
use crate::qforms::ahat_tangent;
use crate::twist::{ch_tangent, exterior_power, twisted_ahat, twisted_sig, TwistExpr};

/// Number-level key of `p₂³`, the functional used for hypotheses on `p₂`.
pub fn p2_cubed() -> Partition {
    Partition::new(vec![2, 2, 2])
}

/// The four String partitions of 6 in the order used for decomposition.
pub fn string_partitions() -> [Partition; 4] {
    [
        Partition::new(vec![2, 2, 2]),
        Partition::new(vec![4, 2]),
        Partition::new(vec![3, 3]),
        Partition::new(vec![6]),
    ]
}

/// Pontryagin numbers of M₁, M₂, M₃, M₄, computed once.
pub fn basis_numbers() -> Result<&'static [PontryaginNumbers; 4]> {
    static CELL: OnceLock<std::result::Result<[PontryaginNumbers; 4], Error>> = OnceLock::new();
    CELL.get_or_init(|| {
        let (m1, m2) = m1_m2_numbers()?;
        let m3 = m3_model().numbers();
        let m4 = m4_model()?.numbers();
        Ok([m1, m2, m3, m4])
    })
    .as_ref()
    .map_err(Clone::clone)
}

fn check_string_24(nums: &PontryaginNumbers) -> Result<()> {
    if nums.dim() != 24 {
        return usage(format!("expected a 24-dimensional manifold, got dimension {}", nums.dim()));
    }
    if !nums.is_string() {
        return Err(Error::NotString(
            "a Pontryagin number involving p1 is nonzero".into(),
        ));
    }
    Ok(())
}

/// `Â(M, Λ²T)`.
pub fn ahat_lambda2(nums: &PontryaginNumbers) -> Result<Rational> {
    let l2 = exterior_power(2, &ch_tangent(nums.dim(), nums.dim() / 4)?)?;
    twisted_ahat(nums, &l2)
}

/// `Sig(M, Λ²T)`.
pub fn sig_lambda2(nums: &PontryaginNumbers) -> Result<Rational> {
    let l2 = exterior_power(2, &ch_tangent(nums.dim(), nums.dim() / 4)?)?;
    twisted_sig(nums, &l2)
}

/// `κ(M) = (Â, Â(M,T)/24, Â(M,Λ²), Sig/8)`.
pub fn kappa(nums: &PontryaginNumbers) -> Result<[Rational; 4]> {
    check_string_24(nums)?;
    Ok([
        ahat_genus(nums)?,
        ahat_tangent(nums)? / rat(24),
        ahat_lambda2(nums)?,
        signature(nums)? / rat(8),
    ])
}

/// `K` with columns `κ(M_i)`, its inverse and the basis numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KappaData {
    pub k: Vec<Vec<BigInt>>,
    pub k_inv: Matrix,
    pub basis_numbers: Vec<PontryaginNumbers>,
}

impl KappaData {
    pub fn compute() -> Result<KappaData> {
        let basis = basis_numbers()?;
        let mut k = vec![vec![BigInt::zero(); 4]; 4];
        for (col, nums) in basis.iter().enumerate() {
            for (row, v) in kappa(nums)?.iter().enumerate() {
                if !v.is_integer() {
                    return Err(Error::Internal(format!(
                        "κ(M{}) has non-integral entry {v}",
                        col + 1
                    )));
                }
                k[row][col] = v.to_integer();
            }
        }
        let km: Matrix = k.iter().map(|r| r.iter().map(int).collect()).collect();
        let k_inv = linalg::inverse(&km)
            .ok_or_else(|| Error::Internal("K is singular".into()))?;
        Ok(KappaData {
            k,
            k_inv,
            basis_numbers: basis.to_vec(),
        })
    }

    pub fn determinant(&self) -> Rational {
        let km: Matrix = self.k.iter().map(|r| r.iter().map(int).collect()).collect();
        linalg::determinant(&km)
    }

    /// `x = K⁻¹ y` for a κ-target `y`.
    pub fn solve_kappa(&self, y: &[Rational; 4]) -> Vec<Rational> {
        linalg::mat_vec(&self.k_inv, y)
    }
}

/// Integer coordinates in the basis M₁, …, M₄.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CobordismVector {
    pub x: [BigInt; 4],
}

impl CobordismVector {
    pub fn new(x: [i64; 4]) -> Self {
        CobordismVector {
            x: x.map(BigInt::from),
        }
    }

    /// `Σ x_i · numbers(M_i)`.
    pub fn numbers(&self) -> Result<PontryaginNumbers> {
        let basis = basis_numbers()?;
        let terms: Vec<(Rational, &PontryaginNumbers)> =
            self.x.iter().zip(basis.iter()).map(|(c, n)| (int(c), n)).collect();
        PontryaginNumbers::linear_combination(&terms)
    }

    /// `Σ x_i · values_i`.
    pub fn dot(&self, values: &[BigInt; 4]) -> BigInt {
        self.x.iter().zip(values).map(|(a, b)| a * b).sum()
    }
}

impl fmt::Display for CobordismVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.x[0], self.x[1], self.x[2], self.x[3])
    }
}

/// Rational coordinates of a String number vector in the basis M₁..M₄.
pub fn decompose_rational(nums: &PontryaginNumbers) -> Result<Vec<Rational>> {
    check_string_24(nums)?;
    let basis = basis_numbers()?;
    let keys = string_partitions();
    let m: Matrix = keys
        .iter()
        .map(|key| basis.iter().map(|b| b.get(key)).collect())
        .collect();
    let rhs: Vec<Rational> = keys.iter().map(|key| nums.get(key)).collect();
    linalg::solve(&m, &rhs).ok_or_else(|| Error::Internal("basis number matrix is singular".into()))
}

/// Integer coordinates, or `NotIntegral` carrying the rational solution.
pub fn decompose(nums: &PontryaginNumbers) -> Result<CobordismVector> {
    let x = decompose_rational(nums)?;
    if x.iter().any(|c| !c.is_integer()) {
        return Err(Error::NotIntegral(x));
    }
    let ints: Vec<BigInt> = x.iter().map(|c| c.to_integer()).collect();
    Ok(CobordismVector {
        x: [ints[0].clone(), ints[1].clone(), ints[2].clone(), ints[3].clone()],
    })
}

/// `ν_p(Σ functional_i x_i) ≥ min_valuation`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SublatticeConstraint {
    pub functional: [BigInt; 4],
    pub prime: u64,
    pub min_valuation: u32,
}

impl SublatticeConstraint {
    pub fn new(functional: [BigInt; 4], prime: u64, min_valuation: u32) -> Self {
        SublatticeConstraint {
            functional,
            prime,
            min_valuation,
        }
    }

    /// `ν_p(p₂³[M]) ≥ e` on the basis M₁..M₄.
    pub fn p2_cubed(prime: u64, min_valuation: u32) -> Result<Self> {
        Ok(Self::new(basis_values(&p2_cubed())?, prime, min_valuation))
    }

    pub fn modulus(&self) -> BigInt {
        num_traits::pow(BigInt::from(self.prime), self.min_valuation as usize)
    }

    pub fn satisfied_by(&self, x: &CobordismVector) -> bool {
        let v = x.dot(&self.functional);
        (v % self.modulus()).is_zero()
    }
}

/// The integer values of one Pontryagin number on M₁..M₄.
pub fn basis_values(key: &Partition) -> Result<[BigInt; 4]> {
    let basis = basis_numbers()?;
    let v: Vec<BigInt> = basis.iter().map(|b| b.get(key).to_integer()).collect();
    Ok([v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()])
}

/// Values of an integer-valued invariant on the basis, checked integral.
pub fn invariant_values(f: impl Fn(&PontryaginNumbers) -> Result<Rational>) -> Result<[BigInt; 4]> {
    let basis = basis_numbers()?;
    let mut out: Vec<BigInt> = Vec::with_capacity(4);
    for (i, b) in basis.iter().enumerate() {
        let v = f(b)?;
        if !v.is_integer() {
            return Err(Error::Internal(format!("invariant of M{} is not an integer: {v}", i + 1)));
        }
        out.push(v.to_integer());
    }
    Ok([out[0].clone(), out[1].clone(), out[2].clone(), out[3].clone()])
}

/// Generators of `{x ∈ ℤ⁴ : every constraint holds}`.
pub fn constrained_lattice(constraints: &[SublatticeConstraint]) -> Vec<Vec<BigInt>> {
    let mut basis = linalg::identity_lattice(4);
    for c in constraints {
        basis = linalg::congruence_sublattice(&basis, &c.functional, &c.modulus());
    }
    basis
}

/// gcd of `Σ x_i values_i` over all integral `x` satisfying the
/// constraints, computed on a basis of the constrained sublattice.
pub fn gcd_over_sublattice(values: &[BigInt; 4], constraints: &[SublatticeConstraint]) -> BigInt {
    constrained_lattice(constraints)
        .iter()
        .map(|b| b.iter().zip(values).map(|(x, v)| x * v).sum::<BigInt>())
        .fold(BigInt::zero(), |acc, v| acc.gcd(&v))
}

/// A lattice vector attaining the gcd's `p`-adic valuation, if any.
pub fn valuation_witness(
    values: &[BigInt; 4],
    constraints: &[SublatticeConstraint],
    p: u64,
) -> Option<(CobordismVector, u32)> {
    constrained_lattice(constraints)
        .into_iter()
        .filter_map(|b| {
            let v: BigInt = b.iter().zip(values).map(|(x, v)| x * v).sum();
            valuation(&v, p).map(|n| (b, n))
        })
        .min_by_key(|(_, n)| *n)
        .map(|(b, n)| {
            (
                CobordismVector {
                    x: [b[0].clone(), b[1].clone(), b[2].clone(), b[3].clone()],
                },
                n,
            )
        })
}

fn mod_u64(v: &BigInt, m: u64) -> u64 {
    v.mod_floor(&BigInt::from(m)).to_u64().expect("residue fits")
}

fn pow_u64(p: u64, e: u32) -> u64 {
    p.checked_pow(e).expect("prime power fits in u64")
}

/// `min(t, min ν_p(Σ x_i values_i))` over all `x` satisfying the
/// constraints at `p`, by exhaustive search over residues.
///
/// Coordinate `i` only matters modulo `p^{m_i}` with
/// `m_i = max(t - ν_p(values_i), e - ν_p(functional_i))`, so the search is
/// finite and exact.
pub fn residue_min_valuation(
    values: &[BigInt; 4],
    constraints: &[SublatticeConstraint],
    p: u64,
    t: u32,
) -> Result<u32> {
    if constraints.iter().any(|c| c.prime != p) {
        return usage("residue_min_valuation: every constraint must be at the searched prime");
    }
    let nu = |v: &BigInt| valuation(v, p).unwrap_or(u32::MAX);
    let digits: Vec<u32> = (0..4)
        .map(|i| {
            let mut m = t.saturating_sub(nu(&values[i]));
            for c in constraints {
                m = m.max(c.min_valuation.saturating_sub(nu(&c.functional[i])));
            }
            m
        })
        .collect();
    let total: u32 = digits.iter().sum();
    if (p as u128).checked_pow(total).is_none_or(|n| n > 10_000_000_000) {
        return usage(format!("residue search over {p}^{total} points is too large"));
    }
    let radices: Vec<u64> = digits.iter().map(|&m| pow_u64(p, m)).collect();
    let target_mod = pow_u64(p, t);
    let v_res: Vec<u64> = values.iter().map(|v| mod_u64(v, target_mod)).collect();
    let cons: Vec<(u64, Vec<u64>)> = constraints
        .iter()
        .map(|c| {
            let m = pow_u64(p, c.min_valuation);
            (m, c.functional.iter().map(|f| mod_u64(f, m)).collect())
        })
        .collect();
    let val_mod = |mut r: u64| -> u32 {
        if r == 0 {
            return t;
        }
        let mut k = 0;
        while r.is_multiple_of(p) {
            r /= p;
            k += 1;
        }
        k
    };
    let mulmod = |a: u64, b: u64, m: u64| ((a as u128 * b as u128) % m as u128) as u64;
    let best = (0..radices[0])
        .into_par_iter()
        .map(|x0| {
            let mut best = t;
            for x1 in 0..radices[1] {
                for x2 in 0..radices[2] {
                    for x3 in 0..radices[3] {
                        let x = [x0, x1, x2, x3];
                        let feasible = cons.iter().all(|(m, f)| {
                            (0..4).fold(0u64, |acc, i| (acc + mulmod(f[i], x[i] % m, *m)) % m) == 0
                        });
                        if !feasible {
                            continue;
                        }
                        let s = (0..4).fold(0u64, |acc, i| {
                            (acc + mulmod(v_res[i], x[i] % target_mod, target_mod)) % target_mod
                        });
                        best = best.min(val_mod(s));
                    }
                }
            }
            best
        })
        .min()
        .unwrap_or(t);
    Ok(best)
}

fn prime_factors(n: &BigInt) -> Vec<u64> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut d = 2u64;
    while BigInt::from(d * d) <= n {
        if (&n % d).is_zero() {
            out.push(d);
            while (&n % d).is_zero() {
                n /= d;
            }
        }
        d += 1;
    }
    if n > BigInt::one() {
        out.push(n.to_u64().expect("prime factor fits in u64"));
    }
    out
}

/// Same gcd as [`gcd_over_sublattice`], assembled prime by prime from
/// exhaustive residue searches.
pub fn gcd_by_residues(values: &[BigInt; 4], constraints: &[SublatticeConstraint]) -> Result<BigInt> {
    let g = values.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() {
        return Ok(BigInt::zero());
    }
    let mut primes = prime_factors(&g);
    primes.extend(constraints.iter().map(|c| c.prime));
    primes.sort_unstable();
    primes.dedup();
    let mut out = BigInt::one();
    for p in primes {
        let at_p: Vec<SublatticeConstraint> = constraints.iter().filter(|c| c.prime == p).cloned().collect();
        let e_max = at_p.iter().map(|c| c.min_valuation).max().unwrap_or(0);
        let t = valuation(&g, p).unwrap_or(0) + e_max + 1;
        let m = residue_min_valuation(values, &at_p, p, t)?;
        out *= num_traits::pow(BigInt::from(p), m as usize);
    }
    Ok(out)
}

/// gcd over `x ∈ [-bound, bound]⁴` satisfying the constraints.
pub fn gcd_over_box(values: &[BigInt; 4], constraints: &[SublatticeConstraint], bound: i64) -> BigInt {
    let range: Vec<i64> = (-bound..=bound).collect();
    let mut g = BigInt::zero();
    for &a in &range {
        for &b in &range {
            for &c in &range {
                for &d in &range {
                    let x = CobordismVector::new([a, b, c, d]);
                    if constraints.iter().all(|k| k.satisfied_by(&x)) {
                        g = g.gcd(&x.dot(values));
                    }
                }
            }
        }
    }
    g
}

/// `ν₁₂^Spin` restricted to String manifolds, as a polynomial in `p₂, …`.
pub fn wu_nu12() -> Result<GradedPoly> {
    let g = wu_spin_class(3)?;
    Ok(GradedPoly::from_terms(
        DEFAULT_CAP,
        g.part(3)
            .terms()
            .filter(|(l, _)| !l.contains_part(1))
            .map(|(l, c)| (l.clone(), c.clone())),
    ))
}

/// `Sig(M, ν) = Sig(M) - ⟨ν₁₂ ∪ ν₁₂, [M]⟩`.
pub fn modified_signature(nums: &PontryaginNumbers) -> Result<Rational> {
    check_string_24(nums)?;
    let nu = wu_nu12()?;
    Ok(signature(nums)? - pair(&(&nu * &nu), nums)?)
}

/// One line of the divisibility report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremCheck {
    pub name: String,
    pub claim: String,
    pub computed: String,
    pub passed: bool,
}

fn check(name: &str, claim: String, computed: String, passed: bool) -> TheoremCheck {
    TheoremCheck {
        name: name.to_string(),
        claim,
        computed,
        passed,
    }
}

fn sig_values() -> Result<[BigInt; 4]> {
    invariant_values(signature)
}

/// `8 | Sig` in general and `32 | Sig` once `4 | p₂`, both optimal.
pub fn signature_two_adic() -> Result<Vec<TheoremCheck>> {
    let sig = sig_values()?;
    let plain = gcd_over_sublattice(&sig, &[]);
    let cons = [SublatticeConstraint::p2_cubed(2, 6)?];
    let constrained = gcd_over_sublattice(&sig, &cons);
    let by_residues = gcd_by_residues(&sig, &cons)?;
    Ok(vec![
        check(
            "sig-gcd",
            "gcd of Sig over the lattice is 8".into(),
            plain.to_string(),
            plain == BigInt::from(8),
        ),
        check(
            "sig-4|p2",
            "gcd of Sig over {ν₂(p₂³) ≥ 6} is 32".into(),
            format!("{constrained} (residue search {by_residues})"),
            constrained == BigInt::from(32) && by_residues == constrained,
        ),
    ])
}

/// `32 | Sig(M, ν)` with equality attained by `67M₃ + 3M₄`.
pub fn modified_signature_check() -> Result<Vec<TheoremCheck>> {
    let values = invariant_values(modified_signature)?;
    let g = gcd_over_sublattice(&values, &[]);
    let witness = CobordismVector::new([0, 0, 67, 3]).dot(&values);
    Ok(vec![
        check(
            "modsig-gcd",
            "gcd of Sig(·,ν) over the lattice is 32".into(),
            format!("{g} from values {}, {}, {}, {}", values[0], values[1], values[2], values[3]),
            g == BigInt::from(32),
        ),
        check(
            "modsig-witness",
            "Sig(67M₃+3M₄, ν) = 32".into(),
            witness.to_string(),
            witness == BigInt::from(32),
        ),
    ])
}

/// `96 | Sig(M, Λ²)` in general; `3^{3k-1} | Sig(M, Λ²)` once `3^{k+1} | p₂`.
pub fn lambda2_three_adic(ks: &[u32]) -> Result<Vec<TheoremCheck>> {
    let values = invariant_values(sig_lambda2)?;
    let mut out = vec![{
        let g = gcd_over_sublattice(&values, &[]);
        check(
            "sig-lambda2-gcd",
            "gcd of Sig(·,Λ²) over the lattice is 96".into(),
            g.to_string(),
            g == BigInt::from(96),
        )
    }];
    for &k in ks {
        let cons = [SublatticeConstraint::p2_cubed(3, 3 * (k + 1))?];
        let bound = 3 * k - 1;
        let searched = residue_min_valuation(&values, &cons, 3, bound)?;
        let exact = valuation(&gcd_over_sublattice(&values, &cons), 3).unwrap_or(u32::MAX);
        let mut computed = format!("residue search min(ν₃, {bound}) = {searched}; exact minimum {exact}");
        if exact < bound {
            if let Some((w, n)) = valuation_witness(&values, &cons, 3) {
                computed.push_str(&format!("; witness x = {w} with ν₃ = {n}"));
            }
        }
        out.push(check(
            &format!("sig-lambda2-k{k}"),
            format!("ν₃(Sig(·,Λ²)) ≥ {bound} on {{ν₃(p₂³) ≥ {}}}", 3 * (k + 1)),
            computed,
            searched == bound && exact >= bound,
        ));
    }
    Ok(out)
}

/// `(n³ / (2²·3⁵·5³·41)) | Sig` when `n | p₂`, checked for `n = p^a`.
pub fn compound_check(primes: &[u64], max_exponent: u32) -> Result<Vec<TheoremCheck>> {
    let sig = sig_values()?;
    let denominator_valuation = |p: u64| match p {
        2 => 2,
        3 => 5,
        5 => 3,
        41 => 1,
        _ => 0,
    };
    let mut out = Vec::new();
    for &p in primes {
        for a in 1..=max_exponent {
            let cons = [SublatticeConstraint::p2_cubed(p, 3 * a)?];
            let bound = (3 * a).saturating_sub(denominator_valuation(p));
            let g = gcd_over_sublattice(&sig, &cons);
            let got = valuation(&g, p).unwrap_or(u32::MAX);
            let mut computed = format!("minimum ν_{p}(Sig) = {got}");
            if got < bound {
                if let Some((w, n)) = valuation_witness(&sig, &cons, p) {
                    computed.push_str(&format!("; witness x = {w} with ν_{p} = {n}"));
                }
            }
            out.push(check(
                &format!("compound-{p}^{a}"),
                format!("ν_{p}(Sig) ≥ {bound} on {{ν_{p}(p₂³) ≥ {}}}", 3 * a),
                computed,
                got >= bound,
            ));
        }
    }
    Ok(out)
}

/// Every divisibility statement at desk scale.
pub fn divisibility_theorems() -> Result<Vec<TheoremCheck>> {
    let mut out = signature_two_adic()?;
    out.extend(modified_signature_check()?);
    out.extend(lambda2_three_adic(&[1, 2])?);
    out.extend(compound_check(&[2, 3, 5, 41], 1)?);
    Ok(out)
}

/// One row of the twist sweep on M₁.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub i: u32,
    pub j: u32,
    pub k: u32,
    pub rank: String,
    pub ahat: String,
    pub ahat_mod: String,
    pub sig: String,
    pub sig_mod: String,
}

impl SweepRow {
    pub fn tsv_header() -> &'static str {
        "i\tj\tk\trank\tahat\tahat_mod\tsig\tsig_mod"
    }

    pub fn to_tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.i, self.j, self.k, self.rank, self.ahat, self.ahat_mod, self.sig, self.sig_mod
        )
    }

    pub fn divisible(&self) -> bool {
        self.ahat_mod == "0" && self.sig_mod == "0"
    }
}

/// `Â(M₁, T^i ⊗ Λ^j ⊗ S^k)` and `Sig(M₁, T^i ⊗ Λ^j ⊗ S^k)` for
/// `i + j + k ≤ max_total`, with residues modulo `modulus`.
pub fn conjecture_sweep(max_total: u32, modulus: u64) -> Result<Vec<SweepRow>> {
    if modulus == 0 {
        return usage("sweep modulus must be positive");
    }
    let m1 = basis_numbers()?[0].clone();
    let triples: Vec<(u32, u32, u32)> = (0..=max_total)
        .flat_map(|i| (0..=max_total - i).flat_map(move |j| (0..=max_total - i - j).map(move |k| (i, j, k))))
        .collect();
    let m = BigInt::from(modulus);
    triples
        .par_iter()
        .map(|&(i, j, k)| {
            let ch = TwistExpr::tls(i, j, k).character(24)?;
            let a = twisted_ahat(&m1, &ch)?;
            let s = twisted_sig(&m1, &ch)?;
            for v in [&a, &s] {
                if !v.is_integer() {
                    return Err(Error::NotIntegral(vec![a.clone(), s.clone()]));
                }
            }
            let (a, s) = (a.to_integer(), s.to_integer());
            Ok(SweepRow {
                i,
                j,
                k,
                rank: ch.rank().to_string(),
                ahat_mod: a.mod_floor(&m).to_string(),
                sig_mod: s.mod_floor(&m).to_string(),
                ahat: a.to_string(),
                sig: s.to_string(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: [i64; 4]) -> [BigInt; 4] {
        v.map(BigInt::from)
    }

    #[test]
    fn residue_search_matches_lattice_gcd() {
        let values = big([12, 18, 30, 8]);
        let cons = [SublatticeConstraint::new(big([1, 3, 0, 2]), 2, 2)];
        assert_eq!(gcd_by_residues(&values, &cons).unwrap(), gcd_over_sublattice(&values, &cons));
        assert_eq!(gcd_over_box(&values, &cons, 4), gcd_over_sublattice(&values, &cons));
    }

    #[test]
    fn zero_values_give_zero_gcd() {
        assert!(gcd_over_sublattice(&big([0; 4]), &[]).is_zero());
        assert!(gcd_by_residues(&big([0; 4]), &[]).unwrap().is_zero());
    }

    #[test]
    fn residue_search_rejects_mixed_primes() {
        let cons = [SublatticeConstraint::new(big([1, 0, 0, 0]), 3, 1)];
        assert!(residue_min_valuation(&big([2, 4, 6, 8]), &cons, 2, 3).is_err());
    }

    #[test]
    fn wu_class_square_coefficient() {
        let nu = wu_nu12().unwrap();
        assert_eq!(nu, GradedPoly::generator(3, DEFAULT_CAP).scale(&rat(5)));
    }

    #[test]
    fn non_string_input_is_rejected() {
        let nums = PontryaginNumbers::from_entries(24, [(Partition::new(vec![1; 6]), rat(1))]).unwrap();
        assert!(matches!(kappa(&nums), Err(Error::NotString(_))));
        assert!(matches!(decompose(&nums), Err(Error::NotString(_))));
    }
}
