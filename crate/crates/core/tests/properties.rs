use charnum_core::algebra::{bernoulli, binomial, expand_in_roots, int, pair, rat, symmetric_reduce};
use charnum_core::bundle::{fiber_pontryagin, pont_to_spin, spin_to_pont, RootSystemData};
use charnum_core::genus::{l_class, multiplicative_sequence, signature, CharacteristicSeries};
use charnum_core::lattice::{
    basis_numbers, decompose, decompose_rational, gcd_over_box, gcd_over_sublattice, kappa,
    CobordismVector, SublatticeConstraint,
};
use charnum_core::linalg;
use charnum_core::manifold::{wall_model, WallPair};
use charnum_core::qforms::{witten_direct, witten_modular};
use charnum_core::twist::{ch_tangent, tensor, twisted_sig, ChernCharacter};
use charnum_core::{GradedPoly, Partition, PontryaginNumbers, Rational, RootPoly};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn partitions_up_to(cap: u32, max_part: u32) -> Vec<Partition> {
    (0..=cap).flat_map(|w| Partition::all(w, max_part)).collect()
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=6).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

/// Sparse polynomial at `cap` using generators up to `max_part`.
fn arb_poly(cap: u32, max_part: u32, max_terms: usize) -> impl Strategy<Value = GradedPoly> {
    let parts = partitions_up_to(cap, max_part);
    let n = parts.len();
    prop::collection::vec((0..n, small_rational()), 0..=max_terms).prop_map(move |terms| {
        GradedPoly::from_terms(cap, terms.into_iter().map(|(i, c)| (parts[i].clone(), c)))
    })
}

fn arb_vector() -> impl Strategy<Value = [i64; 4]> {
    [-50i64..=50, -50i64..=50, -50i64..=50, -50i64..=50]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn poly_mul_is_a_commutative_ring(a in arb_poly(6, 6, 8), b in arb_poly(6, 6, 8), c in arb_poly(6, 6, 8)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &GradedPoly::one(6), a.clone());
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn truncation_is_coherent(a in arb_poly(12, 12, 10), b in arb_poly(12, 12, 10)) {
        let wide = (&a * &b).with_cap(6);
        let narrow = &a.with_cap(6) * &b.with_cap(6);
        prop_assert_eq!(wide, narrow);
    }

    #[test]
    fn pairing_is_bilinear(
        a in arb_poly(6, 6, 10),
        b in arb_poly(6, 6, 10),
        x in arb_vector(),
        y in arb_vector(),
        s in small_rational(),
    ) {
        let nx = CobordismVector::new(x).numbers().unwrap();
        let ny = CobordismVector::new(y).numbers().unwrap();
        let lhs = pair(&(&a + &b.scale(&s)), &nx).unwrap();
        prop_assert_eq!(lhs, pair(&a, &nx).unwrap() + s.clone() * pair(&b, &nx).unwrap());
        let sum = nx.add(&ny.scale(&s)).unwrap();
        prop_assert_eq!(pair(&a, &sum).unwrap(), pair(&a, &nx).unwrap() + s * pair(&a, &ny).unwrap());
    }

    /// Inputs are polynomials in `e_j(x²)`, so they are symmetric in the
    /// squares by construction.
    #[test]
    fn symmetric_reduce_round_trips(
        nvars in 1usize..=4,
        terms in prop::collection::vec((prop::collection::vec(1u32..=4, 0..=3), small_rational()), 0..6),
    ) {
        let cap = 8;
        let mut rp = RootPoly::zero(nvars, 2 * cap);
        for (js, c) in &terms {
            let mut m = RootPoly::one(nvars, 2 * cap);
            for &j in js {
                m = &m * &RootPoly::elementary_of_squares(j, nvars, 2 * cap);
            }
            rp = &rp + &m.scale(c);
        }
        let reduced = symmetric_reduce(&rp, nvars).unwrap();
        prop_assert_eq!(expand_in_roots(&reduced, nvars), rp);
    }

    #[test]
    fn multiplicative_sequences_are_graded(coeffs in prop::collection::vec(small_rational(), 5)) {
        let q = CharacteristicSeries::new("random", coeffs);
        let k = multiplicative_sequence(&q, 5).unwrap();
        prop_assert_eq!(k.part(0), &GradedPoly::one(5));
        for j in 0..=5 {
            prop_assert!(k.part(j).is_homogeneous(j));
        }
    }

    #[test]
    fn characters_are_additive_and_tensor_distributes(
        a in arb_poly(4, 4, 6),
        b in arb_poly(4, 4, 6),
        c in arb_poly(4, 4, 6),
    ) {
        let (a, b, c) = (
            ChernCharacter::from_total(a),
            ChernCharacter::from_total(b),
            ChernCharacter::from_total(c),
        );
        let bc = b.checked_add(&c).unwrap();
        for j in 0..=4 {
            prop_assert_eq!(bc.component(j), &b.component(j) + &c.component(j));
        }
        let lhs = tensor(&a, &bc).unwrap();
        let rhs = tensor(&a, &b).unwrap().checked_add(&tensor(&a, &c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn fiber_class_ignores_root_order(perm in Just((0..8usize).collect::<Vec<_>>()).prop_shuffle()) {
        let f4 = RootSystemData::f4_spin9();
        let roots: Vec<Vec<Rational>> = perm.iter().map(|&i| f4.complementary_roots[i].clone()).collect();
        let shuffled = RootSystemData::new(4, roots).unwrap();
        prop_assert_eq!(
            fiber_pontryagin(&shuffled, 4).unwrap(),
            fiber_pontryagin(&f4, 4).unwrap()
        );
    }

    #[test]
    fn spin_and_pont_conversions_are_inverse(p in arb_poly(4, 4, 10)) {
        prop_assert_eq!(spin_to_pont(&pont_to_spin(&p).unwrap()).unwrap(), p.clone());
        prop_assert_eq!(pont_to_spin(&spin_to_pont(&p).unwrap()).unwrap(), p);
    }

    #[test]
    fn witten_genus_is_linear(x in arb_vector(), y in arb_vector(), s in -5i64..=5) {
        let nx = CobordismVector::new(x).numbers().unwrap();
        let ny = CobordismVector::new(y).numbers().unwrap();
        let sum = nx.add(&ny.scale(&rat(s))).unwrap();
        let m = |n: &PontryaginNumbers| witten_modular(n, 3).unwrap();
        prop_assert_eq!(m(&sum), &m(&nx) + &m(&ny).scale(&rat(s)));
        let d = |n: &PontryaginNumbers| witten_direct(n, 1).unwrap();
        prop_assert_eq!(d(&sum), &d(&nx) + &d(&ny).scale(&rat(s)));
    }

    #[test]
    fn decompose_inverts_linear_combination(x in arb_vector()) {
        let v = CobordismVector::new(x);
        prop_assert_eq!(decompose(&v.numbers().unwrap()).unwrap(), v);
    }

    #[test]
    fn decompose_is_exact_on_rational_vectors(q in [small_rational(), small_rational(), small_rational(), small_rational()]) {
        let basis = basis_numbers().unwrap();
        let terms: Vec<(Rational, &PontryaginNumbers)> = q.iter().cloned().zip(basis.iter()).collect();
        let nums = PontryaginNumbers::linear_combination(&terms).unwrap();
        prop_assert_eq!(decompose_rational(&nums).unwrap(), q.to_vec());
    }

    #[test]
    fn wall_models_satisfy_the_signature_theorem(
        diag in prop::collection::vec((prop::bool::ANY, prop::sample::select(vec![1i64, -1, 15, -15, 97, 113])), 0..4),
        hyperbolic in prop::collection::vec(prop::sample::select(vec![(0i64, 0i64), (0, 2), (2, 56), (4, 28), (-6, 0)]), 0..3),
    ) {
        let n = diag.len() + 2 * hyperbolic.len();
        prop_assume!(n > 0);
        let mut a = vec![vec![0i64; n]; n];
        let mut b = vec![0i64; n];
        for (i, (positive, bi)) in diag.iter().enumerate() {
            a[i][i] = if *positive { 1 } else { -1 };
            b[i] = *bi;
        }
        for (h, (b1, b2)) in hyperbolic.iter().enumerate() {
            let i = diag.len() + 2 * h;
            a[i][i + 1] = 1;
            a[i + 1][i] = 1;
            b[i] = *b1;
            b[i + 1] = *b2;
        }
        let wp = WallPair::new(a, b);
        let model = wall_model(&wp).unwrap();
        let (_, form) = model.intersection_form();
        let sig = linalg::signature(&form);
        prop_assert_eq!(sig, wp.signature());
        prop_assert_eq!(signature(&model.numbers()).unwrap(), rat(sig));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    /// `24 | Â(·,T)` and `8 | Sig` on the lattice, seen as integrality of κ.
    #[test]
    fn kappa_is_integral_on_the_lattice(x in arb_vector()) {
        let k = kappa(&CobordismVector::new(x).numbers().unwrap()).unwrap();
        for c in k {
            prop_assert!(c.is_integer(), "kappa component {} for {:?}", c, x);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn sublattice_gcd_matches_box_search(
        values in [-300i64..=300, -300i64..=300, -300i64..=300, -300i64..=300],
        functional in [-20i64..=20, -20i64..=20, -20i64..=20, -20i64..=20],
        prime in prop::sample::select(vec![2u64, 3]),
        e in 1u32..=2,
    ) {
        let values = values.map(BigInt::from);
        let cons = [SublatticeConstraint::new(functional.map(BigInt::from), prime, e)];
        prop_assert_eq!(gcd_over_box(&values, &cons, 8), gcd_over_sublattice(&values, &cons));
    }
}

/// Only even indices from 2 on are computed; the recurrence supplies the
/// conventional `B₀ = 1`, `B₁ = -1/2` and zero odd values.
fn bernoulli_all(k: u32) -> Rational {
    match k {
        0 => Rational::one(),
        1 => Rational::new((-1).into(), 2.into()),
        k if k % 2 == 1 => Rational::zero(),
        k => bernoulli(k).unwrap(),
    }
}

#[test]
fn bernoulli_recurrence() {
    for m in 1..=20u32 {
        let sum = (0..=m).fold(Rational::zero(), |acc, k| {
            acc + int(&binomial(u64::from(m) + 1, u64::from(k))) * bernoulli_all(k)
        });
        assert!(sum.is_zero(), "m = {m}");
    }
    assert!(bernoulli(3).is_err());
}

#[test]
fn trivial_twist_gives_the_signature() {
    for name in charnum_core::manifold::BUILTIN_NAMES {
        let nums = charnum_core::manifold::builtin(name).unwrap().numbers();
        let cap = nums.dim() / 4;
        let trivial = ChernCharacter::trivial(Rational::one(), cap);
        let l_top = l_class(cap).unwrap().total();
        assert_eq!(twisted_sig(&nums, &trivial).unwrap(), pair(&l_top, &nums).unwrap(), "{name}");
    }
}

#[test]
fn tangent_character_has_real_rank() {
    assert_eq!(ch_tangent(24, 6).unwrap().rank(), rat(24));
}
