//! Reduction of hyperoctahedrally symmetric root polynomials to Pontryagin
//! generators `p_j = e_j(x_1², ..., x_n²)`.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::{GradedPoly, Partition, Rational, RootPoly};
use crate::error::{usage, Error, Result};
use crate::linalg::{solve, Matrix};

/// Expands a polynomial in `p_j` as a root polynomial via `p_j ↦ e_j(x²)`,
/// keeping total root degree at most `2 · poly.cap()`.
pub fn expand_in_roots(poly: &GradedPoly, nvars: usize) -> RootPoly {
    let cap = 2 * poly.cap();
    let elem: Vec<RootPoly> = (0..=poly.cap())
        .map(|j| RootPoly::elementary_of_squares(j, nvars, cap))
        .collect();
    let mut out = RootPoly::zero(nvars, cap);
    for (lambda, c) in poly.terms() {
        let mut term = RootPoly::constant(c.clone(), nvars, cap);
        for &part in lambda.parts() {
            term = &term * &elem[part as usize];
        }
        out = &out + &term;
    }
    out
}

/// Checks invariance under the generators of the hyperoctahedral group:
/// adjacent transpositions and the sign flip of the first variable.
fn check_symmetric(rp: &RootPoly) -> Result<()> {
    let n = rp.nvars();
    let ident: Vec<usize> = (0..n).collect();
    let plus = vec![1; n];
    for i in 0..n.saturating_sub(1) {
        let mut perm = ident.clone();
        perm.swap(i, i + 1);
        if rp.transform(&perm, &plus) != *rp {
            return Err(Error::NotSymmetric(format!(
                "not invariant under swapping x{} and x{}",
                i + 1,
                i + 2
            )));
        }
    }
    if n > 0 {
        let mut signs = plus;
        signs[0] = -1;
        if rp.transform(&ident, &signs) != *rp {
            return Err(Error::NotSymmetric("not invariant under x1 ↦ -x1".into()));
        }
    }
    Ok(())
}

/// Writes a symmetric root polynomial in the Pontryagin generators.
///
/// Works one weight at a time: the coefficients of the dominant monomials
/// (non-increasing exponent vectors) of degree `2w` are matched against the
/// expansions of `p_λ`, `λ ⊢ w` with parts at most `n_roots`, and the
/// resulting linear system is solved exactly. The result has cap
/// `rp.cap() / 2`.
pub fn symmetric_reduce(rp: &RootPoly, n_roots: usize) -> Result<GradedPoly> {
    if n_roots != rp.nvars() {
        return usage(format!(
            "symmetric_reduce: {} roots requested for a polynomial in {} variables",
            n_roots,
            rp.nvars()
        ));
    }
    check_symmetric(rp)?;
    let cap = rp.cap() / 2;
    let elem: Vec<RootPoly> = (0..=cap)
        .map(|j| RootPoly::elementary_of_squares(j, n_roots, 2 * cap))
        .collect();
    let mut out = GradedPoly::zero(cap);

    for w in 0..=cap {
        let target: BTreeMap<Vec<u32>, Rational> = rp
            .terms()
            .filter(|(e, _)| e.iter().sum::<u32>() == 2 * w)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        let basis = Partition::all(w, n_roots as u32);
        // expansions of p_λ restricted to dominant monomials of degree 2w
        let expansions: Vec<RootPoly> = basis
            .iter()
            .map(|lambda| {
                lambda
                    .parts()
                    .iter()
                    .fold(RootPoly::one(n_roots, 2 * cap), |acc, &k| &acc * &elem[k as usize])
            })
            .collect();
        let mut rows: Vec<Vec<u32>> = expansions
            .iter()
            .flat_map(|e| e.terms().map(|(k, _)| k.clone()).collect::<Vec<_>>())
            .chain(target.keys().cloned())
            .filter(|e| e.windows(2).all(|p| p[0] >= p[1]))
            .collect();
        rows.sort();
        rows.dedup();
        if rows.is_empty() {
            continue;
        }
        let m: Matrix = rows
            .iter()
            .map(|r| expansions.iter().map(|e| e.coeff(r)).collect())
            .collect();
        let rhs: Vec<Rational> = rows
            .iter()
            .map(|r| target.get(r).cloned().unwrap_or_else(Rational::zero))
            .collect();
        let coeffs = solve(&m, &rhs).ok_or_else(|| {
            Error::Internal(format!("symmetric_reduce: inconsistent system at weight {w}"))
        })?;
        for (lambda, c) in basis.into_iter().zip(coeffs) {
            out.add_term(lambda, c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};

    #[test]
    fn sum_of_squares_is_p1() {
        let rp = RootPoly::power_sum(2, 4, 2);
        let q = symmetric_reduce(&rp, 4).unwrap();
        assert_eq!(q, GradedPoly::generator(1, 1));
    }

    #[test]
    fn fourth_power_sum_matches_newton() {
        // Newton oracle: ps2 = e1 ps1 - 2 e2 = p1^2 - 2 p2
        let rp = RootPoly::power_sum(4, 4, 4);
        let q = symmetric_reduce(&rp, 4).unwrap();
        let p1 = GradedPoly::generator(1, 2);
        let expected = &(&p1 * &p1) - &GradedPoly::generator(2, 2).scale(&rat(2));
        assert_eq!(q, expected);
    }

    #[test]
    fn rejects_non_symmetric() {
        let rp = RootPoly::var(0, 3, 2).pow(2);
        assert!(matches!(symmetric_reduce(&rp, 3), Err(Error::NotSymmetric(_))));
        let odd = &RootPoly::var(0, 2, 2) + &RootPoly::var(1, 2, 2);
        assert!(matches!(symmetric_reduce(&odd, 2), Err(Error::NotSymmetric(_))));
    }

    #[test]
    fn root_count_must_match() {
        let rp = RootPoly::power_sum(2, 4, 2);
        assert!(matches!(symmetric_reduce(&rp, 3), Err(Error::Usage(_))));
    }

    #[test]
    fn expand_roundtrip_small() {
        let cap = 3;
        let poly = GradedPoly::from_terms(
            cap,
            [
                (Partition::new(vec![1]), ratio(1, 2)),
                (Partition::new(vec![2, 1]), rat(-3)),
                (Partition::new(vec![3]), rat(5)),
            ],
        );
        let rp = expand_in_roots(&poly, 3);
        assert_eq!(symmetric_reduce(&rp, 3).unwrap(), poly);
    }
}
