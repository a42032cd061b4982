//! The cancellation-free counting formula.
//!
//! Build, for each partition `lambda` of n, the bivariate polynomial
//!
//! ```text
//! R_lambda(a, b) = (1 / (z_lambda * b)) * prod_i Q_{lambda_i}(a, b),
//! Q_r(a, b)      = (a + b)^r - (a - b)^r,
//! ```
//!
//! which is homogeneous of degree n - 1 with strictly positive rational
//! coefficients `r_lambda^{kl}` (of `a^k b^l`). The count is then the
//! positive pairing
//!
//! ```text
//! c^n_{lambda,mu} = n * 2^(-n-1) * sum_{k,l} r_lambda^{kl} * r_mu^{lk} * k! * l!
//! ```
//!
//! with no cancellation anywhere: every summand is nonnegative. The
//! transposed index pair `(l, k)` on the `mu` side is essential.

use std::collections::BTreeMap;

use num_integer::binomial;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::BivariatePoly;
use crate::{factorials, ExactInt, ExactRat};

/// Sparse view of the coefficients of `R_lambda`: `(k, l) -> r_lambda^{kl}`.
pub type RCoefficients = BTreeMap<(u32, u32), ExactRat>;

/// `Q_r(a, b) = (a + b)^r - (a - b)^r`, for `r >= 1`.
///
/// Built directly from the surviving binomial terms: the even powers of `b`
/// cancel, leaving `sum over odd l of 2 * C(r, l) * a^(r-l) * b^l`. All
/// coefficients are positive even integers and the polynomial is
/// homogeneous of degree `r`.
pub fn q_poly(r: u32) -> Result<BivariatePoly> {
    if r == 0 {
        return Err(Error::InvalidArgument(
            "q_poly requires r >= 1 (Q_0 is identically zero)".into(),
        ));
    }
    let mut terms = Vec::new();
    for l in (1..=r).step_by(2) {
        let c = ExactInt::from(2) * binomial(ExactInt::from(r), ExactInt::from(l));
        terms.push(((r - l, l), ExactRat::from_integer(c)));
    }
    Ok(BivariatePoly::from_terms(terms))
}

/// `R_lambda(a, b) = (1 / (z_lambda * b)) * prod_i Q_{lambda_i}(a, b)`.
///
/// Every `Q` factor carries at least one power of `b` in each monomial, so
/// the product is divisible by `b`; failure of that division signals an
/// arithmetic bug, not bad input. The result is homogeneous of degree
/// `n - 1`, every coefficient is strictly positive, and the b-exponents
/// all have the parity of `len(lambda) - 1`.
pub fn r_poly(lambda: &Partition) -> Result<BivariatePoly> {
    if lambda.is_empty() {
        return Err(Error::InvalidArgument(
            "r_poly requires a partition of n >= 1".into(),
        ));
    }
    // Parts are already sorted descending; multiply in that order.
    let mut product = BivariatePoly::one();
    for &part in lambda.parts() {
        product = &product * &q_poly(part)?;
    }
    let quotient = product.div_b().ok_or_else(|| {
        Error::Internal(format!("Q-product for lambda = {lambda} is not divisible by b"))
    })?;
    let scale = ExactRat::new(ExactInt::one(), lambda.centralizer_order());
    Ok(quotient.scalar_mul(&scale))
}

/// The coefficients `r_lambda^{kl}` of `R_lambda` as a sparse map.
/// Every stored value is strictly positive.
pub fn r_coefficients(lambda: &Partition) -> Result<RCoefficients> {
    Ok(r_poly(lambda)?.into_terms())
}

/// `c^n_{lambda,mu}` by the positive pairing formula.
pub fn count_positive(lambda: &Partition, mu: &Partition) -> Result<ExactInt> {
    if lambda.n() != mu.n() {
        return Err(Error::WeightMismatch(format!(
            "lambda = {lambda} has weight {}, mu = {mu} has weight {}",
            lambda.n(),
            mu.n()
        )));
    }
    if lambda.n() == 0 {
        return Err(Error::InvalidArgument("counts require n >= 1".into()));
    }
    count_positive_from_coefficients(
        &r_coefficients(lambda)?,
        &r_coefficients(mu)?,
        lambda.n(),
    )
}

/// The pairing `n * 2^(-n-1) * sum_{k,l} r_lambda^{kl} * r_mu^{lk} * k! * l!`
/// evaluated on precomputed coefficient maps.
///
/// Split out so table generation can cache `r_coefficients` per partition
/// and pair them across all (lambda, mu) combinations.
pub fn count_positive_from_coefficients(
    lambda_coeffs: &RCoefficients,
    mu_coeffs: &RCoefficients,
    n: u32,
) -> Result<ExactInt> {
    let fact = factorials(n.saturating_sub(1));
    let mut sum = ExactRat::zero();
    for (&(k, l), c_lambda) in lambda_coeffs {
        // The mu coefficient is looked up at the TRANSPOSED exponent pair.
        if let Some(c_mu) = mu_coeffs.get(&(l, k)) {
            let weight = &fact[k as usize] * &fact[l as usize];
            sum += c_lambda * c_mu * ExactRat::from_integer(weight);
        }
    }
    let scale = ExactRat::new(ExactInt::from(n), ExactInt::one() << (n as usize + 1));
    reduce_to_count(sum * scale)
}

/// Final reduction: the accumulated exact rational must be a nonnegative
/// integer. Anything else means the arithmetic upstream is broken.
pub(crate) fn reduce_to_count(value: ExactRat) -> Result<ExactInt> {
    if !value.is_integer() {
        return Err(Error::Internal(format!(
            "count reduced to the non-integer {value}"
        )));
    }
    if value.is_negative() {
        return Err(Error::Internal(format!("count reduced to the negative {value}")));
    }
    Ok(value.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn rat(n: i64) -> ExactRat {
        ExactRat::from_integer(ExactInt::from(n))
    }

    fn ratq(n: i64, d: i64) -> ExactRat {
        ExactRat::new(ExactInt::from(n), ExactInt::from(d))
    }

    /// Independent route to Q_r: expand (a+b)^r and (a-b)^r by repeated
    /// generic polynomial multiplication and subtract. Shares none of the
    /// closed-form binomial construction.
    fn q_poly_expand_subtract(r: u32) -> BivariatePoly {
        let a_plus_b = BivariatePoly::from_terms([((1, 0), rat(1)), ((0, 1), rat(1))]);
        let a_minus_b = BivariatePoly::from_terms([((1, 0), rat(1)), ((0, 1), rat(-1))]);
        &a_plus_b.pow(r) - &a_minus_b.pow(r)
    }

    #[test]
    fn q_poly_small_cases() {
        assert_eq!(q_poly(1).unwrap().to_string(), "2*b");
        assert_eq!(q_poly(2).unwrap().to_string(), "4*a*b");
        assert_eq!(q_poly(5).unwrap().to_string(), "10*a^4*b + 20*a^2*b^3 + 2*b^5");
    }

    #[test]
    fn q_poly_rejects_zero() {
        assert!(matches!(q_poly(0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn q_poly_matches_expand_subtract() {
        for r in 1..=12 {
            assert_eq!(q_poly(r).unwrap(), q_poly_expand_subtract(r), "r = {r}");
        }
    }

    #[test]
    fn q_poly_coefficients_positive_even_and_odd_in_b() {
        for r in 1..=15u32 {
            let q = q_poly(r).unwrap();
            assert_eq!(q.homogeneous_degree(), Some(r));
            for (&(_, l), c) in q.terms() {
                assert_eq!(l % 2, 1, "only odd powers of b may appear");
                assert!(c.is_integer());
                assert!(c.is_positive());
                assert!((c.to_integer() % ExactInt::from(2)).is_zero(), "coefficients are even");
            }
        }
    }

    /// Independent route to R_lambda with generic polynomial ops only.
    fn r_poly_independent(lambda: &Partition) -> BivariatePoly {
        let mut product = BivariatePoly::one();
        for &part in lambda.parts() {
            product = &product * &q_poly_expand_subtract(part);
        }
        let scale = ExactRat::new(ExactInt::one(), lambda.centralizer_order());
        product.div_b().unwrap().scalar_mul(&scale)
    }

    #[test]
    fn r_poly_small_cases() {
        assert_eq!(r_poly(&p(&[1])).unwrap().to_string(), "2");
        assert_eq!(r_poly(&p(&[3])).unwrap().to_string(), "2*a^2 + 2/3*b^2");
        assert_eq!(r_poly(&p(&[2, 1])).unwrap().to_string(), "4*a*b");
    }

    #[test]
    fn r_poly_matches_independent_expansion() {
        for n in 1..=9u32 {
            for lam in partitions_of(n) {
                assert_eq!(r_poly(&lam).unwrap(), r_poly_independent(&lam), "lambda = {lam}");
            }
        }
    }

    #[test]
    fn r_poly_rejects_empty() {
        assert!(r_poly(&Partition::empty()).is_err());
    }

    #[test]
    fn r_coefficients_examples() {
        let c5 = r_coefficients(&p(&[5])).unwrap();
        let expected: RCoefficients = [
            ((4, 0), rat(2)),
            ((2, 2), rat(4)),
            ((0, 4), ratq(2, 5)),
        ]
        .into_iter()
        .collect();
        assert_eq!(c5, expected);

        let c11 = r_coefficients(&p(&[1, 1])).unwrap();
        assert_eq!(c11, [((0, 1), rat(2))].into_iter().collect());

        let c2 = r_coefficients(&p(&[2])).unwrap();
        assert_eq!(c2, [((1, 0), rat(2))].into_iter().collect());
    }

    #[test]
    fn r_poly_structure_invariants() {
        for n in 1..=12u32 {
            for lam in partitions_of(n) {
                let r = r_poly(&lam).unwrap();
                assert_eq!(r.homogeneous_degree(), Some(n - 1), "lambda = {lam}");
                let parity = (lam.len() as u32 + 1) % 2;
                for (&(_, l), c) in r.terms() {
                    assert!(c.is_positive(), "coefficient of b^{l} in R_{lam}");
                    assert_eq!(l % 2, parity, "b-parity for lambda = {lam}");
                }
            }
        }
    }

    #[test]
    fn count_positive_golden_values() {
        assert_eq!(count_positive(&p(&[1]), &p(&[1])).unwrap(), ExactInt::from(1));
        assert_eq!(count_positive(&p(&[2, 1]), &p(&[2, 1])).unwrap(), ExactInt::from(3));
        assert_eq!(count_positive(&p(&[5]), &p(&[5])).unwrap(), ExactInt::from(8));
        assert_eq!(count_positive(&p(&[2]), &p(&[2])).unwrap(), ExactInt::from(0));
    }

    #[test]
    fn count_positive_rejects_mismatched_weights() {
        let err = count_positive(&p(&[2]), &p(&[2, 1])).unwrap_err();
        assert!(matches!(err, Error::WeightMismatch(_)));
    }

    #[test]
    fn count_positive_rejects_empty() {
        let err = count_positive(&Partition::empty(), &Partition::empty()).unwrap_err();
        assert!(matches!(err, Error::InvalidArgument(_)));
    }

    #[test]
    fn pairing_transposition_matters() {
        // For lambda = [2], mu = [1,1]: r_[2] = 2a, r_[1,1] = 2b. The
        // transposed pairing matches (1,0) with (0,1) and gives 1; pairing
        // (k,l) with (k,l) instead would give 0.
        let lam = r_coefficients(&p(&[2])).unwrap();
        let mu = r_coefficients(&p(&[1, 1])).unwrap();
        assert_eq!(
            count_positive_from_coefficients(&lam, &mu, 2).unwrap(),
            ExactInt::from(1)
        );
        assert!(lam.keys().all(|k| !mu.contains_key(k)));
    }
}
