//! Symmetric-group characters via the Murnaghan–Nakayama rule, and the two
//! counting formulas built on them.
//!
//! `character(rho, lambda)` is the value of the irreducible character
//! indexed by the shape `rho` on the conjugacy class of cycle type
//! `lambda`. The recursion removes one border strip per class part,
//! largest part first, and sums the signed sub-characters. Everything is
//! exact integer arithmetic.
//!
//! On top of it:
//!
//! - [`count_frobenius`] — the full class-algebra sum over all shapes,
//!   valid for an arbitrary target class `nu`;
//! - [`count_hook`] — the specialization to the n-cycle target, where only
//!   hook shapes survive and the sum collapses to n terms.
//!
//! Both accumulate in exact rationals and assert integrality of the final
//! value, which doubles as a consistency check on the character engine.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::positive::reduce_to_count;
use crate::{factorial, ExactInt, ExactRat};

/// Largest n for which the sum-over-all-shapes paths (`character_table`,
/// `count_frobenius`) will run by default. Both scale with the number of
/// partitions of n; they are verification paths, not production paths.
pub const DEFAULT_TABLE_LIMIT: u32 = 12;

/// Border-strip removals of length `strip` from a shape, via beta-numbers
/// (first-column hook lengths). For a shape with m rows, the beta-set is
/// `{shape[i] + m - 1 - i}`; removing a border strip of length t means
/// lowering one beta-number by t onto a free value, and the strip height
/// is the number of beta-numbers jumped over, which fixes the sign.
fn strip_removals(shape: &[u32], strip: u32) -> Vec<(Vec<u32>, bool)> {
    let m = shape.len();
    let beta: Vec<u32> = shape
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (m - 1 - i) as u32)
        .collect();
    let mut out = Vec::new();
    for i in 0..m {
        let b = beta[i];
        if b < strip {
            continue;
        }
        let target = b - strip;
        if beta.contains(&target) {
            continue;
        }
        let height = beta.iter().filter(|&&x| target < x && x < b).count();
        let mut new_beta = beta.clone();
        new_beta[i] = target;
        new_beta.sort_unstable_by(|a, b| b.cmp(a));
        let mut new_shape: Vec<u32> = new_beta
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (m - 1 - j) as u32)
            .collect();
        while new_shape.last() == Some(&0) {
            new_shape.pop();
        }
        out.push((new_shape, height % 2 == 1));
    }
    out
}

fn mn_recurse(
    shape: Vec<u32>,
    class: &[u32],
    depth: usize,
    memo: &mut HashMap<(Vec<u32>, usize), ExactInt>,
) -> ExactInt {
    if depth == class.len() {
        debug_assert!(shape.is_empty());
        return ExactInt::one();
    }
    if let Some(hit) = memo.get(&(shape.clone(), depth)) {
        return hit.clone();
    }
    let mut total = ExactInt::zero();
    for (sub_shape, negate) in strip_removals(&shape, class[depth]) {
        let sub = mn_recurse(sub_shape, class, depth + 1, memo);
        if negate {
            total -= sub;
        } else {
            total += sub;
        }
    }
    memo.insert((shape, depth), total.clone());
    total
}

/// The character value `chi^rho_lambda`: representation indexed by the
/// shape `rho`, evaluated on the class of cycle type `lambda`.
pub fn character(rho: &Partition, lambda: &Partition) -> Result<ExactInt> {
    if rho.n() != lambda.n() {
        return Err(Error::WeightMismatch(format!(
            "shape {rho} has weight {} but class {lambda} has weight {}",
            rho.n(),
            lambda.n()
        )));
    }
    // Class parts are consumed largest-first; Partition stores them sorted
    // descending already. The memo key is (remaining shape, depth), valid
    // because the removal order is fixed.
    let mut memo = HashMap::new();
    Ok(mn_recurse(
        rho.parts().to_vec(),
        lambda.parts(),
        0,
        &mut memo,
    ))
}

/// Dimension of the representation indexed by `rho`: the character on the
/// identity class `1^n`.
pub fn dimension(rho: &Partition) -> ExactInt {
    let ones = vec![1u32; rho.n() as usize];
    let mut memo = HashMap::new();
    mn_recurse(rho.parts().to_vec(), &ones, 0, &mut memo)
}

/// Character of the hook shape `(n - r, 1^r)` on the class `lambda`.
pub fn hook_character(n: u32, r: u32, lambda: &Partition) -> Result<ExactInt> {
    if n == 0 || r > n - 1 {
        return Err(Error::InvalidArgument(format!(
            "hook leg length r must satisfy 0 <= r <= n-1, got n={n}, r={r}"
        )));
    }
    character(&Partition::hook(n, r)?, lambda)
}

/// Complete character table for `S_n`: all `(shape, class)` pairs, both
/// indexed by the partitions of n in enumeration order.
#[derive(Debug)]
pub struct CharacterTable {
    n: u32,
    parts: Vec<Partition>,
    /// values[shape_index][class_index]
    values: Vec<Vec<ExactInt>>,
}

impl CharacterTable {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// The partitions of n in enumeration order; indexes both axes.
    pub fn partitions(&self) -> &[Partition] {
        &self.parts
    }

    pub fn value(&self, shape_index: usize, class_index: usize) -> &ExactInt {
        &self.values[shape_index][class_index]
    }

    pub fn get(&self, rho: &Partition, lambda: &Partition) -> Option<&ExactInt> {
        let i = self.parts.iter().position(|p| p == rho)?;
        let j = self.parts.iter().position(|p| p == lambda)?;
        Some(self.value(i, j))
    }
}

/// Build the full character table of `S_n`, up to [`DEFAULT_TABLE_LIMIT`].
pub fn character_table(n: u32) -> Result<CharacterTable> {
    character_table_with_limit(n, DEFAULT_TABLE_LIMIT)
}

/// Build the full character table with an explicit capacity limit.
pub fn character_table_with_limit(n: u32, limit: u32) -> Result<CharacterTable> {
    if n == 0 {
        return Err(Error::InvalidArgument("character table requires n >= 1".into()));
    }
    if n > limit {
        return Err(Error::Capacity(format!(
            "character table limit is n <= {limit}, requested n = {n}"
        )));
    }
    let parts: Vec<Partition> = partitions_of(n).collect();
    let values = parts
        .iter()
        .map(|rho| {
            parts
                .iter()
                .map(|lambda| {
                    // Memo keys are (shape, depth) with depth indexing the
                    // current class, so the memo cannot outlive the cell.
                    let mut memo = HashMap::new();
                    mn_recurse(rho.parts().to_vec(), lambda.parts(), 0, &mut memo)
                })
                .collect()
        })
        .collect();
    Ok(CharacterTable { n, parts, values })
}

/// The general class-algebra count: the number of ways to write one fixed
/// permutation of class `nu` as an ordered product of a class-`lambda`
/// element and a class-`mu` element,
///
/// ```text
/// c^nu_{lambda,mu} = (n! / (z_lambda * z_mu))
///                    * sum over shapes rho of
///                      chi^rho_lambda * chi^rho_mu * chi^rho_nu / dim(rho).
/// ```
///
/// Sums over all partitions of n, so it is capped at
/// [`DEFAULT_TABLE_LIMIT`] like the table builder.
pub fn count_frobenius(nu: &Partition, lambda: &Partition, mu: &Partition) -> Result<ExactInt> {
    count_frobenius_with_limit(nu, lambda, mu, DEFAULT_TABLE_LIMIT)
}

/// [`count_frobenius`] with an explicit capacity limit.
pub fn count_frobenius_with_limit(
    nu: &Partition,
    lambda: &Partition,
    mu: &Partition,
    limit: u32,
) -> Result<ExactInt> {
    let n = nu.n();
    if lambda.n() != n || mu.n() != n {
        return Err(Error::WeightMismatch(format!(
            "nu = {nu}, lambda = {lambda}, mu = {mu} must all have the same weight"
        )));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("counts require n >= 1".into()));
    }
    if n > limit {
        return Err(Error::Capacity(format!(
            "character-sum limit is n <= {limit}, requested n = {n}"
        )));
    }
    let mut sum = ExactRat::zero();
    for rho in partitions_of(n) {
        let chi_lambda = character(&rho, lambda)?;
        if chi_lambda.is_zero() {
            continue;
        }
        let chi_mu = character(&rho, mu)?;
        if chi_mu.is_zero() {
            continue;
        }
        let chi_nu = character(&rho, nu)?;
        sum += ExactRat::new(chi_lambda * chi_mu * chi_nu, dimension(&rho));
    }
    let scale = ExactRat::new(
        factorial(n),
        lambda.centralizer_order() * mu.centralizer_order(),
    );
    reduce_to_count(sum * scale)
}

/// Hook-character rows for `lambda`: the values `chi^{(n-r, 1^r)}_lambda`
/// for r = 0..n-1. Shared by [`count_hook`] and the table builder.
pub(crate) fn hook_character_row(lambda: &Partition) -> Result<Vec<ExactInt>> {
    let n = lambda.n();
    (0..n).map(|r| hook_character(n, r, lambda)).collect()
}

/// The alternating sum `sum_r (-1)^r r! (n-1-r)! row_l[r] row_m[r]`.
pub(crate) fn hook_alternating_sum(row_l: &[ExactInt], row_m: &[ExactInt]) -> ExactInt {
    let n = row_l.len() as u32;
    let fact = crate::factorials(n.saturating_sub(1));
    let mut sum = ExactInt::zero();
    for r in 0..n as usize {
        let term = &fact[r] * &fact[n as usize - 1 - r] * &row_l[r] * &row_m[r];
        if r % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum
}

pub(crate) fn count_hook_from_rows(
    row_l: &[ExactInt],
    row_m: &[ExactInt],
    z_lambda: ExactInt,
    z_mu: ExactInt,
    n: u32,
) -> Result<ExactInt> {
    let sum = hook_alternating_sum(row_l, row_m);
    reduce_to_count(ExactRat::new(ExactInt::from(n) * sum, z_lambda * z_mu))
}

/// The n-cycle count by the hook specialization: on the class of the full
/// n-cycle only hook shapes have nonzero character, so the class-algebra
/// sum collapses to
///
/// ```text
/// c^n_{lambda,mu} = (n / (z_lambda * z_mu))
///                   * sum_{r=0}^{n-1} (-1)^r r! (n-1-r)!
///                     chi^{(n-r,1^r)}_lambda * chi^{(n-r,1^r)}_mu.
/// ```
///
/// Must equal `count_frobenius([n], lambda, mu)`; the alternating sum is
/// exactly why this path is integer-only, as the `r!(n-1-r)!` factors
/// cancel catastrophically in floating point.
pub fn count_hook(lambda: &Partition, mu: &Partition) -> Result<ExactInt> {
    let n = lambda.n();
    if mu.n() != n {
        return Err(Error::WeightMismatch(format!(
            "lambda = {lambda} has weight {n}, mu = {mu} has weight {}",
            mu.n()
        )));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("counts require n >= 1".into()));
    }
    count_hook_from_rows(
        &hook_character_row(lambda)?,
        &hook_character_row(mu)?,
        lambda.centralizer_order(),
        mu.centralizer_order(),
        n,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::enumerate_class;
    use num_traits::Signed;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// S_3 character values recomputed from scratch: the trivial and sign
    /// characters directly, and the 2-dimensional character as the number
    /// of fixed points minus one, evaluated on explicit permutations.
    fn s3_oracle(rho: &Partition, class: &Partition) -> ExactInt {
        let member = enumerate_class(class, 100).unwrap().next().unwrap();
        let fixed = member
            .images()
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v as usize == i + 1)
            .count() as i64;
        let sign = if (3 - class.len()) % 2 == 0 { 1 } else { -1 };
        match rho.parts() {
            [3] => ExactInt::from(1),
            [1, 1, 1] => ExactInt::from(sign),
            [2, 1] => ExactInt::from(fixed - 1),
            other => panic!("not an S_3 shape: {other:?}"),
        }
    }

    #[test]
    fn trivial_representation_is_all_ones() {
        for n in 1..=8u32 {
            for lam in partitions_of(n) {
                assert_eq!(character(&p(&[n]), &lam).unwrap(), ExactInt::one());
            }
        }
    }

    #[test]
    fn sign_representation() {
        assert_eq!(character(&p(&[1, 1, 1]), &p(&[2, 1])).unwrap(), ExactInt::from(-1));
        // chi^{1^n}_lambda = (-1)^{n - len(lambda)}
        for n in 1..=8u32 {
            let sign_shape = p(&vec![1; n as usize]);
            for lam in partitions_of(n) {
                let expect = if (n as usize - lam.len()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(
                    character(&sign_shape, &lam).unwrap(),
                    ExactInt::from(expect),
                    "lambda = {lam}"
                );
            }
        }
    }

    #[test]
    fn s3_table_matches_fixed_point_oracle() {
        for rho in partitions_of(3) {
            for class in partitions_of(3) {
                assert_eq!(
                    character(&rho, &class).unwrap(),
                    s3_oracle(&rho, &class),
                    "rho = {rho}, class = {class}"
                );
            }
        }
        // The named spot values.
        assert_eq!(character(&p(&[2, 1]), &p(&[2, 1])).unwrap(), ExactInt::zero());
        assert_eq!(character(&p(&[2, 1]), &p(&[3])).unwrap(), ExactInt::from(-1));
        assert_eq!(character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), ExactInt::from(2));
    }

    #[test]
    fn weight_mismatch_is_an_error() {
        assert!(matches!(
            character(&p(&[2, 1]), &p(&[2])),
            Err(Error::WeightMismatch(_))
        ));
    }

    /// Dimension by the hook-length product formula, an independent route:
    /// dim(rho) = n! / product of hook lengths.
    fn dimension_by_hook_lengths(rho: &Partition) -> ExactInt {
        let parts = rho.parts();
        let mut product = ExactInt::one();
        for (i, &row_len) in parts.iter().enumerate() {
            for j in 0..row_len {
                let arm = row_len - 1 - j;
                let leg = parts[i + 1..].iter().filter(|&&p| p > j).count() as u32;
                product *= ExactInt::from(arm + leg + 1);
            }
        }
        let (q, rem) = num_integer::Integer::div_rem(&factorial(rho.n()), &product);
        assert!(rem.is_zero());
        q
    }

    #[test]
    fn dimensions_match_hook_length_formula() {
        for n in 1..=10u32 {
            for rho in partitions_of(n) {
                assert_eq!(dimension(&rho), dimension_by_hook_lengths(&rho), "rho = {rho}");
            }
        }
    }

    #[test]
    fn dimensions_are_positive() {
        for n in 1..=12u32 {
            for rho in partitions_of(n) {
                assert!(dimension(&rho) >= ExactInt::one(), "rho = {rho}");
            }
        }
    }

    #[test]
    fn character_bounded_by_dimension() {
        for n in 1..=8u32 {
            for rho in partitions_of(n) {
                let dim = dimension(&rho);
                for lam in partitions_of(n) {
                    assert!(character(&rho, &lam).unwrap().abs() <= dim);
                }
            }
        }
    }

    #[test]
    fn hook_character_examples() {
        for lam in partitions_of(6) {
            assert_eq!(hook_character(6, 0, &lam).unwrap(), ExactInt::one());
            let sign = if (6 - lam.len()) % 2 == 0 { 1 } else { -1 };
            assert_eq!(hook_character(6, 5, &lam).unwrap(), ExactInt::from(sign));
        }
        assert_eq!(hook_character(3, 1, &p(&[1, 1, 1])).unwrap(), ExactInt::from(2));
    }

    #[test]
    fn hook_character_range_check() {
        assert!(matches!(
            hook_character(4, 4, &p(&[2, 2])),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn hook_character_agrees_with_general_engine() {
        for n in 1..=8u32 {
            for r in 0..n {
                let shape = Partition::hook(n, r).unwrap();
                for lam in partitions_of(n) {
                    assert_eq!(
                        hook_character(n, r, &lam).unwrap(),
                        character(&shape, &lam).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn table_small_cases() {
        let t1 = character_table(1).unwrap();
        assert_eq!(t1.value(0, 0), &ExactInt::one());

        let t2 = character_table(2).unwrap();
        // Order: (2), (1,1). Trivial row then sign row.
        assert_eq!(t2.value(0, 0), &ExactInt::from(1));
        assert_eq!(t2.value(0, 1), &ExactInt::from(1));
        assert_eq!(t2.value(1, 0), &ExactInt::from(-1));
        assert_eq!(t2.value(1, 1), &ExactInt::from(1));
    }

    #[test]
    fn table_limit_is_enforced() {
        let err = character_table(DEFAULT_TABLE_LIMIT + 1).unwrap_err();
        match err {
            Error::Capacity(msg) => assert!(msg.contains("12"), "{msg}"),
            other => panic!("expected capacity error, got {other:?}"),
        }
        assert!(character_table_with_limit(13, 13).is_ok());
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=8u32 {
            let table = character_table(n).unwrap();
            let parts = table.partitions().to_vec();
            for (j, lam) in parts.iter().enumerate() {
                for (k, mu) in parts.iter().enumerate() {
                    let dot: ExactInt = (0..parts.len())
                        .map(|i| table.value(i, j) * table.value(i, k))
                        .sum();
                    let expect = if j == k {
                        lam.centralizer_order()
                    } else {
                        ExactInt::zero()
                    };
                    assert_eq!(dot, expect, "n = {n}, lambda = {lam}, mu = {mu}");
                }
            }
        }
    }

    #[test]
    fn frobenius_small_counts() {
        assert_eq!(
            count_frobenius(&p(&[1, 1]), &p(&[2]), &p(&[2])).unwrap(),
            ExactInt::one()
        );
        assert_eq!(
            count_frobenius(&p(&[3]), &p(&[2, 1]), &p(&[2, 1])).unwrap(),
            ExactInt::from(3)
        );
        assert_eq!(
            count_frobenius(&p(&[2, 1]), &p(&[2, 1]), &p(&[3])).unwrap(),
            ExactInt::from(2)
        );
    }

    #[test]
    fn frobenius_symmetric_in_factors() {
        for n in 1..=6u32 {
            let parts: Vec<Partition> = partitions_of(n).collect();
            for nu in &parts {
                for i in 0..parts.len() {
                    for j in i + 1..parts.len() {
                        let forward = count_frobenius(nu, &parts[i], &parts[j]).unwrap();
                        let backward = count_frobenius(nu, &parts[j], &parts[i]).unwrap();
                        assert_eq!(
                            forward, backward,
                            "nu = {nu}, lambda = {}, mu = {}",
                            parts[i], parts[j]
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_limit() {
        let big = p(&[13]);
        assert!(matches!(
            count_frobenius(&big, &big, &big),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn hook_count_examples() {
        assert_eq!(count_hook(&p(&[1]), &p(&[1])).unwrap(), ExactInt::one());
        assert_eq!(count_hook(&p(&[2, 1]), &p(&[2, 1])).unwrap(), ExactInt::from(3));
        assert_eq!(count_hook(&p(&[5]), &p(&[5])).unwrap(), ExactInt::from(8));
    }

    #[test]
    fn hook_count_specializes_frobenius() {
        for n in 1..=8u32 {
            let cycle = p(&[n]);
            for lam in partitions_of(n) {
                for mu in partitions_of(n) {
                    assert_eq!(
                        count_hook(&lam, &mu).unwrap(),
                        count_frobenius(&cycle, &lam, &mu).unwrap(),
                        "n = {n}, lambda = {lam}, mu = {mu}"
                    );
                }
            }
        }
    }
}
