//! The λ-ring structure on `ℤ[τ, τ⁻¹]`.
//!
//! `λ_t` is computed by splitting `x` into its positive and negative line
//! elements: `λ_t(P - N) = e_t(P) · e_t(N)⁻¹` where `e_t` is the generating
//! series of elementary symmetric functions of a multiset of monomials.
//! The per-monomial product formula is computed separately, by generalized
//! binomial coefficients, so the two can be compared.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::laurent::LaurentPolynomial;
use super::series::{binomial, TruncatedSeries};
use crate::partition::Partition;

/// Default truncation order of every series operation.
pub const DEFAULT_ORDER: usize = 16;

/// `Σ e_k(lines) t^k` for a multiset of monomials `τ^q` with multiplicities.
fn elementary_series(lines: &[(i64, u64)], order: usize) -> TruncatedSeries {
    let mut e = vec![LaurentPolynomial::zero(); order + 1];
    e[0] = LaurentPolynomial::one();
    let mut filled = 0;
    for &(q, mult) in lines {
        for _ in 0..mult {
            filled = (filled + 1).min(order);
            for k in (1..=filled).rev() {
                let step = e[k - 1].shift_exponents(q);
                e[k] += &step;
            }
        }
    }
    TruncatedSeries::new(order, e)
}

/// Monomials `τ^q` with multiplicities.
type Lines = Vec<(i64, u64)>;

fn split_lines(x: &LaurentPolynomial) -> (Lines, Lines) {
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for (q, c) in x.terms() {
        let m = c.abs().to_u64().expect("coefficient too large for line expansion");
        if c.is_positive() {
            pos.push((q, m));
        } else {
            neg.push((q, m));
        }
    }
    (pos, neg)
}

/// `λ_t(x) = Σ λⁱ(x) tⁱ`, exact modulo `t^{order+1}`.
pub fn lambda_t(x: &LaurentPolynomial, order: usize) -> TruncatedSeries {
    let (pos, neg) = split_lines(x);
    let p = elementary_series(&pos, order);
    if neg.is_empty() {
        return p;
    }
    let n = elementary_series(&neg, order).inverse().expect("constant term is 1");
    p.mul(&n)
}

/// `λⁱ(x)`.
pub fn lambda_i(x: &LaurentPolynomial, i: usize) -> LaurentPolynomial {
    lambda_t(x, i).coefficient(i)
}

/// `ζ(x) = λ_{-t}(x)⁻¹`, whose `tⁿ` coefficient is the class of `Symⁿ`.
pub fn zeta(x: &LaurentPolynomial, order: usize) -> TruncatedSeries {
    lambda_t(x, order).negate_variable().inverse().expect("constant term is 1")
}

/// `λ_t(c·τ^q) = (1 + τ^q t)^c` expanded with generalized binomials.
pub fn lambda_t_monomial(c: &BigInt, q: i64, order: usize) -> TruncatedSeries {
    let coefficients = (0..=order)
        .map(|k| LaurentPolynomial::monomial(binomial(c, k), q * k as i64))
        .collect();
    TruncatedSeries::new(order, coefficients)
}

/// Checks `λ(x) = ∏_n λ(π_n(x))` to the given order.
pub fn product_formula_check(x: &LaurentPolynomial, order: usize) -> bool {
    let product = x
        .terms()
        .fold(TruncatedSeries::one(order), |acc, (q, c)| acc.mul(&lambda_t_monomial(c, q, order)));
    product == lambda_t(x, order)
}

/// `s_λ(x) = det(λ^{λᵗ_i - i + j}(x))`, the dual Jacobi-Trudi determinant.
pub fn schur_op(lambda: &Partition, x: &LaurentPolynomial) -> LaurentPolynomial {
    if lambda.is_empty() {
        return LaurentPolynomial::one();
    }
    let conj = lambda.transpose();
    let k = conj.len();
    let max_index = conj.part(0) + k;
    let lam = lambda_t(x, max_index);
    let entry = |i: usize, j: usize| -> LaurentPolynomial {
        let idx = conj.part(i) as i64 - i as i64 + j as i64;
        if idx < 0 {
            LaurentPolynomial::zero()
        } else {
            lam.coefficient(idx as usize)
        }
    };
    let matrix: Vec<Vec<LaurentPolynomial>> = (0..k).map(|i| (0..k).map(|j| entry(i, j)).collect()).collect();
    determinant(&matrix)
}

/// Division-free determinant over `ℤ[τ, τ⁻¹]` by expansion over column
/// subsets, `O(k 2^k)` ring operations.
pub fn determinant(m: &[Vec<LaurentPolynomial>]) -> LaurentPolynomial {
    let k = m.len();
    if k == 0 {
        return LaurentPolynomial::one();
    }
    // minors[S] = det of the first |S| rows restricted to column set S.
    let mut minors = vec![LaurentPolynomial::zero(); 1 << k];
    minors[0] = LaurentPolynomial::one();
    for mask in 1usize..(1 << k) {
        let row = mask.count_ones() as usize - 1;
        let mut acc = LaurentPolynomial::zero();
        for col in (0..k).filter(|c| mask & (1 << c) != 0) {
            let rest = mask & !(1 << col);
            if m[row][col].is_zero() || minors[rest].is_zero() {
                continue;
            }
            let term = &m[row][col] * &minors[rest];
            // Expansion along row `row`; `col` is the idx-th column of the mask.
            let idx = (mask & ((1 << col) - 1)).count_ones() as usize;
            if (row + idx).is_multiple_of(2) {
                acc += &term;
            } else {
                acc += &(-&term);
            }
        }
        minors[mask] = acc;
    }
    minors[(1 << k) - 1].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(terms.iter().copied())
    }

    #[test]
    fn base_cases() {
        let s = lambda_t(&LaurentPolynomial::one(), 16);
        assert_eq!(s, TruncatedSeries::linear(16, LaurentPolynomial::one()));
        let s = lambda_t(&LaurentPolynomial::constant(-1), 16);
        for n in 0..=16 {
            assert_eq!(s.coefficient(n), LaurentPolynomial::constant(if n % 2 == 0 { 1 } else { -1 }));
        }
        let s = lambda_t(&lp(&[(0, 1), (1, 1)]), 5);
        assert_eq!(s.coefficient(1), lp(&[(0, 1), (1, 1)]));
        assert_eq!(s.coefficient(2), lp(&[(1, 1)]));
        assert!(s.coefficient(3).is_zero());
    }

    #[test]
    fn lambda_i_examples() {
        let x = lp(&[(-1, 2), (3, -1)]);
        assert_eq!(lambda_i(&x, 0), LaurentPolynomial::one());
        assert_eq!(lambda_i(&x, 1), x);
        assert_eq!(lambda_i(&lp(&[(2, 2)]), 2), lp(&[(4, 1)]));
    }

    #[test]
    fn zeta_examples() {
        let z = zeta(&LaurentPolynomial::one(), 10);
        assert!(z.coefficients().iter().all(|c| c.is_one()));
        let z = zeta(&lp(&[(1, -1)]), 10);
        assert_eq!(z, TruncatedSeries::linear(10, lp(&[(1, -1)])));
    }

    #[test]
    fn product_formula_examples() {
        assert!(product_formula_check(&LaurentPolynomial::zero(), 8));
        assert!(product_formula_check(&lp(&[(0, 1), (3, -1)]), 12));
        assert!(product_formula_check(&lp(&[(-2, 3), (0, -2), (1, 1)]), 12));
    }

    #[test]
    fn determinant_small() {
        let m = vec![vec![lp(&[(0, 2)]), lp(&[(0, 3)])], vec![lp(&[(0, 5)]), lp(&[(0, 7)])]];
        assert_eq!(determinant(&m), lp(&[(0, -1)]));
        let m: Vec<Vec<LaurentPolynomial>> = (0..3)
            .map(|i| (0..3).map(|j| lp(&[(0, [[2, 0, 1], [1, 3, 2], [1, 1, 1]][i][j])])).collect())
            .collect();
        // 2(3-2) - 0 + 1(1-3) = 0
        assert!(determinant(&m).is_zero());
        let m: Vec<Vec<LaurentPolynomial>> = (0..3)
            .map(|i| (0..3).map(|j| lp(&[(0, [[1, 2, 3], [0, 1, 4], [5, 6, 0]][i][j])])).collect())
            .collect();
        assert_eq!(determinant(&m), lp(&[(0, 1)]));
    }

    #[test]
    fn schur_op_degenerate_cases() {
        let x = lp(&[(0, 2), (1, -1), (2, 1)]);
        let z = zeta(&x, 6);
        for n in 0..=5 {
            assert_eq!(schur_op(&Partition::row(n), &x), z.coefficient(n));
            assert_eq!(schur_op(&Partition::column(n), &x), lambda_i(&x, n));
        }
    }
}
