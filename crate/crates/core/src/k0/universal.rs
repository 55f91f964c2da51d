//! Universal λ-ring polynomials, generated by expanding products over
//! auxiliary variables and rewriting the result in elementary symmetric
//! polynomials.
//!
//! - `P_n(e(x); e(y))` is the `tⁿ` coefficient of `∏_{i,j} (1 + x_i y_j t)`
//!   in `n + n` variables.
//! - `P_{m,n}(e(x))` is the `t^m` coefficient of
//!   `∏_{i_1 < ... < i_n} (1 + x_{i_1}⋯x_{i_n} t)` in `m·n` variables.
//!
//! Both are cached after first use.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;

use super::lambda::lambda_t;
use super::laurent::LaurentPolynomial;
use crate::error::{Error, Result};

type Monomial = Vec<u8>;
type MPoly = HashMap<Monomial, i128>;

fn add_into(p: &mut MPoly, m: Monomial, c: i128) {
    if c == 0 {
        return;
    }
    match p.entry(m) {
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if *o.get() == 0 {
                o.remove();
            }
        }
        Entry::Vacant(v) => {
            v.insert(c);
        }
    }
}

fn mul(a: &MPoly, b: &MPoly) -> MPoly {
    let mut out = MPoly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m: Monomial = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
            *out.entry(m).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// `t`-graded pieces of `∏ (1 + f t)` up to `t^degree`.
fn expand_product(factors: &[Monomial], nvars: usize, degree: usize) -> MPoly {
    let mut slices: Vec<MPoly> = vec![MPoly::new(); degree + 1];
    slices[0].insert(vec![0; nvars], 1);
    for f in factors {
        for k in (1..=degree).rev() {
            let (lo, hi) = slices.split_at_mut(k);
            for (m, c) in &lo[k - 1] {
                let shifted: Monomial = m.iter().zip(f).map(|(x, y)| x + y).collect();
                *hi[0].entry(shifted).or_insert(0) += c;
            }
        }
    }
    let mut top = slices.pop().unwrap_or_default();
    top.retain(|_, c| *c != 0);
    top
}

/// `e_k` in the variables `block`, as an `nvars`-variable polynomial.
fn elementary(k: usize, block: std::ops::Range<usize>, nvars: usize) -> MPoly {
    let vars: Vec<usize> = block.collect();
    let mut out = MPoly::new();
    for subset in subsets(&vars, k) {
        let mut m = vec![0u8; nvars];
        for v in subset {
            m[v] = 1;
        }
        out.insert(m, 1);
    }
    out
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if items.len() < k {
        return vec![];
    }
    let mut out = subsets(&items[1..], k);
    for mut s in subsets(&items[1..], k - 1) {
        s.insert(0, items[0]);
        out.push(s);
    }
    out
}

/// Rewrites `p`, symmetric in the variables of `block`, as
/// `Σ e^δ · C_δ` where `δ_j` is the exponent of `e_{j+1}` and each `C_δ`
/// involves only variables outside the block.
fn to_elementary(mut p: MPoly, block: std::ops::Range<usize>, nvars: usize) -> Vec<(Vec<u32>, MPoly)> {
    let width = block.len();
    let e: Vec<MPoly> = (0..=width).map(|k| elementary(k, block.clone(), nvars)).collect();
    let mut out = Vec::new();
    while !p.is_empty() {
        let lead: Vec<u8> = p.keys().map(|m| m[block.clone()].to_vec()).max().expect("nonempty");
        assert!(lead.windows(2).all(|w| w[0] >= w[1]), "polynomial is not symmetric in the block");
        let mut coeff = MPoly::new();
        for (m, c) in &p {
            if m[block.clone()] == lead[..] {
                let mut rest = m.clone();
                rest[block.clone()].iter_mut().for_each(|x| *x = 0);
                coeff.insert(rest, *c);
            }
        }
        let delta: Vec<u32> = (0..width)
            .map(|j| lead[j] as u32 - lead.get(j + 1).copied().unwrap_or(0) as u32)
            .collect();
        let mut product = coeff.clone();
        for (j, &d) in delta.iter().enumerate() {
            for _ in 0..d {
                product = mul(&product, &e[j + 1]);
            }
        }
        for (m, c) in product {
            add_into(&mut p, m, -c);
        }
        out.push((delta, coeff));
    }
    out
}

/// Terms `c · ∏ e_j(x)^{δx_j} · ∏ e_j(y)^{δy_j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalPolynomial {
    pub terms: Vec<(Vec<u32>, Vec<u32>, i128)>,
}

impl UniversalPolynomial {
    /// Substitutes `e_j(x) ↦ ex[j-1]`, `e_j(y) ↦ ey[j-1]`.
    pub fn evaluate(&self, ex: &[LaurentPolynomial], ey: &[LaurentPolynomial]) -> LaurentPolynomial {
        let mut total = LaurentPolynomial::zero();
        for (dx, dy, c) in &self.terms {
            let mut term = LaurentPolynomial::constant(BigInt::from(*c));
            for (j, &d) in dx.iter().enumerate() {
                term = &term * &ex[j].pow(d);
            }
            for (j, &d) in dy.iter().enumerate() {
                term = &term * &ey[j].pow(d);
            }
            total += &term;
        }
        total
    }
}

fn product_cache() -> &'static Mutex<BTreeMap<usize, UniversalPolynomial>> {
    static CACHE: OnceLock<Mutex<BTreeMap<usize, UniversalPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn composition_cache() -> &'static Mutex<BTreeMap<(usize, usize), UniversalPolynomial>> {
    static CACHE: OnceLock<Mutex<BTreeMap<(usize, usize), UniversalPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `P_n` with `λⁿ(xy) = P_n(λ¹x,…,λⁿx; λ¹y,…,λⁿy)`.
pub fn product_polynomial(n: usize) -> UniversalPolynomial {
    if let Some(hit) = product_cache().lock().expect("cache").get(&n) {
        return hit.clone();
    }
    let nvars = 2 * n;
    let mut factors = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut m = vec![0u8; nvars];
            m[i] = 1;
            m[n + j] = 1;
            factors.push(m);
        }
    }
    let p = expand_product(&factors, nvars, n);
    let mut terms = Vec::new();
    for (dx, cy) in to_elementary(p, 0..n, nvars) {
        for (dy, c) in to_elementary(cy, n..nvars, nvars) {
            let c = *c.get(&vec![0u8; nvars]).expect("constant after full reduction");
            terms.push((dx.clone(), dy, c));
        }
    }
    terms.sort();
    let out = UniversalPolynomial { terms };
    product_cache().lock().expect("cache").insert(n, out.clone());
    out
}

/// `P_{m,n}` with `λᵐ(λⁿx) = P_{m,n}(λ¹x,…,λ^{mn}x)`.
pub fn composition_polynomial(m: usize, n: usize) -> UniversalPolynomial {
    if let Some(hit) = composition_cache().lock().expect("cache").get(&(m, n)) {
        return hit.clone();
    }
    let nvars = m * n;
    let vars: Vec<usize> = (0..nvars).collect();
    let factors: Vec<Monomial> = subsets(&vars, n)
        .into_iter()
        .map(|s| {
            let mut mono = vec![0u8; nvars];
            for v in s {
                mono[v] = 1;
            }
            mono
        })
        .collect();
    let p = expand_product(&factors, nvars, m);
    let mut terms: Vec<_> = to_elementary(p, 0..nvars, nvars)
        .into_iter()
        .map(|(d, c)| (d, Vec::new(), *c.get(&vec![0u8; nvars]).expect("constant after full reduction")))
        .collect();
    terms.sort();
    let out = UniversalPolynomial { terms };
    composition_cache().lock().expect("cache").insert((m, n), out.clone());
    out
}

/// Largest `n·m` accepted by [`verify_lambda_ring`].
pub const MAX_VERIFY_DEGREE: usize = 6;

/// Checks `λⁿ(xy) = P_n(λ•x; λ•y)` and `λᵐ(λⁿx) = P_{m,n}(λ•x)`.
pub fn verify_lambda_ring(x: &LaurentPolynomial, y: &LaurentPolynomial, n: usize, m: usize) -> Result<bool> {
    if n == 0 || m == 0 || n * m > MAX_VERIFY_DEGREE {
        return Err(Error::OutOfRange(format!("need n, m >= 1 and n*m <= {MAX_VERIFY_DEGREE}, got n={n}, m={m}")));
    }
    let top = n * m;
    let lx = lambda_t(x, top);
    let ly = lambda_t(y, n);
    let ex: Vec<_> = (1..=top).map(|k| lx.coefficient(k)).collect();
    let ey: Vec<_> = (1..=n).map(|k| ly.coefficient(k)).collect();

    let product_lhs = lambda_t(&(x * y), n).coefficient(n);
    let product_rhs = product_polynomial(n).evaluate(&ex[..n], &ey);

    let inner = lx.coefficient(n);
    let composition_lhs = lambda_t(&inner, m).coefficient(m);
    let composition_rhs = composition_polynomial(m, n).evaluate(&ex, &[]);

    Ok(product_lhs == product_rhs && composition_lhs == composition_rhs)
}
