use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::laurent::LaurentPolynomial;
use crate::error::{Error, Result};

/// A power series in `t` over `ℤ[τ, τ⁻¹]`, exact modulo `t^{order+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncatedSeries {
    order: usize,
    coefficients: Vec<LaurentPolynomial>,
}

impl TruncatedSeries {
    /// Pads or truncates `coefficients` to `order + 1` entries.
    pub fn new(order: usize, mut coefficients: Vec<LaurentPolynomial>) -> Self {
        coefficients.resize(order + 1, LaurentPolynomial::zero());
        TruncatedSeries { order, coefficients }
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, vec![LaurentPolynomial::one()])
    }

    /// `1 + c·t`.
    pub fn linear(order: usize, c: LaurentPolynomial) -> Self {
        Self::new(order, vec![LaurentPolynomial::one(), c])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coefficients(&self) -> &[LaurentPolynomial] {
        &self.coefficients
    }

    /// Coefficient of `t^n`; zero past the order.
    pub fn coefficient(&self, n: usize) -> LaurentPolynomial {
        self.coefficients.get(n).cloned().unwrap_or_default()
    }

    pub fn truncate(&self, order: usize) -> TruncatedSeries {
        Self::new(order, self.coefficients.iter().take(order + 1).cloned().collect())
    }

    /// Product, exact to the smaller of the two orders.
    pub fn mul(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order.min(rhs.order);
        let mut out = vec![LaurentPolynomial::zero(); order + 1];
        for (i, a) in self.coefficients.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coefficients.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        TruncatedSeries { order, coefficients: out }
    }

    /// Multiplicative inverse; the constant term must be exactly 1.
    pub fn inverse(&self) -> Result<TruncatedSeries> {
        if !self.coefficients[0].is_one() {
            return Err(Error::NotInvertible);
        }
        let mut inv = vec![LaurentPolynomial::zero(); self.order + 1];
        inv[0] = LaurentPolynomial::one();
        for n in 1..=self.order {
            let mut acc = LaurentPolynomial::zero();
            for k in 1..=n {
                let a = &self.coefficients[k];
                if !a.is_zero() && !inv[n - k].is_zero() {
                    acc += &(a * &inv[n - k]);
                }
            }
            inv[n] = -&acc;
        }
        Ok(TruncatedSeries { order: self.order, coefficients: inv })
    }

    /// The substitution `t ↦ -t`.
    pub fn negate_variable(&self) -> TruncatedSeries {
        let coefficients = self
            .coefficients
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        TruncatedSeries { order: self.order, coefficients }
    }

    pub fn pow(&self, k: u64) -> TruncatedSeries {
        let mut out = Self::one(self.order);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = render_t_polynomial(&self.coefficients);
        if body == "0" {
            write!(f, "O(t^{})", self.order + 1)
        } else {
            write!(f, "{body} + O(t^{})", self.order + 1)
        }
    }
}

/// Renders `Σ c_k t^k` as `1 - tau*t + (1 + tau)*t^2`.
pub fn render_t_polynomial(coefficients: &[LaurentPolynomial]) -> String {
    let mut out = String::new();
    for (k, c) in coefficients.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let first = out.is_empty();
        let negative = c.leads_negative();
        let mag = if negative { -c } else { c.clone() };
        if first {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let tvar = match k {
            0 => String::new(),
            1 => "t".to_string(),
            k => format!("t^{k}"),
        };
        let coeff = if mag.num_terms() > 1 { format!("({mag})") } else { mag.to_string() };
        if tvar.is_empty() {
            out.push_str(&coeff);
        } else if mag.is_one() {
            out.push_str(&tvar);
        } else {
            out.push_str(&coeff);
            out.push('*');
            out.push_str(&tvar);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Generalized binomial coefficient `C(c, k)` for any integer `c`.
pub(crate) fn binomial(c: &BigInt, k: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= c - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    num / den
}
