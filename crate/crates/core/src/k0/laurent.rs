use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An element of `ℤ[τ, τ⁻¹]` with arbitrary-precision coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// `τ`, the class of `𝟙(1)`.
    pub fn tau() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c·τ^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let mut out = Self::zero();
        out.add_term(e, c.into());
        out
    }

    /// Builds from `(exponent, coefficient)` pairs, combining repeats.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c.into());
        }
        out
    }

    pub fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coefficient(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The weight-`n` component `π_n(x)`.
    pub fn component(&self, n: i64) -> LaurentPolynomial {
        Self::monomial(self.coefficient(n), n)
    }

    /// The decomposition `x = Σ_n π_n(x)` into monomials.
    pub fn components(&self) -> Vec<LaurentPolynomial> {
        self.terms().map(|(e, c)| Self::monomial(c.clone(), e)).collect()
    }

    /// Evaluation at `τ = 1`.
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn scale(&self, k: &BigInt) -> LaurentPolynomial {
        if k.is_zero() {
            return Self::zero();
        }
        LaurentPolynomial { terms: self.terms.iter().map(|(&e, c)| (e, c * k)).collect() }
    }

    /// Multiplies by `τ^k`.
    pub fn shift_exponents(&self, k: i64) -> LaurentPolynomial {
        LaurentPolynomial { terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> LaurentPolynomial {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Lowest exponent's coefficient is negative.
    pub(crate) fn leads_negative(&self) -> bool {
        self.terms.values().next().is_some_and(|c| c.is_negative())
    }
}

/// Augmentation `ε`: evaluation at `τ = 1`.
pub fn augmentation(x: &LaurentPolynomial) -> BigInt {
    x.augmentation()
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: &LaurentPolynomial) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c.clone());
        }
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $m(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for LaurentPolynomial {
    /// Renders as `1 + tau + 2*tau^3 - tau^-1`, increasing exponents.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let var = match e {
                0 => None,
                1 => Some("tau".to_string()),
                e => Some(format!("tau^{e}")),
            };
            match var {
                None => write!(f, "{mag}")?,
                Some(v) if mag.is_one() => f.write_str(&v)?,
                Some(v) => write!(f, "{mag}*{v}")?,
            }
        }
        Ok(())
    }
}

pub(crate) fn bigint_to_json(c: &BigInt) -> serde_json::Value {
    match c.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::String(c.to_string()),
    }
}

pub(crate) fn bigint_from_json(v: &serde_json::Value) -> Option<BigInt> {
    match v {
        serde_json::Value::Number(n) => n.as_i64().map(BigInt::from),
        serde_json::Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

impl Serialize for LaurentPolynomial {
    /// JSON form: exponent (as string key) to coefficient.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let map: serde_json::Map<String, serde_json::Value> =
            self.terms().map(|(e, c)| (e.to_string(), bigint_to_json(c))).collect();
        map.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let map = serde_json::Map::<String, serde_json::Value>::deserialize(d)?;
        let mut out = LaurentPolynomial::zero();
        for (k, v) in map {
            let e: i64 = k.parse().map_err(D::Error::custom)?;
            let c = bigint_from_json(&v).ok_or_else(|| D::Error::custom("bad coefficient"))?;
            out.add_term(e, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let t = LaurentPolynomial::tau();
        let one = LaurentPolynomial::one();
        let p = &one + &t;
        assert_eq!(&p * &p, LaurentPolynomial::from_terms([(0, 1), (1, 2), (2, 1)]));
        assert!((&p - &p).is_zero());
        let inv = LaurentPolynomial::monomial(1, -1);
        assert_eq!(&t * &inv, one);
    }

    #[test]
    fn augmentation_examples() {
        let x = LaurentPolynomial::from_terms([(0, 1), (1, 1), (2, 1)]);
        assert_eq!(augmentation(&x), BigInt::from(3));
        let y = LaurentPolynomial::from_terms([(0, 1), (5, -1)]);
        assert_eq!(augmentation(&y), BigInt::from(0));
        assert_eq!(augmentation(&LaurentPolynomial::tau().pow(7)), BigInt::from(1));
    }

    #[test]
    fn display() {
        let x = LaurentPolynomial::from_terms([(0, 1), (1, 1), (2, 1), (3, 1)]);
        assert_eq!(x.to_string(), "1 + tau + tau^2 + tau^3");
        let y = LaurentPolynomial::from_terms([(-2, 2), (0, -1), (1, -3)]);
        assert_eq!(y.to_string(), "2*tau^-2 - 1 - 3*tau");
        assert_eq!(LaurentPolynomial::monomial(-1, 1).to_string(), "-tau");
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn json() {
        let y = LaurentPolynomial::from_terms([(-2, 2), (0, -1)]);
        let s = serde_json::to_string(&y).unwrap();
        assert_eq!(s, r#"{"-2":2,"0":-1}"#);
        assert_eq!(serde_json::from_str::<LaurentPolynomial>(&s).unwrap(), y);
    }
}
