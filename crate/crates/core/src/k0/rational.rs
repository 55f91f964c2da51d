use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::laurent::LaurentPolynomial;
use super::series::{render_t_polynomial, TruncatedSeries};
use crate::motive::GradedTateObject;

/// `u / v` with `u, v ∈ ℤ[τ,τ⁻¹][t]` and `v(0) = 1`, kept in product form
/// `∏ (1 - τ^w t)^{m}` alongside the expanded polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    numerator_factors: BTreeMap<i64, u64>,
    denominator_factors: BTreeMap<i64, u64>,
}

impl RationalSeries {
    pub fn from_factors(numerator: BTreeMap<i64, u64>, denominator: BTreeMap<i64, u64>) -> Self {
        let clean = |m: BTreeMap<i64, u64>| m.into_iter().filter(|&(_, k)| k > 0).collect();
        RationalSeries { numerator_factors: clean(numerator), denominator_factors: clean(denominator) }
    }

    /// Weight `w` to exponent `m` of each factor `(1 - τ^w t)^m` in `u`.
    pub fn numerator_factors(&self) -> &BTreeMap<i64, u64> {
        &self.numerator_factors
    }

    pub fn denominator_factors(&self) -> &BTreeMap<i64, u64> {
        &self.denominator_factors
    }

    /// Expanded coefficients of `u` in `t`.
    pub fn numerator(&self) -> Vec<LaurentPolynomial> {
        expand_factors(&self.numerator_factors)
    }

    /// Expanded coefficients of `v` in `t`.
    pub fn denominator(&self) -> Vec<LaurentPolynomial> {
        expand_factors(&self.denominator_factors)
    }

    /// `u · v⁻¹` modulo `t^{order+1}`.
    pub fn expand(&self, order: usize) -> TruncatedSeries {
        let u = TruncatedSeries::new(order, self.numerator());
        let v = TruncatedSeries::new(order, self.denominator());
        u.mul(&v.inverse().expect("v(0) = 1 by construction"))
    }

    /// Product of two rational series, factorwise.
    pub fn mul(&self, other: &RationalSeries) -> RationalSeries {
        let merge = |a: &BTreeMap<i64, u64>, b: &BTreeMap<i64, u64>| {
            let mut out = a.clone();
            for (&w, &m) in b {
                *out.entry(w).or_insert(0) += m;
            }
            out
        };
        RationalSeries {
            numerator_factors: merge(&self.numerator_factors, &other.numerator_factors),
            denominator_factors: merge(&self.denominator_factors, &other.denominator_factors),
        }
    }

    /// Cancels factors `(1 - τ^w t)` common to `u` and `v`.
    pub fn reduced(&self) -> RationalSeries {
        let mut num = self.numerator_factors.clone();
        let mut den = self.denominator_factors.clone();
        for (w, m) in num.iter_mut() {
            if let Some(d) = den.get_mut(w) {
                let common = (*m).min(*d);
                *m -= common;
                *d -= common;
            }
        }
        RationalSeries::from_factors(num, den)
    }
}

fn expand_factors(factors: &BTreeMap<i64, u64>) -> Vec<LaurentPolynomial> {
    let mut poly = vec![LaurentPolynomial::one()];
    for (&w, &m) in factors {
        let step = LaurentPolynomial::monomial(-1, w);
        for _ in 0..m {
            let mut next = vec![LaurentPolynomial::zero(); poly.len() + 1];
            for (k, c) in poly.iter().enumerate() {
                next[k] += c;
                next[k + 1] += &(c * &step);
            }
            poly = next;
        }
    }
    poly
}

/// `ζ_X(t)` as `u/v`: odd generators `𝟙(w)[a]` contribute `(1 - τ^w t)`
/// to `u`, even ones to `v`, each to the power of its multiplicity.
pub fn zeta_rational(x: &GradedTateObject) -> RationalSeries {
    let mut num = BTreeMap::new();
    let mut den = BTreeMap::new();
    for ((a, w), m) in x.iter() {
        let target = if a.rem_euclid(2) == 1 { &mut num } else { &mut den };
        *target.entry(w).or_insert(0) += m;
    }
    RationalSeries::from_factors(num, den)
}

#[derive(Serialize)]
struct FactorJson {
    w: i64,
    mult: u64,
}

impl Serialize for RationalSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let facs = |m: &BTreeMap<i64, u64>| m.iter().map(|(&w, &mult)| FactorJson { w, mult }).collect::<Vec<_>>();
        let mut st = s.serialize_struct("RationalSeries", 4)?;
        st.serialize_field("numerator", &self.numerator())?;
        st.serialize_field("denominator", &self.denominator())?;
        st.serialize_field("numerator_factors", &facs(&self.numerator_factors))?;
        st.serialize_field("denominator_factors", &facs(&self.denominator_factors))?;
        st.end()
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", render_t_polynomial(&self.numerator()), render_t_polynomial(&self.denominator()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::k0::lambda::zeta;
    use crate::motive::preset;

    fn lp(terms: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(terms.iter().copied())
    }

    #[test]
    fn unit_object() {
        let r = zeta_rational(&GradedTateObject::unit());
        assert_eq!(r.numerator(), vec![LaurentPolynomial::one()]);
        assert_eq!(r.denominator(), vec![LaurentPolynomial::one(), lp(&[(0, -1)])]);
    }

    #[test]
    fn gm_and_p1() {
        let gm = zeta_rational(&preset("Gm", 0).unwrap());
        assert_eq!(render_t_polynomial(&gm.numerator()), "1 - tau*t");
        assert_eq!(render_t_polynomial(&gm.denominator()), "1 - t");
        let x = preset("Gm", 0).unwrap();
        assert_eq!(gm.expand(20), zeta(&x.k0_class(), 20));

        let p1 = zeta_rational(&preset("P", 1).unwrap());
        assert_eq!(p1.numerator(), vec![LaurentPolynomial::one()]);
        assert_eq!(p1.denominator(), vec![LaurentPolynomial::one(), lp(&[(0, -1), (1, -1)]), lp(&[(1, 1)])]);
        assert_eq!(p1.expand(20), zeta(&preset("P", 1).unwrap().k0_class(), 20));
    }

    #[test]
    fn reduction_cancels_common_factors() {
        let x = GradedTateObject::unit().direct_sum(&GradedTateObject::generator(0, 1));
        let r = zeta_rational(&x);
        assert_eq!(r.denominator()[0], LaurentPolynomial::one());
        let red = r.reduced();
        assert_eq!(red.numerator(), vec![LaurentPolynomial::one()]);
        assert_eq!(red.denominator(), vec![LaurentPolynomial::one()]);
        assert_eq!(red.expand(8), r.expand(8));
    }

    #[test]
    fn multiplicative_over_sums() {
        let x = preset("P", 2).unwrap();
        let y = GradedTateObject::generator(-1, 3).direct_sum(&GradedTateObject::generator(2, 1));
        assert_eq!(zeta_rational(&x.direct_sum(&y)), zeta_rational(&x).mul(&zeta_rational(&y)));
    }
}
