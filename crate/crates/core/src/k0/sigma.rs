//! The representation-ring-valued series `λ_Σ(X) = Σ_μ cl(S_μ X) ⊗ [V_μ] t^{|μ|}`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::laurent::LaurentPolynomial;
use crate::motive::GradedTateObject;
use crate::partition::{partitions_of, Partition};
use crate::rep_ring::induce;
use crate::schur::schur_apply;

/// Coefficient of `tⁿ`: classes in `K₀` indexed by partitions of `n`.
pub type RepCoefficient = BTreeMap<Partition, LaurentPolynomial>;

/// A series in `t` over `K₀ ⊗ R`, exact modulo `t^{order+1}`. The `tⁿ`
/// coefficient is supported on partitions of `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepSeries {
    order: usize,
    coefficients: Vec<RepCoefficient>,
}

impl RepSeries {
    pub fn new(order: usize, mut coefficients: Vec<RepCoefficient>) -> Self {
        coefficients.resize(order + 1, RepCoefficient::new());
        for c in coefficients.iter_mut() {
            c.retain(|_, v| !v.is_zero());
        }
        RepSeries { order, coefficients }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coefficients(&self) -> &[RepCoefficient] {
        &self.coefficients
    }

    pub fn coefficient(&self, n: usize, mu: &Partition) -> LaurentPolynomial {
        self.coefficients.get(n).and_then(|c| c.get(mu)).cloned().unwrap_or_default()
    }

    /// Product using the induction product on the `R` factor.
    pub fn mul(&self, other: &RepSeries) -> RepSeries {
        let order = self.order.min(other.order);
        let mut out = vec![RepCoefficient::new(); order + 1];
        for p in 0..=order {
            for q in 0..=(order - p) {
                for (mu, a) in &self.coefficients[p] {
                    for (eta, b) in &other.coefficients[q] {
                        let ab = a * b;
                        for (lambda, c) in induce(mu, eta) {
                            let term = ab.scale(&BigInt::from(c));
                            *out[p + q].entry(lambda).or_default() += &term;
                        }
                    }
                }
            }
        }
        RepSeries::new(order, out)
    }

    /// The class recovered from the `t¹` coefficient at `[1]`.
    pub fn class(&self) -> LaurentPolynomial {
        self.coefficient(1, &Partition::row(1))
    }
}

/// `λ_Σ(X)` to the given order.
pub fn lambda_sigma(x: &GradedTateObject, order: usize) -> RepSeries {
    let coefficients = (0..=order)
        .map(|n| {
            partitions_of(n)
                .into_iter()
                .map(|mu| {
                    let class = schur_apply(&mu, x).k0_class();
                    (mu, class)
                })
                .collect()
        })
        .collect();
    RepSeries::new(order, coefficients)
}

#[derive(Serialize, Deserialize)]
struct RepSeriesJson {
    order: usize,
    coefficients: Vec<BTreeMap<String, LaurentPolynomial>>,
}

impl Serialize for RepSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RepSeriesJson {
            order: self.order,
            coefficients: self
                .coefficients
                .iter()
                .map(|c| c.iter().map(|(k, v)| (k.to_string(), v.clone())).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RepSeries {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RepSeriesJson::deserialize(d)?;
        let mut coefficients = Vec::new();
        for c in raw.coefficients {
            let mut map = RepCoefficient::new();
            for (k, v) in c {
                map.insert(k.parse().map_err(serde::de::Error::custom)?, v);
            }
            coefficients.push(map);
        }
        Ok(RepSeries::new(raw.order, coefficients))
    }
}
