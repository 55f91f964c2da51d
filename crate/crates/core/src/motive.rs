//! Split mixed Tate objects, represented through their associated graded.
//!
//! A [`GradedTateObject`] is a finite direct sum `⊕ 𝟙(w)[a]^{m}`. Only the
//! weight-graded form of a motive is modelled: a non-split extension and its
//! associated graded are the same value here. Every invariant computed in
//! this crate (K₀ class, `d⁺`, `d⁻`, Schur-functor vanishing) depends only on
//! that graded form.
//!
//! Degree convention: the generator `𝟙(w)[a]` contributes one dimension in
//! cohomological degree `-a` of the weight-untwisted complex. Only the
//! parity of `a` enters any result.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::k0::LaurentPolynomial;

/// Key `(a, w)`: cohomological shift `a` and weight `w` of `𝟙(w)[a]`.
pub type Generator = (i64, i64);

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradedTateObject {
    multiplicities: BTreeMap<Generator, u64>,
}

/// One JSON entry `{a, w, mult}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorEntry {
    pub a: i64,
    pub w: i64,
    pub mult: u64,
}

impl GradedTateObject {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit `𝟙 = 𝟙(0)[0]`.
    pub fn unit() -> Self {
        Self::generator(0, 0)
    }

    /// `𝟙(w)[a]`.
    pub fn generator(w: i64, a: i64) -> Self {
        Self::generator_with_multiplicity(w, a, 1)
    }

    pub fn generator_with_multiplicity(w: i64, a: i64, mult: u64) -> Self {
        let mut out = Self::zero();
        out.add_generator(a, w, mult);
        out
    }

    pub fn from_entries(entries: impl IntoIterator<Item = GeneratorEntry>) -> Self {
        let mut out = Self::zero();
        for e in entries {
            out.add_generator(e.a, e.w, e.mult);
        }
        out
    }

    pub fn add_generator(&mut self, a: i64, w: i64, mult: u64) {
        if mult > 0 {
            *self.multiplicities.entry((a, w)).or_insert(0) += mult;
        }
    }

    pub fn multiplicity(&self, a: i64, w: i64) -> u64 {
        self.multiplicities.get(&(a, w)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.multiplicities.is_empty()
    }

    /// `((a, w), mult)` in increasing `(a, w)` order.
    pub fn iter(&self) -> impl Iterator<Item = (Generator, u64)> + '_ {
        self.multiplicities.iter().map(|(&k, &m)| (k, m))
    }

    pub fn entries(&self) -> Vec<GeneratorEntry> {
        self.iter().map(|((a, w), mult)| GeneratorEntry { a, w, mult }).collect()
    }

    /// Total number of generators counted with multiplicity.
    pub fn total_dimension(&self) -> u64 {
        self.multiplicities.values().sum()
    }

    pub fn direct_sum(&self, other: &GradedTateObject) -> GradedTateObject {
        let mut out = self.clone();
        for ((a, w), m) in other.iter() {
            out.add_generator(a, w, m);
        }
        out
    }

    /// `X^{⊕k}`.
    pub fn repeat(&self, k: u64) -> GradedTateObject {
        if k == 0 {
            return Self::zero();
        }
        let mut out = self.clone();
        for m in out.multiplicities.values_mut() {
            *m *= k;
        }
        out
    }

    fn map_support(&self, f: impl Fn(Generator) -> Generator) -> GradedTateObject {
        let mut out = Self::zero();
        for (g, m) in self.iter() {
            let (a, w) = f(g);
            out.add_generator(a, w, m);
        }
        out
    }

    /// `X[k]`.
    pub fn shift(&self, k: i64) -> GradedTateObject {
        self.map_support(|(a, w)| (a + k, w))
    }

    /// `X(n) = X ⊗ 𝟙(n)`.
    pub fn twist(&self, n: i64) -> GradedTateObject {
        self.map_support(|(a, w)| (a, w + n))
    }

    /// Künneth convolution of multiplicity maps.
    pub fn tensor(&self, other: &GradedTateObject) -> GradedTateObject {
        let mut out = Self::zero();
        for ((a1, w1), m1) in self.iter() {
            for ((a2, w2), m2) in other.iter() {
                out.add_generator(a1 + a2, w1 + w2, m1 * m2);
            }
        }
        out
    }

    /// `W_{<n}(X)`: generators of weight `< n`.
    pub fn weight_below(&self, n: i64) -> GradedTateObject {
        self.filter(|_, w| w < n)
    }

    /// `W_{>m}(X)`: generators of weight `> m`.
    pub fn weight_above(&self, m: i64) -> GradedTateObject {
        self.filter(|_, w| w > m)
    }

    /// `gr^W_n(X)`.
    pub fn gr(&self, n: i64) -> GradedTateObject {
        self.weight_below(n + 1).weight_above(n - 1)
    }

    /// Weights with a nonzero graded piece, increasing.
    pub fn weights(&self) -> Vec<i64> {
        let mut ws: Vec<i64> = self.multiplicities.keys().map(|&(_, w)| w).collect();
        ws.sort_unstable();
        ws.dedup();
        ws
    }

    fn filter(&self, keep: impl Fn(i64, i64) -> bool) -> GradedTateObject {
        GradedTateObject {
            multiplicities: self.multiplicities.iter().filter(|(&(a, w), _)| keep(a, w)).map(|(&k, &m)| (k, m)).collect(),
        }
    }

    /// Dimensions of the cohomology of `⊕_n gr^W_n(X)(-n)`.
    pub fn gr_bar(&self) -> GradedVectorSpaceDims {
        let mut dims = GradedVectorSpaceDims::default();
        for ((a, _), m) in self.iter() {
            dims.add(-a, m);
        }
        dims
    }

    /// `d⁺(X)`: total multiplicity in even degree.
    pub fn d_plus(&self) -> u64 {
        self.iter().filter(|&((a, _), _)| a.rem_euclid(2) == 0).map(|(_, m)| m).sum()
    }

    /// `d⁻(X)`: total multiplicity in odd degree.
    pub fn d_minus(&self) -> u64 {
        self.iter().filter(|&((a, _), _)| a.rem_euclid(2) == 1).map(|(_, m)| m).sum()
    }

    /// `cl(X) = Σ m(a,w)·(-1)^a·τ^w` in `K₀ ≅ ℤ[τ, τ⁻¹]`.
    pub fn k0_class(&self) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(self.iter().map(|((a, w), m)| {
            let c = BigInt::from(m);
            (w, if a.rem_euclid(2) == 0 { c } else { -c })
        }))
    }
}

/// Dimensions of a bounded complex of finite-dimensional vector spaces, up
/// to isomorphism: cohomological degree to dimension.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedVectorSpaceDims {
    dims: BTreeMap<i64, u64>,
}

impl GradedVectorSpaceDims {
    fn add(&mut self, degree: i64, d: u64) {
        if d == 0 {
            return;
        }
        match self.dims.entry(degree) {
            Entry::Occupied(mut o) => *o.get_mut() += d,
            Entry::Vacant(v) => {
                v.insert(d);
            }
        }
    }

    pub fn get(&self, degree: i64) -> u64 {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.dims.iter().map(|(&k, &v)| (k, v))
    }

    pub fn total(&self) -> u64 {
        self.dims.values().sum()
    }
}

impl FromIterator<(i64, u64)> for GradedVectorSpaceDims {
    fn from_iter<I: IntoIterator<Item = (i64, u64)>>(iter: I) -> Self {
        let mut out = Self::default();
        for (k, v) in iter {
            out.add(k, v);
        }
        out
    }
}

/// Named objects whose classes are fixed by their cell decompositions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preset {
    /// Affine space `𝔸ⁿ`.
    Affine(u32),
    /// Projective space `ℙⁿ`.
    Projective(u32),
    /// Punctured affine space `𝔸ⁿ∖0`, `n ≥ 1`.
    PuncturedAffine(u32),
    /// `𝔾ₘ = 𝔸¹∖0`.
    Gm,
}

impl Preset {
    pub fn from_name(name: &str, n: u32) -> Result<Preset> {
        let p = match name {
            "A" => Preset::Affine(n),
            "P" => Preset::Projective(n),
            "Am0" => Preset::PuncturedAffine(n),
            "Gm" => Preset::Gm,
            other => return Err(Error::UnknownPreset(other.to_string())),
        };
        if let Preset::PuncturedAffine(0) = p {
            return Err(Error::PresetRange("Am0".into(), 1));
        }
        Ok(p)
    }

    pub fn object(self) -> GradedTateObject {
        match self {
            Preset::Affine(_) => GradedTateObject::unit(),
            Preset::Projective(n) => (0..=n as i64).fold(GradedTateObject::zero(), |acc, i| {
                acc.direct_sum(&GradedTateObject::generator(i, 2 * i))
            }),
            Preset::PuncturedAffine(n) => {
                let n = n as i64;
                GradedTateObject::unit().direct_sum(&GradedTateObject::generator(n, 2 * n - 1))
            }
            Preset::Gm => Preset::PuncturedAffine(1).object(),
        }
    }
}

/// Looks up a preset by name (`A`, `P`, `Am0`, `Gm`).
pub fn preset(name: &str, n: u32) -> Result<GradedTateObject> {
    Ok(Preset::from_name(name, n)?.object())
}

impl fmt::Display for GradedTateObject {
    /// Expression-grammar form, e.g. `Q(0)[0] + 2*Q(1)[2]`; the zero object is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, ((a, w), m)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if m != 1 {
                write!(f, "{m}*")?;
            }
            write!(f, "Q({w})[{a}]")?;
        }
        Ok(())
    }
}

impl FromStr for GradedTateObject {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        crate::expr::parse_object(s)
    }
}

impl Serialize for GradedTateObject {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries().serialize(s)
    }
}

impl<'de> Deserialize<'de> for GradedTateObject {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(Self::from_entries(Vec::<GeneratorEntry>::deserialize(d)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(terms.iter().copied())
    }

    fn g(w: i64, a: i64) -> GradedTateObject {
        GradedTateObject::generator(w, a)
    }

    pub(crate) fn arb_object() -> impl Strategy<Value = GradedTateObject> {
        prop::collection::vec((-3i64..4, -3i64..4, 1u64..3), 0..5).prop_map(|v| {
            GradedTateObject::from_entries(v.into_iter().map(|(a, w, mult)| GeneratorEntry { a, w, mult }))
        })
    }

    #[test]
    fn generators_and_basic_ops() {
        assert_eq!(GradedTateObject::unit().multiplicity(0, 0), 1);
        assert_eq!(g(1, 2).multiplicity(2, 1), 1);
        assert_eq!(GradedTateObject::unit().shift(1), g(0, 1));
        assert_eq!(g(0, 2).twist(1), g(1, 2));
        let x = g(3, 1).direct_sum(&g(0, 0));
        assert_eq!(x.direct_sum(&GradedTateObject::zero()), x);
        assert_eq!(g(1, 1).tensor(&g(1, 1)), g(2, 2));
        assert_eq!(x.tensor(&GradedTateObject::unit()), x);
    }

    #[test]
    fn tensor_of_projective_lines() {
        let p1 = preset("P", 1).unwrap();
        let sq = p1.tensor(&p1);
        let expect = GradedTateObject::unit()
            .direct_sum(&GradedTateObject::generator_with_multiplicity(1, 2, 2))
            .direct_sum(&g(2, 4));
        assert_eq!(sq, expect);
        let c = p1.k0_class();
        assert_eq!(sq.k0_class(), &c * &c);
    }

    #[test]
    fn weight_truncations() {
        let x = GradedTateObject::unit().direct_sum(&g(2, 3));
        assert_eq!(x.weight_below(1), GradedTateObject::unit());
        for q in -2..3 {
            for p in -2..3 {
                assert!(g(q, p).weight_above(q).is_zero());
                assert_eq!(g(q, p).weight_below(q + 1), g(q, p));
            }
        }
    }

    #[test]
    fn gr_bar_examples() {
        let unit = GradedTateObject::unit().gr_bar();
        assert_eq!(unit.iter().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(g(5, 3).gr_bar().iter().collect::<Vec<_>>(), vec![(-3, 1)]);
        let p2 = preset("P", 2).unwrap().gr_bar();
        assert_eq!(p2.iter().collect::<Vec<_>>(), vec![(-4, 1), (-2, 1), (0, 1)]);
    }

    #[test]
    fn parity_invariants() {
        let unit = GradedTateObject::unit();
        assert_eq!((unit.d_plus(), unit.d_minus()), (1, 0));
        let x = g(0, 1).direct_sum(&g(2, 2));
        assert_eq!((x.d_plus(), x.d_minus()), (1, 1));
        for n in 0..6 {
            let p = preset("P", n).unwrap();
            assert_eq!((p.d_plus(), p.d_minus()), (n as u64 + 1, 0));
        }
        assert_eq!(g(0, -3).d_minus(), 1);
    }

    #[test]
    fn classes_of_presets() {
        for n in 0..=10i64 {
            let p = preset("P", n as u32).unwrap();
            assert_eq!(p.k0_class(), lp(&(0..=n).map(|i| (i, 1)).collect::<Vec<_>>()));
            assert_eq!(preset("A", n as u32).unwrap().k0_class(), LaurentPolynomial::one());
            if n >= 1 {
                let am0 = preset("Am0", n as u32).unwrap();
                assert_eq!(am0.k0_class(), lp(&[(0, 1), (n, -1)]));
            }
        }
        assert_eq!(g(1, 1).k0_class(), lp(&[(1, -1)]));
        assert_eq!(preset("P", 1).unwrap(), GradedTateObject::unit().direct_sum(&g(1, 2)));
        assert_eq!(preset("Am0", 2).unwrap(), GradedTateObject::unit().direct_sum(&g(2, 3)));
        assert_eq!(preset("Gm", 0).unwrap(), preset("Am0", 1).unwrap());
        assert!(matches!(preset("Q", 1), Err(Error::UnknownPreset(_))));
        assert!(preset("Am0", 0).is_err());
    }

    #[test]
    fn display_and_json() {
        let x = g(0, 1).direct_sum(&GradedTateObject::generator_with_multiplicity(1, 2, 2));
        assert_eq!(x.to_string(), "Q(0)[1] + 2*Q(1)[2]");
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, r#"[{"a":1,"w":0,"mult":1},{"a":2,"w":1,"mult":2}]"#);
        assert_eq!(serde_json::from_str::<GradedTateObject>(&json).unwrap(), x);
        assert_eq!(GradedTateObject::zero().to_string(), "0");
    }

    proptest! {
        #[test]
        fn graded_pieces_partition_support(x in arb_object()) {
            let rebuilt = x.weights().iter().fold(GradedTateObject::zero(), |acc, &n| acc.direct_sum(&x.gr(n)));
            prop_assert_eq!(rebuilt, x);
        }

        #[test]
        fn truncations_commute(x in arb_object(), n in -3i64..4, m in -3i64..4) {
            prop_assert_eq!(x.weight_below(n).weight_above(m), x.weight_above(m).weight_below(n));
        }

        #[test]
        fn shift_is_invertible(x in arb_object(), k in -4i64..5) {
            prop_assert_eq!(x.shift(k).shift(-k), x);
        }

        #[test]
        fn no_zero_divisors(x in arb_object(), y in arb_object()) {
            prop_assert_eq!(x.tensor(&y).is_zero(), x.is_zero() || y.is_zero());
        }

        #[test]
        fn class_is_a_ring_map(x in arb_object(), y in arb_object(), n in -3i64..4) {
            prop_assert_eq!(x.tensor(&y).k0_class(), &x.k0_class() * &y.k0_class());
            prop_assert_eq!(x.direct_sum(&y).k0_class(), &x.k0_class() + &y.k0_class());
            prop_assert_eq!(x.shift(1).k0_class(), -&x.k0_class());
            prop_assert_eq!(x.twist(n).k0_class(), x.k0_class().shift_exponents(n));
        }

        #[test]
        fn augmentation_is_euler_characteristic(x in arb_object()) {
            let euler = BigInt::from(x.d_plus()) - BigInt::from(x.d_minus());
            prop_assert_eq!(x.k0_class().augmentation(), euler);
        }

        #[test]
        fn gr_bar_detects_zero(x in arb_object()) {
            prop_assert_eq!(x.gr_bar().is_empty(), x.is_zero());
            prop_assert_eq!(x.gr_bar().total(), x.d_plus() + x.d_minus());
        }

        #[test]
        fn tensor_is_commutative_and_associative(x in arb_object(), y in arb_object(), z in arb_object()) {
            prop_assert_eq!(x.tensor(&y), y.tensor(&x));
            prop_assert_eq!(x.tensor(&y).tensor(&z), x.tensor(&y.tensor(&z)));
        }
    }
}
